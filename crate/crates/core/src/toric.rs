//! Combinatorial model of a smooth projective toric variety: the fan, its
//! Gale-dual grading of the Cox ring, the irrelevant ideal and the nef
//! semigroup `K`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face::{Face, MAX_VARS};
use crate::lattice::{self, IntMatrix};
use crate::monomial::Monomial;
use crate::poly::MultiPoly;

/// An element of `Pic(X) = Z^r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeVector(pub Vec<i64>);

impl DegreeVector {
    pub fn zero(r: usize) -> Self {
        DegreeVector(vec![0; r])
    }

    pub fn unit(r: usize, j: usize) -> Self {
        let mut v = vec![0; r];
        v[j] = 1;
        DegreeVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl From<Vec<i64>> for DegreeVector {
    fn from(v: Vec<i64>) -> Self {
        DegreeVector(v)
    }
}

impl Add for &DegreeVector {
    type Output = DegreeVector;
    fn add(self, o: &DegreeVector) -> DegreeVector {
        DegreeVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DegreeVector {
    type Output = DegreeVector;
    fn sub(self, o: &DegreeVector) -> DegreeVector {
        DegreeVector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &DegreeVector {
    type Output = DegreeVector;
    fn neg(self) -> DegreeVector {
        DegreeVector(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&DegreeVector> for i64 {
    type Output = DegreeVector;
    fn mul(self, v: &DegreeVector) -> DegreeVector {
        DegreeVector(v.0.iter().map(|a| self * a).collect())
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        let items: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", items.join(","))
    }
}

/// A complete simplicial fan given by its rays and maximal cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Face>,
}

impl Fan {
    pub fn new(rays: Vec<Vec<i64>>, max_cones: Vec<Face>) -> Self {
        Fan { rays, max_cones }
    }

    pub fn n(&self) -> usize {
        self.rays.len()
    }

    pub fn d(&self) -> usize {
        self.rays.first().map_or(0, |r| r.len())
    }

    fn ray_columns(&self, cone: &[usize]) -> IntMatrix {
        let d = self.d();
        (0..d).map(|row| cone.iter().map(|&i| self.rays[i][row]).collect()).collect()
    }

    /// Check everything that `build_variety` promises about its input.
    pub fn validate(&self, assume_complete: bool) -> Result<()> {
        let n = self.n();
        let d = self.d();
        if n == 0 || d == 0 {
            return Err(Error::InvalidFan("need at least one ray in dimension >= 1".into()));
        }
        if n > MAX_VARS {
            return Err(Error::InvalidFan(format!("at most {MAX_VARS} rays supported")));
        }
        if n <= d {
            return Err(Error::RaysNotSpanning);
        }
        for (i, ray) in self.rays.iter().enumerate() {
            if ray.len() != d {
                return Err(Error::InvalidFan(format!("ray {} has wrong length", i + 1)));
            }
            if lattice::gcd_slice(ray) != 1 {
                return Err(Error::NonPrimitiveRay(i + 1));
            }
        }
        if lattice::rank(&lattice::transpose(&self.rays)) != d {
            return Err(Error::RaysNotSpanning);
        }
        if self.max_cones.is_empty() {
            return Err(Error::InvalidFan("no maximal cones".into()));
        }
        for cone in &self.max_cones {
            if !cone.is_subset_of(Face::full(n)) {
                return Err(Error::InvalidFan(format!("cone {cone} uses an unknown ray")));
            }
            if cone.len() != d {
                return Err(Error::InvalidFan(format!("cone {cone} is not full-dimensional")));
            }
            let det = lattice::det(&self.ray_columns(&cone.to_vec()));
            if det.abs() != 1 {
                return Err(Error::NotSmooth { facet: cone.to_one_based(), det });
            }
        }
        if !assume_complete {
            self.check_ridge_pairing()?;
        }
        Ok(())
    }

    /// Every ridge lies in exactly two maximal cones whose opposite rays sit
    /// on opposite sides of the ridge hyperplane.
    fn check_ridge_pairing(&self) -> Result<()> {
        let mut ridges: HashMap<Face, Vec<(Face, usize)>> = HashMap::new();
        for &cone in &self.max_cones {
            for i in cone.indices() {
                let ridge = Face(cone.0 & !(1u64 << i));
                ridges.entry(ridge).or_default().push((cone, i));
            }
        }
        for (ridge, owners) in &ridges {
            if owners.len() != 2 {
                return Err(Error::NotComplete(format!("ridge {ridge} lies in {} maximal cones", owners.len())));
            }
            let side = |apex: usize| {
                let mut cols = ridge.to_vec();
                cols.push(apex);
                lattice::det(&self.ray_columns(&cols)).signum()
            };
            if side(owners[0].1) * side(owners[1].1) != -1 {
                return Err(Error::NotComplete(format!("cones {} and {} lie on the same side of ridge {ridge}", owners[0].0, owners[1].0)));
            }
        }
        Ok(())
    }
}

/// A unimodular change of coordinates on `Z^r`, `old = matrix * new`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnimodularMap {
    pub matrix: IntMatrix,
    pub inverse: IntMatrix,
}

impl UnimodularMap {
    pub fn identity(r: usize) -> Self {
        UnimodularMap { matrix: lattice::identity(r), inverse: lattice::identity(r) }
    }

    pub fn new(matrix: IntMatrix) -> Result<Self> {
        let inverse =
            lattice::unimodular_inverse(&matrix).ok_or_else(|| Error::InvalidGrading("coordinate change is not unimodular".into()))?;
        Ok(UnimodularMap { matrix, inverse })
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == lattice::identity(self.matrix.len())
    }

    /// New coordinates to old.
    pub fn apply(&self, v: &DegreeVector) -> DegreeVector {
        DegreeVector(lattice::mat_vec(&self.matrix, &v.0))
    }

    /// Old coordinates to new.
    pub fn apply_inverse(&self, v: &DegreeVector) -> DegreeVector {
        DegreeVector(lattice::mat_vec(&self.inverse, &v.0))
    }
}

/// The nef semigroup `K`, the lattice points of the intersection over
/// maximal cones `sigma` of `pos{a_i : i not in sigma}`.
///
/// Every such cone is unimodular, so `K` is cut out by the rows of the
/// inverses of the matrices `[a_i : i not in sigma]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NefCone {
    r: usize,
    inequalities: Vec<Vec<i64>>,
    facets: Vec<Vec<i64>>,
    rays: Vec<Vec<i64>>,
    /// `(G, G^{-1})` with the rays of `K` as columns of `G`, when they form a lattice basis.
    basis: Option<(IntMatrix, IntMatrix)>,
}

impl NefCone {
    fn from_inequalities(r: usize, raw: Vec<Vec<i64>>) -> NefCone {
        let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
        for h in raw {
            let g = lattice::gcd_slice(&h);
            if g != 0 {
                set.insert(h.iter().map(|x| x / g).collect());
            }
        }
        let inequalities: Vec<Vec<i64>> = set.into_iter().collect();
        let rays = extreme_rays(r, &inequalities);
        let facets: Vec<Vec<i64>> = inequalities
            .iter()
            .filter(|h| {
                let tight: Vec<Vec<i64>> = rays.iter().filter(|ray| dot(h, ray) == 0).cloned().collect();
                r == 1 || lattice::rank(&tight) == r - 1
            })
            .cloned()
            .collect();
        let basis = if rays.len() == r {
            let g = lattice::transpose(&rays);
            lattice::unimodular_inverse(&g).map(|inv| (g, inv))
        } else {
            None
        };
        NefCone { r, inequalities, facets, rays, basis }
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.inequalities.iter().all(|h| dot(h, v) >= 0)
    }

    pub fn contains_interior(&self, v: &[i64]) -> bool {
        self.facets.iter().all(|h| dot(h, v) > 0)
    }

    /// Primitive extreme rays, sorted in decreasing lexicographic order.
    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    /// Inward normals of the facets of `K`.
    pub fn facet_normals(&self) -> &[Vec<i64>] {
        &self.facets
    }

    pub fn is_pointed(&self) -> bool {
        lattice::rank(&self.inequalities) == self.r
    }

    pub fn is_full_dimensional(&self) -> bool {
        !self.rays.is_empty() && lattice::rank(&self.rays) == self.r
    }

    /// True when the rays of `K` form a lattice basis, so `K` is a copy of `N^r`.
    pub fn is_simplicial_unimodular(&self) -> bool {
        self.basis.is_some()
    }

    /// Coordinates with respect to the ray basis (coordinate mode only).
    pub fn coordinates(&self, v: &[i64]) -> Option<Vec<i64>> {
        self.basis.as_ref().map(|(_, inv)| lattice::mat_vec(inv, v))
    }

    pub fn from_coordinates(&self, lambda: &[i64]) -> Option<Vec<i64>> {
        self.basis.as_ref().map(|(g, _)| lattice::mat_vec(g, lambda))
    }

    /// The functional used to order lattice points deterministically: the sum
    /// of facet normals, which is strictly positive on `K \ {0}`.
    pub fn functional(&self, v: &[i64]) -> i64 {
        self.facets.iter().map(|h| dot(h, v)).sum()
    }

    /// A primitive vector in the interior of `K`.
    pub fn interior_vector(&self) -> Result<Vec<i64>> {
        if !self.is_pointed() {
            return Err(Error::NotPointed);
        }
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        let mut v = vec![0i64; self.r];
        for ray in &self.rays {
            for (x, y) in v.iter_mut().zip(ray) {
                *x += y;
            }
        }
        let g = lattice::gcd_slice(&v);
        Ok(v.iter().map(|x| x / g).collect())
    }

    /// The least point `p` (by [`NefCone::functional`], ties broken
    /// lexicographically) with `p - q` in `K` for every `q` in `points`.
    pub fn join(&self, points: &[Vec<i64>], search_bound: i64) -> Result<Vec<i64>> {
        if points.is_empty() {
            return Ok(vec![0; self.r]);
        }
        if let Some((g, inv)) = &self.basis {
            let mut lambda = lattice::mat_vec(inv, &points[0]);
            for p in &points[1..] {
                for (l, x) in lambda.iter_mut().zip(lattice::mat_vec(inv, p)) {
                    *l = (*l).max(x);
                }
            }
            return Ok(lattice::mat_vec(g, &lambda));
        }
        let mut best: Option<(i64, Vec<i64>)> = None;
        for_each_box_point(self.r, search_bound, |c| {
            let ok = points.iter().all(|q| {
                let diff: Vec<i64> = c.iter().zip(q).map(|(a, b)| a - b).collect();
                self.contains(&diff)
            });
            if ok {
                let key = (self.functional(c), c.to_vec());
                if best.as_ref().is_none_or(|b| key < *b) {
                    best = Some(key);
                }
            }
        });
        best.map(|(_, c)| c).ok_or(Error::SearchExhausted(search_bound))
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn for_each_box_point<F: FnMut(&[i64])>(r: usize, bound: i64, mut f: F) {
    let mut p = vec![-bound; r];
    loop {
        f(&p);
        let mut i = 0;
        loop {
            if i == r {
                return;
            }
            if p[i] < bound {
                p[i] += 1;
                break;
            }
            p[i] = -bound;
            i += 1;
        }
    }
}

fn extreme_rays(r: usize, ineq: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let check = |v: &[i64]| ineq.iter().all(|h| dot(h, v) >= 0) && v.iter().any(|&x| x != 0);
    if r == 1 {
        for v in [vec![1], vec![-1]] {
            if check(&v) {
                found.insert(v);
            }
        }
    } else {
        let m = ineq.len();
        let mut idx: Vec<usize> = (0..r - 1).collect();
        if m >= r - 1 {
            loop {
                let rows: Vec<Vec<i64>> = idx.iter().map(|&i| ineq[i].clone()).collect();
                let ker = lattice::integer_kernel(&rows);
                if ker.len() == 1 {
                    for sign in [1, -1] {
                        let v: Vec<i64> = ker[0].iter().map(|x| sign * x).collect();
                        if check(&v) {
                            let g = lattice::gcd_slice(&v);
                            found.insert(v.iter().map(|x| x / g).collect());
                        }
                    }
                }
                // next combination
                let mut k = r - 1;
                loop {
                    if k == 0 {
                        return found.into_iter().rev().collect();
                    }
                    k -= 1;
                    if idx[k] < m - (r - 1 - k) {
                        idx[k] += 1;
                        for j in k + 1..r - 1 {
                            idx[j] = idx[j - 1] + 1;
                        }
                        break;
                    }
                }
            }
        }
    }
    found.into_iter().rev().collect()
}

/// Options accepted by [`ToricVariety::build`].
#[derive(Clone, Debug)]
pub struct BuildOptions {
    /// Skip the ridge-pairing completeness check.
    pub assume_complete: bool,
    /// Use this grading instead of the canonical Hermite-normal-form Gale dual.
    /// It is validated against the rays.
    pub grading: Option<IntMatrix>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { assume_complete: false, grading: None }
    }
}

/// A smooth projective toric variety described through its Cox ring.
pub struct ToricVariety {
    fan: Fan,
    grading: IntMatrix,
    faces: HashSet<Face>,
    faces_sorted: Vec<Face>,
    nef: NefCone,
    positive_functional: Vec<i64>,
    pub(crate) face_polys: RwLock<HashMap<Face, MultiPoly>>,
}

impl Clone for ToricVariety {
    fn clone(&self) -> Self {
        let cache = self.face_polys.read().map(|c| c.clone()).unwrap_or_default();
        ToricVariety {
            fan: self.fan.clone(),
            grading: self.grading.clone(),
            faces: self.faces.clone(),
            faces_sorted: self.faces_sorted.clone(),
            nef: self.nef.clone(),
            positive_functional: self.positive_functional.clone(),
            face_polys: RwLock::new(cache),
        }
    }
}

impl fmt::Debug for ToricVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ToricVariety")
            .field("rays", &self.fan.rays)
            .field("max_cones", &self.fan.max_cones)
            .field("grading", &self.grading)
            .finish()
    }
}

impl PartialEq for ToricVariety {
    fn eq(&self, other: &Self) -> bool {
        self.fan == other.fan && self.grading == other.grading
    }
}

/// Build the variety of a fan with the canonical grading.
pub fn build_variety(fan: Fan) -> Result<ToricVariety> {
    ToricVariety::build(fan, BuildOptions::default())
}

impl ToricVariety {
    pub fn build(fan: Fan, opts: BuildOptions) -> Result<ToricVariety> {
        fan.validate(opts.assume_complete)?;
        let n = fan.n();
        let d = fan.d();
        let r = n - d;
        let ray_matrix = lattice::transpose(&fan.rays); // d x n
        let grading = match opts.grading {
            None => {
                let kernel = lattice::integer_kernel(&ray_matrix);
                lattice::row_hnf(&kernel)
            }
            Some(a) => {
                check_gale_dual(&a, &ray_matrix, r)?;
                a
            }
        };
        if grading.len() != r {
            return Err(Error::InvalidGrading(format!("expected {r} rows")));
        }
        ToricVariety::assemble(fan, grading)
    }

    fn assemble(fan: Fan, grading: IntMatrix) -> Result<ToricVariety> {
        let n = fan.n();
        let r = grading.len();
        let mut faces = HashSet::new();
        for &cone in &fan.max_cones {
            // all subsets of the cone
            let bits = cone.0;
            let mut sub = bits;
            loop {
                faces.insert(Face(sub));
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & bits;
            }
        }
        let mut faces_sorted: Vec<Face> = faces.iter().copied().collect();
        faces_sorted.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));

        let mut raw = Vec::new();
        for &cone in &fan.max_cones {
            let cols: Vec<usize> = cone.complement(n).to_vec();
            let m: IntMatrix = (0..r).map(|row| cols.iter().map(|&i| grading[row][i]).collect()).collect();
            let inv = lattice::unimodular_inverse(&m)
                .ok_or_else(|| Error::InvalidGrading(format!("degrees of the variables outside {cone} do not form a lattice basis")))?;
            raw.extend(inv);
        }
        let nef = NefCone::from_inequalities(r, raw);
        let degrees: Vec<Vec<i64>> = (0..n).map(|i| grading.iter().map(|row| row[i]).collect()).collect();
        let positive_functional = find_positive_functional(&degrees).ok_or(Error::NotPointed)?;
        Ok(ToricVariety { fan, grading, faces, faces_sorted, nef, positive_functional, face_polys: RwLock::new(HashMap::new()) })
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    /// Number of variables of the Cox ring.
    pub fn n(&self) -> usize {
        self.fan.n()
    }

    pub fn d(&self) -> usize {
        self.fan.d()
    }

    /// Rank of the Picard group.
    pub fn r(&self) -> usize {
        self.grading.len()
    }

    pub fn grading(&self) -> &IntMatrix {
        &self.grading
    }

    pub fn nef_cone(&self) -> &NefCone {
        &self.nef
    }

    /// `deg(x_i)`.
    pub fn degree_of_variable(&self, i: usize) -> DegreeVector {
        DegreeVector(self.grading.iter().map(|row| row[i]).collect())
    }

    /// `A u`.
    pub fn degree(&self, m: &Monomial) -> DegreeVector {
        DegreeVector(self.grading.iter().map(|row| row.iter().zip(m.exponents()).map(|(a, &e)| a * e as i64).sum()).collect())
    }

    /// A functional `w` with `w . deg(x_i) > 0` for every variable.
    pub fn positive_functional(&self) -> &[i64] {
        &self.positive_functional
    }

    /// Membership in the simplicial complex of the fan.
    pub fn is_face(&self, sigma_hat: Face) -> bool {
        self.faces.contains(&sigma_hat)
    }

    /// All simplices of the fan, by size then lexicographically.
    pub fn faces(&self) -> &[Face] {
        &self.faces_sorted
    }

    /// Monomial generators `prod_{i not in sigma} x_i` of the irrelevant ideal,
    /// one per cone `sigma`. With `minimal_only` only maximal cones are used,
    /// which already generate.
    pub fn irrelevant_generators(&self, minimal_only: bool) -> Vec<Monomial> {
        let n = self.n();
        let cones: Vec<Face> = if minimal_only { self.fan.max_cones.clone() } else { self.faces_sorted.clone() };
        cones.into_iter().map(|c| Monomial::from_face(c.complement(n), n)).collect()
    }

    /// `v in K`.
    pub fn nef_member(&self, v: &DegreeVector) -> bool {
        self.nef.contains(&v.0)
    }

    /// `pos{a_i : i not in cone}` membership with integral coefficients, by
    /// direct solve. Used as an independent check of the inequality form.
    pub fn in_facet_semigroup(&self, cone: Face, v: &DegreeVector) -> bool {
        let cols: Vec<usize> = cone.complement(self.n()).to_vec();
        let m: IntMatrix = self.grading.iter().map(|row| cols.iter().map(|&i| row[i]).collect()).collect();
        match lattice::solve_rational(&m, &v.0) {
            Some(x) => x.iter().all(lattice::is_nonneg_integer),
            None => false,
        }
    }

    /// The same variety with degrees expressed in new coordinates
    /// (`deg' = U^{-1} deg`).
    pub fn change_coordinates(&self, u: &UnimodularMap) -> Result<ToricVariety> {
        let grading = lattice::mat_mul(&u.inverse, &self.grading);
        ToricVariety::assemble(self.fan.clone(), grading)
    }

    /// A unimodular `U` whose columns lie in `K`, so `U(N^r)` is inside `K`.
    pub fn positive_orthant_change(&self) -> Result<UnimodularMap> {
        let r = self.r();
        if !self.nef.is_pointed() {
            return Err(Error::NotPointed);
        }
        if !self.nef.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        if (0..r).all(|j| self.nef_member(&DegreeVector::unit(r, j))) {
            return Ok(UnimodularMap::identity(r));
        }
        let v = self.nef.interior_vector()?;
        let w = lattice::complete_to_basis(&v).ok_or(Error::NotFullDimensional)?;
        let mut cols: Vec<Vec<i64>> = vec![v.clone()];
        for j in 1..r {
            let mut u: Vec<i64> = w.iter().map(|row| row[j]).collect();
            let mut steps = 0;
            while !self.nef.contains(&u) {
                for (x, y) in u.iter_mut().zip(&v) {
                    *x += y;
                }
                steps += 1;
                if steps > 1_000_000 {
                    return Err(Error::SearchExhausted(steps));
                }
            }
            cols.push(u);
        }
        UnimodularMap::new(lattice::transpose(&cols))
    }

    /// Some `c` with `c - deg(x_i) in K` for all `i`; the least one under the
    /// `K`-coordinate sum, lexicographically first among ties.
    pub fn find_c(&self) -> Result<DegreeVector> {
        self.find_c_bounded(DEFAULT_SEARCH_BOUND)
    }

    pub fn find_c_bounded(&self, bound: i64) -> Result<DegreeVector> {
        let pts: Vec<Vec<i64>> = (0..self.n()).map(|i| self.degree_of_variable(i).0).collect();
        self.nef.join(&pts, bound).map(DegreeVector)
    }

    /// Least upper bound (in the sense of [`NefCone::join`]) of some degrees.
    pub fn join(&self, points: &[DegreeVector]) -> Result<DegreeVector> {
        let pts: Vec<Vec<i64>> = points.iter().map(|p| p.0.clone()).collect();
        self.nef.join(&pts, DEFAULT_SEARCH_BOUND).map(DegreeVector)
    }
}

/// Box radius for lattice searches when `K` is not a copy of `N^r`.
pub const DEFAULT_SEARCH_BOUND: i64 = 12;

fn check_gale_dual(a: &IntMatrix, ray_matrix: &IntMatrix, r: usize) -> Result<()> {
    let n = ray_matrix.first().map_or(0, |row| row.len());
    if a.len() != r || a.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidGrading(format!("grading must be {r} x {n}")));
    }
    let prod = lattice::mat_mul(a, &lattice::transpose(ray_matrix));
    if prod.iter().flatten().any(|&x| x != 0) {
        return Err(Error::InvalidGrading("A * rays^T != 0".into()));
    }
    // exactness in the middle: rows of A span the saturated kernel of the rays
    let kernel = lattice::row_hnf(&lattice::integer_kernel(ray_matrix));
    if lattice::row_hnf(a) != kernel {
        return Err(Error::InvalidGrading("rows do not span the kernel lattice".into()));
    }
    Ok(())
}

fn find_positive_functional(degrees: &[Vec<i64>]) -> Option<Vec<i64>> {
    let r = degrees.first()?.len();
    for bound in 1..=24i64 {
        let mut best: Option<(i64, Vec<i64>)> = None;
        for_each_box_point(r, bound, |w| {
            if degrees.iter().all(|a| dot(w, a) > 0) {
                let key = (w.iter().map(|x| x.abs()).sum::<i64>(), w.to_vec());
                if best.as_ref().is_none_or(|b| key < *b) {
                    best = Some(key);
                }
            }
        });
        if let Some((_, w)) = best {
            return Some(w);
        }
    }
    None
}

/// Projective space `P^d`.
pub fn projective_space(d: usize) -> Result<ToricVariety> {
    let mut rays: Vec<Vec<i64>> = (0..d).map(|i| DegreeVector::unit(d, i).0).collect();
    rays.push(vec![-1; d]);
    let cones: Vec<Face> = (0..=d).map(|skip| Face(Face::full(d + 1).0 & !(1u64 << skip))).collect();
    build_variety(Fan::new(rays, cones))
}

/// `P^a x P^b`.
pub fn product_of_projective_spaces(a: usize, b: usize) -> Result<ToricVariety> {
    let d = a + b;
    let mut rays = Vec::new();
    for i in 0..a {
        rays.push(DegreeVector::unit(d, i).0);
    }
    let mut last = vec![0; d];
    last[..a].iter_mut().for_each(|x| *x = -1);
    rays.push(last);
    for i in 0..b {
        rays.push(DegreeVector::unit(d, a + i).0);
    }
    let mut last = vec![0; d];
    last[a..].iter_mut().for_each(|x| *x = -1);
    rays.push(last);
    let mut cones = Vec::new();
    for skip_a in 0..=a {
        for skip_b in 0..=b {
            let mut f = Face::full(a + b + 2);
            f = Face(f.0 & !(1u64 << skip_a));
            f = Face(f.0 & !(1u64 << (a + 1 + skip_b)));
            cones.push(f);
        }
    }
    build_variety(Fan::new(rays, cones))
}

/// The Hirzebruch surface `F_l`, graded by `deg x = (1,0), (-l,1), (1,0), (0,1)`.
pub fn hirzebruch(l: i64) -> Result<ToricVariety> {
    let rays = vec![vec![1, 0], vec![0, 1], vec![-1, l], vec![0, -1]];
    let cones = [[1, 2], [2, 3], [3, 4], [1, 4]].iter().map(|c| Face::from_one_based(c.iter().copied())).collect();
    let grading = vec![vec![1, -l, 1, 0], vec![0, 1, 0, 1]];
    ToricVariety::build(Fan::new(rays, cones), BuildOptions { assume_complete: false, grading: Some(grading) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hirzebruch_fan(l: i64) -> Fan {
        Fan::new(
            vec![vec![1, 0], vec![0, 1], vec![-1, l], vec![0, -1]],
            [[1, 2], [2, 3], [3, 4], [1, 4]].iter().map(|c| Face::from_one_based(c.iter().copied())).collect(),
        )
    }

    #[test]
    fn projective_space_grading() {
        let p3 = projective_space(3).unwrap();
        assert_eq!(p3.grading(), &vec![vec![1, 1, 1, 1]]);
        let b = p3.irrelevant_generators(true);
        assert_eq!(b.len(), 4);
        assert!(b.iter().all(|m| m.total_degree() == 1));
        let p1 = projective_space(1).unwrap();
        assert_eq!(p1.grading(), &vec![vec![1, 1]]);
    }

    #[test]
    fn hirzebruch_canonical_grading_is_row_equivalent_to_the_classical_one() {
        let x = build_variety(hirzebruch_fan(2)).unwrap();
        let classical = vec![vec![1, -2, 1, 0], vec![0, 1, 0, 1]];
        assert_eq!(lattice::row_hnf(&classical), *x.grading());
        let b: Vec<String> = x.irrelevant_generators(true).iter().map(|m| m.to_string()).collect();
        assert_eq!(b, vec!["x3*x4", "x1*x4", "x1*x2", "x2*x3"]);
    }

    #[test]
    fn rejects_bad_fans() {
        let mut fan = hirzebruch_fan(2);
        fan.rays[2] = vec![-2, 4];
        assert_eq!(build_variety(fan).unwrap_err().name(), "NonPrimitiveRay");

        // P^2 with a facet missing
        let fan = Fan::new(vec![vec![1, 0], vec![0, 1], vec![-1, -1]], vec![Face::from_one_based([1, 2]), Face::from_one_based([2, 3])]);
        assert_eq!(build_variety(fan).unwrap_err().name(), "NotComplete");

        // weighted projective plane P(1,1,2) is singular
        let fan = Fan::new(
            vec![vec![1, 0], vec![0, 1], vec![-1, -2]],
            vec![Face::from_one_based([1, 2]), Face::from_one_based([2, 3]), Face::from_one_based([1, 3])],
        );
        assert_eq!(build_variety(fan).unwrap_err().name(), "NotSmooth");

        let fan = Fan::new(vec![vec![1, 0], vec![-1, 0]], vec![Face::from_one_based([1])]);
        assert_eq!(build_variety(fan).unwrap_err().name(), "RaysNotSpanning");
    }

    #[test]
    fn nef_membership_examples() {
        let p3 = projective_space(3).unwrap();
        assert!(p3.nef_member(&DegreeVector(vec![5])));
        assert!(!p3.nef_member(&DegreeVector(vec![-1])));
        let f2 = hirzebruch(2).unwrap();
        assert!(f2.nef_member(&DegreeVector(vec![1, 1])));
        assert!(!f2.nef_member(&DegreeVector(vec![-2, 1])));
        assert!(f2.nef_member(&DegreeVector(vec![0, 0])));
        assert!(f2.nef_cone().is_simplicial_unimodular());
    }

    #[test]
    fn nef_membership_matches_small_coefficient_enumeration() {
        for x in [hirzebruch(2).unwrap(), build_variety(hirzebruch_fan(2)).unwrap(), product_of_projective_spaces(2, 1).unwrap()] {
            let n = x.n();
            for a in -5..=5 {
                for b in -5..=5 {
                    let v = DegreeVector(vec![a, b]);
                    let brute = x.fan().max_cones.iter().all(|&cone| {
                        let cols: Vec<usize> = cone.complement(n).to_vec();
                        let mut hit = false;
                        for l0 in 0..=15i64 {
                            for l1 in 0..=15i64 {
                                let s: Vec<i64> =
                                    (0..2).map(|row| l0 * x.grading()[row][cols[0]] + l1 * x.grading()[row][cols[1]]).collect();
                                hit |= s == v.0;
                            }
                        }
                        hit
                    });
                    assert_eq!(x.nef_member(&v), brute, "{v} on {x:?}");
                    let direct = x.fan().max_cones.iter().all(|&c| x.in_facet_semigroup(c, &v));
                    assert_eq!(direct, brute);
                }
            }
        }
    }

    #[test]
    fn faces_and_find_c() {
        let p3 = projective_space(3).unwrap();
        assert!(p3.is_face(Face::from_one_based([1, 2])));
        assert!(p3.is_face(Face::EMPTY));
        assert!(!p3.is_face(Face::full(4)));
        let f2 = hirzebruch(2).unwrap();
        assert!(!f2.is_face(Face::from_one_based([1, 3])));
        assert_eq!(p3.find_c().unwrap(), DegreeVector(vec![1]));
        assert_eq!(f2.find_c().unwrap(), DegreeVector(vec![1, 1]));
        let p2p1 = product_of_projective_spaces(2, 1).unwrap();
        assert_eq!(p2p1.find_c().unwrap(), DegreeVector(vec![1, 1]));
        for x in [&p3, &f2, &p2p1] {
            let c = x.find_c().unwrap();
            for i in 0..x.n() {
                assert!(x.nef_member(&(&c - &x.degree_of_variable(i))));
            }
        }
    }

    #[test]
    fn positive_orthant_change_restores_orthant() {
        assert!(projective_space(2).unwrap().positive_orthant_change().unwrap().is_identity());
        assert!(hirzebruch(2).unwrap().positive_orthant_change().unwrap().is_identity());
        // rows swapped and one negated
        let twisted = vec![vec![0, 1, 0, 1], vec![-1, 2, -1, 0]];
        let x = ToricVariety::build(hirzebruch_fan(2), BuildOptions { assume_complete: false, grading: Some(twisted) }).unwrap();
        let u = x.positive_orthant_change().unwrap();
        assert_eq!(lattice::det(&u.matrix).abs(), 1);
        for j in 0..2 {
            assert!(x.nef_member(&u.apply(&DegreeVector::unit(2, j))));
        }
        let y = x.change_coordinates(&u).unwrap();
        for j in 0..2 {
            assert!(y.nef_member(&DegreeVector::unit(2, j)));
        }
        // the canonical (non-orthant) grading too
        let z = build_variety(hirzebruch_fan(2)).unwrap();
        let u = z.positive_orthant_change().unwrap();
        let zz = z.change_coordinates(&u).unwrap();
        assert!(zz.nef_member(&DegreeVector(vec![1, 0])) && zz.nef_member(&DegreeVector(vec![0, 1])));
    }

    #[test]
    fn gale_exactness_and_facet_unimodularity() {
        for x in [projective_space(4).unwrap(), hirzebruch(3).unwrap(), product_of_projective_spaces(1, 2).unwrap()] {
            let prod = lattice::mat_mul(x.grading(), &x.fan().rays);
            assert!(prod.iter().flatten().all(|&v| v == 0));
            for &cone in &x.fan().max_cones {
                let cols = cone.complement(x.n()).to_vec();
                let m: IntMatrix = x.grading().iter().map(|row| cols.iter().map(|&i| row[i]).collect()).collect();
                assert_eq!(lattice::det(&m).abs(), 1);
            }
        }
    }
}
