//! Monomials and monomial ideals of the Cox ring `S = k[x_1, .., x_n]`:
//! colon ideals, irreducible decomposition, saturation with respect to the
//! irrelevant ideal, and Hilbert functions by degree-fiber enumeration.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face::Face;
use crate::toric::{DegreeVector, ToricVariety};

/// Default cap on the number of monomials visited while enumerating a fiber.
pub const DEFAULT_FIBER_CAP: usize = 10_000_000;

/// `x^u` for `u` in `N^n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn var_power(n: usize, i: usize, k: u32) -> Self {
        let mut e = vec![0; n];
        e[i] = k;
        Monomial(e)
    }

    /// Product of the variables indexed by `face`.
    pub fn from_face(face: Face, n: usize) -> Self {
        Monomial((0..n).map(|i| u32::from(face.contains(i))).collect())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn support(&self) -> Face {
        Face::from_indices(self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i))
    }

    /// The single variable index when this monomial is `x_i`.
    pub fn as_variable(&self) -> Option<usize> {
        if self.total_degree() == 1 {
            self.0.iter().position(|&e| e == 1)
        } else {
            None
        }
    }

    /// The variable index when this monomial is a pure power `x_i^e`, `e >= 1`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut it = self.0.iter().enumerate().filter(|(_, &e)| e > 0);
        let (i, &e) = it.next()?;
        if it.next().is_some() {
            None
        } else {
            Some((i, e))
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Parse `x1^2*x3`, `1`, or a bare exponent list `[2,0,1]`.
    pub fn parse(s: &str, n: usize) -> Result<Monomial> {
        let s = s.trim();
        if s.starts_with('[') {
            let v: Vec<u32> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
            if v.len() != n {
                return Err(Error::Parse(format!("exponent vector {s} does not have length {n}")));
            }
            return Ok(Monomial(v));
        }
        let mut e = vec![0u32; n];
        if s == "1" {
            return Ok(Monomial(e));
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let (base, pow) = match factor.split_once('^') {
                Some((b, p)) => (b.trim(), p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?),
                None => (factor, 1),
            };
            let idx = base
                .strip_prefix('x')
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| k >= 1 && k <= n)
                .ok_or_else(|| Error::Parse(format!("bad variable {base:?} (expected x1..x{n})")))?;
            e[idx - 1] += pow;
        }
        Ok(Monomial(e))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic with `x_1 > x_2 > ... > x_n`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A monomial ideal stored by its minimal generators, sorted lexicographically
/// decreasing. No generators means the zero ideal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|g| g.total_degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|g| g.n() == n));
        MonomialIdeal { n, gens: minimalize(gens) }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Monomial::one(n)] }
    }

    /// `P_sigma = <x_i : i in sigma_hat>`.
    pub fn prime(n: usize, sigma_hat: Face) -> Self {
        MonomialIdeal::new(n, sigma_hat.indices().map(|i| Monomial::var(n, i)).collect())
    }

    pub fn from_exponents(n: usize, exps: Vec<Vec<u32>>) -> Result<Self> {
        if let Some(bad) = exps.iter().find(|e| e.len() != n) {
            return Err(Error::DimensionMismatch(format!("generator {bad:?} does not have {n} entries")));
        }
        Ok(MonomialIdeal::new(n, exps.into_iter().map(Monomial).collect()))
    }

    /// Parse a comma-separated generator list such as `x1^4, x1^3*x2`.
    /// `0` or an empty string is the zero ideal.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let s = s.trim().trim_start_matches('<').trim_end_matches('>').trim();
        if s.is_empty() || s == "0" {
            return Ok(MonomialIdeal::zero(n));
        }
        let gens = s.split(',').map(|g| Monomial::parse(g, n)).collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal::new(n, gens))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// When every minimal generator is a variable, the set of those
    /// variables, i.e. `sigma_hat` with `I = P_sigma`.
    pub fn as_prime(&self) -> Option<Face> {
        let mut face = Face::EMPTY;
        for g in &self.gens {
            face.insert(g.as_variable()?);
        }
        Some(face)
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.total_degree()).max().unwrap_or(0)
    }

    /// `I + <m>`.
    pub fn add_monomial(&self, m: &Monomial) -> MonomialIdeal {
        if self.contains(m) {
            return self.clone();
        }
        let mut gens: Vec<Monomial> = self.gens.iter().filter(|g| !m.divides(g)).cloned().collect();
        gens.push(m.clone());
        gens.sort_by(|a, b| b.cmp(a));
        MonomialIdeal { n: self.n, gens }
    }

    /// `(I : m)`.
    pub fn colon_by_monomial(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.n, self.gens.iter().map(|g| g.quotient_by_gcd(m)).collect())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.n, gens)
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.n, gens)
    }

    /// `(I : x_i^infinity)`: set the exponent of `x_i` to zero in every generator.
    pub fn saturate_by_variable(&self, i: usize) -> MonomialIdeal {
        MonomialIdeal::new(
            self.n,
            self.gens
                .iter()
                .map(|g| {
                    let mut e = g.0.clone();
                    e[i] = 0;
                    Monomial(e)
                })
                .collect(),
        )
    }

    /// `(I : <x_1,..,x_n>^infinity)` computed as the intersection of the
    /// single-variable saturations. On projective space this is the
    /// saturation by the irrelevant ideal.
    pub fn saturate_by_maximal_ideal(&self) -> MonomialIdeal {
        (1..self.n).fold(self.saturate_by_variable(0), |acc, i| acc.intersection(&self.saturate_by_variable(i)))
    }

    pub fn to_exponents(&self) -> Vec<Vec<u32>> {
        self.gens.iter().map(|g| g.0.clone()).collect()
    }
}

impl PartialOrd for MonomialIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered by generator lists, for canonical sorting of ideal collections.
impl Ord for MonomialIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.gens.cmp(&other.gens))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "<0>");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

/// `<x_i^{e_i} : i in support>`; an empty support is the zero ideal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IrreducibleComponent {
    exponents: Vec<u32>,
}

impl IrreducibleComponent {
    /// Exponents with `0` meaning "variable not in the support".
    pub fn new(exponents: Vec<u32>) -> Self {
        IrreducibleComponent { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn support(&self) -> Face {
        Face::from_indices(self.exponents.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i))
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.exponents.iter().zip(m.exponents()).any(|(&e, &u)| e > 0 && u >= e)
    }

    /// Ideal containment `self ⊆ other`.
    pub fn is_subset_of(&self, other: &IrreducibleComponent) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(&e, &f)| e == 0 || (f > 0 && e >= f))
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.exponents.len();
        MonomialIdeal::new(
            n,
            self.exponents.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| Monomial::var_power(n, i, e)).collect(),
        )
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ideal())
    }
}

/// Irredundant irreducible decomposition, sorted.
///
/// Repeatedly splits a generator `x_i^e * m'` that is not a pure power:
/// `I = (I + <x_i^e>) ∩ (I + <m'>)`, until every ideal is generated by pure
/// powers, then discards redundant components.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.n();
    let mut found: BTreeSet<IrreducibleComponent> = BTreeSet::new();
    let mut stack = vec![ideal.clone()];
    let mut seen: BTreeSet<MonomialIdeal> = BTreeSet::new();
    while let Some(cur) = stack.pop() {
        if !seen.insert(cur.clone()) {
            continue;
        }
        match cur.gens.iter().find(|g| g.as_pure_power().is_none() && !g.is_one()) {
            None => {
                let mut e = vec![0u32; n];
                for g in &cur.gens {
                    let (i, k) = g.as_pure_power().expect("pure power");
                    e[i] = if e[i] == 0 { k } else { e[i].min(k) };
                }
                found.insert(IrreducibleComponent::new(e));
            }
            Some(g) => {
                let i = g.0.iter().position(|&e| e > 0).expect("nonconstant");
                let first = Monomial::var_power(n, i, g.0[i]);
                let mut rest = g.0.clone();
                rest[i] = 0;
                stack.push(cur.add_monomial(&Monomial(rest)));
                stack.push(cur.add_monomial(&first));
            }
        }
    }
    let all: Vec<IrreducibleComponent> = found.into_iter().collect();
    Ok(all.iter().filter(|q| !all.iter().any(|p| p != *q && p.is_subset_of(q))).cloned().collect())
}

/// Intersection of the given components. The empty intersection is the unit ideal.
pub fn intersect_components(n: usize, comps: &[IrreducibleComponent]) -> MonomialIdeal {
    comps.iter().fold(MonomialIdeal::unit(n), |acc, q| acc.intersection(&q.to_ideal()))
}

/// `(I : B^infinity)`: the intersection of the irreducible components whose
/// support is a simplex of the fan. When no component survives the quotient
/// is `B`-torsion and the unit ideal is returned.
pub fn b_saturate(ideal: &MonomialIdeal, x: &ToricVariety) -> Result<MonomialIdeal> {
    if ideal.is_unit() {
        return Ok(ideal.clone());
    }
    let comps = irreducible_decomposition(ideal)?;
    let kept: Vec<IrreducibleComponent> = comps.into_iter().filter(|q| x.is_face(q.support())).collect();
    Ok(intersect_components(ideal.n(), &kept))
}

pub fn is_b_saturated(ideal: &MonomialIdeal, x: &ToricVariety) -> Result<bool> {
    Ok(b_saturate(ideal, x)? == *ideal)
}

/// True when `S/I` is annihilated by a power of `B`.
pub fn is_b_torsion(ideal: &MonomialIdeal, x: &ToricVariety) -> Result<bool> {
    Ok(b_saturate(ideal, x)?.is_unit())
}

/// Visit every `u` with support in `vars` and `A u = t`.
///
/// Exponent bounds come from the positive functional `w` of the variety:
/// `u_i <= (w . t) / (w . a_i)`.
pub fn for_each_in_fiber<F: FnMut(&[u32])>(x: &ToricVariety, vars: Face, t: &DegreeVector, cap: usize, mut f: F) -> Result<()> {
    let n = x.n();
    let w = x.positive_functional();
    let idx: Vec<usize> = vars.indices().filter(|&i| i < n).collect();
    let degs: Vec<Vec<i64>> = idx.iter().map(|&i| x.degree_of_variable(i).0).collect();
    let wdeg: Vec<i64> = degs.iter().map(|a| a.iter().zip(w).map(|(p, q)| p * q).sum()).collect();
    let mut u = vec![0u32; n];
    let mut rem = t.0.clone();
    let mut visited = 0usize;
    fn rec<F: FnMut(&[u32])>(
        k: usize,
        idx: &[usize],
        degs: &[Vec<i64>],
        wdeg: &[i64],
        w: &[i64],
        u: &mut Vec<u32>,
        rem: &mut Vec<i64>,
        visited: &mut usize,
        cap: usize,
        f: &mut F,
    ) -> Result<()> {
        *visited += 1;
        if *visited > cap {
            return Err(Error::FiberTooLarge(cap));
        }
        let wrem: i64 = rem.iter().zip(w).map(|(a, b)| a * b).sum();
        if k == idx.len() {
            if rem.iter().all(|&v| v == 0) {
                f(u);
            }
            return Ok(());
        }
        if wrem < 0 {
            return Ok(());
        }
        let bound = wrem / wdeg[k];
        let i = idx[k];
        if k + 1 == idx.len() {
            // the last exponent is forced
            if wrem % wdeg[k] == 0 && rem.iter().zip(&degs[k]).all(|(r, a)| *r == bound * a) {
                u[i] = bound as u32;
                f(u);
                u[i] = 0;
            }
            return Ok(());
        }
        for e in 0..=bound {
            u[i] = e as u32;
            rec(k + 1, idx, degs, wdeg, w, u, rem, visited, cap, f)?;
            for (r, a) in rem.iter_mut().zip(&degs[k]) {
                *r -= a;
            }
        }
        for (r, a) in rem.iter_mut().zip(&degs[k]) {
            *r += (bound + 1) * a;
        }
        u[i] = 0;
        Ok(())
    }
    rec(0, &idx, &degs, &wdeg, w, &mut u, &mut rem, &mut visited, cap, &mut f)
}

/// All monomials of degree `t`, in lexicographically decreasing order.
pub fn fiber_monomials(x: &ToricVariety, t: &DegreeVector) -> Result<Vec<Monomial>> {
    let mut out = Vec::new();
    for_each_in_fiber(x, Face::full(x.n()), t, DEFAULT_FIBER_CAP, |u| out.push(Monomial(u.to_vec())))?;
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// `H(S/I, t)`: the number of degree-`t` monomials outside `I`.
pub fn hilbert_function(x: &ToricVariety, ideal: &MonomialIdeal, t: &DegreeVector) -> Result<u64> {
    hilbert_function_capped(x, ideal, t, DEFAULT_FIBER_CAP)
}

pub fn hilbert_function_capped(x: &ToricVariety, ideal: &MonomialIdeal, t: &DegreeVector, cap: usize) -> Result<u64> {
    if t.len() != x.r() {
        return Err(Error::DimensionMismatch(format!("degree {t} is not in Z^{}", x.r())));
    }
    let mut count = 0u64;
    for_each_in_fiber(x, Face::full(x.n()), t, cap, |u| {
        if !ideal.gens.iter().any(|g| g.0.iter().zip(u).all(|(a, b)| a <= b)) {
            count += 1;
        }
    })?;
    Ok(count)
}

/// `H(S_sigma, t)` for the face ring `S_sigma = k[x_i : i in sigma]`.
pub fn face_hilbert_function(x: &ToricVariety, sigma: Face, t: &DegreeVector) -> Result<u64> {
    let mut count = 0u64;
    for_each_in_fiber(x, sigma, t, DEFAULT_FIBER_CAP, |_| count += 1)?;
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::{hirzebruch, projective_space};

    fn ideal(s: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(s, n).unwrap()
    }

    /// All monomials in `n` variables of total degree at most `deg`.
    fn monomials_up_to(n: usize, deg: u32) -> Vec<Monomial> {
        let mut out = vec![Monomial::one(n)];
        let mut frontier = out.clone();
        for _ in 0..deg {
            let mut next = BTreeSet::new();
            for m in &frontier {
                for i in 0..n {
                    next.insert(m.mul_var(i));
                }
            }
            frontier = next.into_iter().collect();
            out.extend(frontier.iter().cloned());
        }
        out
    }

    #[test]
    fn parse_and_display() {
        let i = ideal("x1^2*x2, x1*x2^2, x1^3*x2", 3);
        assert_eq!(i.to_string(), "<x1^2*x2, x1*x2^2>");
        assert!(MonomialIdeal::parse("x4", 3).is_err());
        assert_eq!(ideal("0", 2), MonomialIdeal::zero(2));
        assert_eq!(Monomial::parse("[1,0,2]", 3).unwrap().to_string(), "x1*x3^2");
    }

    #[test]
    fn colon_examples() {
        let i = ideal("x1^2*x2, x1*x2^2", 2);
        let c = i.colon_by_monomial(&Monomial::parse("x1", 2).unwrap());
        assert_eq!(c, ideal("x1*x2, x2^2", 2));
        for m in monomials_up_to(2, 5) {
            assert_eq!(c.contains(&m), i.contains(&m.mul_var(0)));
        }
        assert_eq!(i.colon_by_monomial(&Monomial::one(2)), i);
        let tree_node = ideal("x1*x2, x2*x3, x1*x4, x2*x4", 4);
        assert_eq!(tree_node.colon_by_monomial(&Monomial::var(4, 0)), ideal("x2, x4", 4));
    }

    #[test]
    fn decomposition_examples() {
        let d = irreducible_decomposition(&ideal("x1*x3, x1*x4, x2*x3, x2*x4", 4)).unwrap();
        let as_ideals: BTreeSet<String> = d.iter().map(|q| q.to_string()).collect();
        assert_eq!(as_ideals, ["<x1, x2>", "<x3, x4>"].iter().map(|s| s.to_string()).collect());

        let i = ideal("x1^3, x1^2*x2", 2);
        let d = irreducible_decomposition(&i).unwrap();
        let as_ideals: BTreeSet<String> = d.iter().map(|q| q.to_string()).collect();
        assert_eq!(as_ideals, ["<x1^2>", "<x1^3, x2>"].iter().map(|s| s.to_string()).collect());
        for m in monomials_up_to(2, 6) {
            assert_eq!(i.contains(&m), d.iter().all(|q| q.contains(&m)));
        }
        assert_eq!(intersect_components(2, &d), i);

        let d = irreducible_decomposition(&ideal("x1", 3)).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].to_string(), "<x1>");
        assert_eq!(irreducible_decomposition(&MonomialIdeal::unit(2)).unwrap_err(), Error::UnitIdeal);
        let z = irreducible_decomposition(&MonomialIdeal::zero(2)).unwrap();
        assert_eq!(z.len(), 1);
        assert!(z[0].support().is_empty());
    }

    #[test]
    fn saturation_examples() {
        let f = hirzebruch(0).unwrap();
        let i = ideal("x1*x3, x1*x4, x2*x3, x2*x4", 4);
        assert_eq!(b_saturate(&i, &f).unwrap(), i);

        let p3 = projective_space(3).unwrap();
        let ex = ideal("x1*x4^2, x2*x4^2, x3*x4^2", 4);
        assert_eq!(b_saturate(&ex, &p3).unwrap(), ex);
        assert_eq!(ex.saturate_by_maximal_ideal(), ex);

        let p1 = projective_space(1).unwrap();
        let b = ideal("x1, x2", 2);
        assert!(b_saturate(&b, &p1).unwrap().is_unit());
        assert!(is_b_torsion(&b, &p1).unwrap());

        let j = ideal("x1^2, x1*x2, x1*x3", 3);
        let p2 = projective_space(2).unwrap();
        assert_eq!(b_saturate(&j, &p2).unwrap(), ideal("x1", 3));
        assert_eq!(j.saturate_by_maximal_ideal(), ideal("x1", 3));
    }

    #[test]
    fn hilbert_function_examples() {
        let p3 = projective_space(3).unwrap();
        let ex = ideal("x1*x4^2, x2*x4^2, x3*x4^2", 4);
        assert_eq!(hilbert_function(&p3, &ex, &DegreeVector(vec![2])).unwrap(), 10);
        assert_eq!(hilbert_function(&p3, &ex, &DegreeVector(vec![-1])).unwrap(), 0);
        let f2 = hirzebruch(2).unwrap();
        let fib = fiber_monomials(&f2, &DegreeVector(vec![1, 0])).unwrap();
        let names: Vec<String> = fib.iter().map(|m| m.to_string()).collect();
        assert_eq!(names, vec!["x1", "x3"]);
        assert_eq!(hilbert_function(&f2, &MonomialIdeal::zero(4), &DegreeVector(vec![1, 0])).unwrap(), 2);
    }

    #[test]
    fn fiber_cap_is_enforced() {
        let p3 = projective_space(3).unwrap();
        let err = hilbert_function_capped(&p3, &MonomialIdeal::zero(4), &DegreeVector(vec![30]), 100).unwrap_err();
        assert_eq!(err.name(), "FiberTooLarge");
    }
}
