//! Hilbert polynomials: face rings by exact interpolation, monomial quotients
//! by summing shifted face-ring polynomials over a Stanley decomposition.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::face::Face;
use crate::monomial::{face_hilbert_function, MonomialIdeal};
use crate::poly::{rat, MultiPoly};
use crate::stanley::{self, StanleyPair};
use crate::toric::{DegreeVector, ToricVariety};

/// Number of doublings of the sampling offset before giving up.
const MAX_OFFSET_RETRIES: u32 = 4;

/// Exponent vectors in `r` variables of total degree at most `deg`, in
/// increasing graded order.
pub fn monomials_up_to(r: usize, deg: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for total in 0..=deg {
        let mut cur = vec![0u32; r];
        compositions(r, total, 0, &mut cur, &mut out);
    }
    out
}

fn compositions(r: usize, left: u32, j: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if r == 0 {
        if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    if j == r - 1 {
        cur[j] = left;
        out.push(cur.clone());
        cur[j] = 0;
        return;
    }
    for k in (0..=left).rev() {
        cur[j] = k;
        compositions(r, left - k, j + 1, cur, out);
    }
    cur[j] = 0;
}

/// Solve a square linear system over the rationals; `None` when singular.
pub fn solve_linear(mut m: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = m.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(p, col);
        rhs.swap(p, col);
        let inv = BigRational::one() / m[col][col].clone();
        for c in col..n {
            m[col][c] = &m[col][c] * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..n {
                    let sub = &f * &m[col][c];
                    m[r][c] -= sub;
                }
                let sub = &f * &rhs[col];
                rhs[r] -= sub;
            }
        }
    }
    Some(rhs)
}

/// The polynomial of total degree at most `deg` through the given integer
/// points, or `None` if the points do not determine it.
pub fn interpolate(r: usize, deg: u32, points: &[Vec<i64>], values: &[BigRational]) -> Option<MultiPoly> {
    let basis = monomials_up_to(r, deg);
    if points.len() != basis.len() {
        return None;
    }
    let m: Vec<Vec<BigRational>> = points
        .iter()
        .map(|p| basis.iter().map(|e| MultiPoly::from_terms(r, [(e.clone(), BigRational::one())]).eval_int(p)).collect())
        .collect();
    let coeffs = solve_linear(m, values.to_vec())?;
    Some(MultiPoly::from_terms(r, basis.into_iter().zip(coeffs)))
}

/// Linearly independent generators of a full-rank subcone of `K`.
fn sampling_directions(x: &ToricVariety) -> Result<Vec<Vec<i64>>> {
    let r = x.r();
    let mut chosen: Vec<Vec<i64>> = Vec::new();
    for ray in x.nef_cone().rays() {
        let mut trial = chosen.clone();
        trial.push(ray.clone());
        if crate::lattice::rank(&trial) == trial.len() {
            chosen = trial;
        }
        if chosen.len() == r {
            return Ok(chosen);
        }
    }
    Err(Error::NotFullDimensional)
}

/// Hilbert polynomial of the face ring `S_sigma = k[x_i : i in sigma]`.
///
/// Zero when `sigma_hat` is not a simplex of the fan (the face ring is then
/// `B`-torsion). Otherwise the polynomial has total degree
/// `|sigma| - r = d - |sigma_hat|` and
/// is found by sampling the Hilbert function on a simplex-shaped grid inside
/// `t0 + K`, where `t0 - deg(prod_{i in T} x_i)` lies in `K` for every
/// `T ⊆ sigma_hat`; there the Koszul complex of `S_sigma` over `S` consists
/// of shifts of `S` in nef degrees, whose Hilbert functions are polynomial.
/// The fit is checked on extra points and the offset pushed deeper if needed.
pub fn face_hilbert_polynomial(x: &ToricVariety, sigma: Face) -> Result<MultiPoly> {
    let n = x.n();
    let r = x.r();
    let sigma_hat = sigma.complement(n);
    if !x.is_face(sigma_hat) {
        return Ok(MultiPoly::zero(r));
    }
    if let Some(p) = x.face_polys.read().ok().and_then(|c| c.get(&sigma).cloned()) {
        return Ok(p);
    }
    let deg = (sigma.len() - r) as u32;
    let hat: Vec<usize> = sigma_hat.to_vec();
    let mut koszul_shifts = Vec::with_capacity(1 << hat.len());
    for mask in 0u32..(1 << hat.len()) {
        let mut s = DegreeVector::zero(r);
        for (k, &i) in hat.iter().enumerate() {
            if mask >> k & 1 == 1 {
                s = &s + &x.degree_of_variable(i);
            }
        }
        koszul_shifts.push(s);
    }
    let base = x.join(&koszul_shifts)?;
    let dirs = sampling_directions(x)?;
    let interior = DegreeVector(x.nef_cone().interior_vector()?);

    let lambdas = monomials_up_to(r, deg);
    let checks: Vec<Vec<u32>> = monomials_up_to(r, deg + 1).into_iter().filter(|l| l.iter().sum::<u32>() == deg + 1).take(r + 2).collect();
    let point = |t0: &DegreeVector, lam: &[u32]| -> Vec<i64> {
        let mut p = t0.0.clone();
        for (l, dir) in lam.iter().zip(&dirs) {
            for (a, b) in p.iter_mut().zip(dir) {
                *a += *l as i64 * b;
            }
        }
        p
    };
    for attempt in 0..=MAX_OFFSET_RETRIES {
        let push = if attempt == 0 { 0 } else { 1i64 << (attempt - 1) };
        let t0 = &base + &(push * &interior);
        let pts: Vec<Vec<i64>> = lambdas.iter().map(|l| point(&t0, l)).collect();
        let vals = pts
            .iter()
            .map(|p| face_hilbert_function(x, sigma, &DegreeVector(p.clone())).map(|v| rat(v as i64)))
            .collect::<Result<Vec<_>>>()?;
        let Some(poly) = interpolate(r, deg, &pts, &vals) else {
            return Err(Error::InterpolationInconsistent(sigma.to_one_based()));
        };
        let mut ok = true;
        for l in &checks {
            let p = point(&t0, l);
            let h = face_hilbert_function(x, sigma, &DegreeVector(p.clone()))?;
            if poly.eval_int(&p) != rat(h as i64) {
                ok = false;
                break;
            }
        }
        if ok {
            if let Ok(mut cache) = x.face_polys.write() {
                cache.insert(sigma, poly.clone());
            }
            return Ok(poly);
        }
    }
    Err(Error::InterpolationInconsistent(sigma.to_one_based()))
}

/// Hilbert polynomial of the whole Cox ring.
pub fn ring_hilbert_polynomial(x: &ToricVariety) -> Result<MultiPoly> {
    face_hilbert_polynomial(x, Face::full(x.n()))
}

/// `sum P_{S_sigma}(t - deg x^u)` over the pairs; pairs whose face ring is
/// `B`-torsion contribute nothing.
pub fn polynomial_of_pairs(x: &ToricVariety, pairs: &[StanleyPair]) -> Result<MultiPoly> {
    let mut total = MultiPoly::zero(x.r());
    for pair in pairs {
        let p = face_hilbert_polynomial(x, pair.face)?;
        if p.is_zero() {
            continue;
        }
        let shift = x.degree(&pair.shift);
        total = &total + &p.shift(&(-&shift).0);
    }
    Ok(total)
}

/// Hilbert polynomial of `S/I`.
pub fn quotient_hilbert_polynomial(x: &ToricVariety, ideal: &MonomialIdeal) -> Result<MultiPoly> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let tree = stanley::stanley_decompose(ideal, &mut stanley::DefaultChoice)?;
    polynomial_of_pairs(x, &tree.filtration())
}
