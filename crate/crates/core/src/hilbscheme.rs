//! Finite sets of degrees `D ⊂ k + K` on which equality of Hilbert functions
//! with a given polynomial already forces the Hilbert polynomial.
//!
//! Starting from `D = {k}` with `k = (m - 1) c`, every monomial ideal
//! generated in degrees `D` whose Hilbert function agrees with `P` on `D` is
//! listed. An ideal whose Hilbert polynomial is wrong contributes a degree of
//! `k + K` where its Hilbert function differs from `P`; together with a
//! regularity bound `c'` for the listed ideals, `binom(n, d)` general points
//! of `c' + K` are added as well. The loop ends when all listed ideals have
//! Hilbert polynomial `P`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::enumerate::enumerate_saturated_ideals;
use crate::error::{Error, Result};
use crate::hilbert::{monomials_up_to, quotient_hilbert_polynomial};
use crate::monomial::{b_saturate, fiber_monomials, hilbert_function, Monomial, MonomialIdeal};
use crate::poly::{rat, MultiPoly};
use crate::regularity::{reg_bound_from_filtration, RegularityAssumption};
use crate::stanley::{stanley_decompose, DefaultChoice};
use crate::toric::{DegreeVector, ToricVariety};

/// Default cap on branches explored by [`ideals_generated_in_degrees`].
pub const DEFAULT_IDEAL_BUDGET: usize = 1_000_000;

/// Parameters of [`degree_set_with`].
#[derive(Clone, Debug)]
pub struct DegreeSetOptions {
    /// Seed for drawing general points.
    pub seed: u64,
    /// Add `binom(n, d)` general points of `c' + K` whenever a round fails.
    pub bulk_points: bool,
    /// Branch budget of each call to [`ideals_generated_in_degrees`].
    pub node_budget: usize,
    /// Rounds before giving up with [`Error::BudgetExceeded`].
    pub max_rounds: usize,
    /// Witnesses are sought among `k + sum lambda_j g_j` with `sum lambda_j` up to this.
    pub witness_depth: u32,
}

impl Default for DegreeSetOptions {
    fn default() -> Self {
        DegreeSetOptions { seed: 0, bulk_points: true, node_budget: DEFAULT_IDEAL_BUDGET, max_rounds: 16, witness_depth: 24 }
    }
}

/// One pass of the loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round {
    /// `D` at the start of the round.
    pub degrees: Vec<DegreeVector>,
    /// Ideals generated in `D` with Hilbert function `P` on `D`.
    pub ideals: usize,
    /// How many of them have the wrong Hilbert polynomial.
    pub failing: usize,
    /// Degrees where a failing ideal's Hilbert function differs from `P`.
    pub witnesses: Vec<DegreeVector>,
    /// The regularity bound `c'` used for general points, if any were drawn.
    pub bulk_base: Option<DegreeVector>,
    /// General points of `c' + K` added this round.
    pub bulk: Vec<DegreeVector>,
}

/// Cross-check of the result against the saturated ideals with polynomial `P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSetCheck {
    pub saturated_ideals: usize,
    /// Every saturated ideal has Hilbert function `P` on `D`.
    pub hilbert_function_matches: bool,
    /// The truncation of every saturated ideal to `D` is among the final ideals.
    pub truncations_listed: bool,
}

impl DegreeSetCheck {
    pub fn passed(&self) -> bool {
        self.hilbert_function_matches && self.truncations_listed
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSet {
    pub gotzmann_number: usize,
    pub c: DegreeVector,
    /// `k = (m - 1) c`.
    pub k: DegreeVector,
    /// The final set `D`, sorted by the positive functional then lexicographically.
    pub degrees: Vec<DegreeVector>,
    pub rounds: Vec<Round>,
    /// Ideals generated in `D` with Hilbert function `P` on `D`.
    #[serde(skip)]
    pub ideals: Vec<MonomialIdeal>,
    pub seed: u64,
    pub check: DegreeSetCheck,
}

fn sort_degrees(x: &ToricVariety, d: &mut Vec<DegreeVector>) {
    let w = x.positive_functional();
    let key = |t: &DegreeVector| -> i64 { t.0.iter().zip(w).map(|(a, b)| a * b).sum() };
    d.sort_by(|a, b| key(a).cmp(&key(b)).then_with(|| a.0.cmp(&b.0)));
    d.dedup();
}

/// `P(t)` as a count, or [`Error::InfeasibleHilbertValue`].
fn target_value(p: &MultiPoly, t: &DegreeVector, fiber: usize) -> Result<usize> {
    let v = p.eval_int(&t.0);
    let fail = || Error::InfeasibleHilbertValue { degree: t.0.clone(), value: v.to_string(), fiber };
    if !v.is_integer() || v < BigRational::zero() || v > rat(fiber as i64) {
        return Err(fail());
    }
    v.to_integer().try_into().map_err(|_| fail())
}

/// All monomial ideals generated by monomials whose degrees lie in `d`, with
/// `H(S/I, t) = P(t)` for every `t` in `d`.
///
/// Degrees are processed in increasing order of the positive functional, so
/// generators chosen later never divide earlier ones: in degree `t` the
/// multiples of earlier generators are forced into `I_t` and the remaining
/// `dim S_t - P(t)` monomials are chosen freely from the rest.
pub fn ideals_generated_in_degrees(x: &ToricVariety, d: &[DegreeVector], p: &MultiPoly, budget: usize) -> Result<Vec<MonomialIdeal>> {
    let mut degrees = d.to_vec();
    sort_degrees(x, &mut degrees);
    let mut layers = Vec::with_capacity(degrees.len());
    for t in &degrees {
        let fiber = fiber_monomials(x, t)?;
        let keep = target_value(p, t, fiber.len())?;
        layers.push((fiber.len() - keep, fiber));
    }
    let mut out = Vec::new();
    let mut nodes = 0usize;
    let mut gens = Vec::new();
    choose_layer(x.n(), &layers, 0, &mut gens, &mut out, &mut nodes, budget)?;
    out.sort();
    out.dedup();
    Ok(out)
}

fn choose_layer(
    n: usize,
    layers: &[(usize, Vec<Monomial>)],
    j: usize,
    gens: &mut Vec<Monomial>,
    out: &mut Vec<MonomialIdeal>,
    nodes: &mut usize,
    budget: usize,
) -> Result<()> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::BudgetExceeded(budget));
    }
    let Some((codim, fiber)) = layers.get(j) else {
        out.push(MonomialIdeal::new(n, gens.clone()));
        return Ok(());
    };
    let (forced, free): (Vec<&Monomial>, Vec<&Monomial>) = fiber.iter().partition(|m| gens.iter().any(|g| g.divides(m)));
    let Some(extra) = codim.checked_sub(forced.len()) else {
        return Ok(());
    };
    if extra > free.len() {
        return Ok(());
    }
    let base = gens.len();
    let mut pick = Vec::with_capacity(extra);
    subsets(&free, extra, 0, &mut pick, &mut |chosen| {
        gens.truncate(base);
        gens.extend(chosen.iter().map(|m| (*m).clone()));
        choose_layer(n, layers, j + 1, gens, out, nodes, budget)
    })?;
    gens.truncate(base);
    Ok(())
}

fn subsets<'a, T, F>(items: &[&'a T], k: usize, from: usize, pick: &mut Vec<&'a T>, f: &mut F) -> Result<()>
where
    F: FnMut(&[&'a T]) -> Result<()>,
{
    if pick.len() == k {
        return f(pick);
    }
    let need = k - pick.len();
    for i in from..=items.len().saturating_sub(need) {
        if items.len() < need {
            break;
        }
        pick.push(items[i]);
        subsets(items, k, i + 1, pick, f)?;
        pick.pop();
    }
    Ok(())
}

/// Lattice points `base + sum lambda_j g_j` over the rays `g_j` of `K`, with
/// `sum lambda_j = s`, for `s = 0, 1, ..`, without repetitions.
fn cone_points(x: &ToricVariety, base: &DegreeVector, depth: u32) -> Vec<DegreeVector> {
    let rays = x.nef_cone().rays();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for lam in monomials_up_to(rays.len(), depth) {
        let mut p = base.0.clone();
        for (l, g) in lam.iter().zip(rays) {
            for (a, b) in p.iter_mut().zip(g) {
                *a += *l as i64 * b;
            }
        }
        if seen.insert(p.clone()) {
            out.push(DegreeVector(p));
        }
    }
    out
}

/// The first point of `k + K` (in [`cone_points`] order) where
/// `H(S/I, t) != P(t)`.
fn find_witness(x: &ToricVariety, ideal: &MonomialIdeal, p: &MultiPoly, k: &DegreeVector, depth: u32) -> Result<Option<DegreeVector>> {
    for t in cone_points(x, k, depth) {
        if rat(hilbert_function(x, ideal, &t)? as i64) != p.eval_int(&t.0) {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// A degree `c'` in every regularity region of the listed ideals, computed
/// from their default Stanley filtrations with the baseline `K`. Ideals with
/// torsion pieces are replaced by their saturation.
fn regularity_base(x: &ToricVariety, ideals: &[MonomialIdeal], k: &DegreeVector) -> Result<DegreeVector> {
    let assume = RegularityAssumption::default_k();
    let mut corners = vec![k.clone()];
    for ideal in ideals {
        let region = match filtration_region(x, ideal, &assume) {
            Err(Error::MissingBaseline(_)) => {
                let sat = b_saturate(ideal, x)?;
                if sat.is_unit() {
                    continue;
                }
                filtration_region(x, &sat, &assume)?
            }
            other => other?,
        };
        corners.extend(region);
    }
    x.join(&corners)
}

fn filtration_region(x: &ToricVariety, ideal: &MonomialIdeal, assume: &RegularityAssumption) -> Result<Vec<DegreeVector>> {
    let filt = stanley_decompose(ideal, &mut DefaultChoice)?.filtration();
    let region = reg_bound_from_filtration(x, ideal, &filt, assume)?;
    Ok(region.generators()?.to_vec())
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

fn rational_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(p, rank);
        let inv = BigRational::one() / m[rank][col].clone();
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = &m[r][col] * &inv;
                for c in col..cols {
                    let sub = &f * &m[rank][c];
                    m[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `binom(n, d)` distinct points of `base + K` at which polynomials of total
/// degree at most `d` are determined by their values. Since `n = d + r`
/// this is exactly the number of such monomials. Coordinates along the rays
/// of `K` are drawn uniformly from a window that widens on every redraw.
fn general_points(x: &ToricVariety, base: &DegreeVector, rng: &mut ChaCha8Rng) -> Result<Vec<DegreeVector>> {
    let (n, d, r) = (x.n(), x.d(), x.r());
    let count = binomial(n, d);
    let basis = monomials_up_to(r, d as u32);
    let rays = x.nef_cone().rays().to_vec();
    for attempt in 0..64i64 {
        let window = count as i64 + attempt;
        let mut pts: Vec<DegreeVector> = Vec::with_capacity(count);
        let mut tries = 0;
        while pts.len() < count && tries < 100 * count {
            tries += 1;
            let mut p = base.0.clone();
            for g in &rays {
                let l = rng.gen_range(0..=window);
                for (a, b) in p.iter_mut().zip(g) {
                    *a += l * b;
                }
            }
            let p = DegreeVector(p);
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        if pts.len() < count {
            continue;
        }
        let m: Vec<Vec<BigRational>> = pts
            .iter()
            .map(|p| basis.iter().map(|e| MultiPoly::from_terms(r, [(e.clone(), BigRational::one())]).eval_int(&p.0)).collect())
            .collect();
        if rational_rank(m) == basis.len() {
            return Ok(pts);
        }
    }
    Err(Error::SearchExhausted(count as i64))
}

/// [`degree_set_with`] with default options and the given seed.
pub fn degree_set(x: &ToricVariety, p: &MultiPoly, seed: u64) -> Result<DegreeSet> {
    degree_set_with(x, p, &DegreeSetOptions { seed, ..DegreeSetOptions::default() })
}

pub fn degree_set_with(x: &ToricVariety, p: &MultiPoly, opts: &DegreeSetOptions) -> Result<DegreeSet> {
    if p.nvars() != x.r() {
        return Err(Error::DimensionMismatch(format!("polynomial in {} variables on a variety of Picard rank {}", p.nvars(), x.r())));
    }
    let enumeration = enumerate_saturated_ideals(x, p)?;
    if enumeration.ideals.is_empty() {
        return Err(Error::NoSaturatedIdeal);
    }
    let m = enumeration.gotzmann_number.ok_or(Error::NoSaturatedIdeal)?;
    let c = x.find_c()?;
    let k = (m as i64 - 1) * &c;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);

    let mut degrees = vec![k.clone()];
    let mut rounds = Vec::new();
    for _ in 0..opts.max_rounds {
        let ideals = ideals_generated_in_degrees(x, &degrees, p, opts.node_budget)?;
        let mut failing = Vec::new();
        for ideal in &ideals {
            let good = !ideal.is_unit() && quotient_hilbert_polynomial(x, ideal)? == *p;
            if !good {
                failing.push(ideal.clone());
            }
        }
        let mut round = Round {
            degrees: degrees.clone(),
            ideals: ideals.len(),
            failing: failing.len(),
            witnesses: Vec::new(),
            bulk_base: None,
            bulk: Vec::new(),
        };
        if failing.is_empty() {
            rounds.push(round);
            let check = cross_check(x, p, &degrees, &ideals, &enumeration.ideals.iter().map(|f| f.ideal.clone()).collect::<Vec<_>>())?;
            return Ok(DegreeSet { gotzmann_number: m, c, k, degrees, rounds, ideals, seed: opts.seed, check });
        }
        for ideal in &failing {
            let t = find_witness(x, ideal, p, &k, opts.witness_depth)?.ok_or(Error::SearchExhausted(opts.witness_depth as i64))?;
            if !degrees.contains(&t) && !round.witnesses.contains(&t) {
                round.witnesses.push(t);
            }
        }
        if opts.bulk_points {
            let base = regularity_base(x, &ideals, &k)?;
            let pts = general_points(x, &base, &mut rng)?;
            round.bulk = pts.into_iter().filter(|t| !degrees.contains(t) && !round.witnesses.contains(t)).collect();
            round.bulk_base = Some(base);
        }
        degrees.extend(round.witnesses.iter().cloned());
        degrees.extend(round.bulk.iter().cloned());
        sort_degrees(x, &mut degrees);
        rounds.push(round);
    }
    Err(Error::BudgetExceeded(opts.max_rounds))
}

fn cross_check(
    x: &ToricVariety,
    p: &MultiPoly,
    degrees: &[DegreeVector],
    listed: &[MonomialIdeal],
    saturated: &[MonomialIdeal],
) -> Result<DegreeSetCheck> {
    let mut matches = true;
    let mut truncations = true;
    for ideal in saturated {
        let mut gens = Vec::new();
        for t in degrees {
            if rat(hilbert_function(x, ideal, t)? as i64) != p.eval_int(&t.0) {
                matches = false;
            }
            gens.extend(fiber_monomials(x, t)?.into_iter().filter(|m| ideal.contains(m)));
        }
        if !listed.contains(&MonomialIdeal::new(x.n(), gens)) {
            truncations = false;
        }
    }
    Ok(DegreeSetCheck { saturated_ideals: saturated.len(), hilbert_function_matches: matches, truncations_listed: truncations })
}
