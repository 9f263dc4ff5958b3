//! Regions of guaranteed regularity as `K`-upward-closed subsets of `Z^r`.

use std::collections::HashMap;
use std::fmt;

use crate::enumerate::enumerate_saturated_ideals;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::monomial::{is_b_saturated, MonomialIdeal};
use crate::poly::MultiPoly;
use crate::stanley::{verify_stanley, StanleyPair, VerifyMode};
use crate::toric::{DegreeVector, NefCone, ToricVariety};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    /// `∪ (g + K)`.
    Generated(Vec<DegreeVector>),
    /// Intersection of generated upsets, kept unevaluated.
    Intersection(Vec<Vec<DegreeVector>>),
}

/// An upward-closed subset of `Z^r` with respect to `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KUpset {
    cone: NefCone,
    repr: Repr,
}

impl KUpset {
    /// `∪ (g + K)` over the given generators, minimalized.
    pub fn new(x: &ToricVariety, generators: Vec<DegreeVector>) -> KUpset {
        KUpset::from_cone(x.nef_cone().clone(), generators)
    }

    fn from_cone(cone: NefCone, generators: Vec<DegreeVector>) -> KUpset {
        let gens = minimal_generators(&cone, generators);
        KUpset { cone, repr: Repr::Generated(gens) }
    }

    /// `v + K`.
    pub fn principal(x: &ToricVariety, v: DegreeVector) -> KUpset {
        KUpset::new(x, vec![v])
    }

    /// `K` itself.
    pub fn nef(x: &ToricVariety) -> KUpset {
        KUpset::principal(x, DegreeVector::zero(x.r()))
    }

    /// True when `K` is a copy of `N^r`, so intersections have explicit generators.
    pub fn coordinate_mode(&self) -> bool {
        self.cone.is_simplicial_unimodular()
    }

    pub fn contains(&self, p: &DegreeVector) -> bool {
        let inside = |gens: &[DegreeVector]| gens.iter().any(|g| self.cone.contains(&(p - g).0));
        match &self.repr {
            Repr::Generated(g) => inside(g),
            Repr::Intersection(parts) => parts.iter().all(|g| inside(g)),
        }
    }

    /// Minimal generators; unavailable for an unevaluated intersection.
    pub fn generators(&self) -> Result<&[DegreeVector]> {
        match &self.repr {
            Repr::Generated(g) => Ok(g),
            Repr::Intersection(_) => Err(Error::Unsupported("generators of an intersection when K is not a copy of N^r".into())),
        }
    }

    /// `v + self`.
    pub fn translate(&self, v: &DegreeVector) -> KUpset {
        let shift = |gens: &[DegreeVector]| gens.iter().map(|g| g + v).collect::<Vec<_>>();
        let repr = match &self.repr {
            Repr::Generated(g) => Repr::Generated(shift(g)),
            Repr::Intersection(parts) => Repr::Intersection(parts.iter().map(|g| shift(g)).collect()),
        };
        KUpset { cone: self.cone.clone(), repr }
    }

    fn parts(&self) -> Vec<Vec<DegreeVector>> {
        match &self.repr {
            Repr::Generated(g) => vec![g.clone()],
            Repr::Intersection(p) => p.clone(),
        }
    }
}

fn minimal_generators(cone: &NefCone, mut gens: Vec<DegreeVector>) -> Vec<DegreeVector> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> =
        gens.iter().enumerate().map(|(i, g)| !gens.iter().enumerate().any(|(j, h)| j != i && cone.contains(&(g - h).0))).collect();
    gens.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect()
}

/// `a ∩ b`. With `K` a copy of `N^r`, `(g + K) ∩ (h + K) = join(g, h) + K`
/// with the join taken coordinatewise in the basis of rays.
pub fn upset_intersect(a: &KUpset, b: &KUpset) -> KUpset {
    if let (Repr::Generated(ga), Repr::Generated(gb), true) = (&a.repr, &b.repr, a.coordinate_mode()) {
        let mut gens = Vec::with_capacity(ga.len() * gb.len());
        for g in ga {
            for h in gb {
                let joined = a.cone.join(&[g.0.clone(), h.0.clone()], 0).expect("coordinate mode join");
                gens.push(DegreeVector(joined));
            }
        }
        return KUpset::from_cone(a.cone.clone(), gens);
    }
    let mut parts = a.parts();
    parts.extend(b.parts());
    KUpset { cone: a.cone.clone(), repr: Repr::Intersection(parts) }
}

fn intersect_all(first: KUpset, rest: impl IntoIterator<Item = KUpset>) -> KUpset {
    rest.into_iter().fold(first, |acc, u| upset_intersect(&acc, &u))
}

impl fmt::Display for KUpset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |g: &[DegreeVector]| {
            if g.len() == 1 {
                format!("{} + K", g[0])
            } else {
                let items: Vec<String> = g.iter().map(|v| v.to_string()).collect();
                format!("{{{}}} + K", items.join(","))
            }
        };
        match &self.repr {
            Repr::Generated(g) if g.is_empty() => write!(f, "{{}}"),
            Repr::Generated(g) => write!(f, "{}", show(g)),
            Repr::Intersection(parts) => {
                let items: Vec<String> = parts.iter().map(|g| format!("({})", show(g))).collect();
                write!(f, "{}", items.join(" ∩ "))
            }
        }
    }
}

/// Regions assumed to lie in `reg(S_sigma)` for the face rings.
///
/// By default every face ring whose `sigma_hat` is a simplex is assumed
/// `0`-regular, i.e. its baseline is `K`. This holds for projective spaces
/// and their products; for other varieties it is an assumption and is
/// reported with every bound.
#[derive(Clone, Debug, Default)]
pub struct RegularityAssumption {
    /// Explicit baselines keyed by `sigma` (the free variables).
    pub baselines: HashMap<Face, Vec<DegreeVector>>,
    /// Use `K` for simplices without an explicit entry.
    pub default_nef: bool,
}

impl RegularityAssumption {
    pub fn default_k() -> Self {
        RegularityAssumption { baselines: HashMap::new(), default_nef: true }
    }

    pub fn is_default(&self) -> bool {
        self.default_nef && self.baselines.is_empty()
    }

    pub fn describe(&self) -> &'static str {
        if self.is_default() {
            "default-K"
        } else {
            "custom"
        }
    }

    pub fn baseline(&self, x: &ToricVariety, sigma: Face) -> Result<KUpset> {
        if let Some(g) = self.baselines.get(&sigma) {
            return Ok(KUpset::new(x, g.clone()));
        }
        if self.default_nef && x.is_face(sigma.complement(x.n())) {
            return Ok(KUpset::nef(x));
        }
        Err(Error::MissingBaseline(sigma.to_one_based()))
    }
}

/// `∩_i (deg x^{u_i} + baseline(sigma_i))` over a Stanley filtration of `S/I`;
/// for `B`-saturated `I` only pairs with `sigma_hat_i` a simplex are used.
pub fn reg_bound_from_filtration(
    x: &ToricVariety,
    ideal: &MonomialIdeal,
    filtration: &[StanleyPair],
    assume: &RegularityAssumption,
) -> Result<KUpset> {
    if filtration.is_empty() || !verify_stanley(ideal, filtration, VerifyMode::Filtration, None).ok {
        return Err(Error::FiltrationInvalid);
    }
    let saturated = is_b_saturated(ideal, x)?;
    let n = x.n();
    let mut parts = Vec::new();
    for pair in filtration {
        if saturated && !x.is_face(pair.face.complement(n)) {
            continue;
        }
        parts.push(assume.baseline(x, pair.face)?.translate(&x.degree(&pair.shift)));
    }
    let mut it = parts.into_iter();
    let first = it.next().ok_or(Error::FiltrationInvalid)?;
    Ok(intersect_all(first, it))
}

/// The uniform bound `(m - 1) c + ∩_{sigma_hat in Δ} baseline(sigma)` with its ingredients.
#[derive(Clone, Debug)]
pub struct PolynomialBound {
    pub gotzmann_number: usize,
    pub c: DegreeVector,
    pub region: KUpset,
}

/// Regularity region shared by all saturated ideals with Hilbert polynomial `p`.
pub fn reg_bound_from_polynomial(x: &ToricVariety, p: &MultiPoly, assume: &RegularityAssumption) -> Result<PolynomialBound> {
    let e = enumerate_saturated_ideals(x, p)?;
    if e.ideals.is_empty() {
        return Err(Error::NoSaturatedIdeal);
    }
    let m = e.gotzmann_number.ok_or(Error::NoSaturatedIdeal)?;
    bound_from_gotzmann_number(x, m, assume)
}

/// `(m - 1) c + ∩_{sigma_hat in Δ} baseline(sigma)` for a known Gotzmann number `m`.
pub fn bound_from_gotzmann_number(x: &ToricVariety, m: usize, assume: &RegularityAssumption) -> Result<PolynomialBound> {
    let c = x.find_c()?;
    let n = x.n();
    let mut parts = Vec::new();
    for &hat in x.faces() {
        parts.push(assume.baseline(x, hat.complement(n))?);
    }
    let mut it = parts.into_iter();
    let first = it.next().ok_or_else(|| Error::InvalidFan("no simplices".into()))?;
    let region = intersect_all(first, it).translate(&((m as i64 - 1) * &c));
    Ok(PolynomialBound { gotzmann_number: m, c, region })
}
