//! The standard-graded case: binomial (Macaulay) representations of Hilbert
//! polynomials, Gotzmann numbers and saturated lexicographic ideals.

use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::face::Face;
use crate::hilbert::quotient_hilbert_polynomial;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::poly::{GradedOrder, MultiPoly};
use crate::stanley::{verify_stanley, StanleyPair, VerifyMode};
use crate::toric::projective_space;

/// Longest representation [`gotzmann_representation`] will build.
const MAX_TERMS: usize = 100_000;

/// `P(t) = sum_i binom(t + q_i - (i - 1), q_i)` with `q` weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GotzmannRep {
    pub q: Vec<u32>,
}

impl GotzmannRep {
    /// The Gotzmann number.
    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    pub fn to_polynomial(&self) -> MultiPoly {
        self.q.iter().enumerate().fold(MultiPoly::zero(1), |acc, (i, &q)| &acc + &MultiPoly::binomial(1, 0, q as i64 - i as i64, q))
    }
}

impl fmt::Display for GotzmannRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .q
            .iter()
            .enumerate()
            .map(|(i, &q)| {
                let shift = q as i64 - i as i64;
                match shift.signum() {
                    0 => format!("binom(t,{q})"),
                    1 => format!("binom(t+{shift},{q})"),
                    _ => format!("binom(t{shift},{q})"),
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

fn require_univariate(p: &MultiPoly) -> Result<()> {
    if p.nvars() != 1 {
        return Err(Error::DimensionMismatch(format!("expected a polynomial in one variable, got {}", p.nvars())));
    }
    Ok(())
}

/// The Gotzmann representation, peeled off greedily: each `q_i` is the
/// degree of what remains.
pub fn gotzmann_representation(p: &MultiPoly) -> Result<GotzmannRep> {
    require_univariate(p)?;
    let ord = GradedOrder::glex(1);
    let mut rest = p.clone();
    let mut q: Vec<u32> = Vec::new();
    while !rest.is_zero() {
        let (lt, lc) = rest.leading_term(&ord)?;
        if !lc.is_positive() {
            return Err(Error::NotAHilbertPolynomial(format!("{p}: remainder {rest} has negative leading coefficient")));
        }
        let qi = lt[0];
        if q.last().is_some_and(|&prev| qi > prev) {
            return Err(Error::NotAHilbertPolynomial(format!("{p}: degrees stop decreasing at term {}", q.len() + 1)));
        }
        if q.len() >= MAX_TERMS {
            return Err(Error::NotAHilbertPolynomial(format!("{p}: more than {MAX_TERMS} terms")));
        }
        let i = q.len() as i64;
        rest = &rest - &MultiPoly::binomial(1, 0, qi as i64 - i, qi);
        q.push(qi);
    }
    if q.is_empty() {
        return Err(Error::NotAHilbertPolynomial("the zero polynomial".into()));
    }
    Ok(GotzmannRep { q })
}

/// Reeves–Stillman data of a saturated lexicographic ideal:
/// `<x_1, .., x_{n-l-1}, x_{n-l}^{b_1+1}, x_{n-l}^{b_1} x_{n-l+1}^{b_2+1}, ..,
///  x_{n-l}^{b_1} .. x_{n-2}^{b_{l-1}} x_{n-1}^{b_l}>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexIdealForm {
    pub n: usize,
    pub l: usize,
    pub b: Vec<u32>,
}

impl LexIdealForm {
    /// `l = q_1 + 1`, and `b_j` counts how often `l - j` occurs in `q`.
    pub fn from_representation(rep: &GotzmannRep, n: usize) -> Result<Self> {
        let q1 = *rep.q.first().ok_or(Error::NotRealizable(n))? as usize;
        if n < 2 || q1 + 2 > n {
            return Err(Error::NotRealizable(n));
        }
        let l = q1 + 1;
        let b = (1..=l).map(|j| rep.q.iter().filter(|&&v| v as usize == l - j).count() as u32).collect();
        Ok(LexIdealForm { n, l, b })
    }

    /// `x_{n-l}^{b_1} .. x_{n-l+j-2}^{b_{j-1}}` (0-based `j - 1` prefix).
    fn prefix(&self, j: usize) -> Vec<u32> {
        let mut e = vec![0u32; self.n];
        let start = self.n - self.l - 1;
        for k in 0..j {
            e[start + k] = self.b[k];
        }
        e
    }

    pub fn ideal(&self) -> MonomialIdeal {
        let n = self.n;
        let start = n - self.l - 1;
        let mut gens: Vec<Monomial> = (0..start).map(|i| Monomial::var(n, i)).collect();
        for j in 0..self.l {
            let mut e = self.prefix(j);
            e[start + j] = if j + 1 == self.l { self.b[j] } else { self.b[j] + 1 };
            gens.push(Monomial::new(e));
        }
        MonomialIdeal::new(n, gens)
    }

    /// Pairs `(x_{n-l}^{b_1} .. x_{n-l+j-1}^{i}, {n-l+j, .., n})` for
    /// `j = 1..l` and `i = 0..b_j - 1`, in that order.
    pub fn filtration(&self) -> Vec<StanleyPair> {
        let n = self.n;
        let start = n - self.l - 1;
        let mut out = Vec::new();
        for j in 0..self.l {
            let face = Face::from_indices(start + j + 1..n);
            for i in 0..self.b[j] {
                let mut e = self.prefix(j);
                e[start + j] = i;
                out.push(StanleyPair::new(Monomial::new(e), face));
            }
        }
        out
    }
}

/// The saturated lexicographic ideal with Hilbert polynomial `p` in `n`
/// variables and its Stanley filtration, both checked before returning.
pub fn lex_ideal(p: &MultiPoly, n: usize) -> Result<(MonomialIdeal, Vec<StanleyPair>)> {
    let rep = gotzmann_representation(p)?;
    let form = LexIdealForm::from_representation(&rep, n)?;
    let ideal = form.ideal();
    let filt = form.filtration();
    if !verify_stanley(&ideal, &filt, VerifyMode::Filtration, None).ok {
        return Err(Error::FiltrationInvalid);
    }
    let pn = projective_space(n - 1)?;
    if quotient_hilbert_polynomial(&pn, &ideal)? != *p {
        return Err(Error::NotRealizable(n));
    }
    Ok((ideal, filt))
}

/// `P(t) = sum_i binom(t + q_i - u_i, q_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialRep {
    pub q: Vec<u32>,
    pub u: Vec<u32>,
}

/// Every expression `p = sum_{i=1}^m binom(t + q_i - u_i, q_i)` with
/// `q_1 >= .. >= q_m >= 0`, `0 <= u_i <= i - 1` and `m <= max_m`.
pub fn enumerate_binomial_representations(p: &MultiPoly, max_m: usize) -> Result<Vec<BinomialRep>> {
    require_univariate(p)?;
    let mut out = Vec::new();
    let Some(top) = p.total_degree() else {
        return Ok(out);
    };
    let ord = GradedOrder::glex(1);
    let mut q = Vec::new();
    let mut u = Vec::new();
    extend_binomial(p, top, max_m, &ord, &mut q, &mut u, &mut out);
    Ok(out)
}

fn extend_binomial(
    rest: &MultiPoly,
    cap: u32,
    max_m: usize,
    ord: &GradedOrder,
    q: &mut Vec<u32>,
    u: &mut Vec<u32>,
    out: &mut Vec<BinomialRep>,
) {
    if rest.is_zero() {
        out.push(BinomialRep { q: q.clone(), u: u.clone() });
        return;
    }
    // every further term has a positive leading coefficient, so a negative
    // one can never be cancelled
    if rest.leading_term(ord).map(|(_, c)| c.is_negative()).unwrap_or(true) || q.len() == max_m {
        return;
    }
    let i = q.len() as u32;
    for qi in (0..=cap).rev() {
        for ui in 0..=i {
            let next = rest - &MultiPoly::binomial(1, 0, qi as i64 - ui as i64, qi);
            q.push(qi);
            u.push(ui);
            extend_binomial(&next, qi, max_m, ord, q, u, out);
            q.pop();
            u.pop();
        }
    }
}
