//! Polynomials in `r` variables with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Graded lexicographic order. `priority[0]` is the largest variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedOrder {
    priority: Vec<usize>,
}

impl GradedOrder {
    /// `t_1 > t_2 > ... > t_r`.
    pub fn glex(r: usize) -> Self {
        GradedOrder { priority: (0..r).collect() }
    }

    /// Variables listed from largest to smallest (0-based).
    pub fn with_priority(priority: Vec<usize>) -> Result<Self> {
        let mut sorted = priority.clone();
        sorted.sort_unstable();
        if sorted != (0..priority.len()).collect::<Vec<_>>() {
            return Err(Error::Parse(format!("{priority:?} is not a permutation")));
        }
        Ok(GradedOrder { priority })
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        let da: u32 = a.iter().sum();
        let db: u32 = b.iter().sum();
        da.cmp(&db).then_with(|| {
            for &j in &self.priority {
                match a[j].cmp(&b[j]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

/// A polynomial in `Q[t_1, .., t_r]`, stored as exponent vector to nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    r: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl MultiPoly {
    pub fn zero(r: usize) -> Self {
        MultiPoly { r, terms: BTreeMap::new() }
    }

    pub fn constant(r: usize, c: BigRational) -> Self {
        let mut p = MultiPoly::zero(r);
        p.add_term(vec![0; r], c);
        p
    }

    pub fn one(r: usize) -> Self {
        MultiPoly::constant(r, BigRational::one())
    }

    /// `t_j` (0-based index).
    pub fn var(r: usize, j: usize) -> Self {
        let mut e = vec![0; r];
        e[j] = 1;
        let mut p = MultiPoly::zero(r);
        p.add_term(e, BigRational::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, BigRational)>>(r: usize, terms: I) -> Self {
        let mut p = MultiPoly::zero(r);
        for (e, c) in terms {
            assert_eq!(e.len(), r, "exponent vector of wrong length");
            p.add_term(e, c);
        }
        p
    }

    /// Affine-linear polynomial `b + sum_j m_j t_j`.
    pub fn linear(coeffs: &[i64], constant: i64) -> Self {
        let r = coeffs.len();
        let mut p = MultiPoly::constant(r, rat(constant));
        for (j, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                p = &p + &MultiPoly::var(r, j).scale(&rat(c));
            }
        }
        p
    }

    /// `binom(t_j + a, k)` as a polynomial of degree `k`.
    pub fn binomial(r: usize, j: usize, a: i64, k: u32) -> Self {
        let mut p = MultiPoly::one(r);
        let mut fact = BigInt::one();
        for i in 0..k as i64 {
            let mut shift = vec![0; r];
            shift[j] = 1;
            p = &p * &MultiPoly::linear(&shift, a - i);
            fact *= BigInt::from(i + 1);
        }
        p.scale(&BigRational::new(BigInt::one(), fact))
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u32]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.r);
        }
        MultiPoly { r: self.r, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        (0..k).fold(MultiPoly::one(self.r), |acc, _| &acc * self)
    }

    pub fn eval(&self, t: &[BigRational]) -> BigRational {
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (x, &k) in t.iter().zip(e) {
                for _ in 0..k {
                    v *= x;
                }
            }
            total += v;
        }
        total
    }

    pub fn eval_int(&self, t: &[i64]) -> BigRational {
        let q: Vec<BigRational> = t.iter().map(|&x| rat(x)).collect();
        self.eval(&q)
    }

    /// `Q(s) = P(M s + b)` where `M` is `r x r'` and `b` has length `r`.
    pub fn compose_affine(&self, m: &[Vec<i64>], b: &[i64]) -> MultiPoly {
        let r_new = m.first().map_or(0, |row| row.len());
        let forms: Vec<MultiPoly> = (0..self.r).map(|j| MultiPoly::linear(&m[j], b[j])).collect();
        let mut powers: Vec<Vec<MultiPoly>> = forms.iter().map(|f| vec![MultiPoly::one(r_new), f.clone()]).collect();
        let mut out = MultiPoly::zero(r_new);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(r_new, c.clone());
            for (j, &k) in e.iter().enumerate() {
                while powers[j].len() <= k as usize {
                    let next = &powers[j][powers[j].len() - 1] * &forms[j];
                    powers[j].push(next);
                }
                term = &term * &powers[j][k as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// `Q(t) = P(t + v)`.
    pub fn shift(&self, v: &[i64]) -> MultiPoly {
        if v.iter().all(|&x| x == 0) {
            return self.clone();
        }
        let id: Vec<Vec<i64>> = (0..self.r).map(|i| (0..self.r).map(|j| i64::from(i == j)).collect()).collect();
        self.compose_affine(&id, v)
    }

    /// The largest monomial under `ord` with its coefficient.
    pub fn leading_term(&self, ord: &GradedOrder) -> Result<(Vec<u32>, BigRational)> {
        self.terms.iter().max_by(|a, b| ord.cmp(a.0, b.0)).map(|(e, c)| (e.clone(), c.clone())).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_coeff_positive(&self, ord: &GradedOrder) -> Result<bool> {
        Ok(self.leading_term(ord)?.1.is_positive())
    }

    /// Parse `3*t1*t2 + 1/2*t2^2 - t1 + 1`. With `r = 1` the variable may be written `t`.
    pub fn parse(s: &str, r: usize) -> Result<MultiPoly> {
        parse_poly(s, r)
    }

    /// Render with terms in decreasing order under `ord`.
    pub fn format_with(&self, ord: &GradedOrder) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Vec<u32>, &BigRational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| ord.cmp(b.0, a.0));
        let mut out = String::new();
        for (k, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.format_monomial(e);
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }

    fn format_monomial(&self, e: &[u32]) -> String {
        let parts: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(j, &k)| {
                let name = if self.r == 1 { "t".to_string() } else { format!("t{}", j + 1) };
                if k == 1 {
                    name
                } else {
                    format!("{name}^{k}")
                }
            })
            .collect();
        parts.join("*")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&GradedOrder::glex(self.r)))
    }
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), -c.clone());
        }
        p
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&rat(-1))
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        let mut p = MultiPoly::zero(self.r);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        p
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad coefficient {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

fn parse_poly(s: &str, r: usize) -> Result<MultiPoly> {
    let src = s.trim();
    if src.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    // split into signed terms at top-level + and -
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for ch in src.chars() {
        match ch {
            '+' | '-' => {
                if !cur.trim().is_empty() {
                    terms.push((neg, std::mem::take(&mut cur)));
                    neg = false;
                }
                if ch == '-' {
                    neg = !neg;
                }
            }
            c if c.is_whitespace() => cur.push(' '),
            c => cur.push(c),
        }
    }
    if cur.trim().is_empty() {
        return Err(Error::Parse(format!("dangling sign in {src:?}")));
    }
    terms.push((neg, cur));

    let mut p = MultiPoly::zero(r);
    for (neg, term) in terms {
        let mut coeff = rat(1);
        let mut e = vec![0u32; r];
        for factor in term.split('*') {
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(Error::Parse(format!("empty factor in {term:?}")));
            }
            if factor.starts_with('t') {
                let (base, pow) = match factor.split_once('^') {
                    Some((b, k)) => (b, k.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent {factor:?}")))?),
                    None => (factor, 1),
                };
                let idx = if base == "t" {
                    if r != 1 {
                        return Err(Error::Parse(format!("bare `t` needs a rank-one grading, have rank {r}")));
                    }
                    0
                } else {
                    let k: usize = base[1..].parse().map_err(|_| Error::Parse(format!("bad variable {base:?}")))?;
                    if k == 0 || k > r {
                        return Err(Error::Parse(format!("variable {base} out of range 1..{r}")));
                    }
                    k - 1
                };
                e[idx] += pow;
            } else {
                coeff *= parse_rational(factor)?;
            }
        }
        if neg {
            coeff = -coeff;
        }
        p.add_term(e, coeff);
    }
    Ok(p)
}
