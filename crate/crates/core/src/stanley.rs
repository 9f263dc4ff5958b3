//! Stanley decompositions and filtrations of monomial quotients `S/I`.
//!
//! A node ideal `I` that is not prime is split along a variable `x_l`
//! properly dividing a minimal generator, using the exact sequence
//! `0 -> S/(I : x_l)(-deg x_l) -> S/I -> S/(I + <x_l>) -> 0`. The left child
//! is `I + <x_l>` (branch label 1), the right child is `I : x_l` (label `x_l`).
//! Leaves are prime ideals `P_sigma` and contribute the pair
//! `(product of labels, sigma)`. Reading the leaves depth-first, left children
//! first, gives a Stanley filtration.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::face::Face;
use crate::monomial::{intersect_components, IrreducibleComponent, Monomial, MonomialIdeal};

/// `(x^u, sigma)`: the monomials `x^{u+v}` with `supp(v) ⊆ sigma`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StanleyPair {
    pub shift: Monomial,
    pub face: Face,
}

impl StanleyPair {
    pub fn new(shift: Monomial, face: Face) -> Self {
        StanleyPair { shift, face }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.shift
            .exponents()
            .iter()
            .zip(m.exponents())
            .enumerate()
            .all(|(i, (&u, &e))| if self.face.contains(i) { u <= e } else { u == e })
    }

    /// Whether the two monomial sets share an element.
    pub fn overlaps(&self, other: &StanleyPair) -> bool {
        let u = self.shift.exponents();
        let v = other.shift.exponents();
        (0..u.len()).all(|i| (self.face.contains(i) || v[i] <= u[i]) && (other.face.contains(i) || u[i] <= v[i]))
    }

    /// `<x_i^{u_i + 1} : i not in sigma>`.
    pub fn component(&self) -> IrreducibleComponent {
        let n = self.shift.n();
        IrreducibleComponent::new((0..n).map(|i| if self.face.contains(i) { 0 } else { self.shift.exponents()[i] + 1 }).collect())
    }
}

impl fmt::Display for StanleyPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.shift, self.face)
    }
}

/// The binary tree generated by the splitting recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StanleyTree {
    Leaf {
        ideal: MonomialIdeal,
        pair: StanleyPair,
    },
    Node {
        ideal: MonomialIdeal,
        /// 0-based index of the chosen variable.
        variable: usize,
        left: Box<StanleyTree>,
        right: Box<StanleyTree>,
    },
}

impl StanleyTree {
    pub fn ideal(&self) -> &MonomialIdeal {
        match self {
            StanleyTree::Leaf { ideal, .. } | StanleyTree::Node { ideal, .. } => ideal,
        }
    }

    /// Leaves in depth-first order, left children first.
    pub fn filtration(&self) -> Vec<StanleyPair> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<StanleyPair>) {
        match self {
            StanleyTree::Leaf { pair, .. } => out.push(pair.clone()),
            StanleyTree::Node { left, right, .. } => {
                left.collect(out);
                right.collect(out);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            StanleyTree::Leaf { .. } => 0,
            StanleyTree::Node { left, right, .. } => 1 + left.depth().max(right.depth()),
        }
    }

    /// The chosen variables in preorder (0-based).
    pub fn choices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        fn walk(t: &StanleyTree, out: &mut Vec<usize>) {
            if let StanleyTree::Node { variable, left, right, .. } = t {
                out.push(*variable);
                walk(left, out);
                walk(right, out);
            }
        }
        walk(self, &mut out);
        out
    }

    fn render(&self, indent: usize, label: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pad = "  ".repeat(indent);
        match self {
            StanleyTree::Leaf { ideal, pair } => writeln!(f, "{pad}[{label}] {ideal} => {pair}"),
            StanleyTree::Node { ideal, variable, left, right } => {
                writeln!(f, "{pad}[{label}] {ideal} split on x{}", variable + 1)?;
                left.render(indent + 1, "1", f)?;
                right.render(indent + 1, &format!("x{}", variable + 1), f)
            }
        }
    }
}

impl fmt::Display for StanleyTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.render(0, "root", f)
    }
}

/// Picks the splitting variable at a non-prime node.
pub trait VariableChoice {
    /// Must return a variable properly dividing some minimal generator of `ideal`.
    fn choose(&mut self, ideal: &MonomialIdeal) -> usize;
}

/// The largest variable index dividing the lexicographically largest minimal
/// generator that is not a variable.
#[derive(Clone, Copy, Debug, Default)]
pub struct DefaultChoice;

impl VariableChoice for DefaultChoice {
    fn choose(&mut self, ideal: &MonomialIdeal) -> usize {
        let g =
            ideal.generators().iter().filter(|g| g.as_variable().is_none()).max().expect("non-prime ideal has a generator of degree >= 2");
        g.exponents().iter().rposition(|&e| e > 0).expect("nonconstant generator")
    }
}

/// Replays a recorded sequence of choices (0-based) in preorder, then falls
/// back to [`DefaultChoice`].
#[derive(Clone, Debug)]
pub struct ScriptedChoice {
    script: Vec<usize>,
    pos: usize,
}

impl ScriptedChoice {
    pub fn new(script: Vec<usize>) -> Self {
        ScriptedChoice { script, pos: 0 }
    }

    pub fn from_one_based(script: &[usize]) -> Self {
        ScriptedChoice::new(script.iter().map(|i| i - 1).collect())
    }
}

impl VariableChoice for ScriptedChoice {
    fn choose(&mut self, ideal: &MonomialIdeal) -> usize {
        let c = self.script.get(self.pos).copied();
        self.pos += 1;
        c.unwrap_or_else(|| DefaultChoice.choose(ideal))
    }
}

/// Choice compatible with a graded total order on the simplices of the fan:
/// split inside the smallest `P_sigma` (under the order) that contains the
/// node ideal, on the smallest such variable dividing a non-variable
/// generator; when no simplex qualifies, on the smallest variable properly
/// dividing a generator.
#[derive(Clone, Debug)]
pub struct NiceChoice {
    order: Vec<Face>,
}

/// Builds [`NiceChoice`] from simplices listed in increasing order.
pub fn nice_strategy(order: &[Face]) -> NiceChoice {
    NiceChoice { order: order.to_vec() }
}

impl VariableChoice for NiceChoice {
    fn choose(&mut self, ideal: &MonomialIdeal) -> usize {
        let nonvar: Vec<&Monomial> = ideal.generators().iter().filter(|g| g.as_variable().is_none()).collect();
        let inside = |hat: Face| ideal.generators().iter().all(|g| g.support().intersects(hat));
        if let Some(&hat) = self.order.iter().find(|&&hat| inside(hat)) {
            if let Some(l) = hat.indices().find(|&l| nonvar.iter().any(|g| g.exponents()[l] > 0)) {
                return l;
            }
        }
        let n = ideal.n();
        (0..n).find(|&l| nonvar.iter().any(|g| g.exponents()[l] > 0)).expect("non-prime ideal has a generator of degree >= 2")
    }
}

fn properly_divides_generator(ideal: &MonomialIdeal, l: usize) -> bool {
    ideal.generators().iter().any(|g| g.exponents().get(l).is_some_and(|&e| e > 0) && g.as_variable() != Some(l))
}

/// Run the splitting recursion.
pub fn stanley_decompose<C: VariableChoice + ?Sized>(ideal: &MonomialIdeal, strategy: &mut C) -> Result<StanleyTree> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    build(ideal.clone(), Monomial::one(ideal.n()), strategy)
}

fn build<C: VariableChoice + ?Sized>(ideal: MonomialIdeal, shift: Monomial, strategy: &mut C) -> Result<StanleyTree> {
    let n = ideal.n();
    if let Some(hat) = ideal.as_prime() {
        let pair = StanleyPair::new(shift, hat.complement(n));
        return Ok(StanleyTree::Leaf { ideal, pair });
    }
    let l = strategy.choose(&ideal);
    if l >= n || !properly_divides_generator(&ideal, l) {
        return Err(Error::StrategyInvalid { variable: l + 1 });
    }
    let x = Monomial::var(n, l);
    let left = build(ideal.add_monomial(&x), shift.clone(), strategy)?;
    let right = build(ideal.colon_by_monomial(&x), shift.mul_var(l), strategy)?;
    Ok(StanleyTree::Node { ideal, variable: l, left: Box::new(left), right: Box::new(right) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    Decomposition,
    Filtration,
}

/// Outcome of [`verify_stanley`]; a failure carries a witness monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub ok: bool,
    pub counterexample: Option<Monomial>,
}

/// Default degree bound for [`verify_stanley`].
pub fn default_verify_bound(ideal: &MonomialIdeal, pairs: &[StanleyPair]) -> u32 {
    let shifts = pairs.iter().map(|p| p.shift.total_degree()).max().unwrap_or(0);
    ideal.max_generator_degree() + shifts + 2
}

/// Every monomial in `n` variables of total degree at most `bound`.
pub fn monomials_up_to_degree(n: usize, bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, bound, &mut cur, &mut out);
    out
}

/// Bounded check that `pairs` partition the standard monomials of `S/I`
/// (and, in filtration mode, that every prefix partitions the standard
/// monomials of `I` plus the shifts of the remaining pairs).
pub fn verify_stanley(ideal: &MonomialIdeal, pairs: &[StanleyPair], mode: VerifyMode, bound: Option<u32>) -> Verification {
    let n = ideal.n();
    let bound = bound.unwrap_or_else(|| default_verify_bound(ideal, pairs));
    let m = pairs.len();
    for mono in monomials_up_to_degree(n, bound) {
        let in_ideal = ideal.contains(&mono);
        let hits: Vec<usize> = (0..m).filter(|&k| pairs[k].contains(&mono)).collect();
        let expected_full = usize::from(!in_ideal);
        if hits.len() != expected_full {
            return Verification { ok: false, counterexample: Some(mono) };
        }
        if mode == VerifyMode::Filtration {
            // last index whose shift divides the monomial
            let last_shift = (0..m).rev().find(|&k| pairs[k].shift.divides(&mono));
            for j in 0..m {
                // prefix of length j against I + <u_j, .., u_{m-1}>
                let killed = in_ideal || last_shift.is_some_and(|k| k >= j);
                let count = hits.iter().filter(|&&k| k < j).count();
                if count != usize::from(!killed) {
                    return Verification { ok: false, counterexample: Some(mono) };
                }
            }
        }
    }
    Verification { ok: true, counterexample: None }
}

/// `∩ <x_i^{u_i+1} : i not in sigma>` over the pairs, after checking they are
/// pairwise disjoint.
pub fn decomposition_to_ideal(n: usize, pairs: &[StanleyPair]) -> Result<MonomialIdeal> {
    for a in 0..pairs.len() {
        for b in a + 1..pairs.len() {
            if pairs[a].overlaps(&pairs[b]) {
                return Err(Error::OverlappingPairs(a + 1, b + 1));
            }
        }
    }
    Ok(decomposition_to_ideal_unchecked(n, pairs))
}

/// As [`decomposition_to_ideal`] without the disjointness check.
pub fn decomposition_to_ideal_unchecked(n: usize, pairs: &[StanleyPair]) -> MonomialIdeal {
    let comps: Vec<IrreducibleComponent> = pairs.iter().map(StanleyPair::component).collect();
    intersect_components(n, &comps)
}

/// The structural property of filtrations built with [`NiceChoice`]: every
/// pair with a nonzero shift and `sigma_hat` a simplex has an earlier pair
/// `(x^{u_j}, sigma_j)` with `sigma_hat_j` a simplex no larger in the order
/// and `x^u = x^{u_j} x_l` for some `l` outside `sigma_j`.
pub fn has_nice_property(order: &[Face], pairs: &[StanleyPair]) -> bool {
    let n = pairs.first().map_or(0, |p| p.shift.n());
    let rank: HashMap<Face, usize> = order.iter().enumerate().map(|(k, &f)| (f, k)).collect();
    pairs.iter().enumerate().all(|(i, p)| {
        let hat = p.face.complement(n);
        let Some(&ri) = rank.get(&hat) else { return true };
        if p.shift.is_one() {
            return true;
        }
        pairs[..i].iter().any(|q| {
            let hq = q.face.complement(n);
            let Some(&rj) = rank.get(&hq) else { return false };
            rj <= ri && hq.indices().any(|l| q.shift.mul_var(l) == p.shift)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(s, n).unwrap()
    }

    fn pair(shift: &str, face: &[usize], n: usize) -> StanleyPair {
        StanleyPair::new(Monomial::parse(shift, n).unwrap(), Face::from_one_based(face.iter().copied()))
    }

    #[test]
    fn scripted_tree_reproduces_recorded_pairs() {
        let i = ideal("x1^2*x2, x1*x2*x3, x2^2*x3, x1^2*x4, x1*x2*x4, x2^2*x4", 4);
        let tree = stanley_decompose(&i, &mut ScriptedChoice::from_one_based(&[1, 2, 2, 1, 2])).unwrap();
        let expected = vec![
            pair("1", &[3, 4], 4),
            pair("x2", &[3, 4], 4),
            pair("x2^2", &[2], 4),
            pair("x1", &[3, 4], 4),
            pair("x1*x2", &[2], 4),
            pair("x1^2", &[1, 3], 4),
        ];
        assert_eq!(tree.filtration(), expected);
        assert_eq!(tree.choices(), vec![0, 1, 1, 0, 1]);
        assert!(verify_stanley(&i, &expected, VerifyMode::Filtration, None).ok);
    }

    #[test]
    fn default_choice_on_example_ideal() {
        let i = ideal("x1*x4^2, x2*x4^2, x3*x4^2", 4);
        let tree = stanley_decompose(&i, &mut DefaultChoice).unwrap();
        assert_eq!(tree.filtration(), vec![pair("1", &[1, 2, 3], 4), pair("x4", &[1, 2, 3], 4), pair("x4^2", &[4], 4)]);
    }

    #[test]
    fn prime_ideal_is_a_single_leaf() {
        let p = MonomialIdeal::prime(3, Face::from_one_based([2]));
        let tree = stanley_decompose(&p, &mut DefaultChoice).unwrap();
        assert_eq!(tree.filtration(), vec![pair("1", &[1, 3], 3)]);
        let z = stanley_decompose(&MonomialIdeal::zero(2), &mut DefaultChoice).unwrap();
        assert_eq!(z.filtration(), vec![pair("1", &[1, 2], 2)]);
    }

    #[test]
    fn invalid_strategy_is_rejected() {
        let i = ideal("x1^2*x2", 3);
        let err = stanley_decompose(&i, &mut ScriptedChoice::new(vec![2])).unwrap_err();
        assert_eq!(err, Error::StrategyInvalid { variable: 3 });
        let j = ideal("x1, x2*x3", 3);
        let err = stanley_decompose(&j, &mut ScriptedChoice::new(vec![0])).unwrap_err();
        assert_eq!(err.name(), "StrategyInvalid");
    }

    #[test]
    fn decomposition_without_any_filtration_order() {
        let i = ideal("x1*x2*x3", 3);
        let pairs = vec![pair("1", &[], 3), pair("x1", &[1, 2], 3), pair("x2", &[2, 3], 3), pair("x3", &[1, 3], 3)];
        assert!(verify_stanley(&i, &pairs, VerifyMode::Decomposition, None).ok);
        let mut idx = vec![0, 1, 2, 3];
        let mut count = 0;
        permute(&mut idx, 0, &mut |perm| {
            let ordered: Vec<StanleyPair> = perm.iter().map(|&k| pairs[k].clone()).collect();
            assert!(!verify_stanley(&i, &ordered, VerifyMode::Filtration, None).ok);
            count += 1;
        });
        assert_eq!(count, 24);
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn ideal_from_pairs() {
        let pairs = vec![pair("1", &[2, 3], 3), pair("x1", &[2, 3], 3), pair("x1^2", &[2, 3], 3), pair("x1^3", &[3], 3)];
        assert_eq!(decomposition_to_ideal(3, &pairs).unwrap(), ideal("x1^4, x1^3*x2", 3));
        assert!(decomposition_to_ideal(3, &[pair("1", &[1, 2, 3], 3)]).unwrap().is_zero());
        let ex = vec![pair("1", &[1, 2, 3], 4), pair("x4", &[1, 2, 3], 4), pair("x4^2", &[4], 4)];
        assert_eq!(decomposition_to_ideal(4, &ex).unwrap(), ideal("x1*x4^2, x2*x4^2, x3*x4^2", 4));
        let bad = vec![pair("1", &[1, 2], 2), pair("x1", &[1], 2)];
        assert_eq!(decomposition_to_ideal(2, &bad).unwrap_err(), Error::OverlappingPairs(1, 2));
    }

    #[test]
    fn overlap_matches_brute_force() {
        let n = 3;
        let shifts = ["1", "x1", "x2", "x1*x3", "x2^2"];
        let faces: Vec<Face> = (0u64..8).map(Face).collect();
        let monos = monomials_up_to_degree(n, 6);
        for s in shifts {
            for t in shifts {
                for &f in &faces {
                    for &g in &faces {
                        let a = StanleyPair::new(Monomial::parse(s, n).unwrap(), f);
                        let b = StanleyPair::new(Monomial::parse(t, n).unwrap(), g);
                        let brute = monos.iter().any(|m| a.contains(m) && b.contains(m));
                        assert_eq!(a.overlaps(&b), brute, "{a} vs {b}");
                    }
                }
            }
        }
    }
}
