use std::collections::BTreeSet;

use toricreg::gotzmann::LexIdealForm;
use toricreg::hilbscheme::DEFAULT_IDEAL_BUDGET;
use toricreg::poly::rat;
use toricreg::*;

fn poly(s: &str, r: usize) -> MultiPoly {
    MultiPoly::parse(s, r).unwrap()
}

fn dv(v: &[i64]) -> DegreeVector {
    DegreeVector(v.to_vec())
}

fn ideal(s: &str, n: usize) -> MonomialIdeal {
    MonomialIdeal::parse(s, n).unwrap()
}

fn plane_fixture() -> (ToricVariety, Vec<FoundIdeal>) {
    let p2 = projective_space(2).unwrap();
    let found = enumerate_saturated_ideals(&p2, &poly("3*t+1", 1)).unwrap().ideals;
    (p2, found)
}

#[test]
fn upset_fixtures() {
    let p2 = projective_space(2).unwrap();
    let meet = upset_intersect(&KUpset::principal(&p2, dv(&[2])), &KUpset::nef(&p2));
    assert_eq!(meet.generators().unwrap(), [dv(&[2])]);

    let x = product_of_projective_spaces(1, 1).unwrap();
    let meet = upset_intersect(&KUpset::principal(&x, dv(&[1, 0])), &KUpset::principal(&x, dv(&[0, 3])));
    assert_eq!(meet.generators().unwrap(), [dv(&[1, 3])]);

    let two = KUpset::new(&x, vec![dv(&[2, 0]), dv(&[0, 2])]);
    let one = KUpset::principal(&x, dv(&[1, 1]));
    let meet = upset_intersect(&two, &one);
    let gens: BTreeSet<DegreeVector> = meet.generators().unwrap().iter().cloned().collect();
    assert_eq!(gens, [dv(&[2, 1]), dv(&[1, 2])].into_iter().collect());
    for a in 0..=5 {
        for b in 0..=5 {
            let p = dv(&[a, b]);
            assert_eq!(meet.contains(&p), two.contains(&p) && one.contains(&p), "{p}");
        }
    }
    assert_eq!(meet.to_string(), "{(1,2),(2,1)} + K");
}

#[test]
fn filtration_bounds() {
    let p2 = projective_space(2).unwrap();
    let assume = RegularityAssumption::default_k();
    let lexish = ideal("x1^4, x1^3*x2", 3);
    let filt = stanley_decompose(&lexish, &mut DefaultChoice).unwrap().filtration();
    let bound = reg_bound_from_filtration(&p2, &lexish, &filt, &assume).unwrap();
    assert_eq!(bound.generators().unwrap(), [dv(&[3])]);

    // more pairs can only shrink the region
    let partial = reg_bound_from_filtration(&p2, &MonomialIdeal::prime(3, Face::from_one_based([1])), &filt[..1], &assume).unwrap();
    for t in -2..8 {
        assert!(!bound.contains(&dv(&[t])) || partial.contains(&dv(&[t])));
    }

    let prime = MonomialIdeal::prime(3, Face::from_one_based([2]));
    let pairs = stanley_decompose(&prime, &mut DefaultChoice).unwrap().filtration();
    assert_eq!(reg_bound_from_filtration(&p2, &prime, &pairs, &assume).unwrap(), KUpset::nef(&p2));
}

#[test]
fn polynomial_bounds() {
    let assume = RegularityAssumption::default_k();
    let p3 = projective_space(3).unwrap();
    assert_eq!(reg_bound_from_polynomial(&p3, &poly("1", 1), &assume).unwrap().region.generators().unwrap(), [dv(&[0])]);
    let x = product_of_projective_spaces(2, 1).unwrap();
    for l in 1..=3 {
        let b = reg_bound_from_polynomial(&x, &poly(&l.to_string(), 2), &assume).unwrap();
        assert_eq!(b.gotzmann_number, l as usize);
        assert_eq!(b.region.generators().unwrap(), [dv(&[l - 1, l - 1])]);
    }
}

#[test]
fn uniform_bound_is_weaker_than_each_filtration_bound() {
    let (p2, found) = plane_fixture();
    let assume = RegularityAssumption::default_k();
    let uniform = reg_bound_from_polynomial(&p2, &poly("3*t+1", 1), &assume).unwrap().region;
    assert_eq!(uniform.generators().unwrap(), [dv(&[3])]);
    for f in &found {
        let own = reg_bound_from_filtration(&p2, &f.ideal, &f.witness, &assume).unwrap();
        for g in uniform.generators().unwrap() {
            assert!(own.contains(g), "{}: {own} misses {g}", f.ideal);
        }
    }
}

#[test]
fn hilbert_function_equals_polynomial_beyond_the_bound() {
    let (p2, found) = plane_fixture();
    let assume = RegularityAssumption::default_k();
    let target = poly("3*t+1", 1);
    for f in &found {
        let k = reg_bound_from_filtration(&p2, &f.ideal, &f.witness, &assume).unwrap().generators().unwrap()[0].clone();
        for s in 1..=10 {
            let t = &k + &dv(&[s]);
            assert_eq!(target.eval_int(&t.0), rat(hilbert_function(&p2, &f.ideal, &t).unwrap() as i64), "{} at {t}", f.ideal);
        }
    }
}

#[test]
fn nice_filtrations_have_small_shifts() {
    let (p2, found) = plane_fixture();
    let order = graded_total_order(&p2, &GradedOrder::glex(1)).unwrap();
    for f in &found {
        let pairs = stanley_decompose(&f.ideal, &mut nice_strategy(order.faces())).unwrap().filtration();
        assert!(pairs.iter().all(|p| p.shift.total_degree() <= 3), "{}", f.ideal);
        assert!(has_nice_property(order.faces(), &pairs), "{}", f.ideal);
    }
}

#[test]
fn enumeration_soundness_and_witnesses() {
    let (p2, found) = plane_fixture();
    assert!(found.iter().any(|f| f.ideal == ideal("x1^4, x1^3*x2", 3)));
    for f in &found {
        assert!(is_b_saturated(&f.ideal, &p2).unwrap());
        assert_eq!(quotient_hilbert_polynomial(&p2, &f.ideal).unwrap(), poly("3*t+1", 1));
        assert_eq!(f.witness.len(), 4);
        assert!(verify_stanley(&f.ideal, &f.witness, VerifyMode::Filtration, None).ok);
    }
}

#[test]
fn face_orders() {
    let x = product_of_projective_spaces(2, 1).unwrap();
    let order = graded_total_order(&x, &GradedOrder::glex(2)).unwrap();
    assert_eq!(order.faces()[0], Face::EMPTY);
    assert_eq!(order.initial_term(Face::EMPTY).unwrap(), &[2, 1]);
    assert!(order.faces()[1..6].iter().all(|f| f.len() == 1));
    let p1 = projective_space(1).unwrap();
    let names: Vec<String> = graded_total_order(&p1, &GradedOrder::glex(1)).unwrap().faces().iter().map(|f| f.to_string()).collect();
    assert_eq!(names, vec!["{}", "{1}", "{2}"]);
}

#[test]
fn enumeration_does_not_depend_on_the_monomial_order() {
    let x = product_of_projective_spaces(1, 1).unwrap();
    for (p, count) in [("t1+t2+1", 4), ("2*t1+1", 0), ("t1+1", 2)] {
        let p = poly(p, 2);
        let forward = enumerate_saturated_ideals(&x, &p).unwrap();
        let opts = EnumerateOptions { order: Some(GradedOrder::with_priority(vec![1, 0]).unwrap()), ..EnumerateOptions::default() };
        let backward = enumerate_saturated_ideals_with(&x, &p, &opts).unwrap();
        let a: Vec<&MonomialIdeal> = forward.ideals.iter().map(|f| &f.ideal).collect();
        let b: Vec<&MonomialIdeal> = backward.ideals.iter().map(|f| &f.ideal).collect();
        assert_eq!(a, b, "{p}");
        assert_eq!(a.len(), count, "{p}");
    }
}

#[test]
fn enumeration_edge_cases() {
    let p2 = projective_space(2).unwrap();
    let whole = enumerate_saturated_ideals(&p2, &ring_hilbert_polynomial(&p2).unwrap()).unwrap();
    assert_eq!(whole.ideals.len(), 1);
    assert!(whole.ideals[0].ideal.is_zero());
    let x = product_of_projective_spaces(2, 1).unwrap();
    assert!(enumerate_saturated_ideals(&x, &poly("3*t2+1", 2)).unwrap().ideals.is_empty());
    for l in 1..=3 {
        assert_eq!(gotzmann_number(&p2, &poly(&l.to_string(), 1)).unwrap(), l);
    }
    assert_eq!(enumerate_saturated_ideals(&p2, &poly("t1+t2", 2)).unwrap_err().name(), "DimensionMismatch");
    let tight = EnumerateOptions { node_budget: 3, ..EnumerateOptions::default() };
    assert_eq!(enumerate_saturated_ideals_with(&p2, &poly("3*t+1", 1), &tight).unwrap_err(), Error::BudgetExceeded(3));
}

#[test]
fn upper_bound_matches_standard_graded_gotzmann_numbers() {
    let fixtures = ["1", "2", "3", "t+1", "2*t+1", "2*t+2", "3*t+1"];
    for d in [2usize, 3] {
        let x = projective_space(d).unwrap();
        for s in fixtures {
            let p = poly(s, 1);
            let rep = gotzmann_representation(&p).unwrap();
            let m = gotzmann_number(&x, &p).unwrap();
            assert_eq!(m, rep.len(), "P^{d}, {s}");
            assert_eq!(gotzmann_upper_bound(&x, &p).unwrap(), m, "P^{d}, {s}");
        }
    }
    let x = product_of_projective_spaces(2, 1).unwrap();
    for s in ["3*t1+1", "2*t1+t2+1", "t1+2*t2+1"] {
        let p = poly(s, 2);
        assert!(gotzmann_upper_bound(&x, &p).unwrap() >= gotzmann_number(&x, &p).unwrap());
    }
}

#[test]
fn lex_ideals_are_sharp() {
    for (s, n) in [("3*t+1", 3), ("2*t+2", 3), ("1", 2), ("t+1", 3), ("2*t+1", 4), ("t^2+2*t+2", 4)] {
        let p = poly(s, 1);
        let rep = gotzmann_representation(&p).unwrap();
        assert_eq!(rep.to_polynomial(), p);
        let (lex, filt) = lex_ideal(&p, n).unwrap();
        assert_eq!(lex.max_generator_degree() as usize, rep.len(), "{s}");
        assert!(verify_stanley(&lex, &filt, VerifyMode::Filtration, None).ok);
        let form = LexIdealForm::from_representation(&rep, n).unwrap();
        assert_eq!(form.ideal(), lex);
        let pn = projective_space(n - 1).unwrap();
        assert!(is_b_saturated(&lex, &pn).unwrap());
    }
}

#[test]
fn degree_set_building_blocks() {
    let p2 = projective_space(2).unwrap();
    let p = poly("3*t+1", 1);
    let ideals = ideals_generated_in_degrees(&p2, &[dv(&[4])], &p, DEFAULT_IDEAL_BUDGET).unwrap();
    assert_eq!(ideals.len(), 105);
    let survivors: BTreeSet<MonomialIdeal> = ideals
        .iter()
        .map(|i| b_saturate(i, &p2).unwrap())
        .filter(|s| !s.is_unit() && quotient_hilbert_polynomial(&p2, s).unwrap() == p)
        .collect();
    assert_eq!(survivors.len(), 30);
    let full = ideals_generated_in_degrees(&p2, &[dv(&[2])], &ring_hilbert_polynomial(&p2).unwrap(), DEFAULT_IDEAL_BUDGET).unwrap();
    assert_eq!(full, vec![MonomialIdeal::zero(3)]);
    let err = ideals_generated_in_degrees(&p2, &[dv(&[1])], &poly("5", 1), DEFAULT_IDEAL_BUDGET).unwrap_err();
    assert_eq!(err.name(), "InfeasibleHilbertValue");
    let err = ideals_generated_in_degrees(&p2, &[dv(&[4])], &p, 10).unwrap_err();
    assert_eq!(err, Error::BudgetExceeded(10));
}

#[test]
fn degree_sets_on_the_plane() {
    let p2 = projective_space(2).unwrap();
    let p = poly("3*t+1", 1);
    let ds = degree_set(&p2, &p, 11).unwrap();
    assert_eq!(ds.k, dv(&[3]));
    assert_eq!(ds.degrees[0], dv(&[3]));
    assert!(ds.check.passed());
    assert_eq!(ds.ideals.len(), 30);
    assert_eq!(ds.rounds.last().unwrap().failing, 0);
    for i in &ds.ideals {
        assert_eq!(quotient_hilbert_polynomial(&p2, i).unwrap(), p);
    }

    let without_bulk = DegreeSetOptions { bulk_points: false, ..DegreeSetOptions::default() };
    let ds = degree_set_with(&p2, &p, &without_bulk).unwrap();
    assert!(ds.rounds.iter().all(|r| r.bulk.is_empty()));
    assert!(ds.check.passed());

    let p1 = projective_space(1).unwrap();
    let ds = degree_set(&p1, &poly("1", 1), 0).unwrap();
    assert_eq!(ds.k, dv(&[0]));
    assert!(ds.rounds.len() <= 2);
}

#[test]
fn degree_sets_are_reproducible() {
    let p2 = projective_space(2).unwrap();
    let p = poly("2", 1);
    let a = degree_set(&p2, &p, 99).unwrap();
    let b = degree_set(&p2, &p, 99).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert_eq!(a.seed, 99);
}
