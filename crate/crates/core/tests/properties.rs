use proptest::prelude::*;
use toricreg::poly::rat;
use toricreg::stanley::monomials_up_to_degree;
use toricreg::*;

fn arb_ideal(n: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens)
        .prop_filter("no unit generator", |gens| gens.iter().all(|g| g.iter().any(|&e| e > 0)))
        .prop_map(move |gens| MonomialIdeal::from_exponents(n, gens).unwrap())
}

fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u32..3, 0u32..3), -4i64..=4), 0..6)
        .prop_map(|terms| MultiPoly::from_terms(2, terms.into_iter().map(|((a, b), c)| (vec![a, b], rat(c)))))
}

fn dv(v: &[i64]) -> DegreeVector {
    DegreeVector(v.to_vec())
}

fn box2(lo: i64, hi: i64) -> impl Iterator<Item = DegreeVector> {
    (lo..=hi).flat_map(move |a| (lo..=hi).map(move |b| dv(&[a, b])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn upset_membership_is_a_conjunction(
        a in prop::collection::vec((-3i64..4, -3i64..4), 1..4),
        b in prop::collection::vec((-3i64..4, -3i64..4), 1..4),
    ) {
        let x = product_of_projective_spaces(1, 1).unwrap();
        let ua = KUpset::new(&x, a.iter().map(|&(p, q)| dv(&[p, q])).collect());
        let ub = KUpset::new(&x, b.iter().map(|&(p, q)| dv(&[p, q])).collect());
        let meet = upset_intersect(&ua, &ub);
        for p in box2(-5, 8) {
            prop_assert_eq!(meet.contains(&p), ua.contains(&p) && ub.contains(&p), "{}", p);
        }
    }

    #[test]
    fn filtration_bounds_shrink_as_pairs_are_added(ideal in arb_ideal(4, 3, 3), l in 0i64..3) {
        let x = hirzebruch(l).unwrap();
        let pairs = stanley_decompose(&ideal, &mut DefaultChoice).unwrap().filtration();
        let assume = RegularityAssumption::default_k();
        let region = match reg_bound_from_filtration(&x, &ideal, &pairs, &assume) {
            Ok(r) => r,
            Err(e) => {
                prop_assert_eq!(e.name(), "MissingBaseline");
                return Ok(());
            }
        };
        let saturated = is_b_saturated(&ideal, &x).unwrap();
        let mut prefix: Option<KUpset> = None;
        for pair in &pairs {
            if saturated && !x.is_face(pair.face.complement(4)) {
                continue;
            }
            let part = KUpset::nef(&x).translate(&x.degree(&pair.shift));
            let next = match &prefix {
                None => part,
                Some(p) => upset_intersect(p, &part),
            };
            if let Some(prev) = &prefix {
                for t in box2(-4, 12) {
                    prop_assert!(!next.contains(&t) || prev.contains(&t));
                }
            }
            prefix = Some(next);
        }
        let prefix = prefix.unwrap();
        for t in box2(-4, 12) {
            prop_assert_eq!(region.contains(&t), prefix.contains(&t), "{}", t);
        }
    }

    #[test]
    fn polynomials_print_and_parse_back(p in arb_poly()) {
        let text = p.to_string();
        prop_assert_eq!(MultiPoly::parse(&text, 2).unwrap(), p);
    }

    #[test]
    fn shifts_compose(p in arb_poly(), a in (-3i64..4, -3i64..4), b in (-3i64..4, -3i64..4)) {
        let twice = p.shift(&[a.0, a.1]).shift(&[b.0, b.1]);
        prop_assert_eq!(twice, p.shift(&[a.0 + b.0, a.1 + b.1]));
        for t in box2(-2, 2) {
            prop_assert_eq!(p.shift(&[a.0, a.1]).eval_int(&t.0), p.eval_int(&[t.0[0] + a.0, t.0[1] + a.1]));
        }
    }

    #[test]
    fn membership_agrees_with_irreducible_components(ideal in arb_ideal(3, 4, 4)) {
        let comps = irreducible_decomposition(&ideal).unwrap();
        for m in monomials_up_to_degree(3, 8) {
            prop_assert_eq!(ideal.contains(&m), comps.iter().all(|c| c.contains(&m)), "{}", m);
        }
        prop_assert_eq!(toricreg::monomial::intersect_components(3, &comps), ideal);
    }

    #[test]
    fn saturation_on_projective_space_is_classical(ideal in arb_ideal(3, 4, 4)) {
        let p2 = projective_space(2).unwrap();
        let sat = b_saturate(&ideal, &p2).unwrap();
        prop_assert_eq!(&sat, &ideal.saturate_by_maximal_ideal());
        prop_assert!(ideal.is_subset_of(&sat));
        prop_assert_eq!(b_saturate(&sat, &p2).unwrap(), sat);
    }

    #[test]
    fn saturation_does_not_change_hilbert_function_deep_in_k(ideal in arb_ideal(3, 3, 4)) {
        let p2 = projective_space(2).unwrap();
        let sat = b_saturate(&ideal, &p2).unwrap();
        // beyond n * (max exponent) every element of the saturation already lies in the ideal
        let deep = 3 * ideal.generators().iter().flat_map(|g| g.exponents().to_vec()).max().unwrap() as i64;
        for s in 0..4 {
            let t = dv(&[deep + s]);
            prop_assert_eq!(hilbert_function(&p2, &ideal, &t).unwrap(), hilbert_function(&p2, &sat, &t).unwrap());
        }
    }

    #[test]
    fn dfs_prefixes_decompose_partial_quotients(ideal in arb_ideal(3, 3, 3)) {
        let pairs = stanley_decompose(&ideal, &mut DefaultChoice).unwrap().filtration();
        for j in 0..=pairs.len() {
            let mut partial = ideal.clone();
            for later in &pairs[j..] {
                partial = partial.add_monomial(&later.shift);
            }
            let v = verify_stanley(&partial, &pairs[..j], VerifyMode::Decomposition, None);
            prop_assert!(v.ok, "prefix {} fails at {:?}", j, v.counterexample);
        }
    }

    #[test]
    fn nef_membership_matches_brute_force(l in 0i64..4) {
        let x = hirzebruch(l).unwrap();
        let cols: Vec<DegreeVector> = (0..x.n()).map(|i| x.degree_of_variable(i)).collect();
        for v in box2(-5, 5) {
            let brute = x.fan().max_cones.iter().all(|cone| {
                let hat: Vec<usize> = cone.complement(x.n()).to_vec();
                (0..=40i64).any(|a| (0..=40i64).any(|b| {
                    (0..2).all(|k| a * cols[hat[0]].0[k] + b * cols[hat[1]].0[k] == v.0[k])
                }))
            });
            prop_assert_eq!(x.nef_member(&v), brute, "{} on F{}", v, l);
        }
    }
}
