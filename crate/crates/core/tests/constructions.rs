//! Direct sums, the graph criterion, total sums, untwisting and the
//! Rota–Baxter example.

mod common;

use common::{all_maps, passing_entries, random_map, rng};
use trias_core::algebra::{check_axioms, parse_algebra, serialize_algebra};
use trias_core::catalog::{catalog, rb_example_errata, RB_EXAMPLE_WEIGHTS};
use trias_core::derivations::{derivation_space, is_derivation};
use trias_core::transforms::{
    direct_sum, graph_subalgebra_check, is_morphism, parse_bihom_algebra, rb_example_algebra, rb_example_operator,
    rota_baxter_check, serialize_bihom_algebra, total_sum, untwist,
};
use trias_core::{LinearMap, Scalar};

#[test]
fn direct_sums_of_two_dimensional_pairs() {
    let small: Vec<_> = passing_entries().into_iter().filter(|e| e.algebra.dim == 2).collect();
    assert!(small.len() >= 2);
    for x in &small {
        for y in &small {
            let s = direct_sum(&x.algebra, &y.algebra);
            assert!(check_axioms(&s).all_hold(), "{} ⊕ {}", x.id, y.id);
            let (dx, dy, ds) = (derivation_space(&x.algebra), derivation_space(&y.algebra), derivation_space(&s));
            assert!(ds.dim >= dx.dim + dy.dim, "{} ⊕ {}", x.id, y.id);
            for d in dx.basis {
                let mut flat = vec![Scalar::zero(); 16];
                for q in 0..2 {
                    for p in 0..2 {
                        flat[q * 4 + p] = d.entry(q, p).clone();
                    }
                }
                assert!(is_derivation(&s, &LinearMap::from_flat(4, flat)).unwrap().holds);
            }
        }
    }
}

#[test]
fn graph_criterion_matches_morphism_check() {
    let mut r = rng(40);
    let entries = passing_entries();
    let (mut yes, mut no) = (0, 0);
    for x in &entries {
        for y in entries.iter().filter(|y| y.algebra.dim == x.algebra.dim) {
            let n = x.algebra.dim;
            let mut maps: Vec<LinearMap> = (0..48).map(|_| random_map(&mut r, n, &[-1, 0, 0, 0, 1])).collect();
            maps.push(LinearMap::zero(n));
            maps.push(LinearMap::identity(n));
            for xi in maps {
                let graph = graph_subalgebra_check(&xi, &x.algebra, &y.algebra).unwrap();
                let morph = is_morphism(&xi, &x.algebra, &y.algebra).unwrap().holds;
                assert_eq!(graph, morph, "{} → {}: {}", x.id, y.id, xi.describe());
                if morph {
                    yes += 1;
                } else {
                    no += 1;
                }
            }
        }
    }
    assert!(yes > entries.len() && no > 0);
}

#[test]
fn graph_criterion_exhaustive_on_two_dimensional_pairs() {
    let small: Vec<_> = passing_entries().into_iter().filter(|e| e.algebra.dim == 2).collect();
    let maps = all_maps(2, &[-1, 0, 1]);
    for x in &small {
        for y in &small {
            for xi in &maps {
                assert_eq!(
                    graph_subalgebra_check(xi, &x.algebra, &y.algebra).unwrap(),
                    is_morphism(xi, &x.algebra, &y.algebra).unwrap().holds
                );
            }
        }
    }
}

#[test]
fn total_sum_is_bihom_associative_on_passing_entries() {
    for e in passing_entries() {
        let t = total_sum(&e.algebra);
        let report = t.associativity_report();
        assert!(report.holds, "{}: {:?}", e.id, report.violations.first());
        let back = parse_bihom_algebra(&serialize_bihom_algebra(&t)).unwrap();
        assert_eq!(back.mu, t.mu);
    }
}

#[test]
fn untwist_needs_invertible_twists() {
    for e in catalog() {
        let a = &e.algebra;
        let invertible = a.alpha.rank() == a.dim && a.beta.rank() == a.dim;
        assert_eq!(untwist(a).is_ok(), invertible, "{}", e.id);
    }
    let mut a = rb_example_algebra();
    a.alpha = LinearMap::identity(2);
    a.beta = LinearMap::identity(2);
    let c = untwist(&a).unwrap();
    assert_eq!(c.algebra.left, a.left);
    assert_eq!(c.axioms, check_axioms(&a));
}

#[test]
fn catalog_documents_round_trip_through_transformations() {
    for e in passing_entries() {
        let s = direct_sum(&e.algebra, &e.algebra);
        assert_eq!(parse_algebra(&serialize_algebra(&s)).unwrap(), s);
    }
}

#[test]
fn rota_baxter_example_at_three_weights() {
    let a = rb_example_algebra();
    assert!(check_axioms(&a).all_hold());
    let weights = RB_EXAMPLE_WEIGHTS.map(Scalar::from_int);
    let logged = rb_example_errata(&weights);
    for w in &weights {
        let report = rota_baxter_check(&a, &rb_example_operator(w)).unwrap();
        let is_logged = logged.iter().any(|r| r.check.ends_with(&format!("weight {w}")));
        assert_eq!(report.holds, !is_logged, "weight {w}");
        if !report.holds {
            // The only failing pair is (e_2, e_1).
            assert!(report.violations.iter().all(|v| v.witness.indices == vec![2, 1]));
        }
    }
    assert!(rota_baxter_check(&a, &rb_example_operator(&Scalar::zero())).unwrap().holds);
}
