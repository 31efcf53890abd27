use std::collections::BTreeSet;

use proptest::prelude::*;

use super::*;
use crate::chevalley::{build_nplus, c2_unit_presentation, upper_triangular, GradedBasis};
use crate::exactq::{ratio, QVector};
use crate::liealg::{abelian, filiform, heisenberg, six_dim_example, LieAlgebra, Subspace};
use crate::rootsys::{RootSystem, RootType};

fn span(dim: usize, idx: &[usize]) -> Subspace {
    Subspace::coordinate(dim, idx.iter().map(|i| i - 1))
}

fn unit(dim: usize, i: usize) -> QVector {
    QVector::unit(dim, i - 1)
}

fn nplus(t: &str) -> GradedBasis {
    build_nplus(&RootSystem::build(t.parse().unwrap())).unwrap()
}

fn by_label(gb: &GradedBasis, l: &str) -> usize {
    (0..gb.dim()).find(|&i| gb.algebra().label(i) == l).unwrap_or_else(|| panic!("no basis vector {l}"))
}

#[test]
fn a_sequence_six_dim() {
    let g = six_dim_example();
    let a = a_sequence(&g);
    assert_eq!(a.dims(), vec![6, 5, 3]);
    assert_eq!(a.stabilized_at, 2);
    assert_eq!(*a.chain[1].subspace(), span(6, &[2, 3, 4, 5, 6]));
    assert_eq!(*a.a_of_g.subspace(), span(6, &[4, 5, 6]));
    assert_eq!(*a.a_of_g.subspace(), *g.upper_central_series()[2].subspace());
    assert!(a.chain.iter().all(|x| x.verified()));
    assert!(g.is_abelian(&a.a_of_g));
}

#[test]
fn a_sequence_small_cases() {
    let h = heisenberg();
    assert_eq!(*a_sequence(&h).a_of_g.subspace(), *h.center().subspace());
    let u4 = upper_triangular(4).unwrap();
    let a = a_sequence(u4.algebra());
    assert_eq!(a.a_of_g.dim(), 4);
    let block: Vec<usize> = ["E13", "E14", "E23", "E24"].iter().map(|l| by_label(&u4, l)).collect();
    assert_eq!(*a.a_of_g.subspace(), Subspace::coordinate(6, block));
    let u3 = upper_triangular(3).unwrap();
    assert_eq!(*a_sequence(u3.algebra()).a_of_g.subspace(), *u3.algebra().center().subspace());
    // A1 = C_g(Z2(g)) recomputed directly
    let g = six_dim_example();
    let whole = Subspace::whole(6);
    let z2 = g.upper_central_series()[1].subspace().clone();
    assert_eq!(*a_sequence(&g).chain[1].subspace(), g.centralizer(&whole, &z2));
}

#[test]
fn b_bound_six_dim_basis_order() {
    let g = six_dim_example();
    let b = b_upper_bound(&g, None);
    assert_eq!(b.bound, span(6, &[6]));
    assert!(b.exact);
    let dims: Vec<usize> = b.trace.iter().map(|(_, d)| *d).collect();
    assert_eq!(dims, vec![4, 3, 2, 1]);
    let w: Vec<QVector> = b.trace.iter().map(|(w, _)| w.clone()).collect();
    assert_eq!(w, vec![unit(6, 1), unit(6, 3), unit(6, 4), unit(6, 5)]);
    let cert = b.certificate(&g);
    assert_eq!(cert.witnesses, vec!["x1", "x3", "x4", "x5"]);
    assert!(cert.to_json().contains("\"method\": \"fixpoint\""));
}

#[test]
fn b_bound_six_dim_hand_order() {
    let g = six_dim_example();
    let order: Vec<QVector> = [1, 4, 5, 2].iter().map(|&i| unit(6, i)).collect();
    let b = b_upper_bound(&g, Some(&order));
    assert_eq!(b.bound, span(6, &[6]));
    assert!(b.exact);
    // x1 first: V ∩ ker ad(x1) = ⟨x1, x3, x4, x6⟩
    assert_eq!(b.trace[0], (unit(6, 1), 4));
}

#[test]
fn b_bound_c2_and_abelian() {
    let g = build_nplus(&RootSystem::build("C2".parse().unwrap())).unwrap();
    let b = b_upper_bound(g.algebra(), None);
    assert_eq!(b.bound.dim(), 3);
    assert!(!b.exact);
    let unit = c2_unit_presentation();
    let pb = b_upper_bound(unit.algebra(), None);
    assert_eq!(pb.bound, Subspace::coordinate(4, [1, 2, 3]));
    assert!(!pb.exact);
    let a = abelian(3);
    let ab = b_upper_bound(&a, None);
    assert_eq!(ab.bound.dim(), 3);
    assert!(ab.exact);
    assert!(ab.trace.is_empty());
}

#[test]
fn b_bound_filiform() {
    for n in 5..=7 {
        let f = filiform(n);
        let hyper = Subspace::coordinate(n, 1..n);
        assert_eq!(*a_sequence(&f).a_of_g.subspace(), hyper, "f{n}");
        let b = b_upper_bound(&f, None);
        assert_eq!(b.bound, hyper, "f{n}");
        assert!(!b.exact);
    }
}

#[test]
fn b_bound_invariants() {
    for g in
        [six_dim_example(), filiform(6), heisenberg(), nplus("B3").algebra().clone(), nplus("C3").algebra().clone()]
    {
        let b = b_upper_bound(&g, None);
        assert!(b.bound.contains_subspace(g.center().subspace()));
        // trace dims strictly decrease and each witness killed the pre-shrink V
        let mut v = Subspace::whole(g.dim());
        for (w, d) in &b.trace {
            assert!(g.ad_squared_kills(w, &v));
            let line = Subspace::span(g.dim(), vec![w.clone()]).unwrap();
            v = g.centralizer(&v, &line);
            assert_eq!(v.dim(), *d);
        }
        assert_eq!(v, b.bound);
        // one more pass changes nothing
        let n = g.dim();
        assert!((0..n).all(|i| {
            let w = QVector::unit(n, i);
            !g.ad_squared_kills(&w, &b.bound) || g.centralizer(&b.bound, &Subspace::coordinate(n, [i])) == b.bound
        }));
        if b.exact {
            assert_eq!(b.bound, *g.center().subspace());
            if g.dim() <= 9 {
                assert!(star_grid_oracle(&g, &b.bound, 1, DEFAULT_BUDGET).unwrap().violations.is_empty());
            }
        }
    }
}

#[test]
fn direct_sum_of_exact_cases() {
    let g1 = six_dim_example();
    let g2 = heisenberg();
    let g = g1.direct_sum(&g2);
    let b = b_upper_bound(&g, None);
    assert!(b.exact);
    let z = b_upper_bound(&g1, None).bound.embed(9, 0).sum(&b_upper_bound(&g2, None).bound.embed(9, 6));
    assert_eq!(b.bound, z);
}

#[test]
fn root_basis_shrink_g2() {
    let gb = nplus("G2");
    let eps = by_label(&gb, "ε");
    let theta = gb.highest();
    let j: BTreeSet<usize> = [eps, theta].into();
    let s = root_basis_shrink(&gb, &j).unwrap();
    assert_eq!(gb.algebra().label(s.witness), "3δ+ε");
    assert_eq!(s.removed, [eps].into());
    assert_eq!(s.remaining, [theta].into());
    for t in ["G2", "B3", "A3", "F4"] {
        let gb = nplus(t);
        assert_eq!(root_basis_shrink(&gb, &[gb.highest()].into()), None, "{t}");
    }
}

#[test]
fn root_basis_shrink_b3_full_set() {
    let gb = nplus("B3");
    let all: BTreeSet<usize> = (0..gb.dim()).collect();
    let s = root_basis_shrink(&gb, &all).unwrap();
    assert!(!s.removed.is_empty());
    assert!(s.remaining.len() < all.len());
    assert!(s.remaining.contains(&gb.highest()));
}

#[test]
fn theorem_b_equals_z() {
    let c = verify_b_equals_z("B3".parse().unwrap()).unwrap();
    assert!(c.exact);
    assert_eq!(c.trace.last().unwrap().dim_after, 1);
    assert_eq!(c.claim, "B(n+(B3)) = Z = <x_e1+e2>");
    let f = verify_b_equals_z("F4".parse().unwrap()).unwrap();
    assert_eq!(f.claim, "B(n+(F4)) = Z = <x_e1-e4>");
    assert!(matches!(verify_b_equals_z("C3".parse().unwrap()), Err(AbsubError::TypeCExcluded(_))));
    assert!(matches!(verify_b_equals_z("B2".parse().unwrap()), Err(AbsubError::TypeCExcluded(_))));
    for t in RootType::all_up_to(5) {
        if t.family() != crate::rootsys::Family::C && t.to_string() != "B2" {
            verify_b_equals_z(t).unwrap_or_else(|e| panic!("{t}: {e}"));
        }
    }
    let json = f.to_json();
    let back: Certificate = serde_json::from_str(&json).unwrap();
    assert_eq!(back, f);
    assert!(json.contains("shrink-chain"));
}

#[test]
fn type_c_ideal() {
    for (n, d) in [(2, 3), (3, 6), (5, 15)] {
        let m = type_c_max_abelian(n).unwrap();
        assert_eq!(m.ideal.dim(), d);
        assert!(m.ideal.verified() && m.abelian && m.self_centralizing);
        let b = b_upper_bound(m.nplus.algebra(), None);
        assert_eq!(b.bound, *m.ideal.subspace());
        assert!(!b.exact);
        assert_eq!(m.nplus.algebra().center().dim(), 1);
    }
}

#[test]
fn oracles_c2() {
    let m = type_c_max_abelian(2).unwrap();
    let g = m.nplus.algebra();
    let whole = Subspace::whole(4);
    let grid = star_grid_oracle(g, &whole, 1, DEFAULT_BUDGET).unwrap();
    let e = by_label(&m.nplus, "2e2");
    assert!(grid.violations.iter().any(|v| v.witness == QVector::unit(4, e)));
    assert!(star_grid_oracle(g, &m.ideal, 2, DEFAULT_BUDGET).unwrap().violations.is_empty());
    let ff = star_finite_field_check(g, &m.ideal, 3, DEFAULT_BUDGET).unwrap();
    assert_eq!(ff.checked, 81);
    assert!(ff.violations.is_empty());
    assert!(!star_finite_field_check(g, &whole, 3, DEFAULT_BUDGET).unwrap().violations.is_empty());
    // violations are genuine
    for v in &grid.violations {
        assert!(g.ad_squared_kills(&v.witness, &whole));
        assert!(!g.bracket(&v.witness, &v.ideal_basis_hit).unwrap().is_zero());
    }
}

#[test]
fn oracles_center_and_errors() {
    let g = six_dim_example();
    let z = g.center().into_subspace();
    assert!(star_grid_oracle(&g, &z, 2, DEFAULT_BUDGET).unwrap().violations.is_empty());
    assert!(star_finite_field_check(&g, &z, 5, DEFAULT_BUDGET).unwrap().violations.is_empty());
    assert!(matches!(star_grid_oracle(&g, &z, 50, 1000), Err(AbsubError::BudgetExceeded { .. })));
    assert!(matches!(star_finite_field_check(&g, &z, 4, DEFAULT_BUDGET), Err(AbsubError::BadPrime { .. })));
    let half = g.rescale(&[ratio(1, 2), ratio(1, 1), ratio(1, 1), ratio(1, 1), ratio(1, 1), ratio(1, 1)]).unwrap();
    assert!(matches!(star_finite_field_check(&half, &z, 2, DEFAULT_BUDGET), Err(AbsubError::BadPrime { .. })));
    assert!(star_finite_field_check(&half, &z, 3, DEFAULT_BUDGET).is_ok());
    assert!(star_grid_oracle(&g, &Subspace::whole(3), 1, DEFAULT_BUDGET).is_err());
}

#[test]
fn grid_fast_path_agrees_with_exact() {
    let g = c2_unit_presentation().algebra().clone();
    let q = [ratio(2, 3), ratio(-1, 1), ratio(5, 2), ratio(1, 7)];
    let h = g.rescale(&q).unwrap();
    let whole = Subspace::whole(4);
    let a = star_grid_oracle(&h, &whole, 1, DEFAULT_BUDGET).unwrap();
    let exact: Vec<QVector> = (0..81u32)
        .filter_map(|idx| {
            let x: Vec<i64> = (0..4).rev().map(|k| (idx / 3u32.pow(k) % 3) as i64 - 1).collect();
            let xv = QVector::from_i64(&x);
            let hits = whole.rows().iter().any(|v| !h.bracket(&xv, v).unwrap().is_zero());
            (hits && h.ad_squared_kills(&xv, &whole)).then_some(xv)
        })
        .collect();
    let got: Vec<QVector> = a.violations.into_iter().map(|v| v.witness).collect();
    assert_eq!(got, exact);
}

#[test]
fn z2_in_a_cases() {
    assert_eq!(z2_in_a(&six_dim_example()), Z2InA::Holds);
    assert_eq!(z2_in_a(&heisenberg()), Z2InA::Vacuous);
    assert!(z2_in_a_check(nplus("B3").algebra()));
    assert_eq!(z2_in_a(nplus("B3").algebra()), Z2InA::Holds);
}

#[test]
fn new_examples_on_six_dim() {
    let r = new_examples_check(&six_dim_example());
    assert!(r.bound_exact);
    assert_eq!(r.z2.dim(), 2);
}

fn rescalings() -> impl Strategy<Value = Vec<(i64, i64, bool)>> {
    prop::collection::vec((1i64..=4, 1i64..=3, any::<bool>()), 6)
}

fn rescale(g: &LieAlgebra, q: &[(i64, i64, bool)]) -> (LieAlgebra, Vec<crate::exactq::Rational>) {
    let f: Vec<_> = q[..g.dim()].iter().map(|&(a, b, s)| ratio(if s { -a } else { a }, b)).collect();
    (g.rescale(&f).unwrap(), f)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rescaling_keeps_a_and_b(q in rescalings()) {
        for g in [six_dim_example(), c2_unit_presentation().algebra().clone(), filiform(5)] {
            let (h, f) = rescale(&g, &q);
            prop_assert_eq!(a_sequence(&g).dims(), a_sequence(&h).dims());
            let wit: Vec<QVector> = (0..g.dim()).map(|i| QVector::unit(g.dim(), i).scale(&(crate::exactq::rat(1) / &f[i]))).collect();
            let bg = b_upper_bound(&g, None);
            let bh = b_upper_bound(&h, Some(&wit));
            prop_assert_eq!(bg.bound.dim(), bh.bound.dim());
            prop_assert_eq!(bg.exact, bh.exact);
            let dg: Vec<usize> = bg.trace.iter().map(|t| t.1).collect();
            let dh: Vec<usize> = bh.trace.iter().map(|t| t.1).collect();
            prop_assert_eq!(dg, dh);
        }
    }
}
