use super::*;
use crate::liealg::Subspace;

fn rs(s: &str) -> RootSystem {
    RootSystem::build(s.parse().unwrap())
}

fn nonzero_pairs(gb: &GradedBasis) -> usize {
    let n = gb.dim();
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| !gb.bracket_vanishes(i, j)).count()
}

#[test]
fn a2_is_heisenberg() {
    let gb = build_nplus(&rs("A2")).unwrap();
    assert_eq!(gb.dim(), 3);
    assert_eq!(nonzero_pairs(&gb), 1);
    assert_eq!(gb.algebra().nilpotency_class(), 2);
    assert_eq!(gb.algebra().center().dim(), 1);
}

#[test]
fn c2_support_matches_presentation() {
    let built = build_nplus(&rs("C2")).unwrap();
    let unit = c2_unit_presentation();
    assert_eq!(built.dim(), 4);
    for i in 0..4 {
        for j in 0..4 {
            let (bi, bj) = (built.basis_of(unit.root_of(i)), built.basis_of(unit.root_of(j)));
            assert_eq!(unit.bracket_vanishes(i, j), built.bracket_vanishes(bi, bj));
            if !unit.bracket_vanishes(i, j) {
                assert_eq!(unit.root_of(unit.k(i, j)), built.root_of(built.k(bi, bj)));
            }
        }
    }
    assert_eq!(unit.k(0, 2), 3);
    assert_eq!(unit.k(0, 3), 1);
    assert_eq!(unit.k(1, 2), 1);
    assert_eq!(unit.k(2, 0), 3);
    assert_eq!(nonzero_pairs(&unit), 2);
}

#[test]
fn every_type_both_methods() {
    for t in RootType::all_up_to(7) {
        let r = RootSystem::build(t);
        let mut methods = vec![Method::Extraspecial];
        if matches!(t.family(), Family::A | Family::B | Family::C | Family::D) {
            methods.push(Method::Matrix);
        }
        for m in methods {
            let gb = build_nplus_with(&r, m).unwrap_or_else(|e| panic!("{t} {m:?}: {e}"));
            assert_eq!(gb.dim(), r.num_positive());
            let nc = gb.structure_constants();
            assert!(nc.support_mismatches(&r).is_empty(), "{t} {m:?}");
            assert!(nc.magnitude_violations(&r).is_empty(), "{t} {m:?}: {:?}", nc.magnitude_violations(&r));
            assert!(nc.is_antisymmetric());
            assert_eq!(gb.algebra().nilpotency_class() as i64, r.height(r.highest_index()), "{t}");
            assert_eq!(*gb.algebra().center().subspace(), Subspace::coordinate(gb.dim(), [gb.highest()]));
        }
    }
}

#[test]
fn nilpotency_class_is_height_of_highest_root() {
    assert_eq!(build_nplus(&rs("A2")).unwrap().algebra().nilpotency_class(), 2);
    assert_eq!(build_nplus(&rs("G2")).unwrap().algebra().nilpotency_class(), 5);
}

#[test]
fn g2_constants() {
    let r = rs("G2");
    let nc = structure_constants(&r).unwrap();
    let mut mags: Vec<Rational> = nc.iter().map(|(_, c)| c.abs()).collect();
    mags.sort();
    mags.dedup();
    assert_eq!(mags, vec![rat(1), rat(2), rat(3)]);
    // the simple pair is extraspecial, ordered by index within height 1
    let d = r.simple().iter().copied().find(|&s| r.inner(s, s) == rat(2)).unwrap();
    let e = r.simple().iter().copied().find(|&s| r.inner(s, s) == rat(6)).unwrap();
    assert_eq!(nc.get(d.min(e), d.max(e)), Some(&rat(1)));
}

#[test]
fn e8_has_dimension_120() {
    let gb = build_nplus(&rs("E8")).unwrap();
    assert_eq!(gb.dim(), 120);
    assert!(gb.structure_constants().support_mismatches(gb.root_system()).is_empty());
    assert_eq!(gb.algebra().nilpotency_class(), 29);
}

#[test]
fn ad_kernels_do_not_depend_on_signs() {
    for t in ["A4", "B3", "C3", "D4"] {
        let r = rs(t);
        let a = build_nplus_with(&r, Method::Matrix).unwrap();
        let b = build_nplus_with(&r, Method::Extraspecial).unwrap();
        assert_ne!(a.structure_constants(), b.structure_constants(), "{t}: expected different sign choices");
        let n = r.num_positive();
        for i in 0..n {
            let line = Subspace::coordinate(n, [i]);
            let whole = Subspace::whole(n);
            let expected = Subspace::coordinate(n, (0..n).filter(|&j| r.sum(i, j).is_none()));
            assert_eq!(a.algebra().centralizer(&whole, &line), expected, "{t}");
            assert_eq!(b.algebra().centralizer(&whole, &line), expected, "{t}");
        }
    }
}

#[test]
fn matrices_lie_in_the_classical_algebra() {
    for t in ["A3", "B3", "C3", "D4", "B2"] {
        let r = rs(t);
        let real = matrix::realise(&r).unwrap();
        assert!(real.vectors.iter().all(|x| real.preserves_form(x)), "{t}");
    }
    assert!(matches!(matrix::realise(&rs("F4")), Err(ChevalleyError::NoMatrixRealisation(_))));
    assert!(matches!(build_nplus_with(&rs("G2"), Method::Matrix), Err(ChevalleyError::NoMatrixRealisation(_))));
}

#[test]
fn upper_triangular_family() {
    let u2 = upper_triangular(2).unwrap();
    assert_eq!(u2.dim(), 1);
    assert!(u2.algebra().is_abelian_algebra());
    assert_eq!(upper_triangular(4).unwrap().dim(), 6);
    let u3 = upper_triangular(3).unwrap();
    let a2 = build_nplus_with(&rs("A2"), Method::Matrix).unwrap();
    assert_eq!(u3.algebra().entries(), a2.algebra().entries());
    assert!(upper_triangular(1).is_err());
}

#[test]
fn upper_triangular_bracket_formula() {
    let n = 5;
    let u = upper_triangular(n).unwrap();
    let idx = |i: usize, j: usize| (0..u.dim()).find(|&b| u.algebra().label(b) == format!("E{i}{j}")).unwrap();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in 1..=n {
                for l in k + 1..=n {
                    let mut want = vec![0i64; u.dim()];
                    if j == k {
                        want[idx(i, l)] += 1;
                    }
                    if l == i {
                        want[idx(k, j)] -= 1;
                    }
                    let got = u.algebra().bracket(&unit(u.dim(), idx(i, j)), &unit(u.dim(), idx(k, l))).unwrap();
                    assert_eq!(got, QVector::from_i64(&want), "[E{i}{j}, E{k}{l}]");
                }
            }
        }
    }
}

fn unit(n: usize, i: usize) -> QVector {
    QVector::unit(n, i)
}

#[test]
fn grading_rejects_bad_tables() {
    let r = rs("A2");
    let h = crate::liealg::heisenberg();
    let a2 = build_nplus(&r).unwrap();
    // heisenberg with x3 placed on a simple root is not graded
    let top = r.highest_index();
    let mut root_of: Vec<usize> = (0..3).filter(|&i| i != top).collect();
    root_of.insert(0, top);
    assert!(GradedBasis::new(h.clone(), r.clone(), root_of).is_err());
    assert!(GradedBasis::new(h, r.clone(), vec![0, 0, 1]).is_err());
    assert_eq!(a2.grading().len(), 3);
}
