use std::collections::BTreeSet;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::absub::{
    a_sequence, b_upper_bound, new_examples_check, star_finite_field_check, star_grid_oracle, type_c_max_abelian,
    vector_label, verify_b_equals_z, z2_in_a, AbsubError, Z2InA, DEFAULT_BUDGET,
};
use crate::chevalley::{build_nplus, upper_triangular};
use crate::exactq::QVector;
use crate::liealg::{examples, Checks, LieAlgebra, Subspace};
use crate::rootsys::{Family, RootSystem, RootType};

use super::{fixture, fixture_names, CaseResult, HarnessError, Report};

pub const SUITES: [&str; 6] =
    ["lemma-root-elim", "theorem-B-eq-Z", "type-C", "prop-A-neq-Z", "example-6d", "upper-triangular"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    /// Largest rank of root system visited by the suites.
    pub max_rank: usize,
    /// Cap on oracle evaluations.
    pub budget: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options { max_rank: 8, budget: DEFAULT_BUDGET }
    }
}

pub fn run_suite(name: &str, opts: &Options) -> Result<Report, HarnessError> {
    let cases = match name {
        "lemma-root-elim" => root_elimination(opts),
        "theorem-B-eq-Z" => b_equals_z(opts),
        "type-C" => type_c(opts),
        "prop-A-neq-Z" => a_neq_z(opts),
        "example-6d" => example_6d(),
        "upper-triangular" => upper_triangular_suite(opts)?,
        _ => return Err(HarnessError::UnknownSuite(name.to_string(), SUITES.join(", "))),
    };
    Ok(Report::new(name, cases))
}

fn labels(g: &LieAlgebra, s: &Subspace) -> Vec<String> {
    s.rows().iter().map(|v| vector_label(g, v)).collect()
}

fn types(opts: &Options, keep: impl Fn(RootType) -> bool) -> Vec<RootType> {
    RootType::all_up_to(opts.max_rank).into_iter().filter(|&t| keep(t)).collect()
}

fn root_elimination(opts: &Options) -> Vec<CaseResult> {
    let locus = "root system elimination: 2α+β ∉ Φ";
    types(opts, |_| true)
        .par_iter()
        .map(|&t| {
            let rs = RootSystem::build(t);
            let rep = rs.two_alpha_beta_report();
            let expect_empty = matches!(t.family(), Family::A | Family::D | Family::E);
            let mut ok = rep.violations.is_empty() == expect_empty;
            let mut claim = if expect_empty {
                format!("{t}: no α, β ∈ Φ⁺ with 2α+β ∈ Φ")
            } else {
                format!("{t}: some α, β ∈ Φ⁺ have 2α+β ∈ Φ")
            };
            if t.family() == Family::B {
                let pair = ("e2".to_string(), "e1-e2".to_string());
                ok &= rep.violations.contains(&pair);
                claim.push_str(", including (e2, e1-e2)");
            }
            let sample: Vec<_> = rep.violations.iter().take(6).collect();
            CaseResult::new(t.to_string(), claim, locus, ok, json!({ "count": rep.count, "sample": sample }))
        })
        .collect()
}

fn b_equals_z(opts: &Options) -> Vec<CaseResult> {
    let locus = "B(g) = Z(g) for positive root subalgebras outside type C";
    types(opts, |t| t.family() != Family::C && !(t.family() == Family::B && t.rank() == 2))
        .par_iter()
        .map(|&t| {
            let claim = format!("{t}: shrink chain ends at {{θ}} and the fixpoint bound equals the centre");
            match verify_b_equals_z(t) {
                Ok(c) => {
                    let data = json!({ "steps": c.trace.len(), "claim": c.claim, "witnesses": c.witnesses });
                    CaseResult::new(t.to_string(), claim, locus, c.exact, data)
                }
                Err(e) => CaseResult::new(t.to_string(), claim, locus, false, json!({ "error": e.to_string() })),
            }
        })
        .collect()
}

fn binom2(n: usize) -> usize {
    n * (n + 1) / 2
}

fn oracle_case(
    id: String,
    claim: String,
    locus: &str,
    expect_empty: bool,
    run: Result<crate::absub::OracleOutcome, AbsubError>,
) -> CaseResult {
    match run {
        Ok(o) => {
            let first = o
                .violations
                .first()
                .map(|v| json!({ "witness": v.witness.to_string(), "hit": v.ideal_basis_hit.to_string() }));
            let data = json!({ "checked": o.checked, "violations": o.violations.len(), "first": first });
            CaseResult::new(id, claim, locus, o.violations.is_empty() == expect_empty, data)
        }
        Err(e @ AbsubError::BudgetExceeded { .. }) => {
            CaseResult::evidence(id, format!("{claim} (not run)"), locus, json!({ "skipped": e.to_string() }))
        }
        Err(e) => CaseResult::new(id, claim, locus, false, json!({ "error": e.to_string() })),
    }
}

fn type_c(opts: &Options) -> Vec<CaseResult> {
    let locus = "type C: maximal abelian ideal spanned by e_i + e_j";
    let ranks: Vec<usize> = (2..=opts.max_rank.max(2)).collect();
    let mut cases: Vec<CaseResult> = ranks
        .par_iter()
        .flat_map_iter(|&n| {
            let mut out = Vec::new();
            let m = match type_c_max_abelian(n) {
                Ok(m) => m,
                Err(e) => {
                    out.push(CaseResult::new(format!("C{n}"), "build", locus, false, json!({ "error": e.to_string() })));
                    return out;
                }
            };
            let g = m.nplus.algebra();
            let b = b_upper_bound(g, None);
            let center = g.center().dim();
            let ok = m.ideal.dim() == binom2(n)
                && m.ideal.verified()
                && m.abelian
                && m.self_centralizing
                && b.bound == *m.ideal.subspace()
                && !b.exact
                && center == 1;
            out.push(CaseResult::new(
                format!("C{n}"),
                format!("C{n}: ideal of dim {} = C({},2), self-centralizing, equal to the fixpoint bound; centre of dim 1", binom2(n), n + 1),
                locus,
                ok,
                json!({ "ideal_dim": m.ideal.dim(), "bound_dim": b.bound.dim(), "exact": b.exact, "center_dim": center }),
            ));
            if n <= 3 {
                out.push(oracle_case(
                    format!("C{n}/grid-2"),
                    format!("C{n}: no (**) violation for the ideal on the height-2 grid"),
                    locus,
                    true,
                    star_grid_oracle(g, &m.ideal, 2, opts.budget),
                ));
                for p in [3, 5] {
                    out.push(oracle_case(
                        format!("C{n}/F{p}"),
                        format!("C{n}: no (**) violation for the ideal over F{p}"),
                        locus,
                        true,
                        star_finite_field_check(g, &m.ideal, p, opts.budget),
                    ));
                }
            }
            if n == 2 {
                let whole = Subspace::whole(g.dim());
                out.push(oracle_case(
                    "C2/g-grid-1".into(),
                    "C2: a = g violates (**) on the height-1 grid".into(),
                    locus,
                    false,
                    star_grid_oracle(g, &whole, 1, opts.budget),
                ));
                out.push(oracle_case(
                    "C2/g-F3".into(),
                    "C2: a = g violates (**) over F3".into(),
                    locus,
                    false,
                    star_finite_field_check(g, &whole, 3, opts.budget),
                ));
            }
            out
        })
        .collect();
    cases.sort_by_key(|c| ranks.iter().position(|n| c.id.starts_with(&format!("C{n}"))).unwrap_or(usize::MAX));
    cases
}

/// The tabulated second-centre root sets, by type.
fn z2_table(t: RootType) -> Option<Vec<String>> {
    let n = t.rank();
    let s = |xs: &[&str]| Some(xs.iter().map(|x| x.to_string()).collect());
    match (t.family(), n) {
        (Family::A, n) if n >= 3 => Some(vec![format!("e1-e{}", n + 1), format!("e1-e{n}"), format!("e2-e{}", n + 1)]),
        (Family::B, n) if n >= 3 => s(&["e1+e2", "e1+e3"]),
        (Family::D, _) => s(&["e1+e2", "e1+e3"]),
        (Family::E, 8) => s(&["e1-e8", "e2-e8"]),
        (Family::E, 7) => s(&["e3-e8", "e4-e8"]),
        (Family::E, 6) => s(&["e4-e8", "e5-e8"]),
        (Family::F, _) => s(&["e1-e4", "e2-e4"]),
        (Family::G, _) => s(&["3δ+2ε", "3δ+ε"]),
        _ => None,
    }
}

fn a_neq_z(opts: &Options) -> Vec<CaseResult> {
    let locus = "A(G) ≠ Z(G): second-centre root sets";
    types(opts, |_| true)
        .par_iter()
        .map(|&t| {
            let rs = RootSystem::build(t);
            let gb = match build_nplus(&rs) {
                Ok(gb) => gb,
                Err(e) => {
                    return CaseResult::new(t.to_string(), "build", locus, false, json!({ "error": e.to_string() }))
                }
            };
            let g = gb.algebra();
            let z2_roots = rs.z2_root_set();
            let got: BTreeSet<String> = rs.labels(&z2_roots).into_iter().collect();
            let z2 = g.nth_center_within(&Subspace::whole(g.dim()), 2);
            let span = Subspace::coordinate(g.dim(), z2_roots.iter().map(|&r| gb.basis_of(r)));
            let status = z2_in_a(g);
            let a = a_sequence(g).a_of_g;
            let center = g.center();
            let data = json!({
                "z2_roots": got,
                "sums_outside": rs.z2_pairwise_sums_outside(),
                "z2_abelian": g.is_abelian(&z2),
                "z2_in_a": format!("{status:?}"),
                "a_dim": a.dim(),
                "center_dim": center.dim(),
            });
            let mut ok = span == z2 && status != Z2InA::Fails;
            let claim = match z2_table(t) {
                Some(want) => {
                    let want: BTreeSet<String> = want.into_iter().collect();
                    ok &= got == want && rs.z2_pairwise_sums_outside() && g.is_abelian(&z2);
                    ok &= status == Z2InA::Holds && a.dim() > center.dim();
                    format!(
                        "{t}: Z₂ roots {{{}}}, pairwise sums leave Φ, so Z₂ ⊆ A(g) and A(g) ≠ Z(g)",
                        want.into_iter().collect::<Vec<_>>().join(", ")
                    )
                }
                None => format!("{t}: Z₂ spanned by its root set; implication Z₂ ⊆ A(g) not violated"),
            };
            CaseResult::new(t.to_string(), claim, locus, ok, data)
        })
        .collect()
}

fn example_6d() -> Vec<CaseResult> {
    let locus = "six-dimensional class-5 example";
    let g = examples::six_dim_example();
    let n = 6;
    let span = |idx: &[usize]| Subspace::coordinate(n, idx.iter().map(|i| i - 1));
    let mut out = Vec::new();
    let ucs: Vec<usize> = g.upper_central_series().iter().map(|z| z.dim()).collect();
    out.push(CaseResult::new(
        "ucs",
        "upper central series dims [1,2,3,4,6]",
        locus,
        ucs == [1, 2, 3, 4, 6],
        json!({ "dims": ucs }),
    ));
    out.push(CaseResult::new(
        "class",
        "nilpotency class 5",
        locus,
        g.nilpotency_class() == 5,
        json!({ "class": g.nilpotency_class() }),
    ));
    let z2 = g.upper_central_series()[1].subspace().clone();
    out.push(CaseResult::new(
        "z2-abelian",
        "Z₂(g) = ⟨x5,x6⟩ is abelian",
        locus,
        z2 == span(&[5, 6]) && g.is_abelian(&z2),
        json!({ "z2": labels(&g, &z2) }),
    ));
    let a = a_sequence(&g);
    let ok = a.dims() == [6, 5, 3] && *a.a_of_g.subspace() == span(&[4, 5, 6]) && a.chain.iter().all(|x| x.verified());
    out.push(CaseResult::new(
        "a-chain",
        "A-chain dims [6,5,3] stabilising at ⟨x4,x5,x6⟩",
        locus,
        ok,
        json!({ "dims": a.dims(), "a": labels(&g, &a.a_of_g) }),
    ));
    let b = b_upper_bound(&g, None);
    out.push(CaseResult::new(
        "b-fixpoint",
        "fixpoint with basis witnesses reaches ⟨x6⟩ = Z(g), exact",
        locus,
        b.exact && b.bound == span(&[6]),
        serde_json::to_value(b.certificate(&g)).expect("json"),
    ));
    let order: Vec<QVector> = [1, 4, 5, 2].iter().map(|&i| QVector::unit(n, i - 1)).collect();
    let bh = b_upper_bound(&g, Some(&order));
    out.push(CaseResult::new(
        "b-hand-order",
        "witnesses x1, x4, x5, x2 also reach ⟨x6⟩",
        locus,
        bh.exact && bh.bound == span(&[6]),
        serde_json::to_value(bh.certificate(&g)).expect("json"),
    ));
    out.push(CaseResult::new("z2-in-a", "Z₂(g) ⊆ A(g)", locus, z2_in_a(&g) == Z2InA::Holds, Value::Null));
    let mut entries = g.entries();
    for e in entries.iter_mut() {
        if (e.i, e.j) == (1, 3) {
            *e = crate::liealg::BracketEntry::simple(1, 3, 5, 1);
        }
    }
    let bad = LieAlgebra::from_constants(n, None, entries, Checks::Full);
    let rejected = matches!(bad, Err(crate::liealg::LieError::Jacobi { triple: (0, 1, 3), .. }));
    out.push(CaseResult::new(
        "perturbed",
        "replacing [x2,x4]=x5 by x6 breaks Jacobi on (x1,x2,x4)",
        locus,
        rejected,
        json!({ "error": bad.err().map(|e| e.to_string()) }),
    ));
    out
}

fn upper_triangular_suite(opts: &Options) -> Result<Vec<CaseResult>, HarnessError> {
    let locus = "strictly upper triangular matrices";
    let mut out = Vec::new();
    let u3 = upper_triangular(3)?;
    let a3 = a_sequence(u3.algebra());
    out.push(CaseResult::new(
        "n=3",
        "class 2, so A(g) = Z(g)",
        locus,
        *a3.a_of_g.subspace() == *u3.algebra().center().subspace(),
        json!({ "a_dim": a3.a_of_g.dim() }),
    ));
    for n in 4..=opts.max_rank.clamp(4, 8) {
        let u = upper_triangular(n)?;
        let g = u.algebra();
        let k = n / 2;
        let a = a_sequence(g);
        let block_of = |cols: std::ops::RangeInclusive<usize>| {
            let idx: Vec<usize> = (1..=k)
                .flat_map(|i| cols.clone().map(move |j| (i, j)))
                .map(|(i, j)| (0..u.dim()).find(|&b| u.root(b) == &e_diff(n, i, j)).expect("root"))
                .collect();
            Subspace::coordinate(u.dim(), idx)
        };
        let block = block_of(k + 1..=n);
        let data = json!({ "chain_dims": a.dims(), "a_dim": a.a_of_g.dim(), "block_dim": k * (n - k), "a": labels(g, &a.a_of_g) });
        if n == 4 {
            out.push(CaseResult::new(
                "n=4",
                "A(g) is the 2×2 upper-right block, dim 4 = k(n−k)",
                locus,
                *a.a_of_g.subspace() == block,
                data,
            ));
        } else {
            let matches = *a.a_of_g.subspace() == block;
            let corner = *a.a_of_g.subspace() == block_of(n - k + 1..=n);
            out.push(CaseResult::evidence(
                format!("n={n}"),
                format!(
                    "A(g) dim {}; k(n−k) block: {}; k×k corner: {}",
                    a.a_of_g.dim(),
                    if matches { "equal" } else { "differs" },
                    if corner { "equal" } else { "differs" }
                ),
                locus,
                data,
            ));
        }
    }
    Ok(out)
}

fn e_diff(n: usize, i: usize, j: usize) -> QVector {
    let mut v = vec![0i64; n];
    v[i - 1] = 1;
    v[j - 1] = -1;
    QVector::from_i64(&v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootCheck {
    TwoAlphaBeta,
    Z2Set,
}

impl FromStr for RootCheck {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self, HarnessError> {
        match s {
            "two-alpha-beta" => Ok(RootCheck::TwoAlphaBeta),
            "z2-set" => Ok(RootCheck::Z2Set),
            _ => Err(HarnessError::UnknownOption("check", s.to_string())),
        }
    }
}

pub fn rootsys_report(t: RootType, checks: &[RootCheck]) -> Report {
    let rs = RootSystem::build(t);
    let mut cases = vec![CaseResult::evidence(
        format!("{t}"),
        format!("{} positive roots, θ = {}", rs.num_positive(), rs.label(rs.highest_index())),
        "root system",
        serde_json::to_value(rs.report()).expect("json"),
    )];
    for c in checks {
        cases.push(match c {
            RootCheck::TwoAlphaBeta => {
                let r = rs.two_alpha_beta_report();
                CaseResult::evidence(
                    format!("{t}/two-alpha-beta"),
                    format!("{} pairs (α, β) with 2α+β ∈ Φ", r.count),
                    "root system elimination: 2α+β ∉ Φ",
                    serde_json::to_value(r).expect("json"),
                )
            }
            RootCheck::Z2Set => {
                let r = rs.z2_report();
                CaseResult::evidence(
                    format!("{t}/z2-set"),
                    format!("Z₂ root set {{{}}}, abelian: {}", r.set.join(", "), r.abelian),
                    "A(G) ≠ Z(G): second-centre root sets",
                    serde_json::to_value(r).expect("json"),
                )
            }
        });
    }
    Report::new("rootsys", cases)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Compute {
    Ucs,
    Center,
    Class,
    A,
    B,
    Z2InA,
}

impl FromStr for Compute {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self, HarnessError> {
        match s {
            "ucs" => Ok(Compute::Ucs),
            "center" | "centre" => Ok(Compute::Center),
            "class" => Ok(Compute::Class),
            "a" => Ok(Compute::A),
            "b" => Ok(Compute::B),
            "z2-in-a" => Ok(Compute::Z2InA),
            _ => Err(HarnessError::UnknownOption("computation", s.to_string())),
        }
    }
}

/// One case per requested computation on `g`.
pub fn algebra_report(name: &str, g: &LieAlgebra, computes: &[Compute]) -> Report {
    let locus = "algebra";
    let center = g.center();
    let cases = computes
        .iter()
        .map(|c| match c {
            Compute::Ucs => {
                let dims: Vec<usize> = g.upper_central_series().iter().map(|z| z.dim()).collect();
                CaseResult::evidence("ucs", format!("upper central series dims {dims:?}"), locus, json!({ "dims": dims }))
            }
            Compute::Center => CaseResult::evidence(
                "center",
                format!("centre of dim {}", center.dim()),
                locus,
                json!({ "basis": labels(g, &center) }),
            ),
            Compute::Class => {
                let c = g.nilpotency_class();
                CaseResult::evidence("class", format!("nilpotency class {c}"), locus, json!({ "class": c }))
            }
            Compute::A => {
                let a = a_sequence(g);
                let eq = *a.a_of_g.subspace() == *center.subspace();
                CaseResult::new(
                    "a",
                    format!("A-chain dims {:?}, A(g) of dim {}{}", a.dims(), a.a_of_g.dim(), if eq { " = Z(g)" } else { "" }),
                    locus,
                    g.is_abelian(&a.a_of_g) && a.chain.iter().all(|x| x.verified()),
                    json!({ "chain_dims": a.dims(), "a_dim": a.a_of_g.dim(), "a": labels(g, &a.a_of_g), "equals_center": eq }),
                )
            }
            Compute::B => {
                let b = b_upper_bound(g, None);
                let claim = if b.exact {
                    format!("B(g) = Z(g), dim {} (exact)", b.bound.dim())
                } else {
                    format!("B(g) ⊆ bound of dim {} (not exact)", b.bound.dim())
                };
                let mut data = serde_json::to_value(b.certificate(g)).expect("json");
                data["bound"] = json!(labels(g, &b.bound));
                data["bound_dim"] = json!(b.bound.dim());
                CaseResult::new("b", claim, locus, b.bound.contains_subspace(&center), data)
            }
            Compute::Z2InA => {
                let s = z2_in_a(g);
                CaseResult::new("z2-in-a", format!("Z₂ ⊆ A(g): {s:?}"), locus, s != Z2InA::Fails, Value::Null)
            }
        })
        .collect();
    Report::new(format!("algebra {name}"), cases)
}

/// `a_sequence`, the fixpoint bound and the search for an ideal `h ⊇ bound`
/// with exact bound and `Z(h) = Z₂(g)` over every builtin. Evidence only.
pub fn explore(opts: &Options) -> Result<Report, HarnessError> {
    let locus = "closing conjecture: B = Z whenever the hypothesis holds";
    let names = fixture_names(opts.max_rank);
    let fixtures = names.iter().map(|n| fixture(n)).collect::<Result<Vec<_>, _>>()?;
    let cases = fixtures
        .par_iter()
        .map(|f| {
            let g = &f.algebra;
            let a = a_sequence(g);
            let r = new_examples_check(g);
            let hyp = r.witness.as_ref().map(|(n, _)| n.clone());
            let claim = format!(
                "A dim {}, bound dim {} ({}), hypothesis {}",
                a.a_of_g.dim(),
                r.bound.dim(),
                if r.bound_exact { "exact" } else { "upper bound" },
                match &hyp {
                    Some(h) => format!("holds via h = {h}"),
                    None => "not found".into(),
                }
            );
            CaseResult::evidence(
                f.name.clone(),
                claim,
                locus,
                json!({
                    "dim": g.dim(),
                    "a_dim": a.a_of_g.dim(),
                    "center_dim": g.center().dim(),
                    "z2_dim": r.z2.dim(),
                    "bound_dim": r.bound.dim(),
                    "bound_exact": r.bound_exact,
                    "hypothesis_ideal": hyp,
                }),
            )
        })
        .collect();
    Ok(Report::new("explore", cases))
}
