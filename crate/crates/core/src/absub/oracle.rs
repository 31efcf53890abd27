//! Exhaustive searches for witnesses against (**): `x` with
//! `[x, [x, a]] = 0` but `[x, a] ≠ 0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::exactq::{QVector, Rational};
use crate::liealg::{LieAlgebra, Subspace};

use super::AbsubError;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

const CHUNK: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarViolation {
    pub witness: QVector,
    /// A basis vector `v` of `a` with `[witness, v] ≠ 0`.
    pub ideal_basis_hit: QVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOutcome {
    pub checked: u64,
    pub violations: Vec<StarViolation>,
}

fn points(base: u64, dim: usize, budget: u64) -> Result<u64, AbsubError> {
    let needed = (base as u128).checked_pow(dim as u32);
    match needed {
        Some(k) if k <= budget as u128 => Ok(k as u64),
        _ => Err(AbsubError::BudgetExceeded {
            needed: needed.map_or_else(|| format!("{base}^{dim}"), |k| k.to_string()),
            budget,
        }),
    }
}

/// Digits of `idx` in base `base`, most significant first, shifted by `offset`.
fn digits(mut idx: u64, base: u64, dim: usize, offset: i64, out: &mut [i64]) {
    for slot in out[..dim].iter_mut().rev() {
        *slot = (idx % base) as i64 + offset;
        idx /= base;
    }
}

fn enumerate<F>(total: u64, base: u64, dim: usize, offset: i64, test: F) -> Vec<(Vec<i64>, usize)>
where
    F: Fn(&[i64]) -> Option<usize> + Sync,
{
    let chunks = total.div_ceil(CHUNK as u64) as usize;
    (0..chunks)
        .into_par_iter()
        .flat_map_iter(|c| {
            let start = c as u64 * CHUNK as u64;
            let end = (start + CHUNK as u64).min(total);
            let mut x = vec![0i64; dim];
            let mut hits = Vec::new();
            for idx in start..end {
                digits(idx, base, dim, offset, &mut x);
                if let Some(v) = test(&x) {
                    hits.push((x.clone(), v));
                }
            }
            hits
        })
        .collect()
}

fn lcm_denominators<'a>(values: impl Iterator<Item = &'a Rational>) -> BigInt {
    values.fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

/// Integer form of the problem: `D·[b_i, b_j]` and the basis of `a` cleared
/// of denominators. Zero patterns are unchanged.
struct IntTable {
    n: usize,
    table: Vec<Vec<Vec<(usize, i128)>>>,
    rows: Vec<Vec<(usize, i128)>>,
}

impl IntTable {
    fn new(g: &LieAlgebra, a: &Subspace, height: i64) -> Option<Self> {
        let n = g.dim();
        let d = lcm_denominators(
            (0..n).flat_map(|i| (0..n).flat_map(move |j| g.basis_bracket(i, j).iter().map(|(_, c)| c))),
        );
        let to_i128 = |c: &Rational, scale: &BigInt| (c * Rational::from_integer(scale.clone())).to_integer().to_i128();
        let mut max_t: i128 = 1;
        let mut table = vec![vec![Vec::new(); n]; n];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for (k, c) in g.basis_bracket(i, j) {
                    let v = to_i128(c, &d)?;
                    max_t = max_t.max(v.abs());
                    cell.push((*k, v));
                }
            }
        }
        let mut max_v: i128 = 1;
        let mut rows = Vec::new();
        for r in a.rows() {
            let s = lcm_denominators(r.entries().iter());
            let mut row = Vec::new();
            for (k, c) in r.nonzeros() {
                let v = to_i128(c, &s)?;
                max_v = max_v.max(v.abs());
                row.push((k, v));
            }
            rows.push(row);
        }
        // |[x, v]| ≤ n² h T V and |[x, [x, v]]| ≤ n² h T of that.
        let nn = (n * n) as i128;
        let y = nn.checked_mul(height as i128)?.checked_mul(max_t)?.checked_mul(max_v)?;
        nn.checked_mul(height as i128)?.checked_mul(max_t)?.checked_mul(y)?.checked_mul(4)?;
        Some(IntTable { n, table, rows })
    }

    fn bracket(&self, x: &[i64], v: &[(usize, i128)], out: &mut [i128]) {
        out.iter_mut().for_each(|o| *o = 0);
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for &(j, vj) in v {
                for &(k, c) in &self.table[i][j] {
                    out[k] += xi as i128 * vj * c;
                }
            }
        }
    }

    fn test(&self, x: &[i64]) -> Option<usize> {
        let mut y = vec![0i128; self.n];
        let mut z = vec![0i128; self.n];
        let mut hit = None;
        for (r, row) in self.rows.iter().enumerate() {
            self.bracket(x, row, &mut y);
            if y.iter().all(|&c| c == 0) {
                continue;
            }
            hit.get_or_insert(r);
            let ys: Vec<(usize, i128)> = y.iter().copied().enumerate().filter(|&(_, c)| c != 0).collect();
            self.bracket(x, &ys, &mut z);
            if z.iter().any(|&c| c != 0) {
                return None;
            }
        }
        hit
    }
}

fn exact_test(g: &LieAlgebra, a: &Subspace, x: &[i64]) -> Option<usize> {
    let xv = QVector::from_i64(x);
    let mut hit = None;
    for (r, v) in a.rows().iter().enumerate() {
        let y = g.bracket(&xv, v).expect("dims");
        if y.is_zero() {
            continue;
        }
        hit.get_or_insert(r);
        if !g.bracket(&xv, &y).expect("dims").is_zero() {
            return None;
        }
    }
    hit
}

/// Every `x` with integer coordinates in `[−height, height]` violating (**)
/// for `a`. Refuses when `(2·height + 1)^dim` exceeds `budget`.
pub fn star_grid_oracle(g: &LieAlgebra, a: &Subspace, height: u32, budget: u64) -> Result<OracleOutcome, AbsubError> {
    check_ambient(g, a)?;
    let n = g.dim();
    let h = height as i64;
    let total = points(2 * height as u64 + 1, n, budget)?;
    let base = 2 * height as u64 + 1;
    let hits = match IntTable::new(g, a, h) {
        Some(t) => enumerate(total, base, n, -h, |x| t.test(x)),
        None => enumerate(total, base, n, -h, |x| exact_test(g, a, x)),
    };
    Ok(finish(total, a, hits))
}

fn finish(total: u64, a: &Subspace, hits: Vec<(Vec<i64>, usize)>) -> OracleOutcome {
    let violations = hits
        .into_iter()
        .map(|(x, r)| StarViolation { witness: QVector::from_i64(&x), ideal_basis_hit: a.rows()[r].clone() })
        .collect();
    OracleOutcome { checked: total, violations }
}

fn check_ambient(g: &LieAlgebra, a: &Subspace) -> Result<(), AbsubError> {
    if a.ambient_dim() != g.dim() {
        return Err(AbsubError::Dimension(format!(
            "subspace of ambient dimension {} in an algebra of dimension {}",
            a.ambient_dim(),
            g.dim()
        )));
    }
    Ok(())
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn reduce_mod(c: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let den = c.denom().mod_floor(&pb).to_u64()?;
    if den == 0 {
        return None;
    }
    let num = c.numer().mod_floor(&pb).to_u64()?;
    Some(num * pow_mod(den, p - 2, p) % p)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// The analogue of [`star_grid_oracle`] over `𝔽_p`: all `p^dim` vectors.
/// Every structure constant and every coordinate of the basis of `a` must be
/// `p`-integral.
pub fn star_finite_field_check(g: &LieAlgebra, a: &Subspace, p: u64, budget: u64) -> Result<OracleOutcome, AbsubError> {
    check_ambient(g, a)?;
    if !is_prime(p) || p > u32::MAX as u64 {
        return Err(AbsubError::BadPrime { p, reason: "not a prime below 2^32".into() });
    }
    let n = g.dim();
    let bad = |what: &str| AbsubError::BadPrime { p, reason: format!("divides a denominator of {what}") };
    let mut table = vec![vec![Vec::new(); n]; n];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            for (k, c) in g.basis_bracket(i, j) {
                let v = reduce_mod(c, p).ok_or_else(|| bad("a structure constant"))?;
                if v != 0 {
                    cell.push((*k, v));
                }
            }
        }
    }
    let mut rows = Vec::new();
    for r in a.rows() {
        let mut row = Vec::new();
        for (k, c) in r.nonzeros() {
            row.push((k, reduce_mod(c, p).ok_or_else(|| bad("the ideal basis"))?));
        }
        rows.push(row);
    }
    let total = points(p, n, budget)?;
    let bracket = |x: &[i64], v: &[(usize, u64)], out: &mut [u64]| {
        out.iter_mut().for_each(|o| *o = 0);
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for &(j, vj) in v {
                let f = xi as u64 * vj % p;
                for &(k, c) in &table[i][j] {
                    out[k] = (out[k] + f * c) % p;
                }
            }
        }
    };
    let test = |x: &[i64]| {
        let mut y = vec![0u64; n];
        let mut z = vec![0u64; n];
        let mut hit = None;
        for (r, row) in rows.iter().enumerate() {
            bracket(x, row, &mut y);
            if y.iter().all(|&c| c == 0) {
                continue;
            }
            hit.get_or_insert(r);
            let ys: Vec<(usize, u64)> = y.iter().copied().enumerate().filter(|&(_, c)| c != 0).collect();
            bracket(x, &ys, &mut z);
            if z.iter().any(|&c| c != 0) {
                return None;
            }
        }
        hit
    };
    let hits = enumerate(total, p, n, 0, test);
    Ok(finish(total, a, hits))
}
