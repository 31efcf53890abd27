//! Chevalley constants on positive root pairs from extraspecial pairs.
//!
//! Positive roots are ordered by height, then by index. For each non-simple
//! `ξ` the extraspecial pair `(α', β')` has `α'` minimal with `ξ − α' ∈ Φ⁺`;
//! it gets `N = p + 1`. Every other special pair summing to `ξ` follows from
//! the four-root identity
//!
//! ```text
//! N(α,β) = |ξ|² / N(α',β') · ( N(β,−α') N(α,−β') / |β−α'|²
//!                            + N(−α',α) N(β,−β') / |α−α'|² )
//! ```
//!
//! and mixed-sign constants reduce to positive ones through
//! `N(a,b)/|c|² = N(b,c)/|a|² = N(c,a)/|b|²` for `a + b + c = 0` and
//! `N(−a,−b) = −N(a,b)`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::ChevalleyError;
use crate::exactq::{rat, Rational};
use crate::rootsys::RootSystem;

/// `max { k ≥ 0 : β − kα ∈ Φ }` for root indices `a`, `b`.
pub fn string_below(rs: &RootSystem, a: usize, b: usize) -> usize {
    let mut k = 0;
    let mut v = rs.root(b) - rs.root(a);
    while rs.contains(&v) {
        k += 1;
        v = &v - rs.root(a);
    }
    k
}

pub(super) struct Solver<'a> {
    rs: &'a RootSystem,
    n: usize,
    table: Vec<Vec<Option<Rational>>>,
}

impl<'a> Solver<'a> {
    pub(super) fn new(rs: &'a RootSystem) -> Self {
        let n = rs.num_positive();
        Solver { rs, n, table: vec![vec![None; n]; n] }
    }

    fn norm(&self, i: usize) -> Rational {
        self.rs.inner(i, i)
    }

    fn positive(&self, a: usize, b: usize) -> Result<Rational, ChevalleyError> {
        self.table[a][b].clone().ok_or_else(|| {
            ChevalleyError::SignAssignment(format!(
                "N({}, {}) needed before it was assigned",
                self.rs.label(a),
                self.rs.label(b)
            ))
        })
    }

    /// `N(a, b)` for arbitrary roots with `a + b ∈ Φ`.
    fn any(&self, a: usize, b: usize) -> Result<Rational, ChevalleyError> {
        let n = self.n;
        match (a < n, b < n) {
            (true, true) => return self.positive(a, b),
            (false, false) => return Ok(-self.positive(a - n, b - n)?),
            _ => {}
        }
        let c = self.rs.sum(a, b).ok_or_else(|| {
            ChevalleyError::SignAssignment(format!("{} + {} is not a root", self.rs.label(a), self.rs.label(b)))
        })?;
        let x = [a, b, self.rs.negate(c)];
        let k = (0..3).find(|&k| (x[k] < n) == (x[(k + 1) % 3] < n)).expect("two of three roots share a sign");
        let (p, q, r) = (x[k], x[(k + 1) % 3], x[(k + 2) % 3]);
        let same = if p < n { self.positive(p, q)? } else { -self.positive(p - n, q - n)? };
        Ok(same * self.norm(x[2]) / self.norm(r))
    }

    pub(super) fn solve(mut self) -> Result<BTreeMap<(usize, usize), Rational>, ChevalleyError> {
        let rs = self.rs;
        let n = self.n;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (rs.height(i), i));
        let mut pos = vec![0; n];
        for (p, &i) in order.iter().enumerate() {
            pos[i] = p;
        }
        for &xi in &order {
            let mut pairs: Vec<(usize, usize)> = (0..n)
                .filter_map(|a| {
                    let b = rs.index_of(&(rs.root(xi) - rs.root(a)))?;
                    (b < n && pos[a] < pos[b]).then_some((a, b))
                })
                .collect();
            if pairs.is_empty() {
                continue;
            }
            pairs.sort_by_key(|&(a, _)| pos[a]);
            let (a0, b0) = pairs[0];
            let n0 = rat(string_below(rs, a0, b0) as i64 + 1);
            self.set(a0, b0, n0.clone());
            for &(a, b) in &pairs[1..] {
                let mut total = Rational::zero();
                let (na0, nb0) = (rs.negate(a0), rs.negate(b0));
                if let Some(d) = rs.sum(b, na0) {
                    total += self.any(b, na0)? * self.any(a, nb0)? / self.norm(d);
                }
                if let Some(d) = rs.sum(a, na0) {
                    total += self.any(na0, a)? * self.any(b, nb0)? / self.norm(d);
                }
                let value = total * self.norm(xi) / &n0;
                if value.is_zero() {
                    return Err(ChevalleyError::SignAssignment(format!(
                        "N({}, {}) vanished",
                        rs.label(a),
                        rs.label(b)
                    )));
                }
                self.set(a, b, value);
            }
        }
        let mut out = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                if let Some(v) = self.table[a][b].take() {
                    out.insert((a, b), v);
                }
            }
        }
        Ok(out)
    }

    fn set(&mut self, a: usize, b: usize, v: Rational) {
        self.table[b][a] = Some(-v.clone());
        self.table[a][b] = Some(v);
    }
}
