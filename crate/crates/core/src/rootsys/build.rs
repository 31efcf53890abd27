//! Coordinate realisations and the positivity functional for each type.

use crate::exactq::{rat, ratio, QVector, Rational};

use super::{Family, RootType};

/// Returns `(ambient dimension, all roots, weights of the positivity functional)`.
pub(super) fn realise(t: RootType) -> (usize, Vec<QVector>, Vec<Rational>) {
    let n = t.rank();
    match t.family() {
        Family::A => {
            let m = n + 1;
            let roots = pairs(m).flat_map(|(i, j)| [e_minus(m, i, j), e_minus(m, j, i)]).collect();
            (m, roots, decreasing(m))
        }
        Family::B => {
            let mut roots = plus_minus_pairs(n);
            for i in 0..n {
                roots.push(single(n, i, 1));
                roots.push(single(n, i, -1));
            }
            (n, roots, decreasing(n))
        }
        Family::C => {
            let mut roots = plus_minus_pairs(n);
            for i in 0..n {
                roots.push(single(n, i, 2));
                roots.push(single(n, i, -2));
            }
            (n, roots, decreasing(n))
        }
        Family::D => (n, plus_minus_pairs(n), decreasing(n)),
        Family::E => {
            let all = e8_roots();
            let equal_prefix = match n {
                8 => 1,
                7 => 2,
                _ => 3,
            };
            let roots = all.into_iter().filter(|v| (1..equal_prefix).all(|k| v[k] == v[0])).collect();
            (8, roots, vec_i64(&[7, 6, 5, 4, 3, 2, 1, -100]))
        }
        Family::F => {
            let mut roots = plus_minus_pairs(4);
            for i in 0..4 {
                roots.push(single(4, i, 1));
                roots.push(single(4, i, -1));
            }
            roots.extend(half_sign_vectors(4, |_| true));
            (4, roots, vec_i64(&[3, 2, 1, -100]))
        }
        Family::G => {
            let mut roots: Vec<QVector> = pairs(3).flat_map(|(i, j)| [e_minus(3, i, j), e_minus(3, j, i)]).collect();
            for i in 0..3 {
                let mut v = vec![-1i64; 3];
                v[i] = 2;
                roots.push(QVector::from_i64(&v));
                roots.push(-&QVector::from_i64(&v));
            }
            (3, roots, vec_i64(&[0, -1, 2]))
        }
    }
}

fn pairs(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..m).flat_map(move |i| (i + 1..m).map(move |j| (i, j)))
}

fn e_minus(m: usize, i: usize, j: usize) -> QVector {
    let mut v = vec![0i64; m];
    v[i] = 1;
    v[j] = -1;
    QVector::from_i64(&v)
}

fn single(m: usize, i: usize, c: i64) -> QVector {
    let mut v = vec![0i64; m];
    v[i] = c;
    QVector::from_i64(&v)
}

/// `±eᵢ ± eⱼ` for `i < j`.
fn plus_minus_pairs(m: usize) -> Vec<QVector> {
    let mut out = Vec::new();
    for (i, j) in pairs(m) {
        for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let mut v = vec![0i64; m];
            v[i] = a;
            v[j] = b;
            out.push(QVector::from_i64(&v));
        }
    }
    out
}

fn half_sign_vectors(m: usize, keep: impl Fn(u32) -> bool) -> Vec<QVector> {
    (0u32..1 << m)
        .filter(|mask| keep(mask.count_ones()))
        .map(|mask| QVector::new((0..m).map(|i| if mask >> i & 1 == 1 { ratio(-1, 2) } else { ratio(1, 2) }).collect()))
        .collect()
}

fn e8_roots() -> Vec<QVector> {
    let mut roots = plus_minus_pairs(8);
    // Even coordinate sum ⇔ even number of minus signs.
    roots.extend(half_sign_vectors(8, |minus| minus % 2 == 0));
    roots
}

fn decreasing(m: usize) -> Vec<Rational> {
    (0..m).map(|i| rat((m - i) as i64)).collect()
}

fn vec_i64(w: &[i64]) -> Vec<Rational> {
    w.iter().map(|&x| rat(x)).collect()
}
