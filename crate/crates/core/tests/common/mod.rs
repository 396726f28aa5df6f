//! Brute-force reference implementations and instance generators shared by
//! the integration tests. The oracles work on plain `f64` vectors with
//! explicit loops and comparisons and never call into the library.

#![allow(dead_code, clippy::needless_range_loop)]

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use syadfuzz::{FuzzyRelation, FuzzySet, Universe};

pub const COARSE: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

fn lesser(a: f64, b: f64) -> f64 {
    if a < b {
        a
    } else {
        b
    }
}

fn greater(a: f64, b: f64) -> f64 {
    if a > b {
        a
    } else {
        b
    }
}

/// `out[y] = max_x min(a[x], r[x][y])`
pub fn oracle_compose(a: &[f64], r: &[Vec<f64>]) -> Vec<f64> {
    let cols = r.first().map_or(0, Vec::len);
    let mut out = Vec::with_capacity(cols);
    for y in 0..cols {
        let mut best = 0.0;
        for x in 0..a.len() {
            let v = lesser(a[x], r[x][y]);
            if v > best {
                best = v;
            }
        }
        out.push(best);
    }
    out
}

/// `r[x][y] = max(1 - a[x], b[y])`
pub fn oracle_implication(a: &[f64], b: &[f64]) -> Vec<Vec<f64>> {
    let mut r = Vec::new();
    for x in 0..a.len() {
        let mut row = Vec::new();
        for y in 0..b.len() {
            row.push(greater(1.0 - a[x], b[y]));
        }
        r.push(row);
    }
    r
}

/// `out[y] = max_x min(fact[x], max(1 - a[x], b[y]))`, evaluated directly.
pub fn oracle_gmp(fact: &[f64], a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = Vec::new();
    for y in 0..b.len() {
        let mut best = 0.0;
        for x in 0..fact.len() {
            let imp = greater(1.0 - a[x], b[y]);
            let v = lesser(fact[x], imp);
            if v > best {
                best = v;
            }
        }
        out.push(best);
    }
    out
}

/// The seven predication grades for every element.
pub fn oracle_syad(
    asti: &[f64],
    avaktavya: &[f64],
    time: &[Vec<f64>],
    fixed: usize,
) -> Vec<[f64; 7]> {
    let mut out = Vec::new();
    for x in 0..asti.len() {
        let a = asti[x];
        let n = 1.0 - a;
        let i = avaktavya[x];
        let mut over_time = 0.0;
        for t in 0..time[x].len() {
            let v = lesser(n, time[x][t]);
            if v > over_time {
                over_time = v;
            }
        }
        let v3 = lesser(a, over_time);
        let v4 = lesser(lesser(lesser(a, n), time[x][fixed]), i);
        let v5 = lesser(a, i.sqrt());
        let v6 = lesser(n, i);
        let v7 = lesser(lesser(a, n), i);
        out.push([a, n, v3, v4, v5, v6, v7]);
    }
    out
}

pub fn pointwise_min(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(&x, &y)| lesser(x, y)).collect()
}

pub fn universe(prefix: &str, n: usize) -> Arc<Universe> {
    Arc::new(
        Universe::new(
            prefix.to_uppercase(),
            (1..=n).map(|k| format!("{prefix}{k}")),
        )
        .unwrap(),
    )
}

pub fn set(u: &Arc<Universe>, grades: &[f64]) -> FuzzySet {
    FuzzySet::from_grades(u.clone(), grades).unwrap()
}

pub fn relation(x: &Arc<Universe>, y: &Arc<Universe>, rows: &[Vec<f64>]) -> FuzzyRelation {
    let flat: Vec<f64> = rows.iter().flatten().copied().collect();
    FuzzyRelation::from_grades(x.clone(), y.clone(), &flat).unwrap()
}

pub fn values(s: &FuzzySet) -> Vec<f64> {
    s.grades().iter().map(|g| g.value()).collect()
}

pub fn rows(r: &FuzzyRelation) -> Vec<Vec<f64>> {
    (0..r.domain().len())
        .map(|i| r.row(i).iter().map(|g| g.value()).collect())
        .collect()
}

pub fn random_grades(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(0.0..=1.0)).collect()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Vec<Vec<f64>> {
    (0..rows).map(|_| random_grades(rng, cols)).collect()
}

/// Every vector of length `n` over `alphabet`, in lexicographic order.
pub fn grid(alphabet: &[f64], n: usize) -> Vec<Vec<f64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                alphabet.iter().map(move |&g| {
                    let mut v = prefix.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn chunk(flat: &[f64], cols: usize) -> Vec<Vec<f64>> {
    flat.chunks(cols).map(<[f64]>::to_vec).collect()
}
