//! Test-only oracle for chi values, independent of the library's
//! cleared-denominator route.
//!
//! Every factor `1/(1 - t^x)` is expanded on its own as a geometric series
//! (`-sum_{j>=1} t^(j|x|)` when `x < 0`), numerators come from brute-force
//! enumeration of `i`-subsets, and everything is plain `i128`.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;

/// Series of `1 / prod_m (1 - t^x_m)` up to degree `order`.
pub fn inverse_product_series(weights: &[i64], order: usize) -> Vec<i128> {
    let len = order + 1;
    let mut acc = vec![0i128; len];
    acc[0] = 1;
    for &x in weights {
        let a = x.unsigned_abs() as usize;
        // Nonzero terms of the factor: (degree, coefficient).
        let factor: Vec<(usize, i128)> = if x > 0 {
            (0..len).step_by(a).map(|j| (j, 1)).collect()
        } else {
            (a..len).step_by(a).map(|j| (j, -1)).collect()
        };
        let mut next = vec![0i128; len];
        for (i, &u) in acc.iter().enumerate() {
            if u == 0 {
                continue;
            }
            for &(j, v) in factor.iter().take_while(|(j, _)| i + j < len) {
                next[i + j] += u * v;
            }
        }
        acc = next;
    }
    acc
}

/// `sigma_i(t^x_1, .., t^x_n)` as exponent -> count, by enumerating subsets.
pub fn elementary_symmetric(weights: &[i64], i: usize) -> BTreeMap<i64, i128> {
    let mut out = BTreeMap::new();
    for mask in 0u32..1 << weights.len() {
        if mask.count_ones() as usize != i {
            continue;
        }
        let e: i64 = weights
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, w)| w)
            .sum();
        *out.entry(e).or_default() += 1;
    }
    out
}

/// Power series of `chi^0, .., chi^n` for the given points, up to degree `order`.
pub fn chi_series_all(points: &[Vec<i64>], n: usize, order: usize) -> Vec<Vec<i128>> {
    let mut total = vec![vec![0i128; order + 1]; n + 1];
    for w in points {
        let reach: usize = w.iter().filter(|&&x| x < 0).map(|x| x.unsigned_abs() as usize).sum();
        let inv = inverse_product_series(w, order + reach);
        for (i, series) in total.iter_mut().enumerate() {
            for (e, c) in elementary_symmetric(w, i) {
                for (k, v) in inv.iter().enumerate() {
                    let at = e + k as i64;
                    if (0..=order as i64).contains(&at) {
                        series[at as usize] += c * v;
                    }
                }
            }
        }
    }
    total
}

/// Degree of `prod_{a in A} (1 - t^a)` with per-point maximum multiplicity.
pub fn common_degree(points: &[Vec<i64>]) -> usize {
    let mut best: BTreeMap<u64, usize> = BTreeMap::new();
    for w in points {
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for x in w {
            *counts.entry(x.unsigned_abs()).or_default() += 1;
        }
        for (a, c) in counts {
            let slot = best.entry(a).or_default();
            *slot = (*slot).max(c);
        }
    }
    best.into_iter().map(|(a, c)| a as usize * c).sum()
}

/// The constant if the truncated series has no terms above degree 0.
pub fn series_constant(series: &[i128]) -> Option<i128> {
    series[1..].iter().all(|&c| c == 0).then_some(series[0])
}

pub fn histogram(points: &[Vec<i64>], n: usize) -> Vec<usize> {
    let mut h = vec![0; n + 1];
    for w in points {
        h[w.iter().filter(|&&x| x < 0).count()] += 1;
    }
    h
}

/// Chi identities decided entirely through series: every `chi^i` constant and
/// equal to `(-1)^i N^i`, mirror-symmetric counts, and `chi^0` in {0, 1}.
/// Returns `chi^0` when consistent.
pub fn series_consistent_chi0(points: &[Vec<i64>], n: usize) -> Option<i128> {
    let order = common_degree(points) + 1;
    let h = histogram(points, n);
    if (0..=n).any(|i| h[i] != h[n - i]) {
        return None;
    }
    let mut chi0 = None;
    for (i, series) in chi_series_all(points, n, order).iter().enumerate() {
        let c = series_constant(series)?;
        let expected = if i % 2 == 0 { 1 } else { -1 } * h[i] as i128;
        if c != expected {
            return None;
        }
        if i == 0 {
            chi0 = Some(c);
        }
    }
    chi0.filter(|c| *c == 0 || *c == 1)
}

pub fn random_weight<R: Rng>(rng: &mut R, max: i64) -> i64 {
    let a = rng.gen_range(1..=max);
    if rng.gen_bool(0.5) {
        a
    } else {
        -a
    }
}

pub fn random_points<R: Rng>(rng: &mut R, n: usize, count: usize, max: i64) -> Vec<Vec<i64>> {
    (0..count)
        .map(|_| (0..n).map(|_| random_weight(rng, max)).collect())
        .collect()
}

/// Products of rotations of spheres: `2^n` points with weights `+-a_k`.
pub fn sphere_product(weights: &[i64]) -> Vec<Vec<i64>> {
    let n = weights.len();
    (0u32..1 << n)
        .map(|mask| {
            weights
                .iter()
                .enumerate()
                .map(|(k, &a)| if mask >> k & 1 == 1 { -a } else { a })
                .collect()
        })
        .collect()
}

/// Linear action on the projective plane with weights `a != b`, both nonzero.
pub fn projective_plane(a: i64, b: i64) -> Vec<Vec<i64>> {
    vec![vec![a, b], vec![-a, b - a], vec![-b, a - b]]
}

/// The two-point dimension-six family.
pub fn two_point_family(a: i64, b: i64) -> Vec<Vec<i64>> {
    vec![vec![-a - b, a, b], vec![-a, -b, a + b]]
}
