//! Acceptance suite. Prints one `[PASS]` / `[FAIL]` line per criterion and
//! exits nonzero if any fails. All comparisons are exact integer equality;
//! the only tolerances are the wall-clock budgets printed beside each line.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hamcheck::criteria::{
    godinho_condition, odd_sum_nonzero, pairing_ladder, primitive_weights, symmetric_three_sum, three_sum_dim6,
};
use hamcheck::search::{canonicalize, enumerate, for_each_canonical, Filter, Mode, SearchSpec};
use hamcheck::{build_tables, chi_value, evaluate_all, ChiValue, FixedPointData, Summary};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

const SEED: u64 = 0x05ee_dc41;

type Criterion = (&'static str, u64, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn datum(n: usize, points: &[Vec<i64>]) -> FixedPointData {
    FixedPointData::new(n, points.to_vec()).expect("valid datum")
}

fn constants(d: &FixedPointData) -> Option<Vec<BigInt>> {
    (0..=d.n())
        .map(|i| chi_value(d, i).unwrap().constant().cloned())
        .collect()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn golden() -> Outcome {
    let mut problems = Vec::new();
    let mut check = |label: String, d: FixedPointData, chi: &[i64], hist: &[usize], summary: Summary| {
        let started = Instant::now();
        let ev = evaluate_all(&d);
        let got = constants(&d);
        if got.as_deref() != Some(&big(chi)[..]) {
            problems.push(format!("{label}: chi {got:?}"));
        }
        if d.index_histogram() != hist {
            problems.push(format!("{label}: N {:?}", d.index_histogram()));
        }
        if ev.summary != summary {
            problems.push(format!("{label}: {}", ev.summary));
        }
        if started.elapsed() > Duration::from_secs(1) {
            problems.push(format!("{label}: took {:?}", started.elapsed()));
        }
    };
    check("S^2".into(), datum(1, &[vec![1], vec![-1]]), &[1, -1], &[1, 1], Summary::HamiltonianByChi);
    check(
        "CP^2".into(),
        datum(2, &[vec![1, 2], vec![-1, 1], vec![-2, -1]]),
        &[1, -1, 1],
        &[1, 1, 1],
        Summary::HamiltonianByChi,
    );
    let mut family = 0;
    for a in 1..=9 {
        for b in a..=10 - a {
            family += 1;
            check(
                format!("({a},{b})"),
                datum(3, &two_point_family(a, b)),
                &[0, -1, 1, 0],
                &[0, 1, 1, 0],
                Summary::NonHamiltonianCandidate,
            );
        }
    }
    if problems.is_empty() {
        pass(format!("S^2, CP^2 and {family} two-point data exact"))
    } else {
        fail(problems.join("; "))
    }
}

fn structured_data() -> Vec<(usize, Vec<Vec<i64>>)> {
    let mut out = Vec::new();
    for a in 1..=3 {
        out.push((1, sphere_product(&[a])));
        for b in 1..=3 {
            out.push((2, sphere_product(&[a, b])));
            out.push((3, sphere_product(&[a, b, 1])));
        }
    }
    for a in -4i64..=4 {
        for b in -4i64..=4 {
            if a != 0 && b != 0 && a != b {
                out.push((2, projective_plane(a, b)));
            }
        }
    }
    for a in 1..=5 {
        for b in a..=6 - a {
            out.push((3, two_point_family(a, b)));
        }
    }
    out
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut cases: Vec<(usize, Vec<Vec<i64>>)> = (0..1200)
        .map(|_| {
            let n = rng.gen_range(1..=4);
            let k = rng.gen_range(1..=5);
            (n, random_points(&mut rng, n, k, 8))
        })
        .collect();
    let random = cases.len();
    cases.extend(structured_data());

    let mut constant = 0;
    for (n, points) in &cases {
        let d = datum(*n, points);
        let order = common_degree(points) + 1;
        let series = chi_series_all(points, *n, order);
        for (i, s) in series.iter().enumerate() {
            let lib = chi_value(&d, i).unwrap();
            let oracle = series_constant(s);
            let agree = match (&lib, oracle) {
                (ChiValue::Constant(c), Some(o)) => *c == BigInt::from(o),
                (ChiValue::NonConstant { .. }, None) => true,
                _ => false,
            };
            if !agree {
                return fail(format!("{points:?}, i = {i}: library {lib}, oracle {oracle:?}"));
            }
            constant += usize::from(oracle.is_some());
        }
    }
    pass(format!(
        "{random} random + {} structured data, {constant} constant chi^i, all agree",
        cases.len() - random
    ))
}

/// Brute force over sub-multisets: some positive part of size `i` and some
/// negative part of size `j` with `i + j` odd have equal absolute sums.
fn split_collision(w: &[i64]) -> bool {
    let pos: Vec<i64> = w.iter().copied().filter(|&x| x > 0).collect();
    let neg: Vec<i64> = w.iter().filter(|&&x| x < 0).map(|x| -x).collect();
    let sums = |v: &[i64]| -> BTreeSet<(usize, i64)> {
        (0u32..1 << v.len())
            .map(|m| {
                let s = (0..v.len()).filter(|k| m >> k & 1 == 1).map(|k| v[k]).sum();
                (m.count_ones() as usize, s)
            })
            .collect()
    };
    let p = sums(&pos);
    let q = sums(&neg);
    p.iter().any(|&(i, s)| q.iter().any(|&(j, t)| (i + j) % 2 == 1 && s == t))
}

fn cross_implications() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let mut holds = 0;
    for _ in 0..1500 {
        let len = rng.gen_range(1..=12);
        let w: Vec<i64> = (0..len).map(|_| random_weight(&mut rng, 20)).collect();
        let d = datum(len, std::slice::from_ref(&w));
        let lib = odd_sum_nonzero(&build_tables(&d)).hypothesis_holds();
        if lib == split_collision(&w) {
            return fail(format!("odd_sum_nonzero vs split reformulation on {w:?}"));
        }
        holds += usize::from(lib);
    }

    let mut dim6 = 0;
    for _ in 0..1500 {
        let k = rng.gen_range(1..=4);
        let pts = random_points(&mut rng, 3, k, 20);
        let d = datum(3, &pts);
        let t = build_tables(&d);
        if odd_sum_nonzero(&t).hypothesis_holds() {
            dim6 += 1;
            if !three_sum_dim6(&t, 3).hypothesis_holds() {
                return fail(format!("odd_sum_nonzero without three_sum_dim6 on {pts:?}"));
            }
        }
    }

    let mut shared = 0;
    for _ in 0..1500 {
        let abc: Vec<i64> = (0..3).map(|_| rng.gen_range(1..=10)).collect();
        let k = rng.gen_range(1..=4);
        let pts: Vec<Vec<i64>> = (0..k)
            .map(|_| abc.iter().map(|&a| if rng.gen_bool(0.5) { a } else { -a }).collect())
            .collect();
        let d = datum(3, &pts);
        if godinho_condition(&d).hypothesis_holds() {
            shared += 1;
            if !symmetric_three_sum(&d).hypothesis_holds() {
                return fail(format!("godinho without symmetric_three_sum on {pts:?}"));
            }
        }
    }
    pass(format!(
        "1500 multisets ({holds} odd-sum-free), {dim6} dim-6 and {shared} shared-weight implications, 0 counterexamples"
    ))
}

fn ladder() -> Outcome {
    let golden = [
        datum(1, &[vec![1], vec![-1]]),
        datum(2, &[vec![1, 2], vec![-1, 1], vec![-2, -1]]),
        datum(3, &two_point_family(1, 2)),
    ];
    let mut checked = 0;
    for d in &golden {
        let t = build_tables(d);
        for w in primitive_weights(&t) {
            checked += 1;
            match pairing_ladder(d, &t, w) {
                Ok(r) if r.hypothesis_holds() => {}
                other => return fail(format!("w = {w} on {:?}: {other:?}", d.points())),
            }
        }
    }
    let bad = datum(2, &[vec![1, 2], vec![1, -2]]);
    let ev = evaluate_all(&bad);
    let flagged = ev.criteria.iter().any(|c| c.name == "pairing_ladder" && c.witness().is_some());
    if !flagged || !ev.summary.is_inconsistent() {
        return fail(format!("synthetic violation not flagged: {}", ev.summary));
    }
    pass(format!("{checked} primitive weights hold; synthetic violation Inconsistent"))
}

fn naive_candidates(n: usize, k: usize, max: i64) -> BTreeSet<Vec<Vec<i64>>> {
    let values: Vec<i64> = (-max..=max).filter(|&x| x != 0).collect();
    let mut raw = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        raw.push(idx.iter().map(|&i| values[i]).collect::<Vec<i64>>());
        let Some(pos) = (0..n).rev().find(|&p| idx[p] + 1 < values.len()) else {
            break;
        };
        idx[pos] += 1;
        idx[pos + 1..].iter_mut().for_each(|x| *x = 0);
    }
    assert_eq!(k, 2, "naive oracle covers two points");
    let mut canonical = BTreeSet::new();
    for p in &raw {
        for q in &raw {
            let mut pair = vec![p.clone(), q.clone()];
            pair.iter_mut().for_each(|v| v.sort_unstable());
            pair.sort();
            canonical.insert(pair);
        }
    }
    canonical
        .into_iter()
        .filter(|pts| series_consistent_chi0(pts, n) == Some(0))
        .collect()
}

fn search_classification() -> Outcome {
    let spec = SearchSpec::new(3, 2, 5).with_mode(Mode::NonHamiltonianCandidates);
    let found: BTreeSet<Vec<Vec<i64>>> = match enumerate(&spec) {
        Ok(r) => r
            .survivors
            .iter()
            .map(|s| s.data.points().iter().map(|p| p.weights().to_vec()).collect())
            .collect(),
        Err(e) => return fail(e.to_string()),
    };
    let mut expected = BTreeSet::new();
    for a in 1..=4 {
        for b in a..=5 - a {
            let d = canonicalize(&datum(3, &two_point_family(a, b)));
            expected.insert(d.points().iter().map(|p| p.weights().to_vec()).collect::<Vec<_>>());
        }
    }
    let naive = naive_candidates(3, 2, 5);
    if found != expected {
        return fail(format!("search found {found:?}"));
    }
    if naive != expected {
        return fail(format!("naive oracle found {naive:?}"));
    }
    pass(format!("{} survivors, equal to the family and to the naive oracle", found.len()))
}

fn semi_free_specs() -> Vec<SearchSpec> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for k in 1..=4 {
            out.push(SearchSpec::new(n, k, 1));
        }
    }
    out
}

fn semi_free_contradiction() -> Outcome {
    let (mut total, mut zero, mut hamiltonian, mut inconsistent) = (0, 0, 0, 0);
    let mut bad = None;
    for spec in semi_free_specs() {
        for_each_canonical(&spec, |d| {
            total += 1;
            let ev = evaluate_all(&d);
            match ev.chi.chi0() {
                Some(c) if *c == BigInt::from(0) => {
                    zero += 1;
                    if !ev.summary.is_inconsistent() {
                        bad.get_or_insert(format!("{:?}: {}", d.points(), ev.summary));
                    }
                }
                _ => {}
            }
            hamiltonian += usize::from(ev.summary == Summary::HamiltonianByChi);
            inconsistent += usize::from(ev.summary.is_inconsistent());
        })
        .expect("small space");
    }
    match bad {
        Some(b) => fail(b),
        None => pass(format!(
            "{total} data: {zero} with chi^0 = 0, {hamiltonian} Hamiltonian, {inconsistent} Inconsistent"
        )),
    }
}

fn adjacency_of_survivors() -> Outcome {
    let mut specs: Vec<SearchSpec> = semi_free_specs();
    specs.push(SearchSpec::new(3, 2, 5));
    specs.push(SearchSpec::new(3, 2, 5).with_mode(Mode::NonHamiltonianCandidates));
    let mut survivors = 0;
    for spec in specs {
        let spec = spec.with_filters([Filter::ChiConsistency]);
        let result = match enumerate(&spec) {
            Ok(r) => r,
            Err(e) => return fail(e.to_string()),
        };
        for s in result.survivors.iter().filter(|s| s.evaluation.chi.is_consistent()) {
            survivors += 1;
            let h = s.data.index_histogram();
            if !h.windows(2).any(|w| w[0] > 0 && w[1] > 0) {
                return fail(format!("{:?} has histogram {h:?}", s.data.points()));
            }
        }
    }
    pass(format!("{survivors} chi-consistent survivors, 0 exceptions"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("golden chi identities", 30, golden),
        ("oracle equivalence", 60, oracle_equivalence),
        ("criteria cross-implications", 30, cross_implications),
        ("pairing ladder", 1, ladder),
        ("search classification", 300, search_classification),
        ("semi-free contradiction detection", 60, semi_free_contradiction),
        ("adjacent indices of survivors", 300, adjacency_of_survivors),
    ];
    let mut failed = 0;
    for (k, (name, budget, run)) in criteria.into_iter().enumerate() {
        let started = Instant::now();
        let mut out = run();
        let elapsed = started.elapsed();
        if elapsed > Duration::from_secs(budget) {
            out.ok = false;
            out.detail = format!("{} (over the {budget} s budget)", out.detail);
        }
        let tag = if out.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {} {name}: {} ({:.2} s)", k + 1, out.detail, elapsed.as_secs_f64());
        failed += usize::from(!out.ok);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
