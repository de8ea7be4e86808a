//! Exit criteria for the crate. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails. Run with `cargo test --release --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use knodel::constructions::{w3_critical_witness, w4_26_witness, w4_mod2_witness, w4_mod8_witness};
use knodel::formulas::{gamma_w3_formula, gamma_w4_formula, w3_is_critical, w4_is_critical};
use knodel::harness::sweep::{sweep, to_csv, to_jsonl, without_timing};
use knodel::harness::verify::shared_neighbor_closed_form;
use knodel::solver::{self, classify, deletion_profile, is_dominating, DeletionMode, SolverConfig, Verdict};
use knodel::{m_delta, KnodelGraph, Side, VertexId, VertexSet};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

fn even(lo: usize, hi: usize) -> impl Iterator<Item = usize> {
    (lo..=hi).step_by(2)
}

fn formula_agreement(delta: usize, lo: usize, hi: usize, formula: fn(usize) -> knodel::Result<usize>) -> Outcome {
    for n in even(lo, hi) {
        let g = KnodelGraph::new(delta, n).map_err(|e| e.to_string())?;
        let got = solver::gamma(&g, &cfg()).map_err(|e| e.to_string())?.gamma;
        let want = formula(n).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("W({delta},{n}): solver {got}, formula {want}"))?;
    }
    Ok(format!("n = {lo}..={hi}"))
}

fn c1() -> Outcome {
    formula_agreement(3, 8, 64, gamma_w3_formula)
}

fn c2() -> Outcome {
    for n in [16, 18, 28, 36] {
        ensure((16..=60).contains(&n), || format!("exception {n} outside range"))?;
    }
    formula_agreement(4, 16, 60, gamma_w4_formula)
}

fn c3() -> Outcome {
    let mut critical = Vec::new();
    for n in even(8, 48) {
        let g = KnodelGraph::new(3, n).unwrap();
        let c = classify(&g, DeletionMode::default_for(n), &cfg()).map_err(|e| e.to_string())?;
        let expected = if w3_is_critical(n).unwrap() { Verdict::Critical } else { Verdict::Stable };
        ensure(c.verdict == expected, || format!("W(3,{n}): {} vs {expected}", c.verdict))?;
        ensure(n % 8 == 4 || c.verdict == Verdict::Stable, || format!("W(3,{n}) critical off residue 4"))?;
        if c.verdict == Verdict::Critical {
            let base = c.profile.base_gamma();
            ensure(c.profile.per_vertex.values().all(|&x| x + 1 == base), || {
                format!("W(3,{n}): critical but some deletion is not gamma - 1")
            })?;
            critical.push(n);
        }
    }
    Ok(format!("critical at {critical:?}"))
}

fn c4() -> Outcome {
    let mut critical = Vec::new();
    for n in even(16, 46) {
        let g = KnodelGraph::new(4, n).unwrap();
        let c = classify(&g, DeletionMode::default_for(n), &cfg()).map_err(|e| e.to_string())?;
        let expected = if w4_is_critical(n).unwrap() { Verdict::Critical } else { Verdict::Stable };
        ensure(c.verdict == expected, || format!("W(4,{n}): {} vs {expected}", c.verdict))?;
        if c.verdict == Verdict::Critical {
            critical.push(n);
        }
    }
    ensure(critical == [22, 26, 32, 38, 42], || format!("critical set {critical:?}"))?;
    Ok(format!("critical at {critical:?}, stable elsewhere"))
}

fn c5() -> Outcome {
    let mut witnesses = Vec::new();
    for t in 1..=6 {
        witnesses.push(w3_critical_witness(t).unwrap());
    }
    witnesses.push(w4_26_witness());
    for t in 2..=6 {
        witnesses.push(w4_mod2_witness(t).unwrap());
    }
    for w in &witnesses {
        let g = w.graph().unwrap();
        let view = g.deleted_view(w.deleted_vertex).unwrap();
        let gamma = solver::gamma(&g, &cfg()).map_err(|e| e.to_string())?.gamma;
        let dominates = is_dominating(&view, &w.set).map_err(|e| e.to_string())?;
        ensure(dominates, || format!("{} n={}: does not dominate", w.name, w.target_n))?;
        ensure(w.set.len() + 1 == gamma, || {
            format!("{} n={}: size {} but gamma {gamma}", w.name, w.target_n, w.set.len())
        })?;
    }
    Ok(format!("{} sets certified", witnesses.len()))
}

fn c6() -> Outcome {
    let w = w4_mod8_witness(3).unwrap();
    ensure(w.actual_size() == 10, || format!("literal size {}", w.actual_size()))?;
    ensure(w.claimed_size == 9, || format!("claimed {}", w.claimed_size))?;
    ensure(w.size_mismatch(), || "mismatch not flagged".into())?;
    let g = KnodelGraph::new(4, 38).unwrap();
    let exact = solver::gamma_after_deletion(&g, VertexId::v(1), &cfg()).map_err(|e| e.to_string())?.gamma;
    ensure(exact == 9, || format!("gamma(W(4,38) - v1) = {exact}"))?;
    let dominates = w.audit().unwrap().dominates;
    Ok(format!("literal 10 vs claimed 9 flagged; exact gamma(G-v1) = 9; literal set dominates: {dominates}"))
}

fn c7() -> Outcome {
    let r = shared_neighbor_closed_form();
    ensure(r.ok(), || r.first_failure.clone().unwrap_or_default())?;
    Ok(format!("{} pairs", r.cases))
}

fn c8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_815);
    let mut checked = 0;
    for delta in [3, 4] {
        let m: BTreeSet<usize> = m_delta(delta).unwrap();
        for n in [16, 32, 64] {
            let g = KnodelGraph::new(delta, n).unwrap();
            let h = g.half();
            let full = if h == 64 { u64::MAX } else { (1u64 << h) - 1 };
            for _ in 0..1000 {
                let mask = loop {
                    // mix dense and sparse subsets
                    let mut m = rng.gen::<u64>() & full;
                    if rng.gen_bool(0.5) {
                        m &= rng.gen::<u64>() & rng.gen::<u64>();
                    }
                    if m != 0 {
                        break m;
                    }
                };
                let a = VertexSet::from_masks(mask, 0);
                let in_m = g.cyclic_sequence(&a).unwrap().count_in(&m);
                let bound = delta * a.len() - g.neighborhood(&a).len();
                ensure(in_m <= bound, || format!("W({delta},{n}) A = {a}: {in_m} > {bound}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} subsets, zero violations"))
}

fn c9() -> Outcome {
    let mut graphs = 0;
    for delta in [3, 4] {
        for n in even(2, 32) {
            let Ok(g) = KnodelGraph::new(delta, n) else { continue };
            let p = deletion_profile(&g, DeletionMode::All, &cfg()).map_err(|e| e.to_string())?;
            ensure(p.per_vertex.len() == n, || format!("W({delta},{n}) profile incomplete"))?;
            ensure(p.is_constant(), || format!("W({delta},{n}) profile not constant"))?;
            ensure(p.within_bracket(), || format!("W({delta},{n}) profile outside bracket"))?;
            graphs += 1;
        }
    }
    Ok(format!("{graphs} graphs, all deletions solved"))
}

fn c10() -> Outcome {
    let mut cases = 0;
    for n in even(2, 20) {
        for delta in 1..=(usize::BITS - 1 - n.leading_zeros()) as usize {
            let g = KnodelGraph::new(delta, n).unwrap();
            let got = solver::gamma(&g, &cfg()).map_err(|e| e.to_string())?.gamma;
            let want = common::brute_force_gamma(delta, n, None);
            ensure(got == want, || format!("W({delta},{n}): solver {got}, enumeration {want}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} graphs"))
}

fn c11() -> Outcome {
    let runs = [(3, 8, 48), (4, 16, 46)];
    for (delta, lo, hi) in runs {
        let a = without_timing(&sweep(delta, lo, hi, None, &cfg()).map_err(|e| e.to_string())?);
        let b = without_timing(&sweep(delta, lo, hi, None, &cfg()).map_err(|e| e.to_string())?);
        ensure(to_csv(&a).as_bytes() == to_csv(&b).as_bytes(), || format!("csv differs for delta {delta}"))?;
        ensure(to_jsonl(&a).as_bytes() == to_jsonl(&b).as_bytes(), || format!("jsonl differs for delta {delta}"))?;
    }
    let g = KnodelGraph::new(4, 46).unwrap();
    let view = g.deleted_view(VertexId { side: Side::U, index: 7 }).unwrap();
    let x = solver::exact_gamma(&view, &cfg()).unwrap();
    let y = solver::exact_gamma(&view, &cfg()).unwrap();
    ensure((x.gamma, x.witness) == (y.gamma, y.witness), || "witness differs between runs".into())?;
    Ok("sweeps and witnesses identical across runs".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 11] = [
        ("1 gamma(W(3,n)) equals closed form, n=8..64", c1, Duration::from_secs(300)),
        ("2 gamma(W(4,n)) equals closed form, n=16..60", c2, Duration::from_secs(900)),
        ("3 W(3,n) critical iff n = 4 mod 8, n=8..48", c3, Duration::from_secs(300)),
        ("4 W(4,n) critical exactly at 22,26,32,38,42 in 16..46", c4, Duration::from_secs(900)),
        ("5 explicit sets dominate G-v1 with gamma-1 vertices", c5, Duration::from_secs(300)),
        ("6 residue-8 set: size 10 vs claimed 9, gamma(W(4,38)-v1)=9", c6, Duration::from_secs(300)),
        ("7 shared-neighbour closed form, 2<=delta<=6, n<=128", c7, Duration::from_secs(60)),
        ("8 gap count in M_delta <= delta|A| - |N(A)|", c8, Duration::from_secs(60)),
        ("9 deletion profiles constant within {gamma-1, gamma}, n<=32", c9, Duration::from_secs(300)),
        ("10 solver equals subset enumeration, n<=20", c10, Duration::from_secs(120)),
        ("11 sweep output deterministic", c11, Duration::from_secs(300)),
    ];
    let mut failures = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if took <= limit {
                Ok(detail)
            } else {
                Err(format!("took {took:?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {name} [{detail}] ({:.2?})", took),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {name}: {why} ({:.2?})", took);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
