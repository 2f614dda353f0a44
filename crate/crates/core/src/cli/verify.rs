//! Property suites behind `verify --theorem`.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::cli::{Outcome, RunReport, Theorem, VerifyArgs, EXIT_OK, EXIT_PROPERTY_FAILURE};
use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::monotone::count_monotone_oracle;
use crate::partition::{
    construct_layer_subset, construct_recursive_partition, corollary_split,
    count_via_partition_with, decompose_power_of_two, definitional_completeness_oracle,
    e2_condition_check, is_complete_partition, minimality_check, partition_terms, EngineConfig,
    MemoTable, Parity, PivotStrategy,
};
use crate::poset::{find_v3, write_poset, CoverMode, Subposet};

/// Exhaustive suites print every case up to this many; beyond it only
/// failures are listed.
const CASE_LINES: usize = 64;

struct Case {
    label: String,
    pass: bool,
    /// Points in the counterexample, used to pick the smallest one.
    weight: usize,
    dump: String,
}

struct Suite {
    cases: Vec<Case>,
    summary: Box<dyn Fn(usize, usize) -> String>,
}

fn caps(theorem: Theorem) -> (usize, usize) {
    match theorem {
        Theorem::Partition => (0, 5),
        Theorem::Corollary => (1, 6),
        Theorem::Conditions => (1, 4),
        Theorem::Construction => (2, 7),
        Theorem::Lemma2 => (1, 6),
        Theorem::Lemma3 => (2, 7),
        Theorem::PowerOfTwo => (2, 6),
    }
}

fn random_subset(rng: &mut ChaCha8Rng, of: &Subposet) -> Result<Subposet> {
    let p = rng.gen_range(0.0..1.0);
    Subposet::from_points(of.dim(), of.iter().filter(|_| rng.gen_bool(p)).collect::<Vec<_>>())
}

fn points_text(s: &Subposet) -> String {
    let pts: Vec<String> = s.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", pts.join(","))
}

fn engine_count(s: &Subposet, threads: usize, cache: &MemoTable) -> Result<BigCount> {
    let config = EngineConfig {
        threads,
        ..EngineConfig::default()
    };
    count_via_partition_with(s, &PivotStrategy::default(), Some(cache), &config)
}

/// Every subset of `E^n` for small `n`, otherwise `samples` random ones.
fn pivot_sets(n: usize, samples: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Subposet>> {
    let cube = Subposet::cube(n)?;
    let size = cube.len();
    if size <= 16 {
        let pts = cube.points();
        (0u32..1 << size)
            .map(|m| Subposet::from_points(n, (0..size).filter(|k| m >> k & 1 == 1).map(|k| pts[k])))
            .collect()
    } else {
        (0..samples).map(|_| random_subset(rng, &cube)).collect()
    }
}

fn partition_suite(n: usize, samples: usize, rng: &mut ChaCha8Rng) -> Result<Suite> {
    let cube = Subposet::cube(n)?;
    let mut cases = Vec::with_capacity(samples);
    for k in 0..samples {
        let s = random_subset(rng, &cube)?;
        let a = random_subset(rng, &s)?;
        let direct = count_monotone_oracle(&s)?;
        let mut sum = BigCount::zero();
        for term in partition_terms(&s, &a)? {
            sum += &count_monotone_oracle(&term.residual)?;
        }
        cases.push(Case {
            label: format!("case {}: |S|={} |A|={} D(S)={direct} terms={sum}", k + 1, s.len(), a.len()),
            pass: sum == direct,
            weight: s.len(),
            dump: format!("S={} A={} D(S)={direct} term sum={sum}", points_text(&s), points_text(&a)),
        });
    }
    Ok(Suite {
        cases,
        summary: Box::new(|ok, total| format!("{ok}/{total} exact matches")),
    })
}

fn corollary_suite(n: usize, threads: usize) -> Result<Suite> {
    let d = engine_count(&Subposet::cube(n)?, threads, &MemoTable::new())?;
    let mut cases = Vec::new();
    for a in Subposet::cube(n)?.iter() {
        let (above, below) = corollary_split(a)?;
        let sum = &above + &below;
        cases.push(Case {
            label: format!("a={a}: {above} + {below} = {sum}"),
            pass: sum == d,
            weight: a.weight(),
            dump: format!("a={a} split {above} + {below} != {d}"),
        });
    }
    let dn = d.to_string();
    Ok(Suite {
        cases,
        summary: Box::new(move |ok, total| format!("{ok}/{total} splits sum to {dn}")),
    })
}

fn conditions_suite(n: usize, mode: CoverMode, samples: usize, rng: &mut ChaCha8Rng) -> Result<Suite> {
    let cube = Subposet::cube(n)?;
    let mut cases = Vec::new();
    for a in pivot_sets(n, samples, rng)? {
        let v3 = is_complete_partition(&a, &cube, mode)?;
        let faces = e2_condition_check(&a, n, mode)?;
        let definitional = definitional_completeness_oracle(&a, &cube)?;
        let sound = !v3 || definitional;
        cases.push(Case {
            label: format!("A={}: v3 {v3}, squares {faces}, definitional {definitional}", points_text(&a)),
            pass: v3 == faces && sound,
            weight: a.len(),
            dump: format!(
                "A={} v3-complete={v3} square-complete={faces} definitional={definitional}",
                write_poset(&a).trim_end().replace('\n', " ")
            ),
        });
    }
    Ok(Suite {
        cases,
        summary: Box::new(|ok, total| format!("{ok}/{total} subsets consistent")),
    })
}

fn construction_suite(n: usize, mode: CoverMode) -> Result<Suite> {
    let cube = Subposet::cube(n)?;
    let mut cases = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        let seed = construct_layer_subset(n - 1, parity)?;
        for i in 1..=n {
            let built = construct_recursive_partition(n, i, &seed, mode)?;
            let complete = is_complete_partition(&built, &cube, mode)?;
            let size_ok = built.len() == 1 << (n - 1);
            cases.push(Case {
                label: format!("{parity} seed, i={i}: complete {complete}, size {}", built.len()),
                pass: complete && size_ok,
                weight: built.len(),
                dump: format!("{parity} seed, i={i}: A={}", points_text(&built)),
            });
        }
    }
    Ok(Suite {
        cases,
        summary: Box::new(|ok, total| format!("{ok}/{total} constructions complete")),
    })
}

fn lemma2_suite(n: usize, mode: CoverMode, samples: usize, rng: &mut ChaCha8Rng) -> Result<Suite> {
    let mut cases = Vec::new();
    for a in pivot_sets(n, samples, rng)? {
        let r = minimality_check(&a, n, mode)?;
        cases.push(Case {
            label: format!("A={}: {} size {} bound {}", points_text(&a), r.class, r.size, r.bound),
            pass: r.size_law_holds,
            weight: a.len(),
            dump: format!(
                "A={} is {} with |A|={} against 2^(n-1)={}",
                points_text(&a),
                r.class,
                r.size,
                r.bound
            ),
        });
    }
    Ok(Suite {
        cases,
        summary: Box::new(|ok, total| format!("{ok}/{total} subsets obey the size law")),
    })
}

fn lemma3_suite(n: usize, mode: CoverMode) -> Result<Suite> {
    let cube = Subposet::cube(n)?;
    let bound = 1usize << (n - 1);
    let mut cases = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        let a = construct_layer_subset(n, parity)?;
        let complete = is_complete_partition(&a, &cube, mode)?;
        let inner = find_v3(&a, mode);
        let pass = complete && inner.is_none() && a.len() == bound;
        cases.push(Case {
            label: format!(
                "{parity}: complete {complete}, V3 in A {}, size {}",
                inner.map_or("none".to_string(), |w| w.to_string()),
                a.len()
            ),
            pass,
            weight: a.len(),
            dump: format!("{parity} layer A={}", points_text(&a)),
        });
    }
    Ok(Suite {
        cases,
        summary: Box::new(move |ok, total| {
            if ok == total {
                format!("both parities complete, size {bound}")
            } else {
                format!("{ok}/{total} parities complete with size {bound}")
            }
        }),
    })
}

fn power_of_two_suite(n: usize, threads: usize) -> Result<Suite> {
    let d = engine_count(&Subposet::cube(n)?, threads, &MemoTable::new())?;
    let mut cases = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        let (pass, label) = match decompose_power_of_two(n, parity) {
            Ok(poly) => {
                let v = poly.value();
                (v == d, format!("{parity}: {} terms evaluate to {v}", poly.term_count()))
            }
            Err(Error::Falsified(msg)) => (false, format!("{parity}: {msg}")),
            Err(e) => return Err(e),
        };
        cases.push(Case {
            dump: label.clone(),
            label,
            pass,
            weight: 0,
        });
    }
    let dn = d.to_string();
    Ok(Suite {
        cases,
        summary: Box::new(move |ok, total| format!("{ok}/{total} parities evaluate to {dn}")),
    })
}

pub(crate) fn verify(args: &VerifyArgs, threads: usize) -> Result<Outcome> {
    let (lo, hi) = caps(args.theorem);
    if args.n < lo || args.n > hi {
        return Err(Error::InvalidArgument(format!(
            "this suite accepts {lo} <= n <= {hi}, got {}",
            args.n
        )));
    }
    let mode: CoverMode = args.mode.parse()?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let n = args.n;
    let suite = match args.theorem {
        Theorem::Partition => partition_suite(n, args.samples, &mut rng)?,
        Theorem::Corollary => corollary_suite(n, threads)?,
        Theorem::Conditions => conditions_suite(n, mode, args.samples, &mut rng)?,
        Theorem::Construction => construction_suite(n, mode)?,
        Theorem::Lemma2 => lemma2_suite(n, mode, args.samples, &mut rng)?,
        Theorem::Lemma3 => lemma3_suite(n, mode)?,
        Theorem::PowerOfTwo => power_of_two_suite(n, threads)?,
    };

    let total = suite.cases.len();
    let passed = suite.cases.iter().filter(|c| c.pass).count();
    let mut text = String::new();
    for c in &suite.cases {
        if total <= CASE_LINES || !c.pass {
            let _ = writeln!(text, "{} {}", if c.pass { "PASS" } else { "FAIL" }, c.label);
        }
    }
    let summary = (suite.summary)(passed, total);
    let _ = writeln!(text, "{summary}");
    let smallest = suite
        .cases
        .iter()
        .filter(|c| !c.pass)
        .min_by_key(|c| c.weight);
    if let Some(c) = smallest {
        let _ = writeln!(text, "counterexample: {}", c.dump);
    }
    let input = format!(
        "verify theorem={:?} n={n} samples={} seed={} mode={mode}",
        args.theorem, args.samples, args.seed
    );
    let report = RunReport::new(
        "verify",
        Some(n),
        input.as_bytes(),
        json!({
            "theorem": format!("{:?}", args.theorem),
            "mode": mode,
            "seed": args.seed,
            "passed": passed,
            "total": total,
            "summary": summary,
            "counterexample": smallest.map(|c| c.dump.clone()),
        }),
    );
    let csv = format!("theorem,n,passed,total\n{:?},{n},{passed},{total}\n", args.theorem);
    Ok(Outcome {
        report,
        text,
        csv: Some(csv),
        code: if passed == total { EXIT_OK } else { EXIT_PROPERTY_FAILURE },
    })
}

