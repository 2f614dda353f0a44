use std::fs;
use std::path::Path;
use std::time::Duration;

use serde_json::json;

use crate::cli::{CheckArgs, CountArgs, DecomposeArgs, Outcome, ParityArg, RunReport, EXIT_OK};
use crate::error::{Error, Result};
use crate::partition::{
    count_via_partition_with, decompose_power_of_two, minimality_check, EngineConfig, MemoTable,
    Parity, PivotStrategy,
};
use crate::partition::complete::completeness_witness;
use crate::poset::{parse_poset, CoverMode, Subposet, V3Witness};

pub(crate) fn read_poset(path: &Path) -> Result<(Subposet, Vec<u8>)> {
    let bytes = fs::read(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    let text = String::from_utf8_lossy(&bytes);
    Ok((parse_poset(&text)?, bytes))
}

pub(crate) fn witness_json(w: &V3Witness) -> serde_json::Value {
    json!({
        "apex": w.apex.to_string(),
        "arms": [w.arms.0.to_string(), w.arms.1.to_string()],
        "orientation": w.orientation,
    })
}

pub(crate) fn cube_arg(n: usize, max: usize) -> Result<Subposet> {
    if n > max {
        return Err(Error::InvalidArgument(format!(
            "n = {n} is above the cap of {max}"
        )));
    }
    Subposet::cube(n)
}

pub(crate) fn count(args: &CountArgs, threads: usize) -> Result<Outcome> {
    let (poset, input) = match (&args.n, &args.poset) {
        (Some(n), _) => (cube_arg(*n, args.max_n)?, format!("cube n={n}").into_bytes()),
        (None, Some(path)) => read_poset(path)?,
        (None, None) => return Err(Error::InvalidArgument("give --n or --poset".into())),
    };
    let strategy = match &args.pivots {
        Some(path) => {
            let (pivots, _) = read_poset(path)?;
            PivotStrategy::Fixed(pivots)
        }
        None => args.strategy.parse()?,
    };
    let cache = match args.cache_capacity {
        Some(cap) => MemoTable::bounded(cap),
        None => MemoTable::new(),
    };
    let config = EngineConfig {
        threads,
        node_budget: args.node_budget,
        time_limit: Some(Duration::from_secs(args.time_limit)),
        duality: true,
    };
    let value = count_via_partition_with(
        &poset,
        &strategy,
        (!args.no_cache).then_some(&cache),
        &config,
    )?;
    let mut report = RunReport::new("count", Some(poset.dim()), &input, json!(value));
    report.cache = cache.stats();
    Ok(Outcome {
        text: format!("{value}\n"),
        csv: Some(format!("n,count\n{},{value}\n", poset.dim())),
        report,
        code: EXIT_OK,
    })
}

pub(crate) fn decompose(args: &DecomposeArgs, threads: usize) -> Result<Outcome> {
    if args.n < 2 || args.n > args.max_n {
        return Err(Error::InvalidArgument(format!(
            "decompose needs 2 <= n <= {}, got {}",
            args.max_n, args.n
        )));
    }
    let parity = match args.parity {
        ParityArg::Even => Parity::Even,
        ParityArg::Odd => Parity::Odd,
    };
    let poly = decompose_power_of_two(args.n, parity)?;
    let value = poly.value();
    let cache = MemoTable::new();
    let config = EngineConfig {
        threads,
        ..EngineConfig::default()
    };
    let direct = count_via_partition_with(
        &Subposet::cube(args.n)?,
        &PivotStrategy::default(),
        Some(&cache),
        &config,
    )?;
    if direct != value {
        return Err(Error::Falsified(format!(
            "polynomial evaluates to {value} but D_{} = {direct}",
            args.n
        )));
    }
    let mut csv = String::from("exponent,coefficient,term_value\n");
    for (j, c) in poly.coefficients() {
        csv.push_str(&format!("{j},{c},{}\n", c * &crate::BigCount::pow2(*j as usize)));
    }
    csv.push_str(&format!("total,,{value}\n"));
    let input = format!("decompose n={} parity={parity}", args.n);
    let mut report = RunReport::new(
        "decompose",
        Some(args.n),
        input.as_bytes(),
        json!({ "value": value, "parity": parity, "terms": poly.term_count() }),
    );
    report.polynomial = Some(poly.clone());
    report.cache = cache.stats();
    Ok(Outcome {
        text: format!("{poly} = {value}\n"),
        csv: Some(csv),
        report,
        code: EXIT_OK,
    })
}

pub(crate) fn check_complete(args: &CheckArgs) -> Result<Outcome> {
    let mode: CoverMode = args.mode.parse()?;
    let (subset, bytes) = read_poset(&args.subset)?;
    let n = args.n.unwrap_or(subset.dim());
    if subset.dim() != n {
        return Err(Error::DimensionMismatch {
            left: subset.dim(),
            right: n,
        });
    }
    let cube = Subposet::cube(n)?;
    let witness = completeness_witness(&subset, &cube, mode)?;
    let report_m = minimality_check(&subset, n, mode)?;

    let mut text = format!(
        "complete: {}\n",
        if witness.is_none() { "yes" } else { "no" }
    );
    match &witness {
        Some(w) => text.push_str(&format!("witness: {w}\n")),
        None => text.push_str("witness: none\n"),
    }
    text.push_str(&format!(
        "minimality: {} (size {}, bound {})\n",
        report_m.class, report_m.size, report_m.bound
    ));
    if !report_m.size_law_holds {
        text.push_str("size law: violated\n");
    }
    let mut report = RunReport::new(
        "check-complete",
        Some(n),
        &bytes,
        json!({
            "complete": witness.is_none(),
            "mode": mode,
            "minimality": report_m.class,
            "size": report_m.size,
            "bound": report_m.bound,
            "size_law_holds": report_m.size_law_holds,
        }),
    );
    report.witnesses = Some(witness.iter().map(witness_json).collect());
    Ok(Outcome {
        text,
        csv: None,
        report,
        code: EXIT_OK,
    })
}
