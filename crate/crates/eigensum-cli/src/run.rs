//! Subcommand execution. Every flow resolves its arguments, computes, and
//! emits one artifact; the returned bool is the gate verdict (false means
//! exit code 1, "ran fine but the claim failed").

use crate::args::{
    load_graph, parse_family, AmplifyArgs, Cli, Command, ConstructArgs, MethodArg, PhiArgs,
    SearchArgs, SpectrumArgs, VerifyArgs,
};
use crate::render::{csv_header, emit, fmt9, json_artifact, run_header};
use crate::suites::{run_suite, SUITE_NAMES};
use crate::CliError;
use eigensum::codec::to_graph6;
use eigensum::construction::{gernert_certificate, gernert_graph, SOLVER_BUDGET};
use eigensum::search::{
    exhaustive, phi_table, stochastic, stochastic_from, MethodPolicy, SearchMethod,
};
use eigensum::verify::amplify;
use eigensum::eigenvalues;
use serde_json::{json, to_value};
use std::io::Write;

pub fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool, CliError> {
    match &cli.command {
        Command::Spectrum(a) => spectrum_cmd(cli, a, out, err),
        Command::Construct(a) => construct_cmd(cli, a, out, err),
        Command::Verify(a) => verify_cmd(cli, a, out, err),
        Command::Search(a) => search_cmd(cli, a, out, err),
        Command::Phi(a) => phi_cmd(cli, a, out, err),
        Command::Amplify(a) => amplify_cmd(cli, a, out, err),
    }
}

fn method_name(m: SearchMethod) -> &'static str {
    match m {
        SearchMethod::Exhaustive => "exhaustive",
        SearchMethod::Stochastic => "stochastic",
    }
}

fn spectrum_cmd(
    cli: &Cli,
    a: &SpectrumArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<bool, CliError> {
    let g = load_graph(&a.input, a.format)?;
    let s = eigenvalues(&g)?;
    let canonical = to_graph6(&g)?;
    let header = run_header(
        "spectrum",
        json!({"graph6": canonical, "json": a.json}),
        cli.seed,
    );
    if a.json {
        let artifact = json_artifact(
            header,
            vec![
                ("n", json!(g.n())),
                ("edge_count", json!(g.edge_count())),
                ("tol", json!(s.tol())),
                ("values", to_value(s.values())?),
            ],
        );
        emit(&artifact, &cli.output, out)?;
    } else {
        let rendered: Vec<String> = s.values().iter().map(|&v| fmt9(v)).collect();
        let artifact = format!("[{}]\n", rendered.join(", "));
        let _ = writeln!(err, "# run: {}", serde_json::to_string(&header)?);
        emit(&artifact, &cli.output, out)?;
    }
    Ok(true)
}

fn construct_cmd(
    cli: &Cli,
    a: &ConstructArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<bool, CliError> {
    let cert = gernert_certificate(a.k)?;
    let mut payload = vec![("certificate", to_value(&cert)?)];
    if let Some(n) = a.n {
        if n != cert.n {
            if n > SOLVER_BUDGET {
                return Err(CliError::new(format!(
                    "padded order {n} exceeds the solver budget {SOLVER_BUDGET}"
                )));
            }
            // Padding with isolated vertices keeps mu1 and mu2 (both are
            // positive here), so the padded witness scores the same value at
            // a larger order; re-solve rather than assume it.
            let g = gernert_graph(a.k, n)?;
            let s = eigenvalues(&g)?;
            let value = s.mu(1)? + s.mu(2)?;
            payload.push((
                "padded",
                json!({
                    "n": n,
                    "value": value,
                    "phi": value / n as f64,
                    "witness_graph6": to_graph6(&g)?,
                }),
            ));
        }
    }
    let header = run_header(
        "construct",
        json!({"k": a.k, "n": a.n.unwrap_or(cert.n)}),
        cli.seed,
    );
    let passed = cert.report.passed;
    let value = cert.value;
    let n = cert.n;
    let artifact = json_artifact(header, payload);
    emit(&artifact, &cli.output, out)?;
    let _ = writeln!(
        err,
        "construct k={}: {} (mu1 + mu2 = {} on n = {})",
        a.k,
        if passed { "PASS" } else { "FAIL" },
        fmt9(value),
        n
    );
    Ok(passed)
}

fn verify_cmd(
    cli: &Cli,
    a: &VerifyArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<bool, CliError> {
    let names: Vec<&'static str> = if a.suite == "all" {
        SUITE_NAMES.to_vec()
    } else {
        let name = SUITE_NAMES
            .iter()
            .copied()
            .find(|&s| s == a.suite)
            .ok_or_else(|| {
                CliError::new(format!(
                    "unknown suite `{}`; known: {}, or all",
                    a.suite,
                    SUITE_NAMES.join(", ")
                ))
            })?;
        vec![name]
    };
    let header = run_header(
        "verify",
        json!({"suite": a.suite, "trials": a.trials}),
        cli.seed,
    );
    let mut body = serde_json::to_string(&json!({"run": header}))?;
    body.push('\n');
    let mut checks = 0usize;
    let mut passed = 0usize;
    for name in names {
        for line in run_suite(name, a.trials, cli.seed)? {
            checks += 1;
            if line.report.passed {
                passed += 1;
            }
            body.push_str(&serde_json::to_string(&line)?);
            body.push('\n');
        }
    }
    let verdict = if passed == checks { "PASS" } else { "FAIL" };
    body.push_str(&serde_json::to_string(
        &json!({"summary": {"checks": checks, "passed": passed, "verdict": verdict}}),
    )?);
    body.push('\n');
    emit(&body, &cli.output, out)?;
    let _ = writeln!(err, "verify: {verdict} {passed}/{checks}");
    Ok(passed == checks)
}

fn search_cmd(
    cli: &Cli,
    a: &SearchArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<bool, CliError> {
    let form = a.form.resolve()?;
    let family = parse_family(&a.family)?;
    let method = match a.method {
        MethodArg::Auto => {
            if a.n <= a.exhaustive_cap {
                SearchMethod::Exhaustive
            } else {
                SearchMethod::Stochastic
            }
        }
        MethodArg::Exhaustive => SearchMethod::Exhaustive,
        MethodArg::Stochastic => SearchMethod::Stochastic,
    };
    if method == SearchMethod::Exhaustive && a.warm_start_gernert {
        return Err(CliError::new(
            "--warm-start-gernert needs the stochastic engine",
        ));
    }
    let record = match method {
        SearchMethod::Exhaustive => exhaustive(a.n, &form, &family, a.exhaustive_cap)?,
        SearchMethod::Stochastic => {
            let warm = if a.warm_start_gernert && a.n >= 21 {
                let g = gernert_graph(a.n / 21, a.n)?;
                // Outside `all`, membership may be false or undecidable at
                // this order; both mean a cold start.
                matches!(family.member(&g), Ok(true)).then_some(g)
            } else {
                None
            };
            match warm {
                Some(w) => stochastic_from(a.n, &w, &form, &family, cli.seed, a.restarts, a.steps)?,
                None => stochastic(a.n, &form, &family, cli.seed, a.restarts, a.steps)?,
            }
        }
    };
    let header = run_header(
        "search",
        json!({
            "n": a.n,
            "form": to_value(&form)?,
            "family": family.to_string(),
            "method": method_name(method),
            "restarts": a.restarts,
            "steps": a.steps,
            "warm_start_gernert": a.warm_start_gernert,
            "exhaustive_cap": a.exhaustive_cap,
        }),
        cli.seed,
    );
    let artifact = json_artifact(header, vec![("record", to_value(&record)?)]);
    emit(&artifact, &cli.output, out)?;
    let _ = writeln!(
        err,
        "search n={} family={}: value {} by {}",
        a.n,
        family,
        fmt9(record.value),
        method_name(record.method)
    );
    Ok(true)
}

fn phi_cmd(
    cli: &Cli,
    a: &PhiArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<bool, CliError> {
    let ns = a.orders()?;
    let form = a.form.resolve()?;
    let family = parse_family(&a.family)?;
    let policy = MethodPolicy {
        exhaustive_cap: a.exhaustive_cap,
        seed: cli.seed,
        restarts: a.restarts,
        steps: a.steps,
        warm_start_gernert: a.warm_start_gernert,
    };
    let records = phi_table(&form, &family, &ns, &policy)?;
    let header = run_header(
        "phi",
        json!({
            "ns": ns,
            "form": to_value(&form)?,
            "family": family.to_string(),
            "restarts": a.restarts,
            "steps": a.steps,
            "warm_start_gernert": a.warm_start_gernert,
            "exhaustive_cap": a.exhaustive_cap,
        }),
        cli.seed,
    );
    let mut csv = csv_header(&header);
    csv.push_str("n,value,phi,method,seed,witness_graph6\n");
    for r in &records {
        let seed = r.seed.map(|s| s.to_string()).unwrap_or_default();
        csv.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.n,
            r.value,
            r.phi,
            method_name(r.method),
            seed,
            r.witness
        ));
    }
    emit(&csv, &cli.output, out)?;
    let _ = writeln!(err, "phi: {} rows", records.len());
    Ok(true)
}

fn amplify_cmd(
    cli: &Cli,
    a: &AmplifyArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<bool, CliError> {
    let form = a.form.resolve()?;
    let family = parse_family(&a.family)?;
    let g = match (&a.input, a.gernert_k) {
        (Some(path), None) => load_graph(path, a.format)?,
        (None, Some(k)) => {
            let n = k
                .checked_mul(21)
                .filter(|&n| n <= SOLVER_BUDGET)
                .ok_or_else(|| {
                    CliError::new(format!(
                        "gernert order 21k exceeds the solver budget {SOLVER_BUDGET}"
                    ))
                })?;
            gernert_graph(k, n)?
        }
        (None, None) => return Err(CliError::new("give one of --in or --gernert-k")),
        (Some(_), Some(_)) => unreachable!("clap marks these as conflicting"),
    };
    let n = g.n();
    let f_over_n = form.evaluate(&g)? / n as f64;
    let c_ref = a.c_ref.unwrap_or(f_over_n);
    let report = amplify(&g, &family, &form, a.big_n, c_ref, a.eps)?;
    let header = run_header(
        "amplify",
        json!({
            "witness_graph6": to_graph6(&g)?,
            "form": to_value(&form)?,
            "family": family.to_string(),
            "N": a.big_n,
            "c_ref": c_ref,
            "eps": a.eps,
        }),
        cli.seed,
    );
    let holds = report.chain_holds;
    let artifact = json_artifact(header, vec![("report", to_value(&report)?)]);
    emit(&artifact, &cli.output, out)?;
    let _ = writeln!(
        err,
        "amplify n={} -> N={}: chain {}",
        n,
        a.big_n,
        if holds { "holds" } else { "FAILS" }
    );
    Ok(holds)
}
