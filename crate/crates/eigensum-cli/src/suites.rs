//! Instance generation for `eigensum verify`. Each suite draws its random
//! instances from a ChaCha stream keyed by (seed, suite), so suites are
//! reproducible independently of which others run alongside them.

use crate::CliError;
use eigensum::codec::to_graph6;
use eigensum::construction::{gernert_certificate, gernert_graph};
use eigensum::objective::preset;
use eigensum::search::sample_member;
use eigensum::verify::{
    amplify, check_blowup_eigenvalue_bounds, check_blowup_spectrum_clique,
    check_blowup_spectrum_independent, check_interlacing, check_subset_deletion_bounds,
    check_two_eigenvalue_chain, check_vertex_deletion_bounds, BoundDetail,
};
use eigensum::{CheckReport, Family, Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::Serialize;
use serde_json::{json, Value};

/// All suites, in the order `verify --suite all` runs them.
pub const SUITE_NAMES: [&str; 8] = [
    "blowup-spectra",
    "blowup-bounds",
    "vertex-deletion",
    "subset-deletion",
    "interlacing",
    "mu1mu2",
    "amplify",
    "construction",
];

/// One executed check: which suite, on what instance, with what outcome.
#[derive(Serialize)]
pub struct SuiteLine {
    pub suite: &'static str,
    pub instance: Value,
    pub report: CheckReport,
}

/// A fresh generator for one suite. Streams are fixed per suite name, so a
/// suite sees the same instances whether it runs alone or inside `all`.
fn rng_for(seed: u64, suite_index: usize) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(1 + suite_index as u64);
    rng
}

/// G(n, p) with the given edge probability.
fn random_graph(n: usize, p: f64, rng: &mut ChaCha12Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are in range")
}

fn sniff(g: &Graph) -> Value {
    Value::String(to_graph6(g).expect("encodable order"))
}

pub fn run_suite(name: &'static str, trials: usize, seed: u64) -> Result<Vec<SuiteLine>, CliError> {
    let index = SUITE_NAMES
        .iter()
        .position(|&s| s == name)
        .ok_or_else(|| CliError::new(format!("unknown suite `{name}`")))?;
    let mut rng = rng_for(seed, index);
    let mut lines = Vec::new();
    let mut push = |instance: Value, report: CheckReport| {
        lines.push(SuiteLine {
            suite: name,
            instance,
            report,
        });
    };
    match name {
        "blowup-spectra" => {
            for _ in 0..trials {
                let n = rng.random_range(2..=10);
                let t = rng.random_range(1..=4);
                let g = random_graph(n, rng.random_range(0.1..0.9), &mut rng);
                let instance = json!({"graph6": sniff(&g), "t": t});
                push(instance.clone(), check_blowup_spectrum_independent(&g, t)?);
                push(instance, check_blowup_spectrum_clique(&g, t)?);
            }
        }
        "blowup-bounds" => {
            for _ in 0..trials {
                let n = rng.random_range(3..=9);
                let t = rng.random_range(2..=4);
                let k = rng.random_range(1..n);
                let g = random_graph(n, rng.random_range(0.1..0.9), &mut rng);
                let instance = json!({"graph6": sniff(&g), "t": t, "k": k});
                push(instance, check_blowup_eigenvalue_bounds(&g, t, k)?);
            }
        }
        "vertex-deletion" => {
            for _ in 0..trials {
                let n = rng.random_range(2..=12);
                let g = random_graph(n, rng.random_range(0.05..0.95), &mut rng);
                let v = rng.random_range(0..n);
                let instance = json!({"graph6": sniff(&g), "v": v});
                push(instance, check_vertex_deletion_bounds(&g, v)?);
            }
        }
        "subset-deletion" => {
            for _ in 0..trials {
                let n = rng.random_range(4..=12);
                let l = rng.random_range(1..=3.min(n - 2));
                let g = random_graph(n, rng.random_range(0.05..0.95), &mut rng);
                let mut picks: Vec<usize> = (0..n).collect();
                picks.shuffle(&mut rng);
                picks.truncate(l);
                let drop = VertexSet::new(picks);
                let instance = json!({"graph6": sniff(&g), "drop": drop.members()});
                push(instance, check_subset_deletion_bounds(&g, &drop)?);
            }
        }
        "interlacing" => {
            for _ in 0..trials {
                let n = rng.random_range(2..=12);
                let g = random_graph(n, rng.random_range(0.05..0.95), &mut rng);
                let v = rng.random_range(0..n);
                let instance = json!({"graph6": sniff(&g), "v": v});
                push(instance, check_interlacing(&g, v)?);
            }
        }
        "mu1mu2" => {
            let canned: Vec<(&str, Graph)> = vec![
                ("complete:6", Graph::complete(6)),
                ("empty:6", Graph::empty(6)),
                (
                    "cycle:7",
                    Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)])
                        .expect("cycle edges"),
                ),
                ("star:6", Graph::complete(1).join(&Graph::empty(5))),
                ("gernert:1", gernert_graph(1, 21)?),
            ];
            for (note, g) in canned {
                let instance = json!({"graph6": sniff(&g), "note": note});
                push(instance, check_two_eigenvalue_chain(&g)?);
            }
            for _ in 0..trials {
                let n = rng.random_range(2..=16);
                let g = random_graph(n, rng.random_range(0.05..0.95), &mut rng);
                let instance = json!({"graph6": sniff(&g)});
                push(instance, check_two_eigenvalue_chain(&g)?);
            }
        }
        "amplify" => {
            let form = preset("mu1+mu2", 0).expect("built-in preset");
            let families = [Family::All, Family::kr_free(3)?, Family::r_partite(2)?];
            for trial in 0..trials {
                let family = &families[trial % families.len()];
                let n = rng.random_range(3..=8);
                let g = sample_member(family, n, &mut rng)?;
                let big_n = rng.random_range(2 * n..=48);
                let c_ref = form.evaluate(&g)? / n as f64;
                let eps = 0.25;
                let report = amplify(&g, family, &form, big_n, c_ref, eps)?;
                let instance = json!({
                    "graph6": sniff(&g),
                    "family": family.to_string(),
                    "N": big_n,
                    "c_ref": c_ref,
                    "eps": eps,
                });
                // Shape the chain inequality as a margin report:
                // F(G1)/N >= F(G)/n - sum(errors), with the report's slack.
                let detail = BoundDetail {
                    index: "chain".to_string(),
                    lhs: report.f_over_n - report.error_total(),
                    rhs: report.f1_over_big_n,
                    margin: report.f1_over_big_n - (report.f_over_n - report.error_total()),
                    slack: report.slack,
                };
                let passed = report.chain_holds;
                push(
                    instance,
                    CheckReport {
                        name: "amplify".to_string(),
                        passed,
                        warning: passed && detail.tight(),
                        margin: detail.margin,
                        slack: detail.slack,
                        details: vec![detail],
                    },
                );
            }
        }
        "construction" => {
            for k in 1..=trials.min(5) {
                let cert = gernert_certificate(k)?;
                let instance = json!({"k": k, "witness_graph6": cert.witness_graph6});
                push(instance, cert.report);
            }
        }
        _ => unreachable!("membership checked above"),
    }
    Ok(lines)
}
