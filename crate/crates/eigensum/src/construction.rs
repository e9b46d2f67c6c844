//! A family of graphs whose two largest adjacency eigenvalues sum to more
//! than the number of vertices.
//!
//! For a scale `k >= 1`, the graph is the join of a clique on `5k` vertices
//! with the disjoint union of two cliques on `8k` vertices each, padded with
//! isolated vertices up to the requested order. On exactly `n = 21k`
//! vertices its spectrum is known in closed form: the two largest
//! eigenvalues are
//!
//! ```text
//! mu1 = ((13k - 2) + k sqrt(329)) / 2      mu2 = 8k - 1
//! ```
//!
//! (`mu1` solves `(x - 5k + 1)(x - 8k + 1) = 80 k^2`, the characteristic
//! equation of the join's two-block quotient; `mu2` comes from the
//! difference eigenvector across the two equal cliques), so
//!
//! ```text
//! (mu1 + mu2) / n = (29 + sqrt 329) / 42 - 2 / (21 k)  >  1   for k >= 1.
//! ```
//!
//! The ratio tends to [`ratio_limit`] (about 1.12234) from below as `k`
//! grows, which pins the asymptotic maximum of `(mu1 + mu2) / n` between
//! that value and `2 / sqrt 3` (about 1.1547).

use crate::codec::to_graph6;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectrum::{eigenvalues, SLACK_FLOOR};
use crate::verify::{BoundDetail, CheckReport};
use serde::{Deserialize, Serialize};

/// Largest graph order the certificate routine will hand to the dense
/// eigensolver.
pub const SOLVER_BUDGET: usize = 2000;

/// `(29 + sqrt 329) / 42`, the limit of `(mu1 + mu2) / n` along the family.
pub fn ratio_limit() -> f64 {
    (29.0 + 329f64.sqrt()) / 42.0
}

/// The closed-form value `mu1 + mu2 = ((29k - 4) + k sqrt 329) / 2` of the
/// scale-`k` member on `21k` vertices.
pub fn predicted_value(k: usize) -> Result<f64> {
    if k < 1 {
        return Err(Error::ConstructionOrder);
    }
    let kf = k as f64;
    Ok(((29.0 * kf - 4.0) + kf * 329f64.sqrt()) / 2.0)
}

/// A floor for the maximum of `mu1 + mu2` over graphs of any order `n`:
/// `ratio_limit() * n - 25`.
pub fn lower_bound(n: usize) -> f64 {
    ratio_limit() * n as f64 - 25.0
}

/// The ceiling `2 n / sqrt 3` for `mu1 + mu2` on `n` vertices.
pub fn upper_bound(n: usize) -> f64 {
    2.0 * n as f64 / 3f64.sqrt()
}

/// Builds the scale-`k` member on `n >= 21k` vertices: the join of `K_{5k}`
/// with `K_{8k} + K_{8k}`, plus `n - 21k` isolated vertices.
pub fn gernert_graph(k: usize, n: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::ConstructionOrder);
    }
    if n < 21 * k {
        return Err(Error::ConstructionPad { n, k });
    }
    let core = Graph::complete(5 * k)
        .join(&Graph::complete(8 * k).disjoint_union(&Graph::complete(8 * k)));
    Ok(core.add_isolated(n - 21 * k))
}

/// A solved instance of the construction at its natural order `n = 21k`,
/// with the checks that certify `mu1 + mu2 > n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GernertCertificate {
    pub k: usize,
    pub n: usize,
    /// Closed-form `mu1 + mu2`.
    pub predicted: f64,
    pub mu1: f64,
    pub mu2: f64,
    /// Solved `mu1 + mu2`.
    pub value: f64,
    /// Non-gating cross-check: the solved `mu2` agreed with `8k - 1`.
    #[serde(rename = "mu2_matches_8k_minus_1")]
    pub mu2_matches: bool,
    pub report: CheckReport,
    pub witness_graph6: String,
}

/// Solves the scale-`k` member on `21k` vertices and certifies, with
/// explicit margins, that its two top eigenvalues behave as predicted and
/// sum to more than `n` (but no more than `2n / sqrt 3`).
pub fn gernert_certificate(k: usize) -> Result<GernertCertificate> {
    if k < 1 {
        return Err(Error::ConstructionOrder);
    }
    let n = 21 * k;
    if n > SOLVER_BUDGET {
        return Err(Error::SolverBudget {
            n,
            budget: SOLVER_BUDGET,
        });
    }
    let g = gernert_graph(k, n)?;
    let s = eigenvalues(&g)?;
    let mu1 = s.mu(1)?;
    let mu2 = s.mu(2)?;
    let value = mu1 + mu2;
    let predicted = predicted_value(k)?;
    let slack = s.tol().max(SLACK_FLOOR);
    let nf = n as f64;
    let mu2_exact = (8 * k - 1) as f64;
    let bounds = [
        ("value_vs_predicted", predicted, value),
        ("mu2_floor", mu2_exact, mu2),
        ("exceeds_order", nf, value),
        ("upper_bound", value, upper_bound(n)),
    ];
    let details: Vec<BoundDetail> = bounds
        .iter()
        .map(|&(index, lhs, rhs)| BoundDetail {
            index: index.to_string(),
            lhs,
            rhs,
            margin: rhs - lhs,
            slack,
        })
        .collect();
    let passed = details.iter().all(BoundDetail::holds);
    let warning = passed && details.iter().any(BoundDetail::tight);
    let margin = details
        .iter()
        .map(|d| d.margin)
        .fold(f64::INFINITY, f64::min);
    let report = CheckReport {
        name: "gernert-construction".to_string(),
        passed,
        warning,
        margin,
        slack,
        details,
    };
    Ok(GernertCertificate {
        k,
        n,
        predicted,
        mu1,
        mu2,
        value,
        mu2_matches: (mu2 - mu2_exact).abs() <= 1e-7 * nf,
        report,
        witness_graph6: to_graph6(&g)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::from_graph6;

    #[test]
    fn edge_count_at_scale_one() {
        // C(5,2) + 2 C(8,2) + 5 * 16 = 10 + 56 + 80.
        let g = gernert_graph(1, 21).unwrap();
        assert_eq!(g.n(), 21);
        assert_eq!(g.edge_count(), 146);
        let padded = gernert_graph(1, 25).unwrap();
        assert_eq!(padded.n(), 25);
        assert_eq!(padded.edge_count(), 146);
    }

    #[test]
    fn construction_validation() {
        assert!(matches!(gernert_graph(0, 0), Err(Error::ConstructionOrder)));
        assert!(matches!(
            gernert_graph(1, 20),
            Err(Error::ConstructionPad { n: 20, k: 1 })
        ));
        assert!(matches!(predicted_value(0), Err(Error::ConstructionOrder)));
        assert!(matches!(gernert_certificate(0), Err(Error::ConstructionOrder)));
        assert!(matches!(
            gernert_certificate(96),
            Err(Error::SolverBudget { n: 2016, budget: SOLVER_BUDGET })
        ));
    }

    #[test]
    fn predicted_values() {
        let r = 329f64.sqrt();
        assert!((predicted_value(1).unwrap() - (25.0 + r) / 2.0).abs() < 1e-12);
        assert!((predicted_value(2).unwrap() - (27.0 + r)).abs() < 1e-12);
        assert!((predicted_value(3).unwrap() - 68.70753).abs() < 1e-5);
    }

    #[test]
    fn quadratic_identity_for_mu1() {
        // mu1 solves (x - 5k + 1)(x - 8k + 1) = 80 k^2 for every scale.
        for k in 1..=50u32 {
            let kf = k as f64;
            let x = ((13.0 * kf - 2.0) + kf * 329f64.sqrt()) / 2.0;
            let residual = (x - 5.0 * kf + 1.0) * (x - 8.0 * kf + 1.0) - 80.0 * kf * kf;
            assert!(residual.abs() <= 1e-6, "k={k} residual={residual}");
        }
    }

    #[test]
    fn ratio_identity() {
        for k in 1..=50usize {
            let lhs = predicted_value(k).unwrap() / (21.0 * k as f64);
            let rhs = ratio_limit() - 2.0 / (21.0 * k as f64);
            assert!((lhs - rhs).abs() < 1e-12, "k={k}");
            assert!(lhs > 1.0);
        }
    }

    #[test]
    fn bounds() {
        assert!((lower_bound(42) - (4.0 + 329f64.sqrt())).abs() < 1e-12);
        assert!((upper_bound(21) - 24.24871130596428).abs() < 1e-10);
        // The family sits strictly between the two bounds at n = 21k.
        for k in 1..=4 {
            let v = predicted_value(k).unwrap();
            assert!(v > lower_bound(21 * k));
            assert!(v < upper_bound(21 * k));
        }
    }

    #[test]
    fn certificates_small_scales() {
        let mut last = 0.0;
        for k in 1..=3 {
            let c = gernert_certificate(k).unwrap();
            assert_eq!(c.n, 21 * k);
            assert!(c.report.passed, "k={k}: {:?}", c.report);
            assert!(c.mu2_matches);
            assert!((c.value - c.predicted).abs() < 1e-8, "k={k}");
            assert!(c.value > c.n as f64);
            assert!(c.value > last);
            last = c.value;
            assert_eq!(c.report.details.len(), 4);
            let w = from_graph6(&c.witness_graph6).unwrap();
            assert_eq!(w.n(), c.n);
            assert_eq!(w.edge_count(), gernert_graph(k, c.n).unwrap().edge_count());
        }
    }

    #[test]
    fn certificate_json_round_trip() {
        let c = gernert_certificate(1).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert!(json.contains("\"mu2_matches_8k_minus_1\":true"));
        let back: GernertCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }
}
