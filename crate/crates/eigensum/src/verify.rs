//! Numerical certification of spectral inequalities.
//!
//! Every check here evaluates a family of inequalities `lhs <= rhs` on
//! concrete graphs and reports margins rather than a bare boolean. A check
//! *passes* when every margin `rhs - lhs` clears `-slack`, where the slack
//! is derived from the eigensolver's achieved off-diagonal norms (floored at
//! [`SLACK_FLOOR`]). A passing check additionally carries a *warning* flag
//! when some margin is within slack of zero: the inequality held but was
//! numerically tight, which is expected whenever an instance achieves
//! equality exactly.
//!
//! The checks:
//!
//! * blow-up spectra: replacing each vertex by `t` independent copies scales
//!   the spectrum by `t` and pads with zeros; replacing by `t`-cliques maps
//!   `mu` to `t*mu + t - 1` and pads with `-1`s.
//! * blow-up deviation bounds: for `1 <= s <= k < n` the sorted positions
//!   `s` (top) and `tn - s + 1` (bottom) of a blow-up's spectrum stay within
//!   `t*n/sqrt(n-k)` of the scaled originals, one-sidedly.
//! * vertex and subset deletion: eigenvalues move monotonically under
//!   deletion (interlacing) and by less than `3*sqrt(n)` per deleted vertex
//!   while `s <= 3n/4`.
//! * the two-eigenvalue chain: `mu1^2 + mu2^2 <= 2m`, the complement
//!   coupling `mu2(G) + mu_min(G') <= -1`, its squared consequence, and the
//!   headline `mu1 + mu2 <= (2/sqrt 3) n`.
//! * amplification: blowing a family member up to order `N` loses at most an
//!   explicit error term from the normalized score `F(G)/n`, which turns a
//!   single good witness into a lower bound for all large orders.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::objective::{Family, LinearForm};
use crate::spectrum::{eigenvalues, Spectrum, SLACK_FLOOR};
use serde::{Deserialize, Serialize};

/// Per-unit tolerance for comparing a blow-up's solved spectrum against the
/// closed-form multiset; the allowance is this times `t * n`.
pub const BLOWUP_MULTISET_TOL_PER_UNIT: f64 = 1e-7;

/// One verified inequality `lhs <= rhs`, with the slack that was granted to
/// it and the achieved margin `rhs - lhs`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundDetail {
    pub index: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub slack: f64,
}

impl BoundDetail {
    pub fn holds(&self) -> bool {
        self.margin >= -self.slack
    }

    pub fn tight(&self) -> bool {
        self.margin <= self.slack
    }
}

/// Outcome of one check on one graph: all inequalities with their margins,
/// plus the aggregate verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    /// Passed, but some inequality was tight to within its slack.
    pub warning: bool,
    /// Smallest margin over all inequalities in the check.
    pub margin: f64,
    /// Base slack derived from the solver tolerances of the spectra used.
    pub slack: f64,
    pub details: Vec<BoundDetail>,
}

/// Accumulates inequalities for one report.
struct Checker {
    name: &'static str,
    slack: f64,
    details: Vec<BoundDetail>,
}

impl Checker {
    fn new(name: &'static str, slack: f64) -> Checker {
        Checker {
            name,
            slack,
            details: Vec::new(),
        }
    }

    /// Records `lhs <= rhs` with the base slack.
    fn le(&mut self, index: String, lhs: f64, rhs: f64) {
        self.le_with(index, lhs, rhs, self.slack);
    }

    /// Records `lhs <= rhs` with a custom slack, for quantities whose solver
    /// error is amplified (squares, scaled eigenvalues).
    fn le_with(&mut self, index: String, lhs: f64, rhs: f64, slack: f64) {
        self.details.push(BoundDetail {
            index,
            lhs,
            rhs,
            margin: rhs - lhs,
            slack,
        });
    }

    fn finish(self) -> CheckReport {
        assert!(!self.details.is_empty(), "check produced no inequalities");
        let passed = self.details.iter().all(BoundDetail::holds);
        let warning = passed && self.details.iter().any(BoundDetail::tight);
        let margin = self
            .details
            .iter()
            .map(|d| d.margin)
            .fold(f64::INFINITY, f64::min);
        CheckReport {
            name: self.name.to_string(),
            passed,
            warning,
            margin,
            slack: self.slack,
            details: self.details,
        }
    }
}

/// Sums solver tolerances into a working slack, never below the floor.
fn combined_slack(tols: &[f64]) -> f64 {
    tols.iter().sum::<f64>().max(SLACK_FLOOR)
}

/// Closed-form spectrum of the independent blow-up: each eigenvalue scaled
/// by `t`, padded with `n (t - 1)` zeros.
fn independent_blowup_multiset(sg: &Spectrum, t: usize) -> Vec<f64> {
    let n = sg.n();
    let mut v: Vec<f64> = sg.values().iter().map(|&x| t as f64 * x).collect();
    v.extend(std::iter::repeat(0.0).take(n * (t - 1)));
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// Closed-form spectrum of the clique blow-up: `mu -> t mu + t - 1`, padded
/// with `n (t - 1)` copies of `-1`.
fn clique_blowup_multiset(sg: &Spectrum, t: usize) -> Vec<f64> {
    let n = sg.n();
    let shift = (t - 1) as f64;
    let mut v: Vec<f64> = sg.values().iter().map(|&x| t as f64 * x + shift).collect();
    v.extend(std::iter::repeat(-1.0).take(n * (t - 1)));
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

fn check_blowup_multiset(
    name: &'static str,
    g: &Graph,
    blown: &Graph,
    expected: Vec<f64>,
    t: usize,
) -> Result<CheckReport> {
    let sb = eigenvalues(blown)?;
    let actual = sb.values();
    debug_assert_eq!(actual.len(), expected.len());
    let mut worst = 0.0f64;
    let mut at = 0usize;
    for (j, (&a, &e)) in actual.iter().zip(&expected).enumerate() {
        let dev = (a - e).abs();
        if dev > worst {
            worst = dev;
            at = j;
        }
    }
    let allowance = BLOWUP_MULTISET_TOL_PER_UNIT * (t * g.n()) as f64;
    let mut c = Checker::new(name, combined_slack(&[sb.tol()]));
    c.le(format!("max_abs_dev[sorted[{at}]]"), worst, allowance);
    Ok(c.finish())
}

/// Compares the solved spectrum of `g`'s independent `t`-blow-up against the
/// closed form, as a single worst-deviation inequality.
pub fn check_blowup_spectrum_independent(g: &Graph, t: usize) -> Result<CheckReport> {
    let blown = g.blowup_independent(t)?;
    let sg = eigenvalues(g)?;
    check_blowup_multiset(
        "blowup-spectrum-independent",
        g,
        &blown,
        independent_blowup_multiset(&sg, t),
        t,
    )
}

/// Compares the solved spectrum of `g`'s clique `t`-blow-up against the
/// closed form, as a single worst-deviation inequality.
pub fn check_blowup_spectrum_clique(g: &Graph, t: usize) -> Result<CheckReport> {
    let blown = g.blowup_clique(t)?;
    let sg = eigenvalues(g)?;
    check_blowup_multiset(
        "blowup-spectrum-clique",
        g,
        &blown,
        clique_blowup_multiset(&sg, t),
        t,
    )
}

/// One-sided deviation bounds for the top and bottom `k` eigenvalues of both
/// blow-ups of `g`, for every depth `s` in `1..=k`.
///
/// Writing `B = t n / sqrt(n - k)`:
///
/// * independent, top:    `t mu_s(G) <= mu_s(G_t)          < t mu_s(G) + B`
/// * independent, bottom: `t mu'_s(G) - B < mu'_s(G_t)     <= t mu'_s(G)`
/// * clique, top:         `t mu_s(G) + t - 1 <= mu_s(G^t)  < t mu_s(G) + t - 1 + (t + B)`
/// * clique, bottom:      symmetric, below `t mu'_s(G) + t - 1`
///
/// where `mu'_s` is the `s`-th smallest eigenvalue and the blow-up's bottom
/// index is counted among its `t n` values.
pub fn check_blowup_eigenvalue_bounds(g: &Graph, t: usize, k: usize) -> Result<CheckReport> {
    let n = g.n();
    if k < 1 || k >= n {
        return Err(Error::DepthRange { k, n });
    }
    if t < 2 {
        return Err(Error::BlowupFactorTooSmall { t });
    }
    let sg = eigenvalues(g)?;
    let si = eigenvalues(&g.blowup_independent(t)?)?;
    let sc = eigenvalues(&g.blowup_clique(t)?)?;
    let tf = t as f64;
    let bound = tf * n as f64 / ((n - k) as f64).sqrt();
    let shift = tf - 1.0;
    let slack = combined_slack(&[sg.tol(), si.tol(), sc.tol()]);
    // Scaled comparisons amplify the solver error by about t + 1.
    let scaled = slack * (tf + 1.0);
    let mut c = Checker::new("blowup-eigenvalue-bounds", slack);
    for s in 1..=k {
        let top = sg.mu(s)?;
        let bot = sg.mu_tail(s)?;
        let i_top = si.mu(s)?;
        let i_bot = si.mu_tail(s)?;
        let c_top = sc.mu(s)?;
        let c_bot = sc.mu_tail(s)?;
        c.le_with(format!("independent.top[s={s}].lower"), tf * top, i_top, scaled);
        c.le_with(format!("independent.top[s={s}].upper"), i_top - tf * top, bound, scaled);
        c.le_with(format!("independent.tail[s={s}].upper"), i_bot, tf * bot, scaled);
        c.le_with(format!("independent.tail[s={s}].lower"), tf * bot - i_bot, bound, scaled);
        c.le_with(format!("clique.top[s={s}].lower"), tf * top + shift, c_top, scaled);
        c.le_with(
            format!("clique.top[s={s}].upper"),
            c_top - (tf * top + shift),
            tf + bound,
            scaled,
        );
        c.le_with(format!("clique.tail[s={s}].upper"), c_bot, tf * bot + shift, scaled);
        c.le_with(
            format!("clique.tail[s={s}].lower"),
            (tf * bot + shift) - c_bot,
            tf + bound,
            scaled,
        );
    }
    Ok(c.finish())
}

/// Deleting one vertex moves every eigenvalue monotonically and, for depths
/// `s <= 3n/4`, by less than `3 sqrt(n)`:
///
/// * top:    `mu_s(H) <= mu_s(G) < mu_s(H) + 3 sqrt(n)`
/// * bottom: `mu'_s(H) - 3 sqrt(n) < mu'_s(G) <= mu'_s(H)`
///
/// with `H = G - v` and `mu'_s` the `s`-th smallest of each graph.
pub fn check_vertex_deletion_bounds(g: &Graph, v: usize) -> Result<CheckReport> {
    let n = g.n();
    let h = g.delete_vertex(v)?;
    let sg = eigenvalues(g)?;
    let sh = eigenvalues(&h)?;
    let bound = 3.0 * (n as f64).sqrt();
    let s_max = 3 * n / 4;
    let mut c = Checker::new(
        "vertex-deletion-bounds",
        combined_slack(&[sg.tol(), sh.tol()]),
    );
    for s in 1..=s_max {
        let gt = sg.mu(s)?;
        let ht = sh.mu(s)?;
        let gb = sg.mu_tail(s)?;
        let hb = sh.mu_tail(s)?;
        c.le(format!("top[s={s}].lower"), ht, gt);
        c.le(format!("top[s={s}].upper"), gt - ht, bound);
        c.le(format!("tail[s={s}].upper"), gb, hb);
        c.le(format!("tail[s={s}].lower"), hb - gb, bound);
    }
    Ok(c.finish())
}

/// Deleting a set of `l` vertices moves the depth-`s` eigenvalues (top and
/// bottom) by less than `3 l sqrt(n)` in absolute value, for
/// `s <= 3 (n - l) / 4`.
pub fn check_subset_deletion_bounds(g: &Graph, drop: &VertexSet) -> Result<CheckReport> {
    let n = g.n();
    let l = drop.len();
    let g2 = g.delete_vertices(drop)?;
    let s_max = 3 * (n - l) / 4;
    if s_max < 1 {
        return Err(Error::DeletionRange { s: 1, max: s_max });
    }
    let sg = eigenvalues(g)?;
    let s2 = eigenvalues(&g2)?;
    let bound = 3.0 * l as f64 * (n as f64).sqrt();
    let mut c = Checker::new(
        "subset-deletion-bounds",
        combined_slack(&[sg.tol(), s2.tol()]),
    );
    for s in 1..=s_max {
        c.le(
            format!("top[s={s}].abs"),
            (sg.mu(s)? - s2.mu(s)?).abs(),
            bound,
        );
        c.le(
            format!("tail[s={s}].abs"),
            (sg.mu_tail(s)? - s2.mu_tail(s)?).abs(),
            bound,
        );
    }
    Ok(c.finish())
}

/// Cauchy interlacing for one deleted vertex:
/// `mu_{s+1}(G) <= mu_s(G - v) <= mu_s(G)` for every `s`.
pub fn check_interlacing(g: &Graph, v: usize) -> Result<CheckReport> {
    let h = g.delete_vertex(v)?;
    let sg = eigenvalues(g)?;
    let sh = eigenvalues(&h)?;
    let mut c = Checker::new("interlacing", combined_slack(&[sg.tol(), sh.tol()]));
    for s in 1..=h.n() {
        c.le(format!("between[s={s}].upper"), sh.mu(s)?, sg.mu(s)?);
        c.le(format!("between[s={s}].lower"), sg.mu(s + 1)?, sh.mu(s)?);
    }
    Ok(c.finish())
}

/// The four-step chain that caps `mu1 + mu2` at `(2 / sqrt 3) n`:
///
/// 1. `mu1^2 + mu2^2 <= 2m`
/// 2. `mu2(G) + mu_min(G') <= -1`
/// 3. `mu2(G)^2 <= mu_min(G')^2 + 1`
/// 4. `mu1 + mu2 <= (2 / sqrt 3) n`
pub fn check_two_eigenvalue_chain(g: &Graph) -> Result<CheckReport> {
    let n = g.n();
    if n < 2 {
        return Err(Error::OrderBelowDepth { n, k: 2 });
    }
    let sg = eigenvalues(g)?;
    let sc = eigenvalues(&g.complement())?;
    let mu1 = sg.mu(1)?;
    let mu2 = sg.mu(2)?;
    let cmin = sc.mu_tail(1)?;
    let slack = combined_slack(&[sg.tol(), sc.tol()]);
    let mut c = Checker::new("two-eigenvalue-chain", slack);
    c.le_with(
        "sum_of_squares".to_string(),
        mu1 * mu1 + mu2 * mu2,
        2.0 * g.edge_count() as f64,
        slack * (1.0 + 2.0 * (mu1.abs() + mu2.abs())),
    );
    c.le("weyl_complement".to_string(), mu2 + cmin, -1.0);
    c.le_with(
        "second_vs_complement_bottom".to_string(),
        mu2 * mu2,
        cmin * cmin + 1.0,
        slack * (1.0 + 2.0 * (mu2.abs() + cmin.abs())),
    );
    c.le(
        "headline".to_string(),
        mu1 + mu2,
        2.0 / 3f64.sqrt() * n as f64,
    );
    Ok(c.finish())
}

/// Result of pushing one witness graph up to a larger order by blow-up.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AmplificationReport {
    pub n: usize,
    #[serde(rename = "N")]
    pub big_n: usize,
    /// Blow-up factor `floor(N / n)`.
    pub t: usize,
    pub f_over_n: f64,
    #[serde(rename = "f1_over_N")]
    pub f1_over_big_n: f64,
    /// `[n (|c| + eps) / t, 3M / sqrt(n), 3M sqrt(n / t)]`.
    pub error_terms: [f64; 3],
    pub slack: f64,
    /// Whether `F(G1)/N >= F(G)/n - sum(error_terms) - slack` held.
    pub chain_holds: bool,
}

impl AmplificationReport {
    pub fn error_total(&self) -> f64 {
        self.error_terms.iter().sum()
    }
}

/// Blows a family member `g` up to order `N` (independent `t`-blow-up for
/// `t = floor(N / n)`, then isolated vertices) and verifies that the
/// normalized score dropped by no more than the guaranteed error term.
///
/// Requires `g` in the family (which is closed under both operations),
/// `N >= 2n`, `3n > 4k`, a positive `eps`, and a finite reference level
/// `c_ref`; the error bound is guaranteed when `|F(G)/n| <= |c_ref| + eps`.
pub fn amplify(
    g: &Graph,
    family: &Family,
    form: &LinearForm,
    big_n: usize,
    c_ref: f64,
    eps: f64,
) -> Result<AmplificationReport> {
    let n = g.n();
    let k = form.k();
    if !family.member(g)? {
        return Err(Error::NotMember {
            family: family.to_string(),
        });
    }
    if big_n < 2 * n {
        return Err(Error::AmplifyRange {
            big_n,
            two_n: 2 * n,
        });
    }
    if 3 * n <= 4 * k {
        return Err(Error::AmplifyDepth { n, k });
    }
    if !(eps > 0.0) {
        return Err(Error::AmplifyEpsilon);
    }
    if !c_ref.is_finite() {
        return Err(Error::NonFiniteReference);
    }
    let t = big_n / n;
    let g1 = g.blowup_independent(t)?.add_isolated(big_n - t * n);
    let ev = form.evaluate_detailed(g)?;
    let ev1 = form.evaluate_detailed(&g1)?;
    let nf = n as f64;
    let tf = t as f64;
    let m = form.coefficient_norm();
    let error_terms = [
        nf * (c_ref.abs() + eps) / tf,
        3.0 * m / nf.sqrt(),
        3.0 * m * (nf / tf).sqrt(),
    ];
    let f_over_n = ev.value / nf;
    let f1_over_big_n = ev1.value / big_n as f64;
    let slack = (m * (ev.tol_sum / nf + ev1.tol_sum / big_n as f64)).max(SLACK_FLOOR);
    let chain_holds =
        f1_over_big_n >= f_over_n - error_terms.iter().sum::<f64>() - slack;
    Ok(AmplificationReport {
        n,
        big_n,
        t,
        f_over_n,
        f1_over_big_n,
        error_terms,
        slack,
        chain_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objective::preset;

    fn lcg_graph(state: &mut u64, n: usize, keep_percent: u64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                *state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                if (*state >> 33) % 100 < keep_percent {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn blowup_spectrum_checks_pass() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        for t in 1..=3 {
            assert!(check_blowup_spectrum_independent(&c4, t).unwrap().passed);
            assert!(check_blowup_spectrum_clique(&c4, t).unwrap().passed);
        }
        let mut state = 7u64;
        for n in 2..=9 {
            let g = lcg_graph(&mut state, n, 50);
            for t in [2, 3] {
                let r = check_blowup_spectrum_independent(&g, t).unwrap();
                assert!(r.passed, "independent n={n} t={t}: {r:?}");
                let r = check_blowup_spectrum_clique(&g, t).unwrap();
                assert!(r.passed, "clique n={n} t={t}: {r:?}");
            }
        }
    }

    #[test]
    fn blowup_bounds_on_triangle_are_tight() {
        // mu(K3) = [2, -1, -1]; the top-1 independent bound holds with
        // equality, so the report passes with a warning at margin ~0.
        let r = check_blowup_eigenvalue_bounds(&Graph::complete(3), 2, 2).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(r.warning);
        assert!(r.margin.abs() <= r.slack * 3.0);
        assert_eq!(r.details.len(), 16);
    }

    #[test]
    fn blowup_bounds_on_random_graphs() {
        let mut state = 99u64;
        for n in 3..=8 {
            let g = lcg_graph(&mut state, n, 60);
            for t in [2, 4] {
                for k in [1, n - 1] {
                    let r = check_blowup_eigenvalue_bounds(&g, t, k).unwrap();
                    assert!(r.passed, "n={n} t={t} k={k}: {r:?}");
                }
            }
        }
    }

    #[test]
    fn blowup_bounds_validation() {
        let g = Graph::complete(3);
        assert!(matches!(
            check_blowup_eigenvalue_bounds(&g, 2, 0),
            Err(Error::DepthRange { k: 0, n: 3 })
        ));
        assert!(matches!(
            check_blowup_eigenvalue_bounds(&g, 2, 3),
            Err(Error::DepthRange { k: 3, n: 3 })
        ));
        assert!(matches!(
            check_blowup_eigenvalue_bounds(&g, 1, 2),
            Err(Error::BlowupFactorTooSmall { t: 1 })
        ));
    }

    #[test]
    fn vertex_deletion_on_k5() {
        // K5 -> K4: top shift 1 at s=1, exact agreement elsewhere.
        let r = check_vertex_deletion_bounds(&Graph::complete(5), 0).unwrap();
        assert!(r.passed);
        assert!(r.warning);
        let top1 = r.details.iter().find(|d| d.index == "top[s=1].upper").unwrap();
        assert!((top1.lhs - 1.0).abs() < 1e-9);
        assert!((top1.rhs - 3.0 * 5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn subset_deletion_on_k6() {
        let r = check_subset_deletion_bounds(&Graph::complete(6), &VertexSet::new(vec![0, 1]))
            .unwrap();
        assert!(r.passed);
        let top1 = r.details.iter().find(|d| d.index == "top[s=1].abs").unwrap();
        assert!((top1.lhs - 2.0).abs() < 1e-9);
        assert!((top1.rhs - 6.0 * 6f64.sqrt()).abs() < 1e-12);
        // Dropping too much leaves no admissible depth.
        let tiny = check_subset_deletion_bounds(&Graph::complete(3), &VertexSet::new(vec![0, 1]));
        assert!(matches!(tiny, Err(Error::DeletionRange { .. })));
    }

    #[test]
    fn deletion_and_interlacing_on_random_graphs() {
        let mut state = 123u64;
        for n in 2..=10 {
            let g = lcg_graph(&mut state, n, 50);
            for v in 0..n.min(3) {
                let r = check_vertex_deletion_bounds(&g, v).unwrap();
                assert!(r.passed, "deletion n={n} v={v}: {r:?}");
                if n >= 2 {
                    let r = check_interlacing(&g, v).unwrap();
                    assert!(r.passed, "interlacing n={n} v={v}: {r:?}");
                }
            }
        }
    }

    #[test]
    fn chain_on_all_small_graphs() {
        // Every graph on up to 5 vertices, by edge mask.
        for n in 2..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                let r = check_two_eigenvalue_chain(&g).unwrap();
                assert!(r.passed, "n={n} mask={mask}: {r:?}");
            }
        }
    }

    #[test]
    fn chain_on_join_construction() {
        // join(K5, K8 + K8): mu1 + mu2 = (25 + sqrt 329)/2, below 42/sqrt 3.
        let g = Graph::complete(5).join(&Graph::complete(8).disjoint_union(&Graph::complete(8)));
        let r = check_two_eigenvalue_chain(&g).unwrap();
        assert!(r.passed);
        let head = r.details.iter().find(|d| d.index == "headline").unwrap();
        assert!((head.lhs - (25.0 + 329f64.sqrt()) / 2.0).abs() < 1e-9);
        assert!((head.rhs - 42.0 / 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn chain_rejects_single_vertex() {
        assert!(matches!(
            check_two_eigenvalue_chain(&Graph::complete(1)),
            Err(Error::OrderBelowDepth { n: 1, k: 2 })
        ));
    }

    #[test]
    fn amplify_triangle_to_seven() {
        // t = floor(7/3) = 2; K3 blown up is the octahedron (mu1 = 4) plus
        // one isolated vertex, so F(G1)/N = 4/7.
        let form = LinearForm::top_only(vec![1.0]).unwrap();
        let r = amplify(&Graph::complete(3), &Family::All, &form, 7, 2.0 / 3.0, 0.25).unwrap();
        assert_eq!(r.t, 2);
        assert!((r.f_over_n - 2.0 / 3.0).abs() < 1e-12);
        assert!((r.f1_over_big_n - 4.0 / 7.0).abs() < 1e-9);
        let expect_e1 = 3.0 * (2.0 / 3.0 + 0.25) / 2.0;
        assert!((r.error_terms[0] - expect_e1).abs() < 1e-12);
        assert!((r.error_terms[1] - 3.0 / 3f64.sqrt()).abs() < 1e-12);
        assert!((r.error_terms[2] - 3.0 * 1.5f64.sqrt()).abs() < 1e-12);
        assert!(r.chain_holds);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"N\":7"));
        assert!(json.contains("\"f1_over_N\""));
        let back: AmplificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn amplify_diamond_to_twelve() {
        let form = LinearForm::top_only(vec![1.0]).unwrap();
        let d = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let r = amplify(&d, &Family::All, &form, 12, 0.9, 0.25).unwrap();
        assert_eq!(r.t, 3);
        assert_eq!(r.big_n, 12);
        let expect = (1.0 + 17f64.sqrt()) / 8.0;
        assert!((r.f1_over_big_n - expect).abs() < 1e-9, "{r:?}");
        assert!(r.chain_holds);
    }

    #[test]
    fn amplify_validation() {
        let form = LinearForm::top_only(vec![1.0]).unwrap();
        let k3 = Graph::complete(3);
        assert!(matches!(
            amplify(&k3, &Family::All, &form, 5, 0.5, 0.25),
            Err(Error::AmplifyRange { big_n: 5, two_n: 6 })
        ));
        assert!(matches!(
            amplify(&k3, &Family::All, &form, 7, 0.5, 0.0),
            Err(Error::AmplifyEpsilon)
        ));
        assert!(matches!(
            amplify(&k3, &Family::All, &form, 7, f64::NAN, 0.25),
            Err(Error::NonFiniteReference)
        ));
        assert!(matches!(
            amplify(&k3, &Family::kr_free(3).unwrap(), &form, 7, 0.5, 0.25),
            Err(Error::NotMember { .. })
        ));
        let deep = preset("mui+cmui", 3).unwrap();
        assert!(matches!(
            amplify(&Graph::complete(4), &Family::All, &deep, 8, 0.5, 0.25),
            Err(Error::AmplifyDepth { n: 4, k: 3 })
        ));
    }

    #[test]
    fn report_json_round_trip() {
        let r = check_two_eigenvalue_chain(&Graph::complete(4)).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: CheckReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
