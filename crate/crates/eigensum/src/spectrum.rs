//! Adjacency spectra via cyclic Jacobi rotations.
//!
//! For the graph sizes this crate targets (a few thousand vertices at most),
//! a dense Jacobi iteration is accurate, simple to audit, and — crucially —
//! deterministic: the sweep order is fixed, no pivot depends on timing or
//! threading, so equal graphs always produce bitwise-equal spectra.
//!
//! Every solve is validated before it is returned:
//!
//! * the off-diagonal Frobenius norm is driven below
//!   [`OFF_TARGET_PER_VERTEX`]` * n`, and the achieved norm is recorded as
//!   the spectrum's `tol`;
//! * the eigenvalue sum must vanish to within [`TRACE_TOL_PER_VERTEX`]` * n`
//!   (the adjacency matrix is traceless);
//! * the eigenvalue square sum must match twice the edge count to within
//!   [`ENERGY_TOL_PER_VERTEX_SQ`]` * n^2`.
//!
//! A failure of any of these is a solver bug, not a property of the input,
//! and surfaces as [`Error::Unsound`].

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;

/// Convergence target for the off-diagonal Frobenius norm, per vertex.
pub const OFF_TARGET_PER_VERTEX: f64 = 1e-12;

/// Bound on `|sum of eigenvalues|`, per vertex.
pub const TRACE_TOL_PER_VERTEX: f64 = 1e-9;

/// Bound on `|sum of squared eigenvalues - 2m|`, per squared vertex count.
pub const ENERGY_TOL_PER_VERTEX_SQ: f64 = 1e-7;

/// Floor for the numerical slack used by every downstream inequality check.
pub const SLACK_FLOOR: f64 = 1e-8;

const MAX_SWEEPS: usize = 42;

/// The adjacency eigenvalues of one graph, sorted descending, together with
/// the off-diagonal norm the solver actually achieved.
#[derive(Clone, Debug, Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    /// Number of eigenvalues (the graph order).
    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// All eigenvalues, descending.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Achieved off-diagonal Frobenius norm; an upper bound on the
    /// perturbation between the reported and the true eigenvalues.
    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// The i-th largest eigenvalue, 1-based: `mu(1)` is the largest.
    pub fn mu(&self, i: usize) -> Result<f64> {
        let n = self.values.len();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { i, n });
        }
        Ok(self.values[i - 1])
    }

    /// The s-th smallest eigenvalue, 1-based: `mu_tail(1)` is the smallest,
    /// i.e. the eigenvalue at descending position `n - s + 1`.
    pub fn mu_tail(&self, s: usize) -> Result<f64> {
        let n = self.values.len();
        if s == 0 || s > n {
            return Err(Error::IndexOutOfRange { i: s, n });
        }
        Ok(self.values[n - s])
    }

    /// `|sum of eigenvalues|`; zero for an exact solve.
    pub fn trace_residual(&self) -> f64 {
        self.values.iter().sum::<f64>().abs()
    }

    /// `|sum of squared eigenvalues - 2m|`; zero for an exact solve.
    pub fn energy_residual(&self, edge_count: usize) -> f64 {
        let sq: f64 = self.values.iter().map(|x| x * x).sum();
        (sq - 2.0 * edge_count as f64).abs()
    }
}

/// Computes the full adjacency spectrum of `g`, sorted descending.
pub fn eigenvalues(g: &Graph) -> Result<Spectrum> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut a = g.to_dense();
    let (mut values, tol) = jacobi(&mut a, n)?;
    values.sort_unstable_by(|x, y| y.total_cmp(x));
    let spectrum = Spectrum { values, tol };

    let nf = n as f64;
    let trace = spectrum.trace_residual();
    if trace > TRACE_TOL_PER_VERTEX * nf {
        return Err(Error::Unsound {
            what: "trace",
            residual: trace,
            bound: TRACE_TOL_PER_VERTEX * nf,
        });
    }
    let energy = spectrum.energy_residual(g.edge_count());
    if energy > ENERGY_TOL_PER_VERTEX_SQ * nf * nf {
        return Err(Error::Unsound {
            what: "energy",
            residual: energy,
            bound: ENERGY_TOL_PER_VERTEX_SQ * nf * nf,
        });
    }
    // Adjacency eigenvalues live in [-(n-1), n-1]; leaving that band means
    // the rotations went wrong even if trace and energy happen to cancel.
    let band = nf - 1.0 + TRACE_TOL_PER_VERTEX * nf + spectrum.tol;
    let lo = spectrum.values[n - 1];
    let hi = spectrum.values[0];
    if hi > band || lo < -band {
        return Err(Error::Unsound {
            what: "eigenvalue band",
            residual: hi.abs().max(lo.abs()),
            bound: band,
        });
    }
    Ok(spectrum)
}

/// Cyclic Jacobi on the upper triangle of a symmetric matrix stored row
/// major. Returns the unsorted eigenvalues and the achieved off-norm. Only
/// entries `a[i*n+j]` with `i < j` are read or written; the diagonal is
/// carried in separate accumulators.
fn jacobi(a: &mut [f64], n: usize) -> Result<(Vec<f64>, f64)> {
    let target = OFF_TARGET_PER_VERTEX * n as f64;
    let mut d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let mut off = off_norm(a, n);
    if off <= target {
        return Ok((d, off));
    }
    // Accumulating rotations into `b`/`z` and refreshing `d` once per sweep
    // keeps rounding error in the diagonal from compounding.
    let mut b = d.clone();
    let mut z = vec![0.0; n];
    for sweep in 0..MAX_SWEEPS {
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let scaled = 100.0 * apq.abs();
                if sweep > 3
                    && d[p].abs() + scaled == d[p].abs()
                    && d[q].abs() + scaled == d[q].abs()
                {
                    // Too small to move the diagonal; annihilate outright.
                    a[p * n + q] = 0.0;
                    continue;
                }
                let theta = 0.5 * (d[q] - d[p]) / apq;
                let t = if theta.abs() > 1e150 {
                    // Guards theta^2 overflow; limit of the branch below.
                    0.5 / theta
                } else if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;
                z[p] -= h;
                z[q] += h;
                d[p] -= h;
                d[q] += h;
                a[p * n + q] = 0.0;
                for j in 0..p {
                    rotate(a, n, j, p, j, q, s, tau);
                }
                for j in p + 1..q {
                    rotate(a, n, p, j, j, q, s, tau);
                }
                for j in q + 1..n {
                    rotate(a, n, p, j, q, j, s, tau);
                }
            }
        }
        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
        off = off_norm(a, n);
        if off <= target {
            return Ok((d, off));
        }
    }
    Err(Error::NoConvergence {
        sweeps: MAX_SWEEPS,
        off,
        target,
    })
}

#[inline]
fn rotate(a: &mut [f64], n: usize, i1: usize, j1: usize, i2: usize, j2: usize, s: f64, tau: f64) {
    let g = a[i1 * n + j1];
    let h = a[i2 * n + j2];
    a[i1 * n + j1] = g - s * (h + g * tau);
    a[i2 * n + j2] = h + s * (g - h * tau);
}

/// Frobenius norm of the off-diagonal part, reading the upper triangle.
fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let x = a[i * n + j];
            sum += x * x;
        }
    }
    (2.0 * sum).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(actual: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(actual.len(), expected.len());
        for (i, (a, e)) in actual.iter().zip(expected).enumerate() {
            assert!(
                (a - e).abs() <= tol,
                "position {i}: {a} vs {e} (tol {tol})"
            );
        }
    }

    #[test]
    fn complete_graph_spectra() {
        for n in 2..=30 {
            let s = eigenvalues(&Graph::complete(n)).unwrap();
            let mut expected = vec![-1.0; n];
            expected[0] = (n - 1) as f64;
            assert_close(s.values(), &expected, 1e-10);
        }
    }

    #[test]
    fn empty_and_single() {
        let s = eigenvalues(&Graph::empty(4)).unwrap();
        assert_close(s.values(), &[0.0, 0.0, 0.0, 0.0], 0.0);
        assert_eq!(s.tol(), 0.0);
        let s1 = eigenvalues(&Graph::empty(1)).unwrap();
        assert_close(s1.values(), &[0.0], 0.0);
        assert!(matches!(eigenvalues(&Graph::empty(0)), Err(Error::EmptyGraph)));
    }

    #[test]
    fn star_on_three_vertices() {
        // Characteristic polynomial x^3 - 2x, roots sqrt2, 0, -sqrt2.
        let star = Graph::empty(1).join(&Graph::empty(2));
        let s = eigenvalues(&star).unwrap();
        let r = 2f64.sqrt();
        assert_close(s.values(), &[r, 0.0, -r], 1e-12);
    }

    #[test]
    fn four_cycle() {
        let c4 = Graph::complete(2).blowup_independent(2).unwrap();
        let s = eigenvalues(&c4).unwrap();
        assert_close(s.values(), &[2.0, 0.0, 0.0, -2.0], 1e-12);
        assert_eq!(s.mu(1).unwrap(), s.values()[0]);
        assert_eq!(s.mu_tail(1).unwrap(), s.values()[3]);
    }

    #[test]
    fn diamond() {
        // K4 minus an edge: roots (1 +- sqrt17)/2, 0, -1.
        let d = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let s = eigenvalues(&d).unwrap();
        let r = 17f64.sqrt();
        assert_close(s.values(), &[(1.0 + r) / 2.0, 0.0, -1.0, (1.0 - r) / 2.0], 1e-12);
    }

    #[test]
    fn two_triangles() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(3));
        let s = eigenvalues(&g).unwrap();
        assert_close(s.values(), &[2.0, 2.0, -1.0, -1.0, -1.0, -1.0], 1e-12);
    }

    #[test]
    fn complete_bipartite() {
        let g = Graph::empty(3).join(&Graph::empty(4));
        let s = eigenvalues(&g).unwrap();
        let r = 12f64.sqrt();
        assert_close(s.values(), &[r, 0.0, 0.0, 0.0, 0.0, 0.0, -r], 1e-12);
    }

    #[test]
    fn index_errors() {
        let s = eigenvalues(&Graph::complete(3)).unwrap();
        assert!(s.mu(0).is_err());
        assert!(s.mu(4).is_err());
        assert!(s.mu_tail(0).is_err());
        assert!(s.mu_tail(4).is_err());
        assert_eq!(s.mu(2).unwrap(), s.mu_tail(2).unwrap());
    }

    #[test]
    fn soundness_residuals_on_random_graphs() {
        let mut lcg = 0x9E3779B97F4A7C15u64;
        for n in [2usize, 5, 17, 40, 83] {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    lcg = lcg.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if lcg >> 63 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let s = eigenvalues(&g).unwrap();
            let nf = n as f64;
            assert!(s.tol() <= OFF_TARGET_PER_VERTEX * nf);
            assert!(s.trace_residual() <= TRACE_TOL_PER_VERTEX * nf);
            assert!(s.energy_residual(g.edge_count()) <= ENERGY_TOL_PER_VERTEX_SQ * nf * nf);
            for w in s.values().windows(2) {
                assert!(w[0] >= w[1], "spectrum not sorted descending");
            }
        }
    }

    #[test]
    fn solver_is_bitwise_deterministic() {
        let g = Graph::from_edges(9, &[(0, 1), (0, 4), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 0)])
            .unwrap();
        let a = eigenvalues(&g).unwrap();
        let b = eigenvalues(&g).unwrap();
        assert_eq!(a.tol().to_bits(), b.tol().to_bits());
        for (x, y) in a.values().iter().zip(b.values()) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
    }

    #[test]
    fn complement_coupling_on_random_graphs() {
        // Weyl on A(G) = (J - I) - A(complement): mu2(G) <= -1 - mun(complement).
        let mut lcg = 0xDEADBEEFCAFEF00Du64;
        for n in 2..=24usize {
            for _ in 0..20 {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        lcg = lcg.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        if lcg >> 62 & 3 != 0 {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::from_edges(n, &edges).unwrap();
                if g == Graph::complete(n) {
                    continue;
                }
                let s = eigenvalues(&g).unwrap();
                let sc = eigenvalues(&g.complement()).unwrap();
                let lhs = s.mu(2).unwrap() + sc.mu_tail(1).unwrap();
                assert!(lhs <= -1.0 + 2e-8, "n={n} lhs={lhs}");
            }
        }
    }
}
