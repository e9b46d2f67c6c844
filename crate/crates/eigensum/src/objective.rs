//! Objective functions over spectra, and the graph families they are
//! maximized over.
//!
//! A [`LinearForm`] with depth `k` scores a graph `G` on `n >= k` vertices as
//!
//! ```text
//! F(G) = sum over i in 1..=k of
//!        alpha[i] * mu_i(G)  + beta[i]  * mu_{n-i+1}(G)
//!      + gamma[i] * mu_i(G') + delta[i] * mu_{n-i+1}(G')
//! ```
//!
//! where `mu_1 >= ... >= mu_n` are adjacency eigenvalues and `G'` is the
//! complement. Because every `|mu_i| <= n - 1 < n`, the score satisfies
//! `|F(G)| <= M * n` with `M` the coefficient norm, so `F(G)/n` is a bounded
//! quantity whose supremum over a family is worth chasing.
//!
//! The families here are closed under independent-set blow-ups and under
//! adding isolated vertices, which is exactly what the amplification
//! argument in [`crate::verify::amplify`] needs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectrum::{eigenvalues, Spectrum};
use serde::{Deserialize, Serialize};

/// A linear combination of extreme adjacency eigenvalues of a graph and its
/// complement. Immutable once built; all four coefficient vectors share the
/// length `k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "FormWire")]
pub struct LinearForm {
    k: usize,
    alpha: Vec<f64>,
    beta: Vec<f64>,
    gamma: Vec<f64>,
    delta: Vec<f64>,
}

/// Wire shape for deserialization; re-validated on the way in.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FormWire {
    k: usize,
    alpha: Vec<f64>,
    beta: Vec<f64>,
    gamma: Vec<f64>,
    delta: Vec<f64>,
}

impl TryFrom<FormWire> for LinearForm {
    type Error = Error;
    fn try_from(w: FormWire) -> Result<LinearForm> {
        let form = LinearForm::new(w.alpha, w.beta, w.gamma, w.delta)?;
        if form.k != w.k {
            return Err(Error::CoefficientShape {
                alpha: form.alpha.len(),
                beta: form.beta.len(),
                gamma: form.gamma.len(),
                delta: w.k,
            });
        }
        Ok(form)
    }
}

/// The value of a form on one graph, together with the summed solver
/// tolerances of the spectra that value consumed.
#[derive(Clone, Copy, Debug)]
pub struct Evaluation {
    pub value: f64,
    pub tol_sum: f64,
}

impl LinearForm {
    /// Builds a form from its four coefficient vectors, which must be finite
    /// and share one length `k >= 1`.
    pub fn new(alpha: Vec<f64>, beta: Vec<f64>, gamma: Vec<f64>, delta: Vec<f64>) -> Result<LinearForm> {
        let k = alpha.len();
        if k == 0 || beta.len() != k || gamma.len() != k || delta.len() != k {
            return Err(Error::CoefficientShape {
                alpha: alpha.len(),
                beta: beta.len(),
                gamma: gamma.len(),
                delta: delta.len(),
            });
        }
        let finite = |v: &[f64]| v.iter().all(|x| x.is_finite());
        if !(finite(&alpha) && finite(&beta) && finite(&gamma) && finite(&delta)) {
            return Err(Error::NonFiniteCoefficient);
        }
        Ok(LinearForm {
            k,
            alpha,
            beta,
            gamma,
            delta,
        })
    }

    /// Convenience: a form that touches only the top-end eigenvalues of the
    /// graph itself (`beta = gamma = delta = 0`).
    pub fn top_only(alpha: Vec<f64>) -> Result<LinearForm> {
        let k = alpha.len();
        LinearForm::new(alpha, vec![0.0; k], vec![0.0; k], vec![0.0; k])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }

    pub fn beta(&self) -> &[f64] {
        &self.beta
    }

    pub fn gamma(&self) -> &[f64] {
        &self.gamma
    }

    pub fn delta(&self) -> &[f64] {
        &self.delta
    }

    /// The norm `M`: the sum of the absolute values of all coefficients.
    /// Scores obey `|F(G)| <= M * n`.
    pub fn coefficient_norm(&self) -> f64 {
        self.alpha
            .iter()
            .chain(&self.beta)
            .chain(&self.gamma)
            .chain(&self.delta)
            .map(|x| x.abs())
            .sum()
    }

    /// True when some complement coefficient is nonzero, i.e. evaluation
    /// genuinely needs the complement's spectrum.
    pub fn uses_complement(&self) -> bool {
        self.gamma.iter().chain(&self.delta).any(|&x| x != 0.0)
    }

    /// Scores `g`. Solves for the spectrum of `g`, and of its complement
    /// only when a complement coefficient is nonzero.
    pub fn evaluate(&self, g: &Graph) -> Result<f64> {
        Ok(self.evaluate_detailed(g)?.value)
    }

    /// Like [`LinearForm::evaluate`], also reporting the summed tolerances
    /// of the spectra used, for downstream slack computation.
    pub fn evaluate_detailed(&self, g: &Graph) -> Result<Evaluation> {
        let n = g.n();
        if n < self.k {
            return Err(Error::OrderBelowDepth { n, k: self.k });
        }
        let sg = eigenvalues(g)?;
        let (sc, tol_c) = if self.uses_complement() {
            let s = eigenvalues(&g.complement())?;
            let t = s.tol();
            (Some(s), t)
        } else {
            (None, 0.0)
        };
        let value = self.combine(&sg, sc.as_ref());
        Ok(Evaluation {
            value,
            tol_sum: sg.tol() + tol_c,
        })
    }

    /// Sums the terms from already-solved spectra. `sc` may be `None` only
    /// when the form has no complement coefficients. The spectra must both
    /// have length `>= k`; callers validate the order.
    fn combine(&self, sg: &Spectrum, sc: Option<&Spectrum>) -> f64 {
        let top = sg.values();
        let n = top.len();
        let mut sum = 0.0;
        for i in 0..self.k {
            sum += self.alpha[i] * top[i] + self.beta[i] * top[n - 1 - i];
        }
        if let Some(sc) = sc {
            let cot = sc.values();
            for i in 0..self.k {
                sum += self.gamma[i] * cot[i] + self.delta[i] * cot[n - 1 - i];
            }
        } else {
            debug_assert!(!self.uses_complement());
        }
        sum
    }
}

/// Named objective shapes accepted by the command line.
///
/// `i` only matters for `mui+cmui`, where the form is
/// `mu_i(G) + mu_i(complement)`.
pub fn preset(name: &str, i: usize) -> Option<LinearForm> {
    let e = |len: usize, at: usize| {
        let mut v = vec![0.0; len];
        v[at] = 1.0;
        v
    };
    let z = |len: usize| vec![0.0; len];
    let form = match name {
        "mu1+mun" => LinearForm::new(vec![1.0], vec![1.0], z(1), z(1)),
        "mu1-mun" => LinearForm::new(vec![1.0], vec![-1.0], z(1), z(1)),
        "mu1+mu2" => LinearForm::new(vec![1.0, 1.0], z(2), z(2), z(2)),
        "mu1+cmu1" => LinearForm::new(vec![1.0], z(1), vec![1.0], z(1)),
        "mui+cmui" => {
            if i == 0 {
                return None;
            }
            LinearForm::new(e(i, i - 1), z(i), e(i, i - 1), z(i))
        }
        _ => return None,
    };
    Some(form.expect("preset coefficients are well formed"))
}

/// A graph family that is closed under independent-set blow-ups and under
/// adding isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Every graph.
    All,
    /// Graphs with no clique on `r` vertices, `r >= 3`.
    KrFree(usize),
    /// Graphs whose vertices split into at most `r` independent parts,
    /// `r >= 1`.
    RPartite(usize),
}

impl Family {
    pub fn kr_free(r: usize) -> Result<Family> {
        if r < 3 {
            return Err(Error::FamilyOrderTooSmall { r });
        }
        Ok(Family::KrFree(r))
    }

    pub fn r_partite(r: usize) -> Result<Family> {
        if r < 1 {
            return Err(Error::PartCountTooSmall { r });
        }
        Ok(Family::RPartite(r))
    }

    /// Membership test. Exact; the clique and coloring searches are capped
    /// at 64 vertices and error above that.
    pub fn member(&self, g: &Graph) -> Result<bool> {
        match *self {
            Family::All => Ok(true),
            Family::KrFree(r) => g.is_kr_free(r),
            Family::RPartite(r) => g.is_r_partite(r),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::All => write!(f, "all"),
            Family::KrFree(r) => write!(f, "kr-free:{r}"),
            Family::RPartite(r) => write!(f, "r-partite:{r}"),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        if s == "all" {
            return Ok(Family::All);
        }
        let parse_r = |tail: &str, what: &str| -> Result<usize> {
            tail.parse().map_err(|_| Error::NotMember {
                family: format!("{what}:{tail}"),
            })
        };
        if let Some(tail) = s.strip_prefix("kr-free:") {
            return Family::kr_free(parse_r(tail, "kr-free")?);
        }
        if let Some(tail) = s.strip_prefix("r-partite:") {
            return Family::r_partite(parse_r(tail, "r-partite")?);
        }
        Err(Error::NotMember { family: s.into() })
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Family, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
