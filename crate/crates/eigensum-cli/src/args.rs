//! Argument grammar. Parsing stays here; resolution of compound arguments
//! (forms, families, graph files, order lists) lives next to it so every
//! subcommand shares one vocabulary.

use crate::CliError;
use clap::{Args, Parser, Subcommand, ValueEnum};
use eigensum::codec::{from_edge_list, from_graph6};
use eigensum::objective::preset;
use eigensum::{Family, Graph, LinearForm};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "eigensum",
    version,
    about = "Extremal values of linear combinations of graph eigenvalues",
    propagate_version = true
)]
pub struct Cli {
    /// Seed for every randomized step; equal seeds give identical artifacts.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Write the artifact to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print the adjacency spectrum of one graph.
    Spectrum(SpectrumArgs),
    /// Build and certify a join construction whose mu1 + mu2 exceeds n.
    Construct(ConstructArgs),
    /// Run randomized inequality suites and report every margin.
    Verify(VerifyArgs),
    /// Maximize a linear form over a graph family at one order.
    Search(SearchArgs),
    /// Tabulate normalized extremal values phi(n) = max F / n across orders.
    Phi(PhiArgs),
    /// Blow a witness up to a larger order and bound the normalized score drop.
    Amplify(AmplifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    /// Sniff: a leading ASCII digit means an edge list, anything else graph6.
    Auto,
    /// graph6, header-less.
    G6,
    /// First line the order, then one `u v` pair per line, 0-based.
    Edges,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// Enumerate up to the exhaustive cap, climb beyond it.
    Auto,
    Exhaustive,
    Stochastic,
}

#[derive(Args)]
pub struct SpectrumArgs {
    /// Input graph file.
    #[arg(long = "in", value_name = "PATH")]
    pub input: PathBuf,

    /// Input format.
    #[arg(long, value_enum, default_value_t = GraphFormat::Auto)]
    pub format: GraphFormat,

    /// Emit a JSON artifact instead of one bracketed line of eigenvalues.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct ConstructArgs {
    /// Construction scale; the certified graph has 21k vertices.
    #[arg(long)]
    pub k: usize,

    /// Optional padded order: isolated vertices appended beyond 21k.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// One suite name, or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,

    /// Randomized instances per suite; canned instances come on top.
    #[arg(long, default_value_t = 25)]
    pub trials: usize,
}

/// How a linear form is spelled on the command line: a named preset, raw
/// coefficient vectors, or a JSON file. Exactly one spelling per invocation;
/// leaving all of them out means the Gernert objective mu1 + mu2.
#[derive(Args)]
pub struct FormArgs {
    /// Named form: mu1+mun, mu1-mun, mu1+mu2, mu1+cmu1, or mui+cmui.
    #[arg(long, value_name = "NAME")]
    pub preset: Option<String>,

    /// Depth index for the mui+cmui preset.
    #[arg(long, default_value_t = 1, value_name = "I")]
    pub i: usize,

    /// Coefficients of mu_1..mu_k, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, value_name = "A,..")]
    pub alpha: Vec<f64>,

    /// Coefficients of mu_n..mu_{n-k+1}, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, value_name = "B,..")]
    pub beta: Vec<f64>,

    /// Complement-side coefficients of mu_1..mu_k, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, value_name = "C,..")]
    pub gamma: Vec<f64>,

    /// Complement-side coefficients of mu_n..mu_{n-k+1}, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, value_name = "D,..")]
    pub delta: Vec<f64>,

    /// JSON file holding {"k":.., "alpha":[..], "beta":[..], "gamma":[..], "delta":[..]}.
    #[arg(long, value_name = "PATH")]
    pub form_file: Option<PathBuf>,
}

impl FormArgs {
    fn has_vectors(&self) -> bool {
        !(self.alpha.is_empty()
            && self.beta.is_empty()
            && self.gamma.is_empty()
            && self.delta.is_empty())
    }

    pub fn resolve(&self) -> Result<LinearForm, CliError> {
        let spellings =
            usize::from(self.preset.is_some()) + usize::from(self.has_vectors()) + usize::from(self.form_file.is_some());
        if spellings > 1 {
            return Err(CliError::new(
                "choose one of --preset, coefficient vectors, or --form-file",
            ));
        }
        if let Some(path) = &self.form_file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::new(format!("{}: {e}", path.display())))?;
            let form: LinearForm = serde_json::from_str(&text)
                .map_err(|e| CliError::new(format!("{}: {e}", path.display())))?;
            return Ok(form);
        }
        if let Some(name) = &self.preset {
            return preset(name, self.i)
                .ok_or_else(|| CliError::new(format!("unknown preset `{name}`")));
        }
        if self.has_vectors() {
            // Vectors left out default to zeros at the common length of the
            // ones given; vectors given with unequal lengths are an error.
            let k = self
                .alpha
                .len()
                .max(self.beta.len())
                .max(self.gamma.len())
                .max(self.delta.len());
            let fill = |v: &Vec<f64>| {
                if v.is_empty() {
                    vec![0.0; k]
                } else {
                    v.clone()
                }
            };
            return Ok(LinearForm::new(
                fill(&self.alpha),
                fill(&self.beta),
                fill(&self.gamma),
                fill(&self.delta),
            )?);
        }
        Ok(preset("mu1+mu2", 0).expect("built-in preset"))
    }
}

#[derive(Args)]
pub struct SearchArgs {
    /// Number of vertices.
    #[arg(long)]
    pub n: usize,

    #[command(flatten)]
    pub form: FormArgs,

    /// Family: all, kr-free:R, or r-partite:R.
    #[arg(long, default_value = "all")]
    pub family: String,

    /// Engine choice.
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,

    /// Hill-climb restarts (stochastic engine).
    #[arg(long, default_value_t = 64)]
    pub restarts: usize,

    /// Accepted-move budget per restart (stochastic engine).
    #[arg(long, default_value_t = 1000)]
    pub steps: usize,

    /// Climb restart 0 from the join construction when it fits the family.
    #[arg(long)]
    pub warm_start_gernert: bool,

    /// Largest order the exhaustive engine will enumerate.
    #[arg(long, default_value_t = 7, value_name = "N")]
    pub exhaustive_cap: usize,
}

#[derive(Args)]
pub struct PhiArgs {
    /// Comma-separated list of orders.
    #[arg(long, value_delimiter = ',', value_name = "N,..")]
    pub n_list: Vec<usize>,

    /// Inclusive order range, written lo..hi.
    #[arg(long, value_name = "LO..HI")]
    pub n_range: Option<String>,

    #[command(flatten)]
    pub form: FormArgs,

    /// Family: all, kr-free:R, or r-partite:R.
    #[arg(long, default_value = "all")]
    pub family: String,

    /// Hill-climb restarts (stochastic rows).
    #[arg(long, default_value_t = 64)]
    pub restarts: usize,

    /// Accepted-move budget per restart (stochastic rows).
    #[arg(long, default_value_t = 1000)]
    pub steps: usize,

    /// Warm-start stochastic rows at n >= 21 from the join construction.
    #[arg(long)]
    pub warm_start_gernert: bool,

    /// Orders up to this run exhaustively; larger ones stochastically.
    #[arg(long, default_value_t = 7)]
    pub exhaustive_cap: usize,
}

impl PhiArgs {
    /// The resolved, ordered list of orders to tabulate.
    pub fn orders(&self) -> Result<Vec<usize>, CliError> {
        match (&self.n_list[..], &self.n_range) {
            ([], None) => Err(CliError::new("give one of --n-list or --n-range")),
            ([_, ..], Some(_)) => Err(CliError::new("--n-list conflicts with --n-range")),
            (list, None) => Ok(list.to_vec()),
            ([], Some(range)) => {
                let (lo, hi) = range
                    .split_once("..")
                    .ok_or_else(|| CliError::new(format!("bad range `{range}`, expected lo..hi")))?;
                let lo: usize = lo
                    .trim()
                    .parse()
                    .map_err(|_| CliError::new(format!("bad range `{range}`, expected lo..hi")))?;
                let hi: usize = hi
                    .trim()
                    .parse()
                    .map_err(|_| CliError::new(format!("bad range `{range}`, expected lo..hi")))?;
                if lo > hi {
                    return Err(CliError::new(format!("empty range `{range}`")));
                }
                Ok((lo..=hi).collect())
            }
        }
    }
}

#[derive(Args)]
pub struct AmplifyArgs {
    /// Witness graph file.
    #[arg(long = "in", value_name = "PATH", conflicts_with = "gernert_k")]
    pub input: Option<PathBuf>,

    /// Input format for --in.
    #[arg(long, value_enum, default_value_t = GraphFormat::Auto)]
    pub format: GraphFormat,

    /// Use the scale-k join construction (at its natural 21k vertices).
    #[arg(long)]
    pub gernert_k: Option<usize>,

    /// Target order.
    #[arg(long = "N")]
    pub big_n: usize,

    /// Reference level; defaults to the witness score F(G)/n.
    #[arg(long, allow_negative_numbers = true)]
    pub c_ref: Option<f64>,

    /// Margin above the reference level.
    #[arg(long, default_value_t = 0.25)]
    pub eps: f64,

    #[command(flatten)]
    pub form: FormArgs,

    /// Family: all, kr-free:R, or r-partite:R.
    #[arg(long, default_value = "all")]
    pub family: String,
}

/// Parses a family spelling, mapping the library error to usage wording.
pub fn parse_family(s: &str) -> Result<Family, CliError> {
    s.parse::<Family>()
        .map_err(|_| CliError::new(format!("unknown family `{s}`, expected all, kr-free:R, or r-partite:R")))
}

/// Reads a graph file in the requested format, sniffing when asked to. The
/// two formats need no marker: an edge list starts with the order (an ASCII
/// digit), while every graph6 byte is at least `?` (0x3f).
pub fn load_graph(path: &PathBuf, format: GraphFormat) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::new(format!("{}: {e}", path.display())))?;
    let format = match format {
        GraphFormat::Auto => {
            let first = text.trim_start().bytes().next();
            if first.is_some_and(|b| b.is_ascii_digit()) {
                GraphFormat::Edges
            } else {
                GraphFormat::G6
            }
        }
        fixed => fixed,
    };
    let g = match format {
        GraphFormat::G6 => from_graph6(text.trim()),
        GraphFormat::Edges => from_edge_list(&text),
        GraphFormat::Auto => unreachable!("resolved above"),
    };
    g.map_err(|e| CliError::new(format!("{}: {e}", path.display())))
}
