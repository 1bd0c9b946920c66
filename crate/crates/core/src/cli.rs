//! Command-line front end. The `exturan` binary is a thin wrapper around
//! [`run`].
//!
//! Exit codes: 0 success, 1 violations found, 2 domain or parse error,
//! 3 I/O error, 4 solver or enumeration budget exceeded, 5 internal
//! consistency failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::constructions::{build_f, build_h, LabeledConstruction};
use crate::counting::count_kst;
use crate::error::{Error, Result};
use crate::formulas::{eval_f, eval_f_both, eval_g, BoundParams, Theorem};
use crate::graph::{BipartiteGraph, Graph};
use crate::io;
use crate::structure::{self, DEFAULT_MAX_ORDER};
use crate::verify::{
    search_conjecture, theorem_class, verify_baseline, verify_theorem, Baseline, Conjecture, GraphClassSpec,
    VerifyOptions, VerifyReport,
};

#[derive(Parser, Debug)]
#[command(name = "exturan", version, about = "Exact generalized Turán computations for long cycles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a bound function or theorem threshold.
    Eval {
        #[arg(value_enum)]
        function: EvalFn,
        #[command(flatten)]
        params: ParamArgs,
        /// For `f`: sum both orientations when s != t.
        #[arg(long)]
        both: bool,
    },
    /// Build an extremal construction and write it as graph6 plus a JSON sidecar.
    Construct {
        #[arg(value_enum)]
        family: Family,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        out: PathBuf,
        /// Also report the circumference.
        #[arg(long)]
        analyze: bool,
        /// Skip the exponential property audit.
        #[arg(long)]
        no_audit: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
    /// Report counts and structural parameters of the graphs in a graph6 file.
    Analyze {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Report the (alpha+1)-core size; repeatable.
        #[arg(long)]
        alpha: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Sweep a theorem or classical baseline over a graph class.
    Verify {
        #[arg(value_enum)]
        claim: VerifyClaim,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Search a conjecture for counterexamples.
    Search {
        #[arg(value_enum)]
        claim: SearchClaim,
        #[command(flatten)]
        params: ParamArgs,
        /// Restrict the class to connected graphs.
        #[arg(long)]
        connected: bool,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EvalFn {
    F,
    G,
    ThresholdCb,
    ThresholdPb,
    ThresholdMb,
    ThresholdC,
    ThresholdP,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "F", alias = "f")]
    F,
    #[value(name = "H", alias = "h")]
    H,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyClaim {
    Cb,
    Pb,
    Mb,
    C,
    P,
    Jackson,
    LiNing,
    Wang,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SearchClaim {
    Adamus,
    Conj41,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Args, Debug, Clone, Default)]
pub struct ParamArgs {
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub s: usize,
    #[arg(long, default_value_t = 1)]
    pub t: usize,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// Enumerate every labelled graph of the class (the default).
    #[arg(long, conflicts_with = "random")]
    pub exhaustive: bool,
    /// Draw this many seeded random edge subsets instead.
    #[arg(long, requires = "seed")]
    pub random: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: u64,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write each violation and witness as a graph6 file in this directory.
    #[arg(long)]
    pub witness_dir: Option<PathBuf>,
    /// Record the wall-clock runtime in the report.
    #[arg(long)]
    pub timing: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: usize,
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::Domain(format!("missing required flag --{flag}")))
}

fn nonneg_k(k: i64) -> Result<usize> {
    usize::try_from(k).map_err(|_| Error::Domain(format!("k must be >= 0, got k = {k}")))
}

impl ParamArgs {
    fn bipartite(&self) -> Result<BoundParams> {
        Ok(BoundParams::bipartite(
            need(self.b, "b")?,
            need(self.n, "n")?,
            need(self.k, "k")?,
            need(self.r, "r")?,
            self.s,
            self.t,
        ))
    }

    fn general(&self) -> Result<BoundParams> {
        Ok(BoundParams::general(
            need(self.n, "n")?,
            need(self.k, "k")?,
            need(self.r, "r")?,
            self.s,
            self.t,
        ))
    }
}

/// Maps an error to its exit code.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::Degenerate(_) | Error::Parse { .. } | Error::InvalidBipartition { .. } => 2,
        Error::Io(_) | Error::Json(_) | Error::Csv(_) => 3,
        Error::Scale(_) => 4,
        Error::Internal(_) => 5,
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Eval { function, params, both } => {
            writeln!(out, "{}", eval(function, &params, both)?)?;
            Ok(0)
        }
        Command::Construct {
            family,
            params,
            out: path,
            analyze,
            no_audit,
            max_order,
        } => construct(family, &params, &path, analyze, no_audit, max_order, out, err),
        Command::Analyze {
            file,
            s,
            t,
            alpha,
            max_order,
            format,
        } => analyze(&file, s, t, &alpha, max_order, format, out),
        Command::Verify { claim, params, run } => {
            let opts = options(&run);
            let report = match claim {
                VerifyClaim::Cb | VerifyClaim::Pb | VerifyClaim::Mb | VerifyClaim::C | VerifyClaim::P => {
                    let theorem = match claim {
                        VerifyClaim::Cb => Theorem::CycleBipartite,
                        VerifyClaim::Pb => Theorem::PathBipartite,
                        VerifyClaim::Mb => Theorem::MatchingBipartite,
                        VerifyClaim::C => Theorem::CycleGeneral,
                        _ => Theorem::PathGeneral,
                    };
                    let p = if theorem.is_bipartite() { params.bipartite()? } else { params.general()? };
                    let spec = enumeration(theorem_class(theorem, &p), &run);
                    verify_theorem(theorem, &p, &spec, &opts)?
                }
                VerifyClaim::Jackson | VerifyClaim::LiNing => {
                    let n = need(params.n, "n")?;
                    let b = need(params.b, "b")?;
                    let p = BoundParams::bipartite(b, n, need(params.k, "k")?, 0, 1, 1);
                    let spec = enumeration(GraphClassSpec::bipartite(n, b), &run);
                    let which = if claim == VerifyClaim::Jackson { Baseline::Jackson } else { Baseline::LiNing };
                    verify_baseline(which, &p, &spec, &opts)?
                }
                _ => {
                    let n = need(params.n, "n")?;
                    let p = BoundParams::bipartite(n, n, need(params.k, "k")?, 0, params.s, params.t);
                    let spec = enumeration(GraphClassSpec::bipartite(n, n), &run);
                    verify_baseline(Baseline::Wang, &p, &spec, &opts)?
                }
            };
            emit(&report, &run, out, err)
        }
        Command::Search {
            claim,
            params,
            connected,
            run,
        } => {
            let opts = options(&run);
            let report = match claim {
                SearchClaim::Adamus => {
                    let n = need(params.n, "n")?;
                    let r = need(params.r, "r")?;
                    let p = BoundParams::bipartite(n, n, need(params.k, "k")?, r, 1, 1);
                    let mut spec = GraphClassSpec::bipartite(n, n).min_degree(r);
                    spec.connected = connected;
                    search_conjecture(Conjecture::Adamus, &p, &enumeration(spec, &run), &opts)?
                }
                SearchClaim::Conj41 => {
                    let p = params.bipartite()?;
                    let spec = theorem_class(Theorem::CycleBipartite, &p);
                    search_conjecture(Conjecture::Conj41, &p, &enumeration(spec, &run), &opts)?
                }
            };
            emit(&report, &run, out, err)
        }
    }
}

fn eval(function: EvalFn, p: &ParamArgs, both: bool) -> Result<String> {
    let value = match function {
        EvalFn::F => {
            let (b, n) = (need(p.b, "b")?, need(p.n, "n")?);
            let k = nonneg_k(need(p.k, "k")?)?;
            let m = n
                .checked_sub(k)
                .ok_or_else(|| Error::Domain(format!("need k <= n, got n = {n}, k = {k}")))?;
            let a = need(p.a, "a")?;
            if both {
                eval_f_both(b, n, m, a, p.s, p.t)?
            } else {
                eval_f(b, n, m, a, p.s, p.t)?
            }
        }
        EvalFn::G => eval_g(need(p.n, "n")?, nonneg_k(need(p.k, "k")?)?, need(p.a, "a")?, p.s, p.t)?,
        EvalFn::ThresholdCb => Theorem::CycleBipartite.threshold(&p.bipartite()?)?,
        EvalFn::ThresholdPb => Theorem::PathBipartite.threshold(&p.bipartite()?)?,
        EvalFn::ThresholdMb => Theorem::MatchingBipartite.threshold(&p.bipartite()?)?,
        EvalFn::ThresholdC => Theorem::CycleGeneral.threshold(&p.general()?)?,
        EvalFn::ThresholdP => Theorem::PathGeneral.threshold(&p.general()?)?,
    };
    Ok(value.to_string())
}

#[allow(clippy::too_many_arguments)]
fn construct(
    family: Family,
    p: &ParamArgs,
    path: &std::path::Path,
    analyze: bool,
    no_audit: bool,
    max_order: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let k = nonneg_k(need(p.k, "k")?)?;
    let (n, a) = (need(p.n, "n")?, need(p.a, "a")?);
    let mut c: LabeledConstruction = match family {
        Family::F => build_f(need(p.b, "b")?, n, k, a)?,
        Family::H => build_h(n, k, a)?,
    };
    let order = c.graph.order();
    if !no_audit {
        if order <= max_order {
            c = c.audited(max_order)?;
        } else {
            writeln!(err, "note: order {order} exceeds --max-order {max_order}; property audit skipped")?;
        }
    }
    io::write_construction(path, &c)?;
    let mut line = format!(
        "order {order} size {} min_degree {}",
        c.graph.size(),
        c.graph.min_degree()?
    );
    if analyze {
        line += &format!(" circumference {}", structure::circumference_within(&c.graph, max_order)?);
    }
    writeln!(out, "{line}")?;
    Ok(0)
}

fn analyze(
    file: &std::path::Path,
    s: usize,
    t: usize,
    alphas: &[usize],
    max_order: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32> {
    let graphs = io::read_graph6(file)?;
    let sidecar = io::read_sidecar(file)?;
    for (i, g) in graphs.iter().enumerate() {
        let bipartite: Option<BipartiteGraph> = match &sidecar {
            Some(side) if side.bipartition.is_some() => side.bipartite(g)?,
            _ => g
                .two_coloring()
                .map(|parts| BipartiteGraph::new(g.clone(), parts))
                .transpose()?,
        };
        let record = analysis(g, bipartite.as_ref(), s, t, alphas, max_order)?;
        match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(&record)?)?,
            _ => {
                if graphs.len() > 1 {
                    writeln!(out, "graph {i}")?;
                }
                for (key, value) in record.as_object().expect("analysis is an object") {
                    let shown = match value {
                        serde_json::Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    writeln!(out, "{key}: {shown}")?;
                }
            }
        }
    }
    Ok(0)
}

fn analysis(
    g: &Graph,
    bipartite: Option<&BipartiteGraph>,
    s: usize,
    t: usize,
    alphas: &[usize],
    max_order: usize,
) -> Result<serde_json::Value> {
    let mut record = serde_json::Map::new();
    record.insert("order".into(), json!(g.order()));
    record.insert("size".into(), json!(g.size()));
    record.insert("connected".into(), json!(g.is_connected()));
    record.insert("biconnected".into(), json!(g.is_biconnected()));
    record.insert("bipartite".into(), json!(bipartite.is_some()));
    if g.order() > 0 {
        record.insert("min_degree".into(), json!(g.min_degree()?));
    }
    record.insert(format!("N(K_{s},{t})"), json!(count_kst(g, s, t)?.to_string()));
    record.insert("circumference".into(), json!(structure::circumference_within(g, max_order)?));
    record.insert(
        "longest_path_order".into(),
        json!(structure::longest_path_order_within(g, max_order, usize::MAX)?),
    );
    if let Some(bg) = bipartite {
        record.insert("max_matching".into(), json!(structure::max_matching(bg)));
    }
    for &alpha in alphas {
        let core = structure::core(g, alpha);
        record.insert(format!("core_{}", alpha + 1), json!(core.surviving.len()));
    }
    Ok(serde_json::Value::Object(record))
}

fn options(run: &RunArgs) -> VerifyOptions {
    VerifyOptions {
        jobs: run.jobs as usize,
        max_order: run.max_order,
        timing: run.timing,
        ..VerifyOptions::default()
    }
}

fn enumeration(spec: GraphClassSpec, run: &RunArgs) -> GraphClassSpec {
    match (run.random, run.seed) {
        (Some(count), Some(seed)) => spec.random(count, seed),
        _ => spec,
    }
}

fn emit(report: &VerifyReport, run: &RunArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let body = match run.format {
        Format::Json => report.to_json()?,
        Format::Plain => report.to_plain(),
        Format::Csv => {
            let mut buf = Vec::new();
            VerifyReport::write_csv(&mut buf, std::slice::from_ref(report))?;
            String::from_utf8(buf).expect("csv output is UTF-8")
        }
    };
    match &run.out {
        Some(path) => fs::write(path, body)?,
        None => out.write_all(body.as_bytes())?,
    }
    if let Some(dir) = &run.witness_dir {
        report.write_witness_files(dir)?;
    }
    if !report.passed() {
        writeln!(
            err,
            "{}: {} violations (first: {})",
            report.claim,
            report.violation_count,
            report.violations.first().map_or("-", |s| s.as_str())
        )?;
        return Ok(1);
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("exturan").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn eval_values() {
        assert_eq!(call(&["eval", "f", "--b", "6", "--n", "6", "--k", "1", "--a", "2"]).1, "24\n");
        assert_eq!(call(&["eval", "g", "--n", "10", "--k", "5", "--a", "2"]).1, "17\n");
        let (code, out, _) = call(&["eval", "threshold-cb", "--b", "8", "--n", "8", "--k", "1", "--r", "1"]);
        assert_eq!((code, out.as_str()), (0, "50\n"));
    }

    #[test]
    fn eval_domain_error_exit_2() {
        let (code, out, err) = call(&["eval", "threshold-cb", "--b", "6", "--n", "6", "--k", "-1", "--r", "1"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("k must be >= 0"), "{err}");
        assert_eq!(call(&["eval", "g", "--n", "10", "--k", "5"]).0, 2);
        assert_eq!(call(&["eval", "nonsense"]).0, 2);
    }

    #[test]
    fn random_requires_seed() {
        let (code, _, _) = call(&["search", "adamus", "--n", "4", "--k", "1", "--r", "1", "--random", "10"]);
        assert_eq!(code, 2);
    }
}
