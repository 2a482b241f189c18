//! Command-line front end: one subcommand per module, rows rendered as CSV,
//! JSON or a markdown table.
//!
//! Output depends only on argv and the seed, never on timing or thread
//! count: batch jobs run on a pool capped by `DENSITOMETER_THREADS` and are
//! emitted in submission order.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::arith::{
    gross_form_exists, group_order, induction_growth_exponent, kottwitz_sign, omega_and_bounds, omega_scan,
    sxdh_ledger, ClassicalFamily, Parabolic, SignatureProfile,
};
use crate::arthur::{
    nilpotent_partitions, nu_sigma, rate_invariant, rate_oracle, shape_catalog_so5, weighted_dynkin, Levi,
};
use crate::error::{Error, Result};
use crate::lie::{build_root_datum, weyl_elements, Family, Rational, RootDatum, Weight};
use crate::nbrw::graph::CAYLEY_CAP;
use crate::nbrw::spectrum::{arnoldi_spectrum, density_check_reports, DENSE_LIMIT, RATE_GRID};
use crate::nbrw::{
    cayley_digraph, cayley_generators, nb_lift_spectrum, nonbacktracking_lift, spectrum, walk_report, BaseSpectrum,
    Digraph, MixingOptions, SpectrumReport, UndirectedGraph,
};
use crate::packets::{packet_table, total_dim_check, RealForm};
use crate::spherical::{decay_threshold, lr_converges, lr_partial_sum, Surrogate, UnramifiedParam};

/// Exit status for usage errors such as an unknown subcommand.
pub const EXIT_USAGE: i32 = 64;
/// Exit status for rejected input.
pub const EXIT_INVALID: i32 = 2;
/// Exit status for a violated internal invariant or a failed write.
pub const EXIT_INTERNAL: i32 = 1;

/// Lanczos steps used for base graphs above the dense limit.
const LANCZOS_STEPS: usize = 200;
/// Arnoldi steps used for digraphs above the dense limit.
const ARNOLDI_STEPS: usize = 200;

#[derive(Parser, Debug)]
#[command(name = "densitometer", version, about = "Rates of decay, A-packets and non-backtracking walk experiments")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,
    /// Seed for every random choice; recorded in the output.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Largest matrix order handed to a dense eigensolver.
    #[arg(long, default_value_t = DENSE_LIMIT, global = true)]
    dense_limit: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rates of decay of Arthur SL2-types.
    Rates(RatesArgs),
    /// Nilpotent orbits with weighted Dynkin diagrams and rates.
    Orbits(OrbitsArgs),
    /// Cohomological A-packets of the real forms of SO5.
    Packets(PacketsArgs),
    /// Truncated L^r sums of unramified spherical functions.
    Spherical(SphericalArgs),
    /// Mixing time, distances and collisions of walks on digraphs.
    Walk(WalkArgs),
    /// Walk-operator spectra and density counts.
    Spectrum(SpectrumArgs),
    /// Proven exponents against rate predictions for the SO5 shapes.
    Ledger,
    /// Existence of Gross inner forms.
    Gross(GrossArgs),
    /// Group orders, prime-factor bounds and induction exponents.
    #[command(subcommand)]
    Counts(CountsCommand),
}

#[derive(Args, Debug)]
struct RatesArgs {
    /// `SO<2n+1>` (orbits of Sp_2n) or `Sp<2n>` (orbits of SO_2n+1).
    #[arg(long, default_value = "SO5")]
    group: String,
    /// Check the three rate routes on this weight instead of listing orbits.
    #[arg(long, value_name = "a,b,...")]
    nu: Option<String>,
}

#[derive(Args, Debug)]
struct OrbitsArgs {
    /// Partition parity rule: C (even parts paired) or B (odd size).
    #[arg(long, default_value = "C")]
    family: String,
    /// Size of the partitions.
    #[arg(long, default_value_t = 4)]
    n: u32,
}

#[derive(Args, Debug)]
struct PacketsArgs {
    /// split, hyperbolic or compact.
    #[arg(long)]
    form: Option<String>,
    /// T, M, S or G.
    #[arg(long)]
    levi: Option<String>,
}

#[derive(Args, Debug)]
struct SphericalArgs {
    /// Root datum, e.g. B2 or C3.
    #[arg(long, default_value = "B2")]
    group: String,
    #[arg(long, value_name = "a,b,...")]
    nu: String,
    /// Residue characteristic.
    #[arg(long, default_value_t = 3)]
    p: u64,
    /// Exponents, as exact rationals.
    #[arg(long, value_delimiter = ',', default_value = "3")]
    r: Vec<String>,
    /// Truncation radii.
    #[arg(long, value_delimiter = ',', default_value = "5,10,20,40")]
    radius: Vec<u32>,
    #[arg(long, value_enum, default_value_t = SurrogateArg::Dominant)]
    surrogate: SurrogateArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SurrogateArg {
    Dominant,
    Weyl,
}

#[derive(Args, Debug, Clone)]
struct GraphSource {
    /// Digraph edge list.
    #[arg(long, value_name = "FILE", group = "source")]
    graph: Option<PathBuf>,
    /// Undirected edge list; the walk runs on its non-backtracking lift.
    #[arg(long, value_name = "FILE", group = "source")]
    nb_lift: Option<PathBuf>,
    /// Cayley digraph, e.g. `sl2:7`, `sym:5`, `cyclic:12`, `perm:1,0,2;0,2,1`.
    #[arg(long, value_name = "SPEC", group = "source")]
    cayley: Option<String>,
    /// Random K-regular graphs on each of the N vertex counts.
    #[arg(long, num_args = 2, value_names = ["N[,N...]", "K"], group = "source")]
    random_regular: Option<Vec<String>>,
    /// Walk on the random regular graph itself rather than its lift.
    #[arg(long)]
    no_lift: bool,
    /// Run one job per seed instead of the global seed.
    #[arg(long, value_delimiter = ',')]
    seeds: Vec<u64>,
}

#[derive(Args, Debug)]
struct WalkArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, default_value_t = 0.25)]
    eps: f64,
    /// Mass threshold of the almost diameter.
    #[arg(long, default_value_t = 0.1)]
    ad_eps: f64,
    /// Step budget for the mixing search.
    #[arg(long)]
    horizon: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Dense,
    Ihara,
    Arnoldi,
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    /// Append a density-slope verdict at this exponent over the family.
    #[arg(long)]
    density_r: Option<f64>,
}

#[derive(Args, Debug)]
struct GrossArgs {
    #[arg(long, default_value_t = 2)]
    n: u32,
    /// Signature index `a_v` at each infinite place.
    #[arg(long, value_delimiter = ',', conflicts_with = "definite_up_to")]
    a: Vec<u32>,
    /// List totally definite profiles for degrees 1 to D.
    #[arg(long, value_name = "D")]
    definite_up_to: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum CountsCommand {
    /// Order of a finite classical group, optionally of a principal congruence quotient.
    Orders {
        #[arg(long, default_value = "sp")]
        family: String,
        #[arg(long, default_value_t = 2)]
        rank: u32,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        level: u32,
    },
    /// Prime-factor statistics of one ideal norm, given as `p^e` factors.
    Omega {
        #[arg(long, value_delimiter = ',', value_name = "p^e,...")]
        factors: Vec<String>,
    },
    /// Worst-case prime-factor ratios over square-free norms up to a limit.
    Scan {
        #[arg(long, default_value_t = 1_000_000)]
        limit: u64,
    },
    /// Growth exponent of parabolic induction for each proper parabolic.
    Induction,
}

/// Rows of one report with a fixed column order.
#[derive(Debug)]
struct Report {
    command: &'static str,
    seed: u64,
    columns: Vec<String>,
    rows: Vec<Vec<Value>>,
    notes: Vec<String>,
}

impl Report {
    fn new(command: &'static str, seed: u64, columns: &[&str]) -> Self {
        Self { command, seed, columns: columns.iter().map(|c| c.to_string()).collect(), rows: vec![], notes: vec![] }
    }

    fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Columns and rows from serializable records, in field order.
    fn from_records<T: Serialize>(command: &'static str, seed: u64, records: &[T]) -> Result<Self> {
        let mut report = Self::new(command, seed, &[]);
        for r in records {
            let Value::Object(map) = serde_json::to_value(r).map_err(|e| Error::Invariant(e.to_string()))? else {
                return Err(Error::Invariant("record is not an object".into()));
            };
            if report.columns.is_empty() {
                report.columns = map.keys().cloned().collect();
            }
            report.rows.push(map.into_iter().map(|(_, v)| v).collect());
        }
        Ok(report)
    }

    fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => self.render_csv(),
            Format::Json => Ok(self.render_json()),
            Format::Table => Ok(self.render_table()),
        }
    }

    fn render_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Invariant(e.to_string());
        w.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(cell)).map_err(io)?;
        }
        let mut s = String::from_utf8(w.into_inner().map_err(|e| Error::Invariant(e.to_string()))?)
            .map_err(|e| Error::Invariant(e.to_string()))?;
        for n in &self.notes {
            s.push_str(&format!("# {n}\n"));
        }
        Ok(s)
    }

    fn render_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Object(self.columns.iter().cloned().zip(r.iter().cloned()).collect::<Map<_, _>>()))
            .collect();
        let doc = json!({ "command": self.command, "seed": self.seed, "rows": rows, "notes": self.notes });
        let mut s = serde_json::to_string_pretty(&doc).expect("values serialize");
        s.push('\n');
        s
    }

    fn render_table(&self) -> String {
        let mut s = format!("| {} |\n", self.columns.join(" | "));
        s.push_str(&format!("|{}\n", "---|".repeat(self.columns.len())));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| cell(v).replace('|', "\\|")).collect();
            s.push_str(&format!("| {} |\n", cells.join(" | ")));
        }
        for n in &self.notes {
            s.push_str(&format!("\n{n}\n"));
        }
        s
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn text(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

/// Parses and runs `args` (including the program name), writing the report
/// to `out` or `--out` and a one-line diagnostic to `err`.
pub fn run(args: Vec<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => return clap_exit(e, out, err),
    };
    let format = if cli.global.json { Format::Json } else { cli.global.format };
    let result = pool().and_then(|pool| pool.install(|| dispatch(&cli)));
    let rendered = result.and_then(|report| report.render(format));
    match rendered {
        Ok(s) => {
            let written = match &cli.global.out {
                Some(path) => fs::write(path, s.as_bytes()),
                None => out.write_all(s.as_bytes()).and_then(|_| out.flush()),
            };
            match written {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(err, "error: cannot write report: {e}");
                    EXIT_INTERNAL
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.to_string().replace('\n', " "));
            match e {
                Error::Invariant(_) | Error::Numerical(_) => EXIT_INTERNAL,
                _ => EXIT_INVALID,
            }
        }
    }
}

fn clap_exit(e: clap::Error, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    use clap::error::ErrorKind;
    match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
            let _ = write!(out, "{}", e.render());
            0
        }
        ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
            let _ = write!(err, "{}", e.render());
            EXIT_USAGE
        }
        kind => {
            let rendered = e.render().to_string();
            let line = rendered.lines().next().unwrap_or("error: invalid arguments");
            let _ = writeln!(err, "{line}");
            if matches!(kind, ErrorKind::InvalidSubcommand | ErrorKind::MissingSubcommand) {
                EXIT_USAGE
            } else {
                EXIT_INVALID
            }
        }
    }
}

fn pool() -> Result<rayon::ThreadPool> {
    let threads = match std::env::var("DENSITOMETER_THREADS") {
        Ok(v) => v
            .parse::<usize>()
            .map_err(|_| Error::InvalidArgument(format!("DENSITOMETER_THREADS must be a count, got {v:?}")))?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|e| Error::InvalidArgument(e.to_string()))
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let g = &cli.global;
    match &cli.command {
        Command::Rates(a) => rates(a, g),
        Command::Orbits(a) => orbits(a, g),
        Command::Packets(a) => packets(a, g),
        Command::Spherical(a) => spherical(a, g),
        Command::Walk(a) => walk(a, g),
        Command::Spectrum(a) => spectrum_cmd(a, g),
        Command::Ledger => Report::from_records("ledger", g.seed, &sxdh_ledger()?),
        Command::Gross(a) => gross(a, g),
        Command::Counts(c) => counts(c, g),
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse::<Rational>().map_err(|_| Error::InvalidArgument(format!("{s:?} is not a rational number")))
}

fn parse_weight(s: &str) -> Result<Weight> {
    Ok(Weight::new(s.split(',').map(parse_rational).collect::<Result<_>>()?))
}

/// `SO<2n+1>` or `Sp<2n>`: the orbit family and the dual root datum.
fn parse_group(s: &str) -> Result<(Family, u32, RootDatum)> {
    let bad = || Error::InvalidArgument(format!("unknown group {s:?}; expected SO<odd> or Sp<even>"));
    let lower = s.to_ascii_lowercase();
    let (family, size) = if let Some(m) = lower.strip_prefix("so") {
        (Family::C, m.parse::<u32>().map_err(|_| bad())?)
    } else if let Some(m) = lower.strip_prefix("sp") {
        (Family::B, m.parse::<u32>().map_err(|_| bad())?)
    } else {
        return Err(bad());
    };
    let rank = match family {
        Family::C if size % 2 == 1 && size >= 3 => (size - 1) / 2,
        Family::B if size % 2 == 0 && size >= 2 => size / 2,
        _ => return Err(bad()),
    };
    // orbits of the dual group: size 2n for SO_{2n+1}, 2n+1 for Sp_{2n}
    let orbit_size = match family {
        Family::C => 2 * rank,
        Family::B => 2 * rank + 1,
    };
    Ok((family, orbit_size, build_root_datum(family.dual(), rank as usize)?))
}

/// `B2`, `C3`, ...
fn parse_root_datum(s: &str) -> Result<RootDatum> {
    let bad = || Error::InvalidArgument(format!("unknown root datum {s:?}; expected B<n> or C<n>"));
    let mut chars = s.chars();
    let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
        Some('B') => Family::B,
        Some('C') => Family::C,
        _ => return Err(bad()),
    };
    let rank = chars.as_str().parse::<usize>().map_err(|_| bad())?;
    build_root_datum(family, rank)
}

fn orbit_rows(report: &mut Report, family: Family, size: u32, rd: &RootDatum) -> Result<()> {
    for orbit in nilpotent_partitions(family, size) {
        let nu = nu_sigma(&orbit, rd)?;
        let wd: Vec<String> = weighted_dynkin(&orbit).iter().map(|x| x.to_string()).collect();
        report.push(vec![
            text(&orbit),
            text(format!("({})", wd.join(","))),
            text(&nu),
            text(rate_invariant(&nu, rd)?),
        ]);
    }
    Ok(())
}

fn rates(a: &RatesArgs, g: &Global) -> Result<Report> {
    let (family, size, rd) = parse_group(&a.group)?;
    if let Some(nu) = &a.nu {
        let nu = parse_weight(nu)?;
        let invariant = rate_invariant(&nu, &rd)?;
        let oracle = rate_oracle(&nu, &rd)?;
        let threshold = decay_threshold(&UnramifiedParam::new(nu.clone(), 2, &rd)?, &rd)?;
        let mut r = Report::new("rates", g.seed, &["group", "nu", "rate_invariant", "rate_oracle", "decay_threshold", "agree"]);
        let agree = invariant == oracle && oracle == threshold;
        r.push(vec![text(&a.group), text(&nu), text(invariant), text(oracle), text(threshold), Value::Bool(agree)]);
        if !agree {
            return Err(Error::Invariant(format!("rate routes disagree on {nu}: {invariant}, {oracle}, {threshold}")));
        }
        return Ok(r);
    }
    if family == Family::C && size == 4 {
        let mut r = Report::new("rates", g.seed, &["shape", "pairs", "partition", "nu", "rate"]);
        for row in shape_catalog_so5() {
            let pairs: String = row.shape.pairs.iter().map(|(n, m)| format!("({n},{m})")).collect();
            r.push(vec![text(row.shape.name), text(pairs), text(&row.orbit), text(&row.nu), text(row.rate)]);
        }
        return Ok(r);
    }
    let mut r = Report::new("rates", g.seed, &["partition", "weighted_dynkin", "nu", "rate"]);
    orbit_rows(&mut r, family, size, &rd)?;
    Ok(r)
}

fn orbits(a: &OrbitsArgs, g: &Global) -> Result<Report> {
    let family = match a.family.to_ascii_uppercase().as_str() {
        "B" => Family::B,
        "C" => Family::C,
        other => return Err(Error::InvalidArgument(format!("unknown family {other:?}; expected B or C"))),
    };
    let rank = match family {
        Family::C if a.n.is_multiple_of(2) && a.n >= 2 => a.n / 2,
        Family::B if a.n % 2 == 1 && a.n >= 3 => (a.n - 1) / 2,
        _ => return Err(Error::InvalidArgument(format!("no {family} orbits of size {}", a.n))),
    };
    let rd = build_root_datum(family.dual(), rank as usize)?;
    let mut r = Report::new("orbits", g.seed, &["partition", "weighted_dynkin", "nu", "rate"]);
    orbit_rows(&mut r, family, a.n, &rd)?;
    Ok(r)
}

fn packets(a: &PacketsArgs, g: &Global) -> Result<Report> {
    let form: Option<RealForm> = a.form.as_deref().map(str::parse).transpose()?;
    let levi: Option<Levi> = a.levi.as_deref().map(str::parse).transpose()?;
    let mut r = Report::new(
        "packets",
        g.seed,
        &["form", "levi", "parabolic", "size", "representatives", "degrees", "total_dim", "total_dim_check"],
    );
    for p in packet_table() {
        if form.is_some_and(|f| f != p.form) || levi.is_some_and(|l| l != p.levi) {
            continue;
        }
        let reps: Vec<String> = p.representatives.iter().map(|w| w.to_string()).collect();
        let degrees: Vec<String> = p
            .degree_sets
            .iter()
            .map(|s| format!("{{{}}}", s.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        r.push(vec![
            text(format!("{:?}", p.form).to_ascii_lowercase()),
            text(p.levi),
            text(p.levi.parabolic_name()),
            json!(p.size),
            text(reps.join(" ")),
            text(degrees.join(" ")),
            json!(p.total_dim),
            Value::Bool(total_dim_check(p.form, p.levi)),
        ]);
    }
    Ok(r)
}

fn spherical(a: &SphericalArgs, g: &Global) -> Result<Report> {
    let rd = parse_root_datum(&a.group)?;
    let param = UnramifiedParam::new(parse_weight(&a.nu)?, a.p, &rd)?;
    let weyl = weyl_elements(&rd)?;
    let surrogate = match a.surrogate {
        SurrogateArg::Dominant => Surrogate::DominantTerm,
        SurrogateArg::Weyl => Surrogate::WeylSum,
    };
    let threshold = decay_threshold(&param, &rd)?;
    let mut report = Report::new(
        "spherical",
        g.seed,
        &["group", "nu", "p", "r", "radius", "partial_sum", "growth", "lr_converges", "threshold"],
    );
    for r_text in &a.r {
        let r = parse_rational(r_text)?;
        let converges = lr_converges(&param.nu, r, &rd)?;
        let mut previous: Option<f64> = None;
        for &radius in &a.radius {
            let sum = lr_partial_sum(&param, r, radius, &rd, surrogate, &weyl)?;
            let growth = previous.map_or(Value::Null, |p| json!(sum / p));
            report.push(vec![
                text(&a.group),
                text(&param.nu),
                json!(a.p),
                text(r),
                json!(radius),
                json!(sum),
                growth,
                Value::Bool(converges),
                text(threshold),
            ]);
            previous = Some(sum);
        }
    }
    Ok(report)
}

/// One graph instance of a batch.
struct Job {
    name: String,
    seed: u64,
    graph: Digraph,
    /// Base graph when `graph` is its non-backtracking lift.
    base: Option<UndirectedGraph>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn stem(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

/// Expands a graph source into jobs, in submission order: sizes outer, seeds inner.
fn jobs(src: &GraphSource, g: &Global) -> Result<Vec<Job>> {
    let seeds = if src.seeds.is_empty() { vec![g.seed] } else { src.seeds.clone() };
    let fixed = |name: String, graph: Digraph, base: Option<UndirectedGraph>| {
        seeds.iter().map(|&seed| Job { name: name.clone(), seed, graph: graph.clone(), base: base.clone() }).collect()
    };
    if let Some(path) = &src.graph {
        return Ok(fixed(stem(path), Digraph::from_edge_list(&read(path)?)?, None));
    }
    if let Some(path) = &src.nb_lift {
        let base = UndirectedGraph::from_edge_list(&read(path)?)?;
        return Ok(fixed(format!("{}-nb", stem(path)), nonbacktracking_lift(&base)?, Some(base)));
    }
    if let Some(spec) = &src.cayley {
        return Ok(fixed(spec.clone(), cayley_digraph(&cayley_generators(spec)?, CAYLEY_CAP)?, None));
    }
    let Some(rr) = &src.random_regular else {
        return Err(Error::InvalidArgument(
            "one of --graph, --nb-lift, --cayley or --random-regular is required".into(),
        ));
    };
    let k: usize = rr[1].parse().map_err(|_| Error::InvalidArgument(format!("degree {:?} is not a count", rr[1])))?;
    let sizes = rr[0]
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| Error::InvalidArgument(format!("size {s:?} is not a count"))))
        .collect::<Result<Vec<_>>>()?;
    let tasks: Vec<(usize, u64)> = sizes.iter().flat_map(|&n| seeds.iter().map(move |&s| (n, s))).collect();
    tasks
        .into_par_iter()
        .map(|(n, seed)| {
            let base = UndirectedGraph::random_regular(n, k, seed)?;
            Ok(if src.no_lift {
                let out = base.neighbors();
                Job { name: format!("rr{k}-{n}"), seed, graph: Digraph::new(out)?, base: None }
            } else {
                Job { name: format!("rr{k}-{n}-nb"), seed, graph: nonbacktracking_lift(&base)?, base: Some(base) }
            })
        })
        .collect()
}

fn walk(a: &WalkArgs, g: &Global) -> Result<Report> {
    let jobs = jobs(&a.source, g)?;
    let reports = jobs
        .par_iter()
        .map(|job| {
            let opts = MixingOptions { eps: a.eps, horizon: a.horizon, seed: job.seed, ..Default::default() };
            walk_report(&job.graph, &job.name, &opts, a.ad_eps)
        })
        .collect::<Result<Vec<_>>>()?;
    Report::from_records("walk", g.seed, &reports)
}

fn job_spectrum(job: &Job, method: Method, dense_limit: usize) -> Result<(&'static str, SpectrumReport)> {
    let base_method = |b: &UndirectedGraph| {
        if b.n <= dense_limit {
            BaseSpectrum::Dense
        } else {
            BaseSpectrum::Lanczos { steps: LANCZOS_STEPS, seed: job.seed }
        }
    };
    match (method, &job.base) {
        (Method::Auto | Method::Ihara, Some(b)) => {
            let m = base_method(b);
            let label = if m == BaseSpectrum::Dense { "ihara-dense" } else { "ihara-lanczos" };
            Ok((label, nb_lift_spectrum(b, m)?))
        }
        (Method::Ihara, None) => Err(Error::InvalidArgument("--method ihara needs a lifted graph".into())),
        (Method::Auto, None) if job.graph.n() <= dense_limit => Ok(("dense", spectrum(&job.graph, dense_limit)?)),
        (Method::Dense, _) => Ok(("dense", spectrum(&job.graph, dense_limit)?)),
        (Method::Auto | Method::Arnoldi, _) => Ok(("arnoldi", arnoldi_spectrum(&job.graph, ARNOLDI_STEPS, job.seed)?)),
    }
}

fn spectrum_cmd(a: &SpectrumArgs, g: &Global) -> Result<Report> {
    let jobs = jobs(&a.source, g)?;
    let spectra = jobs
        .par_iter()
        .map(|job| job_spectrum(job, a.method, g.dense_limit))
        .collect::<Result<Vec<_>>>()?;
    let mut columns: Vec<String> =
        ["graph", "n", "d", "seed", "method", "complete", "trivial", "top_nontrivial"].map(String::from).to_vec();
    columns.extend(RATE_GRID.iter().map(|r| format!("N({r})")));
    let mut report = Report::new("spectrum", g.seed, &[]);
    report.columns = columns;
    for (job, (method, s)) in jobs.iter().zip(&spectra) {
        let mut row = vec![
            text(&job.name),
            json!(s.n),
            json!(s.d),
            json!(job.seed),
            text(method),
            Value::Bool(s.complete),
            json!(s.trivial),
            s.top_nontrivial().map_or(Value::Null, |t| json!(t)),
        ];
        row.extend(s.density_grid().into_iter().map(|(_, c)| json!(c)));
        report.push(row);
    }
    if let Some(r) = a.density_r {
        let family: Vec<SpectrumReport> = spectra.into_iter().map(|(_, s)| s).collect();
        let v = density_check_reports(&family, r)?;
        report.notes.push(format!(
            "density r={} slope={:.6} bound={:.6} {}",
            v.r,
            v.slope,
            v.bound,
            if v.pass { "PASS" } else { "FAIL" }
        ));
    }
    Ok(report)
}

fn gross(a: &GrossArgs, g: &Global) -> Result<Report> {
    let mut r = Report::new("gross", g.seed, &["n", "a_list", "kottwitz_product", "gross_form_exists"]);
    let profiles: Vec<Vec<u32>> = match a.definite_up_to {
        // SO(2n+1) compact at every place: a_v = n
        Some(d) => (1..=d).map(|deg| vec![a.n; deg as usize]).collect(),
        None if a.a.is_empty() => return Err(Error::InvalidArgument("give --a or --definite-up-to".into())),
        None => vec![a.a.clone()],
    };
    for a_list in profiles {
        let product: i8 = a_list.iter().map(|&x| kottwitz_sign(a.n, x)).product::<Result<i8>>()?;
        let exists = gross_form_exists(&SignatureProfile::new(a.n, a_list.clone())?)?;
        let list: Vec<String> = a_list.iter().map(|x| x.to_string()).collect();
        r.push(vec![json!(a.n), text(list.join(",")), json!(product), Value::Bool(exists)]);
    }
    Ok(r)
}

fn parse_factor(s: &str) -> Result<(u64, u32)> {
    let bad = || Error::InvalidArgument(format!("factor {s:?} is not of the form p or p^e"));
    let (p, e) = s.trim().split_once('^').unwrap_or((s.trim(), "1"));
    Ok((p.parse().map_err(|_| bad())?, e.parse().map_err(|_| bad())?))
}

fn counts(c: &CountsCommand, g: &Global) -> Result<Report> {
    match c {
        CountsCommand::Orders { family, rank, p, level } => {
            let fam: ClassicalFamily = family.parse()?;
            let order = group_order(fam, *rank, *p, *level)?;
            let mut r = Report::new("counts orders", g.seed, &["family", "rank", "p", "level", "order"]);
            r.push(vec![text(family.to_ascii_lowercase()), json!(rank), json!(p), json!(level), text(order)]);
            Ok(r)
        }
        CountsCommand::Omega { factors } => {
            let f = factors.iter().map(|s| parse_factor(s)).collect::<Result<Vec<_>>>()?;
            let o = omega_and_bounds(&f)?;
            let mut r = Report::new(
                "counts omega",
                g.seed,
                &["norm", "omega", "smallest_coprime_prime", "omega_ratio", "coprime_ratio"],
            );
            let opt = |x: Option<f64>| x.map_or(Value::Null, |v| json!(v));
            r.push(vec![
                text(o.norm),
                json!(o.omega),
                json!(o.smallest_coprime_prime),
                opt(o.omega_ratio),
                opt(o.coprime_ratio),
            ]);
            Ok(r)
        }
        CountsCommand::Scan { limit } => Report::from_records("counts scan", g.seed, &[omega_scan(*limit)?]),
        CountsCommand::Induction => {
            let mut r = Report::new("counts induction", g.seed, &["parabolic", "exponent"]);
            for p in Parabolic::ALL {
                r.push(vec![text(format!("{p:?}")), json!(induction_growth_exponent(p))]);
            }
            Ok(r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let argv = std::iter::once("densitometer").chain(args.iter().copied()).map(String::from).collect();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn rates_so5_table() {
        let (code, out, _) = call(&["rates", "--group", "SO5"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "shape,pairs,partition,nu,rate");
        assert_eq!(lines.len(), 7);
        assert!(lines.iter().any(|l| l.starts_with("P,") && l.ends_with(",3")));
        assert!(lines.iter().any(|l| l.starts_with("F,") && l.ends_with(",inf")));
    }

    #[test]
    fn packets_split_klingen() {
        let (code, out, _) = call(&["packets", "--form", "split", "--levi", "M"]);
        assert_eq!(code, 0);
        let row = out.lines().nth(1).unwrap();
        assert!(row.starts_with("split,M,Klingen,3,"), "{row}");
        assert!(row.contains("{2,4} {3} {3}"), "{row}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        let (code, _, err) = call(&["rates", "--group", "SO4"]);
        assert_eq!(code, EXIT_INVALID);
        assert_eq!(err.lines().count(), 1);
        assert!(err.starts_with("error: "));
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn json_envelope_keeps_column_order() {
        let (code, out, _) = call(&["ledger", "--json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["command"], "ledger");
        let keys: Vec<&String> = v["rows"][0].as_object().unwrap().keys().collect();
        assert_eq!(keys[0], "shape");
        assert_eq!(v["rows"].as_array().unwrap().len(), 6);
    }

    #[test]
    fn walk_is_deterministic() {
        let args = ["walk", "--random-regular", "200", "3", "--seed", "7"];
        let (c1, a, _) = call(&args);
        let (c2, b, _) = call(&args);
        assert_eq!((c1, c2), (0, 0));
        assert_eq!(a, b);
        assert!(a.starts_with("graph,n,d,seed,eps,ad_eps,t_mix,"));
    }

    #[test]
    fn factor_syntax() {
        assert_eq!(parse_factor("3^2").unwrap(), (3, 2));
        assert_eq!(parse_factor("5").unwrap(), (5, 1));
        assert!(parse_factor("x^2").is_err());
    }
}
