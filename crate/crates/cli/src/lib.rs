//! Command-line front end for `toricreg`.
//!
//! [`run`] parses arguments, dispatches to the library and returns the
//! rendered output together with the exit status, so the binary is a thin
//! wrapper and the whole surface is testable in-process.
//!
//! Exit status: 0 on success, 1 on a domain error (the error name is printed),
//! 2 on a parse or usage error.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use toricreg::formats::{parse_assumption, parse_ideal, parse_variety, FiltrationFile, UpsetFile, VarietyFile};
use toricreg::gotzmann::LexIdealForm;
use toricreg::hilbscheme::DegreeSetOptions;
use toricreg::*;

#[derive(Parser, Debug)]
#[command(name = "toricreg", version, about = "Multigraded regularity on smooth projective toric varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct VarietyArg {
    /// Builtin name (`P(2)`, `PxP(2,1)`, `Hirzebruch(2)`), a JSON file, or inline JSON.
    #[arg(long)]
    pub variety: String,
    /// Skip the completeness check of the fan.
    #[arg(long)]
    pub assume_complete: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Grading, nef cone and the vector c of a variety.
    Variety {
        #[command(flatten)]
        variety: VarietyArg,
        #[arg(long)]
        json: bool,
    },
    /// Stanley filtration of S/I from the splitting tree.
    Stanley {
        #[arg(long)]
        variety: Option<String>,
        #[arg(long)]
        assume_complete: bool,
        /// Number of variables when no variety is given.
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long)]
        ideal: String,
        /// 1-based splitting variables, e.g. `1,2,2,1,2`.
        #[arg(long, value_delimiter = ',', conflicts_with = "nice")]
        choices: Vec<usize>,
        /// Choose variables so the filtration respects the graded face order.
        #[arg(long)]
        nice: bool,
        /// Print the splitting tree as well.
        #[arg(long)]
        tree: bool,
        #[arg(long)]
        json: bool,
    },
    /// Hilbert polynomial of S, of a face ring S_sigma, or of S/I.
    Hilbert {
        #[command(flatten)]
        variety: VarietyArg,
        #[arg(long, group = "what")]
        ring: bool,
        #[arg(long, group = "what")]
        ideal: Option<String>,
        /// The free variables sigma, 1-based.
        #[arg(long, group = "what", value_delimiter = ',')]
        face: Option<Vec<usize>>,
        /// Also evaluate the Hilbert function at this degree.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        at: Option<Vec<i64>>,
        #[arg(long)]
        json: bool,
    },
    /// Regularity region from a Stanley filtration of S/I, or the uniform bound for P.
    Regularity {
        #[command(flatten)]
        variety: VarietyArg,
        #[arg(long, conflicts_with = "poly", required_unless_present = "poly")]
        ideal: Option<String>,
        #[arg(long)]
        poly: Option<String>,
        /// `default-K` or a JSON baseline file.
        #[arg(long, default_value = "default-K")]
        assume_baseline: String,
        #[arg(long)]
        json: bool,
    },
    /// All B-saturated monomial ideals with Hilbert polynomial P.
    Enumerate {
        #[command(flatten)]
        variety: VarietyArg,
        #[arg(long)]
        poly: String,
        /// Variable priority of the graded order, 1-based, e.g. `2,1`.
        #[arg(long, value_delimiter = ',')]
        priority: Option<Vec<usize>>,
        #[arg(long, default_value_t = 10_000_000)]
        budget: usize,
        #[arg(long)]
        json: bool,
    },
    /// Gotzmann representation and lex ideal; the multigraded number with --variety.
    Gotzmann {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long)]
        variety: Option<String>,
        #[arg(long)]
        assume_complete: bool,
        #[arg(long)]
        json: bool,
    },
    /// The lex ideal with Hilbert polynomial P in `vars` variables.
    Lex {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        json: bool,
    },
    /// Finite degree set D detecting the Hilbert polynomial P.
    Degset {
        #[command(flatten)]
        variety: VarietyArg,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Skip the general points drawn beyond the regularity bound.
        #[arg(long)]
        no_bulk: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietyReport {
    pub n: usize,
    pub d: usize,
    pub r: usize,
    #[serde(flatten)]
    pub file: VarietyFile,
    pub nef_rays: Vec<Vec<i64>>,
    pub c: Vec<i64>,
    pub faces: usize,
    /// `old = U * new` makes every variable degree nef.
    pub orthant_change: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StanleyReport {
    #[serde(flatten)]
    pub filtration: FiltrationFile,
    pub choices: Vec<usize>,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertReport {
    pub polynomial: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityReport {
    #[serde(flatten)]
    pub bound: UpsetFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gotzmann_number: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filtration: Option<FiltrationFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GotzmannReport {
    pub polynomial: String,
    pub m: usize,
    pub q: Vec<u32>,
    pub representation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lex: Option<FiltrationFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multigraded: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper_bound: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexReport {
    pub n: usize,
    pub l: usize,
    pub b: Vec<u32>,
    #[serde(flatten)]
    pub filtration: FiltrationFile,
}

/// What the process should print and return.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String, stderr: String) -> Self {
        Outcome { code: 0, stdout, stderr }
    }
}

fn failure(e: &Error) -> Outcome {
    let code = if e.is_parse() { 2 } else { 1 };
    Outcome { code, stdout: String::new(), stderr: format!("error: {}: {e}\n", e.name()) }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.exit_code() {
                0 => Outcome::ok(text, String::new()),
                _ => Outcome { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    match execute(&cli.command) {
        Ok((out, err)) => Outcome::ok(out, err),
        Err(e) => failure(&e),
    }
}

/// Reads `arg` from disk when it names an existing file, otherwise returns it verbatim.
fn file_or_inline(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{arg}: {e}")));
    }
    Ok(arg.to_string())
}

fn load_variety(arg: &str, assume_complete: bool) -> Result<ToricVariety> {
    parse_variety(&file_or_inline(arg)?, assume_complete)
}

fn load_ideal(arg: &str, n: usize) -> Result<MonomialIdeal> {
    parse_ideal(&file_or_inline(arg)?, n)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types serialize");
    s.push('\n');
    s
}

fn list(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn render_pairs(out: &mut String, pairs: &[StanleyPair]) {
    for p in pairs {
        let _ = writeln!(out, "{p}");
    }
}

type Rendered = (String, String);

pub fn execute(cmd: &Command) -> Result<Rendered> {
    match cmd {
        Command::Variety { variety, json: as_json } => variety_verb(variety, *as_json),
        Command::Stanley { variety, assume_complete, vars, ideal, choices, nice, tree, json: as_json } => {
            stanley_verb(variety.as_deref(), *assume_complete, *vars, ideal, choices, *nice, *tree, *as_json)
        }
        Command::Hilbert { variety, ring, ideal, face, at, json: as_json } => {
            hilbert_verb(variety, *ring, ideal.as_deref(), face.as_deref(), at.as_deref(), *as_json)
        }
        Command::Regularity { variety, ideal, poly, assume_baseline, json: as_json } => {
            regularity_verb(variety, ideal.as_deref(), poly.as_deref(), assume_baseline, *as_json)
        }
        Command::Enumerate { variety, poly, priority, budget, json: as_json } => {
            enumerate_verb(variety, poly, priority.as_deref(), *budget, *as_json)
        }
        Command::Gotzmann { poly, vars, variety, assume_complete, json: as_json } => {
            gotzmann_verb(poly, *vars, variety.as_deref(), *assume_complete, *as_json)
        }
        Command::Lex { poly, vars, json: as_json } => lex_verb(poly, *vars, *as_json),
        Command::Degset { variety, poly, seed, no_bulk, json: as_json } => degset_verb(variety, poly, *seed, !*no_bulk, *as_json),
    }
}

fn variety_verb(arg: &VarietyArg, as_json: bool) -> Result<Rendered> {
    let x = load_variety(&arg.variety, arg.assume_complete)?;
    let report = VarietyReport {
        n: x.n(),
        d: x.d(),
        r: x.r(),
        file: VarietyFile::from_variety(&x),
        nef_rays: x.nef_cone().rays().to_vec(),
        c: x.find_c()?.0,
        faces: x.faces().len(),
        orthant_change: x.positive_orthant_change()?.matrix,
    };
    if as_json {
        return Ok((json(&report), String::new()));
    }
    let mut out = String::new();
    let _ = writeln!(out, "n={} d={} r={}", report.n, report.d, report.r);
    let _ = writeln!(out, "grading:");
    for row in x.grading() {
        let _ = writeln!(out, "  [{}]", list(row));
    }
    let rays: Vec<String> = report.nef_rays.iter().map(|r| format!("({})", list(r))).collect();
    let _ = writeln!(out, "nef cone rays: {}", rays.join(" "));
    let _ = writeln!(out, "c = ({})", list(&report.c));
    let _ = writeln!(out, "faces in Delta: {}", report.faces);
    Ok((out, String::new()))
}

#[allow(clippy::too_many_arguments)]
fn stanley_verb(
    variety: Option<&str>,
    assume_complete: bool,
    vars: Option<usize>,
    ideal: &str,
    choices: &[usize],
    nice: bool,
    show_tree: bool,
    as_json: bool,
) -> Result<Rendered> {
    let x = variety.map(|v| load_variety(v, assume_complete)).transpose()?;
    let n = match (&x, vars) {
        (Some(x), Some(v)) if v != x.n() => {
            return Err(Error::DimensionMismatch(format!("--vars {v} but the variety has {} variables", x.n())))
        }
        (Some(x), _) => x.n(),
        (None, Some(v)) => v,
        (None, None) => return Err(Error::Parse("give --variety or --vars".into())),
    };
    let i = load_ideal(ideal, n)?;
    let tree = if nice {
        let x = x.as_ref().ok_or_else(|| Error::Parse("--nice needs --variety".into()))?;
        let order = graded_total_order(x, &GradedOrder::glex(x.r()))?;
        stanley_decompose(&i, &mut nice_strategy(order.faces()))?
    } else if !choices.is_empty() {
        if choices.iter().any(|&c| c == 0 || c > n) {
            return Err(Error::Parse(format!("choices must lie in 1..={n}")));
        }
        stanley_decompose(&i, &mut ScriptedChoice::from_one_based(choices))?
    } else {
        stanley_decompose(&i, &mut DefaultChoice)?
    };
    let pairs = tree.filtration();
    let verified = verify_stanley(&i, &pairs, VerifyMode::Filtration, None).ok;
    let report =
        StanleyReport { filtration: FiltrationFile::new(&i, &pairs), choices: tree.choices().iter().map(|c| c + 1).collect(), verified };
    if as_json {
        return Ok((json(&report), String::new()));
    }
    let mut out = String::new();
    if show_tree {
        let _ = write!(out, "{tree}");
    }
    render_pairs(&mut out, &pairs);
    Ok((out, format!("{} pairs, filtration verified: {verified}\n", pairs.len())))
}

fn hilbert_verb(
    arg: &VarietyArg,
    ring: bool,
    ideal: Option<&str>,
    face: Option<&[usize]>,
    at: Option<&[i64]>,
    as_json: bool,
) -> Result<Rendered> {
    let x = load_variety(&arg.variety, arg.assume_complete)?;
    let n = x.n();
    let (poly, quotient) = match (ring, ideal, face) {
        (_, Some(text), _) => {
            let i = load_ideal(text, n)?;
            (quotient_hilbert_polynomial(&x, &i)?, i)
        }
        (_, None, Some(f)) => {
            if f.iter().any(|&i| i == 0 || i > n) {
                return Err(Error::Parse(format!("face indices must lie in 1..={n}")));
            }
            let sigma = Face::from_one_based(f.iter().copied());
            (face_hilbert_polynomial(&x, sigma)?, MonomialIdeal::prime(n, sigma.complement(n)))
        }
        _ => (ring_hilbert_polynomial(&x)?, MonomialIdeal::zero(n)),
    };
    let value = match at {
        Some(t) if t.len() != x.r() => {
            return Err(Error::DimensionMismatch(format!("--at has {} entries, the grading has rank {}", t.len(), x.r())))
        }
        Some(t) => Some(hilbert_function(&x, &quotient, &DegreeVector(t.to_vec()))?),
        None => None,
    };
    let report = HilbertReport { polynomial: poly.to_string(), at: at.map(|t| t.to_vec()), value };
    if as_json {
        return Ok((json(&report), String::new()));
    }
    let mut out = format!("{}\n", report.polynomial);
    if let (Some(t), Some(v)) = (at, value) {
        let _ = writeln!(out, "H({}) = {v}", list(t));
    }
    Ok((out, String::new()))
}

fn regularity_verb(arg: &VarietyArg, ideal: Option<&str>, poly: Option<&str>, baseline: &str, as_json: bool) -> Result<Rendered> {
    let x = load_variety(&arg.variety, arg.assume_complete)?;
    let assume = parse_assumption(&file_or_inline(baseline)?, &x)?;
    let report = if let Some(text) = ideal {
        let i = load_ideal(text, x.n())?;
        let order = graded_total_order(&x, &GradedOrder::glex(x.r()))?;
        let pairs = stanley_decompose(&i, &mut nice_strategy(order.faces()))?.filtration();
        let region = reg_bound_from_filtration(&x, &i, &pairs, &assume)?;
        RegularityReport {
            bound: UpsetFile::new(&region, &assume)?,
            gotzmann_number: None,
            c: None,
            filtration: Some(FiltrationFile::new(&i, &pairs)),
        }
    } else {
        let p = MultiPoly::parse(poly.unwrap_or_default(), x.r())?;
        let b = reg_bound_from_polynomial(&x, &p, &assume)?;
        RegularityReport {
            bound: UpsetFile::new(&b.region, &assume)?,
            gotzmann_number: Some(b.gotzmann_number),
            c: Some(b.c.0),
            filtration: None,
        }
    };
    if as_json {
        return Ok((json(&report), String::new()));
    }
    let mut out = String::new();
    if let (Some(m), Some(c)) = (report.gotzmann_number, &report.c) {
        let _ = writeln!(out, "gotzmann={m} c=({})", list(c));
    }
    let gens: Vec<String> = report.bound.generators.iter().map(|g| format!("({})", list(g))).collect();
    let _ = writeln!(out, "reg contains {{{}}} + K", gens.join(","));
    let _ = writeln!(out, "assumed baselines: {}", report.bound.assumed_baselines);
    Ok((out, String::new()))
}

fn enumerate_verb(arg: &VarietyArg, poly: &str, priority: Option<&[usize]>, budget: usize, as_json: bool) -> Result<Rendered> {
    let x = load_variety(&arg.variety, arg.assume_complete)?;
    let p = MultiPoly::parse(poly, x.r())?;
    let order = match priority {
        Some(pr) => {
            if pr.iter().any(|&i| i == 0) {
                return Err(Error::Parse("priority entries are 1-based".into()));
            }
            Some(GradedOrder::with_priority(pr.iter().map(|i| i - 1).collect())?)
        }
        None => None,
    };
    let e = enumerate_saturated_ideals_with(&x, &p, &EnumerateOptions { order, node_budget: budget })?;
    let summary =
        format!("count={} gotzmann={}\n", e.ideals.len(), e.gotzmann_number.map_or_else(|| "none".to_string(), |m| m.to_string()));
    if as_json {
        let files: Vec<FiltrationFile> = e.ideals.iter().map(|f| FiltrationFile::new(&f.ideal, &f.witness)).collect();
        return Ok((json(&files), summary));
    }
    let mut out = String::new();
    for (k, f) in e.ideals.iter().enumerate() {
        let pairs: Vec<String> = f.witness.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(out, "{:>3}. {}  {}", k + 1, f.ideal, pairs.join(" "));
    }
    out.push_str(&summary);
    Ok((out, String::new()))
}

fn gotzmann_verb(poly: &str, vars: Option<usize>, variety: Option<&str>, assume_complete: bool, as_json: bool) -> Result<Rendered> {
    let x = variety.map(|v| load_variety(v, assume_complete)).transpose()?;
    let r = x.as_ref().map_or(1, |x| x.r());
    let p = MultiPoly::parse(poly, r)?;
    let (m, q, representation) = if r == 1 {
        let rep = gotzmann_representation(&p)?;
        (rep.len(), rep.q.clone(), rep.to_string())
    } else {
        (0, Vec::new(), String::new())
    };
    let lex = match vars {
        Some(n) if r == 1 => {
            let (i, pairs) = lex_ideal(&p, n)?;
            Some(FiltrationFile::new(&i, &pairs))
        }
        Some(_) => return Err(Error::DimensionMismatch("--vars applies to polynomials in one variable".into())),
        None => None,
    };
    let (multigraded, upper_bound) = match &x {
        Some(x) => (Some(gotzmann_number(x, &p)?), Some(gotzmann_upper_bound(x, &p)?)),
        None => (None, None),
    };
    let report =
        GotzmannReport { polynomial: p.to_string(), m: multigraded.unwrap_or(m), q, representation, lex, multigraded, upper_bound };
    if as_json {
        return Ok((json(&report), String::new()));
    }
    let mut out = String::new();
    let _ = writeln!(out, "m = {}", report.m);
    if !report.q.is_empty() {
        let q: Vec<String> = report.q.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "q = ({})", q.join(","));
        let _ = writeln!(out, "P = {}", report.representation);
    }
    if let Some(b) = report.upper_bound {
        let _ = writeln!(out, "upper bound = {b}");
    }
    if let (Some(n), Some(file)) = (vars, &report.lex) {
        let i = MonomialIdeal::from_exponents(n, file.generators.clone())?;
        let _ = writeln!(out, "lex ideal = {i}");
        render_pairs(&mut out, &file.to_pairs(n)?);
    }
    Ok((out, String::new()))
}

fn lex_verb(poly: &str, n: usize, as_json: bool) -> Result<Rendered> {
    let p = MultiPoly::parse(poly, 1)?;
    let rep = gotzmann_representation(&p)?;
    let form = LexIdealForm::from_representation(&rep, n)?;
    let (i, pairs) = lex_ideal(&p, n)?;
    let report = LexReport { n, l: form.l, b: form.b.clone(), filtration: FiltrationFile::new(&i, &pairs) };
    if as_json {
        return Ok((json(&report), String::new()));
    }
    let b: Vec<String> = form.b.iter().map(|v| v.to_string()).collect();
    let mut out = format!("l = {}  b = ({})\n{i}\n", form.l, b.join(","));
    render_pairs(&mut out, &pairs);
    Ok((out, String::new()))
}

fn degset_verb(arg: &VarietyArg, poly: &str, seed: u64, bulk: bool, as_json: bool) -> Result<Rendered> {
    let x = load_variety(&arg.variety, arg.assume_complete)?;
    let p = MultiPoly::parse(poly, x.r())?;
    let opts = DegreeSetOptions { seed, bulk_points: bulk, ..DegreeSetOptions::default() };
    let ds = degree_set_with(&x, &p, &opts)?;
    if as_json {
        return Ok((json(&ds), String::new()));
    }
    let fmt_set = |v: &[DegreeVector]| v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ");
    let mut out = String::new();
    let _ = writeln!(out, "m = {}  c = {}  k = {}  seed = {}", ds.gotzmann_number, ds.c, ds.k, ds.seed);
    for (j, round) in ds.rounds.iter().enumerate() {
        let _ = write!(out, "round {}: D = {{{}}}  ideals = {}  failing = {}", j + 1, fmt_set(&round.degrees), round.ideals, round.failing);
        if !round.witnesses.is_empty() {
            let _ = write!(out, "  witnesses = {{{}}}", fmt_set(&round.witnesses));
        }
        if let Some(base) = &round.bulk_base {
            let _ = write!(out, "  general points in {base} + K: {{{}}}", fmt_set(&round.bulk));
        }
        out.push('\n');
    }
    let _ = writeln!(out, "D = {{{}}}", fmt_set(&ds.degrees));
    let verdict = if ds.check.passed() { "passed" } else { "FAILED" };
    let _ = writeln!(out, "check: {verdict} ({} saturated ideals, {} ideals generated in D)", ds.check.saturated_ideals, ds.ideals.len());
    Ok((out, String::new()))
}
