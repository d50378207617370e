use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qeclab::channels::{self, Distribution};
use qeclab::linalg::TOL_INT;
use qeclab::codes::{self, CodeJson};
use qeclab::io::read_phase_function;
use qeclab::projrep::RepJson;
use qeclab::reproduce::{self, Reproduction};
use qeclab::search;
use qeclab::{Caps, CodeReport, CodeSpace, Error, ModelSpec, ProjectiveErrorModel, ProjectiveRep, Subgroup};

#[derive(Parser)]
#[command(name = "qeclab", version, about = "Codes from projective representations of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalog model and summarize it.
    Model {
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Construct a code from a subgroup.
    Code {
        kind: CodeKind,
        model: String,
        /// Comma-separated generator indices; empty for the trivial subgroup.
        #[arg(long, allow_hyphen_values = true)]
        subgroup: String,
        /// Phase file (weak and stab).
        #[arg(long)]
        phase: Option<String>,
        /// Representation file for the subgroup (clifford).
        #[arg(long)]
        rho: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Full classification report of a code.
    Classify {
        model: String,
        #[arg(long)]
        code: String,
    },
    /// Detectable elements of a code with their scalars.
    Detect {
        model: String,
        #[arg(long)]
        code: String,
    },
    /// Knill-Laflamme test and recovery for a group-generated channel.
    Correct {
        model: String,
        #[arg(long)]
        code: String,
        /// `uniform`, `point:<x>`, or a JSON file with one weight per element.
        #[arg(long, default_value = "uniform")]
        dist: String,
        /// Write the recovery channel as JSON to this file.
        #[arg(long)]
        recovery: Option<String>,
    },
    /// Character tables.
    Table { name: TableName },
    /// Run a worked example and check its claimed properties.
    Reproduce {
        example: Example,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Also print the code report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Enumerate codes of a model.
    Search {
        model: String,
        /// Only report Clifford codes with |G| = |L||S| and non-normal S.
        #[arg(long)]
        q3: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CodeKind {
    Weak,
    Stab,
    Clifford,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableName {
    D4,
}

#[derive(Clone, Copy, ValueEnum)]
enum Example {
    #[value(name = "prop8.1")]
    Prop81,
    #[value(name = "prop8.2")]
    Prop82,
    #[value(name = "prop9.1")]
    Prop91,
    #[value(name = "prod-example")]
    ProdExample,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSpec(_)
            | Error::CapExceeded { .. }
            | Error::ElementOutOfRange(..)
            | Error::BadDistribution(_)
            | Error::InvalidCode(_)
            | Error::DimensionMismatch { .. }
            | Error::Json(_)
            | Error::Io(_) => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    run(std::env::args_os())
}

fn run<I, T>(argv: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let caps = Caps::from_env();
    let mut out = io::stdout().lock();
    match dispatch(cli.command, &caps, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            let _ = out.flush();
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command, caps: &Caps, out: &mut impl Write) -> Outcome {
    match command {
        Command::Model { spec, json } => model_cmd(&spec, json, caps, out),
        Command::Code { kind, model, subgroup, phase, rho, json } => {
            let m = build_model(&model, caps)?;
            let h = parse_subgroup(&m, &subgroup)?;
            let w = construct(&m, kind, &h, phase.as_deref(), rho.as_deref(), caps)?;
            print_code(&w, json, out)
        }
        Command::Classify { model, code } => {
            let (m, w) = model_and_code(&model, &code, caps)?;
            let r = codes::classify(&m, &w, caps)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&r).map_err(Error::from)?)?;
            Ok(())
        }
        Command::Detect { model, code } => {
            let (m, w) = model_and_code(&model, &code, caps)?;
            let g = m.group();
            writeln!(out, "{:>6} {:>12} {:>12}  name", "x", "re", "im")?;
            for (x, c) in codes::detectable_set(&m, &w)? {
                writeln!(out, "{x:>6} {:>12.6} {:>12.6}  {}", c.re, c.im, g.element_name(x))?;
            }
            Ok(())
        }
        Command::Correct { model, code, dist, recovery } => {
            let (m, w) = model_and_code(&model, &code, caps)?;
            correct_cmd(&m, &w, &dist, recovery.as_deref(), out)
        }
        Command::Table { name: TableName::D4 } => {
            let rows = reproduce::d4_table(caps)?;
            write!(out, "{}", reproduce::format_d4_table(&rows))?;
            report(reproduce::d4_check(caps)?, out)
        }
        Command::Reproduce { example, n, json } => {
            let (rep, r) = match example {
                Example::Prop81 => reproduce::prop_c2_x_d2n(n, caps)?,
                Example::Prop82 => reproduce::prop_odd_family(n, caps)?,
                Example::Prop91 => reproduce::prop_dicke(n, caps)?,
                Example::ProdExample => reproduce::prod_example(caps)?,
            };
            if json {
                writeln!(out, "{}", serde_json::to_string(&r).map_err(Error::from)?)?;
            }
            report(rep, out)
        }
        Command::Search { model, q3 } => {
            let m = build_model(&model, caps)?;
            let reports = if q3 { search::q3_probe(&m, caps)? } else { search_all(&m, caps)? };
            search::write_json_lines(out, &reports)?;
            writeln!(out)?;
            write!(out, "{}", search::summary_table(&reports))?;
            Ok(())
        }
    }
}

fn report(rep: Reproduction, out: &mut impl Write) -> Outcome {
    write!(out, "{rep}")?;
    if rep.passed() {
        Ok(())
    } else {
        let failed: Vec<&str> = rep.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
        Err(Failure::Verification(failed.join(", ")))
    }
}

fn build_model(spec: &str, caps: &Caps) -> Result<ProjectiveErrorModel, Failure> {
    Ok(spec.parse::<ModelSpec>()?.build(caps)?)
}

fn model_cmd(spec: &str, json: bool, caps: &Caps, out: &mut impl Write) -> Outcome {
    let m = build_model(spec, caps)?;
    let rep = m.rep();
    if json {
        let bundle = json!({
            "spec": spec,
            "group": m.group().to_json(),
            "rep": rep.to_json(),
            "cocycle": m.cocycle().to_json(),
        });
        writeln!(out, "{bundle}")?;
        return Ok(());
    }
    let yn = |b: bool| if b { "yes" } else { "no" };
    writeln!(out, "model: {spec}")?;
    writeln!(out, "group: {}", m.group().label())?;
    writeln!(out, "order: {}", m.group().order())?;
    writeln!(out, "dim: {}", m.dim())?;
    writeln!(out, "cocycle trivial: {}", yn(m.cocycle().is_trivial()))?;
    writeln!(out, "cocycle denominator: {}", m.cocycle().common_denominator())?;
    writeln!(out, "irreducible: {}", yn(rep.is_irreducible()))?;
    writeln!(out, "projectively faithful: {}", yn(rep.is_projectively_faithful()))?;
    writeln!(out, "central type: {}", yn(m.is_central_type()))?;
    Ok(())
}

fn parse_subgroup(m: &ProjectiveErrorModel, text: &str) -> Result<Subgroup, Failure> {
    let gens = parse_indices(text)?;
    Ok(m.group().subgroup_generated(&gens)?)
}

fn parse_indices(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Failure::Usage(format!("bad element index `{s}`"))))
        .collect()
}

fn construct(
    m: &ProjectiveErrorModel,
    kind: CodeKind,
    h: &Subgroup,
    phase: Option<&str>,
    rho: Option<&str>,
    caps: &Caps,
) -> Result<CodeSpace, Failure> {
    match kind {
        CodeKind::Weak | CodeKind::Stab => {
            let f = match phase {
                Some(path) => read_phase_function(&fs::read_to_string(path)?, h.clone())?,
                None => codes::existence_phase(m, h)?
                    .ok_or_else(|| Failure::Verification("no phase function gives a nonzero code".into()))?,
            };
            let w = match kind {
                CodeKind::Weak => codes::weak_stabilizer_code(m, h, &f)?,
                _ => codes::stabilizer_code(m, h, &f)?,
            };
            w.ok_or_else(|| Failure::Verification("the code is zero".into()))
        }
        CodeKind::Clifford => match rho {
            Some(path) => {
                let json: RepJson = serde_json::from_str(&fs::read_to_string(path)?).map_err(Error::from)?;
                let rho = ProjectiveRep::from_json(h.as_group(m.group()), &json)?;
                Ok(codes::clifford_code(m, h, &rho)?)
            }
            None => search::clifford_codes(m, caps)?
                .into_iter()
                .find(|hit| hit.l == *h)
                .map(|hit| hit.code)
                .ok_or_else(|| Failure::Verification("no Clifford code with this subgroup as L".into())),
        },
    }
}

/// `--code` takes a code file or one of `family`, `whole`, `dicke:<n>`,
/// `weak:<gens>`, `stab:<gens>`, `clifford:<gens>`.
fn model_and_code(model: &str, code: &str, caps: &Caps) -> Result<(ProjectiveErrorModel, CodeSpace), Failure> {
    let spec: ModelSpec = model.parse()?;
    let m = spec.build(caps)?;
    if Path::new(code).is_file() {
        let json: CodeJson = serde_json::from_str(&fs::read_to_string(code)?).map_err(Error::from)?;
        let w = CodeSpace::from_json(&json)?;
        if w.ambient_dim() != m.dim() {
            return Err(Error::DimensionMismatch { expected: m.dim(), got: w.ambient_dim() }.into());
        }
        return Ok((m, w));
    }
    let (head, arg) = code.split_once(':').unwrap_or((code, ""));
    let w = match head {
        "family" => {
            let fam = spec
                .family(caps)?
                .ok_or_else(|| Failure::Usage(format!("`{model}` has no family code")))?;
            codes::clifford_code(&m, &fam.l, &fam.rho)?
        }
        "whole" => CodeSpace::whole(m.dim()),
        "dicke" => {
            let n: usize = arg.parse().map_err(|_| Failure::Usage(format!("bad code `{code}`")))?;
            let w = codes::dicke_code(n)?;
            if w.ambient_dim() != m.dim() {
                return Err(Error::DimensionMismatch { expected: m.dim(), got: w.ambient_dim() }.into());
            }
            w
        }
        "weak" | "stab" | "clifford" => {
            let kind = match head {
                "weak" => CodeKind::Weak,
                "stab" => CodeKind::Stab,
                _ => CodeKind::Clifford,
            };
            let h = parse_subgroup(&m, arg)?;
            construct(&m, kind, &h, None, None, caps)?
        }
        _ => return Err(Failure::Usage(format!("`{code}` is neither a file nor a code construction"))),
    };
    Ok((m, w))
}

fn print_code(w: &CodeSpace, json: bool, out: &mut impl Write) -> Outcome {
    if json {
        writeln!(out, "{}", serde_json::to_string(&w.to_json()).map_err(Error::from)?)?;
        return Ok(());
    }
    writeln!(out, "dim {} in {}", w.dim(), w.ambient_dim())?;
    let b = w.basis();
    for i in 0..b.nrows() {
        let row: Vec<String> = (0..b.ncols())
            .map(|j| {
                let z = b[(i, j)];
                let clean = |x: f64| if x.abs() < 5e-6 { 0.0 } else { x };
                format!("{:>9.5}{:+.5}i", clean(z.re), clean(z.im))
            })
            .collect();
        writeln!(out, "{}", row.join("  "))?;
    }
    Ok(())
}

fn correct_cmd(m: &ProjectiveErrorModel, w: &CodeSpace, dist: &str, recovery: Option<&str>, out: &mut impl Write) -> Outcome {
    let dist = match dist.parse::<Distribution>() {
        Ok(d) => d,
        Err(_) if Path::new(dist).is_file() => {
            Distribution::Explicit(serde_json::from_str(&fs::read_to_string(dist)?).map_err(Error::from)?)
        }
        Err(e) => return Err(e.into()),
    };
    let p = dist.probabilities(m.group())?;
    let n = channels::channel_from_model(m, &p)?;
    writeln!(out, "kraus operators: {}", n.kraus().len())?;
    if let Some((i, j)) = channels::kl_witness(w, &n)? {
        writeln!(out, "correctable: no")?;
        return Err(Failure::Verification(format!("Knill-Laflamme fails for Kraus pair ({i}, {j})")));
    }
    writeln!(out, "correctable: yes")?;
    let r = channels::build_recovery(w, &n)?;
    let dev = channels::verify_recovery(w, &n, &r)?;
    writeln!(out, "recovery operators: {}", r.kraus().len())?;
    writeln!(out, "max deviation: {dev:.3e}")?;
    if let Some(path) = recovery {
        fs::write(path, serde_json::to_string(&r.to_json()).map_err(Error::from)?)?;
    }
    if dev < TOL_INT {
        Ok(())
    } else {
        Err(Failure::Verification(format!("recovery deviation {dev:.3e}")))
    }
}

fn search_all(m: &ProjectiveErrorModel, caps: &Caps) -> Result<Vec<CodeReport>, Failure> {
    let mut found: Vec<CodeSpace> = Vec::new();
    let mut reports = Vec::new();
    for code in search::enumerate_weak_stabilizer_codes(m, caps)? {
        if found.iter().any(|w| w.same_space(&code.code)) {
            continue;
        }
        reports.push(codes::classify(m, &code.code, caps)?);
        found.push(code.code);
    }
    for hit in search::clifford_codes(m, caps)? {
        if !found.iter().any(|w| w.same_space(&hit.code)) {
            found.push(hit.code);
            reports.push(hit.report);
        }
    }
    Ok(reports)
}
