//! Command-line front end: instance loading, command dispatch and report
//! rendering.

pub mod instance;
pub mod make;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::duoidal::{
    braided_duoidal, check_bimonoid, check_duoidal, galois_map_kprime, tau_splitting,
};
use crate::entwining::{
    check_entwining, entwining_from_bimonoid, entwining_from_comodule_monad, perturbation_sweep,
    rebuild_entwining, EntwiningData,
};
use crate::error::{Error, Result};
use crate::hopfmod::{
    check_antipode, check_hopf_module, galois_map_beta, galois_map_generalized,
    verify_fundamental_theorem,
};
use crate::report::{Check, Report, Witness};
use crate::structures::{check_comodule_algebra, check_comonoid, check_monoid};

use instance::{load_instance, max_dim, to_json, InstanceFile, Loaded};
use make::{make_instance, parse_table, CoactionKind, Family, MakeOptions};

pub const PERTURBATIONS: usize = 50;
pub const DEFAULT_SAMPLES: [usize; 3] = [1, 2, 3];
pub const DUOIDAL_PROBES: [usize; 2] = [1, 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    CheckMonoid,
    CheckComonoid,
    CheckBimonoid,
    CheckComoduleAlgebra,
    CheckEntwining,
    CheckHopfModule,
    DeriveEntwining,
    Galois,
    GaloisGeneralized,
    GaloisDual,
    FundamentalTheorem,
    CheckDuoidal,
    TauSplit,
}

impl Command {
    pub const ALL: [Command; 13] = [
        Command::CheckMonoid,
        Command::CheckComonoid,
        Command::CheckBimonoid,
        Command::CheckComoduleAlgebra,
        Command::CheckEntwining,
        Command::CheckHopfModule,
        Command::DeriveEntwining,
        Command::Galois,
        Command::GaloisGeneralized,
        Command::GaloisDual,
        Command::FundamentalTheorem,
        Command::CheckDuoidal,
        Command::TauSplit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::CheckMonoid => "check-monoid",
            Command::CheckComonoid => "check-comonoid",
            Command::CheckBimonoid => "check-bimonoid",
            Command::CheckComoduleAlgebra => "check-comodule-algebra",
            Command::CheckEntwining => "check-entwining",
            Command::CheckHopfModule => "check-hopf-module",
            Command::DeriveEntwining => "derive-entwining",
            Command::Galois => "galois",
            Command::GaloisGeneralized => "galois-generalized",
            Command::GaloisDual => "galois-dual",
            Command::FundamentalTheorem => "fundamental-theorem",
            Command::CheckDuoidal => "check-duoidal",
            Command::TauSplit => "tau-split",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub samples: Option<Vec<usize>>,
    pub seed: u64,
    /// Role to run on; the first role of a fitting kind when absent.
    pub role: Option<String>,
}

fn pick<'a>(file: &'a InstanceFile, flags: &'a Flags, kinds: &[&str]) -> Result<&'a str> {
    if let Some(r) = &flags.role {
        return Ok(r);
    }
    kinds
        .iter()
        .find_map(|k| file.roles_of(k).first().copied())
        .ok_or_else(|| Error::Input(format!("instance declares no {} role", kinds.join(" or "))))
}

fn entwining_report(id: &str, ed: &EntwiningData, seed: u64) -> Result<Report> {
    let mut r = Report::new(id);
    r.push(
        Check::info("lambda0", format!("{} convention", ed.side.as_str()))
            .with_witness(Witness::new("lambda0", &ed.lambda0)),
    );
    r.absorb("", check_entwining(ed)?);
    if r.passed() {
        let rebuilt = rebuild_entwining(ed)?;
        r.equation(
            "lambda0 rebuilt from the lifted comonad",
            &rebuilt,
            &ed.lambda0,
        )?;
        r.push(perturbation_sweep(ed, PERTURBATIONS, seed)?.to_check());
    }
    Ok(r)
}

/// Runs `cmd` on a loaded instance.
pub fn dispatch(cmd: Command, loaded: &Loaded, flags: &Flags) -> Result<Report> {
    let file = &loaded.file;
    let p = file.field_p;
    let mut r = Report::new(cmd.name());
    match cmd {
        Command::CheckMonoid => {
            let role = pick(file, flags, &["monoid", "bimonoid", "comodule_algebra"])?;
            r.absorb("", check_monoid(&file.monoid(role)?)?);
        }
        Command::CheckComonoid => {
            let role = pick(file, flags, &["comonoid", "bimonoid"])?;
            r.absorb("", check_comonoid(&file.comonoid(role)?)?);
        }
        Command::CheckBimonoid => {
            let role = pick(file, flags, &["bimonoid"])?;
            r.absorb(
                "",
                check_bimonoid(&file.bimonoid(role)?, &braided_duoidal(p)?)?,
            );
        }
        Command::CheckComoduleAlgebra => {
            let role = pick(file, flags, &["comodule_algebra"])?;
            let (b, c) = file.comodule_algebra(role)?;
            r.absorb("", check_comodule_algebra(&b)?);
            r.absorb("coalgebra C", check_comonoid(&c)?);
        }
        Command::CheckEntwining => {
            let role = pick(file, flags, &["entwining", "bimonoid"])?;
            let ed = match file.roles.get(role).map(|x| x.kind()) {
                Some("entwining") => file.entwining(role)?,
                _ => {
                    r.push(Check::info(
                        "source",
                        format!("entwining induced by bimonoid '{role}'"),
                    ));
                    entwining_from_bimonoid(&file.bimonoid(role)?)?
                }
            };
            r.absorb("", entwining_report(cmd.name(), &ed, flags.seed)?);
        }
        Command::CheckHopfModule => {
            let roles: Vec<&str> = match &flags.role {
                Some(role) => vec![role.as_str()],
                None => file.roles_of("hopf_module"),
            };
            if roles.is_empty() {
                return Err(Error::Input("instance declares no hopf_module role".into()));
            }
            for role in roles {
                let (hm, ed) = file.hopf_module(role)?;
                r.absorb(role, check_hopf_module(&hm, &ed)?);
            }
        }
        Command::DeriveEntwining => {
            let bimonoids = file.roles_of("bimonoid");
            let algebras = file.roles_of("comodule_algebra");
            if bimonoids.is_empty() && algebras.is_empty() {
                return Err(Error::Input(
                    "instance declares no bimonoid or comodule_algebra role".into(),
                ));
            }
            for role in bimonoids {
                let ed = entwining_from_bimonoid(&file.bimonoid(role)?)?;
                r.absorb(role, entwining_report("bimonoid", &ed, flags.seed)?);
            }
            for role in algebras {
                let (b, c) = file.comodule_algebra(role)?;
                let ed = entwining_from_comodule_monad(&b, &c)?;
                r.absorb(role, entwining_report("comodule monad", &ed, flags.seed)?);
            }
        }
        Command::Galois => {
            let role = pick(file, flags, &["bimonoid"])?;
            let a = file.bimonoid(role)?;
            let labels = file
                .object_of(role)
                .map(|o| file.basis_labels(o))
                .unwrap_or_default();
            let g = galois_map_beta(&a)?;
            r.absorb("", g.to_report("galois", &labels));
            if let Some(s) = &g.antipode {
                r.absorb("antipode", check_antipode(&a, s)?);
            }
        }
        Command::GaloisGeneralized => {
            let role = pick(file, flags, &["comodule_algebra"])?;
            let (b, c) = file.comodule_algebra(role)?;
            r.absorb("", galois_map_generalized(&b, &c)?.to_report("can", &[]));
        }
        Command::GaloisDual => {
            let role = pick(file, flags, &["bimonoid"])?;
            let a = file.bimonoid(role)?;
            let dual = galois_map_kprime(&a, &braided_duoidal(p)?)?;
            let beta = galois_map_beta(&a)?;
            r.absorb("", dual.to_report("beta'", &[]));
            r.push(
                Check::flag(
                    "beta' invertible iff beta invertible",
                    dual.invertible == beta.invertible,
                )
                .with_detail(format!(
                    "beta rank {}/{}",
                    beta.rank,
                    beta.base.cols()
                )),
            );
        }
        Command::FundamentalTheorem => {
            let role = pick(file, flags, &["bimonoid"])?;
            let a = file.bimonoid(role)?;
            let samples = flags
                .samples
                .clone()
                .unwrap_or_else(|| DEFAULT_SAMPLES.to_vec());
            let cap = max_dim()?;
            if let Some(&d) = samples.iter().find(|&&d| d * a.dim() > cap) {
                return Err(Error::Input(format!(
                    "sample dimension {d} exceeds the cap {cap} after tensoring"
                )));
            }
            let mut extras = Vec::new();
            for (i, m) in file.modules_over(role).into_iter().enumerate() {
                r.push(Check::info(
                    format!("extra[{i}]"),
                    format!("hopf module role '{m}'"),
                ));
                extras.push(file.hopf_module(m)?.0);
            }
            r.absorb("", verify_fundamental_theorem(&a, &samples, &extras)?);
        }
        Command::CheckDuoidal => {
            r.absorb("", check_duoidal(&braided_duoidal(p)?, &DUOIDAL_PROBES)?);
        }
        Command::TauSplit => {
            let ctx = braided_duoidal(p)?;
            r.absorb("", tau_splitting(&ctx).to_report(&ctx));
        }
    }
    r.verify_witnesses().map_err(Error::Precondition)?;
    Ok(r)
}

#[derive(Serialize)]
struct Envelope<'a> {
    instance: &'a str,
    command: &'a str,
    exit_code: i32,
    #[serde(flatten)]
    report: &'a Report,
}

pub fn render_json(instance: &str, cmd: Command, report: &Report) -> String {
    let env = Envelope {
        instance,
        command: cmd.name(),
        exit_code: report.exit_code(),
        report,
    };
    let mut s = serde_json::to_string_pretty(&env).expect("report serializes");
    s.push('\n');
    s
}

fn matrix_lines(w: &Witness) -> Vec<String> {
    let width = w
        .entries
        .iter()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    (0..w.rows)
        .map(|i| {
            let row: Vec<String> = (0..w.cols)
                .map(|j| format!("{:>width$}", w.entries[i * w.cols + j]))
                .collect();
            format!("[{}]", row.join(" "))
        })
        .collect()
}

pub fn render_human(instance: &str, cmd: Command, report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} on {instance}", cmd.name());
    if !report.conventions.is_empty() {
        let _ = writeln!(out, "conventions:");
        for c in &report.conventions {
            let _ = writeln!(out, "  {c}");
        }
    }
    let name_w = report
        .checks
        .iter()
        .map(|c| c.name.chars().count())
        .max()
        .unwrap_or(5)
        .max(5);
    let _ = writeln!(out, "\n{:<name_w$}  VERDICT  DETAIL", "CHECK");
    for c in &report.checks {
        let mut detail = c.detail.clone().unwrap_or_default();
        if let Some([i, j]) = c.counterexample {
            if !detail.is_empty() {
                detail.push_str("; ");
            }
            let _ = write!(detail, "first difference at ({i}, {j})");
        }
        let pad = name_w - c.name.chars().count();
        let _ = writeln!(
            out,
            "{}{}  {:<7}  {detail}",
            c.name,
            " ".repeat(pad),
            c.verdict.as_str()
        );
    }
    let with_witnesses: Vec<&Check> = report
        .checks
        .iter()
        .filter(|c| !c.witnesses.is_empty())
        .collect();
    if !with_witnesses.is_empty() {
        let _ = writeln!(out, "\nwitnesses:");
        for c in with_witnesses {
            for w in &c.witnesses {
                let _ = writeln!(out, "  {} / {} ({}x{}):", c.name, w.name, w.rows, w.cols);
                for line in matrix_lines(w) {
                    let _ = writeln!(out, "    {line}");
                }
            }
        }
    }
    let code = report.exit_code();
    let _ = writeln!(
        out,
        "\nresult: {} (exit {code})",
        if code == 0 { "PASS" } else { "FAIL" }
    );
    out
}

#[derive(Parser, Debug)]
#[command(
    name = "entwine",
    version,
    about = "Exact checks for bimonoids, entwinings, Hopf modules and Galois maps over F_p"
)]
struct Cli {
    #[command(subcommand)]
    sub: Sub,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Instance file (JSON).
    instance: PathBuf,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
    /// Sample dimensions for fundamental-theorem.
    #[arg(long, value_delimiter = ',')]
    samples: Option<Vec<usize>>,
    /// Seed for randomized sweeps.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Role to run on.
    #[arg(long)]
    role: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FamilyArg {
    Cyclic,
    Monoid,
    Sweedler,
    Trivial,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CoactionArg {
    Regular,
    Trivial,
}

#[derive(Args, Debug)]
struct MakeArgs {
    family: FamilyArg,
    /// Field characteristic.
    #[arg(short, long)]
    p: u64,
    /// Group order for `cyclic`.
    #[arg(long)]
    order: Option<usize>,
    /// Multiplication table for `monoid`, rows separated by `;`.
    #[arg(long)]
    table: Option<String>,
    /// Index of the identity element for `monoid`.
    #[arg(long, default_value_t = 0)]
    identity: usize,
    /// Basis labels, comma separated.
    #[arg(long, value_delimiter = ',')]
    labels: Option<Vec<String>>,
    /// Add the induced entwining as a role.
    #[arg(long)]
    entwining: bool,
    /// Add the regular Hopf module.
    #[arg(long)]
    regular_module: bool,
    /// Add every one-dimensional Hopf module twisted by a character and a group-like.
    #[arg(long)]
    twisted_modules: bool,
    /// Add a comodule algebra over the bimonoid.
    #[arg(long)]
    comodule_algebra: Option<CoactionArg>,
    #[arg(long)]
    description: Option<String>,
    /// Output path; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Associativity and unit laws of a monoid.
    CheckMonoid(RunArgs),
    /// Coassociativity and counit laws of a comonoid.
    CheckComonoid(RunArgs),
    /// Bimonoid diagrams in the braided duoidal context.
    CheckBimonoid(RunArgs),
    /// Comodule-algebra axioms of a coaction.
    CheckComoduleAlgebra(RunArgs),
    /// Entwining axioms, lifting round trip and perturbation sweep.
    CheckEntwining(RunArgs),
    /// Module, comodule and compatibility axioms of Hopf modules.
    CheckHopfModule(RunArgs),
    /// Entwinings induced by bimonoids and comodule algebras.
    DeriveEntwining(RunArgs),
    /// Galois map beta, its inverse and the antipode.
    Galois(RunArgs),
    /// Canonical map of a comodule algebra.
    GaloisGeneralized(RunArgs),
    /// Galois map beta' of the comparison functor - * A.
    GaloisDual(RunArgs),
    /// Equivalence witnesses or a non-equivalence witness.
    FundamentalTheorem(RunArgs),
    /// Duoidal axioms of the braided vector-space context.
    CheckDuoidal(RunArgs),
    /// Whether tau : I -> J splits.
    TauSplit(RunArgs),
    /// Generate an instance file.
    MakeInstance(MakeArgs),
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn usage(stderr: String) -> Self {
        Outcome {
            stdout: String::new(),
            stderr,
            code: 2,
        }
    }
}

fn instance_id(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn run_command(cmd: Command, args: RunArgs) -> Outcome {
    let loaded = match load_instance(&args.instance) {
        Ok(l) => l,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    let mut stderr: String = loaded
        .warnings
        .iter()
        .map(|w| format!("warning: {w}\n"))
        .collect();
    let flags = Flags {
        samples: args.samples,
        seed: args.seed,
        role: args.role,
    };
    match dispatch(cmd, &loaded, &flags) {
        Ok(report) => {
            let id = instance_id(&args.instance);
            let stdout = if args.json {
                render_json(&id, cmd, &report)
            } else {
                render_human(&id, cmd, &report)
            };
            Outcome {
                stdout,
                stderr,
                code: report.exit_code(),
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            Outcome::usage(stderr)
        }
    }
}

fn run_make(args: MakeArgs) -> Result<Outcome> {
    let family = match args.family {
        FamilyArg::Cyclic => Family::Cyclic {
            order: args
                .order
                .ok_or_else(|| Error::Input("cyclic needs --order".into()))?,
        },
        FamilyArg::Monoid => Family::Monoid {
            table: parse_table(
                args.table
                    .as_deref()
                    .ok_or_else(|| Error::Input("monoid needs --table".into()))?,
            )?,
            identity: args.identity,
        },
        FamilyArg::Sweedler => Family::Sweedler,
        FamilyArg::Trivial => Family::Trivial,
    };
    let mut opts = MakeOptions::new(args.p, family);
    opts.labels = args.labels;
    opts.entwining = args.entwining;
    opts.regular_module = args.regular_module;
    opts.twisted_modules = args.twisted_modules;
    opts.comodule_algebra = args.comodule_algebra.map(|c| match c {
        CoactionArg::Regular => CoactionKind::Regular,
        CoactionArg::Trivial => CoactionKind::Trivial,
    });
    opts.description = args.description;
    let file = make_instance(&opts)?;
    // reject anything the loader would reject
    instance::parse_instance(&to_json(&file))?;
    let text = to_json(&file);
    match args.output {
        Some(path) => {
            std::fs::write(&path, text)
                .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?;
            Ok(Outcome {
                stdout: String::new(),
                stderr: String::new(),
                code: 0,
            })
        }
        None => Ok(Outcome {
            stdout: text,
            stderr: String::new(),
            code: 0,
        }),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome::usage(text)
            };
        }
    };
    let (cmd, args) = match cli.sub {
        Sub::MakeInstance(m) => {
            return run_make(m).unwrap_or_else(|e| Outcome::usage(format!("error: {e}\n")));
        }
        Sub::CheckMonoid(a) => (Command::CheckMonoid, a),
        Sub::CheckComonoid(a) => (Command::CheckComonoid, a),
        Sub::CheckBimonoid(a) => (Command::CheckBimonoid, a),
        Sub::CheckComoduleAlgebra(a) => (Command::CheckComoduleAlgebra, a),
        Sub::CheckEntwining(a) => (Command::CheckEntwining, a),
        Sub::CheckHopfModule(a) => (Command::CheckHopfModule, a),
        Sub::DeriveEntwining(a) => (Command::DeriveEntwining, a),
        Sub::Galois(a) => (Command::Galois, a),
        Sub::GaloisGeneralized(a) => (Command::GaloisGeneralized, a),
        Sub::GaloisDual(a) => (Command::GaloisDual, a),
        Sub::FundamentalTheorem(a) => (Command::FundamentalTheorem, a),
        Sub::CheckDuoidal(a) => (Command::CheckDuoidal, a),
        Sub::TauSplit(a) => (Command::TauSplit, a),
    };
    run_command(cmd, args)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn command_names_match_subcommands() {
        for cmd in Command::ALL {
            let out = run(["entwine", cmd.name(), "--help"]);
            assert_eq!(out.code, 0, "{}", cmd.name());
        }
    }

    #[test]
    fn unknown_command_is_usage_error() {
        assert_eq!(run(["entwine", "frobnicate", "x.json"]).code, 2);
        assert_eq!(run(["entwine", "galois", "/nonexistent.json"]).code, 2);
    }

    #[test]
    fn make_instance_to_stdout() {
        let out = run([
            "entwine",
            "make-instance",
            "cyclic",
            "-p",
            "3",
            "--order",
            "2",
        ]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let loaded = instance::parse_instance(&out.stdout).unwrap();
        assert_eq!(loaded.file.objects["A"], 2);
        assert_eq!(
            run([
                "entwine",
                "make-instance",
                "cyclic",
                "-p",
                "4",
                "--order",
                "2"
            ])
            .code,
            2
        );
    }
}
