use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use scf_hopf::characters::{LinearCharacter, MorphismCheck};
use scf_hopf::combinatorics::{enumerate_compositions, enumerate_toggle_free, IntegerComposition};
use scf_hopf::hopf::HopfContext;
use scf_hopf::io::{self as sio, Base};
use scf_hopf::nsym::{descent_class, DEFAULT_PERMUTATION_BOUND};
use scf_hopf::report::{CheckReport, Failure, Report};
use scf_hopf::scalar::int;
use scf_hopf::tensor::{BasisWord, TensorElement};
use scf_hopf::verify::{run_suite, Suite};
use scf_hopf::Error;

const MAX_COMPOSITION_N: usize = 16;
const MAX_TOGGLE_FREE_N: usize = 10;

#[derive(Parser)]
#[command(
    name = "scf-hopf",
    version,
    about = "Exact computation in supercharacter Hopf algebras"
)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Config {
    /// Base theory: the built-in two-dimensional family or a theory file.
    #[arg(long, global = true, value_enum, default_value_t = BaseKind::Twodim)]
    base: BaseKind,
    /// Order of the group for `--base twodim`.
    #[arg(long, global = true, default_value_t = 3)]
    q: u64,
    /// JSON theory file (implies `--base file`).
    #[arg(long, global = true)]
    theory_file: Option<PathBuf>,
    #[arg(long, global = true, default_value = "one")]
    iota: String,
    #[arg(long, global = true, default_value = "one")]
    alpha: String,
    #[arg(long, global = true, default_value = "one")]
    beta: String,
    #[arg(long, global = true, default_value_t = 4)]
    max_degree: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Recompute with every independent method and fail on disagreement.
    #[arg(long, global = true)]
    cross_check: bool,
    /// Adds seeded random spot checks to `verify`.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BaseKind {
    Twodim,
    File,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply, comultiply or apply the antipode to JSON elements.
    Compute {
        #[arg(value_enum)]
        action: Action,
        /// Element JSON: literal text, `@path`, or `-` for stdin.
        inputs: Vec<String>,
    },
    /// Run a verification suite through `--max-degree`.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// List combinatorial objects.
    Enumerate {
        #[arg(value_enum)]
        what: What,
        /// Size, for compositions and toggle-free set compositions.
        #[arg(long)]
        n: Option<usize>,
        /// Composition, comma separated, for descent classes.
        #[arg(long)]
        mu: Option<String>,
    },
    /// Morphism test, inversion and convolution of linear characters.
    Characters {
        #[arg(value_enum)]
        action: CharAction,
        /// Character JSON: literal text, `@path`, or `-` for stdin.
        inputs: Vec<String>,
        /// Use the constant character of this expression instead of an input.
        #[arg(long)]
        constant: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Action {
    Multiply,
    Coproduct,
    Antipode,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Axioms,
    #[value(name = "antipode_equiv")]
    AntipodeEquiv,
    Nsym,
    Characters,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Compositions,
    #[value(name = "toggle_free")]
    ToggleFree,
    #[value(name = "descent_class")]
    DescentClass,
}

#[derive(Clone, Copy, ValueEnum)]
enum CharAction {
    Check,
    Invert,
    Convolve,
}

/// A failure together with its exit status.
struct Failed {
    code: u8,
    message: String,
}

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::PairingNotOne { .. } => 3,
            Error::CrossCheck(_) => 1,
            _ => 2,
        };
        Failed {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failed {
    Failed {
        code: 2,
        message: message.into(),
    }
}

/// What a command produced: a document and whether it represents success.
struct Output {
    json: Value,
    text: String,
    ok: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Self {
            json,
            text,
            ok: true,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = match cli.config.format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("output serializes"),
                Format::Text => out.text,
            };
            if let Err(e) = emit(&cli.config, &body) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(config: &Config, body: &str) -> io::Result<()> {
    match &config.out {
        Some(path) => fs::write(path, format!("{body}\n")),
        None => writeln!(io::stdout(), "{body}"),
    }
}

fn run(cli: &Cli) -> Result<Output, Failed> {
    let config = &cli.config;
    match &cli.command {
        Command::Enumerate { what, n, mu } => enumerate(*what, *n, mu.as_deref()),
        Command::Compute { action, inputs } => {
            let (base, ctx) = context(config)?;
            compute(config, &base, &ctx, *action, inputs)
        }
        Command::Verify { suite } => {
            let (base, ctx) = context(config)?;
            verify(config, &base, &ctx, *suite)
        }
        Command::Characters {
            action,
            inputs,
            constant,
        } => {
            let (base, ctx) = context(config)?;
            characters(config, &base, &ctx, *action, inputs, constant)
        }
    }
}

fn base(config: &Config) -> Result<Base, Failed> {
    match (&config.theory_file, config.base) {
        (Some(path), _) => {
            let text =
                fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            Ok(Base::from_file_json(&text)?)
        }
        (None, BaseKind::File) => Err(usage("--base file requires --theory-file")),
        (None, BaseKind::Twodim) => Ok(Base::two_dim(config.q)?),
    }
}

fn context(config: &Config) -> Result<(Base, HopfContext), Failed> {
    let base = base(config)?;
    let iota = sio::parse_expression(&base, &config.iota)?;
    let alpha = sio::parse_expression(&base, &config.alpha)?;
    let beta = sio::parse_expression(&base, &config.beta)?;
    let ctx = HopfContext::new(Arc::new(base.theory.clone()), iota, alpha, beta)?;
    Ok((base, ctx))
}

fn read_input(arg: &str) -> Result<String, Failed> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("stdin: {e}")))?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn compute(
    config: &Config,
    base: &Base,
    ctx: &HopfContext,
    action: Action,
    inputs: &[String],
) -> Result<Output, Failed> {
    let elements = inputs
        .iter()
        .map(|a| Ok(sio::parse_element(base, &read_input(a)?)?))
        .collect::<Result<Vec<_>, Failed>>()?;
    let theory = ctx.theory();
    let expect = |k: usize| {
        if elements.len() == k {
            Ok(())
        } else {
            Err(usage(format!(
                "expected {k} input element(s), found {}",
                elements.len()
            )))
        }
    };
    match action {
        Action::Multiply => {
            if elements.is_empty() {
                return Err(usage("multiply needs at least one element"));
            }
            let x = ctx.product_all(&elements)?;
            Ok(Output::ok(
                sio::element_to_json(base, &x),
                x.display(theory),
            ))
        }
        Action::Coproduct => {
            expect(1)?;
            let d = ctx.coproduct(&elements[0])?;
            Ok(Output::ok(sio::square_to_json(base, &d), d.display(theory)))
        }
        Action::Antipode => {
            expect(1)?;
            let x = &elements[0];
            let s = ctx.antipode_closed(x)?;
            if config.cross_check {
                let variants = [
                    ("toggle_free", ctx.antipode_toggle_free(x)?.value),
                    ("all_set_compositions", ctx.antipode_all_setcomps(x)?.value),
                    ("recursion", ctx.antipode_oracle(x)?),
                ];
                for (name, v) in variants {
                    if v != s {
                        return Err(Error::CrossCheck(format!(
                            "closed antipode differs from the {name} sum"
                        ))
                        .into());
                    }
                }
            }
            Ok(Output::ok(
                sio::element_to_json(base, &s),
                s.display(theory),
            ))
        }
    }
}

fn report_text(report: &Report) -> String {
    let mut lines = Vec::new();
    for c in &report.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        lines.push(format!("{status} {} ({} checked)", c.name, c.checked));
        if let Some(f) = &c.first_failure {
            lines.push(format!("  at {}: {} ≠ {}", f.inputs, f.lhs, f.rhs));
        }
        for (k, v) in &c.details {
            lines.push(format!("  {k}: {v}"));
        }
    }
    lines.push(
        if report.passed() {
            "all checks passed"
        } else {
            "verification failed"
        }
        .into(),
    );
    lines.join("\n")
}

fn verify(
    config: &Config,
    base: &Base,
    ctx: &HopfContext,
    suite: SuiteArg,
) -> Result<Output, Failed> {
    let suite = match suite {
        SuiteArg::Axioms => Suite::Axioms,
        SuiteArg::AntipodeEquiv => Suite::AntipodeEquiv,
        SuiteArg::Nsym => Suite::Nsym,
        SuiteArg::Characters => Suite::Characters,
        SuiteArg::All => Suite::All,
    };
    let mut report = run_suite(ctx, suite, config.max_degree)?;
    if let Some(seed) = config.seed {
        report.push(spot_checks(base, ctx, config.max_degree, seed)?);
    }
    let json = serde_json::to_value(&report).expect("report serializes");
    Ok(Output {
        ok: report.passed(),
        text: report_text(&report),
        json,
    })
}

/// `Δ(xy) = Δ(x)Δ(y)` and `S(xy) = S(y)S(x)` on random integer combinations.
fn spot_checks(
    base: &Base,
    ctx: &HopfContext,
    max_degree: usize,
    seed: u64,
) -> Result<CheckReport, Failed> {
    let mut rng = StdRng::seed_from_u64(seed);
    let d = ctx.theory().dim();
    let random = |degree: usize, rng: &mut StdRng| {
        let mut x = TensorElement::zero(degree);
        for w in BasisWord::all(d, degree) {
            x.add_term(w.letters, int(rng.gen_range(-3..=3)));
        }
        x
    };
    let mut check = CheckReport::new("random_spot_checks");
    check.detail("seed", seed);
    for _ in 0..16 {
        let m = rng.gen_range(0..=max_degree / 2);
        let k = rng.gen_range(0..=max_degree - m);
        let x = random(m, &mut rng);
        let y = random(k, &mut rng);
        let xy = ctx.product(&x, &y)?;
        let inputs = || {
            format!(
                "x = {}, y = {}",
                sio::element_to_json(base, &x),
                sio::element_to_json(base, &y)
            )
        };
        let lhs = ctx.coproduct(&xy)?;
        let rhs = ctx.square_product(&ctx.coproduct(&x)?, &ctx.coproduct(&y)?)?;
        check.record_eq(inputs, &lhs, &rhs, |s| s.display(ctx.theory()));
        let lhs = ctx.antipode_closed(&xy)?;
        let rhs = ctx.product(&ctx.antipode_closed(&y)?, &ctx.antipode_closed(&x)?)?;
        check.record_eq(inputs, &lhs, &rhs, |s| s.display(ctx.theory()));
    }
    Ok(check)
}

fn bounded(what: &'static str, n: usize, bound: usize) -> Result<(), Failed> {
    if n > bound {
        Err(Error::BoundExceeded { what, n, bound }.into())
    } else {
        Ok(())
    }
}

fn enumerate(what: What, n: Option<usize>, mu: Option<&str>) -> Result<Output, Failed> {
    let need_n = || n.ok_or_else(|| usage("--n is required"));
    match what {
        What::Compositions => {
            let n = need_n()?;
            bounded("composition size", n, MAX_COMPOSITION_N)?;
            let comps = enumerate_compositions(n);
            let text = comps
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            let json = Value::from(comps.iter().map(|c| json!(c.parts())).collect::<Vec<_>>());
            Ok(Output::ok(json, text))
        }
        What::ToggleFree => {
            let n = need_n()?;
            if n == 0 {
                return Err(usage("--n must be positive"));
            }
            bounded("set composition size", n, MAX_TOGGLE_FREE_N)?;
            let all = enumerate_toggle_free(n);
            let text = all
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            let json = Value::from(all.iter().map(|a| json!(a.blocks())).collect::<Vec<_>>());
            Ok(Output::ok(json, text))
        }
        What::DescentClass => {
            let mu = mu.ok_or_else(|| usage("--mu is required"))?;
            let parts = mu
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|e| usage(format!("--mu: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let mu = IntegerComposition::new(parts)?;
            let class = descent_class(&mu, DEFAULT_PERMUTATION_BOUND)?;
            let text = class
                .iter()
                .map(|w| {
                    w.one_line()
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect::<Vec<_>>()
                .join("\n");
            let json = Value::from(
                class
                    .iter()
                    .map(|w| json!(w.one_line()))
                    .collect::<Vec<_>>(),
            );
            Ok(Output::ok(json, text))
        }
    }
}

fn characters(
    config: &Config,
    base: &Base,
    ctx: &HopfContext,
    action: CharAction,
    inputs: &[String],
    constants: &[String],
) -> Result<Output, Failed> {
    let mut chars = Vec::new();
    for expr in constants {
        let psi = sio::parse_expression(base, expr)?;
        chars.push(LinearCharacter::constant(ctx, &psi, config.max_degree)?);
    }
    for arg in inputs {
        chars.push(sio::parse_character(base, ctx, &read_input(arg)?)?);
    }
    let arity = match action {
        CharAction::Check | CharAction::Invert => 1,
        CharAction::Convolve => 2,
    };
    if chars.len() != arity {
        return Err(usage(format!(
            "expected {arity} character(s), found {}",
            chars.len()
        )));
    }
    let show = |c: &LinearCharacter| {
        c.components()
            .iter()
            .enumerate()
            .map(|(n, x)| format!("Ψ_{n} = {}", x.display(ctx.theory())))
            .collect::<Vec<_>>()
            .join("\n")
    };
    match action {
        CharAction::Check => {
            let mut check = CheckReport::new("morphism");
            check.checked = 1;
            if let MorphismCheck::Fails { n, j, lhs, rhs } = chars[0].check_morphism() {
                check.passed = false;
                check.first_failure = Some(Failure {
                    inputs: format!("n = {n}, j = {j}"),
                    lhs: lhs.display(ctx.theory()),
                    rhs: rhs.display(ctx.theory()),
                });
            }
            check.detail(
                "appears_supported_by_modules",
                chars[0].appears_supported_by_modules(),
            );
            let mut report = Report::new();
            report.push(check);
            Ok(Output {
                ok: report.passed(),
                text: report_text(&report),
                json: serde_json::to_value(&report).expect("report serializes"),
            })
        }
        CharAction::Invert => {
            let inv = chars[0].inverse()?;
            Ok(Output::ok(sio::character_to_json(base, &inv), show(&inv)))
        }
        CharAction::Convolve => {
            let c = chars[0].convolve(&chars[1])?;
            Ok(Output::ok(sio::character_to_json(base, &c), show(&c)))
        }
    }
}
