//! The `spinors` command line. [`run`] takes the argument vector and returns
//! the exit code together with everything that would be printed, so the
//! binary is a thin wrapper and the commands are testable in-process.
//!
//! Exit codes: 0 success, 1 domain error (e.g. a non-versor passed to
//! `spin rotate`), 2 usage or expression parse error.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use spinor_algebra::algebra::exp_bivector;
use spinor_algebra::dirac::{self, bilinears, fierz_residuals, lounesto_classify, BilinearSet, DiracSpinor, Frame};
use spinor_algebra::pauli::{self, observables, PauliObservables, PauliSpinor};
use spinor_algebra::repr::{build_rep, rep_lookup, verify_rep};
use spinor_algebra::spin::{adjoint_act, classify_versor};
use spinor_algebra::text::{parse, serialize, ParseError};
use spinor_algebra::two_spinor::{
    self, charge_conjugation, chirality, flag, flagpole, inner_product, null_tetrad, Projector, TwoSpinor,
};
use spinor_algebra::wick::{signature_bridge_check, wick_rotate};
use spinor_algebra::{Error, Multivector, Sign, Signature, Tolerance};

#[derive(Parser, Debug)]
#[command(name = "spinors", version, about = "Geometric algebra and spinor calculator")]
struct Cli {
    /// Signature as `p,q`; each command has its own default.
    #[arg(long, global = true, value_name = "P,Q")]
    sig: Option<Signature>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Absolute and relative tolerance.
    #[arg(long, global = true, default_value_t = 1e-9, value_name = "TOL")]
    eps: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multivector arithmetic (default Cl(3,0)).
    #[command(subcommand)]
    Mv(MvCommand),
    /// Pin and spin groups (default Cl(1,3)).
    #[command(subcommand)]
    Spin(SpinCommand),
    /// Pauli spinors in Cl(3,0).
    #[command(subcommand)]
    Pauli(PauliCommand),
    /// Dirac spinors in Cl(1,3).
    #[command(subcommand)]
    Dirac(DiracCommand),
    /// Lorentz 2-spinors in Cl(1,3).
    #[command(subcommand)]
    Twospinor(TwoSpinorCommand),
    /// Null tetrad of a projector (same as `twospinor tetrad`).
    Tetrad(ProjectorArg),
    /// Matrix representations (default Cl(1,3)).
    #[command(subcommand)]
    Rep(RepCommand),
    /// Wick rotation of a Cl(1,3) vector, or `wick bridge` for the
    /// even-subalgebra comparison of Cl(1,3) and Cl(3,1).
    Wick {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

#[derive(Args, Debug)]
struct Expr {
    #[arg(allow_hyphen_values = true)]
    expr: String,
}

#[derive(Subcommand, Debug)]
enum MvCommand {
    /// Evaluate and print in canonical form.
    Eval(Expr),
    /// Grade-k part.
    Grade {
        k: usize,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Reverse.
    Rev(Expr),
    /// Grade involution.
    Inv(Expr),
    /// Clifford conjugate.
    Conj(Expr),
    /// Exponential of a bivector.
    Exp {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Return `-exp(B)`.
        #[arg(long)]
        minus: bool,
    },
}

#[derive(Subcommand, Debug)]
enum SpinCommand {
    /// Pin / Spin / Spin+ membership.
    Check(Expr),
    /// `U A Ũ` (or `-U A Ũ` with `--minus`).
    Rotate {
        #[arg(allow_hyphen_values = true)]
        versor: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        minus: bool,
    },
}

#[derive(Subcommand, Debug)]
enum PauliCommand {
    /// Density and spin vector.
    Observables {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Quantization axis (unit vector).
        #[arg(long, default_value = "e3", allow_hyphen_values = true)]
        axis: String,
    },
    /// Spinor from density, spin vector and phase.
    Reconstruct {
        #[arg(long, allow_hyphen_values = true)]
        rho: f64,
        /// Spin vector expression, e.g. `0.6e1 + 0.8e3`.
        #[arg(long, allow_hyphen_values = true)]
        spin: String,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value = "e3", allow_hyphen_values = true)]
        axis: String,
    },
}

#[derive(Subcommand, Debug)]
enum DiracCommand {
    /// ρ, β, J, S, K.
    Bilinears(Expr),
    /// Lounesto class.
    Classify(Expr),
    /// Spinor from bilinear covariants.
    Reconstruct {
        #[arg(long, allow_hyphen_values = true)]
        rho: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        beta: f64,
        #[arg(long, allow_hyphen_values = true)]
        j: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        /// Three phase angles `a1,a2,a3`.
        #[arg(long, default_value = "0,0,0", allow_hyphen_values = true)]
        alpha: String,
    },
    /// Residuals of the nine Fierz identities.
    Fierz(Expr),
}

#[derive(Args, Debug)]
struct ProjectorArg {
    /// Unit relative vector `e` of the projector `½(1 + e)`.
    #[arg(long, default_value = "e41", allow_hyphen_values = true)]
    e: String,
}

#[derive(Subcommand, Debug)]
enum TwoSpinorCommand {
    /// Split a Dirac spinor into its two 2-spinors.
    Split {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        projector: ProjectorArg,
    },
    /// Chirality and charge-conjugation eigenvalues and the Lounesto class.
    Classify(Expr),
    /// Newman-Penrose null tetrad.
    Tetrad(ProjectorArg),
    /// Flagpole and flag of two 2-spinors given by components `re0,im0,re1,im1`.
    Flag {
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
        #[command(flatten)]
        projector: ProjectorArg,
    },
}

#[derive(Subcommand, Debug)]
enum RepCommand {
    /// Classification table entry.
    Lookup,
    /// Build the explicit matrices and check them.
    Verify {
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => Failure::Usage(p.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Res<T> = Result<T, Failure>;

struct Ctx {
    sig: Option<Signature>,
    json: bool,
    tol: Tolerance,
}

impl Ctx {
    fn sig(&self, default: Signature) -> Signature {
        self.sig.unwrap_or(default)
    }

    fn parse(&self, text: &str, default: Signature) -> Res<Multivector> {
        Ok(parse(text, self.sig(default))?)
    }

    fn emit(&self, text: String, value: impl Serialize) -> Res<String> {
        if self.json {
            serde_json::to_string_pretty(&value).map_err(|e| Failure::Domain(e.to_string()))
        } else {
            Ok(text)
        }
    }

    fn emit_mv(&self, a: &Multivector) -> Res<String> {
        self.emit(serialize(a), json!({ "sig": a.sig().to_string(), "value": serialize(a), "coeffs": a.coeffs() }))
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let tol = match Tolerance::uniform(cli.eps) {
        Ok(t) => t,
        Err(e) => return failure(2, e.to_string()),
    };
    let ctx = Ctx {
        sig: cli.sig,
        json: cli.json,
        tol,
    };
    match dispatch(&ctx, cli.command) {
        Ok(mut out) => {
            if !out.ends_with('\n') {
                out.push('\n');
            }
            Outcome {
                code: 0,
                stdout: out,
                stderr: String::new(),
            }
        }
        Err(Failure::Usage(msg)) => failure(2, msg),
        Err(Failure::Domain(msg)) => failure(1, msg),
    }
}

fn failure(code: i32, msg: String) -> Outcome {
    Outcome {
        code,
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
    }
}

fn dispatch(ctx: &Ctx, command: Command) -> Res<String> {
    match command {
        Command::Mv(c) => mv(ctx, c),
        Command::Spin(c) => spin(ctx, c),
        Command::Pauli(c) => pauli_cmd(ctx, c),
        Command::Dirac(c) => dirac_cmd(ctx, c),
        Command::Twospinor(c) => two_spinor_cmd(ctx, c),
        Command::Tetrad(p) => tetrad(ctx, &p),
        Command::Rep(c) => rep(ctx, c),
        Command::Wick { expr } => wick(ctx, &expr),
    }
}

fn mv(ctx: &Ctx, command: MvCommand) -> Res<String> {
    let d = Signature::CL3;
    let out = match command {
        MvCommand::Eval(e) => ctx.parse(&e.expr, d)?,
        MvCommand::Grade { k, expr } => {
            let a = ctx.parse(&expr, d)?;
            if k > a.sig().dim() {
                return Err(Error::GradeOutOfRange { grade: k, dim: a.sig().dim() }.into());
            }
            a.grade_part(k)
        }
        MvCommand::Rev(e) => ctx.parse(&e.expr, d)?.reverse(),
        MvCommand::Inv(e) => ctx.parse(&e.expr, d)?.grade_involution(),
        MvCommand::Conj(e) => ctx.parse(&e.expr, d)?.clifford_conjugate(),
        MvCommand::Exp { expr, minus } => {
            let sign = if minus { Sign::Minus } else { Sign::Plus };
            exp_bivector(&ctx.parse(&expr, d)?, sign, &ctx.tol)?
        }
    };
    ctx.emit_mv(&out)
}

fn spin(ctx: &Ctx, command: SpinCommand) -> Res<String> {
    let d = Signature::CL13;
    match command {
        SpinCommand::Check(e) => {
            let u = ctx.parse(&e.expr, d)?;
            let class = classify_versor(&u, &ctx.tol);
            let text = match class.norm_value {
                Some(n) => format!("{} (U U~ = {n})", class.tag),
                None => format!("{} (U U~ is not a scalar)", class.tag),
            };
            ctx.emit(text, class)
        }
        SpinCommand::Rotate { versor, expr, minus } => {
            let u = ctx.parse(&versor, d)?;
            let a = ctx.parse(&expr, d)?;
            let sign = if minus { Sign::Minus } else { Sign::Plus };
            ctx.emit_mv(&adjoint_act(&u, &a, sign, &ctx.tol)?)
        }
    }
}

fn pauli_cmd(ctx: &Ctx, command: PauliCommand) -> Res<String> {
    let d = Signature::CL3;
    match command {
        PauliCommand::Observables { expr, axis } => {
            let psi = PauliSpinor::with_axis(ctx.parse(&expr, d)?, ctx.parse(&axis, d)?, &ctx.tol)?;
            let report = observables(&psi).report();
            let text = format!("rho = {}\nspin = {}", report.rho, list(&report.spin));
            ctx.emit(text, report)
        }
        PauliCommand::Reconstruct { rho, spin, alpha, axis } => {
            let obs = PauliObservables::new(rho, ctx.parse(&spin, d)?, &ctx.tol)?;
            let psi = pauli::reconstruct_about(&obs, &ctx.parse(&axis, d)?, alpha, &ctx.tol)?;
            ctx.emit_mv(psi.value())
        }
    }
}

fn list(xs: &[f64]) -> String {
    let parts: Vec<String> = xs.iter().map(f64::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn dirac_spinor(ctx: &Ctx, expr: &str) -> Res<DiracSpinor> {
    Ok(DiracSpinor::new(ctx.parse(expr, Signature::CL13)?, &ctx.tol)?)
}

fn dirac_cmd(ctx: &Ctx, command: DiracCommand) -> Res<String> {
    let d = Signature::CL13;
    match command {
        DiracCommand::Bilinears(e) => {
            let b = bilinears(&dirac_spinor(ctx, &e.expr)?);
            let report = b.report();
            let text = format!(
                "rho = {}\nbeta = {}\nJ = {}\nS = {}\nK = {}\nfierz max residual = {:e}",
                b.rho,
                b.beta,
                serialize(&b.j),
                serialize(&b.s),
                serialize(&b.k),
                report.fierz_max_residual
            );
            ctx.emit(text, report)
        }
        DiracCommand::Classify(e) => {
            let class = lounesto_classify(&dirac_spinor(ctx, &e.expr)?, &ctx.tol)?;
            let mut text = class.tag.to_string();
            if let (Some(h), Some(s)) = (class.h, &class.s) {
                write!(text, "\nh = {h}\ns = {}", serialize(s)).expect("writing to a String");
            }
            let value = json!({
                "class": class.tag,
                "h": class.h,
                "s": class.s.as_ref().map(serialize),
            });
            ctx.emit(text, value)
        }
        DiracCommand::Reconstruct { rho, beta, j, s, k, alpha } => {
            let alpha = parse_floats::<3>(&alpha)?;
            let set = BilinearSet {
                rho,
                beta,
                j: ctx.parse(&j, d)?,
                s: ctx.parse(&s, d)?,
                k: ctx.parse(&k, d)?,
                frame: Frame::default(),
            };
            let psi = dirac::reconstruct(&set, alpha, &ctx.tol)?;
            ctx.emit_mv(psi.value())
        }
        DiracCommand::Fierz(e) => {
            let r = fierz_residuals(&bilinears(&dirac_spinor(ctx, &e.expr)?));
            let names = ["J^2", "K^2", "<JK>", "JK", "JS", "SJ", "KS", "SK", "S^2"];
            let mut text = String::new();
            for (name, v) in names.iter().zip(r.as_array()) {
                writeln!(text, "{name:<5} {v:e}").expect("writing to a String");
            }
            write!(text, "max   {:e}", r.max()).expect("writing to a String");
            ctx.emit(text, json!({ "residuals": r, "max": r.max() }))
        }
    }
}

fn parse_floats<const N: usize>(text: &str) -> Res<[f64; N]> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let bad = || Failure::Usage(format!("expected {N} comma-separated numbers, got `{text}`"));
    if parts.len() != N {
        return Err(bad());
    }
    let mut out = [0.0; N];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p.parse().map_err(|_| bad())?;
    }
    Ok(out)
}

fn complex_text(z: Complex64) -> String {
    // adding 0.0 turns -0.0 into 0.0
    let z = Complex64::new(z.re + 0.0, z.im + 0.0);
    if z.im < 0.0 {
        format!("{} - {}i", z.re, -z.im)
    } else {
        format!("{} + {}i", z.re, z.im)
    }
}

fn projector(ctx: &Ctx, arg: &ProjectorArg) -> Res<Projector> {
    Ok(Projector::new(&ctx.parse(&arg.e, Signature::CL13)?, &ctx.tol)?)
}

fn two_spinor_value(t: &TwoSpinor) -> Value {
    let c = t.components();
    json!({ "value": serialize(t.value()), "components": [[c[0].re, c[0].im], [c[1].re, c[1].im]] })
}

fn two_spinor_cmd(ctx: &Ctx, command: TwoSpinorCommand) -> Res<String> {
    match command {
        TwoSpinorCommand::Split { expr, projector: p } => {
            let l = projector(ctx, &p)?;
            let (plus, minus) = two_spinor::split(&dirac_spinor(ctx, &expr)?, &l);
            let line = |name: &str, t: &TwoSpinor| {
                let c = t.components();
                format!("{name} = {}  ({}, {})", serialize(t.value()), complex_text(c[0]), complex_text(c[1]))
            };
            let text = format!("{}\n{}", line("eta", &plus), line("chi", &minus));
            ctx.emit(text, json!({ "eta": two_spinor_value(&plus), "chi": two_spinor_value(&minus) }))
        }
        TwoSpinorCommand::Classify(e) => {
            let psi = dirac_spinor(ctx, &e.expr)?;
            let class = lounesto_classify(&psi, &ctx.tol)?;
            let chi = chirality(psi.value(), &ctx.tol);
            let cc = charge_conjugation(psi.value(), &ctx.tol);
            let show = |x: Option<f64>| x.map_or("none".to_string(), |v| v.to_string());
            let text = format!("class = {}\nchirality = {}\ncharge conjugation = {}", class.tag, show(chi), show(cc));
            ctx.emit(text, json!({ "class": class.tag, "chirality": chi, "charge_conjugation": cc }))
        }
        TwoSpinorCommand::Tetrad(p) => tetrad(ctx, &p),
        TwoSpinorCommand::Flag { eta, chi, projector: p } => {
            let l = projector(ctx, &p)?;
            let components = |text: &str| -> Res<[Complex64; 2]> {
                let [a, b, c, d] = parse_floats::<4>(text)?;
                Ok([Complex64::new(a, b), Complex64::new(c, d)])
            };
            let eta = TwoSpinor::from_components(components(&eta)?, &l);
            let chi = TwoSpinor::from_components(components(&chi)?, &l);
            let bracket = inner_product(&eta, &chi, &ctx.tol)?;
            let pole = flagpole(&eta, &ctx.tol)?;
            let f = flag(&eta, &chi, &ctx.tol)?;
            let text = format!(
                "{{eta, chi}} = {}\nflagpole = {}\nflag = {}",
                complex_text(bracket),
                serialize(pole.value()),
                serialize(&f)
            );
            let value = json!({
                "bracket": [bracket.re, bracket.im],
                "flagpole": serialize(pole.value()),
                "flag": serialize(&f),
            });
            ctx.emit(text, value)
        }
    }
}

fn tetrad(ctx: &Ctx, p: &ProjectorArg) -> Res<String> {
    let report = null_tetrad(&projector(ctx, p)?).report();
    let mut text = format!("l  = {}\nn  = {}\nm  = {}\nm+ = {}\nmetric:", report.l, report.n, report.m, report.m_dagger);
    for row in report.metric {
        write!(text, "\n  {}", list(&row)).expect("writing to a String");
    }
    ctx.emit(text, report)
}

fn rep(ctx: &Ctx, command: RepCommand) -> Res<String> {
    let sig = ctx.sig(Signature::CL13);
    match command {
        RepCommand::Lookup => {
            let tag = rep_lookup(sig)?;
            ctx.emit(tag.to_string(), json!({ "sig": sig.to_string(), "tag": tag.to_string() }))
        }
        RepCommand::Verify { samples } => {
            let report = verify_rep(&build_rep(sig)?, samples);
            let text = format!(
                "{sig} = {}: relation residual {:e}, product residual {:e}, injective {} -> {}",
                report.tag,
                report.max_relation,
                report.max_product,
                report.injective,
                if report.passed() { "pass" } else { "fail" }
            );
            let passed = report.passed();
            let out = ctx.emit(text, &report)?;
            if passed {
                Ok(out)
            } else {
                Err(Failure::Domain(out))
            }
        }
    }
}

fn wick(ctx: &Ctx, expr: &str) -> Res<String> {
    if expr == "bridge" {
        let report = signature_bridge_check();
        let text = format!(
            "sigma_k^2 in Cl(1,3): {}\nsigma'_k^2 in Cl(3,1): {}\n{} products, {} mismatches -> {}",
            list(&report.lorentz_squares),
            list(&report.mirror_squares),
            report.products,
            report.mismatches,
            if report.passed() { "pass" } else { "fail" }
        );
        return ctx.emit(text, report);
    }
    let image = wick_rotate(&ctx.parse(expr, Signature::CL13)?, &ctx.tol)?;
    ctx.emit_mv(image.value())
}
