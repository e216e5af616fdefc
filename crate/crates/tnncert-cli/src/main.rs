//! `tnncert`: exact enumeration, expansion, certification, and verification
//! for Temperley-Lieb immanants on totally nonnegative matrices.
//!
//! Exit codes are a stable contract: 0 means success (certificates verified,
//! all checks passed), 1 means a verification failure or an unverified
//! certificate, 2 means a usage, parse, or range error.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use tnncert::certify::{
    bj_certificate, bj_check, bj_side, fischer_check, two_row_monomial_certificate,
    two_row_tl_certificate,
};
use tnncert::colorings::{alpha_beta, coloring_profile, cycle_balance, d_coeff, tau_hat_cycles};
use tnncert::immanants::{
    determinant, imm_char, imm_eps, imm_eta, imm_phi, imm_tau, imm_tau_all, permanent, PhiRoute,
};
use tnncert::matrix::Matrix;
use tnncert::partitions::{majorization_leq, partitions_of, Partition};
use tnncert::scalar::rat_to_string;
use tnncert::symfunc::{
    char_value, e_to_m, induced_sign_char_value, induced_trivial_char_value, kostka,
    monomial_char_value,
};
use tnncert::symgroup::Permutation;
use tnncert::tl::{f_tau, sigma_word, tl_basis, Diagram};
use tnncert::tnngen::{gen_tnn, TnnFactorization};
use tnncert::{Error, Int, Rat, RatMatrix, Result};

#[derive(Parser)]
#[command(
    name = "tnncert",
    version,
    about = "Exact Temperley-Lieb immanants and total-nonnegativity certificates"
)]
struct Cli {
    /// Write the primary output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Temperley-Lieb diagrams: basis listing, sigma expansion, f_tau values.
    #[command(subcommand)]
    Tl(TlCmd),
    /// Symmetric functions: e-to-m expansions, Kostka numbers, characters.
    #[command(subcommand)]
    Sym(SymCmd),
    /// Principal colorings of a diagram closure.
    #[command(subcommand)]
    Color(ColorCmd),
    /// Evaluate an immanant of a CSV matrix exactly.
    Eval(EvalArgs),
    /// Generate seeded totally nonnegative matrices.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Build nonnegative-expansion certificates.
    #[command(subcommand)]
    Certify(CertifyCmd),
    /// Verify minor-sum inequalities, exactly.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand)]
enum TlCmd {
    /// List the diagram basis of T_n with indices.
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Expand sigma of a word in the diagram basis.
    Sigma {
        /// Letters i1,i2,... (each standing for s_i), applied left to right.
        #[arg(long)]
        word: String,
        #[arg(long)]
        n: usize,
    },
    /// Evaluate the diagram coordinate f_tau at a permutation.
    Ftau {
        #[command(flatten)]
        tau: DiagramInput,
        /// Permutation in one-line notation, e.g. 3,1,2.
        #[arg(long)]
        perm: String,
    },
}

#[derive(Subcommand)]
enum SymCmd {
    /// Expand an elementary symmetric function in the monomial basis.
    Etom {
        #[arg(long)]
        lambda: String,
    },
    /// Kostka number K_{lambda,mu}.
    Kostka {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Class-function value at a conjugacy class.
    Char {
        /// Indexing shape.
        #[arg(long)]
        lambda: String,
        /// Cycle type of the class.
        #[arg(long)]
        class: String,
        #[arg(long, value_enum, default_value = "irreducible")]
        kind: CharKind,
    },
}

#[derive(Subcommand)]
enum ColorCmd {
    /// Cycles of the closure tau-hat with balance statistics.
    Cycles {
        #[command(flatten)]
        tau: DiagramInput,
    },
    /// Locate j in tau's coloring range as (alpha, beta).
    Alphabeta {
        #[command(flatten)]
        tau: DiagramInput,
        /// Number of left vertices colored white.
        #[arg(long)]
        j: usize,
    },
    /// Principal-coloring counts d_{j,tau}.
    Dcoeff {
        #[command(flatten)]
        tau: DiagramInput,
        /// Single j to report; omitted, a table over j = 0..=n.
        #[arg(long)]
        j: Option<usize>,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// Random totally nonnegative matrices from bidiagonal factorizations.
    Tnn(GenTnnArgs),
}

#[derive(Subcommand)]
enum CertifyCmd {
    /// Diagram-basis certificate for a two-row immanant difference.
    TwoRowTl(TwoRowArgs),
    /// Monomial-immanant certificate for the same difference.
    TwoRowMonomial(TwoRowArgs),
    /// Cover-chain certificate for a comparable pair of shapes.
    Bj {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Averaged products of complementary principal minors increase toward n/2.
    Fischer(VerifyFischerArgs),
    /// Scaled minor-sum comparisons across the majorization order.
    Bj(VerifyBjArgs),
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CharKind {
    Irreducible,
    Monomial,
    InducedSign,
    InducedTrivial,
}

#[derive(Clone, Copy, ValueEnum)]
enum ImmKind {
    Det,
    Per,
    Tau,
    Epsilon,
    Eta,
    Chi,
    Phi,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Character,
    TemperleyLieb,
}

/// A diagram given either literally or as a product of generators.
#[derive(Args)]
struct DiagramInput {
    /// Diagram as JSON: '{"n":3,"edges":[[1,2],[3,4],[5,6]]}'.
    #[arg(long, value_name = "JSON")]
    diagram: Option<String>,
    /// Generator indices i1,i2,... multiplied left to right.
    #[arg(long, conflicts_with = "diagram")]
    word: Option<String>,
    /// Diagram size n, needed with --word.
    #[arg(long, requires = "word")]
    n: Option<usize>,
}

impl DiagramInput {
    fn resolve(&self) -> Result<Diagram> {
        match self.resolve_opt()? {
            Some(d) => Ok(d),
            None => Err(Error::Parse(
                "provide the diagram as --diagram or as --word with --n".into(),
            )),
        }
    }

    fn resolve_opt(&self) -> Result<Option<Diagram>> {
        match (&self.diagram, &self.word) {
            (Some(text), None) => Ok(Some(serde_json::from_str(text)?)),
            (None, Some(word)) => {
                let n = self
                    .n
                    .ok_or_else(|| Error::Parse("--word needs --n".into()))?;
                let mut acc = Diagram::identity(n);
                for i in parse_list(word)? {
                    let (next, _) = acc.multiply(&Diagram::generator(n, i)?)?;
                    acc = next;
                }
                Ok(Some(acc))
            }
            (None, None) => Ok(None),
            (Some(_), Some(_)) => unreachable!("clap rejects --diagram with --word"),
        }
    }
}

#[derive(Args)]
struct EvalArgs {
    /// Which immanant to evaluate.
    #[arg(long, value_enum)]
    imm: ImmKind,
    /// CSV matrix file: one row per line, entries integer or p/q.
    #[arg(long, value_name = "PATH")]
    matrix: PathBuf,
    /// Shape for epsilon, eta, and chi.
    #[arg(long)]
    lambda: Option<String>,
    /// Shape for phi.
    #[arg(long)]
    mu: Option<String>,
    /// Evaluation route for phi.
    #[arg(long, value_enum, default_value = "character")]
    route: RouteArg,
    #[command(flatten)]
    tau: DiagramInput,
}

#[derive(Args)]
struct GenTnnArgs {
    /// Matrix size.
    #[arg(long, required_unless_present = "replay", conflicts_with = "replay")]
    n: Option<usize>,
    /// Number of bidiagonal factors; defaults to 3n.
    #[arg(long, conflicts_with = "replay")]
    complexity: Option<usize>,
    #[arg(long, default_value_t = 0, conflicts_with = "replay")]
    seed: u64,
    /// How many matrices to emit, at seeds seed, seed+1, ...
    #[arg(long, default_value_t = 1, conflicts_with = "replay")]
    count: usize,
    /// Also write the factorizations here (a single object when --count 1,
    /// else an array).
    #[arg(long, value_name = "PATH")]
    factors_out: Option<PathBuf>,
    /// Re-evaluate a factorization file written by --factors-out.
    #[arg(long, value_name = "PATH")]
    replay: Option<PathBuf>,
}

#[derive(Args)]
struct TwoRowArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Random matrices for the identity check; 0 skips it, leaving the
    /// certificate unverified.
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

#[derive(Args)]
struct VerifyFischerArgs {
    /// Check one CSV matrix instead of a random sweep.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["n", "matrices", "seed", "complexity"])]
    matrix_file: Option<PathBuf>,
    /// Matrix size for the sweep.
    #[arg(long, required_unless_present = "matrix_file")]
    n: Option<usize>,
    /// Sweep size.
    #[arg(long, default_value_t = 100)]
    matrices: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Factor count per generated matrix; defaults to 3n.
    #[arg(long)]
    complexity: Option<usize>,
}

#[derive(Args)]
struct VerifyBjArgs {
    /// Check one CSV matrix (with --lambda and --mu) instead of a sweep.
    #[arg(
        long,
        value_name = "PATH",
        requires = "lambda",
        requires = "mu",
        conflicts_with_all = ["n", "matrices", "seed", "complexity"]
    )]
    matrix_file: Option<PathBuf>,
    #[arg(long, requires = "matrix_file")]
    lambda: Option<String>,
    #[arg(long, requires = "matrix_file")]
    mu: Option<String>,
    /// Matrix size for the sweep over all comparable pairs.
    #[arg(long, required_unless_present = "matrix_file")]
    n: Option<usize>,
    #[arg(long, default_value_t = 100)]
    matrices: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Factor count per generated matrix; defaults to 3n.
    #[arg(long)]
    complexity: Option<usize>,
}

fn main() {
    let cli = Cli::parse();
    init_threads();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

fn init_threads() {
    if let Ok(v) = std::env::var("TNNCERT_THREADS") {
        match v.trim().parse::<usize>() {
            Ok(k) if k > 0 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build_global();
            }
            _ => eprintln!("warning: ignoring TNNCERT_THREADS={v:?}, want a positive integer"),
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    let out = cli.out;
    match cli.cmd {
        Cmd::Tl(c) => run_tl(c, &out),
        Cmd::Sym(c) => run_sym(c, &out),
        Cmd::Color(c) => run_color(c, &out),
        Cmd::Eval(a) => run_eval(a, &out),
        Cmd::Gen(GenCmd::Tnn(a)) => run_gen(a, &out),
        Cmd::Certify(c) => run_certify(c, &out),
        Cmd::Verify(c) => run_verify(c, &out),
    }
}

fn run_tl(cmd: TlCmd, out: &Option<PathBuf>) -> Result<i32> {
    match cmd {
        TlCmd::Basis { n, format } => {
            let basis = tl_basis(n)?;
            let config = json!({
                "command": "tl basis",
                "n": n,
                "format": if format == Format::Json { "json" } else { "text" },
                "seed": null,
                "out": out_name(out),
            });
            match format {
                Format::Json => emit_json(
                    out,
                    config,
                    json!({"count": basis.len(), "diagrams": basis}),
                )?,
                Format::Text => {
                    let mut text = config_line(&config)?;
                    for (i, d) in basis.iter().enumerate() {
                        text.push_str(&format!("{i}\t{}\n", diagram_text(d)));
                    }
                    text.push_str(&format!("# {} diagrams\n", basis.len()));
                    emit_text(out, &text)?;
                }
            }
            Ok(0)
        }
        TlCmd::Sigma { word, n } => {
            let w = parse_list(&word)?;
            let elem = sigma_word(&w, n)?;
            let config = json!({
                "command": "tl sigma",
                "word": w,
                "n": n,
                "seed": null,
                "out": out_name(out),
            });
            emit_json(out, config, serde_json::to_value(&elem)?)?;
            Ok(0)
        }
        TlCmd::Ftau { tau, perm } => {
            let t = tau.resolve()?;
            let w = Permutation::new(parse_list(&perm)?)?;
            let v = f_tau(&t, &w)?;
            let config = json!({
                "command": "tl ftau",
                "diagram": t,
                "perm": w.one_line(),
                "seed": null,
                "out": out_name(out),
            });
            emit_value(out, config, &v.to_string())?;
            Ok(0)
        }
    }
}

fn run_sym(cmd: SymCmd, out: &Option<PathBuf>) -> Result<i32> {
    match cmd {
        SymCmd::Etom { lambda } => {
            let lam = parse_partition(&lambda)?;
            let config = json!({
                "command": "sym etom",
                "lambda": lam,
                "seed": null,
                "out": out_name(out),
            });
            let entries: Vec<_> = e_to_m(&lam)
                .iter()
                .map(|(mu, c)| json!({"partition": mu, "coeff": c.to_string()}))
                .collect();
            emit_json(out, config, json!(entries))?;
            Ok(0)
        }
        SymCmd::Kostka { lambda, mu } => {
            let lam = parse_partition(&lambda)?;
            let mu = parse_partition(&mu)?;
            let v = kostka(&lam, &mu)?;
            let config = json!({
                "command": "sym kostka",
                "lambda": lam,
                "mu": mu,
                "seed": null,
                "out": out_name(out),
            });
            emit_value(out, config, &v.to_string())?;
            Ok(0)
        }
        SymCmd::Char {
            lambda,
            class,
            kind,
        } => {
            let shape = parse_partition(&lambda)?;
            let cls = parse_partition(&class)?;
            let (name, v) = match kind {
                CharKind::Irreducible => ("irreducible", char_value(&shape, &cls)?),
                CharKind::Monomial => ("monomial", monomial_char_value(&shape, &cls)?),
                CharKind::InducedSign => ("induced-sign", induced_sign_char_value(&shape, &cls)?),
                CharKind::InducedTrivial => {
                    ("induced-trivial", induced_trivial_char_value(&shape, &cls)?)
                }
            };
            let config = json!({
                "command": "sym char",
                "lambda": shape,
                "class": cls,
                "kind": name,
                "seed": null,
                "out": out_name(out),
            });
            emit_value(out, config, &v.to_string())?;
            Ok(0)
        }
    }
}

fn run_color(cmd: ColorCmd, out: &Option<PathBuf>) -> Result<i32> {
    match cmd {
        ColorCmd::Cycles { tau } => {
            let t = tau.resolve()?;
            let n = t.n();
            let profile = coloring_profile(&t);
            let rows: Vec<_> = tau_hat_cycles(&t)
                .iter()
                .map(|c| json!({"vertices": c, "balance": cycle_balance(n, c)}))
                .collect();
            let config = json!({
                "command": "color cycles",
                "diagram": t,
                "seed": null,
                "out": out_name(out),
            });
            emit_json(
                out,
                config,
                json!({
                    "n": n,
                    "cycles": rows,
                    "base": profile.base,
                    "unbalanced": profile.unbalanced,
                    "balanced": profile.balanced,
                }),
            )?;
            Ok(0)
        }
        ColorCmd::Alphabeta { tau, j } => {
            let t = tau.resolve()?;
            let ab = alpha_beta(&t, j)?;
            let config = json!({
                "command": "color alphabeta",
                "diagram": t,
                "j": j,
                "seed": null,
                "out": out_name(out),
            });
            let result = match ab {
                Some((a, b)) => json!({"j": j, "alpha": a, "beta": b}),
                None => json!({"j": j, "alpha": null, "beta": null}),
            };
            emit_json(out, config, result)?;
            Ok(0)
        }
        ColorCmd::Dcoeff { tau, j } => {
            let t = tau.resolve()?;
            let config = json!({
                "command": "color dcoeff",
                "diagram": t,
                "j": j,
                "seed": null,
                "out": out_name(out),
            });
            match j {
                Some(j) => {
                    let d = d_coeff(j, &t)?;
                    emit_value(out, config, &d.to_string())?;
                }
                None => {
                    let rows: Vec<_> = (0..=t.n())
                        .map(|j| Ok(json!({"j": j, "d": d_coeff(j, &t)?.to_string()})))
                        .collect::<Result<_>>()?;
                    emit_json(out, config, json!(rows))?;
                }
            }
            Ok(0)
        }
    }
}

fn run_eval(a: EvalArgs, out: &Option<PathBuf>) -> Result<i32> {
    let m = load_matrix(&a.matrix)?;
    let imm_name = match a.imm {
        ImmKind::Det => "det",
        ImmKind::Per => "per",
        ImmKind::Tau => "tau",
        ImmKind::Epsilon => "epsilon",
        ImmKind::Eta => "eta",
        ImmKind::Chi => "chi",
        ImmKind::Phi => "phi",
    };
    let config = json!({
        "command": "eval",
        "imm": imm_name,
        "matrix": a.matrix.display().to_string(),
        "lambda": a.lambda,
        "mu": a.mu,
        "seed": null,
        "out": out_name(out),
    });
    let need_lambda = || -> Result<Partition> {
        match &a.lambda {
            Some(s) => parse_partition(s),
            None => Err(Error::Parse(format!("--imm {imm_name} needs --lambda"))),
        }
    };
    let value = match a.imm {
        ImmKind::Det => determinant(&m)?,
        ImmKind::Per => permanent(&m)?,
        ImmKind::Epsilon => imm_eps(&need_lambda()?, &m)?,
        ImmKind::Eta => imm_eta(&need_lambda()?, &m)?,
        ImmKind::Chi => imm_char(&need_lambda()?, &m)?,
        ImmKind::Phi => {
            let mu = match &a.mu {
                Some(s) => parse_partition(s)?,
                None => return Err(Error::Parse("--imm phi needs --mu".into())),
            };
            let route = match a.route {
                RouteArg::Character => PhiRoute::Character,
                RouteArg::TemperleyLieb => PhiRoute::TemperleyLieb,
            };
            imm_phi(&mu, &m, route)?
        }
        ImmKind::Tau => match a.tau.resolve_opt()? {
            Some(t) => imm_tau(&t, &m)?,
            None => {
                let mut text = config_line(&config)?;
                for (d, v) in imm_tau_all(&m)? {
                    text.push_str(&format!("{}\t{}\n", diagram_text(&d), rat_to_string(&v)));
                }
                emit_text(out, &text)?;
                return Ok(0);
            }
        },
    };
    emit_value(out, config, &rat_to_string(&value))?;
    Ok(0)
}

fn run_gen(a: GenTnnArgs, out: &Option<PathBuf>) -> Result<i32> {
    if let Some(path) = &a.replay {
        let f: TnnFactorization = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        let m = f.matrix()?;
        let config = json!({
            "command": "gen tnn",
            "replay": path.display().to_string(),
            "n": f.n,
            "seed": f.seed,
            "out": out_name(out),
        });
        let mut text = config_line(&config)?;
        text.push_str(&m.to_csv());
        emit_text(out, &text)?;
        return Ok(0);
    }
    let n = a.n.ok_or_else(|| Error::Parse("--n is required".into()))?;
    let complexity = a.complexity.unwrap_or(3 * n);
    let mut text = String::new();
    let mut factors = Vec::with_capacity(a.count);
    for idx in 0..a.count {
        let seed = a.seed.wrapping_add(idx as u64);
        let (m, f) = gen_tnn(n, seed, complexity)?;
        let config = json!({
            "command": "gen tnn",
            "n": n,
            "seed": seed,
            "complexity": complexity,
            "index": idx,
            "count": a.count,
            "out": out_name(out),
        });
        if idx > 0 {
            text.push('\n');
        }
        text.push_str(&config_line(&config)?);
        text.push_str(&m.to_csv());
        factors.push(f);
    }
    emit_text(out, &text)?;
    if let Some(fp) = &a.factors_out {
        let doc = if a.count == 1 {
            serde_json::to_string_pretty(&factors[0])?
        } else {
            serde_json::to_string_pretty(&factors)?
        };
        std::fs::write(fp, doc + "\n")?;
    }
    Ok(0)
}

fn run_certify(cmd: CertifyCmd, out: &Option<PathBuf>) -> Result<i32> {
    let (config, doc, trials, verified) = match cmd {
        CertifyCmd::TwoRowTl(a) => {
            let cert = two_row_tl_certificate(a.n, a.k, a.trials, a.seed)?;
            let config = json!({
                "command": "certify two-row-tl",
                "n": a.n,
                "k": a.k,
                "trials": a.trials,
                "seed": a.seed,
                "out": out_name(out),
            });
            let verified = cert.all_nonnegative && cert.identity.as_ref().is_some_and(|c| c.passed);
            (config, serde_json::to_value(&cert)?, a.trials, verified)
        }
        CertifyCmd::TwoRowMonomial(a) => {
            let cert = two_row_monomial_certificate(a.n, a.k, a.trials, a.seed)?;
            let config = json!({
                "command": "certify two-row-monomial",
                "n": a.n,
                "k": a.k,
                "trials": a.trials,
                "seed": a.seed,
                "out": out_name(out),
            });
            let verified = cert.all_nonnegative && cert.identity.as_ref().is_some_and(|c| c.passed);
            (config, serde_json::to_value(&cert)?, a.trials, verified)
        }
        CertifyCmd::Bj {
            lambda,
            mu,
            trials,
            seed,
        } => {
            let l = parse_partition(&lambda)?;
            let m = parse_partition(&mu)?;
            // The library builds chains from the majorization-lower shape up;
            // accept the pair in either orientation and sort it out here.
            let (upper, lower) = if majorization_leq(&l, &m)? {
                (m.clone(), l.clone())
            } else {
                (l.clone(), m.clone())
            };
            let cert = bj_certificate(&upper, &lower, trials, seed)?;
            let config = json!({
                "command": "certify bj",
                "lambda": l,
                "mu": m,
                "trials": trials,
                "seed": seed,
                "out": out_name(out),
            });
            let verified = cert.identity.as_ref().is_some_and(|c| c.passed);
            (config, serde_json::to_value(&cert)?, trials, verified)
        }
    };
    emit_json(out, config, doc)?;
    if trials == 0 {
        eprintln!("note: certificate built but unverified (trials = 0)");
    }
    Ok(if verified { 0 } else { 1 })
}

fn run_verify(cmd: VerifyCmd, out: &Option<PathBuf>) -> Result<i32> {
    match cmd {
        VerifyCmd::Fischer(a) => {
            if let Some(path) = &a.matrix_file {
                let m = load_matrix(path)?;
                let report = fischer_check(&m)?;
                let config = json!({
                    "command": "verify fischer",
                    "matrixFile": path.display().to_string(),
                    "seed": null,
                    "out": out_name(out),
                });
                let code = i32::from(!report.ok);
                emit_json(out, config, serde_json::to_value(&report)?)?;
                return Ok(code);
            }
            let n = a.n.ok_or_else(|| Error::Parse("--n is required".into()))?;
            let complexity = a.complexity.unwrap_or(3 * n);
            let rows: Vec<(u64, bool, Option<Rat>, Option<usize>)> = (0..a.matrices)
                .into_par_iter()
                .map(|i| {
                    let seed = a.seed.wrapping_add(i as u64);
                    let (m, _) = gen_tnn(n, seed, complexity)?;
                    let report = fischer_check(&m)?;
                    let margin = report
                        .averages
                        .windows(2)
                        .map(|w| w[1].clone() - w[0].clone())
                        .min();
                    Ok((seed, report.ok, margin, report.violation))
                })
                .collect::<Result<_>>()?;
            let all_ok = rows.iter().all(|r| r.1);
            let mut tightest: Option<(Rat, u64)> = None;
            for (seed, _, margin, _) in &rows {
                if let Some(m) = margin {
                    if tightest.as_ref().map_or(true, |(t, _)| m < t) {
                        tightest = Some((m.clone(), *seed));
                    }
                }
            }
            let config = json!({
                "command": "verify fischer",
                "n": n,
                "matrices": a.matrices,
                "seed": a.seed,
                "complexity": complexity,
                "out": out_name(out),
            });
            let result = json!({
                "n": n,
                "ok": all_ok,
                "rows": rows.iter().map(|(seed, ok, margin, violation)| json!({
                    "seed": seed,
                    "ok": ok,
                    "minMargin": margin.as_ref().map(rat_to_string),
                    "violation": violation,
                })).collect::<Vec<_>>(),
                "tightest": tightest.map(|(m, s)| json!({
                    "seed": s,
                    "margin": rat_to_string(&m),
                })),
            });
            emit_json(out, config, result)?;
            Ok(i32::from(!all_ok))
        }
        VerifyCmd::Bj(a) => {
            if let Some(path) = &a.matrix_file {
                let m = load_matrix(path)?;
                let l = match &a.lambda {
                    Some(s) => parse_partition(s)?,
                    None => return Err(Error::Parse("--matrix-file needs --lambda".into())),
                };
                let mu = match &a.mu {
                    Some(s) => parse_partition(s)?,
                    None => return Err(Error::Parse("--matrix-file needs --mu".into())),
                };
                let report = bj_check(&l, &mu, &m)?;
                let config = json!({
                    "command": "verify bj",
                    "matrixFile": path.display().to_string(),
                    "lambda": l,
                    "mu": mu,
                    "seed": null,
                    "out": out_name(out),
                });
                let code = i32::from(!report.ok);
                emit_json(out, config, serde_json::to_value(&report)?)?;
                return Ok(code);
            }
            let n = a.n.ok_or_else(|| Error::Parse("--n is required".into()))?;
            let complexity = a.complexity.unwrap_or(3 * n);
            let shapes = partitions_of(n);
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for (i, lo) in shapes.iter().enumerate() {
                for (j, hi) in shapes.iter().enumerate() {
                    if i != j && majorization_leq(lo, hi)? {
                        pairs.push((i, j));
                    }
                }
            }
            type BjRow = (u64, bool, Option<(Rat, usize, usize)>);
            let rows: Vec<BjRow> = (0..a.matrices)
                .into_par_iter()
                .map(|idx| {
                    let seed = a.seed.wrapping_add(idx as u64);
                    let (m, _) = gen_tnn(n, seed, complexity)?;
                    let sides: Vec<Rat> = shapes
                        .iter()
                        .map(|p| bj_side(p, &m))
                        .collect::<Result<_>>()?;
                    let mut ok = true;
                    let mut min_margin: Option<(Rat, usize, usize)> = None;
                    for &(i, j) in &pairs {
                        // lower shape i, upper shape j: the lower side dominates
                        let margin = sides[i].clone() - sides[j].clone();
                        if margin < rat_zero() {
                            ok = false;
                        }
                        if min_margin.as_ref().map_or(true, |(m, _, _)| &margin < m) {
                            min_margin = Some((margin, i, j));
                        }
                    }
                    Ok((seed, ok, min_margin))
                })
                .collect::<Result<_>>()?;
            let all_ok = rows.iter().all(|r| r.1);
            let mut tightest: Option<(Rat, u64, usize, usize)> = None;
            for (seed, _, margin) in &rows {
                if let Some((m, i, j)) = margin {
                    if tightest.as_ref().map_or(true, |(t, _, _, _)| m < t) {
                        tightest = Some((m.clone(), *seed, *i, *j));
                    }
                }
            }
            let config = json!({
                "command": "verify bj",
                "n": n,
                "matrices": a.matrices,
                "seed": a.seed,
                "complexity": complexity,
                "out": out_name(out),
            });
            let pair_json = |i: usize, j: usize| json!({"lower": shapes[i], "upper": shapes[j]});
            let result = json!({
                "n": n,
                "shapes": shapes,
                "comparablePairs": pairs.len(),
                "ok": all_ok,
                "rows": rows.iter().map(|(seed, ok, margin)| json!({
                    "seed": seed,
                    "ok": ok,
                    "minMargin": margin.as_ref().map(|(m, _, _)| rat_to_string(m)),
                    "tightestPair": margin.as_ref().map(|(_, i, j)| pair_json(*i, *j)),
                })).collect::<Vec<_>>(),
                "tightest": tightest.map(|(m, s, i, j)| json!({
                    "seed": s,
                    "margin": rat_to_string(&m),
                    "pair": pair_json(i, j),
                })),
            });
            emit_json(out, config, result)?;
            Ok(i32::from(!all_ok))
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad integer {t:?}: {e}")))
        })
        .collect()
}

fn parse_partition(s: &str) -> Result<Partition> {
    Ok(Partition::from_unsorted(parse_list(s)?))
}

fn load_matrix(path: &Path) -> Result<RatMatrix> {
    Matrix::from_csv(&std::fs::read_to_string(path)?)
}

fn rat_zero() -> Rat {
    Rat::from_integer(Int::from(0))
}

fn diagram_text(d: &Diagram) -> String {
    d.edges()
        .iter()
        .map(|(a, b)| format!("({a},{b})"))
        .collect()
}

fn out_name(out: &Option<PathBuf>) -> Option<String> {
    out.as_ref().map(|p| p.display().to_string())
}

fn config_line(config: &serde_json::Value) -> Result<String> {
    Ok(format!("# {}\n", serde_json::to_string(config)?))
}

/// Write to stdout, treating a closed pipe (e.g. `... | head`) as a normal
/// end of output rather than an error.
fn write_stdout(text: &str) -> Result<()> {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    match stdout
        .write_all(text.as_bytes())
        .and_then(|()| stdout.flush())
    {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        other => Ok(other?),
    }
}

fn emit_text(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => write_stdout(text)?,
    }
    Ok(())
}

fn emit_json(
    out: &Option<PathBuf>,
    config: serde_json::Value,
    result: serde_json::Value,
) -> Result<()> {
    let doc = serde_json::to_string_pretty(&json!({"config": config, "result": result}))?;
    match out {
        Some(p) => std::fs::write(p, doc + "\n")?,
        None => write_stdout(&(doc + "\n"))?,
    }
    Ok(())
}

/// Bare values print plainly to stdout; written to a file they are wrapped
/// in the config envelope so the artifact records its provenance.
fn emit_value(out: &Option<PathBuf>, config: serde_json::Value, value: &str) -> Result<()> {
    match out {
        Some(_) => emit_json(out, config, json!(value)),
        None => write_stdout(&format!("{value}\n")),
    }
}
