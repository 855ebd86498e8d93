//! Command-line frontend for the `tabula` library.

use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use tabula::coxeter::{CoxeterGroup, CoxeterType};
use tabula::embed::{self, Embedding, Variant};
use tabula::tabular::{TabularDatum, DEFAULT_EXHAUSTIVE_CAP};
use tabula::tl::TLContext;
use tabula::{Error, PlanarContext, PlanarElement, TableAlgebra, VerlindeAlgebra};

/// Environment variable capping the size of exhaustive enumerations.
const CAP_VAR: &str = "TABULA_MAX_EXHAUSTIVE";
const DEFAULT_BASIS_CAP: u128 = 1_000_000;

#[derive(Parser)]
#[command(
    name = "tabula",
    version,
    about = "Exact computations with diagram algebras and Temperley-Lieb quotients"
)]
struct Cli {
    /// Output format: human-readable text or one key=value record per line.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Args)]
struct ContextArgs {
    /// Number of strands.
    #[arg(long)]
    n: usize,
    /// Use the Verlinde algebra V_r as coefficients.
    #[arg(long, value_name = "R", conflicts_with = "algebra")]
    verlinde: Option<usize>,
    /// Read the coefficient table algebra from a file.
    #[arg(long, value_name = "FILE")]
    algebra: Option<String>,
}

impl ContextArgs {
    fn build(&self) -> Result<PlanarContext> {
        match (&self.verlinde, &self.algebra) {
            (Some(r), None) => {
                if *r == 0 {
                    bail!(Error::InvalidArgument("--verlinde needs r >= 1".into()));
                }
                Ok(PlanarContext::verlinde(self.n, *r))
            }
            (None, Some(path)) => {
                let text =
                    std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
                let alg: TableAlgebra = text.parse()?;
                Ok(PlanarContext::new(self.n, alg)?)
            }
            _ => bail!(Error::InvalidArgument(
                "give exactly one of --verlinde or --algebra".into()
            )),
        }
    }
}

#[derive(Args)]
struct GroupArgs {
    /// Coxeter type: A, B, H or I (also accepts forms like B3 or I2(5)).
    #[arg(long = "type", value_name = "X")]
    ty: String,
    /// Rank for types A, B and H.
    #[arg(long)]
    rank: Option<usize>,
    /// Bond label for type I.
    #[arg(long)]
    m: Option<usize>,
    /// Admit H4 and larger ranks of A and B.
    #[arg(long)]
    allow_large: bool,
}

impl GroupArgs {
    fn coxeter_type(&self) -> Result<CoxeterType> {
        let letter = self.ty.trim().to_ascii_uppercase();
        let ty = match (letter.as_str(), self.rank, self.m) {
            ("A", Some(k), None) => CoxeterType::A(k),
            ("B", Some(k), None) => CoxeterType::B(k),
            ("H", Some(k), None) => CoxeterType::H(k),
            ("I", _, Some(m)) => CoxeterType::I(m),
            (l, None, None) if l.len() > 1 => self.ty.parse()?,
            (l, _, _) if !["A", "B", "H", "I"].contains(&l) => {
                bail!(Error::UnsupportedType(self.ty.clone()))
            }
            _ => bail!(Error::InvalidArgument(format!(
                "--type {} needs {}",
                self.ty,
                if letter == "I" { "--m" } else { "--rank" }
            ))),
        };
        Ok(ty)
    }

    fn tl(&self) -> Result<TLContext> {
        let group = CoxeterGroup::build(self.coxeter_type()?, self.allow_large)?;
        Ok(TLContext::new(group.into())?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the Verlinde algebra V_r in table algebra file format.
    Verlinde {
        #[arg(value_name = "R", required_unless_present = "r_flag")]
        r: Option<usize>,
        #[arg(long = "r", value_name = "R")]
        r_flag: Option<usize>,
    },
    /// List the canonical basis of P_n.
    Basis(ContextArgs),
    /// List the exposed basis diagrams.
    Dbasis(ContextArgs),
    /// Multiply two elements.
    Mul {
        #[command(flatten)]
        ctx: ContextArgs,
        /// Left factor: a file path or inline text (terms separated by newlines or ';').
        #[arg(allow_hyphen_values = true)]
        x: String,
        /// Right factor.
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Apply the anti-involution.
    Star {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Closure trace and normalized trace.
    Trace {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Apply the relabeling automorphism of transitional edges (Verlinde only).
    Omega {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Check the tabular axioms for P_n.
    Axioms(ContextArgs),
    /// Canonical basis of TL(X) in the t~ basis.
    Tlbasis(GroupArgs),
    /// Embedding of TL(X) into a diagram algebra.
    Embed {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value = "uniform")]
        variant: String,
    },
    /// Images of the Kazhdan-Lusztig basis under the uniform embedding.
    Conjecture(GroupArgs),
    /// Ranks of the exposed subalgebra for n = 1..nmax.
    Drank {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        nmax: usize,
    },
    /// Run every acceptance check.
    Selftest,
}

fn cap() -> u128 {
    std::env::var(CAP_VAR)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_BASIS_CAP)
}

fn guard(ctx: &PlanarContext) -> Result<()> {
    let (needed, cap) = (ctx.basis_size(), cap());
    if needed > cap {
        bail!(Error::Budget {
            what: format!("basis of P_{}", ctx.n()),
            needed,
            cap
        });
    }
    Ok(())
}

/// Inline text or the contents of an existing file.
fn read_element(ctx: &PlanarContext, arg: &str) -> Result<PlanarElement> {
    let text = if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    } else {
        arg.to_string()
    };
    let x: PlanarElement = text.parse()?;
    for (d, _) in x.terms() {
        if d.n() != ctx.n() {
            bail!(Error::StrandMismatch(ctx.n(), d.n()));
        }
        d.validate(ctx.algebra())?;
    }
    Ok(x)
}

fn element_out(out: &mut String, fmt: Format, x: &PlanarElement) {
    match fmt {
        Format::Text => {
            let _ = writeln!(out, "{x}");
        }
        Format::Kv => {
            if x.is_zero() {
                let _ = writeln!(out, "coeff=0");
            }
            for (d, c) in x.terms() {
                let _ = writeln!(out, "coeff={c} diagram={d}");
            }
        }
    }
}

/// Runs a command, returning its output and whether all verifications passed.
fn run(cli: &Cli) -> Result<(String, bool)> {
    let fmt = cli.format;
    let mut out = String::new();
    let mut ok = true;
    match &cli.command {
        Command::Verlinde { r, r_flag } => {
            let r = r.or(*r_flag).unwrap_or(0);
            if r == 0 {
                bail!(Error::InvalidArgument("r must be at least 1".into()));
            }
            out.push_str(&VerlindeAlgebra::new(r).algebra().to_text());
        }
        Command::Basis(c) | Command::Dbasis(c) => {
            let ctx = c.build()?;
            guard(&ctx)?;
            let list = if matches!(cli.command, Command::Basis(_)) {
                ctx.basis()
            } else {
                ctx.d_basis()
            };
            for d in &list {
                match fmt {
                    Format::Text => writeln!(out, "{d}")?,
                    Format::Kv => writeln!(out, "diagram={d}")?,
                }
            }
            if fmt == Format::Kv {
                writeln!(out, "count={}", list.len())?;
            }
        }
        Command::Mul { ctx, x, y } => {
            let ctx = ctx.build()?;
            let (x, y) = (read_element(&ctx, x)?, read_element(&ctx, y)?);
            element_out(&mut out, fmt, &ctx.mul(&x, &y)?);
        }
        Command::Star { ctx, x } => {
            let ctx = ctx.build()?;
            let x = read_element(&ctx, x)?;
            element_out(&mut out, fmt, &ctx.star(&x));
        }
        Command::Omega { ctx, x } => {
            let ctx = ctx.build()?;
            let x = read_element(&ctx, x)?;
            element_out(&mut out, fmt, &ctx.omega(&x)?);
        }
        Command::Trace { ctx, x } => {
            let ctx = ctx.build()?;
            let (tr, tau) = ctx.trace(&read_element(&ctx, x)?);
            match fmt {
                Format::Text => writeln!(out, "tr: {tr}\ntau: {tau}")?,
                Format::Kv => writeln!(out, "tr={tr}\ntau={tau}")?,
            }
        }
        Command::Axioms(c) => {
            let ctx = c.build()?;
            guard(&ctx)?;
            let cap = std::env::var(CAP_VAR)
                .ok()
                .and_then(|s| s.parse().ok())
                .unwrap_or(DEFAULT_EXHAUSTIVE_CAP);
            let report = TabularDatum::build(&ctx).check_axioms(cap);
            ok = report.all_pass();
            match fmt {
                Format::Text => write!(out, "{report}")?,
                Format::Kv => {
                    for (name, pass) in [
                        ("A1", report.a1),
                        ("A2", report.a2),
                        ("A3", report.a3),
                        ("A4", report.a4),
                        ("A5", report.a5),
                        ("a_function", report.a_function_matches),
                    ] {
                        writeln!(out, "axiom={name} pass={pass}")?;
                    }
                    writeln!(out, "exhaustive={}", report.exhaustive)?;
                }
            }
        }
        Command::Tlbasis(g) => {
            let tl = g.tl()?;
            let grp = tl.group();
            for &w in tl.wc() {
                let c = tl.to_tilde(tl.c(w)?);
                match fmt {
                    Format::Text => {
                        let terms: Vec<String> = c
                            .terms()
                            .rev()
                            .map(|(y, p)| format!("({p}) t~[{}]", grp.format_word(y)))
                            .collect();
                        writeln!(out, "c[{}] = {}", grp.format_word(w), terms.join(" + "))?;
                    }
                    Format::Kv => {
                        for (y, p) in c.terms().rev() {
                            writeln!(
                                out,
                                "w={} y={} coeff={p}",
                                grp.format_word(w),
                                grp.format_word(y)
                            )?;
                        }
                    }
                }
            }
            let mism = tl.oracle_mismatches();
            let fails = tl.canonical_failures();
            ok = mism.is_empty() && fails.is_empty();
            match fmt {
                Format::Text => writeln!(
                    out,
                    "rank: {}\ncross-check with projected KL basis: {}",
                    tl.rank(),
                    if ok { "agree" } else { "DISAGREE" }
                )?,
                Format::Kv => writeln!(out, "rank={}\noracle_agrees={ok}", tl.rank())?,
            }
        }
        Command::Embed { group, variant } => {
            let variant: Variant = variant.parse()?;
            let tl = group.tl()?;
            let emb = Embedding::build(&tl, variant)?;
            let ctx = emb.context();
            let grp = tl.group();
            let rel = emb.relation_failures();
            let hom = emb.homomorphism_failures();
            let set = embed::flavor_of(variant)
                .map(|f| embed::admissible(f, ctx))
                .transpose()?;
            let bij = emb.bijection(set.as_deref());
            ok = rel.is_empty() && hom.is_empty() && bij.pass();
            let r = ctx.algebra().rank();
            match fmt {
                Format::Text => {
                    writeln!(
                        out,
                        "source: {}  target: P({}, {})  variant: {variant}",
                        grp.coxeter_type(),
                        ctx.n(),
                        r
                    )?;
                    for (s, d) in emb.generator_images().iter().enumerate() {
                        writeln!(out, "rho(b{}) = {d}", s + 1)?;
                    }
                    writeln!(
                        out,
                        "relations: {}",
                        if rel.is_empty() {
                            "ok".to_string()
                        } else {
                            rel.join(", ")
                        }
                    )?;
                    writeln!(
                        out,
                        "homomorphism on canonical pairs: {}",
                        if hom.is_empty() {
                            "ok".to_string()
                        } else {
                            format!("{} failures", hom.len())
                        }
                    )?;
                    for (w, d) in &bij.map {
                        writeln!(out, "c[{}] -> {d}", grp.format_word(*w))?;
                    }
                    let expected = bij
                        .expected_count
                        .map_or("n/a".to_string(), |c| c.to_string());
                    writeln!(
                        out,
                        "|W_c| = {}  images = {}  admissible = {expected}",
                        tl.rank(),
                        bij.map.len()
                    )?;
                    for p in &bij.problems {
                        writeln!(out, "problem: {p}")?;
                    }
                }
                Format::Kv => {
                    for (w, d) in &bij.map {
                        writeln!(out, "w={} diagram={d}", grp.format_word(*w))?;
                    }
                    writeln!(
                        out,
                        "wc={} images={} relations_ok={} homomorphism_ok={} bijection_ok={}",
                        tl.rank(),
                        bij.map.len(),
                        rel.is_empty(),
                        hom.is_empty(),
                        bij.pass()
                    )?;
                }
            }
        }
        Command::Conjecture(g) => {
            let tl = g.tl()?;
            let rep = embed::conjecture_check(&tl)?;
            let grp = tl.group();
            ok = rep.pass();
            for (w, img) in rep.images.iter().enumerate() {
                let shown = match img.as_single() {
                    Some((d, c)) if c.is_one() => d.to_string(),
                    _ if img.is_zero() => "0".to_string(),
                    _ => img.to_string().replace('\n', "; "),
                };
                match fmt {
                    Format::Text => writeln!(out, "rho(C'[{}]) = {shown}", grp.format_word(w))?,
                    Format::Kv => writeln!(out, "w={} image={shown}", grp.format_word(w))?,
                }
            }
            match fmt {
                Format::Text => writeln!(
                    out,
                    "nonzero: {}  zero-or-single: {}  injective: {}  exposed: {}  agrees with quotient: {}\nverdict: {}",
                    rep.nonzero,
                    rep.all_zero_or_single,
                    rep.injective,
                    rep.canonical,
                    rep.agrees_with_quotient,
                    if ok { "pass" } else { "FAIL" }
                )?,
                Format::Kv => writeln!(out, "nonzero={} pass={ok}", rep.nonzero)?,
            }
        }
        Command::Drank { r, nmax } => {
            if *r == 0 || *nmax == 0 {
                bail!(Error::InvalidArgument(
                    "--r and --nmax must be positive".into()
                ));
            }
            let seq = embed::drank_sequence(*r, *nmax, cap().max(embed::DEFAULT_DRANK_CAP))?;
            match fmt {
                Format::Text => writeln!(
                    out,
                    "{}",
                    seq.iter()
                        .map(u128::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                )?,
                Format::Kv => {
                    for (i, x) in seq.iter().enumerate() {
                        writeln!(out, "r={r} n={} rank={x}", i + 1)?;
                    }
                }
            }
        }
        Command::Selftest => {
            for o in tabula::acceptance::all() {
                ok &= o.pass;
                match fmt {
                    Format::Text => writeln!(out, "{o}")?,
                    Format::Kv => writeln!(out, "criterion={} pass={}", o.id, o.pass)?,
                }
            }
        }
    }
    Ok((out, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::Verification(_)) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
