use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use oddlength::gf::{
    factored_display, family_checks, predicted_gf_with, standard_suite, CForm, Check, VerifyReport,
};
use oddlength::perm::{classify, compute_statistic, is_good_chessboard};
use oddlength::{
    build_root_system, predicted_multivariate, run_partitioned, verify, CartanType, Error, Family,
    GfRequest, GfResult, Restriction, RunOptions, SignedPermutation, StatProfile, StatisticId,
    TheoremId, WeylElement,
};

#[derive(Parser)]
#[command(
    name = "oddlength",
    version,
    about = "Odd length statistics on Weyl groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots in canonical order.
    Roots {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate every statistic on a window.
    Stats {
        #[command(flatten)]
        ty: TypeArg,
        /// 1-based window, e.g. "3,-1,-4,-2,5".
        #[arg(long, allow_hyphen_values = true)]
        window: String,
    },
    /// Compute a signed generating function.
    Gf {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, default_value = "odd-length")]
        profile: String,
        #[arg(long)]
        restrict: Option<String>,
        /// Worker threads for partitioned runs.
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long, requires = "checkpoint")]
        resume: bool,
        /// Stop after this many parts; the result is then partial.
        #[arg(long)]
        max_parts: Option<usize>,
        /// Allow groups larger than the default element budget.
        #[arg(long)]
        allow_large: bool,
        /// Print only the polynomial as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Compare computed generating functions with their closed forms.
    Verify {
        /// A family letter (`C`) or a type (`E6`); without it the full
        /// suite runs.
        #[arg(long = "type")]
        target: Option<String>,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Use the printed type C product instead of the derived one.
        #[arg(long)]
        paper_literal: bool,
    },
}

#[derive(Args)]
struct TypeArg {
    /// Cartan type such as `B5` or `E8`.
    #[arg(long = "type", conflicts_with_all = ["family", "rank"])]
    name: Option<String>,
    #[arg(long, requires = "rank")]
    family: Option<String>,
    #[arg(long, requires = "family")]
    rank: Option<usize>,
}

impl TypeArg {
    fn resolve(&self) -> Result<CartanType, Failure> {
        match (&self.name, &self.family, self.rank) {
            (Some(n), _, _) => Ok(n.parse()?),
            (None, Some(f), Some(r)) => {
                let fam = f
                    .trim()
                    .chars()
                    .next()
                    .and_then(Family::from_letter)
                    .filter(|_| f.trim().len() == 1)
                    .ok_or_else(|| Error::UnknownType(f.clone()))?;
                Ok(CartanType::new(fam, r)?)
            }
            _ => Err(Failure::Usage(
                "give --type or both --family and --rank".into(),
            )),
        }
    }
}

enum Failure {
    Usage(String),
    Mismatch,
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. }
        | Error::Io(_)
        | Error::WorkerFailure { .. }
        | Error::CheckpointCorrupt(_)
        | Error::Overflow
        | Error::NonTerminating(_) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match cli.command {
        Command::Roots { ty, json } => roots(&ty, json),
        Command::Stats { ty, window } => stats(&ty, &window),
        Command::Gf {
            ty,
            profile,
            restrict,
            threads,
            checkpoint,
            resume,
            max_parts,
            allow_large,
            json,
        } => ty.resolve().and_then(|t| {
            let run = GfRun {
                ctype: t,
                profile: profile.parse()?,
                restriction: restrict.as_deref().map(str::parse).transpose()?,
                threads,
                checkpoint,
                resume,
                max_parts,
                allow_large,
            };
            gf(run, json)
        }),
        Command::Verify {
            target,
            max_n,
            paper_literal,
        } => verify_cmd(target.as_deref(), max_n, paper_literal),
    };
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn roots(ty: &TypeArg, json: bool) -> Result<(), Failure> {
    let t = ty.resolve()?;
    let rs = build_root_system(t)?;
    if json {
        let list: Vec<_> = rs
            .roots()
            .iter()
            .enumerate()
            .map(|(k, r)| {
                serde_json::json!({
                    "index": k,
                    "coords": r.coords(),
                    "height": r.height(),
                    "odd": rs.is_odd(k),
                })
            })
            .collect();
        let doc = serde_json::json!({
            "type": t.to_string(),
            "rank": t.rank(),
            "num_positive_roots": rs.num_positive_roots(),
            "num_odd_roots": rs.num_odd_roots(),
            "roots": list,
        });
        println!("{doc}");
        return Ok(());
    }
    println!(
        "{t}: {} positive roots, {} of odd height",
        rs.num_positive_roots(),
        rs.num_odd_roots()
    );
    for (k, r) in rs.roots().iter().enumerate() {
        let coords: Vec<String> = r.coords().iter().map(|c| c.to_string()).collect();
        println!(
            "{k:>4}  [{}]  height {}{}",
            coords.join(","),
            r.height(),
            if rs.is_odd(k) { "  odd" } else { "" }
        );
    }
    Ok(())
}

fn stats(ty: &TypeArg, window: &str) -> Result<(), Failure> {
    let t = ty.resolve()?;
    let w: SignedPermutation = window.parse()?;
    println!("window {w}");
    for s in StatisticId::ALL {
        println!("  {:<6} {}", s.name(), compute_statistic(s, &w));
    }
    let c = classify(&w);
    println!("  unimodal     {}", c.unimodal);
    println!("  chessboard   {}", c.chessboard);
    if w.is_d_valid() {
        println!("  good chessboard  {}", is_good_chessboard(&w)?);
    }
    if t.is_classical() {
        let rs = build_root_system(t)?;
        let e = WeylElement::from_window(&rs, &w)?;
        println!(
            "in {t}: length {}, odd length {}",
            e.length(),
            e.odd_length(&rs)?
        );
    }
    Ok(())
}

struct GfRun {
    ctype: CartanType,
    profile: StatProfile,
    restriction: Option<Restriction>,
    threads: Option<usize>,
    checkpoint: Option<PathBuf>,
    resume: bool,
    max_parts: Option<usize>,
    allow_large: bool,
}

impl GfRun {
    fn wants_partitioned(&self) -> bool {
        self.threads.is_some()
            || self.checkpoint.is_some()
            || self.max_parts.is_some()
            || (self.profile == StatProfile::OddLength && !self.ctype.is_classical())
    }

    fn compute(&self) -> Result<GfResult, Failure> {
        let restriction = self.restriction.unwrap_or(Restriction::Full);
        if self.wants_partitioned() {
            if self.profile != StatProfile::OddLength || restriction != Restriction::Full {
                if self.checkpoint.is_some() || self.max_parts.is_some() || self.threads.is_some() {
                    return Err(Failure::Usage(
                        "--threads, --checkpoint and --max-parts need the full odd-length profile"
                            .into(),
                    ));
                }
            } else {
                let opts = RunOptions {
                    workers: self.threads.unwrap_or(0),
                    checkpoint: self.checkpoint.clone(),
                    resume: self.resume,
                    max_parts: self.max_parts,
                    allow_large: self.allow_large,
                    ..RunOptions::default()
                };
                return Ok(run_partitioned(self.ctype, self.profile, &opts)?);
            }
        }
        let mut req = GfRequest::new(self.ctype, self.profile).restrict(restriction);
        if self.allow_large {
            req = req.budget(u64::MAX);
        }
        Ok(req.run()?)
    }
}

fn theorem_for(profile: StatProfile, ctype: CartanType) -> Option<TheoremId> {
    TheoremId::ALL
        .into_iter()
        .find(|id| id.profile() == profile && id.family() == ctype.family())
}

fn gf(run: GfRun, json: bool) -> Result<(), Failure> {
    let r = run.compute()?;
    if json {
        println!("{}", r.poly.to_json());
        if !r.is_complete() {
            eprintln!(
                "partial result: {} of {} parts",
                r.parts_done, r.parts_total
            );
        }
        return Ok(());
    }
    let t = r.ctype;
    println!("{t}  profile {}  restriction {}", r.profile, r.restriction);
    println!(
        "|W| = {}  method {:?}  {:.3} s",
        r.group_order,
        r.method,
        r.elapsed.as_secs_f64()
    );
    if !r.is_complete() {
        println!(
            "partial: {} of {} parts done; resume with --checkpoint and --resume",
            r.parts_done, r.parts_total
        );
    }
    println!("computed   = {}", r.poly);
    if !r.is_complete() {
        return Ok(());
    }
    if r.profile == StatProfile::OddLength {
        if let (Ok(f), Ok(p)) = (
            factored_display(t, CForm::Derived),
            predicted_gf_with(t, CForm::Derived),
        ) {
            println!("predicted  = {f}");
            println!("           = {p}");
            println!(
                "{}",
                if p == r.poly {
                    "matches prediction"
                } else {
                    "DIFFERS from prediction"
                }
            );
            if t.family() == Family::C {
                let lit = factored_display(t, CForm::Printed)?;
                let lp = predicted_gf_with(t, CForm::Printed)?;
                if lp != r.poly {
                    println!(
                        "note: the printed type C product {lit} does not match the enumeration;"
                    );
                    println!("      the prediction above is the specialization of the four-variable B identity");
                }
            }
        }
    } else if let Some(id) = theorem_for(r.profile, t) {
        if let Ok(p) = predicted_multivariate(id, t.rank()) {
            println!("predicted  = {p}");
            println!(
                "{}",
                if p == r.poly {
                    "matches prediction"
                } else {
                    "DIFFERS from prediction"
                }
            );
        }
    }
    Ok(())
}

fn verify_cmd(target: Option<&str>, max_n: usize, paper_literal: bool) -> Result<(), Failure> {
    let form = if paper_literal {
        CForm::Printed
    } else {
        CForm::Derived
    };
    let checks: Vec<Check> = match target {
        None => {
            let mut all = standard_suite()?;
            if paper_literal {
                for c in &mut all {
                    if let Check::OddLength { ctype, form: f } = c {
                        if ctype.family() == Family::C {
                            *f = CForm::Printed;
                        }
                    }
                }
            }
            all
        }
        Some(s) if s.trim().len() == 1 => {
            let fam = s
                .trim()
                .chars()
                .next()
                .and_then(Family::from_letter)
                .ok_or_else(|| Error::UnknownType(s.into()))?;
            if !matches!(fam, Family::A | Family::B | Family::C | Family::D) {
                return Err(Failure::Usage(format!(
                    "family {s} has a single type per rank; name it, e.g. --type {s}4"
                )));
            }
            family_checks(fam, max_n, form)?
        }
        Some(s) => vec![Check::OddLength {
            ctype: s.parse()?,
            form,
        }],
    };
    let mut failed = 0;
    for c in &checks {
        let r: VerifyReport = verify(c)?;
        if !r.pass {
            failed += 1;
        }
        println!("{r}");
    }
    println!(
        "{} checks, {} passed, {} failed",
        checks.len(),
        checks.len() - failed,
        failed
    );
    if failed > 0 {
        return Err(Failure::Mismatch);
    }
    Ok(())
}
