use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sigmanil::classify::SubnormalVariant;
use sigmanil::theorems::Theorem;
use sigmanil::Limits;
use sigmanil_cli::report::Report;
use sigmanil_cli::{sigma_spec, CliError};

#[derive(Parser)]
#[command(
    name = "sigmanil",
    version,
    about = "σ-nilpotency analysis of explicit finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Classic,
    Sigma,
}

impl From<Variant> for SubnormalVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Classic => SubnormalVariant::Classic,
            Variant::Sigma => SubnormalVariant::Sigma,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    A,
    B,
}

#[derive(clap::Args)]
struct Caps {
    /// Largest group order accepted.
    #[arg(long)]
    max_order: Option<usize>,
    /// Largest subgroup lattice accepted.
    #[arg(long)]
    max_subgroups: Option<usize>,
}

impl Caps {
    fn limits(&self) -> Limits {
        let mut l = Limits::default();
        if let Some(n) = self.max_order {
            l.max_order = n;
        }
        if let Some(n) = self.max_subgroups {
            l.max_subgroups = n;
        }
        l
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify one group and report F_σ, Z_σ, the residual, Hall and Carter subgroups.
    Analyze {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        sigma: String,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Print witness subgroups.
        #[arg(long)]
        witnesses: bool,
        #[arg(long, value_enum, default_value = "classic")]
        subnormal_variant: Variant,
        #[command(flatten)]
        caps: Caps,
    },
    /// Check every clause of a structure theorem on one group.
    Verify {
        #[arg(long, value_enum, ignore_case = true)]
        theorem: TheoremArg,
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "classic")]
        subnormal_variant: Variant,
        #[command(flatten)]
        caps: Caps,
    },
    /// Analyze every fixture in a directory.
    Scan {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long)]
        sigma: String,
        /// Write the JSON atlas here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "classic")]
        subnormal_variant: Variant,
        #[command(flatten)]
        caps: Caps,
    },
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    std::fs::write(path, text).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn print_summary(r: &Report, witnesses: bool) {
    let mut out = String::new();
    let f = &r.flags;
    _ = writeln!(out, "group      {} (order {})", r.group.name, r.group.order);
    _ = writeln!(out, "sigma      {}", r.sigma);
    _ = writeln!(
        out,
        "flags      sigma_nilpotent={} nilpotent={} semi={} weak={} ({} subnormality; other variant weak={})",
        f.sigma_nilpotent, f.nilpotent, f.semi, f.weak, r.subnormal_variant, f.weak_other_variant
    );
    let s = &r.subgroups;
    _ = writeln!(
        out,
        "orders     F_σ={} Z_σ={} residual={} F={}",
        s.f_sigma_order, s.z_sigma_order, s.residual_order, s.fitting_order
    );
    match &s.hall {
        Some(h) => {
            let parts: Vec<String> = h
                .iter()
                .map(|e| format!("{}:{}{}", e.block, e.order, if e.normal { "(normal)" } else { "" }))
                .collect();
            _ = writeln!(out, "hall       {}", parts.join(" "));
        }
        None => _ = writeln!(out, "hall       none"),
    }
    let carter: Vec<String> = s
        .carter
        .iter()
        .map(|c| format!("order {} ×{}", c.order, c.conjugates))
        .collect();
    _ = writeln!(
        out,
        "carter     {}",
        if carter.is_empty() {
            "none".into()
        } else {
            carter.join(", ")
        }
    );
    if witnesses {
        for w in &r.witnesses {
            _ = writeln!(out, "witness    [{}] {}", w.flag, w.reason);
            _ = writeln!(out, "           A = {:?}", w.subgroup);
            _ = writeln!(out, "           N_G(A) = {:?}", w.normalizer);
        }
    }
    if let Some(h) = &r.hypothesis {
        _ = writeln!(
            out,
            "theorem    {}: hypothesis {} ({})",
            h.theorem,
            if h.holds { "holds" } else { "fails" },
            h.reason
        );
        for c in &r.clauses {
            _ = writeln!(out, "  {:<7} {:<12} {}", c.id, c.verdict, c.detail);
        }
    }
    // a closed pipe is not an error worth reporting
    let _ = std::io::stdout().write_all(out.as_bytes());
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Analyze {
            group,
            sigma,
            json,
            witnesses,
            subnormal_variant,
            caps,
        } => {
            let sigma = sigma_spec::parse(&sigma)?;
            let r = sigmanil_cli::analyze(&group, &sigma, subnormal_variant.into(), &caps.limits())?;
            print_summary(&r, witnesses);
            if let Some(out) = json {
                write_json(&out, &r)?;
            }
            Ok(0)
        }
        Command::Verify {
            theorem,
            group,
            sigma,
            json,
            subnormal_variant,
            caps,
        } => {
            let sigma = sigma_spec::parse(&sigma)?;
            let theorem = match theorem {
                TheoremArg::A => Theorem::A,
                TheoremArg::B => Theorem::B,
            };
            let r = sigmanil_cli::verify(&group, &sigma, theorem, subnormal_variant.into(), &caps.limits())?;
            print_summary(&r, true);
            if let Some(out) = json {
                write_json(&out, &r)?;
            }
            Ok(if r.clauses.iter().any(|c| c.verdict == "fail") {
                1
            } else {
                0
            })
        }
        Command::Scan {
            dir,
            sigma,
            report: out,
            subnormal_variant,
            caps,
        } => {
            let sigma = sigma_spec::parse(&sigma)?;
            let entries = sigmanil_cli::scan(&dir, &sigma, subnormal_variant.into(), &caps.limits())?;
            let mut stdout = std::io::stdout().lock();
            for e in &entries {
                let line = match (&e.report, &e.error) {
                    (Some(r), _) => format!(
                        "{:<40} order {:>5}  σ-nil={:<5} semi={:<5} weak={:<5}{}",
                        e.path,
                        r.group.order,
                        r.flags.sigma_nilpotent,
                        r.flags.semi,
                        r.flags.weak,
                        if e.expectation_failures.is_empty() {
                            String::new()
                        } else {
                            format!("  MISMATCH: {}", e.expectation_failures.join("; "))
                        }
                    ),
                    (None, Some(err)) => format!("{:<40} error: {err}", e.path),
                    (None, None) => format!("{:<40} no result", e.path),
                };
                let _ = writeln!(stdout, "{line}");
            }
            if let Some(out) = out {
                write_json(&out, &entries)?;
            }
            Ok(entries.iter().map(|e| e.exit_code as u8).max().unwrap_or(0))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
