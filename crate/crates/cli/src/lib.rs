//! Input formats and the `analyze`, `verify` and `scan` commands behind the
//! `sigmanil` binary.

pub mod cayley;
pub mod dsl;
pub mod error;
pub mod report;
pub mod sigma_spec;

use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use sigmanil::analysis::Analysis;
use sigmanil::classify::{self, SubnormalVariant};
use sigmanil::theorems::{self, Theorem};
use sigmanil::{Limits, PrimePartition};

pub use error::CliError;
use report::Report;

pub fn analyze(
    path: &Path,
    sigma: &PrimePartition,
    variant: SubnormalVariant,
    limits: &Limits,
) -> Result<Report, CliError> {
    let start = Instant::now();
    let g = dsl::load_group(path, limits)?;
    let an = Analysis::new(&g, sigma.clone(), *limits)?;
    let c = classify::classify_sigma(&an, variant);
    let mut r = report::build(&an, &c)?;
    r.timing_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}

pub fn verify(
    path: &Path,
    sigma: &PrimePartition,
    theorem: Theorem,
    variant: SubnormalVariant,
    limits: &Limits,
) -> Result<Report, CliError> {
    let start = Instant::now();
    let g = dsl::load_group(path, limits)?;
    let an = Analysis::new(&g, sigma.clone(), *limits)?;
    let t = theorems::verify(&an, theorem, variant)?;
    let mut r = report::build(&an, &t.classification)?;
    report::add_theorem(&mut r, &t);
    r.timing_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}

/// `# expect[<σ-spec>]: key=value …` lines in a fixture file. Keys are the
/// boolean report flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub sigma: PrimePartition,
    pub flags: Vec<(String, bool)>,
}

pub fn expectations(text: &str) -> Result<Vec<Expectation>, CliError> {
    let mut out = Vec::new();
    for line in text.lines() {
        let Some(rest) = line.trim().strip_prefix('#').map(str::trim) else {
            continue;
        };
        let Some(rest) = rest.strip_prefix("expect[") else {
            continue;
        };
        let (spec, tail) = rest
            .split_once("]:")
            .ok_or_else(|| CliError::Semantic(format!("malformed expectation '{line}'")))?;
        let mut flags = Vec::new();
        for kv in tail.split_whitespace() {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| CliError::Semantic(format!("malformed expectation '{kv}'")))?;
            let v = match v {
                "true" => true,
                "false" => false,
                _ => {
                    return Err(CliError::Semantic(format!(
                        "expectation value must be true/false: '{kv}'"
                    )))
                }
            };
            flags.push((k.to_string(), v));
        }
        out.push(Expectation {
            sigma: sigma_spec::parse(spec)?,
            flags,
        });
    }
    Ok(out)
}

fn flag_value(r: &Report, key: &str) -> Option<bool> {
    let f = &r.flags;
    Some(match key {
        "sigma_nilpotent" => f.sigma_nilpotent,
        "nilpotent" => f.nilpotent,
        "sigma_soluble" => f.sigma_soluble,
        "semi" => f.semi,
        "weak" => f.weak,
        "weak_other_variant" => f.weak_other_variant,
        _ => return None,
    })
}

/// Mismatches between a report and the expectations for its σ.
pub fn check_expectations(r: &Report, sigma: &PrimePartition, exps: &[Expectation]) -> Vec<String> {
    let mut bad = Vec::new();
    for e in exps.iter().filter(|e| &e.sigma == sigma) {
        for (k, v) in &e.flags {
            match flag_value(r, k) {
                None => bad.push(format!("unknown flag '{k}'")),
                Some(got) if got != *v => bad.push(format!("{k}: expected {v}, got {got}")),
                Some(_) => {}
            }
        }
    }
    bad
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEntry {
    pub path: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub report: Option<Report>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub expectation_failures: Vec<String>,
    #[serde(skip)]
    pub exit_code: i32,
}

pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let rd = std::fs::read_dir(dir).map_err(|e| CliError::Io(dir.to_path_buf(), e))?;
    let mut files: Vec<PathBuf> = rd
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "gdsl" || x == "cayley"))
        .collect();
    files.sort();
    Ok(files)
}

fn scan_one(path: &Path, sigma: &PrimePartition, variant: SubnormalVariant, limits: &Limits) -> ScanEntry {
    let mut entry = ScanEntry {
        path: path.display().to_string(),
        report: None,
        error: None,
        expectation_failures: Vec::new(),
        exit_code: 0,
    };
    let exps = if path.extension().is_some_and(|x| x == "gdsl") {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(path.to_path_buf(), e))
            .and_then(|t| expectations(&t))
    } else {
        Ok(Vec::new())
    };
    match exps.and_then(|exps| analyze(path, sigma, variant, limits).map(|r| (r, exps))) {
        Ok((r, exps)) => {
            entry.expectation_failures = check_expectations(&r, sigma, &exps);
            if !entry.expectation_failures.is_empty() {
                entry.exit_code = 1;
            }
            entry.report = Some(r);
        }
        Err(e) => {
            entry.exit_code = e.exit_code();
            entry.error = Some(e.to_string());
        }
    }
    entry
}

/// Analyzes every `.gdsl` / `.cayley` file in `dir` in parallel; the result
/// is ordered by path.
pub fn scan(
    dir: &Path,
    sigma: &PrimePartition,
    variant: SubnormalVariant,
    limits: &Limits,
) -> Result<Vec<ScanEntry>, CliError> {
    let files = corpus_files(dir)?;
    Ok(files.par_iter().map(|p| scan_one(p, sigma, variant, limits)).collect())
}
