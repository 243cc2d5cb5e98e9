//! σ-spec strings: `singletons`, `pi:2,3`, `pi1:2,3`,
//! `blocks:{23}{11};rest:singletons` and `blocks:{23}{11};rest:coblock`.

use sigmanil::{PrimePartition, Remainder};

use crate::error::CliError;

fn primes(list: &str) -> Result<Vec<u64>, CliError> {
    list.split(',')
        .map(|t| {
            let t = t.trim();
            match t.parse::<u64>() {
                Ok(p) if sigmanil::arith::is_prime(p) => Ok(p),
                _ => Err(CliError::SigmaSyntax(format!("'{t}' is not a prime"))),
            }
        })
        .collect()
}

fn build(blocks: Vec<Vec<u64>>, rest: Remainder) -> Result<PrimePartition, CliError> {
    let mut seen = std::collections::BTreeSet::new();
    for &p in blocks.iter().flatten() {
        if !seen.insert(p) {
            return Err(CliError::Overlap(p));
        }
    }
    PrimePartition::new(blocks, rest).map_err(|e| CliError::SigmaSyntax(e.to_string()))
}

pub fn parse(text: &str) -> Result<PrimePartition, CliError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "singletons" {
        return Ok(PrimePartition::singletons());
    }
    if let Some(list) = s.strip_prefix("pi1:") {
        return build(primes(list)?.into_iter().map(|p| vec![p]).collect(), Remainder::CoBlock);
    }
    if let Some(list) = s.strip_prefix("pi:") {
        return build(vec![primes(list)?], Remainder::CoBlock);
    }
    let Some(body) = s.strip_prefix("blocks:") else {
        return Err(CliError::SigmaSyntax(format!("unknown form '{text}'")));
    };
    let (blocks_part, rest_part) = body
        .split_once(';')
        .ok_or_else(|| CliError::SigmaSyntax("missing ';rest:…'".into()))?;
    let rest = match rest_part {
        "rest:singletons" => Remainder::Singletons,
        "rest:coblock" => Remainder::CoBlock,
        other => return Err(CliError::SigmaSyntax(format!("unknown remainder '{other}'"))),
    };
    let mut blocks = Vec::new();
    let mut tail = blocks_part;
    while !tail.is_empty() {
        let inner = tail
            .strip_prefix('{')
            .and_then(|t| t.split_once('}'))
            .ok_or_else(|| CliError::SigmaSyntax(format!("expected '{{…}}' at '{tail}'")))?;
        blocks.push(primes(inner.0)?);
        tail = inner.1;
    }
    build(blocks, rest)
}
