//! Partitions of the set of all primes.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write;

use crate::arith;
use crate::error::{Error, Result};

/// How primes outside the explicit blocks are grouped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Remainder {
    /// Every remaining prime is its own block.
    Singletons,
    /// All remaining primes form one block.
    CoBlock,
}

/// Identifies one block of a partition. Explicit blocks sort first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockId {
    Explicit(usize),
    Singleton(u64),
    Rest,
}

/// A partition σ of all primes: finitely many explicit disjoint blocks plus
/// a rule for the rest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimePartition {
    blocks: Vec<Vec<u64>>,
    remainder: Remainder,
}

impl PrimePartition {
    pub fn new(blocks: Vec<Vec<u64>>, remainder: Remainder) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut clean = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            if b.is_empty() {
                return Err(Error::PreconditionViolated("partition blocks must be nonempty"));
            }
            b.sort_unstable();
            b.dedup();
            for &p in &b {
                if !arith::is_prime(p) {
                    return Err(Error::PreconditionViolated("partition blocks must contain primes"));
                }
                if !seen.insert(p) {
                    return Err(Error::PreconditionViolated("partition blocks overlap"));
                }
            }
            clean.push(b);
        }
        Ok(PrimePartition {
            blocks: clean,
            remainder,
        })
    }

    /// σ¹ = {{2}, {3}, {5}, …}
    pub fn singletons() -> Self {
        PrimePartition {
            blocks: Vec::new(),
            remainder: Remainder::Singletons,
        }
    }

    /// σ^π = {π, π'}
    pub fn pi(primes: &[u64]) -> Result<Self> {
        Self::new(alloc::vec![primes.to_vec()], Remainder::CoBlock)
    }

    /// σ^{1π} = {{p₁}, …, {pₙ}, π'}
    pub fn pi_singletons(primes: &[u64]) -> Result<Self> {
        Self::new(primes.iter().map(|&p| alloc::vec![p]).collect(), Remainder::CoBlock)
    }

    pub fn explicit_blocks(&self) -> &[Vec<u64>] {
        &self.blocks
    }

    pub fn remainder(&self) -> Remainder {
        self.remainder
    }

    pub fn block_of(&self, p: u64) -> BlockId {
        if let Some(i) = self.blocks.iter().position(|b| b.contains(&p)) {
            return BlockId::Explicit(i);
        }
        match self.remainder {
            Remainder::Singletons => BlockId::Singleton(p),
            Remainder::CoBlock => BlockId::Rest,
        }
    }

    pub fn same_block(&self, p: u64, q: u64) -> bool {
        self.block_of(p) == self.block_of(q)
    }

    /// σ(n): the blocks meeting π(n).
    pub fn sigma_of(&self, n: u64) -> BTreeSet<BlockId> {
        arith::prime_divisors(n).into_iter().map(|p| self.block_of(p)).collect()
    }

    /// Whether all primes of `n` lie in one block.
    pub fn is_primary_number(&self, n: u64) -> bool {
        self.sigma_of(n).len() <= 1
    }

    /// The σ_b-part of `n`.
    pub fn part(&self, n: u64, b: BlockId) -> u64 {
        arith::part_where(n, |p| self.block_of(p) == b)
    }

    /// Prime divisors of `n` lying in block `b`.
    pub fn primes_in(&self, n: u64, b: BlockId) -> Vec<u64> {
        arith::prime_divisors(n)
            .into_iter()
            .filter(|&p| self.block_of(p) == b)
            .collect()
    }

    /// Human-readable block label, e.g. `{23}`, `{5}` or `rest`.
    pub fn block_label(&self, b: BlockId) -> String {
        match b {
            BlockId::Explicit(i) => {
                let mut s = String::from("{");
                for (k, p) in self.blocks[i].iter().enumerate() {
                    if k > 0 {
                        s.push(',');
                    }
                    let _ = write!(s, "{p}");
                }
                s.push('}');
                s
            }
            BlockId::Singleton(p) => alloc::format!("{{{p}}}"),
            BlockId::Rest => String::from("rest"),
        }
    }
}

impl fmt::Display for PrimePartition {
    /// Canonical text form; parses back to the same partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() && self.remainder == Remainder::Singletons {
            return write!(f, "singletons");
        }
        write!(f, "blocks:")?;
        for b in &self.blocks {
            write!(f, "{{")?;
            for (k, p) in b.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "}}")?;
        }
        match self.remainder {
            Remainder::Singletons => write!(f, ";rest:singletons"),
            Remainder::CoBlock => write!(f, ";rest:coblock"),
        }
    }
}
