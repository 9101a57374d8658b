use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::factorial;

/// An integer partition, parts stored non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts `parts` into canonical order. Zero parts and the empty
    /// partition are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self(parts))
    }

    /// The one-part partition `(d)`.
    pub fn full_cycle(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDegree(0));
        }
        Ok(Self(vec![d]))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `(k, m_k)` pairs for every part length `k` present, largest first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((k, m)) if *k == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Order of the centralizer of a permutation of this cycle type,
    /// `prod k^{m_k} m_k!`.
    pub fn centralizer_order(&self) -> BigUint {
        self.multiplicities()
            .into_iter()
            .fold(BigUint::one(), |acc, (k, m)| {
                acc * BigUint::from(k).pow(m as u32) * factorial(m)
            })
    }

    /// Size of the conjugacy class `d! / z`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.size()) / self.centralizer_order()
    }

    /// `d - len`, the parity class of any permutation of this type.
    pub fn transposition_length(&self) -> usize {
        self.size() - self.len()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// All partitions of `d` in reverse-lexicographic order, starting at `(d)`
/// and ending at `(1^d)`.
pub fn partitions_of(d: usize) -> Result<Vec<Partition>> {
    if d == 0 {
        return Err(Error::InvalidDegree(0));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(d, d, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}
