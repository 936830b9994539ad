//! Integer partitions with a bounded number of parts.
//!
//! Partitions index every Jack-polynomial series in this crate. A partition is
//! stored as its weakly decreasing nonzero parts; trailing zeros are trimmed so
//! that each partition has exactly one representation. The fixed-length tuple
//! (λ₁, …, λ_N) used in series formulas is recovered by zero-padding on demand.

use std::fmt;

/// A partition λ = (λ₁ ≥ λ₂ ≥ ⋯): weakly decreasing positive parts, trailing
/// zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition (weight 0).
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Build from parts, trimming trailing zeros. Returns `None` if the parts
    /// are not weakly decreasing.
    pub fn new(parts: &[u32]) -> Option<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        let len = parts.iter().position(|&p| p == 0).unwrap_or(parts.len());
        Some(Partition {
            parts: parts[..len].to_vec(),
        })
    }

    /// Nonzero parts, largest first.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Weight |λ| = λ₁ + λ₂ + ⋯.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part λ_i (1-indexed), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Zero-padded copy of length `n`. Panics if the partition is longer than `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        assert!(self.parts.len() <= n, "partition longer than padding length");
        let mut out = self.parts.clone();
        out.resize(n, 0);
        out
    }

    /// Conjugate partition λ′ (columns of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let mut conj = vec![0u32; cols];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: conj }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// All partitions of weight `m` with at most `max_parts` nonzero parts, in
/// reverse-lexicographic order (largest first part first). Weight 0 yields the
/// singleton list containing the empty partition.
pub fn enumerate_partitions(m: u32, max_parts: usize) -> Vec<Partition> {
    assert!(max_parts >= 1, "max_parts must be at least 1");
    let mut out = Vec::new();
    let mut stack = Vec::new();
    rec(m, max_parts, m, &mut stack, &mut out);
    out
}

fn rec(m: u32, slots: usize, cap: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if m == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    if slots == 0 {
        return;
    }
    let hi = m.min(cap);
    // first part large enough that the remaining slots can absorb the rest
    for first in (1..=hi).rev() {
        if u64::from(first) * slots as u64 >= u64::from(m) {
            stack.push(first);
            rec(m - first, slots - 1, first, stack, out);
            stack.pop();
        }
    }
}

/// Number of partitions of `m` with at most `max_parts` parts, by the standard
/// two-argument recurrence p(m, k) = p(m−k, k) + p(m, k−1), without
/// materializing the list.
pub fn count_partitions(m: u32, max_parts: usize) -> u64 {
    assert!(max_parts >= 1, "max_parts must be at least 1");
    let m = m as usize;
    // table[j] = number of partitions of j with parts <= current k
    // (equivalently, at most k parts, by conjugation)
    let mut table = vec![0u64; m + 1];
    table[0] = 1;
    for k in 1..=max_parts {
        for j in k..=m {
            table[j] += table[j - k];
        }
    }
    table[m]
}

/// Index of all partitions of weight ≤ `max_weight` with at most `max_parts`
/// parts, grouped weight-by-weight in reverse-lexicographic order within each
/// weight. Series code addresses partitions by their position in this table.
#[derive(Debug, Clone)]
pub struct PartitionTable {
    pub max_parts: usize,
    pub max_weight: u32,
    entries: Vec<Partition>,
    /// entries[offsets[m]..offsets[m+1]] are the partitions of weight m
    offsets: Vec<usize>,
    index: std::collections::HashMap<Vec<u32>, usize>,
}

impl PartitionTable {
    pub fn build(max_parts: usize, max_weight: u32) -> Self {
        let mut entries = Vec::new();
        let mut offsets = vec![0usize];
        for m in 0..=max_weight {
            entries.extend(enumerate_partitions(m, max_parts));
            offsets.push(entries.len());
        }
        let index = entries
            .iter()
            .enumerate()
            .map(|(i, p)| (p.parts.clone(), i))
            .collect();
        PartitionTable {
            max_parts,
            max_weight,
            entries,
            offsets,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &Partition {
        &self.entries[i]
    }

    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.index.get(p.parts()).copied()
    }

    /// Index range of the partitions of weight `m`.
    pub fn weight_range(&self, m: u32) -> std::ops::Range<usize> {
        let m = m as usize;
        self.offsets[m]..self.offsets[m + 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Partition> {
        self.entries.iter()
    }
}
