//! Integer partitions, the majorization (dominance) order, transpose,
//! box-move chains, and ordered set partitions of a given type.
//!
//! Partitions are stored in the canonical form "weakly decreasing, no zero
//! parts"; zero parts are accepted at API boundaries and normalized away.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::{Nat, Result};

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    /// Builds a partition, dropping zero parts; the remaining parts must be
    /// weakly decreasing.
    pub fn new(parts: impl AsRef<[usize]>) -> Result<Self> {
        let parts: Vec<usize> = parts.as_ref().iter().copied().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// Builds a partition from parts in any order (zeros dropped).
    pub fn from_unsorted(parts: impl AsRef<[usize]>) -> Self {
        let mut parts: Vec<usize> = parts.as_ref().iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            n: 0,
        }
    }

    /// The parts, weakly decreasing, without zeros.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of parts |λ|.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of parts ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-based), zero beyond ℓ(λ).
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The transpose partition: λᵀ_i = #{j : λ_j ≥ i}.
    pub fn transpose(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.part(0));
        for i in 1..=self.part(0) {
            parts.push(self.parts.iter().take_while(|&&p| p >= i).count());
        }
        let n = self.n;
        Partition { parts, n }
    }

    /// Multiplicity map value → number of parts equal to it.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// λ₁!·λ₂!⋯λ_r! as an exact integer.
    pub fn parts_factorial(&self) -> Nat {
        self.parts.iter().map(|&p| factorial(p)).product()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated parts, e.g. `"2,2,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<usize> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad partition part {t:?}: {e}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(de)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, in reverse-lexicographic order: (n) first, (1ⁿ) last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, n, &mut stack, &mut out);
    return out;

    fn descend(rem: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition {
                parts: stack.clone(),
                n: stack.iter().sum(),
            });
            return;
        }
        for first in (1..=rem.min(max)).rev() {
            stack.push(first);
            descend(rem - first, first, stack, out);
            stack.pop();
        }
    }
}

/// True iff λ ⪯ μ in the majorization order: every prefix sum of λ is ≤ the
/// corresponding prefix sum of μ (shorter partition padded with zeros).
pub fn majorization_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch {
            left: lambda.n(),
            right: mu.n(),
            context: "majorization compares partitions of equal n",
        });
    }
    let len = lambda.len().max(mu.len());
    let (mut sl, mut sm) = (0usize, 0usize);
    for i in 0..len {
        sl += lambda.part(i);
        sm += mu.part(i);
        if sl > sm {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A chain λ = π⁰ ⪯ π¹ ⪯ ⋯ ⪯ πᵐ = μ in which consecutive partitions differ by
/// a single box move (one part +1, a later part −1).
///
/// The greedy step increments the first position where the current partition
/// falls short of μ and decrements the end of the offending equal-part run;
/// this keeps every intermediate below μ and terminates.
pub fn cover_chain(lambda: &Partition, mu: &Partition) -> Result<Vec<Partition>> {
    if !majorization_leq(lambda, mu)? {
        return Err(Error::NotComparable(lambda.to_string(), mu.to_string()));
    }
    let len = lambda.len().max(mu.len());
    let mut cur: Vec<usize> = (0..len).map(|i| lambda.part(i)).collect();
    let target: Vec<usize> = (0..len).map(|i| mu.part(i)).collect();
    let mut chain = vec![lambda.clone()];
    while cur != target {
        let i = (0..len)
            .find(|&i| cur[i] < target[i])
            .expect("cur != target");
        let j = (i + 1..len)
            .find(|&j| cur[j] > target[j])
            .expect("sums agree");
        let mut j_end = j;
        while j_end + 1 < len && cur[j_end + 1] == cur[j] {
            j_end += 1;
        }
        cur[i] += 1;
        cur[j_end] -= 1;
        chain.push(Partition::new(&cur).expect("box move preserves partitions"));
    }
    Ok(chain)
}

/// Checks that `b` is `a` plus a single box move, returning the two affected
/// (0-based, zero-padded) positions (i, j) with b_i = a_i + 1, b_j = a_j − 1.
pub fn box_move_positions(a: &Partition, b: &Partition) -> Result<(usize, usize)> {
    let err = || Error::NotABoxMove(a.to_string(), b.to_string());
    if a.n() != b.n() {
        return Err(err());
    }
    let len = a.len().max(b.len());
    let mut plus = None;
    let mut minus = None;
    for p in 0..len {
        match (b.part(p) as i64) - (a.part(p) as i64) {
            0 => {}
            1 if plus.is_none() => plus = Some(p),
            -1 if minus.is_none() => minus = Some(p),
            _ => return Err(err()),
        }
    }
    match (plus, minus) {
        (Some(i), Some(j)) if i < j => Ok((i, j)),
        _ => Err(err()),
    }
}

/// n! as an exact integer.
pub fn factorial(n: usize) -> Nat {
    (1..=n).fold(Nat::from(1u32), |acc, k| acc * Nat::from(k))
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: usize, k: usize) -> Nat {
    if k > n {
        return Nat::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = Nat::from(1u32);
    for i in 0..k {
        acc = acc * Nat::from(n - i) / Nat::from(i + 1);
    }
    acc
}

/// Multinomial coefficient n!/(t₁!⋯t_r!); the block sizes must sum to n.
pub fn multinomial(n: usize, sizes: &[usize]) -> Result<Nat> {
    let total: usize = sizes.iter().sum();
    if total != n {
        return Err(Error::SizeMismatch {
            left: total,
            right: n,
            context: "multinomial block sizes must sum to n",
        });
    }
    let denom: Nat = sizes.iter().map(|&s| factorial(s)).product();
    Ok(factorial(n) / denom)
}

/// An ordered set partition: a sequence of pairwise disjoint subsets of [n].
/// Blocks may be empty (zero parts at the tail of the type are permitted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The sequence of block sizes.
    pub fn block_type(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

/// Streams every ordered set partition of [n] with the given block sizes,
/// exactly once, in lexicographic order of block contents.
pub fn ordered_set_partitions(n: usize, sizes: &[usize]) -> Result<OspIter> {
    let total: usize = sizes.iter().sum();
    if total != n {
        return Err(Error::SizeMismatch {
            left: total,
            right: n,
            context: "ordered set partition type must sum to n",
        });
    }
    Ok(OspIter {
        sizes: sizes.to_vec(),
        frames: Vec::new(),
        started: false,
        done: false,
        n,
    })
}

/// Iterator state: one frame per block, holding the elements still available
/// at that level and the current combination chosen from them.
struct Frame {
    pool: Vec<usize>,
    choice: Vec<usize>, // ascending indices into pool
}

pub struct OspIter {
    sizes: Vec<usize>,
    frames: Vec<Frame>,
    started: bool,
    done: bool,
    n: usize,
}

impl OspIter {
    fn fill_from(&mut self, level: usize) {
        for k in level..self.sizes.len() {
            let pool: Vec<usize> = if k == 0 {
                (1..=self.n).collect()
            } else {
                let prev = &self.frames[k - 1];
                let chosen: Vec<usize> = prev.choice.iter().map(|&c| prev.pool[c]).collect();
                prev.pool
                    .iter()
                    .copied()
                    .filter(|e| !chosen.contains(e))
                    .collect()
            };
            let choice: Vec<usize> = (0..self.sizes[k]).collect();
            self.frames.push(Frame { pool, choice });
        }
    }

    /// Advances frame `k` to its next combination; false when exhausted.
    fn advance(&mut self, k: usize) -> bool {
        let frame = &mut self.frames[k];
        let (m, s) = (frame.pool.len(), frame.choice.len());
        for t in (0..s).rev() {
            if frame.choice[t] < m - (s - t) {
                frame.choice[t] += 1;
                for u in t + 1..s {
                    frame.choice[u] = frame.choice[u - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    fn current(&self) -> OrderedSetPartition {
        let blocks = self
            .frames
            .iter()
            .map(|f| f.choice.iter().map(|&c| f.pool[c]).collect())
            .collect();
        OrderedSetPartition { blocks }
    }
}

impl Iterator for OspIter {
    type Item = OrderedSetPartition;

    fn next(&mut self) -> Option<OrderedSetPartition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_from(0);
            return Some(self.current());
        }
        let mut k = self.sizes.len();
        loop {
            if k == 0 {
                self.done = true;
                return None;
            }
            k -= 1;
            if self.advance(k) {
                self.frames.truncate(k + 1);
                self.fill_from(k + 1);
                return Some(self.current());
            }
        }
    }
}
