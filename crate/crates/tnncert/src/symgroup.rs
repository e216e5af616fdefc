//! Permutations of [n] in one-line notation, words in adjacent
//! transpositions, cycle types, and conjugacy-class sizes.
//!
//! Words act on the right: appending a letter i to a word swaps the entries
//! in positions i, i+1 of the one-line notation, so a word (i₁, …, i_ℓ)
//! denotes s_{i₁}⋯s_{i_ℓ} applied to the identity left to right.

use itertools::Itertools;
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::partitions::{factorial, Partition};
use crate::{Nat, Result};

/// Largest n for which full S_n enumeration is allowed (10! one-line vectors).
pub const MAX_ENUM_N: usize = 10;

/// A permutation of {1, …, n} stored in one-line notation (1-based values).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    /// Validates that `one_line` is a rearrangement of 1..=n.
    pub fn new(one_line: impl Into<Vec<usize>>) -> Result<Self> {
        let one_line = one_line.into();
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Parse(format!(
                    "{one_line:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// w(i) for 1-based i.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    /// Builds s_{i₁}⋯s_{i_ℓ} from a word of letters in 1..n.
    pub fn from_word(word: &[usize], n: usize) -> Result<Self> {
        let mut one_line: Vec<usize> = (1..=n).collect();
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::OutOfRange {
                    what: "word letter".into(),
                    value: i.to_string(),
                    allowed: format!("1..={}", n.saturating_sub(1)),
                });
            }
            one_line.swap(i - 1, i);
        }
        Ok(Permutation { one_line })
    }

    /// Composition self∘other: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
                context: "composing permutations of different sizes",
            });
        }
        let one_line = (1..=self.n()).map(|i| self.apply(other.apply(i))).collect();
        Ok(Permutation { one_line })
    }

    pub fn inverse(&self) -> Permutation {
        let mut one_line = vec![0; self.n()];
        for (i, &v) in self.one_line.iter().enumerate() {
            one_line[v - 1] = i + 1;
        }
        Permutation { one_line }
    }

    /// Coxeter length ℓ(w) = number of inversions.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.one_line[i] > self.one_line[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// +1 for even permutations, −1 for odd.
    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Positions i (1-based, i < n) with w_i > w_{i+1}.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.one_line[i - 1] > self.one_line[i])
            .collect()
    }

    /// Cycle type as a partition of n.
    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut lengths = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.apply(v);
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths)
    }

    /// Number of fixed points.
    pub fn fixed_points(&self) -> usize {
        (1..=self.n()).filter(|&i| self.apply(i) == i).count()
    }

    /// Rank of this permutation in the lexicographic order on one-line
    /// notations, via the Lehmer code (0-based, ranks run over 0..n!).
    pub fn lehmer_rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0usize;
        let mut radix = 1usize;
        let mut weights = vec![0usize; n];
        for (i, w) in weights.iter_mut().enumerate().rev() {
            *w = radix;
            radix *= n - i;
        }
        for (i, w) in weights.iter().enumerate() {
            let code = (i + 1..n)
                .filter(|&j| self.one_line[j] < self.one_line[i])
                .count();
            rank += code * w;
        }
        rank
    }

    /// A deterministic reduced word: sort the one-line notation back to the
    /// identity by moving n, n−1, … home through adjacent descent swaps, then
    /// reverse the recorded positions.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.n();
        let mut v = self.one_line.clone();
        let mut recorded = Vec::with_capacity(self.length());
        for letter in (1..=n).rev() {
            let mut pos = v.iter().position(|&x| x == letter).unwrap() + 1;
            while pos < letter {
                v.swap(pos - 1, pos);
                recorded.push(pos);
                pos += 1;
            }
        }
        recorded.reverse();
        recorded
    }

    /// A uniformly random descent walk back to the identity, reversed: a
    /// random reduced word for this permutation.
    pub fn random_reduced_word<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<usize> {
        let mut v = self.clone();
        let mut recorded = Vec::with_capacity(self.length());
        loop {
            let descents = v.descents();
            if descents.is_empty() {
                break;
            }
            let i = descents[rng.gen_range(0..descents.len())];
            v.one_line.swap(i - 1, i);
            recorded.push(i);
        }
        recorded.reverse();
        recorded
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.one_line.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let one_line = Vec::<usize>::deserialize(de)?;
        Permutation::new(one_line).map_err(serde::de::Error::custom)
    }
}

/// All of S_n in lexicographic order of one-line notation; n ≤ 10.
pub fn all_permutations(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 || n > MAX_ENUM_N {
        return Err(Error::OutOfRange {
            what: "symmetric group degree".into(),
            value: n.to_string(),
            allowed: format!("1..={MAX_ENUM_N}"),
        });
    }
    Ok((1..=n)
        .permutations(n)
        .map(|one_line| Permutation { one_line })
        .collect())
}

/// Size of the conjugacy class of cycle type λ in S_n: n!/z_λ where
/// z_λ = Π_v v^{m_v}·m_v! over part values v with multiplicity m_v.
pub fn class_size(lambda: &Partition) -> Nat {
    let mut z = Nat::from(1u32);
    for (v, m) in lambda.multiplicities() {
        for _ in 0..m {
            z *= Nat::from(v);
        }
        z *= factorial(m);
    }
    factorial(lambda.n()) / z
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn word_application_examples() {
        assert_eq!(Permutation::from_word(&[1], 2).unwrap().one_line(), &[2, 1]);
        assert_eq!(
            Permutation::from_word(&[1, 2], 3).unwrap().one_line(),
            &[2, 3, 1]
        );
        assert_eq!(
            Permutation::from_word(&[2, 1], 3).unwrap().one_line(),
            &[3, 1, 2]
        );
        assert_eq!(
            Permutation::from_word(&[], 3).unwrap(),
            Permutation::identity(3)
        );
        assert!(Permutation::from_word(&[3], 3).is_err());
        assert!(Permutation::from_word(&[0], 3).is_err());
    }

    #[test]
    fn braid_and_commutation_hold_on_permutations() {
        let a = Permutation::from_word(&[1, 2, 1], 3).unwrap();
        let b = Permutation::from_word(&[2, 1, 2], 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.one_line(), &[3, 2, 1]);
        let c = Permutation::from_word(&[1, 3], 4).unwrap();
        let d = Permutation::from_word(&[3, 1], 4).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn enumeration_counts_and_order() {
        for n in 1..=7 {
            let all = all_permutations(n).unwrap();
            let expected: usize = (1..=n).product();
            assert_eq!(all.len(), expected);
            for w in all.windows(2) {
                assert!(w[0].one_line() < w[1].one_line(), "lexicographic order");
            }
        }
        assert!(all_permutations(0).is_err());
        assert!(all_permutations(11).is_err());
    }

    #[test]
    fn lehmer_rank_matches_lexicographic_position() {
        for n in 1..=6 {
            for (idx, w) in all_permutations(n).unwrap().iter().enumerate() {
                assert_eq!(w.lehmer_rank(), idx, "{w}");
            }
        }
    }

    #[test]
    fn length_counts_inversions_additively_along_words() {
        // each appended letter at an ascent adds one inversion
        let w = Permutation::from_word(&[1, 2, 1], 3).unwrap();
        assert_eq!(w.length(), 3);
        assert_eq!(Permutation::identity(5).length(), 0);
        let longest = Permutation::new([5, 4, 3, 2, 1]).unwrap();
        assert_eq!(longest.length(), 10);
        assert_eq!(longest.sign(), 1);
        assert_eq!(Permutation::new([2, 1, 3]).unwrap().sign(), -1);
    }

    #[test]
    fn sign_is_multiplicative() {
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        let all = all_permutations(5).unwrap();
        for _ in 0..200 {
            let u = &all[rng.gen_range(0..all.len())];
            let v = &all[rng.gen_range(0..all.len())];
            assert_eq!(u.compose(v).unwrap().sign(), u.sign() * v.sign());
        }
    }

    #[test]
    fn inverse_and_compose() {
        for w in all_permutations(5).unwrap() {
            assert_eq!(w.compose(&w.inverse()).unwrap(), Permutation::identity(5));
            assert_eq!(w.inverse().compose(&w).unwrap(), Permutation::identity(5));
        }
        assert!(Permutation::identity(3)
            .compose(&Permutation::identity(4))
            .is_err());
    }

    #[test]
    fn reduced_words_replay() {
        for n in 1..=7 {
            for w in all_permutations(n).unwrap() {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length(), "{w}");
                assert_eq!(Permutation::from_word(&word, n).unwrap(), w);
            }
        }
    }

    #[test]
    fn random_reduced_words_replay() {
        let mut rng = ChaCha12Rng::seed_from_u64(5);
        for n in 2..=7 {
            let all = all_permutations(n).unwrap();
            for _ in 0..200 {
                let w = &all[rng.gen_range(0..all.len())];
                let word = w.random_reduced_word(&mut rng);
                assert_eq!(word.len(), w.length());
                assert_eq!(&Permutation::from_word(&word, n).unwrap(), w);
            }
        }
    }

    #[test]
    fn cycle_types() {
        assert_eq!(
            Permutation::new([2, 1, 3]).unwrap().cycle_type(),
            p(&[2, 1])
        );
        assert_eq!(Permutation::new([2, 3, 1]).unwrap().cycle_type(), p(&[3]));
        assert_eq!(Permutation::identity(4).cycle_type(), p(&[1, 1, 1, 1]));
        assert_eq!(
            Permutation::new([2, 1, 4, 3]).unwrap().cycle_type(),
            p(&[2, 2])
        );
        assert_eq!(Permutation::new([2, 1, 4, 3]).unwrap().fixed_points(), 0);
        assert_eq!(Permutation::new([1, 3, 2]).unwrap().fixed_points(), 1);
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        use crate::partitions::partitions_of;
        for n in 1..=8 {
            let total: Nat = partitions_of(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n));
        }
        // S_3: transpositions 3, 3-cycles 2, identity 1
        assert_eq!(class_size(&p(&[2, 1])), Nat::from(3u32));
        assert_eq!(class_size(&p(&[3])), Nat::from(2u32));
        assert_eq!(class_size(&p(&[1, 1, 1])), Nat::from(1u32));
        // matches direct enumeration for n ≤ 6
        for n in 1..=6 {
            for lam in partitions_of(n) {
                let direct = all_permutations(n)
                    .unwrap()
                    .iter()
                    .filter(|w| w.cycle_type() == lam)
                    .count();
                assert_eq!(Nat::from(direct), class_size(&lam), "{lam}");
            }
        }
    }

    #[test]
    fn serde_round_trip() {
        let w = Permutation::new([2, 3, 1]).unwrap();
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, "[2,3,1]");
        let back: Permutation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
        assert!(serde_json::from_str::<Permutation>("[1,1,2]").is_err());
    }
}
