//! Generation of totally nonnegative test matrices and exhaustive minor
//! checking.
//!
//! Generated matrices are products of elementary bidiagonal factors with
//! nonnegative rational parameters and a nonnegative diagonal, so they are
//! totally nonnegative by the Loewner–Whitney description of bidiagonal
//! factorizations.  The factor sequence is returned alongside the matrix
//! and serializes to JSON, so any generated matrix can be replayed exactly.

use itertools::Itertools;
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::immanants::minor_det;
use crate::matrix::Matrix;
use crate::{Rat, RatMatrix, Result};

/// Largest n for the exhaustive all-minors check.
pub const MAX_TNN_CHECK_N: usize = 8;

mod rat_vec {
    use serde::de::Error as _;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::scalar::{parse_rat, rat_to_string};
    use crate::Rat;

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&rat_to_string(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|t| parse_rat(t).map_err(D::Error::custom))
            .collect()
    }
}

/// One elementary factor of a totally nonnegative product: the identity
/// plus a single nonnegative entry on the first sub- or superdiagonal, or a
/// nonnegative diagonal matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Factor {
    /// Identity with `a` at row i+1, column i (1-based i ≤ n−1).
    LowerBidiag {
        i: usize,
        #[serde(with = "crate::scalar::rat_str")]
        a: Rat,
    },
    /// Identity with `a` at row i, column i+1 (1-based i ≤ n−1).
    UpperBidiag {
        i: usize,
        #[serde(with = "crate::scalar::rat_str")]
        a: Rat,
    },
    /// Diagonal matrix with entries d₁..dₙ.
    Diag {
        #[serde(with = "rat_vec")]
        d: Vec<Rat>,
    },
}

/// A replayable factor sequence; its product is totally nonnegative as long
/// as every parameter is nonnegative, which [`TnnFactorization::matrix`]
/// enforces.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TnnFactorization {
    pub n: usize,
    pub seed: u64,
    pub factors: Vec<Factor>,
}

impl TnnFactorization {
    /// Multiplies the factors out, validating ranges and nonnegativity.
    pub fn matrix(&self) -> Result<RatMatrix> {
        let n = self.n;
        if n == 0 {
            return Err(Error::OutOfRange {
                what: "matrix size".into(),
                value: "0".into(),
                allowed: "1..".into(),
            });
        }
        let nonneg = |a: &Rat| -> Result<()> {
            if a < &Rat::zero() {
                return Err(Error::Parse(format!(
                    "factor parameter {} is negative",
                    crate::scalar::rat_to_string(a)
                )));
            }
            Ok(())
        };
        let index_ok = |i: usize| -> Result<()> {
            if i == 0 || i >= n {
                return Err(Error::OutOfRange {
                    what: "bidiagonal index".into(),
                    value: i.to_string(),
                    allowed: format!("1..={}", n - 1),
                });
            }
            Ok(())
        };
        let mut acc: RatMatrix = Matrix::identity(n);
        for factor in &self.factors {
            let mut f: RatMatrix = Matrix::identity(n);
            match factor {
                Factor::LowerBidiag { i, a } => {
                    index_ok(*i)?;
                    nonneg(a)?;
                    f.set(*i, i - 1, a.clone());
                }
                Factor::UpperBidiag { i, a } => {
                    index_ok(*i)?;
                    nonneg(a)?;
                    f.set(i - 1, *i, a.clone());
                }
                Factor::Diag { d } => {
                    if d.len() != n {
                        return Err(Error::SizeMismatch {
                            left: d.len(),
                            right: n,
                            context: "diagonal factor length",
                        });
                    }
                    for (t, v) in d.iter().enumerate() {
                        nonneg(v)?;
                        f.set(t, t, v.clone());
                    }
                }
            }
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }
}

/// A negative minor found by [`is_tnn`], with 1-based index sets.
#[derive(Clone, Debug, Serialize)]
pub struct TnnWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    #[serde(with = "crate::scalar::rat_str")]
    pub value: Rat,
}

/// Outcome of the exhaustive minor check.
#[derive(Clone, Debug, Serialize)]
pub struct TnnReport {
    pub n: usize,
    pub ok: bool,
    pub witness: Option<TnnWitness>,
}

fn small_rat<R: Rng + ?Sized>(rng: &mut R, num_lo: i64) -> Rat {
    let num: i64 = rng.gen_range(num_lo..=20);
    let den: i64 = rng.gen_range(1..=20);
    Rat::new(num.into(), den.into())
}

/// A random totally nonnegative matrix and the factor sequence producing
/// it: `complexity` bidiagonal factors followed by one positive diagonal.
/// The same `(n, seed, complexity)` triple always returns the same result.
pub fn gen_tnn(n: usize, seed: u64, complexity: usize) -> Result<(RatMatrix, TnnFactorization)> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "matrix size".into(),
            value: "0".into(),
            allowed: "1..".into(),
        });
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut factors = Vec::with_capacity(complexity + 1);
    if n > 1 {
        for _ in 0..complexity {
            let i = rng.gen_range(1..n);
            let a = small_rat(&mut rng, 0);
            factors.push(if rng.gen_bool(0.5) {
                Factor::LowerBidiag { i, a }
            } else {
                Factor::UpperBidiag { i, a }
            });
        }
    }
    factors.push(Factor::Diag {
        d: (0..n).map(|_| small_rat(&mut rng, 1)).collect(),
    });
    let factorization = TnnFactorization { n, seed, factors };
    let matrix = factorization.matrix()?;
    Ok((matrix, factorization))
}

/// Checks every minor of every size. On failure the witness is the first
/// negative minor in (size, row set, column set) lexicographic order.
pub fn is_tnn(a: &RatMatrix) -> Result<TnnReport> {
    if !a.is_square() {
        return Err(Error::SizeMismatch {
            left: a.rows(),
            right: a.cols(),
            context: "total nonnegativity is for square matrices",
        });
    }
    let n = a.rows();
    if n > MAX_TNN_CHECK_N {
        return Err(Error::OutOfRange {
            what: "minor check size".into(),
            value: n.to_string(),
            allowed: format!("0..={MAX_TNN_CHECK_N}"),
        });
    }
    for k in 1..=n {
        for rows in (1..=n).combinations(k) {
            for cols in (1..=n).combinations(k) {
                let d = minor_det(a, &rows, &cols)?;
                if d < Rat::zero() {
                    return Ok(TnnReport {
                        n,
                        ok: false,
                        witness: Some(TnnWitness {
                            rows,
                            cols,
                            value: d,
                        }),
                    });
                }
            }
        }
    }
    Ok(TnnReport {
        n,
        ok: true,
        witness: None,
    })
}

/// A matrix with integer entries drawn uniformly from [-bound, bound].
pub fn random_int_matrix<R: Rng + ?Sized>(n: usize, rng: &mut R, bound: i64) -> RatMatrix {
    Matrix::from_fn(n, n, |_, _| {
        Rat::from_integer(rng.gen_range(-bound..=bound).into())
    })
}
