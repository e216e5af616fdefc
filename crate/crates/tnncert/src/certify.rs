//! Certificates for immanant inequalities on totally nonnegative matrices.
//!
//! The central inequality compares the two-row induced-sign immanants of
//! consecutive shapes: for 0 ≤ k ≤ ⌊n/2⌋−1 and A totally nonnegative,
//!
//!   (k+1)·Imm_{ε^{(n−k−1,k+1)}}(A)  ≥  (n−k)·Imm_{ε^{(n−k,k)}}(A).
//!
//! [`two_row_tl_certificate`] proves this by writing the difference of the
//! two sides as Σ_τ c_τ·Imm_τ(A) over the diagram basis with every c_τ ≥ 0,
//! and [`two_row_monomial_certificate`] does the same in the monomial
//! immanant basis.  [`bj_certificate`] reduces an arbitrary comparable pair
//! of shapes to a chain of single box moves, each of which is a two-row
//! instance on complementary principal submatrices.  Certificates carry an
//! optional record of the defining identity having been checked on random
//! integer matrices.

use itertools::Itertools;
use num::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::colorings::{b_mu_tau, d_coeff};
use crate::error::Error;
use crate::immanants::{imm_eps, imm_tau_all, PrincipalMinors, MAX_TAU_N};
use crate::partitions::{
    binomial, box_move_positions, cover_chain, factorial, majorization_leq, Partition,
};
use crate::scalar::rat_to_string;
use crate::symfunc::e_to_m;
use crate::tl::{tl_basis, Diagram};
use crate::tnngen::random_int_matrix;
use crate::{Int, Nat, Rat, RatMatrix, Result};

/// Largest n for certificate construction.
pub const MAX_CERT_N: usize = 9;
/// Entry bound for the random integer matrices used in identity checks.
const IDENTITY_ENTRY_BOUND: i64 = 1000;

/// Record of a certificate identity evaluated on random integer matrices.
/// Exact agreement on one random matrix is overwhelming evidence for a
/// polynomial identity; `trials` of them leave no realistic doubt.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub trials: usize,
    pub seed: u64,
    pub passed: bool,
}

/// Expansion of the two-row difference in the diagram immanant basis:
/// (k+1)·Imm_{ε^{(n−k−1,k+1)}} − (n−k)·Imm_{ε^{(n−k,k)}} = Σ_τ c_τ·Imm_τ.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TwoRowTlCertificate {
    kind: &'static str,
    pub n: usize,
    pub k: usize,
    #[serde(serialize_with = "ser_diagram_coeffs")]
    pub coeffs: Vec<(Diagram, Int)>,
    pub all_nonnegative: bool,
    pub identity: Option<IdentityCheck>,
}

/// The same difference expanded in monomial immanants Imm_{φ^μ} over the
/// shapes μ = 2^a 1^{n−2a}.
///
/// Two parameterizations of the row pair are in circulation, differing by
/// the substitution k ↔ n−k−1; the certificate computes and records both
/// coefficient vectors rather than picking one, and flags which is
/// nonnegative.  (They are negatives of each other, so for k ≤ ⌊n/2⌋−1 it
/// is always the primary one.)
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TwoRowMonomialCertificate {
    kind: &'static str,
    pub n: usize,
    pub k: usize,
    #[serde(serialize_with = "ser_partition_coeffs")]
    pub coeffs: Vec<(Partition, Int)>,
    pub all_nonnegative: bool,
    #[serde(serialize_with = "ser_partition_coeffs")]
    pub swapped_coeffs: Vec<(Partition, Int)>,
    pub swapped_all_nonnegative: bool,
    pub identity: Option<IdentityCheck>,
}

/// One box move of a cover chain, with the data reducing it to a two-row
/// instance: taking J over the |ν|-subsets of [n],
///
///   from!·Imm_{ε^from} − to!·Imm_{ε^to}
///     = scale·Σ_J Imm_{ε^ν}(A_J)·[two-row difference at (n', k') on A_{J̄}].
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BjStep {
    pub from: Partition,
    pub to: Partition,
    /// 1-based row receiving the box.
    pub gain_row: usize,
    /// 1-based row losing the box.
    pub lose_row: usize,
    pub nu: Partition,
    #[serde(serialize_with = "ser_nat")]
    pub scale: Nat,
    pub two_row_n: usize,
    pub two_row_k: usize,
}

/// Reduction of a comparable pair μ ⪯ λ to two-row instances along a chain
/// of single box moves from μ up to λ.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BjCertificate {
    kind: &'static str,
    pub lambda: Partition,
    pub mu: Partition,
    pub chain: Vec<Partition>,
    pub steps: Vec<BjStep>,
    pub identity: Option<IdentityCheck>,
}

/// Outcome of the averaged-minor monotonicity check.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FischerReport {
    pub n: usize,
    pub ok: bool,
    /// Average of det A_I·det A_{Ī} over |I| = k, for k = 0..=⌊n/2⌋.
    #[serde(serialize_with = "ser_rat_vec")]
    pub averages: Vec<Rat>,
    /// First k with average(k) > average(k+1), if any.
    pub violation: Option<usize>,
}

/// Outcome of a single Barrett–Johnson comparison.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BjReport {
    pub lambda: Partition,
    pub mu: Partition,
    #[serde(with = "crate::scalar::rat_str")]
    pub lambda_side: Rat,
    #[serde(with = "crate::scalar::rat_str")]
    pub mu_side: Rat,
    pub ok: bool,
}

fn ser_diagram_coeffs<S: Serializer>(
    v: &[(Diagram, Int)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        diagram: &'a Diagram,
        coeff: String,
    }
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for (d, c) in v {
        seq.serialize_element(&Entry {
            diagram: d,
            coeff: c.to_string(),
        })?;
    }
    seq.end()
}

fn ser_partition_coeffs<S: Serializer>(
    v: &[(Partition, Int)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        partition: &'a Partition,
        coeff: String,
    }
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for (p, c) in v {
        seq.serialize_element(&Entry {
            partition: p,
            coeff: c.to_string(),
        })?;
    }
    seq.end()
}

fn ser_nat<S: Serializer>(v: &Nat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_rat_vec<S: Serializer>(v: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&rat_to_string(r))?;
    }
    seq.end()
}

fn rat_int(v: usize) -> Rat {
    Rat::from_integer((v as i64).into())
}

fn check_pair(n: usize, k: usize) -> Result<()> {
    if !(2..=MAX_CERT_N).contains(&n) {
        return Err(Error::OutOfRange {
            what: "certificate size".into(),
            value: n.to_string(),
            allowed: format!("2..={MAX_CERT_N}"),
        });
    }
    if k + 1 > n / 2 {
        return Err(Error::OutOfRange {
            what: "row-pair index".into(),
            value: k.to_string(),
            allowed: format!("0..={}", n / 2 - 1),
        });
    }
    Ok(())
}

/// The pair of shapes compared by the certificate at (n, k): the minus leg
/// (n−k, k) and the plus leg (n−k−1, k+1).
pub fn two_row_shapes(n: usize, k: usize) -> (Partition, Partition) {
    (
        Partition::from_unsorted([n - k, k]),
        Partition::from_unsorted([n - k - 1, k + 1]),
    )
}

/// Builds the diagram-basis certificate at (n, k). With `trials > 0` the
/// defining identity is evaluated on that many seeded random matrices,
/// which needs n ≤ 8.
pub fn two_row_tl_certificate(
    n: usize,
    k: usize,
    trials: usize,
    seed: u64,
) -> Result<TwoRowTlCertificate> {
    check_pair(n, k)?;
    let basis = tl_basis(n)?;
    let mut coeffs = Vec::with_capacity(basis.len());
    let mut all_nonnegative = true;
    for tau in basis {
        let up = Int::from(k as i64 + 1) * Int::from(d_coeff(k + 1, &tau)?);
        let down = Int::from((n - k) as i64) * Int::from(d_coeff(k, &tau)?);
        let c = up - down;
        if c < Int::zero() {
            all_nonnegative = false;
        }
        coeffs.push((tau, c));
    }
    let identity = if trials > 0 {
        if n > MAX_TAU_N {
            return Err(Error::OutOfRange {
                what: "verified certificate size".into(),
                value: n.to_string(),
                allowed: format!("2..={MAX_TAU_N} when trials > 0"),
            });
        }
        let (minus, plus) = two_row_shapes(n, k);
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let mut passed = true;
        for _ in 0..trials {
            let a = random_int_matrix(n, &mut rng, IDENTITY_ENTRY_BOUND);
            let lhs = rat_int(k + 1) * imm_eps(&plus, &a)? - rat_int(n - k) * imm_eps(&minus, &a)?;
            let mut rhs = Rat::zero();
            for ((tau, c), (tau2, imm)) in coeffs.iter().zip(imm_tau_all(&a)?) {
                debug_assert_eq!(tau, &tau2);
                rhs += Rat::from_integer(c.clone()) * imm;
            }
            if lhs != rhs {
                passed = false;
                break;
            }
        }
        Some(IdentityCheck {
            trials,
            seed,
            passed,
        })
    } else {
        None
    };
    Ok(TwoRowTlCertificate {
        kind: "tlBasis",
        n,
        k,
        coeffs,
        all_nonnegative,
        identity,
    })
}

fn two_one_shape(n: usize, a: usize) -> Partition {
    let mut parts = vec![2; a];
    parts.extend(std::iter::repeat(1).take(n - 2 * a));
    Partition::new(parts).expect("2^a 1^(n-2a) is a partition")
}

/// Builds the monomial-basis certificate at (n, k): coefficients of the
/// two-row difference on Imm_{φ^{2^a 1^{n−2a}}} for a = 0..=⌊n/2⌋, by the
/// closed form (k+1)·C(n−2a, k+1−a) − (n−k)·C(n−2a, k−a), cross-checked
/// against the elementary-to-monomial expansion.
pub fn two_row_monomial_certificate(
    n: usize,
    k: usize,
    trials: usize,
    seed: u64,
) -> Result<TwoRowMonomialCertificate> {
    check_pair(n, k)?;
    let (minus, plus) = two_row_shapes(n, k);
    // coefficient of m_{2^a 1^{n−2a}} in (j+1)·e_plus(j) − (n−j)·e_minus(j)
    let closed_form = |j: usize, a: usize| -> Int {
        let up = if j + 1 >= a {
            Int::from(j as i64 + 1) * Int::from(binomial(n - 2 * a, j + 1 - a))
        } else {
            Int::zero()
        };
        let down = if j >= a {
            Int::from((n - j) as i64) * Int::from(binomial(n - 2 * a, j - a))
        } else {
            Int::zero()
        };
        up - down
    };
    let mut coeffs = Vec::with_capacity(n / 2 + 1);
    let mut swapped_coeffs = Vec::with_capacity(n / 2 + 1);
    let mut all_nonnegative = true;
    let mut swapped_all_nonnegative = true;
    for a in 0..=n / 2 {
        let c = closed_form(k, a);
        if c < Int::zero() {
            all_nonnegative = false;
        }
        coeffs.push((two_one_shape(n, a), c));
        let c = closed_form(n - k - 1, a);
        if c < Int::zero() {
            swapped_all_nonnegative = false;
        }
        swapped_coeffs.push((two_one_shape(n, a), c));
    }
    // independent route: subtract the two elementary expansions
    let plus_m = e_to_m(&plus);
    let minus_m = e_to_m(&minus);
    for key in plus_m.keys().chain(minus_m.keys()) {
        if !coeffs.iter().any(|(mu, _)| mu == key) {
            return Err(Error::Certificate(format!(
                "unexpected monomial shape {key} in the elementary expansion"
            )));
        }
    }
    for (mu, c) in &coeffs {
        let up = plus_m
            .get(mu)
            .cloned()
            .map(Int::from)
            .unwrap_or_else(Int::zero);
        let down = minus_m
            .get(mu)
            .cloned()
            .map(Int::from)
            .unwrap_or_else(Int::zero);
        let want = Int::from(k as i64 + 1) * up - Int::from((n - k) as i64) * down;
        if *c != want {
            return Err(Error::Certificate(format!(
                "coefficient of {mu} disagrees with the elementary expansion: {c} vs {want}"
            )));
        }
    }
    // the swapped parameterization exchanges the roles of the two legs
    for (mu, c) in &swapped_coeffs {
        let up = minus_m
            .get(mu)
            .cloned()
            .map(Int::from)
            .unwrap_or_else(Int::zero);
        let down = plus_m
            .get(mu)
            .cloned()
            .map(Int::from)
            .unwrap_or_else(Int::zero);
        let want = Int::from((n - k) as i64) * up - Int::from(k as i64 + 1) * down;
        if *c != want {
            return Err(Error::Certificate(format!(
                "swapped coefficient of {mu} disagrees with the elementary expansion: {c} vs {want}"
            )));
        }
    }
    let identity = if trials > 0 {
        if n > MAX_TAU_N {
            return Err(Error::OutOfRange {
                what: "verified certificate size".into(),
                value: n.to_string(),
                allowed: format!("2..={MAX_TAU_N} when trials > 0"),
            });
        }
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let mut passed = true;
        for _ in 0..trials {
            let a = random_int_matrix(n, &mut rng, IDENTITY_ENTRY_BOUND);
            let lhs = rat_int(k + 1) * imm_eps(&plus, &a)? - rat_int(n - k) * imm_eps(&minus, &a)?;
            let imms = imm_tau_all(&a)?;
            let mut rhs = Rat::zero();
            for (mu, c) in &coeffs {
                if c.is_zero() {
                    continue;
                }
                let mut phi = Rat::zero();
                for (tau, imm) in &imms {
                    let b = b_mu_tau(mu, tau)?;
                    if !b.is_zero() {
                        phi += Rat::from_integer(Int::from(b)) * imm.clone();
                    }
                }
                rhs += Rat::from_integer(c.clone()) * phi;
            }
            if lhs != rhs {
                passed = false;
                break;
            }
        }
        Some(IdentityCheck {
            trials,
            seed,
            passed,
        })
    } else {
        None
    };
    Ok(TwoRowMonomialCertificate {
        kind: "monomialBasis",
        n,
        k,
        coeffs,
        all_nonnegative,
        swapped_coeffs,
        swapped_all_nonnegative,
        identity,
    })
}

/// λ!-scaled induced-sign immanant: (Π λ_i!)·Imm_{ε^λ}(A). On the identity
/// matrix this is n! for every shape.
pub fn bj_side(lambda: &Partition, a: &RatMatrix) -> Result<Rat> {
    Ok(Rat::from_integer(Int::from(lambda.parts_factorial())) * imm_eps(lambda, a)?)
}

/// Compares the scaled immanants of a comparable pair of shapes on one
/// matrix. For μ ⪯ λ the inequality asserts side(μ) ≥ side(λ).
pub fn bj_check(lambda: &Partition, mu: &Partition, a: &RatMatrix) -> Result<BjReport> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch {
            left: lambda.n(),
            right: mu.n(),
            context: "compared shapes must have equal weight",
        });
    }
    let mu_below = majorization_leq(mu, lambda)?;
    let lambda_below = majorization_leq(lambda, mu)?;
    if !mu_below && !lambda_below {
        return Err(Error::NotComparable(lambda.to_string(), mu.to_string()));
    }
    let lambda_side = bj_side(lambda, a)?;
    let mu_side = bj_side(mu, a)?;
    let ok = if mu_below {
        mu_side >= lambda_side
    } else {
        lambda_side >= mu_side
    };
    Ok(BjReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        lambda_side,
        mu_side,
        ok,
    })
}

/// Average of det A_I·det A_{Ī} over the k-subsets I, checked to be weakly
/// increasing for k = 0..=⌊n/2⌋; on totally nonnegative matrices it is.
pub fn fischer_check(a: &RatMatrix) -> Result<FischerReport> {
    if !a.is_square() {
        return Err(Error::SizeMismatch {
            left: a.rows(),
            right: a.cols(),
            context: "minor averages need a square matrix",
        });
    }
    let n = a.rows();
    if n == 0 || n > MAX_CERT_N {
        return Err(Error::OutOfRange {
            what: "matrix size".into(),
            value: n.to_string(),
            allowed: format!("1..={MAX_CERT_N}"),
        });
    }
    let minors = PrincipalMinors::new(a)?;
    let half = n / 2;
    let mut sums = vec![Rat::zero(); half + 1];
    let full = (1usize << n) - 1;
    for mask in 0..=full {
        let k = mask.count_ones() as usize;
        if k <= half {
            sums[k] += minors.by_mask(mask).clone() * minors.by_mask(full ^ mask).clone();
        }
    }
    let averages: Vec<Rat> = sums
        .into_iter()
        .enumerate()
        .map(|(k, s)| s / Rat::from_integer(Int::from(binomial(n, k))))
        .collect();
    let violation = (0..half).find(|&k| averages[k] > averages[k + 1]);
    Ok(FischerReport {
        n,
        ok: violation.is_none(),
        averages,
        violation,
    })
}

/// Builds the cover-chain certificate for a comparable pair μ ⪯ λ. With
/// `trials > 0`, every step identity is evaluated on that many seeded
/// random matrices.
pub fn bj_certificate(
    lambda: &Partition,
    mu: &Partition,
    trials: usize,
    seed: u64,
) -> Result<BjCertificate> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch {
            left: lambda.n(),
            right: mu.n(),
            context: "compared shapes must have equal weight",
        });
    }
    let n = lambda.n();
    if n == 0 || n > MAX_CERT_N {
        return Err(Error::OutOfRange {
            what: "certificate weight".into(),
            value: n.to_string(),
            allowed: format!("1..={MAX_CERT_N}"),
        });
    }
    let chain = cover_chain(mu, lambda)?;
    let mut steps = Vec::with_capacity(chain.len() - 1);
    for r in 0..chain.len() - 1 {
        let p = &chain[r];
        let q = &chain[r + 1];
        let (gain, lose) = box_move_positions(p, q)?;
        let li = p.part(gain);
        let lj = p.part(lose);
        let rest: Vec<usize> = (0..p.len())
            .filter(|&t| t != gain && t != lose)
            .map(|t| p.part(t))
            .collect();
        let nu = Partition::new(rest)?;
        let scale = nu.parts_factorial() * factorial(li) * factorial(lj - 1);
        steps.push(BjStep {
            from: p.clone(),
            to: q.clone(),
            gain_row: gain + 1,
            lose_row: lose + 1,
            nu,
            scale,
            two_row_n: li + lj,
            two_row_k: lj - 1,
        });
    }
    let identity = if trials > 0 {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let mut passed = true;
        'trials: for _ in 0..trials {
            let a = random_int_matrix(n, &mut rng, IDENTITY_ENTRY_BOUND);
            let sides: Vec<Rat> = chain
                .iter()
                .map(|p| bj_side(p, &a))
                .collect::<Result<_>>()?;
            for (r, step) in steps.iter().enumerate() {
                let want = sides[r].clone() - sides[r + 1].clone();
                if step_value(step, &a)? != want {
                    passed = false;
                    break 'trials;
                }
            }
        }
        Some(IdentityCheck {
            trials,
            seed,
            passed,
        })
    } else {
        None
    };
    Ok(BjCertificate {
        kind: "coverChain",
        lambda: lambda.clone(),
        mu: mu.clone(),
        chain,
        steps,
        identity,
    })
}

/// Evaluates one step's right-hand side: scale·Σ_J Imm_{ε^ν}(A_J)·bracket(A_{J̄}).
fn step_value(step: &BjStep, a: &RatMatrix) -> Result<Rat> {
    let n = a.rows();
    let np = step.two_row_n;
    let lj = step.two_row_k + 1;
    let li = np - lj;
    let pair = Partition::from_unsorted([li, lj]);
    let moved = Partition::from_unsorted([li + 1, lj - 1]);
    let mut total = Rat::zero();
    for kset in (1..=n).combinations(np) {
        let sub = a.principal_submatrix(&kset)?;
        let comp: Vec<usize> = (1..=n).filter(|v| !kset.contains(v)).collect();
        let bracket =
            rat_int(lj) * imm_eps(&pair, &sub)? - rat_int(li + 1) * imm_eps(&moved, &sub)?;
        if bracket.is_zero() {
            continue;
        }
        total += bracket * imm_eps(&step.nu, &a.principal_submatrix(&comp)?)?;
    }
    Ok(total * Rat::from_integer(Int::from(step.scale.clone())))
}
