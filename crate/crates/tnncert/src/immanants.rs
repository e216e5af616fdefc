//! Immanant evaluation in exact arithmetic: determinant (fraction-free),
//! permanent (inclusion–exclusion), generic immanants Σ_w f(w)·Π_i a_{i,w(i)}
//! for arbitrary class functions, the induced-character immanants evaluated
//! through principal-minor tables, and Temperley–Lieb diagram immanants.

use std::collections::HashMap;

use num::BigInt;

use crate::error::Error;
use crate::matrix::Matrix;
use crate::partitions::{ordered_set_partitions, partitions_of, Partition};
use crate::scalar::{scalar_from_bigint, DivScalar, Scalar};
use crate::symfunc::{char_value, monomial_char_value};
use crate::symgroup::Permutation;
use crate::tl::{sigma_table, tl_basis, Diagram, TLElement};
use crate::Result;

/// Largest n for streaming a full symmetric group.
pub const MAX_GENERIC_N: usize = 9;
/// Largest n for character-driven immanants (per-permutation class lookup).
pub const MAX_CHAR_N: usize = 8;
/// Largest n for diagram immanants.
pub const MAX_TAU_N: usize = 8;
/// Largest n for the 2^n principal-minor tables.
pub const MAX_MINOR_TABLE_N: usize = 12;

fn require_square<T>(a: &Matrix<T>) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::SizeMismatch {
            left: a.rows(),
            right: a.cols(),
            context: "immanants need a square matrix",
        });
    }
    Ok(a.rows())
}

fn check_n(what: &str, n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::OutOfRange {
            what: what.into(),
            value: n.to_string(),
            allowed: format!("0..={max}"),
        });
    }
    Ok(())
}

/// Determinant by the fraction-free Bareiss elimination with row pivoting;
/// every division is exact over an integral domain. det of the empty matrix
/// is 1.
pub fn determinant<T: DivScalar>(a: &Matrix<T>) -> Result<T> {
    let n = require_square(a)?;
    if n == 0 {
        return Ok(T::one());
    }
    let mut m: Vec<Vec<T>> = (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j).clone()).collect())
        .collect();
    let mut negated = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k] == T::zero() {
            let Some(r) = (k + 1..n).find(|&r| m[r][k] != T::zero()) else {
                return Ok(T::zero());
            };
            m.swap(k, r);
            negated = !negated;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num / prev.clone();
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negated { -d } else { d })
}

/// Permanent by Ryser's inclusion–exclusion over column subsets; ring
/// operations only. per of the empty matrix is 1.
pub fn permanent<T: Scalar>(a: &Matrix<T>) -> Result<T> {
    let n = require_square(a)?;
    check_n("permanent size", n, MAX_MINOR_TABLE_N)?;
    if n == 0 {
        return Ok(T::one());
    }
    let mut total = T::zero();
    for mask in 1usize..1 << n {
        let mut prod = T::one();
        for i in 0..n {
            let mut s = T::zero();
            for j in 0..n {
                if mask >> j & 1 == 1 {
                    s = s + a.get(i, j).clone();
                }
            }
            prod = prod * s;
        }
        if (n - mask.count_ones() as usize) % 2 == 0 {
            total = total + prod;
        } else {
            total = total - prod;
        }
    }
    Ok(total)
}

/// det A_{I,J} for 1-based index sets; the empty minor is 1.
pub fn minor_det<T: DivScalar>(a: &Matrix<T>, row_set: &[usize], col_set: &[usize]) -> Result<T> {
    determinant(&a.submatrix(row_set, col_set)?)
}

fn mask_of_set(i_set: &[usize], n: usize) -> Result<usize> {
    let mut mask = 0usize;
    for &v in i_set {
        if v == 0 || v > n {
            return Err(Error::OutOfRange {
                what: "index".into(),
                value: v.to_string(),
                allowed: format!("1..={n}"),
            });
        }
        if mask >> (v - 1) & 1 == 1 {
            return Err(Error::Parse(format!("index set {i_set:?} has repeats")));
        }
        mask |= 1 << (v - 1);
    }
    Ok(mask)
}

fn set_of_mask(mask: usize, n: usize) -> Vec<usize> {
    (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect()
}

/// All 2^n principal minors det A_{I,I}, indexed by the bitmask of I.
pub struct PrincipalMinors<T> {
    n: usize,
    vals: Vec<T>,
}

impl<T: DivScalar> PrincipalMinors<T> {
    pub fn new(a: &Matrix<T>) -> Result<Self> {
        let n = require_square(a)?;
        check_n("principal-minor table size", n, MAX_MINOR_TABLE_N)?;
        let mut vals = Vec::with_capacity(1 << n);
        for mask in 0..1usize << n {
            let set = set_of_mask(mask, n);
            vals.push(minor_det(a, &set, &set)?);
        }
        Ok(PrincipalMinors { n, vals })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn by_mask(&self, mask: usize) -> &T {
        &self.vals[mask]
    }

    pub fn by_set(&self, i_set: &[usize]) -> Result<&T> {
        Ok(self.by_mask(mask_of_set(i_set, self.n)?))
    }
}

/// All 2^n principal permanents per A_{I,I}, indexed by bitmask.
pub struct PrincipalPermanents<T> {
    n: usize,
    vals: Vec<T>,
}

impl<T: Scalar> PrincipalPermanents<T> {
    pub fn new(a: &Matrix<T>) -> Result<Self> {
        let n = require_square(a)?;
        check_n("principal-permanent table size", n, MAX_MINOR_TABLE_N)?;
        let mut vals = Vec::with_capacity(1 << n);
        for mask in 0..1usize << n {
            let set = set_of_mask(mask, n);
            vals.push(permanent(&a.principal_submatrix(&set)?)?);
        }
        Ok(PrincipalPermanents { n, vals })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn by_mask(&self, mask: usize) -> &T {
        &self.vals[mask]
    }

    pub fn by_set(&self, i_set: &[usize]) -> Result<&T> {
        Ok(self.by_mask(mask_of_set(i_set, self.n)?))
    }
}

pub(crate) fn diagonal_product<T: Scalar>(a: &Matrix<T>, w: &Permutation) -> T {
    let mut prod = T::one();
    for i in 1..=w.n() {
        prod = prod * a.get(i - 1, w.apply(i) - 1).clone();
    }
    prod
}

/// Σ_w f(w)·Π_i a_{i,w(i)} for an arbitrary weight function; n ≤ 9.
pub fn imm_generic<T: Scalar>(mut f: impl FnMut(&Permutation) -> T, a: &Matrix<T>) -> Result<T> {
    use itertools::Itertools;
    let n = require_square(a)?;
    check_n("generic immanant size", n, MAX_GENERIC_N)?;
    if n == 0 {
        return Ok(T::one());
    }
    let mut acc = T::zero();
    for one_line in (1..=n).permutations(n) {
        let w = Permutation::new(one_line).expect("permutations stream is valid");
        let weight = f(&w);
        if weight == T::zero() {
            continue;
        }
        acc = acc + weight * diagonal_product(a, &w);
    }
    Ok(acc)
}

/// Irreducible-character immanant Imm_{χ^λ}; n ≤ 8.
pub fn imm_char<T: Scalar>(lambda: &Partition, a: &Matrix<T>) -> Result<T> {
    let n = require_square(a)?;
    check_n("character immanant size", n, MAX_CHAR_N)?;
    if lambda.n() != n {
        return Err(Error::SizeMismatch {
            left: lambda.n(),
            right: n,
            context: "character degree must equal matrix size",
        });
    }
    let mut by_type: HashMap<Partition, T> = HashMap::new();
    for mu in partitions_of(n) {
        let v = char_value(lambda, &mu)?;
        by_type.insert(mu, scalar_from_bigint(&v));
    }
    imm_generic(|w| by_type[&w.cycle_type()].clone(), a)
}

/// Induced-sign-character immanant Imm_{ε^λ}: the sum over ordered set
/// partitions (J₁,…,J_r) of type λ of Π_i det A_{J_i,J_i}.
pub fn imm_eps<T: DivScalar>(lambda: &Partition, a: &Matrix<T>) -> Result<T> {
    let n = require_square(a)?;
    if lambda.n() != n {
        return Err(Error::SizeMismatch {
            left: lambda.n(),
            right: n,
            context: "partition weight must equal matrix size",
        });
    }
    let minors = PrincipalMinors::new(a)?;
    let mut acc = T::zero();
    for osp in ordered_set_partitions(n, lambda.parts())? {
        let mut prod = T::one();
        for block in osp.blocks() {
            prod = prod * minors.by_mask(mask_of_set(block, n)?).clone();
        }
        acc = acc + prod;
    }
    Ok(acc)
}

/// Induced-trivial-character immanant Imm_{η^λ}: as above with permanents.
pub fn imm_eta<T: Scalar>(lambda: &Partition, a: &Matrix<T>) -> Result<T> {
    let n = require_square(a)?;
    if lambda.n() != n {
        return Err(Error::SizeMismatch {
            left: lambda.n(),
            right: n,
            context: "partition weight must equal matrix size",
        });
    }
    let permanents = PrincipalPermanents::new(a)?;
    let mut acc = T::zero();
    for osp in ordered_set_partitions(n, lambda.parts())? {
        let mut prod = T::one();
        for block in osp.blocks() {
            prod = prod * permanents.by_mask(mask_of_set(block, n)?).clone();
        }
        acc = acc + prod;
    }
    Ok(acc)
}

/// Every diagram immanant of A at once: pairs (τ, Imm_τ(A)) over the whole
/// basis in increasing diagram order; n ≤ 8.
///
/// For n ≤ 7 the cached expansion table supplies every σ row; n = 8 walks
/// the prefix tree of deterministic reduced words, building σ incrementally
/// so each permutation costs one basis multiplication.
pub fn imm_tau_all<T: Scalar>(a: &Matrix<T>) -> Result<Vec<(Diagram, T)>> {
    let n = require_square(a)?;
    check_n("diagram immanant size", n, MAX_TAU_N)?;
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "diagram immanant size".into(),
            value: "0".into(),
            allowed: "1..=8".into(),
        });
    }
    if n <= crate::tl::MAX_SIGMA_TABLE_N {
        let table = sigma_table(n)?;
        let mut acc = vec![T::zero(); table.basis().len()];
        for (rank, w) in table.perms().iter().enumerate() {
            let mon = diagonal_product(a, w);
            for &(d, c) in table.row(rank) {
                acc[d as usize] = acc[d as usize].clone() + T::from_int(c) * mon.clone();
            }
        }
        return Ok(table.basis().iter().cloned().zip(acc).collect());
    }
    let basis = tl_basis(n)?;
    let index: HashMap<Diagram, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, d)| (d.clone(), i))
        .collect();
    let mut acc = vec![T::zero(); basis.len()];
    let root = Permutation::identity(n);
    let elem = TLElement::from_diagram(Diagram::identity(n));
    walk(&root, &mut Vec::new(), &elem, a, &index, &mut acc)?;
    return Ok(basis.into_iter().zip(acc).collect());

    fn walk<T: Scalar>(
        v: &Permutation,
        word: &mut Vec<usize>,
        elem: &TLElement,
        a: &Matrix<T>,
        index: &HashMap<Diagram, usize>,
        acc: &mut [T],
    ) -> Result<()> {
        let mon = diagonal_product(a, v);
        for (d, c) in elem.terms() {
            let slot = index[d];
            acc[slot] = acc[slot].clone() + T::from_int(c) * mon.clone();
        }
        let n = v.n();
        for i in 1..n {
            if v.apply(i) >= v.apply(i + 1) {
                continue;
            }
            let mut line = v.one_line().to_vec();
            line.swap(i - 1, i);
            let child = Permutation::new(line).expect("swap keeps a permutation");
            word.push(i);
            if child.reduced_word() == *word {
                let next = elem.mul_gen_minus_one(i)?;
                walk(&child, word, &next, a, index, acc)?;
            }
            word.pop();
        }
        Ok(())
    }
}

/// The diagram immanant Imm_τ(A) = Σ_w f_τ(w)·Π_i a_{i,w(i)}; n ≤ 8.
pub fn imm_tau<T: Scalar>(tau: &Diagram, a: &Matrix<T>) -> Result<T> {
    let n = require_square(a)?;
    if tau.n() != n {
        return Err(Error::SizeMismatch {
            left: tau.n(),
            right: n,
            context: "diagram size must equal matrix size",
        });
    }
    let all = imm_tau_all(a)?;
    all.into_iter()
        .find(|(d, _)| d == tau)
        .map(|(_, v)| v)
        .ok_or_else(|| Error::InvalidDiagram(format!("{tau:?} is not a basis diagram")))
}

/// Which route evaluates the monomial-indexed immanant Imm_{φ^μ}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiRoute {
    /// Inverse-Kostka combination of irreducible characters.
    Character,
    /// Diagram-basis expansion; requires every part of μ to be ≤ 2.
    TemperleyLieb,
}

/// Imm_{φ^μ}(A) for the class function φ^μ attached to the monomial
/// symmetric function m_μ.
pub fn imm_phi<T: Scalar>(mu: &Partition, a: &Matrix<T>, route: PhiRoute) -> Result<T> {
    let n = require_square(a)?;
    if mu.n() != n {
        return Err(Error::SizeMismatch {
            left: mu.n(),
            right: n,
            context: "partition weight must equal matrix size",
        });
    }
    match route {
        PhiRoute::Character => {
            check_n("monomial immanant size", n, MAX_CHAR_N)?;
            let mut by_type: HashMap<Partition, T> = HashMap::new();
            for cls in partitions_of(n) {
                let v = monomial_char_value(mu, &cls)?;
                by_type.insert(cls, scalar_from_bigint(&v));
            }
            imm_generic(|w| by_type[&w.cycle_type()].clone(), a)
        }
        PhiRoute::TemperleyLieb => {
            let mut acc = T::zero();
            for (tau, imm) in imm_tau_all(a)? {
                let b = crate::colorings::b_mu_tau(mu, &tau)?;
                if b != crate::Nat::from(0u32) {
                    acc = acc + scalar_from_bigint::<T>(&BigInt::from(b)) * imm;
                }
            }
            Ok(acc)
        }
    }
}
