//! Principal colorings of Temperley–Lieb diagrams.
//!
//! Overlaying a diagram τ with the identity matching (v ↔ 2n+1−v) cuts the
//! 2n vertices into even alternating cycles. Each cycle admits exactly two
//! proper 2-colorings; a "principal coloring" of τ chooses one per cycle.
//! The number of left-column vertices colored white then controls the
//! expansion coefficients of products of complementary principal minors and
//! of the induced class functions in the diagram immanant basis.
//!
//! For a (noncrossing) diagram every cycle is either balanced — its two
//! colorings whiten the same number of left vertices, which happens exactly
//! when the cycle length is divisible by 4 — or unbalanced, where the two
//! counts differ by one. All coefficient formulas below reduce to that
//! structure: with base = Σ_cycles (smaller left-white count), u unbalanced
//! and b balanced cycles, the number of colorings whitening j left vertices
//! is 2^b·C(u, j − base).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partitions::{binomial, Partition};
use crate::tl::{tl_basis, Diagram};
use crate::{Nat, Result};

/// Cycles of the overlay of τ with the identity matching. Each cycle starts
/// at its smallest vertex, follows the τ-edge first, and alternates between
/// τ-edges and mirror edges; cycles are ordered by smallest vertex.
pub fn tau_hat_cycles(tau: &Diagram) -> Vec<Vec<usize>> {
    let n2 = 2 * tau.n();
    let mirror = |v: usize| n2 + 1 - v;
    let mut seen = vec![false; n2 + 1];
    let mut cycles = Vec::new();
    for start in 1..=n2 {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut v = start;
        let mut along_tau = true;
        loop {
            cycle.push(v);
            seen[v] = true;
            let next = if along_tau { tau.partner(v) } else { mirror(v) };
            along_tau = !along_tau;
            if next == start {
                break;
            }
            v = next;
        }
        cycles.push(cycle);
    }
    cycles
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Balance {
    Balanced,
    Unbalanced,
}

/// The two proper colorings of a cycle, reported as the sets of left-column
/// vertices (≤ n) colored white: smaller set first (lexicographic on ties).
pub fn cycle_left_whites(n: usize, cycle: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for (pos, &v) in cycle.iter().enumerate() {
        if v <= n {
            if pos % 2 == 0 {
                even.push(v);
            } else {
                odd.push(v);
            }
        }
    }
    even.sort_unstable();
    odd.sort_unstable();
    if (even.len(), &even) <= (odd.len(), &odd) {
        (even, odd)
    } else {
        (odd, even)
    }
}

/// Whether a cycle's two colorings whiten equally many left vertices.
pub fn cycle_balance(n: usize, cycle: &[usize]) -> Balance {
    let (lo, hi) = cycle_left_whites(n, cycle);
    if lo.len() == hi.len() {
        Balance::Balanced
    } else {
        Balance::Unbalanced
    }
}

/// Summary of a diagram's cycle structure for the coloring formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColoringProfile {
    /// Sum over cycles of the smaller left-white count.
    pub base: usize,
    /// Number of unbalanced cycles.
    pub unbalanced: usize,
    /// Number of balanced cycles.
    pub balanced: usize,
}

impl ColoringProfile {
    pub fn cycles(&self) -> usize {
        self.unbalanced + self.balanced
    }
}

pub fn coloring_profile(tau: &Diagram) -> ColoringProfile {
    let n = tau.n();
    let mut profile = ColoringProfile {
        base: 0,
        unbalanced: 0,
        balanced: 0,
    };
    for cycle in tau_hat_cycles(tau) {
        let (lo, hi) = cycle_left_whites(n, &cycle);
        debug_assert!(
            hi.len() - lo.len() <= 1,
            "left-white counts differ by at most one"
        );
        profile.base += lo.len();
        if lo.len() == hi.len() {
            profile.balanced += 1;
        } else {
            profile.unbalanced += 1;
        }
    }
    profile
}

/// The pair (α, β) = (u − (j − base), j − base) locating j within the range
/// of left-white counts of τ; None when no coloring whitens j left vertices.
pub fn alpha_beta(tau: &Diagram, j: usize) -> Result<Option<(usize, usize)>> {
    let n = tau.n();
    if j > n {
        return Err(Error::OutOfRange {
            what: "left-white count".into(),
            value: j.to_string(),
            allowed: format!("0..={n}"),
        });
    }
    let p = coloring_profile(tau);
    if j < p.base || j > p.base + p.unbalanced {
        return Ok(None);
    }
    Ok(Some((p.unbalanced - (j - p.base), j - p.base)))
}

/// Number of principal colorings of τ whitening exactly j left vertices:
/// 2^balanced·C(unbalanced, j − base).
pub fn d_coeff(j: usize, tau: &Diagram) -> Result<Nat> {
    let n = tau.n();
    if j > n {
        return Err(Error::OutOfRange {
            what: "left-white count".into(),
            value: j.to_string(),
            allowed: format!("0..={n}"),
        });
    }
    let p = coloring_profile(tau);
    if j < p.base || j > p.base + p.unbalanced {
        return Ok(Nat::from(0u32));
    }
    let two_pow = Nat::from(1u32) << p.balanced;
    Ok(two_pow * binomial(p.unbalanced, j - p.base))
}

/// Coefficient of Imm_τ in the diagram expansion of the class function
/// attached to the monomial symmetric function m_μ, for μ with parts ≤ 2:
/// 2^balanced when base + unbalanced = ℓ(μ), otherwise 0.
pub fn b_mu_tau(mu: &Partition, tau: &Diagram) -> Result<Nat> {
    if mu.n() != tau.n() {
        return Err(Error::SizeMismatch {
            left: mu.n(),
            right: tau.n(),
            context: "partition and diagram sizes must agree",
        });
    }
    if mu.parts().iter().any(|&p| p > 2) {
        return Err(Error::NotAPartition(format!(
            "({mu}) has a part exceeding 2; only μ = 2^c 1^e expand over diagrams"
        )));
    }
    let p = coloring_profile(tau);
    if p.base + p.unbalanced == mu.len() {
        Ok(Nat::from(1u32) << p.balanced)
    } else {
        Ok(Nat::from(0u32))
    }
}

/// Whether some principal coloring of τ whitens exactly the left vertices
/// in `i_set`: true iff within every cycle, i_set picks out one of the two
/// proper colorings.
pub fn principal_product_coeff(i_set: &[usize], tau: &Diagram) -> Result<bool> {
    let n = tau.n();
    let set = validate_index_set(i_set, n)?;
    for cycle in tau_hat_cycles(tau) {
        let (lo, hi) = cycle_left_whites(n, &cycle);
        let restricted: Vec<usize> = cycle
            .iter()
            .copied()
            .filter(|v| *v <= n && set.contains(v))
            .collect();
        let mut restricted = restricted;
        restricted.sort_unstable();
        if restricted != lo && restricted != hi {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The 0/1 coefficients expressing Δ_I·Δ_{I̅} over the whole diagram basis.
pub fn one_prod_coeffs(i_set: &[usize], n: usize) -> Result<BTreeMap<Diagram, bool>> {
    validate_index_set(i_set, n)?;
    let mut out = BTreeMap::new();
    for tau in tl_basis(n)? {
        let b = principal_product_coeff(i_set, &tau)?;
        out.insert(tau, b);
    }
    Ok(out)
}

fn validate_index_set(i_set: &[usize], n: usize) -> Result<std::collections::BTreeSet<usize>> {
    let set: std::collections::BTreeSet<usize> = i_set.iter().copied().collect();
    if set.len() != i_set.len() {
        return Err(Error::Parse(format!("index set {i_set:?} has repeats")));
    }
    if let Some(&v) = set.iter().find(|&&v| v == 0 || v > n) {
        return Err(Error::OutOfRange {
            what: "index".into(),
            value: v.to_string(),
            allowed: format!("1..={n}"),
        });
    }
    Ok(set)
}
