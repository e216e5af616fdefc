//! Symmetric-function expansions and symmetric-group characters, all in
//! exact integer arithmetic: elementary-to-monomial expansion coefficients,
//! Kostka numbers and the inverse Kostka matrix, irreducible characters via
//! the Murnaghan–Nakayama rule, and the induced/monomial class functions
//! built from them.

use std::collections::{BTreeMap, HashMap};

use num::{BigInt, Zero};

use crate::error::Error;
use crate::partitions::{binomial, partitions_of, Partition};
use crate::{Int, Nat, Result};

/// Number of 0-1 matrices with row sums `rows` and column sums `cols`.
///
/// Computed by a column-by-column DP whose state is the multiset of remaining
/// row capacities; rows with equal capacity are interchangeable, so each
/// column contributes a product of binomials over capacity groups.
pub fn zero_one_matrix_count(rows: &Partition, cols: &Partition) -> Result<Nat> {
    if rows.n() != cols.n() {
        return Err(Error::SizeMismatch {
            left: rows.n(),
            right: cols.n(),
            context: "0-1 matrix row and column sums must agree",
        });
    }
    let mut memo: HashMap<(usize, Vec<usize>), Nat> = HashMap::new();
    let caps: Vec<usize> = rows.parts().to_vec();
    return Ok(count(0, caps, cols, &mut memo));

    fn count(
        j: usize,
        mut caps: Vec<usize>,
        cols: &Partition,
        memo: &mut HashMap<(usize, Vec<usize>), Nat>,
    ) -> Nat {
        caps.retain(|&c| c > 0);
        caps.sort_unstable_by(|a, b| b.cmp(a));
        if j == cols.len() {
            return if caps.is_empty() {
                Nat::from(1u32)
            } else {
                Nat::zero()
            };
        }
        let key = (j, caps.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        // group remaining capacities by value
        let mut groups: Vec<(usize, usize)> = Vec::new(); // (capacity, count)
        for &c in &caps {
            match groups.last_mut() {
                Some((g, cnt)) if *g == c => *cnt += 1,
                _ => groups.push((c, 1)),
            }
        }
        let need = cols.part(j);
        let mut total = Nat::zero();
        // enumerate how many rows of each capacity group receive a 1
        let mut take = vec![0usize; groups.len()];
        enumerate(0, need, &mut take, &groups, &mut |take| {
            let mut ways = Nat::from(1u32);
            let mut next = Vec::with_capacity(caps.len());
            for (g, &(cap, cnt)) in groups.iter().enumerate() {
                ways *= binomial(cnt, take[g]);
                for _ in 0..take[g] {
                    next.push(cap - 1);
                }
                for _ in take[g]..cnt {
                    next.push(cap);
                }
            }
            total += ways * count(j + 1, next, cols, memo);
        });
        memo.insert(key, total.clone());
        return total;

        fn enumerate(
            g: usize,
            rem: usize,
            take: &mut Vec<usize>,
            groups: &[(usize, usize)],
            f: &mut impl FnMut(&[usize]),
        ) {
            if g == groups.len() {
                if rem == 0 {
                    f(take);
                }
                return;
            }
            for t in 0..=rem.min(groups[g].1) {
                take[g] = t;
                enumerate(g + 1, rem - t, take, groups, f);
            }
            take[g] = 0;
        }
    }
}

/// Expansion of the elementary symmetric function e_λ in the monomial basis:
/// a map μ → M_{λμ} over the partitions μ of |λ| with nonzero coefficient.
pub fn e_to_m(lambda: &Partition) -> BTreeMap<Partition, Nat> {
    let mut out = BTreeMap::new();
    for mu in partitions_of(lambda.n()) {
        let c = zero_one_matrix_count(lambda, &mu).expect("equal sums");
        if !c.is_zero() {
            out.insert(mu, c);
        }
    }
    out
}

/// Kostka number K_{λμ}: semistandard tableaux of shape λ and content μ,
/// computed by peeling the horizontal strip of the largest entry.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<Nat> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch {
            left: lambda.n(),
            right: mu.n(),
            context: "Kostka numbers need |λ| = |μ|",
        });
    }
    let mut memo: HashMap<(Vec<usize>, usize), Nat> = HashMap::new();
    return Ok(count(lambda.parts().to_vec(), mu.len(), mu, &mut memo));

    fn count(
        mut shape: Vec<usize>,
        k: usize,
        mu: &Partition,
        memo: &mut HashMap<(Vec<usize>, usize), Nat>,
    ) -> Nat {
        shape.retain(|&r| r > 0);
        if k == 0 {
            return if shape.is_empty() {
                Nat::from(1u32)
            } else {
                Nat::zero()
            };
        }
        let key = (shape.clone(), k);
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let strip = mu.part(k - 1);
        let mut total = Nat::zero();
        // enumerate inner shapes ν with shape/ν a horizontal strip of the
        // right size: shape_{i+1} ≤ ν_i ≤ shape_i row by row
        let rows = shape.len();
        let mut nu = vec![0usize; rows];
        dfs(0, strip, &mut nu, &shape, &mut |nu: &[usize]| {
            total += count(nu.to_vec(), k - 1, mu, memo);
        });
        memo.insert(key, total.clone());
        return total;

        fn dfs(
            i: usize,
            rem: usize,
            nu: &mut Vec<usize>,
            shape: &[usize],
            f: &mut impl FnMut(&[usize]),
        ) {
            if i == shape.len() {
                if rem == 0 {
                    f(nu);
                }
                return;
            }
            let lo = if i + 1 < shape.len() { shape[i + 1] } else { 0 };
            let hi = shape[i];
            for v in lo..=hi {
                let removed = hi - v;
                if removed > rem {
                    continue;
                }
                nu[i] = v;
                dfs(i + 1, rem - removed, nu, shape, f);
            }
        }
    }
}

/// The inverse Kostka matrix for partitions of n, indexed in the
/// reverse-lexicographic order of `partitions_of(n)`; n ≤ 9.
///
/// In that order the Kostka matrix is upper unitriangular (K_{λμ} ≠ 0 forces
/// μ ⪯ λ, and dominance implies reverse-lexicographic precedence), so the
/// inverse is computed by exact integer back substitution.
pub struct InverseKostka {
    order: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    inv: Vec<Vec<Int>>,
}

pub const MAX_INVERSE_KOSTKA_N: usize = 9;

impl InverseKostka {
    pub fn order(&self) -> &[Partition] {
        &self.order
    }

    /// (K⁻¹)_{λμ}; zero when the entry vanishes.
    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> Int {
        match (self.index.get(lambda), self.index.get(mu)) {
            (Some(&i), Some(&j)) => self.inv[i][j].clone(),
            _ => Int::zero(),
        }
    }

    /// The whole row of coefficients expressing m_λ in Schur terms.
    pub fn row(&self, lambda: &Partition) -> Vec<(Partition, Int)> {
        let i = self.index[lambda];
        self.order
            .iter()
            .zip(&self.inv[i])
            .filter(|(_, c)| !c.is_zero())
            .map(|(mu, c)| (mu.clone(), c.clone()))
            .collect()
    }
}

pub fn inverse_kostka(n: usize) -> Result<InverseKostka> {
    if n == 0 || n > MAX_INVERSE_KOSTKA_N {
        return Err(Error::OutOfRange {
            what: "inverse Kostka degree".into(),
            value: n.to_string(),
            allowed: format!("1..={MAX_INVERSE_KOSTKA_N}"),
        });
    }
    let order = partitions_of(n);
    let m = order.len();
    let mut k = vec![vec![Int::zero(); m]; m];
    for i in 0..m {
        for j in 0..m {
            let val = kostka(&order[i], &order[j])?;
            k[i][j] = Int::from(BigInt::from(val));
        }
    }
    // back substitution on an upper unitriangular matrix, column by column
    let mut inv = vec![vec![Int::zero(); m]; m];
    for j in 0..m {
        let mut col = vec![Int::zero(); j + 1];
        col[j] = Int::from(1);
        for i in (0..j).rev() {
            let mut acc = Int::zero();
            for t in i + 1..=j {
                acc += &k[i][t] * &col[t];
            }
            col[i] = -acc;
        }
        for (i, v) in col.into_iter().enumerate() {
            inv[i][j] = v;
        }
    }
    let index = order.iter().cloned().zip(0..).collect();
    Ok(InverseKostka { order, index, inv })
}

fn beta_numbers(mu: &Partition) -> Vec<usize> {
    let l = mu.len();
    (0..l).map(|i| mu.part(i) + l - 1 - i).collect()
}

/// Irreducible character value χ^μ(λ) by the Murnaghan–Nakayama rule,
/// implemented on first-column hook lengths (beta numbers): removing a
/// border strip of size s replaces some b ∈ β with b − s, with sign given by
/// the number of beta numbers strictly between them.
pub fn char_value(mu: &Partition, lambda: &Partition) -> Result<Int> {
    if mu.n() != lambda.n() {
        return Err(Error::SizeMismatch {
            left: mu.n(),
            right: lambda.n(),
            context: "character values need |μ| = |λ|",
        });
    }
    let mut memo: HashMap<(Vec<usize>, usize), i64> = HashMap::new();
    let beta = beta_numbers(mu);
    return Ok(Int::from(strip(beta, lambda.parts(), &mut memo)));

    fn strip(
        beta: Vec<usize>,
        parts: &[usize],
        memo: &mut HashMap<(Vec<usize>, usize), i64>,
    ) -> i64 {
        if parts.is_empty() {
            return 1;
        }
        let key = (beta.clone(), parts.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let s = parts[0];
        let mut total = 0i64;
        for (idx, &b) in beta.iter().enumerate() {
            if b < s || beta.contains(&(b - s)) {
                continue;
            }
            let crossings = beta.iter().filter(|&&x| b - s < x && x < b).count();
            let sign = if crossings % 2 == 0 { 1 } else { -1 };
            let mut next = beta.clone();
            next[idx] = b - s;
            next.sort_unstable_by(|a, b| b.cmp(a));
            total += sign * strip(next, &parts[1..], memo);
        }
        memo.insert(key, total);
        total
    }
}

/// Value at class λ of the monomial class function indexed by μ (the class
/// function whose Frobenius image is m_μ): Σ_ν (K⁻¹)_{μν} χ^ν(λ).
pub fn monomial_char_value(mu: &Partition, lambda: &Partition) -> Result<Int> {
    if mu.n() != lambda.n() {
        return Err(Error::SizeMismatch {
            left: mu.n(),
            right: lambda.n(),
            context: "class function values need |μ| = |λ|",
        });
    }
    let ik = inverse_kostka(mu.n())?;
    let mut acc = Int::zero();
    for (nu, c) in ik.row(mu) {
        acc += c * char_value(&nu, lambda)?;
    }
    Ok(acc)
}

/// Value at class λ of the sign character induced from the Young subgroup
/// S_{ν₁}×⋯×S_{ν_r}: Σ_μ K_{μᵀ ν} χ^μ(λ), matching e_ν = Σ_μ K_{μᵀ ν} s_μ.
pub fn induced_sign_char_value(nu: &Partition, lambda: &Partition) -> Result<Int> {
    if nu.n() != lambda.n() {
        return Err(Error::SizeMismatch {
            left: nu.n(),
            right: lambda.n(),
            context: "class function values need equal degrees",
        });
    }
    let mut acc = Int::zero();
    for mu in partitions_of(nu.n()) {
        let k = kostka(&mu.transpose(), nu)?;
        if !k.is_zero() {
            acc += Int::from(BigInt::from(k)) * char_value(&mu, lambda)?;
        }
    }
    Ok(acc)
}

/// Value at class λ of the trivial character induced from the Young subgroup
/// S_{ν₁}×⋯×S_{ν_r}: Σ_μ K_{μν} χ^μ(λ), matching h_ν = Σ_μ K_{μν} s_μ.
pub fn induced_trivial_char_value(nu: &Partition, lambda: &Partition) -> Result<Int> {
    if nu.n() != lambda.n() {
        return Err(Error::SizeMismatch {
            left: nu.n(),
            right: lambda.n(),
            context: "class function values need equal degrees",
        });
    }
    let mut acc = Int::zero();
    for mu in partitions_of(nu.n()) {
        let k = kostka(&mu, nu)?;
        if !k.is_zero() {
            acc += Int::from(BigInt::from(k)) * char_value(&mu, lambda)?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{factorial, majorization_leq, multinomial};
    use crate::symgroup::{all_permutations, class_size};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    /// Independent oracle: choose each column of the 0-1 matrix as an
    /// explicit subset of rows by backtracking.
    fn zero_one_count_oracle(rows: &[usize], cols: &[usize]) -> u64 {
        fn rec(caps: &mut Vec<usize>, cols: &[usize]) -> u64 {
            let Some((&size, rest)) = cols.split_first() else {
                return caps.iter().all(|&c| c == 0) as u64;
            };
            let mut total = 0;
            let n = caps.len();
            let mut subset = Vec::new();
            fn choose(
                start: usize,
                need: usize,
                n: usize,
                subset: &mut Vec<usize>,
                caps: &mut Vec<usize>,
                rest: &[usize],
                total: &mut u64,
            ) {
                if need == 0 {
                    *total += rec(caps, rest);
                    return;
                }
                for i in start..n {
                    if caps[i] > 0 {
                        caps[i] -= 1;
                        subset.push(i);
                        choose(i + 1, need - 1, n, subset, caps, rest, total);
                        subset.pop();
                        caps[i] += 1;
                    }
                }
            }
            choose(0, size, n, &mut subset, caps, rest, &mut total);
            total
        }
        rec(&mut rows.to_vec(), cols)
    }

    #[test]
    fn zero_one_counts_match_backtracking_oracle() {
        for n in 1..=5 {
            for rows in partitions_of(n) {
                for cols in partitions_of(n) {
                    let got = zero_one_matrix_count(&rows, &cols).unwrap();
                    let want = zero_one_count_oracle(rows.parts(), cols.parts());
                    assert_eq!(got, nat(want), "rows {rows} cols {cols}");
                }
            }
        }
        // a couple of larger spot checks
        assert_eq!(
            zero_one_matrix_count(&p(&[3, 2, 1]), &p(&[2, 2, 1, 1])).unwrap(),
            nat(zero_one_count_oracle(&[3, 2, 1], &[2, 2, 1, 1]))
        );
        assert!(zero_one_matrix_count(&p(&[2, 1]), &p(&[2])).is_err());
    }

    #[test]
    fn e_to_m_frozen_expansion() {
        let exp = e_to_m(&p(&[2, 2, 1]));
        let want: Vec<(&[usize], u64)> = vec![
            (&[3, 2], 1),
            (&[3, 1, 1], 2),
            (&[2, 2, 1], 5),
            (&[2, 1, 1, 1], 12),
            (&[1, 1, 1, 1, 1], 30),
        ];
        assert_eq!(exp.len(), want.len());
        for (parts, c) in want {
            assert_eq!(exp[&p(parts)], nat(c), "m_({parts:?})");
        }
        // e_n = m_{1^n}
        let en = e_to_m(&p(&[4]));
        assert_eq!(en.len(), 1);
        assert_eq!(en[&p(&[1, 1, 1, 1])], nat(1));
    }

    #[test]
    fn e_to_m_support_is_dominance_below_transpose() {
        for n in 1..=8 {
            for lam in partitions_of(n) {
                let exp = e_to_m(&lam);
                let lt = lam.transpose();
                for mu in partitions_of(n) {
                    let in_support = exp.contains_key(&mu);
                    let dominated = majorization_leq(&mu, &lt).unwrap();
                    assert_eq!(in_support, dominated, "λ = {lam}, μ = {mu}");
                }
                // leading coefficient: M_{λ,λᵀ} = 1
                assert_eq!(exp[&lt], nat(1));
            }
        }
    }

    /// m_μ evaluated at k ones: the number of distinct rearrangements of μ
    /// into k slots.
    fn m_at_ones(mu: &Partition, k: usize) -> Nat {
        if mu.len() > k {
            return Nat::zero();
        }
        let mut sizes: Vec<usize> = mu.multiplicities().values().copied().collect();
        sizes.push(k - mu.len());
        multinomial(k, &sizes).unwrap()
    }

    #[test]
    fn principal_specialization_identity() {
        // e_λ(1,…,1) (k ones) = Π C(k, λ_i) must equal Σ_μ M_{λμ}·m_μ(1^k)
        for n in 1..=7 {
            for lam in partitions_of(n) {
                let exp = e_to_m(&lam);
                for k in 1..=n {
                    let lhs: Nat = lam.parts().iter().map(|&a| binomial(k, a)).product();
                    let rhs: Nat = exp.iter().map(|(mu, c)| c.clone() * m_at_ones(mu, k)).sum();
                    assert_eq!(lhs, rhs, "λ = {lam}, k = {k}");
                }
            }
        }
    }

    /// Brute-force SSYT enumeration for small shapes.
    fn kostka_oracle(lambda: &Partition, mu: &Partition) -> u64 {
        let rows = lambda.len();
        let mut grid: Vec<Vec<usize>> = (0..rows).map(|i| vec![0; lambda.part(i)]).collect();
        let mut content: Vec<usize> = (0..mu.len()).map(|i| mu.part(i)).collect();
        fn rec(grid: &mut Vec<Vec<usize>>, content: &mut Vec<usize>, r: usize, c: usize) -> u64 {
            let rows = grid.len();
            if r == rows {
                return 1;
            }
            if c == grid[r].len() {
                return rec(grid, content, r + 1, 0);
            }
            let mut total = 0;
            for v in 1..=content.len() {
                if content[v - 1] == 0 {
                    continue;
                }
                if c > 0 && grid[r][c - 1] > v {
                    continue;
                }
                if r > 0 && grid[r - 1][c] >= v {
                    continue;
                }
                grid[r][c] = v;
                content[v - 1] -= 1;
                total += rec(grid, content, r, c + 1);
                content[v - 1] += 1;
                grid[r][c] = 0;
            }
            total
        }
        rec(&mut grid, &mut content, 0, 0)
    }

    #[test]
    fn kostka_matches_tableau_enumeration() {
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), nat(2));
        for n in 1..=5 {
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    assert_eq!(
                        kostka(&lam, &mu).unwrap(),
                        nat(kostka_oracle(&lam, &mu)),
                        "K_({lam})({mu})"
                    );
                }
            }
        }
        assert!(kostka(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn kostka_triangularity_and_standard_counts() {
        for n in 1..=7 {
            for lam in partitions_of(n) {
                assert_eq!(kostka(&lam, &lam).unwrap(), nat(1));
                for mu in partitions_of(n) {
                    let nonzero = !kostka(&lam, &mu).unwrap().is_zero();
                    assert_eq!(nonzero, majorization_leq(&mu, &lam).unwrap());
                }
            }
        }
        // standard Young tableaux of n = 4
        let ones = p(&[1, 1, 1, 1]);
        assert_eq!(kostka(&p(&[2, 2]), &ones).unwrap(), nat(2));
        assert_eq!(kostka(&p(&[3, 1]), &ones).unwrap(), nat(3));
        assert_eq!(kostka(&p(&[2, 1, 1]), &ones).unwrap(), nat(3));
    }

    #[test]
    fn inverse_kostka_inverts_kostka() {
        for n in 1..=8 {
            let ik = inverse_kostka(n).unwrap();
            let order = ik.order().to_vec();
            let m = order.len();
            for i in 0..m {
                for j in 0..m {
                    let mut acc = Int::zero();
                    for t in 0..m {
                        let k = kostka(&order[i], &order[t]).unwrap();
                        acc += Int::from(BigInt::from(k)) * ik.entry(&order[t], &order[j]);
                    }
                    let want = Int::from((i == j) as i64);
                    assert_eq!(acc, want, "n = {n}, ({i},{j})");
                }
            }
        }
        assert!(inverse_kostka(10).is_err());
        assert!(inverse_kostka(0).is_err());
    }

    #[test]
    fn inverse_kostka_top_row_gives_power_sum_signs() {
        // m_(n) = p_n, whose Schur coefficients are χ^μ(n-cycle): hook signs
        for n in 1..=7 {
            let ik = inverse_kostka(n).unwrap();
            let full = p(&[n]);
            for mu in partitions_of(n) {
                assert_eq!(
                    ik.entry(&full, &mu),
                    char_value(&mu, &full).unwrap(),
                    "n = {n}, μ = {mu}"
                );
            }
        }
    }

    #[test]
    fn character_values_small_cases() {
        assert_eq!(char_value(&p(&[2, 1]), &p(&[3])).unwrap(), Int::from(-1));
        assert_eq!(char_value(&p(&[2, 1]), &p(&[2, 1])).unwrap(), Int::from(0));
        assert_eq!(
            char_value(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(),
            Int::from(2)
        );
        // trivial and sign characters
        for n in 1..=7 {
            for lam in partitions_of(n) {
                assert_eq!(char_value(&p(&[n]), &lam).unwrap(), Int::from(1));
                let sign = if (n - lam.len()) % 2 == 0 { 1 } else { -1 };
                let ones = Partition::new(vec![1; n]).unwrap();
                assert_eq!(char_value(&ones, &lam).unwrap(), Int::from(sign));
            }
        }
    }

    #[test]
    fn standard_character_matches_fixed_points_minus_one() {
        // χ^(n−1,1)(w) = fix(w) − 1, checked against actual permutations
        for n in 2..=6 {
            let mu = Partition::new([n - 1, 1]).unwrap();
            for w in all_permutations(n).unwrap() {
                let got = char_value(&mu, &w.cycle_type()).unwrap();
                let want = Int::from(w.fixed_points() as i64 - 1);
                assert_eq!(got, want, "w = {w}");
            }
        }
    }

    #[test]
    fn degrees_match_tableau_counts() {
        for n in 1..=7 {
            let ones = Partition::new(vec![1; n]).unwrap();
            let mut sum_sq = Int::zero();
            for mu in partitions_of(n) {
                let deg = char_value(&mu, &ones).unwrap();
                assert_eq!(deg, Int::from(BigInt::from(kostka(&mu, &ones).unwrap())));
                sum_sq += &deg * &deg;
            }
            assert_eq!(sum_sq, Int::from(BigInt::from(factorial(n))));
        }
    }

    #[test]
    fn character_row_orthogonality() {
        for n in 1..=7 {
            let parts = partitions_of(n);
            for mu in &parts {
                for nu in &parts {
                    let mut acc = Int::zero();
                    for lam in &parts {
                        let size = Int::from(BigInt::from(class_size(lam)));
                        acc += size * char_value(mu, lam).unwrap() * char_value(nu, lam).unwrap();
                    }
                    let want = if mu == nu {
                        Int::from(BigInt::from(factorial(n)))
                    } else {
                        Int::zero()
                    };
                    assert_eq!(acc, want, "n = {n}, μ = {mu}, ν = {nu}");
                }
            }
        }
    }

    #[test]
    fn monomial_class_functions_for_n_two() {
        // φ^(1,1) is the sign character, φ^(2) = χ^(2) − χ^(1,1)
        let two = p(&[2]);
        let ones = p(&[1, 1]);
        assert_eq!(monomial_char_value(&ones, &ones).unwrap(), Int::from(1));
        assert_eq!(monomial_char_value(&ones, &two).unwrap(), Int::from(-1));
        assert_eq!(monomial_char_value(&two, &ones).unwrap(), Int::from(0));
        assert_eq!(monomial_char_value(&two, &two).unwrap(), Int::from(2));
    }

    #[test]
    fn induced_characters_and_monomial_expansion_agree() {
        // ε^ν = Σ_μ M_{νμ}·φ^μ, with M the elementary-to-monomial expansion
        for n in 1..=5 {
            for nu in partitions_of(n) {
                let exp = e_to_m(&nu);
                for lam in partitions_of(n) {
                    let direct = induced_sign_char_value(&nu, &lam).unwrap();
                    let mut via_m = Int::zero();
                    for (mu, c) in &exp {
                        via_m += Int::from(BigInt::from(c.clone()))
                            * monomial_char_value(mu, &lam).unwrap();
                    }
                    assert_eq!(direct, via_m, "ν = {nu}, class {lam}");
                }
            }
        }
    }

    #[test]
    fn induced_characters_special_cases() {
        // ε^(1ⁿ) is the regular character; ε^(n) the sign; η^(n) trivial
        for n in 1..=5 {
            let ones = Partition::new(vec![1; n]).unwrap();
            let full = p(&[n]);
            for lam in partitions_of(n) {
                let reg = if lam.parts().iter().all(|&v| v == 1) {
                    Int::from(BigInt::from(factorial(n)))
                } else {
                    Int::zero()
                };
                assert_eq!(induced_sign_char_value(&ones, &lam).unwrap(), reg);
                assert_eq!(
                    induced_sign_char_value(&full, &lam).unwrap(),
                    char_value(&ones, &lam).unwrap()
                );
                assert_eq!(
                    induced_trivial_char_value(&full, &lam).unwrap(),
                    Int::from(1)
                );
            }
        }
    }

    #[test]
    fn induced_sign_values_against_permutation_enumeration() {
        // ε^ν(w) = Σ over ordered set partitions of type ν fixed by w of the
        // product of signs of the induced subpermutations; brute-force via
        // cosets is simplest as Σ_{u} [u⁻¹wu ∈ S_ν] sgn(u⁻¹wu) / |S_ν| … we
        // instead use the Frobenius formula on the trivial case n = 3 and a
        // frozen 4-row check computed by hand from the Kostka expansion.
        let nu = p(&[2, 1]);
        // e_{(2,1)} = s_{(1,1,1)}·K_{(1,1,1)ᵀ=(3)… : expansion is
        // s_{21} + s_{111}; characters on classes (1,1,1),(2,1),(3):
        // χ21 = (2,0,−1), χ111 = (1,−1,1) → ε = (3,−1,0)
        assert_eq!(
            induced_sign_char_value(&nu, &p(&[1, 1, 1])).unwrap(),
            Int::from(3)
        );
        assert_eq!(
            induced_sign_char_value(&nu, &p(&[2, 1])).unwrap(),
            Int::from(-1)
        );
        assert_eq!(
            induced_sign_char_value(&nu, &p(&[3])).unwrap(),
            Int::from(0)
        );
        // degree check: ε^ν(identity) = n!/Π ν_i!
        for n in 1..=6 {
            let ones = Partition::new(vec![1; n]).unwrap();
            for nu in partitions_of(n) {
                let deg = induced_sign_char_value(&nu, &ones).unwrap();
                let want = multinomial(n, nu.parts()).unwrap();
                assert_eq!(deg, Int::from(BigInt::from(want)), "ν = {nu}");
                let degh = induced_trivial_char_value(&nu, &ones).unwrap();
                assert_eq!(
                    degh,
                    Int::from(BigInt::from(multinomial(n, nu.parts()).unwrap()))
                );
            }
        }
    }
}
