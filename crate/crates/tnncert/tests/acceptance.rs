//! End-to-end acceptance checks. Each test covers one criterion and prints a
//! single pass/fail line; run with `--nocapture` to see the lines.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use tnncert::certify::{
    bj_side, fischer_check, two_row_monomial_certificate, two_row_tl_certificate,
};
use tnncert::colorings::{
    alpha_beta, coloring_profile, d_coeff, principal_product_coeff, tau_hat_cycles,
};
use tnncert::immanants::{imm_char, imm_eps, imm_phi, imm_tau_all, PhiRoute, PrincipalMinors};
use tnncert::matrix::Matrix;
use tnncert::partitions::{factorial, majorization_leq, partitions_of, Partition};
use tnncert::symfunc::{e_to_m, kostka};
use tnncert::symgroup::{all_permutations, Permutation};
use tnncert::tl::{f_tau, sigma_word, tl_basis, Diagram};
use tnncert::tnngen::{gen_tnn, is_tnn, random_int_matrix};
use tnncert::{Int, Nat, Rat, RatMatrix};

fn criterion(name: &str, body: impl FnOnce() + std::panic::UnwindSafe) {
    let outcome = catch_unwind(AssertUnwindSafe(body));
    match outcome {
        Ok(()) => println!("criterion {name}: PASS"),
        Err(e) => {
            println!("criterion {name}: FAIL");
            resume_unwind(e);
        }
    }
}

fn rat(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

fn nat_rat(v: &Nat) -> Rat {
    Rat::from_integer(Int::from(v.clone()))
}

fn word_product(n: usize, word: &[usize]) -> (Diagram, usize) {
    let mut acc = Diagram::identity(n);
    let mut loops = 0;
    for &i in word {
        let (next, l) = acc.multiply(&Diagram::generator(n, i).unwrap()).unwrap();
        acc = next;
        loops += l;
    }
    (acc, loops)
}

fn random_rat_matrix(n: usize, rng: &mut ChaCha12Rng) -> RatMatrix {
    Matrix::from_fn(n, n, |_, _| {
        Rat::new(
            Int::from(rng.gen_range(-20i64..=20)),
            Int::from(rng.gen_range(1i64..=10)),
        )
    })
}

#[test]
fn criterion_1_worked_examples() {
    criterion("1 (worked examples)", || {
        // e_{(2,2,1)} in the monomial basis
        let lam = Partition::new([2, 2, 1]).unwrap();
        let expansion = e_to_m(&lam);
        let expected: BTreeMap<Partition, Nat> = [
            (vec![3, 2], 1u32),
            (vec![3, 1, 1], 2),
            (vec![2, 2, 1], 5),
            (vec![2, 1, 1, 1], 12),
            (vec![1, 1, 1, 1, 1], 30),
        ]
        .into_iter()
        .map(|(p, c)| (Partition::new(p).unwrap(), Nat::from(c)))
        .collect();
        assert_eq!(expansion, expected);

        // the same coefficients out of tableau counts:
        // e_lambda = sum_mu K_{mu', lambda} s_mu and s_mu = sum_rho K_{mu, rho} m_rho
        for (rho, want) in [(vec![3, 2], 1u32), (vec![3, 1, 1], 2), (vec![2, 2, 1], 5)] {
            let rho = Partition::new(rho).unwrap();
            let mut total = Nat::from(0u32);
            for mu in partitions_of(5) {
                total += kostka(&mu.transpose(), &lam).unwrap() * kostka(&mu, &rho).unwrap();
            }
            assert_eq!(total, Nat::from(want));
        }

        // diagram count and a word reduction with one closed loop
        assert_eq!(tl_basis(4).unwrap().len(), 14);
        let (d, loops) = word_product(4, &[3, 2, 3, 3, 1]);
        assert_eq!(loops, 1);
        assert_eq!(d.edges(), &[(1, 2), (3, 4), (5, 6), (7, 8)]);
        let (t1t3, direct_loops) = Diagram::generator(4, 1)
            .unwrap()
            .multiply(&Diagram::generator(4, 3).unwrap())
            .unwrap();
        assert_eq!(direct_loops, 0);
        assert_eq!(d, t1t3);

        // f_{t_1} over all of S_3, in word order
        let t1 = Diagram::generator(3, 1).unwrap();
        let table: [(&[usize], i64); 6] = [
            (&[], 0),
            (&[1], 1),
            (&[2], 0),
            (&[1, 2], -1),
            (&[2, 1], -1),
            (&[1, 2, 1], 1),
        ];
        for (word, want) in table {
            let w = Permutation::from_word(word, 3).unwrap();
            assert_eq!(f_tau(&t1, &w).unwrap(), want, "word {word:?}");
        }

        // Imm_{t_1} as the explicit four-term polynomial
        let mut rng = ChaCha12Rng::seed_from_u64(9);
        for _ in 0..5 {
            let a = random_rat_matrix(3, &mut rng);
            let e = |i: usize, j: usize| a.get(i - 1, j - 1).clone();
            let want = e(1, 2) * e(2, 1) * e(3, 3)
                - e(1, 2) * e(2, 3) * e(3, 1)
                - e(1, 3) * e(2, 1) * e(3, 2)
                + e(1, 3) * e(2, 2) * e(3, 1);
            let got = imm_tau_all(&a)
                .unwrap()
                .into_iter()
                .find(|(d, _)| *d == t1)
                .unwrap()
                .1;
            assert_eq!(got, want);
        }

        // the 9-strand example: four cycles, one balanced, (alpha, beta) = (1, 2)
        let (tau, loops) = word_product(9, &[7, 6, 8, 5, 7, 4, 6, 5, 2]);
        assert_eq!(loops, 0);
        assert_eq!(
            tau.edges(),
            &[
                (1, 18),
                (2, 3),
                (4, 11),
                (5, 10),
                (6, 9),
                (7, 8),
                (12, 15),
                (13, 14),
                (16, 17)
            ]
        );
        let cycles = tau_hat_cycles(&tau);
        assert_eq!(cycles.len(), 4);
        let profile = coloring_profile(&tau);
        assert_eq!(profile.balanced, 1);
        let mut with_four: Vec<usize> = cycles.iter().find(|c| c.contains(&4)).unwrap().clone();
        with_four.sort_unstable();
        assert_eq!(with_four, vec![4, 7, 8, 11, 12, 15]);
        assert_eq!(alpha_beta(&tau, 5).unwrap(), Some((1, 2)));
        assert_eq!(d_coeff(5, &tau).unwrap(), Nat::from(6u32));
        assert_eq!(d_coeff(2, &tau).unwrap(), Nat::from(0u32));
    });
}

#[test]
fn criterion_2_sigma_well_defined() {
    criterion("2 (sigma is word-independent)", || {
        let mut rng = ChaCha12Rng::seed_from_u64(2);
        for w in all_permutations(5).unwrap() {
            let canonical = sigma_word(&w.reduced_word(), 5).unwrap();
            let shuffled = sigma_word(&w.random_reduced_word(&mut rng), 5).unwrap();
            assert!(canonical == shuffled, "disagreement at {w:?}");
        }
        for _ in 0..200 {
            let mut line: Vec<usize> = (1..=6).collect();
            for i in (1..line.len()).rev() {
                line.swap(i, rng.gen_range(0..=i));
            }
            let w = Permutation::new(line).unwrap();
            let one = sigma_word(&w.random_reduced_word(&mut rng), 6).unwrap();
            let two = sigma_word(&w.random_reduced_word(&mut rng), 6).unwrap();
            assert!(one == two, "disagreement at {w:?}");
        }
    });
}

#[test]
fn criterion_3_coloring_counts_match_enumeration() {
    criterion("3 (coloring counts match enumeration)", || {
        for n in 2..=8 {
            for tau in tl_basis(n).unwrap() {
                let cycles = tau_hat_cycles(&tau);
                let profile = coloring_profile(&tau);
                // direct enumeration: each cycle independently takes one of
                // its two proper colorings
                let choices: Vec<(usize, usize)> = cycles
                    .iter()
                    .map(|c| {
                        let (lo, hi) = tnncert::colorings::cycle_left_whites(n, c);
                        (lo.len(), hi.len())
                    })
                    .collect();
                let mut counts = vec![Nat::from(0u32); n + 1];
                for mask in 0..1usize << choices.len() {
                    let j: usize = choices
                        .iter()
                        .enumerate()
                        .map(|(i, &(lo, hi))| if mask >> i & 1 == 0 { lo } else { hi })
                        .sum();
                    counts[j] += Nat::from(1u32);
                }
                let unbalanced_mod4 = cycles.iter().filter(|c| c.len() % 4 == 2).count();
                assert_eq!(profile.unbalanced, unbalanced_mod4);
                for (j, count) in counts.iter().enumerate() {
                    let d = d_coeff(j, &tau).unwrap();
                    assert_eq!(&d, count, "n={n} j={j} tau={tau:?}");
                    assert_eq!(d, d_coeff(n - j, &tau).unwrap());
                    if let Some((alpha, beta)) = alpha_beta(&tau, j).unwrap() {
                        assert_eq!(
                            alpha as i64 - beta as i64,
                            n as i64 - 2 * j as i64,
                            "n={n} j={j}"
                        );
                        assert_eq!(alpha + beta, unbalanced_mod4);
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_4_expansion_identities() {
    criterion("4 (expansion identities)", || {
        let mut rng = ChaCha12Rng::seed_from_u64(4);
        for n in 2..=6 {
            for _ in 0..20 {
                let a = random_int_matrix(n, &mut rng, 1000);
                let tau_values = imm_tau_all(&a).unwrap();
                let minors = PrincipalMinors::new(&a).unwrap();
                let full = (1usize << n) - 1;

                // complementary principal minors against 0/1 diagram sums
                for mask in 0..=full {
                    let i_set: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                    let product =
                        minors.by_mask(mask).clone() * minors.by_mask(full ^ mask).clone();
                    let mut sum = Rat::zero();
                    for (tau, v) in &tau_values {
                        if principal_product_coeff(&i_set, tau).unwrap() {
                            sum += v.clone();
                        }
                    }
                    assert_eq!(product, sum, "n={n} I={i_set:?}");
                }

                // two-row induced-sign immanants against weighted diagram sums
                for j in 0..=n / 2 {
                    let shape = Partition::new([n - j, j]).unwrap();
                    let mut sum = Rat::zero();
                    for (tau, v) in &tau_values {
                        sum += nat_rat(&d_coeff(j, tau).unwrap()) * v.clone();
                    }
                    assert_eq!(imm_eps(&shape, &a).unwrap(), sum, "n={n} j={j}");
                }

                // monomial immanants: both evaluation routes agree
                for c in 0..=n / 2 {
                    let mut parts = vec![2; c];
                    parts.extend(std::iter::repeat(1).take(n - 2 * c));
                    let mu = Partition::new(parts).unwrap();
                    assert_eq!(
                        imm_phi(&mu, &a, PhiRoute::Character).unwrap(),
                        imm_phi(&mu, &a, PhiRoute::TemperleyLieb).unwrap(),
                        "n={n} mu={mu:?}"
                    );
                }
            }
        }
    });
}

#[test]
fn criterion_5_certificate_nonnegativity() {
    criterion("5 (certificate nonnegativity)", || {
        let catalan = [2usize, 5, 14, 42, 132, 429, 1430, 4862];
        for n in 2..=9 {
            for k in 0..n / 2 {
                let cert = two_row_tl_certificate(n, k, 0, 0).unwrap();
                assert!(cert.all_nonnegative, "n={n} k={k}");
                assert_eq!(cert.coeffs.len(), catalan[n - 2]);
                let mono = two_row_monomial_certificate(n, k, 0, 0).unwrap();
                assert!(mono.all_nonnegative, "n={n} k={k}");
                assert!(!mono.swapped_all_nonnegative, "n={n} k={k}");
            }
        }
        // spot-verified identities behind the coefficients
        let cert = two_row_tl_certificate(6, 1, 5, 11).unwrap();
        assert!(cert.identity.unwrap().passed);
        let mono = two_row_monomial_certificate(5, 1, 5, 11).unwrap();
        assert!(mono.identity.unwrap().passed);
    });
}

#[test]
fn criterion_6_inequality_sweeps() {
    criterion("6 (inequality sweeps)", || {
        for n in 2..=7 {
            for seed in 0..100u64 {
                let (a, _) = gen_tnn(n, seed, 3 * n).unwrap();
                let report = fischer_check(&a).unwrap();
                assert!(report.ok, "n={n} seed={seed} k={:?}", report.violation);
            }
            let shapes = partitions_of(n);
            for seed in 0..25u64 {
                let (a, _) = gen_tnn(n, 1000 + seed, 3 * n).unwrap();
                let sides: Vec<Rat> = shapes.iter().map(|p| bj_side(p, &a).unwrap()).collect();
                for (i, lo) in shapes.iter().enumerate() {
                    for (j, hi) in shapes.iter().enumerate() {
                        if i != j && majorization_leq(lo, hi).unwrap() {
                            assert!(sides[i] >= sides[j], "n={n} seed={seed} {lo:?} vs {hi:?}");
                        }
                    }
                }
            }
        }
        // equality throughout the order on the identity and on diagonals
        let id5: RatMatrix = Matrix::identity(5);
        for p in partitions_of(5) {
            assert_eq!(bj_side(&p, &id5).unwrap(), nat_rat(&factorial(5)));
        }
        let diag = Matrix::from_i64_rows(&[
            vec![1, 0, 0, 0],
            vec![0, 2, 0, 0],
            vec![0, 0, 3, 0],
            vec![0, 0, 0, 4],
        ])
        .unwrap();
        for p in partitions_of(4) {
            assert_eq!(bj_side(&p, &diag).unwrap(), rat(24 * 24));
        }
    });
}

#[test]
fn criterion_7_tnn_immanant_nonnegativity() {
    criterion("7 (immanants are nonnegative on TNN matrices)", || {
        for n in 2..=6 {
            for seed in 0..10u64 {
                let (a, _) = gen_tnn(n, 500 + seed, 3 * n).unwrap();
                for (tau, v) in imm_tau_all(&a).unwrap() {
                    assert!(v >= Rat::zero(), "n={n} seed={seed} tau={tau:?}");
                }
                for lam in partitions_of(n) {
                    assert!(
                        imm_char(&lam, &a).unwrap() >= Rat::zero(),
                        "n={n} seed={seed} lambda={lam:?}"
                    );
                }
            }
        }
    });
}

#[test]
fn criterion_8_generator_ground_truth() {
    criterion("8 (generator and checker ground truth)", || {
        let swap = Matrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let report = is_tnn(&swap).unwrap();
        assert!(!report.ok);
        let witness = report.witness.unwrap();
        assert_eq!(witness.rows, vec![1, 2]);
        assert_eq!(witness.cols, vec![1, 2]);
        assert_eq!(witness.value, rat(-1));
        for n in 1..=6 {
            for seed in 0..100u64 {
                let (a, factors) = gen_tnn(n, seed, 2 * n + 1).unwrap();
                assert!(is_tnn(&a).unwrap().ok, "n={n} seed={seed}");
                assert_eq!(factors.matrix().unwrap(), a);
            }
        }
    });
}
