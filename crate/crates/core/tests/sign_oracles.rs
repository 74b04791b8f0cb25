//! Eigenspace counts: generating function against enumeration.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use selmer_dim::lie::metabelian_dimension;
use selmer_dim::series::binomial;
use selmer_dim::sign::{
    bracket_eigenspaces, bracket_plus_dimension_analytic, bracket_plus_dimension_with,
    eigen_difference, half_deviation, parity_placements, parity_placements_by_sum,
    sym_eigenspaces, sym_eigenspaces_enumerated, v1_dimension, v1_plus_dimension,
    v1_plus_dimension_enumerated, SignSignature,
};
use selmer_dim::Parallelism;

/// Degree-`n` monomials in `m` variables, returned as exponent vectors.
fn exponent_vectors(m: usize, n: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=n)
        .flat_map(|e| {
            exponent_vectors(m - 1, n - e).into_iter().map(move |mut v| {
                v.push(e);
                v
            })
        })
        .collect()
}

/// Plus-count of `Sym^n` with the first `s` variables even, by brute force.
fn brute_plus(m: usize, s: usize, n: usize) -> BigUint {
    let count = exponent_vectors(m, n)
        .iter()
        .filter(|v| v[s..].iter().sum::<usize>() % 2 == 0)
        .count();
    BigUint::from(count)
}

#[test]
fn sym_eigenspaces_two_ways() {
    for m in 1..=5 {
        for s in 0..=m {
            let sig = SignSignature::new(m, s).unwrap();
            for n in 0..=12 {
                let analytic = sym_eigenspaces(sig, n as u64);
                assert_eq!(analytic, sym_eigenspaces_enumerated(sig, n), "m={m} s={s} n={n}");
                assert_eq!(analytic.plus, brute_plus(m, s, n), "m={m} s={s} n={n}");
                assert_eq!(analytic.total(), binomial((n + m - 1) as u64, m as i64 - 1));
            }
        }
    }
}

#[test]
fn plus_fraction_tends_to_one_half() {
    let tolerance = BigRational::new(1.into(), 20.into());
    for m in 2..=6 {
        for s in 1..m {
            let sig = SignSignature::new(m, s).unwrap();
            let d200 = half_deviation(&sym_eigenspaces(sig, 200));
            let d400 = half_deviation(&sym_eigenspaces(sig, 400));
            assert!(d200 <= tolerance, "m={m} s={s}: {d200}");
            assert!(d400 < d200, "m={m} s={s}: {d400} !< {d200}");
        }
    }
}

#[test]
fn bracket_counts_two_ways() {
    for m in 2..=6 {
        for s in 0..=m {
            for n in 2..=8 {
                let analytic = bracket_plus_dimension_analytic(m, s, n).unwrap();
                for par in [Parallelism::Sequential, Parallelism::Parallel] {
                    assert_eq!(
                        bracket_plus_dimension_with(m, s, n, par).unwrap(),
                        analytic,
                        "m={m} s={s} n={n}"
                    );
                }
            }
        }
    }
}

#[test]
fn bracket_extreme_signatures() {
    for m in 2..=6 {
        for n in 2..=10 {
            let total = metabelian_dimension(m as u64, n as u64).unwrap();
            let all_plus = bracket_eigenspaces(m, m, n).unwrap();
            assert_eq!(all_plus.plus, total);
            let all_minus = bracket_eigenspaces(m, 0, n).unwrap();
            let expected = if n % 2 == 0 { total } else { BigUint::from(0u8) };
            assert_eq!(all_minus.plus, expected, "m={m} n={n}");
        }
    }
}

#[test]
fn v1_counts_two_ways() {
    for m in 2..=6 {
        for s in 1..=m {
            for n in 2..=9 {
                assert_eq!(
                    v1_plus_dimension(m, s, n).unwrap(),
                    v1_plus_dimension_enumerated(m, s, n).unwrap(),
                    "m={m} s={s} n={n}"
                );
            }
        }
    }
}

#[test]
fn v1_identity_and_lower_bound() {
    // 2·v1⁺ = C(n+m-2, m-1) + a_{n-1} - 2, hence v1⁺ >= C/2 - |a_{n-1}|/2 - 1.
    for m in 2..=6 {
        for s in 1..=m {
            let sig = SignSignature::new(m, s).unwrap();
            for n in 2..=30 {
                let c = BigInt::from(binomial((n + m - 2) as u64, m as i64 - 1));
                let a = eigen_difference(sig, n as u64 - 1);
                let plus = BigInt::from(v1_plus_dimension(m, s, n).unwrap());
                assert_eq!(&plus * 2, &c + &a - 2, "m={m} s={s} n={n}");
                assert!(&plus * 2 >= &c - BigInt::from(a.magnitude().clone()) - 2);
                assert!(plus <= BigInt::from(v1_dimension(m, n).unwrap()));
            }
        }
    }
}

/// Placements of `n` balls into `a + b` bins with an even count in the last `b`.
fn brute_placements(a: usize, b: usize, n: usize) -> u64 {
    exponent_vectors(a + b, n)
        .iter()
        .filter(|v| v[a..].iter().sum::<usize>() % 2 == 0)
        .count() as u64
}

#[test]
fn parity_placements_exhaustive() {
    for a in 1..=5 {
        for b in 1..=(6 - a) {
            let sig = SignSignature::from_multiplicities(a, b).unwrap();
            for n in 0..=10u64 {
                let closed = parity_placements(a, b, n).unwrap();
                assert_eq!(closed, BigUint::from(brute_placements(a, b, n as usize)));
                assert_eq!(closed, parity_placements_by_sum(a, b, n).unwrap());
                let total = BigInt::from(binomial(n + (a + b) as u64 - 1, (a + b) as i64 - 1));
                assert_eq!(
                    BigInt::from(closed) * 2,
                    total + eigen_difference(sig, n),
                    "a={a} b={b} n={n}"
                );
            }
        }
    }
}

#[test]
fn parity_rejects_empty_colours() {
    assert!(parity_placements(0, 3, 4).is_err());
    assert!(parity_placements(3, 0, 4).is_err());
}
