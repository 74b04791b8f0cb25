//! Acceptance criteria, one test each. Every test prints a single
//! `criterion N: PASS|FAIL ...` line before asserting.

use std::process::Command;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use selmer_dim::ledger::{
    bt_poonen_applies, dh_crossover, Applicability, BtCondition, CoverData, CurveScenario,
    Verdict, Viability, EXCEPTIONAL_PRIMES,
};
use selmer_dim::lie::{
    lyndon_words, metabelian_dimension, metabelian_dimension_enumerated, witt_dimension,
};
use selmer_dim::series::binomial;
use selmer_dim::sign::{
    eigen_difference, half_deviation, parity_placements, sym_eigenspaces,
    sym_eigenspaces_enumerated, SignSignature,
};
use selmer_dim::Parallelism;

fn report(id: &str, what: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("criterion {id}: PASS {what}");
    } else {
        println!(
            "criterion {id}: FAIL {what} ({} failing cases, first: {})",
            failures.len(),
            failures[0]
        );
    }
    assert!(failures.is_empty(), "criterion {id}: {failures:#?}");
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn scenario(g: u32, d: u32, s: u32, a: i64, b: i64, max_n: usize) -> CurveScenario {
    CurveScenario::rational(g, d, s, int(a), int(b), max_n).unwrap()
}

fn crossover(g: u32, d: u32, s: u32, a: i64, b: i64, max_n: usize) -> Option<usize> {
    dh_crossover(&scenario(g, d, s, a, b, max_n)).unwrap().crossover
}

#[test]
fn criterion_1_witt_equals_lyndon_count() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for m in 1..=4usize {
        for n in 1..=8usize {
            checked += 1;
            let witt = witt_dimension(m as u64, n as u64).unwrap();
            let lyndon = BigUint::from(lyndon_words(m, n).unwrap().len());
            if witt != lyndon {
                failures.push(format!("m={m} n={n}: {witt} vs {lyndon}"));
            }
        }
    }
    assert_eq!(checked, 32);
    report("1", "witt = |lyndon| for m <= 4, n <= 8", &failures);
}

#[test]
fn criterion_2_metabelian_closed_form() {
    let mut failures = Vec::new();
    for m in 2..=6usize {
        for n in 1..=8usize {
            let closed = metabelian_dimension(m as u64, n as u64).unwrap();
            let streamed = metabelian_dimension_enumerated(m, n, Parallelism::Parallel).unwrap();
            if closed != streamed {
                failures.push(format!("m={m} n={n}: closed {closed} vs streamed {streamed}"));
            }
            if n <= 3 && closed != witt_dimension(m as u64, n as u64).unwrap() {
                failures.push(format!("m={m} n={n}: differs from witt"));
            }
        }
    }
    report(
        "2",
        "metabelian closed form = basis count (m <= 6, n <= 8) and = witt for n <= 3",
        &failures,
    );
}

#[test]
fn criterion_3_generating_function() {
    let mut failures = Vec::new();
    for m in 1..=5 {
        for s in 0..=m {
            let sig = SignSignature::new(m, s).unwrap();
            for n in 0..=12 {
                let a = sym_eigenspaces(sig, n as u64);
                let b = sym_eigenspaces_enumerated(sig, n);
                if a != b {
                    failures.push(format!("m={m} s={s} n={n}: {a:?} vs {b:?}"));
                }
            }
        }
    }
    let tolerance = BigRational::new(1.into(), 20.into());
    for m in 2..=6 {
        for s in 1..m {
            let sig = SignSignature::new(m, s).unwrap();
            let d200 = half_deviation(&sym_eigenspaces(sig, 200));
            let d400 = half_deviation(&sym_eigenspaces(sig, 400));
            if d200 > tolerance {
                failures.push(format!("m={m} s={s}: deviation {d200} at n=200"));
            }
            if d400 >= d200 {
                failures.push(format!("m={m} s={s}: {d400} at n=400 not below {d200}"));
            }
        }
    }
    report(
        "3",
        "partial fractions = monomial counts; plus fraction within 1/20 of 1/2 and shrinking",
        &failures,
    );
}

/// Placements of `balls` into `a` blue and `b` green bins, even green total.
fn placements_brute(a: usize, b: usize, balls: usize) -> u64 {
    fn go(bins_left: usize, balls: usize, green_left: usize, green_sum: usize) -> u64 {
        if bins_left == 0 {
            return u64::from(balls == 0 && green_sum.is_multiple_of(2));
        }
        let is_green = bins_left <= green_left;
        (0..=balls)
            .map(|k| {
                let g = if is_green { green_sum + k } else { green_sum };
                go(bins_left - 1, balls - k, green_left, g)
            })
            .sum()
    }
    go(a + b, balls, b, 0)
}

#[test]
fn criterion_4_parity_placements() {
    let mut failures = Vec::new();
    for a in 1..=5 {
        for b in 1..=(6 - a) {
            let sig = SignSignature::from_multiplicities(a, b).unwrap();
            for n in 0..=10u64 {
                let closed = parity_placements(a, b, n).unwrap();
                let brute = BigUint::from(placements_brute(a, b, n as usize));
                if closed != brute {
                    failures.push(format!("a={a} b={b} n={n}: {closed} vs {brute}"));
                }
                let total = BigInt::from(binomial(n + (a + b) as u64 - 1, (a + b) as i64 - 1));
                if BigInt::from(closed) * 2 != total + eigen_difference(sig, n) {
                    failures.push(format!("a={a} b={b} n={n}: not (total + a_n)/2"));
                }
            }
        }
    }
    report("4", "parity placements = enumeration = (total + a_n)/2", &failures);
}

#[test]
fn criterion_5_golden_crossovers() {
    let mut failures = Vec::new();
    for (s, expected) in [(4, 1), (0, 2)] {
        let got = crossover(2, 1, s, 0, 0, 5);
        if got != Some(expected) {
            failures.push(format!("g=2 d=1 s={s} A=B=0: crossover {got:?}, want {expected}"));
        }
    }
    report("5a", "golden crossovers 1 (s=4) and 2 (s=0)", &failures);
}

#[test]
fn criterion_5_crossover_exists_by_level_128() {
    let mut failures = Vec::new();
    for g in 2..=3 {
        for d in 1..=3 {
            for s in 0..=2 * g {
                if crossover(g, d, s, 1, 1, 128).is_none() {
                    failures.push(format!("g={g} d={d} s={s}"));
                }
            }
        }
    }
    report("5b", "crossover exists with n_max = 128 for g in {2,3}, d <= 3, A = B = 1", &failures);
}

#[test]
fn criterion_5_monotone_in_degree_and_budgets() {
    // A missing crossover ranks above every level.
    let rank = |c: Option<usize>| c.unwrap_or(usize::MAX);
    let mut failures = Vec::new();
    for g in 2..=3 {
        for d in 1..=3 {
            for s in 0..=2 * g {
                let base = rank(crossover(g, d, s, 1, 1, 128));
                let mut bumps = vec![("A", d, 2, 1), ("B", d, 1, 2)];
                if d < 3 {
                    bumps.push(("d", d + 1, 1, 1));
                }
                for (what, d2, a2, b2) in bumps {
                    let bumped = rank(crossover(g, d2, s, a2, b2, 128));
                    if bumped < base {
                        failures.push(format!("g={g} d={d} s={s}: raising {what} lowered it"));
                    }
                }
            }
        }
    }
    report("5c", "raising d, A or B never lowers the crossover", &failures);
}

#[test]
fn criterion_6_complex_places_obstruct() {
    let mut failures = Vec::new();
    for g in 2..=3 {
        for d in 1..=3 {
            for s in 0..=2 * g {
                for (a, b) in [(0, 0), (1, 1)] {
                    for r1 in 0..=2 {
                        for r2 in 1..=2 {
                            let scn = scenario(g, d, s, a, b, 32).with_signature(r1, r2).unwrap();
                            let rep = dh_crossover(&scn).unwrap();
                            let holding = rep.rows.iter().filter(|r| r.verdict == Verdict::Holds);
                            if holding.count() > 0
                                || rep.viability != Viability::ObstructedComplexPlace
                            {
                                failures.push(format!("g={g} d={d} s={s} r=({r1},{r2})"));
                            }
                        }
                    }
                }
            }
        }
    }
    report("6", "r2 >= 1 gives no holding row and obstructed-complex-place", &failures);
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p))
}

#[test]
fn criterion_7_cover_predicate() {
    let mut failures = Vec::new();
    let base = CoverData {
        curve_genus: 3,
        ..Default::default()
    };
    let examples = [
        (
            CoverData {
                quotient_genus: 1,
                ..base.clone()
            },
            Applicability::Applies(BtCondition::QuotientGenus),
        ),
        (
            CoverData {
                solvable: true,
                ..base.clone()
            },
            Applicability::Applies(BtCondition::Solvable),
        ),
        (
            CoverData {
                triple: Some([2, 3, 97]),
                ..base.clone()
            },
            Applicability::Unknown,
        ),
    ];
    for (data, expected) in examples {
        let got = bt_poonen_applies(&data).unwrap();
        if got != expected {
            failures.push(format!("{data:?}: {got} vs {expected}"));
        }
    }
    if EXCEPTIONAL_PRIMES != [101, 103, 107, 131, 167, 191] {
        failures.push(format!("exceptional set {EXCEPTIONAL_PRIMES:?}"));
    }
    for ell in (2..=400).filter(|&p| is_prime(p)) {
        let data = CoverData {
            triple: Some([2, 3, ell]),
            ..base.clone()
        };
        let allowed = ell <= 89 || [101, 103, 107, 131, 167, 191].contains(&ell);
        let got = bt_poonen_applies(&data).unwrap();
        let want = if allowed {
            Applicability::Applies(BtCondition::RamificationTriple { ell })
        } else {
            Applicability::Unknown
        };
        if got != want {
            failures.push(format!("triple (2,3,{ell}): {got}"));
        }
    }
    report("7", "printed examples and exceptional primes of the cover predicate", &failures);
}

#[test]
fn criterion_8_thread_count_determinism() {
    let args = [
        "dh", "--genus", "3", "--degree", "2", "--splus", "3", "--coeff-a", "1", "--coeff-b", "1",
        "--max-n", "128",
    ];
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_selmer-dim"))
            .args(args)
            .env("SELMER_DIM_THREADS", threads)
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    let mut failures = Vec::new();
    let (one, eight) = (run("1"), run("8"));
    if one != eight {
        failures.push("JSON differs between 1 and 8 threads".to_string());
    }
    if one.is_empty() {
        failures.push("empty report".to_string());
    }
    report("8", "dh JSON identical with SELMER_DIM_THREADS = 1 and 8", &failures);
}
