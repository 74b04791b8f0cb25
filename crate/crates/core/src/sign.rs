//! Eigenspace dimensions of an involution `c` that acts diagonally on the
//! generators with `s` eigenvalues `+1` followed by `m - s` eigenvalues `-1`.
//!
//! Each count has an analytic route (partial fractions of
//! `(1-t)^{-s} (1+t)^{-(m-s)}`, polynomial time in `n`) and a streaming
//! enumeration route over monomials or bracket words. Production callers use
//! the analytic route; tests hold the two routes equal.
//!
//! Sign convention for bracket words: `c` multiplies the basis bracket with
//! indices `(i1, ..., in)` by `(-1)^k`, `k = #{j : i_j > s}`. The subspace
//! `V_{1,n}` is spanned by the basis words with `i1 = 1`; its `+1` part is
//! counted directly from those words. Under the monomial picture
//! `(i2, ..., in) <-> x_{i2} ... x_{in}` this is the number of degree-`(n-1)`
//! monomials with *even degree in the `-1` variables* `x_{s+1}, ..., x_m`,
//! minus one for `x_1^{n-1}`, which has no bracket word (`i2 > i1 = 1`).
//! Even degree in `x_1, ..., x_s` picks the same monomials only when `n` is
//! odd.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exec::{map_ordered, Parallelism};
use crate::lie::{metabelian_dimension, BracketWord, MetabelianBasis};
use crate::series::{binomial, partial_fractions, PartialFractionDecomp, Sign};

/// `m` generators, the first `s` with eigenvalue `+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignSignature {
    m: usize,
    s: usize,
}

impl SignSignature {
    pub fn new(m: usize, s: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("signature needs m >= 1".into()));
        }
        if s > m {
            return Err(Error::InvalidArgument(format!(
                "signature needs 0 <= s <= m (got s={s}, m={m})"
            )));
        }
        Ok(SignSignature { m, s })
    }

    /// From the eigenspace multiplicities `(m⁺, m⁻)`.
    pub fn from_multiplicities(m_plus: usize, m_minus: usize) -> Result<Self> {
        Self::new(m_plus + m_minus, m_plus)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn m_plus(&self) -> usize {
        self.s
    }

    pub fn m_minus(&self) -> usize {
        self.m - self.s
    }

    /// True unless `c` is `±1` on the generators.
    pub fn is_mixed(&self) -> bool {
        0 < self.s && self.s < self.m
    }

    pub fn partial_fractions(&self) -> PartialFractionDecomp {
        partial_fractions(self.m_plus(), self.m_minus()).expect("m >= 1")
    }

    /// Sign picked up by the generator `index` (1-based).
    fn generator_sign(&self, index: usize) -> Sign {
        if index > self.s {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

/// Dimensions of the `+1` and `-1` eigenspaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenSplit {
    pub plus: BigUint,
    pub minus: BigUint,
}

impl EigenSplit {
    pub fn total(&self) -> BigUint {
        &self.plus + &self.minus
    }

    /// `plus - minus`.
    pub fn difference(&self) -> BigInt {
        BigInt::from(self.plus.clone()) - BigInt::from(self.minus.clone())
    }

    /// Splits `total` given `plus - minus`.
    fn from_total_and_difference(total: BigUint, difference: BigInt) -> Self {
        let total = BigInt::from(total);
        let plus: BigInt = (&total + &difference) / 2;
        let minus = &total - &plus;
        EigenSplit {
            plus: plus.to_biguint().expect("plus count is nonnegative"),
            minus: minus.to_biguint().expect("minus count is nonnegative"),
        }
    }
}

/// Action of `c` on a basis bracket: `(-1)^k` with `k` the number of indices
/// greater than `s`.
pub fn bracket_sign(word: &BracketWord, sig: SignSignature) -> Result<Sign> {
    if let Some(&bad) = word.indices().iter().find(|&&i| i > sig.m) {
        return Err(Error::AlphabetMismatch {
            index: bad,
            alphabet: sig.m,
        });
    }
    Ok(parity_sign(word.indices(), sig))
}

fn parity_sign(indices: &[usize], sig: SignSignature) -> Sign {
    Sign::from_parity(
        indices
            .iter()
            .filter(|&&i| sig.generator_sign(i) == Sign::Minus)
            .count(),
    )
}

/// `a_n = dim Sym^n(V)^+ - dim Sym^n(V)^-`, the `t^n` coefficient of
/// `(1-t)^{-m⁺} (1+t)^{-m⁻}`.
pub fn eigen_difference(sig: SignSignature, n: u64) -> BigInt {
    sig.partial_fractions().integer_coefficient(n)
}

/// Eigenspaces of `c` on `Sym^n(V)` via the generating function.
pub fn sym_eigenspaces(sig: SignSignature, n: u64) -> EigenSplit {
    sym_eigenspaces_from(sig, &sig.partial_fractions(), n)
}

/// As [`sym_eigenspaces`], reusing a decomposition of the signature.
pub(crate) fn sym_eigenspaces_from(
    sig: SignSignature,
    pfd: &PartialFractionDecomp,
    n: u64,
) -> EigenSplit {
    debug_assert_eq!((pfd.m_plus(), pfd.m_minus()), (sig.m_plus(), sig.m_minus()));
    let total = binomial(n + sig.m as u64 - 1, sig.m as i64 - 1);
    EigenSplit::from_total_and_difference(total, pfd.integer_coefficient(n))
}

/// Nonincreasing index tuples of a fixed length over `1..=m`, i.e. the
/// monomials of that degree, in lexicographic order.
#[derive(Debug, Clone)]
pub struct Monomials {
    alphabet: usize,
    current: Option<Vec<usize>>,
}

impl Monomials {
    pub fn new(m: usize, degree: usize) -> Self {
        Monomials {
            alphabet: m,
            current: (m > 0 || degree == 0).then(|| vec![1; degree]),
        }
    }
}

impl Iterator for Monomials {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let word = self.current.take()?;
        let mut succ = word.clone();
        for p in (0..succ.len()).rev() {
            let max = if p == 0 { self.alphabet } else { succ[p - 1] };
            if succ[p] < max {
                succ[p] += 1;
                succ[p + 1..].iter_mut().for_each(|x| *x = 1);
                self.current = Some(succ);
                break;
            }
        }
        Some(word)
    }
}

/// Eigenspaces of `c` on `Sym^n(V)` by walking every monomial.
pub fn sym_eigenspaces_enumerated(sig: SignSignature, n: usize) -> EigenSplit {
    let (mut plus, mut minus) = (0u64, 0u64);
    for mono in Monomials::new(sig.m, n) {
        match parity_sign(&mono, sig) {
            Sign::Plus => plus += 1,
            Sign::Minus => minus += 1,
        }
    }
    EigenSplit {
        plus: plus.into(),
        minus: minus.into(),
    }
}

fn bracket_args(m: usize, s: usize, n: usize) -> Result<SignSignature> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "bracket eigenspaces need level n >= 2 (got {n})"
        )));
    }
    if m < 2 {
        return Err(Error::InvalidArgument(format!(
            "bracket eigenspaces need m >= 2 (got {m})"
        )));
    }
    SignSignature::new(m, s)
}

/// `dim V_n^+`: basis brackets of arity `n` fixed by `c`, by streaming
/// enumeration split over the leading index.
pub fn bracket_plus_dimension(m: usize, s: usize, n: usize) -> Result<BigUint> {
    bracket_plus_dimension_with(m, s, n, Parallelism::default())
}

pub fn bracket_plus_dimension_with(
    m: usize,
    s: usize,
    n: usize,
    par: Parallelism,
) -> Result<BigUint> {
    let sig = bracket_args(m, s, n)?;
    let counts = map_ordered((1..m).collect(), par, |lead| {
        MetabelianBasis::with_leading(m, n, lead)
            .expect("arguments checked")
            .filter(|w| parity_sign(w.indices(), sig) == Sign::Plus)
            .count() as u64
    });
    Ok(counts.into_iter().map(BigUint::from).sum())
}

/// `dim V_n^+` in closed form.
///
/// Group the words by `j = i2`. The tail `(i3, ..., in)` is a monomial of
/// degree `n - 2` in `x_1..x_j`; the prefix `(i1, j)` contributes a fixed
/// parity. Tail parities come from the generating function on `j` letters.
pub fn bracket_plus_dimension_analytic(m: usize, s: usize, n: usize) -> Result<BigUint> {
    bracket_args(m, s, n)?;
    let k = (n - 2) as u64;
    let mut total = BigUint::zero();
    for j in 2..=m {
        let tail_all = binomial(k + j as u64 - 1, j as i64 - 1);
        if j <= s {
            total += (j as u64 - 1) * tail_all;
            continue;
        }
        // i2 = j > s contributes one -1; i1 may sit on either side of s.
        let tail = sym_eigenspaces(SignSignature::new(j, s)?, k);
        total += s as u64 * tail.minus + (j - 1 - s) as u64 * tail.plus;
    }
    Ok(total)
}

/// Eigenspaces of `c` on the span of the arity-`n` basis brackets.
pub fn bracket_eigenspaces(m: usize, s: usize, n: usize) -> Result<EigenSplit> {
    let plus = bracket_plus_dimension_analytic(m, s, n)?;
    let total = metabelian_dimension(m as u64, n as u64)?;
    Ok(EigenSplit {
        minus: total - &plus,
        plus,
    })
}

fn v1_args(m: usize, s: usize, n: usize) -> Result<SignSignature> {
    let sig = bracket_args(m, s, n)?;
    if s == 0 {
        return Err(Error::InvalidArgument(
            "V_{1,n} is built on a +1 generator; needs s >= 1".into(),
        ));
    }
    Ok(sig)
}

/// `dim V_{1,n}^+` in closed form: `(C(n+m-2, m-1) + a_{n-1}) / 2 - 1`.
///
/// See the module docs for the sign convention.
pub fn v1_plus_dimension(m: usize, s: usize, n: usize) -> Result<BigUint> {
    let sig = v1_args(m, s, n)?;
    Ok(v1_plus_from(sig, &sig.partial_fractions(), n))
}

pub(crate) fn v1_plus_from(sig: SignSignature, pfd: &PartialFractionDecomp, n: usize) -> BigUint {
    let monomials_plus = sym_eigenspaces_from(sig, pfd, n as u64 - 1).plus;
    // x_1^{n-1} is always in the +1 part and has no bracket word.
    monomials_plus - 1u8
}

/// `dim V_{1,n}^+` by enumerating the basis words with `i1 = 1`.
pub fn v1_plus_dimension_enumerated(m: usize, s: usize, n: usize) -> Result<BigUint> {
    let sig = v1_args(m, s, n)?;
    let count = MetabelianBasis::with_leading(m, n, 1)?
        .filter(|w| parity_sign(w.indices(), sig) == Sign::Plus)
        .count();
    Ok(BigUint::from(count))
}

/// `dim V_{1,n}`: all degree-`(n-1)` monomials except `x_1^{n-1}`.
pub fn v1_dimension(m: usize, n: usize) -> Result<BigUint> {
    bracket_args(m, 0, n)?;
    Ok(binomial((n + m - 2) as u64, m as i64 - 1) - 1u8)
}

fn parity_args(a: usize, b: usize) -> Result<SignSignature> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument(format!(
            "parity placements need a >= 1 blue and b >= 1 green bins (got {a}, {b})"
        )));
    }
    SignSignature::from_multiplicities(a, b)
}

/// Ways to put `n` identical balls into `a` blue and `b` green labelled bins
/// with an even number of balls in green bins: `(C(n+a+b-1, a+b-1) + a_n) / 2`.
pub fn parity_placements(a: usize, b: usize, n: u64) -> Result<BigUint> {
    Ok(sym_eigenspaces(parity_args(a, b)?, n).plus)
}

/// Same count, summing over the number `k` of balls in green bins.
pub fn parity_placements_by_sum(a: usize, b: usize, n: u64) -> Result<BigUint> {
    parity_args(a, b)?;
    let (a, b) = (a as u64, b as u64);
    Ok((0..=n)
        .step_by(2)
        .map(|k| binomial(k + b - 1, b as i64 - 1) * binomial(n - k + a - 1, a as i64 - 1))
        .sum())
}

/// `|plus / total - 1/2|` as an exact rational.
pub fn half_deviation(split: &EigenSplit) -> BigRational {
    let total = BigInt::from(split.total());
    if total.is_zero() {
        return BigRational::zero();
    }
    let ratio = BigRational::new(BigInt::from(split.plus.clone()), total);
    (ratio - BigRational::new(BigInt::one(), 2.into())).abs()
}
