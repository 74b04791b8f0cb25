//! Exact integer and rational helpers, truncated power series, and the
//! two-pole partial fraction decomposition of `(1-t)^{-p} (1+t)^{-q}`.

use std::fmt;
use std::ops::Mul;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact binomial coefficient; zero when `k` is outside `0..=n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 1..=k {
        // acc = C(n - k + i, i), always integral after the division
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Möbius function by trial division.
pub fn moebius(n: u64) -> Result<i8> {
    if n == 0 {
        return Err(Error::MoebiusZero);
    }
    let mut rest = n;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            rest /= p;
            if rest.is_multiple_of(p) {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if rest > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// A sign `±1`, used both for the poles `1 ∓ t` and for eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k`.
    pub fn from_parity(k: usize) -> Sign {
        if k.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `self^n`.
    pub fn pow(self, n: u64) -> Sign {
        match self {
            Sign::Plus => Sign::Plus,
            Sign::Minus => Sign::from_parity((n % 2) as usize),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

fn signed(sign: Sign, value: BigUint) -> BigInt {
    match sign {
        Sign::Plus => BigInt::from(value),
        Sign::Minus => -BigInt::from(value),
    }
}

/// Power series in `t` truncated after `t^N`, with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSeries {
    coeffs: Vec<BigRational>,
}

impl FormalSeries {
    pub fn zero(truncation: usize) -> Self {
        FormalSeries {
            coeffs: vec![BigRational::zero(); truncation + 1],
        }
    }

    pub fn one(truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Builds a series from `c_0..=c_N`. An empty input is the zero series of order 0.
    pub fn from_coefficients(coeffs: Vec<BigRational>) -> Self {
        if coeffs.is_empty() {
            return Self::zero(0);
        }
        FormalSeries { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::from_coefficients(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `t^n`; `None` past the truncation order.
    pub fn coefficient(&self, n: usize) -> Option<&BigRational> {
        self.coeffs.get(n)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.truncation_order()) + 1;
        FormalSeries {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }
}

/// `(1 - sign·t)^{-exponent}` truncated at `t^truncation`.
///
/// The coefficient of `t^n` is `sign^n · C(n + a - 1, a - 1)`.
pub fn geometric_inverse_power(sign: Sign, exponent: u32, truncation: usize) -> Result<FormalSeries> {
    if exponent == 0 {
        return Err(Error::InvalidArgument(
            "geometric_inverse_power needs exponent >= 1".into(),
        ));
    }
    let a = exponent as u64;
    let coeffs = (0..=truncation as u64)
        .map(|n| {
            let c = binomial(n + a - 1, a as i64 - 1);
            BigRational::from_integer(signed(sign.pow(n), c))
        })
        .collect();
    Ok(FormalSeries { coeffs })
}

/// Cauchy product truncated to the smaller of the two orders.
pub fn series_multiply(lhs: &FormalSeries, rhs: &FormalSeries) -> FormalSeries {
    let order = lhs.truncation_order().min(rhs.truncation_order());
    let coeffs = (0..=order)
        .map(|n| {
            (0..=n).fold(BigRational::zero(), |acc, k| {
                acc + &lhs.coeffs[k] * &rhs.coeffs[n - k]
            })
        })
        .collect();
    FormalSeries { coeffs }
}

impl Mul for &FormalSeries {
    type Output = FormalSeries;

    fn mul(self, rhs: &FormalSeries) -> FormalSeries {
        series_multiply(self, rhs)
    }
}

/// `(1-t)^{-m⁺} (1+t)^{-m⁻} = Σ A_i (1-t)^{-i} + Σ B_i (1+t)^{-i}`.
///
/// `a_plus[i - 1]` holds `A_i` and `b_minus[i - 1]` holds `B_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFractionDecomp {
    pub a_plus: Vec<BigRational>,
    pub b_minus: Vec<BigRational>,
}

impl PartialFractionDecomp {
    pub fn m_plus(&self) -> usize {
        self.a_plus.len()
    }

    pub fn m_minus(&self) -> usize {
        self.b_minus.len()
    }

    /// Coefficient of `t^n` of the recombined series.
    pub fn coefficient(&self, n: u64) -> BigRational {
        coefficient_via_pfd(self, n)
    }

    /// Coefficient of `t^n` as an integer. The product of the two inverse
    /// powers has integer coefficients, so this never loses information.
    pub fn integer_coefficient(&self, n: u64) -> BigInt {
        let c = self.coefficient(n);
        debug_assert!(c.is_integer(), "non-integral coefficient {c}");
        c.to_integer()
    }

    /// Recombines the blocks into a series truncated at `t^truncation`.
    pub fn expand(&self, truncation: usize) -> FormalSeries {
        FormalSeries {
            coeffs: (0..=truncation as u64).map(|n| self.coefficient(n)).collect(),
        }
    }

    /// Sum of absolute values of all `A_i` and `B_i`.
    pub fn l1_norm(&self) -> BigRational {
        self.a_plus
            .iter()
            .chain(&self.b_minus)
            .fold(BigRational::zero(), |acc, c| acc + c.abs())
    }
}

/// Taylor coefficients `c_0..c_{len-1}` of `(2 - u)^{-power}` at `u = 0`.
///
/// `c_k = (1/k!) d^k/du^k (2-u)^{-power} |_{u=0}`, computed with the ratio
/// `c_{k+1} / c_k = (power + k) / (2 (k + 1))`.
fn residue_taylor(power: usize, len: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(len);
    let mut c = BigRational::new(BigInt::one(), BigInt::from(2u8).pow(power as u32));
    for k in 0..len {
        out.push(c.clone());
        c *= BigRational::new(BigInt::from(power + k), BigInt::from(2 * (k + 1)));
    }
    out
}

/// Decomposes `(1-t)^{-m_plus} (1+t)^{-m_minus}` into its two pole blocks.
///
/// Near `t = 1` write `u = 1 - t`, so the function is `u^{-m⁺} (2-u)^{-m⁻}`;
/// the Laurent coefficient of `u^{-i}` is the `(m⁺ - i)`-th Taylor
/// coefficient of `(2-u)^{-m⁻}`. The pole at `t = -1` is symmetric.
pub fn partial_fractions(m_plus: usize, m_minus: usize) -> Result<PartialFractionDecomp> {
    if m_plus == 0 && m_minus == 0 {
        return Err(Error::EmptyDecomposition);
    }
    let block = |order: usize, other: usize| -> Vec<BigRational> {
        let taylor = residue_taylor(other, order);
        // A_i = c_{order - i}
        (1..=order).map(|i| taylor[order - i].clone()).collect()
    };
    let pfd = PartialFractionDecomp {
        a_plus: block(m_plus, m_minus),
        b_minus: block(m_minus, m_plus),
    };
    debug_assert!(recombines(&pfd, m_plus + m_minus));
    Ok(pfd)
}

/// Checks the decomposition against the product of the two inverse powers
/// up to `t^order`.
pub fn recombines(pfd: &PartialFractionDecomp, order: usize) -> bool {
    let direct = product_series(pfd.m_plus(), pfd.m_minus(), order);
    direct == pfd.expand(order)
}

/// `(1-t)^{-m_plus} (1+t)^{-m_minus}` by direct series multiplication.
pub fn product_series(m_plus: usize, m_minus: usize, truncation: usize) -> FormalSeries {
    let mut acc = FormalSeries::one(truncation);
    if m_plus > 0 {
        let f = geometric_inverse_power(Sign::Plus, m_plus as u32, truncation).unwrap();
        acc = &acc * &f;
    }
    if m_minus > 0 {
        let f = geometric_inverse_power(Sign::Minus, m_minus as u32, truncation).unwrap();
        acc = &acc * &f;
    }
    acc
}

/// `a_n = Σ A_i C(n+i-1, i-1) + (-1)^n Σ B_i C(n+i-1, i-1)`.
pub fn coefficient_via_pfd(pfd: &PartialFractionDecomp, n: u64) -> BigRational {
    let block = |coeffs: &[BigRational]| {
        coeffs
            .iter()
            .enumerate()
            .fold(BigRational::zero(), |acc, (idx, c)| {
                let i = idx as u64 + 1;
                let b = BigInt::from(binomial(n + i - 1, i as i64 - 1));
                acc + c * BigRational::from_integer(b)
            })
    };
    let plus = block(&pfd.a_plus);
    let minus = block(&pfd.b_minus);
    if n.is_multiple_of(2) {
        plus + minus
    } else {
        plus - minus
    }
}
