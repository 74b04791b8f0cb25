//! Per-level ledger of the dimension inequality
//!
//! ```text
//! dim H^1(G_T, W_[n])  <  dim W_[n] - dim F^0 W_[n]^dR
//! ```
//!
//! assembled from exact partial sums. Inputs are the genus `g` of the
//! target curve (so `m = 2g` generators), the degree `d`, the number `s` of
//! generators fixed by complex conjugation, the budget coefficients `A`
//! (`dim F^0 <= d·A·n^g`) and `B` (`Σ dim H^2 <= d·B·n^{2g-1}`), and the
//! archimedean signature `(r1, r2)` of the base field.
//!
//! For each level `n` the row records
//!
//! * `z_dim_upper = d·dim Z_n(U_X)` and `w_dim_upper = d·dim U_{X,n}`,
//!   `dr_dim_lower = dim U_{X,n}` (the two ends of the sandwich for `W_[n]`);
//! * `z_plus_lower`, a lower bound for `dim Z_[n]^+` from explicit brackets,
//!   and its partial sum;
//! * `h1_upper = Σ_i [r1 (d·Z_i - Z_i^+) + r2 d·Z_i] + h2_budget`,
//!   using the upper end of the sandwich;
//! * `dr_quotient_lower = dim U_{X,n} - f0_upper`, using the lower end;
//! * `margin = r1 Σ Z^+ - (r1 + r2 - 1)·w_dim_upper - h2_budget - f0_upper`.
//!
//! `W_[n]` is the same group on both sides of the inequality, so the verdict
//! compares the two bounds at a common `dim W`: it holds iff `margin > 0`,
//! which is sound for every `dim W` inside the sandwich. Over `Q` with
//! `d = 1` this is exactly `h1_upper < dr_quotient_lower`.
//!
//! The `H^2` budget is applied at every `n >= 1`.

mod cover;

pub use cover::{bt_poonen_applies, Applicability, BtCondition, CoverData, EXCEPTIONAL_PRIMES};

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exec::{map_ordered, Parallelism};
use crate::lie::metabelian_dimension;
use crate::sign::{v1_plus_from, SignSignature};

/// All inputs of one ledger run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveScenario {
    pub genus: u32,
    pub degree: u32,
    pub s_plus: u32,
    pub coeff_a: BigRational,
    pub coeff_b: BigRational,
    pub real_places: u32,
    pub complex_places: u32,
    pub max_n: usize,
}

impl CurveScenario {
    /// A scenario over `Q` (signature `(1, 0)`).
    pub fn rational(
        genus: u32,
        degree: u32,
        s_plus: u32,
        coeff_a: BigRational,
        coeff_b: BigRational,
        max_n: usize,
    ) -> Result<Self> {
        let scn = CurveScenario {
            genus,
            degree,
            s_plus,
            coeff_a,
            coeff_b,
            real_places: 1,
            complex_places: 0,
            max_n,
        };
        scn.validate()?;
        Ok(scn)
    }

    pub fn with_signature(mut self, real_places: u32, complex_places: u32) -> Result<Self> {
        self.real_places = real_places;
        self.complex_places = complex_places;
        self.validate()?;
        Ok(self)
    }

    pub fn with_max_n(mut self, max_n: usize) -> Result<Self> {
        self.max_n = max_n;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidScenario(msg));
        if self.genus < 2 {
            return bad(format!("genus must be >= 2 (got {})", self.genus));
        }
        if self.degree < 1 {
            return bad("degree must be >= 1".into());
        }
        if self.s_plus > 2 * self.genus {
            return bad(format!(
                "s must satisfy 0 <= s <= 2g = {} (got {})",
                2 * self.genus,
                self.s_plus
            ));
        }
        if self.coeff_a.is_negative() || self.coeff_b.is_negative() {
            return bad("coefficients A and B must be >= 0".into());
        }
        if self.real_places + self.complex_places == 0 {
            return bad("signature needs r1 + r2 >= 1".into());
        }
        if self.max_n < 1 {
            return bad("max_n must be >= 1".into());
        }
        Ok(())
    }

    /// `m = 2g`.
    pub fn generators(&self) -> usize {
        2 * self.genus as usize
    }

    pub fn is_rational(&self) -> bool {
        (self.real_places, self.complex_places) == (1, 0)
    }

    fn signature(&self) -> SignSignature {
        SignSignature::new(self.generators(), self.s_plus as usize).expect("validated")
    }

    fn degree_q(&self) -> BigRational {
        BigRational::from_integer(self.degree.into())
    }

    /// `d·B·n^{2g-1}`.
    pub fn h2_budget(&self, n: usize) -> BigRational {
        self.degree_q() * &self.coeff_b * power(n, 2 * self.genus - 1)
    }

    /// `d·A·n^g`.
    pub fn f0_budget(&self, n: usize) -> BigRational {
        self.degree_q() * &self.coeff_a * power(n, self.genus)
    }
}

fn power(n: usize, e: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(n).pow(e))
}

fn q(x: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x.clone()))
}

/// Whether the inequality is certified at a level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        })
    }
}

/// Outcome of the archimedean-signature analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Viability {
    Viable,
    ObstructedComplexPlace,
    ObstructedRealGrowth,
    Undetermined,
}

impl Viability {
    pub fn as_str(self) -> &'static str {
        match self {
            Viability::Viable => "viable",
            Viability::ObstructedComplexPlace => "obstructed-complex-place",
            Viability::ObstructedRealGrowth => "obstructed-real-growth",
            Viability::Undetermined => "undetermined",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            Viability::Viable,
            Viability::ObstructedComplexPlace,
            Viability::ObstructedRealGrowth,
            Viability::Undetermined,
        ]
        .into_iter()
        .find(|v| v.as_str() == s)
    }
}

impl fmt::Display for Viability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One level of the ledger.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerRow {
    pub n: usize,
    pub z_dim_upper: BigUint,
    pub w_dim_upper: BigUint,
    pub dr_dim_lower: BigUint,
    pub h2_budget: BigRational,
    pub z_plus_lower: BigUint,
    pub z_plus_cumulative: BigUint,
    pub h1_upper: BigRational,
    pub f0_upper: BigRational,
    pub dr_quotient_lower: BigRational,
    pub margin: BigRational,
    pub verdict: Verdict,
}

/// The full ledger for a scenario.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DhReport {
    pub scenario: CurveScenario,
    pub rows: Vec<LedgerRow>,
    /// Smallest level whose row holds.
    pub crossover: Option<usize>,
    /// Every row from the crossover up to `max_n` holds.
    pub sustained: bool,
    pub viability: Viability,
}

/// Lower bound for `dim Z_[i]^+`.
///
/// Level 1 contributes the `s` fixed generators. Above that: all of `V_i`
/// when `s = 2g`; all of `V_i` at even `i` (nothing at odd `i`) when `s = 0`;
/// `V_{1,i}^+` otherwise.
pub fn z_plus_lower_bound(scn: &CurveScenario, i: usize) -> Result<BigUint> {
    scn.validate()?;
    if i == 0 {
        return Err(Error::InvalidArgument("levels start at 1".into()));
    }
    let sig = scn.signature();
    Ok(LevelCounter::new(sig).z_plus(i))
}

/// Per-level counts with the decomposition of the signature cached.
struct LevelCounter {
    sig: SignSignature,
    pfd: Option<crate::series::PartialFractionDecomp>,
}

impl LevelCounter {
    fn new(sig: SignSignature) -> Self {
        let pfd = sig.is_mixed().then(|| sig.partial_fractions());
        LevelCounter { sig, pfd }
    }

    fn z_dim(&self, i: usize) -> BigUint {
        metabelian_dimension(self.sig.m() as u64, i as u64).expect("m >= 4, i >= 1")
    }

    fn z_plus(&self, i: usize) -> BigUint {
        let (m, s) = (self.sig.m(), self.sig.s());
        if i == 1 {
            return BigUint::from(s);
        }
        if s == m {
            self.z_dim(i)
        } else if s == 0 {
            if i.is_multiple_of(2) {
                self.z_dim(i)
            } else {
                BigUint::zero()
            }
        } else {
            v1_plus_from(self.sig, self.pfd.as_ref().expect("mixed signature"), i)
        }
    }
}

/// Upper bound for `dim H^1(G_T, W_[n])` over the scenario's base field.
pub fn h1_upper_bound(scn: &CurveScenario, n: usize) -> Result<BigRational> {
    scn.validate()?;
    let counter = LevelCounter::new(scn.signature());
    let d = BigUint::from(scn.degree);
    let (r1, r2) = (BigUint::from(scn.real_places), BigUint::from(scn.complex_places));
    let mut deficiency = BigRational::zero();
    for i in 1..=n {
        let z_up = counter.z_dim(i) * &d;
        let real = q(&z_up) - q(&counter.z_plus(i));
        deficiency += q(&r1) * real + q(&(&r2 * &z_up));
    }
    Ok(deficiency + scn.h2_budget(n))
}

/// Lower bound for `dim W_[n]^dR / F^0`: `dim U_{X,n} - d·A·n^g`. May be
/// negative; a nonpositive value never certifies anything.
pub fn derham_lower_bound(scn: &CurveScenario, n: usize) -> Result<BigRational> {
    scn.validate()?;
    let counter = LevelCounter::new(scn.signature());
    let w: BigUint = (1..=n).map(|i| counter.z_dim(i)).sum();
    Ok(q(&w) - scn.f0_budget(n))
}

/// Builds the ledger for levels `1..=max_n` and locates the crossover.
pub fn dh_crossover(scn: &CurveScenario) -> Result<DhReport> {
    dh_crossover_with(scn, Parallelism::default())
}

pub fn dh_crossover_with(scn: &CurveScenario, par: Parallelism) -> Result<DhReport> {
    scn.validate()?;
    let counter = LevelCounter::new(scn.signature());
    // Levels are independent; partial sums are taken afterwards in order.
    let per_level = map_ordered((1..=scn.max_n).collect(), par, |i| {
        (counter.z_dim(i), counter.z_plus(i))
    });

    let d = BigUint::from(scn.degree);
    let r1 = BigRational::from_integer(scn.real_places.into());
    let r2 = BigRational::from_integer(scn.complex_places.into());
    let w_coeff = &r1 + &r2 - BigRational::from_integer(1.into());

    let mut rows = Vec::with_capacity(scn.max_n);
    let mut w = BigUint::zero();
    let mut z_plus_sum = BigUint::zero();
    let mut deficiency = BigRational::zero();
    for (idx, (z_dim, z_plus)) in per_level.into_iter().enumerate() {
        let n = idx + 1;
        let z_up = &z_dim * &d;
        w += &z_dim;
        z_plus_sum += &z_plus;
        deficiency += &r1 * (q(&z_up) - q(&z_plus)) + &r2 * q(&z_up);

        let w_up = &w * &d;
        let h2 = scn.h2_budget(n);
        let f0 = scn.f0_budget(n);
        let h1_upper = &deficiency + &h2;
        let dr_lower = q(&w) - &f0;
        let margin = &r1 * q(&z_plus_sum) - &w_coeff * q(&w_up) - &h2 - &f0;
        let verdict = if margin.is_positive() {
            Verdict::Holds
        } else {
            Verdict::Fails
        };
        rows.push(LedgerRow {
            n,
            z_dim_upper: z_up,
            w_dim_upper: w_up,
            dr_dim_lower: w.clone(),
            h2_budget: h2,
            z_plus_lower: z_plus,
            z_plus_cumulative: z_plus_sum.clone(),
            h1_upper,
            f0_upper: f0,
            dr_quotient_lower: dr_lower,
            margin,
            verdict,
        });
    }

    let crossover = rows
        .iter()
        .find(|r| r.verdict == Verdict::Holds)
        .map(|r| r.n);
    let sustained = crossover
        .map(|c| rows[c - 1..].iter().all(|r| r.verdict == Verdict::Holds))
        .unwrap_or(false);
    let viability = viability_from_rows(scn, crossover);
    Ok(DhReport {
        scenario: scn.clone(),
        rows,
        crossover,
        sustained,
        viability,
    })
}

fn viability_from_rows(scn: &CurveScenario, crossover: Option<usize>) -> Viability {
    if scn.complex_places >= 1 {
        Viability::ObstructedComplexPlace
    } else if scn.is_rational() {
        Viability::Viable
    } else if crossover.is_none() {
        Viability::ObstructedRealGrowth
    } else {
        // r1 >= 2 with a holding row: the real-place heuristic is not a
        // theorem, so nothing is claimed.
        Viability::Undetermined
    }
}

/// Classifies the base-field signature; totally real fields with `r1 >= 2`
/// are decided by running the generalized ledger up to `max_n`.
pub fn signature_viability(scn: &CurveScenario) -> Result<Viability> {
    scn.validate()?;
    if scn.complex_places >= 1 || scn.is_rational() {
        return Ok(viability_from_rows(scn, None));
    }
    Ok(dh_crossover(scn)?.viability)
}
