//! Sufficient conditions for a curve `C` with a group `G ≤ Aut(C)` to admit
//! an unramified correspondence to `y^2 = x^6 - 1`, read off the quotient
//! `D = C/G`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Primes above 89 that are still allowed for the third ramification index.
pub const EXCEPTIONAL_PRIMES: [u64; 6] = [101, 103, 107, 131, 167, 191];

/// What is known about the cover `C -> D = C/G`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoverData {
    /// `g(C)`, must be at least 2.
    pub curve_genus: u32,
    /// `g(D)`, must be at most 2.
    pub quotient_genus: u32,
    pub solvable: bool,
    /// Ramification indices above each listed point of `D`.
    pub ramification: Vec<Vec<u64>>,
    /// Ramification indices at three points of `C`.
    pub triple: Option<[u64; 3]>,
}

/// The condition that fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BtCondition {
    QuotientGenus,
    Solvable,
    /// Two distinct points of `D` whose ramification indices share a factor.
    NonCoprimeRamification { first: usize, second: usize },
    /// Indices divisible by 2, 3 and the prime `ell`.
    RamificationTriple { ell: u64 },
}

impl BtCondition {
    pub fn number(&self) -> u8 {
        match self {
            BtCondition::QuotientGenus => 1,
            BtCondition::Solvable => 2,
            BtCondition::NonCoprimeRamification { .. } => 3,
            BtCondition::RamificationTriple { .. } => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Applicability {
    Applies(BtCondition),
    /// None of the listed conditions holds; they are only sufficient.
    Unknown,
}

impl fmt::Display for Applicability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Applicability::Applies(c) => write!(f, "applies (condition {})", c.number()),
            Applicability::Unknown => f.write_str("unknown"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p))
}

fn allowed_ell(ell: u64) -> bool {
    is_prime(ell) && (ell <= 89 || EXCEPTIONAL_PRIMES.contains(&ell))
}

/// Smallest allowed prime dividing `e`.
fn allowed_prime_factor(e: u64) -> Option<u64> {
    (2..=e.min(191)).find(|&p| e.is_multiple_of(p) && allowed_ell(p))
}

fn triple_condition(t: [u64; 3]) -> Option<u64> {
    // The three points are unordered; try each assignment of (2, 3, ell).
    const ORDERS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    ORDERS
        .iter()
        .filter(|o| t[o[0]].is_multiple_of(2) && t[o[1]].is_multiple_of(3))
        .filter_map(|o| allowed_prime_factor(t[o[2]]))
        .min()
}

fn ramification_condition(points: &[Vec<u64>]) -> Option<(usize, usize)> {
    for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate().skip(i + 1) {
            if p.iter().any(|e| q.iter().any(|f| e.gcd(f) > 1)) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Checks the four printed conditions in order; the first one that holds
/// is reported.
pub fn bt_poonen_applies(data: &CoverData) -> Result<Applicability> {
    if data.curve_genus < 2 {
        return Err(Error::OutsideHypotheses(format!(
            "needs g(C) >= 2 (got {})",
            data.curve_genus
        )));
    }
    if data.quotient_genus > 2 {
        return Err(Error::OutsideHypotheses(format!(
            "needs g(D) <= 2 (got {})",
            data.quotient_genus
        )));
    }
    let zero_index = data
        .ramification
        .iter()
        .flatten()
        .chain(data.triple.iter().flatten())
        .any(|&e| e == 0);
    if zero_index {
        return Err(Error::InvalidArgument(
            "ramification indices are >= 1".into(),
        ));
    }

    if matches!(data.quotient_genus, 1 | 2) {
        return Ok(Applicability::Applies(BtCondition::QuotientGenus));
    }
    if data.solvable {
        return Ok(Applicability::Applies(BtCondition::Solvable));
    }
    if let Some((first, second)) = ramification_condition(&data.ramification) {
        return Ok(Applicability::Applies(BtCondition::NonCoprimeRamification {
            first,
            second,
        }));
    }
    if let Some(ell) = data.triple.and_then(triple_condition) {
        return Ok(Applicability::Applies(BtCondition::RamificationTriple { ell }));
    }
    Ok(Applicability::Unknown)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> CoverData {
        CoverData {
            curve_genus: 3,
            ..Default::default()
        }
    }

    #[test]
    fn quotient_genus_one() {
        let d = CoverData {
            quotient_genus: 1,
            ..base()
        };
        assert_eq!(
            bt_poonen_applies(&d).unwrap(),
            Applicability::Applies(BtCondition::QuotientGenus)
        );
    }

    #[test]
    fn solvable_group() {
        let d = CoverData {
            solvable: true,
            ..base()
        };
        assert_eq!(
            bt_poonen_applies(&d).unwrap(),
            Applicability::Applies(BtCondition::Solvable)
        );
    }

    #[test]
    fn triple_with_97_is_unknown() {
        let d = CoverData {
            triple: Some([2, 3, 97]),
            ..base()
        };
        assert_eq!(bt_poonen_applies(&d).unwrap(), Applicability::Unknown);
    }

    #[test]
    fn exceptional_primes() {
        for ell in EXCEPTIONAL_PRIMES {
            assert_eq!(triple_condition([2, 3, ell]), Some(ell));
        }
        assert_eq!(triple_condition([2, 3, 89]), Some(89));
        assert_eq!(triple_condition([2, 3, 113]), None);
        assert_eq!(triple_condition([97, 4, 9]), None);
        // 3 divides both 9 and 3; 2 | 4 and ell = 3 | 9.
        assert_eq!(triple_condition([9, 4, 3]), Some(3));
    }

    #[test]
    fn non_coprime_points() {
        let d = CoverData {
            ramification: vec![vec![2], vec![3], vec![9]],
            ..base()
        };
        assert_eq!(
            bt_poonen_applies(&d).unwrap(),
            Applicability::Applies(BtCondition::NonCoprimeRamification {
                first: 1,
                second: 2
            })
        );
        let d = CoverData {
            ramification: vec![vec![2], vec![3]],
            ..base()
        };
        assert_eq!(bt_poonen_applies(&d).unwrap(), Applicability::Unknown);
    }

    #[test]
    fn hypotheses() {
        let d = CoverData {
            curve_genus: 1,
            ..Default::default()
        };
        assert!(matches!(bt_poonen_applies(&d), Err(Error::OutsideHypotheses(_))));
        let d = CoverData {
            quotient_genus: 3,
            ..base()
        };
        assert!(matches!(bt_poonen_applies(&d), Err(Error::OutsideHypotheses(_))));
        let d = CoverData {
            triple: Some([0, 3, 5]),
            ..base()
        };
        assert!(bt_poonen_applies(&d).is_err());
    }
}
