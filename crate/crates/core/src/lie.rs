//! Graded dimensions of free and free metabelian Lie algebras.
//!
//! The free Lie algebra on `m` generators is counted two ways: the Witt
//! necklace formula and an explicit Lyndon-word basis. The metabelian
//! quotient has, for `n >= 2`, the basis of left-normed brackets
//!
//! ```text
//! [ ... [[a_{i1}, a_{i2}], a_{i3}], ... , a_{in}]   with i1 < i2 >= i3 >= ... >= in
//! ```
//!
//! enumerated lazily by [`MetabelianBasis`] in lexicographic order of the
//! index tuple. Its size is `(n - 1) · C(m + n - 2, n)`; the closed form is
//! cross-checked against the enumeration in the test suite.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exec::{map_ordered, Parallelism};
use crate::series::{binomial, moebius};

/// Dimension of the degree-`n` piece of the free Lie algebra on `m` generators.
pub fn witt_dimension(m: u64, n: u64) -> Result<BigUint> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "witt_dimension needs m >= 1 and n >= 1 (got m={m}, n={n})"
        )));
    }
    let base = BigInt::from(m);
    let mut total = BigInt::zero();
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        match moebius(d)? {
            0 => {}
            mu => total += BigInt::from(mu) * base.pow((n / d) as u32),
        }
    }
    total /= n;
    Ok(total.to_biguint().expect("necklace count is nonnegative"))
}

/// All Lyndon words of length `n` over the letters `1..=m`, in lexicographic
/// order.
pub fn lyndon_words(m: usize, n: usize) -> Result<Vec<Vec<usize>>> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "lyndon_words needs m >= 1 and n >= 1 (got m={m}, n={n})"
        )));
    }
    // Duval's generation of all Lyndon words of length <= n, 0-based letters.
    let mut out = Vec::new();
    let mut w: Vec<usize> = vec![0];
    loop {
        if w.len() == n {
            out.push(w.iter().map(|&c| c + 1).collect());
        }
        let period = w.len();
        while w.len() < n {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&(m - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    Ok(out)
}

/// A basis bracket of the metabelian graded piece, stored as its index tuple.
///
/// Invariant: `i1 < i2 >= i3 >= ... >= in`, all indices in `1..=alphabet`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BracketWord {
    indices: Vec<usize>,
    alphabet: usize,
}

impl BracketWord {
    pub fn new(indices: Vec<usize>, alphabet: usize) -> Result<Self> {
        if indices.len() < 2 {
            return Err(Error::InvalidArgument(
                "a bracket word has arity >= 2".into(),
            ));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > alphabet) {
            return Err(Error::AlphabetMismatch {
                index: bad,
                alphabet,
            });
        }
        if !is_normal_form(&indices) {
            return Err(Error::InvalidArgument(format!(
                "{indices:?} is not in normal form i1 < i2 >= i3 >= ..."
            )));
        }
        Ok(BracketWord { indices, alphabet })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn arity(&self) -> usize {
        self.indices.len()
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }
}

fn is_normal_form(w: &[usize]) -> bool {
    w.len() >= 2 && w[0] < w[1] && w[1..].windows(2).all(|p| p[0] >= p[1])
}

impl fmt::Display for BracketWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = &self.indices;
        write!(f, "{}[a{}, a{}]", "[".repeat(i.len() - 2), i[0], i[1])?;
        for idx in &i[2..] {
            write!(f, ", a{idx}]")?;
        }
        Ok(())
    }
}

/// Lazy lexicographic enumeration of the metabelian bracket basis.
#[derive(Debug, Clone)]
pub struct MetabelianBasis {
    alphabet: usize,
    current: Option<Vec<usize>>,
    leading_fixed: bool,
}

impl MetabelianBasis {
    /// Every normal-form word of arity `n` over `1..=m`.
    pub fn new(m: usize, n: usize) -> Result<Self> {
        check_basis_args(m, n)?;
        Ok(Self::start(m, n, 1, false))
    }

    /// Only the words whose first index is `leading`. The full basis is the
    /// disjoint union of these over `leading in 1..m`.
    pub fn with_leading(m: usize, n: usize, leading: usize) -> Result<Self> {
        check_basis_args(m, n)?;
        if leading == 0 || leading > m {
            return Err(Error::AlphabetMismatch {
                index: leading,
                alphabet: m,
            });
        }
        Ok(Self::start(m, n, leading, true))
    }

    fn start(m: usize, n: usize, leading: usize, leading_fixed: bool) -> Self {
        let current = (leading < m).then(|| {
            let mut w = vec![1; n];
            w[0] = leading;
            w[1] = leading + 1;
            w
        });
        MetabelianBasis {
            alphabet: m,
            current,
            leading_fixed,
        }
    }

    /// Moves `w` to its lexicographic successor; false when exhausted.
    fn advance(&self, w: &mut [usize]) -> bool {
        let m = self.alphabet;
        let floor = usize::from(self.leading_fixed);
        for p in (floor..w.len()).rev() {
            let max = match p {
                0 => m - 1,
                1 => m,
                _ => w[p - 1],
            };
            if w[p] < max {
                w[p] += 1;
                for q in p + 1..w.len() {
                    w[q] = if q == 1 { w[0] + 1 } else { 1 };
                }
                return true;
            }
        }
        false
    }
}

fn check_basis_args(m: usize, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "bracket basis needs level n >= 2 (got {n}); level 1 is spanned by the generators"
        )));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("alphabet size must be >= 1".into()));
    }
    Ok(())
}

impl Iterator for MetabelianBasis {
    type Item = BracketWord;

    fn next(&mut self) -> Option<BracketWord> {
        let word = self.current.take()?;
        let mut succ = word.clone();
        if self.advance(&mut succ) {
            self.current = Some(succ);
        }
        Some(BracketWord {
            indices: word,
            alphabet: self.alphabet,
        })
    }
}

/// Dimension of the degree-`n` piece of the free metabelian Lie algebra on
/// `m` generators: `m` at `n = 1`, `(n - 1) · C(m + n - 2, n)` above.
pub fn metabelian_dimension(m: u64, n: u64) -> Result<BigUint> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "metabelian_dimension needs m >= 1 and n >= 1 (got m={m}, n={n})"
        )));
    }
    if n == 1 {
        return Ok(BigUint::from(m));
    }
    Ok(binomial(m + n - 2, n as i64) * (n - 1))
}

/// Counts the metabelian basis by streaming enumeration, split by the
/// leading index.
pub fn metabelian_dimension_enumerated(m: usize, n: usize, par: Parallelism) -> Result<BigUint> {
    if n == 1 {
        return Ok(BigUint::from(m));
    }
    check_basis_args(m, n)?;
    let counts = map_ordered((1..m).collect(), par, |lead| {
        MetabelianBasis::with_leading(m, n, lead)
            .map(|it| it.count() as u64)
            .unwrap_or(0)
    });
    Ok(counts.into_iter().map(BigUint::from).sum())
}

/// Where the rows of a [`GradedDimensionTable`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Witt,
    Metabelian,
    EigenPlus,
    LedgerBound,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Witt => "witt",
            Provenance::Metabelian => "metabelian",
            Provenance::EigenPlus => "eigenplus",
            Provenance::LedgerBound => "ledger-bound",
        })
    }
}

/// Dimensions of graded pieces `1..=max_n`, without gaps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDimensionTable {
    alphabet_size: usize,
    provenance: Provenance,
    rows: Vec<BigUint>,
}

impl GradedDimensionTable {
    /// Wraps precomputed rows; `rows[0]` is level 1.
    pub fn from_rows(alphabet_size: usize, provenance: Provenance, rows: Vec<BigUint>) -> Self {
        GradedDimensionTable {
            alphabet_size,
            provenance,
            rows,
        }
    }

    pub fn witt(m: usize, max_n: usize) -> Result<Self> {
        let rows = (1..=max_n as u64)
            .map(|n| witt_dimension(m as u64, n))
            .collect::<Result<_>>()?;
        Ok(Self::from_rows(m, Provenance::Witt, rows))
    }

    pub fn metabelian(m: usize, max_n: usize) -> Result<Self> {
        let rows = (1..=max_n as u64)
            .map(|n| metabelian_dimension(m as u64, n))
            .collect::<Result<_>>()?;
        Ok(Self::from_rows(m, Provenance::Metabelian, rows))
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn max_level(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BigUint] {
        &self.rows
    }

    pub fn dimension(&self, n: usize) -> Result<&BigUint> {
        if n == 0 {
            return Err(Error::MissingRow {
                requested: n,
                available: self.rows.len(),
            });
        }
        self.rows.get(n - 1).ok_or(Error::MissingRow {
            requested: n,
            available: self.rows.len(),
        })
    }
}

/// `Σ_{i=1}^{n} table[i]`, e.g. `dim U_n` from the graded pieces.
pub fn cumulative_dimension(table: &GradedDimensionTable, n: usize) -> Result<BigUint> {
    if n > table.max_level() {
        return Err(Error::MissingRow {
            requested: n,
            available: table.max_level(),
        });
    }
    Ok(table.rows[..n].iter().sum())
}
