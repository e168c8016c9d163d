//! Signed Young diagrams and the box-insertion recursion for elliptic
//! spectra of `su(p,q)`.
//!
//! A signed Young diagram fills a Young diagram with `+` and `-` so that the
//! signs alternate along each row; diagrams are identified up to permutation
//! of rows. They label the nilpotent `K`-orbits of the `(p,q)` off-diagonal
//! block space, and the map [`sigma_lambda`] sends an elliptic spectrum to
//! the label of the dense orbit met by its nilradical. Spectra use exact
//! rational arithmetic: the recursion branches on equality of eigenvalues,
//! never on a tolerance.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::partition::{enumerate_partitions, Partition};

/// Exact rational scalar for spectra.
pub type Rat = num_rational::Ratio<i64>;

/// Sign of a box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// One row: its length and the sign of the leftmost box. Signs alternate
/// along a row, so the leading sign determines the whole filling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Row {
    pub len: usize,
    pub sign: Sign,
}

impl Row {
    pub fn new(len: usize, sign: Sign) -> Self {
        Self { len, sign }
    }

    /// `(plus, minus)` box counts of this row.
    fn sign_counts(self) -> (usize, usize) {
        let leading = self.len.div_ceil(2);
        let other = self.len / 2;
        match self.sign {
            Sign::Plus => (leading, other),
            Sign::Minus => (other, leading),
        }
    }

    /// Sign of the box in 1-indexed column `col` (must be `<= len`).
    fn sign_in_column(self, col: usize) -> Sign {
        if col % 2 == 1 {
            self.sign
        } else {
            self.sign.flipped()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramError {
    /// Rows must have positive length.
    EmptyRow,
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::EmptyRow => write!(f, "diagram rows must have positive length"),
        }
    }
}

impl core::error::Error for DiagramError {}

#[derive(Serialize, Deserialize, Clone)]
struct DiagramRepr {
    rows: Vec<Row>,
}

/// A signed Young diagram, stored with rows in canonical order: length
/// descending, then `+` before `-`. Equality of values is therefore equality
/// of diagrams up to row permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "DiagramRepr", try_from = "DiagramRepr")]
pub struct SignedYoungDiagram {
    rows: Vec<Row>,
}

impl SignedYoungDiagram {
    pub fn new<I: IntoIterator<Item = Row>>(rows: I) -> Result<Self, DiagramError> {
        let mut rows: Vec<Row> = rows.into_iter().collect();
        if rows.iter().any(|r| r.len == 0) {
            return Err(DiagramError::EmptyRow);
        }
        rows.sort_unstable_by(|a, b| b.len.cmp(&a.len).then(a.sign.cmp(&b.sign)));
        Ok(Self { rows })
    }

    pub fn empty() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `(n_plus, n_minus)`: number of `+` and `-` boxes.
    pub fn signature(&self) -> (usize, usize) {
        let mut plus = 0;
        let mut minus = 0;
        for row in &self.rows {
            let (p, m) = row.sign_counts();
            plus += p;
            minus += m;
        }
        (plus, minus)
    }

    pub fn box_count(&self) -> usize {
        self.rows.iter().map(|r| r.len).sum()
    }

    /// Row lengths with the signs erased.
    pub fn underlying_partition(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len)).expect("rows have positive length")
    }

    /// Per column (1-indexed, entry `k-1`): number of `+` and `-` boxes in
    /// column `k`.
    pub fn column_sign_counts(&self) -> Vec<(usize, usize)> {
        let width = self.rows.first().map(|r| r.len).unwrap_or(0);
        let mut cols = Vec::with_capacity(width);
        for k in 1..=width {
            let mut plus = 0;
            let mut minus = 0;
            for row in self.rows.iter().filter(|r| r.len >= k) {
                match row.sign_in_column(k) {
                    Sign::Plus => plus += 1,
                    Sign::Minus => minus += 1,
                }
            }
            cols.push((plus, minus));
        }
        cols
    }

    /// Rebuilds a diagram from per-column sign counts; `None` when the counts
    /// are not realizable by any diagram.
    pub fn from_column_sign_counts(cols: &[(usize, usize)]) -> Option<SignedYoungDiagram> {
        let width = cols.len();
        // number of rows with length >= k whose leading sign is +/-
        let lead = |k: usize| -> (usize, usize) {
            let (r, s) = cols[k - 1];
            if k % 2 == 1 {
                (r, s)
            } else {
                (s, r)
            }
        };
        let mut rows = Vec::new();
        for k in 1..=width {
            let (tp, tm) = lead(k);
            let (np, nm) = if k == width { (0, 0) } else { lead(k + 1) };
            if tp < np || tm < nm {
                return None;
            }
            for _ in 0..tp - np {
                rows.push(Row::new(k, Sign::Plus));
            }
            for _ in 0..tm - nm {
                rows.push(Row::new(k, Sign::Minus));
            }
        }
        let diagram = SignedYoungDiagram::new(rows).ok()?;
        if diagram.column_sign_counts() == cols {
            Some(diagram)
        } else {
            None
        }
    }

    /// All signed Young diagrams of signature `(p, q)`.
    pub fn enumerate(p: usize, q: usize) -> Vec<SignedYoungDiagram> {
        fn rec(
            runs: &[(usize, usize)],
            idx: usize,
            acc: &mut Vec<Row>,
            target: (usize, usize),
            out: &mut Vec<SignedYoungDiagram>,
        ) {
            if idx == runs.len() {
                let d = SignedYoungDiagram::new(acc.iter().copied()).expect("positive rows");
                if d.signature() == target {
                    out.push(d);
                }
                return;
            }
            let (len, mult) = runs[idx];
            for plus_rows in 0..=mult {
                for _ in 0..plus_rows {
                    acc.push(Row::new(len, Sign::Plus));
                }
                for _ in 0..mult - plus_rows {
                    acc.push(Row::new(len, Sign::Minus));
                }
                rec(runs, idx + 1, acc, target, out);
                acc.truncate(acc.len() - mult);
            }
        }

        let mut out = Vec::new();
        for shape in enumerate_partitions(p + q) {
            let mut runs: Vec<(usize, usize)> = Vec::new();
            for &part in shape.parts() {
                match runs.last_mut() {
                    Some((len, mult)) if *len == part => *mult += 1,
                    _ => runs.push((part, 1)),
                }
            }
            let mut acc = Vec::new();
            rec(&runs, 0, &mut acc, (p, q), &mut out);
        }
        out
    }
}

impl From<SignedYoungDiagram> for DiagramRepr {
    fn from(d: SignedYoungDiagram) -> Self {
        DiagramRepr { rows: d.rows }
    }
}

impl TryFrom<DiagramRepr> for SignedYoungDiagram {
    type Error = DiagramError;

    fn try_from(repr: DiagramRepr) -> Result<Self, Self::Error> {
        SignedYoungDiagram::new(repr.rows)
    }
}

impl fmt::Display for SignedYoungDiagram {
    /// Rows of alternating `+-` characters, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "(empty)");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mut sign = row.sign;
            for _ in 0..row.len {
                write!(f, "{}", sign.as_char())?;
                sign = sign.flipped();
            }
        }
        Ok(())
    }
}

/// `L_{r,s} * sigma`: prepends a `+` box to each of the first `r` rows that
/// start with `-`, and a `-` box to each of the first `s` rows that start
/// with `+`, rows taken in canonical order; leftover insertions open new
/// rows of length one. The signature grows by `(r, s)`.
pub fn l_star(r: usize, s: usize, sigma: &SignedYoungDiagram) -> SignedYoungDiagram {
    let mut rows: Vec<Row> = sigma.rows().to_vec();
    let minus_rows: Vec<usize> = (0..rows.len())
        .filter(|&i| rows[i].sign == Sign::Minus)
        .collect();
    let plus_rows: Vec<usize> = (0..rows.len())
        .filter(|&i| rows[i].sign == Sign::Plus)
        .collect();

    // both insertions read the original leading signs
    let grow_plus = r.min(minus_rows.len());
    let grow_minus = s.min(plus_rows.len());
    for &i in &minus_rows[..grow_plus] {
        rows[i] = Row::new(rows[i].len + 1, Sign::Plus);
    }
    for &i in &plus_rows[..grow_minus] {
        rows[i] = Row::new(rows[i].len + 1, Sign::Minus);
    }
    for _ in 0..r - grow_plus {
        rows.push(Row::new(1, Sign::Plus));
    }
    for _ in 0..s - grow_minus {
        rows.push(Row::new(1, Sign::Minus));
    }
    SignedYoungDiagram::new(rows).expect("rows stay nonempty")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumError {
    /// Entries must sum to zero (tracelessness).
    NonzeroSum,
    /// Not a valid `num` or `num/den` rational literal.
    InvalidRational,
}

impl fmt::Display for SpectrumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectrumError::NonzeroSum => write!(f, "spectrum entries must sum to zero"),
            SpectrumError::InvalidRational => {
                write!(f, "expected an exact rational like `3` or `-17/9`")
            }
        }
    }
}

impl core::error::Error for SpectrumError {}

/// Parses `num` or `num/den` into an exact rational. Decimal notation is
/// rejected; callers that want fractional entries must pass them exactly.
pub fn parse_rational(s: &str) -> Result<Rat, SpectrumError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (
            n.trim()
                .parse::<i64>()
                .map_err(|_| SpectrumError::InvalidRational)?,
            d.trim()
                .parse::<i64>()
                .map_err(|_| SpectrumError::InvalidRational)?,
        ),
        None => (
            s.parse::<i64>().map_err(|_| SpectrumError::InvalidRational)?,
            1,
        ),
    };
    if den == 0 {
        return Err(SpectrumError::InvalidRational);
    }
    Ok(Rat::new(num, den))
}

#[derive(Serialize, Deserialize, Clone)]
struct SpectrumRepr {
    lambda: Vec<String>,
    mu: Vec<String>,
}

/// An elliptic spectrum for `su(p,q)`: the eigenvalue lists of the two
/// diagonal blocks, each nonincreasing, with zero total sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "SpectrumRepr", try_from = "SpectrumRepr")]
pub struct EllipticSpectrum {
    lambda: Vec<Rat>,
    mu: Vec<Rat>,
}

impl EllipticSpectrum {
    /// Builds a spectrum; entries are sorted into nonincreasing order and the
    /// total must vanish exactly.
    pub fn new(
        mut lambda: Vec<Rat>,
        mut mu: Vec<Rat>,
    ) -> Result<EllipticSpectrum, SpectrumError> {
        let total: Rat = lambda.iter().chain(mu.iter()).sum();
        if !total.is_zero() {
            return Err(SpectrumError::NonzeroSum);
        }
        lambda.sort_unstable_by(|a, b| b.cmp(a));
        mu.sort_unstable_by(|a, b| b.cmp(a));
        Ok(EllipticSpectrum { lambda, mu })
    }

    pub fn from_integers(lambda: &[i64], mu: &[i64]) -> Result<EllipticSpectrum, SpectrumError> {
        EllipticSpectrum::new(
            lambda.iter().map(|&x| Rat::from_integer(x)).collect(),
            mu.iter().map(|&x| Rat::from_integer(x)).collect(),
        )
    }

    pub fn lambda(&self) -> &[Rat] {
        &self.lambda
    }

    pub fn mu(&self) -> &[Rat] {
        &self.mu
    }

    /// `(p, q)` block sizes.
    pub fn signature(&self) -> (usize, usize) {
        (self.lambda.len(), self.mu.len())
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.iter().chain(self.mu.iter()).all(Rat::is_zero)
    }
}

impl From<EllipticSpectrum> for SpectrumRepr {
    fn from(s: EllipticSpectrum) -> Self {
        use alloc::string::ToString;
        SpectrumRepr {
            lambda: s.lambda.iter().map(|r| r.to_string()).collect(),
            mu: s.mu.iter().map(|r| r.to_string()).collect(),
        }
    }
}

impl TryFrom<SpectrumRepr> for EllipticSpectrum {
    type Error = SpectrumError;

    fn try_from(repr: SpectrumRepr) -> Result<Self, Self::Error> {
        let lambda = repr
            .lambda
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        let mu = repr
            .mu
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        EllipticSpectrum::new(lambda, mu)
    }
}

/// The signed diagram attached to an elliptic spectrum: strip the maximal
/// value, occurring `r` times among `lambda` and `s` times among `mu`,
/// recurse on the rest, and apply `L_{r,s}`. Only the ordering of distinct
/// values matters, so the result is invariant under shifting all entries by
/// a constant or scaling by a positive rational.
pub fn sigma_lambda(spec: &EllipticSpectrum) -> SignedYoungDiagram {
    // distinct values descending with their multiplicities in each list
    let mut groups: Vec<(Rat, usize, usize)> = Vec::new();
    {
        let mut i = 0;
        let mut j = 0;
        let lam = spec.lambda();
        let mu = spec.mu();
        while i < lam.len() || j < mu.len() {
            let next = match (lam.get(i), mu.get(j)) {
                (Some(&a), Some(&b)) => a.max(b),
                (Some(&a), None) => a,
                (None, Some(&b)) => b,
                (None, None) => unreachable!(),
            };
            let mut r = 0;
            while i < lam.len() && lam[i] == next {
                r += 1;
                i += 1;
            }
            let mut s = 0;
            while j < mu.len() && mu[j] == next {
                s += 1;
                j += 1;
            }
            groups.push((next, r, s));
        }
    }
    let mut sigma = SignedYoungDiagram::empty();
    for &(_, r, s) in groups.iter().rev() {
        sigma = l_star(r, s, &sigma);
    }
    sigma
}

/// The canonical spectrum reproducing a diagram: with `r_k`/`s_k` the sign
/// counts of column `k`, the value `N - k` occurs `r_k` times in `lambda`
/// and `s_k` times in `mu`, where `N` is fixed by the zero-sum constraint.
/// Satisfies `sigma_lambda(inverse_sigma(d)) == d`.
pub fn inverse_sigma(sigma: &SignedYoungDiagram) -> EllipticSpectrum {
    let cols = sigma.column_sign_counts();
    if cols.is_empty() {
        return EllipticSpectrum::new(Vec::new(), Vec::new()).expect("empty spectrum sums to zero");
    }
    let (p, q) = sigma.signature();
    let weighted: i64 = cols
        .iter()
        .enumerate()
        .map(|(i, &(r, s))| (i as i64 + 1) * (r + s) as i64)
        .sum();
    let level = Rat::new(weighted, (p + q) as i64);
    let mut lambda = Vec::with_capacity(p);
    let mut mu = Vec::with_capacity(q);
    for (i, &(r, s)) in cols.iter().enumerate() {
        let value = level - Rat::from_integer(i as i64 + 1);
        for _ in 0..r {
            lambda.push(value);
        }
        for _ in 0..s {
            mu.push(value);
        }
    }
    EllipticSpectrum::new(lambda, mu).expect("column construction sums to zero")
}
