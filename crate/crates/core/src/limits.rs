//! Limits of scaled adjoint orbits as maps on combinatorial labels.
//!
//! Hyperbolic spectra produce Richardson partitions; orbit labels of
//! `SL(n,R)` map through [`l_map`]; elliptic spectra of `su(p,q)` map to
//! signed diagrams via the spectral recursion; and the minimal-orbit table
//! covers the remaining classical families at the first fundamental
//! coweight. Results are wrapped in [`LimitSet`] together with the group and
//! the construction that produced them.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use alloc::string::String;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::diagram::{sigma_lambda, EllipticSpectrum, Rat, Row, Sign, SignedYoungDiagram, SpectrumError};
use crate::partition::{ClassicalType, Family, Partition};

/// Eigenvalue multiset of a hyperbolic diagonal element of `sl(n,R)`,
/// stored nonincreasing, with zero sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperbolicSpectrum {
    values: Vec<Rat>,
}

impl HyperbolicSpectrum {
    pub fn new(mut values: Vec<Rat>) -> Result<Self, SpectrumError> {
        let total: Rat = values.iter().sum();
        if !total.is_zero() {
            return Err(SpectrumError::NonzeroSum);
        }
        values.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { values })
    }

    pub fn from_integers(values: &[i64]) -> Result<Self, SpectrumError> {
        Self::new(values.iter().map(|&v| Rat::from_integer(v)).collect())
    }

    /// The neutral diagonal of the block sum `D(d_1) + ... + D(d_m)`, where
    /// `D(d) = diag(d-1, d-3, ..., -(d-1))`.
    pub fn from_jordan_blocks(blocks: &Partition) -> Self {
        let mut values = Vec::with_capacity(blocks.n());
        for &d in blocks.parts() {
            let d = d as i64;
            let mut v = d - 1;
            while v >= -(d - 1) {
                values.push(Rat::from_integer(v));
                v -= 2;
            }
        }
        Self::new(values).expect("each block sums to zero")
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Rat::is_zero)
    }
}

/// Group attached to a limit computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum GroupLabel {
    /// `SL(n,R)`
    SpecialLinear { n: usize },
    /// `SU(p,q)`
    SpecialUnitary { p: usize, q: usize },
    /// `SO(a,b)`
    SpecialOrthogonal { a: usize, b: usize },
    /// `Sp(2n,R)`
    SymplecticReal { n: usize },
    /// `SO*(2n)`
    SpecialOrthogonalStar { n: usize },
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupLabel::SpecialLinear { n } => write!(f, "SL({n},R)"),
            GroupLabel::SpecialUnitary { p, q } => write!(f, "SU({p},{q})"),
            GroupLabel::SpecialOrthogonal { a, b } => write!(f, "SO({a},{b})"),
            GroupLabel::SymplecticReal { n } => write!(f, "Sp({},R)", 2 * n),
            GroupLabel::SpecialOrthogonalStar { n } => write!(f, "SO*({})", 2 * n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseGroupError;

impl fmt::Display for ParseGroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unrecognized group label")
    }
}

impl core::error::Error for ParseGroupError {}

impl FromStr for GroupLabel {
    type Err = ParseGroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = |s: &str, prefix: &str| -> Option<String> {
            s.strip_prefix(prefix)?
                .strip_suffix(')')
                .map(String::from)
        };
        let parse_num = |t: &str| t.trim().parse::<usize>().map_err(|_| ParseGroupError);
        if let Some(t) = inner(s, "SL(") {
            let t = t.strip_suffix(",R").ok_or(ParseGroupError)?;
            return Ok(GroupLabel::SpecialLinear { n: parse_num(t)? });
        }
        if let Some(t) = inner(s, "SU(") {
            let (p, q) = t.split_once(',').ok_or(ParseGroupError)?;
            return Ok(GroupLabel::SpecialUnitary {
                p: parse_num(p)?,
                q: parse_num(q)?,
            });
        }
        if let Some(t) = inner(s, "SO*(") {
            let m = parse_num(&t)?;
            if m % 2 != 0 {
                return Err(ParseGroupError);
            }
            return Ok(GroupLabel::SpecialOrthogonalStar { n: m / 2 });
        }
        if let Some(t) = inner(s, "SO(") {
            let (a, b) = t.split_once(',').ok_or(ParseGroupError)?;
            return Ok(GroupLabel::SpecialOrthogonal {
                a: parse_num(a)?,
                b: parse_num(b)?,
            });
        }
        if let Some(t) = inner(s, "Sp(") {
            let t = t.strip_suffix(",R").ok_or(ParseGroupError)?;
            let m = parse_num(t)?;
            if m % 2 != 0 {
                return Err(ParseGroupError);
            }
            return Ok(GroupLabel::SymplecticReal { n: m / 2 });
        }
        Err(ParseGroupError)
    }
}

impl From<GroupLabel> for String {
    fn from(g: GroupLabel) -> Self {
        use alloc::string::ToString;
        g.to_string()
    }
}

impl TryFrom<String> for GroupLabel {
    type Error = ParseGroupError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// Which construction produced a limit set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    /// Hyperbolic element; the limit is the real locus of the Richardson
    /// orbit closure.
    #[serde(rename = "richardson-hyperbolic")]
    RichardsonHyperbolic,
    /// Image of a nilpotent orbit label under the hyperbolic limit map.
    #[serde(rename = "l-map")]
    LMap,
    /// Even orbit approximated along its elliptic curve: the limit is the
    /// orbit's own closure.
    #[serde(rename = "elliptic-even")]
    EllipticEven,
    /// Elliptic element of `su(p,q)`; label computed by the spectral
    /// recursion.
    #[serde(rename = "elliptic-su(p,q)")]
    EllipticSuPq,
    /// First-coweight elliptic element, from the minimal-orbit table.
    #[serde(rename = "minimal-table")]
    MinimalTable,
}

/// Which real forms a partition-labelled component stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RealForms {
    /// Closure of every real form of the complex orbit.
    #[serde(rename = "all")]
    All,
    /// The zero orbit.
    #[serde(rename = "zero")]
    Zero,
    /// The distinguished real form of the minimal orbit.
    #[serde(rename = "min+")]
    MinPlus,
    /// The dense orbit of the limit.
    #[serde(rename = "dense")]
    Dense,
}

/// A component labelled by a partition of the complex orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionComponent {
    pub partition: Partition,
    pub realforms: RealForms,
    /// Number of real forms covered, when known (`SL(n,R)` labels).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<u8>,
}

/// A component labelled by a signed Young diagram (`SU(p,q)` labels).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramComponent {
    pub diagram: SignedYoungDiagram,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OrbitComponent {
    Partition(PartitionComponent),
    Diagram(DiagramComponent),
}

impl OrbitComponent {
    pub fn partition(p: Partition, realforms: RealForms, count: Option<u8>) -> Self {
        OrbitComponent::Partition(PartitionComponent {
            partition: p,
            realforms,
            count,
        })
    }

    pub fn diagram(d: SignedYoungDiagram) -> Self {
        OrbitComponent::Diagram(DiagramComponent { diagram: d })
    }

    /// Partition label with signs erased.
    pub fn underlying_partition(&self) -> Partition {
        match self {
            OrbitComponent::Partition(c) => c.partition.clone(),
            OrbitComponent::Diagram(c) => c.diagram.underlying_partition(),
        }
    }
}

/// A finite union of nilpotent orbit-closure labels, with provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitSet {
    pub group: GroupLabel,
    pub provenance: Provenance,
    pub components: Vec<OrbitComponent>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitError {
    /// The scaled element is zero; its limit degenerates to the origin.
    ZeroElement,
    /// The orbit label mixes parities, so the even-orbit map does not apply.
    NotEven,
    /// Parameters outside the table constraints.
    BadParams(&'static str),
    /// The partition does not label an orbit of the requested type.
    Inadmissible,
}

impl fmt::Display for LimitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LimitError::ZeroElement => write!(f, "element is zero"),
            LimitError::NotEven => write!(f, "orbit label mixes even and odd parts"),
            LimitError::BadParams(msg) => write!(f, "bad parameters: {msg}"),
            LimitError::Inadmissible => write!(f, "partition is not admissible for this type"),
        }
    }
}

impl core::error::Error for LimitError {}

/// Richardson partition of a hyperbolic spectrum: with `N_d` the
/// multiplicity of the eigenvalue `d`, the `j`-th part is the number of
/// distinct eigenvalues of multiplicity at least `j`. Equivalently, the
/// conjugate of the multiplicity multiset.
pub fn richardson_partition(h: &HyperbolicSpectrum) -> Partition {
    let mut multiplicities = Vec::new();
    let values = h.values();
    let mut i = 0;
    while i < values.len() {
        let mut j = i;
        while j < values.len() && values[j] == values[i] {
            j += 1;
        }
        multiplicities.push(j - i);
        i = j;
    }
    Partition::new(multiplicities)
        .expect("multiplicities are positive")
        .transpose()
}

/// Limit of the scaled orbits of a nonzero hyperbolic element of `sl(n,R)`:
/// the closure of all real forms of the Richardson orbit.
pub fn limit_hyperbolic_sl(h: &HyperbolicSpectrum) -> Result<LimitSet, LimitError> {
    if h.is_zero() {
        return Err(LimitError::ZeroElement);
    }
    let label = richardson_partition(h);
    let count = label.sl_real_form_count();
    Ok(LimitSet {
        group: GroupLabel::SpecialLinear { n: h.n() },
        provenance: Provenance::RichardsonHyperbolic,
        components: vec![OrbitComponent::partition(
            label,
            RealForms::All,
            Some(count),
        )],
    })
}

/// The hyperbolic limit map on `SL(n,R)` orbit labels: identity on labels
/// of uniform parity, and the term-by-term sum of the even and odd
/// subsequences otherwise.
pub fn l_map(orbit: &Partition) -> Partition {
    if orbit.has_uniform_parity() {
        orbit.clone()
    } else {
        let (evens, odds) = orbit.parity_split();
        Partition::termwise_sum(&evens, &odds)
    }
}

/// [`l_map`] wrapped as a [`LimitSet`] for the orbit's group.
pub fn l_map_limit(orbit: &Partition) -> LimitSet {
    let image = l_map(orbit);
    let count = image.sl_real_form_count();
    LimitSet {
        group: GroupLabel::SpecialLinear { n: orbit.n() },
        provenance: Provenance::LMap,
        components: vec![OrbitComponent::partition(
            image,
            RealForms::All,
            Some(count),
        )],
    }
}

/// Limit of the scaled orbits of a nonzero elliptic element of `su(p,q)`:
/// the closure of the single real orbit labelled by the diagram of the
/// spectrum.
pub fn limit_elliptic_supq(spec: &EllipticSpectrum) -> Result<LimitSet, LimitError> {
    if spec.is_zero() {
        return Err(LimitError::ZeroElement);
    }
    let (p, q) = spec.signature();
    Ok(LimitSet {
        group: GroupLabel::SpecialUnitary { p, q },
        provenance: Provenance::EllipticSuPq,
        components: vec![OrbitComponent::diagram(sigma_lambda(spec))],
    })
}

/// Elliptic limit of an even orbit: the identity on the label. Errors when
/// the parts mix parity, since the orbit is then not even.
pub fn elliptic_even_limit(orbit: &Partition) -> Result<Partition, LimitError> {
    if orbit.has_uniform_parity() {
        Ok(orbit.clone())
    } else {
        Err(LimitError::NotEven)
    }
}

/// Rows of the minimal-orbit table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MinimalType {
    AIII,
    BI,
    CI,
    DI,
    DIII,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimalParams {
    Signature { p: usize, q: usize },
    Rank { n: usize },
}

fn two_then_ones(ones: usize) -> Partition {
    Partition::new(core::iter::once(2).chain(core::iter::repeat_n(1, ones)))
        .expect("positive parts")
}

fn two_two_then_ones(ones: usize) -> Partition {
    Partition::new([2, 2].into_iter().chain(core::iter::repeat_n(1, ones)))
        .expect("positive parts")
}

fn three_then_ones(ones: usize) -> Partition {
    Partition::new(core::iter::once(3).chain(core::iter::repeat_n(1, ones)))
        .expect("positive parts")
}

fn ones(count: usize) -> Partition {
    Partition::new(core::iter::repeat_n(1, count)).expect("positive parts")
}

/// Limit of scaled orbits of the first-coweight elliptic element, per the
/// minimal-orbit table. In types AIII and DIII the limit is the closure of
/// the distinguished minimal real orbit; in types BI, CI and DI it is the
/// union of the origin, that minimal orbit, and one larger dense orbit.
pub fn minimal_limit(ty: MinimalType, params: MinimalParams) -> Result<LimitSet, LimitError> {
    use MinimalParams::{Rank, Signature};
    match (ty, params) {
        (MinimalType::AIII, Signature { p, q }) => {
            if p < 1 || p > q {
                return Err(LimitError::BadParams("AIII requires 1 <= p <= q"));
            }
            let mut rows = vec![Row::new(2, Sign::Plus)];
            rows.extend(core::iter::repeat_n(Row::new(1, Sign::Plus), p - 1));
            rows.extend(core::iter::repeat_n(Row::new(1, Sign::Minus), q - 1));
            let diagram = SignedYoungDiagram::new(rows).expect("positive rows");
            Ok(LimitSet {
                group: GroupLabel::SpecialUnitary { p, q },
                provenance: Provenance::MinimalTable,
                components: vec![OrbitComponent::diagram(diagram)],
            })
        }
        (MinimalType::BI, Signature { p, q }) => {
            if p < 1 || q < 1 {
                return Err(LimitError::BadParams("BI requires p, q >= 1"));
            }
            let m = 2 * (p + q) + 1;
            Ok(LimitSet {
                group: GroupLabel::SpecialOrthogonal { a: 2 * p, b: 2 * q + 1 },
                provenance: Provenance::MinimalTable,
                components: vec![
                    OrbitComponent::partition(ones(m), RealForms::Zero, None),
                    OrbitComponent::partition(two_two_then_ones(m - 4), RealForms::MinPlus, None),
                    OrbitComponent::partition(three_then_ones(m - 3), RealForms::Dense, None),
                ],
            })
        }
        (MinimalType::CI, Rank { n }) => {
            if n < 2 {
                return Err(LimitError::BadParams("CI requires n >= 2"));
            }
            let m = 2 * n;
            Ok(LimitSet {
                group: GroupLabel::SymplecticReal { n },
                provenance: Provenance::MinimalTable,
                components: vec![
                    OrbitComponent::partition(ones(m), RealForms::Zero, None),
                    OrbitComponent::partition(two_then_ones(m - 2), RealForms::MinPlus, None),
                    OrbitComponent::partition(two_two_then_ones(m - 4), RealForms::Dense, None),
                ],
            })
        }
        (MinimalType::DI, Signature { p, q }) => {
            if p < 1 || p > q || p + q < 4 {
                return Err(LimitError::BadParams("DI requires 1 <= p <= q and p + q >= 4"));
            }
            let m = 2 * (p + q);
            Ok(LimitSet {
                group: GroupLabel::SpecialOrthogonal { a: 2 * p, b: 2 * q },
                provenance: Provenance::MinimalTable,
                components: vec![
                    OrbitComponent::partition(ones(m), RealForms::Zero, None),
                    OrbitComponent::partition(two_two_then_ones(m - 4), RealForms::MinPlus, None),
                    OrbitComponent::partition(three_then_ones(m - 3), RealForms::Dense, None),
                ],
            })
        }
        (MinimalType::DIII, Rank { n }) => {
            if n < 4 {
                return Err(LimitError::BadParams("DIII requires n >= 4"));
            }
            let m = 2 * n;
            Ok(LimitSet {
                group: GroupLabel::SpecialOrthogonalStar { n },
                provenance: Provenance::MinimalTable,
                components: vec![OrbitComponent::partition(
                    two_two_then_ones(m - 4),
                    RealForms::MinPlus,
                    None,
                )],
            })
        }
        (MinimalType::AIII | MinimalType::BI | MinimalType::DI, Rank { .. }) => {
            Err(LimitError::BadParams("this type expects a signature (p, q)"))
        }
        (MinimalType::CI | MinimalType::DIII, Signature { .. }) => {
            Err(LimitError::BadParams("this type expects a rank n"))
        }
    }
}

/// Complex dimension of the nilpotent orbit labelled by an admissible
/// partition, from the transpose:
///
/// * type A: `n^2 - sum(t_i^2)`;
/// * types B, D on `so(m)`: `(m^2 - m - sum(t_i^2) + #odd parts) / 2`;
/// * type C on `sp(m)`: `(m^2 + m - sum(t_i^2) - #odd parts) / 2`.
pub fn orbit_dimension(p: &Partition, ty: ClassicalType) -> Result<usize, LimitError> {
    if !p.is_admissible(ty) {
        return Err(LimitError::Inadmissible);
    }
    let m = ty.ambient_size();
    let t_square: usize = p.transpose().parts().iter().map(|&t| t * t).sum();
    let odd = p.parts().iter().filter(|&&d| d % 2 == 1).count();
    Ok(match ty.family {
        Family::A => m * m - t_square,
        Family::B | Family::D => (m * m - m - t_square + odd) / 2,
        Family::C => (m * m + m - t_square - odd) / 2,
    })
}
