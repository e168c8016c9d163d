//! Numerical verification of the combinatorial limit predictions.
//!
//! Everything here works on dense complex matrices at desk scale (n <= 12 or
//! so). Ranks come from singular values against a relative cutoff, Jordan
//! and signed types from the rank sequences of powers, and the scaling
//! curves from an explicit matrix exponential. All sampling is seeded.

pub mod minimal;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use thiserror::Error;

use orbit_limits_core::diagram::{EllipticSpectrum, Rat, SignedYoungDiagram};
use orbit_limits_core::limits::HyperbolicSpectrum;
use orbit_limits_core::partition::Partition;

pub type CMat = DMatrix<Complex64>;

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("matrix is not numerically nilpotent")]
    NotNilpotent,
    #[error("matrix has mass in the diagonal blocks, so it is not in the off-diagonal space")]
    NotInP,
    #[error("not a numerical sl2 triple: {0}")]
    NotTriple(&'static str),
    #[error("element does not centralize f, so it is outside the slice directions")]
    NotInSlice,
    #[error("rank sequence of powers is inconsistent at the current cutoff")]
    InconsistentRanks,
    #[error("matrix violates its context invariant: {0}")]
    BadContext(&'static str),
}

/// Thresholds for the rank and convergence decisions.
#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    /// Singular values below `rank_cutoff * scale^k` are treated as zero in
    /// the `k`-th power.
    pub rank_cutoff: f64,
    /// Residual bound for structural checks (triples, block form, traces).
    pub convergence_tol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            rank_cutoff: 1e-8,
            convergence_tol: 1e-6,
        }
    }
}

impl Tolerance {
    pub fn new(rank_cutoff: f64, convergence_tol: f64) -> Self {
        assert!(rank_cutoff > 0.0 && convergence_tol > 0.0);
        Self {
            rank_cutoff,
            convergence_tol,
        }
    }

    pub fn with_rank_cutoff(rank_cutoff: f64) -> Self {
        Self::new(rank_cutoff, Tolerance::default().convergence_tol)
    }
}

pub fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn rat_to_f64(x: Rat) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

pub fn singular_values(m: &CMat) -> Vec<f64> {
    m.clone().svd(false, false).singular_values.iter().copied().collect()
}

fn largest_singular_value(m: &CMat) -> f64 {
    singular_values(m).into_iter().fold(0.0, f64::max)
}

fn rank_above(m: &CMat, threshold: f64) -> usize {
    singular_values(m).into_iter().filter(|&s| s > threshold).count()
}

/// Ranks of `m^0, m^1, ...` until the rank reaches zero or `n` powers have
/// been taken, with the cutoff tightening geometrically with the power.
fn power_ranks(m: &CMat, tol: &Tolerance) -> Vec<usize> {
    let n = m.nrows();
    let scale = largest_singular_value(m);
    let mut ranks = vec![n];
    if scale == 0.0 {
        ranks.push(0);
        return ranks;
    }
    let mut power = CMat::identity(n, n);
    for k in 1..=n {
        power = &power * m;
        let rank = rank_above(&power, tol.rank_cutoff * scale.powi(k as i32));
        ranks.push(rank);
        if rank == 0 {
            break;
        }
    }
    ranks
}

fn partition_from_rank_deltas(ranks: &[usize]) -> Result<Partition, OracleError> {
    let deltas: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    if deltas.windows(2).any(|w| w[0] < w[1]) {
        return Err(OracleError::InconsistentRanks);
    }
    if deltas.is_empty() || deltas[0] == 0 {
        return Ok(Partition::empty());
    }
    Ok(Partition::new(deltas).expect("nonincreasing positive deltas").transpose())
}

/// Jordan type of a numerically nilpotent matrix: the conjugate partition is
/// the sequence `rank(m^{k-1}) - rank(m^k)`.
pub fn jordan_type(m: &CMat, tol: &Tolerance) -> Result<Partition, OracleError> {
    assert_eq!(m.nrows(), m.ncols(), "jordan_type expects a square matrix");
    let n = m.nrows();
    if n == 0 {
        return Ok(Partition::empty());
    }
    let ranks = power_ranks(m, tol);
    if *ranks.last().unwrap() != 0 {
        return Err(OracleError::NotNilpotent);
    }
    let p = partition_from_rank_deltas(&ranks)?;
    if p.n() == 0 {
        // numerically zero matrix
        return Ok(Partition::new(std::iter::repeat_n(1, n)).unwrap());
    }
    debug_assert_eq!(p.n(), n);
    Ok(p)
}

/// Signed type of a nilpotent element of the `(p,q)` off-diagonal block
/// space: per power `k`, the kernel dimensions inside each block give the
/// sign counts of column `k`, and the diagram is rebuilt from those.
pub fn signed_type(
    m: &CMat,
    p: usize,
    q: usize,
    tol: &Tolerance,
) -> Result<SignedYoungDiagram, OracleError> {
    let n = p + q;
    assert_eq!(m.nrows(), n, "matrix size must match the signature");
    assert_eq!(m.ncols(), n);
    let total = m.norm();
    let diag_mass = if p > 0 && q > 0 {
        m.view((0, 0), (p, p)).norm().max(m.view((p, p), (q, q)).norm())
    } else {
        // one block degenerates, so the whole matrix must vanish
        total
    };
    if diag_mass > tol.convergence_tol * (1.0 + total) {
        return Err(OracleError::NotInP);
    }

    let scale = largest_singular_value(m);
    if scale <= tol.rank_cutoff {
        let rows = std::iter::repeat_n((1usize, orbit_limits_core::diagram::Sign::Plus), p)
            .chain(std::iter::repeat_n((1, orbit_limits_core::diagram::Sign::Minus), q))
            .map(|(len, sign)| orbit_limits_core::diagram::Row::new(len, sign));
        return Ok(SignedYoungDiagram::new(rows).expect("unit rows"));
    }

    // dim(ker m^k ∩ V^+) and dim(ker m^k ∩ V^-) per power
    let mut kernel_plus = vec![0usize];
    let mut kernel_minus = vec![0usize];
    let mut power = CMat::identity(n, n);
    let mut nilpotent = false;
    for k in 1..=n {
        power = &power * m;
        let threshold = tol.rank_cutoff * scale.powi(k as i32);
        let rank_plus = rank_above(&power.columns(0, p).clone_owned(), threshold);
        let rank_minus = rank_above(&power.columns(p, q).clone_owned(), threshold);
        kernel_plus.push(p - rank_plus);
        kernel_minus.push(q - rank_minus);
        if rank_plus == 0 && rank_minus == 0 {
            nilpotent = true;
            break;
        }
    }
    if !nilpotent {
        return Err(OracleError::NotNilpotent);
    }
    let columns: Vec<(usize, usize)> = (1..kernel_plus.len())
        .map(|k| {
            (
                kernel_plus[k] - kernel_plus[k - 1],
                kernel_minus[k] - kernel_minus[k - 1],
            )
        })
        .collect();
    SignedYoungDiagram::from_column_sign_counts(&columns).ok_or(OracleError::InconsistentRanks)
}

/// Matrix exponential by scaling and squaring with a Taylor tail; accurate
/// to roughly 1e-13 relative at the norms used here.
pub fn expm(m: &CMat) -> CMat {
    let n = m.nrows();
    let norm = m.norm();
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let scaled = m.map(|x| x * real(0.5f64.powi(squarings)));
    let mut result = CMat::identity(n, n);
    let mut term = CMat::identity(n, n);
    for k in 1..=40 {
        term = (&term * &scaled).map(|x| x / real(k as f64));
        result += &term;
        if term.norm() <= 1e-18 * result.norm().max(1.0) {
            break;
        }
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

/// `exp(t h) x exp(-t h)`.
pub fn adjoint_conjugate(h: &CMat, t: f64, x: &CMat) -> CMat {
    let g = expm(&h.map(|v| v * real(t)));
    let g_inv = expm(&h.map(|v| v * real(-t)));
    &(&g * x) * &g_inv
}

fn commutator(a: &CMat, b: &CMat) -> CMat {
    a * b - b * a
}

/// Checks `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h` within tolerance.
pub fn check_sl2_triple(e: &CMat, h: &CMat, f: &CMat, tol: &Tolerance) -> Result<(), OracleError> {
    let bound = |a: &CMat, b: &CMat| tol.convergence_tol * (1.0 + a.norm() * b.norm());
    if (commutator(h, e) - e.map(|x| x * real(2.0))).norm() > bound(h, e) {
        return Err(OracleError::NotTriple("[h,e] != 2e"));
    }
    if (commutator(h, f) + f.map(|x| x * real(2.0))).norm() > bound(h, f) {
        return Err(OracleError::NotTriple("[h,f] != -2f"));
    }
    if (commutator(e, f) - h).norm() > bound(e, f) {
        return Err(OracleError::NotTriple("[e,f] != h"));
    }
    Ok(())
}

/// Slice scaling curve: conjugates `nu (e + z)` by `exp(t h)` with
/// `t = -ln(nu)/2`. For `z` centralizing `f` the distance to `e` decays
/// like `nu^(1 + j/2)` per weight `-j` component of `z`.
pub fn scaling_curve_slice(
    e: &CMat,
    h: &CMat,
    f: &CMat,
    z: &CMat,
    nu: f64,
    tol: &Tolerance,
) -> Result<CMat, OracleError> {
    assert!(nu > 0.0, "nu must be positive");
    check_sl2_triple(e, h, f, tol)?;
    if commutator(z, f).norm() > tol.convergence_tol * (1.0 + z.norm() * f.norm()) {
        return Err(OracleError::NotInSlice);
    }
    let t = -nu.ln() / 2.0;
    let x = (e + z).map(|v| v * real(nu));
    Ok(adjoint_conjugate(h, t, &x))
}

/// Elliptic scaling curve: conjugating `nu (e - f)` by `exp(t h)` with
/// `t = -ln(nu)/2` multiplies `e` by `1/nu` and `f` by `nu`, so the curve
/// point is `e - nu^2 f` exactly.
pub fn scaling_curve_elliptic(
    e: &CMat,
    h: &CMat,
    f: &CMat,
    nu: f64,
    tol: &Tolerance,
) -> Result<CMat, OracleError> {
    assert!(nu > 0.0, "nu must be positive");
    check_sl2_triple(e, h, f, tol)?;
    Ok(e - f.map(|v| v * real(nu * nu)))
}

/// Same curve point evaluated through the matrix exponential; agreement with
/// [`scaling_curve_elliptic`] cross-checks both routes at moderate `nu`.
pub fn scaling_curve_elliptic_conjugated(
    e: &CMat,
    h: &CMat,
    f: &CMat,
    nu: f64,
    tol: &Tolerance,
) -> Result<CMat, OracleError> {
    assert!(nu > 0.0, "nu must be positive");
    check_sl2_triple(e, h, f, tol)?;
    let t = -nu.ln() / 2.0;
    let x = (e - f).map(|v| v * real(nu));
    Ok(adjoint_conjugate(h, t, &x))
}

/// Group contexts the sampler understands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixContext {
    SpecialLinearReal { n: usize },
    SpecialUnitary { p: usize, q: usize },
}

impl MatrixContext {
    pub fn dim(self) -> usize {
        match self {
            MatrixContext::SpecialLinearReal { n } => n,
            MatrixContext::SpecialUnitary { p, q } => p + q,
        }
    }
}

/// A matrix tagged with the real group it is supposed to live in.
#[derive(Debug, Clone)]
pub struct DenseMatrix {
    pub entries: CMat,
    pub context: MatrixContext,
}

impl DenseMatrix {
    /// Validates the context invariants: realness and tracelessness for
    /// `sl(n,R)`; `x* J + J x = 0` and tracelessness for `su(p,q)`.
    pub fn new(entries: CMat, context: MatrixContext, tol: &Tolerance) -> Result<Self, OracleError> {
        let n = context.dim();
        if entries.nrows() != n || entries.ncols() != n {
            return Err(OracleError::BadContext("dimension mismatch"));
        }
        let scale = 1.0 + entries.norm();
        if entries.trace().norm() > tol.convergence_tol * scale {
            return Err(OracleError::BadContext("nonzero trace"));
        }
        match context {
            MatrixContext::SpecialLinearReal { .. } => {
                let imag_mass: f64 = entries.iter().map(|x| x.im * x.im).sum::<f64>().sqrt();
                if imag_mass > tol.convergence_tol * scale {
                    return Err(OracleError::BadContext("entries are not real"));
                }
            }
            MatrixContext::SpecialUnitary { p, q } => {
                let j = signature_form(p, q);
                let residual = entries.adjoint() * &j + &j * &entries;
                if residual.norm() > tol.convergence_tol * scale {
                    return Err(OracleError::BadContext("x*J + Jx != 0"));
                }
            }
        }
        Ok(Self { entries, context })
    }
}

/// `J = diag(I_p, -I_q)`.
pub fn signature_form(p: usize, q: usize) -> CMat {
    let n = p + q;
    CMat::from_fn(n, n, |i, j| {
        if i != j {
            real(0.0)
        } else if i < p {
            real(1.0)
        } else {
            real(-1.0)
        }
    })
}

fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    rng.sample(StandardNormal)
}

pub(crate) fn complex_gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(standard_normal(rng), standard_normal(rng)) / 2f64.sqrt()
}

/// Random element of the context's real Lie algebra, normalized to unit
/// Frobenius norm.
fn random_algebra_element(context: MatrixContext, rng: &mut ChaCha8Rng) -> CMat {
    let n = context.dim();
    let raw = match context {
        MatrixContext::SpecialLinearReal { .. } => {
            let mut m = CMat::from_fn(n, n, |_, _| real(standard_normal(rng)));
            let shift = m.trace() / real(n as f64);
            for i in 0..n {
                m[(i, i)] -= shift;
            }
            m
        }
        MatrixContext::SpecialUnitary { p, .. } => {
            // [[a, b], [b*, d]] with a, d skew-hermitian and zero total trace
            let mut m = CMat::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    let same_block = (i < p) == (j < p);
                    if !same_block {
                        if i < j {
                            let b = complex_gaussian(rng);
                            m[(i, j)] = b;
                            m[(j, i)] = b.conj();
                        }
                    } else if i < j {
                        let a = complex_gaussian(rng);
                        m[(i, j)] = a;
                        m[(j, i)] = -a.conj();
                    } else if i == j {
                        m[(i, i)] = Complex64::new(0.0, standard_normal(rng));
                    }
                }
            }
            let shift = m.trace() / real(n as f64);
            for i in 0..n {
                m[(i, i)] -= shift;
            }
            m
        }
    };
    let norm = raw.norm();
    if norm == 0.0 {
        raw
    } else {
        raw.map(|x| x / real(norm))
    }
}

/// Points `nu * Ad(exp(r_k))(x)` for random algebra directions `r_k` of
/// moderate norm. Deterministic in `(x, nu, count, seed)`.
pub fn sample_orbit_points(x: &DenseMatrix, nu: f64, count: usize, seed: u64) -> Vec<CMat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let scale = rng.random_range(0.2..1.5);
            let r = random_algebra_element(x.context, &mut rng).map(|v| v * real(scale));
            let g = expm(&r);
            let g_inv = expm(&r.map(|v| -v));
            (&(&g * &x.entries) * &g_inv).map(|v| v * real(nu))
        })
        .collect()
}

/// Generic element of the nilradical attached to a hyperbolic spectrum:
/// standard-normal entries exactly where the (sorted) diagonal eigenvalues
/// strictly decrease, zeros elsewhere.
pub fn generic_nilradical_element(h: &HyperbolicSpectrum, seed: u64) -> CMat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values = h.values();
    let n = values.len();
    CMat::from_fn(n, n, |i, j| {
        if values[i] > values[j] {
            real(standard_normal(&mut rng))
        } else {
            real(0.0)
        }
    })
}

/// Generic element of the off-diagonal part of the nilradical of an elliptic
/// spectrum: the block entry `u_k -> v_j` is free exactly when
/// `mu_j > lambda_k`, and `v_l -> u_j` when `lambda_j > mu_l`.
pub fn generic_up_element(spec: &EllipticSpectrum, seed: u64) -> CMat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (p, q) = spec.signature();
    let lambda = spec.lambda();
    let mu = spec.mu();
    let n = p + q;
    let mut m = CMat::zeros(n, n);
    // upper block c: v_l -> u_k
    for k in 0..p {
        for l in 0..q {
            if lambda[k] > mu[l] {
                m[(k, p + l)] = complex_gaussian(&mut rng);
            }
        }
    }
    // lower block d: u_k -> v_j
    for j in 0..q {
        for k in 0..p {
            if mu[j] > lambda[k] {
                m[(p + j, k)] = complex_gaussian(&mut rng);
            }
        }
    }
    m
}

/// Diagonal hyperbolic matrix of a spectrum (values in nonincreasing order).
pub fn diagonal_of_spectrum(h: &HyperbolicSpectrum) -> CMat {
    let n = h.n();
    let values = h.values();
    CMat::from_fn(n, n, |i, j| {
        if i == j {
            real(rat_to_f64(values[i]))
        } else {
            real(0.0)
        }
    })
}

/// Single Jordan block of size `d` (ones on the superdiagonal).
pub fn jordan_block(d: usize) -> CMat {
    CMat::from_fn(d, d, |i, j| if j == i + 1 { real(1.0) } else { real(0.0) })
}

/// Block diagonal sum of Jordan blocks given by a partition.
pub fn jordan_matrix(p: &Partition) -> CMat {
    let n = p.n();
    let mut m = CMat::zeros(n, n);
    let mut offset = 0;
    for &d in p.parts() {
        for i in 0..d.saturating_sub(1) {
            m[(offset + i, offset + i + 1)] = real(1.0);
        }
        offset += d;
    }
    m
}
