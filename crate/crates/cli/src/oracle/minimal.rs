//! Matrix realizations of the first-coweight nilradical slice for the
//! minimal-orbit table.
//!
//! For each table row the space `u ∩ p` is a short list of root vectors in
//! the split-form realization of `so(m)` or `sp(2n)` (type AIII goes through
//! the `su(p,q)` sampler). Sampling a random complex combination of those
//! vectors gives a generic element whose Jordan type the table predicts.
//!
//! Basis conventions, 0-indexed: for `so(2n)` and `sp(2n)` the coordinates
//! are `(u_1..u_n, w_1..w_n)` pairing `u_i` with `w_i`; `so(2n+1)` appends
//! one extra null coordinate.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use orbit_limits_core::diagram::{EllipticSpectrum, Rat};
use orbit_limits_core::limits::{minimal_limit, LimitError, MinimalParams, MinimalType, OrbitComponent, RealForms};
use orbit_limits_core::partition::Partition;

use super::{complex_gaussian, generic_up_element, real, CMat};

fn unit(n: usize, i: usize, j: usize) -> CMat {
    let mut m = CMat::zeros(n, n);
    m[(i, j)] = real(1.0);
    m
}

/// Root vector for `e_i - e_j` in `so` or `sp` split form (`i != j`,
/// 1-indexed).
fn root_minus(size: usize, n: usize, i: usize, j: usize) -> CMat {
    unit(size, i - 1, j - 1) - unit(size, n + j - 1, n + i - 1)
}

/// Root vector for `e_i + e_j` in `so` split form (skew upper block).
fn root_plus_skew(size: usize, n: usize, i: usize, j: usize) -> CMat {
    unit(size, i - 1, n + j - 1) - unit(size, j - 1, n + i - 1)
}

/// Root vector for `e_i + e_j` in `sp` split form (symmetric upper block).
fn root_plus_sym(size: usize, n: usize, i: usize, j: usize) -> CMat {
    unit(size, i - 1, n + j - 1) + unit(size, j - 1, n + i - 1)
}

/// Root vector for the short root `e_i` in `so(2n+1)`.
fn root_short(n: usize, i: usize) -> CMat {
    let size = 2 * n + 1;
    unit(size, i - 1, 2 * n) - unit(size, 2 * n, n + i - 1)
}

/// Root vector for the long root `2 e_i` in `sp(2n)`.
fn root_long(n: usize, i: usize) -> CMat {
    unit(2 * n, i - 1, n + i - 1)
}

/// Gram matrix of the orthogonal form in split coordinates.
pub fn orthogonal_gram(n: usize, odd: bool) -> CMat {
    let size = if odd { 2 * n + 1 } else { 2 * n };
    let mut s = CMat::zeros(size, size);
    for i in 0..n {
        s[(i, n + i)] = real(1.0);
        s[(n + i, i)] = real(1.0);
    }
    if odd {
        s[(2 * n, 2 * n)] = real(1.0);
    }
    s
}

/// Gram matrix of the symplectic form in split coordinates.
pub fn symplectic_gram(n: usize) -> CMat {
    let size = 2 * n;
    let mut j = CMat::zeros(size, size);
    for i in 0..n {
        j[(i, n + i)] = real(1.0);
        j[(n + i, i)] = real(-1.0);
    }
    j
}

/// Residual of the defining equation `m^T S + S m = 0` of the relevant
/// algebra; zero for genuine elements.
pub fn algebra_residual(ty: MinimalType, params: MinimalParams, m: &CMat) -> f64 {
    let gram: Option<CMat> = match (ty, params) {
        (MinimalType::BI, MinimalParams::Signature { p, q }) => {
            Some(orthogonal_gram(p + q, true))
        }
        (MinimalType::DI, MinimalParams::Signature { p, q }) => {
            Some(orthogonal_gram(p + q, false))
        }
        (MinimalType::DIII, MinimalParams::Rank { n }) => Some(orthogonal_gram(n, false)),
        (MinimalType::CI, MinimalParams::Rank { n }) => Some(symplectic_gram(n)),
        _ => None,
    };
    match gram {
        Some(s) => (m.transpose() * &s + &s * m).norm(),
        // type AIII: tracelessness is the only equation
        None => m.trace().norm(),
    }
}

/// Random generic element of `u ∩ p` for a minimal-table row.
pub fn sample_generic_up(
    ty: MinimalType,
    params: MinimalParams,
    seed: u64,
) -> Result<CMat, LimitError> {
    // reuse the table's own parameter validation
    minimal_limit(ty, params)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeff = |m: CMat| -> CMat {
        let c = complex_gaussian(&mut rng);
        m.map(|v| v * c)
    };
    Ok(match (ty, params) {
        (MinimalType::AIII, MinimalParams::Signature { p, q }) => {
            let n = (p + q) as i64;
            let mut lambda = vec![Rat::new(n - 1, n)];
            lambda.extend(std::iter::repeat_n(Rat::new(-1, n), p - 1));
            let mu = vec![Rat::new(-1, n); q];
            let spec = EllipticSpectrum::new(lambda, mu).expect("coweight spectrum sums to zero");
            generic_up_element(&spec, seed)
        }
        (MinimalType::BI, MinimalParams::Signature { p, q }) => {
            let n = p + q;
            let size = 2 * n + 1;
            let mut z = CMat::zeros(size, size);
            for j in p + 1..=n {
                z += coeff(root_minus(size, n, 1, j));
                z += coeff(root_plus_skew(size, n, 1, j));
            }
            z += coeff(root_short(n, 1));
            z
        }
        (MinimalType::DI, MinimalParams::Signature { p, q }) => {
            let n = p + q;
            let size = 2 * n;
            let mut z = CMat::zeros(size, size);
            for j in p + 1..=n {
                z += coeff(root_minus(size, n, 1, j));
                z += coeff(root_plus_skew(size, n, 1, j));
            }
            z
        }
        (MinimalType::CI, MinimalParams::Rank { n }) => {
            let size = 2 * n;
            let mut z = coeff(root_long(n, 1));
            for j in 2..=n {
                z += coeff(root_plus_sym(size, n, 1, j));
            }
            z
        }
        (MinimalType::DIII, MinimalParams::Rank { n }) => {
            let size = 2 * n;
            let mut z = CMat::zeros(size, size);
            for j in 2..=n {
                z += coeff(root_plus_skew(size, n, 1, j));
            }
            z
        }
        _ => unreachable!("parameter shape already validated"),
    })
}

/// Jordan partition of the dense orbit of `u ∩ p` predicted by the table.
pub fn expected_dense_partition(
    ty: MinimalType,
    params: MinimalParams,
) -> Result<Partition, LimitError> {
    let limit = minimal_limit(ty, params)?;
    let dense = limit
        .components
        .iter()
        .find(|c| matches!(c, OrbitComponent::Partition(pc) if pc.realforms == RealForms::Dense))
        .unwrap_or_else(|| limit.components.last().expect("components are nonempty"));
    Ok(dense.underlying_partition())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{jordan_type, Tolerance};

    fn partition(parts: &[usize]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    #[test]
    fn samples_live_in_their_algebras() {
        let cases = [
            (MinimalType::AIII, MinimalParams::Signature { p: 1, q: 2 }),
            (MinimalType::BI, MinimalParams::Signature { p: 1, q: 1 }),
            (MinimalType::CI, MinimalParams::Rank { n: 2 }),
            (MinimalType::DI, MinimalParams::Signature { p: 1, q: 3 }),
            (MinimalType::DIII, MinimalParams::Rank { n: 4 }),
        ];
        for (ty, params) in cases {
            let z = sample_generic_up(ty, params, 17).unwrap();
            assert!(
                algebra_residual(ty, params, &z) < 1e-12,
                "{ty:?} sample violates the defining equation"
            );
        }
    }

    #[test]
    fn generic_jordan_types_match_the_table() {
        let tol = Tolerance::default();
        let cases: [(_, _, &[usize]); 5] = [
            (
                MinimalType::AIII,
                MinimalParams::Signature { p: 1, q: 2 },
                &[2, 1],
            ),
            (
                MinimalType::BI,
                MinimalParams::Signature { p: 1, q: 1 },
                &[3, 1, 1],
            ),
            (MinimalType::CI, MinimalParams::Rank { n: 2 }, &[2, 2]),
            (
                MinimalType::DI,
                MinimalParams::Signature { p: 1, q: 3 },
                &[3, 1, 1, 1, 1, 1],
            ),
            (
                MinimalType::DIII,
                MinimalParams::Rank { n: 4 },
                &[2, 2, 1, 1, 1, 1],
            ),
        ];
        for (ty, params, expected) in cases {
            let z = sample_generic_up(ty, params, 23).unwrap();
            let measured = jordan_type(&z, &tol).unwrap();
            assert_eq!(measured, partition(expected), "{ty:?}");
            assert_eq!(
                expected_dense_partition(ty, params).unwrap(),
                partition(expected),
                "{ty:?} table disagrees"
            );
        }
    }

    #[test]
    fn sampler_rejects_bad_params() {
        assert!(sample_generic_up(MinimalType::DIII, MinimalParams::Rank { n: 2 }, 0).is_err());
        assert!(sample_generic_up(
            MinimalType::AIII,
            MinimalParams::Signature { p: 2, q: 1 },
            0
        )
        .is_err());
    }
}
