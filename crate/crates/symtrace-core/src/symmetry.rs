//! Symmetrization of sign-symmetric integer matrices and the constructive
//! inverse direction: rescaling a radical symmetric matrix to an exact
//! rational matrix with the same spectrum.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::error::Error;
use crate::matrices::{
    rational_cycle_condition_violation, sign_symmetry_violation, AnyMatrix, IntMatrix,
    MatrixGraph, RadicalMatrix, RatMatrix,
};
use crate::numerics::{rational_sqrt, RadicalScalar, Rational, Sign};
use crate::spectra::{char_poly_int, char_poly_radical};

/// Witness that a radical matrix was rescaled vertex by vertex.
///
/// `ratios[v]` is the square of the conceptual diagonal scaling at vertex v;
/// all ratios are positive and every component root has ratio 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingCertificate {
    tree_edges: Vec<(usize, usize)>,
    ratios: Vec<Rational>,
}

impl ScalingCertificate {
    /// Spanning-forest edges used for the rescaling, as (parent, child).
    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    /// Per-vertex scaling ratios.
    pub fn ratios(&self) -> &[Rational] {
        &self.ratios
    }

    pub fn is_identity(&self) -> bool {
        self.ratios.iter().all(|r| r.is_one())
    }
}

/// Entrywise map a_ij -> sign(a_ij) * sqrt(a_ij * a_ji).
///
/// Requires sign symmetry so every radicand is nonnegative and the result is
/// symmetric. The diagonal is fixed up to sign: sign(a_ii) * sqrt(a_ii^2).
pub fn symmetrize(a: &IntMatrix) -> Result<RadicalMatrix, Error> {
    if let Some(witness) = sign_symmetry_violation(a) {
        return Err(Error::NotSignSymmetric { witness });
    }
    RadicalMatrix::from_fn(a.n(), |i, j| {
        RadicalScalar::new(Sign::of(a.get(i, j)), a.get(i, j) * a.get(j, i))
    })
}

/// Rescales T to an exact rational matrix B with the same characteristic
/// polynomial and the same support pattern.
///
/// Vertex ratios are fixed along a breadth-first spanning forest: the root of
/// each component gets ratio 1 and a tree edge (u, v) with radicand m gets
/// u_v = m * u_u, which turns the tree edge into 1 forward and m backward.
/// Every remaining entry becomes sign * sqrt(m_ij * u_i / u_j); the argument
/// is a perfect rational square exactly because the radicand product around
/// each fundamental cycle is a perfect square. Already-rational input is
/// returned unchanged with the identity scaling.
///
/// The diagonal is untouched by any diagonal rescaling, so it must be
/// rational on its own; a non-square diagonal radicand is an error.
pub fn rationalize(t: &RadicalMatrix) -> Result<(RatMatrix, ScalingCertificate), Error> {
    let n = t.n();
    if let Some(cycle) = rational_cycle_condition_violation(t) {
        return Err(Error::RationalCycleConditionViolated { cycle });
    }
    for i in 0..n {
        if t.get(i, i).as_integer().is_none() {
            return Err(Error::IrrationalDiagonal { index: i });
        }
    }

    let graph = MatrixGraph::of(&AnyMatrix::Radical(t.clone()));
    let forest = graph.bfs_forest();
    let mut tree_edges = Vec::new();
    let mut ratios = vec![Rational::one(); n];
    for &v in &forest.order {
        if let Some(u) = forest.parent[v] {
            tree_edges.push((u, v));
            ratios[v] = Rational::from(t.get(u, v).radicand().clone()) * &ratios[u];
        }
    }

    if t.is_integer_valued() {
        let b = RatMatrix::from_fn(n, |i, j| {
            Rational::from(t.get(i, j).as_integer().expect("integer-valued entry"))
        });
        return Ok((b, ScalingCertificate { tree_edges, ratios: vec![Rational::one(); n] }));
    }

    let b = RatMatrix::from_fn(n, |i, j| {
        let entry = t.get(i, j);
        if i == j {
            return Rational::from(entry.as_integer().expect("diagonal checked rational"));
        }
        let scaled = Rational::from(entry.radicand().clone()) * &ratios[i] / &ratios[j];
        let root = rational_sqrt(&scaled)
            .expect("cycle condition makes every rescaled radicand a square");
        match entry.sign() {
            Sign::Minus => -root,
            Sign::Zero => Rational::from(num_bigint::BigInt::ZERO),
            Sign::Plus => root,
        }
    });
    Ok((b, ScalingCertificate { tree_edges, ratios }))
}

/// Do A and T have identical characteristic polynomials?
pub fn verify_similarity(a: &IntMatrix, t: &RadicalMatrix) -> Result<bool, Error> {
    if a.n() != t.n() {
        return Err(Error::DimensionMismatch { left: a.n(), right: t.n() });
    }
    Ok(char_poly_int(a) == char_poly_radical(t)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    fn rad(sign: i64, radicand: i64) -> RadicalScalar {
        let s = match sign.signum() {
            -1 => Sign::Minus,
            0 => Sign::Zero,
            _ => Sign::Plus,
        };
        RadicalScalar::new(s, BigInt::from(radicand))
    }

    fn q(v: i64) -> Rational {
        Rational::from(BigInt::from(v))
    }

    #[test]
    fn symmetrize_worked_example() {
        let a = m(&[&[2, 16, 12], &[1, 6, 4], &[3, 16, 10]]);
        let expected = m(&[&[2, 4, 6], &[4, 6, 8], &[6, 8, 10]]).to_radical().unwrap();
        assert_eq!(symmetrize(&a).unwrap(), expected);
    }

    #[test]
    fn symmetrize_fixes_symmetric_input() {
        let s = m(&[&[1, -2], &[-2, 1]]);
        let t = symmetrize(&s).unwrap();
        assert_eq!(t.get(0, 1), &rad(-1, 4));
        assert_eq!(t.as_int_matrix(), Some(s));
    }

    #[test]
    fn symmetrize_requires_sign_symmetry() {
        let a = m(&[&[1, 1], &[0, 1]]);
        assert_eq!(symmetrize(&a), Err(Error::NotSignSymmetric { witness: (0, 1) }));
    }

    #[test]
    fn rationalize_fixes_rational_input() {
        let t = m(&[&[2, 4, 6], &[4, 6, 8], &[6, 8, 10]]).to_radical().unwrap();
        let (b, cert) = rationalize(&t).unwrap();
        assert_eq!(b, RatMatrix::from_int(&t.as_int_matrix().unwrap()));
        assert!(cert.is_identity());
    }

    #[test]
    fn rationalize_two_by_two() {
        let t = RadicalMatrix::from_rows(vec![
            vec![rad(1, 4), rad(1, 2)],
            vec![rad(1, 2), rad(1, 9)],
        ])
        .unwrap();
        let (b, cert) = rationalize(&t).unwrap();
        assert_eq!(b, RatMatrix::from_int(&m(&[&[2, 1], &[2, 3]])));
        assert_eq!(cert.ratios(), &[q(1), q(2)]);
        assert_eq!(cert.tree_edges(), &[(0, 1)]);
        assert_eq!(
            crate::spectra::char_poly(&b),
            crate::spectra::CharPoly::from_int_coeffs(vec![
                BigInt::from(4),
                BigInt::from(-5),
                BigInt::from(1),
            ])
            .unwrap()
        );
    }

    #[test]
    fn rationalize_rejects_unbalanced_cycles() {
        let t = RadicalMatrix::from_rows(vec![
            vec![rad(1, 4), rad(1, 2), rad(1, 2)],
            vec![rad(1, 2), rad(1, 4), rad(1, 2)],
            vec![rad(1, 2), rad(1, 2), rad(1, 4)],
        ])
        .unwrap();
        assert_eq!(
            rationalize(&t),
            Err(Error::RationalCycleConditionViolated { cycle: vec![0, 1, 2] })
        );
    }

    #[test]
    fn rationalize_rejects_irrational_diagonal() {
        let t = RadicalMatrix::from_rows(vec![
            vec![rad(1, 2), rad(1, 1)],
            vec![rad(1, 1), rad(1, 4)],
        ])
        .unwrap();
        assert_eq!(rationalize(&t), Err(Error::IrrationalDiagonal { index: 0 }));
    }

    #[test]
    fn rationalize_keeps_support_and_spectrum() {
        // Symmetrizable by construction: a = c * diag(1, 2, 3) with symmetric c.
        let a = m(&[&[2, 2, 3], &[1, 4, 3], &[1, 2, 6]]);
        let t = symmetrize(&a).unwrap();
        let (b, _) = rationalize(&t).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(b.get(i, j).is_zero(), t.get(i, j).is_zero());
            }
        }
        assert_eq!(crate::spectra::char_poly(&b), char_poly_int(&a));
    }

    #[test]
    fn similarity_verdicts() {
        let a = m(&[&[2, 16, 12], &[1, 6, 4], &[3, 16, 10]]);
        assert_eq!(verify_similarity(&a, &symmetrize(&a).unwrap()), Ok(true));

        let p3 = m(&[&[1, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(verify_similarity(&p3, &p3.to_radical().unwrap()), Ok(true));

        let id2 = IntMatrix::identity(2).to_radical().unwrap();
        assert_eq!(
            verify_similarity(&p3, &id2),
            Err(Error::DimensionMismatch { left: 3, right: 2 })
        );

        // Same order, different spectrum.
        let other = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).to_radical().unwrap();
        assert_eq!(verify_similarity(&p3, &other), Ok(false));
    }

    #[test]
    fn trace_powers_survive_the_roundtrip() {
        let corpus = [
            m(&[&[2, 16, 12], &[1, 6, 4], &[3, 16, 10]]),
            m(&[&[2, 2, 3], &[1, 4, 3], &[1, 2, 6]]),
            m(&[&[1, -1, 0], &[-1, 2, -1], &[0, -1, 2]]),
            m(&[&[5]]),
        ];
        for a in corpus {
            let (b, _) = rationalize(&symmetrize(&a).unwrap()).unwrap();
            for k in [1u64, 2, 4, 8] {
                assert_eq!(
                    Rational::from(a.pow(k).trace()),
                    b.pow(k).trace(),
                    "trace of power {k} drifted for {a:?}"
                );
            }
        }
    }

    #[test]
    fn diagonal_preserved_for_nonnegative_diagonals() {
        let a = m(&[&[3, 2], &[2, 7]]);
        let t = symmetrize(&a).unwrap();
        for i in 0..2 {
            assert_eq!(t.get(i, i).as_integer(), Some(a.get(i, i).clone()));
        }
    }
}
