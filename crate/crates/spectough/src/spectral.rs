//! A_alpha matrices and closed-form spectral quantities.
//!
//! A_alpha(G) = alpha D + (1 - alpha) A interpolates between the adjacency matrix
//! (alpha = 0) and, up to scaling, the signless Laplacian (alpha = 1/2). All thresholds
//! in this crate are largest eigenvalues of such matrices or of their equitable
//! quotients.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::SymMatrix;
use crate::rational::Alpha;
use crate::scalar::Real;

/// The matrix alpha D(G) + (1 - alpha) A(G); requires 0 <= alpha <= 1.
pub fn a_alpha<T: Real>(g: &Graph, alpha: T) -> Result<SymMatrix<T>> {
    if !(T::zero()..=T::one()).contains(&alpha) {
        return Err(Error::AlphaRange(format!("{alpha}"), "[0, 1]"));
    }
    let one_minus = T::one() - alpha;
    Ok(SymMatrix::from_fn(g.n(), |i, j| {
        if i == j {
            alpha * T::from_int(g.degree(i) as i64)
        } else if g.has_edge(i, j) {
            one_minus
        } else {
            T::zero()
        }
    }))
}

/// A_alpha spectral radius via the Jacobi route at the scalar's default tolerance.
pub fn rho<T: Real>(g: &Graph, alpha: T) -> Result<T> {
    let m = a_alpha(g, alpha)?;
    Ok(crate::eigen::spectral_radius(&m, T::default_eigen_tol())?.radius)
}

/// Characteristic polynomial of the split-join quotient, evaluated at x.
///
/// For K_s joined onto a disjoint union of cliques with sizes parts[0..t], the quotient
/// spectrum is determined by
///
///   phi(x) = (x - a) prod_j (x - d_j) - s (1 - alpha)^2 sum_i n_i prod_{j != i} (x - d_j)
///
/// with a = alpha n + (1 - alpha) s - 1 and d_j = alpha s + n_j - 1. The two product
/// terms are assembled from exact integer combinations of alpha, so evaluation error is
/// a few ulps per factor.
pub fn split_join_charpoly<T: Real>(s: usize, parts: &[usize], alpha: Alpha, x: T) -> T {
    let n = s + parts.iter().sum::<usize>();
    let a: T = alpha.affine(n as i64 - s as i64, s as i64 - 1);
    let d: Vec<T> = parts
        .iter()
        .map(|&nj| alpha.affine(s as i64, nj as i64 - 1))
        .collect();
    let mut lead = x - a;
    for &dj in &d {
        lead *= x - dj;
    }
    let one_minus: T = alpha.one_minus().to_real();
    let weight = T::from_int(s as i64) * one_minus * one_minus;
    let mut corr = T::zero();
    for (i, &ni) in parts.iter().enumerate() {
        let mut prod = T::from_int(ni as i64);
        for (j, &dj) in d.iter().enumerate() {
            if j != i {
                prod *= x - dj;
            }
        }
        corr += prod;
    }
    lead - weight * corr
}

/// Upper bound rho_alpha(G) <= 2 m (1 - alpha) / (n - 1) + alpha n - 1, valid for
/// alpha in [1/2, 1] and n >= 2; equality forces K_n when alpha > 1/2 and G is connected.
pub fn edge_bound<T: Real>(n: usize, m: usize, alpha: T) -> Result<T> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "edge bound needs n >= 2, got {n}"
        )));
    }
    if !(T::from_f64_lossy(0.5)..=T::one()).contains(&alpha) {
        return Err(Error::AlphaRange(format!("{alpha}"), "[1/2, 1]"));
    }
    let two_m = T::from_int(2 * m as i64);
    let nn = T::from_int(n as i64);
    Ok(two_m * (T::one() - alpha) / (nn - T::one()) + alpha * nn - T::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::{power_iteration, spectral_radius, POWER_DEFAULT_MAX_ITER};

    #[test]
    fn a_alpha_interpolates_adjacency_and_degrees() {
        let g = Graph::star(4).unwrap();
        let a0 = a_alpha(&g, 0.0).unwrap();
        assert_eq!(a0.get(0, 1), 1.0);
        assert_eq!(a0.get(0, 0), 0.0);
        let a1 = a_alpha(&g, 1.0).unwrap();
        assert_eq!(a1.get(0, 0), 3.0);
        assert_eq!(a1.get(0, 1), 0.0);
        let ah = a_alpha(&g, 0.5).unwrap();
        assert_eq!(ah.get(0, 0), 1.5);
        assert_eq!(ah.get(0, 1), 0.5);
        assert!(a_alpha(&g, -0.1).is_err());
        assert!(a_alpha(&g, 1.1).is_err());
    }

    #[test]
    fn known_radii() {
        // rho_0(K_{1,3}) = sqrt(3); rho_{1/2}(K_{1,3}) = 2 (half the signless Laplacian
        // radius of a star); rho_alpha(K_n) = n - 1 for every alpha.
        let star = Graph::star(4).unwrap();
        assert!((rho(&star, 0.0).unwrap() - 3f64.sqrt()).abs() < 1e-10);
        assert!((rho(&star, 0.5f64).unwrap() - 2.0).abs() < 1e-10);
        for alpha in [0.0f64, 0.25, 0.5, 0.75, 1.0] {
            let r = rho(&Graph::complete(6).unwrap(), alpha).unwrap();
            assert!((r - 5.0).abs() < 1e-9, "alpha = {alpha}");
        }
    }

    #[test]
    fn charpoly_vanishes_at_the_radius() {
        // K_2 join (K_3 union 2 K_1): evaluate phi at the dense spectral radius.
        let s = 2;
        let parts = [3usize, 1, 1];
        let k2 = Graph::complete(2).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let k1 = Graph::new(1).unwrap();
        let mut rest = Graph::union(&k3, &k1).unwrap();
        rest = Graph::union(&rest, &k1).unwrap();
        let g = Graph::join(&k2, &rest).unwrap();
        for alpha in [Alpha::ZERO, Alpha::HALF, Alpha::new(3, 4).unwrap()] {
            let r = rho(&g, alpha.as_f64()).unwrap();
            let val: f64 = split_join_charpoly(s, &parts, alpha, r);
            assert!(val.abs() < 1e-7, "alpha = {alpha}, phi = {val}");
        }
    }

    #[test]
    fn charpoly_sign_structure() {
        // phi must be positive above the radius and negative just below it (simple root).
        let parts = [5usize, 1, 1, 1];
        let g = {
            let k2 = Graph::complete(2).unwrap();
            let mut rest = Graph::complete(5).unwrap();
            for _ in 0..3 {
                rest = Graph::union(&rest, &Graph::new(1).unwrap()).unwrap();
            }
            Graph::join(&k2, &rest).unwrap()
        };
        let r = rho(&g, 0.5).unwrap();
        let above: f64 = split_join_charpoly(2, &parts, Alpha::HALF, r + 0.1);
        let below: f64 = split_join_charpoly(2, &parts, Alpha::HALF, r - 0.1);
        assert!(above > 0.0);
        assert!(below < 0.0);
    }

    #[test]
    fn edge_bound_known_value_and_validity() {
        // n = 5, m = 4, alpha = 1/2: 2*4*(1/2)/4 + 5/2 - 1 = 2.5.
        assert_eq!(edge_bound::<f64>(5, 4, 0.5).unwrap(), 2.5);
        assert!(edge_bound::<f64>(5, 4, 0.25).is_err());
        assert!(edge_bound::<f64>(1, 0, 0.5).is_err());
        // The bound holds on a few concrete graphs.
        for (g, name) in [
            (Graph::star(6).unwrap(), "star"),
            (Graph::cycle(6).unwrap(), "cycle"),
            (Graph::complete(6).unwrap(), "clique"),
        ] {
            for alpha in [0.5, 0.6, 0.75, 0.9] {
                let r = rho(&g, alpha).unwrap();
                let b = edge_bound::<f64>(g.n(), g.edge_count(), alpha).unwrap();
                assert!(r <= b + 1e-10, "{name}, alpha = {alpha}");
            }
        }
        // Equality on cliques.
        let b = edge_bound::<f64>(6, 15, 0.75).unwrap();
        assert!((b - 5.0).abs() < 1e-12);
    }

    #[test]
    fn dense_routes_agree_on_a_alpha() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (6, 4)])
            .unwrap();
        for alpha in [0.0f64, 0.3, 0.5, 0.9] {
            let m = a_alpha(&g, alpha).unwrap();
            let jac = spectral_radius(&m, 1e-12).unwrap();
            let pow = power_iteration(&m, 1e-12, POWER_DEFAULT_MAX_ITER).unwrap();
            assert!(
                (jac.radius - pow.radius).abs() < 1e-9,
                "alpha = {alpha}: {} vs {}",
                jac.radius,
                pow.radius
            );
        }
    }
}
