//! Dense symmetric eigensolvers: cyclic Jacobi and a shifted Perron power iteration.
//!
//! The two routes are deliberately independent implementations. Jacobi diagonalizes the
//! whole matrix; the power iteration only chases the Perron eigenpair of a nonnegative
//! irreducible matrix. Agreement between them is one of the acceptance gates, so neither
//! may delegate to the other.

use crate::error::{Error, Result};
use crate::matrix::SymMatrix;
use crate::scalar::Real;

/// Sweep cap for the Jacobi solver; convergence is quadratic once rotations settle, so
/// hitting this means something is badly wrong with the input.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Default iteration cap for the power method.
pub const POWER_DEFAULT_MAX_ITER: usize = 100_000;

/// A spectral radius certificate: the eigenvalue, a unit eigenvector, the residual
/// max-norm of (M v - radius v), and how many sweeps or iterations were spent.
#[derive(Clone, Debug)]
pub struct SpectralResult<T> {
    pub radius: T,
    pub vector: Vec<T>,
    pub residual: T,
    pub iterations: usize,
}

// ===========================================================================
// Jacobi
// ===========================================================================

/// Largest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
///
/// Runs full sweeps until the off-diagonal absolute sum drops below `tol`, then reports
/// the largest diagonal entry and its accumulated eigenvector. This computes the largest
/// eigenvalue, which for the nonnegative matrices used here equals the spectral radius.
pub fn spectral_radius<T: Real>(m: &SymMatrix<T>, tol: T) -> Result<SpectralResult<T>> {
    let n = m.n();
    if n == 0 {
        return Err(Error::VertexCount(0));
    }
    let mut a = vec![T::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = m.get(i, j);
        }
    }
    let mut v = vec![T::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = T::one();
    }
    let mut sweeps = 0;
    loop {
        let off: T = (0..n)
            .map(|p| (p + 1..n).map(|q| a[p * n + q].abs()).sum())
            .sum();
        if off <= tol {
            break;
        }
        if sweeps >= JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence(sweeps));
        }
        sweeps += 1;
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == T::zero() {
                    continue;
                }
                // Rotation angle from the standard two-by-two reduction.
                let theta = (a[q * n + q] - a[p * n + p]) / (T::from_int(2) * apq);
                let t = {
                    let s = if theta < T::zero() {
                        -T::one()
                    } else {
                        T::one()
                    };
                    s / (theta.abs() + (T::one() + theta * theta).sqrt())
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                let tau = s / (T::one() + c);
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = T::zero();
                a[q * n + p] = T::zero();
                for r in 0..n {
                    if r != p && r != q {
                        let arp = a[r * n + p];
                        let arq = a[r * n + q];
                        a[r * n + p] = arp - s * (arq + tau * arp);
                        a[r * n + q] = arq + s * (arp - tau * arq);
                        a[p * n + r] = a[r * n + p];
                        a[q * n + r] = a[r * n + q];
                    }
                }
                for r in 0..n {
                    let vrp = v[r * n + p];
                    let vrq = v[r * n + q];
                    v[r * n + p] = vrp - s * (vrq + tau * vrp);
                    v[r * n + q] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }
    let mut best = 0;
    for i in 1..n {
        if a[i * n + i] > a[best * n + best] {
            best = i;
        }
    }
    let radius = a[best * n + best];
    let mut vector: Vec<T> = (0..n).map(|r| v[r * n + best]).collect();
    normalize(&mut vector);
    let residual = residual_inf(m, &vector, radius);
    Ok(SpectralResult {
        radius,
        vector,
        residual,
        iterations: sweeps,
    })
}

// ===========================================================================
// Power iteration
// ===========================================================================

/// Perron eigenpair of a nonnegative irreducible symmetric matrix by power iteration on
/// M + I (the shift turns periodic non-convergence, e.g. bipartite adjacency, into clean
/// geometric convergence and never moves the Perron vector).
pub fn power_iteration<T: Real>(
    m: &SymMatrix<T>,
    tol: T,
    max_iter: usize,
) -> Result<SpectralResult<T>> {
    let n = m.n();
    if n == 0 {
        return Err(Error::VertexCount(0));
    }
    for i in 0..n {
        for j in 0..n {
            if m.get(i, j) < T::zero() {
                return Err(Error::NegativeEntry);
            }
        }
    }
    if n > 1 && !m.support_is_connected() {
        return Err(Error::Reducible);
    }
    let inv_sqrt_n = T::one() / T::from_int(n as i64).sqrt();
    let mut x = vec![inv_sqrt_n; n];
    let mut y = vec![T::zero(); n];
    for iter in 1..=max_iter {
        m.mul_vec(&x, &mut y);
        for i in 0..n {
            y[i] += x[i];
        }
        // x is unit, so the Rayleigh quotient of the shifted matrix is just x . y.
        let lambda: T = x.iter().zip(&y).map(|(&a, &b)| a * b).sum();
        let mut res = T::zero();
        for i in 0..n {
            let r = (y[i] - lambda * x[i]).abs();
            if r > res {
                res = r;
            }
        }
        if res <= tol {
            return Ok(SpectralResult {
                radius: lambda - T::one(),
                vector: x,
                residual: res,
                iterations: iter,
            });
        }
        let norm: T = y.iter().map(|&a| a * a).sum::<T>().sqrt();
        for i in 0..n {
            x[i] = y[i] / norm;
        }
    }
    Err(Error::NoConvergence(max_iter))
}

fn normalize<T: Real>(v: &mut [T]) {
    let norm: T = v.iter().map(|&a| a * a).sum::<T>().sqrt();
    if norm > T::zero() {
        for a in v.iter_mut() {
            *a /= norm;
        }
    }
    // Fix the overall sign so results are reproducible: largest-magnitude entry positive.
    let mut lead = 0;
    for i in 1..v.len() {
        if v[i].abs() > v[lead].abs() {
            lead = i;
        }
    }
    if !v.is_empty() && v[lead] < T::zero() {
        for a in v.iter_mut() {
            *a = -*a;
        }
    }
}

fn residual_inf<T: Real>(m: &SymMatrix<T>, v: &[T], lambda: T) -> T {
    let mut y = vec![T::zero(); v.len()];
    m.mul_vec(v, &mut y);
    let mut res = T::zero();
    for i in 0..v.len() {
        let r = (y[i] - lambda * v[i]).abs();
        if r > res {
            res = r;
        }
    }
    res
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn adjacency(g: &Graph) -> SymMatrix<f64> {
        SymMatrix::from_fn(g.n(), |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 })
    }

    #[test]
    fn clique_radius_is_n_minus_one() {
        for n in 2..=8 {
            let m = adjacency(&Graph::complete(n).unwrap());
            let jac = spectral_radius(&m, 1e-10).unwrap();
            assert!((jac.radius - (n as f64 - 1.0)).abs() < 1e-9, "n = {n}");
            assert!(jac.residual < 1e-8);
            let pow = power_iteration(&m, 1e-10, POWER_DEFAULT_MAX_ITER).unwrap();
            assert!((pow.radius - (n as f64 - 1.0)).abs() < 1e-9);
        }
    }

    #[test]
    fn star_and_path_known_radii() {
        // rho(K_{1,3}) = sqrt(3); rho(P4) = golden ratio.
        let star = adjacency(&Graph::star(4).unwrap());
        let r = spectral_radius(&star, 1e-10).unwrap().radius;
        assert!((r - 3f64.sqrt()).abs() < 1e-10);
        let p4 = adjacency(&Graph::path(4).unwrap());
        let r = spectral_radius(&p4, 1e-10).unwrap().radius;
        assert!((r - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-10);
    }

    #[test]
    fn bipartite_adjacency_converges_with_shift() {
        // Unshifted power iteration oscillates on K_{3,3}; the +1 shift must not.
        let k3 = Graph::new(3).unwrap();
        let g = Graph::join(&k3, &k3).unwrap();
        let m = adjacency(&g);
        let pow = power_iteration(&m, 1e-12, POWER_DEFAULT_MAX_ITER).unwrap();
        assert!((pow.radius - 3.0).abs() < 1e-10);
        let jac = spectral_radius(&m, 1e-10).unwrap();
        assert!((jac.radius - pow.radius).abs() < 1e-9);
    }

    #[test]
    fn power_iteration_rejects_bad_inputs() {
        let mut m: SymMatrix<f64> = SymMatrix::zeros(2);
        m.set(0, 1, -1.0);
        assert_eq!(
            power_iteration(&m, 1e-10, 100).unwrap_err(),
            Error::NegativeEntry
        );
        let k3 = Graph::complete(3).unwrap();
        let disconnected = Graph::union(&k3, &k3).unwrap();
        assert_eq!(
            power_iteration(&adjacency(&disconnected), 1e-10, 100).unwrap_err(),
            Error::Reducible
        );
    }

    #[test]
    fn eigenvector_is_certified_by_residual() {
        let g = Graph::cycle(7).unwrap();
        let m = adjacency(&g);
        let r = spectral_radius(&m, 1e-12).unwrap();
        assert!((r.radius - 2.0).abs() < 1e-10);
        assert!(r.residual < 1e-9);
        // Unit norm and positive leading entry.
        let norm: f64 = r.vector.iter().map(|a| a * a).sum::<f64>().sqrt();
        assert!((norm - 1.0).abs() < 1e-12);
        // C7 is vertex-transitive: Perron vector is constant.
        for a in &r.vector {
            assert!((a - r.vector[0]).abs() < 1e-8);
        }
    }

    #[test]
    fn routes_agree_on_an_irregular_graph() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (1, 4)])
            .unwrap();
        let m = adjacency(&g);
        let jac = spectral_radius(&m, 1e-12).unwrap();
        let pow = power_iteration(&m, 1e-12, POWER_DEFAULT_MAX_ITER).unwrap();
        assert!((jac.radius - pow.radius).abs() < 1e-10);
    }
}
