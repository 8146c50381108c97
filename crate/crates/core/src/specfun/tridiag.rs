//! Eigenvalues of symmetric tridiagonal (Jacobi) matrices by implicit QL.
//!
//! Only the first component of each eigenvector is tracked: that is all the
//! Golub–Welsch construction needs for quadrature weights, and it keeps the
//! cost at `O(k²)`.

/// Eigen-decomposition of a Jacobi matrix, ascending eigenvalues.
#[derive(Debug, Clone)]
pub struct JacobiEigen {
    pub values: Vec<f64>,
    /// Squared first components of the normalised eigenvectors.
    pub first_sq: Vec<f64>,
}

/// Diagonalises the symmetric tridiagonal matrix with diagonal `diag` and
/// off-diagonal `off` (`off.len() == diag.len() - 1`, or both empty).
pub fn jacobi_eigen(diag: &[f64], off: &[f64]) -> JacobiEigen {
    let n = diag.len();
    assert!(n == 0 || off.len() + 1 == n, "off-diagonal length must be n - 1");
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);
    let mut z = vec![0.0; n];
    if n > 0 {
        z[0] = 1.0;
    }

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter < 200, "implicit QL failed to converge");

            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    JacobiEigen {
        values: idx.iter().map(|&i| d[i]).collect(),
        first_sq: idx.iter().map(|&i| z[i] * z[i]).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        // [[2, 1], [1, 2]] has eigenvalues 1 and 3 with first components 1/2
        let eig = jacobi_eigen(&[2.0, 2.0], &[1.0]);
        assert!((eig.values[0] - 1.0).abs() < 1e-15);
        assert!((eig.values[1] - 3.0).abs() < 1e-15);
        for w in &eig.first_sq {
            assert!((w - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn first_components_are_a_partition_of_unity() {
        let n = 40;
        let diag: Vec<f64> = (0..n).map(|j| (j as f64).sin() * 3.0).collect();
        let off: Vec<f64> = (1..n).map(|j| 1.0 + (j as f64).cos().abs()).collect();
        let eig = jacobi_eigen(&diag, &off);
        let total: f64 = eig.first_sq.iter().sum();
        assert!((total - 1.0).abs() < 1e-13);
        let trace: f64 = diag.iter().sum();
        let eig_sum: f64 = eig.values.iter().sum();
        assert!((trace - eig_sum).abs() < 1e-11);
        assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn empty_and_scalar() {
        assert!(jacobi_eigen(&[], &[]).values.is_empty());
        let eig = jacobi_eigen(&[4.5], &[]);
        assert_eq!(eig.values, vec![4.5]);
        assert_eq!(eig.first_sq, vec![1.0]);
    }
}
