//! Small dense Hermitian eigensolver used for Schatten norms.

use num_complex::Complex64;

/// Eigenvalues of a real symmetric matrix (row-major, n×n) by cyclic
/// Jacobi rotations. Ascending order.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Vec<f64> {
    assert_eq!(a.len(), n * n);
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![a[0]];
    }
    let idx = |i: usize, j: usize| i * n + j;
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += a[idx(i, j)] * a[idx(i, j)];
            }
        }
        s
    };
    let scale: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt().max(1e-300);
    for _sweep in 0..64 {
        if off(&a).sqrt() <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[idx(p, q)];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let app = a[idx(p, p)];
                let aqq = a[idx(q, q)];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - s * akq;
                    a[idx(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[idx(p, k)];
                    let aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - s * aqk;
                    a[idx(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| a[idx(i, i)]).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eigs
}

/// Singular values of a complex n×n matrix (row-major), descending.
///
/// Computed from the Hermitian eigenproblem of `A*A` through the real
/// symmetric embedding `[[Re, −Im], [Im, Re]]`, whose spectrum doubles
/// each eigenvalue. Eigenvalues below a `1e−13` relative floor are
/// clamped to zero before the square root.
pub fn singular_values(a: &[Complex64], n: usize) -> Vec<f64> {
    assert_eq!(a.len(), n * n);
    if n == 0 {
        return Vec::new();
    }
    // h = a† a (Hermitian PSD)
    let mut h = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            let mut s = Complex64::new(0.0, 0.0);
            for k in 0..n {
                s += a[k * n + i].conj() * a[k * n + j];
            }
            h[i * n + j] = s;
        }
    }
    let m = 2 * n;
    let mut e = vec![0.0; m * m];
    for i in 0..n {
        for j in 0..n {
            let z = h[i * n + j];
            e[i * m + j] = z.re;
            e[i * m + (j + n)] = -z.im;
            e[(i + n) * m + j] = z.im;
            e[(i + n) * m + (j + n)] = z.re;
        }
    }
    let mut eigs = symmetric_eigenvalues(e, m);
    eigs.reverse(); // descending; pairs are adjacent
    let top = eigs.first().copied().unwrap_or(0.0).max(0.0);
    let floor = 1e-13 * top;
    eigs.iter()
        .step_by(2)
        .map(|&l| if l <= floor { 0.0 } else { l.sqrt() })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenvalues_of_diag() {
        let a = vec![3.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 2.0];
        let e = symmetric_eigenvalues(a, 3);
        assert!((e[0] + 1.0).abs() < 1e-12);
        assert!((e[1] - 2.0).abs() < 1e-12);
        assert!((e[2] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn singular_values_of_diagonal_complex() {
        let z = Complex64::new(0.0, -4.0); // |z| = 4
        let a = vec![
            Complex64::new(3.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            z,
        ];
        let s = singular_values(&a, 2);
        assert!((s[0] - 4.0).abs() < 1e-10);
        assert!((s[1] - 3.0).abs() < 1e-10);
    }
}
