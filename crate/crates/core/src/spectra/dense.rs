//! Dense symmetric eigenvalues: Householder tridiagonalization followed by
//! QL iteration with implicit shifts. Deterministic, eigenvalues only.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpectraError {
    #[error("dimension {0} exceeds the dense-solver budget of 2048")]
    DimensionTooLarge(usize),
    #[error("QL iteration failed to converge (sweep limit hit)")]
    NonConvergence,
    #[error("algebraic connectivity is undefined for a disconnected graph")]
    Disconnected,
}

/// Reduces a symmetric matrix (row-major, destroyed) to tridiagonal form,
/// returning `(diagonal, off_diagonal)` with `off_diagonal[0] = 0`.
pub(crate) fn householder_tridiagonalize(a: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    let at = |a: &[f64], i: usize, j: usize| a[i * n + j];

    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..i).map(|k| at(a, i, k).abs()).sum();
            if scale == 0.0 {
                e[i] = at(a, i, l);
            } else {
                for k in 0..i {
                    a[i * n + k] /= scale;
                    h += at(a, i, k) * at(a, i, k);
                }
                let f = at(a, i, l);
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;
                let mut f_acc = 0.0;
                for j in 0..i {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += at(a, j, k) * at(a, i, k);
                    }
                    for k in j + 1..i {
                        g += at(a, k, j) * at(a, i, k);
                    }
                    e[j] = g / h;
                    f_acc += e[j] * at(a, i, j);
                }
                let hh = f_acc / (h + h);
                for j in 0..i {
                    let f = at(a, i, j);
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j * n + k] -= f * e[k] + g * at(a, i, k);
                    }
                }
            }
        } else {
            e[i] = at(a, i, l);
        }
        d[i] = h;
    }
    e[0] = 0.0;
    for i in 0..n {
        d[i] = at(a, i, i);
    }
    (d, e)
}

/// QL iteration with implicit shifts on a symmetric tridiagonal matrix.
/// `d` is the diagonal, `e` the off-diagonal with `e[0]` unused; on success
/// `d` holds the eigenvalues (unsorted).
pub(crate) fn ql_implicit(d: &mut [f64], e: &mut [f64]) -> Result<(), SpectraError> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            if iter == 50 {
                return Err(SpectraError::NonConvergence);
            }
            iter += 1;
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut i = m;
            let mut underflow = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}
