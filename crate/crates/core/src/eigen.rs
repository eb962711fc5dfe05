//! Dense symmetric eigenvalues: Householder reduction to tridiagonal
//! form followed by the implicit-shift QL iteration. Eigenvalues only, no
//! vector accumulation, double precision throughout.

// index-form loops mirror the reference formulation of the reduction
#![allow(clippy::needless_range_loop)]

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::float;

const MAX_QL_SWEEPS: usize = 60;

/// Eigenvalues of a symmetric matrix, unordered. `a` is consumed as
/// scratch. Rows must all have length `a.len()`; symmetry is the
/// caller's responsibility.
pub fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>) -> Result<Vec<f64>> {
    let n = a.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    debug_assert!(a.iter().all(|row| row.len() == n));
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(&mut a, &mut e);
    for (i, di) in d.iter_mut().enumerate() {
        *di = a[i][i];
    }
    ql_implicit(&mut d, &mut e)?;
    Ok(d)
}

/// Householder similarity transforms reducing `a` in place; on return the
/// diagonal of `a` is the tridiagonal diagonal and `e[1..]` holds the
/// subdiagonal.
fn tridiagonalize(a: &mut [Vec<f64>], e: &mut [f64]) {
    let n = a.len();
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = a[i][..=l].iter().map(|&x| float::abs(x)).sum();
            if scale == 0.0 {
                e[i] = a[i][l];
            } else {
                for k in 0..=l {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                let f = a[i][l];
                let g = if f >= 0.0 { -float::sqrt(h) } else { float::sqrt(h) };
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                let mut f_acc = 0.0;
                for j in 0..=l {
                    let mut g_acc = 0.0;
                    for k in 0..=j {
                        g_acc += a[j][k] * a[i][k];
                    }
                    for k in (j + 1)..=l {
                        g_acc += a[k][j] * a[i][k];
                    }
                    e[j] = g_acc / h;
                    f_acc += e[j] * a[i][j];
                }
                let hh = f_acc / (h + h);
                for j in 0..=l {
                    let f = a[i][j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j][k] -= f * e[k] + g * a[i][k];
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
    }
    e[0] = 0.0;
}

/// QL iteration with implicit shifts on a tridiagonal matrix given by
/// diagonal `d` and subdiagonal `e[1..]`; eigenvalues land in `d`.
fn ql_implicit(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = float::abs(d[m]) + float::abs(d[m + 1]);
                if float::abs(e[m]) <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_QL_SWEEPS {
                return Err(Error::NumericalFailure(
                    "QL iteration did not converge",
                ));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = float::hypot(g, 1.0);
            let sign_r = if g >= 0.0 { float::abs(r) } else { -float::abs(r) };
            g = d[m] - d[l] + e[l] / (g + sign_r);
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut i = m;
            let mut underflow = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = float::hypot(f, g);
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
