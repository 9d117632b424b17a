//! Independent reference computations for tests: nothing here shares code
//! with the eigensolver.
#![allow(dead_code)]

use nilcert_core::{Complex64, ComplexMatrix};

fn minor(m: &[Vec<Complex64>], skip_row: usize, skip_col: usize) -> Vec<Vec<Complex64>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != skip_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != skip_col)
                .map(|(_, z)| *z)
                .collect()
        })
        .collect()
}

fn cofactor_det(m: &[Vec<Complex64>]) -> Complex64 {
    match m.len() {
        0 => Complex64::new(1.0, 0.0),
        1 => m[0][0],
        _ => {
            let mut det = Complex64::new(0.0, 0.0);
            for (j, a) in m[0].iter().enumerate() {
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                det += *a * sign * cofactor_det(&minor(m, 0, j));
            }
            det
        }
    }
}

/// Laplace expansion along the first row. Exponential; orders ≤ 6 only.
pub fn determinant(t: &ComplexMatrix) -> Complex64 {
    assert!(t.order() <= 6, "cofactor oracle is for tiny matrices");
    let rows: Vec<Vec<Complex64>> = t.rows().map(<[Complex64]>::to_vec).collect();
    cofactor_det(&rows)
}

fn naive_mul(n: usize, x: &[Complex64], y: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[i * n + j] += x[i * n + k] * y[k * n + j];
            }
        }
    }
    out
}

/// Coefficients `c[0..=n]` of `det(λI − T) = Σ c[k] λ^(n−k)` by
/// Faddeev–LeVerrier, with `c[0] = 1`.
pub fn char_poly(t: &ComplexMatrix) -> Vec<Complex64> {
    let n = t.order();
    let a = t.as_slice();
    let mut c = vec![Complex64::new(1.0, 0.0)];
    // m = A·M_{k-1} + c_{k-1} I, c_k = -tr(A M_k)/k
    let mut m = vec![Complex64::new(0.0, 0.0); n * n];
    for k in 1..=n {
        let mut next = naive_mul(n, a, &m);
        for i in 0..n {
            next[i * n + i] += c[k - 1];
        }
        let am = naive_mul(n, a, &next);
        let tr: Complex64 = (0..n).map(|i| am[i * n + i]).sum();
        c.push(-tr / k as f64);
        m = next;
    }
    c
}

pub fn eval_real(c: &[f64], x: f64) -> f64 {
    c.iter().fold(0.0, |acc, &a| acc * x + a)
}

/// Real roots of a Hermitian matrix's characteristic polynomial, located by
/// sign changes on a fine grid over `±(‖H‖_F + 1)` (which contains the
/// spectrum) and refined by bisection. Only simple roots are seen; a root of even
/// multiplicity produces no sign change.
pub fn hermitian_simple_roots(h: &ComplexMatrix) -> Vec<f64> {
    let c: Vec<f64> = char_poly(h).iter().map(|z| z.re).collect();
    let bound = h.frobenius_norm() + 1.0;
    let steps = 200_000;
    let dx = 2.0 * bound / steps as f64;
    let mut roots = Vec::new();
    let mut x0 = -bound;
    let mut f0 = eval_real(&c, x0);
    for s in 1..=steps {
        let x1 = -bound + s as f64 * dx;
        let f1 = eval_real(&c, x1);
        if f1 == 0.0 {
            roots.push(x1);
        } else if f0 != 0.0 && (f0 < 0.0) != (f1 < 0.0) {
            let (mut lo, mut hi, mut flo) = (x0, x1, f0);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                let fm = eval_real(&c, mid);
                if (fm < 0.0) == (flo < 0.0) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
    }
    roots
}
