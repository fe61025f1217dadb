//! Small dense exact linear algebra over the rationals.

use num_traits::Zero;

use crate::scalar::{one, zero, Scalar};

/// Row-reduces `rows` (each of length `cols + 1`, last column the right-hand
/// side) and returns a solution if the system is consistent, together with
/// the dimension of the solution space.
pub fn solve(mut rows: Vec<Vec<Scalar>>, cols: usize) -> Option<(Vec<Scalar>, usize)> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = one() / &rows[r][c];
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in c..=cols {
                    let d = &f * &rows[r][k];
                    rows[i][k] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    if rows[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i][cols].clone();
    }
    Some((x, cols - pivots.len()))
}

/// Inverse of a square matrix given row-major, or `None` if singular.
pub fn invert(m: &[Scalar], n: usize) -> Option<Vec<Scalar>> {
    let mut a: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut row: Vec<Scalar> = m[i * n..(i + 1) * n].to_vec();
            row.extend((0..n).map(|j| if i == j { one() } else { zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let inv = one() / &a[c][c];
        for v in a[c].iter_mut() {
            *v *= &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..2 * n {
                    let d = &f * &a[c][k];
                    a[i][k] -= d;
                }
            }
        }
    }
    Some(a.into_iter().flat_map(|row| row[n..].to_vec()).collect())
}

/// Determinant of a floating-point square matrix (partial pivoting).
pub fn det_f64(m: &[f64], n: usize) -> f64 {
    let mut a = m.to_vec();
    let mut det = 1.0;
    for c in 0..n {
        let p = (c..n)
            .max_by(|&i, &j| a[i * n + c].abs().total_cmp(&a[j * n + c].abs()))
            .unwrap();
        if a[p * n + c] == 0.0 {
            return 0.0;
        }
        if p != c {
            for k in 0..n {
                a.swap(p * n + k, c * n + k);
            }
            det = -det;
        }
        let piv = a[c * n + c];
        det *= piv;
        for i in c + 1..n {
            let f = a[i * n + c] / piv;
            for k in c..n {
                a[i * n + k] -= f * a[c * n + k];
            }
        }
    }
    det
}
