//! Small fixed-size dense linear algebra.

use crate::C64;

pub type CMat<const N: usize> = [[C64; N]; N];

pub fn identity<const N: usize>() -> CMat<N> {
    let mut out = [[C64::new(0.0, 0.0); N]; N];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = C64::new(1.0, 0.0);
    }
    out
}

pub fn matmul<const N: usize>(a: &CMat<N>, b: &CMat<N>) -> CMat<N> {
    let mut out = [[C64::new(0.0, 0.0); N]; N];
    for i in 0..N {
        for k in 0..N {
            let aik = a[i][k];
            if aik == C64::new(0.0, 0.0) {
                continue;
            }
            for j in 0..N {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn matvec<const N: usize>(a: &CMat<N>, v: &[C64; N]) -> [C64; N] {
    let mut out = [C64::new(0.0, 0.0); N];
    for i in 0..N {
        for j in 0..N {
            out[i] += a[i][j] * v[j];
        }
    }
    out
}

fn norm_one<const N: usize>(a: &CMat<N>) -> f64 {
    (0..N)
        .map(|j| (0..N).map(|i| a[i][j].norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Matrix exponential by scaling and squaring with a degree-20 Taylor
/// polynomial on the scaled matrix (scaled 1-norm at most 1/2).
pub fn expm<const N: usize>(a: &CMat<N>) -> CMat<N> {
    let norm = norm_one(a);
    let mut squarings = 0u32;
    let mut scale = 1.0;
    while norm * scale > 0.5 {
        scale *= 0.5;
        squarings += 1;
    }
    let mut scaled = *a;
    for row in scaled.iter_mut() {
        for x in row.iter_mut() {
            *x *= scale;
        }
    }
    // Horner: I + A(I + A/2(I + A/3(...)))
    let mut acc = identity::<N>();
    for k in (1..=20).rev() {
        let mut next = matmul(&scaled, &acc);
        let inv = 1.0 / k as f64;
        for (i, row) in next.iter_mut().enumerate() {
            for x in row.iter_mut() {
                *x *= inv;
            }
            row[i] += C64::new(1.0, 0.0);
        }
        acc = next;
    }
    for _ in 0..squarings {
        acc = matmul(&acc, &acc);
    }
    acc
}

pub fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

pub fn matvec3(m: &[[f64; 3]; 3], v: &[f64; 3]) -> [f64; 3] {
    [
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    ]
}

/// Gaussian elimination with partial pivoting. `None` if singular.
pub fn solve3(m: &[[f64; 3]; 3], rhs: &[f64; 3]) -> Option<[f64; 3]> {
    let mut a = *m;
    let mut b = *rhs;
    for col in 0..3 {
        let pivot = (col..3)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap_or(col);
        if a[pivot][col] == 0.0 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..3 {
            let f = a[row][col] / a[col][col];
            for k in col..3 {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0; 3];
    for row in (0..3).rev() {
        let mut s = b[row];
        for k in row + 1..3 {
            s -= a[row][k] * x[k];
        }
        x[row] = s / a[row][row];
    }
    Some(x)
}
