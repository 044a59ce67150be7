use alloc::vec;
use alloc::vec::Vec;

/// Physicists' Hermite polynomial `H_k(x)` by the three-term recurrence.
pub fn hermite(k: u32, x: f64) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    for j in 0..k {
        let next = 2.0 * x * cur - 2.0 * j as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Monomial coefficients of `H_k`: entry `i` multiplies `x^i`.
pub fn hermite_coefficients(k: u32) -> Vec<f64> {
    let k = k as usize;
    let mut prev = vec![0.0; k + 1];
    let mut cur = vec![0.0; k + 1];
    cur[0] = 1.0;
    for j in 0..k {
        let mut next = vec![0.0; k + 1];
        for i in 0..k {
            next[i + 1] += 2.0 * cur[i];
        }
        for i in 0..=k {
            next[i] -= 2.0 * j as f64 * prev[i];
        }
        prev = cur;
        cur = next;
    }
    cur
}
