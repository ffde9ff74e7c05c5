//! Chebyshev polynomials of the second kind.

use crate::exactalg::{rat_int, Rat};
use num_traits::Zero;

/// Coefficients of U_n(y), ascending powers of y, by the recurrence
/// U_{n+1}(y) = 2y U_n(y) - U_{n-1}(y) with U_0 = 1, U_1 = 2y.
pub fn chebyshev_u(n: usize) -> Vec<Rat> {
    let mut prev: Vec<Rat> = vec![rat_int(1)];
    if n == 0 {
        return prev;
    }
    let mut cur: Vec<Rat> = vec![rat_int(0), rat_int(2)];
    for _ in 1..n {
        let mut next = vec![Rat::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] = c * rat_int(2);
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] = &next[i] - c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Coefficients of the modified polynomials U_n(x/2), ascending powers of x.
///
/// These satisfy V_{n+1}(x) = x V_n(x) - V_{n-1}(x) with V_0 = 1, V_1 = x,
/// and have integer coefficients.
pub fn chebyshev_u_half(n: usize) -> Vec<Rat> {
    let mut prev: Vec<Rat> = vec![rat_int(1)];
    if n == 0 {
        return prev;
    }
    let mut cur: Vec<Rat> = vec![rat_int(0), rat_int(1)];
    for _ in 1..n {
        let mut next = vec![Rat::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] = c.clone();
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] = &next[i] - c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact evaluation of U_n at a rational point.
pub fn chebyshev_u_at(n: usize, y: &Rat) -> Rat {
    let two_y = y * rat_int(2);
    let mut prev = rat_int(1);
    if n == 0 {
        return prev;
    }
    let mut cur = two_y.clone();
    for _ in 1..n {
        let next = &two_y * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur
}
