use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Rational, RationalMatrix};
use crate::error::{Error, Result};

/// Characteristic polynomial `det(x I - m)`, coefficients from the constant
/// term upwards (the leading coefficient is 1).
///
/// Reduces to upper Hessenberg form by exact similarity transforms and runs
/// the Hessenberg recurrence, so the cost is cubic in the size.
pub fn characteristic_polynomial(m: &RationalMatrix) -> Result<Vec<Rational>> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let h = hessenberg(m.clone());

    // p[k] is the characteristic polynomial of the leading k x k block.
    let mut p: Vec<Vec<Rational>> = Vec::with_capacity(n + 1);
    p.push(vec![Rational::one()]);
    for k in 1..=n {
        // (x - h[k-1][k-1]) * p[k-1]
        let prev = &p[k - 1];
        let mut next = vec![Rational::zero(); k + 1];
        for (i, c) in prev.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &h[(k - 1, k - 1)];
        }
        let mut t = Rational::one();
        for i in 1..k {
            t *= &h[(k - i, k - i - 1)];
            if t.is_zero() {
                break;
            }
            let coef = &t * &h[(k - i - 1, k - 1)];
            if coef.is_zero() {
                continue;
            }
            for (j, c) in p[k - i - 1].iter().enumerate() {
                next[j] -= &coef * c;
            }
        }
        p.push(next);
    }
    Ok(p.pop().expect("nonempty"))
}

fn hessenberg(mut h: RationalMatrix) -> RationalMatrix {
    let n = h.rows();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| !h[(i, m - 1)].is_zero()) else { continue };
        if i != m {
            h.swap_rows(i, m);
            h.swap_cols(i, m);
        }
        let t = h[(m, m - 1)].clone();
        for i in m + 1..n {
            if h[(i, m - 1)].is_zero() {
                continue;
            }
            let u = &h[(i, m - 1)] / &t;
            // row_i -= u * row_m, then col_m += u * col_i (similarity)
            for j in 0..n {
                let x = &u * &h[(m, j)];
                if !x.is_zero() {
                    h[(i, j)] -= x;
                }
            }
            for r in 0..n {
                let x = &u * &h[(r, i)];
                if !x.is_zero() {
                    h[(r, m)] += x;
                }
            }
        }
    }
    h
}

/// Product of the nonzero eigenvalues of a diagonalizable matrix, read off
/// the lowest nonzero coefficient of its characteristic polynomial. The empty
/// product is 1.
pub fn pseudo_determinant(m: &RationalMatrix) -> Result<Rational> {
    let p = characteristic_polynomial(m)?;
    let n = m.rows();
    let k = p.iter().position(|c| !c.is_zero()).expect("monic polynomial");
    let rank = n - k;
    let c = p[k].clone();
    Ok(if rank % 2 == 1 { -c } else { c })
}
