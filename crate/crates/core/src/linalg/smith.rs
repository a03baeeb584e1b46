use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntegerMatrix;

/// Smith normal form `U * m * V = D` over the integers.
///
/// `U` and `V` are unimodular and `D` is diagonal with nonnegative entries
/// where each diagonal entry divides the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub left: IntegerMatrix,
    pub diagonal: IntegerMatrix,
    pub right: IntegerMatrix,
}

impl SmithForm {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        let n = self.diagonal.rows().min(self.diagonal.cols());
        (0..n).take_while(|&i| !self.diagonal[(i, i)].is_zero()).count()
    }

    /// The nonzero invariant factors `d_1 | d_2 | ...`.
    pub fn invariant_factors(&self) -> alloc::vec::Vec<BigInt> {
        (0..self.rank()).map(|i| self.diagonal[(i, i)].clone()).collect()
    }

    /// Columns of `V` spanning the integer kernel of `m`. They form a basis of
    /// the lattice `ker(m) ∩ Z^n`.
    pub fn kernel_lattice(&self) -> alloc::vec::Vec<alloc::vec::Vec<BigInt>> {
        (self.rank()..self.right.cols()).map(|j| self.right.column(j)).collect()
    }
}

struct Work {
    d: IntegerMatrix,
    u: IntegerMatrix,
    v: IntegerMatrix,
}

impl Work {
    // row_a -= q * row_b
    fn row_sub(&mut self, a: usize, b: usize, q: &BigInt) {
        for j in 0..self.d.cols() {
            let x = &self.d[(b, j)] * q;
            self.d[(a, j)] -= x;
        }
        for j in 0..self.u.cols() {
            let x = &self.u[(b, j)] * q;
            self.u[(a, j)] -= x;
        }
    }

    // col_a -= q * col_b
    fn col_sub(&mut self, a: usize, b: usize, q: &BigInt) {
        for i in 0..self.d.rows() {
            let x = &self.d[(i, b)] * q;
            self.d[(i, a)] -= x;
        }
        for i in 0..self.v.rows() {
            let x = &self.v[(i, b)] * q;
            self.v[(i, a)] -= x;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.d.cols() {
            self.d[(a, j)] = -self.d[(a, j)].clone();
        }
        for j in 0..self.u.cols() {
            self.u[(a, j)] = -self.u[(a, j)].clone();
        }
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work { d: m.clone(), u: IntegerMatrix::identity(rows), v: IntegerMatrix::identity(cols) };

    for t in 0..rows.min(cols) {
        // Bring the smallest nonzero entry of the remaining block to (t, t).
        let Some((pi, pj)) = smallest_entry(&w.d, t..rows, t..cols) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        loop {
            let pivot = w.d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if w.d[(i, t)].is_zero() {
                    continue;
                }
                let q = w.d[(i, t)].div_floor(&pivot);
                w.row_sub(i, t, &q);
                clean &= w.d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if w.d[(t, j)].is_zero() {
                    continue;
                }
                let q = w.d[(t, j)].div_floor(&pivot);
                w.col_sub(j, t, &q);
                clean &= w.d[(t, j)].is_zero();
            }
            if !clean {
                // A smaller remainder appeared in row or column t.
                let (pi, pj) = smallest_in_cross(&w.d, t);
                w.swap_rows(t, pi);
                w.swap_cols(t, pj);
                continue;
            }
            // Divisibility of the remaining block.
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let minus_one = BigInt::from(-1);
                    w.row_sub(t, i, &minus_one);
                }
                None => break,
            }
        }
        if w.d[(t, t)].is_negative() {
            w.negate_row(t);
        }
    }
    SmithForm { left: w.u, diagonal: w.d, right: w.v }
}

fn smallest_entry(
    d: &IntegerMatrix,
    rows: core::ops::Range<usize>,
    cols: core::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross(d: &IntegerMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    for i in t..d.rows() {
        let x = &d[(i, t)];
        if !x.is_zero() && x.abs() < d[best].abs() {
            best = (i, t);
        }
    }
    for j in t..d.cols() {
        let x = &d[(t, j)];
        if !x.is_zero() && x.abs() < d[best].abs() {
            best = (t, j);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{det, integer_matrix};

    fn check(m: &IntegerMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        let recomposed = s.left.mul(m).unwrap().mul(&s.right).unwrap();
        assert_eq!(recomposed, s.diagonal);
        assert_eq!(det(&s.left.to_rational()).unwrap().abs(), crate::linalg::rat(1));
        assert_eq!(det(&s.right.to_rational()).unwrap().abs(), crate::linalg::rat(1));
        s
    }

    #[test]
    fn diag_two_three() {
        let s = check(&integer_matrix(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal, integer_matrix(&[&[1, 0], &[0, 6]]));
    }

    #[test]
    fn identity_and_zero() {
        let s = check(&IntegerMatrix::identity(3));
        assert_eq!(s.diagonal, IntegerMatrix::identity(3));
        let s = check(&integer_matrix(&[&[0]]));
        assert_eq!(s.diagonal, integer_matrix(&[&[0]]));
        assert!(s.kernel_lattice().len() == 1);
    }

    #[test]
    fn rectangular_with_torsion() {
        let s = check(&integer_matrix(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(s.invariant_factors(), alloc::vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let s = check(&integer_matrix(&[&[1, -1, 0, 0], &[0, 1, -1, 0]]));
        assert_eq!(s.rank(), 2);
        for k in s.kernel_lattice() {
            assert_eq!(&k[0] - &k[1], BigInt::zero());
            assert_eq!(&k[1] - &k[2], BigInt::zero());
        }
    }
}
