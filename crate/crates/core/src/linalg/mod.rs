//! Exact rational and integer linear algebra.

mod charpoly;
pub(crate) mod echelon;
mod matrix;
mod smith;

use alloc::vec::Vec;

pub use charpoly::{characteristic_polynomial, pseudo_determinant};
pub use matrix::{
    integer_matrix, is_zero_vector, primitive, rat, ratio, rational_matrix, Chain, IntegerMatrix, Matrix, Rational,
    RationalMatrix,
};
pub use smith::{smith_normal_form, SmithForm};

use echelon::{to_dense, to_sparse, ColumnEchelon, Insertion};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Signed determinant by pivoted column elimination.
pub fn det(m: &RationalMatrix) -> Result<Rational> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let mut e = ColumnEchelon::new(false);
    for j in 0..m.cols() {
        if let Insertion::Dependent(_) = e.insert(&m.column(j)) {
            return Ok(Rational::zero());
        }
    }
    Ok(e.determinant(m.rows()))
}

/// Absolute determinant of the square matrix with the given columns.
pub(crate) fn abs_det_of_columns(columns: &[Chain]) -> Rational {
    let mut e = ColumnEchelon::new(false);
    for c in columns {
        if let Insertion::Dependent(_) = e.insert(c) {
            return Rational::zero();
        }
    }
    let d = e.determinant(columns.len());
    if d < Rational::zero() {
        -d
    } else {
        d
    }
}

pub fn rank(m: &RationalMatrix) -> usize {
    let mut e = ColumnEchelon::new(false);
    for j in 0..m.cols() {
        e.insert(&m.column(j));
    }
    e.rank()
}

/// Leftmost pivot columns of `m` and the corresponding columns, which form
/// a basis of the column space.
pub fn image_basis(m: &RationalMatrix) -> (Vec<usize>, Vec<Chain>) {
    let mut e = ColumnEchelon::new(false);
    let mut pivots = Vec::new();
    for j in 0..m.cols() {
        let col = m.column(j);
        if let Insertion::Independent = e.insert(&col) {
            pivots.push(j);
        }
    }
    let basis = pivots.iter().map(|&j| m.column(j)).collect();
    (pivots, basis)
}

/// Kernel basis in reduced echelon parametrization: one vector per non-pivot
/// column `j`, with 1 at `j`, zeros at the other free columns, and minus the
/// coefficients expressing column `j` in the pivot columns.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Chain> {
    let mut e = ColumnEchelon::new(true);
    let mut kernel = Vec::new();
    for j in 0..m.cols() {
        if let Insertion::Dependent(coeffs) = e.insert(&m.column(j)) {
            let mut v = alloc::vec![Rational::zero(); m.cols()];
            v[j] = Rational::one();
            for (i, c) in coeffs {
                v[i] = -c;
            }
            kernel.push(v);
        }
    }
    kernel
}

/// Coordinates of `v` in the linearly independent family `basis`.
pub fn coordinates(basis: &[Chain], v: &[Rational]) -> Result<Vec<Rational>> {
    let mut e = ColumnEchelon::new(true);
    for b in basis {
        if let Insertion::Dependent(_) = e.insert(b) {
            return Err(Error::Singular);
        }
    }
    let c = e.express(to_sparse(v)).ok_or(Error::NotInSpan)?;
    Ok(to_dense(&c, basis.len()))
}

/// A reusable solver for coordinates in a fixed independent family.
#[derive(Debug, Clone)]
pub struct SpanSolver {
    echelon: ColumnEchelon,
    len: usize,
}

impl SpanSolver {
    pub fn new(basis: &[Chain]) -> Result<Self> {
        let mut echelon = ColumnEchelon::new(true);
        for b in basis {
            if let Insertion::Dependent(_) = echelon.insert(b) {
                return Err(Error::Singular);
            }
        }
        Ok(SpanSolver { echelon, len: basis.len() })
    }

    pub fn coordinates(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        let c = self.echelon.express(to_sparse(v)).ok_or(Error::NotInSpan)?;
        Ok(to_dense(&c, self.len))
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.echelon.contains(to_sparse(v))
    }
}

/// Some coefficients expressing `v` in a possibly dependent `family`, or
/// `None` when `v` is outside its span.
pub fn express_in_family(family: &[Chain], v: &[Rational]) -> Option<Vec<Rational>> {
    let mut e = ColumnEchelon::new(true);
    for f in family {
        e.insert(f);
    }
    e.express(to_sparse(v)).map(|c| to_dense(&c, family.len()))
}

/// `x^n` for a possibly negative exponent; `x` must be nonzero when `n < 0`.
pub fn rational_pow(x: &Rational, n: i64) -> Rational {
    let mut out = Rational::one();
    for _ in 0..n.unsigned_abs() {
        out *= x;
    }
    if n < 0 {
        out.recip()
    } else {
        out
    }
}

pub fn inverse(m: &RationalMatrix) -> Result<RationalMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let solver = SpanSolver::new(&m.columns())?;
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = alloc::vec![Rational::zero(); n];
        e[j] = Rational::one();
        cols.push(solver.coordinates(&e)?);
    }
    RationalMatrix::from_columns(n, &cols)
}
