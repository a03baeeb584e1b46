//! Based chain complexes, their homology, and scalar Reidemeister torsion.
//!
//! A complex `0 -> C_m -> ... -> C_1 -> C_0 -> 0` is stored by the
//! dimensions of its terms and the boundary matrices `d_q : C_q -> C_{q-1}`
//! written in the preferred bases, which are the standard coordinate bases.
//!
//! Base-change brackets follow the row convention `w_i = sum_j (w/v)_ij v_j`
//! and always take the absolute value of the determinant, so torsion is a
//! positive rational. The torsion with homology basis `h` is
//!
//! ```text
//! tau(C; h) = prod_q [ d(b_{q+1}) h_q b_q / c_q ] ^ ((-1)^q)
//! ```
//!
//! where `b_q` is any family whose image under `d_q` is a basis of the
//! boundaries in degree `q - 1`. [`torsion`] takes `b_q` to be the leftmost
//! pivot columns of `d_q`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::echelon::{ColumnEchelon, Insertion};
use crate::linalg::{
    abs_det_of_columns, image_basis, inverse, is_zero_vector, kernel_basis, primitive, Chain, Rational,
    RationalMatrix, SpanSolver,
};

/// A finite chain complex of finite-dimensional rational vector spaces with
/// preferred (standard) bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedChainComplex {
    dims: Vec<usize>,
    // boundaries[q - 1] is d_q : C_q -> C_{q-1}
    boundaries: Vec<RationalMatrix>,
}

/// Why a candidate complex was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// `d_q` does not have shape `dim C_{q-1} x dim C_q`.
    Shape,
    /// `d_q d_{q+1}` is nonzero.
    SquareNonzero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub degree: usize,
    pub kind: ViolationKind,
}

/// Checks shape coherence and `d_q d_{q+1} = 0`, reporting the first
/// violating degree. `boundaries[q - 1]` is `d_q`.
pub fn validate(dims: &[usize], boundaries: &[RationalMatrix]) -> core::result::Result<(), Violation> {
    if boundaries.len() + 1 != dims.len().max(1) {
        let degree = boundaries.len().min(dims.len());
        return Err(Violation { degree, kind: ViolationKind::Shape });
    }
    for (k, d) in boundaries.iter().enumerate() {
        let q = k + 1;
        if d.rows() != dims[q - 1] || d.cols() != dims[q] {
            return Err(Violation { degree: q, kind: ViolationKind::Shape });
        }
    }
    for q in 1..boundaries.len() {
        let product = boundaries[q - 1].mul(&boundaries[q]).expect("shapes checked");
        if !product.is_zero() {
            return Err(Violation { degree: q, kind: ViolationKind::SquareNonzero });
        }
    }
    Ok(())
}

impl BasedChainComplex {
    /// `dims[q]` is `dim C_q`; `boundaries[q - 1]` is `d_q`.
    pub fn new(dims: Vec<usize>, boundaries: Vec<RationalMatrix>) -> Result<Self> {
        match validate(&dims, &boundaries) {
            Ok(()) => Ok(BasedChainComplex { dims, boundaries }),
            Err(Violation { degree, kind: ViolationKind::SquareNonzero }) => Err(Error::NotAComplex { degree }),
            Err(Violation { degree, kind: ViolationKind::Shape }) => {
                Err(Error::DimensionMismatch(alloc::format!("boundary in degree {degree} has the wrong shape")))
            }
        }
    }

    /// The zero complex.
    pub fn zero() -> Self {
        BasedChainComplex { dims: Vec::new(), boundaries: Vec::new() }
    }

    /// Number of stored degrees (`top degree + 1`), zero for the zero complex.
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `dim C_q`, zero outside the stored range.
    pub fn dim(&self, q: usize) -> usize {
        self.dims.get(q).copied().unwrap_or(0)
    }

    /// `d_q` for `1 <= q <= top`.
    pub fn boundary(&self, q: usize) -> Option<&RationalMatrix> {
        if q == 0 {
            None
        } else {
            self.boundaries.get(q - 1)
        }
    }

    pub fn boundaries(&self) -> &[RationalMatrix] {
        &self.boundaries
    }

    /// Applies `d_q` to a chain of degree `q`; `d_0` is zero.
    pub fn apply_boundary(&self, q: usize, v: &[Rational]) -> Result<Chain> {
        if v.len() != self.dim(q) {
            return Err(Error::DimensionMismatch(alloc::format!(
                "chain of length {} in degree {q} of dimension {}",
                v.len(),
                self.dim(q)
            )));
        }
        match self.boundary(q) {
            Some(d) => d.apply(v),
            None => Ok(Vec::new()),
        }
    }

    pub fn is_cycle(&self, q: usize, v: &[Rational]) -> Result<bool> {
        Ok(is_zero_vector(&self.apply_boundary(q, v)?))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().enumerate().map(|(q, &d)| if q % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }

    /// Dual complex: transposed boundaries with reversed grading, so that
    /// degree `q` of the dual is degree `top - q` of `self`.
    pub fn dual(&self) -> Self {
        let dims: Vec<usize> = self.dims.iter().rev().copied().collect();
        let boundaries = self.boundaries.iter().rev().map(RationalMatrix::transpose).collect();
        BasedChainComplex { dims, boundaries }
    }

    /// Degreewise direct sum, bases concatenated.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let len = self.len().max(other.len());
        let dims = (0..len).map(|q| self.dim(q) + other.dim(q)).collect();
        let boundaries = (1..len)
            .map(|q| {
                let a = self.boundary(q).cloned().unwrap_or_else(|| RationalMatrix::zeros(self.dim(q - 1), self.dim(q)));
                let b =
                    other.boundary(q).cloned().unwrap_or_else(|| RationalMatrix::zeros(other.dim(q - 1), other.dim(q)));
                a.direct_sum(&b)
            })
            .collect();
        BasedChainComplex { dims, boundaries }
    }

    /// Shifts every degree up by one, `(SC)_{q+1} = C_q`.
    pub fn suspension(&self) -> Self {
        let mut dims = vec![0];
        dims.extend(&self.dims);
        let mut boundaries = vec![RationalMatrix::zeros(0, self.dim(0))];
        boundaries.extend(self.boundaries.iter().cloned());
        BasedChainComplex { dims, boundaries }
    }

    fn pivots(&self, q: usize) -> Vec<usize> {
        self.boundary(q).map(|d| image_basis(d).0).unwrap_or_default()
    }

    fn rank(&self, q: usize) -> usize {
        self.boundary(q).map(crate::linalg::rank).unwrap_or(0)
    }
}

/// Chosen cycle representatives of a homology basis, per degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyBasis {
    degrees: Vec<Vec<Chain>>,
}

impl HomologyBasis {
    pub fn new(degrees: Vec<Vec<Chain>>) -> Self {
        HomologyBasis { degrees }
    }

    /// The empty basis, valid exactly for acyclic complexes.
    pub fn empty() -> Self {
        HomologyBasis::default()
    }

    /// Representatives in degree `q`, empty outside the stored range.
    pub fn degree(&self, q: usize) -> &[Chain] {
        self.degrees.get(q).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn degrees(&self) -> &[Vec<Chain>] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.iter().all(Vec::is_empty)
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.degrees.iter().map(Vec::len).collect()
    }

    /// Copy with the `i`-th representative in degree `q` multiplied by `c`.
    pub fn scaled(&self, q: usize, i: usize, c: &Rational) -> Self {
        let mut out = self.clone();
        for x in &mut out.degrees[q][i] {
            *x *= c;
        }
        out
    }
}

/// Betti numbers with the canonical homology basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub betti: Vec<usize>,
    pub basis: HomologyBasis,
}

/// Homology with a deterministic basis: in each degree the kernel basis of
/// `d_q` (reduced echelon parametrization) is appended to the leftmost
/// pivot columns of `d_{q+1}`, and the kernel vectors that become pivots
/// are kept, scaled to primitive integer vectors.
pub fn homology(complex: &BasedChainComplex) -> Homology {
    let mut betti = Vec::with_capacity(complex.len());
    let mut degrees = Vec::with_capacity(complex.len());
    for q in 0..complex.len() {
        let cycles = match complex.boundary(q) {
            Some(d) => kernel_basis(d),
            None => (0..complex.dim(q))
                .map(|i| {
                    let mut e = vec![Rational::zero(); complex.dim(q)];
                    e[i] = Rational::one();
                    e
                })
                .collect(),
        };
        let mut echelon = ColumnEchelon::new(false);
        if let Some(up) = complex.boundary(q + 1) {
            for b in image_basis(up).1 {
                echelon.insert(&b);
            }
        }
        let mut reps = Vec::new();
        for z in cycles {
            if let Insertion::Independent = echelon.insert(&z) {
                reps.push(primitive(&z));
            }
        }
        betti.push(reps.len());
        degrees.push(reps);
    }
    Homology { betti, basis: HomologyBasis::new(degrees) }
}

pub fn betti_numbers(complex: &BasedChainComplex) -> Vec<usize> {
    (0..complex.len())
        .map(|q| complex.dim(q) - complex.rank(q) - complex.rank(q + 1))
        .collect()
}

/// Positive scalar Reidemeister torsion.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorsionScalar(Rational);

impl TorsionScalar {
    pub fn new(value: Rational) -> Option<Self> {
        value.is_positive().then_some(TorsionScalar(value))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_inner(self) -> Rational {
        self.0
    }
}

impl fmt::Display for TorsionScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn check_cycles(complex: &BasedChainComplex, h: &HomologyBasis) -> Result<()> {
    if h.len() > complex.len() && h.degrees[complex.len()..].iter().any(|d| !d.is_empty()) {
        return Err(Error::NotAHomologyBasis { degree: complex.len() });
    }
    for q in 0..complex.len() {
        for v in h.degree(q) {
            if !complex.is_cycle(q, v)? {
                return Err(Error::NotACycle { degree: q });
            }
        }
    }
    Ok(())
}

fn signed_power(acc: &mut Rational, factor: Rational, q: usize) {
    if q % 2 == 0 {
        *acc *= factor;
    } else {
        *acc /= factor;
    }
}

/// Scalar Reidemeister torsion `tau(C; h; c)` with `b_q` the leftmost pivot
/// columns of `d_q`.
pub fn torsion(complex: &BasedChainComplex, h: &HomologyBasis) -> Result<TorsionScalar> {
    check_cycles(complex, h)?;
    let pivots: Vec<Vec<usize>> = (0..=complex.len()).map(|q| complex.pivots(q)).collect();
    let mut tau = Rational::one();
    for q in 0..complex.len() {
        let dim = complex.dim(q);
        let own = &pivots[q];
        let from_above: Vec<Chain> = match complex.boundary(q + 1) {
            Some(d) => pivots[q + 1].iter().map(|&j| d.column(j)).collect(),
            None => Vec::new(),
        };
        let reps = h.degree(q);
        if from_above.len() + reps.len() + own.len() != dim {
            return Err(Error::NotAHomologyBasis { degree: q });
        }
        if dim == 0 {
            continue;
        }
        // The b_q columns are unit vectors; expanding along them leaves the
        // rows outside the pivot set.
        let mut keep = vec![true; dim];
        for &p in own {
            keep[p] = false;
        }
        let restrict = |v: &Chain| -> Chain { v.iter().zip(&keep).filter(|(_, k)| **k).map(|(x, _)| x.clone()).collect() };
        let columns: Vec<Chain> = from_above.iter().chain(reps).map(restrict).collect();
        let bracket = abs_det_of_columns(&columns);
        if bracket.is_zero() {
            return Err(Error::NotAHomologyBasis { degree: q });
        }
        signed_power(&mut tau, bracket, q);
    }
    Ok(TorsionScalar(tau))
}

/// Torsion with explicitly chosen families `lifts[q] = b_q`, each of which
/// must map under `d_q` onto a basis of the boundaries in degree `q - 1`.
pub fn torsion_with_lifts(complex: &BasedChainComplex, h: &HomologyBasis, lifts: &[Vec<Chain>]) -> Result<TorsionScalar> {
    check_cycles(complex, h)?;
    let lift = |q: usize| lifts.get(q).map(Vec::as_slice).unwrap_or(&[]);
    let mut images: Vec<Vec<Chain>> = Vec::with_capacity(complex.len() + 1);
    for q in 0..=complex.len() {
        let b = lift(q);
        if b.len() != complex.rank(q) {
            return Err(Error::InvalidLifts { degree: q });
        }
        let mut imgs = Vec::with_capacity(b.len());
        let mut echelon = ColumnEchelon::new(false);
        for v in b {
            let img = complex.apply_boundary(q, v).map_err(|_| Error::InvalidLifts { degree: q })?;
            if let Insertion::Dependent(_) = echelon.insert(&img) {
                return Err(Error::InvalidLifts { degree: q });
            }
            imgs.push(img);
        }
        images.push(imgs);
    }
    let mut tau = Rational::one();
    for q in 0..complex.len() {
        let dim = complex.dim(q);
        let columns: Vec<Chain> = images[q + 1].iter().chain(h.degree(q)).chain(lift(q)).cloned().collect();
        if columns.len() != dim {
            return Err(Error::NotAHomologyBasis { degree: q });
        }
        if dim == 0 {
            continue;
        }
        let bracket = abs_det_of_columns(&columns);
        if bracket.is_zero() {
            return Err(Error::NotAHomologyBasis { degree: q });
        }
        signed_power(&mut tau, bracket, q);
    }
    Ok(TorsionScalar(tau))
}

/// Torsion of an acyclic complex computed through a chain contraction
/// instead of pivot choices: with `s = d^T (d d^T + d^T d)^{-1}` the map
/// `d + s` restricted to odd degrees is an isomorphism onto even degrees and
/// its absolute determinant is the torsion.
pub fn acyclic_torsion_by_contraction(complex: &BasedChainComplex) -> Result<TorsionScalar> {
    let len = complex.len();
    let zero_map = |rows: usize, cols: usize| RationalMatrix::zeros(rows, cols);
    let d = |q: usize| complex.boundary(q).cloned().unwrap_or_else(|| zero_map(complex.dim(q.saturating_sub(1)), complex.dim(q)));
    let mut contraction: Vec<RationalMatrix> = Vec::with_capacity(len);
    for q in 0..len {
        let up = d(q + 1);
        let down = d(q);
        let mut laplacian = up.mul(&up.transpose())?;
        if q > 0 {
            let lower = down.transpose().mul(&down)?;
            for i in 0..laplacian.rows() {
                for j in 0..laplacian.cols() {
                    laplacian[(i, j)] += &lower[(i, j)];
                }
            }
        }
        let inv = inverse(&laplacian).map_err(|_| Error::NotExact(q))?;
        contraction.push(up.transpose().mul(&inv)?);
    }
    let offsets = |parity: usize| -> (Vec<usize>, usize) {
        let mut off = vec![0; len + 1];
        let mut total = 0;
        for q in 0..len {
            off[q] = total;
            if q % 2 == parity {
                total += complex.dim(q);
            }
        }
        (off, total)
    };
    let (even_off, even_total) = offsets(0);
    let (odd_off, odd_total) = offsets(1);
    if even_total != odd_total {
        return Err(Error::NotExact(0));
    }
    let mut columns: Vec<Chain> = Vec::with_capacity(odd_total);
    for q in (1..len).step_by(2) {
        let down = d(q);
        let s = &contraction[q];
        for j in 0..complex.dim(q) {
            let mut col = vec![Rational::zero(); even_total];
            for i in 0..complex.dim(q - 1) {
                col[even_off[q - 1] + i] = down[(i, j)].clone();
            }
            if q + 1 < len {
                for i in 0..complex.dim(q + 1) {
                    col[even_off[q + 1] + i] = s[(i, j)].clone();
                }
            }
            columns.push(col);
        }
        debug_assert_eq!(odd_off[q] + complex.dim(q), columns.len());
    }
    let value = abs_det_of_columns(&columns);
    TorsionScalar::new(value).ok_or(Error::NotExact(0))
}

/// Coordinates of homology classes relative to a fixed homology basis.
#[derive(Clone, Debug)]
pub struct HomologyFrame {
    solvers: Vec<SpanSolver>,
    boundary_ranks: Vec<usize>,
    betti: Vec<usize>,
}

impl HomologyFrame {
    pub fn new(complex: &BasedChainComplex, h: &HomologyBasis) -> Result<Self> {
        check_cycles(complex, h)?;
        let mut solvers = Vec::with_capacity(complex.len());
        let mut boundary_ranks = Vec::with_capacity(complex.len());
        let mut betti = Vec::with_capacity(complex.len());
        for q in 0..complex.len() {
            let mut family = match complex.boundary(q + 1) {
                Some(d) => image_basis(d).1,
                None => Vec::new(),
            };
            let cycles = complex.dim(q) - complex.rank(q);
            boundary_ranks.push(family.len());
            family.extend(h.degree(q).iter().cloned());
            if family.len() != cycles {
                return Err(Error::NotAHomologyBasis { degree: q });
            }
            let solver = SpanSolver::new(&family).map_err(|_| Error::NotAHomologyBasis { degree: q })?;
            solvers.push(solver);
            betti.push(h.degree(q).len());
        }
        Ok(HomologyFrame { solvers, boundary_ranks, betti })
    }

    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    /// Coordinates of the class of the cycle `v` in degree `q`.
    pub fn class_coordinates(&self, q: usize, v: &[Rational]) -> Result<Vec<Rational>> {
        let Some(solver) = self.solvers.get(q) else {
            return if is_zero_vector(v) { Ok(Vec::new()) } else { Err(Error::NotACycle { degree: q }) };
        };
        let c = solver.coordinates(v).map_err(|_| Error::NotACycle { degree: q })?;
        Ok(c[self.boundary_ranks[q]..].to_vec())
    }

    /// Matrix whose columns are the class coordinates of `vectors`.
    pub fn coordinate_matrix(&self, q: usize, vectors: &[Chain]) -> Result<RationalMatrix> {
        let cols = vectors.iter().map(|v| self.class_coordinates(q, v)).collect::<Result<Vec<_>>>()?;
        RationalMatrix::from_columns(self.betti.get(q).copied().unwrap_or(0), &cols)
    }

    /// Coordinate matrices of a whole homology basis.
    pub fn basis_matrices(&self, h: &HomologyBasis) -> Result<Vec<RationalMatrix>> {
        (0..self.betti.len()).map(|q| self.coordinate_matrix(q, h.degree(q))).collect()
    }
}

/// `prod_q [h'_q / h_q]^((-1)^q)`, so that
/// `torsion(C, h') = basis_change_factor(C, h, h') * torsion(C, h)`.
pub fn basis_change_factor(complex: &BasedChainComplex, h: &HomologyBasis, h_new: &HomologyBasis) -> Result<Rational> {
    let frame = HomologyFrame::new(complex, h)?;
    check_cycles(complex, h_new)?;
    let mut factor = Rational::one();
    for q in 0..complex.len() {
        if h_new.degree(q).len() != frame.betti[q] {
            return Err(Error::NotAHomologyBasis { degree: q });
        }
        let m = frame.coordinate_matrix(q, h_new.degree(q))?;
        let d = crate::linalg::det(&m)?.abs();
        if d.is_zero() {
            return Err(Error::NotAHomologyBasis { degree: q });
        }
        signed_power(&mut factor, d, q);
    }
    Ok(factor)
}
