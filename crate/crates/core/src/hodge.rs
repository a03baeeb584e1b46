//! Combinatorial Hodge theory on a based complex with inner products.
//!
//! With Gram matrices `G_q` on the chain groups the adjoint of `d_q` is
//! `d_q* = G_q^{-1} d_q^T G_{q-1}` and the Laplacian is
//! `L_q = d_{q+1} d_{q+1}* + d_q* d_q`. Its kernel represents homology and
//! the product of its nonzero eigenvalues replaces the zeta-regularized
//! determinant, giving
//!
//! ```text
//! T^2 = prod_p det'(L_p)^((-1)^(p+1) p).
//! ```
//!
//! The finite Cheeger–Müller identity compares `T^2` with the torsion of the
//! harmonic basis after correcting both sides for volumes:
//!
//! ```text
//! T^2 prod_q det Gram(h_q)^((-1)^q) = tau(C; h)^2 prod_q det G_q^((-1)^q)
//! ```

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::chain::{torsion, BasedChainComplex, HomologyBasis};
use crate::error::{Error, Result};
use crate::linalg::{det, inverse, kernel_basis, primitive, pseudo_determinant, Chain, Rational, RationalMatrix};

/// Symmetric positive-definite Gram matrices, one per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedInnerProduct {
    grams: Vec<RationalMatrix>,
}

fn positive_definite(m: &RationalMatrix) -> bool {
    if !m.is_symmetric() {
        return false;
    }
    // Gaussian elimination without pivoting; every pivot must be positive.
    let n = m.rows();
    let mut a = m.clone();
    for k in 0..n {
        let pivot = a[(k, k)].clone();
        if pivot <= Rational::zero() {
            return false;
        }
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = &a[(i, k)] / &pivot;
            for j in k..n {
                let x = &f * &a[(k, j)];
                a[(i, j)] -= x;
            }
        }
    }
    true
}

impl GradedInnerProduct {
    pub fn new(grams: Vec<RationalMatrix>) -> Result<Self> {
        for (q, g) in grams.iter().enumerate() {
            if !positive_definite(g) {
                return Err(Error::NotPositiveDefinite(q));
            }
        }
        Ok(GradedInnerProduct { grams })
    }

    /// The cell basis declared orthonormal.
    pub fn identity(complex: &BasedChainComplex) -> Self {
        GradedInnerProduct { grams: complex.dims().iter().map(|&n| RationalMatrix::identity(n)).collect() }
    }

    pub fn gram(&self, q: usize) -> &RationalMatrix {
        &self.grams[q]
    }

    pub fn grams(&self) -> &[RationalMatrix] {
        &self.grams
    }

    /// Copy with the Gram matrix in degree `q` multiplied by `c`.
    pub fn scaled(&self, q: usize, c: &Rational) -> Self {
        let mut out = self.clone();
        out.grams[q] = out.grams[q].scale(c);
        out
    }

    fn check(&self, complex: &BasedChainComplex) -> Result<()> {
        if self.grams.len() != complex.len() || self.grams.iter().zip(complex.dims()).any(|(g, &n)| g.rows() != n) {
            return Err(Error::DimensionMismatch("Gram matrices do not match the complex".into()));
        }
        Ok(())
    }

    /// `<v, w>` in degree `q`.
    pub fn inner(&self, q: usize, v: &[Rational], w: &[Rational]) -> Result<Rational> {
        let gw = self.grams[q].apply(w)?;
        Ok(v.iter().zip(&gw).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    /// Determinant of the Gram matrix of a family in degree `q`.
    pub fn volume_squared(&self, q: usize, family: &[Chain]) -> Result<Rational> {
        let n = family.len();
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.inner(q, &family[i], &family[j])?;
            }
        }
        det(&m)
    }
}

fn adjoint(complex: &BasedChainComplex, gram: &GradedInnerProduct, q: usize) -> Result<Option<RationalMatrix>> {
    let Some(d) = complex.boundary(q) else { return Ok(None) };
    let gi = inverse(gram.gram(q))?;
    Ok(Some(gi.mul(&d.transpose())?.mul(gram.gram(q - 1))?))
}

/// `L_q = d_{q+1} d_{q+1}* + d_q* d_q`.
pub fn laplacian(complex: &BasedChainComplex, gram: &GradedInnerProduct, q: usize) -> Result<RationalMatrix> {
    gram.check(complex)?;
    let n = complex.dim(q);
    let mut out = RationalMatrix::zeros(n, n);
    let mut add = |m: RationalMatrix| {
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] += &m[(i, j)];
            }
        }
    };
    if let (Some(up), Some(up_adj)) = (complex.boundary(q + 1), adjoint(complex, gram, q + 1)?) {
        add(up.mul(&up_adj)?);
    }
    if let (Some(down), Some(down_adj)) = (complex.boundary(q), adjoint(complex, gram, q)?) {
        add(down_adj.mul(down)?);
    }
    Ok(out)
}

/// Kernel of `L_q`, scaled to primitive integer vectors.
pub fn harmonic_basis(complex: &BasedChainComplex, gram: &GradedInnerProduct, q: usize) -> Result<Vec<Chain>> {
    Ok(kernel_basis(&laplacian(complex, gram, q)?).iter().map(|v| primitive(v)).collect())
}

pub fn harmonic_homology_basis(complex: &BasedChainComplex, gram: &GradedInnerProduct) -> Result<HomologyBasis> {
    Ok(HomologyBasis::new((0..complex.len()).map(|q| harmonic_basis(complex, gram, q)).collect::<Result<_>>()?))
}

/// Product of the nonzero eigenvalues of `L_q`.
pub fn det_prime(complex: &BasedChainComplex, gram: &GradedInnerProduct, q: usize) -> Result<Rational> {
    pseudo_determinant(&laplacian(complex, gram, q)?)
}

pub fn analytic_torsion_squared(complex: &BasedChainComplex, gram: &GradedInnerProduct) -> Result<Rational> {
    let mut t = Rational::one();
    for p in 1..complex.len() {
        let d = det_prime(complex, gram, p)?;
        for _ in 0..p {
            if p % 2 == 1 {
                t *= &d;
            } else {
                t /= &d;
            }
        }
    }
    Ok(t)
}

/// Both sides of the finite Cheeger–Müller identity, as squares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmReport {
    pub analytic_squared: Rational,
    /// `prod_q det Gram(h_q)^((-1)^q)` for the harmonic basis.
    pub harmonic_volume: Rational,
    pub reidemeister_squared: Rational,
    /// `prod_q det G_q^((-1)^q)`.
    pub cell_volume: Rational,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl CmReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn cm_check(complex: &BasedChainComplex, gram: &GradedInnerProduct) -> Result<CmReport> {
    gram.check(complex)?;
    let h = harmonic_homology_basis(complex, gram)?;
    let analytic_squared = analytic_torsion_squared(complex, gram)?;
    let tau = torsion(complex, &h)?.into_inner();
    let reidemeister_squared = &tau * &tau;
    let mut harmonic_volume = Rational::one();
    let mut cell_volume = Rational::one();
    for q in 0..complex.len() {
        let hv = gram.volume_squared(q, h.degree(q))?;
        let cv = det(gram.gram(q))?;
        if q % 2 == 0 {
            harmonic_volume *= hv;
            cell_volume *= cv;
        } else {
            harmonic_volume /= hv;
            cell_volume /= cv;
        }
    }
    let lhs = &analytic_squared * &harmonic_volume;
    let rhs = &reidemeister_squared * &cell_volume;
    Ok(CmReport { analytic_squared, harmonic_volume, reidemeister_squared, cell_volume, lhs, rhs })
}
