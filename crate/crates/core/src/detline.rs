//! Determinant lines of graded homology and norms on them.
//!
//! Homology classes are written in the coordinates of a fixed
//! [`HomologyFrame`]. An element of `det H = ⊗_q (det H_q)^((-1)^q)` is a
//! nonzero scalar times `det E` for a basis `E` given degreewise by square
//! coordinate matrices. A norm is fixed by its value on one such `det R`.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::chain::{homology, torsion, BasedChainComplex, HomologyBasis, HomologyFrame};
use crate::error::{Error, Result};
use crate::linalg::{det, Rational, RationalMatrix};

/// The determinant line of the homology of a complex, in the coordinates of
/// its canonical homology basis.
#[derive(Clone, Debug)]
pub struct DetLine {
    frame: HomologyFrame,
}

impl DetLine {
    pub fn of(complex: &BasedChainComplex) -> Result<Self> {
        let h = homology(complex).basis;
        Ok(DetLine { frame: HomologyFrame::new(complex, &h)? })
    }

    /// Uses the frame of an arbitrary homology basis instead of the canonical one.
    pub fn with_frame(frame: HomologyFrame) -> Self {
        DetLine { frame }
    }

    pub fn frame(&self) -> &HomologyFrame {
        &self.frame
    }

    pub fn betti(&self) -> &[usize] {
        self.frame.betti()
    }

    /// `coordinate * det h` for cycle representatives `h`.
    pub fn element(&self, h: &HomologyBasis, coordinate: Rational) -> Result<DetLineElement> {
        DetLineElement::new(self.frame.basis_matrices(h)?, coordinate)
    }

    pub fn unit(&self) -> DetLineElement {
        DetLineElement::unit(self.betti())
    }
}

/// `coordinate * det E` with `E` given by per-degree coordinate matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetLineElement {
    reference: Vec<RationalMatrix>,
    coordinate: Rational,
}

impl DetLineElement {
    pub fn new(reference: Vec<RationalMatrix>, coordinate: Rational) -> Result<Self> {
        if coordinate.is_zero() {
            return Err(Error::Singular);
        }
        for (q, m) in reference.iter().enumerate() {
            if !m.is_square() {
                return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
            }
            if det(m)?.is_zero() {
                return Err(Error::NotAHomologyBasis { degree: q });
            }
        }
        Ok(DetLineElement { reference, coordinate })
    }

    /// `det` of the frame basis itself.
    pub fn unit(betti: &[usize]) -> Self {
        DetLineElement { reference: betti.iter().map(|&b| RationalMatrix::identity(b)).collect(), coordinate: Rational::one() }
    }

    pub fn reference(&self) -> &[RationalMatrix] {
        &self.reference
    }

    pub fn coordinate(&self) -> &Rational {
        &self.coordinate
    }

    pub fn scaled(&self, lambda: &Rational) -> Result<Self> {
        DetLineElement::new(self.reference.clone(), &self.coordinate * lambda)
    }

    /// The same element written against another reference basis.
    pub fn rebased(&self, reference: Vec<RationalMatrix>) -> Result<Self> {
        check_shapes(&self.reference, &reference)?;
        let signed = signed_volume_ratio(&self.reference, &reference)?;
        DetLineElement::new(reference, &self.coordinate * signed)
    }

    fn dims(&self) -> Vec<usize> {
        self.reference.iter().map(RationalMatrix::rows).collect()
    }
}

/// A norm on a determinant line: `value` is the norm of `det reference`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionNorm {
    reference: Vec<RationalMatrix>,
    value: Rational,
}

impl TorsionNorm {
    pub fn new(reference: Vec<RationalMatrix>, value: Rational) -> Result<Self> {
        if !value.is_positive() {
            return Err(Error::Singular);
        }
        DetLineElement::new(reference.clone(), Rational::one())?;
        Ok(TorsionNorm { reference, value })
    }

    pub fn reference(&self) -> &[RationalMatrix] {
        &self.reference
    }

    /// Norm of the stored reference element.
    pub fn value(&self) -> &Rational {
        &self.value
    }

    /// Norm of the frame unit `det I`.
    pub fn value_at_unit(&self) -> Rational {
        let betti: Vec<usize> = self.reference.iter().map(RationalMatrix::rows).collect();
        evaluate(self, &DetLineElement::unit(&betti)).expect("shapes agree")
    }

    /// Equality as functions on the determinant line.
    pub fn agrees_with(&self, other: &TorsionNorm) -> bool {
        check_shapes(&self.reference, &other.reference).is_ok() && self.value_at_unit() == other.value_at_unit()
    }
}

fn check_shapes(a: &[RationalMatrix], b: &[RationalMatrix]) -> Result<()> {
    let len = a.len().max(b.len());
    for q in 0..len {
        let da = a.get(q).map_or(0, RationalMatrix::rows);
        let db = b.get(q).map_or(0, RationalMatrix::rows);
        if da != db {
            return Err(Error::DimensionMismatch(alloc::format!(
                "homology of dimension {da} and {db} in degree {q}"
            )));
        }
    }
    Ok(())
}

fn degree_det(m: Option<&RationalMatrix>) -> Result<Rational> {
    match m {
        Some(m) => det(m),
        None => Ok(Rational::one()),
    }
}

// prod_q (det from_q / det to_q)^((-1)^q), signed
fn signed_volume_ratio(from: &[RationalMatrix], to: &[RationalMatrix]) -> Result<Rational> {
    let mut r = Rational::one();
    for q in 0..from.len().max(to.len()) {
        let ratio = degree_det(from.get(q))? / degree_det(to.get(q))?;
        if q % 2 == 0 {
            r *= ratio;
        } else {
            r /= ratio;
        }
    }
    Ok(r)
}

fn volume_ratio(from: &[RationalMatrix], to: &[RationalMatrix]) -> Result<Rational> {
    Ok(signed_volume_ratio(from, to)?.abs())
}

/// `|coordinate| * [E / R] * value` where `[E / R]` is the alternating
/// product of absolute base-change determinants.
pub fn evaluate(norm: &TorsionNorm, elem: &DetLineElement) -> Result<Rational> {
    check_shapes(&norm.reference, &elem.reference)?;
    if elem.dims() != norm.reference.iter().map(RationalMatrix::rows).collect::<Vec<_>>() {
        return Err(Error::DimensionMismatch("determinant lines of different length".into()));
    }
    Ok(elem.coordinate.abs() * volume_ratio(&elem.reference, &norm.reference)? * &norm.value)
}

/// Transports a norm along a degreewise isomorphism of graded homology,
/// `iso[q]` mapping source coordinates to target coordinates.
pub fn pushforward(norm: &TorsionNorm, iso: &[RationalMatrix]) -> Result<TorsionNorm> {
    if iso.len() != norm.reference.len() {
        return Err(Error::DimensionMismatch("isomorphism has the wrong number of degrees".into()));
    }
    let mut reference = Vec::with_capacity(iso.len());
    for (a, r) in iso.iter().zip(&norm.reference) {
        if !a.is_square() || a.cols() != r.rows() {
            return Err(Error::DimensionMismatch("isomorphism does not match homology dimensions".into()));
        }
        if det(a)?.is_zero() {
            return Err(Error::Singular);
        }
        reference.push(a.mul(r)?);
    }
    Ok(TorsionNorm { reference, value: norm.value.clone() })
}

/// The Reidemeister norm: `det h` has norm `tau(C; h)`. Coordinates are
/// those of [`DetLine::of`].
pub fn reidemeister_norm(complex: &BasedChainComplex, h: &HomologyBasis) -> Result<TorsionNorm> {
    let line = DetLine::of(complex)?;
    reidemeister_norm_in(&line, complex, h)
}

/// The Reidemeister norm in the coordinates of a given determinant line.
pub fn reidemeister_norm_in(line: &DetLine, complex: &BasedChainComplex, h: &HomologyBasis) -> Result<TorsionNorm> {
    let value = torsion(complex, h)?.into_inner();
    let reference = line.frame.basis_matrices(h)?;
    Ok(TorsionNorm { reference, value })
}
