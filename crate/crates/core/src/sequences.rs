//! Mayer–Vietoris sequences of two-piece covers, gluing and Künneth
//! identities for classical and intersection torsion.
//!
//! For a cover `M = M1 ∪ M2` with `A = M1 ∩ M2` the homology sequence is
//! graded as an acyclic based complex with
//!
//! ```text
//! E_{3q} = H_q(M),  E_{3q+1} = H_q(M1) ⊕ H_q(M2),  E_{3q+2} = H_q(A)
//! ```
//!
//! and differentials `x -> (x, x)`, `(y, z) -> y - z` and the connecting map.
//! With this grading the gluing identity reads
//! `tau(M) tau(A) tau(E) = tau(M1) tau(M2)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::chain::{
    acyclic_torsion_by_contraction, betti_numbers, homology, torsion, BasedChainComplex, HomologyBasis, HomologyFrame,
};
use crate::error::{Error, Result};
use crate::linalg::{det, express_in_family, rational_pow, Chain, Rational, RationalMatrix};
use crate::spaces::{product, product_subcomplex, shuffle_product, transfer_chain, Simplex, SimplicialComplex};
use crate::stratified::{ChainModel, Perversity, StratifiedComplex, Stratum};

/// A cover of a complex by two subcomplexes on the same vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    space: SimplicialComplex,
    first: SimplicialComplex,
    second: SimplicialComplex,
    intersection: SimplicialComplex,
}

impl Cover {
    pub fn new(space: SimplicialComplex, first: SimplicialComplex, second: SimplicialComplex) -> Result<Self> {
        for piece in [&first, &second] {
            if piece.num_labels() != space.num_labels() || !piece.is_subcomplex_of(&space) {
                return Err(Error::NotASubcomplex("cover piece is not a subcomplex of the space".into()));
            }
        }
        if first.union(&second)? != space {
            return Err(Error::CoverNotExhaustive);
        }
        let intersection = first.intersection(&second)?;
        Ok(Cover { space, first, second, intersection })
    }

    /// Assigns each maximal simplex (in sorted order) to the first piece
    /// (`1`), the second (`2`) or both (`3`).
    pub fn from_assignment(space: &SimplicialComplex, assignment: &[u8]) -> Result<Self> {
        let maximal = space.maximal_simplices();
        if assignment.len() != maximal.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} assignments for {} maximal simplices",
                assignment.len(),
                maximal.len()
            )));
        }
        let pick = |bit: u8| -> Result<SimplicialComplex> {
            let gens: Vec<Simplex> =
                maximal.iter().zip(assignment).filter(|(_, &a)| a & bit != 0).map(|(s, _)| s.clone()).collect();
            space.subcomplex(&gens)
        };
        Cover::new(space.clone(), pick(1)?, pick(2)?)
    }

    pub fn space(&self) -> &SimplicialComplex {
        &self.space
    }

    pub fn first(&self) -> &SimplicialComplex {
        &self.first
    }

    pub fn second(&self) -> &SimplicialComplex {
        &self.second
    }

    pub fn intersection(&self) -> &SimplicialComplex {
        &self.intersection
    }
}

/// Chain models of the whole space, both pieces and their intersection.
#[derive(Clone, Debug)]
pub struct CoverModels {
    pub whole: ChainModel,
    pub first: ChainModel,
    pub second: ChainModel,
    pub intersection: ChainModel,
}

impl CoverModels {
    pub fn classical(cover: &Cover) -> Self {
        CoverModels {
            whole: ChainModel::classical(&cover.space),
            first: ChainModel::classical(&cover.first),
            second: ChainModel::classical(&cover.second),
            intersection: ChainModel::classical(&cover.intersection),
        }
    }

    /// Intersection complexes of the pieces with the restricted strata.
    pub fn intersection(strat: &StratifiedComplex, p: &Perversity, cover: &Cover) -> Result<Self> {
        if strat.complex() != &cover.space {
            return Err(Error::NotASubcomplex("cover is not a cover of the stratified space".into()));
        }
        Ok(CoverModels {
            whole: ChainModel::intersection(strat, p)?,
            first: ChainModel::intersection(&strat.restrict(&cover.first)?, p)?,
            second: ChainModel::intersection(&strat.restrict(&cover.second)?, p)?,
            intersection: ChainModel::intersection(&strat.restrict(&cover.intersection)?, p)?,
        })
    }

    pub fn canonical_bases(&self) -> CoverBases {
        CoverBases {
            whole: homology(self.whole.complex()).basis,
            first: homology(self.first.complex()).basis,
            second: homology(self.second.complex()).basis,
            intersection: homology(self.intersection.complex()).basis,
        }
    }
}

/// Homology bases of the four terms, in model coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverBases {
    pub whole: HomologyBasis,
    pub first: HomologyBasis,
    pub second: HomologyBasis,
    pub intersection: HomologyBasis,
}

/// The Mayer–Vietoris sequence as an acyclic complex based by the chosen
/// homology bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongExactSequence {
    complex: BasedChainComplex,
}

impl LongExactSequence {
    /// Wraps a complex, which must be acyclic.
    pub fn new(complex: BasedChainComplex) -> Result<Self> {
        if let Some(q) = betti_numbers(&complex).iter().position(|&b| b != 0) {
            return Err(Error::NotExact(q));
        }
        Ok(LongExactSequence { complex })
    }

    pub fn complex(&self) -> &BasedChainComplex {
        &self.complex
    }
}

// model coordinates on `from` -> model coordinates on `to` through cells
fn carry(from: &ChainModel, to: &ChainModel, q: usize, v: &[Rational]) -> Result<Chain> {
    let cells = transfer_chain(from.space(), to.space(), q, &from.to_cells(q, v))?;
    to.from_cells(q, &cells)
}

fn generators(model: &ChainModel, q: usize) -> Vec<Chain> {
    let n = model.complex().dim(q);
    (0..n)
        .map(|i| {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::one();
            e
        })
        .collect()
}

struct Lifter {
    family: Vec<Chain>,
    split: usize,
}

impl Lifter {
    // generators of both pieces carried into the cells of the whole space
    fn new(models: &CoverModels, q: usize) -> Result<Self> {
        let mut family = Vec::new();
        for piece in [&models.first, &models.second] {
            for g in generators(piece, q) {
                family.push(transfer_chain(piece.space(), models.whole.space(), q, &piece.to_cells(q, &g))?);
            }
        }
        Ok(Lifter { family, split: models.first.complex().dim(q) })
    }

    // (y, w) in piece model coordinates with y + w = the given cell chain
    fn lift(&self, cells: &[Rational]) -> Result<(Chain, Chain)> {
        let c = express_in_family(&self.family, cells)
            .ok_or_else(|| Error::IncompatibleCover("a chain of the space does not split over the pieces".into()))?;
        let w = c[self.split..].to_vec();
        let mut y = c;
        y.truncate(self.split);
        Ok((y, w))
    }
}

/// Builds the sequence from models and bases.
pub fn mayer_vietoris_with(models: &CoverModels, bases: &CoverBases) -> Result<LongExactSequence> {
    // the short sequence of chain groups must be exact
    compatibility_factor(models)?;
    let frame_m = HomologyFrame::new(models.whole.complex(), &bases.whole)?;
    let frame_1 = HomologyFrame::new(models.first.complex(), &bases.first)?;
    let frame_2 = HomologyFrame::new(models.second.complex(), &bases.second)?;
    let frame_a = HomologyFrame::new(models.intersection.complex(), &bases.intersection)?;
    let len = [&models.whole, &models.first, &models.second, &models.intersection]
        .iter()
        .map(|m| m.complex().len())
        .max()
        .unwrap_or(0);
    let b = |f: &HomologyFrame, q: usize| f.betti().get(q).copied().unwrap_or(0);
    let mut dims = Vec::with_capacity(3 * len);
    for q in 0..len {
        dims.push(b(&frame_m, q));
        dims.push(b(&frame_1, q) + b(&frame_2, q));
        dims.push(b(&frame_a, q));
    }
    let mut boundaries: Vec<RationalMatrix> = Vec::with_capacity(dims.len().saturating_sub(1));
    for q in 0..len {
        // connecting map H_q(M) -> H_{q-1}(A)
        if q > 0 {
            let lifter = Lifter::new(models, q)?;
            let mut cols = Vec::new();
            for z in bases.whole.degree(q) {
                let (y, _) = lifter.lift(&models.whole.to_cells(q, z))?;
                let dy = models.first.complex().apply_boundary(q, &y)?;
                let x = carry(&models.first, &models.intersection, q - 1, &dy)
                    .map_err(|_| Error::IncompatibleCover("connecting map leaves the intersection".into()))?;
                cols.push(frame_a.class_coordinates(q - 1, &x)?);
            }
            boundaries.push(RationalMatrix::from_columns(dims[3 * q - 1], &cols)?);
        }
        // (y, z) -> y - z
        let mut cols = Vec::new();
        for (piece, basis, sign) in [(&models.first, &bases.first, false), (&models.second, &bases.second, true)] {
            for y in basis.degree(q) {
                let mut c = frame_m.class_coordinates(q, &carry(piece, &models.whole, q, y)?)?;
                if sign {
                    c.iter_mut().for_each(|x| *x = -x.clone());
                }
                cols.push(c);
            }
        }
        boundaries.push(RationalMatrix::from_columns(dims[3 * q], &cols)?);
        // x -> (x, x)
        let mut cols = Vec::new();
        for x in bases.intersection.degree(q) {
            let mut c = frame_1.class_coordinates(q, &carry(&models.intersection, &models.first, q, x)?)?;
            c.extend(frame_2.class_coordinates(q, &carry(&models.intersection, &models.second, q, x)?)?);
            cols.push(c);
        }
        boundaries.push(RationalMatrix::from_columns(dims[3 * q + 1], &cols)?);
    }
    let complex = BasedChainComplex::new(dims, boundaries)?;
    LongExactSequence::new(complex)
}

/// Classical Mayer–Vietoris sequence with canonical homology bases.
pub fn mayer_vietoris(cover: &Cover) -> Result<LongExactSequence> {
    let models = CoverModels::classical(cover);
    mayer_vietoris_with(&models, &models.canonical_bases())
}

/// Torsion of an exact sequence.
pub fn les_torsion(seq: &LongExactSequence) -> Result<Rational> {
    Ok(torsion(&seq.complex, &HomologyBasis::empty())?.into_inner())
}

/// `prod_q [c~_q / c_q]^((-1)^q)` comparing the basis of the direct sum of
/// the pieces with the basis built from the intersection and lifts from the
/// whole space. It is 1 for cellular chains.
pub fn compatibility_factor(models: &CoverModels) -> Result<Rational> {
    let len = models.first.complex().len().max(models.second.complex().len()).max(models.whole.complex().len());
    let mut factor = Rational::one();
    for q in 0..len {
        let n1 = models.first.complex().dim(q);
        let n = n1 + models.second.complex().dim(q);
        let na = models.intersection.complex().dim(q);
        let nm = models.whole.complex().dim(q);
        if na + nm != n {
            return Err(Error::IncompatibleCover(format!(
                "chain dimensions {na} + {nm} != {n} in degree {q}"
            )));
        }
        if n == 0 {
            continue;
        }
        let mut cols = Vec::with_capacity(n);
        for g in generators(&models.intersection, q) {
            let mut c = carry(&models.intersection, &models.first, q, &g)?;
            c.extend(carry(&models.intersection, &models.second, q, &g)?);
            cols.push(c);
        }
        let lifter = Lifter::new(models, q)?;
        for g in generators(&models.whole, q) {
            let (y, w) = lifter.lift(&models.whole.to_cells(q, &g))?;
            let mut c = y;
            c.extend(w.into_iter().map(|x| -x));
            cols.push(c);
        }
        let f = det(&RationalMatrix::from_columns(n, &cols)?)?.abs();
        if f.is_zero() {
            return Err(Error::IncompatibleCover(format!("short sequence is not exact in degree {q}")));
        }
        if q % 2 == 0 {
            factor *= f;
        } else {
            factor /= f;
        }
    }
    Ok(factor)
}

/// Both sides of `tau(M) tau(A) tau(E) F = tau(M1) tau(M2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingReport {
    pub whole: Rational,
    pub first: Rational,
    pub second: Rational,
    pub intersection: Rational,
    pub sequence: Rational,
    pub compatibility: Rational,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl GluingReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn gluing_check(models: &CoverModels, bases: &CoverBases) -> Result<GluingReport> {
    let seq = mayer_vietoris_with(models, bases)?;
    let sequence = les_torsion(&seq)?;
    let compatibility = compatibility_factor(models)?;
    let whole = torsion(models.whole.complex(), &bases.whole)?.into_inner();
    let first = torsion(models.first.complex(), &bases.first)?.into_inner();
    let second = torsion(models.second.complex(), &bases.second)?.into_inner();
    let intersection = torsion(models.intersection.complex(), &bases.intersection)?.into_inner();
    let lhs = &whole * &intersection * &sequence * &compatibility;
    let rhs = &first * &second;
    Ok(GluingReport { whole, first, second, intersection, sequence, compatibility, lhs, rhs })
}

/// The sequence torsion computed twice, and the norm-level gluing identity
/// `||Phi^{-1}(a ⊗ b ⊗ c^{-1})||_M = ||a||_{M1} ||b||_{M2} / ||c||_A`
/// evaluated on `a = det h_1`, `b = det h_2`, `c = det h_A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiReport {
    /// `tau(E)` from pivot columns.
    pub sequence_pivot: Rational,
    /// `tau(E)` from a chain contraction.
    pub sequence_contraction: Rational,
    pub norm_lhs: Rational,
    pub norm_rhs: Rational,
}

impl PhiReport {
    pub fn holds(&self) -> bool {
        self.sequence_pivot == self.sequence_contraction && self.norm_lhs == self.norm_rhs
    }
}

/// With `Phi^{-1}(det h_1 ⊗ det h_2 ⊗ det h_A^{-1}) = tau(E) F det h_M` the
/// left side is `tau(E) F tau(M; h_M)`.
pub fn phi_check(models: &CoverModels, bases: &CoverBases) -> Result<PhiReport> {
    let seq = mayer_vietoris_with(models, bases)?;
    let sequence_pivot = les_torsion(&seq)?;
    let sequence_contraction = acyclic_torsion_by_contraction(seq.complex())?.into_inner();
    let compatibility = compatibility_factor(models)?;
    let whole = torsion(models.whole.complex(), &bases.whole)?.into_inner();
    let norm_lhs = &sequence_contraction * &compatibility * whole;
    let norm_rhs = torsion(models.first.complex(), &bases.first)?.into_inner()
        * torsion(models.second.complex(), &bases.second)?.into_inner()
        / torsion(models.intersection.complex(), &bases.intersection)?.into_inner();
    Ok(PhiReport { sequence_pivot, sequence_contraction, norm_lhs, norm_rhs })
}

/// Eilenberg–Zilber image of `h_W ⊗ h_K`, ordered by the degree of the
/// first factor, then by the first and second basis vectors.
pub fn shuffle_basis(
    w: &SimplicialComplex,
    k: &SimplicialComplex,
    prod: &SimplicialComplex,
    h_w: &HomologyBasis,
    h_k: &HomologyBasis,
) -> Result<HomologyBasis> {
    let top = prod.dimension().map_or(0, |d| d + 1);
    let mut degrees = vec![Vec::new(); top];
    for (n, slot) in degrees.iter_mut().enumerate() {
        for p in 0..=n {
            let q = n - p;
            for a in h_w.degree(p) {
                for b in h_k.degree(q) {
                    slot.push(shuffle_product(w, k, prod, p, a, q, b)?);
                }
            }
        }
    }
    Ok(HomologyBasis::new(degrees))
}

/// Both sides of `tau(W x K; h_W ⊗ h_K) = tau(W)^chi(K) tau(K)^chi(W)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KunnethReport {
    pub product: Rational,
    pub first: Rational,
    pub second: Rational,
    pub first_exponent: i64,
    pub second_exponent: i64,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl KunnethReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Classical product formula with canonical bases on the factors.
pub fn kunneth_check(w: &SimplicialComplex, k: &SimplicialComplex) -> Result<KunnethReport> {
    let (cw, ck) = (w.chain_complex(), k.chain_complex());
    let (h_w, h_k) = (homology(&cw).basis, homology(&ck).basis);
    kunneth_check_with(w, k, &h_w, &h_k)
}

pub fn kunneth_check_with(
    w: &SimplicialComplex,
    k: &SimplicialComplex,
    h_w: &HomologyBasis,
    h_k: &HomologyBasis,
) -> Result<KunnethReport> {
    let prod = product(w, k);
    let h = shuffle_basis(w, k, &prod, h_w, h_k)?;
    let product_torsion = torsion(&prod.chain_complex(), &h)?.into_inner();
    let first = torsion(&w.chain_complex(), h_w)?.into_inner();
    let second = torsion(&k.chain_complex(), h_k)?.into_inner();
    let (first_exponent, second_exponent) = (k.euler_characteristic(), w.euler_characteristic());
    let rhs = rational_pow(&first, first_exponent) * rational_pow(&second, second_exponent);
    Ok(KunnethReport { lhs: product_torsion.clone(), product: product_torsion, first, second, first_exponent, second_exponent, rhs })
}

/// Product stratification `W x S` of a smooth `W` with a stratified `K`.
pub fn product_stratification(w: &SimplicialComplex, k: &StratifiedComplex) -> Result<StratifiedComplex> {
    let prod = product(w, k.complex());
    let strata = k
        .strata()
        .iter()
        .map(|s| Stratum { complex: product_subcomplex(w, k.complex(), &prod, w, &s.complex), codimension: s.codimension })
        .collect();
    StratifiedComplex::with_dimension(prod, strata, w.dimension().unwrap_or(0) + k.dimension())
}

/// Intersection product formula for smooth `W` and stratified `K`, with the
/// Euler characteristic of the intersection complex of `K` as exponent.
pub fn intersection_kunneth_check(w: &SimplicialComplex, k: &StratifiedComplex, p: &Perversity) -> Result<KunnethReport> {
    let model_k = ChainModel::intersection(k, p)?;
    let strat_prod = product_stratification(w, k)?;
    let model_p = ChainModel::intersection(&strat_prod, p)?;
    let h_w = homology(&w.chain_complex()).basis;
    let h_k_model = homology(model_k.complex()).basis;
    let h_k = model_k.basis_to_cells(&h_k_model);
    let h_cells = shuffle_basis(w, k.complex(), strat_prod.complex(), &h_w, &h_k)?;
    let h = model_p.basis_from_cells(&h_cells)?;
    let product_torsion = torsion(model_p.complex(), &h)?.into_inner();
    let first = torsion(&w.chain_complex(), &h_w)?.into_inner();
    let second = torsion(model_k.complex(), &h_k_model)?.into_inner();
    let (first_exponent, second_exponent) = (model_k.complex().euler_characteristic(), w.euler_characteristic());
    let rhs = rational_pow(&first, first_exponent) * rational_pow(&second, second_exponent);
    Ok(KunnethReport { lhs: product_torsion.clone(), product: product_torsion, first, second, first_exponent, second_exponent, rhs })
}
