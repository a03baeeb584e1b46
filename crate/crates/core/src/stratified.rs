//! Depth-one stratified simplicial complexes, Goresky–MacPherson
//! perversities, and based intersection chain complexes.
//!
//! A `q`-simplex `s` is allowable for a stratum `S` of codimension `k` when
//! the largest face of `s` lying in `S` has dimension at most
//! `q - k + p(k)` (no face at all is always fine). A chain is allowable when
//! every simplex of its support is. `IC_q` consists of the allowable chains
//! with allowable boundary; its preferred basis is every single simplex that
//! qualifies on its own, followed by an integral basis of the remaining
//! lattice read off a Smith normal form.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::chain::{homology, torsion, BasedChainComplex, HomologyBasis, TorsionScalar};
use crate::detline::{pushforward, reidemeister_norm, DetLine, TorsionNorm};
use crate::error::{Error, Result};
use crate::linalg::{det, smith_normal_form, Chain, IntegerMatrix, Rational, RationalMatrix, SpanSolver};
use crate::spaces::{Simplex, SimplicialComplex, Subdivision};

/// A perversity `p(k)` for codimensions `k >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Perversity {
    /// `floor((k - 2) / 2)`
    LowerMiddle,
    /// `ceil((k - 2) / 2)`
    UpperMiddle,
    Zero,
    /// `k - 2`
    Top,
    /// Explicit values `p(2), p(3), ...`.
    Table(Vec<usize>),
}

impl Perversity {
    /// Validated explicit table starting at codimension 2.
    pub fn table(values: Vec<usize>) -> Result<Self> {
        match values.first() {
            None => return Err(Error::InvalidPerversity("empty table".into())),
            Some(&v) if v != 0 => return Err(Error::InvalidPerversity(format!("p(2) = {v}, expected 0"))),
            _ => {}
        }
        for (i, w) in values.windows(2).enumerate() {
            if w[1] < w[0] || w[1] > w[0] + 1 {
                return Err(Error::InvalidPerversity(format!(
                    "p({}) = {} does not follow p({}) = {}",
                    i + 3,
                    w[1],
                    i + 2,
                    w[0]
                )));
            }
        }
        Ok(Perversity::Table(values))
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "lower-middle" => Ok(Perversity::LowerMiddle),
            "upper-middle" => Ok(Perversity::UpperMiddle),
            "zero" => Ok(Perversity::Zero),
            "top" => Ok(Perversity::Top),
            other => Err(Error::InvalidPerversity(format!("unknown perversity {other:?}"))),
        }
    }

    pub fn name(&self) -> Option<&'static str> {
        match self {
            Perversity::LowerMiddle => Some("lower-middle"),
            Perversity::UpperMiddle => Some("upper-middle"),
            Perversity::Zero => Some("zero"),
            Perversity::Top => Some("top"),
            Perversity::Table(_) => None,
        }
    }

    pub fn value(&self, k: usize) -> Result<usize> {
        if k < 2 {
            return Err(Error::CodimensionTooSmall(k));
        }
        match self {
            Perversity::LowerMiddle => Ok((k - 2) / 2),
            Perversity::UpperMiddle => Ok((k - 1) / 2),
            Perversity::Zero => Ok(0),
            Perversity::Top => Ok(k - 2),
            Perversity::Table(values) => values.get(k - 2).copied().ok_or(Error::PerversityUndefined(k)),
        }
    }

    /// `self(k) <= other(k)` for `2 <= k <= max_codim`.
    pub fn is_below(&self, other: &Perversity, max_codim: usize) -> Result<bool> {
        for k in 2..=max_codim {
            if self.value(k)? > other.value(k)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub complex: SimplicialComplex,
    pub codimension: usize,
}

/// A simplicial complex with pairwise disjoint closed singular strata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratifiedComplex {
    complex: SimplicialComplex,
    strata: Vec<Stratum>,
    dimension: usize,
}

impl StratifiedComplex {
    pub fn new(complex: SimplicialComplex, strata: Vec<Stratum>) -> Result<Self> {
        let dimension = complex.dimension().unwrap_or(0);
        Self::with_dimension(complex, strata, dimension)
    }

    /// As [`StratifiedComplex::new`] with the ambient dimension given
    /// explicitly, which keeps codimensions meaningful on pieces of a cover.
    pub fn with_dimension(complex: SimplicialComplex, strata: Vec<Stratum>, dimension: usize) -> Result<Self> {
        for (i, s) in strata.iter().enumerate() {
            if s.codimension < 2 {
                return Err(Error::CodimensionTooSmall(s.codimension));
            }
            if s.complex.num_labels() != complex.num_labels() || !s.complex.is_subcomplex_of(&complex) {
                return Err(Error::NotASubcomplex(format!("stratum {i} is not a subcomplex")));
            }
            if let Some(d) = s.complex.dimension() {
                if d + s.codimension > dimension {
                    return Err(Error::DimensionMismatch(format!(
                        "stratum {i} of dimension {d} cannot have codimension {} in dimension {dimension}",
                        s.codimension
                    )));
                }
            }
            for t in &strata[..i] {
                if s.complex.all_simplices().any(|x| t.complex.contains(x)) {
                    return Err(Error::StrataNotDisjoint);
                }
            }
        }
        Ok(StratifiedComplex { complex, strata, dimension })
    }

    /// No singular strata.
    pub fn smooth(complex: SimplicialComplex) -> Self {
        let dimension = complex.dimension().unwrap_or(0);
        StratifiedComplex { complex, strata: Vec::new(), dimension }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// The induced stratification of a subcomplex, codimensions unchanged.
    pub fn restrict(&self, sub: &SimplicialComplex) -> Result<Self> {
        let strata = self
            .strata
            .iter()
            .map(|s| Ok(Stratum { complex: s.complex.intersection(sub)?, codimension: s.codimension }))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|s| !s.complex.is_empty())
            .collect();
        Self::with_dimension(sub.clone(), strata, self.dimension)
    }

    /// The stratification of a barycentric subdivision.
    pub fn subdivide(&self, sd: &Subdivision) -> Result<Self> {
        let strata = self
            .strata
            .iter()
            .map(|s| Stratum { complex: sd.restrict(&s.complex), codimension: s.codimension })
            .collect();
        Self::with_dimension(sd.complex.clone(), strata, self.dimension)
    }
}

/// Depth-one stratification along a subcomplex `b`, with codimension
/// `dim ambient - dim b`.
pub fn stratified_from_embedding(ambient: &SimplicialComplex, b: &SimplicialComplex) -> Result<StratifiedComplex> {
    let m = ambient.dimension().unwrap_or(0);
    let d = b.dimension().ok_or_else(|| Error::NotASubcomplex("empty stratum".into()))?;
    let codimension = m.checked_sub(d).ok_or_else(|| Error::DimensionMismatch("stratum is larger than the space".into()))?;
    if codimension < 2 {
        return Err(Error::CodimensionTooSmall(codimension));
    }
    StratifiedComplex::new(ambient.clone(), vec![Stratum { complex: b.clone(), codimension }])
}

/// Dimension of the largest face of `s` lying in `stratum`.
fn stratum_face_dim(stratum: &SimplicialComplex, s: &[usize]) -> Option<usize> {
    let inside: Vec<usize> = s.iter().copied().filter(|&v| stratum.contains(&[v])).collect();
    if inside.is_empty() {
        return None;
    }
    if stratum.contains(&inside) {
        return Some(inside.len() - 1);
    }
    let n = inside.len();
    let mut best = 0;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best + 1 {
            continue;
        }
        let face: Simplex = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| inside[i]).collect();
        if stratum.contains(&face) {
            best = size - 1;
        }
    }
    Some(best)
}

/// Allowability of a single `q`-simplex.
pub fn allowable_simplex(strat: &StratifiedComplex, p: &Perversity, s: &[usize]) -> Result<bool> {
    let q = s.len() as i64 - 1;
    for stratum in &strat.strata {
        let k = stratum.codimension;
        if let Some(d) = stratum_face_dim(&stratum.complex, s) {
            if d as i64 > q - k as i64 + p.value(k)? as i64 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Allowability of a `q`-chain given in simplex coordinates.
pub fn allowable(chain: &[Rational], q: usize, strat: &StratifiedComplex, p: &Perversity) -> Result<bool> {
    let simplices = strat.complex.simplices(q);
    if chain.len() != simplices.len() {
        return Err(Error::DimensionMismatch(format!("chain of length {} in degree {q}", chain.len())));
    }
    for (x, s) in chain.iter().zip(simplices) {
        if !x.is_zero() && !allowable_simplex(strat, p, s)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Generators of the intersection chain groups, as integral chains in
/// simplex coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionBasis {
    degrees: Vec<Vec<Chain>>,
    singles: Vec<usize>,
}

impl IntersectionBasis {
    pub fn new(degrees: Vec<Vec<Chain>>, singles: Vec<usize>) -> Self {
        IntersectionBasis { degrees, singles }
    }

    pub fn generators(&self, q: usize) -> &[Chain] {
        self.degrees.get(q).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.iter().all(Vec::is_empty)
    }

    /// Number of leading generators that are single simplices.
    pub fn single_cells(&self, q: usize) -> usize {
        self.singles.get(q).copied().unwrap_or(0)
    }

    pub fn is_single(&self, q: usize, i: usize) -> bool {
        i < self.single_cells(q)
    }

    /// The chain `sum_i coords[i] * generator_i` in simplex coordinates.
    pub fn to_cells(&self, q: usize, cells: usize, coords: &[Rational]) -> Chain {
        let mut out = vec![Rational::zero(); cells];
        for (c, g) in coords.iter().zip(self.generators(q)) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(g) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }
}

fn unit(len: usize, i: usize) -> Chain {
    let mut e = vec![Rational::zero(); len];
    e[i] = Rational::from_integer(BigInt::from(1));
    e
}

/// Boundary matrices of the subcomplex spanned by `basis`, each generator's
/// boundary expressed in the generators one degree down.
pub fn based_intersection_complex(strat: &StratifiedComplex, p: &Perversity, basis: &IntersectionBasis) -> Result<BasedChainComplex> {
    let cc = strat.complex.chain_complex();
    let top = cc.len();
    if basis.len() > top {
        return Err(Error::DimensionMismatch("basis has more degrees than the complex".into()));
    }
    let dims: Vec<usize> = (0..top).map(|q| basis.generators(q).len()).collect();
    for q in 0..top {
        for g in basis.generators(q) {
            let boundary_ok = q == 0 || allowable(&cc.apply_boundary(q, g)?, q - 1, strat, p)?;
            if !allowable(g, q, strat, p)? || !boundary_ok {
                return Err(Error::NotASubcomplex(format!("generator in degree {q} is not an intersection chain")));
            }
        }
    }
    let mut boundaries = Vec::with_capacity(top.saturating_sub(1));
    let mut below = SpanSolver::new(basis.generators(0)).map_err(|_| Error::Singular)?;
    for q in 1..top {
        let here = basis.generators(q);
        let solver = SpanSolver::new(here).map_err(|_| Error::Singular)?;
        let mut cols = Vec::with_capacity(here.len());
        for g in here {
            let dg = cc.apply_boundary(q, g)?;
            cols.push(below.coordinates(&dg).map_err(|_| {
                Error::NotASubcomplex(format!("boundary of a generator in degree {q} leaves the span"))
            })?);
        }
        boundaries.push(RationalMatrix::from_columns(dims[q - 1], &cols)?);
        below = solver;
    }
    BasedChainComplex::new(dims, boundaries)
}

/// The intersection chain complex in its preferred basis, with that basis.
pub fn intersection_complex(strat: &StratifiedComplex, p: &Perversity) -> Result<(BasedChainComplex, IntersectionBasis)> {
    let k = &strat.complex;
    let top = k.dimension().map_or(0, |d| d + 1);
    let allowed: Vec<Vec<bool>> = (0..top)
        .map(|q| k.simplices(q).iter().map(|s| allowable_simplex(strat, p, s)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let cc = k.chain_complex();
    let mut degrees = Vec::with_capacity(top);
    let mut singles = Vec::with_capacity(top);
    for q in 0..top {
        let n = k.count(q);
        let bad_rows: Vec<usize> = if q == 0 { Vec::new() } else { (0..k.count(q - 1)).filter(|&i| !allowed[q - 1][i]).collect() };
        let d = cc.boundary(q);
        let boundary_ok = |j: usize| bad_rows.iter().all(|&i| d.is_none_or(|d| d[(i, j)].is_zero()));
        let mut single = Vec::new();
        let mut rest = Vec::new();
        for j in (0..n).filter(|&j| allowed[q][j]) {
            if boundary_ok(j) {
                single.push(j);
            } else {
                rest.push(j);
            }
        }
        let mut gens: Vec<Chain> = single.iter().map(|&j| unit(n, j)).collect();
        if !rest.is_empty() {
            let d = d.expect("a simplex with bad boundary has positive degree");
            let mut constraint = IntegerMatrix::zeros(bad_rows.len(), rest.len());
            for (a, &i) in bad_rows.iter().enumerate() {
                for (b, &j) in rest.iter().enumerate() {
                    constraint[(a, b)] = d[(i, j)].to_integer();
                }
            }
            for v in smith_normal_form(&constraint).kernel_lattice() {
                let mut chain = vec![Rational::zero(); n];
                for (x, &j) in v.iter().zip(&rest) {
                    chain[j] = Rational::from_integer(x.clone());
                }
                gens.push(chain);
            }
        }
        singles.push(single.len());
        degrees.push(gens);
    }
    let basis = IntersectionBasis { degrees, singles };
    let complex = based_intersection_complex(strat, p, &basis)?;
    Ok((complex, basis))
}

pub fn intersection_torsion(strat: &StratifiedComplex, p: &Perversity, h: &HomologyBasis) -> Result<TorsionScalar> {
    let (ic, _) = intersection_complex(strat, p)?;
    torsion(&ic, h)
}

/// The intersection Reidemeister norm, in the coordinates of the canonical
/// basis of intersection homology.
pub fn intersection_norm(strat: &StratifiedComplex, p: &Perversity) -> Result<TorsionNorm> {
    let (ic, _) = intersection_complex(strat, p)?;
    reidemeister_norm(&ic, &homology(&ic).basis)
}

/// A chain complex together with generators written in simplex
/// coordinates: the cellular complex itself, or an intersection complex.
#[derive(Clone, Debug)]
pub struct ChainModel {
    space: SimplicialComplex,
    complex: BasedChainComplex,
    basis: Option<IntersectionBasis>,
    solvers: Option<Vec<SpanSolver>>,
}

impl ChainModel {
    pub fn classical(space: &SimplicialComplex) -> Self {
        ChainModel { space: space.clone(), complex: space.chain_complex(), basis: None, solvers: None }
    }

    pub fn intersection(strat: &StratifiedComplex, p: &Perversity) -> Result<Self> {
        let (complex, basis) = intersection_complex(strat, p)?;
        let solvers = (0..complex.len())
            .map(|q| SpanSolver::new(basis.generators(q)))
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainModel { space: strat.complex.clone(), complex, basis: Some(basis), solvers: Some(solvers) })
    }

    pub fn space(&self) -> &SimplicialComplex {
        &self.space
    }

    pub fn complex(&self) -> &BasedChainComplex {
        &self.complex
    }

    pub fn basis(&self) -> Option<&IntersectionBasis> {
        self.basis.as_ref()
    }

    /// Model coordinates to simplex coordinates.
    pub fn to_cells(&self, q: usize, coords: &[Rational]) -> Chain {
        match &self.basis {
            Some(b) => b.to_cells(q, self.space.count(q), coords),
            None => coords.to_vec(),
        }
    }

    /// Simplex coordinates to model coordinates; fails off the model.
    pub fn from_cells(&self, q: usize, chain: &[Rational]) -> Result<Chain> {
        match &self.solvers {
            Some(s) => match s.get(q) {
                Some(solver) => solver.coordinates(chain),
                None if chain.iter().all(Zero::is_zero) => Ok(Vec::new()),
                None => Err(Error::NotInSpan),
            },
            None => Ok(chain.to_vec()),
        }
    }

    /// Homology basis mapped to simplex coordinates.
    pub fn basis_to_cells(&self, h: &HomologyBasis) -> HomologyBasis {
        HomologyBasis::new((0..h.len()).map(|q| h.degree(q).iter().map(|v| self.to_cells(q, v)).collect()).collect())
    }

    /// Homology basis given in simplex coordinates, mapped into the model.
    pub fn basis_from_cells(&self, h: &HomologyBasis) -> Result<HomologyBasis> {
        let degrees = (0..h.len())
            .map(|q| h.degree(q).iter().map(|v| self.from_cells(q, v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(HomologyBasis::new(degrees))
    }
}

/// Matrices of a chain map between models on homology, in the canonical
/// frames of source and target. `map(q, chain)` acts on simplex coordinates.
pub fn induced_on_homology(
    source: &ChainModel,
    target: &ChainModel,
    map: impl Fn(usize, &[Rational]) -> Result<Chain>,
) -> Result<Vec<RationalMatrix>> {
    let h = homology(&source.complex).basis;
    let target_line = DetLine::of(&target.complex)?;
    let len = source.complex.len().max(target.complex.len());
    let mut out = Vec::with_capacity(len);
    for q in 0..len {
        let images = h
            .degree(q)
            .iter()
            .map(|v| target.from_cells(q, &map(q, &source.to_cells(q, v))?))
            .collect::<Result<Vec<_>>>()?;
        out.push(target_line.frame().coordinate_matrix(q, &images).or_else(|e| match e {
            Error::NotACycle { .. } if images.is_empty() => Ok(RationalMatrix::zeros(0, 0)),
            e => Err(e),
        })?);
    }
    Ok(out)
}

/// Both sides of the comparison between the intersection and the classical
/// torsion norm, evaluated on the same determinant-line element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormComparison {
    pub intersection_betti: Vec<usize>,
    pub classical_betti: Vec<usize>,
    /// `tau(IC; h)` for the canonical intersection homology basis `h`.
    pub intersection_torsion: Rational,
    /// `tau(C; i h)` with `i` the inclusion of intersection chains.
    pub classical_torsion: Rational,
    /// Intersection norm transported along `i_*`, at the classical unit.
    pub intersection_norm: Rational,
    /// Classical norm at the classical unit.
    pub classical_norm: Rational,
}

impl NormComparison {
    pub fn holds(&self) -> bool {
        self.intersection_torsion == self.classical_torsion && self.intersection_norm == self.classical_norm
    }
}

/// Compares the intersection and classical Reidemeister norms through the
/// inclusion `IC -> C`, which must be a quasi-isomorphism.
pub fn compare_norms(strat: &StratifiedComplex, p: &Perversity) -> Result<NormComparison> {
    let ic = ChainModel::intersection(strat, p)?;
    let cl = ChainModel::classical(&strat.complex);
    let h_ic = homology(&ic.complex).basis;
    let intersection_betti = h_ic.sizes();
    let classical_betti = homology(&cl.complex).betti;
    let iso = induced_on_homology(&ic, &cl, |_, v| Ok(v.to_vec()))?;
    for (q, m) in iso.iter().enumerate() {
        if !m.is_square() || det(m)?.is_zero() {
            return Err(Error::NotAHomologyBasis { degree: q });
        }
    }
    let intersection_torsion = torsion(&ic.complex, &h_ic)?.into_inner();
    let classical_torsion = torsion(&cl.complex, &ic.basis_to_cells(&h_ic))?.into_inner();
    let transported = pushforward(&reidemeister_norm(&ic.complex, &h_ic)?, &iso)?;
    let classical = reidemeister_norm(&cl.complex, &homology(&cl.complex).basis)?;
    Ok(NormComparison {
        intersection_betti,
        classical_betti,
        intersection_torsion,
        classical_torsion,
        intersection_norm: transported.value_at_unit(),
        classical_norm: classical.value_at_unit(),
    })
}

/// Replaces the composite generators in degree `q` by their combinations
/// through the unimodular matrix `u`: column `j` of `u` gives the new
/// generator `j`.
pub fn recombine_composites(basis: &IntersectionBasis, q: usize, u: &IntegerMatrix) -> Result<IntersectionBasis> {
    let singles = basis.single_cells(q);
    let composites = &basis.generators(q)[singles..];
    if !u.is_square() || u.rows() != composites.len() {
        return Err(Error::DimensionMismatch(format!("expected a {0}x{0} matrix", composites.len())));
    }
    if det(&u.to_rational())?.abs() != Rational::from_integer(BigInt::from(1)) {
        return Err(Error::NotUnimodular);
    }
    let len = composites.first().map_or(0, Vec::len);
    let mut degrees = basis.degrees.clone();
    for (j, slot) in degrees[q][singles..].iter_mut().enumerate() {
        let mut v = vec![Rational::zero(); len];
        for (i, g) in composites.iter().enumerate() {
            let c = Rational::from_integer(u[(i, j)].clone());
            if c.is_zero() {
                continue;
            }
            for (o, x) in v.iter_mut().zip(g) {
                *o += &c * x;
            }
        }
        *slot = v;
    }
    Ok(IntersectionBasis { degrees, singles: basis.singles.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::spaces::{cone, cone_apex, product, sphere, SimplicialComplex};

    fn apex_stratified(base: &SimplicialComplex, codimension: usize) -> StratifiedComplex {
        let c = cone(base);
        let apex = cone_apex(base);
        let b = c.subcomplex(&[vec![apex]]).unwrap();
        StratifiedComplex::new(c, vec![Stratum { complex: b, codimension }]).unwrap()
    }

    #[test]
    fn perversity_values() {
        assert_eq!(Perversity::LowerMiddle.value(2).unwrap(), 0);
        assert_eq!(Perversity::LowerMiddle.value(5).unwrap(), 1);
        assert_eq!(Perversity::UpperMiddle.value(3).unwrap(), 1);
        assert_eq!(Perversity::UpperMiddle.value(4).unwrap(), 1);
        assert!(Perversity::table(vec![1]).is_err());
        assert!(Perversity::table(vec![0, 2]).is_err());
        assert_eq!(Perversity::table(vec![0, 1]).unwrap().value(4), Err(Error::PerversityUndefined(4)));
        assert!(Perversity::LowerMiddle.is_below(&Perversity::UpperMiddle, 8).unwrap());
        assert!(!Perversity::Top.is_below(&Perversity::Zero, 3).unwrap());
    }

    #[test]
    fn allowability_on_cone_of_circle() {
        let s = apex_stratified(&sphere(1), 2);
        let apex = cone_apex(&sphere(1));
        let p = Perversity::LowerMiddle;
        assert!(!allowable_simplex(&s, &p, &[apex]).unwrap());
        assert!(allowable_simplex(&s, &p, &[0, 1, apex]).unwrap());
        assert!(!allowable_simplex(&s, &p, &[0, apex]).unwrap());
        let smooth = StratifiedComplex::smooth(sphere(2));
        assert!(allowable(&[rat(1), rat(2), rat(0), rat(1)], 0, &smooth, &p).unwrap());
    }

    #[test]
    fn cone_of_circle_intersection_homology() {
        let s = apex_stratified(&sphere(1), 2);
        let (ic, basis) = intersection_complex(&s, &Perversity::LowerMiddle).unwrap();
        assert_eq!(ic.dims(), &[3, 3, 1]);
        assert_eq!(basis.single_cells(2), 0);
        assert_eq!(homology(&ic).betti, vec![1, 0, 0]);
        let h = homology(&ic).basis;
        assert_eq!(torsion(&ic, &h).unwrap().value(), &rat(1));
    }

    #[test]
    fn cone_of_torus_depends_on_perversity() {
        let torus = product(&sphere(1), &sphere(1));
        let s = apex_stratified(&torus, 3);
        let (ic, _) = intersection_complex(&s, &Perversity::LowerMiddle).unwrap();
        assert_eq!(homology(&ic).betti, vec![1, 2, 0, 0]);
        let (ic, _) = intersection_complex(&s, &Perversity::UpperMiddle).unwrap();
        assert_eq!(homology(&ic).betti, vec![1, 0, 0, 0]);
    }

    #[test]
    fn trivial_stratification_is_classical() {
        let k = sphere(2);
        let (ic, basis) = intersection_complex(&StratifiedComplex::smooth(k.clone()), &Perversity::LowerMiddle).unwrap();
        assert_eq!(ic, k.chain_complex());
        assert_eq!(basis.single_cells(1), 6);
    }

    #[test]
    fn embedding_codimension() {
        let k = sphere(2);
        let v = k.subcomplex(&[vec![0]]).unwrap();
        assert_eq!(stratified_from_embedding(&k, &v).unwrap().strata()[0].codimension, 2);
        assert_eq!(stratified_from_embedding(&k, &k), Err(Error::CodimensionTooSmall(0)));
        let s3 = sphere(3);
        let cycle = s3.subcomplex(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(stratified_from_embedding(&s3, &cycle).unwrap().strata()[0].codimension, 2);
    }

    #[test]
    fn three_sphere_along_edge_cycle() {
        let s3 = sphere(3);
        let cycle = s3.subcomplex(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let strat = stratified_from_embedding(&s3, &cycle).unwrap();
        for p in [Perversity::LowerMiddle, Perversity::UpperMiddle] {
            let cmp = compare_norms(&strat, &p).unwrap();
            assert_eq!(cmp.intersection_betti, vec![1, 0, 0, 1]);
            assert!(cmp.holds(), "{cmp:?}");
        }
    }
}
