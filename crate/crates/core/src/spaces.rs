//! Finite simplicial complexes, their cellular chain complexes, and the
//! standard constructions: spheres, cones, staircase products and
//! barycentric subdivision.
//!
//! Simplices are strictly increasing tuples of vertex indices and are
//! oriented by that order. Within each dimension simplices are kept in
//! lexicographic order, which is also the order of the preferred basis of
//! the chain complex.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::chain::BasedChainComplex;
use crate::error::{Error, Result};
use crate::linalg::{Chain, Rational, RationalMatrix};

pub type Simplex = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    simplices: Vec<Vec<Simplex>>,
    index: Vec<BTreeMap<Simplex, usize>>,
}

fn faces_of(s: &[usize]) -> impl Iterator<Item = Simplex> + '_ {
    (0..s.len()).map(move |i| {
        let mut f = s.to_vec();
        f.remove(i);
        f
    })
}

impl SimplicialComplex {
    fn build(labels: Vec<String>, by_dim: Vec<BTreeSet<Simplex>>) -> Self {
        let mut simplices: Vec<Vec<Simplex>> = by_dim.into_iter().map(|s| s.into_iter().collect()).collect();
        while simplices.last().is_some_and(Vec::is_empty) {
            simplices.pop();
        }
        let index = simplices
            .iter()
            .map(|level| level.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        SimplicialComplex { labels, simplices, index }
    }

    fn check_simplex(n: usize, s: &[usize]) -> Result<()> {
        if s.is_empty() {
            return Err(Error::InvalidSimplex("empty simplex".into()));
        }
        if s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSimplex(format!("{s:?} is not strictly increasing")));
        }
        if s.iter().any(|&v| v >= n) {
            return Err(Error::InvalidSimplex(format!("{s:?} uses a vertex out of range")));
        }
        Ok(())
    }

    /// The smallest complex containing the given simplices.
    pub fn from_maximal(labels: Vec<String>, generators: &[Simplex]) -> Result<Self> {
        let n = labels.len();
        let mut by_dim: Vec<BTreeSet<Simplex>> = Vec::new();
        let mut stack: Vec<Simplex> = Vec::new();
        for s in generators {
            Self::check_simplex(n, s)?;
            stack.push(s.clone());
        }
        while let Some(s) = stack.pop() {
            let d = s.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize_with(d + 1, BTreeSet::new);
            }
            if by_dim[d].contains(&s) {
                continue;
            }
            if d > 0 {
                stack.extend(faces_of(&s));
            }
            by_dim[d].insert(s);
        }
        Ok(Self::build(labels, by_dim))
    }

    /// A complex from an explicit simplex list, which must be closed under faces.
    pub fn from_simplices(labels: Vec<String>, simplices: &[Simplex]) -> Result<Self> {
        let k = Self::from_maximal(labels, simplices)?;
        if k.total() != simplices.iter().collect::<BTreeSet<_>>().len() {
            return Err(Error::InvalidSimplex("simplex list is not closed under faces".into()));
        }
        Ok(k)
    }

    /// Vertices labelled `0..n` without any simplices.
    pub fn empty(n: usize) -> Self {
        SimplicialComplex { labels: (0..n).map(|i| i.to_string()).collect(), simplices: Vec::new(), index: Vec::new() }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn num_labels(&self) -> usize {
        self.labels.len()
    }

    /// Top dimension, `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn simplices(&self, q: usize) -> &[Simplex] {
        self.simplices.get(q).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter().flatten()
    }

    pub fn count(&self, q: usize) -> usize {
        self.simplices(q).len()
    }

    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn total(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Position of `s` in the preferred basis of its degree.
    pub fn index_of(&self, s: &[usize]) -> Option<usize> {
        self.index.get(s.len().checked_sub(1)?)?.get(s).copied()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.index_of(s).is_some()
    }

    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered: BTreeSet<&Simplex> = BTreeSet::new();
        let mut out = Vec::new();
        for level in self.simplices.iter().rev() {
            for s in level {
                if !covered.contains(s) {
                    out.push(s.clone());
                }
            }
            for s in level {
                for f in faces_of(s) {
                    if let Some(i) = self.index_of(&f) {
                        covered.insert(&self.simplices[f.len() - 1][i]);
                    }
                }
            }
        }
        out.sort();
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices.iter().enumerate().map(|(q, l)| if q % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) }).sum()
    }

    /// Cellular chain complex with the simplices as preferred basis and the
    /// incidence `d[v_0..v_q] = sum_i (-1)^i [.. v_i omitted ..]`.
    pub fn chain_complex(&self) -> BasedChainComplex {
        let dims = self.counts();
        let mut boundaries = Vec::with_capacity(dims.len().saturating_sub(1));
        for q in 1..dims.len() {
            let mut d = RationalMatrix::zeros(dims[q - 1], dims[q]);
            for (j, s) in self.simplices[q].iter().enumerate() {
                for (i, f) in faces_of(s).enumerate() {
                    let row = self.index[q - 1][&f];
                    d[(row, j)] = if i % 2 == 0 { Rational::one() } else { -Rational::one() };
                }
            }
            boundaries.push(d);
        }
        BasedChainComplex::new(dims, boundaries).expect("simplicial boundary squares to zero")
    }

    /// Subcomplex generated by the given simplices, sharing this vertex set.
    pub fn subcomplex(&self, generators: &[Simplex]) -> Result<Self> {
        for s in generators {
            if !self.contains(s) {
                return Err(Error::NotASubcomplex(format!("{s:?} is not a simplex of the ambient complex")));
            }
        }
        Self::from_maximal(self.labels.clone(), generators)
    }

    /// Whether every simplex of `self` lies in `other`.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.all_simplices().all(|s| other.contains(s))
    }

    pub fn union(&self, other: &SimplicialComplex) -> Result<Self> {
        if self.labels.len() != other.labels.len() {
            return Err(Error::NotASubcomplex("complexes on different vertex sets".into()));
        }
        let all: Vec<Simplex> = self.all_simplices().chain(other.all_simplices()).cloned().collect();
        Self::from_maximal(self.labels.clone(), &all)
    }

    pub fn intersection(&self, other: &SimplicialComplex) -> Result<Self> {
        if self.labels.len() != other.labels.len() {
            return Err(Error::NotASubcomplex("complexes on different vertex sets".into()));
        }
        let common: Vec<Simplex> = self.all_simplices().filter(|s| other.contains(s)).cloned().collect();
        Self::from_maximal(self.labels.clone(), &common)
    }

    /// Simplices containing `v` together with all their faces.
    pub fn closed_star(&self, v: usize) -> Self {
        let gens: Vec<Simplex> = self.all_simplices().filter(|s| s.contains(&v)).cloned().collect();
        Self::from_maximal(self.labels.clone(), &gens).expect("faces of valid simplices")
    }

    /// Faces of the star of `v` not containing `v`.
    pub fn link(&self, v: usize) -> Self {
        let gens: Vec<Simplex> = self
            .all_simplices()
            .filter(|s| s.contains(&v) && s.len() > 1)
            .map(|s| s.iter().copied().filter(|&w| w != v).collect())
            .collect();
        Self::from_maximal(self.labels.clone(), &gens).expect("faces of valid simplices")
    }

    /// The subcomplex of simplices all of whose vertices satisfy `keep`.
    pub fn induced(&self, keep: impl Fn(usize) -> bool) -> Self {
        let gens: Vec<Simplex> = self.all_simplices().filter(|s| s.iter().all(|&v| keep(v))).cloned().collect();
        Self::from_maximal(self.labels.clone(), &gens).expect("faces of valid simplices")
    }

    /// Whether every simplex of `self` spanned by vertices of `sub` lies in `sub`.
    pub fn is_full_subcomplex(&self, sub: &SimplicialComplex) -> bool {
        let verts: BTreeSet<usize> = sub.simplices(0).iter().map(|s| s[0]).collect();
        self.all_simplices().filter(|s| s.iter().all(|v| verts.contains(v))).all(|s| sub.contains(s))
    }
}

/// Moves a chain of degree `q` from `from` to `to` by matching simplices.
/// Both complexes must share the vertex numbering; simplices of the support
/// missing from `to` are an error.
pub fn transfer_chain(from: &SimplicialComplex, to: &SimplicialComplex, q: usize, v: &[Rational]) -> Result<Chain> {
    let mut out = vec![Rational::zero(); to.count(q)];
    for (x, s) in v.iter().zip(from.simplices(q)) {
        if x.is_zero() {
            continue;
        }
        let j = to.index_of(s).ok_or_else(|| Error::NotASubcomplex(format!("{s:?} is missing")))?;
        out[j] = x.clone();
    }
    Ok(out)
}

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

pub fn point() -> SimplicialComplex {
    SimplicialComplex::from_maximal(numbered(1), &[vec![0]]).expect("valid")
}

/// The full `n`-simplex.
pub fn simplex(n: usize) -> SimplicialComplex {
    SimplicialComplex::from_maximal(numbered(n + 1), &[(0..=n).collect()]).expect("valid")
}

/// Boundary of the `(n+1)`-simplex.
pub fn sphere(n: usize) -> SimplicialComplex {
    let full: Simplex = (0..n + 2).collect();
    let gens: Vec<Simplex> = faces_of(&full).collect();
    SimplicialComplex::from_maximal(numbered(n + 2), &gens).expect("valid")
}

/// Cycle on `k >= 3` vertices.
pub fn circle(k: usize) -> Result<SimplicialComplex> {
    if k < 3 {
        return Err(Error::InvalidSimplex(format!("a circle needs at least 3 vertices, got {k}")));
    }
    let gens: Vec<Simplex> = (0..k).map(|i| if i + 1 < k { vec![i, i + 1] } else { vec![0, k - 1] }).collect();
    SimplicialComplex::from_maximal(numbered(k), &gens)
}

/// Joins a new last vertex (the apex) to every simplex of `k`.
pub fn cone(k: &SimplicialComplex) -> SimplicialComplex {
    let apex = k.num_labels();
    let mut labels = k.labels.clone();
    let mut name = String::from("apex");
    while labels.contains(&name) {
        name.push('\'');
    }
    labels.push(name);
    let mut gens: Vec<Simplex> = k
        .maximal_simplices()
        .into_iter()
        .map(|mut s| {
            s.push(apex);
            s
        })
        .collect();
    gens.push(vec![apex]);
    SimplicialComplex::from_maximal(labels, &gens).expect("valid")
}

/// Index of the apex vertex of [`cone`]`(k)`.
pub fn cone_apex(k: &SimplicialComplex) -> usize {
    k.num_labels()
}

/// Disjoint union, the vertices of `b` numbered after those of `a`.
pub fn disjoint_union(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    let offset = a.num_labels();
    let mut labels = a.labels.clone();
    labels.extend(b.labels.iter().map(|l| format!("{l}'")));
    let mut gens = a.maximal_simplices();
    gens.extend(b.maximal_simplices().into_iter().map(|s| s.into_iter().map(|v| v + offset).collect()));
    SimplicialComplex::from_maximal(labels, &gens).expect("valid")
}

/// Staircase triangulation of `k x l`; the vertex `(i, j)` has index
/// `i * |labels(l)| + j`.
pub fn product(k: &SimplicialComplex, l: &SimplicialComplex) -> SimplicialComplex {
    let width = l.num_labels();
    let mut labels = Vec::with_capacity(k.num_labels() * width);
    for a in &k.labels {
        for b in &l.labels {
            labels.push(format!("({a},{b})"));
        }
    }
    let mut gens = Vec::new();
    for s in k.maximal_simplices() {
        for t in l.maximal_simplices() {
            for path in staircases(s.len() - 1, t.len() - 1) {
                gens.push(path_simplex(&s, &t, &path, width));
            }
        }
    }
    SimplicialComplex::from_maximal(labels, &gens).expect("valid")
}

/// Index of the product vertex `(i, j)` in [`product`]`(k, l)`.
pub fn product_vertex(l: &SimplicialComplex, i: usize, j: usize) -> usize {
    i * l.num_labels() + j
}

/// Lattice paths from `(0,0)` to `(p,q)`, `true` for a step in the first factor.
fn staircases(p: usize, q: usize) -> Vec<Vec<bool>> {
    fn go(p: usize, q: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if p == 0 && q == 0 {
            out.push(cur.clone());
            return;
        }
        if p > 0 {
            cur.push(true);
            go(p - 1, q, cur, out);
            cur.pop();
        }
        if q > 0 {
            cur.push(false);
            go(p, q - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(p, q, &mut Vec::new(), &mut out);
    out
}

fn path_simplex(s: &[usize], t: &[usize], path: &[bool], width: usize) -> Simplex {
    let (mut i, mut j) = (0, 0);
    let mut out = vec![s[0] * width + t[0]];
    for &step in path {
        if step {
            i += 1;
        } else {
            j += 1;
        }
        out.push(s[i] * width + t[j]);
    }
    out
}

/// Sign of a shuffle: one factor of -1 for each pair where a second-factor
/// step precedes a first-factor step.
fn shuffle_sign(path: &[bool]) -> bool {
    let mut seconds = 0usize;
    let mut inversions = 0usize;
    for &step in path {
        if step {
            inversions += seconds;
        } else {
            seconds += 1;
        }
    }
    inversions % 2 == 1
}

/// Eilenberg–Zilber shuffle map `C_p(k) ⊗ C_q(l) -> C_{p+q}(k x l)` applied
/// to `x ⊗ y`.
pub fn shuffle_product(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    prod: &SimplicialComplex,
    p: usize,
    x: &[Rational],
    q: usize,
    y: &[Rational],
) -> Result<Chain> {
    let width = l.num_labels();
    let paths = staircases(p, q);
    let mut out = vec![Rational::zero(); prod.count(p + q)];
    for (a, s) in x.iter().zip(k.simplices(p)) {
        if a.is_zero() {
            continue;
        }
        for (b, t) in y.iter().zip(l.simplices(q)) {
            if b.is_zero() {
                continue;
            }
            let ab = a * b;
            for path in &paths {
                let cell = path_simplex(s, t, path, width);
                let idx = prod.index_of(&cell).ok_or_else(|| Error::NotASubcomplex(format!("{cell:?} missing from product")))?;
                if shuffle_sign(path) {
                    out[idx] -= &ab;
                } else {
                    out[idx] += &ab;
                }
            }
        }
    }
    Ok(out)
}

/// Product of two subcomplexes viewed inside the product of their ambients.
pub fn product_subcomplex(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    prod: &SimplicialComplex,
    a: &SimplicialComplex,
    b: &SimplicialComplex,
) -> SimplicialComplex {
    let width = l.num_labels();
    debug_assert_eq!(prod.num_labels(), k.num_labels() * width);
    let gens: Vec<Simplex> = prod
        .all_simplices()
        .filter(|s| {
            let mut first: Vec<usize> = s.iter().map(|v| v / width).collect();
            let mut second: Vec<usize> = s.iter().map(|v| v % width).collect();
            first.dedup();
            second.sort_unstable();
            second.dedup();
            a.contains(&first) && b.contains(&second)
        })
        .cloned()
        .collect();
    SimplicialComplex::from_maximal(prod.labels.clone(), &gens).expect("valid")
}

/// Barycentric subdivision together with the subdivision chain map.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    /// `carrier[q]` has the subdivided chain of the `j`-th `q`-simplex as column `j`.
    pub carrier: Vec<RationalMatrix>,
    /// Vertex `i` of the subdivision is the barycenter of `barycenters[i]`.
    pub barycenters: Vec<Simplex>,
}

impl Subdivision {
    /// The subdivision of a subcomplex of the original complex, as a
    /// subcomplex of the subdivided complex.
    pub fn restrict(&self, sub: &SimplicialComplex) -> SimplicialComplex {
        self.complex.induced(|v| sub.contains(&self.barycenters[v]))
    }

    /// Applies the subdivision chain map in degree `q`.
    pub fn apply(&self, q: usize, v: &[Rational]) -> Result<Chain> {
        match self.carrier.get(q) {
            Some(m) => m.apply(v),
            None => Ok(Vec::new()),
        }
    }
}

/// Flags of faces, vertices ordered by dimension then lexicographically.
/// The chain map sends `v` to its barycenter and a `q`-simplex `s` to
/// `(-1)^q sd(ds) * b_s` with the barycenter appended last.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> Subdivision {
    let barycenters: Vec<Simplex> = k.simplices.iter().flatten().cloned().collect();
    let position: BTreeMap<&Simplex, usize> = barycenters.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let labels: Vec<String> = barycenters
        .iter()
        .map(|s| {
            let names: Vec<&str> = s.iter().map(|&v| k.labels[v].as_str()).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();

    // Maximal flags: descending chains of faces from each maximal simplex.
    let mut gens: Vec<Simplex> = Vec::new();
    for top in k.maximal_simplices() {
        let mut stack: Vec<(Simplex, Vec<usize>)> = vec![(top.clone(), vec![position[&top]])];
        while let Some((s, flag)) = stack.pop() {
            if s.len() == 1 {
                let mut f = flag.clone();
                f.sort_unstable();
                gens.push(f);
                continue;
            }
            for face in faces_of(&s) {
                let mut f = flag.clone();
                f.push(position[&face]);
                stack.push((face, f));
            }
        }
    }
    let complex = SimplicialComplex::from_maximal(labels, &gens).expect("valid");

    let mut carrier: Vec<RationalMatrix> = Vec::with_capacity(k.simplices.len());
    // sparse images of the previous degree
    let mut previous: Vec<BTreeMap<usize, Rational>> = Vec::new();
    for q in 0..k.simplices.len() {
        let mut current = Vec::with_capacity(k.count(q));
        for s in k.simplices(q) {
            let b = position[s];
            let mut image: BTreeMap<usize, Rational> = BTreeMap::new();
            if q == 0 {
                image.insert(complex.index_of(&[b]).expect("vertex"), Rational::one());
            } else {
                for (i, face) in faces_of(s).enumerate() {
                    let fi = k.index_of(&face).expect("face");
                    for (cell, c) in &previous[fi] {
                        let mut joined = complex.simplices(q - 1)[*cell].clone();
                        joined.push(b);
                        let idx = complex.index_of(&joined).expect("flag");
                        // (-1)^q from the cone, (-1)^i from the face
                        let mut coef = c.clone();
                        if (q + i) % 2 == 1 {
                            coef = -coef;
                        }
                        let e = image.entry(idx).or_insert_with(Rational::zero);
                        *e += coef;
                    }
                }
                image.retain(|_, c| !c.is_zero());
            }
            current.push(image);
        }
        let mut m = RationalMatrix::zeros(complex.count(q), k.count(q));
        for (j, image) in current.iter().enumerate() {
            for (i, c) in image {
                m[(*i, j)] = c.clone();
            }
        }
        carrier.push(m);
        previous = current;
    }
    Subdivision { complex, carrier, barycenters }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::homology;
    use crate::linalg::{rank, rat};

    fn betti(k: &SimplicialComplex) -> Vec<usize> {
        homology(&k.chain_complex()).betti
    }

    #[test]
    fn edge_incidence() {
        let c = simplex(1).chain_complex();
        assert_eq!(c.boundary(1).unwrap(), &crate::linalg::rational_matrix(&[&[-1], &[1]]));
    }

    #[test]
    fn spheres() {
        assert_eq!(sphere(0).counts(), vec![2]);
        assert_eq!(sphere(1).euler_characteristic(), 0);
        assert_eq!(sphere(2).euler_characteristic(), 2);
        assert_eq!(rank(sphere(1).chain_complex().boundary(1).unwrap()), 2);
        assert_eq!(betti(&sphere(2)), vec![1, 0, 1]);
        assert_eq!(betti(&sphere(3)), vec![1, 0, 0, 1]);
    }

    #[test]
    fn cones() {
        let c = cone(&sphere(0));
        assert_eq!(c.counts(), vec![3, 2]);
        assert_eq!(betti(&cone(&sphere(1))), vec![1, 0, 0]);
        assert_eq!(cone(&circle(4).unwrap()).euler_characteristic(), 1);
        assert_eq!(cone(&sphere(1)).labels()[3], "apex");
    }

    #[test]
    fn products() {
        let sq = product(&simplex(1), &simplex(1));
        assert_eq!(sq.counts(), vec![4, 5, 2]);
        let t = product(&circle(3).unwrap(), &circle(3).unwrap());
        assert_eq!(betti(&t), vec![1, 2, 1]);
        assert_eq!(t.euler_characteristic(), 0);
        let kp = product(&sphere(2), &point());
        assert_eq!(kp.counts(), sphere(2).counts());
        let sc = product(&sphere(1), &sphere(2));
        assert_eq!(sc.euler_characteristic(), 0);
        assert_eq!(betti(&sc), vec![1, 1, 1, 1]);
    }

    #[test]
    fn shuffle_map_commutes_with_boundary() {
        let k = circle(3).unwrap();
        let l = simplex(2);
        let prod = product(&k, &l);
        let (ck, cl, cp) = (k.chain_complex(), l.chain_complex(), prod.chain_complex());
        for p in 0..=1 {
            for q in 0..=2 {
                for i in 0..k.count(p) {
                    for j in 0..l.count(q) {
                        let mut x = vec![rat(0); k.count(p)];
                        x[i] = rat(1);
                        let mut y = vec![rat(0); l.count(q)];
                        y[j] = rat(1);
                        let ez = shuffle_product(&k, &l, &prod, p, &x, q, &y).unwrap();
                        let lhs = cp.apply_boundary(p + q, &ez).unwrap();
                        let mut rhs = vec![rat(0); prod.count((p + q).saturating_sub(1))];
                        if p > 0 {
                            let dx = ck.apply_boundary(p, &x).unwrap();
                            let t = shuffle_product(&k, &l, &prod, p - 1, &dx, q, &y).unwrap();
                            rhs.iter_mut().zip(t).for_each(|(r, t)| *r += t);
                        }
                        if q > 0 {
                            let dy = cl.apply_boundary(q, &y).unwrap();
                            let t = shuffle_product(&k, &l, &prod, p, &x, q - 1, &dy).unwrap();
                            let sign = if p % 2 == 0 { rat(1) } else { rat(-1) };
                            rhs.iter_mut().zip(t).for_each(|(r, t)| *r += sign.clone() * t);
                        }
                        if p + q > 0 {
                            assert_eq!(lhs, rhs, "p={p} q={q} i={i} j={j}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn subdivision_counts_and_chain_map() {
        let sd = barycentric_subdivision(&simplex(1));
        assert_eq!(sd.complex.counts(), vec![3, 2]);
        let sd = barycentric_subdivision(&simplex(2));
        assert_eq!(sd.complex.count(2), 6);
        let k = sphere(2);
        let sd = barycentric_subdivision(&k);
        assert_eq!(betti(&sd.complex), vec![1, 0, 1]);
        let (c, c2) = (k.chain_complex(), sd.complex.chain_complex());
        for q in 1..=2 {
            let lhs = c2.boundary(q).unwrap().mul(&sd.carrier[q]).unwrap();
            let rhs = sd.carrier[q - 1].mul(c.boundary(q).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn subcomplex_operations() {
        let k = sphere(2);
        let star = k.closed_star(0);
        let link = k.link(0);
        assert_eq!(link.counts(), vec![3, 3]);
        assert_eq!(star.counts(), vec![4, 6, 3]);
        let rest = k.induced(|v| v != 0);
        assert_eq!(star.union(&rest).unwrap(), k);
        assert_eq!(star.intersection(&rest).unwrap(), link);
        assert!(link.is_subcomplex_of(&k));
        assert!(!k.is_full_subcomplex(&link));
        assert!(k.is_full_subcomplex(&rest));
        assert!(SimplicialComplex::from_simplices(numbered(2), &[vec![0, 1]]).is_err());
        assert!(SimplicialComplex::from_maximal(numbered(2), &[vec![1, 0]]).is_err());
    }
}
