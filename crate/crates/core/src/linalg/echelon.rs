//! Incremental column echelon form over the rationals.
//!
//! Columns are inserted one at a time and reduced against the previously
//! accepted columns. Every accepted column is stored in reduced form with a
//! pivot row such that later accepted columns vanish on earlier pivots, so a
//! single pass in insertion order reduces any new vector completely. The same
//! engine yields rank, leftmost pivot columns, kernels, coordinates in a
//! spanning set and determinants; it works on sparse vectors, which keeps
//! boundary matrices of simplicial complexes cheap.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::Rational;

pub type SparseVec = Vec<(usize, Rational)>;

pub fn to_sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense(v: &SparseVec, len: usize) -> Vec<Rational> {
    let mut out = alloc::vec![Rational::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

fn lookup(v: &SparseVec, idx: usize) -> Option<&Rational> {
    v.binary_search_by_key(&idx, |(i, _)| *i).ok().map(|k| &v[k].1)
}

/// `v - c * w` for sorted sparse vectors.
fn sub_scaled(v: &SparseVec, c: &Rational, w: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut a, mut b) = (0, 0);
    while a < v.len() || b < w.len() {
        let next_v = v.get(a).map(|(i, _)| *i);
        let next_w = w.get(b).map(|(i, _)| *i);
        match (next_v, next_w) {
            (Some(i), Some(j)) if i == j => {
                let x = &v[a].1 - c * &w[b].1;
                if !x.is_zero() {
                    out.push((i, x));
                }
                a += 1;
                b += 1;
            }
            (Some(i), Some(j)) if i < j => {
                out.push(v[a].clone());
                a += 1;
            }
            (Some(_), None) => {
                out.push(v[a].clone());
                a += 1;
            }
            (_, Some(j)) => {
                out.push((j, -(c * &w[b].1)));
                b += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Result of inserting a vector.
#[derive(Debug, Clone)]
pub enum Insertion {
    /// The vector was independent of everything accepted so far.
    Independent,
    /// The vector equals this combination of accepted inputs, given as
    /// `(input index, coefficient)` pairs. Empty when tracking is off.
    Dependent(SparseVec),
}

#[derive(Debug, Clone)]
pub struct ColumnEchelon {
    reduced: Vec<SparseVec>,
    pivots: Vec<usize>,
    combos: Vec<SparseVec>,
    inputs: usize,
    track: bool,
}

impl ColumnEchelon {
    /// `track` records how each reduced vector is built from the inputs,
    /// which is needed for dependencies and coordinates.
    pub fn new(track: bool) -> Self {
        ColumnEchelon {
            reduced: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
            inputs: 0,
            track,
        }
    }

    pub fn rank(&self) -> usize {
        self.reduced.len()
    }

    /// Reduces `v`; returns the remainder and the combination of accepted
    /// inputs that was subtracted.
    fn reduce(&self, mut v: SparseVec) -> (SparseVec, SparseVec) {
        let mut subtracted: SparseVec = Vec::new();
        for (k, (b, &p)) in self.reduced.iter().zip(&self.pivots).enumerate() {
            if v.is_empty() {
                break;
            }
            let Some(x) = lookup(&v, p) else { continue };
            let pivot = lookup(b, p).expect("pivot entry present");
            let c = x / pivot;
            v = sub_scaled(&v, &c, b);
            if self.track {
                // subtracted += c * combos[k]
                let neg = -c;
                subtracted = sub_scaled(&subtracted, &neg, &self.combos[k]);
            }
        }
        (v, subtracted)
    }

    pub fn insert(&mut self, v: &[Rational]) -> Insertion {
        self.insert_sparse(to_sparse(v))
    }

    pub fn insert_sparse(&mut self, v: SparseVec) -> Insertion {
        let index = self.inputs;
        self.inputs += 1;
        let (rest, subtracted) = self.reduce(v);
        if rest.is_empty() {
            return Insertion::Dependent(subtracted);
        }
        let pivot = rest[0].0;
        if self.track {
            // combo = e_index - subtracted
            let unit = alloc::vec![(index, Rational::one())];
            self.combos.push(sub_scaled(&unit, &Rational::one(), &subtracted));
        }
        self.reduced.push(rest);
        self.pivots.push(pivot);
        Insertion::Independent
    }

    /// Coefficients expressing `v` in the accepted inputs, or `None` if `v`
    /// is outside their span. Requires tracking.
    pub fn express(&self, v: SparseVec) -> Option<SparseVec> {
        debug_assert!(self.track);
        let (rest, subtracted) = self.reduce(v);
        rest.is_empty().then_some(subtracted)
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).0.is_empty()
    }

    /// Signed determinant of the inserted columns, assuming exactly `dim`
    /// columns of length `dim` were inserted. Zero if any was dependent.
    pub fn determinant(&self, dim: usize) -> Rational {
        if self.inputs != dim || self.rank() != dim {
            return Rational::zero();
        }
        // Reduced columns are lower triangular once rows are ordered by pivot.
        let mut det = Rational::one();
        for (b, &p) in self.reduced.iter().zip(&self.pivots) {
            det *= lookup(b, p).expect("pivot entry present");
        }
        if permutation_is_odd(&self.pivots) {
            -det
        } else {
            det
        }
    }
}

fn permutation_is_odd(perm: &[usize]) -> bool {
    let mut seen = alloc::vec![false; perm.len()];
    let mut transpositions = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 1
}
