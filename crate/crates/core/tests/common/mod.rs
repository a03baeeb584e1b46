#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use reidemeister_core::chain::{homology, BasedChainComplex, HomologyBasis};
use reidemeister_core::stratified::{Perversity, StratifiedComplex};
use reidemeister_core::linalg::{kernel_basis, Chain, Rational, RationalMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn r(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Determinant by dense Gaussian elimination with row swaps.
pub fn dense_det(m: &RationalMatrix) -> Rational {
    assert!(m.is_square());
    let n = m.rows();
    let mut a: Vec<Vec<Rational>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else { return Rational::zero() };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= &a[k][k];
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let x = &f * &a[k][j];
                a[i][j] -= x;
            }
        }
    }
    det
}

/// Rank by dense row reduction.
pub fn dense_rank(rows: usize, cols: usize, entry: impl Fn(usize, usize) -> Rational) -> usize {
    let mut a: Vec<Vec<Rational>> = (0..rows).map(|i| (0..cols).map(|j| entry(i, j)).collect()).collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(p, rank);
        for i in 0..rows {
            if i != rank && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[rank][c];
                for j in c..cols {
                    let x = &f * &a[rank][j];
                    a[i][j] -= x;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn matrix_rank(m: &RationalMatrix) -> usize {
    dense_rank(m.rows(), m.cols(), |i, j| m[(i, j)].clone())
}

/// Betti numbers from ranks of the boundary matrices.
pub fn rank_betti(c: &BasedChainComplex) -> Vec<usize> {
    let rk = |q: usize| c.boundary(q).map_or(0, matrix_rank);
    (0..c.len()).map(|q| c.dim(q) - rk(q) - rk(q + 1)).collect()
}

/// Definitional torsion: `b_q` chosen greedily from the rightmost columns,
/// full square matrices `[d b_{q+1}, h_q, b_q]` and dense determinants.
pub fn definitional_torsion(c: &BasedChainComplex, h: &HomologyBasis) -> Rational {
    let len = c.len();
    let mut lifts: Vec<Vec<Chain>> = vec![Vec::new(); len + 1];
    for q in 1..len {
        let d = c.boundary(q).unwrap();
        let mut chosen: Vec<usize> = Vec::new();
        for j in (0..d.cols()).rev() {
            let mut trial = chosen.clone();
            trial.push(j);
            if dense_rank(d.rows(), trial.len(), |i, k| d[(i, trial[k])].clone()) == trial.len() {
                chosen = trial;
            }
        }
        lifts[q] = chosen
            .iter()
            .map(|&j| {
                let mut e = vec![Rational::zero(); d.cols()];
                e[j] = Rational::one();
                e
            })
            .collect();
    }
    let mut tau = Rational::one();
    for q in 0..len {
        let n = c.dim(q);
        let mut cols: Vec<Chain> = Vec::new();
        if let Some(up) = c.boundary(q + 1) {
            for b in &lifts[q + 1] {
                cols.push(up.apply(b).unwrap());
            }
        }
        cols.extend(h.degree(q).iter().cloned());
        cols.extend(lifts[q].iter().cloned());
        assert_eq!(cols.len(), n, "degree {q}");
        if n == 0 {
            continue;
        }
        let d = dense_det(&RationalMatrix::from_columns(n, &cols).unwrap()).abs();
        assert!(!d.is_zero());
        if q % 2 == 0 {
            tau *= d;
        } else {
            tau /= d;
        }
    }
    tau
}

fn small(rng: &mut ChaCha8Rng) -> Rational {
    r(rng.gen_range(-3..=3))
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = small(rng);
        }
    }
    m
}

/// Random integral-ish complex with `degrees` terms of dimension at most
/// `max_dim`: each boundary is a random combination of a kernel basis of
/// the previous one.
pub fn random_complex(rng: &mut ChaCha8Rng, degrees: usize, max_dim: usize) -> BasedChainComplex {
    let dims: Vec<usize> = (0..degrees).map(|_| rng.gen_range(0..=max_dim)).collect();
    let mut boundaries: Vec<RationalMatrix> = Vec::new();
    for q in 1..degrees {
        let d = if q == 1 {
            random_matrix(rng, dims[0], dims[1])
        } else {
            let kernel = kernel_basis(&boundaries[q - 2]);
            let mix = random_matrix(rng, kernel.len(), dims[q]);
            let k = RationalMatrix::from_columns(dims[q - 1], &kernel).unwrap();
            k.mul(&mix).unwrap()
        };
        boundaries.push(d);
    }
    BasedChainComplex::new(dims, boundaries).unwrap()
}

/// Random invertible integer matrix as a product of elementary moves and
/// small diagonal scalings.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize, allow_scaling: bool) -> RationalMatrix {
    let mut m = RationalMatrix::identity(n);
    if n == 0 {
        return m;
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i != j {
            let c = small(rng);
            for k in 0..n {
                let x = &c * &m[(j, k)];
                m[(i, k)] += x;
            }
        }
    }
    if allow_scaling {
        for i in 0..n {
            let s = [r(1), r(-1), r(2), Rational::new(BigInt::from(1), BigInt::from(3))][rng.gen_range(0..4)].clone();
            for k in 0..n {
                m[(i, k)] *= &s;
            }
        }
    }
    m
}

/// Another homology basis: an invertible recombination of the canonical
/// one plus random boundaries.
pub fn random_homology_basis(rng: &mut ChaCha8Rng, c: &BasedChainComplex) -> HomologyBasis {
    let h = homology(c).basis;
    let mut degrees = Vec::new();
    for q in 0..c.len() {
        let reps = h.degree(q);
        let a = random_invertible(rng, reps.len(), true);
        let mut out = Vec::new();
        for j in 0..reps.len() {
            let mut v = vec![Rational::zero(); c.dim(q)];
            for (i, rep) in reps.iter().enumerate() {
                for (o, x) in v.iter_mut().zip(rep) {
                    *o += &a[(i, j)] * x;
                }
            }
            if let Some(up) = c.boundary(q + 1) {
                let w: Vec<Rational> = (0..up.cols()).map(|_| small(rng)).collect();
                for (o, x) in v.iter_mut().zip(up.apply(&w).unwrap()) {
                    *o += x;
                }
            }
            out.push(v);
        }
        degrees.push(out);
    }
    HomologyBasis::new(degrees)
}

/// Alternative lifts: an invertible recombination of the pivot lifts,
/// shifted by random cycles.
pub fn random_lifts(rng: &mut ChaCha8Rng, c: &BasedChainComplex) -> Vec<Vec<Chain>> {
    let mut lifts = vec![Vec::new(); c.len() + 1];
    for q in 1..c.len() {
        let d = c.boundary(q).unwrap();
        let (pivots, _) = reidemeister_core::linalg::image_basis(d);
        let a = random_invertible(rng, pivots.len(), true);
        let cycles = kernel_basis(d);
        let mut out = Vec::new();
        for j in 0..pivots.len() {
            let mut v = vec![Rational::zero(); d.cols()];
            for (i, &p) in pivots.iter().enumerate() {
                v[p] += a[(i, j)].clone();
            }
            for z in &cycles {
                let s = small(rng);
                for (o, x) in v.iter_mut().zip(z) {
                    *o += &s * x;
                }
            }
            out.push(v);
        }
        lifts[q] = out;
    }
    lifts
}

/// Random symmetric positive-definite matrix `A^T A + I`.
pub fn random_gram(rng: &mut ChaCha8Rng, n: usize) -> RationalMatrix {
    let a = random_matrix(rng, n, n);
    let mut g = a.transpose().mul(&a).unwrap();
    for i in 0..n {
        g[(i, i)] += r(1);
    }
    g
}

/// Nullspace of a dense matrix given by rows, by reduced row echelon form.
pub fn dense_nullspace(rows: usize, cols: usize, entry: impl Fn(usize, usize) -> Rational) -> Vec<Vec<Rational>> {
    let mut a: Vec<Vec<Rational>> = (0..rows).map(|i| (0..cols).map(|j| entry(i, j)).collect()).collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(p, rank);
        let inv = Rational::one() / &a[rank][c];
        for x in a[rank].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != rank && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let x = &f * &a[rank][j];
                    a[i][j] -= x;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -a[i][free].clone();
        }
        out.push(v);
    }
    out
}

/// Allowability by enumerating every face of `s`.
pub fn brute_allowable(strat: &StratifiedComplex, p: &Perversity, s: &[usize]) -> bool {
    let q = s.len() as i64 - 1;
    strat.strata().iter().all(|stratum| {
        let mut best: Option<i64> = None;
        for mask in 1u32..(1 << s.len()) {
            let face: Vec<usize> = (0..s.len()).filter(|i| mask & (1 << i) != 0).map(|i| s[i]).collect();
            if stratum.complex.contains(&face) {
                best = best.max(Some(face.len() as i64 - 1));
            }
        }
        let k = stratum.codimension as i64;
        best.map_or(true, |d| d <= q - k + p.value(stratum.codimension).unwrap() as i64)
    })
}

/// Intersection chain groups as subspaces of simplicial chains, computed
/// as the allowable chains whose boundary has no non-allowable component.
pub fn brute_intersection_chains(strat: &StratifiedComplex, p: &Perversity) -> Vec<Vec<Chain>> {
    let k = strat.complex();
    let top = k.dimension().map_or(0, |d| d + 1);
    let c = k.chain_complex();
    (0..top)
        .map(|q| {
            let ok: Vec<usize> = (0..k.count(q)).filter(|&i| brute_allowable(strat, p, &k.simplices(q)[i])).collect();
            if q == 0 {
                return ok.iter().map(|&i| unit(k.count(0), i)).collect();
            }
            let bad: Vec<usize> =
                (0..k.count(q - 1)).filter(|&i| !brute_allowable(strat, p, &k.simplices(q - 1)[i])).collect();
            let d = c.boundary(q).unwrap();
            let null = dense_nullspace(bad.len(), ok.len(), |i, j| d[(bad[i], ok[j])].clone());
            null.iter()
                .map(|coeffs| {
                    let mut v = vec![Rational::zero(); k.count(q)];
                    for (x, &i) in coeffs.iter().zip(&ok) {
                        v[i] = x.clone();
                    }
                    v
                })
                .collect()
        })
        .collect()
}

fn unit(n: usize, i: usize) -> Chain {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// Intersection Betti numbers by rank enumeration on the brute-force
/// intersection chain groups.
pub fn brute_intersection_betti(strat: &StratifiedComplex, p: &Perversity) -> Vec<usize> {
    let groups = brute_intersection_chains(strat, p);
    let c = strat.complex().chain_complex();
    let rank_of_boundary = |q: usize| -> usize {
        if q == 0 || q >= groups.len() || groups[q].is_empty() {
            return 0;
        }
        let images: Vec<Chain> = groups[q].iter().map(|v| c.apply_boundary(q, v).unwrap()).collect();
        let rows = c.dim(q - 1);
        dense_rank(rows, images.len(), |i, j| images[j][i].clone())
    };
    (0..groups.len()).map(|q| groups[q].len() - rank_of_boundary(q) - rank_of_boundary(q + 1)).collect()
}
