//! Seeded random chain complexes and inner products.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use reidemeister_core::chain::BasedChainComplex;
use reidemeister_core::hodge::GradedInnerProduct;
use reidemeister_core::linalg::{kernel_basis, Rational, RationalMatrix};

/// Independent stream for case `index` under `seed`.
pub fn case_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn small(rng: &mut ChaCha8Rng) -> Rational {
    Rational::from_integer(rng.gen_range(-3i64..=3).into())
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = small(rng);
        }
    }
    m
}

/// Complex with `degrees` terms of dimension at most `max_dim`. Each
/// boundary factors through the kernel of the previous one, so `d d = 0`.
pub fn random_complex(rng: &mut ChaCha8Rng, degrees: usize, max_dim: usize) -> BasedChainComplex {
    let dims: Vec<usize> = (0..degrees).map(|_| rng.gen_range(0..=max_dim)).collect();
    let mut boundaries: Vec<RationalMatrix> = Vec::new();
    for q in 1..degrees {
        let d = match boundaries.last() {
            None => random_matrix(rng, dims[0], dims[1]),
            Some(prev) => {
                let kernel = kernel_basis(prev);
                let k = RationalMatrix::from_columns(dims[q - 1], &kernel).expect("kernel vectors");
                k.mul(&random_matrix(rng, kernel.len(), dims[q])).expect("shapes agree")
            }
        };
        boundaries.push(d);
    }
    BasedChainComplex::new(dims, boundaries).expect("d d = 0 by construction")
}

/// `A^T A + I` in every degree.
pub fn random_inner_product(rng: &mut ChaCha8Rng, complex: &BasedChainComplex) -> GradedInnerProduct {
    let grams = complex
        .dims()
        .iter()
        .map(|&n| {
            let a = random_matrix(rng, n, n);
            let mut g = a.transpose().mul(&a).expect("square");
            for i in 0..n {
                g[(i, i)] += Rational::from_integer(1.into());
            }
            g
        })
        .collect();
    GradedInnerProduct::new(grams).expect("positive definite")
}

/// Assignment of each maximal simplex to the first piece, the second, or
/// both.
pub fn random_assignment(rng: &mut ChaCha8Rng, n: usize) -> Vec<u8> {
    (0..n).map(|_| rng.gen_range(1u8..=3)).collect()
}

/// Like [`random_assignment`], but the simplices for which `pinned` holds
/// all go to one randomly chosen piece.
pub fn pinned_assignment(rng: &mut ChaCha8Rng, maximal: &[Vec<usize>], pinned: impl Fn(&[usize]) -> bool) -> Vec<u8> {
    let piece = rng.gen_range(1u8..=2);
    maximal.iter().map(|s| if pinned(s) { piece } else { rng.gen_range(1u8..=3) }).collect()
}
