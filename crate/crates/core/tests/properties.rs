//! Randomized invariants.

mod common;

use common::*;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

use reidemeister_core::chain::{
    basis_change_factor, homology, torsion, torsion_with_lifts, BasedChainComplex, HomologyBasis,
};
use reidemeister_core::detline::{evaluate, pushforward, reidemeister_norm, DetLine};
use reidemeister_core::hodge::{cm_check, laplacian, GradedInnerProduct};
use reidemeister_core::linalg::{
    det, express_in_family, kernel_basis, rank, rat, smith_normal_form, IntegerMatrix, Rational, RationalMatrix,
};
use reidemeister_core::sequences::{gluing_check, mayer_vietoris_with, phi_check, Cover, CoverBases, CoverModels};
use reidemeister_core::spaces::{barycentric_subdivision, circle, cone, cone_apex, product, sphere, SimplicialComplex};
use reidemeister_core::stratified::{
    allowable, based_intersection_complex, induced_on_homology, intersection_complex, recombine_composites,
    stratified_from_embedding, ChainModel, Perversity, Stratum, StratifiedComplex,
};
use reidemeister_core::Error;

fn matrix_from(n: usize, m: usize, entries: &[i64]) -> RationalMatrix {
    let mut out = RationalMatrix::zeros(n, m);
    for i in 0..n {
        for j in 0..m {
            out[(i, j)] = r(entries[i * m + j]);
        }
    }
    out
}

fn square(max: usize) -> impl Strategy<Value = RationalMatrix> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(-4i64..=4, n * n).prop_map(move |e| matrix_from(n, n, &e)))
}

proptest! {
    #[test]
    fn det_is_multiplicative((a, b) in (1usize..=4).prop_flat_map(|n| (
        prop::collection::vec(-4i64..=4, n * n).prop_map(move |e| matrix_from(n, n, &e)),
        prop::collection::vec(-4i64..=4, n * n).prop_map(move |e| matrix_from(n, n, &e)),
    ))) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(det(&ab).unwrap(), det(&a).unwrap() * det(&b).unwrap());
    }

    #[test]
    fn det_matches_dense_oracle(a in square(5)) {
        prop_assert_eq!(det(&a).unwrap(), dense_det(&a));
    }

    #[test]
    fn rank_nullity((n, m, e) in (1usize..=5, 1usize..=5).prop_flat_map(|(n, m)| (Just(n), Just(m), prop::collection::vec(-2i64..=2, n * m)))) {
        let a = matrix_from(n, m, &e);
        let k = kernel_basis(&a);
        prop_assert_eq!(rank(&a) + k.len(), m);
        prop_assert_eq!(rank(&a), matrix_rank(&a));
        for v in &k {
            prop_assert!(a.apply(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn smith_form_is_valid((n, m, e) in (1usize..=4, 1usize..=4).prop_flat_map(|(n, m)| (Just(n), Just(m), prop::collection::vec(-6i64..=6, n * m)))) {
        let mut a = IntegerMatrix::zeros(n, m);
        for i in 0..n {
            for j in 0..m {
                a[(i, j)] = BigInt::from(e[i * m + j]);
            }
        }
        let s = smith_normal_form(&a);
        let prod = s.left.to_rational().mul(&a.to_rational()).unwrap().mul(&s.right.to_rational()).unwrap();
        prop_assert_eq!(prod, s.diagonal.to_rational());
        prop_assert_eq!(dense_det(&s.left.to_rational()).abs(), rat(1));
        prop_assert_eq!(dense_det(&s.right.to_rational()).abs(), rat(1));
        let f = s.invariant_factors();
        for w in f.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert_eq!(f.len(), matrix_rank(&a.to_rational()));
    }
}

#[test]
fn torsion_matches_definition_and_is_independent_of_lifts() {
    let mut rng = rng(11);
    for _ in 0..60 {
        let c = random_complex(&mut rng, 4, 6);
        let h = random_homology_basis(&mut rng, &c);
        let tau = torsion(&c, &h).unwrap().into_inner();
        assert_eq!(tau, definitional_torsion(&c, &h));
        let lifts = random_lifts(&mut rng, &c);
        assert_eq!(torsion_with_lifts(&c, &h, &lifts).unwrap().into_inner(), tau);
    }
}

#[test]
fn torsion_transforms_by_basis_change() {
    let mut rng = rng(12);
    for _ in 0..60 {
        let c = random_complex(&mut rng, 4, 6);
        let h = random_homology_basis(&mut rng, &c);
        let h2 = random_homology_basis(&mut rng, &c);
        let f = basis_change_factor(&c, &h, &h2).unwrap();
        assert_eq!(torsion(&c, &h2).unwrap().into_inner(), f * torsion(&c, &h).unwrap().into_inner());
    }
}

#[test]
fn norm_is_independent_of_the_homology_basis() {
    let mut rng = rng(13);
    for _ in 0..60 {
        let c = random_complex(&mut rng, 4, 6);
        let h = random_homology_basis(&mut rng, &c);
        let h2 = random_homology_basis(&mut rng, &c);
        let n1 = reidemeister_norm(&c, &h).unwrap();
        let n2 = reidemeister_norm(&c, &h2).unwrap();
        assert!(n1.agrees_with(&n2));
        let line = DetLine::of(&c).unwrap();
        let lambda = Rational::new(BigInt::from(rng.gen_range(-5..=5i64).max(1)), BigInt::from(3));
        let e = line.element(&h2, rat(1)).unwrap();
        assert_eq!(evaluate(&n1, &e).unwrap(), torsion(&c, &h2).unwrap().into_inner());
        let scaled = e.scaled(&lambda).unwrap();
        assert_eq!(evaluate(&n1, &scaled).unwrap(), lambda.abs() * evaluate(&n1, &e).unwrap());
    }
}

fn pad(h: &HomologyBasis, c: &BasedChainComplex, extra: &BasedChainComplex) -> HomologyBasis {
    let len = c.len().max(extra.len());
    HomologyBasis::new(
        (0..len)
            .map(|q| {
                let mut reps: Vec<_> = h
                    .degrees()
                    .get(q)
                    .map(|d| d.to_vec())
                    .unwrap_or_default();
                for v in reps.iter_mut() {
                    v.extend(std::iter::repeat(Rational::zero()).take(extra.dim(q)));
                }
                reps
            })
            .collect(),
    )
}

#[test]
fn torsion_is_invariant_under_elementary_expansion() {
    let mut rng = rng(14);
    for _ in 0..50 {
        let c = random_complex(&mut rng, 4, 5);
        let q = rng.gen_range(1..4);
        // Elementary complex Q -> Q by the identity in degrees q, q - 1.
        let mut dims = vec![0; 4];
        dims[q] = 1;
        dims[q - 1] = 1;
        let boundaries = (1..4)
            .map(|i| if i == q { RationalMatrix::identity(1) } else { RationalMatrix::zeros(dims[i - 1], dims[i]) })
            .collect();
        let e = BasedChainComplex::new(dims, boundaries).unwrap();
        let sum = c.direct_sum(&e);
        let h = random_homology_basis(&mut rng, &c);
        assert_eq!(
            torsion(&sum, &pad(&h, &c, &e)).unwrap().into_inner(),
            torsion(&c, &h).unwrap().into_inner()
        );
    }
}

#[test]
fn pushforward_is_functorial() {
    let mut rng = rng(15);
    for _ in 0..50 {
        let c = random_complex(&mut rng, 4, 5);
        let n = reidemeister_norm(&c, &homology(&c).basis).unwrap();
        let betti = homology(&c).betti;
        let a: Vec<_> = betti.iter().map(|&b| random_invertible(&mut rng, b, true)).collect();
        let b: Vec<_> = betti.iter().map(|&b| random_invertible(&mut rng, b, true)).collect();
        let ba: Vec<_> = a.iter().zip(&b).map(|(a, b)| b.mul(a).unwrap()).collect();
        let two_step = pushforward(&pushforward(&n, &a).unwrap(), &b).unwrap();
        assert!(two_step.agrees_with(&pushforward(&n, &ba).unwrap()));
        let id: Vec<_> = betti.iter().map(|&b| RationalMatrix::identity(b)).collect();
        assert!(pushforward(&n, &id).unwrap().agrees_with(&n));
    }
}

#[test]
fn cheeger_muller_on_random_complexes() {
    let mut rng = rng(16);
    for i in 0..120 {
        let c = random_complex(&mut rng, 4, 6);
        let g = if i % 2 == 0 {
            GradedInnerProduct::identity(&c)
        } else {
            GradedInnerProduct::new(c.dims().iter().map(|&n| random_gram(&mut rng, n)).collect()).unwrap()
        };
        for q in 0..c.len() {
            let l = laplacian(&c, &g, q).unwrap();
            // Self-adjoint: G L is symmetric.
            assert!(g.gram(q).mul(&l).unwrap().is_symmetric());
            assert_eq!(kernel_basis(&l).len(), rank_betti(&c)[q]);
        }
        let rep = cm_check(&c, &g).unwrap();
        assert!(rep.holds(), "case {i}: {rep:?}");
        let q = rng.gen_range(0..c.len());
        let lambda = r(rng.gen_range(2..5));
        assert!(cm_check(&c, &g.scaled(q, &(&lambda * &lambda))).unwrap().holds());
    }
}

fn apex_stratified(base: &SimplicialComplex, codimension: usize) -> StratifiedComplex {
    let c = cone(base);
    let b = c.subcomplex(&[vec![cone_apex(base)]]).unwrap();
    StratifiedComplex::new(c, vec![Stratum { complex: b, codimension }]).unwrap()
}

fn stratified_cases() -> Vec<StratifiedComplex> {
    let torus = product(&circle(3).unwrap(), &circle(3).unwrap());
    let m = sphere(3);
    let cycle = m.subcomplex(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
    vec![
        apex_stratified(&sphere(1), 2),
        apex_stratified(&sphere(2), 3),
        apex_stratified(&torus, 3),
        stratified_from_embedding(&m, &cycle).unwrap(),
    ]
}

#[test]
fn intersection_chains_form_a_subcomplex() {
    let perversities = [Perversity::Zero, Perversity::LowerMiddle, Perversity::UpperMiddle, Perversity::Top];
    for strat in stratified_cases() {
        let k = strat.complex().chain_complex();
        let mut previous: Option<Vec<Vec<Vec<Rational>>>> = None;
        for p in &perversities {
            let (_, basis) = intersection_complex(&strat, p).unwrap();
            let gens: Vec<Vec<Vec<Rational>>> = (0..k.len()).map(|q| basis.generators(q).to_vec()).collect();
            for (q, gq) in gens.iter().enumerate() {
                for g in gq {
                    assert!(allowable(g, q, &strat, p).unwrap());
                    if q > 0 {
                        let d = k.apply_boundary(q, g).unwrap();
                        assert!(allowable(&d, q - 1, &strat, p).unwrap());
                        assert!(express_in_family(&gens[q - 1], &d).is_some());
                    }
                }
            }
            // Larger perversities allow more chains.
            if let Some(prev) = &previous {
                for (q, gq) in prev.iter().enumerate() {
                    for g in gq {
                        assert!(express_in_family(&gens[q], g).is_some());
                    }
                }
            }
            previous = Some(gens);
        }
    }
}

fn random_unimodular(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> IntegerMatrix {
    let mut m = IntegerMatrix::identity(n);
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i != j {
            let c = BigInt::from(rng.gen_range(-2..=2));
            for k in 0..n {
                let x = &c * &m[(j, k)];
                m[(i, k)] += x;
            }
        }
    }
    if rng.gen_bool(0.5) {
        for k in 0..n {
            m[(0, k)] = -m[(0, k)].clone();
        }
    }
    m
}

#[test]
fn unimodular_recombination_preserves_torsion() {
    let mut rng = rng(17);
    let mut checked = 0;
    for strat in stratified_cases() {
        for p in [Perversity::LowerMiddle, Perversity::UpperMiddle] {
            let (ic, basis) = intersection_complex(&strat, &p).unwrap();
            let h = homology(&ic).basis;
            let h_cells: Vec<Vec<Vec<Rational>>> = (0..ic.len())
                .map(|q| h.degree(q).iter().map(|v| basis.to_cells(q, strat.complex().count(q), v)).collect())
                .collect();
            let tau = torsion(&ic, &h).unwrap().into_inner();
            for q in 0..ic.len() {
                let n = basis.generators(q).len() - basis.single_cells(q);
                if n == 0 {
                    continue;
                }
                let u = random_unimodular(&mut rng, n);
                let other = recombine_composites(&basis, q, &u).unwrap();
                let ic2 = based_intersection_complex(&strat, &p, &other).unwrap();
                let h2 = HomologyBasis::new(
                    (0..ic2.len())
                        .map(|d| {
                            h_cells[d].iter().map(|v| express_in_family(other.generators(d), v).unwrap()).collect()
                        })
                        .collect(),
                );
                assert_eq!(torsion(&ic2, &h2).unwrap().into_inner(), tau);
                checked += 1;
            }
        }
    }
    assert!(checked >= 4);
}

fn random_cover(rng: &mut rand_chacha::ChaCha8Rng, k: &SimplicialComplex) -> Result<Cover, Error> {
    let n = k.maximal_simplices().len();
    let assignment: Vec<u8> = (0..n).map(|_| [1u8, 2, 3][rng.gen_range(0..3)]).collect();
    Cover::from_assignment(k, &assignment)
}

fn random_bases(rng: &mut rand_chacha::ChaCha8Rng, models: &CoverModels) -> CoverBases {
    CoverBases {
        whole: random_homology_basis(rng, models.whole.complex()),
        first: random_homology_basis(rng, models.first.complex()),
        second: random_homology_basis(rng, models.second.complex()),
        intersection: random_homology_basis(rng, models.intersection.complex()),
    }
}

#[test]
fn gluing_and_phi_on_random_covers() {
    let mut rng = rng(18);
    let spaces = [
        circle(5).unwrap(),
        sphere(2),
        cone(&sphere(1)),
        product(&circle(3).unwrap(), &circle(3).unwrap()),
        barycentric_subdivision(&sphere(1)).complex,
    ];
    let mut passed = 0;
    for k in &spaces {
        for _ in 0..6 {
            let Ok(cover) = random_cover(&mut rng, k) else { continue };
            let models = CoverModels::classical(&cover);
            let bases = random_bases(&mut rng, &models);
            let g = gluing_check(&models, &bases).unwrap();
            assert!(g.holds(), "{g:?}");
            assert!(phi_check(&models, &bases).unwrap().holds());
            // The sequence torsion does not depend on the lifts.
            let seq = mayer_vietoris_with(&models, &bases).unwrap();
            let lifts = random_lifts(&mut rng, seq.complex());
            let empty = HomologyBasis::new(vec![vec![]; seq.complex().len()]);
            assert_eq!(
                torsion_with_lifts(seq.complex(), &empty, &lifts).unwrap().into_inner(),
                torsion(seq.complex(), &empty).unwrap().into_inner()
            );
            passed += 1;
        }
    }
    assert!(passed >= 10, "only {passed} covers");
}

#[test]
fn intersection_gluing_on_random_covers() {
    let mut rng = rng(19);
    let base = apex_stratified(&sphere(1), 2);
    let sd = barycentric_subdivision(base.complex());
    let strat = base.subdivide(&sd).unwrap();
    let (mut passed, mut incompatible) = (0, 0);
    for _ in 0..20 {
        let Ok(cover) = random_cover(&mut rng, strat.complex()) else { continue };
        for p in [Perversity::LowerMiddle, Perversity::UpperMiddle] {
            let models = match CoverModels::intersection(&strat, &p, &cover) {
                Ok(m) => m,
                Err(_) => continue,
            };
            let bases = models.canonical_bases();
            match gluing_check(&models, &bases) {
                Ok(g) => {
                    assert!(g.holds(), "{g:?}");
                    assert!(phi_check(&models, &bases).unwrap().holds());
                    passed += 1;
                }
                Err(Error::IncompatibleCover(_)) => incompatible += 1,
                Err(e) => panic!("{e:?}"),
            }
        }
    }
    assert!(passed >= 5, "{passed} passed, {incompatible} incompatible");
}

fn subdivision_agrees(model: &ChainModel, fine: &ChainModel, sd: &reidemeister_core::spaces::Subdivision) -> bool {
    let iso = induced_on_homology(model, fine, |q, v| sd.apply(q, v)).unwrap();
    let coarse = reidemeister_norm(model.complex(), &homology(model.complex()).basis).unwrap();
    let fine_norm = reidemeister_norm(fine.complex(), &homology(fine.complex()).basis).unwrap();
    pushforward(&coarse, &iso).unwrap().agrees_with(&fine_norm)
}

#[test]
fn subdivision_invariance() {
    for k in [circle(3).unwrap(), sphere(2), product(&circle(3).unwrap(), &circle(3).unwrap())] {
        let sd = barycentric_subdivision(&k);
        assert!(subdivision_agrees(&ChainModel::classical(&k), &ChainModel::classical(&sd.complex), &sd));
    }
    for strat in [apex_stratified(&sphere(1), 2), apex_stratified(&sphere(2), 3)] {
        let sd = barycentric_subdivision(strat.complex());
        let fine = strat.subdivide(&sd).unwrap();
        for p in [Perversity::LowerMiddle, Perversity::UpperMiddle] {
            let a = ChainModel::intersection(&strat, &p).unwrap();
            let b = ChainModel::intersection(&fine, &p).unwrap();
            assert!(subdivision_agrees(&a, &b, &sd));
        }
    }
}
