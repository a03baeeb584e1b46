//! Built-in test spaces.

use reidemeister_core::sequences::Cover;
use reidemeister_core::spaces::{
    barycentric_subdivision, circle, cone, cone_apex, point, product, product_subcomplex, simplex, sphere, SimplicialComplex,
};
use reidemeister_core::stratified::{stratified_from_embedding, Stratum, StratifiedComplex};

/// Bumped whenever an entry changes.
pub const CATALOG_VERSION: u32 = 1;

/// Six-vertex real projective plane.
pub fn projective_plane() -> SimplicialComplex {
    let triangles: [[usize; 3]; 10] = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 1, 5],
        [1, 2, 4],
        [2, 3, 5],
        [1, 3, 4],
        [1, 3, 5],
        [2, 4, 5],
    ];
    let gens: Vec<Vec<usize>> = triangles.iter().map(|t| t.to_vec()).collect();
    SimplicialComplex::from_maximal((0..6).map(|i| i.to_string()).collect(), &gens).expect("valid")
}

pub fn torus() -> SimplicialComplex {
    product(&circle(3).expect("valid"), &circle(3).expect("valid"))
}

/// Smooth spaces, by name.
pub fn smooth() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("point", point()),
        ("edge", simplex(1)),
        ("triangle", simplex(2)),
        ("circle3", circle(3).expect("valid")),
        ("circle4", circle(4).expect("valid")),
        ("sphere2", sphere(2)),
        ("sphere3", sphere(3)),
        ("rp2", projective_plane()),
        ("torus", torus()),
        ("disk", cone(&circle(4).expect("valid"))),
    ]
}

/// Cone over `base` with the apex as singular stratum of full codimension.
pub fn apex_stratified(base: &SimplicialComplex) -> StratifiedComplex {
    let c = cone(base);
    let codimension = c.dimension().unwrap_or(0);
    let b = c.subcomplex(&[vec![cone_apex(base)]]).expect("apex is a vertex");
    StratifiedComplex::new(c, vec![Stratum { complex: b, codimension }]).expect("valid stratification")
}

/// `∂Δ⁴` along the edge cycle through vertices 0, 1, 2.
pub fn sphere3_along_cycle() -> StratifiedComplex {
    let m = sphere(3);
    let b = m.subcomplex(&[vec![0, 1], vec![1, 2], vec![0, 2]]).expect("edges of the boundary");
    stratified_from_embedding(&m, &b).expect("codimension 2")
}

/// `circle(3) x sphere(2)` along `circle(3) x {0}`.
pub fn circle_times_sphere2_along_circle() -> StratifiedComplex {
    let w = circle(3).expect("valid");
    let s = sphere(2);
    let m = product(&w, &s);
    let b = product_subcomplex(&w, &s, &m, &w, &s.subcomplex(&[vec![0]]).expect("vertex"));
    stratified_from_embedding(&m, &b).expect("codimension 2")
}

/// Stratified spaces, by name.
pub fn stratified() -> Vec<(&'static str, StratifiedComplex)> {
    vec![
        ("cone-circle-apex", apex_stratified(&sphere(1))),
        ("cone-sphere2-apex", apex_stratified(&sphere(2))),
        ("cone-sphere3-apex", apex_stratified(&sphere(3))),
        ("cone-torus-apex", apex_stratified(&torus())),
        ("sphere3-along-cycle", sphere3_along_cycle()),
        ("circle3xsphere2-along-circle", circle_times_sphere2_along_circle()),
    ]
}

/// Spaces satisfying the hypotheses of the norm comparison.
pub fn main_theorem_cases() -> Vec<(&'static str, StratifiedComplex)> {
    vec![("sphere3-along-cycle", sphere3_along_cycle()), ("circle3xsphere2-along-circle", circle_times_sphere2_along_circle())]
}

/// Named two-piece covers of smooth spaces.
pub fn covers() -> Vec<(&'static str, Cover)> {
    let c3 = circle(3).expect("valid");
    let arcs = Cover::new(
        c3.clone(),
        c3.subcomplex(&[vec![0, 1], vec![1, 2]]).expect("arc"),
        c3.subcomplex(&[vec![0, 2]]).expect("arc"),
    )
    .expect("cover");
    let c5 = circle(5).expect("valid");
    let halves = Cover::new(
        c5.clone(),
        c5.subcomplex(&[vec![0, 1], vec![1, 2], vec![2, 3]]).expect("arc"),
        c5.subcomplex(&[vec![3, 4], vec![0, 4]]).expect("arc"),
    )
    .expect("cover");
    let s2 = sphere(2);
    let disks = Cover::new(
        s2.clone(),
        s2.subcomplex(&[vec![0, 1, 2], vec![0, 1, 3]]).expect("disk"),
        s2.subcomplex(&[vec![0, 2, 3], vec![1, 2, 3]]).expect("disk"),
    )
    .expect("cover");
    let w = circle(3).expect("valid");
    let t = torus();
    let annuli = Cover::new(
        t.clone(),
        product_subcomplex(&w, &w, &t, &w.subcomplex(&[vec![0, 1], vec![1, 2]]).expect("arc"), &w),
        product_subcomplex(&w, &w, &t, &w.subcomplex(&[vec![0, 2]]).expect("arc"), &w),
    )
    .expect("cover");
    let rp2 = projective_plane();
    let maximal = rp2.maximal_simplices();
    let mobius = Cover::new(
        rp2.clone(),
        rp2.subcomplex(&maximal[..5]).expect("piece"),
        rp2.subcomplex(&maximal[4..]).expect("piece"),
    )
    .expect("cover");
    vec![
        ("circle3-arcs", arcs),
        ("circle5-halves", halves),
        ("sphere2-disks", disks),
        ("torus-annuli", annuli),
        ("rp2-split", mobius),
    ]
}

/// Barycentric subdivision of the cone over the circle, with the vertex at
/// the apex.
pub fn subdivided_cone_circle() -> (StratifiedComplex, usize) {
    let base = apex_stratified(&sphere(1));
    let sd = barycentric_subdivision(base.complex());
    let strat = base.subdivide(&sd).expect("subdivision");
    let apex = sd.barycenters.iter().position(|s| s == &vec![cone_apex(&sphere(1))]).expect("apex barycenter");
    (strat, apex)
}

/// Subdivided cone over the circle with its apex star and the collar.
pub fn cone_star_collar() -> (StratifiedComplex, Cover) {
    let (strat, apex) = subdivided_cone_circle();
    let k = strat.complex();
    let star = k.closed_star(apex);
    let collar: Vec<Vec<usize>> = k.maximal_simplices().into_iter().filter(|s| !s.contains(&apex)).collect();
    let cover = Cover::new(k.clone(), star, k.subcomplex(&collar).expect("collar")).expect("cover");
    (strat, cover)
}

/// Spaces for randomly drawn covers.
pub fn cover_spaces() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("circle5", circle(5).expect("valid")),
        ("sphere2", sphere(2)),
        ("rp2", projective_plane()),
        ("torus", torus()),
        ("sd-circle3", barycentric_subdivision(&circle(3).expect("valid")).complex),
        ("sd-sphere2", barycentric_subdivision(&sphere(2)).complex),
    ]
}
