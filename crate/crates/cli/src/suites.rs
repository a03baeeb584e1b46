//! Verification suites. Each suite expands into independent cases that run
//! on a worker pool; reports are sorted by case id.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use reidemeister_core::chain::{homology, torsion};
use reidemeister_core::hodge::{cm_check, GradedInnerProduct};
use reidemeister_core::linalg::Rational;
use reidemeister_core::sequences::{
    gluing_check, intersection_kunneth_check, kunneth_check, phi_check, Cover, CoverModels, KunnethReport,
};
use reidemeister_core::spaces::{product, SimplicialComplex};
use reidemeister_core::stratified::{compare_norms, Perversity, StratifiedComplex};
use reidemeister_core::{BasedChainComplex, Error};

use crate::catalog;
use crate::document::{format_rational, Resolved, Subject};
use crate::random::{case_rng, pinned_assignment, random_assignment, random_complex, random_inner_product};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Gluing,
    Phi,
    Kunneth,
    Cm,
    MainTheorem,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Gluing, Suite::Phi, Suite::Kunneth, Suite::Cm, Suite::MainTheorem];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Gluing => "gluing",
            Suite::Phi => "phi",
            Suite::Kunneth => "kunneth",
            Suite::Cm => "cm",
            Suite::MainTheorem => "main-theorem",
        }
    }

    pub fn identity(self) -> &'static str {
        match self {
            Suite::Gluing => "tau(M) tau(A) tau(E) F = tau(M1) tau(M2)",
            Suite::Phi => "tau(E) F tau(M) = tau(M1) tau(M2) / tau(A), tau(E) by pivots = by contraction",
            Suite::Kunneth => "tau(W x K) = tau(W)^chi(K) tau(K)^chi(W)",
            Suite::Cm => "T^2 vol(h) = tau(h)^2 vol(cells)",
            Suite::MainTheorem => "intersection norm = Reidemeister norm",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// The case does not meet the hypotheses of the identity.
    Skipped,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub id: String,
    pub suite: &'static str,
    pub identity: &'static str,
    pub status: Status,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub catalog_version: u32,
    pub suites: Vec<&'static str>,
    pub seed: u64,
    pub max_simplices: usize,
    pub cases: Vec<CaseReport>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0 && self.summary.errors == 0
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    pub max_simplices: usize,
    /// Random complexes in the `cm` suite.
    pub cm_cases: usize,
    /// Random covers per catalog space in the `gluing` and `phi` suites.
    pub random_covers: usize,
    pub workers: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 0, max_simplices: 2000, cm_cases: 100, random_covers: 3, workers: None }
    }
}

type Run = Box<dyn Fn() -> Outcome + Send + Sync>;

struct Case {
    id: String,
    suite: Suite,
    run: Run,
}

struct Outcome {
    status: Status,
    lhs: Option<Rational>,
    rhs: Option<Rational>,
    details: BTreeMap<String, String>,
}

impl Outcome {
    fn compare(lhs: Rational, rhs: Rational, details: BTreeMap<String, String>) -> Self {
        let status = if lhs == rhs { Status::Pass } else { Status::Fail };
        Outcome { status, lhs: Some(lhs), rhs: Some(rhs), details }
    }

    fn error(e: Error) -> Self {
        let status = match e {
            Error::IncompatibleCover(_) => Status::Skipped,
            _ => Status::Error,
        };
        Outcome { status, lhs: None, rhs: None, details: BTreeMap::from([("reason".to_string(), e.to_string())]) }
    }
}

fn details<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn fmt(x: &Rational) -> String {
    format_rational(x)
}

fn outcome(r: Result<Outcome, Error>) -> Outcome {
    r.unwrap_or_else(Outcome::error)
}

fn gluing_case(models: &CoverModels) -> Outcome {
    outcome((|| {
        let g = gluing_check(models, &models.canonical_bases())?;
        Ok(Outcome::compare(
            g.lhs,
            g.rhs,
            details([
                ("tau_whole", fmt(&g.whole)),
                ("tau_first", fmt(&g.first)),
                ("tau_second", fmt(&g.second)),
                ("tau_intersection", fmt(&g.intersection)),
                ("tau_sequence", fmt(&g.sequence)),
                ("compatibility", fmt(&g.compatibility)),
            ]),
        ))
    })())
}

fn phi_case(models: &CoverModels) -> Outcome {
    outcome((|| {
        let p = phi_check(models, &models.canonical_bases())?;
        let mut out = Outcome::compare(
            p.norm_lhs.clone(),
            p.norm_rhs.clone(),
            details([("sequence_pivot", fmt(&p.sequence_pivot)), ("sequence_contraction", fmt(&p.sequence_contraction))]),
        );
        if !p.holds() {
            out.status = Status::Fail;
        }
        Ok(out)
    })())
}

fn kunneth_outcome(r: KunnethReport) -> Outcome {
    Outcome::compare(
        r.lhs,
        r.rhs,
        details([
            ("tau_first", fmt(&r.first)),
            ("tau_second", fmt(&r.second)),
            ("first_exponent", r.first_exponent.to_string()),
            ("second_exponent", r.second_exponent.to_string()),
        ]),
    )
}

fn cm_outcome(complex: &BasedChainComplex, gram: &GradedInnerProduct) -> Outcome {
    outcome(cm_check(complex, gram).map(|r| {
        Outcome::compare(
            r.lhs,
            r.rhs,
            details([
                ("analytic_squared", fmt(&r.analytic_squared)),
                ("reidemeister_squared", fmt(&r.reidemeister_squared)),
                ("harmonic_volume", fmt(&r.harmonic_volume)),
                ("cell_volume", fmt(&r.cell_volume)),
            ]),
        )
    }))
}

fn main_theorem_outcome(strat: &StratifiedComplex, p: &Perversity) -> Outcome {
    outcome(compare_norms(strat, p).map(|c| {
        let betti = |b: &[usize]| b.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        let mut out = Outcome::compare(
            c.intersection_norm.clone(),
            c.classical_norm.clone(),
            details([
                ("intersection_betti", betti(&c.intersection_betti)),
                ("classical_betti", betti(&c.classical_betti)),
                ("intersection_torsion", fmt(&c.intersection_torsion)),
                ("classical_torsion", fmt(&c.classical_torsion)),
            ]),
        );
        if !c.holds() {
            out.status = Status::Fail;
        }
        out
    }))
}

fn perversity_name(p: &Perversity) -> String {
    match p.name() {
        Some(n) => n.to_string(),
        None => match p {
            Perversity::Table(t) => {
                let t: Vec<String> = t.iter().map(ToString::to_string).collect();
                format!("table[{}]", t.join(","))
            }
            _ => format!("{p:?}"),
        },
    }
}

const MIDDLE: [Perversity; 2] = [Perversity::LowerMiddle, Perversity::UpperMiddle];

/// Classical and intersection covers for the `gluing` and `phi` suites.
fn cover_cases(suite: Suite, opts: &VerifyOptions, cases: &mut Vec<Case>) {
    let check = move |models: &CoverModels| match suite {
        Suite::Phi => phi_case(models),
        _ => gluing_case(models),
    };
    for (name, cover) in catalog::covers() {
        if cover.space().total() > opts.max_simplices {
            continue;
        }
        cases.push(Case {
            id: format!("{suite}/named/{name}"),
            suite,
            run: Box::new(move || check(&CoverModels::classical(&cover))),
        });
    }
    for (i, (name, space)) in catalog::cover_spaces().into_iter().enumerate() {
        if space.total() > opts.max_simplices {
            continue;
        }
        for j in 0..opts.random_covers {
            let seed = opts.seed;
            let space = space.clone();
            cases.push(Case {
                id: format!("{suite}/random/{name}/{j:03}"),
                suite,
                run: Box::new(move || {
                    let mut rng = case_rng(seed, (i * 1000 + j) as u64);
                    let assignment = random_assignment(&mut rng, space.maximal_simplices().len());
                    match Cover::from_assignment(&space, &assignment) {
                        Ok(cover) => check(&CoverModels::classical(&cover)),
                        Err(e) => Outcome::error(e),
                    }
                }),
            });
        }
    }
    for p in MIDDLE {
        let pname = perversity_name(&p);
        let p2 = p.clone();
        cases.push(Case {
            id: format!("{suite}/intersection/cone-circle-star-collar/{pname}"),
            suite,
            run: Box::new(move || {
                let (strat, cover) = catalog::cone_star_collar();
                match CoverModels::intersection(&strat, &p2, &cover) {
                    Ok(models) => check(&models),
                    Err(e) => Outcome::error(e),
                }
            }),
        });
        let (strat, apex) = catalog::subdivided_cone_circle();
        for j in 0..opts.random_covers {
            let (seed, strat, p) = (opts.seed, strat.clone(), p.clone());
            cases.push(Case {
                id: format!("{suite}/intersection/random/sd-cone-circle/{pname}/{j:03}"),
                suite,
                run: Box::new(move || {
                    let mut rng = case_rng(seed, 1_000_000 + j as u64);
                    let maximal = strat.complex().maximal_simplices();
                    let assignment = pinned_assignment(&mut rng, &maximal, |s| s.contains(&apex));
                    let r = Cover::from_assignment(strat.complex(), &assignment)
                        .and_then(|cover| CoverModels::intersection(&strat, &p, &cover));
                    match r {
                        Ok(models) => check(&models),
                        Err(e) => Outcome::error(e),
                    }
                }),
            });
        }
    }
}

/// Small smooth spaces whose products enter the `kunneth` suite.
fn kunneth_factors() -> Vec<(&'static str, SimplicialComplex)> {
    catalog::smooth().into_iter().filter(|(n, _)| *n != "sphere3").collect()
}

/// Cheap upper bound on the number of simplices of `W x K`, used to skip
/// products far over budget before building them.
fn product_size(w: &SimplicialComplex, k: &SimplicialComplex) -> usize {
    let dw = w.dimension().unwrap_or(0);
    let dk = k.dimension().unwrap_or(0);
    let paths = binomial(dw + dk, dw);
    w.total().saturating_mul(k.total()).saturating_mul(paths)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn kunneth_cases(opts: &VerifyOptions, cases: &mut Vec<Case>) {
    let factors = kunneth_factors();
    for (i, (wn, w)) in factors.iter().enumerate() {
        for (kn, k) in &factors[i..] {
            if product_size(w, k) > 4 * opts.max_simplices {
                continue;
            }
            let (w, k) = (w.clone(), k.clone());
            let max = opts.max_simplices;
            cases.push(Case {
                id: format!("kunneth/{wn}x{kn}"),
                suite: Suite::Kunneth,
                run: Box::new(move || {
                    let size = product(&w, &k).total();
                    if size > max {
                        return Outcome {
                            status: Status::Skipped,
                            lhs: None,
                            rhs: None,
                            details: details([("reason", format!("{size} simplices exceeds the budget"))]),
                        };
                    }
                    let mut out = outcome(kunneth_check(&w, &k).map(kunneth_outcome));
                    out.details.insert("simplices".into(), size.to_string());
                    out
                }),
            });
        }
    }
    let strat: Vec<(&str, StratifiedComplex)> = catalog::stratified()
        .into_iter()
        .filter(|(n, _)| *n == "cone-circle-apex" || *n == "cone-sphere2-apex")
        .collect();
    for (wn, w) in factors.iter().filter(|(n, _)| ["point", "edge", "circle3", "circle4"].contains(n)) {
        for (kn, k) in &strat {
            for p in MIDDLE {
                let (w, k, p2) = (w.clone(), k.clone(), p.clone());
                cases.push(Case {
                    id: format!("kunneth/intersection/{wn}x{kn}/{}", perversity_name(&p)),
                    suite: Suite::Kunneth,
                    run: Box::new(move || outcome(intersection_kunneth_check(&w, &k, &p2).map(kunneth_outcome))),
                });
            }
        }
    }
}

fn cm_cases(opts: &VerifyOptions, cases: &mut Vec<Case>) {
    for i in 0..opts.cm_cases {
        let seed = opts.seed;
        cases.push(Case {
            id: format!("cm/random/{i:04}"),
            suite: Suite::Cm,
            run: Box::new(move || {
                let mut rng = case_rng(seed, 2_000_000 + i as u64);
                let c = random_complex(&mut rng, 4, 6);
                let g = if i % 2 == 0 { GradedInnerProduct::identity(&c) } else { random_inner_product(&mut rng, &c) };
                cm_outcome(&c, &g)
            }),
        });
    }
    for (name, k) in catalog::smooth() {
        if k.total() > 60.min(opts.max_simplices) {
            continue;
        }
        cases.push(Case {
            id: format!("cm/catalog/{name}"),
            suite: Suite::Cm,
            run: Box::new(move || {
                let c = k.chain_complex();
                cm_outcome(&c, &GradedInnerProduct::identity(&c))
            }),
        });
    }
}

fn main_theorem_cases(opts: &VerifyOptions, cases: &mut Vec<Case>) {
    for (name, strat) in catalog::main_theorem_cases() {
        if strat.complex().total() > opts.max_simplices {
            continue;
        }
        for p in MIDDLE {
            let (strat, p2) = (strat.clone(), p.clone());
            cases.push(Case {
                id: format!("main-theorem/{name}/{}", perversity_name(&p)),
                suite: Suite::MainTheorem,
                run: Box::new(move || main_theorem_outcome(&strat, &p2)),
            });
        }
    }
}

/// Cases contributed by user documents.
fn document_cases(suites: &[Suite], docs: &[Resolved], cases: &mut Vec<Case>) {
    for (i, doc) in docs.iter().enumerate() {
        let tag = format!("doc{i:02}-{}", doc.name.replace(['/', ' '], "_"));
        for &suite in suites {
            let run: Option<Run> = match (suite, &doc.subject) {
                (Suite::Cm, Subject::Chain(c)) => {
                    let c = c.clone();
                    Some(Box::new(move || cm_outcome(&c, &GradedInnerProduct::identity(&c))))
                }
                (Suite::Cm, Subject::Space { complex, .. }) => {
                    let c = complex.chain_complex();
                    Some(Box::new(move || cm_outcome(&c, &GradedInnerProduct::identity(&c))))
                }
                (Suite::Kunneth, Subject::Space { complex, strat: None }) => {
                    let k = complex.clone();
                    Some(Box::new(move || {
                        let w = reidemeister_core::spaces::circle(3).expect("valid");
                        outcome(kunneth_check(&w, &k).map(kunneth_outcome))
                    }))
                }
                (Suite::MainTheorem, Subject::Space { strat: Some(strat), .. }) => {
                    let strat = strat.clone();
                    let perversities = match &doc.perversity {
                        Some(p) => vec![p.clone()],
                        None => MIDDLE.to_vec(),
                    };
                    for p in perversities {
                        let strat = strat.clone();
                        cases.push(Case {
                            id: format!("main-theorem/{tag}/{}", perversity_name(&p)),
                            suite,
                            run: Box::new(move || main_theorem_outcome(&strat, &p)),
                        });
                    }
                    None
                }
                _ => None,
            };
            if let Some(run) = run {
                cases.push(Case { id: format!("{suite}/{tag}"), suite, run });
            }
        }
    }
}

fn build_cases(suites: &[Suite], opts: &VerifyOptions, docs: &[Resolved]) -> Vec<Case> {
    let mut cases = Vec::new();
    for &suite in suites {
        match suite {
            Suite::Gluing | Suite::Phi => cover_cases(suite, opts, &mut cases),
            Suite::Kunneth => kunneth_cases(opts, &mut cases),
            Suite::Cm => cm_cases(opts, &mut cases),
            Suite::MainTheorem => main_theorem_cases(opts, &mut cases),
        }
    }
    document_cases(suites, docs, &mut cases);
    cases
}

/// Runs the suites on a pool of `opts.workers` threads (all cores if unset).
pub fn verify(suites: &[Suite], opts: &VerifyOptions, docs: &[Resolved]) -> VerifyReport {
    let cases = build_cases(suites, opts, docs);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = opts.workers {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().expect("thread pool");
    let mut reports: Vec<CaseReport> = pool.install(|| {
        cases
            .par_iter()
            .map(|case| {
                let o = (case.run)();
                CaseReport {
                    id: case.id.clone(),
                    suite: case.suite.name(),
                    identity: case.suite.identity(),
                    status: o.status,
                    lhs: o.lhs.as_ref().map(fmt),
                    rhs: o.rhs.as_ref().map(fmt),
                    details: o.details,
                }
            })
            .collect()
    });
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    let mut summary = Summary { total: reports.len(), ..Summary::default() };
    for r in &reports {
        match r.status {
            Status::Pass => summary.passed += 1,
            Status::Fail => summary.failed += 1,
            Status::Skipped => summary.skipped += 1,
            Status::Error => summary.errors += 1,
        }
    }
    VerifyReport {
        schema_version: crate::document::SCHEMA_VERSION,
        catalog_version: catalog::CATALOG_VERSION,
        suites: suites.iter().map(|s| s.name()).collect(),
        seed: opts.seed,
        max_simplices: opts.max_simplices,
        cases: reports,
        summary,
    }
}

/// Torsion of a resolved document: classical unless a perversity applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionReport {
    pub name: String,
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perversity: Option<String>,
    pub betti: Vec<usize>,
    pub torsion: String,
    /// Homology basis used, in simplex (or chain) coordinates.
    pub homology_basis: Vec<Vec<Vec<String>>>,
}

pub fn torsion_report(doc: &Resolved, perversity: Option<&Perversity>) -> Result<TorsionReport, Error> {
    use reidemeister_core::stratified::ChainModel;
    let basis_strings = crate::document::basis_strings;
    match (&doc.subject, perversity) {
        (Subject::Chain(c), None) => {
            let h = doc.basis.clone().unwrap_or_else(|| homology(c).basis);
            let tau = torsion(c, &h)?;
            Ok(TorsionReport {
                name: doc.name.clone(),
                kind: "chain",
                perversity: None,
                betti: homology(c).betti,
                torsion: tau.to_string(),
                homology_basis: basis_strings(&h),
            })
        }
        (Subject::Chain(_), Some(_)) => Err(Error::InvalidPerversity("a chain complex has no stratification".into())),
        (Subject::Space { complex, .. }, None) => {
            let c = complex.chain_complex();
            let h = doc.basis.clone().unwrap_or_else(|| homology(&c).basis);
            let tau = torsion(&c, &h)?;
            Ok(TorsionReport {
                name: doc.name.clone(),
                kind: "simplicial",
                perversity: None,
                betti: homology(&c).betti,
                torsion: tau.to_string(),
                homology_basis: basis_strings(&h),
            })
        }
        (Subject::Space { complex, strat }, Some(p)) => {
            let strat = strat.clone().unwrap_or_else(|| StratifiedComplex::smooth(complex.clone()));
            let model = ChainModel::intersection(&strat, p)?;
            let (h_cells, h) = match &doc.basis {
                Some(cells) => (cells.clone(), model.basis_from_cells(cells)?),
                None => {
                    let h = homology(model.complex()).basis;
                    (model.basis_to_cells(&h), h)
                }
            };
            let tau = torsion(model.complex(), &h)?;
            Ok(TorsionReport {
                name: doc.name.clone(),
                kind: "intersection",
                perversity: Some(perversity_name(p)),
                betti: homology(model.complex()).betti,
                torsion: tau.to_string(),
                homology_basis: basis_strings(&h_cells),
            })
        }
    }
}
