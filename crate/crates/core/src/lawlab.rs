//! Executable counterexamples and seeded property suites.
//!
//! The demos reproduce, at desk scale, each structural failure the rest of
//! the crate works around: equalizers not preserved, partial isometries not
//! closed under composition, no binary coproducts, unbounded cotuples,
//! dense-range non-isomorphisms, and non-commuting kernel projectors. The
//! suites drive every module's laws over seeded random inputs; given the
//! same parameters they are deterministic and schedule-independent, since
//! each case derives its own RNG stream from `(seed, case index)`.

use num_complex::Complex;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factorize::{self, PolarFlavor, PolarSide};
use crate::hilb;
use crate::inversecat;
use crate::ltwo::{self, ltwo_morphism, PreservationLaw};
use crate::numerics::{
    approx_eq, hermitian_eigenvalues, operator_norm, rank, svd, svd_full, Matrix,
};
use crate::pinj::{self, ChainDiagram, FiniteSet, PartialInjection};

type Matrix64 = Matrix<f64>;

const CHECK_TOL: f64 = 1e-8;

fn fmt_graph(f: &PartialInjection) -> String {
    if f.graph().is_empty() {
        return "{}".into();
    }
    let pairs: Vec<String> = f
        .graph()
        .iter()
        .map(|(a, b)| format!("{a}>{b}"))
        .collect();
    format!("{{{}}}", pairs.join(","))
}

// ---------------------------------------------------------------------------
// demos
// ---------------------------------------------------------------------------

/// The equalizer of `f = {0 -> a}` and `g = {1 -> a}` is empty among partial
/// injections, but the kernel of the difference of their matrix images is a
/// line.
#[derive(Debug, Clone, Serialize)]
pub struct EqualizerDemo {
    pub pinj_size: usize,
    pub hilb_dim: usize,
}

pub fn demo_equalizer_nonpreservation() -> Result<EqualizerDemo> {
    let dom = FiniteSet::new(["0", "1"])?;
    let cod = FiniteSet::new(["a"])?;
    let f = PartialInjection::new(dom.clone(), cod.clone(), [("0", "a")])?;
    let g = PartialInjection::new(dom, cod, [("1", "a")])?;
    let (e, _) = pinj::equalizer(&f, &g)?;
    let basis = hilb::equalizer(
        &ltwo_morphism::<f64>(&f).matrix,
        &ltwo_morphism::<f64>(&g).matrix,
    )?;
    Ok(EqualizerDemo {
        pinj_size: e.len(),
        hilb_dim: basis.cols(),
    })
}

/// The composite of the coisometric row `(sin t, cos t)` with the isometric
/// column `(1, 0)` is the scalar `sin t`, a partial isometry only when `t`
/// is a multiple of pi/2.
#[derive(Debug, Clone, Serialize)]
pub struct IsometryCompositionDemo {
    pub theta: f64,
    pub composite: f64,
    pub is_partial_isometry: bool,
}

pub fn demo_isometry_composition(theta: f64) -> Result<IsometryCompositionDemo> {
    let row = Matrix64::from_real(1, 2, &[theta.sin(), theta.cos()])?;
    let col = Matrix64::from_real(2, 1, &[1.0, 0.0])?;
    let composite = row.mul(&col)?;
    let class = hilb::classify(&composite, None)?;
    Ok(IsometryCompositionDemo {
        theta,
        composite: composite[(0, 0)].re,
        is_partial_isometry: class.is_partial_isometry,
    })
}

/// Outcome of testing one coproduct candidate `(Z, i, j)`.
#[derive(Debug, Clone, Serialize)]
pub struct CandidateOutcome {
    pub candidate: String,
    pub survives: bool,
    pub witness: Option<String>,
}

/// Result of the exhaustive binary-coproduct search.
#[derive(Debug, Clone, Serialize)]
pub struct CoproductReport {
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub size_bound: usize,
    pub candidates_examined: usize,
    pub survivors: Vec<String>,
    pub outcomes: Vec<CandidateOutcome>,
}

/// Exhaustively test every candidate coproduct of `x` and `y` up to
/// `size_bound`: each candidate object `Z` with each pair of coprojections
/// is run against every test cospan into sets of size at most 3, counting
/// mediating morphisms. A candidate survives only if every cospan admits
/// exactly one mediator.
pub fn search_binary_coproduct(
    x: &FiniteSet,
    y: &FiniteSet,
    size_bound: usize,
) -> Result<CoproductReport> {
    if x.len() > 2 || y.len() > 2 || size_bound > 4 {
        return Err(Error::Resource(format!(
            "coproduct search is exhaustive; needs |x|, |y| <= 2 and bound <= 4, got {}, {}, {size_bound}",
            x.len(),
            y.len()
        )));
    }
    let cospan_bound = 3usize;
    let mut outcomes = Vec::new();
    for n in 0..=size_bound {
        let z = FiniteSet::indices(n);
        for i in pinj::all_partial_injections(x, &z) {
            for j in pinj::all_partial_injections(y, &z) {
                let candidate =
                    format!("Z={n} i={} j={}", fmt_graph(&i), fmt_graph(&j));
                let mut witness = None;
                'cospans: for w in 0..=cospan_bound {
                    let tip = FiniteSet::indices(w);
                    for f in pinj::all_partial_injections(x, &tip) {
                        for g in pinj::all_partial_injections(y, &tip) {
                            let mut mediators = 0usize;
                            for m in pinj::all_partial_injections(&z, &tip) {
                                if pinj::compose(&m, &i)? == f && pinj::compose(&m, &j)? == g {
                                    mediators += 1;
                                }
                            }
                            if mediators != 1 {
                                witness = Some(format!(
                                    "cospan to W={w} with f={} g={} has {mediators} mediating maps",
                                    fmt_graph(&f),
                                    fmt_graph(&g)
                                ));
                                break 'cospans;
                            }
                        }
                    }
                }
                outcomes.push(CandidateOutcome {
                    candidate,
                    survives: witness.is_none(),
                    witness,
                });
            }
        }
    }
    Ok(CoproductReport {
        x: x.labels().to_vec(),
        y: y.labels().to_vec(),
        size_bound,
        candidates_examined: outcomes.len(),
        survivors: outcomes
            .iter()
            .filter(|o| o.survives)
            .map(|o| o.candidate.clone())
            .collect(),
        outcomes,
    })
}

/// The cotuple row `(1, 2, ..., n)` has norm `sqrt(sum k^2) >= n`: the
/// family of component norms grows without bound.
#[derive(Debug, Clone, Serialize)]
pub struct CotupleDemo {
    pub n: usize,
    pub norm: f64,
    pub lower_bound: f64,
}

pub fn demo_unbounded_cotuple(n: usize) -> Result<CotupleDemo> {
    let entries: Vec<f64> = (1..=n).map(|k| k as f64).collect();
    let row = Matrix64::from_real(1, n, &entries)?;
    Ok(CotupleDemo {
        n,
        norm: operator_norm(&row)?,
        lower_bound: n as f64,
    })
}

/// `diag(1, 1/2, ..., 1/n)` is injective, self-adjoint and positive, yet
/// its inverse norm is `n`: the finite shadow of a monic epi that is no
/// isomorphism.
#[derive(Debug, Clone, Serialize)]
pub struct DenseRangeDemo {
    pub n: usize,
    pub rank: usize,
    pub is_self_adjoint: bool,
    pub min_singular_value: f64,
    pub inverse_norm: f64,
}

pub fn demo_dense_range_noniso(n: usize) -> Result<DenseRangeDemo> {
    let values: Vec<f64> = (1..=n).map(|k| 1.0 / k as f64).collect();
    let a = Matrix64::diag_real(&values);
    let class = hilb::classify(&a, None)?;
    let decomposition = svd(&a, None)?;
    let inverse = hilb::positive_inverse(&a, None)?;
    Ok(DenseRangeDemo {
        n,
        rank: decomposition.rank(),
        is_self_adjoint: class.is_self_adjoint,
        min_singular_value: decomposition.sigma.last().copied().unwrap_or(0.0),
        inverse_norm: operator_norm(&inverse)?,
    })
}

/// Two rank-one projectors whose commutator has norm 1/2: projections onto
/// kernel complements need not commute.
#[derive(Debug, Clone, Serialize)]
pub struct RestrictionDemo {
    pub projector_a: Matrix64,
    pub projector_b: Matrix64,
    pub commutator_norm: f64,
}

pub fn demo_restriction_failure() -> Result<RestrictionDemo> {
    // projections onto span(e1) and span(e1 + e2)
    let a = Matrix64::from_real(2, 2, &[1.0, 0.0, 0.0, 0.0])?;
    let b = Matrix64::from_real(2, 2, &[0.5, 0.5, 0.5, 0.5])?;
    let commutator = a.mul(&b)?.sub(&b.mul(&a)?)?;
    Ok(RestrictionDemo {
        projector_a: a,
        projector_b: b,
        commutator_norm: operator_norm(&commutator)?,
    })
}

// ---------------------------------------------------------------------------
// seeded generation
// ---------------------------------------------------------------------------

fn label_set(prefix: &str, n: usize) -> FiniteSet {
    FiniteSet::new((0..n).map(|k| format!("{prefix}{k}"))).expect("distinct labels")
}

fn rand_set(rng: &mut ChaCha8Rng, prefix: &str, min_size: usize, max_size: usize) -> FiniteSet {
    label_set(prefix, rng.gen_range(min_size..=max_size.max(min_size)))
}

fn rand_pinj(rng: &mut ChaCha8Rng, x: &FiniteSet, y: &FiniteSet) -> PartialInjection {
    let k = rng.gen_range(0..=x.len().min(y.len()));
    let mut dom_idx: Vec<usize> = (0..x.len()).collect();
    let mut cod_idx: Vec<usize> = (0..y.len()).collect();
    dom_idx.shuffle(rng);
    cod_idx.shuffle(rng);
    let mut pairs: Vec<(String, String)> = dom_idx[..k]
        .iter()
        .zip(&cod_idx[..k])
        .map(|(&a, &b)| (x.labels()[a].clone(), y.labels()[b].clone()))
        .collect();
    pairs.sort();
    PartialInjection::new(x.clone(), y.clone(), pairs).expect("sampled injectively")
}

/// A random `g` with `f <= g`: extend `f` on some unused domain labels
/// toward free codomain labels.
fn rand_extension(rng: &mut ChaCha8Rng, f: &PartialInjection) -> PartialInjection {
    let mut pairs: Vec<(String, String)> = f.graph().to_vec();
    let mut free: Vec<&String> = f
        .cod()
        .labels()
        .iter()
        .filter(|l| f.preimage(l).is_none())
        .collect();
    free.shuffle(rng);
    for x in f.dom().labels() {
        if f.apply(x).is_none() && !free.is_empty() && rng.gen_bool(0.5) {
            let y = free.pop().expect("nonempty");
            pairs.push((x.clone(), y.clone()));
        }
    }
    PartialInjection::new(f.dom().clone(), f.cod().clone(), pairs).expect("extension is injective")
}

fn rand_complex(rng: &mut ChaCha8Rng) -> Complex<f64> {
    // uniform on the unit disc
    let r = rng.gen::<f64>().sqrt();
    let phi = rng.gen::<f64>() * std::f64::consts::TAU;
    Complex::from_polar(r, phi)
}

fn rand_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix64 {
    Matrix64::from_fn(rows, cols, |_, _| rand_complex(rng))
}

fn rand_unitary(rng: &mut ChaCha8Rng, n: usize) -> Result<Matrix64> {
    let a = rand_matrix(rng, n, n);
    let full = svd_full(&a, None)?;
    full.u.mul(&full.v.adjoint())
}

fn rand_chain(rng: &mut ChaCha8Rng, max_len: usize, max_stage: usize) -> Result<ChainDiagram> {
    let len = rng.gen_range(1..=max_len.max(1));
    let stages: Vec<FiniteSet> = (0..len)
        .map(|i| rand_set(rng, &format!("s{i}e"), 0, max_stage))
        .collect();
    let links: Vec<PartialInjection> = stages
        .windows(2)
        .map(|w| rand_pinj(rng, &w[0], &w[1]))
        .collect();
    ChainDiagram::new(stages, links)
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

/// The suites [`run_suite`] understands. `canary` is a negative control
/// that checks a deliberately false law and must fail.
pub const SUITE_NAMES: &[&str] = &[
    "functor", "image", "full", "polar", "inverse", "colimit", "order", "rank", "svd", "pinj",
    "chain", "canary",
];

/// One failed case of a suite.
#[derive(Debug, Clone, Serialize)]
pub struct CaseFailure {
    pub case: u64,
    pub message: String,
}

/// Aggregate result of a seeded suite run. At most the first 16 failures
/// are kept; `passed` reflects all of them.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases: u64,
    pub failures: Vec<CaseFailure>,
    pub max_residual: f64,
    #[serde(skip)]
    failure_count: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

type CaseOutcome = std::result::Result<f64, String>;

fn err_str(e: Error) -> String {
    e.to_string()
}

/// Run the named invariant suite over `cases` seeded random inputs of size
/// at most `max_size`.
pub fn run_suite(name: &str, seed: u64, cases: u64, max_size: usize) -> Result<SuiteReport> {
    let case_fn: fn(&mut ChaCha8Rng, usize) -> CaseOutcome = match name {
        "functor" => functor_case,
        "image" => image_case,
        "full" => full_case,
        "polar" => polar_case,
        "inverse" => inverse_case,
        "colimit" => colimit_case,
        "order" => order_case,
        "rank" => rank_case,
        "svd" => svd_case,
        "pinj" => pinj_case,
        "chain" => chain_case,
        "canary" => canary_case,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    let mut failures = Vec::new();
    let mut failure_count = 0u64;
    let mut max_residual = 0.0f64;
    for case in 0..cases {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(case + 1);
        match case_fn(&mut rng, max_size.max(1)) {
            Ok(residual) => max_residual = max_residual.max(residual),
            Err(message) => {
                failure_count += 1;
                if failures.len() < 16 {
                    failures.push(CaseFailure { case, message });
                }
            }
        }
    }
    Ok(SuiteReport {
        suite: name.to_string(),
        seed,
        cases,
        failures,
        max_residual,
        failure_count,
    })
}

fn functor_case(rng: &mut ChaCha8Rng, max_size: usize) -> CaseOutcome {
    let x = rand_set(rng, "x", 0, max_size);
    let y = rand_set(rng, "y", 0, max_size);
    let z = rand_set(rng, "z", 0, max_size);
    let f = rand_pinj(rng, &x, &y);
    let g = rand_pinj(rng, &y, &z);
    let f_ext = rand_extension(rng, &f);
    let checks = [
        ltwo::verify_preservation::<f64>(PreservationLaw::Functoriality, &f, Some(&g)),
        ltwo::verify_preservation::<f64>(PreservationLaw::Dagger, &f, None),
        ltwo::verify_preservation::<f64>(PreservationLaw::Tensor, &f, Some(&g)),
        ltwo::verify_preservation::<f64>(PreservationLaw::Oplus, &f, Some(&g)),
        ltwo::verify_preservation::<f64>(PreservationLaw::Order, &f, Some(&f_ext)),
    ];
    let mut residual = 0.0f64;
    for check in checks {
        let report = check.map_err(err_str)?;
        if !report.pass {
            return Err(format!(
                "law {} failed with residual {} on f={} g={}",
                report.law,
                report.residual,
                fmt_graph(&f),
                fmt_graph(&g)
            ));
        }
        residual = residual.max(report.residual);
    }
    Ok(residual)
}

fn image_case(rng: &mut ChaCha8Rng, max_size: usize) -> CaseOutcome {
    let x = rand_set(rng, "x", 1, max_size);
    let y = rand_set(rng, "y", 1, max_size);
    let f = rand_pinj(rng, &x, &y);
    let u = rand_unitary(rng, x.len()).map_err(err_str)?;
    let v = rand_unitary(rng, y.len()).map_err(err_str)?;
    let a = v
        .mul(&ltwo_morphism::<f64>(&f).matrix)
        .and_then(|m| m.mul(&u))
        .map_err(err_str)?;
    let class = hilb::classify(&a, None).map_err(err_str)?;
    if !class.is_partial_isometry || class.residuals.partial_isometry > CHECK_TOL {
        return Err(format!(
            "v.l2(f).u not recognized as a partial isometry; residual {}",
            class.residuals.partial_isometry
        ));
    }
    let fac = factorize::isometry_factor(&a, None).map_err(err_str)?;
    let recon = fac.reconstruct().map_err(err_str)?;
    let norm_a = operator_norm(&a).map_err(err_str)?;
    let residual = operator_norm(&recon.sub(&a).map_err(err_str)?).map_err(err_str)?;
    if residual > CHECK_TOL * norm_a.max(1.0) {
        return Err(format!("isometry_factor reconstruction residual {residual}"));
    }
    Ok(residual.max(class.residuals.partial_isometry))
}

fn full_case(rng: &mut ChaCha8Rng, max_size: usize) -> CaseOutcome {
    let rows = rng.gen_range(1..=max_size);
    let cols = rng.gen_range(1..=max_size);
    let g = rand_matrix(rng, rows, cols);
    let fac = factorize::essential_full_factor(&g, None).map_err(err_str)?;
    let recon = fac.reconstruct().map_err(err_str)?;
    let norm_g = operator_norm(&g).map_err(err_str)?;
    let residual = operator_norm(&recon.sub(&g).map_err(err_str)?).map_err(err_str)?;
    if residual > CHECK_TOL * norm_g.max(1.0) {
        return Err(format!("essential fullness residual {residual}"));
    }
    let u_class = hilb::classify(&fac.u, None).map_err(err_str)?;
    if !u_class.is_unitary {
        return Err("factor u is not unitary".into());
    }
    let v_svd = svd_full(&fac.v, None).map_err(err_str)?;
    let min_sigma = v_svd.sigma.last().copied().unwrap_or(0.0);
    if min_sigma <= 1e-10 {
        return Err(format!("factor v nearly singular; min sigma {min_sigma}"));
    }
    Ok(residual)
}

fn polar_case(rng: &mut ChaCha8Rng, max_size: usize) -> CaseOutcome {
    let rows = rng.gen_range(1..=max_size);
    let cols = rng.gen_range(1..=max_size);
    let a = rand_matrix(rng, rows, cols);
    let norm_a = operator_norm(&a).map_err(err_str)?;
    let sigma = svd(&a, None).map_err(err_str)?.sigma;
    let min_positive = sigma.last().copied().unwrap_or(1.0);
    let mut max_residual = 0.0f64;
    for side in [PolarSide::Left, PolarSide::Right] {
        for flavor in [PolarFlavor::KernelMatched, PolarFlavor::Strong] {
            let p = factorize::polar(&a, side, flavor, None).map_err(err_str)?;
            let recon = p.reconstruct().map_err(err_str)?;
            let residual =
                operator_norm(&recon.sub(&a).map_err(err_str)?).map_err(err_str)?;
            if residual > CHECK_TOL * norm_a.max(1.0) {
                return Err(format!("polar {side:?}/{flavor:?} residual {residual}"));
            }
            max_residual = max_residual.max(residual);
            match flavor {
                PolarFlavor::KernelMatched => {
                    // kernels agree as subspaces with the input's
                    let ci = hilb::coimage_projector(&p.isometry_part).map_err(err_str)?;
                    let ca = hilb::coimage_projector(&a).map_err(err_str)?;
                    if !approx_eq(&ci, &ca, CHECK_TOL).map_err(err_str)? {
                        return Err(format!("polar {side:?} kernel of i differs from kernel of a"));
                    }
                    let cp = match side {
                        PolarSide::Right => {
                            hilb::coimage_projector(&p.positive_part).map_err(err_str)?
                        }
                        PolarSide::Left => {
                            let ra = hilb::range_projector(&a).map_err(err_str)?;
                            let rp = hilb::range_projector(&p.positive_part).map_err(err_str)?;
                            if !approx_eq(&rp, &ra, CHECK_TOL).map_err(err_str)? {
                                return Err("left polar range of p differs from range of a".into());
                            }
                            continue;
                        }
                    };
                    if !approx_eq(&cp, &ca, CHECK_TOL).map_err(err_str)? {
                        return Err("right polar kernel of p differs from kernel of a".into());
                    }
                }
                PolarFlavor::Strong => {
                    let eigen =
                        hermitian_eigenvalues(&p.positive_part).map_err(err_str)?;
                    let min_eigen = eigen.iter().copied().fold(f64::INFINITY, f64::min);
                    let bound = min_positive.min(1.0) - CHECK_TOL;
                    if min_eigen < bound {
                        return Err(format!(
                            "strong polar positive part min eigenvalue {min_eigen} < {bound}"
                        ));
                    }
                }
            }
        }
    }
    Ok(max_residual)
}

fn inverse_case(rng: &mut ChaCha8Rng, max_size: usize) -> CaseOutcome {
    let n = rng.gen_range(2..=3usize.min(max_size.max(2)));
    let base = inversecat::symmetric_inverse_monoid(n);
    let count = rng.gen_range(1..=2usize);
    let mut ids: Vec<String> = base.morphisms().iter().map(|m| m.id.clone()).collect();
    ids.shuffle(rng);
    ids.truncate(count);
    let sub = inversecat::closed_subpresentation(&base, &ids).map_err(err_str)?;
    let report = inversecat::validate(&sub);
    if !report.passed() {
        return Err(format!("generated submonoid fails validation: {ids:?}"));
    }
    let emb = inversecat::wagner_preston(&sub).map_err(err_str)?;
    let check = inversecat::check_embedding(&sub, &emb).map_err(err_str)?;
    if !check.passed() {
        let law = check
            .checks
            .iter()
            .find(|c| !c.pass)
            .map(|c| c.law.clone())
            .unwrap_or_default();
        return Err(format!("embedding check {law} failed for generators {ids:?}"));
    }
    Ok(0.0)
}

fn colimit_case(rng: &mut ChaCha8Rng, max_size: usize) -> CaseOutcome {
    let bound = max_size.min(5);
    let d = rand_chain(rng, bound, bound).map_err(err_str)?;
    let (colimit, cocone) = pinj::chain_colimit(&d).map_err(err_str)?;
    // cocone commutes with the links
    for i in 0..d.links().len() {
        let via_link = pinj::compose(&cocone[i + 1], &d.links()[i]).map_err(err_str)?;
        if via_link != cocone[i] {
            return Err(format!("cocone leg {i} does not commute with its link"));
        }
    }
    // a random test cocone mediates uniquely, agreeing with the brute force
    let tip = rand_set(rng, "w", 0, bound);
    let t = rand_pinj(rng, &colimit, &tip);
    let test: Vec<PartialInjection> = cocone
        .iter()
        .map(|c| pinj::compose(&t, c))
        .collect::<Result<_>>()
        .map_err(err_str)?;
    let m = pinj::mediating_morphism(&d, &colimit, &cocone, &test).map_err(err_str)?;
    if m != t {
        return Err("mediating morphism differs from the map the test cocone came from".into());
    }
    let mut matches = 0usize;
    for candidate in pinj::all_partial_injections(&colimit, &tip) {
        let mut agrees = true;
        for (c, leg) in cocone.iter().zip(&test) {
            if pinj::compose(&candidate, c).map_err(err_str)? != *leg {
                agrees = false;
                break;
            }
        }
        if agrees {
            matches += 1;
        }
    }
    if matches != 1 {
        return Err(format!("expected a unique mediating morphism, found {matches}"));
    }
    // factorization through a finite stage
    let probe_src = rand_set(rng, "p", 0, bound);
    let probe = rand_pinj(rng, &probe_src, &colimit);
    let (j, g) = pinj::factor_through_stage(&d, &cocone, &probe).map_err(err_str)?;
    if pinj::compose(&cocone[j], &g).map_err(err_str)? != probe {
        return Err("stage factorization does not recompose".into());
    }
    if g.graph().len() != probe.graph().len() {
        return Err("stage factorization changed the domain of definition".into());
    }
    if j > 0 {
        let all_present = probe
            .graph()
            .iter()
            .all(|(_, cls)| cocone[j - 1].preimage(cls).is_some());
        if all_present {
            return Err(format!("stage {j} is not minimal"));
        }
    }
    Ok(0.0)
}

fn order_case(rng: &mut ChaCha8Rng, max_size: usize) -> CaseOutcome {
    let x = rand_set(rng, "x", 0, max_size);
    let y = rand_set(rng, "y", 0, max_size);
    let z = rand_set(rng, "z", 0, max_size);
    let f = rand_pinj(rng, &x, &y);
    let g = rand_extension(rng, &f);
    let h = rand_extension(rng, &g);
    let k = rand_pinj(rng, &y, &z);

    let leq = |a: &PartialInjection, b: &PartialInjection| pinj::leq(a, b).map_err(err_str);
    if !(leq(&f, &f)? && leq(&f, &g)? && leq(&g, &h)? && leq(&f, &h)?) {
        return Err("graph-inclusion order violates reflexivity/transitivity on a chain".into());
    }
    if g != f && leq(&g, &f)? {
        return Err("antisymmetry violated: g <= f for a strict extension g of f".into());
    }
    // composition is monotone
    let kf = pinj::compose(&k, &f).map_err(err_str)?;
    let kg = pinj::compose(&k, &g).map_err(err_str)?;
    if !leq(&kf, &kg)? {
        return Err("composition is not monotone".into());
    }
    // the functor preserves the order, in both truth values
    for (a, b) in [(&f, &g), (&g, &f), (&f, &h)] {
        let report = ltwo::verify_preservation::<f64>(PreservationLaw::Order, a, Some(b))
            .map_err(err_str)?;
        if !report.pass {
            return Err(format!(
                "order preservation failed on {} vs {}",
                fmt_graph(a),
                fmt_graph(b)
            ));
        }
    }
    // directed sups: the top of the chain, preserved by the functor
    let family = [f.clone(), g.clone(), h.clone()];
    let s = pinj::sup(&family).map_err(err_str)?;
    if s != h {
        return Err("sup of a chain is not its top".into());
    }
    let images: Vec<Matrix64> = family.iter().map(|m| ltwo_morphism(m).matrix).collect();
    let hilb_sup = hilb::max_of_directed(&images, None).map_err(err_str)?;
    if !approx_eq(&hilb_sup, &ltwo_morphism::<f64>(&s).matrix, 1e-12).map_err(err_str)? {
        return Err("functor image of the sup differs from the sup of the images".into());
    }
    // least upper bound, exhaustively on small sets
    if x.len() <= 3 && y.len() <= 3 {
        for candidate in pinj::all_partial_injections(&x, &y) {
            if leq(&f, &candidate)? && leq(&g, &candidate)? && leq(&h, &candidate)? {
                let two = pinj::sup(&[f.clone(), g.clone(), h.clone()]).map_err(err_str)?;
                if !leq(&two, &candidate)? {
                    return Err("sup is not the least upper bound".into());
                }
            }
        }
    }
    Ok(0.0)
}

fn rank_case(rng: &mut ChaCha8Rng, max_size: usize) -> CaseOutcome {
    let rows = rng.gen_range(1..=max_size);
    let cols = rng.gen_range(1..=max_size);
    let inner = rng.gen_range(1..=max_size);
    let a = rand_matrix(rng, rows, cols);
    let b = rand_matrix(rng, cols, inner);
    let r = rank(&a, None).map_err(err_str)?;
    let r_adjoint = rank(&a.adjoint(), None).map_err(err_str)?;
    let gram = a.adjoint().mul(&a).map_err(err_str)?;
    let r_gram = rank(&gram, None).map_err(err_str)?;
    if r != r_adjoint || r != r_gram {
        return Err(format!(
            "rank not stable under adjoint/gram: {r}, {r_adjoint}, {r_gram}"
        ));
    }
    let na = operator_norm(&a).map_err(err_str)?;
    let nb = operator_norm(&b).map_err(err_str)?;
    let nab = operator_norm(&a.mul(&b).map_err(err_str)?).map_err(err_str)?;
    if nab > na * nb + 1e-9 {
        return Err(format!("norm not submultiplicative: {nab} > {na}*{nb}"));
    }
    Ok((nab - na * nb).max(0.0))
}

fn svd_case(rng: &mut ChaCha8Rng, max_size: usize) -> CaseOutcome {
    let rows = rng.gen_range(1..=max_size);
    let cols = rng.gen_range(1..=max_size);
    let a = rand_matrix(rng, rows, cols);
    let dec = svd(&a, None).map_err(err_str)?;
    let norm_a = operator_norm(&a).map_err(err_str)?;
    let recon_residual =
        operator_norm(&dec.reconstruct().sub(&a).map_err(err_str)?).map_err(err_str)?;
    if recon_residual > 1e-9 * norm_a.max(1.0) {
        return Err(format!("svd reconstruction residual {recon_residual}"));
    }
    let r = dec.rank();
    let eye = Matrix64::identity(r);
    let gram_u = dec.u.adjoint().mul(&dec.u).map_err(err_str)?;
    let gram_v = dec.v.adjoint().mul(&dec.v).map_err(err_str)?;
    let ortho_u = operator_norm(&gram_u.sub(&eye).map_err(err_str)?).map_err(err_str)?;
    let ortho_v = operator_norm(&gram_v.sub(&eye).map_err(err_str)?).map_err(err_str)?;
    if ortho_u > 1e-9 || ortho_v > 1e-9 {
        return Err(format!("singular vectors not orthonormal: {ortho_u}, {ortho_v}"));
    }
    for w in dec.sigma.windows(2) {
        if w[0] < w[1] {
            return Err("singular values not descending".into());
        }
    }
    if dec.sigma.iter().any(|&s| s <= 0.0) {
        return Err("non-positive singular value kept".into());
    }
    Ok(recon_residual.max(ortho_u).max(ortho_v))
}

fn pinj_case(rng: &mut ChaCha8Rng, max_size: usize) -> CaseOutcome {
    let x = rand_set(rng, "x", 0, max_size);
    let y = rand_set(rng, "y", 0, max_size);
    let z = rand_set(rng, "z", 0, max_size);
    let w = rand_set(rng, "w", 0, max_size);
    let f = rand_pinj(rng, &x, &y);
    let g = rand_pinj(rng, &y, &z);
    let h = rand_pinj(rng, &z, &w);
    let compose = |a: &PartialInjection, b: &PartialInjection| pinj::compose(a, b).map_err(err_str);
    // category and dagger laws
    if compose(&h, &compose(&g, &f)?)? != compose(&compose(&h, &g)?, &f)? {
        return Err("composition not associative".into());
    }
    if pinj::dagger(&pinj::dagger(&f)) != f {
        return Err("dagger not involutive".into());
    }
    if pinj::dagger(&compose(&g, &f)?)
        != compose(&pinj::dagger(&f), &pinj::dagger(&g))?
    {
        return Err("dagger not contravariant".into());
    }
    if compose(&f, &compose(&pinj::dagger(&f), &f)?)? != f {
        return Err("f . f^dag . f differs from f".into());
    }
    // equalizer of a parallel pair
    let f2 = rand_pinj(rng, &x, &y);
    let (e_set, e) = pinj::equalizer(&f, &f2).map_err(err_str)?;
    if compose(&f, &e)? != compose(&f2, &e)? {
        return Err("equalizer does not equalize".into());
    }
    for label in x.labels() {
        let agree = match (f.apply(label), f2.apply(label)) {
            (None, None) => true,
            (Some(a), Some(b)) => a == b,
            _ => false,
        };
        if agree != e_set.contains(label) {
            return Err(format!("equalizer membership wrong at {label:?}"));
        }
    }
    // monoidal interchange
    let x2 = rand_set(rng, "p", 0, max_size);
    let y2 = rand_set(rng, "q", 0, max_size);
    let z2 = rand_set(rng, "r", 0, max_size);
    let f3 = rand_pinj(rng, &x2, &y2);
    let g3 = rand_pinj(rng, &y2, &z2);
    let lhs = pinj::tensor(&compose(&g, &f)?, &compose(&g3, &f3)?);
    let rhs = compose(&pinj::tensor(&g, &g3), &pinj::tensor(&f, &f3))?;
    if lhs != rhs {
        return Err("tensor does not satisfy interchange".into());
    }
    let lhs = pinj::oplus(&compose(&g, &f)?, &compose(&g3, &f3)?);
    let rhs = compose(&pinj::oplus(&g, &g3), &pinj::oplus(&f, &f3))?;
    if lhs != rhs {
        return Err("oplus does not satisfy interchange".into());
    }
    Ok(0.0)
}

fn chain_case(rng: &mut ChaCha8Rng, max_size: usize) -> CaseOutcome {
    let rows = rng.gen_range(1..=max_size);
    let cols = rng.gen_range(1..=max_size);
    // scale to satisfy the norm precondition |f| <= 1/sqrt(m n)
    let raw = rand_matrix(rng, rows, cols);
    let norm_raw = operator_norm(&raw).map_err(err_str)?;
    let target = rng.gen::<f64>() / ((rows * cols) as f64).sqrt();
    let f = if norm_raw > 0.0 {
        raw.scale_real(target / norm_raw)
    } else {
        raw
    };
    let factors = factorize::finite_rank_chain(&f, None).map_err(err_str)?;
    if factors.len() != 4 {
        return Err(format!("expected a length-4 chain, got {}", factors.len()));
    }
    let mut max_residual = 0.0f64;
    for (idx, factor) in factors.iter().enumerate() {
        let class = hilb::classify(factor, None).map_err(err_str)?;
        let residual = class.residuals.partial_isometry;
        if !class.is_partial_isometry || residual > CHECK_TOL {
            return Err(format!(
                "chain factor {idx} is not a partial isometry; residual {residual}"
            ));
        }
        max_residual = max_residual.max(residual);
    }
    let recon = factorize::compose_chain(&factors).map_err(err_str)?;
    let residual = operator_norm(&recon.sub(&f).map_err(err_str)?).map_err(err_str)?;
    if residual > CHECK_TOL {
        return Err(format!("chain composite residual {residual}"));
    }
    Ok(max_residual.max(residual))
}

fn canary_case(rng: &mut ChaCha8Rng, max_size: usize) -> CaseOutcome {
    // negative control: asserts the deliberately false law l2(f^dag) = l2(f)
    let x = rand_set(rng, "x", 1, max_size);
    let y = label_set("y", x.len() + 1);
    let f = rand_pinj(rng, &x, &y);
    let forward = ltwo_morphism::<f64>(&f).matrix;
    let backward = ltwo_morphism::<f64>(&pinj::dagger(&f)).matrix;
    if forward.rows() != backward.rows() || forward.cols() != backward.cols() {
        return Err(format!(
            "canary: l2(f^dag) is {}x{} but l2(f) is {}x{}",
            backward.rows(),
            backward.cols(),
            forward.rows(),
            forward.cols()
        ));
    }
    if !approx_eq(&forward, &backward, 1e-12).map_err(err_str)? {
        return Err("canary: l2(f^dag) differs from l2(f)".into());
    }
    Ok(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equalizer_demo_numbers() {
        let report = demo_equalizer_nonpreservation().unwrap();
        assert_eq!(report.pinj_size, 0);
        assert_eq!(report.hilb_dim, 1);
    }

    #[test]
    fn equalizer_sanity_equal_pair() {
        // with f = g both equalizers are everything
        let dom = FiniteSet::new(["0", "1"]).unwrap();
        let cod = FiniteSet::new(["a", "b"]).unwrap();
        let f = PartialInjection::new(dom.clone(), cod, [("0", "a"), ("1", "b")]).unwrap();
        let (e, _) = pinj::equalizer(&f, &f).unwrap();
        assert_eq!(e.len(), 2);
        let m = ltwo_morphism::<f64>(&f).matrix;
        assert_eq!(hilb::equalizer(&m, &m).unwrap().cols(), 2);
    }

    #[test]
    fn isometry_composition_at_quarter_turn() {
        let report = demo_isometry_composition(std::f64::consts::FRAC_PI_4).unwrap();
        assert!((report.composite - 0.7071067811865476).abs() < 1e-15);
        assert!(!report.is_partial_isometry);
    }

    #[test]
    fn isometry_composition_at_right_angle_and_zero() {
        let right = demo_isometry_composition(std::f64::consts::FRAC_PI_2).unwrap();
        assert!((right.composite - 1.0).abs() < 1e-12);
        assert!(right.is_partial_isometry);
        let zero = demo_isometry_composition(0.0).unwrap();
        assert_eq!(zero.composite, 0.0);
        assert!(zero.is_partial_isometry);
    }

    #[test]
    fn coproduct_of_singletons_is_refuted() {
        let x = FiniteSet::new(["x"]).unwrap();
        let y = FiniteSet::new(["y"]).unwrap();
        let report = search_binary_coproduct(&x, &y, 3).unwrap();
        assert!(report.survivors.is_empty());
        assert!(report.candidates_examined > 0);
        // the disjoint-union candidate in particular is refuted with a witness
        let disjoint = report
            .outcomes
            .iter()
            .find(|o| o.candidate == "Z=2 i={x>0} j={y>1}")
            .expect("disjoint union candidate enumerated");
        assert!(!disjoint.survives);
        assert!(disjoint.witness.is_some());
    }

    #[test]
    fn coproduct_degenerate_cases() {
        let empty = FiniteSet::empty();
        let report = search_binary_coproduct(&empty, &empty, 2).unwrap();
        assert_eq!(report.survivors, vec!["Z=0 i={} j={}".to_string()]);

        let x = FiniteSet::new(["x"]).unwrap();
        let report = search_binary_coproduct(&x, &empty, 2).unwrap();
        assert_eq!(report.survivors, vec!["Z=1 i={x>0} j={}".to_string()]);
    }

    #[test]
    fn coproduct_bounds_are_enforced() {
        let big = FiniteSet::new(["a", "b", "c"]).unwrap();
        assert!(matches!(
            search_binary_coproduct(&big, &big, 2),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn cotuple_norm_growth() {
        let three = demo_unbounded_cotuple(3).unwrap();
        assert!((three.norm - 14.0f64.sqrt()).abs() < 1e-12);
        assert!(three.norm >= three.lower_bound);
        assert!((demo_unbounded_cotuple(1).unwrap().norm - 1.0).abs() < 1e-12);
        let mut previous = 0.0;
        for n in 1..=16 {
            let report = demo_unbounded_cotuple(n).unwrap();
            assert!(report.norm > previous);
            previous = report.norm;
        }
    }

    #[test]
    fn dense_range_demo() {
        let four = demo_dense_range_noniso(4).unwrap();
        assert_eq!(four.rank, 4);
        assert!(four.is_self_adjoint);
        assert!((four.min_singular_value - 0.25).abs() < 1e-12);
        assert!((four.inverse_norm - 4.0).abs() < 1e-9);
        let one = demo_dense_range_noniso(1).unwrap();
        assert!((one.inverse_norm - 1.0).abs() < 1e-12);
        let doubled = demo_dense_range_noniso(8).unwrap();
        assert!((doubled.inverse_norm - 2.0 * four.inverse_norm).abs() < 1e-8);
    }

    #[test]
    fn restriction_demo_and_controls() {
        let report = demo_restriction_failure().unwrap();
        assert!((report.commutator_norm - 0.5).abs() < 1e-12);
        assert!(report.commutator_norm > 0.1);
        // diagonal projectors commute
        let a = Matrix64::from_real(2, 2, &[1.0, 0.0, 0.0, 0.0]).unwrap();
        let b = Matrix64::from_real(2, 2, &[0.0, 0.0, 0.0, 1.0]).unwrap();
        let commutator = a.mul(&b).unwrap().sub(&b.mul(&a).unwrap()).unwrap();
        assert!(operator_norm(&commutator).unwrap() < 1e-15);
        // a rotated rank-one projector does not commute with diag(1, 0)
        let t: f64 = 0.3;
        let (c, s) = (t.cos(), t.sin());
        let rotated =
            Matrix64::from_real(2, 2, &[c * c, c * s, c * s, s * s]).unwrap();
        let commutator = a
            .mul(&rotated)
            .unwrap()
            .sub(&rotated.mul(&a).unwrap())
            .unwrap();
        assert!(operator_norm(&commutator).unwrap() > 1e-3);
    }

    #[test]
    fn demos_are_byte_stable() {
        let a = serde_json::to_string(&demo_restriction_failure().unwrap()).unwrap();
        let b = serde_json::to_string(&demo_restriction_failure().unwrap()).unwrap();
        assert_eq!(a, b);
        let a = serde_json::to_string(&demo_dense_range_noniso(5).unwrap()).unwrap();
        let b = serde_json::to_string(&demo_dense_range_noniso(5).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn suites_pass_on_smoke_parameters() {
        for name in SUITE_NAMES.iter().filter(|&&n| n != "canary") {
            let cases = if matches!(*name, "colimit" | "inverse") { 10 } else { 25 };
            let report = run_suite(name, 42, cases, 5).unwrap();
            assert!(
                report.passed(),
                "suite {name} failed: {:?}",
                report.failures
            );
        }
    }

    #[test]
    fn canary_suite_fails_with_witness() {
        let report = run_suite("canary", 7, 20, 4).unwrap();
        assert!(!report.passed());
        assert!(!report.failures.is_empty());
        assert!(report.failures[0].message.contains("canary"));
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(matches!(
            run_suite("no-such-suite", 0, 1, 1),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn suites_are_deterministic() {
        let a = serde_json::to_string(&run_suite("svd", 3, 30, 6).unwrap()).unwrap();
        let b = serde_json::to_string(&run_suite("svd", 3, 30, 6).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
