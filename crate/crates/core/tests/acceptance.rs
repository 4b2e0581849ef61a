//! The acceptance gate: ten end-to-end criteria, each printing one
//! pass/fail line (visible with `cargo test --test acceptance -- --nocapture`).

use elltwo::inversecat;
use elltwo::lawlab;
use elltwo::pinj::FiniteSet;

fn criterion(number: usize, name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("criterion {number:02} {name}: pass"),
        Err(message) => {
            println!("criterion {number:02} {name}: FAIL ({message})");
            panic!("criterion {number:02} {name} failed: {message}");
        }
    }
}

fn suite(name: &str, seed: u64, cases: u64, max_size: usize) -> Result<lawlab::SuiteReport, String> {
    let report = lawlab::run_suite(name, seed, cases, max_size).map_err(|e| e.to_string())?;
    if !report.passed() {
        return Err(format!(
            "suite {name} failed {} of {} cases; first: {}",
            report.failures.len(),
            report.cases,
            report
                .failures
                .first()
                .map(|f| f.message.as_str())
                .unwrap_or("?")
        ));
    }
    Ok(report)
}

#[test]
fn criterion_01_functor_laws() {
    criterion(1, "functor-laws", || {
        let report = suite("functor", 42, 1000, 8)?;
        if report.max_residual != 0.0 {
            return Err(format!(
                "integer matrix laws should be exact; residual {}",
                report.max_residual
            ));
        }
        Ok(())
    });
}

#[test]
fn criterion_02_direct_image_characterization() {
    criterion(2, "direct-image", || {
        suite("image", 42, 500, 8).map(|_| ())
    });
}

#[test]
fn criterion_03_essential_fullness() {
    criterion(3, "essential-fullness", || {
        suite("full", 42, 1000, 8).map(|_| ())
    });
}

#[test]
fn criterion_04_polar_decomposition() {
    criterion(4, "polar", || suite("polar", 7, 500, 8).map(|_| ()))
}

#[test]
fn criterion_05_counterexample_battery() {
    criterion(5, "counterexamples", || {
        let eq = lawlab::demo_equalizer_nonpreservation().map_err(|e| e.to_string())?;
        if eq.hilb_dim != 1 || eq.pinj_size != 0 {
            return Err(format!(
                "equalizer dims: got {} vs {}",
                eq.hilb_dim, eq.pinj_size
            ));
        }
        let quarter = lawlab::demo_isometry_composition(std::f64::consts::FRAC_PI_4)
            .map_err(|e| e.to_string())?;
        if (quarter.composite - 0.7071067811865476).abs() > 1e-15 || quarter.is_partial_isometry {
            return Err(format!("quarter-turn composite {}", quarter.composite));
        }
        let half = lawlab::demo_isometry_composition(std::f64::consts::FRAC_PI_2)
            .map_err(|e| e.to_string())?;
        if !half.is_partial_isometry {
            return Err("composite at pi/2 should be a partial isometry".into());
        }
        let x = FiniteSet::new(["x"]).map_err(|e| e.to_string())?;
        let y = FiniteSet::new(["y"]).map_err(|e| e.to_string())?;
        let search = lawlab::search_binary_coproduct(&x, &y, 3).map_err(|e| e.to_string())?;
        if !search.survivors.is_empty() {
            return Err(format!(
                "coproduct candidates survived: {:?}",
                search.survivors
            ));
        }
        let cotuple = lawlab::demo_unbounded_cotuple(3).map_err(|e| e.to_string())?;
        if (cotuple.norm - 14.0f64.sqrt()).abs() > 1e-12 {
            return Err(format!("cotuple norm {}", cotuple.norm));
        }
        Ok(())
    });
}

#[test]
fn criterion_06_inverse_category_embeddings() {
    criterion(6, "wagner-preston", || {
        for presentation in [
            inversecat::cyclic_group_z2(),
            inversecat::symmetric_inverse_monoid(2),
        ] {
            let validation = inversecat::validate(&presentation);
            if !validation.passed() {
                return Err("presentation failed validation".into());
            }
            let emb = inversecat::wagner_preston(&presentation).map_err(|e| e.to_string())?;
            let check =
                inversecat::check_embedding(&presentation, &emb).map_err(|e| e.to_string())?;
            if !check.passed() {
                return Err("embedding check failed".into());
            }
        }
        let i2 = inversecat::symmetric_inverse_monoid(2);
        if i2.morphisms().len() != 7 {
            return Err(format!("I_2 has {} morphisms, expected 7", i2.morphisms().len()));
        }
        Ok(())
    });
}

#[test]
fn criterion_07_chain_colimits() {
    criterion(7, "colimits", || suite("colimit", 42, 200, 5).map(|_| ()))
}

#[test]
fn criterion_08_order_enrichment() {
    criterion(8, "order", || suite("order", 42, 500, 6).map(|_| ()))
}

#[test]
fn criterion_09_finite_rank_chains() {
    criterion(9, "finite-rank-chains", || {
        suite("chain", 42, 200, 4).map(|_| ())
    });
}

#[test]
fn criterion_10_svd_kernel() {
    criterion(10, "svd-kernel", || suite("svd", 42, 2000, 16).map(|_| ()))
}
