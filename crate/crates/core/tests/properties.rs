use elltwo::numerics::{operator_norm, svd};
use elltwo::pinj::{self, FiniteSet, PartialInjection};
use elltwo::Matrix64;
use num_complex::Complex;
use proptest::prelude::*;

/// A partial injection between index sets of the given sizes, driven by a
/// proptest-chosen matching.
fn arb_pinj(dom: usize, cod: usize) -> impl Strategy<Value = PartialInjection> {
    let pairs = prop::collection::vec((0..dom.max(1), 0..cod.max(1)), 0..=dom.min(cod));
    pairs.prop_map(move |raw| {
        let x = FiniteSet::indices(dom);
        let y = FiniteSet::indices(cod);
        let mut seen_dom = vec![false; dom];
        let mut seen_cod = vec![false; cod];
        let mut graph = Vec::new();
        for (a, b) in raw {
            if a < dom && b < cod && !seen_dom[a] && !seen_cod[b] {
                seen_dom[a] = true;
                seen_cod[b] = true;
                graph.push((a.to_string(), b.to_string()));
            }
        }
        PartialInjection::new(x, y, graph).expect("filtered to an injective graph")
    })
}

proptest! {
    #[test]
    fn dagger_is_involutive(f in (1usize..6, 1usize..6).prop_flat_map(|(d, c)| arb_pinj(d, c))) {
        prop_assert_eq!(pinj::dagger(&pinj::dagger(&f)), f);
    }

    #[test]
    fn morphisms_are_their_own_partial_inverses(
        f in (1usize..6, 1usize..6).prop_flat_map(|(d, c)| arb_pinj(d, c))
    ) {
        let back_and_forth = pinj::compose(&f, &pinj::compose(&pinj::dagger(&f), &f).unwrap()).unwrap();
        prop_assert_eq!(back_and_forth, f);
    }

    #[test]
    fn sup_of_restrictions_recovers_the_morphism(
        f in (1usize..6, 1usize..6).prop_flat_map(|(d, c)| arb_pinj(d, c))
    ) {
        // split the graph into two restrictions; their sup is f again
        let half = f.graph().len() / 2;
        let lower = PartialInjection::new(f.dom().clone(), f.cod().clone(), f.graph()[..half].to_vec()).unwrap();
        let upper = PartialInjection::new(f.dom().clone(), f.cod().clone(), f.graph()[half..].to_vec()).unwrap();
        prop_assert!(pinj::leq(&lower, &f).unwrap());
        prop_assert!(pinj::leq(&upper, &f).unwrap());
        prop_assert_eq!(pinj::sup(&[lower, upper, f.clone()]).unwrap(), f);
    }

    #[test]
    fn svd_reconstructs_small_matrices(
        rows in 1usize..6,
        cols in 1usize..6,
        entries in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 36),
    ) {
        let a = Matrix64::from_fn(rows, cols, |i, j| {
            let (re, im) = entries[i * 6 + j];
            Complex::new(re, im)
        });
        let dec = svd(&a, None).unwrap();
        let residual = operator_norm(&dec.reconstruct().sub(&a).unwrap()).unwrap();
        let scale = operator_norm(&a).unwrap().max(1.0);
        prop_assert!(residual <= 1e-9 * scale, "residual {residual}");
    }
}
