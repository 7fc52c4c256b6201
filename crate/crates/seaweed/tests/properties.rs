//! Randomized property tests over larger sizes than the exhaustive sweeps.

use proptest::prelude::*;

use seaweed::invariants::{index_nilradical, lower_bound_nilradical};
use seaweed::meander::{central_components, Meander};
use seaweed::notation::{Composition, Flavor, SeaweedSpec};
use seaweed::poset::{
    chain_block_poset, index_chain_block_recursive, index_nilpotent_poset, poset_from_diagram,
    BlockDiagram,
};
use seaweed::weighted::WeightedMeander;

fn composition_strategy(max_sum: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1usize..=6, 1..=10).prop_filter_map("sum too large", move |parts| {
        let sum: usize = parts.iter().sum();
        (sum <= max_sum).then(|| Composition::new(parts).unwrap())
    })
}

/// A pair of compositions of the same sum, padded with 1s to reconcile.
fn spec_strategy(max_sum: usize) -> impl Strategy<Value = SeaweedSpec> {
    (
        composition_strategy(max_sum),
        composition_strategy(max_sum),
        prop::bool::ANY,
    )
        .prop_map(|(a, b, sl)| {
            let (mut ap, mut bp) = (a.parts().to_vec(), b.parts().to_vec());
            while ap.iter().sum::<usize>() < bp.iter().sum::<usize>() {
                ap.push(1);
            }
            while bp.iter().sum::<usize>() < ap.iter().sum::<usize>() {
                bp.push(1);
            }
            let flavor = if sl { Flavor::Sl } else { Flavor::Gl };
            SeaweedSpec::new(
                Composition::new(ap).unwrap(),
                Composition::new(bp).unwrap(),
                flavor,
            )
            .unwrap()
        })
}

proptest! {
    #[test]
    fn parse_inverts_printing(spec in spec_strategy(40)) {
        let reparsed = SeaweedSpec::parse(&spec.to_string()).unwrap();
        prop_assert_eq!(reparsed, spec);
    }

    #[test]
    fn partial_sums_shape(c in composition_strategy(60)) {
        let ps = c.partial_sums();
        prop_assert_eq!(ps.len(), c.len());
        prop_assert_eq!(*ps.last().unwrap(), c.sum());
        prop_assert!(ps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn meander_degrees_stay_bounded(spec in spec_strategy(40)) {
        let m = Meander::from_spec(&spec);
        let mut deg = vec![0usize; spec.n() + 1];
        for &(lo, hi) in m.top_edges().iter().chain(m.bottom_edges()) {
            deg[lo] += 1;
            deg[hi] += 1;
        }
        prop_assert!(deg.iter().all(|&d| d <= 2));
        let (c, p) = m.cycles_and_paths();
        prop_assert!(c + p <= spec.n());
    }

    #[test]
    fn weight_total_tracks_poset_index(spec in spec_strategy(30)) {
        // the construction assertions inside from_spec double as the
        // completeness and termination checks
        let wm = WeightedMeander::from_spec(&spec);
        let poset = poset_from_diagram(&BlockDiagram::from_spec(&spec));
        prop_assert_eq!(wm.total_weight(), index_nilpotent_poset(&poset));
    }

    #[test]
    fn nilradical_index_dominates_bound(spec in spec_strategy(40)) {
        prop_assert!(index_nilradical(&spec) >= lower_bound_nilradical(&spec));
    }

    #[test]
    fn recursion_agrees_at_scale(c in composition_strategy(24)) {
        prop_assert_eq!(
            index_chain_block_recursive(&c),
            index_nilpotent_poset(&chain_block_poset(&c))
        );
    }

    #[test]
    fn arcs_never_straddle_central_components(spec in spec_strategy(40)) {
        let cen = central_components(&spec);
        let m = Meander::from_spec(&spec);
        for &(lo, hi) in m.top_edges().iter().chain(m.bottom_edges()) {
            prop_assert_eq!(cen.component_of(lo), cen.component_of(hi));
        }
    }
}
