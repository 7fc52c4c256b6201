//! The edge-weighted meander.
//!
//! Each block's arcs receive nonnegative integer weights by an outside-in
//! sweep: the block's vertices are grouped by the opposite side's blocks,
//! the outermost arcs joining the first group to the last are weighted by
//! the larger of the two group sizes, and the sweep recurses on the
//! vertices not yet consumed. The total weight equals the index of the
//! nilpotent Lie poset algebra attached to the spec's block diagram.

use std::collections::{BTreeMap, BTreeSet};

use crate::meander::{Edge, Meander, Side};
use crate::notation::{Composition, SeaweedSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedMeander {
    base: Meander,
    weights: BTreeMap<(Side, usize, usize), usize>,
}

impl WeightedMeander {
    pub fn from_spec(spec: &SeaweedSpec) -> Self {
        let base = Meander::from_spec(spec);
        let mut weights = BTreeMap::new();
        weigh_side(
            spec.top(),
            spec.bottom(),
            Side::Top,
            base.top_edges(),
            &mut weights,
        );
        weigh_side(
            spec.bottom(),
            spec.top(),
            Side::Bottom,
            base.bottom_edges(),
            &mut weights,
        );
        for edge in base.edges() {
            assert!(
                weights.contains_key(&(edge.side, edge.lo, edge.hi)),
                "edge ({}, {}) left unweighted",
                edge.lo,
                edge.hi
            );
        }
        WeightedMeander { base, weights }
    }

    pub fn base(&self) -> &Meander {
        &self.base
    }

    pub fn weight(&self, side: Side, lo: usize, hi: usize) -> Option<usize> {
        self.weights.get(&(side, lo, hi)).copied()
    }

    /// Edges with their weights, top edges first, each sorted by left
    /// endpoint.
    pub fn weighted_edges(&self) -> Vec<(Edge, usize)> {
        self.base
            .edges()
            .into_iter()
            .map(|e| {
                let w = self.weights[&(e.side, e.lo, e.hi)];
                (e, w)
            })
            .collect()
    }

    pub fn total_weight(&self) -> usize {
        self.weights.values().sum()
    }
}

/// Weighs all arcs of one side, block by block, left to right.
fn weigh_side(
    own: &Composition,
    opposite: &Composition,
    side: Side,
    own_edges: &[(usize, usize)],
    weights: &mut BTreeMap<(Side, usize, usize), usize>,
) {
    let opp_blocks = opposite.blocks();
    for &(lo, hi) in own.blocks().intervals() {
        let block_edges: BTreeSet<(usize, usize)> = own_edges
            .iter()
            .copied()
            .filter(|&(a, b)| lo <= a && b <= hi)
            .collect();
        let mut unweighted = block_edges.clone();

        // group the block's vertices by the opposite side's blocks
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut current_opp = usize::MAX;
        for v in lo..=hi {
            let b = opp_blocks.block_of(v);
            if b != current_opp {
                groups.push(Vec::new());
                current_opp = b;
            }
            groups.last_mut().unwrap().push(v);
        }

        let mut fuel = hi - lo + 2;
        while !unweighted.is_empty() {
            assert!(fuel > 0, "weighting sweep failed to terminate");
            fuel -= 1;
            if groups.len() == 1 {
                // a single surviving group: its leftover arcs weigh nothing
                for &(a, b) in &unweighted {
                    assert!(
                        groups[0].contains(&a) && groups[0].contains(&b),
                        "leftover arc ({a},{b}) escapes the final group"
                    );
                    weights.insert((side, a, b), 0);
                }
                unweighted.clear();
            } else {
                let first = &groups[0];
                let last = groups.last().unwrap();
                let m = first.len().min(last.len());
                let big = first.len().max(last.len());
                for k in 0..m {
                    let a = first[k];
                    let b = last[last.len() - 1 - k];
                    assert!(
                        block_edges.contains(&(a, b)),
                        "claimed arc ({a},{b}) is not an arc of the meander"
                    );
                    weights.insert((side, a, b), big);
                    assert!(unweighted.remove(&(a, b)));
                }
                let tail = groups.last_mut().unwrap();
                tail.truncate(tail.len() - m);
                if tail.is_empty() {
                    groups.pop();
                }
                groups[0].drain(..m);
                if groups[0].is_empty() {
                    groups.remove(0);
                }
            }
        }
    }
}

/// Builds the weighted meander of a spec.
pub fn build_weighted(spec: &SeaweedSpec) -> WeightedMeander {
    WeightedMeander::from_spec(spec)
}

/// Sum of all arc weights of the spec's weighted meander.
pub fn total_weight(spec: &SeaweedSpec) -> usize {
    WeightedMeander::from_spec(spec).total_weight()
}
