//! The meander graph of a seaweed spec and its component statistics.
//!
//! `N` vertices sit on a horizontal line. Each top block contributes nested
//! concave-down arcs (outermost pair first), each bottom block nested
//! concave-up arcs. Cycles and paths of the resulting multigraph determine
//! the index of the seaweed: `2C + P`, minus one in the sl case.

use crate::notation::{Composition, Flavor, SeaweedSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Top,
    Bottom,
}

/// An arc of the meander; `lo < hi`, both 1-indexed vertex labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub side: Side,
    pub lo: usize,
    pub hi: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Meander {
    n_vertices: usize,
    top_edges: Vec<(usize, usize)>,
    bottom_edges: Vec<(usize, usize)>,
}

/// Nested arcs of one block interval: `(lo, hi)`, `(lo+1, hi-1)`, ...
fn nested_arcs(intervals: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut arcs = Vec::new();
    for &(lo, hi) in intervals {
        let (mut a, mut b) = (lo, hi);
        while a < b {
            arcs.push((a, b));
            a += 1;
            b -= 1;
        }
    }
    arcs
}

impl Meander {
    pub fn from_spec(spec: &SeaweedSpec) -> Self {
        Meander {
            n_vertices: spec.n(),
            top_edges: nested_arcs(spec.top().blocks().intervals()),
            bottom_edges: nested_arcs(spec.bottom().blocks().intervals()),
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn top_edges(&self) -> &[(usize, usize)] {
        &self.top_edges
    }

    pub fn bottom_edges(&self) -> &[(usize, usize)] {
        &self.bottom_edges
    }

    /// All edges, top edges first, each sorted by left endpoint.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self
            .top_edges
            .iter()
            .map(|&(lo, hi)| Edge {
                side: Side::Top,
                lo,
                hi,
            })
            .collect();
        out.extend(self.bottom_edges.iter().map(|&(lo, hi)| Edge {
            side: Side::Bottom,
            lo,
            hi,
        }));
        out.sort_by_key(|e| (e.side, e.lo, e.hi));
        out
    }

    pub fn edge_count(&self) -> usize {
        self.top_edges.len() + self.bottom_edges.len()
    }

    /// Counts `(cycles, paths)` among connected components of the multigraph.
    ///
    /// A component is a cycle iff it has as many edges as vertices (each
    /// vertex has degree 2 there); everything else, including an isolated
    /// vertex, is a path.
    pub fn cycles_and_paths(&self) -> (usize, usize) {
        let n = self.n_vertices;
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for &(lo, hi) in self.top_edges.iter().chain(&self.bottom_edges) {
            adj[lo].push(hi);
            adj[hi].push(lo);
        }
        let mut seen = vec![false; n + 1];
        let (mut cycles, mut paths) = (0, 0);
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let (mut vertices, mut degree_sum) = (0usize, 0usize);
            while let Some(v) = stack.pop() {
                vertices += 1;
                degree_sum += adj[v].len();
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            let edges = degree_sum / 2;
            if edges == vertices {
                cycles += 1;
            } else {
                paths += 1;
            }
        }
        (cycles, paths)
    }

    /// One more than the number of gaps `i | i+1` no arc crosses.
    pub fn count_central_by_gaps(&self) -> usize {
        let n = self.n_vertices;
        let mut crossed = vec![false; n]; // crossed[i] for the gap between i and i+1
        for &(lo, hi) in self.top_edges.iter().chain(&self.bottom_edges) {
            crossed[lo..hi].fill(true);
        }
        1 + (1..n).filter(|&g| !crossed[g]).count()
    }

    /// Edges with no parallel partner. When a top and a bottom arc share
    /// both endpoints, both are dropped.
    pub fn simple_edges(&self) -> Vec<Edge> {
        self.edges()
            .into_iter()
            .filter(|e| {
                let other = match e.side {
                    Side::Top => &self.bottom_edges,
                    Side::Bottom => &self.top_edges,
                };
                !other.contains(&(e.lo, e.hi))
            })
            .collect()
    }
}

/// Index of the seaweed: `2C + P` over the meander, minus one for sl.
pub fn index_seaweed(spec: &SeaweedSpec) -> usize {
    let (c, p) = Meander::from_spec(spec).cycles_and_paths();
    let gl = 2 * c + p;
    match spec.flavor() {
        Flavor::Gl => gl,
        Flavor::Sl => gl - 1,
    }
}

/// Vertex intervals delimited by the common partial sums of the two
/// compositions. No arc straddles two intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralComponents {
    intervals: Vec<(usize, usize)>,
}

impl CentralComponents {
    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the common sum N always contributes one interval
    }

    /// Index of the interval containing vertex `v`.
    pub fn component_of(&self, v: usize) -> usize {
        self.intervals
            .iter()
            .position(|&(lo, hi)| lo <= v && v <= hi)
            .expect("vertex out of range")
    }
}

pub fn central_components(spec: &SeaweedSpec) -> CentralComponents {
    let top_sums = spec.top().partial_sums();
    let bottom: std::collections::BTreeSet<usize> =
        spec.bottom().partial_sums().into_iter().collect();
    let mut intervals = Vec::new();
    let mut lo = 1;
    for s in top_sums.into_iter().filter(|s| bottom.contains(s)) {
        intervals.push((lo, s));
        lo = s + 1;
    }
    CentralComponents { intervals }
}

/// Number of central components, adjusted to the dimension of the center:
/// `|Cen|` for gl, `|Cen| - 1` for sl.
pub fn center_dim(spec: &SeaweedSpec) -> usize {
    let cen = central_components(spec).len();
    match spec.flavor() {
        Flavor::Gl => cen,
        Flavor::Sl => cen - 1,
    }
}

/// Enumerates all compositions of `n` in lexicographic order on part lists.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition::new(prefix.clone()).unwrap());
            return;
        }
        for first in 1..=n {
            prefix.push(first);
            rec(n - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

/// All spec pairs of size `n` with the given flavor, lexicographic in
/// (top, bottom).
pub fn all_specs(n: usize, flavor: Flavor) -> Vec<SeaweedSpec> {
    let comps = compositions(n);
    let mut out = Vec::with_capacity(comps.len() * comps.len());
    for top in &comps {
        for bottom in &comps {
            out.push(SeaweedSpec::new(top.clone(), bottom.clone(), flavor).unwrap());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(text: &str) -> SeaweedSpec {
        SeaweedSpec::parse(text).unwrap()
    }

    #[test]
    fn builds_worked_example_meander() {
        let m = Meander::from_spec(&spec("p 2|4/1|2|3"));
        assert_eq!(m.top_edges(), &[(1, 2), (3, 6), (4, 5)]);
        assert_eq!(m.bottom_edges(), &[(2, 3), (4, 6)]);
    }

    #[test]
    fn builds_degenerate_meanders() {
        let m = Meander::from_spec(&spec("p 2/2"));
        assert_eq!(m.top_edges(), &[(1, 2)]);
        assert_eq!(m.bottom_edges(), &[(1, 2)]);

        let m = Meander::from_spec(&spec("p 1|1/1|1"));
        assert!(m.top_edges().is_empty());
        assert!(m.bottom_edges().is_empty());
    }

    #[test]
    fn classifies_cycles_and_paths() {
        assert_eq!(
            Meander::from_spec(&spec("p 2/2")).cycles_and_paths(),
            (1, 0)
        );
        assert_eq!(
            Meander::from_spec(&spec("p 2|4/1|2|3")).cycles_and_paths(),
            (0, 1)
        );
        assert_eq!(
            Meander::from_spec(&spec("p 1|1/1|1")).cycles_and_paths(),
            (0, 2)
        );
    }

    #[test]
    fn index_sanity() {
        assert_eq!(index_seaweed(&spec("p 4/4")), 4);
        assert_eq!(index_seaweed(&spec("pA 4/4")), 3);
        assert_eq!(index_seaweed(&spec("p 2|4/1|2|3")), 1);
    }

    #[test]
    fn central_component_intervals() {
        let c = central_components(&spec("p 2|2|3|1|1|3/4|3|5"));
        assert_eq!(c.intervals(), &[(1, 4), (5, 7), (8, 12)]);
        let c = central_components(&spec("p 2|4/1|2|3"));
        assert_eq!(c.intervals(), &[(1, 6)]);
        let c = central_components(&spec("p 1|1/1|1"));
        assert_eq!(c.intervals(), &[(1, 1), (2, 2)]);
    }

    #[test]
    fn gap_count_matches_interval_count() {
        for (text, want) in [
            ("p 2|2|3|1|1|3/4|3|5", 3),
            ("p 1|1/1|1", 2),
            ("p 2|4/1|2|3", 1),
        ] {
            let s = spec(text);
            assert_eq!(Meander::from_spec(&s).count_central_by_gaps(), want);
            assert_eq!(central_components(&s).len(), want);
        }
    }

    #[test]
    fn simple_edges_drop_parallel_pairs() {
        assert!(Meander::from_spec(&spec("p 2/2")).simple_edges().is_empty());
        assert!(Meander::from_spec(&spec("p 1|1/1|1"))
            .simple_edges()
            .is_empty());
        let e1 = Meander::from_spec(&spec("p 2|3|1|2|2/7|3")).simple_edges();
        assert_eq!(e1.len(), 6);
        assert!(!e1.iter().any(|e| (e.lo, e.hi) == (3, 5)));
    }

    #[test]
    fn exhaustive_degree_bound_and_gap_law() {
        // every vertex has degree <= 2 (N <= 10); the gap count matches the
        // partial-sum intervals and no edge straddles them (N <= 8)
        for n in 1..=10 {
            for s in all_specs(n, Flavor::Gl) {
                let m = Meander::from_spec(&s);
                let mut deg = vec![0usize; n + 1];
                for &(lo, hi) in m.top_edges().iter().chain(m.bottom_edges()) {
                    deg[lo] += 1;
                    deg[hi] += 1;
                }
                assert!(deg.iter().all(|&d| d <= 2), "degree bound fails for {s}");
                if n > 8 {
                    continue;
                }
                let cen = central_components(&s);
                assert_eq!(
                    m.count_central_by_gaps(),
                    cen.len(),
                    "gap law fails for {s}"
                );
                for &(lo, hi) in m.top_edges().iter().chain(m.bottom_edges()) {
                    assert_eq!(
                        cen.component_of(lo),
                        cen.component_of(hi),
                        "edge ({lo},{hi}) of {s} straddles central components"
                    );
                }
            }
        }
    }

    #[test]
    fn composition_enumeration_is_lexicographic() {
        let c3: Vec<Vec<usize>> = compositions(3).iter().map(|c| c.parts().to_vec()).collect();
        assert_eq!(c3, vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]);
        assert_eq!(compositions(6).len(), 32);
    }
}
