//! Block diagrams, finite posets, and the poset-algebra index machinery.
//!
//! Intersecting the top and bottom blocks of a spec tiles `1..=N` into
//! circled blocks; consecutive blocks are joined by a directed arrow (or
//! split apart) depending on which composition the boundary is a partial
//! sum of. Directed reachability between blocks induces a strict partial
//! order on `1..=N` whose Lie poset algebra is the nilpotent part of the
//! seaweed's nilradical.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::notation::{Composition, SeaweedSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("isomorphism test supports at most {cap} elements, got {n}")]
    SizeLimit { n: usize, cap: usize },
    #[error("cannot glue decomposition: {0}")]
    Glue(String),
}

/// Relation between two consecutive blocks of a diagram.
///
/// `Forward` at position `i` is a directed edge from block `i` to block
/// `i+1`, `Backward` the reverse, and `None` means the blocks are separated
/// on both sides and stay unrelated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrowKind {
    Forward,
    Backward,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDiagram {
    blocks: Vec<(usize, usize)>,
    arrows: Vec<ArrowKind>,
}

impl BlockDiagram {
    pub fn from_spec(spec: &SeaweedSpec) -> Self {
        let n = spec.n();
        let top: BTreeSet<usize> = spec.top().partial_sums().into_iter().collect();
        let bottom: BTreeSet<usize> = spec.bottom().partial_sums().into_iter().collect();
        let cuts: Vec<usize> = top.union(&bottom).copied().filter(|&s| s < n).collect();

        let mut blocks = Vec::with_capacity(cuts.len() + 1);
        let mut arrows = Vec::with_capacity(cuts.len());
        let mut lo = 1;
        for &cut in &cuts {
            blocks.push((lo, cut));
            arrows.push(match (top.contains(&cut), bottom.contains(&cut)) {
                (true, true) => ArrowKind::None,
                (true, false) => ArrowKind::Forward,
                (false, true) => ArrowKind::Backward,
                (false, false) => unreachable!("cut comes from one of the sets"),
            });
            lo = cut + 1;
        }
        blocks.push((lo, n));
        BlockDiagram { blocks, arrows }
    }

    /// Builds a diagram from block sizes and arrows directly.
    pub fn from_sizes(sizes: &[usize], arrows: Vec<ArrowKind>) -> Self {
        assert!(!sizes.is_empty() && sizes.iter().all(|&s| s > 0));
        assert_eq!(arrows.len() + 1, sizes.len());
        let mut blocks = Vec::with_capacity(sizes.len());
        let mut lo = 1;
        for &s in sizes {
            blocks.push((lo, lo + s - 1));
            lo += s;
        }
        BlockDiagram { blocks, arrows }
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    pub fn arrows(&self) -> &[ArrowKind] {
        &self.arrows
    }

    pub fn n(&self) -> usize {
        self.blocks.last().unwrap().1
    }

    /// Maximal runs of blocks joined by arrows, as inclusive block-index
    /// ranges; splits exactly at `ArrowKind::None`.
    pub fn components(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut start = 0;
        for (i, a) in self.arrows.iter().enumerate() {
            if *a == ArrowKind::None {
                out.push((start, i));
                start = i + 1;
            }
        }
        out.push((start, self.blocks.len() - 1));
        out
    }
}

/// A strict partial order on `1..=n`, stored as the full (transitively
/// closed) relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    lt: Vec<bool>,
}

impl Poset {
    /// Builds from an already transitively closed strict relation; panics if
    /// the relation is not a strict partial order.
    pub fn from_strict(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut lt = vec![false; n * n];
        for &(p, q) in pairs {
            assert!(p >= 1 && p <= n && q >= 1 && q <= n, "label out of range");
            lt[(p - 1) * n + (q - 1)] = true;
        }
        let poset = Poset { n, lt };
        poset.assert_valid();
        poset
    }

    /// Builds from generating pairs, materializing the transitive closure.
    pub fn from_generators(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut lt = vec![false; n * n];
        for &(p, q) in pairs {
            assert!(p >= 1 && p <= n && q >= 1 && q <= n, "label out of range");
            lt[(p - 1) * n + (q - 1)] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if lt[i * n + k] {
                    for j in 0..n {
                        if lt[k * n + j] {
                            lt[i * n + j] = true;
                        }
                    }
                }
            }
        }
        let poset = Poset { n, lt };
        poset.assert_valid();
        poset
    }

    fn assert_valid(&self) {
        let n = self.n;
        for p in 0..n {
            assert!(!self.lt[p * n + p], "relation is not irreflexive");
            for q in 0..n {
                if self.lt[p * n + q] {
                    assert!(!self.lt[q * n + p], "relation is not antisymmetric");
                    for r in 0..n {
                        if self.lt[q * n + r] {
                            assert!(self.lt[p * n + r], "relation is not transitive");
                        }
                    }
                }
            }
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `p < q` in the order (1-indexed labels).
    pub fn lt(&self, p: usize, q: usize) -> bool {
        self.lt[(p - 1) * self.n + (q - 1)]
    }

    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for p in 1..=self.n {
            for q in 1..=self.n {
                if self.lt(p, q) {
                    out.push((p, q));
                }
            }
        }
        out
    }

    pub fn rel_count(&self) -> usize {
        self.lt.iter().filter(|&&b| b).count()
    }

    pub fn down_count(&self, p: usize) -> usize {
        (1..=self.n).filter(|&q| self.lt(q, p)).count()
    }

    pub fn up_count(&self, p: usize) -> usize {
        (1..=self.n).filter(|&q| self.lt(p, q)).count()
    }

    pub fn min_set(&self) -> Vec<usize> {
        (1..=self.n).filter(|&p| self.down_count(p) == 0).collect()
    }

    pub fn max_set(&self) -> Vec<usize> {
        (1..=self.n).filter(|&p| self.up_count(p) == 0).collect()
    }

    pub fn ext_set(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&p| self.down_count(p) == 0 || self.up_count(p) == 0)
            .collect()
    }

    /// Strict pairs with no intermediate element.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for p in 1..=self.n {
            for q in 1..=self.n {
                if self.lt(p, q) && !(1..=self.n).any(|r| self.lt(p, r) && self.lt(r, q)) {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// Connected components of the comparability graph, each sorted.
    #[allow(clippy::needless_range_loop)] // w is an element label, not a position
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in 1..=n {
                    if !seen[w] && (self.lt(v, w) || self.lt(w, v)) {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn stats(&self) -> PosetStats {
        PosetStats {
            rel_count: self.rel_count(),
            min_set: self.min_set(),
            max_set: self.max_set(),
            ext_set: self.ext_set(),
            down_counts: (1..=self.n).map(|p| self.down_count(p)).collect(),
            up_counts: (1..=self.n).map(|p| self.up_count(p)).collect(),
            covering_relations: self.covers(),
            connected_components: self.connected_components(),
        }
    }

    /// Subposet induced by `labels`, relabeled `1..=labels.len()` in the
    /// order given.
    pub fn induced(&self, labels: &[usize]) -> Poset {
        let k = labels.len();
        let mut lt = vec![false; k * k];
        for (i, &p) in labels.iter().enumerate() {
            for (j, &q) in labels.iter().enumerate() {
                if self.lt(p, q) {
                    lt[i * k + j] = true;
                }
            }
        }
        let poset = Poset { n: k, lt };
        poset.assert_valid();
        poset
    }

    /// Longest-chain height of each element (indexed by label-1): the
    /// number of elements in a longest strictly descending chain below.
    pub fn heights(&self) -> Vec<usize> {
        let n = self.n;
        let mut order: Vec<usize> = (1..=n).collect();
        order.sort_by_key(|&p| self.down_count(p));
        let mut height = vec![0usize; n];
        for &p in &order {
            let mut h = 0;
            for q in 1..=n {
                if self.lt(q, p) {
                    h = h.max(height[q - 1] + 1);
                }
            }
            height[p - 1] = h;
        }
        height
    }
}

/// Derived statistics of a poset in one record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetStats {
    pub rel_count: usize,
    pub min_set: Vec<usize>,
    pub max_set: Vec<usize>,
    pub ext_set: Vec<usize>,
    /// `down_counts[p-1]` is the number of elements strictly below `p`.
    pub down_counts: Vec<usize>,
    pub up_counts: Vec<usize>,
    pub covering_relations: Vec<(usize, usize)>,
    pub connected_components: Vec<Vec<usize>>,
}

/// The layered poset of a composition: layer `j` is an antichain of size
/// `parts[j]`, and every element of a layer lies below every element of all
/// later layers.
pub fn chain_block_poset(c: &Composition) -> Poset {
    let n = c.sum();
    let blocks = c.blocks();
    let intervals = blocks.intervals();
    let mut lt = vec![false; n * n];
    for (bi, &(lo_i, hi_i)) in intervals.iter().enumerate() {
        for &(lo_j, hi_j) in &intervals[bi + 1..] {
            for p in lo_i..=hi_i {
                for q in lo_j..=hi_j {
                    lt[(p - 1) * n + (q - 1)] = true;
                }
            }
        }
    }
    let poset = Poset { n, lt };
    poset.assert_valid();
    poset
}

/// Element order induced by directed reachability between diagram blocks.
pub fn poset_from_diagram(bd: &BlockDiagram) -> Poset {
    let blocks = bd.blocks();
    let arrows = bd.arrows();
    let l = blocks.len();
    let n = bd.n();
    let mut lt = vec![false; n * n];
    for i in 0..l {
        for j in i + 1..l {
            let forward = (i..j).all(|k| arrows[k] == ArrowKind::Forward);
            let backward = (i..j).all(|k| arrows[k] == ArrowKind::Backward);
            if !(forward || backward) {
                continue;
            }
            let ((src_lo, src_hi), (dst_lo, dst_hi)) = if forward {
                (blocks[i], blocks[j])
            } else {
                (blocks[j], blocks[i])
            };
            for p in src_lo..=src_hi {
                for q in dst_lo..=dst_hi {
                    lt[(p - 1) * n + (q - 1)] = true;
                }
            }
        }
    }
    let poset = Poset { n, lt };
    poset.assert_valid();
    poset
}

/// Index of the nilpotent Lie algebra spanned by `E_{p,q}` for `p < q` in
/// the order: `|Rel| - 2 * sum over non-extremal p of min(D(p), U(p))`.
pub fn index_nilpotent_poset(poset: &Poset) -> usize {
    let mut total = poset.rel_count() as i64;
    for p in 1..=poset.len() {
        let d = poset.down_count(p);
        let u = poset.up_count(p);
        if d > 0 && u > 0 {
            total -= 2 * d.min(u) as i64;
        }
    }
    assert!(total >= 0, "poset index formula went negative");
    total as usize
}

/// Index of the layered poset algebra by the outside-in recursion:
/// strip the first and last layers, paying `a_1 * a_m` per step.
pub fn index_chain_block_recursive(c: &Composition) -> usize {
    fn rec(parts: &[usize]) -> usize {
        match *parts {
            [] => unreachable!("compositions are nonempty"),
            [_] => 0,
            [a, b] => a * b,
            _ => {
                let m = parts.len();
                let (a1, am) = (parts[0], parts[m - 1]);
                let inner: Vec<usize> = if a1 == am {
                    parts[1..m - 1].to_vec()
                } else if a1 > am {
                    let mut v = vec![a1 - am];
                    v.extend_from_slice(&parts[1..m - 1]);
                    v
                } else {
                    let mut v = parts[1..m - 1].to_vec();
                    v.push(am - a1);
                    v
                };
                rec(&inner) + a1 * am
            }
        }
    }
    rec(c.parts())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// The component's first block is a sink: its first arrow points back.
    In,
    /// The component's first block is a source (or the component is a
    /// single block).
    Out,
}

/// One connected component of a diagram, cut into maximal uniformly
/// directed runs. Each segment lists layer sizes from the run's minimal
/// layer to its maximal layer; consecutive segments share a boundary layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InOutDecomposition {
    pub orientation: Orientation,
    pub segments: Vec<Composition>,
}

/// Cuts each arrow-connected component of the diagram into uniformly
/// directed runs. Runs alternate direction; the first run's direction is
/// recorded as the orientation.
pub fn decompose_in_out(bd: &BlockDiagram) -> Vec<InOutDecomposition> {
    let blocks = bd.blocks();
    bd.components()
        .into_iter()
        .map(|(b0, b1)| {
            let sizes: Vec<usize> = blocks[b0..=b1]
                .iter()
                .map(|&(lo, hi)| hi - lo + 1)
                .collect();
            let arrows = &bd.arrows()[b0..b1];
            if arrows.is_empty() {
                return InOutDecomposition {
                    orientation: Orientation::Out,
                    segments: vec![Composition::new(vec![sizes[0]]).unwrap()],
                };
            }
            let orientation = match arrows[0] {
                ArrowKind::Forward => Orientation::Out,
                ArrowKind::Backward => Orientation::In,
                ArrowKind::None => unreachable!("components contain no splits"),
            };
            let mut segments = Vec::new();
            let mut run_start = 0;
            for k in 1..=arrows.len() {
                if k == arrows.len() || arrows[k] != arrows[k - 1] {
                    // arrows run_start..k span blocks run_start..=k
                    let mut seg = sizes[run_start..=k].to_vec();
                    if arrows[run_start] == ArrowKind::Backward {
                        seg.reverse();
                    }
                    segments.push(Composition::new(seg).unwrap());
                    run_start = k;
                }
            }
            InOutDecomposition {
                orientation,
                segments,
            }
        })
        .collect()
}

/// Rebuilds the poset of a decomposition by regrowing its block diagram:
/// runs alternate direction starting from the orientation, and consecutive
/// segments must agree on the size of the shared boundary layer.
pub fn glue_in_out(d: &InOutDecomposition) -> Result<Poset, PosetError> {
    if d.segments.is_empty() {
        return Err(PosetError::Glue("no segments".into()));
    }
    let dir = |j: usize| match (d.orientation, j % 2) {
        (Orientation::Out, 0) | (Orientation::In, 1) => ArrowKind::Forward,
        _ => ArrowKind::Backward,
    };
    if d.segments.len() == 1 && d.segments[0].len() == 1 {
        // a lone block glues to nothing; its poset is an antichain
        return Ok(chain_block_poset(&d.segments[0]));
    }
    let mut sizes: Vec<usize> = Vec::new();
    let mut arrows: Vec<ArrowKind> = Vec::new();
    for (j, seg) in d.segments.iter().enumerate() {
        if seg.len() < 2 {
            return Err(PosetError::Glue(format!(
                "segment {} has a single layer but is glued to neighbors",
                j + 1
            )));
        }
        let mut layer_sizes = seg.parts().to_vec();
        if dir(j) == ArrowKind::Backward {
            layer_sizes.reverse();
        }
        if j == 0 {
            sizes = layer_sizes.clone();
        } else {
            let prev = *sizes.last().unwrap();
            if prev != layer_sizes[0] {
                return Err(PosetError::Glue(format!(
                    "interface size mismatch between segments {j} and {}: {prev} vs {}",
                    j + 1,
                    layer_sizes[0]
                )));
            }
            sizes.extend_from_slice(&layer_sizes[1..]);
        }
        arrows.extend(std::iter::repeat_n(dir(j), layer_sizes.len() - 1));
    }
    Ok(poset_from_diagram(&BlockDiagram::from_sizes(
        &sizes, arrows,
    )))
}

/// Hard cap for the backtracking isomorphism test.
pub const ISO_SIZE_CAP: usize = 14;

/// Order-isomorphism test by backtracking with degree pruning.
pub fn poset_isomorphic(p: &Poset, q: &Poset) -> Result<bool, PosetError> {
    for poset in [p, q] {
        if poset.len() > ISO_SIZE_CAP {
            return Err(PosetError::SizeLimit {
                n: poset.len(),
                cap: ISO_SIZE_CAP,
            });
        }
    }
    if p.len() != q.len() || p.rel_count() != q.rel_count() {
        return Ok(false);
    }
    let n = p.len();
    let profile = |poset: &Poset, v: usize| (poset.down_count(v), poset.up_count(v));
    let mut p_profiles: Vec<_> = (1..=n).map(|v| profile(p, v)).collect();
    let mut q_profiles: Vec<_> = (1..=n).map(|v| profile(q, v)).collect();
    {
        let mut a = p_profiles.clone();
        let mut b = q_profiles.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Ok(false);
        }
    }
    p_profiles.insert(0, (0, 0)); // 1-indexed access
    q_profiles.insert(0, (0, 0));

    // assign the most constrained (largest comparability degree) first
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(p_profiles[v].0 + p_profiles[v].1));

    struct Search<'a> {
        p: &'a Poset,
        q: &'a Poset,
        order: Vec<usize>,
        p_profiles: Vec<(usize, usize)>,
        q_profiles: Vec<(usize, usize)>,
        image: Vec<usize>, // image[v] = assigned element of q, 0 if none
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn run(&mut self, depth: usize) -> bool {
            if depth == self.order.len() {
                return true;
            }
            let v = self.order[depth];
            for w in 1..=self.q.len() {
                if self.used[w] || self.p_profiles[v] != self.q_profiles[w] {
                    continue;
                }
                let consistent = self.order[..depth].iter().all(|&u| {
                    let iu = self.image[u];
                    self.p.lt(u, v) == self.q.lt(iu, w) && self.p.lt(v, u) == self.q.lt(w, iu)
                });
                if !consistent {
                    continue;
                }
                self.image[v] = w;
                self.used[w] = true;
                if self.run(depth + 1) {
                    return true;
                }
                self.image[v] = 0;
                self.used[w] = false;
            }
            false
        }
    }

    let mut search = Search {
        p,
        q,
        order,
        p_profiles,
        q_profiles,
        image: vec![0usize; n + 1],
        used: vec![false; n + 1],
    };
    Ok(search.run(0))
}
