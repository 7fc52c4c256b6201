//! Exact matrix-level oracle over a large prime field.
//!
//! Everything here works directly with explicit spanning sets of `N x N`
//! matrices and knows nothing about meanders or posets: index and breadth
//! come from ranks of bracket matrices, the center from an exact linear
//! system, nilpotency from the lower central series. Ranks are computed by
//! fraction-free elimination mod a large prime; randomness is a counter
//!-based generator keyed on `(seed, basis fingerprint, trial)`, so every
//! run is reproducible.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::meander::central_components;
use crate::notation::{Flavor, SeaweedSpec};
use crate::poset::Poset;

pub const DEFAULT_PRIME: u64 = 2_147_483_647;
pub const SECOND_PRIME: u64 = 2_147_483_629;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("bracket of basis elements {i} and {j} leaves the span")]
    BracketNotClosed { i: usize, j: usize },
    #[error("subalgebra is not contained in the ambient span")]
    NotASubspace,
}

/// Sampling parameters for the randomized rank computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldConfig {
    pub prime: u64,
    pub trials: u32,
    pub seed: u64,
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig {
            prime: DEFAULT_PRIME,
            trials: 3,
            seed: 0,
        }
    }
}

impl FieldConfig {
    /// Heavier configurations used to re-check a mismatch before calling it
    /// genuine: more trials on the same prime, then on a second prime.
    pub fn escalated(&self) -> [FieldConfig; 2] {
        let other = if self.prime == SECOND_PRIME {
            DEFAULT_PRIME
        } else {
            SECOND_PRIME
        };
        let trials = self.trials.max(16);
        [
            FieldConfig { trials, ..*self },
            FieldConfig {
                prime: other,
                trials,
                seed: self.seed,
            },
        ]
    }
}

// --- modular arithmetic ---------------------------------------------------

fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    acc
}

fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

fn to_field(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

// --- reduced row echelon over sparse rows ----------------------------------

/// A reduced echelon basis: each row starts with a leading 1 at its pivot
/// and every row is zero at all other rows' pivots.
struct Echelon {
    p: u64,
    rows: Vec<SparseRow>, // sorted by pivot
}

struct SparseRow {
    pivot: usize,
    entries: Vec<(usize, u64)>, // sorted by position; entries[0] = (pivot, 1)
}

impl Echelon {
    fn new(p: u64) -> Self {
        Echelon {
            p,
            rows: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Eliminates every pivot position from `v` in place.
    fn reduce(&self, v: &mut [u64]) {
        for row in &self.rows {
            let c = v[row.pivot];
            if c != 0 {
                for &(pos, val) in &row.entries {
                    v[pos] = subm(v[pos], mulm(c, val, self.p), self.p);
                }
            }
        }
    }

    fn is_member(&self, v: &mut [u64]) -> bool {
        self.reduce(v);
        v.iter().all(|&x| x == 0)
    }

    /// Reduces `v` and absorbs it; returns whether the rank grew.
    fn insert(&mut self, v: &mut [u64]) -> bool {
        self.reduce(v);
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = invm(v[pivot], self.p);
        let entries: Vec<(usize, u64)> = v
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x != 0)
            .map(|(pos, &x)| (pos, mulm(x, inv, self.p)))
            .collect();
        // keep the basis reduced: clear the new pivot from existing rows
        for row in &mut self.rows {
            if let Ok(k) = row.entries.binary_search_by_key(&pivot, |&(pos, _)| pos) {
                let c = row.entries[k].1;
                row.entries = axpy_sparse(&row.entries, c, &entries, self.p);
            }
        }
        let at = self.rows.partition_point(|r| r.pivot < pivot);
        self.rows.insert(at, SparseRow { pivot, entries });
        true
    }
}

/// `target - c * source` over sorted sparse entry lists.
fn axpy_sparse(
    target: &[(usize, u64)],
    c: u64,
    source: &[(usize, u64)],
    p: u64,
) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    loop {
        let take_target = match (target.get(i), source.get(j)) {
            (Some(&(tp, tv)), Some(&(sp, _))) if tp == sp => {
                let v = subm(tv, mulm(c, source[j].1, p), p);
                if v != 0 {
                    out.push((tp, v));
                }
                i += 1;
                j += 1;
                continue;
            }
            (Some(&(tp, _)), Some(&(sp, _))) => tp < sp,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        if take_target {
            out.push(target[i]);
            i += 1;
        } else {
            let v = subm(0, mulm(c, source[j].1, p), p);
            if v != 0 {
                out.push((source[j].0, v));
            }
            j += 1;
        }
    }
    out
}

/// Rank of a dense square matrix by Gaussian elimination mod `p`.
fn rank_dense(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let inv = invm(m[rank][col], p);
        for x in &mut m[rank][col..] {
            *x = mulm(*x, inv, p);
        }
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, &pv) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *x = subm(*x, mulm(f, pv, p), p);
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

// --- deterministic sampling -------------------------------------------------

fn splitmix_next(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn absorb(h: u64, v: u64) -> u64 {
    let mut s = h ^ v.wrapping_mul(0xA24B_AED4_963E_E407);
    splitmix_next(&mut s)
}

struct Stream {
    state: u64,
}

impl Stream {
    fn new(seed: u64, fingerprint: u64, trial: u32) -> Self {
        let mut state = absorb(absorb(seed, fingerprint), trial as u64);
        splitmix_next(&mut state);
        Stream { state }
    }

    fn next_mod(&mut self, p: u64) -> u64 {
        splitmix_next(&mut self.state) % p
    }
}

// --- bases -------------------------------------------------------------------

/// One spanning matrix: an elementary matrix or a diagonal vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisElement {
    /// `E_{row,col}` (1-indexed).
    Elementary { row: usize, col: usize },
    /// A diagonal matrix with the given (nonzero) coefficient vector.
    Diagonal(Vec<i64>),
}

/// An explicit spanning set of an `n x n` matrix Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraBasis {
    n: usize,
    elements: Vec<BasisElement>,
}

impl AlgebraBasis {
    pub fn new(n: usize, elements: Vec<BasisElement>) -> Self {
        for e in &elements {
            match e {
                BasisElement::Elementary { row, col } => {
                    assert!(*row >= 1 && *row <= n && *col >= 1 && *col <= n);
                }
                BasisElement::Diagonal(d) => {
                    assert_eq!(d.len(), n);
                    assert!(d.iter().any(|&x| x != 0), "zero diagonal vector");
                }
            }
        }
        let basis = AlgebraBasis { n, elements };
        // the spanning sets built here are honest bases
        let span = basis.span(DEFAULT_PRIME);
        assert_eq!(span.rank(), basis.len(), "basis elements are dependent");
        basis
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[BasisElement] {
        &self.elements
    }

    fn dense(&self, e: &BasisElement, p: u64) -> Vec<u64> {
        let n = self.n;
        let mut v = vec![0u64; n * n];
        match e {
            BasisElement::Elementary { row, col } => {
                v[(row - 1) * n + (col - 1)] = 1 % p;
            }
            BasisElement::Diagonal(d) => {
                for (j, &c) in d.iter().enumerate() {
                    v[j * n + j] = to_field(c, p);
                }
            }
        }
        v
    }

    fn span(&self, p: u64) -> Echelon {
        let mut ech = Echelon::new(p);
        for e in &self.elements {
            let mut v = self.dense(e, p);
            ech.insert(&mut v);
        }
        ech
    }

    fn fingerprint(&self) -> u64 {
        let mut h = absorb(0x5EA3_EED0, self.n as u64);
        for e in &self.elements {
            match e {
                BasisElement::Elementary { row, col } => {
                    h = absorb(h, 1);
                    h = absorb(h, *row as u64);
                    h = absorb(h, *col as u64);
                }
                BasisElement::Diagonal(d) => {
                    h = absorb(h, 2);
                    for &c in d {
                        h = absorb(h, c as u64);
                    }
                }
            }
        }
        h
    }
}

/// Whether `E_{p,q}` belongs to the seaweed span (diagonal always does).
fn in_seaweed(spec: &SeaweedSpec, p: usize, q: usize) -> bool {
    use std::cmp::Ordering::*;
    match p.cmp(&q) {
        Equal => true,
        Greater => spec.top().blocks().block_of(p) == spec.top().blocks().block_of(q),
        Less => spec.bottom().blocks().block_of(p) == spec.bottom().blocks().block_of(q),
    }
}

/// The spanning set of the seaweed algebra: diagonal directions, the
/// strictly lower part of each top block, the strictly upper part of each
/// bottom block. For sl the diagonals become `E_{1,1} - E_{j,j}`.
pub fn seaweed_basis(spec: &SeaweedSpec) -> AlgebraBasis {
    let n = spec.n();
    let mut elements = Vec::new();
    match spec.flavor() {
        Flavor::Gl => {
            for j in 1..=n {
                let mut d = vec![0i64; n];
                d[j - 1] = 1;
                elements.push(BasisElement::Diagonal(d));
            }
        }
        Flavor::Sl => {
            for j in 2..=n {
                let mut d = vec![0i64; n];
                d[0] = 1;
                d[j - 1] = -1;
                elements.push(BasisElement::Diagonal(d));
            }
        }
    }
    for &(lo, hi) in spec.top().blocks().intervals() {
        for col in lo..=hi {
            for row in col + 1..=hi {
                elements.push(BasisElement::Elementary { row, col });
            }
        }
    }
    for &(lo, hi) in spec.bottom().blocks().intervals() {
        for row in lo..=hi {
            for col in row + 1..=hi {
                elements.push(BasisElement::Elementary { row, col });
            }
        }
    }
    AlgebraBasis::new(n, elements)
}

/// The nilradical: every `E_{p,q}` of the seaweed whose transpose position
/// is absent, plus the center (diagonals constant on central components;
/// traceless combinations of consecutive components for sl).
pub fn nilradical_basis(spec: &SeaweedSpec) -> AlgebraBasis {
    let n = spec.n();
    let mut elements = Vec::new();
    for p in 1..=n {
        for q in 1..=n {
            if p != q && in_seaweed(spec, p, q) && !in_seaweed(spec, q, p) {
                elements.push(BasisElement::Elementary { row: p, col: q });
            }
        }
    }
    let cen = central_components(spec);
    let intervals = cen.intervals();
    match spec.flavor() {
        Flavor::Gl => {
            for &(lo, hi) in intervals {
                let mut d = vec![0i64; n];
                for j in lo..=hi {
                    d[j - 1] = 1;
                }
                elements.push(BasisElement::Diagonal(d));
            }
        }
        Flavor::Sl => {
            for w in intervals.windows(2) {
                let ((lo_a, hi_a), (lo_b, hi_b)) = (w[0], w[1]);
                let (size_a, size_b) = (hi_a - lo_a + 1, hi_b - lo_b + 1);
                // sized to be traceless: |B| on the first, -|A| on the second
                let mut d = vec![0i64; n];
                for j in lo_a..=hi_a {
                    d[j - 1] = size_b as i64;
                }
                for j in lo_b..=hi_b {
                    d[j - 1] = -(size_a as i64);
                }
                elements.push(BasisElement::Diagonal(d));
            }
        }
    }
    AlgebraBasis::new(n, elements)
}

/// The nilpotent algebra of a poset: `E_{p,q}` for every strict pair.
pub fn poset_algebra_basis(poset: &Poset) -> AlgebraBasis {
    let elements = poset
        .strict_pairs()
        .into_iter()
        .map(|(p, q)| BasisElement::Elementary { row: p, col: q })
        .collect();
    AlgebraBasis::new(poset.len().max(1), elements)
}

/// A sparse integer matrix: position `(i, j)` to coefficient.
pub type SparseMatrix = BTreeMap<(usize, usize), i64>;

/// Exact commutator `[x, y]` as a sparse integer matrix.
pub fn bracket(x: &BasisElement, y: &BasisElement) -> SparseMatrix {
    let mut out = BTreeMap::new();
    let mut add = |pos: (usize, usize), val: i64| {
        let e = out.entry(pos).or_insert(0);
        *e += val;
        if *e == 0 {
            out.remove(&pos);
        }
    };
    match (x, y) {
        (
            BasisElement::Elementary { row: i, col: j },
            BasisElement::Elementary { row: k, col: l },
        ) => {
            if j == k {
                add((*i, *l), 1);
            }
            if l == i {
                add((*k, *j), -1);
            }
        }
        (BasisElement::Diagonal(d), BasisElement::Elementary { row: k, col: l }) => {
            let c = d[*k - 1] - d[*l - 1];
            if c != 0 {
                add((*k, *l), c);
            }
        }
        (BasisElement::Elementary { row: i, col: j }, BasisElement::Diagonal(d)) => {
            let c = d[*j - 1] - d[*i - 1];
            if c != 0 {
                add((*i, *j), c);
            }
        }
        (BasisElement::Diagonal(_), BasisElement::Diagonal(_)) => {}
    }
    out
}

/// All pairwise brackets `(i, j, [x_i, x_j])` for `i < j`, verified to stay
/// in the span.
fn closed_brackets(
    basis: &AlgebraBasis,
    span: &Echelon,
    p: u64,
) -> Result<Vec<(usize, usize, SparseMatrix)>, OracleError> {
    let n = basis.n;
    let k = basis.len();
    let mut out = Vec::with_capacity(k * k.saturating_sub(1) / 2);
    for i in 0..k {
        for j in i + 1..k {
            let br = bracket(&basis.elements[i], &basis.elements[j]);
            let mut v = vec![0u64; n * n];
            for (&(r, c), &val) in &br {
                v[(r - 1) * n + (c - 1)] = to_field(val, p);
            }
            if !span.is_member(&mut v) {
                return Err(OracleError::BracketNotClosed { i, j });
            }
            out.push((i, j, br));
        }
    }
    Ok(out)
}

fn check_prime(n: usize, cfg: &FieldConfig) {
    assert!(
        cfg.prime > 2 * (n * n) as u64,
        "prime {} too small for matrices of size {n}",
        cfg.prime
    );
    assert!(
        cfg.prime < 1 << 63,
        "prime {} too large for the field arithmetic",
        cfg.prime
    );
    assert!(cfg.trials >= 1, "at least one trial is required");
}

/// Randomized index: for each trial, sample a linear functional `F`, form
/// the antisymmetric matrix `F([x_i, x_j])`, and take its corank; report
/// the minimum corank across trials. Each trial's corank is an upper bound
/// on the true index, so the result is one as well and equals it with
/// overwhelming probability.
pub fn index_randomized(basis: &AlgebraBasis, cfg: &FieldConfig) -> Result<usize, OracleError> {
    let (n, k, p) = (basis.n, basis.len(), cfg.prime);
    check_prime(n, cfg);
    let span = basis.span(p);
    let brackets = closed_brackets(basis, &span, p)?;
    let fp = basis.fingerprint();
    let mut best_rank = 0;
    for trial in 0..cfg.trials {
        let mut stream = Stream::new(cfg.seed, fp, trial);
        let f: Vec<u64> = (0..n * n).map(|_| stream.next_mod(p)).collect();
        let mut m = vec![vec![0u64; k]; k];
        for (i, j, br) in &brackets {
            let mut val = 0u64;
            for (&(r, c), &coeff) in br {
                val = addm(
                    val,
                    mulm(f[(r - 1) * n + (c - 1)], to_field(coeff, p), p),
                    p,
                );
            }
            m[*i][*j] = val;
            m[*j][*i] = subm(0, val, p);
        }
        for (i, row) in m.iter().enumerate() {
            for (j, &val) in row.iter().enumerate() {
                assert_eq!(addm(val, m[j][i], p), 0, "bracket matrix not antisymmetric");
            }
        }
        best_rank = best_rank.max(rank_dense(m, p));
    }
    Ok(k - best_rank)
}

/// `[x, v]` for a basis element `x` and a dense matrix `v`.
fn bracket_elem_dense(x: &BasisElement, v: &[u64], n: usize, p: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    match x {
        BasisElement::Elementary { row, col } => {
            let (i, j) = (row - 1, col - 1);
            // E_ij * v adds row j of v into row i; v * E_ij adds col i into col j
            for c in 0..n {
                out[i * n + c] = addm(out[i * n + c], v[j * n + c], p);
            }
            for r in 0..n {
                out[r * n + j] = subm(out[r * n + j], v[r * n + i], p);
            }
        }
        BasisElement::Diagonal(d) => {
            for r in 0..n {
                for c in 0..n {
                    let coeff = to_field(d[r] - d[c], p);
                    out[r * n + c] = mulm(coeff, v[r * n + c], p);
                }
            }
        }
    }
    out
}

/// Runs the lower central series as explicit spans until it stabilizes;
/// the algebra is nilpotent iff the series reaches zero.
pub fn is_nilpotent(basis: &AlgebraBasis, cfg: &FieldConfig) -> Result<bool, OracleError> {
    let (n, p) = (basis.n, cfg.prime);
    check_prime(n, cfg);
    let span = basis.span(p);
    closed_brackets(basis, &span, p)?;
    let mut current: Vec<Vec<u64>> = basis.elements.iter().map(|e| basis.dense(e, p)).collect();
    loop {
        let mut next = Echelon::new(p);
        for x in &basis.elements {
            for y in &current {
                let mut w = bracket_elem_dense(x, y, n, p);
                next.insert(&mut w);
            }
        }
        if next.rank() == 0 {
            return Ok(true);
        }
        if next.rank() >= current.len() {
            return Ok(false); // stabilized at a nonzero term
        }
        current = next
            .rows
            .iter()
            .map(|row| {
                let mut v = vec![0u64; n * n];
                for &(pos, val) in &row.entries {
                    v[pos] = val;
                }
                v
            })
            .collect();
    }
}

/// Whether `sub` is an ideal of `ambient`: every bracket of an ambient
/// element with a sub element lands back in sub's span.
pub fn is_ideal(
    sub: &AlgebraBasis,
    ambient: &AlgebraBasis,
    cfg: &FieldConfig,
) -> Result<bool, OracleError> {
    assert_eq!(sub.n, ambient.n, "mixed matrix sizes");
    let (n, p) = (ambient.n, cfg.prime);
    check_prime(n, cfg);
    let ambient_span = ambient.span(p);
    let sub_span = sub.span(p);
    for e in &sub.elements {
        let mut v = sub.dense(e, p);
        if !ambient_span.is_member(&mut v) {
            return Err(OracleError::NotASubspace);
        }
    }
    for a in &ambient.elements {
        for s in &sub.elements {
            let br = bracket(a, s);
            let mut v = vec![0u64; n * n];
            for (&(r, c), &val) in &br {
                v[(r - 1) * n + (c - 1)] = to_field(val, p);
            }
            if !sub_span.is_member(&mut v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Dimension of the center: the solution space of `[x, y_k] = 0` for all
/// basis elements `y_k`, with `x` constrained to the span.
pub fn center_dim_oracle(basis: &AlgebraBasis, cfg: &FieldConfig) -> Result<usize, OracleError> {
    let (n, k, p) = (basis.n, basis.len(), cfg.prime);
    check_prime(n, cfg);
    let span = basis.span(p);
    closed_brackets(basis, &span, p)?;
    // column i of the constraint map: all brackets [x_i, y_k], stacked
    let mut columns: Vec<BTreeMap<usize, u64>> = vec![BTreeMap::new(); k];
    for (i, x) in basis.elements.iter().enumerate() {
        for (kk, y) in basis.elements.iter().enumerate() {
            for (&(r, c), &val) in &bracket(x, y) {
                let pos = kk * n * n + (r - 1) * n + (c - 1);
                let f = to_field(val, p);
                if f != 0 {
                    columns[i].insert(pos, f);
                }
            }
        }
    }
    // compress the (few) used positions, then eliminate
    let mut used: Vec<usize> = columns.iter().flat_map(|c| c.keys().copied()).collect();
    used.sort_unstable();
    used.dedup();
    let index_of = |pos: usize| used.binary_search(&pos).unwrap();
    let mut ech = Echelon::new(p);
    let mut rank = 0;
    for col in &columns {
        let mut v = vec![0u64; used.len()];
        for (&pos, &val) in col {
            v[index_of(pos)] = val;
        }
        if ech.insert(&mut v) {
            rank += 1;
        }
    }
    Ok(k - rank)
}

/// Randomized breadth: the rank of `ad_x` for random span elements `x`,
/// maximized over trials. Each trial is a lower bound on the true breadth;
/// a generic element attains it.
pub fn breadth_randomized(basis: &AlgebraBasis, cfg: &FieldConfig) -> Result<usize, OracleError> {
    let (n, p) = (basis.n, cfg.prime);
    check_prime(n, cfg);
    let span = basis.span(p);
    closed_brackets(basis, &span, p)?;
    let fp = basis.fingerprint();
    let mut best = 0;
    for trial in 0..cfg.trials {
        let mut stream = Stream::new(cfg.seed ^ 0xB4EA_D700, fp, trial);
        let mut x = vec![0u64; n * n];
        for e in &basis.elements {
            let coeff = stream.next_mod(p);
            let dense = basis.dense(e, p);
            for (xi, di) in x.iter_mut().zip(dense) {
                *xi = addm(*xi, mulm(coeff, di, p), p);
            }
        }
        let mut image = Echelon::new(p);
        for y in &basis.elements {
            // [x, y] = -[y, x]; the sign does not move the rank
            let mut w = bracket_elem_dense(y, &x, n, p);
            image.insert(&mut w);
        }
        best = best.max(image.rank());
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::meander::all_specs;
    use crate::notation::Composition;
    use crate::poset::{chain_block_poset, index_nilpotent_poset};

    fn spec(text: &str) -> SeaweedSpec {
        SeaweedSpec::parse(text).unwrap()
    }

    fn cfg() -> FieldConfig {
        FieldConfig::default()
    }

    #[test]
    fn bracket_cases() {
        let e12 = BasisElement::Elementary { row: 1, col: 2 };
        let e23 = BasisElement::Elementary { row: 2, col: 3 };
        let e21 = BasisElement::Elementary { row: 2, col: 1 };
        assert_eq!(bracket(&e12, &e23), BTreeMap::from([((1, 3), 1)]));
        assert_eq!(
            bracket(&e12, &e21),
            BTreeMap::from([((1, 1), 1), ((2, 2), -1)])
        );
        let identity = BasisElement::Diagonal(vec![1, 1]);
        assert!(bracket(&identity, &e12).is_empty());
        assert!(bracket(&e12, &e12).is_empty());
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(seaweed_basis(&spec("p 3/3")).len(), 9);
        assert_eq!(seaweed_basis(&spec("p 2|4/1|2|3")).len(), 17);
        let b = seaweed_basis(&spec("pA 1|1/1|1"));
        assert_eq!(b.len(), 1);
        assert_eq!(b.elements()[0], BasisElement::Diagonal(vec![1, -1]));
    }

    #[test]
    fn seaweed_dim_matches_basis_size() {
        for n in 1..=8 {
            for s in all_specs(n, Flavor::Gl) {
                assert_eq!(s.dim(), seaweed_basis(&s).len(), "gl dim mismatch for {s}");
                let sl = s.with_flavor(Flavor::Sl);
                assert_eq!(
                    sl.dim(),
                    seaweed_basis(&sl).len(),
                    "sl dim mismatch for {sl}"
                );
            }
        }
    }

    #[test]
    fn nilradical_degenerate_cases() {
        let b = nilradical_basis(&spec("p 4/4"));
        assert_eq!(b.len(), 1);
        assert_eq!(b.elements()[0], BasisElement::Diagonal(vec![1, 1, 1, 1]));
        assert!(nilradical_basis(&spec("pA 4/4")).is_empty());
    }

    #[test]
    fn nilradical_of_running_example() {
        let b = nilradical_basis(&spec("p 2|3|1|2|2/7|3"));
        // 20 strict poset pairs plus the all-ones diagonal
        assert_eq!(b.len(), 21);
        assert!(b
            .elements()
            .iter()
            .any(|e| *e == BasisElement::Diagonal(vec![1; 10])));
    }

    #[test]
    fn index_of_full_gl() {
        assert_eq!(
            index_randomized(&seaweed_basis(&spec("p 3/3")), &cfg()).unwrap(),
            3
        );
        assert_eq!(
            index_randomized(&seaweed_basis(&spec("p 4/4")), &cfg()).unwrap(),
            4
        );
    }

    #[test]
    fn index_of_worked_nilradicals() {
        let b = nilradical_basis(&spec("p 2|3|1|2|2/7|3"));
        assert_eq!(index_randomized(&b, &cfg()).unwrap(), 7);
        let b = nilradical_basis(&spec("p 3|3|5|2/6|2|1|2|2"));
        assert_eq!(index_randomized(&b, &cfg()).unwrap(), 16);
    }

    #[test]
    fn index_reported_value_is_monotone_in_trials() {
        let b = seaweed_basis(&spec("p 2|4/1|2|3"));
        let value = |trials| index_randomized(&b, &FieldConfig { trials, ..cfg() }).unwrap();
        assert!(value(1) >= value(3));
        assert!(value(3) >= value(8));
    }

    #[test]
    fn nilpotency_cases() {
        let strictly_upper = AlgebraBasis::new(
            3,
            vec![
                BasisElement::Elementary { row: 1, col: 2 },
                BasisElement::Elementary { row: 1, col: 3 },
                BasisElement::Elementary { row: 2, col: 3 },
            ],
        );
        assert!(is_nilpotent(&strictly_upper, &cfg()).unwrap());
        assert!(!is_nilpotent(&seaweed_basis(&spec("p 2/2")), &cfg()).unwrap());
    }

    #[test]
    fn ideal_cases() {
        let gl3 = seaweed_basis(&spec("p 3/3"));
        let scalars = AlgebraBasis::new(3, vec![BasisElement::Diagonal(vec![1, 1, 1])]);
        assert!(is_ideal(&scalars, &gl3, &cfg()).unwrap());

        let gl2 = seaweed_basis(&spec("p 2/2"));
        let line = AlgebraBasis::new(2, vec![BasisElement::Elementary { row: 1, col: 2 }]);
        assert!(!is_ideal(&line, &gl2, &cfg()).unwrap());

        let outside = AlgebraBasis::new(2, vec![BasisElement::Elementary { row: 2, col: 1 }]);
        let upper = AlgebraBasis::new(
            2,
            vec![
                BasisElement::Elementary { row: 1, col: 2 },
                BasisElement::Diagonal(vec![1, 1]),
            ],
        );
        assert_eq!(
            is_ideal(&outside, &upper, &cfg()),
            Err(OracleError::NotASubspace)
        );
    }

    #[test]
    fn center_cases() {
        assert_eq!(
            center_dim_oracle(&seaweed_basis(&spec("p 3/3")), &cfg()).unwrap(),
            1
        );
        assert_eq!(
            center_dim_oracle(&seaweed_basis(&spec("p 2|2|3|1|1|3/4|3|5")), &cfg()).unwrap(),
            3
        );
        assert_eq!(
            center_dim_oracle(&seaweed_basis(&spec("pA 1|1/1|1")), &cfg()).unwrap(),
            1
        );
    }

    #[test]
    fn breadth_cases() {
        assert_eq!(
            breadth_randomized(&seaweed_basis(&spec("p 2/2")), &cfg()).unwrap(),
            2
        );
        assert_eq!(
            breadth_randomized(&seaweed_basis(&spec("p 2|4/1|2|3")), &cfg()).unwrap(),
            11
        );
        let diagonal = AlgebraBasis::new(
            3,
            vec![
                BasisElement::Diagonal(vec![1, 0, 0]),
                BasisElement::Diagonal(vec![0, 1, 0]),
            ],
        );
        assert_eq!(breadth_randomized(&diagonal, &cfg()).unwrap(), 0);
    }

    #[test]
    fn poset_algebra_index_matches_formula() {
        let c = Composition::new(vec![2, 1, 3]).unwrap();
        let poset = chain_block_poset(&c);
        let b = poset_algebra_basis(&poset);
        assert_eq!(
            index_randomized(&b, &cfg()).unwrap(),
            index_nilpotent_poset(&poset)
        );
    }

    #[test]
    fn bracket_not_closed_is_reported() {
        // E_12 and E_21 bracket to a diagonal outside the span
        let open = AlgebraBasis::new(
            2,
            vec![
                BasisElement::Elementary { row: 1, col: 2 },
                BasisElement::Elementary { row: 2, col: 1 },
            ],
        );
        assert_eq!(
            index_randomized(&open, &cfg()),
            Err(OracleError::BracketNotClosed { i: 0, j: 1 })
        );
    }
}
