//! Largest non-crossing matching of an explicit bipartite edge set, by
//! sorting edges (left ascending, right descending) and running a longest
//! strictly-increasing subsequence over the right endpoints with a
//! prefix-maximum Fenwick tree.

use alloc::vec;
use alloc::vec::Vec;

use crate::editscript::{script_from_pairs, EditScript};
use crate::error::{Error, Result};
use crate::strings::IndexedString;

/// Bipartite edges between positions of a left and a right string.
/// Duplicates are permitted on input and removed by normalization.
#[derive(Debug, Clone)]
pub struct EdgeSet {
    left_len: usize,
    right_len: usize,
    edges: Vec<(u32, u32)>,
    normalized: bool,
}

impl EdgeSet {
    pub fn new(left_len: usize, right_len: usize) -> Self {
        EdgeSet {
            left_len,
            right_len,
            edges: Vec::new(),
            normalized: true,
        }
    }

    pub fn with_edges(
        left_len: usize,
        right_len: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut set = EdgeSet::new(left_len, right_len);
        for (i, j) in edges {
            set.push(i, j)?;
        }
        Ok(set)
    }

    /// All identical-symbol pairs of two strings (the LCS edge set).
    pub fn identical_pairs(a: &IndexedString, b: &IndexedString) -> Self {
        let mut set = EdgeSet::new(a.len(), b.len());
        for i in 0..a.len() {
            let sa = a.symbol(i);
            for j in 0..b.len() {
                if sa == b.symbol(j) {
                    set.edges.push((i as u32, j as u32));
                }
            }
        }
        set.normalized = false;
        set
    }

    pub fn push(&mut self, i: usize, j: usize) -> Result<()> {
        if i >= self.left_len || j >= self.right_len {
            return Err(Error::EdgeOutOfRange {
                edge: (i, j),
                left_len: self.left_len,
                right_len: self.right_len,
            });
        }
        self.edges.push((i as u32, j as u32));
        self.normalized = false;
        Ok(())
    }

    /// Appends edges without per-edge bounds checks; callers guarantee the
    /// ranges (used by the hot path of the approximation algorithms).
    pub(crate) fn push_unchecked(&mut self, i: u32, j: u32) {
        debug_assert!((i as usize) < self.left_len && (j as usize) < self.right_len);
        self.edges.push((i, j));
        self.normalized = false;
    }

    /// Sorts lexicographically and removes duplicates.
    pub fn normalize(&mut self) {
        if !self.normalized {
            self.edges.sort_unstable();
            self.edges.dedup();
            self.normalized = true;
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn left_len(&self) -> usize {
        self.left_len
    }

    pub fn right_len(&self) -> usize {
        self.right_len
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Debug dump, one `i j` line per edge (test fixtures).
    pub fn dump(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut out = alloc::string::String::new();
        for &(i, j) in &self.edges {
            let _ = writeln!(out, "{i} {j}");
        }
        out
    }
}

/// A strictly monotone list of (left, right) position pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonCrossingMatching {
    left_len: usize,
    right_len: usize,
    pairs: Vec<(usize, usize)>,
}

impl NonCrossingMatching {
    pub fn new(left_len: usize, right_len: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        for (idx, w) in pairs.windows(2).enumerate() {
            if w[0].0 >= w[1].0 || w[0].1 >= w[1].1 {
                return Err(Error::MatchingNotMonotone { at: idx + 1 });
            }
        }
        if let Some(&(i, j)) = pairs.last() {
            if i >= left_len || j >= right_len {
                return Err(Error::EdgeOutOfRange {
                    edge: (i, j),
                    left_len,
                    right_len,
                });
            }
        }
        Ok(NonCrossingMatching {
            left_len,
            right_len,
            pairs,
        })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn left_len(&self) -> usize {
        self.left_len
    }

    pub fn right_len(&self) -> usize {
        self.right_len
    }

    /// Unmatched-vertex count: the size of the edit script this matching
    /// induces.
    pub fn unmatched(&self) -> usize {
        self.left_len + self.right_len - 2 * self.pairs.len()
    }
}

/// Fenwick tree over right-endpoint values holding (chain length, edge id),
/// queried for the maximum over a prefix. Ties keep the first-seen entry so
/// witnesses are deterministic.
struct PrefixMax {
    tree: Vec<(u32, u32)>,
}

const NONE: (u32, u32) = (0, u32::MAX);

impl PrefixMax {
    fn new(n: usize) -> Self {
        PrefixMax {
            tree: vec![NONE; n + 1],
        }
    }

    /// Max over values at positions `0..=pos`; `pos = None` means empty.
    fn query(&self, pos: Option<usize>) -> (u32, u32) {
        let mut best = NONE;
        let Some(p) = pos else { return best };
        let mut i = p + 1;
        while i > 0 {
            let v = self.tree[i];
            if v.0 > best.0 {
                best = v;
            }
            i -= i & i.wrapping_neg();
        }
        best
    }

    fn update(&mut self, pos: usize, value: (u32, u32)) {
        let mut i = pos + 1;
        while i < self.tree.len() {
            if value.0 > self.tree[i].0 {
                self.tree[i] = value;
            }
            i += i & i.wrapping_neg();
        }
    }
}

/// Maximum-cardinality strictly-monotone subset of the edges.
///
/// Sort order (left ascending, right descending) makes a strictly increasing
/// right-endpoint subsequence use at most one edge per left vertex, so the
/// problem reduces to LIS; the Fenwick tree gives `O((n + r) log n)`.
/// The cardinality is unique; the witness is the deterministic tie-broken
/// one (lexicographically smallest left sequence).
pub fn max_noncrossing_matching(g: &EdgeSet) -> Result<NonCrossingMatching> {
    let mut edges = g.edges.clone();
    for &(i, j) in &edges {
        if i as usize >= g.left_len || j as usize >= g.right_len {
            return Err(Error::EdgeOutOfRange {
                edge: (i as usize, j as usize),
                left_len: g.left_len,
                right_len: g.right_len,
            });
        }
    }
    edges.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    edges.dedup();
    if edges.is_empty() {
        return NonCrossingMatching::new(g.left_len, g.right_len, Vec::new());
    }

    let mut tree = PrefixMax::new(g.right_len);
    // parent[e]: edge id preceding edge e in its best chain
    let mut parent = vec![u32::MAX; edges.len()];
    let mut len_at = vec![0u32; edges.len()];
    let mut best: (u32, u32) = NONE;
    for (e, &(_, j)) in edges.iter().enumerate() {
        let prev = tree.query((j as usize).checked_sub(1));
        let len = prev.0 + 1;
        parent[e] = prev.1;
        len_at[e] = len;
        tree.update(j as usize, (len, e as u32));
        if len > best.0 {
            best = (len, e as u32);
        }
    }

    let mut pairs = Vec::with_capacity(best.0 as usize);
    let mut e = best.1;
    while e != u32::MAX {
        let (i, j) = edges[e as usize];
        pairs.push((i as usize, j as usize));
        e = parent[e as usize];
    }
    pairs.reverse();
    debug_assert_eq!(pairs.len(), best.0 as usize);
    NonCrossingMatching::new(g.left_len, g.right_len, pairs)
}

/// Turns a matching between `source` and `target` into the canonical edit
/// script: delete every unmatched source symbol, insert every unmatched
/// target symbol. Matched pairs must join identical symbols.
pub fn matching_to_script(
    m: &NonCrossingMatching,
    source: &IndexedString,
    target: &IndexedString,
) -> Result<EditScript> {
    if m.left_len != source.len() || m.right_len != target.len() {
        return Err(Error::LengthMismatch {
            left: m.left_len.max(m.right_len),
            right: source.len().max(target.len()),
        });
    }
    let script = script_from_pairs(source, target, &m.pairs)?;
    debug_assert_eq!(script.size(), m.unmatched());
    Ok(script)
}
