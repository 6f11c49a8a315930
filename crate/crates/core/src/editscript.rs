use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::strings::IndexedString;

/// One edit operation. `Delete` positions refer to the source string;
/// `Insert` positions refer to the target string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EditOp {
    Delete { src: usize },
    Insert { dst: usize, symbol: Vec<u16> },
}

/// An ordered set of insertions and deletions transforming a source string
/// into a target string.
///
/// Canonical form: all deletions first (source positions strictly
/// ascending), then all insertions (target positions strictly ascending).
/// Applying the script removes the marked source symbols and places the
/// inserted symbols at their target positions; surviving source symbols fill
/// the remaining target positions in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditScript {
    ops: Vec<EditOp>,
    deletions: usize,
}

impl EditScript {
    pub fn empty() -> Self {
        EditScript {
            ops: Vec::new(),
            deletions: 0,
        }
    }

    /// Builds a canonical script from sorted deletion positions and sorted
    /// `(target position, symbol)` insertions.
    pub fn from_parts(deletes: Vec<usize>, inserts: Vec<(usize, Vec<u16>)>) -> Result<Self> {
        for w in deletes.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::ScriptNotCanonical {
                    detail: format!("deletions not strictly ascending at {}", w[1]),
                });
            }
        }
        for w in inserts.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::ScriptNotCanonical {
                    detail: format!("insertions not strictly ascending at {}", w[1].0),
                });
            }
        }
        let deletions = deletes.len();
        let mut ops = Vec::with_capacity(deletes.len() + inserts.len());
        ops.extend(deletes.into_iter().map(|src| EditOp::Delete { src }));
        ops.extend(
            inserts
                .into_iter()
                .map(|(dst, symbol)| EditOp::Insert { dst, symbol }),
        );
        Ok(EditScript { ops, deletions })
    }

    pub fn ops(&self) -> &[EditOp] {
        &self.ops
    }

    /// Operation count (the script's size in the edit metric).
    pub fn size(&self) -> usize {
        self.ops.len()
    }

    pub fn num_deletions(&self) -> usize {
        self.deletions
    }

    pub fn num_insertions(&self) -> usize {
        self.ops.len() - self.deletions
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    fn delete_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.ops[..self.deletions].iter().map(|op| match op {
            EditOp::Delete { src } => *src,
            EditOp::Insert { .. } => unreachable!(),
        })
    }

    fn inserts(&self) -> impl Iterator<Item = (usize, &[u16])> {
        self.ops[self.deletions..].iter().map(|op| match op {
            EditOp::Insert { dst, symbol } => (*dst, symbol.as_slice()),
            EditOp::Delete { .. } => unreachable!(),
        })
    }

    /// The matching implied by the script: pairs `(source position, target
    /// position)` of symbols the script leaves untouched, in order.
    ///
    /// `source_len` is the length of the string the script applies to.
    pub fn implied_matching(&self, source_len: usize) -> Vec<(usize, usize)> {
        let survivors = source_len - self.deletions;
        let target_len = survivors + self.num_insertions();
        let mut deleted = alloc::vec![false; source_len];
        for src in self.delete_positions() {
            deleted[src] = true;
        }
        let mut inserted = alloc::vec![false; target_len];
        for (dst, _) in self.inserts() {
            inserted[dst] = true;
        }
        let mut pairs = Vec::with_capacity(survivors);
        let mut src = 0usize;
        for (dst, ins) in inserted.iter().enumerate() {
            if *ins {
                continue;
            }
            while deleted[src] {
                src += 1;
            }
            pairs.push((src, dst));
            src += 1;
        }
        pairs
    }
}

/// Applies `script` to `source`, producing the target string.
///
/// Positions are validated: deletions must name existing source positions
/// and insertions must name positions inside the resulting string.
pub fn apply_edit_script(source: &IndexedString, script: &EditScript) -> Result<IndexedString> {
    let n = source.len();
    let k = source.num_components();
    let mut deleted = alloc::vec![false; n];
    for src in script.delete_positions() {
        if src >= n {
            return Err(Error::ScriptPositionOutOfRange {
                position: src,
                len: n,
            });
        }
        deleted[src] = true;
    }
    let survivors = n - script.num_deletions();
    let target_len = survivors + script.num_insertions();
    let mut slot: Vec<Option<&[u16]>> = alloc::vec![None; target_len];
    for (dst, symbol) in script.inserts() {
        if dst >= target_len {
            return Err(Error::ScriptPositionOutOfRange {
                position: dst,
                len: target_len,
            });
        }
        if symbol.len() != k {
            return Err(Error::AlphabetMismatch {
                detail: format!(
                    "inserted symbol has {} coordinates, string has {k}",
                    symbol.len()
                ),
            });
        }
        slot[dst] = Some(symbol);
    }
    let mut data = Vec::with_capacity(target_len * k);
    let mut src = 0usize;
    for s in slot {
        match s {
            Some(symbol) => data.extend_from_slice(symbol),
            None => {
                while deleted[src] {
                    src += 1;
                }
                data.extend_from_slice(source.symbol(src));
                src += 1;
            }
        }
    }
    IndexedString::new(source.alphabet().clone(), data)
}

/// Builds the canonical script sending `source` to `target` given a
/// non-crossing matching (pairs of equal symbols): delete every unmatched
/// source symbol, insert every unmatched target symbol.
pub(crate) fn script_from_pairs(
    source: &IndexedString,
    target: &IndexedString,
    pairs: &[(usize, usize)],
) -> Result<EditScript> {
    let mut matched_src = alloc::vec![false; source.len()];
    let mut matched_dst = alloc::vec![false; target.len()];
    let mut prev: Option<(usize, usize)> = None;
    for (idx, &(i, j)) in pairs.iter().enumerate() {
        if i >= source.len() || j >= target.len() {
            return Err(Error::EdgeOutOfRange {
                edge: (i, j),
                left_len: source.len(),
                right_len: target.len(),
            });
        }
        if let Some((pi, pj)) = prev {
            if i <= pi || j <= pj {
                return Err(Error::MatchingNotMonotone { at: idx });
            }
        }
        if source.symbol(i) != target.symbol(j) {
            return Err(Error::MatchedSymbolsDiffer { left: i, right: j });
        }
        matched_src[i] = true;
        matched_dst[j] = true;
        prev = Some((i, j));
    }
    let deletes: Vec<usize> = (0..source.len()).filter(|&i| !matched_src[i]).collect();
    let inserts: Vec<(usize, Vec<u16>)> = (0..target.len())
        .filter(|&j| !matched_dst[j])
        .map(|j| (j, target.symbol(j).to_vec()))
        .collect();
    EditScript::from_parts(deletes, inserts)
}
