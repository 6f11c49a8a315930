//! Exact edit distance in the insertion/deletion metric: the oracle layer
//! every approximation in this crate is tested against.
//!
//! The metric counts insertions and deletions only; a substitution costs 2
//! (delete + insert). Distance and LCS are linked by
//! `ED(a, b) = |a| + |b| - 2 * LCS(a, b)`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::editscript::{script_from_pairs, EditScript};
use crate::error::{Error, Result};
use crate::strings::IndexedString;

const INF: u32 = u32::MAX / 2;

fn check_alphabets(a: &IndexedString, b: &IndexedString) -> Result<()> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch {
            detail: format!(
                "components {:?} vs {:?}",
                a.alphabet().components(),
                b.alphabet().components()
            ),
        });
    }
    Ok(())
}

/// Exact distance and a witness script, by full Wagner-Fischer DP with
/// traceback.
///
/// Tie-breaking is fixed (delete before insert at equal cost) so scripts are
/// deterministic. The script is canonical: deletions first, then insertions.
pub fn edit_distance_exact(a: &IndexedString, b: &IndexedString) -> Result<(usize, EditScript)> {
    check_alphabets(a, b)?;
    let (la, lb) = (a.len(), b.len());
    let w = lb + 1;
    let mut dp = vec![0u32; (la + 1) * w];
    for (j, cell) in dp.iter_mut().enumerate().take(lb + 1) {
        *cell = j as u32;
    }
    for i in 1..=la {
        dp[i * w] = i as u32;
        let sa = a.symbol(i - 1);
        for j in 1..=lb {
            dp[i * w + j] = if sa == b.symbol(j - 1) {
                dp[(i - 1) * w + (j - 1)]
            } else {
                dp[(i - 1) * w + j].min(dp[i * w + (j - 1)]) + 1
            };
        }
    }
    let dist = dp[la * w + lb] as usize;

    // Traceback: matches on the diagonal, delete preferred over insert.
    let mut pairs_rev: Vec<(usize, usize)> = Vec::new();
    let (mut i, mut j) = (la, lb);
    while i > 0 && j > 0 {
        if a.symbol(i - 1) == b.symbol(j - 1) && dp[i * w + j] == dp[(i - 1) * w + (j - 1)] {
            pairs_rev.push((i - 1, j - 1));
            i -= 1;
            j -= 1;
        } else if dp[i * w + j] == dp[(i - 1) * w + j] + 1 {
            i -= 1;
        } else {
            j -= 1;
        }
    }
    pairs_rev.reverse();
    let script = script_from_pairs(a, b, &pairs_rev)?;
    debug_assert_eq!(script.size(), dist);
    Ok((dist, script))
}

/// Distance only, two-row DP (O(min memory), used for oracles at sizes where
/// the full traceback table would be wasteful).
pub fn edit_distance(a: &IndexedString, b: &IndexedString) -> Result<usize> {
    check_alphabets(a, b)?;
    let (la, lb) = (a.len(), b.len());
    let mut prev: Vec<u32> = (0..=lb as u32).collect();
    let mut cur = vec![0u32; lb + 1];
    for i in 1..=la {
        cur[0] = i as u32;
        let sa = a.symbol(i - 1);
        for j in 1..=lb {
            cur[j] = if sa == b.symbol(j - 1) {
                prev[j - 1]
            } else {
                prev[j].min(cur[j - 1]) + 1
            };
        }
        core::mem::swap(&mut prev, &mut cur);
    }
    Ok(prev[lb] as usize)
}

/// Banded distance with a doubling threshold, bit-identical to the full DP.
///
/// An oracle accelerator only: when the true distance is `d`, total work is
/// `O((|a| + |b|) * d)`.
pub fn edit_distance_banded(a: &IndexedString, b: &IndexedString) -> Result<usize> {
    check_alphabets(a, b)?;
    let (la, lb) = (a.len(), b.len());
    if la == 0 || lb == 0 {
        return Ok(la + lb);
    }
    let diff = la.abs_diff(lb);
    let mut t = diff.max(1);
    loop {
        if t >= la + lb {
            return edit_distance(a, b);
        }
        let d = banded_pass(a, b, t);
        if d as usize <= t {
            return Ok(d as usize);
        }
        t *= 2;
    }
}

/// One restricted pass: cells with |j - i| > t are treated as unreachable.
/// The result is exact whenever it is <= t.
fn banded_pass(a: &IndexedString, b: &IndexedString, t: usize) -> u32 {
    let (la, lb) = (a.len(), b.len());
    let width = 2 * t + 1;
    let mut prev = vec![INF; width];
    let mut cur = vec![INF; width];
    // prev holds row 0: D[0][j] = j for j <= t.
    for j in 0..=t.min(lb) {
        prev[j + t] = j as u32; // column j sits at offset j - i + t
    }
    for i in 1..=la {
        for c in cur.iter_mut() {
            *c = INF;
        }
        let lo = i.saturating_sub(t);
        let hi = (i + t).min(lb);
        let sa = a.symbol(i - 1);
        for j in lo..=hi {
            let off = j + t - i;
            let v = if j == 0 {
                i as u32
            } else if sa == b.symbol(j - 1) {
                // prev row, column j-1: offset (j-1) - (i-1) + t = off
                prev[off]
            } else {
                // prev row column j (offset off+1), cur row column j-1 (off-1)
                let up = if off + 1 < width { prev[off + 1] } else { INF };
                let left = if off > 0 { cur[off - 1] } else { INF };
                up.min(left).saturating_add(1)
            };
            cur[off] = v;
        }
        core::mem::swap(&mut prev, &mut cur);
    }
    if lb + t >= la && lb <= la + t {
        prev[lb + t - la]
    } else {
        INF
    }
}

/// Length of the common subsequence implied by lengths and a script size:
/// `(lenA + lenB - ed) / 2`.
///
/// Rejects odd or negative sums, which signal an inconsistent script.
pub fn lcs_from_ed(len_a: usize, len_b: usize, ed: usize) -> Result<usize> {
    let sum = len_a + len_b;
    if ed > sum || !(sum - ed).is_multiple_of(2) {
        return Err(Error::ParityViolation { len_a, len_b, ed });
    }
    Ok((sum - ed) / 2)
}

/// An engine producing edit scripts with a known multiplicative guarantee.
///
/// The exact DP is the `ε_I = 0` engine; indexing schemes provide
/// `ε_I = 11ε` (one layer) and `ε_I = 23ε` (two layers).
pub trait EdEngine {
    /// Approximation slack: emitted scripts have size at most
    /// `(1 + ratio_epsilon()) * ED(source, target)`.
    fn ratio_epsilon(&self) -> f64;

    fn script(&self, source: &IndexedString, target: &IndexedString) -> Result<EditScript>;
}

/// The exact DP as an engine.
pub struct ExactEngine;

impl EdEngine for ExactEngine {
    fn ratio_epsilon(&self) -> f64 {
        0.0
    }

    fn script(&self, source: &IndexedString, target: &IndexedString) -> Result<EditScript> {
        edit_distance_exact(source, target)
            .map(|(_, s)| s)
            .map_err(|e| Error::EngineFailure {
                round: 0,
                detail: e.to_string(),
            })
    }
}
