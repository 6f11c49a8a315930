//! Synchronization strings: verification of the interval property,
//! randomized construct-and-verify generation, the self-matching bound, and
//! the K-round global position decoder used by the code constructions.
//!
//! A string satisfies the property at parameter `eps` when every pair of
//! adjacent intervals is far apart: `ED(S[i,j), S[j,k)) > (1-eps)(k-i)`.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::editdist::EdEngine;
use crate::error::{Error, Result};
use crate::matching::{max_noncrossing_matching, EdgeSet};
use crate::num::ceil_pos;
use crate::rng::SeedSplitter;
use crate::strings::IndexedString;

/// First triple violating the interval property. Offsets are 0-based;
/// `one_based()` gives the conventional `1 <= i < j < k <= n+1` form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub ed: usize,
}

impl Violation {
    pub fn one_based(&self) -> (usize, usize, usize) {
        (self.i + 1, self.j + 1, self.k + 1)
    }
}

fn check_eps(epsilon: f64) -> Result<()> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::ParamOutOfRange {
            name: "epsilon",
            value: epsilon,
            expected: "(0, 1)",
        });
    }
    Ok(())
}

/// Exhaustive check of the interval property over all triples.
///
/// Returns `None` when the property holds, otherwise the first violating
/// triple in (i, j, k) scan order. One DP per (i, j) pair, extended row by
/// row over k, so a violation at a short span is found almost immediately.
pub fn verify_sync(s: &IndexedString, epsilon: f64) -> Result<Option<Violation>> {
    check_eps(epsilon)?;
    if s.is_empty() {
        return Err(Error::ParamOutOfRange {
            name: "n",
            value: 0.0,
            expected: ">= 1",
        });
    }
    Ok(find_violation_capped(s, epsilon, s.len()))
}

/// Interval check restricted to spans `k - i <= cap`, same scan order.
/// Symbols are interned to integer ids up front so the DP inner loop
/// compares plain integers.
fn find_violation_capped(s: &IndexedString, epsilon: f64, cap: usize) -> Option<Violation> {
    let n = s.len();
    let ids = intern_symbols(s);
    let mut row: Vec<u32> = Vec::new();
    for i in 0..n {
        let j_hi = (i + cap - 1).min(n - 1);
        for j in (i + 1)..=j_hi {
            let a = j - i;
            let left = &ids[i..j];
            row.clear();
            row.extend(0..=a as u32);
            let k_hi = (i + cap).min(n);
            for k in (j + 1)..=k_hi {
                // extend the DP row by received symbol s[k-1]
                let y = ids[k - 1];
                let mut prev_diag = row[0];
                row[0] = (k - j) as u32;
                for (p, &x) in left.iter().enumerate() {
                    let tmp = row[p + 1];
                    row[p + 1] = if x == y {
                        prev_diag
                    } else {
                        tmp.min(row[p]) + 1
                    };
                    prev_diag = tmp;
                }
                let ed = row[a] as usize;
                if (ed as f64) <= (1.0 - epsilon) * ((k - i) as f64) {
                    return Some(Violation { i, j, k, ed });
                }
            }
        }
    }
    None
}

fn intern_symbols(s: &IndexedString) -> Vec<u32> {
    use alloc::collections::BTreeMap;
    let mut table: BTreeMap<&[u16], u32> = BTreeMap::new();
    let mut ids = Vec::with_capacity(s.len());
    for p in 0..s.len() {
        let next = table.len() as u32;
        ids.push(*table.entry(s.symbol(p)).or_insert(next));
    }
    ids
}

/// A string whose interval property has been checked.
#[derive(Debug, Clone, PartialEq)]
pub struct SyncString {
    string: IndexedString,
    epsilon: f64,
    verified: bool,
}

impl SyncString {
    /// Wraps a string after running the full verifier; fails with the first
    /// violating triple otherwise.
    pub fn from_verified(string: IndexedString, epsilon: f64) -> Result<Self> {
        match verify_sync(&string, epsilon)? {
            None => Ok(SyncString {
                string,
                epsilon,
                verified: true,
            }),
            Some(v) => {
                let (i, j, k) = v.one_based();
                Err(Error::SyncViolation { i, j, k, ed: v.ed })
            }
        }
    }

    /// Wraps without checking (deserialization path); `verified` records
    /// whatever the source claimed.
    pub fn new_unchecked(string: IndexedString, epsilon: f64, verified: bool) -> Self {
        SyncString {
            string,
            epsilon,
            verified,
        }
    }

    pub fn string(&self) -> &IndexedString {
        &self.string
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn verified(&self) -> bool {
        self.verified
    }

    pub fn len(&self) -> usize {
        self.string.len()
    }

    pub fn is_empty(&self) -> bool {
        self.string.is_empty()
    }
}

/// Alphabet size `ceil(c / eps^3)`, capped at the wire limit; `None` means
/// the formula overflows and the distinct-symbol construction applies.
pub fn sync_alphabet_size(epsilon: f64, c: f64) -> Option<u32> {
    let q = ceil_pos(c / (epsilon * epsilon * epsilon));
    if q <= 65536.0 {
        Some(q as u32)
    } else {
        None
    }
}

/// Randomized construct-and-verify generation with the default alphabet
/// constant `c = 4`.
pub fn gen_sync(n: usize, epsilon: f64, seed: u64) -> Result<SyncString> {
    gen_sync_with(n, epsilon, 4.0, seed)
}

/// Construct-and-verify: sample uniformly, scan for violations in
/// escalating span order, resample only the violating interval `[i, k)`.
///
/// When the alphabet formula exceeds the wire limit the string of `n`
/// distinct symbols is used instead (it satisfies the property for every
/// eps, since disjoint intervals share no symbol). Deterministic per seed;
/// gives up with a hard iteration cap.
pub fn gen_sync_with(n: usize, epsilon: f64, c: f64, seed: u64) -> Result<SyncString> {
    check_eps(epsilon)?;
    if n == 0 {
        return Err(Error::ParamOutOfRange {
            name: "n",
            value: 0.0,
            expected: ">= 1",
        });
    }
    let q = match sync_alphabet_size(epsilon, c) {
        Some(q) => q,
        None => {
            if n > 65536 {
                return Err(Error::ParamOutOfRange {
                    name: "n",
                    value: n as f64,
                    expected: "<= 65536 for the distinct-symbol construction",
                });
            }
            let data: Vec<u16> = (0..n as u32).map(|v| v as u16).collect();
            let s = IndexedString::plain(&data, n as u32)?;
            return SyncString::from_verified(s, epsilon);
        }
    };

    let mut rng = SeedSplitter::new(seed).stream("gen-sync");
    let mut data: Vec<u16> = (0..n).map(|_| rng.random_range(0..q) as u16).collect();
    let cap_limit: u64 = 1000 + 200 * n as u64;
    let mut resamples: u64 = 0;

    'restart: loop {
        let s = IndexedString::plain(&data, q)?;
        let mut cap = 4usize;
        loop {
            let cap_now = cap.min(n);
            if let Some(v) = find_violation_capped(&s, epsilon, cap_now) {
                resamples += 1;
                if resamples > cap_limit {
                    return Err(Error::IterationCapExceeded {
                        what: "gen_sync",
                        cap: cap_limit,
                        hint: "increase the alphabet constant c or epsilon",
                    });
                }
                for slot in data.iter_mut().take(v.k).skip(v.i) {
                    *slot = rng.random_range(0..q) as u16;
                }
                continue 'restart;
            }
            if cap_now == n {
                // full-span scan passed: the string is verified
                return Ok(SyncString {
                    string: s,
                    epsilon,
                    verified: true,
                });
            }
            cap *= 2;
        }
    }
}

/// Size of the largest monotone self-matching with `i != j`, computed over
/// all off-diagonal identical pairs. For a verified string of parameter eps
/// this never exceeds `eps * n`.
pub fn self_matching_bound(s: &SyncString) -> usize {
    let st = s.string();
    let n = st.len();
    let mut g = EdgeSet::new(n, n);
    for i in 0..n {
        let si = st.symbol(i);
        for j in 0..n {
            if i != j && si == st.symbol(j) {
                g.push_unchecked(i as u32, j as u32);
            }
        }
    }
    max_noncrossing_matching(&g)
        .expect("edges are in range by construction")
        .len()
}

/// Per-received-symbol position decoding: value in `1..=n`, with 0 standing
/// for the undecoded symbol. No position is assigned to more than `k`
/// received symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionDecoding {
    decoded: Vec<u32>,
    /// round (1-based) in which each received symbol was matched; 0 = never
    round: Vec<u16>,
    k: usize,
    sent_len: usize,
}

impl PositionDecoding {
    pub fn decoded(&self) -> &[u32] {
        &self.decoded
    }

    /// Round in which received symbol `q` was decoded (1-based, 0 = never).
    pub fn round(&self, q: usize) -> u16 {
        self.round[q]
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn sent_len(&self) -> usize {
        self.sent_len
    }

    /// Largest number of received symbols decoded to one position.
    pub fn max_multiplicity(&self) -> usize {
        let mut counts = vec![0usize; self.sent_len + 1];
        for &v in &self.decoded {
            if v != 0 {
                counts[v as usize] += 1;
            }
        }
        counts.into_iter().max().unwrap_or(0)
    }
}

/// K rounds of: compute a common subsequence between `sent` and the
/// still-undecoded part of `received` via `engine`, assign matched received
/// symbols the matched sent positions (1-based), remove them. Symbols never
/// matched decode to 0.
pub fn sync_decode_global(
    sent: &IndexedString,
    received: &IndexedString,
    k_rounds: usize,
    engine: &dyn EdEngine,
) -> Result<PositionDecoding> {
    if k_rounds == 0 {
        return Err(Error::ParamOutOfRange {
            name: "K",
            value: 0.0,
            expected: ">= 1",
        });
    }
    let mut decoded = vec![0u32; received.len()];
    let mut round_of = vec![0u16; received.len()];
    // residual[r] = original received position of residual symbol r
    let mut residual: Vec<usize> = (0..received.len()).collect();
    for round in 0..k_rounds {
        if residual.is_empty() {
            break;
        }
        let residual_str = received.gather(&residual);
        let script = engine
            .script(sent, &residual_str)
            .map_err(|e| Error::EngineFailure {
                round,
                detail: e.to_string(),
            })?;
        let pairs = script.implied_matching(sent.len());
        if pairs.is_empty() {
            break;
        }
        let mut matched = vec![false; residual.len()];
        for &(p, r) in &pairs {
            decoded[residual[r]] = (p + 1) as u32;
            round_of[residual[r]] = (round + 1) as u16;
            matched[r] = true;
        }
        residual = residual
            .iter()
            .zip(matched.iter())
            .filter(|(_, &m)| !m)
            .map(|(&orig, _)| orig)
            .collect();
    }
    let out = PositionDecoding {
        decoded,
        round: round_of,
        k: k_rounds,
        sent_len: sent.len(),
    };
    debug_assert!(out.max_multiplicity() <= k_rounds);
    Ok(out)
}

/// Counts surviving sent symbols whose received copy is decoded to anything
/// other than its true position (0 counts as incorrect).
pub fn count_misdecodings(
    record: &crate::channel::CorruptionRecord,
    decoding: &PositionDecoding,
) -> Result<usize> {
    if record.received_len != decoding.decoded.len() {
        return Err(Error::RecordMismatch {
            detail: alloc::format!(
                "record says received length {}, decoding covers {}",
                record.received_len,
                decoding.decoded.len()
            ),
        });
    }
    let mut wrong = 0usize;
    for &(src, dst) in &record.survivor_map {
        if decoding.decoded[dst] != (src + 1) as u32 {
            wrong += 1;
        }
    }
    Ok(wrong)
}

/// The worst-case misdecoding count for the K-round decoder:
/// `n * ((1+gamma) / (K (1+eps_i)) + eps_i (1+gamma/2) / (1+eps_i) + K * eps_s)`.
pub fn misdecoding_bound(n: usize, k: usize, eps_i: f64, eps_s: f64, gamma: f64) -> f64 {
    let n = n as f64;
    let k = k as f64;
    n * ((1.0 + gamma) / (k * (1.0 + eps_i))
        + eps_i * (1.0 + gamma / 2.0) / (1.0 + eps_i)
        + k * eps_s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::{corrupt, CorruptionMode};
    use crate::editdist::ExactEngine;

    fn plain(sym: &[u16], q: u32) -> IndexedString {
        IndexedString::plain(sym, q).unwrap()
    }

    #[test]
    fn distinct_symbols_always_verify() {
        let s = plain(&[0, 1, 2, 3, 4, 5, 6, 7], 8);
        for eps in [0.01, 0.25, 0.5, 0.99] {
            assert_eq!(verify_sync(&s, eps).unwrap(), None);
        }
    }

    #[test]
    fn repeated_symbol_fails_at_first_triple() {
        let s = plain(&[0, 0, 0, 0], 4);
        let v = verify_sync(&s, 0.5).unwrap().unwrap();
        assert_eq!(v.one_based(), (1, 2, 3));
        assert_eq!(v.ed, 0);
    }

    #[test]
    fn eps_bounds_rejected() {
        let s = plain(&[0, 1], 4);
        assert!(verify_sync(&s, 0.0).is_err());
        assert!(verify_sync(&s, 1.0).is_err());
        assert!(gen_sync(10, 0.0, 1).is_err());
    }

    #[test]
    fn gen_single_symbol() {
        let s = gen_sync(1, 0.5, 3).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.verified());
    }

    #[test]
    fn gen_sync_reverifies() {
        let s = gen_sync_with(50, 0.5, 4.0, 7).unwrap();
        assert!(s.verified());
        assert_eq!(verify_sync(s.string(), 0.5).unwrap(), None);
    }

    #[test]
    fn gen_sync_deterministic() {
        let a = gen_sync(40, 0.5, 11).unwrap();
        let b = gen_sync(40, 0.5, 11).unwrap();
        assert_eq!(a.string(), b.string());
    }

    #[test]
    fn distinct_fallback_for_tiny_eps() {
        // alphabet formula overflows; distinct symbols take over
        let s = gen_sync(32, 0.001, 5).unwrap();
        assert!(s.verified());
        assert_eq!(s.len(), 32);
        assert_eq!(self_matching_bound(&s), 0);
    }

    #[test]
    fn self_matching_values() {
        let distinct = SyncString::from_verified(plain(&[0, 1, 2, 3], 4), 0.5).unwrap();
        assert_eq!(self_matching_bound(&distinct), 0);
        // "abab": pairs (1,3) and (2,4) in 1-based coordinates
        let abab = SyncString::new_unchecked(plain(&[0, 1, 0, 1], 2), 0.9, false);
        assert_eq!(self_matching_bound(&abab), 2);
    }

    #[test]
    fn generated_strings_respect_self_matching_bound() {
        for (n, eps, seed) in [(40usize, 0.5, 1u64), (60, 0.5, 2), (50, 0.25, 3)] {
            let s = gen_sync(n, eps, seed).unwrap();
            let bound = (eps * n as f64) as usize;
            let got = self_matching_bound(&s);
            assert!(got <= bound, "n={n} eps={eps}: {got} > {bound}");
        }
    }

    #[test]
    fn identity_decode_with_exact_engine() {
        let s = gen_sync(40, 0.5, 17).unwrap();
        let dec = sync_decode_global(s.string(), s.string(), 1, &ExactEngine).unwrap();
        for (i, &v) in dec.decoded().iter().enumerate() {
            assert_eq!(v as usize, i + 1);
        }
        let rec = crate::channel::CorruptionRecord::identity(40);
        assert_eq!(count_misdecodings(&rec, &dec).unwrap(), 0);
    }

    #[test]
    fn deletions_leave_all_survivors_decoded() {
        let s = gen_sync(60, 0.5, 19).unwrap();
        let (recv, rec) = corrupt(s.string(), 0.2, 0.0, CorruptionMode::Uniform, 4).unwrap();
        let dec = sync_decode_global(s.string(), &recv, 1, &ExactEngine).unwrap();
        // received is a subsequence of sent, so round 1 matches everything
        assert!(dec.decoded().iter().all(|&v| v != 0));
        assert!(dec.max_multiplicity() <= 1);
        let wrong = count_misdecodings(&rec, &dec).unwrap();
        assert!(wrong as f64 <= 0.5 * 60.0);
    }

    #[test]
    fn multiplicity_capped_by_k() {
        let s = gen_sync(50, 0.5, 23).unwrap();
        let (recv, _) = corrupt(
            s.string(),
            0.1,
            0.4,
            CorruptionMode::BlockShuffleAdjacent,
            9,
        )
        .unwrap();
        for k in [1usize, 2, 4] {
            let dec = sync_decode_global(s.string(), &recv, k, &ExactEngine).unwrap();
            assert!(dec.max_multiplicity() <= k);
        }
    }

    #[test]
    fn two_layer_engine_decodes_positions() {
        use crate::indexing::{build_two_layer_scheme, CodebookParams, SchemeEngine};
        let n = 96;
        let scheme = build_two_layer_scheme(
            n,
            1.0 / 121.0,
            &CodebookParams::standard(48, 4096),
            &CodebookParams::standard(8, 512),
            61,
        )
        .unwrap();
        let sync = gen_sync(n, 0.25, 62).unwrap();
        let sent = sync
            .string()
            .index_concat(&scheme.index_string().unwrap())
            .unwrap();
        let (recv, rec) = corrupt(&sent, 0.1, 0.1, CorruptionMode::Uniform, 63).unwrap();
        let engine = SchemeEngine { scheme: &scheme };
        let k = 4;
        let dec = sync_decode_global(&sent, &recv, k, &engine).unwrap();
        assert!(dec.max_multiplicity() <= k);
        let wrong = count_misdecodings(&rec, &dec).unwrap();
        let bound = misdecoding_bound(n, k, scheme.ratio_epsilon(), 0.25, 0.1);
        assert!((wrong as f64) <= bound);
    }

    #[test]
    fn all_bottom_decoding_counts_survivors() {
        let s = gen_sync(30, 0.5, 29).unwrap();
        let (recv, rec) = corrupt(s.string(), 0.2, 0.1, CorruptionMode::Uniform, 31).unwrap();
        let dec = PositionDecoding {
            decoded: vec![0; recv.len()],
            round: vec![0; recv.len()],
            k: 1,
            sent_len: 30,
        };
        assert_eq!(count_misdecodings(&rec, &dec).unwrap(), rec.survivors());
    }
}
