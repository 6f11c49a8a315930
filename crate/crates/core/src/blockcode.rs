//! Explicit small block codes with list-decoding-from-insertions/deletions
//! and list-recovery contracts: the pluggable engine behind index strings.
//!
//! Decoding is by the reachability criterion: codeword `c` can be turned
//! into `r` with at most `dMax` deletions and `iMax` insertions exactly when
//! `LCS(c, r) >= max(N - dMax, |r| - iMax)`. The scan over codewords is
//! brute force in contract; an inverted symbol index prefilters candidates
//! (any candidate with a positive threshold must share a symbol with the
//! received block), which keeps decoding output-sensitive without changing
//! the result.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::rng::SeedSplitter;

/// An explicit list of `M` equal-length codewords of length `N` over a
/// plain alphabet of size `q`, with a declared decoding-radius contract and
/// an honest, measured list cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCodebook {
    n: usize,
    q: u32,
    words: Vec<Vec<u16>>,
    d_max: usize,
    i_max: usize,
    list_cap: usize,
    /// symbol -> indices of codewords containing it
    inverted: Vec<Vec<u32>>,
}

impl BlockCodebook {
    pub fn new(
        words: Vec<Vec<u16>>,
        n: usize,
        q: u32,
        d_max: usize,
        i_max: usize,
        list_cap: usize,
    ) -> Result<Self> {
        for (m, w) in words.iter().enumerate() {
            if w.len() != n {
                return Err(Error::LengthMismatch {
                    left: w.len(),
                    right: n,
                });
            }
            for (pos, &c) in w.iter().enumerate() {
                if c as u32 >= q {
                    return Err(Error::CoordOutOfRange {
                        position: pos,
                        component: 0,
                        value: c as u32,
                        size: q,
                    });
                }
            }
            if words[..m].contains(w) {
                return Err(Error::SchemeInfeasible {
                    detail: alloc::format!("duplicate codeword at index {m}"),
                });
            }
        }
        let mut inverted = vec![Vec::new(); q as usize];
        for (m, w) in words.iter().enumerate() {
            for &c in w {
                let bucket = &mut inverted[c as usize];
                if bucket.last() != Some(&(m as u32)) {
                    bucket.push(m as u32);
                }
            }
        }
        Ok(BlockCodebook {
            n,
            q,
            words,
            d_max,
            i_max,
            list_cap,
            inverted,
        })
    }

    pub fn num_codewords(&self) -> usize {
        self.words.len()
    }

    pub fn block_len(&self) -> usize {
        self.n
    }

    pub fn alphabet_size(&self) -> u32 {
        self.q
    }

    pub fn d_max(&self) -> usize {
        self.d_max
    }

    pub fn i_max(&self) -> usize {
        self.i_max
    }

    /// Honest measured list cap: decoding at the contract radius has never
    /// been observed to return more candidates than this.
    pub fn list_cap(&self) -> usize {
        self.list_cap
    }

    pub fn set_list_cap(&mut self, cap: usize) {
        self.list_cap = cap;
    }

    pub fn codeword(&self, m: usize) -> &[u16] {
        &self.words[m]
    }

    pub fn codewords(&self) -> &[Vec<u16>] {
        &self.words
    }

    /// Concatenation of all codewords, truncated to `len`.
    pub fn concat_truncated(&self, len: usize) -> Result<Vec<u16>> {
        if len > self.words.len() * self.n {
            return Err(Error::SchemeInfeasible {
                detail: alloc::format!(
                    "codebook covers {} symbols, {len} requested",
                    self.words.len() * self.n
                ),
            });
        }
        let mut out = Vec::with_capacity(len);
        'outer: for w in &self.words {
            for &c in w {
                if out.len() == len {
                    break 'outer;
                }
                out.push(c);
            }
        }
        Ok(out)
    }
}

fn lcs_len(a: &[u16], b: &[u16]) -> usize {
    let (la, lb) = (a.len(), b.len());
    if la == 0 || lb == 0 {
        return 0;
    }
    let mut prev = vec![0u16; lb + 1];
    let mut cur = vec![0u16; lb + 1];
    for i in 1..=la {
        for j in 1..=lb {
            cur[j] = if a[i - 1] == b[j - 1] {
                prev[j - 1] + 1
            } else {
                prev[j].max(cur[j - 1])
            };
        }
        core::mem::swap(&mut prev, &mut cur);
    }
    prev[lb] as usize
}

/// Insertion/deletion distance between two plain words.
pub fn insdel_distance(a: &[u16], b: &[u16]) -> usize {
    a.len() + b.len() - 2 * lcs_len(a, b)
}

/// All codeword indices that can reach `received` with at most `d_max`
/// deletions followed by at most `i_max` insertions, ascending.
///
/// Inputs longer than `N + i_max` return the empty list.
pub fn list_decode(cb: &BlockCodebook, received: &[u16], d_max: usize, i_max: usize) -> Vec<usize> {
    if received.len() > cb.n + i_max {
        return Vec::new();
    }
    let need = (cb.n.saturating_sub(d_max)).max(received.len().saturating_sub(i_max));
    if need == 0 {
        // every codeword reaches: delete all, insert all
        return (0..cb.words.len()).collect();
    }
    // a positive LCS threshold requires at least one shared symbol
    let mut marks = vec![false; cb.words.len()];
    let mut candidates: Vec<u32> = Vec::new();
    for &c in received {
        if (c as u32) < cb.q {
            for &m in &cb.inverted[c as usize] {
                if !marks[m as usize] {
                    marks[m as usize] = true;
                    candidates.push(m);
                }
            }
        }
    }
    candidates.sort_unstable();
    let mut out = Vec::new();
    for m in candidates {
        if lcs_len(&cb.words[m as usize], received) >= need {
            out.push(m as usize);
        }
    }
    out
}

/// Reference scan over all `M` codewords; the oracle `list_decode` is
/// checked against.
pub fn list_decode_plain(
    cb: &BlockCodebook,
    received: &[u16],
    d_max: usize,
    i_max: usize,
) -> Vec<usize> {
    if received.len() > cb.n + i_max {
        return Vec::new();
    }
    let need = (cb.n.saturating_sub(d_max)).max(received.len().saturating_sub(i_max));
    (0..cb.words.len())
        .filter(|&m| lcs_len(&cb.words[m], received) >= need)
        .collect()
}

/// Greedy random construction: sample candidate words, keep those at
/// insertion/deletion distance at least `min_ed_sep` from everything kept.
/// Deterministic per seed; fails loudly when the target count is
/// unreachable.
pub fn gen_codebook(
    m_target: usize,
    n: usize,
    q: u32,
    min_ed_sep: usize,
    seed: u64,
) -> Result<BlockCodebook> {
    if n == 0 || q == 0 {
        return Err(Error::ParamOutOfRange {
            name: "codebook dimensions",
            value: 0.0,
            expected: "N >= 1 and q >= 1",
        });
    }
    if !min_ed_sep.is_multiple_of(2) || min_ed_sep > 2 * n {
        return Err(Error::ParamOutOfRange {
            name: "min_ed_sep",
            value: min_ed_sep as f64,
            expected: "even, <= 2N",
        });
    }
    let mut rng = SeedSplitter::new(seed).stream("gen-codebook");
    let mut words: Vec<Vec<u16>> = Vec::with_capacity(m_target);
    let cap: u64 = 200 * m_target as u64 + 1000;
    let mut tried: u64 = 0;
    while words.len() < m_target {
        tried += 1;
        if tried > cap {
            return Err(Error::IterationCapExceeded {
                what: "gen_codebook",
                cap,
                hint: "increase q or N, or lower min_ed_sep",
            });
        }
        let w: Vec<u16> = (0..n).map(|_| rng.random_range(0..q) as u16).collect();
        let ok = words
            .iter()
            .all(|kept| kept != &w && insdel_distance(kept, &w) >= min_ed_sep);
        if ok {
            words.push(w);
        }
    }
    // default contract radius: everything; callers size it for their scheme
    BlockCodebook::new(words, n, q, n, n, m_target)
}

/// Provable list cap at radius `(d_max, i_max)`: any returned candidate
/// must share a symbol with the received block (the LCS threshold is
/// positive), so no list can exceed the union of the `N + i_max` largest
/// symbol buckets. Zero or negative thresholds admit every codeword.
pub fn worst_case_list_cap(cb: &BlockCodebook, d_max: usize, i_max: usize) -> usize {
    let m = cb.words.len();
    if d_max >= cb.n {
        return m;
    }
    let mut bucket_sizes: Vec<usize> = cb.inverted.iter().map(|b| b.len()).collect();
    bucket_sizes.sort_unstable_by(|a, b| b.cmp(a));
    let distinct_symbols = cb.n + i_max;
    bucket_sizes
        .iter()
        .take(distinct_symbols)
        .sum::<usize>()
        .min(m)
        .max(1)
}

/// Measures an honest list cap for the codebook at radius `(d_max, i_max)`:
/// the largest list over corrupted-codeword probes and uniform probes.
pub fn measure_list_cap(
    cb: &BlockCodebook,
    d_max: usize,
    i_max: usize,
    probes: usize,
    seed: u64,
) -> usize {
    let mut rng = SeedSplitter::new(seed).stream("measure-list-cap");
    let mut worst = 0usize;
    for p in 0..probes {
        let received: Vec<u16> = if p % 2 == 0 && !cb.words.is_empty() {
            // corrupt a codeword within the radius
            let w = &cb.words[rng.random_range(0..cb.words.len())];
            let dels = rng.random_range(0..=d_max.min(cb.n));
            let inss = rng.random_range(0..=i_max);
            let mut kept: Vec<u16> = w.clone();
            for _ in 0..dels {
                if kept.is_empty() {
                    break;
                }
                let at = rng.random_range(0..kept.len());
                kept.remove(at);
            }
            for _ in 0..inss {
                let at = rng.random_range(0..=kept.len());
                kept.insert(at, rng.random_range(0..cb.q) as u16);
            }
            kept
        } else {
            let len = rng.random_range(0..=cb.n + i_max);
            (0..len).map(|_| rng.random_range(0..cb.q) as u16).collect()
        };
        worst = worst.max(list_decode(cb, &received, d_max, i_max).len());
    }
    worst.max(1)
}

/// Measures an honest output-list cap for list recovery at `(alpha, l)`:
/// probes mimic position-recovery lists (true symbol present on most
/// positions, junk candidates up to size `l`) plus uniform noise lists.
pub fn measure_list_recovery_cap(
    cb: &BlockCodebook,
    alpha: f64,
    l: usize,
    probes: usize,
    seed: u64,
) -> usize {
    let mut rng = SeedSplitter::new(seed).stream("measure-lr-cap");
    let mut worst = 1usize;
    for p in 0..probes {
        let lists: Vec<Vec<u16>> = if p % 2 == 0 && !cb.words.is_empty() {
            let m = rng.random_range(0..cb.words.len());
            let keep = rng.random_range(alpha..1.0f64);
            (0..cb.n)
                .map(|i| {
                    let mut list = Vec::new();
                    if rng.random::<f64>() < keep {
                        list.push(cb.words[m][i]);
                    }
                    let junk = rng.random_range(0..l);
                    for _ in 0..junk {
                        let c = rng.random_range(0..cb.q) as u16;
                        if !list.contains(&c) && list.len() < l {
                            list.push(c);
                        }
                    }
                    list
                })
                .collect()
        } else {
            (0..cb.n)
                .map(|_| {
                    let len = rng.random_range(0..=l);
                    let mut list = Vec::new();
                    for _ in 0..len {
                        let c = rng.random_range(0..cb.q) as u16;
                        if !list.contains(&c) {
                            list.push(c);
                        }
                    }
                    list
                })
                .collect()
        };
        if let Ok(out) = list_recover(cb, &RecoveryLists::new(lists), alpha) {
            worst = worst.max(out.len());
        }
    }
    worst
}

/// Per-position candidate symbol sets for list recovery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecoveryLists {
    lists: Vec<Vec<u16>>,
}

impl RecoveryLists {
    pub fn new(lists: Vec<Vec<u16>>) -> Self {
        RecoveryLists { lists }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, i: usize) -> &[u16] {
        &self.lists[i]
    }

    pub fn max_list_size(&self) -> usize {
        self.lists.iter().map(|l| l.len()).max().unwrap_or(0)
    }
}

/// All codewords agreeing with the candidate lists on at least `alpha * N`
/// positions; brute force over the codebook.
pub fn list_recover(cb: &BlockCodebook, lists: &RecoveryLists, alpha: f64) -> Result<Vec<usize>> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::ParamOutOfRange {
            name: "alpha",
            value: alpha,
            expected: "(0, 1]",
        });
    }
    if lists.len() != cb.n {
        return Err(Error::LengthMismatch {
            left: lists.len(),
            right: cb.n,
        });
    }
    let threshold = alpha * cb.n as f64;
    let mut out = Vec::new();
    for (m, w) in cb.words.iter().enumerate() {
        let agree = w
            .iter()
            .zip(lists.lists.iter())
            .filter(|(c, l)| l.contains(c))
            .count();
        if agree as f64 >= threshold {
            out.push(m);
        }
    }
    Ok(out)
}

/// A block decoder that may use per-call randomness through an explicit
/// seed, so repetitions are independent and replayable. The approximation
/// algorithms call `decode_at` with their per-block radius; `decode` uses
/// the decoder's own contract radius.
pub trait BlockDecoder {
    /// Candidate codeword indices for `received` at the given radius,
    /// ascending.
    fn decode_at(&self, received: &[u16], d_max: usize, i_max: usize, seed: u64) -> Vec<usize>;
    /// Candidate codeword indices at the contract radius.
    fn decode(&self, received: &[u16], seed: u64) -> Vec<usize>;
    /// Worst-case list size of one call.
    fn list_cap(&self) -> usize;
}

/// Deterministic brute-force decoding at the codebook's contract radius.
pub struct ExactBlockDecoder<'a> {
    pub codebook: &'a BlockCodebook,
}

impl BlockDecoder for ExactBlockDecoder<'_> {
    fn decode_at(&self, received: &[u16], d_max: usize, i_max: usize, _seed: u64) -> Vec<usize> {
        list_decode(self.codebook, received, d_max, i_max)
    }

    fn decode(&self, received: &[u16], seed: u64) -> Vec<usize> {
        self.decode_at(received, self.codebook.d_max, self.codebook.i_max, seed)
    }

    fn list_cap(&self) -> usize {
        self.codebook.list_cap
    }
}

/// Wrapper that fails (returns an empty list) with probability `p` per
/// call — the degraded randomized decoder the amplification lemma repairs.
pub struct FailureInjectedDecoder<D> {
    pub inner: D,
    pub failure_probability: f64,
}

impl<D: BlockDecoder> FailureInjectedDecoder<D> {
    fn fails(&self, seed: u64) -> bool {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        rng.random::<f64>() < self.failure_probability
    }
}

impl<D: BlockDecoder> BlockDecoder for FailureInjectedDecoder<D> {
    fn decode_at(&self, received: &[u16], d_max: usize, i_max: usize, seed: u64) -> Vec<usize> {
        if self.fails(seed) {
            Vec::new()
        } else {
            self.inner.decode_at(received, d_max, i_max, seed)
        }
    }

    fn decode(&self, received: &[u16], seed: u64) -> Vec<usize> {
        if self.fails(seed) {
            Vec::new()
        } else {
            self.inner.decode(received, seed)
        }
    }

    fn list_cap(&self) -> usize {
        self.inner.list_cap()
    }
}

/// Runs the inner decoder `k` times on independent seeds and returns the
/// union of the lists. A decoder failing with probability `p` fails here
/// with probability `p^k`; the list grows to at most `k` times the inner
/// cap.
pub struct AmplifiedDecoder<D> {
    inner: D,
    k: usize,
}

/// Repetition wrapper constructor (`k >= 1`).
pub fn amplify_decoder<D: BlockDecoder>(inner: D, k: usize) -> Result<AmplifiedDecoder<D>> {
    if k == 0 {
        return Err(Error::ParamOutOfRange {
            name: "k",
            value: 0.0,
            expected: ">= 1",
        });
    }
    Ok(AmplifiedDecoder { inner, k })
}

impl<D: BlockDecoder> BlockDecoder for AmplifiedDecoder<D> {
    fn decode_at(&self, received: &[u16], d_max: usize, i_max: usize, seed: u64) -> Vec<usize> {
        let split = SeedSplitter::new(seed);
        let mut out: Vec<usize> = Vec::new();
        for rep in 0..self.k {
            let rep_seed = split.stream_indexed("amplify", rep as u64).random::<u64>();
            out.extend(self.inner.decode_at(received, d_max, i_max, rep_seed));
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn decode(&self, received: &[u16], seed: u64) -> Vec<usize> {
        let split = SeedSplitter::new(seed);
        let mut out: Vec<usize> = Vec::new();
        for rep in 0..self.k {
            let rep_seed = split.stream_indexed("amplify", rep as u64).random::<u64>();
            out.extend(self.inner.decode(received, rep_seed));
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn list_cap(&self) -> usize {
        self.k * self.inner.list_cap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_codebook() -> BlockCodebook {
        gen_codebook(8, 6, 64, 8, 3).unwrap()
    }

    #[test]
    fn exact_codeword_decodes_to_itself() {
        let cb = small_codebook();
        for m in 0..cb.num_codewords() {
            let list = list_decode(&cb, cb.codeword(m), cb.d_max(), cb.i_max());
            assert!(list.contains(&m));
        }
    }

    #[test]
    fn foreign_symbols_decode_to_nothing() {
        // words over {0..3}; received over {8..} shares nothing
        let words = vec![
            vec![0u16, 1, 2, 3, 0],
            vec![1, 1, 3, 2, 0],
            vec![2, 0, 1, 3, 3],
        ];
        let cb = BlockCodebook::new(words, 5, 16, 4, 4, 3).unwrap();
        assert!(list_decode(&cb, &[8, 9, 10, 11, 12], 4, 4).is_empty());
    }

    #[test]
    fn prefiltered_decode_equals_plain_scan() {
        let cb = small_codebook();
        let mut rng = SeedSplitter::new(5).stream("probe");
        for _ in 0..500 {
            let len = rng.random_range(0..=10);
            let r: Vec<u16> = (0..len).map(|_| rng.random_range(0..64)).collect();
            for (d, i) in [(5usize, 5usize), (6, 6), (2, 1), (6, 0)] {
                assert_eq!(list_decode(&cb, &r, d, i), list_decode_plain(&cb, &r, d, i));
            }
        }
    }

    #[test]
    fn oversized_input_returns_empty() {
        let cb = small_codebook();
        let long = vec![0u16; cb.block_len() + cb.i_max() + 1];
        assert!(list_decode(&cb, &long, cb.d_max(), cb.i_max()).is_empty());
    }

    #[test]
    fn corruption_within_radius_keeps_transmitted_index() {
        let cb = gen_codebook(16, 12, 256, 12, 11).unwrap();
        let d_max = 6;
        let i_max = 6;
        let mut rng = SeedSplitter::new(7).stream("radius");
        for t in 0..2000 {
            let m = t % cb.num_codewords();
            let mut w: Vec<u16> = cb.codeword(m).to_vec();
            let dels = rng.random_range(0..=d_max);
            for _ in 0..dels {
                if w.is_empty() {
                    break;
                }
                let at = rng.random_range(0..w.len());
                w.remove(at);
            }
            let inss = rng.random_range(0..=i_max);
            for _ in 0..inss {
                let at = rng.random_range(0..=w.len());
                w.insert(at, rng.random_range(0..256));
            }
            let list = list_decode(&cb, &w, d_max, i_max);
            assert!(list.contains(&m), "trial {t}: lost index {m}");
            // soundness: every returned index satisfies the reachability bound
            let need = (cb.block_len() - d_max).max(w.len().saturating_sub(i_max));
            for &c in &list {
                assert!(lcs_len(cb.codeword(c), &w) >= need);
            }
        }
    }

    #[test]
    fn gen_codebook_separation_holds() {
        let cb = gen_codebook(16, 12, 8, 12, 3).unwrap();
        for a in 0..cb.num_codewords() {
            for b in (a + 1)..cb.num_codewords() {
                assert!(insdel_distance(cb.codeword(a), cb.codeword(b)) >= 12);
            }
        }
    }

    #[test]
    fn gen_codebook_single_word() {
        let cb = gen_codebook(1, 4, 4, 0, 1).unwrap();
        assert_eq!(cb.num_codewords(), 1);
    }

    #[test]
    fn gen_codebook_impossible_target_fails() {
        // alphabet 2, length 2, separation 4: at most a couple of words fit
        assert!(matches!(
            gen_codebook(64, 2, 2, 4, 1),
            Err(Error::IterationCapExceeded { .. })
        ));
    }

    #[test]
    fn list_recover_singletons_and_empties() {
        let cb = small_codebook();
        let m = 3;
        let lists = RecoveryLists::new(cb.codeword(m).iter().map(|&c| vec![c]).collect());
        for alpha in [0.1, 0.5, 1.0] {
            assert!(list_recover(&cb, &lists, alpha).unwrap().contains(&m));
        }
        let empty = RecoveryLists::new(vec![Vec::new(); cb.block_len()]);
        assert!(list_recover(&cb, &empty, 0.5).unwrap().is_empty());
        assert!(list_recover(&cb, &empty, 0.0).is_err());
        assert!(list_recover(&cb, &empty, 1.5).is_err());
    }

    #[test]
    fn amplified_union_is_superset_and_k1_identity() {
        let cb = small_codebook();
        let base = ExactBlockDecoder { codebook: &cb };
        let flaky = FailureInjectedDecoder {
            inner: ExactBlockDecoder { codebook: &cb },
            failure_probability: 0.5,
        };
        let amp1 = amplify_decoder(
            FailureInjectedDecoder {
                inner: ExactBlockDecoder { codebook: &cb },
                failure_probability: 0.5,
            },
            1,
        )
        .unwrap();
        let amp4 = amplify_decoder(
            FailureInjectedDecoder {
                inner: ExactBlockDecoder { codebook: &cb },
                failure_probability: 0.5,
            },
            4,
        )
        .unwrap();
        for m in 0..cb.num_codewords() {
            let w = cb.codeword(m);
            for seed in 0..20u64 {
                assert_eq!(amp1.decode(w, seed), flaky.decode(w, seed_for_rep(seed, 0)));
                let union = amp4.decode(w, seed);
                for rep in 0..4u64 {
                    for c in flaky.decode(w, seed_for_rep(seed, rep)) {
                        assert!(union.contains(&c));
                    }
                }
                let full = base.decode(w, seed);
                for c in &union {
                    assert!(full.contains(c));
                }
            }
        }
    }

    fn seed_for_rep(seed: u64, rep: u64) -> u64 {
        SeedSplitter::new(seed)
            .stream_indexed("amplify", rep)
            .random::<u64>()
    }

    #[test]
    fn amplification_drives_failure_down() {
        // p = 1/3, k = 4: over 20k trials the failure rate sits near (1/3)^4
        let cb = small_codebook();
        let amp = amplify_decoder(
            FailureInjectedDecoder {
                inner: ExactBlockDecoder { codebook: &cb },
                failure_probability: 1.0 / 3.0,
            },
            4,
        )
        .unwrap();
        let trials = 20_000u64;
        let mut failures = 0u64;
        for t in 0..trials {
            let m = (t % cb.num_codewords() as u64) as usize;
            if !amp.decode(cb.codeword(m), t).contains(&m) {
                failures += 1;
            }
        }
        let p4 = (1.0f64 / 3.0).powi(4);
        let sigma = (p4 * (1.0 - p4) / trials as f64).sqrt();
        assert!(
            (failures as f64 / trials as f64) <= p4 + 4.0 * sigma,
            "failure rate {} too high",
            failures as f64 / trials as f64
        );
    }

    #[test]
    fn measured_cap_bounds_fresh_probes() {
        let cb = gen_codebook(12, 8, 512, 10, 21).unwrap();
        let cap = measure_list_cap(&cb, 4, 4, 4000, 9);
        let mut rng = SeedSplitter::new(33).stream("capcheck");
        for _ in 0..500 {
            let len = rng.random_range(0..=12);
            let r: Vec<u16> = (0..len).map(|_| rng.random_range(0..512)).collect();
            assert!(list_decode(&cb, &r, 4, 4).len() <= cap);
        }
    }
}
