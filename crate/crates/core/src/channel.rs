//! Insertion/deletion channel with full ground-truth alignments, so
//! misdecoding counts and completeness claims can be checked exactly.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::num::floor_usize;
use crate::rng::SeedSplitter;
use crate::strings::IndexedString;

/// Corruption pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorruptionMode {
    /// Independent random positions; inserted symbols uniform over the
    /// alphabet.
    Uniform,
    /// One contiguous deletion run and one contiguous insertion run; inserted
    /// symbols copy their neighborhood. The pattern most stressful to block
    /// decoding.
    Burst,
    /// Random deletions; inserted symbols copy survivors from nearby
    /// positions, the pattern most stressful to synchronization.
    BlockShuffleAdjacent,
}

impl CorruptionMode {
    pub fn name(&self) -> &'static str {
        match self {
            CorruptionMode::Uniform => "uniform",
            CorruptionMode::Burst => "burst",
            CorruptionMode::BlockShuffleAdjacent => "block-shuffle-adjacent",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "uniform" => Some(CorruptionMode::Uniform),
            "burst" => Some(CorruptionMode::Burst),
            "block-shuffle-adjacent" => Some(CorruptionMode::BlockShuffleAdjacent),
            _ => None,
        }
    }
}

/// Ground truth for one channel application.
///
/// `survivor_map[k] = (sent position, received position)` for the k-th
/// surviving symbol, strictly increasing in both coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorruptionRecord {
    pub sent_len: usize,
    pub received_len: usize,
    pub survivor_map: Vec<(usize, usize)>,
    pub inserted_positions: Vec<usize>,
    pub deletions: usize,
    pub insertions: usize,
}

impl CorruptionRecord {
    /// Identity record (no corruption).
    pub fn identity(n: usize) -> Self {
        CorruptionRecord {
            sent_len: n,
            received_len: n,
            survivor_map: (0..n).map(|i| (i, i)).collect(),
            inserted_positions: Vec::new(),
            deletions: 0,
            insertions: 0,
        }
    }

    /// Number of sent symbols that survived the channel.
    pub fn survivors(&self) -> usize {
        self.survivor_map.len()
    }
}

/// Applies exactly `floor(delta * n)` deletions and `floor(gamma * n)`
/// insertions to `s`, deterministic per seed.
pub fn corrupt(
    s: &IndexedString,
    delta: f64,
    gamma: f64,
    mode: CorruptionMode,
    seed: u64,
) -> Result<(IndexedString, CorruptionRecord)> {
    if !(0.0..1.0).contains(&delta) {
        return Err(Error::ParamOutOfRange {
            name: "delta",
            value: delta,
            expected: "[0, 1)",
        });
    }
    if gamma < 0.0 {
        return Err(Error::ParamOutOfRange {
            name: "gamma",
            value: gamma,
            expected: "[0, inf)",
        });
    }
    let n = s.len();
    let d = floor_usize(delta * n as f64);
    let i = floor_usize(gamma * n as f64);
    corrupt_counts(s, d, i, mode, seed)
}

/// Same as [`corrupt`] but with explicit operation counts.
pub fn corrupt_counts(
    s: &IndexedString,
    deletions: usize,
    insertions: usize,
    mode: CorruptionMode,
    seed: u64,
) -> Result<(IndexedString, CorruptionRecord)> {
    let n = s.len();
    if deletions > n {
        return Err(Error::ParamOutOfRange {
            name: "deletions",
            value: deletions as f64,
            expected: "0..=sent length",
        });
    }
    let mut rng = SeedSplitter::new(seed).stream("channel");

    let delete_set = pick_deletions(&mut rng, n, deletions, mode);
    let mut deleted = vec![false; n];
    for &p in &delete_set {
        deleted[p] = true;
    }
    let survivors: Vec<usize> = (0..n).filter(|&p| !deleted[p]).collect();

    let out_len = survivors.len() + insertions;
    let insert_positions = pick_insertions(&mut rng, out_len, insertions, mode);
    let mut is_insert = vec![false; out_len];
    for &p in &insert_positions {
        is_insert[p] = true;
    }

    let k = s.num_components();
    let mut data: Vec<u16> = Vec::with_capacity(out_len * k);
    let mut survivor_map = Vec::with_capacity(survivors.len());
    let mut next_survivor = 0usize;
    for (out_pos, &ins) in is_insert.iter().enumerate() {
        if ins {
            let sym = inserted_symbol(&mut rng, s, &survivors, next_survivor, mode);
            data.extend_from_slice(&sym);
        } else {
            let src = survivors[next_survivor];
            survivor_map.push((src, out_pos));
            data.extend_from_slice(s.symbol(src));
            next_survivor += 1;
        }
    }
    let received = IndexedString::new(s.alphabet().clone(), data)?;
    let record = CorruptionRecord {
        sent_len: n,
        received_len: out_len,
        survivor_map,
        inserted_positions: insert_positions,
        deletions,
        insertions,
    };
    debug_assert!(verify_record(s, &received, &record));
    Ok((received, record))
}

fn pick_deletions(rng: &mut ChaCha12Rng, n: usize, d: usize, mode: CorruptionMode) -> Vec<usize> {
    if d == 0 {
        return Vec::new();
    }
    match mode {
        CorruptionMode::Burst => {
            let start = rng.random_range(0..=n - d);
            (start..start + d).collect()
        }
        _ => {
            let mut all: Vec<usize> = (0..n).collect();
            all.shuffle(rng);
            let mut picked: Vec<usize> = all[..d].to_vec();
            picked.sort_unstable();
            picked
        }
    }
}

fn pick_insertions(
    rng: &mut ChaCha12Rng,
    out_len: usize,
    i: usize,
    mode: CorruptionMode,
) -> Vec<usize> {
    if i == 0 {
        return Vec::new();
    }
    match mode {
        CorruptionMode::Burst => {
            let start = rng.random_range(0..=out_len - i);
            (start..start + i).collect()
        }
        _ => {
            let mut all: Vec<usize> = (0..out_len).collect();
            all.shuffle(rng);
            let mut picked: Vec<usize> = all[..i].to_vec();
            picked.sort_unstable();
            picked
        }
    }
}

fn inserted_symbol(
    rng: &mut ChaCha12Rng,
    s: &IndexedString,
    survivors: &[usize],
    next_survivor: usize,
    mode: CorruptionMode,
) -> Vec<u16> {
    match mode {
        CorruptionMode::Uniform => (0..s.num_components())
            .map(|c| rng.random_range(0..s.alphabet().component_size(c)) as u16)
            .collect(),
        CorruptionMode::Burst | CorruptionMode::BlockShuffleAdjacent => {
            // copy a sent symbol from near the current channel position
            if s.is_empty() {
                return vec![0; s.num_components()];
            }
            let anchor = if survivors.is_empty() {
                rng.random_range(0..s.len())
            } else {
                survivors[next_survivor.min(survivors.len() - 1)]
            };
            let span = 16i64;
            let offset = rng.random_range(-span..=span);
            let src = (anchor as i64 + offset).clamp(0, s.len() as i64 - 1) as usize;
            s.symbol(src).to_vec()
        }
    }
}

/// Checks internal consistency of a record and that `received` is
/// reconstructible from `s` through it. Returns false at the first
/// inconsistency.
pub fn verify_record(
    s: &IndexedString,
    received: &IndexedString,
    record: &CorruptionRecord,
) -> bool {
    if record.sent_len != s.len() || record.received_len != received.len() {
        return false;
    }
    if record.deletions + record.survivor_map.len() != record.sent_len {
        return false;
    }
    if record.insertions != record.inserted_positions.len() {
        return false;
    }
    if record.survivor_map.len() + record.insertions != record.received_len {
        return false;
    }
    let mut prev: Option<(usize, usize)> = None;
    for &(src, dst) in &record.survivor_map {
        if src >= record.sent_len || dst >= record.received_len {
            return false;
        }
        if let Some((ps, pd)) = prev {
            if src <= ps || dst <= pd {
                return false;
            }
        }
        if s.symbol(src) != received.symbol(dst) {
            return false;
        }
        prev = Some((src, dst));
    }
    // inserted positions and survivor targets must partition the received string
    let mut covered = vec![false; record.received_len];
    for &p in &record.inserted_positions {
        if p >= record.received_len || covered[p] {
            return false;
        }
        covered[p] = true;
    }
    for &(_, dst) in &record.survivor_map {
        if covered[dst] {
            return false;
        }
        covered[dst] = true;
    }
    covered.iter().all(|&c| c)
}

/// Convenience: ground truth as a map from sent position to received
/// position (`None` = deleted).
pub fn survivor_positions(record: &CorruptionRecord) -> Vec<Option<usize>> {
    let mut map = vec![None; record.sent_len];
    for &(src, dst) in &record.survivor_map {
        map[src] = Some(dst);
    }
    map
}

impl core::fmt::Display for CorruptionRecord {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "record(sent={}, received={}, d={}, i={})",
            self.sent_len, self.received_len, self.deletions, self.insertions
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::editdist::edit_distance;
    use crate::rng::SeedSplitter;
    use rand::Rng;

    fn random_string(seed: u64, n: usize, q: u16) -> IndexedString {
        let mut rng = SeedSplitter::new(seed).stream("s");
        let data: Vec<u16> = (0..n).map(|_| rng.random_range(0..q)).collect();
        IndexedString::plain(&data, q as u32).unwrap()
    }

    #[test]
    fn zero_budget_is_identity() {
        let s = random_string(1, 40, 8);
        let (r, rec) = corrupt(&s, 0.0, 0.0, CorruptionMode::Uniform, 7).unwrap();
        assert_eq!(r, s);
        assert_eq!(rec, CorruptionRecord::identity(40));
    }

    #[test]
    fn delta_one_rejected() {
        let s = random_string(2, 10, 8);
        assert!(corrupt(&s, 1.0, 0.0, CorruptionMode::Uniform, 7).is_err());
    }

    #[test]
    fn distance_bounded_by_budget() {
        let split = SeedSplitter::new(3);
        for t in 0..200u64 {
            let mut rng = split.stream_indexed("budget", t);
            let n = rng.random_range(1..=80);
            let s = random_string(t + 1000, n, 6);
            let delta = rng.random_range(0.0..0.5);
            let gamma = rng.random_range(0.0..0.5);
            let mode = match t % 3 {
                0 => CorruptionMode::Uniform,
                1 => CorruptionMode::Burst,
                _ => CorruptionMode::BlockShuffleAdjacent,
            };
            let (r, rec) = corrupt(&s, delta, gamma, mode, t).unwrap();
            assert!(verify_record(&s, &r, &rec));
            let budget = floor_usize(delta * n as f64) + floor_usize(gamma * n as f64);
            assert!(edit_distance(&s, &r).unwrap() <= budget);
        }
    }

    #[test]
    fn records_are_deterministic_per_seed() {
        let s = random_string(4, 60, 8);
        let (r1, rec1) = corrupt(&s, 0.2, 0.1, CorruptionMode::Burst, 99).unwrap();
        let (r2, rec2) = corrupt(&s, 0.2, 0.1, CorruptionMode::Burst, 99).unwrap();
        assert_eq!(r1, r2);
        assert_eq!(rec1, rec2);
    }

    #[test]
    fn tampered_record_fails_verification() {
        let s = random_string(5, 30, 8);
        let (r, mut rec) = corrupt(&s, 0.2, 0.2, CorruptionMode::Uniform, 1).unwrap();
        assert!(verify_record(&s, &r, &rec));
        if rec.survivor_map.len() >= 2 {
            rec.survivor_map.swap(0, 1);
            assert!(!verify_record(&s, &r, &rec));
        }
    }
}
