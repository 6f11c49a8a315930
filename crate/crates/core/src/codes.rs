//! End-to-end insertion-deletion codes built from the position-recovery
//! machinery: a uniquely decodable code (errors-and-erasures Reed-Solomon
//! indexed by a synchronization string and an index string) and a
//! conversion from list-recoverable block codes to list-decodable
//! insertion-deletion codes.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::alphabet::AlphabetSpec;
use crate::blockcode::{list_recover, BlockCodebook, RecoveryLists};
use crate::editdist::edit_distance;
use crate::error::{Error, Result};
use crate::indexing::{build_indexing_scheme, CodebookParams, IndexingScheme, SchemeEngine};
use crate::num::{ceil_usize, floor_usize};
use crate::rng::SeedSplitter;
use crate::rs::RsCode;
use crate::strings::IndexedString;
use crate::sync::{gen_sync, sync_decode_global, PositionDecoding, SyncString};

/// Component layout of every composite codeword: payload, then
/// synchronization symbol, then the index component(s).
pub const PAYLOAD_COMPONENT: usize = 0;
pub const SYNC_COMPONENT: usize = 1;

/// Uniquely decodable insertion-deletion code: an `(n, k)` Reed-Solomon
/// code whose codewords are indexed, symbol by symbol, with a
/// synchronization string and an index string.
///
/// Parameter ledger: `eps_i = eps/18`, `eps_s = eps^2/288`,
/// `K = 24/eps`, ECC half-error budget `>= n(delta + eps/2)`.
#[derive(Debug, Clone)]
pub struct UniqueInsdelCode {
    pub ecc: RsCode,
    pub sync: SyncString,
    pub scheme: IndexingScheme,
    pub k_rounds: usize,
    pub delta: f64,
    pub epsilon: f64,
    /// sync x index projection of every codeword (message-independent)
    position_carrier: IndexedString,
}

impl UniqueInsdelCode {
    pub fn new(
        n: usize,
        delta: f64,
        epsilon: f64,
        scheme_block_len: usize,
        scheme_alphabet: u32,
        seed: u64,
    ) -> Result<Self> {
        if !(delta > 0.0 && delta < 1.0) {
            return Err(Error::ParamOutOfRange {
                name: "delta",
                value: delta,
                expected: "(0, 1)",
            });
        }
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::ParamOutOfRange {
                name: "epsilon",
                value: epsilon,
                expected: "(0, 1)",
            });
        }
        let budget = ceil_usize(n as f64 * (delta + epsilon / 2.0));
        if budget + 1 >= n {
            return Err(Error::SchemeInfeasible {
                detail: format!("half-error budget {budget} leaves no message symbols at n={n}"),
            });
        }
        let ecc = RsCode::new(n, n - budget)?;
        let eps_i = epsilon / 18.0;
        let eps_s = epsilon * epsilon / 288.0;
        let k_rounds = ceil_usize(24.0 / epsilon);
        let split = SeedSplitter::new(seed);
        let sync = gen_sync(n, eps_s, split.base().wrapping_add(1))?;
        let scheme = build_indexing_scheme(
            n,
            eps_i / 11.0,
            &CodebookParams::standard(scheme_block_len, scheme_alphabet),
            split.base().wrapping_add(2),
        )?;
        let position_carrier = sync.string().index_concat(&scheme.index_string()?)?;
        Ok(UniqueInsdelCode {
            ecc,
            sync,
            scheme,
            k_rounds,
            delta,
            epsilon,
            position_carrier,
        })
    }

    /// Rebuild from stored parts (deserialization); recomputes the carrier.
    pub fn from_parts(
        ecc: RsCode,
        sync: SyncString,
        scheme: IndexingScheme,
        k_rounds: usize,
        delta: f64,
        epsilon: f64,
    ) -> Result<Self> {
        let position_carrier = sync.string().index_concat(&scheme.index_string()?)?;
        Ok(UniqueInsdelCode {
            ecc,
            sync,
            scheme,
            k_rounds,
            delta,
            epsilon,
            position_carrier,
        })
    }

    pub fn n(&self) -> usize {
        self.ecc.n()
    }

    pub fn message_len(&self) -> usize {
        self.ecc.k()
    }

    /// Alphabet of the composite codewords.
    pub fn composite_alphabet(&self) -> Result<AlphabetSpec> {
        let payload = AlphabetSpec::single(256)?;
        payload.product(self.position_carrier.alphabet())
    }

    /// The sync x index string every codeword carries.
    pub fn position_carrier(&self) -> &IndexedString {
        &self.position_carrier
    }

    /// Channel budget the decoder is guaranteed against.
    pub fn op_budget(&self) -> usize {
        floor_usize(self.delta * self.n() as f64)
    }
}

/// ECC-encode and attach the synchronization and index components.
pub fn encode_unique(code: &UniqueInsdelCode, message: &[u8]) -> Result<IndexedString> {
    let payload = code.ecc.encode(message)?;
    let coords: Vec<u16> = payload.iter().map(|&b| b as u16).collect();
    let payload_str = IndexedString::plain(&coords, 256)?;
    payload_str.index_concat(&code.position_carrier)
}

/// Outcome of a unique decode, with the intermediate accounting exposed for
/// instrumentation.
#[derive(Debug, Clone)]
pub struct UniqueDecodeReport {
    pub message: Vec<u8>,
    pub erasures: usize,
    pub errors_observed: usize,
    pub decoding: PositionDecoding,
}

/// Position-recover, fill a word with first-round-wins symbol guesses,
/// run errors-and-erasures decoding, then confirm the promise
/// `ED(E(m), received) <= floor(delta n)`.
///
/// Inputs beyond the promise produce an explicit [`Error::DecodeFailure`],
/// never a silently wrong message.
pub fn decode_unique(code: &UniqueInsdelCode, received: &IndexedString) -> Result<Vec<u8>> {
    decode_unique_report(code, received).map(|r| r.message)
}

pub fn decode_unique_report(
    code: &UniqueInsdelCode,
    received: &IndexedString,
) -> Result<UniqueDecodeReport> {
    let expected = code.composite_alphabet()?;
    if received.alphabet() != &expected {
        return Err(Error::AlphabetMismatch {
            detail: format!(
                "received components {:?}, code uses {:?}",
                received.alphabet().components(),
                expected.components()
            ),
        });
    }
    let n = code.n();
    let carrier_components: Vec<usize> = (1..received.num_components()).collect();
    let recv_proj = received.project_many(&carrier_components)?;
    let engine = SchemeEngine {
        scheme: &code.scheme,
    };
    let decoding = sync_decode_global(&code.position_carrier, &recv_proj, code.k_rounds, &engine)?;

    // first round wins; later claims on an occupied position are dropped
    let mut claimed_round = vec![u16::MAX; n];
    let mut word: Vec<Option<u8>> = vec![None; n];
    for q in 0..received.len() {
        let p = decoding.decoded()[q];
        if p == 0 {
            continue;
        }
        let p = (p - 1) as usize;
        let r = decoding.round(q);
        if r < claimed_round[p] {
            claimed_round[p] = r;
            word[p] = Some(received.coord(q, PAYLOAD_COMPONENT) as u8);
        }
    }
    let erasures = word.iter().filter(|w| w.is_none()).count();
    let message = code.ecc.decode(&word)?;

    let reencoded = encode_unique(code, &message)?;
    let errors_observed = {
        let codeword = code.ecc.encode(&message)?;
        word.iter()
            .zip(codeword.iter())
            .filter(|(w, c)| matches!(w, Some(v) if v != *c))
            .count()
    };
    let dist = edit_distance(&reencoded, received)?;
    if dist > code.op_budget() {
        return Err(Error::DecodeFailure {
            detail: format!(
                "closest codeword sits at distance {dist}, budget is {}",
                code.op_budget()
            ),
        });
    }
    Ok(UniqueDecodeReport {
        message,
        erasures,
        errors_observed,
        decoding,
    })
}

/// List-decodable insertion-deletion code obtained by indexing the
/// codewords of an `(alpha, l, L)`-list-recoverable block code.
///
/// Parameter ledger: `eps_s = eps^2 / (9(1+gamma))`,
/// `eps_i = eps / (3(1+gamma/2))`, `K = 3(1+gamma)/eps <= l`; decodes
/// whenever deletions `< (1 - alpha - eps) n` and insertions `<= gamma n`.
#[derive(Debug, Clone)]
pub struct ListInsdelCode {
    pub lr: BlockCodebook,
    pub alpha: f64,
    pub list_input_size: usize,
    pub sync: SyncString,
    pub scheme: IndexingScheme,
    pub k_rounds: usize,
    pub epsilon: f64,
    pub gamma: f64,
    position_carrier: IndexedString,
}

/// The conversion's parameter arithmetic, exposed for inspection and tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConversionLedger {
    pub eps_s: f64,
    pub eps_i: f64,
    pub k_rounds: usize,
}

pub fn conversion_ledger(epsilon: f64, gamma: f64) -> ConversionLedger {
    ConversionLedger {
        eps_s: epsilon * epsilon / (9.0 * (1.0 + gamma)),
        eps_i: epsilon / (3.0 * (1.0 + gamma / 2.0)),
        k_rounds: ceil_usize(3.0 * (1.0 + gamma) / epsilon),
    }
}

/// Assembles the composed code with the exact ledger settings.
///
/// Rejected unless `gamma <= l * epsilon / 3 - 1` (shown in the error).
#[allow(clippy::too_many_arguments)]
pub fn convert_lr_to_insdel(
    lr: BlockCodebook,
    alpha: f64,
    list_input_size: usize,
    epsilon: f64,
    gamma: f64,
    scheme_block_len: usize,
    scheme_alphabet: u32,
    seed: u64,
) -> Result<ListInsdelCode> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::ParamOutOfRange {
            name: "epsilon",
            value: epsilon,
            expected: "(0, 1)",
        });
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::ParamOutOfRange {
            name: "alpha",
            value: alpha,
            expected: "(0, 1)",
        });
    }
    let gamma_cap = list_input_size as f64 * epsilon / 3.0 - 1.0;
    if gamma < 0.0 || gamma > gamma_cap {
        return Err(Error::ParamOutOfRange {
            name: "gamma",
            value: gamma,
            expected: "0 <= gamma <= l*eps/3 - 1",
        });
    }
    let ledger = conversion_ledger(epsilon, gamma);
    let n = lr.block_len();
    let split = SeedSplitter::new(seed);
    let sync = gen_sync(n, ledger.eps_s, split.base().wrapping_add(1))?;
    let scheme = build_indexing_scheme(
        n,
        ledger.eps_i / 11.0,
        &CodebookParams::standard(scheme_block_len, scheme_alphabet),
        split.base().wrapping_add(2),
    )?;
    let position_carrier = sync.string().index_concat(&scheme.index_string()?)?;
    Ok(ListInsdelCode {
        lr,
        alpha,
        list_input_size,
        sync,
        scheme,
        k_rounds: ledger.k_rounds,
        epsilon,
        gamma,
        position_carrier,
    })
}

impl ListInsdelCode {
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        lr: BlockCodebook,
        alpha: f64,
        list_input_size: usize,
        sync: SyncString,
        scheme: IndexingScheme,
        k_rounds: usize,
        epsilon: f64,
        gamma: f64,
    ) -> Result<Self> {
        let position_carrier = sync.string().index_concat(&scheme.index_string()?)?;
        Ok(ListInsdelCode {
            lr,
            alpha,
            list_input_size,
            sync,
            scheme,
            k_rounds,
            epsilon,
            gamma,
            position_carrier,
        })
    }

    pub fn n(&self) -> usize {
        self.lr.block_len()
    }

    pub fn num_messages(&self) -> usize {
        self.lr.num_codewords()
    }

    pub fn composite_alphabet(&self) -> Result<AlphabetSpec> {
        let payload = AlphabetSpec::single(self.lr.alphabet_size())?;
        payload.product(self.position_carrier.alphabet())
    }

    pub fn position_carrier(&self) -> &IndexedString {
        &self.position_carrier
    }

    /// Guarantee region: deletions strictly below this keep the transmitted
    /// message in the output list.
    pub fn deletion_cap(&self) -> f64 {
        1.0 - self.alpha - self.epsilon
    }
}

/// Index the `m`-th codeword of the list-recoverable code.
pub fn encode_list(code: &ListInsdelCode, message: usize) -> Result<IndexedString> {
    if message >= code.num_messages() {
        return Err(Error::MessageLength {
            got: message,
            want: code.num_messages(),
        });
    }
    let payload = IndexedString::plain(code.lr.codeword(message), code.lr.alphabet_size())?;
    payload.index_concat(&code.position_carrier)
}

/// Output of one list decode, with instrumentation.
#[derive(Debug, Clone)]
pub struct ListDecodeOutcome {
    pub messages: Vec<usize>,
    /// largest per-position candidate set fed into list recovery
    pub max_candidates: usize,
    pub decoding: PositionDecoding,
}

/// Position-recover with `K = 3(1+gamma)/eps` rounds, collect up to `K <= l`
/// candidate payload symbols per position, and list-recover at threshold
/// `alpha`. An empty list is a valid output.
pub fn list_decode_insdel(
    code: &ListInsdelCode,
    received: &IndexedString,
) -> Result<ListDecodeOutcome> {
    let expected = code.composite_alphabet()?;
    if received.alphabet() != &expected {
        return Err(Error::AlphabetMismatch {
            detail: format!(
                "received components {:?}, code uses {:?}",
                received.alphabet().components(),
                expected.components()
            ),
        });
    }
    let n = code.n();
    let carrier_components: Vec<usize> = (1..received.num_components()).collect();
    let recv_proj = received.project_many(&carrier_components)?;
    let engine = SchemeEngine {
        scheme: &code.scheme,
    };
    let decoding = sync_decode_global(&code.position_carrier, &recv_proj, code.k_rounds, &engine)?;

    let mut lists: Vec<Vec<u16>> = vec![Vec::new(); n];
    for q in 0..received.len() {
        let p = decoding.decoded()[q];
        if p == 0 {
            continue;
        }
        let sym = received.coord(q, PAYLOAD_COMPONENT);
        let list = &mut lists[(p - 1) as usize];
        if !list.contains(&sym) {
            list.push(sym);
        }
    }
    let max_candidates = lists.iter().map(|l| l.len()).max().unwrap_or(0);
    debug_assert!(max_candidates <= code.k_rounds);
    let recovery = RecoveryLists::new(lists);
    let messages = list_recover(&code.lr, &recovery, code.alpha)?;
    Ok(ListDecodeOutcome {
        messages,
        max_candidates,
        decoding,
    })
}
