use alloc::format;
use alloc::vec::Vec;

use crate::alphabet::AlphabetSpec;
use crate::error::{Error, Result};

/// A string over a product alphabet, stored row-major: symbol `i` occupies
/// coordinates `[i*k, (i+1)*k)` where `k` is the component count.
///
/// Symbol equality is full-tuple equality. Projection onto a component set
/// yields a plain string of the same length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedString {
    alphabet: AlphabetSpec,
    data: Vec<u16>,
}

impl IndexedString {
    /// Builds a string from row-major coordinates, validating every
    /// coordinate against its component range.
    pub fn new(alphabet: AlphabetSpec, data: Vec<u16>) -> Result<Self> {
        let k = alphabet.num_components();
        if k == 0 && !data.is_empty() {
            return Err(Error::AlphabetMismatch {
                detail: format!("no components but {} coordinates", data.len()),
            });
        }
        if k > 0 && !data.len().is_multiple_of(k) {
            return Err(Error::AlphabetMismatch {
                detail: format!("{} coordinates not divisible by {k} components", data.len()),
            });
        }
        for (pos, row) in data.chunks_exact(k.max(1)).enumerate() {
            for (c, &v) in row.iter().enumerate() {
                let size = alphabet.component_size(c);
                if (v as u32) >= size {
                    return Err(Error::CoordOutOfRange {
                        position: pos,
                        component: c,
                        value: v as u32,
                        size,
                    });
                }
            }
        }
        Ok(IndexedString { alphabet, data })
    }

    /// Empty string over the given alphabet.
    pub fn empty(alphabet: AlphabetSpec) -> Self {
        IndexedString {
            alphabet,
            data: Vec::new(),
        }
    }

    /// Single-component string from plain symbols.
    pub fn plain(symbols: &[u16], alphabet_size: u32) -> Result<Self> {
        Self::new(AlphabetSpec::single(alphabet_size)?, symbols.to_vec())
    }

    pub fn alphabet(&self) -> &AlphabetSpec {
        &self.alphabet
    }

    pub fn num_components(&self) -> usize {
        self.alphabet.num_components()
    }

    pub fn len(&self) -> usize {
        let k = self.alphabet.num_components();
        self.data.len().checked_div(k).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// Symbol `i` as a coordinate tuple.
    pub fn symbol(&self, i: usize) -> &[u16] {
        let k = self.alphabet.num_components();
        &self.data[i * k..(i + 1) * k]
    }

    pub fn symbols(&self) -> impl Iterator<Item = &[u16]> {
        self.data
            .chunks_exact(self.alphabet.num_components().max(1))
            .take(self.len())
    }

    /// Raw row-major coordinates.
    pub fn raw(&self) -> &[u16] {
        &self.data
    }

    /// Coordinate of component `c` at position `i`.
    pub fn coord(&self, i: usize, c: usize) -> u16 {
        self.data[i * self.alphabet.num_components() + c]
    }

    /// Coordinate-wise concatenation: `result[i] = (self[i] ..., other[i] ...)`.
    ///
    /// Rejected when lengths differ.
    pub fn index_concat(&self, other: &IndexedString) -> Result<IndexedString> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        let alphabet = self.alphabet.product(&other.alphabet)?;
        let ka = self.alphabet.num_components();
        let kb = other.alphabet.num_components();
        let mut data = Vec::with_capacity(self.len() * (ka + kb));
        for i in 0..self.len() {
            data.extend_from_slice(&self.data[i * ka..(i + 1) * ka]);
            data.extend_from_slice(&other.data[i * kb..(i + 1) * kb]);
        }
        Ok(IndexedString { alphabet, data })
    }

    /// Projection onto one component.
    pub fn project(&self, component: usize) -> Result<IndexedString> {
        self.project_many(&[component])
    }

    /// Projection onto a list of components, in the given order.
    pub fn project_many(&self, components: &[usize]) -> Result<IndexedString> {
        let alphabet = self.alphabet.select(components)?;
        let k = self.alphabet.num_components();
        let mut data = Vec::with_capacity(self.len() * components.len());
        for i in 0..self.len() {
            for &c in components {
                data.push(self.data[i * k + c]);
            }
        }
        Ok(IndexedString { alphabet, data })
    }

    /// Component `c` as plain coordinates (no alphabet wrapper).
    pub fn component_coords(&self, c: usize) -> Vec<u16> {
        let k = self.alphabet.num_components();
        self.data.iter().skip(c).step_by(k).copied().collect()
    }

    /// Contiguous slice `[from, to)` as a new string.
    pub fn slice(&self, from: usize, to: usize) -> IndexedString {
        let k = self.alphabet.num_components();
        IndexedString {
            alphabet: self.alphabet.clone(),
            data: self.data[from * k..to * k].to_vec(),
        }
    }

    /// String made of the symbols at `positions` (ascending or not), in order.
    pub fn gather(&self, positions: &[usize]) -> IndexedString {
        let k = self.alphabet.num_components();
        let mut data = Vec::with_capacity(positions.len() * k);
        for &p in positions {
            data.extend_from_slice(&self.data[p * k..(p + 1) * k]);
        }
        IndexedString {
            alphabet: self.alphabet.clone(),
            data,
        }
    }

    /// Builds from a list of symbol tuples.
    pub fn from_symbols(alphabet: AlphabetSpec, symbols: &[&[u16]]) -> Result<Self> {
        let k = alphabet.num_components();
        let mut data = Vec::with_capacity(symbols.len() * k);
        for (i, s) in symbols.iter().enumerate() {
            if s.len() != k {
                return Err(Error::AlphabetMismatch {
                    detail: format!("symbol {i} has {} coordinates, expected {k}", s.len()),
                });
            }
            data.extend_from_slice(s);
        }
        Self::new(alphabet, data)
    }
}

/// Attach an index string to a payload, symbol by symbol.
///
/// Free-function spelling of [`IndexedString::index_concat`].
pub fn index_concat(payload: &IndexedString, index: &IndexedString) -> Result<IndexedString> {
    payload.index_concat(index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeedSplitter;
    use rand::Rng;

    fn plain(sym: &[u16], q: u32) -> IndexedString {
        IndexedString::plain(sym, q).unwrap()
    }

    #[test]
    fn index_concat_pairs_coordinates() {
        // "ab" x "xy" -> [(a,x),(b,y)]
        let p = plain(&[0, 1], 2);
        let i = plain(&[7, 8], 16);
        let s = index_concat(&p, &i).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.symbol(0), &[0, 7]);
        assert_eq!(s.symbol(1), &[1, 8]);
    }

    #[test]
    fn index_concat_empty() {
        let p = plain(&[], 2);
        let i = plain(&[], 2);
        let s = index_concat(&p, &i).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn index_concat_rejects_length_mismatch() {
        let p = plain(&[0, 1, 0], 2);
        let i = plain(&[7], 16);
        assert_eq!(
            index_concat(&p, &i),
            Err(Error::LengthMismatch { left: 3, right: 1 })
        );
    }

    #[test]
    fn projection_recovers_payload() {
        // round-trip identity on 200 random payload/index pairs
        let split = SeedSplitter::new(11);
        for t in 0..200u64 {
            let mut rng = split.stream_indexed("proj", t);
            let n = rng.random_range(0..40);
            let p: Vec<u16> = (0..n).map(|_| rng.random_range(0..16)).collect();
            let i: Vec<u16> = (0..n).map(|_| rng.random_range(0..64)).collect();
            let ps = plain(&p, 16);
            let is = plain(&i, 64);
            let s = index_concat(&ps, &is).unwrap();
            assert_eq!(s.project(0).unwrap(), ps);
            assert_eq!(s.project(1).unwrap(), is);
        }
    }

    #[test]
    fn coordinate_validation() {
        let a = AlphabetSpec::single(4).unwrap();
        assert!(IndexedString::new(a, vec![0, 3, 4]).is_err());
    }
}
