use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Wire format stores one `u16` per coordinate, so a component holds at most
/// 65536 values.
pub const MAX_COMPONENT: u32 = 65536;

/// A product alphabet: a symbol is a tuple with one coordinate per component.
///
/// Payload and index layers of a string live in separate components; the
/// total alphabet size is the product of the component sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphabetSpec {
    components: Vec<u32>,
}

impl AlphabetSpec {
    pub fn new(components: Vec<u32>) -> Result<Self> {
        for (i, &size) in components.iter().enumerate() {
            if size == 0 || size > MAX_COMPONENT {
                return Err(Error::BadComponentSize { component: i, size });
            }
        }
        Ok(AlphabetSpec { components })
    }

    /// Single-component alphabet of the given size.
    pub fn single(size: u32) -> Result<Self> {
        Self::new(alloc::vec![size])
    }

    pub fn components(&self) -> &[u32] {
        &self.components
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn component_size(&self, c: usize) -> u32 {
        self.components[c]
    }

    /// Product of component sizes, saturating (only used for reporting).
    pub fn total_size(&self) -> u128 {
        self.components
            .iter()
            .fold(1u128, |a, &s| a.saturating_mul(s as u128))
    }

    /// Alphabet for the coordinate-wise concatenation of two alphabets.
    pub fn product(&self, other: &AlphabetSpec) -> Result<AlphabetSpec> {
        let mut comps = self.components.clone();
        comps.extend_from_slice(&other.components);
        AlphabetSpec::new(comps)
    }

    /// Alphabet obtained by keeping the listed components, in order.
    pub fn select(&self, keep: &[usize]) -> Result<AlphabetSpec> {
        let mut comps = Vec::with_capacity(keep.len());
        for &c in keep {
            if c >= self.components.len() {
                return Err(Error::AlphabetMismatch {
                    detail: format!(
                        "component {c} does not exist ({} components)",
                        self.components.len()
                    ),
                });
            }
            comps.push(self.components[c]);
        }
        AlphabetSpec::new(comps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_and_oversized_components() {
        assert!(AlphabetSpec::new(vec![4, 0]).is_err());
        assert!(AlphabetSpec::new(vec![MAX_COMPONENT + 1]).is_err());
        assert!(AlphabetSpec::new(vec![MAX_COMPONENT]).is_ok());
    }

    #[test]
    fn product_concatenates_components() {
        let a = AlphabetSpec::single(4).unwrap();
        let b = AlphabetSpec::new(vec![8, 2]).unwrap();
        let p = a.product(&b).unwrap();
        assert_eq!(p.components(), &[4, 8, 2]);
        assert_eq!(p.total_size(), 64);
    }
}
