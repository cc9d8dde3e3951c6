//! Region labels: one bit per surface, `0` meaning interior.

use std::fmt;

use crate::{Error, Result};

/// Largest supported number of surfaces in one diagram.
pub const MAX_SURFACES: usize = 20;

/// An n-bit region label. Bit `i` is `0` when the region lies in the
/// interior of surface `i` and `1` when it lies in the exterior.
///
/// Displayed with the bit of surface 0 first, e.g. `"011"`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector {
    bits: u32,
    len: u8,
}

impl SignVector {
    pub fn new(bits: u32, len: usize) -> Self {
        assert!(len <= MAX_SURFACES, "at most {MAX_SURFACES} surfaces");
        assert!(
            len == 32 || bits < (1 << len),
            "bits out of range for length {len}"
        );
        Self {
            bits,
            len: len as u8,
        }
    }

    /// The all-exterior label (all bits 1), carried by unbounded space.
    pub fn all_exterior(len: usize) -> Self {
        assert!(len <= MAX_SURFACES);
        Self::new(((1u64 << len) - 1) as u32, len)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Bit of surface `i`: true = exterior.
    pub fn bit(&self, i: usize) -> bool {
        assert!(i < self.len());
        self.bits >> i & 1 == 1
    }

    pub fn with_bit(&self, i: usize, exterior: bool) -> Self {
        assert!(i < self.len());
        let bits = if exterior {
            self.bits | 1 << i
        } else {
            self.bits & !(1 << i)
        };
        Self::new(bits, self.len())
    }

    pub fn flipped(&self, i: usize) -> Self {
        assert!(i < self.len());
        Self::new(self.bits ^ (1 << i), self.len())
    }

    /// Number of surfaces on which the two labels disagree.
    pub fn diff_count(&self, other: &Self) -> usize {
        assert_eq!(self.len, other.len);
        (self.bits ^ other.bits).count_ones() as usize
    }

    /// Re-pack the bits of the surfaces in `keep` (ascending) into a
    /// shorter label.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let mut bits = 0u32;
        for (j, &i) in keep.iter().enumerate() {
            if self.bit(i) {
                bits |= 1 << j;
            }
        }
        Self::new(bits, keep.len())
    }

    /// Parse from a bit string such as `"011"` (surface 0 first).
    pub fn parse(s: &str) -> Result<Self> {
        if s.len() > MAX_SURFACES {
            return Err(Error::InvalidArgument(format!(
                "sign vector {s:?} longer than {MAX_SURFACES}"
            )));
        }
        let mut bits = 0u32;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "sign vector {s:?} contains {c:?}"
                    )))
                }
            }
        }
        Ok(Self::new(bits, s.len()))
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            write!(f, "{}", if self.bit(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_puts_surface_zero_first() {
        let s = SignVector::new(0b011, 3); // surfaces 0,1 exterior, 2 interior
        assert_eq!(s.to_string(), "110");
        assert!(s.bit(0) && s.bit(1) && !s.bit(2));
    }

    #[test]
    fn parse_round_trips() {
        for s in ["", "0", "1", "0110", "11111"] {
            assert_eq!(SignVector::parse(s).unwrap().to_string(), s);
        }
        assert!(SignVector::parse("012").is_err());
    }

    #[test]
    fn restrict_repacks_bits() {
        let s = SignVector::parse("0110").unwrap();
        assert_eq!(s.restrict(&[1, 3]).to_string(), "10");
        assert_eq!(s.restrict(&[0, 1, 2, 3]), s);
        assert_eq!(s.restrict(&[]).len(), 0);
    }

    #[test]
    fn all_exterior_is_all_ones() {
        assert_eq!(SignVector::all_exterior(4).to_string(), "1111");
        assert_eq!(SignVector::all_exterior(0).len(), 0);
    }
}
