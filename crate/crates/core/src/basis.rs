//! Bit-string labels for computational basis vectors and qubit addressing.
//!
//! Qubit 1 (label `A`) is the most significant bit of the flat index, so the
//! string `"i1 i2 ... in"` read left to right is the binary expansion of the
//! index.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Computational basis label `|i1 i2 ... in>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex {
    value: usize,
    len: usize,
}

impl BasisIndex {
    pub fn new(value: usize, len: usize) -> Result<Self> {
        if len == 0 || len >= usize::BITS as usize || value >> len != 0 {
            return Err(Error::BitString(format!("{value} does not fit in {len} bits")));
        }
        Ok(Self { value, len })
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        let value = bits.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
        Self::new(value, bits.len())
    }

    /// Parses `s` and requires it to have exactly `n` characters.
    pub fn parse_with_len(s: &str, n: usize) -> Result<Self> {
        let idx: Self = s.parse()?;
        if idx.len != n {
            return Err(Error::BitStringLength(s.to_string(), n));
        }
        Ok(idx)
    }

    #[inline]
    pub fn value(self) -> usize {
        self.value
    }

    #[inline]
    pub fn len(self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    /// Bit of qubit `q` (1-based).
    #[inline]
    pub fn bit(self, q: Qubit) -> bool {
        self.value & q.mask(self.len) != 0
    }

    pub fn bits(self) -> Vec<bool> {
        (0..self.len).map(|k| (self.value >> (self.len - 1 - k)) & 1 == 1).collect()
    }

    /// Same label with the bit of qubit `q` flipped.
    #[inline]
    pub fn flip(self, q: Qubit) -> Self {
        Self { value: self.value ^ q.mask(self.len), len: self.len }
    }
}

impl FromStr for BasisIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || s.len() >= usize::BITS as usize {
            return Err(Error::BitString(s.to_string()));
        }
        let mut value = 0usize;
        for ch in s.chars() {
            let bit = match ch {
                '0' => 0,
                '1' => 1,
                _ => return Err(Error::BitString(s.to_string())),
            };
            value = (value << 1) | bit;
        }
        Ok(Self { value, len: s.len() })
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.value, width = self.len)
    }
}

/// One-based qubit position; qubit 1 is `A`, qubit 2 is `B`, and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Qubit(usize);

impl Qubit {
    pub const A: Qubit = Qubit(1);
    pub const B: Qubit = Qubit(2);
    pub const C: Qubit = Qubit(3);
    pub const D: Qubit = Qubit(4);

    /// # Panics
    /// If `position` is zero.
    pub fn new(position: usize) -> Self {
        assert!(position >= 1, "qubit positions are 1-based");
        Qubit(position)
    }

    #[inline]
    pub fn position(self) -> usize {
        self.0
    }

    /// Bit mask of this qubit inside an `n`-qubit flat index.
    #[inline]
    pub fn mask(self, n: usize) -> usize {
        1usize << (n - self.0)
    }

    pub fn check(self, n: usize) -> Result<()> {
        if self.0 > n {
            return Err(Error::QubitOutOfRange { qubit: self.0, n });
        }
        Ok(())
    }

    /// All qubits of an `n`-qubit register in order.
    pub fn all(n: usize) -> impl Iterator<Item = Qubit> {
        (1..=n).map(Qubit)
    }

    pub fn label(self) -> String {
        if self.0 <= 26 {
            char::from(b'A' + (self.0 - 1) as u8).to_string()
        } else {
            self.0.to_string()
        }
    }
}

impl FromStr for Qubit {
    type Err = Error;

    /// Accepts a letter (`A`..`Z`, case-insensitive) or a 1-based number.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Ok(k) = t.parse::<usize>() {
            return if k >= 1 { Ok(Qubit(k)) } else { Err(Error::QubitLabel(s.to_string())) };
        }
        let mut chars = t.chars();
        match (chars.next(), chars.next()) {
            (Some(ch), None) if ch.is_ascii_alphabetic() => {
                Ok(Qubit((ch.to_ascii_uppercase() as u8 - b'A') as usize + 1))
            }
            _ => Err(Error::QubitLabel(s.to_string())),
        }
    }
}

impl fmt::Display for Qubit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}
