use core::fmt;

use crate::error::CodeError;

/// A vertex of the hypercube `I(n)`, stored as a bitset.
///
/// Coordinate `1` is bit 0 and is rendered leftmost, so `Vertex::parse("1100")`
/// has coordinates 1 and 2 set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    bits: u64,
    width: u8,
}

impl Vertex {
    pub fn zero(width: usize) -> Result<Self, CodeError> {
        check_width(width)?;
        Ok(Vertex {
            bits: 0,
            width: width as u8,
        })
    }

    pub fn from_bits(bits: u64, width: usize) -> Result<Self, CodeError> {
        check_width(width)?;
        Ok(Vertex {
            bits: bits & mask(width),
            width: width as u8,
        })
    }

    /// Parses a string of `0`/`1` characters, coordinate 1 first.
    pub fn parse(s: &str) -> Option<Self> {
        let width = s.len();
        if width == 0 || width > crate::MAX_DIMENSION {
            return None;
        }
        let mut bits = 0u64;
        for (i, c) in s.bytes().enumerate() {
            match c {
                b'0' => {}
                b'1' => bits |= 1 << i,
                _ => return None,
            }
        }
        Some(Vertex {
            bits,
            width: width as u8,
        })
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Value of the 1-indexed coordinate.
    pub fn coordinate(&self, coord: usize) -> bool {
        debug_assert!(coord >= 1 && coord <= self.width());
        self.bits >> (coord - 1) & 1 == 1
    }

    /// Returns the vertex with the 1-indexed coordinate flipped.
    pub fn flip(self, coord: usize) -> Self {
        debug_assert!(coord >= 1 && coord <= self.width());
        Vertex {
            bits: self.bits ^ (1 << (coord - 1)),
            width: self.width,
        }
    }

    /// Same bits in a wider (or equal) cube.
    pub fn widen(self, width: usize) -> Result<Self, CodeError> {
        if width < self.width() {
            return Err(CodeError::WidthMismatch {
                left: self.width(),
                right: width,
            });
        }
        Vertex::from_bits(self.bits, width)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.width() {
            f.write_str(if self.bits >> i & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

fn check_width(width: usize) -> Result<(), CodeError> {
    if width == 0 || width > crate::MAX_DIMENSION {
        return Err(CodeError::DimensionOutOfRange(width));
    }
    Ok(())
}

fn mask(width: usize) -> u64 {
    if width == 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

/// Number of coordinates in which `x` and `y` differ.
pub fn hypercube_distance(x: &Vertex, y: &Vertex) -> Result<usize, CodeError> {
    if x.width != y.width {
        return Err(CodeError::WidthMismatch {
            left: x.width(),
            right: y.width(),
        });
    }
    Ok((x.bits ^ y.bits).count_ones() as usize)
}

/// Keeps the first `width` coordinates of `x`.
pub fn project_vertex(x: &Vertex, width: usize) -> Result<Vertex, CodeError> {
    if width == 0 || width > x.width() {
        return Err(CodeError::WidthMismatch {
            left: x.width(),
            right: width,
        });
    }
    Vertex::from_bits(x.bits, width)
}
