//! The classical Coxeter types `A`, `B`, `D` and their diagram data.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One of the three classical families handled by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `A_{n-1}`: the symmetric group on `n` points (rank `n - 1`).
    A,
    /// `B_n`: signed permutations of `n` points.
    B,
    /// `D_n`: signed permutations with an even number of sign changes.
    /// Restricted to rank at least 4 so the diagram is a genuine fork.
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::InvalidWindow(format!("unknown family {other:?}"))),
        }
    }
}

/// A family together with a rank, e.g. `B3`.
///
/// Generators are numbered `1..=rank`. In type `A` generator `i` swaps the
/// window positions `i` and `i + 1`; in type `B` generator 1 flips the sign of
/// position 1 and generator `i >= 2` swaps positions `i - 1` and `i`; in type
/// `D` generator 1 sends the first two window entries `(a, b)` to `(-b, -a)`
/// and generator `i >= 2` swaps positions `i - 1` and `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoxeterType {
    family: Family,
    rank: u8,
}

impl CoxeterType {
    pub fn new(family: Family, rank: u8) -> Result<Self> {
        // Rank 0 in family A is the one-point group on a single-entry window;
        // it shows up as the identity operand of direct and skew sums.
        let min = match family {
            Family::A => 0,
            Family::B => 2,
            Family::D => 4,
        };
        if rank < min {
            return Err(Error::RankTooSmall { family, rank, min });
        }
        Ok(CoxeterType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    /// Length of the window that elements of this type act on: `rank + 1`
    /// points for type `A`, `rank` points for types `B` and `D`.
    pub fn degree(&self) -> usize {
        match self.family {
            Family::A => self.rank as usize + 1,
            Family::B | Family::D => self.rank as usize,
        }
    }

    /// Order of `s_a s_b` for distinct generators `a`, `b`.
    pub fn braid_order(&self, a: u8, b: u8) -> u8 {
        assert!(a != b && self.is_letter(a) && self.is_letter(b));
        let (lo, hi) = (a.min(b), a.max(b));
        match self.family {
            Family::A => {
                if hi - lo == 1 {
                    3
                } else {
                    2
                }
            }
            Family::B => match (lo, hi) {
                (1, 2) => 4,
                (lo, hi) if hi - lo == 1 => 3,
                _ => 2,
            },
            Family::D => match (lo, hi) {
                (1, 2) => 2,
                (1, 3) => 3,
                (1, _) => 2,
                (lo, hi) if hi - lo == 1 => 3,
                _ => 2,
            },
        }
    }

    pub fn is_letter(&self, i: u8) -> bool {
        (1..=self.rank).contains(&i)
    }

    /// Number of positive roots, which is also the length of the longest
    /// element.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank as usize;
        match self.family {
            Family::A => (n + 1) * n / 2,
            Family::B => n * n,
            Family::D => n * (n - 1),
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}
