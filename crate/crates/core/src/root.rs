//! Roots of the classical root systems, kept in an exact canonical form.
//!
//! Every root of `A_{n-1}`, `B_n`, or `D_n` is `±(e_j - e_i)`, `±(e_j + e_i)`
//! with `i < j`, or `±e_i`. We store that shape directly instead of a
//! coordinate vector, so roots hash and compare cheaply and never need
//! floating point. The sign of a [`Root`] is always the sign of its
//! highest-index coordinate, which makes "is this root positive" a field read.

use std::fmt;
use std::str::FromStr;

use crate::coxeter::{CoxeterType, Family};
use crate::error::{Error, Result};

/// Canonical shape of a root: `Diff { lo, hi }` is `e_hi - e_lo`,
/// `Sum { lo, hi }` is `e_hi + e_lo` (both require `lo < hi`), and
/// `Single { idx }` is `e_idx`. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootKind {
    Diff { lo: u8, hi: u8 },
    Sum { lo: u8, hi: u8 },
    Single { idx: u8 },
}

/// A root: a [`RootKind`] with a sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    kind: RootKind,
    positive: bool,
}

impl Root {
    /// The positive root `e_hi - e_lo`.
    pub fn diff(lo: u8, hi: u8) -> Root {
        assert!(lo >= 1 && lo < hi, "diff root needs 1 <= lo < hi");
        Root { kind: RootKind::Diff { lo, hi }, positive: true }
    }

    /// The positive root `e_hi + e_lo`.
    pub fn sum(lo: u8, hi: u8) -> Root {
        assert!(lo >= 1 && lo < hi, "sum root needs 1 <= lo < hi");
        Root { kind: RootKind::Sum { lo, hi }, positive: true }
    }

    /// The positive root `e_idx`.
    pub fn single(idx: u8) -> Root {
        assert!(idx >= 1, "coordinate indices are 1-based");
        Root { kind: RootKind::Single { idx }, positive: true }
    }

    /// Builds a root from up to two basis terms `c_i * e_i + c_j * e_j` with
    /// `i < j` and coefficients in `{-1, 0, 1}` (not both zero).
    pub(crate) fn from_terms(i: u8, ci: i8, j: u8, cj: i8) -> Root {
        debug_assert!(i < j && ci.abs() <= 1 && cj.abs() <= 1);
        match (ci, cj) {
            (0, 0) => unreachable!("zero vector is not a root"),
            (c, 0) => Root { kind: RootKind::Single { idx: i }, positive: c > 0 },
            (0, c) => Root { kind: RootKind::Single { idx: j }, positive: c > 0 },
            (ci, cj) => {
                let kind = if ci == cj {
                    RootKind::Sum { lo: i, hi: j }
                } else {
                    RootKind::Diff { lo: i, hi: j }
                };
                Root { kind, positive: cj > 0 }
            }
        }
    }

    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    pub fn negated(&self) -> Root {
        Root { kind: self.kind, positive: !self.positive }
    }

    /// The positive root on the same line.
    pub fn abs(&self) -> Root {
        Root { kind: self.kind, positive: true }
    }

    /// Coefficient vector in the standard basis `e_1..e_m`.
    pub fn coords(&self, m: usize) -> Vec<i64> {
        let mut v = vec![0i64; m];
        let s = if self.positive { 1 } else { -1 };
        match self.kind {
            RootKind::Diff { lo, hi } => {
                v[hi as usize - 1] = s;
                v[lo as usize - 1] = -s;
            }
            RootKind::Sum { lo, hi } => {
                v[hi as usize - 1] = s;
                v[lo as usize - 1] = s;
            }
            RootKind::Single { idx } => v[idx as usize - 1] = s,
        }
        v
    }

    /// Whether this root lies in the root system of `ctype`.
    pub fn is_valid_for(&self, ctype: CoxeterType) -> bool {
        let m = ctype.degree() as u8;
        match (self.kind, ctype.family()) {
            (RootKind::Diff { hi, .. }, _) => hi <= m,
            (RootKind::Sum { hi, .. }, Family::B | Family::D) => hi <= m,
            (RootKind::Single { idx }, Family::B) => idx <= m,
            _ => false,
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.positive) {
            (RootKind::Diff { lo, hi }, true) => write!(f, "e{hi}-e{lo}"),
            (RootKind::Diff { lo, hi }, false) => write!(f, "-e{hi}+e{lo}"),
            (RootKind::Sum { lo, hi }, true) => write!(f, "e{hi}+e{lo}"),
            (RootKind::Sum { lo, hi }, false) => write!(f, "-e{hi}-e{lo}"),
            (RootKind::Single { idx }, true) => write!(f, "e{idx}"),
            (RootKind::Single { idx }, false) => write!(f, "-e{idx}"),
        }
    }
}

impl FromStr for Root {
    type Err = Error;

    /// Parses the textual form produced by `Display`, e.g. `e3-e1`, `-e4-e2`,
    /// `e5`. Terms may appear in either index order.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRoot(s.to_string());
        let mut terms: Vec<(u8, i8)> = Vec::with_capacity(2);
        let mut rest = s.trim();
        let mut sign: i8 = 1;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        }
        while !rest.is_empty() {
            let r = rest.strip_prefix('e').ok_or_else(bad)?;
            let digits_end = r
                .char_indices()
                .find(|(_, c)| !c.is_ascii_digit())
                .map_or(r.len(), |(i, _)| i);
            if digits_end == 0 {
                return Err(bad());
            }
            let idx: u8 = r[..digits_end].parse().map_err(|_| bad())?;
            if idx == 0 {
                return Err(bad());
            }
            terms.push((idx, sign));
            rest = &r[digits_end..];
            match rest.chars().next() {
                None => break,
                Some('+') => {
                    sign = 1;
                    rest = &rest[1..];
                }
                Some('-') => {
                    sign = -1;
                    rest = &rest[1..];
                }
                Some(_) => return Err(bad()),
            }
        }
        match terms.as_slice() {
            [(idx, c)] => {
                Ok(Root { kind: RootKind::Single { idx: *idx }, positive: *c > 0 })
            }
            [(a, ca), (b, cb)] if a != b => {
                let ((i, ci), (j, cj)) =
                    if a < b { ((*a, *ca), (*b, *cb)) } else { ((*b, *cb), (*a, *ca)) };
                Ok(Root::from_terms(i, ci, j, cj))
            }
            _ => Err(bad()),
        }
    }
}

/// Simple roots of `ctype`, indexed by generator: the simple root at position
/// `i - 1` is the one made negative exactly by right-descents at letter `i`.
pub fn simple_roots(ctype: CoxeterType) -> Vec<Root> {
    let n = ctype.rank();
    match ctype.family() {
        Family::A => (1..=n).map(|i| Root::diff(i, i + 1)).collect(),
        Family::B => std::iter::once(Root::single(1))
            .chain((2..=n).map(|i| Root::diff(i - 1, i)))
            .collect(),
        Family::D => std::iter::once(Root::sum(1, 2))
            .chain((2..=n).map(|i| Root::diff(i - 1, i)))
            .collect(),
    }
}

/// All positive roots of `ctype`, sorted in the canonical order.
pub fn positive_roots(ctype: CoxeterType) -> Vec<Root> {
    let m = ctype.degree() as u8;
    let mut roots = Vec::with_capacity(ctype.positive_root_count());
    for lo in 1..=m {
        for hi in lo + 1..=m {
            roots.push(Root::diff(lo, hi));
            if matches!(ctype.family(), Family::B | Family::D) {
                roots.push(Root::sum(lo, hi));
            }
        }
    }
    if ctype.family() == Family::B {
        roots.extend((1..=m).map(Root::single));
    }
    roots.sort_unstable();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(family: Family, rank: u8) -> CoxeterType {
        CoxeterType::new(family, rank).unwrap()
    }

    #[test]
    fn simple_roots_by_family() {
        let show = |v: Vec<Root>| v.iter().map(Root::to_string).collect::<Vec<_>>();
        assert_eq!(show(simple_roots(ct(Family::A, 3))), ["e2-e1", "e3-e2", "e4-e3"]);
        assert_eq!(show(simple_roots(ct(Family::B, 2))), ["e1", "e2-e1"]);
        assert_eq!(
            show(simple_roots(ct(Family::D, 4))),
            ["e2+e1", "e2-e1", "e3-e2", "e4-e3"]
        );
    }

    #[test]
    fn positive_root_counts_match_type() {
        for ctype in [ct(Family::A, 3), ct(Family::B, 3), ct(Family::D, 4), ct(Family::B, 5)] {
            let roots = positive_roots(ctype);
            assert_eq!(roots.len(), ctype.positive_root_count());
            assert!(roots.iter().all(|r| r.is_positive() && r.is_valid_for(ctype)));
            let mut sorted = roots.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), roots.len());
        }
    }

    #[test]
    fn display_parse_roundtrip() {
        for ctype in [ct(Family::B, 4)] {
            for root in positive_roots(ctype) {
                for r in [root, root.negated()] {
                    assert_eq!(r.to_string().parse::<Root>().unwrap(), r);
                }
            }
        }
        // Terms in the "wrong" order normalize.
        assert_eq!("e1+e3".parse::<Root>().unwrap(), Root::sum(1, 3));
        assert_eq!("-e1+e3".parse::<Root>().unwrap(), Root::diff(1, 3));
        assert_eq!("e1-e3".parse::<Root>().unwrap(), Root::diff(1, 3).negated());
        assert!("e1-e1".parse::<Root>().is_err());
        assert!("e0".parse::<Root>().is_err());
        assert!("3".parse::<Root>().is_err());
    }

    #[test]
    fn validity_per_family() {
        assert!(Root::diff(1, 4).is_valid_for(ct(Family::A, 3)));
        assert!(!Root::sum(1, 4).is_valid_for(ct(Family::A, 3)));
        assert!(!Root::diff(1, 5).is_valid_for(ct(Family::A, 3)));
        assert!(Root::single(3).is_valid_for(ct(Family::B, 3)));
        assert!(!Root::single(3).is_valid_for(ct(Family::D, 4)));
        assert!(Root::sum(2, 4).is_valid_for(ct(Family::D, 4)));
    }
}
