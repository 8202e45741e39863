//! Group elements in window notation.
//!
//! An element of any of the three families is stored as the window
//! `[w(1), ..., w(m)]` of signed images of `1..=m`; the action on negative
//! arguments is forced by `w(-i) = -w(i)`. Type `A` windows are ordinary
//! permutations (all entries positive), type `B` windows carry arbitrary
//! signs, and type `D` windows carry an even number of minus signs.

use std::fmt;

use itertools::Itertools;

use crate::coxeter::{CoxeterType, Family};
use crate::error::{Error, Result};
use crate::root::{positive_roots, Root, RootKind};

/// A group element of a fixed [`CoxeterType`], in window notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    ctype: CoxeterType,
    window: Vec<i32>,
}

impl GroupElement {
    pub fn identity(ctype: CoxeterType) -> GroupElement {
        let window = (1..=ctype.degree() as i32).collect();
        GroupElement { ctype, window }
    }

    /// The longest element of the group.
    pub fn longest(ctype: CoxeterType) -> GroupElement {
        let m = ctype.degree() as i32;
        let window = match ctype.family() {
            Family::A => (1..=m).rev().collect(),
            Family::B => (1..=m).map(|i| -i).collect(),
            // In type D the longest element negates everything when the rank
            // is even; odd rank forces one entry to stay positive.
            Family::D => (1..=m)
                .map(|i| if m % 2 == 1 && i == 1 { 1 } else { -i })
                .collect(),
        };
        GroupElement { ctype, window }
    }

    /// Validates and wraps a window for the given type.
    pub fn from_window(ctype: CoxeterType, window: &[i32]) -> Result<GroupElement> {
        let m = ctype.degree();
        if window.len() != m {
            return Err(Error::InvalidWindow(format!(
                "expected {m} entries for {ctype}, got {}",
                window.len()
            )));
        }
        let mut seen = vec![false; m];
        let mut negatives = 0usize;
        for &v in window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > m {
                return Err(Error::InvalidWindow(format!(
                    "entry {v} out of range for {ctype}"
                )));
            }
            if seen[a - 1] {
                return Err(Error::InvalidWindow(format!("entry {a} repeated")));
            }
            seen[a - 1] = true;
            if v < 0 {
                negatives += 1;
            }
        }
        match ctype.family() {
            Family::A if negatives > 0 => {
                return Err(Error::InvalidWindow(
                    "type A windows cannot contain negative entries".into(),
                ))
            }
            Family::D if negatives % 2 == 1 => {
                return Err(Error::InvalidWindow(
                    "type D windows need an even number of negative entries".into(),
                ))
            }
            _ => {}
        }
        Ok(GroupElement { ctype, window: window.to_vec() })
    }

    /// Parses a comma-separated window such as `4,-1,3,-2`.
    pub fn parse_window(ctype: CoxeterType, text: &str) -> Result<GroupElement> {
        let entries = text
            .split(',')
            .map(|t| t.trim().parse::<i32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidWindow(format!("{text:?}: {e}")))?;
        GroupElement::from_window(ctype, &entries)
    }

    pub fn ctype(&self) -> CoxeterType {
        self.ctype
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Signed image of a signed point, so `image(-i) == -image(i)`.
    pub fn image(&self, i: i32) -> i32 {
        debug_assert!(i != 0 && i.unsigned_abs() as usize <= self.window.len());
        if i > 0 {
            self.window[i as usize - 1]
        } else {
            -self.window[(-i) as usize - 1]
        }
    }

    /// Action on a root: `w · e_i = sign(w(i)) e_{|w(i)|}`, extended linearly.
    pub fn act(&self, root: &Root) -> Root {
        debug_assert!(root.is_valid_for(self.ctype));
        let s: i8 = if root.is_positive() { 1 } else { -1 };
        let img = |idx: u8| -> (u8, i8) {
            let v = self.window[idx as usize - 1];
            (v.unsigned_abs() as u8, if v > 0 { 1 } else { -1 })
        };
        match root.kind() {
            RootKind::Single { idx } => {
                let (j, sj) = img(idx);
                Root::from_terms(j, s * sj, j + 1, 0)
            }
            RootKind::Diff { lo, hi } => {
                let (a, sa) = img(hi);
                let (b, sb) = img(lo);
                // w(e_hi - e_lo) = sa*e_a - sb*e_b, then canonicalize.
                if a < b {
                    Root::from_terms(a, s * sa, b, -s * sb)
                } else {
                    Root::from_terms(b, -s * sb, a, s * sa)
                }
            }
            RootKind::Sum { lo, hi } => {
                let (a, sa) = img(hi);
                let (b, sb) = img(lo);
                if a < b {
                    Root::from_terms(a, s * sa, b, s * sb)
                } else {
                    Root::from_terms(b, s * sb, a, s * sa)
                }
            }
        }
    }

    /// Coxeter length, computed from the window statistics: inversions for
    /// type `A`, plus negative-sum pairs and (for `B`) negative entries.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let m = w.len();
        let mut inv = 0usize;
        let mut nsp = 0usize;
        for i in 0..m {
            for j in i + 1..m {
                if w[i] > w[j] {
                    inv += 1;
                }
                if w[i] + w[j] < 0 {
                    nsp += 1;
                }
            }
        }
        match self.ctype.family() {
            Family::A => inv,
            Family::B => {
                let neg = w.iter().filter(|&&v| v < 0).count();
                inv + nsp + neg
            }
            Family::D => inv + nsp,
        }
    }

    /// The positive roots sent negative by this element, in canonical order.
    pub fn inversion_set(&self) -> Vec<Root> {
        positive_roots(self.ctype)
            .into_iter()
            .filter(|alpha| !self.act(alpha).is_positive())
            .collect()
    }

    pub fn is_right_descent(&self, i: u8) -> bool {
        debug_assert!(self.ctype.is_letter(i));
        let w = &self.window;
        let i = i as usize;
        match (self.ctype.family(), i) {
            (Family::A, i) => w[i - 1] > w[i],
            (Family::B, 1) => w[0] < 0,
            (Family::D, 1) => w[0] + w[1] < 0,
            (_, i) => w[i - 2] > w[i - 1],
        }
    }

    pub fn right_descents(&self) -> Vec<u8> {
        (1..=self.ctype.rank())
            .filter(|&i| self.is_right_descent(i))
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(k, &v)| v == k as i32 + 1)
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.ctype != other.ctype {
            return Err(Error::TypeMismatch(self.ctype, other.ctype));
        }
        let window = other.window.iter().map(|&v| self.image(v)).collect();
        Ok(GroupElement { ctype: self.ctype, window })
    }

    pub fn inverse(&self) -> GroupElement {
        let mut window = vec![0i32; self.window.len()];
        for (k, &v) in self.window.iter().enumerate() {
            let i = k as i32 + 1;
            if v > 0 {
                window[v as usize - 1] = i;
            } else {
                window[(-v) as usize - 1] = -i;
            }
        }
        GroupElement { ctype: self.ctype, window }
    }

    /// Right-multiplies by generator `i` in place. Involutive, so calling it
    /// twice restores the element.
    pub(crate) fn apply_letter_right(&mut self, i: u8) {
        debug_assert!(self.ctype.is_letter(i));
        let i = i as usize;
        match (self.ctype.family(), i) {
            (Family::A, i) => self.window.swap(i - 1, i),
            (Family::B, 1) => self.window[0] = -self.window[0],
            (Family::D, 1) => {
                let (a, b) = (self.window[0], self.window[1]);
                self.window[0] = -b;
                self.window[1] = -a;
            }
            (_, i) => self.window.swap(i - 2, i - 1),
        }
    }

    /// `self · s_i` as a new element.
    pub fn times_generator(&self, i: u8) -> Result<GroupElement> {
        if !self.ctype.is_letter(i) {
            return Err(Error::LetterOutOfRange { letter: i, ctype: self.ctype });
        }
        let mut out = self.clone();
        out.apply_letter_right(i);
        Ok(out)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.window {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Every element of the group, in lexicographic window order.
///
/// Sizes grow as `m!` (family `A`) or `2^(m-1) m!` and beyond, so this is for
/// exhaustive sweeps at desk scale only.
pub fn all_elements(ctype: CoxeterType) -> Vec<GroupElement> {
    let m = ctype.degree();
    let mut out = Vec::new();
    for perm in (1..=m as i32).permutations(m) {
        match ctype.family() {
            Family::A => out.push(GroupElement { ctype, window: perm }),
            Family::B | Family::D => {
                for mask in 0u32..1 << m {
                    if ctype.family() == Family::D && mask.count_ones() % 2 != 0 {
                        continue;
                    }
                    let window = perm
                        .iter()
                        .enumerate()
                        .map(|(k, &v)| if mask >> k & 1 == 1 { -v } else { v })
                        .collect();
                    out.push(GroupElement { ctype, window });
                }
            }
        }
    }
    out.sort_by(|x, y| x.window.cmp(&y.window));
    out
}
