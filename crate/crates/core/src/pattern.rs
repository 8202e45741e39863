//! Permutation patterns and the coefficient table tying pattern counts to
//! separation statistics.
//!
//! For a permutation `w` in window form and a shorter permutation `p`, an
//! occurrence of `p` in `w` is a set of positions whose window values appear
//! in the same relative order as `p`. The table produced by
//! [`CoefficientTable::builtin`] assigns each short pattern a pair of
//! weights `(a_p, b_p)` so that, summed over occurrence counts, the `a`
//! column reproduces the separation between the two canonical sorting words
//! of `w` and the `b` column reproduces the number of rank-two subsystems.
//! [`recompute_coefficient_table`] re-derives every row from the subsystem
//! machinery and refuses to return a table that disagrees with the built-in
//! one.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::coxeter::{CoxeterType, Family};
use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::graph::{DiameterOutcome, WordGraph};
use crate::root::RootKind;
use crate::subsystem::{separation, SubsystemIndex};
use crate::word::{leftward_sorting_word, rightward_sorting_word};

/// A permutation pattern: a window containing each of `1..=k` exactly once.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern {
    window: Vec<u8>,
}

impl Pattern {
    pub fn new(window: Vec<u8>) -> Result<Pattern> {
        let k = window.len();
        if k == 0 {
            return Err(Error::InvalidPattern("empty pattern".into()));
        }
        let mut seen = vec![false; k];
        for &v in &window {
            if v == 0 || v as usize > k || seen[v as usize - 1] {
                return Err(Error::InvalidPattern(format!(
                    "window {window:?} is not a permutation of 1..={k}"
                )));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Pattern { window })
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[u8] {
        &self.window
    }

    pub fn inverse(&self) -> Pattern {
        let mut window = vec![0u8; self.window.len()];
        for (pos, &v) in self.window.iter().enumerate() {
            window[v as usize - 1] = pos as u8 + 1;
        }
        Pattern { window }
    }

    /// The pattern as a group element acting on a window of its own length.
    pub fn as_element(&self) -> GroupElement {
        let rank = self.window.len() as u8 - 1;
        let ctype = CoxeterType::new(Family::A, rank).expect("rank 0 is allowed in family A");
        let window: Vec<i32> = self.window.iter().map(|&v| v as i32).collect();
        GroupElement::from_window(ctype, &window).expect("a pattern window is a valid A window")
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.window.len() <= 9 {
            for v in &self.window {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.window.iter().join(","))
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Accepts either a digit string like `4321` or a comma-separated window
    /// like `10,2,9,...` for patterns longer than nine.
    fn from_str(s: &str) -> Result<Pattern> {
        let bad = |s: &str| Error::InvalidPattern(format!("cannot parse {s:?}"));
        let window: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|part| part.trim().parse::<u8>().map_err(|_| bad(s)))
                .collect::<Result<_>>()?
        } else {
            s.trim()
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| bad(s)))
                .collect::<Result<_>>()?
        };
        Pattern::new(window)
    }
}

fn require_type_a(w: &GroupElement) -> Result<()> {
    if w.ctype().family() != Family::A {
        return Err(Error::WrongFamily { expected: Family::A, found: w.ctype() });
    }
    Ok(())
}

/// Number of occurrences of `p` in the window of `w`: position subsets whose
/// values are ordered like `p`.
pub fn count_pattern(w: &GroupElement, p: &Pattern) -> Result<u64> {
    require_type_a(w)?;
    let window = w.window();
    let k = p.len();
    if k > window.len() {
        return Ok(0);
    }
    let pat = p.values();
    let count = (0..window.len())
        .combinations(k)
        .filter(|positions| {
            positions
                .iter()
                .tuple_combinations()
                .all(|(&i, &j)| (window[i] < window[j]) == (pat_lt(pat, positions, i, j)))
        })
        .count();
    Ok(count as u64)
}

fn pat_lt(pat: &[u8], positions: &[usize], i: usize, j: usize) -> bool {
    let pi = positions.iter().position(|&x| x == i).unwrap();
    let pj = positions.iter().position(|&x| x == j).unwrap();
    pat[pi] < pat[pj]
}

/// Checks that `w` contains `p` exactly as often as `w^-1` contains `p^-1`.
pub fn inverse_pattern_identity_holds(w: &GroupElement, p: &Pattern) -> Result<bool> {
    Ok(count_pattern(w, p)? == count_pattern(&w.inverse(), &p.inverse())?)
}

/// Weights `(a_p, b_p)` per pattern; patterns not listed weigh `(0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    rows: BTreeMap<Pattern, (u32, u32)>,
}

impl CoefficientTable {
    /// The thirteen-row table: `321` plus the twelve length-4 patterns that
    /// carry weight. Everything else weighs `(0, 0)`.
    pub fn builtin() -> CoefficientTable {
        let rows = [
            ("321", (1, 1)),
            ("4321", (2, 3)),
            ("4312", (1, 2)),
            ("4231", (2, 2)),
            ("4213", (1, 1)),
            ("4132", (0, 1)),
            ("3421", (1, 2)),
            ("3412", (1, 2)),
            ("3241", (0, 1)),
            ("3142", (1, 1)),
            ("2431", (1, 1)),
            ("2413", (1, 1)),
            ("2143", (1, 1)),
        ]
        .into_iter()
        .map(|(digits, ab)| (digits.parse().expect("table windows are valid"), ab))
        .collect();
        CoefficientTable { rows }
    }

    /// The `(a_p, b_p)` pair for `p`, defaulting to `(0, 0)`.
    pub fn coefficients(&self, p: &Pattern) -> (u32, u32) {
        self.rows.get(p).copied().unwrap_or((0, 0))
    }

    pub fn rows(&self) -> impl Iterator<Item = (&Pattern, (u32, u32))> {
        self.rows.iter().map(|(p, &ab)| (p, ab))
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Derives the coefficient table from scratch and cross-checks it against
/// [`CoefficientTable::builtin`].
///
/// Every permutation of length 3 or 4 is treated as an element in its own
/// right. `b_p` counts the rank-two subsystems of that element which span all
/// window positions; `a_p` counts how many of those are separated between the
/// element's two canonical sorting words. Patterns where both counts vanish
/// are omitted. A single disagreement with the built-in table aborts the
/// derivation.
pub fn recompute_coefficient_table() -> Result<CoefficientTable> {
    let mut rows = BTreeMap::new();
    for k in [3usize, 4] {
        for window in (1..=k as u8).permutations(k) {
            let p = Pattern::new(window).expect("permutations of 1..=k are valid patterns");
            let (a, b) = derive_coefficients(&p)?;
            if (a, b) != (0, 0) {
                rows.insert(p, (a, b));
            }
        }
    }
    let derived = CoefficientTable { rows };
    let builtin = CoefficientTable::builtin();
    if derived != builtin {
        let culprit = builtin
            .rows()
            .map(|(p, _)| p)
            .chain(derived.rows().map(|(p, _)| p))
            .find(|p| derived.coefficients(p) != builtin.coefficients(p))
            .expect("unequal tables disagree on some row")
            .clone();
        return Err(Error::TableMismatch { pattern: culprit.to_string() });
    }
    Ok(derived)
}

fn derive_coefficients(p: &Pattern) -> Result<(u32, u32)> {
    let element = p.as_element();
    let index = SubsystemIndex::for_element(&element);
    let degree = element.ctype().degree();
    let spanning: Vec<usize> = (0..index.subsystem_count())
        .filter(|&s| {
            let mut hit = vec![false; degree];
            for &id in index.member_ids(s) {
                if let RootKind::Diff { lo, hi } = index.ambient()[id as usize].kind() {
                    hit[lo as usize - 1] = true;
                    hit[hi as usize - 1] = true;
                }
            }
            hit.iter().all(|&h| h)
        })
        .collect();
    let b = spanning.len() as u32;
    if b == 0 {
        return Ok((0, 0));
    }
    let first = index.positions(&leftward_sorting_word(&element)?)?;
    let second = index.positions(&rightward_sorting_word(&element)?)?;
    let a = spanning.iter().filter(|&&s| index.order_differs(s, &first, &second)).count() as u32;
    Ok((a, b))
}

/// Both weighted pattern sums for `w`, next to the quantities they should
/// reproduce: the `a` column against the separation between the two sorting
/// words, the `b` column against the rank-two subsystem count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SumIdentityCheck {
    pub lhs_a: u64,
    pub rhs_a: u64,
    pub lhs_b: u64,
    pub rhs_b: u64,
    pub ok: bool,
}

pub fn check_sum_identities(w: &GroupElement) -> Result<SumIdentityCheck> {
    require_type_a(w)?;
    let first = leftward_sorting_word(w)?;
    let second = rightward_sorting_word(w)?;
    let lhs_a = separation(&first, &second)?.len() as u64;
    let lhs_b = crate::subsystem::l2_size(w) as u64;
    let (mut rhs_a, mut rhs_b) = (0u64, 0u64);
    for (p, (a, b)) in CoefficientTable::builtin().rows() {
        if (a, b) == (0, 0) {
            continue;
        }
        let hits = count_pattern(w, p)?;
        rhs_a += a as u64 * hits;
        rhs_b += b as u64 * hits;
    }
    let ok = lhs_a == rhs_a && lhs_b == rhs_b;
    Ok(SumIdentityCheck { lhs_a, rhs_a, lhs_b, rhs_b, ok })
}

/// Concatenates the windows of `w` and `u`, shifting the second block up.
pub fn direct_sum(w: &GroupElement, u: &GroupElement) -> Result<GroupElement> {
    compose_windows(w, u, false)
}

/// Stacks the window of `w`, shifted up, in front of the window of `u`.
pub fn skew_sum(w: &GroupElement, u: &GroupElement) -> Result<GroupElement> {
    compose_windows(w, u, true)
}

fn compose_windows(w: &GroupElement, u: &GroupElement, skew: bool) -> Result<GroupElement> {
    require_type_a(w)?;
    require_type_a(u)?;
    let (n, m) = (w.ctype().degree(), u.ctype().degree());
    let (first_shift, second_shift) = if skew { (m as i32, 0) } else { (0, n as i32) };
    let window: Vec<i32> = w
        .window()
        .iter()
        .map(|&v| v + first_shift)
        .chain(u.window().iter().map(|&v| v + second_shift))
        .collect();
    let ctype = CoxeterType::new(Family::A, (n + m - 1) as u8)?;
    GroupElement::from_window(ctype, &window)
}

/// True when the window splits as `id_i ⊕ (id_j ⊖ id_k) ⊕ id_l`: a fixed
/// prefix, one increasing run jumped over a second increasing run, and a
/// fixed suffix. These are exactly the elements whose graph diameter meets
/// the separation lower bound.
pub fn is_equality_form(w: &GroupElement) -> Result<bool> {
    require_type_a(w)?;
    let window = w.window();
    let m = window.len();
    for i in 0..=m {
        for j in 0..=(m - i) {
            for k in 0..=(m - i - j) {
                // The suffix length is forced; the window is compared
                // blockwise against the candidate decomposition.
                let (i32i, i32k) = (i as i32, k as i32);
                let prefix_ok = (0..i).all(|t| window[t] == t as i32 + 1);
                let upper_ok =
                    (0..j).all(|t| window[i + t] == i32i + i32k + t as i32 + 1);
                let lower_ok =
                    (0..k).all(|t| window[i + j + t] == i32i + t as i32 + 1);
                let suffix_ok = (i + j + k..m).all(|t| window[t] == t as i32 + 1);
                if prefix_ok && upper_ok && lower_ok && suffix_ok {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// The four patterns whose absence characterizes the equality form.
pub fn obstruction_patterns() -> Vec<Pattern> {
    ["321", "3142", "2413", "2143"]
        .iter()
        .map(|digits| digits.parse().expect("fixed windows parse"))
        .collect()
}

/// True when `w` contains none of the four obstruction patterns. Agrees with
/// [`is_equality_form`] on every input.
pub fn avoids_obstruction_patterns(w: &GroupElement) -> Result<bool> {
    for p in obstruction_patterns() {
        if count_pattern(w, &p)? > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verdict of [`check_3412_bound`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundStatus {
    /// An exact diameter was computed and satisfies the bound.
    Holds,
    /// The diameter, or already a lower bound for it, exceeds the bound.
    Violated,
    /// Budgets were exhausted before the bound could be settled either way.
    Inconclusive,
}

/// Outcome of testing `diam(G(w)) <= l2 - n3412` for one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub subsystem_count: u64,
    pub occurrences_3412: u64,
    pub diameter: Option<DiameterOutcome>,
    pub status: BoundStatus,
}

/// Tests whether the word-graph diameter of `w` stays below the number of
/// rank-two subsystems minus the number of `3412` occurrences.
///
/// A verdict of [`BoundStatus::Violated`] is sound even from a truncated
/// diameter search, since any eccentricity already bounds the diameter from
/// below; [`BoundStatus::Holds`] is only reported alongside an exact
/// diameter.
pub fn check_3412_bound(
    w: &GroupElement,
    vertex_cap: Option<usize>,
    source_budget: Option<usize>,
) -> Result<BoundCheck> {
    require_type_a(w)?;
    let subsystem_count = crate::subsystem::l2_size(w) as u64;
    let occurrences_3412 = count_pattern(w, &"3412".parse()?)?;
    let bound = subsystem_count as i64 - occurrences_3412 as i64;
    let graph = match WordGraph::build(w, vertex_cap) {
        Ok(graph) => graph,
        Err(Error::CapExceeded { .. }) => {
            return Ok(BoundCheck {
                subsystem_count,
                occurrences_3412,
                diameter: None,
                status: BoundStatus::Inconclusive,
            })
        }
        Err(other) => return Err(other),
    };
    let diameter = graph.diameter(source_budget);
    let status = if diameter.lower_bound as i64 > bound {
        BoundStatus::Violated
    } else if diameter.exact {
        BoundStatus::Holds
    } else {
        BoundStatus::Inconclusive
    };
    Ok(BoundCheck { subsystem_count, occurrences_3412, diameter: Some(diameter), status })
}
