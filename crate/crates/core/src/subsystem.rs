//! Rank-two subsystems and separation of reduced words.
//!
//! Every reduced word of `w` crosses the same set of roots (the inversions of
//! `w⁻¹`), but in its own order. A *rank-two subsystem* of `w` is the full
//! positive part of the intersection of the root system with a plane, provided
//! that part lies inside the crossed set. Restricting two words' crossing
//! orders to a subsystem either gives the same sequence or exact opposite
//! ones; the subsystems where they disagree form the *separation set* of the
//! pair. Separation obeys a symmetric-difference law along paths of moves and
//! each move flips exactly one subsystem, so the size of the separation set is
//! a lower bound for distance in the word graph.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::coxeter::CoxeterType;
use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::root::{positive_roots, Root};
use crate::word::ReducedWord;

/// Isomorphism type of a rank-two subsystem, determined by how many positive
/// roots the plane holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubsystemKind {
    /// Two orthogonal roots; the only move across it is a commutation.
    A1A1,
    /// Three roots `{α, α+β, β}`; crossed by a 3-letter braid run.
    A2,
    /// Four roots `{α, α+β, α+2β, β}` (type `B` only); a 4-letter braid run.
    B2,
}

impl SubsystemKind {
    pub fn positive_count(self) -> usize {
        match self {
            SubsystemKind::A1A1 => 2,
            SubsystemKind::A2 => 3,
            SubsystemKind::B2 => 4,
        }
    }

    fn from_count(count: usize) -> SubsystemKind {
        match count {
            2 => SubsystemKind::A1A1,
            3 => SubsystemKind::A2,
            4 => SubsystemKind::B2,
            other => unreachable!("a rank-two plane holds 2-4 positive roots, found {other}"),
        }
    }
}

impl fmt::Display for SubsystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubsystemKind::A1A1 => "A1xA1",
            SubsystemKind::A2 => "A2",
            SubsystemKind::B2 => "B2",
        })
    }
}

/// The positive part of one rank-two subsystem, sorted canonically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RankTwoSubsystem {
    kind: SubsystemKind,
    roots: Vec<Root>,
}

impl RankTwoSubsystem {
    /// Closes the plane spanned by two roots inside the positive system of
    /// `ctype`.
    pub fn spanned_by(ctype: CoxeterType, a: Root, b: Root) -> Result<RankTwoSubsystem> {
        if !a.is_valid_for(ctype) || !b.is_valid_for(ctype) {
            return Err(Error::InvalidRoot(format!("{a} or {b} invalid for {ctype}")));
        }
        if a.abs() == b.abs() {
            return Err(Error::InvalidRoot(format!("{a} and {b} span only a line")));
        }
        let all = positive_roots(ctype);
        let m = ctype.degree();
        let ca = a.coords(m);
        let cb = b.coords(m);
        let roots: Vec<Root> = all
            .into_iter()
            .filter(|r| in_plane(&ca, &cb, &r.coords(m)))
            .collect();
        Ok(RankTwoSubsystem { kind: SubsystemKind::from_count(roots.len()), roots })
    }

    fn from_sorted_roots(roots: Vec<Root>) -> RankTwoSubsystem {
        debug_assert!(roots.windows(2).all(|p| p[0] < p[1]));
        RankTwoSubsystem { kind: SubsystemKind::from_count(roots.len()), roots }
    }

    pub fn kind(&self) -> SubsystemKind {
        self.kind
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }
}

impl fmt::Display for RankTwoSubsystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{", self.kind)?;
        for (k, r) in self.roots.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("}")
    }
}

/// A sorted, deduplicated set of rank-two subsystems.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SeparationSet {
    members: Vec<RankTwoSubsystem>,
}

impl SeparationSet {
    pub fn from_members(mut members: Vec<RankTwoSubsystem>) -> SeparationSet {
        members.sort_unstable();
        members.dedup();
        SeparationSet { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[RankTwoSubsystem] {
        &self.members
    }

    pub fn contains(&self, sub: &RankTwoSubsystem) -> bool {
        self.members.binary_search(sub).is_ok()
    }

    /// Members of exactly one of the two sets.
    pub fn symmetric_difference(&self, other: &SeparationSet) -> SeparationSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.members.len() && j < other.members.len() {
            match self.members[i].cmp(&other.members[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.members[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.members[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.members[i..]);
        out.extend_from_slice(&other.members[j..]);
        SeparationSet { members: out }
    }
}

impl<'a> IntoIterator for &'a SeparationSet {
    type Item = &'a RankTwoSubsystem;
    type IntoIter = std::slice::Iter<'a, RankTwoSubsystem>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// All rank-two subsystems of `w` whose positive parts lie inside the roots
/// crossed by its reduced words.
pub fn rank_two_subsystems(w: &GroupElement) -> SeparationSet {
    SubsystemIndex::for_element(w).all_subsystems()
}

/// Number of rank-two subsystems of `w`.
pub fn l2_size(w: &GroupElement) -> usize {
    SubsystemIndex::for_element(w).subsystem_count()
}

/// The subsystems on which two reduced words of the same element cross their
/// roots in opposite orders.
pub fn separation(a: &ReducedWord, b: &ReducedWord) -> Result<SeparationSet> {
    if a.ctype() != b.ctype() {
        return Err(Error::TypeMismatch(a.ctype(), b.ctype()));
    }
    let w = a.element();
    if w != b.element() {
        return Err(Error::DifferentElements);
    }
    let index = SubsystemIndex::for_element(&w);
    let pa = index.positions(a)?;
    let pb = index.positions(b)?;
    Ok(index.materialize(&index.separated_indices(&pa, &pb)))
}

/// Checks the symmetric-difference law on a triple of reduced words of one
/// element: the subsystems separating `a` from `c` are exactly those
/// separating `a` from `b` or `b` from `c`, but not both.
pub fn symmetric_difference_law_holds(
    a: &ReducedWord,
    b: &ReducedWord,
    c: &ReducedWord,
) -> Result<bool> {
    let ab = separation(a, b)?;
    let bc = separation(b, c)?;
    let ac = separation(a, c)?;
    Ok(ab.symmetric_difference(&bc) == ac)
}

/// Precomputed subsystem data for one group element, shared by every
/// separation query against it.
///
/// Roots crossed by the element's words get dense ids; each subsystem is the
/// sorted id-vector of its positive part. A word is summarized by its
/// *positions profile* — for each root id, the index at which the word's root
/// ordering crosses it — and two words disagree on a subsystem exactly when
/// the profile order of its members differs.
#[derive(Debug, Clone)]
pub struct SubsystemIndex {
    ctype: CoxeterType,
    ambient: Vec<Root>,
    id_of: HashMap<Root, u16>,
    subsystems: Vec<Vec<u16>>,
    kinds: Vec<SubsystemKind>,
}

impl SubsystemIndex {
    pub fn for_element(w: &GroupElement) -> SubsystemIndex {
        let ctype = w.ctype();
        let m = ctype.degree();
        let ambient = w.inverse().inversion_set();
        let id_of: HashMap<Root, u16> = ambient
            .iter()
            .enumerate()
            .map(|(i, &r)| (r, i as u16))
            .collect();
        let coords: Vec<Vec<i64>> = ambient.iter().map(|r| r.coords(m)).collect();

        // Closing a plane inside the full positive system and then testing
        // containment in the ambient set: planes reaching outside are not
        // subsystems of this element.
        let full = positive_roots(ctype);
        let mut seen: BTreeSet<Vec<u16>> = BTreeSet::new();
        for i in 0..ambient.len() {
            for j in i + 1..ambient.len() {
                let mut ids = Vec::with_capacity(4);
                let mut inside = true;
                for r in &full {
                    if in_plane(&coords[i], &coords[j], &r.coords(m)) {
                        match id_of.get(r) {
                            Some(&id) => ids.push(id),
                            None => {
                                inside = false;
                                break;
                            }
                        }
                    }
                }
                if inside {
                    ids.sort_unstable();
                    seen.insert(ids);
                }
            }
        }
        let subsystems: Vec<Vec<u16>> = seen.into_iter().collect();
        let kinds = subsystems
            .iter()
            .map(|ids| SubsystemKind::from_count(ids.len()))
            .collect();
        SubsystemIndex { ctype, ambient, id_of, subsystems, kinds }
    }

    pub fn ctype(&self) -> CoxeterType {
        self.ctype
    }

    /// The roots crossed by the element's reduced words, in id order.
    pub fn ambient(&self) -> &[Root] {
        &self.ambient
    }

    pub fn subsystem_count(&self) -> usize {
        self.subsystems.len()
    }

    pub fn root_id(&self, r: &Root) -> Option<u16> {
        self.id_of.get(r).copied()
    }

    /// Sorted member ids of subsystem `k`.
    pub fn member_ids(&self, k: usize) -> &[u16] {
        &self.subsystems[k]
    }

    pub fn kind(&self, k: usize) -> SubsystemKind {
        self.kinds[k]
    }

    /// The positions profile of a word: entry `id` is the index in the word's
    /// root ordering where that root is crossed. Fails for words of a
    /// different element.
    pub fn positions(&self, r: &ReducedWord) -> Result<Vec<u16>> {
        let ro = r.root_ordering();
        if ro.len() != self.ambient.len() {
            return Err(Error::DifferentElements);
        }
        let mut profile = vec![u16::MAX; self.ambient.len()];
        for (k, root) in ro.iter().enumerate() {
            let id = *self.id_of.get(root).ok_or(Error::DifferentElements)?;
            profile[id as usize] = k as u16;
        }
        Ok(profile)
    }

    /// Whether subsystem `k` is crossed in opposite orders by words with
    /// profiles `pa` and `pb`. The induced order on a subsystem is either a
    /// fixed sequence or its exact reverse, but this checks every member pair
    /// rather than relying on that.
    pub fn order_differs(&self, k: usize, pa: &[u16], pb: &[u16]) -> bool {
        let ids = &self.subsystems[k];
        for x in 0..ids.len() {
            for y in x + 1..ids.len() {
                let (i, j) = (ids[x] as usize, ids[y] as usize);
                if (pa[i] < pa[j]) != (pb[i] < pb[j]) {
                    return true;
                }
            }
        }
        false
    }

    pub fn separated_indices(&self, pa: &[u16], pb: &[u16]) -> Vec<usize> {
        (0..self.subsystems.len())
            .filter(|&k| self.order_differs(k, pa, pb))
            .collect()
    }

    pub fn separated_count(&self, pa: &[u16], pb: &[u16]) -> usize {
        (0..self.subsystems.len())
            .filter(|&k| self.order_differs(k, pa, pb))
            .count()
    }

    pub fn materialize(&self, indices: &[usize]) -> SeparationSet {
        let members = indices
            .iter()
            .map(|&k| {
                let roots = self.subsystems[k]
                    .iter()
                    .map(|&id| self.ambient[id as usize])
                    .collect();
                RankTwoSubsystem::from_sorted_roots(roots)
            })
            .collect();
        SeparationSet::from_members(members)
    }

    pub fn all_subsystems(&self) -> SeparationSet {
        let all: Vec<usize> = (0..self.subsystems.len()).collect();
        self.materialize(&all)
    }
}

/// Whether `c` lies in the plane spanned by independent vectors `a` and `b`,
/// decided by exact integer elimination on the 3-row matrix.
fn in_plane(a: &[i64], b: &[i64], c: &[i64]) -> bool {
    let mut rows = [a.to_vec(), b.to_vec(), c.to_vec()];
    rank_at_most_3(&mut rows) == 2
}

fn rank_at_most_3(rows: &mut [Vec<i64>; 3]) -> usize {
    let cols = rows[0].len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == 3 {
            break;
        }
        let Some(pivot) = (rank..3).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][col];
        for r in rank + 1..3 {
            let f = rows[r][col];
            if f != 0 {
                for c in col..cols {
                    rows[r][c] = rows[r][c] * p - rows[rank][c] * f;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Family;
    use crate::word::{leftward_sorting_word, rightward_sorting_word};

    fn ct(family: Family, rank: u8) -> CoxeterType {
        CoxeterType::new(family, rank).unwrap()
    }

    fn el(family: Family, rank: u8, w: &[i32]) -> GroupElement {
        GroupElement::from_window(ct(family, rank), w).unwrap()
    }

    #[test]
    fn plane_closure_depends_on_family() {
        // {e3-e1, e3+e1} closes to a full B2 in type B (picking up e1 and e3)
        // but stays an orthogonal pair in type D.
        let b = RankTwoSubsystem::spanned_by(ct(Family::B, 3), Root::diff(1, 3), Root::sum(1, 3))
            .unwrap();
        assert_eq!(b.kind(), SubsystemKind::B2);
        assert_eq!(b.positive_roots().len(), 4);
        assert!(b.positive_roots().contains(&Root::single(1)));

        let d = RankTwoSubsystem::spanned_by(ct(Family::D, 4), Root::diff(1, 3), Root::sum(1, 3))
            .unwrap();
        assert_eq!(d.kind(), SubsystemKind::A1A1);

        let a2 = RankTwoSubsystem::spanned_by(ct(Family::A, 2), Root::diff(1, 2), Root::diff(2, 3))
            .unwrap();
        assert_eq!(a2.kind(), SubsystemKind::A2);
        assert_eq!(
            a2.positive_roots(),
            &[Root::diff(1, 2), Root::diff(1, 3), Root::diff(2, 3)]
        );

        assert!(RankTwoSubsystem::spanned_by(
            ct(Family::A, 2),
            Root::diff(1, 2),
            Root::diff(1, 2).negated()
        )
        .is_err());
    }

    #[test]
    fn subsystems_of_3412() {
        let w = el(Family::A, 3, &[3, 4, 1, 2]);
        let l2 = rank_two_subsystems(&w);
        assert_eq!(l2.len(), 2);
        assert!(l2.members().iter().all(|s| s.kind() == SubsystemKind::A1A1));
        let shown: Vec<String> = l2.members().iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["A1xA1{e3-e1,e4-e2}", "A1xA1{e4-e1,e3-e2}"]);
    }

    #[test]
    fn subsystem_counts_frozen() {
        assert_eq!(l2_size(&GroupElement::longest(ct(Family::A, 3))), 7);
        assert_eq!(l2_size(&GroupElement::longest(ct(Family::B, 2))), 1);
        assert_eq!(l2_size(&GroupElement::longest(ct(Family::B, 3))), 13);
        assert_eq!(l2_size(&GroupElement::longest(ct(Family::D, 4))), 34);
        assert_eq!(l2_size(&GroupElement::identity(ct(Family::A, 3))), 0);

        // Kind breakdown for the longest element of A3: four braid planes,
        // three orthogonal pairs.
        let l2 = rank_two_subsystems(&GroupElement::longest(ct(Family::A, 3)));
        let a2 = l2.members().iter().filter(|s| s.kind() == SubsystemKind::A2).count();
        assert_eq!((a2, l2.len() - a2), (4, 3));
    }

    #[test]
    fn separation_of_sorting_words() {
        let w0 = GroupElement::longest(ct(Family::A, 3));
        let r1 = leftward_sorting_word(&w0).unwrap();
        let r2 = rightward_sorting_word(&w0).unwrap();
        assert_eq!(separation(&r1, &r2).unwrap().len(), 6);
        assert!(separation(&r1, &r1).unwrap().is_empty());

        let w0 = GroupElement::longest(ct(Family::A, 2));
        let r1 = leftward_sorting_word(&w0).unwrap();
        let r2 = rightward_sorting_word(&w0).unwrap();
        let sep = separation(&r1, &r2).unwrap();
        assert_eq!(sep.len(), 1);
        assert_eq!(sep.members()[0].kind(), SubsystemKind::A2);
    }

    #[test]
    fn separation_of_adjacent_words() {
        let w = el(Family::A, 3, &[3, 4, 1, 2]);
        let words = crate::word::enumerate_reduced_words(&w, None).unwrap();
        assert_eq!(words.len(), 2);
        let sep = separation(&words[0], &words[1]).unwrap();
        assert_eq!(sep.len(), 1);
        assert_eq!(sep.members()[0].to_string(), "A1xA1{e3-e1,e4-e2}");
    }

    #[test]
    fn separation_rejects_mismatches() {
        let w = GroupElement::longest(ct(Family::A, 2));
        let r1 = leftward_sorting_word(&w).unwrap();
        let other = leftward_sorting_word(&GroupElement::longest(ct(Family::A, 3))).unwrap();
        assert!(matches!(separation(&r1, &other), Err(Error::TypeMismatch(_, _))));

        let v = el(Family::A, 2, &[2, 3, 1]);
        let rv = leftward_sorting_word(&v).unwrap();
        assert!(matches!(separation(&r1, &rv), Err(Error::DifferentElements)));
    }

    #[test]
    fn symmetric_difference_law_small() {
        let w0 = GroupElement::longest(ct(Family::A, 3));
        let words = crate::word::enumerate_reduced_words(&w0, None).unwrap();
        for a in (0..words.len()).step_by(3) {
            for b in (0..words.len()).step_by(5) {
                for c in (0..words.len()).step_by(7) {
                    assert!(symmetric_difference_law_holds(
                        &words[a], &words[b], &words[c]
                    )
                    .unwrap());
                }
            }
        }
    }

    #[test]
    fn index_profiles() {
        let w = GroupElement::longest(ct(Family::B, 3));
        let index = SubsystemIndex::for_element(&w);
        assert_eq!(index.ambient().len(), 9);
        assert_eq!(index.subsystem_count(), 13);
        let words = crate::word::enumerate_reduced_words(&w, None).unwrap();
        let pa = index.positions(&words[0]).unwrap();
        let pb = index.positions(&words[1]).unwrap();
        assert_eq!(
            index.separated_count(&pa, &pb),
            separation(&words[0], &words[1]).unwrap().len()
        );
        // A word of a different element is rejected.
        let other = leftward_sorting_word(&GroupElement::longest(ct(Family::A, 3))).unwrap();
        assert!(index.positions(&other).is_err());
    }
}
