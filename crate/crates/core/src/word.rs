//! Reduced words, their root orderings, and the moves between them.
//!
//! A reduced word for `w` is a shortest sequence of generators multiplying to
//! `w` (letters act on the right, left to right). Two reduced words of the
//! same element differ by a sequence of *moves*: swapping adjacent commuting
//! letters, or reversing a braid run `aba -> bab` / `abab -> baba`. The moves
//! are the edges of the word graph built in [`crate::graph`].

use std::fmt;

use crate::coxeter::{CoxeterType, Family};
use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::root::{simple_roots, Root};

/// A reduced word of a group element. Construction through [`ReducedWord::try_new`]
/// guarantees reducedness, and every operation here preserves it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedWord {
    ctype: CoxeterType,
    letters: Vec<u8>,
}

/// Shape of a move between reduced words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveKind {
    /// Swap two adjacent letters whose generators commute.
    Commute,
    /// Reverse a run `aba -> bab` where `s_a s_b` has order 3.
    Braid3,
    /// Reverse a run `abab -> baba` where `s_a s_b` has order 4 (type `B`).
    Braid4,
}

impl MoveKind {
    /// Number of consecutive letters the move rewrites.
    pub fn width(self) -> usize {
        match self {
            MoveKind::Commute => 2,
            MoveKind::Braid3 => 3,
            MoveKind::Braid4 => 4,
        }
    }
}

/// A move applicable to a specific word: `kind.width()` letters starting at
/// (0-based) `position`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MoveSite {
    pub position: usize,
    pub kind: MoveKind,
}

impl ReducedWord {
    /// Validates that `letters` is a reduced word over the generators of
    /// `ctype`: each letter must be in range and must lengthen the prefix
    /// product.
    pub fn try_new(ctype: CoxeterType, letters: Vec<u8>) -> Result<ReducedWord> {
        let mut prefix = GroupElement::identity(ctype);
        for &i in &letters {
            if !ctype.is_letter(i) {
                return Err(Error::LetterOutOfRange { letter: i, ctype });
            }
            if prefix.is_right_descent(i) {
                return Err(Error::NotReduced);
            }
            prefix.apply_letter_right(i);
        }
        Ok(ReducedWord { ctype, letters })
    }

    /// Wraps letters already known to form a reduced word.
    pub(crate) fn new_unchecked(ctype: CoxeterType, letters: Vec<u8>) -> ReducedWord {
        debug_assert!(
            ReducedWord::try_new(ctype, letters.clone()).is_ok(),
            "letters {letters:?} are not a reduced word for {ctype}"
        );
        ReducedWord { ctype, letters }
    }

    /// Parses a comma-separated letter list such as `3,2,3,1,2,3`. The empty
    /// string is the empty word.
    pub fn parse(ctype: CoxeterType, text: &str) -> Result<ReducedWord> {
        let text = text.trim();
        if text.is_empty() {
            return ReducedWord::try_new(ctype, Vec::new());
        }
        let letters = text
            .split(',')
            .map(|t| t.trim().parse::<u8>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidWindow(format!("word {text:?}: {e}")))?;
        ReducedWord::try_new(ctype, letters)
    }

    pub fn ctype(&self) -> CoxeterType {
        self.ctype
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The group element this word multiplies to.
    pub fn element(&self) -> GroupElement {
        let mut w = GroupElement::identity(self.ctype);
        for &i in &self.letters {
            w.apply_letter_right(i);
        }
        w
    }

    /// The positive roots crossed by the word, in word order: entry `j` is the
    /// prefix product of the first `j` letters applied to the simple root of
    /// letter `j + 1`. All entries are positive precisely because the word is
    /// reduced, and as a set they are the inversions of the inverse element.
    pub fn root_ordering(&self) -> Vec<Root> {
        let simples = simple_roots(self.ctype);
        let mut prefix = GroupElement::identity(self.ctype);
        let mut out = Vec::with_capacity(self.letters.len());
        for &i in &self.letters {
            let beta = prefix.act(&simples[i as usize - 1]);
            debug_assert!(beta.is_positive());
            out.push(beta);
            prefix.apply_letter_right(i);
        }
        out
    }

    /// [`Self::root_ordering`] reversed: the order in which a sorting of the
    /// window back to the identity (peeling letters off the right) crosses the
    /// same roots.
    pub fn reverse_root_ordering(&self) -> Vec<Root> {
        let mut ro = self.root_ordering();
        ro.reverse();
        ro
    }

    /// All moves applicable to this word, in position order.
    pub fn move_sites(&self) -> Vec<MoveSite> {
        let mut sites = Vec::new();
        collect_move_sites(self.ctype, &self.letters, &mut sites);
        sites
    }

    /// Applies one move, returning the neighboring reduced word.
    pub fn apply_move(&self, site: MoveSite) -> Result<ReducedWord> {
        let w = &self.letters;
        let p = site.position;
        let bad = || Error::InvalidSite { position: p };
        if p + site.kind.width() > w.len() {
            return Err(bad());
        }
        let (a, b) = (w[p], w[p + 1]);
        if a == b {
            return Err(bad());
        }
        let order = self.ctype.braid_order(a, b);
        let fits = match site.kind {
            MoveKind::Commute => order == 2,
            MoveKind::Braid3 => order == 3 && w[p + 2] == a,
            MoveKind::Braid4 => order == 4 && w[p + 2] == a && w[p + 3] == b,
        };
        if !fits {
            return Err(bad());
        }
        let mut letters = w.clone();
        apply_site_in_place(&mut letters, site);
        debug_assert_eq!(
            ReducedWord { ctype: self.ctype, letters: letters.clone() }.element(),
            self.element()
        );
        Ok(ReducedWord { ctype: self.ctype, letters })
    }

    /// The word read backwards: a reduced word of the inverse element.
    pub fn reversed(&self) -> ReducedWord {
        let letters = self.letters.iter().rev().copied().collect();
        ReducedWord::new_unchecked(self.ctype, letters)
    }

    /// The opposite word: reverse the letters and relabel each through the
    /// diagram symmetry induced by conjugation with the longest element. This
    /// produces a reduced word of `w0 · w⁻¹ · w0`; when the underlying element
    /// is the longest element itself (so `w⁻¹ = w0`), the opposite word is
    /// again a word of `w0`, and it sits at maximal separation from `self`.
    pub fn opposite(&self) -> ReducedWord {
        let rank = self.ctype.rank();
        let relabel = |i: u8| -> u8 {
            match self.ctype.family() {
                Family::A => rank + 1 - i,
                Family::B => i,
                Family::D => {
                    if rank % 2 == 1 && i <= 2 {
                        3 - i
                    } else {
                        i
                    }
                }
            }
        };
        let letters = self.letters.iter().rev().map(|&i| relabel(i)).collect();
        ReducedWord::new_unchecked(self.ctype, letters)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in &self.letters {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        Ok(())
    }
}

/// Finds every move site of `letters`, clearing and filling `sites`.
pub(crate) fn collect_move_sites(ctype: CoxeterType, w: &[u8], sites: &mut Vec<MoveSite>) {
    sites.clear();
    for p in 0..w.len().saturating_sub(1) {
        let (a, b) = (w[p], w[p + 1]);
        match ctype.braid_order(a, b) {
            2 => sites.push(MoveSite { position: p, kind: MoveKind::Commute }),
            3 if p + 2 < w.len() && w[p + 2] == a => {
                sites.push(MoveSite { position: p, kind: MoveKind::Braid3 })
            }
            4 if p + 3 < w.len() && w[p + 2] == a && w[p + 3] == b => {
                sites.push(MoveSite { position: p, kind: MoveKind::Braid4 })
            }
            _ => {}
        }
    }
}

/// Rewrites the letters of a site already known to be applicable.
pub(crate) fn apply_site_in_place(w: &mut [u8], site: MoveSite) {
    let p = site.position;
    let (a, b) = (w[p], w[p + 1]);
    match site.kind {
        MoveKind::Commute => w.swap(p, p + 1),
        MoveKind::Braid3 => {
            w[p] = b;
            w[p + 1] = a;
            w[p + 2] = b;
        }
        MoveKind::Braid4 => {
            w[p] = b;
            w[p + 1] = a;
            w[p + 2] = b;
            w[p + 3] = a;
        }
    }
}

/// Fixed-width storage for every reduced word of one element: `count` words of
/// `word_len` letters each, concatenated. Lexicographically sorted, so
/// membership lookups are binary searches.
#[derive(Debug, Clone, Default)]
pub(crate) struct FlatWords {
    word_len: usize,
    count: usize,
    data: Vec<u8>,
}

impl FlatWords {
    fn with_len(word_len: usize) -> FlatWords {
        FlatWords { word_len, count: 0, data: Vec::new() }
    }

    /// Reassembles storage read back from a cache file.
    pub(crate) fn from_parts(word_len: usize, count: usize, data: Vec<u8>) -> FlatWords {
        assert_eq!(data.len(), word_len * count);
        FlatWords { word_len, count, data }
    }

    pub(crate) fn word_len(&self) -> usize {
        self.word_len
    }

    pub(crate) fn count(&self) -> usize {
        self.count
    }

    pub(crate) fn word(&self, i: usize) -> &[u8] {
        &self.data[i * self.word_len..(i + 1) * self.word_len]
    }

    fn push(&mut self, letters: &[u8]) {
        debug_assert_eq!(letters.len(), self.word_len);
        self.data.extend_from_slice(letters);
        self.count += 1;
    }

    /// Index of `letters`, if present.
    pub(crate) fn position_of(&self, letters: &[u8]) -> Option<usize> {
        if self.word_len == 0 {
            return (self.count == 1 && letters.is_empty()).then_some(0);
        }
        let mut lo = 0usize;
        let mut hi = self.count;
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.word(mid).cmp(letters) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }
}

/// Enumerates every reduced word of `w` in lexicographic order, stopping with
/// [`Error::CapExceeded`] as soon as more than `cap` words exist.
///
/// The walk peels letters off the *left*: the first letter of a reduced word
/// can be any left descent, i.e. any right descent of the inverse, so the
/// search tracks only the inverse element and right-multiplies it — an O(1)
/// window operation per step. Trying letters in increasing order makes the
/// output arrive already sorted.
pub(crate) fn enumerate_flat(w: &GroupElement, cap: Option<usize>) -> Result<FlatWords> {
    let cap = cap.unwrap_or(usize::MAX);
    let word_len = w.length();
    let mut flat = FlatWords::with_len(word_len);
    let mut inv = w.inverse();
    let mut stack: Vec<u8> = Vec::with_capacity(word_len);

    fn walk(
        inv: &mut GroupElement,
        stack: &mut Vec<u8>,
        word_len: usize,
        flat: &mut FlatWords,
        cap: usize,
    ) -> Result<()> {
        if stack.len() == word_len {
            if flat.count() == cap {
                return Err(Error::CapExceeded { partial: cap });
            }
            flat.push(stack);
            return Ok(());
        }
        for i in 1..=inv.ctype().rank() {
            if inv.is_right_descent(i) {
                stack.push(i);
                inv.apply_letter_right(i);
                let r = walk(inv, stack, word_len, flat, cap);
                inv.apply_letter_right(i);
                stack.pop();
                r?;
            }
        }
        Ok(())
    }

    walk(&mut inv, &mut stack, word_len, &mut flat, cap)?;
    Ok(flat)
}

/// Every reduced word of `w`, lexicographically sorted. `cap` bounds how many
/// will be materialized before giving up.
pub fn enumerate_reduced_words(
    w: &GroupElement,
    cap: Option<usize>,
) -> Result<Vec<ReducedWord>> {
    let flat = enumerate_flat(w, cap)?;
    Ok((0..flat.count())
        .map(|i| ReducedWord::new_unchecked(w.ctype(), flat.word(i).to_vec()))
        .collect())
}

/// The type `A` sorting word that bubbles each value to its place starting
/// from the smallest: move 1 to position 1, then 2 to position 2, and so on.
/// Recording the swap positions and reading the record backwards yields a
/// canonical reduced word of `w`.
pub fn leftward_sorting_word(w: &GroupElement) -> Result<ReducedWord> {
    sorting_word(w, false)
}

/// The mirror-image canonical word: move the largest value to the last
/// position first, then the next largest, and so on.
pub fn rightward_sorting_word(w: &GroupElement) -> Result<ReducedWord> {
    sorting_word(w, true)
}

fn sorting_word(w: &GroupElement, rightward: bool) -> Result<ReducedWord> {
    if w.ctype().family() != Family::A {
        return Err(Error::WrongFamily { expected: Family::A, found: w.ctype() });
    }
    let mut win: Vec<i32> = w.window().to_vec();
    let m = win.len();
    let mut steps: Vec<u8> = Vec::with_capacity(w.length());
    if rightward {
        for v in (1..=m as i32).rev() {
            let q = win.iter().position(|&x| x == v).expect("value present");
            for idx in q..v as usize - 1 {
                win.swap(idx, idx + 1);
                steps.push(idx as u8 + 1);
            }
        }
    } else {
        for v in 1..=m as i32 {
            let q = win.iter().position(|&x| x == v).expect("value present");
            for idx in (v as usize..=q).rev() {
                win.swap(idx - 1, idx);
                steps.push(idx as u8);
            }
        }
    }
    steps.reverse();
    let word = ReducedWord::new_unchecked(w.ctype(), steps);
    debug_assert_eq!(word.element(), *w);
    Ok(word)
}

/// The factored reduced word of the longest element of `D_rank`: the `j`-th
/// factor walks down the chain from letter `j` to 3, crosses the fork (in an
/// order alternating with the parity of `j`), and walks back up to `j`.
/// Its reverse root ordering lists, for each coordinate from the top down,
/// first the differences and then the sums against all lower coordinates.
pub fn d_longest_factored_word(rank: u8) -> Result<ReducedWord> {
    let ctype = CoxeterType::new(Family::D, rank)?;
    let mut letters: Vec<u8> = Vec::with_capacity(ctype.positive_root_count());
    for j in 2..=rank {
        letters.extend((3..=j).rev());
        if j % 2 == 0 {
            letters.extend([1, 2]);
        } else {
            letters.extend([2, 1]);
        }
        letters.extend(3..=j);
    }
    let word = ReducedWord::try_new(ctype, letters)?;
    assert_eq!(
        word.element(),
        GroupElement::longest(ctype),
        "factored word must multiply to the longest element of D{rank}"
    );
    Ok(word)
}

/// The valley word of `D_rank`: letters descend the chain from the top to
/// one fork letter, cross to the other, and climb back up. Its element has
/// window `[-1, 2, ..., rank-1, -rank]` and exactly two reduced words — the
/// valley word and the one obtained by commuting the two fork letters — so
/// its word graph is a single edge while its inversion set still carries
/// `rank - 1` rank-two subsystems.
pub fn d_valley_word(rank: u8) -> Result<ReducedWord> {
    let ctype = CoxeterType::new(Family::D, rank)?;
    let letters: Vec<u8> =
        (3..=rank).rev().chain([2, 1]).chain(3..=rank).collect();
    ReducedWord::try_new(ctype, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(family: Family, rank: u8) -> CoxeterType {
        CoxeterType::new(family, rank).unwrap()
    }

    fn word(family: Family, rank: u8, letters: &[u8]) -> ReducedWord {
        ReducedWord::try_new(ct(family, rank), letters.to_vec()).unwrap()
    }

    fn strings(roots: &[Root]) -> Vec<String> {
        roots.iter().map(Root::to_string).collect()
    }

    #[test]
    fn validation() {
        assert!(ReducedWord::try_new(ct(Family::A, 2), vec![1, 2, 1]).is_ok());
        assert!(matches!(
            ReducedWord::try_new(ct(Family::A, 2), vec![1, 1]),
            Err(Error::NotReduced)
        ));
        // s1 s2 s1 s2 has order... in A2 the product s1s2s1 = s2s1s2 already,
        // so a fourth alternating letter must backtrack.
        assert!(ReducedWord::try_new(ct(Family::A, 2), vec![1, 2, 1, 2]).is_err());
        assert!(ReducedWord::try_new(ct(Family::B, 2), vec![1, 2, 1, 2]).is_ok());
        assert!(matches!(
            ReducedWord::try_new(ct(Family::A, 2), vec![3]),
            Err(Error::LetterOutOfRange { .. })
        ));
        assert!(ReducedWord::try_new(ct(Family::A, 2), vec![]).is_ok());
    }

    #[test]
    fn element_and_parse() {
        let r = word(Family::A, 3, &[2, 1, 3, 2]);
        assert_eq!(r.element().window(), &[3, 4, 1, 2]);
        assert_eq!(r.to_string(), "2,1,3,2");
        assert_eq!(ReducedWord::parse(ct(Family::A, 3), "2, 1, 3, 2").unwrap(), r);
        assert!(ReducedWord::parse(ct(Family::A, 3), "").unwrap().is_empty());
    }

    #[test]
    fn root_ordering_type_a() {
        let r = word(Family::A, 3, &[2, 1, 3, 2]);
        assert_eq!(strings(&r.root_ordering()), ["e3-e2", "e3-e1", "e4-e2", "e4-e1"]);
        assert_eq!(
            strings(&r.reverse_root_ordering()),
            ["e4-e1", "e4-e2", "e3-e1", "e3-e2"]
        );
    }

    #[test]
    fn root_ordering_type_d() {
        let r = word(Family::D, 4, &[1, 3, 4, 3, 2]);
        assert_eq!(r.element().window(), &[4, -2, 3, -1]);
        assert_eq!(
            strings(&r.reverse_root_ordering()),
            ["e4+e2", "e4-e3", "e4+e1", "e3+e1", "e2+e1"]
        );
    }

    #[test]
    fn root_ordering_set_is_inverse_inversion_set() {
        for r in [
            word(Family::A, 4, &[2, 1, 3, 2, 4]),
            word(Family::B, 3, &[1, 2, 1, 3, 2]),
            word(Family::D, 4, &[1, 3, 4, 3, 2]),
        ] {
            let mut ro = r.root_ordering();
            ro.sort_unstable();
            assert_eq!(ro, r.element().inverse().inversion_set());
        }
    }

    #[test]
    fn moves_commute() {
        let r = word(Family::A, 3, &[2, 1, 3, 2]);
        let sites = r.move_sites();
        assert_eq!(sites, vec![MoveSite { position: 1, kind: MoveKind::Commute }]);
        let s = r.apply_move(sites[0]).unwrap();
        assert_eq!(s.letters(), &[2, 3, 1, 2]);
        assert_eq!(s.apply_move(s.move_sites()[0]).unwrap(), r);
        assert!(r.apply_move(MoveSite { position: 0, kind: MoveKind::Commute }).is_err());
        assert!(r.apply_move(MoveSite { position: 9, kind: MoveKind::Braid3 }).is_err());
    }

    #[test]
    fn moves_braid() {
        let r = word(Family::A, 2, &[1, 2, 1]);
        let sites = r.move_sites();
        assert_eq!(sites, vec![MoveSite { position: 0, kind: MoveKind::Braid3 }]);
        assert_eq!(r.apply_move(sites[0]).unwrap().letters(), &[2, 1, 2]);

        let r = word(Family::B, 2, &[1, 2, 1, 2]);
        let sites = r.move_sites();
        assert_eq!(sites, vec![MoveSite { position: 0, kind: MoveKind::Braid4 }]);
        assert_eq!(r.apply_move(sites[0]).unwrap().letters(), &[2, 1, 2, 1]);
        // A 3-run inside a width-4 braid pair is not a usable site.
        assert!(r.apply_move(MoveSite { position: 0, kind: MoveKind::Braid3 }).is_err());
    }

    #[test]
    fn enumerate_small_elements() {
        let w = GroupElement::from_window(ct(Family::A, 3), &[3, 4, 1, 2]).unwrap();
        let words = enumerate_reduced_words(&w, None).unwrap();
        let letters: Vec<&[u8]> = words.iter().map(ReducedWord::letters).collect();
        assert_eq!(letters, vec![&[2, 1, 3, 2][..], &[2, 3, 1, 2][..]]);

        let w0 = GroupElement::longest(ct(Family::A, 3));
        assert_eq!(enumerate_reduced_words(&w0, None).unwrap().len(), 16);

        let b2 = GroupElement::longest(ct(Family::B, 2));
        assert_eq!(enumerate_reduced_words(&b2, None).unwrap().len(), 2);

        let id = GroupElement::identity(ct(Family::A, 3));
        let words = enumerate_reduced_words(&id, None).unwrap();
        assert_eq!(words.len(), 1);
        assert!(words[0].is_empty());
    }

    #[test]
    fn enumerate_is_sorted_and_caps() {
        let w0 = GroupElement::longest(ct(Family::A, 3));
        let words = enumerate_reduced_words(&w0, Some(16)).unwrap();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        assert!(matches!(
            enumerate_reduced_words(&w0, Some(5)),
            Err(Error::CapExceeded { partial: 5 })
        ));
    }

    #[test]
    fn sorting_words_type_a() {
        let w321 = GroupElement::longest(ct(Family::A, 2));
        assert_eq!(leftward_sorting_word(&w321).unwrap().letters(), &[2, 1, 2]);
        assert_eq!(rightward_sorting_word(&w321).unwrap().letters(), &[1, 2, 1]);

        let w4321 = GroupElement::longest(ct(Family::A, 3));
        assert_eq!(leftward_sorting_word(&w4321).unwrap().letters(), &[3, 2, 3, 1, 2, 3]);
        assert_eq!(rightward_sorting_word(&w4321).unwrap().letters(), &[1, 2, 1, 3, 2, 1]);

        let w = GroupElement::from_window(ct(Family::A, 3), &[3, 4, 1, 2]).unwrap();
        for r in [leftward_sorting_word(&w).unwrap(), rightward_sorting_word(&w).unwrap()] {
            assert_eq!(r.element(), w);
        }

        let id = GroupElement::identity(ct(Family::A, 3));
        assert!(leftward_sorting_word(&id).unwrap().is_empty());

        let b = GroupElement::identity(ct(Family::B, 2));
        assert!(matches!(
            leftward_sorting_word(&b),
            Err(Error::WrongFamily { expected: Family::A, .. })
        ));
    }

    #[test]
    fn factored_word_type_d() {
        let r = d_longest_factored_word(4).unwrap();
        assert_eq!(r.letters(), &[1, 2, 3, 2, 1, 3, 4, 3, 1, 2, 3, 4]);
        for rank in 4..=6 {
            let r = d_longest_factored_word(rank).unwrap();
            let ctype = ct(Family::D, rank);
            assert_eq!(r.element(), GroupElement::longest(ctype));
            assert_eq!(r.len(), ctype.positive_root_count());
        }
        assert!(matches!(d_longest_factored_word(3), Err(Error::RankTooSmall { .. })));
    }

    #[test]
    fn opposite_words() {
        // Rank 2: the opposite exchanges the two words of the longest element.
        let r = word(Family::A, 2, &[1, 2, 1]);
        assert_eq!(r.opposite().letters(), &[2, 1, 2]);

        // The opposite of a longest-element word is again a longest-element word.
        for r in [
            leftward_sorting_word(&GroupElement::longest(ct(Family::A, 4))).unwrap(),
            ReducedWord::try_new(ct(Family::B, 2), vec![1, 2, 1, 2]).unwrap(),
            d_longest_factored_word(4).unwrap(),
            d_longest_factored_word(5).unwrap(),
        ] {
            let opp = r.opposite();
            assert_eq!(opp.element(), r.element());
            assert_eq!(opp.opposite(), r);
        }

        let rev = word(Family::A, 3, &[2, 1, 3, 2]).reversed();
        assert_eq!(rev.letters(), &[2, 3, 1, 2]);
        assert_eq!(rev.element().window(), &[3, 4, 1, 2]);
    }

    #[test]
    fn valley_words() {
        let r = d_valley_word(4).unwrap();
        assert_eq!(r.letters(), &[4, 3, 2, 1, 3, 4]);
        assert_eq!(r.element().window(), &[-1, 2, 3, -4]);

        for rank in 4..=6u8 {
            let r = d_valley_word(rank).unwrap();
            assert_eq!(r.len(), 2 * rank as usize - 2);
            let expected: Vec<i32> = std::iter::once(-1)
                .chain(2..rank as i32)
                .chain(std::iter::once(-(rank as i32)))
                .collect();
            assert_eq!(r.element().window(), expected.as_slice());
            let words = enumerate_reduced_words(&r.element(), None).unwrap();
            assert_eq!(words.len(), 2);
        }
        assert!(matches!(d_valley_word(2), Err(Error::RankTooSmall { .. })));
    }
}
