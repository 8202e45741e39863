//! The word graph of a group element.
//!
//! Vertices are the reduced words of `w` in lexicographic order; edges join
//! words differing by one move. The graph is connected for every `w`, so BFS
//! reaches everything. Distances dominate separation-set sizes, and a word
//! whose distance to *every* other word equals the separation size is called
//! accessible; finding one (or certifying none exists) is the expensive sweep
//! this module is built around.

use std::collections::VecDeque;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::coxeter::{CoxeterType, Family};
use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::root::simple_roots;
use crate::subsystem::SubsystemIndex;
use crate::word::{
    apply_site_in_place, collect_move_sites, enumerate_flat, FlatWords, MoveSite, ReducedWord,
};

/// Result of a diameter computation. `exact` is set when every vertex served
/// as a BFS source; otherwise `lower_bound` is still a true lower bound,
/// realized by the recorded vertex pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiameterOutcome {
    pub lower_bound: usize,
    pub exact: bool,
    pub source: usize,
    pub target: usize,
}

/// The graph on all reduced words of one element, with compressed adjacency.
#[derive(Debug, Clone)]
pub struct WordGraph {
    element: GroupElement,
    words: FlatWords,
    offsets: Vec<u32>,
    adjacency: Vec<u32>,
}

impl WordGraph {
    /// Enumerates the reduced words of `w` and wires up all single-move edges.
    /// `cap` bounds the vertex count ([`Error::CapExceeded`] beyond it).
    pub fn build(w: &GroupElement, cap: Option<usize>) -> Result<WordGraph> {
        let words = enumerate_flat(w, cap)?;
        Ok(WordGraph::assemble(w.clone(), words))
    }

    fn assemble(element: GroupElement, words: FlatWords) -> WordGraph {
        let ctype = element.ctype();
        let n = words.count();
        let per_vertex: Vec<Vec<u32>> = (0..n)
            .into_par_iter()
            .map_init(
                || (Vec::new(), vec![0u8; words.word_len()]),
                |(sites, buf), i| {
                    let letters = words.word(i);
                    collect_move_sites(ctype, letters, sites);
                    let mut out = Vec::with_capacity(sites.len());
                    for &site in sites.iter() {
                        buf.copy_from_slice(letters);
                        apply_site_in_place(buf, site);
                        let j = words
                            .position_of(buf)
                            .expect("a move image is again an enumerated reduced word");
                        out.push(j as u32);
                    }
                    out
                },
            )
            .collect();
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0u32);
        let mut adjacency = Vec::new();
        for neigh in &per_vertex {
            adjacency.extend_from_slice(neigh);
            offsets.push(adjacency.len() as u32);
        }
        WordGraph { element, words, offsets, adjacency }
    }

    pub fn element(&self) -> &GroupElement {
        &self.element
    }

    pub fn ctype(&self) -> CoxeterType {
        self.element.ctype()
    }

    pub fn vertex_count(&self) -> usize {
        self.words.count()
    }

    /// Each move is counted once even though it appears in two adjacency lists.
    pub fn edge_count(&self) -> usize {
        self.adjacency.len() / 2
    }

    pub fn letters(&self, v: usize) -> &[u8] {
        self.words.word(v)
    }

    pub fn word(&self, v: usize) -> ReducedWord {
        ReducedWord::new_unchecked(self.ctype(), self.words.word(v).to_vec())
    }

    /// Vertex index of a reduced word of this element.
    pub fn index_of(&self, r: &ReducedWord) -> Option<usize> {
        (r.ctype() == self.ctype())
            .then(|| self.words.position_of(r.letters()))
            .flatten()
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[self.offsets[v] as usize..self.offsets[v + 1] as usize]
    }

    /// BFS distances from `src` to every vertex. The graph is connected, so
    /// every entry is finite.
    pub fn distances_from(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src as u32);
        while let Some(v) = queue.pop_front() {
            let d = dist[v as usize] + 1;
            for &u in self.neighbors(v as usize) {
                if dist[u as usize] == u32::MAX {
                    dist[u as usize] = d;
                    queue.push_back(u);
                }
            }
        }
        debug_assert!(dist.iter().all(|&d| d != u32::MAX), "word graph is connected");
        dist
    }

    pub fn distance(&self, a: usize, b: usize) -> usize {
        self.distances_from(a)[b] as usize
    }

    pub fn eccentricity(&self, v: usize) -> usize {
        *self.distances_from(v).iter().max().unwrap() as usize
    }

    /// Exact diameter when `source_budget` covers every vertex (the default),
    /// otherwise the best lower bound from BFS over the first vertices in
    /// index order. Ties resolve to the smallest source, then target, so
    /// outcomes are reproducible.
    pub fn diameter(&self, source_budget: Option<usize>) -> DiameterOutcome {
        let n = self.vertex_count();
        let limit = source_budget.unwrap_or(n).min(n);
        let best = (0..limit)
            .into_par_iter()
            .map(|src| {
                let dist = self.distances_from(src);
                let (target, d) = dist
                    .iter()
                    .enumerate()
                    .max_by_key(|&(i, &d)| (d, std::cmp::Reverse(i)))
                    .unwrap();
                (*d as usize, src, target)
            })
            .reduce(
                || (0usize, usize::MAX, usize::MAX),
                |a, b| {
                    let key = |(d, s, t): (usize, usize, usize)| {
                        (d, std::cmp::Reverse(s), std::cmp::Reverse(t))
                    };
                    if key(b) > key(a) {
                        b
                    } else {
                        a
                    }
                },
            );
        let (lower_bound, mut source, mut target) = best;
        if source == usize::MAX {
            // Zero sources (empty budget on a nonempty graph): report the
            // trivial bound.
            source = 0;
            target = 0;
        }
        DiameterOutcome { lower_bound, exact: limit == n, source, target }
    }

    /// Whether vertex `v` realizes the separation lower bound against every
    /// vertex: `d(v, u) == |separation(v, u)|` for all `u`. Checked directly
    /// by one BFS plus a parallel pass of profile comparisons.
    pub fn is_accessible(&self, v: usize) -> bool {
        let index = SubsystemIndex::for_element(&self.element);
        let pv = index
            .positions(&self.word(v))
            .expect("vertex word belongs to the element");
        let dist = self.distances_from(v);
        (0..self.vertex_count()).into_par_iter().all(|u| {
            let pu = index
                .positions(&self.word(u))
                .expect("vertex word belongs to the element");
            dist[u] as usize == index.separated_count(&pv, &pu)
        })
    }

    /// Largest excess of distance over separation from `v`; zero exactly when
    /// `v` is accessible.
    pub fn accessibility_defect(&self, v: usize) -> usize {
        let index = SubsystemIndex::for_element(&self.element);
        let pv = index
            .positions(&self.word(v))
            .expect("vertex word belongs to the element");
        let dist = self.distances_from(v);
        (0..self.vertex_count())
            .into_par_iter()
            .map(|u| {
                let pu = index
                    .positions(&self.word(u))
                    .expect("vertex word belongs to the element");
                let sep = index.separated_count(&pv, &pu);
                let d = dist[u] as usize;
                assert!(d >= sep, "distance can never undercut separation");
                d - sep
            })
            .max()
            .unwrap_or(0)
    }

    /// First accessible vertex in index order among the first
    /// `candidate_budget` vertices, or `None` after a complete scan.
    /// [`Error::BudgetExceeded`] when the budget ran out inconclusively.
    ///
    /// Unlike [`Self::is_accessible`] this does not BFS: each candidate is
    /// tested by the downhill-move criterion of [`scan_accessible`], which
    /// needs only the word list.
    pub fn find_accessible(&self, candidate_budget: Option<usize>) -> Result<Option<usize>> {
        scan_accessible(&self.element, &self.words, candidate_budget)
    }

    /// Writes the graph to `dir` in the binary cache layout, keyed by type and
    /// window, replacing any previous cache atomically. Returns the file path.
    pub fn save_cache(&self, dir: &Path) -> Result<PathBuf> {
        fs::create_dir_all(dir)?;
        let path = cache_path(dir, &self.element);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        {
            let mut out = std::io::BufWriter::new(fs::File::create(&tmp)?);
            out.write_all(b"RWG1")?;
            out.write_all(&[family_code(self.ctype().family()), self.ctype().rank()])?;
            out.write_all(&[0u8; 2])?;
            let window = self.element.window();
            out.write_all(&(window.len() as u32).to_le_bytes())?;
            for &v in window {
                out.write_all(&v.to_le_bytes())?;
            }
            out.write_all(&(self.vertex_count() as u64).to_le_bytes())?;
            out.write_all(&(self.words.word_len() as u32).to_le_bytes())?;
            for i in 0..self.vertex_count() {
                out.write_all(self.words.word(i))?;
            }
            for &o in &self.offsets {
                out.write_all(&o.to_le_bytes())?;
            }
            for &a in &self.adjacency {
                out.write_all(&a.to_le_bytes())?;
            }
            out.flush()?;
        }
        fs::rename(&tmp, &path)?;
        Ok(path)
    }

    /// Reads a graph previously written by [`Self::save_cache`].
    pub fn load_cache(path: &Path) -> Result<WordGraph> {
        let bytes = fs::read(path)?;
        let mut cur = Cursor { bytes: &bytes, at: 0 };
        let err = |msg: &str| Error::Cache(format!("{}: {msg}", path.display()));
        if cur.take(4)? != b"RWG1" {
            return Err(err("bad magic"));
        }
        let header = cur.take(4)?;
        let family = match header[0] {
            0 => Family::A,
            1 => Family::B,
            2 => Family::D,
            _ => return Err(err("unknown family code")),
        };
        let ctype = CoxeterType::new(family, header[1])
            .map_err(|e| err(&format!("bad type: {e}")))?;
        let m = cur.u32()? as usize;
        if m != ctype.degree() {
            return Err(err("window length mismatch"));
        }
        let mut window = Vec::with_capacity(m);
        for _ in 0..m {
            window.push(cur.i32()?);
        }
        let element = GroupElement::from_window(ctype, &window)
            .map_err(|e| err(&format!("bad window: {e}")))?;
        let count = cur.u64()? as usize;
        let word_len = cur.u32()? as usize;
        if word_len != element.length() {
            return Err(err("word length disagrees with element length"));
        }
        let data_len = count
            .checked_mul(word_len)
            .ok_or_else(|| err("word section overflows"))?;
        let data = cur.take(data_len)?.to_vec();
        let mut offsets = Vec::with_capacity(count + 1);
        for _ in 0..count + 1 {
            offsets.push(cur.u32()?);
        }
        if offsets[0] != 0 || offsets.windows(2).any(|p| p[0] > p[1]) {
            return Err(err("offsets not monotone"));
        }
        let adj_len = *offsets.last().unwrap() as usize;
        let mut adjacency = Vec::with_capacity(adj_len);
        for _ in 0..adj_len {
            let v = cur.u32()?;
            if v as usize >= count {
                return Err(err("neighbor index out of range"));
            }
            adjacency.push(v);
        }
        if cur.at != bytes.len() {
            return Err(err("trailing bytes"));
        }
        let words = FlatWords::from_parts(word_len, count, data);
        Ok(WordGraph { element, words, offsets, adjacency })
    }
}

/// Cache file location for the graph of `element` under `dir`.
pub fn cache_path(dir: &Path, element: &GroupElement) -> PathBuf {
    dir.join(format!("{}-{}.rwg", element.ctype(), element))
}

fn family_code(f: Family) -> u8 {
    match f {
        Family::A => 0,
        Family::B => 1,
        Family::D => 2,
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl<'a> Cursor<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        if self.at + n > self.bytes.len() {
            return Err(Error::Cache("truncated file".into()));
        }
        let s = &self.bytes[self.at..self.at + n];
        self.at += n;
        Ok(s)
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn i32(&mut self) -> Result<i32> {
        Ok(i32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
}

/// Enumerates the words of `w` and searches for an accessible one without
/// ever materializing adjacency — memory stays at the flat word list. Returns
/// the first accessible word in lexicographic order, `None` after a full
/// conclusive scan, or [`Error::BudgetExceeded`] if `candidate_budget`
/// vertices were scanned without an answer.
pub fn accessibility_sweep(
    w: &GroupElement,
    candidate_budget: Option<usize>,
) -> Result<Option<ReducedWord>> {
    let words = enumerate_flat(w, None)?;
    Ok(scan_accessible(w, &words, candidate_budget)?
        .map(|i| ReducedWord::new_unchecked(w.ctype(), words.word(i).to_vec())))
}

/// How many words at the front of the refutation order get precomputed
/// crossing tables. Covers the overwhelming majority of early exits while
/// costing well under a megabyte.
const SCAN_PREFIX_DEPTH: usize = 4096;

/// Shared state for the downhill-move accessibility criterion.
///
/// Each move flips exactly one subsystem, so along any path the separation
/// count from a fixed word `r` changes by exactly ±1 per step, and it is zero
/// only at `r` itself (two distinct words always disagree on some subsystem).
/// Hence `r` realizes the separation bound against everyone iff every other
/// word admits a *downhill* move — a move across a subsystem currently
/// separated from `r`. Conversely a word with no separated move site can
/// never step closer than its separation count allows, certifying failure.
/// So: `r` is accessible iff no other word is "stuck", which a linear scan
/// with early exit decides without BFS or adjacency.
///
/// All candidates share one refutation order: words with the fewest move
/// sites first. A word with few sites is stuck relative to most candidates,
/// so refuting witnesses cluster at the front of the scan, and for the front
/// the crossing data is precomputed once instead of per candidate.
struct ScanContext<'a> {
    ctype: CoxeterType,
    words: &'a FlatWords,
    index: SubsystemIndex,
    identity: GroupElement,
    simples: Vec<crate::root::Root>,
    scan_order: Vec<u32>,
    prefix_depth: usize,
    /// Root ids crossed at each position, for the first `prefix_depth` words
    /// of `scan_order`, flattened row-major.
    prefix_root_seqs: Vec<u16>,
    /// Per prefix word, the range of its `(position, width)` move sites in
    /// `prefix_sites`.
    prefix_site_offsets: Vec<u32>,
    prefix_sites: Vec<(u16, u8)>,
}

impl<'a> ScanContext<'a> {
    fn new(element: &GroupElement, words: &'a FlatWords) -> ScanContext<'a> {
        let ctype = element.ctype();
        let index = SubsystemIndex::for_element(element);
        assert_eq!(index.ambient().len(), words.word_len());
        let identity = GroupElement::identity(ctype);
        let simples = simple_roots(ctype);

        let n = words.count();
        let site_counts: Vec<u8> = (0..n)
            .into_par_iter()
            .map_init(Vec::new, |sites, v| {
                collect_move_sites(ctype, words.word(v), sites);
                sites.len() as u8
            })
            .collect();
        let mut scan_order: Vec<u32> = (0..n as u32).collect();
        scan_order.sort_unstable_by_key(|&v| (site_counts[v as usize], v));

        let len = words.word_len();
        let prefix_depth = n.min(SCAN_PREFIX_DEPTH);
        let mut prefix_root_seqs = vec![0u16; prefix_depth * len];
        let mut prefix_site_offsets = Vec::with_capacity(prefix_depth + 1);
        let mut prefix_sites: Vec<(u16, u8)> = Vec::new();
        prefix_site_offsets.push(0);
        let mut scratch = identity.clone();
        let mut sites = Vec::new();
        for (slot, &v) in scan_order[..prefix_depth].iter().enumerate() {
            scratch.clone_from(&identity);
            for (k, &letter) in words.word(v as usize).iter().enumerate() {
                let beta = scratch.act(&simples[letter as usize - 1]);
                let id = index.root_id(&beta).expect("crossed root is ambient");
                prefix_root_seqs[slot * len + k] = id;
                scratch.apply_letter_right(letter);
            }
            collect_move_sites(ctype, words.word(v as usize), &mut sites);
            prefix_sites
                .extend(sites.iter().map(|s| (s.position as u16, s.kind.width() as u8)));
            prefix_site_offsets.push(prefix_sites.len() as u32);
        }

        ScanContext {
            ctype,
            words,
            index,
            identity,
            simples,
            scan_order,
            prefix_depth,
            prefix_root_seqs,
            prefix_site_offsets,
            prefix_sites,
        }
    }

    /// Writes, for each position of the word at `v`, the index at which the
    /// candidate profile crosses the root this word crosses there.
    fn fill_crossing_seq(&self, v: usize, cand_pos: &[u16], scratch: &mut GroupElement, seq: &mut [u16]) {
        scratch.clone_from(&self.identity);
        for (k, &letter) in self.words.word(v).iter().enumerate() {
            let beta = scratch.act(&self.simples[letter as usize - 1]);
            let id = self.index.root_id(&beta).expect("crossed root is ambient");
            seq[k] = cand_pos[id as usize];
            scratch.apply_letter_right(letter);
        }
    }

    fn candidate_is_accessible(&self, cand: usize) -> bool {
        let len = self.words.word_len();
        let mut scratch = self.identity.clone();

        // Candidate profile: for each root id, its crossing index in the
        // candidate word.
        let mut cand_pos = vec![0u16; len];
        for (k, &letter) in self.words.word(cand).iter().enumerate() {
            let beta = scratch.act(&self.simples[letter as usize - 1]);
            let id = self.index.root_id(&beta).expect("crossed root is ambient");
            cand_pos[id as usize] = k as u16;
            scratch.apply_letter_right(letter);
        }

        // Fast path over the precomputed front of the refutation order.
        for slot in 0..self.prefix_depth {
            let v = self.scan_order[slot] as usize;
            if v == cand {
                continue;
            }
            let seq = &self.prefix_root_seqs[slot * len..(slot + 1) * len];
            let sites = &self.prefix_sites[self.prefix_site_offsets[slot] as usize
                ..self.prefix_site_offsets[slot + 1] as usize];
            let has_downhill = sites.iter().any(|&(pos, width)| {
                let run = pos as usize..pos as usize + width as usize - 1;
                run.into_iter()
                    .any(|k| cand_pos[seq[k] as usize] > cand_pos[seq[k + 1] as usize])
            });
            if !has_downhill {
                // `v` cannot step toward the candidate: not accessible.
                return false;
            }
        }

        let mut seq = vec![0u16; len];
        let mut sites: Vec<MoveSite> = Vec::new();
        for &v in &self.scan_order[self.prefix_depth..] {
            let v = v as usize;
            if v == cand {
                continue;
            }
            self.fill_crossing_seq(v, &cand_pos, &mut scratch, &mut seq);
            collect_move_sites(self.ctype, self.words.word(v), &mut sites);
            let has_downhill = sites.iter().any(|site| {
                let run = &seq[site.position..site.position + site.kind.width()];
                run.windows(2).any(|p| p[0] > p[1])
            });
            if !has_downhill {
                return false;
            }
        }
        true
    }
}

fn scan_accessible(
    element: &GroupElement,
    words: &FlatWords,
    candidate_budget: Option<usize>,
) -> Result<Option<usize>> {
    let n = words.count();
    let limit = candidate_budget.unwrap_or(n).min(n);
    let ctx = ScanContext::new(element, words);
    let found = (0..limit)
        .into_par_iter()
        .find_first(|&cand| ctx.candidate_is_accessible(cand));
    if let Some(i) = found {
        return Ok(Some(i));
    }
    if limit < n {
        return Err(Error::BudgetExceeded);
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Family;
    use crate::subsystem::{l2_size, separation};
    use crate::word::enumerate_reduced_words;

    fn ct(family: Family, rank: u8) -> CoxeterType {
        CoxeterType::new(family, rank).unwrap()
    }

    fn graph_of(family: Family, rank: u8, window: &[i32]) -> WordGraph {
        let w = GroupElement::from_window(ct(family, rank), window).unwrap();
        WordGraph::build(&w, None).unwrap()
    }

    #[test]
    fn tiny_graphs() {
        let g = graph_of(Family::A, 3, &[3, 4, 1, 2]);
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        assert_eq!(g.distance(0, 1), 1);
        assert_eq!(g.diameter(None), DiameterOutcome {
            lower_bound: 1,
            exact: true,
            source: 0,
            target: 1
        });

        let g = graph_of(Family::A, 2, &[3, 2, 1]);
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        assert!(g.is_accessible(0) && g.is_accessible(1));
        assert_eq!(g.find_accessible(None).unwrap(), Some(0));

        let g = graph_of(Family::B, 2, &[-1, -2]);
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        assert_eq!(g.diameter(None).lower_bound, 1);

        let id = WordGraph::build(&GroupElement::identity(ct(Family::A, 3)), None).unwrap();
        assert_eq!((id.vertex_count(), id.edge_count()), (1, 0));
        assert_eq!(id.diameter(None).lower_bound, 0);
        assert!(id.is_accessible(0));
        assert_eq!(id.find_accessible(None).unwrap(), Some(0));
    }

    #[test]
    fn longest_a3_graph() {
        let g = graph_of(Family::A, 3, &[4, 3, 2, 1]);
        assert_eq!(g.vertex_count(), 16);
        // Adjacency is symmetric.
        for v in 0..g.vertex_count() {
            for &u in g.neighbors(v) {
                assert!(g.neighbors(u as usize).contains(&(v as u32)));
            }
        }
        let diam = g.diameter(None);
        assert!(diam.exact);
        assert_eq!(diam.lower_bound, 7);
        assert_eq!(g.distance(diam.source, diam.target), 7);
        assert_eq!(l2_size(g.element()), 7);

        // Budgeted run degrades to a sound lower bound.
        let partial = g.diameter(Some(3));
        assert!(!partial.exact);
        assert!(partial.lower_bound <= 7);
        assert!(partial.lower_bound >= 4);

        // Some vertex realizes every separation distance (index order).
        let found = g.find_accessible(None).unwrap();
        assert!(found.is_some());
        assert!(g.is_accessible(found.unwrap()));
        assert!(found.iter().all(|&v| g.accessibility_defect(v) == 0));

        // A zero budget cannot conclude anything on a nonempty graph.
        assert!(matches!(g.find_accessible(Some(0)), Err(Error::BudgetExceeded)));
    }

    #[test]
    fn distances_dominate_separation() {
        for g in [
            graph_of(Family::A, 3, &[4, 3, 2, 1]),
            graph_of(Family::B, 3, &[-1, -2, -3]),
        ] {
            let words = enumerate_reduced_words(g.element(), None).unwrap();
            for a in 0..g.vertex_count() {
                let dist = g.distances_from(a);
                for b in 0..g.vertex_count() {
                    let sep = separation(&words[a], &words[b]).unwrap().len();
                    assert!(dist[b] as usize >= sep);
                    // Edge law, both directions.
                    assert_eq!(dist[b] == 1, sep == 1);
                    assert_eq!(dist[b] == 0, sep == 0);
                }
            }
        }
    }

    #[test]
    fn accessibility_routes_agree() {
        // The BFS definition and the downhill-move criterion match vertex by
        // vertex.
        for g in [
            graph_of(Family::A, 3, &[4, 3, 2, 1]),
            graph_of(Family::B, 2, &[-1, -2]),
            graph_of(Family::A, 4, &[3, 4, 5, 1, 2]),
            graph_of(Family::B, 3, &[-1, -2, -3]),
        ] {
            let ctx = ScanContext::new(g.element(), &g.words);
            for v in 0..g.vertex_count() {
                assert_eq!(
                    ctx.candidate_is_accessible(v),
                    g.is_accessible(v),
                    "vertex {v} of G({})",
                    g.element()
                );
            }
            let by_bfs = (0..g.vertex_count()).find(|&v| g.is_accessible(v));
            assert_eq!(g.find_accessible(None).unwrap(), by_bfs);
        }
    }

    #[test]
    fn streaming_sweep_matches_graph_sweep() {
        let w0 = GroupElement::longest(ct(Family::A, 3));
        let g = WordGraph::build(&w0, None).unwrap();
        let via_graph = g.find_accessible(None).unwrap().map(|v| g.word(v));
        let via_stream = accessibility_sweep(&w0, None).unwrap();
        assert_eq!(via_graph, via_stream);
    }

    #[test]
    fn cache_roundtrip() {
        let g = graph_of(Family::A, 3, &[4, 3, 2, 1]);
        let dir = std::env::temp_dir().join(format!("rwg-test-{}", std::process::id()));
        let path = g.save_cache(&dir).unwrap();
        assert_eq!(path, cache_path(&dir, g.element()));
        let h = WordGraph::load_cache(&path).unwrap();
        assert_eq!(h.element(), g.element());
        assert_eq!(h.vertex_count(), g.vertex_count());
        assert_eq!(h.edge_count(), g.edge_count());
        for v in 0..g.vertex_count() {
            assert_eq!(g.letters(v), h.letters(v));
            assert_eq!(g.neighbors(v), h.neighbors(v));
        }

        // Corruption is caught.
        let mut bytes = fs::read(&path).unwrap();
        bytes[0] = b'X';
        let bad = dir.join("bad.rwg");
        fs::write(&bad, &bytes).unwrap();
        assert!(matches!(WordGraph::load_cache(&bad), Err(Error::Cache(_))));
        fs::remove_dir_all(&dir).unwrap();
    }
}
