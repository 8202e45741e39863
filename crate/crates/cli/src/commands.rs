//! Implementations of the verification sweeps and utility subcommands.

use std::fs;
use std::path::Path;
use std::time::Instant;

use anyhow::{anyhow, bail, Result};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use redwords::{
    accessibility_sweep, all_elements, cache_path, check_3412_bound, count_pattern,
    d_longest_factored_word, d_valley_word, is_equality_form, l2_size, leftward_sorting_word,
    rightward_sorting_word, separation, avoids_obstruction_patterns, BoundStatus,
    CoefficientTable, CoxeterType, Family, GroupElement, Pattern, Root, SubsystemIndex,
    WordGraph,
};

use crate::report::{ClaimReport, Format, Status, Tally};

/// Degrees beyond this are refused outright rather than silently degraded:
/// every element sweep would be inconclusive anyway.
const DEGREE_HARD_CAP: usize = 7;

#[derive(Debug, Clone, Copy)]
pub struct Budgets {
    pub vertices: usize,
    pub sources: usize,
}

pub fn parse_ctype(family: &str, rank: u8) -> Result<CoxeterType> {
    let family: Family = family.parse()?;
    Ok(CoxeterType::new(family, rank)?)
}

pub fn parse_element(family: &str, rank: u8, window: &str) -> Result<GroupElement> {
    Ok(GroupElement::parse_window(parse_ctype(family, rank)?, window)?)
}

/// Builds the word graph under the vertex budget; `None` means the element
/// was too large, which callers degrade to an inconclusive outcome.
fn try_graph(w: &GroupElement, budgets: Budgets) -> Result<Option<WordGraph>> {
    match WordGraph::build(w, Some(budgets.vertices)) {
        Ok(graph) => Ok(Some(graph)),
        Err(redwords::Error::CapExceeded { .. }) => Ok(None),
        Err(other) => Err(other.into()),
    }
}

fn symmetric_elements(n_max: usize) -> Result<impl Iterator<Item = GroupElement>> {
    if n_max > DEGREE_HARD_CAP {
        bail!("degree {n_max} exceeds the hard cap of {DEGREE_HARD_CAP}");
    }
    Ok((1..=n_max).flat_map(|degree| {
        all_elements(CoxeterType::new(Family::A, degree as u8 - 1).unwrap())
    }))
}

/// Half the rank-two subsystem count never exceeds the graph diameter, for
/// every element of the symmetric groups up to the requested degree. Exact
/// diameters within budget; outside it, certification falls back to sound
/// lower bounds (BFS eccentricity, or the separation of the two sorting
/// words when even the graph is too large).
pub fn verify_a_lower_bound(n_max: usize, budgets: Budgets) -> Result<ClaimReport> {
    let started = Instant::now();
    let mut tally = Tally::default();
    for w in symmetric_elements(n_max)? {
        let l2 = l2_size(&w);
        if l2 == 0 {
            tally.checked += 1;
            continue;
        }
        match try_graph(&w, budgets)? {
            Some(graph) => {
                let outcome = graph.diameter(Some(budgets.sources));
                if outcome.exact {
                    if 2 * outcome.lower_bound < l2 {
                        tally.counterexamples.push(format!(
                            "{w}: diameter {} below half of {l2}",
                            outcome.lower_bound
                        ));
                    }
                } else if 2 * outcome.lower_bound < l2 {
                    tally.inconclusive.push(format!(
                        "{w}: eccentricity bound {} cannot certify half of {l2}",
                        outcome.lower_bound
                    ));
                }
            }
            None => {
                // Too many words for a graph: the separation between the two
                // sorting words still bounds the diameter from below.
                let first = leftward_sorting_word(&w)?;
                let second = rightward_sorting_word(&w)?;
                let sep = separation(&first, &second)?.len();
                if 2 * sep < l2 {
                    tally.inconclusive.push(format!(
                        "{w}: sorting-word separation {sep} cannot certify half of {l2}"
                    ));
                }
            }
        }
        tally.checked += 1;
    }
    let scope = format!(
        "{} symmetric-group elements of degree <= {n_max}, vertex budget {}, source budget {}",
        tally.checked, budgets.vertices, budgets.sources
    );
    Ok(tally.into_report("a-lower-bound", scope, started.elapsed()))
}

/// The diameter meets half the subsystem count exactly when the window has
/// the prefix/jump/suffix form, which in turn happens exactly when the four
/// obstruction patterns are absent.
pub fn verify_equality(n_max: usize, budgets: Budgets) -> Result<ClaimReport> {
    let started = Instant::now();
    let mut tally = Tally::default();
    for w in symmetric_elements(n_max)? {
        let structural = is_equality_form(&w)?;
        let avoidance = avoids_obstruction_patterns(&w)?;
        if structural != avoidance {
            tally.counterexamples.push(format!(
                "{w}: structural {structural} vs avoidance {avoidance}"
            ));
            continue;
        }
        let Some(graph) = try_graph(&w, budgets)? else {
            tally.inconclusive.push(format!("{w}: over vertex budget"));
            continue;
        };
        let outcome = graph.diameter(Some(budgets.sources));
        if !outcome.exact {
            tally.inconclusive.push(format!("{w}: over source budget"));
            continue;
        }
        let attains = 2 * outcome.lower_bound == l2_size(&w);
        if attains != structural {
            tally.counterexamples.push(format!(
                "{w}: equality {attains} vs structural form {structural}"
            ));
        }
        tally.checked += 1;
    }
    let scope = format!("{} symmetric-group elements of degree <= {n_max}", tally.checked);
    Ok(tally.into_report("equality-characterization", scope, started.elapsed()))
}

/// The diameter stays below the subsystem count minus the number of `3412`
/// occurrences. A counterexample is a reportable discovery.
pub fn verify_3412(n_max: usize, budgets: Budgets) -> Result<ClaimReport> {
    let started = Instant::now();
    let mut tally = Tally::default();
    for w in symmetric_elements(n_max)? {
        let check = check_3412_bound(&w, Some(budgets.vertices), Some(budgets.sources))?;
        match check.status {
            BoundStatus::Holds => tally.checked += 1,
            BoundStatus::Violated => {
                let seen = check.diameter.expect("violations carry a diameter bound");
                tally.counterexamples.push(format!(
                    "{w}: diameter at least {} exceeds {} - {}",
                    seen.lower_bound, check.subsystem_count, check.occurrences_3412
                ));
            }
            BoundStatus::Inconclusive => {
                tally.inconclusive.push(format!("{w}: over budget"));
            }
        }
    }
    let scope = format!(
        "{} symmetric-group elements of degree <= {n_max} against the 3412-adjusted bound",
        tally.checked
    );
    Ok(tally.into_report("diameter-3412-bound", scope, started.elapsed()))
}

/// A third of the subsystem count never exceeds the diameter across the
/// signed permutation groups: exhaustive through rank 3, deterministic
/// element sample at rank 4.
pub fn verify_b_conjecture(n_max: u8, samples: usize, budgets: Budgets) -> Result<ClaimReport> {
    if !(2..=4).contains(&n_max) {
        bail!("rank {n_max} out of the supported range 2..=4");
    }
    let started = Instant::now();
    let mut tally = Tally::default();
    let mut check = |w: &GroupElement| -> Result<()> {
        let l2 = l2_size(w);
        if l2 == 0 {
            tally.checked += 1;
            return Ok(());
        }
        let Some(graph) = try_graph(w, budgets)? else {
            tally.inconclusive.push(format!("{w}: over vertex budget"));
            return Ok(());
        };
        let outcome = graph.diameter(Some(budgets.sources));
        if outcome.exact {
            if 3 * outcome.lower_bound < l2 {
                let (a, b) = (graph.word(outcome.source), graph.word(outcome.target));
                tally.counterexamples.push(format!(
                    "{w}: diameter {} (between {a} and {b}) below a third of {l2}",
                    outcome.lower_bound
                ));
            } else {
                tally.checked += 1;
            }
        } else if 3 * outcome.lower_bound >= l2 {
            tally.checked += 1;
        } else {
            tally.inconclusive.push(format!(
                "{w}: eccentricity bound {} cannot certify a third of {l2}",
                outcome.lower_bound
            ));
        }
        Ok(())
    };
    for rank in 2..=n_max.min(3) {
        for w in all_elements(CoxeterType::new(Family::B, rank)?) {
            check(&w)?;
        }
    }
    let mut sampled = 0;
    if n_max >= 4 {
        let pool = all_elements(CoxeterType::new(Family::B, 4)?);
        let mut order: Vec<usize> = (0..pool.len()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(0xB00C_A55E));
        for &i in order.iter().take(samples) {
            check(&pool[i])?;
            sampled += 1;
        }
    }
    let scope = format!(
        "signed permutations: exhaustive through rank {}, {sampled} fixed-seed samples at rank 4",
        n_max.min(3)
    );
    Ok(tally.into_report("b-third-lower-bound", scope, started.elapsed()))
}

/// The valley elements: two reduced words, diameter one, yet a subsystem
/// count growing linearly in the rank.
pub fn verify_d_example(n_max: u8, budgets: Budgets) -> Result<ClaimReport> {
    if !(4..=12).contains(&n_max) {
        bail!("rank {n_max} out of the supported range 4..=12");
    }
    let started = Instant::now();
    let mut tally = Tally::default();
    for rank in 4..=n_max {
        let word = d_valley_word(rank)?;
        let w = word.element();
        let mut faults = Vec::new();
        if word.len() != 2 * rank as usize - 2 {
            faults.push(format!("length {}", word.len()));
        }
        let expected_inversions: Vec<Root> = (1..rank)
            .flat_map(|i| [Root::diff(i, rank), Root::sum(i, rank)])
            .collect();
        let mut actual = w.inversion_set();
        let mut expected = expected_inversions;
        actual.sort();
        expected.sort();
        if actual != expected {
            faults.push("inversion set".into());
        }
        if l2_size(&w) != rank as usize - 1 {
            faults.push(format!("subsystem count {}", l2_size(&w)));
        }
        match try_graph(&w, budgets)? {
            Some(graph) => {
                if graph.vertex_count() != 2 {
                    faults.push(format!("{} words", graph.vertex_count()));
                }
                let outcome = graph.diameter(Some(budgets.sources));
                if !(outcome.exact && outcome.lower_bound == 1) {
                    faults.push(format!("diameter bound {}", outcome.lower_bound));
                }
            }
            None => {
                tally.inconclusive.push(format!("{w}: over vertex budget"));
                continue;
            }
        }
        if faults.is_empty() {
            tally.checked += 1;
        } else {
            tally
                .counterexamples
                .push(format!("rank {rank} ({w}): unexpected {}", faults.join(", ")));
        }
    }
    let scope = format!("valley elements of ranks 4..={n_max}");
    Ok(tally.into_report("d-valley-family", scope, started.elapsed()))
}

fn factored_rro_closed_form(rank: u8) -> Vec<Root> {
    let mut expected = Vec::new();
    for j in (2..=rank).rev() {
        for i in (1..j).rev() {
            expected.push(Root::diff(i, j));
        }
        for i in 1..j {
            expected.push(Root::sum(i, j));
        }
    }
    expected
}

fn single_claim(
    claim_id: &str,
    scope: String,
    ok: bool,
    good: String,
    bad: String,
    started: Instant,
) -> ClaimReport {
    let (status, witnesses) =
        if ok { (Status::Verified, vec![good]) } else { (Status::Counterexample, vec![bad]) };
    ClaimReport::new(claim_id, scope, status, witnesses, started.elapsed())
}

/// The full battery around the longest element of `D_rank`: closed-form
/// subsystem count, the factored word's reverse root ordering, its
/// distance-versus-separation defect bound, the diameter window, and the
/// search for a word realizing the separation bound everywhere.
pub fn d_w0_suite(rank: u8, full_accessibility: bool, budgets: Budgets) -> Result<Vec<ClaimReport>> {
    if !(4..=7).contains(&rank) {
        bail!("rank {rank} out of the supported range 4..=7");
    }
    if full_accessibility && rank > 5 {
        bail!("the streaming accessibility sweep is only supported through rank 5");
    }
    let ctype = CoxeterType::new(Family::D, rank)?;
    let w0 = GroupElement::longest(ctype);
    let n = rank as usize;
    let cubic = 2 * n * n * n;
    let mut reports = Vec::new();

    let started = Instant::now();
    let l2 = l2_size(&w0);
    let formula = n * (n - 1) * (3 * n * n - 11 * n + 13) / 6;
    reports.push(single_claim(
        "d-w0-l2-formula",
        format!("longest element of D{rank}"),
        l2 == formula,
        format!("subsystem count {l2} matches the closed form"),
        format!("subsystem count {l2} differs from closed form {formula}"),
        started,
    ));

    let started = Instant::now();
    let r = d_longest_factored_word(rank)?;
    reports.push(single_claim(
        "d-w0-rro-form",
        format!("factored word of the longest element of D{rank}"),
        r.reverse_root_ordering() == factored_rro_closed_form(rank),
        "reverse root ordering matches the by-coordinate closed form".into(),
        "reverse root ordering deviates from the closed form".into(),
        started,
    ));

    let graph = try_graph(&w0, budgets)?;
    match &graph {
        Some(graph) => {
            let started = Instant::now();
            let index = SubsystemIndex::for_element(&w0);
            let src = graph
                .index_of(&r)
                .ok_or_else(|| anyhow!("factored word missing from the vertex set"))?;
            let dist = graph.distances_from(src);
            let r_profile = index.positions(&r)?;
            let mut max_defect = 0usize;
            let mut over = Vec::new();
            for (v, &d) in dist.iter().enumerate() {
                let sep =
                    index.separated_count(&r_profile, &index.positions(&graph.word(v)).unwrap());
                let defect = d as usize - sep;
                max_defect = max_defect.max(defect);
                if 3 * defect >= cubic {
                    over.push(format!("word {} at defect {defect}", graph.word(v)));
                }
            }
            let status = if over.is_empty() { Status::Verified } else { Status::Counterexample };
            let witnesses = if over.is_empty() {
                vec![format!(
                    "max distance/separation defect {max_defect} over {} words, strictly below \
                     {cubic}/3",
                    graph.vertex_count()
                )]
            } else {
                over
            };
            reports.push(ClaimReport::new(
                "d-w0-defect-bound",
                format!("all words of the longest element of D{rank} against the factored word"),
                status,
                witnesses,
                started.elapsed(),
            ));

            let started = Instant::now();
            let outcome = graph.diameter(Some(budgets.sources));
            let window = 3 * l2 + 2 * cubic;
            let (status, witnesses) = if outcome.exact {
                if 3 * outcome.lower_bound < window {
                    (
                        Status::Verified,
                        vec![format!(
                            "exact diameter {} within the window; subsystem count {l2} \
                             (equality not asserted)",
                            outcome.lower_bound
                        )],
                    )
                } else {
                    (
                        Status::Counterexample,
                        vec![format!("exact diameter {} breaks the window", outcome.lower_bound)],
                    )
                }
            } else if 3 * outcome.lower_bound >= window {
                (
                    Status::Counterexample,
                    vec![format!("diameter bound {} already breaks the window", outcome.lower_bound)],
                )
            } else {
                (Status::Inconclusive, vec![format!("{}: over source budget", w0)])
            };
            reports.push(ClaimReport::new(
                "d-w0-diameter-window",
                format!("diameter of the longest element of D{rank} vs subsystem count + (4/3)n^3"),
                status,
                witnesses,
                started.elapsed(),
            ));
        }
        None => {
            for claim_id in ["d-w0-defect-bound", "d-w0-diameter-window"] {
                reports.push(ClaimReport::new(
                    claim_id,
                    format!("longest element of D{rank}"),
                    Status::Inconclusive,
                    vec![format!("{w0}: over vertex budget {}", budgets.vertices)],
                    std::time::Duration::ZERO,
                ));
            }
        }
    }

    let started = Instant::now();
    let found: Option<String> = if full_accessibility {
        accessibility_sweep(&w0, None)?.map(|word| word.to_string())
    } else {
        match &graph {
            Some(graph) => graph.find_accessible(None)?.map(|v| graph.word(v).to_string()),
            None => {
                reports.push(ClaimReport::new(
                    "d-w0-accessibility",
                    format!("longest element of D{rank}"),
                    Status::Inconclusive,
                    vec![format!(
                        "{w0}: over vertex budget; rerun with --full-accessibility for the \
                         streaming sweep"
                    )],
                    started.elapsed(),
                ));
                return Ok(reports);
            }
        }
    };
    // At rank 5 the claim is that no such word exists; at other ranks the
    // search is informational and any definite outcome is a result.
    let (status, witness) = match (&found, rank) {
        (Some(word), 5) => {
            (Status::Counterexample, format!("unexpected separation-realizing word {word}"))
        }
        (None, 5) => (Status::Verified, "no word realizes the separation bound".into()),
        (Some(word), _) => {
            (Status::Verified, format!("first separation-realizing word: {word}"))
        }
        (None, _) => (Status::Verified, "no word realizes the separation bound".into()),
    };
    reports.push(ClaimReport::new(
        "d-w0-accessibility",
        format!("search over all words of the longest element of D{rank}"),
        status,
        vec![witness],
        started.elapsed(),
    ));
    Ok(reports)
}

fn write_or_stdout(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, content)?;
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn table_rows() -> Vec<(Pattern, (u32, u32))> {
    let table = CoefficientTable::builtin();
    let mut rows: Vec<(Pattern, (u32, u32))> =
        table.rows().map(|(p, ab)| (p.clone(), ab)).collect();
    rows.sort_by_key(|(p, _)| (p.len(), p.values().to_vec()));
    rows
}

pub fn render_table(format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Tsv => {
            out.push_str("pattern\ta\tb\n");
            for (p, (a, b)) in table_rows() {
                out.push_str(&format!("{p}\t{a}\t{b}\n"));
            }
        }
        Format::Jsonl => {
            for (p, (a, b)) in table_rows() {
                out.push_str(&json!({"pattern": p.to_string(), "a": a, "b": b}).to_string());
                out.push('\n');
            }
        }
    }
    out
}

pub fn dump_element(w: &GroupElement, format: Format, out: Option<&Path>) -> Result<()> {
    let inversions: Vec<String> = w.inversion_set().iter().map(Root::to_string).collect();
    let content = match format {
        Format::Jsonl => format!(
            "{}\n",
            json!({
                "type": w.ctype().to_string(),
                "window": w.window(),
                "length": w.length(),
                "inversions": inversions,
            })
        ),
        Format::Tsv => format!("{}\t{}\t{}\t{}\n", w.ctype(), w, w.length(), inversions.join(",")),
    };
    write_or_stdout(out, &content)
}

pub fn dump_l2(w: &GroupElement, format: Format, out: Option<&Path>) -> Result<()> {
    let mut content = String::new();
    for sub in redwords::rank_two_subsystems(w).members() {
        let roots: Vec<String> = sub.positive_roots().iter().map(Root::to_string).collect();
        match format {
            Format::Jsonl => {
                content.push_str(
                    &json!({"kind": sub.kind().to_string(), "roots": roots}).to_string(),
                );
                content.push('\n');
            }
            Format::Tsv => {
                content.push_str(&format!("{}\t{}\n", sub.kind(), roots.join(",")));
            }
        }
    }
    write_or_stdout(out, &content)
}

pub fn dump_graph(w: &GroupElement, budgets: Budgets, cache_dir: &Path) -> Result<()> {
    let graph = WordGraph::build(w, Some(budgets.vertices))?;
    let path = graph.save_cache(cache_dir)?;
    println!(
        "{}",
        json!({
            "path": path.display().to_string(),
            "vertices": graph.vertex_count(),
            "edges": graph.edge_count(),
        })
    );
    Ok(())
}

pub fn enumerate(w: &GroupElement, budgets: Budgets, format: Format) -> Result<i32> {
    let words = match redwords::enumerate_reduced_words(w, Some(budgets.vertices)) {
        Ok(words) => words,
        Err(redwords::Error::CapExceeded { partial }) => {
            eprintln!("more than {partial} reduced words; raise --budget-vertices");
            return Ok(3);
        }
        Err(other) => return Err(other.into()),
    };
    for word in &words {
        match format {
            Format::Jsonl => println!("{}", json!({ "letters": word.letters() })),
            Format::Tsv => println!("{word}"),
        }
    }
    Ok(0)
}

/// Diameter of one element's graph, reusing the binary cache when a
/// directory is supplied.
pub fn diameter(
    w: &GroupElement,
    budgets: Budgets,
    cache_dir: Option<&Path>,
) -> Result<i32> {
    let graph = match cache_dir {
        Some(dir) => {
            let path = cache_path(dir, w);
            if path.exists() {
                WordGraph::load_cache(&path)?
            } else {
                let graph = match WordGraph::build(w, Some(budgets.vertices)) {
                    Ok(graph) => graph,
                    Err(redwords::Error::CapExceeded { partial }) => {
                        eprintln!("more than {partial} reduced words; raise --budget-vertices");
                        return Ok(3);
                    }
                    Err(other) => return Err(other.into()),
                };
                graph.save_cache(dir)?;
                graph
            }
        }
        None => match WordGraph::build(w, Some(budgets.vertices)) {
            Ok(graph) => graph,
            Err(redwords::Error::CapExceeded { partial }) => {
                eprintln!("more than {partial} reduced words; raise --budget-vertices");
                return Ok(3);
            }
            Err(other) => return Err(other.into()),
        },
    };
    let outcome = graph.diameter(Some(budgets.sources));
    println!(
        "{}",
        json!({
            "window": w.to_string(),
            "vertices": graph.vertex_count(),
            "edges": graph.edge_count(),
            "diameter_lower_bound": outcome.lower_bound,
            "exact": outcome.exact,
            "source": graph.word(outcome.source).to_string(),
            "target": graph.word(outcome.target).to_string(),
        })
    );
    Ok(if outcome.exact { 0 } else { 3 })
}

pub fn l2_breakdown(w: &GroupElement) -> Result<()> {
    let subsystems = redwords::rank_two_subsystems(w);
    let mut by_kind = std::collections::BTreeMap::new();
    for sub in subsystems.members() {
        *by_kind.entry(sub.kind().to_string()).or_insert(0u32) += 1;
    }
    println!(
        "{}",
        json!({
            "window": w.to_string(),
            "l2": subsystems.len(),
            "by_kind": by_kind,
        })
    );
    Ok(())
}

pub fn patterns(window: &str, selection: Option<&str>, format: Format) -> Result<()> {
    let entries: Vec<i32> = window
        .split(',')
        .map(|part| part.trim().parse::<i32>().map_err(|e| anyhow!("bad window entry: {e}")))
        .collect::<Result<_>>()?;
    let ctype = CoxeterType::new(Family::A, entries.len() as u8 - 1)?;
    let w = GroupElement::from_window(ctype, &entries)?;
    let chosen: Vec<Pattern> = match selection {
        Some(list) => list
            .split(',')
            .map(|digits| digits.trim().parse::<Pattern>().map_err(|e| anyhow!("{e}")))
            .collect::<Result<_>>()?,
        None => table_rows().into_iter().map(|(p, _)| p).collect(),
    };
    for p in chosen {
        let count = count_pattern(&w, &p)?;
        match format {
            Format::Jsonl => println!("{}", json!({"pattern": p.to_string(), "count": count})),
            Format::Tsv => println!("{p}\t{count}"),
        }
    }
    Ok(())
}
