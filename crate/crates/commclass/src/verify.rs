//! Exhaustive checks of the atom bounds, the class inequality and the
//! structural facts behind them.
//!
//! Every check returns a [`VerificationReport`]. A counterexample report names
//! a permutation or word that the primitive operations of `commclass-core`
//! reject when run again by hand. Parallel work is collected in input order, so
//! reports do not depend on the number of workers.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::time::Instant;

use commclass_core::atoms::{
    atoms_bruteforce_with_ceiling, atoms_characterized, factorial, phi_reduction, structure_of,
    AtomCatalog, AtomHistogram, SegmentCase, DEFAULT_MAX_RANK,
};
use commclass_core::coxeter_b::{b_atom_histogram, b_atoms, SignedPermutation};
use commclass_core::diagram::{is_atom_word, tenner_conditions};
use commclass_core::words::{
    commutation_classes_with_ceiling, commutation_moves, is_commutation_free, is_reduced,
    reduced_words_lex, Letter, Word, DEFAULT_CEILING,
};
use commclass_core::{Error, Permutation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::report::{Verdict, VerificationReport};
use crate::scan::atom_scan;

/// Reference histogram row for the largest rank in the atom-count table.
pub const PRINTED_FINAL_ROW: [u64; 5] = [3609559, 16937, 1890, 0, 414];

/// Largest `R(σ)` materialized for a sampled oracle comparison.
pub const ORACLE_SAMPLE_CEILING: u64 = 50_000;

/// Resource limits shared by all checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest `n` for global atom scans of `S_{n+1}`.
    pub atom_rank: usize,
    /// Largest `n` for checks that materialize `R(σ)` for all of `S_{n+1}`.
    pub class_rank: usize,
    /// Largest rank for type-B scans.
    pub b_rank: usize,
    /// Most reduced words materialized for a single element.
    pub ceiling: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            atom_rank: DEFAULT_MAX_RANK,
            class_rank: 6,
            b_rank: 4,
            ceiling: DEFAULT_CEILING,
        }
    }
}

fn finish(report: VerificationReport, started: Instant) -> VerificationReport {
    report.timed(started.elapsed())
}

fn limited(mut report: VerificationReport, err: Error, started: Instant) -> VerificationReport {
    report.resource_limited(err.to_string());
    finish(report, started)
}

fn histogram_totals(report: &mut VerificationReport, h: &AtomHistogram) {
    for (k, c) in h.counts.iter().enumerate().take(5) {
        report.total(&format!("a{k}"), *c);
    }
    report.total("permutations", h.total());
    report.total("max", h.max_atoms() as u64);
}

/// Atom-count rows `n = 1..=n_max`.
pub fn table_atoms(n_max: usize, budget: &Budget) -> commclass_core::Result<Vec<AtomHistogram>> {
    (1..=n_max)
        .map(|n| atom_scan(n, budget.atom_rank).map(|c| c.histogram()))
        .collect()
}

/// Row sums of the table equal `(n+1)!`.
pub fn check_table(n_max: usize, budget: &Budget) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("table", format!("n=1..{n_max}"));
    let rows = match table_atoms(n_max, budget) {
        Ok(rows) => rows,
        Err(e) => return limited(report, e, started),
    };
    for h in &rows {
        if h.total() != factorial(h.n + 1) {
            report.counterexample(format!("row n={} sums to {}", h.n, h.total()));
        }
        report.total(&format!("row{}-sum", h.n), h.total());
    }
    finish(report, started)
}

/// `|A(σ)| ≤ 4` for every `σ ∈ S_{n+1}`.
pub fn check_bound(n: usize, budget: &Budget) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("bound", format!("n={n}"));
    let catalog = match atom_scan(n, budget.atom_rank) {
        Ok(c) => c,
        Err(e) => return limited(report, e, started),
    };
    histogram_totals(&mut report, &catalog.histogram());
    if let Some((p, words)) = catalog.iter().find(|(_, w)| w.len() > 4) {
        report.counterexample(format!("{p} has {} atoms", words.len()));
    }
    finish(report, started)
}

/// No permutation of `S_{n+1}` has exactly three atoms.
pub fn check_spectrum(n: usize, budget: &Budget) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("spectrum", format!("n={n}"));
    let catalog = match atom_scan(n, budget.atom_rank) {
        Ok(c) => c,
        Err(e) => return limited(report, e, started),
    };
    histogram_totals(&mut report, &catalog.histogram());
    if let Some((p, _)) = catalog.iter().find(|(_, w)| w.len() == 3) {
        report.counterexample(p.to_string());
    }
    finish(report, started)
}

/// Recomputes the rows for `n = 8` and `n = 9` and reports which one equals
/// [`PRINTED_FINAL_ROW`]. Holds when the `n = 8` row is a valid histogram of
/// `S_9` with an empty column 3 and maximum 4, and the `n = 9` row equals the
/// printed one.
pub fn check_final_row(budget: &Budget) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("final-row", "n=8,9");
    let s9 = match atom_scan(8, budget.atom_rank) {
        Ok(c) => c.histogram(),
        Err(e) => return limited(report, e, started),
    };
    for (k, c) in s9.counts.iter().enumerate().take(5) {
        report.total(&format!("n8-a{k}"), *c);
    }
    report.total("n8-sum", s9.total());
    if s9.total() != factorial(9) || s9.counts[3] != 0 || s9.max_atoms() != 4 {
        report.counterexample(format!("n=8 row {:?}", s9.counts));
    }
    let printed_matches_n8 = s9.counts[..5] == PRINTED_FINAL_ROW;
    report.total("printed-matches-n8", printed_matches_n8 as u64);
    match atom_scan(9, budget.atom_rank) {
        Ok(c) => {
            let s10 = c.histogram();
            for (k, c) in s10.counts.iter().enumerate().take(5) {
                report.total(&format!("n9-a{k}"), *c);
            }
            report.total("n9-sum", s10.total());
            let matches = s10.counts[..5] == PRINTED_FINAL_ROW;
            report.total("printed-matches-n9", matches as u64);
            if !matches {
                report.counterexample(format!("n=9 row {:?}", s10.counts));
            }
        }
        Err(e) => report.resource_limited(e.to_string()),
    }
    finish(report, started)
}

/// Class sizes of one permutation: `(|C|, |R|, |A|)`.
pub fn class_statistics(p: &Permutation, ceiling: u64) -> commclass_core::Result<(u64, u64, u64)> {
    let parts = commutation_classes_with_ceiling(p, ceiling)?;
    Ok((
        parts.len() as u64,
        parts.word_count() as u64,
        parts.singletons().len() as u64,
    ))
}

/// Which of the three class inequalities fail for `(c, r, a)`:
/// `2c ≤ r + 2`, `2c ≤ r + a`, and `2c ≤ r` when `a = 0`. The last two count
/// singleton classes as atoms, so they are skipped for the identity, whose
/// only class is the empty word.
fn class_violation(c: u64, r: u64, a: u64, identity: bool) -> Option<&'static str> {
    if 2 * c > r + 2 {
        Some("|C| > |R|/2 + 1")
    } else if identity {
        None
    } else if 2 * c > r + a {
        Some("|C| > (|R| + |A|)/2")
    } else if a == 0 && 2 * c > r {
        Some("|C| > |R|/2 with no atoms")
    } else {
        None
    }
}

/// `|C(σ)| ≤ |R(σ)|/2 + 1` over `S_{n+1}`, together with the intermediate
/// bound `|C| ≤ (|R| + |A|)/2` and `|C| ≤ |R|/2` when `A(σ) = ∅`.
pub fn check_class_inequality(n: usize, budget: &Budget) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("class-inequality", format!("n={n}"));
    if n == 0 || n > budget.class_rank {
        let err = Error::BudgetExceeded {
            n,
            max: budget.class_rank,
        };
        return limited(report, err, started);
    }
    let perms: Vec<Permutation> = Permutation::all(n + 1).collect();
    let stats: Vec<commclass_core::Result<(u64, u64, u64)>> = perms
        .par_iter()
        .map(|p| class_statistics(p, budget.ceiling))
        .collect();
    let mut equality = 0;
    for (p, s) in perms.iter().zip(stats) {
        match s {
            Ok((c, r, a)) => {
                report.add("classes", c);
                report.add("words", r);
                if 2 * c == r + 2 {
                    equality += 1;
                }
                if let Some(why) = class_violation(c, r, a, p.is_identity()) {
                    report.counterexample(format!("{p}: {why} (C={c}, R={r}, A={a})"));
                }
            }
            Err(e) => report.resource_limited(format!("{p}: {e}")),
        }
    }
    report.total("permutations", perms.len() as u64);
    report.total("equality-cases", equality);
    finish(report, started)
}

/// Size of the commutation class of `w`, counting at most `cap` members.
fn class_size_capped(w: &Word, cap: usize, seen: &mut HashSet<Word>) -> usize {
    let mut class = HashSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(x) = queue.pop_front() {
        for y in commutation_moves(&x) {
            if class.len() >= cap {
                return class.len();
            }
            if class.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.extend(class.iter().cloned());
    class.len()
}

fn run_word(from: usize, to: usize) -> Word {
    if from <= to {
        Word::new((from..=to).map(|x| x as Letter).collect())
    } else {
        Word::new((to..=from).rev().map(|x| x as Letter).collect())
    }
}

/// Whether `p` meets the hypotheses under which some class must have at
/// least four elements: atoms exist, neither `m…M` nor `M…m` is one, and
/// `M - m ≥ 4`.
pub fn qualifies_for_big_class(p: &Permutation, atoms: &[Word]) -> bool {
    let Some(bounds) = p.non_fixed_bounds() else {
        return false;
    };
    let (m, top) = bounds.letter_range();
    !atoms.is_empty()
        && top - m >= 4
        && !atoms.contains(&run_word(m, top))
        && !atoms.contains(&run_word(top, m))
}

/// Finds a commutation class of `p` with at least four elements by walking
/// `R(p)` in lexicographic order. The witness is the least member of the first
/// such class. At most `ceiling` words are visited.
pub fn check_big_class(
    p: &Permutation,
    ceiling: u64,
) -> commclass_core::Result<VerificationReport> {
    let started = Instant::now();
    let atoms = atoms_characterized(p);
    if !qualifies_for_big_class(p, &atoms) {
        return Err(Error::Hypothesis(format!(
            "{p} does not satisfy the hypotheses of the big-class check"
        )));
    }
    let mut report = VerificationReport::new("big-class", p.to_string());
    let mut seen = HashSet::new();
    let mut visited = 0u64;
    let mut found = None;
    for w in reduced_words_lex(p) {
        if visited >= ceiling {
            break;
        }
        visited += 1;
        if seen.contains(&w) {
            continue;
        }
        if class_size_capped(&w, 4, &mut seen) >= 4 {
            found = Some(w);
            break;
        }
    }
    report.total("words-visited", visited);
    match found {
        Some(w) => report.witness = Some(w.to_string()),
        None if visited >= ceiling => report.resource_limited(format!("visited {visited} words")),
        None => report.counterexample(p.to_string()),
    }
    Ok(finish(report, started))
}

/// Depth-first walk over unit-step words on `[1, max_letter]` of length
/// `1..=max_len` starting with `root`.
fn consecutive_words(
    root: Letter,
    max_letter: Letter,
    max_len: usize,
    visit: &mut impl FnMut(&[Letter]),
) {
    fn rec(
        w: &mut Vec<Letter>,
        max_letter: Letter,
        max_len: usize,
        visit: &mut impl FnMut(&[Letter]),
    ) {
        visit(w);
        if w.len() == max_len {
            return;
        }
        let last = *w.last().expect("nonempty");
        for next in [last.wrapping_sub(1), last + 1] {
            if (1..=max_letter).contains(&next) {
                w.push(next);
                rec(w, max_letter, max_len, visit);
                w.pop();
            }
        }
    }
    if max_len > 0 {
        rec(&mut vec![root], max_letter, max_len, visit);
    }
}

/// On every consecutive word over `[1, max_letter]` of length at most
/// `max_len`, the segment-factor test agrees with being reduced and
/// commutation-free.
pub fn check_equivalence(max_letter: usize, max_len: usize) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(
        "equivalence",
        format!("letters=1..{max_letter} len<={max_len}"),
    );
    let degree = max_letter + 1;
    let shards: Vec<(u64, u64, Option<String>)> = (1..=max_letter as Letter)
        .into_par_iter()
        .map(|root| {
            let (mut words, mut atoms, mut bad) = (0u64, 0u64, None);
            consecutive_words(root, max_letter as Letter, max_len, &mut |l| {
                let w = Word::new(l.to_vec());
                let by_factors = is_atom_word(&w);
                let by_definition =
                    is_reduced(&w, degree).expect("letters in range") && is_commutation_free(&w);
                words += 1;
                atoms += by_factors as u64;
                if by_factors != by_definition && bad.is_none() {
                    bad = Some(w.to_string());
                }
            });
            (words, atoms, bad)
        })
        .collect();
    for (words, atoms, bad) in shards {
        report.add("words", words);
        report.add("atoms", atoms);
        if let Some(w) = bad {
            report.counterexample(w);
        }
    }
    finish(report, started)
}

/// Searches for a consecutive word passing all five necessary conditions that
/// is nevertheless not reduced; shortest first, then lexicographic.
pub fn check_tenner_insufficiency(max_letter: usize, max_len: usize) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(
        "tenner-insufficiency",
        format!("letters=1..{max_letter} len<={max_len}"),
    );
    let degree = max_letter + 1;
    let mut best: Option<Vec<Letter>> = None;
    let mut searched = 0u64;
    for root in 1..=max_letter as Letter {
        consecutive_words(root, max_letter as Letter, max_len, &mut |l| {
            searched += 1;
            let w = Word::new(l.to_vec());
            let passes = tenner_conditions(&w).map(|t| t.all()).unwrap_or(false);
            if passes && !is_reduced(&w, degree).expect("letters in range") {
                let better = match &best {
                    None => true,
                    Some(b) => (l.len(), l) < (b.len(), b.as_slice()),
                };
                if better {
                    best = Some(l.to_vec());
                }
            }
        });
    }
    report.total("words", searched);
    match best {
        Some(l) => report.witness = Some(Word::new(l).to_string()),
        None => report.resource_limited("no witness within the search space"),
    }
    finish(report, started)
}

/// Every atom of `S_{n+1}` passes the five necessary conditions.
pub fn check_tenner_necessity(n: usize, budget: &Budget) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("tenner-necessity", format!("n={n}"));
    let catalog = match atom_scan(n, budget.atom_rank) {
        Ok(c) => c,
        Err(e) => return limited(report, e, started),
    };
    for (_, words) in catalog.iter() {
        for a in words {
            report.add("atoms", 1);
            if !tenner_conditions(a).map(|t| t.all()).unwrap_or(false) {
                report.counterexample(a.to_string());
            }
        }
    }
    finish(report, started)
}

fn endpoint_letters(a: &Word) -> (Letter, Letter) {
    let l = a.letters();
    (l[0], l[l.len() - 1])
}

/// Structural facts about atoms, checked over all of `S_{n+1}`:
///
/// * `endpoint-segments`: atoms exist only if `σ(m) = M+1` or `σ(M+1) = m`,
///   and each atom contains the matching run `m…M` or `M…m`;
/// * `oscillation-endpoints`: an atom is an oscillation iff it starts or ends
///   with `m` or `M`;
/// * `dichotomy`: the atoms of one permutation are all oscillations or none;
/// * `oscillation-uniqueness`: at most one oscillating atom per endpoint side
///   and endpoint letter;
/// * `non-oscillation-structure`: non-oscillating atoms share `(i, j)` with
///   `i ≠ m`, `j ≠ M` and the forced values of `σ`;
/// * `single-atom`: a non-oscillating atom with `j < i` is the only atom;
/// * `phi-reduction`: for `j ≥ i` the factor-removal map is injective, shortens
///   words, lands in `A(σγ⁻¹)`, and `|A(σ)| ≤ |A(σγ⁻¹)|`;
/// * `big-class`: qualifying permutations have a class of size at least 4;
/// * `reverse-bijection`: reversal maps `A(σ)` onto `A(σ⁻¹)`.
pub fn check_structure(n: usize, budget: &Budget) -> Vec<VerificationReport> {
    let started = Instant::now();
    let range = format!("n={n}");
    let names = [
        "endpoint-segments",
        "oscillation-endpoints",
        "dichotomy",
        "oscillation-uniqueness",
        "non-oscillation-structure",
        "single-atom",
        "phi-reduction",
        "big-class",
        "reverse-bijection",
    ];
    let mut reports: Vec<VerificationReport> = names
        .iter()
        .map(|name| VerificationReport::new(*name, range.clone()))
        .collect();
    let catalog = match atom_scan(n, budget.atom_rank) {
        Ok(c) => c,
        Err(e) => {
            return reports
                .into_iter()
                .map(|r| limited(r, e.clone(), started))
                .collect()
        }
    };
    let entries: Vec<(&Permutation, &[Word])> = catalog.iter().collect();
    let partials: Vec<Vec<VerificationReport>> = entries
        .par_iter()
        .map(|(p, atoms)| {
            let mut local: Vec<VerificationReport> = names
                .iter()
                .map(|name| VerificationReport::new(*name, range.clone()))
                .collect();
            structure_of_one(p, atoms, &catalog, budget, &mut local);
            local
        })
        .collect();
    for local in partials {
        for (acc, part) in reports.iter_mut().zip(local) {
            merge_into(acc, part);
        }
    }
    reports.into_iter().map(|r| finish(r, started)).collect()
}

fn merge_into(acc: &mut VerificationReport, part: VerificationReport) {
    for (k, v) in part.totals {
        acc.add(&k, v);
    }
    match part.verdict {
        Verdict::Counterexample => acc.counterexample(part.witness.unwrap_or_default()),
        Verdict::ResourceLimited => acc.resource_limited(part.witness.unwrap_or_default()),
        Verdict::Holds => {}
    }
}

fn structure_of_one(
    p: &Permutation,
    atoms: &[Word],
    catalog: &AtomCatalog,
    budget: &Budget,
    r: &mut [VerificationReport],
) {
    let [seg, osc_end, dich, uniq, nonosc, single, phi, big, rev] = r else {
        unreachable!("nine reports")
    };
    let (m, top) = p
        .non_fixed_bounds()
        .expect("permutations with atoms move something")
        .letter_range();
    let up = p.image(top + 1) == m;
    let down = p.image(m) == top + 1;

    // Reversal onto the inverse.
    rev.add("permutations", 1);
    let mut reversed: Vec<Word> = atoms.iter().map(Word::reverse).collect();
    reversed.sort_unstable();
    if catalog.atoms_of(&p.inverse()) != reversed.as_slice() {
        rev.counterexample(p.to_string());
    }

    seg.add("permutations", 1);
    if !(up || down) {
        seg.counterexample(format!("{p}: neither endpoint condition"));
    }
    let mut oscillating = 0;
    let mut endpoint_keys = BTreeMap::new();
    let mut shapes = Vec::new();
    for a in atoms {
        let s = match structure_of(p, a) {
            Ok(s) => s,
            Err(e) => {
                seg.counterexample(format!("{p} / {a}: {e}"));
                continue;
            }
        };
        let case_ok = match s.case {
            SegmentCase::Ascending => up,
            SegmentCase::Descending => down,
        };
        if !case_ok {
            seg.counterexample(format!("{p} / {a}: case {:?}", s.case));
        }

        osc_end.add("atoms", 1);
        let (first, last) = endpoint_letters(a);
        let extreme = |x: Letter| x as usize == m || x as usize == top;
        if s.oscillating != (extreme(first) || extreme(last)) {
            osc_end.counterexample(format!("{p} / {a}"));
        }

        if s.oscillating {
            oscillating += 1;
            for (side, letter) in [("left", first), ("right", last)] {
                if extreme(letter) {
                    *endpoint_keys.entry((side, letter)).or_insert(0) += 1;
                }
            }
        } else {
            nonosc.add("atoms", 1);
            shapes.push((s, a));
            let ok = match (s.i, s.j) {
                (Some(i), Some(j)) => {
                    i != m
                        && j != top
                        && match s.case {
                            SegmentCase::Ascending => p.image(m) == j + 1 && p.image(i) == top + 1,
                            SegmentCase::Descending => p.image(j + 1) == m && p.image(top + 1) == i,
                        }
                }
                _ => false,
            };
            if !ok {
                nonosc.counterexample(format!("{p} / {a}: {s:?}"));
            }
        }
    }

    dich.add("permutations", 1);
    if oscillating != 0 && oscillating != atoms.len() {
        dich.counterexample(p.to_string());
    }
    uniq.add("oscillating-atoms", oscillating as u64);
    if endpoint_keys.values().any(|&c| c > 1) || (oscillating == atoms.len() && atoms.len() > 4) {
        uniq.counterexample(p.to_string());
    }

    if let Some((first, _)) = shapes.first() {
        let key = (first.case, first.i, first.j);
        if shapes.iter().any(|(s, _)| (s.case, s.i, s.j) != key) {
            nonosc.counterexample(format!("{p}: (i, j) depends on the atom"));
        }
        if let (Some(i), Some(j)) = (first.i, first.j) {
            if j < i {
                single.add("permutations", 1);
                if atoms.len() != 1 {
                    single.counterexample(p.to_string());
                }
            } else if first.case == SegmentCase::Ascending {
                phi_check(p, atoms, catalog, phi);
            }
        }
    }

    if qualifies_for_big_class(p, atoms) {
        big.add("permutations", 1);
        match check_big_class(p, budget.ceiling) {
            Ok(report) => match report.verdict {
                Verdict::Holds => {}
                Verdict::Counterexample => big.counterexample(p.to_string()),
                Verdict::ResourceLimited => big.resource_limited(p.to_string()),
            },
            Err(e) => big.counterexample(format!("{p}: {e}")),
        }
    }
}

fn phi_check(p: &Permutation, atoms: &[Word], catalog: &AtomCatalog, r: &mut VerificationReport) {
    r.add("permutations", 1);
    let mut images = Vec::with_capacity(atoms.len());
    let mut target: Option<Permutation> = None;
    for a in atoms {
        match phi_reduction(p, a) {
            Ok((w, pi)) => {
                let lands = is_atom_word(&w)
                    && Permutation::apply_word(&w, p.degree()).ok().as_ref() == Some(&pi)
                    && catalog.atoms_of(&pi).contains(&w);
                if w.len() >= a.len() || !lands {
                    r.counterexample(format!("{p} / {a} -> {w}"));
                }
                if target.get_or_insert_with(|| pi.clone()) != &pi {
                    r.counterexample(format!("{p}: target depends on the atom"));
                }
                images.push(w);
            }
            Err(e) => r.counterexample(format!("{p} / {a}: {e}")),
        }
    }
    let count = images.len();
    images.sort_unstable();
    images.dedup();
    if images.len() != count {
        r.counterexample(format!("{p}: not injective"));
    }
    if let Some(pi) = target {
        if atoms.len() > catalog.atoms_of(&pi).len() {
            r.counterexample(format!("{p}: |A| exceeds that of {pi}"));
        }
    }
}

/// Brute-force and characterized atoms agree on all of `S_k` for
/// `k ≤ full_degree`, and on `samples` seeded random permutations of degree
/// `full_degree + 1` or `full_degree + 2`. Sampled permutations whose `R(σ)`
/// exceeds `sample_ceiling` are skipped and counted.
pub fn check_oracle_agreement(
    full_degree: usize,
    samples: usize,
    seed: u64,
    sample_ceiling: u64,
) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(
        "oracle-agreement",
        format!("degree<={full_degree} samples={samples} seed={seed}"),
    );
    let mut perms: Vec<Permutation> = (1..=full_degree).flat_map(Permutation::all).collect();
    report.total("exhaustive", perms.len() as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let degree = full_degree + rng.gen_range(1..=2);
        let mut images: Vec<u32> = (1..=degree as u32).collect();
        images.shuffle(&mut rng);
        perms.push(Permutation::from_images(images).expect("shuffled identity"));
    }
    let results: Vec<Option<bool>> = perms
        .par_iter()
        .map(|p| match atoms_bruteforce_with_ceiling(p, sample_ceiling) {
            Ok(brute) => Some(brute == atoms_characterized(p)),
            Err(_) => None,
        })
        .collect();
    for (p, r) in perms.iter().zip(results) {
        match r {
            Some(true) => report.add("agreed", 1),
            Some(false) => report.counterexample(p.to_string()),
            None => report.add("skipped", 1),
        }
    }
    finish(report, started)
}

/// `max |A(w)| ≤ 4` over `B_n`, with the atom count of the longest element.
pub fn b_scan(n: usize, budget: &Budget) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("bscan", format!("n={n}"));
    if n == 0 || n > budget.b_rank {
        let err = Error::BudgetExceeded {
            n,
            max: budget.b_rank,
        };
        return limited(report, err, started);
    }
    let (counts, best) = match b_atom_histogram(n, budget.ceiling) {
        Ok(r) => r,
        Err(e) => return limited(report, e, started),
    };
    let max = counts.iter().rposition(|&c| c > 0).unwrap_or(0);
    for (k, c) in counts.iter().enumerate() {
        report.total(&format!("a{k}"), *c);
    }
    report.total("elements", counts.iter().sum());
    report.total("max", max as u64);
    match b_atoms(&SignedPermutation::longest(n), budget.ceiling) {
        Ok(a) => {
            report.total("longest-atoms", a.len() as u64);
        }
        Err(e) => report.resource_limited(e.to_string()),
    }
    if max > 4 {
        report.counterexample(best.to_string());
    }
    finish(report, started)
}

/// `|A(w₀)| = 4` in `S_{n+1}` for `3 ≤ n ≤ n_max`, and the maximum over
/// `n ≤ n_max` is exactly 4.
pub fn check_longest_attains(n_max: usize, budget: &Budget) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("longest-attains", format!("n=3..{n_max}"));
    let mut max = 0;
    for n in 1..=n_max {
        let catalog = match atom_scan(n, budget.atom_rank) {
            Ok(c) => c,
            Err(e) => return limited(report, e, started),
        };
        max = max.max(catalog.histogram().max_atoms());
        if n >= 3 {
            let k = catalog.atoms_of(&Permutation::longest(n + 1)).len();
            if k != 4 {
                report.counterexample(format!("w0 of degree {} has {k} atoms", n + 1));
            }
        }
    }
    report.total("max", max as u64);
    if max != 4 {
        report.counterexample(format!("maximum is {max}"));
    }
    finish(report, started)
}

/// The default suite: every check at its standard parameters.
pub fn standard_suite(budget: &Budget, seed: u64) -> Vec<VerificationReport> {
    let mut out = vec![check_table(7, budget), check_final_row(budget)];
    for n in 1..=8 {
        out.push(check_bound(n, budget));
        out.push(check_spectrum(n, budget));
    }
    out.push(check_longest_attains(8, budget));
    for n in 1..=5 {
        out.push(check_class_inequality(n, budget));
    }
    out.push(check_equivalence(5, 15));
    out.push(check_tenner_necessity(7, budget));
    out.push(check_tenner_insufficiency(5, 15));
    out.extend(check_structure(6, budget));
    out.push(check_oracle_agreement(6, 1000, seed, ORACLE_SAMPLE_CEILING));
    for n in 2..=budget.b_rank.min(4) {
        out.push(b_scan(n, budget));
    }
    out
}
