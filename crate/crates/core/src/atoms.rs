//! One-element commutation classes (atoms) of a permutation.
//!
//! `A(σ)` is computed three ways:
//!
//! * [`atoms_bruteforce`] materializes `R(σ)` and keeps the words admitting no
//!   commutation;
//! * [`atoms_characterized`] searches words formed by consecutive integers on
//!   the letters `[m, M]`, discarding any prefix that contains a repeated or
//!   symmetric segment factor;
//! * [`enumerate_atoms_all`] runs that search once over all letters `[1, n]`
//!   and buckets every word by the permutation it evaluates to, which yields
//!   `A(σ)` for the whole of `S_{n+1}` at once.
//!
//! Forbidden factors are inherited by every extension of a word, so pruning a
//! bad prefix never loses an atom.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{is_atom_word, is_oscillation, line_diagram, suffix_has_witness};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::words::{commutation_classes_with_ceiling, Letter, Word, DEFAULT_CEILING};

/// Default largest `n` (letters `1..=n`, degree `n + 1`) for a global scan.
pub const DEFAULT_MAX_RANK: usize = 9;

/// `A(σ)` as the one-element classes of the materialized `R(σ)`.
pub fn atoms_bruteforce(p: &Permutation) -> Result<Vec<Word>> {
    atoms_bruteforce_with_ceiling(p, DEFAULT_CEILING)
}

pub fn atoms_bruteforce_with_ceiling(p: &Permutation, ceiling: u64) -> Result<Vec<Word>> {
    Ok(commutation_classes_with_ceiling(p, ceiling)?.singletons())
}

/// Depth-first walk over witness-free unit-step words on `[lo, hi]` of length
/// at most `max_len`, tracking the evaluated permutation. The smaller next
/// letter is visited first.
fn walk(
    roots: impl Iterator<Item = Letter>,
    lo: Letter,
    hi: Letter,
    max_len: usize,
    degree: usize,
    visit: &mut impl FnMut(&[Letter], &Permutation),
) {
    if max_len == 0 {
        return;
    }
    let mut word = Vec::with_capacity(max_len);
    let mut perm = Permutation::identity(degree);
    for root in roots {
        word.push(root);
        perm.mul_generator(root as usize)
            .expect("root letter in range");
        extend(&mut word, &mut perm, lo, hi, max_len, visit);
        perm.mul_generator(root as usize)
            .expect("root letter in range");
        word.pop();
    }
}

fn extend(
    word: &mut Vec<Letter>,
    perm: &mut Permutation,
    lo: Letter,
    hi: Letter,
    max_len: usize,
    visit: &mut impl FnMut(&[Letter], &Permutation),
) {
    visit(word, perm);
    if word.len() >= max_len {
        return;
    }
    let last = *word.last().expect("walk starts from a root letter");
    for next in [last.wrapping_sub(1), last + 1] {
        if next < lo || next > hi {
            continue;
        }
        word.push(next);
        if !suffix_has_witness(word) {
            perm.mul_generator(next as usize).expect("letter in range");
            extend(word, perm, lo, hi, max_len, visit);
            perm.mul_generator(next as usize).expect("letter in range");
        }
        word.pop();
    }
}

/// `A(σ)` by pruned search over consecutive words on `[m, M]` of length `ℓ(σ)`,
/// without materializing `R(σ)`. Sorted.
pub fn atoms_characterized(p: &Permutation) -> Vec<Word> {
    let Some(bounds) = p.non_fixed_bounds() else {
        return Vec::new();
    };
    let (m, top) = bounds.letter_range();
    let target_len = p.length();
    let mut found = Vec::new();
    walk(
        m as Letter..=top as Letter,
        m as Letter,
        top as Letter,
        target_len,
        p.degree(),
        &mut |word, perm| {
            if word.len() == target_len && perm == p {
                found.push(Word::new(word.to_vec()));
            }
        },
    );
    found.sort_unstable();
    found
}

/// Atom sets of every permutation of `S_{n+1}`; permutations without atoms are absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomCatalog {
    n: usize,
    buckets: BTreeMap<Permutation, Vec<Word>>,
}

impl AtomCatalog {
    pub fn new(n: usize) -> Self {
        AtomCatalog {
            n,
            buckets: BTreeMap::new(),
        }
    }

    /// Number of generators; permutations have degree `n + 1`.
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn atoms_of(&self, p: &Permutation) -> &[Word] {
        self.buckets.get(p).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Permutations with at least one atom, in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &[Word])> {
        self.buckets.iter().map(|(p, w)| (p, w.as_slice()))
    }

    pub fn len(&self) -> usize {
        self.buckets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.buckets.is_empty()
    }

    /// Inserts the atom set of `p`; used when loading persisted scans.
    pub fn insert(&mut self, p: Permutation, mut words: Vec<Word>) {
        words.sort_unstable();
        if !words.is_empty() {
            self.buckets.insert(p, words);
        }
    }

    /// Folds another shard of the same rank into this one.
    pub fn merge(&mut self, other: AtomCatalog) {
        assert_eq!(self.n, other.n, "merging catalogs of different rank");
        for (p, words) in other.buckets {
            let slot = self.buckets.entry(p).or_default();
            slot.extend(words);
            slot.sort_unstable();
            slot.dedup();
        }
    }

    pub fn histogram(&self) -> AtomHistogram {
        let total = factorial(self.n + 1);
        let mut counts = vec![0u64; 5];
        for words in self.buckets.values() {
            if words.len() >= counts.len() {
                counts.resize(words.len() + 1, 0);
            }
            counts[words.len()] += 1;
        }
        counts[0] = total - self.buckets.len() as u64;
        AtomHistogram { n: self.n, counts }
    }
}

/// Number of permutations of `S_{n+1}` with exactly `k` atoms, `k = 0, 1, ...`
/// (at least five columns).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomHistogram {
    pub n: usize,
    pub counts: Vec<u64>,
}

impl AtomHistogram {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Largest `k` with a nonzero count.
    pub fn max_atoms(&self) -> usize {
        self.counts.iter().rposition(|&c| c > 0).unwrap_or(0)
    }
}

pub fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// Global scan of `S_{n+1}` under the default rank budget.
pub fn enumerate_atoms_all(n: usize) -> Result<AtomCatalog> {
    enumerate_atoms_all_with_budget(n, DEFAULT_MAX_RANK)
}

pub fn enumerate_atoms_all_with_budget(n: usize, max_n: usize) -> Result<AtomCatalog> {
    if n == 0 || n > max_n || n > 19 {
        return Err(Error::BudgetExceeded {
            n,
            max: max_n.min(19),
        });
    }
    let mut catalog = AtomCatalog::new(n);
    for root in 1..=n as Letter {
        catalog.merge(enumerate_atoms_rooted(n, root));
    }
    Ok(catalog)
}

/// The shard of the global scan whose words start with `root`.
pub fn enumerate_atoms_rooted(n: usize, root: Letter) -> AtomCatalog {
    let mut buckets: BTreeMap<Permutation, Vec<Word>> = BTreeMap::new();
    walk(
        core::iter::once(root),
        1,
        n as Letter,
        n * (n + 1) / 2,
        n + 1,
        &mut |word, perm| {
            buckets
                .entry(perm.clone())
                .or_default()
                .push(Word::new(word.to_vec()));
        },
    );
    for words in buckets.values_mut() {
        words.sort_unstable();
    }
    AtomCatalog { n, buckets }
}

/// Which of the two full segments between `m` and `M` an atom contains.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SegmentCase {
    /// Contains `m (m+1) ... M`; then `σ(M+1) = m`.
    Ascending,
    /// Contains `M (M-1) ... m`; then `σ(m) = M+1`.
    Descending,
}

/// Skeleton of an atom relative to the non-fixed bounds `m`, `M + 1`.
///
/// For a non-oscillating atom in the ascending case the word reads
/// `p j…m…M…i q` where `j` is the pinnacle before the vale `m` and `i` the vale
/// after the pinnacle `M`; in the descending case it reads `p i…M…m…j q`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AtomStructure {
    pub case: SegmentCase,
    pub m: usize,
    pub top: usize,
    pub i: Option<usize>,
    pub j: Option<usize>,
    pub oscillating: bool,
}

fn find_run(l: &[Letter], from: usize, to: usize) -> Option<usize> {
    let len = from.abs_diff(to) + 1;
    let run: Vec<Letter> = if from <= to {
        (from..=to).map(|x| x as Letter).collect()
    } else {
        (to..=from).rev().map(|x| x as Letter).collect()
    };
    l.windows(len).position(|w| w == run.as_slice())
}

fn require_atom(p: &Permutation, a: &Word) -> Result<()> {
    let evaluates = Permutation::apply_word(a, p.degree()).ok().as_ref() == Some(p);
    if evaluates && is_atom_word(a) {
        Ok(())
    } else {
        Err(Error::NotAnAtom {
            word: a.to_string(),
            permutation: p.to_string(),
        })
    }
}

/// Structure of `a ∈ A(p)`. The case is read from the word itself, since a
/// permutation may satisfy both `σ(m) = M+1` and `σ(M+1) = m`.
pub fn structure_of(p: &Permutation, a: &Word) -> Result<AtomStructure> {
    require_atom(p, a)?;
    let (m, top) = p
        .non_fixed_bounds()
        .expect("a nonempty atom moves something")
        .letter_range();
    let l = a.letters();
    let oscillating = is_oscillation(a)?;
    let (case, start) = if let Some(s) = find_run(l, m, top) {
        (SegmentCase::Ascending, s)
    } else if let Some(s) = find_run(l, top, m) {
        (SegmentCase::Descending, s)
    } else {
        return Err(Error::TheoremViolation(format!(
            "atom {a} of {p} contains neither {m}..{top} nor {top}..{m}"
        )));
    };
    let mut out = AtomStructure {
        case,
        m,
        top,
        i: None,
        j: None,
        oscillating,
    };
    if !oscillating {
        let spikes = line_diagram(a)?.spikes().to_vec();
        let run_end = start + (top - m);
        let idx_start = spikes.iter().position(|s| s.position == start + 1);
        let idx_end = spikes.iter().position(|s| s.position == run_end + 1);
        if let (Some(ks), Some(ke)) = (idx_start, idx_end) {
            let before = ks.checked_sub(1).map(|k| spikes[k].value as usize);
            let after = spikes.get(ke + 1).map(|s| s.value as usize);
            match case {
                SegmentCase::Ascending => {
                    out.j = before;
                    out.i = after;
                }
                SegmentCase::Descending => {
                    out.i = before;
                    out.j = after;
                }
            }
        }
    }
    Ok(out)
}

/// The length-reducing map on a non-oscillating ascending-case atom with
/// `j ≥ i`: deletes the factor `(i-1)…m…M…i` and returns the shorter word
/// together with `σ γ⁻¹`, `γ = (i m)(i M+1)`.
pub fn phi_reduction(p: &Permutation, a: &Word) -> Result<(Word, Permutation)> {
    let s = structure_of(p, a)?;
    if s.oscillating {
        return Err(Error::Hypothesis("atom is an oscillation".to_string()));
    }
    if s.case != SegmentCase::Ascending {
        return Err(Error::Hypothesis(
            "atom is in the descending case".to_string(),
        ));
    }
    let (i, j) = match (s.i, s.j) {
        (Some(i), Some(j)) => (i, j),
        _ => return Err(Error::Hypothesis("missing structural integers".to_string())),
    };
    if j < i {
        return Err(Error::Hypothesis(format!("j = {j} < i = {i}")));
    }
    let l = a.letters();
    let vale = find_run(l, s.m, s.top).expect("ascending case has the run");
    let start = vale - (i - 1 - s.m);
    let end = vale + (s.top - s.m) + (s.top - i);
    let mut letters = l[..start].to_vec();
    letters.extend_from_slice(&l[end + 1..]);

    let gamma = cycle_product(p.degree(), &[(i, s.m), (i, s.top + 1)]);
    let reduced = p.compose(&gamma.inverse())?;
    Ok((Word::new(letters), reduced))
}

/// `(a₁ b₁)(a₂ b₂)…` composed right to left.
fn cycle_product(degree: usize, transpositions: &[(usize, usize)]) -> Permutation {
    let mut images: Vec<u32> = (1..=degree as u32).collect();
    for &(a, b) in transpositions.iter().rev() {
        // Post-compose with (a b): swap the values a and b.
        for v in images.iter_mut() {
            if *v as usize == a {
                *v = b as u32;
            } else if *v as usize == b {
                *v = a as u32;
            }
        }
    }
    Permutation::from_images(images).expect("product of transpositions")
}

/// Whether the atoms of a permutation are all oscillations, none, or absent.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dichotomy {
    AllOscillating,
    NoneOscillating,
    Empty,
}

pub fn oscillation_dichotomy(p: &Permutation) -> Result<Dichotomy> {
    let atoms = atoms_characterized(p);
    if atoms.is_empty() {
        return Ok(Dichotomy::Empty);
    }
    let flags: Vec<bool> = atoms.iter().map(is_oscillation).collect::<Result<_>>()?;
    if flags.iter().all(|&f| f) {
        Ok(Dichotomy::AllOscillating)
    } else if flags.iter().all(|&f| !f) {
        Ok(Dichotomy::NoneOscillating)
    } else {
        Err(Error::TheoremViolation(format!(
            "{p} has both oscillating and non-oscillating atoms"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;
    use alloc::string::String;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn example_sigma() -> Permutation {
        parse_permutation("(9 2 10 1 8 3)(4 7)(5 6)", Some(10)).unwrap()
    }

    fn strings(ws: &[Word]) -> Vec<String> {
        ws.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(
            strings(&atoms_bruteforce(&p("3,4,2,1")).unwrap()),
            ["21232"]
        );
        assert!(atoms_bruteforce(&Permutation::identity(3))
            .unwrap()
            .is_empty());
        assert_eq!(atoms_bruteforce(&Permutation::longest(5)).unwrap().len(), 4);
    }

    #[test]
    fn characterized_examples() {
        assert_eq!(strings(&atoms_characterized(&p("3,4,2,1"))), ["21232"]);
        assert_eq!(strings(&atoms_characterized(&p("1,3,2"))), ["2"]);
        assert!(atoms_characterized(&Permutation::identity(4)).is_empty());
        let sigma = example_sigma();
        let found = atoms_characterized(&sigma);
        assert!(!found.is_empty());
        let factor = w("7654321234567898765432");
        for a in &found {
            let hay = a.letters();
            assert!(
                hay.windows(factor.len()).any(|x| x == factor.letters()),
                "{a} lacks the factor"
            );
        }
    }

    #[test]
    fn small_histograms() {
        assert_eq!(
            enumerate_atoms_all(1).unwrap().histogram().counts,
            [1, 1, 0, 0, 0]
        );
        assert_eq!(
            enumerate_atoms_all(2).unwrap().histogram().counts,
            [1, 4, 1, 0, 0]
        );
        assert_eq!(
            enumerate_atoms_all(3).unwrap().histogram().counts,
            [5, 15, 3, 0, 1]
        );
        assert!(matches!(
            enumerate_atoms_all(10),
            Err(Error::BudgetExceeded { n: 10, max: 9 })
        ));
        assert!(enumerate_atoms_all(0).is_err());
    }

    #[test]
    fn structure_examples() {
        // PV(21232) = 2132 has gaps (1, 2, 1) and neither 1 nor 3 is an endpoint.
        let s = structure_of(&p("3,4,2,1"), &w("21232")).unwrap();
        assert_eq!(s.case, SegmentCase::Ascending);
        assert_eq!((s.m, s.top, s.i, s.j), (1, 3, Some(2), Some(2)));
        assert!(!s.oscillating);

        let s = structure_of(&p("2,3,1"), &w("12")).unwrap();
        assert_eq!(s.case, SegmentCase::Ascending);
        assert_eq!((s.m, s.top), (1, 2));
        assert!(s.oscillating);

        let sigma = example_sigma();
        for a in atoms_characterized(&sigma) {
            let s = structure_of(&sigma, &a).unwrap();
            assert_eq!(s.case, SegmentCase::Ascending);
            assert_eq!((s.m, s.top, s.i, s.j), (1, 9, Some(2), Some(7)));
            assert!(!s.oscillating);
        }

        assert!(matches!(
            structure_of(&p("3,4,2,1"), &w("12132")),
            Err(Error::NotAnAtom { .. })
        ));
    }

    #[test]
    fn dichotomy_examples() {
        assert_eq!(
            oscillation_dichotomy(&p("3,4,2,1")).unwrap(),
            Dichotomy::NoneOscillating
        );
        assert_eq!(
            oscillation_dichotomy(&Permutation::longest(4)).unwrap(),
            Dichotomy::AllOscillating
        );
        assert_eq!(
            oscillation_dichotomy(&example_sigma()).unwrap(),
            Dichotomy::NoneOscillating
        );
        assert_eq!(
            oscillation_dichotomy(&Permutation::identity(3)).unwrap(),
            Dichotomy::Empty
        );
    }

    #[test]
    fn phi_on_the_worked_example() {
        // j = i = 2: the factor 1232 is removed and the single letter 2 remains.
        let (word, reduced) = phi_reduction(&p("3,4,2,1"), &w("21232")).unwrap();
        assert_eq!(word, w("2"));
        assert_eq!(reduced, p("1,3,2,4"));
    }

    #[test]
    fn phi_rejects_oscillations() {
        assert!(matches!(
            phi_reduction(&p("2,3,1"), &w("12")),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn gamma_is_the_removed_factor() {
        // (i-1)…m…M…i with m = 1, M = 5, i = 3: the factor 2123454 3.
        let factor = w("21234543");
        let gamma = cycle_product(7, &[(3, 1), (3, 6)]);
        assert_eq!(Permutation::apply_word(&factor, 7).unwrap(), gamma);
    }
}
