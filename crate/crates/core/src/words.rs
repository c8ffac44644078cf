//! Reduced words, commutation and braid moves, commutation classes.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, ParseErrorKind, Result};
use crate::perm::{Permutation, Scanner};
use crate::unionfind::UnionFind;

/// Generator index. Type A uses `1..=n`; type B uses `0..n`.
pub type Letter = u16;

/// Default ceiling on `|R(σ)|` before enumeration is refused.
pub const DEFAULT_CEILING: u64 = 10_000_000;

/// A finite sequence of generator indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The word read backwards. Evaluates to the inverse permutation.
    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Adds `k` to every letter.
    pub fn shift(&self, k: Letter) -> Word {
        Word(self.0.iter().map(|&x| x + k).collect())
    }

    /// Largest letter, or 0 for the empty word.
    pub fn max_letter(&self) -> Letter {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&x| x <= 9) {
            for &x in &self.0 {
                write!(f, "{x}")?;
            }
        } else {
            for (k, &x) in self.0.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Digit strings (`"21232"`) or comma-separated letters (`"10,9,10"`).
    fn from_str(s: &str) -> Result<Self> {
        if s.contains(',') {
            let mut sc = Scanner::new(s);
            let mut letters = Vec::new();
            loop {
                sc.skip_ws();
                let (at, v) = sc.integer(false)?;
                let letter = Letter::try_from(v).map_err(|_| Error::Parse {
                    position: at,
                    kind: ParseErrorKind::OutOfRange(v as u64),
                })?;
                letters.push(letter);
                sc.skip_ws();
                if sc.at_end() {
                    break;
                }
                if !sc.eat(b',') {
                    return Err(Error::Parse {
                        position: sc.pos,
                        kind: ParseErrorKind::Malformed("expected ',' between letters"),
                    });
                }
            }
            Ok(Word(letters))
        } else {
            let mut letters = Vec::new();
            for (at, c) in s.char_indices() {
                if c.is_whitespace() {
                    continue;
                }
                let d = c.to_digit(10).ok_or(Error::Parse {
                    position: at,
                    kind: ParseErrorKind::Malformed("expected a digit"),
                })?;
                letters.push(d as Letter);
            }
            Ok(Word(letters))
        }
    }
}

/// Whether `w` has minimal length for the permutation it evaluates to.
pub fn is_reduced(w: &Word, degree: usize) -> Result<bool> {
    Ok(Permutation::apply_word(w, degree)?.length() == w.len())
}

/// `|R(σ)|` by memoized descent recursion: `|R(σ)| = Σ_{i right descent} |R(σ s_i)|`.
pub fn count_reduced_words(p: &Permutation) -> BigUint {
    let mut memo = BTreeMap::new();
    count_rec(&mut p.clone(), &mut memo)
}

fn count_rec(p: &mut Permutation, memo: &mut BTreeMap<Vec<u32>, BigUint>) -> BigUint {
    if let Some(c) = memo.get(p.images()) {
        return c.clone();
    }
    let mut total = BigUint::zero();
    let mut any = false;
    for i in 1..p.degree() {
        if p.has_right_descent(i) {
            any = true;
            p.mul_generator(i).expect("descent index in range");
            total += count_rec(p, memo);
            p.mul_generator(i).expect("descent index in range");
        }
    }
    if !any {
        total = BigUint::one();
    }
    memo.insert(p.images().to_vec(), total.clone());
    total
}

/// `R(σ)` in lexicographic order, refused above [`DEFAULT_CEILING`] words.
pub fn reduced_words(p: &Permutation) -> Result<Vec<Word>> {
    reduced_words_with_ceiling(p, DEFAULT_CEILING)
}

pub fn reduced_words_with_ceiling(p: &Permutation, ceiling: u64) -> Result<Vec<Word>> {
    let count = count_reduced_words(p);
    if count > BigUint::from(ceiling) {
        return Err(Error::CeilingExceeded { count, ceiling });
    }
    let mut out = Vec::with_capacity(count.to_usize().unwrap_or(0));
    let mut suffix = Vec::with_capacity(p.length());
    collect_rec(&mut p.clone(), &mut suffix, &mut out);
    out.sort_unstable();
    Ok(out)
}

// Words are built right to left: a right descent i of σ is a possible last letter,
// preceded by a reduced word of σ s_i.
fn collect_rec(p: &mut Permutation, suffix: &mut Vec<Letter>, out: &mut Vec<Word>) {
    let mut leaf = true;
    for i in 1..p.degree() {
        if p.has_right_descent(i) {
            leaf = false;
            p.mul_generator(i).expect("descent index in range");
            suffix.push(i as Letter);
            collect_rec(p, suffix, out);
            suffix.pop();
            p.mul_generator(i).expect("descent index in range");
        }
    }
    if leaf {
        out.push(Word(suffix.iter().rev().copied().collect()));
    }
}

/// Lazily yields `R(σ)` in lexicographic order, choosing left descents first to last.
pub fn reduced_words_lex(p: &Permutation) -> LexReducedWords {
    LexReducedWords {
        stack: alloc::vec![(p.clone(), 1)],
        prefix: Vec::new(),
    }
}

pub struct LexReducedWords {
    stack: Vec<(Permutation, usize)>,
    prefix: Vec<Letter>,
}

impl Iterator for LexReducedWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            let (rest, next) = self.stack.last_mut()?;
            if rest.is_identity() {
                let w = Word(self.prefix.clone());
                self.stack.pop();
                self.prefix.pop();
                return Some(w);
            }
            let mut found = None;
            while *next < rest.degree() {
                let i = *next;
                *next += 1;
                if rest.has_left_descent(i) {
                    found = Some(i);
                    break;
                }
            }
            match found {
                Some(i) => {
                    let mut child = rest.clone();
                    child.left_mul_generator(i).expect("descent index in range");
                    self.stack.push((child, 1));
                    self.prefix.push(i as Letter);
                }
                None => {
                    self.stack.pop();
                    self.prefix.pop();
                }
            }
        }
    }
}

/// Words reachable by one commutation `ij ↦ ji` with `|i - j| ≥ 2`, sorted.
pub fn commutation_moves(w: &Word) -> Vec<Word> {
    let l = w.letters();
    let mut out: Vec<Word> = (0..l.len().saturating_sub(1))
        .filter(|&k| l[k].abs_diff(l[k + 1]) >= 2)
        .map(|k| {
            let mut v = l.to_vec();
            v.swap(k, k + 1);
            Word(v)
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Whether no commutation applies to `w`.
pub fn is_commutation_free(w: &Word) -> bool {
    w.letters().windows(2).all(|p| p[0].abs_diff(p[1]) < 2)
}

/// Words reachable by one braid move `i(i+1)i ↔ (i+1)i(i+1)`, sorted.
pub fn braid_moves(w: &Word) -> Vec<Word> {
    let l = w.letters();
    let mut out: Vec<Word> = (0..l.len().saturating_sub(2))
        .filter(|&k| l[k] == l[k + 2] && l[k].abs_diff(l[k + 1]) == 1)
        .map(|k| {
            let mut v = l.to_vec();
            let (a, b) = (l[k], l[k + 1]);
            v[k] = b;
            v[k + 1] = a;
            v[k + 2] = b;
            Word(v)
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// The commutation classes `C(σ)`: each class sorted, classes ordered by their
/// lexicographically least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPartition {
    permutation: Permutation,
    classes: Vec<Vec<Word>>,
}

impl ClassPartition {
    pub fn permutation(&self) -> &Permutation {
        &self.permutation
    }

    pub fn classes(&self) -> &[Vec<Word>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representatives(&self) -> impl Iterator<Item = &Word> {
        self.classes.iter().map(|c| &c[0])
    }

    /// Total number of words, which is `|R(σ)|`.
    pub fn word_count(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    /// Members of one-element classes, excluding the empty word of the identity.
    pub fn singletons(&self) -> Vec<Word> {
        self.classes
            .iter()
            .filter(|c| c.len() == 1 && !c[0].is_empty())
            .map(|c| c[0].clone())
            .collect()
    }

    pub fn class_of(&self, w: &Word) -> Option<&[Word]> {
        self.classes
            .iter()
            .find(|c| c.binary_search(w).is_ok())
            .map(Vec::as_slice)
    }
}

pub fn commutation_classes(p: &Permutation) -> Result<ClassPartition> {
    commutation_classes_with_ceiling(p, DEFAULT_CEILING)
}

/// Connected components of `R(σ)` under [`commutation_moves`].
pub fn commutation_classes_with_ceiling(p: &Permutation, ceiling: u64) -> Result<ClassPartition> {
    let words = reduced_words_with_ceiling(p, ceiling)?;
    Ok(partition_words(p.clone(), words))
}

/// Groups a sorted, move-closed word list into commutation classes.
fn partition_words(permutation: Permutation, words: Vec<Word>) -> ClassPartition {
    let mut uf = UnionFind::new(words.len());
    for (k, w) in words.iter().enumerate() {
        for nb in commutation_moves(w) {
            let j = words
                .binary_search(&nb)
                .expect("R(σ) is closed under commutation");
            uf.union(k, j);
        }
    }
    let mut groups: BTreeMap<usize, Vec<Word>> = BTreeMap::new();
    let roots: Vec<usize> = (0..words.len()).map(|k| uf.find(k)).collect();
    for (w, root) in words.into_iter().zip(roots) {
        groups.entry(root).or_default().push(w);
    }
    // Members arrive in sorted order, so each group's head is its least word.
    let mut classes: Vec<Vec<Word>> = groups.into_values().collect();
    classes.sort_unstable_by(|a, b| a[0].cmp(&b[0]));
    ClassPartition {
        permutation,
        classes,
    }
}

/// Renders a word list one per line; the empty word is shown as `()`.
pub fn format_word_list(words: &[Word]) -> alloc::string::String {
    let mut s = alloc::string::String::new();
    for w in words {
        if w.is_empty() {
            s.push_str("()");
        } else {
            s.push_str(&w.to_string());
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;
    use alloc::vec;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn strings(ws: &[Word]) -> Vec<String> {
        ws.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn word_text_forms() {
        assert_eq!(w("21232").letters(), &[2, 1, 2, 3, 2]);
        assert_eq!(w("10,9,10").letters(), &[10, 9, 10]);
        assert_eq!(w("1, 2").to_string(), "12");
        assert_eq!(Word::new(vec![10, 9]).to_string(), "10,9");
        assert_eq!(w(""), Word::empty());
        assert!(matches!(
            "12a".parse::<Word>(),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            "1,,2".parse::<Word>(),
            Err(Error::Parse { position: 2, .. })
        ));
    }

    #[test]
    fn is_reduced_examples() {
        assert!(is_reduced(&w("12132"), 4).unwrap());
        assert!(!is_reduced(&w("11"), 2).unwrap());
        assert!(!is_reduced(&w("1232123"), 4).unwrap());
        assert!(is_reduced(&w("13"), 3).is_err());
    }

    #[test]
    fn reduced_words_examples() {
        assert_eq!(
            strings(&reduced_words(&p("3,4,2,1")).unwrap()),
            ["12132", "12312", "21232", "21323", "23123"]
        );
        assert_eq!(strings(&reduced_words(&p("2,1")).unwrap()), ["1"]);
        assert_eq!(
            strings(&reduced_words(&Permutation::longest(3)).unwrap()),
            ["121", "212"]
        );
        assert_eq!(
            reduced_words(&Permutation::identity(3)).unwrap(),
            vec![Word::empty()]
        );
    }

    #[test]
    fn ceiling_is_enforced() {
        let err = reduced_words_with_ceiling(&Permutation::longest(4), 10).unwrap_err();
        assert_eq!(
            err,
            Error::CeilingExceeded {
                count: BigUint::from(16u32),
                ceiling: 10
            }
        );
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_reduced_words(&p("3,4,2,1")), BigUint::from(5u32));
        assert_eq!(
            count_reduced_words(&Permutation::identity(4)),
            BigUint::from(1u32)
        );
        let materialized = reduced_words(&Permutation::longest(4)).unwrap().len();
        assert_eq!(materialized, 16);
        assert_eq!(
            count_reduced_words(&Permutation::longest(4)),
            BigUint::from(16u32)
        );
    }

    #[test]
    fn lex_iterator_matches_sorted_enumeration() {
        for q in Permutation::all(5) {
            let lazy: Vec<Word> = reduced_words_lex(&q).collect();
            assert_eq!(lazy, reduced_words(&q).unwrap(), "{q}");
        }
    }

    #[test]
    fn move_examples() {
        assert_eq!(strings(&commutation_moves(&w("12132"))), ["12312"]);
        assert!(commutation_moves(&w("21232")).is_empty());
        assert_eq!(strings(&commutation_moves(&w("13"))), ["31"]);
        assert_eq!(strings(&braid_moves(&w("121"))), ["212"]);
        assert!(braid_moves(&w("13")).is_empty());
        // 212 at the front and 232 at the back are the two braid factors.
        assert_eq!(strings(&braid_moves(&w("21232"))), ["12132", "21323"]);
    }

    #[test]
    fn class_examples() {
        let c = commutation_classes(&p("3,4,2,1")).unwrap();
        let got: Vec<Vec<String>> = c.classes().iter().map(|k| strings(k)).collect();
        assert_eq!(
            got,
            vec![
                vec!["12132", "12312"],
                vec!["21232"],
                vec!["21323", "23123"],
            ]
        );
        assert_eq!(strings(&c.singletons()), ["21232"]);
        assert_eq!(c.class_of(&w("23123")).unwrap().len(), 2);

        let c = commutation_classes(&p("1,3,2")).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(strings(&c.classes()[0]), ["2"]);

        let c = commutation_classes(&Permutation::longest(3)).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.classes().iter().all(|k| k.len() == 1));
    }

    #[test]
    fn shift_and_reverse_examples() {
        assert_eq!(w("121").shift(2).to_string(), "343");
        assert_eq!(w("21232").shift(1).to_string(), "32343");
        assert_eq!(w("12132").reverse().to_string(), "23121");
        assert_eq!(w("4").reverse(), w("4"));
    }
}
