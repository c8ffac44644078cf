//! Permutations of `[n+1]` in one-line notation.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, ParseErrorKind, Result};
use crate::words::Word;

/// A bijection on `{1, ..., degree}` stored by its images `σ(1), ..., σ(degree)`.
///
/// Ordering is lexicographic on the image sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<u32>,
}

/// Minimum and maximum non-fixed points `m` and `M + 1` of a non-identity permutation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NonFixedBounds {
    /// `m`, the smallest position with `σ(m) != m`.
    pub min_moved: usize,
    /// `M + 1`, the largest position with `σ(M+1) != M+1`.
    pub max_moved: usize,
}

impl NonFixedBounds {
    /// The letter range `[m, M]` every reduced word lives in.
    pub fn letter_range(&self) -> (usize, usize) {
        (self.min_moved, self.max_moved - 1)
    }
}

impl Permutation {
    /// Builds a permutation from 1-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(Error::Parse {
                    position: 0,
                    kind: ParseErrorKind::OutOfRange(v as u64),
                });
            }
            if seen[v] {
                return Err(Error::Parse {
                    position: 0,
                    kind: ParseErrorKind::Repeated(v as u64),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "degree must be positive");
        Permutation {
            images: (1..=degree as u32).collect(),
        }
    }

    /// The order-reversing permutation `w₀ = (degree, ..., 2, 1)`.
    pub fn longest(degree: usize) -> Self {
        assert!(degree >= 1, "degree must be positive");
        Permutation {
            images: (1..=degree as u32).rev().collect(),
        }
    }

    /// The adjacent transposition `s_i = (i i+1)`.
    pub fn generator(degree: usize, i: usize) -> Result<Self> {
        let mut p = Self::identity(degree);
        p.mul_generator(i)?;
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `σ(x)` for a 1-based position `x`.
    pub fn image(&self, x: usize) -> usize {
        self.images[x - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &v)| v as usize == k + 1)
    }

    /// `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize - 1])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = k as u32 + 1;
        }
        Permutation { images: inv }
    }

    /// Number of inversion pairs, which is the length of any reduced word.
    pub fn length(&self) -> usize {
        let v = &self.images;
        let mut count = 0;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                if v[a] > v[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Smallest and largest moved positions, or `None` for the identity.
    pub fn non_fixed_bounds(&self) -> Option<NonFixedBounds> {
        let moved = |k: &usize| self.images[*k] as usize != *k + 1;
        let lo = (0..self.degree()).find(moved)?;
        let hi = (0..self.degree()).rev().find(moved)?;
        Some(NonFixedBounds {
            min_moved: lo + 1,
            max_moved: hi + 1,
        })
    }

    /// Whether every reduced word of `self` uses the letter `i`, i.e.
    /// `{σ(1), ..., σ(i)} != {1, ..., i}`.
    pub fn letter_in_support(&self, i: usize) -> Result<bool> {
        self.check_letter(i)?;
        Ok(self.images[..i].iter().any(|&v| v as usize > i))
    }

    /// True when `ℓ(σ s_i) < ℓ(σ)`, i.e. `σ(i) > σ(i+1)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// True when `ℓ(s_i σ) < ℓ(σ)`, i.e. `i + 1` appears left of `i` in one-line form.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.images.iter().position(|&x| x as usize == v).unwrap();
        pos(i + 1) < pos(i)
    }

    /// Right multiplication by `s_i`, which swaps positions `i` and `i + 1`.
    pub fn mul_generator(&mut self, i: usize) -> Result<()> {
        self.check_letter(i)?;
        self.images.swap(i - 1, i);
        Ok(())
    }

    /// Left multiplication by `s_i`, which swaps the values `i` and `i + 1`.
    pub fn left_mul_generator(&mut self, i: usize) -> Result<()> {
        self.check_letter(i)?;
        for v in self.images.iter_mut() {
            if *v as usize == i {
                *v += 1;
            } else if *v as usize == i + 1 {
                *v -= 1;
            }
        }
        Ok(())
    }

    /// Evaluates `s_{i₁} ∘ s_{i₂} ∘ ... ∘ s_{i_l}` on `[degree]`.
    pub fn apply_word(word: &Word, degree: usize) -> Result<Permutation> {
        let mut p = Permutation::identity(degree);
        for &letter in word.letters() {
            p.mul_generator(letter as usize)?;
        }
        Ok(p)
    }

    /// `(1, ..., k, σ(1)+k, ..., σ(n+1)+k)`, the permutation whose reduced
    /// words are the shifts by `k` of those of `self`.
    pub fn shifted(&self, k: usize) -> Permutation {
        let k32 = k as u32;
        let mut images: Vec<u32> = (1..=k32).collect();
        images.extend(self.images.iter().map(|&v| v + k32));
        Permutation { images }
    }

    /// Restriction to the moved window `[m, M+1]`, relabelled to start at 1.
    pub fn standardized(&self) -> Permutation {
        match self.non_fixed_bounds() {
            None => Permutation::identity(1),
            Some(b) => {
                let off = b.min_moved as u32 - 1;
                Permutation {
                    images: self.images[b.min_moved - 1..b.max_moved]
                        .iter()
                        .map(|&v| v - off)
                        .collect(),
                }
            }
        }
    }

    /// All permutations of the given degree in lexicographic order.
    pub fn all(degree: usize) -> AllPermutations {
        AllPermutations {
            next: Some(Permutation::identity(degree)),
        }
    }

    /// Cycle notation without fixed points; `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        let mut seen = vec![false; self.degree() + 1];
        for start in 1..=self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            out.push('(');
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    out.push(' ');
                }
                let _ = write!(out, "{x}");
                first = false;
                x = self.image(x);
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    fn check_letter(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.degree() {
            return Err(Error::LetterOutOfRange {
                letter: i as u64,
                degree: self.degree(),
            });
        }
        Ok(())
    }
}

/// Lexicographic successor stepping over `S_n`.
pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut v = current.images.clone();
        if v.len() >= 2 {
            let mut k = v.len() - 1;
            while k > 0 && v[k - 1] >= v[k] {
                k -= 1;
            }
            if k > 0 {
                let mut l = v.len() - 1;
                while v[l] <= v[k - 1] {
                    l -= 1;
                }
                v.swap(k - 1, l);
                v[k..].reverse();
                self.next = Some(Permutation { images: v });
            }
        }
        Some(current)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_permutation(s, None)
    }
}

/// Parses one-line (`"3,4,2,1"`) or cycle (`"(1 3)(2 4 5)"`) notation.
///
/// Symbols not mentioned in cycle notation are fixed points and the degree is
/// `max(largest symbol, degree_hint)`. One-line input shorter than the hint is
/// padded with fixed points.
pub fn parse_permutation(text: &str, degree_hint: Option<usize>) -> Result<Permutation> {
    let trimmed_start = text.len() - text.trim_start().len();
    match text[trimmed_start..].chars().next() {
        None => Err(malformed(0, "empty permutation")),
        Some('(') => parse_cycles(text, degree_hint),
        Some(_) => parse_one_line(text, degree_hint),
    }
}

fn malformed(position: usize, what: &'static str) -> Error {
    Error::Parse {
        position,
        kind: ParseErrorKind::Malformed(what),
    }
}

/// Byte-level scanner shared by the permutation and word grammars.
pub(crate) struct Scanner<'a> {
    bytes: &'a [u8],
    pub(crate) pos: usize,
}

impl<'a> Scanner<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Scanner {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    pub(crate) fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    /// Reads an optionally signed decimal integer.
    pub(crate) fn integer(&mut self, allow_sign: bool) -> Result<(usize, i64)> {
        let start = self.pos;
        let negative = allow_sign && self.eat(b'-');
        let digits_start = self.pos;
        let mut value: i64 = 0;
        while let Some(b) = self.peek() {
            if !b.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as i64))
                .filter(|v| *v <= u32::MAX as i64)
                .ok_or_else(|| malformed(start, "integer too large"))?;
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(malformed(start, "expected an integer"));
        }
        Ok((start, if negative { -value } else { value }))
    }
}

fn parse_one_line(text: &str, degree_hint: Option<usize>) -> Result<Permutation> {
    let mut sc = Scanner::new(text);
    let mut values: Vec<(usize, u64)> = Vec::new();
    loop {
        sc.skip_ws();
        let (at, v) = sc.integer(false)?;
        values.push((at, v as u64));
        sc.skip_ws();
        if sc.at_end() {
            break;
        }
        if !sc.eat(b',') {
            return Err(malformed(sc.pos, "expected ',' between images"));
        }
    }
    let degree = values.len().max(degree_hint.unwrap_or(0));
    let mut seen = vec![false; degree + 1];
    let mut images = Vec::with_capacity(degree);
    for &(at, v) in &values {
        if v == 0 || v as usize > values.len() {
            return Err(Error::Parse {
                position: at,
                kind: ParseErrorKind::OutOfRange(v),
            });
        }
        if seen[v as usize] {
            return Err(Error::Parse {
                position: at,
                kind: ParseErrorKind::Repeated(v),
            });
        }
        seen[v as usize] = true;
        images.push(v as u32);
    }
    images.extend(values.len() as u32 + 1..=degree as u32);
    Ok(Permutation { images })
}

fn parse_cycles(text: &str, degree_hint: Option<usize>) -> Result<Permutation> {
    let mut sc = Scanner::new(text);
    let mut cycles: Vec<Vec<(usize, u64)>> = Vec::new();
    sc.skip_ws();
    while !sc.at_end() {
        if !sc.eat(b'(') {
            return Err(malformed(sc.pos, "expected '('"));
        }
        let mut cycle = Vec::new();
        loop {
            sc.skip_ws();
            if sc.eat(b')') {
                break;
            }
            if sc.at_end() {
                return Err(malformed(sc.pos, "unterminated cycle"));
            }
            let (at, v) = sc.integer(false)?;
            match sc.peek() {
                Some(b) if b.is_ascii_whitespace() || b == b')' => {}
                _ => return Err(malformed(sc.pos, "expected a space or ')'")),
            }
            cycle.push((at, v as u64));
        }
        cycles.push(cycle);
        sc.skip_ws();
    }
    let max_symbol = cycles
        .iter()
        .flatten()
        .map(|&(_, v)| v as usize)
        .max()
        .unwrap_or(0);
    let degree = max_symbol.max(degree_hint.unwrap_or(0)).max(1);
    let mut images: Vec<u32> = (1..=degree as u32).collect();
    let mut seen = vec![false; degree + 1];
    for cycle in &cycles {
        for (k, &(at, v)) in cycle.iter().enumerate() {
            if v == 0 {
                return Err(Error::Parse {
                    position: at,
                    kind: ParseErrorKind::OutOfRange(v),
                });
            }
            if seen[v as usize] {
                return Err(Error::Parse {
                    position: at,
                    kind: ParseErrorKind::Repeated(v),
                });
            }
            seen[v as usize] = true;
            let next = cycle[(k + 1) % cycle.len()].1;
            images[v as usize - 1] = next as u32;
        }
    }
    Ok(Permutation { images })
}
