//! Signed permutations (the hyperoctahedral group `B_n`).
//!
//! Generators are `s_0`, which negates the entry in position 1, and
//! `s_1, ..., s_{n-1}`, which swap adjacent positions. The pair `s_0, s_1`
//! satisfies a braid relation of length 4, adjacent `s_i, s_{i+1}` (i ≥ 1)
//! one of length 3, and letters at distance at least 2 commute.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, ParseErrorKind, Result};
use crate::perm::{Permutation, Scanner};
use crate::words::{Letter, Word};

/// Window notation `(w(1), ..., w(n))` of a signed permutation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn from_images(images: Vec<i32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n {
                return Err(Error::Parse {
                    position: 0,
                    kind: ParseErrorKind::OutOfRange(a as u64),
                });
            }
            if seen[a] {
                return Err(Error::Parse {
                    position: 0,
                    kind: ParseErrorKind::Repeated(a as u64),
                });
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { images })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (1..=n as i32).collect(),
        }
    }

    /// The longest element `(-1, -2, ..., -n)`.
    pub fn longest(n: usize) -> Self {
        SignedPermutation {
            images: (1..=n as i32).map(|v| -v).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &v)| v == k as i32 + 1)
    }

    /// Right multiplication by `s_i`.
    pub fn mul_generator(&mut self, i: usize) -> Result<()> {
        match i {
            0 => self.images[0] = -self.images[0],
            _ if i < self.rank() => self.images.swap(i - 1, i),
            _ => {
                return Err(Error::LetterOutOfRange {
                    letter: i as u64,
                    degree: self.rank(),
                })
            }
        }
        Ok(())
    }

    /// `ℓ(σ s_i) < ℓ(σ)`: `w(1) < 0` for `i = 0`, `w(i) > w(i+1)` otherwise.
    pub fn has_right_descent(&self, i: usize) -> bool {
        if i == 0 {
            self.images[0] < 0
        } else {
            self.images[i - 1] > self.images[i]
        }
    }

    pub fn apply_word(word: &Word, n: usize) -> Result<Self> {
        let mut p = Self::identity(n);
        for &x in word.letters() {
            p.mul_generator(x as usize)?;
        }
        Ok(p)
    }

    /// Every element of `B_n`: sign patterns nested inside lexicographic
    /// order of the underlying permutation.
    pub fn all(n: usize) -> Vec<SignedPermutation> {
        let mut out = Vec::with_capacity((1usize << n) * (1..=n).product::<usize>());
        for base in Permutation::all(n) {
            for mask in 0u32..(1 << n) {
                let images = base
                    .images()
                    .iter()
                    .enumerate()
                    .map(|(k, &v)| {
                        if mask >> k & 1 == 1 {
                            -(v as i32)
                        } else {
                            v as i32
                        }
                    })
                    .collect();
                out.push(SignedPermutation { images });
            }
        }
        out
    }
}

/// Type-B length `inv(w) - Σ_{w(j) < 0} w(j)`.
pub fn b_length(p: &SignedPermutation) -> usize {
    let v = &p.images;
    let mut inv = 0usize;
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            if v[a] > v[b] {
                inv += 1;
            }
        }
    }
    let neg: i64 = v.iter().filter(|&&x| x < 0).map(|&x| -(x as i64)).sum();
    inv + neg as usize
}

pub fn count_b_reduced_words(p: &SignedPermutation) -> BigUint {
    let mut memo = BTreeMap::new();
    count_rec(&mut p.clone(), &mut memo)
}

fn count_rec(p: &mut SignedPermutation, memo: &mut BTreeMap<Vec<i32>, BigUint>) -> BigUint {
    if p.is_identity() {
        return BigUint::one();
    }
    if let Some(c) = memo.get(&p.images) {
        return c.clone();
    }
    let mut total = BigUint::zero();
    for i in 0..p.rank() {
        if p.has_right_descent(i) {
            p.mul_generator(i).expect("in range");
            total += count_rec(p, memo);
            p.mul_generator(i).expect("in range");
        }
    }
    memo.insert(p.images.clone(), total.clone());
    total
}

/// All reduced words of `p` over letters `0..n`, sorted.
pub fn b_reduced_words(p: &SignedPermutation, ceiling: u64) -> Result<Vec<Word>> {
    let count = count_b_reduced_words(p);
    if count > BigUint::from(ceiling) {
        return Err(Error::CeilingExceeded { count, ceiling });
    }
    let mut out = Vec::with_capacity(count.to_usize().unwrap_or(0));
    let mut suffix = Vec::new();
    collect_rec(&mut p.clone(), &mut suffix, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn collect_rec(p: &mut SignedPermutation, suffix: &mut Vec<Letter>, out: &mut Vec<Word>) {
    if p.is_identity() {
        out.push(Word::new(suffix.iter().rev().copied().collect()));
        return;
    }
    for i in 0..p.rank() {
        if p.has_right_descent(i) {
            p.mul_generator(i).expect("in range");
            suffix.push(i as Letter);
            collect_rec(p, suffix, out);
            suffix.pop();
            p.mul_generator(i).expect("in range");
        }
    }
}

/// Letters commute in `B_n` exactly when their indices differ by at least 2.
pub fn b_commutation_moves(w: &Word) -> Vec<Word> {
    crate::words::commutation_moves(w)
}

/// Braid rewrites: `i(i+1)i ↔ (i+1)i(i+1)` for `i ≥ 1`, `0101 ↔ 1010`.
pub fn b_braid_moves(w: &Word) -> Vec<Word> {
    let l = w.letters();
    let mut out = Vec::new();
    for k in 0..l.len().saturating_sub(2) {
        let (a, b) = (l[k], l[k + 1]);
        if a.abs_diff(b) == 1 && a.min(b) >= 1 && l[k + 2] == a {
            let mut v = l.to_vec();
            v[k..k + 3].copy_from_slice(&[b, a, b]);
            out.push(Word::new(v));
        }
    }
    for k in 0..l.len().saturating_sub(3) {
        let f = &l[k..k + 4];
        if f == [0, 1, 0, 1] || f == [1, 0, 1, 0] {
            let mut v = l.to_vec();
            v[k..k + 4].copy_from_slice(&[f[1], f[0], f[1], f[0]]);
            out.push(Word::new(v));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// One-element commutation classes: reduced words with every adjacent pair
/// of letters at distance at most 1. The identity has none.
pub fn b_atoms(p: &SignedPermutation, ceiling: u64) -> Result<Vec<Word>> {
    Ok(b_reduced_words(p, ceiling)?
        .into_iter()
        .filter(|w| !w.is_empty() && crate::words::is_commutation_free(w))
        .collect())
}

/// Number of elements of `B_n` with exactly `k` atoms, `k = 0, 1, ...`, and
/// the first element attaining the maximum.
pub fn b_atom_histogram(n: usize, ceiling: u64) -> Result<(Vec<u64>, SignedPermutation)> {
    let mut counts = vec![0u64; 5];
    let mut best = (0usize, SignedPermutation::identity(n));
    for p in SignedPermutation::all(n) {
        let k = b_atoms(&p, ceiling)?.len();
        if k >= counts.len() {
            counts.resize(k + 1, 0);
        }
        counts[k] += 1;
        if k > best.0 {
            best = (k, p);
        }
    }
    Ok((counts, best.1))
}

impl fmt::Display for SignedPermutation {
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

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Comma-separated signed integers, e.g. `"-2,1,-3"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut sc = Scanner::new(s);
        let mut vals: Vec<(usize, i64)> = Vec::new();
        loop {
            sc.skip_ws();
            vals.push(sc.integer(true)?);
            sc.skip_ws();
            if sc.at_end() {
                break;
            }
            if !sc.eat(b',') {
                return Err(Error::Parse {
                    position: sc.pos,
                    kind: ParseErrorKind::Malformed("expected ',' between images"),
                });
            }
        }
        let n = vals.len();
        let mut seen = vec![false; n + 1];
        for &(at, v) in &vals {
            let a = v.unsigned_abs();
            if a == 0 || a as usize > n {
                return Err(Error::Parse {
                    position: at,
                    kind: ParseErrorKind::OutOfRange(a),
                });
            }
            if seen[a as usize] {
                return Err(Error::Parse {
                    position: at,
                    kind: ParseErrorKind::Repeated(a),
                });
            }
            seen[a as usize] = true;
        }
        Ok(SignedPermutation {
            images: vals.into_iter().map(|(_, v)| v as i32).collect(),
        })
    }
}
