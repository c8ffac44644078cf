//! Words formed by consecutive integers and their line diagrams.
//!
//! A word is formed by consecutive integers when adjacent letters always differ
//! by exactly one. Such a word is determined by its spikes: the endpoints plus
//! every pinnacle (letter above both neighbours) and vale (letter below both
//! neighbours). Between two consecutive spikes the word is a unit-step run
//! called a segment.
//!
//! A reduced word of this kind is characterised by the absence of two factor
//! patterns built from segments:
//!
//! * *repeated segments*: a factor whose first and last segments are the same
//!   run (same direction, same values), e.g. `1232123`;
//! * *symmetric segments*: a factor whose first and last segments are mirror
//!   images with at least one spike of the word strictly between them, e.g.
//!   `212343212` inside `3212343212`.
//!
//! Segments are taken relative to the factor, so the factor's own endpoints
//! count as spikes.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpikeKind {
    Pinnacle,
    Vale,
    /// The only letter of a one-letter word; counts as both.
    Isolated,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Spike {
    /// 1-based position in the word.
    pub position: usize,
    pub value: Letter,
    pub kind: SpikeKind,
}

/// A maximal unit-step run between two consecutive spikes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Segment {
    pub start: usize,
    pub end: usize,
    pub from: Letter,
    pub to: Letter,
}

impl Segment {
    pub fn is_ascending(&self) -> bool {
        self.to > self.from
    }
}

/// Spike sequence of a word formed by consecutive integers.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LineDiagram {
    spikes: Vec<Spike>,
    word_len: usize,
}

impl LineDiagram {
    pub fn spikes(&self) -> &[Spike] {
        &self.spikes
    }

    pub fn word_len(&self) -> usize {
        self.word_len
    }

    /// `P(a)`, the subword of pinnacles.
    pub fn pinnacles(&self) -> Vec<Letter> {
        self.values_where(|k| k != SpikeKind::Vale)
    }

    /// `V(a)`, the subword of vales.
    pub fn vales(&self) -> Vec<Letter> {
        self.values_where(|k| k != SpikeKind::Pinnacle)
    }

    /// `PV(a)`, the subword of all spikes.
    pub fn pv(&self) -> Vec<Letter> {
        self.values_where(|_| true)
    }

    /// Segment lengths `|i_k - i_{k+1}|` along `PV(a)`.
    pub fn gaps(&self) -> Vec<Letter> {
        self.spikes
            .windows(2)
            .map(|s| s[0].value.abs_diff(s[1].value))
            .collect()
    }

    pub fn segments(&self) -> Vec<Segment> {
        self.spikes
            .windows(2)
            .map(|s| Segment {
                start: s[0].position,
                end: s[1].position,
                from: s[0].value,
                to: s[1].value,
            })
            .collect()
    }

    /// Rebuilds the word by filling every segment with its unit steps.
    pub fn to_word(&self) -> Word {
        let mut out = Vec::with_capacity(self.word_len);
        if let Some(first) = self.spikes.first() {
            out.push(first.value);
        }
        for s in self.spikes.windows(2) {
            let (a, b) = (s[0].value, s[1].value);
            if a < b {
                out.extend(a + 1..=b);
            } else {
                out.extend((b..a).rev());
            }
        }
        Word::new(out)
    }

    fn values_where(&self, keep: impl Fn(SpikeKind) -> bool) -> Vec<Letter> {
        self.spikes
            .iter()
            .filter(|s| keep(s.kind))
            .map(|s| s.value)
            .collect()
    }
}

/// Whether every adjacent pair of letters differs by exactly one.
pub fn is_consecutive(w: &Word) -> bool {
    w.letters().windows(2).all(|p| p[0].abs_diff(p[1]) == 1)
}

fn require_consecutive(w: &Word) -> Result<()> {
    if is_consecutive(w) {
        Ok(())
    } else {
        Err(Error::NotConsecutive)
    }
}

/// Interior position `r` (0-based) is a spike when its neighbours agree.
#[inline]
fn interior_spike(l: &[Letter], r: usize) -> bool {
    l[r - 1] == l[r + 1]
}

/// The line diagram of a word formed by consecutive integers.
pub fn line_diagram(w: &Word) -> Result<LineDiagram> {
    require_consecutive(w)?;
    let l = w.letters();
    let n = l.len();
    let mut spikes = Vec::new();
    for k in 0..n {
        let kind = if n == 1 {
            SpikeKind::Isolated
        } else if k == 0 || k == n - 1 || interior_spike(l, k) {
            let neighbour = if k == 0 { l[1] } else { l[k - 1] };
            if l[k] > neighbour {
                SpikeKind::Pinnacle
            } else {
                SpikeKind::Vale
            }
        } else {
            continue;
        };
        spikes.push(Spike {
            position: k + 1,
            value: l[k],
            kind,
        });
    }
    Ok(LineDiagram {
        spikes,
        word_len: n,
    })
}

/// Wedge/vee classification of an integer sequence.
///
/// A wedge rises strictly, stays on a plateau, then falls strictly; a vee is
/// the mirror image. A shape is strict when its plateau has length one.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ChainShape {
    pub wedge: bool,
    pub vee: bool,
    pub strict_wedge: bool,
    pub strict_vee: bool,
}

pub fn wedge_vee_classify(seq: &[Letter]) -> Result<ChainShape> {
    if seq.is_empty() {
        return Err(Error::EmptyInput);
    }
    let (wedge, strict_wedge) = chain(seq, |a, b| a < b);
    let (vee, strict_vee) = chain(seq, |a, b| a > b);
    Ok(ChainShape {
        wedge,
        vee,
        strict_wedge,
        strict_vee,
    })
}

// `up(a, b)` is the strict relation on the rising side.
fn chain(seq: &[Letter], up: impl Fn(Letter, Letter) -> bool) -> (bool, bool) {
    let n = seq.len();
    let mut j = 0;
    while j + 1 < n && up(seq[j], seq[j + 1]) {
        j += 1;
    }
    let mut k = j;
    while k + 1 < n && seq[k + 1] == seq[k] {
        k += 1;
    }
    let mut end = k;
    while end + 1 < n && up(seq[end + 1], seq[end]) {
        end += 1;
    }
    let holds = end == n - 1;
    (holds, holds && j == k)
}

/// The five necessary conditions for a one-element commutation class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TennerConditions(pub [bool; 5]);

impl TennerConditions {
    pub fn all(&self) -> bool {
        self.0.iter().all(|&c| c)
    }
}

/// Evaluates each condition independently:
/// 1. `P(a)` is a wedge; 2. `V(a)` is a vee; 3. one of them is strict;
/// 4. the minimum and maximum of `PV(a)` are adjacent in `PV(a)`;
/// 5. a value repeated in `P(a)` (or `V(a)`) occurs at an endpoint of `a`.
pub fn tenner_conditions(w: &Word) -> Result<TennerConditions> {
    let d = line_diagram(w)?;
    if w.is_empty() {
        return Ok(TennerConditions([true; 5]));
    }
    let p = wedge_vee_classify(&d.pinnacles())?;
    let v = wedge_vee_classify(&d.vales())?;
    let pv = d.pv();
    let lo = *pv.iter().min().unwrap();
    let hi = *pv.iter().max().unwrap();
    let adjacent = pv.len() == 1
        || pv
            .windows(2)
            .any(|s| (s[0] == lo && s[1] == hi) || (s[0] == hi && s[1] == lo));
    let last = w.len();
    let repeats_touch_endpoint = |kind: SpikeKind| {
        let mut by_value: BTreeMap<Letter, (usize, bool)> = BTreeMap::new();
        for s in d
            .spikes()
            .iter()
            .filter(|s| s.kind == kind || s.kind == SpikeKind::Isolated)
        {
            let e = by_value.entry(s.value).or_insert((0, false));
            e.0 += 1;
            e.1 |= s.position == 1 || s.position == last;
        }
        by_value
            .values()
            .all(|&(count, at_end)| count < 2 || at_end)
    };
    Ok(TennerConditions([
        p.wedge,
        v.vee,
        p.strict_wedge || v.strict_vee,
        adjacent,
        repeats_touch_endpoint(SpikeKind::Pinnacle) && repeats_touch_endpoint(SpikeKind::Vale),
    ]))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FactorKind {
    Repeated,
    Symmetric,
}

/// A forbidden factor: its first and last segments, 1-based inclusive positions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FactorWitness {
    pub kind: FactorKind,
    pub first_run: (usize, usize),
    pub last_run: (usize, usize),
    /// Value interval `(i, j)`, `i < j`, covered by both runs.
    pub interval: (Letter, Letter),
}

/// Reference scan over all factors for a repeated-segment factor.
pub fn find_repeated_segment_factor(w: &Word) -> Result<Option<FactorWitness>> {
    require_consecutive(w)?;
    Ok(scan_factors(w.letters(), FactorKind::Repeated))
}

/// Reference scan over all factors for a symmetric-segment factor.
pub fn find_symmetric_segment_factor(w: &Word) -> Result<Option<FactorWitness>> {
    require_consecutive(w)?;
    Ok(scan_factors(w.letters(), FactorKind::Symmetric))
}

// Cubic reference: for each factor l[p..=q] walk to its first and last inner
// spikes independently. The search code uses `suffix_has_witness` instead.
fn scan_factors(l: &[Letter], kind: FactorKind) -> Option<FactorWitness> {
    for q in 0..l.len() {
        for p in 0..q {
            let first_end = (p + 1..q).find(|&r| interior_spike(l, r)).unwrap_or(q);
            let last_start = (p + 1..q)
                .rev()
                .find(|&r| interior_spike(l, r))
                .unwrap_or(p);
            if first_end >= last_start {
                continue;
            }
            let matched = match kind {
                FactorKind::Repeated => l[p] == l[last_start] && l[first_end] == l[q],
                FactorKind::Symmetric => {
                    l[p] == l[q]
                        && l[first_end] == l[last_start]
                        && (first_end + 1..last_start).any(|r| interior_spike(l, r))
                }
            };
            if matched {
                return Some(FactorWitness {
                    kind,
                    first_run: (p + 1, first_end + 1),
                    last_run: (last_start + 1, q + 1),
                    interval: (l[p].min(l[first_end]), l[p].max(l[first_end])),
                });
            }
        }
    }
    None
}

/// Whether some factor ending at the last letter is forbidden.
///
/// Linear in the word length. If `l[..len-1]` has no forbidden factor, then
/// `l` has none exactly when this returns false.
pub(crate) fn suffix_has_witness(l: &[Letter]) -> bool {
    let len = l.len();
    if len < 4 {
        return false;
    }
    let q = len - 1;
    let last_spike = (1..q).rev().find(|&r| interior_spike(l, r));
    let mut next_spike: Option<usize> = None;
    let mut inner_spikes = 0usize;
    for p in (0..q).rev() {
        if p + 1 < q && p + 1 >= 1 && interior_spike(l, p + 1) {
            next_spike = Some(p + 1);
            inner_spikes += 1;
        }
        let first_end = next_spike.unwrap_or(q);
        let last_start = match last_spike {
            Some(s) if s > p => s,
            _ => p,
        };
        if first_end >= last_start {
            continue;
        }
        if l[p] == l[last_start] && l[first_end] == l[q] {
            return true;
        }
        if l[p] == l[q] && l[first_end] == l[last_start] && inner_spikes >= 3 {
            return true;
        }
    }
    false
}

/// A nonempty word formed by consecutive integers with no repeated or
/// symmetric segment factor, i.e. a one-element commutation class of the
/// permutation it evaluates to.
pub fn is_atom_word(w: &Word) -> bool {
    !w.is_empty()
        && is_consecutive(w)
        && scan_factors(w.letters(), FactorKind::Repeated).is_none()
        && scan_factors(w.letters(), FactorKind::Symmetric).is_none()
}

/// Whether the segment lengths along `PV(a)` are weakly monotone. The empty
/// word counts as an oscillation.
pub fn is_oscillation(w: &Word) -> Result<bool> {
    let gaps = line_diagram(w)?.gaps();
    let up = gaps.windows(2).all(|g| g[0] <= g[1]);
    let down = gaps.windows(2).all(|g| g[0] >= g[1]);
    Ok(up || down)
}

/// Text grid: one column per word position, one row per value (largest on
/// top), `*` where the letter sits.
pub fn render_ascii(w: &Word) -> Result<String> {
    require_consecutive(w)?;
    let mut out = String::new();
    if w.is_empty() {
        out.push_str("(empty diagram)\n");
        return Ok(out);
    }
    let l = w.letters();
    let lo = *l.iter().min().unwrap();
    let hi = *l.iter().max().unwrap();
    let width = digits(hi);
    for v in (lo..=hi).rev() {
        let mut row = String::new();
        let _ = write!(row, "{v:>width$} |");
        for &x in l {
            row.push(if x == v { '*' } else { ' ' });
        }
        out.push_str(row.trim_end());
        out.push('\n');
    }
    Ok(out)
}

/// SVG polyline through the spike points `(k, PV_k)`, `k = 1..=|PV|`, on an
/// integer lattice with values increasing upwards.
pub fn render_svg(w: &Word) -> Result<String> {
    let d = line_diagram(w)?;
    let mut out = String::new();
    let pv = d.pv();
    if pv.is_empty() {
        out.push_str(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\"><!-- empty diagram --></svg>\n",
        );
        return Ok(out);
    }
    let lo = *pv.iter().min().unwrap() as i64;
    let hi = *pv.iter().max().unwrap() as i64;
    let width = pv.len() as i64 + 1;
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 {} {} {}\">",
        lo - 1,
        width,
        hi - lo + 2
    );
    let _ = writeln!(
        out,
        "  <g transform=\"translate(0 {}) scale(1 -1)\">",
        lo + hi
    );
    let mut points = String::new();
    for (k, v) in pv.iter().enumerate() {
        if k > 0 {
            points.push(' ');
        }
        let _ = write!(points, "{},{}", k + 1, v);
    }
    let _ = writeln!(
        out,
        "    <polyline points=\"{points}\" fill=\"none\" stroke=\"black\" stroke-width=\"0.05\"/>"
    );
    for s in d.spikes() {
        let colour = match s.kind {
            SpikeKind::Pinnacle => "red",
            SpikeKind::Vale => "green",
            SpikeKind::Isolated => "black",
        };
        let k = d.spikes().iter().position(|t| t == s).unwrap() + 1;
        let _ = writeln!(
            out,
            "    <circle cx=\"{}\" cy=\"{}\" r=\"0.1\" fill=\"{colour}\"/>",
            k, s.value
        );
    }
    out.push_str("  </g>\n</svg>\n");
    Ok(out)
}

fn digits(mut v: Letter) -> usize {
    let mut d = 1;
    while v >= 10 {
        v /= 10;
        d += 1;
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    const RUNNING: &str = "2345432123456765434";

    #[test]
    fn consecutive_examples() {
        assert!(is_consecutive(&w(RUNNING)));
        assert!(!is_consecutive(&w("12132")));
        assert!(is_consecutive(&w("7")));
    }

    #[test]
    fn spike_examples() {
        let d = line_diagram(&w(RUNNING)).unwrap();
        assert_eq!(d.vales(), vec![2, 1, 3]);
        assert_eq!(d.pinnacles(), vec![5, 7, 4]);
        assert_eq!(d.pv(), vec![2, 5, 1, 7, 3, 4]);
        assert_eq!(d.gaps(), vec![3, 4, 6, 4, 1]);
        assert_eq!(d.to_word(), w(RUNNING));

        assert_eq!(line_diagram(&w("121")).unwrap().pv(), vec![1, 2, 1]);
        let single = line_diagram(&w("1")).unwrap();
        assert_eq!(single.spikes().len(), 1);
        assert_eq!(single.spikes()[0].kind, SpikeKind::Isolated);
        assert_eq!(line_diagram(&w("12132")), Err(Error::NotConsecutive));
    }

    #[test]
    fn segments_of_running_example() {
        let segs = line_diagram(&w(RUNNING)).unwrap().segments();
        let ends: Vec<(Letter, Letter)> = segs.iter().map(|s| (s.from, s.to)).collect();
        assert_eq!(ends, vec![(2, 5), (5, 1), (1, 7), (7, 3), (3, 4)]);
        assert!(segs[0].is_ascending());
    }

    #[test]
    fn wedge_vee_examples() {
        let s = wedge_vee_classify(&[5, 7, 4]).unwrap();
        assert!(s.wedge && s.strict_wedge && !s.vee);
        let s = wedge_vee_classify(&[2, 1, 3]).unwrap();
        assert!(s.vee && s.strict_vee && !s.wedge);
        let s = wedge_vee_classify(&[1, 1]).unwrap();
        assert!(s.wedge && s.vee && !s.strict_wedge && !s.strict_vee);
        let s = wedge_vee_classify(&[4]).unwrap();
        assert!(s.wedge && s.vee && s.strict_wedge && s.strict_vee);
        let s = wedge_vee_classify(&[1, 2, 3]).unwrap();
        assert!(s.wedge && s.vee);
        assert!(!wedge_vee_classify(&[7, 5, 7]).unwrap().wedge);
        assert_eq!(wedge_vee_classify(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn tenner_examples() {
        assert!(tenner_conditions(&w("21232")).unwrap().all());
        let t = tenner_conditions(&w("3212343212")).unwrap();
        assert!(!t.0[4]);
        assert!(tenner_conditions(&w("1")).unwrap().all());
        assert!(tenner_conditions(&w("13")).is_err());
    }

    #[test]
    fn repeated_examples() {
        let wit = find_repeated_segment_factor(&w("234543212345676543456"))
            .unwrap()
            .unwrap();
        assert_eq!(wit.interval, (3, 5));
        assert_eq!(wit.kind, FactorKind::Repeated);
        assert_eq!(wit.first_run, (2, 4));
        assert_eq!(wit.last_run, (18, 20));
        assert_eq!(find_repeated_segment_factor(&w(RUNNING)).unwrap(), None);
        let wit = find_repeated_segment_factor(&w("1232123"))
            .unwrap()
            .unwrap();
        assert_eq!(wit.interval, (1, 3));
        assert_eq!((wit.first_run, wit.last_run), ((1, 3), (5, 7)));
        // Adjacent runs: no letters between the two occurrences.
        assert!(find_repeated_segment_factor(&w("1212")).unwrap().is_some());
    }

    #[test]
    fn symmetric_examples() {
        let wit = find_symmetric_segment_factor(&w("3212343212"))
            .unwrap()
            .unwrap();
        assert_eq!(wit.interval, (1, 2));
        assert_eq!(wit.kind, FactorKind::Symmetric);
        assert_eq!(find_symmetric_segment_factor(&w("12321")).unwrap(), None);
        assert_eq!(find_symmetric_segment_factor(&w(RUNNING)).unwrap(), None);
        assert_eq!(
            find_symmetric_segment_factor(&w("1213")),
            Err(Error::NotConsecutive)
        );
    }

    #[test]
    fn atom_word_examples() {
        assert!(is_atom_word(&w("21232")));
        assert!(!is_atom_word(&w("12132")));
        assert!(!is_atom_word(&w("1232123")));
        assert!(is_atom_word(&w(RUNNING)));
        assert!(!is_atom_word(&Word::empty()));
    }

    #[test]
    fn oscillation_examples() {
        assert!(is_oscillation(&w("121")).unwrap());
        assert!(!is_oscillation(&w(RUNNING)).unwrap());
        assert!(is_oscillation(&Word::empty()).unwrap());
        assert!(!is_oscillation(&w("21232")).unwrap());
        assert!(is_oscillation(&w("1234321")).unwrap());
    }

    #[test]
    fn suffix_check_agrees_with_reference_on_prefix_free_words() {
        // Every consecutive word over [1,4] of length <= 10 whose proper prefix
        // is witness-free.
        let mut stack: Vec<Vec<Letter>> = (1..=4).map(|a| vec![a]).collect();
        let mut checked = 0;
        while let Some(l) = stack.pop() {
            let reference = scan_factors(&l, FactorKind::Repeated).is_some()
                || scan_factors(&l, FactorKind::Symmetric).is_some();
            assert_eq!(suffix_has_witness(&l), reference, "{l:?}");
            checked += 1;
            if reference || l.len() == 10 {
                continue;
            }
            let last = *l.last().unwrap();
            for next in [last.wrapping_sub(1), last + 1] {
                if (1..=4).contains(&next) {
                    let mut e = l.clone();
                    e.push(next);
                    stack.push(e);
                }
            }
        }
        assert!(checked > 20);
    }

    #[test]
    fn ascii_render() {
        assert_eq!(render_ascii(&w("121")).unwrap(), "2 | *\n1 |* *\n");
        assert_eq!(render_ascii(&Word::empty()).unwrap(), "(empty diagram)\n");
    }

    #[test]
    fn svg_render_uses_spike_points() {
        let svg = render_svg(&w("21232")).unwrap();
        assert!(svg.contains("viewBox=\"0 0 5 4\""));
        assert!(svg.contains("points=\"1,2 2,1 3,3 4,2\""));
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
