use std::collections::{BTreeSet, VecDeque};

use commclass_core::atoms::{atoms_bruteforce, atoms_characterized};
use commclass_core::diagram::{
    find_repeated_segment_factor, find_symmetric_segment_factor, is_atom_word, line_diagram,
};
use commclass_core::words::{
    braid_moves, commutation_classes, commutation_moves, count_reduced_words, reduced_words, Word,
};
use commclass_core::{parse_permutation, Permutation};
use num_bigint::BigUint;
use proptest::prelude::*;

fn perm(max_degree: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_degree)
        .prop_flat_map(|d| Just((1..=d as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn same_degree_pair(max_degree: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max_degree)
        .prop_flat_map(|d| {
            let id: Vec<u32> = (1..=d as u32).collect();
            (Just(id.clone()).prop_shuffle(), Just(id).prop_shuffle())
        })
        .prop_map(|(a, b)| {
            (
                Permutation::from_images(a).unwrap(),
                Permutation::from_images(b).unwrap(),
            )
        })
}

/// Unit-step word on `[1, top]` from a start letter and up/down choices.
fn consecutive_word(top: u16, max_len: usize) -> impl Strategy<Value = Word> {
    (1..=top, prop::collection::vec(any::<bool>(), 0..max_len)).prop_map(move |(start, steps)| {
        let mut letters = vec![start];
        for up in steps {
            let last = *letters.last().unwrap();
            let next = if (up && last < top) || last == 1 {
                last + 1
            } else {
                last - 1
            };
            letters.push(next);
        }
        Word::new(letters)
    })
}

fn has_witness(w: &Word) -> bool {
    find_repeated_segment_factor(w).unwrap().is_some()
        || find_symmetric_segment_factor(w).unwrap().is_some()
}

proptest! {
    #[test]
    fn inverse_has_same_length(p in perm(8)) {
        prop_assert_eq!(p.inverse().length(), p.length());
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
    }

    #[test]
    fn length_is_additive_mod_2((p, q) in same_degree_pair(8)) {
        let pq = p.compose(&q).unwrap();
        prop_assert_eq!(pq.length() % 2, (p.length() + q.length()) % 2);
        prop_assert!(pq.length() <= p.length() + q.length());
    }

    #[test]
    fn both_notations_round_trip(p in perm(9)) {
        let one_line: Permutation = p.to_string().parse().unwrap();
        prop_assert_eq!(&one_line, &p);
        let cycles = parse_permutation(&p.to_cycle_string(), Some(p.degree())).unwrap();
        prop_assert_eq!(cycles, p);
    }

    #[test]
    fn reduced_words_evaluate_and_are_counted(p in perm(6)) {
        let words = reduced_words(&p).unwrap();
        prop_assert_eq!(BigUint::from(words.len()), count_reduced_words(&p));
        for w in &words {
            prop_assert_eq!(w.len(), p.length());
            prop_assert_eq!(&Permutation::apply_word(w, p.degree()).unwrap(), &p);
        }
    }

    #[test]
    fn support_letters_occur_in_every_word(p in perm(6)) {
        let words = reduced_words(&p).unwrap();
        for i in 1..p.degree() {
            let needed = p.letter_in_support(i).unwrap();
            let everywhere = words.iter().all(|w| w.letters().contains(&(i as u16)));
            prop_assert_eq!(needed, everywhere, "letter {}", i);
        }
    }

    #[test]
    fn moves_stay_inside_the_word_set(p in perm(6)) {
        let words = reduced_words(&p).unwrap();
        let set: BTreeSet<&Word> = words.iter().collect();
        for w in &words {
            for v in commutation_moves(w).iter().chain(&braid_moves(w)) {
                prop_assert!(set.contains(v), "{} -> {}", w, v);
            }
        }
    }

    #[test]
    fn word_graph_is_connected(p in perm(5)) {
        let words = reduced_words(&p).unwrap();
        let mut seen = BTreeSet::from([words[0].clone()]);
        let mut queue = VecDeque::from([words[0].clone()]);
        while let Some(w) = queue.pop_front() {
            for v in commutation_moves(&w).into_iter().chain(braid_moves(&w)) {
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
        prop_assert_eq!(seen.len(), words.len());
    }

    #[test]
    fn classes_partition_the_word_set(p in perm(6)) {
        let parts = commutation_classes(&p).unwrap();
        let sizes: usize = parts.classes().iter().map(Vec::len).sum();
        prop_assert_eq!(sizes, parts.word_count());
        for class in parts.classes() {
            for w in class {
                for v in commutation_moves(w) {
                    prop_assert!(class.contains(&v));
                }
            }
        }
    }

    #[test]
    fn shift_and_reverse_act_on_words(p in perm(5), k in 0usize..3) {
        let words = reduced_words(&p).unwrap();
        let shifted: Vec<Word> = words.iter().map(|w| w.shift(k as u16)).collect();
        prop_assert_eq!(reduced_words(&p.shifted(k)).unwrap(), shifted);
        let mut reversed: Vec<Word> = words.iter().map(Word::reverse).collect();
        reversed.sort();
        prop_assert_eq!(reduced_words(&p.inverse()).unwrap(), reversed);
    }

    #[test]
    fn atom_oracles_agree(p in perm(6)) {
        prop_assert_eq!(atoms_bruteforce(&p).unwrap(), atoms_characterized(&p));
    }

    #[test]
    fn witnesses_survive_extension(w in consecutive_word(6, 14), up in any::<bool>()) {
        let l = w.letters();
        let grow = |x: u16| if up || x == 1 { x + 1 } else { x - 1 };
        let mut appended = l.to_vec();
        appended.push(grow(*l.last().unwrap()));
        let mut prepended = vec![grow(l[0])];
        prepended.extend_from_slice(l);
        if has_witness(&w) {
            prop_assert!(has_witness(&Word::new(appended)));
            prop_assert!(has_witness(&Word::new(prepended)));
        }
    }

    #[test]
    fn atom_words_reverse_to_atom_words(w in consecutive_word(6, 14)) {
        prop_assert_eq!(is_atom_word(&w), is_atom_word(&w.reverse()));
    }

    #[test]
    fn diagram_rebuilds_the_word(w in consecutive_word(7, 16)) {
        let d = line_diagram(&w).unwrap();
        prop_assert_eq!(d.to_word(), w.clone());
        let pv = d.pv();
        prop_assert_eq!(pv.first(), w.letters().first());
        prop_assert_eq!(pv.last(), w.letters().last());
        let gaps: u32 = d.gaps().iter().map(|&g| g as u32).sum();
        prop_assert_eq!(gaps as usize, w.len() - 1);
    }
}
