//! The small named recognizers, built as explicit state machines from
//! their predicates and minimized. No regex engine is involved; the two
//! source regexes are fixed and constructed programmatically.

use crate::automata::{MultiTrackAutomaton, TrackAlphabet};

/// One track over {0,1}; accepts exactly the Zeckendorf-valid words
/// (no two adjacent 1s). Padding-invariant.
pub fn build_zeckval() -> MultiTrackAutomaton {
    // states: 0 last digit 0, 1 last digit 1, 2 dead
    MultiTrackAutomaton::from_fn(
        vec![TrackAlphabet::binary()],
        3,
        0,
        vec![true, true, false],
        |q, t| match (q, t[0]) {
            (0, 0) => 0,
            (0, 1) => 1,
            (1, 0) => 0,
            (1, 1) => 2,
            _ => 2,
        },
    )
    .minimize()
}

/// One track over {0,1,2}; accepts exactly the valid Chung-Graham words.
/// State tracks (position parity, whether a digit-2 block is open).
pub fn build_cgval() -> MultiTrackAutomaton {
    // states: parity*2 + open for parity,open in {0,1}; 4 = dead
    MultiTrackAutomaton::from_fn(
        vec![TrackAlphabet::ternary()],
        5,
        0,
        vec![true, true, true, true, false],
        |q, t| {
            if q == 4 {
                return 4;
            }
            let (parity, open) = (q / 2, q % 2);
            let d = t[0] as usize;
            if parity == 1 {
                // odd position: only 0 allowed; parity flips, block unchanged
                if d == 0 {
                    open
                } else {
                    4
                }
            } else {
                match d {
                    0 => 2,            // even 0 closes any block
                    1 => 2 + open,     // keeps block state
                    _ if open == 1 => 4, // second 2 with no even 0 between
                    _ => 3,            // opens a block
                }
            }
        },
    )
    .minimize()
}

/// One track over {0,1,2}; accepts words whose two most significant stored
/// digits are 0 (i.e. the last two digits of the lsd sequence). This is the
/// padding language `[0|1|2]*00` and is deliberately not zero-stable in the
/// stripping direction.
pub fn build_cg0() -> MultiTrackAutomaton {
    build_zero_suffix(2)
}

/// One-zero variant (`[0|1|2]*0`), used by the padding comparison checks.
pub fn build_cg0_one_zero() -> MultiTrackAutomaton {
    build_zero_suffix(1)
}

fn build_zero_suffix(count: usize) -> MultiTrackAutomaton {
    // state = number of trailing zeros so far, capped at `count`;
    // extra initial state distinguishes the empty word (length < count).
    // states 0..=count: trailing-zero run length (0 = last digit nonzero or
    // nothing read yet and nonempty); state count+1 = initial.
    let init = count + 1;
    let n = count + 2;
    let mut acc = vec![false; n];
    acc[count] = true;
    MultiTrackAutomaton::from_fn(
        vec![TrackAlphabet::ternary()],
        n,
        init as u32,
        acc,
        move |q, t| {
            let run = if q == init { 0 } else { q };
            if t[0] == 0 {
                (run + 1).min(count)
            } else {
                0
            }
        },
    )
    .minimize()
}

/// Two tracks over {0,1,2}; accepts (x,y) iff the words are digitwise equal.
pub fn build_cgeq() -> MultiTrackAutomaton {
    MultiTrackAutomaton::from_fn(
        vec![TrackAlphabet::ternary(), TrackAlphabet::ternary()],
        2,
        0,
        vec![true, false],
        |q, t| {
            if q == 0 && t[0] == t[1] {
                0
            } else {
                1
            }
        },
    )
    .minimize()
}

/// Three tracks (u,v,w) over {0,1,2}×{0,1}×{0,1}; accepts iff every
/// position's triple is [0,0,0], [1,0,1] or [2,1,1].
pub fn build_cgsplit() -> MultiTrackAutomaton {
    MultiTrackAutomaton::from_fn(
        vec![
            TrackAlphabet::ternary(),
            TrackAlphabet::binary(),
            TrackAlphabet::binary(),
        ],
        2,
        0,
        vec![true, false],
        |q, t| {
            let ok = matches!((t[0], t[1], t[2]), (0, 0, 0) | (1, 0, 1) | (2, 1, 1));
            if q == 0 && ok {
                0
            } else {
                1
            }
        },
    )
    .minimize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::DigitWord;
    use crate::numeration::{cg_split, cg_valid, zeck_valid};

    fn all_words(alpha: &[u8], len: usize) -> Vec<Vec<u8>> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            let mut next = Vec::new();
            for w in &out {
                for &d in alpha {
                    let mut v = w.clone();
                    v.push(d);
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn zeckval_examples() {
        let a = build_zeckval();
        assert!(a.accepts(&DigitWord::single(&[1, 0, 1, 0, 0, 1])).unwrap());
        assert!(!a.accepts(&DigitWord::single(&[1, 1])).unwrap());
    }

    #[test]
    fn zeckval_agrees_with_predicate_to_len_14() {
        let a = build_zeckval();
        for len in 0..=14 {
            for w in all_words(&[0, 1], len) {
                assert_eq!(
                    a.accepts(&DigitWord::single(&w)).unwrap(),
                    zeck_valid(&w),
                    "word {w:?}"
                );
            }
        }
    }

    #[test]
    fn cgval_examples() {
        let a = build_cgval();
        assert!(a.accepts(&DigitWord::single(&[2, 0, 1])).unwrap());
        assert!(!a.accepts(&DigitWord::single(&[2, 0, 2])).unwrap());
    }

    #[test]
    fn cgval_agrees_with_predicate_to_len_14() {
        let a = build_cgval();
        for len in 0..=14 {
            for w in all_words(&[0, 1, 2], len) {
                assert_eq!(
                    a.accepts(&DigitWord::single(&w)).unwrap(),
                    cg_valid(&w),
                    "word {w:?}"
                );
            }
        }
    }

    #[test]
    fn cg0_examples_and_suffix_check() {
        let a = build_cg0();
        assert!(a.accepts(&DigitWord::single(&[1, 0, 0])).unwrap());
        assert!(!a.accepts(&DigitWord::single(&[1])).unwrap());
        for len in 0..=10 {
            for w in all_words(&[0, 1, 2], len) {
                let expect = w.len() >= 2 && w[w.len() - 1] == 0 && w[w.len() - 2] == 0;
                assert_eq!(a.accepts(&DigitWord::single(&w)).unwrap(), expect);
            }
        }
    }

    #[test]
    fn cgeq_agrees_with_equality_to_len_6() {
        let a = build_cgeq();
        assert!(a
            .accepts(&DigitWord::from_rows(&[&[2, 0, 1], &[2, 0, 1]]).unwrap())
            .unwrap());
        assert!(!a
            .accepts(&DigitWord::from_rows(&[&[2, 0, 1], &[2, 0, 0]]).unwrap())
            .unwrap());
        for len in 0..=6 {
            for x in all_words(&[0, 1, 2], len) {
                for y in all_words(&[0, 1, 2], len) {
                    let w = DigitWord::from_rows(&[&x, &y]).unwrap();
                    assert_eq!(a.accepts(&w).unwrap(), x == y);
                }
            }
        }
    }

    #[test]
    fn cgsplit_agrees_with_digit_map_to_len_8() {
        let a = build_cgsplit();
        assert!(a
            .accepts(&DigitWord::from_rows(&[&[2, 0, 1], &[1, 0, 0], &[1, 0, 1]]).unwrap())
            .unwrap());
        assert!(!a
            .accepts(&DigitWord::from_rows(&[&[1], &[1], &[0]]).unwrap())
            .unwrap());
        for len in 0..=8 {
            for u in all_words(&[0, 1, 2], len) {
                let (v, w) = cg_split(&u).unwrap();
                let word = DigitWord::from_rows(&[&u, &v, &w]).unwrap();
                assert!(a.accepts(&word).unwrap());
                // flipping one split digit breaks acceptance
                if !v.is_empty() {
                    let mut v2 = v.clone();
                    v2[0] ^= 1;
                    let bad = DigitWord::from_rows(&[&u, &v2, &w]).unwrap();
                    assert!(!a.accepts(&bad).unwrap());
                }
            }
        }
    }

    #[test]
    fn validity_recognizers_are_zero_stable() {
        for a in [build_zeckval(), build_cgval(), build_cgeq(), build_cgsplit()] {
            assert!(a.zero_stabilize().equivalent(&a).unwrap());
        }
    }

    #[test]
    fn cg0_is_not_zero_stable() {
        let a = build_cg0();
        assert!(!a.zero_stabilize().equivalent(&a).unwrap());
    }
}
