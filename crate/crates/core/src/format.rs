//! Text formats for automata: a line-oriented native format and Graphviz DOT.
//!
//! Native format:
//!
//! ```text
//! tracks: {0,1} {0,1,2}
//! states: 7
//! initial: 0
//! accepting: 0 2 5
//! 0 [1,0] -> 3
//! ```
//!
//! Comments start with `#`. One line per transition, tuples bracketed and
//! comma-separated in track order. On import, omitted tuples go to a fresh
//! dead state; export always writes every transition so that
//! import(export(a)) reproduces the automaton bit-exactly.

use std::fmt::Write as _;

use crate::automata::{enumerate_tuples, MultiTrackAutomaton, StateId, TrackAlphabet};
use crate::error::{Error, Result};

pub fn export_native(a: &MultiTrackAutomaton) -> String {
    let mut out = String::new();
    let tracks: Vec<String> = a
        .tracks()
        .iter()
        .map(|t| {
            let digits: Vec<String> = t.digits().iter().map(|d| d.to_string()).collect();
            format!("{{{}}}", digits.join(","))
        })
        .collect();
    writeln!(out, "tracks: {}", tracks.join(" ")).unwrap();
    writeln!(out, "states: {}", a.num_states()).unwrap();
    writeln!(out, "initial: {}", a.initial()).unwrap();
    let acc: Vec<String> = (0..a.num_states() as StateId)
        .filter(|&q| a.is_accepting(q))
        .map(|q| q.to_string())
        .collect();
    writeln!(out, "accepting: {}", acc.join(" ")).unwrap();
    let tuples = a.tuples();
    for q in 0..a.num_states() {
        for t in &tuples {
            let idx = a.tuple_index(t).unwrap();
            let target = a.step(q as StateId, idx);
            let digits: Vec<String> = t.iter().map(|d| d.to_string()).collect();
            writeln!(out, "{} [{}] -> {}", q, digits.join(","), target).unwrap();
        }
    }
    out
}

pub fn import_native(text: &str) -> Result<MultiTrackAutomaton> {
    let mut tracks: Option<Vec<TrackAlphabet>> = None;
    let mut num_states: Option<usize> = None;
    let mut initial: Option<StateId> = None;
    let mut accepting: Option<Vec<StateId>> = None;
    let mut trans: Vec<(usize, Vec<u8>, usize, usize)> = Vec::new(); // (src, tuple, dst, line)

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        if let Some(rest) = content.strip_prefix("tracks:") {
            let mut list = Vec::new();
            for group in rest.split_whitespace() {
                let inner = group
                    .strip_prefix('{')
                    .and_then(|g| g.strip_suffix('}'))
                    .ok_or_else(|| err("expected brace group like {0,1}"))?;
                let digits: Vec<u8> = inner
                    .split(',')
                    .map(|d| d.trim().parse::<u8>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| err("bad digit in alphabet"))?;
                list.push(
                    TrackAlphabet::new(digits)
                        .map_err(|_| err("alphabet must contain the digit 0"))?,
                );
            }
            if list.is_empty() {
                return Err(err("at least one track required"));
            }
            tracks = Some(list);
        } else if let Some(rest) = content.strip_prefix("states:") {
            num_states = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| err("bad state count"))?,
            );
        } else if let Some(rest) = content.strip_prefix("initial:") {
            initial = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| err("bad initial state"))?,
            );
        } else if let Some(rest) = content.strip_prefix("accepting:") {
            let acc: Vec<StateId> = rest
                .split_whitespace()
                .map(|s| s.parse::<StateId>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| err("bad accepting state"))?;
            accepting = Some(acc);
        } else {
            // transition: SRC [d,...] -> DST
            let (src_s, rest) = content
                .split_once('[')
                .ok_or_else(|| err("expected transition line like `0 [1,0] -> 3`"))?;
            let (tuple_s, rest) = rest
                .split_once(']')
                .ok_or_else(|| err("missing `]` in tuple"))?;
            let dst_s = rest
                .trim()
                .strip_prefix("->")
                .ok_or_else(|| err("missing `->`"))?;
            let src: usize = src_s.trim().parse().map_err(|_| err("bad source state"))?;
            let dst: usize = dst_s.trim().parse().map_err(|_| err("bad target state"))?;
            let tuple: Vec<u8> = tuple_s
                .split(',')
                .map(|d| d.trim().parse::<u8>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| err("bad digit in tuple"))?;
            trans.push((src, tuple, dst, line));
        }
    }

    let tracks = tracks.ok_or(Error::Parse {
        line: 0,
        msg: "missing tracks: header".into(),
    })?;
    let declared = num_states.ok_or(Error::Parse {
        line: 0,
        msg: "missing states: header".into(),
    })?;
    if declared == 0 {
        return Err(Error::Parse {
            line: 0,
            msg: "states: must be positive".into(),
        });
    }
    let initial = initial.ok_or(Error::Parse {
        line: 0,
        msg: "missing initial: header".into(),
    })?;
    let accepting_list = accepting.ok_or(Error::Parse {
        line: 0,
        msg: "missing accepting: header".into(),
    })?;

    let tuples = enumerate_tuples(&tracks);
    let tuple_count = tuples.len();
    let probe = MultiTrackAutomaton::universal(tracks.clone());
    // slot table: u32::MAX = unset
    let mut table = vec![u32::MAX; declared * tuple_count];
    for (src, tuple, dst, line) in trans {
        let err = |msg: String| Error::Parse { line, msg };
        if src >= declared || dst >= declared {
            return Err(err(format!(
                "state index out of range (states: {declared})"
            )));
        }
        let idx = probe.tuple_index(&tuple).map_err(|e| {
            err(format!("tuple does not match declared tracks: {e}"))
        })?;
        table[src * tuple_count + idx] = dst as u32;
    }
    let missing = table.iter().any(|&t| t == u32::MAX);
    let total = if missing { declared + 1 } else { declared };
    let dead = declared as u32;
    let mut transitions = Vec::with_capacity(total * tuple_count);
    for q in 0..declared {
        for t in 0..tuple_count {
            let v = table[q * tuple_count + t];
            transitions.push(if v == u32::MAX { dead } else { v });
        }
    }
    if missing {
        transitions.extend(std::iter::repeat(dead).take(tuple_count));
    }
    if (initial as usize) >= total {
        return Err(Error::Parse {
            line: 0,
            msg: "initial state out of range".into(),
        });
    }
    let mut acc = vec![false; total];
    for q in accepting_list {
        if (q as usize) >= declared {
            return Err(Error::Parse {
                line: 0,
                msg: format!("accepting state {q} out of range"),
            });
        }
        acc[q as usize] = true;
    }
    MultiTrackAutomaton::new(tracks, total, initial, acc, transitions)
}

/// Parse a word given on the command line, returned as one digit row per
/// track. Plain digit strings are single-track; multi-track words use the
/// bracketed tuple syntax of the native format, e.g. `[2,2][0,0]`.
/// With `msd` the position order is reversed after parsing.
pub fn parse_word(s: &str, msd: bool) -> Result<Vec<Vec<u8>>> {
    let s = s.trim();
    let err = |msg: String| Error::Parse { line: 0, msg };
    let mut rows: Vec<Vec<u8>>;
    if s.starts_with('[') {
        rows = Vec::new();
        let mut rest = s;
        let mut pos = 0usize;
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('[')
                .ok_or_else(|| err(format!("expected `[` at tuple {pos}")))?;
            let (tuple_s, tail) = inner
                .split_once(']')
                .ok_or_else(|| err(format!("missing `]` in tuple {pos}")))?;
            let tuple: Vec<u8> = tuple_s
                .split(',')
                .map(|d| d.trim().parse::<u8>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| err(format!("bad digit in tuple {pos}")))?;
            if rows.is_empty() {
                rows = vec![Vec::new(); tuple.len()];
            } else if tuple.len() != rows.len() {
                return Err(err(format!(
                    "tuple {pos} has {} digits, expected {}",
                    tuple.len(),
                    rows.len()
                )));
            }
            for (row, d) in rows.iter_mut().zip(&tuple) {
                row.push(*d);
            }
            rest = tail;
            pos += 1;
        }
        if rows.is_empty() {
            rows = vec![Vec::new()];
        }
    } else {
        let mut row = Vec::with_capacity(s.len());
        for c in s.chars() {
            let d = c
                .to_digit(10)
                .ok_or_else(|| err(format!("bad digit '{c}'")))?;
            row.push(d as u8);
        }
        rows = vec![row];
    }
    if msd {
        for row in &mut rows {
            row.reverse();
        }
    }
    Ok(rows)
}

/// Graphviz DOT text: one node per state (doublecircle = accepting), edges
/// labeled with the list of tuples they carry.
pub fn export_dot(a: &MultiTrackAutomaton, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {name} {{").unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    writeln!(out, "  __init [shape=point];").unwrap();
    for q in 0..a.num_states() as StateId {
        let shape = if a.is_accepting(q) {
            "doublecircle"
        } else {
            "circle"
        };
        writeln!(out, "  {q} [shape={shape}];").unwrap();
    }
    writeln!(out, "  __init -> {};", a.initial()).unwrap();
    let tuples = a.tuples();
    for q in 0..a.num_states() as StateId {
        let mut by_target: std::collections::BTreeMap<StateId, Vec<String>> =
            std::collections::BTreeMap::new();
        for t in &tuples {
            let idx = a.tuple_index(t).unwrap();
            let target = a.step(q, idx);
            let digits: Vec<String> = t.iter().map(|d| d.to_string()).collect();
            by_target
                .entry(target)
                .or_default()
                .push(format!("[{}]", digits.join(",")));
        }
        for (target, labels) in by_target {
            writeln!(out, "  {q} -> {target} [label=\"{}\"];", labels.join(" ")).unwrap();
        }
    }
    writeln!(out, "}}").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::DigitWord;

    #[test]
    fn native_roundtrip_bit_exact() {
        let a = crate::recognizers::build_cgval();
        let text = export_native(&a);
        let b = import_native(&text).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn import_rejects_digit_outside_alphabet() {
        let text = "tracks: {0,1}\nstates: 1\ninitial: 0\naccepting: 0\n0 [2] -> 0\n";
        match import_native(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn import_sends_omitted_tuples_to_dead_state() {
        let text = "tracks: {0,1}\nstates: 1\ninitial: 0\naccepting: 0\n0 [0] -> 0\n";
        let a = import_native(text).unwrap();
        assert_eq!(a.num_states(), 2);
        assert!(a.accepts(&DigitWord::single(&[0, 0])).unwrap());
        assert!(!a.accepts(&DigitWord::single(&[1])).unwrap());
    }

    #[test]
    fn parse_word_plain_and_tupled() {
        assert_eq!(parse_word("201", false).unwrap(), vec![vec![2, 0, 1]]);
        assert_eq!(parse_word("201", true).unwrap(), vec![vec![1, 0, 2]]);
        assert_eq!(
            parse_word("[2,2][0,0]", false).unwrap(),
            vec![vec![2, 0], vec![2, 0]]
        );
        assert_eq!(parse_word("", false).unwrap(), vec![Vec::<u8>::new()]);
        assert!(parse_word("[1][0,0]", false).is_err());
        assert!(parse_word("1x0", false).is_err());
    }

    #[test]
    fn dot_output_is_wellformed() {
        let a = crate::recognizers::build_zeckval();
        let dot = export_dot(&a, "zeckval");
        assert!(dot.starts_with("digraph zeckval {"));
        assert!(dot.trim_end().ends_with('}'));
        assert!(dot.contains("doublecircle"));
    }
}
