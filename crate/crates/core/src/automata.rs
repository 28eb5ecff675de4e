//! Deterministic multi-track finite automata over small digit alphabets.
//!
//! An automaton reads k digit strings in parallel, one tuple per step, and
//! recognizes a k-ary relation on digit words. Transition maps are always
//! total; a non-accepting sink plays the role of the dead state. All
//! operations are pure and return fresh automata.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

pub type StateId = u32;

/// Ordered digit alphabet of a single track. Always contains 0, which is the
/// padding digit on every track.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TrackAlphabet {
    digits: Vec<u8>,
}

impl TrackAlphabet {
    pub fn new(digits: impl IntoIterator<Item = u8>) -> Result<Self> {
        let mut digits: Vec<u8> = digits.into_iter().collect();
        digits.sort_unstable();
        digits.dedup();
        if !digits.contains(&0) {
            return Err(Error::DigitOutOfAlphabet { digit: 0, track: 0 });
        }
        Ok(TrackAlphabet { digits })
    }

    /// The alphabet {0,1}.
    pub fn binary() -> Self {
        TrackAlphabet { digits: vec![0, 1] }
    }

    /// The alphabet {0,1,2}.
    pub fn ternary() -> Self {
        TrackAlphabet {
            digits: vec![0, 1, 2],
        }
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: contains 0
    }

    pub fn contains(&self, d: u8) -> bool {
        self.digits.binary_search(&d).is_ok()
    }

    fn index_of(&self, d: u8) -> Option<usize> {
        self.digits.binary_search(&d).ok()
    }
}

/// A finite sequence of digit tuples, least-significant position first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitWord {
    tracks: usize,
    /// Position-major: digits[pos * tracks + track].
    digits: Vec<u8>,
}

impl DigitWord {
    pub fn empty(tracks: usize) -> Self {
        DigitWord {
            tracks,
            digits: Vec::new(),
        }
    }

    /// Single-track word from a digit slice.
    pub fn single(digits: &[u8]) -> Self {
        DigitWord {
            tracks: 1,
            digits: digits.to_vec(),
        }
    }

    /// Zip equal-length per-track digit sequences into one word.
    pub fn from_rows(rows: &[&[u8]]) -> Result<Self> {
        let tracks = rows.len();
        let len = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != len) {
            return Err(Error::SignatureMismatch);
        }
        let mut digits = Vec::with_capacity(tracks * len);
        for pos in 0..len {
            for row in rows {
                digits.push(row[pos]);
            }
        }
        Ok(DigitWord { tracks, digits })
    }

    /// Zip per-track digit sequences, padding shorter ones with trailing 0s.
    pub fn from_rows_padded(rows: &[&[u8]]) -> Self {
        let len = rows.iter().map(|r| r.len()).max().unwrap_or(0);
        let padded: Vec<Vec<u8>> = rows
            .iter()
            .map(|r| {
                let mut v = r.to_vec();
                v.resize(len, 0);
                v
            })
            .collect();
        let refs: Vec<&[u8]> = padded.iter().map(|v| v.as_slice()).collect();
        DigitWord::from_rows(&refs).expect("rows padded to equal length")
    }

    pub fn tracks(&self) -> usize {
        self.tracks
    }

    pub fn len(&self) -> usize {
        if self.tracks == 0 {
            0
        } else {
            self.digits.len() / self.tracks
        }
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn tuple_at(&self, pos: usize) -> &[u8] {
        &self.digits[pos * self.tracks..(pos + 1) * self.tracks]
    }

    pub fn push(&mut self, tuple: &[u8]) {
        assert_eq!(tuple.len(), self.tracks);
        self.digits.extend_from_slice(tuple);
    }

    /// The digit sequence of one track.
    pub fn track(&self, i: usize) -> Vec<u8> {
        (0..self.len()).map(|p| self.tuple_at(p)[i]).collect()
    }
}

/// Deterministic, total multi-track automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiTrackAutomaton {
    tracks: Vec<TrackAlphabet>,
    initial: StateId,
    accepting: Vec<bool>,
    /// transitions[state * tuple_count + tuple_index]
    transitions: Vec<StateId>,
    tuple_count: usize,
}

/// All digit tuples of a track signature in lexicographic order
/// (track 0 most significant).
pub(crate) fn enumerate_tuples(tracks: &[TrackAlphabet]) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for t in tracks {
        let mut next = Vec::with_capacity(out.len() * t.len());
        for prefix in &out {
            for &d in t.digits() {
                let mut v = prefix.clone();
                v.push(d);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

impl MultiTrackAutomaton {
    pub fn new(
        tracks: Vec<TrackAlphabet>,
        num_states: usize,
        initial: StateId,
        accepting: Vec<bool>,
        transitions: Vec<StateId>,
    ) -> Result<Self> {
        let tuple_count: usize = tracks.iter().map(|t| t.len()).product();
        assert!(num_states > 0, "automaton needs at least one state");
        assert_eq!(accepting.len(), num_states);
        assert_eq!(transitions.len(), num_states * tuple_count);
        assert!((initial as usize) < num_states);
        assert!(transitions.iter().all(|&t| (t as usize) < num_states));
        Ok(MultiTrackAutomaton {
            tracks,
            initial,
            accepting,
            transitions,
            tuple_count,
        })
    }

    /// Build from a transition function over (state, digit tuple).
    pub fn from_fn(
        tracks: Vec<TrackAlphabet>,
        num_states: usize,
        initial: StateId,
        accepting: Vec<bool>,
        mut f: impl FnMut(usize, &[u8]) -> usize,
    ) -> Self {
        let tuples = enumerate_tuples(&tracks);
        let mut transitions = Vec::with_capacity(num_states * tuples.len());
        for q in 0..num_states {
            for t in &tuples {
                let n = f(q, t);
                assert!(n < num_states);
                transitions.push(n as StateId);
            }
        }
        MultiTrackAutomaton::new(tracks, num_states, initial, accepting, transitions)
            .expect("from_fn produced a consistent automaton")
    }

    /// Accepts every word over the signature.
    pub fn universal(tracks: Vec<TrackAlphabet>) -> Self {
        MultiTrackAutomaton::from_fn(tracks, 1, 0, vec![true], |_, _| 0)
    }

    /// Accepts nothing.
    pub fn empty_language(tracks: Vec<TrackAlphabet>) -> Self {
        MultiTrackAutomaton::from_fn(tracks, 1, 0, vec![false], |_, _| 0)
    }

    pub fn tracks(&self) -> &[TrackAlphabet] {
        &self.tracks
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q as usize]
    }

    pub fn tuple_count(&self) -> usize {
        self.tuple_count
    }

    pub fn tuples(&self) -> Vec<Vec<u8>> {
        enumerate_tuples(&self.tracks)
    }

    /// Successor of `q` under the tuple with the given index.
    pub fn step(&self, q: StateId, tuple_idx: usize) -> StateId {
        self.transitions[q as usize * self.tuple_count + tuple_idx]
    }

    pub fn tuple_index(&self, tuple: &[u8]) -> Result<usize> {
        if tuple.len() != self.tracks.len() {
            return Err(Error::TrackCountMismatch {
                expected: self.tracks.len(),
                got: tuple.len(),
            });
        }
        let mut idx = 0usize;
        for (i, (&d, alph)) in tuple.iter().zip(&self.tracks).enumerate() {
            let j = alph
                .index_of(d)
                .ok_or(Error::DigitOutOfAlphabet { digit: d, track: i })?;
            idx = idx * alph.len() + j;
        }
        Ok(idx)
    }

    fn same_signature(&self, other: &Self) -> Result<()> {
        if self.tracks != other.tracks {
            return Err(Error::SignatureMismatch);
        }
        Ok(())
    }

    /// Run the word from the initial state; true iff it ends accepting.
    pub fn accepts(&self, w: &DigitWord) -> Result<bool> {
        if w.tracks() != self.tracks.len() {
            return Err(Error::TrackCountMismatch {
                expected: self.tracks.len(),
                got: w.tracks(),
            });
        }
        let mut q = self.initial;
        for pos in 0..w.len() {
            let idx = self.tuple_index(w.tuple_at(pos))?;
            q = self.step(q, idx);
        }
        Ok(self.accepting[q as usize])
    }

    fn product(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Result<Self> {
        self.same_signature(other)?;
        let tc = self.tuple_count;
        let mut idx: HashMap<(StateId, StateId), StateId> = HashMap::new();
        let mut order: Vec<(StateId, StateId)> = Vec::new();
        let mut queue = VecDeque::new();
        let start = (self.initial, other.initial);
        idx.insert(start, 0);
        order.push(start);
        queue.push_back(start);
        let mut transitions: Vec<StateId> = Vec::new();
        while let Some(pair) = queue.pop_front() {
            for t in 0..tc {
                let np = (self.step(pair.0, t), other.step(pair.1, t));
                let next = idx.len() as StateId;
                let id = match idx.entry(np) {
                    Entry::Occupied(e) => *e.get(),
                    Entry::Vacant(e) => {
                        e.insert(next);
                        order.push(np);
                        queue.push_back(np);
                        next
                    }
                };
                transitions.push(id);
            }
        }
        let accepting = order
            .iter()
            .map(|&(a, b)| op(self.accepting[a as usize], other.accepting[b as usize]))
            .collect();
        MultiTrackAutomaton::new(self.tracks.clone(), order.len(), 0, accepting, transitions)
    }

    /// Product with an arbitrary Boolean combination of acceptance.
    pub fn combine(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Result<Self> {
        self.product(other, op)
    }

    /// L(result) = L(self) ∩ L(other); pruned to reachable states.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.product(other, |a, b| a && b)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.product(other, |a, b| a || b)
    }

    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for a in &mut out.accepting {
            *a = !*a;
        }
        out
    }

    /// Make state q accepting iff some all-zero-tuple path from q reaches an
    /// accepting state, so the result accepts w iff self accepts w·0^t for
    /// some t ≥ 0.
    pub fn zero_stabilize(&self) -> Self {
        let zero = self
            .tuple_index(&vec![0; self.tracks.len()])
            .expect("0 is in every alphabet");
        let mut acc = self.accepting.clone();
        loop {
            let mut changed = false;
            for q in 0..self.num_states() {
                if !acc[q] && acc[self.step(q as StateId, zero) as usize] {
                    acc[q] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let mut out = self.clone();
        out.accepting = acc;
        out
    }

    /// Remove a track: L(result) = { w : ∃ digits on the removed track making
    /// self accept w padded with trailing zero tuples }. Determinized,
    /// zero-stabilized and minimized.
    pub fn project(&self, track: usize) -> Result<Self> {
        self.project_impl(track, true)
    }

    /// Like [`project`](Self::project) but without zero-stabilization: the
    /// witness digits must have exactly the length of the remaining word.
    /// This matches quantification over raw same-length strings.
    pub fn project_exact(&self, track: usize) -> Result<Self> {
        self.project_impl(track, false)
    }

    fn project_impl(&self, track: usize, stabilize: bool) -> Result<Self> {
        if self.tracks.len() < 2 {
            return Err(Error::ProjectOnlyTrack);
        }
        assert!(track < self.tracks.len());
        let mut new_tracks = self.tracks.clone();
        new_tracks.remove(track);
        let new_tuples = enumerate_tuples(&new_tracks);
        let removed = self.tracks[track].clone();
        // NFA transitions: for each reduced tuple, the set of successors over
        // all choices of the removed digit.
        let mut nfa = Nfa {
            tracks: new_tracks,
            accepting: self.accepting.clone(),
            initials: vec![self.initial],
            transitions: vec![vec![Vec::new(); new_tuples.len()]; self.num_states()],
        };
        for q in 0..self.num_states() {
            for (ti, t) in new_tuples.iter().enumerate() {
                let mut full = t.clone();
                full.insert(track, 0);
                for &d in removed.digits() {
                    full[track] = d;
                    let idx = self.tuple_index(&full)?;
                    let n = self.step(q as StateId, idx);
                    if !nfa.transitions[q][ti].contains(&n) {
                        nfa.transitions[q][ti].push(n);
                    }
                }
            }
        }
        let det = nfa.determinize();
        let det = if stabilize { det.zero_stabilize() } else { det };
        Ok(det.minimize())
    }

    /// L(result) = { reverse(w) : w ∈ L(self) }, determinized and minimized.
    pub fn reverse(&self) -> Self {
        let tuples = enumerate_tuples(&self.tracks);
        let mut nfa = Nfa {
            tracks: self.tracks.clone(),
            accepting: vec![false; self.num_states()],
            initials: (0..self.num_states() as StateId)
                .filter(|&q| self.accepting[q as usize])
                .collect(),
            transitions: vec![vec![Vec::new(); tuples.len()]; self.num_states()],
        };
        nfa.accepting[self.initial as usize] = true;
        for q in 0..self.num_states() {
            for t in 0..self.tuple_count {
                let n = self.step(q as StateId, t) as usize;
                nfa.transitions[n][t].push(q as StateId);
            }
        }
        nfa.determinize().minimize()
    }

    /// Canonical minimal DFA: reachable restriction, Moore partition
    /// refinement, then BFS renumbering from the initial state with digit
    /// tuples in lexicographic order.
    pub fn minimize(&self) -> Self {
        let tc = self.tuple_count;
        // reachable restriction
        let mut map = vec![u32::MAX; self.num_states()];
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        map[self.initial as usize] = 0;
        order.push(self.initial);
        queue.push_back(self.initial);
        while let Some(q) = queue.pop_front() {
            for t in 0..tc {
                let n = self.step(q, t);
                if map[n as usize] == u32::MAX {
                    map[n as usize] = order.len() as u32;
                    order.push(n);
                    queue.push_back(n);
                }
            }
        }
        let n = order.len();
        let mut trans = vec![0u32; n * tc];
        let mut acc = vec![false; n];
        for (i, &q) in order.iter().enumerate() {
            acc[i] = self.accepting[q as usize];
            for t in 0..tc {
                trans[i * tc + t] = map[self.step(q, t) as usize];
            }
        }
        // Moore refinement with hashed signatures
        let mut class: Vec<u32> = acc.iter().map(|&a| a as u32).collect();
        let mut num_classes = 2.min(n);
        loop {
            let mut sig_ids: HashMap<Vec<u32>, u32> = HashMap::new();
            let mut next = vec![0u32; n];
            for q in 0..n {
                let mut sig = Vec::with_capacity(tc + 1);
                sig.push(class[q]);
                for t in 0..tc {
                    sig.push(class[trans[q * tc + t] as usize]);
                }
                let fresh = sig_ids.len() as u32;
                let id = *sig_ids.entry(sig).or_insert(fresh);
                next[q] = id;
            }
            let count = sig_ids.len();
            class = next;
            if count == num_classes {
                break;
            }
            num_classes = count;
        }
        // quotient with canonical BFS numbering
        let mut repr: Vec<Option<u32>> = vec![None; num_classes];
        for q in 0..n {
            let c = class[q] as usize;
            if repr[c].is_none() {
                repr[c] = Some(q as u32);
            }
        }
        let mut renum = vec![u32::MAX; num_classes];
        let mut qorder = Vec::new();
        let start = class[0] as usize; // state 0 is the (remapped) initial
        renum[start] = 0;
        qorder.push(start);
        let mut queue = VecDeque::new();
        queue.push_back(start);
        while let Some(c) = queue.pop_front() {
            let q = repr[c].unwrap() as usize;
            for t in 0..tc {
                let nc = class[trans[q * tc + t] as usize] as usize;
                if renum[nc] == u32::MAX {
                    renum[nc] = qorder.len() as u32;
                    qorder.push(nc);
                    queue.push_back(nc);
                }
            }
        }
        let m = qorder.len();
        let mut out_trans = vec![0u32; m * tc];
        let mut out_acc = vec![false; m];
        for (i, &c) in qorder.iter().enumerate() {
            let q = repr[c].unwrap() as usize;
            out_acc[i] = acc[q];
            for t in 0..tc {
                out_trans[i * tc + t] = renum[class[trans[q * tc + t] as usize] as usize];
            }
        }
        MultiTrackAutomaton::new(self.tracks.clone(), m, 0, out_acc, out_trans)
            .expect("minimize produced a consistent automaton")
    }

    /// Number of states that are both reachable and able to reach acceptance.
    pub fn live_state_count(&self) -> usize {
        let tc = self.tuple_count;
        let n = self.num_states();
        let mut reach = vec![false; n];
        let mut queue = VecDeque::new();
        reach[self.initial as usize] = true;
        queue.push_back(self.initial);
        while let Some(q) = queue.pop_front() {
            for t in 0..tc {
                let m = self.step(q, t);
                if !reach[m as usize] {
                    reach[m as usize] = true;
                    queue.push_back(m);
                }
            }
        }
        let mut co = self.accepting.clone();
        loop {
            let mut changed = false;
            for q in 0..n {
                if !co[q] && (0..tc).any(|t| co[self.step(q as StateId, t) as usize]) {
                    co[q] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        (0..n).filter(|&q| reach[q] && co[q]).count()
    }

    pub fn total_state_count(&self) -> usize {
        self.num_states()
    }

    pub fn is_empty(&self) -> bool {
        let tc = self.tuple_count;
        let mut seen = vec![false; self.num_states()];
        let mut queue = VecDeque::new();
        seen[self.initial as usize] = true;
        queue.push_back(self.initial);
        while let Some(q) = queue.pop_front() {
            if self.accepting[q as usize] {
                return false;
            }
            for t in 0..tc {
                let n = self.step(q, t);
                if !seen[n as usize] {
                    seen[n as usize] = true;
                    queue.push_back(n);
                }
            }
        }
        true
    }

    /// Language equality, via symmetric-difference emptiness.
    pub fn equivalent(&self, other: &Self) -> Result<bool> {
        Ok(self.product(other, |a, b| a != b)?.is_empty())
    }

    /// Insert an unconstrained track at the given position.
    pub fn cylinder(&self, pos: usize, alphabet: TrackAlphabet) -> Self {
        assert!(pos <= self.tracks.len());
        let mut tracks = self.tracks.clone();
        tracks.insert(pos, alphabet);
        let tuples = enumerate_tuples(&tracks);
        let mut transitions = Vec::with_capacity(self.num_states() * tuples.len());
        for q in 0..self.num_states() {
            for t in &tuples {
                let mut reduced = t.clone();
                reduced.remove(pos);
                let idx = self.tuple_index(&reduced).expect("reduced tuple valid");
                transitions.push(self.step(q as StateId, idx));
            }
        }
        MultiTrackAutomaton::new(
            tracks,
            self.num_states(),
            self.initial,
            self.accepting.clone(),
            transitions,
        )
        .expect("cylinder produced a consistent automaton")
    }

    /// Reorder tracks; perm[i] is the new position of track i.
    pub fn permute_tracks(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.tracks.len() {
            return Err(Error::TrackCountMismatch {
                expected: self.tracks.len(),
                got: perm.len(),
            });
        }
        let mut tracks = vec![TrackAlphabet::binary(); perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            tracks[p] = self.tracks[i].clone();
        }
        let tuples = enumerate_tuples(&tracks);
        let mut transitions = Vec::with_capacity(self.num_states() * tuples.len());
        for q in 0..self.num_states() {
            for t in &tuples {
                let orig: Vec<u8> = perm.iter().map(|&p| t[p]).collect();
                let idx = self.tuple_index(&orig)?;
                transitions.push(self.step(q as StateId, idx));
            }
        }
        MultiTrackAutomaton::new(
            tracks,
            self.num_states(),
            self.initial,
            self.accepting.clone(),
            transitions,
        )
    }

    /// Embed onto a wider signature: this automaton's tracks land at the given
    /// (strictly increasing) positions, all other tracks are unconstrained
    /// with the alphabets from `target`.
    pub fn embed(&self, positions: &[usize], target: &[TrackAlphabet]) -> Result<Self> {
        if positions.len() != self.tracks.len() {
            return Err(Error::TrackCountMismatch {
                expected: self.tracks.len(),
                got: positions.len(),
            });
        }
        for (i, &p) in positions.iter().enumerate() {
            if self.tracks[i] != target[p] {
                return Err(Error::SignatureMismatch);
            }
        }
        let mut out = self.clone();
        let mut have: Vec<usize> = positions.to_vec();
        for p in 0..target.len() {
            if !positions.contains(&p) {
                let at = have.iter().filter(|&&h| h < p).count();
                out = out.cylinder(at, target[p].clone());
                have.push(p);
            }
        }
        Ok(out)
    }
}

/// Nondeterministic automaton, produced internally by reverse and project.
pub(crate) struct Nfa {
    pub tracks: Vec<TrackAlphabet>,
    pub accepting: Vec<bool>,
    pub initials: Vec<StateId>,
    /// transitions[state][tuple] = successor set
    pub transitions: Vec<Vec<Vec<StateId>>>,
}

impl Nfa {
    /// Subset construction; states numbered in BFS discovery order.
    pub fn determinize(&self) -> MultiTrackAutomaton {
        let tc: usize = self.tracks.iter().map(|t| t.len()).product();
        let mut init: Vec<StateId> = self.initials.clone();
        init.sort_unstable();
        init.dedup();
        let mut idx: HashMap<Vec<StateId>, StateId> = HashMap::new();
        let mut subsets: Vec<Vec<StateId>> = Vec::new();
        let mut queue = VecDeque::new();
        idx.insert(init.clone(), 0);
        subsets.push(init);
        queue.push_back(0usize);
        let mut transitions: Vec<StateId> = Vec::new();
        while let Some(s) = queue.pop_front() {
            let subset = subsets[s].clone();
            for t in 0..tc {
                let mut next: Vec<StateId> = Vec::new();
                for &q in &subset {
                    next.extend_from_slice(&self.transitions[q as usize][t]);
                }
                next.sort_unstable();
                next.dedup();
                let fresh = idx.len() as StateId;
                let id = match idx.entry(next) {
                    Entry::Occupied(e) => *e.get(),
                    Entry::Vacant(e) => {
                        subsets.push(e.key().clone());
                        e.insert(fresh);
                        queue.push_back(fresh as usize);
                        fresh
                    }
                };
                transitions.push(id);
            }
        }
        let accepting = subsets
            .iter()
            .map(|s| s.iter().any(|&q| self.accepting[q as usize]))
            .collect();
        MultiTrackAutomaton::new(self.tracks.clone(), subsets.len(), 0, accepting, transitions)
            .expect("determinize produced a consistent automaton")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word_automaton(digits: &[u8]) -> MultiTrackAutomaton {
        // accepts exactly the given single-track binary word
        let n = digits.len();
        let dead = n + 1;
        let mut acc = vec![false; n + 2];
        acc[n] = true;
        MultiTrackAutomaton::from_fn(
            vec![TrackAlphabet::binary()],
            n + 2,
            0,
            acc,
            |q, t| {
                if q < n && t[0] == digits[q] {
                    q + 1
                } else {
                    dead
                }
            },
        )
    }

    #[test]
    fn empty_word_semantics() {
        let u = MultiTrackAutomaton::universal(vec![TrackAlphabet::binary()]);
        let e = MultiTrackAutomaton::empty_language(vec![TrackAlphabet::binary()]);
        assert!(u.accepts(&DigitWord::empty(1)).unwrap());
        assert!(!e.accepts(&DigitWord::empty(1)).unwrap());
    }

    #[test]
    fn intersect_idempotent_and_identity() {
        let a = word_automaton(&[1, 0, 0]);
        let u = MultiTrackAutomaton::universal(vec![TrackAlphabet::binary()]);
        assert!(a.intersect(&a).unwrap().equivalent(&a).unwrap());
        assert!(a.intersect(&u).unwrap().equivalent(&a).unwrap());
    }

    #[test]
    fn complement_and_union_laws() {
        let a = word_automaton(&[1, 0]);
        let u = MultiTrackAutomaton::universal(vec![TrackAlphabet::binary()]);
        let e = MultiTrackAutomaton::empty_language(vec![TrackAlphabet::binary()]);
        assert!(e.complement().equivalent(&u).unwrap());
        assert!(a.union(&a.complement()).unwrap().equivalent(&u).unwrap());
        assert!(a.complement().complement().equivalent(&a).unwrap());
        assert!(a.intersect(&a.complement()).unwrap().is_empty());
    }

    #[test]
    fn reverse_single_word() {
        let a = word_automaton(&[1, 0, 0]);
        let r = a.reverse();
        assert!(r.accepts(&DigitWord::single(&[0, 0, 1])).unwrap());
        assert!(!r.accepts(&DigitWord::single(&[1, 0, 0])).unwrap());
        assert!(r.reverse().equivalent(&a).unwrap());
    }

    #[test]
    fn minimize_idempotent() {
        let a = word_automaton(&[1, 0, 1]);
        let m = a.minimize();
        assert!(m.equivalent(&a).unwrap());
        assert_eq!(m.minimize().num_states(), m.num_states());
    }

    #[test]
    fn zero_stabilize_definition() {
        let a = word_automaton(&[1, 0, 0]);
        let z = a.zero_stabilize();
        assert!(z.accepts(&DigitWord::single(&[1])).unwrap());
        assert!(z.accepts(&DigitWord::single(&[1, 0])).unwrap());
        assert!(z.accepts(&DigitWord::single(&[1, 0, 0])).unwrap());
        assert!(!z.accepts(&DigitWord::single(&[0, 1])).unwrap());
        // already-stable automaton is a fixed point up to language
        assert!(z.zero_stabilize().equivalent(&z).unwrap());
    }

    #[test]
    fn cylinder_then_project_is_identity() {
        let a = word_automaton(&[1, 0]);
        let c = a.cylinder(1, TrackAlphabet::ternary());
        let p = c.project(1).unwrap();
        assert!(p.equivalent(&a.zero_stabilize()).unwrap());
        let p = c.project_exact(1).unwrap();
        assert!(p.equivalent(&a).unwrap());
    }

    #[test]
    fn project_only_track_is_error() {
        let a = word_automaton(&[1]);
        assert!(matches!(a.project(0), Err(Error::ProjectOnlyTrack)));
    }

    #[test]
    fn permute_roundtrip() {
        let a = word_automaton(&[1, 0]).cylinder(1, TrackAlphabet::ternary());
        let p = a.permute_tracks(&[1, 0]).unwrap();
        let back = p.permute_tracks(&[1, 0]).unwrap();
        assert!(back.equivalent(&a).unwrap());
    }
}
