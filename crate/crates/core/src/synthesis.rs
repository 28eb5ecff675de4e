//! Relation synthesis: a bounded-residual builder for linear value relations
//! over Fibonacci weights, and the composition pipelines that produce the
//! named relation automata (fibcg, cgadd, zeckadd, fibrep, cgrep, phin,
//! cgphin), plus functional application of a relation to input words.
//!
//! The residual construction stores, after reading k digit positions, the
//! pending value of the constraint as a·F_{k+2} + b·F_{k+3}. States carry an
//! exact position tag while k < TAG_LIMIT; within that window (a,b) is
//! reduced to the canonical representative of its coset modulo
//! t·(F_{k+3}, −F_{k+2}), which leaves the pending value unchanged. Beyond
//! the window the kernel vector exceeds twice the residual bound, so the
//! reduction is the identity and states become position-independent.
//! Accepting states are exactly those with (a,b) = (0,0): inside the window
//! the reduction maps every pending-zero pair there, and outside it
//! a·F_{k+2} + b·F_{k+3} = 0 forces (0,0) because consecutive Fibonacci
//! numbers are coprime and F_{k+3} exceeds the bound.
//!
//! Every build runs a verification pass against the exact big-integer
//! relation before returning; a mismatch is a hard error, never a silently
//! wrong automaton.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automata::{enumerate_tuples, DigitWord, MultiTrackAutomaton, TrackAlphabet};
use crate::error::{Error, Result};
use crate::numeration::{self, fib_u64, format_digits, Nat};
use crate::recognizers;

/// Position window in which residual states carry an exact position tag.
const TAG_LIMIT: usize = 6;

/// Default residual coordinate bound.
pub const DEFAULT_BOUND: i64 = 8;

/// Per-track description of a linear value relation
/// offset + Σⱼ cⱼ·value(wⱼ, shiftⱼ) = 0.
#[derive(Clone, Debug)]
pub struct ValueRelationSpec {
    pub tracks: Vec<TrackAlphabet>,
    /// cⱼ ∈ {+1, −1}
    pub coeffs: Vec<i64>,
    /// shift oⱼ ∈ {0, 1}: weight position i by F_{i+2+oⱼ}
    pub shifts: Vec<u8>,
    /// small constant |c₀| ≤ 2
    pub offset: i64,
}

impl ValueRelationSpec {
    /// Plain equal-weight spec (all shifts 0).
    pub fn new(tracks: Vec<TrackAlphabet>, coeffs: Vec<i64>) -> Self {
        let shifts = vec![0; coeffs.len()];
        ValueRelationSpec {
            tracks,
            coeffs,
            shifts,
            offset: 0,
        }
    }

    /// Signed exact value of the relation on equal-length rows.
    fn holds(&self, rows: &[Vec<u8>]) -> bool {
        use num_bigint::BigInt;
        let mut total = BigInt::from(self.offset);
        for ((row, &c), &o) in rows.iter().zip(&self.coeffs).zip(&self.shifts) {
            let v = BigInt::from(numeration::value(row, o as usize));
            total += c * v;
        }
        total == BigInt::from(0)
    }
}

fn reduce(k: usize, a: i64, b: i64) -> (i64, i64) {
    if k >= TAG_LIMIT {
        return (a, b);
    }
    let u = fib_u64(k + 3) as i64;
    let v = fib_u64(k + 2) as i64;
    let mut best = (a, b);
    let mut best_key = (a.abs() + b.abs(), a, b);
    for t in -6..=6i64 {
        let cand = (a + t * u, b - t * v);
        let key = (cand.0.abs() + cand.1.abs(), cand.0, cand.1);
        if key < best_key {
            best_key = key;
            best = cand;
        }
    }
    best
}

/// Build the DFA of a linear value relation by the tagged residual
/// construction, then verify it against the exact relation.
pub fn build_value_relation(spec: &ValueRelationSpec, bound: i64) -> Result<MultiTrackAutomaton> {
    if spec.tracks.len() < 2 {
        return Err(Error::Synthesis("value relation needs ≥ 2 tracks".into()));
    }
    if bound < 4 {
        return Err(Error::Synthesis("residual bound must be ≥ 4".into()));
    }
    let tuples = enumerate_tuples(&spec.tracks);
    // per-tuple digit sums, split by shift
    let contrib: Vec<(i64, i64)> = tuples
        .iter()
        .map(|t| {
            let mut e = 0i64;
            let mut e1 = 0i64;
            for ((&d, &c), &o) in t.iter().zip(&spec.coeffs).zip(&spec.shifts) {
                if o == 0 {
                    e += c * d as i64;
                } else {
                    e1 += c * d as i64;
                }
            }
            (e, e1)
        })
        .collect();

    type St = (usize, i64, i64);
    let mut idx: HashMap<St, u32> = HashMap::new();
    let mut order: Vec<St> = Vec::new();
    let dead: St = (usize::MAX, 0, 0);
    idx.insert(dead, 0);
    order.push(dead);
    let start = {
        let (a, b) = reduce(0, spec.offset, 0);
        (0usize, a, b)
    };
    if start.1.abs() > bound || start.2.abs() > bound {
        return Err(Error::Synthesis(
            "initial residual exceeds the bound; use a larger bound".into(),
        ));
    }
    idx.insert(start, 1);
    order.push(start);
    let mut queue = VecDeque::new();
    queue.push_back(start);
    let mut trans: HashMap<(u32, usize), u32> = HashMap::new();
    while let Some(s) = queue.pop_front() {
        let q = idx[&s];
        let (k, a, b) = s;
        for (ti, &(e, e1)) in contrib.iter().enumerate() {
            let k2 = (k + 1).min(TAG_LIMIT);
            let (ra, rb) = reduce(k2, b + e1 - a - e, a + e);
            let ns = if ra.abs() > bound || rb.abs() > bound {
                dead
            } else {
                (k2, ra, rb)
            };
            let fresh = idx.len() as u32;
            let id = match idx.entry(ns) {
                Entry::Occupied(o) => *o.get(),
                Entry::Vacant(v) => {
                    v.insert(fresh);
                    order.push(ns);
                    queue.push_back(ns);
                    fresh
                }
            };
            trans.insert((q, ti), id);
        }
    }
    let tc = tuples.len();
    let n = order.len();
    // unfilled entries default to 0, the dead self-loop
    let mut transitions = vec![0u32; n * tc];
    for ((q, t), target) in trans {
        transitions[q as usize * tc + t] = target;
    }
    let accepting: Vec<bool> = order
        .iter()
        .map(|&(k, a, b)| k != usize::MAX && a == 0 && b == 0)
        .collect();
    let auto = MultiTrackAutomaton::new(spec.tracks.clone(), n, 1, accepting, transitions)?
        .minimize();
    verify_relation(&auto, spec)?;
    Ok(auto)
}

/// Mandatory oracle pass: exhaustive over short words when feasible,
/// otherwise seeded random sampling. Mismatch is a synthesis error.
fn verify_relation(auto: &MultiTrackAutomaton, spec: &ValueRelationSpec) -> Result<()> {
    let tuples = enumerate_tuples(&spec.tracks);
    let tc = tuples.len() as u64;
    let check = |word: &[usize]| -> Result<()> {
        let rows: Vec<Vec<u8>> = (0..spec.tracks.len())
            .map(|track| word.iter().map(|&t| tuples[t][track]).collect())
            .collect();
        let refs: Vec<&[u8]> = rows.iter().map(|r| r.as_slice()).collect();
        let w = DigitWord::from_rows(&refs).expect("equal length rows");
        let got = auto.accepts(&w)?;
        let expect = spec.holds(&rows);
        if got != expect {
            return Err(Error::Synthesis(format!(
                "residual automaton disagrees with the exact relation on {:?} \
                 (automaton: {got}, exact: {expect}); use a larger bound",
                rows.iter().map(|r| format_digits(r, false)).collect::<Vec<_>>()
            )));
        }
        Ok(())
    };
    // exhaustive while cheap
    let mut exhaustive_len = 0usize;
    let mut count = 1u64;
    while exhaustive_len < 6 {
        match count.checked_mul(tc) {
            Some(c) if c <= 2_000_000 => {
                count = c;
                exhaustive_len += 1;
            }
            _ => break,
        }
    }
    let mut word = Vec::new();
    exhaustive(&mut word, exhaustive_len, tc as usize, &check)?;
    // seeded sampling at longer lengths
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f1b);
    for _ in 0..10_000 {
        let len = rng.gen_range(0..=12usize);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..tc as usize)).collect();
        check(&word)?;
    }
    Ok(())
}

fn exhaustive(
    word: &mut Vec<usize>,
    remaining: usize,
    tc: usize,
    check: &impl Fn(&[usize]) -> Result<()>,
) -> Result<()> {
    check(word)?;
    if remaining == 0 {
        return Ok(());
    }
    for t in 0..tc {
        word.push(t);
        exhaustive(word, remaining - 1, tc, check)?;
        word.pop();
    }
    Ok(())
}

/// msd / lsd digit order selector for fibrep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Lsd,
    Msd,
}

/// 3-track Zeckendorf adder over {0,1}³: accepts (x,y,z) iff all three are
/// Zeckendorf-valid and x + y = z as integers.
pub fn build_zeck_add() -> Result<MultiTrackAutomaton> {
    let spec = ValueRelationSpec::new(vec![TrackAlphabet::binary(); 3], vec![1, 1, -1]);
    let rel = build_value_relation(&spec, DEFAULT_BOUND)?;
    let zv = recognizers::build_zeckval();
    let mut out = rel;
    for track in 0..3 {
        out = out.intersect(&zv.embed(&[track], out.tracks())?)?;
    }
    Ok(out.minimize())
}

/// 3-track Chung-Graham adder over {0,1,2}³: accepts (x,y,z) iff all three
/// are CG-valid and x + y = z as integers.
pub fn build_cg_add() -> Result<MultiTrackAutomaton> {
    let spec = ValueRelationSpec::new(vec![TrackAlphabet::ternary(); 3], vec![1, 1, -1]);
    let rel = build_value_relation(&spec, DEFAULT_BOUND)?;
    let cv = recognizers::build_cgval();
    let mut out = rel;
    for track in 0..3 {
        out = out.intersect(&cv.embed(&[track], out.tracks())?)?;
    }
    Ok(out.minimize())
}

/// 2-track converter {0,1}×{0,1,2}: accepts (u,x) iff u is Zeckendorf-valid,
/// x is CG-valid and u = x as integers. Built by the cgsplit/adder pipeline:
/// tracks (u,x,y,z), cgsplit(x,y,z), u = y + z, validity on every track,
/// then y and z projected away.
pub fn build_fibcg() -> Result<MultiTrackAutomaton> {
    let sig = vec![
        TrackAlphabet::binary(),  // u
        TrackAlphabet::ternary(), // x
        TrackAlphabet::binary(),  // y
        TrackAlphabet::binary(),  // z
    ];
    let split = recognizers::build_cgsplit().embed(&[1, 2, 3], &sig)?;
    let addspec = ValueRelationSpec::new(vec![TrackAlphabet::binary(); 3], vec![1, -1, -1]);
    let add = build_value_relation(&addspec, DEFAULT_BOUND)?.embed(&[0, 2, 3], &sig)?;
    let zv = recognizers::build_zeckval();
    let cv = recognizers::build_cgval();
    let mut a = split.intersect(&add)?;
    a = a.intersect(&cv.embed(&[1], &sig)?)?;
    for track in [0usize, 2, 3] {
        a = a.intersect(&zv.embed(&[track], &sig)?)?;
    }
    let a = a.minimize().project(3)?.project(2)?;
    Ok(a.minimize())
}

/// 2-track {0,1}²: accepts (x,y) iff value(x) = value(y) and y is
/// Zeckendorf-valid; lsd convention, or reversed into msd.
pub fn build_fibrep(order: Order) -> Result<MultiTrackAutomaton> {
    let spec = ValueRelationSpec::new(vec![TrackAlphabet::binary(); 2], vec![1, -1]);
    let rel = build_value_relation(&spec, DEFAULT_BOUND)?;
    let zv = recognizers::build_zeckval().embed(&[1], rel.tracks())?;
    let lsd = rel.intersect(&zv)?.minimize();
    Ok(match order {
        Order::Lsd => lsd,
        Order::Msd => lsd.reverse(),
    })
}

/// 2-track {0,1,2}²: accepts (r,z) iff value(r) = value(z) and z is CG-valid.
/// Built by a five-way composition over tracks
/// (r,s,t,u,v,w,z) with s..w projected away.
pub fn build_cgrep() -> Result<MultiTrackAutomaton> {
    let b = TrackAlphabet::binary();
    let t3 = TrackAlphabet::ternary();
    let sig = vec![
        t3.clone(), // r
        b.clone(),  // s
        b.clone(),  // t
        b.clone(),  // u
        b.clone(),  // v
        b.clone(),  // w
        t3.clone(), // z
    ];
    let split = recognizers::build_cgsplit().embed(&[0, 1, 2], &sig)?;
    let fibrep = build_fibrep(Order::Lsd)?;
    let conv_s = fibrep.embed(&[1, 3], &sig)?;
    let conv_t = fibrep.embed(&[2, 4], &sig)?;
    let addspec = ValueRelationSpec::new(vec![b.clone(); 3], vec![1, 1, -1]);
    let add = build_value_relation(&addspec, DEFAULT_BOUND)?;
    let zv = recognizers::build_zeckval();
    let add = add
        .intersect(&zv.embed(&[2], add.tracks())?)? // w is a Zeckendorf integer variable
        .embed(&[3, 4, 5], &sig)?;
    let fibcg = build_fibcg()?.embed(&[5, 6], &sig)?;
    let mut a = split.intersect(&conv_s)?.minimize();
    a = a.intersect(&conv_t)?.minimize();
    a = a.intersect(&add)?.minimize();
    a = a.intersect(&fibcg)?.minimize();
    // project s,t,u,v,w (highest index first keeps positions stable)
    for track in [5usize, 4, 3, 2, 1] {
        a = a.project(track)?;
    }
    Ok(a.minimize())
}

/// Direct construction of the cgrep language (equality spec ∩ cgval on z),
/// used to cross-check the pipeline.
pub fn build_cgrep_direct() -> Result<MultiTrackAutomaton> {
    let spec = ValueRelationSpec::new(vec![TrackAlphabet::ternary(); 2], vec![1, -1]);
    let rel = build_value_relation(&spec, DEFAULT_BOUND)?;
    let cv = recognizers::build_cgval().embed(&[1], rel.tracks())?;
    Ok(rel.intersect(&cv)?.minimize())
}

/// 2-track {0,1}²: accepts (x,s) iff both are Zeckendorf-valid and
/// value(s) = ⌊φ·value(x)⌋.
///
/// Construction: ⌊φn⌋ = Σ aᵢF_{i+3} − δ where δ is 1 exactly when the
/// lowest nonzero digit of x sits at an even position (δ = 0 for x = 0).
/// Realized as a union over δ of a shifted value relation intersected with
/// a parity classifier, then verified against the exact ⌊φn⌋ oracle.
pub fn build_phin() -> Result<MultiTrackAutomaton> {
    let b = TrackAlphabet::binary();
    // parity classifier on track 0:
    // 0: all zeros so far, next position even; 1: all zeros, next odd;
    // 2: lowest nonzero at even position; 3: lowest nonzero at odd position
    let classifier = |accept_even: bool| {
        let acc = if accept_even {
            vec![false, false, true, false]
        } else {
            vec![true, true, false, true]
        };
        MultiTrackAutomaton::from_fn(vec![b.clone(), b.clone()], 4, 0, acc, |q, t| {
            match (q, t[0]) {
                (0, 0) => 1,
                (0, _) => 2,
                (1, 0) => 0,
                (1, _) => 3,
                (q, _) => q,
            }
        })
    };
    let shifted = |delta: i64| -> Result<MultiTrackAutomaton> {
        let spec = ValueRelationSpec {
            tracks: vec![b.clone(), b.clone()],
            coeffs: vec![1, -1],
            shifts: vec![1, 0],
            offset: -delta,
        };
        build_value_relation(&spec, DEFAULT_BOUND)
    };
    let with_delta = shifted(1)?.intersect(&classifier(true))?;
    let without_delta = shifted(0)?.intersect(&classifier(false))?;
    let mut a = with_delta.union(&without_delta)?;
    let zv = recognizers::build_zeckval();
    a = a.intersect(&zv.embed(&[0], a.tracks())?)?;
    a = a.intersect(&zv.embed(&[1], a.tracks())?)?;
    let a = a.minimize();
    // mandatory oracle verification of the construction hypothesis
    for n in 0u64..=3000 {
        let x = numeration::zeck_encode(&Nat::from(n));
        let s = numeration::zeck_encode(&numeration::phi_floor(&Nat::from(n)));
        let w = DigitWord::from_rows_padded(&[&x, &s]);
        if !a.accepts(&w)? {
            return Err(Error::Synthesis(format!(
                "phin construction hypothesis falsified at n = {n}"
            )));
        }
    }
    Ok(a)
}

/// 2-track {0,1,2}²: accepts (u,v) iff both are CG-valid and
/// value(v) = ⌊φ·value(u)⌋. Built by cylindering phin with two fibcg copies
/// over tracks (x,y,u,v) and projecting x,y.
pub fn build_cgphin() -> Result<MultiTrackAutomaton> {
    let b = TrackAlphabet::binary();
    let t3 = TrackAlphabet::ternary();
    let sig = vec![b.clone(), b.clone(), t3.clone(), t3.clone()];
    let phin = build_phin()?.embed(&[0, 1], &sig)?;
    let fibcg = build_fibcg()?;
    let cu = fibcg.embed(&[0, 2], &sig)?;
    let cv = fibcg.embed(&[1, 3], &sig)?;
    let mut a = phin.intersect(&cu)?.minimize();
    a = a.intersect(&cv)?.minimize();
    for track in [1usize, 0] {
        a = a.project(track)?;
    }
    Ok(a.minimize())
}

/// All synthesized automata, built once and shared.
pub struct Synthesized {
    pub zeckval: MultiTrackAutomaton,
    pub cgval: MultiTrackAutomaton,
    pub cg0: MultiTrackAutomaton,
    pub cg0_one: MultiTrackAutomaton,
    pub cgeq: MultiTrackAutomaton,
    pub cgsplit: MultiTrackAutomaton,
    pub zeckadd: MultiTrackAutomaton,
    pub cgadd: MultiTrackAutomaton,
    pub fibcg: MultiTrackAutomaton,
    pub fibrep_lsd: MultiTrackAutomaton,
    pub fibrep_msd: MultiTrackAutomaton,
    pub cgrep: MultiTrackAutomaton,
    pub phin: MultiTrackAutomaton,
    pub cgphin: MultiTrackAutomaton,
}

impl Synthesized {
    pub fn build_all() -> Result<Self> {
        Ok(Synthesized {
            zeckval: recognizers::build_zeckval(),
            cgval: recognizers::build_cgval(),
            cg0: recognizers::build_cg0(),
            cg0_one: recognizers::build_cg0_one_zero(),
            cgeq: recognizers::build_cgeq(),
            cgsplit: recognizers::build_cgsplit(),
            zeckadd: build_zeck_add()?,
            cgadd: build_cg_add()?,
            fibcg: build_fibcg()?,
            fibrep_lsd: build_fibrep(Order::Lsd)?,
            fibrep_msd: build_fibrep(Order::Msd)?,
            cgrep: build_cgrep()?,
            phin: build_phin()?,
            cgphin: build_cgphin()?,
        })
    }
}

/// Names accepted by [`synth_by_name`], in synthesis order.
pub const SYNTH_NAMES: &[&str] = &[
    "zeckval", "cgval", "cg0", "cgeq", "cgsplit", "zeckadd", "cgadd", "fibcg", "fibrep-lsd",
    "fibrep-msd", "cgrep", "phin", "cgphin",
];

pub fn synth_by_name(name: &str) -> Result<MultiTrackAutomaton> {
    match name {
        "zeckval" => Ok(recognizers::build_zeckval()),
        "cgval" => Ok(recognizers::build_cgval()),
        "cg0" => Ok(recognizers::build_cg0()),
        "cgeq" => Ok(recognizers::build_cgeq()),
        "cgsplit" => Ok(recognizers::build_cgsplit()),
        "zeckadd" => build_zeck_add(),
        "cgadd" => build_cg_add(),
        "fibcg" => build_fibcg(),
        "fibrep-lsd" => build_fibrep(Order::Lsd),
        "fibrep-msd" => build_fibrep(Order::Msd),
        "cgrep" => build_cgrep(),
        "phin" => build_phin(),
        "cgphin" => build_cgphin(),
        other => Err(Error::UnknownName(other.to_string())),
    }
}

/// Complete the given input tracks (exactly one `None`) to accepted tuples.
/// Inputs may be zero-padded by up to num_states positions; outputs are
/// returned canonical (trailing zeros stripped), deduplicated and sorted.
pub fn apply_relation(
    relation: &MultiTrackAutomaton,
    inputs: &[Option<&[u8]>],
) -> Result<Vec<Vec<u8>>> {
    let tracks = relation.tracks();
    if inputs.len() != tracks.len() {
        return Err(Error::TrackCountMismatch {
            expected: tracks.len(),
            got: inputs.len(),
        });
    }
    let free: Vec<usize> = (0..inputs.len()).filter(|&i| inputs[i].is_none()).collect();
    if free.len() != 1 {
        return Err(Error::Synthesis(format!(
            "apply_relation needs exactly one free track, got {}",
            free.len()
        )));
    }
    let free = free[0];
    let free_digits = tracks[free].digits().to_vec();
    let max_in = inputs.iter().flatten().map(|w| w.len()).max().unwrap_or(0);
    let total_len = max_in + relation.num_states();
    // fixed tuple contribution per position, with the free digit varying
    let mut fixed: Vec<Vec<u8>> = Vec::with_capacity(total_len);
    for pos in 0..total_len {
        let tuple: Vec<u8> = inputs
            .iter()
            .map(|w| match w {
                Some(w) => w.get(pos).copied().unwrap_or(0),
                None => 0,
            })
            .collect();
        fixed.push(tuple);
    }
    // viable[pos] = states from which a completion of positions pos.. can
    // reach acceptance at some end length ≤ total_len
    let n = relation.num_states();
    let mut viable: Vec<Vec<bool>> = vec![vec![false; n]; total_len + 1];
    for q in 0..n {
        viable[total_len][q] = relation.is_accepting(q as u32);
    }
    // acceptance may also occur before total_len: fold "accepting now" in
    for pos in (0..total_len).rev() {
        for q in 0..n {
            let mut ok = relation.is_accepting(q as u32) && pos >= max_in;
            for &d in &free_digits {
                if ok {
                    break;
                }
                let mut tuple = fixed[pos].clone();
                tuple[free] = d;
                let idx = relation.tuple_index(&tuple)?;
                if viable[pos + 1][relation.step(q as u32, idx) as usize] {
                    ok = true;
                }
            }
            viable[pos][q] = ok;
        }
    }
    // DFS collecting accepted completions; stop at any end ≥ max_in
    let mut out: Vec<Vec<u8>> = Vec::new();
    let mut stack: Vec<u8> = Vec::new();
    dfs(
        relation,
        &fixed,
        free,
        &free_digits,
        &viable,
        max_in,
        total_len,
        relation.initial(),
        0,
        &mut stack,
        &mut out,
    )?;
    out.iter_mut().for_each(|w| {
        while w.last() == Some(&0) {
            w.pop();
        }
    });
    out.sort();
    out.dedup();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    relation: &MultiTrackAutomaton,
    fixed: &[Vec<u8>],
    free: usize,
    free_digits: &[u8],
    viable: &[Vec<bool>],
    min_len: usize,
    total_len: usize,
    q: u32,
    pos: usize,
    stack: &mut Vec<u8>,
    out: &mut Vec<Vec<u8>>,
) -> Result<()> {
    if pos >= min_len && relation.is_accepting(q) {
        out.push(stack.clone());
    }
    if pos == total_len {
        return Ok(());
    }
    for &d in free_digits {
        let mut tuple = fixed[pos].clone();
        tuple[free] = d;
        let idx = relation.tuple_index(&tuple)?;
        let next = relation.step(q, idx);
        if viable[pos + 1][next as usize] {
            stack.push(d);
            dfs(
                relation,
                fixed,
                free,
                free_digits,
                viable,
                min_len,
                total_len,
                next,
                pos + 1,
                stack,
                out,
            )?;
            stack.pop();
        }
    }
    Ok(())
}

/// Apply a functional relation expecting exactly one output word.
pub fn apply_functional(
    relation: &MultiTrackAutomaton,
    inputs: &[Option<&[u8]>],
) -> Result<Vec<u8>> {
    let mut outs = apply_relation(relation, inputs)?;
    if outs.len() != 1 {
        let shown: Vec<String> = inputs
            .iter()
            .map(|w| match w {
                Some(w) => format_digits(w, false),
                None => "?".to_string(),
            })
            .collect();
        return Err(Error::NotFunctional(shown));
    }
    Ok(outs.pop().unwrap())
}

/// Chung-Graham encoding through the fibcg relation (the primary path;
/// the enumeration oracle in [`crate::numeration`] is the independent check).
pub fn cg_encode_via(fibcg: &MultiTrackAutomaton, n: &Nat) -> Result<Vec<u8>> {
    let zeck = numeration::zeck_encode(n);
    apply_functional(fibcg, &[Some(&zeck), None])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::DigitWord;

    fn zeck(n: u64) -> Vec<u8> {
        numeration::zeck_encode(&Nat::from(n))
    }

    #[test]
    fn equality_spec_accepts_identical_words() {
        let spec = ValueRelationSpec::new(vec![TrackAlphabet::binary(); 2], vec![1, -1]);
        let rel = build_value_relation(&spec, DEFAULT_BOUND).unwrap();
        let w = DigitWord::from_rows(&[&[1, 0, 1, 0, 0, 1], &[1, 0, 1, 0, 0, 1]]).unwrap();
        assert!(rel.accepts(&w).unwrap());
    }

    #[test]
    fn addition_spec_small_example() {
        let spec = ValueRelationSpec::new(vec![TrackAlphabet::binary(); 3], vec![1, 1, -1]);
        let rel = build_value_relation(&spec, DEFAULT_BOUND).unwrap();
        let w = DigitWord::from_rows_padded(&[&zeck(2), &zeck(3), &zeck(5)]);
        assert!(rel.accepts(&w).unwrap());
    }

    #[test]
    fn mixed_coefficient_spec_matches_oracle() {
        // x + 2y - z = 0 over ternary tracks, exhaustive to length 5
        let spec = ValueRelationSpec::new(vec![TrackAlphabet::ternary(); 3], vec![1, 2, -1]);
        let rel = build_value_relation(&spec, DEFAULT_BOUND).unwrap();
        let tuples = crate::automata::enumerate_tuples(rel.tracks());
        let mut words = vec![Vec::new()];
        for _ in 0..5 {
            words = words
                .iter()
                .flat_map(|w: &Vec<Vec<u8>>| {
                    tuples.iter().map(move |t| {
                        let mut v = w.clone();
                        v.push(t.clone());
                        v
                    })
                })
                .collect();
            for w in &words {
                let rows: Vec<Vec<u8>> = (0..3)
                    .map(|trk| w.iter().map(|t| t[trk]).collect())
                    .collect();
                let x = numeration::value(&rows[0], 0);
                let y = numeration::value(&rows[1], 0);
                let z = numeration::value(&rows[2], 0);
                let refs: Vec<&[u8]> = rows.iter().map(|r| r.as_slice()).collect();
                let word = DigitWord::from_rows(&refs).unwrap();
                assert_eq!(rel.accepts(&word).unwrap(), x + y.clone() + y == z);
            }
        }
    }

    #[test]
    fn zeckadd_examples_and_counts() {
        let a = build_zeck_add().unwrap();
        assert_eq!(a.live_state_count(), 21);
        for (m, n) in [(2u64, 3u64), (17, 4), (0, 0), (12, 12)] {
            let got = apply_functional(&a, &[Some(&zeck(m)), Some(&zeck(n)), None]).unwrap();
            assert_eq!(got, zeck(m + n));
        }
    }

    #[test]
    fn cgadd_examples() {
        let a = build_cg_add().unwrap();
        let table = numeration::cg_table(50).unwrap();
        // 5 + 3 = 8: "201" + "001" = "00001"
        let got =
            apply_functional(&a, &[Some(&table[5]), Some(&table[3]), None]).unwrap();
        assert_eq!(got, table[8]);
        for (m, n) in [(0usize, 0usize), (1, 1), (20, 21)] {
            let got =
                apply_functional(&a, &[Some(&table[m]), Some(&table[n]), None]).unwrap();
            assert_eq!(got, table[m + n]);
        }
    }

    #[test]
    fn fibcg_small_pairs() {
        let fibcg = build_fibcg().unwrap();
        let table = numeration::cg_table(200).unwrap();
        for n in 0..=200u64 {
            assert_eq!(cg_encode_via(&fibcg, &Nat::from(n)).unwrap(), table[n as usize]);
        }
        // mismatched pair rejected
        let w = DigitWord::from_rows_padded(&[&zeck(7), &table[9]]);
        assert!(!fibcg.accepts(&w).unwrap());
    }

    #[test]
    fn fibrep_normalizes_arbitrary_fib_sums() {
        let lsd = build_fibrep(Order::Lsd).unwrap();
        // [1,1] has value F2+F3 = 3 = zeck "0001"... value 3 is "0010"? F4=3 → [0,0,1]
        let got = apply_functional(&lsd, &[Some(&[1, 1]), None]).unwrap();
        assert_eq!(got, zeck(3));
        let got = apply_functional(&lsd, &[Some(&[1, 1, 0, 1]), None]).unwrap();
        assert_eq!(numeration::value(&got, 0), Nat::from(8u32));
        assert!(numeration::zeck_valid(&got));
        // msd variant is the reverse language
        let msd = build_fibrep(Order::Msd).unwrap();
        assert!(msd.equivalent(&lsd.reverse()).unwrap());
    }

    #[test]
    fn cgrep_composition_matches_direct_construction() {
        let composed = build_cgrep().unwrap();
        let direct = build_cgrep_direct().unwrap();
        assert!(composed.equivalent(&direct).unwrap());
    }

    #[test]
    fn cgrep_example_from_apply() {
        let cgrep = build_cgrep().unwrap();
        let outs = apply_relation(&cgrep, &[Some(&[2, 0, 2]), None]).unwrap();
        assert_eq!(outs, vec![vec![0, 0, 0, 0, 1]]);
    }

    #[test]
    fn phin_small_values() {
        let phin = build_phin().unwrap();
        for n in 0..=300u64 {
            let expect = numeration::phi_floor(&Nat::from(n));
            let got = apply_functional(&phin, &[Some(&zeck(n)), None]).unwrap();
            assert_eq!(numeration::value(&got, 0), expect);
        }
    }

    #[test]
    fn cgphin_small_values() {
        let cgphin = build_cgphin().unwrap();
        let table = numeration::cg_table(500).unwrap();
        for n in 0..=300u64 {
            let phi = u64::try_from(numeration::phi_floor(&Nat::from(n))).unwrap();
            let got =
                apply_functional(&cgphin, &[Some(&table[n as usize]), None]).unwrap();
            assert_eq!(got, table[phi as usize]);
        }
    }

    #[test]
    fn apply_relation_requires_one_free_track() {
        let a = build_zeck_add().unwrap();
        assert!(apply_relation(&a, &[Some([1u8, 0].as_slice()), None, None]).is_err());
        assert!(apply_relation(&a, &[Some(&[1]), Some(&[1]), Some(&[0, 1])]).is_err());
    }

    #[test]
    fn synth_by_name_covers_all_names() {
        for name in SYNTH_NAMES {
            synth_by_name(name).unwrap();
        }
        assert!(matches!(
            synth_by_name("nope"),
            Err(Error::UnknownName(_))
        ));
    }
}
