//! Exact arithmetic ground truth: Fibonacci numbers, Zeckendorf and
//! Chung-Graham encode/decode/validate, digit-string valuation, the cgsplit
//! digit map and the ⌊φn⌋ oracle. Everything here is independent of the
//! automaton engine and uses only unbounded integers — no floating point.
//!
//! Digit strings are least-significant-first: "201" means a₀=2, a₁=0, a₂=1.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Unbounded nonnegative integer. Values overflow 64 bits near word
/// length 90, so all oracle arithmetic goes through this type.
pub type Nat = BigUint;

/// The i-th Fibonacci number: F₀=0, F₁=1, Fₙ₊₁=Fₙ+Fₙ₋₁.
pub fn fib(i: usize) -> Nat {
    let mut a = Nat::zero();
    let mut b = Nat::one();
    for _ in 0..i {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// Fibonacci numbers that fit in u64 (valid through F₉₂).
pub fn fib_u64(i: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..i {
        let next = a.checked_add(b).expect("fib_u64 overflow");
        a = b;
        b = next;
    }
    a
}

/// Σ aᵢ · F_{i+2+shift} over a single-track digit sequence.
pub fn value(digits: &[u8], shift: usize) -> Nat {
    let mut total = Nat::zero();
    let mut lo = fib(2 + shift);
    let mut hi = fib(3 + shift);
    for &d in digits {
        if d > 0 {
            total += &lo * Nat::from(d as u32);
        }
        let next = &lo + &hi;
        lo = hi;
        hi = next;
    }
    total
}

/// Zeckendorf validity: digits in {0,1} with no two adjacent 1s.
/// Padding-invariant.
pub fn zeck_valid(digits: &[u8]) -> bool {
    zeck_check(digits).is_ok()
}

pub fn zeck_check(digits: &[u8]) -> Result<()> {
    let word = || format_digits(digits, false);
    for (i, &d) in digits.iter().enumerate() {
        if d > 1 {
            return Err(Error::InvalidWord {
                system: "Zeckendorf",
                word: word(),
                reason: format!("digit {d} at position {i} is outside {{0,1}}"),
            });
        }
    }
    for i in 0..digits.len().saturating_sub(1) {
        if digits[i] == 1 && digits[i + 1] == 1 {
            return Err(Error::InvalidWord {
                system: "Zeckendorf",
                word: word(),
                reason: format!(
                    "adjacent 1-digits at positions {i} and {} violate aᵢ·aᵢ₊₁ = 0",
                    i + 1
                ),
            });
        }
    }
    Ok(())
}

/// Chung-Graham validity: digits in {0,1,2}, zero at every odd position, and
/// between any two even positions holding 2 there is an even position
/// holding 0. Padding-invariant.
pub fn cg_valid(digits: &[u8]) -> bool {
    cg_check(digits).is_ok()
}

pub fn cg_check(digits: &[u8]) -> Result<()> {
    let word = || format_digits(digits, false);
    for (i, &d) in digits.iter().enumerate() {
        if d > 2 {
            return Err(Error::InvalidWord {
                system: "Chung-Graham",
                word: word(),
                reason: format!("digit {d} at position {i} is outside {{0,1,2}}"),
            });
        }
        if i % 2 == 1 && d != 0 {
            return Err(Error::InvalidWord {
                system: "Chung-Graham",
                word: word(),
                reason: format!("nonzero digit at odd position {i}"),
            });
        }
    }
    // scan even positions lsd-first; a 2 opens a block that must be closed
    // by an even 0 before the next 2
    let mut open: Option<usize> = None;
    for i in (0..digits.len()).step_by(2) {
        match digits[i] {
            0 => open = None,
            2 => {
                if let Some(j) = open {
                    return Err(Error::InvalidWord {
                        system: "Chung-Graham",
                        word: word(),
                        reason: format!(
                            "2-digits at even positions {j} and {i} with no even 0 between"
                        ),
                    });
                }
                open = Some(i);
            }
            _ => {}
        }
    }
    Ok(())
}

/// Strip trailing zero digits (canonical form; the empty word denotes 0).
pub fn canonical(digits: &[u8]) -> Vec<u8> {
    let mut v = digits.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// The unique canonical Zeckendorf word with the given value
/// (greedy: subtract the largest F_{i+2} ≤ remainder).
pub fn zeck_encode(n: &Nat) -> Vec<u8> {
    if n.is_zero() {
        return Vec::new();
    }
    // collect F_2.. up to n
    let mut fibs = vec![fib(2)];
    loop {
        let k = fibs.len();
        let next = if k == 1 {
            fib(3)
        } else {
            &fibs[k - 1] + &fibs[k - 2]
        };
        if &next > n {
            break;
        }
        fibs.push(next);
    }
    let mut digits = vec![0u8; fibs.len()];
    let mut rem = n.clone();
    for (i, f) in fibs.iter().enumerate().rev() {
        if f <= &rem {
            digits[i] = 1;
            rem -= f;
        }
    }
    debug_assert!(rem.is_zero());
    canonical(&digits)
}

/// Enumeration oracle for Chung-Graham encoding: table[n] is the unique
/// canonical valid CG word of value n, for all n ≤ max_n. Fails if the
/// enumeration finds a duplicate value or leaves a gap (it never does;
/// that is Theorem-level content the tests assert).
pub fn cg_table(max_n: u64) -> Result<Vec<Vec<u8>>> {
    let mut table: Vec<Option<Vec<u8>>> = vec![None; max_n as usize + 1];
    table[0] = Some(Vec::new());
    // digits at even positions 0,2,4,...; odd positions are always 0
    fn rec(
        slot: usize,
        open: bool,
        val: u64,
        word: &mut Vec<u8>,
        max_n: u64,
        table: &mut [Option<Vec<u8>>],
    ) -> Result<()> {
        let weight = fib_u64(2 * slot + 2);
        if weight > max_n {
            return Ok(());
        }
        for d in 0u8..=2 {
            if d == 2 && open {
                continue;
            }
            let nv = val + d as u64 * weight;
            if nv > max_n {
                break;
            }
            word.push(d);
            word.push(0);
            if d != 0 {
                let canon = &word[..2 * slot + 1];
                match &table[nv as usize] {
                    None => table[nv as usize] = Some(canon.to_vec()),
                    Some(prev) if prev.as_slice() == canon => {}
                    Some(prev) => {
                        return Err(Error::Synthesis(format!(
                            "CG enumeration found two words of value {nv}: {} and {}",
                            format_digits(prev, false),
                            format_digits(canon, false)
                        )))
                    }
                }
            }
            let next_open = match d {
                0 => false,
                2 => true,
                _ => open,
            };
            rec(slot + 1, next_open, nv, word, max_n, table)?;
            word.pop();
            word.pop();
        }
        Ok(())
    }
    let mut word = Vec::new();
    rec(0, false, 0, &mut word, max_n, &mut table)?;
    table
        .into_iter()
        .enumerate()
        .map(|(n, w)| {
            w.ok_or_else(|| Error::Synthesis(format!("CG enumeration left a gap at {n}")))
        })
        .collect()
}

/// Enumeration oracle for a single value; prefer [`cg_table`] for sweeps.
pub fn cg_encode_oracle(n: u64) -> Result<Vec<u8>> {
    Ok(cg_table(n)?.pop().unwrap())
}

/// Digitwise cgsplit map 0→(0,0), 1→(0,1), 2→(1,1), so that
/// value(v) + value(w) = value(u).
pub fn cg_split(u: &[u8]) -> Result<(Vec<u8>, Vec<u8>)> {
    let mut v = Vec::with_capacity(u.len());
    let mut w = Vec::with_capacity(u.len());
    for &d in u {
        let (a, b) = match d {
            0 => (0, 0),
            1 => (0, 1),
            2 => (1, 1),
            _ => return Err(Error::DigitOutOfAlphabet { digit: d, track: 0 }),
        };
        v.push(a);
        w.push(b);
    }
    Ok((v, w))
}

/// Exact integer square root with a proof-of-floor post-check.
pub fn isqrt(n: &Nat) -> Nat {
    let s = n.sqrt();
    let s1 = &s + Nat::one();
    assert!(&s * &s <= *n && *n < &s1 * &s1, "isqrt post-check failed");
    s
}

/// ⌊φn⌋ computed as ⌊(n + isqrt(5n²)) / 2⌋; exact because √(5n²) is
/// irrational for n ≥ 1.
pub fn phi_floor(n: &Nat) -> Nat {
    let five_n2 = Nat::from(5u32) * n * n;
    (n + isqrt(&five_n2)) / Nat::from(2u32)
}

/// Parse a digit string, lsd-first unless `msd` is set.
pub fn parse_digits(s: &str, msd: bool) -> Result<Vec<u8>> {
    let mut digits = Vec::with_capacity(s.len());
    for c in s.chars() {
        let d = c.to_digit(10).ok_or(Error::Parse {
            line: 1,
            msg: format!("'{c}' is not a digit"),
        })? as u8;
        digits.push(d);
    }
    if msd {
        digits.reverse();
    }
    Ok(digits)
}

/// Format a digit sequence, lsd-first unless `msd` is set.
pub fn format_digits(digits: &[u8], msd: bool) -> String {
    let iter: Box<dyn Iterator<Item = &u8>> = if msd {
        Box::new(digits.iter().rev())
    } else {
        Box::new(digits.iter())
    };
    iter.map(|d| char::from_digit(*d as u32, 10).unwrap())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> Nat {
        Nat::from(n)
    }

    #[test]
    fn fib_base_cases_and_values() {
        assert_eq!(fib(0), nat(0));
        assert_eq!(fib(1), nat(1));
        assert_eq!(fib(2), nat(1));
        assert_eq!(fib(7), nat(13));
    }

    #[test]
    fn fib_93_exceeds_i64_range() {
        // overflow guard: F_93 is the first Fibonacci number past 63 bits
        assert!(fib(92) < Nat::from(u64::MAX / 2));
        assert!(fib(93) > Nat::from(u64::MAX / 2));
        assert_eq!(fib(90), Nat::from(2_880_067_194_370_816_120u64));
        assert_eq!(fib_u64(90), 2_880_067_194_370_816_120);
    }

    #[test]
    fn value_examples() {
        // 17 = F_2 + F_4 + F_7
        assert_eq!(value(&parse_digits("101001", false).unwrap(), 0), nat(17));
        assert_eq!(value(&[], 0), nat(0));
        // 1·F_2 + 0·F_3 + 2·F_4 = 1 + 6
        assert_eq!(value(&[1, 0, 2], 0), nat(7));
    }

    #[test]
    fn zeck_encode_examples() {
        assert_eq!(format_digits(&zeck_encode(&nat(17)), false), "101001");
        assert!(zeck_encode(&nat(0)).is_empty());
        assert_eq!(format_digits(&zeck_encode(&nat(4)), false), "101");
    }

    #[test]
    fn zeck_encode_roundtrip_small() {
        for n in 0u64..2000 {
            let w = zeck_encode(&nat(n));
            assert!(zeck_valid(&w));
            assert_eq!(value(&w, 0), nat(n));
            assert!(w.last() != Some(&0));
        }
    }

    #[test]
    fn validity_examples() {
        assert!(!zeck_valid(&[1, 1]));
        assert!(cg_valid(&[2, 0, 1]));
        assert!(!cg_valid(&[2, 0, 2]));
        assert!(!cg_valid(&[0, 1, 0]));
        // single 2 with all other even digits ≤ 1 is fine
        assert!(cg_valid(&[2]));
        assert!(cg_valid(&[2, 0, 0, 0, 2, 0, 1])); // 0 at even position 2 between
    }

    #[test]
    fn cg_table_small_values() {
        let t = cg_table(10).unwrap();
        assert_eq!(t[0], Vec::<u8>::new());
        assert_eq!(format_digits(&t[5], false), "201");
        assert_eq!(format_digits(&t[8], false), "00001"); // F_6 = 8; "202" is invalid
    }

    #[test]
    fn cg_split_examples() {
        let (v, w) = cg_split(&[2, 0, 1]).unwrap();
        assert_eq!((v.as_slice(), w.as_slice()), (&[1u8, 0, 0][..], &[1u8, 0, 1][..]));
        assert_eq!(cg_split(&[]).unwrap(), (vec![], vec![]));
        let (v, w) = cg_split(&[1, 1, 1]).unwrap();
        assert_eq!((v.as_slice(), w.as_slice()), (&[0u8, 0, 0][..], &[1u8, 1, 1][..]));
    }

    #[test]
    fn cg_split_value_equation_exhaustive() {
        // all u over {0,1,2} of length ≤ 7: value(v)+value(w) = value(u)
        for len in 0..=7usize {
            for code in 0..3u32.pow(len as u32) {
                let mut c = code;
                let u: Vec<u8> = (0..len)
                    .map(|_| {
                        let d = (c % 3) as u8;
                        c /= 3;
                        d
                    })
                    .collect();
                let (v, w) = cg_split(&u).unwrap();
                assert_eq!(value(&v, 0) + value(&w, 0), value(&u, 0));
            }
        }
    }

    #[test]
    fn phi_floor_examples() {
        assert_eq!(phi_floor(&nat(0)), nat(0));
        assert_eq!(phi_floor(&nat(1)), nat(1));
        assert_eq!(phi_floor(&nat(2)), nat(3));
        assert_eq!(phi_floor(&nat(3)), nat(4));
        assert_eq!(phi_floor(&nat(10)), nat(16));
    }

    #[test]
    fn phi_floor_bounds_small() {
        for n in 0u64..5000 {
            let f = phi_floor(&nat(n));
            assert!(nat(n) <= f && f <= nat(2 * n.max(0)) || n == 0);
        }
    }

    #[test]
    fn msd_flag_reverses() {
        assert_eq!(parse_digits("100", true).unwrap(), vec![0, 0, 1]);
        assert_eq!(format_digits(&[0, 0, 1], true), "100");
    }
}
