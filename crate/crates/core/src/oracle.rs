//! Brute-force reference counts. Nothing here uses the closed forms or the
//! packed enumeration; it exists to check them.

use std::collections::BTreeSet;

use crate::sequences::{CanonicalSequence, Sign, SignSequence};

/// Per-`k` class counts of binary strings of length `n` (1 ≤ n ≤ 20):
/// rotation classes, rotation-and-reversal classes and aperiodic rotation
/// classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringCensus {
    pub necklaces: Vec<u64>,
    pub bracelets: Vec<u64>,
    pub lyndon: Vec<u64>,
}

fn rotations(word: &[bool]) -> impl Iterator<Item = Vec<bool>> + '_ {
    (0..word.len()).map(move |r| {
        let mut w = word.to_vec();
        w.rotate_left(r);
        w
    })
}

fn word(bits: u32, n: u32) -> Vec<bool> {
    (0..n).map(|i| bits >> i & 1 == 1).collect()
}

/// Each class is counted at its lexicographically least member.
pub fn string_census(n: u32) -> StringCensus {
    assert!((1..=20).contains(&n), "census length must be in 1..=20");
    let len = n as usize + 1;
    let mut census = StringCensus { necklaces: vec![0; len], bracelets: vec![0; len], lyndon: vec![0; len] };
    for bits in 0..(1u32 << n) {
        let w = word(bits, n);
        let k = bits.count_ones() as usize;
        let rots: Vec<Vec<bool>> = rotations(&w).collect();
        if rots.iter().all(|r| *r >= w) {
            census.necklaces[k] += 1;
            if rots.iter().filter(|r| **r == w).count() == 1 {
                census.lyndon[k] += 1;
            }
        }
        let reversed: Vec<bool> = w.iter().rev().copied().collect();
        if rots.iter().all(|r| *r >= w) && rotations(&reversed).all(|r| r >= w) {
            census.bracelets[k] += 1;
        }
    }
    census
}

/// Bracelets of even length `n` with `n/2` ones whose class contains the
/// complement of its members.
pub fn self_conjugate_bracelets(n: u32) -> u64 {
    assert!(n % 2 == 0 && (2..=20).contains(&n));
    let mut classes: BTreeSet<Vec<bool>> = BTreeSet::new();
    let mut fixed = 0;
    for bits in 0..(1u32 << n) {
        if bits.count_ones() != n / 2 {
            continue;
        }
        let w = word(bits, n);
        let least = |w: &[bool]| {
            let rev: Vec<bool> = w.iter().rev().copied().collect();
            rotations(w).chain(rotations(&rev).collect::<Vec<_>>()).min().unwrap()
        };
        let rep = least(&w);
        if classes.insert(rep.clone()) {
            let complement: Vec<bool> = w.iter().map(|b| !b).collect();
            if least(&complement) == rep {
                fixed += 1;
            }
        }
    }
    fixed
}

fn all_sequences(n: usize) -> impl Iterator<Item = SignSequence> {
    (0u64..(1 << n)).map(move |bits| {
        SignSequence::new((0..n).map(|i| if bits >> i & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect())
            .expect("n >= 3")
    })
}

/// Canonical forms of every valid sequence of length `n`, by scanning all
/// `2^n` sequences and canonicalising each one.
pub fn valid_classes(n: usize) -> BTreeSet<CanonicalSequence> {
    all_sequences(n).filter(|s| s.is_valid()).map(|s| s.canonicalize()).collect()
}

/// Canonical forms reachable from `(+1, +1, +1)` by exactly `n - 3`
/// extensions.
pub fn reachable_classes(n: usize) -> BTreeSet<CanonicalSequence> {
    let mut level: BTreeSet<CanonicalSequence> = [SignSequence::trihexaflexagon().canonicalize()].into();
    for _ in 3..n {
        let mut next = BTreeSet::new();
        for c in &level {
            for orbit_member in c.orbit() {
                for p in 1..=orbit_member.len() {
                    next.insert(orbit_member.extend(p).expect("in range").canonicalize());
                }
            }
        }
        level = next;
    }
    level
}

/// Sums taken by valid sequences of length `n`.
pub fn achieved_sums(n: usize) -> BTreeSet<i32> {
    all_sequences(n).filter(|s| s.is_valid()).map(|s| s.sum()).collect()
}
