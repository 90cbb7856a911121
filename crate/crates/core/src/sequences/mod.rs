//! Sign sequences and their equivalence classes.
//!
//! A sign sequence `(a_1, ..., a_n)` with `a_i = ±1` is read cyclically.
//! Two sequences describe the same hexaflexagon when they differ by a cyclic
//! shift, a reversal, or negation of every entry (inversion). The
//! representative of a class is the lexicographically least member, with
//! `+1` ordered before `-1`, among those with non-negative sum.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use crate::counting::in_sum_set;
use crate::{Error, Result};

pub(crate) mod enumerate;
pub(crate) mod packed;

pub use enumerate::{enumerate_classes, enumerate_classes_with, ClassRecord, EnumerateOptions};

/// Default upper bound on `n` for exhaustive enumeration.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 24;

/// One entry of a sign sequence. `Plus` sorts before `Minus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::BadSignValue(other)),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A sign sequence of length at least 3.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignSequence {
    entries: Vec<Sign>,
}

impl SignSequence {
    pub fn new(entries: Vec<Sign>) -> Result<Self> {
        if entries.len() < 3 {
            return Err(Error::TooFewFaces(entries.len()));
        }
        Ok(SignSequence { entries })
    }

    pub fn from_values(values: &[i64]) -> Result<Self> {
        let entries = values.iter().map(|&v| Sign::from_value(v)).collect::<Result<_>>()?;
        Self::new(entries)
    }

    /// `(+1, +1, +1)`, the three-face base case.
    pub fn trihexaflexagon() -> Self {
        SignSequence { entries: vec![Sign::Plus; 3] }
    }

    pub fn entries(&self) -> &[Sign] {
        &self.entries
    }

    pub fn values(&self) -> Vec<i32> {
        self.entries.iter().map(|s| s.value()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> i32 {
        self.entries.iter().map(|s| s.value()).sum()
    }

    /// Rotates left by `offset`: entry `i` of the result is entry
    /// `i + offset (mod n)` of `self`.
    pub fn cyclic_shift(&self, offset: isize) -> Self {
        let n = self.len();
        let r = offset.rem_euclid(n as isize) as usize;
        let mut entries = self.entries.clone();
        entries.rotate_left(r);
        SignSequence { entries }
    }

    pub fn reverse(&self) -> Self {
        SignSequence { entries: self.entries.iter().rev().copied().collect() }
    }

    pub fn invert(&self) -> Self {
        SignSequence { entries: self.entries.iter().map(|&s| -s).collect() }
    }

    /// All `4n` images under shifts, reversal and inversion, with repeats.
    pub fn orbit(&self) -> impl Iterator<Item = SignSequence> + '_ {
        let n = self.len() as isize;
        let bases = [self.clone(), self.reverse(), self.invert(), self.reverse().invert()];
        bases.into_iter().flat_map(move |b| (0..n).map(move |r| b.cyclic_shift(r)))
    }

    pub fn canonicalize(&self) -> CanonicalSequence {
        let best = self
            .orbit()
            .filter(|s| s.sum() >= 0)
            .min()
            .expect("an orbit always contains a member with non-negative sum");
        CanonicalSequence(best)
    }

    pub fn is_equivalent(&self, other: &SignSequence) -> bool {
        self.len() == other.len() && self.canonicalize() == other.canonicalize()
    }

    /// Whether some cyclically adjacent pair of entries is equal.
    pub fn has_equal_neighbours(&self) -> bool {
        let n = self.len();
        (0..n).any(|i| self.entries[i] == self.entries[(i + 1) % n])
    }

    /// The sequence is reachable from the trihexaflexagon by extensions (up
    /// to equivalence) iff it has an equal adjacent pair and its sum is one
    /// of [`crate::sum_set`].
    pub fn is_valid(&self) -> bool {
        self.has_equal_neighbours() && in_sum_set(self.len(), self.sum())
    }

    /// Like [`is_valid`](Self::is_valid) but explains a failure.
    pub fn validate(&self) -> Result<()> {
        let reason = if !self.has_equal_neighbours() {
            "it alternates in sign, so it has no pair of equal adjacent entries and cannot be \
             obtained from the trihexaflexagon by extensions"
                .to_string()
        } else if !in_sum_set(self.len(), self.sum()) {
            let allowed = crate::sum_set(self.len() as u32)?;
            format!(
                "its sum {} is not reachable by extensions at length {} (allowed sums: {:?})",
                self.sum(),
                self.len(),
                allowed
            )
        } else {
            return Ok(());
        };
        Err(Error::InvalidSequence { signs: self.to_string(), reason })
    }

    /// Adds a face: entry `position` (1-based) is replaced by two copies of
    /// its negation.
    pub fn extend(&self, position: usize) -> Result<Self> {
        let n = self.len();
        if position == 0 || position > n {
            return Err(Error::PositionOutOfRange { position, len: n });
        }
        let i = position - 1;
        let flipped = -self.entries[i];
        let mut entries = Vec::with_capacity(n + 1);
        entries.extend_from_slice(&self.entries[..i]);
        entries.push(flipped);
        entries.push(flipped);
        entries.extend_from_slice(&self.entries[i + 1..]);
        Ok(SignSequence { entries })
    }

    /// Removes a face: the equal entries at cyclic positions `position` and
    /// `position + 1` are contracted to one negated entry.
    ///
    /// For `position = n` the pair wraps around; the contracted entry is
    /// then placed first.
    pub fn reduce(&self, position: usize) -> Result<Self> {
        let n = self.len();
        if position == 0 || position > n {
            return Err(Error::PositionOutOfRange { position, len: n });
        }
        let i = position - 1;
        let j = (i + 1) % n;
        if self.entries[i] != self.entries[j] {
            return Err(Error::UnequalPair { position, next: j + 1 });
        }
        if n == 3 {
            return Err(Error::CannotReduceBase);
        }
        let merged = -self.entries[i];
        let entries = if j == 0 {
            std::iter::once(merged).chain(self.entries[1..n - 1].iter().copied()).collect()
        } else {
            let mut e = Vec::with_capacity(n - 1);
            e.extend_from_slice(&self.entries[..i]);
            e.push(merged);
            e.extend_from_slice(&self.entries[j + 1..]);
            e
        };
        Ok(SignSequence { entries })
    }

    /// Extension positions that rebuild this sequence, up to equivalence,
    /// from `(+1, +1, +1)`.
    ///
    /// The sequence is contracted one face at a time down to length 3. At
    /// each step the rightmost non-wrapping equal pair whose contraction is
    /// still valid is taken, falling back to the pair that wraps around.
    /// The recorded positions are then re-expressed against the forward
    /// replay, which reproduces the input up to a rotation and possibly an
    /// inversion.
    pub fn reduction_history(&self) -> Result<ExtensionHistory> {
        self.validate()?;

        // Downward chain: (sequence, index of the entry in the shorter
        // sequence that expands back into the contracted pair).
        let mut chain: Vec<(SignSequence, usize)> = Vec::new();
        let mut current = self.clone();
        while current.len() > 3 {
            let m = current.len();
            let mut found = None;
            for position in (1..=m).rev().cycle().skip(1).take(m) {
                // Visits m-1, m-2, ..., 1 and finally the wrapping pair m.
                if let Ok(shorter) = current.reduce(position) {
                    if shorter.is_valid() {
                        let expands = if position == m { 0 } else { position - 1 };
                        found = Some((shorter, expands));
                        break;
                    }
                }
            }
            let (shorter, expands) = found.ok_or_else(|| Error::InvalidSequence {
                signs: current.to_string(),
                reason: "no valid contraction exists".into(),
            })?;
            chain.push((current, expands));
            current = shorter;
        }
        let inverted = current.entries[0] == Sign::Minus;

        // Forward replay, tracking the rotation between the replayed sequence
        // and the chain's sequence at each length.
        let mut replayed = SignSequence::trihexaflexagon();
        let mut offset = 0usize;
        let mut steps = Vec::with_capacity(chain.len());
        for (target, expands) in chain.into_iter().rev() {
            let shorter_len = replayed.len();
            let q = (expands + shorter_len - offset) % shorter_len;
            replayed = replayed.extend(q + 1)?;
            steps.push(q + 1);
            offset = rotation_between(&replayed, &target, inverted)
                .expect("an extension of a rotation is a rotation of the extension");
        }
        Ok(ExtensionHistory { steps })
    }
}

/// Smallest `r` with `a[i] = ±b[(i + r) mod n]` for all `i`, the sign being
/// `-` when `inverted`.
fn rotation_between(a: &SignSequence, b: &SignSequence, inverted: bool) -> Option<usize> {
    let n = a.len();
    let target = if inverted { b.invert() } else { b.clone() };
    (0..n).find(|&r| (0..n).all(|i| a.entries[i] == target.entries[(i + r) % n]))
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.entries {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

/// Accepts `"++-"` style text or comma-separated `1`/`-1` values.
impl FromStr for SignSequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::ParseSigns(text.to_string());
        if text.contains(',') {
            let values = text
                .split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            return Self::from_values(&values).map_err(|e| match e {
                Error::BadSignValue(_) => bad(),
                other => other,
            });
        }
        let entries = text
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

/// The distinguished representative of an equivalence class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalSequence(SignSequence);

impl CanonicalSequence {
    pub fn as_sequence(&self) -> &SignSequence {
        &self.0
    }

    pub fn into_inner(self) -> SignSequence {
        self.0
    }
}

impl std::ops::Deref for CanonicalSequence {
    type Target = SignSequence;

    fn deref(&self) -> &SignSequence {
        &self.0
    }
}

impl fmt::Display for CanonicalSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// 1-based extension positions applied in order to `(+1, +1, +1)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExtensionHistory {
    steps: Vec<usize>,
}

impl ExtensionHistory {
    /// Checks that step `t` (0-based) lies in `1..=3 + t`.
    pub fn new(steps: Vec<usize>) -> Result<Self> {
        for (t, &p) in steps.iter().enumerate() {
            if p == 0 || p > 3 + t {
                return Err(Error::PositionOutOfRange { position: p, len: 3 + t });
            }
        }
        Ok(ExtensionHistory { steps })
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Final length after replay.
    pub fn faces(&self) -> usize {
        3 + self.steps.len()
    }

    pub fn replay(&self) -> SignSequence {
        self.steps.iter().fold(SignSequence::trihexaflexagon(), |s, &p| {
            s.extend(p).expect("positions were checked on construction")
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(v: &[i64]) -> SignSequence {
        SignSequence::from_values(v).unwrap()
    }

    #[test]
    fn shifts_reversal_inversion() {
        let s = seq(&[1, 1, -1]);
        assert_eq!(s.cyclic_shift(1), seq(&[1, -1, 1]));
        assert_eq!(s.cyclic_shift(0), s);
        assert_eq!(s.cyclic_shift(-1), seq(&[-1, 1, 1]));
        assert_eq!(seq(&[1, 1, -1, -1]).cyclic_shift(2), seq(&[-1, -1, 1, 1]));
        assert_eq!(s.reverse(), seq(&[-1, 1, 1]));
        assert_eq!(seq(&[1, 1, 1]).invert(), seq(&[-1, -1, -1]));
        let alt = seq(&[1, -1, 1, -1]);
        assert_eq!(alt.invert().invert(), alt);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(SignSequence::from_values(&[1, 1]), Err(Error::TooFewFaces(2)));
        assert_eq!(SignSequence::from_values(&[1, 0, 1]), Err(Error::BadSignValue(0)));
        assert!("++x".parse::<SignSequence>().is_err());
        assert!("1,2,1".parse::<SignSequence>().is_err());
        assert_eq!("+-+".parse::<SignSequence>().unwrap(), seq(&[1, -1, 1]));
        assert_eq!("1, -1, 1".parse::<SignSequence>().unwrap(), seq(&[1, -1, 1]));
        assert_eq!(seq(&[1, -1, -1, 1]).to_string(), "+--+");
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(seq(&[-1, -1, -1]).canonicalize().as_sequence(), &seq(&[1, 1, 1]));
        assert_eq!(seq(&[-1, 1, 1, -1]).canonicalize().as_sequence(), &seq(&[1, 1, -1, -1]));
        assert_eq!(
            seq(&[1, -1, 1, 1, 1, 1, -1]).canonicalize().as_sequence(),
            &seq(&[1, 1, 1, 1, -1, 1, -1])
        );
    }

    #[test]
    fn extend_examples() {
        assert_eq!(seq(&[1, 1, 1]).extend(3).unwrap(), seq(&[1, 1, -1, -1]));
        let five = seq(&[1, 1, -1, -1]).extend(4).unwrap();
        assert_eq!(five, seq(&[1, 1, -1, 1, 1]));
        assert_eq!(five.canonicalize().as_sequence(), &seq(&[1, 1, 1, 1, -1]));
        assert_eq!(
            seq(&[1, 1, 1]).extend(4),
            Err(Error::PositionOutOfRange { position: 4, len: 3 })
        );
        assert!(seq(&[1, 1, 1]).extend(0).is_err());
    }

    #[test]
    fn reduce_examples() {
        let tetra = seq(&[1, 1, -1, -1]);
        assert_eq!(tetra.reduce(3).unwrap(), seq(&[1, 1, 1]));
        assert_eq!(tetra.reduce(1).unwrap(), seq(&[-1, -1, -1]));
        assert_eq!(tetra.reduce(2), Err(Error::UnequalPair { position: 2, next: 3 }));
        // Wrapping pair: entries 4 and 1 of (-1, 1, 1, -1).
        assert_eq!(seq(&[-1, 1, 1, -1]).reduce(4).unwrap(), seq(&[1, 1, 1]));
        assert_eq!(seq(&[1, 1, 1]).reduce(1), Err(Error::CannotReduceBase));
        let alt = seq(&[1, -1, 1, -1]);
        for i in 1..=4 {
            assert!(matches!(alt.reduce(i), Err(Error::UnequalPair { .. })));
        }
        assert!(tetra.reduce(5).is_err());
    }

    #[test]
    fn validity_examples() {
        assert!(seq(&[1, 1, 1, 1, -1, 1, -1]).is_valid());
        assert!(!seq(&[1, -1, 1, -1, 1, -1]).is_valid());
        assert!(seq(&[1, 1, 1]).is_valid());
        assert!(!seq(&[1, 1, 1, 1]).is_valid());
        let err = seq(&[1, -1, 1, -1, 1, -1]).validate().unwrap_err();
        assert!(err.to_string().contains("alternates"));
        let err = seq(&[1, 1, 1, 1]).validate().unwrap_err();
        assert!(err.to_string().contains("sum 4"));
    }

    #[test]
    fn history_examples() {
        let h = seq(&[1, 1, -1, -1]).reduction_history().unwrap();
        assert_eq!(h.steps(), &[3]);
        assert!(seq(&[1, 1, 1]).reduction_history().unwrap().is_empty());
        let h = seq(&[1; 6]).reduction_history().unwrap();
        assert_eq!(h.len(), 3);
        assert_eq!(h.replay(), seq(&[1; 6]));
        assert!(seq(&[1, -1, 1, -1]).reduction_history().is_err());
    }

    #[test]
    fn history_bounds() {
        assert!(ExtensionHistory::new(vec![3, 4, 5]).is_ok());
        assert_eq!(
            ExtensionHistory::new(vec![3, 5]),
            Err(Error::PositionOutOfRange { position: 5, len: 4 })
        );
        assert!(ExtensionHistory::new(vec![0]).is_err());
        assert_eq!(ExtensionHistory::new(vec![3, 4]).unwrap().replay(), seq(&[1, 1, -1, 1, 1]));
    }

    #[test]
    fn history_replays_every_valid_class() {
        for n in 3..=12usize {
            for bits in 0u32..(1 << n) {
                let s = SignSequence::new(
                    (0..n).map(|i| if bits >> i & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect(),
                )
                .unwrap();
                if !s.is_valid() {
                    continue;
                }
                let h = s.reduction_history().unwrap();
                assert_eq!(h.faces(), n);
                let r = h.replay();
                // Rotation and inversion only; no reversal is needed.
                let matches = (0..n as isize)
                    .any(|k| r == s.cyclic_shift(k) || r == s.cyclic_shift(k).invert());
                assert!(matches, "{s} replays to {r}");
            }
        }
    }

    fn arb_sequence(max: usize) -> impl Strategy<Value = SignSequence> {
        proptest::collection::vec(prop_oneof![Just(Sign::Plus), Just(Sign::Minus)], 3..=max)
            .prop_map(|v| SignSequence::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn canonical_form_is_orbit_invariant(s in arb_sequence(12), r in 0isize..12, rev: bool, inv: bool) {
            let mut g = s.cyclic_shift(r);
            if rev { g = g.reverse(); }
            if inv { g = g.invert(); }
            prop_assert_eq!(g.canonicalize(), s.canonicalize());
        }

        #[test]
        fn canonicalize_is_idempotent(s in arb_sequence(16)) {
            let c = s.canonicalize();
            prop_assert!(c.sum() >= 0);
            prop_assert_eq!(c.as_sequence().canonicalize(), c.clone());
        }

        #[test]
        fn extension_changes_sum_by_three(s in arb_sequence(12), p in 0usize..12) {
            let position = p % s.len() + 1;
            let e = s.extend(position).unwrap();
            prop_assert_eq!(e.len(), s.len() + 1);
            prop_assert_eq!(e.sum(), s.sum() - 3 * s.entries()[position - 1].value());
            prop_assert_eq!(e.reduce(position).unwrap(), s.clone());
            if s.is_valid() {
                prop_assert!(e.is_valid());
            }
        }
    }
}
