//! Sign sequences packed into a `u64`, first entry in the most significant
//! of the low `n` bits, `1` meaning `-1`. Numeric order on the packed value
//! is lexicographic order with `+1` before `-1`.

use super::{Sign, SignSequence};
use crate::counting::in_sum_set;

/// Longest sequence that fits.
pub(crate) const MAX_LEN: usize = 63;

#[inline]
pub(crate) fn mask(n: usize) -> u64 {
    (1u64 << n) - 1
}

/// Packed counterpart of [`SignSequence::cyclic_shift`].
#[inline]
pub(crate) fn rotate(x: u64, r: usize, n: usize) -> u64 {
    if r == 0 {
        return x;
    }
    ((x << r) | (x >> (n - r))) & mask(n)
}

#[inline]
pub(crate) fn reverse(x: u64, n: usize) -> u64 {
    x.reverse_bits() >> (64 - n)
}

#[inline]
pub(crate) fn sum(x: u64, n: usize) -> i32 {
    n as i32 - 2 * x.count_ones() as i32
}

/// Bit `n - 1 - i` is entry `i`.
#[inline]
pub(crate) fn entry(x: u64, i: usize, n: usize) -> Sign {
    if x >> (n - 1 - i) & 1 == 1 {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

#[cfg(test)]
pub(crate) fn pack(s: &SignSequence) -> u64 {
    s.entries().iter().fold(0, |acc, &e| acc << 1 | u64::from(e == Sign::Minus))
}

pub(crate) fn unpack(x: u64, n: usize) -> SignSequence {
    SignSequence::new((0..n).map(|i| entry(x, i, n)).collect())
        .expect("packed sequences have at least 3 entries")
}

#[inline]
pub(crate) fn is_valid(x: u64, n: usize) -> bool {
    (x ^ rotate(x, 1, n)) != mask(n) && in_sum_set(n, sum(x, n))
}

/// Whether `x` is the representative of its class: non-negative sum and no
/// smaller image under shifts, reversal and (for zero sum) inversion.
#[inline]
pub(crate) fn is_canonical(x: u64, n: usize) -> bool {
    let s = sum(x, n);
    if s < 0 {
        return false;
    }
    let rev = reverse(x, n);
    for r in 0..n {
        if rotate(x, r, n) < x || rotate(rev, r, n) < x {
            return false;
        }
    }
    if s == 0 {
        let inv = !x & mask(n);
        let inv_rev = reverse(inv, n);
        for r in 0..n {
            if rotate(inv, r, n) < x || rotate(inv_rev, r, n) < x {
                return false;
            }
        }
    }
    true
}
