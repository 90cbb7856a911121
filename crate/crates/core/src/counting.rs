//! Closed-form counts: necklaces, bracelets, Lyndon words, self-conjugate
//! bracelets and the number of hexaflexagon classes.
//!
//! Everything is exact. Divisions that the formulas promise to be exact are
//! checked and reported as [`Error::InexactDivision`] rather than rounded.

use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact, arbitrary-precision count.
pub type ExactCount = BigUint;

/// Euler's totient.
pub fn totient(m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut phi = m;
    for (p, _) in factorize(m) {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

/// The Möbius function.
pub fn moebius(m: u64) -> Result<i8> {
    if m == 0 {
        return Err(Error::ZeroArgument);
    }
    let factors = factorize(m);
    if factors.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if factors.len() % 2 == 0 { 1 } else { -1 })
}

/// Prime factorisation by trial division, as `(prime, exponent)` pairs.
fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Divisors of `m` in ascending order.
pub(crate) fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Binomial coefficient `C(a, b)`, zero when `b < 0` or `b > a`.
pub fn binomial(a: u64, b: i64) -> ExactCount {
    if b < 0 || b as u64 > a {
        return BigUint::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = BigUint::one();
    for i in 0..b {
        // acc = C(a, i) here, so the division is exact.
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

fn check_args(n: u32, k: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if k > n {
        return Err(Error::OnesOutOfRange { n, k });
    }
    Ok(())
}

fn exact_div(value: BigUint, divisor: u64, context: &'static str) -> Result<BigUint> {
    let (q, r) = value.div_rem(&BigUint::from(divisor));
    if !r.is_zero() {
        return Err(Error::InexactDivision { context, divisor });
    }
    Ok(q)
}

fn exact_div_signed(value: BigInt, divisor: u64, context: &'static str) -> Result<BigUint> {
    let (q, r) = value.div_rem(&BigInt::from(divisor));
    if !r.is_zero() || q.sign() == BigSign::Minus {
        return Err(Error::InexactDivision { context, divisor });
    }
    Ok(q.magnitude().clone())
}

/// Number of binary necklaces (rotation classes) of length `n` with `k` ones.
pub fn necklace_count(n: u32, k: u32) -> Result<ExactCount> {
    check_args(n, k)?;
    let (n, k) = (u64::from(n), u64::from(k));
    let mut total = BigUint::zero();
    for j in divisors(n.gcd(&k)) {
        total += binomial(n / j, (k / j) as i64) * totient(j)?;
    }
    exact_div(total, n, "necklace count")
}

/// Number of aperiodic binary necklaces (Lyndon words) of length `n` with
/// `k` ones.
pub fn lyndon_count(n: u32, k: u32) -> Result<ExactCount> {
    check_args(n, k)?;
    let (n, k) = (u64::from(n), u64::from(k));
    let mut total = BigInt::zero();
    for j in divisors(n.gcd(&k)) {
        let term = BigInt::from(binomial(n / j, (k / j) as i64));
        match moebius(j)? {
            1 => total += term,
            -1 => total -= term,
            _ => {}
        }
    }
    exact_div_signed(total, n, "Lyndon count")
}

/// Which reflection term to use for `n` and `k` both even.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraceletBranch {
    /// `C(n/2, k/2) / 2`, the Burnside average over reflections.
    Corrected,
    /// `C(n/2 - 1, k/2) / 4 + C(n/2, k/2 - 1) / 4`, the commonly quoted
    /// expression. It is not integral, e.g. 3/2 at `(4, 2)`.
    AsPrinted,
}

/// Bracelet count as an exact rational, with the chosen even/even branch.
pub fn bracelet_count_with(n: u32, k: u32, branch: BraceletBranch) -> Result<BigRational> {
    let necklaces = BigInt::from(necklace_count(n, k)?);
    let half = |v: BigUint| BigRational::new(BigInt::from(v), BigInt::from(2));
    let quarter = |v: BigUint| BigRational::new(BigInt::from(v), BigInt::from(4));
    let (n, k) = (u64::from(n), i64::from(k));
    let reflections = match (n % 2 == 1, k % 2 == 1) {
        (true, true) => half(binomial((n - 1) / 2, (k - 1) / 2)),
        (true, false) => half(binomial((n - 1) / 2, k / 2)),
        (false, false) => match branch {
            BraceletBranch::Corrected => half(binomial(n / 2, k / 2)),
            BraceletBranch::AsPrinted => {
                quarter(binomial(n / 2 - 1, k / 2)) + quarter(binomial(n / 2, k / 2 - 1))
            }
        },
        (false, true) => half(binomial(n / 2 - 1, (k - 1) / 2)),
    };
    Ok(BigRational::new(necklaces, BigInt::from(2)) + reflections)
}

/// Number of binary bracelets (rotation and reversal classes) of length `n`
/// with `k` ones.
pub fn bracelet_count(n: u32, k: u32) -> Result<ExactCount> {
    let value = bracelet_count_with(n, k, BraceletBranch::Corrected)?;
    if !value.is_integer() {
        return Err(Error::InexactDivision { context: "bracelet count", divisor: 2 });
    }
    Ok(value.to_integer().magnitude().clone())
}

/// Number of bracelets of even length `n` with `n/2` ones that are mapped to
/// themselves by swapping ones and zeros.
///
/// Each such bracelet is two interleaved copies of a necklace of length
/// `n/2`; summing over the primitive period `l` with `ceil(k / 2l)`
/// interleavings per Lyndon word.
pub fn self_conjugate_count(n: u32) -> Result<ExactCount> {
    if n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let half = u64::from(n / 2);
    let mut total = BigUint::zero();
    for k in 1..=half {
        for l in divisors(half.gcd(&k)) {
            let words = lyndon_count((half / l) as u32, (k / l) as u32)?;
            total += words * k.div_ceil(2 * l);
        }
    }
    Ok(total)
}

/// Possible sums of a valid sign sequence of length `n`, ascending.
///
/// A step-6 progression symmetric about zero whose top is `n`, `n - 4` or
/// `n - 2` for `n` congruent to 0, 1 or 2 mod 3.
pub fn sum_set(n: u32) -> Result<Vec<i32>> {
    if n < 3 {
        return Err(Error::TooFewFaces(n as usize));
    }
    let top = max_sum(n);
    Ok((-top..=top).step_by(6).collect())
}

fn max_sum(n: u32) -> i32 {
    let n = n as i32;
    match n % 3 {
        0 => n,
        1 => n - 4,
        _ => n - 2,
    }
}

/// Membership in [`sum_set`] without materialising it.
pub(crate) fn in_sum_set(n: usize, sum: i32) -> bool {
    let top = max_sum(n as u32);
    (-top..=top).contains(&sum) && (sum + top) % 6 == 0
}

/// Number of hexaflexagon classes with `n` faces, up to cyclic shift,
/// reversal and inversion of the sign sequence.
pub fn hexaflexagon_count(n: u32) -> Result<ExactCount> {
    if n < 3 {
        return Err(Error::TooFewFaces(n as usize));
    }
    if n % 2 == 1 {
        let base = n.div_ceil(2) + 1;
        let mut total = BigUint::zero();
        for i in 0..=(n - 2) / 6 {
            total += bracelet_count(n, base + 3 * i)?;
        }
        return Ok(total);
    }
    // Twice the count: -B(n, n/2) + F(n) - 2 + 2 * sum of B(n, n/2 + 3i).
    let half = n / 2;
    let mut doubled = BigInt::from(self_conjugate_count(n)?) - BigInt::from(2);
    doubled -= BigInt::from(bracelet_count(n, half)?);
    for i in 0..=n / 6 {
        doubled += BigInt::from(bracelet_count(n, half + 3 * i)?) * 2;
    }
    exact_div_signed(doubled, 2, "hexaflexagon count")
}
