use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

/// n1/d1 as an exact rational.
pub fn ratio(n1: i64, d1: i64) -> BigRational {
    BigRational::new(BigInt::from(n1), BigInt::from(d1))
}

pub fn ratio_u(n1: usize, d1: usize) -> BigRational {
    BigRational::new(BigInt::from(n1), BigInt::from(d1))
}

pub fn from_int(v: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// x^e for non-negative integer e.
pub fn pow(x: &BigRational, e: u32) -> BigRational {
    BigRational::new(x.numer().pow(e), x.denom().pow(e))
}

pub fn floor_to_usize(x: &BigRational) -> usize {
    x.floor().to_integer().to_usize().expect("floor fits usize")
}

pub fn ceil_to_usize(x: &BigRational) -> usize {
    x.ceil().to_integer().to_usize().expect("ceil fits usize")
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().expect("rational fits f64 range")
}

/// Exact e-th root of a non-negative rational, when one exists.
pub fn perfect_root(x: &BigRational, e: u32) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let num_root = x.numer().nth_root(e);
    let den_root = x.denom().nth_root(e);
    if &num_root.pow(e) == x.numer() && &den_root.pow(e) == x.denom() {
        Some(BigRational::new(num_root, den_root))
    } else {
        None
    }
}

/// floor(n · (1 − c · a^(1/e))) computed exactly, for rational c ≥ 0 and
/// rational a in (0, 1], integer e ≥ 1.
///
/// Uses the monotone equivalence t ≤ n(1 − c·a^(1/e)) ⟺ (n−t)^e ≥ (nc)^e · a,
/// which needs only rational arithmetic — no floating point can leak into a
/// certified comparison.
pub fn floor_linear_root_bound(n: usize, c: &BigRational, a: &BigRational, e: u32) -> usize {
    assert!(e >= 1);
    assert!(!c.is_negative());
    assert!(a > &BigRational::zero() && a <= &BigRational::one());
    let rhs = pow(&(from_int(n) * c), e) * a;
    let holds = |t: usize| -> bool {
        // t ≤ bound ⟺ (n − t)^e ≥ (nc)^e a, valid since both sides ≥ 0
        if t > n {
            return false;
        }
        pow(&from_int(n - t), e) >= rhs
    };
    // t = 0 always holds here because c·a^(1/e) ≤ 1 on our domain
    debug_assert!(holds(0));
    let (mut lo, mut hi) = (0usize, n + 1); // holds(lo), !holds(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if holds(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Nearest rational to x with denominator 2^bits, clamped into [0, 1).
pub fn dyadic_approx(x: f64, bits: u32) -> BigRational {
    let scale = (1u128 << bits) as f64;
    let num = (x * scale).round().max(0.0) as u128;
    let den = 1u128 << bits;
    let num = num.min(den - 1);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Round half-up to 4 decimals, returned as the scaled integer (value·10^4).
/// Input must be in [0, 1] up to float noise.
pub fn round4_scaled(x: f64) -> i64 {
    (x * 10_000.0).round() as i64
}

/// Round-half-up of (1 − c · a^(1/e)) to 4 decimals, as the scaled integer,
/// computed without floating point: s ≤ 10^4·x + 1/2 ⟺ c^e·a ≤ (1 − (2s−1)/(2·10^4))^e.
pub fn round4_scaled_one_minus_root(c: &BigRational, a: &BigRational, e: u32) -> i64 {
    assert!(e >= 1);
    assert!(!c.is_negative());
    assert!(a > &BigRational::zero() && a <= &BigRational::one());
    let lhs = pow(c, e) * a;
    assert!(
        lhs <= BigRational::one(),
        "1 − c·a^(1/e) must be non-negative"
    );
    let holds = |s: i64| -> bool {
        if s == 0 {
            return true;
        }
        let y = BigRational::one() - ratio(2 * s - 1, 20_000);
        if y.is_negative() {
            return false;
        }
        lhs <= pow(&y, e)
    };
    let (mut lo, mut hi) = (0i64, 10_001i64); // holds(lo), !holds(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if holds(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

pub fn format4_scaled(scaled: i64) -> String {
    format!("{}.{:04}", scaled / 10_000, scaled % 10_000)
}

/// Format a [0,1] coefficient rounded half-up to 4 decimals.
pub fn format4(x: f64) -> String {
    format4_scaled(round4_scaled(x))
}

pub fn big_rational_to_string(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
