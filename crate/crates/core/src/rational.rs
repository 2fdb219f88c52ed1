//! Exact arithmetic on the extended rationals `Q ∪ {∞}`, the vertex set of
//! every tessellation in this crate.
//!
//! A value is stored as a reduced fraction `num/den` with `den >= 0`;
//! infinity is canonically `1/0` and zero is `0/1`. The circle `RP^1` carries
//! the counterclockwise cyclic order `0 → 1 → ∞ → −1 → 0`, fixed once and for
//! all by the Cayley transform `μ(x) = (x−i)/(x+i)` (so `μ(0) = −1`,
//! `μ(1) = −i`, `μ(∞) = 1`, `μ(−1) = i`, and increasing cyclic order is
//! counterclockwise in the disc pictures).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::NumError;

/// A reduced extended rational `p/q ∈ Q ∪ {∞}`.
///
/// Invariants: `gcd(|num|, den) = 1`, `den >= 0`, `den = 0` only for the
/// canonical infinity `1/0`, zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtendedRational {
    num: BigInt,
    den: BigInt,
}

/// An integer lift `(num, den)` of an extended rational, not necessarily with
/// `den >= 0`. Mediant arithmetic is lift-sensitive at infinity (`1/0` vs
/// `-1/0`), so operations that care take lifts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift(pub BigInt, pub BigInt);

impl ExtendedRational {
    /// Reduces `num/den` to canonical form. `(0, 0)` is rejected; both
    /// `(1, 0)` and `(-1, 0)` yield the canonical infinity.
    pub fn reduce(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, NumError> {
        let (mut num, mut den) = (num.into(), den.into());
        if num.is_zero() && den.is_zero() {
            return Err(NumError::ZeroOverZero);
        }
        let g = gcd(&num, &den);
        num /= &g;
        den /= &g;
        if den.is_negative() || (den.is_zero() && num.is_negative()) {
            num = -num;
            den = -den;
        }
        Ok(Self { num, den })
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    /// Shorthand for a small fraction; panics on `(0, 0)`.
    pub fn new(num: i64, den: i64) -> Self {
        Self::reduce(num, den).expect("(0,0) is not an extended rational")
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn infinity() -> Self {
        Self {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    /// The canonical lift `(num, den)` with `den >= 0`.
    pub fn lift(&self) -> Lift {
        Lift(self.num.clone(), self.den.clone())
    }

    /// The lift `(-1, 0)` of infinity, for mediants on the negative side.
    pub fn neg_infinity_lift() -> Lift {
        Lift(-BigInt::one(), BigInt::zero())
    }

    /// `|num| + den`, the depth measure of the Stern-Brocot tree. The middle
    /// vertex of a Farey triangle is the one of maximal size.
    pub fn size(&self) -> BigInt {
        self.num.abs() + &self.den
    }

    /// Key realizing the counterclockwise cyclic order as a linear order
    /// starting at 0: nonnegative rationals, then ∞, then negatives.
    fn cyclic_class(&self) -> u8 {
        if self.is_infinity() {
            1
        } else if self.num.is_negative() {
            2
        } else {
            0
        }
    }
}

/// Total order realizing one full counterclockwise turn starting at 0:
/// `0 < 1/2 < 1 < 2 < ∞ < -2 < -1 < -1/2`.
impl Ord for ExtendedRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let (ca, cb) = (self.cyclic_class(), other.cyclic_class());
        if ca != cb {
            return ca.cmp(&cb);
        }
        if ca == 1 {
            return Ordering::Equal;
        }
        // den >= 0 on both sides, so cross-multiplication preserves order.
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// `true` iff `b` lies strictly between `a` and `c` counterclockwise, i.e.
/// the cyclic order of the triple is `(a, b, c)`.
///
/// Panics on repeated arguments; a cyclic order is only defined on distinct
/// triples.
pub fn cyclic_less(a: &ExtendedRational, b: &ExtendedRational, c: &ExtendedRational) -> bool {
    assert!(
        a != b && b != c && a != c,
        "cyclic_less requires pairwise distinct arguments"
    );
    (a < b && b < c) || (b < c && c < a) || (c < a && a < b)
}

/// `true` iff reduced `a/b` and `c/d` satisfy `|ad − bc| = 1`, i.e. the two
/// vertices span an edge of the Farey tessellation.
pub fn is_farey_edge(x: &ExtendedRational, y: &ExtendedRational) -> bool {
    assert!(x != y, "is_farey_edge requires distinct arguments");
    let det = x.num() * y.den() - y.num() * x.den();
    det.abs().is_one()
}

/// Mediant of two lifts. Rejects equal projective points.
pub fn mediant_of_lifts(x: &Lift, y: &Lift) -> Result<ExtendedRational, NumError> {
    let det = &x.0 * &y.1 - &y.0 * &x.1;
    if det.is_zero() {
        return Err(NumError::MediantOfEqualPoints);
    }
    ExtendedRational::reduce(&x.0 + &y.0, &x.1 + &y.1)
}

/// Mediant `(a+c)/(b+d)` of the canonical lifts (infinity as `1/0`).
pub fn mediant(
    x: &ExtendedRational,
    y: &ExtendedRational,
) -> Result<ExtendedRational, NumError> {
    mediant_of_lifts(&x.lift(), &y.lift())
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            write!(f, "inf")
        } else if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ExtendedRational {
    type Err = NumError;

    fn from_str(s: &str) -> Result<Self, NumError> {
        let s = s.trim();
        if s == "inf" || s == "-inf" {
            return Ok(Self::infinity());
        }
        let parse = |t: &str| {
            BigInt::from_str(t.trim()).map_err(|_| NumError::Parse {
                input: s.to_owned(),
            })
        };
        match s.split_once('/') {
            Some((n, d)) => Self::reduce(parse(n)?, parse(d)?),
            None => Ok(Self::from_int(parse(s)?)),
        }
    }
}

impl Serialize for ExtendedRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExtendedRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

/// Convenience constructor used pervasively in tests: `er(p, q)` = `p/q`.
pub fn er(num: i64, den: i64) -> ExtendedRational {
    ExtendedRational::new(num, den)
}

/// Exact point of the unit circle assigned to a vertex by the Cayley
/// transform `μ(p/q) = (p − qi)/(p + qi)`: returns the rational pair
/// `(cos, sin) = ((p²−q²)/(p²+q²), −2pq/(p²+q²))` as `f64`.
pub fn cayley_point(x: &ExtendedRational) -> (f64, f64) {
    let p = big_to_f64(x.num());
    let q = big_to_f64(x.den());
    let n = p * p + q * q;
    ((p * p - q * q) / n, -2.0 * p * q / n)
}

fn big_to_f64(b: &BigInt) -> f64 {
    // Good enough for rendering; vertices drawn at interesting depths have
    // numerators far below 2^53.
    let s = b.to_string();
    s.parse::<f64>().unwrap_or(f64::NAN)
}
