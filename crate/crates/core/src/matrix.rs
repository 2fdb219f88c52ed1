//! `SL(2,Z)` matrices acting on `RP^1`, canonicalized as `PSL(2,Z)`
//! representatives.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::NumError;
use crate::rational::{ExtendedRational, Lift};

/// A matrix `[[a, b], [c, d]]` with `ad − bc = 1`, stored as the canonical
/// representative of its `PSL(2,Z)` class: `c > 0`, or `c = 0` and `d > 0`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[[BigIntSerde; 2]; 2]", into = "[[BigIntSerde; 2]; 2]")]
pub struct SL2ZMatrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

type BigIntSerde = String;

impl SL2ZMatrix {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self, NumError> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        if &a * &d - &b * &c != BigInt::one() {
            return Err(NumError::NotUnimodular {
                a: a.to_string(),
                b: b.to_string(),
                c: c.to_string(),
                d: d.to_string(),
            });
        }
        Ok(Self { a, b, c, d }.canonicalized())
    }

    fn canonicalized(mut self) -> Self {
        if self.c.is_negative() || (self.c.is_zero() && self.d.is_negative()) {
            self.a = -self.a;
            self.b = -self.b;
            self.c = -self.c;
            self.d = -self.d;
        }
        self
    }

    pub fn identity() -> Self {
        Self {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a.is_one() && self.d.is_one()
    }

    pub fn entries(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c, &self.d)
    }

    /// Builds the matrix with columns `u`, `v`; requires `det = ±1` and
    /// returns the PSL-canonical form of the determinant-corrected matrix.
    pub fn from_columns(u: &Lift, v: &Lift) -> Result<Self, NumError> {
        let det = &u.0 * &v.1 - &v.0 * &u.1;
        if det == BigInt::one() {
            Self::new(u.0.clone(), v.0.clone(), u.1.clone(), v.1.clone())
        } else if det == -BigInt::one() {
            Self::new(u.0.clone(), -v.0.clone(), u.1.clone(), -v.1.clone())
        } else {
            Err(NumError::NotUnimodular {
                a: u.0.to_string(),
                b: v.0.to_string(),
                c: u.1.to_string(),
                d: v.1.to_string(),
            })
        }
    }

    /// Möbius action `x ↦ (ax + b)/(cx + d)`, projectively.
    pub fn apply(&self, x: &ExtendedRational) -> ExtendedRational {
        let Lift(p, q) = x.lift();
        let num = &self.a * &p + &self.b * &q;
        let den = &self.c * &p + &self.d * &q;
        ExtendedRational::reduce(num, den).expect("unimodular matrix cannot collapse a point")
    }

    /// Action on a lift, without projectivization or sign normalization.
    pub fn apply_lift(&self, x: &Lift) -> Lift {
        Lift(
            &self.a * &x.0 + &self.b * &x.1,
            &self.c * &x.0 + &self.d * &x.1,
        )
    }

    /// `self ∘ other` (matrix product).
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
        .canonicalized()
    }

    pub fn inverse(&self) -> Self {
        Self {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        }
        .canonicalized()
    }
}

impl fmt::Debug for SL2ZMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for SL2ZMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl TryFrom<[[String; 2]; 2]> for SL2ZMatrix {
    type Error = String;

    fn try_from(m: [[String; 2]; 2]) -> Result<Self, String> {
        let parse = |s: &String| s.parse::<BigInt>().map_err(|e| e.to_string());
        SL2ZMatrix::new(
            parse(&m[0][0])?,
            parse(&m[0][1])?,
            parse(&m[1][0])?,
            parse(&m[1][1])?,
        )
        .map_err(|e| e.to_string())
    }
}

impl From<SL2ZMatrix> for [[String; 2]; 2] {
    fn from(m: SL2ZMatrix) -> Self {
        [
            [m.a.to_string(), m.b.to_string()],
            [m.c.to_string(), m.d.to_string()],
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::er;

    #[test]
    fn mobius_eval_examples() {
        let id = SL2ZMatrix::identity();
        assert_eq!(id.apply(&er(7, 3)), er(7, 3));
        let shift = SL2ZMatrix::new(1, 1, 0, 1).unwrap();
        assert_eq!(shift.apply(&er(1, 2)), er(3, 2));
        let s = SL2ZMatrix::new(0, -1, 1, 0).unwrap();
        assert_eq!(s.apply(&ExtendedRational::infinity()), er(0, 1));
    }

    #[test]
    fn psl_sign_canonical() {
        let m = SL2ZMatrix::new(-1, 0, 0, -1).unwrap();
        assert!(m.is_identity());
        let m = SL2ZMatrix::new(-1, -1, -1, -2).unwrap();
        let (a, _, c, _) = m.entries();
        assert!(c > &BigInt::from(0) || (c.is_zero() && a > &BigInt::from(0)));
    }

    #[test]
    fn compose_inverse() {
        let m = SL2ZMatrix::new(2, 1, 1, 1).unwrap();
        assert!(m.compose(&m.inverse()).is_identity());
        let n = SL2ZMatrix::new(1, -3, 0, 1).unwrap();
        let x = er(5, 7);
        assert_eq!(m.compose(&n).apply(&x), m.apply(&n.apply(&x)));
    }
}
