//! Exact coefficient arithmetic: arbitrary-precision rationals and their
//! dual-number extension `a + b*t` with `t^2 = 0`.
//!
//! Everything downstream (relation checkers, boundary operators, state sums)
//! is generic over [`Ring`], so the same code runs over plain rationals and
//! over dual numbers. There is deliberately no floating-point path.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};

/// Exact rational scalar. Kept in lowest terms with a positive denominator
/// by the underlying representation.
pub type Scalar = BigRational;

/// Shorthand for an integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Shorthand for a rational scalar `p/q`. Panics when `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Commutative coefficient ring with exact arithmetic and a partial inverse.
///
/// `try_inv` returns `None` exactly when the element is not a unit: zero for
/// rationals, zero constant part for dual numbers.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn try_inv(&self) -> Option<Self>;

    /// Embedding of the ground field.
    fn from_scalar(s: Scalar) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_scalar(int(n))
    }
}

impl Ring for Scalar {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    fn from_scalar(s: Scalar) -> Self {
        s
    }
}

/// Dual number `a + b*t` over the rationals, with `t^2 = 0` exactly.
///
/// This is the coefficient ring used for first-order (infinitesimal)
/// deformations: computing modulo `t^2` is built into the multiplication.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DualScalar {
    /// Constant part `a`.
    pub a: Scalar,
    /// Coefficient `b` of the nilpotent generator `t`.
    pub b: Scalar,
}

impl DualScalar {
    pub fn new(a: Scalar, b: Scalar) -> Self {
        DualScalar { a, b }
    }

    /// The nilpotent generator `t`.
    pub fn t() -> Self {
        DualScalar::new(Scalar::zero(), Scalar::one())
    }

    pub fn const_part(&self) -> &Scalar {
        &self.a
    }

    pub fn t_part(&self) -> &Scalar {
        &self.b
    }
}

impl From<Scalar> for DualScalar {
    fn from(a: Scalar) -> Self {
        DualScalar::new(a, Scalar::zero())
    }
}

impl Add for DualScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        DualScalar::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for DualScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        DualScalar::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Mul for DualScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (a + bt)(c + dt) = ac + (ad + bc)t, t^2 = 0.
        let ac = self.a.clone() * rhs.a.clone();
        let ad_bc = self.a * rhs.b + self.b * rhs.a;
        DualScalar::new(ac, ad_bc)
    }
}

impl Neg for DualScalar {
    type Output = Self;
    fn neg(self) -> Self {
        DualScalar::new(-self.a, -self.b)
    }
}

impl Zero for DualScalar {
    fn zero() -> Self {
        DualScalar::new(Scalar::zero(), Scalar::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for DualScalar {
    fn one() -> Self {
        DualScalar::new(Scalar::one(), Scalar::zero())
    }
}

impl Ring for DualScalar {
    fn try_inv(&self) -> Option<Self> {
        // (a + bt)^-1 = a^-1 - a^-2 b t, defined iff a != 0.
        let ainv = self.a.try_inv()?;
        let minus = -(ainv.clone() * ainv.clone() * self.b.clone());
        Some(DualScalar::new(ainv, minus))
    }

    fn from_scalar(s: Scalar) -> Self {
        DualScalar::from(s)
    }
}

impl fmt::Display for DualScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}t", self.b);
        }
        if self.b >= Scalar::zero() {
            write!(f, "{}+{}t", self.a, self.b)
        } else {
            write!(f, "{}{}t", self.a, self.b)
        }
    }
}
