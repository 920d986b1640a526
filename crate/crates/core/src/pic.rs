//! The Picard lattice `Pic(P^1 x P^1) = Z^2`.
//!
//! A [`BiDegree`] `(a, b)` is the class of `O(a, b)`. The fiber classes are
//! `(1, 0)` and `(0, 1)`; the intersection form is hyperbolic,
//! `(a, b) . (a', b') = a b' + b a'`.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::arith;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BiDegree {
    pub a: i64,
    pub b: i64,
}

impl BiDegree {
    pub const ZERO: BiDegree = BiDegree { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        BiDegree { a, b }
    }

    /// The class with the two rulings exchanged.
    pub const fn swapped(self) -> Self {
        BiDegree { a: self.b, b: self.a }
    }

    pub fn intersect(self, other: BiDegree) -> i64 {
        intersect(self, other)
    }

    /// `self . self = 2ab`.
    pub fn self_intersection(self) -> i64 {
        intersect(self, self)
    }

    pub fn is_effective(self) -> bool {
        is_effective(self)
    }

    pub fn is_nef(self) -> bool {
        is_nef_divisor(self)
    }
}

impl From<(i64, i64)> for BiDegree {
    fn from((a, b): (i64, i64)) -> Self {
        BiDegree { a, b }
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl Add for BiDegree {
    type Output = BiDegree;
    fn add(self, rhs: BiDegree) -> BiDegree {
        BiDegree::new(arith::add(self.a, rhs.a), arith::add(self.b, rhs.b))
    }
}

impl AddAssign for BiDegree {
    fn add_assign(&mut self, rhs: BiDegree) {
        *self = *self + rhs;
    }
}

impl Sub for BiDegree {
    type Output = BiDegree;
    fn sub(self, rhs: BiDegree) -> BiDegree {
        BiDegree::new(arith::sub(self.a, rhs.a), arith::sub(self.b, rhs.b))
    }
}

impl SubAssign for BiDegree {
    fn sub_assign(&mut self, rhs: BiDegree) {
        *self = *self - rhs;
    }
}

impl Neg for BiDegree {
    type Output = BiDegree;
    fn neg(self) -> BiDegree {
        BiDegree::new(arith::neg(self.a), arith::neg(self.b))
    }
}

impl Mul<BiDegree> for i64 {
    type Output = BiDegree;
    fn mul(self, rhs: BiDegree) -> BiDegree {
        BiDegree::new(arith::mul(self, rhs.a), arith::mul(self, rhs.b))
    }
}

/// The intersection form `a_x b_y + b_x a_y`.
pub fn intersect(x: BiDegree, y: BiDegree) -> i64 {
    arith::add(arith::mul(x.a, y.b), arith::mul(x.b, y.a))
}

pub fn is_effective(x: BiDegree) -> bool {
    x.a >= 0 && x.b >= 0
}

/// On `P^1 x P^1` the nef cone equals the effective cone.
pub fn is_nef_divisor(x: BiDegree) -> bool {
    is_effective(x)
}
