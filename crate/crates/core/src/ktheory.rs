//! Grothendieck-group bookkeeping on the quadric.
//!
//! `K_0(Q) = Z^4` is detected by rank, `c1 in Z^2` and `ch2`. We store `2 ch2`
//! so that every class stays integral, and only convert back to Chern classes
//! (via `ch2 = c1^2/2 - c2`) when a class is claimed to be an honest bundle.
//! Negative ranks are fine: alternating sums over resolutions and spectral
//! sequence pages routinely pass through virtual classes.

use core::fmt;
use core::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::arith::{add, mul, neg, sub};
use crate::cohom::BundleNumerics;
use crate::pic::{intersect, BiDegree};
use crate::{Error, Result};

/// A virtual coherent-sheaf class `(rank, c1, 2 ch2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct KClass {
    pub rank: i64,
    pub c1: BiDegree,
    pub ch2x2: i64,
}

impl KClass {
    pub const ZERO: KClass = KClass { rank: 0, c1: BiDegree::ZERO, ch2x2: 0 };

    pub const fn new(rank: i64, c1: BiDegree, ch2x2: i64) -> Self {
        KClass { rank, c1, ch2x2 }
    }

    /// Class of `O(x)`.
    pub fn line(x: BiDegree) -> Self {
        line_class(x)
    }

    /// Class of the skyscraper `k(p)`.
    pub const fn point() -> Self {
        KClass { rank: 0, c1: BiDegree::ZERO, ch2x2: 2 }
    }

    /// The class of a bundle with the given numerics.
    pub fn from_numerics(e: BundleNumerics) -> Self {
        KClass { rank: e.rank, c1: e.c1, ch2x2: sub(e.c1.self_intersection(), mul(2, e.c2)) }
    }

    pub fn scale(self, n: i64) -> Self {
        scale(self, n)
    }

    pub fn to_chern(self) -> Result<BundleNumerics> {
        to_chern(self)
    }

    /// `chi` by Riemann-Roch on the quadric: `rank + c1.(1,1) + ch2`.
    pub fn euler_characteristic(self) -> i64 {
        add(add(self.rank, add(self.c1.a, self.c1.b)), self.ch2x2 / 2)
    }

    pub fn is_zero(&self) -> bool {
        *self == KClass::ZERO
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(rank={}, c1={}, 2ch2={})", self.rank, self.c1, self.ch2x2)
    }
}

impl Add for KClass {
    type Output = KClass;
    fn add(self, rhs: KClass) -> KClass {
        KClass { rank: add(self.rank, rhs.rank), c1: self.c1 + rhs.c1, ch2x2: add(self.ch2x2, rhs.ch2x2) }
    }
}

impl AddAssign for KClass {
    fn add_assign(&mut self, rhs: KClass) {
        *self = *self + rhs;
    }
}

impl Sub for KClass {
    type Output = KClass;
    fn sub(self, rhs: KClass) -> KClass {
        self + (-rhs)
    }
}

impl SubAssign for KClass {
    fn sub_assign(&mut self, rhs: KClass) {
        *self = *self - rhs;
    }
}

impl Neg for KClass {
    type Output = KClass;
    fn neg(self) -> KClass {
        KClass { rank: neg(self.rank), c1: -self.c1, ch2x2: neg(self.ch2x2) }
    }
}

impl core::iter::Sum for KClass {
    fn sum<I: Iterator<Item = KClass>>(iter: I) -> KClass {
        iter.fold(KClass::ZERO, Add::add)
    }
}

pub fn line_class(x: BiDegree) -> KClass {
    KClass { rank: 1, c1: x, ch2x2: x.self_intersection() }
}

pub fn scale(k: KClass, n: i64) -> KClass {
    KClass { rank: mul(k.rank, n), c1: n * k.c1, ch2x2: mul(k.ch2x2, n) }
}

/// Inverts `ch2 = (c1^2 - 2 c2) / 2` for a class of positive rank.
pub fn to_chern(k: KClass) -> Result<BundleNumerics> {
    if k.rank < 1 {
        return Err(Error::VirtualClass { rank: k.rank });
    }
    let defect = sub(k.c1.self_intersection(), k.ch2x2);
    if defect % 2 != 0 {
        return Err(Error::MalformedClass { defect });
    }
    Ok(BundleNumerics::new(k.rank, k.c1, defect / 2))
}

/// Twist by a line bundle:
/// `c1 += r L`, `c2 += (r-1) c1.L + C(r,2) L^2`.
pub fn twist_chern(e: BundleNumerics, l: BiDegree) -> BundleNumerics {
    let r = e.rank;
    let binom = mul(r, sub(r, 1)) / 2;
    let c2 = add(e.c2, add(mul(sub(r, 1), intersect(e.c1, l)), mul(binom, l.self_intersection())));
    BundleNumerics::new(r, e.c1 + r * l, c2)
}

/// Quotient numerics for `0 -> sub -> mid -> Q -> 0` from the Whitney formula
/// `c(mid) = c(sub) c(Q)`.
pub fn ses_quotient_chern(sub_: BundleNumerics, mid: BundleNumerics) -> Result<BundleNumerics> {
    if mid.rank <= sub_.rank {
        return Err(Error::RankViolation { sub: sub_.rank, mid: mid.rank });
    }
    let c1q = mid.c1 - sub_.c1;
    let c2q = sub(sub(mid.c2, sub_.c2), intersect(sub_.c1, c1q));
    Ok(BundleNumerics::new(sub(mid.rank, sub_.rank), c1q, c2q))
}

/// The torsion-like sheaves that occur as cokernels and spectral sequence terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TorsionDescriptor {
    /// `k(p)`, a length-one skyscraper.
    PointSheaf,
    /// `O` itself, appearing as a cokernel.
    StructureSheafFull,
    /// A rank-one sheaf `O_D(d)` on an effective divisor `D`, twisted by a divisor
    /// of degree `twist_degree` on `D`.
    CurveTorsion { support: BiDegree, twist_degree: i64 },
}

impl TorsionDescriptor {
    pub fn class(self) -> Result<KClass> {
        torsion_class(self)
    }
}

impl fmt::Display for TorsionDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsionDescriptor::PointSheaf => f.write_str("k(p)"),
            TorsionDescriptor::StructureSheafFull => f.write_str("O"),
            TorsionDescriptor::CurveTorsion { support, twist_degree: 0 } => {
                write!(f, "O_E(d), E~{support}, deg d=0")
            }
            TorsionDescriptor::CurveTorsion { support, twist_degree } => {
                write!(f, "O_E(d), E~{support}, deg d={twist_degree}")
            }
        }
    }
}

/// `O_D = [O] - [O(-D)]`; a degree-`d` twist on the support adds `d` points.
pub fn torsion_class(t: TorsionDescriptor) -> Result<KClass> {
    match t {
        TorsionDescriptor::PointSheaf => Ok(KClass::point()),
        TorsionDescriptor::StructureSheafFull => Ok(line_class(BiDegree::ZERO)),
        TorsionDescriptor::CurveTorsion { support, twist_degree } => {
            if !support.is_effective() {
                return Err(Error::NonEffectiveSupport(support));
            }
            let curve = line_class(BiDegree::ZERO) - line_class(-support);
            Ok(curve + scale(KClass::point(), twist_degree))
        }
    }
}

/// `[E]` for `0 -> sub -> mid -> E -> coker -> 0`.
pub fn four_term_quotient(sub_: KClass, mid: KClass, coker: KClass) -> KClass {
    mid - sub_ + coker
}

/// Zero-dimensional subschemes whose ideal sheaves have short resolutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealSheafKind {
    /// `Z` empty, `I_Z = O`.
    Empty,
    /// Two points in general position, a complete intersection of two `(1,1)`
    /// divisors: `0 -> O(-2,-2) -> O(-1,-1)^2 -> I_Z -> 0`.
    TwoPointsGeneral,
    /// Complete intersection of a `(1,1)` and a `(2,1)` divisor:
    /// `0 -> O(-3,-2) -> O(-2,-1) + O(-1,-1) -> I_Z -> 0`.
    CompleteIntersection11And21,
}

impl IdealSheafKind {
    pub fn length(self) -> i64 {
        match self {
            IdealSheafKind::Empty => 0,
            IdealSheafKind::TwoPointsGeneral => 2,
            IdealSheafKind::CompleteIntersection11And21 => 3,
        }
    }
}

/// Class of `I_Z` from its resolution, checked against `[O] - length(Z) [pt]`.
pub fn ideal_sheaf_resolution_class(kind: IdealSheafKind) -> Result<KClass> {
    let d = BiDegree::new;
    let class = match kind {
        IdealSheafKind::Empty => line_class(BiDegree::ZERO),
        IdealSheafKind::TwoPointsGeneral => scale(line_class(d(-1, -1)), 2) - line_class(d(-2, -2)),
        IdealSheafKind::CompleteIntersection11And21 => {
            line_class(d(-2, -1)) + line_class(d(-1, -1)) - line_class(d(-3, -2))
        }
    };
    let expected = line_class(BiDegree::ZERO) - scale(KClass::point(), kind.length());
    if class != expected {
        return Err(Error::Inconsistent {
            identity: "ideal sheaf class",
            detail: alloc::format!("resolution gives {class}, expected {expected}"),
        });
    }
    Ok(class)
}

/// Upper bound `(c1(E) - L)^2` for `c2` of the quotient `F = E / L`; callers
/// check `0 <= c2(F^vv) + length(Q) <= bound`.
pub fn quotient_c2_bound(c1_e: BiDegree, l: BiDegree) -> i64 {
    let c1f = c1_e - l;
    c1f.self_intersection()
}
