//! Classification families of nef bundles on the quadric, encoded as
//! resolutions `0 -> sub -> mid -> E -> coker -> 0` with rank-parametric
//! multiplicities, plus the engine that checks each family's numerics.
//!
//! Direct sums have empty `sub`. Multiplicities are affine in the rank `r`:
//! `int`, `r`, `r+int` or `r-int`.

mod cases;
mod verify;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::arith::{add, mul};
use crate::cohom::BundleNumerics;
use crate::ktheory::{four_term_quotient, line_class, scale, to_chern, KClass, TorsionDescriptor};
use crate::pic::BiDegree;
use crate::{Error, Result};

pub use cases::list_cases;
pub use verify::{verify_all, verify_case, verify_cases, Check, VerificationReport};

/// Which classification a family belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Nef bundles with `det E = O(2,2)`.
    Main22,
    /// Nef bundles with `det E = O(2,1)`.
    Quadric21,
    /// Nef bundles with a subsheaf `O(c1', b)` and no `O(c1', b+1)`, `b <= c1''`.
    HalfMax { c1: BiDegree, b: i64 },
    /// Nef bundles with a subsheaf `O(c1'-1, c1''-1)` but none of
    /// `O(c1'-1, c1'')`, `O(c1', c1''-1)`.
    NearMax { c1: BiDegree },
}

impl Theorem {
    pub fn c1(&self) -> BiDegree {
        match *self {
            Theorem::Main22 => BiDegree::new(2, 2),
            Theorem::Quadric21 => BiDegree::new(2, 1),
            Theorem::HalfMax { c1, .. } | Theorem::NearMax { c1 } => c1,
        }
    }

    pub fn key(&self) -> &'static str {
        match self {
            Theorem::Main22 => "main22",
            Theorem::Quadric21 => "quadric21",
            Theorem::HalfMax { .. } => "halfmax",
            Theorem::NearMax { .. } => "nearmax",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theorem::HalfMax { c1, b } => write!(f, "halfmax(c1={c1}, b={b})"),
            Theorem::NearMax { c1 } => write!(f, "nearmax(c1={c1})"),
            t => f.write_str(t.key()),
        }
    }
}

/// An affine multiplicity `r_coeff * r + offset` with `r_coeff` in `{0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Multiplicity {
    pub uses_rank: bool,
    pub offset: i64,
}

impl Multiplicity {
    pub const fn constant(n: i64) -> Self {
        Multiplicity { uses_rank: false, offset: n }
    }

    pub const fn rank_plus(n: i64) -> Self {
        Multiplicity { uses_rank: true, offset: n }
    }

    pub fn eval(self, r: i64) -> i64 {
        if self.uses_rank {
            add(r, self.offset)
        } else {
            self.offset
        }
    }

    /// Smallest `r` with a non-negative value, if the value depends on `r`.
    fn rank_floor(self) -> Option<i64> {
        self.uses_rank.then(|| -self.offset)
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.uses_rank, self.offset) {
            (false, n) => write!(f, "{n}"),
            (true, 0) => f.write_str("r"),
            (true, n) if n > 0 => write!(f, "r+{n}"),
            (true, n) => write!(f, "r{n}"),
        }
    }
}

impl FromStr for Multiplicity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseMultiplicity(s.to_string());
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('r') {
            let rest = rest.trim_start();
            if rest.is_empty() {
                return Ok(Multiplicity::rank_plus(0));
            }
            let (sign, digits) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => return Err(bad()),
            };
            let digits = digits.trim_start();
            if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let n: i64 = digits.parse().map_err(|_| bad())?;
            Ok(Multiplicity::rank_plus(mul(sign, n)))
        } else {
            t.parse::<i64>().map(Multiplicity::constant).map_err(|_| bad())
        }
    }
}

/// `O(degree)^mult` in a resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Term {
    pub degree: BiDegree,
    pub mult: Multiplicity,
}

impl Term {
    pub const fn new(degree: BiDegree, mult: Multiplicity) -> Self {
        Term { degree, mult }
    }

    fn swapped(self) -> Self {
        Term { degree: self.degree.swapped(), mult: self.mult }
    }
}

/// Three-valued flag for properties the catalog records but cannot compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriState::Yes => "yes",
            TriState::No => "no",
            TriState::Unknown => "unknown",
        })
    }
}

/// Which `E_2` page of the spectral sequence produces this family, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PageOrigin {
    C2Six,
    C2Seven,
    C2EightCurve,
    C2EightStructure,
}

impl PageOrigin {
    pub fn c2(self) -> i64 {
        match self {
            PageOrigin::C2Six => 6,
            PageOrigin::C2Seven => 7,
            PageOrigin::C2EightCurve | PageOrigin::C2EightStructure => 8,
        }
    }

    pub fn variant(self) -> Option<crate::bondal::EightVariant> {
        use crate::bondal::EightVariant;
        match self {
            PageOrigin::C2Six | PageOrigin::C2Seven => None,
            PageOrigin::C2EightCurve => Some(EightVariant::CurveTorsion),
            PageOrigin::C2EightStructure => Some(EightVariant::StructureSheaf),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseFlags {
    pub globally_generated: TriState,
    /// Nefness and existence of an example are asserted by the classification,
    /// never proven here.
    pub nef_asserted: bool,
    /// `h^1(E) = 0` and `Hom(O(1,0), E) = Hom(O(0,1), E) = 0` are asserted, so the
    /// `Ext^1` profile and the spectral sequence reconstruction apply.
    pub bondal_hypotheses: bool,
    pub page: Option<PageOrigin>,
    /// The family is an `(a,b) <-> (b,a)` image not displayed in the list.
    pub inferred_by_symmetry: bool,
}

/// One classification family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseSpec {
    pub id: String,
    pub theorem: Theorem,
    pub sub: Vec<Term>,
    pub mid: Vec<Term>,
    pub coker: Option<TorsionDescriptor>,
    pub min_rank: i64,
    pub expected_c2: i64,
    pub flags: CaseFlags,
    pub twin_of: Option<String>,
    pub notes: Vec<String>,
}

impl CaseSpec {
    pub fn c1(&self) -> BiDegree {
        self.theorem.c1()
    }

    /// Smallest positive rank making every multiplicity non-negative.
    pub fn syntactic_min_rank(sub: &[Term], mid: &[Term]) -> i64 {
        sub.iter().chain(mid).filter_map(|t| t.mult.rank_floor()).fold(1, i64::max)
    }

    /// `[mid] - [sub] + [coker]` at rank `r`, with no rank check.
    pub fn k_class_at(&self, r: i64) -> Result<KClass> {
        let sum =
            |terms: &[Term]| -> KClass { terms.iter().map(|t| scale(line_class(t.degree), t.mult.eval(r))).sum() };
        let coker = match self.coker {
            Some(t) => t.class()?,
            None => KClass::ZERO,
        };
        Ok(four_term_quotient(sum(&self.sub), sum(&self.mid), coker))
    }

    pub fn swapped(&self) -> CaseSpec {
        let swap = |terms: &[Term]| terms.iter().map(|t| t.swapped()).collect::<Vec<_>>();
        let coker = self.coker.map(|t| match t {
            TorsionDescriptor::CurveTorsion { support, twist_degree } => {
                TorsionDescriptor::CurveTorsion { support: support.swapped(), twist_degree }
            }
            other => other,
        });
        CaseSpec {
            id: alloc::format!("{}-swap", self.id),
            sub: swap(&self.sub),
            mid: swap(&self.mid),
            coker,
            flags: CaseFlags { inferred_by_symmetry: true, ..self.flags.clone() },
            twin_of: Some(self.id.clone()),
            ..self.clone()
        }
    }

    /// Whether swapping the rulings changes the family (as multisets of terms).
    pub fn is_asymmetric(&self) -> bool {
        let twin = self.swapped();
        !same_terms(&self.sub, &twin.sub) || !same_terms(&self.mid, &twin.mid) || self.coker != twin.coker
    }
}

fn same_terms(x: &[Term], y: &[Term]) -> bool {
    let mut x = x.to_vec();
    let mut y = y.to_vec();
    let key = |t: &Term| (t.degree, t.mult.uses_rank, t.mult.offset);
    x.sort_by_key(key);
    y.sort_by_key(key);
    x == y
}

impl fmt::Display for CaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn sum(f: &mut fmt::Formatter<'_>, terms: &[Term]) -> fmt::Result {
            if terms.is_empty() {
                return f.write_str("0");
            }
            for (i, t) in terms.iter().enumerate() {
                if i > 0 {
                    f.write_str(" + ")?;
                }
                if t.degree == BiDegree::ZERO {
                    f.write_str("O")?;
                } else {
                    write!(f, "O{}", t.degree)?;
                }
                if t.mult != Multiplicity::constant(1) {
                    write!(f, "^({})", t.mult)?;
                }
            }
            Ok(())
        }
        f.write_str("0 -> ")?;
        sum(f, &self.sub)?;
        f.write_str(" -> ")?;
        sum(f, &self.mid)?;
        f.write_str(" -> E")?;
        if let Some(t) = self.coker {
            write!(f, " -> {t}")?;
        }
        f.write_str(" -> 0")
    }
}

/// `(r, c1, c2)` of the family at rank `r`; `c2` is computed from the resolution.
pub fn case_numerics(c: &CaseSpec, r: i64) -> Result<BundleNumerics> {
    if r < c.min_rank {
        return Err(Error::BelowMinRank { case: c.id.clone(), rank: r, min_rank: c.min_rank });
    }
    to_chern(c.k_class_at(r)?)
}
