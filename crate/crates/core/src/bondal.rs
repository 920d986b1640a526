//! The spectral sequence `E_2^{p,q} = Tor_{-p}^A(Ext^q(G, F), G) => F`, carried
//! out in the Grothendieck group.
//!
//! Derived tensor with `G` sends the simples to shifted line bundles:
//!
//! | simple | `S_i (x)^L G`    |
//! |--------|------------------|
//! | `S_0`  | `O`              |
//! | `S_1`  | `O(-1,0)[1]`     |
//! | `S_2`  | `O(0,-1)[1]`     |
//! | `S_3`  | `O(-1,-1)[2]`    |
//!
//! and it is additive on composition series, so the class of `V (x)^L G` only
//! depends on the multiplicities of `V`. Differentials are not modelled; what
//! survives is a set of exact K-theory identities.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{add, sub};
use crate::cohom::{ext1_module_profile, BundleNumerics};
use crate::ktheory::{line_class, scale, KClass, TorsionDescriptor};
use crate::pic::BiDegree;
use crate::quiver::CompositionSeries;
use crate::{Error, Result};

/// A line bundle placed in homological degree `shift`, i.e. `O(degree)[shift]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShiftedLineClass {
    pub degree: BiDegree,
    pub shift: i64,
}

impl ShiftedLineClass {
    /// `(-1)^shift [O(degree)]`.
    pub fn class(self) -> KClass {
        let line = line_class(self.degree);
        if self.shift % 2 == 0 {
            line
        } else {
            -line
        }
    }
}

const DICTIONARY: [ShiftedLineClass; 4] = [
    ShiftedLineClass { degree: BiDegree::new(0, 0), shift: 0 },
    ShiftedLineClass { degree: BiDegree::new(-1, 0), shift: 1 },
    ShiftedLineClass { degree: BiDegree::new(0, -1), shift: 1 },
    ShiftedLineClass { degree: BiDegree::new(-1, -1), shift: 2 },
];

/// `S_i (x)^L_A G`.
pub fn s_tensor_g(i: usize) -> Result<ShiftedLineClass> {
    DICTIONARY.get(i).copied().ok_or(Error::IndexOutOfRange(i))
}

/// `[V (x)^L G] = d0 [O] - d1 [O(-1,0)] - d2 [O(0,-1)] + d3 [O(-1,-1)]`.
pub fn series_tensor_class(s: CompositionSeries) -> KClass {
    s.d.iter().zip(DICTIONARY).map(|(&m, entry)| scale(entry.class(), m)).sum()
}

/// Rebuilds `[E]` from `[Hom(G,E) (x)^L G] - [Ext^1(G,E) (x)^L G]` and checks it
/// against the class of `(r, (2,2), c2)`.
pub fn reconstruct(e: BundleNumerics) -> Result<KClass> {
    let profile = ext1_module_profile(e)?;
    let rebuilt = series_tensor_class(profile.hom) - series_tensor_class(profile.ext1);
    let expected = KClass::from_numerics(e);
    if rebuilt != expected {
        return Err(Error::Inconsistent {
            identity: "spectral sequence reconstruction",
            detail: format!("[Hom (x) G] - [Ext1 (x) G] = {rebuilt}, but [E] = {expected}"),
        });
    }
    Ok(rebuilt)
}

/// Which torsion term survives as `E_2^{-1,1}` when `c2 = 8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EightVariant {
    /// `E_2^{-2,1} = 0`, `E_2^{-1,1} = O_E(d)` on a `(2,2)` divisor, `deg d = 0`.
    CurveTorsion,
    /// `E_2^{-2,1} = O(-2,-2)`, `E_2^{-1,1} = O`.
    StructureSheaf,
}

/// How an `E_2` entry is presented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EntryShape {
    Zero,
    /// A direct sum of line bundles with multiplicities.
    Lines(Vec<(BiDegree, i64)>),
    Torsion(TorsionDescriptor),
}

impl fmt::Display for EntryShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntryShape::Zero => f.write_str("0"),
            EntryShape::Torsion(t) => write!(f, "{t}"),
            EntryShape::Lines(terms) => {
                for (i, (deg, m)) in terms.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    if *deg == BiDegree::ZERO {
                        f.write_str("O")?;
                    } else {
                        write!(f, "O{deg}")?;
                    }
                    if *m != 1 {
                        write!(f, "^{m}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct E2Entry {
    pub class: KClass,
    pub shape: EntryShape,
}

impl E2Entry {
    fn lines(terms: Vec<(BiDegree, i64)>) -> Self {
        let class = terms.iter().map(|&(deg, m)| scale(line_class(deg), m)).sum();
        E2Entry { class, shape: EntryShape::Lines(terms) }
    }

    fn torsion(t: TorsionDescriptor) -> Result<Self> {
        Ok(E2Entry { class: t.class()?, shape: EntryShape::Torsion(t) })
    }

    fn zero() -> Self {
        E2Entry { class: KClass::ZERO, shape: EntryShape::Zero }
    }
}

/// The non-zero part of the `E_2` page of a nef bundle with `c1 = (2,2)`,
/// `h^1(E) = 0` and no maps from `O(1,0)`, `O(0,1)`. Everything outside
/// `p in {-2,-1,0}`, `q in {0,1}` vanishes (`Ext^2(G, E) = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct E2Page {
    pub c2: i64,
    pub rank: i64,
    pub entries: BTreeMap<(i64, i64), E2Entry>,
}

impl E2Page {
    pub fn entry(&self, p: i64, q: i64) -> KClass {
        self.entries.get(&(p, q)).map_or(KClass::ZERO, |e| e.class)
    }

    /// `sum (-1)^(p+q) [E_2^{p,q}]`, which equals `[E]` whatever the differentials are.
    pub fn euler_sum(&self) -> KClass {
        self.entries.iter().map(|(&(p, q), e)| if (p + q) % 2 == 0 { e.class } else { -e.class }).sum()
    }

    /// `[E_3^{0,0}] = [O^(r+8-c2)] - [E_2^{-2,1}]`, the image of `E_2^{0,0}` after `d_2`.
    pub fn e3_00(&self) -> KClass {
        self.entry(0, 0) - self.entry(-2, 1)
    }

    /// `[E_2^{-2,1}] - (c2-4)[O(-1,-1)] + (c2-6)([O(-1,0)] + [O(0,-1)]) - [E_2^{-1,1}]`,
    /// which must vanish for the four-term sequence through `phi`.
    pub fn four_term_defect(&self) -> KClass {
        let m3 = sub(self.c2, 4);
        let m12 = sub(self.c2, 6);
        self.entry(-2, 1) - scale(line_class(BiDegree::new(-1, -1)), m3)
            + scale(line_class(BiDegree::new(-1, 0)) + line_class(BiDegree::new(0, -1)), m12)
            - self.entry(-1, 1)
    }

    /// Checks the four-term identity, `[E] = [E_3^{0,0}] + [E_2^{-1,1}]`, and that
    /// the abutment has the class of `(r, (2,2), c2)`.
    pub fn check(&self) -> Result<()> {
        let defect = self.four_term_defect();
        if !defect.is_zero() {
            return Err(Error::Inconsistent {
                identity: "four-term sequence of the E2 page",
                detail: format!("defect {defect}"),
            });
        }
        let expected = KClass::from_numerics(BundleNumerics::new(self.rank, BiDegree::new(2, 2), self.c2));
        let total = self.euler_sum();
        if total != expected || self.e3_00() + self.entry(-1, 1) != expected {
            return Err(Error::Inconsistent {
                identity: "E2 page convergence",
                detail: format!("page sums to {total}, expected {expected}"),
            });
        }
        Ok(())
    }
}

impl fmt::Display for E2Page {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((p, q), e) in &self.entries {
            writeln!(f, "E2^{{{p},{q}}} = {}  class {}", e.shape, e.class)?;
        }
        Ok(())
    }
}

/// The `E_2` page for `c2 in {6, 7, 8}` with the identifications that survive the
/// nefness analysis: `c2 = 6` gives `(O(-1,-1)^2, 0)`, `c2 = 7` gives
/// `(O(-2,-2), k(p))`, and `c2 = 8` gives one of the two [`EightVariant`]s.
pub fn gen_seq(c2: i64, rank: i64, variant: Option<EightVariant>) -> Result<E2Page> {
    let d = BiDegree::new;
    let (minus2, minus1) = match (c2, variant) {
        (6, None) => (E2Entry::lines(alloc::vec![(d(-1, -1), 2)]), E2Entry::zero()),
        (7, None) => (E2Entry::lines(alloc::vec![(d(-2, -2), 1)]), E2Entry::torsion(TorsionDescriptor::PointSheaf)?),
        (8, Some(EightVariant::CurveTorsion)) => {
            (E2Entry::zero(), E2Entry::torsion(TorsionDescriptor::CurveTorsion { support: d(2, 2), twist_degree: 0 })?)
        }
        (8, Some(EightVariant::StructureSheaf)) => {
            (E2Entry::lines(alloc::vec![(d(-2, -2), 1)]), E2Entry::torsion(TorsionDescriptor::StructureSheafFull)?)
        }
        (8, None) => return Err(Error::InvalidPage { c2, reason: "c2 = 8 needs a variant" }),
        (6 | 7, Some(_)) => return Err(Error::InvalidPage { c2, reason: "variants only exist for c2 = 8" }),
        (c, _) if c < 6 => {
            return Err(Error::Hypothesis(format!("c2 = {c2} is below 6; the Ext^1 profile requires c2 >= 6")))
        }
        _ => return Err(Error::InvalidPage { c2, reason: "c2 must be 6, 7 or 8" }),
    };
    let h0 = sub(add(rank, 8), c2);
    if rank < 1 || h0 < 0 {
        return Err(Error::InvalidParameters(format!("rank {rank} is not admissible for c2 = {c2}")));
    }
    let mut entries = BTreeMap::new();
    entries.insert((0, 0), E2Entry::lines(alloc::vec![(BiDegree::ZERO, h0)]));
    entries.insert((-2, 1), minus2);
    entries.insert((-1, 1), minus1);
    let page = E2Page { c2, rank, entries };
    page.check()?;
    Ok(page)
}
