//! Cohomology of line bundles and Euler characteristics of bundles.
//!
//! Only line bundles get full cohomology vectors. For anything else the
//! calculus can certify `chi`, not the individual `h^q`.

use core::fmt;

use alloc::format;

use crate::arith::{add, mul, sub};
use crate::pic::BiDegree;
use crate::quiver::{self, CompositionSeries};
use crate::{Error, Result};

/// `(h^0, h^1, h^2)` of a coherent sheaf on the quadric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CohomologyVector {
    pub h0: i64,
    pub h1: i64,
    pub h2: i64,
}

impl CohomologyVector {
    pub fn euler_characteristic(&self) -> i64 {
        add(sub(self.h0, self.h1), self.h2)
    }

    /// `(h2, h1, h0)`; the Serre-dual vector.
    pub fn reversed(&self) -> Self {
        CohomologyVector { h0: self.h2, h1: self.h1, h2: self.h0 }
    }
}

impl fmt::Display for CohomologyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h0={} h1={} h2={}", self.h0, self.h1, self.h2)
    }
}

/// Rank and Chern classes `(r, c1, c2)` of a vector bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BundleNumerics {
    pub rank: i64,
    pub c1: BiDegree,
    pub c2: i64,
}

impl BundleNumerics {
    pub const fn new(rank: i64, c1: BiDegree, c2: i64) -> Self {
        BundleNumerics { rank, c1, c2 }
    }

    /// `0 <= c2 <= c1^2`, the numerical shadow of nefness used throughout.
    pub fn satisfies_nef_bound(&self) -> bool {
        self.c2 >= 0 && self.c2 <= self.c1.self_intersection()
    }
}

impl fmt::Display for BundleNumerics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank={} c1={} c2={}", self.rank, self.c1, self.c2)
    }
}

/// `(h^0, h^1)` of `O(d)` on `P^1`.
pub fn line_cohomology_p1(d: i64) -> (i64, i64) {
    let h0 = if d >= 0 { add(d, 1) } else { 0 };
    let h1 = if d <= -2 { sub(-1, d) } else { 0 };
    (h0, h1)
}

/// Kunneth: `h^q(O(a,b)) = sum_{i+j=q} h^i(O(a)) h^j(O(b))`.
pub fn cohomology_q2(x: BiDegree) -> CohomologyVector {
    let (a0, a1) = line_cohomology_p1(x.a);
    let (b0, b1) = line_cohomology_p1(x.b);
    CohomologyVector { h0: mul(a0, b0), h1: add(mul(a0, b1), mul(a1, b0)), h2: mul(a1, b1) }
}

/// Riemann-Roch for `E(p, q)` where `E` has rank `r`, `c1 = (c1', c1'')` and `c2`:
///
/// `chi = c1' c1'' - c2 + (q+1) c1' + (p+1) c1'' + r (p+1)(q+1)`.
pub fn euler_char(e: BundleNumerics, p: i64, q: i64) -> i64 {
    let (c1a, c1b) = (e.c1.a, e.c1.b);
    let p1 = add(p, 1);
    let q1 = add(q, 1);
    let mut chi = sub(mul(c1a, c1b), e.c2);
    chi = add(chi, mul(q1, c1a));
    chi = add(chi, mul(p1, c1b));
    add(chi, mul(e.rank, mul(p1, q1)))
}

/// Composition series of `Hom(G, E)` and `Ext^1(G, E)` for a nef bundle with
/// `c1 = (2,2)`, `h^1(E) = 0` and no maps from `O(1,0)` or `O(0,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ext1Profile {
    pub hom: CompositionSeries,
    pub ext1: CompositionSeries,
}

/// The `Hom`/`Ext^1` profile forced by Riemann-Roch and the vanishing of `Ext^2`.
///
/// The sheaf-theoretic hypotheses are the caller's responsibility; only the
/// numerical ones (`c1 = (2,2)`, `c2 >= 6`, non-negative `h^0`) are checked.
pub fn ext1_module_profile(e: BundleNumerics) -> Result<Ext1Profile> {
    if e.c1 != BiDegree::new(2, 2) {
        return Err(Error::Hypothesis(format!("the Ext^1 profile needs c1 = (2,2), got {}", e.c1)));
    }
    let (hom, ext1) = quiver::hom_ext1_series(e.rank, e.c2)?;
    Ok(Ext1Profile { hom, ext1 })
}
