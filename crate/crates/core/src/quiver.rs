//! The tilting algebra `A = End(G)` for `G = O + O(1,0) + O(0,1) + O(1,1)`.
//!
//! `A` is the path algebra of the quiver with vertices `0..=3` (one per summand
//! `G_i`), two arrows `0 -> 1`, two `0 -> 2`, two `1 -> 3`, two `2 -> 3`, and the
//! commuting-square relations of `P^1 x P^1`. Nothing downstream multiplies
//! arrows, so only the dimensions `dim Hom(G_i, G_j)` are materialized.
//!
//! Right `A`-modules are tracked by their composition series, i.e. by their
//! class in the Grothendieck group of `mod A`: `d_i = dim V e_i`.

use core::fmt;
use core::ops::{Add, AddAssign};

use alloc::format;

use crate::arith::{add, mul, sub};
use crate::cohom::{cohomology_q2, CohomologyVector};
use crate::pic::BiDegree;
use crate::{Error, Result};

/// Degrees of the collection, in order.
pub const COLLECTION: [BiDegree; 4] =
    [BiDegree::new(0, 0), BiDegree::new(1, 0), BiDegree::new(0, 1), BiDegree::new(1, 1)];

/// The idempotent `e_i`: projection onto `G_i` followed by inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Idempotent(usize);

impl Idempotent {
    pub fn vertex(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalAlgebra {
    /// `hom_dims[i][j] = dim Hom(G_i, G_j) = h^0(G_j - G_i)`.
    pub hom_dims: [[i64; 4]; 4],
    pub idempotents: [Idempotent; 4],
}

impl ExceptionalAlgebra {
    pub fn dimension(&self) -> i64 {
        self.hom_dims.iter().flatten().fold(0, |acc, &x| add(acc, x))
    }

    pub fn idempotent(&self, i: usize) -> Result<Idempotent> {
        self.idempotents.get(i).copied().ok_or(Error::IndexOutOfRange(i))
    }

    /// Unit diagonal, nothing flowing backwards, no maps between `O(1,0)` and `O(0,1)`.
    pub fn is_exceptional(&self) -> bool {
        (0..4).all(|i| self.hom_dims[i][i] == 1)
            && (0..4).all(|i| (0..i).all(|j| self.hom_dims[i][j] == 0))
            && self.hom_dims[1][2] == 0
    }
}

/// `Ext^q(G_i, G_j)` for all pairs: the full cohomology of `G_j - G_i`.
pub fn collection_ext_table() -> [[CohomologyVector; 4]; 4] {
    let mut table = [[CohomologyVector::default(); 4]; 4];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = cohomology_q2(COLLECTION[j] - COLLECTION[i]);
        }
    }
    table
}

pub fn build_algebra() -> ExceptionalAlgebra {
    let ext = collection_ext_table();
    let mut hom_dims = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            hom_dims[i][j] = ext[i][j].h0;
        }
    }
    ExceptionalAlgebra { hom_dims, idempotents: [Idempotent(0), Idempotent(1), Idempotent(2), Idempotent(3)] }
}

/// Multiplicities `(d_0, d_1, d_2, d_3)` of the simples `S_0..S_3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CompositionSeries {
    pub d: [i64; 4],
}

impl CompositionSeries {
    pub const ZERO: CompositionSeries = CompositionSeries { d: [0; 4] };

    /// Panics on a negative multiplicity; modules have non-negative dimensions.
    pub fn new(d: [i64; 4]) -> Self {
        assert!(d.iter().all(|&x| x >= 0), "negative multiplicity in composition series {d:?}");
        CompositionSeries { d }
    }

    /// `dim V e_i`, the multiplicity of `Gr^i`.
    pub fn dim_at(&self, e: Idempotent) -> i64 {
        self.d[e.0]
    }

    pub fn length(&self) -> i64 {
        self.d.iter().fold(0, |acc, &x| add(acc, x))
    }

    pub fn scale(self, n: i64) -> Self {
        CompositionSeries::new(self.d.map(|x| mul(x, n)))
    }
}

impl Add for CompositionSeries {
    type Output = CompositionSeries;
    fn add(self, rhs: Self) -> Self {
        let mut d = self.d;
        for (x, y) in d.iter_mut().zip(rhs.d) {
            *x = add(*x, y);
        }
        CompositionSeries { d }
    }
}

impl AddAssign for CompositionSeries {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl core::iter::Sum for CompositionSeries {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(CompositionSeries::ZERO, Add::add)
    }
}

impl fmt::Display for CompositionSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.d;
        write!(f, "S0^{a} S1^{b} S2^{c} S3^{d}")
    }
}

/// The simple module `S_i`.
pub fn simple_module(i: usize) -> Result<CompositionSeries> {
    if i > 3 {
        return Err(Error::IndexOutOfRange(i));
    }
    let mut d = [0; 4];
    d[i] = 1;
    Ok(CompositionSeries { d })
}

/// Composition series of `Hom(G, E)` and `Ext^1(G, E)` for a nef `E` with
/// `c1 = (2,2)`, `h^1(E) = 0` and `Hom(O(1,0), E) = Hom(O(0,1), E) = 0`:
///
/// - `Hom(G, E) = S_0^(r+8-c2)`;
/// - `0 -> S_1^(c2-6) + S_2^(c2-6) -> Ext^1(G, E) -> S_3^(c2-4) -> 0`.
///
/// These dimensions are `h^0(E)`, `h^1(E(-1,0))`, `h^1(E(0,-1))`, `h^1(E(-1,-1))`,
/// all read off Riemann-Roch once the other cohomology vanishes.
pub fn hom_ext1_series(rank: i64, c2: i64) -> Result<(CompositionSeries, CompositionSeries)> {
    if c2 < 6 {
        return Err(Error::Hypothesis(format!("c2 = {c2} is below 6; h^1(E(-1,0)) = c2 - 6 must be non-negative")));
    }
    let h0 = sub(add(rank, 8), c2);
    if h0 < 0 {
        return Err(Error::Hypothesis(format!("h^0(E) = r + 8 - c2 = {h0} is negative")));
    }
    let hom = CompositionSeries::new([h0, 0, 0, 0]);
    let ext1 = CompositionSeries::new([0, sub(c2, 6), sub(c2, 6), sub(c2, 4)]);
    Ok((hom, ext1))
}
