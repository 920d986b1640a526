use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{CaseFlags, CaseSpec, Multiplicity, PageOrigin, Term, Theorem, TriState};
use crate::arith::{add, mul, sub};
use crate::ktheory::TorsionDescriptor;
use crate::pic::BiDegree;
use crate::{Error, Result};

fn t(a: i64, b: i64, mult: Multiplicity) -> Term {
    Term::new(BiDegree::new(a, b), mult)
}

fn k(n: i64) -> Multiplicity {
    Multiplicity::constant(n)
}

fn r(offset: i64) -> Multiplicity {
    Multiplicity::rank_plus(offset)
}

struct Builder {
    theorem: Theorem,
    id: String,
    sub: Vec<Term>,
    mid: Vec<Term>,
    coker: Option<TorsionDescriptor>,
    expected_c2: i64,
    gg: Option<TriState>,
    bondal: Option<PageOrigin>,
    notes: Vec<String>,
}

impl Builder {
    fn new(theorem: Theorem, label: &str, expected_c2: i64) -> Self {
        Builder {
            theorem,
            id: format!("{}-{label}", theorem.key()),
            sub: Vec::new(),
            mid: Vec::new(),
            coker: None,
            expected_c2,
            gg: None,
            bondal: None,
            notes: Vec::new(),
        }
    }

    fn sub(mut self, terms: impl IntoIterator<Item = Term>) -> Self {
        self.sub.extend(terms.into_iter().filter(|t| t.mult != k(0)));
        self
    }

    fn mid(mut self, terms: impl IntoIterator<Item = Term>) -> Self {
        self.mid.extend(terms.into_iter().filter(|t| t.mult != k(0)));
        self
    }

    fn coker(mut self, t: TorsionDescriptor) -> Self {
        self.coker = Some(t);
        self
    }

    fn not_globally_generated(mut self) -> Self {
        self.gg = Some(TriState::No);
        self
    }

    fn on_page(mut self, page: PageOrigin) -> Self {
        self.bondal = Some(page);
        self
    }

    fn note(mut self, s: &str) -> Self {
        self.notes.push(s.to_string());
        self
    }

    fn build(self) -> CaseSpec {
        // A quotient of a globally generated sheaf is globally generated.
        let gg = self.gg.unwrap_or_else(|| {
            if self.coker.is_none() && self.mid.iter().all(|t| t.degree.is_nef()) {
                TriState::Yes
            } else {
                TriState::Unknown
            }
        });
        CaseSpec {
            min_rank: CaseSpec::syntactic_min_rank(&self.sub, &self.mid),
            id: self.id,
            theorem: self.theorem,
            sub: self.sub,
            mid: self.mid,
            coker: self.coker,
            expected_c2: self.expected_c2,
            flags: CaseFlags {
                globally_generated: gg,
                nef_asserted: true,
                bondal_hypotheses: self.bondal.is_some(),
                page: self.bondal,
                inferred_by_symmetry: false,
            },
            twin_of: None,
            notes: self.notes,
        }
    }
}

/// The families of a classification, in list order. Families that change under
/// exchanging the two rulings are followed by their swapped twin.
pub fn list_cases(theorem: Theorem) -> Result<Vec<CaseSpec>> {
    match theorem {
        Theorem::Main22 => Ok(main22()),
        Theorem::Quadric21 => Ok(quadric21()),
        Theorem::HalfMax { c1, b } => half_max(c1, b),
        Theorem::NearMax { c1 } => near_max(c1),
    }
}

fn main22() -> Vec<CaseSpec> {
    let th = Theorem::Main22;
    let case = |label: &str, c2: i64| Builder::new(th, label, c2);

    let mut two_b = case("2b", 2).mid([t(1, 2, k(1)), t(1, 0, k(1)), t(0, 0, r(-2))]).build();
    two_b.twin_of = Some("main22-2a".to_string());

    let head = [
        case("1", 0).mid([t(2, 2, k(1)), t(0, 0, r(-1))]).build(),
        case("2a", 2).mid([t(2, 1, k(1)), t(0, 1, k(1)), t(0, 0, r(-2))]).build(),
        two_b,
    ];

    // Everything below is listed up to exchanging the rulings.
    let rest = [
        case("3", 2).mid([t(1, 1, k(2)), t(0, 0, r(-2))]).build(),
        case("4", 3)
            .sub([t(0, 0, k(1))])
            .mid([t(1, 1, k(1)), t(1, 0, k(1)), t(0, 1, k(1)), t(0, 0, r(-2))])
            .note(
                "either O -> O(1,1) + O(1,0) + O(0,1) + O^(r-2) composed with the projection to a \
                 trivial summand is zero, or E = O(1,1) + O(1,0) + O(0,1) + O^(r-3)",
            )
            .build(),
        case("5", 4).sub([t(-1, -1, k(1))]).mid([t(1, 1, k(1)), t(0, 0, r(0))]).build(),
        case("6", 4)
            .sub([t(0, 0, k(2))])
            .mid([t(1, 0, k(2)), t(0, 1, k(2)), t(0, 0, r(-2))])
            .note("refined by 6-1 (with 6-1-1, 6-1-2), 6-2 and 6-3")
            .build(),
        case("6-1", 4).sub([t(0, 0, k(1))]).mid([t(2, 0, k(1)), t(0, 1, k(2)), t(0, 0, r(-2))]).build(),
        case("6-1-1", 4).mid([t(2, 0, k(1)), t(0, 2, k(1)), t(0, 0, r(-2))]).build(),
        case("6-1-2", 4).mid([t(2, 0, k(1)), t(0, 1, k(2)), t(0, 0, r(-3))]).build(),
        case("6-2", 4).mid([t(1, 0, k(2)), t(0, 1, k(2)), t(0, 0, r(-4))]).build(),
        case("6-3", 4).sub([t(0, -1, k(1))]).mid([t(1, 0, k(2)), t(0, 1, k(1)), t(0, 0, r(-2))]).build(),
        case("7", 5).sub([t(-1, -1, k(1)), t(-1, 0, k(1)), t(0, -1, k(1))]).mid([t(0, 0, r(3))]).build(),
        case("8", 6).sub([t(-1, -2, k(1))]).mid([t(1, 0, k(1)), t(0, 0, r(0))]).build(),
        case("9", 6).sub([t(-1, -1, k(2))]).mid([t(0, 0, r(2))]).on_page(PageOrigin::C2Six).build(),
        case("10", 8).sub([t(-2, -2, k(1))]).mid([t(0, 0, r(1))]).build(),
        case("11", 7)
            .sub([t(-2, -2, k(1))])
            .mid([t(0, 0, r(1))])
            .coker(TorsionDescriptor::PointSheaf)
            .not_globally_generated()
            .on_page(PageOrigin::C2Seven)
            .note("the cokernel of H^0(E) (x) O -> E is k(p)")
            .build(),
        case("12", 8)
            .sub([t(-2, -2, k(1))])
            .mid([t(0, 0, r(0))])
            .coker(TorsionDescriptor::StructureSheafFull)
            .not_globally_generated()
            .on_page(PageOrigin::C2EightStructure)
            .note("the cokernel of H^0(E) (x) O -> E is O")
            .build(),
        case("13", 8)
            .sub([t(-1, -1, k(4))])
            .mid([t(0, 0, r(0)), t(-1, 0, k(2)), t(0, -1, k(2))])
            .not_globally_generated()
            .on_page(PageOrigin::C2EightCurve)
            .note("the cokernel of H^0(E) (x) O -> E is O_E(d) with E a (2,2) divisor and deg d = 0")
            .build(),
    ];

    let mut out: Vec<CaseSpec> = head.into();
    for c in rest {
        let twin = c.is_asymmetric().then(|| c.swapped());
        out.push(c);
        out.extend(twin);
    }
    out
}

fn quadric21() -> Vec<CaseSpec> {
    let th = Theorem::Quadric21;
    let case = |label: &str, c2: i64| Builder::new(th, label, c2);
    vec![
        case("1", 0).mid([t(2, 1, k(1)), t(0, 0, r(-1))]).build(),
        case("2", 1).mid([t(1, 1, k(1)), t(1, 0, k(1)), t(0, 0, r(-2))]).build(),
        case("3", 2).sub([t(0, 0, k(1))]).mid([t(1, 0, k(2)), t(0, 1, k(1)), t(0, 0, r(-2))]).build(),
        case("4", 3).sub([t(-1, -1, k(1)), t(-1, 0, k(1))]).mid([t(0, 0, r(2))]).build(),
        case("5", 4).sub([t(-2, -1, k(1))]).mid([t(0, 0, r(1))]).build(),
    ]
}

fn half_max(c1: BiDegree, b: i64) -> Result<Vec<CaseSpec>> {
    if !c1.is_nef() {
        return Err(Error::InvalidParameters(format!("c1 = {c1} must be nef")));
    }
    if b > c1.b {
        return Err(Error::InvalidParameters(format!("b = {b} must be at most c1'' = {}", c1.b)));
    }
    let th = Theorem::HalfMax { c1, b };
    let spec = if b == c1.b {
        Builder::new(th, "split", 0).mid([Term::new(c1, k(1)), t(0, 0, r(-1))]).build()
    } else {
        let gap = sub(c1.b, b);
        Builder::new(th, "res", mul(c1.a, gap))
            .sub([t(0, 0, k(sub(gap, 1)))])
            .mid([t(c1.a, b, k(1)), t(0, 1, k(gap)), t(0, 0, r(-2))])
            .note("E / O(c1', b) is pulled back from a nef bundle of degree c1'' - b on the second P^1")
            .build()
    };
    Ok(vec![spec])
}

fn near_max(c1: BiDegree) -> Result<Vec<CaseSpec>> {
    if c1.a < 1 || c1.b < 1 {
        return Err(Error::InvalidParameters(format!("c1 = {c1} needs both degrees at least 1")));
    }
    let th = Theorem::NearMax { c1 };
    let l = c1 - BiDegree::new(1, 1);
    let base = sub(add(c1.a, c1.b), 2);
    let hyp = "Hom(O(c1'-1,c1''), E) = Hom(O(c1',c1''-1), E) = 0 and Hom(O(c1'-1,c1''-1), E) != 0";
    Ok(vec![
        Builder::new(th, "1", base).mid([Term::new(l, k(1)), t(1, 1, k(1)), t(0, 0, r(-2))]).note(hyp).build(),
        Builder::new(th, "2", add(base, 1))
            .sub([t(0, 0, k(1))])
            .mid([Term::new(l, k(1)), t(1, 0, k(1)), t(0, 1, k(1)), t(0, 0, r(-2))])
            .note(hyp)
            .build(),
        Builder::new(th, "3", add(base, 2))
            .sub([t(-1, -1, k(1))])
            .mid([Term::new(l, k(1)), t(0, 0, r(0))])
            .note(hyp)
            .build(),
    ])
}
