use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use super::{case_numerics, list_cases, CaseSpec, Term, Theorem, TriState};
use crate::arith::{add, mul, sub};
use crate::bondal::{gen_seq, reconstruct};
use crate::cohom::{cohomology_q2, euler_char, BundleNumerics};
use crate::ktheory::{quotient_c2_bound, ses_quotient_chern, to_chern, TorsionDescriptor};
use crate::pic::BiDegree;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub case_id: String,
    pub theorem: Theorem,
    pub rank_tested: i64,
    /// `None` only if the resolution does not even define a bundle class.
    pub computed: Option<BundleNumerics>,
    pub expected_c2: i64,
    /// `P(E)` is weak Fano iff `O(1)^(r+1) = 8 - c2 > 0`; only meaningful for `c1 = (2,2)`.
    pub weak_fano: Option<bool>,
    pub globally_generated: TriState,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

struct Ledger(Vec<Check>);

impl Ledger {
    fn record(&mut self, name: &'static str, passed: bool, detail: String) {
        self.0.push(Check { name, passed, detail });
    }
}

fn chi_of_terms(terms: &[Term], r: i64) -> i64 {
    terms.iter().fold(0, |acc, t| add(acc, mul(t.mult.eval(r), cohomology_q2(t.degree).euler_characteristic())))
}

fn chi_of_torsion(t: TorsionDescriptor) -> i64 {
    match t {
        TorsionDescriptor::PointSheaf => 1,
        TorsionDescriptor::StructureSheafFull => cohomology_q2(BiDegree::ZERO).euler_characteristic(),
        TorsionDescriptor::CurveTorsion { support, twist_degree } => {
            let o = cohomology_q2(BiDegree::ZERO).euler_characteristic();
            add(sub(o, cohomology_q2(-support).euler_characteristic()), twist_degree)
        }
    }
}

/// Runs every check that applies to `c` at rank `r`. Failures are report entries;
/// only a rank below the family's minimum is an error.
pub fn verify_case(c: &CaseSpec, r: i64) -> Result<VerificationReport> {
    let c1 = c.c1();
    let mut ledger = Ledger(Vec::new());
    let class = c.k_class_at(r)?;
    let numerics = match case_numerics(c, r) {
        Ok(e) => {
            ledger.record("numerics", true, format!("{e}"));
            Some(e)
        }
        Err(err @ crate::Error::BelowMinRank { .. }) => return Err(err),
        Err(err) => {
            ledger.record("numerics", false, format!("{class}: {err}"));
            None
        }
    };

    let gg = c.flags.globally_generated;
    let presentation_gg = c.coker.is_none() && c.mid.iter().all(|t| t.degree.is_nef());
    let gg_ok = match gg {
        TriState::Yes => presentation_gg,
        TriState::No => !presentation_gg,
        TriState::Unknown => true,
    };
    ledger.record(
        "global_generation",
        gg_ok,
        format!("flag {gg}, presentation by globally generated terms: {presentation_gg}"),
    );

    let mut weak_fano = None;
    if let Some(e) = numerics {
        ledger.record("rank", e.rank == r, format!("rank {} vs {r}", e.rank));
        ledger.record("c1", e.c1 == c1, format!("c1 {} vs {c1}", e.c1));
        ledger.record("c2_expected", e.c2 == c.expected_c2, format!("c2 {} vs {}", e.c2, c.expected_c2));
        let c1_sq = c1.self_intersection();
        ledger.record("c2_bound", e.satisfies_nef_bound(), format!("0 <= {} <= {c1_sq}", e.c2));

        let rr = euler_char(e, 0, 0);
        let additive = add(sub(chi_of_terms(&c.mid, r), chi_of_terms(&c.sub, r)), c.coker.map_or(0, chi_of_torsion));
        ledger.record(
            "euler_characteristic",
            rr == additive && rr >= 0,
            format!("Riemann-Roch {rr}, alternating Kunneth sum {additive}"),
        );

        if c1 == BiDegree::new(2, 2) {
            weak_fano = Some(e.c2 < 8);
        }

        if c.flags.bondal_hypotheses {
            match reconstruct(e) {
                Ok(k) => ledger.record("bondal_reconstruction", true, format!("[E] = {k}")),
                Err(err) => ledger.record("bondal_reconstruction", false, format!("{err}")),
            }
        }

        if let Some(origin) = c.flags.page {
            let detail;
            let ok = match gen_seq(origin.c2(), r, origin.variant()) {
                Ok(page) => {
                    let total = page.euler_sum();
                    detail = format!("page sums to {total}, resolution gives {class}");
                    total == class && origin.c2() == e.c2
                }
                Err(err) => {
                    detail = format!("{err}");
                    false
                }
            };
            ledger.record("e2_page", ok, detail);
        }

        let sub_line = match c.theorem {
            Theorem::HalfMax { c1, b } => Some(BiDegree::new(c1.a, b)),
            Theorem::NearMax { c1 } => Some(c1 - BiDegree::new(1, 1)),
            _ => None,
        };
        // At rank 1 the quotient by a line subsheaf is torsion and the bound says nothing.
        if let Some(l) = sub_line.filter(|_| r >= 2) {
            let bound = quotient_c2_bound(c1, l);
            let quotient = to_chern(crate::ktheory::line_class(l)).and_then(|line| ses_quotient_chern(line, e));
            match quotient {
                Ok(f) => ledger.record(
                    "quotient_bound",
                    f.c2 >= 0 && f.c2 <= bound,
                    format!("c2(E/O{l}) = {} within [0, {bound}]", f.c2),
                ),
                Err(err) => ledger.record("quotient_bound", false, format!("{err}")),
            }
        }
    }

    Ok(VerificationReport {
        case_id: c.id.clone(),
        theorem: c.theorem,
        rank_tested: r,
        computed: numerics,
        expected_c2: c.expected_c2,
        weak_fano,
        globally_generated: gg,
        checks: ledger.0,
    })
}

/// `verify_case` over `cases x ranks`, skipping ranks below each family's minimum.
pub fn verify_cases(cases: &[CaseSpec], ranks: RangeInclusive<i64>) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for c in cases {
        for r in ranks.clone() {
            if r < c.min_rank {
                continue;
            }
            // Cannot fail: r >= min_rank.
            if let Ok(report) = verify_case(c, r) {
                out.push(report);
            }
        }
    }
    out
}

pub fn verify_all(theorem: Theorem, ranks: RangeInclusive<i64>) -> Result<Vec<VerificationReport>> {
    Ok(verify_cases(&list_cases(theorem)?, ranks))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find(theorem: Theorem, id: &str) -> CaseSpec {
        list_cases(theorem).unwrap().into_iter().find(|c| c.id == id).unwrap()
    }

    #[test]
    fn case_10_rank_3() {
        let rep = verify_case(&find(Theorem::Main22, "main22-10"), 3).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.weak_fano, Some(false));
        assert_eq!(rep.computed.unwrap().c2, 8);
    }

    #[test]
    fn case_9_reconstructs() {
        let rep = verify_case(&find(Theorem::Main22, "main22-9"), 2).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert!(rep.checks.iter().any(|c| c.name == "bondal_reconstruction" && c.passed));
        assert!(rep.checks.iter().any(|c| c.name == "e2_page" && c.passed));
    }

    #[test]
    fn below_min_rank_is_an_error() {
        let err = verify_case(&find(Theorem::Main22, "main22-2a"), 1).unwrap_err();
        assert!(matches!(err, crate::Error::BelowMinRank { min_rank: 2, .. }));
    }

    #[test]
    fn corrupted_case_fails_checks() {
        let mut c = find(Theorem::Main22, "main22-8");
        c.sub[0].degree = BiDegree::new(-2, -2);
        let rep = verify_case(&c, 3).unwrap();
        assert!(!rep.passed());
        assert!(rep.failures().any(|f| f.name == "c1"));
    }

    #[test]
    fn empty_rank_range() {
        #[allow(clippy::reversed_empty_ranges)]
        let reports = verify_all(Theorem::Main22, 5..=4).unwrap();
        assert!(reports.is_empty());
    }

    #[test]
    fn parametric_lists_pass() {
        for a in 0..=4 {
            for b in 0..=4 {
                let c1 = BiDegree::new(a, b);
                let mut ths: Vec<Theorem> = (0..=b).map(|p| Theorem::HalfMax { c1, b: p }).collect();
                if a >= 1 && b >= 1 {
                    ths.push(Theorem::NearMax { c1 });
                }
                for th in ths {
                    for rep in verify_all(th, 1..=8).unwrap() {
                        assert!(rep.passed(), "{rep:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn whole_lists_pass() {
        for th in [Theorem::Main22, Theorem::Quadric21] {
            for rep in verify_all(th, 1..=10).unwrap() {
                assert!(rep.passed(), "{rep:?}");
            }
        }
    }
}
