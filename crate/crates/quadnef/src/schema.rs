//! JSON encoding of catalog families.
//!
//! ```json
//! {
//!   "b_param": null,
//!   "c1": [2, 2],
//!   "coker": null,
//!   "expected_c2": 4,
//!   "flags": {
//!     "bondal_hypotheses": false,
//!     "globally_generated": "yes",
//!     "inferred_by_symmetry": false,
//!     "nef_asserted": true,
//!     "page": null
//!   },
//!   "id": "main22-6-1",
//!   "mid": [{"deg": [2, 0], "mult": 1}, {"deg": [0, 0], "mult": "r-2"}],
//!   "min_rank": 2,
//!   "notes": [],
//!   "sub": [{"deg": [0, 0], "mult": 1}],
//!   "theorem": "main22",
//!   "twin_of": null
//! }
//! ```
//!
//! `coker` is `null` or one of `{"kind": "point"}`, `{"kind": "structure"}`,
//! `{"kind": "curve", "support": [a, b], "twist_degree": d}`. `page` is `null` or
//! one of `"c2=6"`, `"c2=7"`, `"c2=8-curve"`, `"c2=8-structure"`. Keys are always
//! emitted in lexicographic order, so parse then emit is byte-identical.

use anyhow::{bail, ensure, Context, Result};
use serde::{Deserialize, Serialize};

use quadnef_core::catalog::{CaseFlags, CaseSpec, Multiplicity, PageOrigin, Term, Theorem, TriState};
use quadnef_core::ktheory::TorsionDescriptor;
use quadnef_core::pic::BiDegree;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseRecord {
    pub id: String,
    pub theorem: String,
    pub c1: [i64; 2],
    /// Only for `halfmax`.
    #[serde(default)]
    pub b_param: Option<i64>,
    pub sub: Vec<TermRecord>,
    pub mid: Vec<TermRecord>,
    pub coker: Option<CokerRecord>,
    pub min_rank: i64,
    pub expected_c2: i64,
    pub flags: FlagsRecord,
    pub twin_of: Option<String>,
    #[serde(default)]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRecord {
    pub deg: [i64; 2],
    pub mult: MultRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MultRecord {
    Int(i64),
    Expr(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CokerRecord {
    Point,
    Structure,
    Curve { support: [i64; 2], twist_degree: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagsRecord {
    pub globally_generated: String,
    pub nef_asserted: bool,
    pub bondal_hypotheses: bool,
    pub page: Option<String>,
    pub inferred_by_symmetry: bool,
}

fn deg(x: BiDegree) -> [i64; 2] {
    [x.a, x.b]
}

fn bideg([a, b]: [i64; 2]) -> BiDegree {
    BiDegree::new(a, b)
}

fn page_name(p: PageOrigin) -> &'static str {
    match p {
        PageOrigin::C2Six => "c2=6",
        PageOrigin::C2Seven => "c2=7",
        PageOrigin::C2EightCurve => "c2=8-curve",
        PageOrigin::C2EightStructure => "c2=8-structure",
    }
}

fn parse_page(s: &str) -> Result<PageOrigin> {
    Ok(match s {
        "c2=6" => PageOrigin::C2Six,
        "c2=7" => PageOrigin::C2Seven,
        "c2=8-curve" => PageOrigin::C2EightCurve,
        "c2=8-structure" => PageOrigin::C2EightStructure,
        other => bail!("unknown page {other:?}"),
    })
}

fn parse_tristate(s: &str) -> Result<TriState> {
    Ok(match s {
        "yes" => TriState::Yes,
        "no" => TriState::No,
        "unknown" => TriState::Unknown,
        other => bail!("globally_generated must be yes, no or unknown, not {other:?}"),
    })
}

impl From<Multiplicity> for MultRecord {
    fn from(m: Multiplicity) -> Self {
        if m.uses_rank {
            MultRecord::Expr(m.to_string())
        } else {
            MultRecord::Int(m.offset)
        }
    }
}

impl TryFrom<&MultRecord> for Multiplicity {
    type Error = anyhow::Error;

    fn try_from(m: &MultRecord) -> Result<Self> {
        match m {
            MultRecord::Int(n) => Ok(Multiplicity::constant(*n)),
            MultRecord::Expr(s) => Ok(s.parse()?),
        }
    }
}

impl From<&CaseSpec> for CaseRecord {
    fn from(c: &CaseSpec) -> Self {
        let terms = |ts: &[Term]| ts.iter().map(|t| TermRecord { deg: deg(t.degree), mult: t.mult.into() }).collect();
        let coker = c.coker.map(|t| match t {
            TorsionDescriptor::PointSheaf => CokerRecord::Point,
            TorsionDescriptor::StructureSheafFull => CokerRecord::Structure,
            TorsionDescriptor::CurveTorsion { support, twist_degree } => {
                CokerRecord::Curve { support: deg(support), twist_degree }
            }
        });
        CaseRecord {
            id: c.id.clone(),
            theorem: c.theorem.key().to_string(),
            c1: deg(c.c1()),
            b_param: match c.theorem {
                Theorem::HalfMax { b, .. } => Some(b),
                _ => None,
            },
            sub: terms(&c.sub),
            mid: terms(&c.mid),
            coker,
            min_rank: c.min_rank,
            expected_c2: c.expected_c2,
            flags: FlagsRecord {
                globally_generated: c.flags.globally_generated.to_string(),
                nef_asserted: c.flags.nef_asserted,
                bondal_hypotheses: c.flags.bondal_hypotheses,
                page: c.flags.page.map(|p| page_name(p).to_string()),
                inferred_by_symmetry: c.flags.inferred_by_symmetry,
            },
            twin_of: c.twin_of.clone(),
            notes: c.notes.clone(),
        }
    }
}

pub fn parse_theorem(key: &str, c1: BiDegree, b_param: Option<i64>) -> Result<Theorem> {
    let th = match key {
        "main22" => Theorem::Main22,
        "quadric21" => Theorem::Quadric21,
        "halfmax" => Theorem::HalfMax { c1, b: b_param.context("halfmax needs a b parameter")? },
        "nearmax" => Theorem::NearMax { c1 },
        other => bail!("unknown theorem {other:?}"),
    };
    ensure!(th.c1() == c1, "c1 = {c1} does not match {key}, which has c1 = {}", th.c1());
    ensure!(b_param.is_none() || matches!(th, Theorem::HalfMax { .. }), "b_param is only meaningful for halfmax");
    Ok(th)
}

impl TryFrom<&CaseRecord> for CaseSpec {
    type Error = anyhow::Error;

    fn try_from(r: &CaseRecord) -> Result<Self> {
        let ctx = || format!("case {:?}", r.id);
        let theorem = parse_theorem(&r.theorem, bideg(r.c1), r.b_param).with_context(ctx)?;
        let terms = |ts: &[TermRecord]| -> Result<Vec<Term>> {
            ts.iter().map(|t| Ok(Term::new(bideg(t.deg), (&t.mult).try_into()?))).collect()
        };
        let sub = terms(&r.sub).with_context(ctx)?;
        let mid = terms(&r.mid).with_context(ctx)?;
        let coker = r.coker.as_ref().map(|c| match *c {
            CokerRecord::Point => TorsionDescriptor::PointSheaf,
            CokerRecord::Structure => TorsionDescriptor::StructureSheafFull,
            CokerRecord::Curve { support, twist_degree } => {
                TorsionDescriptor::CurveTorsion { support: bideg(support), twist_degree }
            }
        });
        if let Some(t) = coker {
            t.class().with_context(ctx)?;
        }
        let floor = CaseSpec::syntactic_min_rank(&sub, &mid);
        ensure!(
            r.min_rank >= floor,
            "case {:?}: min_rank {} leaves a negative multiplicity (needs at least {floor})",
            r.id,
            r.min_rank
        );
        let page = r.flags.page.as_deref().map(parse_page).transpose().with_context(ctx)?;
        Ok(CaseSpec {
            id: r.id.clone(),
            theorem,
            sub,
            mid,
            coker,
            min_rank: r.min_rank,
            expected_c2: r.expected_c2,
            flags: CaseFlags {
                globally_generated: parse_tristate(&r.flags.globally_generated).with_context(ctx)?,
                nef_asserted: r.flags.nef_asserted,
                bondal_hypotheses: r.flags.bondal_hypotheses,
                page,
                inferred_by_symmetry: r.flags.inferred_by_symmetry,
            },
            twin_of: r.twin_of.clone(),
            notes: r.notes.clone(),
        })
    }
}

/// Pretty JSON with lexicographically ordered keys.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    // serde_json's default map is a BTreeMap, which sorts keys.
    let v = serde_json::to_value(value)?;
    Ok(serde_json::to_string_pretty(&v)?)
}

pub fn catalog_to_json(cases: &[CaseSpec]) -> Result<String> {
    let records: Vec<CaseRecord> = cases.iter().map(CaseRecord::from).collect();
    to_canonical_json(&records)
}

pub fn catalog_from_json(text: &str) -> Result<Vec<CaseSpec>> {
    let records: Vec<CaseRecord> = serde_json::from_str(text).context("malformed catalog JSON")?;
    records.iter().map(CaseSpec::try_from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use quadnef_core::catalog::list_cases;

    #[test]
    fn multiplicity_encoding() {
        assert_eq!(MultRecord::from(Multiplicity::constant(2)), MultRecord::Int(2));
        assert_eq!(MultRecord::from(Multiplicity::rank_plus(-2)), MultRecord::Expr("r-2".into()));
        let back: Multiplicity = (&MultRecord::Expr("r+3".into())).try_into().unwrap();
        assert_eq!(back, Multiplicity::rank_plus(3));
        assert!(Multiplicity::try_from(&MultRecord::Expr("2r".into())).is_err());
    }

    #[test]
    fn catalog_round_trips() {
        let mut cases = list_cases(Theorem::Main22).unwrap();
        cases.extend(list_cases(Theorem::HalfMax { c1: BiDegree::new(3, 2), b: 0 }).unwrap());
        let json = catalog_to_json(&cases).unwrap();
        let back = catalog_from_json(&json).unwrap();
        assert_eq!(back, cases);
        assert_eq!(catalog_to_json(&back).unwrap(), json);
    }

    #[test]
    fn rejects_inconsistent_records() {
        let cases = list_cases(Theorem::Main22).unwrap();
        let mut rec = CaseRecord::from(&cases[1]);
        rec.min_rank = 1;
        assert!(CaseSpec::try_from(&rec).is_err());

        let mut rec = CaseRecord::from(&cases[0]);
        rec.c1 = [2, 1];
        assert!(CaseSpec::try_from(&rec).is_err());

        let mut rec = CaseRecord::from(&cases[0]);
        rec.coker = Some(CokerRecord::Curve { support: [-1, 2], twist_degree: 0 });
        assert!(CaseSpec::try_from(&rec).is_err());
    }
}
