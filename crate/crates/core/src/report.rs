//! The verification report: per-group invariants and verdicts, serialized as
//! JSON with a fixed key order and every number written as a decimal string.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arith::{factorize, PrimeSet};
use crate::corpus::{serialize_corpus, GroupRecord, Source};
use crate::criteria::{run_all_criteria, CriterionId, CriterionVerdict, GroupContext, Kind, Side};
use crate::error::Result;

pub const TOOL_VERSION: &str = concat!("groupinv ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug)]
pub struct ReportOptions {
    /// Largest prime set evaluated by the π-parameterized checks.
    pub pi_bound: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { pi_bound: 2 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub corpus_digest: String,
    pub pi_bound: String,
    pub groups: Vec<GroupBlock>,
    pub skipped: Vec<SkippedGroup>,
    pub coverage: Vec<Coverage>,
    pub summary: Summary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupBlock {
    pub name: String,
    pub source: Source,
    pub degree: String,
    pub order: String,
    pub factorization: Vec<PrimePower>,
    pub degree_frequency: Vec<Count>,
    pub class_size_frequency: Vec<Count>,
    pub pi_table: Vec<PiRow>,
    pub verdicts: Vec<VerdictRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimePower {
    pub prime: String,
    pub exponent: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Count {
    pub value: String,
    pub count: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiRow {
    pub pi: String,
    pub u_pi: String,
    pub u_pi_complement: String,
    pub s_pi: String,
    pub s_pi_complement: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub criterion: CriterionId,
    pub parameter: String,
    pub kind: Kind,
    pub invariant_side: SideRecord,
    pub structure_side: SideRecord,
    pub agrees: bool,
    pub experimental: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideRecord {
    pub holds: bool,
    pub values: Vec<NamedValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedGroup {
    pub name: String,
    pub order: String,
    pub reason: String,
}

/// For an equivalence: a group and parameter where both sides hold, and one
/// where both fail. `None` means the corpus lacks that case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coverage {
    pub criterion: CriterionId,
    pub both_true: Option<Witness>,
    pub both_false: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub group: String,
    pub parameter: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub groups_evaluated: String,
    pub groups_skipped: String,
    pub total_verdicts: String,
    pub agreements: String,
    pub disagreements: String,
    pub experimental_disagreements: String,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    pub fn verdicts(&self) -> impl Iterator<Item = (&str, &VerdictRecord)> {
        self.groups
            .iter()
            .flat_map(|b| b.verdicts.iter().map(move |v| (b.name.as_str(), v)))
    }

    /// 0 when every non-experimental verdict agrees, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.disagreements == "0" {
            0
        } else {
            1
        }
    }
}

/// sha256 of the canonical stanza text.
pub fn corpus_digest(corpus: &[GroupRecord]) -> String {
    hex::encode(Sha256::digest(serialize_corpus(corpus).as_bytes()))
}

fn side_record(side: &Side) -> SideRecord {
    SideRecord {
        holds: side.holds,
        values: side
            .values
            .iter()
            .map(|(n, v)| NamedValue {
                name: n.to_string(),
                value: v.to_string(),
            })
            .collect(),
    }
}

fn verdict_record(v: &CriterionVerdict) -> VerdictRecord {
    VerdictRecord {
        criterion: v.criterion,
        parameter: v.parameter.to_string(),
        kind: v.kind,
        invariant_side: side_record(&v.invariant_side),
        structure_side: side_record(&v.structure_side),
        agrees: v.agrees,
        experimental: v.experimental,
    }
}

fn counts(entries: &[(u64, u64)]) -> Vec<Count> {
    entries
        .iter()
        .map(|(v, c)| Count {
            value: v.to_string(),
            count: c.to_string(),
        })
        .collect()
}

pub fn pi_table(ctx: &GroupContext<'_>, pi_bound: usize) -> Vec<PiRow> {
    ctx.primes()
        .subsets_up_to(pi_bound)
        .into_iter()
        .map(|pi| {
            let rest = ctx.complement(&pi);
            PiRow {
                pi: pi.to_string(),
                u_pi: ctx.u(&pi).to_string(),
                u_pi_complement: ctx.u(&rest).to_string(),
                s_pi: ctx.s(&pi).to_string(),
                s_pi_complement: ctx.s(&rest).to_string(),
            }
        })
        .collect()
}

fn evaluate(record: &GroupRecord, options: &ReportOptions) -> Result<GroupBlock> {
    let ctx = GroupContext::new(&record.name, &record.group)?;
    let verdicts = run_all_criteria(&ctx, options.pi_bound)?;
    Ok(GroupBlock {
        name: record.name.clone(),
        source: record.source,
        degree: record.degree.to_string(),
        order: ctx.order().to_string(),
        factorization: factorize(ctx.order())?
            .into_iter()
            .map(|(p, e)| PrimePower {
                prime: p.to_string(),
                exponent: e.to_string(),
            })
            .collect(),
        degree_frequency: counts(ctx.degrees().entries()),
        class_size_frequency: counts(ctx.class_sizes().entries()),
        pi_table: pi_table(&ctx, options.pi_bound),
        verdicts: verdicts.iter().map(verdict_record).collect(),
    })
}

fn coverage(groups: &[GroupBlock]) -> Vec<Coverage> {
    let mut out: Vec<Coverage> = Vec::new();
    for b in groups {
        for v in b
            .verdicts
            .iter()
            .filter(|v| v.kind == Kind::Equivalence && !v.experimental)
        {
            let idx = match out.iter().position(|c| c.criterion == v.criterion) {
                Some(i) => i,
                None => {
                    out.push(Coverage {
                        criterion: v.criterion,
                        both_true: None,
                        both_false: None,
                    });
                    out.len() - 1
                }
            };
            let witness = || {
                Some(Witness {
                    group: b.name.clone(),
                    parameter: v.parameter.clone(),
                })
            };
            let c = &mut out[idx];
            let (i, s) = (v.invariant_side.holds, v.structure_side.holds);
            if i && s && c.both_true.is_none() {
                c.both_true = witness();
            }
            if !i && !s && c.both_false.is_none() {
                c.both_false = witness();
            }
        }
    }
    out.sort_by_key(|c| c.criterion);
    out
}

/// Evaluates every group (in parallel) and assembles the report in corpus
/// order. Groups that cannot be evaluated are listed as skipped.
pub fn run_report(corpus: &[GroupRecord], options: &ReportOptions) -> Report {
    let results: Vec<Result<GroupBlock>> =
        corpus.par_iter().map(|r| evaluate(r, options)).collect();
    let mut groups = Vec::new();
    let mut skipped = Vec::new();
    for (record, result) in corpus.iter().zip(results) {
        match result {
            Ok(block) => groups.push(block),
            Err(e) => skipped.push(SkippedGroup {
                name: record.name.clone(),
                order: record.group.order().to_string(),
                reason: e.to_string(),
            }),
        }
    }
    let all: Vec<&VerdictRecord> = groups.iter().flat_map(|b| &b.verdicts).collect();
    let agreements = all.iter().filter(|v| v.agrees).count();
    let disagreements = all.iter().filter(|v| !v.agrees && !v.experimental).count();
    let experimental = all.iter().filter(|v| !v.agrees && v.experimental).count();
    Report {
        tool_version: TOOL_VERSION.to_string(),
        corpus_digest: corpus_digest(corpus),
        pi_bound: options.pi_bound.to_string(),
        coverage: coverage(&groups),
        summary: Summary {
            groups_evaluated: groups.len().to_string(),
            groups_skipped: skipped.len().to_string(),
            total_verdicts: all.len().to_string(),
            agreements: agreements.to_string(),
            disagreements: disagreements.to_string(),
            experimental_disagreements: experimental.to_string(),
        },
        groups,
        skipped,
    }
}

/// Parses a decimal field written by this module.
pub fn number(s: &str) -> BigUint {
    s.parse().expect("decimal string")
}

/// The prime set of a parameter such as `pi={2,3}`, if it is one.
pub fn parameter_primes(parameter: &str) -> Option<PrimeSet> {
    let inner = parameter.strip_prefix("pi={")?.strip_suffix('}')?;
    let primes = inner
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().ok())
        .collect::<Option<Vec<u64>>>()?;
    PrimeSet::new(primes).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{parse_corpus, GroupRecord};
    use crate::group::Group;
    use crate::perm::Permutation;
    use crate::standard::standard_group;

    fn small_corpus() -> Vec<GroupRecord> {
        ["S3", "C6"]
            .iter()
            .zip([standard_group("symmetric", 3), standard_group("cyclic", 6)])
            .map(|(n, g)| GroupRecord::from_group(*n, Source::Builtin, g.unwrap()))
            .collect()
    }

    #[test]
    fn report_round_trips_and_is_deterministic() {
        let corpus = small_corpus();
        let a = run_report(&corpus, &ReportOptions::default());
        let b = run_report(&corpus, &ReportOptions::default());
        assert_eq!(a.to_json(), b.to_json());
        let back = Report::from_json(&a.to_json()).unwrap();
        assert_eq!(back, a);
        assert_eq!(a.exit_code(), 0);
    }

    #[test]
    fn summary_matches_blocks() {
        let r = run_report(&small_corpus(), &ReportOptions::default());
        let total: usize = r.groups.iter().map(|b| b.verdicts.len()).sum();
        assert_eq!(number(&r.summary.total_verdicts), BigUint::from(total));
        assert_eq!(r.summary.groups_evaluated, "2");
        let s3 = &r.groups[0];
        assert_eq!(s3.order, "6");
        assert_eq!(s3.degree_frequency, counts(&[(1, 2), (2, 1)]));
        assert_eq!(s3.class_size_frequency, counts(&[(1, 1), (2, 1), (3, 1)]));
        let row = s3.pi_table.iter().find(|r| r.pi == "{3}").unwrap();
        assert_eq!((row.u_pi.as_str(), row.s_pi.as_str()), ("2", "4"));
    }

    #[test]
    fn abelian_group_verdicts_all_hold_or_are_vacuous() {
        let corpus = parse_corpus(
            "group C15\ndegree 15\ngen (1,2,3,4,5,6,7,8,9,10,11,12,13,14,15)\nend\n",
            Source::File,
        )
        .unwrap();
        let r = run_report(&corpus, &ReportOptions::default());
        assert_eq!(r.exit_code(), 0);
        for (_, v) in r.verdicts() {
            assert!(v.agrees);
            if v.kind == Kind::Equivalence {
                assert!(v.invariant_side.holds && v.structure_side.holds, "{v:?}");
            }
        }
    }

    #[test]
    fn oversized_group_is_skipped() {
        let s8 = Group::new(
            8,
            vec![
                Permutation::from_cycles(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]]).unwrap(),
                Permutation::from_cycles(8, &[&[0, 1]]).unwrap(),
            ],
        )
        .unwrap();
        let mut corpus = small_corpus();
        corpus.push(GroupRecord::from_group("S8", Source::File, s8));
        let r = run_report(&corpus, &ReportOptions::default());
        assert_eq!(r.skipped.len(), 1);
        assert_eq!(r.skipped[0].order, "40320");
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn digest_depends_on_content() {
        let a = small_corpus();
        let b = a[..1].to_vec();
        assert_ne!(corpus_digest(&a), corpus_digest(&b));
        assert_eq!(corpus_digest(&a).len(), 64);
    }

    #[test]
    fn parameter_parsing() {
        assert_eq!(parameter_primes("pi={2,3}"), PrimeSet::new([2, 3]).ok());
        assert_eq!(parameter_primes("pi={}"), Some(PrimeSet::empty()));
        assert_eq!(parameter_primes("p=2"), None);
    }
}
