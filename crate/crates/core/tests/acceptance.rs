//! One pass/fail line per acceptance criterion; exits non-zero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use groupinv::arith::{p_part, PrimeSet};
use groupinv::chardeg::{class_algebra, degrees_mod_prime, next_admissible_prime};
use groupinv::corpus::{builtin_corpus, find, GroupRecord};
use groupinv::report::{run_report, Report, ReportOptions};
use groupinv::structure::{conjugacy_classes, derived_subgroup};
use groupinv::{character_degrees, u_pi_exact, CriterionId, DegreeFrequency};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn holomorph(corpus: &[GroupRecord]) -> Outcome {
    let start = Instant::now();
    let g = &find(corpus, "Hol(C7)").map_err(|e| e.to_string())?.group;
    let m = character_degrees(g).map_err(|e| e.to_string())?;
    ensure(m == DegreeFrequency::from_pairs(&[(1, 6), (6, 1)]), || {
        format!("m_G = {m}")
    })?;
    let u2 = u_pi_exact(&m, &PrimeSet::singleton(2).unwrap());
    let u3 = u_pi_exact(&m, &PrimeSet::singleton(3).unwrap());
    let derived = derived_subgroup(g).map_err(|e| e.to_string())?.order_big();
    let index = g.order() / &derived;
    let expected = &index * p_part(&derived, 2).unwrap();
    ensure(u2 == BigUint::from(6u32) && u2 == expected, || {
        format!("u_2 = {u2}, |G:G'| |G'|_2 = {expected}")
    })?;
    ensure(u3 == BigUint::from(6u32), || format!("u_3 = {u3}"))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("m_G = {m}, u_2 = u_3 = 6, {elapsed:.2?}"))
}

fn check_criteria(
    report: &Report,
    ids: &[CriterionId],
    keep: impl Fn(&str) -> bool,
) -> Result<usize, String> {
    let mut n = 0;
    for (group, v) in report.verdicts() {
        if ids.contains(&v.criterion) && keep(&v.parameter) {
            ensure(v.agrees, || {
                format!("{} {} on {group} disagrees", v.criterion, v.parameter)
            })?;
            n += 1;
        }
    }
    ensure(n > 0, || "no verdicts evaluated".into())?;
    Ok(n)
}

fn identities(corpus: &[GroupRecord], report: &Report, elapsed: Duration) -> Outcome {
    ensure(corpus.len() >= 25, || {
        format!("only {} groups", corpus.len())
    })?;
    ensure(report.skipped.is_empty(), || {
        format!("skipped: {:?}", report.skipped)
    })?;
    let cap = BigUint::from(600u32);
    ensure(corpus.iter().all(|r| *r.group.order() <= cap), || {
        "a group exceeds order 600".into()
    })?;
    use CriterionId::*;
    let n = check_criteria(
        report,
        &[
            CosseyHawkesIdentity,
            HypercentreClassIdentity,
            KInfinityProduct,
        ],
        |_| true,
    )?;
    ensure(elapsed < Duration::from_secs(300), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{n} identities over {} groups, {elapsed:.2?}",
        corpus.len()
    ))
}

fn equivalences(report: &Report) -> Outcome {
    use CriterionId::*;
    let ids = [
        IsaacsEquivalence,
        CosseyHawkesEquivalence,
        DirectProductByDegrees,
        ComplementCommutatorByDegrees,
        HuppertCentralHall,
        ClassSylowPartDirectProduct,
        ClassSizeDirectProduct,
        SylowCentreCentral,
        DirectProductByClassSizes,
    ];
    let singleton = |p: &str| {
        !p.starts_with("pi=") || groupinv::report::parameter_primes(p).is_some_and(|s| s.len() == 1)
    };
    let n = check_criteria(report, &ids, singleton)?;
    for id in ids {
        let c = report
            .coverage
            .iter()
            .find(|c| c.criterion == id)
            .ok_or_else(|| format!("{id} missing from coverage"))?;
        ensure(c.both_true.is_some() && c.both_false.is_some(), || {
            format!("{id} lacks a witness")
        })?;
    }
    Ok(format!(
        "{n} verdicts, every equivalence witnessed both ways"
    ))
}

fn divisibilities(report: &Report) -> Outcome {
    use CriterionId::*;
    let n = check_criteria(
        report,
        &[
            IsaacsDivisibility,
            AbelianizationDividesDegreeSum,
            CentreDividesPiClassUnion,
            CentreDividesClassUnion,
            CentralizerDividesClassUnion,
            DegreePartBound,
            DegreeQuotientDivisibility,
            ClassUnionBound,
        ],
        |_| true,
    )?;
    Ok(format!("{n} verdicts"))
}

fn implications(report: &Report) -> Outcome {
    use CriterionId::*;
    let ids = [
        DirectProductCommutingPrimes,
        HallDirectProductDegrees,
        HallDirectProductClassSizes,
    ];
    let n = check_criteria(report, &ids, |_| true)?;
    for id in ids {
        let live = report
            .verdicts()
            .filter(|(_, v)| v.criterion == id && v.invariant_side.holds)
            .count();
        ensure(live > 0, || format!("{id} never has a true hypothesis"))?;
    }
    Ok(format!("{n} verdicts, each with non-vacuous cases"))
}

fn dixon_consistency(corpus: &[GroupRecord]) -> Outcome {
    for r in corpus {
        let fail = |msg: String| format!("{}: {msg}", r.name);
        let g = &r.group;
        let order = g.size().map_err(|e| fail(e.to_string()))? as u64;
        let classes = conjugacy_classes(g).map_err(|e| fail(e.to_string()))?;
        let data = class_algebra(g, &classes).map_err(|e| fail(e.to_string()))?;
        let m = degrees_mod_prime(&data, data.dixon_prime()).map_err(|e| fail(e.to_string()))?;
        let derived = derived_subgroup(g)
            .map_err(|e| fail(e.to_string()))?
            .order() as u64;
        ensure(m.sum_of_squares() == order as u128, || {
            fail(format!("sum of squares {m}"))
        })?;
        ensure(m.character_count() == classes.len() as u64, || {
            fail("character count".into())
        })?;
        ensure(m.linear_count() == order / derived, || {
            fail("linear count".into())
        })?;
        ensure(m.entries().iter().all(|&(d, _)| order % d == 0), || {
            fail("degree divisibility".into())
        })?;
        let bound = 1000 * order * data.exponent() + 1000;
        let next = next_admissible_prime(data.exponent(), order, data.dixon_prime(), bound)
            .map_err(|e| fail(e.to_string()))?;
        let again = degrees_mod_prime(&data, next).map_err(|e| fail(e.to_string()))?;
        ensure(again == m, || fail(format!("mod {next}: {again} vs {m}")))?;
    }
    Ok(format!(
        "{} groups, stable under the next admissible prime",
        corpus.len()
    ))
}

fn golden(corpus: &[GroupRecord]) -> Outcome {
    let pinned: [(&str, &[(u64, u64)]); 6] = [
        ("S3", &[(1, 2), (2, 1)]),
        ("A4", &[(1, 3), (3, 1)]),
        ("S4", &[(1, 2), (2, 1), (3, 2)]),
        ("A5", &[(1, 1), (3, 2), (4, 1), (5, 1)]),
        ("Q8", &[(1, 4), (2, 1)]),
        ("SL(2,3)", &[(1, 3), (2, 3), (3, 1)]),
    ];
    for (name, pairs) in pinned {
        let g = &find(corpus, name).map_err(|e| e.to_string())?.group;
        let m = character_degrees(g).map_err(|e| e.to_string())?;
        ensure(m == DegreeFrequency::from_pairs(pairs), || {
            format!("{name}: {m}")
        })?;
    }
    Ok("S3, A4, S4, A5, Q8, SL(2,3) match".into())
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_groupinv"))
            .args(["verify", "--builtin"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(
        a.status.code() == Some(0) && b.status.code() == Some(0),
        || format!("exit codes {:?} {:?}", a.status.code(), b.status.code()),
    )?;
    ensure(a.stdout == b.stdout, || "reports differ".into())?;
    ensure(!a.stdout.is_empty(), || "empty report".into())?;
    Ok(format!(
        "two runs, {} identical bytes, exit 0",
        a.stdout.len()
    ))
}

fn main() -> ExitCode {
    let corpus = builtin_corpus();
    let start = Instant::now();
    let report = run_report(&corpus, &ReportOptions { pi_bound: 2 });
    let elapsed = start.elapsed();

    let results: [(&str, Outcome); 8] = [
        ("holomorph of C7 reproduction", holomorph(&corpus)),
        ("identity suite", identities(&corpus, &report, elapsed)),
        ("equivalence suite", equivalences(&report)),
        ("divisibility and inequality suite", divisibilities(&report)),
        ("implication suite", implications(&report)),
        (
            "Dixon-Schneider self-consistency",
            dixon_consistency(&corpus),
        ),
        ("golden character degrees", golden(&corpus)),
        ("report determinism", determinism()),
    ];
    let mut failed = false;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed = true;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
