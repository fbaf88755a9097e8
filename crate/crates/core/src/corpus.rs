//! Named group collections: the stanza text format and the builtin set.
//!
//! ```text
//! # comment
//! group S3
//! degree 3
//! gen (1,2)
//! gen (1,2,3)
//! end
//! ```
//!
//! Points are 1-based in the text and 0-based in memory.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;
use crate::standard::standard_group;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Builtin,
    File,
}

#[derive(Clone, Debug)]
pub struct GroupRecord {
    pub name: String,
    pub source: Source,
    pub degree: usize,
    /// Canonical 1-based cycle strings, one per generator.
    pub generators: Vec<String>,
    pub group: Group,
}

impl GroupRecord {
    pub fn from_group(name: impl Into<String>, source: Source, group: Group) -> Self {
        GroupRecord {
            name: name.into(),
            source,
            degree: group.degree(),
            generators: group.generators().iter().map(canonical_cycles).collect(),
            group,
        }
    }
}

/// 1-based, comma-separated cycle notation; `()` for the identity.
pub fn canonical_cycles(p: &Permutation) -> String {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return "()".to_string();
    }
    let mut out = String::new();
    for c in cycles {
        out.push('(');
        for (i, x) in c.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, "{}", x + 1).unwrap();
        }
        out.push(')');
    }
    out
}

/// Parses 1-based cycle notation such as `(1,2,3)(4,5)` on `degree` points.
/// Errors are plain messages; the caller attaches the line number.
pub fn parse_cycles(text: &str, degree: usize) -> std::result::Result<Permutation, String> {
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err("empty generator".into());
    }
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut seen = BTreeSet::new();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| format!("expected `(` at `{rest}`"))?;
        let close = body.find(')').ok_or("unclosed cycle")?;
        let inner = body[..close].trim();
        rest = body[close + 1..].trim_start();
        if inner.is_empty() {
            continue;
        }
        let mut cycle = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            let x: usize = tok.parse().map_err(|_| format!("invalid point `{tok}`"))?;
            if x == 0 || x > degree {
                return Err(format!("point {x} exceeds degree {degree}"));
            }
            if !seen.insert(x) {
                return Err(format!("not a bijection: point {x} repeated"));
            }
            cycle.push((x - 1) as u32);
        }
        cycles.push(cycle);
    }
    let refs: Vec<&[u32]> = cycles.iter().map(Vec::as_slice).collect();
    Permutation::from_cycles(degree, &refs).map_err(|e| e.to_string())
}

struct Stanza {
    name: String,
    line: usize,
    degree: Option<usize>,
    gens: Vec<Permutation>,
}

/// Parses the stanza format. Names must be unique; every group is built
/// (groups above the enumeration cap are built without enumeration).
pub fn parse_corpus(text: &str, source: Source) -> Result<Vec<GroupRecord>> {
    let err = |line: usize, message: String| Error::Parse { line, message };
    let mut out: Vec<GroupRecord> = Vec::new();
    let mut names = BTreeSet::new();
    let mut current: Option<Stanza> = None;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, arg) = match content.split_once(char::is_whitespace) {
            Some((k, a)) => (k, a.trim()),
            None => (content, ""),
        };
        match (keyword, current.as_mut()) {
            ("group", None) => {
                if arg.is_empty() || arg.contains(char::is_whitespace) {
                    return Err(err(line, "group name must be a single word".into()));
                }
                if !names.insert(arg.to_string()) {
                    return Err(Error::DuplicateName(arg.to_string()));
                }
                current = Some(Stanza {
                    name: arg.to_string(),
                    line,
                    degree: None,
                    gens: Vec::new(),
                });
            }
            ("group", Some(s)) => {
                return Err(err(line, format!("group `{}` is missing `end`", s.name)));
            }
            ("degree", Some(s)) => {
                if s.degree.is_some() {
                    return Err(err(line, "degree given twice".into()));
                }
                let d: usize = arg
                    .parse()
                    .map_err(|_| err(line, format!("invalid degree `{arg}`")))?;
                if d == 0 {
                    return Err(err(line, "degree must be positive".into()));
                }
                s.degree = Some(d);
            }
            ("gen", Some(s)) => {
                let d = s
                    .degree
                    .ok_or_else(|| err(line, "`gen` before `degree`".into()))?;
                s.gens.push(parse_cycles(arg, d).map_err(|m| err(line, m))?);
            }
            ("end", Some(_)) => {
                let s = current.take().unwrap();
                let degree = s
                    .degree
                    .ok_or_else(|| err(s.line, format!("group `{}` has no degree", s.name)))?;
                if s.gens.is_empty() {
                    return Err(err(line, format!("group `{}` has no generators", s.name)));
                }
                let group = Group::new(degree, s.gens)?;
                out.push(GroupRecord::from_group(s.name, source, group));
            }
            ("degree" | "gen" | "end", None) => {
                return Err(err(line, format!("`{keyword}` outside a group stanza")));
            }
            _ => return Err(err(line, format!("unknown keyword `{keyword}`"))),
        }
    }
    if let Some(s) = current {
        return Err(err(
            last_line,
            format!("group `{}` is missing `end`", s.name),
        ));
    }
    Ok(out)
}

/// Writes records back in the stanza format with canonical generators.
pub fn serialize_corpus(records: &[GroupRecord]) -> String {
    let mut out = String::new();
    for r in records {
        writeln!(out, "group {}", r.name).unwrap();
        writeln!(out, "degree {}", r.degree).unwrap();
        for g in &r.generators {
            writeln!(out, "gen {g}").unwrap();
        }
        out.push_str("end\n");
    }
    out
}

pub fn find<'a>(records: &'a [GroupRecord], name: &str) -> Result<&'a GroupRecord> {
    records
        .iter()
        .find(|r| r.name == name)
        .ok_or_else(|| Error::UnknownGroup(name.to_string()))
}

/// Rejects a name appearing twice across concatenated corpora.
pub fn check_unique(records: &[GroupRecord]) -> Result<()> {
    let mut names = BTreeSet::new();
    for r in records {
        if !names.insert(r.name.as_str()) {
            return Err(Error::DuplicateName(r.name.clone()));
        }
    }
    Ok(())
}

fn fixed(degree: usize, gens: &[&str]) -> Group {
    let perms = gens
        .iter()
        .map(|g| parse_cycles(g, degree).expect("builtin generator"))
        .collect();
    Group::new(degree, perms).expect("builtin group")
}

fn std(family: &str, n: u64) -> Group {
    standard_group(family, n).expect("builtin family")
}

fn times(a: Group, b: Group) -> Group {
    a.direct_product(&b).expect("builtin product")
}

/// The builtin groups, in report order. Every order is at most 600.
pub fn builtin_corpus() -> Vec<GroupRecord> {
    let mut groups: Vec<(String, Group)> = (1..=12)
        .map(|n| (format!("C{n}"), std("cyclic", n)))
        .collect();
    groups.extend([
        ("V4".to_string(), times(std("cyclic", 2), std("cyclic", 2))),
        (
            "C2xC2xC2".into(),
            times(times(std("cyclic", 2), std("cyclic", 2)), std("cyclic", 2)),
        ),
        ("S3".into(), std("symmetric", 3)),
        ("S4".into(), std("symmetric", 4)),
        ("S5".into(), std("symmetric", 5)),
        ("A4".into(), std("alternating", 4)),
        ("A5".into(), std("alternating", 5)),
        ("D8".into(), std("dihedral", 4)),
        ("D10".into(), std("dihedral", 5)),
        ("D12".into(), std("dihedral", 6)),
        ("Q8".into(), std("quaternion", 8)),
        ("Q12".into(), std("quaternion", 12)),
        ("Q16".into(), std("quaternion", 16)),
        ("SL(2,3)".into(), std("sl_2_3", 3)),
        ("Hol(C5)".into(), std("holomorph_cyclic_prime", 5)),
        ("Hol(C7)".into(), std("holomorph_cyclic_prime", 7)),
        ("Hol(C11)".into(), std("holomorph_cyclic_prime", 11)),
        (
            "C7:C3".into(),
            fixed(7, &["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"]),
        ),
        (
            "GL(3,2)".into(),
            fixed(7, &["(1,2,3,4,5,6,7)", "(2,3)(4,7)"]),
        ),
        (
            "Q8xC3".into(),
            times(std("quaternion", 8), std("cyclic", 3)),
        ),
        ("S3xC5".into(), times(std("symmetric", 3), std("cyclic", 5))),
        (
            "A4xC2".into(),
            times(std("alternating", 4), std("cyclic", 2)),
        ),
        ("D8xC9".into(), times(std("dihedral", 4), std("cyclic", 9))),
        (
            "S3xS3".into(),
            times(std("symmetric", 3), std("symmetric", 3)),
        ),
        (
            "A4xC3".into(),
            times(std("alternating", 4), std("cyclic", 3)),
        ),
        (
            "Q8xC5".into(),
            times(std("quaternion", 8), std("cyclic", 5)),
        ),
        (
            "SL(2,3)xC5".into(),
            times(std("sl_2_3", 3), std("cyclic", 5)),
        ),
        (
            "Hol(C7)xC5".into(),
            times(std("holomorph_cyclic_prime", 7), std("cyclic", 5)),
        ),
        (
            "A5xC2".into(),
            times(std("alternating", 5), std("cyclic", 2)),
        ),
    ]);
    groups
        .into_iter()
        .map(|(name, g)| GroupRecord::from_group(name, Source::Builtin, g))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn parse_err(text: &str) -> Error {
        parse_corpus(text, Source::File).unwrap_err()
    }

    #[test]
    fn parses_s3_stanza() {
        let text = "# a comment\n\ngroup S3\ndegree 3\ngen (1,2)\ngen (1,2,3)  # trailing\nend\n";
        let c = parse_corpus(text, Source::File).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].name, "S3");
        assert_eq!(*c[0].group.order(), BigUint::from(6u32));
        assert_eq!(c[0].generators, vec!["(1,2)", "(1,2,3)"]);
    }

    #[test]
    fn rejects_malformed_input() {
        let base = |g: &str| format!("group G\ndegree 3\ngen {g}\nend\n");
        match parse_err(&base("(1,1,2)")) {
            Error::Parse { line: 3, message } => assert!(message.contains("repeated"), "{message}"),
            e => panic!("{e:?}"),
        }
        match parse_err(&base("(1,4)")) {
            Error::Parse { line: 3, message } => {
                assert!(message.contains("exceeds degree"), "{message}")
            }
            e => panic!("{e:?}"),
        }
        assert!(matches!(
            parse_err(&base("(1 2)")),
            Error::Parse { line: 3, .. }
        ));
        assert!(matches!(
            parse_err(&base("1,2")),
            Error::Parse { line: 3, .. }
        ));
        assert!(matches!(
            parse_err(&base("(1,2")),
            Error::Parse { line: 3, .. }
        ));
        assert!(matches!(
            parse_err("gen (1,2)\n"),
            Error::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_err("group G\ngen (1,2)\nend\n"),
            Error::Parse { line: 2, .. }
        ));
        assert!(matches!(
            parse_err("group G\ndegree 2\n"),
            Error::Parse { line: 2, .. }
        ));
        assert!(matches!(
            parse_err("group G\ndegree 2\nend\n"),
            Error::Parse { line: 3, .. }
        ));
        assert!(matches!(
            parse_err("frobnicate\n"),
            Error::Parse { line: 1, .. }
        ));
        assert_eq!(
            parse_err("group G\ndegree 2\ngen (1,2)\nend\ngroup G\n"),
            Error::DuplicateName("G".into())
        );
    }

    #[test]
    fn empty_text_is_empty_corpus() {
        assert!(parse_corpus("", Source::File).unwrap().is_empty());
        assert!(parse_corpus("# nothing\n\n", Source::File)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn canonical_form_normalizes_rotation_and_order() {
        let c = parse_corpus(
            "group G\ndegree 6\ngen (5,4)( 3 ,1,2)()\ngen ()\nend\n",
            Source::File,
        )
        .unwrap();
        assert_eq!(c[0].generators, vec!["(1,2,3)(4,5)", "()"]);
    }

    #[test]
    fn builtin_round_trips() {
        let corpus = builtin_corpus();
        let text = serialize_corpus(&corpus);
        let again = parse_corpus(&text, Source::Builtin).unwrap();
        assert_eq!(corpus.len(), again.len());
        for (a, b) in corpus.iter().zip(&again) {
            assert_eq!(a.name, b.name);
            assert_eq!(a.generators, b.generators);
            assert_eq!(a.group.order(), b.group.order());
        }
        assert_eq!(serialize_corpus(&again), text);
    }

    #[test]
    fn builtin_contents() {
        let corpus = builtin_corpus();
        assert!(corpus.len() >= 25);
        check_unique(&corpus).unwrap();
        let order = |name: &str| find(&corpus, name).unwrap().group.order().clone();
        for (name, n) in [
            ("Hol(C7)", 42u32),
            ("C7:C3", 21),
            ("SL(2,3)", 24),
            ("D8", 8),
            ("D12", 12),
            ("Q8xC3", 24),
            ("S3xC5", 30),
            ("A4xC2", 24),
            ("D8xC9", 72),
            ("GL(3,2)", 168),
        ] {
            assert_eq!(order(name), BigUint::from(n), "{name}");
        }
        for r in &corpus {
            assert!(*r.group.order() <= BigUint::from(600u32), "{}", r.name);
            assert!(r.group.is_enumerated());
        }
        assert!(find(&corpus, "nope").is_err());
    }
}
