//! Golden sequences, one per line:
//!
//! ```text
//! id: v0,v1,... # [KIND] or [KIND: detail]
//! ```
//!
//! KIND is PAPER, DERIVED or TRIVIAL. Blank lines and lines starting with
//! `#` are skipped. A value line without a tag is rejected.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Paper,
    Derived,
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub values: Vec<u64>,
    pub provenance: Provenance,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Fixtures(BTreeMap<String, Fixture>);

impl Fixtures {
    pub fn get(&self, id: &str) -> Option<&Fixture> {
        self.0.get(id)
    }

    /// Panics on a missing id; ids are compiled in alongside the file.
    pub fn values(&self, id: &str) -> &[u64] {
        &self.0.get(id).unwrap_or_else(|| panic!("no fixture `{id}`")).values
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Fixture)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn parse_tag(tag: &str) -> Result<(Provenance, Option<String>)> {
    let inner = tag
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::format(tag, "expected a tag such as [PAPER]"))?;
    let (kind, detail) = match inner.split_once(':') {
        Some((k, d)) => (k.trim(), Some(d.trim().to_string())),
        None => (inner.trim(), None),
    };
    let kind = match kind {
        "PAPER" => Provenance::Paper,
        "DERIVED" => Provenance::Derived,
        "TRIVIAL" => Provenance::Trivial,
        other => return Err(Error::format(other, "unknown provenance")),
    };
    Ok((kind, detail))
}

impl FromStr for Fixtures {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for line in s.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (body, tag) = line
                .split_once('#')
                .ok_or_else(|| Error::format(line, "fixture line has no provenance tag"))?;
            let (provenance, detail) = parse_tag(tag.trim())?;
            let (id, values) = body
                .split_once(':')
                .ok_or_else(|| Error::format(body.trim(), "expected `id: values`"))?;
            let values = values
                .split(',')
                .map(|v| v.trim().parse::<u64>().map_err(|_| Error::format(v.trim(), "not a count")))
                .collect::<Result<Vec<_>>>()?;
            let id = id.trim().to_string();
            if map.insert(id.clone(), Fixture { values, provenance, detail }).is_some() {
                return Err(Error::format(id, "duplicate fixture id"));
            }
        }
        Ok(Fixtures(map))
    }
}

/// The compiled-in golden file.
pub fn golden() -> &'static Fixtures {
    static GOLDEN: OnceLock<Fixtures> = OnceLock::new();
    GOLDEN.get_or_init(|| include_str!("../../fixtures/golden.txt").parse().expect("golden.txt parses"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_file_is_fully_tagged() {
        let g = golden();
        assert!(g.len() > 10);
        for (id, f) in g.iter() {
            assert!(!f.values.is_empty(), "{id}");
            if f.provenance == Provenance::Derived {
                assert!(f.detail.is_some(), "derived fixture {id} must say how it was derived");
            }
        }
    }

    #[test]
    fn untagged_lines_are_rejected() {
        let err = "a: 1,2,3".parse::<Fixtures>().unwrap_err();
        assert!(err.to_string().contains("tag"), "{err}");
        assert!("a: 1,2 # PAPER".parse::<Fixtures>().is_err());
        assert!("a: 1,2 # [GUESS]".parse::<Fixtures>().is_err());
        assert!("a: 1,x # [TRIVIAL]".parse::<Fixtures>().is_err());
        assert!("a: 1 # [TRIVIAL]\na: 2 # [TRIVIAL]".parse::<Fixtures>().is_err());
    }

    #[test]
    fn parses_tags() {
        let f: Fixtures = "# comment\n\nx: 1, 2 # [DERIVED: direct count]\ny: 5 # [PAPER]".parse().unwrap();
        assert_eq!(f.values("x"), &[1, 2]);
        assert_eq!(f.get("x").unwrap().detail.as_deref(), Some("direct count"));
        assert_eq!(f.get("y").unwrap().provenance, Provenance::Paper);
    }
}
