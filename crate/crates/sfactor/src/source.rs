//! Group arguments as given on the command line: catalog descriptors plus
//! `file:<path>` for table files.

use std::path::PathBuf;
use std::str::FromStr;

use sfactor_core::group::{BuiltGroup, GroupError};
use sfactor_core::{EnumerableGroup, FiniteGroup, Group, GroupDescriptor};

use crate::table::{read_group_table, TableFileError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSource {
    Catalog(GroupDescriptor),
    File(PathBuf),
}

#[derive(Debug, thiserror::Error)]
pub enum SourceError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Table(#[from] TableFileError),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
}

impl FromStr for GroupSource {
    type Err = SourceError;

    fn from_str(s: &str) -> Result<Self, SourceError> {
        match s.trim().strip_prefix("file:") {
            Some(path) if !path.is_empty() => Ok(GroupSource::File(PathBuf::from(path))),
            Some(_) => Err(GroupError::InvalidDescriptor("file: needs a path".into()).into()),
            None => Ok(GroupSource::Catalog(s.parse()?)),
        }
    }
}

impl std::fmt::Display for GroupSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupSource::Catalog(d) => write!(f, "{d}"),
            GroupSource::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

/// A built group together with the descriptor it came from.
#[derive(Clone, Debug)]
pub struct LoadedGroup {
    pub label: String,
    pub group: BuiltGroup,
}

impl LoadedGroup {
    pub fn finite(&self) -> Option<&FiniteGroup> {
        match &self.group {
            BuiltGroup::Finite(g) => Some(g),
            BuiltGroup::Enumerable(_) => None,
        }
    }

    pub fn enumerable(&self) -> Option<EnumerableGroup> {
        match &self.group {
            BuiltGroup::Finite(_) => None,
            BuiltGroup::Enumerable(g) => Some(*g),
        }
    }
}

impl GroupSource {
    pub fn load(&self) -> Result<LoadedGroup, SourceError> {
        let group = match self {
            GroupSource::Catalog(d) => d.build()?,
            GroupSource::File(p) => BuiltGroup::Finite(read_group_table(p)?),
        };
        Ok(LoadedGroup { label: self.to_string(), group })
    }
}

/// Splits a comma-separated element list, ignoring commas inside
/// parentheses so that labels like `(1,-2)` survive.
pub fn split_elements(list: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in list.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(list[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(list[start..].trim());
    out.retain(|t| !t.is_empty());
    out
}

/// Resolves names or indices of a finite group.
pub fn finite_elements(g: &FiniteGroup, list: &str) -> Result<Vec<usize>, SourceError> {
    split_elements(list)
        .into_iter()
        .map(|t| g.resolve(t).ok_or_else(|| SourceError::UnknownElement(t.to_string())))
        .collect()
}

pub fn enumerable_elements(g: EnumerableGroup, list: &str) -> Result<Vec<<EnumerableGroup as Group>::Elem>, SourceError> {
    split_elements(list).into_iter().map(|t| Ok(g.parse_code(t)?)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sources() {
        assert_eq!("cyclic:4".parse::<GroupSource>().unwrap(), GroupSource::Catalog(GroupDescriptor::Cyclic(4)));
        assert_eq!("file:/tmp/g.txt".parse::<GroupSource>().unwrap(), GroupSource::File("/tmp/g.txt".into()));
        assert!("file:".parse::<GroupSource>().is_err());
        assert!("nonsense".parse::<GroupSource>().is_err());
    }

    #[test]
    fn splitting_respects_parentheses() {
        assert_eq!(split_elements("(1,2), (0,-1),e"), vec!["(1,2)", "(0,-1)", "e"]);
        assert_eq!(split_elements(" 0, 1 ,"), vec!["0", "1"]);
    }

    #[test]
    fn resolves_names_and_indices() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let v = finite_elements(&s3, "e,(12),5").unwrap();
        assert_eq!(v[0], 0);
        assert_eq!(v[1], s3.resolve("(12)").unwrap());
        assert_eq!(v[2], 5);
        assert!(finite_elements(&s3, "e,(1234)").is_err());
    }
}
