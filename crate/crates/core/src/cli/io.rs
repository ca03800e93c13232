use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::CliError;

/// Labeling file: `{"n": 8, "t": 2, "k": 3, "labels": [...]}`, with `diffs`
/// in place of `t` for general difference sets. Unknown keys are ignored so
/// the output of `construct --format json` can be fed back directly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diffs: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    pub labels: Vec<u64>,
}

impl LabelingFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }
}

/// Parses `A`, `A..B`, `A..=B`, `A-B` or `A:B` as an inclusive range.
/// Empty ranges are rejected.
pub fn parse_range<T>(s: &str) -> Result<RangeInclusive<T>, CliError>
where
    T: FromStr + PartialOrd + Copy + std::fmt::Display,
{
    let num = |p: &str| {
        p.trim()
            .parse::<T>()
            .map_err(|_| CliError::Usage(format!("invalid range bound {p:?} in {s:?}")))
    };
    let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = s.split_once("..") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = s.split_once(['-', ':']) {
        (num(a)?, num(b)?)
    } else {
        let v = num(s)?;
        (v, v)
    };
    if lo > hi {
        return Err(CliError::Usage(format!("empty range {s:?} ({lo} > {hi})")));
    }
    Ok(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_forms() {
        assert_eq!(parse_range::<usize>("3..20").unwrap(), 3..=20);
        assert_eq!(parse_range::<usize>("3..=20").unwrap(), 3..=20);
        assert_eq!(parse_range::<usize>("3-20").unwrap(), 3..=20);
        assert_eq!(parse_range::<u64>("0:3").unwrap(), 0..=3);
        assert_eq!(parse_range::<u64>("8").unwrap(), 8..=8);
        assert!(parse_range::<usize>("9..3").is_err());
        assert!(parse_range::<usize>("a..3").is_err());
        assert!(parse_range::<usize>("").is_err());
    }

    #[test]
    fn labeling_file_ignores_extra_keys() {
        let f = LabelingFile::parse(r#"{"n":3,"t":1,"k":1,"labels":[0,1,0],"weight":1}"#).unwrap();
        assert_eq!(f.labels, vec![0, 1, 0]);
        assert_eq!(f.t, Some(1));
        assert!(LabelingFile::parse("{\"n\": 3").is_err());
        assert!(LabelingFile::parse(r#"{"labels":[-1]}"#).is_err());
    }
}
