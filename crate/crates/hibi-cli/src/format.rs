//! The poset file format: a JSON document with `elements` and `covers`, and
//! an optional `spanning_tree`. Unknown keys are rejected.
//!
//! ```json
//! {
//!   "elements": ["p1", "p2", "p3", "p4"],
//!   "covers": [["p1", "p2"], ["p3", "p2"], ["p3", "p4"]],
//!   "spanning_tree": [["bot", "p1"], ["p1", "p2"], ["p2", "top"],
//!                     ["bot", "p3"], ["p3", "p4"]]
//! }
//! ```
//!
//! Cover pairs are `[lower, upper]` over the declared elements; the optional
//! spanning tree may also name the implicit `bot` and `top` vertices.

use hibi_core::poset::{EdgeId, HasseHat, Poset};
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetFile {
    elements: Vec<String>,
    covers: Vec<(String, String)>,
    #[serde(default)]
    spanning_tree: Option<Vec<(String, String)>>,
}

/// A parsed and validated poset with the optional tree request from the file.
pub struct ParsedPoset {
    pub poset: Poset,
    pub tree_request: Option<Vec<(String, String)>>,
}

/// Parses and validates poset file content.
pub fn parse_poset(text: &str) -> Result<ParsedPoset, CliError> {
    let file: PosetFile = serde_json::from_str(text)
        .map_err(|e| CliError::validation(format!("malformed poset file: {e}")))?;
    let poset = Poset::new(&file.elements, &file.covers)
        .map_err(|e| CliError::validation(format!("invalid poset: {e}")))?;
    Ok(ParsedPoset {
        poset,
        tree_request: file.spanning_tree,
    })
}

/// Resolves endpoint-name pairs to edge ids of the graph.
pub fn resolve_tree(hat: &HasseHat, pairs: &[(String, String)]) -> Result<Vec<EdgeId>, CliError> {
    pairs
        .iter()
        .map(|(a, b)| {
            hat.edge_by_names(a, b)
                .ok_or_else(|| CliError::validation(format!("no edge {a}:{b} in the graph")))
        })
        .collect()
}

/// Parses the `--tree` flag: comma-separated `lower:upper` pairs.
pub fn parse_tree_flag(flag: &str) -> Result<Vec<(String, String)>, CliError> {
    flag.split(',')
        .map(|pair| {
            let mut it = pair.trim().splitn(2, ':');
            match (it.next(), it.next()) {
                (Some(a), Some(b)) if !a.is_empty() && !b.is_empty() => {
                    Ok((a.to_string(), b.to_string()))
                }
                _ => Err(CliError::validation(format!(
                    "bad tree edge {pair:?}; expected lower:upper"
                ))),
            }
        })
        .collect()
}

/// Parses the `--class` flag: comma-separated integers.
pub fn parse_class_flag(flag: &str) -> Result<Vec<i64>, CliError> {
    if flag.trim().is_empty() {
        return Ok(Vec::new());
    }
    flag.split(',')
        .map(|v| {
            v.trim()
                .parse::<i64>()
                .map_err(|_| CliError::validation(format!("bad class entry {v:?}")))
        })
        .collect()
}

/// Content digest of the canonical poset data, for stable report headers.
pub fn poset_digest(poset: &Poset) -> String {
    let mut hasher = Sha256::new();
    hasher.update(b"elements:");
    for el in poset.elements() {
        hasher.update(el.as_bytes());
        hasher.update(b",");
    }
    hasher.update(b";covers:");
    for (lo, hi) in poset.cover_names() {
        hasher.update(lo.as_bytes());
        hasher.update(b"<");
        hasher.update(hi.as_bytes());
        hasher.update(b",");
    }
    let out = hasher.finalize();
    out.iter().take(6).map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_valid_file() {
        let text = r#"{
            "elements": ["a", "b"],
            "covers": [["a", "b"]]
        }"#;
        let parsed = parse_poset(text).unwrap();
        assert_eq!(parsed.poset.size(), 2);
        assert!(parsed.tree_request.is_none());
    }

    #[test]
    fn rejects_unknown_keys() {
        let text = r#"{"elements": [], "covers": [], "extra": 1}"#;
        let err = parse_poset(text).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn rejects_malformed_json_and_bad_posets() {
        assert!(parse_poset("not json").is_err());
        let cycle = r#"{"elements": ["a", "b"], "covers": [["a","b"],["b","a"]]}"#;
        assert!(parse_poset(cycle).is_err());
    }

    #[test]
    fn tree_flag_roundtrip() {
        let pairs = parse_tree_flag("bot:p1,p1:p2").unwrap();
        assert_eq!(pairs.len(), 2);
        assert!(parse_tree_flag("oops").is_err());
        assert_eq!(parse_class_flag("2,-1").unwrap(), vec![2, -1]);
        assert!(parse_class_flag("x").is_err());
    }

    #[test]
    fn digest_is_stable_and_content_sensitive() {
        let a = parse_poset(r#"{"elements": ["a"], "covers": []}"#).unwrap();
        let b = parse_poset(r#"{"elements": ["b"], "covers": []}"#).unwrap();
        assert_eq!(poset_digest(&a.poset), poset_digest(&a.poset));
        assert_ne!(poset_digest(&a.poset), poset_digest(&b.poset));
    }
}
