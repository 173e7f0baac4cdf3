//! Reading and writing hypergraphs.
//!
//! JSON: `{"vertices": ["a","b","c"], "edges": [["a","b"],["b","c"]]}`.
//! Line format: the first line lists the vertex labels, every further
//! nonblank line is one edge. Input starting with `{` is read as JSON.

use std::fs;
use std::path::Path;

use hgpoly_core::Hypergraph;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphDoc {
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<String>>,
}

impl HypergraphDoc {
    pub fn of(h: &Hypergraph) -> Self {
        HypergraphDoc { vertices: h.vertices().to_vec(), edges: h.edges().iter().map(|&e| h.labels_of(e)).collect() }
    }

    pub fn build(&self) -> Result<Hypergraph> {
        Ok(Hypergraph::validate(&self.vertices, &self.edges)?)
    }
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_lines(text)
    }
}

pub fn parse_json(text: &str) -> Result<Hypergraph> {
    let doc: HypergraphDoc = serde_json::from_str(text).map_err(|e| Error::parse("JSON hypergraph", e))?;
    doc.build()
}

pub fn parse_lines(text: &str) -> Result<Hypergraph> {
    for (k, line) in text.lines().enumerate() {
        if let Some(bad) = line.chars().find(|c| matches!(c, '{' | '}' | '[' | ']' | '"' | ',')) {
            return Err(Error::parse(
                "line-format hypergraph",
                format!("line {}: unexpected character {bad:?}", k + 1),
            ));
        }
    }
    let mut lines = text.lines();
    let Some(header) = lines.next() else {
        return Err(Error::parse("line-format hypergraph", "missing vertex line"));
    };
    let vertices: Vec<&str> = header.split_whitespace().collect();
    let edges: Vec<Vec<&str>> =
        lines.filter(|l| !l.trim().is_empty()).map(|l| l.split_whitespace().collect()).collect();
    Ok(Hypergraph::validate(&vertices, &edges)?)
}

pub fn render_json(h: &Hypergraph) -> String {
    serde_json::to_string(&HypergraphDoc::of(h)).expect("hypergraph documents always serialize")
}

pub fn render_lines(h: &Hypergraph) -> String {
    let doc = HypergraphDoc::of(h);
    let mut out = doc.vertices.join(" ");
    out.push('\n');
    for e in &doc.edges {
        out.push_str(&e.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_hypergraph(path: &Path) -> Result<Hypergraph> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    parse_hypergraph(&text).map_err(|e| match e {
        Error::Parse { message, .. } => Error::Parse { context: path.display().to_string(), message },
        other => other,
    })
}

pub fn write_hypergraph(path: &Path, h: &Hypergraph) -> Result<()> {
    fs::write(path, render_json(h) + "\n").map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

#[cfg(test)]
mod tests {
    use super::*;

    const K3: &str = r#"{"vertices": ["a","b","c"], "edges": [["a","b"],["b","c"],["a","c"]]}"#;

    #[test]
    fn json_and_lines_agree() {
        let a = parse_hypergraph(K3).unwrap();
        let b = parse_hypergraph("a b c\na b\nb c\n\na c\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_hypergraph(&render_json(&a)).unwrap(), a);
        assert_eq!(parse_hypergraph(&render_lines(&a)).unwrap(), a);
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_hypergraph(&format!("{K3} x")), Err(Error::Parse { .. })));
        assert!(matches!(parse_hypergraph(r#"{"vertices": [], "edges": [], "extra": 1}"#), Err(Error::Parse { .. })));
        assert!(matches!(parse_hypergraph("a b\na b\n{}"), Err(Error::Parse { .. })));
        assert!(matches!(parse_hypergraph(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_hypergraph("a b\na z"),
            Err(Error::Core(hgpoly_core::Error::UnknownVertexLabel { .. }))
        ));
    }

    #[test]
    fn empty_hypergraph() {
        let h = parse_hypergraph(r#"{"vertices": [], "edges": []}"#).unwrap();
        assert_eq!((h.n(), h.m()), (0, 0));
        let h = parse_hypergraph("\n").unwrap();
        assert_eq!((h.n(), h.m()), (0, 0));
    }
}
