//! JSON and DOT serialization of graphs.
//!
//! Both formats carry every id, label, weight and inverse, so
//! `from_json(to_json(g)) == g` and `from_dot(to_dot(g)) == g` exactly.
//! Weights equal to 1 are omitted.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, GraphKind, Vertex};

#[derive(Debug, Serialize, Deserialize)]
struct JsonGraph {
    directed: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    segment: bool,
    vertices: Vec<JsonVertex>,
    edges: Vec<JsonEdge>,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonVertex {
    id: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonEdge {
    id: usize,
    src: usize,
    dst: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inverse: Option<usize>,
}

pub fn to_json(g: &Graph) -> String {
    let doc = JsonGraph {
        directed: g.is_oriented(),
        segment: g.is_segment(),
        vertices: g
            .vertices()
            .iter()
            .map(|v| JsonVertex {
                id: v.id,
                name: v.name.clone(),
            })
            .collect(),
        edges: g
            .edges()
            .iter()
            .map(|e| JsonEdge {
                id: e.id,
                src: e.src,
                dst: e.dst,
                label: e.label.clone(),
                weight: (e.weight != 1.0).then_some(e.weight),
                inverse: e.inverse,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("graph serialization cannot fail")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let doc: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut vertices = doc.vertices;
    vertices.sort_by_key(|v| v.id);
    let mut edges = doc.edges;
    edges.sort_by_key(|e| e.id);
    let kind = if doc.directed {
        GraphKind::Oriented
    } else {
        GraphKind::Serre
    };
    let g = Graph::new(
        kind,
        vertices
            .into_iter()
            .map(|v| Vertex {
                id: v.id,
                name: v.name,
            })
            .collect(),
        edges
            .into_iter()
            .map(|e| Edge {
                id: e.id,
                src: e.src,
                dst: e.dst,
                label: e.label,
                weight: e.weight.unwrap_or(1.0),
                inverse: e.inverse,
            })
            .collect(),
    )?;
    Ok(if doc.segment { g.into_segment() } else { g })
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

pub fn to_dot(g: &Graph) -> String {
    let (header, arrow) = match g.kind() {
        GraphKind::Oriented => ("digraph", "->"),
        GraphKind::Serre => ("graph", "--"),
    };
    let mut out = format!("{header} {{\n");
    if g.is_segment() {
        out.push_str("  segment=true;\n");
    }
    for v in g.vertices() {
        match &v.name {
            Some(name) => out.push_str(&format!("  {} [label={}];\n", v.id, quote(name))),
            None => out.push_str(&format!("  {};\n", v.id)),
        }
    }
    for e in g.edges() {
        let mut attrs = vec![format!("id={}", e.id)];
        if let Some(label) = &e.label {
            attrs.push(format!("label={}", quote(label)));
        }
        if e.weight != 1.0 {
            attrs.push(format!("weight={:?}", e.weight));
        }
        if let Some(inv) = e.inverse {
            attrs.push(format!("inverse={inv}"));
        }
        out.push_str(&format!(
            "  {} {arrow} {} [{}];\n",
            e.src,
            e.dst,
            attrs.join(", ")
        ));
    }
    out.push_str("}\n");
    out
}

/// Splits `key=value, key="value"` attribute lists.
fn parse_attrs(text: &str) -> Result<Vec<(String, String)>> {
    let mut attrs = Vec::new();
    let mut chars = text.chars().peekable();
    loop {
        while chars.peek().is_some_and(|c| c.is_whitespace() || *c == ',') {
            chars.next();
        }
        if chars.peek().is_none() {
            break;
        }
        let mut key = String::new();
        while let Some(&c) = chars.peek() {
            if c == '=' {
                break;
            }
            key.push(c);
            chars.next();
        }
        if chars.next() != Some('=') {
            return Err(Error::Parse(format!("attribute `{key}` has no value")));
        }
        let mut value = String::new();
        if chars.peek() == Some(&'"') {
            chars.next();
            loop {
                match chars.next() {
                    Some('"') => break,
                    Some('\\') => match chars.next() {
                        Some('n') => value.push('\n'),
                        Some(c) => value.push(c),
                        None => return Err(Error::Parse("dangling escape".into())),
                    },
                    Some(c) => value.push(c),
                    None => return Err(Error::Parse("unterminated string".into())),
                }
            }
        } else {
            while let Some(&c) = chars.peek() {
                if c == ',' || c.is_whitespace() {
                    break;
                }
                value.push(c);
                chars.next();
            }
        }
        attrs.push((key.trim().to_string(), value));
    }
    Ok(attrs)
}

fn parse_index(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("expected an index, found `{s}`")))
}

/// Parses the DOT dialect written by [`to_dot`].
pub fn from_dot(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let (kind, arrow) = match header.trim_end_matches('{').trim() {
        "digraph" => (GraphKind::Oriented, "->"),
        "graph" => (GraphKind::Serre, "--"),
        other => return Err(Error::Parse(format!("unknown header `{other}`"))),
    };
    let mut segment = false;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for line in lines {
        if line == "}" {
            break;
        }
        let line = line
            .strip_suffix(';')
            .ok_or_else(|| Error::Parse(format!("missing `;` in `{line}`")))?;
        if line == "segment=true" {
            segment = true;
            continue;
        }
        let (head, attrs) = match line.find('[') {
            Some(i) => {
                let body = line[i + 1..]
                    .strip_suffix(']')
                    .ok_or_else(|| Error::Parse(format!("unclosed attributes in `{line}`")))?;
                (line[..i].trim(), parse_attrs(body)?)
            }
            None => (line.trim(), Vec::new()),
        };
        if let Some((src, dst)) = head.split_once(arrow) {
            let mut edge = Edge {
                id: edges.len(),
                src: parse_index(src)?,
                dst: parse_index(dst)?,
                label: None,
                weight: 1.0,
                inverse: None,
            };
            for (key, value) in attrs {
                match key.as_str() {
                    "id" => edge.id = parse_index(&value)?,
                    "label" => edge.label = Some(value),
                    "weight" => {
                        edge.weight = value
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad weight `{value}`")))?
                    }
                    "inverse" => edge.inverse = Some(parse_index(&value)?),
                    _ => {}
                }
            }
            edges.push(edge);
        } else {
            let mut vertex = Vertex {
                id: parse_index(head)?,
                name: None,
            };
            for (key, value) in attrs {
                if key == "label" {
                    vertex.name = Some(value);
                }
            }
            vertices.push(vertex);
        }
    }
    vertices.sort_by_key(|v| v.id);
    edges.sort_by_key(|e| e.id);
    let g = Graph::new(kind, vertices, edges)?;
    Ok(if segment { g.into_segment() } else { g })
}
