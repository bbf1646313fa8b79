//! Serialization: JSON poset documents, DOT export of Hasse diagrams, and
//! sequence-grid rendering.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chains::{Axis, GridCell, SequenceGrid};
use crate::error::{Error, Result};
use crate::poset::Poset;

pub const DOCUMENT_VERSION: &str = "1";

/// On-disk form of a poset: the cover list determines the order uniquely,
/// and the full relation is recomputed by transitive closure on load.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PosetDocument {
    pub version: String,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub covers: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub meta: BTreeMap<String, serde_json::Value>,
}

impl PosetDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<PosetDocument> {
        serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
    }
}

/// Serialize a poset into a document (covers only, plus labels).
pub fn write_poset(p: &Poset) -> PosetDocument {
    PosetDocument {
        version: DOCUMENT_VERSION.to_string(),
        size: p.size(),
        labels: p.labels().map(<[String]>::to_vec),
        covers: p.covers().edges,
        meta: BTreeMap::new(),
    }
}

/// Rebuild a poset from a document; the order is the reflexive-transitive
/// closure of the cover pairs, and cycles or bad ids are rejected.
pub fn read_poset(doc: &PosetDocument) -> Result<Poset> {
    let p = Poset::from_relation(doc.size, &doc.covers)?;
    match &doc.labels {
        Some(labels) if labels.len() != doc.size => Err(Error::Parse(format!(
            "field labels: expected {} entries, found {}",
            doc.size,
            labels.len()
        ))),
        Some(labels) => Ok(p.with_labels(labels.clone())),
        None => Ok(p),
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Render the Hasse diagram as a DOT digraph: one `x -> y` edge per cover
/// pair (low to high), node labels from the poset labels or the ids, ids
/// ascending throughout.
pub fn export_dot(p: &Poset) -> String {
    let mut out = String::from("digraph poset {\n");
    for x in 0..p.size() {
        let label = p.label(x).map(dot_escape).unwrap_or_else(|| x.to_string());
        out.push_str(&format!("  {x} [label=\"{label}\"];\n"));
    }
    for (x, y) in p.covers().edges {
        out.push_str(&format!("  {x} -> {y};\n"));
    }
    out.push_str("}\n");
    out
}

/// Output format for [`render_grid`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridFormat {
    /// The row layout of the published tables.
    Table,
    /// OEIS b-file lines (`index value`), one block per sequence.
    BFile,
    Csv,
    Json,
}

fn cell_str(cell: &GridCell) -> String {
    match cell {
        GridCell::Exact(v) => v.to_string(),
        GridCell::OverBudget => "OVER_BUDGET".to_string(),
    }
}

/// Names of the outer and sequence parameters for an axis.
fn axis_names(axis: Axis) -> (&'static str, &'static str) {
    match axis {
        Axis::Column => ("m", "n"),
        Axis::Row => ("n", "m"),
    }
}

#[derive(Serialize)]
struct GridJson<'a> {
    axis: &'a str,
    outer_parameter: &'a str,
    sequence_parameter: &'a str,
    outer: &'a [usize],
    k: &'a [usize],
    seq: &'a [usize],
    cells: Vec<Vec<Vec<String>>>,
}

/// Render a sequence grid. The table format mirrors the published tables:
/// an `n=...` (or `m=...`) header, one `m=i:` (or `n=i:`) group per outer
/// value, and one comma-separated `k=j` row per iteration depth.
pub fn render_grid(g: &SequenceGrid, format: GridFormat) -> String {
    let (outer_name, seq_name) = axis_names(g.axis);
    match format {
        GridFormat::Table => {
            let mut out = String::new();
            let seq_list: Vec<String> = g.seq.iter().map(usize::to_string).collect();
            out.push_str(&format!("{}={}\n", seq_name, seq_list.join(",")));
            for (oi, &o) in g.outer.iter().enumerate() {
                out.push_str(&format!("{outer_name}={o}:\n"));
                for (ki, &k) in g.inner.iter().enumerate() {
                    let row: Vec<String> = g.cells[oi][ki].iter().map(cell_str).collect();
                    out.push_str(&format!("k={k}  {}\n", row.join(", ")));
                }
            }
            out
        }
        GridFormat::BFile => {
            let mut out = String::new();
            let single = g.outer.len() == 1 && g.inner.len() == 1;
            for (oi, &o) in g.outer.iter().enumerate() {
                for (ki, &k) in g.inner.iter().enumerate() {
                    if !single {
                        out.push_str(&format!(
                            "# axis={} {outer_name}={o} k={k}\n",
                            g.axis.as_str()
                        ));
                    }
                    for (si, cell) in g.cells[oi][ki].iter().enumerate() {
                        out.push_str(&format!("{} {}\n", g.seq[si], cell_str(cell)));
                    }
                }
            }
            out
        }
        GridFormat::Csv => {
            let mut out = String::new();
            let headers: Vec<String> = g.seq.iter().map(|s| format!("{seq_name}={s}")).collect();
            out.push_str(&format!("{outer_name},k,{}\n", headers.join(",")));
            for (oi, &o) in g.outer.iter().enumerate() {
                for (ki, &k) in g.inner.iter().enumerate() {
                    let row: Vec<String> = g.cells[oi][ki].iter().map(cell_str).collect();
                    out.push_str(&format!("{o},{k},{}\n", row.join(",")));
                }
            }
            out
        }
        GridFormat::Json => {
            let cells = g
                .cells
                .iter()
                .map(|per_k| {
                    per_k
                        .iter()
                        .map(|row| row.iter().map(cell_str).collect())
                        .collect()
                })
                .collect();
            let doc = GridJson {
                axis: g.axis.as_str(),
                outer_parameter: outer_name,
                sequence_parameter: seq_name,
                outer: &g.outer,
                k: &g.inner,
                seq: &g.seq,
                cells,
            };
            let mut text =
                serde_json::to_string_pretty(&doc).expect("grid serialization cannot fail");
            text.push('\n');
            text
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::{grid, GridSpec};
    use crate::hypercube::{power, star_sublattice};
    use crate::poset::DEFAULT_ELEMENT_BUDGET;

    const B: usize = DEFAULT_ELEMENT_BUDGET;

    #[test]
    fn singleton_round_trip() {
        let p = Poset::from_relation(1, &[]).unwrap();
        let doc = write_poset(&p);
        let q = read_poset(&doc).unwrap();
        assert!(p.same_order(&q));
    }

    #[test]
    fn diamond_document_shape() {
        let p = power(1, 2, B).unwrap().poset;
        let doc = write_poset(&p);
        assert_eq!(doc.size, 4);
        assert_eq!(doc.covers.len(), 4);
        let text = doc.to_json();
        let parsed = PosetDocument::from_json(&text).unwrap();
        assert_eq!(parsed, doc);
        let q = read_poset(&parsed).unwrap();
        assert!(p.same_order(&q));
        assert_eq!(q.label(0), Some("00"));
    }

    #[test]
    fn stacked_document_regenerates_chain_count() {
        let rep = star_sublattice(1, 2, 1, B).unwrap();
        let doc = write_poset(&rep.poset);
        let q = read_poset(&doc).unwrap();
        assert_eq!(
            crate::chains::count_maximal_chains(&q).unwrap(),
            num_bigint::BigUint::from(3u32)
        );
    }

    #[test]
    fn bad_documents_are_rejected() {
        let doc = PosetDocument {
            version: DOCUMENT_VERSION.into(),
            size: 2,
            labels: None,
            covers: vec![(0, 1), (1, 0)],
            meta: BTreeMap::new(),
        };
        assert!(matches!(read_poset(&doc), Err(Error::Cycle { .. })));
        assert!(matches!(
            PosetDocument::from_json("{ not json"),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn dot_output_is_deterministic() {
        let p = Poset::from_relation(3, &[(0, 1), (1, 2)]).unwrap();
        let dot = export_dot(&p);
        assert_eq!(dot, export_dot(&p));
        assert_eq!(dot.matches("->").count(), 2);
        let diamond = power(1, 2, B).unwrap().poset;
        assert_eq!(export_dot(&diamond).matches("->").count(), 4);
    }

    #[test]
    fn dot_of_the_stacked_triangle() {
        let s = star_sublattice(2, 2, 0, B).unwrap();
        let dot = export_dot(&s.poset);
        assert_eq!(dot.matches("->").count(), 6);
        assert!(dot.contains("label=\"00\""));
        assert!(dot.contains("label=\"22\""));
    }

    #[test]
    fn table_rendering_matches_published_digits() {
        let g = grid(&GridSpec {
            axis: Axis::Column,
            k: (1, 1),
            n: (0, 5),
            m: (1, 1),
            budget: B,
        })
        .unwrap();
        let table = render_grid(&g, GridFormat::Table);
        assert!(table.contains("k=1  1, 1, 3, 15, 105, 945"));

        let g = grid(&GridSpec {
            axis: Axis::Row,
            k: (0, 0),
            n: (2, 2),
            m: (0, 5),
            budget: B,
        })
        .unwrap();
        let table = render_grid(&g, GridFormat::Table);
        assert!(table.contains("k=0  1, 2, 6, 20, 70, 252"));
    }

    #[test]
    fn empty_grid_renders_header_only() {
        let g = SequenceGrid {
            axis: Axis::Column,
            outer: vec![],
            inner: vec![],
            seq: vec![],
            cells: vec![],
        };
        assert_eq!(render_grid(&g, GridFormat::Table), "n=\n");
    }

    #[test]
    fn bfile_lines_are_index_value() {
        let g = grid(&GridSpec {
            axis: Axis::Column,
            k: (1, 1),
            n: (0, 3),
            m: (1, 1),
            budget: B,
        })
        .unwrap();
        let bfile = render_grid(&g, GridFormat::BFile);
        assert_eq!(bfile, "0 1\n1 1\n2 3\n3 15\n");
    }
}
