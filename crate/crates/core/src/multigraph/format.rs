//! Text edge-list format shared with the CLI.
//!
//! First non-comment line is `n m`; the following `m` non-comment lines are
//! `u v` with 0-based node ids. A repeated `u v` line encodes a parallel
//! edge. Lines starting with `#` are comments.

use crate::error::{Error, Result};

use super::Multigraph;

impl Multigraph {
    pub fn parse_edge_list(text: &str) -> Result<Multigraph> {
        let mut data_lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (line_no, header) = data_lines
            .next()
            .ok_or_else(|| Error::Parse {
                line: 0,
                message: "empty input, expected a header line `n m`".into(),
            })?;
        let mut it = header.split_whitespace();
        let n: usize = parse_field(it.next(), line_no, "node count")?;
        let m: usize = parse_field(it.next(), line_no, "edge count")?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line: line_no,
                message: "header must be exactly `n m`".into(),
            });
        }

        let mut g = Multigraph::new(n);
        for _ in 0..m {
            let (line_no, line) = data_lines.next().ok_or_else(|| Error::Parse {
                line: 0,
                message: format!("expected {m} edge lines, input ended early"),
            })?;
            let mut it = line.split_whitespace();
            let u: usize = parse_field(it.next(), line_no, "edge endpoint")?;
            let v: usize = parse_field(it.next(), line_no, "edge endpoint")?;
            if it.next().is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    message: "edge line must be exactly `u v`".into(),
                });
            }
            g.add_edge(u, v).map_err(|e| Error::Parse {
                line: line_no,
                message: e.to_string(),
            })?;
        }
        if let Some((line_no, _)) = data_lines.next() {
            return Err(Error::Parse {
                line: line_no,
                message: "trailing data after the declared edge count".into(),
            });
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.node_count(), self.edge_count());
        for e in self.edges() {
            out.push_str(&format!("{} {}\n", e.u, e.v));
        }
        out
    }
}

fn parse_field(field: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let field = field.ok_or_else(|| Error::Parse {
        line,
        message: format!("missing {what}"),
    })?;
    field.parse().map_err(|_| Error::Parse {
        line,
        message: format!("{what} `{field}` is not a non-negative integer"),
    })
}
