//! Bundled reference tables of small vertex-faithful regular polyhedra.

use serde::{Deserialize, Serialize};
use thiserror::Error;

const SMALL: &str = include_str!("../data/vf_small.tsv");
const MEDIUM: &str = include_str!("../data/vf_medium.tsv");

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("table line {line}: {msg}")]
pub struct TableError {
    pub line: usize,
    pub msg: String,
}

/// One published row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub v: u64,
    /// Atlas name such as `{6,4}*48b`.
    pub name: String,
    #[serde(rename = "type")]
    pub schlafli: [u64; 2],
    pub order: u64,
    pub z1: u64,
    pub h: u64,
    pub z2: u64,
    pub universal: bool,
    pub also_known_as: String,
}

impl TableRow {
    pub fn signature(&self) -> (u64, u64, u64, u64, u64, u64) {
        (self.schlafli[0], self.schlafli[1], self.order, self.z1, self.h, self.z2)
    }
}

/// A table together with the vertex counts it is complete for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceTable {
    pub name: &'static str,
    pub vertex_counts: Vec<u64>,
    pub rows: Vec<TableRow>,
}

impl ReferenceTable {
    pub fn rows_for(&self, v: u64) -> impl Iterator<Item = &TableRow> {
        self.rows.iter().filter(move |r| r.v == v)
    }
}

/// Vertex counts 4 through 10.
pub fn table1() -> ReferenceTable {
    ReferenceTable { name: "table1", vertex_counts: (4..=10).collect(), rows: parse(SMALL).expect("bundled table parses") }
}

/// Vertex counts 12 through 15.
pub fn table2() -> ReferenceTable {
    ReferenceTable { name: "table2", vertex_counts: (12..=15).collect(), rows: parse(MEDIUM).expect("bundled table parses") }
}

/// The bundled table covering `v`, if any.
pub fn table_for(v: u64) -> Option<ReferenceTable> {
    [table1(), table2()].into_iter().find(|t| t.vertex_counts.contains(&v))
}

/// Parses tab-separated rows; `#` starts a comment line.
pub fn parse(text: &str) -> Result<Vec<TableRow>, TableError> {
    let mut rows = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let err = |msg: &str| TableError { line: k + 1, msg: msg.to_string() };
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() < 6 {
            return Err(err("expected at least 6 tab-separated columns"));
        }
        let num = |s: &str| s.trim().parse::<u64>().map_err(|_| err(&format!("not a number: {s:?}")));
        let (schlafli, order) = parse_name(cols[1]).ok_or_else(|| err(&format!("bad atlas name {:?}", cols[1])))?;
        let universal = match cols[5].trim() {
            "Y" => true,
            "N" => false,
            other => return Err(err(&format!("universal flag must be Y or N, got {other:?}"))),
        };
        rows.push(TableRow {
            v: num(cols[0])?,
            name: cols[1].trim().to_string(),
            schlafli,
            order,
            z1: num(cols[2])?,
            h: num(cols[3])?,
            z2: num(cols[4])?,
            universal,
            also_known_as: cols.get(6).map_or(String::new(), |s| s.trim().to_string()),
        });
    }
    Ok(rows)
}

/// `{p,q}*N` with an optional trailing letter.
fn parse_name(name: &str) -> Option<([u64; 2], u64)> {
    let name = name.trim();
    let (ty, rest) = name.strip_prefix('{')?.split_once("}*")?;
    let (p, q) = ty.split_once(',')?;
    let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
    Some(([p.trim().parse().ok()?, q.trim().parse().ok()?], digits.parse().ok()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_per_vertex_count() {
        let t1 = table1();
        let counts: Vec<usize> = t1.vertex_counts.iter().map(|&v| t1.rows_for(v).count()).collect();
        assert_eq!(counts, vec![2, 0, 6, 0, 4, 4, 6]);
        let t2 = table2();
        let counts: Vec<usize> = t2.vertex_counts.iter().map(|&v| t2.rows_for(v).count()).collect();
        assert_eq!(counts, vec![16, 0, 2, 4]);
    }

    #[test]
    fn names() {
        assert_eq!(parse_name("{6,4}*48b"), Some(([6, 4], 48)));
        assert_eq!(parse_name("{10,5}*100"), Some(([10, 5], 100)));
        assert_eq!(parse_name("6,4*48"), None);
    }

    #[test]
    fn rows_are_consistent() {
        for r in table1().rows.iter().chain(&table2().rows) {
            // a vertex-faithful polyhedron has 2qv flags
            assert_eq!(r.order, 2 * r.schlafli[1] * r.v, "{}", r.name);
        }
    }

    #[test]
    fn bad_rows() {
        assert!(parse("4\t{3,3}*24\t4\t3\t4\tmaybe").is_err());
        assert!(parse("4\t{3,3}*24\t4").is_err());
    }
}
