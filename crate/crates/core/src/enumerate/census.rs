use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::EnumerateError;
use crate::perm::Permutation;
use crate::polyhedron::{PolyError, Polyhedron};

/// One census line. Generators are the canonical representative of the
/// triple under simultaneous conjugation, in 1-indexed cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub v: u64,
    #[serde(rename = "type")]
    pub schlafli: [u64; 2],
    pub order: u64,
    pub z1: u64,
    pub h: u64,
    pub z2: u64,
    pub orientable: bool,
    pub flat: bool,
    pub generators: [String; 3],
}

impl CensusRecord {
    pub(crate) fn new(v: usize, poly: &Polyhedron, canonical: &[Permutation]) -> Self {
        let i = poly.invariants();
        CensusRecord {
            v: v as u64,
            schlafli: [i.p, i.q],
            order: i.order,
            z1: i.z1,
            h: i.h,
            z2: i.z2,
            orientable: i.orientable,
            flat: i.flat,
            generators: [canonical[0].to_string(), canonical[1].to_string(), canonical[2].to_string()],
        }
    }

    pub fn triple(&self) -> Result<[Permutation; 3], PolyError> {
        let parse = |s: &String| Permutation::parse_cycles(s, Some(self.v as usize));
        Ok([parse(&self.generators[0])?, parse(&self.generators[1])?, parse(&self.generators[2])?])
    }

    /// Rebuilds and revalidates the polyhedron.
    pub fn polyhedron(&self) -> Result<Polyhedron, PolyError> {
        let [r0, r1, r2] = self.triple()?;
        Polyhedron::try_new(r0, r1, r2)
    }

    /// `(type, order, z1, h, z2)`, the data compared against published tables.
    pub fn signature(&self) -> (u64, u64, u64, u64, u64, u64) {
        (self.schlafli[0], self.schlafli[1], self.order, self.z1, self.h, self.z2)
    }

    pub(crate) fn sort_key(&self) -> ([u64; 2], u64, Vec<Vec<u32>>) {
        let images = match self.triple() {
            Ok(t) => t.iter().map(|g| g.images().to_vec()).collect(),
            Err(_) => Vec::new(),
        };
        (self.schlafli, self.order, images)
    }
}

/// Writes one JSON object per line.
pub fn write_census<W: Write>(mut out: W, records: &[CensusRecord]) -> std::io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// Reads a census written by [`write_census`]; blank lines are skipped.
pub fn read_census<R: BufRead>(input: R) -> Result<Vec<CensusRecord>, EnumerateError> {
    let mut out = Vec::new();
    for (k, line) in input.lines().enumerate() {
        let line = line.map_err(|e| EnumerateError::Census { line: k + 1, msg: e.to_string() })?;
        if line.trim().is_empty() {
            continue;
        }
        let record = serde_json::from_str(&line).map_err(|e| EnumerateError::Census { line: k + 1, msg: e.to_string() })?;
        out.push(record);
    }
    Ok(out)
}
