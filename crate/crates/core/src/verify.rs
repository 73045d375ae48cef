//! Reproducibility suites: each one recomputes a published result and
//! reports every check it made.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::{
    classify_prime, classify_twice_prime, enumerate_vertex_faithful, smallest_b_squared, CensusRecord,
    EnumerateError, EnumerateOptions,
};
use crate::families::{flat_orientable_predicate, lambda_oracle, universal_check, LambdaParams, UniversalRow};
use crate::fp::{default_coset_limit, FpError};
use crate::polyhedron::PolyError;
use crate::tables::{table1, table2, table_for, ReferenceTable, TableRow};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown suite {0:?}; expected one of table1, table2, prime, twice-prime, b-squared, flat-oracle")]
    UnknownSuite(String),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Fp(#[from] FpError),
}

impl VerifyError {
    /// The failure came from hitting the coset enumeration limit.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            VerifyError::Fp(FpError::CosetLimitExceeded { .. })
                | VerifyError::Enumerate(EnumerateError::Poly(PolyError::Fp(FpError::CosetLimitExceeded { .. })))
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Table1,
    Table2,
    Prime,
    TwicePrime,
    BSquared,
    FlatOracle,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Table1, Suite::Table2, Suite::Prime, Suite::TwicePrime, Suite::BSquared, Suite::FlatOracle];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table1 => "table1",
            Suite::Table2 => "table2",
            Suite::Prime => "prime",
            Suite::TwicePrime => "twice-prime",
            Suite::BSquared => "b-squared",
            Suite::FlatOracle => "flat-oracle",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Restricts prime-based suites to one prime.
    pub b: Option<u64>,
    /// Upper bound on `p` and `q` for the flat oracle suite.
    pub max: u64,
    pub enumerate: EnumerateOptions,
    pub coset_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { b: None, max: 12, enumerate: EnumerateOptions::default(), coset_limit: default_coset_limit() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn new(suite: Suite, checks: Vec<Check>) -> Self {
        VerifyReport { suite, passed: checks.iter().all(|c| c.passed), checks }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub fn run_suite(suite: Suite, options: &VerifyOptions) -> Result<VerifyReport, VerifyError> {
    let checks = match suite {
        Suite::Table1 => table_checks(&table1(), options)?,
        Suite::Table2 => table_checks(&table2(), options)?,
        Suite::Prime => prime_checks(options)?,
        Suite::TwicePrime => twice_prime_checks(options)?,
        Suite::BSquared => b_squared_checks(options)?,
        Suite::FlatOracle => flat_oracle_checks(options)?,
    };
    Ok(VerifyReport::new(suite, checks))
}

/// A row-level difference between a census and a reference table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Mismatch {
    /// A table row with no census record of the same signature.
    Missing { v: u64, name: String },
    /// A census record with no table row of the same signature.
    Unexpected { v: u64, signature: String },
    /// Two table rows at the same `v` share a signature, so rows cannot be
    /// matched unambiguously.
    AmbiguousSignature { v: u64, names: Vec<String> },
    /// The census covers a vertex count the table does not.
    UncoveredVertexCount { v: u64 },
}

fn signature_text(r: &CensusRecord) -> String {
    format!("{{{},{}}}*{} z1={} h={} z2={}", r.schlafli[0], r.schlafli[1], r.order, r.z1, r.h, r.z2)
}

/// Compares census records against the bundled tables, matching rows by
/// `(type, order, z1, h, z2)` at each vertex count present in the census.
pub fn diff_census(records: &[CensusRecord], vertex_counts: &[u64]) -> Vec<Mismatch> {
    let mut out = Vec::new();
    for &v in vertex_counts {
        let Some(table) = table_for(v) else {
            out.push(Mismatch::UncoveredVertexCount { v });
            continue;
        };
        let census: Vec<&CensusRecord> = records.iter().filter(|r| r.v == v).collect();
        out.extend(diff_one(&census, &table, v));
    }
    out
}

fn diff_one(census: &[&CensusRecord], table: &ReferenceTable, v: u64) -> Vec<Mismatch> {
    let mut out = Vec::new();
    let mut by_sig: BTreeMap<_, Vec<&TableRow>> = BTreeMap::new();
    for row in table.rows_for(v) {
        by_sig.entry(row.signature()).or_default().push(row);
    }
    for rows in by_sig.values().filter(|rows| rows.len() > 1) {
        out.push(Mismatch::AmbiguousSignature { v, names: rows.iter().map(|r| r.name.clone()).collect() });
    }
    let mut unmatched: BTreeMap<_, usize> = by_sig.iter().map(|(s, rows)| (*s, rows.len())).collect();
    for r in census {
        match unmatched.get_mut(&r.signature()) {
            Some(n) if *n > 0 => *n -= 1,
            _ => out.push(Mismatch::Unexpected { v, signature: signature_text(r) }),
        }
    }
    for (sig, n) in unmatched {
        for row in by_sig[&sig].iter().take(n) {
            out.push(Mismatch::Missing { v, name: row.name.clone() });
        }
    }
    out
}

fn table_checks(table: &ReferenceTable, options: &VerifyOptions) -> Result<Vec<Check>, VerifyError> {
    let mut checks = Vec::new();
    let mut census = Vec::new();
    for &v in &table.vertex_counts {
        let records = enumerate_vertex_faithful(v as usize, &options.enumerate)?;
        let expected = table.rows_for(v).count();
        checks.push(Check::new(
            format!("v={v} count"),
            records.len() == expected,
            format!("expected {expected}, found {}", records.len()),
        ));
        census.extend(records);
    }
    let mismatches = diff_census(&census, &table.vertex_counts);
    for m in &mismatches {
        checks.push(Check::new("row match", false, serde_json::to_string(m).expect("serializable")));
    }
    if mismatches.is_empty() {
        checks.push(Check::new("row match", true, format!("{} rows", table.rows.len())));
    }
    let universal: Vec<Check> = table
        .rows
        .par_iter()
        .map(|row| {
            let data = UniversalRow {
                p: row.schlafli[0],
                q: row.schlafli[1],
                order: row.order,
                z1: row.z1,
                h: row.h,
                z2: row.z2,
            };
            let outcome = universal_check(&data, options.coset_limit);
            let name = format!("v={} {} universal", row.v, row.name);
            match (row.universal, outcome) {
                (true, Ok(true)) => Check::new(name, true, ""),
                (true, other) => Check::new(name, false, format!("expected universal, got {other:?}")),
                (false, Ok(false)) => Check::new(name, true, ""),
                (false, Ok(true)) => Check::new(name, false, "expected not universal, got universal"),
                // an enumeration this large cannot give a group of the row's order
                (false, Err(FpError::CosetLimitExceeded { limit })) => {
                    Check::new(name, true, format!("universal group exceeds {limit} cosets"))
                }
                (false, Err(e)) => Check::new(name, false, e.to_string()),
            }
        })
        .collect();
    checks.extend(universal);
    Ok(checks)
}

fn primes(options: &VerifyOptions, defaults: &[u64]) -> Vec<u64> {
    options.b.map_or_else(|| defaults.to_vec(), |b| vec![b])
}

fn prime_checks(options: &VerifyOptions) -> Result<Vec<Check>, VerifyError> {
    let mut checks = Vec::new();
    for b in primes(options, &[5, 7, 11, 13]) {
        let report = classify_prime(b, 4 * b, &options.enumerate)?;
        let flat: Vec<String> = report.flat.iter().map(|f| format!("{{{},{}}}*{}", f.schlafli[0], f.schlafli[1], f.order)).collect();
        checks.push(Check::new(
            format!("b={b}"),
            report.holds,
            format!("{} vertex-faithful, flat {}", report.vertex_faithful.len(), flat.join(" ")),
        ));
    }
    Ok(checks)
}

fn twice_prime_checks(options: &VerifyOptions) -> Result<Vec<Check>, VerifyError> {
    let mut checks = Vec::new();
    for b in primes(options, &[7, 11]) {
        let report = classify_twice_prime(b, &options.enumerate)?;
        let found: Vec<String> = report.vertex_faithful.iter().map(signature_text).collect();
        checks.push(Check::new(
            format!("b={b}"),
            report.holds,
            format!(
                "{}; flat member {}, petrial dual torus {}",
                found.join(", "),
                report.has_flat_member,
                report.has_petrial_dual_torus
            ),
        ));
        if table2().vertex_counts.contains(&(2 * b)) {
            let census: Vec<&CensusRecord> = report.vertex_faithful.iter().collect();
            let diff = diff_one(&census, &table2(), 2 * b);
            checks.push(Check::new(format!("b={b} table rows"), diff.is_empty(), format!("{diff:?}")));
        }
    }
    Ok(checks)
}

fn b_squared_checks(options: &VerifyOptions) -> Result<Vec<Check>, VerifyError> {
    let mut checks = Vec::new();
    for b in primes(options, &[3, 5, 7]) {
        let report = smallest_b_squared(b)?;
        let detail: Vec<String> = report
            .candidates
            .iter()
            .map(|c| format!("{} {{{},{}}}*{} v={} normal Sylow {}", c.name, c.schlafli[0], c.schlafli[1], c.order, c.v, c.normal_sylow))
            .collect();
        checks.push(Check::new(format!("b={b}"), report.holds, detail.join("; ")));
    }
    Ok(checks)
}

/// Every `Λ(p,q)_{i,j}` with `3 ≤ p, q ≤ max`: the arithmetic predicate
/// against coset enumeration.
pub fn flat_oracle_disagreements(max: u64, limit: usize) -> Result<(usize, Vec<LambdaParams>), FpError> {
    let cases: Vec<LambdaParams> = (3..=max)
        .flat_map(|p| (3..=max).flat_map(move |q| (0..p).flat_map(move |i| (0..q).map(move |j| (p, q, i, j)))))
        .map(|(p, q, i, j)| LambdaParams::new(p, q, i as i64, j as i64))
        .collect();
    let results: Vec<Option<LambdaParams>> = cases
        .par_iter()
        .map(|&params| {
            let oracle = lambda_oracle(params, limit)?.is_some();
            let predicate = flat_orientable_predicate(params).is_flat_polyhedron;
            Ok((oracle != predicate).then_some(params))
        })
        .collect::<Result<_, FpError>>()?;
    Ok((cases.len(), results.into_iter().flatten().collect()))
}

fn flat_oracle_checks(options: &VerifyOptions) -> Result<Vec<Check>, VerifyError> {
    let (total, bad) = flat_oracle_disagreements(options.max, options.coset_limit)?;
    let mut checks = vec![Check::new(
        format!("3 <= p,q <= {}", options.max),
        bad.is_empty(),
        format!("{total} cases, {} disagreements", bad.len()),
    )];
    for params in bad {
        checks.push(Check::new(
            format!("Λ({},{})_{{{},{}}}", params.p, params.q, params.i, params.j),
            false,
            "predicate and oracle disagree",
        ));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!(matches!("table3".parse::<Suite>(), Err(VerifyError::UnknownSuite(_))));
    }

    #[test]
    fn diff_reports_each_kind() {
        let recs = enumerate_vertex_faithful(4, &EnumerateOptions::default()).unwrap();
        assert!(diff_census(&recs, &[4]).is_empty());
        let mut wrong = recs.clone();
        wrong[0].z1 += 1;
        let diff = diff_census(&wrong, &[4]);
        assert_eq!(diff.len(), 2);
        assert!(diff.iter().any(|m| matches!(m, Mismatch::Missing { .. })));
        assert!(diff.iter().any(|m| matches!(m, Mismatch::Unexpected { .. })));
        assert_eq!(diff_census(&recs, &[16]), vec![Mismatch::UncoveredVertexCount { v: 16 }]);
    }
}
