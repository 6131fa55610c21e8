//! Self-describing JSON file formats and deterministic report documents.
//!
//! One text format per object family, each versioned by a leading `format`
//! field: `algebra/1` for structure-constant specifications, `group/1` for
//! Cayley tables, `lie/1` for restricted Lie data, `cocycle/1` for
//! tensor-square vectors. Multiplication and comultiplication are stored
//! sparsely (omitted pairs are zero) with coefficients as least nonnegative
//! residues, so fixtures stay readable at dimension p³ and diffs stay
//! reviewable. Saving is canonical, entries emitted in ascending index
//! order, which makes save∘load idempotent and report bytes reproducible.
//!
//! Loaders check shape only: format tag, primality of p, index ranges,
//! and length agreement. Whether the loaded tensors satisfy the algebra
//! axioms is a question for `validate`, not the parser, and the two kinds
//! of failure carry different exit codes in the CLI.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraKind, StructuredAlgebra};
use crate::construct::RestrictedLieData;
use crate::groups::GroupTable;
use crate::linalg::{is_prime, FpMatrix};
use crate::masuoka::{MasuokaReport, SuiteReport};
use crate::{Error, Result};

pub const ALGEBRA_FORMAT: &str = "algebra/1";
pub const GROUP_FORMAT: &str = "group/1";
pub const LIE_FORMAT: &str = "lie/1";
pub const COCYCLE_FORMAT: &str = "cocycle/1";

type MultEntry = (usize, usize, Vec<(usize, u64)>);
type ComultEntry = (usize, Vec<(usize, usize, u64)>);

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    format: String,
    p: u64,
    dim: usize,
    kind: String,
    basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unit: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mult: Option<Vec<MultEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    counit: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    comult: Option<Vec<ComultEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    antipode: Option<Vec<Vec<u64>>>,
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn check_modulus(p: u64) -> Result<()> {
    if !is_prime(p) {
        Err(Error::Parse("modulus not prime".into()))
    } else if p > 251 {
        Err(Error::Parse(format!(
            "modulus {p} too large; residues are stored in bytes, so p <= 251"
        )))
    } else {
        Ok(())
    }
}

fn expect_format(got: &str, want: &str) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        Err(Error::Parse(format!("unsupported format tag {got:?}, expected {want:?}")))
    }
}

fn kind_from_str(s: &str) -> Result<AlgebraKind> {
    match s {
        "algebra" => Ok(AlgebraKind::Algebra),
        "coalgebra" => Ok(AlgebraKind::Coalgebra),
        "bialgebra" => Ok(AlgebraKind::Bialgebra),
        "hopf" => Ok(AlgebraKind::Hopf),
        other => Err(Error::Parse(format!(
            "unknown kind {other:?}, expected algebra, coalgebra, bialgebra, or hopf"
        ))),
    }
}

fn reduced_vec(label: &str, v: Vec<u64>, n: usize, p: u64) -> Result<Vec<u64>> {
    if v.len() != n {
        return Err(Error::Parse(format!("{label} has {} entries, expected {n}", v.len())));
    }
    Ok(v.into_iter().map(|c| c % p).collect())
}

fn dense_mult(entries: &[MultEntry], n: usize, p: u64) -> Result<Vec<u64>> {
    let mut t = vec![0u64; n * n * n];
    let mut seen = vec![false; n * n];
    for &(i, j, ref terms) in entries {
        if i >= n || j >= n {
            return Err(Error::Parse(format!(
                "mult entry [{i}, {j}]: index out of range for dim {n}"
            )));
        }
        if seen[i * n + j] {
            return Err(Error::Parse(format!("mult entry [{i}, {j}] appears twice")));
        }
        seen[i * n + j] = true;
        for &(k, c) in terms {
            if k >= n {
                return Err(Error::Parse(format!(
                    "mult entry [{i}, {j}]: target index {k} out of range for dim {n}"
                )));
            }
            let slot = (i * n + j) * n + k;
            t[slot] = (t[slot] + c) % p;
        }
    }
    Ok(t)
}

fn dense_comult(entries: &[ComultEntry], n: usize, p: u64) -> Result<Vec<u64>> {
    let mut t = vec![0u64; n * n * n];
    let mut seen = vec![false; n];
    for &(i, ref terms) in entries {
        if i >= n {
            return Err(Error::Parse(format!(
                "comult entry [{i}]: index out of range for dim {n}"
            )));
        }
        if seen[i] {
            return Err(Error::Parse(format!("comult entry [{i}] appears twice")));
        }
        seen[i] = true;
        for &(j, k, c) in terms {
            if j >= n || k >= n {
                return Err(Error::Parse(format!(
                    "comult entry [{i}]: tensor index ({j}, {k}) out of range for dim {n}"
                )));
            }
            let slot = (i * n + j) * n + k;
            t[slot] = (t[slot] + c) % p;
        }
    }
    Ok(t)
}

fn matrix_from_rows(rows: &[Vec<u64>], n: usize, p: u64) -> Result<FpMatrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse(format!("antipode must be a {n}x{n} matrix")));
    }
    let mut m = FpMatrix::zeros(p, n, n);
    for (r, row) in rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            m.set(r, c, v % p);
        }
    }
    Ok(m)
}

/// Parses an `algebra/1` document. Shape errors are reported as parse
/// errors; a Hopf document without an explicit antipode gets one computed
/// by convolution inversion, and the absence of any antipode is a
/// mathematical failure rather than a parse failure.
pub fn parse_algebra(text: &str) -> Result<StructuredAlgebra> {
    let f: AlgebraFile = serde_json::from_str(text).map_err(json_err)?;
    expect_format(&f.format, ALGEBRA_FORMAT)?;
    check_modulus(f.p)?;
    let (n, p) = (f.dim, f.p);
    if n == 0 {
        return Err(Error::Parse("dim must be positive".into()));
    }
    if f.basis.len() != n {
        return Err(Error::Parse(format!("basis has {} labels, expected {n}", f.basis.len())));
    }
    let kind = kind_from_str(&f.kind)?;

    let require = |present: bool, field: &str, wanted: bool| -> Result<()> {
        match (present, wanted) {
            (false, true) => Err(Error::Parse(format!("kind {:?} requires {field}", f.kind))),
            (true, false) => Err(Error::Parse(format!("kind {:?} does not take {field}", f.kind))),
            _ => Ok(()),
        }
    };
    require(f.mult.is_some(), "mult", kind.has_algebra())?;
    require(f.unit.is_some(), "unit", kind.has_algebra())?;
    require(f.comult.is_some(), "comult", kind.has_coalgebra())?;
    require(f.counit.is_some(), "counit", kind.has_coalgebra())?;
    if f.antipode.is_some() && kind != AlgebraKind::Hopf {
        return Err(Error::Parse(format!("kind {:?} does not take antipode", f.kind)));
    }

    let mut h = StructuredAlgebra {
        p,
        dim: n,
        kind,
        labels: f.basis,
        mult: f.mult.as_deref().map(|e| dense_mult(e, n, p)).transpose()?,
        unit: f.unit.map(|v| reduced_vec("unit", v, n, p)).transpose()?,
        comult: f.comult.as_deref().map(|e| dense_comult(e, n, p)).transpose()?,
        counit: f.counit.map(|v| reduced_vec("counit", v, n, p)).transpose()?,
        antipode: f.antipode.as_deref().map(|r| matrix_from_rows(r, n, p)).transpose()?,
    };
    if kind == AlgebraKind::Hopf && h.antipode.is_none() {
        h.antipode = Some(h.compute_antipode()?);
    }
    Ok(h)
}

/// Canonical serialization: sparse entries in ascending index order,
/// coefficients already reduced, one trailing newline.
pub fn algebra_to_string(h: &StructuredAlgebra) -> String {
    let n = h.dim;
    let mult = h.mult.as_ref().map(|t| {
        let mut entries: Vec<MultEntry> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let terms: Vec<(usize, u64)> = (0..n)
                    .filter_map(|k| {
                        let c = t[(i * n + j) * n + k];
                        (c != 0).then_some((k, c))
                    })
                    .collect();
                if !terms.is_empty() {
                    entries.push((i, j, terms));
                }
            }
        }
        entries
    });
    let comult = h.comult.as_ref().map(|t| {
        let mut entries: Vec<ComultEntry> = Vec::new();
        for i in 0..n {
            let terms: Vec<(usize, usize, u64)> = (0..n * n)
                .filter_map(|jk| {
                    let c = t[i * n * n + jk];
                    (c != 0).then_some((jk / n, jk % n, c))
                })
                .collect();
            if !terms.is_empty() {
                entries.push((i, terms));
            }
        }
        entries
    });
    let f = AlgebraFile {
        format: ALGEBRA_FORMAT.into(),
        p: h.p,
        dim: n,
        kind: h.kind.as_str().into(),
        basis: h.labels.clone(),
        unit: h.unit.clone(),
        mult,
        counit: h.counit.clone(),
        comult,
        antipode: h.antipode.as_ref().map(FpMatrix::to_rows),
    };
    let mut s = serde_json::to_string_pretty(&f).expect("algebra files serialize");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: String) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn load_algebra(path: &Path) -> Result<StructuredAlgebra> {
    parse_algebra(&read(path)?)
}

pub fn save_algebra(h: &StructuredAlgebra, path: &Path) -> Result<()> {
    write(path, algebra_to_string(h))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    format: String,
    order: usize,
    /// table[a][b] = index of g_a · g_b
    table: Vec<Vec<usize>>,
}

/// Parses a `group/1` Cayley table. Shape problems are parse errors; a
/// well-shaped table that fails the group axioms is reported by the table
/// validator as a mathematical error.
pub fn parse_group(text: &str) -> Result<GroupTable> {
    let f: GroupFile = serde_json::from_str(text).map_err(json_err)?;
    expect_format(&f.format, GROUP_FORMAT)?;
    if f.table.len() != f.order || f.table.iter().any(|r| r.len() != f.order) {
        return Err(Error::Parse(format!("table must be {0}x{0} for order {0}", f.order)));
    }
    GroupTable::from_table(f.order, f.table.into_iter().flatten().collect())
}

pub fn load_group(path: &Path) -> Result<GroupTable> {
    parse_group(&read(path)?)
}

pub fn group_to_string(g: &GroupTable) -> String {
    let n = g.order();
    let f = GroupFile {
        format: GROUP_FORMAT.into(),
        order: n,
        table: (0..n).map(|a| (0..n).map(|b| g.mul(a, b)).collect()).collect(),
    };
    let mut s = serde_json::to_string_pretty(&f).expect("group files serialize");
    s.push('\n');
    s
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LieFile {
    format: String,
    p: u64,
    dim: usize,
    /// Entries [i, j, [[k, c], …]] for [x_i, x_j] = Σ c·x_k. Both (i, j)
    /// and (j, i) must be given; omitted pairs are zero brackets.
    #[serde(default)]
    bracket: Vec<MultEntry>,
    /// Entries [i, [[j, c], …]] for x_i^[p] = Σ c·x_j.
    #[serde(default)]
    pmap: Vec<(usize, Vec<(usize, u64)>)>,
}

pub fn parse_lie(text: &str) -> Result<RestrictedLieData> {
    let f: LieFile = serde_json::from_str(text).map_err(json_err)?;
    expect_format(&f.format, LIE_FORMAT)?;
    check_modulus(f.p)?;
    let (d, p) = (f.dim, f.p);
    if d == 0 {
        return Err(Error::Parse("dim must be positive".into()));
    }
    let bracket = dense_mult(&f.bracket, d, p)
        .map_err(|e| Error::Parse(e.to_string().replace("mult entry", "bracket entry")))?;
    let mut pmap = vec![0u64; d * d];
    let mut seen = vec![false; d];
    for &(i, ref terms) in &f.pmap {
        if i >= d {
            return Err(Error::Parse(format!("pmap entry [{i}]: index out of range for dim {d}")));
        }
        if seen[i] {
            return Err(Error::Parse(format!("pmap entry [{i}] appears twice")));
        }
        seen[i] = true;
        for &(j, c) in terms {
            if j >= d {
                return Err(Error::Parse(format!(
                    "pmap entry [{i}]: target index {j} out of range for dim {d}"
                )));
            }
            pmap[i * d + j] = (pmap[i * d + j] + c) % p;
        }
    }
    Ok(RestrictedLieData { p, dim: d, bracket, pmap })
}

pub fn load_lie(path: &Path) -> Result<RestrictedLieData> {
    parse_lie(&read(path)?)
}

/// A tensor-square vector for `extend --cocycle-file`.
pub struct CocycleData {
    pub p: u64,
    pub dim: usize,
    /// Dense H⊗H coordinates, index i·dim + j.
    pub tensor: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CocycleFile {
    format: String,
    p: u64,
    dim: usize,
    /// Entries [i, j, c] for c·(e_i ⊗ e_j); omitted pairs are zero.
    entries: Vec<(usize, usize, u64)>,
}

pub fn parse_cocycle(text: &str) -> Result<CocycleData> {
    let f: CocycleFile = serde_json::from_str(text).map_err(json_err)?;
    expect_format(&f.format, COCYCLE_FORMAT)?;
    check_modulus(f.p)?;
    let n = f.dim;
    if n == 0 {
        return Err(Error::Parse("dim must be positive".into()));
    }
    let mut tensor = vec![0u64; n * n];
    for &(i, j, c) in &f.entries {
        if i >= n || j >= n {
            return Err(Error::Parse(format!(
                "cocycle entry [{i}, {j}]: index out of range for dim {n}"
            )));
        }
        tensor[i * n + j] = (tensor[i * n + j] + c) % f.p;
    }
    Ok(CocycleData { p: f.p, dim: n, tensor })
}

pub fn load_cocycle(path: &Path) -> Result<CocycleData> {
    parse_cocycle(&read(path)?)
}

/// Machine-readable mirror of [`MasuokaReport`] with schema-stable keys.
#[derive(Serialize)]
pub struct ReportDocument {
    pub format: &'static str,
    pub p: u64,
    pub dim: usize,
    pub semisimple: bool,
    pub eps_right_integral: bool,
    pub eps_left_integral: bool,
    #[serde(rename = "K_semisimple")]
    pub k_semisimple: bool,
    pub g_abelian_spans: bool,
    #[serde(rename = "eps_right_integral_K")]
    pub eps_right_integral_k: bool,
    #[serde(rename = "eps_left_integral_K")]
    pub eps_left_integral_k: bool,
    pub agreement: bool,
    pub commutative: bool,
    pub connected: bool,
    pub dim_is_p_power: bool,
    pub diagnostics: Vec<String>,
}

pub fn report_document(r: &MasuokaReport) -> ReportDocument {
    let mut diagnostics = vec![
        format!("K, the Hopf subalgebra generated by the primitives, has dimension {}", r.k_dim),
        "conditions K_semisimple through eps_left_integral_K are evaluated on K".to_string(),
        "isomorphism-type conditions are certified through field-independent surrogates \
         (integrals and restricted structure), not by isomorphism search"
            .to_string(),
    ];
    if !r.connected {
        diagnostics
            .push("H is not connected; the seven conditions are not expected to agree".to_string());
    }
    ReportDocument {
        format: "report/1",
        p: r.p,
        dim: r.dim,
        semisimple: r.c1_semisimple,
        eps_right_integral: r.c2_eps_right_integral,
        eps_left_integral: r.c3_eps_left_integral,
        k_semisimple: r.c4_k_semisimple,
        g_abelian_spans: r.c5_g_abelian_spans,
        eps_right_integral_k: r.c6_eps_right_integral_k,
        eps_left_integral_k: r.c7_eps_left_integral_k,
        agreement: r.agreement,
        commutative: r.commutative,
        connected: r.connected,
        dim_is_p_power: r.dim_is_p_power,
        diagnostics,
    }
}

pub fn report_json(r: &MasuokaReport) -> String {
    let mut s = serde_json::to_string_pretty(&report_document(r)).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
pub struct SuiteCheckDocument {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct SuiteInstanceDocument {
    pub name: String,
    pub dim: usize,
    pub expected_invalid: bool,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportDocument>,
    pub checks: Vec<SuiteCheckDocument>,
}

#[derive(Serialize)]
pub struct SuiteDocument {
    pub format: &'static str,
    pub p: u64,
    pub max_group_order: usize,
    pub rejected_lie_data: usize,
    pub passed: bool,
    pub instances: Vec<SuiteInstanceDocument>,
}

pub fn suite_document(r: &SuiteReport) -> SuiteDocument {
    SuiteDocument {
        format: "suite/1",
        p: r.p,
        max_group_order: r.max_group_order,
        rejected_lie_data: r.rejected_lie_data,
        passed: r.passed(),
        instances: r
            .instances
            .iter()
            .map(|i| SuiteInstanceDocument {
                name: i.name.clone(),
                dim: i.dim,
                expected_invalid: i.expected_invalid,
                passed: i.passed(),
                error: i.error.clone(),
                report: i.report.as_ref().map(report_document),
                checks: i
                    .checks
                    .iter()
                    .map(|c| SuiteCheckDocument {
                        name: c.name.to_string(),
                        passed: c.passed,
                        detail: c.detail.clone(),
                    })
                    .collect(),
            })
            .collect(),
    }
}

pub fn suite_json(r: &SuiteReport) -> String {
    let mut s = serde_json::to_string_pretty(&suite_document(r)).expect("suites serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{group_dual, restricted_enveloping};
    use crate::masuoka::{masuoka_report, run_suite, SuiteSpec};

    fn is_parse(r: &Result<StructuredAlgebra>) -> bool {
        matches!(r, Err(e) if e.is_parse())
    }

    #[test]
    fn constructor_outputs_round_trip() {
        for h in [
            group_dual(2, &GroupTable::from_catalog("c4").unwrap()),
            group_dual(3, &GroupTable::from_catalog("c3").unwrap()),
            crate::construct::group_algebra(2, &GroupTable::from_catalog("d4").unwrap()),
            restricted_enveloping(&RestrictedLieData {
                p: 3,
                dim: 2,
                bracket: vec![0, 0, 0, 1, 0, 2, 0, 0],
                pmap: vec![1, 0, 0, 0],
            })
            .unwrap(),
        ] {
            let text = algebra_to_string(&h);
            let back = parse_algebra(&text).unwrap();
            assert_eq!(back, h);
            // canonical form: saving what we loaded reproduces the bytes
            assert_eq!(algebra_to_string(&back), text);
        }
    }

    #[test]
    fn omitted_antipodes_are_computed() {
        let text = r#"{
            "format": "algebra/1",
            "p": 2,
            "dim": 2,
            "kind": "hopf",
            "basis": ["e", "g"],
            "unit": [1, 0],
            "mult": [[0, 0, [[0, 1]]], [0, 1, [[1, 1]]], [1, 0, [[1, 1]]], [1, 1, [[0, 1]]]],
            "counit": [1, 1],
            "comult": [[0, [[0, 0, 1]]], [1, [[1, 1, 1]]]]
        }"#;
        let h = parse_algebra(text).unwrap();
        assert_eq!(h.antipode, Some(FpMatrix::identity(2, 2)));
        assert!(h.validate().is_empty());
    }

    #[test]
    fn shape_problems_are_parse_errors() {
        let base = r#"{"format": "algebra/1", "p": 2, "dim": 1, "kind": "algebra",
                       "basis": ["1"], "unit": [1], "mult": [[0, 0, [[0, 1]]]]}"#;
        assert!(parse_algebra(base).is_ok());

        let cases = [
            (r#""p": 2"#, r#""p": 4"#, "modulus not prime"),
            (r#""dim": 1"#, r#""dim": 0"#, "dim must be positive"),
            (r#""basis": ["1"]"#, r#""basis": []"#, "basis has 0 labels"),
            (r#""kind": "algebra""#, r#""kind": "ring""#, "unknown kind"),
            (r#"[[0, 0, [[0, 1]]]]"#, r#"[[0, 1, [[0, 1]]]]"#, "index out of range"),
            (r#"[[0, 0, [[0, 1]]]]"#, r#"[[0, 0, [[7, 1]]]]"#, "target index 7 out of range"),
            (r#"[[0, 0, [[0, 1]]]]"#, r#"[[0, 0, [[0, 1]]], [0, 0, [[0, 1]]]]"#, "appears twice"),
        ];
        for (from, to, needle) in cases {
            let r = parse_algebra(&base.replace(from, to));
            assert!(is_parse(&r), "{needle}: {r:?}");
            assert!(r.unwrap_err().to_string().contains(needle), "wanted {needle}");
        }

        // field/kind mismatches
        let r = parse_algebra(&base.replace(r#""kind": "algebra""#, r#""kind": "hopf""#));
        assert!(is_parse(&r));
        assert!(r.unwrap_err().to_string().contains("requires comult"));
        let r = parse_algebra(&base.replace(r#""unit": [1]"#, r#""unit": [1], "counit": [1]"#));
        assert!(is_parse(&r));
        assert!(r.unwrap_err().to_string().contains("does not take counit"));

        // malformed JSON carries serde's line/column diagnostics
        let r = parse_algebra("{\n  \"format\": \"algebra/1\",");
        assert!(is_parse(&r));
        assert!(r.unwrap_err().to_string().contains("line"));
    }

    #[test]
    fn coefficients_are_reduced_on_load() {
        let text = r#"{"format": "algebra/1", "p": 3, "dim": 1, "kind": "algebra",
                       "basis": ["1"], "unit": [7], "mult": [[0, 0, [[0, 4]]]]}"#;
        let h = parse_algebra(text).unwrap();
        assert_eq!(h.unit, Some(vec![1]));
        assert_eq!(h.mult, Some(vec![1]));
    }

    #[test]
    fn group_files_round_trip_and_validate() {
        let g = GroupTable::from_catalog("q8").unwrap();
        let text = group_to_string(&g);
        assert_eq!(parse_group(&text).unwrap(), g);

        // well-shaped but not a group: a mathematical error, not a parse one
        let bad = r#"{"format": "group/1", "order": 2, "table": [[0, 1], [1, 1]]}"#;
        match parse_group(bad) {
            Err(Error::InvalidGroupTable(_)) => {}
            other => panic!("expected InvalidGroupTable, got {other:?}"),
        }
        // wrong shape is a parse error
        let bad = r#"{"format": "group/1", "order": 2, "table": [[0, 1]]}"#;
        assert!(matches!(parse_group(bad), Err(e) if e.is_parse()));
    }

    #[test]
    fn lie_files_feed_the_enveloping_constructor() {
        let text = r#"{
            "format": "lie/1",
            "p": 2,
            "dim": 2,
            "bracket": [[0, 1, [[1, 1]]], [1, 0, [[1, 1]]]],
            "pmap": [[0, [[0, 1]]]]
        }"#;
        let data = parse_lie(text).unwrap();
        let h = restricted_enveloping(&data).unwrap();
        assert_eq!(h.dim, 4);
        assert!(!h.is_commutative());

        let bad = text.replace(r#"[[0, 1, [[1, 1]]]"#, r#"[[0, 3, [[1, 1]]]"#);
        let r = parse_lie(&bad);
        assert!(matches!(&r, Err(e) if e.is_parse()));
        assert!(r.unwrap_err().to_string().contains("bracket entry"));
    }

    #[test]
    fn cocycle_files_parse() {
        let text = r#"{"format": "cocycle/1", "p": 2, "dim": 2, "entries": [[1, 1, 1]]}"#;
        let c = parse_cocycle(text).unwrap();
        assert_eq!((c.p, c.dim), (2, 2));
        assert_eq!(c.tensor, vec![0, 0, 0, 1]);
        assert!(matches!(
            parse_cocycle(&text.replace(r#""p": 2"#, r#""p": 6"#)),
            Err(Error::Parse(m)) if m.contains("modulus not prime")
        ));
    }

    #[test]
    fn report_documents_are_deterministic_and_keyed_as_promised() {
        let h = group_dual(2, &GroupTable::from_catalog("c4").unwrap());
        let r = masuoka_report(&h).unwrap();
        let a = report_json(&r);
        let b = report_json(&r);
        assert_eq!(a, b);
        for key in [
            "\"semisimple\"",
            "\"eps_right_integral\"",
            "\"eps_left_integral\"",
            "\"K_semisimple\"",
            "\"g_abelian_spans\"",
            "\"eps_right_integral_K\"",
            "\"eps_left_integral_K\"",
            "\"agreement\"",
            "\"commutative\"",
            "\"connected\"",
            "\"dim\"",
            "\"p\"",
            "\"diagnostics\"",
        ] {
            assert!(a.contains(key), "missing {key} in {a}");
        }
    }

    #[test]
    fn suite_documents_are_deterministic() {
        let spec = SuiteSpec { include_enveloping: false, ..SuiteSpec::new(2, 4) };
        let a = suite_json(&run_suite(&spec));
        let b = suite_json(&run_suite(&spec));
        assert_eq!(a, b);
        assert!(a.contains("\"passed\": true"));
        assert!(a.contains("corrupted dual of c2"));
    }
}
