//! Regenerates the threshold and slope tables from the ledgers and formulas
//! and diffs them field by field against the golden files.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use kmoduli_core::data;
use kmoduli_core::kstability::Threshold;
use kmoduli_core::rational::serde_q;
use kmoduli_core::walls::kst_from_slope;
use kmoduli_core::Rational;

use crate::{data_err, CliError, Ctx, Res};

/// The profile whose threshold gives the `i = 0` row.
const DOUBLE_QUADRIC_PROFILE: &str = "ord_Q";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StratumRow {
    pub i: u32,
    #[serde(with = "serde_q")]
    pub kst: Rational,
    pub singularity_label: String,
    pub weights: Value,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlopeRow {
    pub i: u32,
    #[serde(with = "serde_q")]
    pub t: Rational,
    #[serde(with = "serde_q")]
    pub kst: Rational,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Diff {
    pub table: String,
    pub i: Option<u32>,
    pub field: String,
    pub expected: Option<Value>,
    pub got: Option<Value>,
}

impl fmt::Display for Diff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &Option<Value>| v.as_ref().map_or("(missing)".to_string(), |v| v.to_string());
        let row = self.i.map_or("-".to_string(), |i| i.to_string());
        write!(f, "{} row i={row} field {}: golden {} ≠ regenerated {}", self.table, self.field, show(&self.expected), show(&self.got))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TablesReport {
    pub table1: Vec<StratumRow>,
    pub table2: Vec<SlopeRow>,
    pub diffs: Vec<Diff>,
    pub identical: bool,
}

#[derive(Deserialize)]
struct Golden {
    rows: Vec<Map<String, Value>>,
}

pub fn regenerate(ctx: &Ctx) -> Res<TablesReport> {
    let ledger = ctx.table1()?;
    let walls = ctx.walls()?;
    let profiles = ctx.profiles()?;

    let slope = |i: u32| walls.vgit_slopes.iter().find(|s| s.i == i).map(|s| s.t.clone());
    let mut table1 = Vec::new();
    for r in &ledger.rows {
        let (kst, provenance) = if r.i == 0 {
            let p = profiles
                .profile(DOUBLE_QUADRIC_PROFILE)
                .ok_or_else(|| CliError::Data(format!("profile {DOUBLE_QUADRIC_PROFILE} is missing")))?;
            match p.kst_threshold()? {
                Threshold::Rational(k) => (k, format!("kst_threshold({DOUBLE_QUADRIC_PROFILE})")),
                other => return Err(CliError::Data(format!("{DOUBLE_QUADRIC_PROFILE} threshold is not rational: {other:?}"))),
            }
        } else {
            let t = slope(r.i).ok_or_else(|| CliError::Data(format!("no VGIT slope for i = {}", r.i)))?;
            (kst_from_slope(&t)?, format!("kst_from_slope(t_{} = {t})", r.i - 1))
        };
        table1.push(StratumRow {
            i: r.i,
            kst,
            singularity_label: r.singularity_label.clone(),
            weights: serde_json::to_value(&r.weights)?,
            provenance,
        });
    }
    let table2 = walls
        .table2()?
        .into_iter()
        .map(|(i, t, kst)| SlopeRow { i, provenance: format!("(1 + 2t)/(3 - 2t) at t = {t}"), t, kst })
        .collect::<Vec<_>>();

    let mut diffs = Vec::new();
    diff_rows("table1", &golden(ctx, data::GOLDEN_TABLE1)?, &table1, &mut diffs)?;
    diff_rows("table2", &golden(ctx, data::GOLDEN_TABLE2)?, &table2, &mut diffs)?;
    Ok(TablesReport { identical: diffs.is_empty(), table1, table2, diffs })
}

fn golden(ctx: &Ctx, name: &str) -> Res<Vec<Map<String, Value>>> {
    let g: Golden = data::parse(name, &ctx.load(name)?).map_err(data_err)?;
    Ok(g.rows)
}

fn row_index(m: &Map<String, Value>) -> Option<u32> {
    m.get("i").and_then(Value::as_u64).map(|i| i as u32)
}

/// Compares every golden field (provenance is ours, not golden).
fn diff_rows<R: Serialize>(table: &str, golden: &[Map<String, Value>], ours: &[R], out: &mut Vec<Diff>) -> Res<()> {
    let ours: Vec<Map<String, Value>> = ours
        .iter()
        .map(|r| match serde_json::to_value(r) {
            Ok(Value::Object(mut m)) => {
                m.remove("provenance");
                Ok(m)
            }
            Ok(_) => unreachable!("rows serialize to objects"),
            Err(e) => Err(CliError::from(e)),
        })
        .collect::<Res<_>>()?;
    let mut d = |i, field: &str, expected: Option<&Value>, got: Option<&Value>| {
        out.push(Diff { table: table.into(), i, field: field.into(), expected: expected.cloned(), got: got.cloned() })
    };
    for g in golden {
        let i = row_index(g);
        let Some(o) = ours.iter().find(|o| row_index(o) == i) else {
            d(i, "row", Some(&Value::Object(g.clone())), None);
            continue;
        };
        let mut keys: Vec<&String> = g.keys().chain(o.keys()).collect();
        keys.sort();
        keys.dedup();
        for k in keys {
            if g.get(k) != o.get(k) {
                d(i, k, g.get(k), o.get(k));
            }
        }
    }
    for o in &ours {
        let i = row_index(o);
        if !golden.iter().any(|g| row_index(g) == i) {
            d(i, "row", None, Some(&Value::Object(o.clone())));
        }
    }
    Ok(())
}

pub fn markdown(r: &TablesReport) -> String {
    let mut s = String::from("## Strata: K-semistable thresholds and destabilizing 1-PS\n\n");
    s += "| i | kst | 1-PS weights | singularities of S | source |\n|---|---|---|---|---|\n";
    for row in &r.table1 {
        let w = match &row.weights {
            Value::Array(v) => v.iter().map(|x| x.as_str().map_or(x.to_string(), str::to_string)).collect::<Vec<_>>().join(", "),
            other => other.to_string(),
        };
        s += &format!("| {} | {} | ({w}) | {} | {} |\n", row.i, row.kst, row.singularity_label, row.provenance);
    }
    s += "\n## VGIT slopes and thresholds\n\n| i | t_{i-1} | (1+2t)/(3-2t) |\n|---|---|---|\n";
    for row in &r.table2 {
        s += &format!("| {} | {} | {} |\n", row.i, row.t, row.kst);
    }
    if r.identical {
        s += "\nGolden files: identical.\n";
    } else {
        s += &format!("\nGolden files: {} difference(s).\n\n", r.diffs.len());
        for d in &r.diffs {
            s += &format!("- {d}\n");
        }
    }
    s
}
