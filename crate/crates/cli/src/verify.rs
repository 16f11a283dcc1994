use std::collections::BTreeMap;

use anyhow::{bail, Result};
use grpdim_core::catalog::catalog;
use grpdim_core::graph::build_graph_with;
use grpdim_core::{Error, FiniteGroup, GraphFamily, SearchLimits, SimpleGraph};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::args::{family_rank, parse_families, write_file, Engine, VerifyArgs};
use crate::engines;
use crate::Outcome;

const MAX_ORDER: usize = 720;

/// A method's value, or the marker for a method that was not run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Value {
    Computed(usize),
    Skipped,
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Computed(v) => s.serialize_u64(*v as u64),
            Value::Skipped => s.serialize_str("skipped"),
        }
    }
}

#[derive(Serialize)]
pub struct Row {
    pub group: String,
    pub n: usize,
    pub family: GraphFamily,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<&'static str>,
    pub values: BTreeMap<&'static str, Value>,
    pub millis: BTreeMap<&'static str, f64>,
    #[serde(rename = "match")]
    pub matched: bool,
}

#[derive(Serialize)]
pub struct Summary {
    pub total: usize,
    pub mismatches: usize,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub rows: Vec<Row>,
    pub summary: Summary,
}

pub fn run(args: VerifyArgs) -> Result<Outcome> {
    if args.max_order > MAX_ORDER {
        bail!("--max-order {} exceeds {MAX_ORDER}", args.max_order);
    }
    let families = parse_families(&args.families)?;
    let limits = args.limits.resolve()?;
    let mut methods = args.methods.clone();
    methods.sort();
    methods.dedup();

    // Groups are built inside the parallel map so only the ones in flight
    // are held in memory; each group's families run as separate tasks.
    let mut rows: Vec<Row> = catalog(args.max_order)
        .par_iter()
        .map(|d| -> Result<Vec<Row>, Error> {
            let group = d.build()?;
            let profile = group.profile();
            let lattice = group.cyclic_lattice();
            families
                .par_iter()
                .map(|&family| {
                    let graph = build_graph_with(&group, &lattice, &profile, family);
                    check_cell(&group, &graph, family, &methods, &limits)
                })
                .collect()
        })
        .collect::<Result<Vec<_>, Error>>()?
        .into_iter()
        .flatten()
        .collect();
    rows.sort_by(|a, b| {
        (a.n, &a.group, family_rank(a.family)).cmp(&(b.n, &b.group, family_rank(b.family)))
    });

    let mismatches = rows.iter().filter(|r| !r.matched).count();
    let report = VerifyReport {
        summary: Summary {
            total: rows.len(),
            mismatches,
        },
        rows,
    };
    if let Some(path) = &args.csv {
        write_file(path, &to_csv(&report, &methods)?)?;
    }
    if let Some(path) = &args.json {
        write_file(path, &serde_json::to_string_pretty(&report)?)?;
    }
    for r in report.rows.iter().filter(|r| !r.matched) {
        println!("MISMATCH {} {}: {:?}", r.group, r.family, r.values);
    }
    println!(
        "{} cells checked, {} mismatches",
        report.summary.total, report.summary.mismatches
    );
    Ok(if mismatches == 0 {
        Outcome::Clean
    } else {
        Outcome::Mismatch
    })
}

fn check_cell(
    group: &FiniteGroup,
    graph: &SimpleGraph,
    family: GraphFamily,
    methods: &[Engine],
    limits: &SearchLimits,
) -> Result<Row, Error> {
    let mut row = Row {
        group: group.name().to_owned(),
        n: group.order(),
        family,
        branch: None,
        values: BTreeMap::new(),
        millis: BTreeMap::new(),
        matched: true,
    };
    for &engine in methods {
        let value = if engines::applicable(engine, family, group.order(), limits) {
            match engines::run(engine, group, graph, family, limits) {
                Ok(c) => {
                    row.millis.insert(engine.as_str(), c.millis);
                    if let Some(b) = c.branch {
                        row.branch = Some(b.as_str());
                    }
                    Value::Computed(c.value)
                }
                Err(Error::Capacity { .. }) => Value::Skipped,
                Err(e) => return Err(e),
            }
        } else {
            Value::Skipped
        };
        row.values.insert(engine.as_str(), value);
    }
    let computed: Vec<usize> = row
        .values
        .values()
        .filter_map(|v| match v {
            Value::Computed(x) => Some(*x),
            Value::Skipped => None,
        })
        .collect();
    row.matched = computed.windows(2).all(|w| w[0] == w[1]);
    Ok(row)
}

fn to_csv(report: &VerifyReport, methods: &[Engine]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "group", "n", "family", "method", "value", "branch", "millis", "match",
    ])?;
    for row in &report.rows {
        for engine in methods {
            let m = engine.as_str();
            let value = match row.values[m] {
                Value::Computed(v) => v.to_string(),
                Value::Skipped => "skipped".to_owned(),
            };
            let branch = match engine {
                Engine::Formula => row.branch.unwrap_or(""),
                _ => "",
            };
            let millis = row
                .millis
                .get(m)
                .map(|t| format!("{t:.3}"))
                .unwrap_or_default();
            w.write_record([
                row.group.as_str(),
                &row.n.to_string(),
                row.family.as_str(),
                m,
                &value,
                branch,
                &millis,
                if row.matched { "true" } else { "false" },
            ])?;
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
