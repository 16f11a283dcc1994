use std::fmt::Write as _;

use anyhow::Result;
use grpdim_core::closed_forms::Branch;
use grpdim_core::{build_graph, FiniteGroup, GraphFamily};
use serde::Serialize;

use crate::args::{parse_families, ComputeArgs, Engine, MethodArg, OutputFormat};
use crate::engines;
use crate::Outcome;

#[derive(Serialize)]
struct Record {
    method: &'static str,
    value: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    branch: Option<Branch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    omega_reduced: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
    millis: f64,
}

#[derive(Serialize)]
struct Single {
    group: String,
    n: usize,
    family: GraphFamily,
    #[serde(flatten)]
    record: Record,
}

#[derive(Serialize)]
struct Combined {
    group: String,
    n: usize,
    family: GraphFamily,
    agree: bool,
    results: Vec<Record>,
    skipped: Vec<&'static str>,
}

pub fn run(args: ComputeArgs) -> Result<Outcome> {
    let group = FiniteGroup::from_descriptor(&args.group)?;
    let families = parse_families(&args.family)?;
    let limits = args.limits.resolve()?;
    let n = group.order();

    let mut json = Vec::new();
    let mut text = String::new();
    let mut disagreement = false;
    for family in families {
        let graph = build_graph(&group, family);
        let record = |engine: Engine| -> Result<Record> {
            let c = engines::run(engine, &group, &graph, family, &limits)?;
            Ok(Record {
                method: engine.as_str(),
                value: c.value,
                branch: c.branch,
                omega_reduced: c.omega_reduced,
                witness: c.witness,
                millis: c.millis,
            })
        };
        let engine = match args.method {
            MethodArg::Formula => Some(Engine::Formula),
            MethodArg::Diameter2 => Some(Engine::Diameter2),
            MethodArg::Vertexcover => Some(Engine::Vertexcover),
            MethodArg::Oracle => Some(Engine::Oracle),
            MethodArg::All => None,
        };
        if let Some(engine) = engine {
            let r = record(engine)?;
            write_line(&mut text, group.name(), family, &r);
            json.push(serde_json::to_value(Single {
                group: group.name().to_owned(),
                n,
                family,
                record: r,
            })?);
            continue;
        }
        let mut results = Vec::new();
        let mut skipped = Vec::new();
        for engine in Engine::ALL {
            if engines::applicable(engine, family, n, &limits) {
                results.push(record(engine)?);
            } else {
                skipped.push(engine.as_str());
            }
        }
        let agree = results.windows(2).all(|w| w[0].value == w[1].value);
        disagreement |= !agree;
        for r in &results {
            write_line(&mut text, group.name(), family, r);
        }
        if !agree {
            writeln!(text, "{} {}: methods disagree", group.name(), family).unwrap();
        }
        json.push(serde_json::to_value(Combined {
            group: group.name().to_owned(),
            n,
            family,
            agree,
            results,
            skipped,
        })?);
    }

    match args.format {
        OutputFormat::Text => print!("{text}"),
        OutputFormat::Json if json.len() == 1 => println!("{}", json[0]),
        OutputFormat::Json => println!("{}", serde_json::Value::Array(json)),
    }
    Ok(if disagreement {
        Outcome::Mismatch
    } else {
        Outcome::Clean
    })
}

fn write_line(text: &mut String, group: &str, family: GraphFamily, r: &Record) {
    let branch = r.branch.map(|b| b.as_str()).unwrap_or("-");
    writeln!(
        text,
        "{group:<12} {:<14} {:<12} {:>5}  {branch}",
        family.as_str(),
        r.method,
        r.value
    )
    .unwrap();
}
