use anyhow::Result;
use grpdim_core::graph::to_dot;
use grpdim_core::{build_graph, FiniteGroup, GraphFamily};

use crate::args::{write_file, ExportArgs, ExportFormat};
use crate::Outcome;

pub fn run(args: ExportArgs) -> Result<Outcome> {
    let group = FiniteGroup::from_descriptor(&args.group)?;
    let family: GraphFamily = args.family.parse()?;
    let graph = build_graph(&group, family);
    let text = match args.format {
        ExportFormat::Json => graph.to_json() + "\n",
        ExportFormat::Dot => {
            let orders: Vec<u64> = group.elements().map(|a| group.element_order(a)).collect();
            to_dot(
                &graph,
                &format!("{}_{}", group.name(), family),
                Some(&orders),
            )
        }
    };
    match &args.output {
        Some(path) => write_file(path, &text)?,
        None => print!("{text}"),
    }
    Ok(Outcome::Clean)
}
