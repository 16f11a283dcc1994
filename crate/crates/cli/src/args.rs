use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use grpdim_core::{GraphFamily, SearchLimits};

#[derive(Parser)]
#[command(
    name = "grpdim",
    version,
    about = "Strong metric dimension of power-type graphs of finite groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Compute sdim of one group's graph.
    Compute(ComputeArgs),
    /// Cross-check methods over the built-in catalog.
    Verify(VerifyArgs),
    /// Write a group's graph as DOT or JSON.
    Export(ExportArgs),
}

#[derive(Args)]
pub struct ComputeArgs {
    /// Group descriptor, e.g. `Q8`, `Z2xS3`, `E3^2` or `file:table.txt`.
    pub group: String,
    /// Graph family, or `all`.
    #[arg(long, default_value = "all")]
    pub family: String,
    #[arg(long, value_enum, default_value_t = MethodArg::All)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    #[command(flatten)]
    pub limits: LimitArgs,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 16)]
    pub max_order: usize,
    /// Comma-separated families, or `all`.
    #[arg(long, default_value = "all")]
    pub families: String,
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        default_value = "formula,diameter2,vertexcover,oracle"
    )]
    pub methods: Vec<Engine>,
    /// Write the per-method CSV report here.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Write the JSON report here.
    #[arg(long)]
    pub json: Option<PathBuf>,
    #[command(flatten)]
    pub limits: LimitArgs,
}

#[derive(Args)]
pub struct ExportArgs {
    pub group: String,
    #[arg(long)]
    pub family: String,
    #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
    pub format: ExportFormat,
    /// Output file; stdout when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Args)]
pub struct LimitArgs {
    /// Largest order the subset oracle enumerates (env: GRPDIM_ORACLE_CAP).
    #[arg(long)]
    pub oracle_cap: Option<usize>,
    /// Largest order handed to the vertex-cover route.
    #[arg(long)]
    pub cover_cap: Option<usize>,
    /// Largest graph handed to the clique solver.
    #[arg(long)]
    pub clique_cap: Option<usize>,
    /// Branch-and-bound node budget per search.
    #[arg(long)]
    pub node_budget: Option<u64>,
}

impl LimitArgs {
    pub fn resolve(&self) -> Result<SearchLimits> {
        let mut limits = SearchLimits::default();
        if let Ok(raw) = std::env::var("GRPDIM_ORACLE_CAP") {
            limits.oracle_cap = raw
                .trim()
                .parse()
                .with_context(|| format!("GRPDIM_ORACLE_CAP=`{raw}` is not a number"))?;
        }
        if let Some(c) = self.oracle_cap {
            limits.oracle_cap = c;
        }
        if limits.oracle_cap > SearchLimits::ORACLE_HARD_CAP {
            bail!(
                "oracle cap {} exceeds the hard limit {}",
                limits.oracle_cap,
                SearchLimits::ORACLE_HARD_CAP
            );
        }
        limits.cover_cap = self.cover_cap.unwrap_or(limits.cover_cap);
        limits.clique_cap = self.clique_cap.unwrap_or(limits.clique_cap);
        limits.node_budget = self.node_budget.unwrap_or(limits.node_budget);
        Ok(limits)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Engine {
    Formula,
    Diameter2,
    Vertexcover,
    Oracle,
}

impl Engine {
    pub const ALL: [Engine; 4] = [
        Engine::Formula,
        Engine::Diameter2,
        Engine::Vertexcover,
        Engine::Oracle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Engine::Formula => "formula",
            Engine::Diameter2 => "diameter2",
            Engine::Vertexcover => "vertexcover",
            Engine::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Formula,
    Diameter2,
    Vertexcover,
    Oracle,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Json,
}

pub fn parse_families(raw: &str) -> Result<Vec<GraphFamily>> {
    let mut out = Vec::new();
    for part in raw.split(',').map(str::trim) {
        if part == "all" {
            out.extend(GraphFamily::ALL);
        } else {
            out.push(part.parse()?);
        }
    }
    out.sort_by_key(|f| family_rank(*f));
    out.dedup();
    if out.is_empty() {
        bail!("no graph family given");
    }
    Ok(out)
}

pub fn family_rank(f: GraphFamily) -> usize {
    GraphFamily::ALL.iter().position(|&g| g == f).unwrap()
}

/// Writes `text` to `path`, newline-terminated.
pub fn write_file(path: &std::path::Path, text: &str) -> Result<()> {
    let mut text = text.to_owned();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}
