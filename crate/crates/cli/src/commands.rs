use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use cayley_db::explore::{self, CSV_HEADER};
use cayley_db::group::DEFAULT_CLOSURE_CAP;
use cayley_db::verify::{self, render_table, VerifyConfig, VerifyDocument};
use cayley_db::{
    ensure_matrix_fits, parse_elements, parse_permutations, s1_generators, CayleyGraph, Dedupe,
    Family, FamilySpec, FiniteGroup, GraphDescriptor, GroupElement, Mode, ProfileReport,
    SweepReport, WitnessCap, SCHEMA_VERSION,
};
use serde::{Deserialize, Serialize};

use crate::{
    CensusArgs, Cli, Command, DedupeArg, ExportFormat, FamilyArg, Format, GlobalArgs, ProfileArgs,
    VerifyArgs,
};

/// Largest `verify --max-n`; the identity sweep then runs to twice this.
const MAX_VERIFY_N: usize = 128;

pub fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.global.threads {
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(usize::from(threads))
                .build()
                .context("building the worker pool")?;
            pool.install(|| dispatch(&cli))
        }
        None => dispatch(&cli),
    }
}

fn dispatch(cli: &Cli) -> anyhow::Result<ExitCode> {
    let g = &cli.global;
    match &cli.command {
        Command::Profile(args) => cmd_profile(g, args),
        Command::Verify(args) => cmd_verify(g, args),
        Command::Census(args) => cmd_census(g, args),
        Command::Examples => cmd_examples(g),
    }
}

/// Maps an error to the process exit code: 3 for resource limits, 2 otherwise.
pub fn exit_code_for(err: &anyhow::Error) -> u8 {
    let core = err
        .chain()
        .find_map(|e| e.downcast_ref::<cayley_db::Error>());
    match core {
        Some(cayley_db::Error::SizeLimit { .. } | cayley_db::Error::ResourceLimit(_)) => 3,
        _ => 2,
    }
}

fn open_output(path: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn witness_cap(g: &GlobalArgs) -> WitnessCap {
    if g.all_witnesses {
        WitnessCap::All
    } else {
        WitnessCap::Limit(g.witness_cap)
    }
}

fn mode(g: &GlobalArgs) -> Mode {
    if g.permissive {
        Mode::Permissive
    } else {
        Mode::Strict
    }
}

#[derive(Debug, Deserialize)]
struct TableFile {
    table: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

/// The group and, for `--perm`, the generators it was given by.
fn load_group(args: &ProfileArgs) -> anyhow::Result<(FiniteGroup, Option<Vec<usize>>)> {
    if let Some(n) = args.dihedral {
        ensure_matrix_fits(2 * n)?;
        return Ok((FiniteGroup::dihedral(n)?, None));
    }
    if let Some(n) = args.cyclic {
        ensure_matrix_fits(n)?;
        return Ok((FiniteGroup::cyclic(n)?, None));
    }
    if let Some(cycles) = &args.perm {
        let perms = parse_permutations(cycles, args.degree)
            .with_context(|| format!("--perm {cycles:?}"))?;
        let group = FiniteGroup::permutation_closure(&perms, DEFAULT_CLOSURE_CAP)?;
        let gens = perms
            .into_iter()
            .map(|p| {
                group
                    .index_of(&GroupElement::Permutation(p))
                    .expect("generator lies in its closure")
            })
            .collect();
        return Ok((group, Some(gens)));
    }
    let path = args.table.as_ref().expect("clap enforces one group source");
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: TableFile =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    ensure_matrix_fits(file.table.len())?;
    Ok((FiniteGroup::from_table(file.table, file.labels)?, None))
}

/// What `profile` prints for a non-generating set in permissive mode.
#[derive(Debug, Serialize)]
struct DisconnectedReport {
    schema_version: &'static str,
    graph: GraphDescriptor,
    vertex_count: usize,
    connected: bool,
    subgroup_order: usize,
    components: usize,
    component_diameter: usize,
}

fn cmd_profile(g: &GlobalArgs, args: &ProfileArgs) -> anyhow::Result<ExitCode> {
    let (group, default_gens) = load_group(args)?;
    let gens = match (&args.gens, default_gens) {
        (Some(s), _) => parse_elements(&group, s).with_context(|| format!("--gens {s:?}"))?,
        (None, Some(gens)) => gens,
        (None, None) => bail!("--gens is required unless the group is given by --perm"),
    };
    let cayley = CayleyGraph::new(group, &gens, mode(g))?;

    if let Some(path) = &args.export {
        let body = match args.export_format {
            ExportFormat::Edges => cayley.edge_list(),
            ExportFormat::Json => cayley.to_json()? + "\n",
        };
        std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))?;
    }

    let format = g.format.unwrap_or(Format::Text);
    let mut out = open_output(g.out.as_deref())?;
    if !cayley.is_connected() {
        let d = cayley_db::all_pairs(cayley.graph());
        let subgroup_order = cayley.generators().subgroup_order();
        let report = DisconnectedReport {
            schema_version: SCHEMA_VERSION,
            graph: GraphDescriptor::of(&cayley),
            vertex_count: cayley.vertex_count(),
            connected: false,
            subgroup_order,
            components: cayley.vertex_count() / subgroup_order,
            component_diameter: d.diameter(),
        };
        match format {
            Format::Text => writeln!(
                out,
                "{}\ndisconnected: {} components of order {}, each of diameter {}\n\
                 no balance verdicts (defined for connected graphs only)",
                report.graph.description,
                report.components,
                report.subgroup_order,
                report.component_diameter
            )?,
            Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
            Format::Csv => write!(
                out,
                "connected,subgroup_order,components,component_diameter\nfalse,{},{},{}\n",
                report.subgroup_order, report.components, report.component_diameter
            )?,
        }
        out.flush()?;
        return Ok(ExitCode::SUCCESS);
    }

    let report = ProfileReport::compute(&cayley, witness_cap(g))?;
    match format {
        Format::Text => write!(out, "{}", report.to_text(&cayley.group().labels()))?,
        Format::Json => writeln!(out, "{}", report.to_json()?)?,
        Format::Csv => write!(out, "{}", report.to_csv()?)?,
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(g: &GlobalArgs, args: &VerifyArgs) -> anyhow::Result<ExitCode> {
    if args.max_n < 3 {
        bail!("--max-n must be at least 3, got {}", args.max_n);
    }
    if args.max_n > MAX_VERIFY_N {
        return Err(cayley_db::Error::ResourceLimit(format!(
            "--max-n {} exceeds the supported bound {MAX_VERIFY_N}",
            args.max_n
        ))
        .into());
    }
    let mut cfg = VerifyConfig::with_max_n(args.max_n);
    cfg.seed = args.seed;
    cfg.circulant_samples = args.samples;

    let reports: Vec<SweepReport> = match &args.only {
        Some(name) => vec![verify::run_check(name, &cfg).ok_or_else(|| {
            anyhow!(
                "unknown check '{name}'; expected one of: {}",
                verify::CHECK_NAMES.join(", ")
            )
        })??],
        None => verify::run_all(&cfg)?,
    };

    let mut out = open_output(g.out.as_deref())?;
    match g.format.unwrap_or(Format::Text) {
        Format::Text => write!(out, "{}", render_table(&reports, g.timings))?,
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&VerifyDocument::new(&reports))?
        )?,
        Format::Csv => {
            writeln!(out, "check,cases_run,declared_cases,failures,passed")?;
            for r in &reports {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.check,
                    r.cases_run,
                    r.declared_cases,
                    r.failures.len(),
                    r.passed()
                )?;
            }
        }
    }
    out.flush()?;
    Ok(if reports.iter().all(SweepReport::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn family_spec(g: &GlobalArgs, args: &CensusArgs) -> FamilySpec {
    let family = match args.family {
        FamilyArg::S1 => Family::S1,
        FamilyArg::S2 => Family::S2,
        FamilyArg::Half => Family::Half,
        FamilyArg::Refl3 => Family::Refl3,
        FamilyArg::General => Family::General {
            max_size: args.max_size,
        },
    };
    let mut spec = FamilySpec::new(family, args.n.clone());
    spec.dedupe = match args.dedupe {
        DedupeArg::None => Dedupe::None,
        DedupeArg::Shift => Dedupe::Shift,
    };
    spec.mode = mode(g);
    spec
}

fn cmd_census(g: &GlobalArgs, args: &CensusArgs) -> anyhow::Result<ExitCode> {
    let n = *args.n.end();
    if 2 * n > cayley_db::MAX_MATRIX_VERTICES {
        return Err(cayley_db::Error::ResourceLimit(format!(
            "n = {n} gives more than {} vertices",
            cayley_db::MAX_MATRIX_VERTICES
        ))
        .into());
    }
    let spec = family_spec(g, args);
    let format = g.format.unwrap_or(Format::Csv);
    if format == Format::Json {
        let census = explore::census(&spec)?;
        let mut out = open_output(g.out.as_deref())?;
        writeln!(out, "{}", serde_json::to_string_pretty(&census)?)?;
        out.flush()?;
        return Ok(ExitCode::SUCCESS);
    }

    let rows = explore::census_stream(&spec)?;
    let mut out = open_output(g.out.as_deref())?;
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_HEADER)?;
            for row in rows {
                w.write_record(row?.csv_record())?;
            }
            w.flush()?;
        }
        _ => {
            let mut summary = std::collections::BTreeMap::<String, usize>::new();
            for row in rows {
                let row = row?;
                *summary.entry(row.verdict_pattern.clone()).or_default() += 1;
                writeln!(out, "{}", row.text_line())?;
            }
            writeln!(out, "summary:")?;
            for (pattern, count) in &summary {
                writeln!(out, "  {pattern:<14} {count}")?;
            }
            out.flush()?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Debug, Serialize)]
struct ExampleEntry {
    name: String,
    expected_pattern: Option<String>,
    report: ProfileReport,
}

fn cmd_examples(g: &GlobalArgs) -> anyhow::Result<ExitCode> {
    let cap = witness_cap(g);
    let mut entries = Vec::new();
    let hexagonal = CayleyGraph::dihedral(6, &s1_generators(6, 2), Mode::Strict)?;
    entries.push((
        ExampleEntry {
            name: "D6 {a, a^5, b*a^2}".into(),
            expected_pattern: None,
            report: ProfileReport::compute(&hexagonal, cap)?,
        },
        hexagonal.group().labels(),
    ));
    for f in verify::named_fixtures()? {
        entries.push((
            ExampleEntry {
                name: f.name.to_string(),
                expected_pattern: Some(cayley_db::balance::verdict_pattern(f.expected)),
                report: ProfileReport::compute(&f.graph, cap)?,
            },
            f.graph.group().labels(),
        ));
    }
    let all_match = entries.iter().all(|(e, _)| {
        e.expected_pattern
            .as_ref()
            .is_none_or(|p| *p == e.report.verdict_pattern)
    });

    let mut out = open_output(g.out.as_deref())?;
    match g.format.unwrap_or(Format::Text) {
        Format::Text => {
            for (i, (e, labels)) in entries.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "# {}", e.name)?;
                write!(out, "{}", e.report.to_text(labels))?;
                if let Some(p) = &e.expected_pattern {
                    writeln!(out, "expected {p}")?;
                }
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                schema_version: &'static str,
                examples: Vec<&'a ExampleEntry>,
            }
            let doc = Doc {
                schema_version: SCHEMA_VERSION,
                examples: entries.iter().map(|(e, _)| e).collect(),
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record([
                "name",
                "order",
                "diameter",
                "verdict_pattern",
                "expected_pattern",
                "highly",
            ])?;
            for (e, _) in &entries {
                w.write_record([
                    e.name.clone(),
                    e.report.graph.order.to_string(),
                    e.report.diameter.to_string(),
                    e.report.verdict_pattern.clone(),
                    e.expected_pattern.clone().unwrap_or_default(),
                    e.report.highly_distance_balanced.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    out.flush()?;
    Ok(if all_match {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
