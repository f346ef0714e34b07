//! Command-line front end. `run` takes the argument list and output streams
//! and returns the process exit code.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::atom_ledger::{
    catalog_low_dim, feasibility, obstruction_report, AtomRecord, AtomUnderTest, Verdict,
};
use crate::blowup::{admissible_centers, blowup_with, fuzz_sequence, BlowupCenter, FuzzOptions};
use crate::exact_algebra::LaurentPoly;
use crate::fixed_locus::{
    build_example, Configuration, ExampleFamily, LineAction, P3Z2Variant, P3Z3Variant,
    FORMAT_VERSION,
};
use crate::invariants::{evaluate, InvariantKind};
use crate::symbol_groups::{
    beta, build_presentation, class_of, parse_formal_sum, DualGroup, Presentation, DEFAULT_BUDGET,
};

#[derive(Parser, Debug)]
#[command(
    name = "eqbir",
    version,
    about = "Equivariant birational invariants of Z/p-actions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structure of B_n(G)
    Group {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Operations on formal sums of symbols
    Symbol {
        #[command(subcommand)]
        op: SymbolOp,
    },
    /// Class of the fixed locus in B_dim(Z/p)
    Beta { config: PathBuf },
    /// Evaluate an invariant with its term breakdown
    Invariant {
        /// I, J, K, combined, fine, beta, or combined:G / fine:LABEL
        #[arg(long)]
        kind: String,
        #[arg(long)]
        g: Option<u32>,
        #[arg(long)]
        label: Option<String>,
        #[arg(long)]
        json: bool,
        config: PathBuf,
    },
    /// Apply one blowup, or list the admissible centers
    Blowup {
        config: PathBuf,
        /// Center as JSON, e.g. '{"kind":"isolated_fixed_point","point":0}'
        #[arg(long, conflicts_with_all = ["center_index", "list"])]
        center: Option<String>,
        /// Index into the admissible centers
        #[arg(long, conflicts_with = "list")]
        center_index: Option<usize>,
        #[arg(long)]
        list: bool,
        /// Also compare beta
        #[arg(long)]
        beta: bool,
        /// Where to write the blown-up configuration
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Random blowup sequence; exit 1 if any checked invariant changes
    Fuzz {
        config: PathBuf,
        #[arg(long, default_value_t = 100)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated kinds, e.g. J,combined:4,beta
        #[arg(long, value_delimiter = ',')]
        check: Vec<String>,
        /// Include every step in the report
        #[arg(long)]
        trace: bool,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Nonnegative integer solutions of target = Σ x_i basis_i
    Feasible {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        target: Vec<i64>,
        /// One basis vector per flag, comma-separated
        #[arg(long, allow_hyphen_values = true)]
        basis: Vec<String>,
        /// INDEX:MIN, zero-based
        #[arg(long)]
        forced: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Emit a built-in configuration
    Example {
        name: String,
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long, default_value_t = 2)]
        g: u32,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long)]
        variant: Option<String>,
        #[arg(long, value_enum, default_value_t = LineActionArg::Nontrivial)]
        line_action: LineActionArg,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        self_intersection: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Atoms of points and curves with a Z/p-action
    Catalog {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        max_genus: u32,
    },
    /// Per-atom decomposition report against point atoms
    Obstruct {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GroupArgs {
    /// Cyclic group Z/M
    #[arg(long)]
    cyclic: Option<i64>,
    /// Orders of a product of cyclic groups, comma-separated
    #[arg(long, value_delimiter = ',')]
    orders: Option<Vec<i64>>,
}

impl GroupArgs {
    fn dual(&self) -> Result<DualGroup> {
        Ok(match (&self.cyclic, &self.orders) {
            (Some(m), _) => DualGroup::cyclic(*m)?,
            (None, Some(o)) => DualGroup::new(o.clone())?,
            (None, None) => bail!("give --cyclic or --orders"),
        })
    }
}

#[derive(Subcommand, Debug)]
enum SymbolOp {
    /// Canonical class of a formal sum such as "[0,1,2] - 2[1,1,2]"
    Reduce {
        #[command(flatten)]
        group: GroupArgs,
        /// Symbol length; taken from the sum when omitted
        #[arg(long)]
        n: Option<usize>,
        sum: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LineActionArg {
    Trivial,
    Nontrivial,
}

/// Input of `obstruct`.
#[derive(Serialize, Deserialize)]
pub struct ObstructionInput {
    pub format_version: u32,
    pub p: u32,
    #[serde(default = "one")]
    pub max_genus: u32,
    pub atoms: Vec<AtomUnderTest>,
}

fn one() -> u32 {
    1
}

fn budget() -> usize {
    std::env::var("EI_BUDGET")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

fn read_config(path: &Path) -> Result<Configuration> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Configuration::from_json(&text).with_context(|| format!("in {}", path.display()))
}

fn presentation_for(c: &Configuration) -> Result<Presentation> {
    let group = DualGroup::cyclic(c.p())?;
    Ok(build_presentation(&group, usize::from(c.dim), budget())?)
}

fn parse_vector(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| anyhow!("malformed vector `{s}`"))
        })
        .collect()
}

fn parse_kind(kind: &str, g: Option<u32>, label: Option<String>) -> Result<InvariantKind> {
    match kind {
        "combined" => {
            let g = g.ok_or_else(|| anyhow!("--kind combined needs --g"))?;
            Ok(format!("combined:{g}").parse()?)
        }
        "fine" => {
            let l = label.ok_or_else(|| anyhow!("--kind fine needs --label"))?;
            Ok(InvariantKind::Fine(l))
        }
        other => Ok(other.parse()?),
    }
}

fn example_family(
    name: &str,
    k: u32,
    g: u32,
    p: u32,
    variant: Option<&str>,
    line_action: LineActionArg,
    self_intersection: i64,
) -> Result<ExampleFamily> {
    let variant = variant.unwrap_or("");
    Ok(match name {
        "trigonal_threefold" => ExampleFamily::TrigonalThreefold { k },
        "surface_times_line" => ExampleFamily::SurfaceTimesLine {
            genus: g,
            p,
            line_action: match line_action {
                LineActionArg::Trivial => LineAction::Trivial,
                LineActionArg::Nontrivial => LineAction::Nontrivial,
            },
            self_intersection,
        },
        "p2_linear_z2" => ExampleFamily::P2LinearZ2,
        "p3_linear_z2" => ExampleFamily::P3LinearZ2(match variant {
            "point_plane" | "" => P3Z2Variant::PointPlane,
            "two_lines" => P3Z2Variant::TwoLines,
            v => bail!("unknown p3_linear_z2 variant `{v}` (point_plane, two_lines)"),
        }),
        "p3_linear_z3" => ExampleFamily::P3LinearZ3(match variant {
            "point_plane" | "" => P3Z3Variant::PointPlane,
            "two_lines" => P3Z3Variant::TwoLines,
            "line_two_points" => P3Z3Variant::LineTwoPoints,
            v => bail!(
                "unknown p3_linear_z3 variant `{v}` (point_plane, two_lines, line_two_points)"
            ),
        }),
        other => bail!(
            "unknown example `{other}`; known: {}, x1111_atoms",
            ExampleFamily::names().join(", ")
        ),
    })
}

/// Atom table of the double cover of projective 3-space branched in the
/// quartic `Σ 1/z_i`, with the elliptic-curve atom forced in the `λ = 0`
/// block and one free orbit forced in the `λ = 4` block.
pub fn x1111_atoms() -> ObstructionInput {
    let atom = |rho, rho_g, p: LaurentPoly| AtomRecord {
        hodge_poly: p,
        rho,
        rho_g,
        g_action_trivial: false,
        mt_label: None,
    };
    ObstructionInput {
        format_version: FORMAT_VERSION,
        p: 2,
        max_genus: 1,
        atoms: vec![
            AtomUnderTest {
                label: "lambda=16".into(),
                atom: atom(1, 1, LaurentPoly::constant(1)),
                forced: vec![],
            },
            AtomUnderTest {
                label: "lambda=4".into(),
                atom: atom(4, 2, LaurentPoly::constant(4)),
                forced: vec![AtomRecord::free_orbit_point(2)],
            },
            AtomUnderTest {
                label: "lambda=0".into(),
                atom: atom(5, 3, LaurentPoly::from_terms([(-1, 1), (0, 3), (1, 1)])),
                forced: vec![AtomRecord::trivial_curve(1, None)],
            },
        ],
    }
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => {
            fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display()))
        }
        None => Ok(writeln!(out, "{text}")?),
    }
}

/// Runs one command; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let closed = e
                .downcast_ref::<std::io::Error>()
                .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe);
            if closed {
                return 0;
            }
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Group { group, n, json } => {
            let pres = build_presentation(&group.dual()?, n, budget())?;
            if json {
                let st = &pres.structure;
                let v = serde_json::json!({
                    "group": pres.group.to_string(),
                    "n": n,
                    "generators": pres.generators.len(),
                    "relations": pres.num_relations,
                    "free_rank": st.free_rank(),
                    "torsion": st.torsion().iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "structure": st.to_string(),
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
            } else {
                writeln!(out, "{}", pres.structure)?;
            }
            Ok(0)
        }

        Command::Symbol {
            op: SymbolOp::Reduce { group, n, sum },
        } => {
            let dual = group.dual()?;
            let parsed = parse_formal_sum(&sum, &dual)?;
            let n = match n.or_else(|| parsed.terms().next().map(|(s, _)| s.len())) {
                Some(n) => n,
                None => bail!("empty sum: give --n"),
            };
            let pres = build_presentation(&dual, n, budget())?;
            let class = class_of(&parsed, &pres)?;
            writeln!(out, "B_{n}({dual}) = {}", pres.structure)?;
            writeln!(out, "sum: {parsed}")?;
            if class.is_zero() {
                writeln!(out, "class: 0")?;
            } else {
                writeln!(out, "class: {class}")?;
            }
            Ok(0)
        }

        Command::Beta { config } => {
            let c = read_config(&config)?;
            let pres = presentation_for(&c)?;
            let class = beta(&c, &pres)?;
            writeln!(out, "B_{}(Z/{}) = {}", c.dim, c.p(), pres.structure)?;
            if class.is_zero() {
                writeln!(out, "beta: 0")?;
            } else {
                writeln!(out, "beta: {class}")?;
            }
            Ok(0)
        }

        Command::Invariant {
            kind,
            g,
            label,
            json,
            config,
        } => {
            let c = read_config(&config)?;
            let kind = parse_kind(&kind, g, label)?;
            if kind == InvariantKind::Beta {
                let pres = presentation_for(&c)?;
                let class = beta(&c, &pres)?;
                writeln!(out, "beta = {class}")?;
                return Ok(0);
            }
            let e = evaluate(&c, &kind)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&e)?)?;
            } else {
                writeln!(out, "{} = {}", e.kind, e.value)?;
                for t in &e.terms {
                    writeln!(out, "  {}: {} = {}", t.component, t.formula, t.value)?;
                }
            }
            Ok(0)
        }

        Command::Blowup {
            config,
            center,
            center_index,
            list,
            beta,
            out: out_path,
            json,
        } => {
            let c = read_config(&config)?;
            let centers = admissible_centers(&c);
            if list {
                for (i, x) in centers.iter().enumerate() {
                    writeln!(out, "{i}\t{}", serde_json::to_string(x)?)?;
                }
                return Ok(0);
            }
            let center: BlowupCenter = match (center, center_index) {
                (Some(text), _) => serde_json::from_str(&text).context("parsing --center")?,
                (None, Some(i)) => centers.get(i).cloned().ok_or_else(|| {
                    anyhow!("center index {i} out of range ({} centers)", centers.len())
                })?,
                (None, None) => bail!("give --center, --center-index or --list"),
            };
            let pres = if beta {
                Some(presentation_for(&c)?)
            } else {
                None
            };
            let report = blowup_with(&c, &center, pres.as_ref())?;
            if let Some(p) = &out_path {
                emit(out, Some(p), &report.after.to_json())?;
            }
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                writeln!(out, "center: {}", serde_json::to_string(&report.center)?)?;
                writeln!(out, "case: {}", report.case)?;
                for s in &report.subcases {
                    writeln!(out, "  incidence: {s}")?;
                }
                writeln!(
                    out,
                    "atoms added: {}",
                    report.after.atoms.len() - report.before.atoms.len()
                )?;
                for d in &report.deltas {
                    match d.change {
                        Some(ch) => {
                            writeln!(out, "{}: {} -> {} (delta {ch})", d.kind, d.before, d.after)?
                        }
                        None => writeln!(
                            out,
                            "{}: {} (delta {})",
                            d.kind,
                            d.after,
                            if d.is_zero() { "0" } else { "nonzero" }
                        )?,
                    }
                }
            }
            if out_path.is_none() && !json {
                emit(out, None, &report.after.to_json())?;
            }
            Ok(0)
        }

        Command::Fuzz {
            config,
            steps,
            seed,
            check,
            trace,
            inject_fault,
        } => {
            let c = read_config(&config)?;
            let checks = check
                .iter()
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.parse::<InvariantKind>())
                .collect::<Result<Vec<_>, _>>()?;
            let mut opts = FuzzOptions::new(steps, seed, checks);
            opts.budget = budget();
            opts.fault = inject_fault.as_deref().map(str::parse).transpose()?;
            let mut report = fuzz_sequence(&c, &opts)?;
            if !trace {
                report.history.clear();
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            Ok(if report.drift.is_some() { 1 } else { 0 })
        }

        Command::Feasible {
            target,
            basis,
            forced,
            json,
        } => {
            let basis = basis
                .iter()
                .map(|b| parse_vector(b))
                .collect::<Result<Vec<_>>>()?;
            let forced = forced
                .iter()
                .map(|f| {
                    let (i, m) = f
                        .split_once(':')
                        .ok_or_else(|| anyhow!("malformed --forced `{f}`, expected INDEX:MIN"))?;
                    Ok((i.trim().parse::<usize>()?, m.trim().parse::<u64>()?))
                })
                .collect::<Result<Vec<_>>>()?;
            let r = feasibility(&target, &basis, &forced)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?;
            } else {
                writeln!(out, "{r}")?;
            }
            Ok(match r.verdict {
                Verdict::Feasible => 0,
                Verdict::Infeasible => 2,
            })
        }

        Command::Example {
            name,
            k,
            g,
            p,
            variant,
            line_action,
            self_intersection,
            out: path,
        } => {
            if name == "x1111_atoms" {
                emit(
                    out,
                    path.as_deref(),
                    &serde_json::to_string_pretty(&x1111_atoms())?,
                )?;
                return Ok(0);
            }
            let family = example_family(
                &name,
                k,
                g,
                p,
                variant.as_deref(),
                line_action,
                self_intersection,
            )?;
            let c = build_example(&family)?;
            emit(out, path.as_deref(), &c.to_json())?;
            Ok(0)
        }

        Command::Catalog { p, max_genus } => {
            let cat = catalog_low_dim(p, max_genus);
            writeln!(out, "{}", serde_json::to_string_pretty(&cat)?)?;
            Ok(0)
        }

        Command::Obstruct { input, json } => {
            let text = fs::read_to_string(&input)
                .with_context(|| format!("reading {}", input.display()))?;
            let data: ObstructionInput = serde_json::from_str(&text)?;
            if data.format_version != FORMAT_VERSION {
                bail!("unsupported format_version {}", data.format_version);
            }
            let cat = catalog_low_dim(data.p, data.max_genus);
            let report = obstruction_report(&data.atoms, &cat)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                for e in &report.entries {
                    writeln!(out, "{}", e.narrative)?;
                }
                writeln!(
                    out,
                    "verdict: {}",
                    if report.obstructed {
                        "obstructed"
                    } else {
                        "unobstructed"
                    }
                )?;
            }
            Ok(0)
        }
    }
}
