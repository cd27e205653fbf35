use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use toric_ech::domain::DomainSpec;
use toric_ech::geometry::{region_contains, region_contains_strictly};
use toric_ech::lattice::{enumerate_by_action, enumerate_by_index, sort_canonical};
use toric_ech::obstruct::{self, Certificate, ObstructionReport};
use toric_ech::render::Scene;
use toric_ech::report::{table, Census, Envelope, GeneratorRow};
use toric_ech::{selftest, Flavor, PathGenerator, Rational, ToricRegion};

#[derive(Parser)]
#[command(name = "toric-ech", version, about = "ECH combinatorics and anchored-embedding obstructions for toric domains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every generator under an action or index bound.
    Enumerate {
        /// Domain-spec file, or inline form such as `ball(1)`.
        domain: String,
        /// Keep generators with action strictly below this value.
        #[arg(long, conflicts_with = "index", required_unless_present = "index")]
        action_bound: Option<String>,
        /// Keep generators with exactly this combinatorial index.
        #[arg(long)]
        index: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate an obstruction criterion.
    Obstruct {
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// Source domain (file or inline form).
        inner: Option<String>,
        /// Target domain (file or inline form).
        outer: Option<String>,
        /// Polydisk P(a,1) side, for polydisk-ball.
        #[arg(long)]
        a: Option<String>,
        /// Ball capacity B4(c), for polydisk-ball.
        #[arg(long)]
        c: Option<String>,
    },
    /// Draw regions, a witness path and a generator as SVG.
    Render {
        inner: String,
        outer: Option<String>,
        /// Overlay the cross-anchor witness from inner to outer.
        #[arg(long)]
        witness: bool,
        /// Overlay a generator, e.g. `e:1,1x1`.
        #[arg(long)]
        generator: Option<String>,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Run the built-in checks.
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    PolydiskBall,
    Convex1,
    #[value(name = "2anchored")]
    TwoAnchored,
    CrossAnchor,
    Inclusion,
}

fn rational(flag: &str, s: &str) -> Result<Rational> {
    s.parse().map_err(|e| anyhow!("--{flag}: {e}"))
}

fn load(arg: &str) -> Result<DomainSpec> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        DomainSpec::from_json(&text).with_context(|| format!("in {arg}"))
    } else if arg.contains('(') {
        Ok(DomainSpec::parse_inline(arg)?)
    } else {
        bail!("{arg}: no such file, and not an inline domain like ball(1)")
    }
}

#[derive(Serialize)]
struct Containment {
    closed: bool,
    strict: bool,
}

#[derive(Serialize)]
struct ObstructResult {
    #[serde(skip_serializing_if = "Option::is_none")]
    containment: Option<Containment>,
    report: ObstructionReport,
}

fn enumerate(domain: &str, bound: Option<String>, index: Option<u64>, format: Format) -> Result<String> {
    let spec = load(domain)?;
    let region = spec.to_region()?;
    let (options, gens) = match (bound, index) {
        (Some(l), None) => {
            let l = rational("action-bound", &l)?;
            let gens = enumerate_by_action(&region, &l)?;
            (vec![("action-bound".to_string(), l.to_string())], gens)
        }
        (None, Some(i)) => {
            let mut gens = enumerate_by_index(region.flavor(), i);
            sort_canonical(&mut gens, &region);
            (vec![("index".to_string(), i.to_string())], gens)
        }
        _ => bail!("give exactly one of --action-bound and --index"),
    };
    let rows: Vec<GeneratorRow> = gens.iter().map(|g| GeneratorRow::new(g, Some(&region))).collect();
    Ok(match format {
        Format::Table => table(&rows),
        Format::Json => {
            let census = Census { flavor: region.flavor(), count: rows.len(), generators: rows };
            Envelope::new("enumerate", options, vec![spec], census).to_json()
        }
    })
}

fn obstruct_cmd(
    theorem: Theorem,
    inner: Option<String>,
    outer: Option<String>,
    a: Option<String>,
    c: Option<String>,
) -> Result<String> {
    if let Theorem::PolydiskBall = theorem {
        if inner.is_some() || outer.is_some() {
            bail!("polydisk-ball takes --a and --c, not domain files");
        }
        let a = rational("a", &a.ok_or_else(|| anyhow!("polydisk-ball needs --a"))?)?;
        let c = rational("c", &c.ok_or_else(|| anyhow!("polydisk-ball needs --c"))?)?;
        let report = obstruct::check_polydisk_ball(&a, &c)?;
        let inputs = vec![
            DomainSpec::Polydisk { a: a.clone(), b: Rational::one() },
            DomainSpec::Ball { r: c.clone() },
        ];
        let options = vec![
            ("theorem".into(), "polydisk-ball".into()),
            ("a".into(), a.to_string()),
            ("c".into(), c.to_string()),
        ];
        let result = ObstructResult { containment: None, report };
        return Ok(Envelope::new("obstruct", options, inputs, result).to_json());
    }
    if a.is_some() || c.is_some() {
        bail!("--a and --c only apply to polydisk-ball");
    }
    let (Some(inner), Some(outer)) = (inner, outer) else {
        bail!("this theorem needs an inner and an outer domain");
    };
    let (si, so) = (load(&inner)?, load(&outer)?);
    let (ri, ro) = (si.to_region()?, so.to_region()?);
    let (name, report) = match theorem {
        Theorem::Convex1 => ("convex1", obstruct::check_convex1(&ri, &ro)?),
        Theorem::TwoAnchored => ("2anchored", obstruct::check_2anchored(&ri, &ro)?),
        Theorem::CrossAnchor => ("cross-anchor", obstruct::check_cross_anchor(&ri, &ro)?),
        Theorem::Inclusion => ("inclusion", obstruct::check_inclusion_anchor(&ri, &ro)?),
        Theorem::PolydiskBall => unreachable!(),
    };
    let containment = Containment {
        closed: region_contains(&ri, &ro),
        strict: region_contains_strictly(&ri, &ro),
    };
    let result = ObstructResult { containment: Some(containment), report };
    let options = vec![("theorem".to_string(), name.to_string())];
    Ok(Envelope::new("obstruct", options, vec![si, so], result).to_json())
}

fn render(inner: &str, outer: Option<&str>, witness: bool, generator: Option<&str>) -> Result<String> {
    let ri = load(inner)?.to_region()?;
    let ro: Option<ToricRegion> = match outer {
        Some(o) => Some(load(o)?.to_region()?),
        None => None,
    };
    let path = if witness {
        let Some(ro) = &ro else { bail!("--witness needs an outer domain") };
        if ri.flavor() == Flavor::Concave || ro.flavor() == Flavor::Concave {
            return Err(toric_ech::Error::Unsupported("witness paths for concave regions".into()).into());
        }
        match obstruct::check_cross_anchor(&ri, ro)?.certificate {
            Certificate::Witness { path } => Some(path),
            _ => bail!("no witness: b(outer) does not exceed the (1,1)-support of inner"),
        }
    } else {
        None
    };
    let g = generator.map(|s| PathGenerator::parse(ri.flavor(), s)).transpose()?;
    let mut regions = vec![&ri];
    regions.extend(ro.as_ref());
    Ok(Scene { regions, witness: path.as_ref(), generator: g.as_ref() }.to_svg())
}

fn run(cli: Cli) -> Result<ExitCode> {
    let (text, code) = match cli.command {
        Command::Enumerate { domain, action_bound, index, format } => {
            (enumerate(&domain, action_bound, index, format)?, ExitCode::SUCCESS)
        }
        Command::Obstruct { theorem, inner, outer, a, c } => {
            (obstruct_cmd(theorem, inner, outer, a, c)?, ExitCode::SUCCESS)
        }
        Command::Render { inner, outer, witness, generator, output } => {
            let svg = render(&inner, outer.as_deref(), witness, generator.as_deref())?;
            if let Some(out) = output {
                fs::write(&out, svg).with_context(|| format!("writing {out}"))?;
                return Ok(ExitCode::SUCCESS);
            }
            (svg, ExitCode::SUCCESS)
        }
        Command::Selftest => {
            let checks = selftest::run();
            let code = if selftest::all_passed(&checks) { ExitCode::SUCCESS } else { ExitCode::FAILURE };
            (selftest::table(&checks), code)
        }
    };
    std::io::stdout().write_all(text.as_bytes())?;
    Ok(code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
