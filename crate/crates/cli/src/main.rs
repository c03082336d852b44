//! `logfan`: JSON front end for the logfan library.
//!
//! Every object argument is a path to a JSON file, inline JSON, or the name
//! of an object in the `--workspace` file. Results go to standard output as
//! JSON with sorted keys.
//!
//! Exit status: 0 on success, 1 when the library rejects the input (the
//! message names the violated precondition) or a verification suite fails,
//! 2 on usage errors and malformed or ill-shaped JSON.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use logfan::fan::{common_refinement, is_subdivision, make_smooth, star_subdivision};
use logfan::topo::{cross_section, homology, verify_boundary_acyclicity, Verdict};
use logfan::verify::{self, Sizes};
use logfan::wire::{self, WireError, Workspace};
use logfan::{Bounds, Fan, FanMorphism, FsMonoid, MonoidHom};

#[derive(Parser)]
#[command(name = "logfan", version)]
#[command(about = "Fine saturated monoids, fans and the vertical-boundary calculus")]
struct Cli {
    /// JSON file of named monoids, homs, fans and morphisms
    #[arg(long, global = true, value_name = "FILE")]
    workspace: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on a single monoid
    #[command(subcommand)]
    Monoid(MonoidCmd),
    /// Operations on monoid homomorphisms
    #[command(subcommand)]
    Hom(HomCmd),
    /// Fans, subdivisions and vertical subfans
    #[command(subcommand)]
    Fan(FanCmd),
    /// Cross-sections, homology and the acyclicity check
    #[command(subcommand)]
    Topo(TopoCmd),
    /// Randomized property suites
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args)]
struct MonoidArg {
    /// Monoid: file, inline JSON or workspace name
    #[arg(long)]
    monoid: String,
}

#[derive(Args)]
struct HomArg {
    /// Hom: file, inline JSON or workspace name
    #[arg(long)]
    hom: String,
}

#[derive(Subcommand)]
enum MonoidCmd {
    /// Rank, groupification and basic properties
    Info(MonoidArg),
    /// All faces, smallest first
    Faces(MonoidArg),
    /// The saturation
    Saturate(MonoidArg),
    /// Split off the torsion of the unit group
    SplitTorsion(MonoidArg),
    /// The dual monoid Hom(P, N) of a sharp monoid
    Dual(MonoidArg),
}

#[derive(Subcommand)]
enum HomCmd {
    /// Whether the image meets no proper face of the target
    Vertical(HomArg),
    /// Whether the hom is exact
    Exact(HomArg),
    /// Saturated pushout of two homs with a common source
    Pushout {
        /// P -> Q
        #[arg(long)]
        left: String,
        /// P -> P'
        #[arg(long)]
        right: String,
    },
    /// Saturated cokernel with its projection
    Cokernel(HomArg),
}

#[derive(Subcommand)]
enum FanCmd {
    /// The fan Spec(P) of a monoid
    Spec(MonoidArg),
    /// Star subdivision at a point of the support
    Star {
        #[arg(long)]
        fan: String,
        /// Lattice point, e.g. `[1,1]` or `1,1`
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Common refinement of fans with equal support
    Refine {
        /// Repeat for each fan
        #[arg(long = "fan", required = true)]
        fans: Vec<String>,
    },
    /// The vertical subfan of a morphism, or of Spec of a hom
    VerticalBoundary {
        #[arg(long, required_unless_present = "hom", conflicts_with = "hom")]
        morphism: Option<String>,
        #[arg(long)]
        hom: Option<String>,
    },
    /// Resolve to a smooth fan by star subdivisions
    Smooth {
        #[arg(long)]
        fan: String,
    },
    /// Whether the first fan subdivides the second
    IsSubdivision {
        #[arg(long)]
        fine: String,
        #[arg(long)]
        coarse: String,
    },
}

#[derive(Subcommand)]
enum TopoCmd {
    /// Cut a fan at height one of a functional positive on its rays
    CrossSection {
        #[arg(long)]
        fan: String,
        /// Functional, e.g. `[1,1]` or `1,1`
        #[arg(long, allow_hyphen_values = true)]
        height: String,
    },
    /// Integral homology of the face closure of a complex, triangulated if
    /// some cell is not a simplex
    Homology {
        #[arg(long)]
        complex: String,
        /// Unreduced homology
        #[arg(long)]
        unreduced: bool,
    },
    /// Reduced homology of the vertical cross-section of theta: N -> P
    VerifyAcyclic {
        #[command(flatten)]
        monoid: MonoidArg,
        /// A hom N -> P or the element theta(1)
        #[arg(long)]
        theta: String,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Run every suite
    All {
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// Small case counts, for smoke testing
        #[arg(long)]
        quick: bool,
    },
}

const QUICK: Sizes = Sizes {
    chains: 20,
    squares: 10,
    splits: 10,
    acyclic: 5,
    stars: 10,
    refinements: 2,
    resolutions: 3,
    interior: 10,
    duality: 10,
    oracles: 5,
};

enum CliError {
    Usage(String),
    Wire(WireError),
}

impl From<WireError> for CliError {
    fn from(e: WireError) -> Self {
        CliError::Wire(e)
    }
}

impl From<logfan::Error> for CliError {
    fn from(e: logfan::Error) -> Self {
        CliError::Wire(WireError::Domain(e))
    }
}

type CliResult<T> = Result<T, CliError>;

/// Command output and whether it counts as success.
struct Outcome {
    value: Value,
    ok: bool,
}

impl From<Value> for Outcome {
    fn from(value: Value) -> Self {
        Outcome { value, ok: true }
    }
}

struct Ctx {
    ws: Workspace,
}

impl Ctx {
    /// Inline JSON, a workspace name (as a JSON string), or a file.
    fn value(&self, arg: &str) -> CliResult<Value> {
        let t = arg.trim_start();
        if t.starts_with(['{', '[', '"']) {
            return Ok(wire::parse(arg)?);
        }
        if self.ws.contains(arg) {
            return Ok(Value::String(arg.to_string()));
        }
        let text = fs::read_to_string(arg).map_err(|e| CliError::Usage(format!("cannot read `{arg}`: {e}")))?;
        Ok(wire::parse(&text)?)
    }

    fn monoid(&self, arg: &str) -> CliResult<FsMonoid> {
        Ok(self.ws.monoid_ref(&self.value(arg)?, "$")?)
    }

    fn hom(&self, arg: &str) -> CliResult<MonoidHom> {
        Ok(self.ws.hom_ref(&self.value(arg)?, "$")?)
    }

    fn fan(&self, arg: &str) -> CliResult<Fan> {
        Ok(self.ws.fan_ref(&self.value(arg)?, "$")?)
    }

    fn morphism(&self, arg: &str) -> CliResult<FanMorphism> {
        Ok(self.ws.morphism_ref(&self.value(arg)?, "$")?)
    }

    /// A JSON integer array or a comma-separated list.
    fn vector(&self, arg: &str) -> CliResult<Vec<logfan::Int>> {
        let t = arg.trim();
        let v = if t.starts_with('[') {
            wire::parse(t)?
        } else {
            let items: Vec<Value> = t.split(',').map(|s| Value::String(s.trim().to_string())).collect();
            Value::Array(items)
        };
        Ok(wire::ints_from_json(&v, "$")?)
    }
}

fn monoid_cmd(ctx: &Ctx, cmd: &MonoidCmd) -> CliResult<Outcome> {
    Ok(match cmd {
        MonoidCmd::Info(a) => {
            let p = ctx.monoid(&a.monoid)?;
            let g = p.groupification().group();
            let hilbert = if p.is_sharp() && p.is_saturated()? {
                Value::Array(p.hilbert_basis()?.iter().map(wire::elem_to_json).collect())
            } else {
                Value::Null
            };
            json!({
                "monoid": wire::monoid_to_json(&p),
                "rank": p.rank(),
                "group": { "rank": g.rank, "torsion": wire::ints_to_json(&g.invariant_factors) },
                "sharp": p.is_sharp(),
                "saturated": p.is_saturated()?,
                "is_group": p.is_group(),
                "units_rank": p.units().rank(),
                "faces": p.faces().len(),
                "hilbert_basis": hilbert,
            })
            .into()
        }
        MonoidCmd::Faces(a) => {
            let p = ctx.monoid(&a.monoid)?;
            let faces: Vec<Value> = p
                .faces()
                .iter()
                .map(|f| {
                    json!({
                        "generators": f.selector(),
                        "rank": f.monoid().rank(),
                        "proper": f.is_proper(),
                    })
                })
                .collect();
            json!({ "faces": faces }).into()
        }
        MonoidCmd::Saturate(a) => {
            let p = ctx.monoid(&a.monoid)?;
            json!({ "monoid": wire::monoid_to_json(&p.saturate()?) }).into()
        }
        MonoidCmd::SplitTorsion(a) => {
            let s = ctx.monoid(&a.monoid)?.torsion_split()?;
            json!({
                "tf": wire::monoid_to_json(&s.tf),
                "tor": wire::ints_to_json(&s.tor.invariant_factors),
                "sum": wire::monoid_to_json(&s.sum),
                "forward": wire::hom_to_json(&s.forward),
                "backward": wire::hom_to_json(&s.backward),
            })
            .into()
        }
        MonoidCmd::Dual(a) => {
            let p = ctx.monoid(&a.monoid)?;
            json!({ "monoid": wire::monoid_to_json(&p.dual_monoid()?) }).into()
        }
    })
}

fn hom_cmd(ctx: &Ctx, cmd: &HomCmd) -> CliResult<Outcome> {
    Ok(match cmd {
        HomCmd::Vertical(a) => json!({ "vertical": ctx.hom(&a.hom)?.is_vertical() }).into(),
        HomCmd::Exact(a) => json!({ "exact": ctx.hom(&a.hom)?.is_exact() }).into(),
        HomCmd::Pushout { left, right } => {
            let po = ctx.hom(left)?.pushout(&ctx.hom(right)?)?;
            json!({
                "result": wire::monoid_to_json(&po.result),
                "into_left": wire::hom_to_json(&po.into_left),
                "into_right": wire::hom_to_json(&po.into_right),
            })
            .into()
        }
        HomCmd::Cokernel(a) => {
            let (c, proj) = ctx.hom(&a.hom)?.saturated_cokernel()?;
            json!({
                "cokernel": wire::monoid_to_json(&c),
                "is_group": c.is_group(),
                "projection": wire::hom_to_json(&proj),
            })
            .into()
        }
    })
}

fn vectors(vs: &[Vec<logfan::Int>]) -> Value {
    Value::Array(vs.iter().map(|v| wire::ints_to_json(v)).collect())
}

fn fan_cmd(ctx: &Ctx, cmd: &FanCmd) -> CliResult<Outcome> {
    Ok(match cmd {
        FanCmd::Spec(a) => json!({ "fan": wire::fan_to_json(&Fan::spec(&ctx.monoid(&a.monoid)?)?) }).into(),
        FanCmd::Star { fan, point } => {
            let f = star_subdivision(&ctx.fan(fan)?, &ctx.vector(point)?)?;
            json!({ "fan": wire::fan_to_json(&f) }).into()
        }
        FanCmd::Refine { fans } => {
            let fs = fans.iter().map(|f| ctx.fan(f)).collect::<CliResult<Vec<Fan>>>()?;
            json!({ "fan": wire::fan_to_json(&common_refinement(&fs)?) }).into()
        }
        FanCmd::VerticalBoundary { morphism, hom } => {
            let m = match (morphism, hom) {
                (Some(m), _) => ctx.morphism(m)?,
                (None, Some(h)) => FanMorphism::spec_of(&ctx.hom(h)?)?,
                (None, None) => unreachable!("clap requires one of the two"),
            };
            let sub = m.vertical_subfan();
            json!({
                "fan": wire::fan_to_json(&sub),
                "cones": sub.len(),
                "vertical": m.is_vertical(),
            })
            .into()
        }
        FanCmd::Smooth { fan } => {
            let r = make_smooth(&ctx.fan(fan)?)?;
            json!({
                "fan": wire::fan_to_json(&r.fan),
                "centers": vectors(&r.centers),
                "trace": vectors(&r.trace),
            })
            .into()
        }
        FanCmd::IsSubdivision { fine, coarse } => {
            json!({ "subdivision": is_subdivision(&ctx.fan(fine)?, &ctx.fan(coarse)?) }).into()
        }
    })
}

fn topo_cmd(ctx: &Ctx, cmd: &TopoCmd) -> CliResult<Outcome> {
    Ok(match cmd {
        TopoCmd::CrossSection { fan, height } => {
            let c = cross_section(&ctx.fan(fan)?, &ctx.vector(height)?)?;
            json!({ "complex": wire::complex_to_json(&c) }).into()
        }
        TopoCmd::Homology { complex, unreduced } => {
            let c = wire::complex_from_json(&ctx.value(complex)?, "$")?;
            let triangulated = !c.is_simplicial();
            let c = if triangulated {
                c.triangulate()
            } else {
                c.simplicial_closure()
            };
            let mut out = wire::homology_to_json(&homology(&c, !unreduced)?, !unreduced);
            out["triangulated"] = json!(triangulated);
            out["euler_characteristic"] = json!(c.euler_characteristic());
            out.into()
        }
        TopoCmd::VerifyAcyclic { monoid, theta } => {
            let p = ctx.monoid(&monoid.monoid)?;
            let theta = wire::theta_from_json(&ctx.value(theta)?, &p, &ctx.ws, "$")?;
            let r = verify_boundary_acyclicity(&p, &theta)?;
            let h = wire::homology_to_json(&r.homology, true);
            let acyclic = match r.verdict {
                Verdict::Acyclic => json!(true),
                Verdict::NotAcyclic => json!(false),
                Verdict::Empty => json!("empty"),
            };
            json!({
                "acyclic": acyclic,
                "homology": h["homology"],
                "vertical": r.vertical,
                "note": r.note(),
                "height": wire::ints_to_json(&r.height),
                "spec": wire::fan_to_json(&r.spec),
                "vertical_subfan": wire::fan_to_json(&r.vertical_subfan),
                "cross_section": wire::complex_to_json(&r.cross_section),
                "triangulation": wire::complex_to_json(&r.triangulation),
            })
            .into()
        }
    })
}

fn verify_cmd(cmd: &VerifyCmd) -> Outcome {
    match cmd {
        VerifyCmd::All { seed, quick } => {
            let sizes = if *quick { QUICK } else { Sizes::FULL };
            let reports = verify::run_all(*seed, sizes);
            let ok = reports.iter().all(|r| r.passed());
            let value = json!({
                "seed": seed.to_string(),
                "passed": ok,
                "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            });
            Outcome { value, ok }
        }
    }
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    let ws = match &cli.workspace {
        None => Workspace::new(),
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read `{path}`: {e}")))?;
            Workspace::load(&wire::parse(&text)?)?
        }
    };
    let ctx = Ctx { ws };
    match &cli.command {
        Command::Monoid(c) => monoid_cmd(&ctx, c),
        Command::Hom(c) => hom_cmd(&ctx, c),
        Command::Fan(c) => fan_cmd(&ctx, c),
        Command::Topo(c) => topo_cmd(&ctx, c),
        Command::Verify(c) => Ok(verify_cmd(c)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    Bounds::from_env().install();
    match run(&cli) {
        Ok(out) => {
            print!("{}", wire::render(&out.value));
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Wire(WireError::Domain(e))) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(CliError::Wire(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
