mod commands;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use posetbundle::cochains::DEFAULT_LIMIT;
use posetbundle::groups::{Law2, Law3};
use posetbundle::poset::PosetKind;

use commands::Env;
use report::{Inputs, Report};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] posetbundle::Error),
    #[error("{0}")]
    Io(String),
    #[error("usage: {0}")]
    Usage(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Non-Abelian cohomology, connections and holonomy over finite posets.
#[derive(Parser, Debug)]
#[command(name = "posetbundle", version)]
struct Cli {
    /// Report rendering.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cap on enumeration and search work; exceeding it is an error.
    #[arg(long, global = true, default_value_t = DEFAULT_LIMIT)]
    limit: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Parse a poset and report its order properties.
    Validate { poset: String },
    /// Write a generated chain, vee or circle poset.
    Gen {
        kind: PosetKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<String>,
    },
    /// List the singular simplices of one dimension.
    Simplices {
        poset: String,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        inflating: bool,
    },
    /// Faces, degeneracies and reverse of a 1-simplex, and permutations of its filler.
    Simplex { poset: String, edge: String },
    /// Fundamental group presentation and abelianization.
    Pi1 {
        poset: String,
        #[arg(long)]
        base: Option<String>,
        /// Loop at the base to express as a word.
        #[arg(long)]
        p: Option<String>,
    },
    /// Number of homomorphisms from the fundamental group up to conjugacy.
    CountHoms {
        poset: String,
        group: String,
        #[arg(long)]
        base: Option<String>,
    },
    /// Bounded search for a homotopy between two paths.
    Homotopic {
        poset: String,
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// Reverse, composite and elementary deformations of a path.
    Path {
        poset: String,
        #[arg(long)]
        p: String,
        /// Path traversed after `--p`.
        #[arg(long)]
        then: Option<String>,
    },
    /// Parse a group table and check the group axioms.
    GroupValidate { group: String },
    /// Generated subgroup, centralizer, normal closure and a conjugate.
    Subgroup {
        group: String,
        #[arg(long, default_value = "")]
        gens: String,
        #[arg(long)]
        conj: Option<String>,
    },
    /// Compose two arrows `g,t` of the 2-group (automorphism ad t).
    Compose2g {
        group: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long, default_value = "times")]
        law: Law2,
    },
    /// Compose two arrows `g,t,c` of the 3-group.
    Compose3g {
        group: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long, default_value = "times")]
        law: Law3,
    },
    /// Compose homomorphisms given by images of the source elements in order.
    HomCompose {
        source: String,
        middle: String,
        target: String,
        #[arg(long)]
        rho: String,
        #[arg(long)]
        gamma: String,
    },
    /// Check the cocycle condition on every 2-simplex.
    CheckCocycle { poset: String, group: String, cochain: String },
    /// Equivalence classes of 1-cocycles.
    ClassifyCocycles { poset: String, group: String },
    /// Check that applying the coboundary twice is trivial.
    DdCheck {
        poset: String,
        group: String,
        cochain: String,
        #[arg(long)]
        transform: Option<String>,
    },
    /// Value of a 1-cochain along a path.
    PathValue {
        poset: String,
        group: String,
        cochain: String,
        #[arg(long)]
        p: String,
    },
    /// Search for a morphism between two 1-cochains.
    FindMorphism { poset: String, group: String, source: String, target: String },
    /// Check that values along paths depend only on the endpoints.
    PathIndependent { poset: String, group: String, cochain: String },
    /// Coboundary of an assignment of elements to points.
    CrossSection {
        poset: String,
        group: String,
        #[arg(long)]
        transform: String,
    },
    /// Push a 1-cochain along a homomorphism given by images in order.
    Pushforward {
        poset: String,
        group: String,
        cochain: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        images: String,
        /// Treat the homomorphism as an action and form the associated cocycle.
        #[arg(long)]
        associated: bool,
    },
    /// Check the connection axioms and report the curvature.
    Curvature { poset: String, group: String, cochain: String },
    /// The cocycle a connection induces.
    Induce { poset: String, group: String, cochain: String },
    /// Build a connection from a cochain trivial on inflating simplices and a cocycle.
    FromCochain {
        poset: String,
        group: String,
        cochain: String,
        #[arg(long)]
        cocycle: String,
    },
    /// Build a nonflat connection inducing a given cocycle.
    Nonflat {
        poset: String,
        group: String,
        #[arg(long)]
        cocycle: Option<String>,
        #[arg(long)]
        edge: Option<String>,
        #[arg(long)]
        g: String,
    },
    /// Central connections: decomposition, star inverse and star product.
    Central {
        poset: String,
        group: String,
        cochain: String,
        #[arg(long)]
        with: Option<String>,
    },
    /// Holonomy group at a base point.
    Holonomy {
        poset: String,
        group: String,
        cochain: String,
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        restricted: bool,
        /// Second base point for the conjugacy witness.
        #[arg(long)]
        to: Option<String>,
    },
    /// Reduce a connection to its holonomy group.
    Reduce {
        poset: String,
        group: String,
        cochain: String,
        #[arg(long)]
        base: Option<String>,
    },
    /// Gauge group of a cocycle.
    GaugeGroup {
        poset: String,
        group: String,
        cocycle: String,
        /// Also scan every map from points to the group.
        #[arg(long)]
        raw: bool,
    },
    /// Apply a gauge transformation to a connection.
    GaugeAct {
        poset: String,
        group: String,
        cochain: String,
        /// Cocycle of the bundle; defaults to the induced cocycle.
        #[arg(long)]
        cocycle: Option<String>,
        #[arg(long)]
        transform: String,
    },
    /// Run every acceptance criterion against a fixtures directory.
    Suite { fixtures: String },
}

/// Library operations reachable from each subcommand.
pub const COVERAGE: &[(&str, &[&str])] = &[
    ("validate", &["build_poset", "is_directed", "is_totally_ordered", "is_pathwise_connected", "fundamental_open"]),
    ("gen", &["generate"]),
    ("simplices", &["enumerate"]),
    ("simplex", &["boundary", "degeneracy", "is_inflating", "reverse", "permute2"]),
    ("pi1", &["pi1_presentation"]),
    ("count-homs", &["count_hom_classes"]),
    ("homotopic", &["homotopic"]),
    ("path", &["compose", "reverse_path", "deformations"]),
    ("group-validate", &["load_group", "center"]),
    ("subgroup", &["subgroup_generated", "centralizer", "conjugate", "normal_closure"]),
    ("compose2g", &["compose_2g"]),
    ("compose3g", &["compose_3g"]),
    ("hom-compose", &["hom_compose"]),
    ("check-cocycle", &["is_cocycle"]),
    ("classify-cocycles", &["classify_cocycles"]),
    ("dd-check", &["coboundary", "is_cocycle"]),
    ("path-value", &["extend_to_path"]),
    ("find-morphism", &["find_morphism"]),
    ("path-independent", &["is_path_independent"]),
    ("cross-section", &["coboundary_from_assignment"]),
    ("pushforward", &["pushforward", "associated_cocycle"]),
    ("curvature", &["is_connection", "curvature", "is_flat"]),
    ("induce", &["induced_cocycle"]),
    ("from-cochain", &["construct_from_cochain"]),
    ("nonflat", &["construct_nonflat"]),
    ("central", &["is_central", "central_decompose", "star_compose"]),
    ("holonomy", &["holonomy", "restricted_holonomy", "holonomy_conjugacy_check"]),
    ("reduce", &["ambrose_singer_reduce"]),
    ("gauge-group", &["gauge_group"]),
    ("gauge-act", &["gauge_act"]),
    ("suite", &["suite", "run"]),
];

fn echo(args: &[String]) -> String {
    let mut parts = vec!["posetbundle".to_string()];
    for a in args.iter().skip(1) {
        if a.is_empty() || a.contains(char::is_whitespace) {
            parts.push(format!("'{a}'"));
        } else {
            parts.push(a.clone());
        }
    }
    parts.join(" ")
}

fn dispatch(env: &mut Env, cmd: &Cmd) -> Result<(), CliError> {
    use commands as c;
    match cmd {
        Cmd::Validate { poset } => c::validate(env, poset),
        Cmd::Gen { kind, n, out } => c::gen(env, *kind, *n, out.as_deref()),
        Cmd::Simplices { poset, dim, inflating } => c::simplices(env, poset, *dim, *inflating),
        Cmd::Simplex { poset, edge } => c::simplex(env, poset, edge),
        Cmd::Pi1 { poset, base, p } => c::pi1(env, poset, base.as_deref(), p.as_deref()),
        Cmd::CountHoms { poset, group, base } => c::count_homs(env, poset, group, base.as_deref()),
        Cmd::Homotopic { poset, p, q, bound } => c::homotopic(env, poset, p, q, *bound),
        Cmd::Path { poset, p, then } => c::path_ops(env, poset, p, then.as_deref()),
        Cmd::GroupValidate { group } => c::group_validate(env, group),
        Cmd::Subgroup { group, gens, conj } => c::subgroup(env, group, gens, conj.as_deref()),
        Cmd::Compose2g { group, x, y, law } => c::compose2(env, group, x, y, *law),
        Cmd::Compose3g { group, x, y, law } => c::compose3(env, group, x, y, *law),
        Cmd::HomCompose { source, middle, target, rho, gamma } => {
            c::hom_compose_cmd(env, [source, middle, target], rho, gamma)
        }
        Cmd::CheckCocycle { poset, group, cochain } => c::check_cocycle(env, poset, group, cochain),
        Cmd::ClassifyCocycles { poset, group } => c::classify(env, poset, group),
        Cmd::DdCheck { poset, group, cochain, transform } => {
            c::dd_check(env, poset, group, cochain, transform.as_deref())
        }
        Cmd::PathValue { poset, group, cochain, p } => c::path_value(env, poset, group, cochain, p),
        Cmd::FindMorphism { poset, group, source, target } => c::find_morphism(env, poset, group, source, target),
        Cmd::PathIndependent { poset, group, cochain } => c::path_independent(env, poset, group, cochain),
        Cmd::CrossSection { poset, group, transform } => c::cross_section(env, poset, group, transform),
        Cmd::Pushforward { poset, group, cochain, target, images, associated } => {
            c::pushforward(env, [poset, group, cochain, target], images, *associated)
        }
        Cmd::Curvature { poset, group, cochain } => c::curvature(env, poset, group, cochain),
        Cmd::Induce { poset, group, cochain } => c::induce(env, poset, group, cochain),
        Cmd::FromCochain { poset, group, cochain, cocycle } => c::from_cochain(env, poset, group, cochain, cocycle),
        Cmd::Nonflat { poset, group, cocycle, edge, g } => {
            c::nonflat(env, poset, group, cocycle.as_deref(), edge.as_deref(), g)
        }
        Cmd::Central { poset, group, cochain, with } => c::central(env, poset, group, cochain, with.as_deref()),
        Cmd::Holonomy { poset, group, cochain, base, restricted, to } => {
            c::holonomy(env, [poset, group, cochain], base.as_deref(), *restricted, to.as_deref())
        }
        Cmd::Reduce { poset, group, cochain, base } => c::reduce(env, poset, group, cochain, base.as_deref()),
        Cmd::GaugeGroup { poset, group, cocycle, raw } => c::gauge_group(env, poset, group, cocycle, *raw),
        Cmd::GaugeAct { poset, group, cochain, cocycle, transform } => {
            c::gauge_act(env, [poset, group, cochain], cocycle.as_deref(), transform)
        }
        Cmd::Suite { fixtures } => c::suite(env, fixtures),
    }
}

/// Parses `args`, runs one command and returns the exit code with the
/// rendered report (stdout) or error message (stderr).
fn run(args: Vec<String>) -> (u8, String, String) {
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    let mut env = Env { inputs: Inputs::default(), limit: cli.limit, report: Report::new(echo(&args)) };
    if let Err(e) = dispatch(&mut env, &cli.cmd) {
        return (2, String::new(), format!("error: {e}\n"));
    }
    let mut report = env.report;
    report.inputs = env.inputs.digest();
    let out = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    (report.exit_code() as u8, out, String::new())
}

fn main() -> ExitCode {
    let (code, out, err) = run(std::env::args().collect());
    print!("{out}");
    eprint!("{err}");
    ExitCode::from(code)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use clap::CommandFactory;

    use super::*;

    const LIBRARY_OPERATIONS: &[&str] = &[
        "build_poset", "is_directed", "is_totally_ordered", "is_pathwise_connected", "fundamental_open",
        "generate", "enumerate", "boundary", "degeneracy", "is_inflating", "reverse", "permute2", "compose",
        "reverse_path", "deformations", "homotopic", "pi1_presentation", "count_hom_classes", "load_group",
        "center", "compose_2g", "compose_3g", "subgroup_generated", "centralizer", "conjugate", "hom_compose",
        "coboundary", "is_cocycle", "extend_to_path", "find_morphism", "is_path_independent",
        "coboundary_from_assignment", "pushforward", "associated_cocycle", "classify_cocycles", "is_connection",
        "curvature", "is_flat", "induced_cocycle", "construct_from_cochain", "construct_nonflat", "is_central",
        "central_decompose", "star_compose", "holonomy", "restricted_holonomy", "ambrose_singer_reduce",
        "holonomy_conjugacy_check", "gauge_group", "gauge_act", "run", "suite",
    ];

    #[test]
    fn every_operation_is_reachable() {
        let covered: BTreeSet<&str> = COVERAGE.iter().flat_map(|(_, ops)| ops.iter().copied()).collect();
        let missing: Vec<_> = LIBRARY_OPERATIONS.iter().filter(|op| !covered.contains(*op)).collect();
        assert!(missing.is_empty(), "unreachable: {missing:?}");
    }

    #[test]
    fn coverage_table_matches_subcommands() {
        let cmd = Cli::command();
        let real: BTreeSet<String> = cmd.get_subcommands().map(|s| s.get_name().to_string()).collect();
        let table: BTreeSet<String> = COVERAGE.iter().map(|(name, _)| name.to_string()).collect();
        assert_eq!(real, table);
    }

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn usage_errors_name_the_flag() {
        let args = ["posetbundle", "simplices", "x.poset", "--dim", "two"].map(String::from).to_vec();
        let (code, _, err) = run(args);
        assert_eq!(code, 2);
        assert!(err.contains("--dim"), "{err}");
    }
}
