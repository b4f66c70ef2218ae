//! The command-line front end: argument parsing, report assembly and exit codes.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails,
//! 2 for unusable input.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraSpec};
use crate::auslander::{
    check_correspondence, is_dz_cluster_tilting, roundtrip_check, tower_candidate, type_a_tower_over,
    CTCandidate, CorrespondenceReport, DzReport, RoundtripReport, DEFAULT_ORBIT_CAP,
};
use crate::error::Error;
use crate::exactla::Field;
use crate::homology::{domdim, gldim, DimValue, DEFAULT_CAP};
use crate::repn::{injectives, projectives, set_default_seed, ModuleSpec};
use crate::selftest::{run_selftest, SelftestConfig, SCHEMA_VERSION};

#[derive(Parser, Debug)]
#[command(name = "higher-auslander", version, about = "Homological invariants and higher Auslander checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Resolution cap.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized isomorphism search.
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension, gldim, domdim and dimension vectors of the standard modules.
    Invariants {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Check a d-cluster-tilting candidate: explicit modules or the τ_d^− orbit.
    CheckCt {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        d: usize,
        /// JSON list of modules; omit to use the orbit of the projectives.
        #[arg(long)]
        modules: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        orbit_cap: usize,
        /// Highest Ext degree for the dℤ check (default 2d + 2).
        #[arg(long)]
        kmax: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// The type-A tower `kA_n`, its Auslander algebra, and so on.
    Tower {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        depth: usize,
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        orbit_cap: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run the acceptance suite.
    Selftest {
        #[arg(long, default_value_t = 16)]
        cap: usize,
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        orbit_cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    CheckFailed = 1,
    InputError = 2,
}

/// What to print and how to exit.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub output: String,
    pub status: Status,
}

impl Outcome {
    fn input_error(msg: impl std::fmt::Display) -> Outcome {
        Outcome { output: format!("input error: {msg}"), status: Status::InputError }
    }

    fn report(output: String, pass: bool) -> Outcome {
        Outcome { output, status: if pass { Status::Pass } else { Status::CheckFailed } }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub schema_version: u32,
    pub field_char: u32,
    pub vertices: Vec<String>,
    pub dim: usize,
    pub gldim: DimValue,
    pub domdim: DimValue,
    /// Dimension vectors, one per vertex.
    pub projectives: Vec<Vec<usize>>,
    pub injectives: Vec<Vec<usize>>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCtReport {
    pub schema_version: u32,
    pub d: usize,
    pub source: String,
    pub summand_dims: Vec<Vec<usize>>,
    pub correspondence: CorrespondenceReport,
    pub dz: Option<DzReport>,
    pub roundtrip: Option<RoundtripReport>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerRow {
    pub level: usize,
    pub algebra_dim: usize,
    pub summands: usize,
    pub report: CorrespondenceReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerReport {
    pub schema_version: u32,
    pub n: usize,
    pub depth: usize,
    pub levels: Vec<TowerRow>,
    pub pass: bool,
}

fn load_algebra(path: &PathBuf) -> Result<Arc<Algebra>, Error> {
    let text = std::fs::read_to_string(path)?;
    AlgebraSpec::from_json(&text)?.build()
}

fn json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("reports serialize")
}

fn check_caps(caps: &[usize]) -> Result<(), String> {
    if caps.contains(&0) {
        Err("caps must be at least 1".into())
    } else {
        Ok(())
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Invariants { input, common } => invariants(input, common),
        Command::CheckCt { input, d, modules, orbit_cap, kmax, common } => {
            check_ct(input, *d, modules.as_ref(), *orbit_cap, *kmax, common)
        }
        Command::Tower { n, depth, orbit_cap, common } => tower(*n, *depth, *orbit_cap, common),
        Command::Selftest { cap, orbit_cap, format, seed } => {
            if let Err(e) = check_caps(&[*cap, *orbit_cap]) {
                return Outcome::input_error(e);
            }
            let r = run_selftest(&SelftestConfig { seed: *seed, cap: *cap, orbit_cap: *orbit_cap });
            let out = match format {
                Format::Json => json(&r),
                Format::Text => {
                    let mut s = String::new();
                    for c in &r.criteria {
                        let _ = writeln!(s, "{}", c.line());
                    }
                    let _ = write!(s, "{}", if r.pass { "all criteria pass" } else { "some criteria FAIL" });
                    s
                }
            };
            Outcome::report(out, r.pass)
        }
    }
}

fn flag(x: Option<bool>) -> &'static str {
    match x {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

fn dims_table(title: &str, rows: &[Vec<usize>]) -> String {
    let mut s = format!("{title}:\n");
    for (i, r) in rows.iter().enumerate() {
        let _ = writeln!(s, "  {}: {:?}", i + 1, r);
    }
    s
}

fn invariants(input: &PathBuf, common: &Common) -> Outcome {
    if let Err(e) = check_caps(&[common.cap]) {
        return Outcome::input_error(e);
    }
    set_default_seed(common.seed);
    let a = match load_algebra(input) {
        Ok(a) => a,
        Err(e) => return Outcome::input_error(e),
    };
    let gl = gldim(&a, common.cap);
    let dd = domdim(&a, common.cap);
    let mut warnings = Vec::new();
    if gl.is_capped() {
        warnings.push(format!("gldim hit the cap {}", common.cap));
    }
    if dd.is_capped() {
        warnings.push(format!("domdim hit the cap {}", common.cap));
    }
    let r = InvariantsReport {
        schema_version: SCHEMA_VERSION,
        field_char: a.field().characteristic(),
        vertices: a.vertices().to_vec(),
        dim: a.dim(),
        gldim: gl,
        domdim: dd,
        projectives: projectives(&a).iter().map(|m| m.dims().to_vec()).collect(),
        injectives: injectives(&a).iter().map(|m| m.dims().to_vec()).collect(),
        warnings,
    };
    let out = match common.format {
        Format::Json => json(&r),
        Format::Text => {
            let mut s = format!("dim {}\ngldim {}\ndomdim {}\n", r.dim, r.gldim, r.domdim);
            s += &dims_table("projectives", &r.projectives);
            s += &dims_table("injectives", &r.injectives);
            for w in &r.warnings {
                let _ = writeln!(s, "warning: {w}");
            }
            s.trim_end().to_string()
        }
    };
    Outcome::report(out, true)
}

fn check_ct(
    input: &PathBuf,
    d: usize,
    modules: Option<&PathBuf>,
    orbit_cap: usize,
    kmax: Option<usize>,
    common: &Common,
) -> Outcome {
    if d == 0 {
        return Outcome::input_error("d must be at least 1");
    }
    if let Err(e) = check_caps(&[common.cap, orbit_cap, kmax.unwrap_or(1)]) {
        return Outcome::input_error(e);
    }
    set_default_seed(common.seed);
    let a = match load_algebra(input) {
        Ok(a) => a,
        Err(e) => return Outcome::input_error(e),
    };
    let (candidate, source) = match modules {
        Some(path) => {
            let parsed = std::fs::read_to_string(path)
                .map_err(Error::from)
                .and_then(|t| Ok(serde_json::from_str::<Vec<ModuleSpec>>(&t)?))
                .and_then(|specs| specs.iter().map(|s| s.build(&a)).collect::<Result<Vec<_>, _>>())
                .and_then(|ms| CTCandidate::new(a.clone(), ms, d));
            match parsed {
                Ok(c) => (c, path.display().to_string()),
                Err(e) => return Outcome::input_error(e),
            }
        }
        None => match tower_candidate(&a, d, orbit_cap) {
            Ok(c) => (c, "tower".to_string()),
            Err(e) => return Outcome::report(format!("check failed: {e}"), false),
        },
    };
    let kmax = kmax.unwrap_or(2 * d + 2);
    let run = || -> Result<CheckCtReport, Error> {
        let correspondence = check_correspondence(&candidate, common.cap)?;
        let dz = is_dz_cluster_tilting(&candidate, kmax)?;
        let roundtrip = if correspondence.verdict { Some(roundtrip_check(&candidate, common.cap)?) } else { None };
        let pass = correspondence.verdict && dz.pass && roundtrip.as_ref().is_some_and(|r| r.pass);
        Ok(CheckCtReport {
            schema_version: SCHEMA_VERSION,
            d,
            source: source.clone(),
            summand_dims: candidate.summands.iter().map(|m| m.dims().to_vec()).collect(),
            correspondence,
            dz: Some(dz),
            roundtrip,
            pass,
        })
    };
    let r = match run() {
        Ok(r) => r,
        Err(e) => return Outcome::report(format!("check failed: {e}"), false),
    };
    let out = match common.format {
        Format::Json => json(&r),
        Format::Text => {
            let c = &r.correspondence;
            let mut s = format!("candidate ({}) with {} summands, d = {}\n", r.source, r.summand_dims.len(), d);
            s += &dims_table("summands", &r.summand_dims);
            let _ = writeln!(s, "End: dim {}, gldim {}, domdim {}", c.algebra_dim, c.gldim, c.domdim);
            let _ = writeln!(
                s,
                "rigid {}, projectives {}, injectives {}, tau_d-closed {}",
                flag(c.d_rigid),
                flag(c.contains_proj),
                flag(c.contains_inj),
                flag(c.tau_d_closed)
            );
            let _ = writeln!(s, "d-Auslander {}, base matches {}", flag(Some(c.d_auslander)), flag(c.base_matches));
            let _ = writeln!(s, "dZ {}", flag(r.dz.as_ref().map(|x| x.pass)));
            let _ = writeln!(s, "roundtrip {}", flag(r.roundtrip.as_ref().map(|x| x.pass)));
            if c.theorem_violation {
                let _ = writeln!(s, "THEOREM VIOLATION: the two sides disagree");
            }
            let _ = write!(s, "{}", if r.pass { "pass" } else { "FAIL" });
            s
        }
    };
    Outcome::report(out, r.pass)
}

fn tower(n: usize, depth: usize, orbit_cap: usize, common: &Common) -> Outcome {
    if n == 0 || depth == 0 {
        return Outcome::input_error("n and depth must be at least 1");
    }
    if let Err(e) = check_caps(&[common.cap, orbit_cap]) {
        return Outcome::input_error(e);
    }
    set_default_seed(common.seed);
    let levels = match type_a_tower_over(n, depth, common.cap, orbit_cap, Field::default()) {
        Ok(l) => l,
        Err(e) => return Outcome::report(format!("check failed: {e}"), false),
    };
    let rows: Vec<TowerRow> = levels
        .iter()
        .map(|l| TowerRow { level: l.level, algebra_dim: l.algebra_dim, summands: l.summands, report: l.report.clone() })
        .collect();
    let pass = rows.len() == depth && rows.iter().all(|r| r.report.verdict);
    let r = TowerReport { schema_version: SCHEMA_VERSION, n, depth, levels: rows, pass };
    let out = match common.format {
        Format::Json => json(&r),
        Format::Text => {
            let mut s = format!("type-A tower, n = {n}, depth = {depth}\n");
            let _ = writeln!(s, "{:>5} {:>8} {:>9} {:>7} {:>7} {:>8}", "level", "dim", "summands", "gldim", "domdim", "verdict");
            for l in &r.levels {
                let _ = writeln!(
                    s,
                    "{:>5} {:>8} {:>9} {:>7} {:>7} {:>8}",
                    l.level,
                    l.algebra_dim,
                    l.summands,
                    l.report.gldim.to_string(),
                    l.report.domdim.to_string(),
                    l.report.verdict
                );
            }
            let _ = write!(s, "{}", if r.pass { "pass" } else { "FAIL" });
            s
        }
    };
    Outcome::report(out, pass)
}
