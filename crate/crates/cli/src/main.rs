//! Command-line front end: every computation and verification in the crate,
//! with machine-readable output.
//!
//! Exit codes: 0 when everything passed, 1 when a verification failed, 2 on
//! usage errors.

mod output;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use output::{emit, Format};
use serde_json::json;
use std::process::ExitCode;
use std::str::FromStr;
use zorbit_core::chars::{dominance_character, rho2, root_type, Group};
use zorbit_core::counterex::verify_noncontinuity;
use zorbit_core::models::{chi_sequence, dickson, lie_basis, member, GroupTag};
use zorbit_core::orbits::{
    bruhat_cell, classify_orbit_u, count_orbits, enumerate_wp, hook_component_count,
};
use zorbit_core::perm::Perm;
use zorbit_core::resolve::{dim_orbit_oracle, hypothesis_report};
use zorbit_core::rng::DEFAULT_SEED;
use zorbit_core::scalar::Field;
use zorbit_core::verify::{
    criterion_length_cross_validation, criterion_lie_dimension_constancy, exhaustive_hypotheses,
    parallel_map, run_all,
};
use zorbit_core::weyl::{
    bruhat_leq, coset_decompose, coxeter_length, enumerate_weyl, in_weyl, theta_on_wp, type_length,
    Family, ModelSpec,
};
use zorbit_core::Matrix;

#[derive(Parser)]
#[command(
    name = "zorbit",
    about = "Exact computations for centralizer orbit closures in flag varieties",
    version
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Seed for sampled verifications (deterministic for a fixed value).
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads for exhaustive sweeps; output order is independent of
    /// this.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Tsv => Format::Tsv,
        }
    }
}

#[derive(Args)]
struct SpecArgs {
    /// Model family: A, B, C or D.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    r: usize,
}

impl SpecArgs {
    fn spec(&self) -> anyhow::Result<ModelSpec> {
        let family = Family::from_str(&self.family)?;
        Ok(ModelSpec::new(family, self.n, self.r)?)
    }
}

#[derive(Args)]
struct FieldArgs {
    /// Coefficient field: q for the rationals, fp for a prime field.
    #[arg(long, default_value = "q")]
    field: String,
    /// The prime for --field fp.
    #[arg(long)]
    p: Option<u64>,
}

impl FieldArgs {
    fn field(&self) -> anyhow::Result<Field> {
        match self.field.as_str() {
            "q" => Ok(Field::Q),
            "fp" => {
                let p = self.p.ok_or_else(|| anyhow!("--field fp needs --p"))?;
                Ok(Field::Fp(p))
            }
            other => Err(anyhow!("unknown field {other:?}; use q or fp")),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Weyl-group combinatorics.
    Weyl {
        #[command(subcommand)]
        cmd: WeylCmd,
    },
    /// Matrix-model computations.
    Models {
        #[command(subcommand)]
        cmd: ModelsCmd,
    },
    /// Orbit parametrization and counting.
    Orbits {
        #[command(subcommand)]
        cmd: OrbitsCmd,
    },
    /// Corrected representatives and hypothesis reports.
    Resolve {
        #[command(subcommand)]
        cmd: ResolveCmd,
    },
    /// Characters and dominance.
    Chars {
        #[command(subcommand)]
        cmd: CharsCmd,
    },
    /// Two-column tableaux.
    Tableau {
        #[command(subcommand)]
        cmd: TableauCmd,
    },
    /// Run the orthogonal non-continuity counter-example.
    Counterexample,
    /// Verification batteries.
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum WeylCmd {
    /// Inversions and model length of a permutation.
    Len {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        perm: String,
    },
    /// Membership in the model Weyl group.
    Check {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        perm: String,
    },
    /// The parabolic factorization w = tau nu.
    Decompose {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        perm: String,
    },
    /// Strong Bruhat order comparison.
    Bruhat {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        u: String,
        #[arg(long)]
        w: String,
    },
}

#[derive(Subcommand)]
enum ModelsCmd {
    /// Dimension of the tangent space of a tagged subgroup.
    LieDim {
        #[command(flatten)]
        spec: SpecArgs,
        /// One of G, B, T, P, L, Z, H, or "Bw:<perm>".
        #[arg(long)]
        tag: String,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Evaluate the defining equations of a tagged subgroup on a matrix.
    Member {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        tag: String,
        /// Matrix as JSON, or @path to a file.
        #[arg(long)]
        matrix: String,
    },
    /// The characteristic-2 chi sequence of a nilpotent over GF(2).
    Chi {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        m_max: usize,
        #[arg(long)]
        matrix: String,
    },
    /// The Dickson invariant of an orthogonal matrix over GF(2).
    Dickson {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        matrix: String,
    },
}

#[derive(Subcommand)]
enum OrbitsCmd {
    /// Orbit count with the hook-identity cross check.
    Count {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// All minimal coset representatives.
    EnumerateWp {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Classify the corner coset of an invertible matrix.
    Classify {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        matrix: String,
    },
}

#[derive(Subcommand)]
enum ResolveCmd {
    /// Hypothesis report for one Weyl element.
    One {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        v: String,
        /// Sampled centralizer points for the factorization check.
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Hypothesis reports for every Weyl element of the model.
    Exhaustive {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum CharsCmd {
    /// The character 2 rho_H - rho_G|T_H and its dominance.
    Dominance {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// 2 rho of the model group or of H.
    Rho {
        #[command(flatten)]
        spec: SpecArgs,
        /// G or H.
        #[arg(long, default_value = "G")]
        group: String,
    },
}

#[derive(Subcommand)]
enum TableauCmd {
    /// All two-column standard tableaux for (n, r).
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// The Weyl element of one tableau.
    ToW {
        #[arg(long)]
        n: usize,
        /// Second-column entries, e.g. "2 4".
        #[arg(long)]
        cols: String,
        /// Also print the diagram to standard error.
        #[arg(long)]
        pretty: bool,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// The dimension formula over the Weyl group of one model.
    DimFormula {
        #[command(flatten)]
        spec: SpecArgs,
        /// Sweep the whole Weyl group (otherwise the first ten elements).
        #[arg(long)]
        exhaustive: bool,
    },
    /// Length formula against greedy descent, all small signed models.
    Lengths,
    /// Lie dimensions over Q against prime fields.
    SmoothnessDims,
    /// The full acceptance battery.
    All {
        /// Run the desk-scale parameter set (the only one defined).
        #[arg(long)]
        small: bool,
    },
}

fn parse_matrix(arg: &str) -> anyhow::Result<Matrix> {
    let text = if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?
    } else {
        arg.to_string()
    };
    serde_json::from_str(&text).context("parsing matrix JSON")
}

fn parse_tag(s: &str) -> anyhow::Result<GroupTag> {
    Ok(match s {
        "G" => GroupTag::G,
        "B" => GroupTag::Borel,
        "T" => GroupTag::T,
        "P" => GroupTag::P,
        "L" => GroupTag::L,
        "Z" => GroupTag::Z,
        "H" => GroupTag::H,
        other => {
            let w = other
                .strip_prefix("Bw:")
                .ok_or_else(|| anyhow!("unknown tag {other:?}"))?;
            GroupTag::BorelConj(Perm::from_str(w)?)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format: Format = cli.format.into();
    match run(cli, format) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli, format: Format) -> anyhow::Result<bool> {
    let seed = cli.seed;
    let threads = cli.threads.max(1);
    match cli.command {
        Command::Weyl { cmd } => run_weyl(cmd, format),
        Command::Models { cmd } => run_models(cmd, format),
        Command::Orbits { cmd } => run_orbits(cmd, format),
        Command::Resolve { cmd } => run_resolve(cmd, format, seed, threads),
        Command::Chars { cmd } => run_chars(cmd, format),
        Command::Tableau { cmd } => run_tableau(cmd, format),
        Command::Counterexample => {
            let rep = verify_noncontinuity()?;
            let ok = rep.discontinuous;
            emit(format, &serde_json::to_value(&rep)?);
            Ok(ok)
        }
        Command::Verify { cmd } => run_verify(cmd, format, seed, threads),
    }
}

fn run_weyl(cmd: WeylCmd, format: Format) -> anyhow::Result<bool> {
    match cmd {
        WeylCmd::Len { spec, perm } => {
            let s = spec.spec()?;
            let p = Perm::from_str(&perm)?;
            let length = type_length(&p, s.weyl_kind())?;
            emit(
                format,
                &json!({ "inversions": p.inversions(), "length": length }),
            );
        }
        WeylCmd::Check { spec, perm } => {
            let s = spec.spec()?;
            let p = Perm::from_str(&perm)?;
            let inside = in_weyl(&p, s.weyl_kind());
            let greedy = if inside {
                Some(coxeter_length(&p, s.weyl_kind())?)
            } else {
                None
            };
            emit(
                format,
                &json!({ "in_weyl": inside, "check_symmetric": p.check_of() == p, "greedy_length": greedy }),
            );
        }
        WeylCmd::Decompose { spec, perm } => {
            let s = spec.spec()?;
            let w = Perm::from_str(&perm)?;
            let (tau, nu) = coset_decompose(&w, &s)?;
            let theta = theta_on_wp(&tau, &s)?;
            emit(
                format,
                &json!({
                    "tau": tau.to_string(),
                    "nu": nu.to_string(),
                    "theta_tau": theta.to_string(),
                    "len_w": type_length(&w, s.weyl_kind())?,
                    "len_tau": type_length(&tau, s.weyl_kind())?,
                    "len_nu": type_length(&nu, s.weyl_kind())?,
                }),
            );
        }
        WeylCmd::Bruhat { spec, u, w } => {
            let s = spec.spec()?;
            let pu = Perm::from_str(&u)?;
            let pw = Perm::from_str(&w)?;
            let leq = bruhat_leq(&pu, &pw, s.weyl_kind())?;
            emit(format, &json!({ "leq": leq }));
        }
    }
    Ok(true)
}

fn run_models(cmd: ModelsCmd, format: Format) -> anyhow::Result<bool> {
    match cmd {
        ModelsCmd::LieDim { spec, tag, field } => {
            let s = spec.spec()?;
            let tag = parse_tag(&tag)?;
            let f = field.field()?;
            let space = lie_basis(&tag, &s, f)?;
            emit(
                format,
                &json!({ "tag": tag.to_string(), "field": f.to_string(), "dim": space.dim() }),
            );
        }
        ModelsCmd::Member { spec, tag, matrix } => {
            let s = spec.spec()?;
            let tag = parse_tag(&tag)?;
            let g = parse_matrix(&matrix)?;
            let is_member = member(&g, &tag, &s)?;
            emit(
                format,
                &json!({ "tag": tag.to_string(), "member": is_member }),
            );
        }
        ModelsCmd::Chi { n, m_max, matrix } => {
            let g = parse_matrix(&matrix)?;
            let chi = chi_sequence(&g, n, m_max)?;
            emit(format, &json!({ "chi": chi }));
        }
        ModelsCmd::Dickson { m, matrix } => {
            let g = parse_matrix(&matrix)?;
            let value = dickson(&g, m)?;
            emit(format, &json!({ "dickson": value }));
        }
    }
    Ok(true)
}

fn run_orbits(cmd: OrbitsCmd, format: Format) -> anyhow::Result<bool> {
    // counts are exact u128; emit as a JSON number when it fits, else a string
    fn big(n: u128) -> serde_json::Value {
        match u64::try_from(n) {
            Ok(small) => small.into(),
            Err(_) => n.to_string().into(),
        }
    }
    match cmd {
        OrbitsCmd::Count { spec } => {
            let s = spec.spec()?;
            let count = count_orbits(&s);
            let value = if s.family == Family::A {
                let components = hook_component_count(s.n, s.r);
                let mut factor = 1u128;
                for k in (s.n - 2 * s.r + 2)..=(s.n - s.r + 1) {
                    factor *= k as u128;
                }
                let holds = count == components * factor;
                json!({
                    "count": big(count),
                    "components": big(components),
                    "factor": big(factor),
                    "identity_holds": holds,
                })
            } else {
                json!({ "count": big(count) })
            };
            emit(format, &value);
        }
        OrbitsCmd::EnumerateWp { spec } => {
            let s = spec.spec()?;
            let elements: Vec<String> = enumerate_wp(&s).iter().map(|p| p.to_string()).collect();
            emit(
                format,
                &json!({ "count": elements.len(), "elements": elements }),
            );
        }
        OrbitsCmd::Classify { spec, matrix } => {
            let s = spec.spec()?;
            let x = parse_matrix(&matrix)?;
            let cell = bruhat_cell(&x)?;
            let u = classify_orbit_u(&x, &s)?;
            emit(
                format,
                &json!({ "bruhat_cell": cell.to_string(), "u": u.to_string() }),
            );
        }
    }
    Ok(true)
}

fn run_resolve(cmd: ResolveCmd, format: Format, seed: u64, threads: usize) -> anyhow::Result<bool> {
    match cmd {
        ResolveCmd::One { spec, v, samples } => {
            let s = spec.spec()?;
            let pv = Perm::from_str(&v)?;
            let rep = hypothesis_report(&pv, &s, seed, samples)?;
            let ok = rep.hypotheses.is_none() || rep.all_hypotheses_hold();
            emit(format, &serde_json::to_value(&rep)?);
            Ok(ok)
        }
        ResolveCmd::Exhaustive { spec, samples } => {
            let s = spec.spec()?;
            let reports = exhaustive_hypotheses(&s, seed, samples, threads)?;
            let all_ok = reports
                .iter()
                .all(|r| r.hypotheses.is_none() || r.all_hypotheses_hold());
            emit(
                format,
                &json!({
                    "spec": s.to_string(),
                    "elements": reports.len(),
                    "all_hypotheses_hold": all_ok,
                    "reports": serde_json::to_value(&reports)?,
                }),
            );
            Ok(all_ok)
        }
    }
}

fn run_chars(cmd: CharsCmd, format: Format) -> anyhow::Result<bool> {
    match cmd {
        CharsCmd::Dominance { spec } => {
            let s = spec.spec()?;
            let (w, dominant) = dominance_character(&s)?;
            emit(format, &json!({ "weight": w.coords, "dominant": dominant }));
        }
        CharsCmd::Rho { spec, group } => {
            let s = spec.spec()?;
            let g = match group.as_str() {
                "G" | "g" => Group::G,
                "H" | "h" => Group::H,
                other => return Err(anyhow!("unknown group {other:?}; use G or H")),
            };
            let two_rho = rho2(g, &s);
            emit(
                format,
                &json!({
                    "two_rho": two_rho.coords,
                    "root_type": format!("{:?}", root_type(g, &s)),
                }),
            );
        }
    }
    Ok(true)
}

fn run_tableau(cmd: TableauCmd, format: Format) -> anyhow::Result<bool> {
    use zorbit_core::tableaux::{enumerate_tableaux, tableau_dims, tableau_to_w, TwoColTableau};
    match cmd {
        TableauCmd::Enumerate { n, r } => {
            let list: Vec<serde_json::Value> = enumerate_tableaux(n, r)
                .iter()
                .map(|t| {
                    let word = tableau_to_w(t);
                    json!({
                        "p": t.p,
                        "w": word.w.to_string(),
                        "separated": t.separated(),
                    })
                })
                .collect();
            emit(format, &json!({ "count": list.len(), "tableaux": list }));
        }
        TableauCmd::ToW { n, cols, pretty } => {
            let p: Vec<usize> = cols
                .split_whitespace()
                .map(|w| w.parse().context("parsing --cols"))
                .collect::<anyhow::Result<_>>()?;
            let t = TwoColTableau::new(n, p)?;
            let word = tableau_to_w(&t);
            let (dim_hb, len_w) = tableau_dims(&t);
            if pretty {
                eprint!("{}", t.render());
            }
            emit(
                format,
                &json!({
                    "q": word.q,
                    "s": word.s,
                    "w": word.w.to_string(),
                    "dims": { "h_mod_bh": dim_hb, "len_w": len_w },
                    "separated": t.separated(),
                }),
            );
        }
    }
    Ok(true)
}

fn run_verify(cmd: VerifyCmd, format: Format, seed: u64, threads: usize) -> anyhow::Result<bool> {
    match cmd {
        VerifyCmd::DimFormula { spec, exhaustive } => {
            let s = spec.spec()?;
            let kind = s.weyl_kind();
            let lie_z = lie_basis(&GroupTag::Z, &s, Field::Q)?;
            let lie_b = lie_basis(&GroupTag::Borel, &s, Field::Q)?;
            let z_mod_b = lie_z.dim() - lie_z.intersect(&lie_b)?.dim();
            let mut elements = enumerate_weyl(kind);
            if !exhaustive {
                elements.truncate(10);
            }
            let rows = parallel_map(elements, threads, |w| {
                let (_, _, codim) = dim_orbit_oracle(w, &s).unwrap();
                let (tau, _) = coset_decompose(w, &s).unwrap();
                let theta = theta_on_wp(&tau, &s).unwrap();
                let lt = type_length(&tau, kind).unwrap() as i64;
                let ltt = type_length(&tau.inverse().compose(&theta), kind).unwrap() as i64;
                let lw = type_length(w, kind).unwrap() as i64;
                let rhs = lw + z_mod_b as i64 + ltt / 2 - lt;
                json!({
                    "w": w.to_string(),
                    "codim": codim,
                    "rhs": rhs,
                    "ok": codim as i64 == rhs,
                })
            });
            let all_ok = rows.iter().all(|r| r["ok"].as_bool().unwrap());
            emit(
                format,
                &json!({ "spec": s.to_string(), "all_ok": all_ok, "rows": rows }),
            );
            Ok(all_ok)
        }
        VerifyCmd::Lengths => {
            let res = criterion_length_cross_validation();
            let pass = res.pass;
            emit(format, &serde_json::to_value(&res)?);
            Ok(pass)
        }
        VerifyCmd::SmoothnessDims => {
            let res = criterion_lie_dimension_constancy(seed);
            let pass = res.pass;
            emit(format, &serde_json::to_value(&res)?);
            Ok(pass)
        }
        VerifyCmd::All { small: _ } => {
            let results = run_all(seed, threads);
            let all_pass = results.iter().all(|r| r.pass);
            for r in &results {
                eprintln!(
                    "criterion {:>2} [{}]: {}",
                    r.id,
                    r.name,
                    if r.pass { "PASS" } else { "FAIL" }
                );
            }
            emit(format, &serde_json::to_value(&results)?);
            Ok(all_pass)
        }
    }
}
