use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use kmoduli_core::data;
use kmoduli_core::git_hm::{self, QMultiPoly, ShahInput, Table1};
use kmoduli_core::kstability::{ProfileBundle, Threshold};
use kmoduli_core::piecewise::PiecewisePoly;
use kmoduli_core::rational::serde_q;
use kmoduli_core::toric::{self, Cone, Polytope2D, SliceInput, VersalReport};
use kmoduli_core::walls::{self, Bridge, FlipCenters, WallLedger};
use kmoduli_core::weierstrass::{self, AntiCanSection, SlcReport, WeierstrassPair, WeierstrassReduction};
use kmoduli_core::{parse_rational, Rational};

mod tables;

#[derive(Parser)]
#[command(name = "kmoduli", version, about = "Exact computations for K-moduli of quartic K3 surfaces")]
struct Cli {
    /// Read the JSON input from this file instead of stdin.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

fn q(s: &str) -> Result<Rational, String> {
    parse_rational(s)
}

#[derive(Subcommand)]
enum Command {
    /// β = A − S of a valuation profile (bundled by name, or JSON input).
    Beta {
        #[arg(long)]
        profile: Option<String>,
        #[arg(long, value_parser = q)]
        c: Option<Rational>,
    },
    /// Exact integral of a piecewise polynomial (JSON input, or a profile's volume).
    Integrate {
        #[arg(long)]
        profile: Option<String>,
    },
    /// Limit of (z = q, z² + g = 0) under a diagonal 1-PS.
    Limit {
        /// Take the weights from this stratum's row of the threshold table.
        #[arg(long)]
        row: Option<u32>,
        #[arg(long, value_parser = q)]
        alpha: Option<Rational>,
    },
    /// Classify a normal form q² + g into its stratum.
    Shah {
        #[arg(long, value_parser = q)]
        alpha: Option<Rational>,
    },
    /// Discriminant and slc check of a Weierstrass pair or anti-canonical section.
    Weierstrass,
    /// Versal base space of a toric Gorenstein singularity.
    ToricDeform {
        #[arg(long, default_value_t = toric::DEFAULT_VERIFY_DEGREE)]
        degree: u32,
    },
    /// Chamber descriptor at (a, b), or the wall tables.
    Walls {
        #[arg(long, value_parser = q, requires = "b", conflicts_with = "tables")]
        a: Option<Rational>,
        #[arg(long, value_parser = q, requires = "a")]
        b: Option<Rational>,
        #[arg(long)]
        tables: bool,
    },
    /// Regenerate the threshold and slope tables and diff them against the golden files.
    Tables,
}

pub enum CliError {
    Input(String),
    Data(String),
    /// Golden mismatch; the payload is still written out.
    Mismatch(Value, Vec<String>),
}

macro_rules! input_errors {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Input(e.to_string())
            }
        }
    )*};
}

input_errors!(
    serde_json::Error,
    kmoduli_core::kstability::KStabError,
    kmoduli_core::git_hm::GitError,
    kmoduli_core::multipoly::MultiPolyError,
    kmoduli_core::weierstrass::WsError,
    kmoduli_core::toric::ToricError,
    kmoduli_core::walls::WallsError
);

fn data_err(e: impl std::fmt::Display) -> CliError {
    CliError::Data(e.to_string())
}

type Res<T> = Result<T, CliError>;

pub struct Ctx {
    data_dir: Option<PathBuf>,
    input: Option<PathBuf>,
}

impl Ctx {
    fn load(&self, name: &str) -> Res<String> {
        data::load(self.data_dir.as_deref(), name).map_err(data_err)
    }

    fn profiles(&self) -> Res<ProfileBundle> {
        ProfileBundle::from_json(&self.load(data::PROFILES)?).map_err(data_err)
    }

    fn table1(&self) -> Res<Table1> {
        Table1::from_json(&self.load(data::TABLE1)?).map_err(data_err)
    }

    fn walls(&self) -> Res<WallLedger> {
        WallLedger::from_json(&self.load(data::WALLS)?).map_err(data_err)
    }

    fn read_input(&self) -> Res<String> {
        let mut s = String::new();
        match &self.input {
            Some(p) => s = std::fs::read_to_string(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?,
            None => {
                std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Input(format!("stdin: {e}")))?;
            }
        }
        Ok(s)
    }

    fn parse_input<T: serde::de::DeserializeOwned>(&self) -> Res<T> {
        Ok(serde_json::from_str(&self.read_input()?)?)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ThresholdJson {
    Rational {
        #[serde(with = "serde_q")]
        value: Rational,
    },
    Irrational {
        #[serde(with = "serde_q::pair")]
        interval: (Rational, Rational),
        #[serde(with = "serde_q::vec")]
        poly: Vec<Rational>,
    },
    NoWall,
    Degenerate,
}

impl From<Threshold> for ThresholdJson {
    fn from(t: Threshold) -> Self {
        match t {
            Threshold::Rational(value) => ThresholdJson::Rational { value },
            Threshold::Irrational(iv) => ThresholdJson::Irrational { interval: (iv.lo, iv.hi), poly: iv.poly.coeffs().to_vec() },
            Threshold::NoWall => ThresholdJson::NoWall,
            Threshold::Degenerate => ThresholdJson::Degenerate,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BetaOutput {
    pub profile: String,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "serde_q::opt")]
    pub c: Option<Rational>,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none", with = "serde_q::opt")]
    pub a: Option<Rational>,
    #[serde(rename = "S", default, skip_serializing_if = "Option::is_none", with = "serde_q::opt")]
    pub s: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "serde_q::opt")]
    pub beta: Option<Rational>,
    #[serde(rename = "beta_poly", with = "serde_q::vec")]
    pub beta_poly: Vec<Rational>,
    pub kst_threshold: ThresholdJson,
}

fn beta(ctx: &Ctx, profile: Option<String>, c: Option<Rational>) -> Res<Value> {
    let p = match profile {
        Some(name) => ctx.profiles()?.profile(&name).cloned().ok_or_else(|| CliError::Input(format!("no bundled profile named {name:?}")))?,
        None => ctx.parse_input()?,
    };
    p.validate()?;
    let (a, s, b) = match &c {
        Some(c) => {
            if c < &p.c_range.0 || c >= &p.c_range.1 {
                return Err(CliError::Input(format!("c = {c} is outside the profile's range [{}, {})", p.c_range.0, p.c_range.1)));
            }
            (Some(p.a_poly().eval(c)), Some(p.s_invariant()?.eval(c)), Some(p.beta(c)?))
        }
        None => (None, None, None),
    };
    let out = BetaOutput {
        profile: p.name.clone(),
        c,
        a,
        s,
        beta: b,
        beta_poly: p.beta_poly()?.coeffs().to_vec(),
        kst_threshold: p.kst_threshold()?.into(),
    };
    Ok(serde_json::to_value(out)?)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntegrateOutput {
    #[serde(with = "serde_q::pair")]
    pub domain: (Rational, Rational),
    #[serde(with = "serde_q")]
    pub integral: Rational,
}

fn integrate(ctx: &Ctx, profile: Option<String>) -> Res<Value> {
    let f: PiecewisePoly<Rational> = match profile {
        Some(name) => ctx.profiles()?.profile(&name).ok_or_else(|| CliError::Input(format!("no bundled profile named {name:?}")))?.vol.clone(),
        None => ctx.parse_input()?,
    };
    let bp = f.breakpoints();
    let domain = (bp[0].clone(), bp[bp.len() - 1].clone());
    Ok(serde_json::to_value(IntegrateOutput { domain, integral: f.integrate() })?)
}

#[derive(Deserialize)]
struct LimitInput {
    q: QMultiPoly,
    #[serde(default)]
    g: Option<QMultiPoly>,
    #[serde(default)]
    weights: Option<Vec<String>>,
}

fn table_with_alpha(ctx: &Ctx, alpha: Option<Rational>) -> Res<Table1> {
    let mut t = ctx.table1()?;
    if let Some(a) = alpha {
        t.alpha = a;
        if !t.alpha_regime_ok()? {
            return Err(CliError::Input(format!("alpha = {} is outside the small-alpha regime of the symbolic weights", t.alpha)));
        }
    }
    Ok(t)
}

fn limit(ctx: &Ctx, row: Option<u32>, alpha: Option<Rational>) -> Res<Value> {
    let inp: LimitInput = ctx.parse_input()?;
    let w = match (row, inp.weights) {
        (Some(_), Some(_)) => return Err(CliError::Input("give either --row or \"weights\", not both".into())),
        (Some(i), None) => {
            let t = table_with_alpha(ctx, alpha)?;
            t.row(i)?.weights.instantiate(&t.alpha)?
        }
        (None, Some(w)) => w.iter().map(|x| parse_rational(x)).collect::<Result<_, _>>().map_err(CliError::Input)?,
        (None, None) => return Err(CliError::Input("missing weights: pass --row or a \"weights\" field".into())),
    };
    let g = match inp.g {
        Some(g) => g,
        None => QMultiPoly::zero(git_hm::p11112_vars())?,
    };
    Ok(serde_json::to_value(git_hm::limit_pair(&inp.q, &g, &w)?)?)
}

fn shah(ctx: &Ctx, alpha: Option<Rational>) -> Res<Value> {
    let inp: ShahInput = ctx.parse_input()?;
    let t = table_with_alpha(ctx, alpha)?;
    Ok(serde_json::to_value(git_hm::shah_stratify_with(&t, &inp)?)?)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeierstrassOutput {
    pub pair: WeierstrassPair,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduction: Option<WeierstrassReduction>,
    #[serde(with = "serde_q::vec")]
    pub discriminant: Vec<Rational>,
    pub slc: SlcReport,
}

fn weierstrass_cmd(ctx: &Ctx) -> Res<Value> {
    let v: Value = serde_json::from_str(&ctx.read_input()?)?;
    let (pair, reduction) = if v.get("A").is_some() || v.get("B").is_some() {
        (serde_json::from_value::<WeierstrassPair>(v)?, None)
    } else {
        let s: AntiCanSection = serde_json::from_value(v)?;
        s.validate()?;
        let r = weierstrass::to_weierstrass(&s)?;
        (r.pair.clone(), Some(r))
    };
    let out = WeierstrassOutput {
        discriminant: weierstrass::discriminant(&pair).coeffs().to_vec(),
        slc: weierstrass::slc_check(&pair)?,
        pair,
        reduction,
    };
    Ok(serde_json::to_value(out)?)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SliceOutput {
    pub cone: Cone,
    pub dual_cone: Cone,
    pub polytope: Polytope2D,
    pub versal: VersalReport,
}

fn toric_deform(ctx: &Ctx, degree: u32) -> Res<Value> {
    let v: Value = serde_json::from_str(&ctx.read_input()?)?;
    if v.get("vertices").is_some() {
        let p: Polytope2D = serde_json::from_value(v)?;
        return Ok(serde_json::to_value(toric::versal_base(&p, degree)?)?);
    }
    let s: SliceInput = serde_json::from_value(v)?;
    let dual_cone = toric::dual_cone(&s.cone)?;
    let polytope = toric::polytope_slice(&s.cone, &s.basis)?;
    let versal = toric::versal_base(&polytope, degree)?;
    Ok(serde_json::to_value(SliceOutput { cone: s.cone, dual_cone, polytope, versal })?)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlopeCheck {
    pub i: u32,
    #[serde(with = "serde_q")]
    pub t: Rational,
    #[serde(with = "serde_q")]
    pub kst_from_slope: Rational,
    #[serde(with = "serde_q::opt")]
    pub table_kst: Option<Rational>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AWallFlip {
    pub index: u32,
    #[serde(with = "serde_q")]
    pub a: Rational,
    #[serde(with = "serde_q")]
    pub c: Rational,
    pub flip_centers: FlipCenters,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WallTables {
    #[serde(with = "serde_q::vec")]
    pub c_walls: Vec<Rational>,
    #[serde(with = "serde_q::vec")]
    pub a_walls: Vec<Rational>,
    #[serde(with = "serde_q")]
    pub unigonal_wall: Rational,
    pub bridge: Bridge,
    pub slopes: Vec<SlopeCheck>,
    pub flips: Vec<AWallFlip>,
    pub consistent: bool,
}

fn wall_tables(ctx: &Ctx) -> Res<(Value, bool)> {
    let l = ctx.walls()?;
    let t1 = ctx.table1()?;
    let bridge = l.bridge()?;
    let slopes = l
        .table2()?
        .into_iter()
        .map(|(i, t, k)| {
            let table_kst = t1.row(i).ok().map(|r| r.kst.clone());
            let matches = table_kst.as_ref() == Some(&k);
            SlopeCheck { i, t, kst_from_slope: k, table_kst, matches }
        })
        .collect::<Vec<_>>();
    let flips = (1..=7)
        .map(|i| {
            let a = l.a_walls[i as usize - 1].clone();
            Ok(AWallFlip { index: i, c: walls::c_from_a(&a)?, a, flip_centers: l.flip_centers_both(i)?.0 })
        })
        .collect::<Res<Vec<_>>>()?;
    let consistent = l.validate().is_ok() && bridge.matches && bridge.unigonal_flagged && slopes.iter().all(|s| s.matches);
    let out = WallTables {
        c_walls: l.c_walls.clone(),
        a_walls: l.a_walls.clone(),
        unigonal_wall: l.unigonal_wall.clone(),
        bridge,
        slopes,
        flips,
        consistent,
    };
    Ok((serde_json::to_value(out)?, consistent))
}

fn walls_cmd(ctx: &Ctx, a: Option<Rational>, b: Option<Rational>, tables: bool) -> Res<Value> {
    if tables {
        let (v, ok) = wall_tables(ctx)?;
        if !ok {
            return Err(CliError::Mismatch(v, vec!["wall tables are inconsistent".into()]));
        }
        return Ok(v);
    }
    let (Some(a), Some(b)) = (a, b) else {
        return Err(CliError::Input("walls needs --a and --b, or --tables".into()));
    };
    Ok(serde_json::to_value(ctx.walls()?.chamber(&a, &b)?)?)
}

fn render(v: &Value, format: Format, markdown: Option<String>) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("values serialize") + "\n",
        Format::Markdown => markdown.unwrap_or_else(|| generic_markdown(v)),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
    .replace('|', "\\|")
}

fn generic_markdown(v: &Value) -> String {
    match v {
        Value::Object(m) => {
            let mut s = String::from("| field | value |\n|---|---|\n");
            for (k, x) in m {
                s += &format!("| {k} | {} |\n", cell(x));
            }
            s
        }
        other => cell(other) + "\n",
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Res<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::Input(format!("stdout: {e}"))),
    }
}

fn run(cli: &Cli, ctx: &Ctx) -> Res<(Value, Option<String>)> {
    let v = match &cli.command {
        Command::Beta { profile, c } => beta(ctx, profile.clone(), c.clone())?,
        Command::Integrate { profile } => integrate(ctx, profile.clone())?,
        Command::Limit { row, alpha } => limit(ctx, *row, alpha.clone())?,
        Command::Shah { alpha } => shah(ctx, alpha.clone())?,
        Command::Weierstrass => weierstrass_cmd(ctx)?,
        Command::ToricDeform { degree } => toric_deform(ctx, *degree)?,
        Command::Walls { a, b, tables } => walls_cmd(ctx, a.clone(), b.clone(), *tables)?,
        Command::Tables => {
            let report = tables::regenerate(ctx)?;
            let md = tables::markdown(&report);
            let v = serde_json::to_value(&report)?;
            if !report.diffs.is_empty() {
                let lines = report.diffs.iter().map(ToString::to_string).collect();
                let text = render(&v, cli.format, Some(md));
                return Err(CliError::Mismatch(Value::String(text), lines));
            }
            return Ok((v, Some(md)));
        }
    };
    Ok((v, None))
}

fn error_json(kind: &str, message: &str) -> String {
    serde_json::json!({"error": {"kind": kind, "message": message}}).to_string()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx { data_dir: std::env::var_os("KMODULI_DATA_DIR").map(PathBuf::from), input: cli.input.clone() };
    match run(&cli, &ctx) {
        Ok((v, md)) => match write_out(cli.output.as_deref(), &render(&v, cli.format, md)) {
            Ok(()) => ExitCode::SUCCESS,
            Err(_) => ExitCode::from(2),
        },
        Err(CliError::Mismatch(v, lines)) => {
            let text = match v {
                Value::String(s) => s,
                other => render(&other, cli.format, None),
            };
            let _ = write_out(cli.output.as_deref(), &text);
            for l in lines {
                eprintln!("{l}");
            }
            ExitCode::from(1)
        }
        Err(CliError::Input(m)) => {
            eprintln!("{}", error_json("input", &m));
            ExitCode::from(2)
        }
        Err(CliError::Data(m)) => {
            eprintln!("{}", error_json("data", &m));
            ExitCode::from(2)
        }
    }
}
