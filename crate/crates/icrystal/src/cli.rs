//! The `icrystal` command line. Exit codes: 0 pass, 1 verification failure,
//! 2 usage or input error.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use icrystal_core::crystal::*;
use icrystal_core::icrystal::*;
use icrystal_core::itensor::{induce_icrystal, tensor_icrystal_crystal, InduceMode};
use icrystal_core::projective::{gamma_nu, limit_action, pi_i_lambda_nu, rho_lambda, StructureMap};
use icrystal_core::qoracle::{build_rank_two_module, module_norms, ModuleParams};
use icrystal_core::rootdata::OrbitKind;
use icrystal_core::{CartanSatakeDatum, Error, IEntry, IWeight, Report, Weight, DEFAULT_CAP};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::format::*;
use crate::suite::{self, SuiteConfig};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "icrystal", version, about = "Crystals and ıcrystals of quasi-split type: build, check, tensor, verify")]
struct Cli {
    /// JSON file with defaults for the global flags.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Bundled datum (A1:s, A1xA1, A2flip:s) or a datum JSON file.
    #[arg(long, global = true)]
    datum: Option<String>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the artifact here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Bound on generated component sizes.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Maximal chain depth for projective limits.
    #[arg(long, global = true)]
    depth: Option<usize>,
    /// Seed of the randomized suites.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a built-in crystal or ıcrystal.
    Build(BuildArgs),
    /// Check the axioms of a crystal or ıcrystal file.
    Check { file: PathBuf },
    /// Tensor an ıcrystal file with a crystal file.
    Tensor { left: PathBuf, right: PathBuf },
    /// Induce an ıcrystal from a crystal file.
    Induce {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "general")]
        mode: Mode,
    },
    /// Re-serialize a graph file as normalized JSON or DOT.
    #[command(alias = "graph")]
    Export { file: PathBuf },
    /// Run the verification suite.
    VerifyPaper {
        /// Cases to run (repeatable); all when omitted.
        #[arg(long = "case")]
        cases: Vec<String>,
        /// List the cases and exit.
        #[arg(long)]
        list: bool,
    },
    /// Limit action on T_ζ ⊗ B(∞) and structure maps of the projective system.
    Projective(ProjectiveArgs),
    /// Norms of the rank-two module V^ı(n₋, n₊) with leading terms.
    Norms {
        #[arg(long = "n-minus", allow_hyphen_values = true)]
        n_minus: i64,
        #[arg(long = "n-plus", allow_hyphen_values = true)]
        n_plus: i64,
    },
    /// Regenerate the golden files into a directory.
    #[command(hide = true)]
    WriteGoldens { dir: PathBuf },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Mode {
    General,
    Seminormal,
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[arg(long)]
    family: String,
    /// Extra parameters as key=value, comma separated or repeated.
    #[arg(long, value_delimiter = ',')]
    params: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
    #[arg(long = "n-minus", allow_hyphen_values = true)]
    n_minus: Option<i64>,
    #[arg(long = "n-plus", allow_hyphen_values = true)]
    n_plus: Option<i64>,
    /// Highest weight, e.g. 2,0.
    #[arg(long, allow_hyphen_values = true)]
    hw: Option<String>,
    /// ı-weight entries, one per τ-orbit.
    #[arg(long, allow_hyphen_values = true)]
    zeta: Option<String>,
}

#[derive(Args, Debug)]
struct ProjectiveArgs {
    #[arg(long, allow_hyphen_values = true)]
    zeta: Option<String>,
    /// B(∞) element as a word of index labels, e.g. 1,2,1.
    #[arg(long, default_value = "")]
    word: String,
    /// Index label of the operator.
    #[arg(long)]
    i: Option<String>,
    /// Consecutive agreeing levels required.
    #[arg(long, default_value_t = 3)]
    agree: usize,
    /// Also report γ_ν (and π_{λ,ν} with --lambda).
    #[arg(long)]
    nu: Option<String>,
    /// Also report ρ_λ (and π_{λ,ν} with --nu).
    #[arg(long)]
    lambda: Option<String>,
}

/// Settings read from `--config`; flags win.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    datum: Option<String>,
    format: Option<String>,
    out: Option<PathBuf>,
    cap: Option<usize>,
    depth: Option<usize>,
    seed: Option<u64>,
}

/// Validated global settings.
#[derive(Debug, Clone)]
pub struct CliConfig {
    pub datum: Option<String>,
    /// None means the command's own default: JSON for graphs, text for reports.
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub cap: usize,
    pub depth: usize,
    pub seed: u64,
}

impl CliConfig {
    fn graph_format(&self) -> Format {
        self.format.unwrap_or(Format::Json)
    }
}

enum Failure {
    Input(String),
    Verify(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoStabilization { .. } | Error::Instability { .. } => Failure::Verify(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type CResult<T> = Result<T, Failure>;

fn input<T>(msg: impl Into<String>) -> CResult<T> {
    Err(Failure::Input(msg.into()))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`], writing to the given streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { EXIT_PASS } else { EXIT_INPUT };
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(Failure::Input(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_INPUT
        }
        Err(Failure::Verify(m)) => {
            let _ = writeln!(err, "verification failed: {m}");
            EXIT_FAIL
        }
    }
}

fn config(cli: &Cli) -> CResult<CliConfig> {
    let file = match &cli.config {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
            serde_json::from_str::<FileConfig>(&text).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?
        }
        None => FileConfig::default(),
    };
    let format = match (cli.format, file.format.as_deref()) {
        (Some(f), _) => Some(f),
        (None, Some(s)) => Some(Format::from_str(s, true).map_err(|e| Failure::Input(format!("config format: {e}")))?),
        (None, None) => None,
    };
    Ok(CliConfig {
        datum: cli.datum.clone().or(file.datum),
        format,
        out: cli.out.clone().or(file.out),
        cap: cli.cap.or(file.cap).unwrap_or(DEFAULT_CAP),
        depth: cli.depth.or(file.depth).unwrap_or(12),
        seed: cli.seed.or(file.seed).unwrap_or(SuiteConfig::default().seed),
    })
}

fn emit(cfg: &CliConfig, out: &mut dyn Write, text: &str) -> CResult<()> {
    match &cfg.out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| Failure::Input(e.to_string())),
    }
}

fn report_json(command: &str, kind: &str, rep: &Report) -> String {
    let v = json!({
        "schema": SCHEMA,
        "command": command,
        "kind": kind,
        "pass": rep.is_ok(),
        "violations": rep.violations.iter().map(|v| json!({"clause": v.clause, "witness": v.witness})).collect::<Vec<_>>(),
    });
    layout(&v) + "\n"
}

fn read_graph(p: &Path) -> CResult<AnyGraph> {
    let text = std::fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
    Ok(graph_from_json(&text)?)
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> CResult<i32> {
    let cfg = config(&cli)?;
    match cli.cmd {
        Command::Build(a) => {
            let g = build(&cfg, &a)?;
            emit(&cfg, out, &render(&g, cfg.graph_format()))?;
            Ok(EXIT_PASS)
        }
        Command::Check { file } => {
            let (kind, rep) = match read_graph(&file)? {
                AnyGraph::Crystal(c) => ("crystal", check_crystal_axioms(&c)),
                AnyGraph::ICrystal(g) => ("icrystal", check_icrystal_axioms(&g)),
            };
            emit(&cfg, out, &report_json("check", kind, &rep))?;
            Ok(if rep.is_ok() { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Tensor { left, right } => {
            let (AnyGraph::ICrystal(l), AnyGraph::Crystal(r)) = (read_graph(&left)?, read_graph(&right)?) else {
                return input("tensor needs an ıcrystal file and then a crystal file");
            };
            let g = tensor_icrystal_crystal(&l, &r)?;
            finish_built(&cfg, out, err, g, "tensor")
        }
        Command::Induce { file, mode } => {
            let AnyGraph::Crystal(c) = read_graph(&file)? else { return input("induce needs a crystal file") };
            let mode = match mode {
                Mode::General => InduceMode::General,
                Mode::Seminormal => InduceMode::Seminormal,
            };
            let g = induce_icrystal(&c, mode)?;
            finish_built(&cfg, out, err, g, "induce")
        }
        Command::Export { file } => {
            let g = read_graph(&file)?;
            emit(&cfg, out, &render(&g, cfg.graph_format()))?;
            Ok(EXIT_PASS)
        }
        Command::VerifyPaper { cases, list } => verify(&cfg, out, cases, list),
        Command::Projective(a) => projective(&cfg, out, &a),
        Command::Norms { n_minus, n_plus } => norms(&cfg, out, n_minus, n_plus),
        Command::WriteGoldens { dir } => {
            std::fs::create_dir_all(&dir).map_err(|e| Failure::Input(e.to_string()))?;
            for (name, text) in suite::golden_outputs()? {
                std::fs::write(dir.join(&name), text).map_err(|e| Failure::Input(e.to_string()))?;
                let _ = writeln!(out, "wrote {name}");
            }
            Ok(EXIT_PASS)
        }
    }
}

/// Writes a constructed ıcrystal, then fails if it breaks the axioms.
fn finish_built(cfg: &CliConfig, out: &mut dyn Write, err: &mut dyn Write, g: ICrystalGraph, what: &str) -> CResult<i32> {
    emit(cfg, out, &render(&AnyGraph::ICrystal(g.clone()), cfg.graph_format()))?;
    let rep = check_icrystal_axioms(&g);
    if rep.is_ok() {
        return Ok(EXIT_PASS);
    }
    let _ = write!(err, "{}", report_json(what, "icrystal", &rep));
    Ok(EXIT_FAIL)
}

// ---------------------------------------------------------------- build

fn param_map(a: &BuildArgs) -> CResult<BTreeMap<String, String>> {
    let mut m = BTreeMap::new();
    for p in a.params.iter().filter(|p| !p.is_empty()) {
        let Some((k, v)) = p.split_once('=') else { return input(format!("parameter {p:?} is not key=value")) };
        m.insert(k.trim().replace('-', "_"), v.trim().to_string());
    }
    let mut put = |k: &str, v: Option<String>| {
        if let Some(v) = v {
            m.insert(k.to_string(), v);
        }
    };
    put("n", a.n.map(|x| x.to_string()));
    put("n_minus", a.n_minus.map(|x| x.to_string()));
    put("n_plus", a.n_plus.map(|x| x.to_string()));
    put("hw", a.hw.clone());
    put("zeta", a.zeta.clone());
    Ok(m)
}

fn int_param(m: &BTreeMap<String, String>, k: &str, default: i64) -> CResult<i64> {
    match m.get(k) {
        None => Ok(default),
        Some(v) => v.parse().map_err(|e| Failure::Input(format!("{k}={v}: {e}"))),
    }
}

fn list_param(m: &BTreeMap<String, String>, k: &str) -> CResult<Option<Vec<i64>>> {
    m.get(k).map(|v| parse_int_list(v).map_err(|e| Failure::Input(format!("{k}: {e}")))).transpose()
}

fn default_datum(family: &str, m: &BTreeMap<String, String>) -> CResult<&'static str> {
    let rank_hint = list_param(m, "hw")?.map(|v| v.len()).or(list_param(m, "zeta")?.map(|v| v.len()));
    Ok(match family {
        "b_n" | "bi_rank1" | "bi_pair" => "A1:0",
        "bi_orthogonal" => "A1xA1",
        "natural" | "bi_adjacent" | "bi_vee" | "bi_wedge" => "A2flip:0",
        _ => match rank_hint {
            Some(1) => "A1:0",
            _ => "A2flip:0",
        },
    })
}

fn zeta_weight(d: &CartanSatakeDatum, v: &[i64]) -> CResult<IWeight> {
    if v.len() != d.i_tau().len() {
        return input(format!("ζ needs {} entries, one per τ-orbit", d.i_tau().len()));
    }
    Ok(IWeight(
        v.iter()
            .zip(d.i_tau())
            .map(|(&x, &i)| match d.kind(i) {
                OrbitKind::Fixed => IEntry::Parity(x.rem_euclid(2) as u8),
                _ => IEntry::Signed(x),
            })
            .collect(),
    ))
}

fn weight_of(d: &CartanSatakeDatum, v: Vec<i64>) -> CResult<Weight> {
    if v.len() != d.rank() {
        return input(format!("weight needs {} entries", d.rank()));
    }
    Ok(Weight(v))
}

fn build(cfg: &CliConfig, a: &BuildArgs) -> CResult<AnyGraph> {
    let m = param_map(a)?;
    let fam = a.family.as_str();
    let dspec = match &cfg.datum {
        Some(s) => s.clone(),
        None => default_datum(fam, &m)?.to_string(),
    };
    let d = load_datum(&dspec)?;
    let si = d.s(d.i_tau()[0]);
    let ic = |g: icrystal_core::error::Result<ICrystalGraph>| -> CResult<AnyGraph> { Ok(AnyGraph::ICrystal(g?)) };
    let cr = |g: icrystal_core::error::Result<CrystalGraph>| -> CResult<AnyGraph> { Ok(AnyGraph::Crystal(g?)) };
    match fam {
        "b_n" => cr(b_n(&d, int_param(&m, "n", 1)?)),
        "t_lambda" => cr(t_lambda(&d, &weight_of(&d, list_param(&m, "hw")?.unwrap_or(vec![0; d.rank()]))?)),
        "natural" => cr(natural(&d)),
        "fundamental" => {
            let j = int_param(&m, "j", 1)?;
            if j < 1 || j as usize > d.rank() {
                return input(format!("j = {j} is not an index"));
            }
            cr(fundamental(&d, j as usize - 1))
        }
        "one_row" => {
            let path = list_param(&m, "path")?.ok_or(Failure::Input("one_row needs path=1;2 (labels)".into()))?;
            cr(one_row(&d, &path.iter().map(|&x| x as usize - 1).collect::<Vec<_>>()))
        }
        "b_lambda" => {
            let hw = weight_of(&d, list_param(&m, "hw")?.unwrap_or(vec![1; d.rank()]))?;
            Ok(AnyGraph::Crystal(HighestWeightModel::new(&d, &hw)?.explicit(cfg.cap)?.graph))
        }
        "trivial" => ic(trivial(&d)),
        "t_zeta" => {
            let z = list_param(&m, "zeta")?.unwrap_or(vec![0; d.i_tau().len()]);
            ic(t_zeta(&d, &zeta_weight(&d, &z)?))
        }
        "bi_rank1" => ic(bi_rank1(&d, int_param(&m, "n", 1)?)),
        "bi_pair" => ic(bi_pair(&d, int_param(&m, "n", 1)?)),
        "bi_orthogonal" => ic(bi_orthogonal(&d, int_param(&m, "n", 1)?)),
        "bi_adjacent" => ic(bi_adjacent(&d, int_param(&m, "n_minus", 1)?, int_param(&m, "n_plus", si)?)),
        "bi_vee" => ic(bi_vee(&d, int_param(&m, "n_minus", 1)?, int_param(&m, "n_plus", si)?)),
        "bi_wedge" => ic(bi_wedge(&d, int_param(&m, "n_minus", 1)?, int_param(&m, "n_plus", si)?)),
        other => input(format!(
            "unknown family {other:?}; known: b_n, t_lambda, natural, fundamental, one_row, b_lambda, trivial, t_zeta, \
             bi_rank1, bi_pair, bi_orthogonal, bi_adjacent, bi_vee, bi_wedge"
        )),
    }
}

// ---------------------------------------------------------------- verify-paper

fn verify(cfg: &CliConfig, out: &mut dyn Write, cases: Vec<String>, list: bool) -> CResult<i32> {
    if list {
        let mut text = String::new();
        for c in suite::CASES {
            text.push_str(&format!("{c:<14} {}\n", suite::describe(c)));
        }
        emit(cfg, out, &text)?;
        return Ok(EXIT_PASS);
    }
    let names: Vec<&str> = if cases.is_empty() { suite::CASES.to_vec() } else { cases.iter().map(String::as_str).collect() };
    let scfg = SuiteConfig { seed: cfg.seed, cap: cfg.cap, depth: cfg.depth, ..SuiteConfig::default() };
    let results = suite::run_cases(&names, &scfg).map_err(Failure::Input)?;
    let all_pass = results.iter().all(|r| r.pass);
    let text = match cfg.format {
        Some(Format::Json) => {
            let items: Vec<Value> =
                results.iter().map(|r| json!({"case": r.case, "id": r.id, "pass": r.pass, "detail": r.detail})).collect();
            let v = json!({"schema": SCHEMA, "command": "verify-paper", "seed": cfg.seed, "pass": all_pass, "items": items});
            layout(&v) + "\n"
        }
        Some(Format::Dot) => return input("verify-paper reports are text or json"),
        None => matrix_text(&names, &results),
    };
    emit(cfg, out, &text)?;
    Ok(if all_pass { EXIT_PASS } else { EXIT_FAIL })
}

fn matrix_text(names: &[&str], results: &[suite::ItemResult]) -> String {
    let mut s = String::new();
    for c in names {
        let mine: Vec<_> = results.iter().filter(|r| r.case == *c).collect();
        let ok = mine.iter().filter(|r| r.pass).count();
        let mark = if ok == mine.len() { "PASS" } else { "FAIL" };
        s.push_str(&format!("{mark}  {c:<14} {ok}/{}\n", mine.len()));
        for r in mine.iter().filter(|r| !r.pass) {
            s.push_str(&format!("      {}: {}\n", r.id, r.detail));
        }
    }
    s
}

// ---------------------------------------------------------------- projective

fn labels_to_indices(d: &CartanSatakeDatum, s: &str) -> CResult<Vec<usize>> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']');
    if t.trim().is_empty() {
        return Ok(vec![]);
    }
    t.split(',')
        .map(|x| d.index_of(x.trim().trim_matches('"')).ok_or_else(|| Failure::Input(format!("unknown index label {x:?}"))))
        .collect()
}

fn word_json(d: &CartanSatakeDatum, w: &[usize]) -> Value {
    Value::from(w.iter().map(|&i| d.label(i).to_string()).collect::<Vec<_>>())
}

fn map_json(name: &str, m: &StructureMap) -> CResult<Value> {
    let c = check_icrystal_morphism(&m.src, &m.tgt, &m.map)?;
    let cols: Vec<Value> = m
        .map
        .cols
        .iter()
        .enumerate()
        .map(|(b, col)| {
            json!({
                "from": m.src.data().names[b],
                "to": col.iter().map(|(t, z)| json!({"element": m.tgt.data().names[*t], "z": ScalarJson::from(*z)})).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(json!({
        "map": name,
        "source_size": m.src.len(),
        "target_size": m.tgt.len(),
        "class": format!("{:?}", c.kind()),
        "very_strict": c.morphism.is_ok() && c.very_strict,
        "columns": cols,
    }))
}

fn projective(cfg: &CliConfig, out: &mut dyn Write, a: &ProjectiveArgs) -> CResult<i32> {
    let d = load_datum(cfg.datum.as_deref().unwrap_or("A1:0"))?;
    let z = match &a.zeta {
        Some(s) => parse_int_list(s).map_err(Failure::Input)?,
        None => vec![0; d.i_tau().len()],
    };
    let zeta = zeta_weight(&d, &z)?;
    let word = labels_to_indices(&d, &a.word)?;
    let i = match &a.i {
        Some(l) => d.index_of(l).ok_or_else(|| Failure::Input(format!("unknown index label {l:?}")))?,
        None => d.i_tau()[0],
    };
    let lv = limit_action(&d, &zeta, &word, i, a.agree, cfg.depth)?;
    let mut maps = vec![];
    let nu = a.nu.as_deref().map(|s| parse_int_list(s).map_err(Failure::Input).and_then(|v| weight_of(&d, v))).transpose()?;
    let lam = a.lambda.as_deref().map(|s| parse_int_list(s).map_err(Failure::Input).and_then(|v| weight_of(&d, v))).transpose()?;
    if let Some(nu) = &nu {
        maps.push(map_json("gamma_nu", &gamma_nu(&d, nu, cfg.cap)?)?);
    }
    if let Some(lam) = &lam {
        maps.push(map_json("rho_lambda", &rho_lambda(&d, lam, cfg.cap)?)?);
    }
    if let (Some(lam), Some(nu)) = (&lam, &nu) {
        maps.push(map_json("pi_lambda_nu", &pi_i_lambda_nu(&d, lam, nu, cfg.cap)?)?);
    }
    let v = json!({
        "schema": SCHEMA,
        "command": "projective",
        "datum": DatumJson::from_datum(&d),
        "zeta": iweight_to_json(&zeta),
        "word": word_json(&d, &word),
        "i": d.label(i),
        "beta": iext_to_json(lv.beta),
        "btil": lv.btil.iter().map(|(w, z)| json!({"word": word_json(&d, w), "z": ScalarJson::from(*z)})).collect::<Vec<_>>(),
        "stabilization": {"agree": a.agree, "first_level": lv.level, "max_depth": cfg.depth},
        "morphisms": maps,
    });
    emit(cfg, out, &(layout(&v) + "\n"))?;
    Ok(if maps_ok(&v) { EXIT_PASS } else { EXIT_FAIL })
}

fn maps_ok(v: &Value) -> bool {
    v["morphisms"].as_array().is_none_or(|ms| ms.iter().all(|m| m["very_strict"] == Value::Bool(true)))
}

// ---------------------------------------------------------------- norms

fn norms(cfg: &CliConfig, out: &mut dyn Write, n_minus: i64, n_plus: i64) -> CResult<i32> {
    let d = load_datum(cfg.datum.as_deref().unwrap_or("A2flip:0"))?;
    let m = build_rank_two_module(&d, ModuleParams::Adjacent(n_minus, n_plus))?;
    let entries = module_norms(&m)?;
    let ok = entries.iter().all(|e| e.recursion == e.closed_form && e.lt == e.lt_table);
    let lt = |l: &icrystal_core::qoracle::LeadingTerm| {
        let (h, c) = (l.half_exp, l.coeff.pretty());
        if h % 2 == 0 {
            format!("{c} q^{{{}}}", h / 2)
        } else {
            format!("{c} q^{{{}/2}}", h)
        }
    };
    let text = match cfg.format {
        None => {
            let mut t = String::new();
            for e in &entries {
                t.push_str(&format!("k = {}\n  recursion   {}\n  closed form {}\n  lt          {}  (table {})\n", e.k, e.recursion, e.closed_form, lt(&e.lt), lt(&e.lt_table)));
            }
            t
        }
        Some(Format::Json) => {
            let rows: Vec<Value> = entries
                .iter()
                .map(|e| {
                    json!({
                        "k": e.k,
                        "recursion": e.recursion.to_string(),
                        "closed_form": e.closed_form.to_string(),
                        "leading_term": lt(&e.lt),
                        "table": lt(&e.lt_table),
                    })
                })
                .collect();
            layout(&json!({"schema": SCHEMA, "command": "norms", "pass": ok, "norms": rows})) + "\n"
        }
        Some(Format::Dot) => return input("norms are text or json"),
    };
    emit(cfg, out, &text)?;
    Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
}
