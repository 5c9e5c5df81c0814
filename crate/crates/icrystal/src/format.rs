//! JSON and DOT serialization of data, crystals and ıcrystals.
//!
//! Indices in files are labels, so `tau` and `i_tau` are 1-based when the
//! datum carries no explicit labels. Output is deterministic: elements keep
//! their handles and edges are sorted by (source, label, target).

use std::fmt::Write as _;

use icrystal_core::crystal::{CrystalData, CrystalGraph};
use icrystal_core::icrystal::ICrystalGraph;
use icrystal_core::rootdata::OrbitKind;
use icrystal_core::{CartanSatakeDatum, Error, ExtInt, IEntry, IExtInt, IWeight, RawDatum, Sqrt2Scalar, Weight};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA: u32 = 1;

/// A malformed file or an invalid construction.
#[derive(Debug)]
pub enum FormatError {
    Json(String),
    Core(Error),
}

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FormatError::Json(m) => write!(f, "{m}"),
            FormatError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<Error> for FormatError {
    fn from(e: Error) -> Self {
        FormatError::Core(e)
    }
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json(e.to_string())
    }
}

pub type FResult<T> = Result<T, FormatError>;

fn bad<T>(msg: impl Into<String>) -> FResult<T> {
    Err(FormatError::Json(msg.into()))
}

/// Output formats of the graph writers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

// ---------------------------------------------------------------- data

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub gcm: Vec<Vec<i64>>,
    pub d: Vec<i64>,
    /// 1-based positions.
    pub tau: Vec<usize>,
    pub s: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i_tau: Option<Vec<usize>>,
}

impl DatumJson {
    pub fn from_datum(d: &CartanSatakeDatum) -> Self {
        let raw = d.to_raw();
        let default_labels = (1..=d.rank()).all(|i| d.label(i - 1) == i.to_string());
        let default_itau: Vec<usize> = (0..d.rank()).filter(|&i| i <= d.tau(i)).collect();
        DatumJson {
            labels: if default_labels { None } else { raw.labels },
            gcm: raw.gcm,
            d: raw.d,
            tau: raw.tau.iter().map(|t| t + 1).collect(),
            s: raw.s,
            i_tau: raw.i_tau.filter(|v| *v != default_itau).map(|v| v.iter().map(|t| t + 1).collect()),
        }
    }

    pub fn to_datum(&self) -> FResult<CartanSatakeDatum> {
        let n = self.gcm.len();
        if self.d.len() != n || self.tau.len() != n || self.s.len() != n || self.gcm.iter().any(|r| r.len() != n) {
            return bad("datum arrays have inconsistent lengths");
        }
        if let Some(l) = &self.labels {
            if l.len() != n {
                return bad("datum labels have the wrong length");
            }
        }
        let zero_based = |v: &[usize], what: &str| -> FResult<Vec<usize>> {
            v.iter()
                .map(|&t| if t == 0 || t > n { bad(format!("{what} entry {t} out of 1..={n}")) } else { Ok(t - 1) })
                .collect()
        };
        let raw = RawDatum {
            labels: self.labels.clone(),
            gcm: self.gcm.clone(),
            d: self.d.clone(),
            tau: zero_based(&self.tau, "tau")?,
            s: self.s.clone(),
            i_tau: self.i_tau.as_deref().map(|v| zero_based(v, "i_tau")).transpose()?,
        };
        Ok(CartanSatakeDatum::validate(raw)?)
    }
}

/// A bundled datum: `A1:s`, `A1xA1` or `A2flip:s1`.
pub fn builtin_datum(text: &str) -> Option<CartanSatakeDatum> {
    let lower = text.trim().to_ascii_lowercase();
    let (name, param) = match lower.split_once(':') {
        Some((a, b)) => (a.to_string(), Some(b.to_string())),
        None => (lower.clone(), None),
    };
    let s = param.as_deref().map(str::parse::<i64>);
    match (name.as_str(), s) {
        ("a1", Some(Ok(s))) => Some(CartanSatakeDatum::a1(s)),
        ("a1xa1", None) => Some(CartanSatakeDatum::a1xa1()),
        ("a2flip", Some(Ok(s))) => Some(CartanSatakeDatum::a2_flip(s)),
        _ => None,
    }
}

pub fn parse_datum_json(text: &str) -> FResult<CartanSatakeDatum> {
    serde_json::from_str::<DatumJson>(text)?.to_datum()
}

/// A bundled name, or otherwise the path of a datum file.
pub fn load_datum(arg: &str) -> FResult<CartanSatakeDatum> {
    if let Some(d) = builtin_datum(arg) {
        return Ok(d);
    }
    let text = std::fs::read_to_string(arg).map_err(|e| FormatError::Json(format!("{arg}: {e}")))?;
    parse_datum_json(&text)
}

fn label_index(d: &CartanSatakeDatum, l: &str) -> FResult<usize> {
    d.index_of(l).map_or_else(|| bad(format!("unknown index label {l:?}")), Ok)
}

// ---------------------------------------------------------------- scalars

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScalarJson {
    pub a: i64,
    pub b: i64,
    pub k: u32,
}

impl From<Sqrt2Scalar> for ScalarJson {
    fn from(z: Sqrt2Scalar) -> Self {
        let (a, b, k) = z.parts();
        ScalarJson { a, b, k }
    }
}

impl From<ScalarJson> for Sqrt2Scalar {
    fn from(z: ScalarJson) -> Self {
        Sqrt2Scalar::new(z.a, z.b, z.k)
    }
}

pub fn ext_to_json(x: ExtInt) -> Value {
    match x {
        ExtInt::Fin(a) => Value::from(a),
        ExtInt::NegInf => Value::from("-inf"),
    }
}

pub fn ext_from_json(v: &Value) -> FResult<ExtInt> {
    match v {
        Value::String(s) if s == "-inf" => Ok(ExtInt::NegInf),
        Value::Number(_) => v.as_i64().map(ExtInt::Fin).map_or_else(|| bad(format!("bad integer {v}")), Ok),
        _ => bad(format!("expected an integer or \"-inf\", got {v}")),
    }
}

pub fn iext_to_json(x: IExtInt) -> Value {
    match x {
        IExtInt::Fin(a) => Value::from(a),
        IExtInt::NegInf => Value::from("-inf"),
        IExtInt::NegInfEven => Value::from("-inf_ev"),
        IExtInt::NegInfOdd => Value::from("-inf_odd"),
    }
}

pub fn iext_from_json(v: &Value) -> FResult<IExtInt> {
    match v.as_str() {
        Some("-inf") => Ok(IExtInt::NegInf),
        Some("-inf_ev") => Ok(IExtInt::NegInfEven),
        Some("-inf_odd") => Ok(IExtInt::NegInfOdd),
        Some(s) => bad(format!("unknown symbol {s:?}")),
        None => v.as_i64().map(IExtInt::Fin).map_or_else(|| bad(format!("bad β entry {v}")), Ok),
    }
}

/// Signed orbit entries are integers; parity entries are `{"mod2": p}`.
pub fn iweight_to_json(w: &IWeight) -> Value {
    Value::Array(
        w.0.iter()
            .map(|e| match e {
                IEntry::Signed(a) => Value::from(*a),
                IEntry::Parity(p) => serde_json::json!({ "mod2": p }),
            })
            .collect(),
    )
}

pub fn iweight_from_json(d: &CartanSatakeDatum, v: &Value) -> FResult<IWeight> {
    let Some(arr) = v.as_array() else { return bad("ı-weight must be an array") };
    if arr.len() != d.i_tau().len() {
        return bad("ı-weight has the wrong length");
    }
    let mut out = Vec::new();
    for (x, &i) in arr.iter().zip(d.i_tau()) {
        let e = match (d.kind(i), x) {
            (OrbitKind::Fixed, Value::Object(m)) => match m.get("mod2").and_then(Value::as_u64) {
                Some(p @ 0..=1) if m.len() == 1 => IEntry::Parity(p as u8),
                _ => return bad(format!("bad parity entry {x}")),
            },
            (OrbitKind::Fixed, _) => return bad(format!("fixed orbit needs {{\"mod2\": p}}, got {x}")),
            (_, _) => IEntry::Signed(x.as_i64().map_or_else(|| bad(format!("bad signed entry {x}")), Ok)?),
        };
        out.push(e);
    }
    Ok(IWeight(out))
}

/// Parses `2,-1` or `[2,-1]` into integers.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>, String> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']');
    if t.trim().is_empty() {
        return Ok(vec![]);
    }
    t.split(',').map(|x| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}"))).collect()
}

// ---------------------------------------------------------------- crystals

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CrystalElemJson {
    name: String,
    wt: Vec<i64>,
    eps: Vec<Value>,
    phi: Vec<Value>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CrystalEdgeJson {
    from: usize,
    i: String,
    to: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CrystalJson {
    schema: u32,
    kind: String,
    datum: DatumJson,
    elements: Vec<CrystalElemJson>,
    /// F̃ edges; Ẽ is their inverse.
    edges: Vec<CrystalEdgeJson>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IElemJson {
    name: String,
    wti: Value,
    beta: Vec<Value>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IEdgeJson {
    from: usize,
    i: String,
    to: usize,
    z: ScalarJson,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ICrystalJson {
    schema: u32,
    kind: String,
    datum: DatumJson,
    elements: Vec<IElemJson>,
    /// Nonzero (B̃_i b, b′) for i ∈ I_τ; the other B̃ are adjoints.
    edges: Vec<IEdgeJson>,
}

/// Indented JSON where any value that fits on one short line stays compact.
pub fn layout(v: &Value) -> String {
    let mut out = String::new();
    layout_into(v, 0, &mut out);
    out.push('\n');
    out
}

fn layout_into(v: &Value, indent: usize, out: &mut String) {
    let compact = serde_json::to_string(v).expect("serializable");
    if compact.len() + indent <= 100 {
        out.push_str(&compact);
        return;
    }
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Array(xs) => {
            out.push('[');
            for (k, x) in xs.iter().enumerate() {
                out.push_str(if k == 0 { "\n" } else { ",\n" });
                out.push_str(&pad);
                layout_into(x, indent + 1, out);
            }
            out.push('\n');
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Value::Object(m) => {
            out.push('{');
            for (k, (key, x)) in m.iter().enumerate() {
                out.push_str(if k == 0 { "\n" } else { ",\n" });
                out.push_str(&pad);
                out.push_str(&serde_json::to_string(key).expect("serializable"));
                out.push_str(": ");
                layout_into(x, indent + 1, out);
            }
            out.push('\n');
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        _ => out.push_str(&compact),
    }
}

fn pretty<T: Serialize>(x: &T) -> String {
    layout(&serde_json::to_value(x).expect("serializable"))
}

pub fn crystal_to_json(c: &CrystalGraph) -> String {
    let d = c.datum_ref();
    let data = c.data();
    let elements = c
        .elements()
        .map(|b| CrystalElemJson {
            name: data.names[b].clone(),
            wt: data.wt[b].0.clone(),
            eps: data.eps[b].iter().map(|x| ext_to_json(*x)).collect(),
            phi: data.phi[b].iter().map(|x| ext_to_json(*x)).collect(),
        })
        .collect();
    let mut edges = Vec::new();
    for b in c.elements() {
        for i in 0..d.rank() {
            if let Some(t) = data.f[b][i] {
                edges.push(CrystalEdgeJson { from: b, i: d.label(i).to_string(), to: t });
            }
        }
    }
    pretty(&CrystalJson { schema: SCHEMA, kind: "crystal".into(), datum: DatumJson::from_datum(d), elements, edges })
}

pub fn crystal_from_json(text: &str) -> FResult<CrystalGraph> {
    let j: CrystalJson = serde_json::from_str(text)?;
    if j.schema != SCHEMA || j.kind != "crystal" {
        return bad(format!("expected a schema {SCHEMA} crystal, got {} {:?}", j.schema, j.kind));
    }
    let d = j.datum.to_datum()?;
    let (n, r) = (j.elements.len(), d.rank());
    let mut data = CrystalData {
        names: vec![],
        wt: vec![],
        eps: vec![],
        phi: vec![],
        e: vec![vec![None; r]; n],
        f: vec![vec![None; r]; n],
    };
    for el in j.elements {
        if el.wt.len() != r || el.eps.len() != r || el.phi.len() != r {
            return bad(format!("element {:?} has rows of the wrong length", el.name));
        }
        data.names.push(el.name);
        data.wt.push(Weight(el.wt));
        data.eps.push(el.eps.iter().map(ext_from_json).collect::<FResult<_>>()?);
        data.phi.push(el.phi.iter().map(ext_from_json).collect::<FResult<_>>()?);
    }
    for ed in j.edges {
        let i = label_index(&d, &ed.i)?;
        if ed.from >= n || ed.to >= n {
            return bad("edge endpoint out of range");
        }
        if data.f[ed.from][i].is_some() || data.e[ed.to][i].is_some() {
            return bad(format!("two {} edges at one element", ed.i));
        }
        data.f[ed.from][i] = Some(ed.to);
        data.e[ed.to][i] = Some(ed.from);
    }
    Ok(CrystalGraph::from_data(d, data)?)
}

pub fn icrystal_to_json(g: &ICrystalGraph) -> String {
    let d = g.datum_ref();
    let data = g.data();
    let elements = g
        .elements()
        .map(|b| IElemJson {
            name: data.names[b].clone(),
            wti: iweight_to_json(&data.wti[b]),
            beta: data.beta[b].iter().map(|x| iext_to_json(*x)).collect(),
        })
        .collect();
    let edges = g
        .graph_edges()
        .into_iter()
        .map(|(b, i, t, z)| IEdgeJson { from: b, i: d.label(i).to_string(), to: t, z: z.into() })
        .collect();
    pretty(&ICrystalJson { schema: SCHEMA, kind: "icrystal".into(), datum: DatumJson::from_datum(d), elements, edges })
}

pub fn icrystal_from_json(text: &str) -> FResult<ICrystalGraph> {
    let j: ICrystalJson = serde_json::from_str(text)?;
    if j.schema != SCHEMA || j.kind != "icrystal" {
        return bad(format!("expected a schema {SCHEMA} icrystal, got {} {:?}", j.schema, j.kind));
    }
    let d = j.datum.to_datum()?;
    let mut names = vec![];
    let mut wti = vec![];
    let mut beta = vec![];
    for el in j.elements {
        if el.beta.len() != d.rank() {
            return bad(format!("element {:?} has a β row of the wrong length", el.name));
        }
        wti.push(iweight_from_json(&d, &el.wti)?);
        beta.push(el.beta.iter().map(iext_from_json).collect::<FResult<_>>()?);
        names.push(el.name);
    }
    let mut edges = vec![];
    for ed in j.edges {
        edges.push((ed.from, label_index(&d, &ed.i)?, ed.to, ed.z.into()));
    }
    Ok(ICrystalGraph::from_graph_edges(d, names, wti, beta, &edges)?)
}

/// Either kind of graph, as read from a file.
#[derive(Debug, Clone)]
pub enum AnyGraph {
    Crystal(CrystalGraph),
    ICrystal(ICrystalGraph),
}

pub fn graph_from_json(text: &str) -> FResult<AnyGraph> {
    let v: Value = serde_json::from_str(text)?;
    match v.get("kind").and_then(Value::as_str) {
        Some("crystal") => Ok(AnyGraph::Crystal(crystal_from_json(text)?)),
        Some("icrystal") => Ok(AnyGraph::ICrystal(icrystal_from_json(text)?)),
        other => bad(format!("unknown graph kind {other:?}")),
    }
}

// ---------------------------------------------------------------- DOT

fn quote(s: &str) -> String {
    let mut out = String::from("\"");
    for ch in s.chars() {
        if ch == '"' || ch == '\\' {
            out.push('\\');
        }
        out.push(ch);
    }
    out.push('"');
    out
}

fn dot_nodes(out: &mut String, names: &[String]) {
    for (b, n) in names.iter().enumerate() {
        let _ = writeln!(out, "  n{b} [label={}];", quote(n));
    }
}

pub fn crystal_to_dot(c: &CrystalGraph) -> String {
    let d = c.datum_ref();
    let mut out = String::from("digraph crystal {\n");
    dot_nodes(&mut out, &c.data().names);
    for b in c.elements() {
        for i in 0..d.rank() {
            if let Some(t) = c.data().f[b][i] {
                let _ = writeln!(out, "  n{b} -> n{t} [label={}];", quote(d.label(i)));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Edge labels are `(i, z)`, or just `i` when z = 1.
pub fn icrystal_to_dot(g: &ICrystalGraph) -> String {
    let d = g.datum_ref();
    let mut out = String::from("digraph icrystal {\n");
    dot_nodes(&mut out, &g.data().names);
    for (b, i, t, z) in g.graph_edges() {
        let label = if z.is_one() { d.label(i).to_string() } else { format!("({}, {})", d.label(i), z.pretty()) };
        let _ = writeln!(out, "  n{b} -> n{t} [label={}];", quote(&label));
    }
    out.push_str("}\n");
    out
}

pub fn render(g: &AnyGraph, f: Format) -> String {
    match (g, f) {
        (AnyGraph::Crystal(c), Format::Json) => crystal_to_json(c),
        (AnyGraph::Crystal(c), Format::Dot) => crystal_to_dot(c),
        (AnyGraph::ICrystal(c), Format::Json) => icrystal_to_json(c),
        (AnyGraph::ICrystal(c), Format::Dot) => icrystal_to_dot(c),
    }
}
