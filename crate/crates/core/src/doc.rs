//! JSON documents naming a Hopf algebra, objects, algebras and filtrations.
//!
//! Scalars are `"p/q"` strings (bare integers are accepted on input).
//! Structure constants are nested arrays: `m[i][j][k]` is the coefficient of
//! `e_k` in `e_i e_j`, `comult[c][k][l]` the coefficient of `e_k (x) e_l` in
//! `Delta(e_c)`. Matrices are lists of rows.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::algebra::AlgObj;
use crate::error::{Error, Result};
use crate::exactla::{format_rational, parse_rational, Matrix, Rational};
use crate::filtration::{FilteredAlg, FilteredObj};
use crate::repcat::{group_algebra, super_hopf, Group, HopfData, Obj, SuperGroup};

pub const FORMAT_VERSION: &str = "1";

pub fn vec_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(format_rational(x))).collect())
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vec_json(m.row(i))).collect())
}

/// A `d^2 x d` matrix whose column `c` lies in `A (x) A`, as `t[c][k][l]`.
pub fn comult_json(comult: &Matrix) -> Value {
    let d = comult.cols();
    Value::Array(
        (0..d)
            .map(|c| {
                let col = comult.column_vec(c);
                Value::Array(col.chunks(d.max(1)).map(vec_json).collect())
            })
            .collect(),
    )
}

/// A `d x d^2` multiplication matrix as `m[i][j][k]`.
pub fn mult_json(m: &Matrix) -> Value {
    let d = m.rows();
    Value::Array(
        (0..d)
            .map(|i| {
                Value::Array(
                    (0..d)
                        .map(|j| vec_json(&m.column_vec(i * d + j)))
                        .collect(),
                )
            })
            .collect(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfSpec {
    /// `"vec"` or `"super"`.
    Builtin(String),
    /// A group algebra, optionally with parity `u` and odd generators.
    Group {
        table: Vec<Vec<usize>>,
        u: Option<usize>,
        w_action: Option<Vec<Matrix>>,
    },
    Explicit(HopfData),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjSpec {
    pub dim: usize,
    /// One matrix per basis element of `H`; `None` means trivial action.
    pub action: Option<Vec<Matrix>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgSpec {
    pub carrier: String,
    /// `d x d^2`.
    pub m: Matrix,
    pub u: Vec<Rational>,
    pub comult: Option<Matrix>,
    pub counit: Option<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltSpec {
    pub algebra: String,
    /// Column-basis matrices, lowest step first.
    pub steps: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub version: String,
    pub hopf: HopfSpec,
    pub objects: BTreeMap<String, ObjSpec>,
    pub algebras: BTreeMap<String, AlgSpec>,
    pub filtrations: BTreeMap<String, FiltSpec>,
}

/// Everything in a document, built but not validated.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub hopf: Arc<HopfData>,
    pub objects: BTreeMap<String, Obj>,
    pub algebras: BTreeMap<String, AlgObj>,
    pub filtrations: BTreeMap<String, FilteredAlg>,
}

fn err(ctx: &str, msg: impl Into<String>) -> Error {
    Error::parse(ctx.to_string(), msg)
}

fn as_object<'a>(v: &'a Value, ctx: &str, allowed: &[&str]) -> Result<&'a Map<String, Value>> {
    let obj = v.as_object().ok_or_else(|| err(ctx, "expected an object"))?;
    if let Some(k) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(err(ctx, format!("unknown field {k:?}")));
    }
    Ok(obj)
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, ctx: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| err(ctx, format!("missing field {key:?}")))
}

fn as_array<'a>(v: &'a Value, ctx: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(ctx, "expected an array"))
}

fn parse_usize(v: &Value, ctx: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| err(ctx, "expected a non-negative integer"))
}

fn parse_scalar(v: &Value, ctx: &str) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| match e {
            Error::Parse { message, .. } => err(ctx, format!("{s:?}: {message}")),
            other => other,
        }),
        Value::Number(n) => n
            .as_i64()
            .map(|x| Rational::from_integer(x.into()))
            .ok_or_else(|| err(ctx, "numbers must be integers; write fractions as \"p/q\"")),
        _ => Err(err(ctx, "expected a scalar")),
    }
}

fn parse_vec(v: &Value, ctx: &str) -> Result<Vec<Rational>> {
    as_array(v, ctx)?
        .iter()
        .enumerate()
        .map(|(i, x)| parse_scalar(x, &format!("{ctx}[{i}]")))
        .collect()
}

/// A list of rows. An empty list is a matrix with no rows.
fn parse_matrix(v: &Value, ctx: &str) -> Result<Matrix> {
    let rows = as_array(v, ctx)?
        .iter()
        .enumerate()
        .map(|(i, r)| parse_vec(r, &format!("{ctx}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    if let Some(i) = rows.iter().position(|r| r.len() != cols) {
        return Err(err(&format!("{ctx}[{i}]"), format!("row length differs from {cols}")));
    }
    Matrix::from_rows(rows, cols).map_err(|e| err(ctx, e.to_string()))
}

fn parse_rank3(v: &Value, ctx: &str, n: usize) -> Result<Vec<Vec<Vec<Rational>>>> {
    let outer = as_array(v, ctx)?;
    if outer.len() != n {
        return Err(err(ctx, format!("expected {n} entries, found {}", outer.len())));
    }
    outer
        .iter()
        .enumerate()
        .map(|(i, mid)| {
            let c = format!("{ctx}[{i}]");
            let mid = as_array(mid, &c)?;
            if mid.len() != n {
                return Err(err(&c, format!("expected {n} entries, found {}", mid.len())));
            }
            mid.iter()
                .enumerate()
                .map(|(j, inner)| {
                    let c = format!("{ctx}[{i}][{j}]");
                    let row = parse_vec(inner, &c)?;
                    if row.len() != n {
                        return Err(err(&c, format!("expected {n} entries, found {}", row.len())));
                    }
                    Ok(row)
                })
                .collect()
        })
        .collect()
}

fn expect_len(v: &[Rational], n: usize, ctx: &str) -> Result<()> {
    if v.len() != n {
        return Err(err(ctx, format!("expected {n} entries, found {}", v.len())));
    }
    Ok(())
}

fn expect_shape(m: &Matrix, shape: (usize, usize), ctx: &str) -> Result<()> {
    if m.shape() != shape {
        return Err(err(
            ctx,
            format!("expected a {} x {} matrix, found {} x {}", shape.0, shape.1, m.rows(), m.cols()),
        ));
    }
    Ok(())
}

/// `t[i][j][k]` (coefficient of `e_k` in `e_i e_j`) as a `n x n^2` matrix.
fn mult_from_rank3(t: &[Vec<Vec<Rational>>], n: usize) -> Matrix {
    Matrix::from_fn(n, n * n, |k, c| t[c / n][c % n][k].clone())
}

/// `t[c][k][l]` as the `n^2 x n` matrix with column `c` equal to `Delta(e_c)`.
fn comult_from_rank3(t: &[Vec<Vec<Rational>>], n: usize) -> Matrix {
    Matrix::from_fn(n * n, n, |r, c| t[c][r / n][r % n].clone())
}

fn parse_hopf(v: &Value) -> Result<HopfSpec> {
    let ctx = "hopf";
    if let Some(s) = v.as_str() {
        return match s {
            "vec" | "super" => Ok(HopfSpec::Builtin(s.to_string())),
            _ => Err(err(ctx, format!("unknown built-in {s:?}; expected \"vec\" or \"super\""))),
        };
    }
    let obj = v.as_object().ok_or_else(|| err(ctx, "expected a name or an object"))?;
    if obj.contains_key("group") {
        let obj = as_object(v, ctx, &["group", "u", "w_action"])?;
        let rows = as_array(field(obj, "group", ctx)?, "hopf.group")?;
        let table = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let c = format!("hopf.group[{i}]");
                as_array(r, &c)?
                    .iter()
                    .enumerate()
                    .map(|(j, x)| parse_usize(x, &format!("{c}[{j}]")))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let u = obj.get("u").map(|x| parse_usize(x, "hopf.u")).transpose()?;
        let w_action = obj
            .get("w_action")
            .map(|x| {
                as_array(x, "hopf.w_action")?
                    .iter()
                    .enumerate()
                    .map(|(g, m)| parse_matrix(m, &format!("hopf.w_action[{g}]")))
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        return Ok(HopfSpec::Group { table, u, w_action });
    }
    let obj = as_object(
        v,
        ctx,
        &["dim", "mult", "unit", "comult", "counit", "antipode", "rmatrix"],
    )?;
    let n = parse_usize(field(obj, "dim", ctx)?, "hopf.dim")?;
    if n == 0 {
        return Err(err("hopf.dim", "must be positive"));
    }
    let mult = mult_from_rank3(&parse_rank3(field(obj, "mult", ctx)?, "hopf.mult", n)?, n);
    let unit = parse_vec(field(obj, "unit", ctx)?, "hopf.unit")?;
    expect_len(&unit, n, "hopf.unit")?;
    let comult = comult_from_rank3(&parse_rank3(field(obj, "comult", ctx)?, "hopf.comult", n)?, n);
    let counit = parse_vec(field(obj, "counit", ctx)?, "hopf.counit")?;
    expect_len(&counit, n, "hopf.counit")?;
    let antipode = parse_matrix(field(obj, "antipode", ctx)?, "hopf.antipode")?;
    expect_shape(&antipode, (n, n), "hopf.antipode")?;
    let r = parse_matrix(field(obj, "rmatrix", ctx)?, "hopf.rmatrix")?;
    expect_shape(&r, (n, n), "hopf.rmatrix")?;
    let data = HopfData::new(mult, unit, comult, counit, antipode, r.entries().to_vec())
        .map_err(|e| err(ctx, e.to_string()))?;
    Ok(HopfSpec::Explicit(data))
}

fn hopf_json(h: &HopfSpec) -> Value {
    match h {
        HopfSpec::Builtin(s) => json!(s),
        HopfSpec::Group { table, u, w_action } => {
            let mut obj = Map::new();
            obj.insert("group".into(), json!(table));
            if let Some(u) = u {
                obj.insert("u".into(), json!(u));
            }
            if let Some(w) = w_action {
                obj.insert("w_action".into(), Value::Array(w.iter().map(matrix_json).collect()));
            }
            Value::Object(obj)
        }
        HopfSpec::Explicit(d) => {
            let n = d.dim();
            let r = Matrix::from_vec(n, n, d.rmatrix().to_vec()).expect("rmatrix has n^2 entries");
            json!({
                "dim": n,
                "mult": mult_json(d.mult()),
                "unit": vec_json(d.unit()),
                "comult": comult_json(d.comult()),
                "counit": vec_json(d.counit()),
                "antipode": matrix_json(d.antipode()),
                "rmatrix": matrix_json(&r),
            })
        }
    }
}

impl HopfSpec {
    pub fn build(&self) -> Result<Arc<HopfData>> {
        match self {
            HopfSpec::Builtin(s) if s == "vec" => Ok(group_algebra(&Group::trivial())),
            HopfSpec::Builtin(s) if s == "super" => Ok(super_hopf()),
            HopfSpec::Builtin(s) => Err(err("hopf", format!("unknown built-in {s:?}"))),
            HopfSpec::Group { table, u, w_action } => {
                let g = Group::from_table(table.clone()).map_err(|e| err("hopf.group", e.to_string()))?;
                let sg = match (u, w_action) {
                    (None, None) => SuperGroup::plain(&g),
                    (Some(u), None) => SuperGroup::with_parity(&g, *u).map_err(|e| err("hopf.u", e.to_string()))?,
                    (Some(u), Some(w)) => {
                        SuperGroup::new(g, *u, w.clone()).map_err(|e| err("hopf.w_action", e.to_string()))?
                    }
                    (None, Some(_)) => return Err(err("hopf", "\"w_action\" requires \"u\"")),
                };
                Ok(sg.hopf().clone())
            }
            HopfSpec::Explicit(d) => Ok(Arc::new(d.clone())),
        }
    }
}

impl Document {
    pub fn parse(text: &str) -> Result<Document> {
        let v: Value = serde_json::from_str(text).map_err(|e| {
            Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string())
        })?;
        Self::from_json(&v)
    }

    pub fn from_json(v: &Value) -> Result<Document> {
        let top = as_object(
            v,
            "document",
            &["format-version", "hopf", "objects", "algebras", "filtrations"],
        )?;
        let version = field(top, "format-version", "document")?
            .as_str()
            .ok_or_else(|| err("format-version", "expected a string"))?
            .to_string();
        if version != FORMAT_VERSION {
            return Err(err("format-version", format!("unsupported version {version:?}")));
        }
        let hopf = parse_hopf(field(top, "hopf", "document")?)?;
        let n = hopf.build()?.dim();
        let section = |key: &str| -> Result<Vec<(String, Value)>> {
            match top.get(key) {
                None => Ok(Vec::new()),
                Some(s) => Ok(s
                    .as_object()
                    .ok_or_else(|| err(key, "expected an object of named entries"))?
                    .iter()
                    .map(|(k, v)| (k.clone(), v.clone()))
                    .collect()),
            }
        };

        let mut objects = BTreeMap::new();
        for (name, v) in section("objects")? {
            let ctx = format!("objects.{name}");
            let obj = as_object(&v, &ctx, &["dim", "action"])?;
            let dim = parse_usize(field(obj, "dim", &ctx)?, &format!("{ctx}.dim"))?;
            let action = obj
                .get("action")
                .map(|a| {
                    let c = format!("{ctx}.action");
                    let list = as_array(a, &c)?;
                    if list.len() != n {
                        return Err(err(&c, format!("expected {n} matrices, one per Hopf basis element")));
                    }
                    list.iter()
                        .enumerate()
                        .map(|(h, m)| {
                            let c = format!("{c}[{h}]");
                            let m = parse_matrix(m, &c)?;
                            expect_shape(&m, (dim, dim), &c)?;
                            Ok(if dim == 0 { Matrix::zeros(0, 0) } else { m })
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .transpose()?;
            objects.insert(name, ObjSpec { dim, action });
        }

        let mut algebras = BTreeMap::new();
        for (name, v) in section("algebras")? {
            let ctx = format!("algebras.{name}");
            let obj = as_object(&v, &ctx, &["carrier", "m", "u", "comult", "counit"])?;
            let carrier = field(obj, "carrier", &ctx)?
                .as_str()
                .ok_or_else(|| err(&format!("{ctx}.carrier"), "expected an object name"))?
                .to_string();
            let d = objects
                .get(&carrier)
                .ok_or_else(|| err(&format!("{ctx}.carrier"), format!("unknown object {carrier:?}")))?
                .dim;
            let m = mult_from_rank3(&parse_rank3(field(obj, "m", &ctx)?, &format!("{ctx}.m"), d)?, d);
            let u = parse_vec(field(obj, "u", &ctx)?, &format!("{ctx}.u"))?;
            expect_len(&u, d, &format!("{ctx}.u"))?;
            let comult = obj
                .get("comult")
                .map(|c| parse_rank3(c, &format!("{ctx}.comult"), d).map(|t| comult_from_rank3(&t, d)))
                .transpose()?;
            let counit = obj
                .get("counit")
                .map(|c| parse_vec(c, &format!("{ctx}.counit")))
                .transpose()?;
            if let Some(c) = &counit {
                expect_len(c, d, &format!("{ctx}.counit"))?;
            }
            if comult.is_some() != counit.is_some() {
                return Err(err(&ctx, "\"comult\" and \"counit\" must be given together"));
            }
            algebras.insert(
                name,
                AlgSpec {
                    carrier,
                    m,
                    u,
                    comult,
                    counit,
                },
            );
        }

        let mut filtrations = BTreeMap::new();
        for (name, v) in section("filtrations")? {
            let ctx = format!("filtrations.{name}");
            let obj = as_object(&v, &ctx, &["algebra", "steps"])?;
            let algebra = field(obj, "algebra", &ctx)?
                .as_str()
                .ok_or_else(|| err(&format!("{ctx}.algebra"), "expected an algebra name"))?
                .to_string();
            let a = algebras
                .get(&algebra)
                .ok_or_else(|| err(&format!("{ctx}.algebra"), format!("unknown algebra {algebra:?}")))?;
            let d = a.u.len();
            let steps = as_array(field(obj, "steps", &ctx)?, &format!("{ctx}.steps"))?
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    let c = format!("{ctx}.steps[{i}]");
                    let m = parse_matrix(s, &c)?;
                    if m.rows() == 0 {
                        return Ok(Matrix::zeros(d, 0));
                    }
                    if m.rows() != d {
                        return Err(err(&c, format!("expected {d} rows, found {}", m.rows())));
                    }
                    Ok(m)
                })
                .collect::<Result<Vec<_>>>()?;
            if steps.is_empty() {
                return Err(err(&format!("{ctx}.steps"), "at least one step is required"));
            }
            filtrations.insert(name, FiltSpec { algebra, steps });
        }

        let doc = Document {
            version,
            hopf,
            objects,
            algebras,
            filtrations,
        };
        doc.load()?;
        Ok(doc)
    }

    /// Builds every named entity. Axioms are not checked; see `validate`.
    pub fn load(&self) -> Result<Loaded> {
        let hopf = self.hopf.build()?;
        let mut objects = BTreeMap::new();
        for (name, spec) in &self.objects {
            let blocks = match &spec.action {
                Some(b) => b.clone(),
                None => Obj::trivial(&hopf, spec.dim).blocks().to_vec(),
            };
            let o = Obj::from_blocks_unchecked(hopf.clone(), blocks)
                .map_err(|e| err(&format!("objects.{name}"), e.to_string()))?;
            objects.insert(name.clone(), o);
        }
        let mut algebras = BTreeMap::new();
        for (name, spec) in &self.algebras {
            let ctx = format!("algebras.{name}");
            let carrier = objects
                .get(&spec.carrier)
                .ok_or_else(|| err(&ctx, format!("unknown object {:?}", spec.carrier)))?
                .clone();
            let mut a = AlgObj::new(carrier, spec.m.clone(), spec.u.clone()).map_err(|e| err(&ctx, e.to_string()))?;
            if let (Some(c), Some(e)) = (&spec.comult, &spec.counit) {
                a = a.with_coalgebra(c.clone(), e.clone()).map_err(|e| err(&ctx, e.to_string()))?;
            }
            algebras.insert(name.clone(), a);
        }
        let mut filtrations = BTreeMap::new();
        for (name, spec) in &self.filtrations {
            let ctx = format!("filtrations.{name}");
            let a = algebras
                .get(&spec.algebra)
                .ok_or_else(|| err(&ctx, format!("unknown algebra {:?}", spec.algebra)))?
                .clone();
            let f = FilteredObj::new(a.carrier().clone(), &spec.steps).map_err(|e| err(&ctx, e.to_string()))?;
            let fa = FilteredAlg::new(a, f).map_err(|e| err(&ctx, e.to_string()))?;
            filtrations.insert(name.clone(), fa);
        }
        Ok(Loaded {
            hopf,
            objects,
            algebras,
            filtrations,
        })
    }

    pub fn to_json(&self) -> Value {
        let mut top = Map::new();
        top.insert("format-version".into(), json!(self.version));
        top.insert("hopf".into(), hopf_json(&self.hopf));
        let objects: Map<String, Value> = self
            .objects
            .iter()
            .map(|(k, o)| {
                let mut m = Map::new();
                m.insert("dim".into(), json!(o.dim));
                if let Some(a) = &o.action {
                    m.insert("action".into(), Value::Array(a.iter().map(matrix_json).collect()));
                }
                (k.clone(), Value::Object(m))
            })
            .collect();
        top.insert("objects".into(), Value::Object(objects));
        let algebras: Map<String, Value> = self
            .algebras
            .iter()
            .map(|(k, a)| {
                let mut m = Map::new();
                m.insert("carrier".into(), json!(a.carrier));
                m.insert("m".into(), mult_json(&a.m));
                m.insert("u".into(), vec_json(&a.u));
                if let (Some(c), Some(e)) = (&a.comult, &a.counit) {
                    m.insert("comult".into(), comult_json(c));
                    m.insert("counit".into(), vec_json(e));
                }
                (k.clone(), Value::Object(m))
            })
            .collect();
        top.insert("algebras".into(), Value::Object(algebras));
        let filtrations: Map<String, Value> = self
            .filtrations
            .iter()
            .map(|(k, f)| {
                let steps = f.steps.iter().map(matrix_json).collect();
                (k.clone(), json!({ "algebra": f.algebra, "steps": Value::Array(steps) }))
            })
            .collect();
        top.insert("filtrations".into(), Value::Object(filtrations));
        Value::Object(top)
    }

    pub fn to_string_pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("values serialize");
        s.push('\n');
        s
    }

    /// A self-contained document for one algebra, with an explicit Hopf
    /// section. The carrier is named `"carrier"`, the filtration `"<name>"`.
    pub fn from_algebra(name: &str, a: &AlgObj, filtered: Option<&FilteredObj>) -> Document {
        let hopf = HopfSpec::Explicit((**a.carrier().hopf()).clone());
        let mut objects = BTreeMap::new();
        objects.insert(
            "carrier".to_string(),
            ObjSpec {
                dim: a.dim(),
                action: Some(a.carrier().blocks().to_vec()),
            },
        );
        let mut algebras = BTreeMap::new();
        algebras.insert(
            name.to_string(),
            AlgSpec {
                carrier: "carrier".into(),
                m: a.mult().clone(),
                u: a.unit().to_vec(),
                comult: a.coalgebra().map(|c| c.comult.clone()),
                counit: a.coalgebra().map(|c| c.counit.clone()),
            },
        );
        let mut filtrations = BTreeMap::new();
        if let Some(f) = filtered {
            let steps = (0..=f.top_index()).map(|i| f.step_basis(i)).collect();
            filtrations.insert(
                name.to_string(),
                FiltSpec {
                    algebra: name.to_string(),
                    steps,
                },
            );
        }
        Document {
            version: FORMAT_VERSION.into(),
            hopf,
            objects,
            algebras,
            filtrations,
        }
    }
}

/// The canonical form of a document: parse, then serialize.
pub fn normalize(v: &Value) -> Result<Value> {
    Ok(Document::from_json(v)?.to_json())
}
