//! Frobenius certificates and their JSON form.

use serde_json::{json, Map, Value};

use crate::doc::{comult_json, matrix_json, vec_json};
use crate::exactla::{format_rational, Matrix, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Frobenius,
    NotFrobenius,
    /// Randomized search found no nondegenerate point but the failure bound
    /// is too weak to refute.
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Frobenius => "frobenius",
            Verdict::NotFrobenius => "not-frobenius",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    ExactSymbolic,
    Randomized,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::ExactSymbolic => "exact-symbolic",
            Mode::Randomized => "randomized",
        }
    }
}

/// A Frobenius form and everything extracted from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub nu: Vec<Rational>,
    /// `gram[a][b] = nu(e_a e_b)`.
    pub gram: Matrix,
    /// Copairing in `A (x) A`, coefficient of `e_a (x) e_b` at `a*d + b`.
    pub q: Vec<Rational>,
    /// `(m (x) id)(id (x) q)`, a `d^2 x d` matrix.
    pub comult: Matrix,
    pub counit: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    /// `Hom(A, 1) = 0`.
    NoInvariantFunctionals,
    /// The Gram determinant as a polynomial in the coordinates of `nu`.
    SymbolicDeterminant { polynomial: String, variables: usize },
    Sampled {
        samples: usize,
        max_height: u64,
        /// Upper bound on the probability that a nonzero determinant
        /// vanished at every sample.
        failure_bound: Rational,
        note: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusCertificate {
    pub verdict: Verdict,
    pub mode: Mode,
    pub witness: Option<Witness>,
    pub refutation: Option<Refutation>,
}

impl FrobeniusCertificate {
    pub fn is_frobenius(&self) -> bool {
        self.verdict == Verdict::Frobenius
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("verdict".into(), json!(self.verdict.as_str()));
        obj.insert("mode".into(), json!(self.mode.as_str()));
        let w = self.witness.as_ref();
        obj.insert("nu".into(), w.map_or(Value::Null, |w| vec_json(&w.nu)));
        obj.insert("gram".into(), w.map_or(Value::Null, |w| matrix_json(&w.gram)));
        obj.insert("q".into(), w.map_or(Value::Null, |w| vec_json(&w.q)));
        obj.insert(
            "comult".into(),
            w.map_or(Value::Null, |w| comult_json(&w.comult)),
        );
        obj.insert("counit".into(), w.map_or(Value::Null, |w| vec_json(&w.counit)));
        obj.insert(
            "refutation".into(),
            self.refutation.as_ref().map_or(Value::Null, refutation_json),
        );
        Value::Object(obj)
    }
}

fn refutation_json(r: &Refutation) -> Value {
    match r {
        Refutation::NoInvariantFunctionals => json!({ "kind": "no-invariant-functionals" }),
        Refutation::SymbolicDeterminant { polynomial, variables } => json!({
            "kind": "symbolic-determinant",
            "determinant": polynomial,
            "variables": variables,
        }),
        Refutation::Sampled {
            samples,
            max_height,
            failure_bound,
            note,
        } => json!({
            "kind": "randomized",
            "samples": samples,
            "max_height": max_height,
            "failure_bound": format_rational(failure_bound),
            "note": note,
        }),
    }
}

