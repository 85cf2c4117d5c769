//! Sparse multivariate polynomials with rational coefficients and the
//! symbolic determinant of a linear matrix pencil.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Default size limit for [`symbolic_det`].
pub const DEFAULT_SYMBOLIC_DET_LIMIT: usize = 6;

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(exp, c)| {
                let mono: Vec<String> = exp
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("t{}", i + 1)
                        } else {
                            format!("t{}^{}", i + 1, e)
                        }
                    })
                    .collect();
                if mono.is_empty() {
                    format_rational(c)
                } else if c.is_one() {
                    mono.join("*")
                } else {
                    format!("{}*{}", format_rational(c), mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `t_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exp = vec![0; nvars];
        exp[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(exp, Rational::one());
        p
    }

    /// `sum_k coeffs[k] * t_k`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut exp = vec![0; n];
            exp[i] = 1;
            p.add_term(exp, c.clone());
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn add_term(&mut self, exp: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> MultiPoly {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "evaluation point dimension");
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }
}

/// `det(sum_k t_k * pencil[k])` as a polynomial in `t_1..t_d`, by Laplace
/// expansion along rows with minors memoized by their column set.
///
/// Refuses matrices larger than `limit`.
pub fn symbolic_det(pencil: &[Matrix], limit: usize) -> Result<MultiPoly> {
    let d = pencil.len();
    if d == 0 {
        return Err(Error::Shape("empty pencil".into()));
    }
    let n = pencil[0].rows();
    if pencil.iter().any(|g| g.shape() != (n, n)) {
        return Err(Error::Shape("pencil matrices must share one square shape".into()));
    }
    if n > limit {
        return Err(Error::Capacity {
            what: "pencil size",
            size: n,
            limit,
        });
    }
    if n > 63 {
        return Err(Error::Capacity {
            what: "pencil size",
            size: n,
            limit: 63,
        });
    }
    let entries: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let coeffs: Vec<Rational> = pencil.iter().map(|g| g.get(i, j).clone()).collect();
                    MultiPoly::linear(&coeffs)
                })
                .collect()
        })
        .collect();
    let mut memo: HashMap<u64, MultiPoly> = HashMap::new();
    Ok(minor(&entries, 0, (1u64 << n) - 1, d, &mut memo))
}

/// Determinant of rows `row..n` restricted to the columns in `cols`.
fn minor(
    entries: &[Vec<MultiPoly>],
    row: usize,
    cols: u64,
    nvars: usize,
    memo: &mut HashMap<u64, MultiPoly>,
) -> MultiPoly {
    if cols == 0 {
        return MultiPoly::constant(nvars, Rational::one());
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut acc = MultiPoly::zero(nvars);
    let mut sign = Rational::one();
    for j in 0..entries.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        let e = &entries[row][j];
        if !e.is_zero() {
            let sub = minor(entries, row + 1, cols & !(1 << j), nvars, memo);
            acc = acc.add(&e.mul(&sub).scale(&sign));
        }
        sign = -sign;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Numeric determinant of the pencil at a point.
pub fn pencil_at(pencil: &[Matrix], point: &[Rational]) -> Matrix {
    let (r, c) = pencil[0].shape();
    let mut m = Matrix::zeros(r, c);
    for (g, t) in pencil.iter().zip(point) {
        if !t.is_zero() {
            m = &m + &g.scale(t);
        }
    }
    m
}
