#![allow(dead_code)]

use std::sync::Arc;

use frobcat::algebra::{end_algebra, tensor_algebra_of, AlgObj};
use frobcat::constructions::{builtin, builtin_corpus, clifford_algebra, exterior_algebra, odd_space, BilinearFormData};
use frobcat::exactla::{q, Matrix, Rational};
use frobcat::filtration::{FilteredAlg, FilteredObj, GradedAlg};
use frobcat::repcat::{group_algebra, super_hopf, Group, HopfData, Obj, SuperGroup};
use proptest::prelude::*;

pub fn vec_h() -> Arc<HopfData> {
    group_algebra(&Group::trivial())
}

pub fn z2() -> Arc<HopfData> {
    group_algebra(&Group::cyclic(2))
}

pub fn z3() -> Arc<HopfData> {
    group_algebra(&Group::cyclic(3))
}

/// `Lambda(k) # kZ/2` with the odd line on which `u` acts by `-1`.
pub fn odd_smash() -> SuperGroup {
    SuperGroup::new(Group::cyclic(2), 1, vec![Matrix::identity(1), Matrix::from_ints(&[&[-1]])]).unwrap()
}

fn sign(h: &Arc<HopfData>) -> Obj {
    Obj::from_blocks(h.clone(), vec![Matrix::identity(1), Matrix::from_ints(&[&[-1]])]).unwrap()
}

/// Irreducible-ish building blocks of each test category.
pub fn categories() -> Vec<(&'static str, Arc<HopfData>, Vec<Obj>)> {
    let v = vec_h();
    let z2h = z2();
    let z3h = z3();
    let rot = Matrix::from_ints(&[&[0, -1], &[1, -1]]);
    let z3_two = Obj::from_blocks(z3h.clone(), vec![Matrix::identity(2), rot.clone(), &rot * &rot]).unwrap();
    let sh = super_hopf();
    let sm = odd_smash();
    let smh = sm.hopf().clone();
    // basis (1, e), (1, u), (w, e), (w, u)
    let line = |s: i64| {
        Obj::from_blocks(
            smh.clone(),
            vec![Matrix::identity(1), Matrix::from_ints(&[&[s]]), Matrix::zeros(1, 1), Matrix::zeros(1, 1)],
        )
        .unwrap()
    };
    // free module on an even vector v: (v, w v)
    let w = Matrix::from_ints(&[&[0, 0], &[1, 0]]);
    let u = Matrix::from_ints(&[&[1, 0], &[0, -1]]);
    let free = Obj::from_blocks(smh.clone(), vec![Matrix::identity(2), u.clone(), w.clone(), &w * &u]).unwrap();
    vec![
        ("vec", v.clone(), vec![Obj::trivial(&v, 1)]),
        ("kZ2", z2h.clone(), vec![Obj::trivial(&z2h, 1), sign(&z2h)]),
        ("kZ3", z3h.clone(), vec![Obj::trivial(&z3h, 1), z3_two]),
        ("super", sh.clone(), vec![Obj::trivial(&sh, 1), sign(&sh)]),
        ("smash", smh.clone(), vec![line(1), line(-1), free]),
    ]
}

/// Direct sum of the chosen building blocks of category `cat`.
pub fn object(cat: usize, picks: &[usize]) -> Obj {
    let cats = categories();
    let (_, h, blocks) = &cats[cat % cats.len()];
    let parts: Vec<Obj> = picks.iter().map(|&p| blocks[p % blocks.len()].clone()).collect();
    if parts.is_empty() {
        return Obj::zero(h);
    }
    Obj::direct_sum(&parts).unwrap()
}

pub fn combo(basis: &[Matrix], coeffs: &[i64], rows: usize, cols: usize) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for (b, &c) in basis.iter().zip(coeffs.iter().cycle()) {
        m = &m + &b.scale(&q(c));
    }
    m
}

pub fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(-3i64..=3, r * c)
            .prop_map(move |v| Matrix::from_vec(r, c, v.into_iter().map(q).collect()).unwrap())
    })
}

pub fn matrix_of(r: usize, c: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, r * c)
        .prop_map(move |v| Matrix::from_vec(r, c, v.into_iter().map(q).collect()).unwrap())
}

/// `k[x]/(x^n - c)` on `1, x, ..., x^{n-1}`.
pub fn poly_mod(n: usize, c: &Rational) -> AlgObj {
    let m = Matrix::from_fn(n, n * n, |k, col| {
        let s = col / n + col % n;
        if s == k {
            q(1)
        } else if s == k + n {
            c.clone()
        } else {
            q(0)
        }
    });
    let mut u = vec![q(0); n];
    u[0] = q(1);
    AlgObj::new(Obj::trivial(&vec_h(), n), m, u).unwrap()
}

pub fn monomial(a: AlgObj) -> FilteredAlg {
    let n = a.dim();
    let f = FilteredObj::by_degree(a.carrier(), &(0..n).collect::<Vec<_>>()).unwrap();
    FilteredAlg::new(a, f).unwrap()
}

/// A filtration of a trivial `d`-dimensional object by prefixes of the
/// columns of an invertible matrix, with the given step dimensions.
pub fn flag(x: &Obj, basis: &Matrix, step_dims: &[usize]) -> FilteredObj {
    let steps: Vec<Matrix> = step_dims
        .iter()
        .map(|&k| basis.select_cols(&(0..k).collect::<Vec<_>>()))
        .collect();
    FilteredObj::new(x.clone(), &steps).unwrap()
}

/// A unimodular upper triangular matrix times a permutation; always invertible.
pub fn invertible(d: usize, entries: &[i64], shift: usize) -> Matrix {
    let mut it = entries.iter().cycle();
    let upper = Matrix::from_fn(d, d, |i, j| {
        if i == j {
            q(1)
        } else if i < j {
            q(*it.next().unwrap())
        } else {
            q(0)
        }
    });
    let perm: Vec<usize> = (0..d).map(|i| (i + shift) % d).collect();
    &upper * &Matrix::permutation(&perm)
}

/// Nondecreasing step dimensions ending at `d`, from arbitrary seeds.
pub fn step_dims(d: usize, seeds: &[usize]) -> Vec<usize> {
    let mut dims: Vec<usize> = seeds.iter().map(|s| s % (d + 1)).collect();
    dims.sort_unstable();
    dims.push(d);
    dims
}

/// Masks ordered by length, then by index list.
pub fn masks(n: usize) -> Vec<u32> {
    let mut v: Vec<u32> = (0..1u32 << n).collect();
    v.sort_by_key(|&m| (m.count_ones(), (0..n).filter(|i| m & (1 << i) != 0).collect::<Vec<_>>()));
    v
}

/// `Lambda(k^n)` written out directly: `x_S x_T = (-1)^{inv(S,T)} x_{S+T}`.
pub fn wedge_oracle(n: usize) -> GradedAlg {
    let basis = masks(n);
    let d = basis.len();
    let pos = |m: u32| basis.iter().position(|&b| b == m).unwrap();
    let mut dims = vec![0; n + 1];
    for s in &basis {
        dims[s.count_ones() as usize] += 1;
    }
    let carrier = Obj::trivial(&vec_h(), d);
    let mut u = vec![q(0); d];
    u[0] = q(1);
    let mut m = Matrix::zeros(d, d * d);
    for (a, &s) in basis.iter().enumerate() {
        for (b, &t) in basis.iter().enumerate() {
            if s & t != 0 {
                continue;
            }
            // each x_j of T passes the x_i of S with i > j
            let inv: u32 = (0..n).filter(|&j| t & (1 << j) != 0).map(|j| (s >> (j + 1)).count_ones()).sum();
            m.set(pos(s | t), a * d + b, q(if inv.is_multiple_of(2) { 1 } else { -1 }));
        }
    }
    GradedAlg::new(AlgObj::new(carrier, m, u).unwrap(), dims).unwrap()
}

pub fn odd_clifford_line() -> AlgObj {
    let sg = odd_smash();
    let w = odd_space(&sg).unwrap();
    let b = BilinearFormData::new(w.clone(), Matrix::identity(1)).unwrap();
    clifford_algebra(&w, &b).unwrap().filtered.algebra().clone()
}

pub fn swap_exterior() -> AlgObj {
    let h = group_algebra(&Group::cyclic(2));
    let w = Obj::from_blocks(h, vec![Matrix::identity(2), Matrix::from_ints(&[&[0, 1], &[1, 0]])]).unwrap();
    exterior_algebra(&w).unwrap().graded.to_algebra().clone()
}

pub fn regular_z2_end() -> AlgObj {
    let h = group_algebra(&Group::cyclic(2));
    let v = Obj::from_blocks(h, vec![Matrix::identity(2), Matrix::from_ints(&[&[0, 1], &[1, 0]])]).unwrap();
    end_algebra(&v).unwrap()
}

/// Algebras of dimension at most 8 across several ambient categories.
pub fn frobenius_corpus() -> Vec<(String, AlgObj)> {
    let mut out: Vec<(String, AlgObj)> = builtin_corpus()
        .into_iter()
        .map(|n| (n.to_string(), builtin(n).unwrap().algebra))
        .filter(|(_, a)| a.dim() <= 8)
        .collect();
    out.push(("k[x]/(x^2-1) (x) k[x]/(x^2)".into(), tensor_algebra_of(&poly_mod(2, &q(1)), &poly_mod(2, &q(0))).unwrap()));
    out.push(("k[x]/(x^4)".into(), poly_mod(4, &q(0))));
    out.push(("Cl(odd line)".into(), odd_clifford_line()));
    out.push(("Lambda(k^2, swap)".into(), swap_exterior()));
    out.push(("End(kZ/2)".into(), regular_z2_end()));
    out
}

pub fn combine_rows(rows: &Matrix, coeffs: &[i64]) -> Vec<Rational> {
    let d = rows.cols();
    let mut nu = vec![q(0); d];
    for r in 0..rows.rows() {
        let c = q(coeffs[r % coeffs.len()]);
        for (j, x) in rows.row(r).iter().enumerate() {
            nu[j] += &c * x;
        }
    }
    nu
}
