//! Exterior-algebra bookkeeping on bitmask monomials `w_S = w_{s1} ... w_{sk}`
//! with `s1 < ... < sk`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::exactla::{Matrix, Rational};

pub(crate) type WedgeElem = BTreeMap<u32, Rational>;

/// Sign of `w_a w_b` rewritten as `+- w_{a|b}`, or `None` when they overlap.
pub(crate) fn wedge_sign(a: u32, b: u32) -> Option<i64> {
    if a & b != 0 {
        return None;
    }
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        // bits of `a` strictly above j must move past w_j
        inversions += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

pub(crate) fn wedge_mul(x: &WedgeElem, y: &WedgeElem) -> WedgeElem {
    let mut out = WedgeElem::new();
    for (&a, ca) in x {
        for (&b, cb) in y {
            if let Some(s) = wedge_sign(a, b) {
                let c = ca * cb * Rational::from_integer(s.into());
                add_to(&mut out, a | b, c);
            }
        }
    }
    out
}

pub(crate) fn add_to(e: &mut WedgeElem, mask: u32, c: Rational) {
    if c.is_zero() {
        return;
    }
    let v = e.entry(mask).or_insert_with(Rational::zero);
    *v += c;
    if v.is_zero() {
        e.remove(&mask);
    }
}

pub(crate) fn monomial(mask: u32) -> WedgeElem {
    WedgeElem::from([(mask, Rational::one())])
}

/// `Lambda(f)` applied to the monomial `w_S`, for a linear map `f` on the
/// generators given by its matrix (column `j` is `f(w_j)`).
pub(crate) fn wedge_apply(f: &Matrix, mask: u32) -> WedgeElem {
    let mut acc = monomial(0);
    let mut rest = mask;
    while rest != 0 {
        let j = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let mut image = WedgeElem::new();
        for i in 0..f.rows() {
            add_to(&mut image, 1 << i, f.get(i, j).clone());
        }
        acc = wedge_mul(&acc, &image);
    }
    acc
}

/// Masks on `n` generators ordered by degree, then lexicographically by
/// their sorted index lists.
pub fn exterior_basis(n: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (0..(1u32 << n)).collect();
    masks.sort_by_key(|&m| {
        let idx: Vec<u32> = (0..n as u32).filter(|i| m & (1 << i) != 0).collect();
        (m.count_ones(), idx)
    });
    masks
}
