//! Exterior and Clifford algebras on a basis of `W`, with the action of `H`
//! extended from `W` through the iterated comultiplication.

use num_traits::{One, Zero};

use crate::algebra::{check_algebra, AlgObj};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Rational};
use crate::filtration::{gr, is_graded_iso, FilteredAlg, FilteredObj, GradedAlg};
use crate::frobenius::{certify_with_form, frobenius_detect, DetectOptions, FrobeniusCertificate, Mode};
use crate::repcat::wedge::{add_to, monomial, WedgeElem};
use crate::repcat::{exterior_basis, is_morphism, Obj, SuperGroup};

/// Generators beyond this make the `2^n`-dimensional structure tensors unwieldy.
pub const MAX_GENERATORS: usize = 6;

/// A symmetric equivariant form `B : W (x) W -> 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearFormData {
    space: Obj,
    matrix: Matrix,
}

impl BilinearFormData {
    pub fn new(space: Obj, matrix: Matrix) -> Result<BilinearFormData> {
        let n = space.dim();
        if matrix.shape() != (n, n) {
            return Err(Error::Shape(format!("form must be {n} x {n}")));
        }
        if matrix.transpose() != matrix {
            return Err(Error::Invalid("form is not symmetric".into()));
        }
        let row = Matrix::row_vector(matrix.entries().to_vec());
        if !is_morphism(&space.tensor(&space)?, &Obj::unit(space.hopf()), &row) {
            return Err(Error::Invalid("form is not equivariant".into()));
        }
        Ok(BilinearFormData { space, matrix })
    }

    pub fn zero(space: &Obj) -> BilinearFormData {
        let n = space.dim();
        BilinearFormData {
            space: space.clone(),
            matrix: Matrix::zeros(n, n),
        }
    }

    pub fn space(&self) -> &Obj {
        &self.space
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }
}

/// The odd part `W` of a super-group as an object of its representation
/// category: `G` acts through `W`, the odd generators act by zero.
pub fn odd_space(sg: &SuperGroup) -> Result<Obj> {
    let n = sg.w_dim();
    let blocks = (0..sg.hopf().dim())
        .map(|idx| {
            let (mask, g) = sg.decode(idx);
            if mask == 0 {
                sg.w_action(g).clone()
            } else {
                Matrix::zeros(n, n)
            }
        })
        .collect();
    Obj::from_blocks(sg.hopf().clone(), blocks)
}

/// `x_S x_j` in normal form, using `x_t x_j = -x_j x_t + 2B(t, j)` for
/// `t > j` and `x_j x_j = B(j, j)`.
fn times_generator(mask: u32, j: usize, b: &Matrix) -> WedgeElem {
    let bit = 1u32 << j;
    if mask == 0 {
        return monomial(bit);
    }
    let t = 31 - mask.leading_zeros() as usize;
    if t < j {
        return monomial(mask | bit);
    }
    let rest = mask & !(1u32 << t);
    let mut out = WedgeElem::new();
    if t == j {
        add_to(&mut out, rest, b.get(j, j).clone());
        return out;
    }
    for (m, c) in times_generator(rest, j, b) {
        for (m2, c2) in times_generator(m, t, b) {
            add_to(&mut out, m2, -(&c * &c2));
        }
    }
    add_to(&mut out, rest, b.get(t, j) * Rational::from_integer(2.into()));
    out
}

fn times_word(start: WedgeElem, word: impl IntoIterator<Item = usize>, b: &Matrix) -> WedgeElem {
    word.into_iter().fold(start, |acc, j| {
        let mut out = WedgeElem::new();
        for (m, c) in acc {
            for (m2, c2) in times_generator(m, j, b) {
                add_to(&mut out, m2, &c * &c2);
            }
        }
        out
    })
}

fn indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask & (1 << i) != 0).collect()
}

/// Structure constants and action of `Cl(W, B)` on the monomial basis
/// ordered by [`exterior_basis`].
fn build(b: &BilinearFormData) -> Result<(AlgObj, Vec<usize>)> {
    let w = b.space();
    let n = w.dim();
    if n > MAX_GENERATORS {
        return Err(Error::Capacity {
            what: "dim W",
            size: n,
            limit: MAX_GENERATORS,
        });
    }
    let basis = exterior_basis(n);
    let d = basis.len();
    let mut pos = vec![0usize; d];
    for (i, &m) in basis.iter().enumerate() {
        pos[m as usize] = i;
    }
    let form = b.matrix();
    let mut m = Matrix::zeros(d, d * d);
    for (a, &sa) in basis.iter().enumerate() {
        for (c, &sc) in basis.iter().enumerate() {
            let prod = times_word(monomial(sa), indices(sc), form);
            for (mask, v) in prod {
                m.set(pos[mask as usize], a * d + c, v);
            }
        }
    }
    let mut u = vec![Rational::zero(); d];
    u[0] = Rational::one();

    // h acts on a word through W^{(x)k}, then the word is multiplied out
    let hopf = w.hopf();
    let mut powers = vec![Obj::unit(hopf)];
    for k in 1..=n {
        powers.push(powers[k - 1].tensor(w)?);
    }
    let mut blocks = Vec::with_capacity(hopf.dim());
    for h in 0..hopf.dim() {
        let mut rho = Matrix::zeros(d, d);
        for (col, &mask) in basis.iter().enumerate() {
            let word = indices(mask);
            let k = word.len();
            let src = word.iter().fold(0usize, |acc, &s| acc * n + s);
            let block = powers[k].rho(h);
            for tgt in 0..block.rows() {
                let coeff = block.get(tgt, src);
                if coeff.is_zero() {
                    continue;
                }
                let mut digits = vec![0usize; k];
                let mut rest = tgt;
                for slot in (0..k).rev() {
                    digits[slot] = rest % n;
                    rest /= n;
                }
                let img = times_word(monomial(0), digits, form);
                for (mk, v) in img {
                    let r = pos[mk as usize];
                    let cur = rho.get(r, col).clone();
                    rho.set(r, col, cur + coeff * &v);
                }
            }
        }
        blocks.push(rho);
    }
    let carrier = Obj::from_blocks(hopf.clone(), blocks).map_err(|e| {
        Error::Unsupported(format!("the action of H on W does not extend: {e}"))
    })?;
    let alg = AlgObj::new(carrier, m, u)?;
    let rep = check_algebra(&alg);
    if !rep.passed() {
        return Err(Error::Unsupported(format!(
            "the action of H on W does not extend to an algebra action: {}",
            rep.failures().join(", ")
        )));
    }
    let degrees = basis.iter().map(|m| m.count_ones() as usize).collect();
    Ok((alg, degrees))
}

fn degree_dims(degrees: &[usize], n: usize) -> Vec<usize> {
    let mut dims = vec![0; n + 1];
    for &k in degrees {
        dims[k] += 1;
    }
    dims
}

/// `Lambda(W)` with the Frobenius data found for it.
#[derive(Clone, Debug)]
pub struct Exterior {
    /// Graded by word length; carries a coalgebra when Frobenius.
    pub graded: GradedAlg,
    pub certificate: FrobeniusCertificate,
}

/// The exterior algebra on a basis of `W`. The top-coefficient functional
/// is tried first; when it is not invariant (the top power of `W` is a
/// nontrivial object) the general detector decides.
pub fn exterior_algebra(w: &Obj) -> Result<Exterior> {
    let (alg, degrees) = build(&BilinearFormData::zero(w))?;
    let d = alg.dim();
    let mut top = vec![Rational::zero(); d];
    top[d - 1] = Rational::one();
    let invariant = is_morphism(alg.carrier(), &Obj::unit(alg.carrier().hopf()), &Matrix::row_vector(top.clone()));
    let certificate = if invariant {
        certify_with_form(&alg, &top, Mode::ExactSymbolic)?
            .ok_or_else(|| Error::Internal("top form on an exterior algebra is degenerate".into()))?
    } else {
        frobenius_detect(&alg, &DetectOptions::default())?
    };
    let alg = match &certificate.witness {
        Some(wt) => alg.with_coalgebra(wt.comult.clone(), wt.counit.clone())?,
        None => alg,
    };
    let graded = GradedAlg::new(alg, degree_dims(&degrees, w.dim()))?;
    Ok(Exterior { graded, certificate })
}

/// `Cl(W, B)` filtered by word length, with `gr` identified with `Lambda(W)`.
#[derive(Clone, Debug)]
pub struct Clifford {
    pub filtered: FilteredAlg,
    pub exterior: GradedAlg,
    /// The graded isomorphism `gr(Cl) -> Lambda(W)` (both on monomials).
    pub gr_iso: Matrix,
}

pub fn clifford_algebra(w: &Obj, b: &BilinearFormData) -> Result<Clifford> {
    if b.space() != w {
        return Err(Error::Invalid("form is defined on a different object".into()));
    }
    let (alg, degrees) = build(b)?;
    let (ext, _) = build(&BilinearFormData::zero(w))?;
    let exterior = GradedAlg::new(ext, degree_dims(&degrees, w.dim()))?;
    let steps = FilteredObj::by_degree(alg.carrier(), &degrees)?;
    let filtered = FilteredAlg::new(alg, steps)?;
    let g = gr(&filtered)?;
    let gr_iso = g.pieces.lift();
    if !is_graded_iso(&g.graded, &exterior, &gr_iso) {
        return Err(Error::Internal("gr(Cl) does not match the exterior algebra".into()));
    }
    Ok(Clifford {
        filtered,
        exterior,
        gr_iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::is_commutative;
    use crate::exactla::q;
    use crate::filtration::is_connected;
    use crate::frobenius::Verdict;
    use crate::repcat::{group_algebra, Group};

    fn vec_space(n: usize) -> Obj {
        Obj::trivial(&group_algebra(&Group::trivial()), n)
    }

    fn elem(pairs: &[(u32, i64)]) -> WedgeElem {
        pairs.iter().map(|&(m, c)| (m, q(c))).collect()
    }

    /// Brute force: expand a word by bubble sort with the Clifford relation.
    fn normal_order(word: Vec<usize>, b: &Matrix) -> WedgeElem {
        for i in 0..word.len().saturating_sub(1) {
            let (x, y) = (word[i], word[i + 1]);
            if x == y {
                let mut shorter = word.clone();
                shorter.drain(i..i + 2);
                return scale(normal_order(shorter, b), b.get(x, x));
            }
            if x > y {
                let mut swapped = word.clone();
                swapped.swap(i, i + 1);
                let mut shorter = word.clone();
                shorter.drain(i..i + 2);
                let mut out = scale(normal_order(swapped, b), &q(-1));
                for (m, c) in scale(normal_order(shorter, b), &(b.get(x, y) * q(2))) {
                    add_to(&mut out, m, c);
                }
                return out;
            }
        }
        monomial(word.iter().fold(0, |acc, &i| acc | (1 << i)))
    }

    fn scale(e: WedgeElem, s: &Rational) -> WedgeElem {
        let mut out = WedgeElem::new();
        for (m, c) in e {
            add_to(&mut out, m, c * s);
        }
        out
    }

    #[test]
    fn normal_form_matches_bubble_sort() {
        let b = Matrix::from_ints(&[&[1, 2, 0], &[2, -1, 3], &[0, 3, 5]]);
        let words: Vec<Vec<usize>> = vec![
            vec![2, 1, 0],
            vec![1, 0, 1],
            vec![2, 2, 1, 0, 2],
            vec![0, 2, 1, 2, 0],
        ];
        for word in words {
            let fast = times_word(monomial(0), word.clone(), &b);
            assert_eq!(fast, normal_order(word, &b));
        }
    }

    #[test]
    fn empty_space_gives_unit_algebra() {
        let e = exterior_algebra(&vec_space(0)).unwrap();
        assert_eq!(e.graded.dims(), &[1]);
        assert!(e.certificate.is_frobenius());
    }

    #[test]
    fn exterior_on_plane() {
        let e = exterior_algebra(&vec_space(2)).unwrap();
        assert_eq!(e.graded.dims(), &[1, 2, 1]);
        let a = e.graded.to_algebra();
        // x1 x2 = x_{12}, x2 x1 = -x_{12}
        assert_eq!(a.product(&a.basis_vector(1), &a.basis_vector(2)), vec![q(0), q(0), q(0), q(1)]);
        assert_eq!(a.product(&a.basis_vector(2), &a.basis_vector(1)), vec![q(0), q(0), q(0), q(-1)]);
        assert!(check_algebra(a).passed());
        assert!(e.certificate.is_frobenius());
    }

    #[test]
    fn swap_action_is_equivariant_but_not_frobenius() {
        let h = group_algebra(&Group::cyclic(2));
        let swap = Obj::from_blocks(h, vec![Matrix::identity(2), Matrix::from_ints(&[&[0, 1], &[1, 0]])]).unwrap();
        let e = exterior_algebra(&swap).unwrap();
        let a = e.graded.to_algebra();
        // 1, x1, x2, x1x2: the swap exchanges x1, x2 and negates the top
        let expected = Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, -1]]);
        assert_eq!(a.carrier().rho(1), &expected);
        assert_eq!(check_algebra(a).get("m equivariant"), Some(true));
        assert_eq!(e.certificate.verdict, Verdict::NotFrobenius);
    }

    #[test]
    fn odd_line_in_super_ambient() {
        let z2 = Group::cyclic(2);
        let sign = Obj::from_blocks(group_algebra(&z2), vec![Matrix::identity(1), Matrix::from_ints(&[&[-1]])]).unwrap();
        let sg = crate::repcat::lambda_smash(&z2, 1, &sign).unwrap();
        let w = odd_space(&sg).unwrap();
        let e = exterior_algebra(&w).unwrap();
        assert!(check_algebra(e.graded.to_algebra()).passed());
        assert_eq!(e.certificate.verdict, Verdict::NotFrobenius);
        // the Clifford deformation is Frobenius through the coefficient of 1
        let b = BilinearFormData::new(w.clone(), Matrix::from_ints(&[&[1]])).unwrap();
        let cl = clifford_algebra(&w, &b).unwrap();
        let cert = frobenius_detect(cl.filtered.algebra(), &DetectOptions::default()).unwrap();
        assert_eq!(cert.witness.unwrap().nu, vec![q(1), q(0)]);
    }

    #[test]
    fn clifford_line() {
        let w = vec_space(1);
        let b = BilinearFormData::new(w.clone(), Matrix::from_ints(&[&[1]])).unwrap();
        let cl = clifford_algebra(&w, &b).unwrap();
        let a = cl.filtered.algebra();
        // k[x]/(x^2 - 1)
        assert_eq!(a.product(&a.basis_vector(1), &a.basis_vector(1)), vec![q(1), q(0)]);
        assert_eq!(cl.filtered.filtered().dims(), vec![1, 2]);
        assert!(is_connected(&cl.filtered));
    }

    #[test]
    fn clifford_plane_identity() {
        let w = vec_space(2);
        let b = BilinearFormData::new(w.clone(), Matrix::identity(2)).unwrap();
        let cl = clifford_algebra(&w, &b).unwrap();
        let a = cl.filtered.algebra();
        assert_eq!(a.dim(), 4);
        let x1 = a.basis_vector(1);
        let x2 = a.basis_vector(2);
        assert_eq!(a.product(&x1, &x1), a.basis_vector(0));
        let neg: Vec<Rational> = a.product(&x2, &x1).into_iter().map(|v| -v).collect();
        assert_eq!(a.product(&x1, &x2), neg);
        assert!(!is_commutative(a));
        assert_eq!(cl.gr_iso, Matrix::identity(4));
    }

    #[test]
    fn zero_form_is_trivial_deformation() {
        let w = vec_space(3);
        let cl = clifford_algebra(&w, &BilinearFormData::zero(&w)).unwrap();
        assert_eq!(cl.filtered.algebra().mult(), cl.exterior.to_algebra().mult());
        assert_eq!(elem(&[(3, 1)]), times_generator(1, 1, &Matrix::zeros(3, 3)));
    }

    #[test]
    fn rejects_bad_forms() {
        let w = vec_space(2);
        assert!(BilinearFormData::new(w, Matrix::from_ints(&[&[0, 1], &[0, 0]])).is_err());
        let h = group_algebra(&Group::cyclic(2));
        let swap = Obj::from_blocks(h, vec![Matrix::identity(2), Matrix::from_ints(&[&[0, 1], &[1, 0]])]).unwrap();
        assert!(BilinearFormData::new(swap, Matrix::from_ints(&[&[1, 0], &[0, 2]])).is_err());
    }
}
