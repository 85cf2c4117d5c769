//! The algebra `Ind_{H^}^G ( Ind_W Ind_H^{H^} End(V) (x) Cl_W )` representing a
//! module category over `Rep(G x| W, u)`.

use crate::algebra::{check_algebra, end_algebra, end_algebra_projective, induce, tensor_algebra_of, AlgObj};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Rational};
use crate::repcat::{group_algebra, Group, Obj, SuperGroup};

use super::clifford::{clifford_algebra, odd_space, BilinearFormData};

#[derive(Clone, Debug)]
pub struct RepresentingInput {
    pub group: Group,
    /// Elements of the subgroup `H`, listed with the identity first.
    pub subgroup: Vec<usize>,
    /// Optional 2-cocycle on `H`, indexed by positions in `subgroup`.
    pub cocycle: Option<Vec<Vec<Rational>>>,
    pub u: usize,
    /// `W` as a `kG`-module.
    pub w: Obj,
    pub form: Matrix,
    /// The (projective) representation `V`, one matrix per element of `H`.
    pub v: Vec<Matrix>,
}

#[derive(Clone, Debug)]
pub struct RepresentingAlgebra {
    pub algebra: AlgObj,
    pub ambient: SuperGroup,
    /// Dimensions after each stage, in construction order.
    pub stages: Vec<(&'static str, usize)>,
}

fn clause(msg: &str) -> Error {
    Error::Invalid(msg.to_string())
}

pub fn representing_algebra(input: &RepresentingInput) -> Result<RepresentingAlgebra> {
    let g = &input.group;
    let e = g.identity();
    if input.u >= g.order() {
        return Err(clause("u is not an element of G"));
    }
    if !g.is_central(input.u) {
        return Err(clause("u is not central in G"));
    }
    if g.mul(input.u, input.u) != e {
        return Err(clause("u does not have order at most 2"));
    }
    if !input.w.same_hopf(&group_algebra(g)) {
        return Err(clause("W must be a representation of G"));
    }
    if input.subgroup.first() != Some(&e) {
        return Err(clause("the subgroup list must start with the identity"));
    }
    let h_group = g.subgroup(&input.subgroup)?;
    let mut gens = input.subgroup.clone();
    gens.push(input.u);
    let hhat = g.generated(&gens);
    let hhat_group = g.subgroup(&hhat)?;
    let pos_in = |list: &[usize], x: usize| list.iter().position(|&y| y == x).expect("member");
    let u_hat = pos_in(&hhat, input.u);

    // End(V) in Rep(H)
    let end = match &input.cocycle {
        Some(psi) => end_algebra_projective(&h_group, psi, &input.v)?,
        None => {
            let v = Obj::from_blocks(group_algebra(&h_group), input.v.clone())?;
            end_algebra(&v)?
        }
    };
    let mut stages = vec![("End(V)", end.dim())];

    // Ind_H^{H^} into Rep(H^, u)
    let src = SuperGroup::plain(&h_group);
    let mid = SuperGroup::with_parity(&hhat_group, u_hat)?;
    let emb: Vec<usize> = input.subgroup.iter().map(|&x| pos_in(&hhat, x)).collect();
    let ind1 = induce(&end, &src, &mid, &emb)?;
    stages.push(("Ind_H^H^", ind1.dim()));

    // Ind_W: odd generators act by zero
    let w_hat: Vec<Matrix> = hhat.iter().map(|&x| input.w.rho(x).clone()).collect();
    let top_hat = SuperGroup::new(hhat_group.clone(), u_hat, w_hat)?;
    let ident: Vec<usize> = (0..hhat.len()).collect();
    let ind2 = induce(&ind1, &mid, &top_hat, &ident)?;
    stages.push(("Ind_W", ind2.dim()));

    let w_obj = odd_space(&top_hat)?;
    let form = BilinearFormData::new(w_obj.clone(), input.form.clone())?;
    let cl = clifford_algebra(&w_obj, &form)?.filtered.algebra().clone();
    stages.push(("Cl_W", cl.dim()));

    let t = tensor_algebra_of(&ind2.without_coalgebra(), &cl)?;
    stages.push(("tensor", t.dim()));

    let w_all: Vec<Matrix> = (0..g.order()).map(|x| input.w.rho(x).clone()).collect();
    let ambient = SuperGroup::new(g.clone(), input.u, w_all)?;
    let algebra = induce(&t, &top_hat, &ambient, &hhat)?;
    stages.push(("Ind_H^^G", algebra.dim()));
    let rep = check_algebra(&algebra);
    if !rep.passed() {
        return Err(Error::Internal(format!(
            "representing algebra fails: {}",
            rep.failures().join(", ")
        )));
    }
    Ok(RepresentingAlgebra {
        algebra,
        ambient,
        stages,
    })
}

/// `G = Z/2`, `H = 1`, `u` the generator, `W = k` with `u = -1`, `B = [1]`, `V = k`.
pub fn etingof_ostrik_min() -> RepresentingInput {
    let g = Group::cyclic(2);
    let w = Obj::from_blocks(group_algebra(&g), vec![Matrix::identity(1), Matrix::from_ints(&[&[-1]])])
        .expect("sign representation");
    RepresentingInput {
        group: g,
        subgroup: vec![0],
        cocycle: None,
        u: 1,
        w,
        form: Matrix::identity(1),
        v: vec![Matrix::identity(1)],
    }
}

/// `G = Z/2 x Z/2`, `H = 1`, `u` the second generator, `W = k` on which
/// only `u` acts nontrivially, `B = [1]`, `V = k`; dimension 8.
pub fn representing_dim8() -> RepresentingInput {
    let g = Group::cyclic(2).product(&Group::cyclic(2));
    // (a, b) at index 2a + b; u = (0, 1)
    let blocks = (0..4)
        .map(|x| if x % 2 == 1 { Matrix::from_ints(&[&[-1]]) } else { Matrix::identity(1) })
        .collect();
    let w = Obj::from_blocks(group_algebra(&g), blocks).expect("character");
    RepresentingInput {
        group: g,
        subgroup: vec![0],
        cocycle: None,
        u: 1,
        w,
        form: Matrix::identity(1),
        v: vec![Matrix::identity(1)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::{frobenius_detect, DetectOptions};

    #[test]
    fn trivial_data_gives_unit_algebra() {
        let g = Group::trivial();
        let input = RepresentingInput {
            group: g.clone(),
            subgroup: vec![0],
            cocycle: None,
            u: 0,
            w: Obj::zero(&group_algebra(&g)),
            form: Matrix::zeros(0, 0),
            v: vec![Matrix::identity(1)],
        };
        let r = representing_algebra(&input).unwrap();
        assert_eq!(r.algebra.dim(), 1);
        assert!(frobenius_detect(&r.algebra, &DetectOptions::default()).unwrap().is_frobenius());
    }

    #[test]
    fn minimal_composite() {
        let r = representing_algebra(&etingof_ostrik_min()).unwrap();
        assert_eq!(r.algebra.dim(), 4);
        let dims: Vec<usize> = r.stages.iter().map(|s| s.1).collect();
        assert_eq!(dims, vec![1, 2, 2, 2, 4, 4]);
        assert!(frobenius_detect(&r.algebra, &DetectOptions::default()).unwrap().is_frobenius());
    }

    #[test]
    fn dimension_eight() {
        let r = representing_algebra(&representing_dim8()).unwrap();
        assert_eq!(r.algebra.dim(), 8);
        assert!(frobenius_detect(&r.algebra, &DetectOptions::default()).unwrap().is_frobenius());
    }

    #[test]
    fn hypothesis_violations_named() {
        let mut bad = etingof_ostrik_min();
        bad.w = Obj::trivial(&group_algebra(&bad.group), 1);
        let err = representing_algebra(&bad).unwrap_err();
        assert!(err.to_string().contains("u does not act by -1"), "{err}");
        let mut bad = etingof_ostrik_min();
        bad.u = 5;
        assert!(representing_algebra(&bad).unwrap_err().to_string().contains("u is not an element"));
    }
}
