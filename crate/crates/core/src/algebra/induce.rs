//! Induction and restriction of algebras along group embeddings of
//! super-group Hopf algebras `Lambda(W) # kG`.

use num_traits::Zero;

use super::alg::AlgObj;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Rational};
use crate::repcat::{Obj, SuperGroup};

fn check_embedding(source: &SuperGroup, target: &SuperGroup, embedding: &[usize]) -> Result<()> {
    let (s, t) = (source.group(), target.group());
    if embedding.len() != s.order() || embedding.iter().any(|&g| g >= t.order()) {
        return Err(Error::Invalid("embedding must send each source element into the target".into()));
    }
    for a in 0..s.order() {
        for b in 0..s.order() {
            if t.mul(embedding[a], embedding[b]) != embedding[s.mul(a, b)] {
                return Err(Error::Invalid("embedding is not a group homomorphism".into()));
            }
        }
    }
    let mut seen = embedding.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != embedding.len() {
        return Err(Error::Invalid("embedding is not injective".into()));
    }
    match (source.u(), target.u()) {
        (Some(su), Some(tu)) if embedding[su] != tu => {
            return Err(Error::Invalid("embedding does not preserve u".into()))
        }
        (Some(_), None) => return Err(Error::Invalid("target lacks the parity element u".into())),
        _ => {}
    }
    if source.w_dim() > 0 {
        if source.w_dim() != target.w_dim() {
            return Err(Error::Invalid("source and target odd parts differ".into()));
        }
        for h in 0..s.order() {
            if source.w_action(h) != target.w_action(embedding[h]) {
                return Err(Error::Invalid("W actions disagree along the embedding".into()));
            }
        }
    }
    Ok(())
}

/// Product of the actions of `w_{s1} ... w_{sk}` (ascending) and `g`.
fn smash_block(
    target: &SuperGroup,
    mask: u32,
    g: usize,
    group_block: &dyn Fn(usize) -> Matrix,
    odd_block: &dyn Fn(usize) -> Matrix,
) -> Matrix {
    let mut m = group_block(g);
    let mut bits: Vec<usize> = (0..target.w_dim()).filter(|&l| mask & (1 << l) != 0).collect();
    bits.reverse();
    for l in bits {
        m = &odd_block(l) * &m;
    }
    m
}

/// `kG (x)_{kH} A` on the basis `r_i (x) e_a` (index `i * dim A + a`) over
/// left coset representatives `r_i` (the first is the identity), with
/// blockwise multiplication `(r_i (x) a)(r_j (x) b) = delta_ij r_i (x) ab`.
///
/// Odd generators act on block `i` through `r_i^{-1} . w` when the source
/// has the same `W`, and by zero when the source has no odd part.
pub fn induce(
    a: &AlgObj,
    source: &SuperGroup,
    target: &SuperGroup,
    embedding: &[usize],
) -> Result<AlgObj> {
    if !a.carrier().same_hopf(source.hopf()) {
        return Err(Error::CategoryMismatch);
    }
    check_embedding(source, target, embedding)?;
    let (sg, tg) = (source.group(), target.group());
    let reps = tg.left_coset_reps(embedding);
    let k = reps.len();
    let da = a.dim();
    let dim = k * da;
    let src_pos = |h: usize| embedding.iter().position(|&x| x == h).expect("in image");

    let group_block = |g: usize| -> Matrix {
        let mut m = Matrix::zeros(dim, dim);
        for (i, &r) in reps.iter().enumerate() {
            let (j, h) = tg
                .coset_decompose(tg.mul(g, r), &reps, embedding)
                .expect("coset representatives cover the group");
            let rho = a.carrier().rho(source.index(0, src_pos(h)));
            for x in 0..da {
                for y in 0..da {
                    m.set(j * da + x, i * da + y, rho.get(x, y).clone());
                }
            }
        }
        m
    };
    let odd_block = |l: usize| -> Matrix {
        let mut m = Matrix::zeros(dim, dim);
        if source.w_dim() == 0 {
            return m;
        }
        for (i, &r) in reps.iter().enumerate() {
            // r^{-1} . w_l = sum_p c_p w_p
            let moved = target.w_action(tg.inv(r)).column_vec(l);
            let mut rho = Matrix::zeros(da, da);
            for (p, c) in moved.iter().enumerate() {
                if !c.is_zero() {
                    let w = a.carrier().rho(source.index(1 << p, sg.identity()));
                    rho = &rho + &w.scale(c);
                }
            }
            for x in 0..da {
                for y in 0..da {
                    m.set(i * da + x, i * da + y, rho.get(x, y).clone());
                }
            }
        }
        m
    };
    let blocks = (0..target.hopf().dim())
        .map(|idx| {
            let (mask, g) = target.decode(idx);
            smash_block(target, mask, g, &group_block, &odd_block)
        })
        .collect();
    let carrier = Obj::from_blocks(target.hopf().clone(), blocks)?;

    let mut m = Matrix::zeros(dim, dim * dim);
    for i in 0..k {
        for x in 0..da {
            for y in 0..da {
                let col = (i * da + x) * dim + (i * da + y);
                for z in 0..da {
                    let v = a.mult().get(z, x * da + y);
                    if !v.is_zero() {
                        m.set(i * da + z, col, v.clone());
                    }
                }
            }
        }
    }
    let u: Vec<Rational> = (0..k).flat_map(|_| a.unit().iter().cloned()).collect();
    AlgObj::new(carrier, m, u)
}

/// Restriction along `embedding : to -> from`; the odd part of `to` must be
/// empty or equal to that of `from`.
pub fn restrict_algebra(
    a: &AlgObj,
    from: &SuperGroup,
    to: &SuperGroup,
    embedding: &[usize],
) -> Result<AlgObj> {
    if !a.carrier().same_hopf(from.hopf()) {
        return Err(Error::CategoryMismatch);
    }
    check_embedding(to, from, embedding)?;
    let blocks = (0..to.hopf().dim())
        .map(|idx| {
            let (mask, h) = to.decode(idx);
            a.carrier().rho(from.index(mask, embedding[h])).clone()
        })
        .collect();
    let carrier = Obj::from_blocks(to.hopf().clone(), blocks)?;
    AlgObj::new(carrier, a.mult().clone(), a.unit().to_vec())
}
