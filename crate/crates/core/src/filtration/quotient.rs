//! Filtered ideals and the comparison `gr(A)/gr(I) ≅ gr(A/I)`.

use super::filtered::{induced_filtration, is_filtered_map, FilteredAlg, FilteredObj};
use super::graded::{gr, gr_mor_total, is_graded_iso, GradedAlg};
use crate::algebra::{check_weak_ideal, quotient_algebra, AlgObj, Side, WeakIdeal};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::repcat::Mor;
use crate::report::ValidationReport;

/// A weak ideal together with a filtration on its carrier.
#[derive(Clone, Debug)]
pub struct FilteredIdeal {
    ideal: WeakIdeal,
    filtered: FilteredObj,
}

impl FilteredIdeal {
    pub fn new(ideal: WeakIdeal, filtered: FilteredObj) -> Result<FilteredIdeal> {
        if filtered.ambient() != ideal.module().carrier() {
            return Err(Error::Invalid("filtration lives on a different object".into()));
        }
        Ok(FilteredIdeal { ideal, filtered })
    }

    /// The filtration `F_I(i) = phi^{-1}(S_i)`.
    pub fn induced(a: &FilteredAlg, ideal: WeakIdeal) -> Result<FilteredIdeal> {
        let phi = Mor::new(
            ideal.module().carrier().clone(),
            a.algebra().carrier().clone(),
            ideal.phi().clone(),
        )?;
        let filtered = induced_filtration(&phi, a.filtered())?;
        Self::new(ideal, filtered)
    }

    pub fn ideal(&self) -> &WeakIdeal {
        &self.ideal
    }

    pub fn filtered(&self) -> &FilteredObj {
        &self.filtered
    }
}

/// Weak-ideal axioms, `phi` filtered, and the componentwise actions
/// `S_i^A . S_j^I ⊆ S_{i+j}^I` (and the mirror image on the right).
pub fn check_filtered_ideal(a: &FilteredAlg, i: &FilteredIdeal) -> ValidationReport {
    let mut rep = check_weak_ideal(&i.ideal);
    rep.record(
        "phi filtered",
        is_filtered_map(&i.filtered, a.filtered(), i.ideal.phi()),
    );
    let module = i.ideal.module();
    let fa = a.filtered();
    let fi = &i.filtered;
    let n = fa.top_index() + fi.top_index();
    let acts = |act: &dyn Fn(usize) -> Option<Matrix>| -> bool {
        (0..=n).all(|p| {
            let sa = fa.step_basis(p);
            (0..=(n - p)).all(|q| {
                let si = fi.step_basis(q);
                let target = fi.step((p + q) as isize);
                (0..sa.cols()).all(|c| {
                    let coeffs = sa.column_vec(c);
                    let mut m = Matrix::zeros(module.carrier().dim(), module.carrier().dim());
                    for (k, v) in coeffs.iter().enumerate() {
                        if !num_traits::Zero::is_zero(v) {
                            m = &m + &act(k).expect("declared side").scale(v);
                        }
                    }
                    target.contains_columns(&(&m * &si))
                })
            })
        })
    };
    if module.side().has_left() {
        rep.record("left action filtered", acts(&|k| module.left_action(k)));
    }
    if module.side().has_right() {
        rep.record("right action filtered", acts(&|k| module.right_action(k)));
    }
    rep
}

/// Both sides of `gr(A)/gr(I) ≅ gr(A/I)` and the comparison map induced by
/// `gr(pi)`.
#[derive(Clone, Debug)]
pub struct QuotientComparison {
    /// `gr(A)/gr(I)`, graded by the degrees of its basis vectors.
    pub graded_quotient: GradedAlg,
    /// `gr(A/I)` for the image filtration on `A/I`.
    pub quotient_graded: GradedAlg,
    /// The induced map, when it is a graded algebra isomorphism.
    pub iso: Option<Matrix>,
}

/// Builds both sides and the map `gr(A)/gr(I) -> gr(A/I)` induced by the
/// projection, and checks that it is a graded algebra isomorphism.
pub fn graded_quotient_commutes(a: &FilteredAlg, i: &FilteredIdeal) -> Result<QuotientComparison> {
    if i.ideal.side() != Side::Bi {
        return Err(Error::Unsupported("two-sided filtered ideal required".into()));
    }
    let rep = check_filtered_ideal(a, i);
    if !rep.passed() {
        return Err(Error::Precondition(format!(
            "not a filtered weak ideal: {}",
            rep.failures().join(", ")
        )));
    }
    let ga = gr(a)?;
    let phi = i.ideal.phi();
    // left side: gr(A) modulo the image of gr(phi)
    let gphi = gr_mor_total(&i.filtered, a.filtered(), phi)?;
    let gra = &ga.graded;
    let image = Subspace::from_columns(&gphi);
    let gi = WeakIdeal::from_subspace(gra.to_algebra(), &image.basis(), Side::Bi)?;
    let (lhs_alg, lhs_pi) = quotient_algebra(gra.to_algebra(), &gi)?;
    let free: Vec<usize> = (0..gra.dim()).filter(|j| !image.pivots().contains(j)).collect();
    let lhs_dims = degree_counts(free.iter().map(|&j| gra.degree_of(j)), gra.dims().len());
    let graded_quotient = GradedAlg::new(lhs_alg, lhs_dims)?;

    // right side: A/I with the image filtration, then gr
    let (qa, pi) = quotient_algebra(a.algebra(), &i.ideal)?;
    let steps: Vec<Subspace> = a
        .filtered()
        .steps()
        .iter()
        .map(|s| s.image(pi.matrix()))
        .collect();
    let fq = FilteredObj::from_subspaces(qa.carrier().clone(), steps)?;
    let fqa = FilteredAlg::new(qa, fq)?;
    let quotient_graded = gr(&fqa)?.graded;

    // gr(pi) kills gr(I); compose with the coordinate section of the left side
    let gpi = gr_mor_total(a.filtered(), fqa.filtered(), pi.matrix())?;
    let kills = (&gpi * &gphi).is_zero();
    let section = Matrix::identity(gra.dim()).select_cols(&free);
    let map = &gpi * &section;
    let ok = kills
        && is_graded_iso(&graded_quotient, &quotient_graded, &map)
        && lhs_pi.matrix() * &section == Matrix::identity(free.len());
    Ok(QuotientComparison {
        graded_quotient,
        quotient_graded,
        iso: ok.then_some(map),
    })
}

fn degree_counts(degs: impl Iterator<Item = usize>, len: usize) -> Vec<usize> {
    let mut counts = vec![0; len.max(1)];
    for d in degs {
        counts[d] += 1;
    }
    counts
}

/// The graded algebra underlying an algebra whose basis is already ordered
/// by degree, for comparisons.
pub fn graded_from_degrees(a: AlgObj, degrees: &[usize]) -> Result<GradedAlg> {
    let len = degrees.iter().copied().max().map_or(1, |m| m + 1);
    if degrees.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Invalid("basis must be sorted by degree".into()));
    }
    GradedAlg::new(a, degree_counts(degrees.iter().copied(), len))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ideal_generated;
    use crate::exactla::q;
    use crate::repcat::{group_algebra, Group, Obj};

    fn truncated(n: usize) -> AlgObj {
        let carrier = Obj::trivial(&group_algebra(&Group::trivial()), n);
        let m = Matrix::from_fn(n, n * n, |k, c| if c / n + c % n == k { q(1) } else { q(0) });
        let mut u = vec![q(0); n];
        u[0] = q(1);
        AlgObj::new(carrier, m, u).unwrap()
    }

    fn monomial(n: usize) -> FilteredAlg {
        let a = truncated(n);
        let f = FilteredObj::by_degree(a.carrier(), &(0..n).collect::<Vec<_>>()).unwrap();
        FilteredAlg::new(a, f).unwrap()
    }

    #[test]
    fn zero_ideal_gives_identity() {
        let fa = monomial(3);
        let z = WeakIdeal::zero(fa.algebra(), Side::Bi);
        let fi = FilteredIdeal::induced(&fa, z).unwrap();
        let cmp = graded_quotient_commutes(&fa, &fi).unwrap();
        assert_eq!(cmp.iso, Some(Matrix::identity(3)));
    }

    #[test]
    fn truncation_by_x_squared() {
        let fa = monomial(3);
        let s = ideal_generated(fa.algebra(), &Matrix::from_ints(&[&[0], &[0], &[1]]), Side::Bi);
        let i = WeakIdeal::from_subspace(fa.algebra(), &s.basis(), Side::Bi).unwrap();
        let fi = FilteredIdeal::induced(&fa, i).unwrap();
        assert_eq!(fi.filtered().dims(), vec![0, 0, 1]);
        assert!(check_filtered_ideal(&fa, &fi).passed());
        let cmp = graded_quotient_commutes(&fa, &fi).unwrap();
        assert!(cmp.iso.is_some());
        let expected = graded_from_degrees(truncated(2), &[0, 1]).unwrap();
        assert_eq!(cmp.quotient_graded.to_algebra().mult(), expected.to_algebra().mult());
        assert_eq!(cmp.graded_quotient.dims(), &[1, 1, 0]);
    }
}
