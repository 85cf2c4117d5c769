//! Connected graded Frobenius algebras and the lift of a Frobenius form from
//! `gr(A)` to `A`.

use num_traits::Zero;

use super::certificate::{FrobeniusCertificate, Mode};
use super::detect::{certify_with_form, frobenius_detect, gram_matrix, DetectOptions};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Rational};
use crate::filtration::{connectedness_failure, gr, trivial_filtration, FilteredAlg, GrResult, GradedAlg};
use crate::repcat::{is_morphism, Obj};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFrobeniusReport {
    pub top_degree: usize,
    pub top_dim: usize,
    pub dims: Vec<usize>,
    /// `rank p(B_{n-i} (x) B_i)` for `i = 0..=n`.
    pub block_ranks: Vec<usize>,
    /// `B_n` is one-dimensional with trivial action.
    pub top_is_unit: bool,
    /// The projection onto `B_n` is a Frobenius form.
    pub top_projection_nondegenerate: bool,
    /// Every block `B_{n-i} (x) B_i -> 1` is a perfect pairing.
    pub blocks_perfect: bool,
}

impl GradedFrobeniusReport {
    pub fn passed(&self) -> bool {
        self.top_is_unit && self.top_projection_nondegenerate && self.blocks_perfect
    }
}

/// Checks the structure forced on a connected graded Frobenius algebra:
/// a one-dimensional top degree whose projection is a Frobenius form, and
/// perfect pairings between complementary degrees.
pub fn graded_frobenius_structure_check(
    b: &GradedAlg,
    cert: &FrobeniusCertificate,
) -> Result<GradedFrobeniusReport> {
    if let Some(why) = connectedness_failure(&trivial_filtration(b)) {
        return Err(Error::NotConnected(why));
    }
    if !cert.is_frobenius() {
        return Err(Error::Precondition("certificate does not assert Frobenius".into()));
    }
    let dims = b.dims().to_vec();
    let off = b.offsets();
    let n = b.top_degree();
    let top_dim = dims[n];
    let alg = b.to_algebra();
    let top_is_unit = top_dim == 1 && b.component(n).is_trivial_action();

    let mut eps = vec![Rational::zero(); b.dim()];
    if top_dim == 1 {
        eps[off[n]] = Rational::from_integer(1.into());
    }
    let eps_invariant = is_morphism(
        alg.carrier(),
        &Obj::unit(alg.carrier().hopf()),
        &Matrix::row_vector(eps.clone()),
    );
    let gram = gram_matrix(alg, &eps);
    let top_projection_nondegenerate = top_dim == 1 && eps_invariant && gram.inverse().is_some();

    let block_ranks: Vec<usize> = (0..=n)
        .map(|i| {
            let rows: Vec<usize> = (off[n - i]..off[n - i + 1]).collect();
            let cols: Vec<usize> = (off[i]..off[i + 1]).collect();
            gram.select_rows(&rows).select_cols(&cols).rank()
        })
        .collect();
    let blocks_perfect = (0..=n).all(|i| dims[n - i] == dims[i] && block_ranks[i] == dims[i]);
    Ok(GradedFrobeniusReport {
        top_degree: n,
        top_dim,
        dims,
        block_ranks,
        top_is_unit,
        top_projection_nondegenerate,
        blocks_perfect,
    })
}

#[derive(Clone, Debug)]
pub struct LiftResult {
    pub gr: GrResult,
    pub gr_certificate: FrobeniusCertificate,
    /// The projection `A -> F(n)/F(n-1)`, present when `gr(A)` is Frobenius.
    pub eta: Option<Vec<Rational>>,
    /// `A` certified with the form `eta`; absent when `gr(A)` is not
    /// Frobenius, in which case nothing follows for `A`.
    pub certificate: Option<FrobeniusCertificate>,
}

/// Decides `gr(A)` and, when it is Frobenius, certifies `A` with the top
/// projection `eta`.
pub fn bongale_lift(a: &FilteredAlg, opts: &DetectOptions) -> Result<LiftResult> {
    if let Some(why) = connectedness_failure(a) {
        return Err(Error::NotConnected(why));
    }
    let g = gr(a)?;
    let gr_certificate = frobenius_detect(g.graded.to_algebra(), opts)?;
    if !gr_certificate.is_frobenius() {
        return Ok(LiftResult {
            gr: g,
            gr_certificate,
            eta: None,
            certificate: None,
        });
    }
    let n = g.graded.top_degree();
    let top = g.graded.dims()[n];
    if top != 1 {
        return Err(Error::Internal(format!(
            "gr(A) is Frobenius but its top degree {n} has dimension {top}"
        )));
    }
    let eta = g.pieces.pi[n].row(0).to_vec();
    let alg = a.algebra();
    let invariant = is_morphism(
        alg.carrier(),
        &Obj::unit(alg.carrier().hopf()),
        &Matrix::row_vector(eta.clone()),
    );
    if !invariant {
        return Err(Error::Internal("top projection is not equivariant".into()));
    }
    let certificate = certify_with_form(&alg.clone().without_coalgebra(), &eta, Mode::ExactSymbolic)?
        .ok_or_else(|| Error::Internal("top projection is degenerate although gr(A) is Frobenius".into()))?;
    Ok(LiftResult {
        gr: g,
        gr_certificate,
        eta: Some(eta),
        certificate: Some(certificate),
    })
}
