//! Deciding and witnessing the Frobenius property through the Gram pencil
//! of the invariant functionals.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::certificate::{FrobeniusCertificate, Mode, Refutation, Verdict, Witness};
use crate::algebra::{check_algebra, AlgObj, Side};
use crate::error::{Error, Result};
use crate::exactla::{pencil_at, symbolic_det, Matrix, Rational, Subspace, DEFAULT_SYMBOLIC_DET_LIMIT};
use crate::repcat::{dual_obj, hom_invariants, is_morphism, Obj};
use crate::report::ValidationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeChoice {
    Auto,
    Exact,
    Randomized,
}

#[derive(Clone, Debug)]
pub struct DetectOptions {
    pub mode: ModeChoice,
    pub seed: u64,
    /// Largest Gram matrix handed to the symbolic determinant.
    pub symbolic_capacity: usize,
    pub max_height: u64,
    pub samples_per_round: usize,
}

impl Default for DetectOptions {
    fn default() -> Self {
        DetectOptions {
            mode: ModeChoice::Auto,
            seed: 0,
            symbolic_capacity: DEFAULT_SYMBOLIC_DET_LIMIT,
            max_height: 64,
            samples_per_round: 4,
        }
    }
}

/// Randomized refutations need the accumulated failure bound at or below this.
pub fn refutation_threshold() -> Rational {
    Rational::new(1.into(), (1u64 << 20).into())
}

/// `G[a][b] = nu(e_a e_b)`.
pub fn gram_matrix(a: &AlgObj, nu: &[Rational]) -> Matrix {
    let d = a.dim();
    let row = &Matrix::row_vector(nu.to_vec()) * a.mult();
    Matrix::from_vec(d, d, row.entries().to_vec()).expect("d^2 entries")
}

fn is_invariant(a: &AlgObj, nu: &[Rational]) -> bool {
    nu.len() == a.dim()
        && is_morphism(
            a.carrier(),
            &Obj::unit(a.carrier().hopf()),
            &Matrix::row_vector(nu.to_vec()),
        )
}

fn require_invariant(a: &AlgObj, nu: &[Rational]) -> Result<()> {
    if nu.len() != a.dim() {
        return Err(Error::Shape(format!(
            "functional has {} entries, algebra has dimension {}",
            nu.len(),
            a.dim()
        )));
    }
    if !is_invariant(a, nu) {
        return Err(Error::Precondition("functional is not equivariant".into()));
    }
    Ok(())
}

fn pairing_row(a: &AlgObj, nu: &[Rational]) -> Matrix {
    &Matrix::row_vector(nu.to_vec()) * a.mult()
}

fn snake_report(a: &AlgObj, nu: &[Rational], q: &[Rational]) -> ValidationReport {
    let d = a.dim();
    let id = Matrix::identity(d);
    let p = pairing_row(a, nu);
    let qc = Matrix::column(q.to_vec());
    let mut rep = ValidationReport::new();
    rep.record("(p x id)(id x q) = id", &p.kron(&id) * &id.kron(&qc) == id);
    rep.record("(id x p)(q x id) = id", &id.kron(&p) * &qc.kron(&id) == id);
    rep
}

/// Returns the copairing `q` with both snake identities checked, or `None`
/// when the pairing `nu . m` is degenerate.
pub fn copairing_check(a: &AlgObj, nu: &[Rational]) -> Result<Option<(Vec<Rational>, ValidationReport)>> {
    require_invariant(a, nu)?;
    let Some(inv) = gram_matrix(a, nu).inverse() else {
        return Ok(None);
    };
    let q = inv.entries().to_vec();
    let rep = snake_report(a, nu, &q);
    Ok(Some((q, rep)))
}

/// Certifies `a` with the single form `nu`, or `None` if its Gram matrix is
/// singular. Every certificate invariant is re-checked; a failure there is
/// an internal fault.
pub fn certify_with_form(a: &AlgObj, nu: &[Rational], mode: Mode) -> Result<Option<FrobeniusCertificate>> {
    require_invariant(a, nu)?;
    let d = a.dim();
    let gram = gram_matrix(a, nu);
    let Some(ginv) = gram.inverse() else {
        return Ok(None);
    };
    let q = ginv.entries().to_vec();
    // Mat(Delta e_x) = L_x G^{-1}
    let mut comult = Matrix::zeros(d * d, d);
    for x in 0..d {
        let block = &a.left_mult(x) * &ginv;
        for (r, v) in block.entries().iter().enumerate() {
            if !v.is_zero() {
                comult.set(r, x, v.clone());
            }
        }
    }
    let witness = Witness {
        nu: nu.to_vec(),
        gram,
        q,
        comult,
        counit: nu.to_vec(),
    };
    verify_witness(a, &witness)?;
    Ok(Some(FrobeniusCertificate {
        verdict: Verdict::Frobenius,
        mode,
        witness: Some(witness),
        refutation: None,
    }))
}

fn verify_witness(a: &AlgObj, w: &Witness) -> Result<()> {
    let mut rep = snake_report(a, &w.nu, &w.q);
    rep.record("gram invertible", w.gram.inverse().is_some());
    let p = pairing_row(a, &w.nu);
    let id = Matrix::identity(a.dim());
    rep.record(
        "p(m x id) = p(id x m)",
        &p * &a.mult().kron(&id) == &p * &id.kron(a.mult()),
    );
    let frob = a
        .clone()
        .without_coalgebra()
        .with_coalgebra(w.comult.clone(), w.counit.clone())?;
    rep.extend("extracted: ", check_algebra(&frob));
    if rep.passed() {
        Ok(())
    } else {
        Err(Error::Internal(format!(
            "certificate invariants failed: {}",
            rep.failures().join(", ")
        )))
    }
}

/// Seeded rational points `p/q` with `|p| <= h`, `1 <= q <= h`.
struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn point(&mut self, d: usize, h: u64) -> Vec<Rational> {
        let h = h as i64;
        (0..d)
            .map(|_| {
                let p = self.rng.gen_range(-h..=h);
                let q = self.rng.gen_range(1..=h);
                Rational::new(p.into(), q.into())
            })
            .collect()
    }
}

/// Combination `sum_k t_k nu_k` of the rows of `basis`.
fn combine_rows(basis: &Matrix, t: &[Rational]) -> Vec<Rational> {
    (&Matrix::row_vector(t.to_vec()) * basis).entries().to_vec()
}

/// Deterministic candidates tried before random points: the algebra's own
/// counit when invariant, then the basis functionals.
fn preferred_candidates(a: &AlgObj, basis: &Matrix) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    if let Some(co) = a.coalgebra() {
        if is_invariant(a, &co.counit) && co.counit.iter().any(|x| !x.is_zero()) {
            out.push(co.counit.clone());
        }
    }
    out.extend((0..basis.rows()).map(|k| basis.row(k).to_vec()));
    out
}

fn nondegenerate(a: &AlgObj, nu: &[Rational]) -> bool {
    !gram_matrix(a, nu).det().is_zero()
}

/// Decides whether `a` is Frobenius. See [`DetectOptions`] for the mode
/// policy; randomized refutations carry their Schwartz-Zippel bound.
pub fn frobenius_detect(a: &AlgObj, opts: &DetectOptions) -> Result<FrobeniusCertificate> {
    let rep = check_algebra(&a.clone().without_coalgebra());
    if !rep.passed() {
        return Err(Error::Invalid(format!(
            "not an algebra: {}",
            rep.failures().join(", ")
        )));
    }
    let n = a.dim();
    let basis = hom_invariants(a.carrier());
    let d = basis.rows();
    let exact = match opts.mode {
        ModeChoice::Exact => true,
        ModeChoice::Randomized => false,
        ModeChoice::Auto => d <= 4 && n <= opts.symbolic_capacity.min(6),
    };
    let mode = if exact { Mode::ExactSymbolic } else { Mode::Randomized };
    if opts.mode == ModeChoice::Exact && n > opts.symbolic_capacity {
        return Err(Error::Capacity {
            what: "algebra dimension",
            size: n,
            limit: opts.symbolic_capacity,
        });
    }
    if n == 0 {
        // the zero algebra: the empty pairing is nondegenerate
        return certify_with_form(a, &[], mode).map(|c| c.expect("empty Gram is invertible"));
    }
    if d == 0 {
        return Ok(FrobeniusCertificate {
            verdict: Verdict::NotFrobenius,
            mode,
            witness: None,
            refutation: Some(Refutation::NoInvariantFunctionals),
        });
    }
    let pencil: Vec<Matrix> = (0..d).map(|k| gram_matrix(a, basis.row(k))).collect();

    for nu in preferred_candidates(a, &basis) {
        if nondegenerate(a, &nu) {
            return certify_with_form(a, &nu, mode).map(|c| c.expect("nondegenerate"));
        }
    }

    let mut sampler = Sampler::new(opts.seed);
    if exact {
        let poly = symbolic_det(&pencil, opts.symbolic_capacity)?;
        if poly.is_zero() {
            return Ok(FrobeniusCertificate {
                verdict: Verdict::NotFrobenius,
                mode,
                witness: None,
                refutation: Some(Refutation::SymbolicDeterminant {
                    polynomial: poly.to_string(),
                    variables: d,
                }),
            });
        }
        // a nonzero polynomial of degree n misses most points of a large grid
        let mut h = 1u64;
        for _ in 0..40 {
            for _ in 0..opts.samples_per_round.max(1) {
                let t = sampler.point(d, h);
                if !pencil_at(&pencil, &t).det().is_zero() {
                    let nu = combine_rows(&basis, &t);
                    return certify_with_form(a, &nu, mode).map(|c| c.expect("nondegenerate"));
                }
            }
            h = h.saturating_mul(2);
        }
        return Err(Error::Internal("no nondegenerate point for a nonzero determinant".into()));
    }

    let max_height = opts.max_height.max(1);
    let mut bound = Rational::one();
    let mut samples = 0usize;
    let mut h = 1u64;
    loop {
        for _ in 0..opts.samples_per_round {
            let t = sampler.point(d, h);
            samples += 1;
            if !pencil_at(&pencil, &t).det().is_zero() {
                let nu = combine_rows(&basis, &t);
                return certify_with_form(a, &nu, mode).map(|c| c.expect("nondegenerate"));
            }
            let factor = Rational::new(n.into(), (2 * h + 1).into());
            if factor < Rational::one() {
                bound *= factor;
            }
        }
        if h >= max_height {
            break;
        }
        h = (h * 2).min(max_height);
    }
    let refuted = bound <= refutation_threshold();
    let note = if refuted {
        "the Gram determinant vanished at every sample; it is the zero polynomial except with probability at most failure_bound"
    } else {
        "the Gram determinant vanished at every sample, but the failure bound is too weak to refute"
    };
    Ok(FrobeniusCertificate {
        verdict: if refuted { Verdict::NotFrobenius } else { Verdict::Inconclusive },
        mode,
        witness: None,
        refutation: Some(Refutation::Sampled {
            samples,
            max_height,
            failure_bound: bound,
            note: note.into(),
        }),
    })
}

/// The map `Phi_l = (id (x) nu m)(coev' (x) id) : A -> *A` and its checks.
#[derive(Clone, Debug)]
pub struct ModuleIsoCheck {
    pub phi: Matrix,
    pub report: ValidationReport,
}

impl ModuleIsoCheck {
    /// Invertible, equivariant and left `A`-linear.
    pub fn is_iso(&self) -> bool {
        self.report.passed()
    }
}

/// Builds `Phi_l` and checks that it is an isomorphism of left `A`-modules
/// `A -> *A`, where `a` acts on `*A` by `(a.f)(x) = f(x a)`.
pub fn module_iso_check(a: &AlgObj, nu: &[Rational]) -> Result<ModuleIsoCheck> {
    let d = a.dim();
    if nu.len() != d {
        return Err(Error::Shape("functional length differs from the algebra dimension".into()));
    }
    let duals = dual_obj(a.carrier())?;
    let id = Matrix::identity(d);
    let p = pairing_row(a, nu);
    let phi = &id.kron(&p) * &duals.coev_prime.matrix().kron(&id);

    let right_dual = &duals.right;
    // lambda(e_a (x) f) = R_a^T f
    let mut lambda = Matrix::zeros(d, d * d);
    for x in 0..d {
        let act = a.right_mult(x).transpose();
        for f in 0..d {
            for r in 0..d {
                let v = act.get(r, f);
                if !v.is_zero() {
                    lambda.set(r, x * d + f, v.clone());
                }
            }
        }
    }
    let mut report = ValidationReport::new();
    report.record("Phi_l equivariant", is_morphism(a.carrier(), right_dual, &phi));
    report.record(
        "left action on *A equivariant",
        is_morphism(&a.carrier().tensor(right_dual)?, right_dual, &lambda),
    );
    report.record(
        "Phi_l left A-linear",
        &lambda * &id.kron(&phi) == &phi * a.mult(),
    );
    report.record("Phi_l invertible", phi.inverse().is_some());
    Ok(ModuleIsoCheck { phi, report })
}

/// Largest `H`-stable subspace of `ker nu` closed under multiplication from
/// the given side(s).
pub fn largest_ideal_in_kernel(a: &AlgObj, nu: &[Rational], side: Side) -> Result<Subspace> {
    let d = a.dim();
    if nu.len() != d {
        return Err(Error::Shape("functional length differs from the algebra dimension".into()));
    }
    let mut maps: Vec<Matrix> = a.carrier().blocks().to_vec();
    if side.has_left() {
        maps.extend((0..d).map(|k| a.left_mult(k)));
    }
    if side.has_right() {
        maps.extend((0..d).map(|k| a.right_mult(k)));
    }
    let mut k = Subspace::from_columns(&Matrix::row_vector(nu.to_vec()).kernel_basis());
    loop {
        let next = maps
            .iter()
            .fold(k.clone(), |acc, f| acc.intersection(&k.preimage(f)));
        if next == k {
            return Ok(k);
        }
        k = next;
    }
}

/// The three equivalent characterizations of a Frobenius form: Gram
/// invertibility, `Phi_l` a module isomorphism, no nonzero left ideal in
/// `ker nu`.
pub fn frobenius_form_predicates(a: &AlgObj, nu: &[Rational]) -> Result<[bool; 3]> {
    require_invariant(a, nu)?;
    let gram = gram_matrix(a, nu).inverse().is_some();
    let iso = module_iso_check(a, nu)?.is_iso();
    let ideal = largest_ideal_in_kernel(a, nu, Side::Left)?.dim() == 0;
    Ok([gram, iso, ideal])
}
