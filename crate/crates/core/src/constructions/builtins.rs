//! Named algebras addressable from the command line.

use crate::algebra::AlgObj;
use crate::error::{Error, Result};
use crate::exactla::{q, Matrix};
use crate::filtration::{FilteredAlg, FilteredObj, GradedAlg};
use crate::repcat::Obj;

use super::clifford::{clifford_algebra, exterior_algebra, BilinearFormData, MAX_GENERATORS};
use super::representing::{etingof_ostrik_min, representing_algebra};
use super::small::{deformed_poly, matrix_frobenius, truncated_poly, upper_triangular_2, vec_hopf};

/// Name patterns accepted by [`builtin`].
pub const BUILTIN_PATTERNS: &[&str] = &[
    "exterior:n",
    "clifford:n:identity",
    "truncpoly:n",
    "deformed-truncpoly:n",
    "matn:n",
    "dual-numbers",
    "upper-triangular-2",
    "etingof-ostrik-min",
];

/// A representative instance of every pattern.
pub fn builtin_corpus() -> Vec<&'static str> {
    vec![
        "exterior:1",
        "exterior:2",
        "exterior:3",
        "clifford:1:identity",
        "clifford:2:identity",
        "clifford:3:identity",
        "truncpoly:1",
        "truncpoly:3",
        "deformed-truncpoly:3",
        "matn:1",
        "matn:2",
        "dual-numbers",
        "upper-triangular-2",
        "etingof-ostrik-min",
    ]
}

#[derive(Clone, Debug)]
pub struct Builtin {
    pub algebra: AlgObj,
    /// The natural filtration; the trivial one `F(0) = A` when none is meaningful.
    pub filtered: FilteredAlg,
}

fn by_grading(g: &GradedAlg) -> Result<Builtin> {
    let a = g.to_algebra().clone();
    let f = FilteredObj::by_degree(a.carrier(), &g.degrees())?;
    Ok(Builtin {
        filtered: FilteredAlg::new(a.clone(), f)?,
        algebra: a,
    })
}

fn unfiltered(a: AlgObj) -> Result<Builtin> {
    let f = FilteredObj::trivial(a.carrier());
    Ok(Builtin {
        filtered: FilteredAlg::new(a.clone(), f)?,
        algebra: a,
    })
}

fn unknown(name: &str) -> Error {
    Error::parse(
        "builtin",
        format!("unknown name {name:?}; available: {}", BUILTIN_PATTERNS.join(", ")),
    )
}

fn size(name: &str, s: &str, lo: usize, hi: usize) -> Result<usize> {
    let n: usize = s.parse().map_err(|_| unknown(name))?;
    if n < lo || n > hi {
        return Err(Error::parse("builtin", format!("{name}: size must lie in {lo}..={hi}")));
    }
    Ok(n)
}

pub fn builtin(name: &str) -> Result<Builtin> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["exterior", n] => {
            let n = size(name, n, 0, MAX_GENERATORS)?;
            by_grading(&exterior_algebra(&Obj::trivial(&vec_hopf(), n))?.graded)
        }
        ["clifford", n, "identity"] => {
            let n = size(name, n, 0, MAX_GENERATORS)?;
            let w = Obj::trivial(&vec_hopf(), n);
            let b = BilinearFormData::new(w.clone(), Matrix::identity(n))?;
            let cl = clifford_algebra(&w, &b)?;
            Ok(Builtin {
                algebra: cl.filtered.algebra().clone(),
                filtered: cl.filtered,
            })
        }
        ["truncpoly", n] => by_grading(&truncated_poly(size(name, n, 1, 64)?)?),
        ["deformed-truncpoly", n] => {
            let f = deformed_poly(size(name, n, 1, 64)?, &q(1))?;
            Ok(Builtin {
                algebra: f.algebra().clone(),
                filtered: f,
            })
        }
        ["matn", n] => {
            let n = size(name, n, 1, 4)?;
            unfiltered(matrix_frobenius(n, &Obj::trivial(&vec_hopf(), n))?)
        }
        ["dual-numbers"] => by_grading(&truncated_poly(2)?),
        ["upper-triangular-2"] => unfiltered(upper_triangular_2()),
        ["etingof-ostrik-min"] => unfiltered(representing_algebra(&etingof_ostrik_min())?.algebra),
        _ => Err(unknown(name)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_algebra;
    use crate::filtration::check_filtered_algebra;

    #[test]
    fn corpus_is_valid() {
        for name in builtin_corpus() {
            let b = builtin(name).unwrap();
            assert!(check_algebra(&b.algebra).passed(), "{name}");
            assert!(check_filtered_algebra(&b.filtered).passed(), "{name}");
        }
    }

    #[test]
    fn unknown_names() {
        assert!(matches!(builtin("exterior"), Err(Error::Parse { .. })));
        assert!(matches!(builtin("matn:9"), Err(Error::Parse { .. })));
        assert!(matches!(builtin("nope"), Err(Error::Parse { .. })));
    }
}
