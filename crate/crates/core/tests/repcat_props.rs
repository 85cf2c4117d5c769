mod common;

use common::{categories, combo, object};
use frobcat::exactla::Matrix;
use frobcat::repcat::{braiding, dual_obj, hom_space, is_morphism, snake_identities, validate_hopf, Mor, Obj};
use proptest::prelude::*;

fn picks() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..3, 1..=2)
}

fn random_mor(x: &Obj, y: &Obj, coeffs: &[i64]) -> Mor {
    let basis = hom_space(x, y).unwrap();
    Mor::new(x.clone(), y.clone(), combo(&basis, coeffs, y.dim(), x.dim())).unwrap()
}

#[test]
fn test_categories_are_triangular_hopf_algebras() {
    for (name, h, blocks) in categories() {
        let rep = validate_hopf(&h);
        assert!(rep.passed(), "{name}: {:?}", rep.failures());
        for b in blocks {
            assert!(b.validate().passed(), "{name}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn constructed_maps_are_morphisms(cat in 0usize..5, px in picks(), py in picks()) {
        let (x, y) = (object(cat, &px), object(cat, &py));
        let c = braiding(&x, &y).unwrap();
        prop_assert!(c.is_equivariant());
        let d = dual_obj(&x).unwrap();
        for m in [&d.ev, &d.coev, &d.ev_prime, &d.coev_prime] {
            prop_assert!(is_morphism(m.domain(), m.codomain(), m.matrix()));
        }
        prop_assert!(snake_identities(&x, &d).passed());
    }

    #[test]
    fn braiding_is_symmetric(cat in 0usize..5, px in picks(), py in picks()) {
        let (x, y) = (object(cat, &px), object(cat, &py));
        let cxy = braiding(&x, &y).unwrap();
        let cyx = braiding(&y, &x).unwrap();
        let round = cyx.compose(&cxy).unwrap();
        prop_assert_eq!(round.matrix(), &Matrix::identity(x.dim() * y.dim()));
    }

    #[test]
    fn braiding_is_natural(
        cat in 0usize..5,
        p in prop::collection::vec(picks(), 4),
        coeffs in prop::collection::vec(-2i64..=2, 6),
    ) {
        let (x, y, x2, y2) = (object(cat, &p[0]), object(cat, &p[1]), object(cat, &p[2]), object(cat, &p[3]));
        let f = random_mor(&x, &x2, &coeffs);
        let g = random_mor(&y, &y2, &coeffs[3..]);
        let lhs = braiding(&x2, &y2).unwrap().compose(&f.tensor(&g).unwrap()).unwrap();
        let rhs = g.tensor(&f).unwrap().compose(&braiding(&x, &y).unwrap()).unwrap();
        prop_assert_eq!(lhs.matrix(), rhs.matrix());
    }

    #[test]
    fn hexagons(cat in 0usize..5, p in prop::collection::vec(picks(), 3)) {
        let (x, y, z) = (object(cat, &p[0]), object(cat, &p[1]), object(cat, &p[2]));
        let id = |o: &Obj| Mor::identity(o);
        let yz = y.tensor(&z).unwrap();
        let lhs = braiding(&x, &yz).unwrap();
        let rhs = id(&y)
            .tensor(&braiding(&x, &z).unwrap())
            .unwrap()
            .compose(&braiding(&x, &y).unwrap().tensor(&id(&z)).unwrap())
            .unwrap();
        prop_assert_eq!(lhs.matrix(), rhs.matrix());
        let xy = x.tensor(&y).unwrap();
        let lhs = braiding(&xy, &z).unwrap();
        let rhs = braiding(&x, &z)
            .unwrap()
            .tensor(&id(&y))
            .unwrap()
            .compose(&id(&x).tensor(&braiding(&y, &z).unwrap()).unwrap())
            .unwrap();
        prop_assert_eq!(lhs.matrix(), rhs.matrix());
    }
}
