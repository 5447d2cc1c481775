use std::collections::BTreeMap;

use proptest::prelude::*;

use pga::autodiff::{derivative, gradient, DualNumber, DualScalar, Expr, MultiDualScalar};
use pga::kernel::{pga2, pga3, Multivector};

/// Smooth unary building blocks, each defined on all of R.
#[derive(Debug, Clone, Copy)]
enum Unary {
    Sin,
    Cos,
    Exp,
    Cube,
    Soft,
}

impl Unary {
    fn apply<D: DualNumber>(self, x: D) -> D {
        match self {
            Unary::Sin => x.sin(),
            Unary::Cos => x.cos(),
            Unary::Exp => (x * D::constant(0.3)).exp(),
            Unary::Cube => x.powu(3) * D::constant(0.2),
            Unary::Soft => (x.clone() * x + D::constant(1.0)).try_sqrt().unwrap(),
        }
    }
}

fn unary() -> impl Strategy<Value = Unary> {
    prop_oneof![
        Just(Unary::Sin),
        Just(Unary::Cos),
        Just(Unary::Exp),
        Just(Unary::Cube),
        Just(Unary::Soft),
    ]
}

fn compose(chain: &[Unary], x: DualScalar) -> DualScalar {
    chain.iter().fold(x, |acc, f| f.apply(acc))
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}

proptest! {
    #[test]
    fn chain_rule(chain in prop::collection::vec(unary(), 2..6), x in -2.0..2.0f64) {
        let (outer, inner) = chain.split_last().unwrap();
        let g = compose(inner, DualScalar::variable(x));
        let df = derivative(|y| outer.apply(y), g.re);
        let whole = derivative(|y| compose(&chain, y), x);
        prop_assert!(close(whole, df * g.du, 1e-12));
    }

    #[test]
    fn product_and_quotient_rules(a in -3.0..3.0f64, da in -3.0..3.0f64, b in 0.5..3.0f64, db in -3.0..3.0f64) {
        let (x, y) = (DualScalar::new(a, da), DualScalar::new(b, db));
        prop_assert_eq!((x * y).du, a * db + da * b);
        let q = x.checked_div(&y).unwrap();
        prop_assert!(close(q.du, (da * b - a * db) / (b * b), 1e-14));
    }

    #[test]
    fn multi_dual_directions_are_independent(x in prop::array::uniform3(-2.0..2.0f64)) {
        let g = gradient(|v| v[0].clone() * v[1].clone() + v[2].sin() * v[0].clone(), &x);
        prop_assert!(close(g[0], x[1] + x[2].sin(), 1e-14));
        prop_assert!(close(g[1], x[0], 1e-14));
        prop_assert!(close(g[2], x[2].cos() * x[0], 1e-14));
        // each direction is nilpotent
        let v = MultiDualScalar::variables(&x);
        let sq = v[0].clone() * v[0].clone();
        prop_assert_eq!(sq.du[0], 2.0 * x[0]);
        prop_assert_eq!(sq.du[1], 0.0);
    }

    #[test]
    fn payloads_add_linearly(a in -2.0..2.0f64, u in prop::collection::vec(-1.0..1.0f64, 3), w in prop::collection::vec(-1.0..1.0f64, 3)) {
        let x = MultiDualScalar::new(a, u.clone());
        let y = MultiDualScalar::new(a, w.clone());
        let s = x + y;
        for i in 0..3 {
            prop_assert_eq!(s.du[i], u[i] + w[i]);
        }
    }

    #[test]
    fn dual_numbers_embed_as_scalar_plus_pseudoscalar(
        a in -3.0..3.0f64, b in -3.0..3.0f64, c in -3.0..3.0f64, d in -3.0..3.0f64
    ) {
        for alg in [pga2(), pga3()] {
            let i = Multivector::pseudoscalar(&alg);
            let x = Multivector::scalar(&alg, a) + &i * b;
            let y = Multivector::scalar(&alg, c) + &i * d;
            let p = &x * &y;
            let q = DualScalar::new(a, b) * DualScalar::new(c, d);
            prop_assert_eq!(p.scalar_part(), q.re);
            prop_assert_eq!(p.pseudoscalar_part(), q.du);
            prop_assert_eq!((&i * &i).max_abs(), 0.0);
            let s = &x + &y;
            let t = DualScalar::new(a, b) + DualScalar::new(c, d);
            prop_assert_eq!((s.scalar_part(), s.pseudoscalar_part()), (t.re, t.du));
        }
    }

    #[test]
    fn expression_gradient_matches_closures(x in -2.0..2.0f64, y in 0.5..2.0f64) {
        let e = Expr::parse("x^2*y + sin(x*y) - ln(y)").unwrap();
        let point = BTreeMap::from([("x".to_owned(), x), ("y".to_owned(), y)]);
        let g = e.gradient_at(&point).unwrap();
        prop_assert_eq!(g.variables.clone(), vec!["x".to_owned(), "y".to_owned()]);
        prop_assert!(close(g.gradient[0], 2.0 * x * y + y * (x * y).cos(), 1e-13));
        prop_assert!(close(g.gradient[1], x * x + x * (x * y).cos() - 1.0 / y, 1e-13));
    }
}
