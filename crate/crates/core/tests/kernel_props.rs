use std::sync::Arc;

use proptest::prelude::*;

use pga::kernel::{pga2, pga3, Algebra, AlgebraDescriptor, Blade, Multivector};

const TOL: f64 = 1e-12;

fn algebra() -> impl Strategy<Value = Arc<Algebra>> {
    prop_oneof![Just(pga2()), Just(pga3())]
}

fn coeffs(alg: &Arc<Algebra>) -> impl Strategy<Value = Multivector> {
    let alg = Arc::clone(alg);
    prop::collection::vec(-1.0..1.0f64, alg.blade_count())
        .prop_map(move |c| Multivector::from_coeffs(&alg, c).unwrap())
}

fn triple() -> impl Strategy<Value = (Multivector, Multivector, Multivector)> {
    algebra().prop_flat_map(|alg| (coeffs(&alg), coeffs(&alg), coeffs(&alg)))
}

fn vector(alg: &Arc<Algebra>) -> impl Strategy<Value = Multivector> {
    coeffs(alg).prop_map(|m| m.grade_part(1).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn geometric_product_is_associative((x, y, z) in triple()) {
        let l = &(&x * &y) * &z;
        let r = &x * &(&y * &z);
        prop_assert!(l.max_diff(&r) < TOL);
    }

    #[test]
    fn products_are_bilinear((x, y, z) in triple(), s in -3.0..3.0f64) {
        let sum = &y + &z;
        prop_assert!((&x * &sum).max_diff(&(&(&x * &y) + &(&x * &z))) < TOL);
        prop_assert!((&x ^ &sum).max_diff(&(&(&x ^ &y) + &(&x ^ &z))) < TOL);
        prop_assert!((&x | &sum).max_diff(&(&(&x | &y) + &(&x | &z))) < TOL);
        prop_assert!((&x & &sum).max_diff(&(&(&x & &y) + &(&x & &z))) < TOL);
        prop_assert!((&(&x * s) * &y).max_diff(&((&x * &y) * s)) < 4.0 * TOL);
    }

    #[test]
    fn wedge_of_vectors_is_antisymmetric(
        (a, b) in algebra().prop_flat_map(|alg| (vector(&alg), vector(&alg)))
    ) {
        prop_assert!((&a ^ &b).max_diff(&-(&b ^ &a)) == 0.0);
        prop_assert!((&a ^ &a).max_abs() == 0.0);
    }

    #[test]
    fn grade_parts_partition((x, _, _) in triple()) {
        let dim = x.algebra().dim();
        let mut sum = Multivector::zero(x.algebra());
        for k in 0..=dim {
            let part = x.grade_part(k).unwrap();
            for j in (0..=dim).filter(|j| *j != k) {
                prop_assert!(part.grade_part(j).unwrap().max_abs() == 0.0);
            }
            sum = sum + part;
        }
        prop_assert_eq!(sum, x);
    }

    #[test]
    fn reverse_is_anti_automorphism((x, y, _) in triple()) {
        let l = (&x * &y).reverse();
        let r = &y.reverse() * &x.reverse();
        prop_assert!(l.max_diff(&r) < TOL);
    }

    #[test]
    fn duality_round_trip_is_exact((x, _, _) in triple()) {
        prop_assert_eq!(x.poincare_dual().poincare_undual(), x.clone());
        prop_assert_eq!(x.poincare_undual().poincare_dual(), x.clone());
        let dim = x.algebra().dim();
        for k in 0..=dim {
            let d = x.grade_part(k).unwrap().poincare_dual();
            prop_assert!(d.grades().iter().all(|g| *g == dim - k));
        }
    }

    #[test]
    fn reflection_preserves_norms(
        (alg, t, x) in algebra().prop_flat_map(|alg| {
            let a = Arc::clone(&alg);
            (Just(alg), 0.0..std::f64::consts::TAU, coeffs(&a))
        }),
        d in -3.0..3.0f64,
        k in 1usize..4,
    ) {
        // unit euclidean plane or line with normal at angle t
        let dim = alg.dim();
        let n = Multivector::basis_vector(&alg, 1) * t.cos()
            + Multivector::basis_vector(&alg, 2) * t.sin()
            + Multivector::basis_vector(&alg, 0) * d;
        let k = k.min(dim);
        let x = x.grade_part(k).unwrap();
        let y = n.sandwich(&x).unwrap();
        let euclidean = x.euclidean_weight() > 1e-3;
        if euclidean {
            prop_assert!((y.norm() - x.norm()).abs() < TOL * (1.0 + x.norm()) * 10.0);
        }
        let ideal = x.grade_part(k).unwrap();
        let ideal: Multivector = (0..alg.blade_count())
            .filter(|i| i & 1 == 1)
            .fold(Multivector::zero(&alg), |m, i| m.with(Blade(i as u16), ideal.coeffs()[i]));
        let yi = n.sandwich(&ideal).unwrap();
        prop_assert!((yi.ideal_norm() - ideal.ideal_norm()).abs() < 10.0 * TOL);
    }
}

#[test]
fn signature_counts() {
    for n in 1..=4 {
        let d = AlgebraDescriptor::euclidean_pga(n).unwrap();
        let sq = d.squares();
        assert_eq!(sq.iter().filter(|s| **s == 1).count(), n);
        assert_eq!(sq.iter().filter(|s| **s == 0).count(), 1);
        assert_eq!(d.dim(), n + 1);
    }
}

#[test]
fn blade_grades() {
    let alg = pga3();
    for b in alg.blades() {
        assert_eq!(b.grade(), b.0.count_ones() as usize);
        assert!(b.index() < alg.blade_count());
    }
}
