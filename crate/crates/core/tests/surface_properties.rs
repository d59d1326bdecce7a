mod common;

use common::*;
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;
use surfsat::config::{Divisor, NodeSet};
use surfsat::elliptic::{catalog, is_integral, ECPoint, TorsionStatus, WeierstrassCurve};
use surfsat::hironaka::{hironaka_build, HironakaInput};
use surfsat::lattice::{ClassRecord, NsLattice};
use surfsat::linalg::{is_negative_definite, SymmetricMatrix};
use surfsat::mumford::ContractionContext;
use surfsat::rational::int;
use surfsat::saturation::{
    affinisation_dimension, apply_plan, is_saturated, saturation_plan, CompactifiedSurface, SaturationError,
};

fn random_surface(seed: u64) -> CompactifiedSurface {
    let mut r = rng(seed);
    let n = r.gen_range(1..=8);
    let m = random_symmetric_int(&mut r, n, -3, 2, true);
    let cfg = configuration(m);
    let boundary: NodeSet = (0..n).filter(|_| r.gen_bool(0.6)).collect();
    let interior = cfg.all_nodes().difference(&boundary).copied().collect();
    CompactifiedSurface::with_parts(cfg, boundary, interior, r.gen_range(0..=1), vec![], false).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn saturation_is_idempotent(seed in any::<u64>()) {
        let s = random_surface(seed);
        let plan = saturation_plan(&s).unwrap();
        let sat = apply_plan(&s, &plan).unwrap();
        prop_assert!(is_saturated(&sat.surface).saturated);
        prop_assert!(saturation_plan(&sat.surface).unwrap().is_empty());
        prop_assert_eq!(sat.singular_points.len(), plan.d_minus.len());
        prop_assert_eq!(
            sat.surface.ambient.len() + plan.d_minus.iter().map(|c| c.len()).sum::<usize>(),
            s.ambient.len()
        );
    }

    #[test]
    fn isolated_points_only_add_to_the_plan(seed in any::<u64>(), extra in 1u32..4) {
        let s = random_surface(seed);
        let mut more = s.clone();
        more.isolated_boundary_points += extra;
        let (a, b) = (is_saturated(&s), is_saturated(&more));
        prop_assert!(!b.saturated);
        prop_assert_eq!(a.negative_definite_components, b.negative_definite_components);
    }

    #[test]
    fn affdim_is_total_on_saturated_surfaces(seed in any::<u64>()) {
        let s = random_surface(seed);
        let sat = apply_plan(&s, &saturation_plan(&s).unwrap()).unwrap().surface;
        match affinisation_dimension(&sat) {
            Ok(_) | Err(SaturationError::Inconsistent { .. }) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn projection_formula(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = r.gen_range(1..=4);
        let e = random_negative_definite(&mut r, k);
        let n = k + 2;
        let mut m = SymmetricMatrix::zeros(n);
        for i in 0..k {
            for j in i..k {
                m.set(i, j, e.get(i, j).clone());
            }
        }
        for i in k..n {
            m.set(i, i, int(r.gen_range(-2..=2)));
            for j in 0..i {
                m.set(j, i, int(r.gen_range(0..=2)));
            }
        }
        let cfg = configuration(m);
        let ctx = ContractionContext::new(&cfg, (0..k).collect()).unwrap();
        let (d, d2) = (Divisor::prime(k), Divisor::prime(k + 1));
        let lhs = ctx.induced_product(&d, &d2).unwrap();
        prop_assert_eq!(&lhs, &cfg.intersection_number(&ctx.pullback(&d).unwrap(), &d2).unwrap());
        prop_assert_eq!(lhs, ctx.induced_product(&d2, &d).unwrap());
    }

    #[test]
    fn blowups_keep_hodge_signature_and_integral_genus(
        mults in proptest::collection::vec((0i64..=3, 0i64..=3), 0..=12)
    ) {
        let mut lattice = NsLattice::projective_plane();
        let mut tracked = vec![ClassRecord::new("Q", vec![2], 0), ClassRecord::new("C", vec![3], 1)];
        for (a, b) in mults {
            let (next, updated) = lattice.blowup(&[(tracked[0].clone(), a), (tracked[1].clone(), b)]).unwrap();
            lattice = next;
            tracked = updated;
            let rho = lattice.rank();
            let s = lattice.inertia();
            prop_assert_eq!((s.positive, s.negative, s.zero), (1, rho - 1, 0));
            let e = lattice.basis_class(rho - 1);
            prop_assert_eq!(lattice.pairing(&e, &e), -1);
            prop_assert_eq!(lattice.pairing(&e, lattice.canonical()), -1);
            // K is characteristic, so c·(c + K) is even and the arithmetic genus is an integer
            for c in &tracked {
                prop_assert!(lattice.adjunction_genus(&c.class).is_integer());
            }
        }
    }

    #[test]
    fn group_law_axioms(i in -6i64..=6, j in -6i64..=6, k in -6i64..=6) {
        let (c, p) = catalog::rank_one();
        let (a, b, d) = (c.scalar_mul(i, &p).unwrap(), c.scalar_mul(j, &p).unwrap(), c.scalar_mul(k, &p).unwrap());
        prop_assert_eq!(c.add(&a, &b).unwrap(), c.add(&b, &a).unwrap());
        prop_assert_eq!(
            c.add(&c.add(&a, &b).unwrap(), &d).unwrap(),
            c.add(&a, &c.add(&b, &d).unwrap()).unwrap()
        );
        prop_assert_eq!(c.negate(&c.negate(&a).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(c.scalar_mul(i + j, &p).unwrap(), c.add(&a, &b).unwrap());
        prop_assert_eq!(c.add(&a, &c.negate(&a).unwrap()).unwrap(), ECPoint::Infinity);
    }

    /// Nagell–Lutz on `y² = x³ + ax + b`: torsion points are integral, so non-integral points are not torsion.
    #[test]
    fn torsion_agrees_with_nagell_lutz(a in -6i64..=6, x in -4i64..=4, y in 0i64..=8) {
        // choose b so that (x, y) lies on the curve
        let b = y * y - x * x * x - a * x;
        let curve = WeierstrassCurve::from_i64([0, 0, 0, a, b]);
        prop_assume!(curve.is_ok());
        let curve = curve.unwrap();
        let p = ECPoint::from_i64(x, y);
        let status = curve.is_torsion(&p).unwrap();
        for m in 1..=12 {
            let q = curve.scalar_mul(m, &p).unwrap();
            if !is_integral(&q) {
                prop_assert_eq!(status, TorsionStatus::NonTorsion);
            }
        }
        if let TorsionStatus::Torsion(order) = status {
            prop_assert_eq!(curve.scalar_mul(i64::from(order), &p).unwrap(), ECPoint::Infinity);
            for m in 1..i64::from(order) {
                let q = curve.scalar_mul(m, &p).unwrap();
                prop_assert!(!q.is_infinity());
                prop_assert!(is_integral(&q));
            }
        }
    }

    #[test]
    fn hironaka_boundary_numerics(n in 1usize..=14, start in -20i64..=20) {
        let (c, p) = catalog::rank_one();
        let ks: Vec<i64> = (0..n as i64).map(|i| start + i).filter(|&k| k != 0).collect();
        prop_assume!(!ks.is_empty());
        let pts = catalog::multiples(&c, &p, &ks);
        let b = hironaka_build(&HironakaInput::unit(c, pts)).unwrap();
        prop_assert_eq!(b.self_intersection(), 9 - ks.len() as i64);
        let gram = b.surface.ambient.subset_gram(&b.surface.boundary).unwrap();
        prop_assert_eq!(is_negative_definite(&gram), ks.len() >= 10);
        prop_assert!(b.lattice.adjunction_genus(&b.boundary_class.class) == int(1));
    }
}

#[test]
fn nine_point_surfaces_have_zero_boundary_square() {
    let (c, p) = catalog::rank_one();
    for start in [-12, -4, 1, 7] {
        let ks: Vec<i64> = (start..start + 10).filter(|&k| k != 0).take(9).collect();
        let b = hironaka_build(&HironakaInput::unit(c.clone(), catalog::multiples(&c, &p, &ks))).unwrap();
        assert_eq!(b.self_intersection(), 0);
        assert!(is_saturated(&b.surface).saturated);
        let sum: i64 = ks.iter().sum();
        assert_eq!(b.unit_obstruction.found(), sum != 0, "{ks:?}");
        assert!(b.obstruction.sum().is_infinity() == sum.is_zero());
    }
}
