use num_rational::Ratio;
use proptest::prelude::*;
use spingeo_core::blocks::{akhmedov_park_y, park_z, BlockSpec};
use spingeo_core::geography::{
    negative_strip, ppx_ratio, solve_positive_region, CompositionParams, SearchBounds, Solve,
    VChoice, WedgeParams,
};
use spingeo_core::grp::AbelianType;
use spingeo_core::invariant::{
    check_consistency, chern_from_euler_sigma, euler_sigma_from_chern, spin_admissible, GeoPoint,
    Violation,
};
use spingeo_core::recipe::Recipe;
use spingeo_core::surgery::{doubled_published, horikawa_strip, HorikawaVariant};
use spingeo_core::topo::{prototype_name, Family};

fn groups() -> Vec<AbelianType> {
    vec![
        AbelianType::trivial(),
        AbelianType::z(),
        AbelianType::zz(),
        AbelianType::cyclic(3),
        AbelianType::z_cyclic(5),
        AbelianType::cyclic_cyclic(3, 3),
    ]
}

proptest! {
    #[test]
    fn chern_roundtrip(e in -200i64..=200, sigma in -200i64..=200) {
        match chern_from_euler_sigma(e, sigma) {
            Ok((c, chi)) => prop_assert_eq!(euler_sigma_from_chern(c, chi), (e, sigma)),
            Err(_) => prop_assert!((e + sigma) % 4 != 0),
        }
    }

    #[test]
    fn doubled_horikawa_points_admissible(kp in 1i64..=10, n in 1i64..=10) {
        let plain = GeoPoint::new(16 * kp + 8 * n - 16, 8 * kp + n - 2);
        prop_assert!(spin_admissible(plain).admissible);
        prop_assert!(spin_admissible(GeoPoint::new(16 * kp + 8 * n - 8, 8 * kp + n + 5)).admissible);
        prop_assert!(spin_admissible(doubled_published(kp, n)).admissible);
    }

    #[test]
    fn composition_ratio_bounds(k in 1i64..=200, x in 1i64..=4, g in 2i64..=4) {
        let p = CompositionParams { k, x, g }.point().unwrap();
        if p.sigma() > 0 {
            let r = Ratio::new(p.c as i128, p.chi as i128);
            prop_assert!(r > Ratio::from_integer(8));
            prop_assert!(r < ppx_ratio() + Ratio::new(1, 1000));
        }
    }
}

#[test]
fn strip_grid_with_prototypes() {
    for group in groups() {
        for cert in negative_strip(&group, 5, 4).unwrap() {
            assert!(cert.verified, "{} {}", group, cert.recipe_id);
            assert_eq!(cert.point.sigma() % 16, 0);
            let m = cert.recipe.evaluate().unwrap();
            let Recipe::EllipticStrip { s, n, .. } = cert.recipe else {
                unreachable!()
            };
            assert_eq!(cert.point.sigma(), -16 * s);
            let proto = prototype_name(&m.chars, &group, Family::EllipticStrip { s, n });
            match group.rank() {
                2 => assert!(proto.is_err()),
                1 if group.torsion().count() > 0 => assert!(proto.is_err()),
                _ => assert_eq!(proto.unwrap().invariants(), (m.chars.e, m.chars.sigma)),
            }
        }
    }
}

#[test]
fn horikawa_strip_points() {
    for kp in 1..=3 {
        for n in 2..=4 {
            let m = horikawa_strip(kp, n, &AbelianType::cyclic(7), HorikawaVariant::Plain).unwrap();
            assert_eq!(
                m.point().unwrap(),
                GeoPoint::new(16 * kp + 8 * n - 16, 8 * kp + n - 2)
            );
            assert!(
                prototype_name(&m.chars, &m.abelian(), Family::HorikawaStrip { kp, n }).is_ok()
            );
            let d =
                horikawa_strip(kp, n, &AbelianType::trivial(), HorikawaVariant::Doubled).unwrap();
            assert_eq!(
                d.point().unwrap(),
                GeoPoint::new(16 * kp + 8 * n - 8, 8 * kp + n + 5)
            );
            assert!(!d.warnings.is_empty());
        }
    }
}

#[test]
fn product_template_is_simply_connected() {
    for n in 2..=8 {
        let y = akhmedov_park_y(n).unwrap();
        assert_eq!(y.abelian(), AbelianType::trivial());
        assert_eq!((y.chars.e, y.chars.sigma), (4 * n - 4, 0));
        assert_eq!(y.point().unwrap(), GeoPoint::new(8 * n - 8, n - 1));
    }
}

#[test]
fn cusp_block_signature_flagged_once() {
    for g in 2..=4 {
        let z = park_z(g).unwrap();
        let stated = spingeo_core::blocks::park_z_stated(g);
        let report = check_consistency(&stated, Some(z.point().unwrap()));
        assert_eq!(
            report.violations.len(),
            1,
            "g = {g}: {:?}",
            report.violations
        );
        assert!(matches!(
            report.violations[0],
            Violation::SignatureMismatch { .. }
        ));
    }
}

#[test]
fn solver_soundness_small_batch() {
    let bounds = SearchBounds::default();
    let park = bounds.compositions[0];
    for (m, v, group) in [
        (1, VChoice::Strip { s: 3, n: 4 }, AbelianType::z()),
        (
            3,
            VChoice::DoubleHorikawaElliptic { kp: 2, s: 1 },
            AbelianType::cyclic(5),
        ),
        (
            2,
            VChoice::HorikawaElliptic { kp: 4, s: 7 },
            AbelianType::cyclic_cyclic(3, 3),
        ),
    ] {
        let w = WedgeParams {
            park,
            m,
            v,
            group: group.clone(),
        };
        let p = w.point().unwrap();
        let Solve::Found(cert, _) = solve_positive_region(p.c, p.chi, &group, &bounds).unwrap()
        else {
            panic!("no solution for {}", w.id());
        };
        assert!(cert.verified);
        let again = cert.recipe.evaluate().unwrap();
        assert_eq!(again.point().unwrap(), p);
        assert_eq!(again.abelian(), group);
    }
}

#[test]
fn block_specs_build() {
    for spec in [
        BlockSpec::Elliptic {
            s: 2,
            knotted: true,
        },
        BlockSpec::FourTorus,
        BlockSpec::LuttingerBlock { n: 3 },
        BlockSpec::AkhmedovParkY { n: 3 },
        BlockSpec::Horikawa { kp: 2 },
        BlockSpec::Ppx { x: 2, g: 2 },
        BlockSpec::ParkZ { g: 3 },
    ] {
        let m = spec.build().unwrap();
        assert!(m.check_words().is_ok(), "{spec}");
    }
}
