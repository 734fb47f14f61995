use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use weighted_minimal::geometry::{
    minimality_report, weighted_mean_curvature, DensityField, Domain, ParametricSurface,
};
use weighted_minimal::mesh_io::{format_significant, tessellate};
use weighted_minimal::profile::RandomSmooth;
use weighted_minimal::ruled::{
    integrate_from_closed_form, make_cylindrical_minimal, max_residuals, random_noncylindrical,
    CylindricalFamilyParams,
};
use weighted_minimal::translation::{build_translation, make_translation_minimal, pde_residual};
use weighted_minimal::Vec3;

fn family(a: f64, angle: f64) -> CylindricalFamilyParams {
    CylindricalFamilyParams::new(a, angle.cos(), angle.sin()).unwrap()
}

// Director angles with |b| >= sin(0.2), away from the vertical-plane limit.
fn director_angle() -> impl Strategy<Value = f64> {
    prop_oneof![-1.37..1.37f64, 1.77..4.51f64]
}

fn sup_hphi(s: &ParametricSurface, density: &DensityField, n: usize) -> f64 {
    minimality_report(s, density, n, n, 1.0)
        .unwrap()
        .max_abs_hphi
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn family_members_are_minimal(a in 0.1..8.0f64, angle in director_angle()) {
        let s = make_cylindrical_minimal(&family(a, angle), Domain::new((-1.0, 1.0), (-2.0, 2.0)))
            .unwrap()
            .to_parametric();
        prop_assert!(sup_hphi(&s, &DensityField::ez(), 15) < 1e-8);
    }

    #[test]
    fn hphi_invariant_under_z_rotation_and_shift(
        a in 0.25..4.0f64,
        angle in director_angle(),
        rot in -3.2..3.2f64,
        shift in prop::array::uniform3(-5.0..5.0f64),
    ) {
        let ez = DensityField::ez();
        let dom = Domain::new((-1.0, 1.0), (-1.0, 1.0));
        let mut rng = ChaCha8Rng::seed_from_u64(a.to_bits());
        let surfaces = [
            make_cylindrical_minimal(&family(a, angle), dom).unwrap().to_parametric(),
            random_noncylindrical(&mut rng).unwrap().to_parametric(),
        ];
        for s in surfaces {
            let moved = s.rotated_z(rot, Vec3::from(shift));
            for (u, v) in dom.grid(5, 5) {
                let h0 = weighted_mean_curvature(&s, &ez, u, v).unwrap().h_phi;
                let h1 = weighted_mean_curvature(&moved, &ez, u, v).unwrap().h_phi;
                prop_assert!((h0 - h1).abs() < 1e-10, "{h0} vs {h1}");
            }
        }
    }

    #[test]
    fn swapping_parameters_negates_hphi(seed in any::<u64>(), u in -0.9..0.9f64, v in -0.9..0.9f64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_noncylindrical(&mut rng).unwrap().to_parametric();
        for density in [DensityField::ez(), DensityField::gaussian()] {
            let h = weighted_mean_curvature(&s, &density, u, v).unwrap();
            let f = weighted_mean_curvature(&s.swapped(), &density, v, u).unwrap();
            prop_assert!((h.h + f.h).abs() < 1e-9 * h.h.abs().max(1.0));
            prop_assert!((h.h_phi + f.h_phi).abs() < 1e-9 * h.h_phi.abs().max(1.0));
        }
    }

    // Minimality of a ruled surface is equivalent to vanishing coefficient residuals.
    #[test]
    fn grid_hphi_and_residuals_agree(seed in any::<u64>(), a in 0.25..4.0f64, angle in director_angle()) {
        let ez = DensityField::ez();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dom = Domain::new((-1.0, 1.0), (-1.0, 1.0));
        for rs in [
            random_noncylindrical(&mut rng).unwrap(),
            make_cylindrical_minimal(&family(a, angle), dom).unwrap(),
        ] {
            let hphi = sup_hphi(&rs.to_parametric(), &ez, 17);
            let resid = max_residuals(&rs, &ez, 17, 0.0).unwrap().iter().sum::<f64>();
            prop_assert_eq!(hphi < 1e-8, resid < 1e-8, "hphi {} residual {}", hphi, resid);
        }
    }

    #[test]
    fn ode_tracks_closed_form(a in 0.25..4.0f64, angle in director_angle(), u_end in prop_oneof![-1.0..-0.1f64, 0.1..1.0f64]) {
        let p = family(a, angle);
        let sol = integrate_from_closed_form(p.a, p.b, p.c, u_end, 1e-3).unwrap();
        let d = sol.closed_form_deviation(p.a).unwrap();
        prop_assert!(d.position < 1e-6, "{d:?}");
        prop_assert!(sol.speed_drift() < 1e-6);
        prop_assert!(sol.plane_drift() < 1e-6);
    }

    #[test]
    fn pde_residual_matches_hphi(seed in any::<u64>(), u in -1.0..1.0f64, v in -1.0..1.0f64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dom = Domain::new((-1.0, 1.0), (-1.0, 1.0));
        let ts = build_translation(
            RandomSmooth::sample(&mut rng).to_profile(),
            RandomSmooth::sample(&mut rng).to_profile(),
            dom,
        )
        .unwrap();
        let (g, h) = (ts.g().eval(u), ts.h().eval(v));
        let w = (1.0 + g.d1 * g.d1 + h.d1 * h.d1).sqrt();
        let hphi = weighted_mean_curvature(&ts.to_parametric(), &DensityField::ez(), u, v).unwrap().h_phi;
        let r = pde_residual(&ts, u, v);
        prop_assert!((r - 2.0 * w.powi(3) * hphi).abs() < 1e-9 * r.abs().max(1.0), "{r}");
    }

    #[test]
    fn closed_form_translation_is_minimal(c in -3.0..3.0f64, shift in -0.5..0.5f64, d in -2.0..2.0f64) {
        let ts = make_translation_minimal(c, shift, d, Domain::new((-1.0, 1.0), (-1.0, 1.0))).unwrap();
        prop_assert!(sup_hphi(&ts.to_parametric(), &DensityField::ez(), 11) < 1e-8);
    }

    #[test]
    fn csv_digits_round_trip(x in prop::num::f64::NORMAL) {
        let back: f64 = format_significant(x, 12).parse().unwrap();
        prop_assert!(((back - x) / x).abs() <= 5e-12);
        let back: f64 = format_significant(x, 9).parse().unwrap();
        prop_assert!(((back - x) / x).abs() <= 5e-9);
    }

    #[test]
    fn tessellation_counts(nu in 2usize..30, nv in 2usize..30) {
        let s = make_cylindrical_minimal(&family(1.0, 0.0), Domain::new((-1.0, 1.0), (-2.0, 2.0)))
            .unwrap()
            .to_parametric();
        let mesh = tessellate(&s, nu, nv, "prop").unwrap();
        prop_assert_eq!(mesh.vertices.len(), nu * nv);
        prop_assert_eq!(mesh.faces.len(), (nu - 1) * (nv - 1));
        prop_assert!(mesh.faces.iter().flatten().all(|&i| i < nu * nv));
    }
}
