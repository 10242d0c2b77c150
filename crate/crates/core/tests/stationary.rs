use proptest::prelude::*;
use singular_riemann::roots::{brent, RootOptions};
use singular_riemann::stationary::*;
use singular_riemann::{GasModel, GasState};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}

fn state_close(a: &GasState, b: &GasState, tol: f64) -> bool {
    rel(a.rho, b.rho) <= tol && rel(a.u, b.u) <= tol && rel(a.p, b.p) <= tol
}

/// `M^2 ((g-1) M^2 + 2) / (g M^2 + 1)^2`; the flux jump maps it by `(1 + k)`.
fn phi(m: f64, g: f64) -> f64 {
    let m2 = m * m;
    m2 * ((g - 1.0) * m2 + 2.0) / (g * m2 + 1.0).powi(2)
}

fn tight() -> RootOptions {
    RootOptions {
        abs_tol: 1e-15,
        rel_tol: 1e-15,
        max_iter: 400,
    }
}

fn phi_root(target: f64, g: f64, lo: f64, hi: f64) -> f64 {
    brent(|m| phi(m, g) - target, lo, hi, &tight()).unwrap()
}

fn coeffs() -> impl Strategy<Value = SourceCoefficients> {
    (-0.6f64..1.5, -0.5f64..1.0, -0.6f64..1.5).prop_map(|(a, b, c)| SourceCoefficients::new(a, b, c).unwrap())
}

fn upstream(model: GasModel) -> impl Strategy<Value = GasState> {
    (0.05f64..5.0, 0.02f64..6.0, 0.05f64..5.0).prop_map(move |(rho, m, p)| {
        let a = (model.gamma() * p / rho).sqrt();
        GasState::new(rho, m * a, p).unwrap()
    })
}

fn gas() -> impl Strategy<Value = GasModel> {
    (1.1f64..2.0).prop_map(|g| GasModel::new(g).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn forward_pairs_match_jump_and_oracle(
        (model, up) in gas().prop_flat_map(|m| (Just(m), upstream(m))),
        c in coeffs(),
    ) {
        let oracle = oracle_jump_solutions(&up, &c, &model);
        match forward_curve(&up, &c, &model) {
            Ok(pairs) => {
                for pair in pairs {
                    prop_assert!(pair.jump_residual(&model) <= 1e-10);
                    let rep = satisfies_criterion(&pair.left_state, &pair.right_state, &model);
                    prop_assert!(rep.criterion2);
                    prop_assert!(
                        oracle.iter().any(|s| state_close(s, &pair.right_state, 1e-8)),
                        "closed form {:?} not among oracle roots {:?}", pair.right_state, oracle
                    );
                }
            }
            Err(_) => {
                let admissible: Vec<_> = oracle
                    .iter()
                    .filter(|s| satisfies_criterion(&up, s, &model).criterion2)
                    .collect();
                prop_assert!(admissible.is_empty(), "oracle found {:?}", admissible);
            }
        }
    }

    #[test]
    fn backward_inverts_forward(
        (model, up) in gas().prop_flat_map(|m| (Just(m), upstream(m))),
        c in coeffs(),
    ) {
        let Ok(pairs) = forward_curve(&up, &c, &model) else { return Ok(()) };
        for pair in pairs {
            let back = backward_curve(&pair.right_state, &c, &model).unwrap();
            prop_assert!(back.iter().any(|b| state_close(&b.left_state, &up, 1e-10)));
        }
    }

    #[test]
    fn inverse_coefficients_undo_the_jump(
        (model, up) in gas().prop_flat_map(|m| (Just(m), upstream(m))),
        c in coeffs(),
    ) {
        let Ok(pairs) = forward_curve(&up, &c, &model) else { return Ok(()) };
        for pair in pairs {
            let back = forward_curve(&pair.right_state, &c.inverse(), &model).unwrap();
            prop_assert!(back.iter().any(|b| state_close(&b.right_state, &up, 1e-10)));
        }
    }

    #[test]
    fn round_trip_of_mach_maps(model in gas(), m in 0.02f64..6.0, k in -0.7f64..1.5) {
        let Ok(down) = downstream_mach(m, k, &model) else { return Ok(()) };
        for (_, mp) in down {
            let up = upstream_mach(mp, k, &model).unwrap();
            prop_assert!(up.iter().any(|(_, x)| rel(*x, m) <= 1e-10), "{m} -> {mp} -> {up:?}");
        }
    }

    #[test]
    fn criteria_agree(
        model in gas(),
        a in (0.1f64..3.0, 0.01f64..4.0, 0.1f64..3.0),
        b in (0.1f64..3.0, 0.01f64..4.0, 0.1f64..3.0),
        negative in any::<bool>(),
    ) {
        let sign = if negative { -1.0 } else { 1.0 };
        let s = |(rho, m, p): (f64, f64, f64)| {
            GasState::new(rho, sign * m * (model.gamma() * p / rho).sqrt(), p).unwrap()
        };
        let rep = satisfies_criterion(&s(a), &s(b), &model);
        prop_assert_eq!(rep.criterion1, rep.criterion2);
    }

    #[test]
    fn ratios_conserve_mass(model in gas(), mm in 0.05f64..5.0, mp in 0.05f64..5.0, c in coeffs()) {
        let (r, u, _) = state_ratios(mm, mp, &c, &model);
        prop_assert!(rel(r * u, 1.0 + c.k1) <= 1e-12);
    }
}

#[test]
fn oracle_examples() {
    let model = GasModel::default();
    let a = 1.4_f64.sqrt();
    let up = GasState::new(1.0, 2.0 * a, 1.0).unwrap();
    let roots = oracle_jump_solutions(&up, &SourceCoefficients::zero(), &model);
    assert_eq!(roots.len(), 2);
    assert!(state_close(&roots[1], &up, 1e-10));
    assert!((model.mach(&roots[0]) - 0.577_350_3).abs() < 1e-7);
}

#[test]
fn critical_machs_match_independent_roots() {
    for g in [1.2, 1.4, 1.67] {
        let model = GasModel::new(g).unwrap();
        let threshold = 1.0 / (g * g - 1.0);
        for k in [0.05, 0.2, 0.5, 1.2, threshold * 0.999] {
            let (m1, m2, m3) = critical_machs(k, &model).triple().unwrap();
            let sonic = 1.0 / (g + 1.0) / (1.0 + k);
            assert!(rel(m1, phi_root(sonic, g, 1e-9, 1.0)) <= 1e-8, "g={g} k={k}");
            if k < threshold {
                assert!(rel(m2, phi_root(sonic, g, 1.0, 1e8)) <= 1e-8, "g={g} k={k}");
                let limit = (1.0 + k) * (g - 1.0) / (g * g);
                assert!(rel(m3, phi_root(limit, g, 1.0, 1e8)) <= 1e-8, "g={g} k={k}");
            } else {
                assert!(m2.is_infinite() && m3.is_infinite());
            }
        }
        for k in [-0.05, -0.2, -0.4, -0.6] {
            let (d1, d2, d3) = critical_machs(k, &model).triple().unwrap();
            let image = (1.0 + k) / (g + 1.0);
            assert!(rel(d1, phi_root(image, g, 1e-9, 1.0)) <= 1e-8, "g={g} k={k}");
            if k > -1.0 / (g * g) {
                assert!(rel(d2, phi_root(image, g, 1.0, 1e8)) <= 1e-8, "g={g} k={k}");
                let limit = (g - 1.0) / (g * g) / (1.0 + k);
                assert!(rel(d3, phi_root(limit, g, 1.0, 1e8)) <= 1e-8, "g={g} k={k}");
            } else {
                assert!(d2.is_infinite());
                assert_eq!(d3, 1.0);
            }
        }
    }
}

fn prandtl(m: f64, g: f64) -> f64 {
    ((1.0 + 0.5 * (g - 1.0) * m * m) / (g * m * m - 0.5 * (g - 1.0))).sqrt()
}

#[test]
fn sonic_preimages_are_prandtl_pairs() {
    let model = GasModel::default();
    for k in [0.05, 0.2, 0.5, -0.05, -0.2] {
        let (m1, m2, _) = critical_machs(k, &model).triple().unwrap();
        assert!(rel(m2, prandtl(m1, 1.4)) <= 1e-10, "k={k}");
    }
}

const KS: [f64; 8] = [-0.5, -0.2, -0.05, 0.0, 0.05, 0.2, 0.5, 1.2];
const GAMMAS: [f64; 3] = [1.2, 1.4, 1.67];

fn grid() -> impl Iterator<Item = f64> {
    (1..=1000).map(|i| 6.0 * i as f64 / 1000.0)
}

#[test]
fn branch_bounds_and_extreme_values() {
    for g in GAMMAS {
        let model = GasModel::new(g).unwrap();
        for k in KS {
            let mut prev: [Option<(f64, f64)>; 2] = [None, None];
            for m in grid() {
                let sets = admissible_sets(k, &model);
                if !sets.upstream_contains(m) {
                    prev = [None, None];
                    continue;
                }
                for (slot, branch) in [Branch::Subsonic, Branch::Supersonic].into_iter().enumerate() {
                    let Ok(mp) = branch_mach(branch, m, k, &model) else {
                        prev[slot] = None;
                        continue;
                    };
                    match branch {
                        Branch::Subsonic => assert!(mp <= 1.0 + 1e-12),
                        Branch::Supersonic => assert!(mp >= 1.0 - 1e-12),
                    }
                    if let Some((pm, pv)) = prev[slot] {
                        // the subsonic branch rises then falls across M- = 1; the supersonic one the reverse
                        let rising = (m <= 1.0) == (branch == Branch::Subsonic);
                        if pm >= 1.0 || m <= 1.0 {
                            if rising {
                                assert!(mp >= pv - 1e-12, "g={g} k={k} {branch:?} at {m}");
                            } else {
                                assert!(mp <= pv + 1e-12, "g={g} k={k} {branch:?} at {m}");
                            }
                        }
                    }
                    prev[slot] = Some((m, mp));
                }
            }
        }
    }
}

#[test]
fn selected_branch_is_monotone_and_orders_sonic_distance() {
    for g in GAMMAS {
        let model = GasModel::new(g).unwrap();
        for k in KS {
            let mut last: Option<(Branch, f64)> = None;
            for m in grid() {
                let Ok(down) = downstream_mach(m, k, &model) else {
                    continue;
                };
                let (branch, mp) = down.first().unwrap();
                if let Some((pb, pv)) = last {
                    assert!(mp >= pv, "g={g} k={k} not nondecreasing at {m}");
                    if pb == branch {
                        assert!(mp > pv, "g={g} k={k} not strictly increasing at {m}");
                    }
                }
                last = Some((branch, mp));

                let (dm, dp) = ((m - 1.0).abs(), (mp - 1.0).abs());
                match KRegime::of(k) {
                    KRegime::Positive => assert!(dp < dm),
                    KRegime::Negative => assert!(dp > dm),
                    KRegime::Zero => assert_eq!(dp, dm),
                }
                let region = region_of(m, mp).unwrap();
                match KRegime::of(k) {
                    KRegime::Positive => assert!(matches!(region, MachRegion::Omega1 | MachRegion::Omega4)),
                    KRegime::Negative => assert!(matches!(region, MachRegion::Omega2 | MachRegion::Omega3)),
                    KRegime::Zero => assert_eq!(region, MachRegion::Boundary),
                }
            }
        }
    }
}

#[test]
fn backward_transformed_coefficients() {
    let model = GasModel::default();
    let c = SourceCoefficients::new(0.3, -0.1, 0.2).unwrap();
    let down = GasState::new(0.7, 0.5, 1.3).unwrap();
    let via_backward = backward_curve(&down, &c, &model).unwrap().first().unwrap().left_state;
    let via_forward = forward_curve(&down, &c.inverse(), &model).unwrap().first().unwrap().right_state;
    assert!(state_close(&via_backward, &via_forward, 1e-12));
}
