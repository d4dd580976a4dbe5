use proptest::prelude::*;
use wgqed_core::{
    build_generator, c64, density_from_pure, pairwise_rates, StateVector, SystemConfig,
};
use wgqed_dynamics::{density_evolution, evolve_field};

fn system() -> impl Strategy<Value = SystemConfig> {
    (1usize..=3)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(-6.0f64..6.0, n)))
        .prop_map(|(n, phases)| SystemConfig::new(n, 20.0, 1.0, phases).unwrap())
}

fn state(dim: usize) -> impl Strategy<Value = StateVector> {
    proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim)
        .prop_filter("non-zero", |v| {
            v.iter().any(|(a, b)| a.abs() + b.abs() > 1e-3)
        })
        .prop_map(|v| {
            StateVector::new(v.into_iter().map(|(a, b)| c64(a, b)).collect())
                .unwrap()
                .normalize()
                .unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn completeness_and_physical_states(
        (cfg, psi) in system().prop_flat_map(|c| { let d = c.dimension(); (Just(c), state(d)) }),
        picks in proptest::collection::vec(0usize..=500, 4),
    ) {
        let g = build_generator(&cfg, &pairwise_rates(&cfg)).unwrap();
        let f = evolve_field(&g, 1.0, 2e-3).unwrap();
        let rho = density_from_pure(&psi).unwrap();
        for k in picks {
            let snap = f.at_index(k);
            prop_assert!(snap.completeness_residual() < 1e-8);
            prop_assert!(snap.hermiticity_residual() < 1e-10);
            let r = density_evolution(&f, &rho, f.time(k)).unwrap();
            prop_assert!((r.trace() - c64(1.0, 0.0)).norm() < 1e-9);
            prop_assert!(r.min_eigenvalue() >= -1e-8);
        }
    }
}
