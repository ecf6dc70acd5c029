mod common;

use common::*;
use dnls::gauge::{gauge_at_time, gauge_forward, gauge_inverse, mean_intensity, phase_primitive, GaugeContext};
use dnls::observables::mass;
use dnls::SpectralGrid;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn round_trip(seed in any::<u64>(), decay in 1.0f64..3.0, t in -2.0f64..2.0, amp in 0.05f64..2.0) {
        let g = SpectralGrid::new(128).unwrap();
        let f = &field(&g, seed, decay) * amp;
        let ctx = GaugeContext::for_initial(&f).at(t);
        let back = gauge_inverse(&gauge_at_time(&f, ctx), ctx);
        prop_assert!((&back - &f).sobolev_norm(1.0) <= 1e-12 * f.sobolev_norm(1.0));
    }

    #[test]
    fn preserves_mass_and_mean_intensity(seed in any::<u64>(), t in 0.0f64..3.0) {
        let g = SpectralGrid::new(64).unwrap();
        let f = field(&g, seed, 2.0);
        let ctx = GaugeContext::for_initial(&f).at(t);
        let v = gauge_at_time(&f, ctx);
        prop_assert!((mass(&v) - mass(&f)).abs() < 1e-12 * mass(&f));
        prop_assert!((mean_intensity(&v) - ctx.mu).abs() < 1e-12 * ctx.mu.max(1e-300));
    }

    #[test]
    fn phase_is_real_with_zero_mean(seed in any::<u64>()) {
        let g = SpectralGrid::new(64).unwrap();
        let f = field(&g, seed, 1.0);
        let phase = phase_primitive(&f);
        prop_assert_eq!(phase.mean_mode(), C::new(0.0, 0.0));
        for z in phase.to_physical() {
            prop_assert!(z.im.abs() < 1e-14);
        }
        // ∂ₓℐ = |f|² - μ up to the dropped unmatched mode
        let mut rhs = f.product(&f.conj(), false).unwrap();
        rhs.set_coeff(0, C::new(0.0, 0.0));
        rhs.set_coeff(-32, C::new(0.0, 0.0));
        prop_assert!(phase.derivative().max_coeff_diff(&rhs) < 1e-14);
    }

    #[test]
    fn constant_data_is_invariant(re in -1.0f64..1.0, im in -1.0f64..1.0) {
        let g = SpectralGrid::new(16).unwrap();
        let u = dnls::Field::mode(&g, 0, C::new(re, im));
        prop_assert!(gauge_forward(&u).max_coeff_diff(&u) < 1e-15);
    }
}
