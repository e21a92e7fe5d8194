use bernoulli_ids::model::SymTridiagonal;
use bernoulli_ids::spectral::{
    all_eigenvalues, charpoly_edge, count_below, count_below_many, dirichlet_eigenvalue, f_t, f_t_sup_bound,
    mu_lower_bound, solve_all_mu, solve_mu, EdgePerturbedSpec,
};
use proptest::prelude::*;

fn dirichlet_count(n: usize, x: f64) -> usize {
    (1..=n).filter(|&k| dirichlet_eigenvalue(n, k).unwrap() < x).count()
}

#[test]
fn counting_matches_closed_form_laplacian_spectrum() {
    for n in [10, 57, 100, 1000, 10_000] {
        let lap = SymTridiagonal::laplacian(n);
        let eig: Vec<f64> = (1..=n).map(|k| dirichlet_eigenvalue(n, k).unwrap()).collect();
        let mut xs = Vec::new();
        for j in 0..100 {
            let mut x = -0.2 + 4.4 * (j as f64 + 0.5) / 100.0;
            while eig.iter().any(|&l| (l - x).abs() < 1e-9) {
                x += 1e-7;
            }
            xs.push(x);
        }
        let many = count_below_many(&lap, &xs);
        for (&x, &c) in xs.iter().zip(&many) {
            let expected = eig.iter().filter(|&&l| l < x).count();
            assert_eq!(count_below(&lap, x), expected, "n={n}, x={x}");
            assert_eq!(c, expected, "n={n}, x={x}");
        }
    }
}

#[test]
fn counting_is_exact_right_next_to_small_eigenvalues() {
    let n = 2000;
    let lap = SymTridiagonal::laplacian(n);
    for k in 1..=5 {
        let l = dirichlet_eigenvalue(n, k).unwrap();
        assert_eq!(count_below(&lap, l * (1.0 - 1e-6)), k - 1);
        assert_eq!(count_below(&lap, l * (1.0 + 1e-6)), k);
    }
}

#[test]
fn direct_sum_counts_add() {
    let blocks = [
        SymTridiagonal::laplacian(7),
        SymTridiagonal::edge_perturbed_laplacian(4, 5.0),
        SymTridiagonal::laplacian(1),
    ];
    let sum = SymTridiagonal::direct_sum(&blocks);
    for j in 0..60 {
        let x = -1.0 + 0.21 * j as f64 + 1e-3;
        let parts: usize = blocks.iter().map(|b| count_below(b, x)).sum();
        assert_eq!(count_below(&sum, x), parts);
    }
}

fn tridiagonal() -> impl Strategy<Value = SymTridiagonal> {
    (1usize..=500).prop_flat_map(|n| {
        (
            prop::collection::vec(-5.0f64..5.0, n),
            prop::collection::vec(prop_oneof![Just(0.0), -2.0f64..2.0], n - 1),
        )
            .prop_map(|(d, e)| SymTridiagonal::new(d, e).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn counting_agrees_with_bisection_spectrum(t in tridiagonal(), xs in prop::collection::vec(-10.0f64..10.0, 8)) {
        let eig = all_eigenvalues(&t, 1e-12).unwrap();
        prop_assert_eq!(eig.len(), t.dim());
        prop_assert!(eig.windows(2).all(|w| w[0] <= w[1]));
        let many = count_below_many(&t, &xs);
        for (&x, &c) in xs.iter().zip(&many) {
            if eig.iter().any(|&l| (l - x).abs() < 1e-8) {
                continue;
            }
            let expected = eig.iter().filter(|&&l| l < x).count();
            prop_assert_eq!(count_below(&t, x), expected);
            prop_assert_eq!(c, expected);
        }
    }

    #[test]
    fn counting_is_monotone_and_bounded(t in tridiagonal(), mut xs in prop::collection::vec(-12.0f64..12.0, 2..20)) {
        xs.sort_by(f64::total_cmp);
        let counts = count_below_many(&t, &xs);
        prop_assert!(counts.windows(2).all(|w| w[0] <= w[1]));
        let (lo, hi) = t.gershgorin_bounds();
        prop_assert_eq!(count_below(&t, lo - 1e-9), 0);
        prop_assert_eq!(count_below(&t, hi + 1e-9), t.dim());
    }

    #[test]
    fn affine_maps_the_spectrum(t in tridiagonal(), alpha in 0.1f64..3.0, beta in -4.0f64..4.0, x in -10.0f64..10.0) {
        let eig = all_eigenvalues(&t, 1e-12).unwrap();
        let y = alpha * x + beta;
        if eig.iter().any(|&l| (alpha * l + beta - y).abs() < 1e-7) {
            return Ok(());
        }
        prop_assert_eq!(count_below(&t.affine(alpha, beta), y), count_below(&t, x));
    }

    #[test]
    fn secular_solutions_interlace_and_match(n in 1usize..80, t in 3.0f64..200.0) {
        let spec = EdgePerturbedSpec::new(n, t).unwrap();
        let eig = all_eigenvalues(&spec.matrix(), 1e-13).unwrap();
        let sols = solve_all_mu(&spec, 1e-13).unwrap();
        prop_assert_eq!(sols.len(), n);
        for s in &sols {
            let lo = dirichlet_eigenvalue(n + 2, s.k).unwrap();
            let hi = dirichlet_eigenvalue(n, s.k).unwrap();
            prop_assert!(s.mu >= lo - 1e-10 && s.mu <= hi + 1e-10);
            prop_assert!(s.mu >= mu_lower_bound(n, s.k, t) - 1e-10);
            prop_assert!((s.mu - eig[s.k - 1]).abs() < 1e-10);
        }
        // the two remaining eigenvalues sit above 4
        prop_assert!(eig[n] >= 4.0 - 1e-10);
        prop_assert!(eig[n + 1] >= eig[n] - 1e-10);
    }

    #[test]
    fn charpoly_changes_sign_at_each_root(n in 1usize..40, t in 3.0f64..50.0) {
        let spec = EdgePerturbedSpec::new(n, t).unwrap();
        let eig = all_eigenvalues(&spec.matrix(), 1e-14).unwrap();
        for (i, &l) in eig.iter().enumerate() {
            // a gap smaller than the probe step cannot be resolved this way
            let gap_lo = if i > 0 { l - eig[i - 1] } else { 1.0 };
            let gap_hi = if i + 1 < eig.len() { eig[i + 1] - l } else { 1.0 };
            let h = 1e-6;
            if gap_lo <= 2.0 * h || gap_hi <= 2.0 * h {
                continue;
            }
            let a = charpoly_edge(&spec, l - h);
            let b = charpoly_edge(&spec, l + h);
            prop_assert!(a * b < 0.0, "n={} t={} root {} : {} {}", n, t, l, a, b);
        }
    }

    #[test]
    fn f_t_stays_below_its_bound(theta in 0.001f64..(std::f64::consts::PI - 0.001), t in 3.0f64..500.0) {
        let v = f_t(theta, t).unwrap();
        prop_assert!(v > 0.0);
        prop_assert!(v <= f_t_sup_bound(t) * (1.0 + 1e-12));
    }
}

#[test]
fn secular_solver_reports_small_residuals() {
    let spec = EdgePerturbedSpec::new(50, 4.0).unwrap();
    for k in [1, 10, 25, 50] {
        let s = solve_mu(&spec, k, 1e-14).unwrap();
        assert!(s.residual < 1e-12, "k={k}: {}", s.residual);
        // at most the first k Dirichlet eigenvalues of size n lie below mu_k
        assert!(dirichlet_count(50, s.mu) <= k);
    }
}

#[test]
fn corner_eigenvalues_are_strictly_ordered_when_resolvable() {
    // the splitting decays like t^-n, so only small interiors are resolvable
    for (t, n_max) in [(3.0, 12), (4.0, 10), (10.0, 6), (100.0, 3)] {
        for n in 0..=n_max {
            let spec = EdgePerturbedSpec::new(n, t).unwrap();
            let eig = all_eigenvalues(&spec.matrix(), 1e-15).unwrap();
            assert!(eig[n] >= 4.0, "t={t} n={n}");
            assert!(
                eig[n + 1] - eig[n] > 1e-12,
                "t={t} n={n}: split {}",
                eig[n + 1] - eig[n]
            );
        }
    }
}
