use hilbert_concepts::born::{classify, Concept};
use hilbert_concepts::composition::{product_overlap, ProductState};
use hilbert_concepts::hilbert::{hilbert_distance, inner_product, phase_invariant_distance};
use hilbert_concepts::{GaussianState, Grid, State};
use proptest::prelude::*;

fn gaussian() -> impl Strategy<Value = GaussianState> {
    (-5.0f64..10.0, 0.5f64..3.0).prop_map(|(m, s)| GaussianState::new(m, s).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inner_product_is_conjugate_symmetric(a in gaussian(), b in gaussian(), phase in 0.0f64..std::f64::consts::TAU) {
        let grid = Grid::covering([&a, &b]).unwrap();
        let sa = State::Grid(a.discretize(&grid).unwrap().with_global_phase(phase));
        let sb = State::Grid(b.discretize(&grid).unwrap());
        let ab = inner_product(&sa, &sb).unwrap();
        let ba = inner_product(&sb, &sa).unwrap();
        prop_assert!((ab - ba.conj()).norm() < 1e-12);
        prop_assert!(ab.norm() <= 1.0 + 1e-12);
    }

    #[test]
    fn closed_form_and_grid_agree(a in gaussian(), b in gaussian()) {
        let (ga, gb) = (State::Gaussian(a), State::Gaussian(b));
        let grid = Grid::covering([&a, &b]).unwrap();
        let qa = State::Grid(a.discretize(&grid).unwrap());
        let closed = inner_product(&ga, &gb).unwrap();
        let mixed = inner_product(&qa, &gb).unwrap();
        prop_assert!((closed - mixed).norm() < 1e-9);
        let d_closed = hilbert_distance(&ga, &gb).unwrap();
        let d_mixed = hilbert_distance(&qa, &gb).unwrap();
        prop_assert!((d_closed - d_mixed).abs() < 1e-6);
    }

    #[test]
    fn global_phase_is_invisible_to_scores(a in gaussian(), b in gaussian(), phase in 0.0f64..std::f64::consts::TAU) {
        let grid = Grid::covering([&a, &b]).unwrap();
        let da = a.discretize(&grid).unwrap();
        let rotated = State::Grid(da.with_global_phase(phase));
        let object = State::Grid(b.discretize(&grid).unwrap());
        let plain = classify(&[Concept::new("a", da.clone()).unwrap()], &object).unwrap();
        let turned = classify(&[Concept::new("a", rotated.clone()).unwrap()], &object).unwrap();
        prop_assert!((plain.raw_score("a").unwrap() - turned.raw_score("a").unwrap()).abs() < 1e-12);
        prop_assert!(phase_invariant_distance(&State::Grid(da), &rotated).unwrap() < 1e-9);
    }

    #[test]
    fn product_overlap_factorizes(
        a in proptest::collection::vec(gaussian(), 1..=4),
        b in proptest::collection::vec(gaussian(), 4),
    ) {
        let b = b[..a.len()].to_vec();
        let per_axis: f64 = a.iter().zip(&b).map(|(x, y)| x.overlap(y).powi(2)).product();
        let joint = product_overlap(&ProductState::new(a).unwrap(), &ProductState::new(b).unwrap()).unwrap();
        prop_assert!((joint - per_axis).abs() < 1e-12);
    }
}
