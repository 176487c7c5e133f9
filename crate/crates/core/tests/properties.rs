use ade_quiver::bordism::enumerate_configurations;
use ade_quiver::classify::classify_singularities;
use ade_quiver::decompose::decompose;
use ade_quiver::replab::{mu_complex, mu_real, symplectic_pairing, BlockVector, Matrix, RepPoint};
use ade_quiver::roots::{psi, psi_star, sigma_set};
use ade_quiver::{AdeType, ExtendedDiagram, GaussianRational, Parameter, Quiver};
use proptest::prelude::*;

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-12i64..=12, 1i64..=6, -12i64..=12, 1i64..=6).prop_map(|(a, b, c, d)| GaussianRational::from_ratios(a, b, c, d))
}

/// Mostly zero, so that many roots are orthogonal to the parameter.
fn sparse_gaussian() -> impl Strategy<Value = GaussianRational> {
    prop_oneof![2 => Just(GaussianRational::zero()), 1 => gaussian()]
}

fn ade_type() -> impl Strategy<Value = AdeType> {
    prop::sample::select(AdeType::all_up_to_rank(8))
}

fn type_and_tau() -> impl Strategy<Value = (AdeType, Parameter)> {
    ade_type().prop_flat_map(|t| (Just(t), prop::collection::vec(sparse_gaussian(), t.rank()).prop_map(Parameter)))
}

fn small_quiver() -> impl Strategy<Value = (Quiver, Vec<usize>)> {
    let edges = prop::collection::vec((0usize..3, 0usize..3), 1..4);
    (edges, prop::collection::vec(0usize..3, 3)).prop_map(|(e, dims)| (Quiver::new(3, e), dims))
}

fn point_on(q: Quiver, dims: Vec<usize>) -> impl Strategy<Value = RepPoint> {
    let shapes: Vec<(usize, usize)> = q.doubled().iter().map(|a| (dims[a.target], dims[a.source])).collect();
    let total: usize = shapes.iter().map(|(r, c)| r * c).sum();
    prop::collection::vec(gaussian(), total).prop_map(move |entries| {
        let mut it = entries.into_iter();
        let mats = shapes
            .iter()
            .map(|&(r, c)| {
                let rows: Vec<Vec<GaussianRational>> = (0..r).map(|_| it.by_ref().take(c).collect()).collect();
                if r == 0 {
                    Matrix::zeros(0, c)
                } else {
                    Matrix::from_rows(rows).unwrap()
                }
            })
            .collect();
        RepPoint::new(q.clone(), dims.clone(), mats).unwrap()
    })
}

fn quiver_and_points(k: usize) -> impl Strategy<Value = Vec<RepPoint>> {
    small_quiver().prop_flat_map(move |(q, dims)| prop::collection::vec(point_on(q, dims), k))
}

fn invertible_diagonal(dims: Vec<usize>) -> impl Strategy<Value = BlockVector> {
    let total: usize = dims.iter().sum();
    let nonzero = gaussian().prop_filter("nonzero", |g| !g.is_zero());
    prop::collection::vec(nonzero, total).prop_map(move |entries| {
        let mut it = entries.into_iter();
        BlockVector(
            dims.iter()
                .map(|&d| {
                    let mut m = Matrix::zeros(d, d);
                    for i in 0..d {
                        m.set(i, i, it.next().unwrap());
                    }
                    m
                })
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gaussian_text_round_trips(g in gaussian()) {
        prop_assert_eq!(g.to_string().parse::<GaussianRational>().unwrap(), g);
    }

    #[test]
    fn gaussian_field_laws(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if let Some(inv) = a.inv() {
            prop_assert_eq!(&a * &inv, GaussianRational::one());
        }
        // the lexicographic order is additive
        if a <= b {
            prop_assert!(&a + &c <= &b + &c);
        }
    }

    #[test]
    fn psi_star_is_adjoint_to_psi((t, tau) in type_and_tau(), idx in 0usize..256) {
        let ed = ExtendedDiagram::of_type(t);
        let sigma = sigma_set(&ed);
        let theta = &sigma[idx % sigma.len()];
        let lambda = psi_star(&ed, &tau).unwrap();
        prop_assert_eq!(tau.dot(&psi(&ed, theta).unwrap()), lambda.dot(theta));
        prop_assert!(lambda.dot(ed.delta()).is_zero());
    }

    #[test]
    fn dual_reflection_is_adjoint((t, tau) in type_and_tau(), idx in 0usize..256, i in 0usize..8) {
        let rs = ade_quiver::RootSystem::generate(t);
        let i = i % t.rank();
        let alpha = &rs.roots()[idx % rs.roots().len()];
        prop_assert_eq!(tau.dot(&rs.simple_reflection(i, alpha)), rs.dual_reflection(i, &tau).dot(alpha));
        prop_assert_eq!(rs.dual_reflection(i, &rs.dual_reflection(i, &tau)), tau);
    }

    #[test]
    fn make_dominant_is_dominant_and_keeps_types((t, tau) in type_and_tau()) {
        let rs = ade_quiver::RootSystem::generate(t);
        let (dominant, word) = rs.make_dominant(&tau);
        prop_assert!(dominant.is_dominant());
        prop_assert_eq!(rs.apply_word(&word, &tau), dominant.clone());
        prop_assert_eq!(decompose(&rs, &tau).unwrap().types(), decompose(&rs, &dominant).unwrap().types());
    }

    #[test]
    fn classification_types_are_configurations((t, tau) in type_and_tau()) {
        let ed = ExtendedDiagram::of_type(t);
        let c = classify_singularities(&ed, &psi_star(&ed, &tau).unwrap()).unwrap();
        prop_assert!(enumerate_configurations(t).contains(&c.types()));
        for sp in &c.singular_points {
            prop_assert_eq!(sp.dimension(), ed.delta().to_vec());
            prop_assert_eq!(sp.slice.delta_norm(), 0);
        }
    }

    #[test]
    fn mu_complex_is_equivariant(
        (x, g) in small_quiver().prop_flat_map(|(q, d)| (point_on(q, d.clone()), invertible_diagonal(d)))
    ) {
        let lhs = mu_complex(&x.act(&g).unwrap());
        let rhs: Vec<Matrix> = mu_complex(&x)
            .blocks()
            .iter()
            .zip(g.blocks())
            .map(|(m, gi)| gi.mul(m).unwrap().mul(&gi.inverse().unwrap()).unwrap())
            .collect();
        prop_assert_eq!(lhs, BlockVector(rhs));
    }

    #[test]
    fn mu_real_is_anti_hermitian(xs in quiver_and_points(1)) {
        prop_assert!(mu_real(&xs[0]).is_anti_hermitian());
    }

    #[test]
    fn reversing_the_quiver_negates_mu_complex(xs in quiver_and_points(1)) {
        prop_assert_eq!(mu_complex(&xs[0].reversed()), mu_complex(&xs[0]).neg());
    }

    #[test]
    fn symplectic_form_is_antisymmetric_and_bilinear(xs in quiver_and_points(3), c in gaussian()) {
        let (x, y, z) = (&xs[0], &xs[1], &xs[2]);
        let w = |a: &RepPoint, b: &RepPoint| symplectic_pairing(a, b).unwrap();
        prop_assert_eq!(w(x, y), -w(y, x));
        prop_assert!(w(x, x).is_zero());
        let lhs = w(&x.add(&y.scale(&c)).unwrap(), z);
        prop_assert_eq!(lhs, w(x, z) + &c * &w(y, z));
    }
}
