use proptest::prelude::*;

use arform::harness::gen::{gen_algebra, gen_rep, trial_rng, GenConfig};
use arform::rep::{euler_form, ExtSpace, HomSpace};
use arform::translate::{t_presentation, tau_rep};
use arform::{Field, Matrix};

fn matrix(field: Field) -> impl Strategy<Value = Matrix> {
    (0usize..6, 0usize..6).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-3i64..=3, r * c).prop_map(move |e| Matrix::from_i64(field, r, c, &e))
    })
}

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(5)), Just(Field::Prime(10007))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity_and_cokernel_section(m in fields().prop_flat_map(matrix)) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert!(m.mul(&k).is_zero());
        let c = m.cokernel();
        prop_assert!(c.projection.mul(&m).is_zero());
        prop_assert_eq!(c.projection.mul(&c.section), Matrix::identity(m.field(), m.rows() - m.rank()));
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn solve_recovers_consistent_systems(m in matrix(Field::Rational), seed in 0u64..1000) {
        let x = Matrix::from_i64(Field::Rational, m.cols(), 1, &(0..m.cols() as i64).map(|i| (i * 7 + seed as i64) % 5 - 2).collect::<Vec<_>>());
        let b = m.mul(&x);
        let sol = m.solve(&b).unwrap().expect("consistent");
        prop_assert_eq!(m.mul(&sol), b);
    }

    #[test]
    fn euler_identity_and_ar_dimensions(seed in any::<u64>(), q in any::<bool>()) {
        let field = if q { Field::Rational } else { Field::Prime(101) };
        let cfg = GenConfig { max_vertices: 4, max_arrows: 4, max_dim: 2, field, ..GenConfig::default() };
        let mut rng = trial_rng(seed, "prop", 0);
        let alg = gen_algebra(&mut rng, &cfg);
        let x = gen_rep(&mut rng, &alg, &cfg);
        let y = gen_rep(&mut rng, &alg, &cfg);
        let hom = HomSpace::new(&x, &y).unwrap().dim() as i64;
        let ext = ExtSpace::new(&x, &y).unwrap().dim();
        prop_assert_eq!(hom - ext as i64, euler_form(alg.quiver(), x.dims(), y.dims()));
        let tmy = t_presentation(&y).unwrap().tau_minus;
        prop_assert_eq!(HomSpace::new(&tmy, &x).unwrap().dim(), ext);
        prop_assert_eq!(HomSpace::new(&y, &tau_rep(&x).unwrap().tau.rep).unwrap().dim(), ext);
    }
}
