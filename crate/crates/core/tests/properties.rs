use num_bigint::BigInt;
use proptest::prelude::*;

use spinh_core::clifford::{
    classify, classify_indefinite, volume_element, volume_square_sign, Blade, CliffordElement,
    Field, Signature, Variant,
};
use spinh_core::groups::CoefficientRing;
use spinh_core::ktheory::{
    coefficient_group, dual_group, k_coefficients, k_coefficients_qmodz_les, zk_index, Theory,
    ZkIndexInput, DEFAULT_DUALITY_BOUND,
};
use spinh_core::modules::{
    graded_product, ngroup, scalar_change, ModuleLabel, ScalarFunctor, Sign,
};
use spinh_core::series::{a_hat_series, a_hat_h_point, GradedSeries};
use spinh_core::steenrod::{
    adem_reduce, apply_sum, monomials_of_degree, sq, wu_classes, F2Polynomial, Gen,
    SteenrodMonomial,
};
use spinh_core::{FGAbelianGroup, Rational};

fn signature() -> impl Strategy<Value = Signature> {
    (0u32..=6).prop_flat_map(|n| (0..=n).prop_map(move |r| Signature::new(r, n - r).unwrap()))
}

fn element(sig: Signature) -> impl Strategy<Value = CliffordElement> {
    let blades = 1u32 << sig.generators();
    prop::collection::vec((0..blades, -12i64..=12, 1i64..=6), 0..6).prop_map(move |terms| {
        CliffordElement::from_terms(
            sig,
            terms.into_iter().map(|(m, a, b)| (Blade::from_mask(m), Rational::new(a.into(), b.into()))),
        )
        .unwrap()
    })
}

fn triple() -> impl Strategy<Value = (CliffordElement, CliffordElement, CliffordElement)> {
    signature().prop_flat_map(|s| (element(s), element(s), element(s)))
}

proptest! {
    #[test]
    fn clifford_associative((a, b, c) in triple()) {
        let left = a.product(&b).unwrap().product(&c).unwrap();
        let right = a.product(&b.product(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn clifford_bilinear((a, b, c) in triple()) {
        let left = a.product(&b.add(&c).unwrap()).unwrap();
        let right = a.product(&b).unwrap().add(&a.product(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn transpose_reverses_products((a, b, _) in triple()) {
        let t = a.product(&b).unwrap().transpose();
        prop_assert_eq!(t, b.transpose().product(&a.transpose()).unwrap());
        prop_assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn grading_is_multiplicative((a, b, _) in triple(), pa in 0u32..2, pb in 0u32..2) {
        let (x, y) = (a.graded_part(pa), b.graded_part(pb));
        let p = x.product(&y).unwrap();
        prop_assert!(p.is_zero() || p.parity() == Some((pa + pb) % 2));
        prop_assert_eq!(a.grade_involution().grade_involution(), a.clone());
    }
}

#[test]
fn volume_square_law_through_ten_generators() {
    for n in 0..=10u32 {
        for r in 0..=n {
            let sig = Signature::new(r, n - r).unwrap();
            let w = volume_element(sig);
            let sq = w.product(&w).unwrap().as_scalar().unwrap();
            let e = ((n * n) as i64 + r as i64 - (n - r) as i64) / 2;
            let law = if e % 2 == 0 { 1 } else { -1 };
            assert_eq!(sq, Rational::from_integer(law.into()), "{sig:?}");
            assert_eq!(volume_square_sign(sig), law as i8);
        }
        if n % 2 == 1 {
            let sig = Signature::definite(n).unwrap();
            let w = volume_element(sig);
            for i in 1..=n as usize {
                let e = CliffordElement::generator(sig, i).unwrap();
                assert_eq!(e.product(&w).unwrap(), w.product(&e).unwrap(), "omega_{n} central");
            }
        }
    }
}

#[test]
fn classification_dimensions_and_shifts() {
    for n in 0..=32u32 {
        let want = [(Variant::Cl, 0), (Variant::CCl, 1), (Variant::Clh, 2), (Variant::CClh, 3)];
        for (v, extra) in want {
            assert_eq!(classify(n, v).real_dimension(), 1u64 << (n + extra), "{v}_{n}");
        }
        let shifted = classify(n + 4, Variant::Cl);
        let h = classify(n, Variant::Clh);
        assert_eq!((shifted.field, shifted.simple), (h.field, h.simple), "n={n}");
        assert_eq!(shifted.size, 2 * h.size, "n={n}");
    }
    for r in 0..=12u32 {
        for s in 0..=12u32 {
            let a = classify_indefinite(r, s, false);
            let b = classify_indefinite(r + 1, s + 1, false);
            assert_eq!((a.field, a.simple, 2 * a.size), (b.field, b.simple, b.size), "({r},{s})");
            assert_eq!(a.real_dimension(), 1u64 << (r + s));
        }
        assert_eq!(classify_indefinite(r, 0, false), classify(r, Variant::Cl));
        assert_eq!(classify_indefinite(r, 0, true), classify(r, Variant::Clh));
    }
}

#[test]
fn module_group_identities() {
    for n in 0..=40u32 {
        assert_eq!(ngroup(n, Field::H), ngroup(n + 4, Field::R), "n={n}");
        assert_eq!(ngroup(n, Field::R), ngroup(n + 8, Field::R));
        assert_eq!(ngroup(n, Field::C), ngroup(n + 2, Field::C));
    }
}

#[test]
fn scalar_change_round_trips() {
    for n in (4..=32u32).step_by(4) {
        for sign in [Sign::Plus, Sign::Minus] {
            let real = ModuleLabel::new(n, Field::R, Some(sign)).unwrap();
            let up = scalar_change(real, ScalarFunctor::IndRC).unwrap();
            let back = scalar_change(up.label, ScalarFunctor::ResRC).unwrap();
            assert_eq!(
                back.real_dimension() * up.multiplicity,
                2 * real.real_dimension(),
                "Res(Ind(Delta_{n})) has twice the dimension"
            );
            let quat = ModuleLabel::new(n, Field::H, Some(sign)).unwrap();
            let down = scalar_change(quat, ScalarFunctor::ResCH).unwrap();
            assert_eq!(down.real_dimension(), quat.real_dimension());
            assert_eq!(down.label.sign == Some(sign), n % 8 == 0);
        }
    }
}

#[test]
fn graded_product_dimensions_multiply() {
    let plus8 = ModuleLabel::new(8, Field::R, Some(Sign::Plus)).unwrap();
    let plus4h = ModuleLabel::new(4, Field::H, Some(Sign::Plus)).unwrap();
    let mut seen = 0;
    for n in 1..=16u32 {
        for field in [Field::R, Field::H] {
            let signs: &[Option<Sign>] =
                if n % 4 == 0 { &[Some(Sign::Plus), Some(Sign::Minus)] } else { &[None] };
            for &sign in signs {
                let b = ModuleLabel::new(n, field, sign).unwrap();
                for (x, y) in [(plus8, b), (b, plus4h)] {
                    if let Ok((class, _)) = graded_product(x, y) {
                        assert_eq!(class.real_dimension(), x.real_dimension() * y.real_dimension(), "{x} * {y}");
                        seen += 1;
                    }
                }
            }
        }
    }
    assert!(seen >= 60);
}

fn series(trunc: usize) -> impl Strategy<Value = GradedSeries> {
    prop::collection::vec((-20i64..=20, 1i64..=9), trunc + 1).prop_map(move |cs| {
        let mut coeffs: Vec<Rational> = cs.into_iter().map(|(a, b)| Rational::new(a.into(), b.into())).collect();
        coeffs[0] = Rational::from_integer(1.into());
        GradedSeries::from_coeffs(2, coeffs, trunc).unwrap()
    })
}

proptest! {
    #[test]
    fn reciprocal_inverts(s in series(8)) {
        let one = s.mul(&s.reciprocal().unwrap()).unwrap();
        prop_assert_eq!(one, GradedSeries::constant(2, Rational::from_integer(1.into()), 8).unwrap());
    }

    #[test]
    fn series_ring_laws(a in series(6), b in series(6), c in series(6)) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.pow(5).unwrap(), a.mul(&a.pow(4).unwrap()).unwrap());
    }
}

#[test]
fn a_hat_facts() {
    let a = a_hat_series(40);
    assert!(a.is_even());
    assert_eq!(a.coeff(2), Rational::new((-1).into(), 24.into()));
    assert_eq!(a_hat_h_point(), Rational::from_integer(2.into()));
}

fn bso_gens(d: u32) -> Vec<Gen> {
    (2..=d.max(2) as u16).map(Gen::w).collect()
}

fn poly(max_degree: u32) -> impl Strategy<Value = F2Polynomial> {
    (2..=max_degree).prop_flat_map(|d| {
        let ms = monomials_of_degree(&bso_gens(d), d);
        prop::sample::subsequence(ms.clone(), 0..=ms.len().min(6))
            .prop_map(F2Polynomial::from_monomials)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cartan_on_random_pairs(p in poly(8), q in poly(8), k in 0u32..=16) {
        let mut rhs = F2Polynomial::zero();
        for i in 0..=k {
            rhs.add_assign(&sq(i, &p).mul(&sq(k - i, &q)));
        }
        prop_assert_eq!(sq(k, &p.mul(&q)), rhs);
    }

    #[test]
    fn adem_relations_act_correctly(b in 1u32..=10, a_frac in 0u32..100, x in poly(10)) {
        let a = 1 + a_frac % (2 * b - 1);
        prop_assume!(a + b <= 16);
        let m = SteenrodMonomial::new([a, b]);
        let reduced = adem_reduce(&m);
        prop_assert!(reduced.iter().all(SteenrodMonomial::is_admissible));
        prop_assert_eq!(m.apply(&x), apply_sum(&reduced, &x));
    }

    #[test]
    fn unstable_axioms(x in poly(12), extra in 1u32..5) {
        let d = x.degree().unwrap_or(0);
        prop_assert!(sq(d + extra, &x).is_zero());
        prop_assert_eq!(sq(d, &x), x.pow(2));
        prop_assert_eq!(sq(0, &x), x);
    }
}

#[test]
fn wu_total_identity_through_sixteen() {
    let nu = wu_classes(16);
    for k in 0..=16u32 {
        let mut total = F2Polynomial::zero();
        for i in 0..=k {
            total.add_assign(&sq(i, &nu[(k - i) as usize]));
        }
        assert_eq!(total, F2Polynomial::w(k as u16), "Sq(nu) = w in degree {k}");
        assert_eq!(nu[k as usize].degree().unwrap_or(k), k);
    }
    // odd Wu classes vanish in the oriented case
    assert!(nu.iter().skip(1).step_by(2).all(F2Polynomial::is_zero));
}

fn int(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

proptest! {
    #[test]
    fn zk_index_additive_and_lifts(
        quarter in 1u32..6, k in 2u64..30, l in 1u64..6,
        a in -200i64..200, b in -200i64..200, c in -200i64..200,
    ) {
        let n = 4 * quarter;
        let eps = if n % 8 == 0 { 2 } else { 1 };
        let (a, b, c) = (a * eps, b * eps, c * eps);
        let at = |k: u64, i: i64, e: i64| zk_index(&ZkIndexInput { n, k, integral_term: int(i), eta_term: int(e) }).unwrap();
        // additive in the integral and eta terms
        prop_assert_eq!((at(k, a, 0) + at(k, b, c)) % k, at(k, a + b, c));
        // Z_k -> Z_{kl} via multiplication by l
        prop_assert_eq!(at(k * l, a * l as i64, b * l as i64), l * at(k, a, b));
    }

    #[test]
    fn coefficient_tables(n in -64i64..64) {
        prop_assert_eq!(coefficient_group(Theory::KSp, n), coefficient_group(Theory::KO, n + 4));
        for t in [Theory::KO, Theory::KU, Theory::KSp] {
            prop_assert_eq!(k_coefficients(t, n, CoefficientRing::QmodZ), k_coefficients_qmodz_les(t, n));
            prop_assert_eq!(k_coefficients(t, n, CoefficientRing::Z), coefficient_group(t, n));
        }
    }

    #[test]
    fn duality_on_random_groups(rank in 0u32..=2, orders in prop::collection::vec(2u64..=12, 0..3)) {
        let g = FGAbelianGroup::new(rank, orders);
        prop_assume!(g.torsion_order() <= DEFAULT_DUALITY_BOUND);
        let r = dual_group(&g, DEFAULT_DUALITY_BOUND).unwrap();
        prop_assert!(r.verified());
        prop_assert_eq!(r.double_dual, g);
    }
}

#[test]
fn execution_modes_agree() {
    use spinh_core::ktheory::dual_battery;
    use spinh_core::steenrod::{adem_battery, verify_bspinh};
    use spinh_core::Execution::{Parallel, Sequential};

    assert_eq!(
        verify_bspinh(12, Sequential).unwrap(),
        verify_bspinh(12, Parallel).unwrap()
    );
    assert_eq!(dual_battery(12, 6, Sequential), dual_battery(12, 6, Parallel));
    let (a, b) = (adem_battery(10, 10, Sequential), adem_battery(10, 10, Parallel));
    assert_eq!((a.checks, a.failures), (b.checks, b.failures));
}
