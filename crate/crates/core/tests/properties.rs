use beg_core::braid::{self, BraidRepSpec, BraidWord, Variant};
use beg_core::egroup::{self, EElement};
use beg_core::pauli::{self, PauliString};
use beg_core::{closure, CycInt, CycScalar, ExactMatrix, Nu};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

fn config(seed: u64) -> ProptestConfig {
    ProptestConfig { cases: 128, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..ProptestConfig::default() }
}

fn cyc_int() -> impl Strategy<Value = CycInt> {
    prop::array::uniform4(-6i64..=6).prop_map(CycInt)
}

fn scalar() -> impl Strategy<Value = CycScalar> {
    (cyc_int(), 0u32..4).prop_map(|(n, e)| CycScalar::new(n, e))
}

fn matrix(dim: usize) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(scalar(), dim * dim).prop_map(move |v| ExactMatrix::new(dim, v).unwrap())
}

fn pauli(k: usize) -> impl Strategy<Value = PauliString> {
    let m = (1u64 << k) - 1;
    (0u8..4, 0..=m, 0..=m).prop_map(move |(p, x, z)| PauliString::new(k, 2 * p, x, z).unwrap())
}

fn nu() -> impl Strategy<Value = Nu> {
    prop_oneof![Just(Nu::Minus), Just(Nu::Plus)]
}

proptest! {
    #![proptest_config(config(0x5eed_0001))]

    #[test]
    fn ring_axioms(a in cyc_int(), b in cyc_int(), c in cyc_int()) {
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a - a, CycInt::ZERO);
        prop_assert_eq!(a * CycInt::ONE, a);
    }

    #[test]
    fn conjugation_and_galois(a in cyc_int(), b in cyc_int(), j in prop_oneof![Just(1i64), Just(3), Just(5), Just(7)]) {
        prop_assert_eq!(a.conj().conj(), a);
        prop_assert_eq!((a * b).conj(), a.conj() * b.conj());
        prop_assert_eq!((a * b).galois(j), a.galois(j) * b.galois(j));
        prop_assert_eq!((a + b).galois(j), a.galois(j) + b.galois(j));
        prop_assert_eq!(a.galois(7), a.conj());
    }

    #[test]
    fn norm_is_multiplicative(a in cyc_int(), b in cyc_int()) {
        prop_assert_eq!((a * b).norm() as i128, a.norm() as i128 * b.norm() as i128);
        prop_assert!(a.norm() >= 0);
    }

    #[test]
    fn canonical_form_is_idempotent(n in cyc_int(), e in 0u32..6) {
        let s = CycScalar::new(n, e);
        prop_assert_eq!(CycScalar::new(s.num(), s.sqrt2_exponent()), s);
        prop_assert_eq!(CycScalar::new(n.times_sqrt2(), e + 1), s);
        prop_assert_eq!(CycScalar::new(n * CycInt::from_int(2), e + 2), s);
    }

    #[test]
    fn scalar_field_ops(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!((a * b).conj(), a.conj() * b.conj());
        prop_assert_eq!(a.abs2().conj(), a.abs2());
        if !b.is_zero() {
            let q = (a * b).checked_div(&b);
            prop_assert_eq!(q, Some(a));
        }
    }

    #[test]
    fn zeta_powers_are_units(p in -16i64..16) {
        let z = CycScalar::zeta(p);
        prop_assert!(z.is_unit_modulus());
        prop_assert_eq!(z.zeta_exponent(), Some(p.rem_euclid(8) as u8));
        prop_assert_eq!(z * z.conj(), CycScalar::one());
    }
}

proptest! {
    #![proptest_config(config(0x5eed_0002))]

    #[test]
    fn pauli_product_matches_matrices(a in pauli(3), b in pauli(3)) {
        prop_assert_eq!((a * b).to_matrix(), &a.to_matrix() * &b.to_matrix());
        prop_assert!((a * a.inverse()).is_identity());
        prop_assert_eq!(a.to_matrix().dagger(), a.inverse().to_matrix());
    }

    #[test]
    fn commutator_is_symplectic(a in pauli(3), b in pauli(3)) {
        let ab = &a.to_matrix() * &b.to_matrix();
        let ba = &b.to_matrix() * &a.to_matrix();
        let expected = if a.commutator_sign(&b) == 1 { ba } else { -&ba };
        prop_assert_eq!(ab, expected);
    }

    #[test]
    fn pauli_order_matches_powers(a in pauli(2)) {
        let mut acc = a;
        let mut m = 1;
        while !acc.is_identity() {
            acc = acc * a;
            m += 1;
        }
        prop_assert_eq!(a.order(), m);
    }

    #[test]
    fn e_to_rho_is_a_homomorphism(k in 1usize..=3, nu in nu(), x in any::<u32>(), y in any::<u32>(), sx: bool, sy: bool) {
        let n = 2 * k;
        let mask = (1u32 << n) - 1;
        let rep = match nu {
            Nu::Minus => pauli::generators_rho(k),
            Nu::Plus => pauli::rescale_by_i(&pauli::generators_rho(k)),
        };
        let a = EElement::new(n, nu, sx, x & mask).unwrap();
        let b = EElement::new(n, nu, sy, y & mask).unwrap();
        prop_assert_eq!((a * b).image(&rep), a.image(&rep) * b.image(&rep));
    }

    #[test]
    fn e_multiplication_is_associative(n in 1usize..=9, nu in nu(), m in prop::array::uniform3(any::<u32>()), s in prop::array::uniform3(any::<bool>())) {
        let mask = (1u32 << n) - 1;
        let e: Vec<EElement> = (0..3).map(|i| EElement::new(n, nu, s[i], m[i] & mask).unwrap()).collect();
        prop_assert_eq!((e[0] * e[1]) * e[2], e[0] * (e[1] * e[2]));
        prop_assert_eq!(e[0] * beg_core::GroupElement::inverse(&e[0]), EElement::identity(n, nu));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..config(0x5eed_0003) })]

    #[test]
    fn closure_ignores_generator_order(n in 1usize..=7, nu in nu(), perm in Just((0..7usize).collect::<Vec<_>>()).prop_shuffle()) {
        // -1 is adjoined: for n = 1, nu = 1 no product of generators reaches it
        let mut gens: Vec<EElement> = perm.iter().filter(|&&i| i < n).map(|&i| EElement::generator(n, nu, i + 1)).collect();
        gens.insert(perm[0] % gens.len(), EElement::minus_one(n, nu));
        let shuffled = closure(EElement::identity(n, nu), &gens, 1 << 10).unwrap();
        let reference = egroup::enumerate(n, nu).unwrap();
        prop_assert_eq!(shuffled.order(), reference.order());
        prop_assert_eq!(shuffled.order_histogram(), reference.order_histogram());
        prop_assert_eq!(shuffled.center_type(), reference.center_type());
    }

    #[test]
    fn braid_word_times_inverse_is_identity(k in 1usize..=2, v in prop_oneof![Just(Variant::Unscaled), Just(Variant::Jones)], raw in prop::collection::vec(1i32..=4, 0..6), signs in prop::collection::vec(any::<bool>(), 6)) {
        let spec = BraidRepSpec::new(k, v).unwrap();
        let g = spec.generator_count() as i32;
        let letters: Vec<i32> = raw.iter().zip(&signs).map(|(&l, &s)| {
            let l = (l - 1) % g + 1;
            if s { -l } else { l }
        }).collect();
        let inverse: Vec<i32> = letters.iter().rev().map(|l| -l).collect();
        let w = BraidWord::new(spec.strands(), letters).unwrap();
        let wi = BraidWord::new(spec.strands(), inverse).unwrap();
        let m = braid::word_matrix(&spec, &w.concat(&wi).unwrap()).unwrap();
        prop_assert!(m.is_identity());
        prop_assert!(braid::word_matrix(&spec, &w).unwrap().is_unitary());
    }
}

proptest! {
    #![proptest_config(config(0x5eed_0004))]

    #[test]
    fn dagger_reverses_products(a in matrix(2), b in matrix(2)) {
        prop_assert_eq!((&a * &b).dagger(), &b.dagger() * &a.dagger());
        prop_assert_eq!(a.dagger().dagger(), a);
    }

    #[test]
    fn trace_is_cyclic(a in matrix(2), b in matrix(2)) {
        prop_assert_eq!((&a * &b).trace(), (&b * &a).trace());
    }

    #[test]
    fn tensor_mixed_product(a in matrix(2), b in matrix(2), c in matrix(2), d in matrix(2)) {
        prop_assert_eq!(&a.tensor(&b) * &c.tensor(&d), (&a * &c).tensor(&(&b * &d)));
        prop_assert_eq!(a.tensor(&b).trace(), a.trace() * b.trace());
    }
}
