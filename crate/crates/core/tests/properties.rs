use gf2_unitary::divisor_sums::{sigma, sigma_of, sigma_star, sigma_star_of};
use gf2_unitary::factorization::{factor, factor_with_seed, is_irreducible};
use gf2_unitary::{MulKernel, Poly};
use proptest::prelude::*;

/// Polynomials of degree below `64 * words`.
fn poly_up_to(words: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(any::<u64>(), 0..=words).prop_map(Poly::from_words)
}

fn with_constant_term(words: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(any::<u64>(), 1..=words).prop_map(|mut w| {
        w[0] |= 1;
        Poly::from_words(w)
    })
}

fn small_poly(max_degree: u32) -> impl Strategy<Value = Poly> {
    (1u64..1 << (max_degree + 1)).prop_map(Poly::from_word)
}

fn nonconstant(max_degree: u32) -> impl Strategy<Value = Poly> {
    (2u64..1 << (max_degree + 1)).prop_map(Poly::from_word)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn ring_laws(a in poly_up_to(8), b in poly_up_to(8), c in poly_up_to(8)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &a, b.clone());
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn kernels_agree(a in poly_up_to(8), b in poly_up_to(8)) {
        let naive = a.mul_naive(&b);
        prop_assert_eq!(a.mul_with_kernel(&b, MulKernel::Comb).unwrap(), naive.clone());
        if MulKernel::Clmul.is_available() {
            prop_assert_eq!(a.mul_with_kernel(&b, MulKernel::Clmul).unwrap(), naive.clone());
        }
        prop_assert_eq!(&a * &b, naive);
    }

    #[test]
    fn division_identity(a in poly_up_to(8), b in poly_up_to(4)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both(a in poly_up_to(2), b in poly_up_to(2), c in poly_up_to(1)) {
        prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
        let g = (&a * &c).gcd(&(&b * &c)).unwrap();
        prop_assert!(g.divides(&(&a * &c)) && g.divides(&(&b * &c)));
        prop_assert!(c.divides(&g));
    }

    #[test]
    fn squares_and_roots(a in poly_up_to(8)) {
        let s = a.square();
        prop_assert_eq!(&s, &(&a * &a));
        prop_assert_eq!(s.try_sqrt(), Some(a.clone()));
        prop_assert!(s.derivative().is_zero());
        if !a.derivative().is_zero() {
            prop_assert_eq!(a.try_sqrt(), None);
        }
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism(a in poly_up_to(8), b in poly_up_to(8)) {
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        prop_assert_eq!((&a + &b).conjugate(), &a.conjugate() + &b.conjugate());
        prop_assert_eq!(a.conjugate().degree(), a.degree());
    }

    #[test]
    fn conjugation_matches_substitution(a in poly_up_to(3)) {
        // Horner evaluation at x+1.
        let x1 = Poly::x_plus_one();
        let by_horner = a.exponents().rev().fold((Poly::zero(), None::<usize>), |(acc, prev), e| {
            let acc = match prev {
                Some(p) => &acc * &x1.pow((p - e) as u64).unwrap(),
                None => acc,
            };
            (&acc + &Poly::one(), Some(e))
        });
        let (acc, last) = by_horner;
        let expected = match last {
            Some(e) => &acc * &x1.pow(e as u64).unwrap(),
            None => Poly::zero(),
        };
        prop_assert_eq!(a.conjugate(), expected);
    }

    #[test]
    fn reversal_is_multiplicative(a in with_constant_term(4), b in with_constant_term(4)) {
        prop_assert_eq!((&a * &b).reverse().unwrap(), &a.reverse().unwrap() * &b.reverse().unwrap());
        prop_assert_eq!(a.reverse().unwrap().reverse().unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly_up_to(8), b in poly_up_to(8)) {
        let ((a0, a1), (b0, b1)) = (a.eval_at_01(), b.eval_at_01());
        prop_assert_eq!((&a * &b).eval_at_01(), (a0 & b0, a1 & b1));
        prop_assert_eq!((&a + &b).eval_at_01(), (a0 ^ b0, a1 ^ b1));
    }

    #[test]
    fn text_round_trip(a in poly_up_to(8)) {
        prop_assert_eq!(a.to_string().parse::<Poly>().unwrap(), a.clone());
        prop_assert_eq!(a.to_hex().parse::<Poly>().unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn factorization_round_trip(a in poly_up_to(2)) {
        prop_assume!(!a.is_zero());
        let f = factor(&a).unwrap();
        prop_assert_eq!(f.product(), a.clone());
        for (p, e) in f.iter() {
            prop_assert!(e >= 1);
            prop_assert!(is_irreducible(p).unwrap());
        }
        let primes: Vec<&Poly> = f.iter().map(|(p, _)| p).collect();
        prop_assert!(primes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn factorization_ignores_the_seed(a in poly_up_to(2), seed in any::<u64>()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(factor_with_seed(&a, seed).unwrap(), factor(&a).unwrap());
    }

    #[test]
    fn divisor_sums_are_multiplicative(a in nonconstant(16), b in nonconstant(16)) {
        prop_assume!(a.gcd(&b).unwrap().is_one());
        let ab = &a * &b;
        prop_assert_eq!(sigma_star(&ab).unwrap(), &sigma_star(&a).unwrap() * &sigma_star(&b).unwrap());
        prop_assert_eq!(sigma(&ab).unwrap(), &sigma(&a).unwrap() * &sigma(&b).unwrap());
    }

    #[test]
    fn divisor_sums_commute_with_conjugation(a in nonconstant(20)) {
        prop_assert_eq!(sigma_star(&a.conjugate()).unwrap(), sigma_star(&a).unwrap().conjugate());
        prop_assert_eq!(sigma(&a.conjugate()).unwrap(), sigma(&a).unwrap().conjugate());
    }

    #[test]
    fn unitary_sum_of_a_square(a in nonconstant(20)) {
        let f = factor(&a).unwrap();
        prop_assert_eq!(sigma_star_of(&f.squared()), sigma_star_of(&f).square());
        prop_assert_eq!(sigma_of(&f).degree(), a.degree());
    }

    #[test]
    fn irreducible_iff_single_prime(a in small_poly(14)) {
        let f = factor(&a).unwrap();
        let single = f.omega() == 1 && f.total_count() == 1;
        prop_assert_eq!(is_irreducible(&a).unwrap(), single && !a.is_constant());
    }
}

/// Raw-word arithmetic used as an oracle, independent of `Poly`.
mod raw {
    pub fn deg(a: u64) -> i32 {
        63 - a.leading_zeros() as i32
    }

    pub fn divrem(mut a: u64, b: u64) -> (u64, u64) {
        let mut q = 0;
        while a != 0 && deg(a) >= deg(b) {
            let s = deg(a) - deg(b);
            q ^= 1 << s;
            a ^= b << s;
        }
        (q, a)
    }

    pub fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            (a, b) = (b, divrem(a, b).1);
        }
        a
    }

    /// `(sigma, sigma*)` by listing every divisor.
    pub fn divisor_sums(a: u64) -> (u64, u64) {
        let (mut s, mut u) = (0, 0);
        for d in 1..1u64 << (deg(a) + 1) {
            let (q, r) = divrem(a, d);
            if r == 0 {
                s ^= d;
                if gcd(d, q) == 1 {
                    u ^= d;
                }
            }
        }
        (s, u)
    }
}

#[test]
fn divisor_sums_match_enumeration_to_degree_nine() {
    for w in 2u64..1 << 10 {
        let a = Poly::from_word(w);
        let (s, u) = raw::divisor_sums(w);
        assert_eq!(sigma(&a).unwrap(), Poly::from_word(s), "sigma({a})");
        assert_eq!(sigma_star(&a).unwrap(), Poly::from_word(u), "sigma*({a})");
    }
}

#[test]
fn raw_oracle_sanity() {
    assert_eq!(raw::divrem(0b1011, 0b11), (0b110, 1));
    assert_eq!(raw::gcd(0b110, 0b1010), 0b110);
    assert_eq!(raw::divisor_sums(0b110), (0b110, 0b110));
}
