//! Divisor sums `sigma`, unitary divisor sums `sigma*`, and `omega`.
//!
//! Both sums are multiplicative, so they are evaluated on primary parts:
//! `sigma*(P^h) = 1 + P^h` and `sigma(P^h) = 1 + P + ... + P^h`.

use crate::error::{Error, Result};
use crate::factorization::{factor, Factorization};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorProfile {
    pub omega: usize,
    pub is_even_poly: bool,
    pub sigma: Poly,
    pub sigma_star: Poly,
}

fn nonconstant(a: &Poly, op: &'static str) -> Result<()> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial { op });
    }
    if a.is_constant() {
        return Err(Error::ConstantPolynomial { op });
    }
    Ok(())
}

/// `1 + p + ... + p^k`, Horner style.
pub fn geometric_sum(p: &Poly, k: u64) -> Poly {
    let one = Poly::one();
    (0..k).fold(one.clone(), |acc, _| &(&acc * p) + &one)
}

pub fn sigma_star_of(f: &Factorization) -> Poly {
    f.primary_parts().map(|q| q + Poly::one()).product()
}

pub fn sigma_of(f: &Factorization) -> Poly {
    f.iter().map(|(p, e)| geometric_sum(p, e)).product()
}

pub fn sigma_star(a: &Poly) -> Result<Poly> {
    nonconstant(a, "sigma_star")?;
    Ok(sigma_star_of(&factor(a)?))
}

pub fn sigma(a: &Poly) -> Result<Poly> {
    nonconstant(a, "sigma")?;
    Ok(sigma_of(&factor(a)?))
}

pub fn is_unitary_perfect(a: &Poly) -> Result<bool> {
    Ok(&sigma_star(a)? == a)
}

pub fn is_perfect(a: &Poly) -> Result<bool> {
    Ok(&sigma(a)? == a)
}

/// Number of distinct irreducible factors; `omega(1) = 0`.
pub fn omega(a: &Poly) -> Result<usize> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial { op: "omega" });
    }
    if a.is_one() {
        return Ok(0);
    }
    Ok(factor(a)?.omega())
}

/// Whether `d` divides `a` with `gcd(d, a/d) = 1`.
pub fn unitary_divisor_check(d: &Poly, a: &Poly) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial { op: "unitary_divisor_check" });
    }
    if d.is_zero() {
        return Ok(false);
    }
    let (q, r) = a.divrem(d)?;
    Ok(r.is_zero() && d.gcd(&q)?.is_one())
}

pub fn profile(a: &Poly) -> Result<DivisorProfile> {
    nonconstant(a, "profile")?;
    let f = factor(a)?;
    Ok(DivisorProfile {
        omega: f.omega(),
        is_even_poly: a.is_even(),
        sigma: sigma_of(&f),
        sigma_star: sigma_star_of(&f),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn build(parts: &[(&str, u64)]) -> Poly {
        parts.iter().map(|(q, e)| p(q).pow(*e).unwrap()).product()
    }

    #[test]
    fn sigma_star_examples() {
        assert_eq!(sigma_star(&p("x^2+x")).unwrap(), p("x^2+x"));
        assert_eq!(sigma_star(&p("x^2")).unwrap(), p("x^2+1"));
        let b = build(&[("x", 3), ("x+1", 2), ("x^2+x+1", 1)]);
        assert_eq!(sigma_star(&b).unwrap(), b);
        assert!(matches!(sigma_star(&Poly::one()), Err(Error::ConstantPolynomial { .. })));
        assert!(matches!(sigma_star(&Poly::zero()), Err(Error::ZeroPolynomial { .. })));
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&p("x^2")).unwrap(), p("1+x+x^2"));
        let a = build(&[("x", 2), ("x+1", 2)]);
        assert_eq!(sigma(&a).unwrap(), p("x^4+x^2+1").square().try_sqrt().unwrap());
        assert_eq!(sigma(&a).unwrap(), p("x^2+x+1").square());
        assert_eq!(sigma(&p("x")).unwrap(), p("x+1"));
        assert!(sigma(&Poly::one()).is_err());
    }

    #[test]
    fn predicate_examples() {
        assert!(is_unitary_perfect(&p("x^2+x")).unwrap());
        let thm41_i = build(&[("x", 6), ("x+1", 4), ("1+x+x^2", 3), ("1+x+x^4", 1)]);
        assert!(is_unitary_perfect(&thm41_i).unwrap());
        // sigma*(x^2 (x+1)) = (x^2+1) x = x^3 + x
        let a = build(&[("x", 2), ("x+1", 1)]);
        assert_eq!(sigma_star(&a).unwrap(), p("x^3+x"));
        assert!(!is_unitary_perfect(&a).unwrap());

        // sigma(x^2 (x+1)^2) = (x^2+x+1)^2 = x^4+x^2+1, not x^4+x^2.
        assert!(!is_perfect(&build(&[("x", 2), ("x+1", 2)])).unwrap());
        assert!(is_perfect(&build(&[("x", 3), ("x+1", 3)])).unwrap());
        assert!(is_perfect(&p("x^2+x")).unwrap());
        assert!(!is_perfect(&p("x^3")).unwrap());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&p("x^2+x")).unwrap(), 2);
        let thm41_i = build(&[("x", 6), ("x+1", 4), ("1+x+x^2", 3), ("1+x+x^4", 1)]);
        assert_eq!(omega(&thm41_i).unwrap(), 4);
        assert_eq!(omega(&p("x^4")).unwrap(), 1);
        assert_eq!(omega(&Poly::one()).unwrap(), 0);
        assert!(omega(&Poly::zero()).is_err());
    }

    #[test]
    fn unitary_divisor_examples() {
        let a = build(&[("x", 2), ("x+1", 1)]);
        assert!(unitary_divisor_check(&p("x^2"), &a).unwrap());
        assert!(!unitary_divisor_check(&p("x"), &a).unwrap());
        assert!(unitary_divisor_check(&Poly::one(), &a).unwrap());
        assert!(!unitary_divisor_check(&p("x^2+x+1"), &a).unwrap());
        assert!(unitary_divisor_check(&a, &a).unwrap());
    }

    #[test]
    fn profile_fields() {
        let a = build(&[("x", 3), ("x^2+x+1", 1)]);
        let pr = profile(&a).unwrap();
        assert_eq!(pr.omega, 2);
        assert!(pr.is_even_poly);
        assert_eq!(pr.sigma.degree(), a.degree());
        assert_eq!(pr.sigma_star.degree(), a.degree());
        assert!(!profile(&p("x^2+x+1")).unwrap().is_even_poly);
    }

    /// Sum of all divisors by trial division over every polynomial of
    /// degree at most `deg a`.
    fn sigma_by_enumeration(a: &Poly) -> Poly {
        let d = a.degree().unwrap();
        (1u64..1 << (d + 1))
            .map(Poly::from_word)
            .filter(|q| q.divides(a))
            .fold(Poly::zero(), |acc, q| &acc + &q)
    }

    #[test]
    fn sigma_matches_enumeration() {
        for w in 2u64..1 << 9 {
            let a = Poly::from_word(w);
            assert_eq!(sigma(&a).unwrap(), sigma_by_enumeration(&a), "{a}");
        }
        let a = build(&[("x", 2), ("x+1", 2)]);
        assert_eq!(sigma_by_enumeration(&a), p("x^4+x^2+1"));
    }

    #[test]
    fn geometric_sum_is_complete_at_x() {
        for k in 0..20 {
            assert_eq!(geometric_sum(&Poly::x(), k), Poly::complete(k as usize));
        }
    }
}
