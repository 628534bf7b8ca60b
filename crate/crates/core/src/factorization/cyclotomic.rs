//! Cyclotomic polynomials mod 2 and the integer helpers behind the
//! complete-polynomial irreducibility criterion.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least `e >= 1` with `base^e = 1 (mod modulus)`.
pub fn mult_order(base: u64, modulus: u64) -> Result<u64> {
    if modulus < 2 {
        return Err(Error::InvalidArgument(format!("modulus {modulus} must be at least 2")));
    }
    if gcd_u64(base % modulus, modulus) != 1 {
        return Err(Error::NotCoprime { base, modulus });
    }
    let b = (base % modulus) as u128;
    let m = modulus as u128;
    let mut acc = b;
    let mut e = 1;
    while acc != 1 {
        acc = acc * b % m;
        e += 1;
    }
    Ok(e)
}

/// Whether `1 + x + ... + x^m` is irreducible, decided arithmetically:
/// `m + 1` prime and 2 a primitive root modulo it.
///
/// `m = 1` (modulus 2, where 2 is not a unit) is the degenerate case
/// `x + 1`, which is irreducible.
pub fn complete_irreducible_criterion(m: u64) -> bool {
    match m {
        0 => false,
        1 => true,
        _ => is_prime(m + 1) && mult_order(2, m + 1) == Ok(m),
    }
}

/// The `k`-th cyclotomic polynomial reduced mod 2, for odd `k`.
///
/// Built bottom-up over the divisors of `k`: `Phi_d = (x^d + 1) / prod Phi_e`
/// over proper divisors `e` of `d`, each division exact.
pub fn cyclotomic(k: u64) -> Result<Poly> {
    if k == 0 {
        return Err(Error::InvalidArgument("cyclotomic index must be positive".into()));
    }
    if k.is_multiple_of(2) {
        return Err(Error::EvenCyclotomicIndex(k));
    }
    let mut table: BTreeMap<u64, Poly> = BTreeMap::new();
    for d in divisors(k) {
        let mut phi = Poly::monomial(d as usize) + Poly::one();
        for e in divisors(d).into_iter().filter(|&e| e < d) {
            phi = phi.div_exact(&table[&e])?;
        }
        table.insert(d, phi);
    }
    Ok(table.remove(&k).expect("k divides itself"))
}

/// `x^(8n) + x^k + 1`.
pub fn swan_trinomial(n: u64, k: u64) -> Poly {
    Poly::from_exponents([8 * n as usize, k as usize, 0])
}

/// Reducibility of `x^(8n) + x^k + 1` for `8n > k >= 1`. Always true; kept
/// as an explicit claim so the lemma checks can compare it with `factor`.
pub fn swan_trinomial_reducible(n: u64, k: u64) -> Result<bool> {
    if n == 0 || k == 0 || k >= 8 * n {
        return Err(Error::InvalidArgument(format!("need 8n > k >= 1, got n = {n}, k = {k}")));
    }
    Ok(true)
}
