//! Factorization over GF(2) and irreducibility tests.
//!
//! `factor` runs the usual three stages: square-free decomposition (a zero
//! derivative means a perfect square in characteristic 2, so we recurse on
//! the square root with doubled multiplicity), distinct-degree splitting via
//! `x^(2^d) mod f`, and equal-degree splitting with random trace maps.

mod cyclotomic;

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use cyclotomic::{
    complete_irreducible_criterion, cyclotomic, is_prime, mult_order, prime_divisors, swan_trinomial,
    swan_trinomial_reducible,
};

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Seed for equal-degree splitting when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x9e37_79b9_7f4a_7c15;

/// A polynomial written as a product of distinct irreducibles with
/// multiplicities, sorted canonically by prime.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<(Poly, u64)>,
}

impl Factorization {
    /// Merges repeated primes and sorts. Primes are trusted to be irreducible.
    pub fn from_pairs<I: IntoIterator<Item = (Poly, u64)>>(pairs: I) -> Self {
        let mut map: BTreeMap<Poly, u64> = BTreeMap::new();
        for (p, e) in pairs {
            if e > 0 {
                *map.entry(p).or_default() += e;
            }
        }
        Factorization { factors: map.into_iter().collect() }
    }

    pub fn factors(&self) -> &[(Poly, u64)] {
        &self.factors
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Poly, u64)> {
        self.factors.iter().map(|(p, e)| (p, *e))
    }

    /// Number of distinct primes.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    /// Number of prime factors counted with multiplicity.
    pub fn total_count(&self) -> u64 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn multiplicity(&self, prime: &Poly) -> u64 {
        self.factors
            .binary_search_by(|(p, _)| p.cmp(prime))
            .map_or(0, |i| self.factors[i].1)
    }

    /// The primary parts `P^h`, one per prime.
    pub fn primary_parts(&self) -> impl Iterator<Item = Poly> + '_ {
        self.factors
            .iter()
            .map(|(p, e)| p.pow(*e).expect("primary part of an existing polynomial"))
    }

    pub fn product(&self) -> Poly {
        self.primary_parts().product()
    }

    /// Every prime raised to twice its multiplicity.
    pub fn squared(&self) -> Factorization {
        Factorization { factors: self.factors.iter().map(|(p, e)| (p.clone(), 2 * e)).collect() }
    }

    /// Image under `x -> x + 1`, which permutes the irreducibles.
    pub fn conjugate(&self) -> Factorization {
        Factorization::from_pairs(self.factors.iter().map(|(p, e)| (p.conjugate(), *e)))
    }
}

impl fmt::Display for Factorization {
    /// `x^3*(x+1)^2*(x^2+x+1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            let atom = p.weight() == 1;
            match (atom, *e) {
                (true, 1) => write!(f, "{p}")?,
                (true, e) => write!(f, "{p}^{e}")?,
                (false, 1) => write!(f, "({p})")?,
                (false, e) => write!(f, "({p})^{e}")?,
            }
        }
        Ok(())
    }
}

/// Factors `a` with the default splitting seed.
pub fn factor(a: &Poly) -> Result<Factorization> {
    factor_with_seed(a, DEFAULT_SEED)
}

/// Factors `a`; the seed only affects the internal split order, never the
/// (canonically sorted) result.
pub fn factor_with_seed(a: &Poly, seed: u64) -> Result<Factorization> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial { op: "factor" });
    }
    if a.is_constant() {
        return Err(Error::ConstantPolynomial { op: "factor" });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for (part, mult) in squarefree_decomposition(a)? {
        for (block, d) in distinct_degree(&part)? {
            let mut primes = Vec::new();
            equal_degree(&block, d, &mut rng, &mut primes)?;
            pairs.extend(primes.into_iter().map(|p| (p, mult)));
        }
    }
    let f = Factorization::from_pairs(pairs);
    debug_assert!(f.factors.iter().all(|(p, _)| is_irreducible(p) == Ok(true)));
    debug_assert_eq!(&f.product(), a);
    Ok(f)
}

/// Pairs `(s_i, i)` with every `s_i` square-free, pairwise coprime, and
/// `a = prod s_i^i`.
pub fn squarefree_decomposition(a: &Poly) -> Result<Vec<(Poly, u64)>> {
    let mut out = Vec::new();
    squarefree_into(a, 1, &mut out)?;
    Ok(out)
}

fn squarefree_into(a: &Poly, scale: u64, out: &mut Vec<(Poly, u64)>) -> Result<()> {
    if a.is_constant() {
        return Ok(());
    }
    let da = a.derivative();
    if da.is_zero() {
        let root = a.try_sqrt().expect("zero derivative implies a square in characteristic 2");
        return squarefree_into(&root, 2 * scale, out);
    }
    let mut c = a.gcd(&da)?;
    let mut w = a.div_exact(&c)?;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let z = w.div_exact(&y)?;
        if !z.is_one() {
            out.push((z, i * scale));
        }
        i += 1;
        c = c.div_exact(&y)?;
        w = y;
    }
    // What is left in c has only multiplicities divisible by 2.
    if !c.is_one() {
        let root = c.try_sqrt().expect("leftover cofactor is a square");
        squarefree_into(&root, 2 * scale, out)?;
    }
    Ok(())
}

/// Splits a square-free `f` into `(g_d, d)` where `g_d` is the product of
/// its irreducible factors of degree `d`.
pub fn distinct_degree(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x = Poly::x();
    let mut h = x.rem(&f)?;
    let mut d = 1;
    while f.deg() >= 2 * d {
        h = h.square().rem(&f)?;
        let g = (&h + &x).gcd(&f)?;
        if !g.is_one() {
            f = f.div_exact(&g)?;
            h = h.rem(&f)?;
            out.push((g, d));
        }
        d += 1;
    }
    if f.deg() > 0 {
        let d = f.deg();
        out.push((f, d));
    }
    Ok(out)
}

fn random_below(rng: &mut ChaCha8Rng, degree: usize) -> Poly {
    let nwords = degree.div_ceil(64);
    let mut words: Vec<u64> = (0..nwords).map(|_| rng.gen()).collect();
    if !degree.is_multiple_of(64) {
        if let Some(last) = words.last_mut() {
            *last &= (1u64 << (degree % 64)) - 1;
        }
    }
    Poly::from_words(words)
}

/// Splits a product of distinct irreducibles of degree `d` with the
/// absolute trace `r + r^2 + ... + r^(2^(d-1))`.
fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) -> Result<()> {
    let n = f.deg();
    if n == d {
        out.push(f.clone());
        return Ok(());
    }
    loop {
        let r = random_below(rng, n);
        let mut trace = r.clone();
        let mut s = r;
        for _ in 1..d {
            s = s.square().rem(f)?;
            trace += &s;
        }
        if trace.is_zero() {
            continue;
        }
        let g = trace.gcd(f)?;
        let dg = g.deg();
        if dg > 0 && dg < n {
            let cofactor = f.div_exact(&g)?;
            equal_degree(&g, d, rng, out)?;
            return equal_degree(&cofactor, d, rng, out);
        }
    }
}

/// Rabin's test: `x^(2^d) = x mod a`, and `gcd(x^(2^(d/l)) - x, a) = 1` for
/// each prime `l | d`.
pub fn is_irreducible(a: &Poly) -> Result<bool> {
    let d = a.degree().ok_or(Error::ZeroPolynomial { op: "is_irreducible" })?;
    match d {
        0 => return Ok(false),
        1 => return Ok(true),
        _ => {}
    }
    if a.is_even() {
        return Ok(false);
    }
    let maximal: Vec<usize> = prime_divisors(d as u64).into_iter().map(|l| d / l as usize).collect();
    let x = Poly::x();
    let mut h = x.clone();
    let mut at_maximal = Vec::with_capacity(maximal.len());
    for k in 1..=d {
        h = h.square().rem(a)?;
        if maximal.contains(&k) {
            at_maximal.push(h.clone());
        }
    }
    if h != x {
        return Ok(false);
    }
    for hk in at_maximal {
        if !(&hk + &x).gcd(a)?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}
