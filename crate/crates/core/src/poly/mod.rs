//! Bit-packed polynomials over GF(2).
//!
//! Bit `i` of the flattened word sequence is the coefficient of `x^i`, so a
//! left shift by `k` bits is multiplication by `x^k`. The word vector never
//! carries trailing zero words, which makes equal polynomials bitwise equal.

mod clmul;
mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

pub use clmul::MulKernel;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;
const EVEN_BITS: u64 = 0x5555_5555_5555_5555;

/// Largest degree `pow` is allowed to produce.
pub const MAX_POW_DEGREE: u64 = 1 << 32;

/// A polynomial with coefficients in GF(2).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    words: Vec<u64>,
}

/// `dst ^= src * x^shift`. `dst` must be long enough to hold every set bit.
pub(crate) fn xor_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let ws = shift / WORD_BITS;
    let bs = shift % WORD_BITS;
    if bs == 0 {
        for (i, &w) in src.iter().enumerate() {
            if w != 0 {
                dst[i + ws] ^= w;
            }
        }
    } else {
        for (i, &w) in src.iter().enumerate() {
            if w == 0 {
                continue;
            }
            dst[i + ws] ^= w << bs;
            let carry = w >> (WORD_BITS - bs);
            if carry != 0 {
                dst[i + ws + 1] ^= carry;
            }
        }
    }
}

/// Index of the highest set bit in `words[..=top_word]`, scanning downward.
fn top_bit(words: &[u64], top_word: usize) -> Option<usize> {
    (0..=top_word)
        .rev()
        .find(|&i| words[i] != 0)
        .map(|i| i * WORD_BITS + (WORD_BITS - 1 - words[i].leading_zeros() as usize))
}

fn spread32(x: u32) -> u64 {
    let mut x = x as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & EVEN_BITS;
    x
}

fn compact32(x: u64) -> u32 {
    let mut x = x & EVEN_BITS;
    x = (x | (x >> 1)) & 0x3333_3333_3333_3333;
    x = (x | (x >> 2)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x >> 4)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x >> 8)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x >> 16)) & 0x0000_0000_FFFF_FFFF;
    x as u32
}

impl Poly {
    pub fn zero() -> Self {
        Poly { words: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { words: vec![1] }
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly { words: vec![0b10] }
    }

    /// The polynomial `x + 1`.
    pub fn x_plus_one() -> Self {
        Poly { words: vec![0b11] }
    }

    /// `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut words = vec![0u64; n / WORD_BITS + 1];
        words[n / WORD_BITS] = 1 << (n % WORD_BITS);
        Poly { words }
    }

    /// Polynomial whose coefficient bits are the bits of `w`.
    pub fn from_word(w: u64) -> Self {
        Self::from_words(vec![w])
    }

    /// Builds a polynomial from little-endian coefficient words.
    pub fn from_words(words: Vec<u64>) -> Self {
        let mut p = Poly { words };
        p.normalize();
        p
    }

    /// Polynomial with the given exponents set; repeated exponents cancel.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut words = Vec::new();
        for e in exps {
            let w = e / WORD_BITS;
            if words.len() <= w {
                words.resize(w + 1, 0);
            }
            words[w] ^= 1 << (e % WORD_BITS);
        }
        Self::from_words(words)
    }

    /// The complete polynomial `1 + x + ... + x^h`.
    pub fn complete(h: usize) -> Self {
        let n = h + 1;
        let mut words = vec![u64::MAX; n / WORD_BITS];
        if !n.is_multiple_of(WORD_BITS) {
            words.push((1u64 << (n % WORD_BITS)) - 1);
        }
        Poly { words }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The low 64 coefficients, if the polynomial fits in one word.
    pub fn as_word(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    /// True for `0` and `1`.
    pub fn is_constant(&self) -> bool {
        self.words.len() <= 1 && self.words.first().is_none_or(|&w| w <= 1)
    }

    /// Degree, or `None` for the zero polynomial (degree negative infinity).
    ///
    /// `Option`'s ordering puts `None` below every `Some`, which matches the
    /// convention `deg 0 = -inf` in comparisons.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * WORD_BITS + (WORD_BITS - 1 - last.leading_zeros() as usize))
    }

    /// Degree of a polynomial known to be nonzero.
    pub(crate) fn deg(&self) -> usize {
        self.degree().expect("degree of the zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / WORD_BITS)
            .is_some_and(|w| (w >> (i % WORD_BITS)) & 1 == 1)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// Exponents with a nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            (0..WORD_BITS).filter(move |b| (w >> b) & 1 == 1).map(move |b| i * WORD_BITS + b)
        })
    }

    /// `(a(0), a(1))`.
    pub fn eval_at_01(&self) -> (bool, bool) {
        (self.coeff(0), self.weight() % 2 == 1)
    }

    /// A polynomial is even when it has a root in GF(2).
    pub fn is_even(&self) -> bool {
        let (at0, at1) = self.eval_at_01();
        !at0 || !at1
    }

    /// Multiplication by `x^k`.
    pub fn shl(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut words = vec![0u64; self.words.len() + k / WORD_BITS + 1];
        xor_shifted(&mut words, &self.words, k);
        Poly::from_words(words)
    }

    /// Division by `x^k`, dropping the low `k` coefficients.
    pub fn shr(&self, k: usize) -> Poly {
        let ws = k / WORD_BITS;
        let bs = k % WORD_BITS;
        if ws >= self.words.len() {
            return Poly::zero();
        }
        let src = &self.words[ws..];
        let words = (0..src.len())
            .map(|i| {
                let hi = if bs == 0 { 0 } else { src.get(i + 1).map_or(0, |w| w << (WORD_BITS - bs)) };
                (src[i] >> bs) | hi
            })
            .collect();
        Poly::from_words(words)
    }

    pub fn mul_with_kernel(&self, other: &Poly, kernel: MulKernel) -> Option<Poly> {
        if self.is_zero() || other.is_zero() {
            return Some(Poly::zero());
        }
        clmul::mul_words(&self.words, &other.words, kernel).map(Poly::from_words)
    }

    /// Per-bit shift-and-XOR product; the reference for the fast kernels.
    pub fn mul_naive(&self, other: &Poly) -> Poly {
        self.mul_with_kernel(other, MulKernel::Naive).expect("naive kernel is always available")
    }

    pub fn square(&self) -> Poly {
        let mut words = Vec::with_capacity(2 * self.words.len());
        for &w in &self.words {
            words.push(spread32(w as u32));
            words.push(spread32((w >> 32) as u32));
        }
        Poly::from_words(words)
    }

    /// Inverse of squaring: `Some(r)` with `r^2 = self` iff every odd
    /// coefficient is zero.
    pub fn try_sqrt(&self) -> Option<Poly> {
        if self.words.iter().any(|w| w & !EVEN_BITS != 0) {
            return None;
        }
        let words = self
            .words
            .chunks(2)
            .map(|c| {
                let lo = compact32(c[0]) as u64;
                let hi = c.get(1).map_or(0, |&w| compact32(w) as u64);
                lo | (hi << 32)
            })
            .collect();
        Some(Poly::from_words(words))
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        Poly::from_words(self.words.iter().map(|w| (w >> 1) & EVEN_BITS).collect())
    }

    /// Quotient and remainder with `deg(r) < deg(b)`.
    pub fn divrem(&self, b: &Poly) -> Result<(Poly, Poly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let mut r = self.words.clone();
        let Some(mut dr) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if dr < db {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![0u64; (dr - db) / WORD_BITS + 1];
        loop {
            let s = dr - db;
            xor_shifted(&mut r, &b.words, s);
            q[s / WORD_BITS] |= 1 << (s % WORD_BITS);
            match top_bit(&r, dr / WORD_BITS) {
                Some(d) if d >= db => dr = d,
                _ => break,
            }
        }
        Ok((Poly::from_words(q), Poly::from_words(r)))
    }

    pub fn rem(&self, b: &Poly) -> Result<Poly> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let mut r = self.words.clone();
        let Some(mut dr) = self.degree() else {
            return Ok(Poly::zero());
        };
        while dr >= db {
            xor_shifted(&mut r, &b.words, dr - db);
            match top_bit(&r, dr / WORD_BITS) {
                Some(d) => dr = d,
                None => break,
            }
        }
        Ok(Poly::from_words(r))
    }

    /// Exact quotient; errors if `b` does not divide `self`.
    pub fn div_exact(&self, b: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(b)?;
        if !r.is_zero() {
            return Err(Error::InvalidArgument(format!("{b} does not divide {self}")));
        }
        Ok(q)
    }

    pub fn divides(&self, a: &Poly) -> bool {
        !self.is_zero() && a.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Monic gcd. `gcd(a, 0) = a`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// `self^e` by repeated squaring; `0^0 = 1`.
    pub fn pow(&self, e: u64) -> Result<Poly> {
        if e == 0 {
            return Ok(Poly::one());
        }
        let Some(d) = self.degree() else {
            return Ok(Poly::zero());
        };
        if (d as u64).checked_mul(e).is_none_or(|n| n > MAX_POW_DEGREE) {
            return Err(Error::ResourceLimit(format!(
                "pow would produce degree {d} * {e}, above {MAX_POW_DEGREE}"
            )));
        }
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        Ok(result)
    }

    /// `self^(2^n)`.
    pub fn frobenius(&self, n: u32) -> Poly {
        (0..n).fold(self.clone(), |p, _| p.square())
    }

    /// `(self * other) mod m`.
    pub fn mul_mod(&self, other: &Poly, m: &Poly) -> Result<Poly> {
        (self * other).rem(m)
    }

    /// `x^(2^n) mod m`, by `n` modular squarings.
    pub fn x_pow_two_pow_mod(n: usize, m: &Poly) -> Result<Poly> {
        let mut acc = Poly::x().rem(m)?;
        for _ in 0..n {
            acc = acc.square().rem(m)?;
        }
        Ok(acc)
    }

    /// Substitution `x -> x + 1`.
    ///
    /// Uses the Taylor shift: for `k` a power of two, `(x+1)^k = x^k + 1`,
    /// so a block `lo + x^k hi` maps to `T(lo) + T(hi) + x^k T(hi)`.
    pub fn conjugate(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let len = self.words.len().next_power_of_two();
        let mut w = self.words.clone();
        w.resize(len, 0);
        const LOW_HALVES: [u64; 6] = [
            0x5555_5555_5555_5555,
            0x3333_3333_3333_3333,
            0x0F0F_0F0F_0F0F_0F0F,
            0x00FF_00FF_00FF_00FF,
            0x0000_FFFF_0000_FFFF,
            0x0000_0000_FFFF_FFFF,
        ];
        for (level, mask) in LOW_HALVES.iter().enumerate() {
            let k = 1 << level;
            for word in w.iter_mut() {
                *word ^= (*word >> k) & mask;
            }
        }
        let mut half = 1;
        while half < len {
            for block in w.chunks_mut(2 * half) {
                let (lo, hi) = block.split_at_mut(half);
                for (l, h) in lo.iter_mut().zip(hi.iter()) {
                    *l ^= *h;
                }
            }
            half *= 2;
        }
        Poly::from_words(w)
    }

    /// The reciprocal `x^deg * a(1/x)`. Requires a nonzero constant term so
    /// the degree is preserved.
    pub fn reverse(&self) -> Result<Poly> {
        let d = self.degree().ok_or(Error::ZeroPolynomial { op: "reverse" })?;
        if !self.coeff(0) {
            return Err(Error::ZeroConstantTerm { op: "reverse" });
        }
        let words: Vec<u64> = self.words.iter().rev().map(|w| w.reverse_bits()).collect();
        let excess = self.words.len() * WORD_BITS - 1 - d;
        Ok(Poly::from_words(words).shr(excess))
    }

    /// Substitution `x -> x^k`. For `k = 0` this is the constant `a(1)`.
    pub fn substitute_x_pow(&self, k: usize) -> Poly {
        if k == 0 {
            return if self.eval_at_01().1 { Poly::one() } else { Poly::zero() };
        }
        Poly::from_exponents(self.exponents().map(|e| e * k))
    }

    /// Lowercase hex literal, most significant nibble first (`0xb` for `x^3+x+1`).
    pub fn to_hex(&self) -> String {
        let Some(last) = self.words.last() else {
            return "0x0".to_string();
        };
        let mut s = format!("0x{last:x}");
        for w in self.words.iter().rev().skip(1) {
            s.push_str(&format!("{w:016x}"));
        }
        s
    }
}

impl Ord for Poly {
    /// Canonical order: by degree, then by coefficient bits read as an integer.
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.words.len() >= rhs.words.len() { (self, rhs) } else { (rhs, self) };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w ^= s;
        }
        Poly::from_words(words)
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        if self.words.len() < rhs.words.len() {
            self.words.resize(rhs.words.len(), 0);
        }
        for (w, r) in self.words.iter_mut().zip(&rhs.words) {
            *w ^= r;
        }
        self.normalize();
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        Poly::from_words(clmul::mul_words_fast(&self.words, &rhs.words))
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl fmt::Display for Poly {
    /// Descending term sum without spaces: `x^3+x+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for e in self.exponents().rev() {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match e {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert!((p("x+1") + p("x+1")).is_zero());
        assert_eq!(p("x^2") + Poly::zero(), p("x^2"));
        assert_eq!(p("x^2+x+1") + p("x+1"), p("x^2"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("x+1") * p("x+1"), p("x^2+1"));
        assert_eq!(p("x^2+x+1") * p("x+1"), p("x^3+1"));
        let expected = p("x^8+x^7+1");
        assert_eq!(p("x^2+x+1").mul_naive(&p("x^6+x^4+x^3+x+1")), expected);
        assert_eq!(p("x^2+x+1") * p("x^6+x^4+x^3+x+1"), expected);
    }

    #[test]
    fn square_and_sqrt() {
        assert_eq!(p("x+1").square(), p("x^2+1"));
        assert_eq!(p("x^2+x+1").square(), p("x^4+x^2+1"));
        assert!(Poly::zero().square().is_zero());
        assert_eq!(p("x^4+x^2+1").try_sqrt(), Some(p("x^2+x+1")));
        assert_eq!(p("x^3+x+1").try_sqrt(), None);
        let r = p("x^4+x^2").try_sqrt().unwrap();
        assert_eq!(r, p("x^2+x"));
        assert_eq!(r.square(), p("x^4+x^2"));
        assert_eq!(Poly::zero().try_sqrt(), Some(Poly::zero()));
    }

    #[test]
    fn divrem_examples() {
        let (q, r) = p("x^8+x^7+1").divrem(&p("x^2+x+1")).unwrap();
        assert_eq!((q.clone(), r.clone()), (p("x^6+x^4+x^3+x+1"), Poly::zero()));
        assert_eq!(q.mul_naive(&p("x^2+x+1")) + r, p("x^8+x^7+1"));
        assert_eq!(p("x^3+1").divrem(&p("x+1")).unwrap(), (p("x^2+x+1"), Poly::zero()));
        assert_eq!(p("x").divrem(&p("x^2")).unwrap(), (Poly::zero(), p("x")));
        assert_eq!(p("x").divrem(&Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p("x^2+x").gcd(&p("x^2+1")).unwrap(), p("x+1"));
        assert_eq!(p("x^3+1").gcd(&p("x^2+x+1")).unwrap(), p("x^2+x+1"));
        assert_eq!(p("x").gcd(&p("x+1")).unwrap(), Poly::one());
        assert_eq!(p("x^3+x").gcd(&Poly::zero()).unwrap(), p("x^3+x"));
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Err(Error::GcdOfZeros));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(p("x+1").pow(2).unwrap(), p("x^2+1"));
        assert_eq!(p("x^2+x+1").pow(0).unwrap(), Poly::one());
        assert_eq!(Poly::zero().pow(0).unwrap(), Poly::one());
        let prod = p("x").pow(5).unwrap() * p("x+1").pow(4).unwrap();
        assert_eq!(prod, p("x^9+x^5"));
        assert_eq!(prod.degree(), Some(9));
        assert_eq!(p("x^2+x+1").pow(8).unwrap(), p("x^2+x+1").frobenius(3));
        assert!(matches!(p("x^2").pow(1 << 32), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("x^2+x+1").conjugate(), p("x^2+x+1"));
        assert_eq!(p("x").conjugate(), p("x+1"));
        let a = p("x").pow(3).unwrap() * p("x+1").pow(2).unwrap() * p("x^2+x+1");
        let b = p("x").pow(2).unwrap() * p("x+1").pow(3).unwrap() * p("x^2+x+1");
        assert_eq!(a.conjugate(), b);
        assert!(Poly::zero().conjugate().is_zero());
        assert_eq!(Poly::one().conjugate(), Poly::one());
    }

    #[test]
    fn conjugate_across_word_boundaries() {
        // (x+1)^n expanded by repeated multiplication versus x^n conjugated.
        let mut power = Poly::one();
        for n in 0..300 {
            assert_eq!(Poly::monomial(n).conjugate(), power, "n = {n}");
            power = &power * &Poly::x_plus_one();
        }
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(p("x^3+x+1").reverse().unwrap(), p("x^3+x^2+1"));
        assert_eq!(p("1+x+x^2").reverse().unwrap(), p("1+x+x^2"));
        assert_eq!(Poly::one().reverse().unwrap(), Poly::one());
        assert!(matches!(p("x^2+x").reverse(), Err(Error::ZeroConstantTerm { .. })));
        assert!(matches!(Poly::zero().reverse(), Err(Error::ZeroPolynomial { .. })));
        let long = Poly::from_exponents([0, 70, 130]);
        assert_eq!(long.reverse().unwrap(), Poly::from_exponents([0, 60, 130]));
    }

    #[test]
    fn complete_examples() {
        assert_eq!(Poly::complete(2), p("1+x+x^2"));
        assert_eq!(Poly::complete(0), Poly::one());
        assert_eq!(Poly::complete(4), p("1+x+x^2+x^3+x^4"));
        assert_eq!(Poly::complete(63).weight(), 64);
        assert_eq!(Poly::complete(64).degree(), Some(64));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p("x^2+x+1").eval_at_01(), (true, true));
        assert_eq!(p("x^2+x").eval_at_01(), (false, false));
        assert_eq!(p("x+1").eval_at_01(), (true, false));
    }

    #[test]
    fn substitute_examples() {
        assert_eq!(p("1+x+x^2").substitute_x_pow(3), p("1+x^3+x^6"));
        assert_eq!(Poly::complete(4).substitute_x_pow(5), p("1+x^5+x^10+x^15+x^20"));
        assert_eq!(p("x^7+x^2+1").substitute_x_pow(1), p("x^7+x^2+1"));
    }

    #[test]
    fn degree_of_zero_is_below_everything() {
        assert_eq!(Poly::zero().degree(), None);
        assert!(Poly::zero().degree() < Poly::one().degree());
        assert!(Poly::zero() < Poly::one());
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![p("x^2"), p("x+1"), p("x^2+x+1"), p("x"), Poly::monomial(64)];
        v.sort();
        assert_eq!(v, vec![p("x"), p("x+1"), p("x^2"), p("x^2+x+1"), Poly::monomial(64)]);
    }

    #[test]
    fn derivative_kills_even_terms() {
        assert_eq!(p("x^3+x^2+x+1").derivative(), p("x^2+1"));
        assert!(p("x^4+x^2+1").derivative().is_zero());
    }

    #[test]
    fn hex_output() {
        assert_eq!(p("x^3+x+1").to_hex(), "0xb");
        assert_eq!(Poly::monomial(64).to_hex(), "0x10000000000000000");
        assert_eq!(Poly::zero().to_hex(), "0x0");
    }
}
