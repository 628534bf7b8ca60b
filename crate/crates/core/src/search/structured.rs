//! Search over exponent shapes.
//!
//! A candidate `A = x^h (x+1)^k P_1^(e_1) ... ` is unitary perfect iff the
//! exponent vector of `sigma*(A) = (1+x^c)^(2^a) (1+(x+1)^d)^(2^b) ...`
//! equals that of `A`. Each factor `1 + x^c`, `1 + (x+1)^d`, `1 + P^u` is
//! factored once, so testing a shape is a handful of integer additions.
//! Every prime dividing one of those factors must itself divide `A`, which
//! closes the set of admissible shapes under a cheap support test.
//!
//! Shapes enumerated: `x^h (x+1)^k` with `h = 2^a c`, `k = 2^b d`;
//! `x^h (x+1)^k P^(2^l)`; and `x^h (x+1)^k P^(2^l u) Q^(2^m)` with `u = 1`,
//! or `u = 3` when `Q = 1 + P + P^2`. Shapes whose minimal primary parts
//! occur an odd number of times are skipped.

use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use rayon::prelude::*;

use super::{run_in_pool, Coverage, SearchReport};
use crate::divisor_sums::sigma_star_of;
use crate::error::{Error, Result};
use crate::factorization::{factor, is_irreducible, Factorization};
use crate::poly::Poly;

/// Largest odd part tried for the exponents of `x` and `x + 1`.
pub const DEFAULT_ODD_BOUND: u64 = 31;

const MAX_PRIME_DEGREE: usize = 24;
const MAX_EXP_LOG: u32 = 10;
const MAX_ODD_BOUND: u64 = 255;

#[derive(Debug, Clone, Copy)]
pub struct StructuredOptions {
    pub odd_bound: u64,
    /// Worker threads; 0 uses the global rayon pool.
    pub jobs: usize,
}

impl Default for StructuredOptions {
    fn default() -> Self {
        StructuredOptions { odd_bound: DEFAULT_ODD_BOUND, jobs: 0 }
    }
}

/// Odd irreducible polynomials of degree `2..=max_degree`, canonically
/// sorted.
///
/// # Panics
/// If `max_degree >= 63`.
pub fn candidate_prime_pool(max_degree: usize) -> Vec<Poly> {
    assert!(max_degree < 63, "prime pool degree {max_degree} is out of range");
    (2..=max_degree)
        .flat_map(|d| (1u64 << d)..(1u64 << (d + 1)))
        .filter(|w| w & 1 == 1 && w.count_ones() % 2 == 1)
        .map(Poly::from_word)
        .filter(|p| is_irreducible(p).expect("nonzero"))
        .collect()
}

/// Sparse exponent vector over prime ids, sorted by id.
type Vector = Vec<(usize, u64)>;

const X: usize = 0;
const X1: usize = 1;

struct Registry {
    primes: Vec<Poly>,
    ids: HashMap<Poly, usize>,
}

impl Registry {
    fn new() -> Self {
        let mut r = Registry { primes: Vec::new(), ids: HashMap::new() };
        r.id(&Poly::x());
        r.id(&Poly::x_plus_one());
        r
    }

    fn id(&mut self, p: &Poly) -> usize {
        if let Some(&i) = self.ids.get(p) {
            return i;
        }
        self.primes.push(p.clone());
        self.ids.insert(p.clone(), self.primes.len() - 1);
        self.primes.len() - 1
    }

    fn vector(&mut self, f: &Factorization) -> Vector {
        let mut v: Vector = f.iter().map(|(p, e)| (self.id(p), e)).collect();
        v.sort_unstable();
        v
    }
}

fn odd_support(v: &Vector) -> impl Iterator<Item = usize> + '_ {
    v.iter().map(|&(i, _)| i).filter(|&i| i > X1)
}

fn support_within(v: &Vector, allowed: &[usize]) -> bool {
    odd_support(v).all(|i| allowed.contains(&i))
}

/// One family of shapes: the odd primes, each with its odd exponent part.
enum Family {
    Two,
    Three(usize),
    Four { p: usize, u: u64, q: usize },
}

struct Tables {
    primes: Vec<Poly>,
    /// Factorizations of `1 + x^c` and `1 + (x+1)^c`, indexed by odd `c`.
    x_pieces: Vec<(u64, Vector)>,
    x1_pieces: Vec<(u64, Vector)>,
    /// Factorizations of `1 + P` and, where `1 + P + P^2` is prime, `1 + P^3`.
    p1: HashMap<usize, Vector>,
    p3: HashMap<usize, Vector>,
    /// `P -> 1 + P + P^2` where the latter is prime.
    trinomial: HashMap<usize, usize>,
    max_exp_log: u32,
}

impl Tables {
    fn piece(&self, prime: usize, u: u64) -> &Vector {
        if u == 1 {
            &self.p1[&prime]
        } else {
            &self.p3[&prime]
        }
    }

    fn degree(&self, id: usize) -> u64 {
        self.primes[id].degree().expect("primes are nonconstant") as u64
    }

    /// Scans every exponent choice of one family. Returns the hits and the
    /// number of shapes whose exponent vectors were compared.
    fn scan(&self, family: &Family) -> Result<(Vec<Poly>, u64)> {
        let odd: Vec<(usize, u64)> = match *family {
            Family::Two => vec![],
            Family::Three(p) => vec![(p, 1)],
            Family::Four { p, u, q } => vec![(p, u), (q, 1)],
        };
        let slots: Vec<usize> = [X, X1].into_iter().chain(odd.iter().map(|&(i, _)| i)).collect();
        let odd_ids = &slots[2..];
        let dense = |v: &Vector| {
            let mut out = [0u64; 4];
            for &(i, e) in v {
                out[slots.iter().position(|&s| s == i).expect("support checked")] += e;
            }
            out
        };
        let admissible = |pieces: &[(u64, Vector)]| -> Vec<(u64, [u64; 4])> {
            pieces.iter().filter(|(_, v)| support_within(v, odd_ids)).map(|(c, v)| (*c, dense(v))).collect()
        };
        let cs = admissible(&self.x_pieces);
        let ds = admissible(&self.x1_pieces);
        let odd_pieces: Vec<[u64; 4]> = odd.iter().map(|&(i, u)| dense(self.piece(i, u))).collect();
        let odd_degrees: Vec<u64> = odd.iter().map(|&(i, _)| self.degree(i)).collect();

        let range = self.max_exp_log as u64 + 1;
        let odd_choices = range.pow(odd.len() as u32);
        let mut hits = Vec::new();
        let mut tested = 0;
        for a in 0..range {
            for &(c, xc) in &cs {
                for b in 0..range {
                    for &(d, xd) in &ds {
                        for code in 0..odd_choices {
                            let mut target = [c << a, d << b, 0, 0];
                            let mut sigma = [0u64; 4];
                            let mut primary = vec![target[0], target[1]];
                            let mut rest = code;
                            for (j, &(_, u)) in odd.iter().enumerate() {
                                let l = rest % range;
                                rest /= range;
                                target[2 + j] = u << l;
                                primary.push((u << l) * odd_degrees[j]);
                                for s in 0..4 {
                                    sigma[s] += odd_pieces[j][s] << l;
                                }
                            }
                            let min = *primary.iter().min().expect("nonempty");
                            if primary.iter().filter(|&&m| m == min).count() % 2 == 1 {
                                continue;
                            }
                            tested += 1;
                            for s in 0..4 {
                                sigma[s] += (xc[s] << a) + (xd[s] << b);
                            }
                            if sigma != target {
                                continue;
                            }
                            let f = Factorization::from_pairs(
                                slots.iter().zip(target).map(|(&i, e)| (self.primes[i].clone(), e)),
                            );
                            let a_poly = f.product();
                            if sigma_star_of(&f) == a_poly {
                                hits.push(a_poly);
                            }
                        }
                    }
                }
            }
        }
        Ok((hits, tested))
    }
}

/// Structured search with the default odd-part bound, on the calling thread.
pub fn structured_search(max_prime_degree: usize, max_exp_log: u32) -> Result<SearchReport> {
    structured_search_with(max_prime_degree, max_exp_log, &StructuredOptions::default())
}

/// Odd primes range over the irreducibles of degree at most
/// `max_prime_degree`, extended by every odd prime dividing `1 + x^c`,
/// `1 + (x+1)^c` (odd `c <= odd_bound`) or `1 + P + P^2` for `P` in that
/// set. Exponent 2-power indices run up to `max_exp_log`.
pub fn structured_search_with(max_prime_degree: usize, max_exp_log: u32, opts: &StructuredOptions) -> Result<SearchReport> {
    if max_prime_degree > MAX_PRIME_DEGREE || max_exp_log > MAX_EXP_LOG || opts.odd_bound > MAX_ODD_BOUND {
        return Err(Error::ResourceLimit(format!(
            "structured search bounds are capped at prime degree {MAX_PRIME_DEGREE}, \
             exponent log {MAX_EXP_LOG} and odd bound {MAX_ODD_BOUND}"
        )));
    }
    if opts.odd_bound == 0 {
        return Err(Error::InvalidArgument("odd bound must be positive".into()));
    }
    let start = Instant::now();
    let work = || -> Result<(Vec<Poly>, u64, BTreeSet<Poly>)> {
        let (tables, universe) = build_tables(max_prime_degree, max_exp_log, opts.odd_bound)?;
        let families = families(&tables, &universe);
        let scanned: Vec<(Vec<Poly>, u64)> =
            families.par_iter().map(|f| tables.scan(f)).collect::<Result<_>>()?;
        let tested = scanned.iter().map(|(_, t)| t).sum();
        let hits = scanned.into_iter().flat_map(|(h, _)| h).collect();
        let primes = universe.iter().map(|&i| tables.primes[i].clone()).collect();
        Ok((hits, tested, primes))
    };
    let (hits, tested, primes) = run_in_pool(opts.jobs, work)??;
    let hits: BTreeSet<Poly> = hits.into_iter().collect();
    let max_degree = hits.iter().filter_map(Poly::degree).max().unwrap_or(0);
    let coverage = Coverage::Shapes { primes, max_exp_log, odd_bound: opts.odd_bound };
    SearchReport::from_hits(hits, max_degree, coverage, tested, start.elapsed())
}

fn build_tables(max_prime_degree: usize, max_exp_log: u32, odd_bound: u64) -> Result<(Tables, Vec<usize>)> {
    let mut reg = Registry::new();
    let mut universe: BTreeSet<usize> = BTreeSet::new();
    for p in candidate_prime_pool(max_prime_degree) {
        universe.insert(reg.id(&p));
    }

    let mut x_pieces = Vec::new();
    let mut x1_pieces = Vec::new();
    for c in (1..=odd_bound).step_by(2) {
        let f = factor(&(Poly::monomial(c as usize) + Poly::one()))?;
        let v = reg.vector(&f);
        let vc = reg.vector(&f.conjugate());
        universe.extend(odd_support(&v).chain(odd_support(&vc)));
        x_pieces.push((c, v));
        x1_pieces.push((c, vc));
    }

    // Odd primes of 1 + P + P^2, and which of those are prime themselves.
    let mut trinomial_prime: HashMap<usize, usize> = HashMap::new();
    for p in universe.clone() {
        let pp = reg.primes[p].clone();
        let t = &(&pp * &pp) + &(&pp + &Poly::one());
        let ft = factor(&t)?;
        universe.extend(ft.iter().map(|(q, _)| reg.id(q)));
        if ft.omega() == 1 && ft.total_count() == 1 {
            trinomial_prime.insert(p, reg.id(&t));
        }
    }

    let mut p1 = HashMap::new();
    let mut p3 = HashMap::new();
    for &p in &universe {
        let v = reg.vector(&factor(&(&reg.primes[p] + &Poly::one()))?);
        if let Some(&q) = trinomial_prime.get(&p) {
            let mut w = v.clone();
            w.push((q, 1));
            w.sort_unstable();
            p3.insert(p, w);
        }
        p1.insert(p, v);
    }

    let mut universe: Vec<usize> = universe.into_iter().collect();
    universe.sort_by(|&a, &b| reg.primes[a].cmp(&reg.primes[b]));
    let tables = Tables { primes: reg.primes, x_pieces, x1_pieces, p1, p3, trinomial: trinomial_prime, max_exp_log };
    Ok((tables, universe))
}

/// Families whose primes are closed under the support test.
fn families(t: &Tables, universe: &[usize]) -> Vec<Family> {
    let support = |p: usize| -> Vec<usize> { odd_support(&t.p1[&p]).collect() };
    let mut closed = Vec::new();
    let mut by_single: HashMap<usize, Vec<usize>> = HashMap::new();
    for &p in universe {
        match support(p).as_slice() {
            [] => closed.push(p),
            [r] => by_single.entry(*r).or_default().push(p),
            _ => {}
        }
    }

    let mut out = vec![Family::Two];
    out.extend(closed.iter().map(|&p| Family::Three(p)));

    let mut pairs = BTreeSet::new();
    for &p in universe {
        let partners: Vec<usize> = match support(p).as_slice() {
            [] => closed.iter().chain(by_single.get(&p).into_iter().flatten()).copied().collect(),
            [r] if t.p1.contains_key(r) => vec![*r],
            _ => vec![],
        };
        for q in partners {
            if q != p && support_within(&t.p1[&q], &[p]) {
                pairs.insert((p.min(q), p.max(q)));
            }
        }
    }
    out.extend(pairs.into_iter().map(|(p, q)| Family::Four { p, u: 1, q }));

    for &p in universe {
        let Some(&q) = t.trinomial.get(&p) else { continue };
        if t.p1.contains_key(&q) && support_within(&t.p3[&p], &[q]) && support_within(&t.p1[&q], &[p]) {
            out.push(Family::Four { p, u: 3, q });
        }
    }
    out
}
