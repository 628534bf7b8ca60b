//! Discovery engines for unitary perfect polynomials: an exhaustive scan
//! over all polynomials up to a degree bound, and a structured scan over
//! exponent shapes `x^h (x+1)^k P^e Q^f`.

mod brute;
mod structured;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Duration;

use serde_json::{json, Value};

use crate::classification::classify;
use crate::error::{Error, Result};
use crate::factorization::{factor, Factorization};
use crate::poly::Poly;

pub use brute::{brute_force_search, brute_force_search_with, BruteOptions, DEFAULT_UNPRUNED_CEILING};
pub use structured::{
    candidate_prime_pool, structured_search, structured_search_with, StructuredOptions, DEFAULT_ODD_BOUND,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hit {
    pub poly: Poly,
    pub omega: usize,
    pub label: Option<&'static str>,
}

impl Hit {
    fn new(poly: Poly, omega: usize) -> Self {
        let label = classify(&poly).map(|c| c.label);
        Hit { poly, omega, label }
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().expect("hits are nonconstant")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "poly": self.poly.to_string(),
            "hex": self.poly.to_hex(),
            "degree": self.degree(),
            "omega": self.omega,
            "label": self.label,
        })
    }
}

/// Region of polynomial space an engine enumerated exhaustively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coverage {
    /// Every polynomial of degree at most the bound.
    Degree(usize),
    /// Polynomials with two to four prime factors whose odd primes lie in
    /// `primes`, whose exponents of `x` and `x+1` are `2^a c` with
    /// `a <= max_exp_log` and odd `c <= odd_bound`, and whose odd-prime
    /// exponents have 2-adic valuation at most `max_exp_log`.
    Shapes { primes: BTreeSet<Poly>, max_exp_log: u32, odd_bound: u64 },
}

impl Coverage {
    pub fn contains(&self, a: &Poly) -> bool {
        match self {
            Coverage::Degree(d) => a.degree().is_some_and(|k| k <= *d),
            Coverage::Shapes { primes, max_exp_log, odd_bound } => {
                let Ok(f) = factor(a) else { return false };
                let (x, x1) = (Poly::x(), Poly::x_plus_one());
                (2..=4).contains(&f.omega())
                    && f.iter().all(|(p, e)| {
                        let (two, odd) = (e.trailing_zeros(), e >> e.trailing_zeros());
                        if *p == x || *p == x1 {
                            two <= *max_exp_log && odd <= *odd_bound
                        } else {
                            two <= *max_exp_log && primes.contains(p)
                        }
                    })
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub max_degree: usize,
    /// Canonically sorted, no duplicates.
    pub hits: Vec<Hit>,
    pub elapsed: Duration,
    pub candidates_tested: u64,
    pub coverage: Coverage,
}

impl SearchReport {
    fn from_hits(polys: BTreeSet<Poly>, max_degree: usize, coverage: Coverage, tested: u64, elapsed: Duration) -> Result<Self> {
        let hits = polys
            .into_iter()
            .map(|p| Ok(Hit::new(p.clone(), factor(&p)?.omega())))
            .collect::<Result<Vec<_>>>()?;
        Ok(SearchReport { max_degree, hits, elapsed, candidates_tested: tested, coverage })
    }

    /// Hits that are not squares, i.e. the `n = 0` orbit representatives.
    pub fn cores(&self) -> impl Iterator<Item = &Hit> {
        self.hits.iter().filter(|h| h.poly.try_sqrt().is_none())
    }

    /// Hits with at most four prime factors and no classification.
    pub fn unclassified(&self) -> impl Iterator<Item = &Hit> {
        self.hits.iter().filter(|h| h.omega <= 4 && h.label.is_none())
    }

    /// Hits with five or more prime factors.
    pub fn outside_scope(&self) -> impl Iterator<Item = &Hit> {
        self.hits.iter().filter(|h| h.omega >= 5)
    }

    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for h in &self.hits {
            *out.entry(h.degree()).or_insert(0) += 1;
        }
        out
    }

    /// With `timing` false, `elapsed_ms` is written as 0 so reports from
    /// identical runs compare byte for byte.
    pub fn to_json(&self, timing: bool) -> Value {
        json!({
            "max_degree": self.max_degree,
            "hits": self.hits.iter().map(Hit::to_json).collect::<Vec<_>>(),
            "candidates_tested": self.candidates_tested,
            "elapsed_ms": if timing { self.elapsed.as_millis() as u64 } else { 0 },
        })
    }
}

/// Whether two reports find the same hits on the intersection of their
/// coverages.
pub fn cross_check(a: &SearchReport, b: &SearchReport) -> bool {
    let common = |h: &&Hit| a.coverage.contains(&h.poly) && b.coverage.contains(&h.poly);
    let left: BTreeSet<&Poly> = a.hits.iter().filter(common).map(|h| &h.poly).collect();
    let right: BTreeSet<&Poly> = b.hits.iter().filter(common).map(|h| &h.poly).collect();
    left == right
}

/// Count of primary parts `P^h` attaining the minimal `h * deg(P)`.
pub fn minimal_primary_count(f: &Factorization) -> usize {
    let degrees: Vec<u64> = f.iter().map(|(p, e)| e * p.degree().unwrap_or(0) as u64).collect();
    let min = degrees.iter().copied().min().unwrap_or(0);
    degrees.iter().filter(|&&d| d == min).count()
}

fn run_in_pool<T: Send>(jobs: usize, work: impl FnOnce() -> T + Send) -> Result<T> {
    if jobs == 0 {
        return Ok(work());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::ResourceLimit(format!("thread pool: {e}")))?;
    Ok(pool.install(work))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn minimal_primary_counts() {
        let f = |parts: &[(&str, u64)]| Factorization::from_pairs(parts.iter().map(|(q, e)| (p(q), *e)));
        assert_eq!(minimal_primary_count(&f(&[("x", 1), ("x+1", 1)])), 2);
        assert_eq!(minimal_primary_count(&f(&[("x", 3), ("x+1", 2), ("x^2+x+1", 1)])), 2);
        assert_eq!(minimal_primary_count(&f(&[("x", 6), ("x+1", 4), ("x^2+x+1", 3), ("x^4+x+1", 1)])), 2);
        assert_eq!(minimal_primary_count(&f(&[("x", 2), ("x+1", 1)])), 1);
    }

    #[test]
    fn coverage_membership() {
        let build = |parts: &[(&str, u64)]| Factorization::from_pairs(parts.iter().map(|(q, e)| (p(q), *e))).product();
        assert!(Coverage::Degree(4).contains(&p("x^4")));
        assert!(!Coverage::Degree(3).contains(&p("x^4")));
        let shapes = Coverage::Shapes { primes: [p("x^2+x+1")].into(), max_exp_log: 1, odd_bound: 3 };
        assert!(shapes.contains(&build(&[("x", 3), ("x+1", 2), ("x^2+x+1", 1)])));
        assert!(!shapes.contains(&build(&[("x", 5), ("x+1", 2), ("x^2+x+1", 1)])));
        assert!(!shapes.contains(&build(&[("x", 4), ("x+1", 2), ("x^2+x+1", 1)])));
        assert!(!shapes.contains(&build(&[("x", 1), ("x+1", 1), ("x^3+x+1", 1)])));
        assert!(!shapes.contains(&p("x^3")));
    }
}
