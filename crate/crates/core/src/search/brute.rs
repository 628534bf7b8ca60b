use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;

use super::{run_in_pool, Coverage, SearchReport};
use crate::divisor_sums::sigma_star_of;
use crate::error::{Error, Result};
use crate::factorization::factor;
use crate::poly::Poly;

/// Largest degree the unpruned scan accepts by default (`2^29` candidates).
pub const DEFAULT_UNPRUNED_CEILING: usize = 28;

const CHUNK: u64 = 1 << 12;

#[derive(Debug, Clone, Copy)]
pub struct BruteOptions {
    /// Worker threads; 0 uses the global rayon pool.
    pub jobs: usize,
    /// Degree ceiling for the unpruned scan. The pruned scan visits a
    /// quarter as many candidates and is allowed two more degrees.
    pub unpruned_ceiling: usize,
}

impl Default for BruteOptions {
    fn default() -> Self {
        BruteOptions { jobs: 0, unpruned_ceiling: DEFAULT_UNPRUNED_CEILING }
    }
}

/// Scans every nonconstant polynomial of degree at most `max_degree`, or
/// with `assume_even` only the multiples of `x(x+1)`.
pub fn brute_force_search(max_degree: usize, assume_even: bool) -> Result<SearchReport> {
    brute_force_search_with(max_degree, assume_even, &BruteOptions::default())
}

pub fn brute_force_search_with(max_degree: usize, assume_even: bool, opts: &BruteOptions) -> Result<SearchReport> {
    if max_degree < 2 {
        return Err(Error::InvalidArgument(format!("max_degree must be at least 2, got {max_degree}")));
    }
    let ceiling = if assume_even { opts.unpruned_ceiling + 2 } else { opts.unpruned_ceiling };
    if max_degree > ceiling.min(62) {
        return Err(Error::ResourceLimit(format!(
            "brute force at degree {max_degree} exceeds the ceiling of {ceiling}"
        )));
    }
    let start = Instant::now();
    // Pruned: the candidate for index q is q * (x^2 + x).
    let (first, end) = if assume_even { (1u64, 1u64 << (max_degree - 1)) } else { (2u64, 1u64 << (max_degree + 1)) };
    let candidate = move |i: u64| if assume_even { (i << 2) ^ (i << 1) } else { i };

    let chunks: Vec<(u64, u64)> =
        (first..end).step_by(CHUNK as usize).map(|lo| (lo, (lo + CHUNK).min(end))).collect();
    let scan = || -> Result<Vec<Vec<Poly>>> {
        chunks
            .par_iter()
            .map(|&(lo, hi)| {
                let mut hits = Vec::new();
                for i in lo..hi {
                    let a = Poly::from_word(candidate(i));
                    if sigma_star_of(&factor(&a)?) == a {
                        hits.push(a);
                    }
                }
                Ok(hits)
            })
            .collect()
    };
    let found: BTreeSet<Poly> = run_in_pool(opts.jobs, scan)??.into_iter().flatten().collect();
    SearchReport::from_hits(found, max_degree, Coverage::Degree(max_degree), end - first, start.elapsed())
}
