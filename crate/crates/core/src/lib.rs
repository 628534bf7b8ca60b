//! Arithmetic over GF(2)[x] and an executable check of the classification
//! of unitary perfect polynomials with at most four distinct prime factors.

pub mod classification;
pub mod divisor_sums;
pub mod error;
pub mod factorization;
pub mod lemma_suite;
pub mod poly;
pub mod search;

pub use error::{Error, Result};
pub use factorization::{factor, is_irreducible, Factorization};
pub use poly::{MulKernel, Poly};
