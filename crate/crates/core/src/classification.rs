//! The known unitary perfect bases with at most four prime factors, their
//! orbits under `x -> x + 1` and `B -> B^2`, and membership lookup.
//!
//! Bases are written as exponent vectors over named primes and multiplied
//! out on first use, so the long expanded forms never appear in source.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use serde::Serialize;

use crate::factorization::Factorization;
use crate::poly::Poly;

#[derive(Debug, Clone)]
pub struct ClassEntry {
    pub label: &'static str,
    pub factored: Factorization,
    pub base: Poly,
    pub omega: usize,
    pub self_conjugate: bool,
    /// Absent from the earlier published lists.
    pub newly_found: bool,
}

/// Row of the JSON export.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub label: String,
    pub factored: String,
    pub hex: String,
    pub degree: usize,
    pub omega: usize,
    pub self_conjugate: bool,
}

impl ClassEntry {
    pub fn degree(&self) -> usize {
        self.base.degree().expect("bases are nonconstant")
    }

    pub fn row(&self) -> TableRow {
        TableRow {
            label: self.label.to_string(),
            factored: self.factored.to_string(),
            hex: self.base.to_hex(),
            degree: self.degree(),
            omega: self.omega,
            self_conjugate: self.self_conjugate,
        }
    }
}

/// Membership witness: `a` or its conjugate equals `base^(2^n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub label: &'static str,
    pub n: u32,
    pub conjugated: bool,
}

const X: &str = "x";
const X1: &str = "x+1";
const Q2: &str = "x^2+x+1";
const Q4: &str = "x^4+x+1";
const C4: &str = "x^4+x^3+x^2+x+1";
const C10: &str = "x^10+x^9+x^8+x^7+x^6+x^5+x^4+x^3+x^2+x+1";
const C12: &str = "x^12+x^11+x^10+x^9+x^8+x^7+x^6+x^5+x^4+x^3+x^2+x+1";
const S1: &str = "x^6+x^3+1";
const S2: &str = "x^20+x^15+x^10+x^5+1";
const T1: &str = "x^3+x+1";
const T2: &str = "x^3+x^2+1";
const T3: &str = "x^4+x^3+1";

type Spec = (&'static str, bool, &'static [(&'static str, u64)]);

const BASES: &[Spec] = &[
    ("Thm3.1-i", false, &[(X, 1), (X1, 1)]),
    ("Thm3.1-ii-a", false, &[(X, 3), (X1, 2), (Q2, 1)]),
    ("Thm3.1-ii-b", false, &[(X, 5), (X1, 4), (C4, 1)]),
    ("Thm3.1-iii", false, &[(X, 3), (X1, 3), (Q2, 2)]),
    ("Thm4.1-i", false, &[(X, 6), (X1, 4), (Q2, 3), (Q4, 1)]),
    ("Thm4.1-ii", false, &[(X, 13), (X1, 8), (Q2, 4), (C12, 1)]),
    ("Thm4.1-iii", false, &[(X, 11), (X1, 8), (C4, 2), (C10, 1)]),
    ("Thm4.1-iv", false, &[(X, 9), (X1, 4), (Q2, 2), (S1, 1)]),
    ("Thm4.1-v", true, &[(X, 25), (X1, 16), (C4, 4), (S2, 1)]),
    ("Thm4.1-vi", false, &[(X, 7), (X1, 4), (T2, 1), (T1, 1)]),
    ("Thm4.1-vii", false, &[(X, 3), (X1, 3), (Q2, 3), (Q4, 1)]),
    ("Thm4.1-viii", false, &[(X, 5), (X1, 6), (Q2, 2), (C4, 1)]),
    ("Thm4.1-ix", false, &[(X, 5), (X1, 5), (T3, 1), (C4, 1)]),
    ("Thm4.1-x", true, &[(X, 13), (X1, 12), (Q2, 8), (C12, 1)]),
    ("Thm4.1-xi", true, &[(X, 9), (X1, 6), (Q2, 4), (S1, 1)]),
    ("Thm4.1-xii", false, &[(X, 7), (X1, 7), (T1, 2), (T2, 2)]),
];

fn parse(s: &str) -> Poly {
    s.parse().expect("table literals are well formed")
}

fn build_entry(&(label, newly_found, parts): &Spec) -> ClassEntry {
    let factored = Factorization::from_pairs(parts.iter().map(|&(p, e)| (parse(p), e)));
    let base = factored.product();
    ClassEntry {
        label,
        omega: factored.omega(),
        self_conjugate: base.conjugate() == base,
        factored,
        base,
        newly_found,
    }
}

struct Table {
    entries: Vec<ClassEntry>,
    by_base: HashMap<Poly, usize>,
}

fn table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| {
        let entries: Vec<ClassEntry> = BASES.iter().map(build_entry).collect();
        let by_base = entries.iter().enumerate().map(|(i, e)| (e.base.clone(), i)).collect();
        Table { entries, by_base }
    })
}

/// The sixteen bases: one with two prime factors, three with three, twelve
/// with four.
pub fn theorem_table() -> &'static [ClassEntry] {
    &table().entries
}

pub fn entry(label: &str) -> Option<&'static ClassEntry> {
    theorem_table().iter().find(|e| e.label == label)
}

/// Irreducible divisors that occur here but in no perfect polynomial with
/// fewer than five prime factors, paired with their conjugates.
pub fn extra_irreducible_divisors() -> Vec<(Poly, Poly)> {
    [S1, S2, C10, C12]
        .iter()
        .map(|s| {
            let p = parse(s);
            let c = p.conjugate();
            (p, c)
        })
        .collect()
}

/// `F(B^(2^n))` for `F` in {identity, conjugation}, up to `max_degree`,
/// deduplicated and sorted.
pub fn orbit(entry: &ClassEntry, max_degree: usize) -> Vec<Poly> {
    let mut out = BTreeSet::new();
    let mut power = entry.base.clone();
    while power.degree().is_some_and(|d| d <= max_degree) {
        out.insert(power.conjugate());
        let next = power.square();
        out.insert(power);
        power = next;
    }
    out.into_iter().collect()
}

/// Finds the base `B` and `n` with `a = B^(2^n)` or `a(x+1) = B^(2^n)`.
pub fn classify(a: &Poly) -> Option<Classification> {
    if a.is_constant() {
        return None;
    }
    let mut core = a.clone();
    let mut n = 0;
    while let Some(root) = core.try_sqrt() {
        core = root;
        n += 1;
    }
    let t = table();
    if let Some(&i) = t.by_base.get(&core) {
        return Some(Classification { label: t.entries[i].label, n, conjugated: false });
    }
    t.by_base
        .get(&core.conjugate())
        .map(|&i| Classification { label: t.entries[i].label, n, conjugated: true })
}
