//! Bounded executable checks of the supporting facts about complete,
//! cyclotomic and trinomial polynomials and about unitary perfect
//! polynomials found by search.
//!
//! Every check walks a parameter range and hands each point to [`probe`].
//! A failure is recorded as the check name and its parameters, so it can be
//! re-run with [`replay`]. No check consults the classification table.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::divisor_sums::{geometric_sum, sigma_star_of};
use crate::error::{Error, Result};
use crate::factorization::{complete_irreducible_criterion, cyclotomic, factor, is_irreducible, swan_trinomial};
use crate::poly::Poly;
use crate::search::{brute_force_search, candidate_prime_pool, minimal_primary_count, SearchReport};

pub type Params = Map<String, Value>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub check: String,
    pub params: Params,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaResult {
    pub lemma_id: String,
    pub range_description: String,
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample>,
    pub checked_count: u64,
}

impl LemmaResult {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// Upper limits for every check in [`run_all`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub h_max: u64,
    pub lemma_2_5_n_max: u64,
    pub lemma_2_5_p_deg_max: usize,
    pub lemma_2_6_h_max: u64,
    pub l_max: u64,
    pub r_max: u32,
    pub swan_n_max: u64,
    pub corollary_r_max: u32,
    pub dickson_m_max: u64,
    pub cyclotomic_k_max: u64,
    /// Degree of the exhaustive search whose hits feed the checks on
    /// unitary perfect polynomials.
    pub brute_degree: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            h_max: 256,
            lemma_2_5_n_max: 6,
            lemma_2_5_p_deg_max: 8,
            lemma_2_6_h_max: 300,
            l_max: 12,
            r_max: 6,
            swan_n_max: 8,
            corollary_r_max: 6,
            dickson_m_max: 256,
            cyclotomic_k_max: 105,
            brute_degree: 14,
        }
    }
}

/// `key=value` lines; `#` starts a comment. Unset keys keep their defaults.
impl FromStr for Bounds {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut b = Bounds::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |message: String| Error::Parse { position: lineno + 1, message };
            let (key, value) = line.split_once('=').ok_or_else(|| bad(format!("expected key=value, got {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            let n: u64 = value.parse().map_err(|_| bad(format!("{key}: {value:?} is not a nonnegative integer")))?;
            let small = |n: u64| u32::try_from(n).map_err(|_| bad(format!("{key}: {n} is too large")));
            match key {
                "h_max" => b.h_max = n,
                "n_max" | "lemma_2_5_n_max" => b.lemma_2_5_n_max = n,
                "p_deg_max" | "lemma_2_5_p_deg_max" => b.lemma_2_5_p_deg_max = n as usize,
                "lemma_2_6_h_max" => b.lemma_2_6_h_max = n,
                "l_max" => b.l_max = n,
                "r_max" => b.r_max = small(n)?,
                "swan_n_max" => b.swan_n_max = n,
                "corollary_r_max" | "corollary_3_5_r_max" => b.corollary_r_max = small(n)?,
                "dickson_m_max" => b.dickson_m_max = n,
                "cyclotomic_k_max" => b.cyclotomic_k_max = n,
                "brute_degree" => b.brute_degree = n as usize,
                _ => return Err(bad(format!("unknown key {key:?}"))),
            }
        }
        Ok(b)
    }
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "h_max={}", self.h_max)?;
        writeln!(f, "lemma_2_5_n_max={}", self.lemma_2_5_n_max)?;
        writeln!(f, "lemma_2_5_p_deg_max={}", self.lemma_2_5_p_deg_max)?;
        writeln!(f, "lemma_2_6_h_max={}", self.lemma_2_6_h_max)?;
        writeln!(f, "l_max={}", self.l_max)?;
        writeln!(f, "r_max={}", self.r_max)?;
        writeln!(f, "swan_n_max={}", self.swan_n_max)?;
        writeln!(f, "corollary_r_max={}", self.corollary_r_max)?;
        writeln!(f, "dickson_m_max={}", self.dickson_m_max)?;
        writeln!(f, "cyclotomic_k_max={}", self.cyclotomic_k_max)?;
        writeln!(f, "brute_degree={}", self.brute_degree)
    }
}

fn params(v: Value) -> Params {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("params are built from object literals"),
    }
}

/// Accumulates probes for one result; stops probing after the first failure.
struct Run {
    id: &'static str,
    range: String,
    checked: u64,
    counterexample: Option<Counterexample>,
}

impl Run {
    fn new(id: &'static str, range: String) -> Self {
        Run { id, range, checked: 0, counterexample: None }
    }

    fn probe(&mut self, check: &str, p: Value) -> Result<()> {
        if self.counterexample.is_some() {
            return Ok(());
        }
        let p = params(p);
        self.checked += 1;
        if let Some(detail) = probe(check, &p)? {
            self.counterexample = Some(Counterexample { check: check.to_string(), params: p, detail });
        }
        Ok(())
    }

    fn finish(self) -> LemmaResult {
        LemmaResult {
            lemma_id: self.id.to_string(),
            range_description: self.range,
            verdict: if self.counterexample.is_some() { Verdict::Fail } else { Verdict::Pass },
            counterexample: self.counterexample,
            checked_count: self.checked,
        }
    }
}

fn int(p: &Params, key: &str) -> Result<u64> {
    p.get(key)
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::InvalidArgument(format!("parameter {key:?} missing or not an integer")))
}

fn poly(p: &Params, key: &str) -> Result<Poly> {
    p.get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| Error::InvalidArgument(format!("parameter {key:?} missing or not a string")))?
        .parse()
}

fn complete(h: u64) -> Poly {
    Poly::complete(h as usize)
}

fn quadratic() -> Poly {
    Poly::complete(2)
}

fn quartic() -> Poly {
    Poly::complete(4)
}

/// `x^a (x+1)^b + 1`.
fn x_form(a: u64, b: u64) -> Result<Poly> {
    Ok(&(&Poly::monomial(a as usize) * &Poly::x_plus_one().pow(b)?) + &Poly::one())
}

/// Whether `p = x^a (x+1)^b + 1` with `a, b >= 1`.
fn has_x_form(p: &Poly) -> bool {
    let q = p + &Poly::one();
    let Some(a) = q.exponents().next() else { return false };
    let rest = q.shr(a).conjugate();
    a >= 1 && rest.weight() == 1 && rest.degree().is_some_and(|b| b >= 1)
}

fn is_unitary_perfect_or_one(a: &Poly) -> Result<bool> {
    Ok(a.is_one() || sigma_star_of(&factor(a)?) == *a)
}

fn violation(cond: bool, detail: impl FnOnce() -> String) -> Option<String> {
    if cond {
        Some(detail())
    } else {
        None
    }
}

/// Self-reciprocal irreducible `x^a (x+1)^b + 1`, if that is what `(a, b)`
/// gives.
fn self_reciprocal_prime(a: u64, b: u64) -> Result<Option<Poly>> {
    let p = x_form(a, b)?;
    Ok(if p.reverse()? == p && is_irreducible(&p)? { Some(p) } else { None })
}

fn self_reciprocal_scan(h_max: u64) -> Result<BTreeSet<Poly>> {
    let mut found = BTreeSet::new();
    for s in 2..=h_max {
        for a in 1..s {
            if let Some(p) = self_reciprocal_prime(a, s - a)? {
                found.insert(p);
            }
        }
    }
    Ok(found)
}

fn expected_self_reciprocal(h_max: u64) -> BTreeSet<Poly> {
    [(2, quadratic()), (4, quartic())].into_iter().filter(|(d, _)| *d <= h_max).map(|(_, p)| p).collect()
}

/// Conjugated complete polynomial `1 + (x+1) + ... + (x+1)^(2m)`, `m >= 1`.
fn is_conjugated_even_complete(p: &Poly) -> bool {
    p.degree().is_some_and(|d| d >= 2 && d % 2 == 0) && p.conjugate() == Poly::complete(p.degree().unwrap())
}

/// Evaluates one parameter point of a check. `Some(detail)` is a violation.
pub fn probe(check: &str, p: &Params) -> Result<Option<String>> {
    Ok(match check {
        "lemma_2_4/i" => {
            let h = int(p, "h")?;
            let c = complete(h);
            violation(c.reverse()? != c, || format!("complete polynomial of degree {h} is not self-reciprocal"))
        }
        "lemma_2_4/ii" => {
            let h = int(p, "h")?;
            if h == 0 {
                return Ok(None);
            }
            let f = factor(&complete(h))?;
            if f.omega() != 2 || f.total_count() != 2 {
                return Ok(None);
            }
            let (a, b) = (&f.factors()[0].0, &f.factors()[1].0);
            let (ra, rb) = (a.reverse()?, b.reverse()?);
            let paired = (ra == *a && rb == *b) || (ra == *b && rb == *a);
            violation(!paired, || format!("{a} and {b} are neither self-reciprocal nor mutual reverses"))
        }
        "lemma_2_4/iii" => {
            let (a, b) = (int(p, "a")?, int(p, "b")?);
            let listed = [quadratic(), quartic()];
            match self_reciprocal_prime(a, b)? {
                Some(q) if !listed.contains(&q) => Some(format!("{q} is irreducible and self-reciprocal")),
                _ => None,
            }
        }
        "lemma_2_4/iii-complete" => {
            let h_max = int(p, "h_max")?;
            let found = self_reciprocal_scan(h_max)?;
            let want = expected_self_reciprocal(h_max);
            violation(found != want, || format!("scan found {found:?}, expected {want:?}"))
        }
        "lemma_2_5/i-ii" => {
            let (q, n) = (poly(p, "p")?, int(p, "n")?);
            let g = geometric_sum(&q, 2 * n);
            let f = factor(&g)?;
            let dq = q.degree().unwrap_or(0);
            if f.omega() == 1 && f.factors()[0].1 >= 2 {
                Some(format!("1+P+...+P^{} = ({})^{}", 2 * n, f.factors()[0].0, f.factors()[0].1))
            } else {
                f.iter()
                    .find(|(r, e)| *e >= 2 && (*e >= 3 || f.omega() >= 2) && r.degree().unwrap_or(0) >= dq)
                    .map(|(r, e)| format!("repeated factor ({r})^{e} has degree at least deg P = {dq}"))
            }
        }
        "lemma_2_5/iii" => {
            let n = int(p, "n")?;
            let f = factor(&complete(2 * n))?;
            if f.omega() != 2 || f.total_count() != 2 {
                return Ok(None);
            }
            let (a, b) = (f.factors()[0].0.clone(), f.factors()[1].0.clone());
            let sextic = quadratic().substitute_x_pow(3);
            let bad = [(&a, &b), (&b, &a)]
                .into_iter()
                .find(|(pp, qq)| is_conjugated_even_complete(pp) && !(n == 4 && **pp == quadratic() && **qq == sextic))
                .map(|(pp, qq)| format!("n = {n}: {pp} times {qq}"));
            bad
        }
        "lemma_2_5/iii-occurs" => {
            let f = factor(&complete(8))?;
            let want = [quadratic(), quadratic().substitute_x_pow(3)];
            let got: Vec<Poly> = f.iter().map(|(q, _)| q.clone()).collect();
            violation(got != want || f.total_count() != 2, || format!("complete polynomial of degree 8 factors as {f}"))
        }
        "lemma_2_5/iv" => {
            let n = int(p, "n")?;
            let f = factor(&complete(2 * n))?;
            let all = f.iter().all(|(q, _)| has_x_form(q));
            violation(all != (1..=3).contains(&n), || {
                format!("n = {n}: every factor of the form x^a(x+1)^b+1 is {all}, factorization {f}")
            })
        }
        "lemma_2_5/v" => {
            let h = int(p, "h")?;
            let c = complete(h);
            let fixed = c.conjugate() == c;
            violation(fixed != (h + 2).is_power_of_two(), || format!("h = {h}: fixed by x -> x+1 is {fixed}"))
        }
        "lemma_2_6" => {
            let h = int(p, "h")?;
            let c = complete(h);
            if quadratic().divides(&c) && h % 3 != 2 {
                Some(format!("1+x+x^2 divides the complete polynomial of degree {h}"))
            } else {
                violation(quartic().divides(&c) && h % 5 != 4, || {
                    format!("1+x+x^2+x^3+x^4 divides the complete polynomial of degree {h}")
                })
            }
        }
        "lemma_2_8/i" => {
            let l = int(p, "l")?;
            let irr = is_irreducible(&complete(l).substitute_x_pow(5))?;
            violation(irr != (l == 4), || format!("l = {l}: irreducible is {irr}"))
        }
        "lemma_2_8/ii" | "lemma_2_8/iii" => {
            let r = int(p, "r")?;
            let (base, want) = if check.ends_with("/ii") { (3, 2) } else { (5, 1) };
            let irr = is_irreducible(&complete(base << r))?;
            violation(irr != (r == want), || format!("degree {base}*2^{r}: irreducible is {irr}"))
        }
        "corollary_3_5" => {
            let r = int(p, "r")?;
            let t = Poly::from_exponents([1usize << r, (1usize << r) - 1, 0]);
            let irr = is_irreducible(&t)?;
            violation(irr != (r == 1 || r == 2), || format!("{t}: irreducible is {irr}"))
        }
        "swan" => {
            let (n, k) = (int(p, "n")?, int(p, "k")?);
            let t = swan_trinomial(n, k);
            let f = factor(&t)?;
            violation(f.total_count() < 2, || format!("{t} is irreducible"))
        }
        "lemma_2_1" => {
            let a = poly(p, "poly")?;
            let f = factor(&a)?;
            let count = minimal_primary_count(&f);
            violation(count % 2 == 1, || format!("{f}: {count} primary parts of minimal degree"))
        }
        "lemma_2_9" => {
            let a = poly(p, "poly")?;
            let ok = sigma_star_of(&factor(&a)?) == a && Poly::x().divides(&a) && Poly::x_plus_one().divides(&a);
            violation(!ok, || format!("{a} is not a unitary perfect multiple of x(x+1)"))
        }
        "lemma_2_2" => {
            let a = poly(p, "poly")?;
            let f = factor(&a)?;
            let parts: Vec<Poly> = f.primary_parts().collect();
            let mut bad = None;
            for mask in 0u64..1 << parts.len() {
                let a1: Poly = parts.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, q)| q.clone()).product();
                let a2 = a.div_exact(&a1)?;
                if is_unitary_perfect_or_one(&a1)? != is_unitary_perfect_or_one(&a2)? {
                    bad = Some(format!("{a} = ({a1}) * ({a2}) with exactly one unitary perfect cofactor"));
                    break;
                }
            }
            bad
        }
        "lemma_2_3" => {
            let a = poly(p, "poly")?;
            let images = [a.conjugate(), a.square(), a.frobenius(2)];
            let mut bad = None;
            for b in images {
                if !is_unitary_perfect_or_one(&b)? {
                    bad = Some(format!("{b} is an image of {a} but not unitary perfect"));
                    break;
                }
            }
            bad
        }
        "dickson" => {
            let m = int(p, "m")?;
            let (by_rule, direct) = (complete_irreducible_criterion(m), is_irreducible(&complete(m))?);
            violation(by_rule != direct, || format!("m = {m}: arithmetic rule says {by_rule}, factoring says {direct}"))
        }
        "cyclotomic" => {
            let k = int(p, "k")?;
            let prod: Poly = (1..=k).filter(|d| k % d == 0).map(cyclotomic).collect::<Result<Vec<_>>>()?.into_iter().product();
            violation(prod != Poly::monomial(k as usize) + Poly::one(), || format!("product over divisors of {k} is {prod}"))
        }
        "phi_x5" => {
            let s = int(p, "s")?;
            let (lhs, rhs) = (cyclotomic(s)?.substitute_x_pow(5), &cyclotomic(s)? * &cyclotomic(5 * s)?);
            violation(lhs != rhs, || format!("Phi_{s}(x^5) differs from Phi_{s} Phi_{}", 5 * s))
        }
        _ => return Err(Error::InvalidArgument(format!("unknown check {check:?}"))),
    })
}

/// Re-runs a counterexample; true when the failure reproduces.
pub fn replay(c: &Counterexample) -> Result<bool> {
    Ok(probe(&c.check, &c.params)?.is_some())
}

/// Complete polynomials are self-reciprocal; a complete polynomial with two
/// simple prime factors has them self-reciprocal or mutually reverse; the
/// only self-reciprocal primes `x^a (x+1)^b + 1` (`a, b >= 1`) are
/// `1+x+x^2` and `1+x+x^2+x^3+x^4`.
pub fn check_lemma_2_4(h_max: u64) -> Result<LemmaResult> {
    let mut run = Run::new("lemma_2_4", format!("h <= {h_max}; a + b <= {h_max}"));
    for h in 0..=h_max {
        run.probe("lemma_2_4/i", json!({ "h": h }))?;
    }
    for h in 0..=h_max {
        run.probe("lemma_2_4/ii", json!({ "h": h }))?;
    }
    let mut found = BTreeSet::new();
    for s in 2..=h_max {
        for a in 1..s {
            run.probe("lemma_2_4/iii", json!({ "a": a, "b": s - a }))?;
            if let Some(q) = self_reciprocal_prime(a, s - a)? {
                found.insert(q);
            }
        }
    }
    if found != expected_self_reciprocal(h_max) {
        run.probe("lemma_2_4/iii-complete", json!({ "h_max": h_max }))?;
    }
    Ok(run.finish())
}

/// Facts about `1 + P + ... + P^(2n)` and complete polynomials, for
/// irreducible `P` of degree at most `p_deg_max` and `1 <= n <= n_max`.
pub fn check_lemma_2_5(n_max: u64, p_deg_max: usize) -> Result<LemmaResult> {
    let h_top = 1u64.checked_shl(n_max as u32).filter(|&t| t <= 1 << 16).ok_or_else(|| {
        Error::ResourceLimit(format!("n_max = {n_max} is too large"))
    })?;
    let mut run = Run::new(
        "lemma_2_5",
        format!("deg P <= {p_deg_max}, 1 <= n <= {n_max}; h <= 2^{n_max}"),
    );
    let primes = [Poly::x(), Poly::x_plus_one()].into_iter().chain(candidate_prime_pool(p_deg_max.min(20)));
    for q in primes {
        for n in 1..=n_max {
            run.probe("lemma_2_5/i-ii", json!({ "p": q.to_hex(), "n": n }))?;
        }
    }
    for n in 1..=n_max {
        run.probe("lemma_2_5/iii", json!({ "n": n }))?;
    }
    if n_max >= 4 {
        run.probe("lemma_2_5/iii-occurs", json!({}))?;
    }
    for n in 1..=n_max {
        run.probe("lemma_2_5/iv", json!({ "n": n }))?;
    }
    for h in 0..=h_top {
        run.probe("lemma_2_5/v", json!({ "h": h }))?;
    }
    Ok(run.finish())
}

/// Divisibility of complete polynomials by `1+x+x^2` and by
/// `1+x+x^2+x^3+x^4` forces `h = 2 (mod 3)` and `h = 4 (mod 5)`.
pub fn check_lemma_2_6(h_max: u64) -> Result<LemmaResult> {
    let mut run = Run::new("lemma_2_6", format!("h <= {h_max}"));
    for h in 0..=h_max {
        run.probe("lemma_2_6", json!({ "h": h }))?;
    }
    Ok(run.finish())
}

/// Irreducibility of `1 + x^5 + ... + x^(5l)`, of the complete polynomial of
/// degree `3 * 2^r` and of degree `5 * 2^r`.
pub fn check_lemma_2_8(l_max: u64, r_max: u32) -> Result<LemmaResult> {
    let mut run = Run::new("lemma_2_8", format!("1 <= l <= {l_max}; r <= {r_max}"));
    for l in 1..=l_max {
        run.probe("lemma_2_8/i", json!({ "l": l }))?;
    }
    for part in ["lemma_2_8/ii", "lemma_2_8/iii"] {
        for r in 0..=r_max {
            run.probe(part, json!({ "r": r }))?;
        }
    }
    Ok(run.finish())
}

/// `x^(2^r) + x^(2^r - 1) + 1` is irreducible exactly for `r` in {1, 2}.
pub fn check_corollary_3_5(r_max: u32) -> Result<LemmaResult> {
    let mut run = Run::new("corollary_3_5", format!("1 <= r <= {r_max}"));
    for r in 1..=r_max.min(20) {
        run.probe("corollary_3_5", json!({ "r": r }))?;
    }
    Ok(run.finish())
}

/// `x^(8n) + x^k + 1` is reducible for `1 <= k < 8n`.
pub fn check_swan(n_max: u64) -> Result<LemmaResult> {
    let mut run = Run::new("swan", format!("1 <= n <= {n_max}, 1 <= k < 8n"));
    for n in 1..=n_max {
        for k in 1..8 * n {
            run.probe("swan", json!({ "n": n, "k": k }))?;
        }
    }
    Ok(run.finish())
}

fn over_hits(id: &'static str, check: &str, report: &SearchReport) -> Result<LemmaResult> {
    let mut run = Run::new(id, format!("{} search hits", report.hits.len()));
    for h in &report.hits {
        run.probe(check, json!({ "poly": h.poly.to_hex() }))?;
    }
    Ok(run.finish())
}

/// Primary parts of minimal degree come in even number for every hit.
pub fn check_lemma_2_1(report: &SearchReport) -> Result<LemmaResult> {
    over_hits("lemma_2_1", "lemma_2_1", report)
}

/// Every hit is unitary perfect and divisible by `x` and `x + 1`.
pub fn check_lemma_2_9(report: &SearchReport) -> Result<LemmaResult> {
    over_hits("lemma_2_9", "lemma_2_9", report)
}

/// For every hit and every split into coprime factors, both factors are
/// unitary perfect or neither is.
pub fn check_lemma_2_2(report: &SearchReport) -> Result<LemmaResult> {
    over_hits("lemma_2_2", "lemma_2_2", report)
}

/// Conjugates, squares and fourth powers of hits are unitary perfect.
pub fn check_lemma_2_3(report: &SearchReport) -> Result<LemmaResult> {
    over_hits("lemma_2_3", "lemma_2_3", report)
}

/// The arithmetic irreducibility rule for complete polynomials agrees with
/// factoring for `1 <= m <= m_max`.
pub fn check_dickson(m_max: u64) -> Result<LemmaResult> {
    let mut run = Run::new("dickson", format!("1 <= m <= {m_max}"));
    for m in 1..=m_max {
        run.probe("dickson", json!({ "m": m }))?;
    }
    Ok(run.finish())
}

/// Cyclotomic products give `x^k + 1`, and `Phi_s(x^5) = Phi_s Phi_5s` for
/// odd `s` prime to 5.
pub fn check_cyclotomic(k_max: u64) -> Result<LemmaResult> {
    let mut run = Run::new("cyclotomic", format!("odd k <= {k_max}; odd s <= {k_max}, 5 does not divide s"));
    for k in (1..=k_max).step_by(2) {
        run.probe("cyclotomic", json!({ "k": k }))?;
    }
    for s in (1..=k_max).step_by(2).filter(|s| s % 5 != 0) {
        run.probe("phi_x5", json!({ "s": s }))?;
    }
    Ok(run.finish())
}

type Job<'a> = Box<dyn Fn() -> Result<LemmaResult> + Send + Sync + 'a>;

/// Runs every check, in parallel, in a fixed output order.
pub fn run_all(b: &Bounds) -> Result<Vec<LemmaResult>> {
    let report = brute_force_search(b.brute_degree.max(2), false)?;
    let r = &report;
    let jobs: Vec<Job> = vec![
        Box::new(move || check_lemma_2_1(r)),
        Box::new(move || check_lemma_2_2(r)),
        Box::new(move || check_lemma_2_3(r)),
        Box::new(move || check_lemma_2_4(b.h_max)),
        Box::new(move || check_lemma_2_5(b.lemma_2_5_n_max, b.lemma_2_5_p_deg_max)),
        Box::new(move || check_lemma_2_6(b.lemma_2_6_h_max)),
        Box::new(move || check_dickson(b.dickson_m_max)),
        Box::new(move || check_lemma_2_8(b.l_max, b.r_max)),
        Box::new(move || check_lemma_2_9(r)),
        Box::new(move || check_swan(b.swan_n_max)),
        Box::new(move || check_corollary_3_5(b.corollary_r_max)),
        Box::new(move || check_cyclotomic(b.cyclotomic_k_max)),
    ];
    jobs.par_iter().map(|job| job()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{Coverage, Hit};
    use std::time::Duration;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn one(check: &str, v: Value) -> Option<String> {
        probe(check, &params(v)).unwrap()
    }

    #[test]
    fn self_reciprocal_examples() {
        assert_eq!(factor(&complete(6)).unwrap().to_string(), "(x^3+x+1)*(x^3+x^2+1)");
        assert_eq!(p("x^3+x+1").reverse().unwrap(), p("x^3+x^2+1"));
        assert!(one("lemma_2_4/ii", json!({ "h": 6 })).is_none());
        assert!(one("lemma_2_4/i", json!({ "h": 4 })).is_none());
        assert_eq!(self_reciprocal_scan(12).unwrap(), [quadratic(), quartic()].into());
    }

    #[test]
    fn x_form_recognition() {
        assert!(has_x_form(&p("x^2+x+1")));
        assert!(has_x_form(&p("x^4+x^3+x^2+x+1")));
        assert!(has_x_form(&p("x^3+x+1")));
        assert!(!has_x_form(&p("x^6+x^3+1")));
        assert!(!has_x_form(&p("x+1")));
        assert!(!has_x_form(&p("x")));
        assert_eq!(x_form(1, 3).unwrap(), quartic());
    }

    #[test]
    fn complete_polynomial_examples() {
        assert_eq!(factor(&complete(8)).unwrap().to_string(), "(x^2+x+1)*(x^6+x^3+1)");
        assert!(complete(6).conjugate() == complete(6));
        assert!(complete(5).conjugate() != complete(5));
        assert!(quadratic().divides(&complete(8)));
        assert!(quartic().divides(&complete(9)));
        assert!(!quadratic().divides(&complete(3)));
        assert!(is_irreducible(&complete(4).substitute_x_pow(5)).unwrap());
        assert!(!is_irreducible(&complete(6)).unwrap());
        assert!(!is_irreducible(&complete(20)).unwrap());
    }

    #[test]
    fn small_checks_pass() {
        assert!(check_lemma_2_4(12).unwrap().passed());
        assert!(check_lemma_2_5(4, 4).unwrap().passed());
        assert!(check_lemma_2_6(40).unwrap().passed());
        assert!(check_lemma_2_8(6, 4).unwrap().passed());
        assert!(check_corollary_3_5(6).unwrap().passed());
        assert!(check_swan(2).unwrap().passed());
        assert!(check_dickson(40).unwrap().passed());
        assert!(check_cyclotomic(45).unwrap().passed());
    }

    #[test]
    fn checked_counts_grow_with_bounds() {
        let small = check_lemma_2_6(10).unwrap();
        let large = check_lemma_2_6(20).unwrap();
        assert_eq!((small.checked_count, large.checked_count), (11, 21));
        assert_eq!(check_swan(2).unwrap().checked_count, 7 + 15);
    }

    #[test]
    fn minimal_primary_parts_on_examples() {
        for s in ["0x6", "0xb4"] {
            assert!(one("lemma_2_1", json!({ "poly": s })).is_none(), "{s}");
        }
        let thm = [("x", 6), ("x+1", 4), ("x^2+x+1", 3), ("x^4+x+1", 1)]
            .iter()
            .map(|(q, e)| p(q).pow(*e).unwrap())
            .product::<Poly>();
        assert!(one("lemma_2_1", json!({ "poly": thm.to_hex() })).is_none());
    }

    #[test]
    fn corrupted_report_fails_and_replays() {
        let bad = p("x^3+x^2");
        let report = SearchReport {
            max_degree: 3,
            hits: vec![Hit { poly: bad.clone(), omega: 2, label: None }],
            elapsed: Duration::ZERO,
            candidates_tested: 1,
            coverage: Coverage::Degree(3),
        };
        let r = check_lemma_2_1(&report).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        let cx = r.counterexample.as_ref().unwrap();
        assert_eq!(cx.check, "lemma_2_1");
        assert!(replay(cx).unwrap());
        assert!(!check_lemma_2_9(&report).unwrap().passed());
        let line: Value = serde_json::from_str(&r.to_json_line()).unwrap();
        assert_eq!(line["verdict"], "fail");
        assert_eq!(line["counterexample"]["params"]["poly"], bad.to_hex());
    }

    #[test]
    fn replay_rejects_unknown_checks() {
        let cx = Counterexample { check: "nope".into(), params: Params::new(), detail: String::new() };
        assert!(replay(&cx).is_err());
    }

    #[test]
    fn bounds_parsing() {
        let b: Bounds = "# tiny\nh_max = 4\n\nl_max=5 # inline\n".parse().unwrap();
        assert_eq!(b.h_max, 4);
        assert_eq!(b.l_max, 5);
        assert_eq!(b.swan_n_max, Bounds::default().swan_n_max);
        assert!(matches!("h_max".parse::<Bounds>(), Err(Error::Parse { position: 1, .. })));
        assert!(matches!("x\nbogus=1".parse::<Bounds>(), Err(Error::Parse { position: 1, .. })));
        assert!(matches!("bogus=1".parse::<Bounds>(), Err(Error::Parse { position: 1, .. })));
        assert!(matches!("h_max=-3".parse::<Bounds>(), Err(Error::Parse { .. })));
        let round: Bounds = Bounds::default().to_string().parse().unwrap();
        assert_eq!(round, Bounds::default());
    }

    #[test]
    fn run_all_with_small_bounds() {
        let b: Bounds = "h_max=4\nlemma_2_6_h_max=10\nn_max=3\np_deg_max=3\nl_max=5\nr_max=3\nswan_n_max=1\ncorollary_r_max=3\ndickson_m_max=8\ncyclotomic_k_max=15\nbrute_degree=6".parse().unwrap();
        let results = run_all(&b).unwrap();
        assert_eq!(results.len(), 12);
        for r in &results {
            assert!(r.passed(), "{r:?}");
            assert!(r.counterexample.is_none());
        }
    }
}
