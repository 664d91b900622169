//! Minimum distance: full enumeration, support search on parity-check
//! columns, upper-bound witnesses and theorem-asserted values.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith;
use crate::codegen::{CyclicCode, Provenance};
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::poly::{Poly, PolyRing};

pub const DEFAULT_ENUM_BUDGET: u64 = 1 << 22;
pub const DEFAULT_RANK_TEST_CAP: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Exact,
    LowerBound,
    /// A weight-`w` codeword was found and every smaller support was ruled out.
    BoundedSearchExact,
    Inconclusive,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Exact => "exact",
            Kind::LowerBound => "lower-bound",
            Kind::BoundedSearchExact => "bounded-search-exact",
            Kind::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    FullEnumeration,
    SupportSearch,
    Theorem,
    Witness,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::FullEnumeration => "full-enumeration",
            Method::SupportSearch => "support-search",
            Method::Theorem => "theorem",
            Method::Witness => "witness",
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct BudgetUsed {
    pub codewords: u64,
    pub rank_tests: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceResult {
    pub kind: Kind,
    pub value: Option<u64>,
    pub method: Method,
    /// Supports of codewords found at `value`.
    pub witnesses: Vec<Vec<usize>>,
    /// Number of minimum-weight codewords; full enumeration only.
    pub min_weight_count: Option<u64>,
    pub budget_used: BudgetUsed,
    pub note: Option<String>,
}

impl DistanceResult {
    fn new(kind: Kind, value: Option<u64>, method: Method) -> Self {
        DistanceResult {
            kind,
            value,
            method,
            witnesses: vec![],
            min_weight_count: None,
            budget_used: BudgetUsed::default(),
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

fn empty_code(method: Method) -> DistanceResult {
    DistanceResult::new(Kind::Inconclusive, None, method).with_note("empty code")
}

/// `q^k`, saturating.
fn code_size(q: u64, k: usize) -> u64 {
    let mut s: u64 = 1;
    for _ in 0..k {
        s = s.saturating_mul(q);
    }
    s
}

/// Enumerates every nonzero `m(x) g(x)` with `deg m < k`.
pub fn exact_min_distance(code: &CyclicCode, budget: u64) -> DistanceResult {
    if code.k == 0 {
        return empty_code(Method::FullEnumeration);
    }
    let size = code_size(code.q, code.k);
    if size > budget {
        return DistanceResult::new(Kind::Inconclusive, None, Method::FullEnumeration)
            .with_note(format!("q^k exceeds the enumeration budget {budget}"));
    }
    let (best, count, support) = if code.q == 2 {
        enumerate_binary(code)
    } else {
        enumerate_qary(code)
    };
    let mut r = DistanceResult::new(Kind::Exact, Some(best as u64), Method::FullEnumeration);
    r.witnesses.push(support);
    r.min_weight_count = Some(count);
    r.budget_used.codewords = size - 1;
    r
}

fn shifted_rows(code: &CyclicCode) -> Vec<Vec<u32>> {
    let g = code.gen.coeffs();
    (0..code.k)
        .map(|i| {
            let mut row = vec![0u32; code.n];
            row[i..i + g.len()].copy_from_slice(g);
            row
        })
        .collect()
}

fn pack(bits: &[u32]) -> Vec<u64> {
    let mut out = vec![0u64; bits.len().div_ceil(64)];
    for (i, &b) in bits.iter().enumerate() {
        if b != 0 {
            out[i / 64] |= 1 << (i % 64);
        }
    }
    out
}

fn unpack_support(words: &[u64], n: usize) -> Vec<usize> {
    (0..n)
        .filter(|&i| words[i / 64] >> (i % 64) & 1 == 1)
        .collect()
}

fn enumerate_binary(code: &CyclicCode) -> (usize, u64, Vec<usize>) {
    let rows: Vec<Vec<u64>> = shifted_rows(code).iter().map(|r| pack(r)).collect();
    let mut c = vec![0u64; rows[0].len()];
    let (mut best, mut count, mut best_c) = (usize::MAX, 0u64, c.clone());
    for idx in 1u64..(1u64 << code.k) {
        let row = &rows[idx.trailing_zeros() as usize];
        for (a, b) in c.iter_mut().zip(row) {
            *a ^= b;
        }
        let w: usize = c.iter().map(|x| x.count_ones() as usize).sum();
        if w < best {
            best = w;
            count = 1;
            best_c.copy_from_slice(&c);
        } else if w == best {
            count += 1;
        }
    }
    (best, count, unpack_support(&best_c, code.n))
}

fn enumerate_qary(code: &CyclicCode) -> (usize, u64, Vec<usize>) {
    let q = code.q as u32;
    let rows = shifted_rows(code);
    let mut c = vec![0u32; code.n];
    let mut digits = vec![0u32; code.k];
    let (mut best, mut count, mut best_c) = (usize::MAX, 0u64, c.clone());
    loop {
        let mut i = 0;
        loop {
            for (a, b) in c.iter_mut().zip(&rows[i]) {
                *a = (*a + b) % q;
            }
            digits[i] += 1;
            if digits[i] == q {
                digits[i] = 0;
                i += 1;
                if i == code.k {
                    return (
                        best,
                        count,
                        (0..code.n).filter(|&j| best_c[j] != 0).collect(),
                    );
                }
            } else {
                break;
            }
        }
        let w = c.iter().filter(|&&x| x != 0).count();
        if w < best {
            best = w;
            count = 1;
            best_c.copy_from_slice(&c);
        } else if w == best {
            count += 1;
        }
    }
}

/// Parity-check matrix from `h(x) = (x^n - 1)/g(x)`: row `t - k` encodes
/// `sum_j h_j c_{t-j} = 0` for `t` in `k..n`. Returned column by column.
pub fn parity_check_columns(code: &CyclicCode) -> Vec<Vec<u32>> {
    let h = code.parity_check_poly();
    let h = h.coeffs();
    let (n, k) = (code.n, code.k);
    let mut cols = vec![vec![0u32; n - k]; n];
    for t in k..n {
        for (j, &hj) in h.iter().enumerate() {
            cols[t - j][t - k] = hj;
        }
    }
    cols
}

trait Space {
    type Col: Ord + Clone;
    /// `dst = src + a * col`.
    fn axpy(&self, dst: &mut Self::Col, src: &Self::Col, a: u32, col: &Self::Col);
}

struct Binary;

impl Space for Binary {
    type Col = Vec<u64>;
    fn axpy(&self, dst: &mut Vec<u64>, src: &Vec<u64>, _a: u32, col: &Vec<u64>) {
        for ((d, s), c) in dst.iter_mut().zip(src).zip(col) {
            *d = s ^ c;
        }
    }
}

struct Qary(u32);

impl Space for Qary {
    type Col = Vec<u32>;
    fn axpy(&self, dst: &mut Vec<u32>, src: &Vec<u32>, a: u32, col: &Vec<u32>) {
        let q = self.0 as u64;
        for ((d, &s), &c) in dst.iter_mut().zip(src).zip(col) {
            *d = ((s as u64 + a as u64 * c as u64) % q) as u32;
        }
    }
}

/// A dependency: `col[last] = sum coeffs[l] * col[prefix[l]]`.
struct Found {
    prefix: Vec<usize>,
    coeffs: Vec<u32>,
    last: usize,
}

struct Probe<'a, S: Space> {
    space: &'a S,
    cols: &'a [S::Col],
    sorted: Vec<(S::Col, usize)>,
    q: u32,
    probes: u64,
}

impl<S: Space> Probe<'_, S> {
    fn lookup(&self, target: &S::Col, after: Option<usize>) -> Option<usize> {
        let start = self.sorted.partition_point(|(c, _)| c < target);
        self.sorted[start..]
            .iter()
            .take_while(|(c, _)| c == target)
            .map(|&(_, i)| i)
            .find(|&i| after.is_none_or(|a| i > a))
    }

    fn dfs(
        &mut self,
        depth: usize,
        acc: &mut [S::Col],
        prefix: &mut Vec<usize>,
        coeffs: &mut Vec<u32>,
    ) -> Option<Found> {
        let n = self.cols.len();
        if depth == 0 {
            self.probes += 1;
            let target = &acc[prefix.len()];
            return self
                .lookup(target, prefix.last().copied())
                .map(|last| Found {
                    prefix: prefix.clone(),
                    coeffs: coeffs.clone(),
                    last,
                });
        }
        let lo = prefix.last().map_or(0, |&i| i + 1);
        // leave room for `depth - 1` more prefix indices and the completing one
        for i in lo..n.saturating_sub(depth) {
            prefix.push(i);
            let l = prefix.len();
            for a in 1..self.q {
                let (head, tail) = acc.split_at_mut(l);
                self.space
                    .axpy(&mut tail[0], &head[l - 1], a, &self.cols[i]);
                coeffs.push(a);
                if let Some(f) = self.dfs(depth - 1, acc, prefix, coeffs) {
                    return Some(f);
                }
                coeffs.pop();
            }
            prefix.pop();
        }
        None
    }
}

/// Number of probes in round `w`: `C(n, w-1) (q-1)^(w-1)`, saturating.
fn round_cost(n: usize, q: u64, w: usize) -> u64 {
    let mut c = arith::binomial(n as u64, (w - 1) as u64);
    for _ in 1..w {
        c = c.saturating_mul(q - 1);
    }
    c
}

/// Rank of a matrix given by columns, over `GF(q)`.
pub fn rank_of_columns(field: &PrimeField, cols: &[&[u32]]) -> usize {
    if cols.is_empty() {
        return 0;
    }
    let rows = cols[0].len();
    let mut m: Vec<Vec<u32>> = (0..rows)
        .map(|r| cols.iter().map(|c| c[r]).collect())
        .collect();
    let w = cols.len();
    let mut rank = 0;
    for col in 0..w {
        let Some(p) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = field.inv(&m[rank][col]).expect("pivot is nonzero");
        for x in m[rank].iter_mut() {
            *x = field.mul(x, &inv);
        }
        for r in 0..rows {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col];
                for c in 0..w {
                    let t = field.mul(&f, &m[rank][c]);
                    m[r][c] = field.sub(&m[r][c], &t);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Decides for `w = 1..=wmax` whether a codeword of weight `w` exists, by
/// looking for `w` linearly dependent parity-check columns.
pub fn min_weight_support_search(code: &CyclicCode, wmax: usize, cap: u64) -> DistanceResult {
    if code.k == 0 {
        return empty_code(Method::SupportSearch);
    }
    let cols = parity_check_columns(code);
    let (found, used, stopped) = if code.q == 2 {
        let packed: Vec<Vec<u64>> = cols.iter().map(|c| pack(c)).collect();
        run_search(&Binary, &packed, 2, wmax, cap)
    } else {
        run_search(&Qary(code.q as u32), &cols, code.q as u32, wmax, cap)
    };
    let budget = BudgetUsed {
        rank_tests: used,
        ..Default::default()
    };
    let mut r = match found {
        Some((w, f)) => {
            let support = verified_support(code, &cols, &f)
                .expect("a dependency among parity-check columns is a codeword");
            debug_assert_eq!(support.len(), w);
            let mut r = DistanceResult::new(
                Kind::BoundedSearchExact,
                Some(w as u64),
                Method::SupportSearch,
            );
            r.witnesses.push(support);
            r
        }
        None => match stopped {
            Some(1) => DistanceResult::new(Kind::Inconclusive, None, Method::SupportSearch)
                .with_note("rank-test cap exceeded"),
            Some(w) => DistanceResult::new(Kind::LowerBound, Some(w as u64), Method::SupportSearch)
                .with_note(format!("rank-test cap reached before weight {w}")),
            None => DistanceResult::new(
                Kind::LowerBound,
                Some(wmax as u64 + 1),
                Method::SupportSearch,
            ),
        },
    };
    r.budget_used = budget;
    r
}

type SearchOutcome = (Option<(usize, Found)>, u64, Option<usize>);

fn run_search<S: Space>(
    space: &S,
    cols: &[S::Col],
    q: u32,
    wmax: usize,
    cap: u64,
) -> SearchOutcome {
    let n = cols.len();
    let mut sorted: Vec<(S::Col, usize)> = cols.iter().cloned().zip(0..).collect();
    sorted.sort();
    let mut probe = Probe {
        space,
        cols,
        sorted,
        q,
        probes: 0,
    };
    let zero = {
        let mut z = cols[0].clone();
        space.axpy(&mut z, &cols[0], q - 1, &cols[0]);
        z
    };
    for w in 1..=wmax.min(n) {
        let cost = round_cost(n, q as u64, w);
        if probe.probes.saturating_add(cost) > cap {
            return (None, probe.probes, Some(w));
        }
        let mut acc = vec![zero.clone(); w];
        let mut prefix = Vec::with_capacity(w);
        let mut coeffs = Vec::with_capacity(w);
        if let Some(f) = probe.dfs(w - 1, &mut acc, &mut prefix, &mut coeffs) {
            return (Some((w, f)), probe.probes, None);
        }
    }
    (None, probe.probes, None)
}

/// Rebuilds the codeword of a dependency and checks it twice: divisibility
/// by the generator and a rank test on its columns.
fn verified_support(code: &CyclicCode, cols: &[Vec<u32>], f: &Found) -> Option<Vec<usize>> {
    let field = code.field();
    let mut c = vec![0u32; code.n];
    for (&i, &a) in f.prefix.iter().zip(&f.coeffs) {
        c[i] = a;
    }
    c[f.last] = field.minus_one();
    let ring = PolyRing::new(&field);
    if !code.contains(&ring.from_coeffs(c)) {
        return None;
    }
    let mut support = f.prefix.clone();
    support.push(f.last);
    let sub: Vec<&[u32]> = support.iter().map(|&i| cols[i].as_slice()).collect();
    (rank_of_columns(&field, &sub) < support.len()).then_some(support)
}

/// A codeword of small weight found without search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub weight: u64,
    pub support: Vec<usize>,
    pub source: String,
}

/// Lightest among a fixed list of candidate codewords: `g(x)`, every
/// `(x^n - 1)/(x^d - 1)` with `d | n` that lies in the code, the
/// systematic generator rows and their pairwise sums and differences.
pub fn upper_bound_witness(code: &CyclicCode) -> Option<Witness> {
    if code.k == 0 {
        return None;
    }
    let field = code.field();
    let ring = PolyRing::new(&field);
    let n = code.n;
    let mut best: Option<Witness> = None;
    let mut offer = |c: &Poly<u32>, source: &dyn Fn() -> String| {
        let w = ring.weight(c) as u64;
        if w > 0 && best.as_ref().is_none_or(|b| w < b.weight) {
            best = Some(Witness {
                weight: w,
                support: (0..n)
                    .filter(|&i| c.coeff(i).is_some_and(|x| *x != 0))
                    .collect(),
                source: source(),
            });
        }
    };
    offer(&code.gen, &|| "generator".into());
    for d in 1..n {
        if n.is_multiple_of(d) {
            let c = ring.from_support(&(0..n / d).map(|t| t * d).collect::<Vec<_>>());
            if code.contains(&c) {
                offer(&c, &|| format!("(x^{n}-1)/(x^{d}-1)"));
            }
        }
    }
    let rows = systematic_rows(code, &ring);
    for (i, r) in rows.iter().enumerate() {
        offer(r, &|| format!("systematic row {i}"));
    }
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            offer(&ring.add(&rows[i], &rows[j]), &|| format!("rows {i}+{j}"));
            if code.q > 2 {
                offer(&ring.sub(&rows[i], &rows[j]), &|| format!("rows {i}-{j}"));
            }
        }
    }
    best
}

/// `x^{n-k+i} - (x^{n-k+i} mod g)` for `i < k`.
fn systematic_rows(code: &CyclicCode, ring: &PolyRing<'_, PrimeField>) -> Vec<Poly<u32>> {
    let r = code.n - code.k;
    let mut rem = ring
        .rem(&ring.monomial(1, r), &code.gen)
        .expect("gen is nonzero");
    let mut out = Vec::with_capacity(code.k);
    for i in 0..code.k {
        out.push(ring.sub(&ring.monomial(1, r + i), &rem));
        rem = ring
            .rem(&ring.shift(&rem, 1), &code.gen)
            .expect("gen is nonzero");
    }
    out
}

/// The distance a constructor's theorem asserts.
pub fn theorem_bounds(code: &CyclicCode, theorem: u8) -> Result<DistanceResult> {
    let Provenance::Constructor(c) = code.provenance else {
        return Err(Error::MismatchedTheorem { requested: theorem });
    };
    if c.theorem() != theorem {
        return Err(Error::MismatchedTheorem { requested: theorem });
    }
    let claim = code
        .claim
        .ok_or(Error::MismatchedTheorem { requested: theorem })?;
    let kind = if claim.exact {
        Kind::Exact
    } else {
        Kind::LowerBound
    };
    Ok(DistanceResult::new(
        kind,
        Some(claim.value),
        Method::Theorem,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codegen::{Construction, Constructor};

    fn code(q: u64, n: usize, gen: &[u32]) -> CyclicCode {
        let f = PrimeField::new(q).unwrap();
        let ring = PolyRing::new(&f);
        CyclicCode::new(q, n, ring.from_coeffs(gen.to_vec()), Provenance::Oracle).unwrap()
    }

    #[test]
    fn hamming_7_4() {
        let c = code(2, 7, &[1, 1, 0, 1]);
        let e = exact_min_distance(&c, 1 << 10);
        assert_eq!((e.kind, e.value), (Kind::Exact, Some(3)));
        assert_eq!(e.min_weight_count, Some(7));
        let s = min_weight_support_search(&c, 5, DEFAULT_RANK_TEST_CAP);
        assert_eq!((s.kind, s.value), (Kind::BoundedSearchExact, Some(3)));
        let s = min_weight_support_search(&c, 2, DEFAULT_RANK_TEST_CAP);
        assert_eq!((s.kind, s.value), (Kind::LowerBound, Some(3)));
    }

    #[test]
    fn ternary_golay() {
        // x^5 + x^4 - x^3 + x^2 - 1 generates the [11, 6, 5] ternary Golay code
        let c = code(3, 11, &[2, 0, 1, 2, 1, 1]);
        let e = exact_min_distance(&c, 1 << 12);
        assert_eq!(e.value, Some(5));
        assert_eq!(e.min_weight_count, Some(132));
        let s = min_weight_support_search(&c, 6, DEFAULT_RANK_TEST_CAP);
        assert_eq!((s.kind, s.value), (Kind::BoundedSearchExact, Some(5)));
    }

    #[test]
    fn whole_space_and_empty_code() {
        let all = code(2, 5, &[1]);
        assert_eq!(exact_min_distance(&all, 1 << 10).value, Some(1));
        assert_eq!(min_weight_support_search(&all, 3, 1000).value, Some(1));
        let zero = code(2, 5, &[1, 0, 0, 0, 0, 1]);
        let r = exact_min_distance(&zero, 1 << 10);
        assert_eq!(
            (r.kind, r.note.as_deref()),
            (Kind::Inconclusive, Some("empty code"))
        );
    }

    #[test]
    fn budget_and_cap() {
        let c = Construction::new(7, 13, 2).unwrap().generator_via_gcd();
        let r = exact_min_distance(&c, 1000);
        assert_eq!(r.kind, Kind::Inconclusive);
        let r = min_weight_support_search(&c, 4, 10);
        assert_eq!(r.kind, Kind::LowerBound);
        assert_eq!(r.value, Some(2));
        let r = min_weight_support_search(&c, 4, 0);
        assert_eq!(r.kind, Kind::Inconclusive);
    }

    #[test]
    fn example2_distance() {
        let c = Construction::new(13, 7, 2).unwrap().generator_via_gcd();
        let r = exact_min_distance(&c, DEFAULT_ENUM_BUDGET);
        assert_eq!(r.value, Some(91));
        assert_eq!(r.budget_used.codewords, 1);
        let s = min_weight_support_search(&c, 4, DEFAULT_RANK_TEST_CAP);
        assert_eq!((s.kind, s.value), (Kind::LowerBound, Some(5)));
    }

    #[test]
    fn rank_of_small_matrices() {
        let f = PrimeField::new(3).unwrap();
        let a = [1u32, 2, 0];
        let b = [2u32, 1, 0];
        let c = [0u32, 0, 1];
        assert_eq!(rank_of_columns(&f, &[&a, &b]), 1);
        assert_eq!(rank_of_columns(&f, &[&a, &c]), 2);
    }

    #[test]
    fn theorem_bounds_pairing() {
        let c = Construction::new(13, 19, 2).unwrap();
        let t5 = c
            .theorem_constructor(Constructor::T5 { i: 1, j: 0 })
            .unwrap();
        let r = theorem_bounds(&t5, 5).unwrap();
        assert_eq!((r.kind, r.value), (Kind::LowerBound, Some(5)));
        assert!(matches!(
            theorem_bounds(&t5, 6),
            Err(Error::MismatchedTheorem { requested: 6 })
        ));
        let t3 = c.theorem_constructor(Constructor::T3 { i: 2 }).unwrap();
        let r = theorem_bounds(&t3, 3).unwrap();
        assert_eq!((r.kind, r.value), (Kind::Exact, Some(13)));
        assert!(theorem_bounds(&c.generator_via_gcd(), 3).is_err());
    }

    #[test]
    fn witness_is_a_codeword() {
        let c = Construction::new(13, 19, 2).unwrap();
        let t5 = c
            .theorem_constructor(Constructor::T5 { i: 1, j: 0 })
            .unwrap();
        let w = upper_bound_witness(&t5).unwrap();
        assert!(w.weight <= 19);
        let ring = c.ring();
        assert!(t5.contains(&ring.from_support(&w.support)));
    }
}
