//! Exact arithmetic in `GF(q)` for prime `q` and in extensions `GF(q^m)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};

/// A finite field with an explicit element type.
pub trait Field {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn characteristic(&self) -> u64;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// Image of the integer `v` under `Z -> F`.
    fn from_u64(&self, v: u64) -> Self::Elem;

    fn minus_one(&self) -> Self::Elem {
        self.neg(&self.one())
    }

    fn pow_u64(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// `GF(q)` for a prime `q < 2^31`; elements are residues in `[0, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self> {
        if !arith::is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if q >= 1 << 31 {
            return Err(Error::CapacityExceeded(format!(
                "base field size {q} exceeds 2^31"
            )));
        }
        Ok(PrimeField { q })
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (if s >= self.q { s - self.q } else { s }) as u32
    }

    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            (self.q - *a as u64) as u32
        }
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        (*a as u64 * *b as u64 % self.q) as u32
    }

    fn inv(&self, a: &u32) -> Result<u32> {
        if *a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(arith::pow_mod(*a as u64, self.q - 2, self.q) as u32)
    }

    fn characteristic(&self) -> u64 {
        self.q
    }

    fn from_u64(&self, v: u64) -> u32 {
        (v % self.q) as u32
    }
}

/// An element of `GF(q^m)` in the polynomial basis `1, x, ..., x^(m-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtElem(Vec<u32>);

impl ExtElem {
    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }
}

/// `GF(q^m) = GF(q)[x] / (f)` for a monic irreducible `f` of degree `m`.
#[derive(Debug, Clone)]
pub struct ExtField {
    base: PrimeField,
    modulus: Poly<u32>,
    m: usize,
    // x^(m+k) mod f for k in 0..m-1
    reduction: Vec<Vec<u32>>,
    lazy: bool,
    group_order: BigUint,
}

impl ExtField {
    /// Builds `GF(q^m)` over the lexicographically first irreducible modulus.
    pub fn new(q: u64, m: usize) -> Result<Self> {
        let base = PrimeField::new(q)?;
        let modulus = find_irreducible(&base, m)?;
        Self::with_modulus(base, modulus)
    }

    pub fn with_modulus(base: PrimeField, modulus: Poly<u32>) -> Result<Self> {
        let ring = PolyRing::new(&base);
        let m = modulus
            .degree()
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::InvalidArgument("modulus must have degree >= 1".into()))?;
        if !ring.is_monic(&modulus) {
            return Err(Error::InvalidArgument("modulus must be monic".into()));
        }
        if !is_irreducible(&base, &modulus)? {
            return Err(Error::InvalidArgument("modulus is reducible".into()));
        }
        let size = BigUint::from(base.q()).pow(m as u32);
        if size.bits() > arith::MAX_FIELD_BITS {
            return Err(Error::CapacityExceeded(format!(
                "{}^{m} exceeds {} bits",
                base.q(),
                arith::MAX_FIELD_BITS
            )));
        }
        let mut reduction = Vec::with_capacity(m.saturating_sub(1));
        let x = ring.monomial(1, 1);
        let mut cur = ring.pow_mod(&x, m as u64, &modulus)?;
        for _ in 0..m.saturating_sub(1) {
            let mut row = cur.coeffs().to_vec();
            row.resize(m, 0);
            reduction.push(row);
            cur = ring.mul_mod(&cur, &x, &modulus)?;
        }
        let q = base.q() as u128;
        let lazy = 2 * (m as u128) * (q - 1) * (q - 1) < u64::MAX as u128;
        Ok(ExtField {
            base,
            modulus,
            m,
            reduction,
            lazy,
            group_order: size - 1u32,
        })
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &Poly<u32> {
        &self.modulus
    }

    /// `q^m - 1`.
    pub fn group_order(&self) -> &BigUint {
        &self.group_order
    }

    /// Builds an element from basis coefficients, reducing each mod `q`.
    pub fn element(&self, coeffs: &[u64]) -> Result<ExtElem> {
        if coeffs.len() != self.m {
            return Err(Error::InvalidArgument(format!(
                "expected {} coefficients, got {}",
                self.m,
                coeffs.len()
            )));
        }
        Ok(ExtElem(
            coeffs.iter().map(|&c| (c % self.base.q()) as u32).collect(),
        ))
    }

    /// Element whose coefficient vector is the base-`q` expansion of `k`
    /// (least significant digit first).
    pub fn element_from_index(&self, k: &BigUint) -> ExtElem {
        let q = BigUint::from(self.base.q());
        let mut rest = k.clone();
        let mut coeffs = vec![0u32; self.m];
        for c in coeffs.iter_mut() {
            let digit = &rest % &q;
            *c = digit.iter_u32_digits().next().unwrap_or(0);
            rest /= &q;
        }
        ExtElem(coeffs)
    }

    pub fn embed(&self, c: u32) -> ExtElem {
        let mut v = vec![0u32; self.m];
        v[0] = c;
        ExtElem(v)
    }

    /// The base-field value of `a`, if `a` lies in `GF(q)`.
    pub fn descend(&self, a: &ExtElem) -> Option<u32> {
        if a.0[1..].iter().all(|&c| c == 0) {
            Some(a.0[0])
        } else {
            None
        }
    }

    /// The class of `x`.
    pub fn generator(&self) -> ExtElem {
        if self.m == 1 {
            // x = -f(0) in GF(q)[x]/(x + f(0))
            let c0 = self.modulus.coeff(0).copied().unwrap_or(0);
            return self.embed(self.base.neg(&c0));
        }
        let mut v = vec![0u32; self.m];
        v[1] = 1;
        ExtElem(v)
    }

    pub fn pow(&self, a: &ExtElem, e: &BigUint) -> ExtElem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// `a^q`.
    pub fn frobenius(&self, a: &ExtElem) -> ExtElem {
        self.pow_u64(a, self.base.q())
    }

    /// Multiplicative order of a nonzero element, by stripping prime factors
    /// of `q^m - 1`.
    pub fn element_order(&self, a: &ExtElem) -> Result<BigUint> {
        if self.is_zero(a) {
            return Err(Error::ZeroInverse);
        }
        let one = self.one();
        let mut order = self.group_order.clone();
        for r in arith::prime_divisors_of_power_minus_one(self.base.q(), self.m as u64)? {
            while (&order % &r).is_zero() {
                let cand = &order / &r;
                if self.pow(a, &cand) == one {
                    order = cand;
                } else {
                    break;
                }
            }
        }
        Ok(order)
    }

    /// First nonzero element, in index order, of multiplicative order `q^m - 1`.
    pub fn primitive_element(&self) -> Result<ExtElem> {
        let primes = arith::prime_divisors_of_power_minus_one(self.base.q(), self.m as u64)?;
        let exps: Vec<BigUint> = primes.iter().map(|r| &self.group_order / r).collect();
        let one = self.one();
        let mut k = BigUint::one();
        loop {
            let cand = self.element_from_index(&k);
            if exps.iter().all(|e| self.pow(&cand, e) != one) {
                return Ok(cand);
            }
            k += 1u32;
        }
    }

    /// `beta = alpha^((q^m - 1) / n)` for the primitive element `alpha`.
    pub fn nth_root_of_unity(&self, n: u64) -> Result<UnityRoot> {
        if n == 0 || !arith::big_divides(n, &self.group_order) {
            return Err(Error::RootOrderMismatch { n });
        }
        let alpha = self.primitive_element()?;
        let beta = self.pow(&alpha, &(&self.group_order / n));
        UnityRoot::new(self.clone(), beta, n)
    }

    fn reduce(&self, v: u64) -> u32 {
        (v % self.base.q()) as u32
    }
}

impl Field for ExtField {
    type Elem = ExtElem;

    fn zero(&self) -> ExtElem {
        ExtElem(vec![0; self.m])
    }

    fn one(&self) -> ExtElem {
        self.embed(1)
    }

    fn is_zero(&self, a: &ExtElem) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        ExtElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(x, y)| self.base.add(x, y))
                .collect(),
        )
    }

    fn neg(&self, a: &ExtElem) -> ExtElem {
        ExtElem(a.0.iter().map(|x| self.base.neg(x)).collect())
    }

    fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        ExtElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(x, y)| self.base.sub(x, y))
                .collect(),
        )
    }

    fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let m = self.m;
        let q = self.base.q();
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &ai) in a.0.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let ai = ai as u64;
            for (j, &bj) in b.0.iter().enumerate() {
                let t = ai * bj as u64;
                if self.lazy {
                    prod[i + j] += t;
                } else {
                    prod[i + j] = (prod[i + j] + t % q) % q;
                }
            }
        }
        let (low, high) = prod.split_at_mut(m);
        for (k, h) in high.iter().enumerate() {
            let c = h % q;
            if c == 0 {
                continue;
            }
            for (j, &r) in self.reduction[k].iter().enumerate() {
                let t = c * r as u64;
                if self.lazy {
                    low[j] += t;
                } else {
                    low[j] = (low[j] + t % q) % q;
                }
            }
        }
        ExtElem(low.iter().map(|&v| self.reduce(v)).collect())
    }

    fn inv(&self, a: &ExtElem) -> Result<ExtElem> {
        if self.is_zero(a) {
            return Err(Error::ZeroInverse);
        }
        // extended Euclid on (f, a) over GF(q)
        let ring = PolyRing::new(&self.base);
        let mut r0 = self.modulus.clone();
        let mut r1 = ring.from_coeffs(a.0.clone());
        let mut t0: Poly<u32> = Poly::zero();
        let mut t1 = ring.one();
        while !r1.is_zero() {
            let (qt, r) = ring.divrem(&r0, &r1)?;
            let t = ring.sub(&t0, &ring.mul(&qt, &t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t;
        }
        // r0 is a nonzero constant since f is irreducible
        let c = ring.field().inv(&r0.coeffs()[0])?;
        let inv = ring.rem(&ring.scale(&t0, &c), &self.modulus)?;
        let mut coeffs = inv.into_coeffs();
        coeffs.resize(self.m, 0);
        Ok(ExtElem(coeffs))
    }

    fn characteristic(&self) -> u64 {
        self.base.q()
    }

    fn from_u64(&self, v: u64) -> ExtElem {
        self.embed(self.base.from_u64(v))
    }
}

/// A primitive `n`-th root of unity together with its power table.
#[derive(Debug, Clone)]
pub struct UnityRoot {
    field: ExtField,
    n: u64,
    powers: Vec<ExtElem>,
}

impl UnityRoot {
    /// Checks that `beta` has order exactly `n`.
    pub fn new(field: ExtField, beta: ExtElem, n: u64) -> Result<Self> {
        let one = field.one();
        if field.pow_u64(&beta, n) != one {
            return Err(Error::DegenerateRoot {
                expected: n,
                found: 0,
            });
        }
        for r in arith::prime_divisors(n) {
            if field.pow_u64(&beta, n / r) == one {
                let found = field.element_order(&beta)?.try_into().unwrap_or(u64::MAX);
                return Err(Error::DegenerateRoot { expected: n, found });
            }
        }
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = one;
        for _ in 0..n {
            powers.push(cur.clone());
            cur = field.mul(&cur, &beta);
        }
        Ok(UnityRoot { field, n, powers })
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn beta(&self) -> &ExtElem {
        &self.powers[1 % self.powers.len()]
    }

    /// `beta^a`, exponent taken mod `n`.
    pub fn power(&self, a: u64) -> &ExtElem {
        &self.powers[(a % self.n) as usize]
    }
}

/// Rabin's test: `f | x^(q^m) - x` and `gcd(x^(q^(m/r)) - x, f) = 1` for
/// every prime `r | m`.
pub fn is_irreducible(field: &PrimeField, f: &Poly<u32>) -> Result<bool> {
    let ring = PolyRing::new(field);
    let Some(m) = f.degree() else {
        return Ok(false);
    };
    if m == 0 {
        return Ok(false);
    }
    if m == 1 {
        return Ok(true);
    }
    let q = field.q();
    let x = ring.monomial(1, 1);
    let frob_iter = |k: usize| -> Result<Poly<u32>> {
        let mut h = ring.rem(&x, f)?;
        for _ in 0..k {
            h = ring.pow_mod(&h, q, f)?;
        }
        Ok(h)
    };
    if ring.sub(&frob_iter(m)?, &ring.rem(&x, f)?) != Poly::zero() {
        return Ok(false);
    }
    for r in arith::prime_divisors(m as u64) {
        let h = ring.sub(&frob_iter(m / r as usize)?, &x);
        if ring.gcd(&h, f)?.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First monic irreducible polynomial of degree `m` over `GF(q)`.
///
/// Candidates `x^m + c_(m-1) x^(m-1) + ... + c_0` are visited in increasing
/// order of the integer `sum c_i q^i`, so `x^3 + x + 1` precedes
/// `x^3 + x^2 + 1` over `GF(2)`.
pub fn find_irreducible(field: &PrimeField, m: usize) -> Result<Poly<u32>> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "extension degree must be >= 1".into(),
        ));
    }
    let ring = PolyRing::new(field);
    let q = field.q() as u32;
    let mut digits = vec![0u32; m];
    loop {
        // c_0 = 0 means x divides f
        if m == 1 || digits[0] != 0 {
            let mut coeffs = digits.clone();
            coeffs.push(1);
            let f = ring.from_coeffs(coeffs);
            let rootless = m == 1 || q > 64 || (0..q).all(|v| ring.eval(&f, &v) != 0);
            if rootless && is_irreducible(field, &f)? {
                return Ok(f);
            }
        }
        let mut i = 0;
        loop {
            if i == m {
                return Err(Error::InvalidArgument(format!(
                    "no irreducible of degree {m} found"
                )));
            }
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    fn brute_irreducible(q: u32, f: &Poly<u32>) -> bool {
        // trial division by every monic polynomial of degree 1..=deg/2
        let field = gf(q as u64);
        let ring = PolyRing::new(&field);
        let deg = f.degree().unwrap();
        for d in 1..=deg / 2 {
            let count = (q as usize).pow(d as u32);
            for idx in 0..count {
                let mut c = Vec::with_capacity(d + 1);
                let mut rest = idx;
                for _ in 0..d {
                    c.push((rest % q as usize) as u32);
                    rest /= q as usize;
                }
                c.push(1);
                let g = ring.from_coeffs(c);
                if ring.divides(&g, f).unwrap() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn irreducible_examples() {
        let r2 = gf(2);
        let ring2 = PolyRing::new(&r2);
        assert_eq!(find_irreducible(&r2, 1).unwrap(), ring2.monomial(1, 1));
        assert_eq!(
            find_irreducible(&r2, 3).unwrap(),
            ring2.from_coeffs(vec![1, 1, 0, 1])
        );
        let r3 = gf(3);
        assert_eq!(
            find_irreducible(&r3, 2).unwrap(),
            PolyRing::new(&r3).from_coeffs(vec![1, 0, 1])
        );
    }

    #[test]
    fn irreducible_is_first_and_correct() {
        for (q, m) in [
            (2u64, 2usize),
            (2, 4),
            (2, 5),
            (2, 6),
            (3, 3),
            (3, 4),
            (5, 2),
            (5, 3),
        ] {
            let field = gf(q);
            let ring = PolyRing::new(&field);
            let f = find_irreducible(&field, m).unwrap();
            assert!(brute_irreducible(q as u32, &f), "q={q} m={m}");
            // no earlier candidate in tuple order is irreducible
            let mut tuple: Vec<u32> = f.coeffs()[..m].to_vec();
            loop {
                let mut i = 0;
                let mut done = false;
                loop {
                    if i == m {
                        done = true;
                        break;
                    }
                    if tuple[i] > 0 {
                        tuple[i] -= 1;
                        break;
                    }
                    tuple[i] = q as u32 - 1;
                    i += 1;
                }
                if done {
                    break;
                }
                let mut c = tuple.clone();
                c.push(1);
                assert!(!brute_irreducible(q as u32, &ring.from_coeffs(c)));
            }
        }
    }

    #[test]
    fn gf8_product_example() {
        let f = ExtField::new(2, 3).unwrap();
        let x = f.element(&[0, 1, 0]).unwrap();
        let x2 = f.element(&[0, 0, 1]).unwrap();
        assert_eq!(f.mul(&x, &x2), f.element(&[1, 1, 0]).unwrap());
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        let f = ExtField::new(3, 2).unwrap();
        assert_eq!(f.inv(&f.zero()), Err(Error::ZeroInverse));
    }

    #[test]
    fn exhaustive_field_axioms_small() {
        for (q, m) in [(2u64, 4usize), (3, 3), (5, 2), (2, 1), (7, 1)] {
            let f = ExtField::new(q, m).unwrap();
            let size = (q as usize).pow(m as u32);
            let order = BigUint::from(size as u64 - 1);
            let one = f.one();
            for k in 1..size {
                let a = f.element_from_index(&BigUint::from(k));
                assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), one);
                assert_eq!(f.pow(&a, &order), one);
            }
        }
    }

    #[test]
    fn fermat_on_gf_2_16() {
        let f = ExtField::new(2, 16).unwrap();
        let order = f.group_order().clone();
        let one = f.one();
        for k in 1..(1u64 << 16) {
            let a = f.element_from_index(&BigUint::from(k));
            assert_eq!(f.pow(&a, &order), one);
        }
    }

    #[test]
    fn primitive_element_examples() {
        let f = ExtField::new(2, 1).unwrap();
        assert_eq!(f.primitive_element().unwrap(), f.embed(1));
        let f = ExtField::new(3, 1).unwrap();
        assert_eq!(f.primitive_element().unwrap(), f.embed(2));
        let f = ExtField::new(2, 3).unwrap();
        let x = f.element(&[0, 1, 0]).unwrap();
        assert_eq!(f.primitive_element().unwrap(), x);
        // powers of x enumerate all 7 nonzero elements
        let mut seen = alloc::collections::BTreeSet::new();
        let mut cur = f.one();
        for _ in 0..7 {
            seen.insert(cur.clone());
            cur = f.mul(&cur, &x);
        }
        assert_eq!(seen.len(), 7);
    }

    #[test]
    fn roots_of_unity() {
        let f = ExtField::new(2, 3).unwrap();
        let r = f.nth_root_of_unity(1).unwrap();
        assert_eq!(r.beta(), &f.one());
        let r = f.nth_root_of_unity(7).unwrap();
        assert_eq!(r.beta(), &f.primitive_element().unwrap());
        assert!(f.nth_root_of_unity(5).is_err());

        for (q, n) in [(2u64, 91u64), (2, 247), (3, 589)] {
            let m = arith::multiplicative_order(q, n).unwrap() as usize;
            let f = ExtField::new(q, m).unwrap();
            let r = f.nth_root_of_unity(n).unwrap();
            assert_eq!(f.pow_u64(r.beta(), n), f.one());
            for p in arith::prime_divisors(n) {
                assert_ne!(f.pow_u64(r.beta(), n / p), f.one());
            }
        }
    }

    #[test]
    fn generator_of_degree_one_field() {
        let base = gf(5);
        let ring = PolyRing::new(&base);
        // x + 2, so x = -2 = 3
        let f = ExtField::with_modulus(base, ring.from_coeffs(vec![2, 1])).unwrap();
        assert_eq!(f.generator(), f.embed(3));
    }

    #[test]
    fn reducible_modulus_rejected() {
        let base = gf(2);
        let ring = PolyRing::new(&base);
        let f = ring.from_coeffs(vec![1, 0, 1]);
        assert!(ExtField::with_modulus(base, f).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn frobenius_is_a_ring_map_gf2_36(a in proptest::collection::vec(0u64..2, 36),
                                              b in proptest::collection::vec(0u64..2, 36)) {
                let f = ExtField::new(2, 36).unwrap();
                let (a, b) = (f.element(&a).unwrap(), f.element(&b).unwrap());
                prop_assert_eq!(f.frobenius(&f.add(&a, &b)), f.add(&f.frobenius(&a), &f.frobenius(&b)));
                prop_assert_eq!(f.frobenius(&f.mul(&a, &b)), f.mul(&f.frobenius(&a), &f.frobenius(&b)));
            }

            #[test]
            fn frobenius_is_a_ring_map_gf3_7(a in proptest::collection::vec(0u64..3, 7),
                                             b in proptest::collection::vec(0u64..3, 7)) {
                let f = ExtField::new(3, 7).unwrap();
                let (a, b) = (f.element(&a).unwrap(), f.element(&b).unwrap());
                prop_assert_eq!(f.frobenius(&f.add(&a, &b)), f.add(&f.frobenius(&a), &f.frobenius(&b)));
                prop_assert_eq!(f.frobenius(&f.mul(&a, &b)), f.mul(&f.frobenius(&a), &f.frobenius(&b)));
            }

            #[test]
            fn distributive_and_inverse(c in proptest::collection::vec(0u64..3, 15)) {
                let f = ExtField::new(3, 5).unwrap();
                let a = f.element(&c[0..5]).unwrap();
                let b = f.element(&c[5..10]).unwrap();
                let d = f.element(&c[10..15]).unwrap();
                prop_assert_eq!(f.mul(&a, &f.add(&b, &d)), f.add(&f.mul(&a, &b), &f.mul(&a, &d)));
                if !f.is_zero(&a) {
                    prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
                }
            }
        }
    }
}
