//! Dense univariate polynomials over any [`Field`].
//!
//! A [`Poly`] is a plain coefficient vector in ascending degree order and
//! is always kept canonical: no trailing zero coefficient, and the zero
//! polynomial has no coefficients at all. Arithmetic goes through a
//! [`PolyRing`], which borrows the coefficient field.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn lead(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }
}

/// Polynomial arithmetic over the field `F`.
#[derive(Debug, Clone, Copy)]
pub struct PolyRing<'f, F> {
    field: &'f F,
}

impl<'f, F: Field> PolyRing<'f, F> {
    pub fn new(field: &'f F) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &'f F {
        self.field
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }

    /// `c * x^k`.
    pub fn monomial(&self, c: F::Elem, k: usize) -> Poly<F::Elem> {
        if self.field.is_zero(&c) {
            return Poly::zero();
        }
        let mut coeffs = vec![self.field.zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(&self, n: usize) -> Poly<F::Elem> {
        let mut coeffs = vec![self.field.zero(); n + 1];
        coeffs[0] = self.field.neg(&self.field.one());
        coeffs[n] = self.field.add(&coeffs[n], &self.field.one());
        self.from_coeffs(coeffs)
    }

    /// `sum_{i in support} x^i`.
    pub fn from_support(&self, support: &[usize]) -> Poly<F::Elem> {
        let Some(&top) = support.iter().max() else {
            return Poly::zero();
        };
        let one = self.field.one();
        let mut coeffs = vec![self.field.zero(); top + 1];
        for &i in support {
            coeffs[i] = self.field.add(&coeffs[i], &one);
        }
        self.from_coeffs(coeffs)
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (long, short) = if a.coeffs.len() >= b.coeffs.len() {
            (a, b)
        } else {
            (b, a)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o = self.field.add(o, s);
        }
        self.from_coeffs(out)
    }

    pub fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(a.coeffs.iter().map(|x| self.field.mul(x, c)).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, a: &Poly<F::Elem>, k: usize) -> Poly<F::Elem> {
        if a.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(a.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![self.field.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.field.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                let t = self.field.mul(x, y);
                out[i + j] = self.field.add(&out[i + j], &t);
            }
        }
        self.from_coeffs(out)
    }

    pub fn product<'a, I>(&self, factors: I) -> Poly<F::Elem>
    where
        I: IntoIterator<Item = &'a Poly<F::Elem>>,
        F::Elem: 'a,
    {
        factors
            .into_iter()
            .fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    /// Quotient and remainder with `deg(r) < deg(b)`.
    pub fn divrem(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> Result<(Poly<F::Elem>, Poly<F::Elem>)> {
        let Some(db) = b.degree() else {
            return Err(Error::DivisionByZero);
        };
        let Some(da) = a.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if da < db {
            return Ok((Poly::zero(), a.clone()));
        }
        let lead_inv = self.field.inv(b.lead().expect("nonzero divisor"))?;
        let mut rem = a.coeffs.clone();
        let mut quot = vec![self.field.zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let c = &rem[k + db];
            if self.field.is_zero(c) {
                continue;
            }
            let t = self.field.mul(c, &lead_inv);
            for (j, bj) in b.coeffs.iter().enumerate() {
                let s = self.field.mul(&t, bj);
                rem[k + j] = self.field.sub(&rem[k + j], &s);
            }
            quot[k] = t;
        }
        rem.truncate(db);
        Ok((self.from_coeffs(quot), self.from_coeffs(rem)))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        Ok(self.divrem(a, b)?.1)
    }

    /// `a / b`, failing unless the division is exact.
    pub fn div_exact(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        let (q, r) = self.divrem(a, b)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q)
    }

    pub fn divides(&self, d: &Poly<F::Elem>, a: &Poly<F::Elem>) -> Result<bool> {
        Ok(self.rem(a, d)?.is_zero())
    }

    pub fn monic(&self, a: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        match a.lead() {
            None => Ok(Poly::zero()),
            Some(l) => {
                let inv = self.field.inv(l)?;
                Ok(self.scale(a, &inv))
            }
        }
    }

    pub fn is_monic(&self, a: &Poly<F::Elem>) -> bool {
        a.lead().is_some_and(|l| *l == self.field.one())
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::InvalidArgument("gcd(0, 0) is undefined".into()));
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        while !r1.is_zero() {
            let r = self.rem(&r0, &r1)?;
            r0 = r1;
            r1 = r;
        }
        self.monic(&r0)
    }

    /// Horner evaluation at a point of the coefficient field.
    pub fn eval(&self, a: &Poly<F::Elem>, pt: &F::Elem) -> F::Elem {
        a.coeffs.iter().rev().fold(self.field.zero(), |acc, c| {
            let t = self.field.mul(&acc, pt);
            self.field.add(&t, c)
        })
    }

    /// `a * b mod m`.
    pub fn mul_mod(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
        m: &Poly<F::Elem>,
    ) -> Result<Poly<F::Elem>> {
        self.rem(&self.mul(a, b), m)
    }

    /// `a^e mod m` by square-and-multiply.
    pub fn pow_mod(
        &self,
        a: &Poly<F::Elem>,
        mut e: u64,
        m: &Poly<F::Elem>,
    ) -> Result<Poly<F::Elem>> {
        let mut base = self.rem(a, m)?;
        let mut acc = self.rem(&self.one(), m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_mod(&acc, &base, m)?;
            }
            base = self.mul_mod(&base, &base, m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// `a(x^r) mod (x^n - 1)`, the coordinate permutation `i -> r*i mod n`.
    pub fn substitute_power(&self, a: &Poly<F::Elem>, r: usize, n: usize) -> Poly<F::Elem> {
        let mut out = vec![self.field.zero(); n];
        for (i, c) in a.coeffs.iter().enumerate() {
            let k = (i * r) % n;
            out[k] = self.field.add(&out[k], c);
        }
        self.from_coeffs(out)
    }

    /// `a mod (x^n - 1)` by folding exponents.
    pub fn reduce_cyclic(&self, a: &Poly<F::Elem>, n: usize) -> Poly<F::Elem> {
        self.substitute_power(a, 1, n)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self, a: &Poly<F::Elem>) -> usize {
        a.coeffs.iter().filter(|c| !self.field.is_zero(c)).count()
    }

    pub fn map_coeffs<G: Field>(
        &self,
        target: &PolyRing<'_, G>,
        a: &Poly<F::Elem>,
        f: impl Fn(&F::Elem) -> G::Elem,
    ) -> Poly<G::Elem> {
        target.from_coeffs(a.coeffs.iter().map(f).collect())
    }
}

/// Sparse `0/1` polynomial `sum_{i in support} x^i` with exponents in `[0, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSupportPoly {
    n: usize,
    support: Vec<usize>,
}

impl IndexSupportPoly {
    pub fn new(n: usize, mut support: Vec<usize>) -> Result<Self> {
        support.sort_unstable();
        if support.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(
                "repeated exponent in support".into(),
            ));
        }
        if let Some(&top) = support.last() {
            if top >= n {
                return Err(Error::OutOfRange {
                    a: top as u64,
                    n: n as u64,
                });
            }
        }
        Ok(IndexSupportPoly { n, support })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn to_poly<F: Field>(&self, ring: &PolyRing<'_, F>) -> Poly<F::Elem> {
        ring.from_support(&self.support)
    }
}

/// Comma form, ascending coefficients: `1 + x + x^3` is `"1,1,0,1"`.
/// The zero polynomial is `"0"`.
pub fn to_comma(p: &Poly<u32>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::with_capacity(p.coeffs().len() * 2);
    for (i, c) in p.coeffs().iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{c}");
    }
    s
}

/// Parses the comma form over `GF(q)`; coefficients must already be reduced.
pub fn parse_comma(field: &PrimeField, s: &str) -> Result<Poly<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty coefficient list".into()));
    }
    let mut coeffs = Vec::new();
    for tok in s.split(',') {
        let tok = tok.trim();
        let v: u64 = tok
            .parse()
            .map_err(|_| Error::Parse(alloc::format!("bad coefficient {tok:?}")))?;
        if v >= field.q() {
            return Err(Error::Unreduced {
                value: v,
                q: field.q(),
            });
        }
        coeffs.push(v as u32);
    }
    Ok(PolyRing::new(field).from_coeffs(coeffs))
}

/// Human form, descending degree: `"x^3+x+1"`.
pub fn to_pretty(p: &Poly<u32>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, &c) in p.coeffs().iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('+');
        }
        match (c, i) {
            (c, 0) => {
                let _ = write!(s, "{c}");
            }
            (1, 1) => s.push('x'),
            (1, i) => {
                let _ = write!(s, "x^{i}");
            }
            (c, 1) => {
                let _ = write!(s, "{c}x");
            }
            (c, i) => {
                let _ = write!(s, "{c}x^{i}");
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    #[test]
    fn example1_product() {
        let f = gf(2);
        let r = PolyRing::new(&f);
        let a = r.x_pow_minus_one(7);
        let b = r.from_support(&(0..13).collect::<Vec<_>>());
        let p = r.mul(&a, &b);
        let mut expected = [0u32; 20];
        for i in (0..=6).chain(13..=19) {
            expected[i] = 1;
        }
        assert_eq!(p.coeffs(), &expected[..]);
        assert_eq!(
            to_pretty(&p),
            "x^19+x^18+x^17+x^16+x^15+x^14+x^13+x^6+x^5+x^4+x^3+x^2+x+1"
        );
    }

    #[test]
    fn geometric_series_division() {
        for q in [2, 3, 5] {
            let f = gf(q);
            let r = PolyRing::new(&f);
            let xm1 = r.from_coeffs(vec![q as u32 - 1, 1]);
            for n in 1..30 {
                let (quot, rem) = r.divrem(&r.x_pow_minus_one(n), &xm1).unwrap();
                assert!(rem.is_zero());
                assert_eq!(quot, r.from_support(&(0..n).collect::<Vec<_>>()));
            }
        }
    }

    #[test]
    fn gcd_examples() {
        let f = gf(3);
        let r = PolyRing::new(&f);
        let a = r.from_coeffs(vec![2, 1, 1]);
        assert_eq!(r.gcd(&a, &Poly::zero()).unwrap(), r.monic(&a).unwrap());
        let x2m1 = r.x_pow_minus_one(2);
        let xm1 = r.x_pow_minus_one(1);
        assert_eq!(r.gcd(&x2m1, &xm1).unwrap(), xm1);
        assert!(r.gcd(&Poly::zero(), &Poly::zero()).is_err());
    }

    #[test]
    fn division_by_zero_is_reported() {
        let f = gf(2);
        let r = PolyRing::new(&f);
        assert_eq!(
            r.divrem(&r.one(), &Poly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn eval_geometric_sum_at_one() {
        let f = gf(5);
        let r = PolyRing::new(&f);
        for n in 1..40usize {
            let s = r.from_support(&(0..n).collect::<Vec<_>>());
            assert_eq!(r.eval(&s, &1), (n % 5) as u32);
        }
    }

    #[test]
    fn comma_format() {
        let f = gf(2);
        let p = parse_comma(&f, "1,1,0,1").unwrap();
        assert_eq!(to_pretty(&p), "x^3+x+1");
        assert_eq!(to_comma(&p), "1,1,0,1");
        assert_eq!(to_comma(&Poly::zero()), "0");
        assert!(parse_comma(&f, "1,2").is_err());
        assert!(parse_comma(&f, "1,,0").is_err());
        let g = gf(3);
        assert_eq!(
            to_pretty(&parse_comma(&g, "2,0,1,2").unwrap()),
            "2x^3+x^2+2"
        );
    }

    #[test]
    fn support_poly_validation() {
        assert!(IndexSupportPoly::new(5, vec![0, 5]).is_err());
        assert!(IndexSupportPoly::new(5, vec![1, 1]).is_err());
        let s = IndexSupportPoly::new(5, vec![4, 0, 2]).unwrap();
        assert_eq!(s.support(), &[0, 2, 4]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly_strategy(q: u32, max_len: usize) -> impl Strategy<Value = Vec<u32>> {
            proptest::collection::vec(0..q, 0..max_len)
        }

        proptest! {
            #[test]
            fn divrem_reconstructs(q in prop::sample::select(vec![2u64, 3, 5, 7]),
                                   a in poly_strategy(7, 30), b in poly_strategy(7, 12)) {
                let f = gf(q);
                let r = PolyRing::new(&f);
                let a = r.from_coeffs(a.into_iter().map(|c| c % q as u32).collect());
                let b = r.from_coeffs(b.into_iter().map(|c| c % q as u32).collect());
                prop_assume!(!b.is_zero());
                let (quot, rem) = r.divrem(&a, &b).unwrap();
                prop_assert_eq!(r.add(&r.mul(&quot, &b), &rem), a);
                prop_assert!(rem.degree().is_none_or(|d| d < b.degree().unwrap()));
            }

            #[test]
            fn gcd_divides_both(q in prop::sample::select(vec![2u64, 3, 5]),
                                a in poly_strategy(5, 25), b in poly_strategy(5, 25)) {
                let f = gf(q);
                let r = PolyRing::new(&f);
                let a = r.from_coeffs(a.into_iter().map(|c| c % q as u32).collect());
                let b = r.from_coeffs(b.into_iter().map(|c| c % q as u32).collect());
                prop_assume!(!(a.is_zero() && b.is_zero()));
                let g = r.gcd(&a, &b).unwrap();
                prop_assert!(r.is_monic(&g));
                prop_assert!(r.divides(&g, &a).unwrap());
                prop_assert!(r.divides(&g, &b).unwrap());
            }

            #[test]
            fn comma_round_trip(q in prop::sample::select(vec![2u64, 3, 7]), c in poly_strategy(7, 40)) {
                let f = gf(q);
                let r = PolyRing::new(&f);
                let p = r.from_coeffs(c.into_iter().map(|v| v % q as u32).collect());
                let text = to_comma(&p);
                prop_assert_eq!(parse_comma(&f, &text).unwrap(), p);
            }
        }
    }
}
