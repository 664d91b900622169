//! Integer number theory on machine words, plus the factorization of
//! `q^m - 1` needed to find primitive elements of `GF(q^m)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest `q^m` (in bits) accepted when building extension fields.
pub const MAX_FIELD_BITS: u64 = 1024;

const SMALL_PRIME_LIMIT: u64 = 1 << 16;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (t0, t1) = (t1, t0 - qt * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// Brent's variant; `n` must be odd and composite.
fn pollard_brent(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |v: u64| (mul_mod(v, v, n) + c) % n;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        let mut r = 1u64;
        let mut q = 1u64;
        let mut ys = 2u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..core::cmp::min(128, r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn factor_into(n: u64, out: &mut BTreeMap<u64, u32>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    let d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = BTreeMap::new();
    for p in [2u64, 3, 5, 7, 11, 13] {
        while n.is_multiple_of(p) {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
    }
    factor_into(n, &mut out);
    out.into_iter().collect()
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Carmichael function from a factorization.
fn carmichael(n: u64) -> u64 {
    factorize(n).into_iter().fold(1, |acc, (p, k)| {
        let lambda = if p == 2 && k >= 3 {
            1u64 << (k - 2)
        } else {
            p.pow(k - 1) * (p - 1)
        };
        lcm(acc, lambda)
    })
}

/// Smallest `m >= 1` with `q^m = 1 (mod n)`.
pub fn multiplicative_order(q: u64, n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "modulus must be at least 2, got {n}"
        )));
    }
    if gcd(q % n, n) != 1 {
        return Err(Error::NotCoprime { q, n });
    }
    let mut order = carmichael(n);
    for r in prime_divisors(order) {
        while order.is_multiple_of(r) && pow_mod(q, order / r, n) == 1 {
            order /= r;
        }
    }
    Ok(order)
}

pub fn is_primitive_root(g: u64, p: u64) -> bool {
    !g.is_multiple_of(p) && multiplicative_order(g, p).is_ok_and(|o| o == p - 1)
}

/// The unique `x in [0, m1*m2)` with `x = a1 (mod m1)` and `x = a2 (mod m2)`.
pub fn crt_pair(a1: u64, m1: u64, a2: u64, m2: u64) -> Option<u64> {
    let inv = inv_mod(m1 % m2, m2)?;
    let m = m1 * m2;
    let a1 = a1 % m1;
    let diff = (a2 % m2 + m2 - a1 % m2) % m2;
    let t = mul_mod(diff, inv, m2);
    Some((a1 + mul_mod(t, m1, m)) % m)
}

fn mobius(mut n: u64) -> i8 {
    let mut sign = 1i8;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The value `Phi_d(q)` of the `d`-th cyclotomic polynomial.
pub fn cyclotomic_value(q: u64, d: u64) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for k in divisors(d) {
        let term = BigUint::from(q).pow(k as u32) - 1u32;
        match mobius(d / k) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    num / den
}

fn big_probable_prime(n: &BigUint) -> bool {
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let a = BigUint::from(a);
        if &a >= n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn small_primes() -> Vec<u64> {
    let limit = SMALL_PRIME_LIMIT as usize;
    let mut sieve = alloc::vec![true; limit + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= limit {
        if sieve[i] {
            let mut j = i * i;
            while j <= limit {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (0..=limit)
        .filter(|&k| sieve[k])
        .map(|k| k as u64)
        .collect()
}

/// Distinct prime divisors of `q^m - 1`, ascending.
///
/// The number is split along its cyclotomic factors `Phi_d(q)`, `d | m`,
/// and each factor is finished by trial division and Pollard rho. A cofactor
/// that exceeds 64 bits and is not a probable prime is reported as a
/// capacity error.
pub fn prime_divisors_of_power_minus_one(q: u64, m: u64) -> Result<Vec<BigUint>> {
    let bits = BigUint::from(q).pow(m as u32).bits();
    if bits > MAX_FIELD_BITS {
        return Err(Error::CapacityExceeded(format!(
            "{q}^{m} has {bits} bits, limit is {MAX_FIELD_BITS}"
        )));
    }
    let primes = small_primes();
    let mut found: BTreeMap<BigUint, ()> = BTreeMap::new();
    for d in divisors(m) {
        let mut piece = cyclotomic_value(q, d);
        for &p in &primes {
            if piece.is_one() {
                break;
            }
            let bp = BigUint::from(p);
            if (&bp * &bp) > piece {
                break;
            }
            if (&piece % &bp).is_zero() {
                found.insert(bp.clone(), ());
                while (&piece % &bp).is_zero() {
                    piece /= &bp;
                }
            }
        }
        if piece.is_one() {
            continue;
        }
        match piece.to_u64() {
            Some(small) => {
                for p in prime_divisors(small) {
                    found.insert(BigUint::from(p), ());
                }
            }
            None if big_probable_prime(&piece) => {
                found.insert(piece, ());
            }
            None => {
                return Err(Error::CapacityExceeded(format!(
                    "cannot factor the cyclotomic part Phi_{d}({q}) of {q}^{m} - 1"
                )))
            }
        }
    }
    Ok(found.into_keys().collect())
}

/// `ceil(sqrt(v))` for machine integers.
pub fn ceil_sqrt(v: u64) -> u64 {
    let r = v.isqrt();
    if r * r == v {
        r
    } else {
        r + 1
    }
}

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Checks `n mod d == 0` on big integers.
pub(crate) fn big_divides(d: u64, n: &BigUint) -> bool {
    n.is_multiple_of(&BigUint::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_order(q: u64, n: u64) -> u64 {
        let mut v = q % n;
        let mut m = 1;
        while v != 1 {
            v = v * q % n;
            m += 1;
        }
        m
    }

    #[test]
    fn order_examples() {
        assert_eq!(multiplicative_order(2, 7).unwrap(), 3);
        assert_eq!(multiplicative_order(2, 91).unwrap(), 12);
        assert_eq!(multiplicative_order(3, 4).unwrap(), 2);
        assert_eq!(multiplicative_order(2, 247).unwrap(), 36);
        assert_eq!(multiplicative_order(3, 589).unwrap(), 90);
    }

    #[test]
    fn order_matches_brute_force() {
        for n in 2..400u64 {
            for q in [2u64, 3, 5, 7] {
                if gcd(q, n) == 1 {
                    assert_eq!(
                        multiplicative_order(q, n).unwrap(),
                        brute_order(q, n),
                        "q={q} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn order_is_lcm_of_component_orders() {
        for (n1, n2, q) in [(7, 13, 2), (13, 19, 2), (31, 19, 3), (13, 31, 2)] {
            let whole = multiplicative_order(q, n1 * n2).unwrap();
            let parts = lcm(
                multiplicative_order(q, n1).unwrap(),
                multiplicative_order(q, n2).unwrap(),
            );
            assert_eq!(whole, parts);
        }
    }

    #[test]
    fn order_rejects_common_factor() {
        assert_eq!(
            multiplicative_order(3, 21),
            Err(Error::NotCoprime { q: 3, n: 21 })
        );
    }

    #[test]
    fn primality_and_factoring() {
        let brute = |n: u64| {
            n >= 2
                && (2..n)
                    .take_while(|d| d * d <= n)
                    .all(|d| !n.is_multiple_of(d))
        };
        for n in 0..3000 {
            assert_eq!(is_prime(n), brute(n), "{n}");
        }
        assert!(is_prime(18446744073709551557));
        let n = 600851475143u64;
        let f = factorize(n);
        assert_eq!(f, alloc::vec![(71, 1), (839, 1), (1471, 1), (6857, 1)]);
        let semiprime = 4294967291u64 * 4294967279u64;
        assert_eq!(
            factorize(semiprime),
            alloc::vec![(4294967279, 1), (4294967291, 1)]
        );
    }

    #[test]
    fn crt_examples() {
        assert_eq!(crt_pair(19, 7, 1, 13), Some(40));
        assert_eq!(crt_pair(19, 13, 1, 7), Some(71));
        assert_eq!(crt_pair(5, 13, 1, 7), Some(57));
    }

    #[test]
    fn power_minus_one_divisors() {
        let ps: Vec<u64> = prime_divisors_of_power_minus_one(2, 12)
            .unwrap()
            .iter()
            .map(|p| p.to_u64().unwrap())
            .collect();
        assert_eq!(ps, alloc::vec![3, 5, 7, 13]);
        // every reported prime divides 3^90 - 1, and their product covers its radical
        let n = BigUint::from(3u32).pow(90) - 1u32;
        let ps = prime_divisors_of_power_minus_one(3, 90).unwrap();
        let mut rest = n.clone();
        for p in &ps {
            assert!((&n % p).is_zero());
            while (&rest % p).is_zero() {
                rest /= p;
            }
        }
        assert!(rest.is_one());
    }

    #[test]
    fn ceil_sqrt_values() {
        assert_eq!(ceil_sqrt(19), 5);
        assert_eq!(ceil_sqrt(13), 4);
        assert_eq!(ceil_sqrt(16), 4);
        assert_eq!(ceil_sqrt(1), 1);
    }
}
