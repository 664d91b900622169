//! The binary Whiteman sequence of order 6 and the sums `S`, `T`, `M`.

use alloc::vec::Vec;
use core::fmt;

use crate::cyclotomy::{Label, TwoPrimeParams, WhitemanSystem};
use crate::error::{Error, Result};
use crate::field::{ExtElem, ExtField, Field, PrimeField, UnityRoot};
use crate::poly::{Poly, PolyRing};

/// One of the three class sums.
///
/// `S` sums over `N1 ∪ D0 ∪ D1 ∪ D2`, `T` shifts the classes by one and `M`
/// by two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Which {
    S,
    T,
    M,
}

impl Which {
    pub const ALL: [Which; 3] = [Which::S, Which::T, Which::M];

    /// Index of the first unit class in the support.
    pub fn offset(self) -> u8 {
        match self {
            Which::S => 0,
            Which::T => 1,
            Which::M => 2,
        }
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::S => "S",
            Which::T => "T",
            Which::M => "M",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicSequence {
    sys: WhitemanSystem,
    bits: Vec<u8>,
}

impl CyclotomicSequence {
    /// `s_i = 1` iff `i in C1 = N1 ∪ D0 ∪ D1 ∪ D2`.
    pub fn new(sys: WhitemanSystem) -> Self {
        let bits = sys
            .membership()
            .iter()
            .map(|l| matches!(l, Label::N1 | Label::D(0..=2)) as u8)
            .collect();
        CyclotomicSequence { sys, bits }
    }

    pub fn system(&self) -> &WhitemanSystem {
        &self.sys
    }

    pub fn params(&self) -> &TwoPrimeParams {
        self.sys.params()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    pub fn c1(&self) -> Vec<usize> {
        (0..self.bits.len())
            .filter(|&i| self.bits[i] == 1)
            .collect()
    }

    pub fn c0(&self) -> Vec<usize> {
        (0..self.bits.len())
            .filter(|&i| self.bits[i] == 0)
            .collect()
    }

    /// Sorted exponents of `S`, `T` or `M`.
    pub fn support(&self, which: Which) -> Vec<usize> {
        let o = which.offset();
        let mut v: Vec<usize> = self.sys.n1_set().to_vec();
        for k in 0..3 {
            v.extend_from_slice(self.sys.class(o + k));
        }
        v.sort_unstable();
        v
    }

    pub fn poly(&self, which: Which, ring: &PolyRing<'_, PrimeField>) -> Poly<u32> {
        ring.from_support(&self.support(which))
    }

    /// `S(beta^a)` (or `T`, `M`) by Horner's rule in the field of `root`.
    pub fn eval_at_class(&self, which: Which, a: u64, root: &UnityRoot) -> Result<ExtElem> {
        let n = self.sys.n() as u64;
        if a >= n {
            return Err(Error::OutOfRange { a, n });
        }
        if root.order() != n {
            return Err(Error::DegenerateRoot {
                expected: n,
                found: root.order(),
            });
        }
        let field = root.field();
        let pt = root.power(a);
        let mut coeffs = vec_bits(n as usize, &self.support(which));
        coeffs.reverse();
        let one = field.one();
        let mut acc = field.zero();
        for c in coeffs {
            acc = field.mul(&acc, pt);
            if c {
                acc = field.add(&acc, &one);
            }
        }
        Ok(acc)
    }

    /// The same value as [`CyclotomicSequence::eval_at_class`], summed from the
    /// power table instead.
    pub fn eval_by_powers(&self, which: Which, a: u64, root: &UnityRoot) -> ExtElem {
        let field = root.field();
        let n = self.sys.n() as u64;
        self.support(which).iter().fold(field.zero(), |acc, &i| {
            field.add(&acc, root.power(a * i as u64 % n))
        })
    }

    /// `(S(beta), T(beta), M(beta))`.
    pub fn stm_at_beta(&self, root: &UnityRoot) -> Result<[ExtElem; 3]> {
        Ok([
            self.eval_at_class(Which::S, 1, root)?,
            self.eval_at_class(Which::T, 1, root)?,
            self.eval_at_class(Which::M, 1, root)?,
        ])
    }

    /// The value at `beta^a` predicted from the class of `a` and the three
    /// values at `beta`.
    pub fn closed_form(
        &self,
        which: Which,
        a: u64,
        field: &ExtField,
        stm: &[ExtElem; 3],
    ) -> Result<ExtElem> {
        let p = field.characteristic();
        let omegas = omega_triple(self.params(), p);
        Ok(match self.sys.class_of(a)? {
            Label::R => field.embed(omegas.omega),
            Label::N1 => field.neg(&field.embed(omegas.omega1)),
            Label::N2 => field.embed(omegas.omega2),
            Label::D(j) => {
                let u = (which.offset() + j) % 6;
                let v = &stm[(u % 3) as usize];
                if u < 3 {
                    v.clone()
                } else {
                    field.neg(&field.add(v, &field.one()))
                }
            }
        })
    }
}

fn vec_bits(n: usize, support: &[usize]) -> Vec<bool> {
    let mut v = alloc::vec![false; n];
    for &i in support {
        v[i] = true;
    }
    v
}

/// `Omega_1 = (n1 + 1)/2`, `Omega_2 = (n2 - 1)/2` and
/// `Omega = (n1 + 1)(n2 - 1)/2`, all reduced mod `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OmegaTriple {
    pub omega1: u32,
    pub omega2: u32,
    pub omega: u32,
}

impl OmegaTriple {
    pub fn as_tuple(&self) -> (u32, u32, u32) {
        (self.omega1, self.omega2, self.omega)
    }
}

pub fn omega_triple(params: &TwoPrimeParams, p: u64) -> OmegaTriple {
    let (n1, n2) = (params.n1(), params.n2());
    let omega1 = (n1.div_ceil(2) % p) as u32;
    let omega2 = ((n2 - 1) / 2 % p) as u32;
    let omega = ((n1 + 1) % p * ((n2 - 1) / 2 % p) % p) as u32;
    OmegaTriple {
        omega1,
        omega2,
        omega,
    }
}
