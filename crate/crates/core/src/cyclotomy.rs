//! Whiteman's generalized cyclotomic classes of order 6 modulo `n1 * n2`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith;
use crate::error::{Error, Result};

/// An ordered pair of distinct odd primes with `gcd(n1 - 1, n2 - 1) = 6`.
///
/// The order matters: `N1` holds the multiples of `n1`, and the CRT witness
/// is `g` modulo `n1` and `1` modulo `n2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwoPrimeParams {
    n1: u64,
    n2: u64,
}

impl TwoPrimeParams {
    pub fn new(n1: u64, n2: u64) -> Result<Self> {
        let bad = |reason| Err(Error::InvalidPair { n1, n2, reason });
        if !arith::is_prime(n1) {
            return bad("n1 is not prime");
        }
        if !arith::is_prime(n2) {
            return bad("n2 is not prime");
        }
        if n1 == 2 || n2 == 2 {
            return bad("both primes must be odd");
        }
        if n1 == n2 {
            return bad("the primes must be distinct");
        }
        if arith::gcd(n1 - 1, n2 - 1) != 6 {
            return bad("gcd(n1 - 1, n2 - 1) != 6");
        }
        if n1.checked_mul(n2).is_none_or(|n| n > u32::MAX as u64) {
            return bad("n1 * n2 is too large");
        }
        Ok(TwoPrimeParams { n1, n2 })
    }

    pub fn n1(&self) -> u64 {
        self.n1
    }

    pub fn n2(&self) -> u64 {
        self.n2
    }

    pub fn n(&self) -> u64 {
        self.n1 * self.n2
    }

    /// `e = (n1 - 1)(n2 - 1) / 6`, the common size of every `D_i`.
    pub fn e(&self) -> u64 {
        (self.n1 - 1) * (self.n2 - 1) / 6
    }

    /// `n_1` for `i = 1`, `n_2` for `i = 2`.
    pub fn prime(&self, i: u8) -> u64 {
        if i == 1 {
            self.n1
        } else {
            self.n2
        }
    }

    /// `n_{i - (-1)^i}`: the other prime.
    pub fn other_prime(&self, i: u8) -> u64 {
        if i == 1 {
            self.n2
        } else {
            self.n1
        }
    }
}

/// Which part of `Z_n` a residue belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// `R = {0}`.
    R,
    /// Nonzero multiples of `n1`.
    N1,
    /// Nonzero multiples of `n2`.
    N2,
    /// The unit class `D_i`, `i in 0..6`.
    D(u8),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::R => f.write_str("R"),
            Label::N1 => f.write_str("N1"),
            Label::N2 => f.write_str("N2"),
            Label::D(i) => write!(f, "D{i}"),
        }
    }
}

/// Smallest `g >= 2` that is a primitive root modulo both `n1` and `n2`.
pub fn common_primitive_root(n1: u64, n2: u64) -> u64 {
    (2..)
        .find(|&g| arith::is_primitive_root(g, n1) && arith::is_primitive_root(g, n2))
        .expect("common primitive roots exist by CRT")
}

/// The `x in [0, n1 n2)` with `x = g (mod n1)` and `x = 1 (mod n2)`.
pub fn crt_witness(g: u64, n1: u64, n2: u64) -> u64 {
    arith::crt_pair(g, n1, 1, n2).expect("distinct primes are coprime")
}

/// The full cyclotomic data for one ordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhitemanSystem {
    params: TwoPrimeParams,
    g: u64,
    x: u64,
    classes: [Vec<usize>; 6],
    n1_set: Vec<usize>,
    n2_set: Vec<usize>,
    membership: Vec<Label>,
}

impl WhitemanSystem {
    /// Builds `D_i = {g^s x^i : 0 <= s < e}` with the smallest common
    /// primitive root and validates the partition of `Z_n`.
    pub fn new(params: TwoPrimeParams) -> Result<Self> {
        let g = common_primitive_root(params.n1(), params.n2());
        Self::with_root(params, g)
    }

    /// Same as [`WhitemanSystem::new`] for a caller-chosen common primitive root.
    pub fn with_root(params: TwoPrimeParams, g: u64) -> Result<Self> {
        let (n1, n2, n) = (params.n1(), params.n2(), params.n());
        if !arith::is_primitive_root(g, n1) || !arith::is_primitive_root(g, n2) {
            return Err(Error::InvalidArgument(format!(
                "{g} is not a common primitive root of {n1} and {n2}"
            )));
        }
        let x = crt_witness(g, n1, n2);
        let e = params.e();
        let mut slot: Vec<Option<Label>> = vec![None; n as usize];
        let mut assign = |r: u64, label: Label| -> Result<()> {
            match slot[r as usize] {
                None => {
                    slot[r as usize] = Some(label);
                    Ok(())
                }
                Some(prev) => Err(Error::Partition(format!(
                    "residue {r} lies in both {prev} and {label}"
                ))),
            }
        };
        assign(0, Label::R)?;
        let n1_set: Vec<usize> = (1..n2).map(|k| (k * n1) as usize).collect();
        let n2_set: Vec<usize> = (1..n1).map(|k| (k * n2) as usize).collect();
        for &r in &n1_set {
            assign(r as u64, Label::N1)?;
        }
        for &r in &n2_set {
            assign(r as u64, Label::N2)?;
        }
        let mut classes: [Vec<usize>; 6] = Default::default();
        let mut x_pow = 1u64;
        for (i, class) in classes.iter_mut().enumerate() {
            let mut v = x_pow;
            for _ in 0..e {
                assign(v, Label::D(i as u8))?;
                class.push(v as usize);
                v = arith::mul_mod(v, g, n);
            }
            class.sort_unstable();
            x_pow = arith::mul_mod(x_pow, x, n);
        }
        let membership = slot
            .into_iter()
            .enumerate()
            .map(|(r, l)| l.ok_or_else(|| Error::Partition(format!("residue {r} is unassigned"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(WhitemanSystem {
            params,
            g,
            x,
            classes,
            n1_set,
            n2_set,
            membership,
        })
    }

    pub fn params(&self) -> &TwoPrimeParams {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n() as usize
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    /// Sorted residues of `D_i`.
    pub fn class(&self, i: u8) -> &[usize] {
        &self.classes[i as usize % 6]
    }

    pub fn n1_set(&self) -> &[usize] {
        &self.n1_set
    }

    pub fn n2_set(&self) -> &[usize] {
        &self.n2_set
    }

    /// All units of `Z_n`, ascending.
    pub fn units(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&a| matches!(self.membership[a], Label::D(_)))
            .collect()
    }

    pub fn class_of(&self, a: u64) -> Result<Label> {
        self.membership
            .get(a as usize)
            .copied()
            .ok_or(Error::OutOfRange {
                a,
                n: self.params.n(),
            })
    }

    /// Index `j` with `a in D_j`, for units only.
    pub fn unit_class(&self, a: u64) -> Option<u8> {
        match self.membership.get((a % self.params.n()) as usize) {
            Some(Label::D(j)) => Some(*j),
            _ => None,
        }
    }

    pub fn membership(&self) -> &[Label] {
        &self.membership
    }

    /// Residues of the given part, ascending.
    pub fn part(&self, label: Label) -> Vec<usize> {
        match label {
            Label::R => vec![0],
            Label::N1 => self.n1_set.clone(),
            Label::N2 => self.n2_set.clone(),
            Label::D(i) => self.classes[i as usize % 6].clone(),
        }
    }
}
