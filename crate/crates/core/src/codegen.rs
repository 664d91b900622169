//! Generator polynomials of the cyclic code defined by the sequence.
//!
//! Two independent paths: the gcd oracle `(x^n - 1) / gcd(x^n - 1, S(x))`,
//! and the closed forms selected from the class of `q`, the `Omega` residues
//! and the values of `S`, `T`, `M` at `beta`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::OnceCell;
use core::fmt;

use crate::arith;
use crate::cyclotomy::{TwoPrimeParams, WhitemanSystem};
use crate::error::{Error, Result};
use crate::field::{ExtElem, ExtField, Field, PrimeField, UnityRoot};
use crate::poly::{Poly, PolyRing};
use crate::sequence::{omega_triple, CyclotomicSequence, OmegaTriple, Which};

/// Index triples allowed in the three-factor constructors.
pub const ADMISSIBLE_TRIPLES: [(u8, u8, u8); 6] = [
    (0, 1, 2),
    (0, 1, 5),
    (0, 4, 5),
    (1, 2, 3),
    (2, 3, 4),
    (3, 4, 5),
];

/// Distance-theorem constructors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constructor {
    /// `(x^n - 1) / (x^{n_i} - 1)`.
    T3 { i: u8 },
    /// `d(x)`.
    T4,
    /// `(x^n - 1) / ((x^{n_i} - 1) d_j)`.
    T5 { i: u8, j: u8 },
    /// `d(x) / d_j`.
    T6 { j: u8 },
    /// `(x^n - 1) / ((x^{n_i} - 1) d_j d_h d_t)`.
    T7 { i: u8, j: u8, h: u8, t: u8 },
    /// `d(x) / (d_i d_j d_h)`.
    T8 { i: u8, j: u8, h: u8 },
}

impl Constructor {
    pub fn theorem(&self) -> u8 {
        match self {
            Constructor::T3 { .. } => 3,
            Constructor::T4 => 4,
            Constructor::T5 { .. } => 5,
            Constructor::T6 { .. } => 6,
            Constructor::T7 { .. } => 7,
            Constructor::T8 { .. } => 8,
        }
    }

    /// Builds a constructor from a theorem number and its index list, in
    /// the order `i, j, h, t` used on the command line.
    pub fn from_indices(theorem: u8, idx: &[u8]) -> Result<Self> {
        let want = match theorem {
            3 => 1,
            4 => 0,
            5 => 2,
            6 => 1,
            7 => 4,
            8 => 3,
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "theorem must be in 3..=8, got {theorem}"
                )))
            }
        };
        if idx.len() != want {
            return Err(Error::InvalidArgument(format!(
                "theorem {theorem} takes {want} indices, got {}",
                idx.len()
            )));
        }
        Ok(match theorem {
            3 => Constructor::T3 { i: idx[0] },
            4 => Constructor::T4,
            5 => Constructor::T5 {
                i: idx[0],
                j: idx[1],
            },
            6 => Constructor::T6 { j: idx[0] },
            7 => Constructor::T7 {
                i: idx[0],
                j: idx[1],
                h: idx[2],
                t: idx[3],
            },
            _ => Constructor::T8 {
                i: idx[0],
                j: idx[1],
                h: idx[2],
            },
        })
    }

    /// The `D_a` indices whose factors are removed from the base generator.
    pub fn d_indices(&self) -> Vec<u8> {
        match *self {
            Constructor::T3 { .. } | Constructor::T4 => vec![],
            Constructor::T5 { j, .. } | Constructor::T6 { j } => vec![j],
            Constructor::T7 { j, h, t, .. } => vec![j, h, t],
            Constructor::T8 { i, j, h } => vec![i, j, h],
        }
    }
}

impl fmt::Display for Constructor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Constructor::T3 { i } => write!(f, "theorem3-constructor(i={i})"),
            Constructor::T4 => write!(f, "theorem4-constructor"),
            Constructor::T5 { i, j } => write!(f, "theorem5-constructor(i={i},j={j})"),
            Constructor::T6 { j } => write!(f, "theorem6-constructor(j={j})"),
            Constructor::T7 { i, j, h, t } => {
                write!(f, "theorem7-constructor(i={i},j={j},h={h},t={t})")
            }
            Constructor::T8 { i, j, h } => write!(f, "theorem8-constructor(i={i},j={j},h={h})"),
        }
    }
}

/// Which of the six sub-tables of the `D_0 ∪ D_2 ∪ D_4` theorem applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Part {
    I,
    IIi,
    IIii,
    IIiii,
    III,
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Part::I => "I",
            Part::IIi => "II(i)",
            Part::IIii => "II(ii)",
            Part::IIiii => "II(iii)",
            Part::III => "III",
        })
    }
}

/// The theorem branch a classification selects. `omega_case` is the row
/// `1..=5` of the five-way split on `(Omega_1, Omega_2, Omega)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Theorem1 { omega_case: u8 },
    Theorem2 { part: Part, omega_case: u8 },
    Theorem2NoDa { omega_case: u8 },
}

impl Branch {
    pub fn omega_case(&self) -> u8 {
        match *self {
            Branch::Theorem1 { omega_case }
            | Branch::Theorem2 { omega_case, .. }
            | Branch::Theorem2NoDa { omega_case } => omega_case,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::Theorem1 { omega_case } => write!(f, "theorem1-case-{omega_case}"),
            Branch::Theorem2 { part, omega_case } => {
                write!(f, "theorem2-case-{part}-{omega_case}")
            }
            Branch::Theorem2NoDa { omega_case } => {
                write!(f, "theorem2-no-da-case-{omega_case}")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Oracle,
    Branch(Branch),
    Constructor(Constructor),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Oracle => f.write_str("oracle"),
            Provenance::Branch(b) => b.fmt(f),
            Provenance::Constructor(c) => c.fmt(f),
        }
    }
}

/// A distance value asserted by a theorem, without any search behind it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DistanceClaim {
    pub exact: bool,
    pub value: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCode {
    pub n: usize,
    pub q: u64,
    /// Monic divisor of `x^n - 1` over `GF(q)`.
    pub gen: Poly<u32>,
    pub k: usize,
    pub provenance: Provenance,
    pub claim: Option<DistanceClaim>,
}

impl CyclicCode {
    /// Checks that `gen` is a monic divisor of `x^n - 1`.
    pub fn new(q: u64, n: usize, gen: Poly<u32>, provenance: Provenance) -> Result<Self> {
        let f = PrimeField::new(q)?;
        let ring = PolyRing::new(&f);
        if !ring.is_monic(&gen) || !ring.divides(&gen, &ring.x_pow_minus_one(n))? {
            return Err(Error::InvalidArgument(
                "generator is not a monic divisor of x^n - 1".into(),
            ));
        }
        let k = n - gen.degree().unwrap_or(0);
        Ok(CyclicCode {
            n,
            q,
            gen,
            k,
            provenance,
            claim: None,
        })
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.q).expect("validated at construction")
    }

    /// `h(x) = (x^n - 1) / g(x)`.
    pub fn parity_check_poly(&self) -> Poly<u32> {
        let f = self.field();
        let ring = PolyRing::new(&f);
        ring.div_exact(&ring.x_pow_minus_one(self.n), &self.gen)
            .expect("gen divides x^n - 1")
    }

    /// Whether `c` (reduced mod `x^n - 1`) is a codeword.
    pub fn contains(&self, c: &Poly<u32>) -> bool {
        let f = self.field();
        let ring = PolyRing::new(&f);
        let c = ring.reduce_cyclic(c, self.n);
        ring.divides(&self.gen, &c).expect("gen is nonzero")
    }
}

/// Whether a value at `beta` is `0`, `-1`, or neither.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Membership {
    Zero,
    MinusOne,
    Neither,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Membership::Zero => "zero",
            Membership::MinusOne => "minus-one",
            Membership::Neither => "neither",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub q_class: u8,
    pub omegas: OmegaTriple,
    /// `S(beta), T(beta), M(beta)`.
    pub values: [ExtElem; 3],
    pub memberships: [Membership; 3],
    pub branch: Branch,
    /// `(m, s, t)`; an entry is set when its value lies in `{0, -1}`.
    pub mst: [Option<u8>; 3],
}

impl ClassificationReport {
    /// `D_a` indices removed by the selected branch.
    pub fn removed(&self) -> Vec<u8> {
        match self.branch {
            Branch::Theorem2 { .. } => self.mst.iter().flatten().copied().collect(),
            _ => vec![],
        }
    }
}

/// A factor `d_a(x) = prod_{i in D_a} (x - beta^i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DFactor {
    pub a: u8,
    pub ext: Poly<ExtElem>,
    /// `Some` when every coefficient lies in `GF(q)`.
    pub base: Option<Poly<u32>>,
}

/// `prod_{i in D_a} (x - beta^i)` computed in the field of `root`, with a
/// descent check.
pub fn build_d_a(sys: &WhitemanSystem, a: u8, root: &UnityRoot) -> Result<DFactor> {
    if root.order() != sys.n() as u64 {
        return Err(Error::DegenerateRoot {
            expected: sys.n() as u64,
            found: root.order(),
        });
    }
    let field = root.field();
    let roots: Vec<&ExtElem> = sys.class(a).iter().map(|&i| root.power(i as u64)).collect();
    let ext = product_of_linear(field, &roots);
    Ok(DFactor {
        a,
        base: descend_poly(field, &ext),
        ext,
    })
}

fn product_of_linear(field: &ExtField, roots: &[&ExtElem]) -> Poly<ExtElem> {
    let mut c = vec![field.one()];
    for r in roots {
        let nr = field.neg(r);
        c.push(field.zero());
        for k in (0..c.len()).rev() {
            let low = if k > 0 {
                c[k - 1].clone()
            } else {
                field.zero()
            };
            c[k] = field.add(&low, &field.mul(&nr, &c[k]));
        }
    }
    PolyRing::new(field).from_coeffs(c)
}

/// Maps a polynomial over `GF(q^m)` to `GF(q)` when all coefficients descend.
pub fn descend_poly(field: &ExtField, p: &Poly<ExtElem>) -> Option<Poly<u32>> {
    let c: Option<Vec<u32>> = p.coeffs().iter().map(|e| field.descend(e)).collect();
    Some(PolyRing::new(field.base()).from_coeffs(c?))
}

/// `d(x) = (x^n - 1)(x - 1) / ((x^{n1} - 1)(x^{n2} - 1))`.
pub fn d_poly(ring: &PolyRing<'_, PrimeField>, params: &TwoPrimeParams) -> Poly<u32> {
    let (n1, n2, n) = (
        params.n1() as usize,
        params.n2() as usize,
        params.n() as usize,
    );
    let num = ring.mul(&ring.x_pow_minus_one(n), &ring.x_pow_minus_one(1));
    let den = ring.mul(&ring.x_pow_minus_one(n1), &ring.x_pow_minus_one(n2));
    ring.div_exact(&num, &den).expect("d(x) is a polynomial")
}

/// Row `1..=5` of the five-way split.
pub fn omega_case(o: &OmegaTriple) -> u8 {
    match (o.omega1 == 0, o.omega2 == 0, o.omega == 0) {
        (false, false, false) => 1,
        (false, false, true) => 2,
        (true, false, _) => 3,
        (false, true, _) => 4,
        (true, true, _) => 5,
    }
}

/// Everything needed to build and compare generators for one `(n1, n2, q)`.
#[derive(Debug)]
pub struct Construction {
    seq: CyclotomicSequence,
    base: PrimeField,
    root: UnityRoot,
    m: u64,
    d: [OnceCell<DFactor>; 6],
}

impl Construction {
    pub fn new(n1: u64, n2: u64, q: u64) -> Result<Self> {
        let params = TwoPrimeParams::new(n1, n2)?;
        Self::from_system(WhitemanSystem::new(params)?, q)
    }

    pub fn from_system(sys: WhitemanSystem, q: u64) -> Result<Self> {
        let base = PrimeField::new(q)?;
        let n = sys.n() as u64;
        let m = arith::multiplicative_order(q, n)?;
        let ext = ExtField::new(q, m as usize)?;
        let root = ext.nth_root_of_unity(n)?;
        Ok(Construction {
            seq: CyclotomicSequence::new(sys),
            base,
            root,
            m,
            d: Default::default(),
        })
    }

    pub fn sequence(&self) -> &CyclotomicSequence {
        &self.seq
    }

    pub fn system(&self) -> &WhitemanSystem {
        self.seq.system()
    }

    pub fn params(&self) -> &TwoPrimeParams {
        self.seq.params()
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    pub fn q(&self) -> u64 {
        self.base.q()
    }

    pub fn n(&self) -> usize {
        self.system().n()
    }

    pub fn root(&self) -> &UnityRoot {
        &self.root
    }

    /// Extension degree: the order of `q` modulo `n`.
    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn q_class(&self) -> u8 {
        self.system()
            .unit_class(self.q())
            .expect("q is a unit modulo n")
    }

    pub fn ring(&self) -> PolyRing<'_, PrimeField> {
        PolyRing::new(&self.base)
    }

    pub fn d_factor(&self, a: u8) -> Result<&DFactor> {
        let cell = &self.d[a as usize % 6];
        if let Some(f) = cell.get() {
            return Ok(f);
        }
        let f = build_d_a(self.system(), a % 6, &self.root)?;
        Ok(cell.get_or_init(|| f))
    }

    /// `prod d_a` over `GF(q)`, or `UnverifiableBranch` when the product
    /// does not descend.
    pub fn d_product(&self, idx: &[u8]) -> Result<Poly<u32>> {
        if let Some(polys) = idx
            .iter()
            .map(|&a| self.d_factor(a).map(|f| f.base.clone()))
            .collect::<Result<Option<Vec<_>>>>()?
        {
            return Ok(self.ring().product(polys.iter()));
        }
        let ext = self.root.field();
        let ering = PolyRing::new(ext);
        let mut acc = ering.one();
        for &a in idx {
            acc = ering.mul(&acc, &self.d_factor(a)?.ext);
        }
        descend_poly(ext, &acc).ok_or_else(|| {
            Error::UnverifiableBranch(format!(
                "product of d_a over {idx:?} has coefficients outside GF({})",
                self.q()
            ))
        })
    }

    pub fn omegas(&self) -> OmegaTriple {
        omega_triple(self.params(), self.q())
    }

    /// `gcd(x^n - 1, S(x))` over `GF(q)`.
    pub fn oracle_gcd(&self) -> Poly<u32> {
        let ring = self.ring();
        let s = self.seq.poly(Which::S, &ring);
        ring.gcd(&ring.x_pow_minus_one(self.n()), &s)
            .expect("x^n - 1 is nonzero")
    }

    /// `(x^n - 1) / gcd(x^n - 1, S(x))`.
    pub fn generator_via_gcd(&self) -> CyclicCode {
        let ring = self.ring();
        let g = self.oracle_gcd();
        let gen = ring
            .div_exact(&ring.x_pow_minus_one(self.n()), &g)
            .expect("gcd divides x^n - 1");
        CyclicCode {
            n: self.n(),
            q: self.q(),
            k: g.degree().unwrap_or(0),
            gen,
            provenance: Provenance::Oracle,
            claim: None,
        }
    }

    pub fn classify(&self) -> Result<ClassificationReport> {
        let q_class = self.q_class();
        let omegas = self.omegas();
        let values = self.seq.stm_at_beta(&self.root)?;
        let field = self.root.field();
        let minus_one = field.minus_one();
        let memberships = values.clone().map(|v| {
            if field.is_zero(&v) {
                Membership::Zero
            } else if v == minus_one {
                Membership::MinusOne
            } else {
                Membership::Neither
            }
        });
        let mut mst = [None; 3];
        for (w, slot) in mst.iter_mut().enumerate() {
            *slot = match memberships[w] {
                Membership::Zero => Some(w as u8),
                Membership::MinusOne => Some(w as u8 + 3),
                Membership::Neither => None,
            };
        }
        let omega_case = omega_case(&omegas);
        let branch = if q_class % 2 == 1 {
            Branch::Theorem1 { omega_case }
        } else {
            match (mst[0].is_some(), mst[1].is_some(), mst[2].is_some()) {
                (false, false, false) => Branch::Theorem2NoDa { omega_case },
                (true, true, true) => Branch::Theorem2 {
                    part: Part::III,
                    omega_case,
                },
                (true, true, false) => Branch::Theorem2 {
                    part: Part::IIi,
                    omega_case,
                },
                (true, false, true) => Branch::Theorem2 {
                    part: Part::IIii,
                    omega_case,
                },
                (false, true, true) => Branch::Theorem2 {
                    part: Part::IIiii,
                    omega_case,
                },
                _ => Branch::Theorem2 {
                    part: Part::I,
                    omega_case,
                },
            }
        };
        Ok(ClassificationReport {
            q_class,
            omegas,
            values,
            memberships,
            branch,
            mst,
        })
    }

    /// The Omega-determined generator with no `d_a` removed.
    pub fn omega_base_generator(&self, omega_case: u8) -> Poly<u32> {
        let ring = self.ring();
        let p = self.params();
        let xn = ring.x_pow_minus_one(self.n());
        let den = match omega_case {
            1 => return xn,
            2 => ring.x_pow_minus_one(1),
            3 => ring.x_pow_minus_one(p.n2() as usize),
            4 => ring.x_pow_minus_one(p.n1() as usize),
            _ => return d_poly(&ring, p),
        };
        ring.div_exact(&xn, &den)
            .expect("explicit divisor of x^n - 1")
    }

    pub fn generator_via_theorem1(&self, report: &ClassificationReport) -> Result<CyclicCode> {
        if report.q_class.is_multiple_of(2) {
            return Err(Error::WrongClass {
                found: report.q_class,
                required: "D1, D3 or D5",
            });
        }
        let case = omega_case(&report.omegas);
        let gen = self.omega_base_generator(case);
        self.code(
            gen,
            Provenance::Branch(Branch::Theorem1 { omega_case: case }),
        )
    }

    pub fn generator_via_theorem2(&self, report: &ClassificationReport) -> Result<CyclicCode> {
        if report.q_class % 2 == 1 {
            return Err(Error::WrongClass {
                found: report.q_class,
                required: "D0, D2 or D4",
            });
        }
        let case = omega_case(&report.omegas);
        let base = self.omega_base_generator(case);
        let removed = report.removed();
        let gen = if removed.is_empty() {
            base
        } else {
            let ring = self.ring();
            ring.div_exact(&base, &self.d_product(&removed)?)?
        };
        self.code(gen, Provenance::Branch(report.branch))
    }

    pub fn generator_via_closed_form(&self, report: &ClassificationReport) -> Result<CyclicCode> {
        if report.q_class % 2 == 1 {
            self.generator_via_theorem1(report)
        } else {
            self.generator_via_theorem2(report)
        }
    }

    fn code(&self, gen: Poly<u32>, provenance: Provenance) -> Result<CyclicCode> {
        let k = self.n() - gen.degree().unwrap_or(0);
        Ok(CyclicCode {
            n: self.n(),
            q: self.q(),
            gen,
            k,
            provenance,
            claim: None,
        })
    }

    /// The root classes of `gcd(x^n - 1, S(x))`, found by trial division.
    pub fn root_pattern(&self, g: &Poly<u32>) -> Result<RootPattern> {
        let ring = self.ring();
        let p = self.params();
        let one = ring.x_pow_minus_one(1);
        let r = ring.divides(&one, g)?;
        // x^{n2} - 1 has the roots beta^a for a in R ∪ N1.
        let n1 = ring.divides(
            &ring.div_exact(&ring.x_pow_minus_one(p.n2() as usize), &one)?,
            g,
        )?;
        let n2 = ring.divides(
            &ring.div_exact(&ring.x_pow_minus_one(p.n1() as usize), &one)?,
            g,
        )?;
        let mut d = [false; 6];
        for (a, slot) in d.iter_mut().enumerate() {
            let f = self.d_factor(a as u8)?;
            *slot = match &f.base {
                Some(b) => ring.divides(b, g)?,
                None => {
                    let ext = self.root.field();
                    let ering = PolyRing::new(ext);
                    let ge = ring.map_coeffs(&ering, g, |&c| ext.embed(c));
                    ering.divides(&f.ext, &ge)?
                }
            };
        }
        Ok(RootPattern { r, n1, n2, d })
    }

    /// The root pattern a branch predicts for `gcd(x^n - 1, S(x))`.
    pub fn predicted_pattern(&self, report: &ClassificationReport) -> RootPattern {
        let case = omega_case(&report.omegas);
        let (r, n1, n2) = match case {
            1 => (false, false, false),
            2 => (true, false, false),
            3 => (true, true, false),
            4 => (true, false, true),
            _ => (true, true, true),
        };
        let mut d = [false; 6];
        for a in report.removed() {
            d[a as usize] = true;
        }
        RootPattern { r, n1, n2, d }
    }

    /// Runs both paths and reports any disagreement.
    pub fn cross_check(&self) -> Result<DiscrepancyReport> {
        let oracle = self.generator_via_gcd();
        let report = self.classify()?;
        let closed = self.generator_via_closed_form(&report);
        let g = self.oracle_gcd();
        let observed = self.root_pattern(&g)?;
        let predicted = self.predicted_pattern(&report);
        let agree = match &closed {
            Ok(c) => c.gen == oracle.gen,
            Err(_) => false,
        };
        let (closed, closed_error) = match closed {
            Ok(c) => (Some(c), None),
            Err(e) => (None, Some(e)),
        };
        Ok(DiscrepancyReport {
            oracle,
            closed,
            closed_error,
            report,
            observed,
            predicted,
            agree,
        })
    }

    /// Builds a distance-theorem code and attaches its claimed distance.
    pub fn theorem_constructor(&self, which: Constructor) -> Result<CyclicCode> {
        let p = *self.params();
        let ring = self.ring();
        let check_i = |i: u8| {
            if i == 1 || i == 2 {
                Ok(())
            } else {
                Err(Error::InvalidArgument(format!("i must be 1 or 2, got {i}")))
            }
        };
        let idx = which.d_indices();
        if let Some(&a) = idx.iter().find(|&&a| a > 5) {
            return Err(Error::InvalidArgument(format!(
                "class index {a} is not in 0..=5"
            )));
        }
        if which.theorem() >= 5 && self.q_class() != 0 {
            return Err(Error::WrongClass {
                found: self.q_class(),
                required: "D0",
            });
        }
        if idx.len() == 3 {
            let mut s = [idx[0], idx[1], idx[2]];
            s.sort_unstable();
            if !ADMISSIBLE_TRIPLES.contains(&(s[0], s[1], s[2])) {
                return Err(Error::InadmissibleTriple(idx[0], idx[1], idx[2]));
            }
        }
        let e = p.e();
        let xn = ring.x_pow_minus_one(self.n());
        let min = p.n1().min(p.n2());
        let (base, claim) = match which {
            Constructor::T3 { i } | Constructor::T5 { i, .. } | Constructor::T7 { i, .. } => {
                check_i(i)?;
                let base = ring.div_exact(&xn, &ring.x_pow_minus_one(p.prime(i) as usize))?;
                let other = p.other_prime(i);
                let claim = if which.theorem() == 3 {
                    DistanceClaim {
                        exact: true,
                        value: other,
                    }
                } else {
                    DistanceClaim {
                        exact: false,
                        value: arith::ceil_sqrt(other),
                    }
                };
                (base, claim)
            }
            _ => {
                let claim = if which.theorem() == 4 {
                    DistanceClaim {
                        exact: true,
                        value: min,
                    }
                } else {
                    DistanceClaim {
                        exact: false,
                        value: arith::ceil_sqrt(min),
                    }
                };
                (d_poly(&ring, &p), claim)
            }
        };
        let gen = if idx.is_empty() {
            base
        } else {
            ring.div_exact(&base, &self.d_product(&idx)?)?
        };
        let mut code = self.code(gen, Provenance::Constructor(which))?;
        debug_assert_eq!(code.k as u64, {
            let base_k = match which {
                Constructor::T3 { i } | Constructor::T5 { i, .. } | Constructor::T7 { i, .. } => {
                    p.prime(i)
                }
                _ => p.n1() + p.n2() - 1,
            };
            base_k + e * idx.len() as u64
        });
        code.claim = Some(claim);
        Ok(code)
    }
}

/// Which root classes of `x^n - 1` a divisor contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootPattern {
    /// `beta^0`.
    pub r: bool,
    /// `beta^a`, `a in N1`.
    pub n1: bool,
    /// `beta^a`, `a in N2`.
    pub n2: bool,
    /// `beta^a`, `a in D_j`.
    pub d: [bool; 6],
}

impl fmt::Display for RootPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.r {
            parts.push("R".into());
        }
        if self.n1 {
            parts.push("N1".into());
        }
        if self.n2 {
            parts.push("N2".into());
        }
        for (j, &b) in self.d.iter().enumerate() {
            if b {
                parts.push(format!("D{j}"));
            }
        }
        if parts.is_empty() {
            f.write_str("{}")
        } else {
            write!(f, "{{{}}}", parts.join(","))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyReport {
    pub oracle: CyclicCode,
    pub closed: Option<CyclicCode>,
    pub closed_error: Option<Error>,
    pub report: ClassificationReport,
    /// Root classes of the oracle gcd.
    pub observed: RootPattern,
    /// Root classes the selected branch predicts.
    pub predicted: RootPattern,
    pub agree: bool,
}
