//! Exact checks of the structural lemmas for one parameter set.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::codegen::Construction;
use crate::cyclotomy::{Label, WhitemanSystem};
use crate::error::Result;
use crate::field::{ExtElem, Field};
use crate::poly::PolyRing;
use crate::sequence::Which;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Number of individual identities tested.
    pub cases: u64,
    /// First failing case, if any.
    pub detail: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            passed: true,
            cases: 0,
            detail: None,
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.passed {
            self.passed = false;
            self.detail = Some(detail());
        }
    }
}

/// `r D_j = D_{i+j}` for every `r in D_i`, checked elementwise on all
/// pairs of units.
pub fn lemma1(sys: &WhitemanSystem) -> Check {
    let mut c = Check::new("lemma1");
    let n = sys.n() as u64;
    let units = sys.units();
    for &r in &units {
        let i = sys.unit_class(r as u64).expect("unit");
        for &d in &units {
            let j = sys.unit_class(d as u64).expect("unit");
            let got = sys.unit_class(r as u64 * d as u64 % n);
            c.record(got == Some((i + j) % 6), || {
                format!("{r} in D{i} times {d} in D{j} landed in {got:?}")
            });
        }
    }
    c
}

fn power_sum(con: &Construction, set: &[usize], a: u64) -> ExtElem {
    let root = con.root();
    let f = root.field();
    let n = con.n() as u64;
    set.iter().fold(f.zero(), |acc, &i| {
        f.add(&acc, root.power(a * i as u64 % n))
    })
}

/// Sums of `beta^i` over `N1`, `N2` and the units.
pub fn lemma2(con: &Construction) -> Check {
    let mut c = Check::new("lemma2");
    let f = con.root().field();
    let sys = con.system();
    let minus_one = f.minus_one();
    c.record(power_sum(con, sys.n1_set(), 1) == minus_one, || {
        "sum over N1 != -1".into()
    });
    c.record(power_sum(con, sys.n2_set(), 1) == minus_one, || {
        "sum over N2 != -1".into()
    });
    c.record(power_sum(con, &sys.units(), 1) == f.one(), || {
        "sum over units != 1".into()
    });
    c
}

/// `sum_{i in D_j} beta^{ai}` for every `a in N1 ∪ N2` and every `j`.
pub fn lemma3(con: &Construction) -> Check {
    let mut c = Check::new("lemma3");
    let f = con.root().field();
    let p = con.params();
    let q = con.q();
    let v1 = f.neg(&f.embed(((p.n1() - 1) / 6 % q) as u32));
    let v2 = f.neg(&f.embed(((p.n2() - 1) / 6 % q) as u32));
    let sys = con.system();
    for (set, want) in [(sys.n1_set(), &v1), (sys.n2_set(), &v2)] {
        for &a in set {
            for j in 0..6 {
                let got = power_sum(con, sys.class(j), a as u64);
                c.record(&got == want, || format!("a = {a}, j = {j}"));
            }
        }
    }
    c
}

/// Direct evaluation of `S`, `T`, `M` at every `beta^a` against the
/// closed form for the class of `a`.
pub fn lemma4(con: &Construction) -> Result<Check> {
    let mut c = Check::new("lemma4");
    let seq = con.sequence();
    let stm = seq.stm_at_beta(con.root())?;
    for a in 0..con.n() as u64 {
        for w in Which::ALL {
            let got = seq.eval_at_class(w, a, con.root())?;
            let want = seq.closed_form(w, a, con.root().field(), &stm)?;
            c.record(got == want, || format!("{w}(beta^{a})"));
        }
    }
    Ok(c)
}

/// The facts about `S(beta)`, `T(beta)`, `M(beta)` that depend on the
/// class of `q`.
pub fn lemma5(con: &Construction) -> Result<Check> {
    let mut c = Check::new("lemma5");
    let f = con.root().field();
    let values = con.sequence().stm_at_beta(con.root())?;
    let class = con.q_class();
    let minus_one = f.minus_one();
    for (w, v) in Which::ALL.iter().zip(&values) {
        match class {
            1 | 3 | 5 => c.record(!f.is_zero(v) && *v != minus_one, || {
                format!("{w}(beta) is in {{0, -1}} with q in D{class}")
            }),
            0 => c.record(f.frobenius(v) == *v, || format!("{w}(beta)^q != {w}(beta)")),
            _ => {
                let q3 = f.frobenius(&f.frobenius(&f.frobenius(v)));
                c.record(q3 == *v, || format!("{w}(beta)^(q^3) != {w}(beta)"))
            }
        }
    }
    Ok(c)
}

/// `x^n - 1 = (x^{n1} - 1)(x^{n2} - 1)/(x - 1) * prod d_a`, over `GF(q)`
/// when every `d_a` descends and over the extension otherwise.
pub fn factorization(con: &Construction) -> Result<Check> {
    let mut c = Check::new("factorization");
    let p = con.params();
    let ring = con.ring();
    let rest = ring.div_exact(
        &ring.mul(
            &ring.x_pow_minus_one(p.n1() as usize),
            &ring.x_pow_minus_one(p.n2() as usize),
        ),
        &ring.x_pow_minus_one(1),
    )?;
    let factors = (0..6)
        .map(|a| con.d_factor(a))
        .collect::<Result<Vec<_>>>()?;
    for f in &factors {
        c.record(f.ext.degree() == Some(p.e() as usize), || {
            format!("deg d_{} != e", f.a)
        });
        if con.q_class() == 0 {
            c.record(f.base.is_some(), || format!("d_{} does not descend", f.a));
        }
    }
    let ok = if factors.iter().all(|f| f.base.is_some()) {
        let mut acc = rest;
        for f in &factors {
            acc = ring.mul(&acc, f.base.as_ref().expect("checked"));
        }
        acc == ring.x_pow_minus_one(con.n())
    } else {
        let ext = con.root().field();
        let er = PolyRing::new(ext);
        let mut acc = ring.map_coeffs(&er, &rest, |&x| ext.embed(x));
        for f in &factors {
            acc = er.mul(&acc, &f.ext);
        }
        acc == er.x_pow_minus_one(con.n())
    };
    c.record(ok, || "product differs from x^n - 1".into());
    Ok(c)
}

/// Partition sanity: the labels cover `Z_n` with the expected sizes.
pub fn partition(sys: &WhitemanSystem) -> Check {
    let mut c = Check::new("partition");
    let p = sys.params();
    let count = |l: Label| sys.membership().iter().filter(|&&x| x == l).count() as u64;
    c.record(count(Label::R) == 1, || "|R| != 1".into());
    c.record(count(Label::N1) == p.n2() - 1, || "|N1| != n2 - 1".into());
    c.record(count(Label::N2) == p.n1() - 1, || "|N2| != n1 - 1".into());
    for j in 0..6 {
        c.record(count(Label::D(j)) == p.e(), || format!("|D{j}| != e"));
    }
    c
}

/// All checks above, in a fixed order.
pub fn lemma_suite(con: &Construction) -> Result<Vec<Check>> {
    Ok(alloc::vec![
        partition(con.system()),
        lemma1(con.system()),
        lemma2(con),
        lemma3(con),
        lemma4(con)?,
        lemma5(con)?,
        factorization(con)?,
    ])
}
