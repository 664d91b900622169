use whiteman_core::codegen::{Branch, Construction, Part};
use whiteman_core::Error;

// (n1, n2, q, class of q, oracle k), covering every class of q.
const CASES: &[(u64, u64, u64, u8, usize)] = &[
    (7, 13, 2, 5, 19),
    (13, 7, 2, 1, 1),
    (13, 19, 2, 0, 109),
    (19, 13, 2, 0, 139),
    (7, 31, 2, 2, 31),
    (31, 7, 2, 4, 7),
    (7, 73, 2, 2, 79),
    (73, 7, 2, 4, 1),
    (13, 7, 5, 2, 0),
    (7, 13, 5, 4, 0),
    (7, 13, 3, 3, 7),
    (19, 7, 3, 0, 73),
    (7, 19, 3, 0, 61),
    (7, 19, 2, 1, 19),
    (31, 7, 5, 3, 0),
    (13, 19, 7, 5, 19),
    (19, 31, 5, 2, 49),
    (37, 7, 2, 1, 1),
    (13, 43, 7, 2, 55),
];

#[test]
fn both_paths_agree() {
    for &(n1, n2, q, class, k) in CASES {
        let c = Construction::new(n1, n2, q).unwrap();
        assert_eq!(c.q_class(), class, "({n1},{n2},{q})");
        let x = c.cross_check().unwrap();
        assert_eq!(x.oracle.k, k, "({n1},{n2},{q})");
        assert!(x.agree, "({n1},{n2},{q}): {x:?}");
        assert_eq!(x.observed, x.predicted, "({n1},{n2},{q})");
        let closed = x.closed.unwrap();
        assert_eq!(closed.gen, x.oracle.gen);
        assert_eq!(closed.k, k);
    }
}

#[test]
fn ternary_pairs() {
    let c = Construction::new(31, 19, 3).unwrap();
    let x = c.cross_check().unwrap();
    assert_eq!(x.oracle.k, 301);
    assert!(x.agree);
    assert_eq!(
        x.report.branch,
        Branch::Theorem2 {
            part: Part::III,
            omega_case: 4
        }
    );
    let c = Construction::new(19, 31, 3).unwrap();
    let x = c.cross_check().unwrap();
    assert_eq!(x.oracle.k, 289);
    assert!(x.agree);
}

#[test]
fn descent_for_q_in_d2() {
    let c = Construction::new(7, 31, 2).unwrap();
    assert_eq!(c.q_class(), 2);
    for a in 0..6 {
        assert!(c.d_factor(a).unwrap().base.is_none());
    }
    assert!(matches!(
        c.d_product(&[0]),
        Err(Error::UnverifiableBranch(_))
    ));
    assert!(matches!(
        c.d_product(&[0, 1]),
        Err(Error::UnverifiableBranch(_))
    ));
    let even = c.d_product(&[0, 2, 4]).unwrap();
    let odd = c.d_product(&[1, 3, 5]).unwrap();
    let ring = c.ring();
    let n = c.n();
    let rest = ring
        .div_exact(
            &ring.mul(&ring.x_pow_minus_one(7), &ring.x_pow_minus_one(31)),
            &ring.x_pow_minus_one(1),
        )
        .unwrap();
    assert_eq!(ring.product([&even, &odd, &rest]), ring.x_pow_minus_one(n));
}
