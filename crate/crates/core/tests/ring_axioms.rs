use edet_core::algebras::{associator, skew_cube_algebra, MatrixRing, Octonions, Quaternions};
use edet_core::prime_field::PrimeField;
use edet_core::rational::{ratio, Rationals};
use edet_core::ring::scale;
use edet_core::Ring;
use num_bigint::BigInt;
use proptest::prelude::*;

fn additive_laws<R: Ring>(r: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem) {
    assert!(r.eq(&r.add(a, b), &r.add(b, a)));
    assert!(r.eq(&r.add(&r.add(a, b), c), &r.add(a, &r.add(b, c))));
    assert!(r.eq(&r.add(a, &r.zero()), a));
    assert!(r.is_zero(&r.add(a, &r.neg(a))));
    assert!(r.eq(&r.sub(a, b), &r.add(a, &r.neg(b))));
}

fn distributive_laws<R: Ring>(r: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem) {
    assert!(r.eq(&r.mul(a, &r.add(b, c)), &r.add(&r.mul(a, b), &r.mul(a, c))));
    assert!(r.eq(&r.mul(&r.add(a, b), c), &r.add(&r.mul(a, c), &r.mul(b, c))));
}

fn associative_law<R: Ring>(r: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem) {
    assert!(r.eq(&r.mul(&r.mul(a, b), c), &r.mul(a, &r.mul(b, c))));
}

fn exact_division<R: Ring>(r: &R, a: &R::Elem, k: i64) {
    let back = r.div_by_int(&scale(r, a, k), &BigInt::from(k)).unwrap();
    assert!(r.eq(&back, a));
}

fn small() -> impl Strategy<Value = i64> {
    -20i64..=20
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals(v in prop::collection::vec((small(), 1i64..9), 3), k in 1i64..12) {
        let q = Rationals::new();
        let [a, b, c] = [0, 1, 2].map(|i| ratio(v[i].0, v[i].1));
        additive_laws(&q, &a, &b, &c);
        distributive_laws(&q, &a, &b, &c);
        associative_law(&q, &a, &b, &c);
        prop_assert!(q.eq(&q.mul(&a, &b), &q.mul(&b, &a)));
        exact_division(&q, &a, k);
    }

    #[test]
    fn prime_field(v in prop::collection::vec(0u64..101, 3), k in 1i64..101) {
        let f = PrimeField::new(101).unwrap();
        let (a, b, c) = (v[0], v[1], v[2]);
        additive_laws(&f, &a, &b, &c);
        distributive_laws(&f, &a, &b, &c);
        associative_law(&f, &a, &b, &c);
        exact_division(&f, &a, k);
    }

    #[test]
    fn quaternions(v in prop::collection::vec(small(), 12), k in 1i64..12) {
        let h = Quaternions::new();
        let e = |o: usize| Quaternions::from_ints([v[o], v[o + 1], v[o + 2], v[o + 3]]);
        let (a, b, c) = (e(0), e(4), e(8));
        additive_laws(&h, &a, &b, &c);
        distributive_laws(&h, &a, &b, &c);
        associative_law(&h, &a, &b, &c);
        exact_division(&h, &a, k);
    }

    #[test]
    fn octonions_are_alternative(v in prop::collection::vec(small(), 24), k in 1i64..12) {
        let o = Octonions::new();
        let e = |s: usize| {
            let mut c = [0i64; 8];
            c.copy_from_slice(&v[s..s + 8]);
            Octonions::from_ints(c)
        };
        let (a, b, c) = (e(0), e(8), e(16));
        additive_laws(&o, &a, &b, &c);
        distributive_laws(&o, &a, &b, &c);
        prop_assert!(o.is_zero(&associator(&o, &a, &a, &b)));
        prop_assert!(o.is_zero(&associator(&o, &a, &b, &b)));
        exact_division(&o, &a, k);
    }

    #[test]
    fn matrix_ring(v in prop::collection::vec(small(), 12), k in 1i64..12) {
        let m = MatrixRing::new(2, Rationals::new()).unwrap();
        let q = Rationals::new();
        let e = |s: usize| m.from_entries((s..s + 4).map(|i| q.from_int(v[i]).unwrap()).collect()).unwrap();
        let (a, b, c) = (e(0), e(4), e(8));
        additive_laws(&m, &a, &b, &c);
        distributive_laws(&m, &a, &b, &c);
        associative_law(&m, &a, &b, &c);
        exact_division(&m, &a, k);
    }

    #[test]
    fn table_algebra(v in prop::collection::vec(small(), 6), k in 1i64..12) {
        let t = skew_cube_algebra();
        let (a, b, c) = (t.element(&v[0..2]), t.element(&v[2..4]), t.element(&v[4..6]));
        additive_laws(&t, &a, &b, &c);
        distributive_laws(&t, &a, &b, &c);
        exact_division(&t, &a, k);
    }
}

#[test]
fn division_by_the_characteristic_is_refused() {
    let f = PrimeField::new(5).unwrap();
    assert!(f.div_by_int(&3, &BigInt::from(10)).is_err());
    assert!(f.div_by_int(&3, &BigInt::from(4)).is_ok());
}
