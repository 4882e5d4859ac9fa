use gcross::scalar::{kernel, solve, Elem, Field, FieldHom, Matrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn fields() -> Vec<Field> {
    vec![
        Field::Rational,
        Field::prime(2).unwrap(),
        Field::prime(7).unwrap(),
        Field::prime(65521).unwrap(),
        Field::extension_int(Field::prime(2).unwrap(), &[1, 1, 0, 1]).unwrap(),
        Field::extension_int(Field::prime(3).unwrap(), &[1, 0, 1]).unwrap(),
        Field::extension_int(Field::Rational, &[-2, 0, 1]).unwrap(),
        Field::extension_int(Field::Rational, &[108, 0, 0, 0, 0, 0, 1]).unwrap(),
    ]
}

/// A deterministic element of `f` built from small integers.
fn elem(f: &Field, raw: &[(i64, i64)]) -> Elem {
    match f {
        Field::Rational => {
            let (n, d) = raw[0];
            f.from_rational(&BigRational::new(BigInt::from(n), BigInt::from(d))).unwrap()
        }
        Field::Prime(_) => f.from_i64(raw[0].0),
        Field::Extension(e) => {
            let cs = (0..f.degree()).map(|i| elem(&e.base, &raw[i % raw.len()..])).collect();
            f.from_coeffs(cs)
        }
    }
}

fn raw() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-50i64..50, 1i64..9), 8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(k in 0usize..8, a in raw(), b in raw(), c in raw()) {
        let f = &fields()[k];
        let (a, b, c) = (elem(f, &a), elem(f, &b), elem(f, &c));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        prop_assert_eq!(f.mul(&a, &f.one()), a.clone());
        if !f.is_zero(&a) {
            let ai = f.inv(&a).unwrap();
            prop_assert!(f.is_one(&f.mul(&a, &ai)));
        } else {
            prop_assert!(f.inv(&a).is_err());
        }
    }

    #[test]
    fn scalars_round_trip_through_text(k in 0usize..4, a in raw()) {
        let f = &fields()[k];
        let a = elem(f, &a);
        prop_assert_eq!(f.parse_scalar(&Field::format_scalar(&a)).unwrap(), a);
    }

    #[test]
    fn solve_back_substitutes(k in 0usize..8, rows in 1usize..5, cols in 1usize..5, entries in prop::collection::vec(raw(), 25), rhs in prop::collection::vec(raw(), 5)) {
        let f = &fields()[k];
        let data: Vec<Vec<Elem>> = (0..rows).map(|i| (0..cols).map(|j| {
            // sparse-ish matrices so that kernels are common
            let r = &entries[i * 5 + j];
            if r[0].0 % 3 == 0 { f.zero() } else { elem(f, r) }
        }).collect()).collect();
        let m = Matrix::from_rows(cols, data).unwrap();
        let b: Vec<Elem> = (0..rows).map(|i| elem(f, &rhs[i])).collect();
        for v in kernel(f, &m) {
            prop_assert!(m.mul_vec(f, &v).unwrap().iter().all(|x| f.is_zero(x)));
        }
        if let Some(sol) = solve(f, &m, &b).unwrap() {
            prop_assert_eq!(m.mul_vec(f, &sol.particular).unwrap(), b);
            for v in &sol.kernel {
                prop_assert!(m.mul_vec(f, v).unwrap().iter().all(|x| f.is_zero(x)));
            }
        }
        // a right-hand side in the column span is always solvable
        let x: Vec<Elem> = (0..cols).map(|j| elem(f, &rhs[j])).collect();
        let bx = m.mul_vec(f, &x).unwrap();
        prop_assert!(solve(f, &m, &bx).unwrap().is_some());
    }
}

/// Verified homomorphisms are additive and multiplicative on the full
/// power-basis grid.
#[test]
fn verified_homs_respect_basis_grid() {
    let gf8 = Field::extension_int(Field::prime(2).unwrap(), &[1, 1, 0, 1]).unwrap();
    let x = gf8.generator().unwrap();
    let frob = FieldHom::new(gf8.clone(), gf8.clone(), gf8.pow(&x, 2)).unwrap();
    let q2 = Field::extension_int(Field::Rational, &[-2, 0, 1]).unwrap();
    let conj = FieldHom::new(q2.clone(), q2.clone(), q2.neg(&q2.generator().unwrap())).unwrap();
    for (f, h) in [(&gf8, &frob), (&q2, &conj)] {
        assert!(h.verify().is_ok());
        let g = f.generator().unwrap();
        let basis: Vec<Elem> = (0..f.degree()).map(|i| f.pow(&g, i as u64)).collect();
        for a in &basis {
            for b in &basis {
                assert_eq!(h.apply(&f.mul(a, b)), f.mul(&h.apply(a), &h.apply(b)));
                assert_eq!(h.apply(&f.add(a, b)), f.add(&h.apply(a), &h.apply(b)));
            }
        }
    }
    // x -> x is not a hom into the field with a different modulus
    let bad = FieldHom::new(q2.clone(), q2.clone(), q2.from_i64(3)).unwrap();
    assert!(!bad.verify().is_ok());
}

/// 27-dimensional products produce large intermediate fractions; they must
/// stay exact.
#[test]
fn no_overflow_on_large_fractions() {
    let f = Field::Rational;
    let mut a = f.from_ratio(3, 7).unwrap();
    for _ in 0..200 {
        a = f.mul(&a, &f.from_ratio(1_000_003, 999_983).unwrap());
    }
    let mut b = a.clone();
    for _ in 0..200 {
        b = f.div(&b, &f.from_ratio(1_000_003, 999_983).unwrap()).unwrap();
    }
    assert_eq!(b, f.from_ratio(3, 7).unwrap());
}
