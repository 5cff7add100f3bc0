use gaudin_duality::matrix::integer_matrix;
use gaudin_duality::{
    jordan_block, jordan_block_inverse, rat, Corner, ManinCheck, Matrix, MultiPoly, RatFunc, Rational, Ring, Var, WeylElement,
};
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = MultiPoly> {
    (-3i64..4, -2i64..3, 0u32..2).prop_map(|(c, d, e)| {
        MultiPoly::constant(rat(c)).add(&MultiPoly::var(Var::X(1, (e + 1) as u8)).scale(&rat(d)))
    })
}

fn poly_matrix() -> impl Strategy<Value = Matrix<MultiPoly>> {
    (1usize..5).prop_flat_map(|n| prop::collection::vec(small_poly(), n * n).prop_map(move |e| Matrix::new(n, n, e)))
}

fn scalar_matrix(n: usize) -> impl Strategy<Value = Matrix<WeylElement>> {
    prop::collection::vec(-2i64..3, n * n)
        .prop_map(move |e| Matrix::new(n, n, e.into_iter().map(|v| WeylElement::constant(rat(v))).collect()))
}

/// `[[∂_a + α, x_a], [∂_a, x_a + β]]`: a 2×2 Manin matrix with non-commuting entries.
fn manin_block(a: usize, alpha: i64, beta: i64) -> Matrix<WeylElement> {
    let (d, x) = (WeylElement::d(a, 1), WeylElement::x(a, 1));
    Matrix::from_rows(vec![
        vec![d.add(&WeylElement::constant(rat(alpha))), x.clone()],
        vec![d, x.add(&WeylElement::constant(rat(beta)))],
    ])
}

/// Direct sums of Manin blocks in disjoint variables, multiplied on both sides by scalar matrices.
fn manin_matrix() -> impl Strategy<Value = Matrix<WeylElement>> {
    (2usize..5)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(-2i64..3, 4), scalar_matrix(n), scalar_matrix(n)))
        .prop_map(|(n, shifts, p, q)| {
            let mut blocks = vec![manin_block(1, shifts[0], shifts[1])];
            if n >= 4 {
                blocks.push(manin_block(2, shifts[2], shifts[3]));
            } else if n == 3 {
                blocks.push(Matrix::from_rows(vec![vec![WeylElement::x(2, 1).add(&WeylElement::d(3, 1))]]));
            }
            let base = Matrix::direct_sum(&blocks);
            p.mul(&base).unwrap().mul(&q).unwrap()
        })
}

fn weyl_entry() -> impl Strategy<Value = WeylElement> {
    (0usize..5, -2i64..3).prop_map(|(g, c)| {
        let gen = match g {
            0 => WeylElement::x(1, 1),
            1 => WeylElement::d(1, 1),
            2 => WeylElement::x(2, 1),
            3 => WeylElement::d(2, 1).mul(&WeylElement::x(1, 1)),
            _ => WeylElement::one(),
        };
        gen.scale(&rat(c))
    })
}

fn upper_unipotent(n: usize, k: usize, x: &[WeylElement]) -> Matrix<WeylElement> {
    Matrix::from_fn(n, n, |i, j| {
        if i == j {
            WeylElement::one()
        } else if i < k && j >= k {
            x[i * (n - k) + (j - k)].clone()
        } else {
            WeylElement::zero()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn cdet_equals_det_on_commutative_rings(m in poly_matrix()) {
        let det = m.det().unwrap();
        prop_assert_eq!(m.cdet().unwrap(), det.clone());
        prop_assert_eq!(m.cdet_permutation().unwrap(), det.clone());
        prop_assert_eq!(m.transpose().det().unwrap(), det);
    }

    #[test]
    fn det_is_multiplicative(a in prop::collection::vec(-3i64..4, 9), b in prop::collection::vec(-3i64..4, 9)) {
        let ma = Matrix::new(3, 3, a.into_iter().map(rat).collect::<Vec<Rational>>());
        let mb = Matrix::new(3, 3, b.into_iter().map(rat).collect::<Vec<Rational>>());
        prop_assert_eq!(ma.mul(&mb).unwrap().det().unwrap(), ma.det().unwrap() * mb.det().unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn x_block_preserves_cdet(m in manin_matrix(), k_seed in 0usize..4, xs in prop::collection::vec(weyl_entry(), 16)) {
        prop_assert!(m.manin_check().is_manin());
        let n = m.rows();
        let k = k_seed % (n + 1);
        let u = upper_unipotent(n, k, &xs);
        prop_assert_eq!(m.mul(&u).unwrap().cdet().unwrap(), m.cdet().unwrap());
    }

    #[test]
    fn manin_column_and_row_exchange_signs(m in manin_matrix(), c1 in 0usize..4, c2 in 0usize..4) {
        let n = m.rows();
        let (c1, c2) = (c1 % n, c2 % n);
        prop_assume!(c1 != c2);
        prop_assert!(m.cdet_column_exchange_test(c1, c2).unwrap());
        prop_assert!(m.cdet_row_exchange_test(c1, c2).unwrap());
    }
}

#[test]
fn jordan_inverse_is_two_sided_for_k_up_to_five() {
    let t = RatFunc::<Rational>::var();
    let t_inv = RatFunc::pole(rat(1), &rat(0), 1);
    for k in 1..=5 {
        let j = jordan_block(k, &t);
        let inv = jordan_block_inverse(k, &t, &t_inv).unwrap();
        assert!(j.mul(&inv).unwrap().is_identity(), "k = {k}");
        assert!(inv.mul(&j).unwrap().is_identity(), "k = {k}");
    }
}

#[test]
fn manin_witness_for_non_manin_matrix() {
    let (x, d) = (WeylElement::x(1, 1), WeylElement::d(1, 1));
    let m = Matrix::from_rows(vec![vec![d.clone(), x.clone()], vec![x, d]]);
    assert!(matches!(m.manin_check(), ManinCheck::Violation { .. }));
}

#[test]
fn schur_factorisation_both_corners() {
    let m: Matrix<Rational> = integer_matrix(&[&[2, 1, 0], &[4, 3, 1], &[1, 0, 5]]);
    let half = Rational::new(1.into(), 2.into());
    let (a, schur) = m.schur_cdet_factor(1, Corner::TopLeft, &Matrix::from_rows(vec![vec![half]])).unwrap();
    assert_eq!(a * schur, m.det().unwrap());
    let fifth = Rational::new(1.into(), 5.into());
    let (d, schur) = m.schur_cdet_factor(2, Corner::BottomRight, &Matrix::from_rows(vec![vec![fifth]])).unwrap();
    assert_eq!(d * schur, m.det().unwrap());
}
