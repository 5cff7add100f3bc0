//! The signed index set 𝓘 = {−N..−1, 1..N}, the sp_2N basis Ē_IJ and its dual basis Ē^IJ.

use crate::matrix::Matrix;
use crate::poly::MultiPoly;
use crate::rational::{rat, Rational};
use crate::ring::Ring;

/// `σ_I`.
pub fn sign(i: i32) -> i64 {
    if i > 0 {
        1
    } else {
        -1
    }
}

/// Array position of a signed index under the layout (−N, …, −1, 1, …, N).
pub fn array_index(n: usize, i: i32) -> usize {
    assert!(i != 0 && i.unsigned_abs() as usize <= n, "signed index out of range");
    if i < 0 {
        (i + n as i32) as usize
    } else {
        (i + n as i32 - 1) as usize
    }
}

pub fn signed_indices(n: usize) -> Vec<i32> {
    let n = n as i32;
    (-n..=-1).chain(1..=n).collect()
}

/// 𝓘₂: pairs with I, J > 0, or of opposite signs with |I| ≤ |J|.
pub fn basis_pairs(n: usize) -> Vec<(i32, i32)> {
    let idx = signed_indices(n);
    let mut out = Vec::new();
    for &i in &idx {
        for &j in &idx {
            if (i > 0 && j > 0) || (sign(i) * sign(j) == -1 && i.abs() <= j.abs()) {
                out.push((i, j));
            }
        }
    }
    out
}

fn unit(n: usize, i: i32, j: i32) -> Matrix<Rational> {
    let (r, c) = (array_index(n, i), array_index(n, j));
    Matrix::from_fn(2 * n, 2 * n, |a, b| if a == r && b == c { rat(1) } else { rat(0) })
}

/// `Ē_IJ = Ẽ_IJ − σ_Iσ_J Ẽ_{−J,−I}`.
pub fn e_bar(n: usize, i: i32, j: i32) -> Matrix<Rational> {
    unit(n, i, j).sub(&unit(n, -j, -i).scale(&rat(sign(i) * sign(j)))).expect("square")
}

/// `Ē^IJ = Ẽ_JI − σ_Iσ_J Ẽ_{−I,−J}` for J ≠ −I, and `Ē^{I,−I} = Ẽ_{−I,I}`.
pub fn e_bar_dual(n: usize, i: i32, j: i32) -> Matrix<Rational> {
    if j == -i {
        return unit(n, -i, i);
    }
    unit(n, j, i).sub(&unit(n, -i, -j).scale(&rat(sign(i) * sign(j)))).expect("square")
}

pub(crate) fn half_trace_product(x: &Matrix<Rational>, y: &Matrix<Rational>) -> Rational {
    let mut t = rat(0);
    for a in 0..x.rows() {
        for b in 0..x.cols() {
            t += x.get(a, b) * y.get(b, a);
        }
    }
    t / rat(2)
}

/// Coordinates of `x` in the basis {Ē_IJ}, read off with the dual basis; `None` if `x ∉ sp_2N`.
pub fn decompose(n: usize, x: &Matrix<Rational>) -> Option<Vec<((i32, i32), Rational)>> {
    let mut coords = Vec::new();
    let mut rebuilt = Matrix::<Rational>::zeros(2 * n, 2 * n);
    for (i, j) in basis_pairs(n) {
        let c = half_trace_product(x, &e_bar_dual(n, i, j));
        if c != rat(0) {
            rebuilt = rebuilt.add(&e_bar(n, i, j).scale(&c)).expect("square");
            coords.push(((i, j), c));
        }
    }
    (rebuilt == *x).then_some(coords)
}

/// `q^a_i = x^a_i`, `q^a_{−i} = p^a_i`.
pub fn q(a: usize, i: i32) -> MultiPoly {
    if i > 0 {
        MultiPoly::x(a, i as usize)
    } else {
        MultiPoly::p(a, (-i) as usize)
    }
}

/// `A ↦ Ã`, the transpose along the minor diagonal: `Ã_ij = A_{n+1−j, n+1−i}`.
pub fn minor_transpose<R: Ring>(x: &Matrix<R>) -> Matrix<R> {
    let (r, c) = (x.rows(), x.cols());
    Matrix::from_fn(c, r, |i, j| x.get(r - 1 - j, c - 1 - i).clone())
}

/// True iff `x` has the block form `[[A, B], [C, −Ã]]` with `B̃ = B` and `C̃ = C`.
pub fn is_symplectic_block_form<R: Ring>(x: &Matrix<R>) -> bool {
    if !x.is_square() || x.rows() % 2 != 0 {
        return false;
    }
    let h = x.rows() / 2;
    let (a, b, c, d) = (x.block(0, 0, h, h), x.block(0, h, h, h), x.block(h, 0, h, h), x.block(h, h, h, h));
    let eq = |u: &Matrix<R>, v: &Matrix<R>| u.entries().iter().zip(v.entries()).all(|(p, q)| p.equals(q));
    eq(&d, &minor_transpose(&a).neg()) && eq(&minor_transpose(&b), &b) && eq(&minor_transpose(&c), &c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_and_basis_size() {
        assert_eq!(signed_indices(2), vec![-2, -1, 1, 2]);
        assert_eq!(array_index(2, -2), 0);
        assert_eq!(array_index(2, 1), 2);
        for n in 1..=4 {
            assert_eq!(basis_pairs(n).len(), 2 * n * n + n);
        }
    }

    #[test]
    fn dual_basis_pairing() {
        for n in 1..=3 {
            let pairs = basis_pairs(n);
            for &(i, j) in &pairs {
                for &(k, l) in &pairs {
                    let v = half_trace_product(&e_bar(n, i, j), &e_bar_dual(n, k, l));
                    let expected = if (i, j) == (k, l) { rat(1) } else { rat(0) };
                    assert_eq!(v, expected, "({i},{j}) ({k},{l})");
                }
            }
        }
    }

    #[test]
    fn basis_relation_and_closure() {
        let n = 2;
        let idx = signed_indices(n);
        for &i in &idx {
            for &j in &idx {
                let lhs = e_bar(n, -j, -i);
                let rhs = e_bar(n, i, j).scale(&rat(-sign(i) * sign(j)));
                assert_eq!(lhs, rhs);
                assert!(decompose(n, &e_bar(n, i, j)).is_some());
            }
        }
        let x = e_bar(n, 1, -2);
        let y = e_bar(n, -1, 2);
        let c = x.mul(&y).unwrap().sub(&y.mul(&x).unwrap()).unwrap();
        assert!(decompose(n, &c).is_some());
        assert!(decompose(n, &unit(n, 1, 1)).is_none());
    }

    #[test]
    fn minor_transpose_is_not_transpose() {
        let a: Matrix<Rational> = crate::matrix::integer_matrix(&[&[1, 2], &[3, 4]]);
        let t = minor_transpose(&a);
        assert_eq!(t, crate::matrix::integer_matrix(&[&[4, 2], &[3, 1]]));
        assert_ne!(t, a.transpose());
        assert_eq!(minor_transpose(&t), a);
        let s: Matrix<Rational> = e_bar(2, 1, 2).add(&e_bar(2, -1, 2)).unwrap();
        assert!(is_symplectic_block_form(&s));
        assert!(!is_symplectic_block_form(&unit(2, 1, 1)));
    }
}
