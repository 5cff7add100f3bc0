//! Matrices over an arbitrary [`Ring`]: determinants, column determinants, Manin checks,
//! Jordan blocks, Schur complements and the Berezinian identity.

use crate::rational::rat;
use crate::ring::Ring;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("entry ({row},{col}) is not central; use cdet")]
    NoncommutativeRing { row: usize, col: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("supplied inverse of the {0} block is not a right inverse")]
    BlockNotInvertible(&'static str),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("supplied inverse of block {0} is wrong")]
    SingularBlock(&'static str),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

/// Outcome of [`Matrix::manin_check`]; a violation names the first failing quadruple (i, j, k, l)
/// with `[M_ij, M_kl] ≠ [M_kj, M_il]` (for the column condition, j = l).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ManinCheck {
    Manin,
    Violation { i: usize, j: usize, k: usize, l: usize },
}

impl ManinCheck {
    pub fn is_manin(&self) -> bool {
        matches!(self, ManinCheck::Manin)
    }
}

/// Which diagonal block the Schur complement is taken against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corner {
    TopLeft,
    BottomRight,
}

impl<R: Ring> Matrix<R> {
    pub fn new(rows: usize, cols: usize, entries: Vec<R>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        Matrix { rows, cols, entries }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| R::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    /// Scalar multiple of the identity.
    pub fn diagonal(n: usize, x: &R) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { x.clone() } else { R::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), MatrixError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_same_shape(other)?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).add(other.get(i, j))))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_same_shape(other)?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).sub(other.get(i, j))))
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg)
    }

    pub fn scale(&self, c: &crate::rational::Rational) -> Self {
        self.map(|e| e.scale(c))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = R::zero();
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul(b));
                }
            }
            acc
        }))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.equals(&R::one())
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    /// Rectangular sub-block with rows `r0..r0+h` and columns `c0..c0+w`.
    pub fn block(&self, r0: usize, c0: usize, h: usize, w: usize) -> Self {
        Self::from_fn(h, w, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Assembles `[[A, B], [C, D]]`.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self, MatrixError> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(MatrixError::DimensionMismatch("incompatible corner blocks".into()));
        }
        let (top, left) = (a.rows, a.cols);
        Ok(Self::from_fn(a.rows + c.rows, a.cols + b.cols, |i, j| match (i < top, j < left) {
            (true, true) => a.get(i, j).clone(),
            (true, false) => b.get(i, j - left).clone(),
            (false, true) => c.get(i - top, j).clone(),
            (false, false) => d.get(i - top, j - left).clone(),
        }))
    }

    pub fn direct_sum(blocks: &[Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn swap_rows(&self, r1: usize, r2: usize) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            let i2 = if i == r1 {
                r2
            } else if i == r2 {
                r1
            } else {
                i
            };
            self.get(i2, j).clone()
        })
    }

    pub fn swap_cols(&self, c1: usize, c2: usize) -> Self {
        self.transpose().swap_rows(c1, c2).transpose()
    }

    fn require_square(&self) -> Result<(), MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NonSquare { rows: self.rows, cols: self.cols });
        }
        Ok(())
    }

    /// Commutative determinant; every entry must be central.
    pub fn det(&self) -> Result<R, MatrixError> {
        self.require_square()?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.get(i, j).is_central() {
                    return Err(MatrixError::NoncommutativeRing { row: i, col: j });
                }
            }
        }
        self.cdet()
    }

    /// Column-ordered determinant `Σ_σ sgn σ · M_{σ(1)1} M_{σ(2)2} ⋯ M_{σ(n)n}`.
    ///
    /// Evaluated column by column over subsets of used rows, which groups permutations sharing a
    /// prefix; the products keep the column order, so the result equals the permutation sum.
    pub fn cdet(&self) -> Result<R, MatrixError> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(R::one());
        }
        assert!(n <= 20, "cdet limited to size 20");
        let mut layer: Vec<(u32, R)> = vec![(0, R::one())];
        for col in 0..n {
            let mut next: std::collections::BTreeMap<u32, R> = std::collections::BTreeMap::new();
            for (used, partial) in &layer {
                for row in 0..n {
                    if used & (1 << row) != 0 {
                        continue;
                    }
                    let entry = self.get(row, col);
                    if entry.is_zero() {
                        continue;
                    }
                    let inversions = (used >> (row + 1)).count_ones();
                    let mut term = partial.mul(entry);
                    if inversions % 2 == 1 {
                        term = term.neg();
                    }
                    let key = used | (1 << row);
                    match next.get_mut(&key) {
                        Some(acc) => *acc = acc.add(&term),
                        None => {
                            next.insert(key, term);
                        }
                    }
                }
            }
            layer = next.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            if layer.is_empty() {
                return Ok(R::zero());
            }
        }
        Ok(layer.pop().map(|(_, v)| v).unwrap_or_else(R::zero))
    }

    /// Plain permutation expansion of the column determinant, kept as a reference implementation.
    pub fn cdet_permutation(&self) -> Result<R, MatrixError> {
        self.require_square()?;
        let n = self.rows;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = R::zero();
        loop {
            let mut term = R::one();
            for (col, &row) in perm.iter().enumerate() {
                term = term.mul(self.get(row, col));
            }
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
            total = if inversions % 2 == 0 { total.add(&term) } else { total.sub(&term) };
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Ok(total)
    }

    pub fn manin_check(&self) -> ManinCheck {
        let n = self.rows;
        let m = self.cols;
        for j in 0..m {
            for i in 0..n {
                for k in i + 1..n {
                    if !self.get(i, j).commutator(self.get(k, j)).is_zero() {
                        return ManinCheck::Violation { i, j, k, l: j };
                    }
                }
            }
        }
        for i in 0..n {
            for k in i + 1..n {
                for j in 0..m {
                    for l in j + 1..m {
                        let lhs = self.get(i, j).commutator(self.get(k, l));
                        let rhs = self.get(k, j).commutator(self.get(i, l));
                        if !lhs.equals(&rhs) {
                            return ManinCheck::Violation { i, j, k, l };
                        }
                    }
                }
            }
        }
        ManinCheck::Manin
    }

    /// True iff `cdet` flips sign when columns `c1` and `c2` are exchanged.
    pub fn cdet_column_exchange_test(&self, c1: usize, c2: usize) -> Result<bool, MatrixError> {
        let before = self.cdet()?;
        let after = self.swap_cols(c1, c2).cdet()?;
        Ok(after.equals(&before.neg()))
    }

    /// True iff `cdet` flips sign when rows `r1` and `r2` are exchanged.
    pub fn cdet_row_exchange_test(&self, r1: usize, r2: usize) -> Result<bool, MatrixError> {
        let before = self.cdet()?;
        let after = self.swap_rows(r1, r2).cdet()?;
        Ok(after.equals(&before.neg()))
    }

    /// Splits at `k` into `[[A, B], [C, D]]` with A of size k×k and returns
    /// `(cdet A, cdet(D − C A⁻¹ B))` for [`Corner::TopLeft`] or
    /// `(cdet D, cdet(A − B D⁻¹ C))` for [`Corner::BottomRight`]. The supplied inverse must be a
    /// right inverse of the chosen block.
    pub fn schur_cdet_factor(&self, k: usize, which: Corner, inverse: &Self) -> Result<(R, R), MatrixError> {
        self.require_square()?;
        let n = self.rows;
        let a = self.block(0, 0, k, k);
        let b = self.block(0, k, k, n - k);
        let c = self.block(k, 0, n - k, k);
        let d = self.block(k, k, n - k, n - k);
        let (pivot, name) = match which {
            Corner::TopLeft => (&a, "top-left"),
            Corner::BottomRight => (&d, "bottom-right"),
        };
        if !pivot.mul(inverse)?.is_identity() {
            return Err(MatrixError::BlockNotInvertible(name));
        }
        match which {
            Corner::TopLeft => {
                let schur = d.sub(&c.mul(inverse)?.mul(&b)?)?;
                Ok((a.cdet()?, schur.cdet()?))
            }
            Corner::BottomRight => {
                let schur = a.sub(&b.mul(inverse)?.mul(&c)?)?;
                Ok((d.cdet()?, schur.cdet()?))
            }
        }
    }

    pub fn kronecker(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            self.get(i / other.rows, j / other.cols).mul(other.get(i % other.rows, j % other.cols))
        })
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// `J_k(x)`: x on the diagonal, −1 on the subdiagonal.
pub fn jordan_block<R: Ring>(k: usize, x: &R) -> Matrix<R> {
    Matrix::from_fn(k, k, |i, j| {
        if i == j {
            x.clone()
        } else if i == j + 1 {
            R::one().neg()
        } else {
            R::zero()
        }
    })
}

/// `J_k(x)⁻¹` with (i, j) entry `x^{−(i−j+1)}` for i ≥ j, given an inverse of x.
pub fn jordan_block_inverse<R: Ring>(k: usize, x: &R, x_inv: &R) -> Result<Matrix<R>, MatrixError> {
    if x.is_zero() || !x.mul(x_inv).equals(&R::one()) {
        return Err(MatrixError::NotInvertible);
    }
    let powers: Vec<R> = (0..=k as u32).map(|e| x_inv.pow(e)).collect();
    Ok(Matrix::from_fn(k, k, |i, j| if i >= j { powers[i - j + 1].clone() } else { R::zero() }))
}

/// Checks `det(Λ − Π Z⁻¹ Ψ) · det(Z − Ψ Λ⁻¹ Π) = det Z · det Λ` for a supermatrix `[[Λ, Π], [Ψ, Z]]`
/// with even diagonal blocks and odd off-diagonal blocks.
pub fn berezinian_identity_check<R: Ring>(
    lambda: &Matrix<R>,
    pi: &Matrix<R>,
    psi: &Matrix<R>,
    z: &Matrix<R>,
    lambda_inv: &Matrix<R>,
    z_inv: &Matrix<R>,
) -> Result<bool, MatrixError> {
    if !lambda.mul(lambda_inv)?.is_identity() || !lambda_inv.mul(lambda)?.is_identity() {
        return Err(MatrixError::SingularBlock("Λ"));
    }
    if !z.mul(z_inv)?.is_identity() || !z_inv.mul(z)?.is_identity() {
        return Err(MatrixError::SingularBlock("Z"));
    }
    let top = lambda.sub(&pi.mul(z_inv)?.mul(psi)?)?;
    let bottom = z.sub(&psi.mul(lambda_inv)?.mul(pi)?)?;
    let lhs = top.det()?.mul(&bottom.det()?);
    let rhs = z.det()?.mul(&lambda.det()?);
    Ok(lhs.equals(&rhs))
}

impl<R: Ring + fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Integer-valued scalar matrix, handy for building test inputs.
pub fn integer_matrix<R: Ring>(rows: &[&[i64]]) -> Matrix<R> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| R::from_rational(&rat(v))).collect()).collect())
}
