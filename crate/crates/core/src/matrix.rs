//! Quaternionic matrices, row-major, acting on column vectors from the left.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::cmatrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::quat::Quaternion;
use crate::scalar::{half, Scalar};
use crate::vector::QVector;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
pub struct QMatrix<T> {
    rows: usize,
    cols: usize,
    /// Row-major entries, `data[r * cols + c]`.
    data: Vec<Quaternion<T>>,
}

impl<T: Scalar> QMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Quaternion::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for d in 0..n {
            m[(d, d)] = Quaternion::one();
        }
        m
    }

    pub fn diag(entries: &[Quaternion<T>]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (d, q) in entries.iter().enumerate() {
            m[(d, d)] = *q;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Quaternion<T>>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Parse("ragged matrix: rows differ in length".into()));
        }
        Ok(QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Quaternion<T>>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(QMatrix { rows, cols, data })
    }

    /// Columns become the matrix, e.g. to assemble a basis into `B`.
    pub fn from_columns(cols: &[QVector<T>]) -> Result<Self> {
        let n = cols.first().map(QVector::len).ok_or(Error::EmptySubspace)?;
        if cols.iter().any(|c| c.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: cols.iter().map(QVector::len).find(|&l| l != n).unwrap_or(n),
            });
        }
        let mut m = Self::zeros(n, cols.len());
        for (ci, col) in cols.iter().enumerate() {
            for r in 0..n {
                m[(r, ci)] = col[r];
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    pub fn entries(&self) -> &[Quaternion<T>] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Quaternion<T>] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> QVector<T> {
        QVector::from_vec((0..self.rows).map(|r| self[(r, c)]).collect())
    }

    /// Matrix product; entry order matters, `sum_k self[r][k] * other[k][c]`.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    out[(r, c)] = out[(r, c)] + a * other[(k, c)];
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose `M*`.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)].conjugate();
            }
        }
        out
    }

    /// `M v` for a column vector.
    pub fn apply(&self, v: &QVector<T>) -> Result<QVector<T>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = QVector::zeros(self.rows);
        for r in 0..self.rows {
            let mut acc = Quaternion::zero();
            for c in 0..self.cols {
                acc = acc + self[(r, c)] * v[c];
            }
            out[r] = acc;
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| *a + *b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| *a - *b)
                .collect(),
        })
    }

    pub fn scale(&self, s: T) -> Self {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|q| q.scale(s)).collect(),
        }
    }

    /// Left scalar multiple `q * M`.
    pub fn scale_left(&self, q: Quaternion<T>) -> Self {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| q * *e).collect(),
        }
    }

    /// `M - lambda I` for a square matrix.
    pub fn sub_scalar_diag(&self, lambda: Quaternion<T>) -> Result<Self> {
        self.require_square()?;
        let mut out = self.clone();
        for d in 0..self.rows {
            out[(d, d)] = out[(d, d)] - lambda;
        }
        Ok(out)
    }

    /// Hermitian part `(M + M*) / 2`.
    pub fn hermitian_part(&self) -> Result<Self> {
        self.require_square()?;
        Ok(self.add(&self.adjoint())?.scale(half::<T>()))
    }

    pub fn trace(&self) -> Result<Quaternion<T>> {
        self.require_square()?;
        let mut acc = Quaternion::zero();
        for d in 0..self.rows {
            acc = acc + self[(d, d)];
        }
        Ok(acc)
    }

    pub fn max_entry_norm(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |acc, q| acc.max(q.norm()))
    }

    pub fn frobenius_norm(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |acc, q| acc + q.norm_sqr())
            .sqrt()
    }

    /// Max entrywise deviation from `M*`; zero exactly when Hermitian.
    pub fn hermitian_deviation(&self) -> Result<T> {
        self.require_square()?;
        let mut dev = T::zero();
        for r in 0..self.rows {
            for c in r..self.cols {
                dev = dev.max((self[(r, c)] - self[(c, r)].conjugate()).norm());
            }
        }
        Ok(dev)
    }

    /// Entrywise deviation: max |M - M*| <= tol.
    pub fn is_hermitian(&self, tol: T) -> Result<bool> {
        Ok(self.hermitian_deviation()? <= tol)
    }

    /// Max entrywise deviation of `M* M` from the identity.
    pub fn symplectic_deviation(&self) -> Result<T> {
        self.require_square()?;
        let prod = self.adjoint().matmul(self)?;
        let mut dev = T::zero();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let expected = if r == c {
                    Quaternion::one()
                } else {
                    Quaternion::zero()
                };
                dev = dev.max((prod[(r, c)] - expected).norm());
            }
        }
        Ok(dev)
    }

    /// Whether `M* M = I` entrywise within `tol`.
    pub fn is_symplectic(&self, tol: T) -> Result<bool> {
        Ok(self.symplectic_deviation()? <= tol)
    }

    /// The complex adjoint: writing `M = U + j V` entrywise (see
    /// [`Quaternion::complex_pair`]), this is the `2n x 2n` complex matrix
    ///
    /// ```text
    /// [ U   -conj(V) ]
    /// [ V    conj(U) ]
    /// ```
    ///
    /// The map is an injective morphism of real algebras, so products, sums
    /// and adjoints pass through it.
    pub fn complex_adjoint(&self) -> Result<ComplexMatrix<T>> {
        self.require_square()?;
        let n = self.rows;
        let mut out = ComplexMatrix::zeros(2 * n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                let (u, v) = self[(r, c)].complex_pair();
                out[(r, c)] = u;
                out[(r, n + c)] = -v.conj();
                out[(n + r, c)] = v;
                out[(n + r, n + c)] = u.conj();
            }
        }
        Ok(out)
    }

    /// Stacks the complex pair of a quaternionic vector, `u = a + j b`
    /// becoming `(a; b)`, so that `complex_adjoint(M) * (a; b)` stacks
    /// `M u`.
    pub fn stack_complex(v: &QVector<T>) -> Vec<Complex<T>> {
        let n = v.len();
        let mut out = vec![Complex::new(T::zero(), T::zero()); 2 * n];
        for l in 0..n {
            let (a, b) = v[l].complex_pair();
            out[l] = a;
            out[n + l] = b;
        }
        out
    }

    /// Inverse of [`stack_complex`](Self::stack_complex).
    pub fn unstack_complex(stacked: &[Complex<T>]) -> QVector<T> {
        let n = stacked.len() / 2;
        QVector::from_vec(
            (0..n)
                .map(|l| Quaternion::from_complex_pair(stacked[l], stacked[n + l]))
                .collect(),
        )
    }

    /// Block-diagonal sum `A (+) B`.
    pub fn direct_sum(a: &Self, b: &Self) -> Self {
        let mut out = Self::zeros(a.rows + b.rows, a.cols + b.cols);
        for r in 0..a.rows {
            for c in 0..a.cols {
                out[(r, c)] = a[(r, c)];
            }
        }
        for r in 0..b.rows {
            for c in 0..b.cols {
                out[(a.rows + r, a.cols + c)] = b[(r, c)];
            }
        }
        out
    }
}

impl<T: Scalar> std::ops::Index<(usize, usize)> for QMatrix<T> {
    type Output = Quaternion<T>;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Quaternion<T> {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<T: Scalar> std::ops::IndexMut<(usize, usize)> for QMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Quaternion<T> {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_qmatrix, seeded_rng};

    type Q = Quaternion<f64>;
    type M = QMatrix<f64>;

    fn q(w: f64, x: f64, y: f64, z: f64) -> Q {
        Q::new(w, x, y, z)
    }

    /// The 2x2 fixture [[0, j], [i, 0]] that threads through the whole
    /// test suite.
    pub(crate) fn fixture_ji() -> M {
        M::from_rows(vec![
            vec![Q::zero(), Q::j()],
            vec![Q::i(), Q::zero()],
        ])
        .unwrap()
    }

    #[test]
    fn matmul_examples() {
        let id = M::identity(2);
        let m = fixture_ji();
        assert_eq!(m.matmul(&id).unwrap(), m);
        assert_eq!(id.matmul(&m).unwrap(), m);

        // order matters entrywise: diag(i) * diag(j) = diag(k), reversed gives -k
        let a = M::diag(&[Q::i()]);
        let b = M::diag(&[Q::j()]);
        assert_eq!(a.matmul(&b).unwrap()[(0, 0)], Q::k());
        assert_eq!(b.matmul(&a).unwrap()[(0, 0)], -Q::k());
    }

    #[test]
    fn adjoint_examples() {
        let m = fixture_ji();
        let a = m.adjoint();
        assert_eq!(a[(0, 0)], Q::zero());
        assert_eq!(a[(0, 1)], -Q::i());
        assert_eq!(a[(1, 0)], -Q::j());
        assert_eq!(m.adjoint().adjoint(), m);
    }

    #[test]
    fn apply_example() {
        let m = fixture_ji();
        let v = QVector::from_vec(vec![Q::one(), Q::one()]);
        let mv = m.apply(&v).unwrap();
        assert_eq!(mv[0], Q::j());
        assert_eq!(mv[1], Q::i());
    }

    #[test]
    fn hermitian_and_symplectic_checks() {
        let h = M::from_rows(vec![
            vec![Q::zero(), q(1.0, 1.0, 0.0, 0.0)],
            vec![q(1.0, -1.0, 0.0, 0.0), Q::zero()],
        ])
        .unwrap();
        assert!(h.is_hermitian(1e-12).unwrap());

        let not_h = M::from_rows(vec![
            vec![Q::zero(), q(1.0, 1.0, 0.0, 0.0)],
            vec![q(1.0, 1.0, 0.0, 0.0), Q::zero()],
        ])
        .unwrap();
        assert!(!not_h.is_hermitian(1e-12).unwrap());

        // (sqrt(2)/2) j [[1, -1], [1, 1]] has orthonormal columns
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let rot = M::from_rows(vec![
            vec![q(0.0, 0.0, s, 0.0), q(0.0, 0.0, -s, 0.0)],
            vec![q(0.0, 0.0, s, 0.0), q(0.0, 0.0, s, 0.0)],
        ])
        .unwrap();
        assert!(rot.is_symplectic(1e-12).unwrap());
        assert!(fixture_ji().is_symplectic(1e-12).unwrap());
        assert!(!M::diag(&[Q::one().scale(2.0)]).is_symplectic(1e-9).unwrap());

        let rect = M::zeros(2, 3);
        assert!(matches!(rect.is_hermitian(1e-9), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn complex_adjoint_fixture() {
        // M = [[0, j], [i, 0]] -> U = [[0,0],[i,0]], V = [[0,1],[0,0]]
        let c = fixture_ji().complex_adjoint().unwrap();
        let z = Complex::new(0.0, 0.0);
        let one = Complex::new(1.0, 0.0);
        let im = Complex::new(0.0, 1.0);
        let expected = [
            [z, z, z, -one],
            [im, z, z, z],
            [z, one, z, z],
            [z, z, -im, z],
        ];
        for r in 0..4 {
            for col in 0..4 {
                assert_eq!(c[(r, col)], expected[r][col], "entry ({r},{col})");
            }
        }
        assert_eq!(
            M::identity(2).complex_adjoint().unwrap(),
            ComplexMatrix::identity(4)
        );
    }

    #[test]
    fn complex_adjoint_is_morphism() {
        let mut rng = seeded_rng(7);
        for _ in 0..25 {
            let m = random_qmatrix::<f64, _>(3, 3, &mut rng);
            let n = random_qmatrix::<f64, _>(3, 3, &mut rng);
            let lhs = m.matmul(&n).unwrap().complex_adjoint().unwrap();
            let rhs = m
                .complex_adjoint()
                .unwrap()
                .matmul(&n.complex_adjoint().unwrap())
                .unwrap();
            assert!(lhs.sub(&rhs).max_abs() <= 1e-12 * (1.0 + lhs.max_abs()));

            let adj_lhs = m.adjoint().complex_adjoint().unwrap();
            let adj_rhs = m.complex_adjoint().unwrap().adjoint();
            assert!(adj_lhs.sub(&adj_rhs).max_abs() == 0.0);
        }
    }

    #[test]
    fn complex_adjoint_is_injective() {
        let mut rng = seeded_rng(11);
        let m = random_qmatrix::<f64, _>(3, 3, &mut rng);
        let mut perturbed = m.clone();
        perturbed[(1, 2)] = perturbed[(1, 2)] + Q::new(1e-9, 0.0, 0.0, 0.0);
        let diff = m
            .complex_adjoint()
            .unwrap()
            .sub(&perturbed.complex_adjoint().unwrap())
            .max_abs();
        assert!(diff > 0.0);

        // and the blocks reconstruct the matrix exactly
        let c = m.complex_adjoint().unwrap();
        for r in 0..3 {
            for col in 0..3 {
                let rebuilt = Q::from_complex_pair(c[(r, col)], c[(3 + r, col)]);
                assert_eq!(rebuilt, m[(r, col)]);
            }
        }
    }

    #[test]
    fn stacking_intertwines_application() {
        let mut rng = seeded_rng(13);
        let m = random_qmatrix(4, 4, &mut rng);
        let v = crate::random::random_qvector(4, &mut rng);
        let mv = m.apply(&v).unwrap();

        let c = m.complex_adjoint().unwrap();
        let stacked = M::stack_complex(&v);
        let mut out = vec![Complex::new(0.0, 0.0); 8];
        for r in 0..8 {
            for k in 0..8 {
                out[r] += c[(r, k)] * stacked[k];
            }
        }
        let back = M::unstack_complex(&out);
        assert!(back.dist(&mv) <= 1e-12 * (1.0 + mv.norm()));
    }

    #[test]
    fn direct_sum_examples() {
        let a = M::diag(&[Q::one()]);
        let b = M::diag(&[Q::i()]);
        let s = M::direct_sum(&a, &b);
        assert_eq!(s.rows(), 2);
        assert_eq!(s[(0, 0)], Q::one());
        assert_eq!(s[(1, 1)], Q::i());
        assert_eq!(s[(0, 1)], Q::zero());

        // Hermitian blocks give a Hermitian sum
        let h = M::from_rows(vec![
            vec![Q::zero(), Q::i()],
            vec![-Q::i(), Q::zero()],
        ])
        .unwrap();
        let hh = M::direct_sum(&h, &h);
        assert!(hh.is_hermitian(0.0).unwrap());
    }
}
