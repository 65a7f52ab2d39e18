//! Exact dense linear algebra over a [`FieldSpec`]: reduced row echelon form,
//! solving, kernels, canonical subspace bases and quotient spaces.
//!
//! Subspaces are kept in RREF so that subspace equality is representation
//! equality; quotients pick the non-pivot coordinates as a deterministic
//! complement.

use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("linear system is inconsistent")]
    Inconsistent,
}

/// Flat index of a basis pair `(i, j)` of a tensor product whose second
/// factor has dimension `cols`.
pub fn pair_index(i: usize, j: usize, cols: usize) -> usize {
    assert!(j < cols, "pair_index: j = {j} out of range (cols = {cols})");
    i * cols + j
}

/// Inverse of [`pair_index`].
pub fn pair_unindex(flat: usize, cols: usize) -> (usize, usize) {
    (flat / cols, flat % cols)
}

/// Dense row-major matrix over one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        assert!(
            data.iter().all(|s| s.field() == field),
            "entry outside field"
        );
        Matrix {
            rows: r,
            cols: c,
            field,
            data,
        }
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        f: impl Fn(usize, usize) -> Scalar,
    ) -> Self {
        let mut m = Matrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        assert_eq!(v.field(), self.field, "entry outside field");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "product shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Applies the matrix to a coordinate column.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "apply shape mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                out[i] = &out[i] + &(a * x);
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "sum shape mismatch"
        );
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.get(i, j) + rhs.get(i, j)
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m.get(r, c).inv().expect("pivot nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Solves `self * x = rhs` exactly, zeroing free variables.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if rhs.len() != self.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "rhs length {} vs {} rows",
                rhs.len(),
                self.rows
            )));
        }
        // eliminate on the augmented matrix
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Err(LinalgError::Inconsistent);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = red.get(r, self.cols).clone();
        }
        Ok(x)
    }

    /// Two-sided inverse, if the matrix is square and invertible.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &c)| k != c) {
            return None;
        }
        Some(Matrix::from_fn(self.field, n, n, |i, j| {
            red.get(i, n + j).clone()
        }))
    }

    /// RREF basis of the right kernel `{x : self * x = 0}`.
    pub fn kernel(&self) -> SubspaceBasis {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut vecs = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = red.get(r, f).neg();
            }
            vecs.push(v);
        }
        SubspaceBasis::span(self.field, self.cols, vecs)
    }
}

/// A subspace in canonical form: nonzero RREF rows with recorded pivots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    field: FieldSpec,
    rows: Matrix,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    /// Canonical basis of the span of the given vectors.
    pub fn span(field: FieldSpec, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "span: vector length vs ambient");
        }
        if vectors.is_empty() {
            return SubspaceBasis {
                ambient,
                field,
                rows: Matrix::zeros(field, 0, ambient),
                pivots: Vec::new(),
            };
        }
        let m = Matrix::from_rows(field, vectors);
        let (red, pivots) = m.rref();
        let rank = pivots.len();
        let rows = Matrix::from_fn(field, rank, ambient, |i, j| red.get(i, j).clone());
        SubspaceBasis {
            ambient,
            field,
            rows,
            pivots,
        }
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        SubspaceBasis::span(field, ambient, Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn basis_rows(&self) -> &Matrix {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vector(&self, i: usize) -> &[Scalar] {
        self.rows.row(i)
    }

    /// Membership test via reduction against the RREF rows.
    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Reduces `v` modulo the subspace: subtracts the unique combination of
    /// basis rows matching `v` on the pivot coordinates.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "reduce: ambient mismatch");
        let mut w = v.to_vec();
        for (r, &c) in self.pivots.iter().enumerate() {
            if w[c].is_zero() {
                continue;
            }
            let f = w[c].clone();
            for j in 0..self.ambient {
                let b = self.rows.get(r, j);
                if !b.is_zero() {
                    w[j] = &w[j] - &(&f * b);
                }
            }
        }
        w
    }

    /// Coordinates of a member vector in the RREF basis; `None` if outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c].clone()).collect())
    }

    pub fn equals(&self, other: &SubspaceBasis) -> bool {
        self.ambient == other.ambient && self.rows == other.rows
    }

    pub fn contains(&self, other: &SubspaceBasis) -> bool {
        self.ambient == other.ambient
            && (0..other.dim()).all(|i| self.contains_vector(other.basis_vector(i)))
    }

    pub fn sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(self.ambient, other.ambient, "sum: ambient mismatch");
        let mut vecs: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|i| self.basis_vector(i).to_vec())
            .collect();
        vecs.extend((0..other.dim()).map(|i| other.basis_vector(i).to_vec()));
        SubspaceBasis::span(self.field, self.ambient, vecs)
    }

    /// Intersection via the kernel of the stacked coefficient matrix.
    pub fn intersect(&self, other: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(self.ambient, other.ambient, "intersect: ambient mismatch");
        let du = self.dim();
        let dw = other.dim();
        if du == 0 || dw == 0 {
            return SubspaceBasis::zero(self.field, self.ambient);
        }
        // columns: coefficients (a, b) with sum_a a_i u_i - sum_b b_j w_j = 0
        let m = Matrix::from_fn(self.field, self.ambient, du + dw, |row, col| {
            if col < du {
                self.rows.get(col, row).clone()
            } else {
                other.rows.get(col - du, row).neg()
            }
        });
        let ker = m.kernel();
        let vecs = (0..ker.dim())
            .map(|k| {
                let coeffs = ker.basis_vector(k);
                let mut v = vec![self.field.zero(); self.ambient];
                for (i, a) in coeffs[..du].iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for j in 0..self.ambient {
                        v[j] = &v[j] + &(a * self.rows.get(i, j));
                    }
                }
                v
            })
            .collect();
        SubspaceBasis::span(self.field, self.ambient, vecs)
    }

    /// Deterministic quotient by this subspace: the non-pivot coordinates
    /// serve as the complement.
    pub fn quotient(&self) -> QuotientData {
        let complement: Vec<usize> = (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect();
        let q = complement.len();
        // projection: reduce modulo the subspace, then read complement coords
        let mut projection = Matrix::zeros(self.field, q, self.ambient);
        for amb in 0..self.ambient {
            let mut e = vec![self.field.zero(); self.ambient];
            e[amb] = self.field.one();
            let red = self.reduce(&e);
            for (qi, &c) in complement.iter().enumerate() {
                projection.set(qi, amb, red[c].clone());
            }
        }
        let mut section = Matrix::zeros(self.field, self.ambient, q);
        for (qi, &c) in complement.iter().enumerate() {
            section.set(c, qi, self.field.one());
        }
        QuotientData {
            ambient: self.ambient,
            subspace: self.clone(),
            complement,
            projection,
            section,
        }
    }
}

/// A quotient space presented by a projection and a section.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientData {
    ambient: usize,
    subspace: SubspaceBasis,
    complement: Vec<usize>,
    projection: Matrix,
    section: Matrix,
}

impl QuotientData {
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn subspace(&self) -> &SubspaceBasis {
        &self.subspace
    }

    pub fn complement_indices(&self) -> &[usize] {
        &self.complement
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.apply(v)
    }

    pub fn lift(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.section.apply(v)
    }
}

/// In-place `dst += c * src` on coordinate vectors.
pub fn add_scaled(dst: &mut [Scalar], c: &Scalar, src: &[Scalar]) {
    assert_eq!(dst.len(), src.len());
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = &*d + &(c * s);
        }
    }
}

/// Tensor (Kronecker) product of coordinate vectors.
pub fn vec_tensor(field: FieldSpec, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); a.len() * b.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[pair_index(i, j, b.len())] = x * y;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qs(v: i64) -> Scalar {
        FieldSpec::Rationals.from_i64(v)
    }

    fn qmat(rows: Vec<Vec<i64>>) -> Matrix {
        Matrix::from_rows(
            FieldSpec::Rationals,
            rows.into_iter()
                .map(|r| r.into_iter().map(qs).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_identity() {
        let m = Matrix::identity(FieldSpec::Rationals, 3);
        let (r, p) = m.rref();
        assert_eq!(r, m);
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn rref_rank_one() {
        let m = qmat(vec![vec![1, 2], vec![2, 4]]);
        let (r, p) = m.rref();
        assert_eq!(r, qmat(vec![vec![1, 2], vec![0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_mod_2() {
        let f2 = FieldSpec::prime_field(2).unwrap();
        let m = Matrix::from_rows(
            f2,
            vec![
                vec![f2.from_i64(1), f2.from_i64(1)],
                vec![f2.from_i64(1), f2.from_i64(0)],
            ],
        );
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::identity(f2, 2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn solve_with_free_variable() {
        let m = qmat(vec![vec![1, 1]]);
        assert_eq!(m.solve(&[qs(1)]).unwrap(), vec![qs(1), qs(0)]);
    }

    #[test]
    fn solve_inconsistent() {
        let m = qmat(vec![vec![1], vec![1]]);
        assert_eq!(m.solve(&[qs(1), qs(2)]), Err(LinalgError::Inconsistent));
    }

    #[test]
    fn solve_dimension_mismatch() {
        let m = qmat(vec![vec![1, 0]]);
        assert!(matches!(
            m.solve(&[qs(1), qs(2)]),
            Err(LinalgError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn subspace_sum_and_intersection() {
        let f = FieldSpec::Rationals;
        let u = SubspaceBasis::span(
            f,
            3,
            vec![vec![qs(1), qs(0), qs(0)], vec![qs(0), qs(1), qs(0)]],
        );
        let w = SubspaceBasis::span(
            f,
            3,
            vec![vec![qs(0), qs(1), qs(0)], vec![qs(0), qs(0), qs(1)]],
        );
        let s = u.sum(&w);
        assert_eq!(s.dim(), 3);
        let i = u.intersect(&w);
        assert_eq!(i.dim(), 1);
        assert!(i.contains_vector(&[qs(0), qs(1), qs(0)]));
        // dim(U) + dim(W) = dim(U+W) + dim(U∩W)
        assert_eq!(u.dim() + w.dim(), s.dim() + i.dim());
        // intersection with a skew line
        let l = SubspaceBasis::span(f, 3, vec![vec![qs(1), qs(1), qs(1)]]);
        assert_eq!(u.intersect(&l).dim(), 0);
        assert_eq!(u.sum(&l).dim(), 3);
    }

    #[test]
    fn solve_identity() {
        let m = Matrix::identity(FieldSpec::Rationals, 3);
        let v = vec![qs(4), qs(-1), qs(7)];
        assert_eq!(m.solve(&v).unwrap(), v);
    }

    #[test]
    fn kernel_of_sum_functional() {
        let m = qmat(vec![vec![1, 1]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis_vector(0), &[qs(1), qs(-1)][..]);
    }

    #[test]
    fn subspace_equality_and_containment() {
        let full = SubspaceBasis::span(
            FieldSpec::Rationals,
            2,
            vec![vec![qs(1), qs(0)], vec![qs(1), qs(1)]],
        );
        let whole = SubspaceBasis::span(
            FieldSpec::Rationals,
            2,
            vec![vec![qs(1), qs(0)], vec![qs(0), qs(1)]],
        );
        assert!(full.equals(&whole));
        let line = SubspaceBasis::span(FieldSpec::Rationals, 2, vec![vec![qs(1), qs(0)]]);
        assert!(!line.contains_vector(&[qs(0), qs(1)]));
        assert!(whole.contains(&line));
    }

    #[test]
    fn quotient_by_zero_subspace() {
        let z = SubspaceBasis::zero(FieldSpec::Rationals, 3);
        let q = z.quotient();
        assert_eq!(q.dim(), 3);
        assert!(q.projection().is_identity());
    }

    #[test]
    fn quotient_by_full_space() {
        let full = SubspaceBasis::span(
            FieldSpec::Rationals,
            2,
            vec![vec![qs(1), qs(0)], vec![qs(0), qs(1)]],
        );
        assert_eq!(full.quotient().dim(), 0);
    }

    #[test]
    fn quotient_by_diagonal_line() {
        let line = SubspaceBasis::span(FieldSpec::Rationals, 2, vec![vec![qs(1), qs(1)]]);
        let q = line.quotient();
        assert_eq!(q.dim(), 1);
        // projection annihilates the subspace
        assert!(q.project(&[qs(1), qs(1)]).iter().all(Scalar::is_zero));
        // section then projection is the identity on quotient coordinates
        assert_eq!(q.project(&q.lift(&[qs(5)])), vec![qs(5)]);
    }

    #[test]
    fn pair_index_round_trip() {
        assert_eq!(pair_index(0, 0, 4), 0);
        assert_eq!(pair_index(1, 2, 4), 6);
        assert_eq!(pair_unindex(6, 4), (1, 2));
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            prop::collection::vec(-6i64..6, r * c).prop_map(move |vals| {
                Matrix::from_fn(FieldSpec::Rationals, r, c, |i, j| qs(vals[i * c + j]))
            })
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in arb_matrix()) {
            let (r1, p1) = m.rref();
            let (r2, p2) = r1.rref();
            prop_assert_eq!(r1, r2);
            prop_assert_eq!(p1, p2);
        }

        #[test]
        fn rank_nullity(m in arb_matrix()) {
            prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        }

        #[test]
        fn quotient_invariants(m in arb_matrix()) {
            let sub = SubspaceBasis::span(
                m.field(),
                m.cols(),
                (0..m.rows()).map(|i| m.row(i).to_vec()).collect(),
            );
            let q = sub.quotient();
            prop_assert_eq!(q.dim() + sub.dim(), q.ambient_dim());
            // projection kills exactly the subspace
            for i in 0..sub.dim() {
                prop_assert!(q.project(sub.basis_vector(i)).iter().all(Scalar::is_zero));
            }
            prop_assert!(q.projection().mul(q.section()).is_identity());
            prop_assert!(q.projection().kernel().equals(&sub));
        }
    }
}
