//! Dense structure-constant tensors with sparse iteration.
//!
//! Layouts are row-major with the last index contiguous, so the fiber over
//! the leading indices (the expansion of one structure operation applied to
//! basis elements) is a contiguous slice.

use crate::scalar::{FieldSpec, Scalar};

/// Three-index tensor, e.g. comultiplication `D[i][j][k]`, multiplication
/// `M[i][j][k]`, or a module action `A[i][j][k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    dims: (usize, usize, usize),
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: FieldSpec, d0: usize, d1: usize, d2: usize) -> Self {
        Tensor3 {
            dims: (d0, d1, d2),
            field,
            data: vec![field.zero(); d0 * d1 * d2],
        }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        let (d0, d1, d2) = self.dims;
        assert!(
            i < d0 && j < d1 && k < d2,
            "tensor index ({i},{j},{k}) out of range"
        );
        (i * d1 + j) * d2 + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.offset(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "entry outside field");
        let o = self.offset(i, j, k);
        self.data[o] = v;
    }

    /// Contiguous fiber over the last index.
    pub fn fiber(&self, i: usize, j: usize) -> &[Scalar] {
        let o = self.offset(i, j, 0);
        &self.data[o..o + self.dims.2]
    }

    pub fn iter_nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let (_, d1, d2) = self.dims;
        self.data.iter().enumerate().filter_map(move |(o, s)| {
            if s.is_zero() {
                None
            } else {
                let k = o % d2;
                let j = (o / d2) % d1;
                let i = o / (d1 * d2);
                Some((i, j, k, s))
            }
        })
    }
}

/// Four-index tensor: the heap operation `X[i][j][k][l]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor4 {
    dims: (usize, usize, usize, usize),
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Tensor4 {
    pub fn zeros(field: FieldSpec, d0: usize, d1: usize, d2: usize, d3: usize) -> Self {
        Tensor4 {
            dims: (d0, d1, d2, d3),
            field,
            data: vec![field.zero(); d0 * d1 * d2 * d3],
        }
    }

    pub fn dims(&self) -> (usize, usize, usize, usize) {
        self.dims
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    fn offset(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        let (d0, d1, d2, d3) = self.dims;
        assert!(
            i < d0 && j < d1 && k < d2 && l < d3,
            "tensor index ({i},{j},{k},{l}) out of range"
        );
        ((i * d1 + j) * d2 + k) * d3 + l
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        &self.data[self.offset(i, j, k, l)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "entry outside field");
        let o = self.offset(i, j, k, l);
        self.data[o] = v;
    }

    /// Contiguous fiber over the last index: the expansion of one basis triple.
    pub fn fiber(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        let o = self.offset(i, j, k, 0);
        &self.data[o..o + self.dims.3]
    }

    pub fn iter_nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, usize, &Scalar)> {
        let (_, d1, d2, d3) = self.dims;
        self.data.iter().enumerate().filter_map(move |(o, s)| {
            if s.is_zero() {
                None
            } else {
                let l = o % d3;
                let k = (o / d3) % d2;
                let j = (o / (d2 * d3)) % d1;
                let i = o / (d1 * d2 * d3);
                Some((i, j, k, l, s))
            }
        })
    }
}
