//! Finite-dimensional coalgebras as structure-constant data.
//!
//! A coalgebra is stored as a comultiplication tensor `D` with `D[i][j][k]`
//! the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`, together with the counit
//! vector. Axioms are never assumed: [`Coalgebra::check`] verifies them
//! exactly and reports the first violation in lexicographic order.

use crate::linalg::{pair_index, Matrix};
use crate::report::{CheckReport, Violation};
use crate::scalar::{FieldSpec, Scalar};
use crate::tensor::Tensor3;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoalgebraError {
    #[error("shape mismatch: {0}")]
    Shape(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coalgebra {
    field: FieldSpec,
    dim: usize,
    comul: Tensor3,
    counit: Vec<Scalar>,
    labels: Option<Vec<String>>,
}

impl Coalgebra {
    pub fn new(
        field: FieldSpec,
        comul: Tensor3,
        counit: Vec<Scalar>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, CoalgebraError> {
        let dim = counit.len();
        if dim == 0 {
            return Err(CoalgebraError::Shape(
                "dimension must be at least one".into(),
            ));
        }
        if comul.dims() != (dim, dim, dim) {
            return Err(CoalgebraError::Shape(format!(
                "comultiplication tensor dims {:?} vs dimension {dim}",
                comul.dims()
            )));
        }
        if comul.field() != field || counit.iter().any(|s| s.field() != field) {
            return Err(CoalgebraError::Shape(
                "structure constants outside the declared field".into(),
            ));
        }
        if let Some(l) = &labels {
            if l.len() != dim {
                return Err(CoalgebraError::Shape(
                    "label list length vs dimension".into(),
                ));
            }
        }
        Ok(Coalgebra {
            field,
            dim,
            comul,
            counit,
            labels,
        })
    }

    /// The ground field viewed as a one-dimensional coalgebra.
    pub fn ground(field: FieldSpec) -> Self {
        Coalgebra::grouplike_basis(field, 1)
    }

    /// The coalgebra spanned by `n` grouplike basis vectors.
    pub fn grouplike_basis(field: FieldSpec, n: usize) -> Self {
        let mut comul = Tensor3::zeros(field, n, n, n);
        for i in 0..n {
            comul.set(i, i, i, field.one());
        }
        Coalgebra::new(field, comul, vec![field.one(); n], None).expect("valid by construction")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comul(&self) -> &Tensor3 {
        &self.comul
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = Some(labels);
        self
    }

    /// Counit of a coordinate vector.
    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        assert_eq!(v.len(), self.dim);
        let mut acc = self.field.zero();
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                acc = &acc + &(x * &self.counit[i]);
            }
        }
        acc
    }

    /// `Δ(v)` as a dense vector over the `n²` pair basis.
    pub fn delta_of(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim);
        let n = self.dim;
        let mut out = vec![self.field.zero(); n * n];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k) in self.comul_support(i) {
                let c = self.comul.get(i, j, k);
                out[pair_index(j, k, n)] = &out[pair_index(j, k, n)] + &(x * c);
            }
        }
        out
    }

    fn comul_support(&self, i: usize) -> Vec<(usize, usize)> {
        let n = self.dim;
        let mut s = Vec::new();
        for j in 0..n {
            for (k, c) in self.comul.fiber(i, j).iter().enumerate() {
                if !c.is_zero() {
                    s.push((j, k));
                }
            }
        }
        s
    }

    /// Iterated coproduct of `e_i` over `legs` tensor legs, as a dense vector
    /// of length `n^legs` (first leg most significant in the flat index).
    pub fn iterated_coproduct(&self, i: usize, legs: usize) -> Vec<Scalar> {
        assert!(legs >= 1);
        let n = self.dim;
        let mut cur = vec![self.field.zero(); n];
        cur[i] = self.field.one();
        for _ in 1..legs {
            let mut next = vec![self.field.zero(); cur.len() * n];
            for (f, x) in cur.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let (base, s) = (f / n, f % n);
                for (u, v) in self.comul_support(s) {
                    let idx = (base * n + u) * n + v;
                    next[idx] = &next[idx] + &(x * self.comul.get(s, u, v));
                }
            }
            cur = next;
        }
        cur
    }

    /// First basis vector with nonzero counit, rescaled so its counit is one.
    ///
    /// This is the canonical choice of the distinguished element used by the
    /// Grunspan-map and antipode formulas; independence of the choice is a
    /// tested property, not an assumption.
    pub fn counit_one_vector(&self) -> Vec<Scalar> {
        for (i, eps) in self.counit.iter().enumerate() {
            if !eps.is_zero() {
                let mut v = vec![self.field.zero(); self.dim];
                v[i] = eps.inv().expect("nonzero");
                return v;
            }
        }
        panic!("coalgebra has identically zero counit");
    }

    /// Every basis vector with nonzero counit, rescaled to counit one.
    pub fn all_counit_one_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim)
            .filter(|&i| !self.counit[i].is_zero())
            .map(|i| {
                let mut v = vec![self.field.zero(); self.dim];
                v[i] = self.counit[i].inv().expect("nonzero");
                v
            })
            .collect()
    }

    /// Checks coassociativity and both counit laws exactly.
    pub fn check(&self) -> CheckReport {
        CheckReport::from_violation("coalgebra", self.first_violation())
    }

    fn first_violation(&self) -> Option<Violation> {
        let n = self.dim;
        // coassociativity: sum_t D[i][t][k] D[t][a][b] = sum_t D[i][a][t] D[t][b][k]
        for i in 0..n {
            for a in 0..n {
                for b in 0..n {
                    for k in 0..n {
                        let mut lhs = self.field.zero();
                        let mut rhs = self.field.zero();
                        for t in 0..n {
                            let l = self.comul.get(i, t, k);
                            if !l.is_zero() {
                                lhs = &lhs + &(l * self.comul.get(t, a, b));
                            }
                            let r = self.comul.get(i, a, t);
                            if !r.is_zero() {
                                rhs = &rhs + &(r * self.comul.get(t, b, k));
                            }
                        }
                        if lhs != rhs {
                            return Some(Violation::new("coassociativity", vec![i, a, b, k]));
                        }
                    }
                }
            }
        }
        // counit laws: (eps ⊗ id) Δ = id = (id ⊗ eps) Δ
        for i in 0..n {
            for k in 0..n {
                let mut left = self.field.zero();
                let mut right = self.field.zero();
                for t in 0..n {
                    let dl = self.comul.get(i, t, k);
                    if !dl.is_zero() {
                        left = &left + &(dl * &self.counit[t]);
                    }
                    let dr = self.comul.get(i, k, t);
                    if !dr.is_zero() {
                        right = &right + &(dr * &self.counit[t]);
                    }
                }
                let delta = if i == k {
                    self.field.one()
                } else {
                    self.field.zero()
                };
                if left != delta {
                    return Some(Violation::new("counit_left", vec![i, k]));
                }
                if right != delta {
                    return Some(Violation::new("counit_right", vec![i, k]));
                }
            }
        }
        None
    }

    /// The co-opposite coalgebra: last two tensor slots swapped.
    pub fn co_opposite(&self) -> Coalgebra {
        let n = self.dim;
        let mut comul = Tensor3::zeros(self.field, n, n, n);
        for (i, j, k, c) in self.comul.iter_nonzero() {
            comul.set(i, k, j, c.clone());
        }
        Coalgebra {
            field: self.field,
            dim: n,
            comul,
            counit: self.counit.clone(),
            labels: self.labels.clone(),
        }
    }

    /// Tensor-product coalgebra in `pair_index` coordinates.
    pub fn tensor(&self, other: &Coalgebra) -> Result<Coalgebra, CoalgebraError> {
        if self.field != other.field {
            return Err(CoalgebraError::Shape(format!(
                "field mismatch: {} vs {}",
                self.field, other.field
            )));
        }
        let (na, nb) = (self.dim, other.dim);
        let n = na * nb;
        let mut comul = Tensor3::zeros(self.field, n, n, n);
        for (i, j1, j2, c1) in self.comul.iter_nonzero() {
            for (i2, k1, k2, c2) in other.comul.iter_nonzero() {
                comul.set(
                    pair_index(i, i2, nb),
                    pair_index(j1, k1, nb),
                    pair_index(j2, k2, nb),
                    c1 * c2,
                );
            }
        }
        let mut counit = Vec::with_capacity(n);
        for i in 0..na {
            for j in 0..nb {
                counit.push(&self.counit[i] * &other.counit[j]);
            }
        }
        let labels = match (&self.labels, &other.labels) {
            (Some(a), Some(b)) => {
                let mut l = Vec::with_capacity(n);
                for x in a {
                    for y in b {
                        l.push(format!("{x}⊗{y}"));
                    }
                }
                Some(l)
            }
            _ => None,
        };
        Coalgebra::new(self.field, comul, counit, labels)
    }

    /// Whether `Δ(v) = v ⊗ v` and `ε(v) = 1` hold exactly.
    pub fn is_grouplike(&self, v: &[Scalar]) -> bool {
        if v.len() != self.dim || !self.counit_of(v).is_one() {
            return false;
        }
        let n = self.dim;
        let dv = self.delta_of(v);
        for j in 0..n {
            for k in 0..n {
                if dv[pair_index(j, k, n)] != &v[j] * &v[k] {
                    return false;
                }
            }
        }
        true
    }

    /// Scans for grouplike vectors among the counit-normalized basis vectors
    /// and a caller-supplied candidate list.
    ///
    /// Grouplikes solve the quadratic system `Δ(v) = v ⊗ v`, which is not
    /// solved in general here: candidates outside the basis lines must be
    /// supplied by the caller. All candidates are rescaled to counit one
    /// before testing (vectors of counit zero are never grouplike and are
    /// skipped). Every catalog structure has its grouplikes on the basis.
    pub fn grouplike_scan(&self, candidates: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
        let mut found: Vec<Vec<Scalar>> = Vec::new();
        let mut push = |cand: &[Scalar]| {
            if cand.len() != self.dim {
                return;
            }
            let eps = self.counit_of(cand);
            if eps.is_zero() {
                return;
            }
            let inv = eps.inv().expect("nonzero");
            let v: Vec<Scalar> = cand.iter().map(|x| x * &inv).collect();
            if self.is_grouplike(&v) && !found.contains(&v) {
                found.push(v);
            }
        };
        for i in 0..self.dim {
            let mut v = vec![self.field.zero(); self.dim];
            v[i] = self.field.one();
            push(&v);
        }
        for cand in candidates {
            push(cand);
        }
        found
    }
}

/// A linear map between coalgebras, stored as a `dim_target × dim_source`
/// matrix; the coalgebra-map laws are checked, never assumed.
#[derive(Debug, Clone)]
pub struct CoalgebraMorphism {
    pub source: Coalgebra,
    pub target: Coalgebra,
    pub matrix: Matrix,
}

impl CoalgebraMorphism {
    pub fn new(
        source: Coalgebra,
        target: Coalgebra,
        matrix: Matrix,
    ) -> Result<Self, CoalgebraError> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(CoalgebraError::Shape(format!(
                "morphism matrix {}×{} vs target {} and source {}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        if source.field() != target.field() || matrix.field() != source.field() {
            return Err(CoalgebraError::Shape("field mismatch in morphism".into()));
        }
        Ok(CoalgebraMorphism {
            source,
            target,
            matrix,
        })
    }

    /// Verifies `Δ_D ∘ f = (f ⊗ f) ∘ Δ_C` and `ε_D ∘ f = ε_C`.
    pub fn check(&self) -> CheckReport {
        CheckReport::from_violation(
            "coalgebra_morphism",
            check_coalgebra_map(&self.source, &self.target, &self.matrix),
        )
    }
}

/// First violation of the coalgebra-map laws for `f: source -> target`.
pub(crate) fn check_coalgebra_map(
    source: &Coalgebra,
    target: &Coalgebra,
    f: &Matrix,
) -> Option<Violation> {
    let (ns, nt) = (source.dim(), target.dim());
    assert_eq!((f.rows(), f.cols()), (nt, ns), "morphism shape");
    for i in 0..ns {
        // lhs: Δ_D(f(e_i))
        let fi = f.column(i);
        let lhs = target.delta_of(&fi);
        // rhs: (f ⊗ f)(Δ_C(e_i))
        let mut rhs = vec![source.field().zero(); nt * nt];
        for (j, k) in (0..ns).flat_map(|j| (0..ns).map(move |k| (j, k))) {
            let c = source.comul().get(i, j, k);
            if c.is_zero() {
                continue;
            }
            for a in 0..nt {
                let fa = f.get(a, j);
                if fa.is_zero() {
                    continue;
                }
                for b in 0..nt {
                    let fb = f.get(b, k);
                    if fb.is_zero() {
                        continue;
                    }
                    let idx = pair_index(a, b, nt);
                    rhs[idx] = &rhs[idx] + &(&(c * fa) * fb);
                }
            }
        }
        if lhs != rhs {
            return Some(Violation::new("morphism_comultiplicative", vec![i]));
        }
        if target.counit_of(&fi) != source.counit()[i] {
            return Some(Violation::new("morphism_counital", vec![i]));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn ground_coalgebra_passes() {
        assert!(Coalgebra::ground(q()).check().passed());
    }

    #[test]
    fn grouplike_coalgebra_passes() {
        assert!(Coalgebra::grouplike_basis(q(), 3).check().passed());
    }

    #[test]
    fn broken_counit_is_reported_with_witness() {
        let c = Coalgebra::grouplike_basis(q(), 3);
        let mut counit = c.counit().to_vec();
        counit[1] = q().zero();
        let broken = Coalgebra::new(q(), c.comul().clone(), counit, None).unwrap();
        let report = broken.check();
        assert!(!report.passed());
        let v = report.violation.unwrap();
        assert_eq!(v.axiom, "counit_left");
        assert_eq!(v.witness, vec![1, 1]);
    }

    #[test]
    fn co_opposite_is_an_involution_and_stays_valid() {
        let c = catalog::gen_sweedler(q()).unwrap().coalgebra;
        let cop = c.co_opposite();
        assert!(cop.check().passed());
        assert_eq!(cop.co_opposite(), c);
        // cocommutative coalgebras are fixed
        let g = Coalgebra::grouplike_basis(q(), 4);
        assert_eq!(g.co_opposite(), g);
    }

    #[test]
    fn co_opposite_swaps_sweedler_terms() {
        // Δx = x⊗1 + g⊗x, so the co-opposite has Δx = 1⊗x + x⊗g
        let c = catalog::gen_sweedler(q()).unwrap().coalgebra;
        let cop = c.co_opposite();
        let (x, one, g) = (2, 0, 1);
        assert!(cop.comul().get(x, one, x).is_one());
        assert!(cop.comul().get(x, x, g).is_one());
        assert!(cop.comul().get(x, x, one).is_zero());
    }

    #[test]
    fn tensor_of_grouplike_coalgebras() {
        let a = Coalgebra::grouplike_basis(q(), 2);
        let b = Coalgebra::grouplike_basis(q(), 3);
        let t = a.tensor(&b).unwrap();
        assert_eq!(t, Coalgebra::grouplike_basis(q(), 6));
    }

    #[test]
    fn tensor_with_ground_is_identity_up_to_indexing() {
        let c = catalog::gen_sweedler(q()).unwrap().coalgebra;
        let t = Coalgebra::ground(q()).tensor(&c).unwrap();
        assert_eq!(t.comul(), c.comul());
        assert_eq!(t.counit(), c.counit());
    }

    #[test]
    fn tensor_of_sweedler_coop_with_sweedler_is_valid() {
        let c = catalog::gen_sweedler(q()).unwrap().coalgebra;
        let t = c.co_opposite().tensor(&c).unwrap();
        assert_eq!(t.dim(), 16);
        assert!(t.check().passed());
    }

    #[test]
    fn tensor_is_associative_up_to_reassociation() {
        let a = catalog::gen_sweedler(q()).unwrap().coalgebra;
        let b = Coalgebra::grouplike_basis(q(), 2);
        let c = Coalgebra::ground(q());
        let left = a.tensor(&b).unwrap().tensor(&c).unwrap();
        let right = a.tensor(&b.tensor(&c).unwrap()).unwrap();
        // flat pair indices agree under both associations when dims multiply
        assert_eq!(left.comul(), right.comul());
        assert_eq!(left.counit(), right.counit());
    }

    #[test]
    fn field_mismatch_in_tensor() {
        let a = Coalgebra::ground(q());
        let b = Coalgebra::ground(FieldSpec::prime_field(5).unwrap());
        assert!(a.tensor(&b).is_err());
    }

    #[test]
    fn grouplike_scan_on_grouplike_basis() {
        let c = Coalgebra::grouplike_basis(q(), 3);
        let g = c.grouplike_scan(&[]);
        assert_eq!(g.len(), 3);
        for v in &g {
            assert!(c.is_grouplike(v));
        }
    }

    #[test]
    fn grouplike_scan_on_sweedler() {
        let c = catalog::gen_sweedler(q()).unwrap().coalgebra;
        let g = c.grouplike_scan(&[]);
        // exactly 1 and g
        assert_eq!(g.len(), 2);
        assert!(g[0][0].is_one());
        assert!(g[1][1].is_one());
        // pairwise linearly independent
        let m = Matrix::from_rows(q(), g);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn grouplike_scan_normalizes_basis_and_candidates() {
        // one-dimensional coalgebra with Δe = 2 e⊗e, so ε(e) = 1/2 and the
        // unique grouplike is 2e = e/ε(e)
        let c = Coalgebra::new(
            q(),
            {
                let mut t = Tensor3::zeros(q(), 1, 1, 1);
                t.set(0, 0, 0, q().from_i64(2));
                t
            },
            vec![q().parse("1/2").unwrap()],
            None,
        )
        .unwrap();
        assert!(c.check().passed());
        let g = c.grouplike_scan(&[]);
        assert_eq!(g, vec![vec![q().from_i64(2)]]);
        // a candidate on the same line normalizes to the same vector
        let g = c.grouplike_scan(&[vec![q().from_i64(3)]]);
        assert_eq!(g, vec![vec![q().from_i64(2)]]);
    }

    #[test]
    fn identity_morphism_passes() {
        let c = catalog::gen_sweedler(q()).unwrap().coalgebra;
        let id = Matrix::identity(q(), c.dim());
        let m = CoalgebraMorphism::new(c.clone(), c, id).unwrap();
        assert!(m.check().passed());
    }

    #[test]
    fn counit_as_morphism_to_ground_passes() {
        let c = catalog::gen_sweedler(q()).unwrap().coalgebra;
        let mat = Matrix::from_fn(q(), 1, c.dim(), |_, j| c.counit()[j].clone());
        let m = CoalgebraMorphism::new(c, Coalgebra::ground(q()), mat).unwrap();
        assert!(m.check().passed());
    }

    #[test]
    fn non_morphism_fails_with_witness() {
        // send the grouplike e_0 to e_0 + e_1, which is not grouplike
        let c = Coalgebra::grouplike_basis(q(), 2);
        let mut mat = Matrix::identity(q(), 2);
        mat.set(1, 0, q().one());
        let m = CoalgebraMorphism::new(c.clone(), c, mat).unwrap();
        let report = m.check();
        assert!(!report.passed());
        assert_eq!(report.violation.unwrap().axiom, "morphism_comultiplicative");
    }

    #[test]
    fn iterated_coproduct_of_sweedler_x() {
        let c = catalog::gen_sweedler(q()).unwrap().coalgebra;
        // Δ²(x) = x⊗1⊗1 + g⊗x⊗1 + g⊗g⊗x
        let d3 = c.iterated_coproduct(2, 3);
        let n = 4;
        let idx = |a: usize, b: usize, cc: usize| (a * n + b) * n + cc;
        let mut expected = vec![q().zero(); n * n * n];
        expected[idx(2, 0, 0)] = q().one();
        expected[idx(1, 2, 0)] = q().one();
        expected[idx(1, 1, 2)] = q().one();
        assert_eq!(d3, expected);
    }
}
