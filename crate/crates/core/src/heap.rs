//! Hopf heaps: coalgebras with a ternary coalgebra map subject to heap
//! axioms, the Grunspan map, and the dictionary with Hopf algebras.
//!
//! The ternary tensor `chi` has `chi[i][j][k][l]` the coefficient of `e_l`
//! in `[e_i, e_j, e_k]`. The middle tensor slot carries the co-opposite
//! coalgebra structure, which shows up as the swapped middle Sweedler legs
//! in the comultiplicativity law.

use crate::coalgebra::{check_coalgebra_map, Coalgebra, CoalgebraError, CoalgebraMorphism};
use crate::hopf::{HopfAlgebra, HopfError};
use crate::linalg::{add_scaled, pair_index, Matrix};
use crate::report::{CheckReport, Violation};
use crate::scalar::Scalar;
use crate::tensor::{Tensor3, Tensor4};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeapError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("Hopf algebra has no antipode attached")]
    MissingAntipode,
    #[error("stored antipode fails its convolution identities")]
    InvalidAntipode,
    #[error("vector is not grouplike")]
    NotGrouplike,
    #[error("Grunspan formulas disagree at column {column}: the five-fold coproduct formula and the counit-one formula differ")]
    GrunspanMismatch { column: usize },
    #[error("constructed structure failed verification: {0}")]
    Verification(String),
    #[error(transparent)]
    Coalgebra(#[from] CoalgebraError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfHeap {
    pub coalgebra: Coalgebra,
    pub chi: Tensor4,
}

impl HopfHeap {
    pub fn new(coalgebra: Coalgebra, chi: Tensor4) -> Result<Self, HeapError> {
        let n = coalgebra.dim();
        if chi.dims() != (n, n, n, n) {
            return Err(HeapError::Shape(format!(
                "heap tensor dims {:?} vs dimension {n}",
                chi.dims()
            )));
        }
        if chi.field() != coalgebra.field() {
            return Err(HeapError::Shape(
                "heap tensor outside the declared field".into(),
            ));
        }
        Ok(HopfHeap { coalgebra, chi })
    }

    /// The one-dimensional heap on the ground field.
    pub fn ground(field: crate::scalar::FieldSpec) -> Self {
        let mut chi = Tensor4::zeros(field, 1, 1, 1, 1);
        chi.set(0, 0, 0, 0, field.one());
        HopfHeap::new(Coalgebra::ground(field), chi).expect("valid by construction")
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn field(&self) -> crate::scalar::FieldSpec {
        self.coalgebra.field()
    }

    /// `[u, v, w]` on coordinate vectors.
    pub fn apply(&self, u: &[Scalar], v: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        assert!(u.len() == n && v.len() == n && w.len() == n, "apply shape");
        let field = self.field();
        let mut out = vec![field.zero(); n];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in w.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    add_scaled(&mut out, &(&ab * c), self.chi.fiber(i, j, k));
                }
            }
        }
        out
    }

    /// Checks the heap axioms exactly: `chi` is a coalgebra map from
    /// `C ⊗ C^co ⊗ C`, is associative, and satisfies both Mal'cev laws.
    pub fn check(&self) -> CheckReport {
        CheckReport::from_violation("hopf_heap", self.first_violation())
    }

    fn first_violation(&self) -> Option<Violation> {
        let n = self.dim();
        let field = self.field();
        let comul = self.coalgebra.comul();
        let counit = self.coalgebra.counit();
        // Δ([a,b,c]) = Σ [a₍₁₎, b₍₂₎, c₍₁₎] ⊗ [a₍₂₎, b₍₁₎, c₍₂₎]
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.coalgebra.delta_of(self.chi.fiber(i, j, k));
                    let mut rhs = vec![field.zero(); n * n];
                    for i1 in 0..n {
                        for (i2, ci) in comul.fiber(i, i1).iter().enumerate() {
                            if ci.is_zero() {
                                continue;
                            }
                            for j1 in 0..n {
                                for (j2, cj) in comul.fiber(j, j1).iter().enumerate() {
                                    if cj.is_zero() {
                                        continue;
                                    }
                                    for k1 in 0..n {
                                        for (k2, ck) in comul.fiber(k, k1).iter().enumerate() {
                                            if ck.is_zero() {
                                                continue;
                                            }
                                            let c = &(ci * cj) * ck;
                                            let left = self.chi.fiber(i1, j2, k1);
                                            let right = self.chi.fiber(i2, j1, k2);
                                            for (u, lu) in left.iter().enumerate() {
                                                if lu.is_zero() {
                                                    continue;
                                                }
                                                let cl = &c * lu;
                                                for (v, rv) in right.iter().enumerate() {
                                                    if rv.is_zero() {
                                                        continue;
                                                    }
                                                    let idx = pair_index(u, v, n);
                                                    rhs[idx] = &rhs[idx] + &(&cl * rv);
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                    if lhs != rhs {
                        return Some(Violation::new("chi_comultiplicative", vec![i, j, k]));
                    }
                    let eps = self.coalgebra.counit_of(self.chi.fiber(i, j, k));
                    if eps != &(&counit[i] * &counit[j]) * &counit[k] {
                        return Some(Violation::new("chi_counital", vec![i, j, k]));
                    }
                }
            }
        }
        // associativity on basis 5-tuples
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        for e in 0..n {
                            let mut lhs = vec![field.zero(); n];
                            for (l, x) in self.chi.fiber(a, b, c).iter().enumerate() {
                                if !x.is_zero() {
                                    add_scaled(&mut lhs, x, self.chi.fiber(l, d, e));
                                }
                            }
                            let mut rhs = vec![field.zero(); n];
                            for (l, x) in self.chi.fiber(c, d, e).iter().enumerate() {
                                if !x.is_zero() {
                                    add_scaled(&mut rhs, x, self.chi.fiber(a, b, l));
                                }
                            }
                            if lhs != rhs {
                                return Some(Violation::new("associativity", vec![a, b, c, d, e]));
                            }
                        }
                    }
                }
            }
        }
        // Mal'cev laws on basis pairs
        for c in 0..n {
            for a in 0..n {
                let mut left = vec![field.zero(); n];
                let mut right = vec![field.zero(); n];
                for c1 in 0..n {
                    for (c2, dc) in comul.fiber(c, c1).iter().enumerate() {
                        if dc.is_zero() {
                            continue;
                        }
                        add_scaled(&mut left, dc, self.chi.fiber(c1, c2, a));
                        add_scaled(&mut right, dc, self.chi.fiber(a, c1, c2));
                    }
                }
                let mut expect = vec![field.zero(); n];
                expect[a] = counit[c].clone();
                if left != expect {
                    return Some(Violation::new("malcev_left", vec![c, a]));
                }
                if right != expect {
                    return Some(Violation::new("malcev_right", vec![c, a]));
                }
            }
        }
        None
    }

    /// Grunspan map by the five-fold coproduct formula
    /// `c ↦ Σ [c₍₁₎, [c₍₄₎, c₍₃₎, c₍₂₎], c₍₅₎]`.
    pub fn grunspan_five_fold(&self) -> Matrix {
        let n = self.dim();
        let field = self.field();
        let mut theta = Matrix::zeros(field, n, n);
        for i in 0..n {
            let d5 = self.coalgebra.iterated_coproduct(i, 5);
            let mut col = vec![field.zero(); n];
            for (flat, coeff) in d5.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let t5 = flat % n;
                let t4 = (flat / n) % n;
                let t3 = (flat / (n * n)) % n;
                let t2 = (flat / (n * n * n)) % n;
                let t1 = flat / (n * n * n * n);
                for (l, inner) in self.chi.fiber(t4, t3, t2).iter().enumerate() {
                    if inner.is_zero() {
                        continue;
                    }
                    add_scaled(&mut col, &(coeff * inner), self.chi.fiber(t1, l, t5));
                }
            }
            for (m, v) in col.into_iter().enumerate() {
                theta.set(m, i, v);
            }
        }
        theta
    }

    /// Grunspan map by the counit-one formula
    /// `c ↦ Σ [c₍₁₎, [e₍₁₎, c₍₃₎, c₍₂₎], e₍₂₎]`, for a given `e` with
    /// `ε(e) = 1`.
    pub fn grunspan_with_counit_one(&self, e: &[Scalar]) -> Matrix {
        let n = self.dim();
        let field = self.field();
        debug_assert!(self.coalgebra.counit_of(e).is_one());
        let de = self.coalgebra.delta_of(e);
        let mut theta = Matrix::zeros(field, n, n);
        for i in 0..n {
            let d3 = self.coalgebra.iterated_coproduct(i, 3);
            let mut col = vec![field.zero(); n];
            for (flat, coeff) in d3.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let t3 = flat % n;
                let t2 = (flat / n) % n;
                let t1 = flat / (n * n);
                for (ef, ec) in de.iter().enumerate() {
                    if ec.is_zero() {
                        continue;
                    }
                    let (u, v) = crate::linalg::pair_unindex(ef, n);
                    let c = coeff * ec;
                    for (l, inner) in self.chi.fiber(u, t3, t2).iter().enumerate() {
                        if inner.is_zero() {
                            continue;
                        }
                        add_scaled(&mut col, &(&c * inner), self.chi.fiber(t1, l, v));
                    }
                }
            }
            for (m, x) in col.into_iter().enumerate() {
                theta.set(m, i, x);
            }
        }
        theta
    }

    /// The Grunspan map, computed by the five-fold coproduct formula and
    /// cross-checked against the counit-one formula with the canonical
    /// choice of `e`; the two must agree.
    pub fn grunspan_map(&self) -> Result<Matrix, HeapError> {
        let theta = self.grunspan_five_fold();
        let alt = self.grunspan_with_counit_one(&self.coalgebra.counit_one_vector());
        if theta != alt {
            let column = (0..self.dim())
                .find(|&j| theta.column(j) != alt.column(j))
                .unwrap_or(0);
            return Err(HeapError::GrunspanMismatch { column });
        }
        Ok(theta)
    }

    /// Checks that `theta` is a coalgebra endomorphism satisfying
    /// `[[a, b, ϑ(c)], d, e] = [a, [d, c, b], e]` on all basis 5-tuples.
    pub fn check_grunspan(&self, theta: &Matrix) -> CheckReport {
        let n = self.dim();
        assert_eq!((theta.rows(), theta.cols()), (n, n), "grunspan shape");
        if let Some(v) = check_coalgebra_map(&self.coalgebra, &self.coalgebra, theta) {
            return CheckReport::from_violation("grunspan", Some(v));
        }
        let field = self.field();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        for e in 0..n {
                            let mut lhs = vec![field.zero(); n];
                            for m in 0..n {
                                let t = theta.get(m, c);
                                if t.is_zero() {
                                    continue;
                                }
                                for (l, x) in self.chi.fiber(a, b, m).iter().enumerate() {
                                    if !x.is_zero() {
                                        add_scaled(&mut lhs, &(t * x), self.chi.fiber(l, d, e));
                                    }
                                }
                            }
                            let mut rhs = vec![field.zero(); n];
                            for (l, x) in self.chi.fiber(d, c, b).iter().enumerate() {
                                if !x.is_zero() {
                                    add_scaled(&mut rhs, x, self.chi.fiber(a, l, e));
                                }
                            }
                            if lhs != rhs {
                                return CheckReport::fail(
                                    "grunspan",
                                    "grunspan_exchange",
                                    vec![a, b, c, d, e],
                                );
                            }
                        }
                    }
                }
            }
        }
        CheckReport::pass("grunspan")
    }

    /// The Hopf algebra `H_x(C)` at a grouplike `x`: multiplication
    /// `ab = [a, x, b]`, unit `x`, antipode `S(a) = [x, a, x]`.
    pub fn hopf_at_grouplike(&self, x: &[Scalar]) -> Result<HopfAlgebra, HeapError> {
        if !self.coalgebra.is_grouplike(x) {
            return Err(HeapError::NotGrouplike);
        }
        let n = self.dim();
        let field = self.field();
        let mut mult = Tensor3::zeros(field, n, n, n);
        for i in 0..n {
            for j in 0..n {
                let mut fiber = vec![field.zero(); n];
                for (s, xs) in x.iter().enumerate() {
                    if !xs.is_zero() {
                        add_scaled(&mut fiber, xs, self.chi.fiber(i, s, j));
                    }
                }
                for (k, v) in fiber.into_iter().enumerate() {
                    mult.set(i, j, k, v);
                }
            }
        }
        let mut antipode = Matrix::zeros(field, n, n);
        for i in 0..n {
            let mut col = vec![field.zero(); n];
            for (s, xs) in x.iter().enumerate() {
                if xs.is_zero() {
                    continue;
                }
                for (t, xt) in x.iter().enumerate() {
                    if !xt.is_zero() {
                        add_scaled(&mut col, &(xs * xt), self.chi.fiber(s, i, t));
                    }
                }
            }
            for (m, v) in col.into_iter().enumerate() {
                antipode.set(m, i, v);
            }
        }
        let hopf = HopfAlgebra::new(self.coalgebra.clone(), mult, x.to_vec(), Some(antipode))?;
        let report = hopf.check();
        if !report.passed() {
            return Err(HeapError::Verification(report.to_string()));
        }
        Ok(hopf)
    }
}

/// The heap of a Hopf algebra: `[a, b, c] = a S(b) c`.
pub fn heap_from_hopf(h: &HopfAlgebra) -> Result<HopfHeap, HeapError> {
    let s = h.antipode.as_ref().ok_or(HeapError::MissingAntipode)?;
    if !h.verify_antipode(s).passed() {
        return Err(HeapError::InvalidAntipode);
    }
    let n = h.dim();
    let field = h.field();
    let mut chi = Tensor4::zeros(field, n, n, n, n);
    let basis = |i: usize| {
        let mut v = vec![field.zero(); n];
        v[i] = field.one();
        v
    };
    for j in 0..n {
        let sj = s.column(j);
        for i in 0..n {
            let left = h.product(&basis(i), &sj);
            for k in 0..n {
                let full = h.product(&left, &basis(k));
                for (l, v) in full.into_iter().enumerate() {
                    chi.set(i, j, k, l, v);
                }
            }
        }
    }
    HopfHeap::new(h.coalgebra.clone(), chi)
}

/// A coalgebra map between heaps; the heap-morphism laws are checked by
/// [`HeapMorphism::check`].
#[derive(Debug, Clone)]
pub struct HeapMorphism {
    pub source: HopfHeap,
    pub target: HopfHeap,
    pub matrix: Matrix,
}

impl HeapMorphism {
    pub fn new(source: HopfHeap, target: HopfHeap, matrix: Matrix) -> Result<Self, HeapError> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(HeapError::Shape("morphism matrix shape".into()));
        }
        Ok(HeapMorphism {
            source,
            target,
            matrix,
        })
    }

    pub fn coalgebra_morphism(&self) -> CoalgebraMorphism {
        CoalgebraMorphism::new(
            self.source.coalgebra.clone(),
            self.target.coalgebra.clone(),
            self.matrix.clone(),
        )
        .expect("shapes validated on construction")
    }

    /// Checks the coalgebra-map laws, preservation of the ternary operation
    /// on basis triples, and compatibility with the supplied Grunspan maps.
    pub fn check(&self, theta_source: &Matrix, theta_target: &Matrix) -> CheckReport {
        if let Some(v) =
            check_coalgebra_map(&self.source.coalgebra, &self.target.coalgebra, &self.matrix)
        {
            return CheckReport::from_violation("heap_morphism", Some(v));
        }
        let n = self.source.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.matrix.apply(self.source.chi.fiber(i, j, k));
                    let rhs = self.target.apply(
                        &self.matrix.column(i),
                        &self.matrix.column(j),
                        &self.matrix.column(k),
                    );
                    if lhs != rhs {
                        return CheckReport::fail(
                            "heap_morphism",
                            "morphism_ternary",
                            vec![i, j, k],
                        );
                    }
                }
            }
        }
        if self.matrix.mul(theta_source) != theta_target.mul(&self.matrix) {
            return CheckReport::fail("heap_morphism", "morphism_grunspan", vec![]);
        }
        CheckReport::pass("heap_morphism")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, GroupName};
    use crate::scalar::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn group_heap(name: GroupName) -> HopfHeap {
        heap_from_hopf(&catalog::gen_group_algebra(name, q())).unwrap()
    }

    fn sweedler_heap() -> (HopfAlgebra, HopfHeap) {
        let h = catalog::gen_sweedler(q())
            .unwrap()
            .with_solved_antipode()
            .unwrap();
        let heap = heap_from_hopf(&h).unwrap();
        (h, heap)
    }

    #[test]
    fn ground_heap_passes() {
        assert!(HopfHeap::ground(q()).check().passed());
    }

    #[test]
    fn c3_heap_passes() {
        assert!(group_heap(GroupName::C3).check().passed());
    }

    #[test]
    fn sweedler_heap_passes() {
        let (_, heap) = sweedler_heap();
        assert!(heap.check().passed());
    }

    #[test]
    fn perturbed_c3_heap_fails_with_witness() {
        let heap = group_heap(GroupName::C3);
        let bad = catalog::perturb_chi(&heap, 0, 0, 0, 0, q().from_i64(-1));
        let report = bad.check();
        assert!(!report.passed());
        let v = report.violation.unwrap();
        assert!(
            v.axiom == "malcev_left" || v.axiom == "malcev_right" || v.axiom.starts_with("chi_")
        );
    }

    #[test]
    fn heap_from_hopf_on_c2() {
        let heap = group_heap(GroupName::C2);
        // [g, g, g] = g g⁻¹ g = g
        assert!(heap.chi.get(1, 1, 1, 1).is_one());
        // [1, g, 1] = S(g) = g
        assert!(heap.chi.get(0, 1, 0, 1).is_one());
    }

    #[test]
    fn heap_from_sweedler_evaluates_s() {
        let (_, heap) = sweedler_heap();
        // [1, g, 1] = S(g) = g
        assert!(heap.chi.get(0, 1, 0, 1).is_one());
        // [1, x, 1] = S(x) = -gx
        assert_eq!(heap.chi.get(0, 2, 0, 3), &q().from_i64(-1));
    }

    #[test]
    fn heap_from_hopf_requires_antipode() {
        let h = catalog::gen_sweedler(q()).unwrap();
        assert!(matches!(
            heap_from_hopf(&h),
            Err(HeapError::MissingAntipode)
        ));
    }

    #[test]
    fn grunspan_of_group_heaps_is_identity() {
        for name in [GroupName::C2, GroupName::C4, GroupName::S3] {
            let heap = group_heap(name);
            let theta = heap.grunspan_map().unwrap();
            assert!(theta.is_identity());
            assert!(heap.check_grunspan(&theta).passed());
        }
    }

    #[test]
    fn grunspan_of_sweedler_is_antipode_squared() {
        let (h, heap) = sweedler_heap();
        let s = h.antipode.as_ref().unwrap();
        let theta = heap.grunspan_map().unwrap();
        assert_eq!(theta, s.mul(s));
        // ϑ(x) = -x, so ϑ ≠ id
        assert!(!theta.is_identity());
        assert_eq!(theta.get(2, 2), &q().from_i64(-1));
        assert!(heap.check_grunspan(&theta).passed());
        // identity is not a Grunspan map here
        let report = heap.check_grunspan(&Matrix::identity(q(), 4));
        assert!(!report.passed());
    }

    #[test]
    fn grunspan_formulas_disagree_on_invalid_heap() {
        // doubling [g,g,g] on the C2 heap makes the five-fold formula give
        // 4e_g while the counit-one formula still gives e_g
        let heap = group_heap(GroupName::C2);
        let bad = catalog::perturb_chi(&heap, 1, 1, 1, 1, q().from_i64(2));
        assert!(!bad.check().passed());
        assert!(matches!(
            bad.grunspan_map(),
            Err(HeapError::GrunspanMismatch { column: 1 })
        ));
        // the translation builder refuses such a heap as well
        assert!(crate::translations::build_right_translations(&bad).is_err());
    }

    #[test]
    fn grunspan_of_ground_heap() {
        let heap = HopfHeap::ground(q());
        assert!(heap.grunspan_map().unwrap().is_identity());
    }

    #[test]
    fn grunspan_counit_one_formula_is_choice_independent() {
        let (_, heap) = sweedler_heap();
        let theta = heap.grunspan_five_fold();
        for e in heap.coalgebra.all_counit_one_vectors() {
            assert_eq!(heap.grunspan_with_counit_one(&e), theta);
        }
    }

    #[test]
    fn hopf_at_grouplike_round_trips_c3() {
        let h = catalog::gen_group_algebra(GroupName::C3, q());
        let heap = heap_from_hopf(&h).unwrap();
        let x = h.unit.clone();
        let back = heap.hopf_at_grouplike(&x).unwrap();
        assert_eq!(back.mult, h.mult);
        assert_eq!(back.unit, h.unit);
        assert_eq!(back.antipode, h.antipode);
        assert_eq!(back.coalgebra.comul(), h.coalgebra.comul());
    }

    #[test]
    fn hopf_at_other_grouplike_shifts_unit() {
        let h = catalog::gen_group_algebra(GroupName::C3, q());
        let heap = heap_from_hopf(&h).unwrap();
        let mut x = vec![q().zero(); 3];
        x[1] = q().one();
        let shifted = heap.hopf_at_grouplike(&x).unwrap();
        assert!(shifted.check().passed());
        assert_eq!(shifted.unit, x);
    }

    #[test]
    fn hopf_at_grouplike_rejects_non_grouplike() {
        let heap = group_heap(GroupName::C2);
        let bad = vec![q().one(), q().one()];
        assert!(matches!(
            heap.hopf_at_grouplike(&bad),
            Err(HeapError::NotGrouplike)
        ));
    }

    #[test]
    fn heap_of_hopf_at_grouplike_recovers_chi() {
        let (_, heap) = sweedler_heap();
        let x = heap.coalgebra.grouplike_scan(&[])[0].clone();
        let hx = heap.hopf_at_grouplike(&x).unwrap();
        let back = heap_from_hopf(&hx).unwrap();
        assert_eq!(back.chi, heap.chi);
    }

    #[test]
    fn identity_heap_morphism_passes() {
        let heap = group_heap(GroupName::C3);
        let theta = heap.grunspan_map().unwrap();
        let m = HeapMorphism::new(heap.clone(), heap.clone(), Matrix::identity(q(), 3)).unwrap();
        assert!(m.check(&theta, &theta).passed());
    }

    #[test]
    fn c4_to_c2_quotient_is_a_heap_morphism() {
        let src = group_heap(GroupName::C4);
        let tgt = group_heap(GroupName::C2);
        let f = Matrix::from_fn(
            q(),
            2,
            4,
            |i, j| {
                if j % 2 == i {
                    q().one()
                } else {
                    q().zero()
                }
            },
        );
        let m = HeapMorphism::new(src.clone(), tgt.clone(), f).unwrap();
        let ts = src.grunspan_map().unwrap();
        let tt = tgt.grunspan_map().unwrap();
        assert!(m.check(&ts, &tt).passed());
    }

    #[test]
    fn affine_basis_swap_on_c3_is_a_morphism() {
        // swapping the basis vectors of 1 and g is the affine map x ↦ 1 - x
        // on exponents, a genuine heap morphism
        let heap = group_heap(GroupName::C3);
        let theta = heap.grunspan_map().unwrap();
        let mut f = Matrix::zeros(q(), 3, 3);
        f.set(0, 1, q().one());
        f.set(1, 0, q().one());
        f.set(2, 2, q().one());
        let m = HeapMorphism::new(heap.clone(), heap.clone(), f).unwrap();
        assert!(m.check(&theta, &theta).passed());
    }

    #[test]
    fn non_affine_basis_swap_fails() {
        // on the C4 heap, exchanging exponents 1 and 2 is not of the form
        // ±x + t, so the ternary operation is not preserved
        let heap = group_heap(GroupName::C4);
        let theta = heap.grunspan_map().unwrap();
        let perm = [0usize, 2, 1, 3];
        let f = Matrix::from_fn(
            q(),
            4,
            4,
            |i, j| {
                if perm[j] == i {
                    q().one()
                } else {
                    q().zero()
                }
            },
        );
        let m = HeapMorphism::new(heap.clone(), heap.clone(), f).unwrap();
        let report = m.check(&theta, &theta);
        assert!(!report.passed());
        assert_eq!(report.violation.unwrap().axiom, "morphism_ternary");
    }
}
