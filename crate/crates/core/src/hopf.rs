//! Bialgebras and Hopf algebras as structure constants, with an antipode
//! solver computing the convolution inverse of the identity as one exact
//! linear system.

use crate::coalgebra::{check_coalgebra_map, Coalgebra, CoalgebraError};
use crate::linalg::{pair_index, Matrix};
use crate::report::{CheckReport, Violation};
use crate::scalar::Scalar;
use crate::tensor::Tensor3;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Coalgebra(#[from] CoalgebraError),
}

/// A bialgebra, optionally with an antipode matrix.
///
/// `mult[i][j][k]` is the coefficient of `e_k` in `e_i · e_j`; the antipode
/// is kept optional so bialgebra-only stages are representable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfAlgebra {
    pub coalgebra: Coalgebra,
    pub mult: Tensor3,
    pub unit: Vec<Scalar>,
    pub antipode: Option<Matrix>,
}

impl HopfAlgebra {
    pub fn new(
        coalgebra: Coalgebra,
        mult: Tensor3,
        unit: Vec<Scalar>,
        antipode: Option<Matrix>,
    ) -> Result<Self, HopfError> {
        let n = coalgebra.dim();
        if mult.dims() != (n, n, n) {
            return Err(HopfError::Shape(format!(
                "multiplication tensor dims {:?} vs dimension {n}",
                mult.dims()
            )));
        }
        if unit.len() != n {
            return Err(HopfError::Shape("unit vector length vs dimension".into()));
        }
        if let Some(s) = &antipode {
            if s.rows() != n || s.cols() != n {
                return Err(HopfError::Shape(
                    "antipode matrix shape vs dimension".into(),
                ));
            }
        }
        let field = coalgebra.field();
        if mult.field() != field || unit.iter().any(|s| s.field() != field) {
            return Err(HopfError::Shape(
                "structure constants outside the declared field".into(),
            ));
        }
        Ok(HopfAlgebra {
            coalgebra,
            mult,
            unit,
            antipode,
        })
    }

    /// The ground field as a Hopf algebra.
    pub fn ground(field: crate::scalar::FieldSpec) -> Self {
        let coalgebra = Coalgebra::ground(field);
        let mut mult = Tensor3::zeros(field, 1, 1, 1);
        mult.set(0, 0, 0, field.one());
        HopfAlgebra::new(
            coalgebra,
            mult,
            vec![field.one()],
            Some(Matrix::identity(field, 1)),
        )
        .expect("valid by construction")
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn field(&self) -> crate::scalar::FieldSpec {
        self.coalgebra.field()
    }

    /// Product of two coordinate vectors.
    pub fn product(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        assert_eq!(a.len(), n);
        assert_eq!(b.len(), n);
        let mut out = vec![self.field().zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.mult.fiber(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&xy * c);
                    }
                }
            }
        }
        out
    }

    /// Solves the left convolution equation `Σ S(h₍₁₎) h₍₂₎ = ε(h) 1` for the
    /// antipode matrix, then verifies the right equation; returns `None` when
    /// no two-sided antipode exists.
    pub fn solve_antipode(&self) -> Option<Matrix> {
        let n = self.dim();
        let field = self.field();
        let comul = self.coalgebra.comul();
        // unknowns: S[l][j] (column-major j*n + l), equations indexed by (i, m)
        let mut sys = Matrix::zeros(field, n * n, n * n);
        let mut rhs = Vec::with_capacity(n * n);
        for i in 0..n {
            for m in 0..n {
                for j in 0..n {
                    for l in 0..n {
                        let mut coeff = field.zero();
                        for k in 0..n {
                            let d = comul.get(i, j, k);
                            if d.is_zero() {
                                continue;
                            }
                            coeff = &coeff + &(d * self.mult.get(l, k, m));
                        }
                        if !coeff.is_zero() {
                            sys.set(pair_index(i, m, n), pair_index(j, l, n), coeff);
                        }
                    }
                }
                rhs.push(&self.coalgebra.counit()[i] * &self.unit[m]);
            }
        }
        let sol = sys.solve(&rhs).ok()?;
        let s = Matrix::from_fn(field, n, n, |l, j| sol[pair_index(j, l, n)].clone());
        // a two-sided antipode is the unique left solution, so verifying both
        // convolution identities on this solution decides existence
        if self.verify_antipode(&s).passed() {
            Some(s)
        } else {
            None
        }
    }

    /// Checks both convolution identities for a claimed antipode.
    pub fn verify_antipode(&self, s: &Matrix) -> CheckReport {
        CheckReport::from_violation("antipode", self.antipode_violation(s))
    }

    fn antipode_violation(&self, s: &Matrix) -> Option<Violation> {
        let n = self.dim();
        let field = self.field();
        let comul = self.coalgebra.comul();
        for i in 0..n {
            let mut left = vec![field.zero(); n];
            let mut right = vec![field.zero(); n];
            for j in 0..n {
                for (k, d) in comul.fiber(i, j).iter().enumerate() {
                    if d.is_zero() {
                        continue;
                    }
                    let mut ek = vec![field.zero(); n];
                    ek[k] = field.one();
                    let sj = s.column(j);
                    crate::linalg::add_scaled(&mut left, d, &self.product(&sj, &ek));
                    let mut ej = vec![field.zero(); n];
                    ej[j] = field.one();
                    let sk = s.column(k);
                    crate::linalg::add_scaled(&mut right, d, &self.product(&ej, &sk));
                }
            }
            let expect: Vec<Scalar> = self
                .unit
                .iter()
                .map(|u| u * &self.coalgebra.counit()[i])
                .collect();
            if left != expect {
                return Some(Violation::new("antipode_left", vec![i]));
            }
            if right != expect {
                return Some(Violation::new("antipode_right", vec![i]));
            }
        }
        None
    }

    /// Full bialgebra check: the coalgebra axioms, associativity, unitality,
    /// and compatibility of Δ and ε with the multiplication. Includes the
    /// antipode identities when an antipode is stored.
    pub fn check(&self) -> CheckReport {
        CheckReport::from_violation("bialgebra", self.first_violation())
    }

    fn first_violation(&self) -> Option<Violation> {
        if let Some(v) = self.coalgebra.check().violation {
            return Some(v);
        }
        let n = self.dim();
        let field = self.field();
        // associativity
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for m in 0..n {
                        let mut lhs = field.zero();
                        let mut rhs = field.zero();
                        for l in 0..n {
                            let a = self.mult.get(i, j, l);
                            if !a.is_zero() {
                                lhs = &lhs + &(a * self.mult.get(l, k, m));
                            }
                            let b = self.mult.get(j, k, l);
                            if !b.is_zero() {
                                rhs = &rhs + &(b * self.mult.get(i, l, m));
                            }
                        }
                        if lhs != rhs {
                            return Some(Violation::new("associativity", vec![i, j, k, m]));
                        }
                    }
                }
            }
        }
        // two-sided unit
        for i in 0..n {
            for k in 0..n {
                let delta = if i == k { field.one() } else { field.zero() };
                let mut left = field.zero();
                let mut right = field.zero();
                for (j, u) in self.unit.iter().enumerate() {
                    if u.is_zero() {
                        continue;
                    }
                    left = &left + &(u * self.mult.get(j, i, k));
                    right = &right + &(u * self.mult.get(i, j, k));
                }
                if left != delta {
                    return Some(Violation::new("unit_left", vec![i, k]));
                }
                if right != delta {
                    return Some(Violation::new("unit_right", vec![i, k]));
                }
            }
        }
        // Δ is an algebra map
        let comul = self.coalgebra.comul();
        for i in 0..n {
            for j in 0..n {
                let mut lhs = vec![field.zero(); n * n];
                for (l, c) in self.mult.fiber(i, j).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (a, b) in (0..n).flat_map(|a| (0..n).map(move |b| (a, b))) {
                        let d = comul.get(l, a, b);
                        if !d.is_zero() {
                            let idx = pair_index(a, b, n);
                            lhs[idx] = &lhs[idx] + &(c * d);
                        }
                    }
                }
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
                                let c = ci * cj;
                                for (u, m1) in self.mult.fiber(i1, j1).iter().enumerate() {
                                    if m1.is_zero() {
                                        continue;
                                    }
                                    for (v, m2) in self.mult.fiber(i2, j2).iter().enumerate() {
                                        if m2.is_zero() {
                                            continue;
                                        }
                                        let idx = pair_index(u, v, n);
                                        rhs[idx] = &rhs[idx] + &(&(&c * m1) * m2);
                                    }
                                }
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return Some(Violation::new("comul_multiplicative", vec![i, j]));
                }
            }
        }
        // Δ(1) = 1 ⊗ 1
        let delta_unit = self.coalgebra.delta_of(&self.unit);
        let unit_tensor = crate::linalg::vec_tensor(field, &self.unit, &self.unit);
        if delta_unit != unit_tensor {
            return Some(Violation::new("comul_unital", vec![]));
        }
        // ε is an algebra map
        for i in 0..n {
            for j in 0..n {
                let mut lhs = field.zero();
                for (l, c) in self.mult.fiber(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        lhs = &lhs + &(c * &self.coalgebra.counit()[l]);
                    }
                }
                let rhs = &self.coalgebra.counit()[i] * &self.coalgebra.counit()[j];
                if lhs != rhs {
                    return Some(Violation::new("counit_multiplicative", vec![i, j]));
                }
            }
        }
        if !self.coalgebra.counit_of(&self.unit).is_one() {
            return Some(Violation::new("counit_unital", vec![]));
        }
        if let Some(s) = &self.antipode {
            if let Some(v) = self.antipode_violation(s) {
                return Some(v);
            }
        }
        None
    }

    /// Attaches the solved antipode, or `None` when the bialgebra has none.
    pub fn with_solved_antipode(mut self) -> Option<Self> {
        let s = self.solve_antipode()?;
        self.antipode = Some(s);
        Some(self)
    }
}

/// Checks that `f` is a bialgebra map `source -> target`: a coalgebra map
/// that is multiplicative and unital. When both sides carry antipodes, the
/// compatibility `S_target ∘ f = f ∘ S_source` is verified as well.
pub fn check_hopf_morphism(f: &Matrix, source: &HopfAlgebra, target: &HopfAlgebra) -> CheckReport {
    assert_eq!(
        (f.rows(), f.cols()),
        (target.dim(), source.dim()),
        "morphism shape"
    );
    if let Some(v) = check_coalgebra_map(&source.coalgebra, &target.coalgebra, f) {
        return CheckReport::from_violation("hopf_morphism", Some(v));
    }
    let ns = source.dim();
    for i in 0..ns {
        for j in 0..ns {
            let lhs = f.apply(source.mult.fiber(i, j));
            let rhs = target.product(&f.column(i), &f.column(j));
            if lhs != rhs {
                return CheckReport::fail("hopf_morphism", "morphism_multiplicative", vec![i, j]);
            }
        }
    }
    if f.apply(&source.unit) != target.unit {
        return CheckReport::fail("hopf_morphism", "morphism_unital", vec![]);
    }
    if let (Some(ss), Some(st)) = (&source.antipode, &target.antipode) {
        if st.mul(f) != f.mul(ss) {
            return CheckReport::fail("hopf_morphism", "morphism_antipode", vec![]);
        }
    }
    CheckReport::pass("hopf_morphism")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, GroupName};
    use crate::scalar::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn group_algebra_c2_is_a_bialgebra() {
        let h = catalog::gen_group_algebra(GroupName::C2, q());
        assert!(h.check().passed());
    }

    #[test]
    fn sweedler_is_a_bialgebra() {
        let h = catalog::gen_sweedler(q()).unwrap();
        assert!(h.check().passed());
    }

    #[test]
    fn broken_c2_multiplication_fails() {
        let h = catalog::gen_group_algebra(GroupName::C2, q());
        let broken = catalog::perturb_mult(&h, 1, 1, 0, q().zero());
        let report = broken.check();
        assert!(!report.passed());
        let axiom = report.violation.unwrap().axiom;
        assert!(axiom.starts_with("unit") || axiom == "associativity" || axiom.starts_with("co"));
    }

    #[test]
    fn group_algebra_antipode_is_inversion() {
        let h = catalog::gen_group_algebra(GroupName::C3, q());
        let s = h.solve_antipode().unwrap();
        // S(g) = g^2, S(g^2) = g
        assert!(s.get(0, 0).is_one());
        assert!(s.get(2, 1).is_one());
        assert!(s.get(1, 2).is_one());
        assert_eq!(&s, h.antipode.as_ref().unwrap());
    }

    #[test]
    fn sweedler_antipode_from_solver() {
        let h = catalog::gen_sweedler(q()).unwrap();
        let s = h.solve_antipode().unwrap();
        // S(x) = -gx, S(g) = g, S(gx) = x
        assert_eq!(
            s.column(2),
            vec![q().zero(), q().zero(), q().zero(), q().from_i64(-1)]
        );
        assert_eq!(
            s.column(1),
            vec![q().zero(), q().one(), q().zero(), q().zero()]
        );
        assert_eq!(
            s.column(3),
            vec![q().zero(), q().zero(), q().one(), q().zero()]
        );
        // S² = id fails: S²(x) = -x
        let s2 = s.mul(&s);
        assert!(!s2.is_identity());
        assert_eq!(s2.column(2)[2], q().from_i64(-1));
    }

    #[test]
    fn idempotent_monoid_bialgebra_has_no_antipode() {
        // monoid {1, z} with z² = z, linearized with grouplike basis
        let field = q();
        let coalgebra = Coalgebra::grouplike_basis(field, 2);
        let mut mult = Tensor3::zeros(field, 2, 2, 2);
        mult.set(0, 0, 0, field.one());
        mult.set(0, 1, 1, field.one());
        mult.set(1, 0, 1, field.one());
        mult.set(1, 1, 1, field.one());
        let h = HopfAlgebra::new(coalgebra, mult, vec![field.one(), field.zero()], None).unwrap();
        assert!(h.check().passed());
        assert!(h.solve_antipode().is_none());
    }

    #[test]
    fn antipode_is_unique_under_basis_permutation() {
        // solve for C3, permute the basis, re-solve, compare conjugates
        let h = catalog::gen_group_algebra(GroupName::C3, q());
        let s = h.solve_antipode().unwrap();
        let n = h.dim();
        let perm = [1usize, 2, 0];
        let p = Matrix::from_fn(
            q(),
            n,
            n,
            |i, j| {
                if perm[j] == i {
                    q().one()
                } else {
                    q().zero()
                }
            },
        );
        let field = q();
        let mut comul = Tensor3::zeros(field, n, n, n);
        let mut mult = Tensor3::zeros(field, n, n, n);
        for (i, j, k, c) in h.coalgebra.comul().iter_nonzero() {
            comul.set(perm[i], perm[j], perm[k], c.clone());
        }
        for (i, j, k, c) in h.mult.iter_nonzero() {
            mult.set(perm[i], perm[j], perm[k], c.clone());
        }
        let counit: Vec<_> = (0..n)
            .map(|i| h.coalgebra.counit()[perm.iter().position(|&x| x == i).unwrap()].clone())
            .collect();
        let unit: Vec<_> = (0..n)
            .map(|i| h.unit[perm.iter().position(|&x| x == i).unwrap()].clone())
            .collect();
        let hp = HopfAlgebra::new(
            Coalgebra::new(field, comul, counit, None).unwrap(),
            mult,
            unit,
            None,
        )
        .unwrap();
        let sp = hp.solve_antipode().unwrap();
        assert_eq!(sp, p.mul(&s).mul(&p.inverse().unwrap()));
    }

    #[test]
    fn identity_and_counit_unit_morphisms() {
        let h = catalog::gen_group_algebra(GroupName::C2, q());
        let id = Matrix::identity(q(), 2);
        assert!(check_hopf_morphism(&id, &h, &h).passed());
        // h ↦ ε(h)1 on a commutative, cocommutative example
        let eps_unit = Matrix::from_fn(q(), 2, 2, |i, j| &h.unit[i] * &h.coalgebra.counit()[j]);
        assert!(check_hopf_morphism(&eps_unit, &h, &h).passed());
    }

    #[test]
    fn non_multiplicative_map_fails() {
        let h = catalog::gen_group_algebra(GroupName::C2, q());
        // swap basis: sends unit to the non-unit grouplike
        let mut f = Matrix::zeros(q(), 2, 2);
        f.set(0, 1, q().one());
        f.set(1, 0, q().one());
        let report = check_hopf_morphism(&f, &h, &h);
        assert!(!report.passed());
    }
}
