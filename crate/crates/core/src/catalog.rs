//! Deterministic generators for the example catalog, a set-theoretic
//! translation-group oracle, and single-entry perturbation helpers for
//! negative tests.
//!
//! The oracle side works purely with function tables and integer indices,
//! no field arithmetic, so it is an independent implementation path against
//! which the linear constructions are cross-checked.

use crate::coalgebra::Coalgebra;
use crate::galois::GaloisCoObject;
use crate::heap::HopfHeap;
use crate::hopf::HopfAlgebra;
use crate::linalg::Matrix;
use crate::scalar::{FieldSpec, Scalar};
use crate::tensor::{Tensor3, Tensor4};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not a heap table: {0}")]
    NotAHeap(String),
    #[error("translations do not form a free transitive group action: {0}")]
    NotTorsor(String),
    #[error("the Sweedler Hopf algebra needs characteristic different from 2")]
    CharacteristicTwo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupName {
    C2,
    C3,
    C4,
    C5,
    C6,
    V4,
    S3,
}

impl GroupName {
    pub const ALL: [GroupName; 7] = [
        GroupName::C2,
        GroupName::C3,
        GroupName::C4,
        GroupName::C5,
        GroupName::C6,
        GroupName::V4,
        GroupName::S3,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            GroupName::C2 => "C2",
            GroupName::C3 => "C3",
            GroupName::C4 => "C4",
            GroupName::C5 => "C5",
            GroupName::C6 => "C6",
            GroupName::V4 => "V4",
            GroupName::S3 => "S3",
        }
    }

    pub fn parse(s: &str) -> Option<GroupName> {
        GroupName::ALL
            .iter()
            .copied()
            .find(|g| g.as_str().eq_ignore_ascii_case(s))
    }
}

/// A finite group as a multiplication table with identity and inverses,
/// all axioms verified exhaustively on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    size: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

/// Multiplication table of S3 on {id, r, r², (12), (02), (01)} where r is
/// the 3-cycle 0→1→2; entry [a][b] is the composite "a after b".
const S3_TABLE: [[usize; 6]; 6] = [
    [0, 1, 2, 3, 4, 5],
    [1, 2, 0, 5, 3, 4],
    [2, 0, 1, 4, 5, 3],
    [3, 4, 5, 0, 1, 2],
    [4, 5, 3, 2, 0, 1],
    [5, 3, 4, 1, 2, 0],
];

impl GroupTable {
    pub fn new(size: usize, table: Vec<usize>) -> Result<Self, OracleError> {
        if size == 0 || table.len() != size * size {
            return Err(OracleError::NotAGroup("table size".into()));
        }
        if table.iter().any(|&x| x >= size) {
            return Err(OracleError::NotAGroup("entry out of range".into()));
        }
        let mul = |a: usize, b: usize| table[a * size + b];
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(OracleError::NotAGroup(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let identity = (0..size)
            .find(|&e| (0..size).all(|a| mul(e, a) == a && mul(a, e) == a))
            .ok_or_else(|| OracleError::NotAGroup("no identity".into()))?;
        let mut inverse = Vec::with_capacity(size);
        for a in 0..size {
            let inv = (0..size)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or_else(|| OracleError::NotAGroup(format!("no inverse for {a}")))?;
            inverse.push(inv);
        }
        Ok(GroupTable {
            size,
            table,
            identity,
            inverse,
        })
    }

    pub fn cyclic(n: usize) -> GroupTable {
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push((a + b) % n);
            }
        }
        GroupTable::new(n, table).expect("cyclic groups are groups")
    }

    pub fn klein_four() -> GroupTable {
        let mut table = Vec::with_capacity(16);
        for a in 0..4usize {
            for b in 0..4usize {
                table.push(a ^ b);
            }
        }
        GroupTable::new(4, table).expect("V4 is a group")
    }

    pub fn symmetric_3() -> GroupTable {
        let table = S3_TABLE.iter().flatten().copied().collect();
        GroupTable::new(6, table).expect("S3 is a group")
    }

    pub fn for_name(name: GroupName) -> GroupTable {
        match name {
            GroupName::C2 => GroupTable::cyclic(2),
            GroupName::C3 => GroupTable::cyclic(3),
            GroupName::C4 => GroupTable::cyclic(4),
            GroupName::C5 => GroupTable::cyclic(5),
            GroupName::C6 => GroupTable::cyclic(6),
            GroupName::V4 => GroupTable::klein_four(),
            GroupName::S3 => GroupTable::symmetric_3(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// The group algebra of a multiplication table: grouplike basis, products
/// from the table, antipode the inversion permutation.
pub fn group_algebra_from_table(g: &GroupTable, field: FieldSpec) -> HopfAlgebra {
    let n = g.size();
    let coalgebra = Coalgebra::grouplike_basis(field, n);
    let mut mult = Tensor3::zeros(field, n, n, n);
    for a in 0..n {
        for b in 0..n {
            mult.set(a, b, g.mul(a, b), field.one());
        }
    }
    let mut unit = vec![field.zero(); n];
    unit[g.identity()] = field.one();
    let mut antipode = Matrix::zeros(field, n, n);
    for a in 0..n {
        antipode.set(g.inverse(a), a, field.one());
    }
    HopfAlgebra::new(coalgebra, mult, unit, Some(antipode)).expect("valid by construction")
}

pub fn gen_group_algebra(name: GroupName, field: FieldSpec) -> HopfAlgebra {
    group_algebra_from_table(&GroupTable::for_name(name), field)
}

/// The four-dimensional Sweedler Hopf algebra on basis `{1, g, x, gx}`:
/// `g² = 1`, `x² = 0`, `xg = -gx`, `Δx = x⊗1 + g⊗x`. The antipode is left
/// to the solver.
pub fn gen_sweedler(field: FieldSpec) -> Result<HopfAlgebra, OracleError> {
    if field.characteristic() == 2 {
        return Err(OracleError::CharacteristicTwo);
    }
    let one = field.one();
    let minus = field.from_i64(-1);
    let mut comul = Tensor3::zeros(field, 4, 4, 4);
    comul.set(0, 0, 0, one.clone());
    comul.set(1, 1, 1, one.clone());
    comul.set(2, 2, 0, one.clone()); // Δx = x⊗1 + g⊗x
    comul.set(2, 1, 2, one.clone());
    comul.set(3, 3, 1, one.clone()); // Δ(gx) = gx⊗g + 1⊗gx
    comul.set(3, 0, 3, one.clone());
    let counit = vec![one.clone(), one.clone(), field.zero(), field.zero()];
    let coalgebra = Coalgebra::new(field, comul, counit, None)
        .expect("valid by construction")
        .with_labels(vec!["1".into(), "g".into(), "x".into(), "gx".into()]);
    let mut mult = Tensor3::zeros(field, 4, 4, 4);
    for j in 0..4 {
        mult.set(0, j, j, one.clone()); // 1·y = y
    }
    mult.set(1, 0, 1, one.clone());
    mult.set(1, 1, 0, one.clone()); // g·g = 1
    mult.set(1, 2, 3, one.clone()); // g·x = gx
    mult.set(1, 3, 2, one.clone()); // g·gx = x
    mult.set(2, 0, 2, one.clone());
    mult.set(2, 1, 3, minus.clone()); // x·g = -gx
    mult.set(3, 0, 3, one.clone());
    mult.set(3, 1, 2, minus); // gx·g = -x
    let mut unit = vec![field.zero(); 4];
    unit[0] = one;
    Ok(HopfAlgebra::new(coalgebra, mult, unit, None).expect("valid by construction"))
}

/// A finite heap as a ternary operation table, axioms verified exhaustively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteHeapTable {
    size: usize,
    table: Vec<usize>,
}

impl FiniteHeapTable {
    pub fn new(size: usize, table: Vec<usize>) -> Result<Self, OracleError> {
        if size == 0 || table.len() != size * size * size {
            return Err(OracleError::NotAHeap("table size".into()));
        }
        if table.iter().any(|&x| x >= size) {
            return Err(OracleError::NotAHeap("entry out of range".into()));
        }
        let t = FiniteHeapTable { size, table };
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    for d in 0..size {
                        for e in 0..size {
                            if t.get(t.get(a, b, c), d, e) != t.get(a, b, t.get(c, d, e)) {
                                return Err(OracleError::NotAHeap(format!(
                                    "para-associativity fails at ({a},{b},{c},{d},{e})"
                                )));
                            }
                        }
                    }
                }
            }
        }
        for x in 0..size {
            for y in 0..size {
                if t.get(x, x, y) != y {
                    return Err(OracleError::NotAHeap(format!(
                        "[x,x,y] = y fails at ({x},{y})"
                    )));
                }
                if t.get(x, y, y) != x {
                    return Err(OracleError::NotAHeap(format!(
                        "[x,y,y] = x fails at ({x},{y})"
                    )));
                }
            }
        }
        Ok(t)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> usize {
        self.table[(a * self.size + b) * self.size + c]
    }
}

/// The heap of a group: `[x, y, z] = x y⁻¹ z`.
pub fn gen_heap_from_group(g: &GroupTable) -> FiniteHeapTable {
    let n = g.size();
    let mut table = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                table.push(g.mul(g.mul(x, g.inverse(y)), z));
            }
        }
    }
    FiniteHeapTable::new(n, table).expect("group heaps satisfy the heap axioms")
}

/// Linearization of a heap table: grouplike basis, the ternary operation
/// extended linearly.
pub fn linearize_heap(t: &FiniteHeapTable, field: FieldSpec) -> HopfHeap {
    let n = t.size();
    let coalgebra = Coalgebra::grouplike_basis(field, n);
    let mut chi = Tensor4::zeros(field, n, n, n, n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                chi.set(i, j, k, t.get(i, j, k), field.one());
            }
        }
    }
    HopfHeap::new(coalgebra, chi).expect("valid by construction")
}

/// The set-theoretic translation group of a heap table together with the
/// function table of each group element.
#[derive(Debug, Clone)]
pub struct TranslationGroup {
    pub table: GroupTable,
    /// `maps[i]` is the function table of the i-th group element.
    pub maps: Vec<Vec<usize>>,
}

impl TranslationGroup {
    /// Index of the group element equal to the right translation by `(a, b)`.
    pub fn element_of_translation(&self, heap: &FiniteHeapTable, a: usize, b: usize) -> usize {
        let m: Vec<usize> = (0..heap.size()).map(|c| heap.get(c, a, b)).collect();
        self.maps
            .iter()
            .position(|x| *x == m)
            .expect("translation closure")
    }
}

/// Collects the distinct right translations `c ↦ [c, a, b]` of a heap table
/// and verifies they form a group acting freely and transitively.
///
/// The group product is "apply the left factor first" (opposite
/// composition), matching the multiplication of the linearized translation
/// algebra, so for a group heap the translation group reproduces the group.
pub fn set_translation_group(t: &FiniteHeapTable) -> Result<TranslationGroup, OracleError> {
    let n = t.size();
    let mut maps: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let m: Vec<usize> = (0..n).map(|c| t.get(c, a, b)).collect();
            if !maps.contains(&m) {
                maps.push(m);
            }
        }
    }
    let order = maps.len();
    let mut table = Vec::with_capacity(order * order);
    for p in &maps {
        for q in &maps {
            // opposite composition: apply p, then q
            let composite: Vec<usize> = (0..n).map(|c| q[p[c]]).collect();
            let idx = maps.iter().position(|m| *m == composite).ok_or_else(|| {
                OracleError::NotTorsor("translations not closed under composition".into())
            })?;
            table.push(idx);
        }
    }
    let table = GroupTable::new(order, table)
        .map_err(|e| OracleError::NotTorsor(format!("translations are not a group: {e}")))?;
    // free: only the identity fixes a point
    for (i, m) in maps.iter().enumerate() {
        if i != table.identity() && (0..n).any(|x| m[x] == x) {
            return Err(OracleError::NotTorsor(format!(
                "translation {i} has a fixed point"
            )));
        }
    }
    // transitive: some translation moves x to y, for all x, y
    for x in 0..n {
        for y in 0..n {
            if !maps.iter().any(|m| m[x] == y) {
                return Err(OracleError::NotTorsor(format!(
                    "no translation maps {x} to {y}"
                )));
            }
        }
    }
    Ok(TranslationGroup { table, maps })
}

/// Replaces one comultiplication entry; no validity claim.
pub fn perturb_comul(c: &Coalgebra, i: usize, j: usize, k: usize, v: Scalar) -> Coalgebra {
    let mut comul = c.comul().clone();
    comul.set(i, j, k, v);
    Coalgebra::new(
        c.field(),
        comul,
        c.counit().to_vec(),
        c.labels().map(|l| l.to_vec()),
    )
    .expect("shape unchanged")
}

/// Replaces one heap tensor entry; no validity claim.
pub fn perturb_chi(h: &HopfHeap, i: usize, j: usize, k: usize, l: usize, v: Scalar) -> HopfHeap {
    let mut chi = h.chi.clone();
    chi.set(i, j, k, l, v);
    HopfHeap::new(h.coalgebra.clone(), chi).expect("shape unchanged")
}

/// Replaces one multiplication entry; no validity claim.
pub fn perturb_mult(h: &HopfAlgebra, i: usize, j: usize, k: usize, v: Scalar) -> HopfAlgebra {
    let mut mult = h.mult.clone();
    mult.set(i, j, k, v);
    HopfAlgebra::new(
        h.coalgebra.clone(),
        mult,
        h.unit.clone(),
        h.antipode.clone(),
    )
    .expect("shape unchanged")
}

/// Replaces one action entry; no validity claim.
pub fn perturb_action(
    g: &GaloisCoObject,
    i: usize,
    j: usize,
    k: usize,
    v: Scalar,
) -> GaloisCoObject {
    let mut action = g.action().clone();
    action.set(i, j, k, v);
    GaloisCoObject::new(g.module_coalgebra().clone(), g.hopf().clone(), action)
        .expect("shape unchanged")
}
