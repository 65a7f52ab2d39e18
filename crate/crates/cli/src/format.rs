//! The structure file format: JSON with exact scalars encoded as strings
//! and structure constants as sparse index tuples.
//!
//! Writing is canonical: sparse entries sorted lexicographically by index
//! tuple, scalars in canonical string form, so identical structures produce
//! byte-identical files.

use hopfheap::tensor::{Tensor3, Tensor4};
use hopfheap::{Coalgebra, FieldSpec, GaloisCoObject, HopfAlgebra, HopfHeap, Matrix, Scalar};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("invalid structure file: {0}")]
    Validation(String),
}

impl FormatError {
    fn validation(msg: impl Into<String>) -> Self {
        FormatError::Validation(msg.into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpecFile {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

pub type Triple = (usize, usize, usize, String);
pub type Quintuple = (usize, usize, usize, usize, String);

/// One structure per file: always a coalgebra, optionally a heap tensor
/// and/or a Hopf-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFile {
    pub field: FieldSpecFile,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_labels: Option<Vec<String>>,
    pub counit: Vec<String>,
    pub comul: Vec<Triple>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub heap: Option<Vec<Quintuple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<(usize, usize, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient_of: Option<String>,
}

/// A module-coalgebra pair file: coalgebra, acting Hopf algebra, action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisFile {
    pub coalgebra: StructureFile,
    pub hopf: StructureFile,
    pub action: Vec<Triple>,
}

pub fn field_to_file(field: FieldSpec) -> FieldSpecFile {
    match field {
        FieldSpec::Rationals => FieldSpecFile {
            kind: "Q".into(),
            p: None,
        },
        FieldSpec::PrimeField(p) => FieldSpecFile {
            kind: "Fp".into(),
            p: Some(p),
        },
    }
}

pub fn field_from_file(f: &FieldSpecFile) -> Result<FieldSpec, FormatError> {
    match (f.kind.as_str(), f.p) {
        ("Q", None) => Ok(FieldSpec::Rationals),
        ("Q", Some(_)) => Err(FormatError::validation("field Q takes no modulus")),
        ("Fp", Some(p)) => {
            FieldSpec::prime_field(p).map_err(|e| FormatError::validation(e.to_string()))
        }
        ("Fp", None) => Err(FormatError::validation("field Fp needs a modulus p")),
        (k, _) => Err(FormatError::validation(format!("unknown field kind {k:?}"))),
    }
}

/// Parses `Q` or `Fp:<p>` from a command-line flag.
pub fn field_from_flag(s: &str) -> Result<FieldSpec, FormatError> {
    if s == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(p) = s.strip_prefix("Fp:") {
        let p: u64 = p
            .parse()
            .map_err(|_| FormatError::validation(format!("bad modulus in field flag {s:?}")))?;
        return FieldSpec::prime_field(p).map_err(|e| FormatError::validation(e.to_string()));
    }
    Err(FormatError::validation(format!(
        "field flag must be Q or Fp:<p>, got {s:?}"
    )))
}

fn parse_scalar(field: FieldSpec, s: &str, what: &str) -> Result<Scalar, FormatError> {
    field
        .parse(s)
        .map_err(|e| FormatError::validation(format!("{what}: {e}")))
}

fn parse_vector(
    field: FieldSpec,
    dim: usize,
    v: &[String],
    what: &str,
) -> Result<Vec<Scalar>, FormatError> {
    if v.len() != dim {
        return Err(FormatError::validation(format!(
            "{what} has length {} but dim is {dim}",
            v.len()
        )));
    }
    v.iter().map(|s| parse_scalar(field, s, what)).collect()
}

fn check_index(i: usize, dim: usize, what: &str) -> Result<(), FormatError> {
    if i >= dim {
        return Err(FormatError::validation(format!(
            "{what}: index {i} out of range (dim {dim})"
        )));
    }
    Ok(())
}

fn parse_tensor3(
    field: FieldSpec,
    dims: (usize, usize, usize),
    entries: &[Triple],
    what: &str,
) -> Result<Tensor3, FormatError> {
    let mut t = Tensor3::zeros(field, dims.0, dims.1, dims.2);
    let mut seen = std::collections::HashSet::new();
    for (i, j, k, s) in entries {
        check_index(*i, dims.0, what)?;
        check_index(*j, dims.1, what)?;
        check_index(*k, dims.2, what)?;
        if !seen.insert((*i, *j, *k)) {
            return Err(FormatError::validation(format!(
                "{what}: duplicate entry ({i},{j},{k})"
            )));
        }
        t.set(*i, *j, *k, parse_scalar(field, s, what)?);
    }
    Ok(t)
}

impl StructureFile {
    pub fn field_spec(&self) -> Result<FieldSpec, FormatError> {
        field_from_file(&self.field)
    }

    pub fn to_coalgebra(&self) -> Result<Coalgebra, FormatError> {
        let field = self.field_spec()?;
        if let Some(labels) = &self.basis_labels {
            if labels.len() != self.dim {
                return Err(FormatError::validation("basis_labels length vs dim"));
            }
        }
        let counit = parse_vector(field, self.dim, &self.counit, "counit")?;
        let comul = parse_tensor3(field, (self.dim, self.dim, self.dim), &self.comul, "comul")?;
        Coalgebra::new(field, comul, counit, self.basis_labels.clone())
            .map_err(|e| FormatError::validation(e.to_string()))
    }

    pub fn to_heap(&self) -> Result<HopfHeap, FormatError> {
        let coalgebra = self.to_coalgebra()?;
        let field = coalgebra.field();
        let n = self.dim;
        let entries = self
            .heap
            .as_ref()
            .ok_or_else(|| FormatError::validation("file has no heap section"))?;
        let mut chi = Tensor4::zeros(field, n, n, n, n);
        let mut seen = std::collections::HashSet::new();
        for (i, j, k, l, s) in entries {
            for idx in [i, j, k, l] {
                check_index(*idx, n, "heap")?;
            }
            if !seen.insert((*i, *j, *k, *l)) {
                return Err(FormatError::validation(format!(
                    "heap: duplicate entry ({i},{j},{k},{l})"
                )));
            }
            chi.set(*i, *j, *k, *l, parse_scalar(field, s, "heap")?);
        }
        HopfHeap::new(coalgebra, chi).map_err(|e| FormatError::validation(e.to_string()))
    }

    pub fn to_hopf(&self) -> Result<HopfAlgebra, FormatError> {
        let coalgebra = self.to_coalgebra()?;
        let field = coalgebra.field();
        let n = self.dim;
        let mult_entries = self
            .mult
            .as_ref()
            .ok_or_else(|| FormatError::validation("file has no mult section"))?;
        let mult = parse_tensor3(field, (n, n, n), mult_entries, "mult")?;
        let unit_entries = self
            .unit
            .as_ref()
            .ok_or_else(|| FormatError::validation("file has no unit section"))?;
        let unit = parse_vector(field, n, unit_entries, "unit")?;
        let antipode = match &self.antipode {
            None => None,
            Some(entries) => {
                let mut s = Matrix::zeros(field, n, n);
                let mut seen = std::collections::HashSet::new();
                for (i, j, v) in entries {
                    check_index(*i, n, "antipode")?;
                    check_index(*j, n, "antipode")?;
                    if !seen.insert((*i, *j)) {
                        return Err(FormatError::validation(format!(
                            "antipode: duplicate entry ({i},{j})"
                        )));
                    }
                    s.set(*i, *j, parse_scalar(field, v, "antipode")?);
                }
                Some(s)
            }
        };
        HopfAlgebra::new(coalgebra, mult, unit, antipode)
            .map_err(|e| FormatError::validation(e.to_string()))
    }
}

impl GaloisFile {
    pub fn to_galois(&self) -> Result<GaloisCoObject, FormatError> {
        let c = self.coalgebra.to_coalgebra()?;
        let h = self.hopf.to_hopf()?;
        if self.coalgebra.heap.is_some() {
            return Err(FormatError::validation(
                "pair file coalgebra carries a heap section",
            ));
        }
        let field = c.field();
        if field != h.field() {
            return Err(FormatError::validation("pair file mixes fields"));
        }
        let action = parse_tensor3(field, (c.dim(), h.dim(), c.dim()), &self.action, "action")?;
        GaloisCoObject::new(c, h, action).map_err(|e| FormatError::validation(e.to_string()))
    }
}

fn tensor3_entries(t: &Tensor3) -> Vec<Triple> {
    t.iter_nonzero()
        .map(|(i, j, k, s)| (i, j, k, s.to_canonical_string()))
        .collect()
}

fn vector_entries(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_canonical_string).collect()
}

pub fn from_coalgebra(c: &Coalgebra) -> StructureFile {
    StructureFile {
        field: field_to_file(c.field()),
        dim: c.dim(),
        basis_labels: c.labels().map(|l| l.to_vec()),
        counit: vector_entries(c.counit()),
        comul: tensor3_entries(c.comul()),
        heap: None,
        mult: None,
        unit: None,
        antipode: None,
        quotient_of: None,
    }
}

pub fn from_heap(h: &HopfHeap) -> StructureFile {
    let mut f = from_coalgebra(&h.coalgebra);
    f.heap = Some(
        h.chi
            .iter_nonzero()
            .map(|(i, j, k, l, s)| (i, j, k, l, s.to_canonical_string()))
            .collect(),
    );
    f
}

pub fn from_hopf(h: &HopfAlgebra) -> StructureFile {
    let mut f = from_coalgebra(&h.coalgebra);
    f.mult = Some(tensor3_entries(&h.mult));
    f.unit = Some(vector_entries(&h.unit));
    f.antipode = h.antipode.as_ref().map(|s| {
        let mut entries = Vec::new();
        for i in 0..s.rows() {
            for j in 0..s.cols() {
                let v = s.get(i, j);
                if !v.is_zero() {
                    entries.push((i, j, v.to_canonical_string()));
                }
            }
        }
        entries
    });
    f
}

pub fn from_galois(g: &GaloisCoObject) -> GaloisFile {
    GaloisFile {
        coalgebra: from_coalgebra(g.module_coalgebra()),
        hopf: from_hopf(g.hopf()),
        action: tensor3_entries(g.action()),
    }
}

pub fn write_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfheap::catalog::{gen_group_algebra, gen_sweedler, GroupName};
    use hopfheap::galois::galois_from_heap;
    use hopfheap::heap::heap_from_hopf;

    #[test]
    fn heap_file_round_trip() {
        let heap = heap_from_hopf(&gen_group_algebra(GroupName::S3, FieldSpec::Rationals)).unwrap();
        let file = from_heap(&heap);
        let text = write_json(&file);
        let parsed: StructureFile = serde_json::from_str(&text).unwrap();
        let back = parsed.to_heap().unwrap();
        assert_eq!(back.chi, heap.chi);
        assert_eq!(back.coalgebra, heap.coalgebra);
        // canonical writing is idempotent at the byte level
        assert_eq!(write_json(&parsed), text);
    }

    #[test]
    fn hopf_file_round_trip_with_antipode() {
        let f5 = FieldSpec::prime_field(5).unwrap();
        let hopf = gen_sweedler(f5).unwrap().with_solved_antipode().unwrap();
        let file = from_hopf(&hopf);
        let parsed: StructureFile = serde_json::from_str(&write_json(&file)).unwrap();
        let back = parsed.to_hopf().unwrap();
        assert_eq!(back, hopf);
    }

    #[test]
    fn galois_file_round_trip() {
        let heap = heap_from_hopf(&gen_group_algebra(GroupName::C3, FieldSpec::Rationals)).unwrap();
        let g = galois_from_heap(&heap).unwrap();
        let file = from_galois(&g);
        let parsed: GaloisFile = serde_json::from_str(&write_json(&file)).unwrap();
        let back = parsed.to_galois().unwrap();
        assert_eq!(back.action(), g.action());
        assert_eq!(back.hopf(), g.hopf());
    }

    #[test]
    fn validation_rejects_bad_files() {
        let heap = heap_from_hopf(&gen_group_algebra(GroupName::C2, FieldSpec::Rationals)).unwrap();
        let good = from_heap(&heap);

        let mut dup = good.clone();
        let first = dup.comul[0].clone();
        dup.comul.push(first);
        assert!(dup.to_coalgebra().is_err());

        let mut out_of_range = good.clone();
        out_of_range.comul.push((7, 0, 0, "1".into()));
        assert!(out_of_range.to_coalgebra().is_err());

        let mut bad_scalar = good.clone();
        bad_scalar.comul[0].3 = "1/0".into();
        assert!(bad_scalar.to_coalgebra().is_err());

        let mut bad_field = good.clone();
        bad_field.field = FieldSpecFile {
            kind: "Fp".into(),
            p: Some(6),
        };
        assert!(bad_field.to_coalgebra().is_err());

        let mut not_heap = good;
        not_heap.heap = None;
        assert!(not_heap.to_heap().is_err());
    }

    #[test]
    fn field_flag_parsing() {
        assert_eq!(field_from_flag("Q").unwrap(), FieldSpec::Rationals);
        assert_eq!(
            field_from_flag("Fp:7").unwrap(),
            FieldSpec::prime_field(7).unwrap()
        );
        assert!(field_from_flag("Fp:6").is_err());
        assert!(field_from_flag("R").is_err());
    }

    #[test]
    fn whole_catalog_round_trips() {
        let f7 = FieldSpec::prime_field(7).unwrap();
        let f5 = FieldSpec::prime_field(5).unwrap();
        for field in [FieldSpec::Rationals, f7] {
            for name in GroupName::ALL {
                let hopf = gen_group_algebra(name, field);
                let parsed: StructureFile =
                    serde_json::from_str(&write_json(&from_hopf(&hopf))).unwrap();
                assert_eq!(parsed.to_hopf().unwrap(), hopf, "{name:?}/{field}");
                let heap = heap_from_hopf(&hopf).unwrap();
                let parsed: StructureFile =
                    serde_json::from_str(&write_json(&from_heap(&heap))).unwrap();
                assert_eq!(parsed.to_heap().unwrap(), heap, "{name:?}/{field}");
            }
        }
        for field in [FieldSpec::Rationals, f5] {
            let hopf = gen_sweedler(field).unwrap().with_solved_antipode().unwrap();
            let heap = heap_from_hopf(&hopf).unwrap();
            let parsed: StructureFile =
                serde_json::from_str(&write_json(&from_heap(&heap))).unwrap();
            assert_eq!(parsed.to_heap().unwrap(), heap, "sweedler/{field}");
        }
    }
}
