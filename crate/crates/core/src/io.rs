//! Bit-exact JSON input and report documents. All scalars travel as strings
//! in the canonical grammar of the scalar module; no floats anywhere.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{MultTensor, StructureAlgebra};
use crate::error::{Error, Result};
use crate::hopf::{ComultTensor, HopfData};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Sparse presentation of an algebra or Hopf algebra. The Hopf layer
/// (counit, comult, antipode) is optional; operations requiring it report a
/// clear error when it is absent.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct InputDocument {
    pub name: String,
    /// "Q" or "Qi"
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
    /// (index, coefficient)
    pub unit: Vec<(usize, String)>,
    /// (i, j, k, c): b_i b_j contains c * b_k
    pub mult: Vec<(usize, usize, usize, String)>,
    /// (index, value)
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<(usize, String)>>,
    /// (i, p, q, c): Delta(b_i) contains c * b_p (x) b_q
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<(usize, usize, usize, String)>>,
    /// (row, col, c): column i holds S(b_i)
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<(usize, usize, String)>>,
    /// named module fixtures: rho(b_i) as dense row-major string matrices
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub reps: BTreeMap<String, Vec<Vec<Vec<String>>>>,
}

impl InputDocument {
    pub fn check_indices(&self) -> Result<()> {
        let n = self.dim;
        if self.basis.len() != n {
            return Err(Error::Input(format!(
                "dim is {n} but {} basis labels given",
                self.basis.len()
            )));
        }
        let bad = |what: &str, idx: usize| {
            Error::Input(format!("{what} index {idx} out of range (dim {n})"))
        };
        for (i, _) in &self.unit {
            if *i >= n {
                return Err(bad("unit", *i));
            }
        }
        for (i, j, k, _) in &self.mult {
            for idx in [i, j, k] {
                if *idx >= n {
                    return Err(bad("mult", *idx));
                }
            }
        }
        if let Some(c) = &self.counit {
            for (i, _) in c {
                if *i >= n {
                    return Err(bad("counit", *i));
                }
            }
        }
        if let Some(cm) = &self.comult {
            for (i, p, q, _) in cm {
                for idx in [i, p, q] {
                    if *idx >= n {
                        return Err(bad("comult", *idx));
                    }
                }
            }
        }
        if let Some(s) = &self.antipode {
            for (r, c, _) in s {
                for idx in [r, c] {
                    if *idx >= n {
                        return Err(bad("antipode", *idx));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_algebra<T: Scalar>(&self) -> Result<StructureAlgebra<T>> {
        self.check_indices()?;
        let n = self.dim;
        let mut unit = vec![T::zero(); n];
        for (i, c) in &self.unit {
            unit[*i] = T::parse(c)?;
        }
        let mut mult: MultTensor<T> = vec![vec![Vec::new(); n]; n];
        for (i, j, k, c) in &self.mult {
            mult[*i][*j].push((*k, T::parse(c)?));
        }
        Ok(StructureAlgebra::new(self.basis.clone(), mult, unit))
    }

    pub fn to_hopf<T: Scalar>(&self) -> Result<HopfData<T>> {
        let algebra = self.to_algebra()?;
        let n = self.dim;
        let counit_raw = self.counit.as_ref().ok_or_else(|| {
            Error::Input("input has no counit; Hopf operations need counit/comult/antipode".into())
        })?;
        let comult_raw = self.comult.as_ref().ok_or_else(|| {
            Error::Input("input has no comult; Hopf operations need counit/comult/antipode".into())
        })?;
        let antipode_raw = self.antipode.as_ref().ok_or_else(|| {
            Error::Input("input has no antipode; Hopf operations need counit/comult/antipode".into())
        })?;
        let mut counit = vec![T::zero(); n];
        for (i, c) in counit_raw {
            counit[*i] = T::parse(c)?;
        }
        let mut comult: ComultTensor<T> = vec![Vec::new(); n];
        for (i, p, q, c) in comult_raw {
            comult[*i].push((*p, *q, T::parse(c)?));
        }
        let mut antipode = Matrix::zero(n, n);
        for (r, c, v) in antipode_raw {
            antipode[(*r, *c)] = T::parse(v)?;
        }
        Ok(HopfData {
            algebra,
            comult,
            counit,
            antipode,
        })
    }

    pub fn rep<T: Scalar>(&self, name: &str) -> Result<Vec<Matrix<T>>> {
        let raw = self
            .reps
            .get(name)
            .ok_or_else(|| Error::Input(format!("no rep named {name:?} in input")))?;
        raw.iter()
            .map(|m| {
                let rows: Result<Vec<Vec<T>>> = m
                    .iter()
                    .map(|row| row.iter().map(|s| T::parse(s)).collect())
                    .collect();
                Ok(Matrix::from_rows(rows?))
            })
            .collect()
    }
}

/// Render a Hopf algebra back into the sparse document form (canonical
/// scalar strings, entries in deterministic index order).
pub fn dump_hopf<T: Scalar>(name: &str, h: &HopfData<T>) -> InputDocument {
    let n = h.dim();
    let unit = h
        .algebra
        .unit
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.render()))
        .collect();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in &h.algebra.mult[i][j] {
                if !c.is_zero() {
                    mult.push((i, j, *k, c.render()));
                }
            }
        }
    }
    let counit = h
        .counit
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.render()))
        .collect();
    let mut comult = Vec::new();
    for i in 0..n {
        for (p, q, c) in &h.comult[i] {
            if !c.is_zero() {
                comult.push((i, *p, *q, c.render()));
            }
        }
    }
    let mut antipode = Vec::new();
    for r in 0..n {
        for c in 0..n {
            let v = &h.antipode[(r, c)];
            if !v.is_zero() {
                antipode.push((r, c, v.render()));
            }
        }
    }
    InputDocument {
        name: name.to_string(),
        field: T::FIELD_NAME.to_string(),
        dim: n,
        basis: h.algebra.basis_labels.clone(),
        unit,
        mult,
        counit: Some(counit),
        comult: Some(comult),
        antipode: Some(antipode),
        reps: BTreeMap::new(),
    }
}

/// One named verdict in a report.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOut {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockTable {
    pub degrees: Vec<usize>,
    /// character rows as canonical scalar strings
    pub characters: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndicatorRow {
    pub index: usize,
    pub degree: usize,
    pub nu2: String,
    pub self_dual: bool,
    pub nu_m: Vec<(usize, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Sq2Row {
    pub index: usize,
    pub degree: usize,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<String>>,
    pub integral: bool,
}

/// Machine-readable run report. All scalar values are canonical strings.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub name: String,
    pub field: String,
    pub command: String,
    pub seed: u64,
    pub checks: Vec<CheckOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocks: Option<BlockTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub indicators: Option<Vec<IndicatorRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace_s: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sq2: Option<Vec<Sq2Row>>,
    pub elapsed_ms: u128,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{preset, Preset};
    use crate::scalar::{GaussianRational, Rational};

    #[test]
    fn preset_dump_round_trip() {
        let h = preset::<Rational>(Preset::S3).unwrap();
        let doc = dump_hopf("s3", &h);
        let text = serde_json::to_string_pretty(&doc).unwrap();
        let back: InputDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        let h2 = back.to_hopf::<Rational>().unwrap();
        // tensor-level equality
        assert_eq!(h2.algebra.mult, h.algebra.mult);
        assert_eq!(h2.algebra.unit, h.algebra.unit);
        assert_eq!(h2.comult, h.comult);
        assert_eq!(h2.counit, h.counit);
        assert_eq!(h2.antipode, h.antipode);
    }

    #[test]
    fn kac16_round_trip_over_qi() {
        let h = preset::<GaussianRational>(Preset::Kac16).unwrap();
        let doc = dump_hopf("kac16", &h);
        let text = serde_json::to_string(&doc).unwrap();
        let back: InputDocument = serde_json::from_str(&text).unwrap();
        let h2 = back.to_hopf::<GaussianRational>().unwrap();
        assert_eq!(h2.comult, h.comult);
        assert_eq!(h2.antipode, h.antipode);
        assert!(h2.verify().pass());
    }

    #[test]
    fn missing_hopf_fields_is_informative() {
        let h = preset::<Rational>(Preset::C2).unwrap();
        let mut doc = dump_hopf("c2", &h);
        doc.comult = None;
        match doc.to_hopf::<Rational>() {
            Err(Error::Input(msg)) => assert!(msg.contains("comult")),
            other => panic!("expected Input error, got {other:?}"),
        }
        assert!(doc.to_algebra::<Rational>().is_ok());
    }

    #[test]
    fn index_out_of_range_rejected() {
        let h = preset::<Rational>(Preset::C2).unwrap();
        let mut doc = dump_hopf("c2", &h);
        doc.mult.push((0, 0, 5, "1".into()));
        assert!(matches!(doc.to_algebra::<Rational>(), Err(Error::Input(_))));
    }
}
