//! JSON forms of scalars and matrices. Exact values are written as a
//! conductor and the rational power-basis coefficients, approximate ones
//! as `[re, im]`.

use crate::error::{CliError, CliResult};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use skein_core::linalg::SparseMat;
use skein_core::scalar::{Approx, Cyclo, CycloField, Ring};
use std::collections::HashMap;
use std::str::FromStr;
use std::sync::Arc;

pub const SCHEMA: &str = "skein-kernel/1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Exact { conductor: usize, coefficients: Vec<String> },
    Approx([f64; 2]),
}

pub fn parse_rational(s: &str) -> CliResult<BigRational> {
    BigRational::from_str(s.trim()).map_err(|_| CliError::Inadmissible(format!("'{s}' is not a rational number")))
}

/// Cyclotomic fields by conductor, built once.
#[derive(Default)]
pub struct FieldTable {
    fields: HashMap<usize, Arc<CycloField>>,
}

impl FieldTable {
    pub fn get(&mut self, conductor: usize) -> Arc<CycloField> {
        self.fields.entry(conductor).or_insert_with(|| CycloField::new(conductor)).clone()
    }
}

/// Scalars with a lossless JSON form.
pub trait JsonScalar: Ring {
    fn to_json(&self) -> ScalarJson;
    /// Reads a value into the context of `template`.
    fn from_json(j: &ScalarJson, template: &Self, fields: &mut FieldTable) -> CliResult<Self>;
}

impl JsonScalar for Cyclo {
    fn to_json(&self) -> ScalarJson {
        ScalarJson::Exact { conductor: self.conductor(), coefficients: self.coeffs().iter().map(|c| c.to_string()).collect() }
    }

    fn from_json(j: &ScalarJson, template: &Self, fields: &mut FieldTable) -> CliResult<Self> {
        let ScalarJson::Exact { conductor, coefficients } = j else {
            return Err(CliError::Inadmissible("expected an exact scalar".into()));
        };
        if *conductor == 0 {
            return Err(CliError::Inadmissible("conductor must be positive".into()));
        }
        let field = fields.get(*conductor);
        let coeffs = coefficients.iter().map(|c| parse_rational(c)).collect::<CliResult<Vec<_>>>()?;
        let value = Cyclo::from_coeffs(&field, &coeffs);
        if template.conductor() == *conductor {
            Ok(value)
        } else {
            value.embed(template.field()).map_err(|e| CliError::Inadmissible(e.to_string()))
        }
    }
}

impl JsonScalar for Approx {
    fn to_json(&self) -> ScalarJson {
        let z = self.value();
        ScalarJson::Approx([z.re, z.im])
    }

    fn from_json(j: &ScalarJson, template: &Self, _: &mut FieldTable) -> CliResult<Self> {
        match j {
            ScalarJson::Approx([re, im]) => {
                Ok(Approx::new(num_complex::Complex64::new(*re, *im), template.tolerance()))
            }
            ScalarJson::Exact { .. } => Err(CliError::Inadmissible("expected an approximate scalar".into())),
        }
    }
}

/// Lift values per edge and the order of the coloring basis.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisManifest {
    pub ordering: String,
    pub size: usize,
    pub lifts: Vec<Vec<String>>,
}

impl BasisManifest {
    pub fn of(basis: &skein_core::skein::ColoringBasis) -> Self {
        let lifts =
            (0..basis.edge_count()).map(|e| (0..basis.n()).map(|j| basis.lift(e, j).to_string()).collect()).collect();
        Self {
            ordering: "lexicographic in the lift index, first edge most significant".into(),
            size: basis.len(),
            lifts,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheStats {
    pub memory_hits: u64,
    pub disk_hits: u64,
    pub computed: u64,
    pub spot_checked: u64,
}

/// A sparse matrix document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub schema: String,
    pub curve: String,
    pub rows: usize,
    pub cols: usize,
    /// `(row, column, value)` for every nonzero entry.
    pub entries: Vec<(usize, usize, ScalarJson)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<BasisManifest>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cache: Option<CacheStats>,
}

impl MatrixDoc {
    pub fn from_matrix<S: JsonScalar>(curve: &str, m: &SparseMat<S>) -> Self {
        Self {
            schema: SCHEMA.into(),
            curve: curve.into(),
            rows: m.rows(),
            cols: m.ncols(),
            entries: m.entries().map(|(i, j, v)| (i, j, v.to_json())).collect(),
            basis: None,
            cache: None,
        }
    }

    pub fn to_matrix<S: JsonScalar>(&self, template: &S) -> CliResult<SparseMat<S>> {
        if self.schema != SCHEMA {
            return Err(CliError::Inadmissible(format!("unknown schema {}", self.schema)));
        }
        let mut fields = FieldTable::default();
        let mut triplets = Vec::with_capacity(self.entries.len());
        for (i, j, v) in &self.entries {
            if *i >= self.rows || *j >= self.cols {
                return Err(CliError::Inadmissible(format!("entry ({i}, {j}) outside {}x{}", self.rows, self.cols)));
            }
            triplets.push((*i, *j, S::from_json(v, template, &mut fields)?));
        }
        Ok(SparseMat::from_triplets(self.rows, self.cols, template, triplets))
    }

    /// `row,col,value` lines; exact values as `conductor:c0;c1;...`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("row,col,value\n");
        for (i, j, v) in &self.entries {
            let cell = match v {
                ScalarJson::Exact { conductor, coefficients } => format!("{conductor}:{}", coefficients.join(";")),
                ScalarJson::Approx([re, im]) => format!("{re:e}{im:+e}i"),
            };
            out.push_str(&format!("{i},{j},{cell}\n"));
        }
        out
    }
}
