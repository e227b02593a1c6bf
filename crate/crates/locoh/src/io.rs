//! JSON problem descriptions and structured output.

use crate::error::{Error, Result};
use crate::homology::FieldSpec;
use crate::monomial::{Monomial, MonomialIdeal, VariablePartition};
use crate::series::{Grading, RationalSeries, SeriesTerm};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "locoh/1";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorInput {
    pub x: Vec<u32>,
    pub y: Vec<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProblemInput {
    pub x_vars: Vec<String>,
    pub y_vars: Vec<String>,
    pub generators: Vec<GeneratorInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
}

impl ProblemInput {
    pub fn from_json(text: &str) -> Result<Self> {
        let input: ProblemInput =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
        input.validate()?;
        Ok(input)
    }

    pub fn validate(&self) -> Result<()> {
        let (m, n) = (self.x_vars.len(), self.y_vars.len());
        for g in &self.generators {
            if g.x.len() != m {
                return Err(Error::DegreeLength { expected: m, got: g.x.len() });
            }
            if g.y.len() != n {
                return Err(Error::DegreeLength { expected: n, got: g.y.len() });
            }
        }
        if let Some(f) = &self.field {
            f.validate()?;
        }
        Ok(())
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        let partition = VariablePartition::new(self.x_vars.clone(), self.y_vars.clone())?;
        let gens = self
            .generators
            .iter()
            .map(|g| Monomial::new(g.x.clone(), g.y.clone()))
            .collect();
        MonomialIdeal::new(partition, gens)
    }

    /// Field choice: explicit input field wins, then the `LOCOH_FIELD`
    /// environment variable (`Q` or `Fp:<p>`), then the rationals.
    pub fn resolve_field(&self) -> Result<FieldSpec> {
        if let Some(f) = self.field {
            return Ok(f);
        }
        match std::env::var("LOCOH_FIELD") {
            Ok(v) => parse_field(&v),
            Err(_) => Ok(FieldSpec::Rationals),
        }
    }
}

pub fn parse_field(v: &str) -> Result<FieldSpec> {
    if v == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(p) = v.strip_prefix("Fp:") {
        let p: u64 = p
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad LOCOH_FIELD prime: {v}")))?;
        let f = FieldSpec::Prime { p };
        f.validate()?;
        return Ok(f);
    }
    Err(Error::InvalidInput(format!(
        "bad LOCOH_FIELD value {v:?}; expected \"Q\" or \"Fp:<p>\""
    )))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeriesOutput {
    pub schema: String,
    pub grading: Grading,
    pub vars: Vec<String>,
    pub x_count: usize,
    pub terms: Vec<SeriesTerm>,
    pub rendered: String,
}

impl SeriesOutput {
    pub fn from_series(series: &RationalSeries) -> Self {
        Self {
            schema: SCHEMA.to_string(),
            grading: series.grading,
            vars: series.vars.clone(),
            x_count: series.x_count,
            terms: series.terms.clone(),
            rendered: series.rendered(),
        }
    }

    pub fn to_series(&self) -> RationalSeries {
        RationalSeries {
            grading: self.grading,
            vars: self.vars.clone(),
            x_count: self.x_count,
            terms: self.terms.clone(),
        }
    }
}
