use std::collections::BTreeMap;

use serde::Deserialize;

use super::CliError;
use crate::detvar::{Ambient, DeterminantalModel};
use crate::polyalg::{parse_polynomial, PolyMatrix, Polynomial, Vars};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkbenchInput {
    pub schema_version: u32,
    pub variables: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    pub t: usize,
    pub ambient: AmbientSpec,
    pub weights: Option<Vec<i64>>,
    pub singularities: Vec<SingularitySpec>,
    pub form: Option<FormSpec>,
    pub known: Option<Known>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmbientSpec {
    pub kind: AmbientKind,
    pub dim: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AmbientKind {
    Projective,
    Affine,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SingularitySpec {
    pub point: String,
    pub n: Option<usize>,
    pub p: Option<usize>,
    pub t: Option<usize>,
    pub d: Option<usize>,
    pub smoothable: Option<bool>,
    pub mu: Option<u64>,
    pub chi_smoothing: Option<i64>,
    pub chi_lower_stratum: Option<i64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FormSpec {
    Cstar,
    Explicit { coefficients: Vec<String> },
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Known {
    #[serde(rename = "chi_X")]
    pub chi_x: Option<i64>,
    #[serde(default)]
    pub indices: BTreeMap<String, i64>,
}

/// A validated input file.
#[derive(Debug, Clone)]
pub struct Workbench {
    pub input: WorkbenchInput,
    pub vars: Vars,
    pub model: DeterminantalModel,
}

impl Workbench {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let input: WorkbenchInput =
            serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid input: {}", e)))?;
        if input.schema_version != SCHEMA_VERSION {
            return Err(CliError::Input(format!(
                "unsupported schema_version {} (expected {})",
                input.schema_version, SCHEMA_VERSION
            )));
        }
        let vars: Vars = input.variables.iter().cloned().collect();
        let mut grid = Vec::with_capacity(input.matrix.len());
        for (i, row) in input.matrix.iter().enumerate() {
            let mut parsed = Vec::with_capacity(row.len());
            for (j, s) in row.iter().enumerate() {
                parsed.push(parse_at(s, &vars, &format!("matrix[{}][{}]", i, j))?);
            }
            grid.push(parsed);
        }
        let matrix = PolyMatrix::new(&vars, grid).map_err(|e| CliError::Input(e.to_string()))?;
        let ambient = match input.ambient.kind {
            AmbientKind::Projective => Ambient::Projective(input.ambient.dim),
            AmbientKind::Affine => Ambient::Affine(input.ambient.dim),
        };
        let model = DeterminantalModel::new(matrix, input.t, ambient).map_err(|e| CliError::Input(e.to_string()))?;
        Ok(Workbench { input, vars, model })
    }

    pub fn known(&self) -> Known {
        self.input.known.clone().unwrap_or_default()
    }

    /// Coefficients of an explicit form.
    pub fn form_coefficients(&self) -> Result<Vec<Polynomial>, CliError> {
        match &self.input.form {
            Some(FormSpec::Explicit { coefficients }) => coefficients
                .iter()
                .enumerate()
                .map(|(i, s)| parse_at(s, &self.vars, &format!("form.coefficients[{}]", i)))
                .collect(),
            Some(FormSpec::Cstar) => Err(CliError::Input("a cstar form has no explicit coefficients".into())),
            None => Err(CliError::Input("input has no form".into())),
        }
    }
}

fn parse_at(s: &str, vars: &Vars, place: &str) -> Result<Polynomial, CliError> {
    parse_polynomial(s, vars).map_err(|e| CliError::Input(format!("{}: {}", place, e)))
}
