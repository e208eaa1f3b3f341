//! The input document: a JSON object naming either a built-in fixture or a
//! list of generator matrices.
//!
//! ```json
//! {
//!   "dim": 2,
//!   "generators": [
//!     {"name": "d", "matrix": [[[1, 0], [0, 0]], [[0, 0], [2, 0]]]}
//!   ],
//!   "tolerances": {"eps_rank": 1e-9}
//! }
//! ```
//!
//! Every complex entry is a two-element `[re, im]` array. A fixture document
//! is `{"fixture": "heisenberg-3"}`, optionally with `dim` and `tolerances`.
//! Documents are written with shortest round-trip floats, so parsing a
//! written document gives back the same matrices bit for bit.

use std::collections::HashSet;
use std::path::Path;

use liespectra::fixtures::{self, RANDOM_NILPOTENT_PREFIX};
use liespectra::{LieRep, Matrix, ToleranceProfile};
use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDoc {
    pub name: String,
    /// Rows of `[re, im]` pairs.
    pub matrix: Vec<Vec<[f64; 2]>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TolerancesDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps_rank: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps_cluster: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps_residual: Option<f64>,
}

impl TolerancesDoc {
    /// Overrides on top of the defaults; later values win.
    pub fn merged(self, over: TolerancesDoc) -> Self {
        Self {
            eps_rank: over.eps_rank.or(self.eps_rank),
            eps_cluster: over.eps_cluster.or(self.eps_cluster),
            eps_residual: over.eps_residual.or(self.eps_residual),
        }
    }

    pub fn profile(self) -> Result<ToleranceProfile<f64>, CliError> {
        let d = ToleranceProfile::<f64>::default();
        ToleranceProfile::new(
            self.eps_rank.unwrap_or(d.eps_rank),
            self.eps_cluster.unwrap_or(d.eps_cluster),
            self.eps_residual.unwrap_or(d.eps_residual),
        )
        .map_err(|e| CliError::invalid("tolerances", e.to_string()))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<GeneratorDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerances: Option<TolerancesDoc>,
}

/// A validated document turned into a representation.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub names: Vec<String>,
    pub rep: LieRep<f64>,
    /// The generators written out, whatever the source.
    pub expanded: InputDocument,
}

/// Generator names used for a built-in fixture.
pub fn fixture_generator_names(name: &str, count: usize) -> Vec<String> {
    let fixed: &[&str] = match name {
        fixtures::SOLVABLE_2X2 => &["y", "x"],
        fixtures::HEISENBERG_3 => &["e12", "e23", "e13"],
        fixtures::DIAG_1_2 => &["d"],
        _ => &[],
    };
    if fixed.len() == count {
        fixed.iter().map(|s| s.to_string()).collect()
    } else {
        (0..count).map(|i| format!("x{i}")).collect()
    }
}

/// Parses and validates document text.
pub fn parse_input(text: &str) -> Result<InputDocument, CliError> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| {
        let full = e.to_string();
        let message = full.rsplit_once(" at line ").map_or(full.as_str(), |(m, _)| m).to_string();
        CliError::Parse { line: e.line(), column: e.column(), message }
    })?;
    doc.validate()?;
    Ok(doc)
}

pub fn read_input(path: &Path) -> Result<InputDocument, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_input(&text)
}

impl InputDocument {
    pub fn from_fixture(name: &str) -> Self {
        Self { fixture: Some(name.to_string()), ..Self::default() }
    }

    /// Document listing `gens` under `names`.
    pub fn from_matrices(names: &[String], gens: &[Matrix<f64>], tolerances: Option<TolerancesDoc>) -> Self {
        let dim = gens.first().map_or(0, Matrix::rows);
        let generators = names
            .iter()
            .zip(gens)
            .map(|(name, g)| GeneratorDoc {
                name: name.clone(),
                matrix: (0..g.rows()).map(|i| g.row(i).iter().map(|z| [z.re, z.im]).collect()).collect(),
            })
            .collect();
        Self { dim: Some(dim), fixture: None, generators, tolerances }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if let Some(t) = self.tolerances {
            t.profile()?;
        }
        match (&self.fixture, self.generators.is_empty()) {
            (Some(_), false) => Err(CliError::invalid("fixture", "`fixture` and `generators` are mutually exclusive")),
            (None, true) => Err(CliError::invalid("generators", "document needs `generators` or `fixture`")),
            (Some(name), true) => {
                let gens = fixtures::by_name::<f64>(name).map_err(|e| CliError::invalid("fixture", e.to_string()))?;
                let m = gens[0].rows();
                match self.dim {
                    Some(d) if d != m => {
                        Err(CliError::invalid("dim", format!("fixture {name:?} has dim {m}, document says {d}")))
                    }
                    _ => Ok(()),
                }
            }
            (None, false) => self.validate_generators(),
        }
    }

    fn validate_generators(&self) -> Result<(), CliError> {
        let dim = self.dim.ok_or_else(|| CliError::invalid("dim", "`dim` is required with `generators`"))?;
        if dim == 0 {
            return Err(CliError::invalid("dim", "`dim` must be positive"));
        }
        let mut seen = HashSet::new();
        for (k, g) in self.generators.iter().enumerate() {
            if g.name.is_empty() {
                return Err(CliError::invalid(&format!("generators[{k}].name"), "name must not be empty"));
            }
            if !seen.insert(g.name.as_str()) {
                return Err(CliError::invalid(
                    &format!("generators[{k}].name"),
                    format!("duplicate generator name {:?}", g.name),
                ));
            }
            if g.matrix.len() != dim {
                return Err(CliError::invalid(
                    &format!("generator {:?}", g.name),
                    format!("has {} rows, expected {dim}", g.matrix.len()),
                ));
            }
            for (i, row) in g.matrix.iter().enumerate() {
                if row.len() != dim {
                    return Err(CliError::invalid(
                        &format!("generator {:?}, row {i}", g.name),
                        format!("has {} entries, expected {dim}", row.len()),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Builds the representation. `over` takes precedence over the
    /// document's own tolerances.
    pub fn resolve(&self, over: TolerancesDoc) -> Result<Resolved, CliError> {
        self.validate()?;
        let tol_doc = self.tolerances.unwrap_or_default().merged(over);
        let tol = tol_doc.profile()?;
        let (names, gens) = match &self.fixture {
            Some(name) => {
                let gens = fixtures::by_name::<f64>(name).map_err(|e| CliError::invalid("fixture", e.to_string()))?;
                (fixture_generator_names(name, gens.len()), gens)
            }
            None => {
                let dim = self.dim.expect("validated");
                let gens: Vec<Matrix<f64>> = self
                    .generators
                    .iter()
                    .map(|g| Matrix::from_fn(dim, dim, |i, j| Complex::new(g.matrix[i][j][0], g.matrix[i][j][1])))
                    .collect();
                (self.generators.iter().map(|g| g.name.clone()).collect(), gens)
            }
        };
        let rep = LieRep::new(gens, tol)?;
        let expanded = InputDocument::from_matrices(&names, rep.generators(), self.tolerances);
        Ok(Resolved { names, rep, expanded })
    }
}

/// Names accepted by `--fixture`, for help text.
pub fn fixture_help() -> String {
    format!(
        "{}, {}, {} or {}M-N-SEED",
        fixtures::SOLVABLE_2X2,
        fixtures::HEISENBERG_3,
        fixtures::DIAG_1_2,
        RANDOM_NILPOTENT_PREFIX
    )
}
