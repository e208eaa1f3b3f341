//! Report documents and their text rendering.

use std::fmt::Write as _;

use liespectra::report::{Outcome, Report};
use liespectra::{Character, CharacterSet, Matrix, ToleranceProfile};
use serde::ser::Serializer;
use serde::Serialize;

use crate::document::InputDocument;
use crate::format::{format_g, tuple_text, CNum, Num};

pub const CONVENTION: &str =
    "bracket(a, b) = b a - a b; L acts on E by left multiplication; characters list values on the generators in input order";

/// A diagnostic number, printed with 4 significant digits and no snapping.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Diag(pub f64);

impl Serialize for Diag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let raw = serde_json::value::RawValue::from_string(format_g(self.0, 4)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

pub type CharOut = Vec<CNum>;

pub fn char_out(f: &Character<f64>) -> CharOut {
    f.values.iter().map(|z| CNum(*z)).collect()
}

pub fn set_out(s: &CharacterSet<f64>) -> Vec<CharOut> {
    s.iter().map(char_out).collect()
}

pub fn columns_out(m: &Matrix<f64>) -> Vec<CharOut> {
    (0..m.cols()).map(|j| m.column(j).into_iter().map(CNum).collect()).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct TolerancesOut {
    pub eps_rank: Num,
    pub eps_cluster: Num,
    pub eps_residual: Num,
}

impl From<&ToleranceProfile<f64>> for TolerancesOut {
    fn from(t: &ToleranceProfile<f64>) -> Self {
        Self { eps_rank: Num(t.eps_rank), eps_cluster: Num(t.eps_cluster), eps_residual: Num(t.eps_residual) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainOut {
    pub kind: &'static str,
    pub dims: Vec<usize>,
    /// Chain vectors in generator coordinates; `L_i` is spanned by the first `i`.
    pub basis: Vec<CharOut>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightOut {
    pub weight: CharOut,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateOut {
    pub character: CharOut,
    pub homology: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SlodkowskiOut {
    pub k: usize,
    pub delta: Vec<CharOut>,
    pub pi: Vec<CharOut>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyOut {
    pub character: CharOut,
    pub dims: Vec<usize>,
    pub ranks: Vec<usize>,
    pub euler_characteristic: i64,
    pub in_spectrum: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOut {
    pub name: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

pub fn checks_out(r: &Report) -> Vec<CheckOut> {
    r.checks
        .iter()
        .map(|c| {
            let (status, detail) = match &c.outcome {
                Outcome::Pass => ("pass", None),
                Outcome::Fail(w) => ("fail", Some(w.clone())),
                Outcome::NotApplicable(w) => ("n/a", Some(w.clone())),
            };
            CheckOut { name: c.name.clone(), status, detail }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagnosticsOut {
    /// Smallest singular value kept as nonzero, relative to its scale.
    pub min_retained_singular_value: Diag,
    /// Largest singular value treated as zero, relative to its scale.
    pub max_discarded_singular_value: Diag,
}

/// Everything a command reports. Fields a command does not produce are left
/// out of the output.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub command: String,
    pub convention: &'static str,
    pub input: InputDocument,
    pub tolerances: TolerancesOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closure_residual: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nilpotent: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub central_series_dims: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derived_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<ChainOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<WeightOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidates: Option<Vec<CandidateOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma_p: Option<Vec<Vec<CharOut>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sp: Option<Vec<CharOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<Vec<CharOut>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi: Option<Vec<Vec<CharOut>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slodkowski: Option<SlodkowskiOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology: Option<HomologyOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckOut>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<DiagnosticsOut>,
    pub status: &'static str,
}

impl ReportDocument {
    pub fn new(command: &str, input: InputDocument, tol: &ToleranceProfile<f64>) -> Self {
        Self {
            command: command.to_string(),
            convention: CONVENTION,
            input,
            tolerances: tol.into(),
            closure_residual: None,
            nilpotent: None,
            central_series_dims: None,
            derived_dim: None,
            chain: None,
            weights: None,
            candidates: None,
            sigma_p: None,
            sp: None,
            delta: None,
            pi: None,
            slodkowski: None,
            homology: None,
            checks: None,
            notes: Vec::new(),
            diagnostics: None,
            status: "ok",
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(w, "command: {}", self.command);
        let _ = writeln!(w, "convention: {}", self.convention);
        let names: Vec<&str> = self.input.generators.iter().map(|g| g.name.as_str()).collect();
        let _ = writeln!(w, "generators: {} (dim E = {})", names.join(", "), self.input.dim.unwrap_or(0));
        let t = &self.tolerances;
        let _ = writeln!(
            w,
            "tolerances: eps_rank {}, eps_cluster {}, eps_residual {}",
            t.eps_rank.text(),
            t.eps_cluster.text(),
            t.eps_residual.text()
        );
        if let Some(r) = self.closure_residual {
            let _ = writeln!(w, "closure residual: {}", r.text());
        }
        if let Some(n) = self.nilpotent {
            let _ = writeln!(w, "nilpotent: {}", if n { "yes" } else { "no" });
        }
        if let Some(d) = &self.central_series_dims {
            let _ = writeln!(w, "lower central series dims: {d:?}");
        }
        if let Some(d) = self.derived_dim {
            let _ = writeln!(w, "dim [L, L]: {d}");
        }
        if let Some(c) = &self.chain {
            let _ = writeln!(w, "chain ({}):", c.kind);
            for (i, v) in c.basis.iter().enumerate() {
                let _ = writeln!(w, "  y{} = {}", i + 1, tuple(v));
            }
        }
        if let Some(ws) = &self.weights {
            let _ = writeln!(w, "weights:");
            for e in ws {
                let _ = writeln!(w, "  {}  multiplicity {}", tuple(&e.weight), e.multiplicity);
            }
        }
        if let Some(cs) = &self.candidates {
            let _ = writeln!(w, "candidates:");
            for c in cs {
                let _ = writeln!(w, "  {}  homology {:?}", tuple(&c.character), c.homology);
            }
        }
        if let Some(s) = &self.sigma_p {
            for (p, set) in s.iter().enumerate() {
                let _ = writeln!(w, "Sigma_{p}: {}", set_text(set));
            }
        }
        if let Some(s) = &self.sp {
            let _ = writeln!(w, "Sp: {}", set_text(s));
        }
        if let Some(d) = &self.delta {
            for (k, set) in d.iter().enumerate() {
                let _ = writeln!(w, "sigma_delta,{k}: {}", set_text(set));
            }
        }
        if let Some(d) = &self.pi {
            for (k, set) in d.iter().enumerate() {
                let _ = writeln!(w, "sigma_pi,{k}: {}", set_text(set));
            }
        }
        if let Some(s) = &self.slodkowski {
            let _ = writeln!(w, "sigma_delta,{}: {}", s.k, set_text(&s.delta));
            let _ = writeln!(w, "sigma_pi,{}: {}", s.k, set_text(&s.pi));
        }
        if let Some(h) = &self.homology {
            let _ = writeln!(w, "character: {}", tuple(&h.character));
            let _ = writeln!(w, "homology dims: {:?}", h.dims);
            let _ = writeln!(w, "boundary ranks: {:?}", h.ranks);
            let _ = writeln!(w, "euler characteristic: {}", h.euler_characteristic);
            let _ = writeln!(w, "in spectrum: {}", if h.in_spectrum { "yes" } else { "no" });
        }
        if let Some(cs) = &self.checks {
            let _ = writeln!(w, "checks:");
            for c in cs {
                match &c.detail {
                    Some(d) => {
                        let _ = writeln!(w, "  {:<5} {}: {d}", c.status, c.name);
                    }
                    None => {
                        let _ = writeln!(w, "  {:<5} {}", c.status, c.name);
                    }
                }
            }
        }
        for n in &self.notes {
            let _ = writeln!(w, "note: {n}");
        }
        if let Some(d) = &self.diagnostics {
            let _ = writeln!(
                w,
                "singular values: smallest kept {}, largest dropped {}",
                format_g(d.min_retained_singular_value.0, 4),
                format_g(d.max_discarded_singular_value.0, 4)
            );
        }
        let _ = writeln!(w, "status: {}", self.status);
        out
    }
}

fn tuple(v: &CharOut) -> String {
    tuple_text(&v.iter().map(|c| c.0).collect::<Vec<_>>())
}

fn set_text(s: &[CharOut]) -> String {
    let parts: Vec<String> = s.iter().map(tuple).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Text form of a document: one matrix per generator.
pub fn document_text(doc: &InputDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "dim: {}", doc.dim.unwrap_or(0));
    for g in &doc.generators {
        let _ = writeln!(out, "{}:", g.name);
        for row in &g.matrix {
            let cells: Vec<String> =
                row.iter().map(|e| crate::format::complex_text(num_complex::Complex::new(e[0], e[1]))).collect();
            let _ = writeln!(out, "  [{}]", cells.join(", "));
        }
    }
    out
}
