//! The JSON report shared by every command.

use serde::Serialize;
use serde_json::Value;

use frobfix::algebra::forms::ProjPoint;
use frobfix::algebra::Fe;
use frobfix::GfPoly;

/// One verification run. Field order and map key order are fixed, so equal
/// inputs give byte-identical JSON.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub claim: String,
    pub curve: Option<String>,
    pub seed: Option<u64>,
    pub inputs: Value,
    pub outputs: Value,
    pub pass: bool,
    pub diagnostics: Vec<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn summary(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        match &self.curve {
            Some(c) => format!("[{status}] {} ({c})", self.claim),
            None => format!("[{status}] {}", self.claim),
        }
    }
}

pub fn hex(a: Fe) -> String {
    format!("{:#x}", a.bits())
}

pub fn hex_poly(p: &GfPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| hex(*c)).collect()
}

pub fn proj(p: &ProjPoint) -> String {
    if p.is_infinity() {
        "inf".into()
    } else {
        hex(p.x)
    }
}
