//! The monodromy command: JSON matrix input and its report.

use serde::Deserialize;
use serde_json::{json, Value};

use frobfix::algebra::{BinaryField, Fe};
use frobfix::algebra::gf2m::parse_hex;
use frobfix::periodic::{extract_representation, order_growth_profile, FrobPeriodicModule, SeriesMatrix};
use frobfix::{Error, Result};

use crate::report::{hex, Report};

/// `{"q": 2, "field_degree": 1, "n": 3, "matrix": [[["0x1", "0x1"]]]}`.
/// Entries are polynomials in s, coefficients as hex masks from s^0 up.
/// `field_degree` defaults to log2 q and `n` to the profile length.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixInput {
    pub q: u64,
    pub field_degree: Option<u32>,
    pub r: Option<usize>,
    pub n: Option<usize>,
    pub matrix: Vec<Vec<Vec<String>>>,
}

impl MatrixInput {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))
    }

    pub fn q_log(&self) -> Result<u32> {
        if self.q < 2 || !self.q.is_power_of_two() {
            return Err(Error::Parse(format!("q = {} is not a power of 2", self.q)));
        }
        Ok(self.q.trailing_zeros())
    }

    fn masks(&self) -> Result<Vec<Vec<Vec<u64>>>> {
        if let Some(r) = self.r {
            if r != self.matrix.len() {
                return Err(Error::Parse(format!("r = {r} but the matrix has {} rows", self.matrix.len())));
            }
        }
        self.matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.iter().map(|h| parse_hex(h).ok_or_else(|| Error::Parse(format!("bad hex {h:?}")))).collect())
                    .collect()
            })
            .collect()
    }

    /// The module at truncation n: entries reduced mod s^n.
    pub fn module(&self, n: usize) -> Result<FrobPeriodicModule> {
        let q_log = self.q_log()?;
        let field = BinaryField::default_for(self.field_degree.unwrap_or(q_log))?;
        let masks: Vec<Vec<Vec<u64>>> = self
            .masks()?
            .into_iter()
            .map(|row| row.into_iter().map(|e| e.into_iter().take(n).collect()).collect())
            .collect();
        FrobPeriodicModule::from_masks(q_log, field, n, &masks)
    }
}

fn matrix_json(m: &SeriesMatrix) -> Value {
    let rows: Vec<Vec<Vec<String>>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).coeffs().iter().map(|c: &Fe| hex(*c)).collect()).collect())
        .collect();
    json!(rows)
}

fn order_json(o: Option<u64>, cap: u64) -> Value {
    match o {
        Some(m) => json!(m),
        None => json!(format!(">={cap}")),
    }
}

pub fn run(input: &MatrixInput, n_max: usize, cap: u64) -> Report {
    let n = input.n.unwrap_or(n_max);
    let inputs = json!({"q": input.q, "field_degree": input.field_degree, "n": n, "n_max": n_max, "cap": cap, "matrix": input.matrix});
    let result = (|| -> Result<(Value, Vec<String>)> {
        let module = input.module(n)?;
        let profile = order_growth_profile(|k| input.module(k), n_max, cap)?;
        let mut diagnostics = Vec::new();
        if !profile.decreases.is_empty() {
            diagnostics.push(format!("order profile decreases at n = {:?}", profile.decreases));
        }
        let mut out = json!({
            "rank": module.rank(),
            "profile": profile.orders.iter().map(|&o| order_json(o, cap)).collect::<Vec<_>>(),
            "profile_decreases": profile.decreases,
            "strict": frobfix::periodic::is_strict(&module),
        });
        match extract_representation(&module, cap) {
            Ok(rep) => {
                let obj = out.as_object_mut().expect("object");
                obj.insert("order".into(), json!(rep.m));
                obj.insert("rho".into(), matrix_json(&rep.rho));
                obj.insert("rho_order".into(), json!(rep.rho_order));
                obj.insert("witness".into(), matrix_json(&rep.trivialization.witness));
                obj.insert("witness_field_degree".into(), json!(rep.trivialization.embedding.target().degree()));
                obj.insert("level_degrees".into(), json!(rep.trivialization.level_degrees));
            }
            Err(Error::Precondition(msg)) => {
                out.as_object_mut().expect("object").insert("order".into(), order_json(None, cap));
                diagnostics.push(msg);
            }
            Err(e) => return Err(e),
        }
        Ok((out, diagnostics))
    })();
    let (outputs, pass, diagnostics) = match result {
        Ok((o, d)) => (o, true, d),
        Err(e) => (Value::Null, false, vec![format!("error: {e}")]),
    };
    Report { claim: "monodromy".into(), curve: None, seed: None, inputs, outputs, pass, diagnostics }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_pads_polynomials() {
        let input = MatrixInput::parse(r#"{"q": 2, "matrix": [[["0x1", "0x1"]]]}"#).unwrap();
        assert_eq!(input.module(1).unwrap().n(), 1);
        let m = input.module(4).unwrap();
        assert_eq!(m.matrix().get(0, 0).coeffs().len(), 4);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(MatrixInput::parse(r#"{"q": 3, "matrix": [[["0x1"]]]}"#).unwrap().q_log().is_err());
        assert!(MatrixInput::parse(r#"{"q": 2, "matrix": [[["0x2"]]]}"#).unwrap().module(1).is_err());
        assert!(MatrixInput::parse(r#"{"q": 2, "bogus": 1, "matrix": []}"#).is_err());
        assert!(MatrixInput::parse(r#"{"q": 2, "r": 2, "matrix": [[["0x1"]]]}"#).unwrap().module(1).is_err());
    }

    #[test]
    fn one_plus_s_profile() {
        let input = MatrixInput::parse(r#"{"q": 2, "matrix": [[["0x1", "0x1"]]]}"#).unwrap();
        let rep = run(&input, 8, 64);
        assert!(rep.pass);
        assert_eq!(rep.outputs["profile"], json!([1, 2, 4, 4, 8, 8, 8, 8]));
    }
}
