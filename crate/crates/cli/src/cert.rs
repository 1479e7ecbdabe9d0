//! JSON form of window certificates.

use std::path::Path;

use morita_core::gorenstein::{verify_window, WindowCertificate};
use serde::{Deserialize, Serialize};

pub const CERT_SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertBody {
    modulus: u64,
    algebra_dim: usize,
    structure_constants: Vec<u64>,
    unit: Vec<u64>,
    width: usize,
    term_dims: Vec<usize>,
    term_actions: Vec<Vec<u64>>,
    differentials: Vec<Vec<u64>>,
    free_ranks: Vec<usize>,
    embeddings: Vec<Vec<u64>>,
    retractions: Vec<Vec<u64>>,
    cocycle_dim: usize,
    cocycle_actions: Vec<u64>,
    kappa: Vec<u64>,
    lambda: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertFile {
    schema_version: u32,
    certificate: CertBody,
}

impl From<&WindowCertificate> for CertBody {
    fn from(c: &WindowCertificate) -> Self {
        CertBody {
            modulus: c.modulus,
            algebra_dim: c.algebra_dim,
            structure_constants: c.structure_constants.clone(),
            unit: c.unit.clone(),
            width: c.width,
            term_dims: c.term_dims.clone(),
            term_actions: c.term_actions.clone(),
            differentials: c.differentials.clone(),
            free_ranks: c.free_ranks.clone(),
            embeddings: c.embeddings.clone(),
            retractions: c.retractions.clone(),
            cocycle_dim: c.cocycle_dim,
            cocycle_actions: c.cocycle_actions.clone(),
            kappa: c.kappa.clone(),
            lambda: c.lambda.clone(),
        }
    }
}

impl From<CertBody> for WindowCertificate {
    fn from(c: CertBody) -> Self {
        WindowCertificate {
            modulus: c.modulus,
            algebra_dim: c.algebra_dim,
            structure_constants: c.structure_constants,
            unit: c.unit,
            width: c.width,
            term_dims: c.term_dims,
            term_actions: c.term_actions,
            differentials: c.differentials,
            free_ranks: c.free_ranks,
            embeddings: c.embeddings,
            retractions: c.retractions,
            cocycle_dim: c.cocycle_dim,
            cocycle_actions: c.cocycle_actions,
            kappa: c.kappa,
            lambda: c.lambda,
        }
    }
}

pub fn to_json(c: &WindowCertificate) -> String {
    let file = CertFile {
        schema_version: CERT_SCHEMA_VERSION,
        certificate: c.into(),
    };
    serde_json::to_string_pretty(&file).expect("certificate serializes")
}

pub fn write(path: &Path, c: &WindowCertificate) -> std::io::Result<()> {
    std::fs::write(path, to_json(c) + "\n")
}

/// Outcome of `morita verify`.
#[derive(Debug, PartialEq, Eq)]
pub enum VerifyOutcome {
    Pass,
    /// The certificate parsed but its replay failed.
    Fail(String),
    /// The file could not be read or is not a certificate.
    Unreadable(String),
}

pub fn from_json(text: &str) -> Result<WindowCertificate, String> {
    let file: CertFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if file.schema_version != CERT_SCHEMA_VERSION {
        return Err(format!("unsupported schema_version {}", file.schema_version));
    }
    Ok(file.certificate.into())
}

pub fn verify_file(path: &Path) -> VerifyOutcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return VerifyOutcome::Unreadable(e.to_string()),
    };
    let cert = match from_json(&text) {
        Ok(c) => c,
        Err(e) => return VerifyOutcome::Unreadable(e),
    };
    match verify_window(&cert) {
        Ok(()) => VerifyOutcome::Pass,
        Err(e) => VerifyOutcome::Fail(e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use morita_core::fixtures::dual_numbers;
    use morita_core::gorenstein::{gorenstein_dimension, totally_acyclic_window};
    use morita_core::module::Module;

    fn sample() -> WindowCertificate {
        let a = dual_numbers();
        let rep = gorenstein_dimension(&a, 2);
        totally_acyclic_window(&rep, &Module::top(&a).unwrap(), 2).unwrap().certificate()
    }

    #[test]
    fn json_round_trip_preserves_the_certificate() {
        let c = sample();
        let back = from_json(&to_json(&c)).unwrap();
        assert_eq!(back, c);
        assert!(verify_window(&back).is_ok());
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let mut v: serde_json::Value = serde_json::from_str(&to_json(&sample())).unwrap();
        v["certificate"]["extra"] = serde_json::json!(1);
        assert!(from_json(&v.to_string()).is_err());
    }
}
