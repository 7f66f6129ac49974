//! Self-contained certificates: a serialized Beauville structure plus its
//! verification report, written as a single canonical JSON document
//! (declared field order, integers only, UTF-8, newline-terminated) and
//! sealed with a SHA-256 digest. Re-verification ignores the stored report
//! and recomputes everything from the permutations.

use crate::error::BuildError;
use crate::perm::Permutation;
use crate::structure::{
    verify_structure, BeauvilleStructure, PrimeEvidence, ProductTriple, VerificationReport,
};
use crate::triples::GeneratingTriple;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const FORMAT_VERSION: u32 = 1;

/// Failure modes of certificate handling: `Malformed` for files that do not
/// parse as certificates at all, `Failed` for well-formed certificates that
/// do not verify.
#[derive(Debug, thiserror::Error)]
pub enum CertError {
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("verification failed: {0}")]
    Failed(String),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupDescriptor {
    pub family: String,
    pub degree: usize,
    pub power: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertTriple {
    /// k permutations as 1-based image arrays.
    pub a: Vec<Vec<usize>>,
    pub b: Vec<Vec<usize>>,
    pub c: Vec<Vec<usize>>,
    pub triple_type: [u128; 3],
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertVerification {
    pub condition1_products_identity: bool,
    pub condition2_hyperbolic: bool,
    pub condition3_holds: bool,
    pub condition3_evidence: Vec<PrimeEvidence>,
    /// Generation proof tag per coordinate, per side.
    pub generation_proofs: Vec<Vec<String>>,
    pub invariant_separated_pairs: Vec<u64>,
    pub conjugacy_search_pairs: Vec<u64>,
    pub goursat_checks: Vec<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertProvenance {
    pub recipe: String,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Certificate {
    pub format_version: u32,
    pub group: GroupDescriptor,
    pub seed: u64,
    pub triples: Vec<CertTriple>,
    pub verification: CertVerification,
    pub provenance: CertProvenance,
    /// SHA-256 (hex) of the document serialized with this field empty.
    pub digest: String,
}

fn triple_to_cert(t: &ProductTriple) -> CertTriple {
    let ty = t.triple_type();
    CertTriple {
        a: t.coordinates().iter().map(|c| c.x().images()).collect(),
        b: t.coordinates().iter().map(|c| c.y().images()).collect(),
        c: t.coordinates().iter().map(|c| c.z().images()).collect(),
        triple_type: [ty.0, ty.1, ty.2],
    }
}

fn verification_to_cert(report: &VerificationReport) -> CertVerification {
    CertVerification {
        condition1_products_identity: report.condition1_products_identity,
        condition2_hyperbolic: report.condition2_hyperbolic,
        condition3_holds: report.condition3.holds,
        condition3_evidence: report.condition3.evidence.clone(),
        generation_proofs: report
            .generation
            .iter()
            .map(|g| g.coordinate_proofs.clone())
            .collect(),
        invariant_separated_pairs: report
            .generation
            .iter()
            .map(|g| g.invariant_separated_pairs)
            .collect(),
        conjugacy_search_pairs: report
            .generation
            .iter()
            .map(|g| g.conjugacy_search_pairs)
            .collect(),
        goursat_checks: report
            .generation
            .iter()
            .map(|g| g.goursat_checks.len() as u64)
            .collect(),
    }
}

impl Certificate {
    pub fn from_structure(s: &BeauvilleStructure, seed: u64) -> Certificate {
        let mut cert = Certificate {
            format_version: FORMAT_VERSION,
            group: GroupDescriptor {
                family: "alternating".into(),
                degree: s.first.degree(),
                power: s.first.k(),
            },
            seed,
            triples: vec![triple_to_cert(&s.first), triple_to_cert(&s.second)],
            verification: verification_to_cert(&s.report),
            provenance: CertProvenance {
                recipe: s.provenance.clone(),
                notes: Vec::new(),
            },
            digest: String::new(),
        };
        cert.digest = cert.compute_digest();
        cert
    }

    fn compute_digest(&self) -> String {
        let mut unsealed = self.clone();
        unsealed.digest = String::new();
        let body = serde_json::to_string(&unsealed).expect("certificate serializes");
        let mut hasher = Sha256::new();
        hasher.update(body.as_bytes());
        let out = hasher.finalize();
        out.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Canonical byte form: compact JSON in declared field order, newline
    /// terminated. Identical inputs and seed give identical bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = serde_json::to_string(self).expect("certificate serializes");
        out.push('\n');
        out.into_bytes()
    }

    pub fn parse(bytes: &[u8]) -> Result<Certificate, CertError> {
        let text =
            std::str::from_utf8(bytes).map_err(|e| CertError::Malformed(e.to_string()))?;
        serde_json::from_str(text).map_err(|e| CertError::Malformed(e.to_string()))
    }

    fn lift_triple(&self, idx: usize) -> Result<ProductTriple, CertError> {
        let n = self.group.degree;
        let k = self.group.power;
        let ct = &self.triples[idx];
        if ct.a.len() != k || ct.b.len() != k || ct.c.len() != k {
            return Err(CertError::Failed(format!(
                "triple {} does not have {k} coordinates per generator",
                idx + 1
            )));
        }
        let mut coords = Vec::with_capacity(k);
        for j in 0..k {
            let parse = |imgs: &Vec<usize>, who: &str| -> Result<Permutation, CertError> {
                if imgs.len() != n {
                    return Err(CertError::Failed(format!(
                        "{who}[{}] has degree {} instead of {n}",
                        j + 1,
                        imgs.len()
                    )));
                }
                Permutation::from_images(imgs)
                    .map_err(|e| CertError::Failed(format!("{who}[{}]: {e}", j + 1)))
            };
            let a = parse(&ct.a[j], "a")?;
            let b = parse(&ct.b[j], "b")?;
            let c = parse(&ct.c[j], "c")?;
            let triple =
                GeneratingTriple::from_xy(a, b, format!("certificate[{},{}]", idx + 1, j + 1))
                    .map_err(|e| CertError::Failed(format!("coordinate {}: {e}", j + 1)))?;
            // Condition 1, exactly: the stored c must be the inverse of ab.
            if triple.z() != &c {
                return Err(CertError::Failed(format!(
                    "condition 1 fails at triple {}, coordinate {}: stored c is not (ab)^-1",
                    idx + 1,
                    j + 1
                )));
            }
            coords.push(triple);
        }
        ProductTriple::new(n, coords).map_err(|e| CertError::Failed(e.to_string()))
    }

    /// Full independent re-verification: digest, structure, and the three
    /// conditions, ignoring the stored report (which must nevertheless match
    /// the fresh one). Returns the fresh report.
    pub fn reverify(&self) -> Result<VerificationReport, CertError> {
        if self.format_version != FORMAT_VERSION {
            return Err(CertError::Malformed(format!(
                "unsupported format version {}",
                self.format_version
            )));
        }
        if self.group.family != "alternating" {
            return Err(CertError::Malformed(format!(
                "unsupported family {:?}",
                self.group.family
            )));
        }
        if self.digest != self.compute_digest() {
            return Err(CertError::Failed("digest mismatch".into()));
        }
        if !(5..=64).contains(&self.group.degree) {
            return Err(CertError::Failed(format!(
                "degree {} out of supported range",
                self.group.degree
            )));
        }
        if self.triples.len() != 2 {
            return Err(CertError::Failed(format!(
                "expected 2 triples, found {}",
                self.triples.len()
            )));
        }
        let first = self.lift_triple(0)?;
        let second = self.lift_triple(1)?;
        for (idx, (triple, stored)) in [(&first, &self.triples[0]), (&second, &self.triples[1])]
            .into_iter()
            .enumerate()
        {
            let ty = triple.triple_type();
            if [ty.0, ty.1, ty.2] != stored.triple_type {
                return Err(CertError::Failed(format!(
                    "stored type of triple {} does not match the recomputed type {:?}",
                    idx + 1,
                    ty
                )));
            }
        }
        let report = verify_structure(&first, &second, 2).map_err(|e| match e {
            BuildError::VerificationFailed(msg) => CertError::Failed(msg),
            other => CertError::Failed(other.to_string()),
        })?;
        if verification_to_cert(&report) != self.verification {
            return Err(CertError::Failed(
                "stored verification report does not match the recomputed one".into(),
            ));
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::a5_squared;

    #[test]
    fn round_trip_and_reverify() {
        let s = a5_squared().unwrap();
        let cert = Certificate::from_structure(&s, 0);
        let bytes = cert.to_bytes();
        assert_eq!(bytes.last(), Some(&b'\n'));
        let parsed = Certificate::parse(&bytes).unwrap();
        assert_eq!(parsed, cert);
        let report = parsed.reverify().unwrap();
        assert!(report.all_hold());
    }

    #[test]
    fn deterministic_bytes() {
        let a = Certificate::from_structure(&a5_squared().unwrap(), 3).to_bytes();
        let b = Certificate::from_structure(&a5_squared().unwrap(), 3).to_bytes();
        assert_eq!(a, b);
    }

    #[test]
    fn tampered_permutation_entry_rejected() {
        let s = a5_squared().unwrap();
        let mut cert = Certificate::from_structure(&s, 0);
        cert.triples[0].a[0].swap(0, 1);
        assert!(matches!(cert.reverify(), Err(CertError::Failed(_))));
        // Even with a recomputed digest the math no longer checks out.
        cert.digest = cert.compute_digest();
        assert!(matches!(cert.reverify(), Err(CertError::Failed(_))));
    }

    #[test]
    fn truncated_file_is_malformed() {
        let bytes = Certificate::from_structure(&a5_squared().unwrap(), 0).to_bytes();
        assert!(matches!(
            Certificate::parse(&bytes[..bytes.len() / 2]),
            Err(CertError::Malformed(_))
        ));
    }
}
