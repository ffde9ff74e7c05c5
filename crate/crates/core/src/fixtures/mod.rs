//! Embedded reference data (printed matrix truncations, sequence prefixes,
//! and OEIS prefixes) keyed by claim id, plus the verification registry
//! that recomputes every claim and compares exactly.

mod checks;

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::exactalg::ParamPoly;
use crate::rcb::FamilyContext;
use crate::report::Report;
use crate::riordan::{SeqVec, TriMatrix};

/// Where a claim's expected data comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// A matrix or sequence printed as a display.
    Display,
    /// An OEIS prefix, embedded statically at the printed length.
    Oeis,
}

/// Expected data for a claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimData {
    Sequence(SeqVec),
    Matrix(TriMatrix),
    /// Identity claims carry no stored data; both sides are computed.
    Identity,
}

/// One registered reference claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceClaim {
    pub claim_id: String,
    pub location: String,
    pub provenance: Provenance,
    pub data: ClaimData,
}

impl ReferenceClaim {
    pub fn sequence(&self) -> &SeqVec {
        match &self.data {
            ClaimData::Sequence(s) => s,
            _ => panic!("claim {} does not hold a sequence", self.claim_id),
        }
    }

    pub fn matrix(&self) -> &TriMatrix {
        match &self.data {
            ClaimData::Matrix(m) => m,
            _ => panic!("claim {} does not hold a matrix", self.claim_id),
        }
    }
}

/// Errors from the fixture registry.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FixtureError {
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error("malformed fixture data: {0}")]
    Malformed(String),
}

/// The full fixture set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixtures {
    claims: Vec<ReferenceClaim>,
    by_id: HashMap<String, usize>,
}

const EMBEDDED_JSON: &str = include_str!("data.json");

impl Fixtures {
    /// The embedded fixture document.
    pub fn embedded() -> &'static Fixtures {
        static CELL: OnceLock<Fixtures> = OnceLock::new();
        CELL.get_or_init(|| Fixtures::from_json(EMBEDDED_JSON).expect("embedded fixtures parse"))
    }

    /// Parse a fixture document from its JSON form.
    pub fn from_json(text: &str) -> Result<Fixtures, FixtureError> {
        let doc: FixturesJson =
            serde_json::from_str(text).map_err(|e| FixtureError::Malformed(e.to_string()))?;
        let mut claims = Vec::with_capacity(doc.claims.len());
        for c in doc.claims {
            claims.push(c.into_claim()?);
        }
        let mut by_id = HashMap::new();
        for (i, c) in claims.iter().enumerate() {
            if by_id.insert(c.claim_id.clone(), i).is_some() {
                return Err(FixtureError::Malformed(format!(
                    "duplicate claim id {:?}",
                    c.claim_id
                )));
            }
        }
        Ok(Fixtures { claims, by_id })
    }

    /// Serialize back to the JSON document form.
    pub fn to_json(&self) -> String {
        let doc = FixturesJson {
            claims: self.claims.iter().map(ClaimJson::from_claim).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("fixtures serialize")
    }

    pub fn lookup(&self, claim_id: &str) -> Result<&ReferenceClaim, FixtureError> {
        self.by_id
            .get(claim_id)
            .map(|&i| &self.claims[i])
            .ok_or_else(|| FixtureError::UnknownClaim(claim_id.to_string()))
    }

    pub fn claims(&self) -> &[ReferenceClaim] {
        &self.claims
    }

    pub fn claim_ids(&self) -> impl Iterator<Item = &str> {
        self.claims.iter().map(|c| c.claim_id.as_str())
    }

    /// Replace a claim's data (used by corruption-injection tests).
    pub fn replace_data(&mut self, claim_id: &str, data: ClaimData) -> Result<(), FixtureError> {
        let idx = *self
            .by_id
            .get(claim_id)
            .ok_or_else(|| FixtureError::UnknownClaim(claim_id.to_string()))?;
        self.claims[idx].data = data;
        Ok(())
    }
}

/// Run every claim whose id matches the glob (`*` wildcards; `None` runs
/// all) and report pass/fail/skipped per claim.
pub fn verify_all(fixtures: &Fixtures, ctx: &FamilyContext, filter: Option<&str>) -> Report {
    let mut report = Report::new();
    for claim in &fixtures.claims {
        if let Some(pat) = filter {
            if !glob_match(pat, &claim.claim_id) {
                continue;
            }
        }
        report.push(checks::run_claim(claim, ctx));
    }
    report
}

/// Minimal glob matcher: literal text with `*` wildcards.
pub fn glob_match(pattern: &str, text: &str) -> bool {
    fn inner(p: &[u8], t: &[u8]) -> bool {
        if p.is_empty() {
            return t.is_empty();
        }
        if p[0] == b'*' {
            (0..=t.len()).any(|i| inner(&p[1..], &t[i..]))
        } else {
            !t.is_empty() && p[0] == t[0] && inner(&p[1..], &t[1..])
        }
    }
    inner(pattern.as_bytes(), text.as_bytes())
}

// -- JSON document form -----------------------------------------------------

#[derive(Serialize, Deserialize)]
struct FixturesJson {
    claims: Vec<ClaimJson>,
}

#[derive(Serialize, Deserialize)]
struct ClaimJson {
    claim_id: String,
    location: String,
    provenance: Provenance,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    data: Option<serde_json::Value>,
}

type PolyJson = Vec<String>;

fn parse_poly(v: &PolyJson, id: &str) -> Result<ParamPoly, FixtureError> {
    ParamPoly::from_coeff_strings(v)
        .map_err(|e| FixtureError::Malformed(format!("claim {id}: {e}")))
}

impl ClaimJson {
    fn into_claim(self) -> Result<ReferenceClaim, FixtureError> {
        let id = self.claim_id.clone();
        let data = match self.kind.as_str() {
            "identity" => ClaimData::Identity,
            "sequence" => {
                let raw: Vec<PolyJson> = serde_json::from_value(
                    self.data
                        .ok_or_else(|| FixtureError::Malformed(format!("{id}: missing data")))?,
                )
                .map_err(|e| FixtureError::Malformed(format!("{id}: {e}")))?;
                let terms = raw
                    .iter()
                    .map(|p| parse_poly(p, &id))
                    .collect::<Result<Vec<_>, _>>()?;
                ClaimData::Sequence(SeqVec::new(terms))
            }
            "matrix" => {
                let raw: Vec<Vec<PolyJson>> = serde_json::from_value(
                    self.data
                        .ok_or_else(|| FixtureError::Malformed(format!("{id}: missing data")))?,
                )
                .map_err(|e| FixtureError::Malformed(format!("{id}: {e}")))?;
                let rows = raw
                    .iter()
                    .map(|row| row.iter().map(|p| parse_poly(p, &id)).collect())
                    .collect::<Result<Vec<_>, _>>()?;
                ClaimData::Matrix(TriMatrix::from_rows(rows))
            }
            other => {
                return Err(FixtureError::Malformed(format!(
                    "{id}: unknown kind {other:?}"
                )))
            }
        };
        Ok(ReferenceClaim {
            claim_id: self.claim_id,
            location: self.location,
            provenance: self.provenance,
            data,
        })
    }

    fn from_claim(claim: &ReferenceClaim) -> ClaimJson {
        let (kind, data) = match &claim.data {
            ClaimData::Identity => ("identity", None),
            ClaimData::Sequence(s) => (
                "sequence",
                Some(
                    serde_json::to_value(s.iter().map(|p| p.coeff_strings()).collect::<Vec<_>>())
                        .expect("sequence serializes"),
                ),
            ),
            ClaimData::Matrix(m) => (
                "matrix",
                Some(
                    serde_json::to_value(
                        m.rows()
                            .iter()
                            .map(|row| row.iter().map(|p| p.coeff_strings()).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                    )
                    .expect("matrix serializes"),
                ),
            ),
        };
        ClaimJson {
            claim_id: claim.claim_id.clone(),
            location: claim.location.clone(),
            provenance: claim.provenance,
            kind: kind.to_string(),
            data,
        }
    }
}

pub use checks::claim_check_exists;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat_int;

    #[test]
    fn embedded_fixtures_parse_and_round_trip() {
        let fx = Fixtures::embedded();
        assert!(fx.claims().len() >= 40);
        // struct-level JSON round trip is exact
        let json = fx.to_json();
        let again = Fixtures::from_json(&json).unwrap();
        assert_eq!(fx, &again);
        // and stable the second time around
        assert_eq!(json, again.to_json());
    }

    #[test]
    fn claim_ids_unique_and_checked() {
        let fx = Fixtures::embedded();
        for claim in fx.claims() {
            assert!(
                claim_check_exists(&claim.claim_id),
                "no check registered for {}",
                claim.claim_id
            );
            assert!(!claim.location.is_empty());
        }
    }

    #[test]
    fn lookup_known_and_unknown() {
        let fx = Fixtures::embedded();
        let c = fx.lookup("oeis.A006013.prefix").unwrap();
        assert_eq!(c.sequence(), &SeqVec::from_ints(&[1, 2, 7, 30, 143]));
        assert!(matches!(
            fx.lookup("nosuch"),
            Err(FixtureError::UnknownClaim(_))
        ));
    }

    #[test]
    fn glob_matching() {
        assert!(glob_match("*", "anything"));
        assert!(glob_match("oeis.*", "oeis.A005161.prefix"));
        assert!(!glob_match("oeis.*", "central.prefix"));
        assert!(glob_match("*.7x7", "coeff_array.7x7"));
        assert!(glob_match("central.prefix", "central.prefix"));
        assert!(!glob_match("central.prefix", "central.prefix2"));
    }

    #[test]
    fn corrupted_claim_fails_exactly_there() {
        let mut fx = Fixtures::embedded().clone();
        let mut seq = fx.lookup("moments.prefix").unwrap().sequence().clone();
        let mut terms: Vec<ParamPoly> = seq.terms().to_vec();
        terms[4] = &terms[4] + &ParamPoly::one();
        seq = SeqVec::new(terms);
        fx.replace_data("moments.prefix", ClaimData::Sequence(seq))
            .unwrap();
        let ctx = FamilyContext::symbolic(crate::rcb::DEFAULT_ORDER);
        let report = verify_all(&fx, &ctx, Some("moments.*"));
        let failed: Vec<_> = report.failures().map(|c| c.claim_id.clone()).collect();
        assert_eq!(failed, vec!["moments.prefix".to_string()]);
    }

    #[test]
    fn boubaker_subset_passes_numeric() {
        let ctx = FamilyContext::numeric(rat_int(3), crate::rcb::DEFAULT_ORDER);
        let report = verify_all(Fixtures::embedded(), &ctx, Some("centralplus.r3.*"));
        assert!(report.all_passed(), "{report:?}");
        assert!(report.checks.len() >= 2);
    }
}
