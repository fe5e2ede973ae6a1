//! The machine-readable results catalog: one JSON object per line, keys in a
//! fixed order, lossless round-trips. Verification re-derives every record
//! from scratch and compares field by field (timestamps excluded).

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ea::MdsVerdict;
use crate::error::{Error, Result};
use crate::families::{family1_generate, family2_generate, FamilyCode, FamilyId, GenOptions};

/// Three-state distance-verification status; serialized as JSON `true`,
/// `false`, or the string `"skipped"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdsStatus {
    Confirmed,
    Refuted,
    Skipped,
}

impl From<&MdsVerdict> for MdsStatus {
    fn from(v: &MdsVerdict) -> Self {
        match v {
            MdsVerdict::Confirmed => MdsStatus::Confirmed,
            MdsVerdict::Refuted { .. } => MdsStatus::Refuted,
            MdsVerdict::Skipped => MdsStatus::Skipped,
        }
    }
}

impl Serialize for MdsStatus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MdsStatus::Confirmed => s.serialize_bool(true),
            MdsStatus::Refuted => s.serialize_bool(false),
            MdsStatus::Skipped => s.serialize_str("skipped"),
        }
    }
}

impl<'de> Deserialize<'de> for MdsStatus {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Flag(bool),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Flag(true) => Ok(MdsStatus::Confirmed),
            Raw::Flag(false) => Ok(MdsStatus::Refuted),
            Raw::Text(s) if s == "skipped" => Ok(MdsStatus::Skipped),
            Raw::Text(s) => Err(D::Error::custom(format!(
                "mds_confirmed must be true, false, or \"skipped\", got {s:?}"
            ))),
        }
    }
}

/// One verified code instance. Field order here is the serialized key order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogRecord {
    pub q: u64,
    pub n: u64,
    pub r: u64,
    pub family: u8,
    /// h for family 1, lambda for family 2.
    pub parameter: u64,
    pub d: u64,
    pub k: i64,
    pub c_coset: u64,
    pub c_oracle: Option<u64>,
    pub delta_bch: u64,
    pub mds_confirmed: MdsStatus,
    pub singleton_slack: i64,
    pub discrepancy_notes: Vec<String>,
    pub timestamp: String,
}

impl CatalogRecord {
    pub fn from_family_code(code: &FamilyCode, timestamp: String) -> Self {
        let inst = &code.instance;
        let rep = &code.report;
        CatalogRecord {
            q: inst.q,
            n: inst.n,
            r: inst.r,
            family: inst.family.number(),
            parameter: inst.parameter,
            d: inst.d,
            k: rep.params.k,
            c_coset: rep.coset_c,
            c_oracle: rep.oracle_c,
            delta_bch: rep.bch_delta,
            mds_confirmed: MdsStatus::from(&rep.mds),
            singleton_slack: rep.singleton_slack,
            discrepancy_notes: rep.notes.clone(),
            timestamp,
        }
    }

    /// The ebit count the record's k and slack are based on: the oracle value
    /// when present, otherwise the coset count.
    pub fn effective_c(&self) -> u64 {
        self.c_oracle.unwrap_or(self.c_coset)
    }

    /// Singleton slack recomputed from (n, k, d, effective c); must equal the
    /// stored field on any well-formed record.
    pub fn recomputed_slack(&self) -> i64 {
        self.n as i64 + self.effective_c() as i64 - self.k - 2 * (self.d as i64 - 1)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("catalog records always serialize")
    }
}

/// Current time as an RFC 3339 UTC string; the timestamp field of fresh
/// records.
pub fn utc_timestamp() -> String {
    chrono::Utc::now().to_rfc3339()
}

/// Parses newline-delimited JSON records. Blank lines are ignored; any other
/// malformed line fails with its 1-based line number. Cross-field consistency
/// is deliberately not enforced here: that is `verify_records`' job, so a
/// tampered file still parses and the tampering is reported as a mismatch.
pub fn parse_catalog_str(text: &str) -> Result<Vec<CatalogRecord>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let rec: CatalogRecord = serde_json::from_str(line).map_err(|e| Error::CatalogParse {
            line: i + 1,
            msg: e.to_string(),
        })?;
        out.push(rec);
    }
    Ok(out)
}

/// Byte-level entry point (UTF-8 enforced); the fuzzing surface.
pub fn parse_catalog_bytes(bytes: &[u8]) -> Result<Vec<CatalogRecord>> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::CatalogParse {
        line: 0,
        msg: format!("not UTF-8: {e}"),
    })?;
    parse_catalog_str(text)
}

/// CSV projection of a record list: same scalar fields, `discrepancy_notes`
/// dropped. Lossy by design; not accepted back by `parse_catalog_str`.
pub fn to_csv(records: &[CatalogRecord]) -> String {
    let mut out = String::from(
        "q,n,r,family,parameter,d,k,c_coset,c_oracle,delta_bch,mds_confirmed,singleton_slack,timestamp\n",
    );
    for r in records {
        let oracle = r.c_oracle.map(|v| v.to_string()).unwrap_or_default();
        let mds = match r.mds_confirmed {
            MdsStatus::Confirmed => "true",
            MdsStatus::Refuted => "false",
            MdsStatus::Skipped => "skipped",
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.q,
            r.n,
            r.r,
            r.family,
            r.parameter,
            r.d,
            r.k,
            r.c_coset,
            oracle,
            r.delta_bch,
            mds,
            r.singleton_slack,
            r.timestamp
        ));
    }
    out
}

/// A field-level disagreement between a stored record and its re-derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// 1-based position in the record list.
    pub index: usize,
    pub field: String,
    pub expected: String,
    pub found: String,
}

/// Result of re-deriving a catalog.
#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub records: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Re-derives every record from its (family, q, parameter, d) key with the
/// given budgets and compares field by field. Timestamps are not compared
/// (they cannot be re-derived). Budgets must match the ones used at
/// generation time for the oracle and distance fields to agree; the defaults
/// on both sides line up.
pub fn verify_records(records: &[CatalogRecord], opts: &GenOptions) -> VerifyReport {
    let mut report = VerifyReport {
        records: records.len(),
        ..VerifyReport::default()
    };
    for (i, rec) in records.iter().enumerate() {
        let index = i + 1;
        let derived = match FamilyId::from_number(rec.family) {
            Some(FamilyId::One) => family1_generate(rec.q, rec.parameter, rec.d, opts),
            Some(FamilyId::Two) => family2_generate(rec.q, rec.parameter, rec.d, opts),
            None => {
                report.mismatches.push(Mismatch {
                    index,
                    field: "family".into(),
                    expected: "1 or 2".into(),
                    found: rec.family.to_string(),
                });
                continue;
            }
        };
        let code = match derived {
            Ok(c) => c,
            Err(e) => {
                report.mismatches.push(Mismatch {
                    index,
                    field: "derivable".into(),
                    expected: "a generatable instance".into(),
                    found: e.to_string(),
                });
                continue;
            }
        };
        let expected = CatalogRecord::from_family_code(&code, rec.timestamp.clone());
        let mut push = |field: &str, exp: String, got: String| {
            report.mismatches.push(Mismatch {
                index,
                field: field.into(),
                expected: exp,
                found: got,
            });
        };
        macro_rules! cmp {
            ($field:ident) => {
                if expected.$field != rec.$field {
                    push(
                        stringify!($field),
                        format!("{:?}", expected.$field),
                        format!("{:?}", rec.$field),
                    );
                }
            };
        }
        cmp!(q);
        cmp!(n);
        cmp!(r);
        cmp!(parameter);
        cmp!(d);
        cmp!(k);
        cmp!(c_coset);
        cmp!(c_oracle);
        cmp!(delta_bch);
        cmp!(mds_confirmed);
        cmp!(singleton_slack);
        cmp!(discrepancy_notes);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{family1_generate, GenOptions};

    fn sample_record() -> CatalogRecord {
        let code = family1_generate(11, 3, 7, &GenOptions::default()).unwrap();
        CatalogRecord::from_family_code(&code, "2026-01-01T00:00:00+00:00".into())
    }

    #[test]
    fn json_line_round_trip_and_key_order() {
        let rec = sample_record();
        let line = rec.to_json_line();
        // Fixed key order: q first, timestamp last.
        assert!(line.starts_with("{\"q\":11,\"n\":20,\"r\":3,\"family\":1,"));
        assert!(line.ends_with("\"timestamp\":\"2026-01-01T00:00:00+00:00\"}"));
        let parsed = parse_catalog_str(&line).unwrap();
        assert_eq!(parsed, vec![rec]);
    }

    #[test]
    fn mds_status_shapes() {
        let mut rec = sample_record();
        rec.mds_confirmed = MdsStatus::Skipped;
        let line = rec.to_json_line();
        assert!(line.contains("\"mds_confirmed\":\"skipped\""));
        rec.mds_confirmed = MdsStatus::Confirmed;
        assert!(rec.to_json_line().contains("\"mds_confirmed\":true"));
        rec.mds_confirmed = MdsStatus::Refuted;
        assert!(rec.to_json_line().contains("\"mds_confirmed\":false"));
        let back = parse_catalog_str(&line).unwrap();
        assert_eq!(back[0].mds_confirmed, MdsStatus::Skipped);
    }

    #[test]
    fn parse_failures_carry_line_numbers() {
        let rec = sample_record();
        let text = format!("{}\nnot json\n", rec.to_json_line());
        match parse_catalog_str(&text) {
            Err(Error::CatalogParse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_catalog_bytes(&[0xff, 0xfe]).is_err());
        assert!(parse_catalog_str("\n\n").unwrap().is_empty());
    }

    #[test]
    fn verify_accepts_fresh_and_flags_tampered() {
        let rec = sample_record();
        let opts = GenOptions::default();
        let clean = verify_records(std::slice::from_ref(&rec), &opts);
        assert!(clean.is_clean());
        assert_eq!(clean.records, 1);

        let mut tampered = rec;
        tampered.k += 1;
        let dirty = verify_records(&[tampered], &opts);
        assert_eq!(dirty.mismatches.len(), 1);
        assert_eq!(dirty.mismatches[0].field, "k");
        assert_eq!(dirty.mismatches[0].index, 1);
    }

    #[test]
    fn slack_recomputation() {
        let rec = sample_record();
        assert_eq!(rec.recomputed_slack(), rec.singleton_slack);
        assert_eq!(rec.effective_c(), 1);
    }

    #[test]
    fn csv_projection_drops_notes() {
        let mut rec = sample_record();
        rec.discrepancy_notes
            .push("computed c = 9 disagrees with advertised c = 1 at d = 7".into());
        let csv = to_csv(std::slice::from_ref(&rec));
        assert!(csv.starts_with("q,n,r,family,"));
        assert!(!csv.contains("advertised"));
        assert_eq!(csv.lines().count(), 2);
        assert!(csv.lines().nth(1).unwrap().starts_with("11,20,3,1,3,7,9,1,1,7,true,0,"));
    }
}
