//! Machine-readable run records.
//!
//! Every verifying command can emit one record per result line, as JSON
//! or as CSV with a fixed column order. Records round-trip through both
//! writers and readers, so downstream tooling can consume either format
//! interchangeably.

use serde::{Deserialize, Serialize};

use qcodes_core::verifier::Witness;

/// One verification outcome together with the inputs that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    /// Subcommand that produced the record.
    pub command: String,
    pub p: u32,
    pub m: u32,
    pub e: u64,
    pub n: u64,
    pub k: u64,
    pub d: u32,
    pub optimal: bool,
    /// Light-word witness: support exponents then coefficients,
    /// semicolon-joined (`i1;i2;i3;c1;c2;c3`; four fields for weight 2).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    /// Construction family token for `theorem` records.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<String>,
    /// Sub-construction name when the family has typed branches.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    /// Construction parameters in emission order.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub branch: Option<u8>,
    /// For observational families: whether the side hypothesis held.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hypothesis_ok: Option<bool>,
    /// Wall-clock milliseconds for the underlying computation.
    pub millis: u64,
}

/// Serialize a witness as support exponents then coefficients.
pub fn witness_field(witness: &Witness) -> String {
    let terms = witness.terms();
    let mut parts: Vec<String> = terms.iter().map(|(i, _)| i.to_string()).collect();
    parts.extend(terms.iter().map(|(_, c)| c.to_string()));
    parts.join(";")
}

fn parse_field<T: core::str::FromStr>(raw: &str, name: &str) -> Result<T, String> {
    raw.parse()
        .map_err(|_| format!("bad value '{raw}' in column {name}"))
}

#[cfg_attr(not(test), allow(dead_code))]
fn optional(raw: &str) -> Option<&str> {
    if raw.is_empty() {
        None
    } else {
        Some(raw)
    }
}

impl ReportRecord {
    pub const CSV_HEADER: &'static str =
        "command,p,m,e,n,k,d,optimal,witness,family,name,params,branch,hypothesis_ok,millis";

    pub fn to_csv_row(&self) -> String {
        let params = self
            .params
            .as_ref()
            .map(|ps| {
                ps.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(";")
            })
            .unwrap_or_default();
        [
            self.command.clone(),
            self.p.to_string(),
            self.m.to_string(),
            self.e.to_string(),
            self.n.to_string(),
            self.k.to_string(),
            self.d.to_string(),
            self.optimal.to_string(),
            self.witness.clone().unwrap_or_default(),
            self.family.clone().unwrap_or_default(),
            self.name.clone().unwrap_or_default(),
            params,
            self.branch.map(|b| b.to_string()).unwrap_or_default(),
            self.hypothesis_ok.map(|h| h.to_string()).unwrap_or_default(),
            self.millis.to_string(),
        ]
        .join(",")
    }

    #[cfg_attr(not(test), allow(dead_code))]
    pub fn from_csv_row(row: &str) -> Result<Self, String> {
        let cols: Vec<&str> = row.split(',').collect();
        if cols.len() != 15 {
            return Err(format!("expected 15 columns, found {}", cols.len()));
        }
        let family = optional(cols[9]).map(str::to_string);
        // `params` is always present on family records (possibly empty)
        // and never present otherwise, so the empty column is unambiguous.
        let params = if family.is_some() {
            let mut ps = Vec::new();
            for part in cols[11].split(';').filter(|s| !s.is_empty()) {
                ps.push(parse_field(part, "params")?);
            }
            Some(ps)
        } else {
            None
        };
        Ok(ReportRecord {
            command: cols[0].to_string(),
            p: parse_field(cols[1], "p")?,
            m: parse_field(cols[2], "m")?,
            e: parse_field(cols[3], "e")?,
            n: parse_field(cols[4], "n")?,
            k: parse_field(cols[5], "k")?,
            d: parse_field(cols[6], "d")?,
            optimal: parse_field(cols[7], "optimal")?,
            witness: optional(cols[8]).map(str::to_string),
            family,
            name: optional(cols[10]).map(str::to_string),
            params,
            branch: optional(cols[12]).map(|b| parse_field(b, "branch")).transpose()?,
            hypothesis_ok: optional(cols[13])
                .map(|h| parse_field(h, "hypothesis_ok"))
                .transpose()?,
            millis: parse_field(cols[14], "millis")?,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records contain no non-serializable values")
    }

    #[cfg_attr(not(test), allow(dead_code))]
    pub fn from_json(line: &str) -> Result<Self, String> {
        serde_json::from_str(line).map_err(|err| err.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qcodes_core::verifier::{Weight2Witness, Weight3Witness};

    fn verify_record() -> ReportRecord {
        ReportRecord {
            command: "verify".into(),
            p: 5,
            m: 4,
            e: 9,
            n: 624,
            k: 617,
            d: 3,
            optimal: false,
            witness: Some("0;156;312;1;1;3".into()),
            family: None,
            name: None,
            params: None,
            branch: None,
            hypothesis_ok: None,
            millis: 12,
        }
    }

    fn theorem_record() -> ReportRecord {
        ReportRecord {
            command: "theorem".into(),
            p: 5,
            m: 3,
            e: 123,
            n: 124,
            k: 117,
            d: 4,
            optimal: true,
            witness: None,
            family: Some("thm7".into()),
            name: Some("thm7_type1".into()),
            params: Some(vec![]),
            branch: Some(1),
            hypothesis_ok: None,
            millis: 0,
        }
    }

    #[test]
    fn csv_round_trips_both_shapes() {
        for record in [verify_record(), theorem_record()] {
            let row = record.to_csv_row();
            assert_eq!(ReportRecord::from_csv_row(&row).unwrap(), record);
        }
    }

    #[test]
    fn json_round_trips_and_elides_empty_fields() {
        let record = verify_record();
        let line = record.to_json();
        assert!(!line.contains("family"));
        assert_eq!(ReportRecord::from_json(&line).unwrap(), record);

        let record = theorem_record();
        let line = record.to_json();
        assert!(line.contains("\"params\":[]"));
        assert_eq!(ReportRecord::from_json(&line).unwrap(), record);
    }

    #[test]
    fn header_matches_row_arity() {
        assert_eq!(ReportRecord::CSV_HEADER.split(',').count(), 15);
        assert_eq!(verify_record().to_csv_row().split(',').count(), 15);
    }

    #[test]
    fn witness_fields_list_exponents_then_coefficients() {
        let three = Witness::Three(Weight3Witness {
            exponents: [0, 156, 312],
            coeffs: [1, 1, 3],
        });
        assert_eq!(witness_field(&three), "0;156;312;1;1;3");
        let two = Witness::Two(Weight2Witness {
            exponents: [0, 171],
            coeffs: [1, 6],
        });
        assert_eq!(witness_field(&two), "0;171;1;6");
    }

    #[test]
    fn csv_reader_rejects_malformed_rows() {
        assert!(ReportRecord::from_csv_row("verify,5,4").is_err());
        let row = verify_record().to_csv_row().replace(",617,", ",abc,");
        assert!(ReportRecord::from_csv_row(&row).is_err());
    }
}
