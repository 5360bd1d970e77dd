//! JSON-lines campaign reports.
//!
//! A report is one JSON object per case followed by a trailing
//! `{"summary": ...}` line. Objects are built from `serde_json::Value` maps,
//! whose keys serialize in sorted order, so identical records always produce
//! identical bytes.

use std::io::Write;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// The case lies outside the hypothesis being tested; recorded, not
    /// asserted.
    OutOfHypothesis,
    /// A floating-point comparison landed inside the near-tie band; recorded,
    /// not asserted.
    NearTie,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseRecord {
    pub case_id: u64,
    pub params: Map<String, Value>,
    pub verdicts: Map<String, Value>,
    pub margins: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    pub flags: Vec<String>,
    pub status: Status,
}

impl CaseRecord {
    pub fn new(case_id: u64) -> CaseRecord {
        CaseRecord {
            case_id,
            params: Map::new(),
            verdicts: Map::new(),
            margins: Map::new(),
            certificate: None,
            flags: Vec::new(),
            status: Status::Pass,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> CaseRecord {
        self.params.insert(key.to_owned(), value.into());
        self
    }

    pub fn verdict(&mut self, key: &str, value: impl Into<Value>) {
        self.verdicts.insert(key.to_owned(), value.into());
    }

    pub fn margin(&mut self, key: &str, value: f64) {
        self.margins.insert(key.to_owned(), value.into());
    }

    pub fn flag(&mut self, flag: impl Into<String>) {
        self.flags.push(flag.into());
    }

    /// Marks the record failed with a reason flag. Failures are sticky.
    pub fn fail(&mut self, reason: impl Into<String>) {
        self.flags.push(reason.into());
        self.status = Status::Fail;
    }

    /// Attaches a certificate under `key`, keeping earlier ones.
    pub fn attach(&mut self, key: &str, certificate: &impl Serialize) {
        let value = serde_json::to_value(certificate).unwrap_or(Value::Null);
        match &mut self.certificate {
            Some(Value::Object(map)) => {
                map.insert(key.to_owned(), value);
            }
            _ => {
                let mut map = Map::new();
                map.insert(key.to_owned(), value);
                self.certificate = Some(Value::Object(map));
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: u64,
    pub pass: u64,
    pub fail: u64,
    pub out_of_hypothesis: u64,
    pub near_tie: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub campaign: String,
    pub records: Vec<CaseRecord>,
}

impl Report {
    pub fn new(campaign: impl Into<String>, records: Vec<CaseRecord>) -> Report {
        Report {
            campaign: campaign.into(),
            records,
        }
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary {
            total: self.records.len() as u64,
            ..Summary::default()
        };
        for r in &self.records {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::OutOfHypothesis => s.out_of_hypothesis += 1,
                Status::NearTie => s.near_tie += 1,
            }
        }
        s
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn has_failures(&self) -> bool {
        self.failures().next().is_some()
    }

    /// Appends another report's records, renumbering their case ids.
    pub fn extend(&mut self, other: Report) {
        let base = self.records.len() as u64;
        self.records.extend(other.records.into_iter().map(|mut r| {
            r.case_id += base;
            r
        }));
    }

    pub fn write_jsonl(&self, out: &mut impl Write) -> Result<()> {
        for r in &self.records {
            let mut line = serde_json::to_value(r).map_err(json_err)?;
            if let Value::Object(map) = &mut line {
                map.insert("campaign".into(), self.campaign.clone().into());
            }
            serde_json::to_writer(&mut *out, &line).map_err(json_err)?;
            out.write_all(b"\n")?;
        }
        let summary = serde_json::json!({
            "summary": { "campaign": self.campaign, "counts": self.summary() }
        });
        serde_json::to_writer(&mut *out, &summary).map_err(json_err)?;
        out.write_all(b"\n")?;
        Ok(())
    }

    pub fn to_jsonl(&self) -> String {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("serde_json emits UTF-8")
    }

    /// One human-readable line: campaign name and counts.
    pub fn summary_line(&self) -> String {
        let s = self.summary();
        format!(
            "{}: {} cases, {} pass, {} fail, {} out-of-hypothesis, {} near-tie",
            self.campaign, s.total, s.pass, s.fail, s.out_of_hypothesis, s.near_tie
        )
    }
}

fn json_err(e: serde_json::Error) -> crate::Error {
    crate::Error::Io(e.to_string())
}
