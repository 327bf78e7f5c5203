//! JSON/CSV report types shared by the table verifiers and the scan
//! campaigns. Every collection is kept in a deterministic order so that
//! serialized reports are byte-identical across runs.

use std::collections::BTreeMap;

use serde::Serialize;

pub const SCHEMA_TABLE: &str = "oddpart.table-report/1";
pub const SCHEMA_CAMPAIGN: &str = "oddpart.campaign-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "MATCH")]
    Match,
    #[serde(rename = "VALID_DIFFERENT_WITNESS")]
    ValidDifferentWitness,
    #[serde(rename = "DISCREPANCY")]
    Discrepancy,
}

#[derive(Clone, Debug, Serialize)]
pub struct RowReport {
    pub label: String,
    pub verdict: Verdict,
    pub listed: BTreeMap<String, String>,
    pub computed: BTreeMap<String, String>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Finding {
    pub kind: String,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub match_count: usize,
    pub valid_different_witness: usize,
    pub discrepancy: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub schema: &'static str,
    pub table: String,
    pub rows: Vec<RowReport>,
    pub summary: Summary,
    pub findings: Vec<Finding>,
}

impl TableReport {
    pub fn new(table: impl Into<String>) -> TableReport {
        TableReport {
            schema: SCHEMA_TABLE,
            table: table.into(),
            rows: Vec::new(),
            summary: Summary::default(),
            findings: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: RowReport) {
        match row.verdict {
            Verdict::Match => self.summary.match_count += 1,
            Verdict::ValidDifferentWitness => self.summary.valid_different_witness += 1,
            Verdict::Discrepancy => self.summary.discrepancy += 1,
        }
        self.rows.push(row);
    }

    pub fn has_discrepancy(&self) -> bool {
        self.summary.discrepancy > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("label,verdict,listed,computed,notes\n");
        for row in &self.rows {
            let fold = |m: &BTreeMap<String, String>| {
                m.iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join("; ")
            };
            out.push_str(&format!(
                "{},{:?},\"{}\",\"{}\",\"{}\"\n",
                row.label,
                row.verdict,
                fold(&row.listed),
                fold(&row.computed),
                row.notes.join("; ")
            ));
        }
        out
    }
}

/// Report for one scan campaign. `stats` carries per-degree or per-space
/// summaries in a fixed order; `violations` is expected to stay empty.
#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport {
    pub schema: &'static str,
    pub campaign: String,
    pub params: BTreeMap<String, String>,
    pub checked: u64,
    pub stats: Vec<BTreeMap<String, String>>,
    pub violations: Vec<BTreeMap<String, String>>,
    pub findings: Vec<Finding>,
}

impl CampaignReport {
    pub fn new(campaign: impl Into<String>) -> CampaignReport {
        CampaignReport {
            schema: SCHEMA_CAMPAIGN,
            campaign: campaign.into(),
            params: BTreeMap::new(),
            checked: 0,
            stats: Vec::new(),
            violations: Vec::new(),
            findings: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}
