//! Suite reports: one row per (instance, theorem) check, with every number
//! a verdict depends on recorded in the row. Serialization is stable so that
//! equal runs produce identical bytes.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    Newpath,
    Thm22,
    PropStar3,
    Thm24,
    Thm25,
    Thm26,
    Thm27,
    GammaSandwich,
    Henning,
    PropStar4,
    MonoK,
    Mono23,
    EdgeLb,
    GirthScale,
    Chrom3,
}

impl TheoremId {
    pub const ALL: [TheoremId; 15] = [
        TheoremId::Newpath,
        TheoremId::Thm22,
        TheoremId::PropStar3,
        TheoremId::Thm24,
        TheoremId::Thm25,
        TheoremId::Thm26,
        TheoremId::Thm27,
        TheoremId::GammaSandwich,
        TheoremId::Henning,
        TheoremId::PropStar4,
        TheoremId::MonoK,
        TheoremId::Mono23,
        TheoremId::EdgeLb,
        TheoremId::GirthScale,
        TheoremId::Chrom3,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::Newpath => "newpath",
            TheoremId::Thm22 => "thm22",
            TheoremId::PropStar3 => "prop_star3",
            TheoremId::Thm24 => "thm24",
            TheoremId::Thm25 => "thm25",
            TheoremId::Thm26 => "thm26",
            TheoremId::Thm27 => "thm27",
            TheoremId::GammaSandwich => "gamma_sandwich",
            TheoremId::Henning => "henning",
            TheoremId::PropStar4 => "prop_star4",
            TheoremId::MonoK => "mono_k",
            TheoremId::Mono23 => "mono_23",
            TheoremId::EdgeLb => "edge_lb",
            TheoremId::GirthScale => "girth_scale",
            TheoremId::Chrom3 => "chrom3",
        }
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .iter()
            .find(|id| id.as_str() == s)
            .copied()
            .ok_or_else(|| format!("unknown theorem id '{s}'"))
    }
}

/// `Inconclusive` means the budget prevented a sound PASS/FAIL decision;
/// `NotApplicable` marks checks outside a theorem's stated scope.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    NotApplicable,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
            Verdict::NotApplicable => "NOT_APPLICABLE",
        };
        f.write_str(s)
    }
}

/// One check outcome. `value` is the quantity under test (exact when known,
/// otherwise bracketed by `value_lo..value_hi`), and `req_lo`/`req_hi` are
/// the theorem's required bounds on it. Girth rows encode "acyclic" as 0.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CheckRow {
    pub instance: String,
    pub theorem: TheoremId,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub sub_n: usize,
    pub sub_m: usize,
    pub gamma_t: Option<usize>,
    pub chi: Option<usize>,
    pub value: Option<usize>,
    pub value_lo: Option<usize>,
    pub value_hi: Option<usize>,
    pub req_lo: Option<usize>,
    pub req_hi: Option<usize>,
    pub verdict: Verdict,
    pub nodes: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReportMeta {
    pub tool_version: String,
    pub seed: u64,
    pub budget_nodes: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    pub not_applicable: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub meta: ReportMeta,
    pub rows: Vec<CheckRow>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(format!("unknown format '{other}' (expected json or csv)")),
        }
    }
}

const CSV_HEADER: &str = "instance,theorem,n,m,k,sub_n,sub_m,gamma_t,chi,value,value_lo,value_hi,req_lo,req_hi,verdict,nodes";

fn opt(v: Option<usize>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

impl Report {
    pub fn summary(&self) -> Summary {
        let mut summary = Summary::default();
        for row in &self.rows {
            match row.verdict {
                Verdict::Pass => summary.pass += 1,
                Verdict::Fail => summary.fail += 1,
                Verdict::Inconclusive => summary.inconclusive += 1,
                Verdict::NotApplicable => summary.not_applicable += 1,
            }
        }
        summary
    }

    pub fn emit(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Json => self.to_json(),
            ReportFormat::Csv => self.to_csv(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                r.instance,
                r.theorem,
                r.n,
                r.m,
                r.k,
                r.sub_n,
                r.sub_m,
                opt(r.gamma_t),
                opt(r.chi),
                opt(r.value),
                opt(r.value_lo),
                opt(r.value_hi),
                opt(r.req_lo),
                opt(r.req_hi),
                r.verdict,
                r.nodes
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_row() -> CheckRow {
        CheckRow {
            instance: "path-07".into(),
            theorem: TheoremId::Newpath,
            n: 7,
            m: 6,
            k: 1,
            sub_n: 7,
            sub_m: 6,
            gamma_t: Some(4),
            chi: Some(2),
            value: Some(5),
            value_lo: None,
            value_hi: None,
            req_lo: Some(5),
            req_hi: Some(5),
            verdict: Verdict::Pass,
            nodes: 123,
        }
    }

    fn sample_report(rows: Vec<CheckRow>) -> Report {
        Report {
            meta: ReportMeta {
                tool_version: "0.1.0".into(),
                seed: 1,
                budget_nodes: 1000,
            },
            rows,
        }
    }

    #[test]
    fn empty_report_json_shape() {
        let report = sample_report(vec![]);
        let json = report.to_json();
        assert!(json.contains("\"meta\""));
        assert!(json.contains("\"rows\": []"));
    }

    #[test]
    fn csv_has_header_plus_rows() {
        let report = sample_report(vec![sample_row()]);
        let csv = report.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], CSV_HEADER);
        assert!(lines[1].starts_with("path-07,newpath,7,6,1,"));
        assert!(lines[1].ends_with("PASS,123"));
    }

    #[test]
    fn json_round_trip() {
        let report = sample_report(vec![sample_row()]);
        let parsed = Report::from_json(&report.to_json()).unwrap();
        assert_eq!(parsed, report);
    }

    #[test]
    fn summary_counts() {
        let mut fail = sample_row();
        fail.verdict = Verdict::Fail;
        let report = sample_report(vec![sample_row(), fail]);
        let summary = report.summary();
        assert_eq!((summary.pass, summary.fail), (1, 1));
    }
}
