use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Confirmed,
    Refuted,
    Mixed,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Confirmed => "confirmed",
            Status::Refuted => "refuted",
            Status::Mixed => "mixed",
            Status::NotApplicable => "not-applicable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub modules: Vec<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimVerdict {
    pub claim_id: String,
    pub paper_ref: String,
    pub instances_checked: usize,
    pub status: Status,
    pub witnesses: Vec<Witness>,
}

/// Pretty JSON array, in the order given.
pub fn verdicts_json(verdicts: &[ClaimVerdict]) -> String {
    let mut s = serde_json::to_string_pretty(verdicts).expect("verdicts serialize");
    s.push('\n');
    s
}

/// `claim_id,status,instances,witness_count` with a header row.
pub fn verdicts_csv(verdicts: &[ClaimVerdict]) -> String {
    let mut s = String::from("claim_id,status,instances,witness_count\n");
    for v in verdicts {
        s.push_str(&format!(
            "{},{},{},{}\n",
            v.claim_id,
            v.status,
            v.instances_checked,
            v.witnesses.len()
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        let v = ClaimVerdict {
            claim_id: "chordal".into(),
            paper_ref: "graphs are chordal".into(),
            instances_checked: 3,
            status: Status::NotApplicable,
            witnesses: vec![Witness {
                modules: vec!["zmod:p=2,k=1,type=[1]".into()],
                detail: "ok".into(),
            }],
        };
        let json = verdicts_json(std::slice::from_ref(&v));
        assert!(json.contains("\"status\": \"not-applicable\""));
        let keys: Vec<&str> = ["claim_id", "paper_ref", "instances_checked", "status", "witnesses"].to_vec();
        let positions: Vec<usize> = keys.iter().map(|k| json.find(&format!("\"{k}\"")).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(
            verdicts_csv(&[v]),
            "claim_id,status,instances,witness_count\nchordal,not-applicable,3,1\n"
        );
    }
}
