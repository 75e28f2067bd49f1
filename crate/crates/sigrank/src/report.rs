//! The `analyze` report: invariants, exact rank and classification of one
//! signed graph.

use serde::Serialize;
use serde_json::{json, Value};
use sigrank_core::invariants::profile;
use sigrank_core::{classify, rank, Certificate, ClassifyError, SignedGraph, Verdict};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationReport {
    /// False for disconnected graphs and forests, which no case covers.
    pub applicable: bool,
    pub verdict: String,
    pub case: Option<String>,
    pub figure_deferred: bool,
    pub certificate: Value,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub n: usize,
    pub m: usize,
    pub components: usize,
    pub cyclomatic: usize,
    pub pendant_count: usize,
    pub bipartite: bool,
    pub girth: Option<usize>,
    pub balanced: bool,
    pub rank: usize,
    pub nullity: usize,
    pub classification: ClassificationReport,
}

fn sign_str(s: sigrank_core::Sign) -> String {
    s.as_char().to_string()
}

pub fn certificate_json(c: &Certificate) -> Value {
    match c {
        Certificate::CompleteBipartite { parts } => json!({
            "kind": "complete_bipartite",
            "parts": parts,
        }),
        Certificate::Cycle { cycle, sign } => json!({
            "kind": "cycle",
            "cycle": cycle,
            "sign": sign_str(*sign),
        }),
        Certificate::Tripartite(t) => json!({
            "kind": "tripartite",
            "parts": t.parts,
            "representatives": t.representatives,
            "ratios": t.ratios.iter().map(|r| r.iter().map(|s| sign_str(*s)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        }),
        Certificate::Unicyclic(u) => json!({
            "kind": "canonical_unicyclic",
            "cycle": u.cycle,
            "centers": u.centers,
            "gaps": u.gaps,
        }),
        Certificate::CycleStar {
            cycle,
            cycle_sign,
            attachment,
            center,
            leaves,
        } => json!({
            "kind": "cycle_star",
            "cycle": cycle,
            "cycle_sign": sign_str(*cycle_sign),
            "attachment": attachment,
            "center": center,
            "leaves": leaves,
        }),
        Certificate::ReducedRank { reduced_order, rank } => json!({
            "kind": "reduced_rank",
            "reduced_order": reduced_order,
            "rank": rank,
        }),
        Certificate::Theta { ends, paths } => json!({
            "kind": "theta",
            "ends": ends,
            "paths": paths,
        }),
        Certificate::SubdividedK4 { branches, six_cycles } => json!({
            "kind": "subdivided_k4",
            "branches": branches,
            "six_cycles": six_cycles,
        }),
        Certificate::None => Value::Null,
    }
}

fn classification(g: &SignedGraph) -> ClassificationReport {
    match classify(g) {
        Ok(c) => {
            let (verdict, case, deferred) = match c.verdict {
                Verdict::GirthMinusTwo(case) => ("GirthMinusTwo", Some(case.letter().to_string()), false),
                Verdict::EqualsGirth { case, figure_deferred } => {
                    ("EqualsGirth", Some(case.letter().to_string()), figure_deferred)
                }
                Verdict::NonExtremal => ("NonExtremal", None, false),
            };
            ClassificationReport {
                applicable: true,
                verdict: verdict.to_string(),
                case,
                figure_deferred: deferred,
                certificate: certificate_json(&c.certificate),
                note: deferred.then(|| "decided by exact rank, not by structure".to_string()),
            }
        }
        Err(e) => ClassificationReport {
            applicable: false,
            verdict: "NonExtremal".to_string(),
            case: None,
            figure_deferred: false,
            certificate: Value::Null,
            note: Some(match e {
                ClassifyError::Acyclic => "not applicable: graph has no cycle".to_string(),
                other => format!("not applicable: {other}"),
            }),
        },
    }
}

impl AnalysisReport {
    pub fn build(g: &SignedGraph) -> Self {
        let p = profile(g);
        let r = rank(&g.adjacency_matrix());
        AnalysisReport {
            schema: 1,
            n: g.order(),
            m: g.size(),
            components: p.components,
            cyclomatic: p.cyclomatic,
            pendant_count: p.pendant_count,
            bipartite: p.bipartite,
            girth: p.girth,
            balanced: p.balanced,
            rank: r.rank,
            nullity: r.nullity,
            classification: classification(g),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn verdict_line(&self) -> String {
        let c = &self.classification;
        let mut line = match &c.case {
            Some(case) => format!("{}({case})", c.verdict),
            None => c.verdict.clone(),
        };
        if c.figure_deferred {
            line.push_str(" [deferred]");
        }
        if let Some(note) = &c.note {
            line.push_str(&format!(" ({note})"));
        }
        line
    }

    pub fn to_table(&self) -> String {
        let girth = self.girth.map_or("none".to_string(), |g| g.to_string());
        let rows = [
            ("vertices", self.n.to_string()),
            ("edges", self.m.to_string()),
            ("components", self.components.to_string()),
            ("cyclomatic", self.cyclomatic.to_string()),
            ("pendant vertices", self.pendant_count.to_string()),
            ("bipartite", self.bipartite.to_string()),
            ("girth", girth),
            ("balanced", self.balanced.to_string()),
            ("rank", self.rank.to_string()),
            ("nullity", self.nullity.to_string()),
            ("verdict", self.verdict_line()),
        ];
        let mut out = String::new();
        for (k, v) in rows {
            out.push_str(&format!("{k:<18}{v}\n"));
        }
        if !self.classification.certificate.is_null() {
            out.push_str(&format!("{:<18}{}\n", "certificate", self.classification.certificate));
        }
        out
    }
}
