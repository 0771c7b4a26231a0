//! Replays the known formulas and inequalities on concrete graphs with the
//! exact solvers and collects one report row per checked instance.

mod corpus;
mod formulas;
mod girth;
mod suite;

pub use corpus::{
    default_corpus, random_clique_sum, random_connected_graph, random_psd_set, random_subtree,
    threshold_gadgets, CliqueSumInstance,
};
pub use formulas::{ceil_sqrt_2n_minus_half, verify_formulas, FormulaRange};
pub use girth::girth_projection;
pub use suite::{verify_clique_sum, verify_inequality_suite, verify_subtree_pair};

use std::fmt;
use std::time::Instant;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::extended::Extended;

/// A number on either side of a checked relation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Quantity {
    Int(Extended),
    Real(f64),
}

impl From<Extended> for Quantity {
    fn from(v: Extended) -> Self {
        Quantity::Int(v)
    }
}

impl From<u32> for Quantity {
    fn from(v: u32) -> Self {
        Quantity::Int(Extended::Finite(v))
    }
}

impl From<usize> for Quantity {
    fn from(v: usize) -> Self {
        Quantity::Int(Extended::Finite(v as u32))
    }
}

impl From<f64> for Quantity {
    fn from(v: f64) -> Self {
        Quantity::Real(v)
    }
}

impl Quantity {
    fn as_f64(self) -> f64 {
        match self {
            Quantity::Int(Extended::Finite(v)) => v as f64,
            Quantity::Int(Extended::Infinite) => f64::INFINITY,
            Quantity::Real(x) => x,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Int(v) => write!(f, "{v}"),
            Quantity::Real(x) => write!(f, "{x:.3}"),
        }
    }
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Quantity::Int(v) => v.serialize(s),
            Quantity::Real(x) => s.serialize_f64(*x),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl Relation {
    fn holds(self, lhs: Quantity, rhs: Quantity) -> bool {
        match (lhs, rhs) {
            (Quantity::Int(a), Quantity::Int(b)) => match self {
                Relation::Le => a <= b,
                Relation::Ge => a >= b,
                Relation::Eq => a == b,
            },
            _ => {
                let (a, b) = (lhs.as_f64(), rhs.as_f64());
                match self {
                    Relation::Le => a <= b,
                    Relation::Ge => a >= b,
                    Relation::Eq => a == b,
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped(String),
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Fail => f.write_str("fail"),
            Verdict::Skipped(why) => write!(f, "skipped: {why}"),
        }
    }
}

/// One checked relation `lhs (rel) rhs` on one instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub claim: String,
    /// The relation being replayed, stated in the notation of its source.
    pub paper_ref: String,
    pub instance: String,
    pub lhs: Option<Quantity>,
    pub rhs: Option<Quantity>,
    pub verdict: Verdict,
    pub runtime_ms: u64,
    /// Error text when the computation itself failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Row {
    /// Runs `f` and records whether `lhs (rel) rhs` holds. A budget error
    /// becomes a skipped row; any other error fails the row.
    pub fn check<F>(claim: &str, reference: &str, instance: &str, rel: Relation, f: F) -> Row
    where
        F: FnOnce() -> Result<(Quantity, Quantity)>,
    {
        let start = Instant::now();
        let outcome = f();
        let mut note = None;
        let runtime_ms = start.elapsed().as_millis() as u64;
        let (lhs, rhs, verdict) = match outcome {
            Ok((l, r)) => {
                let v = if rel.holds(l, r) { Verdict::Pass } else { Verdict::Fail };
                (Some(l), Some(r), v)
            }
            Err(e @ Error::BudgetExceeded { .. }) => (None, None, Verdict::Skipped(e.to_string())),
            Err(e) => {
                note = Some(e.to_string());
                (None, None, Verdict::Fail)
            }
        };
        Row {
            claim: claim.to_string(),
            paper_ref: reference.to_string(),
            instance: instance.to_string(),
            lhs,
            rhs,
            verdict,
            runtime_ms,
            note,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Row {
        self.note = Some(note.into());
        self
    }

    /// A boolean property, reported as `1 = 1` or `0 = 1`.
    pub fn holds<F>(claim: &str, reference: &str, instance: &str, f: F) -> Row
    where
        F: FnOnce() -> Result<bool>,
    {
        Row::check(claim, reference, instance, Relation::Eq, || {
            Ok((Quantity::from(u32::from(f()?)), Quantity::from(1u32)))
        })
    }
}

/// Rows from one or more verification runs.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Report {
    pub rows: Vec<Row>,
}

impl Report {
    pub fn new(rows: Vec<Row>) -> Self {
        Report { rows }
    }

    pub fn extend(&mut self, other: Report) {
        self.rows.extend(other.rows);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| r.verdict == Verdict::Fail)
    }

    pub fn skipped(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| matches!(r.verdict, Verdict::Skipped(_)))
    }

    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|r| r.verdict == Verdict::Pass).count()
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// Aligned text table, one line per row.
    pub fn to_table(&self) -> String {
        let headers = ["claim", "instance", "lhs", "rhs", "verdict", "ms"];
        let cells: Vec<[String; 6]> = self
            .rows
            .iter()
            .map(|r| {
                let show = |q: Option<Quantity>| q.map_or("-".to_string(), |q| q.to_string());
                [
                    r.claim.clone(),
                    r.instance.clone(),
                    show(r.lhs),
                    show(r.rhs),
                    r.verdict.to_string(),
                    r.runtime_ms.to_string(),
                ]
            })
            .collect();
        let mut width = headers.map(str::len);
        for row in &cells {
            for (w, c) in width.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        let mut line = |cols: &[String]| {
            let padded: Vec<String> = cols
                .iter()
                .zip(width)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            out.push_str(padded.join("  ").trim_end());
            out.push('\n');
        };
        line(&headers.map(String::from));
        for row in &cells {
            line(row);
        }
        out.push_str(&format!(
            "{} rows: {} passed, {} failed, {} skipped\n",
            self.rows.len(),
            self.passed(),
            self.failures().count(),
            self.skipped().count()
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extended::{Finite, Infinite};

    #[test]
    fn relations_with_infinity() {
        assert!(Relation::Le.holds(Finite(3).into(), Infinite.into()));
        assert!(!Relation::Ge.holds(Finite(3).into(), Infinite.into()));
        assert!(Relation::Le.holds(Quantity::from(4u32), Quantity::from(4.5)));
        assert!(Relation::Eq.holds(Infinite.into(), Infinite.into()));
    }

    #[test]
    fn rows_classify_outcomes() {
        let ok = Row::check("c", "r", "i", Relation::Le, || Ok((1u32.into(), 2u32.into())));
        assert_eq!(ok.verdict, Verdict::Pass);
        let bad = Row::check("c", "r", "i", Relation::Ge, || Ok((1u32.into(), 2u32.into())));
        assert_eq!(bad.verdict, Verdict::Fail);
        let skip = Row::check("c", "r", "i", Relation::Eq, || {
            Err(Error::BudgetExceeded { needed: 10, budget: 1 })
        });
        assert!(matches!(skip.verdict, Verdict::Skipped(_)));
        let err = Row::check("c", "r", "i", Relation::Eq, || Err(Error::NotATree));
        assert_eq!(err.verdict, Verdict::Fail);
        let report = Report::new(vec![ok, bad, skip, err]);
        assert_eq!(report.passed(), 1);
        assert_eq!(report.failures().count(), 2);
        assert!(report.to_table().contains("4 rows: 1 passed, 2 failed, 1 skipped"));
    }
}
