use std::collections::BTreeMap;

use serde::Serialize;

use super::TheoremId;
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Hypotheses hold and prediction matches computation within `eps`.
    Confirmed,
    /// At least one hypothesis fails; the numbers are still reported.
    HypothesisNotMet,
    /// Hypotheses hold but prediction and computation disagree.
    Deviation,
}

/// One named hypothesis and whether the input satisfies it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub met: bool,
}

/// Auxiliary quantity attached to a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Extra<T> {
    Number(T),
    Flag(bool),
    /// Exact integer, decimal.
    Exact(String),
    Values(Vec<T>),
}

/// Predicted versus directly computed quantities for one check.
///
/// `predicted` and `computed` are compared elementwise in the order given;
/// spectra are stored sorted ascending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport<T> {
    pub theorem: TheoremId,
    pub hypotheses: Vec<Condition>,
    pub hypotheses_met: bool,
    pub predicted: Vec<T>,
    pub computed: Vec<T>,
    /// Infinite when `predicted` and `computed` differ in length.
    pub max_abs_deviation: T,
    pub eps: T,
    /// `max_abs_deviation <= eps`, independent of the hypotheses.
    pub agrees: bool,
    pub verdict: Verdict,
    pub extras: BTreeMap<String, Extra<T>>,
}

impl<T: Real> TheoremReport<T> {
    pub fn builder(theorem: TheoremId, eps: T) -> ReportBuilder<T> {
        ReportBuilder {
            theorem,
            eps,
            hypotheses: Vec::new(),
            predicted: Vec::new(),
            computed: Vec::new(),
            extras: BTreeMap::new(),
        }
    }

    pub fn is_confirmed(&self) -> bool {
        self.verdict == Verdict::Confirmed
    }

    pub fn hypothesis(&self, name: &str) -> Option<bool> {
        self.hypotheses.iter().find(|c| c.name == name).map(|c| c.met)
    }

    pub fn extra_number(&self, key: &str) -> Option<T> {
        match self.extras.get(key)? {
            Extra::Number(x) => Some(*x),
            _ => None,
        }
    }

    pub fn extra_flag(&self, key: &str) -> Option<bool> {
        match self.extras.get(key)? {
            Extra::Flag(b) => Some(*b),
            _ => None,
        }
    }
}

pub struct ReportBuilder<T> {
    theorem: TheoremId,
    eps: T,
    hypotheses: Vec<Condition>,
    predicted: Vec<T>,
    computed: Vec<T>,
    extras: BTreeMap<String, Extra<T>>,
}

impl<T: Real> ReportBuilder<T> {
    pub fn condition(mut self, name: impl Into<String>, met: bool) -> Self {
        self.hypotheses.push(Condition { name: name.into(), met });
        self
    }

    pub fn predicted(mut self, values: impl IntoIterator<Item = T>) -> Self {
        self.predicted.extend(values);
        self
    }

    pub fn computed(mut self, values: impl IntoIterator<Item = T>) -> Self {
        self.computed.extend(values);
        self
    }

    pub fn extra(mut self, key: impl Into<String>, value: Extra<T>) -> Self {
        self.extras.insert(key.into(), value);
        self
    }

    pub fn number(self, key: impl Into<String>, value: T) -> Self {
        self.extra(key, Extra::Number(value))
    }

    pub fn flag(self, key: impl Into<String>, value: bool) -> Self {
        self.extra(key, Extra::Flag(value))
    }

    pub fn finish(self) -> TheoremReport<T> {
        let max_abs_deviation = if self.predicted.len() != self.computed.len() {
            T::infinity()
        } else {
            self.predicted.iter().zip(&self.computed).fold(T::zero(), |acc, (&p, &c)| acc.max((p - c).abs()))
        };
        let hypotheses_met = self.hypotheses.iter().all(|c| c.met);
        let agrees = max_abs_deviation <= self.eps;
        let verdict = match (hypotheses_met, agrees) {
            (false, _) => Verdict::HypothesisNotMet,
            (true, true) => Verdict::Confirmed,
            (true, false) => Verdict::Deviation,
        };
        TheoremReport {
            theorem: self.theorem,
            hypotheses: self.hypotheses,
            hypotheses_met,
            predicted: self.predicted,
            computed: self.computed,
            max_abs_deviation,
            eps: self.eps,
            agrees,
            verdict,
            extras: self.extras,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_follows_hypotheses_and_deviation() {
        let ok = TheoremReport::builder(TheoremId::EdcLaplacian, 1e-7)
            .condition("always", true)
            .predicted([1.0, 2.0])
            .computed([1.0, 2.0 + 1e-9])
            .finish();
        assert_eq!(ok.verdict, Verdict::Confirmed);

        let off = TheoremReport::builder(TheoremId::EdcLaplacian, 1e-7).predicted([1.0]).computed([1.1]).finish();
        assert_eq!(off.verdict, Verdict::Deviation);
        assert!(!off.agrees);

        let unmet = TheoremReport::builder(TheoremId::LaplacianDoubling, 1e-7)
            .condition("bipartite", false)
            .predicted([1.0])
            .computed([1.0])
            .finish();
        assert_eq!(unmet.verdict, Verdict::HypothesisNotMet);
        assert!(unmet.agrees);
        assert_eq!(unmet.hypothesis("bipartite"), Some(false));
    }

    #[test]
    fn length_mismatch_is_infinite_deviation() {
        let r = TheoremReport::<f64>::builder(TheoremId::EdcLaplacian, 1e-7).predicted([1.0]).computed([]).finish();
        assert!(r.max_abs_deviation.is_infinite());
        assert_eq!(r.verdict, Verdict::Deviation);
    }
}
