use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::FieldEmbedding;
use crate::curve::{CurveModel, CurvePoint};

/// A finite formal sum of points with integer multiplicities. Zero
/// multiplicities are dropped; terms iterate in point order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalDivisor {
    terms: BTreeMap<CurvePoint, i64>,
}

impl FormalDivisor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (CurvePoint, i64)>) -> Self {
        let mut d = Self::new();
        for (p, m) in terms {
            d.add_point(p, m);
        }
        d
    }

    pub fn add_point(&mut self, p: CurvePoint, m: i64) {
        let e = self.terms.entry(p).or_insert(0);
        *e += m;
        if *e == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CurvePoint, i64)> + '_ {
        self.terms.iter().map(|(p, &m)| (p, m))
    }

    pub fn multiplicity(&self, p: &CurvePoint) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, other: &FormalDivisor) -> FormalDivisor {
        let mut d = self.clone();
        for (p, m) in other.terms() {
            d.add_point(*p, m);
        }
        d
    }

    pub fn scaled(&self, k: i64) -> FormalDivisor {
        Self::from_terms(self.terms().map(|(p, m)| (*p, k * m)))
    }

    pub fn negated(&self) -> FormalDivisor {
        self.scaled(-1)
    }

    /// Adds a multiple of ∞ so that the degree becomes 0.
    pub fn balanced(&self) -> FormalDivisor {
        let mut d = self.clone();
        d.add_point(CurvePoint::Infinity, -self.degree());
        d
    }

    pub fn embed(&self, e: &FieldEmbedding) -> FormalDivisor {
        Self::from_terms(self.terms().map(|(p, m)| (p.embed(e), m)))
    }

    pub fn map_points(&self, f: impl Fn(&CurvePoint) -> CurvePoint) -> FormalDivisor {
        Self::from_terms(self.terms().map(|(p, m)| (f(p), m)))
    }

    /// The image under the hyperelliptic involution.
    pub fn involution(&self, model: &CurveModel) -> FormalDivisor {
        self.map_points(|p| model.involution(p))
    }
}

impl fmt::Display for FormalDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms().map(|(p, m)| format!("{m}*{p}")).collect();
        f.write_str(&parts.join(" + "))
    }
}
