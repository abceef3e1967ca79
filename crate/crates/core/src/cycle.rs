//! Integer cycles (divisors supported on the exceptional curves) and the
//! intersection pairing.

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::{CurveConfiguration, Vertex};
use crate::error::Error;

/// A cycle with nonnegative integer multiplicities, defined on exactly the
/// vertex set of its configuration.
///
/// "Positive" means every coefficient is at least 1; every cycle here is
/// effective by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    config: CurveConfiguration,
    coefficients: BTreeMap<Vertex, i64>,
}

impl Cycle {
    pub fn new(
        config: &CurveConfiguration,
        coefficients: BTreeMap<Vertex, i64>,
    ) -> Result<Self, Error> {
        if coefficients.len() != config.vertex_count()
            || !coefficients.keys().all(|&v| config.contains(v))
        {
            return Err(Error::CoefficientDomain);
        }
        for (&vertex, &value) in &coefficients {
            if value < 0 {
                return Err(Error::NegativeCoefficient { vertex, value });
            }
        }
        Ok(Cycle {
            config: config.clone(),
            coefficients,
        })
    }

    pub fn from_fn(
        config: &CurveConfiguration,
        mut f: impl FnMut(Vertex) -> i64,
    ) -> Result<Self, Error> {
        let coefficients = config.vertices().iter().map(|&v| (v, f(v))).collect();
        Cycle::new(config, coefficients)
    }

    pub fn zero(config: &CurveConfiguration) -> Self {
        Cycle::from_fn(config, |_| 0).expect("zero cycle is valid")
    }

    pub fn unit(config: &CurveConfiguration, v: Vertex) -> Result<Self, Error> {
        if !config.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
        Cycle::from_fn(config, |w| i64::from(w == v))
    }

    pub fn config(&self) -> &CurveConfiguration {
        &self.config
    }

    pub fn coefficients(&self) -> &BTreeMap<Vertex, i64> {
        &self.coefficients
    }

    /// Multiplicity at `v`. Panics if `v` is not a vertex of the
    /// underlying configuration.
    pub fn coefficient(&self, v: Vertex) -> i64 {
        self.coefficients[&v]
    }

    pub fn is_positive(&self) -> bool {
        self.coefficients.values().all(|&c| c >= 1)
    }

    pub fn max_coefficient(&self) -> i64 {
        self.coefficients.values().copied().max().unwrap_or(0)
    }

    pub fn componentwise_le(&self, other: &Cycle) -> bool {
        self.config == other.config
            && self
                .coefficients
                .iter()
                .all(|(v, &c)| c <= other.coefficients[v])
    }

    pub(crate) fn bump(&mut self, v: Vertex) {
        *self.coefficients.get_mut(&v).expect("vertex in configuration") += 1;
    }

    /// Intersection number `self . other` = z1^T M z2 with M the
    /// intersection matrix. Symmetric, and bilinear over integer scaling.
    pub fn pairing(&self, other: &Cycle) -> Result<i64, Error> {
        if self.config != other.config {
            return Err(Error::MismatchedConfigurations);
        }
        let diagonal: i64 = self
            .config
            .vertices()
            .iter()
            .map(|&v| self.config.self_intersection(v) * self.coefficient(v) * other.coefficient(v))
            .sum();
        let off: i64 = self
            .config
            .edges()
            .map(|(a, b)| {
                self.coefficient(a) * other.coefficient(b)
                    + self.coefficient(b) * other.coefficient(a)
            })
            .sum();
        Ok(diagonal + off)
    }

    /// `self . C_v` for a single curve, without building the unit cycle.
    pub fn pairing_with_unit(&self, v: Vertex) -> Result<i64, Error> {
        if !self.config.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
        let mut value = self.config.self_intersection(v) * self.coefficient(v);
        for w in self.config.neighbors(v) {
            value += self.coefficient(w);
        }
        Ok(value)
    }

    /// Anti-nef: nonpositive intersection with every curve.
    pub fn is_anti_nef(&self) -> bool {
        self.config
            .vertices()
            .iter()
            .all(|&v| self.pairing_with_unit(v).expect("own vertex") <= 0)
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, c) in &self.coefficients {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}:{c}")?;
            first = false;
        }
        Ok(())
    }
}
