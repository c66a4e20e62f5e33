use serde::Serialize;

use crate::linalg::Vector;
use crate::strucalg::StructureAlgebra;

/// The first failing input tuple of a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Inputs in the coordinates of the domain's ambient algebra.
    #[serde(skip)]
    pub inputs: Vec<Vector>,
    /// The same inputs, formatted with the domain labels.
    pub formatted: Vec<String>,
    pub detail: String,
}

impl Violation {
    pub fn new(a: &StructureAlgebra, inputs: Vec<Vector>, detail: impl Into<String>) -> Self {
        let formatted = inputs.iter().map(|x| a.format(x)).collect();
        Violation {
            inputs,
            formatted,
            detail: detail.into(),
        }
    }
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    /// Input tuples covered, including those settled by support pruning.
    pub cases: u64,
    pub exhaustive: bool,
    pub violation: Option<Violation>,
}

impl CheckReport {
    pub(crate) fn from_search(
        name: impl Into<String>,
        cases: u64,
        exhaustive: bool,
        violation: Option<Violation>,
    ) -> Self {
        CheckReport {
            name: name.into(),
            passed: violation.is_none(),
            cases,
            exhaustive,
            violation,
        }
    }
}

/// How higher-degree identities pick their inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sampling {
    /// Pseudo-random elements with small integer coordinates from a seeded
    /// ChaCha stream.
    Random { samples: usize, seed: u64 },
    /// Every lattice point `sum m_i e_i` with `sum m_i = d` for each argument
    /// of degree `d`. A homogeneous polynomial map of degree `d` vanishing on
    /// these points vanishes identically, so this is a proof; the point count
    /// grows like `dim^d`.
    Exhaustive,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling::Random {
            samples: 50,
            seed: 0,
        }
    }
}
