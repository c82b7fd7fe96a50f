use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// One-step random walk: the walker stays put with probability `idleness`
/// and otherwise moves to a uniformly chosen neighbour.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WalkKind {
    idleness: f64,
}

impl WalkKind {
    pub const LAZY: WalkKind = WalkKind { idleness: 0.5 };
    pub const NON_LAZY: WalkKind = WalkKind { idleness: 0.0 };

    pub fn new(idleness: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&idleness) {
            return Err(Error::invalid("idleness", format!("must lie in [0, 1], got {idleness}")));
        }
        Ok(WalkKind { idleness })
    }

    pub fn idleness(self) -> f64 {
        self.idleness
    }
}

impl Default for WalkKind {
    fn default() -> Self {
        WalkKind::LAZY
    }
}

/// Probability measure with finite support. Support entries are distinct and
/// every mass is strictly positive.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMeasure {
    support: Vec<usize>,
    mass: Vec<f64>,
}

impl SparseMeasure {
    pub fn new(support: Vec<usize>, mass: Vec<f64>) -> Result<Self> {
        if support.len() != mass.len() || support.is_empty() {
            return Err(Error::Domain("measure support and mass must be nonempty and of equal length".into()));
        }
        if mass.iter().any(|&p| !(p > 0.0 && p.is_finite())) {
            return Err(Error::Domain("measure masses must be strictly positive".into()));
        }
        let total: f64 = mass.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!("measure masses sum to {total}, not 1")));
        }
        let mut sorted = support.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Domain("measure support has repeated vertices".into()));
        }
        Ok(SparseMeasure { support, mass })
    }

    pub fn dirac(x: usize) -> Self {
        SparseMeasure {
            support: vec![x],
            mass: vec![1.0],
        }
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn mass(&self) -> &[f64] {
        &self.mass
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn mass_at(&self, x: usize) -> f64 {
        self.support.iter().position(|&s| s == x).map_or(0.0, |k| self.mass[k])
    }
}

/// Walk distribution after one step from `x`: `idleness` at `x` itself and
/// `(1 - idleness) / deg(x)` on each neighbour. Zero-mass entries are left
/// out of the support.
pub fn walk_measure(g: &Graph, x: usize, walk: WalkKind) -> Result<SparseMeasure> {
    let deg = g.degree(x);
    if deg == 0 {
        return Err(Error::Domain(format!("vertex {x} is isolated; its walk measure is undefined")));
    }
    let stay = walk.idleness;
    let step = (1.0 - stay) / deg as f64;
    let mut support = Vec::with_capacity(deg + 1);
    let mut mass = Vec::with_capacity(deg + 1);
    if stay > 0.0 {
        support.push(x);
        mass.push(stay);
    }
    if step > 0.0 {
        support.extend_from_slice(g.neighbors(x));
        mass.extend(std::iter::repeat_n(step, deg));
    }
    Ok(SparseMeasure { support, mass })
}
