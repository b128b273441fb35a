//! Exact probability mass functions over a state space.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, integer, validate_distribution, Rational};
use crate::space::{Event, StateSpace};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Measure {
    space: StateSpace,
    weights: Vec<Rational>,
}

impl Measure {
    pub fn new(space: &StateSpace, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != space.len() {
            return Err(Error::LengthMismatch { expected: space.len(), found: weights.len() });
        }
        validate_distribution(&weights)?;
        Ok(Measure { space: space.clone(), weights })
    }

    /// Uniform over `event`, which must be nonempty.
    pub fn uniform_on(space: &StateSpace, event: &Event) -> Result<Self> {
        let k = event.count();
        if k == 0 {
            return Err(Error::NotAPmf("uniform measure on an empty event".into()));
        }
        let share = Rational::one() / integer(k as i64);
        let weights = (0..space.len())
            .map(|i| if event.contains(i) { share.clone() } else { Rational::zero() })
            .collect();
        Ok(Measure { space: space.clone(), weights })
    }

    pub fn uniform(space: &StateSpace) -> Self {
        Measure::uniform_on(space, &space.full_event()).expect("spaces are nonempty")
    }

    pub fn point(space: &StateSpace, state: usize) -> Self {
        Measure::uniform_on(space, &Event::singleton(space.len(), state)).expect("singleton")
    }

    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn weight(&self, state: usize) -> &Rational {
        &self.weights[state]
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// `ρ(E)`.
    pub fn mass(&self, event: &Event) -> Rational {
        event.iter().map(|i| &self.weights[i]).sum()
    }

    /// States with positive weight.
    pub fn support(&self) -> Event {
        Event::from_indices(
            self.space.len(),
            (0..self.weights.len()).filter(|&i| !self.weights[i].is_zero()),
        )
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = (0..self.weights.len())
            .filter(|&i| !self.weights[i].is_zero())
            .map(|i| format!("{}: {}", self.space.label(i), format_rational(&self.weights[i])))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}
