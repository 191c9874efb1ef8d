//! Half-integer angular momenta stored as doubled integers.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A half-integer j represented by 2j. `Half(3)` is j = 3/2.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Half(pub i32);

impl Half {
    pub fn from_f64(v: f64) -> Option<Half> {
        let doubled = 2.0 * v;
        if (doubled - doubled.round()).abs() < 1e-9 {
            Some(Half(doubled.round() as i32))
        } else {
            None
        }
    }

    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn doubled(self) -> i32 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// |j1 - j2| ..= j1 + j2 in integer steps.
    pub fn couplings(self, other: Half) -> impl Iterator<Item = Half> {
        let lo = (self.0 - other.0).abs();
        let hi = self.0 + other.0;
        (lo..=hi).step_by(2).map(Half)
    }

    /// -j ..= j in integer steps.
    pub fn projections(self) -> impl Iterator<Item = Half> {
        (-self.0..=self.0).step_by(2).map(Half)
    }
}

impl std::ops::Add for Half {
    type Output = Half;
    fn add(self, rhs: Half) -> Half {
        Half(self.0 + rhs.0)
    }
}

impl std::ops::Sub for Half {
    type Output = Half;
    fn sub(self, rhs: Half) -> Half {
        Half(self.0 - rhs.0)
    }
}

impl std::ops::Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}
