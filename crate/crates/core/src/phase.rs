// scaled-zx: exactly scaled stabilizer ZX-calculus
// Copyright 2026 The scaled-zx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Quarter-turn phases.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use crate::error::ParseError;

/// A phase `k·π/2`, stored as `k mod 4`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase(u8);

impl Phase {
    pub const ZERO: Phase = Phase(0);
    pub const HALF_PI: Phase = Phase(1);
    pub const PI: Phase = Phase(2);
    pub const MINUS_HALF_PI: Phase = Phase(3);

    /// All four phases in quarter-turn order.
    pub const ALL: [Phase; 4] = [Phase(0), Phase(1), Phase(2), Phase(3)];

    pub fn new(quarter_turns: i64) -> Phase {
        Phase(quarter_turns.rem_euclid(4) as u8)
    }

    pub fn quarter_turns(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// True for 0 and π.
    pub fn is_pauli(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// True for ±π/2.
    pub fn is_proper_clifford(self) -> bool {
        self.0 % 2 == 1
    }

    /// `e^{iα}` as a power of ω = e^{iπ/4}.
    pub fn omega_power(self) -> u8 {
        2 * self.0
    }

    /// The literal used in diagram files.
    pub fn file_str(self) -> &'static str {
        ["0", "pi/2", "pi", "-pi/2"][self.0 as usize]
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["0", "π/2", "π", "−π/2"][self.0 as usize])
    }
}

impl FromStr for Phase {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Phase, ParseError> {
        match s {
            "0" => Ok(Phase(0)),
            "pi/2" => Ok(Phase(1)),
            "pi" => Ok(Phase(2)),
            "-pi/2" => Ok(Phase(3)),
            other => Err(ParseError::Phase(other.to_string())),
        }
    }
}

impl Add for Phase {
    type Output = Phase;
    fn add(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

impl AddAssign for Phase {
    fn add_assign(&mut self, rhs: Phase) {
        *self = *self + rhs;
    }
}

impl Sub for Phase {
    type Output = Phase;
    fn sub(self, rhs: Phase) -> Phase {
        self + (-rhs)
    }
}

impl Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        Phase((4 - self.0) % 4)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_laws() {
        for a in Phase::ALL {
            assert_eq!(a + (-a), Phase::ZERO);
            for b in Phase::ALL {
                assert_eq!(a + b, b + a);
                assert_eq!((a + b) - b, a);
            }
        }
    }

    #[test]
    fn rendering() {
        let shown: Vec<String> = Phase::ALL.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["0", "π/2", "π", "−π/2"]);
        for p in Phase::ALL {
            assert_eq!(p.file_str().parse::<Phase>().unwrap(), p);
        }
        assert!("pi/4".parse::<Phase>().is_err());
    }
}
