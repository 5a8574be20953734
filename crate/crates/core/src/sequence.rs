use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Whether a forbidden difference is taken with its sign or in absolute value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// `π[i+r] - π[i] != s`, the `a_{r,s}` family.
    Signed,
    /// `|π[i+r] - π[i]| != s`, the `b_{r,s}` family.
    Absolute,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Signed => "signed",
            Mode::Absolute => "abs",
        }
    }

    /// Does the difference `d` between two entries hit the forbidden gap `s`?
    #[inline]
    pub fn hits(self, d: i64, s: i64) -> bool {
        match self {
            Mode::Signed => d == s,
            Mode::Absolute => d == s || d == -s,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "signed" | "a" => Ok(Mode::Signed),
            "abs" | "absolute" | "b" => Ok(Mode::Absolute),
            other => Err(Error::InvalidArgument(format!(
                "unknown mode {other:?}, expected signed or abs"
            ))),
        }
    }
}

/// Identifies one sequence: entries `r` places apart never differ by `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SequenceSpec {
    r: usize,
    s: usize,
    mode: Mode,
}

impl SequenceSpec {
    pub fn new(r: usize, s: usize, mode: Mode) -> Result<Self> {
        if r == 0 || s == 0 {
            return Err(Error::InvalidArgument(format!(
                "r and s must be positive, got r = {r}, s = {s}"
            )));
        }
        Ok(SequenceSpec { r, s, mode })
    }

    pub fn signed(r: usize, s: usize) -> Result<Self> {
        Self::new(r, s, Mode::Signed)
    }

    pub fn absolute(r: usize, s: usize) -> Result<Self> {
        Self::new(r, s, Mode::Absolute)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// The same constraint with position gap and value gap exchanged.
    pub fn transposed(&self) -> Self {
        SequenceSpec {
            r: self.s,
            s: self.r,
            mode: self.mode,
        }
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let family = match self.mode {
            Mode::Signed => 'a',
            Mode::Absolute => 'b',
        };
        write!(f, "{family}_{{{},{}}}", self.r, self.s)
    }
}
