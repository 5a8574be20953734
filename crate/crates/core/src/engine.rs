//! Engine selection and dispatch.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::closed_forms;
use crate::error::{Error, Result};
use crate::inclusion_exclusion::PartitionSum;
use crate::matsuo;
use crate::oracle::Oracle;
use crate::sequence::{Mode, SequenceSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EngineId {
    Oracle,
    Ie,
    Navarrete,
    Riordan,
    Robbins,
    R1fast,
    Matsuo,
    Auto,
}

impl EngineId {
    pub const ALL: [EngineId; 8] = [
        EngineId::Oracle,
        EngineId::Ie,
        EngineId::Navarrete,
        EngineId::Riordan,
        EngineId::Robbins,
        EngineId::R1fast,
        EngineId::Matsuo,
        EngineId::Auto,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EngineId::Oracle => "oracle",
            EngineId::Ie => "ie",
            EngineId::Navarrete => "navarrete",
            EngineId::Riordan => "riordan",
            EngineId::Robbins => "robbins",
            EngineId::R1fast => "r1fast",
            EngineId::Matsuo => "matsuo",
            EngineId::Auto => "auto",
        }
    }

    /// Errors with the violated constraint when the engine cannot compute `spec`.
    pub fn check_applicable(self, spec: &SequenceSpec) -> Result<()> {
        let (r, s, mode) = (spec.r(), spec.s(), spec.mode());
        let reason = match self {
            EngineId::Navarrete if r != 1 || mode != Mode::Signed => {
                Some("navarrete requires r = 1 and signed mode")
            }
            EngineId::Riordan | EngineId::Robbins if r != 1 || s != 1 || mode != Mode::Absolute => {
                Some("riordan/robbins require r = s = 1 and absolute mode")
            }
            EngineId::R1fast if r != 1 => Some("r1fast requires r = 1"),
            EngineId::Matsuo if r != 2 || s != 2 => Some("matsuo requires r = s = 2"),
            _ => None,
        };
        match reason {
            Some(reason) => Err(Error::EngineNotApplicable {
                engine: self.name().into(),
                reason: format!("{reason} (got r = {r}, s = {s}, mode = {mode})"),
            }),
            None => Ok(()),
        }
    }

    /// The concrete engine `auto` stands for; other engines map to themselves.
    pub fn resolve(self, spec: &SequenceSpec) -> EngineId {
        if self != EngineId::Auto {
            return self;
        }
        match (spec.r(), spec.s(), spec.mode()) {
            (1, 1, Mode::Absolute) => EngineId::Riordan,
            (1, _, Mode::Signed) => EngineId::Navarrete,
            (1, _, Mode::Absolute) => EngineId::R1fast,
            (2, 2, _) => EngineId::Matsuo,
            _ => EngineId::Ie,
        }
    }
}

impl fmt::Display for EngineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EngineId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EngineId::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = EngineId::ALL.iter().map(|e| e.name()).collect();
                Error::InvalidArgument(format!(
                    "unknown engine {s:?}, expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// Terms `n = 1..=n_max` of `spec` with the given engine.
pub fn compute(
    engine: EngineId,
    spec: &SequenceSpec,
    n_max: usize,
    oracle: &Oracle,
) -> Result<Vec<BigInt>> {
    engine.check_applicable(spec)?;
    let engine = engine.resolve(spec);
    Ok(match engine {
        EngineId::Oracle => (1..=n_max)
            .map(|n| oracle.brute_count(spec, n))
            .collect::<Result<_>>()?,
        EngineId::Ie => PartitionSum::new().sequence(spec, n_max),
        EngineId::Navarrete => (1..=n_max)
            .map(|n| closed_forms::navarrete_sum(spec.s(), n))
            .collect(),
        EngineId::Riordan => closed_forms::riordan_sequence(n_max),
        EngineId::Robbins => (1..=n_max).map(closed_forms::robbins).collect(),
        EngineId::R1fast => closed_forms::fast_r1(spec.s(), spec.mode(), n_max),
        EngineId::Matsuo => matsuo::fast22_sequence(spec.mode(), n_max)?,
        EngineId::Auto => unreachable!("resolved above"),
    })
}

/// Outcome of running several engines on the same terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub engines: Vec<EngineId>,
    /// `values[e][n-1]` is engine `e`'s term `n`.
    pub values: Vec<Vec<BigInt>>,
    pub mismatch: Option<Mismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub first: (EngineId, BigInt),
    pub second: (EngineId, BigInt),
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Runs every engine; all must apply, and at least two are required.
pub fn crosscheck(
    spec: &SequenceSpec,
    n_max: usize,
    engines: &[EngineId],
    oracle: &Oracle,
) -> Result<CrossCheck> {
    if engines.len() < 2 {
        return Err(Error::InvalidArgument(
            "cross-checking needs at least two engines".into(),
        ));
    }
    for e in engines {
        e.check_applicable(spec)?;
    }
    let values = engines
        .iter()
        .map(|&e| compute(e, spec, n_max, oracle))
        .collect::<Result<Vec<_>>>()?;
    let mismatch = (0..n_max).find_map(|i| {
        let base = &values[0][i];
        values.iter().enumerate().skip(1).find_map(|(k, v)| {
            (&v[i] != base).then(|| Mismatch {
                n: i + 1,
                first: (engines[0], base.clone()),
                second: (engines[k], v[i].clone()),
            })
        })
    });
    Ok(CrossCheck {
        engines: engines.to_vec(),
        values,
        mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn applicability_rules() {
        let a11 = SequenceSpec::signed(1, 1).unwrap();
        let b11 = SequenceSpec::absolute(1, 1).unwrap();
        let a22 = SequenceSpec::signed(2, 2).unwrap();
        assert!(EngineId::Riordan.check_applicable(&a11).is_err());
        assert!(EngineId::Robbins.check_applicable(&b11).is_ok());
        assert!(EngineId::Navarrete.check_applicable(&b11).is_err());
        assert!(EngineId::R1fast.check_applicable(&a22).is_err());
        assert!(EngineId::Matsuo.check_applicable(&a22).is_ok());
        assert!(EngineId::Matsuo.check_applicable(&a11).is_err());
        for e in [EngineId::Oracle, EngineId::Ie, EngineId::Auto] {
            assert!(e.check_applicable(&a22).is_ok());
        }
    }

    #[test]
    fn inapplicable_error_names_the_constraint() {
        let a11 = SequenceSpec::signed(1, 1).unwrap();
        let err = EngineId::Riordan
            .check_applicable(&a11)
            .unwrap_err()
            .to_string();
        assert!(err.contains("absolute"), "{err}");
    }

    #[test]
    fn auto_resolution() {
        let cases = [
            ((1, 1, Mode::Absolute), EngineId::Riordan),
            ((1, 3, Mode::Signed), EngineId::Navarrete),
            ((1, 3, Mode::Absolute), EngineId::R1fast),
            ((2, 2, Mode::Absolute), EngineId::Matsuo),
            ((3, 2, Mode::Signed), EngineId::Ie),
        ];
        for ((r, s, mode), want) in cases {
            let spec = SequenceSpec::new(r, s, mode).unwrap();
            assert_eq!(EngineId::Auto.resolve(&spec), want);
        }
    }

    #[test]
    fn names_round_trip() {
        for e in EngineId::ALL {
            assert_eq!(e.name().parse::<EngineId>().unwrap(), e);
        }
        assert!("fast".parse::<EngineId>().is_err());
    }

    #[test]
    fn crosscheck_detects_agreement() {
        let spec = SequenceSpec::absolute(1, 1).unwrap();
        let engines = [
            EngineId::Oracle,
            EngineId::Ie,
            EngineId::Riordan,
            EngineId::Robbins,
            EngineId::R1fast,
        ];
        let report = crosscheck(&spec, 8, &engines, &Oracle::new()).unwrap();
        assert!(report.agrees());
    }

    #[test]
    fn crosscheck_rejects_inapplicable() {
        let spec = SequenceSpec::signed(1, 1).unwrap();
        let err = crosscheck(
            &spec,
            8,
            &[EngineId::Oracle, EngineId::Riordan],
            &Oracle::new(),
        );
        assert!(matches!(err, Err(Error::EngineNotApplicable { .. })));
        assert!(crosscheck(&spec, 8, &[EngineId::Oracle], &Oracle::new()).is_err());
    }
}
