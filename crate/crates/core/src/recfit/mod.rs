//! Guessing and checking linear recurrences with polynomial coefficients,
//! `Σ_{j=0}^{ρ} p_j(n) t(n-j) = 0`, by undetermined coefficients over the
//! integers.

mod linalg;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub use linalg::nullspace;

pub const DEFAULT_HOLDOUT: usize = 5;

/// Consecutive terms `t(offset), t(offset+1), ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermTable {
    offset: i64,
    values: Vec<BigInt>,
}

impl TermTable {
    pub fn new(offset: i64, values: Vec<BigInt>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument("term table is empty".into()));
        }
        Ok(TermTable { offset, values })
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Index of the last term.
    pub fn last_index(&self) -> i64 {
        self.offset + self.values.len() as i64 - 1
    }

    /// `t(n)`, if present.
    pub fn get(&self, n: i64) -> Option<&BigInt> {
        let i = n.checked_sub(self.offset)?;
        usize::try_from(i).ok().and_then(|i| self.values.get(i))
    }

    fn at(&self, n: i64) -> &BigInt {
        &self.values[(n - self.offset) as usize]
    }

    /// `(n, t(n))` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        (self.offset..).zip(&self.values)
    }
}

/// `Σ_{j=0}^{order} p_j(n) N^j`, each `p_j` of degree at most `degree`,
/// with primitive integer content and the leading coefficient of `p_0`
/// positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceOperator {
    order: usize,
    degree: usize,
    offset: i64,
    coeffs: Vec<Vec<BigInt>>,
}

impl RecurrenceOperator {
    /// Builds and normalizes an operator from `p_0, ..., p_order`, each
    /// given constant term first. `offset` records the first index of the
    /// sequence the operator describes.
    pub fn new(coeffs: Vec<Vec<BigInt>>, offset: i64) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("operator needs at least p_0".into()));
        }
        let degree = coeffs.iter().map(|p| p.len()).max().unwrap_or(1).max(1) - 1;
        let mut coeffs: Vec<Vec<BigInt>> = coeffs
            .into_iter()
            .map(|mut p| {
                p.resize(degree + 1, BigInt::zero());
                p
            })
            .collect();
        let Some(lead) = coeffs[0].iter().rev().find(|c| !c.is_zero()) else {
            return Err(Error::InvalidArgument("p_0 is identically zero".into()));
        };
        let flip = lead.is_negative();
        let g = coeffs
            .iter()
            .flatten()
            .fold(BigInt::zero(), |g, c| g.gcd(c));
        for c in coeffs.iter_mut().flatten() {
            *c /= &g;
            if flip {
                *c = -&*c;
            }
        }
        Ok(RecurrenceOperator {
            order: coeffs.len() - 1,
            degree,
            offset,
            coeffs,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(coeffs: &[&[i64]], offset: i64) -> Result<Self> {
        Self::new(
            coeffs
                .iter()
                .map(|p| p.iter().copied().map(BigInt::from).collect())
                .collect(),
            offset,
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[Vec<BigInt>] {
        &self.coeffs
    }

    pub fn with_offset(mut self, offset: i64) -> Self {
        self.offset = offset;
        self
    }

    /// `p_j(n)`.
    pub fn eval(&self, j: usize, n: i64) -> BigInt {
        let n = BigInt::from(n);
        self.coeffs[j]
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &n + c)
    }

    /// `Σ_j p_j(n) t(n-j)`; `None` if some referenced term is missing.
    pub fn residual(&self, terms: &TermTable, n: i64) -> Option<BigInt> {
        let mut acc = BigInt::zero();
        for j in 0..=self.order {
            let t = terms.get(n - j as i64)?;
            acc += self.eval(j, n) * t;
        }
        Some(acc)
    }

    /// Same operator up to the offset annotation.
    pub fn same_recurrence(&self, other: &Self) -> bool {
        self.order == other.order && self.coeffs == other.coeffs
    }

    /// Plain-text form: a header `order degree offset`, then one line per
    /// `p_j` with space-separated integers, constant term first.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for RecurrenceOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.order, self.degree, self.offset)?;
        for p in &self.coeffs {
            let line: Vec<String> = p.iter().map(BigInt::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for RecurrenceOperator {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing header line \"order degree offset\"".into(),
        })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: hline,
                msg: format!("header needs 3 fields, found {}", fields.len()),
            });
        }
        let parse_err = |what: &str, v: &str| Error::Parse {
            line: hline,
            msg: format!("bad {what} {v:?}"),
        };
        let order: usize = fields[0]
            .parse()
            .map_err(|_| parse_err("order", fields[0]))?;
        let degree: usize = fields[1]
            .parse()
            .map_err(|_| parse_err("degree", fields[1]))?;
        let offset: i64 = fields[2]
            .parse()
            .map_err(|_| parse_err("offset", fields[2]))?;
        let mut coeffs = Vec::with_capacity(order + 1);
        for (line, content) in lines {
            let row = content
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<BigInt>().map_err(|_| Error::Parse {
                        line,
                        msg: format!("bad integer {tok:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != degree + 1 {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected {} coefficients, found {}", degree + 1, row.len()),
                });
            }
            if coeffs.len() == order + 1 {
                return Err(Error::Parse {
                    line,
                    msg: format!("more than order + 1 = {} coefficient lines", order + 1),
                });
            }
            coeffs.push(row);
        }
        if coeffs.len() != order + 1 {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                msg: format!(
                    "expected {} coefficient lines, found {}",
                    order + 1,
                    coeffs.len()
                ),
            });
        }
        RecurrenceOperator::new(coeffs, offset)
    }
}

/// What [`fit`] found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FitOutcome {
    /// A unique operator that also annihilates the holdout terms.
    Found(RecurrenceOperator),
    /// Only the zero solution: no recurrence of this order and degree.
    NoRecurrence,
    /// The solution space has this many dimensions; nothing is chosen.
    Underdetermined { dimension: usize },
    /// The unique solution has `p_0 = 0`; a lower-order recurrence is hiding.
    LeadingVanishes,
    /// The unique solution fails on the held-out terms, first at `n`.
    RejectedByHoldout { n: i64 },
}

impl FitOutcome {
    pub fn operator(&self) -> Option<&RecurrenceOperator> {
        match self {
            FitOutcome::Found(op) => Some(op),
            _ => None,
        }
    }
}

/// Minimum table length for fitting: `(order+1)(degree+1) + order + 1 + holdout`.
pub fn required_terms(order: usize, degree: usize, holdout: usize) -> usize {
    (order + 1) * (degree + 1) + order + 1 + holdout
}

/// Fits an operator of the given order and degree to all but the last
/// `holdout` terms, then checks it on the whole table.
pub fn fit(terms: &TermTable, order: usize, degree: usize, holdout: usize) -> Result<FitOutcome> {
    let needed = required_terms(order, degree, holdout);
    if terms.len() < needed {
        return Err(Error::InsufficientTerms {
            order,
            degree,
            holdout,
            needed,
            got: terms.len(),
        });
    }
    if terms.values().iter().all(Zero::is_zero) {
        return Err(Error::DegenerateInput);
    }
    let unknowns = (order + 1) * (degree + 1);
    let window_end = terms.last_index() - holdout as i64;
    let rows: Vec<Vec<BigInt>> = (terms.offset() + order as i64..=window_end)
        .map(|n| {
            let mut row = Vec::with_capacity(unknowns);
            for j in 0..=order {
                let t = terms.at(n - j as i64);
                let mut power = t.clone();
                for _ in 0..=degree {
                    row.push(power.clone());
                    power *= n;
                }
            }
            row
        })
        .collect();
    let basis = nullspace(rows, unknowns);
    match basis.len() {
        0 => return Ok(FitOutcome::NoRecurrence),
        1 => {}
        dimension => return Ok(FitOutcome::Underdetermined { dimension }),
    }
    let coeffs: Vec<Vec<BigInt>> = basis[0]
        .chunks(degree + 1)
        .map(<[BigInt]>::to_vec)
        .collect();
    if coeffs[0].iter().all(Zero::is_zero) {
        return Ok(FitOutcome::LeadingVanishes);
    }
    let op = RecurrenceOperator::new(coeffs, terms.offset())?;
    Ok(match verify(&op, terms)? {
        Verdict::Holds => FitOutcome::Found(op),
        Verdict::FailsAt(n) => FitOutcome::RejectedByHoldout { n },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    FailsAt(i64),
}

/// Checks the recurrence at every `n` whose referenced terms are all present.
pub fn verify(op: &RecurrenceOperator, terms: &TermTable) -> Result<Verdict> {
    if terms.len() <= op.order() {
        return Err(Error::InvalidArgument(format!(
            "need more than {} terms to check an order-{} recurrence, got {}",
            op.order(),
            op.order(),
            terms.len()
        )));
    }
    for n in terms.offset() + op.order() as i64..=terms.last_index() {
        let r = op
            .residual(terms, n)
            .expect("window keeps all terms in range");
        if !r.is_zero() {
            return Ok(Verdict::FailsAt(n));
        }
    }
    Ok(Verdict::Holds)
}

/// Extends `seeds` up to index `n_max` by solving the recurrence for `t(n)`.
pub fn extend(op: &RecurrenceOperator, seeds: &TermTable, n_max: i64) -> Result<TermTable> {
    if seeds.len() < op.order() {
        return Err(Error::InvalidArgument(format!(
            "an order-{} recurrence needs {} seeds, got {}",
            op.order(),
            op.order(),
            seeds.len()
        )));
    }
    let mut out = seeds.clone();
    for n in seeds.last_index() + 1..=n_max {
        let lead = op.eval(0, n);
        if lead.is_zero() {
            return Err(Error::SingularLeading { n });
        }
        let mut rest = BigInt::zero();
        for j in 1..=op.order() {
            rest += op.eval(j, n) * out.at(n - j as i64);
        }
        let (q, r) = (-rest).div_rem(&lead);
        if !r.is_zero() {
            return Err(Error::InexactDivision { n });
        }
        out.values.push(q);
    }
    Ok(out)
}
