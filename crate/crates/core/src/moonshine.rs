//! Non-negative decompositions of coefficients into Monster
//! irreducible-representation dimensions.
//!
//! Decompositions are not unique because the trivial representation has
//! dimension 1. The canonical output is greedy, largest dimension first;
//! [`Decomposition::verify`] accepts any valid decomposition.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::series::{IntSeries, QInt, SeriesError};

const STANDARD_TABLE: &str = include_str!("../data/monster_dims.txt");

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MoonshineError {
    #[error("cannot decompose negative value {0}")]
    NegativeValue(QInt),
    #[error("coefficient of q̄^{exponent} is negative ({value})")]
    NegativeCoefficient { exponent: i64, value: QInt },
    #[error("dimension table line {line}: {msg}")]
    BadTable { line: usize, msg: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Strictly increasing table of irreducible dimensions, starting at 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonsterDims {
    dims: Vec<QInt>,
}

impl MonsterDims {
    /// The bundled table.
    pub fn standard() -> Self {
        Self::parse(STANDARD_TABLE).expect("bundled dimension table is well formed")
    }

    /// Parse one decimal integer per line, ascending. Blank lines and `#`
    /// comments are ignored.
    pub fn parse(text: &str) -> Result<Self, MoonshineError> {
        let mut dims: Vec<QInt> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| MoonshineError::BadTable { line: i + 1, msg };
            let d: QInt = line.parse().map_err(|_| err(format!("not an integer: {line:?}")))?;
            if let Some(prev) = dims.last() {
                if d <= *prev {
                    return Err(err("dimensions must be strictly increasing".into()));
                }
            } else if d != QInt::from(1) {
                return Err(err("first dimension must be 1".into()));
            }
            dims.push(d);
        }
        if dims.is_empty() {
            return Err(MoonshineError::BadTable { line: 0, msg: "empty table".into() });
        }
        Ok(MonsterDims { dims })
    }

    pub fn dims(&self) -> &[QInt] {
        &self.dims
    }

    pub fn contains(&self, d: &QInt) -> bool {
        self.dims.binary_search(d).is_ok()
    }

    /// Largest-first greedy decomposition.
    pub fn greedy_decompose(&self, value: &QInt) -> Result<Decomposition, MoonshineError> {
        if value.is_negative() {
            return Err(MoonshineError::NegativeValue(value.clone()));
        }
        let mut rest = value.clone();
        let mut terms = Vec::new();
        let mut upper = self.dims.len();
        while !rest.is_zero() {
            // index of largest dim ≤ rest
            let idx = match self.dims[..upper].binary_search(&rest) {
                Ok(i) => i,
                Err(i) => i - 1,
            };
            let d = &self.dims[idx];
            let (mult, rem) = rest.div_rem(d);
            terms.push((d.clone(), mult));
            rest = rem;
            upper = idx;
        }
        Ok(Decomposition { target: value.clone(), terms })
    }

    /// Greedy decompositions of the coefficients of `q̄^n`, `from ≤ n ≤ to`.
    pub fn decompose_series(
        &self,
        s: &IntSeries,
        from: i64,
        to: i64,
    ) -> Result<Vec<(i64, Decomposition)>, MoonshineError> {
        (from..=to)
            .map(|n| {
                let c = s.coefficient(n)?;
                if c.is_negative() {
                    return Err(MoonshineError::NegativeCoefficient { exponent: n, value: c });
                }
                Ok((n, self.greedy_decompose(&c)?))
            })
            .collect()
    }
}

/// `target = Σ multiplicity · dimension`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub target: QInt,
    /// `(dimension, multiplicity)` pairs.
    pub terms: Vec<(QInt, QInt)>,
}

impl Decomposition {
    pub fn new(target: QInt, terms: Vec<(QInt, QInt)>) -> Self {
        Decomposition { target, terms }
    }

    /// True iff every dimension is in `dims` (each at most once), every
    /// multiplicity is positive and the weighted sum equals `target`.
    pub fn verify(&self, dims: &MonsterDims) -> bool {
        let mut seen: Vec<&QInt> = Vec::with_capacity(self.terms.len());
        let mut sum = QInt::zero();
        for (d, m) in &self.terms {
            if !dims.contains(d) || !m.is_positive() || seen.contains(&d) {
                return false;
            }
            seen.push(d);
            sum += d * m;
        }
        sum == self.target
    }

    /// Multiplicity of a given dimension (zero if absent).
    pub fn multiplicity(&self, dim: &QInt) -> QInt {
        self.terms.iter().find(|(d, _)| d == dim).map(|(_, m)| m.clone()).unwrap_or_default()
    }
}

/// `196884 = 1·196883 + 1·1`
impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} =", self.target)?;
        if self.terms.is_empty() {
            return write!(f, " 0");
        }
        for (i, (d, m)) in self.terms.iter().enumerate() {
            let sep = if i == 0 { " " } else { " + " };
            write!(f, "{sep}{m}·{d}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> QInt {
        QInt::from(v)
    }

    fn terms(v: &[(i64, i64)]) -> Vec<(QInt, QInt)> {
        v.iter().map(|&(d, m)| (q(d), q(m))).collect()
    }

    #[test]
    fn standard_table() {
        let t = MonsterDims::standard();
        assert_eq!(t.dims()[..6], [1, 196883, 21296876, 842609326, 18538750076, 19360062527].map(q));
        assert!(t.dims().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn classical_decompositions() {
        let t = MonsterDims::standard();
        assert_eq!(t.greedy_decompose(&q(196884)).unwrap().terms, terms(&[(196883, 1), (1, 1)]));
        assert_eq!(t.greedy_decompose(&q(21493760)).unwrap().terms, terms(&[(21296876, 1), (196883, 1), (1, 1)]));
        assert_eq!(
            t.greedy_decompose(&q(864299970)).unwrap().terms,
            terms(&[(842609326, 1), (21296876, 1), (196883, 2), (1, 2)])
        );
    }

    #[test]
    fn zero_and_negative() {
        let t = MonsterDims::standard();
        let z = t.greedy_decompose(&q(0)).unwrap();
        assert!(z.terms.is_empty());
        assert!(z.verify(&t));
        assert_eq!(t.greedy_decompose(&q(-1)), Err(MoonshineError::NegativeValue(q(-1))));
    }

    #[test]
    fn verify_examples() {
        let t = MonsterDims::standard();
        assert!(Decomposition::new(q(2), terms(&[(1, 2)])).verify(&t));
        assert!(!Decomposition::new(q(2), terms(&[(1, 1)])).verify(&t));
        assert!(!Decomposition::new(q(2), terms(&[(2, 1)])).verify(&t));
        assert!(!Decomposition::new(q(0), terms(&[(1, 0)])).verify(&t));
        assert!(!Decomposition::new(q(2), terms(&[(1, 1), (1, 1)])).verify(&t));
    }

    #[test]
    fn table_parsing_errors() {
        assert!(MonsterDims::parse("1\n5\n3\n").is_err());
        assert!(MonsterDims::parse("2\n5\n").is_err());
        assert!(MonsterDims::parse("1\nabc\n").is_err());
        assert!(MonsterDims::parse("# nothing\n").is_err());
        let t = MonsterDims::parse("# extended\n1\n7 # seven\n\n10\n").unwrap();
        assert_eq!(t.dims(), &[q(1), q(7), q(10)]);
    }

    #[test]
    fn negative_series_coefficient() {
        let t = MonsterDims::standard();
        let d = crate::forms::delta(3);
        let err = t.decompose_series(&d, 1, 3).unwrap_err();
        assert_eq!(err, MoonshineError::NegativeCoefficient { exponent: 2, value: q(-24) });
    }

    #[test]
    fn display() {
        let t = MonsterDims::standard();
        assert_eq!(t.greedy_decompose(&q(196884)).unwrap().to_string(), "196884 = 1·196883 + 1·1");
    }
}
