//! A small language for coefficient identities between an extremal family
//! and `J`, e.g.
//!
//! ```text
//! k=3: g[6i+6] = 3*j[3*(6i+6)] + j[2i+2]
//! ```
//!
//! Subscripts are `q`-exponents (even); `g[2n]` is the coefficient of
//! `q^{2n}` in `G_k` and `j[2n]` the coefficient of `q^{2n}` in `J`. Index
//! expressions are integer polynomials in `i` that must reduce to affine
//! form.

mod eval;
mod parser;
mod table1;

use std::fmt;

pub use eval::{
    coverage, evaluate, reports_to_text, required_orders, run_identities, run_suite, IdentityReport, IdentityRow,
    Requirements,
};
pub use parser::{parse, parse_file};
pub use table1::{builtin_table1, TABLE1_ROWS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DslError {
    #[error("syntax error at column {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("index at column {position} is not affine in i")]
    NonAffineIndex { position: usize },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<DslError>,
    },
    #[error("identity is for k={identity} but the family has k={family}")]
    KMismatch { identity: u32, family: u32 },
    #[error("subscript {subscript} is not a positive even exponent")]
    InvalidSubscript { subscript: i64 },
    #[error("g[{subscript}] depends on x")]
    XDependentCoefficient { subscript: i64 },
    #[error("{symbol}[{subscript}] lies beyond the available order (q^{available})")]
    BeyondTruncation { symbol: Symbol, subscript: i64, available: i64 },
    #[error(transparent)]
    Extremal(#[from] crate::extremal::ExtremalError),
}

/// `slope·i + offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Affine {
    pub slope: i64,
    pub offset: i64,
}

impl Affine {
    pub fn new(slope: i64, offset: i64) -> Self {
        Affine { slope, offset }
    }

    pub fn at(&self, i: i64) -> i64 {
        self.slope * i + self.offset
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.slope, self.offset) {
            (0, c) => write!(f, "{c}"),
            (1, 0) => write!(f, "i"),
            (s, 0) => write!(f, "{s}*i"),
            (1, c) => write!(f, "i+{c}"),
            (s, c) => write!(f, "{s}*i+{c}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    /// Coefficients of `J`.
    J,
    /// Coefficients of the extremal family `G_k`.
    G,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symbol::J => "j",
            Symbol::G => "g",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: i64,
    pub symbol: Symbol,
    pub index: Affine,
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff != 1 {
            write!(f, "{}*", self.coeff)?;
        }
        write!(f, "{}[{}]", self.symbol, self.index)
    }
}

/// `k=K: g[lhs] = Σ rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdentityAst {
    pub k: u32,
    pub lhs: Affine,
    pub rhs: Vec<Term>,
}

impl fmt::Display for IdentityAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}: g[{}] =", self.k, self.lhs)?;
        for (n, t) in self.rhs.iter().enumerate() {
            let sep = if n == 0 { " " } else { " + " };
            write!(f, "{sep}{t}")?;
        }
        Ok(())
    }
}
