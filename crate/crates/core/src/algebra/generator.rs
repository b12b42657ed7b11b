//! Generator symbols and free words.

use std::fmt;

use super::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenKind {
    Rho,
    Sigma,
    X,
    Y,
}

impl GenKind {
    pub fn name(self) -> &'static str {
        match self {
            GenKind::Rho => "rho",
            GenKind::Sigma => "sigma",
            GenKind::X => "x",
            GenKind::Y => "y",
        }
    }

    pub fn is_torus(self) -> bool {
        matches!(self, GenKind::Rho | GenKind::Sigma)
    }
}

/// A generator raised to an integer power. Only `rho` and `sigma` may carry
/// nonpositive exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSymbol {
    pub kind: GenKind,
    pub index: usize,
    pub exponent: i64,
}

impl GeneratorSymbol {
    /// Build a checked symbol for rank `n`.
    pub fn new(kind: GenKind, index: usize, exponent: i64, n: usize) -> Result<Self, AlgebraError> {
        let g = GeneratorSymbol { kind, index, exponent };
        g.validate(n)?;
        Ok(g)
    }

    pub fn rho(i: usize, e: i64) -> Self {
        GeneratorSymbol { kind: GenKind::Rho, index: i, exponent: e }
    }

    pub fn sigma(i: usize, e: i64) -> Self {
        GeneratorSymbol { kind: GenKind::Sigma, index: i, exponent: e }
    }

    pub fn x(i: usize) -> Self {
        GeneratorSymbol { kind: GenKind::X, index: i, exponent: 1 }
    }

    pub fn y(i: usize) -> Self {
        GeneratorSymbol { kind: GenKind::Y, index: i, exponent: 1 }
    }

    pub fn validate(&self, n: usize) -> Result<(), AlgebraError> {
        if self.index == 0 || self.index > n {
            return Err(AlgebraError::IndexOutOfRange { index: self.index, n });
        }
        if !self.kind.is_torus() && self.exponent < 1 {
            return Err(AlgebraError::InvalidExponent {
                generator: format!("{}{}", self.kind.name(), self.index),
                exponent: self.exponent,
            });
        }
        Ok(())
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.name(), self.index)?;
        if self.exponent != 1 {
            write!(f, "^{}", self.exponent)?;
        }
        Ok(())
    }
}

/// A free product of generator symbols, not necessarily in normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<GeneratorSymbol>);

impl Word {
    pub fn new(factors: Vec<GeneratorSymbol>) -> Self {
        Word(factors)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn factors(&self) -> &[GeneratorSymbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn validate(&self, n: usize) -> Result<(), AlgebraError> {
        self.0.iter().try_for_each(|g| g.validate(n))
    }

    /// Largest index mentioned, 0 for the empty word.
    pub fn max_index(&self) -> usize {
        self.0.iter().map(|g| g.index).max().unwrap_or(0)
    }
}

impl FromIterator<GeneratorSymbol> for Word {
    fn from_iter<I: IntoIterator<Item = GeneratorSymbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
