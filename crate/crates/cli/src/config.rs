use std::fmt;

use whiteman_core::arith;
use whiteman_core::codegen::{Construction, Constructor};
use whiteman_core::distance::{DEFAULT_ENUM_BUDGET, DEFAULT_RANK_TEST_CAP};
use whiteman_core::{Error, PrimeField, TwoPrimeParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Table,
}

/// A parameter set that failed validation, with the violated constraint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobConfig {
    pub n1: u64,
    pub n2: u64,
    pub q: u64,
    pub format: Format,
    pub wmax: usize,
    pub enum_budget: u64,
    pub rank_cap: u64,
    pub constructor: Option<Constructor>,
    pub full: bool,
}

impl JobConfig {
    pub fn new(n1: u64, n2: u64, q: u64) -> Self {
        JobConfig {
            n1,
            n2,
            q,
            format: Format::Json,
            wmax: 4,
            enum_budget: DEFAULT_ENUM_BUDGET,
            rank_cap: DEFAULT_RANK_TEST_CAP,
            constructor: None,
            full: false,
        }
    }

    /// Checks the pair and `q` before any heavy work.
    pub fn validate(&self) -> Result<TwoPrimeParams, InputError> {
        let params = TwoPrimeParams::new(self.n1, self.n2)?;
        if !arith::is_prime(self.q) {
            return Err(InputError(format!("q = {} is not prime", self.q)));
        }
        PrimeField::new(self.q)?;
        if arith::gcd(self.q, params.n()) != 1 {
            return Err(InputError(format!(
                "gcd(q, n) != 1 for q = {}, n = {}",
                self.q,
                params.n()
            )));
        }
        Ok(params)
    }

    pub fn construction(&self) -> Result<Construction, InputError> {
        self.validate()?;
        Ok(Construction::new(self.n1, self.n2, self.q)?)
    }
}

/// Parses `"i,j,h,t"` style index lists.
pub fn parse_indices(s: &str) -> Result<Vec<u8>, InputError> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u8>()
                .map_err(|_| InputError(format!("bad index {t:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_named_constraints() {
        let e = JobConfig::new(7, 15, 2).validate().unwrap_err();
        assert!(e.0.contains("n2 is not prime"), "{e}");
        let e = JobConfig::new(7, 11, 2).validate().unwrap_err();
        assert!(e.0.contains("gcd(n1 - 1, n2 - 1) != 6"), "{e}");
        let e = JobConfig::new(7, 13, 7).validate().unwrap_err();
        assert!(e.0.contains("gcd(q, n)"), "{e}");
        let e = JobConfig::new(7, 13, 4).validate().unwrap_err();
        assert!(e.0.contains("not prime"), "{e}");
        assert!(JobConfig::new(7, 13, 2).validate().is_ok());
    }

    #[test]
    fn indices() {
        assert_eq!(parse_indices("1,0,1,2").unwrap(), vec![1, 0, 1, 2]);
        assert_eq!(parse_indices("").unwrap(), Vec::<u8>::new());
        assert!(parse_indices("1,x").is_err());
    }
}
