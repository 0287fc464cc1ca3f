use trianguline_limits::LValue;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Parsed inputs shared by the subcommands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub p: u64,
    pub k: u32,
    pub l: LValue,
    /// Relative digits for `p`-adic output.
    pub prec: u32,
    /// `T`-adic truncation.
    pub t_prec: usize,
    /// Last cyclotomic factor kept.
    pub depth: u32,
    pub n_max: u32,
    pub format: Format,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.p < 3 || self.p % 2 == 0 || (3..self.p).step_by(2).take_while(|d| d * d <= self.p).any(|d| self.p % d == 0) {
            return Err(CliError::Usage(format!("--p {} is not an odd prime", self.p)));
        }
        if self.prec == 0 || self.t_prec == 0 || self.depth == 0 || self.n_max == 0 {
            return Err(CliError::Usage("budgets must be positive".into()));
        }
        Ok(())
    }
}

pub fn parse_l(s: &str, p: u64) -> Result<LValue, CliError> {
    LValue::parse(s, p).map_err(|e| CliError::Usage(format!("--L {s}: {e}")))
}
