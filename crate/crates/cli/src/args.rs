use std::path::PathBuf;
use std::str::FromStr;

use clap::builder::RangedU64ValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use spin_core::sampling::{DEFAULT_SAMPLES, DEFAULT_SEED};
use spin_core::{Direction, Sign};

use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "spin", version, about = "Generalized spin-1/2 operators from arbitrary quantization directions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print sigma_c, sigma_x, sigma_y, their eigenvectors, the rotated frame and sigma^2
    Ops(OpsArgs),
    /// Run the property catalogue over seeded random directions
    Verify(VerifyArgs),
    /// Expectation of the spin projection along c, next to the geometric value
    Expect(ExpectArgs),
    /// Tabulate the operators over a theta' x phi' grid with b fixed
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// A `theta,phi` pair as typed on the command line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnglePair {
    pub theta: f64,
    pub phi: f64,
}

impl FromStr for AnglePair {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (t, p) = s
            .split_once(',')
            .ok_or_else(|| format!("expected \"theta,phi\", got {s:?}"))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<f64>()
                .map_err(|_| format!("not a number: {:?}", x.trim()))
        };
        Ok(AnglePair {
            theta: parse(t)?,
            phi: parse(p)?,
        })
    }
}

impl AnglePair {
    pub fn to_direction(self, degrees: bool) -> Result<Direction, CliError> {
        let d = if degrees {
            Direction::from_degrees(self.theta, self.phi)
        } else {
            Direction::new(self.theta, self.phi)
        };
        d.map_err(|e| CliError::Usage(e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    #[value(name = "+")]
    Plus,
    #[value(name = "-")]
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

#[derive(Debug, Args)]
pub struct OpsArgs {
    /// Intermediate direction "theta,phi"
    #[arg(long, allow_hyphen_values = true)]
    pub b: AnglePair,
    /// Final direction "theta,phi"
    #[arg(long, allow_hyphen_values = true)]
    pub c: AnglePair,
    /// Preparation direction; adds states and expectation values
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<AnglePair>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Read angles in degrees
    #[arg(long)]
    pub degrees: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = DEFAULT_SAMPLES, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
    pub samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Tolerance applied to every property instead of its built-in one
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct ExpectArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: AnglePair,
    #[arg(long, value_enum, allow_hyphen_values = true)]
    pub sign: SignArg,
    #[arg(long, allow_hyphen_values = true)]
    pub b: AnglePair,
    #[arg(long, allow_hyphen_values = true)]
    pub c: AnglePair,
    #[arg(long)]
    pub degrees: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Grid points per angle axis
    #[arg(long, value_parser = RangedU64ValueParser::<usize>::new().range(2..))]
    pub grid: usize,
    /// Fixed intermediate direction "theta,phi"
    #[arg(long, allow_hyphen_values = true)]
    pub b: AnglePair,
    /// Output file
    #[arg(long)]
    pub out: PathBuf,
    /// csv or json
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Read angles in degrees
    #[arg(long)]
    pub degrees: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pairs() {
        assert_eq!("0.5,-1".parse::<AnglePair>().unwrap(), AnglePair { theta: 0.5, phi: -1.0 });
        assert_eq!(" 90 , 0 ".parse::<AnglePair>().unwrap(), AnglePair { theta: 90.0, phi: 0.0 });
        assert!("1.57,x".parse::<AnglePair>().is_err());
        assert!("1.57".parse::<AnglePair>().is_err());
    }

    #[test]
    fn non_finite_angle_is_usage_error() {
        let pair: AnglePair = "inf,0".parse().unwrap();
        assert!(matches!(pair.to_direction(false), Err(CliError::Usage(_))));
    }
}
