use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "hurwitz-hodge",
    version,
    about = "Exact simple Hurwitz numbers, generating-function checks and λ_g λ_{g-1} Hodge integrals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Maximum number of transposition words one brute-force enumeration may visit.
    #[arg(long, env = "HURWITZ_BUDGET", global = true)]
    pub budget: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate single Hurwitz numbers H^g_eta.
    Hurwitz(HurwitzArgs),
    /// Print a generating function truncated at u^N.
    Series(SeriesArgs),
    /// Check the generating-function identities as exact residual series.
    Verify(VerifyArgs),
    /// Tabulate (2g)!-normalized coefficients of D_i(u).
    Hodge(HodgeArgs),
}

#[derive(Debug, Args)]
pub struct HurwitzArgs {
    /// Degree of the cover.
    #[arg(long)]
    pub d: usize,
    /// Ramification profile over infinity, e.g. "2,1"; every partition of d if omitted.
    #[arg(long)]
    pub eta: Option<String>,
    /// Genus or inclusive genus range, e.g. "0..3".
    #[arg(long, default_value = "0..3")]
    pub g: Span,
    #[arg(long, value_enum, default_value_t = HurwitzSourceArg::Fast)]
    pub source: HurwitzSourceArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HurwitzSourceArg {
    /// Cut-and-join, cross-checked against the oracle when it fits the budget.
    Fast,
    Oracle,
    /// One-part closed form; eta must be (d).
    Closed,
    /// Oracle and cut-and-join side by side with their difference.
    Both,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    /// One of H, Hd, CY, D, Di, T.
    #[arg(long)]
    pub name: String,
    #[arg(long)]
    pub d: usize,
    /// Profile for H; defaults to (d).
    #[arg(long)]
    pub eta: Option<String>,
    /// Index for Di.
    #[arg(long, default_value_t = 1)]
    pub i: usize,
    /// Truncation order N.
    #[arg(long, default_value_t = 12)]
    pub order: usize,
    /// Hurwitz computation behind H.
    #[arg(long, value_enum, default_value_t = ComputeSource::Fast)]
    pub source: ComputeSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComputeSource {
    Fast,
    Oracle,
    Closed,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity to check; repeatable.
    #[arg(long, value_enum)]
    pub identity: Vec<IdentityArg>,
    /// Check every identity.
    #[arg(long)]
    pub all: bool,
    /// Degree or inclusive degree range, e.g. "1..4".
    #[arg(long)]
    pub d: Span,
    #[arg(long, default_value_t = 12)]
    pub order: usize,
    /// Hurwitz computation for the identities that use computed numbers.
    #[arg(long, value_enum, default_value_t = ComputeSource::Fast)]
    pub source: ComputeSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentityArg {
    /// Computed H_(d) against its closed form.
    #[value(alias = "formula_hd")]
    Hd,
    /// Signed sum over all profiles of degree d vanishes.
    #[value(alias = "formula_heta")]
    Heta,
    /// Master relation with closed-form H_(d).
    #[value(alias = "formula_cy_vs_master")]
    Cy,
    /// Master relation with computed H_(d).
    #[value(alias = "theorem_rel", alias = "master")]
    Rel,
    /// D(u) solved from Hurwitz numbers against its closed form.
    #[value(alias = "theorem_bpa")]
    Bpa,
    /// Sum of the D_i against T.
    #[value(alias = "formula_dlf")]
    Dlf,
}

#[derive(Debug, Args)]
pub struct HodgeArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long, default_value_t = 1)]
    pub i: usize,
    /// Genus or inclusive genus range.
    #[arg(long, default_value = "1..3")]
    pub g: Span,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// A single value `a` or an inclusive range `a..b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn iter(&self) -> RangeInclusive<usize> {
        self.start..=self.end
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("expected a non-negative integer or a range a..b, got {s:?}"))
        };
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if start > end {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Self { start, end })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("3".parse::<Span>().unwrap().iter().collect::<Vec<_>>(), vec![3]);
        assert_eq!("0..2".parse::<Span>().unwrap().iter().count(), 3);
        assert_eq!("1..=4".parse::<Span>().unwrap(), Span { start: 1, end: 4 });
        assert!("4..1".parse::<Span>().is_err());
        assert!("x".parse::<Span>().is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
