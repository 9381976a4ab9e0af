use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use confocal_core::Sign;

#[derive(Debug, Parser)]
#[command(name = "confocal", version, about = "Confocal quadrics and circular views of conics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the confocal surface with parameter k.
    Classify(ClassifyArgs),
    /// Convert between Cartesian and confocal coordinates.
    Coords(CoordsArgs),
    /// Viewpoints from which a conic looks like a circle.
    Viewpoints(ViewpointsArgs),
    /// Write sampled plot data for a conic or a confocal family.
    Export(ExportArgs),
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, value_name = "A,B,C", value_parser = parse_triple, allow_hyphen_values = true)]
    pub abc: [f64; 3],
    #[arg(long, allow_hyphen_values = true)]
    pub k: f64,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["point", "confocal"])))]
pub struct CoordsArgs {
    #[arg(long, value_name = "A,B,C", value_parser = parse_triple, allow_hyphen_values = true)]
    pub abc: [f64; 3],
    #[arg(long, value_name = "X,Y,Z", value_parser = parse_triple, allow_hyphen_values = true)]
    pub point: Option<[f64; 3]>,
    #[arg(long, value_name = "K1,K2,K3", value_parser = parse_triple, allow_hyphen_values = true)]
    pub confocal: Option<[f64; 3]>,
    /// Signs of the Cartesian coordinates recovered from --confocal.
    #[arg(long, value_name = "S,S,S", value_parser = parse_signs, allow_hyphen_values = true,
          default_value = "+,+,+", requires = "confocal")]
    pub signs: [Sign; 3],
}

#[derive(Debug, Args)]
pub struct ViewpointsArgs {
    #[arg(long, value_name = "ALPHA,BETA", value_parser = parse_pair, allow_hyphen_values = true)]
    pub conic: [f64; 2],
    /// Locus parameter of a single viewpoint.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "grid")]
    pub at: Option<f64>,
    /// Number of viewpoints sampled along the locus.
    #[arg(long)]
    pub grid: Option<usize>,
    /// Branch of a hyperbolic locus (sign of x).
    #[arg(long, value_parser = parse_sign, allow_hyphen_values = true, default_value = "+")]
    pub branch: Sign,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Obj,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["conic", "abc"])))]
pub struct ExportArgs {
    #[arg(long, value_name = "ALPHA,BETA", value_parser = parse_pair, allow_hyphen_values = true)]
    pub conic: Option<[f64; 2]>,
    #[arg(long, value_name = "A,B,C", value_parser = parse_triple, allow_hyphen_values = true)]
    pub abc: Option<[f64; 3]>,
    /// Locus parameter of the exported viewpoint.
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.7)]
    pub at: f64,
    #[arg(long, value_parser = parse_sign, allow_hyphen_values = true, default_value = "+")]
    pub branch: Sign,
    /// Samples per curve.
    #[arg(long, default_value_t = 64)]
    pub grid: usize,
    /// Cone rulings drawn from the apex.
    #[arg(long, default_value_t = 24)]
    pub rulings: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(short = 'o', long = "output", value_name = "PATH")]
    pub output: PathBuf,
}

fn parse_list<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!("expected {N} comma-separated numbers, got {}", parts.len()));
    }
    let mut out = [0.0; N];
    for (slot, p) in out.iter_mut().zip(parts) {
        let v: f64 = p.parse().map_err(|_| format!("not a number: {p:?}"))?;
        if !v.is_finite() {
            return Err(format!("not finite: {p:?}"));
        }
        *slot = v;
    }
    Ok(out)
}

pub fn parse_triple(s: &str) -> Result<[f64; 3], String> {
    parse_list::<3>(s)
}

pub fn parse_pair(s: &str) -> Result<[f64; 2], String> {
    parse_list::<2>(s)
}

pub fn parse_sign(s: &str) -> Result<Sign, String> {
    match s.trim() {
        "+" | "+1" | "plus" => Ok(Sign::Plus),
        "-" | "-1" | "minus" => Ok(Sign::Minus),
        other => Err(format!("expected + or -, got {other:?}")),
    }
}

fn parse_signs(s: &str) -> Result<[Sign; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three signs, got {}", parts.len()));
    }
    Ok([parse_sign(parts[0])?, parse_sign(parts[1])?, parse_sign(parts[2])?])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_parse() {
        assert_eq!(parse_triple("4,2,1").unwrap(), [4.0, 2.0, 1.0]);
        assert_eq!(parse_pair("3,-1").unwrap(), [3.0, -1.0]);
        assert!(parse_pair("3").is_err());
        assert!(parse_triple("1,nan,2").is_err());
        assert!(parse_triple("1,x,2").is_err());
    }

    #[test]
    fn signs_parse() {
        assert_eq!(parse_signs("+,-,+").unwrap(), [Sign::Plus, Sign::Minus, Sign::Plus]);
        assert!(parse_signs("+,0,+").is_err());
    }

    #[test]
    fn negative_values_are_not_flags() {
        let cli = Cli::try_parse_from(["confocal", "classify", "--abc", "-1,-2,-3", "--k", "-5"]).unwrap();
        let Command::Classify(a) = cli.command else { panic!() };
        assert_eq!(a.abc, [-1.0, -2.0, -3.0]);
        assert_eq!(a.k, -5.0);
    }

    #[test]
    fn coords_needs_exactly_one_input() {
        assert!(Cli::try_parse_from(["confocal", "coords", "--abc", "4,2,1"]).is_err());
        assert!(Cli::try_parse_from([
            "confocal", "coords", "--abc", "4,2,1", "--point", "1,1,1", "--confocal", "0,1.5,3"
        ])
        .is_err());
    }
}
