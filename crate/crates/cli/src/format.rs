use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use phifib::digit_count;

/// How a computed value is printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    /// Full decimal expansion.
    Dec,
    /// Full lowercase hexadecimal, no prefix.
    Hex,
    /// Decimal digit count only.
    Digits,
    /// Last `k` decimal digits, zero-padded to `k`.
    Last(usize),
}

impl OutputFormat {
    pub fn render(self, x: &BigInt) -> String {
        match self {
            OutputFormat::Dec => x.to_str_radix(10),
            OutputFormat::Hex => x.to_str_radix(16),
            OutputFormat::Digits => digit_count(x).to_string(),
            OutputFormat::Last(k) => {
                let modulus = num_traits::pow(BigInt::from(10u8), k);
                format!("{:0>k$}", x % modulus)
            }
        }
    }
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dec" => Ok(OutputFormat::Dec),
            "hex" => Ok(OutputFormat::Hex),
            "digits" => Ok(OutputFormat::Digits),
            _ => {
                let k = s
                    .strip_prefix("last:")
                    .ok_or_else(|| format!("unknown format `{s}` (expected dec, hex, digits or last:K)"))?;
                match k.parse::<usize>() {
                    Ok(k) if k >= 1 => Ok(OutputFormat::Last(k)),
                    _ => Err(format!("last:K needs a positive integer K, got `{k}`")),
                }
            }
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OutputFormat::Dec => f.write_str("dec"),
            OutputFormat::Hex => f.write_str("hex"),
            OutputFormat::Digits => f.write_str("digits"),
            OutputFormat::Last(k) => write!(f, "last:{k}"),
        }
    }
}
