//! The ground field.
//!
//! All algebraic structures in this crate are generic over a [`Scalar`],
//! an exact field abstraction built on `num-traits`. The one instantiation
//! shipped (and the only one the CLI speaks) is [`Rat`], arbitrary-precision
//! rationals: every pivot, kernel and quotient below is computed exactly, so
//! equality of subspaces is decidable and all verdicts are zero-tolerance.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed};

/// Field elements the linear-algebra substrate can work over.
///
/// `Num + Signed` gives exact ring/field operations with negation; the only
/// extra requirement is an embedding of small integers for structure
/// constants. Division by a nonzero element must be exact.
pub trait Scalar: Num + Signed + Clone + PartialEq + Debug + Display {
    fn from_int(n: i64) -> Self;
}

/// The field ℚ: invariants (lowest terms, positive denominator) are
/// maintained by `num-rational` on every operation.
pub type Rat = BigRational;

impl Scalar for Rat {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

/// Parse a rational from its canonical string form `p/q` or `p`.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational literal".to_string());
    }
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(BigRational::from_integer)
            .map_err(|e| format!("bad integer literal {s:?}: {e}")),
        Some((p, q)) => {
            let num = p
                .parse::<BigInt>()
                .map_err(|e| format!("bad numerator in {s:?}: {e}"))?;
            let den = q
                .parse::<BigInt>()
                .map_err(|e| format!("bad denominator in {s:?}: {e}"))?;
            if den == BigInt::from(0) {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(BigRational::new(num, den))
        }
    }
}

/// Canonical string form: `p/q` in lowest terms, or `p` when the
/// denominator is one. This is what every file format emits.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "5", "-3", "1/2", "-7/3"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(format_rat(&parse_rat("2/4").unwrap()), "1/2");
        assert_eq!(format_rat(&parse_rat("3/-6").unwrap()), "-1/2");
        assert_eq!(format_rat(&parse_rat("4/2").unwrap()), "2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("1.5").is_err());
    }
}
