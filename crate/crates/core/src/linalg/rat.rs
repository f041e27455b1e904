use crate::error::{Error, Result};
use num::BigInt;

/// Scalar type: arbitrary-precision rational.
pub type Rat = num::BigRational;

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// `n / d`. Panics on `d == 0`; use [`parse_rat`] for untrusted input.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"`. Rejects zero denominators.
pub fn parse_rat(s: &str) -> Result<Rat> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| Error::schema(format!("bad rational {s:?}: {e}")))
}

/// Canonical form: lowest terms, `"p"` or `"p/q"` with positive `q`.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{One, Zero};

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "7", "-3", "2/3", "-5/4"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(format_rat(&parse_rat("4/6").unwrap()), "2/3");
        assert_eq!(format_rat(&parse_rat("3/-6").unwrap()), "-1/2");
        assert_eq!(format_rat(&parse_rat("0/5").unwrap()), "0");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a").is_err());
        assert!(parse_rat("1/2/3").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn constructors() {
        assert!(rat_int(0).is_zero());
        assert!(rat(3, 3).is_one());
        assert_eq!(rat(-4, 8), rat(1, -2));
    }
}
