use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational number, always held in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_int(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `num/den`, with the `/1` suppressed for integers.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a, I: IntoIterator<Item = &'a Rational>>(xs: I) -> BigInt {
    use num_integer::Integer;
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_suppresses_unit_denominator() {
        assert_eq!(format_rational(&rat(-3456)), "-3456");
        assert_eq!(format_rational(&ratio(-691, 2730)), "-691/2730");
        assert_eq!(format_rational(&ratio(4, -8)), "-1/2");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "-17", "3/4", "-691/2730"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }

    #[test]
    fn zero_is_canonical() {
        let z = ratio(0, -5);
        assert_eq!(z.numer(), &BigInt::zero());
        assert_eq!(z.denom(), &BigInt::one());
    }
}
