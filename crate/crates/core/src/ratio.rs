//! Exact rational bounds and cost comparisons by cross-multiplication.
//!
//! A [`Ratio`] is a positive fraction stored in lowest terms. The only
//! arithmetic the certificates need is "where does the integer fraction
//! cost/opt sit relative to the bound p/q", which [`compare_cost_ratio`]
//! answers exactly in checked 64-bit arithmetic. There is deliberately no
//! general rational add/mul here.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// A positive rational bound p/q, normalized to lowest terms on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    /// Builds the reduced ratio `p/q`. Both parts must be positive.
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidArgument(format!(
                "ratio parts must be positive, got {p}/{q}"
            )));
        }
        let g = gcd(p, q);
        Ok(Ratio {
            num: p / g,
            den: q / g,
        })
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Ratio {
    type Err = Error;

    /// Parses the text form `P/Q` (ASCII digits, single slash). Decimal
    /// input is rejected on purpose: the certificates are exact.
    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = s
            .split_once('/')
            .ok_or_else(|| Error::InvalidArgument(format!("ratio must be P/Q, got {s:?}")))?;
        let parse = |part: &str| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidArgument(format!("ratio must be P/Q, got {s:?}")))
        };
        Ratio::new(parse(p)?, parse(q)?)
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    /// Exact rational order. Widening to 128 bits cannot overflow for any
    /// pair of 64-bit parts, so this comparison never wraps.
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

/// Position of the fraction `cost/opt` relative to the bound `r`.
///
/// Returns the sign of `cost * r.den - opt * r.num`, computed exactly:
/// `Greater` means the schedule's cost ratio strictly exceeds `r`. Both
/// products are checked and an overflow aborts with an error rather than
/// wrapping, since a wrapped comparison would silently invalidate a
/// certificate.
pub fn compare_cost_ratio(cost: u64, opt: u64, r: Ratio) -> Result<Ordering> {
    let lhs = cost
        .checked_mul(r.den)
        .ok_or(Error::ArithmeticOverflow("cost * ratio denominator"))?;
    let rhs = opt
        .checked_mul(r.num)
        .ok_or(Error::ArithmeticOverflow("opt * ratio numerator"))?;
    Ok(lhs.cmp(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn construction_reduces_to_lowest_terms() {
        let r = Ratio::new(619, 583).unwrap();
        assert_eq!((r.numer(), r.denom()), (619, 583));

        let one = Ratio::new(2, 2).unwrap();
        assert_eq!((one.numer(), one.denom()), (1, 1));

        let r = Ratio::new(638, 583).unwrap();
        assert_eq!((r.numer(), r.denom()), (638, 583));
    }

    #[test]
    fn zero_parts_are_rejected() {
        assert!(Ratio::new(0, 1).is_err());
        assert!(Ratio::new(1, 0).is_err());
        assert!(Ratio::new(0, 0).is_err());
    }

    #[test]
    fn compare_examples() {
        let bound = Ratio::new(619, 583).unwrap();
        assert_eq!(compare_cost_ratio(12, 11, bound).unwrap(), Ordering::Greater);
        assert_eq!(compare_cost_ratio(619, 583, bound).unwrap(), Ordering::Equal);
        // 27*583 = 15741 < 26*619 = 16094, cross-checked below in 128 bits
        assert_eq!(compare_cost_ratio(27, 26, bound).unwrap(), Ordering::Less);
        assert_eq!(
            (27u128 * 583).cmp(&(26u128 * 619)),
            Ordering::Less,
            "wide-arithmetic cross-check"
        );
    }

    #[test]
    fn zero_cost_compares_below_any_bound() {
        let bound = Ratio::new(619, 583).unwrap();
        assert_eq!(compare_cost_ratio(0, 1, bound).unwrap(), Ordering::Less);
        assert_eq!(compare_cost_ratio(0, 0, bound).unwrap(), Ordering::Equal);
    }

    #[test]
    fn overflow_fails_loudly() {
        let bound = Ratio::new(1, u64::MAX).unwrap();
        assert_eq!(
            compare_cost_ratio(u64::MAX, 1, bound),
            Err(Error::ArithmeticOverflow("cost * ratio denominator"))
        );
    }

    #[test]
    fn parse_and_display_round_trip() {
        let r: Ratio = "619/583".parse().unwrap();
        assert_eq!(r, Ratio::new(619, 583).unwrap());
        assert_eq!(r.to_string(), "619/583");

        assert_eq!("4/6".parse::<Ratio>().unwrap().to_string(), "2/3");
        assert!("1.06".parse::<Ratio>().is_err());
        assert!("619".parse::<Ratio>().is_err());
        assert!("0/583".parse::<Ratio>().is_err());
        assert!("a/b".parse::<Ratio>().is_err());
    }

    #[test]
    fn rational_order_is_exact() {
        let tight = Ratio::new(619, 583).unwrap();
        let loose = Ratio::new(620, 583).unwrap();
        assert!(tight < loose);
        assert!(Ratio::new(41, 40).unwrap() < tight);
        assert_eq!(tight.cmp(&Ratio::new(1238, 1166).unwrap()), Ordering::Equal);
    }

    proptest! {
        // sign(a*q - b*p) against a 128-bit oracle, for costs up to 10^6
        // and bound parts up to 10^3.
        #[test]
        fn compare_matches_wide_oracle(
            a in 0u64..=1_000_000,
            b in 0u64..=1_000_000,
            p in 1u64..=1_000,
            q in 1u64..=1_000,
        ) {
            let r = Ratio::new(p, q).unwrap();
            let got = compare_cost_ratio(a, b, r).unwrap();
            let oracle = (a as u128 * r.denom() as u128).cmp(&(b as u128 * r.numer() as u128));
            prop_assert_eq!(got, oracle);
        }

        // Scaling both parts by k never changes the reduced value.
        #[test]
        fn scaling_is_invisible(p in 1u64..=10_000, q in 1u64..=10_000, k in 1u64..=1_000) {
            prop_assert_eq!(Ratio::new(p * k, q * k).unwrap(), Ratio::new(p, q).unwrap());
        }
    }
}
