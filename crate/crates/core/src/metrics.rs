//! Performance indicators derived from transmission triples.
//!
//! With shortest-path routing and a uniform message rate `p` between every
//! pair of distinct devices, the expected number of messages over a time
//! span `T` is `S = p·T·δ(G)`. The mean distances `δ/|G|²` and
//! `δ/(|G|(|G|−1))` compare topologies of different sizes.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::formulas::TransmissionTriple;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologyReport {
    pub expression: String,
    pub triple: TransmissionTriple,
    /// `δ / |G|²`
    pub mean_all: BigRational,
    /// `δ / (|G|(|G|−1))`; absent for a single vertex.
    pub mean_distinct: Option<BigRational>,
    /// `rate · time · δ`; present only when both were supplied.
    pub expected_messages: Option<BigRational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SortKey {
    MeanDistinct,
    Delta,
    Size,
}

fn ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

pub fn summarize(
    expression: &str,
    triple: &TransmissionTriple,
    rate: Option<&BigRational>,
    time: Option<&BigRational>,
) -> TopologyReport {
    let size = &triple.size;
    let mean_all = ratio(&triple.delta, &(size * size));
    let mean_distinct =
        (*size > BigUint::one()).then(|| ratio(&triple.delta, &(size * (size - 1u32))));
    let expected_messages = match (rate, time) {
        (Some(p), Some(t)) => Some(p * t * BigRational::from_integer(triple.delta.clone().into())),
        _ => None,
    };
    TopologyReport {
        expression: expression.to_string(),
        triple: triple.clone(),
        mean_all,
        mean_distinct,
        expected_messages,
    }
}

/// Stable ascending sort by an exact key.
///
/// A single-vertex topology has no mean distinct distance and sorts before
/// every other report under [`SortKey::MeanDistinct`].
pub fn compare_rank(mut reports: Vec<TopologyReport>, key: SortKey) -> Result<Vec<TopologyReport>> {
    if reports.is_empty() {
        return Err(Error::invalid("nothing to compare"));
    }
    let cmp = |a: &TopologyReport, b: &TopologyReport| -> Ordering {
        match key {
            SortKey::MeanDistinct => a.mean_distinct.cmp(&b.mean_distinct),
            SortKey::Delta => a.triple.delta.cmp(&b.triple.delta),
            SortKey::Size => a.triple.size.cmp(&b.triple.size),
        }
    };
    reports.sort_by(cmp);
    Ok(reports)
}

/// Parses a nonnegative decimal such as `2`, `0.25` or `.5` into an exact rational.
pub fn parse_decimal(text: &str) -> Result<BigRational> {
    let bad = || Error::invalid(format!("`{text}` is not a nonnegative decimal number"));
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let num = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse::<BigInt>().map_err(|_| bad())?
    };
    let den = BigInt::from(10u32).pow(frac.len() as u32);
    Ok(BigRational::new(num, den))
}

/// `%.6g`-style rendering: six significant digits, trailing zeros dropped,
/// scientific notation outside `1e-4 ..< 1e6`. Display only.
pub fn display_rational(value: &BigRational) -> String {
    const DIGITS: i64 = 6;
    if value.is_zero() {
        return "0".to_string();
    }
    let sign = if value.is_negative() { "-" } else { "" };
    let v = value.abs();
    let ten = BigRational::from_integer(10.into());

    // exponent e with 10^e ≤ v < 10^(e+1)
    let mut exp = v.numer().to_string().len() as i64 - v.denom().to_string().len() as i64;
    while pow10(&ten, exp) > v {
        exp -= 1;
    }
    while pow10(&ten, exp + 1) <= v {
        exp += 1;
    }

    // round half away from zero to DIGITS significant digits
    let scaled = &v * pow10(&ten, DIGITS - 1 - exp);
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let mut mantissa = if r * 2 >= *scaled.denom() { q + 1 } else { q };
    if mantissa.to_string().len() as i64 > DIGITS {
        mantissa /= 10;
        exp += 1;
    }
    let digits = mantissa.to_string();

    if (-4..DIGITS).contains(&exp) {
        let out = if exp >= 0 {
            let (int, frac) = digits.split_at(exp as usize + 1);
            format!("{int}.{frac}")
        } else {
            format!("0.{}{digits}", "0".repeat((-exp - 1) as usize))
        };
        format!("{sign}{}", trim_fraction(&out))
    } else {
        let (lead, rest) = digits.split_at(1);
        let m = trim_fraction(&format!("{lead}.{rest}"));
        let esign = if exp < 0 { '-' } else { '+' };
        format!("{sign}{m}e{esign}{:02}", exp.abs())
    }
}

fn pow10(ten: &BigRational, exp: i64) -> BigRational {
    ten.pow(exp as i32)
}

fn trim_fraction(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}
