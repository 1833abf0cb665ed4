//! Text encodings of exact numbers: rationals are `"p/q"` in lowest terms,
//! or `"p"` when the denominator is one.

use num_bigint::BigInt;

use crate::exactlat::{Int, Rat};

pub fn rat_to_string(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_int(s: &str) -> Result<Int, String> {
    s.trim().parse::<BigInt>().map_err(|_| format!("not an integer: {s:?}"))
}

pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let (p, q) = (parse_int(p)?, parse_int(q)?);
            if q == Int::from(0) {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Parses a comma-separated list of rationals such as `"1/3,2/3"`.
pub fn parse_rat_list(s: &str) -> Result<Vec<Rat>, String> {
    s.split(',').map(parse_rat).collect()
}

pub fn parse_int_list(s: &str) -> Result<Vec<Int>, String> {
    s.split(',').map(parse_int).collect()
}
