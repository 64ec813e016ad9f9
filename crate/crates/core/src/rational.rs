use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::ser::{SerializeStruct, Serializer};

/// Exact fraction used for every density quantity.
pub type Rational = Ratio<i64>;

pub fn rat(num: i64, den: i64) -> Rational {
    Ratio::new(num, den)
}

pub fn int(v: usize) -> Rational {
    Ratio::from_integer(v as i64)
}

/// Smallest integer ≥ r.
pub fn ceil(r: Rational) -> i64 {
    r.ceil().to_integer()
}

pub fn floor(r: Rational) -> i64 {
    r.floor().to_integer()
}

pub fn to_f64(r: Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Serializes as `{"num": .., "den": ..}`.
pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Rational", 2)?;
    st.serialize_field("num", r.numer())?;
    st.serialize_field("den", r.denom())?;
    st.end()
}
