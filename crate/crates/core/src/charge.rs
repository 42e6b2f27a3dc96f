//! Exact rational arithmetic for charges and densities.
//!
//! All charge and maximum-average-degree computations stay in `Rational`;
//! no floating point is used anywhere on those paths.

pub type Rational = num_rational::Rational64;

/// Exact rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// Exact rational `p/q`. Panics on `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

/// Renders a rational as `p/q` (or plain `p` for integers), the form used
/// in all JSON reports.
pub fn format_rational(r: Rational) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
