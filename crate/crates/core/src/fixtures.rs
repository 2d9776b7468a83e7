//! Reference polynomials of the bicuspidal `⟨2,5⟩²` curve.

use crate::algebra::{parse_poly, Poly};

pub const Z_VARS: [&str; 4] = ["Z1", "Z2", "Z3", "Z4"];

pub const BICUSPIDAL_THETA: &str = "Z1^3*Z3^3 + 24*Z1^3*Z3^2 - 24*Z1^2*Z3^3 + 192*Z1^3*Z3 + 16*Z1^3*Z4 \
    - 540*Z1^2*Z3^2 + 192*Z1*Z3^3 + 16*Z2*Z3^3 + 336*Z1^3 - 4032*Z1^2*Z3 - 384*Z1^2*Z4 + 4032*Z1*Z3^2 \
    + 384*Z2*Z3^2 - 336*Z3^3 - 5904*Z1^2 + 27936*Z1*Z3 + 3072*Z1*Z4 + 3072*Z2*Z3 + 256*Z2*Z4 - 5904*Z3^2 \
    + 32256*Z1 + 5376*Z2 - 32256*Z3 - 5376*Z4";

pub const BICUSPIDAL_TAU: &str = "198*x + (3033/2)*x^2*t + (6615/2)*x^2*t^2 + (8883/2)*x*t^2 + 1494*x*t \
    + 2592*y^2*x*t^2 + x^6 + 6561*x*t^3 + 306*x^2*y^2 + 576*y^4*t + 2970*y^2*t^2 + 3240*x^2*t^3 + 180*x^4*t \
    + 96*x^3*y^2 + 1080*x^3*t^2 + 741*x^3*t + 2592*y^2*t^3 + 1710*t*y^2 + 4860*t^4*x + 522*x*y^2 + 192*x*y^4 \
    + 1458*x*t^5 + 432*y^4*t^2 + 972*y^2*t^4 + 135*x^4*t^2 + 540*x^3*t^3 + 18*x^5*t + 1215*x^2*t^4 \
    + 48*x^2*y^4 + 12*x^4*y^2 + 864*x^2*y^2*t + 144*x^3*t*y^2 + 648*x^2*t^2*y^2 + 1908*x*y^2*t \
    + 1296*x*y^2*t^3 + 288*x*y^4*t + 729*t^6 + 64*y^6 + 405*y^2 + 2916*t^5 + 228*y^4 + 12*x^5 + 261*x^2 \
    + 2142*t^2 + 513/8 + (8667/2)*t^3 + (345/2)*x^3 + (1125/2)*t + (249/4)*x^4 + (19521/4)*t^4";

/// `(Z1³ − 24Z1² + 192Z1 + 16Z2 − 336)(Z3³ + 24Z3² + 192Z3 + 16Z4 + 336) + 36(…)(…)`.
pub const BICUSPIDAL_REARRANGED: &str = "(Z1^3 - 24*Z1^2 + 192*Z1 + 16*Z2 - 336)*(Z3^3 + 24*Z3^2 + 192*Z3 + 16*Z4 + 336) \
    + 36*(Z1*Z3 + 10*Z1 - 6*Z3 - 56)*(Z1*Z3 + 6*Z1 - 10*Z3 - 56)";

pub fn bicuspidal_theta() -> Poly {
    parse_poly(BICUSPIDAL_THETA, &Z_VARS).unwrap()
}

pub fn bicuspidal_tau() -> Poly {
    parse_poly(BICUSPIDAL_TAU, &["x", "y", "t"]).unwrap()
}

pub fn bicuspidal_rearranged() -> Poly {
    parse_poly(BICUSPIDAL_REARRANGED, &Z_VARS).unwrap()
}
