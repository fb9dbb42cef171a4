//! q-analogs and cyclic sieving: integer polynomials in `q`, Gaussian
//! binomial machinery, the per-class polynomial whose root-of-unity values
//! count rotation-fixed diagrams, rotation orbit reports, and the
//! verification drivers that tie all of it together.

mod csp;
mod poly;

pub use csp::{
    csp_polynomial, csp_verify, csp_verify_all, eval_at_primitive_root, orbit_report,
    q_lucas_binom_at_root, root_residue, rsw_polynomial, CspDivisorCheck, CspMode, CspReport,
    OrbitInfo, OrbitReport, RswCheck,
};
pub use poly::{cyclotomic, q_binom, q_factorial, q_int, q_multinom, IntPoly};
