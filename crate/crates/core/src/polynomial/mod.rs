//! Exact polynomial arithmetic, determinants, positivity certificates and
//! real-zero witnesses.

mod det;
mod multi;
mod search;
mod sos;
mod univariate;

pub use det::{det_bareiss, det_cofactor, symbolic_det, ExactDiv};
pub use multi::{var_list, MultiPoly, PolyJson, TermJson};
pub use search::{
    find_sign_change, restrict_to_axis, restrict_to_segment, segment_avoids_origin, SearchConfig, WitnessReport,
    ZeroWitness,
};
pub use sos::{find_sos, verify_sos, SosCertificate, SosTermReport};
pub use univariate::{RootInterval, UniPoly};

use crate::error::{Error, Result};

/// Sturm-based decision for a polynomial in one indeterminate.
pub fn univariate_real_root_exists(p: &MultiPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sup = p.support_vars();
    match sup.as_slice() {
        [] => Ok(false),
        [i] => UniPoly::new(p.univariate_coeffs(*i)?).real_root_exists(),
        _ => Err(Error::NotUnivariate),
    }
}
