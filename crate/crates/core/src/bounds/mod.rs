//! Admissibility of exponent pairs, predicted growth exponents, γ-scans with
//! log-log slope fits, and exponent-level checks of the model-integral bounds.

mod admissibility;
mod fit;
mod qest;
mod region;
mod scan;

pub use admissibility::{
    admissible, admissible_exact, alpha_star, alpha_star_exact, boundary_damping, boundary_sign_condition,
    classify_exact, predicted_product_slope, to_rational, Admissibility, DampingProfile, ExactAdmissibility,
    ExtendedRational,
};
pub use fit::{fit_slope, SlopeFit, MIN_FIT_SPAN};
pub use qest::{
    pest_exponents, qest_exponents, semiaxes_from_ratios, verify_pest, verify_qest, AxisSlope, BoundForm,
    BoundReport, LatticePoint, AXIS_SLOPE_TOL,
};
pub use region::{region_gammas, region_scan, EmpiricalClass, RegionRow, REGION_GAMMA_MAX};
pub use scan::{
    classify, gamma_grid, gamma_scan, CenterMode, Family, ScanResult, ScanRow, Verdict, BOUNDED_SLOPE_TOL,
    DIVERGENT_SLOPE_TOL, GAMMA_MAX, UNRESOLVED_TOL,
};
