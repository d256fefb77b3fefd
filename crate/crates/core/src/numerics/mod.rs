//! Floating-point dynamics: Green functions, Böttcher coordinates, Julia-set
//! sampling and rendering, numeric symmetry and compactness checks.

mod green;
mod render;
mod roots;
mod sample;
mod verify;

pub use green::{FloatMap, FloatRatFn, GreenConfig, GreenEvaluator, GreenSample, PhiStatus};
pub use render::{directed_hausdorff, hausdorff, pixels_as_points, render_slice, JuliaSlice, SliceStats, Window};
pub use roots::aberth;
pub use sample::{sample_fiber_boundary, sample_julia_base, sample_julia_skew, BaseSampler};
pub use verify::{
    bd_modulus_deviation, boundary_distance, compactness_check, verify_symmetry_numeric, Compactness,
    CompactnessReport, JuliaSamples, SymmetryRealizer, VerifyConfig, VerifyReport, EPS_FAR, EPS_NEAR,
};
