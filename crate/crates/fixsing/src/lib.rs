//! Singular integral equations on `(0,1)` whose kernel has a moving Cauchy
//! singularity and two fixed singularities at the endpoints,
//!
//! `∫₀¹ [ (1/2)cot(π(ξ-x)/2) + (β/2)cot(π(ξ+x)/2) + K(x,ξ) ] φ(ξ) dξ = C - F(x)`.
//!
//! * [`regimes`]: classification of β and closed-form inverses of the dominant operator.
//! * [`spectral`]: the basis that the dominant operator maps onto shifted cosines.
//! * [`complete`]: Galerkin solver for the complete equation.
//! * [`kernels`]: antiplane and plane-strain crack kernels.
//! * [`cauchy`]: the classical Cauchy-kernel equation, used for β = 0.
//! * [`oracle`]: brute-force operator application and residuals.
//!
//! ```
//! use fixsing::{build_basis, characteristic_series_solve, Load, LoadKind};
//!
//! let basis = build_basis(0.5, 20).unwrap();
//! let f = Load::new(LoadKind::Uniform, 1.0).cosine_coeffs(400);
//! let sol = characteristic_series_solve(&basis, &f, 20).unwrap();
//! assert!((sol.evaluate(0.5) - 0.4415).abs() < 1e-3);
//! assert!((sol.constant_c - 0.5).abs() < 1e-10);
//! ```

pub mod cauchy;
pub mod cli;
pub mod complete;
pub mod error;
pub mod kernels;
pub mod load;
pub mod oracle;
mod pv;
pub mod quad;
pub mod regimes;
pub mod specfun;
pub mod spectral;
pub mod verify;

pub use cauchy::{cauchy_frame_kernel, cauchy_inverse, cauchy_solve, CauchySolution};
pub use complete::{solve, KernelSpec, SingularZone, Solution, SolveConfig, Truncation};
pub use error::{Error, Result};
pub use kernels::{
    antiplane_kernel, gamma0_root, lambda_fn, plane_strain_coeffs, plane_strain_kernel,
    AntiplaneParams, PlaneStrainParams,
};
pub use load::{Load, LoadKind};
pub use oracle::{apply_k, apply_s, full_residual, Profile, PvRule, PvScheme};
pub use regimes::{
    classify, endpoint_asymptotics, inverse_characteristic, Branch, Regime, RegimeKind,
};
pub use spectral::{build_basis, characteristic_series_solve, SeriesSolution, SpectralBasis};
