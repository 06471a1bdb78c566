//! Numerics for chevron (sawtooth) layer formation in smectic-A liquid crystals
//! under strong magnetic fields.
//!
//! The crate covers the full pipeline from the model's double-well potentials to
//! sharp-interface verification:
//!
//! - [`grid`]: periodic/bounded sample grids with spectral differentiation in the
//!   periodic directions and second-order finite differences across the cell.
//! - [`potentials`]: closed-form analysis of the director double wells for both
//!   the first-order (de Gennes) and second-order (Chen-Lubensky) free energies.
//! - [`geodesics`]: the transition cost `c0` on the unit sphere under the
//!   degenerate metric `sqrt(W)`, with an independent discrete shortest-path check.
//! - [`energy`]: discrete free energies, their term-by-term breakdown, and exact
//!   variational gradients of the discretized functionals.
//! - [`dynamics`]: semi-implicit gradient-flow integrators (projection method
//!   for the director) reproducing the undulation-to-chevron transition.
//! - [`minimize1d`]: truncated-Newton minimization of the 1D profile energy.
//! - [`gamma`]: recovery-profile construction, chevron detection, and
//!   sharp-interface convergence studies.
//! - [`io`]: binary field snapshots, CSV tables, and run manifests.

pub mod dynamics;
pub mod energy;
pub mod error;
pub mod fft;
pub mod gamma;
pub mod geodesics;
pub mod grid;
pub mod interp;
pub mod io;
pub mod minimize1d;
pub mod potentials;
pub mod quad;
pub mod vec3;

pub use dynamics::{initial_condition, run_flow, FlowConfig, FlowModel, SimState};
pub use energy::{
    energy_cl_1d, energy_cl_xz, energy_degennes_2d, energy_degennes_3d,
    sharp_interface_energy_cl, sharp_interface_energy_dg, variational_gradient, EnergyBreakdown,
    GradientFields, Model, ModelParams,
};
pub use error::Error;
pub use gamma::{
    convergence_study, detect_chevron, recovery_profile_cl, recovery_profile_dg, ChevronReport,
    StudyRow,
};
pub use geodesics::{c0_quadrature, discrete_shortest_path, gamma_c, GeodesicResult};
pub use grid::{diff, helmholtz_solve, make_grid, Axis, Boundary, DirectorField, Grid, ScalarField};
pub use minimize1d::{minimize_profile, MinimizeOptions, MinimizeReport, ProfileState};
pub use potentials::{cl_well, degennes_well, phi_transform, w_cl_2d, w_cl_theta, w_degennes, CLWellSpec, WellSpec};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
