//! Confocal quadrics and the circular cones over central conics.
//!
//! Given an ellipse or hyperbola `x^2/alpha + y^2/beta = 1`, the points in
//! space from which it looks like a circle form another conic, the *viewpoint
//! locus*. This crate computes that locus, the viewing axis and aperture at
//! every point of it, and the supporting machinery: circular and general
//! quadric cones, the confocal family `x^T A_k x = 1`, confocal coordinates,
//! and tangent cones together with their degenerate limits.
//!
//! ```
//! use confocal_core::{Conic, viewing_cone};
//!
//! let hyperbola = Conic::new(3.0, -1.0).unwrap();
//! // the top of the locus ellipse x^2/4 + z^2 = 1
//! let view = viewing_cone(&hyperbola, std::f64::consts::FRAC_PI_2, Default::default()).unwrap();
//! assert!((view.cone.aperture.to_degrees() - 30.0).abs() < 1e-9);
//! ```

pub mod cone;
pub mod confocal;
pub mod error;
pub mod linalg3;
pub mod tangent_cone;
pub mod viewpoint;

pub use cone::{
    circular_parameters, classify, cone_matrix, is_reflection_symmetry, membership_residual,
    symmetry_planes, CircularCone, ConeClass, Plane, QuadricCone, SymmetryPlanes,
};
pub use confocal::{
    Branch, ConfocalCoords, ConfocalSystem, Critical, FocalCurve, FocalKind, FocalPoint,
    Sign, SurfaceClass, VertexFlag,
};
pub use error::{GeometryError, Result};
pub use linalg3::{
    eigen_sym3, reflection_across_plane, solve_bracketed_cubic, EigenDecomp3, MonicCubic, SymMat3,
    UnitVec3, Vec3, EPS_REL,
};
pub use tangent_cone::{
    degenerate_cone_matrix, discriminant_residual, fit_cone_through_points, tangent_cone_eigensystem,
    tangent_cone_matrix, ConeFit, TangentConeEigensystem,
};
pub use viewpoint::{
    aperture_extremes, embed_conic, verify_circularity, viewing_cone, ApertureExtremes,
    CircularityReport, Conic, Embedding, MinimumAperture, ViewpointResult,
};
