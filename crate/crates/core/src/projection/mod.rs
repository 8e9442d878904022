//! Covers of orthogonal and radial projections, density bounds, visibility
//! certificates and overlap estimates.

pub mod certificate;
pub mod cover;
pub mod density;
pub mod overlap;

pub use certificate::{distance_lower_bound, visibility_certificate, CertificateOptions, VisibilityCertificate};
pub use cover::{
    arc_halfwidth, arc_union_length, circular_distance, interval_union_length, ortho_cover, ortho_cover_length,
    radial_cover, radial_cover_lenient, smallest_enclosing_arc, union_length, ArcCover, ArcHalfwidth, ArcItem,
    IntervalCover, IntervalItem,
};
pub use density::{
    radial_measure_bounds, upper_density_estimate, CircularInterval, DensityEstimate, DensityRow, MeasureBounds,
};
pub use overlap::{overlap_upper_bound, projected_ifs, LineMap, OverlapBound};
