//! Computational tools for planar self-similar sets: exact similitude
//! algebra over symbolic words, cut-set enumeration, rotation-semigroup
//! classification with recurrence-word synthesis, and rigorous covers of
//! orthogonal and radial projections.

pub mod angle;
pub mod error;
pub mod geometry;
pub mod ifs;
pub mod projection;
pub mod symbolic;
pub mod word;

pub use angle::{AngleValue, Generator};
pub use error::{Error, Result};
pub use geometry::{diameter_bracket, DiameterBounds, Point};
pub use ifs::{
    apply, compose, natural_measure, rational, sample_points, similarity_dimension, AffineMap, Ifs, Limits,
    Orientation, OrthoPart, Rational, Similitude,
};
pub use word::Word;
