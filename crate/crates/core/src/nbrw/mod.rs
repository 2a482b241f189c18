//! Random walks on finite `d`-out-regular digraphs.
//!
//! The walk operator `T` splits the mass at each vertex equally over its
//! out-edges. On the non-backtracking lift of a regular graph, and on any
//! digraph that is also `d`-in-regular, the uniform law is stationary and
//! the total variation distance to it is non-increasing along the walk.

pub mod distance;
pub mod graph;
pub mod report;
pub mod spectrum;
pub mod walk;

pub use distance::{almost_diameter, covering_exponents, diameter, distance_summary, Covering, DistanceSummary};
pub use graph::{cayley_digraph, cayley_generators, nonbacktracking_lift, Digraph, SymmetryHint, UndirectedGraph};
pub use report::{walk_report, WalkReport};
pub use spectrum::{
    density_check, nb_lift_spectrum, power_norm_profile, spectrum, BaseSpectrum, DensityVerdict, SpectrumReport,
};
pub use walk::{collision_free_check, lower_bound, mixing_time, tv_to_uniform, walk_distribution, Dist, MixingOptions};
