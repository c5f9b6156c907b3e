//! Exact Ehrhart counting for the stable set polytope of an odd cycle
//! `C_{2s+1}`, the h-vector of its toric ring, and the checks run on it:
//! O-sequence, flawlessness, symmetry (Gorenstein) and the alternating
//! near-symmetric shape, plus the polytope facts behind the Gorenstein
//! classification (interior points, facets, reflexivity).
//!
//! Every number is exact. Counts use arbitrary-precision integers.

pub mod binomial;
pub mod counting;
pub mod cycle;
pub mod error;
pub mod hvector;
pub mod linalg;
pub mod polytope;
pub mod report;
pub mod sequence;

pub use counting::{ehrhart_table, CountMode, EhrhartCache, EhrhartTable};
pub use cycle::{CycleInstance, StableSet};
pub use error::{Error, Result};
pub use hvector::{h_vector, HVector};
pub use report::{PipelineOptions, VerdictReport};
pub use sequence::{Verdict, VerdictKind};
