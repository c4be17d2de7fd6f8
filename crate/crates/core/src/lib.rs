//! Exact computations in the Brauer algebra and its action on symplectic
//! tensor space.

pub mod cli;
pub mod combinatorics;
pub mod diagrams;
pub mod exactla;
pub mod report;
pub mod suites;
pub mod symgroup;
pub mod tensor;
pub mod xbasis;
