//! Exact computation in Yokonuma–Hecke algebras `Y_{d,n}(q)`, their
//! Temperley–Lieb type quotients `FTL_{d,n}(q)` and `CTL_{d,n}(q)`, their
//! irreducible representations, and explicit isomorphisms onto direct sums
//! of matrix algebras over Hecke and Temperley–Lieb algebras.

pub mod exactnum;
pub mod permgroup;
pub mod tableaux;
pub mod ykalgebra;
pub mod linalg;
pub mod reps;
pub mod isomaps;
pub mod verify;
