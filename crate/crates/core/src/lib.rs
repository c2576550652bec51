//! Exact classification of the Z-gradings of length 3 and 5 of the
//! exceptional Lie algebras G2, F4, E6, E7, E8 and the exceptional Lie
//! superalgebras D(2,1;alpha), G(3), F(4), together with an explicit
//! structure table for D(2,1;alpha) in its creation/annihilation basis.

pub mod cli;
pub mod d21a;
pub mod equivalence;
pub mod error;
pub mod golden;
pub mod grading;
pub mod linalg;
pub mod recognize;
pub mod render;
pub mod rootdata;
pub mod verify;
