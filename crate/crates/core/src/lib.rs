pub mod polyhedron;
pub mod lobachevsky;
pub mod andreev;
pub mod combinatorics;
pub mod bounds;
pub mod families;
pub mod census;
