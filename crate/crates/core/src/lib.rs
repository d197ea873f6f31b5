pub mod algebra;
pub mod budget;
pub mod checks;
pub mod classes;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod exactfield;
pub mod linalg;
pub mod opcalc;
