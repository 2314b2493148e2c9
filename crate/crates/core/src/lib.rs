pub mod cli;
pub mod config;
pub mod error;
pub mod fractions;
pub mod ideals;
pub mod linalg;
pub mod partitions;
pub mod rational;
pub mod schurweyl;
pub mod selfcheck;
pub mod supereval;
pub mod symgroup;
