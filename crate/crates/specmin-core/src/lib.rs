//! Search, certification and independent verification of the connected
//! graphs of minimum spectral radius for a given order and independence
//! number.

pub mod graphs;
pub mod kernels;
pub mod main_trees;
pub mod minimizer;
pub mod oracle;
pub mod spectral;
pub mod tables;
