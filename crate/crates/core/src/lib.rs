pub mod algebra;
pub mod exactlin;
pub mod groups;
pub mod hopf;
pub mod report;
pub mod doubling;
pub mod spectral;
pub mod qiso;
pub mod json;
pub mod cli;
