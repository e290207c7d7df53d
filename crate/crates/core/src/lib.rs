pub mod cli;
pub mod code;
pub mod error;
pub mod linalg;
pub mod matrix;
pub mod mpc;
pub mod oracle;
pub mod ring;
pub mod suites;
pub mod torsion;
