pub mod affine;
pub mod cartan;
pub mod chains;
pub mod cli;
pub mod context;
pub mod error;
pub mod ktheory;
pub mod mobius;
pub mod qbg;
pub mod regularity;
pub mod verify;
pub mod weyl;
