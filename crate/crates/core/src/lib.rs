#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod beamforming;
pub mod channel;
pub mod cli;
pub mod error;
pub mod experiments;
pub mod geometry;
