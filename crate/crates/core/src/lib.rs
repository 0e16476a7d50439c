pub mod checks;
pub mod cli;
pub mod closure;
pub mod error;
pub mod hilbert;
pub mod order;
pub mod pointset;
pub mod product;
pub mod props;
pub mod report;
pub mod text;
