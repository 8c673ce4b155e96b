//! Rank/select bitvectors and wavelet trees.

mod bitvec;
mod wavelet;

pub use bitvec::BitVec;
pub use wavelet::WaveletTree;
