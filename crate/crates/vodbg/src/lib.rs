//! A succinct variable-order de Bruijn graph index.
//!
//! One structure represents every de Bruijn graph of order `k <= K` over a
//! read set. It is built from the colex-sorted matrix of (K+1)-tuples
//! (the BOSS representation) augmented with a wavelet tree over the
//! longest-common-suffix lengths of adjacent matrix rows, which supports
//! changing the graph order on the fly (`shorter`, `longer`, `maxlen`)
//! as well as navigation at any order.
//!
//! ```
//! use vodbg::{Alphabet, BossIndex, VarOrderIndex, NodeHandle};
//! use vodbg::boss::{extract_edges, add_dummies, sort_edges};
//!
//! let alphabet = Alphabet::dna();
//! let edges = extract_edges(&["TACGACGTCGACT"], 3, false, &alphabet).unwrap();
//! let matrix = sort_edges(add_dummies(&edges, 3), 3, &alphabet);
//! let boss = BossIndex::build(&matrix).unwrap();
//! let index = VarOrderIndex::build(boss, &matrix).unwrap();
//!
//! let v = NodeHandle::new(8, 9, 3); // the node labelled ACG
//! assert_eq!(index.boss().label(&v).unwrap(), "ACG");
//! assert_eq!(index.shorter(&v, 2).unwrap(), NodeHandle::new(8, 10, 2));
//! ```

pub mod alphabet;
pub mod boss;
pub mod error;
pub mod io;
pub mod oracle;
pub mod storage;
pub mod succinct;
pub mod varorder;

pub use alphabet::Alphabet;
pub use boss::{BossIndex, EdgeMatrix, GraphStats, NodeHandle};
pub use error::{Error, Result};
pub use oracle::OracleGraph;
pub use varorder::VarOrderIndex;
