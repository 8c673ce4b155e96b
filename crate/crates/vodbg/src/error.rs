use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("invalid symbol {symbol:?} in read {read} at position {position}")]
    BadSymbol {
        symbol: char,
        read: usize,
        position: usize,
    },

    #[error("construction error: {0}")]
    Construction(String),

    #[error("invalid node handle ({i},{j},{k}): {reason}")]
    InvalidHandle {
        i: usize,
        j: usize,
        k: usize,
        reason: String,
    },

    #[error("order error: {0}")]
    Order(String),

    #[error("bad magic bytes: not an index file")]
    BadMagic,

    #[error("unsupported format version {0}")]
    BadVersion(u8),

    #[error("corrupt index file: {0}")]
    Corrupt(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
