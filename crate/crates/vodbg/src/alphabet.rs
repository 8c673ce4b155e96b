use crate::error::{Error, Result};

/// Terminator character, always the smallest symbol. Never part of the
/// user-facing alphabet; it only appears in dummy edges.
pub const DOLLAR: u8 = b'$';

/// An ordered alphabet. Internally every symbol is handled as a small
/// integer rank, with rank 0 reserved for `$`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    chars: Vec<u8>,
    rank_of: [u8; 256], // 0 = not in alphabet (and $ maps to 0 on purpose)
}

impl Alphabet {
    /// Alphabet from its symbols in increasing order. `$` must not be listed.
    pub fn new(chars: &[u8]) -> Result<Self> {
        if chars.is_empty() {
            return Err(Error::Input("alphabet must not be empty".into()));
        }
        if chars.len() > 254 {
            return Err(Error::Input("alphabet too large".into()));
        }
        let mut rank_of = [0u8; 256];
        for (idx, &ch) in chars.iter().enumerate() {
            if ch == DOLLAR {
                return Err(Error::Input("'$' is reserved".into()));
            }
            if rank_of[ch as usize] != 0 {
                return Err(Error::Input(format!(
                    "duplicate symbol {:?} in alphabet",
                    ch as char
                )));
            }
            rank_of[ch as usize] = (idx + 1) as u8;
        }
        Ok(Alphabet {
            chars: chars.to_vec(),
            rank_of,
        })
    }

    /// The default DNA alphabet A < C < G < T.
    pub fn dna() -> Self {
        Alphabet::new(b"ACGT").unwrap()
    }

    /// Number of symbols, excluding `$`.
    pub fn sigma(&self) -> usize {
        self.chars.len()
    }

    /// Rank of a character: `$` is 0, alphabet symbols are 1..=sigma.
    pub fn rank(&self, ch: u8) -> Option<u8> {
        if ch == DOLLAR {
            return Some(0);
        }
        match self.rank_of[ch as usize] {
            0 => None,
            r => Some(r),
        }
    }

    /// Character for a rank; rank 0 is `$`.
    pub fn char_of(&self, rank: u8) -> u8 {
        if rank == 0 {
            DOLLAR
        } else {
            self.chars[rank as usize - 1]
        }
    }

    /// Symbols in rank order, excluding `$`.
    pub fn symbols(&self) -> &[u8] {
        &self.chars
    }

    /// Encode an ASCII string to ranks. Positions are reported 1-based.
    pub fn encode(&self, s: &[u8], read_idx: usize) -> Result<Vec<u8>> {
        s.iter()
            .enumerate()
            .map(|(p, &ch)| {
                if ch == DOLLAR {
                    return Err(Error::BadSymbol {
                        symbol: '$',
                        read: read_idx,
                        position: p + 1,
                    });
                }
                self.rank(ch).ok_or(Error::BadSymbol {
                    symbol: ch as char,
                    read: read_idx,
                    position: p + 1,
                })
            })
            .collect()
    }

    /// Decode ranks back to an ASCII string.
    pub fn decode(&self, ranks: &[u8]) -> String {
        ranks.iter().map(|&r| self.char_of(r) as char).collect()
    }

    /// DNA complement of a rank, if this alphabet supports it.
    pub fn complement(&self, rank: u8) -> Option<u8> {
        if self.chars != b"ACGT" {
            return None;
        }
        // A<->T, C<->G in rank space: 1<->4, 2<->3
        match rank {
            1..=4 => Some(5 - rank),
            _ => None,
        }
    }

    /// True when reverse complements are meaningful (DNA alphabet).
    pub fn supports_revcomp(&self) -> bool {
        self.chars == b"ACGT"
    }
}
