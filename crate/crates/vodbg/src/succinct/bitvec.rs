//! Plain bitvector with a sampled rank directory.
//!
//! All public positions are 1-based: `rank(i, b)` counts bits in positions
//! 1..=i, and `select(j, b)` returns the 1-based position of the j-th `b`.

const BLOCK_WORDS: usize = 8; // 512-bit superblocks

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
    // ones before the start of each block
    block_ones: Vec<u64>,
    total_ones: usize,
}

impl BitVec {
    pub fn from_bools(bits: &[bool]) -> Self {
        let mut words = vec![0u64; bits.len().div_ceil(64)];
        for (p, &b) in bits.iter().enumerate() {
            if b {
                words[p / 64] |= 1u64 << (p % 64);
            }
        }
        Self::from_words(words, bits.len())
    }

    /// Build from packed little-endian words; `len` bits are valid.
    pub fn from_words(mut words: Vec<u64>, len: usize) -> Self {
        assert!(words.len() >= len.div_ceil(64));
        words.truncate(len.div_ceil(64));
        // clear any tail bits past len
        if len % 64 != 0 {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (len % 64)) - 1;
            }
        }
        let n_blocks = words.len().div_ceil(BLOCK_WORDS);
        let mut block_ones = Vec::with_capacity(n_blocks + 1);
        let mut acc = 0u64;
        for (w, word) in words.iter().enumerate() {
            if w % BLOCK_WORDS == 0 {
                block_ones.push(acc);
            }
            acc += word.count_ones() as u64;
        }
        block_ones.push(acc);
        BitVec {
            words,
            len,
            block_ones,
            total_ones: acc as usize,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Bit at 1-based position `p`.
    pub fn get(&self, p: usize) -> bool {
        assert!(p >= 1 && p <= self.len, "position {p} out of range 1..={}", self.len);
        let idx = p - 1;
        self.words[idx / 64] >> (idx % 64) & 1 == 1
    }

    pub fn count(&self, bit: bool) -> usize {
        if bit {
            self.total_ones
        } else {
            self.len - self.total_ones
        }
    }

    /// Number of `bit`s among positions 1..=i. `rank(0, _) = 0`.
    pub fn rank(&self, i: usize, bit: bool) -> usize {
        assert!(i <= self.len, "rank prefix {i} exceeds length {}", self.len);
        let ones = self.rank1(i);
        if bit {
            ones
        } else {
            i - ones
        }
    }

    fn rank1(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        let last = i - 1; // 0-based index of last included position
        let word_idx = last / 64;
        let block = word_idx / BLOCK_WORDS;
        let mut acc = self.block_ones[block] as usize;
        for w in block * BLOCK_WORDS..word_idx {
            acc += self.words[w].count_ones() as usize;
        }
        let keep = last % 64 + 1;
        let mask = if keep == 64 { !0u64 } else { (1u64 << keep) - 1 };
        acc + (self.words[word_idx] & mask).count_ones() as usize
    }

    /// 1-based position of the j-th occurrence of `bit`, or `None`.
    pub fn select(&self, j: usize, bit: bool) -> Option<usize> {
        if j == 0 || j > self.count(bit) {
            return None;
        }
        // binary search for the smallest prefix with rank >= j
        let mut lo = 1;
        let mut hi = self.len;
        while lo < hi {
            let mid = (lo + hi) / 2;
            if self.rank(mid, bit) >= j {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        Some(lo)
    }

    /// Size of payload plus directory, in bits.
    pub fn size_bits(&self) -> usize {
        self.words.len() * 64 + self.block_ones.len() * 64
    }

    /// Packed payload words (little-endian bit order within each word).
    pub fn words(&self) -> &[u64] {
        &self.words
    }
}
