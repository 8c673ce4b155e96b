//! Pointer-based wavelet tree over a small integer alphabet.
//!
//! Besides the usual access/rank/select, it supports the range-threshold
//! queries needed for order-changing navigation: the previous/next position
//! holding a value below a threshold, and reporting every such position in
//! a range. Public positions are 1-based.

use super::bitvec::BitVec;
use crate::error::{Error, Result};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone)]
struct Node {
    lo: u16,
    hi: u16, // symbol range [lo, hi)
    len: usize,
    bits: Option<BitVec>, // None for leaves
    left: usize,
    right: usize,
}

impl Node {
    fn mid(&self) -> u16 {
        (self.lo + self.hi) / 2
    }
}

#[derive(Debug, Clone)]
pub struct WaveletTree {
    nodes: Vec<Node>,
    root: usize,
    sigma: u16,
    len: usize,
}

impl WaveletTree {
    /// Build over `symbols`, all of which must be `< sigma`.
    pub fn new(symbols: &[u16], sigma: u16) -> Result<Self> {
        if sigma == 0 {
            return Err(Error::Construction("wavelet tree needs sigma >= 1".into()));
        }
        if let Some(&bad) = symbols.iter().find(|&&s| s >= sigma) {
            return Err(Error::Construction(format!(
                "symbol {bad} out of alphabet range 0..{sigma}"
            )));
        }
        let mut nodes = Vec::new();
        let root = build(symbols.to_vec(), 0, sigma, &mut nodes);
        Ok(WaveletTree {
            nodes,
            root,
            sigma,
            len: symbols.len(),
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn sigma(&self) -> u16 {
        self.sigma
    }

    /// Symbol at 1-based position `p`.
    pub fn access(&self, p: usize) -> u16 {
        assert!(p >= 1 && p <= self.len, "position {p} out of range");
        let mut node = &self.nodes[self.root];
        let mut p = p;
        while let Some(bits) = &node.bits {
            if bits.get(p) {
                p = bits.rank(p, true);
                node = &self.nodes[node.right];
            } else {
                p = bits.rank(p, false);
                node = &self.nodes[node.left];
            }
        }
        node.lo
    }

    /// Occurrences of `c` among positions 1..=i.
    pub fn rank(&self, i: usize, c: u16) -> usize {
        assert!(i <= self.len, "rank prefix {i} exceeds length {}", self.len);
        assert!(c < self.sigma, "symbol {c} outside alphabet");
        let mut node = &self.nodes[self.root];
        let mut i = i;
        while let Some(bits) = &node.bits {
            if i == 0 {
                return 0;
            }
            if c < node.mid() {
                i = bits.rank(i, false);
                node = &self.nodes[node.left];
            } else {
                i = bits.rank(i, true);
                node = &self.nodes[node.right];
            }
        }
        i
    }

    /// 1-based position of the j-th occurrence of `c`, or `None`.
    pub fn select(&self, j: usize, c: u16) -> Option<usize> {
        assert!(c < self.sigma, "symbol {c} outside alphabet");
        if j == 0 || j > self.rank(self.len, c) {
            return None;
        }
        let mut path = Vec::new();
        let mut idx = self.root;
        while let Some(bits) = &self.nodes[idx].bits {
            let right = c >= self.nodes[idx].mid();
            path.push((bits, right));
            idx = if right {
                self.nodes[idx].right
            } else {
                self.nodes[idx].left
            };
        }
        let mut pos = j;
        for (bits, right) in path.into_iter().rev() {
            pos = bits.select(pos, right)?;
        }
        Some(pos)
    }

    /// Positions 1..=i holding a value < k.
    pub fn rank_below(&self, i: usize, k: u16) -> usize {
        assert!(i <= self.len);
        self.rank_below_at(self.root, i, k)
    }

    fn rank_below_at(&self, idx: usize, i: usize, k: u16) -> usize {
        let node = &self.nodes[idx];
        if i == 0 || k <= node.lo {
            return 0;
        }
        if k >= node.hi {
            return i;
        }
        let bits = node.bits.as_ref().expect("internal node");
        let i0 = bits.rank(i, false);
        if k <= node.mid() {
            self.rank_below_at(node.left, i0, k)
        } else {
            i0 + self.rank_below_at(node.right, i - i0, k)
        }
    }

    /// Largest position `p <= i` with value < k, or `None`.
    pub fn prev_below(&self, i: usize, k: u16) -> Option<usize> {
        assert!(i >= 1 && i <= self.len, "position {i} out of range");
        self.prev_below_at(self.root, i, k)
    }

    fn prev_below_at(&self, idx: usize, i: usize, k: u16) -> Option<usize> {
        let node = &self.nodes[idx];
        if i == 0 || k <= node.lo {
            return None;
        }
        if k >= node.hi {
            return Some(i);
        }
        let bits = node.bits.as_ref().expect("internal node");
        let i0 = bits.rank(i, false);
        let i1 = i - i0;
        if k <= node.mid() {
            // only the left subtree can hold values < k
            self.prev_below_at(node.left, i0, k)
                .map(|p| bits.select(p, false).unwrap())
        } else {
            // everything on the left is < mid < k
            let lcand = (i0 > 0).then(|| bits.select(i0, false).unwrap());
            let rcand = self
                .prev_below_at(node.right, i1, k)
                .map(|p| bits.select(p, true).unwrap());
            match (lcand, rcand) {
                (Some(l), Some(r)) => Some(l.max(r)),
                (l, r) => l.or(r),
            }
        }
    }

    /// Smallest position `p >= j` with value < k, or `None`.
    pub fn next_below(&self, j: usize, k: u16) -> Option<usize> {
        assert!(j >= 1 && j <= self.len, "position {j} out of range");
        self.next_below_at(self.root, j, k)
    }

    fn next_below_at(&self, idx: usize, j: usize, k: u16) -> Option<usize> {
        let node = &self.nodes[idx];
        if j > node.len || k <= node.lo {
            return None;
        }
        if k >= node.hi {
            return Some(j);
        }
        let bits = node.bits.as_ref().expect("internal node");
        let zeros_before = bits.rank(j - 1, false);
        let j0 = zeros_before + 1;
        let j1 = j - zeros_before; // (j-1) - zeros_before + 1
        if k <= node.mid() {
            self.next_below_at(node.left, j0, k)
                .map(|p| bits.select(p, false).unwrap())
        } else {
            let lcand = bits.select(j0, false);
            let rcand = self
                .next_below_at(node.right, j1, k)
                .map(|p| bits.select(p, true).unwrap());
            match (lcand, rcand) {
                (Some(l), Some(r)) => Some(l.min(r)),
                (l, r) => l.or(r),
            }
        }
    }

    /// All positions in [lo, hi] holding a value < k, ascending.
    pub fn range_below(&self, lo: usize, hi: usize, k: u16) -> Vec<usize> {
        let mut out = Vec::new();
        if lo > hi || lo == 0 {
            return out;
        }
        let hi = hi.min(self.len);
        let mut cur = lo;
        while cur <= hi {
            match self.next_below(cur, k) {
                Some(p) if p <= hi => {
                    out.push(p);
                    cur = p + 1;
                }
                _ => break,
            }
        }
        out
    }

    /// Total structure size in bits (payload plus rank directories).
    pub fn size_bits(&self) -> usize {
        self.nodes
            .iter()
            .filter_map(|n| n.bits.as_ref())
            .map(|b| b.size_bits())
            .sum()
    }

    /// The input sequence, recovered symbol by symbol.
    pub fn to_symbols(&self) -> Vec<u16> {
        (1..=self.len).map(|p| self.access(p)).collect()
    }
}

fn build(symbols: Vec<u16>, lo: u16, hi: u16, nodes: &mut Vec<Node>) -> usize {
    let idx = nodes.len();
    nodes.push(Node {
        lo,
        hi,
        len: symbols.len(),
        bits: None,
        left: NONE,
        right: NONE,
    });
    if hi - lo >= 2 {
        let mid = (lo + hi) / 2;
        let bools: Vec<bool> = symbols.iter().map(|&s| s >= mid).collect();
        let (ls, rs): (Vec<u16>, Vec<u16>) = {
            let mut ls = Vec::new();
            let mut rs = Vec::new();
            for s in symbols {
                if s >= mid {
                    rs.push(s);
                } else {
                    ls.push(s);
                }
            }
            (ls, rs)
        };
        nodes[idx].bits = Some(BitVec::from_bools(&bools));
        let left = build(ls, lo, mid, nodes);
        let right = build(rs, mid, hi, nodes);
        nodes[idx].left = left;
        nodes[idx].right = right;
    }
    idx
}
