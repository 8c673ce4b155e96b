//! Variable-order navigation: the L* structure and the order-changing
//! operations `shorter`, `longer` and `maxlen`, plus order-generic
//! forward/backward/lastchar built by composing them with the single-order
//! operations.
//!
//! `lstar[p]` (1-based, p in 1..n_rows) is the length of the longest common
//! suffix of the sources of rows p and p+1. Boundaries of order-k nodes are
//! exactly the positions with `lstar[p] < k`; positions 0 and n_rows act as
//! sentinels that are below every threshold.

use crate::alphabet::Alphabet;
use crate::boss::{BossIndex, EdgeMatrix, GraphStats, NodeHandle};
use crate::error::{Error, Result};
use crate::succinct::WaveletTree;

#[derive(Debug, Clone)]
pub struct VarOrderIndex {
    boss: BossIndex,
    lstar: WaveletTree,
}

impl VarOrderIndex {
    /// Build L* from the matrix still in memory.
    pub fn build(boss: BossIndex, matrix: &EdgeMatrix) -> Result<Self> {
        if matrix.rows().len() != boss.n_rows() || matrix.k() != boss.k() {
            return Err(Error::Construction(
                "matrix does not match the index it was built from".into(),
            ));
        }
        let rows = matrix.rows();
        let lcs: Vec<u16> = rows
            .windows(2)
            .map(|pair| {
                pair[0]
                    .source
                    .iter()
                    .rev()
                    .zip(pair[1].source.iter().rev())
                    .take_while(|(a, b)| a == b)
                    .count() as u16
            })
            .collect();
        let lstar = WaveletTree::new(&lcs, boss.k() as u16 + 1)?;
        Self::from_parts(boss, lstar)
    }

    pub(crate) fn from_parts(boss: BossIndex, lstar: WaveletTree) -> Result<Self> {
        if lstar.len() + 1 != boss.n_rows() {
            return Err(Error::Construction(format!(
                "L* length {} does not match {} rows",
                lstar.len(),
                boss.n_rows()
            )));
        }
        Ok(VarOrderIndex { boss, lstar })
    }

    pub fn boss(&self) -> &BossIndex {
        &self.boss
    }

    pub fn lstar(&self) -> &WaveletTree {
        &self.lstar
    }

    pub fn k(&self) -> usize {
        self.boss.k()
    }

    pub fn n_rows(&self) -> usize {
        self.boss.n_rows()
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.boss.alphabet()
    }

    /// True iff (i, j) is exactly the maximal run of rows sharing a
    /// length-k source suffix.
    pub fn validate_handle(&self, v: &NodeHandle) -> bool {
        let n = self.n_rows();
        if v.i < 1 || v.i > v.j || v.j > n || v.k > self.k() {
            return false;
        }
        let k = v.k as u16;
        let left_ok = v.i == 1 || self.lstar.access(v.i - 1) < k;
        let right_ok = v.j == n || self.lstar.access(v.j) < k;
        if !(left_ok && right_ok) {
            return false;
        }
        // no interior boundary
        v.i > v.j - 1
            || self.lstar.rank_below(v.j - 1, k) == self.lstar.rank_below(v.i - 1, k)
    }

    fn check_handle(&self, v: &NodeHandle) -> Result<()> {
        if self.validate_handle(v) {
            Ok(())
        } else {
            Err(Error::InvalidHandle {
                i: v.i,
                j: v.j,
                k: v.k,
                reason: "not a maximal order-k node interval".into(),
            })
        }
    }

    /// The order-k node whose label is the last k characters of v's label.
    pub fn shorter(&self, v: &NodeHandle, k: usize) -> Result<NodeHandle> {
        self.check_handle(v)?;
        if k > v.k {
            return Err(Error::Order(format!(
                "shorter target order {k} exceeds node order {}",
                v.k
            )));
        }
        let kk = k as u16;
        let i = if v.i == 1 {
            1
        } else {
            match self.lstar.prev_below(v.i - 1, kk) {
                Some(p) => p + 1,
                None => 1,
            }
        };
        let j = if v.j == self.n_rows() {
            v.j
        } else {
            match self.lstar.next_below(v.j, kk) {
                Some(p) => p,
                None => self.n_rows(),
            }
        };
        Ok(NodeHandle::new(i, j, k))
    }

    /// All order-k nodes whose labels end with v's label, ascending.
    pub fn longer(&self, v: &NodeHandle, k: usize) -> Result<Vec<NodeHandle>> {
        self.check_handle(v)?;
        if k < v.k || k > self.k() {
            return Err(Error::Order(format!(
                "longer target order {k} outside [{}, {}]",
                v.k,
                self.k()
            )));
        }
        let mut out = Vec::new();
        let mut start = v.i;
        if v.i < v.j {
            for b in self.lstar.range_below(v.i, v.j - 1, k as u16) {
                out.push(NodeHandle::new(start, b, k));
                start = b + 1;
            }
        }
        out.push(NodeHandle::new(start, v.j, k));
        Ok(out)
    }

    /// Some order-K node whose label ends with v's label and has an
    /// outgoing edge labelled `a`; `None` for the symbol if any row will do.
    /// Ties go to the smallest qualifying row.
    pub fn maxlen(&self, v: &NodeHandle, a: Option<u8>) -> Result<Option<NodeHandle>> {
        self.check_handle(v)?;
        match a {
            None => Ok(Some(self.boss.node_from_row(v.i))),
            Some(ch) => {
                let rank = self.alphabet().rank(ch).ok_or_else(|| {
                    Error::Input(format!("symbol {:?} not in alphabet", ch as char))
                })? as u16;
                let before = self.boss.w().rank(v.i - 1, rank);
                if self.boss.w().rank(v.j, rank) == before {
                    return Ok(None);
                }
                let r = self.boss.w().select(before + 1, rank).unwrap();
                Ok(Some(self.boss.node_from_row(r)))
            }
        }
    }

    /// Order-preserving edge traversal at any order 1..=K.
    pub fn forward(&self, v: &NodeHandle, a: u8) -> Result<Option<NodeHandle>> {
        if v.k == self.k() {
            // boss::forward validates order-K handles itself
            return self.boss.forward(v, a);
        }
        self.check_handle(v)?;
        if v.k == 0 {
            return Err(Error::Order(
                "forward is undefined on the order-0 node".into(),
            ));
        }
        let Some(m) = self.maxlen(v, Some(a))? else {
            return Ok(None);
        };
        match self.boss.forward(&m, a)? {
            Some(w) => Ok(Some(self.shorter(&w, v.k)?)),
            None => Ok(None),
        }
    }

    /// All order-k predecessors of v, deduplicated and ascending.
    pub fn backward(&self, v: &NodeHandle) -> Result<Vec<NodeHandle>> {
        self.check_handle(v)?;
        if v.k == self.k() {
            return self.boss.backward(v);
        }
        let mut out = Vec::new();
        for up in self.longer(v, v.k + 1)? {
            let m = self.maxlen(&up, None)?.expect("maxlen(*, None) is total");
            // every element of backward(m) shortens to the same order-k
            // node, so one representative suffices
            if let Some(first) = self.boss.backward_first(&m) {
                out.push(self.shorter(&first, v.k)?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Last symbol of v's label (ASCII, possibly `$`); None at order 0.
    pub fn lastchar(&self, v: &NodeHandle) -> Result<Option<u8>> {
        self.check_handle(v)?;
        if v.k == 0 {
            return Ok(None);
        }
        let m = self.maxlen(v, None)?.expect("maxlen(*, None) is total");
        Ok(Some(self.boss.lastchar(&m)?))
    }

    /// The length-k label of v, `$`-padded for dummy nodes.
    pub fn label(&self, v: &NodeHandle) -> Result<String> {
        self.check_handle(v)?;
        let m = self.maxlen(v, None)?.expect("maxlen(*, None) is total");
        let full = self.boss.label(&m)?;
        Ok(full[full.len() - v.k..].to_string())
    }

    /// All order-k nodes, ascending by interval.
    pub fn nodes_at_order(&self, k: usize) -> Result<Vec<NodeHandle>> {
        if k > self.k() {
            return Err(Error::Order(format!(
                "order {k} exceeds maximum {}",
                self.k()
            )));
        }
        let root = NodeHandle::new(1, self.n_rows(), 0);
        self.longer(&root, k)
    }

    pub fn stats(&self) -> GraphStats {
        let mut s = self.boss.stats();
        s.lstar_bits = self.lstar.size_bits();
        s
    }
}
