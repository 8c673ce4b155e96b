//! BOSS matrix construction and single-order navigation.
//!
//! The matrix holds the (K+1)-tuples (source K-mer plus edge label),
//! dummy-closed and sorted colexicographically by source with ties broken
//! by the edge label. The index over it is a wavelet tree over the label
//! column W, a node-boundary bitvector L, an edge-flag bitvector, and the
//! cumulative symbol counts C.

use std::collections::{BTreeSet, HashSet};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::succinct::{BitVec, WaveletTree};

/// One matrix row: a source K-mer and its outgoing edge label, both in
/// rank encoding (0 = `$`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Row {
    pub source: Vec<u8>,
    pub label: u8,
}

/// The sorted, dummy-closed list of (K+1)-tuples.
#[derive(Debug, Clone)]
pub struct EdgeMatrix {
    rows: Vec<Row>,
    k: usize,
    alphabet: Alphabet,
}

impl EdgeMatrix {
    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Row source as an ASCII string (for tests and debugging).
    pub fn source_str(&self, idx: usize) -> String {
        self.alphabet.decode(&self.rows[idx].source)
    }

    pub fn label_char(&self, idx: usize) -> u8 {
        self.alphabet.char_of(self.rows[idx].label)
    }
}

/// A node of the order-`k` graph: the maximal row interval [i, j]
/// (1-based, inclusive) whose sources share a length-`k` suffix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeHandle {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl NodeHandle {
    pub fn new(i: usize, j: usize, k: usize) -> Self {
        NodeHandle { i, j, k }
    }
}

impl std::fmt::Display for NodeHandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{},{}", self.i, self.j, self.k)
    }
}

/// Extract the set of distinct (K+1)-mers from reads, optionally adding
/// reverse complements. Reads shorter than K+1 contribute nothing.
pub fn extract_edges(
    reads: &[impl AsRef<[u8]>],
    k: usize,
    revcomp: bool,
    alphabet: &Alphabet,
) -> Result<BTreeSet<Vec<u8>>> {
    if k < 1 {
        return Err(Error::Input("order K must be at least 1".into()));
    }
    if reads.is_empty() {
        return Err(Error::Input("no reads given".into()));
    }
    if revcomp && !alphabet.supports_revcomp() {
        return Err(Error::Input(
            "reverse complements are only defined for the DNA alphabet".into(),
        ));
    }
    let mut edges = BTreeSet::new();
    for (idx, read) in reads.iter().enumerate() {
        let encoded = alphabet.encode(read.as_ref(), idx + 1)?;
        if encoded.len() < k + 1 {
            continue;
        }
        for win in encoded.windows(k + 1) {
            edges.insert(win.to_vec());
            if revcomp {
                let rc: Vec<u8> = win
                    .iter()
                    .rev()
                    .map(|&r| alphabet.complement(r).unwrap())
                    .collect();
                edges.insert(rc);
            }
        }
    }
    Ok(edges)
}

/// Close an edge set under the dummy rules and emit the matrix rows,
/// unsorted and deduplicated.
///
/// A source K-mer needs an incoming tuple from a distinct source; if none
/// exists, the whole `$`-padded chain down from `$^K` is added. A `$`-free
/// target with no outgoing tuple gets a `(target, $)` row.
pub fn add_dummies(edges: &BTreeSet<Vec<u8>>, k: usize) -> Vec<Row> {
    let mut rows: BTreeSet<Row> = BTreeSet::new();
    let mut sources: HashSet<&[u8]> = HashSet::new();
    let mut incoming: HashSet<&[u8]> = HashSet::new(); // targets reached from a distinct source
    for e in edges {
        rows.insert(Row {
            source: e[..k].to_vec(),
            label: e[k],
        });
        sources.insert(&e[..k]);
        if e[..k] != e[1..] {
            incoming.insert(&e[1..]);
        }
    }
    let needs_chain: BTreeSet<Vec<u8>> = sources
        .iter()
        .filter(|s| !incoming.contains(**s))
        .map(|s| s.to_vec())
        .collect();
    for alpha in &needs_chain {
        // tuples $^(K+1-i) alpha[..i] for i = 1..=K
        for i in 1..=k {
            let mut tuple = vec![0u8; k + 1 - i];
            tuple.extend_from_slice(&alpha[..i]);
            rows.insert(Row {
                source: tuple[..k].to_vec(),
                label: tuple[k],
            });
        }
    }
    for e in edges {
        let target = &e[1..];
        if !sources.contains(target) {
            rows.insert(Row {
                source: target.to_vec(),
                label: 0,
            });
        }
    }
    rows.into_iter().collect()
}

/// Right-to-left comparison of sources, ties broken by the edge label.
pub fn colex_cmp(a: &Row, b: &Row) -> std::cmp::Ordering {
    a.source
        .iter()
        .rev()
        .cmp(b.source.iter().rev())
        .then(a.label.cmp(&b.label))
}

/// Sort deduplicated rows into the matrix order with an LSD radix sort.
pub fn sort_edges(rows: Vec<Row>, k: usize, alphabet: &Alphabet) -> EdgeMatrix {
    let buckets = alphabet.sigma() + 1;
    let mut rows = rows;
    let mut scratch: Vec<Row> = Vec::with_capacity(rows.len());
    // least significant key first: label, then source[0], ..., source[k-1]
    for pass in 0..=k {
        let key = |r: &Row| -> usize {
            if pass == 0 {
                r.label as usize
            } else {
                r.source[pass - 1] as usize
            }
        };
        let mut counts = vec![0usize; buckets + 1];
        for r in &rows {
            counts[key(r) + 1] += 1;
        }
        for b in 0..buckets {
            counts[b + 1] += counts[b];
        }
        scratch.clear();
        scratch.resize(
            rows.len(),
            Row {
                source: Vec::new(),
                label: 0,
            },
        );
        for r in rows.drain(..) {
            let b = key(&r);
            scratch[counts[b]] = r;
            counts[b] += 1;
        }
        std::mem::swap(&mut rows, &mut scratch);
    }
    EdgeMatrix {
        rows,
        k,
        alphabet: alphabet.clone(),
    }
}

/// Per-component bit sizes and counts of a built index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub n_rows: usize,
    pub n_nodes: usize,
    pub k: usize,
    pub w_bits: usize,
    pub l_bits: usize,
    pub flags_bits: usize,
    pub c_bits: usize,
    pub lstar_bits: usize,
}

impl GraphStats {
    /// Size of the single-order structure alone.
    pub fn boss_bits(&self) -> usize {
        self.w_bits + self.l_bits + self.flags_bits + self.c_bits
    }

    pub fn total_bits(&self) -> usize {
        self.boss_bits() + self.lstar_bits
    }
}

/// The succinct single-order index.
#[derive(Debug, Clone)]
pub struct BossIndex {
    w: WaveletTree,
    flags: BitVec,
    flagged_w: WaveletTree, // labels at flagged positions, in row order
    l: BitVec,
    c: Vec<usize>, // c[r] = rows whose source ends with a rank < r; len sigma+2
    k: usize,
    alphabet: Alphabet,
}

impl BossIndex {
    /// Build from a sorted, dummy-closed matrix.
    pub fn build(matrix: &EdgeMatrix) -> Result<Self> {
        let rows = matrix.rows();
        let k = matrix.k();
        if rows.is_empty() {
            return Err(Error::Construction("empty edge matrix".into()));
        }
        for pair in rows.windows(2) {
            match colex_cmp(&pair[0], &pair[1]) {
                std::cmp::Ordering::Less => {}
                std::cmp::Ordering::Equal => {
                    return Err(Error::Construction("duplicate matrix rows".into()))
                }
                std::cmp::Ordering::Greater => {
                    return Err(Error::Construction("matrix rows not in colex order".into()))
                }
            }
        }
        // closure checks: every non-root source has an incoming tuple, and
        // every non-$ edge's target K-mer is some row's source
        let sources: HashSet<&[u8]> = rows.iter().map(|r| r.source.as_slice()).collect();
        let mut targets: HashSet<Vec<u8>> = HashSet::new();
        for r in rows {
            let mut t = r.source[1..].to_vec();
            t.push(r.label);
            targets.insert(t);
        }
        for r in rows {
            if r.source.iter().any(|&c| c != 0) && !targets.contains(&r.source) {
                return Err(Error::Construction(format!(
                    "source {} has no incoming tuple; matrix not dummy-closed",
                    matrix.alphabet().decode(&r.source)
                )));
            }
            if r.label != 0 {
                let mut t = r.source[1..].to_vec();
                t.push(r.label);
                if !sources.contains(t.as_slice()) {
                    return Err(Error::Construction(format!(
                        "edge target {} is not a source; matrix not dummy-closed",
                        matrix.alphabet().decode(&t)
                    )));
                }
            }
        }

        let n = rows.len();
        let sigma = matrix.alphabet().sigma();
        let w_syms: Vec<u16> = rows.iter().map(|r| r.label as u16).collect();

        let mut l_bits = vec![false; n];
        for idx in 0..n {
            l_bits[idx] = idx + 1 == n || rows[idx].source != rows[idx + 1].source;
        }

        // flag a row when an earlier row in the same (K-1)-suffix group
        // already carries the same non-$ label
        let mut flag_bits = vec![false; n];
        let mut seen: HashSet<u8> = HashSet::new();
        for idx in 0..n {
            if idx > 0 && rows[idx].source[1..] != rows[idx - 1].source[1..] {
                seen.clear();
            }
            if rows[idx].label != 0 {
                flag_bits[idx] = !seen.insert(rows[idx].label);
            }
        }
        let flagged_syms: Vec<u16> = (0..n)
            .filter(|&idx| flag_bits[idx])
            .map(|idx| rows[idx].label as u16)
            .collect();

        let mut c = vec![0usize; sigma + 2];
        for r in rows {
            let last = *r.source.last().unwrap() as usize;
            c[last + 1] += 1;
        }
        for s in 0..=sigma {
            c[s + 1] += c[s];
        }

        Ok(BossIndex {
            w: WaveletTree::new(&w_syms, sigma as u16 + 1)?,
            flags: BitVec::from_bools(&flag_bits),
            flagged_w: WaveletTree::new(&flagged_syms, sigma as u16 + 1)?,
            l: BitVec::from_bools(&l_bits),
            c,
            k,
            alphabet: matrix.alphabet().clone(),
        })
    }

    pub fn n_rows(&self) -> usize {
        self.l.len()
    }

    pub fn n_nodes(&self) -> usize {
        self.l.count(true)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn w(&self) -> &WaveletTree {
        &self.w
    }

    pub fn flags(&self) -> &BitVec {
        &self.flags
    }

    pub fn l(&self) -> &BitVec {
        &self.l
    }

    pub fn c(&self) -> &[usize] {
        &self.c
    }

    pub(crate) fn from_parts(
        w: WaveletTree,
        flags: BitVec,
        l: BitVec,
        c: Vec<usize>,
        k: usize,
        alphabet: Alphabet,
    ) -> Result<Self> {
        let flagged_syms: Vec<u16> = (1..=w.len()).filter(|&p| flags.get(p)).map(|p| w.access(p)).collect();
        let flagged_w = WaveletTree::new(&flagged_syms, w.sigma())?;
        Ok(BossIndex {
            w,
            flags,
            flagged_w,
            l,
            c,
            k,
            alphabet,
        })
    }

    /// The maximal-order node whose interval contains row `r` (1-based).
    pub fn node_from_row(&self, r: usize) -> NodeHandle {
        assert!(r >= 1 && r <= self.n_rows(), "row {r} out of range");
        let ones_before = self.l.rank(r - 1, true);
        let i = if ones_before == 0 {
            1
        } else {
            self.l.select(ones_before, true).unwrap() + 1
        };
        let j = self.l.select(ones_before + 1, true).unwrap();
        NodeHandle::new(i, j, self.k)
    }

    fn check_order_k_handle(&self, v: &NodeHandle) -> Result<()> {
        let n = self.n_rows();
        let ok = v.k == self.k
            && v.i >= 1
            && v.i <= v.j
            && v.j <= n
            && self.l.get(v.j)
            && (v.i == 1 || self.l.get(v.i - 1))
            && self.l.rank(v.j, true) - self.l.rank(v.i - 1, true) == 1;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidHandle {
                i: v.i,
                j: v.j,
                k: v.k,
                reason: "not a maximal order-K node interval".into(),
            })
        }
    }

    /// Unflagged occurrences of label rank `a` among rows 1..=r.
    fn unflagged_rank(&self, r: usize, a: u8) -> usize {
        self.w.rank(r, a as u16) - self.flagged_w.rank(self.flags.rank(r, true), a as u16)
    }

    /// Row of the j-th unflagged occurrence of label rank `a`.
    fn unflagged_select(&self, j: usize, a: u8) -> Option<usize> {
        if j == 0 || j > self.unflagged_rank(self.n_rows(), a) {
            return None;
        }
        let mut lo = 1;
        let mut hi = self.n_rows();
        while lo < hi {
            let mid = (lo + hi) / 2;
            if self.unflagged_rank(mid, a) >= j {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        Some(lo)
    }

    /// Node whose first row is the t-th node interval (1-based node ordinal).
    pub(crate) fn node_by_ordinal(&self, t: usize) -> NodeHandle {
        let j = self.l.select(t, true).unwrap();
        let i = if t == 1 {
            1
        } else {
            self.l.select(t - 1, true).unwrap() + 1
        };
        NodeHandle::new(i, j, self.k)
    }

    /// Follow the edge labelled `a` (ASCII) out of order-K node `v`.
    pub fn forward(&self, v: &NodeHandle, a: u8) -> Result<Option<NodeHandle>> {
        self.check_order_k_handle(v)?;
        let rank = self
            .alphabet
            .rank(a)
            .ok_or_else(|| Error::Input(format!("symbol {:?} not in alphabet", a as char)))?;
        if rank == 0 {
            return Ok(None); // dummy edges are not traversable
        }
        Ok(self.forward_rank(v, rank))
    }

    pub(crate) fn forward_rank(&self, v: &NodeHandle, rank: u8) -> Option<NodeHandle> {
        let c = rank as u16;
        let before = self.w.rank(v.i - 1, c);
        if self.w.rank(v.j, c) == before {
            return None;
        }
        let r = self.w.select(before + 1, c).unwrap();
        let cnt = self.unflagged_rank(r, rank);
        let t = self.l.rank(self.c[rank as usize], true) + cnt;
        Some(self.node_by_ordinal(t))
    }

    /// Row of the representative (unflagged) edge into `v`, if any.
    fn backward_first_row(&self, v: &NodeHandle) -> Option<usize> {
        let c = self.lastchar_rank(v);
        if c == 0 {
            return None; // root dummy
        }
        let node_idx = self.l.rank(v.j, true);
        let cnt = node_idx - self.l.rank(self.c[c as usize], true);
        self.unflagged_select(cnt, c)
    }

    /// The representative predecessor of `v`, if any; cheaper than
    /// `backward` when one predecessor is enough.
    pub(crate) fn backward_first(&self, v: &NodeHandle) -> Option<NodeHandle> {
        self.backward_first_row(v).map(|p| self.node_from_row(p))
    }

    /// All order-K predecessors of `v`, ascending by interval.
    pub fn backward(&self, v: &NodeHandle) -> Result<Vec<NodeHandle>> {
        self.check_order_k_handle(v)?;
        let c = self.lastchar_rank(v);
        let mut out = Vec::new();
        let Some(p) = self.backward_first_row(v) else {
            return Ok(out);
        };
        out.push(self.node_from_row(p));
        // flagged duplicates of the same (label, target) pair follow the
        // representative before the next unflagged occurrence
        let mut r = p;
        loop {
            match self.w.select(self.w.rank(r, c as u16) + 1, c as u16) {
                Some(q) if self.flags.get(q) => {
                    out.push(self.node_from_row(q));
                    r = q;
                }
                _ => break,
            }
        }
        Ok(out)
    }

    pub(crate) fn lastchar_rank(&self, v: &NodeHandle) -> u8 {
        let sigma = self.alphabet.sigma();
        let mut c = 0u8;
        for s in (0..=sigma).rev() {
            if self.c[s] < v.i {
                c = s as u8;
                break;
            }
        }
        c
    }

    /// Last character (ASCII, possibly `$`) of an order-K node's label.
    pub fn lastchar(&self, v: &NodeHandle) -> Result<u8> {
        self.check_order_k_handle(v)?;
        Ok(self.alphabet.char_of(self.lastchar_rank(v)))
    }

    /// Full K-character label of an order-K node, `$`-padded for dummies.
    pub fn label(&self, v: &NodeHandle) -> Result<String> {
        self.check_order_k_handle(v)?;
        let mut chars = Vec::with_capacity(self.k);
        let mut u = *v;
        for step in 0..self.k {
            chars.push(self.lastchar_rank(&u));
            if step + 1 < self.k {
                match self.backward_first(&u) {
                    Some(p) => u = p,
                    None => break, // remaining characters are all $
                }
            }
        }
        while chars.len() < self.k {
            chars.push(0);
        }
        chars.reverse();
        Ok(self.alphabet.decode(&chars))
    }

    pub fn stats(&self) -> GraphStats {
        GraphStats {
            n_rows: self.n_rows(),
            n_nodes: self.n_nodes(),
            k: self.k,
            w_bits: self.w.size_bits() + self.flagged_w.size_bits(),
            l_bits: self.l.size_bits(),
            flags_bits: self.flags.size_bits(),
            c_bits: self.c.len() * 64,
            lstar_bits: 0,
        }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub const EXAMPLE_QUADRUPLES: [&str; 9] = [
        "CGAC", "GACG", "GACT", "TACG", "GTCG", "ACGA", "ACGT", "TCGA", "CGTC",
    ];

    pub fn example_matrix() -> EdgeMatrix {
        let alphabet = Alphabet::dna();
        let edges: BTreeSet<Vec<u8>> = EXAMPLE_QUADRUPLES
            .iter()
            .map(|q| alphabet.encode(q.as_bytes(), 0).unwrap())
            .collect();
        let rows = add_dummies(&edges, 3);
        sort_edges(rows, 3, &alphabet)
    }

    pub fn example_index() -> BossIndex {
        BossIndex::build(&example_matrix()).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn dna() -> Alphabet {
        Alphabet::dna()
    }

    #[test]
    fn extract_edges_sliding_window() {
        let edges = extract_edges(&["CGACGT"], 3, false, &dna()).unwrap();
        let expect: BTreeSet<Vec<u8>> = ["CGAC", "GACG", "ACGT"]
            .iter()
            .map(|s| dna().encode(s.as_bytes(), 0).unwrap())
            .collect();
        assert_eq!(edges, expect);
    }

    #[test]
    fn extract_edges_short_read_contributes_nothing() {
        let edges = extract_edges(&["AC", "CGACG"], 3, false, &dna()).unwrap();
        assert_eq!(edges.len(), 2); // CGAC, GACG only
    }

    #[test]
    fn extract_edges_palindromic_revcomp() {
        let edges = extract_edges(&["ACGT"], 3, true, &dna()).unwrap();
        assert_eq!(edges.len(), 1); // ACGT is its own reverse complement
    }

    #[test]
    fn extract_edges_rejects_bad_symbol() {
        let err = extract_edges(&["ACGX"], 2, false, &dna()).unwrap_err();
        assert!(matches!(err, Error::BadSymbol { read: 1, position: 4, .. }));
    }

    #[test]
    fn add_dummies_example() {
        let m = example_matrix();
        assert_eq!(m.rows().len(), 13);
        let have: BTreeSet<(String, char)> = (0..13)
            .map(|i| (m.source_str(i), m.label_char(i) as char))
            .collect();
        for (s, c) in [("$$$", 'T'), ("$$T", 'A'), ("$TA", 'C'), ("ACT", '$')] {
            assert!(have.contains(&(s.to_string(), c)), "missing dummy {s},{c}");
        }
    }

    #[test]
    fn add_dummies_self_loop_needs_chain() {
        let a = dna();
        let edges: BTreeSet<Vec<u8>> = [a.encode(b"AAAA", 0).unwrap()].into_iter().collect();
        let rows = add_dummies(&edges, 3);
        let m = sort_edges(rows, 3, &a);
        let got: Vec<(String, char)> = (0..m.rows().len())
            .map(|i| (m.source_str(i), m.label_char(i) as char))
            .collect();
        assert_eq!(
            got,
            vec![
                ("$$$".into(), 'A'),
                ("$$A".into(), 'A'),
                ("$AA".into(), 'A'),
                ("AAA".into(), 'A'),
            ]
        );
    }

    #[test]
    fn add_dummies_single_path() {
        let a = dna();
        let edges: BTreeSet<Vec<u8>> = [a.encode(b"ACGT", 0).unwrap()].into_iter().collect();
        let rows = add_dummies(&edges, 3);
        let m = sort_edges(rows, 3, &a);
        let got: BTreeSet<(String, char)> = (0..m.rows().len())
            .map(|i| (m.source_str(i), m.label_char(i) as char))
            .collect();
        let expect: BTreeSet<(String, char)> = [
            ("$$$", 'A'),
            ("$$A", 'C'),
            ("$AC", 'G'),
            ("ACG", 'T'),
            ("CGT", '$'),
        ]
        .iter()
        .map(|(s, c)| (s.to_string(), *c))
        .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn sort_order_matches_example() {
        let m = example_matrix();
        let sources: Vec<String> = (0..13).map(|i| m.source_str(i)).collect();
        assert_eq!(
            sources,
            vec![
                "$$$", "CGA", "$TA", "GAC", "GAC", "TAC", "GTC", "ACG", "ACG", "TCG", "$$T",
                "ACT", "CGT"
            ]
        );
        let labels: String = (0..13).map(|i| m.label_char(i) as char).collect();
        assert_eq!(labels, "TCCGTGGATAA$C");
    }

    #[test]
    fn sort_ties_broken_by_label() {
        let a = dna();
        let rows = vec![
            Row {
                source: a.encode(b"GAC", 0).unwrap(),
                label: 4,
            },
            Row {
                source: a.encode(b"GAC", 0).unwrap(),
                label: 3,
            },
        ];
        let m = sort_edges(rows, 3, &a);
        assert_eq!(m.label_char(0), b'G');
        assert_eq!(m.label_char(1), b'T');
    }

    #[test]
    fn build_example_w_and_l() {
        let idx = example_index();
        let w: String = (1..=13)
            .map(|p| idx.alphabet().char_of(idx.w().access(p) as u8) as char)
            .collect();
        assert_eq!(w, "TCCGTGGATAA$C");
        let l: String = (1..=13)
            .map(|p| if idx.l().get(p) { '1' } else { '0' })
            .collect();
        assert_eq!(l, "1110111011111");
        assert_eq!(idx.n_nodes(), 11);
        assert_eq!(idx.n_rows(), 13);
    }

    #[test]
    fn build_example_flags() {
        // Rows 6 (TAC,G) and 10 (TCG,A) repeat a (label, target) pair of an
        // earlier row, so both carry the minus flag. Without the flag at
        // row 10, forward would miscount targets ending in A and
        // backward([2,2]) could not report both predecessors of CGA.
        let idx = example_index();
        let flagged: Vec<usize> = (1..=13).filter(|&p| idx.flags().get(p)).collect();
        assert_eq!(flagged, vec![6, 10]);
    }

    #[test]
    fn build_rejects_unsorted() {
        let sorted = example_matrix();
        let mut rows = sorted.rows().to_vec();
        rows.reverse();
        let m = EdgeMatrix {
            rows,
            k: 3,
            alphabet: dna(),
        };
        assert!(matches!(
            BossIndex::build(&m),
            Err(Error::Construction(_))
        ));
    }

    #[test]
    fn build_rejects_unclosed() {
        let a = dna();
        let rows = vec![Row {
            source: a.encode(b"ACG", 0).unwrap(),
            label: 4,
        }];
        let m = EdgeMatrix {
            rows,
            k: 3,
            alphabet: a,
        };
        assert!(matches!(
            BossIndex::build(&m),
            Err(Error::Construction(_))
        ));
    }

    #[test]
    fn node_from_row_examples() {
        let idx = example_index();
        assert_eq!(idx.node_from_row(4), NodeHandle::new(4, 5, 3));
        assert_eq!(idx.node_from_row(6), NodeHandle::new(6, 6, 3));
        assert_eq!(idx.node_from_row(1), NodeHandle::new(1, 1, 3));
    }

    #[test]
    fn forward_examples() {
        let idx = example_index();
        let v = NodeHandle::new(8, 9, 3);
        assert_eq!(idx.forward(&v, b'A').unwrap(), Some(NodeHandle::new(2, 2, 3)));
        assert_eq!(idx.forward(&v, b'C').unwrap(), None);
        assert_eq!(
            idx.forward(&NodeHandle::new(12, 12, 3), b'$').unwrap(),
            None
        );
    }

    #[test]
    fn backward_examples() {
        let idx = example_index();
        assert_eq!(
            idx.backward(&NodeHandle::new(2, 2, 3)).unwrap(),
            vec![NodeHandle::new(8, 9, 3), NodeHandle::new(10, 10, 3)]
        );
        assert_eq!(
            idx.backward(&NodeHandle::new(4, 5, 3)).unwrap(),
            vec![NodeHandle::new(2, 2, 3)]
        );
        assert_eq!(idx.backward(&NodeHandle::new(1, 1, 3)).unwrap(), vec![]);
    }

    #[test]
    fn lastchar_examples() {
        let idx = example_index();
        assert_eq!(idx.lastchar(&NodeHandle::new(8, 9, 3)).unwrap(), b'G');
        assert_eq!(idx.lastchar(&NodeHandle::new(1, 1, 3)).unwrap(), b'$');
        assert_eq!(idx.lastchar(&NodeHandle::new(13, 13, 3)).unwrap(), b'T');
    }

    #[test]
    fn label_examples() {
        let idx = example_index();
        assert_eq!(idx.label(&NodeHandle::new(4, 5, 3)).unwrap(), "GAC");
        assert_eq!(idx.label(&NodeHandle::new(3, 3, 3)).unwrap(), "$TA");
        assert_eq!(idx.label(&NodeHandle::new(1, 1, 3)).unwrap(), "$$$");
    }

    #[test]
    fn example_node_and_label_lists() {
        let idx = example_index();
        let intervals: Vec<(usize, usize)> = (1..=idx.n_nodes())
            .map(|t| {
                let v = idx.node_by_ordinal(t);
                (v.i, v.j)
            })
            .collect();
        assert_eq!(
            intervals,
            vec![
                (1, 1),
                (2, 2),
                (3, 3),
                (4, 5),
                (6, 6),
                (7, 7),
                (8, 9),
                (10, 10),
                (11, 11),
                (12, 12),
                (13, 13)
            ]
        );
        let labels: Vec<String> = intervals
            .iter()
            .map(|&(i, j)| idx.label(&NodeHandle::new(i, j, 3)).unwrap())
            .collect();
        assert_eq!(
            labels,
            vec![
                "$$$", "CGA", "$TA", "GAC", "TAC", "GTC", "ACG", "TCG", "$$T", "ACT", "CGT"
            ]
        );
    }

    #[test]
    fn invalid_handle_rejected() {
        let idx = example_index();
        assert!(idx.forward(&NodeHandle::new(4, 6, 3), b'G').is_err());
        assert!(idx.backward(&NodeHandle::new(0, 2, 3)).is_err());
        assert!(idx.lastchar(&NodeHandle::new(4, 5, 2)).is_err());
    }

    #[test]
    fn stats_example() {
        let idx = example_index();
        let s = idx.stats();
        assert_eq!((s.n_rows, s.n_nodes, s.k), (13, 11, 3));
        assert!(s.w_bits > 0 && s.l_bits > 0);
    }

    #[test]
    fn row_count_bound() {
        let idx = example_index();
        assert!(idx.n_rows() <= idx.alphabet().sigma() * idx.n_nodes());
    }
}
