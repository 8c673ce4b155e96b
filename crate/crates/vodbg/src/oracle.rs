//! Brute-force reference graphs, the ground truth for testing.
//!
//! An `OracleGraph` is an explicit hash-based de Bruijn graph of one order
//! `k <= K`, built by truncating the sources of the dummy-closed matrix to
//! their length-k suffixes. It is deliberately naive.

use std::collections::{BTreeMap, BTreeSet};

use crate::boss::EdgeMatrix;
use crate::error::{Error, Result};
use crate::varorder::VarOrderIndex;

/// Matrices above this size are refused to keep test runtime bounded.
pub const MAX_ORACLE_ROWS: usize = 100_000;

#[derive(Debug, Clone)]
pub struct OracleGraph {
    k: usize,
    nodes: BTreeSet<String>,
    edges: BTreeMap<String, BTreeSet<(char, String)>>,
    preds: BTreeMap<String, BTreeSet<String>>,
}

impl OracleGraph {
    /// Build the order-k graph from a dummy-closed matrix.
    pub fn build(matrix: &EdgeMatrix, k: usize) -> Result<Self> {
        if k > matrix.k() {
            return Err(Error::Order(format!(
                "oracle order {k} exceeds matrix order {}",
                matrix.k()
            )));
        }
        if matrix.rows().len() > MAX_ORACLE_ROWS {
            return Err(Error::Input(format!(
                "matrix has {} rows; the oracle is capped at {MAX_ORACLE_ROWS}",
                matrix.rows().len()
            )));
        }
        let alphabet = matrix.alphabet();
        let big_k = matrix.k();
        let mut nodes = BTreeSet::new();
        let mut edges: BTreeMap<String, BTreeSet<(char, String)>> = BTreeMap::new();
        for row in matrix.rows() {
            let suffix = alphabet.decode(&row.source[big_k - k..]);
            nodes.insert(suffix.clone());
            if row.label != 0 {
                let label = alphabet.char_of(row.label) as char;
                let target: String = suffix.chars().skip(1).chain([label]).take(k).collect();
                // for k >= 1 the target is suffix[1..] + label; at k = 0 both
                // node and target are the empty string
                let target = if k == 0 { String::new() } else { target };
                edges.entry(suffix.clone()).or_default().insert((label, target));
            }
        }
        let mut preds: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        for (source, out) in &edges {
            for (_, target) in out {
                preds.entry(target.clone()).or_default().insert(source.clone());
            }
        }
        Ok(OracleGraph { k, nodes, edges, preds })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn nodes(&self) -> &BTreeSet<String> {
        &self.nodes
    }

    pub fn edges_from(&self, node: &str) -> Option<&BTreeSet<(char, String)>> {
        self.edges.get(node)
    }

    /// Target of the edge labelled `a` out of `node`, if present.
    pub fn forward(&self, node: &str, a: char) -> Option<&String> {
        self.edges
            .get(node)?
            .iter()
            .find(|(label, _)| *label == a)
            .map(|(_, target)| target)
    }

    /// All nodes with an edge into `node`, ascending.
    pub fn backward(&self, node: &str) -> Vec<String> {
        self.preds
            .get(node)
            .map(|s| s.iter().cloned().collect())
            .unwrap_or_default()
    }
}

/// Compare a variable-order index against an oracle of order `og.k()`.
/// Returns one line per mismatch; empty means the structures agree.
/// Navigation errors (e.g. handles invalidated by a corrupt L*) are
/// reported as mismatches, not propagated.
pub fn oracle_compare(vi: &VarOrderIndex, og: &OracleGraph) -> Vec<String> {
    match compare_inner(vi, og) {
        Ok(report) => report,
        Err(line) => vec![line],
    }
}

fn compare_inner(vi: &VarOrderIndex, og: &OracleGraph) -> std::result::Result<Vec<String>, String> {
    let mut report = Vec::new();
    let k = og.k();
    let handles = vi
        .nodes_at_order(k)
        .map_err(|e| format!("nodes_at_order({k}): {e}"))?;
    let mut labels = Vec::with_capacity(handles.len());
    for v in &handles {
        labels.push(vi.label(v).map_err(|e| format!("label on {v}: {e}"))?);
    }

    let got_nodes: BTreeSet<String> = labels.iter().cloned().collect();
    if &got_nodes != og.nodes() {
        for extra in got_nodes.difference(og.nodes()) {
            report.push(format!("label: index node {extra:?} absent from oracle"));
        }
        for missing in og.nodes().difference(&got_nodes) {
            report.push(format!("label: oracle node {missing:?} absent from index"));
        }
    }

    for (v, label) in handles.iter().zip(&labels) {
        if k >= 1 {
            let want_last = label.chars().last();
            let got_last = vi
                .lastchar(v)
                .map_err(|e| format!("lastchar on {v}: {e}"))?
                .map(|c| c as char);
            if got_last != want_last {
                report.push(format!(
                    "lastchar: node {label:?} gave {got_last:?}, expected {want_last:?}"
                ));
            }

            for &a in vi.alphabet().symbols() {
                let got = match vi.forward(v, a).map_err(|e| format!("forward on {v}: {e}"))? {
                    Some(w) => Some(vi.label(&w).map_err(|e| format!("label on {w}: {e}"))?),
                    None => None,
                };
                let want = og.forward(label, a as char).cloned();
                if got != want {
                    report.push(format!(
                        "forward: node {label:?} symbol {} gave {got:?}, expected {want:?}",
                        a as char
                    ));
                }
            }

            // interval order is colex of labels, so compare as sets
            let mut got_preds = BTreeSet::new();
            for u in vi.backward(v).map_err(|e| format!("backward on {v}: {e}"))? {
                got_preds.insert(vi.label(&u).map_err(|e| format!("label on {u}: {e}"))?);
            }
            let want_preds: BTreeSet<String> = og.backward(label).into_iter().collect();
            if got_preds != want_preds {
                report.push(format!(
                    "backward: node {label:?} gave {got_preds:?}, expected {want_preds:?}"
                ));
            }
        }

        // representative target orders; checking every kx would make the
        // whole-corpus sweep quadratic in K
        let mut targets = vec![k, (k + 1).min(vi.k()), vi.k()];
        targets.dedup();
        for kx in targets {
            for x in vi.longer(v, kx).map_err(|e| format!("longer on {v}: {e}"))? {
                let back = vi.shorter(&x, k).map_err(|e| format!("shorter on {x}: {e}"))?;
                if back != *v {
                    report.push(format!(
                        "shorter/longer: longer({label:?}, {kx}) member {x} shortens to {back}, not {v}"
                    ));
                }
            }
        }
    }
    Ok(report)
}
