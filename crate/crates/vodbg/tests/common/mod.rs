//! Shared fixtures for the integration suites: the 13-row worked
//! example, random read corpora, and a synthetic genome generator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vodbg::boss::{add_dummies, extract_edges, sort_edges};
use vodbg::{Alphabet, BossIndex, EdgeMatrix, VarOrderIndex};

/// The nine distinct 4-mers of the worked example, as a single read.
pub const FIG_READ: &str = "TACGTCGACGACT";

pub fn build_index(reads: &[String], k: usize, revcomp: bool) -> (EdgeMatrix, VarOrderIndex) {
    let alphabet = Alphabet::dna();
    let edges = extract_edges(reads, k, revcomp, &alphabet).expect("extraction");
    let matrix = sort_edges(add_dummies(&edges, k), k, &alphabet);
    let boss = BossIndex::build(&matrix).expect("construction");
    let index = VarOrderIndex::build(boss, &matrix).expect("construction");
    (matrix, index)
}

pub fn fig_index() -> (EdgeMatrix, VarOrderIndex) {
    build_index(&[FIG_READ.to_string()], 3, false)
}

pub fn random_reads(rng: &mut ChaCha8Rng, count: usize, min_len: usize, max_len: usize) -> Vec<String> {
    let bases = [b'A', b'C', b'G', b'T'];
    (0..count)
        .map(|_| {
            let len = rng.gen_range(min_len..=max_len);
            (0..len).map(|_| bases[rng.gen_range(0..4)] as char).collect()
        })
        .collect()
}

/// A random genome of `len` bases, sheared into overlapping reads so
/// every (K+1)-mer of the genome appears in some read.
pub fn sheared_genome(seed: u64, len: usize, read_len: usize, step: usize) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bases = [b'A', b'C', b'G', b'T'];
    let genome: String = (0..len).map(|_| bases[rng.gen_range(0..4)] as char).collect();
    let mut reads = Vec::new();
    let mut start = 0;
    while start < genome.len() {
        let end = (start + read_len).min(genome.len());
        reads.push(genome[start..end].to_string());
        if end == genome.len() {
            break;
        }
        start += step;
    }
    reads
}
