//! Command-line surface for building, querying, validating and
//! benchmarking variable-order de Bruijn graph indexes.
//!
//! Exit codes: 0 success, 1 usage error, 2 data or validation failure.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vodbg::boss::{add_dummies, extract_edges, sort_edges};
use vodbg::io::{read_sequences, InputFormat};
use vodbg::oracle::{oracle_compare, OracleGraph};
use vodbg::{storage, Alphabet, BossIndex, EdgeMatrix, NodeHandle, VarOrderIndex};

#[derive(Parser)]
#[command(name = "vodbg", version, about = "Variable-order succinct de Bruijn graph index")]
struct Cli {
    /// Suppress progress diagnostics on stderr.
    #[arg(long, global = true)]
    quiet: bool,

    /// Seed for randomized operations.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an index from reads or (K+1)-mers and write a .vdbg file.
    Build {
        /// Maximum graph order K.
        #[arg(long)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "reads")]
        input_format: String,
        /// Also index reverse complements.
        #[arg(long)]
        revcomp: bool,
        #[arg(long)]
        output: PathBuf,
    },
    /// Run one navigation operation against an index.
    Query {
        #[arg(long)]
        index: PathBuf,
        #[arg(long)]
        op: QueryOp,
        /// Node handle as "i,j,k" (1-based rows).
        #[arg(long)]
        node: String,
        /// Edge symbol, where the operation takes one.
        #[arg(long)]
        symbol: Option<char>,
        /// Target order, where the operation takes one.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Print index statistics.
    Stats {
        #[arg(long)]
        index: PathBuf,
    },
    /// Check an index against brute-force graphs rebuilt from its corpus.
    Validate {
        #[arg(long)]
        index: PathBuf,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "reads")]
        input_format: String,
        #[arg(long)]
        revcomp: bool,
        /// Orders to check, e.g. "0,2,5" or "0..8".
        #[arg(long)]
        orders: String,
    },
    /// Time navigation operations over random queries.
    Bench {
        #[arg(long)]
        index: PathBuf,
        #[arg(long, default_value_t = 20_000)]
        queries: usize,
    },
    /// Emit maximal non-branching paths at one order.
    Contigs {
        #[arg(long)]
        index: PathBuf,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 0)]
        min_length: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QueryOp {
    Forward,
    Backward,
    Lastchar,
    Label,
    Shorter,
    Longer,
    Maxlen,
}

enum Failure {
    Usage(String),
    Data(String),
}

impl From<vodbg::Error> for Failure {
    fn from(e: vodbg::Error) -> Self {
        Failure::Data(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Data(e.to_string())
    }
}

fn main() -> ExitCode {
    // die quietly when stdout is closed early (e.g. piped into `head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Build {
            k,
            input,
            input_format,
            revcomp,
            output,
        } => cmd_build(k, &input, &input_format, revcomp, &output, cli.quiet),
        Command::Query {
            index,
            op,
            node,
            symbol,
            order,
        } => cmd_query(&index, op, &node, symbol, order),
        Command::Stats { index } => cmd_stats(&index),
        Command::Validate {
            index,
            input,
            input_format,
            revcomp,
            orders,
        } => cmd_validate(&index, &input, &input_format, revcomp, &orders),
        Command::Bench { index, queries } => cmd_bench(&index, queries, cli.seed),
        Command::Contigs {
            index,
            order,
            min_length,
        } => cmd_contigs(&index, order, min_length),
    }
}

fn build_matrix(
    k: usize,
    input: &PathBuf,
    format_name: &str,
    revcomp: bool,
) -> Result<EdgeMatrix, Failure> {
    let format: InputFormat = format_name
        .parse()
        .map_err(|e: vodbg::Error| Failure::Usage(e.to_string()))?;
    let alphabet = Alphabet::dna();
    let file = File::open(input).map_err(|e| Failure::Data(format!("{}: {e}", input.display())))?;
    let sequences = read_sequences(BufReader::new(file), format)?;
    let edges = match format {
        InputFormat::Kmers => {
            let mut edges = std::collections::BTreeSet::new();
            for (idx, line) in sequences.iter().enumerate() {
                if line.len() != k + 1 {
                    return Err(Failure::Data(format!(
                        "k-mer on line {} has length {}, expected K+1 = {}",
                        idx + 1,
                        line.len(),
                        k + 1
                    )));
                }
                let enc = alphabet.encode(line.as_bytes(), idx + 1)?;
                if revcomp {
                    let rc: Vec<u8> = enc
                        .iter()
                        .rev()
                        .map(|&r| alphabet.complement(r).unwrap())
                        .collect();
                    edges.insert(rc);
                }
                edges.insert(enc);
            }
            edges
        }
        _ => {
            if sequences.is_empty() {
                return Err(Failure::Data("no (K+1)-mers extracted".into()));
            }
            extract_edges(&sequences, k, revcomp, &alphabet)?
        }
    };
    if edges.is_empty() {
        return Err(Failure::Data("no (K+1)-mers extracted".into()));
    }
    Ok(sort_edges(add_dummies(&edges, k), k, &alphabet))
}

fn cmd_build(
    k: usize,
    input: &PathBuf,
    format_name: &str,
    revcomp: bool,
    output: &PathBuf,
    quiet: bool,
) -> Result<(), Failure> {
    if k < 1 {
        return Err(Failure::Usage("K must be at least 1".into()));
    }
    if k > 1 << 16 {
        return Err(Failure::Usage("K too large for the index format (K <= 65536)".into()));
    }
    let started = Instant::now();
    let matrix = build_matrix(k, input, format_name, revcomp)?;
    let boss = BossIndex::build(&matrix)?;
    let index = VarOrderIndex::build(boss, &matrix)?;
    let elapsed = started.elapsed();

    let file = File::create(output).map_err(|e| Failure::Data(format!("{}: {e}", output.display())))?;
    let mut writer = BufWriter::new(file);
    let bytes = storage::save(&index, &mut writer)?;
    writer.flush()?;

    let s = index.stats();
    println!("n_rows {}", s.n_rows);
    println!("n_nodes {}", s.n_nodes);
    println!("K {}", s.k);
    println!("construction_seconds {:.3}", elapsed.as_secs_f64());
    println!("w_bits {}", s.w_bits);
    println!("l_bits {}", s.l_bits);
    println!("flags_bits {}", s.flags_bits);
    println!("c_bits {}", s.c_bits);
    println!("lstar_bits {}", s.lstar_bits);
    println!("boss_bits {}", s.boss_bits());
    println!("total_bits {}", s.total_bits());
    println!(
        "varorder_over_boss {:.3}",
        s.total_bits() as f64 / s.boss_bits() as f64
    );
    if !quiet {
        eprintln!("wrote {} bytes to {}", bytes, output.display());
    }
    Ok(())
}

fn load_index(path: &PathBuf) -> Result<VarOrderIndex, Failure> {
    let file = File::open(path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
    Ok(storage::load(&mut BufReader::new(file))?)
}

fn parse_node(spec: &str) -> Result<NodeHandle, Failure> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 3 {
        return Err(Failure::Usage(format!(
            "node must be given as i,j,k (got {spec:?})"
        )));
    }
    let nums: Vec<usize> = parts
        .iter()
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("bad node component {p:?}")))
        })
        .collect::<Result<_, _>>()?;
    Ok(NodeHandle::new(nums[0], nums[1], nums[2]))
}

fn cmd_query(
    path: &PathBuf,
    op: QueryOp,
    node: &str,
    symbol: Option<char>,
    order: Option<usize>,
) -> Result<(), Failure> {
    let index = load_index(path)?;
    let v = parse_node(node)?;
    if !index.validate_handle(&v) {
        return Err(Failure::Data(format!(
            "node {v} is not a maximal order-{} interval of this index",
            v.k
        )));
    }
    let need_symbol = || {
        symbol
            .map(|c| c as u8)
            .ok_or_else(|| Failure::Usage("this operation requires --symbol".into()))
    };
    let need_order = || order.ok_or_else(|| Failure::Usage("this operation requires --order".into()));
    match op {
        QueryOp::Forward => match index.forward(&v, need_symbol()?)? {
            Some(w) => println!("{w}"),
            None => println!("NULL"),
        },
        QueryOp::Backward => {
            let preds = index.backward(&v)?;
            if preds.is_empty() {
                println!("EMPTY");
            }
            for u in preds {
                println!("{u}");
            }
        }
        QueryOp::Lastchar => match index.lastchar(&v)? {
            Some(c) => println!("{}", c as char),
            None => println!("NONE"),
        },
        QueryOp::Label => println!("{}", index.label(&v)?),
        QueryOp::Shorter => println!("{}", index.shorter(&v, need_order()?)?),
        QueryOp::Longer => {
            for w in index.longer(&v, need_order()?)? {
                println!("{w}");
            }
        }
        QueryOp::Maxlen => match index.maxlen(&v, symbol.map(|c| c as u8))? {
            Some(w) => println!("{w}"),
            None => println!("NULL"),
        },
    }
    Ok(())
}

fn cmd_stats(path: &PathBuf) -> Result<(), Failure> {
    let index = load_index(path)?;
    let s = index.stats();
    println!("n_rows {}", s.n_rows);
    println!("n_nodes {}", s.n_nodes);
    println!("K {}", s.k);
    println!("sigma {}", index.alphabet().sigma());
    println!("w_bits {}", s.w_bits);
    println!("l_bits {}", s.l_bits);
    println!("flags_bits {}", s.flags_bits);
    println!("c_bits {}", s.c_bits);
    println!("lstar_bits {}", s.lstar_bits);
    println!("boss_bits {}", s.boss_bits());
    println!("total_bits {}", s.total_bits());
    println!(
        "bits_per_node {:.2}",
        s.total_bits() as f64 / s.n_nodes as f64
    );
    Ok(())
}

fn parse_orders(spec: &str, max_k: usize) -> Result<Vec<usize>, Failure> {
    let mut orders = Vec::new();
    for part in spec.split(',') {
        let part = part.trim();
        if let Some((lo, hi)) = part.split_once("..") {
            let lo: usize = lo
                .parse()
                .map_err(|_| Failure::Usage(format!("bad order range {part:?}")))?;
            let hi: usize = hi
                .parse()
                .map_err(|_| Failure::Usage(format!("bad order range {part:?}")))?;
            orders.extend(lo..=hi);
        } else {
            orders.push(
                part.parse()
                    .map_err(|_| Failure::Usage(format!("bad order {part:?}")))?,
            );
        }
    }
    if orders.is_empty() {
        return Err(Failure::Usage("no orders given".into()));
    }
    if let Some(&bad) = orders.iter().find(|&&k| k > max_k) {
        return Err(Failure::Usage(format!(
            "order {bad} exceeds the index maximum K = {max_k}"
        )));
    }
    Ok(orders)
}

fn cmd_validate(
    path: &PathBuf,
    input: &PathBuf,
    format_name: &str,
    revcomp: bool,
    orders: &str,
) -> Result<(), Failure> {
    let index = load_index(path)?;
    let orders = parse_orders(orders, index.k())?;
    let matrix = build_matrix(index.k(), input, format_name, revcomp)?;
    if matrix.rows().len() != index.n_rows() {
        return Err(Failure::Data(format!(
            "corpus yields {} rows but the index has {}; was the index built from this input?",
            matrix.rows().len(),
            index.n_rows()
        )));
    }
    let mut mismatches = 0usize;
    for &k in &orders {
        let oracle = OracleGraph::build(&matrix, k)
            .map_err(|e| Failure::Usage(format!("{e}; validate a smaller corpus")))?;
        let report = oracle_compare(&index, &oracle);
        for line in &report {
            println!("order {k}: {line}");
        }
        mismatches += report.len();
    }
    if mismatches > 0 {
        return Err(Failure::Data(format!("{mismatches} mismatches found")));
    }
    println!("OK: orders {orders:?} match the oracle");
    Ok(())
}

fn cmd_bench(path: &PathBuf, queries: usize, seed: u64) -> Result<(), Failure> {
    if queries == 0 {
        return Err(Failure::Usage("--queries must be at least 1".into()));
    }
    let index = load_index(path)?;
    let k_max = index.k();
    let k_min = 8.min(k_max);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let symbols = index.alphabet().symbols().to_vec();

    // one shared sample of (node, symbol) pairs so every operation row
    // sees the same query mix
    let mut sample = Vec::with_capacity(queries);
    for _ in 0..queries {
        let r = rng.gen_range(1..=index.n_rows());
        let k = rng.gen_range(k_min..=k_max);
        let v = index
            .shorter(&index.boss().node_from_row(r), k)
            .expect("sampled handle is valid");
        let a = symbols[rng.gen_range(0..symbols.len())];
        sample.push((v, a));
    }

    println!("{:<10} {:>8} {:>12}", "op", "queries", "mean_us");
    let time_op = |name: &str, f: &mut dyn FnMut(&NodeHandle, u8)| {
        let started = Instant::now();
        for (v, a) in &sample {
            f(v, *a);
        }
        let mean_us = started.elapsed().as_secs_f64() * 1e6 / sample.len() as f64;
        println!("{:<10} {:>8} {:>12.3}", name, sample.len(), mean_us);
    };

    time_op("forward", &mut |v, a| {
        let _ = index.forward(v, a).unwrap();
    });
    time_op("backward", &mut |v, _| {
        let _ = index.backward(v).unwrap();
    });
    time_op("shorter_1", &mut |v, _| {
        let _ = index.shorter(v, v.k.saturating_sub(1)).unwrap();
    });
    time_op("shorter_4", &mut |v, _| {
        let _ = index.shorter(v, v.k.saturating_sub(4)).unwrap();
    });
    time_op("longer_1", &mut |v, _| {
        let _ = index.longer(v, (v.k + 1).min(k_max)).unwrap();
    });
    time_op("longer_4", &mut |v, _| {
        let _ = index.longer(v, (v.k + 4).min(k_max)).unwrap();
    });
    time_op("maxlen", &mut |v, _| {
        let _ = index.maxlen(v, None).unwrap();
    });
    time_op("maxlen_c", &mut |v, a| {
        let _ = index.maxlen(v, Some(a)).unwrap();
    });
    Ok(())
}

fn cmd_contigs(path: &PathBuf, order: usize, min_length: usize) -> Result<(), Failure> {
    let index = load_index(path)?;
    if order > index.k() {
        return Err(Failure::Usage(format!(
            "order {order} exceeds the index maximum K = {}",
            index.k()
        )));
    }
    if order == 0 {
        return Ok(()); // single empty-labelled node, no paths
    }
    for contig in contigs(&index, order)? {
        if contig.len() >= min_length {
            println!("{contig}");
        }
    }
    Ok(())
}

/// Maximal unary paths between `$`-free nodes at the given order,
/// in ascending starting-interval order.
fn contigs(index: &VarOrderIndex, order: usize) -> Result<Vec<String>, Failure> {
    let nodes = index.nodes_at_order(order)?;
    let mut ids: HashMap<NodeHandle, usize> = HashMap::new();
    let mut clean = Vec::new(); // $-free nodes only
    for v in &nodes {
        let label = index.label(v)?;
        if !label.contains('$') {
            ids.insert(*v, clean.len());
            clean.push((*v, label));
        }
    }
    let mut out_edges: Vec<Vec<(u8, usize)>> = vec![Vec::new(); clean.len()];
    let mut in_deg = vec![0usize; clean.len()];
    for (id, (v, _)) in clean.iter().enumerate() {
        for &a in index.alphabet().symbols() {
            if let Some(w) = index.forward(v, a)? {
                if let Some(&wid) = ids.get(&w) {
                    out_edges[id].push((a, wid));
                    in_deg[wid] += 1;
                }
            }
        }
    }

    let follows_unary = |id: usize| -> Option<(u8, usize)> {
        if out_edges[id].len() != 1 {
            return None;
        }
        let (a, next) = out_edges[id][0];
        (in_deg[next] == 1).then_some((a, next))
    };
    // a node continues a unary path iff its unique predecessor extends into it
    let mut continued = vec![false; clean.len()];
    for id in 0..clean.len() {
        if let Some((_, next)) = follows_unary(id) {
            continued[next] = true;
        }
    }

    let mut emitted = vec![false; clean.len()];
    let mut result = Vec::new();
    let walk = |start: usize, emitted: &mut Vec<bool>| {
        let mut seq = clean[start].1.clone();
        emitted[start] = true;
        let mut cur = start;
        while let Some((a, next)) = follows_unary(cur) {
            if emitted[next] {
                break; // closed a cycle
            }
            seq.push(a as char);
            emitted[next] = true;
            cur = next;
        }
        seq
    };
    for id in 0..clean.len() {
        if !continued[id] && !emitted[id] {
            result.push(walk(id, &mut emitted));
        }
    }
    // leftover pure cycles: start each at its smallest interval
    for id in 0..clean.len() {
        if !emitted[id] {
            result.push(walk(id, &mut emitted));
        }
    }
    Ok(result)
}
