//! Deterministic binary serialization of a variable-order index.
//!
//! Layout: magic "VODBG", a one-byte format version, then K, sigma, n_rows
//! and n_nodes as little-endian u64, the alphabet bytes in rank order, and
//! length-prefixed sections for L, flags, W, C and L*. Bit payloads are
//! stored raw; rank/select directories and wavelet trees are rebuilt on
//! load. File extension: `.vdbg`.

use std::io::{Read, Write};

use crate::alphabet::Alphabet;
use crate::boss::BossIndex;
use crate::error::{Error, Result};
use crate::succinct::{BitVec, WaveletTree};
use crate::varorder::VarOrderIndex;

pub const MAGIC: &[u8; 5] = b"VODBG";
pub const FORMAT_VERSION: u8 = 1;

/// Serialize; returns the number of bytes written.
pub fn save(vi: &VarOrderIndex, sink: &mut impl Write) -> Result<u64> {
    let boss = vi.boss();
    let mut buf: Vec<u8> = Vec::new();
    buf.extend_from_slice(MAGIC);
    buf.push(FORMAT_VERSION);
    for v in [
        boss.k() as u64,
        boss.alphabet().sigma() as u64,
        boss.n_rows() as u64,
        boss.n_nodes() as u64,
    ] {
        buf.extend_from_slice(&v.to_le_bytes());
    }
    buf.extend_from_slice(boss.alphabet().symbols());

    push_section(&mut buf, &bitvec_payload(boss.l()));
    push_section(&mut buf, &bitvec_payload(boss.flags()));
    push_section(&mut buf, &wavelet_payload(boss.w()));
    push_section(&mut buf, &counts_payload(boss.c()));
    push_section(&mut buf, &wavelet_payload(vi.lstar()));

    sink.write_all(&buf)?;
    Ok(buf.len() as u64)
}

/// Deserialize; refuses unknown versions and truncated files outright.
pub fn load(source: &mut impl Read) -> Result<VarOrderIndex> {
    let mut data = Vec::new();
    source.read_to_end(&mut data)?;
    let mut cur = Cursor { data: &data, pos: 0 };

    let magic = cur.take(5)?;
    if magic != MAGIC {
        return Err(Error::BadMagic);
    }
    let version = cur.take(1)?[0];
    if version != FORMAT_VERSION {
        return Err(Error::BadVersion(version));
    }
    let k = cur.read_u64()? as usize;
    let sigma = cur.read_u64()? as usize;
    let n_rows = cur.read_u64()? as usize;
    let n_nodes = cur.read_u64()? as usize;
    if k == 0 || k > 1 << 16 {
        return Err(Error::Corrupt(format!("implausible order K = {k}")));
    }
    let alphabet = Alphabet::new(cur.take(sigma)?)
        .map_err(|e| Error::Corrupt(format!("bad alphabet: {e}")))?;

    let l = parse_bitvec(&cur.section()?)?;
    let flags = parse_bitvec(&cur.section()?)?;
    let (w_syms, w_sigma) = parse_wavelet(&cur.section()?)?;
    let c = parse_counts(&cur.section()?)?;
    let (lstar_syms, lstar_sigma) = parse_wavelet(&cur.section()?)?;
    if cur.pos != data.len() {
        return Err(Error::Corrupt("trailing bytes after last section".into()));
    }

    if l.len() != n_rows || flags.len() != n_rows || w_syms.len() != n_rows {
        return Err(Error::Corrupt("component lengths disagree with header".into()));
    }
    if l.count(true) != n_nodes {
        return Err(Error::Corrupt("node count disagrees with L".into()));
    }
    if n_rows == 0 || !l.get(n_rows) {
        return Err(Error::Corrupt("L must end in 1".into()));
    }
    if w_sigma as usize != sigma + 1 || lstar_sigma as usize != k + 1 {
        return Err(Error::Corrupt("alphabet sizes disagree with header".into()));
    }
    if c.len() != sigma + 2 || c[0] != 0 || c.windows(2).any(|p| p[0] > p[1]) {
        return Err(Error::Corrupt("C array malformed".into()));
    }
    if *c.last().unwrap() != n_rows {
        return Err(Error::Corrupt("C does not sum to the row count".into()));
    }
    if lstar_syms.len() + 1 != n_rows {
        return Err(Error::Corrupt("L* length must be n_rows - 1".into()));
    }

    let w = WaveletTree::new(&w_syms, w_sigma)
        .map_err(|e| Error::Corrupt(format!("bad W payload: {e}")))?;
    let lstar = WaveletTree::new(&lstar_syms, lstar_sigma)
        .map_err(|e| Error::Corrupt(format!("bad L* payload: {e}")))?;
    let boss = BossIndex::from_parts(w, flags, l, c, k, alphabet)?;
    VarOrderIndex::from_parts(boss, lstar)
}

fn push_section(buf: &mut Vec<u8>, payload: &[u8]) {
    buf.extend_from_slice(&(payload.len() as u64).to_le_bytes());
    buf.extend_from_slice(payload);
}

fn bitvec_payload(bv: &BitVec) -> Vec<u8> {
    let mut out = Vec::with_capacity(8 + bv.len().div_ceil(8));
    out.extend_from_slice(&(bv.len() as u64).to_le_bytes());
    let n_bytes = bv.len().div_ceil(8);
    for (w, word) in bv.words().iter().enumerate() {
        for b in 0..8 {
            if w * 8 + b < n_bytes {
                out.push((word >> (8 * b)) as u8);
            }
        }
    }
    out
}

fn parse_bitvec(payload: &[u8]) -> Result<BitVec> {
    if payload.len() < 8 {
        return Err(Error::Corrupt("bit section too short".into()));
    }
    let n_bits = u64::from_le_bytes(payload[..8].try_into().unwrap()) as usize;
    let bytes = &payload[8..];
    if bytes.len() != n_bits.div_ceil(8) {
        return Err(Error::Corrupt("bit section length mismatch".into()));
    }
    let mut words = vec![0u64; n_bits.div_ceil(64)];
    for (idx, &byte) in bytes.iter().enumerate() {
        words[idx / 8] |= (byte as u64) << (8 * (idx % 8));
    }
    Ok(BitVec::from_words(words, n_bits))
}

/// Symbols packed at ceil(log2 sigma) bits each, little-endian bit order.
fn wavelet_payload(wt: &WaveletTree) -> Vec<u8> {
    let bits_per = bits_for(wt.sigma());
    let syms = wt.to_symbols();
    let mut out = Vec::new();
    out.extend_from_slice(&(syms.len() as u64).to_le_bytes());
    out.extend_from_slice(&(wt.sigma() as u64).to_le_bytes());
    let total_bits = syms.len() * bits_per;
    let mut bytes = vec![0u8; total_bits.div_ceil(8)];
    for (idx, &s) in syms.iter().enumerate() {
        let base = idx * bits_per;
        for b in 0..bits_per {
            if s >> b & 1 == 1 {
                bytes[(base + b) / 8] |= 1 << ((base + b) % 8);
            }
        }
    }
    out.extend_from_slice(&bytes);
    out
}

fn parse_wavelet(payload: &[u8]) -> Result<(Vec<u16>, u16)> {
    if payload.len() < 16 {
        return Err(Error::Corrupt("symbol section too short".into()));
    }
    let n = u64::from_le_bytes(payload[..8].try_into().unwrap()) as usize;
    let sigma = u64::from_le_bytes(payload[8..16].try_into().unwrap());
    if sigma == 0 || sigma > u16::MAX as u64 {
        return Err(Error::Corrupt(format!("implausible alphabet size {sigma}")));
    }
    let sigma = sigma as u16;
    let bits_per = bits_for(sigma);
    let bytes = &payload[16..];
    if bytes.len() != (n * bits_per).div_ceil(8) {
        return Err(Error::Corrupt("symbol section length mismatch".into()));
    }
    let mut syms = Vec::with_capacity(n);
    for idx in 0..n {
        let base = idx * bits_per;
        let mut s = 0u16;
        for b in 0..bits_per {
            if bytes[(base + b) / 8] >> ((base + b) % 8) & 1 == 1 {
                s |= 1 << b;
            }
        }
        syms.push(s);
    }
    Ok((syms, sigma))
}

fn counts_payload(c: &[usize]) -> Vec<u8> {
    let mut out = Vec::with_capacity(8 + c.len() * 8);
    out.extend_from_slice(&(c.len() as u64).to_le_bytes());
    for &v in c {
        out.extend_from_slice(&(v as u64).to_le_bytes());
    }
    out
}

fn parse_counts(payload: &[u8]) -> Result<Vec<usize>> {
    if payload.len() < 8 {
        return Err(Error::Corrupt("count section too short".into()));
    }
    let n = u64::from_le_bytes(payload[..8].try_into().unwrap()) as usize;
    if payload.len() != 8 + n * 8 {
        return Err(Error::Corrupt("count section length mismatch".into()));
    }
    Ok((0..n)
        .map(|i| u64::from_le_bytes(payload[8 + i * 8..16 + i * 8].try_into().unwrap()) as usize)
        .collect())
}

fn bits_for(sigma: u16) -> usize {
    (u16::BITS - (sigma.max(2) - 1).leading_zeros()) as usize
}

struct Cursor<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        if self.pos + n > self.data.len() {
            return Err(Error::Corrupt("unexpected end of file".into()));
        }
        let out = &self.data[self.pos..self.pos + n];
        self.pos += n;
        Ok(out)
    }

    fn read_u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn section(&mut self) -> Result<Vec<u8>> {
        let len = self.read_u64()? as usize;
        Ok(self.take(len)?.to_vec())
    }
}
