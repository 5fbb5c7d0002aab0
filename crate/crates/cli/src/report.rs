//! Report envelope shared by all subcommands.

use serde::Serialize;
use serde_json::Value;

/// Deterministic envelope: the reproducibility invariant covers `command`,
/// `inputs_digest`, and `results`; wall-clock timing goes to stderr only.
#[derive(Debug, Serialize)]
pub struct Report {
    /// Echo of the subcommand and its resolved inputs.
    pub command: Value,
    /// FNV-1a 64 digest of the raw input bytes, hex.
    pub inputs_digest: String,
    pub results: Value,
}

/// FNV-1a, 64-bit: stable across platforms and releases, unlike the std
/// hasher.
pub fn digest(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}

pub fn emit(report: &Report, started: std::time::Instant) {
    println!("{}", serde_json::to_string_pretty(report).unwrap());
    eprintln!("elapsed: {:.3} ms", started.elapsed().as_secs_f64() * 1e3);
}
