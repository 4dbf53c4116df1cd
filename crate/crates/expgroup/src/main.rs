//! Command-line front end. Flags:
//!
//! ```text
//! expgroup --gens a,b [--ring zt|z] [--seed N] [--points k1,k2,...] [--batch FILE]
//! ```
//!
//! Without `--batch`, commands are read line by line from stdin. The process
//! exit code is the code of the last executed command.

use expgroup::{Ring, Session};
use num_bigint::BigInt;
use std::io::{BufRead, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("err: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<u8, String> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut gens: Option<Vec<String>> = None;
    let mut ring = Ring::IntPoly;
    let mut seed = 0u64;
    let mut batch: Option<String> = None;
    let mut points: Option<Vec<BigInt>> = None;

    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let mut take = |name: &str| {
            it.next()
                .map(|s| s.to_string())
                .ok_or_else(|| format!("{name} needs a value"))
        };
        match arg.as_str() {
            "--gens" => {
                gens = Some(
                    take("--gens")?
                        .split(',')
                        .map(|s| s.trim().to_string())
                        .filter(|s| !s.is_empty())
                        .collect(),
                );
            }
            "--ring" => {
                let name = take("--ring")?;
                ring = Ring::from_name(&name)
                    .ok_or_else(|| format!("unknown ring `{name}` (use zt or z)"))?;
            }
            "--seed" => {
                seed = take("--seed")?
                    .parse()
                    .map_err(|_| "bad --seed value".to_string())?;
            }
            "--batch" => batch = Some(take("--batch")?),
            "--points" => {
                let list = take("--points")?;
                let mut ks = Vec::new();
                for part in list.split(',') {
                    let part = part.trim();
                    if part.is_empty() {
                        continue;
                    }
                    ks.push(part.parse().map_err(|_| format!("bad point `{part}`"))?);
                }
                points = Some(ks);
            }
            "--help" | "-h" => {
                print_help();
                return Ok(0);
            }
            other => return Err(format!("unknown flag `{other}`")),
        }
    }

    let gens = gens.ok_or_else(|| "--gens is required".to_string())?;
    let gen_refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
    let mut session = Session::new(&gen_refs, ring, seed).map_err(|e| e.to_string())?;
    if let Some(ks) = points {
        session.set_points(ks);
    }

    let stdout = std::io::stdout();
    let mut code = 0i32;
    if let Some(path) = batch {
        let text = std::fs::read_to_string(&path).map_err(|e| format!("{path}: {e}"))?;
        let (out, last) = session.run_batch(&text);
        let mut lock = stdout.lock();
        lock.write_all(out.as_bytes()).map_err(|e| e.to_string())?;
        lock.flush().map_err(|e| e.to_string())?;
        code = last;
    } else {
        let stdin = std::io::stdin();
        for line in stdin.lock().lines() {
            let line = line.map_err(|e| e.to_string())?;
            if let Some(outcome) = session.run_line(&line) {
                let mut lock = stdout.lock();
                writeln!(lock, "{}", outcome.text).map_err(|e| e.to_string())?;
                lock.flush().map_err(|e| e.to_string())?;
                code = outcome.code;
            }
        }
    }
    Ok(code.clamp(0, 2) as u8)
}

fn print_help() {
    println!(
        "usage: expgroup --gens a,b [--ring zt|z] [--seed N] [--points k1,k2,...] [--batch FILE]

commands (stdin or batch file, one per line, `#` comments):
  norm EXPR            normalized form
  eq EXPR ; EXPR       equality (ok/true or no/false)
  conj EXPR ; EXPR     conjugacy witness
  comm EXPR ; EXPR     commutation
  root EXPR            maximal root decomposition
  cent EXPR            centralizer handle
  level EXPR           tower level
  len EXPR             syllable length
  pow EXPR ; POLY      ring power
  eval EXPR            evaluation images at the configured points
  let NAME = EXPR      bind a name
  selftest             run the internal verification sweep"
    );
}
