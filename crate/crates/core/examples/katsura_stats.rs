//! Counter breakdown of the signature algorithm on katsura10 (10 variables),
//! the way `sigbasis katsura10 --stats` prints it.
//!
//! cargo run --release --example katsura_stats

use clap::Parser;
use sigbasis::cli::{execute, Cli};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = std::env::args().nth(1).unwrap_or_else(|| "10".into());
    let input = format!("katsura{n}");
    let cli = Cli::try_parse_from(["sigbasis", &input, "--stats", "--reducer", "geobucket", "--hashed"])?;
    let out = execute(&cli)?;
    let basis = out.lines().filter(|l| !l.contains(':') && !l.contains("e_")).count();
    let syzygies = out.lines().filter(|l| l.contains("e_")).count();
    println!("{input}: reduced basis {basis}, syzygy signatures {syzygies}");
    for line in out.lines().filter(|l| l.contains(": ")) {
        println!("  {line}");
    }
    Ok(())
}
