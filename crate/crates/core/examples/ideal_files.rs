//! The ideal file format and the command line front end, driven in-process.
//!
//! cargo run --example ideal_files

use clap::Parser;
use sigbasis::cli::{execute, Cli};
use sigbasis::io::{format_ideal, parse_ideal};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = "7\n3\nlex\n-2*x1^2*x2*x3 - x1*x2*x3 - 2*x1\n-x1^2*x2*x3-x1*x2^2*x3^2-3*x1*x3^2\n-x1^2*x3 - 3*x1*x2^2*x3^2 - 3*x3\n";
    let (ring, gens) = parse_ideal(text)?;
    print!("canonical form:\n{}", format_ideal(&ring, &gens));

    let path = std::env::temp_dir().join("sigbasis-example-ideal.txt");
    std::fs::write(&path, text)?;
    let file = path.to_str().ok_or("non-utf8 temp path")?;
    for algorithm in ["sb", "classic"] {
        let cli = Cli::try_parse_from(["sigbasis", file, "--algorithm", algorithm])?;
        print!("{algorithm}:\n{}", execute(&cli)?);
    }

    match parse_ideal("7\n2\nlex\nx1 + x5\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
