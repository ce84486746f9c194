//! The CLI pipeline in-process: solve and save a profile, reload it, and
//! run the spectral analysis on the reloaded copy.

use gslab::cli::{execute, io, write_artifacts, Cli};
use clap::Parser;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("gslab-pipeline");
    let out = dir.to_str().unwrap();
    let solve = Cli::parse_from(["gslab", "solve", "--N", "2", "--gamma", "1", "--alpha", "1", "--omega", "2", "--p", "3", "--out", out]);
    let run = execute(&solve.resolve()?)?;
    write_artifacts(&dir, &run.artifacts)?;
    println!("solve: {}", run.summary);

    let prof = io::load_profile(&dir.join("profile.csv"))?;
    println!("reloaded {} samples", gslab::profile::Sampled::grid(&prof).len());

    let profile = dir.join("profile.csv");
    let spec = Cli::parse_from(["gslab", "spectrum", "--with-profile", profile.to_str().unwrap(), "--jmax", "4", "--out", out]);
    let run = execute(&spec.resolve()?)?;
    write_artifacts(&dir, &run.artifacts)?;
    println!("spectrum: {}", run.summary);
    for a in &run.artifacts {
        println!("wrote {}", dir.join(&a.name).display());
    }
    Ok(())
}
