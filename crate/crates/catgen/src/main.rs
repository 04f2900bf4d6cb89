use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use catgen::generate::{
    expected, girth_at_least, grow, multigraph_levels, Levels, GIRTH4_COUNTS, GIRTH5_COUNTS, MULTIGRAPH_COUNTS,
    SIMPLE_COUNTS,
};
use clap::Parser;
use pmavoid_core::{io, named, Multigraph};

/// Generate cubic graph catalogues and check them against published counts.
#[derive(Parser)]
struct Args {
    /// Directory the catalogues are written to.
    #[arg(long, default_value = "data")]
    out: PathBuf,
    /// Largest order of the girth-5 catalogue (at most 20).
    #[arg(long, default_value_t = 20)]
    girth5_max_n: usize,
    /// Only write the small file of named graphs.
    #[arg(long)]
    named_only: bool,
}

fn check(name: &str, table: &[(usize, usize)], levels: &[Vec<Multigraph>]) -> Result<()> {
    for (i, level) in levels.iter().enumerate() {
        let n = 2 * i + 2;
        if let Some(want) = expected(table, n) {
            if level.len() != want {
                bail!("{name}: {} graphs on {n} vertices, expected {want}", level.len());
            }
        }
    }
    Ok(())
}

fn filtered(levels: &[Vec<Multigraph>], keep: impl Fn(&Multigraph) -> bool) -> Levels {
    levels.iter().map(|l| l.iter().filter(|g| keep(g)).cloned().collect()).collect()
}

fn write(out: &Path, file: &str, levels: &[Vec<Multigraph>], min_n: usize, max_n: usize) -> Result<()> {
    let mut text = String::new();
    let mut count = 0;
    for g in levels.iter().flatten() {
        if (min_n..=max_n).contains(&g.vertex_count()) {
            text.push_str(&io::emit(g));
            text.push('\n');
            count += 1;
        }
    }
    let path = out.join(file);
    fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    eprintln!("wrote {count} graphs to {}", path.display());
    Ok(())
}

fn main() -> Result<()> {
    let args = Args::parse();
    if !(10..=20).contains(&args.girth5_max_n) {
        bail!("--girth5-max-n must lie in 10..=20");
    }
    fs::create_dir_all(&args.out)?;
    let named: String = [named::k4(), named::k33(), named::petersen(), named::heawood(), named::coxeter()]
        .iter()
        .map(|g| io::emit(g) + "\n")
        .collect();
    fs::write(args.out.join("named.g6"), named)?;
    if args.named_only {
        return Ok(());
    }
    let clock = Instant::now();

    let multi = multigraph_levels(16);
    check("multigraphs", &MULTIGRAPH_COUNTS, &multi)?;
    eprintln!("multigraphs up to 16 vertices: {:?}", clock.elapsed());

    let simple = filtered(&multi, Multigraph::is_simple);
    check("simple", &SIMPLE_COUNTS, &simple)?;
    let mut girth4 = filtered(&simple, |g| girth_at_least(g, 4));
    let girth4_18 = grow(&simple, |g| girth_at_least(g, 4));
    girth4.push(girth4_18);
    check("girth 4", &GIRTH4_COUNTS, &girth4)?;
    eprintln!("girth 4 up to 18 vertices: {:?}", clock.elapsed());

    let mut girth5 = filtered(&girth4, |g| girth_at_least(g, 5));
    if args.girth5_max_n == 20 {
        let level = grow(&girth4, |g| girth_at_least(g, 5));
        girth5.push(level);
    }
    check("girth 5", &GIRTH5_COUNTS, &girth5)?;
    eprintln!("girth 5 up to {} vertices: {:?}", args.girth5_max_n, clock.elapsed());

    write(&args.out, "cubic_le14.g6", &simple, 4, 14)?;
    write(&args.out, "cubic_multi_le10.s6", &multi, 2, 10)?;
    write(&args.out, "girth5_le20.g6", &girth5, 10, args.girth5_max_n)?;
    Ok(())
}
