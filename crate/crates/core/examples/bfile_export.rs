//! Writes OEIS-style b-files for a handful of sequences into a directory,
//! choosing the fastest applicable engine for each.
//!
//!     cargo run --release --example bfile_export [DIR]

use std::fs;
use std::path::PathBuf;

use gapperms::bfile::{read_bfile, to_bfile_string};
use gapperms::engine::compute;
use gapperms::{EngineId, Mode, Oracle, SequenceSpec, TermTable};

fn main() -> gapperms::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("gapperms-bfiles"));
    fs::create_dir_all(&dir)?;

    let jobs = [
        (1, 1, Mode::Absolute, 100),
        (1, 2, Mode::Absolute, 100),
        (2, 2, Mode::Signed, 60),
        (2, 2, Mode::Absolute, 60),
        (2, 3, Mode::Signed, 30),
        (4, 4, Mode::Signed, 30),
    ];
    for (r, s, mode, n) in jobs {
        let spec = SequenceSpec::new(r, s, mode)?;
        let engine = EngineId::Auto.resolve(&spec);
        let table = TermTable::new(1, compute(engine, &spec, n, &Oracle::new())?)?;
        let path = dir.join(format!("r{r}-s{s}-{mode}.b"));
        fs::write(&path, to_bfile_string(&table))?;
        assert_eq!(read_bfile(&path)?, table);
        println!("{spec} via {engine}: {n} terms -> {}", path.display());
    }
    Ok(())
}
