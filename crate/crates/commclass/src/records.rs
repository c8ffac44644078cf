//! Newline-delimited atom record files.
//!
//! ```text
//! # commclass-atoms v1 n=3
//! # shard 1
//! 2,1,3,4\t1
//! ...
//! # done 1
//! # shard 2
//! 3,4,2,1\t21232
//! ...
//! ```
//!
//! Each data line is a one-line permutation, a tab, and its atom words sorted
//! and separated by single spaces. Lines are grouped by the first letter of
//! the words (the scan shard); a shard counts only once its `# done` line has
//! been written, so an interrupted scan resumes by rerunning the shards that
//! lack one. A permutation may appear in several shards.

use std::collections::BTreeSet;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use commclass_core::atoms::{enumerate_atoms_rooted, AtomCatalog};
use commclass_core::words::{Letter, Word};
use commclass_core::Permutation;
use rayon::prelude::*;

pub const FORMAT_VERSION: u32 = 1;

fn invalid(line: usize, msg: impl std::fmt::Display) -> io::Error {
    io::Error::new(io::ErrorKind::InvalidData, format!("line {line}: {msg}"))
}

pub fn write_header(out: &mut impl Write, n: usize) -> io::Result<()> {
    writeln!(out, "# commclass-atoms v{FORMAT_VERSION} n={n}")
}

/// Writes one completed shard, terminated by its `# done` marker.
pub fn write_shard(out: &mut impl Write, root: Letter, shard: &AtomCatalog) -> io::Result<()> {
    writeln!(out, "# shard {root}")?;
    for (p, words) in shard.iter() {
        let list: Vec<String> = words.iter().map(Word::to_string).collect();
        writeln!(out, "{p}\t{}", list.join(" "))?;
    }
    writeln!(out, "# done {root}")
}

/// Contents of a record file: the completed shards merged into one catalog.
#[derive(Debug)]
pub struct RecordFile {
    pub n: usize,
    pub done: BTreeSet<Letter>,
    pub catalog: AtomCatalog,
}

pub fn read_records(input: impl BufRead) -> io::Result<RecordFile> {
    let mut lines = input.lines().enumerate();
    let n = match lines.next() {
        Some((_, header)) => parse_header(&header?)?,
        None => return Err(invalid(1, "empty record file")),
    };
    let mut file = RecordFile {
        n,
        done: BTreeSet::new(),
        catalog: AtomCatalog::new(n),
    };
    let mut open: Option<(Letter, AtomCatalog)> = None;
    for (idx, line) in lines {
        let line = line?;
        let lineno = idx + 1;
        if let Some(rest) = line.strip_prefix("# shard ") {
            let root = rest.trim().parse().map_err(|e| invalid(lineno, e))?;
            open = Some((root, AtomCatalog::new(n)));
        } else if let Some(rest) = line.strip_prefix("# done ") {
            let root: Letter = rest.trim().parse().map_err(|e| invalid(lineno, e))?;
            match open.take() {
                Some((r, shard)) if r == root => {
                    file.catalog.merge(shard);
                    file.done.insert(root);
                }
                _ => return Err(invalid(lineno, "done marker without matching shard")),
            }
        } else if line.is_empty() || line.starts_with('#') {
            continue;
        } else {
            let Some((_, shard)) = open.as_mut() else {
                return Err(invalid(lineno, "record outside a shard"));
            };
            let (p, words) = parse_line(&line, n).map_err(|e| invalid(lineno, e))?;
            shard.insert(p, words);
        }
    }
    Ok(file)
}

fn parse_header(line: &str) -> io::Result<usize> {
    let rest = line
        .strip_prefix("# commclass-atoms v")
        .ok_or_else(|| invalid(1, "missing header"))?;
    let (version, n) = rest
        .split_once(" n=")
        .ok_or_else(|| invalid(1, "malformed header"))?;
    if version.parse::<u32>().ok() != Some(FORMAT_VERSION) {
        return Err(invalid(1, format!("unsupported version {version}")));
    }
    n.trim().parse().map_err(|e| invalid(1, e))
}

fn parse_line(line: &str, n: usize) -> Result<(Permutation, Vec<Word>), String> {
    let (perm, words) = line.split_once('\t').ok_or("missing tab")?;
    let p: Permutation = perm.parse().map_err(|e| format!("{e}"))?;
    if p.degree() != n + 1 {
        return Err(format!("{p} does not have degree {}", n + 1));
    }
    let words = words
        .split(' ')
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<Word>().map_err(|e| format!("{e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((p, words))
}

/// Scans `S_{n+1}` into `path`, keeping every shard already completed there.
pub fn scan_to_file(path: &Path, n: usize) -> io::Result<AtomCatalog> {
    let existing = match File::open(path) {
        Ok(f) => Some(read_records(BufReader::new(f))?),
        Err(e) if e.kind() == io::ErrorKind::NotFound => None,
        Err(e) => return Err(e),
    };
    let (mut catalog, done) = match existing {
        Some(file) if file.n != n => {
            return Err(io::Error::new(
                io::ErrorKind::InvalidInput,
                format!("record file holds n={}, requested n={n}", file.n),
            ))
        }
        Some(file) => (file.catalog, file.done),
        None => {
            let mut f = File::create(path)?;
            write_header(&mut f, n)?;
            (AtomCatalog::new(n), BTreeSet::new())
        }
    };
    let todo: Vec<Letter> = (1..=n as Letter).filter(|r| !done.contains(r)).collect();
    let shards: Vec<(Letter, AtomCatalog)> = todo
        .into_par_iter()
        .map(|root| (root, enumerate_atoms_rooted(n, root)))
        .collect();
    let mut out = BufWriter::new(OpenOptions::new().append(true).open(path)?);
    for (root, shard) in shards {
        write_shard(&mut out, root, &shard)?;
        out.flush()?;
        catalog.merge(shard);
    }
    Ok(catalog)
}
