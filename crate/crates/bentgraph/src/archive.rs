//! Text archive for a [`Classification`].
//!
//! ```text
//! version 1
//! dim 2
//! anf x0*x1
//! graphs 2
//! 0 Cr
//! 1 C~
//! matrix bent 4 4
//! 0 0 0 0
//! ...
//! matrix dual 4 4
//! ...
//! matrix wc 4 4
//! ...
//! end
//! ```
//!
//! Matrices are row `c`, column `b`, one row per line. The encoding is
//! canonical: loading and saving again reproduces the input byte for byte.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use bentgraph_core::equivalence::MatrixKind;
use bentgraph_core::Classification;

pub const VERSION: u32 = 1;

const SECTIONS: [(&str, MatrixKind); 3] = [
    ("bent", MatrixKind::Bent),
    ("dual", MatrixKind::Dual),
    ("wc", MatrixKind::WeightClass),
];

#[derive(Debug, thiserror::Error)]
pub enum ArchiveError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("archive line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("inconsistent archive: {0}")]
    Invalid(#[from] bentgraph_core::Error),
}

pub fn write_archive<W: Write>(cl: &Classification, mut w: W) -> io::Result<()> {
    let side = cl.side();
    writeln!(w, "version {VERSION}")?;
    writeln!(w, "dim {}", cl.num_vars())?;
    writeln!(w, "anf {}", cl.anf())?;
    writeln!(w, "graphs {}", cl.graphs().len())?;
    for (i, g6) in cl.graphs().iter().enumerate() {
        writeln!(w, "{i} {g6}")?;
    }
    for (name, kind) in SECTIONS {
        writeln!(w, "matrix {name} {side} {side}")?;
        let values = cl.matrix(kind);
        for row in values.chunks(side) {
            let mut line = String::with_capacity(row.len() * 3);
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    line.push(' ');
                }
                line.push_str(&v.to_string());
            }
            writeln!(w, "{line}")?;
        }
    }
    writeln!(w, "end")?;
    w.flush()
}

pub fn to_string(cl: &Classification) -> String {
    let mut buf = Vec::new();
    write_archive(cl, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("archive text is ASCII")
}

pub fn save(cl: &Classification, path: &Path) -> io::Result<()> {
    write_archive(cl, BufWriter::new(File::create(path)?))
}

pub fn load(path: &Path) -> Result<Classification, ArchiveError> {
    read_archive(BufReader::new(File::open(path)?))
}

pub fn from_str(text: &str) -> Result<Classification, ArchiveError> {
    read_archive(text.as_bytes())
}

struct Lines<R> {
    inner: io::Lines<R>,
    line: usize,
}

impl<R: BufRead> Lines<R> {
    fn next(&mut self) -> Result<String, ArchiveError> {
        self.line += 1;
        match self.inner.next() {
            Some(l) => Ok(l?),
            None => Err(self.error("unexpected end of archive")),
        }
    }

    fn error(&self, message: impl Into<String>) -> ArchiveError {
        ArchiveError::Format {
            line: self.line,
            message: message.into(),
        }
    }

    fn field(&mut self, key: &str) -> Result<String, ArchiveError> {
        let l = self.next()?;
        match l.strip_prefix(key).and_then(|r| r.strip_prefix(' ')) {
            Some(rest) => Ok(rest.to_string()),
            None => Err(self.error(format!("expected `{key} ...`"))),
        }
    }

    fn number<T: std::str::FromStr>(&self, tok: &str) -> Result<T, ArchiveError> {
        if tok.is_empty() || (tok.len() > 1 && tok.starts_with('0')) {
            return Err(self.error(format!("bad number {tok:?}")));
        }
        tok.parse().map_err(|_| self.error(format!("bad number {tok:?}")))
    }
}

pub fn read_archive<R: BufRead>(reader: R) -> Result<Classification, ArchiveError> {
    let mut lines = Lines {
        inner: reader.lines(),
        line: 0,
    };
    let version = lines.field("version")?;
    if version != VERSION.to_string() {
        return Err(lines.error(format!("unsupported version {version:?}")));
    }
    let dim_text = lines.field("dim")?;
    let dim: usize = lines.number(&dim_text)?;
    if !(1..=16).contains(&dim) {
        return Err(lines.error(format!("bad dimension {dim}")));
    }
    let anf = lines.field("anf")?;
    let count_text = lines.field("graphs")?;
    let count: usize = lines.number(&count_text)?;
    let mut graphs = Vec::with_capacity(count);
    for i in 0..count {
        let l = lines.next()?;
        let (idx, g6) = l
            .split_once(' ')
            .ok_or_else(|| lines.error("expected `<index> <graph6>`"))?;
        if lines.number::<usize>(idx)? != i {
            return Err(lines.error(format!("expected graph index {i}")));
        }
        if g6.is_empty() || g6.contains(' ') {
            return Err(lines.error("bad graph6 string"));
        }
        graphs.push(g6.to_string());
    }
    let side = 1usize << dim;
    let mut matrices: Vec<Vec<u32>> = Vec::new();
    for (name, _) in SECTIONS {
        let header = lines.field("matrix")?;
        if header != format!("{name} {side} {side}") {
            return Err(lines.error(format!("expected `matrix {name} {side} {side}`")));
        }
        let mut values = Vec::with_capacity(side * side);
        for _ in 0..side {
            let l = lines.next()?;
            let before = values.len();
            for tok in l.split(' ') {
                values.push(lines.number::<u32>(tok)?);
            }
            if values.len() - before != side {
                return Err(lines.error(format!("expected {side} entries")));
            }
        }
        matrices.push(values);
    }
    if lines.next()? != "end" {
        return Err(lines.error("expected `end`"));
    }
    if let Some(extra) = lines.inner.next() {
        extra?;
        lines.line += 1;
        return Err(lines.error("trailing data after `end`"));
    }
    let wc = matrices.pop().expect("three sections");
    if let Some(&w) = wc.iter().find(|&&w| w > 1) {
        return Err(ArchiveError::Invalid(bentgraph_core::Error::InvalidArgument(format!(
            "weight class {w}"
        ))));
    }
    let wc = wc.into_iter().map(|w| w as u8).collect();
    let dual = matrices.pop().expect("three sections");
    let bent = matrices.pop().expect("three sections");
    Ok(Classification::from_parts(anf, dim, graphs, bent, dual, wc)?)
}
