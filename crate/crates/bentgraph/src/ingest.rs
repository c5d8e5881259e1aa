//! CAST-128 S-box tables in RFC 2144 layout.
//!
//! A line is a data line when its first token looks like a hex word; every
//! token on a data line must then be exactly eight hex digits (an optional
//! `0x` prefix and trailing comma are tolerated). Lines of the form
//! `S-Box S<k>` start table `k`. Without any such heading the input is read
//! as one flat list of 2048 words, split into tables of 256. Everything else
//! (titles, page headers, blank lines) is skipped.

use bentgraph_core::BooleanFunction;

pub const TABLES: usize = 8;
pub const TABLE_LEN: usize = 256;

/// The eight S-boxes S1..S8.
pub type SBoxes = [[u32; TABLE_LEN]; TABLES];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IngestError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("S-box S{table} has {found} entries, expected 256")]
    Count { table: usize, found: usize },
    #[error("{what} {value} out of range {range}")]
    Range {
        what: &'static str,
        value: usize,
        range: &'static str,
    },
}

fn strip_token(tok: &str) -> &str {
    let tok = tok.strip_suffix(',').unwrap_or(tok);
    tok.strip_prefix("0x")
        .or_else(|| tok.strip_prefix("0X"))
        .unwrap_or(tok)
}

fn looks_like_data(tok: &str) -> bool {
    let t = strip_token(tok);
    t.len() >= 5 && t.bytes().all(|b| b.is_ascii_hexdigit())
}

fn heading(line: &str) -> Option<&str> {
    let mut toks = line.split_whitespace();
    let first = toks.next()?;
    if !first.eq_ignore_ascii_case("s-box") {
        return None;
    }
    Some(toks.next().unwrap_or(""))
}

/// Tokens of a line together with their 1-based byte columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace()
        .map(move |t| (t.as_ptr() as usize - line.as_ptr() as usize + 1, t))
}

pub fn parse_cast128_sboxes(text: &str) -> Result<SBoxes, IngestError> {
    let headed = text.lines().any(|l| heading(l).is_some());
    let mut tables: Vec<Vec<u32>> = vec![Vec::new(); TABLES];
    let mut flat = Vec::new();
    let mut current: Option<usize> = None;
    let mut seen = [false; TABLES];

    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        if let Some(name) = heading(line) {
            let k = name
                .strip_prefix(['S', 's'])
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|k| (1..=TABLES).contains(k))
                .ok_or_else(|| IngestError::Parse {
                    line: lineno,
                    column: line.find(name).map_or(1, |c| c + 1),
                    message: format!("bad S-box name {name:?}"),
                })?;
            if seen[k - 1] {
                return Err(IngestError::Parse {
                    line: lineno,
                    column: 1,
                    message: format!("duplicate table S{k}"),
                });
            }
            seen[k - 1] = true;
            current = Some(k - 1);
            continue;
        }
        let Some((_, first)) = tokens(line).next() else {
            continue;
        };
        if !looks_like_data(first) {
            continue;
        }
        let target = if headed {
            let Some(k) = current else {
                return Err(IngestError::Parse {
                    line: lineno,
                    column: 1,
                    message: "data before the first S-box heading".into(),
                });
            };
            &mut tables[k]
        } else {
            &mut flat
        };
        for (column, tok) in tokens(line) {
            let t = strip_token(tok);
            if t.len() != 8 {
                return Err(IngestError::Parse {
                    line: lineno,
                    column,
                    message: format!("expected 8 hex digits, found {tok:?}"),
                });
            }
            let value = u32::from_str_radix(t, 16).map_err(|_| IngestError::Parse {
                line: lineno,
                column,
                message: format!("invalid hex word {tok:?}"),
            })?;
            target.push(value);
        }
    }

    if !headed {
        if flat.len() != TABLES * TABLE_LEN {
            let table = (flat.len() / TABLE_LEN + 1).min(TABLES);
            return Err(IngestError::Count {
                table,
                found: flat.len() - (table - 1) * TABLE_LEN,
            });
        }
        for (k, chunk) in flat.chunks(TABLE_LEN).enumerate() {
            tables[k] = chunk.to_vec();
        }
    }

    let mut out = [[0u32; TABLE_LEN]; TABLES];
    for (k, table) in tables.iter().enumerate() {
        if table.len() != TABLE_LEN {
            return Err(IngestError::Count {
                table: k + 1,
                found: table.len(),
            });
        }
        out[k].copy_from_slice(table);
    }
    Ok(out)
}

/// `f(i)` = bit `bit` (coefficient of `2^bit`) of entry `i` of box `sbox` (1-based).
pub fn sbox_bit_function(tables: &SBoxes, sbox: usize, bit: usize) -> Result<BooleanFunction, IngestError> {
    if !(1..=TABLES).contains(&sbox) {
        return Err(IngestError::Range {
            what: "S-box",
            value: sbox,
            range: "1..=8",
        });
    }
    if bit >= 32 {
        return Err(IngestError::Range {
            what: "bit",
            value: bit,
            range: "0..=31",
        });
    }
    let table = &tables[sbox - 1];
    Ok(BooleanFunction::from_fn(8, |i| (table[i] >> bit) & 1 == 1))
}
