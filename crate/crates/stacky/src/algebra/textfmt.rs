//! Plain-text group format.
//!
//! ```text
//! perm 5
//! (0 1 2 3 4)
//! (0 1 2)
//! ```
//!
//! or `table <n>` followed by `n` rows of `n` whitespace-separated indices.
//! Blank lines and lines starting with `#` are ignored.

use super::group::FiniteGroup;
use super::perm::Perm;
use crate::error::{Error, Result};
use crate::limits::Limits;

pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    parse_group_with(text, &Limits::default())
}

pub fn parse_group_with(text: &str, limits: &Limits) -> Result<FiniteGroup> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::invalid("empty group text"))?;
    let mut words = header.split_whitespace();
    let kind = words.next().unwrap_or_default();
    let size: usize = words
        .next()
        .and_then(|w| w.parse().ok())
        .ok_or_else(|| Error::invalid(format!("header {header:?} needs a size")))?;
    match kind {
        "perm" => {
            let gens = lines.map(|l| Perm::parse_cycles(l, size)).collect::<Result<Vec<_>>>()?;
            if gens.is_empty() {
                return Ok(FiniteGroup::trivial());
            }
            FiniteGroup::from_permutations_bounded(size, &gens, limits.max_group_order)
        }
        "table" => {
            let rows = lines
                .map(|l| {
                    l.split_whitespace()
                        .map(|w| w.parse::<usize>().map_err(|_| Error::invalid(format!("bad table entry {w:?}"))))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            if rows.len() != size {
                return Err(Error::invalid(format!("table header says {size} rows, found {}", rows.len())));
            }
            FiniteGroup::from_table(rows)
        }
        other => Err(Error::invalid(format!("unknown group format {other:?}; expected perm or table"))),
    }
}

/// Permutation form when generators are known, else the Cayley table.
pub fn format_group(g: &FiniteGroup) -> String {
    match g.perm_generators() {
        Some((degree, gens)) => {
            let mut out = format!("perm {degree}\n");
            for p in gens {
                out.push_str(&format!("{p}\n"));
            }
            out
        }
        None => {
            let mut out = format!("table {}\n", g.order());
            for row in g.table_rows() {
                let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                out.push_str(&cells.join(" "));
                out.push('\n');
            }
            out
        }
    }
}
