//! The MPX text format for flag graphs.
//!
//! ```text
//! mpx <rank> <flag_count>
//! <adj[0][0]> ... <adj[0][rank-1]>
//! ...
//! name <label>        (optional, last)
//! ```
//!
//! `#` starts a comment that runs to the end of the line. Blank lines are
//! ignored, so a rank-0 file consists of its header alone.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::maniplex::Maniplex;

pub fn read_mpx(text: &str) -> Result<Maniplex> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());

    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, 1, "empty input"))?;
    let head = tokens(header);
    if head.first().map(|t| t.1) != Some("mpx") {
        let column = head.first().map_or(1, |t| t.0);
        return Err(Error::parse(hline, column, "expected header `mpx <rank> <flag_count>`"));
    }
    if head.len() != 3 {
        return Err(Error::parse(hline, 1, "header must be `mpx <rank> <flag_count>`"));
    }
    let rank = number(hline, head[1])?;
    let flag_count = number(hline, head[2])?;

    let mut adj = Vec::with_capacity(rank * flag_count);
    let mut rows = 0;
    let mut name = None;
    for (lineno, line) in lines {
        let toks = tokens(line);
        if toks[0].1 == "name" {
            if name.is_some() {
                return Err(Error::parse(lineno, toks[0].0, "duplicate name line"));
            }
            let label = line.trim_start()["name".len()..].trim();
            name = Some(label.to_string());
            continue;
        }
        if name.is_some() {
            return Err(Error::parse(lineno, toks[0].0, "name line must come last"));
        }
        if rows == flag_count || rank == 0 {
            return Err(Error::parse(lineno, toks[0].0, format!("more than {flag_count} flag rows")));
        }
        if toks.len() != rank {
            return Err(Error::parse(
                lineno,
                toks.get(rank).map_or(1, |t| t.0),
                format!("expected {rank} entries for flag {rows}, found {}", toks.len()),
            ));
        }
        for tok in toks {
            let value = number(lineno, tok)?;
            if value >= flag_count {
                return Err(Error::parse(
                    lineno,
                    tok.0,
                    format!("flag {value} out of range for {flag_count} flags"),
                ));
            }
            adj.push(value);
        }
        rows += 1;
    }
    if rank > 0 && rows != flag_count {
        return Err(Error::parse(
            text.lines().count().max(1),
            1,
            format!("expected {flag_count} flag rows, found {rows}"),
        ));
    }
    let mut m = Maniplex::from_table(rank, flag_count, adj)?;
    m.set_name(name);
    Ok(m)
}

/// Serializes `m`; `read_mpx(&write_mpx(m)) == m`.
pub fn write_mpx(m: &Maniplex) -> String {
    let mut out = String::with_capacity(m.table().len() * 4 + 32);
    let _ = writeln!(out, "mpx {} {}", m.rank(), m.flag_count());
    if m.rank() > 0 {
        for f in 0..m.flag_count() {
            let row: Vec<String> = m.row(f).iter().map(ToString::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    if let Some(name) = m.name() {
        let label: String = name.chars().map(|c| if c == '\n' || c == '#' { ' ' } else { c }).collect();
        let _ = writeln!(out, "name {}", label.trim());
    }
    out
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain([(line.len(), ' ')]) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn number(line: usize, (column, tok): (usize, &str)) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, column, format!("expected a non-negative integer, found `{tok}`")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;

    #[test]
    fn cube_roundtrip() {
        let cube = builders::hypercube(3).unwrap();
        let text = write_mpx(&cube);
        assert!(text.starts_with("mpx 3 48\n"));
        assert!(text.ends_with("name cube\n"));
        assert_eq!(read_mpx(&text).unwrap(), cube);
    }

    #[test]
    fn exact_layout() {
        let seg = builders::point_segment();
        assert_eq!(write_mpx(&seg), "mpx 1 2\n1\n0\nname segment\n");
        assert_eq!(write_mpx(&Maniplex::point()), "mpx 0 1\nname point\n");
        assert_eq!(read_mpx("mpx 0 1\nname point\n").unwrap(), Maniplex::point());
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a segment\nmpx 1 2   # header\n\n1\n0 # back\n";
        let m = read_mpx(text).unwrap();
        assert_eq!(m.flag_count(), 2);
        assert_eq!(m.name(), None);
    }

    #[test]
    fn non_involutive_entry_names_flag_and_color() {
        let err = read_mpx("mpx 1 3\n1\n2\n1\n").unwrap_err();
        assert_eq!(
            err,
            Error::NotInvolution {
                flag: 0,
                color: 0,
                image: 1,
                back: 2
            }
        );
        assert!(err.to_string().contains("color 0") && err.to_string().contains("flag 0"));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(read_mpx(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(read_mpx("mxp 1 2\n"), Err(Error::Parse { line: 1, column: 1, .. })));
        assert!(matches!(read_mpx("mpx 1 2\n1\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            read_mpx("mpx 2 2\n1 x\n0 0\n"),
            Err(Error::Parse { line: 2, column: 3, .. })
        ));
        assert!(matches!(
            read_mpx("mpx 1 2\n1\n0\n1\n"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(
            read_mpx("mpx 1 2\n1\nname x\n0\n"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(
            read_mpx("mpx 1 2\n1\n7\n"),
            Err(Error::Parse { line: 3, column: 1, .. })
        ));
    }
}
