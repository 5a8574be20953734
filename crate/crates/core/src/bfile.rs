//! OEIS b-files: one `"<n> <value>"` line per term, newline-terminated.

use std::fs;
use std::io::Write;
use std::path::Path;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::recfit::TermTable;

/// Writes the table in b-file form.
pub fn write_bfile<W: Write>(mut out: W, terms: &TermTable) -> std::io::Result<()> {
    for (n, v) in terms.iter() {
        writeln!(out, "{n} {v}")?;
    }
    Ok(())
}

pub fn to_bfile_string(terms: &TermTable) -> String {
    let mut buf = Vec::new();
    write_bfile(&mut buf, terms).expect("writing to memory");
    String::from_utf8(buf).expect("b-files are ASCII")
}

/// Parses a b-file. Blank lines and `#` comments are skipped; indices must
/// be consecutive.
pub fn parse_bfile(text: &str) -> Result<TermTable> {
    let mut offset = None;
    let mut values = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut fields = content.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::Parse {
                line,
                msg: format!("expected \"<n> <value>\", found {content:?}"),
            });
        };
        let idx: i64 = idx.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("bad index {idx:?}"),
        })?;
        let val: BigInt = val.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("bad value {val:?}"),
        })?;
        let start = *offset.get_or_insert(idx);
        let expected = start + values.len() as i64;
        if idx != expected {
            return Err(Error::Parse {
                line,
                msg: format!("index {idx} out of sequence, expected {expected}"),
            });
        }
        values.push(val);
    }
    match offset {
        Some(offset) => TermTable::new(offset, values),
        None => Err(Error::Parse {
            line: text.lines().count().max(1),
            msg: "no terms found".into(),
        }),
    }
}

pub fn read_bfile(path: &Path) -> Result<TermTable> {
    parse_bfile(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_oeis_lines() {
        let t = TermTable::new(1, vec![1.into(), 0.into(), BigInt::from(-14)]).unwrap();
        assert_eq!(to_bfile_string(&t), "1 1\n2 0\n3 -14\n");
    }

    #[test]
    fn tolerates_comments_and_blanks() {
        let t = parse_bfile("# A002464\n\n0 1\n1 1\n2 0\n").unwrap();
        assert_eq!(t.offset(), 0);
        assert_eq!(t.len(), 3);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_bfile("1 1\n2 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_bfile("1 1\n3 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_bfile("1 1\n2 3 4\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(parse_bfile("\n# nothing\n").is_err());
    }
}
