//! The `cmat` text format.
//!
//! ```text
//! cmat 2
//! 0 1
//! 0+0.5i -2e-3
//! ```
//!
//! A header `cmat <n>`, then `n` rows of `n` whitespace-separated entries.
//! An entry is `<real>` or `<real><sign><imag>i` with no interior spaces;
//! both parts are decimal literals with an optional exponent. Blank lines
//! after the last row are ignored; anything else is an error.
//!
//! [`format_matrix`] writes each part with Rust's shortest round-trip
//! representation, so `parse_matrix(format_matrix(m)) == m` bit for bit,
//! signed zeros included.

use std::fmt::Write as _;

use nilcert_core::{Complex64, ComplexMatrix};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected header `cmat <n>`")]
    BadHeader,
    #[error("matrix order must be a positive integer, got `{0}`")]
    BadOrder(String),
    #[error("row {row} expects {expected} entries, found {found}")]
    WrongCount { row: usize, expected: usize, found: usize },
    #[error("expected {expected} rows, found {found}")]
    MissingRows { expected: usize, found: usize },
    #[error("unexpected content after the last row")]
    TrailingContent,
    #[error("malformed entry `{0}`")]
    Malformed(String),
    #[error("entry `{0}` is not finite")]
    NonFinite(String),
}

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

/// Length of the decimal literal at the start of `s` (optional leading sign
/// only if `signed`), or `None` if there is none.
fn decimal_len(s: &[u8], signed: bool) -> Option<usize> {
    let mut i = 0;
    if signed && matches!(s.first(), Some(b'+' | b'-')) {
        i += 1;
    }
    let int_start = i;
    while s.get(i).is_some_and(u8::is_ascii_digit) {
        i += 1;
    }
    let mut digits = i - int_start;
    if s.get(i) == Some(&b'.') {
        i += 1;
        let frac_start = i;
        while s.get(i).is_some_and(u8::is_ascii_digit) {
            i += 1;
        }
        digits += i - frac_start;
    }
    if digits == 0 {
        return None;
    }
    if matches!(s.get(i), Some(b'e' | b'E')) {
        let mut j = i + 1;
        if matches!(s.get(j), Some(b'+' | b'-')) {
            j += 1;
        }
        let exp_start = j;
        while s.get(j).is_some_and(u8::is_ascii_digit) {
            j += 1;
        }
        if j == exp_start {
            return None;
        }
        i = j;
    }
    Some(i)
}

/// Parses one entry token.
pub fn parse_scalar(token: &str) -> Result<Complex64, ParseErrorKind> {
    let malformed = || ParseErrorKind::Malformed(token.to_string());
    let bytes = token.as_bytes();
    let re_len = decimal_len(bytes, true).ok_or_else(malformed)?;
    let re: f64 = token[..re_len].parse().map_err(|_| malformed())?;
    let im = if re_len == bytes.len() {
        0.0
    } else {
        let sign = match bytes[re_len] {
            b'+' => 1.0,
            b'-' => -1.0,
            _ => return Err(malformed()),
        };
        let rest = &bytes[re_len + 1..];
        let im_len = decimal_len(rest, false).ok_or_else(malformed)?;
        if &rest[im_len..] != b"i" {
            return Err(malformed());
        }
        let start = re_len + 1;
        let magnitude: f64 = token[start..start + im_len].parse().map_err(|_| malformed())?;
        sign * magnitude
    };
    if !re.is_finite() || !im.is_finite() {
        return Err(ParseErrorKind::NonFinite(token.to_string()));
    }
    Ok(Complex64::new(re, im))
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace()
        .map(move |tok| (tok.as_ptr() as usize - line.as_ptr() as usize + 1, tok))
}

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));

    let (header_line, header) = lines.next().unwrap_or((1, ""));
    let head: Vec<(usize, &str)> = tokens(header).collect();
    let n = match head.as_slice() {
        [(_, "cmat"), (col, order)] => match order.parse::<usize>() {
            Ok(n) if n > 0 => n,
            _ => return Err(err(header_line, *col, ParseErrorKind::BadOrder(order.to_string()))),
        },
        _ => return Err(err(header_line, 1, ParseErrorKind::BadHeader)),
    };

    let mut data = Vec::with_capacity(n * n);
    let mut last_line = header_line;
    for row in 1..=n {
        let Some((line_no, line)) = lines.next() else {
            return Err(err(
                last_line + 1,
                1,
                ParseErrorKind::MissingRows {
                    expected: n,
                    found: row - 1,
                },
            ));
        };
        last_line = line_no;
        let entries: Vec<(usize, &str)> = tokens(line).collect();
        if entries.len() != n {
            let column = entries.get(n).map_or(line.len() + 1, |(c, _)| *c);
            return Err(err(
                line_no,
                column,
                ParseErrorKind::WrongCount {
                    row,
                    expected: n,
                    found: entries.len(),
                },
            ));
        }
        for (column, tok) in entries {
            data.push(parse_scalar(tok).map_err(|kind| err(line_no, column, kind))?);
        }
    }
    if let Some((line_no, line)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        let column = tokens(line).next().map_or(1, |(c, _)| c);
        return Err(err(line_no, column, ParseErrorKind::TrailingContent));
    }
    Ok(ComplexMatrix::from_row_major(n, data).expect("n*n finite entries"))
}

fn write_scalar(out: &mut String, z: Complex64) {
    // Debug gives the shortest string that parses back to the same bits.
    write!(out, "{:?}", z.re).unwrap();
    if z.im.to_bits() != 0 {
        let sign = if z.im.is_sign_negative() { '-' } else { '+' };
        write!(out, "{sign}{:?}i", z.im.abs()).unwrap();
    }
}

pub fn format_matrix(m: &ComplexMatrix) -> String {
    let n = m.order();
    let mut out = format!("cmat {n}\n");
    for row in m.rows() {
        for (j, z) in row.iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            write_scalar(&mut out, *z);
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("2"), Ok(c(2.0, 0.0)));
        assert_eq!(parse_scalar("-3.5"), Ok(c(-3.5, 0.0)));
        assert_eq!(parse_scalar("1e-3"), Ok(c(1e-3, 0.0)));
        assert_eq!(parse_scalar("0+1i"), Ok(c(0.0, 1.0)));
        assert_eq!(parse_scalar("2-0.5i"), Ok(c(2.0, -0.5)));
        assert_eq!(parse_scalar("1e-3+2E+2i"), Ok(c(1e-3, 200.0)));
        assert_eq!(parse_scalar(".5"), Ok(c(0.5, 0.0)));
        assert_eq!(parse_scalar("5."), Ok(c(5.0, 0.0)));
    }

    #[test]
    fn rejected_scalars() {
        for bad in [
            "", "i", "1i", "+i", "1+i", "1+-2i", "1+2", "1+2j", "1e", "nan", "inf", "1 ", "--1", "1+2ii", ".",
        ] {
            assert!(
                matches!(parse_scalar(bad), Err(ParseErrorKind::Malformed(_))),
                "{bad:?}"
            );
        }
        assert_eq!(parse_scalar("1e400"), Err(ParseErrorKind::NonFinite("1e400".into())));
        assert_eq!(
            parse_scalar("0-1e999i"),
            Err(ParseErrorKind::NonFinite("0-1e999i".into()))
        );
    }

    #[test]
    fn jordan_block() {
        let m = parse_matrix("cmat 2\n0 1\n0 0\n").unwrap();
        assert_eq!(m, ComplexMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]]).unwrap());
    }

    #[test]
    fn imaginary_unit() {
        let m = parse_matrix("cmat 1\n0+1i\n").unwrap();
        assert_eq!(m.get(0, 0), c(0.0, 1.0));
    }

    #[test]
    fn short_row() {
        let e = parse_matrix("cmat 2\n0 1\n0\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(
            e.kind,
            ParseErrorKind::WrongCount {
                row: 2,
                expected: 2,
                found: 1
            }
        );
        assert!(e.to_string().contains("row 2 expects 2 entries"));
    }

    #[test]
    fn positions() {
        let e = parse_matrix("cmat 2\n0   1x\n0 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        let e = parse_matrix("cmat 2\n0 1 2\n0 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        let e = parse_matrix("cmat 2\n0 1\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MissingRows { expected: 2, found: 1 });
        let e = parse_matrix("cmat 1\n1\n\n  2\n").unwrap_err();
        assert_eq!((e.line, e.column, e.kind), (4, 3, ParseErrorKind::TrailingContent));
        assert_eq!(parse_matrix("mat 1\n1\n").unwrap_err().kind, ParseErrorKind::BadHeader);
        assert_eq!(parse_matrix("").unwrap_err().kind, ParseErrorKind::BadHeader);
        assert_eq!(
            parse_matrix("cmat 0\n").unwrap_err().kind,
            ParseErrorKind::BadOrder("0".into())
        );
        assert_eq!(
            parse_matrix("cmat 1\ninf\n").unwrap_err().kind,
            ParseErrorKind::Malformed("inf".into())
        );
    }

    #[test]
    fn trailing_blank_lines_and_crlf() {
        let m = parse_matrix("cmat 1\r\n3\r\n\r\n\n").unwrap();
        assert_eq!(m.get(0, 0), c(3.0, 0.0));
    }

    #[test]
    fn round_trip_edge_values() {
        let m = ComplexMatrix::from_row_major(
            2,
            vec![
                c(-0.0, -0.0),
                c(f64::MIN_POSITIVE / 8.0, f64::MAX),
                c(0.1, 1e-300),
                c(-1e22, 0.0),
            ],
        )
        .unwrap();
        let text = format_matrix(&m);
        let back = parse_matrix(&text).unwrap();
        for (a, b) in m.as_slice().iter().zip(back.as_slice()) {
            assert_eq!(a.re.to_bits(), b.re.to_bits(), "{text}");
            assert_eq!(a.im.to_bits(), b.im.to_bits(), "{text}");
        }
    }
}
