//! Text formats.
//!
//! * `.lhc`: header `LHC <n> <q>`, then `q^n` whitespace-separated symbols
//!   in index order (`x_1` most significant). `#` starts a comment.
//! * Orientation functions: a string of `2^n` bits indexed by the Boolean
//!   vector read big-endian, optionally preceded by `LAMBDA <n>`.
//! * Transversals: one per line, cells as `(x0,x1,...,xn)` sorted by `x0`.

use std::fmt::Write as _;
use std::path::Path;

use lhc_core::semilinear::BooleanFn;
use lhc_core::{LatinHypercube, Transversal};

use crate::{Error, ParseError, Result};

struct Token<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

/// Whitespace-separated words with positions, comments dropped.
fn tokens(text: &str) -> impl Iterator<Item = Token<'_>> {
    text.lines().enumerate().flat_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let mut out = Vec::new();
        let mut start = None;
        for (pos, ch) in line
            .char_indices()
            .chain(std::iter::once((line.len(), ' ')))
        {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    out.push(Token {
                        line: i + 1,
                        column: line[..s].chars().count() + 1,
                        text: &line[s..pos],
                    });
                    start = None;
                }
                _ => {}
            }
        }
        out
    })
}

fn end_position(text: &str) -> (usize, usize) {
    let line = text.lines().count().max(1);
    let column = text.lines().last().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn number(tok: &Token<'_>, what: &str) -> Result<usize, ParseError> {
    tok.text.parse().map_err(|_| {
        ParseError::new(
            tok.line,
            tok.column,
            format!("expected {what}, found `{}`", tok.text),
        )
    })
}

pub fn parse_lhc(text: &str) -> Result<LatinHypercube, ParseError> {
    let mut toks = tokens(text);
    let eof = |what: &str| {
        let (l, c) = end_position(text);
        ParseError::new(l, c, format!("unexpected end of input, expected {what}"))
    };
    let magic = toks.next().ok_or_else(|| eof("`LHC` header"))?;
    if magic.text != "LHC" {
        return Err(ParseError::new(
            magic.line,
            magic.column,
            "expected `LHC` header",
        ));
    }
    let n_tok = toks.next().ok_or_else(|| eof("arity"))?;
    let n = number(&n_tok, "arity")?;
    let q_tok = toks.next().ok_or_else(|| eof("order"))?;
    let q = number(&q_tok, "order")?;
    let len = lhc_core::hypercube::cell_count(n, q)
        .map_err(|e| ParseError::new(n_tok.line, n_tok.column, e.to_string()))?;
    let mut values = Vec::with_capacity(len);
    for tok in toks {
        if values.len() == len {
            return Err(ParseError::new(
                tok.line,
                tok.column,
                format!("too many symbols: a cube with n = {n}, q = {q} has {len}"),
            ));
        }
        let v = number(&tok, "a symbol")?;
        if v >= q {
            return Err(ParseError::new(
                tok.line,
                tok.column,
                format!("symbol {v} is not below the order {q}"),
            ));
        }
        values.push(v as u8);
    }
    if values.len() != len {
        let (l, c) = end_position(text);
        return Err(ParseError::new(
            l,
            c,
            format!("expected {len} symbols, found {}", values.len()),
        ));
    }
    Ok(LatinHypercube::new(n, q, values).expect("checked above"))
}

/// Canonical rendering: one line per row along `x_n`, blank lines between
/// the 2-dimensional layers.
pub fn serialize_lhc(cube: &LatinHypercube) -> String {
    let (n, q) = (cube.arity(), cube.order());
    let mut out = format!("LHC {n} {q}\n");
    for (r, row) in cube.values().chunks(q).enumerate() {
        if n >= 3 && r > 0 && r % q == 0 {
            out.push('\n');
        }
        let line: Vec<String> = row.iter().map(u8::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_lambda(text: &str) -> Result<BooleanFn, ParseError> {
    let toks: Vec<Token<'_>> = tokens(text).collect();
    let (declared, body) = match toks.first() {
        Some(t) if t.text == "LAMBDA" => {
            let n_tok = toks
                .get(1)
                .ok_or_else(|| ParseError::new(t.line, t.column, "`LAMBDA` needs an arity"))?;
            (Some(number(n_tok, "arity")?), &toks[2..])
        }
        _ => (None, &toks[..]),
    };
    let mut bits = String::new();
    for tok in body {
        if let Some((off, ch)) = tok
            .text
            .char_indices()
            .find(|(_, c)| !matches!(c, '0' | '1'))
        {
            return Err(ParseError::new(
                tok.line,
                tok.column + off,
                format!("unexpected `{ch}` in a bit string"),
            ));
        }
        bits.push_str(tok.text);
    }
    let (line, column) = body
        .first()
        .map_or_else(|| end_position(text), |t| (t.line, t.column));
    if let Some(n) = declared {
        if n == 0 || n > 24 || bits.len() != 1 << n {
            return Err(ParseError::new(
                line,
                column,
                format!(
                    "arity {n} needs {} bits, found {}",
                    1u64 << n.min(40),
                    bits.len()
                ),
            ));
        }
    }
    bits.parse()
        .map_err(|e: lhc_core::Error| ParseError::new(line, column, e.to_string()))
}

pub fn serialize_lambda(lambda: &BooleanFn) -> String {
    format!("LAMBDA {}\n{}\n", lambda.arity(), lambda)
}

pub fn format_transversal(t: &Transversal) -> String {
    let mut out = String::new();
    for (i, cell) in t.cells().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push('(');
        for (k, s) in cell.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            write!(out, "{s}").unwrap();
        }
        out.push(')');
    }
    out
}

pub fn parse_transversal(line: &str) -> Result<Transversal, ParseError> {
    let mut cells: Vec<Vec<u8>> = Vec::new();
    let mut rest = line.trim_start();
    while !rest.is_empty() {
        let column = line.len() - rest.len() + 1;
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| ParseError::new(1, column, "expected a `(x0,...,xn)` cell"))?;
        let cell = inner
            .0
            .split(',')
            .map(|s| s.trim().parse::<u8>())
            .collect::<Result<Vec<u8>, _>>()
            .map_err(|_| ParseError::new(1, column, "cell entries must be small integers"))?;
        cells.push(cell);
        rest = inner.1.trim_start();
    }
    let width = cells.first().map_or(0, Vec::len);
    Transversal::from_cells(width, &cells).map_err(|e| ParseError::new(1, 1, e.to_string()))
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Parses a `.lhc` file without checking the latin property.
pub fn read_lhc(path: &Path) -> Result<LatinHypercube> {
    parse_lhc(&read_text(path)?).map_err(|e| Error::at(path, e))
}

/// Parses a `.lhc` file and rejects it unless it is latin.
pub fn load_cube(path: &Path) -> Result<LatinHypercube> {
    let cube = read_lhc(path)?;
    if !cube.is_latin() {
        return Err(Error::Core(lhc_core::Error::NotLatin));
    }
    Ok(cube)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_permutation() {
        let cube = parse_lhc("LHC 1 2\n0 1").unwrap();
        assert_eq!(cube.values(), &[0, 1]);
        assert_eq!(serialize_lhc(&cube), "LHC 1 2\n0 1\n");
    }

    #[test]
    fn round_trip_is_canonical() {
        let text = "# comment\r\nLHC 3 2\r\n0 1 1 0 1 0 0 1\r\n";
        let cube = parse_lhc(text).unwrap();
        let canonical = serialize_lhc(&cube);
        assert_eq!(canonical, "LHC 3 2\n0 1\n1 0\n\n1 0\n0 1\n");
        assert_eq!(parse_lhc(&canonical).unwrap(), cube);
    }

    #[test]
    fn errors_carry_positions() {
        let short = parse_lhc("LHC 2 2\n0 1 1").unwrap_err();
        assert!(
            short.message.contains("expected 4 symbols, found 3"),
            "{short}"
        );
        assert_eq!(
            parse_lhc("LHC 2 2\n0 1\n1 x").unwrap_err(),
            ParseError::new(3, 3, "expected a symbol, found `x`")
        );
        assert_eq!(parse_lhc("LHC 2 2\n0 2 1 0").unwrap_err().column, 3);
        assert_eq!(parse_lhc("LHC 1 2\n0 1 0").unwrap_err().column, 5);
        assert_eq!(parse_lhc("LHD 1 2").unwrap_err().line, 1);
        assert!(parse_lhc("LHC 1 9\n0 1 2 3 4 5 6 7 8").is_err());
    }

    #[test]
    fn lambda_format() {
        let lambda = parse_lambda("LAMBDA 2\n01 11 # comment").unwrap();
        assert_eq!(lambda.to_string(), "0111");
        assert_eq!(parse_lambda(&serialize_lambda(&lambda)).unwrap(), lambda);
        assert_eq!(parse_lambda("0110").unwrap().arity(), 2);
        assert!(parse_lambda("LAMBDA 3\n0110").is_err());
        assert!(parse_lambda("012").is_err());
        assert!(parse_lambda("011").is_err());
    }

    #[test]
    fn transversal_lines() {
        let t = Transversal::from_cells(3, [[1u8, 1, 0], [0, 0, 0]]).unwrap();
        let line = format_transversal(&t);
        assert_eq!(line, "(0,0,0) (1,1,0)");
        assert_eq!(parse_transversal(&line).unwrap(), t);
        assert!(parse_transversal("(0,0) 1").is_err());
    }
}
