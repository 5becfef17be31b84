//! Ideal and point files.
//!
//! An ideal file holds `n=<int>`, an optional `field=q|fp:<prime>` and a
//! `gens:` line whose comma-separated generators may continue on the
//! following lines:
//!
//! ```text
//! n=3
//! field=fp:32003
//! gens: x1^3, x2^3,
//!       x3^3
//! ```
//!
//! A point file holds `n=<int>`, optional `field=` and `e=<int>` lines and
//! then one point per line, coordinates separated by spaces or commas,
//! each an integer or a fraction `a/b`. `#` starts a comment in both.

use std::path::Path;

use leflab_core::poly::parse_polynomial_at;
use leflab_core::{Error, Field, FieldSpec, Polynomial, Result};
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};
use crate::with_field;

/// One generator as written, with its 1-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorText {
    pub text: String,
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub n: usize,
    pub field: FieldSpec,
    pub generators: Vec<GeneratorText>,
}

impl IdealFile {
    /// Parses the generators over `field`, rejecting inhomogeneous ones.
    pub fn polynomials<F: Field>(&self, field: &F) -> Result<Vec<Polynomial<F>>> {
        self.generators
            .iter()
            .enumerate()
            .map(|(k, g)| {
                let p = parse_polynomial_at(field, self.n, &g.text, g.line, g.column)?;
                if !p.is_homogeneous() {
                    return Err(Error::NonHomogeneousGenerator { index: k });
                }
                Ok(p)
            })
            .collect()
    }

    /// Hex SHA-256 of the generators as written.
    pub fn digest(&self) -> String {
        digest_lines(self.generators.iter().map(|g| g.text.as_str()))
    }
}

pub(crate) fn digest_lines<'a>(lines: impl Iterator<Item = &'a str>) -> String {
    let mut h = Sha256::new();
    for l in lines {
        h.update(l.trim().as_bytes());
        h.update(b"\n");
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// A `key=value` header line, if the line is one.
fn header<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    let (k, v) = line.split_once('=')?;
    (k.trim() == key).then(|| v.trim())
}

fn parse_count(value: &str, line: usize, what: &str) -> Result<usize> {
    value
        .parse()
        .map_err(|_| parse_error(line, 1, format!("{what} must be a non-negative integer, found {value:?}")))
}

fn parse_field(value: &str, line: usize) -> Result<FieldSpec> {
    value.parse().map_err(|e: Error| match e {
        Error::InvalidModulus(_) => e,
        _ => parse_error(line, 1, format!("unknown field {value:?}")),
    })
}

/// Splits `text` at top-level commas; yields pieces with their starting
/// 1-based column offset by `start`.
fn split_generators(text: &str, start: usize) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut begin = 0;
    let chars: Vec<char> = text.chars().collect();
    for (k, &c) in chars.iter().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push((chars[begin..k].iter().collect(), start + begin));
                begin = k + 1;
            }
            _ => {}
        }
    }
    out.push((chars[begin..].iter().collect(), start + begin));
    out
}

pub fn parse_ideal_text(text: &str) -> Result<IdealFile> {
    let mut n = None;
    let mut field = FieldSpec::default();
    let mut generators = Vec::new();
    let mut in_gens = false;
    let mut last_line = 1;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        let (body, offset) = if in_gens {
            (line, 1)
        } else if let Some(v) = header(line, "n") {
            n = Some(parse_count(v, line_no, "n")?);
            continue;
        } else if let Some(v) = header(line, "field") {
            field = parse_field(v, line_no)?;
            continue;
        } else if let Some(pos) = line.find("gens:") {
            if !line[..pos].trim().is_empty() {
                return Err(parse_error(line_no, 1, "unexpected text before gens:"));
            }
            in_gens = true;
            let start = pos + "gens:".len();
            (&line[start..], line[..start].chars().count() + 1)
        } else {
            return Err(parse_error(line_no, 1, format!("unrecognized line {:?}", line.trim())));
        };
        let pieces = split_generators(body, offset);
        let last = pieces.len() - 1;
        for (k, (piece, col)) in pieces.into_iter().enumerate() {
            let lead = piece.len() - piece.trim_start().len();
            if piece.trim().is_empty() {
                if k == last {
                    continue;
                }
                return Err(parse_error(line_no, col, "empty generator"));
            }
            generators.push(GeneratorText {
                text: piece.trim().to_string(),
                line: line_no,
                column: col + piece[..lead].chars().count(),
            });
        }
    }
    let n = n.ok_or_else(|| parse_error(1, 1, "missing n=<int> line"))?;
    if n == 0 {
        return Err(parse_error(1, 1, "n must be positive"));
    }
    if !in_gens || generators.is_empty() {
        return Err(parse_error(last_line, 1, "missing gens: line"));
    }
    let file = IdealFile { n, field, generators };
    with_field!(field, f => file.polynomials(&f).map(|_| ()))?;
    Ok(file)
}

pub fn parse_ideal_file(path: &Path) -> CliResult<IdealFile> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    Ok(parse_ideal_text(&text)?)
}

/// A coordinate `num/den`.
pub type Coordinate = (i64, i64);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointFile {
    pub n: usize,
    pub field: FieldSpec,
    pub socle_degree: Option<usize>,
    pub points: Vec<Vec<Coordinate>>,
}

impl PointFile {
    pub fn points_in<F: Field>(&self, field: &F) -> Result<Vec<Vec<F::Elem>>> {
        self.points
            .iter()
            .map(|p| {
                p.iter()
                    .map(|&(a, b)| field.div(&field.from_i64(a), &field.from_i64(b)))
                    .collect()
            })
            .collect()
    }

    pub fn digest(&self) -> String {
        let lines: Vec<String> = self
            .points
            .iter()
            .map(|p| p.iter().map(|(a, b)| format!("{a}/{b}")).collect::<Vec<_>>().join(" "))
            .collect();
        digest_lines(lines.iter().map(String::as_str))
    }
}

fn parse_coordinate(token: &str, line: usize, column: usize) -> Result<Coordinate> {
    let bad = || parse_error(line, column, format!("invalid coordinate {token:?}"));
    let (a, b) = match token.split_once('/') {
        Some((a, b)) => (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
        None => (token.parse().map_err(|_| bad())?, 1),
    };
    if b == 0 {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn parse_point_text(text: &str) -> Result<PointFile> {
    let mut n = None;
    let mut field = FieldSpec::default();
    let mut socle_degree = None;
    let mut points = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        if let Some(v) = header(line, "n") {
            n = Some(parse_count(v, line_no, "n")?);
            continue;
        }
        if let Some(v) = header(line, "field") {
            field = parse_field(v, line_no)?;
            continue;
        }
        if let Some(v) = header(line, "e") {
            socle_degree = Some(parse_count(v, line_no, "e")?);
            continue;
        }
        let mut point = Vec::new();
        let mut col = 1;
        for token in line.split(|c: char| c == ',' || c.is_whitespace()) {
            if !token.is_empty() {
                point.push(parse_coordinate(token, line_no, col)?);
            }
            col += token.chars().count() + 1;
        }
        let width = *n.get_or_insert(point.len());
        if point.len() != width {
            return Err(parse_error(
                line_no,
                1,
                format!("expected {width} coordinates, found {}", point.len()),
            ));
        }
        points.push(point);
    }
    let n = n.ok_or_else(|| parse_error(1, 1, "no points"))?;
    if points.is_empty() {
        return Err(parse_error(1, 1, "no points"));
    }
    Ok(PointFile {
        n,
        field,
        socle_degree,
        points,
    })
}

pub fn parse_point_file(path: &Path) -> CliResult<PointFile> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    Ok(parse_point_text(&text)?)
}

/// Parses `2,2,3` into degrees.
pub fn parse_degrees(text: &str) -> CliResult<Vec<usize>> {
    let out: std::result::Result<Vec<usize>, _> = text.split(',').map(|t| t.trim().parse::<usize>()).collect();
    match out {
        Ok(v) if !v.is_empty() && v.iter().all(|&d| d >= 1) => Ok(v),
        _ => Err(CliError::Usage(format!("invalid degree list {text:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_ideal_file() {
        let f = parse_ideal_text("n=3\nfield=fp:32003\ngens: x1^3, x2^3, x3^3\n").unwrap();
        assert_eq!(f.n, 3);
        assert_eq!(f.field, FieldSpec::PrimeField(32003));
        let cols: Vec<usize> = f.generators.iter().map(|g| g.column).collect();
        assert_eq!(cols, vec![7, 13, 19]);
    }

    #[test]
    fn continuation_lines_and_comments() {
        let f = parse_ideal_text("# cubic\nn=2\ngens: x1^2,\n  x2^2 # last\n").unwrap();
        assert_eq!(f.generators.len(), 2);
        assert_eq!((f.generators[1].line, f.generators[1].column), (4, 3));
    }

    #[test]
    fn malformed_exponent() {
        let e = parse_ideal_text("n=3\ngens: x1^^2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e:?}");
    }

    #[test]
    fn inhomogeneous_generator() {
        let e = parse_ideal_text("n=2\ngens: x1^2, x1+x2^2\n").unwrap_err();
        assert_eq!(e, Error::NonHomogeneousGenerator { index: 1 });
    }

    #[test]
    fn unknown_variable() {
        let e = parse_ideal_text("n=2\ngens: x3^2\n").unwrap_err();
        assert!(matches!(e, Error::UnknownVariable { .. }), "{e:?}");
    }

    #[test]
    fn point_file() {
        let p = parse_point_text("e=4\n1 0 0\n0,1,0\n1/2 3 -1\n").unwrap();
        assert_eq!((p.n, p.socle_degree, p.points.len()), (3, Some(4), 3));
        assert_eq!(p.points[2][0], (1, 2));
        assert!(parse_point_text("1 0\n1 0 0\n").is_err());
    }
}
