//! Ideal files.
//!
//! ```text
//! mode=laurent vars=2
//! x1*x2 - 1
//! x1^2 + 3*x2
//! ```
//!
//! The header fixes the ring; every further nonblank line is one generator.
//! Lines starting with `#` are comments.

use std::path::Path;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Mode, Poly, Ring};

pub fn parse_header(line: &str) -> Result<Ring> {
    let mut mode = None;
    let mut vars = None;
    for field in line.split_whitespace() {
        match field.split_once('=') {
            Some(("mode", "polynomial")) => mode = Some(Mode::Polynomial),
            Some(("mode", "laurent")) => mode = Some(Mode::Laurent),
            Some(("vars", k)) => {
                vars = Some(k.parse::<usize>().ok().filter(|&k| k >= 1).ok_or_else(|| {
                    Error::Invalid(format!("vars must be a positive integer, got '{k}'"))
                })?)
            }
            _ => return Err(Error::Invalid(format!("unknown header field '{field}'"))),
        }
    }
    match (mode, vars) {
        (Some(mode), Some(k)) => Ok(Ring::new(k, mode)),
        _ => Err(Error::Invalid(
            "header must read 'mode=polynomial|laurent vars=k'".into(),
        )),
    }
}

/// Parses ideal text; `;` also separates lines, for one-line inline use.
pub fn parse_ideal(text: &str) -> Result<Ideal> {
    let text = text.replace(';', "\n");
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Invalid("empty ideal description".into()))?;
    let ring = parse_header(header)?;
    let mut gens = Vec::new();
    for (no, line) in lines {
        let g = Poly::parse(line, ring).map_err(|e| match e {
            Error::Syntax { pos, msg } => Error::Syntax {
                pos,
                msg: format!("line {no}: {msg}"),
            },
            other => other,
        })?;
        gens.push(g);
    }
    Ideal::new(ring, gens)
}

pub fn read_ideal_file(path: impl AsRef<Path>) -> Result<Ideal> {
    let path = path.as_ref();
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_ideal(&text)
}

pub fn format_ideal(ideal: &Ideal) -> String {
    let ring = ideal.ring();
    let mut s = format!("mode={} vars={}\n", ring.mode, ring.nvars);
    for g in ideal.generators() {
        s.push_str(&format!("{g}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# comment\nmode=laurent vars=2\n\nx1*x2 - 1\n  x1^2 + 3*x2\n";
        let i = parse_ideal(text).unwrap();
        assert_eq!(i.ring(), Ring::laurent(2));
        assert_eq!(i.len(), 2);
        assert_eq!(parse_ideal(&format_ideal(&i)).unwrap(), i);
        assert_eq!(
            parse_ideal("vars=1 mode=polynomial; 2; x1").unwrap().len(),
            2
        );
    }

    #[test]
    fn rejects_bad_headers_and_lines() {
        assert!(parse_ideal("mode=field vars=1\nx1").is_err());
        assert!(parse_ideal("mode=laurent\nx1").is_err());
        assert!(parse_ideal("mode=laurent vars=0\nx1").is_err());
        assert!(parse_ideal("mode=laurent vars=1").is_err());
        assert!(matches!(
            parse_ideal("mode=polynomial vars=1\nx1^-1"),
            Err(Error::NegativeExponentInPolynomialMode { .. })
        ));
        match parse_ideal("mode=polynomial vars=1\nx1 +") {
            Err(Error::Syntax { msg, .. }) => assert!(msg.starts_with("line 2")),
            other => panic!("{other:?}"),
        }
    }
}
