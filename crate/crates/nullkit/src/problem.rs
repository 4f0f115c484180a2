//! The `.null` problem-file format.
//!
//! ```text
//! # comments run to the end of the line
//! field GF(4)              # GF(p), GF(q), GF(p^e) or GF(p^e; m=t^2+t+1)
//! points GF(2)             # optional: field the points are taken from
//! base GF(2)               # optional: field the generators must lie in
//! vars X0 X1 X2            # whitespace or comma separated
//! ideal: X0*X1 + X2^2,     # a trailing comma continues on the next line
//!        X1^3
//! ```
//!
//! `coeffs` overrides the coefficient field of the ring, which otherwise is
//! the `field`. `points` and `base` default to it as well.

use std::fmt::Write as _;

use nullkit_core::{Error as CoreError, FieldSpec, Ideal, Polynomial, Ring};

use crate::error::{CliError, Result};

/// A parsed problem: the field tower, the ring and the ideal.
#[derive(Clone, Debug)]
pub struct Problem {
    pub coeffs: FieldSpec,
    pub points: FieldSpec,
    pub base: FieldSpec,
    pub ring: Ring,
    pub ideal: Ideal,
}

impl Problem {
    /// The canonical text of the problem; parsing it gives back the same
    /// problem.
    pub fn normalized(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "field {}", self.coeffs.literal());
        if self.points != self.coeffs {
            let _ = writeln!(out, "points {}", self.points.literal());
        }
        if self.base != self.coeffs {
            let _ = writeln!(out, "base {}", self.base.literal());
        }
        let _ = writeln!(out, "vars {}", self.ring.var_names().join(" "));
        let gens: Vec<String> = self.ideal.generators().iter().map(|g| g.to_string()).collect();
        if gens.is_empty() {
            out.push_str("ideal:\n");
        } else {
            let _ = writeln!(out, "ideal: {}", gens.join(", "));
        }
        out
    }

    /// Parses a polynomial in the problem's ring; errors carry column
    /// offsets into `text`.
    pub fn parse_poly(&self, text: &str) -> Result<Polynomial> {
        self.ring.parse(text).map_err(|e| at(e, 1, 1, text))
    }
}

pub fn read_problem(path: &std::path::Path) -> Result<Problem> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_problem(&text)
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> CliError {
    CliError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

/// Maps a core parse error at byte offset `pos` of `text` (which starts at
/// `line:col`) to a located syntax error.
fn at(e: CoreError, line: usize, col: usize, text: &str) -> CliError {
    let (pos, msg) = match e {
        CoreError::Syntax { pos, msg } => (pos, msg),
        CoreError::UnknownVariable { name, pos } => (pos, format!("unknown variable `{}`", name)),
        other => return CliError::Core(other),
    };
    let pos = pos.min(text.len());
    syntax(line, col + text[..pos].chars().count(), msg)
}

#[derive(Default)]
struct Decls {
    field: Option<(usize, FieldSpec)>,
    coeffs: Option<(usize, FieldSpec)>,
    points: Option<(usize, FieldSpec)>,
    base: Option<(usize, FieldSpec)>,
    vars: Option<(usize, Vec<String>)>,
    /// (line, column, text) of every generator.
    gens: Option<Vec<(usize, usize, String)>>,
}

pub fn parse_problem(text: &str) -> Result<Problem> {
    let mut d = Decls::default();
    let lines: Vec<&str> = text.lines().map(|l| l.split('#').next().unwrap_or("")).collect();
    let mut i = 0;
    while i < lines.len() {
        let line_no = i + 1;
        let raw = lines[i];
        i += 1;
        let trimmed = raw.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = raw.len() - trimmed.len();
        let word_end = trimmed
            .find(|c: char| c.is_whitespace() || c == ':')
            .unwrap_or(trimmed.len());
        let (key, rest) = trimmed.split_at(word_end);
        let rest_col = indent + word_end + 1;
        match key {
            "field" | "coeffs" | "points" | "base" => {
                let spec = parse_field(rest, line_no, rest_col)?;
                let slot = match key {
                    "field" => &mut d.field,
                    "coeffs" => &mut d.coeffs,
                    "points" => &mut d.points,
                    _ => &mut d.base,
                };
                if slot.is_some() {
                    return Err(syntax(line_no, indent + 1, format!("duplicate `{}` declaration", key)));
                }
                *slot = Some((line_no, spec));
            }
            "vars" => {
                if d.vars.is_some() {
                    return Err(syntax(line_no, indent + 1, "duplicate `vars` declaration"));
                }
                let names: Vec<String> = rest
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .map(str::to_string)
                    .collect();
                d.vars = Some((line_no, names));
            }
            "ideal" => {
                if d.gens.is_some() {
                    return Err(syntax(line_no, indent + 1, "duplicate `ideal` declaration"));
                }
                let Some(body) = rest.trim_start().strip_prefix(':') else {
                    return Err(syntax(line_no, rest_col, "expected `:` after `ideal`"));
                };
                let mut col = raw[..raw.len() - body.len()].chars().count() + 1;
                let mut body = body;
                let mut line = line_no;
                let mut gens = Vec::new();
                loop {
                    let continues = split_generators(body, line, col, &mut gens)?;
                    if !continues || i >= lines.len() {
                        break;
                    }
                    body = lines[i];
                    line = i + 1;
                    col = 1;
                    i += 1;
                }
                d.gens = Some(gens);
            }
            _ => {
                return Err(syntax(line_no, indent + 1, format!("unknown declaration `{}`", key)));
            }
        }
    }
    build(d, lines.len() + 1)
}

/// Splits `body` at commas, recording each nonempty piece. Returns whether
/// the list continues on the next line (trailing comma).
fn split_generators(body: &str, line: usize, col: usize, out: &mut Vec<(usize, usize, String)>) -> Result<bool> {
    let mut start = 0;
    let pieces: Vec<(usize, &str)> = body
        .split(',')
        .map(|p| {
            let s = start;
            start += p.len() + 1;
            (s, p)
        })
        .collect();
    let last = pieces.len() - 1;
    for (k, (offset, piece)) in pieces.into_iter().enumerate() {
        let lead = piece.len() - piece.trim_start().len();
        let text = piece.trim();
        let c = col + body[..offset + lead].chars().count();
        if text.is_empty() {
            if k == last && k > 0 {
                return Ok(true);
            }
            if k == 0 && last == 0 {
                return Ok(false);
            }
            return Err(syntax(line, c, "empty generator"));
        }
        out.push((line, c, text.to_string()));
    }
    Ok(false)
}

fn build(d: Decls, eof_line: usize) -> Result<Problem> {
    let (_, field) = d.field.ok_or_else(|| syntax(eof_line, 1, "missing `field` declaration"))?;
    let (vars_line, names) = d.vars.ok_or_else(|| syntax(eof_line, 1, "missing `vars` declaration"))?;
    let gens = d.gens.ok_or_else(|| syntax(eof_line, 1, "missing `ideal:` declaration"))?;
    let coeffs = d.coeffs.map_or(field.clone(), |(_, f)| f);
    let points = d.points.map_or(field.clone(), |(_, f)| f);
    let base = d.base.map_or(field.clone(), |(_, f)| f);
    if coeffs.join(&points).is_none() {
        return Err(CliError::InconsistentTower(format!(
            "coefficient field {} and point field {} are not nested",
            coeffs, points
        )));
    }
    for (name, f) in [("coefficient", &coeffs), ("point", &points)] {
        if !f.contains(&base) {
            return Err(CliError::InconsistentTower(format!(
                "base field {} is not a subfield of the {} field {}",
                base, name, f
            )));
        }
    }
    let ring = Ring::new(coeffs.clone(), names.iter().cloned()).map_err(|e| match e {
        CoreError::InvalidVariables(msg) => syntax(vars_line, 1, msg),
        other => CliError::Core(other),
    })?;
    let mut polys = Vec::with_capacity(gens.len());
    for (k, (line, col, text)) in gens.iter().enumerate() {
        let p = ring.parse(text).map_err(|e| at(e, *line, *col, text))?;
        if !p.coefficients_in(&base) {
            return Err(CliError::InconsistentTower(format!(
                "generator {} ({}) has coefficients outside the base field {}",
                k + 1,
                text,
                base
            )));
        }
        polys.push(p);
    }
    let ideal = Ideal::new(&ring, polys)?;
    Ok(Problem {
        coeffs,
        points,
        base,
        ring,
        ideal,
    })
}

/// `GF(p)`, `GF(q)` for a prime power `q`, `GF(p^e)` or `GF(p^e; m=<poly>)`.
pub fn parse_field(text: &str, line: usize, col: usize) -> Result<FieldSpec> {
    let lead = text.len() - text.trim_start().len();
    let col = col + lead;
    let t = text.trim();
    let err = |msg: &str| syntax(line, col, format!("{} in field literal `{}`", msg, t));
    let inner = t
        .strip_prefix("GF(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| err("expected GF(...)"))?;
    let (size, modulus) = match inner.split_once(';') {
        Some((s, m)) => {
            let m = m.trim().strip_prefix("m=").ok_or_else(|| err("expected `m=` after `;`"))?;
            (s.trim(), Some(m.trim()))
        }
        None => (inner.trim(), None),
    };
    let num = |s: &str| s.trim().parse::<u32>().map_err(|_| err("expected an integer"));
    let spec = match (size.split_once('^'), modulus) {
        (None, None) => FieldSpec::of_order(num(size)?),
        (Some((p, e)), None) => FieldSpec::new(num(p)?, num(e)?, None),
        (Some((p, e)), Some(m)) => {
            let (p, e) = (num(p)?, num(e)?);
            let coeffs = modulus_coefficients(p, m).map_err(|_| err("invalid modulus"))?;
            FieldSpec::new(p, e, Some(&coeffs))
        }
        (None, Some(_)) => return Err(err("a modulus needs the form GF(p^e; m=...)")),
    };
    spec.map_err(|e| syntax(line, col, e.to_string()))
}

/// Coefficients (low first) of a polynomial in `t` over GF(p).
fn modulus_coefficients(p: u32, text: &str) -> std::result::Result<Vec<u32>, CoreError> {
    let ring = Ring::new(FieldSpec::prime(p)?, ["t"])?;
    let poly = ring.parse(text)?;
    let deg = poly.total_degree().unwrap_or(0) as usize;
    let mut out = vec![0; deg + 1];
    for (m, c) in poly.terms() {
        out[m.exps()[0] as usize] = c;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syntax_at(text: &str) -> (usize, usize) {
        match parse_problem(text) {
            Err(CliError::Syntax { line, col, .. }) => (line, col),
            other => panic!("expected a syntax error, got {:?}", other),
        }
    }

    #[test]
    fn minimal_file() {
        let p = parse_problem("field GF(2)\nvars X0 X1\nideal: X0\n").unwrap();
        assert_eq!(p.ring.nvars(), 2);
        assert_eq!(p.ideal.generators().len(), 1);
        assert_eq!(p.points, p.coeffs);
        assert_eq!(p.normalized(), "field GF(2)\nvars X0 X1\nideal: X0\n");
    }

    #[test]
    fn tower_file() {
        let text = "# tower\nfield GF(4)\npoints GF(2)\nbase GF(2)\nvars X0, X1\nideal: X0^2 + X0*X1,\n  X1^3\n";
        let p = parse_problem(text).unwrap();
        assert_eq!(p.coeffs.order(), 4);
        assert_eq!(p.points.order(), 2);
        assert_eq!(p.ideal.generators().len(), 2);
        let again = parse_problem(&p.normalized()).unwrap();
        assert_eq!(again.normalized(), p.normalized());
    }

    #[test]
    fn field_literals() {
        for (lit, q) in [("GF(2)", 2), ("GF(9)", 9), ("GF(3^2)", 9), ("GF(2^3; m=t^3+t^2+1)", 8)] {
            assert_eq!(parse_field(lit, 1, 1).unwrap().order(), q, "{}", lit);
        }
        let custom = parse_field("GF(2^3; m=t^3+t^2+1)", 1, 1).unwrap();
        assert_eq!(parse_field(&custom.literal(), 1, 1).unwrap(), custom);
        assert!(parse_field("GF(6)", 1, 1).is_err());
        assert!(parse_field("GF(2^2; m=t^2+1)", 1, 1).is_err());
        assert!(parse_field("F(2)", 1, 1).is_err());
    }

    #[test]
    fn errors_are_located() {
        assert_eq!(syntax_at("field GF(2)\nvars X0 X1\nideal: X0, X2\n"), (3, 12));
        assert_eq!(syntax_at("field GF(2)\nvars X0\nideal: X0 +\n"), (3, 12));
        assert_eq!(syntax_at("field GF(2)\nvars X0\nidea: X0\n"), (3, 1));
        assert_eq!(syntax_at("field GF(2)\nvars X0\nideal: X0,, X0\n"), (3, 11));
        assert_eq!(syntax_at("field GF(2)\nvars X0\n"), (3, 1));
        assert_eq!(syntax_at("field GF(4)\nfield GF(2)\n"), (2, 1));
    }

    #[test]
    fn inconsistent_towers() {
        let bad = [
            "field GF(2)\npoints GF(3)\nvars X0\nideal: X0\n",
            "field GF(4)\nbase GF(2)\nvars X0\nideal: (t)*X0\n",
            "field GF(2)\nbase GF(4)\nvars X0\nideal: X0\n",
        ];
        for text in bad {
            assert!(matches!(parse_problem(text), Err(CliError::InconsistentTower(_))), "{}", text);
        }
    }

    #[test]
    fn empty_generator_list_is_zero_ideal() {
        let p = parse_problem("field GF(3)\nvars x y\nideal:\n").unwrap();
        assert!(p.ideal.is_zero());
    }
}
