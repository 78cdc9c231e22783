//! Plain-text documents for matrices, representations and certificates.
//!
//! Every document starts with a header line naming its kind and sizes,
//! followed by one line per row with entries separated by single spaces.
//! Entries are integers or fractions `a/b`. Lines starting with `#` are
//! comments.
//!
//! ```text
//! MATRIX p q           p rows of q entries
//! CONE_V k n           k generators in ℝⁿ, optionally followed by
//! LINEALITY l          l lineality basis vectors
//! CONE_H k n           k normals b, meaning b·x ≥ 0
//! POLY_V k n           k points in ℝⁿ
//! POLY_H k n           k rows "β a₁ … aₙ", meaning a·x ≤ β
//! CERT YES             then "A p k" and "B k q" blocks, optional
//!                      "MU …" row, optional POLY_V and POLY_H blocks
//! CERT NO CONE_GENERATING COLUMN|ROW   then "WITNESS …" and "SEPARATOR …"
//! CERT NO ONES_NOT_IN_COLUMN_SPAN      then "WITNESS …"
//! CERT NO RANK_TOO_SMALL r
//! ```

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::cone::{ConeH, ConeV};
use crate::matrix::Matrix;
use crate::polytope::{Inequality, PolytopeH, PolytopeV};
use crate::rational::{Rational, Vector};
use crate::recognition::{Certificate, Convention, NoCertificate, YesCertificate};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Matrix(Matrix),
    ConeV(ConeV),
    ConeH(ConeH),
    PolytopeV(PolytopeV),
    PolytopeH(PolytopeH),
    Certificate(Certificate),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Matrix(_) => "MATRIX",
            Document::ConeV(_) => "CONE_V",
            Document::ConeH(_) => "CONE_H",
            Document::PolytopeV(_) => "POLY_V",
            Document::PolytopeH(_) => "POLY_H",
            Document::Certificate(_) => "CERT",
        }
    }
}

/// 1-based position of a syntax error.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

pub fn parse(text: &str) -> Result<Document, ParseError> {
    let mut cursor = Cursor::new(text);
    let doc = cursor.document()?;
    if let Some((line, _)) = cursor.peek_content() {
        return Err(cursor.error_at(line, 1, "unexpected content after document"));
    }
    Ok(doc)
}

pub fn serialize(doc: &Document) -> String {
    let mut out = String::new();
    match doc {
        Document::Matrix(m) => write_matrix(&mut out, "MATRIX", m),
        Document::ConeV(c) => {
            write_rows(
                &mut out,
                &format!("CONE_V {} {}", c.rays.len(), c.dim),
                &c.rays,
            );
            if !c.lineality.is_empty() {
                write_rows(
                    &mut out,
                    &format!("LINEALITY {}", c.lineality.len()),
                    &c.lineality,
                );
            }
        }
        Document::ConeH(c) => write_rows(
            &mut out,
            &format!("CONE_H {} {}", c.normals.len(), c.dim),
            &c.normals,
        ),
        Document::PolytopeV(p) => write_poly_v(&mut out, p),
        Document::PolytopeH(p) => write_poly_h(&mut out, p),
        Document::Certificate(Certificate::Yes(y)) => {
            out.push_str("CERT YES\n");
            write_matrix(&mut out, "A", &y.a);
            write_matrix(&mut out, "B", &y.b);
            if let Some(mu) = &y.mu {
                write_labeled(&mut out, "MU", mu);
            }
            if let Some((v, h)) = &y.polytope {
                write_poly_v(&mut out, v);
                write_poly_h(&mut out, h);
            }
        }
        Document::Certificate(Certificate::No(n)) => match n {
            NoCertificate::ConeGenerating {
                convention,
                witness,
                separator,
            } => {
                let conv = match convention {
                    Convention::Column => "COLUMN",
                    Convention::Row => "ROW",
                };
                let _ = writeln!(out, "CERT NO CONE_GENERATING {conv}");
                write_labeled(&mut out, "WITNESS", witness);
                write_labeled(&mut out, "SEPARATOR", separator);
            }
            NoCertificate::OnesNotInColumnSpan { left_kernel_vector } => {
                out.push_str("CERT NO ONES_NOT_IN_COLUMN_SPAN\n");
                write_labeled(&mut out, "WITNESS", left_kernel_vector);
            }
            NoCertificate::RankTooSmall { rank } => {
                let _ = writeln!(out, "CERT NO RANK_TOO_SMALL {rank}");
            }
        },
    }
    out
}

fn join(row: &[Rational]) -> String {
    row.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_rows(out: &mut String, header: &str, rows: &[Vector]) {
    out.push_str(header);
    out.push('\n');
    for r in rows {
        out.push_str(&join(r));
        out.push('\n');
    }
}

fn write_matrix(out: &mut String, label: &str, m: &Matrix) {
    write_rows(
        out,
        &format!("{label} {} {}", m.rows(), m.cols()),
        &m.to_rows(),
    );
}

fn write_labeled(out: &mut String, label: &str, v: &[Rational]) {
    out.push_str(label);
    if !v.is_empty() {
        out.push(' ');
        out.push_str(&join(v));
    }
    out.push('\n');
}

fn write_poly_v(out: &mut String, p: &PolytopeV) {
    write_rows(
        out,
        &format!("POLY_V {} {}", p.points.len(), p.dim),
        &p.points,
    );
}

fn write_poly_h(out: &mut String, p: &PolytopeH) {
    let rows: Vec<Vector> = p
        .inequalities
        .iter()
        .map(|q| {
            std::iter::once(q.rhs.clone())
                .chain(q.normal.iter().cloned())
                .collect()
        })
        .collect();
    write_rows(
        out,
        &format!("POLY_H {} {}", p.inequalities.len(), p.dim),
        &rows,
    );
}

pub fn parse_rational(token: &str) -> Result<Rational, String> {
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let num = BigInt::from_str(num).map_err(|_| format!("invalid number `{token}`"))?;
    let den = match den {
        None => BigInt::from(1),
        Some(d) => {
            if d.starts_with(['+', '-']) {
                return Err(format!("denominator of `{token}` must be unsigned"));
            }
            BigInt::from_str(d).map_err(|_| format!("invalid number `{token}`"))?
        }
    };
    if den.is_zero() {
        return Err(format!("zero denominator in `{token}`"));
    }
    debug_assert!(den.is_positive());
    Ok(Rational::new(num, den))
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
}

type Token<'a> = (usize, &'a str);

fn tokenize(text: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &text[s..]));
    }
    out
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            lines: text
                .lines()
                .enumerate()
                .map(|(i, l)| Line {
                    number: i + 1,
                    text: l,
                })
                .filter(|l| !l.text.trim_start().starts_with('#'))
                .collect(),
            pos: 0,
        }
    }

    fn error_at(&self, line: usize, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    fn eof_error(&self, what: &str) -> ParseError {
        let line = self.lines.last().map_or(1, |l| l.number);
        self.error_at(line, 1, format!("unexpected end of input, expected {what}"))
    }

    fn skip_blank(&mut self) {
        while self.pos < self.lines.len() && self.lines[self.pos].text.trim().is_empty() {
            self.pos += 1;
        }
    }

    fn peek_content(&mut self) -> Option<(usize, Vec<Token<'a>>)> {
        self.skip_blank();
        self.lines
            .get(self.pos)
            .map(|l| (l.number, tokenize(l.text)))
    }

    fn next_content(&mut self, what: &str) -> Result<(usize, Vec<Token<'a>>), ParseError> {
        let next = self.peek_content().ok_or_else(|| self.eof_error(what))?;
        self.pos += 1;
        Ok(next)
    }

    fn row(&mut self, len: usize) -> Result<Vector, ParseError> {
        if len == 0 {
            // Empty rows are written as blank lines; accept them if present.
            if self
                .lines
                .get(self.pos)
                .is_some_and(|l| l.text.trim().is_empty())
            {
                self.pos += 1;
            }
            return Ok(Vec::new());
        }
        let (line, tokens) = self.next_content("a row")?;
        self.values(line, &tokens, len)
    }

    fn values(&self, line: usize, tokens: &[Token<'_>], len: usize) -> Result<Vector, ParseError> {
        if tokens.len() != len {
            let column = tokens.get(len).map_or(1, |t| t.0);
            return Err(self.error_at(
                line,
                column,
                format!("expected {len} entries, found {}", tokens.len()),
            ));
        }
        tokens
            .iter()
            .map(|&(col, t)| parse_rational(t).map_err(|msg| self.error_at(line, col, msg)))
            .collect()
    }

    fn rows(&mut self, count: usize, len: usize) -> Result<Vec<Vector>, ParseError> {
        (0..count).map(|_| self.row(len)).collect()
    }

    fn count(
        &self,
        line: usize,
        token: Option<&Token<'_>>,
        what: &str,
    ) -> Result<usize, ParseError> {
        let &(col, t) = token.ok_or_else(|| self.error_at(line, 1, format!("missing {what}")))?;
        t.parse()
            .map_err(|_| self.error_at(line, col, format!("invalid {what} `{t}`")))
    }

    fn header(&mut self, keyword: &str) -> Result<(usize, usize), ParseError> {
        let (line, tokens) = self.next_content(keyword)?;
        if tokens.first().map(|t| t.1) != Some(keyword) {
            let col = tokens.first().map_or(1, |t| t.0);
            return Err(self.error_at(line, col, format!("expected `{keyword}`")));
        }
        self.sizes(line, &tokens)
    }

    fn sizes(&self, line: usize, tokens: &[Token<'_>]) -> Result<(usize, usize), ParseError> {
        if tokens.len() != 3 {
            return Err(self.error_at(line, 1, "header takes exactly two sizes"));
        }
        Ok((
            self.count(line, tokens.get(1), "row count")?,
            self.count(line, tokens.get(2), "column count")?,
        ))
    }

    fn matrix(&mut self, rows: usize, cols: usize) -> Result<Matrix, ParseError> {
        let data = self.rows(rows, cols)?;
        Ok(Matrix::from_rows(cols, data).expect("row lengths were checked"))
    }

    fn labeled(&mut self, label: &str) -> Result<Vector, ParseError> {
        let (line, tokens) = self.next_content(label)?;
        if tokens.first().map(|t| t.1) != Some(label) {
            let col = tokens.first().map_or(1, |t| t.0);
            return Err(self.error_at(line, col, format!("expected `{label}`")));
        }
        self.values(line, &tokens[1..], tokens.len() - 1)
    }

    fn poly_v(&mut self, count: usize, dim: usize) -> Result<PolytopeV, ParseError> {
        Ok(PolytopeV {
            dim,
            points: self.rows(count, dim)?,
        })
    }

    fn poly_h(&mut self, count: usize, dim: usize) -> Result<PolytopeH, ParseError> {
        let rows = self.rows(count, dim + 1)?;
        Ok(PolytopeH {
            dim,
            inequalities: rows
                .into_iter()
                .map(|mut r| {
                    let normal = r.split_off(1);
                    Inequality::new(r.pop().expect("row has β"), normal)
                })
                .collect(),
        })
    }

    fn document(&mut self) -> Result<Document, ParseError> {
        let (line, tokens) = self.next_content("a document header")?;
        let keyword = tokens[0].1;
        match keyword {
            "MATRIX" => {
                let (r, c) = self.sizes(line, &tokens)?;
                Ok(Document::Matrix(self.matrix(r, c)?))
            }
            "CONE_V" => {
                let (k, n) = self.sizes(line, &tokens)?;
                let rays = self.rows(k, n)?;
                let lineality = match self.peek_content() {
                    Some((l, t)) if t[0].1 == "LINEALITY" => {
                        self.pos += 1;
                        if t.len() != 2 {
                            return Err(self.error_at(l, 1, "LINEALITY takes one count"));
                        }
                        let count = self.count(l, t.get(1), "lineality count")?;
                        self.rows(count, n)?
                    }
                    _ => Vec::new(),
                };
                Ok(Document::ConeV(ConeV {
                    dim: n,
                    rays,
                    lineality,
                }))
            }
            "CONE_H" => {
                let (k, n) = self.sizes(line, &tokens)?;
                Ok(Document::ConeH(ConeH {
                    dim: n,
                    normals: self.rows(k, n)?,
                }))
            }
            "POLY_V" => {
                let (k, n) = self.sizes(line, &tokens)?;
                Ok(Document::PolytopeV(self.poly_v(k, n)?))
            }
            "POLY_H" => {
                let (k, n) = self.sizes(line, &tokens)?;
                Ok(Document::PolytopeH(self.poly_h(k, n)?))
            }
            "CERT" => self.certificate(line, &tokens).map(Document::Certificate),
            other => Err(self.error_at(
                line,
                tokens[0].0,
                format!("unknown document kind `{other}`"),
            )),
        }
    }

    fn certificate(
        &mut self,
        line: usize,
        tokens: &[Token<'_>],
    ) -> Result<Certificate, ParseError> {
        let words: Vec<&str> = tokens.iter().map(|t| t.1).collect();
        let col = |i: usize| tokens.get(i).map_or(1, |t| t.0);
        match words.as_slice() {
            ["CERT", "YES"] => {
                let (p, k) = self.header("A")?;
                let a = self.matrix(p, k)?;
                let (k2, q) = self.header("B")?;
                let b = self.matrix(k2, q)?;
                let mu = match self.peek_content() {
                    Some((_, t)) if t[0].1 == "MU" => Some(self.labeled("MU")?),
                    _ => None,
                };
                let polytope = match self.peek_content() {
                    Some((_, t)) if t[0].1 == "POLY_V" => {
                        let (n, d) = self.header("POLY_V")?;
                        let v = self.poly_v(n, d)?;
                        let (m, d2) = self.header("POLY_H")?;
                        let h = self.poly_h(m, d2)?;
                        Some((v, h))
                    }
                    _ => None,
                };
                Ok(Certificate::Yes(YesCertificate { a, b, mu, polytope }))
            }
            ["CERT", "NO", "CONE_GENERATING", conv] => {
                let convention = match *conv {
                    "COLUMN" => Convention::Column,
                    "ROW" => Convention::Row,
                    other => {
                        return Err(self.error_at(
                            line,
                            col(3),
                            format!("unknown convention `{other}`"),
                        ))
                    }
                };
                let witness = self.labeled("WITNESS")?;
                let separator = self.labeled("SEPARATOR")?;
                Ok(Certificate::No(NoCertificate::ConeGenerating {
                    convention,
                    witness,
                    separator,
                }))
            }
            ["CERT", "NO", "ONES_NOT_IN_COLUMN_SPAN"] => {
                Ok(Certificate::No(NoCertificate::OnesNotInColumnSpan {
                    left_kernel_vector: self.labeled("WITNESS")?,
                }))
            }
            ["CERT", "NO", "RANK_TOO_SMALL", _] => {
                Ok(Certificate::No(NoCertificate::RankTooSmall {
                    rank: self.count(line, tokens.get(3), "rank")?,
                }))
            }
            _ => Err(self.error_at(line, col(1), "malformed CERT header")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int, vector};

    #[test]
    fn parse_matrix() {
        let doc = parse("MATRIX 2 2\n1 1/2\n0 3\n").unwrap();
        let m = Matrix::new(2, 2, vec![int(1), frac(1, 2), int(0), int(3)]).unwrap();
        assert_eq!(doc, Document::Matrix(m));
    }

    #[test]
    fn zero_denominator() {
        let err = parse("MATRIX 1 1\n1/0\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 1));
        assert!(err.message.contains("zero denominator"));
    }

    #[test]
    fn parse_poly_h() {
        let doc = parse("POLY_H 1 2\n1 1 0\n").unwrap();
        let expected = PolytopeH::new(2, vec![Inequality::new(int(1), vector(&[1, 0]))]).unwrap();
        assert_eq!(doc, Document::PolytopeH(expected));
    }

    #[test]
    fn serialize_identity() {
        let s = serialize(&Document::Matrix(Matrix::identity(2)));
        assert_eq!(s, "MATRIX 2 2\n1 0\n0 1\n");
    }

    #[test]
    fn serialize_no_certificate() {
        let cert = Certificate::No(NoCertificate::ConeGenerating {
            convention: Convention::Row,
            witness: vector(&[1, 0]),
            separator: vector(&[-1, 2]),
        });
        let s = serialize(&Document::Certificate(cert.clone()));
        assert_eq!(
            s,
            "CERT NO CONE_GENERATING ROW\nWITNESS 1 0\nSEPARATOR -1 2\n"
        );
        assert_eq!(parse(&s).unwrap(), Document::Certificate(cert));
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse("MATRIX 2 2\n1 2\n3\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = parse("MATRIX 1 2\n1 x\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        let err = parse("BOGUS 1 1\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = parse("MATRIX 1 1\n1\n2\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(parse("MATRIX 1 1\n1/-2\n").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn comments_and_canonicalization() {
        let doc = parse("# prism\nMATRIX 1 2\n2/4   -6/3\n").unwrap();
        assert_eq!(serialize(&doc), "MATRIX 1 2\n1/2 -2\n");
    }

    #[test]
    fn empty_rows_round_trip() {
        let doc = Document::Matrix(Matrix::zeros(2, 0));
        let s = serialize(&doc);
        assert_eq!(s, "MATRIX 2 0\n\n\n");
        assert_eq!(parse(&s).unwrap(), doc);
    }

    #[test]
    fn cone_v_with_lineality() {
        let c = ConeV::new(2, vec![vector(&[0, 1])], vec![vector(&[1, 0])]).unwrap();
        let s = serialize(&Document::ConeV(c.clone()));
        assert_eq!(s, "CONE_V 1 2\n0 1\nLINEALITY 1\n1 0\n");
        assert_eq!(parse(&s).unwrap(), Document::ConeV(c));
    }
}
