//! Text format for ideals:
//!
//! ```text
//! ring x0 x1 x2 x3
//! field gf 32003
//! order glex
//! ideal
//! x0^3 - x1*x2^2
//! x1^3 - x2^2*x3
//! end
//! ```
//!
//! `#` starts a comment running to the end of the line. Blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::{Field, FieldChoice};
use crate::groebner::Ideal;
use crate::monomial::TermOrder;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub text: String,
    /// 1-based line of the generator in the source text.
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub names: Vec<String>,
    pub field: FieldChoice,
    pub order: TermOrder,
    pub generators: Vec<Generator>,
}

struct Line<'a> {
    number: usize,
    /// Byte offset of `text` within the raw line.
    indent: usize,
    text: &'a str,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim_start();
        let indent = body.len() - trimmed.len();
        let trimmed = trimmed.trim_end();
        (!trimmed.is_empty()).then_some(Line {
            number: k + 1,
            indent,
            text: trimmed,
        })
    })
}

fn column_of(line: &Line<'_>, byte: usize) -> usize {
    line.text[..byte].chars().count() + line.indent + 1
}

fn expect_keyword<'a>(line: Option<&Line<'a>>, keyword: &str, last_line: usize) -> Result<Vec<&'a str>> {
    let line = line.ok_or_else(|| parse_error(last_line + 1, 1, format!("expected `{}`", keyword)))?;
    let mut words = line.text.split_whitespace();
    if words.next() != Some(keyword) {
        return Err(parse_error(
            line.number,
            line.indent + 1,
            format!("expected `{}`", keyword),
        ));
    }
    Ok(words.collect())
}

fn parse_field(words: &[&str], line: &Line<'_>) -> Result<FieldChoice> {
    let choice = parse_field_words(words).ok_or_else(|| {
        parse_error(
            line.number,
            line.indent + 1,
            "expected `field gf <prime>` or `field qq`",
        )
    })?;
    if !choice.is_supported() {
        return Err(Error::UnsupportedField(choice.to_string()));
    }
    Ok(choice)
}

fn parse_field_words(words: &[&str]) -> Option<FieldChoice> {
    match words {
        ["qq"] => Some(FieldChoice::Rational),
        ["gf", p] => p.parse::<u32>().ok().map(FieldChoice::Prime),
        _ => None,
    }
}

/// Parses a field name as written after `field`, e.g. `qq` or `gf 101`.
pub fn parse_field_choice(text: &str) -> Result<FieldChoice> {
    let words: Vec<&str> = text.split_whitespace().collect();
    let choice = parse_field_words(&words)
        .ok_or_else(|| Error::Invalid(format!("field must be `qq` or `gf <prime>`, got `{}`", text)))?;
    if !choice.is_supported() {
        return Err(Error::UnsupportedField(choice.to_string()));
    }
    Ok(choice)
}

pub fn parse_order(text: &str) -> Option<TermOrder> {
    match text {
        "glex" => Some(TermOrder::GradedLex),
        "grevlex" => Some(TermOrder::GradedRevLex),
        _ => None,
    }
}

pub fn order_name(order: TermOrder) -> &'static str {
    match order {
        TermOrder::GradedLex => "glex",
        TermOrder::GradedRevLex => "grevlex",
        TermOrder::EliminateFirst => "elim0",
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_alphabetic()) && chars.all(|c| c.is_alphanumeric() || c == '_')
}

/// Parses an ideal file and checks every generator in the declared field.
pub fn parse_ideal_file(text: &str) -> Result<IdealFile> {
    let lines: Vec<Line<'_>> = content_lines(text).collect();
    let last = lines.last().map_or(0, |l| l.number);
    let mut it = lines.iter();

    let ring_line = it.next();
    let names: Vec<String> = expect_keyword(ring_line, "ring", last)?
        .into_iter()
        .map(str::to_string)
        .collect();
    let ring_line = ring_line.expect("checked by expect_keyword");
    if names.is_empty() {
        return Err(parse_error(
            ring_line.number,
            ring_line.indent + 1,
            "ring needs at least one variable",
        ));
    }
    for (k, name) in names.iter().enumerate() {
        let column = ring_line
            .text
            .find(name.as_str())
            .map_or(1, |b| column_of(ring_line, b));
        if !valid_name(name) {
            return Err(parse_error(
                ring_line.number,
                column,
                format!("invalid variable name `{}`", name),
            ));
        }
        if names[..k].contains(name) {
            return Err(parse_error(
                ring_line.number,
                column,
                format!("duplicate variable `{}`", name),
            ));
        }
    }

    let field_line = it.next();
    let words = expect_keyword(field_line, "field", last)?;
    let field = parse_field(&words, field_line.expect("checked by expect_keyword"))?;

    let order_line = it.next();
    let words = expect_keyword(order_line, "order", last)?;
    let order_line = order_line.expect("checked by expect_keyword");
    let order = match words.as_slice() {
        [w] => parse_order(w),
        _ => None,
    }
    .ok_or_else(|| {
        parse_error(
            order_line.number,
            order_line.indent + 1,
            "expected `order glex` or `order grevlex`",
        )
    })?;

    let ideal_line = it.next();
    let words = expect_keyword(ideal_line, "ideal", last)?;
    if !words.is_empty() {
        let l = ideal_line.expect("checked by expect_keyword");
        return Err(parse_error(l.number, l.indent + 1, "`ideal` takes no arguments"));
    }

    let mut generators = Vec::new();
    let mut ended = false;
    for line in it.by_ref() {
        if line.text == "end" {
            ended = true;
            break;
        }
        generators.push((
            line,
            Generator {
                text: line.text.to_string(),
                line: line.number,
            },
        ));
    }
    if !ended {
        return Err(parse_error(last + 1, 1, "missing `end`"));
    }
    if let Some(extra) = it.next() {
        return Err(parse_error(extra.number, extra.indent + 1, "text after `end`"));
    }

    let file = IdealFile {
        names,
        field,
        order,
        generators: generators.iter().map(|(_, g)| g.clone()).collect(),
    };
    crate::with_field!(field, F => {
        for (k, (line, g)) in generators.iter().enumerate() {
            check_generator::<F>(&file, k, g, line)?;
        }
    }, unsupported => return Err(Error::UnsupportedField(field.to_string())));
    Ok(file)
}

fn check_generator<F: Field>(file: &IdealFile, index: usize, g: &Generator, line: &Line<'_>) -> Result<Polynomial<F>> {
    let p = parse_generator::<F>(file, g, line.indent)?;
    if p.is_zero() {
        return Err(parse_error(g.line, line.indent + 1, "generator is zero"));
    }
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous {
            index,
            poly: g.text.clone(),
        });
    }
    Ok(p)
}

fn parse_generator<F: Field>(file: &IdealFile, g: &Generator, indent: usize) -> Result<Polynomial<F>> {
    Polynomial::parse(&g.text, &file.names, file.order).map_err(|e| match e {
        Error::Parse { column, message, .. } => Error::Parse {
            line: g.line,
            column: column + indent,
            message,
        },
        Error::UnknownVariable(v) => Error::Parse {
            line: g.line,
            column: g.text.find(v.as_str()).map_or(1, |b| g.text[..b].chars().count() + 1) + indent,
            message: format!("unknown variable `{}`", v),
        },
        other => other,
    })
}

impl IdealFile {
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    /// The generators as an ideal over `F`, in graded lex.
    pub fn ideal<F: Field>(&self) -> Result<Ideal<F>> {
        let gens = self
            .generators
            .iter()
            .map(|g| Polynomial::parse(&g.text, &self.names, TermOrder::GradedLex))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.nvars(), gens)
    }

    /// Builds a file from an ideal, printing generators with `names`; rational
    /// generators are scaled to integer coefficients so the text parses back.
    pub fn from_ideal<F: Field>(ideal: &Ideal<F>, names: Vec<String>, field: FieldChoice, order: TermOrder) -> Self {
        let generators = ideal
            .generators()
            .iter()
            .enumerate()
            .map(|(k, g)| Generator {
                text: g.integral().format_with(&names),
                line: k + 5,
            })
            .collect();
        IdealFile {
            names,
            field,
            order,
            generators,
        }
    }

    pub fn write(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "ring {}", self.names.join(" "));
        let _ = writeln!(out, "field {}", self.field);
        let _ = writeln!(out, "order {}", order_name(self.order));
        out.push_str("ideal\n");
        for g in &self.generators {
            out.push_str(&g.text);
            out.push('\n');
        }
        out.push_str("end\n");
        out
    }
}
