//! Text format for presentations.
//!
//! One directive per line; `#` starts a comment.
//!
//! ```text
//! field fp:1000003          # optional; checked against the caller's field
//! m 2                       # optional, default 0
//! lambda 1                  # optional, default 0; the value of `l` below
//! bound 6                   # required: length bound of the quotient
//! vertices 1 2 3 4 5 6
//! arrow alpha 3 1           # name, source, target
//! relation gamma*delta - beta*epsilon - l*(beta*rho*omega)^1*beta*epsilon
//! ```
//!
//! Relation grammar, whitespace-insensitive:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' INT]
//! atom   := INT ['/' INT] | 'l' | ARROW | 'e'VERTEX | '(' expr ')'
//! ```
//!
//! Identifiers resolve to arrows before idempotents `e<vertex>`.

use crate::error::{Error, Result};
use crate::path_algebra::{FreeElement, Presentation};
use crate::quiver::{Path, Quiver};
use crate::scalars::Field;

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str, line: usize, offset: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = offset + i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if "+-*^()/".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else if c.is_ascii_alphanumeric() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if word.bytes().all(|b| b.is_ascii_digit()) {
                out.push((Tok::Int(word), col));
            } else {
                out.push((Tok::Ident(word), col));
            }
        } else {
            return Err(syntax(line, col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

#[derive(Clone)]
enum Value<E> {
    Scalar(E),
    Element(FreeElement<E>),
}

struct Parser<'a, F: Field> {
    field: &'a F,
    quiver: &'a Quiver,
    lambda: &'a F::Elem,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn err(&self, message: impl Into<String>) -> Error {
        syntax(self.line, self.col(), message)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Value<F::Elem>> {
        let f = self.field;
        let mut acc: Option<Value<F::Elem>> = None;
        let mut first = true;
        loop {
            let negative = if self.eat('-') {
                true
            } else if self.eat('+') || first {
                false
            } else {
                break;
            };
            let col = self.col();
            let mut term = self.term()?;
            if negative {
                term = match term {
                    Value::Scalar(c) => Value::Scalar(f.neg(&c)),
                    Value::Element(x) => Value::Element(x.scale(f, &f.neg(&f.one()))),
                };
            }
            acc = Some(match (acc, term) {
                (None, t) => t,
                (Some(Value::Scalar(a)), Value::Scalar(b)) => Value::Scalar(f.add(&a, &b)),
                (Some(Value::Element(a)), Value::Element(b)) => {
                    let sum = a.add(f, &b);
                    sum.endpoints()
                        .map_err(|_| syntax(self.line, col, "terms have different endpoints"))?;
                    Value::Element(sum)
                }
                _ => return Err(syntax(self.line, col, "cannot add a scalar to a path")),
            });
            first = false;
        }
        acc.ok_or_else(|| self.err("expected a term"))
    }

    fn term(&mut self) -> Result<Value<F::Elem>> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            let col = self.col();
            let rhs = self.factor()?;
            acc = self.multiply(acc, rhs, col)?;
        }
        Ok(acc)
    }

    fn multiply(&self, a: Value<F::Elem>, b: Value<F::Elem>, col: usize) -> Result<Value<F::Elem>> {
        let f = self.field;
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(f.mul(&x, &y)),
            (Value::Scalar(c), Value::Element(x)) | (Value::Element(x), Value::Scalar(c)) => Value::Element(x.scale(f, &c)),
            (Value::Element(x), Value::Element(y)) => {
                let left = x.endpoints()?.map(|e| e.1);
                let right = y.endpoints()?.map(|e| e.0);
                if let (Some(t), Some(s)) = (left, right) {
                    if t != s {
                        return Err(syntax(
                            self.line,
                            col,
                            format!(
                                "non-composable product: path ends at {} but next starts at {}",
                                self.quiver.vertex_name(t),
                                self.quiver.vertex_name(s)
                            ),
                        ));
                    }
                }
                Value::Element(x.mul(f, self.quiver, &y))
            }
        })
    }

    fn factor(&mut self) -> Result<Value<F::Elem>> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let col = self.col();
        let k = match self.toks.get(self.pos) {
            Some((Tok::Int(s), _)) => s.parse::<usize>().map_err(|_| self.err("exponent too large"))?,
            _ => return Err(self.err("expected an integer exponent")),
        };
        self.pos += 1;
        if k == 0 {
            return Err(syntax(self.line, col, "exponent must be positive"));
        }
        let mut acc = base.clone();
        for _ in 1..k {
            acc = self.multiply(acc, base.clone(), col)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Value<F::Elem>> {
        let f = self.field;
        let (tok, col) = match self.toks.get(self.pos) {
            Some(t) => t.clone(),
            None => return Err(self.err("unexpected end of relation")),
        };
        self.pos += 1;
        match tok {
            Tok::Int(n) => {
                let text = if self.eat('/') {
                    match self.toks.get(self.pos) {
                        Some((Tok::Int(d), _)) => {
                            self.pos += 1;
                            format!("{n}/{d}")
                        }
                        _ => return Err(self.err("expected a denominator")),
                    }
                } else {
                    n
                };
                let c = f.parse(&text).map_err(|e| syntax(self.line, col, e.to_string()))?;
                Ok(Value::Scalar(c))
            }
            Tok::Ident(name) if name == "l" => Ok(Value::Scalar(self.lambda.clone())),
            Tok::Ident(name) => {
                if let Ok(a) = self.quiver.arrow_index(&name) {
                    return Ok(Value::Element(FreeElement::from_path(f, self.quiver.arrow_path(a))));
                }
                if let Some(v) = name.strip_prefix('e').and_then(|v| self.quiver.vertex_index(v).ok()) {
                    return Ok(Value::Element(FreeElement::from_path(f, Path::trivial(v))));
                }
                Err(syntax(self.line, col, format!("unknown arrow `{name}`")))
            }
            Tok::Sym('(') => {
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Tok::Sym(c) => Err(syntax(self.line, col, format!("unexpected `{c}`"))),
        }
    }
}

/// Parses one relation over `quiver`, with `l` standing for `lambda`.
pub fn parse_relation<F: Field>(
    field: &F,
    quiver: &Quiver,
    lambda: &F::Elem,
    text: &str,
    line: usize,
    offset: usize,
) -> Result<FreeElement<F::Elem>> {
    let toks = tokenize(text, line, offset)?;
    let end_col = offset + text.chars().count() + 1;
    let mut p = Parser {
        field,
        quiver,
        lambda,
        toks,
        pos: 0,
        line,
        end_col,
    };
    let value = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    match value {
        Value::Element(x) if !x.is_zero() => Ok(x),
        Value::Element(_) => Err(syntax(line, offset + 1, "relation is zero")),
        Value::Scalar(_) => Err(syntax(line, offset + 1, "relation has no path")),
    }
}

/// Field named by a `field` directive, if present.
pub fn declared_field(text: &str) -> Option<String> {
    text.lines().find_map(|l| {
        let l = l.split('#').next().unwrap_or("");
        let mut words = l.split_whitespace();
        (words.next() == Some("field")).then(|| words.next().unwrap_or("").to_string())
    })
}

pub fn parse_presentation<F: Field>(field: &F, text: &str) -> Result<Presentation<F>> {
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut relation_lines: Vec<(usize, usize, String)> = Vec::new();
    let (mut m, mut lambda, mut bound) = (0usize, field.zero(), None);
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let keyword = trimmed.split_whitespace().next().unwrap();
        let rest_offset = indent + keyword.len();
        let rest = &content[rest_offset..];
        let words: Vec<&str> = rest.split_whitespace().collect();
        let arg_col = rest_offset + rest.len() - rest.trim_start().len() + 1;
        let one_word = |what: &str| -> Result<&str> {
            match words.as_slice() {
                [w] => Ok(w),
                _ => Err(syntax(line, arg_col, format!("`{keyword}` takes one {what}"))),
            }
        };
        match keyword {
            "field" => {
                let spec = one_word("field spec")?;
                if spec != field.describe() {
                    return Err(syntax(
                        line,
                        arg_col,
                        format!("file declares field {spec}, caller uses {}", field.describe()),
                    ));
                }
            }
            "m" => m = one_word("integer")?.parse().map_err(|_| syntax(line, arg_col, "expected an integer"))?,
            "bound" => {
                bound = Some(
                    one_word("integer")?
                        .parse::<usize>()
                        .map_err(|_| syntax(line, arg_col, "expected an integer"))?,
                )
            }
            "lambda" => lambda = field.parse(one_word("scalar")?).map_err(|e| syntax(line, arg_col, e.to_string()))?,
            "vertices" => {
                if words.is_empty() {
                    return Err(syntax(line, arg_col, "no vertices listed"));
                }
                vertices = Some(words.iter().map(|w| w.to_string()).collect());
            }
            "arrow" => match words.as_slice() {
                [n, s, t] => arrows.push((n.to_string(), s.to_string(), t.to_string())),
                _ => return Err(syntax(line, arg_col, "`arrow` takes name, source and target")),
            },
            "relation" => relation_lines.push((line, rest_offset, rest.to_string())),
            other => return Err(syntax(line, indent + 1, format!("unknown directive `{other}`"))),
        }
    }
    let last = text.lines().count().max(1);
    let vertices = vertices.ok_or_else(|| syntax(last, 1, "missing `vertices` directive"))?;
    let bound = bound.ok_or_else(|| syntax(last, 1, "missing `bound` directive"))?;
    let arrow_refs: Vec<(&str, &str, &str)> = arrows.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str())).collect();
    let quiver = Quiver::new(&vertices, &arrow_refs)?;
    let relations = relation_lines
        .iter()
        .map(|(line, offset, text)| parse_relation(field, &quiver, &lambda, text, *line, *offset))
        .collect::<Result<Vec<_>>>()?;
    Presentation::new(field, quiver, relations, lambda, m, bound)
}

pub fn emit_presentation<F: Field>(pres: &Presentation<F>) -> String {
    let f = &pres.field;
    let q = &pres.quiver;
    let mut out = String::new();
    out.push_str(&format!("field {}\n", f.describe()));
    out.push_str(&format!("m {}\n", pres.m));
    out.push_str(&format!("lambda {}\n", f.format(&pres.lambda)));
    out.push_str(&format!("bound {}\n", pres.length_bound));
    out.push_str(&format!("vertices {}\n", q.vertex_names().join(" ")));
    for a in q.arrows() {
        out.push_str(&format!(
            "arrow {} {} {}\n",
            a.name,
            q.vertex_name(a.source),
            q.vertex_name(a.target)
        ));
    }
    for r in &pres.relations {
        out.push_str(&format!("relation {}\n", r.format(f, q)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path_algebra::tetrahedral_relations;
    use crate::scalars::{Fp, Rationals};

    #[test]
    fn round_trip_tetrahedral() {
        let f = Fp::new(1_000_003).unwrap();
        for lambda in [0, 1, 5] {
            let pres = tetrahedral_relations(&f, 2, lambda).unwrap();
            assert_eq!(parse_presentation(&f, &emit_presentation(&pres)).unwrap(), pres);
        }
        let q = Rationals;
        let pres = tetrahedral_relations(&q, 3, q.parse("-2/3").unwrap()).unwrap();
        assert_eq!(parse_presentation(&q, &emit_presentation(&pres)).unwrap(), pres);
    }

    #[test]
    fn displayed_gamma_relation() {
        let f = Fp::new(1_000_003).unwrap();
        for (m, text) in [
            (2, "gamma*delta - beta*epsilon - l*(beta*rho*omega)^1*beta*epsilon"),
            (3, "gamma*delta - beta*epsilon - l*(beta*rho*omega)*(beta*rho*omega)*beta*epsilon"),
        ] {
            let pres = tetrahedral_relations(&f, m, 1).unwrap();
            let gamma = pres.quiver.arrow_index("gamma").unwrap();
            let parsed = parse_relation(&f, &pres.quiver, &pres.lambda, text, 1, 0).unwrap();
            assert_eq!(parsed, pres.relations[gamma], "m = {m}");
        }
    }

    #[test]
    fn errors_carry_positions() {
        let f = Fp::new(101).unwrap();
        let pres = tetrahedral_relations(&f, 2, 1).unwrap();
        let q = &pres.quiver;
        match parse_relation(&f, q, &1, "delta*alpha", 4, 9) {
            Err(Error::Syntax { line: 4, column: 16, message }) => assert!(message.contains("non-composable")),
            other => panic!("{other:?}"),
        }
        match parse_relation(&f, q, &1, "gamma*delta - zeta", 2, 0) {
            Err(Error::Syntax { line: 2, column: 15, message }) => assert!(message.contains("zeta")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_relation(&f, q, &1, "gamma*(delta", 1, 0),
            Err(Error::Syntax { column: 13, .. })
        ));
        let bad = "vertices 1 2\narrow a 1 2\nbound 3\nrelation a +\n";
        assert!(matches!(parse_presentation(&f, bad), Err(Error::Syntax { line: 4, .. })));
    }

    #[test]
    fn idempotent_terms() {
        let f = Fp::new(101).unwrap();
        let text = "vertices x\narrow eps x x\nbound 3\nlambda 2\nrelation eps^2 - l*eps\nrelation eps^3 - 4*ex\n";
        let pres = parse_presentation(&f, text).unwrap();
        assert_eq!(pres.relations.len(), 2);
        assert_eq!(parse_presentation(&f, &emit_presentation(&pres)).unwrap(), pres);
    }
}
