//! Text syntax for classes: `e[1,3] + e[5]`, `1`, `0`.
//!
//! ```text
//! class := term ('+' term)*
//! term  := 'e[' int (',' int)* ']' | '1' | '0'
//! ```
//!
//! Each `e[k]` is read through [`generator_class`], so indices that vanish in
//! the algebra give zero plus a warning instead of an error.

use crate::algebra::{generator_class, ChowClass, GeneratorContext};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedClass {
    pub class: ChowClass,
    pub warnings: Vec<String>,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            Some(got) => self.err(format!("expected '{}', found '{}'", c as char, got as char)),
            None => self.err(format!("expected '{}', found end of input", c as char)),
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        text.parse::<i64>().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }
}

pub fn parse_class(text: &str, ctx: &GeneratorContext) -> Result<ParsedClass> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let mut class = ChowClass::zero(ctx);
    let mut warnings = Vec::new();
    loop {
        let term = parse_term(&mut cur, ctx, &mut warnings)?;
        class = class.add(&term)?;
        match cur.peek() {
            None => break,
            Some(b'+') => cur.pos += 1,
            Some(c) => {
                return cur.err(format!(
                    "expected '+' or end of input, found '{}'",
                    c as char
                ))
            }
        }
    }
    Ok(ParsedClass { class, warnings })
}

fn parse_term(
    cur: &mut Cursor<'_>,
    ctx: &GeneratorContext,
    warnings: &mut Vec<String>,
) -> Result<ChowClass> {
    match cur.peek() {
        Some(b'1') => {
            cur.pos += 1;
            Ok(ChowClass::one(ctx))
        }
        Some(b'0') => {
            cur.pos += 1;
            Ok(ChowClass::zero(ctx))
        }
        Some(b'e') => {
            cur.pos += 1;
            cur.expect(b'[')?;
            let mut indices: Vec<i64> = Vec::new();
            loop {
                let at = cur.pos;
                let k = cur.int()?;
                if indices.contains(&k) {
                    cur.pos = at;
                    return cur.err(format!("repeated index {k}"));
                }
                indices.push(k);
                match cur.peek() {
                    Some(b',') => cur.pos += 1,
                    Some(b']') => {
                        cur.pos += 1;
                        break;
                    }
                    _ => return cur.err("expected ',' or ']'"),
                }
            }
            let mut acc = ChowClass::one(ctx);
            for k in indices {
                let g = generator_class(k, ctx)?;
                if g.is_zero() {
                    warnings.push(format!("index {k} vanishes in Ch_K"));
                }
                acc = acc.multiply(&g)?;
            }
            Ok(acc)
        }
        Some(c) => cur.err(format!("expected a term, found '{}'", c as char)),
        None => cur.err("expected a term, found end of input"),
    }
}
