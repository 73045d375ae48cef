use std::fmt;

use super::FpError;

/// One syntactic item of a word: a generator letter, or a parenthesized
/// subword raised to an integer power.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Item {
    Letter(u8),
    Group(Vec<Item>, i64),
}

/// A word over the involutory generators `0`, `1`, `2`, kept in the form it
/// was written so printing reproduces the input.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    items: Vec<Item>,
}

impl Word {
    pub fn from_letters(letters: &[u8]) -> Self {
        assert!(letters.iter().all(|&l| l < 3), "letters are 0, 1 or 2");
        Word { items: letters.iter().map(|&l| Item::Letter(l)).collect() }
    }

    /// `inner` raised to `exp`, printed as `(inner)^exp`.
    pub fn power(inner: Word, exp: i64) -> Self {
        Word { items: vec![Item::Group(inner.items, exp)] }
    }

    pub fn concat(words: &[Word]) -> Self {
        Word { items: words.iter().flat_map(|w| w.items.iter().cloned()).collect() }
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    /// Letters after expanding powers. A negative power of a word over
    /// involutions is the reversed word raised to the absolute value.
    pub fn expand(&self) -> Vec<u8> {
        let mut out = Vec::new();
        expand_into(&self.items, &mut out);
        out
    }

    /// Freely and cyclically reduced letters (adjacent equal letters cancel).
    pub fn reduced_relator(&self) -> Vec<u8> {
        let mut stack: Vec<u8> = Vec::new();
        for l in self.expand() {
            if stack.last() == Some(&l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        let (mut a, mut b) = (0, stack.len());
        while b - a >= 2 && stack[a] == stack[b - 1] {
            a += 1;
            b -= 1;
        }
        stack[a..b].to_vec()
    }

    pub fn parse(text: &str) -> Result<Self, FpError> {
        let mut parser = Parser { bytes: text.as_bytes(), pos: 0 };
        let items = parser.items(false)?;
        parser.skip_ws();
        if parser.pos != parser.bytes.len() {
            return Err(parser.err("unexpected character"));
        }
        if items.is_empty() {
            return Err(parser.err("empty word"));
        }
        Ok(Word { items })
    }
}

fn expand_into(items: &[Item], out: &mut Vec<u8>) {
    for item in items {
        match item {
            Item::Letter(l) => out.push(*l),
            Item::Group(inner, exp) => {
                let mut body = Vec::new();
                expand_into(inner, &mut body);
                if *exp < 0 {
                    body.reverse();
                }
                for _ in 0..exp.unsigned_abs() {
                    out.extend_from_slice(&body);
                }
            }
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> FpError {
        FpError::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn items(&mut self, nested: bool) -> Result<Vec<Item>, FpError> {
        let mut items = Vec::new();
        loop {
            self.skip_ws();
            let Some(&c) = self.bytes.get(self.pos) else {
                if nested {
                    return Err(self.err("unclosed '('"));
                }
                return Ok(items);
            };
            match c {
                b'0' | b'1' | b'2' => {
                    items.push(Item::Letter(c - b'0'));
                    self.pos += 1;
                }
                b'(' => {
                    self.pos += 1;
                    let inner = self.items(true)?;
                    self.pos += 1;
                    let exp = if self.bytes.get(self.pos) == Some(&b'^') {
                        self.pos += 1;
                        self.integer()?
                    } else {
                        1
                    };
                    items.push(Item::Group(inner, exp));
                }
                b')' if nested => return Ok(items),
                _ => return Err(self.err("expected 0, 1, 2 or '('")),
            }
        }
    }

    fn integer(&mut self) -> Result<i64, FpError> {
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if digits == self.pos {
            return Err(self.err("expected an exponent"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| FpError::Syntax { pos: start, msg: "exponent out of range".into() })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_items(&self.items, f)
    }
}

fn write_items(items: &[Item], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut after_power = false;
    for item in items {
        if after_power {
            write!(f, " ")?;
        }
        match item {
            Item::Letter(l) => {
                write!(f, "{l}")?;
                after_power = false;
            }
            Item::Group(inner, exp) => {
                write!(f, "(")?;
                write_items(inner, f)?;
                write!(f, ")")?;
                after_power = *exp != 1;
                if after_power {
                    write!(f, "^{exp}")?;
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_expand() {
        let w = Word::parse("(012)^2").unwrap();
        assert_eq!(w.expand(), vec![0, 1, 2, 0, 1, 2]);
        let w = Word::parse("(0121)^2 2").unwrap();
        assert_eq!(w.expand(), vec![0, 1, 2, 1, 0, 1, 2, 1, 2]);
        let w = Word::parse("(01)^-2").unwrap();
        assert_eq!(w.expand(), vec![1, 0, 1, 0]);
        let w = Word::parse("((01)^2 2)^2").unwrap();
        assert_eq!(w.expand().len(), 10);
    }

    #[test]
    fn print_round_trip() {
        for text in ["(012)^6", "(0121)^2 2", "0(12)^-3 0(12)^3", "(01)2", "((01)^2 2)^3 1"] {
            assert_eq!(Word::parse(text).unwrap().to_string(), text);
        }
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(Word::parse("(01^3"), Err(FpError::Syntax { .. })));
        assert!(Word::parse("013").is_err());
        assert!(Word::parse("").is_err());
        assert!(Word::parse("(01)^").is_err());
        assert!(Word::parse("01)").is_err());
    }

    #[test]
    fn relator_reduction() {
        assert_eq!(Word::parse("0110").unwrap().reduced_relator(), Vec::<u8>::new());
        assert_eq!(Word::parse("10121").unwrap().reduced_relator(), vec![0, 1, 2]);
        assert_eq!(Word::parse("(02)^2").unwrap().reduced_relator(), vec![0, 2, 0, 2]);
    }
}
