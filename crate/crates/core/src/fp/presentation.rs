use std::fmt;

use super::{FpError, Word};

/// A quotient of the string Coxeter group `[p, q]` on involutions `g0, g1, g2`.
///
/// The relators `g_i^2`, `(g0 g2)^2`, `(g0 g1)^p` (when `p > 0`) and
/// `(g1 g2)^q` (when `q > 0`) are implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    pub p: u32,
    pub q: u32,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn new(p: u32, q: u32) -> Self {
        Presentation { p, q, relators: Vec::new() }
    }

    pub fn with_relator(mut self, word: Word) -> Self {
        self.relators.push(word);
        self
    }

    /// Text form `p=<int> q=<int> [rel=<word> ...]`. Whitespace-separated
    /// tokens without `=` continue the preceding `rel` value.
    pub fn parse(text: &str) -> Result<Self, FpError> {
        let mut p = None;
        let mut q = None;
        let mut rels: Vec<(usize, String)> = Vec::new();
        let mut in_rel = false;
        for (pos, token) in tokens(text) {
            if let Some((key, value)) = token.split_once('=') {
                in_rel = false;
                let value_pos = pos + key.len() + 1;
                match key {
                    "p" | "q" => {
                        let n: u32 = value.parse().map_err(|_| FpError::Syntax {
                            pos: value_pos,
                            msg: format!("expected a nonnegative integer for {key}"),
                        })?;
                        let slot = if key == "p" { &mut p } else { &mut q };
                        if slot.replace(n).is_some() {
                            return Err(FpError::Syntax { pos, msg: format!("{key} given twice") });
                        }
                    }
                    "rel" => {
                        rels.push((value_pos, value.to_string()));
                        in_rel = true;
                    }
                    _ => return Err(FpError::Syntax { pos, msg: format!("unknown key '{key}'") }),
                }
            } else if in_rel {
                let last = rels.last_mut().expect("in_rel implies a rel entry");
                last.1.push(' ');
                last.1.push_str(token);
            } else {
                return Err(FpError::Syntax { pos, msg: "expected key=value".into() });
            }
        }
        let p = p.ok_or(FpError::Syntax { pos: text.len(), msg: "missing p=".into() })?;
        let q = q.ok_or(FpError::Syntax { pos: text.len(), msg: "missing q=".into() })?;
        let mut relators = Vec::new();
        for (pos, body) in rels {
            let word = Word::parse(&body).map_err(|e| match e {
                FpError::Syntax { pos: inner, msg } => FpError::Syntax { pos: pos + inner, msg },
                other => other,
            })?;
            relators.push(word);
        }
        Ok(Presentation { p, q, relators })
    }

    /// Every relator as reduced letters, implicit ones first. Involution
    /// relators are omitted; coset tables enforce them structurally.
    pub fn relator_letters(&self) -> Vec<Vec<u8>> {
        let mut out = vec![vec![0, 2, 0, 2]];
        if self.p > 0 {
            out.push([0u8, 1].repeat(self.p as usize));
        }
        if self.q > 0 {
            out.push([1u8, 2].repeat(self.q as usize));
        }
        for w in &self.relators {
            let r = w.reduced_relator();
            if !r.is_empty() {
                out.push(r);
            }
        }
        out
    }
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_ascii_whitespace().map(move |t| (t.as_ptr() as usize - text.as_ptr() as usize, t))
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} q={}", self.p, self.q)?;
        for r in &self.relators {
            write!(f, " rel={r}")?;
        }
        Ok(())
    }
}
