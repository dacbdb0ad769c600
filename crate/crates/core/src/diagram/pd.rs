//! PD-code text: whitespace-separated `X(a,b,c,d)` tokens, `#` comment lines.

use super::{Crossing, Diagram, DiagramError};

/// Parse one diagram. Comment lines are skipped; all remaining tokens belong to
/// the same diagram.
pub fn parse_pd(text: &str) -> Result<Diagram, DiagramError> {
    let body: String = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join("\n");
    Diagram::new(parse_crossings(&body)?)
}

/// Parse a file holding one diagram per non-empty, non-comment line.
pub fn parse_pd_lines(text: &str) -> Result<Vec<Diagram>, (usize, DiagramError)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| parse_pd(l).map_err(|e| (i + 1, e)))
        .collect()
}

pub fn emit_pd(d: &Diagram) -> String {
    d.crossings()
        .iter()
        .map(|x| {
            let [a, b, c, e] = x.labels();
            format!("X({a},{b},{c},{e})")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
    token: usize,
}

impl Scanner<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn error(&self, reason: impl Into<String>) -> DiagramError {
        DiagramError::Malformed {
            token: self.token,
            offset: self.pos,
            reason: reason.into(),
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), DiagramError> {
        self.skip_ws();
        match self.bytes.get(self.pos) {
            Some(&b) if b == c => {
                self.pos += 1;
                Ok(())
            }
            Some(&b) => Err(self.error(format!("expected '{}', found '{}'", c as char, b as char))),
            None => Err(self.error(format!("expected '{}', found end of input", c as char))),
        }
    }

    fn number(&mut self) -> Result<u32, DiagramError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an edge label"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| self.error("edge label too large"))
    }
}

fn parse_crossings(text: &str) -> Result<Vec<Crossing>, DiagramError> {
    let mut s = Scanner {
        bytes: text.as_bytes(),
        pos: 0,
        token: 0,
    };
    let mut out = Vec::new();
    loop {
        s.skip_ws();
        if s.pos >= s.bytes.len() {
            break;
        }
        s.expect(b'X')?;
        s.expect(b'(')?;
        let mut labels = [0u32; 4];
        for (i, slot) in labels.iter_mut().enumerate() {
            if i > 0 {
                s.expect(b',')?;
            }
            *slot = s.number()?;
        }
        s.expect(b')')?;
        out.push(Crossing::new(labels));
        s.token += 1;
    }
    Ok(out)
}
