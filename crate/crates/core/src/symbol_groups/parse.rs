//! Text form of formal sums: `[0,1,2] - 2[1,1,2]`, or `[(1,0),(0,1)]` for
//! non-cyclic groups.

use super::symbol::{Character, DualGroup, FormalSymbolSum, Symbol};
use super::SymbolError;

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), SymbolError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn error(&self, msg: &str) -> SymbolError {
        SymbolError::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn int(&mut self) -> Result<i64, SymbolError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.s.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.error("expected an integer"))
    }

    fn character(&mut self, group: &DualGroup) -> Result<Character, SymbolError> {
        if self.eat(b'(') {
            let mut comps = vec![self.int()?];
            while self.eat(b',') {
                comps.push(self.int()?);
            }
            self.expect(b')')?;
            group.character(&comps)
        } else {
            group.character(&[self.int()?])
        }
    }

    fn symbol(&mut self, group: &DualGroup) -> Result<Symbol, SymbolError> {
        self.expect(b'[')?;
        let mut chars = vec![self.character(group)?];
        while self.eat(b',') {
            chars.push(self.character(group)?);
        }
        self.expect(b']')?;
        Symbol::new(chars)
    }
}

pub fn parse_formal_sum(text: &str, group: &DualGroup) -> Result<FormalSymbolSum, SymbolError> {
    let mut cur = Cursor {
        s: text.as_bytes(),
        pos: 0,
    };
    let mut sum = FormalSymbolSum::new();
    if cur.peek().is_none() || (cur.peek() == Some(b'0') && text.trim() == "0") {
        return Ok(sum);
    }
    let mut first = true;
    loop {
        let mut sign = 1;
        if cur.eat(b'-') {
            sign = -1;
        } else if !cur.eat(b'+') && !first {
            return Err(cur.error("expected `+` or `-`"));
        }
        first = false;
        let coeff = match cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                let k = cur.int()?;
                cur.eat(b'*');
                k
            }
            _ => 1,
        };
        let s = cur.symbol(group)?;
        sum.add(s, sign * coeff);
        if cur.peek().is_none() {
            return Ok(sum);
        }
    }
}
