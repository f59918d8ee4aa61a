//! Tokens and raw terms of the definition language.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Semi,
    Colon,
    Comma,
    Arrow,
    Le,
    Eq,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Le => f.write_str("`<=`"),
            Tok::Eq => f.write_str("`=`"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{pos}: {message}")]
pub struct SyntaxError {
    pub pos: Pos,
    pub message: String,
}

impl SyntaxError {
    pub fn new(pos: Pos, message: impl Into<String>) -> SyntaxError {
        SyntaxError { pos, message: message.into() }
    }
}

fn is_ident_char(c: char, next: Option<char>) -> bool {
    !(c.is_whitespace() || "{}();:,=#<".contains(c) || (c == '-' && next == Some('>')))
}

/// Splits text into tokens; `#` starts a comment running to end of line.
pub fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, SyntaxError> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let pos = Pos { line: lineno + 1, col: i + 1 };
            let next = chars.get(i + 1).copied();
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let single = match c {
                '{' => Some(Tok::LBrace),
                '}' => Some(Tok::RBrace),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                ';' => Some(Tok::Semi),
                ':' => Some(Tok::Colon),
                ',' => Some(Tok::Comma),
                '=' => Some(Tok::Eq),
                _ => None,
            };
            if let Some(t) = single {
                out.push((t, pos));
                i += 1;
            } else if c == '<' {
                if next != Some('=') {
                    return Err(SyntaxError::new(pos, "expected `<=`"));
                }
                out.push((Tok::Le, pos));
                i += 2;
            } else if c == '-' && next == Some('>') {
                out.push((Tok::Arrow, pos));
                i += 2;
            } else {
                let start = i;
                while i < chars.len() && is_ident_char(chars[i], chars.get(i + 1).copied()) {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
            }
        }
    }
    Ok(out)
}

/// A cursor over a token stream.
pub struct Tokens {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
}

impl Tokens {
    pub fn new(toks: Vec<(Tok, Pos)>) -> Tokens {
        let end = toks.last().map(|(_, p)| *p).unwrap_or_default();
        Tokens { toks, at: 0, end }
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    pub fn pos(&self) -> Pos {
        self.toks.get(self.at).map(|(_, p)| *p).unwrap_or(self.end)
    }

    pub fn is_done(&self) -> bool {
        self.at >= self.toks.len()
    }

    pub fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(t, _)| t.clone());
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    pub fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, tok: &Tok) -> Result<(), SyntaxError> {
        let pos = self.pos();
        match self.bump() {
            Some(t) if &t == tok => Ok(()),
            Some(t) => Err(SyntaxError::new(pos, format!("expected {tok}, found {t}"))),
            None => Err(SyntaxError::new(pos, format!("expected {tok}, found end of input"))),
        }
    }

    pub fn ident(&mut self) -> Result<String, SyntaxError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Ident(s)) => Ok(s),
            Some(t) => Err(SyntaxError::new(pos, format!("expected a name, found {t}"))),
            None => Err(SyntaxError::new(pos, "expected a name, found end of input")),
        }
    }

    pub fn keyword(&mut self, kw: &str) -> Result<(), SyntaxError> {
        let pos = self.pos();
        let got = self.ident()?;
        if got == kw {
            Ok(())
        } else {
            Err(SyntaxError::new(pos, format!("expected `{kw}`, found `{got}`")))
        }
    }

    pub fn peek_ident(&self) -> Option<&str> {
        match self.peek() {
            Some(Tok::Ident(s)) => Some(s),
            _ => None,
        }
    }
}

/// A term before resolution against a context and a signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RawTerm {
    /// A bare name: a variable, or a constant used without parentheses.
    Name(String),
    App(String, Vec<RawTerm>),
}

impl RawTerm {
    pub fn parse(text: &str) -> Result<RawTerm, SyntaxError> {
        let mut toks = Tokens::new(lex(text)?);
        let t = parse_raw_term(&mut toks)?;
        if !toks.is_done() {
            return Err(SyntaxError::new(toks.pos(), "trailing input after term"));
        }
        Ok(t)
    }
}

impl fmt::Display for RawTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RawTerm::Name(n) => f.write_str(n),
            RawTerm::App(op, args) => {
                write!(f, "{op}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

pub fn parse_raw_term(toks: &mut Tokens) -> Result<RawTerm, SyntaxError> {
    let name = toks.ident()?;
    if !toks.eat(&Tok::LParen) {
        return Ok(RawTerm::Name(name));
    }
    let mut args = Vec::new();
    if toks.eat(&Tok::RParen) {
        return Ok(RawTerm::App(name, args));
    }
    loop {
        args.push(parse_raw_term(toks)?);
        if toks.eat(&Tok::RParen) {
            return Ok(RawTerm::App(name, args));
        }
        toks.expect(&Tok::Comma)?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexes_arrows_and_negative_names() {
        let toks: Vec<Tok> = lex("-1->0; a<=b # c").unwrap().into_iter().map(|(t, _)| t).collect();
        assert_eq!(
            toks,
            vec![
                Tok::Ident("-1".into()),
                Tok::Arrow,
                Tok::Ident("0".into()),
                Tok::Semi,
                Tok::Ident("a".into()),
                Tok::Le,
                Tok::Ident("b".into()),
            ]
        );
    }

    #[test]
    fn parses_nested_terms() {
        let t = RawTerm::parse("theta(alpha(v,w), w)").unwrap();
        assert_eq!(t.to_string(), "theta(alpha(v,w),w)");
        assert_eq!(RawTerm::parse("0").unwrap(), RawTerm::Name("0".into()));
        assert_eq!(RawTerm::parse("0()").unwrap(), RawTerm::App("0".into(), vec![]));
        assert!(RawTerm::parse("f(a,").is_err());
    }

    #[test]
    fn lone_angle_is_an_error() {
        let err = lex("a < b").unwrap_err();
        assert_eq!(err.pos, Pos { line: 1, col: 3 });
    }
}
