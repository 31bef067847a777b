use num_rational::BigRational;

use super::{ExprError, SyntaxKind};
use crate::scalar::parse_rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) enum Tok {
    Num(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LContract,
    RContract,
    Tilde,
    Prime,
    Bang,
    BangBang,
    BangC,
    LParen,
    RParen,
    Comma,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Num(r) => format!("number {}", crate::scalar::fmt_rational(r)),
            Tok::Ident(s) => format!("{s:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LContract => "'_|'".into(),
            Tok::RContract => "'|_'".into(),
            Tok::Tilde => "'~'".into(),
            Tok::Prime => "'''".into(),
            Tok::Bang => "'!'".into(),
            Tok::BangBang => "'!!'".into(),
            Tok::BangC => "'!c'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

pub(crate) fn lex(src: &str) -> Result<Vec<Spanned>, ExprError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let err = |line, col, kind| ExprError::Syntax { line, col, kind };
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let at = |k: usize| chars.get(i + k).copied();
        let (tok, len) = if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            if j < chars.len() && chars[j] == '/' {
                j += 1;
                let d0 = j;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                if j == d0 {
                    let text: String = chars[i..j].iter().collect();
                    return Err(err(l0, c0, SyntaxKind::BadNumber(text)));
                }
            }
            if j < chars.len() && (chars[j] == '.' || chars[j].is_ascii_alphabetic()) {
                let mut k = j;
                while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '.') {
                    k += 1;
                }
                let text: String = chars[i..k].iter().collect();
                return Err(err(l0, c0, SyntaxKind::BadNumber(text)));
            }
            let text: String = chars[i..j].iter().collect();
            let r = parse_rational(&text).map_err(|_| err(l0, c0, SyntaxKind::BadNumber(text.clone())))?;
            (Tok::Num(r), j - i)
        } else if c.is_ascii_alphabetic() {
            let mut j = i;
            while j < chars.len() && chars[j].is_ascii_alphanumeric() {
                j += 1;
            }
            (Tok::Ident(chars[i..j].iter().collect()), j - i)
        } else {
            match (c, at(1)) {
                ('_', Some('|')) => (Tok::LContract, 2),
                ('|', Some('_')) => (Tok::RContract, 2),
                ('!', Some('!')) => (Tok::BangBang, 2),
                ('!', Some('c')) if !at(2).is_some_and(|d| d.is_ascii_alphanumeric()) => (Tok::BangC, 2),
                ('!', _) => (Tok::Bang, 1),
                ('+', _) => (Tok::Plus, 1),
                ('-', _) => (Tok::Minus, 1),
                ('*', _) => (Tok::Star, 1),
                ('^', _) => (Tok::Caret, 1),
                ('~', _) => (Tok::Tilde, 1),
                ('\'', _) => (Tok::Prime, 1),
                ('(', _) => (Tok::LParen, 1),
                (')', _) => (Tok::RParen, 1),
                (',', _) => (Tok::Comma, 1),
                _ => return Err(err(l0, c0, SyntaxKind::BadChar(c))),
            }
        };
        out.push(Spanned { tok, line: l0, col: c0 });
        i += len;
        col += len;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        lex(s).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn operators() {
        assert_eq!(toks("e1_|t1"), vec![Tok::Ident("e1".into()), Tok::LContract, Tok::Ident("t1".into())]);
        assert_eq!(toks("!!!c e1")[..2], [Tok::BangBang, Tok::BangC]);
        assert_eq!(toks("!cat")[..1], [Tok::Bang]);
    }

    #[test]
    fn positions_and_errors() {
        let t = lex("1\n  e2").unwrap();
        assert_eq!((t[1].line, t[1].col), (2, 3));
        assert!(matches!(
            lex("e1 + 0.5"),
            Err(ExprError::Syntax { col: 6, kind: SyntaxKind::BadNumber(_), .. })
        ));
        assert!(matches!(lex("e1 # 2"), Err(ExprError::Syntax { col: 4, .. })));
        assert!(lex("1/").is_err());
    }
}
