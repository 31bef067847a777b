use std::collections::HashSet;

use super::lexer::{lex, Spanned, Tok};
use super::{BinOp, Expr, ExprError, Func, SyntaxKind, UnOp};

/// Parses `src` against a context of dimension `dim` with no variables.
pub fn parse(src: &str, dim: usize) -> Result<Expr, ExprError> {
    Parser::new(dim).parse(src)
}

pub struct Parser {
    dim: usize,
    vars: HashSet<String>,
}

struct Cursor<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    /// Position just past the input, for end-of-input errors.
    end: (usize, usize),
    parser: &'a Parser,
}

impl Parser {
    pub fn new(dim: usize) -> Parser {
        Parser {
            dim,
            vars: HashSet::new(),
        }
    }

    pub fn with_vars<I: IntoIterator<Item = String>>(mut self, vars: I) -> Parser {
        self.vars.extend(vars);
        self
    }

    /// Names that cannot be bound as variables.
    pub fn is_reserved(name: &str) -> bool {
        name == "r2" || name == "sigma" || Func::from_name(name).is_some() || indexed_atom(name).is_some()
    }

    pub fn parse(&self, src: &str) -> Result<Expr, ExprError> {
        let toks = lex(src)?;
        let last_line = src.lines().count().max(1);
        let last_col = src.lines().last().map_or(0, |l| l.chars().count()) + 1;
        let mut c = Cursor {
            toks,
            pos: 0,
            end: (last_line, last_col),
            parser: self,
        };
        let e = c.sum()?;
        if let Some(t) = c.peek() {
            let kind = if t.tok == Tok::RParen {
                SyntaxKind::Unbalanced
            } else {
                SyntaxKind::Unexpected(t.tok.describe())
            };
            return Err(c.error_at(t.line, t.col, kind));
        }
        Ok(e)
    }
}

fn indexed_atom(name: &str) -> Option<(char, usize)> {
    let mut chars = name.chars();
    let head = chars.next()?;
    if !matches!(head, 'e' | 't' | 's') {
        return None;
    }
    let digits = chars.as_str();
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    Some((head, digits.parse().unwrap_or(usize::MAX)))
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn peek_tok(&self) -> Option<&Tok> {
        self.peek().map(|t| &t.tok)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn error_at(&self, line: usize, col: usize, kind: SyntaxKind) -> ExprError {
        ExprError::Syntax { line, col, kind }
    }

    fn error_here(&self, kind: SyntaxKind) -> ExprError {
        match self.peek() {
            Some(t) => self.error_at(t.line, t.col, kind),
            None => self.error_at(self.end.0, self.end.1, kind),
        }
    }

    fn binary_level(
        &mut self,
        ops: &[(Tok, BinOp)],
        mut next: impl FnMut(&mut Self) -> Result<Expr, ExprError>,
    ) -> Result<Expr, ExprError> {
        let mut left = next(self)?;
        while let Some(op) = self
            .peek_tok()
            .and_then(|t| ops.iter().find(|(k, _)| k == t).map(|(_, op)| *op))
        {
            self.pos += 1;
            let right = next(self)?;
            left = Expr::Binary(op, Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn sum(&mut self) -> Result<Expr, ExprError> {
        self.binary_level(&[(Tok::Plus, BinOp::Add), (Tok::Minus, BinOp::Sub)], Self::product)
    }

    fn product(&mut self) -> Result<Expr, ExprError> {
        self.binary_level(&[(Tok::Star, BinOp::Gp)], Self::contraction)
    }

    fn contraction(&mut self) -> Result<Expr, ExprError> {
        self.binary_level(
            &[(Tok::LContract, BinOp::LContract), (Tok::RContract, BinOp::RContract)],
            Self::wedge,
        )
    }

    fn wedge(&mut self) -> Result<Expr, ExprError> {
        self.binary_level(&[(Tok::Caret, BinOp::Wedge)], Self::unary)
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        let op = match self.peek_tok() {
            Some(Tok::Minus) => UnOp::Neg,
            Some(Tok::Tilde) => UnOp::Reverse,
            Some(Tok::Prime) => UnOp::GradeInv,
            Some(Tok::Bang) => UnOp::Hodge,
            Some(Tok::BangBang) => UnOp::HodgeInv,
            Some(Tok::BangC) => UnOp::Conj,
            _ => return self.juxt(),
        };
        self.pos += 1;
        Ok(Expr::Unary(op, Box::new(self.unary()?)))
    }

    /// `coefficient atom`, where the coefficient is a literal, `r2`, a
    /// parenthesized group, or a chain of these ending before the atom.
    fn juxt(&mut self) -> Result<Expr, ExprError> {
        let (mut left, was_paren) = self.primary()?;
        let mut coefficient = was_paren || matches!(left, Expr::Num(_) | Expr::R2);
        while coefficient && matches!(self.peek_tok(), Some(Tok::Ident(_))) {
            let (right, _) = self.primary()?;
            coefficient = right == Expr::R2;
            left = Expr::Juxt(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    /// Returns the expression and whether it was a parenthesized group.
    fn primary(&mut self) -> Result<(Expr, bool), ExprError> {
        let Some(t) = self.next() else {
            return Err(self.error_here(SyntaxKind::UnexpectedEnd));
        };
        match t.tok {
            Tok::Num(r) => Ok((Expr::Num(r), false)),
            Tok::LParen => {
                let e = self.sum()?;
                match self.peek_tok() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok((e, true))
                    }
                    None => Err(self.error_at(t.line, t.col, SyntaxKind::Unbalanced)),
                    Some(other) => {
                        let d = other.describe();
                        Err(self.error_here(SyntaxKind::Unexpected(d)))
                    }
                }
            }
            Tok::Ident(name) => self.ident(name, t.line, t.col).map(|e| (e, false)),
            Tok::RParen => Err(self.error_at(t.line, t.col, SyntaxKind::Unbalanced)),
            other => Err(self.error_at(t.line, t.col, SyntaxKind::Unexpected(other.describe()))),
        }
    }

    fn ident(&mut self, name: String, line: usize, col: usize) -> Result<Expr, ExprError> {
        if let Some(func) = Func::from_name(&name) {
            if self.peek_tok() != Some(&Tok::LParen) {
                return Err(self.error_here(SyntaxKind::Unexpected(format!("{name} without '('"))));
            }
            self.pos += 1;
            let mut args = Vec::new();
            if self.peek_tok() != Some(&Tok::RParen) {
                loop {
                    args.push(self.sum()?);
                    if self.peek_tok() == Some(&Tok::Comma) {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
            }
            match self.peek_tok() {
                Some(Tok::RParen) => self.pos += 1,
                None => return Err(self.error_at(line, col, SyntaxKind::Unbalanced)),
                Some(other) => {
                    let d = other.describe();
                    return Err(self.error_here(SyntaxKind::Unexpected(d)));
                }
            }
            if args.len() != func.arity() {
                return Err(self.error_at(
                    line,
                    col,
                    SyntaxKind::Arity {
                        func: func.name(),
                        expected: func.arity(),
                        found: args.len(),
                    },
                ));
            }
            return Ok(Expr::Call(func, args));
        }
        match name.as_str() {
            "r2" => return Ok(Expr::R2),
            "sigma" => return Ok(Expr::Sigma),
            _ => {}
        }
        let n = self.parser.dim;
        if let Some((head, k)) = indexed_atom(&name) {
            let max = if head == 's' { 2 * n } else { n };
            if k == 0 || k > max {
                return Err(self.error_at(
                    line,
                    col,
                    SyntaxKind::IndexOutOfRange {
                        atom: head.to_string(),
                        index: k,
                        max,
                    },
                ));
            }
            return Ok(match head {
                'e' => Expr::E(k),
                't' => Expr::T(k),
                _ => Expr::S(k),
            });
        }
        if self.parser.vars.contains(&name) {
            return Ok(Expr::Var(name));
        }
        Err(self.error_at(line, col, SyntaxKind::UnknownAtom(name)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn p(s: &str) -> Expr {
        parse(s, 2).unwrap()
    }

    fn b(op: BinOp, l: Expr, r: Expr) -> Expr {
        Expr::Binary(op, Box::new(l), Box::new(r))
    }

    #[test]
    fn wedge_atoms() {
        assert_eq!(p("e1^t1"), b(BinOp::Wedge, Expr::E(1), Expr::T(1)));
    }

    #[test]
    fn precedence() {
        // a + b*c_|d^e
        let e = p("e1 + e2*t1_|t2^e1");
        let inner = b(BinOp::LContract, Expr::T(1), b(BinOp::Wedge, Expr::T(2), Expr::E(1)));
        assert_eq!(e, b(BinOp::Add, Expr::E(1), b(BinOp::Gp, Expr::E(2), inner)));
        assert_eq!(p("-e1^t1"), b(BinOp::Wedge, Expr::Unary(UnOp::Neg, Box::new(Expr::E(1))), Expr::T(1)));
        assert_eq!(p("e1 - e2 - t1"), b(BinOp::Sub, b(BinOp::Sub, Expr::E(1), Expr::E(2)), Expr::T(1)));
    }

    #[test]
    fn coefficients() {
        let half = Expr::Num(BigRational::new(1.into(), 2.into()));
        assert_eq!(p("1/2 e2"), Expr::Juxt(Box::new(half.clone()), Box::new(Expr::E(2))));
        let chain = p("1/2 r2 e1");
        assert_eq!(
            chain,
            Expr::Juxt(Box::new(Expr::Juxt(Box::new(half), Box::new(Expr::R2))), Box::new(Expr::E(1)))
        );
        assert!(matches!(p("(1+r2) t1"), Expr::Juxt(..)));
    }

    #[test]
    fn juxtaposed_atoms_are_rejected() {
        let e = parse("e1 t1", 2).unwrap_err();
        assert!(matches!(e, ExprError::Syntax { col: 4, kind: SyntaxKind::Unexpected(_), .. }));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse("e3", 2).unwrap_err(),
            ExprError::Syntax {
                line: 1,
                col: 1,
                kind: SyntaxKind::IndexOutOfRange { atom: "e".into(), index: 3, max: 2 }
            }
        );
        assert!(matches!(parse("(e1 + t1", 2).unwrap_err(), ExprError::Syntax { col: 1, kind: SyntaxKind::Unbalanced, .. }));
        assert!(matches!(parse("e1)", 2).unwrap_err(), ExprError::Syntax { col: 3, kind: SyntaxKind::Unbalanced, .. }));
        assert!(matches!(parse("foo", 2).unwrap_err(), ExprError::Syntax { kind: SyntaxKind::UnknownAtom(_), .. }));
        assert!(matches!(parse("e1 +", 2).unwrap_err(), ExprError::Syntax { kind: SyntaxKind::UnexpectedEnd, .. }));
        assert!(matches!(parse("ip(e1)", 2).unwrap_err(), ExprError::Syntax { kind: SyntaxKind::Arity { .. }, .. }));
        assert!(matches!(parse("s5", 2).unwrap_err(), ExprError::Syntax { .. }));
        assert!(parse("s4", 2).is_ok());
    }

    #[test]
    fn print_reparses() {
        for src in [
            "e1^t1",
            "-(e1 + t1)*~e2",
            "!!sigma + ! !e1 - !c e2",
            "(e1 _| t1) |_ e2",
            "e1 - (e2 - t1)",
            "3/2 e1^t2 - (1-r2) e1",
            "-1+r2 + 1/2 r2 t1",
            "grade(e1 + e1^t1, 2)*ip(e1, t1)",
            "'(e1*t1)",
            "--e1",
        ] {
            let e = p(src);
            let printed = e.to_string();
            assert_eq!(p(&printed), e, "{src} -> {printed}");
        }
    }

    #[test]
    fn variables() {
        let parser = Parser::new(1).with_vars(["u".to_string()]);
        assert_eq!(parser.parse("u*e1").unwrap(), b(BinOp::Gp, Expr::Var("u".into()), Expr::E(1)));
        assert!(Parser::is_reserved("e12"));
        assert!(!Parser::is_reserved("u"));
    }
}
