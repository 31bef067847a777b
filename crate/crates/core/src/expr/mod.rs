//! The expression language of the `hyclif` CLI.
//!
//! Precedence, highest first: prefix unary (`-`, `~`, `'`, `!`, `!!`, `!c`);
//! `^`; `_|` and `|_`; `*`; binary `+` and `-`. Binary operators associate to
//! the left. A numeric coefficient (a literal, `r2`, or a parenthesized group)
//! may be written directly before an atom, as in `3/2 e1` or `(1+r2) t2`;
//! otherwise `*` is required.

mod eval;
mod lexer;
mod parser;

use std::fmt;

use num_rational::BigRational;
use thiserror::Error;

use crate::error::AlgebraError;

pub use eval::Env;
pub use parser::{parse, Parser};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UnOp {
    Neg,
    Reverse,
    GradeInv,
    Conj,
    Hodge,
    HodgeInv,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BinOp {
    Add,
    Sub,
    Wedge,
    Gp,
    LContract,
    RContract,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Func {
    Ip,
    Grade,
    Even,
    Odd,
    Dual,
    IDual,
}

impl Func {
    pub fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "ip" => Func::Ip,
            "grade" => Func::Grade,
            "even" => Func::Even,
            "odd" => Func::Odd,
            "dual" => Func::Dual,
            "idual" => Func::IDual,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Ip => "ip",
            Func::Grade => "grade",
            Func::Even => "even",
            Func::Odd => "odd",
            Func::Dual => "dual",
            Func::IDual => "idual",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Ip | Func::Grade => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    /// Nonnegative rational literal.
    Num(BigRational),
    /// `r2 = √2`
    R2,
    /// `e_k`
    E(usize),
    /// `θ^k`, written `tk`
    T(usize),
    /// `σ_k`, written `sk`
    S(usize),
    /// Orientation element.
    Sigma,
    Var(String),
    Unary(UnOp, Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    /// Coefficient written before an atom.
    Juxt(Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SyntaxKind {
    BadChar(char),
    BadNumber(String),
    UnknownAtom(String),
    IndexOutOfRange { atom: String, index: usize, max: usize },
    Unbalanced,
    Unexpected(String),
    UnexpectedEnd,
    Arity { func: &'static str, expected: usize, found: usize },
}

impl fmt::Display for SyntaxKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SyntaxKind::BadChar(c) => write!(f, "unexpected character {c:?}"),
            SyntaxKind::BadNumber(s) => write!(f, "malformed number {s:?}"),
            SyntaxKind::UnknownAtom(s) => write!(f, "unknown atom {s:?}"),
            SyntaxKind::IndexOutOfRange { atom, index, max } => {
                write!(f, "index out of range: {atom} needs 1..={max}, got {index}")
            }
            SyntaxKind::Unbalanced => write!(f, "unbalanced parentheses"),
            SyntaxKind::Unexpected(t) => write!(f, "unexpected {t}"),
            SyntaxKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            SyntaxKind::Arity { func, expected, found } => {
                write!(f, "{func} takes {expected} argument(s), got {found}")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ExprError {
    #[error("line {line}, col {col}: {kind}")]
    Syntax { line: usize, col: usize, kind: SyntaxKind },
    #[error("{0}")]
    Eval(#[from] AlgebraError),
    #[error("{0}")]
    Other(String),
}

impl ExprError {
    pub fn is_syntax(&self) -> bool {
        matches!(self, ExprError::Syntax { .. })
    }
}

const PREC_SUM: u8 = 1;
const PREC_PROD: u8 = 2;
const PREC_CONTRACT: u8 = 3;
const PREC_WEDGE: u8 = 4;
const PREC_UNARY: u8 = 5;
const PREC_JUXT: u8 = 6;
const PREC_ATOM: u8 = 7;

impl BinOp {
    fn prec(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => PREC_SUM,
            BinOp::Gp => PREC_PROD,
            BinOp::LContract | BinOp::RContract => PREC_CONTRACT,
            BinOp::Wedge => PREC_WEDGE,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => " + ",
            BinOp::Sub => " - ",
            BinOp::Wedge => "^",
            BinOp::Gp => "*",
            BinOp::LContract => " _| ",
            BinOp::RContract => " |_ ",
        }
    }
}

impl UnOp {
    fn symbol(self) -> &'static str {
        match self {
            UnOp::Neg => "-",
            UnOp::Reverse => "~",
            UnOp::GradeInv => "'",
            UnOp::Conj => "!c ",
            UnOp::Hodge => "!",
            UnOp::HodgeInv => "!!",
        }
    }
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Binary(op, ..) => op.prec(),
            Expr::Unary(..) => PREC_UNARY,
            Expr::Juxt(..) => PREC_JUXT,
            _ => PREC_ATOM,
        }
    }

    /// Literal, `r2`, or a chain of them: may stand unparenthesized before an atom.
    fn is_plain_coefficient(&self) -> bool {
        match self {
            Expr::Num(_) | Expr::R2 => true,
            Expr::Juxt(l, r) => l.is_plain_coefficient() && **r == Expr::R2,
            _ => false,
        }
    }
}

fn paren(f: &mut fmt::Formatter<'_>, e: &Expr, wrap: bool) -> fmt::Result {
    if wrap {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    /// Minimal parenthesization; the output parses back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(r) => write!(f, "{}", crate::scalar::fmt_rational(r)),
            Expr::R2 => write!(f, "r2"),
            Expr::E(k) => write!(f, "e{k}"),
            Expr::T(k) => write!(f, "t{k}"),
            Expr::S(k) => write!(f, "s{k}"),
            Expr::Sigma => write!(f, "sigma"),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Unary(op, e) => {
                let inner = if e.prec() < PREC_UNARY { format!("({e})") } else { e.to_string() };
                let sep = match op {
                    UnOp::Hodge if inner.starts_with('!') || inner.starts_with('c') => " ",
                    UnOp::HodgeInv | UnOp::Neg if inner.starts_with('!') || inner.starts_with('-') => " ",
                    _ => "",
                };
                write!(f, "{}{sep}{inner}", op.symbol())
            }
            Expr::Binary(op, l, r) => {
                paren(f, l, l.prec() < op.prec())?;
                write!(f, "{}", op.symbol())?;
                paren(f, r, r.prec() <= op.prec())
            }
            Expr::Juxt(l, r) => {
                paren(f, l, !l.is_plain_coefficient())?;
                write!(f, " {r}")
            }
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}
