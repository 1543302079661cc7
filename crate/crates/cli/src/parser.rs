//! Recursive-descent parser for set expressions.
//!
//! ```text
//! expr    := IDENT args? | '[' bound ',' bound (')'|']') | '(' ... | '{' nums '}'
//! ctx     := '[' topology (';' ideal)? ']'
//! bound   := number | 'inf' | '-inf'
//! ```
//! Operators are prefix with comma-separated arguments, so the grammar needs
//! one token of lookahead.

use std::fmt;

use ctopo_core::{fmt_rational, parse_rational, IdealKind, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(String),
    Minus,
    Punct(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Num(s) => write!(f, "number `{s}`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Punct(c) => write!(f, "`{c}`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let is_num = |c: char| c.is_ascii_digit() || c == '.' || c == '/';
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column: col };
        let start = i;
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
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if c == '-' || c == '+' || c.is_ascii_digit() || c == '.' {
            i += 1;
            if (c == '-' || c == '+') && !chars.get(i).is_some_and(|&d| d.is_ascii_digit() || d == '.') {
                if c == '+' {
                    return Err(ParseError { pos, message: "stray `+`".into(), expected: vec![] });
                }
                Tok::Minus
            } else {
                while i < chars.len() && is_num(chars[i]) {
                    i += 1;
                }
                Tok::Num(chars[start..i].iter().collect())
            }
        } else if "()[],;:{}".contains(c) {
            i += 1;
            Tok::Punct(c)
        } else {
            return Err(ParseError { pos, message: format!("unexpected character `{c}`"), expected: vec![] });
        };
        col += i - start;
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column: col }));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    PosInf,
    Finite(Rational),
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => f.write_str("-inf"),
            Bound::PosInf => f.write_str("inf"),
            Bound::Finite(q) => f.write_str(&fmt_rational(q)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Const {
    Reals,
    Rationals,
    Irrationals,
    Integers,
    Naturals,
    Empty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetFn {
    Union,
    Inter,
    Setminus,
    Compl,
    Qtrace,
    Itrace,
}

impl SetFn {
    fn name(self) -> &'static str {
        match self {
            SetFn::Union => "union",
            SetFn::Inter => "inter",
            SetFn::Setminus => "setminus",
            SetFn::Compl => "compl",
            SetFn::Qtrace => "qtrace",
            SetFn::Itrace => "itrace",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TopOp {
    Int,
    Cl,
    Fr,
    D,
    Bd,
    Ext,
    IsOpen,
    IsClosed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealOp {
    Int,
    Cl,
    D,
    Bd,
    Fr,
    Ext,
    IsOpen,
    IsClosed,
}

/// Which letter an ideal operator was spelled with: `C`, `F` or `I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suffix {
    C,
    F,
    I,
}

impl Suffix {
    pub fn default_ideal(self) -> Option<IdealKind> {
        match self {
            Suffix::C => Some(IdealKind::Countable),
            Suffix::F => Some(IdealKind::Finite),
            Suffix::I => None,
        }
    }

    fn letter(self) -> &'static str {
        match self {
            Suffix::C => "C",
            Suffix::F => "F",
            Suffix::I => "I",
        }
    }
}

const TOP_OPS: [(&str, TopOp); 8] = [
    ("int", TopOp::Int),
    ("cl", TopOp::Cl),
    ("fr", TopOp::Fr),
    ("D", TopOp::D),
    ("bd", TopOp::Bd),
    ("ext", TopOp::Ext),
    ("isOpen", TopOp::IsOpen),
    ("isClosed", TopOp::IsClosed),
];

const IDEAL_OPS: [(&str, &str, IdealOp); 8] = [
    ("int", "", IdealOp::Int),
    ("cl", "", IdealOp::Cl),
    ("D", "", IdealOp::D),
    ("Bd", "", IdealOp::Bd),
    ("Fr", "", IdealOp::Fr),
    ("Ext", "", IdealOp::Ext),
    ("is", "open", IdealOp::IsOpen),
    ("is", "closed", IdealOp::IsClosed),
];

fn ideal_op_name(op: IdealOp, s: Suffix) -> String {
    let (head, tail, _) = IDEAL_OPS.iter().find(|(_, _, o)| *o == op).expect("listed");
    format!("{head}{}{tail}", s.letter())
}

fn lookup_ideal_op(name: &str) -> Option<(IdealOp, Suffix)> {
    for (head, tail, op) in IDEAL_OPS {
        for s in [Suffix::C, Suffix::F, Suffix::I] {
            if name == format!("{head}{}{tail}", s.letter()) {
                return Some((op, s));
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopoSel {
    Usual,
    Particular(Rational),
    Excluded(Box<Expr>),
    Cocountable,
    Overlap,
}

impl fmt::Display for TopoSel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopoSel::Usual => f.write_str("usual"),
            TopoSel::Particular(p) => write!(f, "particular:{}", fmt_rational(p)),
            TopoSel::Excluded(e) => write!(f, "excluded:{e}"),
            TopoSel::Cocountable => f.write_str("cocountable"),
            TopoSel::Overlap => f.write_str("overlap"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Context {
    pub topology: Option<TopoSel>,
    pub ideal: Option<IdealKind>,
}

impl Context {
    fn is_empty(&self) -> bool {
        self.topology.is_none() && self.ideal.is_none()
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return Ok(());
        }
        f.write_str("[")?;
        if let Some(t) = &self.topology {
            write!(f, "{t}")?;
        }
        if let Some(i) = self.ideal {
            write!(f, "; {}", i.name())?;
        }
        f.write_str("]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Const(Const),
    Interval { lo: Bound, hi: Bound, lo_closed: bool, hi_closed: bool },
    Points(Vec<Rational>),
    Prog(Rational, Rational),
    Set(SetFn, Vec<Expr>),
    Top(TopOp, Context, Box<Expr>),
    Ideal(IdealOp, Suffix, Context, Box<Expr>),
    Card(Box<Expr>),
    Subset(Box<Expr>, Box<Expr>),
    Eq(Box<Expr>, Box<Expr>),
}

fn join(args: &[Expr]) -> String {
    args.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => f.write_str(match c {
                Const::Reals => "R",
                Const::Rationals => "Q",
                Const::Irrationals => "I",
                Const::Integers => "Z",
                Const::Naturals => "N",
                Const::Empty => "empty",
            }),
            Expr::Interval { lo, hi, lo_closed, hi_closed } => {
                let flag = |c: bool| if c { "c" } else { "o" };
                write!(f, "interval({lo},{hi},{},{})", flag(*lo_closed), flag(*hi_closed))
            }
            Expr::Points(ps) => {
                let v: Vec<String> = ps.iter().map(fmt_rational).collect();
                write!(f, "points({})", v.join(","))
            }
            Expr::Prog(a, d) => write!(f, "prog({},{})", fmt_rational(a), fmt_rational(d)),
            Expr::Set(op, args) => write!(f, "{}({})", op.name(), join(args)),
            Expr::Top(op, ctx, a) => {
                let name = TOP_OPS.iter().find(|(_, o)| o == op).expect("listed").0;
                write!(f, "{name}{ctx}({a})")
            }
            Expr::Ideal(op, s, ctx, a) => write!(f, "{}{ctx}({a})", ideal_op_name(*op, *s)),
            Expr::Card(a) => write!(f, "card({a})"),
            Expr::Subset(a, b) => write!(f, "subset({a}, {b})"),
            Expr::Eq(a, b) => write!(f, "eq({a}, {b})"),
        }
    }
}

const MAX_DEPTH: usize = 200;

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    depth: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1.clone()
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> PResult<T> {
        Err(ParseError {
            pos: self.pos(),
            message: format!("unexpected {}", self.peek()),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn punct(&mut self, c: char) -> PResult<()> {
        if *self.peek() == Tok::Punct(c) {
            self.bump();
            Ok(())
        } else {
            self.fail(&[&format!("`{c}`")])
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Punct(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> PResult<Rational> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Num(s) => {
                self.bump();
                parse_rational(&s).map_err(|e| ParseError { pos, message: e.to_string(), expected: vec![] })
            }
            _ => self.fail(&["a number"]),
        }
    }

    fn bound(&mut self) -> PResult<Bound> {
        match self.peek().clone() {
            Tok::Minus => {
                self.bump();
                match self.peek() {
                    Tok::Ident(s) if s == "inf" => {
                        self.bump();
                        Ok(Bound::NegInf)
                    }
                    _ => self.fail(&["`inf`"]),
                }
            }
            Tok::Ident(s) if s == "inf" => {
                self.bump();
                Ok(Bound::PosInf)
            }
            Tok::Num(_) => Ok(Bound::Finite(self.number()?)),
            _ => self.fail(&["a number", "`inf`", "`-inf`"]),
        }
    }

    fn flag(&mut self) -> PResult<bool> {
        match self.peek() {
            Tok::Ident(s) if s == "o" || s == "c" => {
                let closed = s == "c";
                self.bump();
                Ok(closed)
            }
            _ => self.fail(&["`o`", "`c`"]),
        }
    }

    fn args(&mut self, min: usize, max: usize) -> PResult<Vec<Expr>> {
        self.punct('(')?;
        let mut out = vec![self.expr()?];
        while self.eat(',') {
            out.push(self.expr()?);
        }
        if out.len() < min || out.len() > max {
            let pos = self.pos();
            return Err(ParseError {
                pos,
                message: format!("wrong number of arguments: {}", out.len()),
                expected: vec![if min == max { format!("{min}") } else { format!("at least {min}") }],
            });
        }
        self.punct(')')?;
        Ok(out)
    }

    fn one(&mut self) -> PResult<Box<Expr>> {
        Ok(Box::new(self.args(1, 1)?.remove(0)))
    }

    fn two(&mut self) -> PResult<(Box<Expr>, Box<Expr>)> {
        let mut v = self.args(2, 2)?;
        let b = v.pop().expect("two");
        Ok((Box::new(v.pop().expect("two")), Box::new(b)))
    }

    fn ideal(&mut self) -> PResult<IdealKind> {
        match self.peek().clone() {
            Tok::Ident(s) => match s.parse::<IdealKind>() {
                Ok(i) => {
                    self.bump();
                    Ok(i)
                }
                Err(_) => self.fail(&["`countable`", "`finite`"]),
            },
            _ => self.fail(&["`countable`", "`finite`"]),
        }
    }

    fn topology(&mut self) -> PResult<TopoSel> {
        let expected = ["`usual`", "`particular:p`", "`excluded:S`", "`cocountable`", "`overlap`"];
        let Tok::Ident(name) = self.peek().clone() else {
            return self.fail(&expected);
        };
        let sel = match name.as_str() {
            "usual" => TopoSel::Usual,
            "cocountable" => TopoSel::Cocountable,
            "overlap" => TopoSel::Overlap,
            "particular" => {
                self.bump();
                self.punct(':')?;
                return Ok(TopoSel::Particular(self.number()?));
            }
            "excluded" => {
                self.bump();
                self.punct(':')?;
                return Ok(TopoSel::Excluded(Box::new(self.expr()?)));
            }
            _ => return self.fail(&expected),
        };
        self.bump();
        Ok(sel)
    }

    fn context(&mut self) -> PResult<Context> {
        let mut ctx = Context::default();
        if !self.eat('[') {
            return Ok(ctx);
        }
        if *self.peek() != Tok::Punct(';') {
            ctx.topology = Some(self.topology()?);
        }
        if self.eat(';') {
            ctx.ideal = Some(self.ideal()?);
        }
        self.punct(']')?;
        Ok(ctx)
    }

    fn expr(&mut self) -> PResult<Expr> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError {
                pos: self.pos(),
                message: "expression nested too deeply".into(),
                expected: vec![],
            });
        }
        let e = self.primary();
        self.depth -= 1;
        e
    }

    fn bracket_interval(&mut self, lo_closed: bool) -> PResult<Expr> {
        let lo = self.bound()?;
        self.punct(',')?;
        let hi = self.bound()?;
        let hi_closed = match self.peek() {
            Tok::Punct(')') => false,
            Tok::Punct(']') => true,
            _ => return self.fail(&["`)`", "`]`"]),
        };
        self.bump();
        Ok(Expr::Interval { lo, hi, lo_closed, hi_closed })
    }

    fn primary(&mut self) -> PResult<Expr> {
        let name = match self.peek().clone() {
            Tok::Punct('[') => {
                self.bump();
                return self.bracket_interval(true);
            }
            Tok::Punct('(') => {
                self.bump();
                return self.bracket_interval(false);
            }
            Tok::Punct('{') => {
                self.bump();
                let mut ps = Vec::new();
                if !self.eat('}') {
                    ps.push(self.number()?);
                    while self.eat(',') {
                        ps.push(self.number()?);
                    }
                    self.punct('}')?;
                }
                return Ok(Expr::Points(ps));
            }
            Tok::Ident(name) => name,
            _ => return self.fail(&["a set expression"]),
        };
        let pos = self.pos();
        self.bump();
        let konst = |c| Ok(Expr::Const(c));
        match name.as_str() {
            "R" => konst(Const::Reals),
            "Q" => konst(Const::Rationals),
            "I" => konst(Const::Irrationals),
            "Z" => konst(Const::Integers),
            "N" => konst(Const::Naturals),
            "empty" => konst(Const::Empty),
            "interval" => {
                self.punct('(')?;
                let lo = self.bound()?;
                self.punct(',')?;
                let hi = self.bound()?;
                self.punct(',')?;
                let lo_closed = self.flag()?;
                self.punct(',')?;
                let hi_closed = self.flag()?;
                self.punct(')')?;
                Ok(Expr::Interval { lo, hi, lo_closed, hi_closed })
            }
            "points" => {
                self.punct('(')?;
                let mut ps = Vec::new();
                if !self.eat(')') {
                    ps.push(self.number()?);
                    while self.eat(',') {
                        ps.push(self.number()?);
                    }
                    self.punct(')')?;
                }
                Ok(Expr::Points(ps))
            }
            "prog" => {
                self.punct('(')?;
                let a = self.number()?;
                self.punct(',')?;
                let d = self.number()?;
                self.punct(')')?;
                Ok(Expr::Prog(a, d))
            }
            "union" => Ok(Expr::Set(SetFn::Union, self.args(1, usize::MAX)?)),
            "inter" => Ok(Expr::Set(SetFn::Inter, self.args(1, usize::MAX)?)),
            "setminus" => Ok(Expr::Set(SetFn::Setminus, self.args(2, 2)?)),
            "compl" => Ok(Expr::Set(SetFn::Compl, self.args(1, 1)?)),
            "qtrace" => Ok(Expr::Set(SetFn::Qtrace, self.args(1, 1)?)),
            "itrace" => Ok(Expr::Set(SetFn::Itrace, self.args(1, 1)?)),
            "card" => Ok(Expr::Card(self.one()?)),
            "subset" => {
                let (a, b) = self.two()?;
                Ok(Expr::Subset(a, b))
            }
            "eq" => {
                let (a, b) = self.two()?;
                Ok(Expr::Eq(a, b))
            }
            other => {
                if let Some((_, op)) = TOP_OPS.iter().find(|(n, _)| *n == other) {
                    let ctx = self.context()?;
                    if ctx.ideal.is_some() {
                        return Err(ParseError {
                            pos,
                            message: format!("`{other}` takes a topology only"),
                            expected: vec![],
                        });
                    }
                    return Ok(Expr::Top(*op, ctx, self.one()?));
                }
                if let Some((op, s)) = lookup_ideal_op(other) {
                    let ctx = self.context()?;
                    return Ok(Expr::Ideal(op, s, ctx, self.one()?));
                }
                Err(ParseError { pos, message: format!("unknown identifier `{other}`"), expected: vec![] })
            }
        }
    }
}

pub fn parse_expression(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(src)?, at: 0, depth: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail(&["end of input"]);
    }
    Ok(e)
}

/// Parses a bare topology selector such as `particular:1/2` or `excluded:I`.
pub fn parse_topology(src: &str) -> Result<TopoSel, ParseError> {
    let mut p = Parser { toks: lex(src)?, at: 0, depth: 0 };
    let t = p.topology()?;
    if *p.peek() != Tok::End {
        return p.fail(&["end of input"]);
    }
    Ok(t)
}

/// Splits a `;`-separated list at bracket depth zero, so context clauses
/// and interval literals stay whole.
pub fn split_list(src: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in src.char_indices() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            ';' if depth == 0 => {
                out.push(src[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(src[start..].trim());
    out.into_iter().filter(|s| !s.is_empty()).collect()
}
