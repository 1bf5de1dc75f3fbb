//! Lexer, recursive-descent parser and canonical renderer for scalar and
//! set expressions.
//!
//! ```text
//! expr    := sum ('except' '{' [entry (',' entry)*] '}')*
//! entry   := INT ':' ['-'] INT ['/' INT]
//! sum     := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ['^' INT]
//! atom    := INT | 'n' | '(' expr ')' | 'ind' '(' set ')'
//!          | FUNC '(' expr [',' expr] ')'
//! set     := setand ('|' setand)*
//! setand  := setnot ('&' setnot)*
//! setnot  := '~' setnot | setatom
//! setatom := '{' [INT (',' INT)*] '}' | INT 'mod' INT | 'evens' | 'odds'
//!          | 'all' | 'cofinite' '~' '{' [INT (',' INT)*] '}' | '(' set ')'
//! filter  := 'frechet' | 'principal' ':' set
//! ```

use std::fmt;

use num_bigint::BigInt;

use crate::exactnum::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(i) => write!(f, "'{i}'"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("SyntaxError line={line} column={column} expected={} found={found}", .expected.join("|"))]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

const SYMBOLS: &str = "+-*/^(){},:~&|";

fn lex(text: &str) -> Result<Vec<Token>, SyntaxError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let s: String = chars[i..].iter().take_while(|c| c.is_ascii_digit()).collect();
            i += s.len();
            col += s.len();
            Tok::Int(s.parse().expect("digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            let s: String = chars[i..].iter().take_while(|c| c.is_ascii_alphanumeric() || **c == '_').collect();
            i += s.len();
            col += s.len();
            Tok::Ident(s)
        } else if SYMBOLS.contains(c) {
            i += 1;
            col += 1;
            Tok::Sym(c)
        } else {
            return Err(SyntaxError {
                line,
                column: col,
                expected: vec!["token".into()],
                found: format!("'{c}'"),
            });
        };
        out.push(Token { tok, line: start_line, col: start_col });
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Shift,
    Sum,
    St,
    Class,
    Eq,
    Le,
    Invert,
    Limit,
}

impl Func {
    const ALL: [Func; 8] = [
        Func::Shift,
        Func::Sum,
        Func::St,
        Func::Class,
        Func::Eq,
        Func::Le,
        Func::Invert,
        Func::Limit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Shift => "shift",
            Func::Sum => "sum",
            Func::St => "st",
            Func::Class => "class",
            Func::Eq => "eq",
            Func::Le => "le",
            Func::Invert => "invert",
            Func::Limit => "limit",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Eq | Func::Le => 2,
            _ => 1,
        }
    }

    fn from_name(s: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetExpr {
    Points(Vec<u64>),
    Residue(u64, u64),
    Evens,
    Odds,
    All,
    Cofinite(Vec<u64>),
    Not(Box<SetExpr>),
    And(Box<SetExpr>, Box<SetExpr>),
    Or(Box<SetExpr>, Box<SetExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Ind(SetExpr),
    Call(Func, Vec<Expr>),
    Except(Box<Expr>, Vec<(u64, Rat)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FilterExpr {
    Frechet,
    Principal(SetExpr),
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Parser, SyntaxError> {
        Ok(Parser { toks: lex(text)?, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> SyntaxError {
        let t = &self.toks[self.pos];
        SyntaxError {
            line: t.line,
            column: t.col,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.to_string(),
        }
    }

    fn at_sym(&self, c: char) -> bool {
        *self.peek() == Tok::Sym(c)
    }

    fn at_ident(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Ident(i) if i == s)
    }

    fn expect_sym(&mut self, c: char) -> Result<(), SyntaxError> {
        if self.at_sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[&format!("'{c}'")]))
        }
    }

    fn expect_ident(&mut self, s: &str) -> Result<(), SyntaxError> {
        if self.at_ident(s) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[&format!("'{s}'")]))
        }
    }

    fn finish(&self) -> Result<(), SyntaxError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.error(&["end of input"]))
        }
    }

    fn int(&mut self) -> Result<BigInt, SyntaxError> {
        match self.peek().clone() {
            Tok::Int(i) => {
                self.bump();
                Ok(i)
            }
            _ => Err(self.error(&["integer"])),
        }
    }

    fn natural<T: TryFrom<BigInt>>(&mut self) -> Result<T, SyntaxError> {
        let err = self.error(&["natural number"]);
        T::try_from(self.int()?).map_err(|_| err)
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut e = self.sum()?;
        while self.at_ident("except") {
            self.bump();
            self.expect_sym('{')?;
            let mut entries = Vec::new();
            if !self.at_sym('}') {
                loop {
                    let k = self.natural::<u64>()?;
                    self.expect_sym(':')?;
                    entries.push((k, self.signed_rat()?));
                    if !self.at_sym(',') {
                        break;
                    }
                    self.bump();
                }
            }
            self.expect_sym('}')?;
            e = Expr::Except(Box::new(e), entries);
        }
        Ok(e)
    }

    fn signed_rat(&mut self) -> Result<Rat, SyntaxError> {
        let negative = self.at_sym('-');
        if negative {
            self.bump();
        }
        let num = self.int()?;
        let mut r = Rat::from(num);
        if self.at_sym('/') {
            self.bump();
            let err = self.error(&["positive integer"]);
            let den = self.int()?;
            if den == BigInt::from(0) {
                return Err(err);
            }
            r = r / Rat::from(den);
        }
        Ok(if negative { -r } else { r })
    }

    fn sum(&mut self) -> Result<Expr, SyntaxError> {
        let mut e = self.term()?;
        loop {
            if self.at_sym('+') {
                self.bump();
                e = Expr::Add(Box::new(e), Box::new(self.term()?));
            } else if self.at_sym('-') {
                self.bump();
                e = Expr::Sub(Box::new(e), Box::new(self.term()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, SyntaxError> {
        let mut e = self.unary()?;
        loop {
            if self.at_sym('*') {
                self.bump();
                e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
            } else if self.at_sym('/') {
                self.bump();
                e = Expr::Div(Box::new(e), Box::new(self.unary()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, SyntaxError> {
        if self.at_sym('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.at_sym('^') {
            self.bump();
            let k = self.natural::<u32>()?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, SyntaxError> {
        const EXPECTED: [&str; 5] = ["integer", "'n'", "'('", "'ind'", "function name"];
        match self.peek().clone() {
            Tok::Int(i) => {
                self.bump();
                Ok(Expr::Int(i))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Tok::Ident(s) if s == "n" => {
                self.bump();
                Ok(Expr::Var)
            }
            Tok::Ident(s) if s == "ind" => {
                self.bump();
                self.expect_sym('(')?;
                let set = self.set()?;
                self.expect_sym(')')?;
                Ok(Expr::Ind(set))
            }
            Tok::Ident(s) => match Func::from_name(&s) {
                Some(func) => {
                    self.bump();
                    self.expect_sym('(')?;
                    let mut args = vec![self.expr()?];
                    for _ in 1..func.arity() {
                        self.expect_sym(',')?;
                        args.push(self.expr()?);
                    }
                    self.expect_sym(')')?;
                    Ok(Expr::Call(func, args))
                }
                None => Err(self.error(&EXPECTED)),
            },
            _ => Err(self.error(&EXPECTED)),
        }
    }

    fn set(&mut self) -> Result<SetExpr, SyntaxError> {
        let mut s = self.set_and()?;
        while self.at_sym('|') {
            self.bump();
            s = SetExpr::Or(Box::new(s), Box::new(self.set_and()?));
        }
        Ok(s)
    }

    fn set_and(&mut self) -> Result<SetExpr, SyntaxError> {
        let mut s = self.set_not()?;
        while self.at_sym('&') {
            self.bump();
            s = SetExpr::And(Box::new(s), Box::new(self.set_not()?));
        }
        Ok(s)
    }

    fn set_not(&mut self) -> Result<SetExpr, SyntaxError> {
        if self.at_sym('~') {
            self.bump();
            return Ok(SetExpr::Not(Box::new(self.set_not()?)));
        }
        self.set_atom()
    }

    fn points(&mut self) -> Result<Vec<u64>, SyntaxError> {
        self.expect_sym('{')?;
        let mut pts = Vec::new();
        if !self.at_sym('}') {
            loop {
                pts.push(self.natural::<u64>()?);
                if !self.at_sym(',') {
                    break;
                }
                self.bump();
            }
        }
        self.expect_sym('}')?;
        Ok(pts)
    }

    fn set_atom(&mut self) -> Result<SetExpr, SyntaxError> {
        const EXPECTED: [&str; 7] = ["'{'", "integer", "'evens'", "'odds'", "'all'", "'cofinite'", "'('"];
        match self.peek().clone() {
            Tok::Sym('{') => Ok(SetExpr::Points(self.points()?)),
            Tok::Sym('(') => {
                self.bump();
                let s = self.set()?;
                self.expect_sym(')')?;
                Ok(s)
            }
            Tok::Int(_) => {
                let r = self.natural::<u64>()?;
                self.expect_ident("mod")?;
                let m = self.natural::<u64>()?;
                Ok(SetExpr::Residue(r, m))
            }
            Tok::Ident(s) => {
                let out = match s.as_str() {
                    "evens" => SetExpr::Evens,
                    "odds" => SetExpr::Odds,
                    "all" => SetExpr::All,
                    "cofinite" => {
                        self.bump();
                        self.expect_sym('~')?;
                        return Ok(SetExpr::Cofinite(self.points()?));
                    }
                    _ => return Err(self.error(&EXPECTED)),
                };
                self.bump();
                Ok(out)
            }
            _ => Err(self.error(&EXPECTED)),
        }
    }

    fn filter(&mut self) -> Result<FilterExpr, SyntaxError> {
        if self.at_ident("frechet") {
            self.bump();
            return Ok(FilterExpr::Frechet);
        }
        if self.at_ident("principal") {
            self.bump();
            self.expect_sym(':')?;
            return Ok(FilterExpr::Principal(self.set()?));
        }
        Err(self.error(&["'frechet'", "'principal'"]))
    }
}

pub fn parse(text: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser::new(text)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_set(text: &str) -> Result<SetExpr, SyntaxError> {
    let mut p = Parser::new(text)?;
    let s = p.set()?;
    p.finish()?;
    Ok(s)
}

pub fn parse_filter(text: &str) -> Result<FilterExpr, SyntaxError> {
    let mut p = Parser::new(text)?;
    let f = p.filter()?;
    p.finish()?;
    Ok(f)
}

// Binding strength used by the renderer; a child is parenthesized when it
// binds more loosely than its position requires.
const P_EXCEPT: u8 = 0;
const P_SUM: u8 = 1;
const P_TERM: u8 = 2;
const P_UNARY: u8 = 3;
const P_POWER: u8 = 4;
const P_ATOM: u8 = 5;

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Except(..) => P_EXCEPT,
            Expr::Add(..) | Expr::Sub(..) => P_SUM,
            Expr::Mul(..) | Expr::Div(..) => P_TERM,
            Expr::Neg(..) => P_UNARY,
            Expr::Pow(..) => P_POWER,
            _ => P_ATOM,
        }
    }

    fn child(&self, min: u8) -> String {
        if self.prec() >= min {
            self.to_string()
        } else {
            format!("({self})")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(i) => write!(f, "{i}"),
            Expr::Var => write!(f, "n"),
            Expr::Neg(e) => write!(f, "-{}", e.child(P_POWER)),
            Expr::Add(a, b) => write!(f, "{} + {}", a.child(P_SUM), b.child(P_TERM)),
            Expr::Sub(a, b) => write!(f, "{} - {}", a.child(P_SUM), b.child(P_TERM)),
            Expr::Mul(a, b) => write!(f, "{}*{}", a.child(P_TERM), b.child(P_UNARY)),
            Expr::Div(a, b) => write!(f, "{}/{}", a.child(P_TERM), b.child(P_UNARY)),
            Expr::Pow(a, k) => write!(f, "{}^{k}", a.child(P_ATOM)),
            Expr::Ind(s) => write!(f, "ind({s})"),
            Expr::Call(func, args) => {
                let args: Vec<String> = args.iter().map(Expr::to_string).collect();
                write!(f, "{}({})", func.name(), args.join(", "))
            }
            Expr::Except(e, entries) => {
                let entries: Vec<String> = entries.iter().map(|(k, v)| format!("{k}: {v}")).collect();
                write!(f, "{} except {{{}}}", e.child(P_SUM), entries.join(", "))
            }
        }
    }
}

impl SetExpr {
    fn prec(&self) -> u8 {
        match self {
            SetExpr::Or(..) => 0,
            SetExpr::And(..) => 1,
            SetExpr::Not(..) => 2,
            // `r mod m` is an atom for the parser, but wrap it next to operators for legibility
            _ => 3,
        }
    }

    fn child(&self, min: u8) -> String {
        let s = self.to_string();
        if self.prec() < min || (min > 0 && matches!(self, SetExpr::Residue(..))) {
            format!("({s})")
        } else {
            s
        }
    }
}

fn points(pts: &[u64]) -> String {
    let items: Vec<String> = pts.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(","))
}

impl fmt::Display for SetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetExpr::Points(p) => write!(f, "{}", points(p)),
            SetExpr::Residue(r, m) => write!(f, "{r} mod {m}"),
            SetExpr::Evens => write!(f, "evens"),
            SetExpr::Odds => write!(f, "odds"),
            SetExpr::All => write!(f, "all"),
            SetExpr::Cofinite(p) => write!(f, "cofinite~{}", points(p)),
            SetExpr::Not(s) => write!(f, "~{}", s.child(2)),
            SetExpr::And(a, b) => write!(f, "{}&{}", a.child(1), b.child(2)),
            SetExpr::Or(a, b) => write!(f, "{}|{}", a.child(0), b.child(1)),
        }
    }
}

impl fmt::Display for FilterExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FilterExpr::Frechet => write!(f, "frechet"),
            FilterExpr::Principal(s) => write!(f, "principal:{s}"),
        }
    }
}
