//! The algebra description language.
//!
//! ```text
//! algebra Gamma11 over Q
//! vertices 1 2
//! arrows alpha: 1 -> 1, mu: 1 -> 2, nu: 2 -> 1
//! params n = 2
//! relations alpha^n; mu*nu; nu*alpha^3; alpha^3*mu
//! ```
//!
//! Besides the core grammar, exponents and coefficients may name a
//! parameter declared on a `params` line, `(w)^k` repeats a word, and `#`
//! starts a comment. An equation `x = y` is written `x - y`.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::quiver::{poly_add_term, Path, Poly, Quiver};
use crate::rewrite::Bounds;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Num {
    Lit(Scalar),
    Param(String),
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Num::Lit(s) => write!(f, "{s}"),
            Num::Param(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Arrow(String, Option<Num>),
    Group(Vec<Factor>, Num),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Word {
    Trivial(String),
    Factors(Vec<Factor>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub negative: bool,
    pub coef: Option<Num>,
    pub word: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelExpr {
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowDecl {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub name: String,
    pub field: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDecl>,
    pub params: BTreeMap<String, Scalar>,
    pub relations: Vec<RelExpr>,
}

// ---------------------------------------------------------------- lexing

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Number(String),
    Sym(&'static str),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

impl Token {
    fn text(&self) -> String {
        match &self.tok {
            Tok::Ident(s) | Tok::Number(s) => s.clone(),
            Tok::Sym(s) => s.to_string(),
            Tok::End => "end of input".into(),
        }
    }
}

const KEYWORDS: [&str; 5] = ["algebra", "vertices", "arrows", "params", "relations"];

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (line, col) = (ln + 1, i + 1);
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                // a fraction only when digits follow the slash
                if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                // vertex ids like `1a` continue as identifiers
                if i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                    out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), line, col });
                } else {
                    out.push(Token { tok: Tok::Number(chars[start..i].iter().collect()), line, col });
                }
                continue;
            }
            if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), line, col });
                continue;
            }
            let sym = match c {
                '-' if chars.get(i + 1) == Some(&'>') => "->",
                ':' => ":",
                ',' => ",",
                ';' => ";",
                '+' => "+",
                '-' => "-",
                '*' => "*",
                '^' => "^",
                '(' => "(",
                ')' => ")",
                '=' => "=",
                _ => {
                    return Err(Error::Syntax {
                        line,
                        col,
                        token: c.to_string(),
                        msg: "unexpected character".into(),
                    })
                }
            };
            i += sym.len();
            out.push(Token { tok: Tok::Sym(sym), line, col });
        }
    }
    let (line, col) = (text.lines().count().max(1), 1);
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

// ---------------------------------------------------------------- parsing

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    arrows: Vec<String>,
    params: &'a BTreeMap<String, Scalar>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Token {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, t: &Token, msg: &str) -> Error {
        Error::Syntax { line: t.line, col: t.col, token: t.text(), msg: msg.into() }
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(&self.peek().tok, Tok::Sym(x) if *x == s)
    }

    fn is_keyword(&self) -> bool {
        matches!(&self.peek().tok, Tok::Ident(x) if KEYWORDS.contains(&x.as_str()))
    }

    fn expect_sym(&mut self, s: &str) -> Result<()> {
        let t = self.next();
        match &t.tok {
            Tok::Sym(x) if *x == s => Ok(()),
            _ => Err(self.err(&t, &format!("expected `{s}`"))),
        }
    }

    fn expect_keyword(&mut self, k: &str) -> Result<()> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(x) if x == k => Ok(()),
            _ => Err(self.err(&t, &format!("expected `{k}`"))),
        }
    }

    fn name(&mut self) -> Result<String> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(x) if !KEYWORDS.contains(&x.as_str()) => Ok(x.clone()),
            _ => Err(self.err(&t, "expected a name")),
        }
    }

    fn id(&mut self) -> Result<String> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(x) if !KEYWORDS.contains(&x.as_str()) => Ok(x.clone()),
            Tok::Number(x) if !x.contains('/') => Ok(x.clone()),
            _ => Err(self.err(&t, "expected a vertex id")),
        }
    }

    fn rational(&mut self) -> Result<Scalar> {
        let t = self.next();
        match &t.tok {
            Tok::Number(x) => x.parse().map_err(|_| self.err(&t, "invalid number")),
            _ => Err(self.err(&t, "expected a number")),
        }
    }

    /// Exponent: a positive integer literal or a bound parameter.
    fn exponent(&mut self) -> Result<Num> {
        let t = self.next();
        match &t.tok {
            Tok::Number(x) if !x.contains('/') => {
                Ok(Num::Lit(x.parse().map_err(|_| self.err(&t, "invalid exponent"))?))
            }
            Tok::Ident(x) => {
                if self.params.contains_key(x) {
                    Ok(Num::Param(x.clone()))
                } else {
                    Err(Error::UnboundParameter { line: t.line, col: t.col, name: x.clone() })
                }
            }
            _ => Err(self.err(&t, "expected an exponent")),
        }
    }

    fn factor(&mut self) -> Result<Factor> {
        if self.is_sym("(") {
            self.next();
            let mut inner = vec![self.factor()?];
            while self.is_sym("*") {
                self.next();
                inner.push(self.factor()?);
            }
            self.expect_sym(")")?;
            self.expect_sym("^")?;
            let e = self.exponent()?;
            return Ok(Factor::Group(inner, e));
        }
        let t = self.next();
        let Tok::Ident(name) = &t.tok else {
            return Err(self.err(&t, "expected an arrow"));
        };
        if !self.arrows.contains(name) {
            return Err(Error::UnknownArrow { line: t.line, col: t.col, name: name.clone() });
        }
        let exp = if self.is_sym("^") {
            self.next();
            Some(self.exponent()?)
        } else {
            None
        };
        Ok(Factor::Arrow(name.clone(), exp))
    }

    fn term(&mut self, negative: bool) -> Result<Term> {
        let mut coef = None;
        let star_next = matches!(&self.peek_at(1).tok, Tok::Sym("*"));
        match &self.peek().tok {
            Tok::Number(_) => {
                coef = Some(Num::Lit(self.rational()?));
                self.expect_sym("*")?;
            }
            Tok::Ident(x) if star_next && self.params.contains_key(x) && !self.arrows.contains(x) => {
                coef = Some(Num::Param(x.clone()));
                self.next();
                self.next();
            }
            _ => {}
        }
        if let Tok::Ident(x) = &self.peek().tok {
            if let Some(v) = x.strip_prefix("e_") {
                if !self.arrows.contains(x) {
                    let v = v.to_string();
                    self.next();
                    return Ok(Term { negative, coef, word: Word::Trivial(v) });
                }
            }
        }
        let mut factors = vec![self.factor()?];
        while self.is_sym("*") {
            self.next();
            factors.push(self.factor()?);
        }
        Ok(Term { negative, coef, word: Word::Factors(factors) })
    }

    fn relexpr(&mut self) -> Result<RelExpr> {
        let mut negative = false;
        if self.is_sym("-") {
            self.next();
            negative = true;
        }
        let mut terms = vec![self.term(negative)?];
        loop {
            if self.is_sym("+") {
                self.next();
                terms.push(self.term(false)?);
            } else if self.is_sym("-") {
                self.next();
                terms.push(self.term(true)?);
            } else {
                break;
            }
        }
        Ok(RelExpr { terms })
    }
}

/// Parse a specification using only the parameters it declares.
pub fn parse(text: &str) -> Result<AlgebraSpec> {
    parse_with(text, &BTreeMap::new())
}

/// Parse, binding or overriding parameters from `overrides`.
pub fn parse_with(text: &str, overrides: &BTreeMap<String, Scalar>) -> Result<AlgebraSpec> {
    let toks = lex(text)?;
    // first pass: collect declared parameters so relations can refer to them
    let mut params = BTreeMap::new();
    {
        let empty = BTreeMap::new();
        let mut p = Parser { toks: toks.clone(), pos: 0, arrows: Vec::new(), params: &empty };
        while !matches!(p.peek().tok, Tok::End) {
            if matches!(&p.peek().tok, Tok::Ident(x) if x == "params") {
                p.next();
                loop {
                    let name = p.name()?;
                    p.expect_sym("=")?;
                    let neg = if p.is_sym("-") {
                        p.next();
                        true
                    } else {
                        false
                    };
                    let v = p.rational()?;
                    params.insert(name, if neg { -v } else { v });
                    if p.is_sym(",") {
                        p.next();
                    } else {
                        break;
                    }
                }
            } else {
                p.next();
            }
        }
    }
    for (k, v) in overrides {
        params.insert(k.clone(), v.clone());
    }

    let mut p = Parser { toks, pos: 0, arrows: Vec::new(), params: &params };
    p.expect_keyword("algebra")?;
    let name = p.name()?;
    p.expect_keyword("over")?;
    let ft = p.next();
    match &ft.tok {
        Tok::Ident(x) if x == "Q" => {}
        _ => return Err(p.err(&ft, "only the field Q is supported")),
    }
    p.expect_keyword("vertices")?;
    let mut vertices = Vec::new();
    while !p.is_keyword() && !matches!(p.peek().tok, Tok::End) {
        vertices.push(p.id()?);
    }
    if vertices.is_empty() {
        let t = p.peek().clone();
        return Err(p.err(&t, "expected at least one vertex"));
    }
    p.expect_keyword("arrows")?;
    let mut arrows = Vec::new();
    if !p.is_keyword() && !matches!(p.peek().tok, Tok::End) {
        loop {
            let at = p.peek().clone();
            let aname = p.name()?;
            if aname.starts_with("e_") {
                return Err(p.err(&at, "arrow names may not start with e_"));
            }
            p.expect_sym(":")?;
            let st = p.peek().clone();
            let source = p.id()?;
            p.expect_sym("->")?;
            let tt = p.peek().clone();
            let target = p.id()?;
            for (v, t) in [(&source, &st), (&target, &tt)] {
                if !vertices.contains(v) {
                    return Err(p.err(t, "undeclared vertex"));
                }
            }
            if p.arrows.contains(&aname) {
                return Err(p.err(&at, "duplicate arrow"));
            }
            p.arrows.push(aname.clone());
            arrows.push(ArrowDecl { name: aname, source, target });
            if p.is_sym(",") {
                p.next();
            } else {
                break;
            }
        }
    }
    let mut relations = Vec::new();
    loop {
        match &p.peek().tok {
            Tok::End => break,
            Tok::Ident(x) if x == "params" => {
                // already collected; skip `name = value` items
                p.next();
                loop {
                    p.next();
                    p.expect_sym("=")?;
                    if p.is_sym("-") {
                        p.next();
                    }
                    p.next();
                    if p.is_sym(",") {
                        p.next();
                    } else {
                        break;
                    }
                }
            }
            Tok::Ident(x) if x == "relations" => {
                p.next();
                relations.push(p.relexpr()?);
                while p.is_sym(";") {
                    p.next();
                    if p.is_keyword() || matches!(p.peek().tok, Tok::End) {
                        break;
                    }
                    relations.push(p.relexpr()?);
                }
            }
            _ => {
                let t = p.peek().clone();
                return Err(p.err(&t, "expected `relations` or `params`"));
            }
        }
    }
    // only keep parameters that are declared or overridden
    Ok(AlgebraSpec { name, field: "Q".into(), vertices, arrows, params, relations })
}

// ---------------------------------------------------------------- output

fn fmt_factor(f: &Factor) -> String {
    match f {
        Factor::Arrow(a, None) => a.clone(),
        Factor::Arrow(a, Some(e)) => format!("{a}^{e}"),
        Factor::Group(inner, e) => {
            format!("({})^{e}", inner.iter().map(fmt_factor).collect::<Vec<_>>().join("*"))
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra {} over {}", self.name, self.field)?;
        writeln!(f, "vertices {}", self.vertices.join(" "))?;
        let arrows: Vec<String> =
            self.arrows.iter().map(|a| format!("{}: {} -> {}", a.name, a.source, a.target)).collect();
        writeln!(f, "arrows {}", arrows.join(", "))?;
        if !self.params.is_empty() {
            let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            writeln!(f, "params {}", ps.join(", "))?;
        }
        if !self.relations.is_empty() {
            let rels: Vec<String> = self
                .relations
                .iter()
                .map(|r| {
                    let mut s = String::new();
                    for (i, t) in r.terms.iter().enumerate() {
                        if i == 0 {
                            if t.negative {
                                s.push('-');
                            }
                        } else {
                            s.push_str(if t.negative { " - " } else { " + " });
                        }
                        if let Some(c) = &t.coef {
                            s.push_str(&format!("{c}*"));
                        }
                        match &t.word {
                            Word::Trivial(v) => s.push_str(&format!("e_{v}")),
                            Word::Factors(fs) => {
                                s.push_str(&fs.iter().map(fmt_factor).collect::<Vec<_>>().join("*"))
                            }
                        }
                    }
                    s
                })
                .collect();
            writeln!(f, "relations {}", rels.join("; "))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------- elaboration

impl AlgebraSpec {
    fn value(&self, n: &Num) -> Result<Scalar> {
        match n {
            Num::Lit(s) => Ok(s.clone()),
            Num::Param(p) => self
                .params
                .get(p)
                .cloned()
                .ok_or(Error::UnboundParameter { line: 0, col: 0, name: p.clone() }),
        }
    }

    fn exponent(&self, n: &Num) -> Result<usize> {
        let v = self.value(n)?;
        match v.to_i64() {
            Some(k) if k >= 1 => Ok(k as usize),
            _ => Err(Error::InvalidParameter(format!("exponent {n} = {v} must be a positive integer"))),
        }
    }

    fn expand(&self, f: &Factor, quiver: &Quiver, out: &mut Vec<usize>) -> Result<()> {
        match f {
            Factor::Arrow(a, e) => {
                let k = match e {
                    Some(e) => self.exponent(e)?,
                    None => 1,
                };
                let idx = quiver.arrow_index(a).expect("arrow resolved during parsing");
                out.extend(std::iter::repeat_n(idx, k));
            }
            Factor::Group(inner, e) => {
                let k = self.exponent(e)?;
                let mut once = Vec::new();
                for g in inner {
                    self.expand(g, quiver, &mut once)?;
                }
                for _ in 0..k {
                    out.extend_from_slice(&once);
                }
            }
        }
        Ok(())
    }

    pub fn quiver(&self) -> Result<Quiver> {
        let idx = |v: &str| self.vertices.iter().position(|x| x == v).unwrap();
        Quiver::new(
            self.vertices.clone(),
            self.arrows.iter().map(|a| (a.name.clone(), idx(&a.source), idx(&a.target))).collect(),
        )
    }

    /// Concrete quiver and path-algebra relations with parameters substituted.
    pub fn to_relations(&self) -> Result<(Quiver, Vec<Poly>)> {
        let quiver = self.quiver()?;
        let mut rels = Vec::new();
        for r in &self.relations {
            let mut poly = Poly::new();
            for t in &r.terms {
                let mut c = match &t.coef {
                    Some(n) => self.value(n)?,
                    None => Scalar::one(),
                };
                if t.negative {
                    c = -c;
                }
                let path = match &t.word {
                    Word::Trivial(v) => {
                        let i = quiver
                            .vertex_index(v)
                            .ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex e_{v}")))?;
                        Path::trivial(i)
                    }
                    Word::Factors(fs) => {
                        let mut arrows = Vec::new();
                        for f in fs {
                            self.expand(f, &quiver, &mut arrows)?;
                        }
                        quiver.path(&arrows).ok_or_else(|| {
                            Error::InvalidQuiver(format!(
                                "word {} does not compose",
                                fs.iter().map(fmt_factor).collect::<Vec<_>>().join("*")
                            ))
                        })?
                    }
                };
                poly_add_term(&mut poly, path, &c);
            }
            if !poly.is_empty() {
                rels.push(poly);
            }
        }
        Ok((quiver, rels))
    }

    pub fn build(&self, bounds: Bounds) -> Result<Algebra> {
        let (quiver, rels) = self.to_relations()?;
        Algebra::build(&self.name, quiver, &rels, bounds)
    }
}
