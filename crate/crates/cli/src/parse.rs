//! The session language.
//!
//! ```text
//! ring R = F5[x,y]/(x*y);            # Q for the rationals, `a:3` for weights
//! ideal I = (y) in R;
//! module M = coker [[x, y], [0, x]] in R;
//! trace(I); ext(1, I, R/I); rigid(I); syzygy(2, I); grade(I);
//! check thm-3.9 on R window=-1..2 random=200;
//! ```

use std::collections::BTreeMap;
use std::fmt;

use tracemod::{DynField, FieldSpec, MonomialOrder, OrderKind, Poly, PolyRing};
use tracemod_verify::CheckId;

pub type DynPoly = Poly<DynField>;

/// A location in the source, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub pos: Pos,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.pos.line, self.pos.column, self.message)
    }
}

impl std::error::Error for Diagnostic {}

#[derive(Clone, Debug)]
pub struct RingDef {
    pub base: PolyRing<DynField>,
    pub relations: Vec<DynPoly>,
}

#[derive(Clone, Debug)]
pub struct IdealDef {
    pub ring: String,
    pub generators: Vec<DynPoly>,
}

#[derive(Clone, Debug)]
pub struct ModuleDef {
    pub ring: String,
    pub rows: Vec<Vec<DynPoly>>,
}

/// An operation argument after name resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Int(i64),
    Ring(String),
    Ideal(String),
    Module(String),
    /// `R/I`.
    Quotient(String, String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Trace,
    Ext,
    Hom,
    Rigid,
    Syzygy,
    Cosyzygy,
    Grade,
    Ann,
    Socle,
    Dual,
    Conormal,
    Free,
    Gorenstein,
    Gb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Int,
    Ideal,
    Ring,
    ModuleLike,
}

impl Op {
    fn parse(name: &str) -> Option<Op> {
        Some(match name {
            "trace" => Op::Trace,
            "ext" => Op::Ext,
            "hom" => Op::Hom,
            "rigid" => Op::Rigid,
            "syzygy" => Op::Syzygy,
            "cosyzygy" => Op::Cosyzygy,
            "grade" => Op::Grade,
            "ann" => Op::Ann,
            "socle" => Op::Socle,
            "dual" => Op::Dual,
            "conormal" => Op::Conormal,
            "free" => Op::Free,
            "gorenstein" => Op::Gorenstein,
            "gb" => Op::Gb,
            _ => return None,
        })
    }

    /// Accepted argument shapes.
    fn signatures(self) -> &'static [&'static [Kind]] {
        use Kind::*;
        match self {
            Op::Trace => &[&[Ideal], &[ModuleLike, ModuleLike]],
            Op::Ext => &[&[Int, ModuleLike, ModuleLike]],
            Op::Hom => &[&[ModuleLike, ModuleLike]],
            Op::Rigid | Op::Ann | Op::Socle | Op::Dual | Op::Free => &[&[ModuleLike]],
            Op::Syzygy | Op::Cosyzygy => &[&[Int, ModuleLike]],
            Op::Grade | Op::Conormal | Op::Gb => &[&[Ideal]],
            Op::Gorenstein => &[&[Ring]],
        }
    }
}

/// Options of a `check` statement, validated but uninterpreted.
pub type CheckOptions = BTreeMap<String, String>;

#[derive(Clone, Debug)]
pub enum Statement {
    Ring { name: String, def: RingDef },
    Ideal { name: String, def: IdealDef },
    Module { name: String, def: ModuleDef },
    Op { op: Op, args: Vec<Arg> },
    Check { id: CheckId, ring: String, options: CheckOptions },
}

#[derive(Clone, Debug)]
pub struct Located {
    pub pos: Pos,
    /// The statement's source text without the trailing `;`.
    pub text: String,
    pub statement: Statement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    Ring,
    /// Ideal or module, with the index of its ring statement.
    Ideal(usize),
    Module(usize),
}

/// A parsed session: statements in order and the names they define.
#[derive(Clone, Debug, Default)]
pub struct Session {
    pub statements: Vec<Located>,
    pub symbols: BTreeMap<String, Symbol>,
}

pub const CHECK_OPTIONS: &[&str] =
    &["seed", "window", "ext_bound", "random", "exhaustive", "dim_cap", "max_degree", "pairs", "ambients", "ideals"];

struct Scanner<'a> {
    chars: Vec<char>,
    offset: usize,
    line: usize,
    column: usize,
    source: &'a str,
}

type Parsed<T> = Result<T, Diagnostic>;

impl<'a> Scanner<'a> {
    fn new(source: &'a str) -> Self {
        Scanner { chars: source.chars().collect(), offset: 0, line: 1, column: 1, source }
    }

    fn pos(&self) -> Pos {
        Pos { line: self.line, column: self.column }
    }

    fn error<T>(&self, pos: Pos, message: impl Into<String>) -> Parsed<T> {
        Err(Diagnostic { pos, message: message.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.offset).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.offset += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_space(&mut self) {
        while let Some(c) = self.peek() {
            if c == '#' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_space();
        self.peek().is_none()
    }

    fn describe(&self) -> String {
        match self.peek() {
            Some(c) => format!("`{c}`"),
            None => "end of input".into(),
        }
    }

    fn expect(&mut self, c: char) -> Parsed<()> {
        self.skip_space();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            self.error(self.pos(), format!("expected `{c}`, found {}", self.describe()))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_space();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn word(&mut self, extra: &[char]) -> Parsed<(Pos, String)> {
        self.skip_space();
        let pos = self.pos();
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' || extra.contains(&c) {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if s.is_empty() {
            return self.error(pos, format!("expected a name, found {}", self.describe()));
        }
        Ok((pos, s))
    }

    fn ident(&mut self) -> Parsed<(Pos, String)> {
        let (pos, s) = self.word(&[])?;
        if s.starts_with(|c: char| c.is_ascii_digit()) {
            return self.error(pos, format!("expected a name, found `{s}`"));
        }
        Ok((pos, s))
    }

    fn keyword(&mut self, kw: &str) -> Parsed<()> {
        let (pos, s) = self.word(&[])?;
        if s != kw {
            return self.error(pos, format!("expected `{kw}`, found `{s}`"));
        }
        Ok(())
    }

    fn integer(&mut self) -> Parsed<(Pos, i64)> {
        self.skip_space();
        let pos = self.pos();
        let mut s = String::new();
        if self.peek() == Some('-') {
            s.push('-');
            self.bump();
        }
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            s.push(c);
            self.bump();
        }
        s.parse().map(|n| (pos, n)).or_else(|_| self.error(pos, "expected an integer"))
    }

    /// Raw text up to a `,` or closing bracket at depth zero, which is not
    /// consumed.
    fn raw_item(&mut self) -> Parsed<(Pos, String)> {
        self.skip_space();
        let pos = self.pos();
        let mut depth = 0usize;
        let mut s = String::new();
        while let Some(c) = self.peek() {
            match c {
                '(' => depth += 1,
                ')' | ']' if depth == 0 => break,
                ')' => depth -= 1,
                ',' if depth == 0 => break,
                ';' => break,
                _ => {}
            }
            s.push(c);
            self.bump();
        }
        Ok((pos, s.trim_end().to_string()))
    }

    /// Comma-separated raw items up to `close`, which is consumed.
    fn raw_list(&mut self, close: char) -> Parsed<Vec<(Pos, String)>> {
        let mut items = Vec::new();
        if self.eat(close) {
            return Ok(items);
        }
        loop {
            let (pos, text) = self.raw_item()?;
            if text.is_empty() {
                return self.error(pos, "expected a polynomial");
            }
            items.push((pos, text));
            if self.eat(',') {
                continue;
            }
            self.expect(close)?;
            return Ok(items);
        }
    }

    fn text_since(&self, start: usize) -> String {
        self.chars[start..self.offset].iter().collect::<String>().trim().to_string()
    }
}

/// Shifts a column reported by the polynomial parser onto the source.
fn poly_error(pos: Pos, text: &str, e: tracemod::Error) -> Diagnostic {
    let message = e.to_string();
    if let Some((col, rest)) = message.strip_prefix("column ").and_then(|m| m.split_once(": ")) {
        if let Ok(col) = col.parse::<usize>() {
            let mut p = pos;
            for c in text.chars().take(col.saturating_sub(1)) {
                if c == '\n' {
                    p.line += 1;
                    p.column = 1;
                } else {
                    p.column += 1;
                }
            }
            return Diagnostic { pos: p, message: rest.to_string() };
        }
    }
    Diagnostic { pos, message }
}

fn parse_polys(base: &PolyRing<DynField>, items: &[(Pos, String)]) -> Parsed<Vec<DynPoly>> {
    items.iter().map(|(pos, text)| base.parse(text).map_err(|e| poly_error(*pos, text, e))).collect()
}

struct Parser<'a> {
    sc: Scanner<'a>,
    session: Session,
    rings: BTreeMap<String, (usize, PolyRing<DynField>)>,
}

impl<'a> Parser<'a> {
    fn define(&mut self, pos: Pos, name: &str, symbol: Symbol) -> Parsed<()> {
        if self.session.symbols.contains_key(name) {
            return self.sc.error(pos, format!("`{name}` is already defined"));
        }
        self.session.symbols.insert(name.to_string(), symbol);
        Ok(())
    }

    fn ring_ref(&mut self) -> Parsed<(usize, String, PolyRing<DynField>)> {
        let (pos, name) = self.sc.ident()?;
        match self.rings.get(&name) {
            Some((idx, base)) => Ok((*idx, name, base.clone())),
            None => self.sc.error(pos, format!("unknown ring {name}")),
        }
    }

    fn ring_statement(&mut self) -> Parsed<Statement> {
        let (pos, name) = self.sc.ident()?;
        self.sc.expect('=')?;
        let (fpos, field) = self.sc.word(&[])?;
        let spec = if field == "Q" {
            FieldSpec::rationals()
        } else if let Some(p) = field.strip_prefix('F').and_then(|p| p.parse::<u64>().ok()) {
            FieldSpec::prime(p).map_err(|e| Diagnostic { pos: fpos, message: e.to_string() })?
        } else {
            return self.sc.error(fpos, format!("unknown field `{field}`; use Q or F<p>"));
        };
        self.sc.expect('[')?;
        let mut vars = Vec::new();
        let mut weights = Vec::new();
        loop {
            let (_, v) = self.sc.ident()?;
            vars.push(v);
            if self.sc.eat(':') {
                let (wpos, w) = self.sc.integer()?;
                if w <= 0 || w > u32::MAX as i64 {
                    return self.sc.error(wpos, "weights must be positive");
                }
                weights.push(w as u32);
            } else {
                weights.push(1);
            }
            if self.sc.eat(',') {
                continue;
            }
            self.sc.expect(']')?;
            break;
        }
        let n = vars.len();
        let base = PolyRing::with_order(DynField::new(spec), vars, MonomialOrder::standard(OrderKind::Grevlex, n), weights)
            .map_err(|e| Diagnostic { pos, message: e.to_string() })?;
        let relations = if self.sc.eat('/') {
            self.sc.expect('(')?;
            let items = self.sc.raw_list(')')?;
            parse_polys(&base, &items)?
        } else {
            Vec::new()
        };
        self.define(pos, &name, Symbol::Ring)?;
        self.rings.insert(name.clone(), (self.session.statements.len(), base.clone()));
        Ok(Statement::Ring { name, def: RingDef { base, relations } })
    }

    fn ideal_statement(&mut self) -> Parsed<Statement> {
        let (pos, name) = self.sc.ident()?;
        self.sc.expect('=')?;
        self.sc.expect('(')?;
        let items = self.sc.raw_list(')')?;
        self.sc.keyword("in")?;
        let (idx, ring, base) = self.ring_ref()?;
        let generators = parse_polys(&base, &items)?;
        self.define(pos, &name, Symbol::Ideal(idx))?;
        Ok(Statement::Ideal { name, def: IdealDef { ring, generators } })
    }

    fn module_statement(&mut self) -> Parsed<Statement> {
        let (pos, name) = self.sc.ident()?;
        self.sc.expect('=')?;
        self.sc.keyword("coker")?;
        self.sc.expect('[')?;
        let mut raw_rows = Vec::new();
        loop {
            let rpos = {
                self.sc.skip_space();
                self.sc.pos()
            };
            self.sc.expect('[')?;
            raw_rows.push((rpos, self.sc.raw_list(']')?));
            if self.sc.eat(',') {
                continue;
            }
            self.sc.expect(']')?;
            break;
        }
        let width = raw_rows[0].1.len();
        if let Some((rpos, _)) = raw_rows.iter().find(|(_, r)| r.len() != width) {
            return self.sc.error(*rpos, "matrix rows have different lengths");
        }
        self.sc.keyword("in")?;
        let (idx, ring, base) = self.ring_ref()?;
        let rows = raw_rows.iter().map(|(_, r)| parse_polys(&base, r)).collect::<Parsed<Vec<_>>>()?;
        self.define(pos, &name, Symbol::Module(idx))?;
        Ok(Statement::Module { name, def: ModuleDef { ring, rows } })
    }

    fn check_statement(&mut self) -> Parsed<Statement> {
        let (pos, name) = self.sc.word(&['-', '.'])?;
        let id = CheckId::parse(&name).ok_or(Diagnostic { pos, message: format!("unknown check `{name}`") })?;
        self.sc.keyword("on")?;
        let (ring_idx, ring, _) = self.ring_ref()?;
        let mut options = CheckOptions::new();
        loop {
            self.sc.skip_space();
            if matches!(self.sc.peek(), Some(';') | None) {
                break;
            }
            let (kpos, key) = self.sc.ident()?;
            if !CHECK_OPTIONS.contains(&key.as_str()) {
                return self.sc.error(kpos, format!("unknown option `{key}`"));
            }
            self.sc.expect('=')?;
            let (vpos, value) = self.sc.word(&['-', '.', ','])?;
            if key == "ideals" {
                for ideal in value.split(',') {
                    match self.session.symbols.get(ideal) {
                        Some(Symbol::Ideal(r)) if *r == ring_idx => {}
                        Some(Symbol::Ideal(_)) => return self.sc.error(vpos, format!("ideal {ideal} is not in ring {ring}")),
                        _ => return self.sc.error(vpos, format!("unknown ideal {ideal}")),
                    }
                }
            }
            if options.insert(key.clone(), value).is_some() {
                return self.sc.error(kpos, format!("option `{key}` given twice"));
            }
        }
        Ok(Statement::Check { id, ring, options })
    }

    /// Resolves a name or `R/I` and reports its ring statement.
    fn arg(&mut self) -> Parsed<(Pos, Arg, Option<usize>)> {
        self.sc.skip_space();
        let pos = self.sc.pos();
        if self.sc.peek().is_some_and(|c| c == '-' || c.is_ascii_digit()) {
            let (_, n) = self.sc.integer()?;
            return Ok((pos, Arg::Int(n), None));
        }
        let (_, name) = self.sc.ident()?;
        let symbol = *self.session.symbols.get(&name).ok_or(Diagnostic { pos, message: format!("unknown identifier {name}") })?;
        if self.sc.eat('/') {
            let (ipos, ideal) = self.sc.ident()?;
            let ring_idx = match symbol {
                Symbol::Ring => self.rings[&name].0,
                _ => return self.sc.error(pos, format!("{name} is not a ring")),
            };
            return match self.session.symbols.get(&ideal) {
                Some(Symbol::Ideal(r)) if *r == ring_idx => Ok((pos, Arg::Quotient(name, ideal), Some(ring_idx))),
                Some(Symbol::Ideal(_)) => self.sc.error(ipos, format!("ideal {ideal} is not in ring {name}")),
                Some(_) => self.sc.error(ipos, format!("{ideal} is not an ideal")),
                None => self.sc.error(ipos, format!("unknown identifier {ideal}")),
            };
        }
        Ok(match symbol {
            Symbol::Ring => {
                let idx = self.rings[&name].0;
                (pos, Arg::Ring(name), Some(idx))
            }
            Symbol::Ideal(r) => (pos, Arg::Ideal(name), Some(r)),
            Symbol::Module(r) => (pos, Arg::Module(name), Some(r)),
        })
    }

    fn op_statement(&mut self, pos: Pos, name: &str) -> Parsed<Statement> {
        let op = Op::parse(name).ok_or(Diagnostic { pos, message: format!("unknown operation `{name}`") })?;
        self.sc.expect('(')?;
        let mut args = Vec::new();
        if !self.sc.eat(')') {
            loop {
                args.push(self.arg()?);
                if self.sc.eat(',') {
                    continue;
                }
                self.sc.expect(')')?;
                break;
            }
        }
        let fits = |sig: &[Kind]| {
            sig.len() == args.len()
                && sig.iter().zip(&args).all(|(k, (_, a, _))| match (k, a) {
                    (Kind::Int, Arg::Int(_)) => true,
                    (Kind::Ideal, Arg::Ideal(_)) => true,
                    (Kind::Ring, Arg::Ring(_)) => true,
                    (Kind::ModuleLike, a) => !matches!(a, Arg::Int(_)),
                    _ => false,
                })
        };
        if !op.signatures().iter().any(|s| fits(s)) {
            let expected: Vec<String> = op
                .signatures()
                .iter()
                .map(|s| {
                    let parts: Vec<&str> = s
                        .iter()
                        .map(|k| match k {
                            Kind::Int => "integer",
                            Kind::Ideal => "ideal",
                            Kind::Ring => "ring",
                            Kind::ModuleLike => "module",
                        })
                        .collect();
                    format!("{name}({})", parts.join(", "))
                })
                .collect();
            return self.sc.error(pos, format!("arity mismatch: expected {}", expected.join(" or ")));
        }
        let mut rings = args.iter().filter_map(|(p, _, r)| r.map(|r| (*p, r)));
        if let Some((_, first)) = rings.next() {
            if let Some((p, _)) = rings.find(|(_, r)| *r != first) {
                return self.sc.error(p, "arguments live over different rings");
            }
        }
        Ok(Statement::Op { op, args: args.into_iter().map(|(_, a, _)| a).collect() })
    }

    fn statement(&mut self) -> Parsed<Located> {
        self.sc.skip_space();
        let start = self.sc.offset;
        let pos = self.sc.pos();
        let (_, word) = self.sc.ident()?;
        let statement = match word.as_str() {
            "ring" => self.ring_statement()?,
            "ideal" => self.ideal_statement()?,
            "module" => self.module_statement()?,
            "check" => self.check_statement()?,
            _ => self.op_statement(pos, &word)?,
        };
        let text = self.sc.text_since(start);
        self.sc.expect(';')?;
        Ok(Located { pos, text, statement })
    }
}

/// Parses a whole session; the first problem is reported with its
/// position.
pub fn parse_session(source: &str) -> Result<Session, Diagnostic> {
    let mut p = Parser { sc: Scanner::new(source), session: Session::default(), rings: BTreeMap::new() };
    while !p.sc.at_end() {
        let s = p.statement()?;
        p.session.statements.push(s);
    }
    let _ = p.sc.source;
    Ok(p.session)
}
