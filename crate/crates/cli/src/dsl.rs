//! The group-construction language.
//!
//! ```text
//! expr   := term (("x" | "×") term)*
//! term   := "C(" n ")" | "D(" n ")" | "Q8" | "Q(" n ")" | "S(" n ")" | "A(" n ")"
//!         | "perm(" n (";" cycles)+ ")"
//!         | "sd(" expr "," expr "," "[" [line (";" line)*] "]" ")"
//!         | "table(" string ")" | "@" name | "(" expr ")"
//! cycles := "(" point* ")"+
//! line   := "g" k ":" index*
//! ```
//!
//! Permutation points are 0-based. Action line `gk` gives the image of every
//! element index of `N` under the k-th declared generator of `H`; missing
//! lines mean that generator acts trivially. `#` starts a comment.

use std::fmt;
use std::path::{Path, PathBuf};

use sigmanil::{Action, Group, Limits};

use crate::cayley;
use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ast {
    Cyclic(usize),
    Dihedral(usize),
    Quaternion8,
    Quaternion(usize),
    Sym(usize),
    Alt(usize),
    Direct(Box<Ast>, Box<Ast>),
    Semidirect {
        normal: Box<Ast>,
        acting: Box<Ast>,
        action: Vec<(usize, Vec<usize>)>,
    },
    /// Degree and, per generator, its cycles.
    Perm {
        degree: usize,
        generators: Vec<Vec<Vec<usize>>>,
    },
    Table(String),
    Fixture(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for SyntaxError {}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

type PResult<T> = Result<T, SyntaxError>;

impl Parser {
    fn new(src: &str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> PResult<T> {
        let (mut line, mut column) = (1, 1);
        for &c in &self.chars[..self.pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        Err(SyntaxError {
            line,
            column,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.get(self.pos) {
            if c == '#' {
                while self.chars.get(self.pos).is_some_and(|&c| c != '\n') {
                    self.pos += 1;
                }
            } else if c.is_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(d) => self.error(format!("expected '{c}', found '{d}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn ident(&mut self) -> PResult<String> {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_' || *c == '-')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an identifier");
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn number(&mut self) -> PResult<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a number");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        match s.parse() {
            Ok(n) => Ok(n),
            Err(_) => {
                self.pos = start;
                self.error("number out of range")
            }
        }
    }

    fn string(&mut self) -> PResult<String> {
        self.expect('"')?;
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|&c| c != '"' && c != '\n') {
            self.pos += 1;
        }
        let s = self.chars[start..self.pos].iter().collect();
        if self.chars.get(self.pos) != Some(&'"') {
            return self.error("unterminated string");
        }
        self.pos += 1;
        Ok(s)
    }

    fn expr(&mut self) -> PResult<Ast> {
        let mut left = self.term()?;
        while matches!(self.peek(), Some('x' | '×')) {
            self.pos += 1;
            let right = self.term()?;
            left = Ast::Direct(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn paren_number(&mut self) -> PResult<usize> {
        self.expect('(')?;
        let n = self.number()?;
        self.expect(')')?;
        Ok(n)
    }

    fn term(&mut self) -> PResult<Ast> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                return Ok(e);
            }
            Some('@') => {
                self.pos += 1;
                return Ok(Ast::Fixture(self.ident()?));
            }
            None => return self.error("expected a group expression, found end of input"),
            _ => {}
        }
        let start = self.pos;
        let word = self.ident()?;
        let ast = match word.as_str() {
            "C" => Ast::Cyclic(self.paren_number()?),
            "D" => Ast::Dihedral(self.paren_number()?),
            "Q8" => Ast::Quaternion8,
            "Q" => Ast::Quaternion(self.paren_number()?),
            "S" => Ast::Sym(self.paren_number()?),
            "A" => Ast::Alt(self.paren_number()?),
            "perm" => self.perm()?,
            "sd" => self.semidirect()?,
            "table" => {
                self.expect('(')?;
                let path = self.string()?;
                self.expect(')')?;
                Ast::Table(path)
            }
            _ => {
                self.pos = start;
                self.skip_ws();
                return self.error(format!("unknown construction '{word}'"));
            }
        };
        Ok(ast)
    }

    fn perm(&mut self) -> PResult<Ast> {
        self.expect('(')?;
        let degree = self.number()?;
        let mut generators = Vec::new();
        while self.eat(';') {
            let mut cycles = Vec::new();
            while self.peek() == Some('(') {
                self.pos += 1;
                let mut cycle = Vec::new();
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    cycle.push(self.number()?);
                }
                self.expect(')')?;
                if !cycle.is_empty() {
                    cycles.push(cycle);
                }
            }
            generators.push(cycles);
        }
        if generators.is_empty() {
            self.skip_ws();
            return self.error("perm needs at least one generator");
        }
        self.expect(')')?;
        Ok(Ast::Perm { degree, generators })
    }

    fn semidirect(&mut self) -> PResult<Ast> {
        self.expect('(')?;
        let normal = self.expr()?;
        self.expect(',')?;
        let acting = self.expr()?;
        self.expect(',')?;
        self.expect('[')?;
        let mut action: Vec<(usize, Vec<usize>)> = Vec::new();
        if self.peek() != Some(']') {
            loop {
                let at = self.pos;
                let name = self.ident()?;
                let k = name
                    .strip_prefix('g')
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&k| k >= 1);
                let Some(k) = k else {
                    self.pos = at;
                    self.skip_ws();
                    return self.error(format!("expected a generator name g1, g2, …, found '{name}'"));
                };
                if action.iter().any(|(j, _)| *j == k) {
                    self.pos = at;
                    self.skip_ws();
                    return self.error(format!("generator g{k} given twice"));
                }
                self.expect(':')?;
                let mut images = Vec::new();
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    images.push(self.number()?);
                }
                action.push((k, images));
                if !self.eat(';') {
                    break;
                }
            }
        }
        self.expect(']')?;
        self.expect(')')?;
        Ok(Ast::Semidirect {
            normal: Box::new(normal),
            acting: Box::new(acting),
            action,
        })
    }
}

/// Parses one expression; trailing input other than comments is an error.
pub fn parse(src: &str) -> Result<Ast, SyntaxError> {
    let mut p = Parser::new(src);
    let ast = p.expr()?;
    if let Some(c) = p.peek() {
        return p.error(format!("unexpected '{c}' after expression"));
    }
    Ok(ast)
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Canonical text form; parsing it gives back the same tree.
impl fmt::Display for Ast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ast::Cyclic(n) => write!(f, "C({n})"),
            Ast::Dihedral(n) => write!(f, "D({n})"),
            Ast::Quaternion8 => write!(f, "Q8"),
            Ast::Quaternion(n) => write!(f, "Q({n})"),
            Ast::Sym(n) => write!(f, "S({n})"),
            Ast::Alt(n) => write!(f, "A({n})"),
            Ast::Direct(l, r) => {
                write!(f, "{l} x ")?;
                if matches!(**r, Ast::Direct(..)) {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
            Ast::Semidirect { normal, acting, action } => {
                write!(f, "sd({normal}, {acting}, [")?;
                for (i, (k, images)) in action.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    write!(f, "g{k}: ")?;
                    write_list(f, images)?;
                }
                write!(f, "])")
            }
            Ast::Perm { degree, generators } => {
                write!(f, "perm({degree}")?;
                for cycles in generators {
                    write!(f, "; ")?;
                    if cycles.is_empty() {
                        write!(f, "()")?;
                    }
                    for c in cycles {
                        write!(f, "(")?;
                        write_list(f, c)?;
                        write!(f, ")")?;
                    }
                }
                write!(f, ")")
            }
            Ast::Table(path) => write!(f, "table(\"{path}\")"),
            Ast::Fixture(name) => write!(f, "@{name}"),
        }
    }
}

/// Resolves `table(…)` paths and `@name` references relative to `base`.
pub struct Elaborator<'a> {
    pub base: PathBuf,
    pub limits: &'a Limits,
    depth: usize,
}

const MAX_FIXTURE_DEPTH: usize = 16;

impl<'a> Elaborator<'a> {
    pub fn new(base: impl Into<PathBuf>, limits: &'a Limits) -> Self {
        Elaborator {
            base: base.into(),
            limits,
            depth: 0,
        }
    }

    pub fn build(&mut self, ast: &Ast) -> Result<Group, CliError> {
        let semantic = |m: String| Err(CliError::Semantic(m));
        let group = match ast {
            Ast::Cyclic(n) => {
                if *n == 0 {
                    return semantic("C(n) needs n ≥ 1".into());
                }
                self.limits.check_order(*n)?;
                Group::cyclic(*n)
            }
            Ast::Dihedral(n) => {
                if *n < 4 || n % 2 != 0 {
                    return semantic(format!("D({n}): order must be even and at least 4"));
                }
                self.limits.check_order(*n)?;
                Group::dihedral(*n)?
            }
            Ast::Quaternion8 => Group::quaternion(8)?,
            Ast::Quaternion(n) => {
                if *n < 8 || !n.is_power_of_two() {
                    return semantic(format!("Q({n}): order must be a power of two, at least 8"));
                }
                self.limits.check_order(*n)?;
                Group::quaternion(*n)?
            }
            Ast::Sym(n) => {
                if *n == 0 {
                    return semantic("S(n) needs n ≥ 1".into());
                }
                Group::symmetric(*n, self.limits)?
            }
            Ast::Alt(n) => {
                if *n == 0 {
                    return semantic("A(n) needs n ≥ 1".into());
                }
                Group::alternating(*n, self.limits)?
            }
            Ast::Direct(l, r) => {
                let (a, b) = (self.build(l)?, self.build(r)?);
                Group::direct_product(&a, &b, self.limits)?
            }
            Ast::Semidirect { normal, acting, action } => {
                let n = self.build(normal)?;
                let h = self.build(acting)?;
                let mut maps = Vec::new();
                for (k, images) in action {
                    let Some(&hg) = h.generators().get(k - 1) else {
                        return semantic(format!(
                            "g{k}: the acting group has {} generators",
                            h.generators().len()
                        ));
                    };
                    if images.len() != n.order() {
                        return semantic(format!(
                            "g{k}: {} images given, the normal factor has {} elements",
                            images.len(),
                            n.order()
                        ));
                    }
                    let mut seen = vec![false; n.order()];
                    for &x in images {
                        if x >= n.order() || std::mem::replace(&mut seen[x], true) {
                            return semantic(format!("g{k}: not a permutation of 0..{}", n.order()));
                        }
                    }
                    maps.push((hg, images.clone()));
                }
                for (i, &hg) in h.generators().iter().enumerate() {
                    if !action.iter().any(|(k, _)| *k == i + 1) {
                        maps.push((hg, (0..n.order()).collect()));
                    }
                }
                Group::semidirect_product(&n, &h, &Action { generator_maps: maps }, self.limits)?
            }
            Ast::Perm { degree, generators } => {
                let mut perms = Vec::new();
                for cycles in generators {
                    let mut img: Vec<usize> = (0..*degree).collect();
                    let mut used = vec![false; *degree];
                    for c in cycles {
                        for (i, &x) in c.iter().enumerate() {
                            if x >= *degree || std::mem::replace(&mut used[x], true) {
                                return semantic(format!("perm: point {x} out of range or repeated"));
                            }
                            img[x] = c[(i + 1) % c.len()];
                        }
                    }
                    perms.push(img);
                }
                Group::from_permutations(*degree, &perms, self.limits)?
            }
            Ast::Table(path) => cayley::read(&self.base.join(path))?,
            Ast::Fixture(name) => {
                if self.depth >= MAX_FIXTURE_DEPTH {
                    return semantic(format!("@{name}: fixture references nest too deeply"));
                }
                let path = self.base.join(format!("{name}.gdsl"));
                let text = std::fs::read_to_string(&path).map_err(|e| CliError::Io(path.clone(), e))?;
                let sub = parse(&text).map_err(|e| CliError::Syntax(path.clone(), e))?;
                self.depth += 1;
                let g = self.build(&sub);
                self.depth -= 1;
                g?
            }
        };
        Ok(group)
    }
}

/// Reads a `.gdsl` or `.cayley` file into a group named after the file stem.
pub fn load_group(path: &Path, limits: &Limits) -> Result<Group, CliError> {
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    if path.extension().is_some_and(|e| e == "cayley") {
        return Ok(cayley::read(path)?.with_name(name));
    }
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    let ast = parse(&text).map_err(|e| CliError::Syntax(path.to_path_buf(), e))?;
    let base = path.parent().unwrap_or(Path::new("."));
    Ok(Elaborator::new(base, limits).build(&ast)?.with_name(name))
}
