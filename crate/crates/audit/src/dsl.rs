//! Ring, ideal and set expressions.
//!
//! ```text
//! ring   := post ("x" post)*
//! post   := atom ("/" ideal)*
//! atom   := "Zn" INT | "bool" INT | "Z" | "qpoly" INT | "(" ring ")"
//!         | "trivext(" ring "," module ")"
//!         | "amalg(" ring "," ring "," map "," ideal ")"
//! module := ring | ring "/" ideal | ideal
//! map    := "[" elem,* "]"            images of 0, 1, 2, .. of the source
//! ideal  := "(" elem,* ")"
//! elem   := INT | "-" INT | "(" elem "," elem,* ")" | "[" elem "]"
//! set    := base ("x" base)?
//! base   := "<" elem,* ">" | "complement" ideal | "units" | "reg"
//! ```

use std::fmt;
use std::sync::Arc;

use smul_core::ideal::Ideal;
use smul_core::ring::{ElemValue, RingModule};
use smul_core::zint::{IntMulSet, PairMulSet};
use smul_core::{EffectiveRing, FiniteRing, MultiplicativeSet, RingHom};

/// Elaboration refuses finite rings past this many elements.
pub const MAX_RING_SIZE: usize = 1 << 16;

/// Bound on integer literals used as generators.
pub const MAX_LITERAL: i64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    /// 1-based character column, when the problem has a position.
    pub column: Option<usize>,
    pub message: String,
    /// The text the column points into, once known.
    pub input: Option<String>,
}

impl Diagnostic {
    fn at(column: usize, message: impl Into<String>) -> Self {
        Self { column: Some(column), message: message.into(), input: None }
    }

    pub fn semantic(message: impl Into<String>) -> Self {
        Self { column: None, message: message.into(), input: None }
    }

    pub fn with_input(mut self, input: &str) -> Self {
        self.input = Some(input.to_string());
        self
    }

    /// The message, with the input and a caret under the column when both are known.
    pub fn render(&self) -> String {
        match (self.column, &self.input) {
            (Some(c), Some(src)) => format!("{src}\n{}^\n{self}", " ".repeat(c - 1)),
            _ => self.to_string(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.column {
            Some(c) => write!(f, "column {c}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for Diagnostic {}

impl From<smul_core::AlgebraError> for Diagnostic {
    fn from(e: smul_core::AlgebraError) -> Self {
        Self::semantic(e.to_string())
    }
}

type PResult<T> = Result<T, Diagnostic>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    Zn(u64),
    Bool(u32),
    Z,
    QPoly(u32),
    Product(Box<RingExpr>, Box<RingExpr>),
    Quotient(Box<RingExpr>, Vec<ElemValue>),
    TrivExt(Box<RingExpr>, ModuleExpr),
    Amalg { a: Box<RingExpr>, b: Box<RingExpr>, map: Vec<ElemValue>, ideal: Vec<ElemValue> },
}

/// A module over the first argument of `trivext`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleExpr {
    /// The ring as a module over itself.
    Regular,
    /// `R / I`.
    Quotient(Vec<ElemValue>),
    /// The ideal `I` as a submodule of `R`.
    Ideal(Vec<ElemValue>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetExpr {
    Gens(Vec<ElemValue>),
    Complement(Vec<ElemValue>),
    Units,
    Reg,
    Product(Box<SetExpr>, Box<SetExpr>),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Word(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "'{n}'"),
            Tok::Word(w) => write!(f, "'{w}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> PResult<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s.parse::<i64>().map_err(|_| Diagnostic::at(col, format!("integer {s} is too large")))?;
            out.push((Tok::Int(n), col));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphabetic() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Word(chars[start..i].iter().collect()), col));
        } else if "()[]<>,/-".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(Diagnostic::at(col, format!("unexpected character '{c}'")));
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> PResult<Self> {
        Ok(Self { toks: lex(text)?, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> Diagnostic {
        Diagnostic::at(self.column(), format!("expected {expected}, found {}", self.peek()))
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char, what: &str) -> PResult<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.error(what))
        }
    }

    fn eat_word(&mut self, w: &str) -> bool {
        if matches!(self.peek(), Tok::Word(x) if x == w) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect_end(&self) -> PResult<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }

    fn int(&mut self, what: &str) -> PResult<i64> {
        match *self.peek() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.error(what)),
        }
    }

    fn ring(&mut self) -> PResult<RingExpr> {
        let mut left = self.post()?;
        while self.eat_word("x") {
            let right = self.post()?;
            left = RingExpr::Product(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn post(&mut self) -> PResult<RingExpr> {
        let mut base = self.atom()?;
        while self.eat_sym('/') {
            let gens = self.ideal()?;
            base = RingExpr::Quotient(Box::new(base), gens);
        }
        Ok(base)
    }

    fn atom(&mut self) -> PResult<RingExpr> {
        let col = self.column();
        match self.peek().clone() {
            Tok::Sym('(') => {
                self.bump();
                let r = self.ring()?;
                self.expect_sym(')', "')'")?;
                Ok(r)
            }
            Tok::Word(w) => {
                self.bump();
                match w.as_str() {
                    "Zn" => {
                        let n = self.int("the modulus after 'Zn'")?;
                        if n < 2 {
                            return Err(Diagnostic::at(col, "Zn needs a modulus of at least 2"));
                        }
                        Ok(RingExpr::Zn(n as u64))
                    }
                    "bool" => {
                        let k = self.int("the rank after 'bool'")?;
                        if !(1..=16).contains(&k) {
                            return Err(Diagnostic::at(col, "bool needs a rank between 1 and 16"));
                        }
                        Ok(RingExpr::Bool(k as u32))
                    }
                    "Z" => Ok(RingExpr::Z),
                    "qpoly" => {
                        let n = self.int("the index bound after 'qpoly'")?;
                        if !(1..=64).contains(&n) {
                            return Err(Diagnostic::at(col, "qpoly needs an index bound between 1 and 64"));
                        }
                        Ok(RingExpr::QPoly(n as u32))
                    }
                    "trivext" => {
                        self.expect_sym('(', "'(' after 'trivext'")?;
                        let r = self.ring()?;
                        self.expect_sym(',', "',' before the module")?;
                        let m = self.module(&r)?;
                        self.expect_sym(')', "')' closing 'trivext'")?;
                        Ok(RingExpr::TrivExt(Box::new(r), m))
                    }
                    "amalg" => {
                        self.expect_sym('(', "'(' after 'amalg'")?;
                        let a = self.ring()?;
                        self.expect_sym(',', "','")?;
                        let b = self.ring()?;
                        self.expect_sym(',', "','")?;
                        self.expect_sym('[', "'[' starting the map")?;
                        let map = self.elem_list(']')?;
                        self.expect_sym(',', "','")?;
                        let ideal = self.ideal()?;
                        self.expect_sym(')', "')' closing 'amalg'")?;
                        Ok(RingExpr::Amalg { a: Box::new(a), b: Box::new(b), map, ideal })
                    }
                    other => Err(Diagnostic::at(col, format!("unknown ring constructor '{other}'"))),
                }
            }
            _ => Err(self.error("a ring")),
        }
    }

    /// `(` followed by element syntax rather than a parenthesized ring.
    fn at_ideal_literal(&self) -> bool {
        let mut k = 0;
        while *self.peek_at(k) == Tok::Sym('(') {
            k += 1;
        }
        k > 0 && matches!(self.peek_at(k), Tok::Int(_) | Tok::Sym('-') | Tok::Sym('[') | Tok::Sym(')'))
    }

    fn module(&mut self, ring: &RingExpr) -> PResult<ModuleExpr> {
        if self.at_ideal_literal() {
            return Ok(ModuleExpr::Ideal(self.ideal()?));
        }
        let col = self.column();
        let m = self.ring()?;
        if m == *ring {
            return Ok(ModuleExpr::Regular);
        }
        match m {
            RingExpr::Quotient(base, gens) if *base == *ring => Ok(ModuleExpr::Quotient(gens)),
            _ => Err(Diagnostic::at(col, format!("the module must be over {}", print_ring(ring)))),
        }
    }

    fn ideal(&mut self) -> PResult<Vec<ElemValue>> {
        self.expect_sym('(', "'(' to start an ideal")?;
        self.elem_list(')')
    }

    fn elem_list(&mut self, close: char) -> PResult<Vec<ElemValue>> {
        let mut out = Vec::new();
        if self.eat_sym(close) {
            return Ok(out);
        }
        loop {
            out.push(self.elem()?);
            if self.eat_sym(close) {
                return Ok(out);
            }
            self.expect_sym(',', &format!("',' or '{close}'"))?;
        }
    }

    fn elem(&mut self) -> PResult<ElemValue> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(ElemValue::Int(n))
            }
            Tok::Sym('-') => {
                self.bump();
                Ok(ElemValue::Int(-self.int("an integer after '-'")?))
            }
            Tok::Sym('(') => {
                self.bump();
                let mut items = self.elem_list(')')?;
                match items.len() {
                    0 => Err(Diagnostic::at(self.toks[self.pos - 1].1, "empty tuple")),
                    1 => Ok(items.remove(0)),
                    _ => Ok(ElemValue::Tuple(items)),
                }
            }
            Tok::Sym('[') => {
                self.bump();
                let inner = self.elem()?;
                self.expect_sym(']', "']'")?;
                Ok(ElemValue::Class(Box::new(inner)))
            }
            _ => Err(self.error("an element")),
        }
    }

    fn set(&mut self) -> PResult<SetExpr> {
        let left = self.set_base()?;
        if self.eat_word("x") {
            let right = self.set_base()?;
            return Ok(SetExpr::Product(Box::new(left), Box::new(right)));
        }
        Ok(left)
    }

    fn set_base(&mut self) -> PResult<SetExpr> {
        if self.eat_sym('<') {
            return Ok(SetExpr::Gens(self.elem_list('>')?));
        }
        if self.eat_word("complement") {
            return Ok(SetExpr::Complement(self.ideal()?));
        }
        if self.eat_word("units") {
            return Ok(SetExpr::Units);
        }
        if self.eat_word("reg") {
            return Ok(SetExpr::Reg);
        }
        Err(self.error("a set: '<gens>', 'complement (gens)', 'units' or 'reg'"))
    }
}

pub fn parse_ring(text: &str) -> PResult<RingExpr> {
    let mut p = Parser::new(text)?;
    let r = p.ring()?;
    p.expect_end()?;
    Ok(r)
}

pub fn parse_set(text: &str) -> PResult<SetExpr> {
    let mut p = Parser::new(text)?;
    let s = p.set()?;
    p.expect_end()?;
    Ok(s)
}

pub fn parse_ideal(text: &str) -> PResult<Vec<ElemValue>> {
    let mut p = Parser::new(text)?;
    let i = p.ideal()?;
    p.expect_end()?;
    Ok(i)
}

fn print_gens(gens: &[ElemValue]) -> String {
    let items: Vec<String> = gens.iter().map(ElemValue::to_string).collect();
    format!("({})", items.join(", "))
}

pub fn print_ring(r: &RingExpr) -> String {
    match r {
        RingExpr::Zn(n) => format!("Zn {n}"),
        RingExpr::Bool(k) => format!("bool {k}"),
        RingExpr::Z => "Z".into(),
        RingExpr::QPoly(n) => format!("qpoly {n}"),
        RingExpr::Product(a, b) => {
            let right = match **b {
                RingExpr::Product(..) => format!("({})", print_ring(b)),
                _ => print_ring(b),
            };
            format!("{} x {right}", print_ring(a))
        }
        RingExpr::Quotient(base, gens) => {
            let b = match **base {
                RingExpr::Product(..) => format!("({})", print_ring(base)),
                _ => print_ring(base),
            };
            format!("{b} / {}", print_gens(gens))
        }
        RingExpr::TrivExt(base, m) => {
            let module = match m {
                ModuleExpr::Regular => print_ring(base),
                ModuleExpr::Quotient(gens) => print_ring(&RingExpr::Quotient(base.clone(), gens.clone())),
                ModuleExpr::Ideal(gens) => print_gens(gens),
            };
            format!("trivext({}, {module})", print_ring(base))
        }
        RingExpr::Amalg { a, b, map, ideal } => {
            let table: Vec<String> = map.iter().map(ElemValue::to_string).collect();
            format!("amalg({}, {}, [{}], {})", print_ring(a), print_ring(b), table.join(","), print_gens(ideal))
        }
    }
}

pub fn print_set(s: &SetExpr) -> String {
    match s {
        SetExpr::Gens(g) => {
            let items: Vec<String> = g.iter().map(ElemValue::to_string).collect();
            format!("<{}>", items.join(", "))
        }
        SetExpr::Complement(g) => format!("complement {}", print_gens(g)),
        SetExpr::Units => "units".into(),
        SetExpr::Reg => "reg".into(),
        SetExpr::Product(a, b) => format!("{} x {}", print_set(a), print_set(b)),
    }
}

fn finite_elems(ring: &FiniteRing, vals: &[ElemValue]) -> PResult<Vec<usize>> {
    vals.iter().map(|v| ring.element(v).map_err(Diagnostic::from)).collect()
}

fn int_literal(v: &ElemValue) -> PResult<i64> {
    match v {
        ElemValue::Int(n) if n.abs() <= MAX_LITERAL => Ok(*n),
        ElemValue::Int(n) => Err(Diagnostic::semantic(format!("{n} exceeds the literal bound {MAX_LITERAL}"))),
        other => Err(Diagnostic::semantic(format!("{other} is not an integer"))),
    }
}

fn finite(r: &RingExpr) -> PResult<Arc<FiniteRing>> {
    match elaborate(r)? {
        EffectiveRing::Finite(f) => Ok(f),
        other => Err(Diagnostic::semantic(format!("{} is not finite here", other.describe()))),
    }
}

fn check_size(r: Arc<FiniteRing>) -> PResult<Arc<FiniteRing>> {
    if r.size() > MAX_RING_SIZE {
        Err(Diagnostic::semantic(format!("ring of size {} exceeds {MAX_RING_SIZE}", r.size())))
    } else {
        Ok(r)
    }
}

pub fn elaborate(r: &RingExpr) -> PResult<EffectiveRing> {
    Ok(match r {
        RingExpr::Zn(n) => {
            if *n as usize > MAX_RING_SIZE {
                return Err(Diagnostic::semantic(format!("Zn {n} exceeds {MAX_RING_SIZE} elements")));
            }
            EffectiveRing::Finite(FiniteRing::zn(*n)?)
        }
        RingExpr::Bool(k) => EffectiveRing::Finite(check_size(FiniteRing::boolean(*k)?)?),
        RingExpr::Z => EffectiveRing::Integers,
        RingExpr::QPoly(n) => EffectiveRing::QPoly { bound: *n },
        RingExpr::Product(a, b) => match (**a == RingExpr::Z, **b == RingExpr::Z) {
            (true, true) => EffectiveRing::IntegerPairs,
            (false, false) => {
                let (fa, fb) = (finite(a)?, finite(b)?);
                if fa.size().saturating_mul(fb.size()) > MAX_RING_SIZE {
                    return Err(Diagnostic::semantic(format!("product exceeds {MAX_RING_SIZE} elements")));
                }
                EffectiveRing::Finite(FiniteRing::product(fa, fb)?)
            }
            _ => return Err(Diagnostic::semantic("products involving Z are supported only as Z x Z")),
        },
        RingExpr::Quotient(base, gens) => {
            if **base == RingExpr::Z {
                let g = gens.iter().map(int_literal).collect::<PResult<Vec<i64>>>()?;
                let n = g.iter().fold(0i64, |acc, &x| num_gcd(acc, x));
                return match n {
                    0 => Ok(EffectiveRing::Integers),
                    1 => Err(Diagnostic::semantic("Z / (1) is the zero ring")),
                    n => elaborate(&RingExpr::Zn(n as u64)),
                };
            }
            let b = finite(base)?;
            let g = finite_elems(&b, gens)?;
            EffectiveRing::Finite(FiniteRing::quotient(b, &g)?)
        }
        RingExpr::TrivExt(base, m) => {
            let b = finite(base)?;
            let module = match m {
                ModuleExpr::Regular => RingModule::regular(b),
                ModuleExpr::Quotient(gens) => {
                    let g = finite_elems(&b, gens)?;
                    RingModule::quotient(b, &g)?
                }
                ModuleExpr::Ideal(gens) => {
                    let g = finite_elems(&b, gens)?;
                    RingModule::ideal(b, &g)?
                }
            };
            if module.ring().size().saturating_mul(module.size()) > MAX_RING_SIZE {
                return Err(Diagnostic::semantic(format!("trivial extension exceeds {MAX_RING_SIZE} elements")));
            }
            EffectiveRing::Finite(FiniteRing::trivial_extension(module)?)
        }
        RingExpr::Amalg { a, b, map, ideal } => {
            let (fa, fb) = (finite(a)?, finite(b)?);
            if map.len() != fa.size() {
                return Err(Diagnostic::semantic(format!(
                    "the map lists {} images but the source has {} elements",
                    map.len(),
                    fa.size()
                )));
            }
            let table = finite_elems(&fb, map)?;
            let j = finite_elems(&fb, ideal)?;
            let hom = RingHom::from_table(fa, fb, table)?;
            EffectiveRing::Finite(FiniteRing::amalgamation(hom, &j)?)
        }
    })
}

fn num_gcd(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}

/// A multiplicative set over one of the supported rings.
#[derive(Debug, Clone)]
pub enum ElabSet {
    Finite(MultiplicativeSet),
    Int(IntMulSet),
    IntPair(PairMulSet),
    /// `{(2^k)^n}` in the polynomial quotient.
    PowersOfTwo { k: u32 },
}

impl ElabSet {
    pub fn describe(&self) -> String {
        match self {
            ElabSet::Finite(s) => s.describe(),
            ElabSet::Int(s) => s.describe(),
            ElabSet::IntPair(s) => s.describe(),
            ElabSet::PowersOfTwo { k } => format!("<2^{k}>"),
        }
    }
}

fn int_set(s: &SetExpr) -> PResult<IntMulSet> {
    Ok(match s {
        SetExpr::Gens(g) => {
            let gens = g.iter().map(int_literal).collect::<PResult<Vec<i64>>>()?;
            IntMulSet::monoid(&gens, false)?
        }
        SetExpr::Complement(g) => match g.as_slice() {
            [v] => {
                let p = int_literal(v)?;
                if p == 0 {
                    IntMulSet::NonZero
                } else {
                    IntMulSet::prime_complement(p.unsigned_abs())?
                }
            }
            _ => return Err(Diagnostic::semantic("complement over Z takes a single prime generator")),
        },
        SetExpr::Units => IntMulSet::units(),
        SetExpr::Reg => IntMulSet::NonZero,
        SetExpr::Product(..) => return Err(Diagnostic::semantic("a product set needs the ring Z x Z")),
    })
}

pub fn elaborate_set(ring: &EffectiveRing, s: &SetExpr) -> PResult<ElabSet> {
    match ring {
        EffectiveRing::Finite(r) => Ok(ElabSet::Finite(match s {
            SetExpr::Gens(g) => MultiplicativeSet::close(r, &finite_elems(r, g)?)?,
            SetExpr::Complement(g) => MultiplicativeSet::from_prime_complement(&Ideal::span(r, &finite_elems(r, g)?)?)?,
            SetExpr::Units => MultiplicativeSet::units(r),
            SetExpr::Reg => MultiplicativeSet::regular(r),
            SetExpr::Product(..) => {
                return Err(Diagnostic::semantic("product sets are only supported over Z x Z; list generators instead"))
            }
        })),
        EffectiveRing::Integers => Ok(ElabSet::Int(int_set(s)?)),
        EffectiveRing::IntegerPairs => match s {
            SetExpr::Product(a, b) => Ok(ElabSet::IntPair(PairMulSet { left: int_set(a)?, right: int_set(b)? })),
            _ => Err(Diagnostic::semantic("sets over Z x Z are written as a product, e.g. 'reg x <1>'")),
        },
        EffectiveRing::QPoly { .. } => match s {
            SetExpr::Gens(g) if g.len() == 1 => {
                let v = int_literal(&g[0])?;
                if v > 1 && v & (v - 1) == 0 {
                    Ok(ElabSet::PowersOfTwo { k: v.trailing_zeros() })
                } else {
                    Err(Diagnostic::semantic("over qpoly only sets <2^k> are supported"))
                }
            }
            _ => Err(Diagnostic::semantic("over qpoly only sets <2^k> are supported")),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        assert_eq!(parse_ring("Zn 6").unwrap(), RingExpr::Zn(6));
        assert_eq!(
            parse_ring("Zn 4 x Zn 9").unwrap(),
            RingExpr::Product(Box::new(RingExpr::Zn(4)), Box::new(RingExpr::Zn(9)))
        );
        let d = parse_ring("Zn 4 /").unwrap_err();
        assert_eq!(d.column, Some(7));
    }

    #[test]
    fn modules_and_amalgams() {
        let t = parse_ring("trivext(Zn 4, Zn 4 / (2))").unwrap();
        assert_eq!(t, RingExpr::TrivExt(Box::new(RingExpr::Zn(4)), ModuleExpr::Quotient(vec![ElemValue::Int(2)])));
        assert_eq!(print_ring(&t), "trivext(Zn 4, Zn 4 / (2))");
        let i = parse_ring("trivext(Zn 2 x Zn 2, ((1,0)))").unwrap();
        assert!(matches!(i, RingExpr::TrivExt(_, ModuleExpr::Ideal(_))));
        assert!(parse_ring("trivext(Zn 4, Zn 6)").unwrap_err().column.is_some());
        let a = parse_ring("amalg(Zn 4, Zn 2, [0,1,0,1], (1))").unwrap();
        let EffectiveRing::Finite(r) = elaborate(&a).unwrap() else { panic!() };
        assert_eq!(r.size(), 8);
        assert_eq!(print_ring(&parse_ring(&r.describe()).unwrap()), r.describe());
    }

    #[test]
    fn describe_round_trips() {
        for text in ["Zn 12", "bool 3", "Zn 4 x Zn 9", "(Zn 2 x Zn 2) / ((1,0))", "trivext(Zn 3, Zn 3)", "Zn 2 x (Zn 2 x Zn 3)"] {
            let EffectiveRing::Finite(r) = elaborate(&parse_ring(text).unwrap()).unwrap() else { panic!() };
            let again = elaborate(&parse_ring(&r.describe()).unwrap()).unwrap();
            assert_eq!(again.describe(), r.describe(), "{text}");
        }
    }

    #[test]
    fn sets() {
        let z = elaborate(&RingExpr::Z).unwrap();
        assert!(matches!(elaborate_set(&z, &parse_set("complement (2)").unwrap()).unwrap(), ElabSet::Int(IntMulSet::PrimeComplement { p: 2 })));
        let zz = elaborate(&parse_ring("Z x Z").unwrap()).unwrap();
        assert!(matches!(elaborate_set(&zz, &parse_set("reg x <1>").unwrap()).unwrap(), ElabSet::IntPair(_)));
        let z6 = elaborate(&RingExpr::Zn(6)).unwrap();
        let ElabSet::Finite(s) = elaborate_set(&z6, &parse_set("<3>").unwrap()).unwrap() else { panic!() };
        assert_eq!(s.elements().to_vec(), vec![1, 3]);
        assert!(elaborate_set(&z6, &parse_set("<0>").unwrap()).is_err());
        assert_eq!(parse_set("<3").unwrap_err().column, Some(3));
    }
}
