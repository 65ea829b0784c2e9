use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use super::{Interpretation, Signature, SymbolId};
use crate::error::{Error, Result};

/// A term in which every variable occurs exactly once, left to right.
///
/// Leaves carry no index: the `i`-th leaf in reading order is the variable
/// `x_i`. A bare [`OrderlyTerm::Var`] is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderlyTerm {
    Var,
    Apply {
        symbol: SymbolId,
        children: Vec<OrderlyTerm>,
    },
}

impl OrderlyTerm {
    pub fn var() -> Self {
        OrderlyTerm::Var
    }

    /// `symbol(children..)`, checking the arity against `sig`.
    pub fn apply(sig: &Signature, symbol: SymbolId, children: Vec<OrderlyTerm>) -> Result<Self> {
        let arity = sig.arity(symbol)?;
        if arity != children.len() {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: children.len(),
            });
        }
        Ok(OrderlyTerm::Apply { symbol, children })
    }

    /// `symbol` applied to `arity` fresh variables.
    pub fn basic(sig: &Signature, symbol: SymbolId) -> Result<Self> {
        let arity = sig.arity(symbol)?;
        Ok(OrderlyTerm::Apply {
            symbol,
            children: vec![OrderlyTerm::Var; arity],
        })
    }

    /// Iterated unary composite; `word[0]` is applied first.
    pub fn from_word(sig: &Signature, word: &[SymbolId]) -> Result<Self> {
        word.iter().try_fold(OrderlyTerm::Var, |inner, &s| {
            OrderlyTerm::apply(sig, s, vec![inner])
        })
    }

    /// Number of leaves.
    pub fn width(&self) -> usize {
        match self {
            OrderlyTerm::Var => 1,
            OrderlyTerm::Apply { children, .. } => children.iter().map(|c| c.width()).sum(),
        }
    }

    /// Number of internal nodes.
    pub fn size(&self) -> usize {
        match self {
            OrderlyTerm::Var => 0,
            OrderlyTerm::Apply { children, .. } => {
                1 + children.iter().map(|c| c.size()).sum::<usize>()
            }
        }
    }

    /// Preorder token sequence: `0` for a leaf, `symbol + 1` for a node.
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.push_preorder(&mut out);
        out
    }

    fn push_preorder(&self, out: &mut Vec<usize>) {
        match self {
            OrderlyTerm::Var => out.push(0),
            OrderlyTerm::Apply { symbol, children } => {
                out.push(symbol + 1);
                for c in children {
                    c.push_preorder(out);
                }
            }
        }
    }

    /// Canonical order: width, then size, then preorder tokens.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        (self.width(), self.size())
            .cmp(&(other.width(), other.size()))
            .then_with(|| self.preorder().cmp(&other.preorder()))
    }

    /// Symbols along a unary chain, innermost first; `None` if some node is
    /// not unary.
    pub fn as_word(&self) -> Option<Vec<SymbolId>> {
        let mut word = Vec::new();
        let mut node = self;
        loop {
            match node {
                OrderlyTerm::Var => break,
                OrderlyTerm::Apply { symbol, children } if children.len() == 1 => {
                    word.push(*symbol);
                    node = &children[0];
                }
                OrderlyTerm::Apply { .. } => return None,
            }
        }
        word.reverse();
        Some(word)
    }

    pub fn validate(&self, sig: &Signature) -> Result<()> {
        match self {
            OrderlyTerm::Var => Ok(()),
            OrderlyTerm::Apply { symbol, children } => {
                let arity = sig.arity(*symbol)?;
                if arity != children.len() {
                    return Err(Error::ArityMismatch {
                        expected: arity,
                        found: children.len(),
                    });
                }
                children.iter().try_for_each(|c| c.validate(sig))
            }
        }
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> TermDisplay<'a> {
        TermDisplay { term: self, sig }
    }

    /// Parses `f(x0,g(x1,x2))`-style text. Variables must read `x0, x1, ..`
    /// from left to right.
    pub fn parse(sig: &Signature, text: &str) -> Result<Self> {
        let mut parser = TermParser {
            sig,
            bytes: text.as_bytes(),
            text,
            pos: 0,
            next_var: 0,
        };
        let term = parser.term()?;
        parser.skip_ws();
        if parser.pos != parser.bytes.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(term)
    }
}

pub struct TermDisplay<'a> {
    term: &'a OrderlyTerm,
    sig: &'a Signature,
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(
            t: &OrderlyTerm,
            sig: &Signature,
            next: &mut usize,
            f: &mut fmt::Formatter<'_>,
        ) -> fmt::Result {
            match t {
                OrderlyTerm::Var => {
                    write!(f, "x{next}")?;
                    *next += 1;
                    Ok(())
                }
                OrderlyTerm::Apply { symbol, children } => {
                    write!(f, "{}(", sig.name(*symbol))?;
                    for (i, c) in children.iter().enumerate() {
                        if i > 0 {
                            f.write_str(",")?;
                        }
                        go(c, sig, next, f)?;
                    }
                    f.write_str(")")
                }
            }
        }
        go(self.term, self.sig, &mut 0, f)
    }
}

struct TermParser<'a> {
    sig: &'a Signature,
    bytes: &'a [u8],
    text: &'a str,
    pos: usize,
    next_var: usize,
}

impl TermParser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::parse(1, self.pos + 1, message)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<OrderlyTerm> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && !self.bytes[self.pos].is_ascii_whitespace()
            && !matches!(self.bytes[self.pos], b'(' | b')' | b',')
        {
            self.pos += 1;
        }
        let token = &self.text[start..self.pos];
        if token.is_empty() {
            return Err(self.error("expected a term"));
        }
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&b'(') {
            let symbol = self
                .sig
                .lookup(token)
                .ok_or_else(|| Error::UnknownSymbol(token.to_string()))?;
            self.pos += 1;
            let mut children = vec![self.term()?];
            loop {
                self.skip_ws();
                match self.bytes.get(self.pos) {
                    Some(b',') => {
                        self.pos += 1;
                        children.push(self.term()?);
                    }
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.error("expected `,` or `)`")),
                }
            }
            OrderlyTerm::apply(self.sig, symbol, children)
        } else {
            let index: usize = token
                .strip_prefix('x')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| {
                    Error::parse(1, start + 1, format!("`{token}` is not a variable"))
                })?;
            if index != self.next_var {
                return Err(Error::parse(
                    1,
                    start + 1,
                    format!("expected variable x{}, found {token}", self.next_var),
                ));
            }
            self.next_var += 1;
            Ok(OrderlyTerm::Var)
        }
    }
}

/// Evaluates `term` on `args` in `alg`.
pub fn evaluate<A: Interpretation + ?Sized>(
    alg: &A,
    term: &OrderlyTerm,
    args: &[A::Value],
) -> Result<A::Value> {
    term.validate(alg.signature())?;
    let width = term.width();
    if args.len() != width {
        return Err(Error::ArityMismatch {
            expected: width,
            found: args.len(),
        });
    }
    if !args.iter().all(|a| alg.contains(a)) {
        return Err(Error::NotInCarrier);
    }
    Ok(eval_unchecked(alg, term, args))
}

/// Evaluation without validation; `term` must fit `alg` and `args`.
pub(crate) fn eval_unchecked<A: Interpretation + ?Sized>(
    alg: &A,
    term: &OrderlyTerm,
    args: &[A::Value],
) -> A::Value {
    fn go<A: Interpretation + ?Sized>(
        alg: &A,
        t: &OrderlyTerm,
        args: &[A::Value],
        next: &mut usize,
    ) -> A::Value {
        match t {
            OrderlyTerm::Var => {
                let v = args[*next].clone();
                *next += 1;
                v
            }
            OrderlyTerm::Apply { symbol, children } => {
                let values: Vec<A::Value> =
                    children.iter().map(|c| go(alg, c, args, next)).collect();
                alg.apply(*symbol, &values)
            }
        }
    }
    go(alg, term, args, &mut 0)
}

/// Memoized enumeration and counting of orderly terms over one signature.
#[derive(Debug)]
pub struct TermCatalog {
    sig: Signature,
    counts: HashMap<(usize, usize), u128>,
    forest_counts: HashMap<(usize, usize, usize), u128>,
    terms: HashMap<(usize, usize), Rc<Vec<OrderlyTerm>>>,
}

impl TermCatalog {
    pub fn new(sig: &Signature) -> Self {
        TermCatalog {
            sig: sig.clone(),
            counts: HashMap::new(),
            forest_counts: HashMap::new(),
            terms: HashMap::new(),
        }
    }

    /// Number of orderly terms with exactly `width` leaves and `size`
    /// internal nodes (saturating).
    pub fn count(&mut self, width: usize, size: usize) -> u128 {
        if width == 0 {
            return 0;
        }
        if size == 0 {
            return u128::from(width == 1);
        }
        if let Some(&c) = self.counts.get(&(width, size)) {
            return c;
        }
        let arities: Vec<usize> = self.sig.symbols().iter().map(|s| s.arity).collect();
        let mut total = 0u128;
        for k in arities {
            total = total.saturating_add(self.forest_count(k, width, size - 1));
        }
        self.counts.insert((width, size), total);
        total
    }

    // sequences of `k` terms with total width `width` and total size `size`
    fn forest_count(&mut self, k: usize, width: usize, size: usize) -> u128 {
        if k == 0 {
            return u128::from(width == 0 && size == 0);
        }
        if width < k {
            return 0;
        }
        if let Some(&c) = self.forest_counts.get(&(k, width, size)) {
            return c;
        }
        let mut total = 0u128;
        for w in 1..=width - (k - 1) {
            for s in 0..=size {
                let head = self.count(w, s);
                if head == 0 {
                    continue;
                }
                let tail = self.forest_count(k - 1, width - w, size - s);
                total = total.saturating_add(head.saturating_mul(tail));
            }
        }
        self.forest_counts.insert((k, width, size), total);
        total
    }

    /// Total number of terms with width `<= max_width` and size `<= max_size`.
    pub fn count_within(&mut self, max_width: usize, max_size: usize) -> u128 {
        let mut total = 0u128;
        for w in 1..=max_width {
            for s in 0..=max_size {
                total = total.saturating_add(self.count(w, s));
            }
        }
        total
    }

    /// All terms of exactly this width and size in canonical preorder order.
    pub fn terms(&mut self, width: usize, size: usize) -> Rc<Vec<OrderlyTerm>> {
        if let Some(t) = self.terms.get(&(width, size)) {
            return Rc::clone(t);
        }
        let mut out = Vec::new();
        if self.count(width, size) > 0 {
            if size == 0 {
                out.push(OrderlyTerm::Var);
            } else {
                let arities: Vec<(SymbolId, usize)> = self
                    .sig
                    .symbols()
                    .iter()
                    .enumerate()
                    .map(|(i, s)| (i, s.arity))
                    .collect();
                for (symbol, k) in arities {
                    for forest in self.forests(k, width, size - 1) {
                        out.push(OrderlyTerm::Apply {
                            symbol,
                            children: forest,
                        });
                    }
                }
            }
            out.sort_by_cached_key(|t| t.preorder());
        }
        let out = Rc::new(out);
        self.terms.insert((width, size), Rc::clone(&out));
        out
    }

    fn forests(&mut self, k: usize, width: usize, size: usize) -> Vec<Vec<OrderlyTerm>> {
        if k == 0 {
            return if width == 0 && size == 0 {
                vec![Vec::new()]
            } else {
                Vec::new()
            };
        }
        if self.forest_count(k, width, size) == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for w in 1..=width - (k - 1) {
            for s in 0..=size {
                if self.count(w, s) == 0 || self.forest_count(k - 1, width - w, size - s) == 0 {
                    continue;
                }
                let heads = self.terms(w, s);
                let tails = self.forests(k - 1, width - w, size - s);
                for head in heads.iter() {
                    for tail in &tails {
                        let mut forest = Vec::with_capacity(k);
                        forest.push(head.clone());
                        forest.extend(tail.iter().cloned());
                        out.push(forest);
                    }
                }
            }
        }
        out
    }

    /// All terms within the bounds, ordered by width, size, then preorder.
    pub fn enumerate(&mut self, max_width: usize, max_size: usize) -> Vec<OrderlyTerm> {
        let mut out = Vec::new();
        for w in 1..=max_width {
            for s in 0..=max_size {
                out.extend(self.terms(w, s).iter().cloned());
            }
        }
        out
    }
}

/// Every orderly term with width `<= max_width` and size `<= max_size`,
/// each exactly once, in canonical order.
pub fn enumerate_orderly_terms(
    sig: &Signature,
    max_width: usize,
    max_size: usize,
) -> Result<std::vec::IntoIter<OrderlyTerm>> {
    if max_width == 0 {
        return Err(Error::InvalidBound("max width must be at least 1".into()));
    }
    Ok(TermCatalog::new(sig)
        .enumerate(max_width, max_size)
        .into_iter())
}

/// Number of orderly terms of exactly the given width and size.
pub fn count_orderly_terms(sig: &Signature, width: usize, size: usize) -> u128 {
    TermCatalog::new(sig).count(width, size)
}
