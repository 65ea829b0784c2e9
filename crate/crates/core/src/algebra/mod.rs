//! Finite and rule-defined homogeneous algebras.
//!
//! A [`FiniteAlgebra`] stores one total table per operation symbol over the
//! universe `{0, .., n-1}`. Tables are laid out in lexicographic tuple order, so
//! the entry for `(a_0, .., a_{k-1})` lives at `a_0 * n^(k-1) + .. + a_{k-1}`.
//! A [`RuleAlgebra`] computes its operations on demand over the naturals (or
//! any other carrier type) and models the infinite examples.

mod closure;
mod rule;
mod set;
mod term;

use std::fmt;
use std::hash::Hash;

pub use closure::{
    closure, enumerate_subalgebras, fixed_points, idempotents, SubalgebraOptions,
    DEFAULT_SUBSET_LIMIT,
};
pub(crate) use closure::{ClosureBuilder, Origin};
pub use rule::{FixedPointHint, Rule, RuleAlgebra};
pub use set::ElementSet;
pub(crate) use term::eval_unchecked;
pub use term::{
    count_orderly_terms, enumerate_orderly_terms, evaluate, OrderlyTerm, TermCatalog, TermDisplay,
};

use crate::error::{Error, Result};

/// Elements of a finite universe and of the natural-number carrier.
pub type Element = usize;

/// Index of a symbol inside its [`Signature`].
pub type SymbolId = usize;

/// Largest table a [`FiniteAlgebra`] will allocate for a single symbol.
pub const MAX_TABLE_LEN: usize = 1 << 28;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Symbol {
    pub name: String,
    pub arity: usize,
}

/// An ordered list of operation symbols with their arities.
///
/// Names are unique tokens without whitespace, parentheses, commas or `#`, and
/// every arity is at least one.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Signature {
    symbols: Vec<Symbol>,
}

impl Signature {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = (S, usize)>) -> Result<Self> {
        let mut sig = Signature::default();
        for (name, arity) in symbols {
            sig.push(name, arity)?;
        }
        Ok(sig)
    }

    pub fn empty() -> Self {
        Signature::default()
    }

    pub fn push(&mut self, name: impl Into<String>, arity: usize) -> Result<SymbolId> {
        let name = name.into();
        if name.is_empty()
            || name
                .chars()
                .any(|c| c.is_whitespace() || matches!(c, '(' | ')' | ',' | '#'))
        {
            return Err(Error::InvalidSignature(format!(
                "`{name}` is not a valid symbol name"
            )));
        }
        if arity == 0 {
            return Err(Error::InvalidSignature(format!(
                "`{name}` has arity 0; constants are not supported"
            )));
        }
        if self.lookup(&name).is_some() {
            return Err(Error::InvalidSignature(format!(
                "duplicate symbol `{name}`"
            )));
        }
        self.symbols.push(Symbol { name, arity });
        Ok(self.symbols.len() - 1)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn symbol(&self, id: SymbolId) -> Result<&Symbol> {
        self.symbols.get(id).ok_or(Error::SymbolOutOfRange(id))
    }

    pub fn arity(&self, id: SymbolId) -> Result<usize> {
        self.symbol(id).map(|s| s.arity)
    }

    pub fn name(&self, id: SymbolId) -> &str {
        self.symbols.get(id).map_or("?", |s| s.name.as_str())
    }

    pub fn lookup(&self, name: &str) -> Option<SymbolId> {
        self.symbols.iter().position(|s| s.name == name)
    }

    /// True when every symbol is unary. The empty signature counts as unary.
    pub fn is_unary(&self) -> bool {
        self.symbols.iter().all(|s| s.arity == 1)
    }

    pub fn ensure_unary(&self) -> Result<()> {
        match self.symbols.iter().find(|s| s.arity != 1) {
            Some(s) => Err(Error::NotUnary(s.name.clone())),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .symbols
            .iter()
            .map(|s| format!("{}/{}", s.name, s.arity))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Anything that interprets a [`Signature`] over some carrier.
pub trait Interpretation {
    type Value: Clone + Eq + Hash + Ord + fmt::Debug;

    fn signature(&self) -> &Signature;

    fn contains(&self, value: &Self::Value) -> bool;

    /// Applies `symbol` to `args`. Callers guarantee that `args` has the
    /// symbol's arity and lies in the carrier.
    fn apply(&self, symbol: SymbolId, args: &[Self::Value]) -> Self::Value;

    /// Checked variant of [`Interpretation::apply`].
    fn try_apply(&self, symbol: SymbolId, args: &[Self::Value]) -> Result<Self::Value> {
        let arity = self.signature().arity(symbol)?;
        if args.len() != arity {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: args.len(),
            });
        }
        if !args.iter().all(|a| self.contains(a)) {
            return Err(Error::NotInCarrier);
        }
        Ok(self.apply(symbol, args))
    }
}

/// A homogeneous algebra over `{0, .., size-1}` given by total operation tables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    name: String,
    signature: Signature,
    size: usize,
    tables: Vec<Vec<Element>>,
}

/// Number of entries in a table of the given arity, if within [`MAX_TABLE_LEN`].
pub(crate) fn table_len(size: usize, arity: usize) -> Result<usize> {
    u32::try_from(arity)
        .ok()
        .and_then(|k| size.checked_pow(k))
        .filter(|&len| len <= MAX_TABLE_LEN)
        .ok_or(Error::GuardExceeded {
            what: "operation table length",
            required: (size as u128).saturating_pow(arity.min(u32::MAX as usize) as u32),
            limit: MAX_TABLE_LEN as u128,
        })
}

impl FiniteAlgebra {
    pub fn new(
        name: impl Into<String>,
        signature: Signature,
        size: usize,
        tables: Vec<Vec<Element>>,
    ) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyUniverse);
        }
        if tables.len() != signature.len() {
            return Err(Error::InvalidSignature(format!(
                "{} symbols but {} tables",
                signature.len(),
                tables.len()
            )));
        }
        for (symbol, table) in signature.symbols().iter().zip(&tables) {
            let expected = table_len(size, symbol.arity)?;
            if table.len() != expected {
                return Err(Error::TableLength {
                    symbol: symbol.name.clone(),
                    expected,
                    found: table.len(),
                });
            }
            if let Some(&bad) = table.iter().find(|&&v| v >= size) {
                return Err(Error::ElementOutOfRange { element: bad, size });
            }
        }
        Ok(FiniteAlgebra {
            name: name.into(),
            signature,
            size,
            tables,
        })
    }

    /// Builds the tables by calling `op(symbol, tuple)` on every tuple in
    /// lexicographic order.
    pub fn from_fn(
        name: impl Into<String>,
        signature: Signature,
        size: usize,
        mut op: impl FnMut(SymbolId, &[Element]) -> Element,
    ) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyUniverse);
        }
        let mut tables = Vec::with_capacity(signature.len());
        for (id, symbol) in signature.symbols().iter().enumerate() {
            let mut table = Vec::with_capacity(table_len(size, symbol.arity)?);
            for_each_tuple(size, symbol.arity, |t| table.push(op(id, t)));
            tables.push(table);
        }
        FiniteAlgebra::new(name, signature, size, tables)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn table(&self, symbol: SymbolId) -> &[Element] {
        &self.tables[symbol]
    }

    pub fn tables(&self) -> &[Vec<Element>] {
        &self.tables
    }

    /// Callers must keep every entry below `size`.
    pub(crate) fn tables_mut(&mut self) -> &mut [Vec<Element>] {
        &mut self.tables
    }

    pub fn universe(&self) -> ElementSet {
        ElementSet::full(self.size)
    }

    pub fn is_unary(&self) -> bool {
        self.signature.is_unary()
    }

    /// Position of `args` in a table of this algebra.
    #[inline]
    pub fn index_of(&self, args: &[Element]) -> usize {
        args.iter().fold(0, |acc, &a| acc * self.size + a)
    }

    #[inline]
    pub fn value(&self, symbol: SymbolId, args: &[Element]) -> Element {
        self.tables[symbol][self.index_of(args)]
    }

    /// `f(a, a, .., a)` for the symbol `f`.
    pub fn diagonal(&self, symbol: SymbolId, a: Element) -> Element {
        let arity = self.signature.symbols[symbol].arity;
        let index = (0..arity).fold(0, |acc, _| acc * self.size + a);
        self.tables[symbol][index]
    }

    pub fn is_idempotent(&self, a: Element) -> bool {
        (0..self.signature.len()).all(|f| self.diagonal(f, a) == a)
    }

    pub fn check_element(&self, a: Element) -> Result<()> {
        if a < self.size {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: a,
                size: self.size,
            })
        }
    }

    pub fn check_set(&self, set: &ElementSet) -> Result<()> {
        set.iter().try_for_each(|&a| self.check_element(a))
    }

    pub fn same_signature(&self, other: &FiniteAlgebra) -> Result<()> {
        if self.signature == other.signature {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }

    /// The isomorphic copy obtained by renaming every element `a` to `perm[a]`.
    pub fn permuted(&self, perm: &[Element]) -> Result<FiniteAlgebra> {
        if perm.len() != self.size {
            return Err(Error::InvalidMap(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.size
            )));
        }
        let mut inverse = vec![usize::MAX; self.size];
        for (a, &b) in perm.iter().enumerate() {
            self.check_element(b)?;
            if inverse[b] != usize::MAX {
                return Err(Error::InvalidMap(format!("{b} is hit twice")));
            }
            inverse[b] = a;
        }
        let mut source = Vec::new();
        FiniteAlgebra::from_fn(
            self.name.clone(),
            self.signature.clone(),
            self.size,
            |f, t| {
                source.clear();
                source.extend(t.iter().map(|&b| inverse[b]));
                perm[self.value(f, &source)]
            },
        )
    }

    /// The subalgebra on a nonempty closed subset, relabelled to
    /// `{0, .., k-1}` in increasing order. Returns the algebra and the
    /// embedding `new -> old`.
    pub fn restrict(&self, subset: &ElementSet) -> Result<(FiniteAlgebra, Vec<Element>)> {
        self.check_set(subset)?;
        if subset.is_empty() {
            return Err(Error::InvalidSubset(
                "cannot restrict to the empty set".into(),
            ));
        }
        let embedding: Vec<Element> = subset.iter().copied().collect();
        let mut relabel = vec![usize::MAX; self.size];
        for (new, &old) in embedding.iter().enumerate() {
            relabel[old] = new;
        }
        let mut source = Vec::new();
        let mut escaped = None;
        let alg = FiniteAlgebra::from_fn(
            format!("{}|sub", self.name),
            self.signature.clone(),
            embedding.len(),
            |f, t| {
                source.clear();
                source.extend(t.iter().map(|&i| embedding[i]));
                let v = self.value(f, &source);
                if relabel[v] == usize::MAX {
                    escaped.get_or_insert(v);
                    0
                } else {
                    relabel[v]
                }
            },
        )?;
        if let Some(v) = escaped {
            return Err(Error::InvalidSubset(format!(
                "subset is not closed: {v} escapes it"
            )));
        }
        Ok((alg, embedding))
    }
}

impl Interpretation for FiniteAlgebra {
    type Value = Element;

    fn signature(&self) -> &Signature {
        &self.signature
    }

    fn contains(&self, value: &Element) -> bool {
        *value < self.size
    }

    fn apply(&self, symbol: SymbolId, args: &[Element]) -> Element {
        self.value(symbol, args)
    }
}

/// Calls `visit` on every `arity`-tuple over `{0, .., size-1}` in
/// lexicographic order.
pub fn for_each_tuple(size: usize, arity: usize, mut visit: impl FnMut(&[Element])) {
    if size == 0 {
        return;
    }
    let mut tuple = vec![0; arity];
    loop {
        visit(&tuple);
        let mut i = arity;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < size {
                break;
            }
            tuple[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zmod(n: usize) -> FiniteAlgebra {
        let sig = Signature::new([("+", 2)]).unwrap();
        FiniteAlgebra::from_fn("z", sig, n, |_, t| (t[0] + t[1]) % n).unwrap()
    }

    #[test]
    fn signature_rejects_duplicates_and_constants() {
        assert!(matches!(
            Signature::new([("f", 1), ("f", 2)]),
            Err(Error::InvalidSignature(_))
        ));
        assert!(matches!(
            Signature::new([("c", 0)]),
            Err(Error::InvalidSignature(_))
        ));
        assert!(Signature::new([("f(", 1)]).is_err());
    }

    #[test]
    fn tables_are_lexicographic() {
        let z3 = zmod(3);
        assert_eq!(z3.table(0), &[0, 1, 2, 1, 2, 0, 2, 0, 1]);
        assert_eq!(z3.value(0, &[2, 2]), 1);
        assert_eq!(z3.index_of(&[1, 2]), 5);
    }

    #[test]
    fn new_validates_tables() {
        let sig = Signature::new([("f", 1)]).unwrap();
        assert!(matches!(
            FiniteAlgebra::new("a", sig.clone(), 2, vec![vec![0, 5]]),
            Err(Error::ElementOutOfRange {
                element: 5,
                size: 2
            })
        ));
        assert!(matches!(
            FiniteAlgebra::new("a", sig.clone(), 2, vec![vec![0]]),
            Err(Error::TableLength {
                expected: 2,
                found: 1,
                ..
            })
        ));
        assert!(matches!(
            FiniteAlgebra::new("a", sig, 0, vec![vec![]]),
            Err(Error::EmptyUniverse)
        ));
    }

    #[test]
    fn permuted_renames_elements() {
        let z3 = zmod(3);
        let moved = z3.permuted(&[1, 2, 0]).unwrap();
        // 1 plays the role of 0 after renaming.
        assert_eq!(moved.value(0, &[1, 1]), 1);
        assert_eq!(moved.value(0, &[2, 2]), 0);
        assert!(z3.permuted(&[0, 0, 1]).is_err());
    }

    #[test]
    fn restrict_requires_closed_subset() {
        let sig = Signature::new([("p", 1)]).unwrap();
        let p3 = FiniteAlgebra::new("p3", sig, 4, vec![vec![0, 0, 1, 2]]).unwrap();
        let (sub, emb) = p3.restrict(&ElementSet::from_iter([0, 1, 2])).unwrap();
        assert_eq!(sub.table(0), &[0, 0, 1]);
        assert_eq!(emb, vec![0, 1, 2]);
        assert!(p3.restrict(&ElementSet::from_iter([1, 2])).is_err());
        assert!(p3.restrict(&ElementSet::new()).is_err());
    }

    #[test]
    fn tuple_order() {
        let mut seen = Vec::new();
        for_each_tuple(2, 2, |t| seen.push(t.to_vec()));
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}
