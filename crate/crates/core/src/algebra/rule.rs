use std::fmt;
use std::sync::Arc;

use super::{Element, Interpretation, Signature, SymbolId};
use crate::error::{Error, Result};

pub type Rule<V> = Arc<dyn Fn(&[V]) -> V + Send + Sync>;

/// What is known up front about the fixed points of a unary rule algebra.
#[derive(Clone)]
pub enum FixedPointHint<V> {
    /// No element is fixed by every operation; searches may stop immediately.
    NoneExist,
    /// Exact membership test for the fixed-point set.
    Predicate(Arc<dyn Fn(&V) -> bool + Send + Sync>),
    Unknown,
}

impl<V> fmt::Debug for FixedPointHint<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedPointHint::NoneExist => f.write_str("NoneExist"),
            FixedPointHint::Predicate(_) => f.write_str("Predicate(..)"),
            FixedPointHint::Unknown => f.write_str("Unknown"),
        }
    }
}

/// An algebra whose operations are computed by closures over an unbounded
/// carrier, the naturals by default.
#[derive(Clone)]
pub struct RuleAlgebra<V = Element> {
    name: String,
    signature: Signature,
    rules: Vec<Rule<V>>,
    carrier: Arc<dyn Fn(&V) -> bool + Send + Sync>,
    hint: FixedPointHint<V>,
}

impl<V> fmt::Debug for RuleAlgebra<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RuleAlgebra")
            .field("name", &self.name)
            .field("signature", &self.signature)
            .field("hint", &self.hint)
            .finish_non_exhaustive()
    }
}

impl<V: 'static> RuleAlgebra<V> {
    /// One rule per symbol, in signature order. The carrier accepts every
    /// value of `V` until [`RuleAlgebra::with_carrier`] narrows it.
    pub fn new(name: impl Into<String>, signature: Signature, rules: Vec<Rule<V>>) -> Result<Self> {
        if rules.len() != signature.len() {
            return Err(Error::InvalidSignature(format!(
                "{} symbols but {} rules",
                signature.len(),
                rules.len()
            )));
        }
        Ok(RuleAlgebra {
            name: name.into(),
            signature,
            rules,
            carrier: Arc::new(|_| true),
            hint: FixedPointHint::Unknown,
        })
    }

    pub fn with_hint(mut self, hint: FixedPointHint<V>) -> Self {
        self.hint = hint;
        self
    }

    pub fn with_carrier(mut self, carrier: impl Fn(&V) -> bool + Send + Sync + 'static) -> Self {
        self.carrier = Arc::new(carrier);
        self
    }
}

impl<V> RuleAlgebra<V> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn hint(&self) -> &FixedPointHint<V> {
        &self.hint
    }

    pub fn rules(&self) -> &[Rule<V>] {
        &self.rules
    }
}

impl<V: Clone + Eq + std::hash::Hash + Ord + fmt::Debug> Interpretation for RuleAlgebra<V> {
    type Value = V;

    fn signature(&self) -> &Signature {
        &self.signature
    }

    fn contains(&self, value: &V) -> bool {
        (self.carrier)(value)
    }

    fn apply(&self, symbol: SymbolId, args: &[V]) -> V {
        (self.rules[symbol])(args)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rules_follow_signature() {
        let sig = Signature::new([("p", 1)]).unwrap();
        let p: Rule<Element> = Arc::new(|a: &[Element]| a[0].saturating_sub(1));
        let alg = RuleAlgebra::new("pred", sig.clone(), vec![p]).unwrap();
        assert_eq!(alg.apply(0, &[7]), 6);
        assert_eq!(alg.try_apply(0, &[0]).unwrap(), 0);
        assert!(alg.try_apply(0, &[1, 2]).is_err());
        assert!(RuleAlgebra::<Element>::new("bad", sig, vec![]).is_err());
    }

    #[test]
    fn carrier_can_be_narrowed() {
        let sig = Signature::new([("s", 1)]).unwrap();
        let s: Rule<Vec<Element>> = Arc::new(|a: &[Vec<Element>]| a[0].clone());
        let alg = RuleAlgebra::new("w", sig, vec![s])
            .unwrap()
            .with_carrier(|v: &Vec<Element>| v.len() == 2);
        assert!(alg.contains(&vec![1, 2]));
        assert!(!alg.contains(&vec![1]));
    }
}
