//! Named example algebras.
//!
//! | name                  | kind   | operations                                   |
//! |-----------------------|--------|----------------------------------------------|
//! | `predecessor-rule`    | rule   | `p(0) = 0`, `p(n) = n - 1`                   |
//! | `predecessor-trunc(n)`| finite | `p` on `{0, .., n}`                          |
//! | `dlimit-rule`         | rule   | `f(a, b) = a` if `a = b`, else `max(a, b) - 1` |
//! | `dlimit-trunc(n)`     | finite | `f` on `{0, .., n}`                          |
//! | `z-shift-rule`        | rule   | `x + 1`, `x - 1` on the integers, folded onto the naturals |
//! | `nat-add-rule`        | rule   | `+` on the naturals                          |
//! | `zmod(n)`             | finite | `+` mod `n`                                  |
//! | `swap2`               | finite | the transposition of `{0, 1}`                |

use std::sync::Arc;

use crate::algebra::{Element, FiniteAlgebra, FixedPointHint, Rule, RuleAlgebra, Signature};
use crate::error::{Error, Result};

pub const CATALOG_NAMES: &[&str] = &[
    "predecessor-rule",
    "predecessor-trunc",
    "dlimit-rule",
    "dlimit-trunc",
    "z-shift-rule",
    "nat-add-rule",
    "zmod",
    "swap2",
];

#[derive(Clone, Debug)]
pub enum CatalogAlgebra {
    Finite(FiniteAlgebra),
    Rule(RuleAlgebra),
}

fn unary_sig(name: &str) -> Signature {
    Signature::new([(name, 1)]).expect("valid symbol")
}

fn binary_sig(name: &str) -> Signature {
    Signature::new([(name, 2)]).expect("valid symbol")
}

/// The predecessor: `0 -> 0`, `n -> n - 1`.
pub fn predecessor(n: Element) -> Element {
    n.saturating_sub(1)
}

/// Closed form of the direct-limit operation.
pub fn dlimit(a: Element, b: Element) -> Element {
    if a == b {
        a
    } else {
        a.max(b) - 1
    }
}

/// Folds the integers onto the naturals: `z >= 0 -> 2z`, `z < 0 -> -2z - 1`.
pub fn encode_integer(z: i64) -> Element {
    if z >= 0 {
        (z as Element) * 2
    } else {
        ((-(z + 1)) as Element) * 2 + 1
    }
}

pub fn decode_integer(n: Element) -> i64 {
    if n.is_multiple_of(2) {
        (n / 2) as i64
    } else {
        -((n / 2) as i64) - 1
    }
}

pub fn predecessor_rule() -> RuleAlgebra {
    let p: Rule<Element> = Arc::new(|a: &[Element]| predecessor(a[0]));
    RuleAlgebra::new("predecessor", unary_sig("p"), vec![p])
        .expect("one rule")
        .with_hint(FixedPointHint::Predicate(Arc::new(|&v: &Element| v == 0)))
}

/// `p` on `{0, .., n}`.
pub fn predecessor_trunc(n: usize) -> FiniteAlgebra {
    FiniteAlgebra::from_fn(format!("P{n}"), unary_sig("p"), n + 1, |_, t| {
        predecessor(t[0])
    })
    .expect("closed under p")
}

pub fn dlimit_rule() -> RuleAlgebra {
    let f: Rule<Element> = Arc::new(|a: &[Element]| dlimit(a[0], a[1]));
    RuleAlgebra::new("dlimit", binary_sig("f"), vec![f]).expect("one rule")
}

/// The direct-limit operation on `{0, .., n}`.
pub fn dlimit_trunc(n: usize) -> FiniteAlgebra {
    FiniteAlgebra::from_fn(format!("A{n}"), binary_sig("f"), n + 1, |_, t| {
        dlimit(t[0], t[1])
    })
    .expect("closed under f")
}

/// Successor `f` and predecessor `g` on the integers, encoded by
/// [`encode_integer`]. Neither has a fixed point in common with the other.
pub fn z_shift_rule() -> RuleAlgebra {
    let sig = Signature::new([("f", 1), ("g", 1)]).expect("valid symbols");
    let succ: Rule<Element> = Arc::new(|a: &[Element]| encode_integer(decode_integer(a[0]) + 1));
    let pred: Rule<Element> = Arc::new(|a: &[Element]| encode_integer(decode_integer(a[0]) - 1));
    RuleAlgebra::new("z-shift", sig, vec![succ, pred])
        .expect("two rules")
        .with_hint(FixedPointHint::NoneExist)
}

/// Addition on the naturals (saturating at the top of the carrier type).
pub fn nat_add_rule() -> RuleAlgebra {
    let add: Rule<Element> = Arc::new(|a: &[Element]| a[0].saturating_add(a[1]));
    RuleAlgebra::new("nat-add", binary_sig("+"), vec![add]).expect("one rule")
}

pub fn zmod(n: usize) -> Result<FiniteAlgebra> {
    if n == 0 {
        return Err(Error::BadParams {
            name: "zmod".into(),
            message: "modulus must be at least 1".into(),
        });
    }
    FiniteAlgebra::from_fn(format!("Z{n}"), binary_sig("+"), n, |_, t| {
        (t[0] + t[1]) % n
    })
}

pub fn swap2() -> FiniteAlgebra {
    FiniteAlgebra::new("swap2", unary_sig("s"), 2, vec![vec![1, 0]]).expect("valid table")
}

/// Looks up a catalog algebra by name and numeric parameters.
pub fn catalog(name: &str, params: &[usize]) -> Result<CatalogAlgebra> {
    let want = |count: usize| -> Result<()> {
        if params.len() == count {
            Ok(())
        } else {
            Err(Error::BadParams {
                name: name.to_string(),
                message: format!("expected {count} parameters, got {}", params.len()),
            })
        }
    };
    Ok(match name {
        "predecessor-rule" => {
            want(0)?;
            CatalogAlgebra::Rule(predecessor_rule())
        }
        "predecessor-trunc" => {
            want(1)?;
            CatalogAlgebra::Finite(predecessor_trunc(params[0]))
        }
        "dlimit-rule" => {
            want(0)?;
            CatalogAlgebra::Rule(dlimit_rule())
        }
        "dlimit-trunc" => {
            want(1)?;
            CatalogAlgebra::Finite(dlimit_trunc(params[0]))
        }
        "z-shift-rule" => {
            want(0)?;
            CatalogAlgebra::Rule(z_shift_rule())
        }
        "nat-add-rule" => {
            want(0)?;
            CatalogAlgebra::Rule(nat_add_rule())
        }
        "zmod" => {
            want(1)?;
            CatalogAlgebra::Finite(zmod(params[0])?)
        }
        "swap2" => {
            want(0)?;
            CatalogAlgebra::Finite(swap2())
        }
        _ => return Err(Error::UnknownCatalog(name.to_string())),
    })
}

/// Parses `name` or `name(p1,p2,..)` and looks it up.
pub fn catalog_spec(spec: &str) -> Result<CatalogAlgebra> {
    let spec = spec.trim();
    let (name, params) = match spec.find('(') {
        None => (spec, Vec::new()),
        Some(open) => {
            let inner = spec[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| Error::UnknownCatalog(spec.to_string()))?;
            let params = inner
                .split(',')
                .map(|p| {
                    p.trim().parse::<usize>().map_err(|_| Error::BadParams {
                        name: spec[..open].to_string(),
                        message: format!("`{}` is not a natural number", p.trim()),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            (&spec[..open], params)
        }
    };
    catalog(name, &params)
}
