//! Line-oriented text formats. `#` starts a comment; blank lines are
//! ignored; errors carry 1-based line and column numbers.
//!
//! ```text
//! algebra p3
//! universe 4
//! op p 1
//! table p 0 0 1 2
//! ```
//!
//! Partitions are `partition <k>` followed by `k` lines `block <elements..>`;
//! maps are `map <images..>`; sequences are `seq <a,b,..>` with an optional
//! `rule naturals|odds`; subset predicates are `set evens`, `set odds`,
//! `set interval <lo> <hi>`, `set list <a,b,..>` or `set mod <m> <r,..>`;
//! reductions are `step <term> <p,p,..>` lines followed by `output <a,b,..>`.

use std::fmt::Write as _;

use crate::algebra::{Element, ElementSet, FiniteAlgebra, OrderlyTerm, Signature};
use crate::constructions::{CongruencePartition, HomomorphismMap};
use crate::error::{Error, Result};
use crate::reduction::{
    GeneratorRule, ReductionStep, ReductionWitness, SequencePrefix, SubsetPredicate,
};

#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, self.column, message)
    }

    fn number(&self) -> Result<usize> {
        self.text
            .parse()
            .map_err(|_| self.error(format!("expected a natural number, found `{}`", self.text)))
    }

    /// A comma-separated list of naturals.
    fn numbers(&self) -> Result<Vec<usize>> {
        if self.text.is_empty() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut offset = 0;
        let parts: Vec<&str> = self.text.split(',').collect();
        for (i, &part) in parts.iter().enumerate() {
            // `2, 3` splits into `2,` and `3`
            if part.is_empty() && (i == 0 || i + 1 == parts.len()) && parts.len() > 1 {
                offset += 1;
                continue;
            }
            let piece = Token {
                line: self.line,
                column: self.column + offset,
                text: part,
            };
            out.push(piece.number()?);
            offset += part.len() + 1;
        }
        Ok(out)
    }
}

/// Non-empty lines split into whitespace-separated tokens.
fn lines(text: &str) -> Vec<Vec<Token<'_>>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (pos, ch) in content.char_indices().chain([(content.len(), ' ')]) {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(pos),
                    (true, Some(s)) => {
                        tokens.push(Token {
                            line: i + 1,
                            column: s + 1,
                            text: &content[s..pos],
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            (!tokens.is_empty()).then_some(tokens)
        })
        .collect()
}

fn expect_args(tokens: &[Token<'_>], count: usize) -> Result<()> {
    if tokens.len() - 1 == count {
        return Ok(());
    }
    let at = tokens.get(count + 1).unwrap_or(&tokens[tokens.len() - 1]);
    Err(at.error(format!(
        "`{}` takes {count} argument{}, found {}",
        tokens[0].text,
        if count == 1 { "" } else { "s" },
        tokens.len() - 1
    )))
}

fn end_of(text: &str) -> (usize, usize) {
    (text.lines().count().max(1), 1)
}

pub fn parse_algebra(text: &str) -> Result<FiniteAlgebra> {
    let mut name: Option<String> = None;
    let mut size: Option<usize> = None;
    let mut signature = Signature::empty();
    let mut tables: Vec<Option<Vec<Element>>> = Vec::new();
    for tokens in lines(text) {
        let head = tokens[0];
        match head.text {
            "algebra" => {
                expect_args(&tokens, 1)?;
                if name.is_some() {
                    return Err(head.error("duplicate `algebra` line"));
                }
                name = Some(tokens[1].text.to_string());
            }
            "universe" => {
                expect_args(&tokens, 1)?;
                if size.is_some() {
                    return Err(head.error("duplicate `universe` line"));
                }
                let n = tokens[1].number()?;
                if n == 0 {
                    return Err(tokens[1].error("the universe must have at least one element"));
                }
                size = Some(n);
            }
            "op" => {
                expect_args(&tokens, 2)?;
                let arity = tokens[2].number()?;
                signature
                    .push(tokens[1].text, arity)
                    .map_err(|e| tokens[1].error(e.to_string()))?;
                tables.push(None);
            }
            "table" => {
                if tokens.len() < 2 {
                    return Err(head.error("`table` needs a symbol"));
                }
                let n = size.ok_or_else(|| head.error("`table` before `universe`"))?;
                let sym = tokens[1];
                let id = signature
                    .lookup(sym.text)
                    .ok_or_else(|| sym.error(format!("undeclared symbol `{}`", sym.text)))?;
                if tables[id].is_some() {
                    return Err(sym.error(format!("duplicate table for `{}`", sym.text)));
                }
                let arity = signature.symbols()[id].arity;
                let expected =
                    crate::algebra::table_len(n, arity).map_err(|e| sym.error(e.to_string()))?;
                let entries = &tokens[2..];
                if entries.len() != expected {
                    let at = entries.get(expected).unwrap_or(&sym);
                    return Err(at.error(format!(
                        "table for `{}` needs {expected} entries, found {}",
                        sym.text,
                        entries.len()
                    )));
                }
                let mut table = Vec::with_capacity(expected);
                for e in entries {
                    let v = e.number()?;
                    if v >= n {
                        return Err(
                            e.error(format!("entry {v} is outside the universe of size {n}"))
                        );
                    }
                    table.push(v);
                }
                tables[id] = Some(table);
            }
            other => return Err(head.error(format!("unknown directive `{other}`"))),
        }
    }
    let (line, column) = end_of(text);
    let size = size.ok_or_else(|| Error::parse(line, column, "missing `universe` line"))?;
    let tables = tables
        .into_iter()
        .enumerate()
        .map(|(id, t)| {
            t.ok_or_else(|| {
                Error::parse(
                    line,
                    column,
                    format!("missing table for `{}`", signature.name(id)),
                )
            })
        })
        .collect::<Result<Vec<_>>>()?;
    FiniteAlgebra::new(
        name.unwrap_or_else(|| "unnamed".into()),
        signature,
        size,
        tables,
    )
}

pub fn write_algebra(alg: &FiniteAlgebra) -> String {
    let mut out = String::new();
    let name: String = alg.name().split_whitespace().collect::<Vec<_>>().join("_");
    if !name.is_empty() {
        let _ = writeln!(out, "algebra {name}");
    }
    let _ = writeln!(out, "universe {}", alg.size());
    for s in alg.signature().symbols() {
        let _ = writeln!(out, "op {} {}", s.name, s.arity);
    }
    for (id, s) in alg.signature().symbols().iter().enumerate() {
        let entries: Vec<String> = alg.table(id).iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "table {} {}", s.name, entries.join(" "));
    }
    out
}

/// Parses a partition of `{0, .., size-1}`.
pub fn parse_partition(text: &str, size: usize) -> Result<CongruencePartition> {
    let all = lines(text);
    let Some(first) = all.first() else {
        return Err(Error::parse(1, 1, "missing `partition` line"));
    };
    if first[0].text != "partition" {
        return Err(first[0].error("expected `partition <k>`"));
    }
    expect_args(first, 1)?;
    let k = first[1].number()?;
    let mut blocks = Vec::with_capacity(k);
    for tokens in &all[1..] {
        if tokens[0].text != "block" {
            return Err(tokens[0].error(format!("unknown directive `{}`", tokens[0].text)));
        }
        let mut elems = Vec::new();
        for t in &tokens[1..] {
            elems.push(t.number()?);
        }
        blocks.push(elems.into_iter().collect::<ElementSet>());
    }
    if blocks.len() != k {
        return Err(first[1].error(format!("declared {k} blocks, found {}", blocks.len())));
    }
    CongruencePartition::new(size, blocks)
}

pub fn write_partition(part: &CongruencePartition) -> String {
    let mut out = format!("partition {}\n", part.num_blocks());
    for b in part.blocks() {
        let elems: Vec<String> = b.iter().map(|a| a.to_string()).collect();
        let _ = writeln!(out, "block {}", elems.join(" "));
    }
    out
}

pub fn parse_map(text: &str, source_size: usize, target_size: usize) -> Result<HomomorphismMap> {
    let all = lines(text);
    let [tokens] = all.as_slice() else {
        return Err(Error::parse(1, 1, "expected exactly one `map` line"));
    };
    if tokens[0].text != "map" {
        return Err(tokens[0].error("expected `map <images..>`"));
    }
    let images = tokens[1..]
        .iter()
        .map(|t| t.number())
        .collect::<Result<Vec<_>>>()?;
    HomomorphismMap::new(source_size, target_size, images)
}

pub fn write_map(map: &HomomorphismMap) -> String {
    let images: Vec<String> = map.as_slice().iter().map(|a| a.to_string()).collect();
    format!("map {}\n", images.join(" "))
}

pub fn parse_sequence(text: &str) -> Result<SequencePrefix> {
    let mut elements: Option<Vec<Element>> = None;
    let mut rule: Option<(GeneratorRule, Token<'_>)> = None;
    for tokens in lines(text) {
        let head = tokens[0];
        match head.text {
            "seq" => {
                if elements.is_some() {
                    return Err(head.error("duplicate `seq` line"));
                }
                let joined: Vec<Element> = tokens[1..]
                    .iter()
                    .map(|t| t.numbers())
                    .collect::<Result<Vec<_>>>()?
                    .concat();
                elements = Some(joined);
            }
            "rule" => {
                expect_args(&tokens, 1)?;
                let r = GeneratorRule::from_name(tokens[1].text).ok_or_else(|| {
                    tokens[1].error(format!(
                        "unknown rule `{}` (naturals, odds)",
                        tokens[1].text
                    ))
                })?;
                rule = Some((r, tokens[1]));
            }
            other => return Err(head.error(format!("unknown directive `{other}`"))),
        }
    }
    let (line, column) = end_of(text);
    let elements = elements.ok_or_else(|| Error::parse(line, column, "missing `seq` line"))?;
    match rule {
        None => Ok(SequencePrefix::new(elements)),
        Some((r, at)) => {
            SequencePrefix::with_generator(elements, r).map_err(|e| at.error(e.to_string()))
        }
    }
}

pub fn write_sequence(seq: &SequencePrefix) -> String {
    let elems: Vec<String> = seq.elements().iter().map(|a| a.to_string()).collect();
    let mut out = format!("seq {}\n", elems.join(","));
    if let Some(r) = seq.generator() {
        let _ = writeln!(out, "rule {}", r.name());
    }
    out
}

/// Parses a subset predicate. The leading `set` keyword is optional.
pub fn parse_predicate(text: &str) -> Result<SubsetPredicate> {
    let all = lines(text);
    let [tokens] = all.as_slice() else {
        return Err(Error::parse(1, 1, "expected exactly one predicate line"));
    };
    let tokens: &[Token<'_>] = if tokens[0].text == "set" {
        if tokens.len() < 2 {
            return Err(tokens[0].error("`set` needs a predicate"));
        }
        &tokens[1..]
    } else {
        tokens
    };
    let kind = tokens[0];
    match kind.text {
        "evens" => {
            expect_args(tokens, 0)?;
            Ok(SubsetPredicate::Evens)
        }
        "odds" => {
            expect_args(tokens, 0)?;
            Ok(SubsetPredicate::Odds)
        }
        "interval" => {
            expect_args(tokens, 2)?;
            let (lo, hi) = (tokens[1].number()?, tokens[2].number()?);
            if lo > hi {
                return Err(tokens[2].error(format!("empty interval {lo}..{hi}")));
            }
            Ok(SubsetPredicate::Interval { lo, hi })
        }
        "list" => {
            expect_args(tokens, 1)?;
            Ok(SubsetPredicate::List(
                tokens[1].numbers()?.into_iter().collect(),
            ))
        }
        "mod" => {
            expect_args(tokens, 2)?;
            let modulus = tokens[1].number()?;
            if modulus == 0 {
                return Err(tokens[1].error("modulus must be at least 1"));
            }
            let residues = tokens[2].numbers()?;
            if let Some(r) = residues.iter().find(|&&r| r >= modulus) {
                return Err(tokens[2].error(format!("residue {r} is not below {modulus}")));
            }
            Ok(SubsetPredicate::Residue { modulus, residues })
        }
        other => Err(kind.error(format!(
            "unknown predicate `{other}` (evens, odds, interval, list, mod)"
        ))),
    }
}

pub fn write_predicate(x: &SubsetPredicate) -> String {
    let join = |xs: &mut dyn Iterator<Item = &Element>| {
        xs.map(|a| a.to_string()).collect::<Vec<_>>().join(",")
    };
    match x {
        SubsetPredicate::Evens => "set evens\n".into(),
        SubsetPredicate::Odds => "set odds\n".into(),
        SubsetPredicate::Interval { lo, hi } => format!("set interval {lo} {hi}\n"),
        SubsetPredicate::List(set) => format!("set list {}\n", join(&mut set.iter())),
        SubsetPredicate::Residue { modulus, residues } => {
            format!("set mod {modulus} {}\n", join(&mut residues.iter()))
        }
    }
}

/// Parses a reduction witness whose terms use the symbols of `sig`.
pub fn parse_reduction(text: &str, sig: &Signature) -> Result<ReductionWitness> {
    let mut steps = Vec::new();
    let mut output: Option<Vec<Element>> = None;
    for tokens in lines(text) {
        let head = tokens[0];
        match head.text {
            "step" => {
                expect_args(&tokens, 2)?;
                if output.is_some() {
                    return Err(head.error("`step` after `output`"));
                }
                let term = OrderlyTerm::parse(sig, tokens[1].text).map_err(|e| match e {
                    Error::Parse {
                        column, message, ..
                    } => Error::parse(tokens[1].line, tokens[1].column + column - 1, message),
                    other => tokens[1].error(other.to_string()),
                })?;
                steps.push(ReductionStep {
                    term,
                    positions: tokens[2].numbers()?,
                });
            }
            "output" => {
                if output.is_some() {
                    return Err(head.error("duplicate `output` line"));
                }
                let values: Vec<Element> = tokens[1..]
                    .iter()
                    .map(|t| t.numbers())
                    .collect::<Result<Vec<_>>>()?
                    .concat();
                output = Some(values);
            }
            other => return Err(head.error(format!("unknown directive `{other}`"))),
        }
    }
    let (line, column) = end_of(text);
    let output = output.ok_or_else(|| Error::parse(line, column, "missing `output` line"))?;
    Ok(ReductionWitness { steps, output })
}

pub fn write_reduction(w: &ReductionWitness, sig: &Signature) -> String {
    let mut out = String::new();
    for s in &w.steps {
        let positions: Vec<String> = s.positions.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(out, "step {} {}", s.term.display(sig), positions.join(","));
    }
    let values: Vec<String> = w.output.iter().map(|a| a.to_string()).collect();
    let _ = writeln!(out, "output {}", values.join(","));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::catalog;

    fn parse_err(text: &str) -> (usize, usize, String) {
        match parse_algebra(text) {
            Err(Error::Parse {
                line,
                column,
                message,
            }) => (line, column, message),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn algebra_files() {
        let p3 = parse_algebra("algebra p3\nuniverse 4\nop p 1\ntable p 0 0 1 2\n").unwrap();
        assert_eq!(p3.table(0), catalog::predecessor_trunc(3).table(0));
        assert_eq!(p3.name(), "p3");

        let one = parse_algebra("universe 1\nop f 1\ntable f 0").unwrap();
        assert_eq!(one.size(), 1);

        let commented =
            parse_algebra("# header\n\nuniverse 2 # two\nop s 1\ntable s 1 0\n").unwrap();
        assert_eq!(commented.table(0), catalog::swap2().table(0));
    }

    #[test]
    fn algebra_errors() {
        let (line, column, message) = parse_err("universe 2\nop f 1\ntable f 0 5\n");
        assert_eq!((line, column), (3, 11));
        assert!(message.contains("entry 5"), "{message}");

        assert_eq!(parse_err("universe 2\nop f 1\ntable f 0\n").0, 3);
        assert!(parse_err("universe 2\nfrobnicate\n")
            .2
            .contains("unknown directive"));
        assert!(parse_err("universe 2\nop f 1\nop f 2\n")
            .2
            .contains("duplicate"));
        assert!(parse_err("universe 2\nop f 1\n")
            .2
            .contains("missing table"));
        assert!(parse_err("op f 1\ntable f 0 1\n")
            .2
            .contains("before `universe`"));
        assert!(parse_err("universe 0\n").2.contains("at least one"));
        assert!(parse_err("universe 2\nop f 0\n").2.contains("arity"));
        assert!(parse_err("universe 2\ntable g 0 1\n")
            .2
            .contains("undeclared"));
        assert!(parse_err("universe x\n").2.contains("natural number"));
    }

    #[test]
    fn algebra_round_trip() {
        for alg in [
            catalog::predecessor_trunc(4),
            catalog::dlimit_trunc(3),
            catalog::zmod(3).unwrap(),
            catalog::swap2(),
        ] {
            assert_eq!(parse_algebra(&write_algebra(&alg)).unwrap(), alg);
        }
    }

    #[test]
    fn partitions_and_maps() {
        let part = parse_partition("partition 2\nblock 0 2\nblock 1 3\n", 4).unwrap();
        assert!(part.related(0, 2) && !part.related(0, 1));
        assert_eq!(parse_partition(&write_partition(&part), 4).unwrap(), part);
        assert!(parse_partition("partition 3\nblock 0 2\nblock 1 3\n", 4).is_err());
        assert!(parse_partition("partition 2\nblock 0 2\nblock 1\n", 4).is_err());

        let map = parse_map("map 0 1 0 1\n", 4, 2).unwrap();
        assert_eq!(map.as_slice(), &[0, 1, 0, 1]);
        assert_eq!(parse_map(&write_map(&map), 4, 2).unwrap(), map);
        assert!(parse_map("map 0 2\n", 2, 2).is_err());
    }

    #[test]
    fn sequences_and_predicates() {
        let s = parse_sequence("seq 1,3,5\nrule odds\n").unwrap();
        assert_eq!(s.generator(), Some(GeneratorRule::Odds));
        assert_eq!(parse_sequence(&write_sequence(&s)).unwrap(), s);
        assert!(parse_sequence("seq 1,4\nrule odds\n").is_err());
        assert!(parse_sequence("seq 1,x\n").is_err());
        assert_eq!(parse_sequence("seq 2, 3\n").unwrap().elements(), &[2, 3]);

        for text in [
            "set evens\n",
            "set odds\n",
            "set interval 2 5\n",
            "set list 1,4\n",
            "set mod 3 0,2\n",
        ] {
            let x = parse_predicate(text).unwrap();
            assert_eq!(write_predicate(&x), text);
        }
        assert_eq!(parse_predicate("evens").unwrap(), SubsetPredicate::Evens);
        assert!(parse_predicate("set mod 3 4").is_err());
        assert!(parse_predicate("set primes").is_err());
    }

    #[test]
    fn reductions() {
        let add = catalog::nat_add_rule();
        let sig = crate::algebra::Interpretation::signature(&add);
        let text = "step +(x0,x1) 0,2\nstep +(x0,x1) 3,4\nstep +(+(x0,x1),x2) 7,8,10\nstep x0 11\noutput 6,16,53,23\n";
        let w = parse_reduction(text, sig).unwrap();
        assert_eq!(w.output, vec![6, 16, 53, 23]);
        assert_eq!(write_reduction(&w, sig), text);
        match parse_reduction("step +(x0,x2) 0,1\noutput 1\n", sig) {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
    }
}
