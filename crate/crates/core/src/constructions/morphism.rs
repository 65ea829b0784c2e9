use crate::algebra::{for_each_tuple, Element, FiniteAlgebra, SymbolId};
use crate::error::{Error, Result};

/// Default universe-size bound for [`isomorphism_search`].
pub const DEFAULT_ISO_LIMIT: usize = 8;

/// A total map between finite universes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomomorphismMap {
    source_size: usize,
    target_size: usize,
    map: Vec<Element>,
}

impl HomomorphismMap {
    pub fn new(source_size: usize, target_size: usize, map: Vec<Element>) -> Result<Self> {
        if map.len() != source_size {
            return Err(Error::InvalidMap(format!(
                "map has {} entries, source has {source_size} elements",
                map.len()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&b| b >= target_size) {
            return Err(Error::InvalidMap(format!(
                "image {bad} is outside the target of size {target_size}"
            )));
        }
        Ok(HomomorphismMap {
            source_size,
            target_size,
            map,
        })
    }

    pub fn identity(n: usize) -> Self {
        HomomorphismMap {
            source_size: n,
            target_size: n,
            map: (0..n).collect(),
        }
    }

    pub fn source_size(&self) -> usize {
        self.source_size
    }

    pub fn target_size(&self) -> usize {
        self.target_size
    }

    pub fn as_slice(&self) -> &[Element] {
        &self.map
    }

    pub fn image(&self, a: Element) -> Element {
        self.map[a]
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target_size];
        for &b in &self.map {
            hit[b] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &HomomorphismMap) -> Result<HomomorphismMap> {
        if other.source_size != self.target_size {
            return Err(Error::InvalidMap("maps do not compose".into()));
        }
        HomomorphismMap::new(
            self.source_size,
            other.target_size,
            self.map.iter().map(|&b| other.map[b]).collect(),
        )
    }
}

/// Outcome of [`check_homomorphism`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomomorphismCheck {
    pub homomorphism: bool,
    pub surjective: bool,
    /// First symbol and argument tuple where the map fails to commute.
    pub violation: Option<(SymbolId, Vec<Element>)>,
}

impl HomomorphismCheck {
    pub fn is_epimorphism(&self) -> bool {
        self.homomorphism && self.surjective
    }
}

/// Checks `h(f(b_1, .., b_n)) = f(h(b_1), .., h(b_n))` for every symbol and
/// every tuple.
pub fn check_homomorphism(
    src: &FiniteAlgebra,
    dst: &FiniteAlgebra,
    h: &HomomorphismMap,
) -> Result<HomomorphismCheck> {
    src.same_signature(dst)?;
    if h.source_size != src.size() || h.target_size != dst.size() {
        return Err(Error::InvalidMap(format!(
            "map is {} -> {}, algebras are {} -> {}",
            h.source_size,
            h.target_size,
            src.size(),
            dst.size()
        )));
    }
    let mut violation = None;
    let mut image = Vec::new();
    for (symbol, sym) in src.signature().symbols().iter().enumerate() {
        for_each_tuple(src.size(), sym.arity, |t| {
            if violation.is_some() {
                return;
            }
            image.clear();
            image.extend(t.iter().map(|&b| h.map[b]));
            if h.map[src.value(symbol, t)] != dst.value(symbol, &image) {
                violation = Some((symbol, t.to_vec()));
            }
        });
        if violation.is_some() {
            break;
        }
    }
    Ok(HomomorphismCheck {
        homomorphism: violation.is_none(),
        surjective: h.is_surjective(),
        violation,
    })
}

/// The lexicographically first bijective homomorphism `a -> b`, if any.
pub fn isomorphism_search(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    limit: usize,
) -> Result<Option<HomomorphismMap>> {
    a.same_signature(b)?;
    if a.size() > limit {
        return Err(Error::GuardExceeded {
            what: "isomorphism search universe size",
            required: a.size() as u128,
            limit: limit as u128,
        });
    }
    if a.size() != b.size() {
        return Ok(None);
    }
    let n = a.size();
    let mut search = IsoSearch {
        a,
        b,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        args: Vec::new(),
        image: Vec::new(),
    };
    if search.extend(0) {
        Ok(Some(HomomorphismMap::new(n, n, search.map)?))
    } else {
        Ok(None)
    }
}

struct IsoSearch<'a> {
    a: &'a FiniteAlgebra,
    b: &'a FiniteAlgebra,
    map: Vec<Element>,
    used: Vec<bool>,
    args: Vec<Element>,
    image: Vec<Element>,
}

impl IsoSearch<'_> {
    fn extend(&mut self, next: Element) -> bool {
        let n = self.a.size();
        if next == n {
            return true;
        }
        for candidate in 0..n {
            if self.used[candidate] {
                continue;
            }
            self.map[next] = candidate;
            self.used[candidate] = true;
            if self.consistent(next) && self.extend(next + 1) {
                return true;
            }
            self.used[candidate] = false;
        }
        self.map[next] = usize::MAX;
        false
    }

    // every tuple over {0..=last} that lands in {0..=last} and involves
    // `last` as an argument or as the value
    fn consistent(&mut self, last: Element) -> bool {
        let (a, b) = (self.a, self.b);
        for (symbol, sym) in a.signature().symbols().iter().enumerate() {
            let mut ok = true;
            let (map, args, image) = (&self.map, &mut self.args, &mut self.image);
            for_each_tuple(last + 1, sym.arity, |t| {
                if !ok {
                    return;
                }
                args.clear();
                args.extend_from_slice(t);
                let v = a.value(symbol, args);
                if v > last || (v != last && !t.contains(&last)) {
                    return;
                }
                image.clear();
                image.extend(t.iter().map(|&x| map[x]));
                ok = map[v] == b.value(symbol, image);
            });
            if !ok {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Signature;
    use crate::constructions::{catalog, product, DEFAULT_PRODUCT_LIMIT};

    #[test]
    fn homomorphism_examples() {
        let z4 = catalog::zmod(4).unwrap();
        let z2 = catalog::zmod(2).unwrap();
        let mod2 = HomomorphismMap::new(4, 2, vec![0, 1, 0, 1]).unwrap();
        let c = check_homomorphism(&z4, &z2, &mod2).unwrap();
        assert!(c.homomorphism && c.surjective && c.is_epimorphism());

        let id = HomomorphismMap::identity(4);
        assert!(check_homomorphism(&z4, &z4, &id).unwrap().is_epimorphism());

        let zero = HomomorphismMap::new(4, 2, vec![0; 4]).unwrap();
        let c = check_homomorphism(&z4, &z2, &zero).unwrap();
        assert!(c.homomorphism);
        assert!(!c.surjective);

        let bad = HomomorphismMap::new(4, 2, vec![1; 4]).unwrap();
        let c = check_homomorphism(&z4, &z2, &bad).unwrap();
        assert!(!c.homomorphism);
        assert_eq!(c.violation, Some((0, vec![0, 0])));

        assert!(HomomorphismMap::new(4, 2, vec![0, 1, 2, 0]).is_err());
        assert!(HomomorphismMap::new(4, 2, vec![0, 1]).is_err());
        assert!(check_homomorphism(&z4, &z2, &HomomorphismMap::identity(2)).is_err());
    }

    #[test]
    fn isomorphism_examples() {
        let z2 = catalog::zmod(2).unwrap();
        let swapped = z2.permuted(&[1, 0]).unwrap();
        // the relabelled copy sends 1 to the identity element
        assert_eq!(
            isomorphism_search(&z2, &swapped, 8)
                .unwrap()
                .unwrap()
                .as_slice(),
            &[1, 0]
        );
        assert_eq!(
            isomorphism_search(&z2, &z2, 8).unwrap().unwrap(),
            HomomorphismMap::identity(2)
        );
        let z4 = catalog::zmod(4).unwrap();
        let (klein, _) = product(&[z2.clone(), z2.clone()], DEFAULT_PRODUCT_LIMIT).unwrap();
        assert_eq!(isomorphism_search(&z4, &klein, 8).unwrap(), None);

        let (z6ish, _) = product(&[z2, catalog::zmod(3).unwrap()], DEFAULT_PRODUCT_LIMIT).unwrap();
        assert!(isomorphism_search(&z6ish, &catalog::zmod(6).unwrap(), 8)
            .unwrap()
            .is_some());
    }

    #[test]
    fn isomorphism_guards() {
        let z9 = catalog::zmod(9).unwrap();
        assert!(matches!(
            isomorphism_search(&z9, &z9, 8),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(isomorphism_search(&z9, &z9, 9).unwrap().is_some());
        let sig = Signature::new([("p", 1)]).unwrap();
        let other = crate::algebra::FiniteAlgebra::new("p", sig, 1, vec![vec![0]]).unwrap();
        assert!(isomorphism_search(&z9, &other, 9).is_err());
    }

    #[test]
    fn iso_checks_values_landing_on_new_elements() {
        let sig = Signature::new([("f", 1), ("g", 1)]).unwrap();
        let a = FiniteAlgebra::new("a", sig.clone(), 2, vec![vec![0, 0], vec![0, 0]]).unwrap();
        let b = FiniteAlgebra::new("b", sig, 2, vec![vec![0, 0], vec![1, 1]]).unwrap();
        assert_eq!(isomorphism_search(&a, &b, DEFAULT_ISO_LIMIT).unwrap(), None);
        assert_eq!(isomorphism_search(&b, &a, DEFAULT_ISO_LIMIT).unwrap(), None);
    }
}
