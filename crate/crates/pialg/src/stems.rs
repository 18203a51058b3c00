//! The truncated composition ring of stable homotopy groups of spheres.
//!
//! Degrees 0..=5 by default: `Z<iota>`, `Z/2<eta>`, `Z/2<eta2>`,
//! `Z/24<nu>`, 0, 0, with `eta*eta = eta2`, `eta*eta2 = eta2*eta = 12 nu`
//! (the relation eta^3 = 12 nu), and every product of total degree above the
//! window truncated to zero. The table is data-driven so a different window
//! or ring can be supplied through the input document; this is the built-in
//! default used by all bundled examples.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::group::FGAbelianGroup;
use crate::int::Int;

#[derive(Debug, Error)]
pub enum StemError {
    #[error("stem degree {0} is outside the window 0..={1}")]
    DegreeOutOfWindow(i64, i64),
    #[error("unknown stem generator `{0}`")]
    UnknownGenerator(String),
    #[error("bad stem table: {0}")]
    BadTable(String),
}

/// An element of one stem group, canonical coordinates reduced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StemElement {
    pub degree: i64,
    pub coords: Vec<Int>,
}

impl StemElement {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Int::is_zero)
    }
}

/// Composition table for the stem window. Products are stored on named
/// generators and extended bilinearly; `iota` is the implicit two-sided unit.
#[derive(Clone)]
pub struct StemTable {
    groups: Vec<FGAbelianGroup>,
    names: Vec<Vec<String>>,
    /// `(left generator, right generator) -> coordinates of the product`.
    products: BTreeMap<(String, String), Vec<Int>>,
    index: BTreeMap<String, (i64, usize)>,
}

impl StemTable {
    pub fn new(
        groups: Vec<FGAbelianGroup>,
        names: Vec<Vec<String>>,
        products: BTreeMap<(String, String), Vec<Int>>,
    ) -> Result<StemTable, StemError> {
        if groups.is_empty() || groups[0] != FGAbelianGroup::free(1) {
            return Err(StemError::BadTable("degree 0 must be Z on a single unit generator".into()));
        }
        if names.len() != groups.len() {
            return Err(StemError::BadTable("one name list per degree".into()));
        }
        let mut index = BTreeMap::new();
        for (d, (g, ns)) in groups.iter().zip(&names).enumerate() {
            if ns.len() != g.canonical_dim() {
                return Err(StemError::BadTable(format!(
                    "degree {d} needs {} generator names, got {}",
                    g.canonical_dim(),
                    ns.len()
                )));
            }
            for (k, n) in ns.iter().enumerate() {
                if index.insert(n.clone(), (d as i64, k)).is_some() {
                    return Err(StemError::BadTable(format!("generator `{n}` named twice")));
                }
            }
        }
        let table = StemTable { groups, names, products, index };
        table.check_products()?;
        Ok(table)
    }

    fn check_products(&self) -> Result<(), StemError> {
        for ((l, r), coords) in &self.products {
            let (dl, kl) = *self
                .index
                .get(l)
                .ok_or_else(|| StemError::UnknownGenerator(l.clone()))?;
            let (dr, kr) = *self
                .index
                .get(r)
                .ok_or_else(|| StemError::UnknownGenerator(r.clone()))?;
            let d = dl + dr;
            let g = self.group_or_zero(d);
            if coords.len() != g.canonical_dim() {
                return Err(StemError::BadTable(format!(
                    "product {l}*{r} has {} coordinates, expected {}",
                    coords.len(),
                    g.canonical_dim()
                )));
            }
            // Bilinearity over the generator orders.
            let prod = g.reduce(coords.clone());
            for (src_deg, src_k) in [(dl, kl), (dr, kr)] {
                let src = &self.groups[src_deg as usize];
                if src_k < src.rank() {
                    continue;
                }
                let t = src.torsion()[src_k - src.rank()].clone();
                if !g.scale(&t, &prod).coords.iter().all(Int::is_zero) {
                    return Err(StemError::BadTable(format!(
                        "product {l}*{r} is not killed by the order {t} of its factor"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The default window: degrees 0 through 5.
    pub fn standard() -> StemTable {
        let groups = vec![
            FGAbelianGroup::free(1),
            FGAbelianGroup::cyclic(2),
            FGAbelianGroup::cyclic(2),
            FGAbelianGroup::cyclic(24),
            FGAbelianGroup::trivial(),
            FGAbelianGroup::trivial(),
        ];
        let names = vec![
            vec!["iota".to_string()],
            vec!["eta".to_string()],
            vec!["eta2".to_string()],
            vec!["nu".to_string()],
            vec![],
            vec![],
        ];
        let mut products = BTreeMap::new();
        products.insert(("eta".into(), "eta".into()), vec![Int::ONE]);
        products.insert(("eta".into(), "eta2".into()), vec![Int::from(12)]);
        products.insert(("eta2".into(), "eta".into()), vec![Int::from(12)]);
        StemTable::new(groups, names, products).expect("built-in table is well-formed")
    }

    pub fn max_degree(&self) -> i64 {
        self.groups.len() as i64 - 1
    }

    /// The stem group at `i`; errors outside the window.
    pub fn stem_group(&self, i: i64) -> Result<&FGAbelianGroup, StemError> {
        if i < 0 || i > self.max_degree() {
            return Err(StemError::DegreeOutOfWindow(i, self.max_degree()));
        }
        Ok(&self.groups[i as usize])
    }

    /// Like `stem_group` but degrees outside the window are the zero group.
    pub fn group_or_zero(&self, i: i64) -> FGAbelianGroup {
        if i < 0 || i > self.max_degree() {
            FGAbelianGroup::trivial()
        } else {
            self.groups[i as usize].clone()
        }
    }

    pub fn generator_names(&self, i: i64) -> &[String] {
        if i < 0 || i > self.max_degree() {
            &[]
        } else {
            &self.names[i as usize]
        }
    }

    pub fn zero(&self, degree: i64) -> StemElement {
        StemElement { degree, coords: self.group_or_zero(degree).zero().coords }
    }

    pub fn element(&self, degree: i64, coords: Vec<Int>) -> StemElement {
        let g = self.group_or_zero(degree);
        StemElement { degree, coords: g.reduce(coords).coords }
    }

    pub fn named(&self, name: &str) -> Result<StemElement, StemError> {
        let (d, k) = *self
            .index
            .get(name)
            .ok_or_else(|| StemError::UnknownGenerator(name.to_string()))?;
        Ok(StemElement { degree: d, coords: self.groups[d as usize].generator(k).coords })
    }

    pub fn scaled(&self, c: i64, name: &str) -> Result<StemElement, StemError> {
        let e = self.named(name)?;
        Ok(self.scale(&Int::from(c), &e))
    }

    pub fn scale(&self, c: &Int, a: &StemElement) -> StemElement {
        let g = self.group_or_zero(a.degree);
        StemElement {
            degree: a.degree,
            coords: g.scale(c, &g.reduce(a.coords.clone())).coords,
        }
    }

    pub fn add(&self, a: &StemElement, b: &StemElement) -> StemElement {
        assert_eq!(a.degree, b.degree, "cannot add stems of different degrees");
        let g = self.group_or_zero(a.degree);
        StemElement {
            degree: a.degree,
            coords: g
                .add(&g.reduce(a.coords.clone()), &g.reduce(b.coords.clone()))
                .coords,
        }
    }

    fn generator_product(&self, dl: i64, kl: usize, dr: i64, kr: usize) -> StemElement {
        let d = dl + dr;
        if d > self.max_degree() {
            return self.zero(d);
        }
        if dl == 0 {
            return StemElement {
                degree: dr,
                coords: self.groups[dr as usize].generator(kr).coords,
            };
        }
        if dr == 0 {
            return StemElement {
                degree: dl,
                coords: self.groups[dl as usize].generator(kl).coords,
            };
        }
        let key = (self.names[dl as usize][kl].clone(), self.names[dr as usize][kr].clone());
        match self.products.get(&key) {
            Some(coords) => self.element(d, coords.clone()),
            None => self.zero(d),
        }
    }

    /// Composition product, bilinear in both arguments. Total degrees past
    /// the window give the zero element of the zero group.
    pub fn compose(&self, a: &StemElement, b: &StemElement) -> StemElement {
        let d = a.degree + b.degree;
        let mut acc = self.zero(d);
        for (kl, ca) in a.coords.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (kr, cb) in b.coords.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let term = self.generator_product(a.degree, kl, b.degree, kr);
                acc = self.add(&acc, &self.scale(&(ca * cb), &term));
            }
        }
        acc
    }

    /// Check associativity of the product on all generator triples whose
    /// composites stay in the window; returns the violating triples.
    pub fn associativity_violations(&self) -> Vec<(String, String, String)> {
        let mut bad = Vec::new();
        let gens: Vec<StemElement> = self
            .index
            .keys()
            .map(|n| self.named(n).expect("indexed name"))
            .collect();
        let names: Vec<&String> = self.index.keys().collect();
        for (i, a) in gens.iter().enumerate() {
            for (j, b) in gens.iter().enumerate() {
                for (k, c) in gens.iter().enumerate() {
                    let left = self.compose(&self.compose(a, b), c);
                    let right = self.compose(a, &self.compose(b, c));
                    if left != right {
                        bad.push((names[i].clone(), names[j].clone(), names[k].clone()));
                    }
                }
            }
        }
        bad
    }
}

impl fmt::Debug for StemTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StemTable[0..={}]", self.max_degree())
    }
}

/// Pretty-print an element as a combination of named generators.
pub fn format_stem(table: &StemTable, e: &StemElement) -> String {
    let names = table.generator_names(e.degree);
    let terms: Vec<String> = e
        .coords
        .iter()
        .zip(names)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, n)| if c.is_one() { n.clone() } else { format!("{c}*{n}") })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_groups() {
        let t = StemTable::standard();
        assert_eq!(t.stem_group(0).unwrap(), &FGAbelianGroup::free(1));
        assert_eq!(t.stem_group(3).unwrap(), &FGAbelianGroup::cyclic(24));
        assert!(t.stem_group(4).unwrap().is_trivial());
        assert!(t.stem_group(6).is_err());
        assert!(t.stem_group(-1).is_err());
    }

    #[test]
    fn products() {
        let t = StemTable::standard();
        let eta = t.named("eta").unwrap();
        let eta2 = t.named("eta2").unwrap();
        let nu = t.named("nu").unwrap();

        assert_eq!(t.compose(&eta, &eta), eta2);
        assert_eq!(t.compose(&eta2, &eta), t.scaled(12, "nu").unwrap());
        assert_eq!(t.compose(&eta, &eta2), t.scaled(12, "nu").unwrap());
        assert!(t.compose(&nu, &eta).is_zero()); // lands in the zero degree 4
        assert!(t.compose(&nu, &nu).is_zero()); // degree 6: truncated
    }

    #[test]
    fn iota_is_a_two_sided_unit() {
        let t = StemTable::standard();
        let iota = t.named("iota").unwrap();
        for name in ["iota", "eta", "eta2", "nu"] {
            let g = t.named(name).unwrap();
            assert_eq!(t.compose(&iota, &g), g);
            assert_eq!(t.compose(&g, &iota), g);
        }
        let two = t.scaled(2, "iota").unwrap();
        let eta = t.named("eta").unwrap();
        assert!(t.compose(&two, &eta).is_zero());
    }

    #[test]
    fn associativity_on_all_generator_triples() {
        assert!(StemTable::standard().associativity_violations().is_empty());
    }

    #[test]
    fn bilinearity_up_to_group_order() {
        let t = StemTable::standard();
        for a_name in ["eta", "eta2", "nu"] {
            for b_name in ["eta", "eta2", "nu"] {
                let a = t.named(a_name).unwrap();
                let b = t.named(b_name).unwrap();
                let ab = t.compose(&a, &b);
                let order = t
                    .stem_group(a.degree)
                    .unwrap()
                    .order()
                    .unwrap()
                    .to_i64()
                    .unwrap();
                for m in 0..=order {
                    let ma = t.scale(&Int::from(m), &a);
                    assert_eq!(
                        t.compose(&ma, &b),
                        t.scale(&Int::from(m), &ab),
                        "m={m} a={a_name} b={b_name}"
                    );
                }
            }
        }
    }

    #[test]
    fn malformed_tables_rejected() {
        // eta of order 2 with 2*(eta*eta) nonzero in Z/4 would violate
        // bilinearity; the constructor must reject it.
        let groups = vec![
            FGAbelianGroup::free(1),
            FGAbelianGroup::cyclic(2),
            FGAbelianGroup::cyclic(4),
        ];
        let names = vec![
            vec!["iota".to_string()],
            vec!["eta".to_string()],
            vec!["x".to_string()],
        ];
        let mut products = BTreeMap::new();
        products.insert(("eta".to_string(), "eta".to_string()), vec![Int::ONE]);
        assert!(StemTable::new(groups, names, products).is_err());
    }
}
