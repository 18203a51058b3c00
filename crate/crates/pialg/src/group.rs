//! Finitely generated abelian groups in invariant-factor form.
//!
//! A group is presented as the cokernel of an integer relations matrix and
//! carries the change of basis between presentation generators and the
//! canonical coordinates on `Z^rank (+) Z/t1 (+) ... (+) Z/tk`, with
//! `t1 | t2 | ... | tk`. Elements are coordinate vectors in the canonical
//! basis, reduced on construction, so equality is syntactic.

use std::fmt;

use crate::int::Int;
use crate::matrix::IntMatrix;
use crate::snf::smith_with_inverses;

#[derive(Clone)]
pub struct FGAbelianGroup {
    rank: usize,
    torsion: Vec<Int>,
    /// Canonical coordinates of each presentation generator's class.
    to_canonical: IntMatrix,
    /// Integer lift of each canonical generator back to presentation coords.
    from_canonical: IntMatrix,
    presentation: Option<IntMatrix>,
}

/// An element in canonical coordinates, reduced componentwise.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GroupElement {
    pub coords: Vec<Int>,
}

impl FGAbelianGroup {
    /// The quotient of `Z^gens` by the column span of `relations`.
    pub fn from_presentation(relations: IntMatrix) -> FGAbelianGroup {
        let gens = relations.rows();
        let full = smith_with_inverses(&relations);
        let diag = full.snf.diagonal_factors();
        let r = diag.len();

        let mut picked_rows: Vec<usize> = (r..gens).collect();
        let torsion: Vec<Int> = diag.iter().filter(|d| !d.is_one()).cloned().collect();
        picked_rows.extend((0..r).filter(|&i| !diag[i].is_one()));

        let to_canonical = IntMatrix::from_fn(picked_rows.len(), gens, |i, j| {
            full.snf.u[(picked_rows[i], j)].clone()
        });
        let from_canonical = IntMatrix::from_fn(gens, picked_rows.len(), |i, j| {
            full.u_inv[(i, picked_rows[j])].clone()
        });

        FGAbelianGroup {
            rank: gens - r,
            torsion,
            to_canonical,
            from_canonical,
            presentation: Some(relations),
        }
    }

    /// A group already in canonical form.
    pub fn canonical(rank: usize, torsion: Vec<Int>) -> FGAbelianGroup {
        for (k, t) in torsion.iter().enumerate() {
            assert!(*t >= Int::from(2), "invariant factors must be >= 2");
            if k + 1 < torsion.len() {
                assert!(t.divides(&torsion[k + 1]), "invariant factors must form a chain");
            }
        }
        let dim = rank + torsion.len();
        FGAbelianGroup {
            rank,
            torsion,
            to_canonical: IntMatrix::identity(dim),
            from_canonical: IntMatrix::identity(dim),
            presentation: None,
        }
    }

    pub fn trivial() -> FGAbelianGroup {
        FGAbelianGroup::canonical(0, vec![])
    }

    pub fn free(rank: usize) -> FGAbelianGroup {
        FGAbelianGroup::canonical(rank, vec![])
    }

    pub fn cyclic(order: i64) -> FGAbelianGroup {
        assert!(order >= 0);
        match order {
            0 => FGAbelianGroup::free(1),
            1 => FGAbelianGroup::trivial(),
            t => FGAbelianGroup::canonical(0, vec![Int::from(t)]),
        }
    }

    /// Direct sum; presentation generators are the parts' canonical
    /// generators in order, so summand labels line up with coordinates.
    pub fn direct_sum(parts: &[&FGAbelianGroup]) -> FGAbelianGroup {
        let dims: Vec<usize> = parts.iter().map(|g| g.canonical_dim()).collect();
        let total: usize = dims.iter().sum();
        let mut orders = Vec::new();
        let mut offset = 0;
        let mut rel_cols = Vec::new();
        for (p, g) in parts.iter().enumerate() {
            for k in 0..g.torsion.len() {
                orders.push((offset + g.rank + k, g.torsion[k].clone()));
            }
            offset += dims[p];
        }
        for (idx, t) in &orders {
            let mut col = vec![Int::ZERO; total];
            col[*idx] = t.clone();
            rel_cols.push(col);
        }
        let rels = IntMatrix::from_fn(total, rel_cols.len(), |i, j| rel_cols[j][i].clone());
        FGAbelianGroup::from_presentation(rels)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[Int] {
        &self.torsion
    }

    pub fn presentation(&self) -> Option<&IntMatrix> {
        self.presentation.as_ref()
    }

    /// Matrix of `project` on presentation coordinates (before reduction).
    pub fn to_canonical_matrix(&self) -> &IntMatrix {
        &self.to_canonical
    }

    /// Matrix of `lift` on canonical coordinates.
    pub fn from_canonical_matrix(&self) -> &IntMatrix {
        &self.from_canonical
    }

    /// Number of canonical coordinates (`rank` free, then torsion).
    pub fn canonical_dim(&self) -> usize {
        self.rank + self.torsion.len()
    }

    /// Number of presentation generators this group was built from.
    pub fn pres_dim(&self) -> usize {
        self.to_canonical.cols()
    }

    pub fn is_trivial(&self) -> bool {
        self.canonical_dim() == 0
    }

    pub fn order(&self) -> Option<Int> {
        if self.rank > 0 {
            return None;
        }
        let mut n = Int::ONE;
        for t in &self.torsion {
            n *= t;
        }
        Some(n)
    }

    /// Modulus of canonical coordinate `i`: `None` for a free coordinate.
    fn modulus(&self, i: usize) -> Option<&Int> {
        if i < self.rank {
            None
        } else {
            Some(&self.torsion[i - self.rank])
        }
    }

    pub fn reduce(&self, mut coords: Vec<Int>) -> GroupElement {
        assert_eq!(coords.len(), self.canonical_dim(), "coordinate dimension mismatch");
        for i in 0..coords.len() {
            if let Some(t) = self.modulus(i) {
                coords[i] = coords[i].rem_euclid(t);
            }
        }
        GroupElement { coords }
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { coords: vec![Int::ZERO; self.canonical_dim()] }
    }

    pub fn generator(&self, i: usize) -> GroupElement {
        let mut coords = vec![Int::ZERO; self.canonical_dim()];
        coords[i] = Int::ONE;
        self.reduce(coords)
    }

    pub fn element_from_i64(&self, coords: &[i64]) -> GroupElement {
        self.reduce(coords.iter().map(|&v| Int::from(v)).collect())
    }

    /// Class of a vector in presentation coordinates.
    pub fn project(&self, pres: &[Int]) -> GroupElement {
        self.reduce(self.to_canonical.mul_vec(pres))
    }

    /// An integer lift of an element to presentation coordinates.
    pub fn lift(&self, e: &GroupElement) -> Vec<Int> {
        self.from_canonical.mul_vec(&e.coords)
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.reduce(a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect())
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        self.reduce(a.coords.iter().map(|x| -x).collect())
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.reduce(a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect())
    }

    pub fn scale(&self, c: &Int, a: &GroupElement) -> GroupElement {
        self.reduce(a.coords.iter().map(|x| c * x).collect())
    }

    pub fn element_order(&self, a: &GroupElement) -> Option<Int> {
        let mut ord = Int::ONE;
        for (i, c) in a.coords.iter().enumerate() {
            match self.modulus(i) {
                None => {
                    if !c.is_zero() {
                        return None;
                    }
                }
                Some(t) => {
                    // order of c in Z/t is t / gcd(t, c)
                    let o = t.div_exact(&t.gcd(c));
                    let g = ord.gcd(&o);
                    ord = ord.div_exact(&g) * &o;
                }
            }
        }
        Some(ord)
    }

    /// All elements, smallest coordinates first. Panics on infinite groups.
    pub fn elements(&self) -> Vec<GroupElement> {
        assert_eq!(self.rank, 0, "cannot enumerate an infinite group");
        let mut out = vec![self.zero()];
        for (k, t) in self.torsion.iter().enumerate() {
            let t = t.to_i64().expect("torsion beyond i64 is not enumerable");
            let mut next = Vec::with_capacity(out.len() * t as usize);
            for e in &out {
                for v in 0..t {
                    let mut coords = e.coords.clone();
                    coords[self.rank + k] = Int::from(v);
                    next.push(GroupElement { coords });
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    /// Same isomorphism type: equal rank and invariant factors.
    pub fn is_isomorphic_to(&self, other: &FGAbelianGroup) -> bool {
        self.rank == other.rank && self.torsion == other.torsion
    }
}

/// Groups compare by isomorphism type; the presentation bridge is bookkeeping.
impl PartialEq for FGAbelianGroup {
    fn eq(&self, other: &FGAbelianGroup) -> bool {
        self.is_isomorphic_to(other)
    }
}

impl Eq for FGAbelianGroup {}

impl fmt::Display for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
