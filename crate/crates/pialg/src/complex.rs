//! Chain and cochain complexes of finitely generated abelian groups:
//! homology as a subquotient with explicit cycle/projection data, induced
//! maps, and junction-by-junction exactness verification.

use thiserror::Error;

use crate::group::{FGAbelianGroup, GroupElement};
use crate::hom::{quotient, subgroup, AbHom, HomError};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Grading {
    /// `maps[n]: C_{n+1} -> C_n`
    Homological,
    /// `maps[n]: C^n -> C^{n+1}`
    Cohomological,
}

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("map {index} does not match adjacent groups")]
    Mismatched { index: usize },
    #[error("composite of consecutive maps at {index} is nonzero")]
    SquareNotZero { index: usize },
    #[error(transparent)]
    Hom(#[from] HomError),
}

#[derive(Clone)]
pub struct ChainComplexAb {
    groups: Vec<FGAbelianGroup>,
    maps: Vec<AbHom>,
    grading: Grading,
}

impl ChainComplexAb {
    pub fn new(
        grading: Grading,
        groups: Vec<FGAbelianGroup>,
        maps: Vec<AbHom>,
    ) -> Result<ChainComplexAb, ComplexError> {
        assert!(!groups.is_empty() || maps.is_empty());
        assert!(maps.len() + 1 == groups.len() || (groups.len() <= 1 && maps.is_empty()));
        for (n, d) in maps.iter().enumerate() {
            let (from, to) = match grading {
                Grading::Homological => (n + 1, n),
                Grading::Cohomological => (n, n + 1),
            };
            if d.source() != &groups[from] || d.target() != &groups[to] {
                return Err(ComplexError::Mismatched { index: n });
            }
        }
        for n in 0..maps.len().saturating_sub(1) {
            let composite = match grading {
                Grading::Homological => maps[n].compose(&maps[n + 1])?,
                Grading::Cohomological => maps[n + 1].compose(&maps[n])?,
            };
            if !composite.is_zero_map() {
                return Err(ComplexError::SquareNotZero { index: n });
            }
        }
        Ok(ChainComplexAb { groups, maps, grading })
    }

    pub fn cohomological(
        groups: Vec<FGAbelianGroup>,
        coboundaries: Vec<AbHom>,
    ) -> Result<ChainComplexAb, ComplexError> {
        ChainComplexAb::new(Grading::Cohomological, groups, coboundaries)
    }

    pub fn homological(
        groups: Vec<FGAbelianGroup>,
        differentials: Vec<AbHom>,
    ) -> Result<ChainComplexAb, ComplexError> {
        ChainComplexAb::new(Grading::Homological, groups, differentials)
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn group(&self, n: usize) -> Option<&FGAbelianGroup> {
        self.groups.get(n)
    }

    pub fn map(&self, n: usize) -> Option<&AbHom> {
        self.maps.get(n)
    }

    /// The map out of degree `n` (toward the kernel side of homology).
    fn outgoing(&self, n: usize) -> Option<&AbHom> {
        match self.grading {
            Grading::Homological => n.checked_sub(1).and_then(|k| self.maps.get(k)),
            Grading::Cohomological => self.maps.get(n),
        }
    }

    /// The map into degree `n` (whose image gets quotiented out).
    fn incoming(&self, n: usize) -> Option<&AbHom> {
        match self.grading {
            Grading::Homological => self.maps.get(n),
            Grading::Cohomological => n.checked_sub(1).and_then(|k| self.maps.get(k)),
        }
    }

    /// Homology at index `n`; indices outside the complex give the
    /// trivial group.
    pub fn homology(&self, n: usize) -> FGAbelianGroup {
        self.homology_data(n).group
    }

    pub fn homology_data(&self, n: usize) -> HomologyAt {
        let Some(cn) = self.groups.get(n) else {
            let t = FGAbelianGroup::trivial();
            return HomologyAt {
                group: t.clone(),
                cycles: t.clone(),
                cycle_inclusion: AbHom::identity(&t),
                projection: AbHom::identity(&t),
            };
        };
        let (cycles, cycle_inclusion) = match self.outgoing(n) {
            Some(d) => d.kernel(),
            None => (cn.clone(), AbHom::identity(cn)),
        };
        let boundary_gens: Vec<GroupElement> = match self.incoming(n) {
            Some(d) => (0..d.source().canonical_dim())
                .map(|j| d.apply(&d.source().generator(j)))
                .collect(),
            None => vec![],
        };
        let in_cycles: Vec<GroupElement> = boundary_gens
            .iter()
            .map(|b| {
                cycle_inclusion
                    .preimage(b)
                    .expect("boundaries are cycles: the complex squared to zero")
            })
            .collect();
        let (_, b_incl) = subgroup(&cycles, &in_cycles);
        let (group, projection) = quotient(&cycles, &b_incl);
        HomologyAt { group, cycles, cycle_inclusion, projection }
    }

    pub fn all_homology(&self) -> Vec<FGAbelianGroup> {
        (0..self.groups.len()).map(|n| self.homology(n)).collect()
    }
}

/// Homology at one index, with enough structure to push classes around.
#[derive(Clone)]
pub struct HomologyAt {
    pub group: FGAbelianGroup,
    pub cycles: FGAbelianGroup,
    cycle_inclusion: AbHom,
    projection: AbHom,
}

impl HomologyAt {
    /// Class of a chain element; `None` if it is not a cycle.
    pub fn class_of(&self, chain: &GroupElement) -> Option<GroupElement> {
        let z = self.cycle_inclusion.preimage(chain)?;
        Some(self.projection.apply(&z))
    }

    /// A chain representative of a homology element.
    pub fn representative(&self, h: &GroupElement) -> GroupElement {
        let z = self
            .projection
            .preimage(h)
            .expect("projection onto homology is surjective");
        self.cycle_inclusion.apply(&z)
    }
}

/// Map induced on homology by a degreewise chain map.
pub fn induced_on_homology(
    source_h: &HomologyAt,
    target_h: &HomologyAt,
    f_at_degree: &AbHom,
) -> AbHom {
    let h_src = &source_h.group;
    let h_tgt = &target_h.group;
    let mut cols = Vec::new();
    for j in 0..h_src.canonical_dim() {
        let rep = source_h.representative(&h_src.generator(j));
        let img = f_at_degree.apply(&rep);
        let class = target_h
            .class_of(&img)
            .expect("a chain map sends cycles to cycles");
        cols.push(class.coords);
    }
    let m = crate::matrix::IntMatrix::from_fn(h_tgt.canonical_dim(), h_src.canonical_dim(), |i, j| {
        cols[j][i].clone()
    });
    AbHom::new(h_src.clone(), h_tgt.clone(), m).expect("induced map respects torsion")
}

/// Verdict for one junction of a would-be exact sequence.
#[derive(Clone, Debug)]
pub struct JunctionVerdict {
    /// Index of the middle group, i.e. the junction between maps `i` and `i+1`.
    pub index: usize,
    pub exact: bool,
    /// An element of the middle group witnessing the failure.
    pub witness: Option<GroupElement>,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct ExactnessReport {
    pub junctions: Vec<JunctionVerdict>,
}

impl ExactnessReport {
    pub fn all_exact(&self) -> bool {
        self.junctions.iter().all(|j| j.exact)
    }
}

/// Check `im(maps[i]) = ker(maps[i+1])` at every junction of a composable
/// sequence, with a witness element on failure.
pub fn verify_exact(maps: &[AbHom]) -> Result<ExactnessReport, HomError> {
    for w in maps.windows(2) {
        if w[0].target() != w[1].source() {
            return Err(HomError::NotComposable(w[0].target().clone(), w[1].source().clone()));
        }
    }
    let mut report = ExactnessReport::default();
    for i in 0..maps.len().saturating_sub(1) {
        let (fst, snd) = (&maps[i], &maps[i + 1]);
        let mut verdict =
            JunctionVerdict { index: i, exact: true, witness: None, detail: String::new() };

        // image contained in kernel
        let (img, img_incl) = fst.image();
        for j in 0..img.canonical_dim() {
            let x = img_incl.apply(&img.generator(j));
            if snd.apply(&x) != snd.target().zero() {
                verdict.exact = false;
                verdict.detail = "image not contained in kernel".into();
                verdict.witness = Some(x);
                break;
            }
        }
        // kernel contained in image
        if verdict.exact {
            let (ker, ker_incl) = snd.kernel();
            for j in 0..ker.canonical_dim() {
                let x = ker_incl.apply(&ker.generator(j));
                if crate::hom::contains(&img_incl, &x) {
                    continue;
                }
                verdict.exact = false;
                verdict.detail = "kernel element not hit by the previous map".into();
                verdict.witness = Some(x);
                break;
            }
        }
        report.junctions.push(verdict);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int::Int;
    use crate::matrix::IntMatrix;

    fn zmod(n: i64) -> FGAbelianGroup {
        FGAbelianGroup::cyclic(n)
    }

    fn hom(s: &FGAbelianGroup, t: &FGAbelianGroup, entries: &[i64]) -> AbHom {
        AbHom::new(
            s.clone(),
            t.clone(),
            IntMatrix::from_i64(t.canonical_dim(), s.canonical_dim(), entries),
        )
        .unwrap()
    }

    /// The degree-5..0 cochain complex with groups (Z/2, Z/2, Z/4, Z/4, 0, 0)
    /// and coboundaries (0, *2, *2, 0, 0).
    fn loop_coefficient_complex() -> ChainComplexAb {
        let z2 = zmod(2);
        let z4 = zmod(4);
        let zero = FGAbelianGroup::trivial();
        let groups = vec![z2.clone(), z2.clone(), z4.clone(), z4.clone(), zero.clone(), zero.clone()];
        let maps = vec![
            AbHom::zero(&z2, &z2),
            hom(&z2, &z4, &[2]),
            hom(&z4, &z4, &[2]),
            AbHom::zero(&z4, &zero),
            AbHom::zero(&zero, &zero),
        ];
        ChainComplexAb::cohomological(groups, maps).unwrap()
    }

    #[test]
    fn cohomology_of_the_mod4_tower() {
        let c = loop_coefficient_complex();
        let h = c.all_homology();
        assert_eq!(h[0], zmod(2));
        assert!(h[1].is_trivial());
        assert!(h[2].is_trivial());
        assert_eq!(h[3], zmod(2));
        assert!(h[4].is_trivial());
        assert!(h[5].is_trivial());
        // Out of range is zero.
        assert!(c.homology(17).is_trivial());
    }

    #[test]
    fn cohomology_of_the_mod24_tower() {
        // 0 <- Z/24 <-2- Z/24 <-12- Z/2 <-0- Z/2
        let z2 = zmod(2);
        let z24 = zmod(24);
        let zero = FGAbelianGroup::trivial();
        let groups =
            vec![z2.clone(), z2.clone(), z24.clone(), z24.clone(), zero.clone(), zero.clone()];
        let maps = vec![
            AbHom::zero(&z2, &z2),
            hom(&z2, &z24, &[12]),
            hom(&z24, &z24, &[2]),
            AbHom::zero(&z24, &zero),
            AbHom::zero(&zero, &zero),
        ];
        let c = ChainComplexAb::cohomological(groups, maps).unwrap();
        let h = c.all_homology();
        assert_eq!(h[0], zmod(2));
        assert!(h[1].is_trivial() && h[2].is_trivial());
        assert_eq!(h[3], zmod(2));
    }

    #[test]
    fn zero_maps_give_back_the_groups() {
        let groups = vec![zmod(6), zmod(4), FGAbelianGroup::free(1)];
        let maps = vec![AbHom::zero(&groups[0], &groups[1]), AbHom::zero(&groups[1], &groups[2])];
        let c = ChainComplexAb::cohomological(groups.clone(), maps).unwrap();
        for (n, g) in groups.iter().enumerate() {
            assert_eq!(&c.homology(n), g);
        }
    }

    #[test]
    fn square_nonzero_rejected() {
        let z4 = zmod(4);
        let maps = vec![hom(&z4, &z4, &[1]), hom(&z4, &z4, &[1])];
        let err = ChainComplexAb::cohomological(vec![z4.clone(), z4.clone(), z4.clone()], maps);
        assert!(matches!(err, Err(ComplexError::SquareNotZero { index: 0 })));
    }

    #[test]
    fn short_exact_sequence_verifies() {
        let zero = FGAbelianGroup::trivial();
        let z2 = zmod(2);
        let z4 = zmod(4);
        let seq = vec![
            AbHom::zero(&zero, &z2),
            hom(&z2, &z4, &[2]),
            hom(&z4, &z2, &[1]),
            AbHom::zero(&z2, &zero),
        ];
        let report = verify_exact(&seq).unwrap();
        assert!(report.all_exact(), "{report:?}");
    }

    #[test]
    fn broken_sequence_reports_witness() {
        // 0 -> Z/2 -0-> Z/2: the middle junction fails, witnessed by the
        // generator of the first Z/2 ... exactness needs im = ker = Z/2.
        let zero = FGAbelianGroup::trivial();
        let z2 = zmod(2);
        let seq =
            vec![AbHom::zero(&zero, &z2), AbHom::zero(&z2, &z2), AbHom::zero(&z2, &zero)];
        let report = verify_exact(&seq).unwrap();
        assert!(!report.all_exact());
        let bad = &report.junctions[0];
        assert!(!bad.exact);
        assert_eq!(bad.witness, Some(z2.element_from_i64(&[1])));
    }

    #[test]
    fn non_composable_rejected() {
        let z2 = zmod(2);
        let z3 = zmod(3);
        let seq = vec![AbHom::identity(&z2), AbHom::identity(&z3)];
        assert!(verify_exact(&seq).is_err());
    }

    #[test]
    fn induced_identity_on_homology() {
        let c = loop_coefficient_complex();
        let h3 = c.homology_data(3);
        let id3 = AbHom::identity(c.group(3).unwrap());
        let ind = induced_on_homology(&h3, &h3, &id3);
        assert!(ind.is_isomorphism());
    }

    #[test]
    fn homology_is_presentation_independent() {
        // Rebuild each group from a unimodularly shuffled presentation and
        // check invariant factors of homology are unchanged.
        let pres0 = IntMatrix::from_i64(2, 2, &[4, 0, 0, 2]);
        let pres1 = IntMatrix::from_i64(2, 2, &[8, 0, 0, 2]);
        let shuffles = [
            IntMatrix::from_i64(2, 2, &[1, 1, 0, 1]),
            IntMatrix::from_i64(2, 2, &[1, 0, -3, 1]),
            IntMatrix::from_i64(2, 2, &[2, 1, 1, 1]),
        ];
        let mut seen = Vec::new();
        for p in &shuffles {
            assert_eq!(p.det().abs(), Int::ONE);
            let g0 = FGAbelianGroup::from_presentation(&pres0.clone() * p);
            let g1 = FGAbelianGroup::from_presentation(&pres1.clone() * p);
            // d: g1 -> g0 in canonical coordinates (both are Z/2 + Z/4-ish).
            let d = AbHom::new(
                g1.clone(),
                g0.clone(),
                IntMatrix::from_i64(
                    g0.canonical_dim(),
                    g1.canonical_dim(),
                    &[2, 0, 0, 2],
                ),
            )
            .unwrap();
            let c = ChainComplexAb::homological(vec![g0.clone(), g1.clone()], vec![d]).unwrap();
            let inv: Vec<Vec<Int>> =
                c.all_homology().iter().map(|h| h.torsion().to_vec()).collect();
            seen.push(inv);
        }
        assert!(seen.windows(2).all(|w| w[0] == w[1]), "{seen:?}");
    }
}
