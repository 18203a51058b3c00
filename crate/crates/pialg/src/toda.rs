//! Toda brackets as cosets: a supplied representative plus the computed
//! indeterminacy subgroup, with pushforward along algebra maps and the
//! disjointness check that turns a pushed bracket into a realizability
//! verdict.
//!
//! For a triple `W -f-> X -g-> Y -h-> Z` with vanishing consecutive
//! composites, the bracket lives in the target degree
//! `|h| + |g| + |f| + 1`; its indeterminacy is
//! `h . pi_{|f|+|g|+1} + T_{|h|+|g|+1} . f`. Representatives are data
//! (the defining pushout lives in spaces); only the coset logic is computed.

use thiserror::Error;

use crate::algebra::{GradedData, PiMap};
use crate::group::{FGAbelianGroup, GroupElement};
use crate::hom::{self, AbHom};
use crate::int::Int;
use crate::snf;
use crate::stems::{StemElement, StemTable};

#[derive(Debug, Error)]
pub enum TodaError {
    #[error("composite `{0}` is not zero, the bracket is undefined")]
    CompositeNonzero(&'static str),
    #[error("representative has {got} coordinates, ambient group needs {want}")]
    RepresentativeMismatch { want: usize, got: usize },
    #[error("ambient groups do not match: degree {0} vs degree {1}")]
    AmbientMismatch(i64, i64),
    #[error("cannot enumerate an infinite coset")]
    Infinite,
}

/// `W -f-> X -g-> Y -h-> Z` with `g.f = 0` and `h.g = 0`; `f` and `g` are
/// stems, `h` is an element of the target algebra or module.
#[derive(Clone, Debug)]
pub struct BracketTriple {
    pub f: StemElement,
    pub g: StemElement,
    pub h_degree: i64,
    pub h: GroupElement,
}

impl BracketTriple {
    pub fn new(
        target: &GradedData,
        stems: &StemTable,
        f: StemElement,
        g: StemElement,
        h_degree: i64,
        h: GroupElement,
    ) -> Result<BracketTriple, TodaError> {
        if !stems.compose(&g, &f).is_zero() {
            return Err(TodaError::CompositeNonzero("g . f"));
        }
        if !target.act(h_degree, &h, &g, stems).coords.iter().all(Int::is_zero) {
            return Err(TodaError::CompositeNonzero("h . g"));
        }
        Ok(BracketTriple { f, g, h_degree, h })
    }

    /// Degree of the ambient group `T_{|h| + |g| + |f| + 1}`.
    pub fn ambient_degree(&self) -> i64 {
        self.h_degree + self.g.degree + self.f.degree + 1
    }
}

/// The indeterminacy subgroup `h . pi_{|f|+|g|+1} + T_{|h|+|g|+1} . f`.
pub fn indeterminacy(
    t: &BracketTriple,
    target: &GradedData,
    stems: &StemTable,
) -> (FGAbelianGroup, AbHom) {
    let ambient = target.group(t.ambient_degree());
    let mut gens: Vec<GroupElement> = Vec::new();
    // h composed with the suspension stems of the middle gap
    let gap = t.f.degree + t.g.degree + 1;
    let pi_gap = stems.group_or_zero(gap);
    for k in 0..pi_gap.canonical_dim() {
        let theta = StemElement { degree: gap, coords: pi_gap.generator(k).coords };
        gens.push(target.act(t.h_degree, &t.h, &theta, stems));
    }
    // target elements one suspension above the second gap, composed with f
    let mid_degree = t.h_degree + t.g.degree + 1;
    let mid = target.group(mid_degree);
    for k in 0..mid.canonical_dim() {
        gens.push(target.act(mid_degree, &mid.generator(k), &t.f, stems));
    }
    hom::subgroup(&ambient, &gens)
}

/// A coset in one degree of a graded target: representative plus
/// indeterminacy subgroup, with decidable membership.
#[derive(Clone)]
pub struct TodaBracketCoset {
    pub ambient: FGAbelianGroup,
    pub ambient_degree: i64,
    pub representative: GroupElement,
    pub indeterminacy: FGAbelianGroup,
    pub inclusion: AbHom,
    pub provenance: String,
}

/// Assemble the coset from a triple and a supplied representative.
pub fn bracket(
    t: &BracketTriple,
    target: &GradedData,
    stems: &StemTable,
    representative: GroupElement,
) -> Result<TodaBracketCoset, TodaError> {
    let ambient = target.group(t.ambient_degree());
    if representative.coords.len() != ambient.canonical_dim() {
        return Err(TodaError::RepresentativeMismatch {
            want: ambient.canonical_dim(),
            got: representative.coords.len(),
        });
    }
    let (indet, inclusion) = indeterminacy(t, target, stems);
    Ok(TodaBracketCoset {
        ambient: ambient.clone(),
        ambient_degree: t.ambient_degree(),
        representative: ambient.reduce(representative.coords),
        indeterminacy: indet,
        inclusion,
        provenance: format!(
            "<{}, {}, {} at degree {}>",
            crate::stems::format_stem(stems, &t.f),
            crate::stems::format_stem(stems, &t.g),
            coords_string(&t.h),
            crate::algebra::format_degree(t.h_degree),
        ),
    })
}

fn coords_string(e: &GroupElement) -> String {
    let parts: Vec<String> = e.coords.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

impl TodaBracketCoset {
    /// All coset elements, sorted; `None` when the indeterminacy is infinite.
    pub fn elements(&self) -> Option<Vec<GroupElement>> {
        self.indeterminacy.order()?;
        let mut out: Vec<GroupElement> = self
            .indeterminacy
            .elements()
            .into_iter()
            .map(|k| self.ambient.add(&self.representative, &self.inclusion.apply(&k)))
            .collect();
        out.sort();
        out.dedup();
        Some(out)
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        let diff = self.ambient.sub(x, &self.representative);
        hom::contains(&self.inclusion, &diff)
    }

    /// The coset as an element set (symbolic if infinite).
    pub fn as_set(&self) -> ElementSet {
        match self.elements() {
            Some(elements) => ElementSet::Enumerated {
                ambient: self.ambient.clone(),
                degree: self.ambient_degree,
                elements,
            },
            None => ElementSet::Coset {
                ambient: self.ambient.clone(),
                degree: self.ambient_degree,
                representative: self.representative.clone(),
                inclusion: self.inclusion.clone(),
            },
        }
    }

    /// Cosets are equal when they contain each other's representatives and
    /// have the same indeterminacy.
    pub fn same_coset(&self, other: &TodaBracketCoset) -> bool {
        self.ambient == other.ambient
            && self.indeterminacy == other.indeterminacy
            && self.contains(&other.representative)
            && other.contains(&self.representative)
    }
}

/// A set of elements in one degree of a graded group: enumerated when
/// finite, representative-plus-subgroup otherwise.
#[derive(Clone)]
pub enum ElementSet {
    Enumerated { ambient: FGAbelianGroup, degree: i64, elements: Vec<GroupElement> },
    Coset {
        ambient: FGAbelianGroup,
        degree: i64,
        representative: GroupElement,
        inclusion: AbHom,
    },
}

impl ElementSet {
    pub fn from_elements(
        ambient: &FGAbelianGroup,
        degree: i64,
        elements: Vec<GroupElement>,
    ) -> ElementSet {
        let mut elements: Vec<GroupElement> =
            elements.into_iter().map(|e| ambient.reduce(e.coords)).collect();
        elements.sort();
        elements.dedup();
        ElementSet::Enumerated { ambient: ambient.clone(), degree, elements }
    }

    pub fn degree(&self) -> i64 {
        match self {
            ElementSet::Enumerated { degree, .. } | ElementSet::Coset { degree, .. } => *degree,
        }
    }

    pub fn ambient(&self) -> &FGAbelianGroup {
        match self {
            ElementSet::Enumerated { ambient, .. } | ElementSet::Coset { ambient, .. } => ambient,
        }
    }

    pub fn enumerate(&self) -> Option<Vec<GroupElement>> {
        match self {
            ElementSet::Enumerated { elements, .. } => Some(elements.clone()),
            ElementSet::Coset { ambient, representative, inclusion, .. } => {
                inclusion.source().order()?;
                let mut out: Vec<GroupElement> = inclusion
                    .source()
                    .elements()
                    .into_iter()
                    .map(|k| ambient.add(representative, &inclusion.apply(&k)))
                    .collect();
                out.sort();
                out.dedup();
                Some(out)
            }
        }
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        match self {
            ElementSet::Enumerated { elements, ambient, .. } => {
                let x = ambient.reduce(x.coords.clone());
                elements.contains(&x)
            }
            ElementSet::Coset { ambient, representative, inclusion, .. } => {
                hom::contains(inclusion, &ambient.sub(x, representative))
            }
        }
    }

    /// A common element of the two sets, if any.
    pub fn intersection_witness(&self, other: &ElementSet) -> Option<GroupElement> {
        match (self.enumerate(), other.enumerate()) {
            (Some(a), _) => a.into_iter().find(|x| other.contains(x)),
            (None, Some(b)) => b.into_iter().find(|x| self.contains(x)),
            (None, None) => {
                // two symbolic cosets: r1 + L1 meets r2 + L2 iff
                // r2 - r1 = L1 a - L2 b modulo the ambient relations
                let (
                    ElementSet::Coset { ambient, representative: r1, inclusion: l1, .. },
                    ElementSet::Coset { representative: r2, inclusion: l2, .. },
                ) = (self, other)
                else {
                    unreachable!("enumerate() is None only for cosets")
                };
                let rels = hom::relations_lattice(ambient);
                let sys = l1.matrix().hstack(&l2.matrix().clone()).hstack(&rels);
                let diff = ambient.sub(r2, r1);
                let sol = snf::solve(&sys, &diff.coords)?;
                let a_part: Vec<Int> = sol[..l1.matrix().cols()].to_vec();
                let shift = ambient.reduce(l1.matrix().mul_vec(&a_part));
                Some(ambient.add(r1, &shift))
            }
        }
    }
}

/// One recorded value of a bracket, labeled. Some recorded values are not
/// expressible as representative-plus-indeterminacy, so readings are plain
/// element sets.
#[derive(Clone)]
pub struct Reading {
    pub label: String,
    pub set: ElementSet,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    /// The sets are disjoint: realizability would force an intersection.
    Contradiction,
    /// The sets meet; the witness is a common element.
    Consistent { witness: GroupElement },
}

/// Push a coset forward elementwise along a degree of an algebra map.
pub fn pushforward(
    coset: &TodaBracketCoset,
    map: &PiMap,
    source: &GradedData,
    target: &GradedData,
) -> ElementSet {
    let d = coset.ambient_degree;
    let target_group = target.group(d);
    match coset.elements() {
        Some(elements) => ElementSet::from_elements(
            &target_group,
            d,
            elements.iter().map(|e| map.apply(d, e, source, target)).collect(),
        ),
        None => {
            let rep = map.apply(d, &coset.representative, source, target);
            let gens: Vec<GroupElement> = (0..coset.indeterminacy.canonical_dim())
                .map(|j| {
                    let amb = coset.inclusion.apply(&coset.indeterminacy.generator(j));
                    map.apply(d, &amb, source, target)
                })
                .collect();
            let (_, incl) = hom::subgroup(&target_group, &gens);
            ElementSet::Coset {
                ambient: target_group,
                degree: d,
                representative: rep,
                inclusion: incl,
            }
        }
    }
}

/// Compare a pushed bracket against a target bracket value: disjoint sets
/// mean the map cannot be realized.
pub fn realizability_contradiction(
    pushed: &ElementSet,
    target: &ElementSet,
) -> Result<Verdict, TodaError> {
    if pushed.degree() != target.degree() || pushed.ambient() != target.ambient() {
        return Err(TodaError::AmbientMismatch(pushed.degree(), target.degree()));
    }
    Ok(match pushed.intersection_witness(target) {
        Some(witness) => Verdict::Consistent { witness },
        None => Verdict::Contradiction,
    })
}
