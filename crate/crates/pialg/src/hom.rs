//! Homomorphisms of finitely generated abelian groups, in canonical
//! coordinates, with the subgroup/quotient calculus: kernels, images,
//! preimages, and direct sums.

use thiserror::Error;

use crate::group::{FGAbelianGroup, GroupElement};
use crate::int::Int;
use crate::matrix::IntMatrix;
use crate::snf::{self, smith_with_inverses};

#[derive(Debug, Error)]
pub enum HomError {
    #[error("matrix is {got_rows}x{got_cols}, expected {want_rows}x{want_cols}")]
    Shape { want_rows: usize, want_cols: usize, got_rows: usize, got_cols: usize },
    #[error(
        "column {col} does not respect torsion: source generator has order {order} \
         but {order} times its image is nonzero in the target"
    )]
    TorsionViolation { col: usize, order: Int },
    #[error("source and target of consecutive maps do not match: {0} vs {1}")]
    NotComposable(FGAbelianGroup, FGAbelianGroup),
}

#[derive(Clone, PartialEq)]
pub struct AbHom {
    source: FGAbelianGroup,
    target: FGAbelianGroup,
    /// Canonical-coordinate matrix, columns reduced in the target.
    matrix: IntMatrix,
}

impl AbHom {
    pub fn new(
        source: FGAbelianGroup,
        target: FGAbelianGroup,
        matrix: IntMatrix,
    ) -> Result<AbHom, HomError> {
        let (wr, wc) = (target.canonical_dim(), source.canonical_dim());
        if matrix.rows() != wr || matrix.cols() != wc {
            return Err(HomError::Shape {
                want_rows: wr,
                want_cols: wc,
                got_rows: matrix.rows(),
                got_cols: matrix.cols(),
            });
        }
        let mut reduced = IntMatrix::zeros(wr, wc);
        for j in 0..wc {
            reduced.set_column(j, &target.reduce(matrix.column(j)).coords);
        }
        // A generator of finite order t must land on t-torsion.
        for j in 0..wc {
            if let Some(t) = source_coord_order(&source, j) {
                let img = target.scale(&t, &target.reduce(reduced.column(j)));
                if !is_zero_coords(&img.coords) {
                    return Err(HomError::TorsionViolation { col: j, order: t });
                }
            }
        }
        Ok(AbHom { source, target, matrix: reduced })
    }

    /// Hom given on presentation generators of both sides.
    pub fn from_presentation_matrix(
        source: FGAbelianGroup,
        target: FGAbelianGroup,
        pres_matrix: &IntMatrix,
    ) -> Result<AbHom, HomError> {
        if pres_matrix.rows() != target.pres_dim() || pres_matrix.cols() != source.pres_dim() {
            return Err(HomError::Shape {
                want_rows: target.pres_dim(),
                want_cols: source.pres_dim(),
                got_rows: pres_matrix.rows(),
                got_cols: pres_matrix.cols(),
            });
        }
        let canonical = IntMatrix::from_fn(
            target.canonical_dim(),
            source.canonical_dim(),
            |_, _| Int::ZERO,
        );
        let mut h = AbHom { source, target, matrix: canonical };
        let lifted = {
            let t2c = target_to_canonical(&h.target);
            let s_lift = source_from_canonical(&h.source);
            &(&t2c * pres_matrix) * &s_lift
        };
        h.matrix = IntMatrix::from_fn(h.target.canonical_dim(), h.source.canonical_dim(), |i, j| {
            lifted[(i, j)].clone()
        });
        AbHom::new(h.source, h.target, h.matrix)
    }

    pub fn identity(g: &FGAbelianGroup) -> AbHom {
        AbHom {
            source: g.clone(),
            target: g.clone(),
            matrix: IntMatrix::identity(g.canonical_dim()),
        }
    }

    pub fn zero(source: &FGAbelianGroup, target: &FGAbelianGroup) -> AbHom {
        AbHom {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.canonical_dim(), source.canonical_dim()),
        }
    }

    pub fn source(&self) -> &FGAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FGAbelianGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, e: &GroupElement) -> GroupElement {
        self.target.reduce(self.matrix.mul_vec(&e.coords))
    }

    pub fn is_zero_map(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &AbHom) -> Result<AbHom, HomError> {
        if first.target != self.source {
            return Err(HomError::NotComposable(first.target.clone(), self.source.clone()));
        }
        AbHom::new(first.source.clone(), self.target.clone(), &self.matrix * &first.matrix)
    }

    pub fn add(&self, other: &AbHom) -> AbHom {
        assert!(self.source == other.source && self.target == other.target);
        let m = IntMatrix::from_fn(self.matrix.rows(), self.matrix.cols(), |i, j| {
            &self.matrix[(i, j)] + &other.matrix[(i, j)]
        });
        AbHom::new(self.source.clone(), self.target.clone(), m).expect("sum of homs is a hom")
    }

    pub fn negate(&self) -> AbHom {
        let m = IntMatrix::from_fn(self.matrix.rows(), self.matrix.cols(), |i, j| {
            -&self.matrix[(i, j)]
        });
        AbHom::new(self.source.clone(), self.target.clone(), m).expect("negation of a hom")
    }

    pub fn sub(&self, other: &AbHom) -> AbHom {
        self.add(&other.negate())
    }

    /// Kernel subgroup with its inclusion.
    pub fn kernel(&self) -> (FGAbelianGroup, AbHom) {
        let dim_s = self.source.canonical_dim();
        let stacked = self.matrix.hstack(&relations_lattice(&self.target));
        let null = snf::kernel_basis(&stacked);
        let elems: Vec<GroupElement> = (0..null.cols())
            .map(|j| {
                self.source.reduce((0..dim_s).map(|i| null[(i, j)].clone()).collect())
            })
            .collect();
        subgroup(&self.source, &elems)
    }

    /// Image subgroup with its inclusion into the target.
    pub fn image(&self) -> (FGAbelianGroup, AbHom) {
        let elems: Vec<GroupElement> = (0..self.matrix.cols())
            .map(|j| self.target.reduce(self.matrix.column(j)))
            .collect();
        subgroup(&self.target, &elems)
    }

    /// Some preimage of `y`, if one exists.
    pub fn preimage(&self, y: &GroupElement) -> Option<GroupElement> {
        let dim_s = self.source.canonical_dim();
        let sys = self.matrix.hstack(&relations_lattice(&self.target));
        let x = snf::solve(&sys, &y.coords)?;
        Some(self.source.reduce(x[..dim_s].to_vec()))
    }

    pub fn is_isomorphism(&self) -> bool {
        if self.source != self.target {
            return false;
        }
        let (ker, _) = self.kernel();
        if !ker.is_trivial() {
            return false;
        }
        let (img, incl) = self.image();
        let (coker, _) = quotient(&self.target, &incl);
        img == self.source && coker.is_trivial()
    }

    /// Hom picked from a slice, or the zero hom when out of range.
    pub fn at_or_zero(
        maps: &[AbHom],
        n: usize,
        source: &FGAbelianGroup,
        target: &FGAbelianGroup,
    ) -> AbHom {
        match maps.get(n) {
            Some(h) => h.clone(),
            None => AbHom::zero(source, target),
        }
    }

    /// Block sum `f (+) g` on direct-sum groups.
    pub fn direct_sum(f: &AbHom, g: &AbHom) -> AbHom {
        let source = FGAbelianGroup::direct_sum(&[&f.source, &g.source]);
        let target = FGAbelianGroup::direct_sum(&[&f.target, &g.target]);
        let (fr, fc) = (f.matrix.rows(), f.matrix.cols());
        let pres = IntMatrix::from_fn(
            target.pres_dim(),
            source.pres_dim(),
            |i, j| match (i < fr, j < fc) {
                (true, true) => f.matrix[(i, j)].clone(),
                (false, false) => g.matrix[(i - fr, j - fc)].clone(),
                _ => Int::ZERO,
            },
        );
        AbHom::from_presentation_matrix(source, target, &pres).expect("block sum of homs")
    }
}

impl std::fmt::Debug for AbHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AbHom {} -> {}: {:?}", self.source, self.target, self.matrix)
    }
}

fn source_coord_order(g: &FGAbelianGroup, j: usize) -> Option<Int> {
    if j < g.rank() {
        None
    } else {
        Some(g.torsion()[j - g.rank()].clone())
    }
}

fn is_zero_coords(coords: &[Int]) -> bool {
    coords.iter().all(Int::is_zero)
}

/// Columns `t_k * e_k` spanning the relation lattice of the canonical form.
pub(crate) fn relations_lattice(g: &FGAbelianGroup) -> IntMatrix {
    let dim = g.canonical_dim();
    let k = g.torsion().len();
    let mut m = IntMatrix::zeros(dim, k);
    for (c, t) in g.torsion().iter().enumerate() {
        m[(g.rank() + c, c)] = t.clone();
    }
    m
}

fn target_to_canonical(g: &FGAbelianGroup) -> IntMatrix {
    g.to_canonical_matrix().clone()
}

fn source_from_canonical(g: &FGAbelianGroup) -> IntMatrix {
    g.from_canonical_matrix().clone()
}

/// Direct sum together with the canonical inclusions and projections of
/// each summand.
pub fn direct_sum_with_maps(
    parts: &[&FGAbelianGroup],
) -> (FGAbelianGroup, Vec<AbHom>, Vec<AbHom>) {
    let sum = FGAbelianGroup::direct_sum(parts);
    let total: usize = parts.iter().map(|p| p.canonical_dim()).sum();
    let mut inclusions = Vec::new();
    let mut projections = Vec::new();
    let mut offset = 0;
    for part in parts {
        let dim = part.canonical_dim();
        // inclusion: canonical generator k of the part is presentation
        // generator offset+k of the sum.
        let incl = IntMatrix::from_fn(sum.canonical_dim(), dim, |i, j| {
            let mut pres = vec![Int::ZERO; total];
            pres[offset + j] = Int::ONE;
            sum.project(&pres).coords[i].clone()
        });
        inclusions.push(
            AbHom::new(FGAbelianGroup::clone(part), sum.clone(), incl)
                .expect("summand inclusion respects torsion"),
        );
        // projection: lift a canonical generator of the sum to presentation
        // coordinates and read off this part's slice.
        let proj = IntMatrix::from_fn(dim, sum.canonical_dim(), |i, j| {
            sum.lift(&sum.generator(j))[offset + i].clone()
        });
        projections.push(
            AbHom::new(sum.clone(), FGAbelianGroup::clone(part), proj)
                .expect("summand projection respects torsion"),
        );
        offset += dim;
    }
    (sum, inclusions, projections)
}

/// The subgroup of `ambient` generated by `elements`, with inclusion.
pub fn subgroup(
    ambient: &FGAbelianGroup,
    elements: &[GroupElement],
) -> (FGAbelianGroup, AbHom) {
    let dim = ambient.canonical_dim();
    let rels = relations_lattice(ambient);
    let span = IntMatrix::from_fn(dim, elements.len() + rels.cols(), |i, j| {
        if j < elements.len() {
            elements[j].coords[i].clone()
        } else {
            rels[(i, j - elements.len())].clone()
        }
    });
    let full = smith_with_inverses(&span);
    let diag = full.snf.diagonal_factors();
    let r = diag.len();
    // Lattice basis: U^{-1} columns scaled by the diagonal.
    let basis = IntMatrix::from_fn(dim, r, |i, j| &full.u_inv[(i, j)] * &diag[j]);

    // Present the subgroup: ambient relations rewritten in basis coordinates.
    let mut rel_cols = Vec::new();
    for j in 0..rels.cols() {
        let sol = snf::solve(&basis, &rels.column(j))
            .expect("ambient relations lie in the spanned lattice");
        rel_cols.push(sol);
    }
    let pres = IntMatrix::from_fn(r, rel_cols.len(), |i, j| rel_cols[j][i].clone());
    let sub = FGAbelianGroup::from_presentation(pres);

    let incl_matrix = IntMatrix::from_fn(dim, sub.canonical_dim(), |_, _| Int::ZERO);
    let mut incl =
        AbHom { source: sub.clone(), target: ambient.clone(), matrix: incl_matrix };
    let lift = source_from_canonical(&sub);
    let composed = &basis * &lift;
    incl.matrix = {
        let mut m = IntMatrix::zeros(dim, sub.canonical_dim());
        for j in 0..sub.canonical_dim() {
            m.set_column(j, &ambient.reduce(composed.column(j)).coords);
        }
        m
    };
    debug_assert!(
        AbHom::new(sub.clone(), ambient.clone(), incl.matrix.clone()).is_ok(),
        "subgroup inclusion must respect torsion"
    );
    (sub, incl)
}

/// Quotient of `ambient` by the image of `sub_inclusion`, with projection.
pub fn quotient(
    ambient: &FGAbelianGroup,
    sub_inclusion: &AbHom,
) -> (FGAbelianGroup, AbHom) {
    assert!(sub_inclusion.target() == ambient);
    let dim = ambient.canonical_dim();
    let rels = relations_lattice(ambient);
    let pres = sub_inclusion.matrix().hstack(&rels);
    let q = FGAbelianGroup::from_presentation(pres);
    let proj_matrix = q.to_canonical_matrix().clone();
    debug_assert_eq!(proj_matrix.cols(), dim);
    let proj = AbHom::new(ambient.clone(), q.clone(), proj_matrix)
        .expect("quotient projection respects torsion");
    (q, proj)
}

/// Does `x` lie in the subgroup cut out by `inclusion`?
pub fn contains(inclusion: &AbHom, x: &GroupElement) -> bool {
    inclusion.preimage(x).is_some()
}
