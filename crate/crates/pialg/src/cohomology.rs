//! Cohomology of a resolved algebra with module coefficients, computed from
//! the cochain complexes `C^n = Hom(V_n, M)`; cohomology of a map via a
//! shifted mapping cone of `xi(a, b) = tau_*(a) - Phi^*(b)`; assembly and
//! verification of the associated long exact sequence; obstruction-group
//! reports for the realization tower.

use thiserror::Error;

use crate::algebra::{GradedData, PiMap, PiModule, StablePiAlgebra};
use crate::complex::{
    induced_on_homology, verify_exact, ChainComplexAb, ExactnessReport,
};
use crate::group::FGAbelianGroup;
use crate::hom::AbHom;
use crate::int::Int;
use crate::matrix::IntMatrix;
use crate::resolution::{FreeModuleMap, FreeResolution};
use crate::stems::StemTable;

#[derive(Debug, Error)]
pub enum CohomologyError {
    #[error("module `{module}` lives over `{base}`, not over `{algebra}`")]
    BaseMismatch { module: String, base: String, algebra: String },
    #[error("chain lift and coefficient map do not fit the resolutions: {0}")]
    Incompatible(String),
    #[error(transparent)]
    Complex(#[from] crate::complex::ComplexError),
}

/// Labels of one cochain degree: `C^n = (+)_{g in V_n} M_{|g|}`, one label
/// per canonical coordinate of each summand.
#[derive(Clone, Debug)]
pub struct CochainBasis {
    pub labels: Vec<(usize, usize)>,
}

/// The cochain complex `Hom(V_., M)` with its labeled bases.
#[derive(Clone)]
pub struct CochainComplex {
    pub complex: ChainComplexAb,
    pub bases: Vec<CochainBasis>,
}

impl CochainComplex {
    pub fn group(&self, n: usize) -> FGAbelianGroup {
        self.complex.group(n).cloned().unwrap_or_else(FGAbelianGroup::trivial)
    }

    pub fn len(&self) -> usize {
        self.complex.len()
    }

    pub fn is_empty(&self) -> bool {
        self.complex.is_empty()
    }

    pub fn coboundary(&self, n: usize) -> Option<&AbHom> {
        self.complex.map(n)
    }

    pub fn cohomology(&self) -> Vec<FGAbelianGroup> {
        self.complex.all_homology()
    }

    pub fn is_zero(&self) -> bool {
        (0..self.len()).all(|n| self.group(n).is_trivial())
    }
}

fn module_value_group(m: &PiModule, degree: i64) -> FGAbelianGroup {
    m.data.group(degree)
}

/// `Hom(V_., M)` for a resolution of `algebra` and a module over it (a
/// module over another base must be restricted first).
pub fn cochain_complex(
    r: &FreeResolution,
    m: &PiModule,
    algebra: &StablePiAlgebra,
    stems: &StemTable,
) -> Result<CochainComplex, CohomologyError> {
    if m.base != algebra.name {
        return Err(CohomologyError::BaseMismatch {
            module: m.name.clone(),
            base: m.base.clone(),
            algebra: algebra.name.clone(),
        });
    }
    Ok(build_hom_complex(r, m, stems)?)
}

fn build_hom_complex(
    r: &FreeResolution,
    m: &PiModule,
    stems: &StemTable,
) -> Result<CochainComplex, crate::complex::ComplexError> {
    let levels = r.modules.len();
    let mut groups = Vec::new();
    let mut bases = Vec::new();
    for n in 0..levels {
        let gens = r.module(n);
        let mut parts = Vec::new();
        let mut labels = Vec::new();
        for (gi, (_, gd)) in gens.generators().iter().enumerate() {
            let value = module_value_group(m, *gd);
            for k in 0..value.canonical_dim() {
                labels.push((gi, k));
            }
            parts.push(value);
        }
        let refs: Vec<&FGAbelianGroup> = parts.iter().collect();
        groups.push(FGAbelianGroup::direct_sum(&refs));
        bases.push(CochainBasis { labels });
    }

    let mut maps = Vec::new();
    for n in 0..levels.saturating_sub(1) {
        let src_gens = r.module(n);
        let src_basis = &bases[n];
        let tgt_basis = &bases[n + 1];
        let mut pres = IntMatrix::zeros(tgt_basis.labels.len(), src_basis.labels.len());
        for (col, (gi, k)) in src_basis.labels.iter().enumerate() {
            let g_degree = src_gens.generators()[*gi].1;
            let value = module_value_group(m, g_degree).generator(*k);
            // The cochain sending generator gi to `value` composed with the
            // differential: evaluate on each generator of V_{n+1}.
            for (row, (hj, k1)) in tgt_basis.labels.iter().enumerate() {
                let image = &r.differentials[n].images[*hj];
                let mut acc = Int::ZERO;
                for term in &image.terms {
                    if term.generator != *gi {
                        continue;
                    }
                    let moved = m.data.act(g_degree, &value, &term.stem, stems);
                    acc += &moved.coords[*k1];
                }
                pres[(row, col)] = acc;
            }
        }
        let h = AbHom::from_presentation_matrix(groups[n].clone(), groups[n + 1].clone(), &pres)
            .expect("coboundary respects torsion");
        maps.push(h);
    }
    let complex = ChainComplexAb::cohomological(groups, maps)?;
    Ok(CochainComplex { complex, bases })
}

/// Cochain map `C(X; M0) -> C(X; M1)` given by postcomposition with a
/// coefficient map `tau` (covariant in the module).
pub fn coefficient_cochain_maps(
    r: &FreeResolution,
    c0: &CochainComplex,
    c1: &CochainComplex,
    tau: &PiMap,
    m0: &PiModule,
    m1: &PiModule,
) -> Vec<AbHom> {
    let mut out = Vec::new();
    for n in 0..c0.len() {
        let gens = r.module(n);
        let src = c0.group(n);
        let tgt = c1.group(n);
        let mut pres = IntMatrix::zeros(c1.bases[n].labels.len(), c0.bases[n].labels.len());
        for (col, (gi, k)) in c0.bases[n].labels.iter().enumerate() {
            let gd = gens.generators()[*gi].1;
            let value = module_value_group(m0, gd).generator(*k);
            let moved = tau.apply(gd, &value, &m0.data, &m1.data);
            for (row, (hj, k1)) in c1.bases[n].labels.iter().enumerate() {
                if hj == gi {
                    pres[(row, col)] = moved.coords[*k1].clone();
                }
            }
        }
        out.push(
            AbHom::from_presentation_matrix(src, tgt, &pres)
                .expect("postcomposition respects torsion"),
        );
    }
    out
}

/// Cochain map `C(Y; M1) -> C(X; M1)` given by precomposition with a chain
/// lift `Phi`.
pub fn chain_cochain_maps(
    r_source: &FreeResolution,
    r_target: &FreeResolution,
    lifts: &[FreeModuleMap],
    cy: &CochainComplex,
    cx: &CochainComplex,
    m1: &PiModule,
    stems: &StemTable,
) -> Vec<AbHom> {
    let mut out = Vec::new();
    for n in 0..cx.len() {
        let src = cy.group(n);
        let tgt = cx.group(n);
        let x_gens = r_source.module(n);
        let y_gens = r_target.module(n);
        let y_labels = cy.bases.get(n).map(|b| b.labels.clone()).unwrap_or_default();
        let mut pres = IntMatrix::zeros(cx.bases[n].labels.len(), y_labels.len());
        for (col, (hj, k)) in y_labels.iter().enumerate() {
            let hd = y_gens.generators()[*hj].1;
            let value = module_value_group(m1, hd).generator(*k);
            for (row, (gi, k1)) in cx.bases[n].labels.iter().enumerate() {
                let g_degree = x_gens.generators()[*gi].1;
                let image = match lifts.get(n) {
                    Some(l) => l.images[*gi].clone(),
                    None => crate::resolution::FreeElement::zero(g_degree),
                };
                let mut acc = Int::ZERO;
                for term in &image.terms {
                    if term.generator != *hj {
                        continue;
                    }
                    let moved = m1.data.act(hd, &value, &term.stem, stems);
                    acc += &moved.coords[*k1];
                }
                pres[(row, col)] += &acc;
            }
        }
        out.push(
            AbHom::from_presentation_matrix(src, tgt, &pres)
                .expect("precomposition respects torsion"),
        );
    }
    out
}

/// Postcomposition with a coefficient map, both at cochain level and
/// induced on cohomology (covariant in the module).
pub fn induced_coefficient_map(
    r: &FreeResolution,
    c0: &CochainComplex,
    c1: &CochainComplex,
    tau: &PiMap,
    m0: &PiModule,
    m1: &PiModule,
) -> (Vec<AbHom>, Vec<AbHom>) {
    let cochain = coefficient_cochain_maps(r, c0, c1, tau, m0, m1);
    let induced = cochain
        .iter()
        .enumerate()
        .map(|(n, f)| {
            induced_on_homology(&c0.complex.homology_data(n), &c1.complex.homology_data(n), f)
        })
        .collect();
    (cochain, induced)
}

/// The mapping-cone cochain model for the cohomology of a map:
/// `D^n = C^n(X;M0) (+) C^n(Y;M1) (+) C^{n-1}(X;M1)` with differential
/// `(a, b, c) -> (da, db, tau(a) - Phi(b) - dc)`.
pub struct ArrowCochainComplex {
    pub cone: ChainComplexAb,
    pub cx_m0: CochainComplex,
    pub cy_m1: CochainComplex,
    pub cx_m1: CochainComplex,
    pub tau_maps: Vec<AbHom>,
    pub phi_maps: Vec<AbHom>,
    /// Number of cone degrees (resolution length + 2).
    pub degrees: usize,
}

fn group_at(c: &CochainComplex, n: usize) -> FGAbelianGroup {
    if n < c.len() {
        c.group(n)
    } else {
        FGAbelianGroup::trivial()
    }
}

fn coboundary_at(c: &CochainComplex, n: usize) -> AbHom {
    match c.coboundary(n) {
        Some(h) => h.clone(),
        None => AbHom::zero(&group_at(c, n), &group_at(c, n + 1)),
    }
}

/// The three-block structure of one cone degree.
struct ConeDegree {
    group: FGAbelianGroup,
    incl: Vec<AbHom>,
    proj: Vec<AbHom>,
}

fn cone_degree(arrow_parts: [&FGAbelianGroup; 3]) -> ConeDegree {
    let (group, incl, proj) = crate::hom::direct_sum_with_maps(&arrow_parts);
    ConeDegree { group, incl, proj }
}

impl ArrowCochainComplex {
    pub fn new(
        cx_m0: CochainComplex,
        cy_m1: CochainComplex,
        cx_m1: CochainComplex,
        tau_maps: Vec<AbHom>,
        phi_maps: Vec<AbHom>,
    ) -> Result<ArrowCochainComplex, CohomologyError> {
        if tau_maps.len() != cx_m0.len() || phi_maps.len() != cx_m1.len() {
            return Err(CohomologyError::Incompatible(
                "one structure map per cochain degree".into(),
            ));
        }
        let degrees = cx_m0.len().max(cy_m1.len()).max(cx_m1.len() + 1) + 1;
        let trivial = FGAbelianGroup::trivial();
        let cone_at = |n: usize| {
            let a = group_at(&cx_m0, n);
            let b = group_at(&cy_m1, n);
            let c = if n == 0 { trivial.clone() } else { group_at(&cx_m1, n - 1) };
            cone_degree([&a, &b, &c])
        };
        let cones: Vec<ConeDegree> = (0..degrees).map(cone_at).collect();

        let mut maps = Vec::new();
        for n in 0..degrees - 1 {
            let d_a = coboundary_at(&cx_m0, n);
            let d_b = coboundary_at(&cy_m1, n);
            let target_c = group_at(&cx_m1, n);
            let d_c = if n == 0 {
                AbHom::zero(&trivial, &target_c)
            } else {
                coboundary_at(&cx_m1, n - 1)
            };
            let tau = AbHom::at_or_zero(&tau_maps, n, d_a.source(), &target_c);
            let phi = AbHom::at_or_zero(&phi_maps, n, d_b.source(), &target_c);

            let (this, next) = (&cones[n], &cones[n + 1]);
            // (a, b, c) -> (da, db, tau(a) - phi(b) - dc)
            let block_a = next.incl[0].compose(&d_a).unwrap().compose(&this.proj[0]).unwrap();
            let block_b = next.incl[1].compose(&d_b).unwrap().compose(&this.proj[1]).unwrap();
            let block_c = next.incl[2]
                .compose(&tau.compose(&this.proj[0]).unwrap())
                .unwrap()
                .sub(&next.incl[2].compose(&phi.compose(&this.proj[1]).unwrap()).unwrap())
                .sub(&next.incl[2].compose(&d_c.compose(&this.proj[2]).unwrap()).unwrap());
            maps.push(block_a.add(&block_b).add(&block_c));
        }
        let groups = cones.iter().map(|c| c.group.clone()).collect();
        let cone = ChainComplexAb::cohomological(groups, maps)?;
        Ok(ArrowCochainComplex { cone, cx_m0, cy_m1, cx_m1, tau_maps, phi_maps, degrees })
    }

    pub fn cohomology(&self) -> Vec<FGAbelianGroup> {
        self.cone.all_homology()
    }
}

/// The long exact sequence of the cone, as groups and maps on cohomology.
/// `pair[n] = H^n(X;M0) (+) H^n(Y;M1)`.
#[derive(Clone)]
pub struct LesData {
    pub arrow: Vec<FGAbelianGroup>,
    pub pair: Vec<FGAbelianGroup>,
    pub target: Vec<FGAbelianGroup>,
    pub theta: Vec<AbHom>,
    pub xi: Vec<AbHom>,
    pub connecting: Vec<AbHom>,
}

pub fn les_data(arrow: &ArrowCochainComplex) -> LesData {
    let n_max = arrow.degrees;
    let trivial = FGAbelianGroup::trivial();

    // The pair complex H^n(X;M0) (+) H^n(Y;M1) with blockwise coboundary.
    struct PairDegree {
        group: FGAbelianGroup,
        incl: Vec<AbHom>,
        proj: Vec<AbHom>,
    }
    let pair_at = |n: usize| {
        let a = group_at(&arrow.cx_m0, n);
        let b = group_at(&arrow.cy_m1, n);
        let (group, incl, proj) = crate::hom::direct_sum_with_maps(&[&a, &b]);
        PairDegree { group, incl, proj }
    };
    let pairs: Vec<PairDegree> = (0..n_max).map(pair_at).collect();
    let mut a_maps = Vec::new();
    for n in 0..n_max - 1 {
        let d_a = coboundary_at(&arrow.cx_m0, n);
        let d_b = coboundary_at(&arrow.cy_m1, n);
        let (this, next) = (&pairs[n], &pairs[n + 1]);
        let block_a = next.incl[0].compose(&d_a).unwrap().compose(&this.proj[0]).unwrap();
        let block_b = next.incl[1].compose(&d_b).unwrap().compose(&this.proj[1]).unwrap();
        a_maps.push(block_a.add(&block_b));
    }
    let a_complex = ChainComplexAb::cohomological(
        pairs.iter().map(|p| p.group.clone()).collect(),
        a_maps,
    )
    .expect("pair complex squares to zero");

    let mut arrow_h = Vec::new();
    let mut pair = Vec::new();
    let mut pair_h = Vec::new();
    let mut target_h = Vec::new();
    for n in 0..n_max {
        arrow_h.push(arrow.cone.homology_data(n));
        let pa = a_complex.homology_data(n);
        pair.push(pa.group.clone());
        pair_h.push(pa);
        // out-of-range degrees of C(X;M1) are trivial
        target_h.push(arrow.cx_m1.complex.homology_data(n));
    }

    let mut theta = Vec::new();
    let mut xi = Vec::new();
    let mut connecting = Vec::new();
    for n in 0..n_max {
        let cone_now = cone_degree([
            &group_at(&arrow.cx_m0, n),
            &group_at(&arrow.cy_m1, n),
            &(if n == 0 { trivial.clone() } else { group_at(&arrow.cx_m1, n - 1) }),
        ]);
        // theta: cone -> pair, forgetting the shifted block.
        let theta_cochain = pairs[n].incl[0]
            .compose(&cone_now.proj[0])
            .unwrap()
            .add(&pairs[n].incl[1].compose(&cone_now.proj[1]).unwrap());
        theta.push(induced_on_homology(&arrow_h[n], &pair_h[n], &theta_cochain));

        // xi: pair -> C(X;M1), coefficient pushforward minus restriction.
        let c_target = group_at(&arrow.cx_m1, n);
        let tau = AbHom::at_or_zero(&arrow.tau_maps, n, &group_at(&arrow.cx_m0, n), &c_target);
        let phi = AbHom::at_or_zero(&arrow.phi_maps, n, &group_at(&arrow.cy_m1, n), &c_target);
        let xi_cochain = tau
            .compose(&pairs[n].proj[0])
            .unwrap()
            .sub(&phi.compose(&pairs[n].proj[1]).unwrap());
        xi.push(induced_on_homology(&pair_h[n], &target_h[n], &xi_cochain));

        // connecting: C^n(X;M1) classes include into the cone at n+1.
        if n + 1 < n_max {
            let cone_next = cone_degree([
                &group_at(&arrow.cx_m0, n + 1),
                &group_at(&arrow.cy_m1, n + 1),
                &group_at(&arrow.cx_m1, n),
            ]);
            let conn_cochain = cone_next.incl[2].clone();
            connecting.push(induced_on_homology(&target_h[n], &arrow_h[n + 1], &conn_cochain));
        }
    }

    LesData {
        arrow: arrow_h.iter().map(|h| h.group.clone()).collect(),
        pair,
        target: target_h.iter().map(|h| h.group.clone()).collect(),
        theta,
        xi,
        connecting,
    }
}

/// Verify the long exact sequence
/// `0 -> H^0(cone) -> H^0(X;M0)+H^0(Y;M1) -> H^0(X;M1) -> H^1(cone) -> ...`
/// at every junction.
pub fn assemble_les(data: &LesData) -> ExactnessReport {
    let zero = FGAbelianGroup::trivial();
    let mut seq = vec![AbHom::zero(&zero, &data.arrow[0])];
    for n in 0..data.theta.len() {
        seq.push(data.theta[n].clone());
        seq.push(data.xi[n].clone());
        if n < data.connecting.len() {
            seq.push(data.connecting[n].clone());
        }
    }
    verify_exact(&seq).expect("LES maps are composable by construction")
}

/// The homotopy groups of an extended Eilenberg-MacLane object
/// `E_Lambda(M, n)` as seen through its natural filtration: `Lambda` at 0,
/// the loop algebra at 2, `M` at `n`, the loop module at `n+2`, with the
/// `n = 2` entries merged into a product.
pub fn em_homotopy_profile(
    algebra: &StablePiAlgebra,
    m: &PiModule,
    n: usize,
) -> Vec<(usize, String, GradedData)> {
    assert!(n >= 1, "Eilenberg-MacLane dimension must be at least 1");
    let mut entries: Vec<(usize, String, GradedData)> = Vec::new();
    entries.push((0, algebra.name.clone(), algebra.data.clone()));
    let loop_algebra = algebra.data.looped();
    if n == 2 {
        let merged = product_graded(&loop_algebra, &m.data);
        entries.push((2, format!("loop({}) x {}", algebra.name, m.name), merged));
    } else {
        entries.push((2, format!("loop({})", algebra.name), loop_algebra));
        entries.push((n, m.name.clone(), m.data.clone()));
    }
    entries.push((n + 2, format!("loop({})", m.name), m.data.looped()));
    entries.retain(|(_, _, d)| !d.is_zero());
    entries.sort_by_key(|&(k, _, _)| k);
    entries
}

fn product_graded(a: &GradedData, b: &GradedData) -> GradedData {
    let lo = a.window().0.min(b.window().0);
    let hi = a.window().1.max(b.window().1);
    let groups = (lo..=hi)
        .map(|d| FGAbelianGroup::direct_sum(&[&a.group(d), &b.group(d)]))
        .collect();
    GradedData::new((lo, hi), groups)
}

/// Host groups for the obstruction tower of a map, one stage per
/// coefficient loop: stage `m` reports `H^{m+2}` (existence) and `H^{m+1}`
/// (difference) of the arrow with `loop^m` coefficients, and the same
/// groups for the source algebra alone. Whether the classes vanish is
/// external input; stages whose coefficient window has emptied are marked
/// exhausted rather than zero.
pub struct ObstructionStage {
    pub stage: usize,
    pub window_exhausted: bool,
    pub arrow_existence: FGAbelianGroup,
    pub arrow_difference: FGAbelianGroup,
    pub source_existence: FGAbelianGroup,
    pub source_difference: FGAbelianGroup,
    pub target_existence: FGAbelianGroup,
    pub target_difference: FGAbelianGroup,
}

pub struct ObstructionReport {
    pub stages: Vec<ObstructionStage>,
}

#[allow(clippy::too_many_arguments)]
pub fn obstruction_report(
    phi: &PiMap,
    source_algebra: &StablePiAlgebra,
    target_algebra: &StablePiAlgebra,
    r_source: &FreeResolution,
    r_target: &FreeResolution,
    lifts: &[FreeModuleMap],
    max_stage: usize,
    stems: &StemTable,
) -> Result<ObstructionReport, CohomologyError> {
    let mut stages = Vec::new();
    let mut m0 = source_algebra.loop_module();
    let mut m1_over_target = PiModule::new(
        &format!("loop({})", target_algebra.name),
        &target_algebra.name,
        target_algebra.data.looped(),
    );
    let mut tau = phi.looped();
    for stage in 1..=max_stage {
        let cx0 = build_hom_complex(r_source, &m0, stems)?;
        let cy1 = build_hom_complex(r_target, &m1_over_target, stems)?;
        let m1_over_source = PiModule::new(
            &m1_over_target.name,
            &source_algebra.name,
            m1_over_target.data.clone(),
        );
        let cx1 = build_hom_complex(r_source, &m1_over_source, stems)?;
        let tau_maps =
            coefficient_cochain_maps(r_source, &cx0, &cx1, &tau, &m0, &m1_over_source);
        let phi_maps = chain_cochain_maps(
            r_source,
            r_target,
            lifts,
            &cy1,
            &cx1,
            &m1_over_source,
            stems,
        );
        let arrow = ArrowCochainComplex::new(cx0.clone(), cy1, cx1, tau_maps, phi_maps)?;
        // Exhausted: the truncation window leaves no cochains at all where
        // the host groups would live, so their vanishing carries no content.
        let cone_dim_at = |i: usize| {
            arrow.cone.group(i).map(|g| !g.is_trivial()).unwrap_or(false)
        };
        let window_exhausted = !cone_dim_at(stage + 1) && !cone_dim_at(stage + 2);
        let h = arrow.cohomology();
        let take = |v: &[FGAbelianGroup], i: usize| {
            v.get(i).cloned().unwrap_or_else(FGAbelianGroup::trivial)
        };
        let source_h = cx0.cohomology();
        let target_h = arrow.cy_m1.cohomology();
        stages.push(ObstructionStage {
            stage,
            window_exhausted,
            arrow_existence: take(&h, stage + 2),
            arrow_difference: take(&h, stage + 1),
            source_existence: take(&source_h, stage + 2),
            source_difference: take(&source_h, stage + 1),
            target_existence: take(&target_h, stage + 2),
            target_difference: take(&target_h, stage + 1),
        });
        m0 = m0.looped();
        m1_over_target = m1_over_target.looped();
        tau = tau.looped();
    }
    Ok(ObstructionReport { stages })
}
