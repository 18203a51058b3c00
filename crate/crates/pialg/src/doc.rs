//! The JSON input document: stems, algebras, modules, maps, resolutions and
//! brackets, joined by name, resolved into the typed model. Matrices are
//! nested row arrays (one inner array per row) on canonical coordinates.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{GradedData, PiMap, PiModule, StablePiAlgebra};
use crate::group::FGAbelianGroup;
use crate::int::Int;
use crate::matrix::IntMatrix;
use crate::resolution::{FreeElement, FreeGradedModule, FreeModuleMap, FreeResolution, FreeTerm};
use crate::stems::{StemError, StemTable};
use crate::toda::{self, ElementSet, Reading, TodaBracketCoset};

#[derive(Debug, Error)]
pub enum DocError {
    #[error("document is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },
    #[error("{kind} `{name}` is declared twice")]
    DuplicateName { kind: &'static str, name: String },
    #[error("`{name}`: degree {degree} is outside the declared window [{lo}, {hi}]")]
    DegreeOutsideWindow { name: String, degree: i64, lo: i64, hi: i64 },
    #[error("`{name}`: {detail}")]
    Shape { name: String, detail: String },
    #[error(transparent)]
    Stems(#[from] StemError),
    #[error("bracket `{name}`: {detail}")]
    Bracket { name: String, detail: String },
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stems: Option<StemsSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub algebras: Vec<AlgebraSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modules: Vec<ModuleSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub maps: Vec<MapSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub resolutions: Vec<ResolutionSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub brackets: Vec<BracketSection>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StemsSection {
    pub degrees: Vec<StemDegreeSpec>,
    #[serde(default)]
    pub products: Vec<StemProductSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StemDegreeSpec {
    pub degree: i64,
    #[serde(default)]
    pub rank: usize,
    #[serde(default)]
    pub invariant_factors: Vec<i64>,
    #[serde(default)]
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StemProductSpec {
    pub left: String,
    pub right: String,
    /// The product as an integer multiple of a named generator; omit for a
    /// zero product.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<StemTermRef>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StemTermRef {
    pub coeff: i64,
    pub generator: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSection {
    pub name: String,
    pub window: [i64; 2],
    pub groups: Vec<GroupSpec>,
    #[serde(default)]
    pub actions: Vec<ActionSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub degree: i64,
    #[serde(default)]
    pub rank: usize,
    #[serde(default)]
    pub invariant_factors: Vec<i64>,
    #[serde(default)]
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    pub degree: i64,
    pub stem: String,
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSection {
    pub name: String,
    pub base: String,
    /// Derive the data by looping a named algebra or module; a base that
    /// differs from the looped object's base is a restriction of scalars.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub loop_of: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub groups: Vec<GroupSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub actions: Vec<ActionSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSection {
    pub name: String,
    pub source: String,
    pub target: String,
    /// For module maps: the underlying algebra map.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub over: Option<String>,
    /// Derive the components by looping another map.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub loop_of: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<ComponentSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSpec {
    pub degree: i64,
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolutionSection {
    pub name: String,
    pub algebra: String,
    /// Generators per level, level 0 first.
    pub levels: Vec<Vec<GeneratorSpec>>,
    /// One entry per differential `V_{k+1} -> V_k`, aligned with levels 1+.
    #[serde(default)]
    pub differentials: Vec<Vec<ImageSpec>>,
    pub augmentation: Vec<AugmentationSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImageSpec {
    pub generator: String,
    #[serde(default)]
    pub image: Vec<TermSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub generator: String,
    pub stem: String,
    pub coeff: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AugmentationSpec {
    pub generator: String,
    pub coords: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketSection {
    pub name: String,
    /// Graded carrier of the bracket (an algebra name).
    pub algebra: String,
    pub f: StemRefSpec,
    pub g: StemRefSpec,
    pub h: ElementSpec,
    pub representative: Vec<i64>,
    /// Alternative recorded values of the same bracket, as explicit sets.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub readings: Vec<ReadingSpec>,
    /// Push this bracket along the named map when reporting obstructions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pushforward_along: Option<String>,
    /// Compare the pushed set against this bracket (by name).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub compare_with: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StemRefSpec {
    pub stem: String,
    #[serde(default = "one")]
    pub coeff: i64,
}

fn one() -> i64 {
    1
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementSpec {
    pub degree: i64,
    pub coords: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReadingSpec {
    pub label: String,
    pub elements: Vec<Vec<i64>>,
}

/// A resolved bracket with its comparison directives.
pub struct BracketModel {
    pub algebra: String,
    pub coset: TodaBracketCoset,
    pub readings: Vec<Reading>,
    pub pushforward_along: Option<String>,
    pub compare_with: Option<String>,
}

/// The typed model a document resolves to.
pub struct Model {
    pub stems: StemTable,
    pub algebras: BTreeMap<String, StablePiAlgebra>,
    pub modules: BTreeMap<String, PiModule>,
    pub maps: BTreeMap<String, PiMap>,
    /// resolution name -> (algebra name, resolution)
    pub resolutions: BTreeMap<String, (String, FreeResolution)>,
    pub brackets: BTreeMap<String, BracketModel>,
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<InputDocument, DocError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn resolve(&self) -> Result<Model, DocError> {
        let stems = match &self.stems {
            None => StemTable::standard(),
            Some(section) => resolve_stems(section)?,
        };

        let mut algebras = BTreeMap::new();
        for a in &self.algebras {
            let data = resolve_graded(&a.name, a.window, &a.groups, &a.actions, &stems)?;
            if algebras
                .insert(a.name.clone(), StablePiAlgebra::new(&a.name, data))
                .is_some()
            {
                return Err(DocError::DuplicateName { kind: "algebra", name: a.name.clone() });
            }
        }

        let mut modules: BTreeMap<String, PiModule> = BTreeMap::new();
        for m in &self.modules {
            if !algebras.contains_key(&m.base) {
                return Err(DocError::UnknownName { kind: "algebra", name: m.base.clone() });
            }
            let data = match &m.loop_of {
                Some(source) => {
                    if let Some(a) = algebras.get(source) {
                        a.data.looped()
                    } else if let Some(prev) = modules.get(source) {
                        prev.data.looped()
                    } else {
                        return Err(DocError::UnknownName {
                            kind: "algebra or module",
                            name: source.clone(),
                        });
                    }
                }
                None => {
                    let window = m.window.ok_or_else(|| DocError::Shape {
                        name: m.name.clone(),
                        detail: "a module needs either `loop_of` or an explicit `window`".into(),
                    })?;
                    resolve_graded(&m.name, window, &m.groups, &m.actions, &stems)?
                }
            };
            if modules
                .insert(m.name.clone(), PiModule::new(&m.name, &m.base, data))
                .is_some()
            {
                return Err(DocError::DuplicateName { kind: "module", name: m.name.clone() });
            }
        }

        let mut maps: BTreeMap<String, PiMap> = BTreeMap::new();
        for m in &self.maps {
            let lookup_window = |name: &str| -> Option<(i64, i64)> {
                algebras
                    .get(name)
                    .map(|a| a.data.window())
                    .or_else(|| modules.get(name).map(|m| m.data.window()))
            };
            let src_window = lookup_window(&m.source).ok_or_else(|| DocError::UnknownName {
                kind: "algebra or module",
                name: m.source.clone(),
            })?;
            let tgt_window = lookup_window(&m.target).ok_or_else(|| DocError::UnknownName {
                kind: "algebra or module",
                name: m.target.clone(),
            })?;
            let mut map = match &m.loop_of {
                Some(base) => {
                    let prev = maps.get(base).ok_or_else(|| DocError::UnknownName {
                        kind: "map",
                        name: base.clone(),
                    })?;
                    let mut looped = prev.looped();
                    looped.name = m.name.clone();
                    looped.source = m.source.clone();
                    looped.target = m.target.clone();
                    looped
                }
                None => {
                    let mut components = BTreeMap::new();
                    for c in &m.components {
                        let lo = src_window.0.min(tgt_window.0);
                        let hi = src_window.1.max(tgt_window.1);
                        if c.degree < lo || c.degree > hi {
                            return Err(DocError::DegreeOutsideWindow {
                                name: m.name.clone(),
                                degree: c.degree,
                                lo,
                                hi,
                            });
                        }
                        components.insert(c.degree, matrix_from_rows(&m.name, &c.matrix)?);
                    }
                    PiMap::new(&m.name, &m.source, &m.target, components)
                }
            };
            map.over = m.over.clone();
            if let Some(over) = &m.over {
                if !maps.contains_key(over) && m.loop_of.as_deref() != Some(over.as_str()) {
                    return Err(DocError::UnknownName { kind: "map", name: over.clone() });
                }
            }
            if maps.insert(m.name.clone(), map).is_some() {
                return Err(DocError::DuplicateName { kind: "map", name: m.name.clone() });
            }
        }

        let mut resolutions = BTreeMap::new();
        for r in &self.resolutions {
            let algebra = algebras.get(&r.algebra).ok_or_else(|| DocError::UnknownName {
                kind: "algebra",
                name: r.algebra.clone(),
            })?;
            let resolved = resolve_resolution(r, algebra, &stems)?;
            if resolutions
                .insert(r.name.clone(), (r.algebra.clone(), resolved))
                .is_some()
            {
                return Err(DocError::DuplicateName { kind: "resolution", name: r.name.clone() });
            }
        }

        let mut brackets = BTreeMap::new();
        for b in &self.brackets {
            let algebra = algebras.get(&b.algebra).ok_or_else(|| DocError::UnknownName {
                kind: "algebra",
                name: b.algebra.clone(),
            })?;
            let data = &algebra.data;
            let f = stems
                .scaled(b.f.coeff, &b.f.stem)
                .map_err(DocError::Stems)?;
            let g = stems
                .scaled(b.g.coeff, &b.g.stem)
                .map_err(DocError::Stems)?;
            let h_group = data.group(b.h.degree);
            if b.h.coords.len() != h_group.canonical_dim() {
                return Err(DocError::Bracket {
                    name: b.name.clone(),
                    detail: format!(
                        "h has {} coordinates, the group at its degree needs {}",
                        b.h.coords.len(),
                        h_group.canonical_dim()
                    ),
                });
            }
            let triple = toda::BracketTriple::new(
                data,
                &stems,
                f,
                g,
                b.h.degree,
                h_group.element_from_i64(&b.h.coords),
            )
            .map_err(|e| DocError::Bracket { name: b.name.clone(), detail: e.to_string() })?;
            let ambient = data.group(triple.ambient_degree());
            if b.representative.len() != ambient.canonical_dim() {
                return Err(DocError::Bracket {
                    name: b.name.clone(),
                    detail: "representative does not fit the ambient group".into(),
                });
            }
            let coset = toda::bracket(
                &triple,
                data,
                &stems,
                ambient.element_from_i64(&b.representative),
            )
            .map_err(|e| DocError::Bracket { name: b.name.clone(), detail: e.to_string() })?;
            let readings = b
                .readings
                .iter()
                .map(|r| Reading {
                    label: r.label.clone(),
                    set: ElementSet::from_elements(
                        &ambient,
                        triple.ambient_degree(),
                        r.elements.iter().map(|c| ambient.element_from_i64(c)).collect(),
                    ),
                })
                .collect();
            if let Some(map) = &b.pushforward_along {
                if !maps.contains_key(map) {
                    return Err(DocError::UnknownName { kind: "map", name: map.clone() });
                }
            }
            if brackets.contains_key(&b.name) {
                return Err(DocError::DuplicateName { kind: "bracket", name: b.name.clone() });
            }
            brackets.insert(
                b.name.clone(),
                BracketModel {
                    algebra: b.algebra.clone(),
                    coset,
                    readings,
                    pushforward_along: b.pushforward_along.clone(),
                    compare_with: b.compare_with.clone(),
                },
            );
        }
        // compare_with names resolve among the brackets themselves
        for (name, b) in &brackets {
            if let Some(other) = &b.compare_with {
                if !brackets.contains_key(other) {
                    return Err(DocError::Bracket {
                        name: name.clone(),
                        detail: format!("compare_with `{other}` does not resolve"),
                    });
                }
            }
        }

        Ok(Model { stems, algebras, modules, maps, resolutions, brackets })
    }
}

fn resolve_stems(section: &StemsSection) -> Result<StemTable, DocError> {
    let max = section.degrees.iter().map(|d| d.degree).max().unwrap_or(0);
    let mut groups = vec![FGAbelianGroup::trivial(); (max + 1) as usize];
    let mut names = vec![Vec::new(); (max + 1) as usize];
    for d in &section.degrees {
        if d.degree < 0 {
            return Err(DocError::Shape {
                name: "stems".into(),
                detail: "stem degrees start at 0".into(),
            });
        }
        let g = group_from_spec(d.rank, &d.invariant_factors);
        let idx = d.degree as usize;
        names[idx] = if d.generators.is_empty() {
            (0..g.canonical_dim()).map(|k| format!("pi{}_{k}", d.degree)).collect()
        } else {
            d.generators.clone()
        };
        groups[idx] = g;
    }
    // build a provisional table to look names up, then install products
    let provisional = StemTable::new(groups.clone(), names.clone(), BTreeMap::new())?;
    let mut products = BTreeMap::new();
    for p in &section.products {
        let left = provisional.named(&p.left)?;
        let right = provisional.named(&p.right)?;
        let coords = match &p.result {
            None => provisional.zero(left.degree + right.degree).coords,
            Some(term) => {
                let gen = provisional.named(&term.generator)?;
                if gen.degree != left.degree + right.degree {
                    return Err(DocError::Shape {
                        name: "stems".into(),
                        detail: format!(
                            "product {}*{} must land in degree {}, but `{}` has degree {}",
                            p.left,
                            p.right,
                            left.degree + right.degree,
                            term.generator,
                            gen.degree
                        ),
                    });
                }
                provisional.scale(&Int::from(term.coeff), &gen).coords
            }
        };
        products.insert((p.left.clone(), p.right.clone()), coords);
    }
    Ok(StemTable::new(groups, names, products)?)
}

fn group_from_spec(rank: usize, invariant_factors: &[i64]) -> FGAbelianGroup {
    FGAbelianGroup::canonical(rank, invariant_factors.iter().map(|&t| Int::from(t)).collect())
}

fn matrix_from_rows(owner: &str, rows: &[Vec<i64>]) -> Result<IntMatrix, DocError> {
    let r = rows.len();
    let c = rows.first().map(Vec::len).unwrap_or(0);
    if rows.iter().any(|row| row.len() != c) {
        return Err(DocError::Shape {
            name: owner.to_string(),
            detail: "matrix rows have unequal lengths".into(),
        });
    }
    Ok(IntMatrix::from_fn(r, c, |i, j| Int::from(rows[i][j])))
}

fn resolve_graded(
    name: &str,
    window: [i64; 2],
    groups: &[GroupSpec],
    actions: &[ActionSpec],
    stems: &StemTable,
) -> Result<GradedData, DocError> {
    let (lo, hi) = (window[0], window[1]);
    if lo > hi {
        return Err(DocError::Shape {
            name: name.to_string(),
            detail: format!("window [{lo}, {hi}] is empty"),
        });
    }
    let mut by_degree: BTreeMap<i64, &GroupSpec> = BTreeMap::new();
    for g in groups {
        if g.degree < lo || g.degree > hi {
            return Err(DocError::DegreeOutsideWindow {
                name: name.to_string(),
                degree: g.degree,
                lo,
                hi,
            });
        }
        if by_degree.insert(g.degree, g).is_some() {
            return Err(DocError::Shape {
                name: name.to_string(),
                detail: format!("degree {} declared twice", g.degree),
            });
        }
    }
    let mut data = GradedData::new(
        (lo, hi),
        (lo..=hi)
            .map(|d| {
                by_degree
                    .get(&d)
                    .map(|g| group_from_spec(g.rank, &g.invariant_factors))
                    .unwrap_or_else(FGAbelianGroup::trivial)
            })
            .collect(),
    );
    for (d, g) in &by_degree {
        if !g.generators.is_empty() {
            if g.generators.len() != data.group(*d).canonical_dim() {
                return Err(DocError::Shape {
                    name: name.to_string(),
                    detail: format!("degree {d}: generator names do not match the group"),
                });
            }
            data.set_generator_names(*d, g.generators.clone());
        }
    }
    for a in actions {
        let theta = stems.named(&a.stem)?;
        if a.degree < lo || a.degree + theta.degree > hi {
            return Err(DocError::DegreeOutsideWindow {
                name: name.to_string(),
                degree: a.degree,
                lo,
                hi,
            });
        }
        data.set_action(a.degree, &a.stem, matrix_from_rows(name, &a.matrix)?);
    }
    Ok(data)
}

fn resolve_resolution(
    section: &ResolutionSection,
    algebra: &StablePiAlgebra,
    stems: &StemTable,
) -> Result<FreeResolution, DocError> {
    let (lo, hi) = algebra.data.window();
    let mut modules = Vec::new();
    for level in &section.levels {
        let mut seen = std::collections::BTreeSet::new();
        for g in level {
            if !seen.insert(&g.name) {
                return Err(DocError::DuplicateName { kind: "generator", name: g.name.clone() });
            }
            if g.degree > hi || g.degree + stems.max_degree() < lo {
                return Err(DocError::DegreeOutsideWindow {
                    name: section.name.clone(),
                    degree: g.degree,
                    lo,
                    hi,
                });
            }
        }
        modules.push(FreeGradedModule::new(
            level.iter().map(|g| (g.name.clone(), g.degree)).collect(),
        ));
    }
    if modules.is_empty() {
        return Err(DocError::Shape {
            name: section.name.clone(),
            detail: "a resolution needs at least level 0".into(),
        });
    }
    if section.differentials.len() + 1 != modules.len() {
        return Err(DocError::Shape {
            name: section.name.clone(),
            detail: "one differential per level above 0".into(),
        });
    }

    let mut differentials = Vec::new();
    for (k, images_spec) in section.differentials.iter().enumerate() {
        let source = &modules[k + 1];
        let target = &modules[k];
        let mut images = vec![None; source.generators().len()];
        for spec in images_spec {
            let gi = source.generator_index(&spec.generator).ok_or_else(|| {
                DocError::UnknownName { kind: "generator", name: spec.generator.clone() }
            })?;
            let gd = source.generators()[gi].1;
            let mut terms = Vec::new();
            for term in &spec.image {
                let ti = target.generator_index(&term.generator).ok_or_else(|| {
                    DocError::UnknownName { kind: "generator", name: term.generator.clone() }
                })?;
                let td = target.generators()[ti].1;
                let stem = stems.scaled(term.coeff, &term.stem)?;
                if td + stem.degree != gd {
                    return Err(DocError::Shape {
                        name: section.name.clone(),
                        detail: format!(
                            "term {}.{} in the image of {} has degree {}, expected {}",
                            term.generator,
                            term.stem,
                            spec.generator,
                            td + stem.degree,
                            gd
                        ),
                    });
                }
                terms.push(FreeTerm { generator: ti, stem });
            }
            images[gi] = Some(FreeElement { degree: gd, terms });
        }
        let images: Vec<FreeElement> = images
            .into_iter()
            .enumerate()
            .map(|(gi, img)| img.unwrap_or_else(|| FreeElement::zero(source.generators()[gi].1)))
            .collect();
        let map = FreeModuleMap::new(source.clone(), target.clone(), images).map_err(|e| {
            DocError::Shape { name: section.name.clone(), detail: e.to_string() }
        })?;
        differentials.push(map);
    }

    let v0 = &modules[0];
    let mut augmentation = vec![None; v0.generators().len()];
    for a in &section.augmentation {
        let gi = v0.generator_index(&a.generator).ok_or_else(|| DocError::UnknownName {
            kind: "generator",
            name: a.generator.clone(),
        })?;
        let gd = v0.generators()[gi].1;
        let group = algebra.data.group(gd);
        if a.coords.len() != group.canonical_dim() {
            return Err(DocError::Shape {
                name: section.name.clone(),
                detail: format!("augmentation of {} does not fit the algebra", a.generator),
            });
        }
        augmentation[gi] = Some(group.element_from_i64(&a.coords));
    }
    let augmentation: Vec<_> = augmentation
        .into_iter()
        .enumerate()
        .map(|(gi, a)| a.unwrap_or_else(|| algebra.data.group(v0.generators()[gi].1).zero()))
        .collect();

    Ok(FreeResolution { modules, differentials, augmentation })
}
