//! Truncated stable Pi-algebras and their modules: graded finitely
//! generated abelian groups on a degree window with a right action of the
//! stem table, maps between them, loop shift, and axiom validation.
//!
//! Degrees are relative: the anchor degree prints as `n`, so a window
//! `[0, 2]` is the slice `n..n+2`. In the stable range the bracket pairing
//! on any module is trivial, so modules carry only the stem action and a
//! `trivial_brackets` marker.

use std::collections::BTreeMap;
use std::fmt;

use crate::group::{FGAbelianGroup, GroupElement};
use crate::matrix::IntMatrix;
use crate::stems::{StemElement, StemTable};

/// Graded groups on a window with a stored action of the named stem
/// generators. Shared shape of algebras and modules.
#[derive(Clone)]
pub struct GradedData {
    window: (i64, i64),
    groups: Vec<FGAbelianGroup>,
    gen_names: Vec<Vec<String>>,
    /// `(degree, stem generator) -> matrix` on canonical coordinates,
    /// mapping `groups[d]` to `groups[d + |gen|]`. Missing entries act by 0.
    action: BTreeMap<(i64, String), IntMatrix>,
}

impl GradedData {
    pub fn new(window: (i64, i64), groups: Vec<FGAbelianGroup>) -> GradedData {
        assert!(window.0 <= window.1 + 1, "empty windows are (lo, lo-1)");
        assert_eq!(groups.len() as i64, window.1 - window.0 + 1);
        let gen_names = groups
            .iter()
            .enumerate()
            .map(|(i, g)| {
                (0..g.canonical_dim())
                    .map(|k| format!("g{}_{}", window.0 + i as i64, k))
                    .collect()
            })
            .collect();
        GradedData { window, groups, gen_names, action: BTreeMap::new() }
    }

    pub fn empty(window: (i64, i64)) -> GradedData {
        let n = (window.1 - window.0 + 1).max(0) as usize;
        GradedData::new(window, vec![FGAbelianGroup::trivial(); n])
    }

    pub fn window(&self) -> (i64, i64) {
        self.window
    }

    pub fn in_window(&self, d: i64) -> bool {
        d >= self.window.0 && d <= self.window.1
    }

    pub fn group(&self, d: i64) -> FGAbelianGroup {
        if self.in_window(d) {
            self.groups[(d - self.window.0) as usize].clone()
        } else {
            FGAbelianGroup::trivial()
        }
    }

    pub fn generator_names(&self, d: i64) -> Vec<String> {
        if self.in_window(d) {
            self.gen_names[(d - self.window.0) as usize].clone()
        } else {
            vec![]
        }
    }

    pub fn set_generator_names(&mut self, d: i64, names: Vec<String>) {
        assert!(self.in_window(d));
        assert_eq!(names.len(), self.group(d).canonical_dim());
        self.gen_names[(d - self.window.0) as usize] = names;
    }

    pub fn set_action(&mut self, d: i64, gen: &str, matrix: IntMatrix) {
        self.action.insert((d, gen.to_string()), matrix);
    }

    pub fn action_entries(&self) -> impl Iterator<Item = (&(i64, String), &IntMatrix)> {
        self.action.iter()
    }

    /// Raw stored matrix for a generator action, zero if absent.
    pub fn action_matrix(&self, d: i64, gen: &str, stems: &StemTable) -> IntMatrix {
        let gen_degree = stems
            .named(gen)
            .map(|e| e.degree)
            .expect("action generators come from the stem table");
        let rows = self.group(d + gen_degree).canonical_dim();
        let cols = self.group(d).canonical_dim();
        match self.action.get(&(d, gen.to_string())) {
            Some(m) => m.clone(),
            None => IntMatrix::zeros(rows, cols),
        }
    }

    /// Matrix of the action of an arbitrary stem element at degree `d`,
    /// extended bilinearly from the stored generator actions.
    pub fn action_of(&self, d: i64, theta: &StemElement, stems: &StemTable) -> IntMatrix {
        let rows = self.group(d + theta.degree).canonical_dim();
        let cols = self.group(d).canonical_dim();
        let mut acc = IntMatrix::zeros(rows, cols);
        if theta.degree == 0 {
            // iota acts as the identity, scaled.
            let c = &theta.coords[0];
            for i in 0..rows.min(cols) {
                acc[(i, i)] = c.clone();
            }
            return acc;
        }
        for (k, c) in theta.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = &stems.generator_names(theta.degree)[k];
            let m = self.action_matrix(d, name, stems);
            for i in 0..rows {
                for j in 0..cols {
                    acc[(i, j)] += &(c * &m[(i, j)]);
                }
            }
        }
        acc
    }

    /// Right action `x . theta`, landing in degree `d + |theta|` (zero
    /// outside the window).
    pub fn act(
        &self,
        d: i64,
        x: &GroupElement,
        theta: &StemElement,
        stems: &StemTable,
    ) -> GroupElement {
        let target = self.group(d + theta.degree);
        if !self.in_window(d) || !self.in_window(d + theta.degree) {
            return target.zero();
        }
        let m = self.action_of(d, theta, stems);
        target.reduce(m.mul_vec(&x.coords))
    }

    /// Degree shift down by one: `(loop M)_d = M_{d+1}`.
    pub fn looped(&self) -> GradedData {
        let window = (self.window.0 - 1, self.window.1 - 1);
        let action = self
            .action
            .iter()
            .map(|((d, g), m)| ((d - 1, g.clone()), m.clone()))
            .collect();
        GradedData {
            window,
            groups: self.groups.clone(),
            gen_names: self.gen_names.clone(),
            action,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.groups.iter().all(FGAbelianGroup::is_trivial)
    }

    /// Check the action axioms: every stored matrix is a genuine hom
    /// (respects torsion) and the action is associative against the stem
    /// composition wherever both sides land in the window. The unit axiom
    /// holds by construction since `iota` is never stored.
    pub fn validate(&self, stems: &StemTable) -> Vec<Violation> {
        let mut out = Vec::new();
        for ((d, gen), m) in &self.action {
            let Ok(theta) = stems.named(gen) else {
                out.push(Violation::UnknownStemGenerator { degree: *d, generator: gen.clone() });
                continue;
            };
            if theta.degree == 0 {
                out.push(Violation::UnitActionStored { degree: *d });
                continue;
            }
            let src = self.group(*d);
            let tgt = self.group(d + theta.degree);
            match crate::hom::AbHom::new(src, tgt, m.clone()) {
                Ok(_) => {}
                Err(e) => out.push(Violation::NotAHom {
                    degree: *d,
                    generator: gen.clone(),
                    detail: e.to_string(),
                }),
            }
        }
        // Associativity: (x.a).b = x.(a b) on named generators.
        let names: Vec<(String, i64)> = (1..=stems.max_degree())
            .flat_map(|deg| {
                stems.generator_names(deg).iter().map(move |n| (n.clone(), deg))
            })
            .collect();
        for (a, da) in &names {
            for (b, db) in &names {
                let ab = stems.compose(&stems.named(a).unwrap(), &stems.named(b).unwrap());
                for d in self.window.0..=self.window.1 {
                    if d + da + db > self.window.1 {
                        continue;
                    }
                    let lhs = &self.action_matrix(d + da, b, stems) * &self.action_matrix(d, a, stems);
                    let rhs = self.action_of(d, &ab, stems);
                    let tgt = self.group(d + da + db);
                    let lhs_red = reduce_columns(&tgt, &lhs);
                    let rhs_red = reduce_columns(&tgt, &rhs);
                    if lhs_red != rhs_red {
                        let src = self.group(d);
                        let witness = (0..src.canonical_dim())
                            .find(|&j| lhs_red.column(j) != rhs_red.column(j));
                        out.push(Violation::NotAssociative {
                            degree: d,
                            first: a.clone(),
                            second: b.clone(),
                            witness_generator: witness
                                .map(|j| self.generator_names(d)[j].clone())
                                .unwrap_or_default(),
                        });
                    }
                }
            }
        }
        out
    }
}

fn reduce_columns(target: &FGAbelianGroup, m: &IntMatrix) -> IntMatrix {
    let mut out = IntMatrix::zeros(m.rows(), m.cols());
    for j in 0..m.cols() {
        out.set_column(j, &target.reduce(m.column(j)).coords);
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    UnknownStemGenerator { degree: i64, generator: String },
    UnitActionStored { degree: i64 },
    NotAHom { degree: i64, generator: String, detail: String },
    NotAssociative { degree: i64, first: String, second: String, witness_generator: String },
    NotEquivariant { degree: i64, generator: String, witness_generator: String },
    BadComponent { degree: i64, detail: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownStemGenerator { degree, generator } => {
                write!(f, "degree {degree}: unknown stem generator `{generator}`")
            }
            Violation::UnitActionStored { degree } => {
                write!(f, "degree {degree}: the unit action must not be stored explicitly")
            }
            Violation::NotAHom { degree, generator, detail } => {
                write!(f, "degree {degree}: action of `{generator}` is not a homomorphism ({detail})")
            }
            Violation::NotAssociative { degree, first, second, witness_generator } => write!(
                f,
                "degree {degree}: (x.{first}).{second} != x.({first}.{second}) \
                 on generator `{witness_generator}`"
            ),
            Violation::NotEquivariant { degree, generator, witness_generator } => write!(
                f,
                "degree {degree}: map does not commute with `{generator}` \
                 on generator `{witness_generator}`"
            ),
            Violation::BadComponent { degree, detail } => {
                write!(f, "degree {degree}: bad component ({detail})")
            }
        }
    }
}

#[derive(Clone)]
pub struct StablePiAlgebra {
    pub name: String,
    pub data: GradedData,
}

#[derive(Clone)]
pub struct PiModule {
    pub name: String,
    /// Name of the base algebra this module lives over.
    pub base: String,
    pub data: GradedData,
    /// In the stable range every bracket pairing is trivial; recorded, never
    /// computed.
    pub trivial_brackets: bool,
}

impl StablePiAlgebra {
    pub fn new(name: &str, data: GradedData) -> StablePiAlgebra {
        StablePiAlgebra { name: name.to_string(), data }
    }

    pub fn validate(&self, stems: &StemTable) -> Vec<Violation> {
        self.data.validate(stems)
    }

    /// The loop module over this algebra: degree shift down by one.
    pub fn loop_module(&self) -> PiModule {
        PiModule {
            name: format!("loop({})", self.name),
            base: self.name.clone(),
            data: self.data.looped(),
            trivial_brackets: true,
        }
    }
}

impl PiModule {
    pub fn new(name: &str, base: &str, data: GradedData) -> PiModule {
        PiModule { name: name.to_string(), base: base.to_string(), data, trivial_brackets: true }
    }

    pub fn looped(&self) -> PiModule {
        PiModule {
            name: format!("loop({})", self.name),
            base: self.base.clone(),
            data: self.data.looped(),
            trivial_brackets: self.trivial_brackets,
        }
    }

    pub fn validate(&self, stems: &StemTable) -> Vec<Violation> {
        self.data.validate(stems)
    }
}

/// Restriction of scalars along `phi`: the graded groups are untouched,
/// only the base reference changes.
pub fn restrict_scalars(module: &PiModule, phi: &PiMap) -> PiModule {
    assert_eq!(module.base, phi.target, "module must live over the map's target");
    PiModule {
        name: module.name.clone(),
        base: phi.source.clone(),
        data: module.data.clone(),
        trivial_brackets: module.trivial_brackets,
    }
}

/// A degreewise map of graded data, commuting with the stem action.
/// Used both for maps of algebras and for coefficient maps of modules
/// (the latter over an underlying algebra map).
#[derive(Clone)]
pub struct PiMap {
    pub name: String,
    pub source: String,
    pub target: String,
    /// Canonical-coordinate component per degree; absent degrees are zero.
    pub components: BTreeMap<i64, IntMatrix>,
    /// For module maps: the name of the underlying algebra map.
    pub over: Option<String>,
}

impl PiMap {
    pub fn new(
        name: &str,
        source: &str,
        target: &str,
        components: BTreeMap<i64, IntMatrix>,
    ) -> PiMap {
        PiMap {
            name: name.to_string(),
            source: source.to_string(),
            target: target.to_string(),
            components,
            over: None,
        }
    }

    pub fn component(&self, d: i64, src: &GradedData, tgt: &GradedData) -> IntMatrix {
        match self.components.get(&d) {
            Some(m) => m.clone(),
            None => IntMatrix::zeros(
                tgt.group(d).canonical_dim(),
                src.group(d).canonical_dim(),
            ),
        }
    }

    pub fn apply(
        &self,
        d: i64,
        x: &GroupElement,
        src: &GradedData,
        tgt: &GradedData,
    ) -> GroupElement {
        let m = self.component(d, src, tgt);
        tgt.group(d).reduce(m.mul_vec(&x.coords))
    }

    /// Shift all components down one degree: the coefficient map induced
    /// between the loop modules.
    pub fn looped(&self) -> PiMap {
        PiMap {
            name: format!("loop({})", self.name),
            source: format!("loop({})", self.source),
            target: format!("loop({})", self.target),
            components: self
                .components
                .iter()
                .map(|(d, m)| (d - 1, m.clone()))
                .collect(),
            over: self.over.clone(),
        }
    }

    /// Component shapes, torsion, and equivariance against every stored
    /// stem generator action, wherever source degrees stay in-window.
    pub fn validate(
        &self,
        src: &GradedData,
        tgt: &GradedData,
        stems: &StemTable,
    ) -> Vec<Violation> {
        let mut out = Vec::new();
        for (d, m) in &self.components {
            let sg = src.group(*d);
            let tg = tgt.group(*d);
            if m.rows() != tg.canonical_dim() || m.cols() != sg.canonical_dim() {
                out.push(Violation::BadComponent {
                    degree: *d,
                    detail: format!(
                        "component is {}x{}, expected {}x{}",
                        m.rows(),
                        m.cols(),
                        tg.canonical_dim(),
                        sg.canonical_dim()
                    ),
                });
                continue;
            }
            if let Err(e) = crate::hom::AbHom::new(sg, tg, m.clone()) {
                out.push(Violation::BadComponent { degree: *d, detail: e.to_string() });
            }
        }
        if !out.is_empty() {
            return out;
        }
        let lo = src.window().0.min(tgt.window().0);
        let hi = src.window().1.max(tgt.window().1);
        for deg in 1..=stems.max_degree() {
            for gen in stems.generator_names(deg) {
                for d in lo..=hi {
                    if d + deg > hi {
                        continue;
                    }
                    let lhs = &self.component(d + deg, src, tgt) * &src.action_matrix(d, gen, stems);
                    let rhs = &tgt.action_matrix(d, gen, stems) * &self.component(d, src, tgt);
                    let out_group = tgt.group(d + deg);
                    let lhs_red = reduce_columns(&out_group, &lhs);
                    let rhs_red = reduce_columns(&out_group, &rhs);
                    if lhs_red != rhs_red {
                        let witness = (0..src.group(d).canonical_dim())
                            .find(|&j| lhs_red.column(j) != rhs_red.column(j))
                            .map(|j| src.generator_names(d)[j].clone())
                            .unwrap_or_default();
                        out.push(Violation::NotEquivariant {
                            degree: d,
                            generator: gen.clone(),
                            witness_generator: witness,
                        });
                    }
                }
            }
        }
        out
    }
}

/// Validate a module map `tau: M0 -> M1` over an algebra map; this is the
/// equivariance check of `PiMap::validate` with module data on both sides.
pub fn coefficient_map(
    tau: &PiMap,
    source: &PiModule,
    target: &PiModule,
    stems: &StemTable,
) -> Result<PiMap, Vec<Violation>> {
    let violations = tau.validate(&source.data, &target.data, stems);
    if violations.is_empty() {
        Ok(tau.clone())
    } else {
        Err(violations)
    }
}

/// Render a relative degree: the anchor prints as `n`.
pub fn format_degree(d: i64) -> String {
    match d {
        0 => "n".to_string(),
        d if d > 0 => format!("n+{d}"),
        d => format!("n-{}", -d),
    }
}
