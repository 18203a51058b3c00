//! The suspended-projective-plane example: the Pi-algebra of
//! `X = S^n cup_2 e^{n+1}` truncated to `[n, n+2]`, the free monogenic
//! sphere algebra it maps to, the two nontrivial maps, and the minimal
//! free resolution. Degrees are anchored at `n = 0`.
//!
//! The algebra is `Z/2<alpha>, Z/2<alpha.eta>, Z/4<beta>` with
//! `2 beta = alpha . eta^2`; the target is the sphere algebra on a
//! generator `x'` in degree `n-1`. The map `phi` sends `alpha` to `x'.eta`
//! (forcing `phi(beta) = 6 x'.nu`), `psi` sends `alpha` to zero and `beta`
//! to `12 x'.nu`.

use crate::algebra::{GradedData, PiMap, PiModule, StablePiAlgebra};
use crate::group::FGAbelianGroup;
use crate::int::Int;
use crate::matrix::IntMatrix;
use crate::resolution::{FreeElement, FreeGradedModule, FreeModuleMap, FreeResolution, FreeTerm};
use crate::stems::{StemElement, StemTable};

pub const LAMBDA: &str = "Lambda";
pub const SPHERE: &str = "S";

pub fn stems() -> StemTable {
    StemTable::standard()
}

/// `tru_{n+2} pi_* (S^n cup_2 e^{n+1})` on the window `[n, n+2]`.
pub fn lambda() -> StablePiAlgebra {
    let groups = vec![
        FGAbelianGroup::cyclic(2),
        FGAbelianGroup::cyclic(2),
        FGAbelianGroup::cyclic(4),
    ];
    let mut data = GradedData::new((0, 2), groups);
    data.set_generator_names(0, vec!["alpha".into()]);
    data.set_generator_names(1, vec!["alpha_eta".into()]);
    data.set_generator_names(2, vec!["beta".into()]);
    data.set_action(0, "eta", IntMatrix::from_i64(1, 1, &[1]));
    data.set_action(0, "eta2", IntMatrix::from_i64(1, 1, &[2]));
    data.set_action(1, "eta", IntMatrix::from_i64(1, 1, &[2]));
    StablePiAlgebra::new(LAMBDA, data)
}

/// The free monogenic sphere algebra on `x'` in degree `n-1`, truncated
/// to `[n-1, n+2]`.
pub fn sphere() -> StablePiAlgebra {
    let groups = vec![
        FGAbelianGroup::free(1),
        FGAbelianGroup::cyclic(2),
        FGAbelianGroup::cyclic(2),
        FGAbelianGroup::cyclic(24),
    ];
    let mut data = GradedData::new((-1, 2), groups);
    data.set_generator_names(-1, vec!["x'".into()]);
    data.set_generator_names(0, vec!["x'eta".into()]);
    data.set_generator_names(1, vec!["x'eta2".into()]);
    data.set_generator_names(2, vec!["x'nu".into()]);
    data.set_action(-1, "eta", IntMatrix::from_i64(1, 1, &[1]));
    data.set_action(-1, "eta2", IntMatrix::from_i64(1, 1, &[1]));
    data.set_action(-1, "nu", IntMatrix::from_i64(1, 1, &[1]));
    data.set_action(0, "eta", IntMatrix::from_i64(1, 1, &[1]));
    data.set_action(0, "eta2", IntMatrix::from_i64(1, 1, &[12]));
    data.set_action(1, "eta", IntMatrix::from_i64(1, 1, &[12]));
    StablePiAlgebra::new(SPHERE, data)
}

/// `phi: Lambda -> S`, `alpha -> x'.eta`, `beta -> 6 x'.nu`.
pub fn phi() -> PiMap {
    let components = [
        (0, IntMatrix::from_i64(1, 1, &[1])),
        (1, IntMatrix::from_i64(1, 1, &[1])),
        (2, IntMatrix::from_i64(1, 1, &[6])),
    ]
    .into_iter()
    .collect();
    PiMap::new("phi", LAMBDA, SPHERE, components)
}

/// `psi: Lambda -> S`, `alpha -> 0`, `beta -> 12 x'.nu`.
pub fn psi() -> PiMap {
    let components = [(2, IntMatrix::from_i64(1, 1, &[12]))].into_iter().collect();
    PiMap::new("psi", LAMBDA, SPHERE, components)
}

pub fn omega_lambda() -> PiModule {
    let mut m = lambda().loop_module();
    m.name = "OmegaLambda".into();
    m
}

pub fn omega_sphere() -> PiModule {
    let mut m = sphere().loop_module();
    m.name = "OmegaS".into();
    m
}

fn iota_times(c: i64) -> StemElement {
    StemElement { degree: 0, coords: vec![Int::from(c)] }
}

fn gen_stem(table: &StemTable, c: i64, name: &str) -> StemElement {
    table.scaled(c, name).expect("named stem generator")
}

/// The minimal free resolution of `lambda`, length 5:
/// levels `{y,x}, {w,z}, {u}, {v}, {t}, {s}` with
/// `d1(w) = 2y - x.eta2`, `d1(z) = 2x`, `d2(u) = z.eta`, `d3(v) = 2u`,
/// `d4(t) = v.eta`, `d5(s) = 2t`, augmentation `y -> beta`, `x -> alpha`.
pub fn minimal_resolution() -> FreeResolution {
    let table = stems();
    let v0 = FreeGradedModule::new(vec![("y".into(), 2), ("x".into(), 0)]);
    let v1 = FreeGradedModule::new(vec![("w".into(), 2), ("z".into(), 0)]);
    let v2 = FreeGradedModule::new(vec![("u".into(), 1)]);
    let v3 = FreeGradedModule::new(vec![("v".into(), 1)]);
    let v4 = FreeGradedModule::new(vec![("t".into(), 2)]);
    let v5 = FreeGradedModule::new(vec![("s".into(), 2)]);

    let d1 = FreeModuleMap::new(
        v1.clone(),
        v0.clone(),
        vec![
            FreeElement {
                degree: 2,
                terms: vec![
                    FreeTerm { generator: 0, stem: iota_times(2) },
                    FreeTerm { generator: 1, stem: gen_stem(&table, -1, "eta2") },
                ],
            },
            FreeElement {
                degree: 0,
                terms: vec![FreeTerm { generator: 1, stem: iota_times(2) }],
            },
        ],
    )
    .unwrap();
    let d2 = FreeModuleMap::new(
        v2.clone(),
        v1.clone(),
        vec![FreeElement {
            degree: 1,
            terms: vec![FreeTerm { generator: 1, stem: gen_stem(&table, 1, "eta") }],
        }],
    )
    .unwrap();
    let d3 = FreeModuleMap::new(
        v3.clone(),
        v2.clone(),
        vec![FreeElement {
            degree: 1,
            terms: vec![FreeTerm { generator: 0, stem: iota_times(2) }],
        }],
    )
    .unwrap();
    let d4 = FreeModuleMap::new(
        v4.clone(),
        v3.clone(),
        vec![FreeElement {
            degree: 2,
            terms: vec![FreeTerm { generator: 0, stem: gen_stem(&table, 1, "eta") }],
        }],
    )
    .unwrap();
    let d5 = FreeModuleMap::new(
        v5.clone(),
        v4.clone(),
        vec![FreeElement {
            degree: 2,
            terms: vec![FreeTerm { generator: 0, stem: iota_times(2) }],
        }],
    )
    .unwrap();

    let l = lambda();
    FreeResolution {
        modules: vec![v0, v1, v2, v3, v4, v5],
        differentials: vec![d1, d2, d3, d4, d5],
        augmentation: vec![l.data.group(2).element_from_i64(&[1]), l.data.group(0).element_from_i64(&[1])],
    }
}

/// The bracket triple `<eta, 2, alpha>` in the projective-plane algebra,
/// with its recorded representative `beta`.
pub fn eta_two_alpha_coset() -> crate::toda::TodaBracketCoset {
    let t = stems();
    let l = lambda().data;
    let triple = crate::toda::BracketTriple::new(
        &l,
        &t,
        t.named("eta").unwrap(),
        t.scaled(2, "iota").unwrap(),
        0,
        l.group(0).element_from_i64(&[1]),
    )
    .expect("both composites vanish");
    crate::toda::bracket(&triple, &l, &t, l.group(2).element_from_i64(&[1]))
        .expect("beta is a valid representative")
}

/// The three recorded readings of `<eta, 2, eta>` inside `pi_{n+2}` of the
/// sphere algebra: the computed coset `{nu, nu + eta^3} = {nu, 13nu}`, the
/// sign-based `{nu, -nu}`, and the collapsed `{nu, 12nu}`. The sources
/// state all three; downstream verdicts hold for each, so none is
/// adjudicated here.
pub fn eta_two_eta_readings(table: &StemTable) -> Vec<crate::toda::Reading> {
    let s = sphere().data;
    let triple = crate::toda::BracketTriple::new(
        &s,
        table,
        table.named("eta").unwrap(),
        table.scaled(2, "iota").unwrap(),
        0,
        s.group(0).element_from_i64(&[1]),
    )
    .expect("both composites vanish");
    let computed =
        crate::toda::bracket(&triple, &s, table, s.group(2).element_from_i64(&[1]))
            .expect("nu is a valid representative");
    let g = s.group(2);
    let literal = |coords: &[i64]| {
        crate::toda::ElementSet::from_elements(
            &g,
            2,
            coords.iter().map(|&c| g.element_from_i64(&[c])).collect(),
        )
    };
    vec![
        crate::toda::Reading { label: "nu-plus-eta-cubed".into(), set: computed.as_set() },
        crate::toda::Reading { label: "plus-minus-nu".into(), set: literal(&[1, 23]) },
        crate::toda::Reading { label: "nu-and-twelve-nu".into(), set: literal(&[1, 12]) },
    ]
}

/// The sphere algebra is free, so it is its own length-0 resolution on the
/// generator `xp` in degree `n-1`.
pub fn sphere_resolution() -> FreeResolution {
    let w0 = FreeGradedModule::new(vec![("xp".into(), -1)]);
    let s = sphere();
    FreeResolution {
        modules: vec![w0],
        differentials: vec![],
        augmentation: vec![s.data.group(-1).element_from_i64(&[1])],
    }
}
