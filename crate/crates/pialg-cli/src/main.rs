//! Command-line front end: parse an input document, dispatch computations,
//! and emit deterministic text reports with optional JSON mirrors.
//!
//! Exit codes: 0 clean report, 1 unreadable/ill-formed document,
//! 2 mathematical failure (validation violation or broken exactness).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use pialg::algebra::{format_degree, PiMap, PiModule, StablePiAlgebra};
use pialg::cohomology::{
    assemble_les, chain_cochain_maps, cochain_complex, coefficient_cochain_maps, les_data,
    obstruction_report, ArrowCochainComplex,
};
use pialg::doc::{InputDocument, Model};
use pialg::resolution::{build_resolution, lift_map, validate_resolution, FreeResolution};
use pialg::toda::{pushforward, realizability_contradiction, ElementSet, Reading, Verdict};
use pialg::FGAbelianGroup;

use pialg_cli::report::*;

#[derive(Parser)]
#[command(
    name = "pialg",
    about = "Exact cohomology of truncated stable Pi-algebras: validation, \
             cohomology tables, cohomology of a map with its long exact \
             sequence, obstruction reports, and Toda bracket verdicts."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate every algebra, module, map and resolution in a document.
    Validate {
        path: PathBuf,
        /// Write the machine-readable report here as well.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Cohomology of a resolved algebra with module coefficients.
    Cohomology {
        path: PathBuf,
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        module: String,
        /// Resolution to use (defaults to the document's resolution of the
        /// algebra, or a greedily built one).
        #[arg(long)]
        resolution: Option<String>,
        /// Highest cohomological degree to print.
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Cohomology of a map via the mapping cone, with the long exact
    /// sequence verified at every junction.
    Arrow {
        path: PathBuf,
        #[arg(long)]
        map: String,
        /// Coefficient module map (defaults to the loop of the map).
        #[arg(long)]
        coefficients: Option<String>,
        #[arg(long)]
        source_resolution: Option<String>,
        #[arg(long)]
        target_resolution: Option<String>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Obstruction host groups for realizing a map, stage by stage, with
    /// Toda bracket verdicts where the document supplies them.
    Obstruct {
        path: PathBuf,
        #[arg(long)]
        map: String,
        #[arg(long, default_value_t = 2)]
        stages: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Toda bracket cosets: indeterminacy, elements, recorded readings, and
    /// pushforward comparisons.
    Bracket {
        path: PathBuf,
        /// A single bracket by name (default: all of them).
        #[arg(long)]
        bracket: Option<String>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load_model(path: &Path) -> Result<Model, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let doc = match InputDocument::from_json(&text) {
        Ok(doc) => doc,
        Err(pialg::doc::DocError::Json(e)) => {
            return Err(format!(
                "{}: parse error at line {}, column {}: {e}",
                path.display(),
                e.line(),
                e.column()
            ));
        }
        Err(e) => return Err(format!("{}: {e}", path.display())),
    };
    doc.resolve().map_err(|e| format!("{}: {e}", path.display()))
}

fn write_json<T: serde::Serialize>(path: &Option<PathBuf>, value: &T) -> Result<(), String> {
    if let Some(path) = path {
        let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
        fs::write(path, text + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Validate { path, json } => cmd_validate(&path, &json),
        Command::Cohomology { path, algebra, module, resolution, max_degree, json } => {
            cmd_cohomology(&path, &algebra, &module, resolution.as_deref(), max_degree, &json)
        }
        Command::Arrow {
            path,
            map,
            coefficients,
            source_resolution,
            target_resolution,
            json,
        } => cmd_arrow(
            &path,
            &map,
            coefficients.as_deref(),
            source_resolution.as_deref(),
            target_resolution.as_deref(),
            &json,
        ),
        Command::Obstruct { path, map, stages, json } => {
            cmd_obstruct(&path, &map, stages, &json)
        }
        Command::Bracket { path, bracket, json } => {
            cmd_bracket(&path, bracket.as_deref(), &json)
        }
    }
}

/// Source or target of a map can be an algebra or a module.
fn graded_of<'m>(model: &'m Model, name: &str) -> Result<&'m pialg::algebra::GradedData, String> {
    if let Some(a) = model.algebras.get(name) {
        return Ok(&a.data);
    }
    if let Some(m) = model.modules.get(name) {
        return Ok(&m.data);
    }
    Err(format!("no algebra or module named `{name}`"))
}

fn cmd_validate(path: &Path, json: &Option<PathBuf>) -> Result<ExitCode, String> {
    let model = load_model(path)?;
    let mut items = Vec::new();

    for (name, algebra) in &model.algebras {
        let violations = algebra.validate(&model.stems);
        items.push(ValidationItemJson {
            kind: "algebra".into(),
            name: name.clone(),
            ok: violations.is_empty(),
            violations: violations.iter().map(|v| v.to_string()).collect(),
        });
    }
    for (name, module) in &model.modules {
        let violations = module.validate(&model.stems);
        items.push(ValidationItemJson {
            kind: "module".into(),
            name: name.clone(),
            ok: violations.is_empty(),
            violations: violations.iter().map(|v| v.to_string()).collect(),
        });
    }
    for (name, map) in &model.maps {
        let src = graded_of(&model, &map.source)?;
        let tgt = graded_of(&model, &map.target)?;
        let violations = map.validate(src, tgt, &model.stems);
        items.push(ValidationItemJson {
            kind: "map".into(),
            name: name.clone(),
            ok: violations.is_empty(),
            violations: violations.iter().map(|v| v.to_string()).collect(),
        });
    }
    for (name, (algebra_name, resolution)) in &model.resolutions {
        let algebra = &model.algebras[algebra_name];
        let report = validate_resolution(resolution, &algebra.data, &model.stems);
        items.push(ValidationItemJson {
            kind: "resolution".into(),
            name: name.clone(),
            ok: report.is_valid(),
            violations: report.failures.iter().map(|f| f.to_string()).collect(),
        });
    }

    let ok = items.iter().all(|i| i.ok);
    for item in &items {
        if item.ok {
            println!("{} {}: OK", item.kind, item.name);
        } else {
            println!("{} {}: FAILED", item.kind, item.name);
            for v in &item.violations {
                println!("  - {v}");
            }
        }
    }
    println!("{}", if ok { "all checks passed" } else { "validation failed" });
    write_json(json, &ValidateJson { items, ok })?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

/// The resolution named by the flag, or the document's resolution of the
/// algebra, or a greedily built one.
fn resolution_for(
    model: &Model,
    algebra: &StablePiAlgebra,
    flag: Option<&str>,
) -> Result<(String, FreeResolution), String> {
    if let Some(name) = flag {
        let (alg, r) = model
            .resolutions
            .get(name)
            .ok_or_else(|| format!("no resolution named `{name}`"))?;
        if alg != &algebra.name {
            return Err(format!("resolution `{name}` resolves `{alg}`, not `{}`", algebra.name));
        }
        return Ok((name.to_string(), r.clone()));
    }
    for (name, (alg, r)) in &model.resolutions {
        if alg == &algebra.name {
            return Ok((name.clone(), r.clone()));
        }
    }
    Ok((format!("built({}, 5)", algebra.name), build_resolution(algebra, 5, &model.stems)))
}

/// A module usable over `algebra`, restricting the base if a document map
/// connects the algebra to the module's own base.
fn module_over(
    model: &Model,
    module_name: &str,
    algebra: &StablePiAlgebra,
) -> Result<(PiModule, Option<String>), String> {
    let module = model
        .modules
        .get(module_name)
        .ok_or_else(|| format!("no module named `{module_name}`"))?;
    if module.base == algebra.name {
        return Ok((module.clone(), None));
    }
    let along = model
        .maps
        .iter()
        .find(|(_, m)| m.source == algebra.name && m.target == module.base)
        .map(|(n, _)| n.clone())
        .ok_or_else(|| {
            format!(
                "module `{module_name}` lives over `{}` and no map connects `{}` to it",
                module.base, algebra.name
            )
        })?;
    let restricted = PiModule::new(&module.name, &algebra.name, module.data.clone());
    Ok((restricted, Some(along)))
}

fn rows_json(groups: &[FGAbelianGroup], max_degree: usize) -> Vec<DegreeRowJson> {
    (0..=max_degree)
        .map(|degree| {
            let g = groups.get(degree).cloned().unwrap_or_else(FGAbelianGroup::trivial);
            DegreeRowJson { degree, group: GroupJson::of(&g) }
        })
        .collect()
}

fn print_rows(rows: &[DegreeRowJson]) {
    for row in rows {
        println!("  H^{:<2} = {}", row.degree, row.group.display);
    }
}

fn cmd_cohomology(
    path: &Path,
    algebra_name: &str,
    module_name: &str,
    resolution_flag: Option<&str>,
    max_degree: Option<usize>,
    json: &Option<PathBuf>,
) -> Result<ExitCode, String> {
    let model = load_model(path)?;
    let algebra = model
        .algebras
        .get(algebra_name)
        .ok_or_else(|| format!("no algebra named `{algebra_name}`"))?;
    let (res_name, resolution) = resolution_for(&model, algebra, resolution_flag)?;
    let (module, restricted_along) = module_over(&model, module_name, algebra)?;

    let complex = cochain_complex(&resolution, &module, algebra, &model.stems)
        .map_err(|e| e.to_string())?;
    let h = complex.cohomology();
    let top = max_degree.unwrap_or_else(|| complex.len().saturating_sub(1));
    let rows = rows_json(&h, top);

    println!(
        "cohomology of {algebra_name} with coefficients {module_name} (resolution {res_name})"
    );
    if let Some(along) = &restricted_along {
        println!("  coefficients restricted along {along}");
    }
    print_rows(&rows);
    write_json(
        json,
        &CohomologyJson {
            algebra: algebra_name.into(),
            module: module_name.into(),
            resolution: res_name,
            rows,
        },
    )?;
    Ok(ExitCode::SUCCESS)
}

struct ArrowSetup {
    arrow: ArrowCochainComplex,
    coefficients_label: String,
}

fn build_arrow(
    model: &Model,
    map: &PiMap,
    coefficients: Option<&str>,
    source_resolution: Option<&str>,
    target_resolution: Option<&str>,
) -> Result<ArrowSetup, String> {
    let source = model
        .algebras
        .get(&map.source)
        .ok_or_else(|| format!("map `{}` must go between algebras", map.name))?;
    let target = model
        .algebras
        .get(&map.target)
        .ok_or_else(|| format!("map `{}` must go between algebras", map.name))?;
    let (_, r_source) = resolution_for(model, source, source_resolution)?;
    let (_, r_target) = resolution_for(model, target, target_resolution)?;

    let lifts = lift_map(map, &source.data, &target.data, &r_source, &r_target, &model.stems)
        .map_err(|e| e.to_string())?;

    let (m0, m1, tau, label) = match coefficients {
        Some(name) => {
            let tau = model
                .maps
                .get(name)
                .ok_or_else(|| format!("no map named `{name}`"))?;
            let m0 = model
                .modules
                .get(&tau.source)
                .ok_or_else(|| format!("coefficient source `{}` is not a module", tau.source))?;
            let m1 = model
                .modules
                .get(&tau.target)
                .ok_or_else(|| format!("coefficient target `{}` is not a module", tau.target))?;
            (m0.clone(), m1.clone(), tau.clone(), name.to_string())
        }
        None => {
            let m0 = source.loop_module();
            let m1 = PiModule::new(
                &format!("loop({})", target.name),
                &target.name,
                target.data.looped(),
            );
            let tau = map.looped();
            (m0, m1, tau, format!("loop({})", map.name))
        }
    };

    let m1_restricted = PiModule::new(&m1.name, &source.name, m1.data.clone());
    let cx0 = cochain_complex(&r_source, &m0, source, &model.stems).map_err(|e| e.to_string())?;
    let cy1 =
        cochain_complex(&r_target, &m1, target, &model.stems).map_err(|e| e.to_string())?;
    let cx1 = cochain_complex(&r_source, &m1_restricted, source, &model.stems)
        .map_err(|e| e.to_string())?;
    let tau_maps = coefficient_cochain_maps(&r_source, &cx0, &cx1, &tau, &m0, &m1_restricted);
    let phi_maps =
        chain_cochain_maps(&r_source, &r_target, &lifts, &cy1, &cx1, &m1_restricted, &model.stems);
    let arrow = ArrowCochainComplex::new(cx0, cy1, cx1, tau_maps, phi_maps)
        .map_err(|e| e.to_string())?;
    Ok(ArrowSetup { arrow, coefficients_label: label })
}

fn cmd_arrow(
    path: &Path,
    map_name: &str,
    coefficients: Option<&str>,
    source_resolution: Option<&str>,
    target_resolution: Option<&str>,
    json: &Option<PathBuf>,
) -> Result<ExitCode, String> {
    let model = load_model(path)?;
    let map = model
        .maps
        .get(map_name)
        .ok_or_else(|| format!("no map named `{map_name}`"))?;
    let setup = build_arrow(&model, map, coefficients, source_resolution, target_resolution)?;
    let h = setup.arrow.cohomology();
    let rows = rows_json(&h, h.len().saturating_sub(1));

    let data = les_data(&setup.arrow);
    let les = assemble_les(&data);
    let junctions: Vec<JunctionJson> = les
        .junctions
        .iter()
        .map(|j| JunctionJson { index: j.index, exact: j.exact, detail: j.detail.clone() })
        .collect();

    println!(
        "cohomology of the map {map_name} with coefficients {}",
        setup.coefficients_label
    );
    print_rows(&rows);
    if les.all_exact() {
        println!("  long exact sequence: exact at all {} junctions", junctions.len());
    } else {
        for j in junctions.iter().filter(|j| !j.exact) {
            println!("  long exact sequence BROKEN at junction {}: {}", j.index, j.detail);
        }
    }
    write_json(
        json,
        &ArrowJson {
            map: map_name.into(),
            coefficients: setup.coefficients_label,
            rows,
            les_exact: les.all_exact(),
            junctions,
        },
    )?;
    Ok(if les.all_exact() { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

/// All Toda comparisons the document requests for brackets pushed along
/// the given map.
fn toda_comparisons(model: &Model, map_name: &str) -> Result<Vec<TodaComparisonJson>, String> {
    let mut out = Vec::new();
    for (bname, bracket) in &model.brackets {
        if bracket.pushforward_along.as_deref() != Some(map_name) {
            continue;
        }
        let map = &model.maps[map_name];
        let src = graded_of(model, &map.source)?;
        let tgt = graded_of(model, &map.target)?;
        let pushed = pushforward(&bracket.coset, map, src, tgt);
        let pushed_elements: Vec<Vec<i64>> = pushed
            .enumerate()
            .map(|els| els.iter().map(|e| coords_to_json(&e.coords)).collect())
            .unwrap_or_default();
        let Some(other_name) = &bracket.compare_with else { continue };
        let other = &model.brackets[other_name];
        let mut targets: Vec<(String, ElementSet)> =
            vec![("computed-coset".to_string(), other.coset.as_set())];
        for Reading { label, set } in &other.readings {
            targets.push((label.clone(), set.clone()));
        }
        for (reading, set) in targets {
            let verdict = realizability_contradiction(&pushed, &set)
                .map_err(|e| format!("bracket `{bname}` vs `{other_name}`: {e}"))?;
            let (verdict_str, witness) = match verdict {
                Verdict::Contradiction => ("CONTRADICTION".to_string(), None),
                Verdict::Consistent { witness } => {
                    ("CONSISTENT".to_string(), Some(coords_to_json(&witness.coords)))
                }
            };
            out.push(TodaComparisonJson {
                bracket: bname.clone(),
                pushed_along: map_name.to_string(),
                pushed_elements: pushed_elements.clone(),
                against: other_name.clone(),
                reading,
                verdict: verdict_str,
                witness,
            });
        }
    }
    Ok(out)
}

fn cmd_obstruct(
    path: &Path,
    map_name: &str,
    stages: usize,
    json: &Option<PathBuf>,
) -> Result<ExitCode, String> {
    let model = load_model(path)?;
    let map = model
        .maps
        .get(map_name)
        .ok_or_else(|| format!("no map named `{map_name}`"))?;
    let source = model
        .algebras
        .get(&map.source)
        .ok_or_else(|| format!("map `{map_name}` must go between algebras"))?;
    let target = model
        .algebras
        .get(&map.target)
        .ok_or_else(|| format!("map `{map_name}` must go between algebras"))?;
    let (_, r_source) = resolution_for(&model, source, None)?;
    let (_, r_target) = resolution_for(&model, target, None)?;
    let lifts = lift_map(map, &source.data, &target.data, &r_source, &r_target, &model.stems)
        .map_err(|e| e.to_string())?;
    let report = obstruction_report(
        map,
        source,
        target,
        &r_source,
        &r_target,
        &lifts,
        stages,
        &model.stems,
    )
    .map_err(|e| e.to_string())?;

    let stages_json: Vec<StageJson> = report
        .stages
        .iter()
        .map(|s| StageJson {
            stage: s.stage,
            window_exhausted: s.window_exhausted,
            arrow_existence: GroupJson::of(&s.arrow_existence),
            arrow_difference: GroupJson::of(&s.arrow_difference),
            source_existence: GroupJson::of(&s.source_existence),
            source_difference: GroupJson::of(&s.source_difference),
            target_existence: GroupJson::of(&s.target_existence),
            target_difference: GroupJson::of(&s.target_difference),
        })
        .collect();

    let toda = toda_comparisons(&model, map_name)?;

    // Verdict: a contradiction sinks realizability; with every existence
    // group zero there is no room for obstructions; otherwise vanishing of
    // the classes is external input.
    let any_contradiction = toda.iter().any(|t| t.verdict == "CONTRADICTION");
    let all_existence_trivial =
        report.stages.iter().all(|s| s.arrow_existence.is_trivial());
    let verdict = if any_contradiction {
        "NOT REALIZABLE"
    } else if all_existence_trivial {
        "REALIZABLE (no obstruction)"
    } else {
        "UNDETERMINED (nonzero host groups; class vanishing is external input)"
    };

    println!("obstruction report for {map_name} ({stages} stages)");
    for s in &stages_json {
        let mark = if s.window_exhausted { " [window exhausted]" } else { "" };
        println!(
            "  stage {}: existence H^{} = {}, difference H^{} = {}{mark}",
            s.stage,
            s.stage + 2,
            s.arrow_existence.display,
            s.stage + 1,
            s.arrow_difference.display,
        );
        println!(
            "           source-only: H^{} = {}, H^{} = {}  |  target-only: H^{} = {}, H^{} = {}",
            s.stage + 2,
            s.source_existence.display,
            s.stage + 1,
            s.source_difference.display,
            s.stage + 2,
            s.target_existence.display,
            s.stage + 1,
            s.target_difference.display,
        );
    }
    for t in &toda {
        println!(
            "  bracket {} pushed along {}: {:?} vs {} [{}]: {}",
            t.bracket, t.pushed_along, t.pushed_elements, t.against, t.reading, t.verdict
        );
    }
    println!("verdict: {verdict}");
    write_json(
        json,
        &ObstructJson {
            map: map_name.into(),
            stages: stages_json,
            toda,
            verdict: verdict.into(),
        },
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_bracket(
    path: &Path,
    which: Option<&str>,
    json: &Option<PathBuf>,
) -> Result<ExitCode, String> {
    let model = load_model(path)?;
    let mut out = Vec::new();
    let names: Vec<String> = match which {
        Some(name) => {
            if !model.brackets.contains_key(name) {
                return Err(format!("no bracket named `{name}`"));
            }
            vec![name.to_string()]
        }
        None => model.brackets.keys().cloned().collect(),
    };
    for name in names {
        let b = &model.brackets[&name];
        let coset = &b.coset;
        let elements = coset
            .elements()
            .map(|els| els.iter().map(|e| coords_to_json(&e.coords)).collect::<Vec<_>>());
        let readings: Vec<ReadingJson> = b
            .readings
            .iter()
            .map(|r| ReadingJson {
                label: r.label.clone(),
                elements: r
                    .set
                    .enumerate()
                    .map(|els| els.iter().map(|e| coords_to_json(&e.coords)).collect())
                    .unwrap_or_default(),
            })
            .collect();
        let comparisons = match &b.pushforward_along {
            Some(map_name) => toda_comparisons(&model, map_name)?
                .into_iter()
                .filter(|t| t.bracket == name)
                .collect(),
            None => Vec::new(),
        };
        println!(
            "bracket {name} = {} in degree {}",
            coset.provenance,
            format_degree(coset.ambient_degree)
        );
        println!(
            "  ambient {} | representative {:?}",
            coset.ambient,
            coords_to_json(&coset.representative.coords)
        );
        println!("  indeterminacy {}", coset.indeterminacy);
        if let Some(els) = &elements {
            println!("  elements {els:?}");
        }
        for r in &readings {
            println!("  reading {}: {:?}", r.label, r.elements);
        }
        for c in &comparisons {
            println!(
                "  pushed along {}: {:?} vs {} [{}]: {}",
                c.pushed_along, c.pushed_elements, c.against, c.reading, c.verdict
            );
        }
        out.push(BracketJson {
            name: name.clone(),
            algebra: b.algebra.clone(),
            degree: format_degree(coset.ambient_degree),
            ambient: GroupJson::of(&coset.ambient),
            representative: coords_to_json(&coset.representative.coords),
            indeterminacy: GroupJson::of(&coset.indeterminacy),
            elements,
            readings,
            comparisons,
        });
    }
    write_json(json, &BracketsJson { brackets: out })?;
    Ok(ExitCode::SUCCESS)
}
