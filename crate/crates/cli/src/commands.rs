use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};

use hopfkit::catalog::{self, Params, RootOfUnity};
use hopfkit::census::{self, builtin_scenario, render_text, Scenario, Tri};
use hopfkit::coalgebra::full_filtration;
use hopfkit::comatrix::{self, ComatrixMap, MapKind, NormalFormResult};
use hopfkit::interchange::{AlgebraDocument, MatrixDocument};
use hopfkit::linalg::Field;
use hopfkit::{CycMatrix, CycNumber, HopfAlgebra};

use crate::error::{self, CliError};
use crate::{Assumption, KindArg, Output};

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path.display(), e))
}

/// Re-reads `h` over Q(ζ_m) when a larger field is requested.
fn with_field(h: HopfAlgebra, m: Option<u32>) -> Result<HopfAlgebra, CliError> {
    match m {
        None => Ok(h),
        Some(m) if m % h.field_order() == 0 => Ok(h.with_field_order(m)),
        Some(m) => Err(CliError::bad(format!("--field-order {m} is not a multiple of the document's order {}", h.field_order()))),
    }
}

fn load(path: &Path, m: Option<u32>) -> Result<HopfAlgebra, CliError> {
    let doc = AlgebraDocument::parse(&read(path)?)?;
    with_field(doc.to_hopf_unchecked()?, m)
}

fn field_name(m: u32) -> String {
    if m <= 2 {
        "Q".into()
    } else {
        format!("Q(ζ_{m})")
    }
}

fn cell(x: &CycNumber, m: u32) -> String {
    x.to_string_in(m)
}

fn matrix_rows(a: &CycMatrix, m: u32) -> Vec<Vec<String>> {
    (0..a.rows()).map(|i| a.row(i).iter().map(|x| cell(x, m)).collect()).collect()
}

fn write_matrix(out: &mut String, rows: &[Vec<String>]) {
    let width = rows.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    for r in rows {
        let cells: Vec<String> = r.iter().map(|s| format!("{s:>width$}")).collect();
        let _ = writeln!(out, "    [{}]", cells.join("  "));
    }
}

fn list(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn construct(name: &str, n: Option<usize>, q: Option<&str>, mm: Option<u32>, m: Option<u32>) -> Result<Output, CliError> {
    let q = q.map(RootOfUnity::parse).transpose()?;
    let h = with_field(catalog::build(name, &Params { n, q, m: mm })?, m)?;
    let doc = AlgebraDocument::from_hopf(&h);
    Ok(Output { command: "construct", text: doc.to_json(), json: serde_json::to_value(&doc).expect("json"), ok: true, raw: true })
}

pub fn verify(path: &Path, m: Option<u32>) -> Result<Output, CliError> {
    let h = load(path, m)?;
    let report = h.axiom_report();
    let mut text = String::new();
    let _ = writeln!(text, "dim {} over {}", h.dim(), field_name(h.field_order()));
    let width = report.iter().map(|(a, _)| a.name().chars().count()).max().unwrap_or(0);
    let mut axioms = Vec::new();
    for (axiom, r) in &report {
        let pad = " ".repeat(width - axiom.name().chars().count());
        match r {
            Ok(()) => {
                let _ = writeln!(text, "{}{pad}  pass", axiom.name());
            }
            Err(e) => {
                let _ = writeln!(text, "{}{pad}  FAIL  {e}", axiom.name());
            }
        }
        axioms.push(json!({"axiom": axiom, "pass": r.is_ok(), "witness": r.as_ref().err().map(|e| e.to_string())}));
    }
    let failed = report.iter().filter(|(_, r)| r.is_err()).count();
    if failed == 0 {
        text.push_str("all axioms pass\n");
    } else {
        let _ = writeln!(text, "{failed} axiom(s) fail");
    }
    let json = json!({"dim": h.dim(), "cyclotomic_order": h.field_order(), "axioms": axioms, "all_pass": failed == 0});
    Ok(Output { command: "verify", text, json, ok: failed == 0, raw: false })
}

pub struct Sections {
    pub filtration: bool,
    pub isotypic: bool,
    pub invariants: bool,
    pub dual: bool,
}

pub fn analyze(path: &Path, s: Sections, m: Option<u32>) -> Result<Output, CliError> {
    let h = load(path, m)?;
    h.validate().map_err(|e| CliError::new(error::CHECK_FAILED, format!("document is not a Hopf algebra: {e}")))?;
    let h = if s.dual { h.dual() } else { h };
    let invariants = s.invariants || !(s.filtration || s.isotypic);
    let mut text = String::new();
    let mut json = serde_json::Map::new();
    let _ = writeln!(text, "{}: dim {} over {}", if s.dual { "dual" } else { "algebra" }, h.dim(), field_name(h.field_order()));
    json.insert("dual".into(), Value::Bool(s.dual));
    json.insert("dim".into(), json!(h.dim()));
    if s.filtration || s.isotypic {
        let (f, dec) = full_filtration(h.coalgebra())?;
        let blocks: Vec<usize> = dec.blocks.iter().map(|b| b.comodule_dim).collect();
        if s.filtration {
            let (stages, layers) = (f.stage_dims(), f.layer_dims());
            let _ = writeln!(text, "\ncoradical filtration");
            let _ = writeln!(text, "  simple blocks (comodule dims): {}", list(&blocks));
            let _ = writeln!(text, "  stages dim H_n: {}", list(&stages));
            let _ = writeln!(text, "  layers dim P_n: {}", list(&layers));
            let _ = writeln!(text, "  coradical length: {}", f.length());
            json.insert("filtration".into(), json!({"blocks": blocks, "stages": stages, "layers": layers, "length": f.length()}));
        }
        if s.isotypic {
            let _ = writeln!(text, "\nisotypic components dim P_n^(τ,γ)");
            let mut rows = Vec::new();
            for (n, comps) in f.isotypic.iter().enumerate().skip(1) {
                for (key, d) in comps {
                    rows.push(json!({"n": n, "left": key.left, "right": key.right, "dim": d}));
                    if rows.len() == 1 {
                        let _ = writeln!(text, "  n  τ  γ  dim");
                    }
                    let _ = writeln!(text, "  {n:<2} {:<2} {:<2} {d}", key.left, key.right);
                }
            }
            if rows.is_empty() {
                text.push_str("  (none)\n");
            }
            json.insert("isotypic".into(), json!({"blocks": blocks, "components": rows}));
        }
    }
    if invariants {
        let inv = catalog::invariants(&h)?;
        let yn = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(text, "\ninvariants");
        let _ = writeln!(text, "  dim: {}", inv.dim);
        let _ = writeln!(text, "  G(H): {} (order {})", inv.group, inv.grouplikes);
        let _ = writeln!(text, "  type (|G(H)|, |G(H*)|): ({}, {})", inv.grouplikes, inv.dual_grouplikes);
        let _ = writeln!(text, "  pointed: {}, copointed: {}, semisimple: {}", yn(inv.pointed), yn(inv.copointed), yn(inv.semisimple));
        let _ = writeln!(text, "  antipode order: {}", inv.antipode_order);
        let _ = writeln!(text, "  coradical profile: {}", list(&inv.coradical_profile));
        let _ = writeln!(text, "  layer dims: {}", list(&inv.layer_dims));
        let stats: Vec<String> = inv.group_order_statistics.iter().map(|(o, c)| format!("{c} of order {o}")).collect();
        let _ = writeln!(text, "  element orders: {}", stats.join(", "));
        if !inv.skew_primitive_characters.is_empty() {
            let chars: Vec<String> = inv.skew_primitive_characters.iter().map(|(o, l)| format!("({o}, {l})")).collect();
            let _ = writeln!(text, "  skew-primitive characters: {}", chars.join(", "));
        }
        json.insert("invariants".into(), serde_json::to_value(&inv).expect("json"));
    }
    Ok(Output { command: "analyze", text, json: Value::Object(json), ok: true, raw: false })
}

fn load_scenario(name: &str) -> Result<Scenario, CliError> {
    let path = Path::new(name);
    if path.extension().is_some_and(|e| e == "json") || path.exists() {
        return Ok(Scenario::from_json(&read(path)?)?);
    }
    Ok(builtin_scenario(name)?)
}

pub fn census(dim: Option<u64>, grouplikes: &str, scenario: Option<&str>, assume: &[Assumption]) -> Result<Output, CliError> {
    let g = match grouplikes {
        "all" => None,
        s => Some(s.parse::<u64>().map_err(|_| CliError::bad(format!("--grouplikes expects a number or `all`, got `{s}`")))?),
    };
    let mut s = match scenario {
        Some(name) => {
            let s = load_scenario(name)?;
            if dim.is_some_and(|n| n != s.dim) {
                return Err(CliError::bad(format!("scenario `{}` is for dimension {}", s.name, s.dim)));
            }
            if g.is_some() {
                return Err(CliError::bad("--grouplikes cannot be combined with --scenario"));
            }
            s
        }
        None => {
            let n = dim.ok_or_else(|| CliError::bad("--dim is required without --scenario"))?;
            if n < 2 {
                return Err(CliError::bad("--dim must be at least 2"));
            }
            Scenario::default_for(n, census::grouplike_choices(n, g)?)
        }
    };
    for b in &mut s.branches {
        if assume.contains(&Assumption::TaftSub) {
            b.taft_sub = Tri::Yes;
        }
        if assume.contains(&Assumption::TaftQuotient) {
            b.taft_quotient = Tri::Yes;
        }
    }
    let r = census::run_scenario(&s)?;
    Ok(Output { command: "census", text: render_text(&r), json: serde_json::to_value(&r).expect("json"), ok: true, raw: false })
}

fn kind_name(k: MapKind) -> &'static str {
    match k {
        MapKind::Automorphism => "automorphism",
        MapKind::AntiAutomorphism => "anti-automorphism",
    }
}

fn normal_form_report(f: &ComatrixMap<CycNumber>, nf: &NormalFormResult<CycNumber>, m: u32) -> (String, Value) {
    let d = f.d;
    let mut text = String::new();
    let _ = writeln!(text, "map on M*({d}) over {}: {}", field_name(m), kind_name(nf.kind));
    let which = if nf.kind == MapKind::Automorphism { "f" } else { "f²" };
    let _ = writeln!(text, "order of {which}: {}", nf.order);
    let basis = matrix_rows(&nf.basis_change, m);
    let _ = writeln!(text, "basis change U (new e = U·e·U⁻¹):");
    write_matrix(&mut text, &basis);
    let omegas: Vec<String> = nf.omegas.iter().map(|x| cell(x, m)).collect();
    let _ = writeln!(text, "ω: {}", omegas.join(", "));
    let pattern: Vec<Vec<String>> =
        (0..d).map(|i| (0..d).map(|j| cell(&nf.omegas[i].div_ref(&nf.omegas[j]).expect("nonzero"), m)).collect()).collect();
    let _ = writeln!(text, "{which}(e_ij) = ω_iω_j⁻¹ e_ij:");
    write_matrix(&mut text, &pattern);
    let mut json = json!({
        "d": d,
        "kind": nf.kind,
        "order": nf.order,
        "basis_change": basis,
        "omegas": omegas,
        "pattern": pattern,
    });
    if let Some(a) = &nf.anti {
        let pairs: Vec<Value> = a.pairs.iter().map(|(k, l)| json!({"size": k, "lambda": cell(l, m)})).collect();
        let shown: Vec<String> = a.pairs.iter().map(|(k, l)| format!("(a = {k}, λ = {})", cell(l, m))).collect();
        let _ = writeln!(text, "blocks: a_+ = {}, a_− = {}, pairs: {}", a.a_plus, a.a_minus, if shown.is_empty() { "none".into() } else { shown.join(", ") });
        let assembled = matrix_rows(&a.assembled, m);
        let _ = writeln!(text, "A in the new basis:");
        write_matrix(&mut text, &assembled);
        if let Some(l) = &a.a_lambda {
            let _ = writeln!(text, "A = A_λ with λ = {} (λ and λ⁻¹ give conjugate forms)", cell(l, m));
        }
        if let Some(w) = &a.stefan_omega {
            let _ = writeln!(text, "Stefan form (i): f(e11) = e22, f(e12) = ω⁻¹e12, f(e21) = ωe21 with ω = {}", cell(w, m));
        }
        json["anti"] = json!({
            "a_plus": a.a_plus,
            "a_minus": a.a_minus,
            "pairs": pairs,
            "assembled": assembled,
            "a_lambda": a.a_lambda.as_ref().map(|l| cell(l, m)),
            "stefan_omega": a.stefan_omega.as_ref().map(|w| cell(w, m)),
        });
    }
    (text, json)
}

pub fn normal_form(path: &Path, kind: KindArg, m: Option<u32>) -> Result<Output, CliError> {
    let doc = MatrixDocument::parse(&read(path)?)?;
    let a = doc.to_matrix()?;
    let declared = doc.field.cyclotomic_order;
    let m = match m {
        None => declared,
        Some(m) if m % declared == 0 => m,
        Some(m) => return Err(CliError::bad(format!("--field-order {m} is not a multiple of the document's order {declared}"))),
    };
    let d = (1..=a.rows()).find(|d| d * d == a.rows()).ok_or_else(|| CliError::new(error::PARSE, format!("matrix size {} is not a square d²", a.rows())))?;
    let f = match kind {
        KindArg::Auto => comatrix::detect_kind(d, &a, m)?,
        KindArg::Anti => ComatrixMap::new(d, MapKind::AntiAutomorphism, a, m)?,
    };
    let nf = comatrix::normal_form(&f)?;
    let (text, json) = normal_form_report(&f, &nf, m);
    Ok(Output { command: "normal-form", text, json, ok: true, raw: false })
}

pub fn catalog(verify: bool, export: Option<&Path>) -> Result<Output, CliError> {
    let entries = catalog::catalog27_entries();
    let mut text = String::new();
    let mut ok = true;
    let json;
    if verify {
        let reports = catalog::catalog27();
        let _ = writeln!(text, "dimension 27 catalog");
        for r in &reports {
            let e = &r.entry;
            let status = if !r.constructed {
                "not constructed".to_string()
            } else if r.passes() {
                let inv = r.invariants.as_ref().expect("constructed entries have invariants");
                format!("pass  G = {}, |G(H*)| = {}, ord S = {}", inv.group, inv.dual_grouplikes, inv.antipode_order)
            } else {
                ok = false;
                format!("FAIL  {}", r.mismatches.join("; "))
            };
            let _ = writeln!(text, "  ({}) {:<18} {:<10} {status}", e.item, e.name, e.params.to_string());
        }
        json = serde_json::to_value(&reports).expect("json");
    } else {
        let _ = writeln!(text, "dimension 27 catalog");
        for e in &entries {
            let _ = writeln!(text, "  ({}) {:<18} {}", e.item, e.name, e.params);
        }
        for name in catalog::NOT_CONSTRUCTED {
            let _ = writeln!(text, "  (c) {name:<18} not constructed");
        }
        let _ = writeln!(text, "\nbuilders: {}", catalog::BUILDERS.join(", "));
        json = json!({"entries": entries, "not_constructed": catalog::NOT_CONSTRUCTED, "builders": catalog::BUILDERS});
    }
    if let Some(dir) = export {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir.display(), e))?;
        for e in &entries {
            let h = catalog::build(&e.name, &e.params)?;
            let path = dir.join(format!("{}_{}.json", e.item, e.name));
            std::fs::write(&path, AlgebraDocument::from_hopf(&h).to_json()).map_err(|err| CliError::io(path.display(), err))?;
        }
        let _ = writeln!(text, "exported {} documents to {}", entries.len(), dir.display());
    }
    Ok(Output { command: "catalog", text, json, ok, raw: false })
}

