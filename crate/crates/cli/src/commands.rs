use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use cohsheaf::counterexamples::{demo_conimg, demo_forgetful};
use cohsheaf::groebner::{saturate_counting, FreeElement};
use cohsheaf::grmod::json::ModuleJson;
use cohsheaf::grmod::{
    hilbert_window, hom_degree_zero, min_free_resolution, regularity, torsion_submodule, torsion_top_degree, truncate,
    GradedModule,
};
use cohsheaf::ring::{PolyRing, DEFAULT_PRIME};
use cohsheaf::serre::{hom_quotient, hom_quotient_alt, QObject};
use cohsheaf::sheaf::{demo_no_section, euler_characteristic, global_sections_dim, CoherentSheaf};
use serde_json::{json, Value};

use crate::input::{load_modules, parse_range, CliError, CliResult};
use crate::{Cli, Command, Common, Format, WindowArgs};

/// Characteristic of the appendix demo when `--p` is absent.
const FORGETFUL_PRIME: u64 = 3;

struct Report {
    text: String,
    json: Value,
}

pub fn run(cli: &Cli) -> CliResult<String> {
    let report = dispatch(&cli.common, &cli.command)?;
    Ok(match cli.common.format {
        Format::Text => report.text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).map_err(|e| CliError::Other(e.to_string()))?;
            s.push('\n');
            s
        }
    })
}

fn one(common: &Common, path: &Path) -> CliResult<GradedModule> {
    let (_, mut mods) = load_modules(common, &[path])?;
    Ok(mods.pop().expect("one module loaded"))
}

fn rows(m: &[FreeElement], ring: &PolyRing) -> Vec<Vec<String>> {
    m.iter().map(|e| e.to_strings(ring)).collect()
}

fn module_value(m: &GradedModule) -> Value {
    serde_json::to_value(ModuleJson::from_module(m)).expect("module JSON serializes")
}

fn fmt_rows(out: &mut String, rows: &[Vec<String>]) {
    for r in rows {
        let _ = writeln!(out, "  [{}]", r.join(", "));
    }
}

fn fmt_module(out: &mut String, label: &str, m: &GradedModule) {
    let _ = writeln!(out, "{label}: {} generators of degrees {:?}", m.rank(), m.generator_degrees());
    let rels = rows(m.relations(), m.ring());
    let _ = writeln!(out, "{label} relations: {}", rels.len());
    fmt_rows(out, &rels);
}

fn opt(v: Option<i64>) -> String {
    v.map_or_else(|| "-inf".to_string(), |d| d.to_string())
}

/// Regularity, with the zero module sitting at 0 for window purposes.
fn reg_or_zero(m: &GradedModule) -> CliResult<i64> {
    if m.is_zero() {
        Ok(0)
    } else {
        Ok(regularity(m)?)
    }
}

fn window(args: &WindowArgs, m: &GradedModule) -> CliResult<(i64, i64)> {
    match &args.range {
        Some(r) => parse_range(r),
        None => Ok((-5, reg_or_zero(m)? + 3)),
    }
}

fn table(header: &str, entries: &[(i64, String)]) -> String {
    let mut out = format!("d\t{header}\n");
    for (d, v) in entries {
        let _ = writeln!(out, "{d}\t{v}");
    }
    out
}

fn dispatch(common: &Common, command: &Command) -> CliResult<Report> {
    match command {
        Command::Gb(a) => {
            let m = one(common, &a.m)?;
            let gb = rows(m.gb().elements(), m.ring());
            let mut text = format!("groebner basis: {} elements\n", gb.len());
            fmt_rows(&mut text, &gb);
            Ok(Report {
                text,
                json: json!({ "gens": m.generator_degrees(), "gb": gb }),
            })
        }
        Command::Nf { module, v } => {
            let m = one(common, &module.m)?;
            let comps: Vec<&str> = v.split(',').map(str::trim).collect();
            if comps.len() != m.rank() {
                return Err(CliError::Input(format!(
                    "element has {} components, module has {} generators",
                    comps.len(),
                    m.rank()
                )));
            }
            let e = m.element(&comps)?;
            let nf = m.reduce(&e).to_strings(m.ring());
            let zero = nf.iter().all(|s| s == "0");
            Ok(Report {
                text: format!("normal form: [{}]\nzero in M: {zero}\n", nf.join(", ")),
                json: json!({ "normal_form": nf, "degree": e.degree(), "zero": zero }),
            })
        }
        Command::Saturate(a) => {
            let m = one(common, &a.m)?;
            let (sat, steps) = saturate_counting(m.gb())?;
            let sat_rows = rows(sat.elements(), m.ring());
            let mut text = format!("colon steps: {steps}\nsaturation: {} elements\n", sat_rows.len());
            fmt_rows(&mut text, &sat_rows);
            Ok(Report {
                text,
                json: json!({ "steps": steps, "saturation": sat_rows, "gens": m.generator_degrees() }),
            })
        }
        Command::Torsion(a) => {
            let m = Arc::new(one(common, &a.m)?);
            let dec = torsion_submodule(&m)?;
            let top = torsion_top_degree(&m)?;
            let mut text = format!("torsion top degree: {}\n", opt(top));
            fmt_module(&mut text, "torsion", &dec.torsion);
            fmt_module(&mut text, "torsion-free quotient", &dec.quotient);
            Ok(Report {
                text,
                json: json!({
                    "torsion_top_degree": top,
                    "torsion": module_value(&dec.torsion),
                    "torsion_free": module_value(&dec.quotient),
                }),
            })
        }
        Command::Truncate { module, d } => {
            let m = Arc::new(one(common, &module.m)?);
            let (t, _) = truncate(&m, *d)?;
            let mut text = format!("minimal generators: {}\n", t.rank());
            fmt_module(&mut text, "truncation", &t);
            Ok(Report {
                text,
                json: json!({ "d": d, "minimal_generators": t.rank(), "module": module_value(&t) }),
            })
        }
        Command::Resolve { module, cap } => {
            let m = one(common, &module.m)?;
            let cap = cap.unwrap_or(m.ring().nvars() + 1);
            let res = min_free_resolution(&m, cap)?;
            let betti = res.betti_degrees();
            let mut text = format!("complete: {}\n", res.complete);
            for (i, degs) in betti.iter().enumerate() {
                let _ = writeln!(text, "F{i}: rank {} degrees {degs:?}", degs.len());
            }
            let diffs: Vec<_> = res.differentials.iter().map(|d| rows(d, m.ring())).collect();
            Ok(Report {
                text,
                json: json!({ "complete": res.complete, "degrees": betti, "differentials": diffs }),
            })
        }
        Command::Reg(a) => {
            let m = one(common, &a.m)?;
            let r = regularity(&m)?;
            Ok(Report {
                text: format!("regularity: {r}\n"),
                json: json!({ "regularity": r }),
            })
        }
        Command::Hilbert(a) => {
            let m = one(common, &a.m)?;
            let (lo, hi) = window(a, &m)?;
            let h = hilbert_window(&m, lo, hi)?;
            let entries: Vec<_> = h.values.iter().map(|(d, v)| (*d, v.to_string())).collect();
            let mut text = table("dim M_d", &entries);
            let _ = writeln!(text, "hilbert polynomial: {}", h.polynomial);
            let _ = writeln!(text, "agrees from degree: {}", h.stability_bound);
            Ok(Report {
                text,
                json: json!({
                    "values": h.values.iter().map(|(d, v)| json!([d, v])).collect::<Vec<_>>(),
                    "polynomial": h.polynomial.to_string(),
                    "stability_bound": h.stability_bound,
                }),
            })
        }
        Command::Hom(a) => {
            let (_, mods) = load_modules(common, &[&a.m, &a.n])?;
            let [m, n]: [GradedModule; 2] = mods.try_into().expect("two modules loaded");
            let basis = hom_degree_zero(&Arc::new(m), &Arc::new(n))?;
            let mut text = format!("dimension: {}\n", basis.len());
            for (i, f) in basis.iter().enumerate() {
                let _ = writeln!(text, "map {i}:");
                fmt_rows(&mut text, &f.matrix_strings());
            }
            Ok(Report {
                text,
                json: json!({
                    "dimension": basis.len(),
                    "basis": basis.iter().map(|f| f.matrix_strings()).collect::<Vec<_>>(),
                }),
            })
        }
        Command::Qhom { pair, alt } => {
            let (_, mods) = load_modules(common, &[&pair.m, &pair.n])?;
            let [m, n]: [GradedModule; 2] = mods.try_into().expect("two modules loaded");
            let (m, n) = (QObject::new(m)?, QObject::new(n)?);
            let h = if *alt { hom_quotient_alt(&m, &n)? } else { hom_quotient(&m, &n)? };
            let mut text = format!(
                "dimension: {}\nlevel: {}\ncertificate: {:?}\n",
                h.dimension, h.level_used, h.stabilization_certificate
            );
            for (i, f) in h.basis.iter().enumerate() {
                let _ = writeln!(text, "map {i} on the level-{} submodule:", f.level());
                fmt_rows(&mut text, &f.representing_map().matrix_strings());
            }
            Ok(Report {
                text,
                json: h.to_json(),
            })
        }
        Command::Sections(a) | Command::Chi(a) => {
            let m = one(common, &a.m)?;
            let (lo, hi) = window(a, &m)?;
            let sections = matches!(command, Command::Sections(_));
            let f = CoherentSheaf::new(m)?;
            let mut entries = Vec::new();
            for d in lo..=hi {
                let v = if sections {
                    global_sections_dim(&f, d)? as i64
                } else {
                    euler_characteristic(&f, d)?
                };
                entries.push((d, v));
            }
            let (header, key) = if sections { ("h0", "sections") } else { ("chi", "chi") };
            let text = table(header, &entries.iter().map(|(d, v)| (*d, v.to_string())).collect::<Vec<_>>());
            Ok(Report {
                text,
                json: json!({ key: entries.iter().map(|(d, v)| json!([d, v])).collect::<Vec<_>>() }),
            })
        }
        Command::DemoSkyscraper { count } => {
            let rows = demo_no_section(common.p.unwrap_or(DEFAULT_PRIME), *count)?;
            let text = table("h0(F(d))", &rows.iter().map(|(d, v)| (*d, v.to_string())).collect::<Vec<_>>());
            Ok(Report {
                text,
                json: json!({
                    "module": "S/<x1> on P^1",
                    "sections": rows.iter().map(|(d, v)| json!([d, v])).collect::<Vec<_>>(),
                }),
            })
        }
        Command::DemoForgetful => {
            let r = demo_forgetful(common.p.unwrap_or(FORGETFUL_PRIME))?;
            let text = format!(
                "p: {}\ndim Hom(trivial, trivial): {}\ndim Hom(trivial, sign): {}\n\
                 identity outside the image: functional {:?} takes value {} at 1_V\nreflects isomorphisms: {}\n",
                r.p,
                r.hom_trivial_to_trivial,
                r.hom_trivial_to_sign,
                r.witness.functional,
                r.witness.value_at_identity,
                r.reflects_isos
            );
            Ok(Report {
                text,
                json: serde_json::to_value(&r).map_err(|e| CliError::Other(e.to_string()))?,
            })
        }
        Command::DemoConimg => {
            let r = demo_conimg()?;
            let text = format!(
                "R-linear endomorphisms of R: {}\nall linear endomorphisms: {}\nconimg of the inclusion: {}\n\
                 conimg G = conimg H: {}\n",
                r.r_linear_maps, r.all_linear_maps, r.conimg_of_inclusion, r.factorization_holds
            );
            Ok(Report {
                text,
                json: serde_json::to_value(&r).map_err(|e| CliError::Other(e.to_string()))?,
            })
        }
    }
}

