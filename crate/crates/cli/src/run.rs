//! Subcommand implementations.

use crate::report::{digest, emit, Report};
use crate::{CapFlags, Command, GraphInput};
use lcgraph::code::{Caps, LinearCode};
use lcgraph::forms::Family;
use lcgraph::graph::{srg_bounds, srg_bounds_check, IntersectionArray, NamedFamily};
use lcgraph::scheme::{
    find_q_polynomial_ordering, krein_array, krein_tensor, multiplicity_lc, natural_ordering,
    self_duality_check, spectrum_from_intersection_array, RelationSet, SchemeSpectrum,
};
use lcgraph::Graph;
use serde_json::{json, Value};
use std::error::Error;
use std::fmt::Write as _;
use std::time::Instant;

type RunResult = Result<(), Box<dyn Error>>;

pub fn run(command: Command) -> RunResult {
    let started = Instant::now();
    match command {
        Command::Graph { input, vertex, csv } => {
            let (g, raw, echo) = load_graph(&input)?;
            let results = graph_results(&g, vertex)?;
            if csv {
                print!("{}", profile_csv(&results));
                return Ok(());
            }
            emit(
                &Report {
                    command: json!({"subcommand": "graph", "input": echo, "vertex": vertex}),
                    inputs_digest: digest(&raw),
                    results,
                },
                started,
            );
            Ok(())
        }
        Command::PowerScan {
            input,
            vertex,
            n_max,
            csv,
        } => {
            let (g, raw, echo) = load_graph(&input)?;
            let (rows, n0) = g.minimal_lc_power(vertex, n_max)?;
            if csv {
                let mut out = String::from("n,lc_holds,failing_index,coefficients\n");
                for row in &rows {
                    let coeffs: Vec<String> =
                        row.coefficients.coeffs().iter().map(|c| c.to_string()).collect();
                    writeln!(
                        out,
                        "{},{},{},{}",
                        row.n,
                        row.verdict.holds(),
                        row.verdict
                            .failing_index()
                            .map_or(String::new(), |i| i.to_string()),
                        coeffs.join(" ")
                    )?;
                }
                print!("{out}");
                return Ok(());
            }
            emit(
                &Report {
                    command: json!({
                        "subcommand": "power-scan", "input": echo,
                        "vertex": vertex, "n_max": n_max,
                    }),
                    inputs_digest: digest(&raw),
                    results: json!({"rows": rows, "minimal_lc_power": n0}),
                },
                started,
            );
            Ok(())
        }
        Command::Code { file, caps } => {
            let raw = read_input(&file)?;
            let code = LinearCode::parse(&String::from_utf8_lossy(&raw))?;
            let results = code_results(&code, &caps.into())?;
            emit(
                &Report {
                    command: json!({"subcommand": "code", "file": file}),
                    inputs_digest: digest(&raw),
                    results,
                },
                started,
            );
            Ok(())
        }
        Command::Scheme {
            array,
            relations,
            family,
            tolerance,
        } => {
            let (spec, raw, echo) = load_scheme(
                array.as_deref(),
                relations.as_deref(),
                family.as_deref(),
                tolerance,
            )?;
            let results = scheme_results(&spec);
            emit(
                &Report {
                    command: json!({
                        "subcommand": "scheme", "input": echo, "tolerance": tolerance,
                    }),
                    inputs_digest: digest(&raw),
                    results,
                },
                started,
            );
            Ok(())
        }
        Command::Formulas {
            family,
            params,
            csv,
        } => {
            let fam = Family::parse(&family)
                .ok_or_else(|| format!("unknown formula family {family:?}"))?;
            let grid = parse_grid(fam, &params)?;
            let rows = formulas_rows(fam, grid);
            if csv {
                print!("{}", formulas_csv(&rows));
                return Ok(());
            }
            emit(
                &Report {
                    command: json!({
                        "subcommand": "formulas", "family": family, "params": params,
                    }),
                    inputs_digest: digest(format!("{family} {params:?}").as_bytes()),
                    results: json!({"rows": rows}),
                },
                started,
            );
            Ok(())
        }
        Command::Corpus {
            manifest,
            caps,
            tolerance,
        } => {
            let raw = read_input(&manifest)?;
            let entries: Vec<Value> = serde_json::from_slice(&raw)
                .map_err(|e| format!("manifest {manifest}: {e}"))?;
            let caps: Caps = caps.into();
            let base = std::path::Path::new(&manifest)
                .parent()
                .map(|p| p.to_path_buf())
                .unwrap_or_default();
            let reports = run_corpus(&entries, &base, &caps, tolerance);
            let ok = reports.iter().filter(|r| r.get("error").is_none()).count();
            emit(
                &Report {
                    command: json!({"subcommand": "corpus", "manifest": manifest}),
                    inputs_digest: digest(&raw),
                    results: json!({
                        "entries": reports,
                        "summary": {
                            "total": entries.len(),
                            "ok": ok,
                            "errored": entries.len() - ok,
                        },
                    }),
                },
                started,
            );
            Ok(())
        }
    }
}

impl From<CapFlags> for Caps {
    fn from(flags: CapFlags) -> Caps {
        Caps {
            codewords: flags.cap_codewords,
            cosets: flags.cap_cosets,
            ..Caps::default()
        }
    }
}

fn read_input(path: &str) -> Result<Vec<u8>, String> {
    std::fs::read(path).map_err(|e| format!("cannot read {path}: {e}"))
}

fn load_graph(input: &GraphInput) -> Result<(Graph, Vec<u8>, Value), Box<dyn Error>> {
    match (&input.file, &input.family) {
        (Some(path), None) => {
            let raw = read_input(path)?;
            let g = Graph::parse(&String::from_utf8_lossy(&raw))?;
            Ok((g, raw, json!({"file": path})))
        }
        (None, Some(spec)) => {
            let g = NamedFamily::parse(spec)?.build()?;
            Ok((g, spec.as_bytes().to_vec(), json!({"family": spec})))
        }
        _ => Err("exactly one of --file or --family is required".into()),
    }
}

fn graph_results(g: &Graph, vertex: usize) -> Result<Value, Box<dyn Error>> {
    let profile = g.distance_profile(vertex)?;
    let ia = g.intersection_array()?;
    let srg = g.srg_parameters()?.map(|p| {
        let bounds = srg_bounds(p.kappa);
        json!({
            "parameters": p,
            "identity_holds": p.identity_holds(),
            "bounds": bounds,
            "bounds_check": srg_bounds_check(&p),
        })
    });
    Ok(json!({
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "vertex": vertex,
        "profile": profile,
        "profile_lc": g.is_lc_at(vertex)?,
        "ddr": g.is_ddr()?,
        "lc": g.is_lc_graph()?,
        "distance_regular": ia.is_some(),
        "intersection_array": ia,
        "srg": srg,
    }))
}

fn profile_csv(results: &Value) -> String {
    let mut out = String::from("distance,count\n");
    let counts = results["profile"]["counts"].as_array().unwrap();
    for (i, c) in counts.iter().enumerate() {
        out.push_str(&format!("{i},{}\n", c.as_u64().unwrap()));
    }
    out
}

fn code_results(code: &LinearCode, caps: &Caps) -> Result<Value, Box<dyn Error>> {
    let wd = code.weight_distribution(caps)?;
    let projective = code.is_projective();
    let two_weight = code.two_weight_check(caps)?;
    let delsarte = match two_weight.w1 {
        Some(w1) if two_weight.is_two_weight => {
            let g = code.delsarte_code_graph(w1, caps)?;
            // non-projective codes can yield a disconnected code graph
            let connected = g.distances_from(0).is_ok();
            let srg = if connected { g.srg_parameters()? } else { None };
            Some(json!({
                "n": g.vertex_count(),
                "m": g.edge_count(),
                "connected": connected,
                "strongly_regular": srg.is_some(),
                "srg_parameters": srg,
            }))
        }
        _ => None,
    };
    let analysis = code.coset_analysis(caps)?;
    let d_seq = analysis.d_sequence();
    let completely_regular = code.is_completely_regular(caps)?;
    let cg = code.coset_graph(caps)?;
    let coset_ia = cg.graph.intersection_array()?;
    Ok(json!({
        "q": code.field().order(),
        "length": code.length(),
        "dimension": code.dimension(),
        "weight_distribution": wd.counts,
        "projective": projective,
        "two_weight": two_weight,
        "delsarte_graph": delsarte,
        "coset_count": analysis.coset_count,
        "covering_radius": analysis.rho,
        "d_sequence": analysis.d,
        "d_sequence_lc": d_seq.is_log_concave(),
        "completely_regular": completely_regular,
        "coset_graph": {
            "n": cg.graph.vertex_count(),
            "m": cg.graph.edge_count(),
            "collapsed": cg.collapsed,
            "distance_regular": coset_ia.is_some(),
            "intersection_array": coset_ia,
        },
    }))
}

fn load_scheme(
    array: Option<&str>,
    relations: Option<&str>,
    family: Option<&str>,
    tolerance: f64,
) -> Result<(SchemeSpectrum, Vec<u8>, Value), Box<dyn Error>> {
    match (array, relations, family) {
        (Some(path), None, None) => {
            let raw = read_input(path)?;
            let ia: IntersectionArray = serde_json::from_slice(&raw)
                .map_err(|e| format!("intersection array {path}: {e}"))?;
            IntersectionArray::new(ia.b.clone(), ia.c.clone())?;
            let spec = spectrum_from_intersection_array(&ia, tolerance)?;
            Ok((spec, raw, json!({"array": path})))
        }
        (None, Some(path), None) => {
            let raw = read_input(path)?;
            let matrices: Vec<Vec<Vec<u8>>> = serde_json::from_slice(&raw)
                .map_err(|e| format!("relation matrices {path}: {e}"))?;
            let rels = RelationSet::new(matrices)?;
            let spec = rels.spectrum(tolerance)?;
            Ok((spec, raw, json!({"relations": path})))
        }
        (None, None, Some(spec_str)) => {
            let g = NamedFamily::parse(spec_str)?.build()?;
            // distance-regular families go through the intersection array so
            // integral spectra stay exact; anything else uses the explicit
            // relation-matrix route
            let spec = match g.intersection_array()? {
                Some(ia) => spectrum_from_intersection_array(&ia, tolerance)?,
                None => RelationSet::from_graph_distances(&g)?.spectrum(tolerance)?,
            };
            Ok((spec, spec_str.as_bytes().to_vec(), json!({"family": spec_str})))
        }
        _ => Err("exactly one of --array, --relations, or --family is required".into()),
    }
}

fn scheme_results(spec: &SchemeSpectrum) -> Value {
    let kt = krein_tensor(spec);
    let ordering = find_q_polynomial_ordering(&kt);
    let active = ordering
        .clone()
        .unwrap_or_else(|| natural_ordering(spec.class_count()));
    let ka = krein_array(&kt, &active);
    let mult = multiplicity_lc(spec, &active);
    json!({
        "mode": if spec.is_exact() { "exact" } else { "float" },
        "spectrum": spec,
        "krein": {
            "condition_holds": kt.krein_condition_holds(),
            "min_entry": kt.min_entry_f64(),
        },
        "q_polynomial_ordering": ordering,
        "krein_array": ka,
        "property_m": ka.property_m(),
        "multiplicity_lc": mult,
        "self_dual": self_duality_check(spec),
    })
}

fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<u64>, String> {
    let bad = || format!("bad parameter range {text:?}; expected \"lo..hi\" or a value");
    if let Some((lo, hi)) = text.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
        Ok(lo..=hi)
    } else {
        let v: u64 = text.trim().parse().map_err(|_| bad())?;
        Ok(v..=v)
    }
}

fn parse_grid(fam: Family, params: &[String]) -> Result<Vec<Vec<u64>>, String> {
    if params.len() != fam.arity() {
        return Err(format!(
            "family takes {} parameters, got {}",
            fam.arity(),
            params.len()
        ));
    }
    let ranges: Vec<_> = params
        .iter()
        .map(|p| parse_range(p))
        .collect::<Result<_, _>>()?;
    let mut grid = vec![Vec::new()];
    for range in ranges {
        grid = grid
            .into_iter()
            .flat_map(|prefix: Vec<u64>| {
                range.clone().map(move |v| {
                    let mut row = prefix.clone();
                    row.push(v);
                    row
                })
            })
            .collect();
    }
    Ok(grid)
}

fn formulas_rows(fam: Family, grid: Vec<Vec<u64>>) -> Vec<Value> {
    let sum_checked = matches!(
        fam,
        Family::SymplecticValencies | Family::BilinearValencies
    );
    grid.into_iter()
        .map(|params| match fam.evaluate(&params) {
            Ok(sequence) => json!({
                "params": params,
                "sequence": sequence,
                "lc_verdict": sequence.is_log_concave(),
                // the vertex-count sum identity is asserted inside evaluation
                "sum_check": if sum_checked { Some(true) } else { None },
            }),
            Err(e) => json!({"params": params, "error": e.to_string()}),
        })
        .collect()
}

fn formulas_csv(rows: &[Value]) -> String {
    let mut out = String::from("params,lc_holds,failing_index,sequence\n");
    for row in rows {
        let params: Vec<String> = row["params"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.to_string())
            .collect();
        if let Some(err) = row.get("error") {
            out.push_str(&format!("{},error,,{}\n", params.join(" "), err));
            continue;
        }
        let seq: Vec<String> = row["sequence"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap().to_string())
            .collect();
        out.push_str(&format!(
            "{},{},{},{}\n",
            params.join(" "),
            row["lc_verdict"]["holds"],
            row["lc_verdict"]["index"]
                .as_u64()
                .map_or(String::new(), |i| i.to_string()),
            seq.join(" ")
        ));
    }
    out
}

/// Run manifest entries concurrently; results merged in manifest order.
/// Entry file paths are resolved against the manifest's directory.
fn run_corpus(
    entries: &[Value],
    base: &std::path::Path,
    caps: &Caps,
    tolerance: f64,
) -> Vec<Value> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = entries
            .iter()
            .map(|entry| scope.spawn(move || corpus_entry(entry, base, caps, tolerance)))
            .collect();
        handles
            .into_iter()
            .zip(entries)
            .map(|(h, entry)| match h.join() {
                Ok(Ok(results)) => json!({"entry": entry, "results": results}),
                Ok(Err(e)) => json!({"entry": entry, "error": e}),
                Err(_) => json!({"entry": entry, "error": "entry panicked"}),
            })
            .collect()
    })
}

fn corpus_entry(
    entry: &Value,
    base: &std::path::Path,
    caps: &Caps,
    tolerance: f64,
) -> Result<Value, String> {
    let fail = |e: Box<dyn Error>| e.to_string();
    let kind = entry["kind"]
        .as_str()
        .ok_or("entry is missing a \"kind\" field")?;
    let resolve = |path: &str| base.join(path).to_string_lossy().into_owned();
    let graph_of = |entry: &Value| -> Result<Graph, String> {
        if let Some(spec) = entry["family"].as_str() {
            Ok(NamedFamily::parse(spec)
                .map_err(|e| e.to_string())?
                .build()
                .map_err(|e| e.to_string())?)
        } else if let Some(path) = entry["file"].as_str() {
            let raw = read_input(&resolve(path))?;
            Graph::parse(&String::from_utf8_lossy(&raw)).map_err(|e| e.to_string())
        } else {
            Err("graph entry needs \"family\" or \"file\"".into())
        }
    };
    match kind {
        "graph" => {
            let g = graph_of(entry)?;
            let vertex = entry["vertex"].as_u64().unwrap_or(0) as usize;
            graph_results(&g, vertex).map_err(fail)
        }
        "power-scan" => {
            let g = graph_of(entry)?;
            let vertex = entry["vertex"].as_u64().unwrap_or(0) as usize;
            let n_max = entry["n_max"].as_u64().unwrap_or(20) as u32;
            let (rows, n0) = g.minimal_lc_power(vertex, n_max).map_err(|e| e.to_string())?;
            Ok(json!({"rows": rows, "minimal_lc_power": n0}))
        }
        "code" => {
            let path = entry["file"]
                .as_str()
                .ok_or("code entry needs a \"file\" field")?;
            let raw = read_input(&resolve(path))?;
            let code =
                LinearCode::parse(&String::from_utf8_lossy(&raw)).map_err(|e| e.to_string())?;
            code_results(&code, caps).map_err(fail)
        }
        "scheme" => {
            let spec = if entry.get("array").is_some() {
                let ia: IntersectionArray = serde_json::from_value(entry["array"].clone())
                    .map_err(|e| format!("inline intersection array: {e}"))?;
                spectrum_from_intersection_array(&ia, tolerance).map_err(|e| e.to_string())?
            } else if let Some(spec) = entry["family"].as_str() {
                let g = NamedFamily::parse(spec)
                    .map_err(|e| e.to_string())?
                    .build()
                    .map_err(|e| e.to_string())?;
                let rels = RelationSet::from_graph_distances(&g).map_err(|e| e.to_string())?;
                rels.spectrum(tolerance).map_err(|e| e.to_string())?
            } else {
                return Err("scheme entry needs \"array\" or \"family\"".into());
            };
            Ok(scheme_results(&spec))
        }
        "formulas" => {
            let name = entry["family"]
                .as_str()
                .ok_or("formulas entry needs a \"family\" field")?;
            let fam =
                Family::parse(name).ok_or_else(|| format!("unknown formula family {name:?}"))?;
            let params: Vec<String> = serde_json::from_value(entry["params"].clone())
                .map_err(|e| format!("formulas params: {e}"))?;
            let grid = parse_grid(fam, &params)?;
            Ok(json!({"rows": formulas_rows(fam, grid)}))
        }
        other => Err(format!("unknown entry kind {other:?}")),
    }
}
