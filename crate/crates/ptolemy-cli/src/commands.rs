use std::collections::BTreeMap;
use std::process::ExitCode;

use anyhow::Context;
use num_bigint::BigInt;
use ptolemy::enumerate::{
    enumerate_all, enumerate_invariant, enumerate_perp_invariant, EnumFilter,
};
use ptolemy::qpoly::{csp_verify, csp_verify_all, orbit_report, CspMode, CspReport};
use ptolemy::series::{invariant_gf, solve_ptolemy_gf, Expo, Series};
use ptolemy::{count, Diagram};

use crate::output::{emit_rows, Row};
use crate::{
    polygon_index, require_within_limit, CountArgs, CspArgs, EnumArgs, Format, Mode, OrbitsArgs,
    SeriesArgs,
};

fn class_list(
    n: u32,
    filter: &crate::ClassFilter,
) -> anyhow::Result<Vec<(u32, u32, u32)>> {
    if let Some(stats) = filter.stats {
        return Ok(vec![stats]);
    }
    let all = count::nonzero_classes(n as i64)?;
    Ok(all.into_iter().filter(|&c| filter.admits(c)).collect())
}

pub fn count(args: CountArgs) -> anyhow::Result<ExitCode> {
    let n = polygon_index(args.n_gon)?;
    let classes = class_list(n, &args.class)?;
    let value = |class: (u32, u32, u32)| -> anyhow::Result<BigInt> {
        let (k, l, m) = (class.0 as i64, class.1 as i64, class.2 as i64);
        let v = match (args.rotation_order, args.perp) {
            (Some(order), None) => count::count_invariant(n as i64, k, l, m, order as i64)?,
            (None, Some(power)) => count::count_perp_invariant(n as i64, k, l, m, power as i64)?,
            (None, None) => count::count_ptolemy(n as i64, k, l, m)?,
            (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
        };
        Ok(v)
    };

    let mut rows = Vec::new();
    let mut total = BigInt::from(0u32);
    for class in classes {
        let v = value(class)?;
        total += &v;
        // Zero rows are noise unless the class was requested explicitly.
        if v != BigInt::from(0u32) || args.class.stats.is_some() {
            rows.push(Row::class_count(class, &v));
        }
    }
    emit_rows(args.format, &["triangles", "cliques", "empty_cells", "count"], &rows);
    if args.format == Format::TextTable {
        println!("total: {total}");
    }
    Ok(ExitCode::SUCCESS)
}

pub fn enumerate(args: EnumArgs) -> anyhow::Result<ExitCode> {
    let n = polygon_index(args.n_gon)?;
    require_within_limit(args.n_gon)?;
    let stream: Box<dyn Iterator<Item = Diagram>> = match (args.rotation_order, args.perp) {
        (Some(order), None) => Box::new(enumerate_invariant(n, order)?),
        (None, Some(power)) => Box::new(enumerate_perp_invariant(n, power)?),
        (None, None) => Box::new(enumerate_all(n)?),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    };
    let filter = EnumFilter {
        triangles: args.class.stats.map(|s| s.0).or(args.class.triangles),
        cliques: args.class.stats.map(|s| s.1).or(args.class.cliques),
        empty_cells: args.class.stats.map(|s| s.2).or(args.class.empty_cells),
        rotation_order: None,
        perp_power: None,
    };

    let mut emitted: u64 = 0;
    let mut json_items = Vec::new();
    if args.format == Format::Csv {
        println!("encoding");
    }
    for diagram in stream {
        if !filter.matches(&diagram)? {
            continue;
        }
        if args.limit == Some(emitted) {
            eprintln!("output truncated at {emitted} diagrams (--limit)");
            break;
        }
        emitted += 1;
        match args.format {
            Format::TextTable => println!("{}", diagram.canonical_encoding()),
            Format::Csv => println!("\"{}\"", diagram.canonical_encoding()),
            Format::Ndjson => println!("{}", serde_json::to_string(&diagram)?),
            Format::Json => json_items.push(diagram),
        }
    }
    if args.format == Format::Json {
        println!("{}", serde_json::to_string(&json_items)?);
    }
    Ok(ExitCode::SUCCESS)
}

/// Materialize every diagram of one class, optionally restricted to a
/// rotation-invariant subset first for speed.
fn class_members(n: u32, class: (u32, u32, u32)) -> anyhow::Result<Vec<Diagram>> {
    let filter = EnumFilter {
        triangles: Some(class.0),
        cliques: Some(class.1),
        empty_cells: Some(class.2),
        rotation_order: None,
        perp_power: None,
    };
    let mut members = Vec::new();
    for diagram in enumerate_all(n)? {
        if filter.matches(&diagram)? {
            members.push(diagram);
        }
    }
    Ok(members)
}

pub fn orbits(args: OrbitsArgs) -> anyhow::Result<ExitCode> {
    let n = polygon_index(args.n_gon)?;
    if args.check {
        require_within_limit(args.n_gon)?;
    }
    let classes = class_list(n, &args.class)?;

    let mut rows = Vec::new();
    let mut total = BigInt::from(0u32);
    let mut mismatches = Vec::new();
    for class in classes {
        let (k, l, m) = (class.0 as i64, class.1 as i64, class.2 as i64);
        let formula = count::count_orbits(n as i64, k, l, m)?;
        total += &formula;
        let mut row = Row::class_count(class, &formula);
        if args.check {
            let members = class_members(n, class)?;
            let report = orbit_report(args.n_gon, &members)?;
            let enumerated = BigInt::from(report.orbit_count());
            let ok = enumerated == formula;
            if !ok {
                mismatches.push((class, formula.clone(), enumerated.clone()));
            }
            row.push(enumerated.to_string());
            row.push(ok.to_string());
        }
        if formula != BigInt::from(0u32) || args.class.stats.is_some() {
            rows.push(row);
        }
    }

    let headers: &[&str] = if args.check {
        &["triangles", "cliques", "empty_cells", "orbits", "enumerated", "ok"]
    } else {
        &["triangles", "cliques", "empty_cells", "orbits"]
    };
    emit_rows(args.format, headers, &rows);
    if args.format == Format::TextTable {
        println!("total: {total}");
    }
    for (class, formula, enumerated) in &mismatches {
        eprintln!(
            "orbit count mismatch for class {:?}: formula {formula}, enumeration {enumerated}",
            class
        );
    }
    if mismatches.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::FAILURE)
    }
}

fn format_poly(coeffs: &[String]) -> String {
    let mut parts = Vec::new();
    for (e, c) in coeffs.iter().enumerate() {
        if c == "0" {
            continue;
        }
        let part = match (c.as_str(), e) {
            (_, 0) => c.clone(),
            ("1", 1) => "q".into(),
            ("1", _) => format!("q^{e}"),
            (_, 1) => format!("{c}*q"),
            _ => format!("{c}*q^{e}"),
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

pub fn csp(args: CspArgs) -> anyhow::Result<ExitCode> {
    let n = polygon_index(args.n_gon)?;
    let mode = match args.mode {
        Mode::Formula => CspMode::Formula,
        Mode::Enumeration => CspMode::Enumeration,
        Mode::Both => CspMode::Both,
    };
    if !matches!(mode, CspMode::Formula) {
        require_within_limit(args.n_gon)?;
    }
    let reports: Vec<CspReport> = match args.stats {
        Some(class) => vec![csp_verify(n, class, mode)?],
        None => csp_verify_all(n, mode)?,
    };
    let all_ok = reports.iter().all(|r| r.ok);

    if !all_ok {
        let failures: Vec<&CspReport> = reports.iter().filter(|r| !r.ok).collect();
        println!("{}", serde_json::to_string_pretty(&failures)?);
        for report in failures {
            eprintln!("cyclic sieving check failed for class {:?}", report.class);
        }
        return Ok(ExitCode::FAILURE);
    }

    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&reports)?),
        Format::Ndjson => {
            for report in &reports {
                println!("{}", serde_json::to_string(report)?);
            }
        }
        Format::Csv => {
            println!("triangles,cliques,empty_cells,order,value,formula,enumerated,ok");
            for report in &reports {
                let (k, l, m) = report.class;
                for div in &report.divisors {
                    println!(
                        "{k},{l},{m},{},{},{},{},{}",
                        div.order,
                        div.value.as_deref().unwrap_or(""),
                        div.formula.as_deref().unwrap_or(""),
                        div.enumerated.as_deref().unwrap_or(""),
                        div.ok
                    );
                }
            }
        }
        Format::TextTable => {
            for report in &reports {
                let (k, l, m) = report.class;
                println!("class ({k},{l},{m}): {}", format_poly(&report.polynomial));
                for div in &report.divisors {
                    let value = div.value.as_deref().unwrap_or("-");
                    let mut line = format!("  d={}: value {value}", div.order);
                    if let Some(f) = &div.formula {
                        line.push_str(&format!(" formula {f}"));
                    }
                    if let Some(e) = &div.enumerated {
                        line.push_str(&format!(" enumerated {e}"));
                    }
                    line.push_str(if div.ok { " ok" } else { " MISMATCH" });
                    println!("{line}");
                }
                if let Some(rsw) = &report.rsw {
                    println!(
                        "  orbits {} sizes {:?} congruent {}",
                        rsw.orbit_count, rsw.orbit_sizes, rsw.congruent
                    );
                }
            }
            println!("all checks passed");
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn series_check(args: SeriesArgs) -> anyhow::Result<ExitCode> {
    let degree = args.degree;
    let series = match args.invariant {
        Some(order) => invariant_gf(order, degree)?,
        None => solve_ptolemy_gf(degree),
    };

    // The solved series must satisfy P = z + x P^2 + (y1 + y2) P^3 / (1 - P);
    // a nonzero residual means the fixed-point iteration went wrong.
    if args.invariant.is_none() {
        let p = &series;
        let var = |z, x, y1, y2| {
            Series::monomial(Expo { z, x, y1, y2 }, BigInt::from(1), degree)
        };
        let p2 = p.mul(p);
        let p3 = p2.mul(p);
        let geom = p.geom_inverse().context("series has a z-constant term")?;
        let rhs = var(1, 0, 0, 0)
            .add(&var(0, 1, 0, 0).mul(&p2))
            .add(&var(0, 0, 1, 0).add(&var(0, 0, 0, 1)).mul(&p3).mul(&geom));
        let minus_one = Series::monomial(
            Expo { z: 0, x: 0, y1: 0, y2: 0 },
            BigInt::from(-1),
            degree,
        );
        let residual = rhs.add(&p.mul(&minus_one));
        if !residual.is_zero() {
            eprintln!("functional equation residual is nonzero");
            return Ok(ExitCode::FAILURE);
        }
        eprintln!("functional equation residual: 0");
    }

    // Fixed diagrams are rare, so the invariant stream stays cheap well past
    // the point where full enumeration stops being feasible.
    let enum_cap = match args.invariant {
        Some(_) => crate::enum_vertex_limit()?,
        None => crate::enum_vertex_limit()?.min(8),
    };
    let mut dump: Vec<(u32, u32, u32, u32, BigInt)> = Vec::new();
    for n in 1..=degree {
        let slice = series.z_slice(n);
        if args.invariant.is_some_and(|order| (n + 1) % order != 0) {
            if !slice.is_empty() {
                eprintln!("unexpected coefficients at degree {n}");
                return Ok(ExitCode::FAILURE);
            }
            continue;
        }

        // Every class the formulas consider possible, plus any the series
        // produced, so stray coefficients cannot hide.
        let mut classes: Vec<(u32, u32, u32)> = count::nonzero_classes(n as i64)?;
        for class in slice.keys() {
            if !classes.contains(class) {
                classes.push(*class);
            }
        }

        let n_vertices = n + 1;
        let enumerated: Option<BTreeMap<(u32, u32, u32), BigInt>> = if n_vertices <= enum_cap {
            Some(match args.invariant {
                Some(order) => ptolemy::enumerate::invariant_tally(n, order)?
                    .into_iter()
                    .map(|(c, v)| (c, BigInt::from(v)))
                    .collect(),
                None => ptolemy::enumerate::stats_tally(n)?
                    .into_iter()
                    .map(|(c, v)| (c, BigInt::from(v)))
                    .collect(),
            })
        } else {
            None
        };

        let zero = BigInt::from(0u32);
        let mut total = BigInt::from(0u32);
        for class in classes {
            let coefficient = slice.get(&class).unwrap_or(&zero).clone();
            let (k, l, m) = (class.0 as i64, class.1 as i64, class.2 as i64);
            let formula = match args.invariant {
                Some(order) => count::count_invariant(n as i64, k, l, m, order as i64)?,
                None => count::count_ptolemy(n as i64, k, l, m)?,
            };
            if coefficient != formula {
                eprintln!(
                    "coefficient mismatch at degree {n}, class ({k},{l},{m}): \
                     series {coefficient}, formula {formula}"
                );
                return Ok(ExitCode::FAILURE);
            }
            if let Some(tally) = &enumerated {
                let counted = tally.get(&class).unwrap_or(&zero);
                if &coefficient != counted {
                    eprintln!(
                        "coefficient mismatch at degree {n}, class ({k},{l},{m}): \
                         series {coefficient}, enumeration {counted}"
                    );
                    return Ok(ExitCode::FAILURE);
                }
            }
            total += &coefficient;
            if args.dump_coefficients && coefficient != zero {
                dump.push((n, class.0, class.1, class.2, coefficient));
            }
        }

        let lane = if enumerated.is_some() {
            "formula and enumeration"
        } else {
            "formula"
        };
        eprintln!("z^{n}: total {total}, agrees with {lane}");
    }

    if args.dump_coefficients {
        println!("n,triangles,cliques,empty_cells,value");
        for (n, k, l, m, v) in &dump {
            println!("{n},{k},{l},{m},{v}");
        }
    } else {
        println!("series check passed up to degree {degree}");
    }
    Ok(ExitCode::SUCCESS)
}
