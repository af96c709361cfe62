//! One function per subcommand, each building a [`Report`].

use std::collections::BTreeSet;
use std::fmt::Write;

use itertools::Itertools;
use serde_json::{json, Value};
use sympmat_core::exact::to_fraction_string;
use sympmat_core::matroid::{
    enumerate_symmetric, orbits as symmetric_orbits, partition_type, symplectic_orbits, Group,
};
use sympmat_core::polytope::{hull_equal, project_pi, symmetric_polytope, symplectic_polytope};
use sympmat_core::strata::{self, sp_schubert, StratumReport};
use sympmat_core::witness::{build_symplectic_witness, symplectic_sum, verify_certificate};
use sympmat_core::{
    admissible_pairs, enumerate_symplectic, is_representable, AdmissiblePair, Label,
    LatticePolytope, Pair, SymmetricMatroid, SymplecticMatroid, Trichotomy,
};

use crate::input;
use crate::output::Report;
use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GroupArg {
    /// The hyperoctahedral group BC_n acting on symplectic matroids.
    Signed,
    /// The symmetric group S_2n acting on all rank-2 matroids.
    Full,
}

fn pair_json(p: Pair) -> Value {
    json!([p.lo().signed(), p.hi().signed()])
}

fn pairs_json<'a>(pairs: impl IntoIterator<Item = &'a Pair>) -> Value {
    Value::Array(pairs.into_iter().map(|&p| pair_json(p)).collect())
}

fn bases_json(m: &SymplecticMatroid) -> Value {
    pairs_json(&m.pairs())
}

fn labels_json<'a>(ls: impl IntoIterator<Item = &'a Label>) -> Value {
    Value::Array(ls.into_iter().map(|l| json!(l.signed())).collect())
}

fn symmetric_json(m: &SymmetricMatroid) -> Value {
    json!({
        "bags": m.bags().iter().map(labels_json).collect::<Vec<_>>(),
        "loops": labels_json(&m.loops()),
        "degree": m.degree(),
        "weight": m.weight(),
        "length": m.length(),
    })
}

fn polytope_json(p: &LatticePolytope) -> Value {
    json!({ "ambient_dim": p.ambient_dim(), "affine_dim": p.affine_dim(), "points": p.points() })
}

fn trichotomy_name(t: Option<Trichotomy>) -> &'static str {
    match t {
        Some(Trichotomy::OnlyDegreeZero) => "only-degree-zero",
        Some(Trichotomy::OnlyDegreeAtLeastTwo) => "only-degree-at-least-two",
        Some(Trichotomy::Both) => "both",
        None => "none",
    }
}

fn yes(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

pub fn enumerate(n: usize) -> Result<Report, Failure> {
    let all = enumerate_symplectic(n).map_err(Failure::domain)?;
    let mut hist = vec![0usize; admissible_pairs(n).len()];
    for m in &all {
        hist[m.len() - 1] += 1;
    }
    let mut text = format!("{} symplectic matroids on E_{n}\n", all.len());
    writeln!(text, "histogram by basis count: {}", hist.iter().join("/")).unwrap();
    for m in &all {
        writeln!(text, "{m}").unwrap();
    }
    Ok(Report {
        text,
        json: json!({
            "n": n,
            "count": all.len(),
            "histogram": hist,
            "matroids": all.iter().map(bases_json).collect::<Vec<_>>(),
        }),
        header: vec!["index", "size", "bases"],
        rows: all
            .iter()
            .enumerate()
            .map(|(k, m)| vec![k.to_string(), m.len().to_string(), bases_json(m).to_string()])
            .collect(),
    })
}

/// Representative, members and, for `S_2n`, the partition type.
type FoundOrbit = (BTreeSet<Pair>, Vec<BTreeSet<Pair>>, Option<String>);

pub fn orbits(n: usize, group: GroupArg) -> Result<Report, Failure> {
    let found: Vec<FoundOrbit> = match group {
        GroupArg::Signed => {
            let all = enumerate_symplectic(n).map_err(Failure::domain)?;
            symplectic_orbits(&all)
                .into_iter()
                .map(|o| (o.representative, o.members.iter().map(SymplecticMatroid::pairs).collect(), None))
                .collect()
        }
        GroupArg::Full => {
            if n > 3 {
                return Err(Failure::domain(sympmat_core::Error::TooLarge { n, max: 3 }));
            }
            let all = enumerate_symmetric(n).map_err(Failure::domain)?;
            let sets: Vec<BTreeSet<Pair>> = all.iter().map(SymmetricMatroid::bases).collect();
            symmetric_orbits(n, &sets, Group::Symmetric)
                .into_iter()
                .map(|o| {
                    let m = SymmetricMatroid::from_bases(n, &o.representative).expect("orbit of matroids");
                    (o.representative, o.members, Some(partition_type(&m).to_string()))
                })
                .collect()
        }
    };
    let name = match group {
        GroupArg::Signed => format!("BC_{n}"),
        GroupArg::Full => format!("S_{}", 2 * n),
    };
    let show = |s: &BTreeSet<Pair>| format!("{{{}}}", s.iter().join(","));
    let mut text = format!("{} orbits under {name}\n", found.len());
    for (_, members, ty) in &found {
        let ty = ty.as_ref().map(|t| format!(" type {t}")).unwrap_or_default();
        writeln!(text, "size {}{ty}: {}", members.len(), members.iter().map(show).join(" ")).unwrap();
    }
    Ok(Report {
        text,
        json: json!({
            "n": n,
            "group": name,
            "orbits": found.iter().map(|(rep, members, ty)| json!({
                "representative": pairs_json(rep),
                "size": members.len(),
                "partition_type": ty,
                "members": members.iter().map(pairs_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        }),
        header: vec!["orbit", "size", "partition_type", "representative"],
        rows: found
            .iter()
            .enumerate()
            .map(|(k, (rep, members, ty))| {
                vec![k.to_string(), members.len().to_string(), ty.clone().unwrap_or_default(), pairs_json(rep).to_string()]
            })
            .collect(),
    })
}

pub fn representable(nm: &SymplecticMatroid) -> Result<Report, Failure> {
    let r = is_representable(nm);
    let mut text = format!("matroid: {nm}\n");
    writeln!(text, "representable: {}", yes(r.representable)).unwrap();
    writeln!(text, "trichotomy: {}", trichotomy_name(r.trichotomy)).unwrap();
    if let Some(m) = &r.witness_lifting {
        writeln!(text, "witness lifting: {m} (degree {})", m.degree()).unwrap();
    }
    writeln!(text, "normal liftings: {}", r.normal_liftings.iter().join(" ")).unwrap();
    writeln!(text, "maximal lifting ambiguous: {}", yes(r.max_is_ambiguous())).unwrap();
    writeln!(text, "liftings:").unwrap();
    for l in &r.liftings {
        writeln!(text, "  degree {}: {}", l.degree, l.matroid).unwrap();
    }
    Ok(Report {
        text,
        json: json!({
            "n": nm.n(),
            "bases": bases_json(nm),
            "representable": r.representable,
            "trichotomy": trichotomy_name(r.trichotomy),
            "witness_lifting": r.witness_lifting.as_ref().map(symmetric_json),
            "normal_liftings": r.normal_liftings.iter().map(symmetric_json).collect::<Vec<_>>(),
            "maximal_ambiguous": r.max_is_ambiguous(),
            "liftings": r.liftings.iter().map(|l| symmetric_json(&l.matroid)).collect::<Vec<_>>(),
        }),
        header: vec!["degree", "bags", "normal"],
        rows: r
            .liftings
            .iter()
            .map(|l| vec![l.degree.to_string(), l.matroid.to_string(), r.normal_liftings.contains(&l.matroid).to_string()])
            .collect(),
    })
}

pub fn witness(nm: &SymplecticMatroid) -> Result<Report, Failure> {
    let w = build_symplectic_witness(nm).map_err(Failure::domain)?;
    let verdict = verify_certificate(&w, nm);
    if !verdict.is_valid() {
        return Err(Failure::Domain(anyhow::anyhow!("certificate rejected: {verdict}")));
    }
    let n = nm.n();
    let minors: Vec<(Pair, String)> = sympmat_core::ground::all_pairs(n)
        .into_iter()
        .map(|p| (p, to_fraction_string(w.coordinate(p))))
        .collect();
    let rows_str: Vec<Vec<String>> = w.matrix().iter().map(|r| r.iter().map(to_fraction_string).collect()).collect();
    let s = to_fraction_string(&symplectic_sum(&w));
    let lifting = sympmat_core::witness::matroid_of_witness(&w);
    let mut text = format!("matroid: {nm}\nlifting: {lifting} (degree {})\nmatrix:\n", lifting.degree());
    for r in &rows_str {
        writeln!(text, "  [{}]", r.join(", ")).unwrap();
    }
    writeln!(text, "plucker coordinates:").unwrap();
    for (p, v) in &minors {
        writeln!(text, "  x{p} = {v}").unwrap();
    }
    writeln!(text, "s = {s}\ncertificate: {verdict}").unwrap();
    Ok(Report {
        text,
        json: json!({
            "n": n,
            "bases": bases_json(nm),
            "lifting": symmetric_json(&lifting),
            "matrix": rows_str,
            "plucker": minors.iter().map(|(p, v)| json!({"pair": pair_json(*p), "value": v})).collect::<Vec<_>>(),
            "symplectic_sum": s,
            "certificate": { "valid": verdict.is_valid(), "failures": Vec::<String>::new() },
        }),
        header: vec!["i", "j", "value"],
        rows: minors
            .iter()
            .map(|(p, v)| vec![p.lo().signed().to_string(), p.hi().signed().to_string(), v.clone()])
            .collect(),
    })
}

fn stratum_row(r: &StratumReport) -> Vec<String> {
    let d = &r.dims;
    vec![
        bases_json(&r.matroid).to_string(),
        r.max_lifting.to_string(),
        r.degree.to_string(),
        r.weight.to_string(),
        r.length.to_string(),
        d.total.to_string(),
        d.fiber.to_string(),
        d.quotient.to_string(),
        d.formula.case.to_string(),
        d.formula.total().to_string(),
        d.flagged.to_string(),
        r.stabilizer_full.dim.to_string(),
        r.stabilizer.dim.to_string(),
        r.stabilizer.components.map(|c| c.to_string()).unwrap_or_default(),
        r.homology_class.map(|c| c.to_string()).unwrap_or_default(),
        r.orbit_class.to_string(),
    ]
}

const STRATUM_HEADER: [&str; 16] = [
    "bases", "max_lifting", "degree", "weight", "length", "dim_total", "dim_fiber", "dim_quotient",
    "formula_case", "formula_total", "flagged", "stab_full_dim", "stab_dim", "stab_components",
    "class", "orbit",
];

fn stratum_json(r: &StratumReport) -> Value {
    let d = &r.dims;
    json!({
        "bases": bases_json(&r.matroid),
        "representable": r.representable,
        "max_lifting": symmetric_json(&r.max_lifting),
        "max_ambiguous": r.max_ambiguous,
        "dims": {
            "total": d.total, "fiber": d.fiber, "quotient": d.quotient,
            "formula": { "case": d.formula.case.to_string(), "fiber": d.formula.fiber, "base": d.formula.base, "total": d.formula.total() },
            "flagged": d.flagged,
        },
        "stabilizer": {
            "full": { "dim": r.stabilizer_full.dim, "components": r.stabilizer_full.components },
            "symplectic": { "dim": r.stabilizer.dim, "components": r.stabilizer.components },
        },
        "homology_class": r.homology_class.map(|c| c.to_string()),
        "orbit_class": r.orbit_class,
        "orbit_representative": pairs_json(&r.orbit_representative),
    })
}

pub fn classify(n: usize) -> Result<Report, Failure> {
    let reports = strata::classify(n).map_err(Failure::domain)?;
    let flagged = reports.iter().filter(|r| r.dims.flagged).count();
    let mut text = format!("{} strata on E_{n}, {flagged} with a flagged dimension formula\n", reports.len());
    for r in &reports {
        let d = &r.dims;
        write!(
            text,
            "{}  lifting {}  dim {} = {} + {}  formula {}{}  stab T {}",
            r.matroid,
            r.max_lifting,
            d.total,
            d.fiber,
            d.quotient,
            d.formula.total(),
            if d.flagged { " (flagged)" } else { "" },
            r.stabilizer.dim,
        )
        .unwrap();
        if let Some(c) = r.stabilizer.components {
            write!(text, " x{c}").unwrap();
        }
        if let Some(c) = r.homology_class {
            write!(text, "  class {c}").unwrap();
        }
        writeln!(text, "  orbit {}", r.orbit_class).unwrap();
    }
    let mut json = json!({ "n": n, "strata": reports.iter().map(stratum_json).collect::<Vec<_>>() });
    if n == 2 {
        let types = strata::invariant_types_n2().map_err(Failure::domain)?;
        writeln!(text, "{} torus-invariant subvarieties:", types.len()).unwrap();
        for t in &types {
            let what = if t.closed_orbit { "closed orbit in" } else { "stratum" };
            writeln!(text, "  {} {what} {}  dim {}", t.class, t.stratum, t.dim).unwrap();
        }
        json["invariant_types"] = Value::Array(
            types
                .iter()
                .map(|t| json!({
                    "stratum": bases_json(&t.stratum),
                    "closed_orbit": t.closed_orbit,
                    "class": t.class.to_string(),
                    "dim": t.dim,
                }))
                .collect(),
        );
    }
    Ok(Report {
        text,
        json,
        header: STRATUM_HEADER.to_vec(),
        rows: reports.iter().map(stratum_row).collect(),
    })
}

pub fn betti(n: usize) -> Result<Report, Failure> {
    let b = strata::betti_numbers(n).map_err(Failure::domain)?;
    let a = strata::betti_by_lefschetz(n).map_err(Failure::domain)?;
    let s = strata::betti_by_schubert_cells(n).map_err(Failure::domain)?;
    let fixed = strata::fixed_points(n).map_err(Failure::domain)?.len();
    let text = format!(
        "SpG(2,{}) has complex dimension {}\nbetti numbers by complex degree 0..{}: {}\ntotal rank {} = {fixed} fixed points\n",
        2 * n,
        strata::symplectic_grassmannian_dim(n),
        b.len() - 1,
        b.iter().join(" "),
        b.iter().sum::<u64>(),
    );
    Ok(Report {
        text,
        json: json!({
            "n": n,
            "dim": strata::symplectic_grassmannian_dim(n),
            "betti": b,
            "by_lefschetz": a,
            "by_schubert_cells": s,
            "fixed_points": fixed,
        }),
        header: vec!["k", "betti"],
        rows: b.iter().enumerate().map(|(k, v)| vec![k.to_string(), v.to_string()]).collect(),
    })
}

pub fn polytope(nm: &SymplecticMatroid) -> Result<Report, Failure> {
    let sym = symplectic_polytope(nm);
    let mut text = format!("matroid: {nm}\nsymplectic polytope: affine dimension {}\n", sym.affine_dim().unwrap_or(0));
    for p in sym.points() {
        writeln!(text, "  {p:?}").unwrap();
    }
    let mut rows: Vec<Vec<String>> = sym.points().iter().map(|p| vec!["symplectic".into(), json!(p).to_string()]).collect();
    let mut json = json!({ "n": nm.n(), "bases": bases_json(nm), "symplectic": polytope_json(&sym) });
    if let Some(m) = is_representable(nm).witness_lifting {
        let full = symmetric_polytope(&m);
        let projected = project_pi(&full).map_err(Failure::domain)?;
        let equal = hull_equal(&projected, &sym).map_err(Failure::domain)?;
        writeln!(text, "lifting {m}: polytope of affine dimension {}", full.affine_dim().unwrap_or(0)).unwrap();
        writeln!(text, "projection has the same hull: {}", yes(equal)).unwrap();
        rows.extend(full.points().iter().map(|p| vec!["lifting".into(), json!(p).to_string()]));
        json["lifting"] = symmetric_json(&m);
        json["lifting_polytope"] = polytope_json(&full);
        json["projected"] = polytope_json(&projected);
        json["hull_equal"] = json!(equal);
    }
    Ok(Report { text, json, header: vec!["polytope", "point"], rows })
}

pub fn schubert(n: usize, pair: Option<&str>) -> Result<Report, Failure> {
    if n < 2 {
        return Err(Failure::domain(sympmat_core::Error::RankTooSmall { n, min: 2 }));
    }
    let pairs: Vec<AdmissiblePair> = match pair {
        Some(s) => {
            let [a, b]: [i64; 2] = serde_json::from_str(s)
                .map_err(|e| Failure::Usage(format!("--pair must be a JSON pair: {e}")))?;
            input::admissible_set(n, &[[a, b]])?.into_iter().collect()
        }
        None => admissible_pairs(n),
    };
    let vars: Vec<_> = pairs.iter().map(|&p| sp_schubert(p, n)).collect();
    let mut text = String::new();
    for v in &vars {
        writeln!(text, "{}  dim {}  vanishing {}", v.pair, v.dim, v.vanishing.iter().join(" ")).unwrap();
    }
    let vanishing = |v: &strata::SchubertVariety| pairs_json(&v.vanishing.iter().map(|p| p.pair()).collect::<Vec<_>>());
    Ok(Report {
        text,
        json: json!({
            "n": n,
            "schubert": vars.iter().map(|v| json!({
                "pair": pair_json(v.pair.pair()),
                "dim": v.dim,
                "vanishing": vanishing(v),
            })).collect::<Vec<_>>(),
        }),
        header: vec!["pair", "dim", "vanishing"],
        rows: vars
            .iter()
            .map(|v| vec![pair_json(v.pair.pair()).to_string(), v.dim.to_string(), vanishing(v).to_string()])
            .collect(),
    })
}
