//! The acceptance suite: one line per criterion, then a single verdict.
//!
//! Run with `cargo test -p sympmat-core --test acceptance -- --nocapture`.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use sympmat_core::matroid::{enumerate_symmetric, liftings, Trichotomy};
use sympmat_core::strata::{
    betti_by_lefschetz, betti_by_schubert_cells, betti_numbers, classify, fixed_points,
    invariant_types_n2, stabilizer, HomologyClass, Torus,
};
use sympmat_core::witness::{
    build_symplectic_witness, grassmann_plucker_holds, matroid_of_witness, symplectic_sum,
    torus_act, verify_certificate, PluckerWitness,
};
use sympmat_core::{
    enumerate_admissible_orders, enumerate_symplectic, is_representable, is_symplectic_matroid,
    symplectic_projection, AdmissiblePair, Error, SymplecticMatroid,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn enumeration_n2() -> Outcome {
    let all = enumerate_symplectic(2).map_err(|e| e.to_string())?;
    let mut hist = [0usize; 4];
    for m in &all {
        hist[m.len() - 1] += 1;
    }
    ensure(all.len() == 15, format!("{} matroids", all.len()))?;
    ensure(hist == [4, 6, 4, 1], format!("histogram {hist:?}"))?;
    Ok(format!("{} matroids, histogram {hist:?}", all.len()))
}

fn orbits_n2() -> Outcome {
    let all = enumerate_symplectic(2).map_err(|e| e.to_string())?;
    let orbits = sympmat_core::matroid::symplectic_orbits(&all);
    ensure(orbits.len() == 5, format!("{} orbits", orbits.len()))?;
    let a = sp(2, &[(1, 2), (-1, -2)]);
    let b = sp(2, &[(-1, 2), (1, -2)]);
    let orbit = orbits.iter().find(|o| o.members.contains(&a)).ok_or("opposite-pair orbit missing")?;
    let members: BTreeSet<&SymplecticMatroid> = orbit.members.iter().collect();
    ensure(members == BTreeSet::from([&a, &b]), format!("opposite-pair orbit has {} members", members.len()))?;
    Ok("5 orbits; opposite pairs = {{1,2},{1*,2*}}, {{1*,2},{1,2*}}".into())
}

fn order_counts() -> Outcome {
    let mut counts = Vec::new();
    for n in 1..=5 {
        let want: usize = (1..=n).product::<usize>() << n;
        let got = enumerate_admissible_orders(n).len();
        ensure(got == want, format!("n = {n}: {got} orders, expected {want}"))?;
        counts.push(got);
    }
    Ok(format!("counts {counts:?}"))
}

fn constructive_representability() -> Outcome {
    let mut sizes = Vec::new();
    for n in 1..=3 {
        let all = enumerate_symplectic(n).map_err(|e| e.to_string())?;
        let certified: BTreeSet<BTreeSet<AdmissiblePair>> = all
            .iter()
            .filter(|m| build_symplectic_witness(m).is_ok_and(|w| verify_certificate(&w, m).is_valid()))
            .map(|m| m.bases().clone())
            .collect();
        let liftable: BTreeSet<BTreeSet<AdmissiblePair>> = all
            .iter()
            .filter(|m| liftings(m).is_ok_and(|ls| ls.iter().any(|l| l.degree != 1)))
            .map(|m| m.bases().clone())
            .collect();
        let projected: BTreeSet<BTreeSet<AdmissiblePair>> = enumerate_symmetric(n)
            .map_err(|e| e.to_string())?
            .iter()
            .filter(|m| m.degree() != 1)
            .map(projection)
            .filter(|b| !b.is_empty())
            .collect();
        ensure(certified == liftable, format!("n = {n}: certified != liftable"))?;
        ensure(liftable == projected, format!("n = {n}: liftable != projected"))?;
        sizes.push(format!("n={n}: {} of {}", certified.len(), all.len()));
    }
    Ok(format!("three sets agree ({})", sizes.join(", ")))
}

fn degree_one_obstruction_case() -> Outcome {
    let m = sym(3, &[&[1, 2, -2], &[-1, 3, -3]]);
    let b = symplectic_projection(&m).map_err(|e| e.to_string())?;
    ensure(is_symplectic_matroid(&b, 3), "projection is not symplectic")?;
    let n = SymplecticMatroid::new(3, b).map_err(|e| e.to_string())?;
    ensure(n == degree_one_obstruction(), "unexpected projection")?;
    ensure(!is_representable(&n).representable, "reported representable")?;
    ensure(
        build_symplectic_witness(&n) == Err(Error::NotRepresentable),
        "witness construction did not fail with NotRepresentable",
    )?;
    Ok("symplectic, not representable, witness refused".into())
}

fn certificates_n2() -> Outcome {
    let all = enumerate_symplectic(2).map_err(|e| e.to_string())?;
    for m in &all {
        ensure(is_representable(m).representable, format!("{m} not representable"))?;
        let w = build_symplectic_witness(m).map_err(|e| format!("{m}: {e}"))?;
        let v = verify_certificate(&w, m);
        ensure(v.is_valid(), format!("{m}: {v}"))?;
    }
    Ok(format!("{} certificates verified", all.len()))
}

fn betti() -> Outcome {
    let b2 = betti_numbers(2).map_err(|e| e.to_string())?;
    ensure(b2 == vec![1, 1, 1, 1], format!("n = 2: {b2:?}"))?;
    for n in 2..=6 {
        let a = betti_by_lefschetz(n).map_err(|e| e.to_string())?;
        let b = betti_by_schubert_cells(n).map_err(|e| e.to_string())?;
        ensure(a == b, format!("n = {n}: {a:?} vs {b:?}"))?;
        let total: u64 = a.iter().sum();
        ensure(total == (2 * n * (n - 1)) as u64, format!("n = {n}: total {total}"))?;
    }
    Ok(format!("n=2 {b2:?}; both methods agree for n <= 6"))
}

fn fixed_point_counts() -> Outcome {
    let mut counts = Vec::new();
    for n in 2..=5 {
        let got = fixed_points(n).map_err(|e| e.to_string())?.len();
        ensure(got == 2 * n * (n - 1), format!("n = {n}: {got}"))?;
        counts.push(got);
    }
    Ok(format!("counts {counts:?}"))
}

fn classification_n2() -> Outcome {
    let types = invariant_types_n2().map_err(|e| e.to_string())?;
    ensure(types.len() == 16, format!("{} types", types.len()))?;
    let mut by_class: BTreeMap<HomologyClass, usize> = BTreeMap::new();
    for t in &types {
        *by_class.entry(t.class).or_default() += 1;
        let want = t.class.dim() as i64;
        ensure(t.dim == want, format!("{} {}: dim {} vs {}", t.stratum, t.class, t.dim, want))?;
    }
    let want = BTreeMap::from([
        (HomologyClass::Point, 4),
        (HomologyClass::Line, 4),
        (HomologyClass::TwoLines, 2),
        (HomologyClass::Hyperplane, 4),
        (HomologyClass::TwoHyperplanes, 1),
        (HomologyClass::Whole, 1),
    ]);
    ensure(by_class == want, format!("class counts {by_class:?}"))?;
    let dims: Vec<usize> = want.keys().map(|c| c.dim()).collect();
    ensure(dims == vec![0, 1, 1, 2, 2, 3], format!("dims {dims:?}"))?;
    // the class of a stratum only depends on its signed-permutation orbit
    let reports = classify(2).map_err(|e| e.to_string())?;
    let mut per_orbit: BTreeMap<usize, BTreeSet<Option<HomologyClass>>> = BTreeMap::new();
    for r in &reports {
        per_orbit.entry(r.orbit_class).or_default().insert(r.homology_class);
    }
    ensure(per_orbit.values().all(|s| s.len() == 1), "class varies inside an orbit")?;
    let summary: Vec<String> = by_class.iter().map(|(c, k)| format!("{k}x{c}")).collect();
    Ok(format!("16 types: {}", summary.join(", ")))
}

fn stabilizer_index() -> Outcome {
    let mut checked = 0;
    for n in 2..=3 {
        for nm in enumerate_symplectic(n).map_err(|e| e.to_string())? {
            let r = is_representable(&nm);
            if r.trichotomy != Some(Trichotomy::Both) {
                continue;
            }
            let zero = stabilizer(&r.normal_liftings[0], Torus::Symplectic);
            let top = stabilizer(&r.normal_liftings[1], Torus::Symplectic);
            ensure(zero.dim == top.dim, format!("{nm}: dims {} vs {}", zero.dim, top.dim))?;
            if let (Some(a), Some(b)) = (zero.components, top.components) {
                ensure(a % b == 0 && a / b <= 2, format!("{nm}: components {a} vs {b}"))?;
            }
            checked += 1;
        }
    }
    ensure(checked > 0, "no matroid has both kinds of lifting")?;
    Ok(format!("{checked} matroids with both liftings"))
}

fn fuzz() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut rank_two = 0;
    let mut tries = 0;
    while rank_two < 1000 {
        tries += 1;
        let n = 1 + tries % 5;
        let Ok(w) = PluckerWitness::new(random_matrix(&mut rng, n)) else { continue };
        rank_two += 1;
        ensure(grassmann_plucker_holds(&w), format!("relation fails on\n{w}"))?;
        let mu: Vec<_> = (0..n).map(|_| random_nonzero(&mut rng)).collect();
        let t = torus_act(&w, &mu).map_err(|e| e.to_string())?;
        ensure(t.support() == w.support(), "torus changed the pattern")?;
        ensure(symplectic_sum(&t) == symplectic_sum(&w), "torus changed s")?;
        ensure(grassmann_plucker_holds(&t), "relation fails after the torus")?;
    }
    let mut certified = 0;
    for n in 2..=3 {
        for nm in enumerate_symplectic(n).map_err(|e| e.to_string())? {
            let Ok(w) = build_symplectic_witness(&nm) else { continue };
            let mu: Vec<_> = (0..n).map(|_| random_nonzero(&mut rng)).collect();
            let t = torus_act(&w, &mu).map_err(|e| e.to_string())?;
            ensure(symplectic_sum(&t).is_zero(), format!("{nm}: s != 0 after the torus"))?;
            ensure(matroid_of_witness(&t) == matroid_of_witness(&w), format!("{nm}: matroid changed"))?;
            ensure(verify_certificate(&t, &nm).is_valid(), format!("{nm}: certificate lost"))?;
            certified += 1;
        }
    }
    Ok(format!("{rank_two} random witnesses, {certified} certified witnesses moved by T"))
}

fn dimension_ledger() -> Outcome {
    let mut flagged = 0;
    let mut total = 0;
    for n in 2..=3 {
        for r in classify(n).map_err(|e| e.to_string())? {
            total += 1;
            let d = &r.dims;
            let agree = d.formula.total() == d.total;
            ensure(d.flagged == !agree, format!("{}: flag does not match", r.matroid))?;
            if r.length != 2 {
                ensure(agree, format!("{}: formula {} vs {}", r.matroid, d.formula.total(), d.total))?;
            }
            if d.flagged {
                flagged += 1;
            }
        }
    }
    Ok(format!("{total} strata, {flagged} flagged, all with two bags"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        ("n=2 enumeration", enumeration_n2),
        ("n=2 orbits", orbits_n2),
        ("admissible order counts", order_counts),
        ("constructive representability, n <= 3", constructive_representability),
        ("degree-one obstruction", degree_one_obstruction_case),
        ("n=2 certificates", certificates_n2),
        ("Betti numbers", betti),
        ("fixed points", fixed_point_counts),
        ("n=2 classification", classification_n2),
        ("stabilizer index", stabilizer_index),
        ("property fuzz", fuzz),
        ("dimension ledger", dimension_ledger),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL  {name}: {why}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
