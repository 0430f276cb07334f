//! Seeded batch runner. Sample `i` draws from its own ChaCha stream, so the
//! report does not depend on the number of workers or their scheduling.

use std::collections::BTreeMap;
use std::fmt::Write;

use firlab::checks::{self, random_atom, random_atom_set, random_coprime_pair, random_nonunit};
use firlab::series::{self, PrincipalIdeal, DEFAULT_TRUNCATION};
use firlab::{IdentityCheck, Result, SkewRing};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::{Ctx, Report};

/// Random degrees stay at or below this, whatever `--max-degree` allows.
const SUITE_DEGREE: usize = 3;

pub(crate) fn pool(jobs: Option<usize>) -> rayon::ThreadPool {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        b = b.num_threads(j);
    }
    b.build().expect("thread pool")
}

pub(crate) fn run(ctx: &Ctx) -> Result<Report> {
    let r = &ctx.ring;
    r.require_finite("suite")?;
    let (seed, samples) = (ctx.cli.seed, ctx.cli.samples);
    let deg = SUITE_DEGREE.min(ctx.cli.max_degree);
    let results: Vec<Vec<IdentityCheck>> =
        pool(ctx.cli.jobs).install(|| (0..samples).into_par_iter().map(|i| sample(r, seed, i, deg)).collect());

    let mut tally: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    let mut violations = Vec::new();
    for (i, checks) in results.iter().enumerate() {
        for c in checks {
            let e = tally.entry(c.name.clone()).or_default();
            e.1 += 1;
            if c.equal {
                e.0 += 1;
            } else {
                violations.push(json!({ "sample": i, "check": c }));
            }
        }
    }
    let total: usize = tally.values().map(|t| t.1).sum();

    let mut text = format!(
        "suite over {} (seed {seed}, {samples} samples): {total} checks, {} violations\n",
        r.field().descriptor(),
        violations.len()
    );
    for (name, (passed, n)) in &tally {
        let _ = writeln!(text, "  {name}: {passed}/{n}");
    }
    for v in &violations {
        let _ = writeln!(text, "violation in sample {}: {}", v["sample"], v["check"]);
    }
    let by_check: BTreeMap<&String, _> = tally
        .iter()
        .map(|(k, (p, n))| (k, json!({ "passed": p, "total": n })))
        .collect();
    Ok(Report {
        text,
        ok: violations.is_empty(),
        json: json!({
            "seed": seed,
            "samples": samples,
            "checks": total,
            "by_check": by_check,
            "violations": violations,
        }),
    })
}

fn sample(r: &SkewRing, seed: u64, i: usize, deg: usize) -> Vec<IdentityCheck> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    let families: [(&str, Family); 8] = [
        ("length", length),
        ("similarity", similarity),
        ("matroid", matroid),
        ("dimension", dimension),
        ("wedderburn", wedderburn),
        ("rank_union", rank_union),
        ("product_rank", product_rank),
        ("series", series_ideals),
    ];
    let mut out = Vec::new();
    for (name, f) in families {
        match f(r, &mut rng, deg) {
            Ok(cs) => out.extend(cs),
            Err(e) => out.push(IdentityCheck::new(&format!("{name}_error"), e, "no error").with_equal(false)),
        }
    }
    out
}

type Family = fn(&SkewRing, &mut ChaCha8Rng, usize) -> Result<Vec<IdentityCheck>>;

fn length(r: &SkewRing, rng: &mut ChaCha8Rng, deg: usize) -> Result<Vec<IdentityCheck>> {
    let a = random_nonunit(r, rng, deg);
    let b = random_nonunit(r, rng, deg);
    checks::length_laws(r, &a, &b)
}

fn similarity(r: &SkewRing, rng: &mut ChaCha8Rng, deg: usize) -> Result<Vec<IdentityCheck>> {
    let (a, b) = random_coprime_pair(r, rng, deg)?;
    let mut out = checks::similar_pair(r, &a, &b)?;
    out.extend(checks::dissimilar_pair(r, &a, &r.mul(&a, &b))?);
    let p = random_atom(r, rng, deg.min(2))?;
    out.push(checks::schur(r, &p)?);
    Ok(out)
}

fn matroid(r: &SkewRing, rng: &mut ChaCha8Rng, _deg: usize) -> Result<Vec<IdentityCheck>> {
    let delta = random_atom_set(r, rng, 3, 2)?;
    let a = random_atom(r, rng, 2)?;
    let with_a = r.algebraic_set(delta.iter().cloned().chain([a.clone()]))?;
    let cl = r.closure(&with_a)?;
    let b = cl.elements()[rng.gen_range(0..cl.len())].clone();
    let gamma = random_atom_set(r, rng, 3, 2)?;
    let p = random_atom(r, rng, 2)?;
    Ok(vec![
        checks::exchange(r, &delta, &a, &b)?,
        checks::transitivity(r, &delta, &gamma, &p)?,
        checks::transitivity(r, &delta, &with_a, &b)?,
    ])
}

fn dimension(r: &SkewRing, rng: &mut ChaCha8Rng, deg: usize) -> Result<Vec<IdentityCheck>> {
    Ok(vec![checks::dimension_formula(r, &random_nonunit(r, rng, deg))?])
}

fn wedderburn(r: &SkewRing, rng: &mut ChaCha8Rng, deg: usize) -> Result<Vec<IdentityCheck>> {
    // half the time, start from an independent set so the reducible branch is exercised
    let f = if rng.gen_bool(0.5) {
        r.basis(&random_atom_set(r, rng, 3, 1)?)?.llcm().clone()
    } else {
        random_nonunit(r, rng, deg)
    };
    checks::wedderburn(r, &f)
}

fn rank_union(r: &SkewRing, rng: &mut ChaCha8Rng, _deg: usize) -> Result<Vec<IdentityCheck>> {
    let delta = random_atom_set(r, rng, 2, 2)?;
    let gamma = random_atom_set(r, rng, 2, 2)?;
    checks::rank_union(r, &delta, &gamma)
}

fn product_rank(r: &SkewRing, rng: &mut ChaCha8Rng, _deg: usize) -> Result<Vec<IdentityCheck>> {
    let a = random_nonunit(r, rng, 2);
    let b = random_nonunit(r, rng, 2);
    Ok(vec![checks::product_rank(r, &b, &a)?])
}

fn random_ideal(rng: &mut ChaCha8Rng) -> Result<PrincipalIdeal> {
    let m = rng.gen_range(0..4u32);
    let num = rng.gen_range(1..100u32);
    let den = if m == 0 { 1 } else { rng.gen_range(1..50u32) };
    PrincipalIdeal::parse(&format!("{num}/{den}*x^{m}"), DEFAULT_TRUNCATION)
}

fn series_ideals(_r: &SkewRing, rng: &mut ChaCha8Rng, _deg: usize) -> Result<Vec<IdentityCheck>> {
    let n = DEFAULT_TRUNCATION;
    let (a, b) = (random_ideal(rng)?, random_ideal(rng)?);
    let s = series::ideal_sum(&a, &b).ideal;
    let i = series::ideal_intersection(&a, &b).ideal;
    let label = vec![a.to_string(), b.to_string()];
    Ok(vec![
        IdentityCheck::new("series_sum", &s, &s)
            .with_equal(series::verify_sum(&a, &b, &s, n))
            .with_witnesses(label.clone()),
        IdentityCheck::new("series_intersection", &i, &i)
            .with_equal(series::verify_intersection(&a, &b, &i, n))
            .with_witnesses(label),
    ])
}
