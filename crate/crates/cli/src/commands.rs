use std::fmt::Write;

use firlab::checks;
use firlab::series::{self, PrincipalIdeal, TruncatedSeries, DEFAULT_TRUNCATION};
use firlab::wedderburn::Verdict;
use firlab::{AlgebraicSet, IdentityCheck, Result, SkewPoly, SkewRing};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{suite, Command, Ctx, Report};

pub(crate) fn dispatch(ctx: &Ctx) -> Result<Report> {
    let r = &ctx.ring;
    let p = |s: &str| r.parse(s);
    let fmt = |x: &SkewPoly| r.format(x);
    match &ctx.cli.command {
        Command::Mul { a, b } => Ok(single("product", fmt(&r.mul(&p(a)?, &p(b)?)))),
        Command::Llcm { a, b } => Ok(single("llcm", fmt(&r.llcm(&p(a)?, &p(b)?)?))),
        Command::Conj { a, b } => Ok(single("conjugate", fmt(&r.conj(&p(a)?, &p(b)?)?))),
        Command::Divr { f, g } => {
            let (q, rem) = r.right_divmod(&p(f)?, &p(g)?)?;
            Ok(division(fmt(&q), fmt(&rem)))
        }
        Command::Divl { f, g } => {
            let (q, rem) = r.left_divmod(&p(f)?, &p(g)?)?;
            Ok(division(fmt(&q), fmt(&rem)))
        }
        Command::Rgcd { a, b } => {
            let bz = r.rgcd(&p(a)?, &p(b)?)?;
            let (d, u, v) = (fmt(&bz.d), fmt(&bz.u), fmt(&bz.v));
            Ok(Report::ok(
                format!("{d}\nu: {u}\nv: {v}\n"),
                json!({ "gcd": d, "u": u, "v": v }),
            ))
        }
        Command::Factor { f } => {
            let fact = r.factor_atomic(&p(f)?)?;
            let unit = r.field().format(&fact.unit);
            let atoms = names(r, &fact.atoms);
            let mut text: String = atoms.iter().map(|a| format!("({a})")).collect();
            if !r.field().is_one(&fact.unit) || text.is_empty() {
                text.insert_str(0, &unit);
            }
            Ok(Report::ok(
                format!("{text}\n"),
                json!({ "unit": unit, "atoms": atoms, "length": fact.atoms.len() }),
            ))
        }
        Command::Atoms { degree } => {
            let atoms = names(r, &r.enumerate_atoms(*degree)?);
            let text = atoms.iter().fold(String::new(), |mut s, a| {
                let _ = writeln!(s, "{a}");
                s
            });
            Ok(Report::ok(
                text,
                json!({ "degree": degree, "count": atoms.len(), "atoms": atoms }),
            ))
        }
        Command::Similar { f, g } => {
            let w = r.is_similar(&p(f)?, &p(g)?)?;
            let witness = w.as_ref().map(fmt);
            let text = match &witness {
                Some(u) => format!("true\nwitness: {u}\n"),
                None => "false\n".to_string(),
            };
            Ok(Report::ok(text, json!({ "similar": w.is_some(), "witness": witness })))
        }
        Command::Eigenring { p: atom } => {
            let e = r.eigenring(&p(atom)?)?;
            let s = e.summary();
            let basis = names(r, &e.basis);
            Ok(Report::ok(
                format!(
                    "prime dimension: {}\norder: {}\ncommutative: {}\nbasis: {}\n",
                    s.prime_dimension,
                    s.order,
                    s.commutative,
                    set_text(&basis)
                ),
                json!({
                    "prime_dimension": s.prime_dimension,
                    "order": s.order.to_string(),
                    "commutative": s.commutative,
                    "basis": basis,
                }),
            ))
        }
        Command::LambdaDim { f, p: atom } => {
            let (f, atom) = (p(f)?, p(atom)?);
            let kernel = r.lambda_kernel(&f, &atom)?.len();
            let dim = r.dim_over_eigenring(&f, &atom)?;
            Ok(Report::ok(
                format!("{dim}\nprime dimension: {kernel}\n"),
                json!({ "dimension": dim, "prime_dimension": kernel }),
            ))
        }
        Command::Vset { f } => {
            let v = r.v_set(&p(f)?)?;
            let rank = r.rank(&v)?;
            Ok(set_report(r, &v, Some(rank)))
        }
        Command::Rank { elems } => {
            let set = parse_set(r, elems)?;
            let rank = r.rank(&set)?;
            Ok(Report::ok(
                format!("{rank}\n"),
                json!({ "rank": rank, "llcm": fmt(set.llcm()) }),
            ))
        }
        Command::Basis { elems } => Ok(set_report(r, &r.basis(&parse_set(r, elems)?)?, None)),
        Command::Closure { elems } => Ok(set_report(r, &r.closure(&parse_set(r, elems)?)?, None)),
        Command::Classes { elems } => {
            let dec = r.class_decompose(&parse_set(r, elems)?)?;
            let mut text = String::new();
            let mut classes = Vec::new();
            for c in &dec.classes {
                let members = names(r, &c.members);
                let _ = writeln!(text, "{}: rank {}", set_text(&members), c.rank);
                classes.push(json!({
                    "representative": fmt(&c.representative),
                    "members": members,
                    "rank": c.rank,
                }));
            }
            let _ = writeln!(text, "total rank: {}", dec.total_rank());
            Ok(Report::ok(text, json!({ "classes": classes, "total_rank": dec.total_rank() })))
        }
        Command::CheckRankTheorems { delta, gamma } => {
            let split = |s: &str| s.split(',').map(str::to_string).collect::<Vec<_>>();
            let d = parse_set(r, &split(delta))?;
            let g = parse_set(r, &split(gamma))?;
            Ok(check_report(r.rank_theorems_check(&d, &g)?))
        }
        Command::Wedderburn { f } => wedderburn(r, &p(f)?),
        Command::WedderburnSuite { degree } => wedderburn_suite(ctx, *degree),
        Command::ProductCheck { a, b } => product_check(r, &p(a)?, &p(b)?, ctx.cli.bound),
        Command::SeriesSum { a, b } => series_op(a, b, true),
        Command::SeriesIntersect { a, b } => series_op(a, b, false),
        Command::SeriesWitness { n } => Ok(series_witness(*n)),
        Command::Suite => suite::run(ctx),
    }
}

fn names(r: &SkewRing, polys: &[SkewPoly]) -> Vec<String> {
    polys.iter().map(|x| r.format(x)).collect()
}

fn set_text(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn single(key: &str, value: String) -> Report {
    Report::ok(format!("{value}\n"), json!({ key: value }))
}

fn division(q: String, rem: String) -> Report {
    Report::ok(
        format!("quotient: {q}\nremainder: {rem}\n"),
        json!({ "quotient": q, "remainder": rem }),
    )
}

fn parse_set(r: &SkewRing, elems: &[String]) -> Result<AlgebraicSet> {
    let polys = elems.iter().map(|s| r.parse(s.trim())).collect::<Result<Vec<_>>>()?;
    r.algebraic_set(polys)
}

fn set_report(r: &SkewRing, set: &AlgebraicSet, rank: Option<usize>) -> Report {
    let elems = names(r, set.elements());
    let mut text = format!("{}\n", set_text(&elems));
    let mut j = json!({ "elements": elems, "llcm": r.format(set.llcm()) });
    if let Some(k) = rank {
        let _ = writeln!(text, "rank: {k}");
        j["rank"] = json!(k);
    }
    Report::ok(text, j)
}

pub(crate) fn check_report(checks: Vec<IdentityCheck>) -> Report {
    let ok = checks.iter().all(|c| c.equal);
    let mut text = String::new();
    for c in &checks {
        let mark = if c.equal { "ok" } else { "FAIL" };
        let _ = writeln!(text, "{mark} {}: {} = {}", c.name, c.lhs, c.rhs);
    }
    Report {
        text,
        json: json!({ "checks": checks }),
        ok,
    }
}

fn verdict_json(r: &SkewRing, v: &Verdict) -> Value {
    json!({ "holds": v.holds, "witnesses": names(r, &v.witnesses) })
}

fn wedderburn(r: &SkewRing, f: &SkewPoly) -> Result<Report> {
    let rep = r.wedderburn_report(f)?;
    let decomposition = names(r, &rep.intersection.witnesses);
    let mut text = format!(
        "fully reducible: {}\nlength: {}\nrank: {}\n",
        rep.fully_reducible(),
        rep.length,
        rep.rank
    );
    if rep.fully_reducible() {
        let _ = writeln!(text, "decomposition: {}", set_text(&decomposition));
    }
    for (name, holds) in rep.verdicts() {
        let _ = writeln!(text, "  {name}: {holds}");
    }
    if !rep.consistent {
        text.push_str("characterizations disagree\n");
    }
    let json = json!({
        "element": r.format(&rep.element),
        "fully_reducible": rep.fully_reducible(),
        "length": rep.length,
        "rank": rep.rank,
        "decomposition": if rep.fully_reducible() { json!(decomposition) } else { Value::Null },
        "intersection_of_atoms": verdict_json(r, &rep.intersection),
        "rank_equals_length": rep.rank_equals_length,
        "eigenring_dimensions": rep.eigenring_dimensions,
        "direct_sum_of_simples": verdict_json(r, &rep.direct_sum),
        "all_factors": verdict_json(r, &rep.factors),
        "neighbouring_factors": verdict_json(r, &rep.neighbouring_factors),
        "neighbouring_atomic_factors": verdict_json(r, &rep.neighbouring_atoms),
        "v_set_divisibility": verdict_json(r, &rep.divisibility),
        "consistent": rep.consistent,
    });
    Ok(Report {
        text,
        json,
        ok: rep.consistent,
    })
}

fn wedderburn_suite(ctx: &Ctx, degree: usize) -> Result<Report> {
    let r = &ctx.ring;
    let elems: Vec<SkewPoly> = r.enumerate_monic(degree)?.collect();
    let per = suite::pool(ctx.cli.jobs).install(|| {
        elems
            .par_iter()
            .map(|f| Ok((r.is_fully_reducible(f)?, checks::wedderburn(r, f)?)))
            .collect::<Result<Vec<_>>>()
    })?;
    let mut reducible = 0;
    let mut violations = Vec::new();
    for (f, (fr, cs)) in elems.iter().zip(per) {
        reducible += fr as usize;
        for c in cs.into_iter().filter(|c| !c.equal) {
            violations.push(json!({ "element": r.format(f), "check": c }));
        }
    }
    let text = format!(
        "degree {degree}: {} elements, {reducible} fully reducible, {} violations\n",
        elems.len(),
        violations.len()
    );
    Ok(Report {
        text,
        ok: violations.is_empty(),
        json: json!({
            "degree": degree,
            "elements": elems.len(),
            "fully_reducible": reducible,
            "violations": violations,
        }),
    })
}

fn product_check(r: &SkewRing, a: &SkewPoly, b: &SkewPoly, bound: usize) -> Result<Report> {
    let rep = r.product_check(a, b, bound)?;
    let bounded = |v: firlab::BoundedVerdict| json!({ "holds": v.holds, "conclusive": v.conclusive });
    let rows = [
        ("product_fully_reducible", rep.product_reducible, true),
        ("direct_sum", rep.direct_sum, true),
        ("two_sided_unit", rep.two_sided_unit.holds, rep.two_sided_unit.conclusive),
        ("every_atom_times_b", rep.every_atom_times_b.holds, true),
        ("basis_times_b", rep.basis_times_b.holds, true),
        ("atom_pairs", rep.atom_pairs.holds, true),
        ("idealizer_contained", rep.idealizer_contained.holds, rep.idealizer_contained.conclusive),
    ];
    let mut text = String::new();
    for (name, holds, conclusive) in rows {
        let note = if conclusive { "" } else { " (inconclusive within bound)" };
        let _ = writeln!(text, "{name}: {holds}{note}");
    }
    if !rep.consistent {
        text.push_str("characterizations disagree\n");
    }
    let json = json!({
        "a": r.format(&rep.a),
        "b": r.format(&rep.b),
        "bound": rep.bound,
        "product_fully_reducible": rep.product_reducible,
        "direct_sum": rep.direct_sum,
        "two_sided_unit": bounded(rep.two_sided_unit),
        "every_atom_times_b": verdict_json(r, &rep.every_atom_times_b),
        "basis_times_b": verdict_json(r, &rep.basis_times_b),
        "atom_pairs": verdict_json(r, &rep.atom_pairs),
        "idealizer_contained": bounded(rep.idealizer_contained),
        "consistent": rep.consistent,
    });
    Ok(Report {
        text,
        json,
        ok: rep.consistent,
    })
}

fn series_op(a: &str, b: &str, sum: bool) -> Result<Report> {
    let n = DEFAULT_TRUNCATION;
    let (ia, ib) = (PrincipalIdeal::parse(a, n)?, PrincipalIdeal::parse(b, n)?);
    let (res, verified) = if sum {
        let res = series::ideal_sum(&ia, &ib);
        let ok = series::verify_sum(&ia, &ib, &res.ideal, n);
        (res, ok)
    } else {
        let res = series::ideal_intersection(&ia, &ib);
        let ok = series::verify_intersection(&ia, &ib, &res.ideal, n);
        (res, ok)
    };
    let gen = res.ideal.generator(n).to_string();
    let case = serde_json::to_value(res.case).expect("case serializes");
    Ok(Report {
        text: format!(
            "{}\ngenerator: {gen}\ncase: {}\nverified: {verified}\n",
            res.ideal,
            case.as_str().unwrap_or_default()
        ),
        json: json!({
            "ideal": res.ideal.to_string(),
            "generator": gen,
            "case": case,
            "verified": verified,
        }),
        ok: verified,
    })
}

fn series_witness(n: u32) -> Report {
    let trunc = DEFAULT_TRUNCATION;
    let (factor, cofactor) = series::nonatomic_witness(n, trunc);
    let x = TruncatedSeries::parse("x", trunc).expect("literal");
    let reassembles = factor.mul(&cofactor).agrees_with(&x);
    let cofactor_unit = cofactor.is_unit();
    Report {
        text: format!("x = ({factor}) * ({cofactor})\natomic factors: {n}\ncofactor is a unit: {cofactor_unit}\n"),
        json: json!({
            "factor": factor.to_string(),
            "cofactor": cofactor.to_string(),
            "atomic_factors": n,
            "reassembles": reassembles,
            "cofactor_is_unit": cofactor_unit,
        }),
        ok: reassembles && !cofactor_unit,
    }
}
