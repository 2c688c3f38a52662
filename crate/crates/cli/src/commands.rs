//! One function per subcommand, each producing a [`Report`].

use crate::config::RunConfig;
use crate::report::Report;
use anyhow::{bail, Result};
use localmodel::forms::classify::det_bareiss;
use localmodel::forms::{hensel_unitarize, is_similitude, isometry_class_int};
use localmodel::gfring::{FieldCtx, TruncMatrix};
use localmodel::hecke::{central_from_characterization, fit_parameters, HeckeAlgebra, ParameterSystem};
use localmodel::latmodel::*;
use localmodel::weyl::{admissible, dominant_in_window, finite_orbit, Cocharacter, GroupCtx, WeylElement};
use localmodel::Error;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

fn mu_of(cfg: &RunConfig) -> Result<Cocharacter> {
    match &cfg.mu {
        None => Ok(Cocharacter::minuscule(cfg.d)),
        Some(a) => {
            if a.len() != cfg.d {
                bail!("mu has {} entries but d = {}", a.len(), cfg.d);
            }
            let gamma = a[0] + a[cfg.d - 1];
            Ok(Cocharacter::new(a.clone(), gamma)?)
        }
    }
}

fn dominant_mu(cfg: &RunConfig) -> Result<Cocharacter> {
    let mu = mu_of(cfg)?;
    if !mu.is_dominant() {
        bail!(Error::InvalidInput(format!("mu = {:?} is not dominant", mu.a)));
    }
    Ok(mu)
}

fn algebra(cfg: &RunConfig, group: &GroupCtx) -> Result<(HeckeAlgebra, Value)> {
    let (params, source) = match &cfg.exponents {
        Some(e) => (ParameterSystem::new(group, e)?, json!("given")),
        None => {
            let fit = fit_parameters(cfg.d, &cfg.q, cfg.budget)?;
            (fit.params, json!({ "fitted": fit.counts }))
        }
    };
    let info = json!({ "exponents": params.per_simple(), "source": source });
    Ok((HeckeAlgebra::new(group.clone(), params)?, info))
}

fn window_ctx(cfg: &RunConfig) -> Result<ModelCtx> {
    Ok(ModelWindow::new(cfg.d, cfg.q(), cfg.m, cfg.n)?.context()?)
}

pub fn census(cfg: &RunConfig, report: &mut Report) -> Result<()> {
    let ctx = window_ctx(cfg)?;
    let group = GroupCtx::new(cfg.d)?;
    let opts = CensusOptions { budget: cfg.budget, generators: cfg.verify_generators, seed: cfg.seed };
    let census = cell_census(&ctx, &group, &opts)?;
    let failing = census.points.iter().filter(|p| !is_local_model_point(&ctx, p).pass()).count();
    report.check("points satisfy the local model conditions", failing == 0, format!("{failing} of {} fail", census.total()));
    let mut expected = BTreeSet::new();
    for l in dominant_in_window(cfg.d, cfg.m, cfg.n) {
        expected.extend(admissible(&group, &l));
    }
    let labels: BTreeSet<WeylElement> = census.cells.iter().map(|c| c.label.clone()).collect();
    report.check(
        "cell labels equal the admissible set",
        labels == expected,
        format!("{} labels, {} admissible", labels.len(), expected.len()),
    );
    let covered: usize = census.cells.iter().map(|c| c.size).sum();
    report.check("cells partition the points", covered == census.total(), format!("{covered} of {}", census.total()));
    report.check("closure order matches Bruhat order", census.closure.ok(), census.closure.violations.join("; "));
    let mut cells = census.cells.clone();
    cells.sort_by(|a, b| (a.length, &a.word, &a.label).cmp(&(b.length, &b.word, &b.label)));
    let flagged: Vec<&str> = cells.iter().filter(|c| c.orbit_components > 1).map(|c| c.word.as_str()).collect();
    if cfg.verify_generators > 0 {
        report.check(
            "each cell is a single generator orbit",
            flagged.is_empty(),
            if flagged.is_empty() { String::new() } else { format!("split cells: {}", flagged.join(" ")) },
        );
    }
    let cell_rows: Vec<Value> = cells
        .iter()
        .map(|c| {
            let mut row = json!({ "word": c.word, "gamma": c.label.gamma(), "size": c.size, "length": c.length, "element": c.label });
            if cfg.verify_generators > 0 {
                row["components"] = json!(c.orbit_components);
            }
            row
        })
        .collect();
    report.set_data(json!({
        "window": { "d": cfg.d, "q": cfg.q(), "m": cfg.m, "n": cfg.n },
        "total": census.total(),
        "cells": cell_rows,
    }));
    Ok(())
}

/// JSON lines of canonical chains; the flag is false when some chain fails the point predicate.
pub fn point_dump(cfg: &RunConfig) -> Result<(String, bool)> {
    let ctx = window_ctx(cfg)?;
    let points = enumerate_points(&ctx, cfg.budget)?;
    let mut out = String::new();
    let mut ok = true;
    for p in &points {
        ok &= is_local_model_point(&ctx, p).pass();
        out.push_str(&serde_json::to_string(&p.to_json())?);
        out.push('\n');
    }
    Ok((out, ok))
}

pub fn admissible_set(cfg: &RunConfig, report: &mut Report) -> Result<()> {
    let group = GroupCtx::new(cfg.d)?;
    let mu = dominant_mu(cfg)?;
    let adm = admissible(&group, &mu);
    let closed = adm.iter().all(|w| group.downset(w).is_subset(&adm));
    report.check("admissible set is a downset", closed, "");
    let t_mu = WeylElement::translation(&mu)?;
    let above: Vec<String> = finite_orbit(&mu)
        .iter()
        .map(|l| WeylElement::translation(l).expect("orbit element"))
        .filter(|t| t != &t_mu && group.bruhat_leq(&t_mu, t))
        .map(|t| t.to_string())
        .collect();
    report.check("t_mu is maximal among orbit translations", above.is_empty(), above.join(" "));
    let mut rows: Vec<(usize, String, &WeylElement)> = adm.iter().map(|w| (group.length(w), group.word_string(w), w)).collect();
    rows.sort();
    let elements: Vec<Value> = rows.iter().map(|(l, word, w)| json!({ "word": word, "length": l, "element": w })).collect();
    report.set_data(json!({ "mu": mu, "size": adm.len(), "elements": elements }));
    Ok(())
}

pub fn bernstein(cfg: &RunConfig, report: &mut Report) -> Result<()> {
    let group = GroupCtx::new(cfg.d)?;
    let mu = dominant_mu(cfg)?;
    let (alg, params) = algebra(cfg, &group)?;
    let z = alg.bernstein_z(&mu)?;
    let st = alg.sstrace_element(&mu)?;
    let adm = admissible(&group, &mu);
    let e = alg.half_weight(&mu)? as i32;
    let t_mu = WeylElement::translation(&mu)?;
    report.check("z is supported on the admissible set", z.support().all(|w| adm.contains(w)), "");
    let c = z.coeff(&t_mu);
    report.check("coefficient of T_{t_mu} in z is q(mu)^{-1/2}", c == localmodel::hecke::Laurent::monomial(1, -e), c.to_string());
    report.set_data(json!({
        "mu": mu,
        "parameters": params,
        "q_index": alg.q_index(&mu)?,
        "z": z,
        "sstrace": st,
    }));
    Ok(())
}

pub fn center_check(cfg: &RunConfig, report: &mut Report) -> Result<()> {
    let group = GroupCtx::new(cfg.d)?;
    let mu = dominant_mu(cfg)?;
    let (alg, params) = algebra(cfg, &group)?;
    let z = alg.bernstein_z(&mu)?;
    let st = alg.sstrace_element(&mu)?;
    let nonzero = |h| -> Result<usize> { Ok(alg.commutators(h)?.iter().filter(|c| !c.is_zero()).count()) };
    let (nz, ns) = (nonzero(&z)?, nonzero(&st)?);
    report.check("z is central", nz == 0, format!("{nz} nonzero commutators"));
    report.check("sstrace is central", ns == 0, format!("{ns} nonzero commutators"));
    let e = alg.half_weight(&mu)?;
    let sign = if e % 2 == 0 { 1 } else { -1 };
    let t_mu = WeylElement::translation(&mu)?;
    let c = st.coeff(&t_mu);
    report.check(
        "sstrace has value (-1)^l(mu) on the dominant cell",
        c == localmodel::hecke::Laurent::monomial(sign, 0),
        format!("l(mu) = {e}, coefficient {c}"),
    );
    let adm = admissible(&group, &mu);
    report.check("sstrace is supported on the admissible set", st.support().all(|w| adm.contains(w)), "");
    let characterization = match central_from_characterization(&alg, &mu) {
        Ok(c) => {
            report.check("characterization has a unique solution equal to z", true, format!("rank {} of {}", c.rank, c.unknowns));
            json!({ "unknowns": c.unknowns, "equations": c.equations, "rank": c.rank })
        }
        Err(e @ Error::Characterization(_)) => {
            report.check("characterization has a unique solution equal to z", false, e.to_string());
            Value::Null
        }
        Err(e) => return Err(e.into()),
    };
    report.set_data(json!({ "mu": mu, "parameters": params, "characterization": characterization }));
    Ok(())
}

pub fn fit_params(cfg: &RunConfig, report: &mut Report) -> Result<()> {
    match fit_parameters(cfg.d, &cfg.q, cfg.budget) {
        Ok(fit) => {
            report.check("exponents are positive integers independent of q", true, format!("{:?}", fit.params.per_simple()));
            report.set_data(json!({ "exponents": fit.params.per_simple(), "counts": fit.counts }));
        }
        Err(e @ Error::Characterization(_)) => {
            report.check("exponents are positive integers independent of q", false, e.to_string());
            report.set_data(Value::Null);
        }
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

pub fn cross_validate(cfg: &RunConfig, report: &mut Report) -> Result<()> {
    let ctx = window_ctx(cfg)?;
    let group = GroupCtx::new(cfg.d)?;
    let (alg, params) = algebra(cfg, &group)?;
    let census = cell_census(&ctx, &group, &CensusOptions { budget: cfg.budget, generators: 0, seed: cfg.seed })?;
    let labels: Vec<WeylElement> = census.cells.iter().map(|c| c.label.clone()).collect();
    let q = cfg.q() as i128;
    let (mut compared, mut skipped) = (0usize, 0usize);
    let mut mismatches = Vec::new();
    for x in &labels {
        if check_representable(&ctx, x).is_err() {
            skipped += labels.len();
            continue;
        }
        let products: Vec<BTreeMap<WeylElement, i128>> = labels
            .iter()
            .map(|y| {
                alg.multiply(&alg.t(x), &alg.t(y))?
                    .specialize(q)
                    .ok_or_else(|| anyhow::anyhow!("product does not specialize to integers"))
            })
            .collect::<Result<_>>()?;
        let mut targets: BTreeSet<WeylElement> = products.iter().flat_map(|p| p.keys().cloned()).collect();
        targets.extend(group.elements_up_to(2 * x.gamma(), 3));
        for w in &targets {
            let row = convolution_row(&ctx, &census, x, w)?;
            for (y, prod) in labels.iter().zip(&products) {
                compared += 1;
                let count = row.get(y).copied().unwrap_or(0) as i128;
                let expected = prod.get(w).copied().unwrap_or(0);
                if count != expected {
                    mismatches.push(json!({ "x": x.to_string(), "y": y.to_string(), "w": w.to_string(), "count": count, "symbolic": expected }));
                }
            }
        }
    }
    report.check(
        "counted structure constants equal the specialized products",
        mismatches.is_empty() && compared > 0,
        format!("{compared} compared, {} mismatches, {skipped} skipped", mismatches.len()),
    );
    report.set_data(json!({ "parameters": params, "compared": compared, "skipped": skipped, "mismatches": mismatches }));
    Ok(())
}

pub fn classify_form(cfg: &RunConfig, report: &mut Report) -> Result<()> {
    let d = cfg.d;
    let gram: Vec<Vec<i64>> = match &cfg.gram {
        Some(g) => g.clone(),
        None => (0..d).map(|r| (0..d).map(|c| i64::from(c == d - 1 - r)).collect()).collect(),
    };
    if gram.is_empty() || gram.iter().any(|r| r.len() != gram.len()) {
        bail!(Error::InvalidInput("gram must be a nonempty square matrix".into()));
    }
    let big: Vec<Vec<BigInt>> = gram.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let class = isometry_class_int(&big, cfg.q())?;
    let det = det_bareiss(&big);
    report.set_data(json!({ "gram": gram, "p": cfg.q(), "det": det.to_string(), "class": class }));
    Ok(())
}

pub fn unitarize_demo(cfg: &RunConfig, report: &mut Report) -> Result<()> {
    let (d, h) = (cfg.d, cfg.height);
    let field = Arc::new(FieldCtx::quadratic(cfg.q())?);
    let s = IwahoriSampler::new(field.clone(), d, h)?;
    let r = s.ring.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (mut exact, mut congruent, mut preserved, mut needed) = (0, 0, 0, 0);
    for _ in 0..cfg.count {
        let x = rng.gen_range(1..field.order());
        let c = r.monomial(field.norm(x), 0)?;
        let base = s.sample(&mut rng)?.scale(&r.monomial(x, 0)?)?;
        let mut g = base.clone();
        for i in 0..d {
            for j in 0..d {
                let mut v: Vec<u32> = (0..h).map(|_| rng.gen_range(0..field.order())).collect();
                v[0] = 0;
                g.set(i, j, &r.add(&g.entry(i, j), &r.from_coeffs(v)?));
            }
        }
        if !is_similitude(&g, s.form.gram(), &c)? {
            needed += 1;
        }
        let out: TruncMatrix = hensel_unitarize(&g, &s.form, &c, &s.flags)?;
        exact += usize::from(is_similitude(&out, s.form.gram(), &c)?);
        congruent += usize::from(out.reduce_mod_t() == g.reduce_mod_t());
        preserved += usize::from(s.flags.iter().all(|l| l.apply_matrix(&out).map(|m| &m == l).unwrap_or(false)));
    }
    let n = cfg.count;
    report.check("outputs are exact similitudes", exact == n, format!("{exact} of {n}"));
    report.check("outputs agree with inputs modulo t", congruent == n, format!("{congruent} of {n}"));
    report.check("outputs preserve the standard chain", preserved == n, format!("{preserved} of {n}"));
    report.set_data(json!({ "d": d, "q": cfg.q(), "height": h, "inputs": n, "inputs_needing_correction": needed }));
    Ok(())
}
