use serde_json::{json, Value};

use jmarked::coeff::format_rational;
use jmarked::criterion::{pair_syzygy, PairReduction};
use jmarked::groebner::{family_membership, hilbert_function_of_ideal, Extraction};
use jmarked::parse::{format_param_poly, format_polynomial, format_term};
use jmarked::scheme::{
    build_generic_set, describe_label, homogeneity_check, minors_ideal, parse_naming_map,
    scheme_ideal, stratum_section, tangent_space, GenericMarkedSet, MinorMode, MinorOptions,
    SchemeIdeal, SchemeIdealJson,
};
use jmarked::{
    buchberger_check, ideal_membership, lift_syzygy, Error, InputFile,
    MarkedSet, MonomialIdeal, Polynomial, Rational, ReductionCertificate, Reducer, Result, Ring,
};

use crate::{Command, Flags, Outcome};

pub fn run(command: &Command, flags: &Flags, file: &InputFile) -> Result<Outcome> {
    match command {
        Command::StableCheck { .. } => stable_check(flags, file),
        Command::Hilbert { .. } => hilbert(flags, file),
        Command::Vm { .. } => vm(flags, file),
        Command::Nf { .. } => nf(flags, file),
        Command::Spoly { .. } => spoly(flags, file),
        Command::BasisCheck { .. } => basis_check(flags, file),
        Command::LiftSyzygy { .. } => lift(flags, file),
        Command::Member { .. } => member(flags, file),
        Command::Scheme { .. } => scheme(flags, file),
        Command::Tangent { .. } => tangent(flags, file),
        Command::Minors { .. } => minors(flags, file),
        Command::Stratum { .. } => stratum(flags, file),
        Command::FamilyMember { .. } => family_member(flags, file),
    }
}

fn emit(flags: &Flags, value: Value, text: impl FnOnce() -> String) {
    if flags.json {
        println!("{}", serde_json::to_string_pretty(&value).expect("json output"));
    } else {
        print!("{}", text());
    }
}

fn answer(yes: bool) -> Outcome {
    if yes {
        Outcome::Yes
    } else {
        Outcome::No
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn poly(r: &Ring, p: &Polynomial<Rational>) -> String {
    format_polynomial(r, p)
}

fn reducer(flags: &Flags, file: &InputFile) -> Result<Reducer<Rational>> {
    Reducer::new(file.marked_set()?, flags.order)
}

fn head_of(g: &MarkedSet<Rational>, i: usize) -> String {
    format_term(g.ring(), g.get(i).head())
}

fn certificate_json(g: &MarkedSet<Rational>, c: &ReductionCertificate<Rational>) -> Value {
    let r = g.ring();
    json!({
        "input": poly(r, &c.input),
        "normal_form": poly(r, &c.residual),
        "steps": c.steps.iter().map(|s| json!({
            "coefficient": format_rational(&s.coefficient),
            "multiplier": format_term(r, &s.multiplier),
            "generator": head_of(g, s.generator),
        })).collect::<Vec<_>>(),
    })
}

fn certificate_text(g: &MarkedSet<Rational>, c: &ReductionCertificate<Rational>, out: &mut String) {
    let r = g.ring();
    out.push_str(&format!("normal form: {}\n", poly(r, &c.residual)));
    for s in &c.steps {
        out.push_str(&format!(
            "  step: {} * {} * f[{}]\n",
            format_rational(&s.coefficient),
            format_term(r, &s.multiplier),
            head_of(g, s.generator)
        ));
    }
}

fn stable_check(flags: &Flags, file: &InputFile) -> Result<Outcome> {
    let j = file.require_ideal()?;
    let v = j.stability_violation();
    emit(
        flags,
        json!({
            "strongly_stable": v.is_none(),
            "violation": v.as_ref().map(|v| json!({
                "generator": format_term(j.ring(), &v.generator),
                "result": format_term(j.ring(), &v.result),
                "description": v.description,
            })),
        }),
        || match &v {
            None => "strongly stable: yes\n".into(),
            Some(v) => format!("strongly stable: no\n{}\n", v.description),
        },
    );
    Ok(answer(v.is_none()))
}

fn hilbert(flags: &Flags, file: &InputFile) -> Result<Outcome> {
    let j = file.require_ideal()?;
    let top = flags.max_degree.unwrap_or(j.max_generator_degree() + 2);
    let hj: Vec<usize> = (0..=top).map(|m| j.hilbert_function(m)).collect();
    let hi: Option<Vec<usize>> = (!file.generators.is_empty()).then(|| {
        (0..=top)
            .map(|m| hilbert_function_of_ideal(file.ring.nvars(), &file.generators, m))
            .collect()
    });
    emit(flags, json!({ "J": hj, "I": hi }), || {
        let list = |h: &[usize]| h.iter().map(usize::to_string).collect::<Vec<_>>().join(", ");
        let mut s = format!("HF(S/J), m = 0..{top}: {}\n", list(&hj));
        if let Some(hi) = &hi {
            s.push_str(&format!("HF(S/I), m = 0..{top}: {}\n", list(hi)));
        }
        s
    });
    Ok(Outcome::Yes)
}

fn vm(flags: &Flags, file: &InputFile) -> Result<Outcome> {
    let mut red = reducer(flags, file)?;
    let alpha = red.initial_degree();
    let top = flags.max_degree.unwrap_or(alpha + 1);
    red.ensure_degree(top)?;
    let g = red.marked().clone();
    let r = g.ring().clone();
    let mut lists = Vec::new();
    let mut text = String::new();
    for m in alpha..=top {
        let list = red.list(m).expect("degree was built");
        text.push_str(&format!("V_{m}:\n"));
        let mut entries = Vec::new();
        for e in list.entries() {
            text.push_str(&format!(
                "  {} = {} * f[{}]\n",
                format_term(&r, &e.head),
                format_term(&r, &e.multiplier),
                head_of(&g, e.generator)
            ));
            entries.push(json!({
                "head": format_term(&r, &e.head),
                "multiplier": format_term(&r, &e.multiplier),
                "generator": head_of(&g, e.generator),
                "polynomial": poly(&r, &e.poly),
            }));
        }
        lists.push(json!({ "degree": m, "entries": entries }));
    }
    emit(flags, json!({ "lists": lists }), || text);
    Ok(Outcome::Yes)
}

fn nf(flags: &Flags, file: &InputFile) -> Result<Outcome> {
    let mut red = reducer(flags, file)?;
    let mut certs = Vec::new();
    for q in &file.queries {
        certs.push(red.normal_form(q)?);
    }
    let g = red.marked();
    emit(
        flags,
        json!({ "results": certs.iter().map(|c| certificate_json(g, c)).collect::<Vec<_>>() }),
        || {
            let mut s = String::new();
            for c in &certs {
                s.push_str(&format!("query: {}\n", poly(g.ring(), &c.input)));
                certificate_text(g, c, &mut s);
            }
            s
        },
    );
    Ok(Outcome::Yes)
}

fn pair_label(g: &MarkedSet<Rational>, r: &PairReduction<Rational>) -> String {
    format!(
        "({}, {})",
        head_of(g, r.spoly.pair.first),
        head_of(g, r.spoly.pair.second)
    )
}

fn spoly(flags: &Flags, file: &InputFile) -> Result<Outcome> {
    let mut red = reducer(flags, file)?;
    let check = buchberger_check(&mut red, flags.pairs, flags.max_degree)?;
    let g = red.marked();
    let r = g.ring();
    emit(
        flags,
        json!({
            "pairs": flags.pairs.name(),
            "spolynomials": check.reductions.iter().map(|p| json!({
                "pair": [head_of(g, p.spoly.pair.first), head_of(g, p.spoly.pair.second)],
                "lcm": format_term(r, &p.spoly.pair.lcm),
                "spolynomial": poly(r, &p.spoly.poly),
                "reduction": certificate_json(g, &p.certificate),
            })).collect::<Vec<_>>(),
        }),
        || {
            let mut s = String::new();
            for p in &check.reductions {
                s.push_str(&format!(
                    "pair {}: S = {}\n",
                    pair_label(g, p),
                    poly(r, &p.spoly.poly)
                ));
                certificate_text(g, &p.certificate, &mut s);
            }
            s
        },
    );
    Ok(Outcome::Yes)
}

fn basis_check(flags: &Flags, file: &InputFile) -> Result<Outcome> {
    let mut red = reducer(flags, file)?;
    let check = buchberger_check(&mut red, flags.pairs, flags.max_degree)?;
    let g = red.marked();
    let r = g.ring();
    let verdict = if check.is_basis() {
        "yes"
    } else if check.failures().next().is_some() {
        "no"
    } else {
        "undetermined"
    };
    emit(
        flags,
        json!({
            "basis": check.is_basis(),
            "verdict": verdict,
            "pairs": flags.pairs.name(),
            "examined": check.reductions.len(),
            "skipped": check.skipped,
            "degree_bound": check.degree_bound,
            "failures": check.failures().map(|p| json!({
                "pair": [head_of(g, p.spoly.pair.first), head_of(g, p.spoly.pair.second)],
                "residual": poly(r, &p.certificate.residual),
            })).collect::<Vec<_>>(),
        }),
        || {
            let mut s = format!("J-marked basis: {verdict}\n");
            s.push_str(&format!(
                "pairs: {} ({} examined, {} skipped above degree {})\n",
                flags.pairs.name(),
                check.reductions.len(),
                check.skipped,
                check.degree_bound
            ));
            for p in check.failures() {
                s.push_str(&format!(
                    "pair {} reduces to {}\n",
                    pair_label(g, p),
                    poly(r, &p.certificate.residual)
                ));
            }
            s
        },
    );
    Ok(answer(check.is_basis()))
}

fn lift(flags: &Flags, file: &InputFile) -> Result<Outcome> {
    let mut red = reducer(flags, file)?;
    let ideal = red.ideal().clone();
    let g = red.marked().clone();
    let r = g.ring().clone();
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut ok = true;
    for pair in flags.pairs.pairs(&ideal) {
        let label = format!("({}, {})", head_of(&g, pair.first), head_of(&g, pair.second));
        match lift_syzygy(&mut red, &pair) {
            Ok(syz) => {
                let head_ok = syz.head_part(&ideal, red.order()) == pair_syzygy(&ideal, &pair);
                let comps: Vec<String> = syz.components.iter().map(|h| poly(&r, h)).collect();
                text.push_str(&format!("pair {label}: ({})\n", comps.join(", ")));
                rows.push(json!({ "pair": label, "components": comps, "head_part_matches": head_ok }));
            }
            Err(Error::NonzeroResidual(res)) => {
                ok = false;
                text.push_str(&format!("pair {label}: no lift, residual {res}\n"));
                rows.push(json!({ "pair": label, "residual": res }));
            }
            Err(e) => return Err(e),
        }
    }
    emit(flags, json!({ "lifted": ok, "syzygies": rows }), || text);
    Ok(answer(ok))
}

fn member(flags: &Flags, file: &InputFile) -> Result<Outcome> {
    let mut red = reducer(flags, file)?;
    let mut results = Vec::new();
    for q in &file.queries {
        results.push((q, ideal_membership(&mut red, q)?));
    }
    let r = &file.ring;
    emit(
        flags,
        json!({ "results": results.iter().map(|(q, b)| json!({ "query": poly(r, q), "member": b })).collect::<Vec<_>>() }),
        || {
            results
                .iter()
                .map(|(q, b)| format!("{}: member {}\n", poly(r, q), yes_no(*b)))
                .collect()
        },
    );
    Ok(answer(results.iter().all(|(_, b)| *b)))
}

fn generic(flags: &Flags, file: &InputFile) -> Result<GenericMarkedSet> {
    let j = file.require_ideal()?;
    let naming = match &flags.naming {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                Error::InvalidIdeal(format!("cannot read naming map {}: {e}", path.display()))
            })?;
            Some(parse_naming_map(j.ring(), &text)?)
        }
        None => None,
    };
    build_generic_set(j, naming.as_ref())
}

fn scheme_of(flags: &Flags, file: &InputFile) -> Result<SchemeIdeal> {
    scheme_ideal(&generic(flags, file)?, flags.pairs, flags.order)
}

fn scheme(flags: &Flags, file: &InputFile) -> Result<Outcome> {
    let s = scheme_of(flags, file)?;
    let j = file.require_ideal()?;
    let homogeneous = homogeneity_check(&s);
    let names = &s.params.names;
    emit(flags, serde_json::to_value(SchemeIdealJson::new(j, &s)).expect("json"), || {
        let mut out = format!(
            "parameters: {}\ngenerators: {} ({} pairs)\nlambda-homogeneous: {}\n",
            s.params.len(),
            s.generators.len(),
            s.mode.name(),
            yes_no(homogeneous)
        );
        for k in 0..s.params.len() {
            out.push_str(&format!(
                "  {} {} {}\n",
                names[k],
                if s.params.signs[k] > 0 { "+" } else { "-" },
                describe_label(j, &s.params.labels[k])
            ));
        }
        for g in &s.generators {
            out.push_str(&format!(
                "[{}, {} | {}] {}\n",
                format_term(j.ring(), &g.provenance.first),
                format_term(j.ring(), &g.provenance.second),
                format_term(j.ring(), &g.provenance.monomial),
                format_param_poly(&g.poly, names)
            ));
        }
        out
    });
    Ok(answer(homogeneous))
}

fn tangent(flags: &Flags, file: &InputFile) -> Result<Outcome> {
    let s = scheme_of(flags, file)?;
    let t = tangent_space(&s);
    emit(
        flags,
        json!({ "parameters": s.params.len(), "rank": t.rank(), "dimension": t.dimension() }),
        || {
            format!(
                "parameters {}\nlinear rank {}\ndimension {}\n",
                s.params.len(),
                t.rank(),
                t.dimension()
            )
        },
    );
    Ok(Outcome::Yes)
}

fn minors(flags: &Flags, file: &InputFile) -> Result<Outcome> {
    let gen = generic(flags, file)?;
    let j: &MonomialIdeal = gen.ideal();
    let top = flags.max_degree.unwrap_or(j.syzygy_degree_bound(false));
    let mut options = MinorOptions::default();
    if let Some(n) = flags.minor_limit {
        options.max_order = n;
    }
    if flags.full_minors {
        options.mode = MinorMode::Full;
    }
    let found = minors_ideal(&gen, j.initial_degree()..=top, options)?;
    let names = &gen.params.names;
    emit(
        flags,
        json!({
            "minors": found.iter().map(|m| json!({
                "degree": m.degree,
                "rows": m.rows,
                "columns": m.columns,
                "polynomial": format_param_poly(&m.poly, names),
            })).collect::<Vec<_>>(),
        }),
        || {
            let mut s = format!("nonzero minors: {}\n", found.len());
            for m in &found {
                s.push_str(&format!("[m={}] {}\n", m.degree, format_param_poly(&m.poly, names)));
            }
            s
        },
    );
    Ok(Outcome::Yes)
}

fn stratum(flags: &Flags, file: &InputFile) -> Result<Outcome> {
    let s = scheme_of(flags, file)?;
    let sec = stratum_section(&s, flags.order);
    let j = file.require_ideal()?;
    let names = &s.params.names;
    emit(
        flags,
        json!({
            "order": flags.order.name(),
            "killed": sec.killed.iter().map(|&k| names[k].clone()).collect::<Vec<_>>(),
            "generators": sec.generators.iter().map(|p| format_param_poly(p, names)).collect::<Vec<_>>(),
        }),
        || {
            let mut out = format!(
                "order {}: {} of {} parameters killed\n",
                flags.order.name(),
                sec.killed.len(),
                s.params.len()
            );
            for &k in &sec.killed {
                out.push_str(&format!("  killed {} ({})\n", names[k], describe_label(j, &s.params.labels[k])));
            }
            for p in &sec.generators {
                out.push_str(&format!("{}\n", format_param_poly(p, names)));
            }
            out
        },
    );
    Ok(Outcome::Yes)
}

fn family_member(flags: &Flags, file: &InputFile) -> Result<Outcome> {
    let j = file.require_ideal()?;
    if file.generators.is_empty() {
        return Err(Error::InvalidIdeal("the input has no `I:` section".into()));
    }
    let outcome = family_membership(&file.generators, j)?;
    let r = j.ring();
    let reason = match &outcome {
        Extraction::Basis(_) => "I has a J-marked basis".to_string(),
        Extraction::NotSpanning { degree, head } => {
            format!("{} has no normal form over N(J) in degree {degree}", format_term(r, head))
        }
        Extraction::NotFree { degree, relation } => {
            format!("I contains {} supported on N(J) in degree {degree}", poly(r, relation))
        }
        Extraction::NotABasis(g) => {
            let mut red = Reducer::new(g.clone(), flags.order)?;
            let check = buchberger_check(&mut red, flags.pairs, None)?;
            let reason = match check.failures().next() {
                Some(p) => format!(
                    "extracted set fails: pair {} reduces to {}",
                    pair_label(g, p),
                    poly(r, &p.certificate.residual)
                ),
                None => "extracted set is not a basis".into(),
            };
            reason
        }
        Extraction::GeneratesLess(_) => "the extracted basis generates a smaller ideal".into(),
    };
    let witness: Option<Vec<String>> = match &outcome {
        Extraction::Basis(g) => Some(g.elements().iter().map(|f| poly(r, f.poly())).collect()),
        _ => None,
    };
    emit(
        flags,
        json!({ "member": outcome.is_basis(), "reason": reason, "witness": witness }),
        || {
            let mut s = format!("in marked family: {}\n{reason}\n", yes_no(outcome.is_basis()));
            for w in witness.iter().flatten() {
                s.push_str(&format!("  {w}\n"));
            }
            s
        },
    );
    Ok(answer(outcome.is_basis()))
}
