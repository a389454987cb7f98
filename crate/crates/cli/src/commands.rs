use bibrackets::arith::{Rational, TruncatedQSeries};
use bibrackets::brackets::{eval_bibracket_oracle, eval_lincomb, partition_map_lin};
use bibrackets::double_shuffle::{
    shuffle_bracket, shuffle_bracket_numeric, shuffle_mul, stuffle_bracket, stuffle_mul,
};
use bibrackets::modular::{
    cusp_bracket_c, eisenstein, modular_suite, rankin_cohen, rankin_cohen_gamma,
};
use bibrackets::relations::{
    d_sequence, default_precision, dprime_sequence, ds_counts, express_in_basis, family_generators,
    find_relations, gen_count, graded_dims, DsVariant, Family, Generator,
};
use bibrackets::words::{
    parse_bi_lincomb, parse_bi_word, parse_index_list, z_words_of_weight, BiLinComb, BiWord,
    LinComb, XyConvention,
};
use bibrackets::{Error, Result};
use serde_json::{json, Value};

use crate::output::{Report, Table};
use crate::{BracketMode, Command, Convention, ProductMode, SequenceKind, VerifyTarget};

fn series_json(s: &TruncatedQSeries) -> Value {
    json!(s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

fn series_table(s: &TruncatedQSeries, caption: &str) -> Table {
    let mut t = Table::new(&["n", "coefficient"], caption);
    for (n, c) in s.coeffs().iter().enumerate() {
        t.push([n.to_string(), c.to_string()]);
    }
    t
}

fn lincomb_json(c: &BiLinComb) -> Value {
    let terms: Vec<Value> = c
        .iter()
        .map(|(w, a)| json!([w.to_string(), a.to_string()]))
        .collect();
    json!({ "combination": c.to_string(), "terms": terms })
}

fn lincomb_table(c: &BiLinComb, caption: &str) -> Table {
    let mut t = Table::new(&["word", "coefficient"], caption);
    for (w, a) in c.iter() {
        t.push([w.to_string(), a.to_string()]);
    }
    t
}

fn report(
    command: &'static str,
    params: Value,
    precision: Option<usize>,
    results: Value,
    text: String,
    table: Table,
) -> Report {
    Report {
        command,
        params,
        precision,
        results,
        stable: true,
        text,
        table,
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

/// Runs one command; the flag is false when a verification failed.
pub fn run(cmd: &Command) -> Result<(Report, bool)> {
    match cmd {
        Command::Eval {
            target,
            prec,
            oracle,
        } => {
            let c = parse_bi_lincomb(target)?;
            let s = if *oracle {
                let mut acc = TruncatedQSeries::zero(*prec);
                for (w, a) in c.iter() {
                    acc += &eval_bibracket_oracle(w, *prec).scale(a);
                }
                acc
            } else {
                eval_lincomb(&c, *prec)
            };
            let params = json!({ "target": c.to_string(), "oracle": oracle });
            Ok((
                report(
                    "eval",
                    params,
                    Some(*prec),
                    series_json(&s),
                    s.to_string(),
                    series_table(&s, target),
                ),
                true,
            ))
        }
        Command::Pmap { target } => {
            let c = parse_bi_lincomb(target)?;
            let p = partition_map_lin(&c);
            let params = json!({ "target": c.to_string() });
            Ok((
                report(
                    "pmap",
                    params,
                    None,
                    lincomb_json(&p),
                    p.to_string(),
                    lincomb_table(&p, target),
                ),
                true,
            ))
        }
        Command::Product { mode, u, v, prec } => {
            let (wu, wv) = (parse_bi_word(u)?, parse_bi_word(v)?);
            let (name, p) = match mode {
                ProductMode::Stuffle => ("stuffle", stuffle_mul(&wu, &wv)),
                ProductMode::Shuffle => ("shuffle", shuffle_mul(&wu, &wv)),
            };
            let mut text = p.to_string();
            let mut results = lincomb_json(&p);
            let mut ok = true;
            if let Some(n) = prec {
                let lhs = eval_lincomb(&p, *n);
                let rhs = &eval_lincomb(&LinComb::word(wu.clone()), *n)
                    * &eval_lincomb(&LinComb::word(wv.clone()), *n);
                ok = lhs == rhs;
                text.push_str(&format!(
                    "\nseries: {lhs}\nmatches the product of the series: {ok}"
                ));
                results["series"] = series_json(&lhs);
                results["verified"] = json!(ok);
            }
            let params = json!({ "mode": name, "u": wu.to_string(), "v": wv.to_string() });
            Ok((
                report(
                    "product",
                    params,
                    *prec,
                    results,
                    text,
                    lincomb_table(&p, name),
                ),
                ok,
            ))
        }
        Command::Bracket {
            mode,
            indices,
            prec,
        } => {
            let s = parse_index_list(indices)?;
            let (name, c) = match mode {
                BracketMode::Ast => ("ast", stuffle_bracket(&s)),
                BracketMode::Sh => ("sh", shuffle_bracket(&s)),
            };
            let mut text = c.to_string();
            let mut results = lincomb_json(&c);
            let mut ok = true;
            if let Some(n) = prec {
                let series = eval_lincomb(&c, *n);
                text.push_str(&format!("\nseries: {series}"));
                results["series"] = series_json(&series);
                if let BracketMode::Sh = mode {
                    ok = shuffle_bracket_numeric(&s, *n) == series;
                    text.push_str(&format!(
                        "\nagrees with the direct tri-bracket evaluation: {ok}"
                    ));
                    results["verified"] = json!(ok);
                }
            }
            let params = json!({ "mode": name, "indices": s });
            Ok((
                report(
                    "bracket",
                    params,
                    *prec,
                    results,
                    text,
                    lincomb_table(&c, name),
                ),
                ok,
            ))
        }
        Command::Eisenstein { k, prec } => {
            let g = eisenstein(*k, *prec)?;
            let text = format!("G_{k} = {}\n{}", g.symbolic(), g.series());
            let results =
                json!({ "symbolic": g.symbolic().to_string(), "series": series_json(g.series()) });
            let caption = format!("G_{k}");
            Ok((
                report(
                    "eisenstein",
                    json!({ "k": k }),
                    Some(*prec),
                    results,
                    text,
                    series_table(g.series(), &caption),
                ),
                true,
            ))
        }
        Command::RankinCohen { k, l, n, prec } => {
            let (f, g) = (eisenstein(*k, *prec)?, eisenstein(*l, *prec)?);
            let rc = rankin_cohen(&f, &g, *n);
            let mut text = format!("(G_{k}, G_{l})_{n} = {rc}");
            let mut results = json!({ "series": series_json(&rc) });
            let mut ok = true;
            if *n >= 1 && *k >= 4 && *l >= 4 {
                let gamma = rankin_cohen_gamma(*k, *l, *n);
                ok = cusp_bracket_c(*k, *l, *n, *prec)?.scale(&gamma) == rc;
                text.push_str(&format!("\nequals {gamma} * C^{}_{{{k},{l}}}: {ok}", 2 * n));
                results["gamma"] = json!(gamma.to_string());
                results["verified"] = json!(ok);
            }
            let caption = format!("(G_{k}, G_{l})_{n}");
            let params = json!({ "k": k, "l": l, "n": n });
            Ok((
                report(
                    "rankin-cohen",
                    params,
                    Some(*prec),
                    results,
                    text,
                    series_table(&rc, &caption),
                ),
                ok,
            ))
        }
        Command::Verify {
            target: VerifyTarget::ModularSuite,
            prec,
        } => {
            let checks = modular_suite(*prec)?;
            let ok = checks.iter().all(|c| c.passed);
            let mut t = Table::new(&["identity", "passed", "detail"], "modular identities");
            let mut text = String::new();
            for c in &checks {
                text.push_str(&format!(
                    "{} {}: {}\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                ));
                t.push([c.name.clone(), c.passed.to_string(), c.detail.clone()]);
            }
            let results = serde_json::to_value(&checks).expect("plain data");
            Ok((
                report(
                    "verify",
                    json!({ "target": "modular-suite" }),
                    Some(*prec),
                    results,
                    text,
                    t,
                ),
                ok,
            ))
        }
        Command::Dims {
            family,
            max_weight,
            prec,
            strict,
        } => {
            let fam: Family = family.parse()?;
            let n = prec.unwrap_or_else(|| default_precision(fam, *max_weight));
            let r = graded_dims(fam, *max_weight, n)?;
            let dp = dprime_sequence(*max_weight as usize);
            let mut t = Table::new(
                &["k", "dim gr_k >=", "d'_k"],
                format!("Lower bounds for graded dimensions, family {fam}"),
            );
            let mut text = format!(
                "family {fam}, N = {n} (checked at N = {})\n",
                n + bibrackets::relations::STABILITY_MARGIN
            );
            for (k, d) in r.dims.iter().enumerate() {
                t.push([k.to_string(), d.to_string(), dp[k].to_string()]);
                text.push_str(&format!("k = {k}: {d}  (d'_k = {})\n", dp[k]));
            }
            text.push_str(&format!("stable: {}", r.stable));
            let mut rep = report(
                "dims",
                json!({ "family": fam.to_string(), "max_weight": max_weight }),
                Some(n),
                serde_json::to_value(&r).expect("plain data"),
                text,
                t,
            );
            rep.stable = r.stable;
            Ok((rep, r.stable || !strict))
        }
        Command::DsCounts {
            variant,
            max_weight,
            convention,
        } => {
            let variants: Vec<DsVariant> = match variant {
                Some(v) => vec![v.parse()?],
                None => vec![DsVariant::Eds, DsVariant::Fds, DsVariant::Rds],
            };
            let conv = match convention {
                Convention::YEnded => XyConvention::YEnded,
                Convention::YStarting => XyConvention::YStarting,
            };
            let names: Vec<String> = variants.iter().map(|v| format!("{v}_k")).collect();
            let mut header = vec!["k"];
            header.extend(names.iter().map(String::as_str));
            let mut t = Table::new(&header, "Double shuffle relation counts");
            let mut text = String::new();
            let mut results = serde_json::Map::new();
            for v in &variants {
                results.insert(v.to_string(), json!([]));
            }
            for k in 1..=*max_weight {
                let row: Vec<usize> = variants.iter().map(|v| ds_counts(k, *v, conv)).collect();
                for (v, c) in variants.iter().zip(&row) {
                    results[&v.to_string()]
                        .as_array_mut()
                        .expect("array")
                        .push(json!(c));
                }
                let cells: Vec<String> = variants
                    .iter()
                    .zip(&row)
                    .map(|(v, c)| format!("{v} = {c}"))
                    .collect();
                text.push_str(&format!("k = {k}: {}\n", cells.join(", ")));
                t.push(std::iter::once(k.to_string()).chain(row.iter().map(usize::to_string)));
            }
            let params = json!({ "variants": variants, "max_weight": max_weight });
            Ok((
                report("ds-counts", params, None, Value::Object(results), text, t),
                true,
            ))
        }
        Command::Relations {
            weight,
            family,
            prec,
            strict,
        } => {
            let fam: Family = family.parse()?;
            let gens = family_generators(fam, *weight);
            let n = prec.unwrap_or_else(|| default_precision(fam, *weight));
            let r = find_relations(&gens, n)?;
            let mut t = Table::new(
                &["relation", "generator", "coefficient"],
                format!("Relations among family {fam}"),
            );
            let mut text = format!(
                "{} generators, rank {}, {} relations at N = {n}\n",
                gens.len(),
                r.basis.len(),
                r.kernel.len()
            );
            for (i, rel) in r.kernel.iter().enumerate() {
                let terms: Vec<String> = rel.iter().map(|(l, c)| format!("({c}) {l}")).collect();
                text.push_str(&format!("{}: {} = 0\n", i + 1, terms.join(" + ")));
                for (l, c) in rel {
                    t.push([(i + 1).to_string(), l.clone(), c.to_string()]);
                }
            }
            text.push_str(&format!("stable: {}, audited: {}", r.stable, r.audited));
            let params = json!({ "family": fam.to_string(), "weight": weight });
            let mut rep = report(
                "relations",
                params,
                Some(n),
                serde_json::to_value(&r).expect("plain data"),
                text,
                t,
            );
            rep.stable = r.stable;
            Ok((rep, r.audited && (r.stable || !strict)))
        }
        Command::Express {
            target,
            weight,
            prec,
            strict,
        } => {
            let c = parse_bi_lincomb(target)?;
            let mut gens = vec![Generator::new("1", 0, LinComb::one())];
            for k in 1..=*weight {
                for z in z_words_of_weight(k) {
                    gens.push(Generator::word(BiWord::bracket(&z.indices())));
                }
            }
            let n = prec.unwrap_or_else(|| gens.len().max(60).max(4 * *weight as usize));
            let combos: Vec<BiLinComb> = gens.iter().map(|g| g.combination.clone()).collect();
            let e = express_in_basis(&c, &combos, n);
            let mut t = Table::new(&["generator", "coefficient"], format!("{c} in brackets"));
            let (text, results) = match &e.coefficients {
                None => ("independent".to_string(), json!("independent")),
                Some(cs) => {
                    let mut out = LinComb::zero();
                    for (g, a) in gens.iter().zip(cs) {
                        out.add_scaled(&g.combination, a);
                        if *a != Rational::from_integer(0.into()) {
                            t.push([g.label.clone(), a.to_string()]);
                        }
                    }
                    (format!("{c} = {out}"), lincomb_json(&out))
                }
            };
            let text = format!("{text}\nstable: {}", e.stable);
            let mut rep = report(
                "express",
                json!({ "target": c.to_string(), "weight": weight }),
                Some(n),
                results,
                text,
                t,
            );
            rep.stable = e.stable;
            Ok((rep, e.stable || !strict))
        }
        Command::Sequences { kind, max } => {
            if *max > 60 {
                return Err(usage("--max above 60 overflows 64-bit counts"));
            }
            let (name, vals): (&str, Vec<u64>) = match kind {
                SequenceKind::Dprime => ("d'_k", dprime_sequence(*max)),
                SequenceKind::D => ("d_k", d_sequence(*max)),
                SequenceKind::Gen => ("gen_k", (0..=*max as u32).map(gen_count).collect()),
            };
            let mut t = Table::new(&["k", name], name);
            for (k, v) in vals.iter().enumerate() {
                t.push([k.to_string(), v.to_string()]);
            }
            let text = vals
                .iter()
                .enumerate()
                .map(|(k, v)| format!("{k}: {v}"))
                .collect::<Vec<_>>()
                .join("\n");
            Ok((
                report(
                    "sequences",
                    json!({ "kind": name, "max": max }),
                    None,
                    json!(vals),
                    text,
                    t,
                ),
                true,
            ))
        }
    }
}
