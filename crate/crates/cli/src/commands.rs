use std::fmt::Write as _;

use clap::ValueEnum;
use necklace_core::double_bracket::{
    center_check, center_element, check_grading, kontsevich_bracket, necklace_bracket,
    verify_double_jacobi, verify_loday_properties, BracketRule,
};
use necklace_core::free_algebra::{
    all_words, count_necklaces, enumerate_necklaces, necklace_dimension, parse_necklace, Alphabet,
    Letter, Necklace, NecklaceElement, Word,
};
use necklace_core::linear_necklace::{self, StructureConstants};
use necklace_core::poisson_poly::{
    casimir_check, change_coordinates, PoissonPolyAlgebra, Relation,
};
use necklace_core::sampling::{random_necklace_pairs, random_word_triples};
use necklace_core::sl2_module::{
    decompose_bruteforce, decompose_by_formula, DEFAULT_DEGREE_BOUND, PUBLISHED_TABLE1,
};
use necklace_core::trace_calculus::{
    audit_table2, casimir_image, center_witness, classify_point, classify_point_approx,
    identification, table2_algebra, verify_cayley_hamilton,
};
use necklace_core::{rat, Rational};
use serde_json::{json, Value};

use crate::render::Names;
use crate::{Report, Result};

fn report(ok: bool, text: String, json: Value, header: &[&str], rows: Vec<Vec<String>>) -> Report {
    Report {
        ok,
        text,
        json,
        header: header.iter().map(|s| s.to_string()).collect(),
        rows,
    }
}

pub fn dims(d: usize, kmax: usize) -> Result<Report> {
    if d == 0 {
        return Err("d must be at least 1".into());
    }
    let mut rows = Vec::new();
    let mut all_ok = true;
    for k in 1..=kmax {
        let formula = necklace_dimension(d as u64, k as u64).to_string();
        let enumerated = count_necklaces(d, k).to_string();
        let ok = formula == enumerated;
        all_ok &= ok;
        rows.push(vec![k.to_string(), formula, enumerated, status(ok).into()]);
    }
    let mut text = format!(
        "{:>4} {:>12} {:>12}  status\n",
        "k", "formula", "enumerated"
    );
    for r in &rows {
        writeln!(text, "{:>4} {:>12} {:>12}  {}", r[0], r[1], r[2], r[3])?;
    }
    let json = json!({
        "command": "dims",
        "d": d,
        "rows": rows.iter().map(|r| json!({"k": r[0].parse::<u64>().unwrap(), "formula": r[1], "enumerated": r[2], "ok": r[3] == "ok"})).collect::<Vec<_>>(),
        "ok": all_ok,
    });
    Ok(report(
        all_ok,
        text,
        json,
        &["k", "formula", "enumerated", "status"],
        rows,
    ))
}

fn status(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "MISMATCH"
    }
}

fn max_index(e: &NecklaceElement) -> usize {
    e.keys()
        .flat_map(|n| n.word().letters().iter().map(|l| l.index()))
        .max()
        .unwrap_or(1)
}

pub fn bracket(rule: &str, d: Option<usize>, w1: &str, w2: &str) -> Result<Report> {
    let a = parse_necklace(w1)?;
    let b = parse_necklace(w2)?;
    if rule == "canonical" {
        let d = d.unwrap_or_else(|| max_index(&a).max(max_index(&b)));
        let r = BracketRule::canonical(d);
        let out = necklace_bracket(&r, &a, &b)?;
        let oracle = a.bilinear(&b, |x, y| kontsevich_bracket(x, y, d));
        let agree = out == oracle;
        let names = Names::for_pairs(d);
        let shown = names.element(&out);
        let text = format!("{shown}, {}\n", if agree { "agree" } else { "DISAGREE" });
        let json = json!({
            "command": "bracket",
            "rule": "canonical",
            "d": d,
            "w1": names.element(&a),
            "w2": names.element(&b),
            "result": shown,
            "oracle": names.element(&oracle),
            "agree": agree,
        });
        let rows = vec![vec![
            json["w1"].as_str().unwrap().into(),
            json["w2"].as_str().unwrap().into(),
            shown,
            agree.to_string(),
        ]];
        return Ok(report(
            agree,
            text,
            json,
            &["w1", "w2", "bracket", "agree"],
            rows,
        ));
    }
    let n: usize = rule
        .strip_prefix("ngl:")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| format!("unknown rule {rule:?}; use canonical or ngl:N"))?;
    let r = linear_necklace::ngl(n);
    let out = necklace_bracket(&r, &a, &b)?;
    let names = Names::MatrixUnits(n);
    let shown = names.element(&out);
    let json = json!({
        "command": "bracket",
        "rule": format!("ngl:{n}"),
        "w1": names.element(&a),
        "w2": names.element(&b),
        "result": shown,
    });
    let rows = vec![vec![
        names.element(&a),
        names.element(&b),
        shown.clone(),
        String::new(),
    ]];
    Ok(report(
        true,
        format!("{shown}\n"),
        json,
        &["w1", "w2", "bracket", "agree"],
        rows,
    ))
}

pub fn table1(nmax: usize) -> Result<Report> {
    if nmax == 0 {
        return Err("nmax must be at least 1".into());
    }
    let top = nmax.max(8) as i64;
    let mut header: Vec<String> = vec!["degree".into()];
    header.extend((0..=top).rev().map(|w| w.to_string()));
    header.push("oracle".into());
    header.push("published".into());
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    let mut all_ok = true;
    for n in 1..=nmax {
        let formula = decompose_by_formula(n)?;
        let oracle = if n <= DEFAULT_DEGREE_BOUND {
            Some(decompose_bruteforce(n)? == formula)
        } else {
            None
        };
        let cells = formula.row(top);
        let published = (n <= 8).then(|| {
            let published = PUBLISHED_TABLE1[n - 1];
            cells[cells.len() - 9..] == published[..]
                && cells[..cells.len() - 9].iter().all(|&c| c == 0)
        });
        all_ok &= oracle != Some(false) && published != Some(false);
        let mut row = vec![n.to_string()];
        row.extend(cells.iter().map(|c| c.to_string()));
        row.push(match oracle {
            Some(true) => "agree".into(),
            Some(false) => "DISAGREE".into(),
            None => "skipped".into(),
        });
        row.push(match published {
            Some(true) => "match".into(),
            Some(false) => "MISMATCH".into(),
            None => "-".into(),
        });
        json_rows.push(json!({
            "degree": n,
            "multiplicities": formula.multiplicities.iter().map(|(w, m)| (w.to_string(), json!(m))).collect::<serde_json::Map<_, _>>(),
            "oracle_agrees": oracle,
            "matches_published": published,
        }));
        rows.push(row);
    }
    let mut text = String::new();
    writeln!(text, "{}", header.join("\t"))?;
    for r in &rows {
        writeln!(text, "{}", r.join("\t"))?;
    }
    let json = json!({"command": "table1", "weights": header[1..header.len() - 2], "rows": json_rows, "ok": all_ok});
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    Ok(report(all_ok, text, json, &header, rows))
}

pub fn table2() -> Result<Report> {
    let audit = audit_table2();
    let ok = audit.engine_antisymmetric
        && audit.engine_jacobi
        && audit.matches_after_antisymmetrization();
    let mut text = String::new();
    let width = 12;
    write!(text, "{:>width$}", "{row, col}")?;
    for g in &audit.generators {
        write!(text, " {g:>width$}")?;
    }
    text.push('\n');
    let mut rows = Vec::new();
    for (g, row) in audit.generators.iter().zip(&audit.engine) {
        write!(text, "{g:>width$}")?;
        for cell in row {
            write!(text, " {cell:>width$}")?;
        }
        text.push('\n');
        let mut r = vec![g.clone()];
        r.extend(row.iter().cloned());
        rows.push(r);
    }
    writeln!(
        text,
        "antisymmetric: {}, Jacobi: {}",
        audit.engine_antisymmetric, audit.engine_jacobi
    )?;
    for d in &audit.discrepancies {
        writeln!(
            text,
            "published ({}, {}) = {}, engine = {}; {}",
            d.row,
            d.col,
            d.published,
            d.engine,
            if d.transpose_agrees {
                "suspected typo: engine agrees with the antisymmetric partner"
            } else {
                "UNEXPLAINED"
            }
        )?;
    }
    let mut json = serde_json::to_value(&audit)?;
    json["command"] = json!("table2");
    json["ok"] = json!(ok);
    let mut header = vec!["bracket".to_string()];
    header.extend(audit.generators.iter().cloned());
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    Ok(report(ok, text, json, &header, rows))
}

fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| format!("not a rational number: {s:?}").into())
}

pub fn center(d: usize, n: usize, bound: usize, lambda: &str) -> Result<Report> {
    if d == 0 || n == 0 {
        return Err("d and n must be at least 1".into());
    }
    let c = center_element(d, n);
    let names = Names::for_pairs(d);
    let check = center_check(d, n, bound);
    let mut ok = check.is_ok();
    let mut text = String::new();
    if c.is_zero() {
        writeln!(text, "c_{n} = 0")?;
    }
    write!(
        text,
        "{} violations over {} necklaces",
        check.violations.len(),
        check.samples_checked
    )?;
    let mut witness = Value::Null;
    if d == 1 {
        let l = parse_rational(lambda)?;
        let value = center_witness(n, &l)?;
        let ln = l.pow(n as i32);
        let expected = rat(2) * &ln + rat(-2).pow(n as i32) * &ln;
        ok &= value == expected;
        write!(text, ", witness(λ={l})={value}")?;
        witness = json!({"lambda": l.to_string(), "value": value.to_string(), "expected": expected.to_string()});
    }
    text.push('\n');
    for v in &check.violations {
        writeln!(text, "  {v}")?;
    }
    let json = json!({
        "command": "center",
        "d": d,
        "n": n,
        "bound": bound,
        "element": names.element(&c),
        "samples_checked": check.samples_checked,
        "violations": check.violations,
        "witness": witness,
        "ok": ok,
    });
    let rows = vec![vec![
        d.to_string(),
        n.to_string(),
        bound.to_string(),
        check.violations.len().to_string(),
        witness
            .get("value")
            .and_then(Value::as_str)
            .unwrap_or("")
            .to_string(),
    ]];
    Ok(report(
        ok,
        text,
        json,
        &["d", "n", "bound", "violations", "witness"],
        rows,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Jacobi,
    Loday,
    Grading,
    Casimir,
    CayleyHamilton,
    Decoupling,
    All,
}

struct Check {
    suite: &'static str,
    name: String,
    passed: bool,
}

fn word_triples(letters: &[Letter], max_total: usize) -> Vec<(Word, Word, Word)> {
    let by_len: Vec<Vec<Word>> = (0..=max_total).map(|k| all_words(letters, k)).collect();
    let mut out = Vec::new();
    for a in 1..=max_total {
        for b in 1..=max_total - a {
            for c in 1..=max_total - a - b {
                for x in &by_len[a] {
                    for y in &by_len[b] {
                        for z in &by_len[c] {
                            out.push((x.clone(), y.clone(), z.clone()));
                        }
                    }
                }
            }
        }
    }
    out
}

fn jacobi_checks(seed: u64, bound: usize) -> Result<Vec<Check>> {
    let canonical = BracketRule::canonical(1);
    let triples = word_triples(&Alphabet::Doubled(1).letters(), bound);
    let mut bad = 0;
    for (a, b, c) in &triples {
        bad += !verify_double_jacobi(&canonical, a, b, c)?.is_zero() as usize;
    }
    let gl2 = linear_necklace::ngl(2);
    let sampled = random_word_triples(seed, &Alphabet::Plain(4).letters(), bound.max(3), 200);
    let mut bad_gl = 0;
    for (a, b, c) in &sampled {
        bad_gl += !verify_double_jacobi(&gl2, a, b, c)?.is_zero() as usize;
    }
    Ok(vec![
        Check {
            suite: "jacobi",
            name: format!("double Jacobi, canonical d = 1, {} triples of total degree <= {bound} ({bad} failures)", triples.len()),
            passed: bad == 0,
        },
        Check {
            suite: "jacobi",
            name: format!("double Jacobi, ngl(2), {} seeded triples ({bad_gl} failures)", sampled.len()),
            passed: bad_gl == 0,
        },
    ])
}

fn loday_checks(seed: u64, bound: usize) -> Result<Vec<Check>> {
    let canonical = BracketRule::canonical(1);
    let triples = word_triples(&Alphabet::Doubled(1).letters(), bound);
    let (mut bad_loday, mut bad_comm) = (0, 0);
    for (a, b, c) in &triples {
        let (loday, comm) = verify_loday_properties(&canonical, a, b, c)?;
        bad_loday += !loday as usize;
        bad_comm += !comm as usize;
    }
    let gl2 = linear_necklace::ngl(2);
    let mut bad_gl = 0;
    let sampled = random_word_triples(seed, &Alphabet::Plain(4).letters(), bound.max(3), 200);
    for (a, b, c) in &sampled {
        let (loday, comm) = verify_loday_properties(&gl2, a, b, c)?;
        bad_gl += !(loday && comm) as usize;
    }
    Ok(vec![
        Check {
            suite: "loday",
            name: format!("Loday identity, canonical d = 1, {} triples ({bad_loday} failures)", triples.len()),
            passed: bad_loday == 0,
        },
        Check {
            suite: "loday",
            name: format!("{{[a,b], c}} = 0, canonical d = 1, {} triples ({bad_comm} failures)", triples.len()),
            passed: bad_comm == 0,
        },
        Check {
            suite: "loday",
            name: format!("Loday identity and {{[a,b], c}} = 0, ngl(2), {} seeded triples ({bad_gl} failures)", sampled.len()),
            passed: bad_gl == 0,
        },
    ])
}

fn grading_checks(seed: u64, bound: usize) -> Vec<Check> {
    let mut pairs = Vec::new();
    for i in 1..bound {
        for j in 1..=bound - i {
            for a in enumerate_necklaces(1, i) {
                for b in enumerate_necklaces(1, j) {
                    pairs.push((a.clone(), b));
                }
            }
        }
    }
    let c1 = check_grading(&BracketRule::canonical(1), -2, pairs);
    let d2 = random_necklace_pairs(seed, &Alphabet::Doubled(2).letters(), bound.max(2), 200);
    let c2 = check_grading(&BracketRule::canonical(2), -2, d2);
    let gl = random_necklace_pairs(seed, &Alphabet::Plain(4).letters(), bound.clamp(2, 6), 200);
    let c3 = check_grading(&linear_necklace::ngl(2), -1, gl);
    [
        ("canonical d = 1, all pairs", c1),
        ("canonical d = 2, seeded pairs", c2),
        ("ngl(2), seeded pairs", c3),
    ]
    .into_iter()
    .map(|(label, r)| Check {
        suite: "grading",
        name: format!(
            "degree shift {} on {label} ({} pairs, {} violations)",
            r.degree_shift,
            r.samples_checked,
            r.violations.len()
        ),
        passed: r.is_ok(),
    })
    .collect()
}

fn relations(suite: &'static str, rels: Vec<Relation>) -> Vec<Check> {
    rels.into_iter()
        .map(|r| Check {
            suite,
            name: r.name,
            passed: r.holds,
        })
        .collect()
}

fn casimir_checks(notes: &mut Vec<String>) -> Vec<Check> {
    let sl2 = PoissonPolyAlgebra::sl2_heisenberg();
    let mut out = relations("casimir", casimir_check(&sl2));
    let t2 = table2_algebra();
    let img = identification();
    let morphism = (0..5).all(|i| {
        (0..5).all(|j| sl2.poisson(&img[i], &img[j]) == t2.table()[i][j].substitute(&img))
    });
    out.push(Check {
        suite: "casimir",
        name: "trace generators -> X, Y, E, F, H is a Poisson morphism".into(),
        passed: morphism,
    });
    let r = casimir_image();
    out.push(Check {
        suite: "casimir",
        name: "image of c_3 is 0".into(),
        passed: r.c3_image_zero,
    });
    for p in &r.powers {
        out.push(Check {
            suite: "casimir",
            name: format!("image of c_{} is 2 c_sl2^{}", 2 * p.k, p.k),
            passed: p.matches_twice_power,
        });
    }
    notes.push(format!(
        "published expression for tr([x,x*]^2) holds on generic matrices: {}",
        r.published_expression_holds
    ));
    notes.push(format!("tr([x,x*]^2) = {}", r.c2_expression));
    notes.push(format!("image of c_2 = {}", r.c2_image));
    notes.push(format!(
        "image of c_2 is -c_sl2: {}; is 2 c_sl2: {}",
        r.c2_image_is_minus_casimir, r.c2_image_is_twice_casimir
    ));
    out
}

fn decoupling_checks() -> Vec<Check> {
    let rep = change_coordinates(&PoissonPolyAlgebra::sl2_heisenberg());
    relations("decoupling", rep.relations)
}

pub fn verify(suite: Suite, seed: u64, max_degree: Option<usize>) -> Result<Report> {
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    let want = |s: Suite| suite == s || suite == Suite::All;
    if want(Suite::Jacobi) {
        checks.extend(jacobi_checks(seed, max_degree.unwrap_or(5))?);
    }
    if want(Suite::Loday) {
        checks.extend(loday_checks(seed, max_degree.unwrap_or(5))?);
    }
    if want(Suite::Grading) {
        checks.extend(grading_checks(seed, max_degree.unwrap_or(8)));
    }
    if want(Suite::Casimir) {
        checks.extend(casimir_checks(&mut notes));
    }
    if want(Suite::CayleyHamilton) {
        checks.extend(relations("cayley-hamilton", verify_cayley_hamilton(3)?));
    }
    if want(Suite::Decoupling) {
        checks.extend(decoupling_checks());
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    let mut text = String::new();
    for c in &checks {
        writeln!(
            text,
            "{} [{}] {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.suite,
            c.name
        )?;
    }
    for n in &notes {
        writeln!(text, "NOTE {n}")?;
    }
    writeln!(text, "{} checks, {failed} failed", checks.len())?;
    let json = json!({
        "command": "verify",
        "seed": seed,
        "checks": checks.iter().map(|c| json!({"suite": c.suite, "name": c.name, "passed": c.passed})).collect::<Vec<_>>(),
        "notes": notes,
        "failed": failed,
        "ok": failed == 0,
    });
    let rows = checks
        .iter()
        .map(|c| vec![c.suite.to_string(), c.name.clone(), c.passed.to_string()])
        .collect();
    Ok(report(
        failed == 0,
        text,
        json,
        &["suite", "check", "passed"],
        rows,
    ))
}

/// Integers, fractions `p/q` and plain decimals, read exactly.
fn parse_exact(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Ok(q) = s.parse::<Rational>() {
        return Some(q);
    }
    let (int, frac) = s.split_once('.')?;
    let digits = int.trim_start_matches(['-', '+']);
    if !(digits.chars().all(|c| c.is_ascii_digit()) && frac.chars().all(|c| c.is_ascii_digit())) {
        return None;
    }
    let num: Rational = format!("{int}{frac}").parse().ok()?;
    Some(num / rat(10).pow(frac.len() as i32))
}

pub fn classify(coords: &[String], tolerance: f64) -> Result<Report> {
    if coords.len() != 5 {
        return Err("expected five coordinates X Y E F H".into());
    }
    let exact: Option<Vec<Rational>> = coords.iter().map(|s| parse_exact(s)).collect();
    let (leaf, luna, casimir, text) = match exact {
        Some(v) => {
            let p: [Rational; 5] = v.try_into().expect("five coordinates");
            let c = classify_point(&p);
            (
                serde_json::to_value(c.leaf)?,
                serde_json::to_value(c.luna)?,
                c.casimir.to_string(),
                c.to_string(),
            )
        }
        None => {
            let v = coords
                .iter()
                .map(|s| {
                    s.trim()
                        .parse::<f64>()
                        .map_err(|_| format!("not a number: {s:?}"))
                })
                .collect::<std::result::Result<Vec<_>, _>>()?;
            let c = classify_point_approx([v[0], v[1], v[2], v[3], v[4]], tolerance);
            (
                serde_json::to_value(c.leaf)?,
                serde_json::to_value(c.luna)?,
                c.casimir.to_string(),
                c.to_string(),
            )
        }
    };
    let json = json!({
        "command": "classify",
        "point": coords,
        "leaf": leaf,
        "luna": luna,
        "casimir": casimir,
        "description": text,
    });
    let rows = vec![vec![
        coords.join(" "),
        leaf.as_str().unwrap_or_default().to_string(),
        luna.as_str().unwrap_or_default().to_string(),
        casimir,
    ]];
    Ok(report(
        true,
        format!("{text}\n"),
        json,
        &["point", "leaf", "luna", "casimir"],
        rows,
    ))
}

/// `[e_ij, e_kl] = δ_jk e_il - δ_li e_kj` on matrix units.
fn matrix_commutator(n: usize, (i, j): (usize, usize), (k, l): (usize, usize)) -> NecklaceElement {
    let unit = |a: usize, b: usize| {
        Necklace::new(&Word::letter(Letter::x(linear_necklace::matrix_unit(
            n, a, b,
        ))))
    };
    let mut out = NecklaceElement::zero();
    if j == k {
        out.add_term(unit(i, l), rat(1));
    }
    if l == i {
        out.add_term(unit(k, j), rat(-1));
    }
    out
}

pub fn ngl(n: usize) -> Result<Report> {
    if n == 0 {
        return Err("n must be at least 1".into());
    }
    let rule = linear_necklace::ngl(n);
    let names = Names::MatrixUnits(n);
    let units: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    let mut rows = Vec::new();
    let mut all_ok = true;
    for &a in &units {
        for &b in &units {
            let ea = NecklaceElement::of_word(&Word::letter(Letter::x(
                linear_necklace::matrix_unit(n, a.0, a.1),
            )));
            let eb = NecklaceElement::of_word(&Word::letter(Letter::x(
                linear_necklace::matrix_unit(n, b.0, b.1),
            )));
            let got = necklace_bracket(&rule, &ea, &eb)?;
            let expect = matrix_commutator(n, a, b);
            let ok = got == expect;
            all_ok &= ok;
            rows.push(vec![
                names.element(&ea),
                names.element(&eb),
                names.element(&got),
                names.element(&expect),
                ok.to_string(),
            ]);
        }
    }
    let structural =
        linear_necklace::check_degree1_commutator(&StructureConstants::matrix_algebra(n), None, 0);
    all_ok &= structural.is_ok();
    let mut text = String::new();
    for r in &rows {
        writeln!(
            text,
            "{{{}, {}}} = {}   [{}, {}] = {}   {}",
            r[0],
            r[1],
            r[2],
            r[0],
            r[1],
            r[3],
            if r[4] == "true" { "ok" } else { "MISMATCH" }
        )?;
    }
    writeln!(
        text,
        "{} pairs, {}",
        rows.len(),
        if all_ok {
            "all match"
        } else {
            "mismatches found"
        }
    )?;
    let json = json!({
        "command": "ngl",
        "n": n,
        "pairs": rows.iter().map(|r| json!({"a": r[0], "b": r[1], "bracket": r[2], "commutator": r[3], "match": r[4] == "true"})).collect::<Vec<_>>(),
        "ok": all_ok,
    });
    Ok(report(
        all_ok,
        text,
        json,
        &["a", "b", "bracket", "commutator", "match"],
        rows,
    ))
}

pub fn decompose(n: usize) -> Result<Report> {
    let brute = decompose_bruteforce(n)?;
    let formula = decompose_by_formula(n)?;
    let ok = brute == formula;
    let mut text = format!("degree {n}, dimension {}\n", brute.dimension());
    for (w, m) in brute.multiplicities.iter().rev() {
        writeln!(text, "  V_{w} x {m}")?;
    }
    writeln!(text, "formula {}", if ok { "agrees" } else { "DISAGREES" })?;
    let rows = brute
        .multiplicities
        .iter()
        .rev()
        .map(|(w, m)| vec![w.to_string(), m.to_string(), formula.get(*w).to_string()])
        .collect();
    let json = json!({
        "command": "decompose",
        "degree": n,
        "dimension": brute.dimension(),
        "multiplicities": brute.multiplicities.iter().map(|(w, m)| (w.to_string(), json!(m))).collect::<serde_json::Map<_, _>>(),
        "formula_agrees": ok,
        "ok": ok,
    });
    Ok(report(
        ok,
        text,
        json,
        &["weight", "multiplicity", "formula"],
        rows,
    ))
}
