use std::fmt::Write as _;

use serde_json::{json, Value};

use regenum::enumerate::{enumerate_regular_objects, epi_count, m_count, r_count, Context, RegularObjectSet};
use regenum::homcount::{hom_count, Method, Parent};
use regenum::objects::{
    commutator_order, h_operations, object_invariants, omega_generators, omega_orbits, universal_cover_summary,
    ObjectInvariants, OperationSpec,
};
use regenum::verify::{run_check, run_suite, SuiteOptions};
use regenum::{Error, Result};

use crate::Format;

/// Left-aligned columns separated by two spaces.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(headers.to_vec());
    for r in rows {
        line(r.iter().map(String::as_str).collect());
    }
    out
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

fn csv_text(headers: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| Error::Internal(e.to_string());
    w.write_record(headers).map_err(err)?;
    for r in rows {
        w.write_record(r).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

/// Rows as text, JSON objects keyed by header, or CSV.
fn rows_out(format: Format, headers: &[&str], rows: &[Vec<String>], extra: Option<Value>) -> Result<String> {
    match format {
        Format::Text => Ok(table(headers, rows)),
        Format::Csv => csv_text(headers, rows),
        Format::Json => {
            let list: Vec<Value> = rows
                .iter()
                .map(|r| Value::Object(headers.iter().zip(r).map(|(h, c)| (h.to_string(), json!(c))).collect()))
                .collect();
            let mut v = extra.unwrap_or_else(|| json!({}));
            v["rows"] = Value::Array(list);
            Ok(json_text(&v))
        }
    }
}

/// Key-value report.
fn pairs_out(format: Format, pairs: &[(&str, String)]) -> Result<String> {
    match format {
        Format::Json => {
            let map = pairs.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            Ok(json_text(&Value::Object(map)))
        }
        Format::Csv => csv_text(&pairs.iter().map(|p| p.0).collect::<Vec<_>>(), &[pairs.iter().map(|p| p.1.clone()).collect()]),
        Format::Text => {
            let w = pairs.iter().map(|p| p.0.len()).max().unwrap_or(0);
            Ok(pairs.iter().map(|(k, v)| format!("{k:<w$}  {v}\n")).collect())
        }
    }
}

fn perm(ctx: &Context, e: usize) -> String {
    ctx.group.element(e).to_string()
}

pub fn group(ctx: &Context, format: Format) -> Result<String> {
    let g = &ctx.group;
    let aut = ctx.automorphisms()?.len();
    let gens: Vec<String> = g.generators().iter().map(ToString::to_string).collect();
    let summary = [
        ("name", g.name().to_string()),
        ("degree", g.degree().to_string()),
        ("order", g.order().to_string()),
        ("generators", gens.join(" ")),
        ("exponent", g.exponent().to_string()),
        ("abelian", g.is_abelian().to_string()),
        ("nonabelian_simple", g.is_nonabelian_simple().to_string()),
        ("centre_order", g.centre().order().to_string()),
        ("automorphisms", aut.to_string()),
        ("classes", g.conjugacy_classes().len().to_string()),
        ("character_table", ctx.table.is_some().to_string()),
    ];
    let rows: Vec<Vec<String>> = g
        .conjugacy_classes()
        .iter()
        .enumerate()
        .map(|(i, c)| vec![i.to_string(), c.element_order.to_string(), c.size().to_string(), perm(ctx, c.representative)])
        .collect();
    let headers = ["class", "order", "size", "representative"];
    match format {
        Format::Text => Ok(format!("{}\n{}", pairs_out(format, &summary)?, table(&headers, &rows))),
        Format::Csv => csv_text(&headers, &rows),
        Format::Json => {
            let extra = Value::Object(summary.iter().map(|(k, v)| (k.to_string(), json!(v))).collect());
            rows_out(format, &headers, &rows, Some(extra))
        }
    }
}

pub fn lattice(ctx: &Context, format: Format) -> Result<String> {
    let g = &ctx.group;
    let l = ctx.lattice()?;
    let mu = ctx.moebius()?;
    let rows: Vec<Vec<String>> = (0..l.len())
        .map(|i| {
            let h = l.subgroup(i);
            let class = l.class_of(i);
            let gens: Vec<String> = h.generators().iter().map(|&e| perm(ctx, e)).collect();
            vec![
                i.to_string(),
                h.order().to_string(),
                class.to_string(),
                l.classes()[class].size().to_string(),
                g.is_normal(h).to_string(),
                mu.get(i).to_string(),
                if gens.is_empty() { "()".into() } else { gens.join(" ") },
            ]
        })
        .collect();
    let extra = json!({
        "group": g.name(),
        "subgroups": l.len().to_string(),
        "classes": l.classes().len().to_string(),
    });
    rows_out(format, &["index", "order", "class", "class_size", "normal", "mu", "generators"], &rows, Some(extra))
}

pub fn homcount(ctx: &Context, parent: &str, method: Method, smooth: bool, format: Format) -> Result<String> {
    let p = Parent::parse(parent)?;
    let h = hom_count(&ctx.group, &p.presentation, ctx.table.as_ref(), smooth, method, &ctx.limits)?;
    let routes: Vec<String> = h.routes.iter().map(|(r, v)| format!("{r}={v}")).collect();
    let pairs = [
        ("group", ctx.group.name().to_string()),
        ("parent", p.name.clone()),
        ("presentation", p.presentation.to_string()),
        ("smooth", smooth.to_string()),
        ("count", h.value.to_string()),
        ("routes", routes.join(" ")),
    ];
    pairs_out(format, &pairs)
}

fn listed(ctx: &Context, parent: &str) -> Result<RegularObjectSet> {
    enumerate_regular_objects(ctx, &Parent::parse(parent)?, true)
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or("-".to_string(), ToString::to_string)
}

fn type_string(i: &ObjectInvariants) -> String {
    let t: Vec<String> = i.type_periods.iter().map(u64::to_string).collect();
    let mut s = if t.len() == 2 { format!("{{{}}}", t.join(",")) } else { format!("({})", t.join(",")) };
    if let Some(p) = i.petrie_length {
        let _ = write!(s, "_{p}");
    }
    s
}

fn invariant_row(index: usize, i: &ObjectInvariants) -> Vec<String> {
    vec![
        index.to_string(),
        type_string(i),
        opt(&i.vertices),
        opt(&i.edges),
        opt(&i.faces),
        opt(&i.euler_characteristic),
        opt(&i.orientable),
        opt(&i.genus),
    ]
}

const INVARIANT_HEADERS: [&str; 8] = ["index", "type", "vertices", "edges", "faces", "euler", "orientable", "genus"];

pub fn enumerate(ctx: &Context, parent: &str, count_only: bool, method: Method, format: Format) -> Result<String> {
    let p = Parent::parse(parent)?;
    if count_only {
        let epi = epi_count(ctx, &p.presentation, method)?;
        let r = r_count(ctx, &p.presentation, method)?;
        let m = m_count(ctx, &p.presentation, method)?;
        let pairs = [
            ("group", ctx.group.name().to_string()),
            ("parent", p.name.clone()),
            ("r", r.to_string()),
            ("m", m.to_string()),
            ("epimorphisms", epi.to_string()),
            ("automorphisms", ctx.automorphisms()?.len().to_string()),
            ("corefree_classes", ctx.corefree_class_count()?.to_string()),
        ];
        return pairs_out(format, &pairs);
    }
    let set = enumerate_regular_objects(ctx, &p, true)?;
    let mut rows = Vec::new();
    let mut list = Vec::new();
    for (k, c) in set.classes.iter().enumerate() {
        let inv = object_invariants(&ctx.group, &p, c)?;
        let images: Vec<String> = c.images.iter().map(|&e| perm(ctx, e)).collect();
        let mut row = vec![k.to_string(), images.join(" ")];
        row.extend(invariant_row(k, &inv).into_iter().skip(1));
        rows.push(row);
        list.push(json!({
            "index": k,
            "images": images,
            "element_indices": c.images,
            "invariants": serde_json::to_value(&inv).map_err(|e| Error::Internal(e.to_string()))?,
        }));
    }
    match format {
        Format::Json => Ok(json_text(&json!({
            "group": ctx.group.name(),
            "parent": p.name,
            "r": set.r().to_string(),
            "epimorphisms": set.epi_count.to_string(),
            "automorphisms": set.aut_order.to_string(),
            "classes": list,
        }))),
        _ => {
            let mut headers = vec!["index", "images"];
            headers.extend(&INVARIANT_HEADERS[1..]);
            let body = rows_out(format, &headers, &rows, None)?;
            Ok(if format == Format::Text { format!("r = {}\n{body}", set.r()) } else { body })
        }
    }
}

pub fn objects(ctx: &Context, parent: &str, format: Format) -> Result<String> {
    let set = listed(ctx, parent)?;
    let rows: Vec<Vec<String>> = set
        .classes
        .iter()
        .enumerate()
        .map(|(k, c)| object_invariants(&ctx.group, &set.parent, c).map(|i| invariant_row(k, &i)))
        .collect::<Result<_>>()?;
    let extra = json!({"group": ctx.group.name(), "parent": set.parent.name, "r": set.r().to_string()});
    rows_out(format, &INVARIANT_HEADERS, &rows, Some(extra))
}

fn parse_ops(set: &RegularObjectSet, spec: &str) -> Result<Vec<OperationSpec>> {
    let mut ops = Vec::new();
    for part in spec.split('+') {
        match part.split_once(':') {
            None if part == "omega" => ops.extend(omega_generators(&set.parent)?),
            Some(("hj", k)) => {
                let k = k.parse().map_err(|_| Error::Argument(format!("bad modulus {k:?}")))?;
                ops.extend(h_operations(set.parent.category, k)?);
            }
            _ => return Err(Error::Argument(format!("unknown operation set {part:?}"))),
        }
    }
    Ok(ops)
}

pub fn orbits(ctx: &Context, parent: &str, ops: &str, format: Format) -> Result<String> {
    let set = listed(ctx, parent)?;
    let ops = parse_ops(&set, ops)?;
    let orbits = omega_orbits(ctx, &set, &ops)?;
    let two = set.parent.presentation.generator_count() == 2;
    let mut rows = Vec::new();
    for (n, orbit) in orbits.iter().enumerate() {
        for &k in orbit {
            let c = &set.classes[k];
            let mut row = vec![n.to_string(), orbit.len().to_string()];
            row.extend(invariant_row(k, &object_invariants(&ctx.group, &set.parent, c)?));
            row.push(if two { commutator_order(ctx, c)?.to_string() } else { "-".into() });
            rows.push(row);
        }
    }
    let mut headers = vec!["orbit", "orbit_size"];
    headers.extend(INVARIANT_HEADERS);
    headers.push("commutator_order");
    let names: Vec<&str> = ops.iter().map(|o| o.name.as_str()).collect();
    let sizes: Vec<String> = orbits.iter().map(|o| o.len().to_string()).collect();
    let extra = json!({
        "group": ctx.group.name(),
        "parent": set.parent.name,
        "operations": names,
        "orbit_sizes": sizes,
    });
    let body = rows_out(format, &headers, &rows, Some(extra))?;
    Ok(if format == Format::Text {
        format!("operations: {}\norbit sizes: {}\n{body}", names.join(", "), sizes.join(" "))
    } else {
        body
    })
}

pub fn universal(ctx: &Context, parent: &str, format: Format) -> Result<String> {
    let set = listed(ctx, parent)?;
    let u = universal_cover_summary(ctx, &set)?;
    match format {
        Format::Json => {
            let mut v = serde_json::to_value(&u).map_err(|e| Error::Internal(e.to_string()))?;
            v["group"] = json!(ctx.group.name());
            Ok(json_text(&v))
        }
        _ => {
            let methods: Vec<String> = u.agreeing_methods.iter().map(ToString::to_string).collect();
            let t: Vec<String> = u.type_periods.iter().map(u64::to_string).collect();
            let pairs = [
                ("group", ctx.group.name().to_string()),
                ("parent", u.parent.clone()),
                ("r", u.r.to_string()),
                ("cover_group_order", u.cover_group_order.to_string()),
                ("order_method", u.order_method.to_string()),
                ("agreeing_methods", methods.join(" ")),
                ("type", t.join(",")),
                ("petrie_length", opt(&u.petrie_length)),
                ("orientable", opt(&u.orientable)),
                ("euler_characteristic", opt(&u.euler_characteristic)),
                ("genus", opt(&u.genus)),
            ];
            pairs_out(format, &pairs)
        }
    }
}

pub fn verify(opts: &SuiteOptions, check: Option<u8>, format: Format) -> Result<(String, bool)> {
    let outcomes = match check {
        Some(id) => vec![run_check(id, opts)],
        None => run_suite(opts),
    };
    let failed = outcomes.iter().any(|o| !o.passed);
    let text = match format {
        Format::Json => json_text(&serde_json::to_value(&outcomes).map_err(|e| Error::Internal(e.to_string()))?),
        Format::Csv => csv_text(
            &["id", "name", "passed", "basis", "detail"],
            &outcomes
                .iter()
                .map(|o| vec![o.id.to_string(), o.name.to_string(), o.passed.to_string(), o.basis.to_string(), o.detail.clone()])
                .collect::<Vec<_>>(),
        )?,
        Format::Text => {
            let mut s: String = outcomes.iter().map(|o| o.line() + "\n").collect();
            let passed = outcomes.iter().filter(|o| o.passed).count();
            let _ = writeln!(s, "{passed}/{} checks passed", outcomes.len());
            s
        }
    };
    Ok((text, failed))
}
