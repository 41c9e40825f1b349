use std::collections::HashMap;
use std::fmt::Write as _;

use kpsi_core::poset::{enumerate_series_parallel, skew_shape_poset};
use kpsi_core::ppartition::{
    count_zigzag_labelings, enumerate_pointed_partitions, enumerate_zigzag_labelings,
    is_irreducible_natural, k_generating_function, k_tilde, psi_expansion_pointed,
    zigzag_count_formula, Mark,
};
use kpsi_core::qsym::{
    self, automorphism, coproduct as qsym_coproduct, graded_coproduct, max1, max1_basis, min1,
    min1_basis, multiply, Automorphism,
};
use kpsi_core::tableaux::{chi, min1_skew, skew_schur_power_sums, skew_schur_psi};
use kpsi_core::{
    Basis, Composition, LabeledPoset, QSymElement, Rational, SkewShape, TensorElement,
};
use serde_json::{json, Value};

use crate::{CliError, FunctionalArg, OutputFormat, RunConfig};

const BASES: [Basis; 3] = [Basis::Monomial, Basis::Fundamental, Basis::Psi];

type Out = Result<String, CliError>;

fn element_out(cfg: &RunConfig, f: &QSymElement) -> String {
    match cfg.format {
        OutputFormat::Text => f.to_string(),
        OutputFormat::Json => f.to_json(),
    }
}

fn json_value(s: String) -> Value {
    serde_json::from_str(&s).expect("library JSON is valid")
}

fn rational_out(cfg: &RunConfig, v: &Rational) -> String {
    match cfg.format {
        OutputFormat::Text => v.to_string(),
        OutputFormat::Json => json!({ "value": v.to_string() }).to_string(),
    }
}

fn mismatch(what: &str, a: &impl std::fmt::Display, b: &impl std::fmt::Display) -> CliError {
    CliError::Verification(format!("{what}: {a} != {b}"))
}

fn parse_poset(text: &str) -> Result<LabeledPoset, CliError> {
    Ok(LabeledPoset::from_json(text)?)
}

fn parse_expr(text: &str) -> Result<QSymElement, CliError> {
    Ok(text.parse()?)
}

fn mark_symbol(m: Mark) -> char {
    match m {
        Mark::Minus => '-',
        Mark::Star => '*',
        Mark::Plus => '+',
    }
}

pub fn kpw(cfg: &RunConfig, text: &str, basis: Basis, list: bool) -> Out {
    let p = parse_poset(text)?;
    let k = k_generating_function(&p, &cfg.guards)?;
    if cfg.verify {
        let via_l = qsym::convert(&k, Basis::Psi);
        let pointed = psi_expansion_pointed(&p, &cfg.guards)?;
        if !via_l.same_representation(&pointed) {
            return Err(mismatch("L route vs pointed route", &via_l, &pointed));
        }
    }
    let k = qsym::convert(&k, basis);
    if !list {
        return Ok(element_out(cfg, &k));
    }
    let pointed = enumerate_pointed_partitions(&p, &cfg.guards)?;
    match cfg.format {
        OutputFormat::Text => {
            let mut s = k.to_string();
            for f in &pointed {
                let sign = if f.sign() > 0 { '+' } else { '-' };
                write!(s, "\n{sign} {} {f}", f.weight()).unwrap();
            }
            Ok(s)
        }
        OutputFormat::Json => {
            let parts: Vec<Value> = pointed
                .iter()
                .map(|f| {
                    json!({
                        "weight": f.weight().parts(),
                        "sign": f.sign(),
                        "levels": f.levels(),
                        "marks": f.marks().iter().map(|&m| mark_symbol(m)).collect::<String>(),
                    })
                })
                .collect();
            Ok(json!({ "expansion": json_value(k.to_json()), "pointed": parts }).to_string())
        }
    }
}

pub fn ktilde(cfg: &RunConfig, text: &str) -> Out {
    let p = parse_poset(text)?;
    let kt = k_tilde(&p, &cfg.guards)?;
    if cfg.verify {
        let k = qsym::convert(&k_generating_function(&p, &cfg.guards)?, Basis::Psi);
        let shortest = k.min_length_part();
        if !shortest.same_representation(&kt) {
            return Err(mismatch(
                "sigma-partition sum vs shortest terms of K",
                &kt,
                &shortest,
            ));
        }
    }
    Ok(element_out(cfg, &kt))
}

pub fn zigzag(cfg: &RunConfig, text: &str, list: bool) -> Out {
    let p = parse_poset(text)?;
    let formula = zigzag_count_formula(&p, &cfg.guards)?;
    if cfg.verify {
        let counted = Rational::from_integer(count_zigzag_labelings(&p, &cfg.guards)?.into());
        if counted != formula {
            return Err(mismatch(
                "(n-1)! Max1(K~) vs direct count",
                &formula,
                &counted,
            ));
        }
    }
    let labelings = if list {
        let l = enumerate_zigzag_labelings(&p, &cfg.guards)?;
        if cfg.verify && Rational::from_integer(l.len().into()) != formula {
            return Err(mismatch("formula vs listing", &formula, &l.len()));
        }
        Some(l)
    } else {
        None
    };
    match cfg.format {
        OutputFormat::Text => {
            let mut s = formula.to_string();
            for phi in labelings.iter().flatten() {
                write!(s, "\n{}", fmt_list(phi)).unwrap();
            }
            Ok(s)
        }
        OutputFormat::Json => {
            let mut v = json!({ "count": formula.to_string() });
            if let Some(l) = labelings {
                v["labelings"] = json!(l);
            }
            Ok(v.to_string())
        }
    }
}

pub fn irreducible(cfg: &RunConfig, text: &str) -> Out {
    let p = parse_poset(text)?;
    let r = is_irreducible_natural(&p, &cfg.guards)?;
    if cfg.verify && (r.certificate > Rational::from_integer(0.into())) != r.irreducible {
        return Err(CliError::Verification(format!(
            "certificate {} disagrees with verdict {}",
            r.certificate, r.irreducible
        )));
    }
    match cfg.format {
        OutputFormat::Text => {
            let verdict = if r.irreducible {
                "irreducible".to_string()
            } else {
                format!("reducible {}", fmt_list(&r.component_sizes))
            };
            Ok(format!("{verdict}\ncertificate {}", r.certificate))
        }
        OutputFormat::Json => Ok(json!({
            "irreducible": r.irreducible,
            "component_sizes": r.component_sizes,
            "certificate": r.certificate.to_string(),
        })
        .to_string()),
    }
}

fn fmt_list(sizes: &[usize]) -> String {
    let parts: Vec<String> = sizes.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

pub fn sp_distinguish(cfg: &RunConfig, max_n: usize) -> Out {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let classes = enumerate_series_parallel(n, &cfg.guards)?;
        let mut seen: HashMap<String, &LabeledPoset> = HashMap::new();
        for p in &classes {
            let k = qsym::convert(&k_generating_function(p, &cfg.guards)?, Basis::Psi);
            if let Some(q) = seen.insert(k.to_string(), p) {
                return Err(CliError::Verification(format!(
                    "n = {n}: {q} and {p} have the same K = {k}"
                )));
            }
        }
        rows.push((n, classes.len(), seen.len()));
    }
    match cfg.format {
        OutputFormat::Text => Ok(rows
            .iter()
            .map(|(n, c, d)| format!("n={n} classes={c} distinct={d}"))
            .collect::<Vec<_>>()
            .join("\n")),
        OutputFormat::Json => Ok(json!(rows
            .iter()
            .map(|(n, c, d)| json!({ "n": n, "classes": c, "distinct": d }))
            .collect::<Vec<_>>())
        .to_string()),
    }
}

pub fn mn(cfg: &RunConfig, text: &str, want_chi: bool, want_p: bool, want_min1: bool) -> Out {
    let shape = SkewShape::from_json(text)?;
    let psi = skew_schur_psi(&shape, &cfg.guards)?;
    if cfg.verify {
        let p = skew_shape_poset(&shape);
        let via_k = qsym::convert(&k_generating_function(&p, &cfg.guards)?, Basis::Psi);
        if !via_k.same_representation(&psi) {
            return Err(mismatch("border strips vs skew poset", &psi, &via_k));
        }
        let pointed = psi_expansion_pointed(&p, &cfg.guards)?;
        if !pointed.same_representation(&psi) {
            return Err(mismatch(
                "border strips vs pointed partitions",
                &psi,
                &pointed,
            ));
        }
        if !shape.is_empty() && min1(&via_k)? != min1_skew(&shape) {
            return Err(mismatch("Min1", &min1(&via_k)?, &min1_skew(&shape)));
        }
    }
    if !(want_chi || want_p || want_min1) {
        return Ok(element_out(cfg, &psi));
    }
    let mut text_out = Vec::new();
    let mut json_out = serde_json::Map::new();
    if want_chi {
        let mut rows = Vec::new();
        for alpha in Composition::all_of(shape.size()) {
            let v = chi(&shape, &alpha)?;
            text_out.push(format!("chi{alpha} = {v}"));
            rows.push(json!({ "comp": alpha.parts(), "value": v.to_string() }));
        }
        json_out.insert("chi".into(), json!(rows));
    }
    if want_p {
        let ps = skew_schur_power_sums(&shape, &cfg.guards)?;
        let terms: Vec<String> = ps.iter().map(|(nu, c)| format!("{c}*p{nu}")).collect();
        text_out.push(if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        });
        json_out.insert(
            "power_sums".into(),
            json!(ps
                .iter()
                .map(|(nu, c)| json!({ "partition": nu.parts(), "coef": c.to_string() }))
                .collect::<Vec<_>>()),
        );
    }
    if want_min1 {
        let v = min1_skew(&shape);
        text_out.push(v.to_string());
        json_out.insert("min1".into(), json!(v.to_string()));
    }
    match cfg.format {
        OutputFormat::Text => Ok(text_out.join("\n")),
        OutputFormat::Json => Ok(Value::Object(json_out).to_string()),
    }
}

pub fn convert(cfg: &RunConfig, expr: &str, to: Basis) -> Out {
    let f = parse_expr(expr)?;
    let g = qsym::convert(&f, to);
    if cfg.verify {
        for b in BASES {
            let back = qsym::convert(&qsym::convert(&g, b), f.basis());
            if !back.same_representation(&f) {
                return Err(mismatch("round trip", &back, &f));
            }
        }
    }
    Ok(element_out(cfg, &g))
}

pub fn functional(cfg: &RunConfig, which: FunctionalArg, expr: &str) -> Out {
    let f = parse_expr(expr)?;
    let eval = |g: &QSymElement| match which {
        FunctionalArg::Min1 => min1(g),
        FunctionalArg::Max1 => max1(g),
    };
    let v = eval(&f)?;
    if cfg.verify {
        for b in BASES {
            let w = eval(&qsym::convert(&f, b))?;
            if w != v {
                return Err(mismatch(&format!("value in {}", b.symbol()), &w, &v));
            }
        }
    }
    Ok(rational_out(cfg, &v))
}

pub fn auto(cfg: &RunConfig, map: Automorphism, expr: &str) -> Out {
    let f = parse_expr(expr)?;
    let g = automorphism(map, &f);
    if cfg.verify {
        for b in BASES {
            let h = qsym::convert(&automorphism(map, &qsym::convert(&f, b)), f.basis());
            if !h.same_representation(&g) {
                return Err(mismatch(&format!("route through {}", b.symbol()), &h, &g));
            }
        }
    }
    Ok(element_out(cfg, &g))
}

pub fn product(cfg: &RunConfig, left: &str, right: &str) -> Out {
    let f = parse_expr(left)?;
    let g = parse_expr(right)?;
    let fg = multiply(&f, &g);
    if cfg.verify {
        for b in BASES {
            let h = multiply(&qsym::convert(&f, b), &qsym::convert(&g, b));
            let h = qsym::convert(&h, fg.basis());
            if !h.same_representation(&fg) {
                return Err(mismatch(&format!("product in {}", b.symbol()), &h, &fg));
            }
        }
    }
    Ok(element_out(cfg, &fg))
}

fn tensor_out(cfg: &RunConfig, t: &TensorElement) -> String {
    match cfg.format {
        OutputFormat::Text => t.to_string(),
        OutputFormat::Json => t.to_json(),
    }
}

pub fn coproduct(cfg: &RunConfig, expr: &str, graded: Option<&str>) -> Out {
    let f = parse_expr(expr)?;
    let delta = |g: &QSymElement| -> Result<TensorElement, CliError> {
        match graded {
            Some(a) => Ok(graded_coproduct(g, &a.parse::<Composition>()?)?),
            None => Ok(qsym_coproduct(g)),
        }
    };
    let t = delta(&f)?;
    if cfg.verify {
        // Min1 ⊗ Max1 ⊗ Min1 ⊗ ... does not depend on the basis used.
        let pairing = |t: &TensorElement| -> Rational {
            let mut total = Rational::from_integer(0.into());
            for (legs, c) in t.terms() {
                let mut prod = c.clone();
                for (i, a) in legs.iter().enumerate() {
                    prod *= if i % 2 == 0 {
                        min1_basis(t.basis(), a)
                    } else {
                        max1_basis(t.basis(), a)
                    };
                }
                total += prod;
            }
            total
        };
        let v = pairing(&t);
        for b in BASES {
            let w = pairing(&delta(&qsym::convert(&f, b))?);
            if w != v {
                return Err(mismatch(
                    &format!("Min1 ⊗ Max1 pairing in {}", b.symbol()),
                    &w,
                    &v,
                ));
            }
        }
    }
    Ok(tensor_out(cfg, &t))
}
