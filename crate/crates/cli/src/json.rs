//! JSON (de)serialization of equations and solution sets.
//!
//! Rationals always travel as strings ("p/q" or "p") so exactness survives
//! the wire; numeric values carry a `"float": true` marker and 12
//! significant digits. Family components are also rendered in a small
//! prefix expression grammar (`+ - * / ^2 sqrt`) for display.

use serde_json::{json, Value};
use splitquat::algebra::scalar::{format_scalar, parse_scalar, Real, Scalar};
use splitquat::algebra::{LinearSolutionSet, Mat4, SplitQuaternion};
use splitquat::solver::{
    AffineExpr, AffineFamily, Family, PolyFamily, QuadEquation, QuadExpr, SemiExplicitFamily,
    SolutionPoint, SolutionSet, SqrtFamily, UniQuad,
};

pub type JsonResult<T> = Result<T, String>;

fn float_str(v: f64) -> String {
    format!("{:.11e}", v)
}

pub fn scalar_to_value(s: &Scalar) -> Value {
    Value::String(format_scalar(s))
}

pub fn scalar_from_value(v: &Value) -> JsonResult<Scalar> {
    let s = v
        .as_str()
        .ok_or_else(|| format!("expected rational string, got {v}"))?;
    parse_scalar(s).map_err(|e| e.to_string())
}

pub fn real_to_value(r: &Real) -> Value {
    match r {
        Real::Exact(s) => scalar_to_value(s),
        Real::Approx(v) => json!({ "float": true, "value": float_str(*v) }),
    }
}

pub fn real_from_value(v: &Value) -> JsonResult<Real> {
    if let Some(s) = v.as_str() {
        return Ok(Real::Exact(parse_scalar(s).map_err(|e| e.to_string())?));
    }
    let obj = v
        .as_object()
        .ok_or("expected rational string or float object")?;
    let val = obj
        .get("value")
        .and_then(Value::as_str)
        .ok_or("missing value")?;
    val.parse::<f64>()
        .map(Real::Approx)
        .map_err(|e| e.to_string())
}

pub fn quat_to_value(q: &SplitQuaternion) -> Value {
    json!({
        "x0": format_scalar(&q.x0),
        "x1": format_scalar(&q.x1),
        "x2": format_scalar(&q.x2),
        "x3": format_scalar(&q.x3),
    })
}

pub fn quat_from_value(v: &Value) -> JsonResult<SplitQuaternion> {
    if let Some(s) = v.as_str() {
        return s.parse::<SplitQuaternion>().map_err(|e| e.to_string());
    }
    let obj = v
        .as_object()
        .ok_or_else(|| format!("expected quaternion object, got {v}"))?;
    let coord = |name: &str| -> JsonResult<Scalar> {
        match obj.get(name) {
            None => Ok(Scalar::from_integer(0.into())),
            Some(raw) => scalar_from_value(raw),
        }
    };
    Ok(SplitQuaternion::new(
        coord("x0")?,
        coord("x1")?,
        coord("x2")?,
        coord("x3")?,
    ))
}

pub fn point_to_value(p: &SolutionPoint) -> Value {
    match p {
        SolutionPoint::Exact(q) => quat_to_value(q),
        SolutionPoint::Approx(v) => json!({
            "float": true,
            "x0": float_str(v[0]),
            "x1": float_str(v[1]),
            "x2": float_str(v[2]),
            "x3": float_str(v[3]),
        }),
    }
}

pub fn point_from_value(v: &Value) -> JsonResult<SolutionPoint> {
    let obj = v.as_object().ok_or("expected point object")?;
    if obj.get("float").and_then(Value::as_bool).unwrap_or(false) {
        let coord = |name: &str| -> JsonResult<f64> {
            obj.get(name)
                .and_then(Value::as_str)
                .ok_or_else(|| format!("missing {name}"))?
                .parse::<f64>()
                .map_err(|e| e.to_string())
        };
        Ok(SolutionPoint::Approx([
            coord("x0")?,
            coord("x1")?,
            coord("x2")?,
            coord("x3")?,
        ]))
    } else {
        Ok(SolutionPoint::Exact(quat_from_value(v)?))
    }
}

/// Parse `{"a":…,"b":…,"c":…}` or `{"unnormalized":{"d":…,"e":…,"f":…}}`.
pub fn equation_from_value(v: &Value) -> JsonResult<QuadEquation> {
    let obj = v.as_object().ok_or("expected a JSON object")?;
    if let Some(u) = obj.get("unnormalized") {
        let u = u.as_object().ok_or("unnormalized must be an object")?;
        let get = |k: &str| -> JsonResult<SplitQuaternion> {
            quat_from_value(u.get(k).ok_or_else(|| format!("missing {k}"))?)
        };
        return Ok(QuadEquation::new(get("d")?, get("e")?, get("f")?));
    }
    let get = |k: &str| -> JsonResult<SplitQuaternion> {
        quat_from_value(
            obj.get(k)
                .ok_or_else(|| format!("missing coefficient {k}"))?,
        )
    };
    Ok(QuadEquation::new(get("a")?, get("b")?, get("c")?))
}

pub fn equation_to_value(eq: &QuadEquation) -> Value {
    json!({
        "a": quat_to_value(&eq.a),
        "b": quat_to_value(&eq.b),
        "c": quat_to_value(&eq.c),
    })
}

// --- prefix expression rendering ---

fn lit(s: &Scalar) -> String {
    format_scalar(s)
}

fn real_lit(r: &Real) -> String {
    match r {
        Real::Exact(s) => lit(s),
        Real::Approx(v) => float_str(*v),
    }
}

fn sum(terms: Vec<String>) -> String {
    match terms.len() {
        0 => "0".to_string(),
        1 => terms.into_iter().next().unwrap(),
        _ => format!("(+ {})", terms.join(" ")),
    }
}

fn scaled(coef: &Scalar, atom: &str) -> Option<String> {
    use num_traits::{One, Zero};
    if coef.is_zero() {
        return None;
    }
    if coef.is_one() {
        return Some(atom.to_string());
    }
    Some(format!("(* {} {})", lit(coef), atom))
}

fn affine_expr_str(e: &AffineExpr, names: &[&str]) -> String {
    use num_traits::Zero;
    let mut terms = Vec::new();
    if !e.constant.is_zero() {
        terms.push(lit(&e.constant));
    }
    for (c, name) in e.lin.iter().zip(names) {
        if let Some(t) = scaled(c, name) {
            terms.push(t);
        }
    }
    sum(terms)
}

fn quad_expr_str(d: &QuadExpr, names: &[&str]) -> String {
    use num_traits::Zero;
    let mut terms = Vec::new();
    if !d.constant.is_zero() {
        terms.push(lit(&d.constant));
    }
    for (c, name) in d.lin.iter().zip(names) {
        if let Some(t) = scaled(c, name) {
            terms.push(t);
        }
    }
    for i in 0..names.len() {
        for j in i..names.len() {
            let atom = if i == j {
                format!("(^2 {})", names[i])
            } else {
                format!("(* {} {})", names[i], names[j])
            };
            if let Some(t) = scaled(&d.quad[i][j], &atom) {
                terms.push(t);
            }
        }
    }
    sum(terms)
}

fn uniquad_str(u: &UniQuad, name: &str) -> String {
    use num_traits::Zero;
    let mut terms = Vec::new();
    if !u.c[0].is_zero() {
        terms.push(lit(&u.c[0]));
    }
    if let Some(t) = scaled(&u.c[1], name) {
        terms.push(t);
    }
    if let Some(t) = scaled(&u.c[2], &format!("(^2 {})", name)) {
        terms.push(t);
    }
    sum(terms)
}

fn affine_components(f: &AffineFamily) -> Vec<String> {
    (0..4)
        .map(|i| {
            use num_traits::Zero;
            let mut terms = Vec::new();
            match &f.base[i] {
                Real::Exact(s) if s.is_zero() => {}
                other => terms.push(real_lit(other)),
            }
            for (dir, name) in f.dirs.iter().zip(&f.param_names) {
                if let Some(t) = scaled(&dir[i], name) {
                    terms.push(t);
                }
            }
            sum(terms)
        })
        .collect()
}

// folding combinators over the prefix strings
fn emul(a: &str, b: &str) -> String {
    if a == "0" || b == "0" {
        return "0".into();
    }
    if a == "1" {
        return b.into();
    }
    if b == "1" {
        return a.into();
    }
    format!("(* {a} {b})")
}

fn eadd(terms: Vec<String>) -> String {
    let kept: Vec<String> = terms.into_iter().filter(|t| t != "0").collect();
    sum(kept)
}

fn esub(a: &str, b: &str) -> String {
    if b == "0" {
        return a.into();
    }
    if a == "0" {
        return emul("-1", b);
    }
    format!("(- {a} {b})")
}

fn ediv(a: &str, b: &str) -> String {
    if a == "0" {
        return "0".into();
    }
    if b == "1" {
        return a.into();
    }
    format!("(/ {a} {b})")
}

fn semi_explicit_strings(f: &SemiExplicitFamily) -> (Vec<String>, Vec<String>) {
    use num_traits::{One, Zero};
    let two = Scalar::one() + Scalar::one();
    let four = &two * &two;
    let (a2, a3, b1, c0, c1) = (&f.a2, &f.a3, &f.b1, &f.c0, &f.c1);
    let zero2 = || vec![Scalar::zero(), Scalar::zero()];
    let zq = || vec![zero2(), zero2()];

    let two_t = "(* 2 T)";
    let x1 = {
        let coef2 = esub(&ediv(&lit(&(a2 * b1)), two_t), &lit(a3));
        let coef3 = eadd(vec![ediv(&lit(&(a3 * b1)), two_t), lit(a2)]);
        let tail = ediv(
            &eadd(vec![lit(c1), emul(&lit(b1), "T")]),
            two_t,
        );
        esub(
            &eadd(vec![emul(&coef2, "x2"), emul(&coef3, "x3")]),
            &tail,
        )
    };

    // the quartic in T with coefficients quadratic in (x2, x3)
    let names = ["x2", "x3"];
    let c3_expr = QuadExpr::new(Scalar::zero(), vec![&two * a2, &two * a3], zq());
    let c2_expr = QuadExpr::new(
        c0 + &(&(b1 * b1) / &four),
        vec![b1 * a3, -(b1 * a2)],
        vec![
            vec![a2 * a2, &(&two * a2) * a3],
            vec![Scalar::zero(), a3 * a3],
        ],
    );
    let c1_expr = QuadExpr::new(
        Scalar::zero(),
        vec![-(c1 * a3), c1 * a2],
        vec![
            vec![&(a2 * a3) * b1, b1 * &(&(a3 * a3) - &(a2 * a2))],
            vec![Scalar::zero(), -(&(a2 * a3) * b1)],
        ],
    );
    let half_b1c1 = &(b1 * c1) / &two;
    let quarter_b1sq = &(b1 * b1) / &four;
    let c0_expr = QuadExpr::new(
        -(&(c1 * c1) / &four),
        vec![&half_b1c1 * a2, &half_b1c1 * a3],
        vec![
            vec![
                -(&quarter_b1sq * &(a2 * a2)),
                -(&(&(&two * &quarter_b1sq) * a2) * a3),
            ],
            vec![Scalar::zero(), -(&quarter_b1sq * &(a3 * a3))],
        ],
    );
    let quartic = eadd(vec![
        "(^2 (^2 T))".into(),
        emul(&quad_expr_str(&c3_expr, &names), "(* T (^2 T))"),
        emul(&quad_expr_str(&c2_expr, &names), "(^2 T)"),
        emul(&quad_expr_str(&c1_expr, &names), "T"),
        quad_expr_str(&c0_expr, &names),
    ]);

    let t_comp = if f.x0_offset.is_zero() {
        "T".to_string()
    } else {
        format!("(+ T {})", lit(&f.x0_offset))
    };
    let comps = vec![t_comp, x1, "x2".into(), "x3".into()];
    let mut constraints = vec![format!("(= {quartic} 0)"), "(!= T 0)".to_string()];
    if !b1.is_zero() {
        let q = eadd(vec![
            emul(&lit(a2), "x2"),
            emul(&lit(a3), "x3"),
        ]);
        constraints.push(format!("(!= {} {})", q, lit(&(c1 / b1))));
    }
    (comps, constraints)
}

pub fn family_components(f: &Family) -> (Vec<String>, Vec<String>) {
    match f {
        Family::Affine(a) => {
            let comps = affine_components(a);
            let constraints = a
                .excluded
                .iter()
                .map(|(idx, v)| format!("(!= {} {})", a.param_names[*idx], lit(v)))
                .collect();
            (comps, constraints)
        }
        Family::PolyInParams(p) => {
            let comps = p.comps.iter().map(|u| uniquad_str(u, "x0")).collect();
            let constraints = p
                .excluded
                .iter()
                .map(|v| format!("(!= x0 {})", lit(v)))
                .collect();
            (comps, constraints)
        }
        Family::SqrtBranch(s) => {
            let names: Vec<&str> = s.param_names.clone();
            let disc = quad_expr_str(&s.disc, &names);
            let mut comps: Vec<String> = s
                .affine
                .iter()
                .map(|e| affine_expr_str(e, &names))
                .collect();
            let sqrt_term = {
                let inner = format!("(* pm (sqrt {}))", disc);
                scaled(&s.sqrt_scale, &inner).unwrap_or_else(|| "0".into())
            };
            let base = comps[s.sqrt_coord].clone();
            comps[s.sqrt_coord] = if base == "0" {
                sqrt_term
            } else {
                format!("(+ {} {})", base, sqrt_term)
            };
            let constraints = vec![format!("(>= {} 0)", disc), "(= (^2 pm) 1)".to_string()];
            (comps, constraints)
        }
        Family::SemiExplicit(s) => semi_explicit_strings(s),
    }
}

// --- structured family data (exact round-trip) ---

fn affine_expr_to_value(e: &AffineExpr) -> Value {
    json!({
        "constant": scalar_to_value(&e.constant),
        "lin": e.lin.iter().map(scalar_to_value).collect::<Vec<_>>(),
    })
}

fn affine_expr_from_value(v: &Value) -> JsonResult<AffineExpr> {
    let obj = v.as_object().ok_or("expected affine expression")?;
    Ok(AffineExpr {
        constant: scalar_from_value(obj.get("constant").ok_or("missing constant")?)?,
        lin: obj
            .get("lin")
            .and_then(Value::as_array)
            .ok_or("missing lin")?
            .iter()
            .map(scalar_from_value)
            .collect::<JsonResult<Vec<_>>>()?,
    })
}

fn family_data(f: &Family) -> Value {
    match f {
        Family::Affine(a) => json!({
            "param_coords": a.param_coords,
            "base": a.base.iter().map(real_to_value).collect::<Vec<_>>(),
            "dirs": a
                .dirs
                .iter()
                .map(|d| d.iter().map(scalar_to_value).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "excluded": a
                .excluded
                .iter()
                .map(|(i, v)| json!([i, scalar_to_value(v)]))
                .collect::<Vec<_>>(),
        }),
        Family::PolyInParams(p) => json!({
            "comps": p
                .comps
                .iter()
                .map(|u| u.c.iter().map(scalar_to_value).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "excluded": p.excluded.iter().map(scalar_to_value).collect::<Vec<_>>(),
        }),
        Family::SqrtBranch(s) => json!({
            "param_coords": s.param_coords,
            "affine": s.affine.iter().map(affine_expr_to_value).collect::<Vec<_>>(),
            "sqrt_coord": s.sqrt_coord,
            "sqrt_scale": scalar_to_value(&s.sqrt_scale),
            "disc": {
                "constant": scalar_to_value(&s.disc.constant),
                "lin": s.disc.lin.iter().map(scalar_to_value).collect::<Vec<_>>(),
                "quad": s
                    .disc
                    .quad
                    .iter()
                    .map(|row| row.iter().map(scalar_to_value).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            },
        }),
        Family::SemiExplicit(s) => json!({
            "a2": scalar_to_value(&s.a2),
            "a3": scalar_to_value(&s.a3),
            "b1": scalar_to_value(&s.b1),
            "c0": scalar_to_value(&s.c0),
            "c1": scalar_to_value(&s.c1),
            "x0_offset": scalar_to_value(&s.x0_offset),
        }),
    }
}

pub fn family_to_value(f: &Family) -> Value {
    let (components, constraints) = family_components(f);
    json!({
        "shape": f.shape_name(),
        "params": f.param_names(),
        "components": components,
        "constraints": constraints,
        "data": family_data(f),
    })
}

static COORD_NAMES: [&str; 4] = ["x0", "x1", "x2", "x3"];

pub fn family_from_value(v: &Value) -> JsonResult<Family> {
    let obj = v.as_object().ok_or("expected family object")?;
    let shape = obj
        .get("shape")
        .and_then(Value::as_str)
        .ok_or("missing shape")?;
    let data = obj.get("data").ok_or("missing data")?;
    let d = data.as_object().ok_or("data must be an object")?;
    let coords = |key: &str| -> JsonResult<Vec<usize>> {
        d.get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| format!("missing {key}"))?
            .iter()
            .map(|x| x.as_u64().map(|u| u as usize).ok_or("bad index".into()))
            .collect()
    };
    match shape {
        "affine" => {
            let param_coords = coords("param_coords")?;
            let base_vec = d
                .get("base")
                .and_then(Value::as_array)
                .ok_or("missing base")?
                .iter()
                .map(real_from_value)
                .collect::<JsonResult<Vec<_>>>()?;
            let base: [Real; 4] = base_vec
                .try_into()
                .map_err(|_| "base must have 4 entries")?;
            let dirs = d
                .get("dirs")
                .and_then(Value::as_array)
                .ok_or("missing dirs")?
                .iter()
                .map(|row| {
                    let v = row
                        .as_array()
                        .ok_or("bad dir")?
                        .iter()
                        .map(scalar_from_value)
                        .collect::<JsonResult<Vec<_>>>()?;
                    let arr: [Scalar; 4] = v.try_into().map_err(|_| "dir must have 4 entries")?;
                    Ok(arr)
                })
                .collect::<JsonResult<Vec<_>>>()?;
            let excluded = d
                .get("excluded")
                .and_then(Value::as_array)
                .ok_or("missing excluded")?
                .iter()
                .map(|pair| {
                    let arr = pair.as_array().ok_or("bad excluded entry")?;
                    let idx = arr[0].as_u64().ok_or("bad excluded index")? as usize;
                    Ok((idx, scalar_from_value(&arr[1])?))
                })
                .collect::<JsonResult<Vec<_>>>()?;
            let param_names = param_coords.iter().map(|&c| COORD_NAMES[c]).collect();
            Ok(Family::Affine(AffineFamily {
                param_names,
                param_coords,
                base,
                dirs,
                excluded,
            }))
        }
        "poly-in-params" => {
            let comps_vec = d
                .get("comps")
                .and_then(Value::as_array)
                .ok_or("missing comps")?
                .iter()
                .map(|row| {
                    let v = row
                        .as_array()
                        .ok_or("bad comp")?
                        .iter()
                        .map(scalar_from_value)
                        .collect::<JsonResult<Vec<_>>>()?;
                    let arr: [Scalar; 3] = v.try_into().map_err(|_| "comp must have 3 entries")?;
                    Ok(UniQuad { c: arr })
                })
                .collect::<JsonResult<Vec<_>>>()?;
            let comps: [UniQuad; 4] = comps_vec.try_into().map_err(|_| "comps must have 4 rows")?;
            let excluded = d
                .get("excluded")
                .and_then(Value::as_array)
                .ok_or("missing excluded")?
                .iter()
                .map(scalar_from_value)
                .collect::<JsonResult<Vec<_>>>()?;
            Ok(Family::PolyInParams(PolyFamily { comps, excluded }))
        }
        "sqrt-branch" => {
            let param_coords = coords("param_coords")?;
            let affine_vec = d
                .get("affine")
                .and_then(Value::as_array)
                .ok_or("missing affine")?
                .iter()
                .map(affine_expr_from_value)
                .collect::<JsonResult<Vec<_>>>()?;
            let affine: [AffineExpr; 4] = affine_vec
                .try_into()
                .map_err(|_| "affine must have 4 rows")?;
            let disc_obj = d
                .get("disc")
                .and_then(Value::as_object)
                .ok_or("missing disc")?;
            let disc = QuadExpr {
                constant: scalar_from_value(disc_obj.get("constant").ok_or("missing constant")?)?,
                lin: disc_obj
                    .get("lin")
                    .and_then(Value::as_array)
                    .ok_or("missing lin")?
                    .iter()
                    .map(scalar_from_value)
                    .collect::<JsonResult<Vec<_>>>()?,
                quad: disc_obj
                    .get("quad")
                    .and_then(Value::as_array)
                    .ok_or("missing quad")?
                    .iter()
                    .map(|row| {
                        row.as_array()
                            .ok_or_else(|| "bad quad row".to_string())?
                            .iter()
                            .map(scalar_from_value)
                            .collect::<JsonResult<Vec<_>>>()
                    })
                    .collect::<JsonResult<Vec<_>>>()?,
            };
            let param_names = param_coords.iter().map(|&c| COORD_NAMES[c]).collect();
            Ok(Family::SqrtBranch(SqrtFamily {
                param_names,
                param_coords,
                affine,
                sqrt_coord: d
                    .get("sqrt_coord")
                    .and_then(Value::as_u64)
                    .ok_or("missing sqrt_coord")? as usize,
                sqrt_scale: scalar_from_value(d.get("sqrt_scale").ok_or("missing sqrt_scale")?)?,
                disc,
            }))
        }
        "semi-explicit" => {
            let get = |k: &str| -> JsonResult<Scalar> {
                scalar_from_value(d.get(k).ok_or_else(|| format!("missing {k}"))?)
            };
            Ok(Family::SemiExplicit(SemiExplicitFamily {
                a2: get("a2")?,
                a3: get("a3")?,
                b1: get("b1")?,
                c0: get("c0")?,
                c1: get("c1")?,
                x0_offset: get("x0_offset")?,
            }))
        }
        other => Err(format!("unknown family shape {other}")),
    }
}

pub fn set_to_value(set: &SolutionSet) -> Value {
    json!({
        "empty": set.is_empty(),
        "points": set.points.iter().map(point_to_value).collect::<Vec<_>>(),
        "families": set.families.iter().map(family_to_value).collect::<Vec<_>>(),
    })
}

pub fn set_from_value(v: &Value) -> JsonResult<SolutionSet> {
    let obj = v.as_object().ok_or("expected solution set object")?;
    let points = obj
        .get("points")
        .and_then(Value::as_array)
        .ok_or("missing points")?
        .iter()
        .map(point_from_value)
        .collect::<JsonResult<Vec<_>>>()?;
    let families = obj
        .get("families")
        .and_then(Value::as_array)
        .ok_or("missing families")?
        .iter()
        .map(family_from_value)
        .collect::<JsonResult<Vec<_>>>()?;
    Ok(SolutionSet { points, families })
}

pub fn linear_to_value(lin: &LinearSolutionSet) -> Value {
    match lin {
        LinearSolutionSet::Empty => json!({ "kind": "empty" }),
        LinearSolutionSet::Point(p) => json!({ "kind": "point", "point": quat_to_value(p) }),
        LinearSolutionSet::Affine {
            base,
            projector,
            rank,
        } => json!({
            "kind": "affine",
            "base": quat_to_value(base),
            "rank": rank,
            "projector": mat_to_value(projector),
        }),
    }
}

fn mat_to_value(m: &Mat4) -> Value {
    Value::Array(
        m.rows
            .iter()
            .map(|row| Value::Array(row.iter().map(scalar_to_value).collect()))
            .collect(),
    )
}
