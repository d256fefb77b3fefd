//! JSON documents for the `skewsym-report/1` schema.

use num_complex::Complex64;
use num_integer::Integer;
use serde_json::{json, Value};

use crate::algebra::{GroupKind, IntLattice2, RationalTurn, SymmetryGroup, TurnPair};
use crate::classify::ClassificationReport;
use crate::numerics::CompactnessReport;
use crate::skew::{NormalizedSkew, SkewProduct};
use crate::symmetry::{apply_mstar, ConditionSet, Status, SymmetryReport};

pub const SCHEMA: &str = "skewsym-report/1";

fn c64(c: Complex64) -> Value {
    json!([c.re, c.im])
}

fn turn(t: &RationalTurn) -> Value {
    json!([t.k(), t.order()])
}

fn pair(g: &TurnPair) -> Value {
    json!([turn(&g.0), turn(&g.1)])
}

pub fn lattice(l: &IntLattice2) -> Value {
    json!(l.basis())
}

/// `{kind, character, torsion, generators}`; generators are `[[k,m],[k,m]]`
/// turn pairs `(μ, ν)`. A one-parameter family also lists the direction of
/// its identity component under `circles`.
pub fn group(g: &SymmetryGroup) -> Value {
    match g.kind() {
        GroupKind::FullTorus => json!({
            "kind": "full_torus",
            "character": Value::Null,
            "torsion": Value::Null,
            "generators": [],
            "circles": [[1, 0], [0, 1]],
            "lattice": lattice(g.lattice()),
            "presentation": g.presentation(),
        }),
        GroupKind::OneDimFamily { character, torsion } => {
            let [a, b] = *character;
            let e = a.extended_gcd(&b);
            let (x, y) = (e.x * e.gcd.signum(), e.y * e.gcd.signum());
            let gen = (RationalTurn::new(x, *torsion), RationalTurn::new(y, *torsion));
            let gens: Vec<Value> = if *torsion > 1 { vec![pair(&gen)] } else { vec![] };
            json!({
                "kind": "one_dim_family",
                "character": character,
                "torsion": torsion,
                "generators": gens,
                "circles": [[-b, a]],
                "lattice": lattice(g.lattice()),
                "presentation": g.presentation(),
            })
        }
        GroupKind::Finite { d1, d2, generators } => json!({
            "kind": "finite",
            "character": Value::Null,
            "torsion": Value::Null,
            "order": d1 * d2,
            "invariants": [d1, d2],
            "generators": generators.iter().map(pair).collect::<Vec<_>>(),
            "circles": [],
            "lattice": lattice(g.lattice()),
            "presentation": g.presentation(),
        }),
    }
}

pub fn input(text: &str, f: &SkewProduct) -> Value {
    json!({
        "text": text,
        "map": f.to_string(),
        "p": f.p().fmt_var("z"),
        "q": f.q().to_string(),
        "delta": f.delta(),
        "d": f.d(),
        "l": f.l(),
        "b_d": f.b_d().fmt_var("z"),
    })
}

pub fn normalization(n: &NormalizedSkew) -> Value {
    json!({
        "zeta": n.centroids.zeta.to_string(),
        "zeta_z": n.centroids.zeta_z.to_string(),
        "already_centered": n.was_already_centered(),
        "laurent_ok": n.laurent_ok,
        "p_tilde": n.p_tilde.fmt_var("z"),
        "fiber_coefficients": n.fiber_coeffs.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "translated": n.translated.as_ref().map(|t| t.to_string()),
        "scale": {
            "c1": c64(n.scale.c1),
            "c2": c64(n.scale.c2),
            "exact": n.scale.exact.as_ref().map(|(a, b)| json!([a.to_string(), b.to_string()])),
            "precision_digits": n.scale.precision,
        },
        "normal_form": n.normal_form().map(|t| t.to_string()),
    })
}

pub fn conditions(c: &ConditionSet) -> Value {
    json!({
        "base_vectors": c.base_vectors,
        "fiber_vectors": c.fiber_vectors,
        "level1": lattice(&c.level1),
        "lattice": lattice(&c.lattice),
        "mstar": c.mstar,
        "closure_rounds": c.closure_rounds,
    })
}

/// Lattice basis, the images of its basis under `M*` (each a member of the
/// lattice), and the hypothesis that makes the group exact.
pub fn certificate(r: &SymmetryReport) -> Value {
    let (Status::Exact(j), Some(c)) = (&r.status, &r.conditions) else {
        return Value::Null;
    };
    let images: Vec<_> = c.lattice.basis().iter().map(|&v| apply_mstar(&c.mstar, v)).collect();
    json!({
        "hypothesis": j.as_str(),
        "lattice_basis": lattice(&c.lattice),
        "mstar": c.mstar,
        "mstar_images": images,
        "mstar_stable": images.iter().all(|&v| c.lattice.contains(v)),
        "contains_level1": c.lattice.contains_lattice(&c.level1),
    })
}

pub fn status(r: &SymmetryReport) -> Value {
    let mut v = json!({ "label": r.status.label() });
    match &r.status {
        Status::Exact(j) => v["justification"] = json!(j.as_str()),
        Status::BoundsPair { lower, upper } => {
            v["lower"] = group(lower);
            v["upper"] = group(upper);
        }
        Status::CandidateUpperBound => {}
    }
    if let Some(m) = &r.modulus_filter {
        v["modulus_filter"] = serde_json::to_value(m).unwrap();
    }
    if let Some(a) = &r.advice {
        v["advice"] = json!(a);
    }
    v
}

pub fn symmetries(r: &SymmetryReport) -> Value {
    json!({
        "sigma_p": {
            "zeta": r.sigma.zeta.to_string(),
            "order": r.sigma.order.finite(),
            "centered": r.sigma.centered.fmt_var("z"),
        },
        "conditions": r.conditions.as_ref().map(conditions),
        "group": group(&r.group),
        "status": status(r),
        "certificate": certificate(r),
        "elements": r.group.order().filter(|&n| n <= 64).and_then(|_| r.group.elements())
            .map(|es| es.iter().map(pair).collect::<Vec<_>>()),
    })
}

pub fn classification(c: &ClassificationReport) -> Value {
    json!({
        "type": c.type_tag.as_str(),
        "semiconjugacy": c.semiconjugacy.as_ref().map(|s| json!({
            "r": s.r,
            "s": s.s,
            "base": s.base.fmt_var("w"),
            "pi": format!("(z^{}, z^{}*w)", s.r, s.s),
            "identity_check": c.identity_check,
        })),
        "sigma_factor": c.sigma_factor,
        "julia_shape": c.julia_shape,
        "uncertain": c.uncertain,
        "laurent": c.laurent,
        "elements": c.elements.as_ref().map(|es| es.iter().map(pair).collect::<Vec<_>>()),
    })
}

pub fn compactness(c: &CompactnessReport) -> Value {
    serde_json::to_value(c).unwrap()
}
