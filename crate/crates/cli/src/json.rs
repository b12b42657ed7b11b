//! JSON encodings. Key order is fixed by struct field order and term order
//! by the library's monomial order, so output is byte-for-byte stable.

use mpweyl::algebra::AlgebraElement;
use mpweyl::modules::{Family, ModuleSpec, ModuleVector};
use mpweyl::scalars::RationalScalar;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Serialize)]
pub struct CoeffJson {
    pub num: String,
    pub den: String,
}

#[derive(Serialize)]
pub struct MonomialJson {
    pub rho: Vec<i64>,
    pub sigma: Vec<i64>,
    pub x: Vec<u32>,
    pub y: Vec<u32>,
}

#[derive(Serialize)]
pub struct TermJson {
    pub monomial: MonomialJson,
    pub coeff: CoeffJson,
}

#[derive(Serialize)]
pub struct ElementJson {
    pub terms: Vec<TermJson>,
}

pub fn scalar(c: &RationalScalar) -> CoeffJson {
    CoeffJson { num: c.numer().to_string(), den: c.denom().to_string() }
}

pub fn scalar_json(c: &RationalScalar) -> Value {
    serde_json::to_value(scalar(c)).expect("serializable")
}

/// Encode `e` with per-index arrays of length `n`.
pub fn element(e: &AlgebraElement, n: usize) -> ElementJson {
    let terms = e
        .terms()
        .map(|(m, c)| {
            let parts: Vec<_> = (1..=n).map(|i| m.part(i)).collect();
            TermJson {
                monomial: MonomialJson {
                    rho: parts.iter().map(|p| p.rho).collect(),
                    sigma: parts.iter().map(|p| p.sigma).collect(),
                    x: parts.iter().map(|p| p.x).collect(),
                    y: parts.iter().map(|p| p.y).collect(),
                },
                coeff: scalar(c),
            }
        })
        .collect();
    ElementJson { terms }
}

pub fn element_json(e: &AlgebraElement, n: usize) -> Value {
    serde_json::to_value(element(e, n)).expect("serializable")
}

pub fn vector_json(v: &ModuleVector) -> Value {
    let terms: Vec<Value> = v.terms().map(|(k, c)| json!({ "index": k, "coeff": scalar(c) })).collect();
    json!({ "terms": terms })
}

fn scalars(v: &[RationalScalar]) -> Vec<CoeffJson> {
    v.iter().map(scalar).collect()
}

pub fn spec_json(spec: &ModuleSpec) -> Value {
    let params = match spec.family() {
        Family::Polynomial => json!({}),
        Family::Verma { lambda, zeta_rho, zeta_sigma } => json!({
            "lambda": scalars(lambda),
            "zeta_rho": zeta_rho.iter().map(|z| z.as_i32()).collect::<Vec<_>>(),
            "zeta_sigma": zeta_sigma.iter().map(|z| z.as_i32()).collect::<Vec<_>>(),
        }),
        Family::WeightNoBreak { mu, nu } => json!({ "mu": scalars(mu), "nu": scalars(nu) }),
        Family::WeightBroken { mu, nu, breaks, alpha } => json!({
            "mu": scalars(mu),
            "nu": scalars(nu),
            "breaks": breaks,
            "alpha": alpha.iter().map(|&a| u8::from(a)).collect::<Vec<_>>(),
        }),
        Family::Whittaker { xi } => json!({ "xi": scalars(xi) }),
    };
    json!({ "family": spec.family_name(), "n": spec.rank(), "params": params })
}
