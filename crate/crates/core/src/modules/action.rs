//! The explicit actions of the generators on each family.

use crate::algebra::{AlgebraElement, GenKind, GeneratorSymbol, Word};
use crate::scalars::{quantum_integer, RationalScalar};

use super::spec::{Family, ModuleError, ModuleSpec};
use super::vector::{BasisIndex, ModuleVector};

fn shifted(k: &[i64], pos: usize, by: i64) -> BasisIndex {
    let mut out = k.to_vec();
    out[pos] += by;
    out
}

fn rk(i: usize, e: i64) -> RationalScalar {
    RationalScalar::r_pow(i, e)
}

fn sk(i: usize, e: i64) -> RationalScalar {
    RationalScalar::s_pow(i, e)
}

fn denominator_inv(i: usize) -> RationalScalar {
    (rk(i, 2) - sk(i, 2)).inv().expect("r_i^2 - s_i^2 is nonzero")
}

/// `(r_i^{2k} mu^2 - s_i^{2k} nu^2) / (r_i^2 - s_i^2)`.
fn weight_y_coeff(i: usize, k: i64, mu: &RationalScalar, nu: &RationalScalar) -> RationalScalar {
    (rk(i, 2 * k) * mu * mu - sk(i, 2 * k) * nu * nu) * denominator_inv(i)
}

/// Image of one basis vector under a single unit-power generator, before
/// the support rule is applied. `inverse` selects `rho_i^{-1}` or
/// `sigma_i^{-1}`.
fn basis_image(spec: &ModuleSpec, kind: GenKind, i: usize, inverse: bool, k: &[i64]) -> Vec<(RationalScalar, BasisIndex)> {
    let p = i - 1;
    let torus = |eig: RationalScalar| {
        let eig = if inverse { eig.inv().expect("eigenvalues are nonzero") } else { eig };
        vec![(eig, k.to_vec())]
    };
    match spec.family() {
        Family::Polynomial => match kind {
            GenKind::Rho => torus(rk(i, k[p])),
            GenKind::Sigma => torus(sk(i, k[p])),
            GenKind::X => vec![(RationalScalar::one(), shifted(k, p, 1))],
            GenKind::Y => vec![(quantum_integer(i, k[p]), shifted(k, p, -1))],
        },
        Family::Verma { lambda, zeta_rho, zeta_sigma } => match kind {
            GenKind::Rho => torus(rk(i, k[p]) * &lambda[p] * zeta_rho[p].as_scalar()),
            GenKind::Sigma => torus(sk(i, k[p]) * &lambda[p] * zeta_sigma[p].as_scalar()),
            GenKind::X => vec![(RationalScalar::one(), shifted(k, p, 1))],
            GenKind::Y => vec![(quantum_integer(i, k[p]) * &lambda[p] * &lambda[p], shifted(k, p, -1))],
        },
        Family::WeightNoBreak { mu, nu } | Family::WeightBroken { mu, nu, .. } => match kind {
            GenKind::Rho => torus(rk(i, k[p]) * &mu[p]),
            GenKind::Sigma => torus(sk(i, k[p]) * &nu[p]),
            GenKind::X => vec![(RationalScalar::one(), shifted(k, p, 1))],
            GenKind::Y => vec![(weight_y_coeff(i, k[p], &mu[p], &nu[p]), shifted(k, p, -1))],
        },
        Family::Whittaker { xi } => {
            let n = spec.rank();
            let (kp, lp) = (k[p], k[n + p]);
            let step = if inverse { -1 } else { 1 };
            match kind {
                GenKind::Rho => vec![(RationalScalar::one(), shifted(k, p, step))],
                GenKind::Sigma => vec![(RationalScalar::one(), shifted(k, n + p, step))],
                // X_i rho^k sigma^l w = φ_i(rho^k sigma^l) xi_i w
                GenKind::X => vec![(&xi[p] * &(rk(i, -kp) * sk(i, -lp)), k.to_vec())],
                // Y_i rho^k sigma^l w = φ_i^{-1}(rho^k sigma^l) xi_i^{-1} t_i w
                GenKind::Y => {
                    let c = xi[p].inv().expect("xi is nonzero") * rk(i, kp) * sk(i, lp) * denominator_inv(i);
                    vec![
                        (&c * &rk(i, 2), shifted(k, p, 2)),
                        (-(&c * &sk(i, 2)), shifted(k, n + p, 2)),
                    ]
                }
            }
        }
    }
}

fn check_vector(spec: &ModuleSpec, v: &ModuleVector) -> Result<(), ModuleError> {
    v.terms().try_for_each(|(k, _)| spec.check_index(k))
}

fn apply_unit(spec: &ModuleSpec, kind: GenKind, i: usize, inverse: bool, v: &ModuleVector) -> ModuleVector {
    let mut out = ModuleVector::zero();
    for (k, c) in v.terms() {
        for (coef, target) in basis_image(spec, kind, i, inverse, k) {
            if spec.in_support(&target) {
                out.add_term(target, c * &coef);
            }
        }
    }
    out
}

fn apply_symbol(spec: &ModuleSpec, g: &GeneratorSymbol, v: &ModuleVector) -> Result<ModuleVector, ModuleError> {
    if g.index == 0 || g.index > spec.rank() {
        return Err(ModuleError::IndexOutOfRange { index: g.index, n: spec.rank() });
    }
    if !g.kind.is_torus() && g.exponent < 1 {
        return Err(ModuleError::InvalidSpec(format!("{g} has no action")));
    }
    let inverse = g.exponent < 0;
    let mut cur = v.clone();
    for _ in 0..g.exponent.unsigned_abs() {
        cur = apply_unit(spec, g.kind, g.index, inverse, &cur);
    }
    Ok(cur)
}

/// Act by one generator symbol (with its exponent). Images that leave the
/// support are dropped.
pub fn act_generator(spec: &ModuleSpec, g: &GeneratorSymbol, v: &ModuleVector) -> Result<ModuleVector, ModuleError> {
    check_vector(spec, v)?;
    apply_symbol(spec, g, v)
}

/// Act by a word, rightmost factor first.
pub fn act_word(spec: &ModuleSpec, w: &Word, v: &ModuleVector) -> Result<ModuleVector, ModuleError> {
    check_vector(spec, v)?;
    let mut cur = v.clone();
    for g in w.factors().iter().rev() {
        cur = apply_symbol(spec, g, &cur)?;
    }
    Ok(cur)
}

/// Act by an algebra element, applying each normal monomial's factors
/// right to left and summing with coefficients.
pub fn act_element(spec: &ModuleSpec, e: &AlgebraElement, v: &ModuleVector) -> Result<ModuleVector, ModuleError> {
    check_vector(spec, v)?;
    let mut out = ModuleVector::zero();
    for (m, c) in e.terms() {
        out = out.add(&act_word(spec, &m.to_word(), v)?.scale(c));
    }
    Ok(out)
}
