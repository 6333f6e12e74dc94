use serde::Serialize;

use super::{decompose, isotypic_projector, MatrixRep};
use crate::arith::{Mat, Scalar};
use crate::character::{char_dual, char_tensor, GroupContext};
use crate::error::{Error, Result};
use crate::group::Group;

/// Basis of `{T : T ρ_src(g) = ρ_dst(g) T}`; each `T` is `dst.dim × src.dim`.
/// Only generators are imposed, which suffices.
pub fn intertwiners(src: &MatrixRep, dst: &MatrixRep, group: &Group) -> Vec<Mat> {
    let f = src.modulus;
    let (d1, d2) = (src.dim, dst.dim);
    let unknowns = d1 * d2;
    let gens = group.generator_indices();
    let mut sys = Mat::zeros(f, gens.len() * unknowns, unknowns);
    for (k, &g) in gens.iter().enumerate() {
        let a = &src.matrices[g];
        let b = &dst.matrices[g];
        for r in 0..d2 {
            for c in 0..d1 {
                let row = k * unknowns + r * d1 + c;
                for m in 0..d1 {
                    let col = r * d1 + m;
                    sys[(row, col)] = f.add(sys[(row, col)], a[(m, c)]);
                }
                for m in 0..d2 {
                    let col = m * d1 + c;
                    sys[(row, col)] = f.sub(sys[(row, col)], b[(r, m)]);
                }
            }
        }
    }
    sys.nullspace()
        .into_iter()
        .map(|v| Mat::from_fn(f, d2, d1, |r, c| v[r * d1 + c]))
        .collect()
}

/// Dimension of `Hom_G(rep1, rep2)` by the intertwiner equations, checked
/// against `⟨χ₁^∨ χ₂, 1⟩`. The character side is only known mod p, so the
/// two are compared as residues.
pub fn hom_dim(rep1: &MatrixRep, rep2: &MatrixRep, ctx: &GroupContext) -> Result<usize> {
    let by_solve = intertwiners(rep1, rep2, &ctx.group).len();
    let chi = char_tensor(
        &char_dual(&rep1.character(&ctx.classes), &ctx.classes),
        &rep2.character(&ctx.classes),
        ctx.field,
    );
    let by_character = ctx.inner_mult(&chi, &ctx.trivial());
    if ctx.field.reduce(by_solve as u64) != by_character {
        return Err(Error::MethodMismatch { by_character, by_solve });
    }
    Ok(by_solve)
}

/// `Hom_G(V_i, E)` realized as `dim E × dim V_i` intertwiners.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicitySpace {
    pub index: usize,
    pub basis: Vec<Mat>,
}

impl MultiplicitySpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn multiplicity_space(model: &MatrixRep, i: usize, rep: &MatrixRep, group: &Group) -> MultiplicitySpace {
    MultiplicitySpace { index: i, basis: intertwiners(model, rep, group) }
}

/// The evaluation map `V_i ⊗ F_i → E`, `v ⊗ T ↦ T v`, on the basis
/// `(a, s) ↦ a·dim F + s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvaluationCheck {
    pub index: usize,
    pub multiplicity: usize,
    pub component_dim: usize,
    pub map: Mat,
}

pub fn evaluation_iso_check(
    rep: &MatrixRep,
    i: usize,
    ctx: &GroupContext,
    model: &MatrixRep,
) -> Result<EvaluationCheck> {
    let n = ctx.degree(i) as usize;
    if model.dim != n || hom_dim(model, model, ctx)? != 1 {
        return Err(Error::Model(format!("model for irreducible {i} is not irreducible of degree {n}")));
    }
    let space = multiplicity_space(model, i, rep, &ctx.group);
    let fdim = space.dim();
    let columns: Vec<Vec<Scalar>> = (0..n)
        .flat_map(|a| space.basis.iter().map(move |t| t.column(a)))
        .collect();
    let map = Mat::from_columns(ctx.field, rep.dim, &columns);
    let rank = map.rank();
    if rank != n * fdim {
        return Err(Error::NotInjective { rank, expected: n * fdim });
    }
    let p = isotypic_projector(rep, i, ctx);
    if p.mul(&map) != map || p.rank() != rank {
        return Err(Error::WrongImage);
    }
    let ident = Mat::identity(ctx.field, fdim);
    for g in ctx.group.generator_indices() {
        if map.mul(&model.matrices[*g].kron(&ident)) != rep.matrices[*g].mul(&map) {
            return Err(Error::WrongImage);
        }
    }
    let (_, ty) = decompose(rep, ctx)?;
    if ty.multiplicities[i] as usize != fdim {
        return Err(Error::InconsistentMultiplicity {
            index: i,
            detail: format!("multiplicity space has dim {fdim}, type says {}", ty.multiplicities[i]),
        });
    }
    Ok(EvaluationCheck { index: i, multiplicity: fdim, component_dim: rank, map })
}

/// Recovers `S : F₁ → F₂` from a G-map `Φ : V ⊗ F₁ → V ⊗ F₂` with `V`
/// irreducible of dimension `n`, and checks `Φ = I_n ⊗ S`.
pub fn strip_multiplicity_map(phi: &Mat, n: usize) -> Result<Mat> {
    if n == 0 || !phi.rows().is_multiple_of(n) || !phi.cols().is_multiple_of(n) {
        return Err(Error::DimensionMismatch(format!("{}x{} map over a {n}-dim model", phi.rows(), phi.cols())));
    }
    let (f2, f1) = (phi.rows() / n, phi.cols() / n);
    let rows: Vec<usize> = (0..f2).collect();
    let cols: Vec<usize> = (0..f1).collect();
    let s = phi.select(&rows, &cols);
    if Mat::identity(phi.field(), n).kron(&s) != *phi {
        return Err(Error::Model("map is not of the form I ⊗ S".into()));
    }
    Ok(s)
}
