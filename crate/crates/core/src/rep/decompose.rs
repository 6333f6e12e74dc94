use serde::Serialize;

use super::MatrixRep;
use crate::arith::Mat;
use crate::character::{restrict_invariant_dim, GroupContext};
use crate::error::{Error, Result};
use crate::group::Subgroup;

/// Multiplicity of each irreducible, indexed like the character table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RepType {
    pub multiplicities: Vec<u64>,
}

impl RepType {
    /// `Σ m_i n_i`
    pub fn dim(&self, ctx: &GroupContext) -> u64 {
        self.multiplicities.iter().enumerate().map(|(i, &m)| m * ctx.degree(i)).sum()
    }
}

/// Column bases of the images of the isotypic projectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsotypicDecomposition {
    pub components: Vec<Mat>,
}

impl IsotypicDecomposition {
    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(Mat::cols).collect()
    }
}

/// `P_i = (n_i/|G|) Σ_g χ_i(g⁻¹) ρ(g)`
pub fn isotypic_projector(rep: &MatrixRep, i: usize, ctx: &GroupContext) -> Mat {
    let f = ctx.field;
    let scale = f.div(f.reduce(ctx.degree(i)), f.reduce(ctx.order() as u64));
    let chi = ctx.chi(i);
    let mut p = Mat::zeros(f, rep.dim, rep.dim);
    for g in 0..ctx.order() {
        let c = f.mul(scale, ctx.at(chi, ctx.group.inv(g)));
        p.add_scaled(c, &rep.matrices[g]);
    }
    p
}

/// Splits `rep` into isotypic components. Multiplicities come from projector
/// ranks and are checked against the character inner products, which only
/// determine them modulo p.
pub fn decompose(rep: &MatrixRep, ctx: &GroupContext) -> Result<(IsotypicDecomposition, RepType)> {
    let chi = rep.character(&ctx.classes);
    let mut components = Vec::with_capacity(ctx.irrep_count());
    let mut mults = Vec::with_capacity(ctx.irrep_count());
    for i in 0..ctx.irrep_count() {
        let basis = isotypic_projector(rep, i, ctx).column_basis();
        let rank = basis.cols() as u64;
        let n = ctx.degree(i);
        if !rank.is_multiple_of(n) {
            return Err(Error::InconsistentMultiplicity {
                index: i,
                detail: format!("projector rank {rank} is not a multiple of degree {n}"),
            });
        }
        let m = rank / n;
        let by_character = ctx.inner_mult(&chi, ctx.chi(i));
        if ctx.field.reduce(m) != by_character {
            return Err(Error::InconsistentMultiplicity {
                index: i,
                detail: format!("projector gives {m}, character gives {by_character} mod {}", ctx.field.p()),
            });
        }
        components.push(basis);
        mults.push(m);
    }
    let total: usize = components.iter().map(Mat::cols).sum();
    if total != rep.dim {
        return Err(Error::InconsistentMultiplicity {
            index: 0,
            detail: format!("components span {total} of {} dimensions", rep.dim),
        });
    }
    Ok((IsotypicDecomposition { components }, RepType { multiplicities: mults }))
}

/// Basis of `{v : ρ(h)v = v for h ∈ H}` from the averaging projector, checked
/// against `Σ_i m_i dim V_i^H`.
pub fn subgroup_invariants(rep: &MatrixRep, h: &Subgroup, ctx: &GroupContext) -> Result<Mat> {
    let f = ctx.field;
    let mut avg = Mat::zeros(f, rep.dim, rep.dim);
    let w = f.inv(f.reduce(h.order() as u64));
    for &g in &h.element_indices {
        avg.add_scaled(w, &rep.matrices[g]);
    }
    let basis = avg.column_basis();
    let (_, ty) = decompose(rep, ctx)?;
    let mut expected = 0;
    for (i, &m) in ty.multiplicities.iter().enumerate() {
        expected += m * restrict_invariant_dim(ctx.chi(i), h, &ctx.classes, f)?;
    }
    if expected != basis.cols() as u64 {
        return Err(Error::DimensionMismatch(format!(
            "averaging gives {} fixed vectors, characters give {expected}",
            basis.cols()
        )));
    }
    Ok(basis)
}

/// On every component of a degree-one irreducible, each `ρ(g)` acts as a scalar.
pub fn acts_by_scalar_on_linear_components(rep: &MatrixRep, ctx: &GroupContext) -> Result<bool> {
    let (dec, _) = decompose(rep, ctx)?;
    for (i, basis) in dec.components.iter().enumerate() {
        if ctx.degree(i) != 1 || basis.cols() == 0 {
            continue;
        }
        let sub = rep.restrict_to(basis)?;
        if !sub.matrices.iter().all(Mat::is_scalar) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{all_subgroups, builtin, subgroup_closure};

    fn s3() -> GroupContext {
        GroupContext::new(builtin("S3").unwrap()).unwrap()
    }

    #[test]
    fn regular_s3() {
        let c = s3();
        let reg = c.regular_rep();
        let (dec, ty) = decompose(&reg, &c).unwrap();
        assert_eq!(ty.multiplicities, vec![1, 1, 2]);
        assert_eq!(dec.dims(), vec![1, 1, 4]);
        assert_eq!(isotypic_projector(&reg, 0, &c).rank(), 1);
        assert_eq!(isotypic_projector(&reg, 2, &c).rank(), 4);
    }

    #[test]
    fn permutation_and_zero_reps() {
        let c = s3();
        let (_, ty) = decompose(&c.permutation_rep(), &c).unwrap();
        assert_eq!(ty.multiplicities, vec![1, 0, 1]);
        let (dec, ty) = decompose(&MatrixRep::zero(&c.group, c.field), &c).unwrap();
        assert_eq!(ty.multiplicities, vec![0, 0, 0]);
        assert_eq!(dec.dims(), vec![0, 0, 0]);
        let triv = MatrixRep::trivial(&c.group, c.field, 1);
        assert!(isotypic_projector(&triv, 0, &c).is_identity());
    }

    #[test]
    fn projector_algebra() {
        for name in ["S3", "D4", "Q8", "A4", "C6"] {
            let c = GroupContext::new(builtin(name).unwrap()).unwrap();
            let reg = c.regular_rep();
            let ps: Vec<Mat> = (0..c.irrep_count()).map(|i| isotypic_projector(&reg, i, &c)).collect();
            let mut sum = Mat::zeros(c.field, reg.dim, reg.dim);
            for (i, p) in ps.iter().enumerate() {
                for (j, q) in ps.iter().enumerate() {
                    let pq = p.mul(q);
                    if i == j {
                        assert_eq!(&pq, p, "{name}");
                    } else {
                        assert!(pq.is_zero(), "{name}");
                    }
                }
                for m in &reg.matrices {
                    assert_eq!(p.mul(m), m.mul(p));
                }
                sum = sum.add(p);
            }
            assert!(sum.is_identity());
        }
    }

    #[test]
    fn invariants_examples() {
        let c = s3();
        let perm = c.permutation_rep();
        let fixed = subgroup_invariants(&perm, &Subgroup::whole(&c.group), &c).unwrap();
        assert_eq!(fixed.cols(), 1);
        let v = fixed.column(0);
        assert!(v[0] != 0 && v.iter().all(|&x| x == v[0]));
        let reg = c.regular_rep();
        assert_eq!(subgroup_invariants(&reg, &Subgroup::trivial(), &c).unwrap().cols(), 6);
        let three_cycle = c.classes.reps[2];
        let a3 = subgroup_closure(&c.group, &[three_cycle]);
        assert_eq!(subgroup_invariants(&reg, &a3, &c).unwrap().cols(), 2);
        for h in all_subgroups(&c.group) {
            let dim = subgroup_invariants(&reg, &h, &c).unwrap().cols();
            assert_eq!(dim, 6 / h.order());
        }
    }

    #[test]
    fn linear_components_are_scalar() {
        for name in ["S3", "C4", "D4"] {
            let c = GroupContext::new(builtin(name).unwrap()).unwrap();
            assert!(acts_by_scalar_on_linear_components(&c.regular_rep(), &c).unwrap());
        }
    }
}
