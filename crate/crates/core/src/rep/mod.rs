//! Explicit matrix representations over F_p and their isotypical theory.

mod decompose;
mod functors;
mod hom;
mod models;

pub use decompose::{
    acts_by_scalar_on_linear_components, decompose, isotypic_projector, subgroup_invariants,
    IsotypicDecomposition, RepType,
};
pub use functors::{dual_rep, ext_power_rep, sym_power_rep, tensor_rep};
pub use hom::{
    evaluation_iso_check, hom_dim, intertwiners, multiplicity_space, strip_multiplicity_map,
    EvaluationCheck, MultiplicitySpace,
};
pub use models::{irreducible_models, random_invertible, random_rep};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{Mat, PrimeModulus};
use crate::character::{ClassFunction, GroupContext};
use crate::error::{Error, Result};
use crate::group::{ConjugacyClasses, Group, Permutation};

/// Groups up to this order get an exhaustive `ρ(gh) = ρ(g)ρ(h)` check.
pub const EXHAUSTIVE_LIMIT: usize = 64;
const SAMPLED_PAIRS: usize = 1000;

/// How the homomorphism property was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Validation {
    Exhaustive,
    Sampled,
}

/// A representation given by one matrix per group element, indexed like the
/// group's elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixRep {
    pub modulus: PrimeModulus,
    pub dim: usize,
    pub matrices: Vec<Mat>,
}

impl MatrixRep {
    /// Extends generator matrices along breadth-first words, then checks the
    /// result is a homomorphism.
    pub fn from_generators(group: &Group, field: PrimeModulus, dim: usize, gens: &[Mat]) -> Result<Self> {
        if gens.len() != group.generators().len() {
            return Err(Error::GeneratorCount { expected: group.generators().len(), got: gens.len() });
        }
        for (k, m) in gens.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "generator {k} matrix is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.det() == 0 {
                return Err(Error::SingularMatrix(k));
            }
        }
        let mut matrices = Vec::with_capacity(group.order());
        matrices.push(Mat::identity(field, dim));
        for g in 1..group.order() {
            let (par, k) = group.parent(g).expect("non-identity elements have a parent");
            let m = gens[k].mul(&matrices[par]);
            matrices.push(m);
        }
        let rep = MatrixRep { modulus: field, dim, matrices };
        rep.check_words(group, gens)?;
        rep.validate(group)?;
        Ok(rep)
    }

    /// Every Cayley-graph edge `x → gen·x` must agree with the matrices; any
    /// two words for one element then give the same matrix.
    fn check_words(&self, group: &Group, gens: &[Mat]) -> Result<()> {
        for x in 0..group.order() {
            for (k, gm) in gens.iter().enumerate() {
                let y = group.mul(group.generator_indices()[k], x);
                if self.matrices[y] != gm.mul(&self.matrices[x]) {
                    return Err(Error::NotAHomomorphism { word: describe_word(group, k, x) });
                }
            }
        }
        Ok(())
    }

    /// Checks `ρ(1) = I` and `ρ(gh) = ρ(g)ρ(h)`: on all pairs when
    /// `|G| ≤ 64`, otherwise on generators plus 1000 seeded random pairs.
    pub fn validate(&self, group: &Group) -> Result<Validation> {
        let n = group.order();
        if self.matrices.len() != n {
            return Err(Error::DimensionMismatch(format!("{} matrices for {n} elements", self.matrices.len())));
        }
        if !self.matrices[0].is_identity() {
            return Err(Error::NotAHomomorphism { word: "identity".into() });
        }
        let check = |a: usize, b: usize| -> Result<()> {
            if self.matrices[group.mul(a, b)] != self.matrices[a].mul(&self.matrices[b]) {
                return Err(Error::NotAHomomorphism { word: format!("g{a}·g{b}") });
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    check(a, b)?;
                }
            }
            Ok(Validation::Exhaustive)
        } else {
            for &g in group.generator_indices() {
                for b in 0..n {
                    check(g, b)?;
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            for _ in 0..SAMPLED_PAIRS {
                check(rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
            Ok(Validation::Sampled)
        }
    }

    /// Left translation on the group algebra: `ρ(g) e_h = e_{gh}`.
    pub fn regular(group: &Group, field: PrimeModulus) -> Self {
        let n = group.order();
        let matrices = (0..n)
            .map(|g| {
                let mut m = Mat::zeros(field, n, n);
                for h in 0..n {
                    m[(group.mul(g, h), h)] = 1;
                }
                m
            })
            .collect();
        MatrixRep { modulus: field, dim: n, matrices }
    }

    /// Permutation matrices of the group's own action on its points.
    pub fn permutation(group: &Group, field: PrimeModulus) -> Self {
        let matrices = group.elements().iter().map(|e| permutation_matrix(e, field)).collect();
        MatrixRep { modulus: field, dim: group.degree(), matrices }
    }

    /// Permutation action on a finite set given by one permutation per generator.
    pub fn from_permutation_action(group: &Group, field: PrimeModulus, gens: &[Permutation]) -> Result<Self> {
        let dim = gens.first().map_or(1, Permutation::degree);
        let mats: Vec<Mat> = gens.iter().map(|p| permutation_matrix(p, field)).collect();
        Self::from_generators(group, field, dim, &mats)
    }

    pub fn trivial(group: &Group, field: PrimeModulus, dim: usize) -> Self {
        MatrixRep { modulus: field, dim, matrices: vec![Mat::identity(field, dim); group.order()] }
    }

    /// The zero-dimensional representation.
    pub fn zero(group: &Group, field: PrimeModulus) -> Self {
        Self::trivial(group, field, 0)
    }

    pub fn matrix(&self, g: usize) -> &Mat {
        &self.matrices[g]
    }

    /// Traces at class representatives.
    pub fn character(&self, classes: &ConjugacyClasses) -> ClassFunction {
        ClassFunction::new(classes.reps.iter().map(|&g| self.matrices[g].trace()).collect())
    }

    pub fn direct_sum(&self, other: &MatrixRep) -> MatrixRep {
        MatrixRep {
            modulus: self.modulus,
            dim: self.dim + other.dim,
            matrices: self.matrices.iter().zip(&other.matrices).map(|(a, b)| a.direct_sum(b)).collect(),
        }
    }

    /// Change of basis `g ↦ P⁻¹ ρ(g) P`. Panics if `P` is singular.
    pub fn conjugate(&self, p: &Mat) -> MatrixRep {
        let inv = p.inverse().expect("change of basis must be invertible");
        MatrixRep {
            modulus: self.modulus,
            dim: self.dim,
            matrices: self.matrices.iter().map(|m| inv.mul(&m.mul(p))).collect(),
        }
    }

    /// Action on the subspace spanned by the columns of `basis`, which must
    /// be stable and of full column rank.
    pub fn restrict_to(&self, basis: &Mat) -> Result<MatrixRep> {
        let matrices = self
            .matrices
            .iter()
            .map(|m| {
                basis
                    .solve_columns(&m.mul(basis))
                    .ok_or_else(|| Error::DimensionMismatch("subspace is not stable".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MatrixRep { modulus: self.modulus, dim: basis.cols(), matrices })
    }

    /// Elements acting as the identity.
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.matrices.len()).filter(|&g| self.matrices[g].is_identity()).collect()
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel() == [0]
    }
}

/// Representation convenience over a [`GroupContext`].
impl GroupContext {
    pub fn regular_rep(&self) -> MatrixRep {
        MatrixRep::regular(&self.group, self.field)
    }

    pub fn permutation_rep(&self) -> MatrixRep {
        MatrixRep::permutation(&self.group, self.field)
    }

    pub fn character_of(&self, rep: &MatrixRep) -> ClassFunction {
        rep.character(&self.classes)
    }
}

pub fn permutation_matrix(p: &Permutation, field: PrimeModulus) -> Mat {
    let n = p.degree();
    let mut m = Mat::zeros(field, n, n);
    for x in 0..n {
        m[(p.apply(x), x)] = 1 % field.p();
    }
    m
}

fn describe_word(group: &Group, k: usize, x: usize) -> String {
    let mut parts: Vec<String> = group.word(x).iter().map(|j| format!("s{j}")).collect();
    parts.push(format!("s{k}"));
    format!("{} (element {} then generator {k})", parts.join("·"), x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin;

    fn s3() -> GroupContext {
        GroupContext::new(builtin("S3").unwrap()).unwrap()
    }

    #[test]
    fn regular_and_permutation_characters() {
        let c = s3();
        assert_eq!(c.character_of(&c.regular_rep()).values, vec![6, 0, 0]);
        assert_eq!(c.character_of(&c.permutation_rep()).values, vec![3, 1, 0]);
        let triv = MatrixRep::trivial(&c.group, c.field, 1);
        assert_eq!(c.character_of(&triv), c.trivial());
        assert_eq!(c.regular_rep().validate(&c.group).unwrap(), Validation::Exhaustive);
        let c1 = GroupContext::new(builtin("C1").unwrap()).unwrap();
        assert!(c1.permutation_rep().matrix(0).is_identity());
        assert_eq!(c1.permutation_rep().dim, 1);
    }

    #[test]
    fn standard_rep_from_generators() {
        let c = s3();
        let f = c.field;
        let t = Mat::from_rows(f, &[vec![0, 1], vec![1, 0]]);
        let r = Mat::from_rows(f, &[vec![0, 6], vec![1, 6]]);
        let rep = MatrixRep::from_generators(&c.group, f, 2, &[t, r]).unwrap();
        assert_eq!(c.character_of(&rep).values, vec![2, 0, 6]);
    }

    #[test]
    fn rejects_non_homomorphisms() {
        let c = s3();
        let f = c.field;
        let t = Mat::from_rows(f, &[vec![0, 1], vec![1, 0]]);
        let bad = Mat::from_rows(f, &[vec![1, 1], vec![0, 1]]);
        let err = MatrixRep::from_generators(&c.group, f, 2, &[t.clone(), bad]).unwrap_err();
        assert!(matches!(err, Error::NotAHomomorphism { .. }));
        let singular = Mat::from_rows(f, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(
            MatrixRep::from_generators(&c.group, f, 2, &[t.clone(), singular]).unwrap_err(),
            Error::SingularMatrix(1)
        );
        assert!(matches!(
            MatrixRep::from_generators(&c.group, f, 2, &[t]),
            Err(Error::GeneratorCount { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn sampled_validation_for_large_groups() {
        let g = builtin("S5").unwrap();
        let f = crate::arith::choose_prime(&g);
        let rep = MatrixRep::permutation(&g, f);
        assert_eq!(rep.validate(&g).unwrap(), Validation::Sampled);
    }
}
