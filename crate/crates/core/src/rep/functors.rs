use super::MatrixRep;
use crate::arith::Mat;
use crate::group::Group;
use crate::monomial::{subsets, MonomialTower};

/// `g ↦ ρ(g⁻¹)ᵀ` on the dual basis.
pub fn dual_rep(rep: &MatrixRep, group: &Group) -> MatrixRep {
    let matrices = (0..group.order()).map(|g| rep.matrices[group.inv(g)].transpose()).collect();
    MatrixRep { modulus: rep.modulus, dim: rep.dim, matrices }
}

/// Basis `e_a ⊗ f_b` ordered lexicographically in `(a, b)`.
pub fn tensor_rep(rep1: &MatrixRep, rep2: &MatrixRep) -> MatrixRep {
    MatrixRep {
        modulus: rep1.modulus,
        dim: rep1.dim * rep2.dim,
        matrices: rep1.matrices.iter().zip(&rep2.matrices).map(|(a, b)| a.kron(b)).collect(),
    }
}

/// Basis of monomials in the `e_a`, ordered lexicographically as multisets.
pub fn sym_power_rep(rep: &MatrixRep, k: usize) -> MatrixRep {
    let tower = MonomialTower::new(rep.dim, k);
    let matrices: Vec<Mat> = rep
        .matrices
        .iter()
        .map(|m| tower.substitution_powers(m).pop().expect("degree k present"))
        .collect();
    MatrixRep { modulus: rep.modulus, dim: tower.basis(k).len(), matrices }
}

/// Basis `e_{a_1} ∧ … ∧ e_{a_k}` over lexicographic subsets; entries are
/// `k × k` minors.
pub fn ext_power_rep(rep: &MatrixRep, k: usize) -> MatrixRep {
    let subs = subsets(rep.dim, k);
    let f = rep.modulus;
    let matrices = rep
        .matrices
        .iter()
        .map(|m| Mat::from_fn(f, subs.len(), subs.len(), |i, j| m.select(&subs[i], &subs[j]).det()))
        .collect();
    MatrixRep { modulus: f, dim: subs.len(), matrices }
}
