use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{hom_dim, intertwiners, isotypic_projector, MatrixRep};
use crate::arith::{Mat, PrimeModulus};
use crate::character::GroupContext;
use crate::error::{Error, Result};

const SPLIT_ATTEMPTS: usize = 500;

/// One explicit model per irreducible, cut out of the regular representation.
///
/// Starting from the isotypic component `V_i^{n_i}`, any non-scalar
/// `A ∈ End_G` with an eigenvalue `λ ∈ F_p` has a proper G-stable kernel
/// `ker(A − λ)`; restricting repeatedly reaches a single copy. Candidates are
/// the endomorphism basis in order, then seeded random combinations.
pub fn irreducible_models(ctx: &GroupContext) -> Result<Vec<MatrixRep>> {
    let reg = ctx.regular_rep();
    (0..ctx.irrep_count())
        .map(|i| {
            let basis = isotypic_projector(&reg, i, ctx).column_basis();
            let mut w = reg.restrict_to(&basis)?;
            let n = ctx.degree(i) as usize;
            let mut rng = ChaCha8Rng::seed_from_u64(i as u64);
            while w.dim > n {
                w = split_once(&w, ctx, &mut rng)?;
            }
            if ctx.character_of(&w) != *ctx.chi(i) || hom_dim(&w, &w, ctx)? != 1 {
                return Err(Error::Model(format!("model {i} does not realize its character")));
            }
            w.validate(&ctx.group)?;
            Ok(w)
        })
        .collect()
}

fn split_once(w: &MatrixRep, ctx: &GroupContext, rng: &mut ChaCha8Rng) -> Result<MatrixRep> {
    let f = ctx.field;
    let ends = intertwiners(w, w, &ctx.group);
    let mut candidates: Vec<Mat> = ends.clone();
    for _ in 0..SPLIT_ATTEMPTS {
        let mut a = Mat::zeros(f, w.dim, w.dim);
        for e in &ends {
            a.add_scaled(rng.gen_range(0..f.p()), e);
        }
        candidates.push(a);
    }
    for a in candidates.iter().filter(|a| !a.is_scalar()) {
        for lambda in 0..f.p() {
            let shifted = a.sub(&Mat::identity(f, w.dim).scale(lambda));
            let kernel = shifted.nullspace();
            if !kernel.is_empty() {
                let k = Mat::from_columns(f, w.dim, &kernel);
                return w.restrict_to(&k);
            }
        }
    }
    Err(Error::SplitFailure { dim: w.dim })
}

pub fn random_invertible(field: PrimeModulus, n: usize, rng: &mut impl Rng) -> Mat {
    loop {
        let m = Mat::from_fn(field, n, n, |_, _| rng.gen_range(0..field.p()));
        if m.det() != 0 {
            return m;
        }
    }
}

/// A random direct sum of the given models (at most `max_copies` of each,
/// never empty) in a random basis. Returns the rep and its multiplicities.
pub fn random_rep(models: &[MatrixRep], max_copies: u64, rng: &mut impl Rng) -> (MatrixRep, Vec<u64>) {
    let mut mults: Vec<u64> = models.iter().map(|_| rng.gen_range(0..=max_copies)).collect();
    if mults.iter().all(|&m| m == 0) {
        let k = rng.gen_range(0..models.len());
        mults[k] = 1;
    }
    let mut rep: Option<MatrixRep> = None;
    for (m, &count) in models.iter().zip(&mults) {
        for _ in 0..count {
            rep = Some(match rep {
                None => m.clone(),
                Some(r) => r.direct_sum(m),
            });
        }
    }
    let rep = rep.expect("at least one summand");
    let p = random_invertible(rep.modulus, rep.dim, rng);
    (rep.conjugate(&p), mults)
}
