use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use isotypic::arith::Mat;
use isotypic::character::{char_ext_power, char_sym_power, GroupContext};
use isotypic::group::builtin;
use isotypic::monomial::binomial;
use isotypic::rep::{
    acts_by_scalar_on_linear_components, decompose, ext_power_rep, hom_dim, intertwiners, irreducible_models,
    random_rep, strip_multiplicity_map, sym_power_rep, MatrixRep,
};

const GROUPS: [&str; 7] = ["C3", "C4", "S3", "D4", "Q8", "A4", "C6"];

fn setup(g: usize) -> (GroupContext, Vec<MatrixRep>) {
    let ctx = GroupContext::new(builtin(GROUPS[g]).unwrap()).unwrap();
    let models = irreducible_models(&ctx).unwrap();
    (ctx, models)
}

fn tensor_identity(rep: &MatrixRep, f: usize) -> MatrixRep {
    let ident = Mat::identity(rep.modulus, f);
    MatrixRep { modulus: rep.modulus, dim: rep.dim * f, matrices: rep.matrices.iter().map(|m| m.kron(&ident)).collect() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn type_recovers_construction(g in 0..GROUPS.len(), seed: u64) {
        let (ctx, models) = setup(g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (rep, mults) = random_rep(&models, 2, &mut rng);
        let (dec, ty) = decompose(&rep, &ctx).unwrap();
        prop_assert_eq!(&ty.multiplicities, &mults);
        prop_assert_eq!(ty.dim(&ctx) as usize, rep.dim);
        let dims: usize = dec.dims().iter().sum();
        prop_assert_eq!(dims, rep.dim);
    }

    #[test]
    fn hom_dim_is_sum_of_products(g in 0..GROUPS.len(), seed: u64) {
        let (ctx, models) = setup(g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, ma) = random_rep(&models, 2, &mut rng);
        let (b, mb) = random_rep(&models, 2, &mut rng);
        let expected: u64 = ma.iter().zip(&mb).map(|(x, y)| x * y).sum();
        prop_assert_eq!(hom_dim(&a, &b, &ctx).unwrap() as u64, expected);
        prop_assert_eq!(hom_dim(&b, &a, &ctx).unwrap() as u64, expected);
    }

    #[test]
    fn linear_components_act_by_scalars(g in 0..GROUPS.len(), seed: u64) {
        let (ctx, models) = setup(g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (rep, _) = random_rep(&models, 3, &mut rng);
        prop_assert!(acts_by_scalar_on_linear_components(&rep, &ctx).unwrap());
    }

    #[test]
    fn power_functors_match_characters(g in 0..GROUPS.len(), seed: u64, k in 2usize..4) {
        let (ctx, models) = setup(g);
        let f = ctx.field;
        prop_assume!((k as u64) < f.p());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (rep, _) = random_rep(&models, 1, &mut rng);
        let sym = sym_power_rep(&rep, k);
        let ext = ext_power_rep(&rep, k);
        prop_assert_eq!(sym.dim, binomial(rep.dim + k - 1, k));
        prop_assert_eq!(ext.dim, binomial(rep.dim, k));
        let chi = ctx.character_of(&rep);
        prop_assert_eq!(ctx.character_of(&sym), char_sym_power(&chi, k, &ctx.group, &ctx.classes, f).unwrap());
        prop_assert_eq!(ctx.character_of(&ext), char_ext_power(&chi, k, &ctx.group, &ctx.classes, f).unwrap());
    }

    #[test]
    fn multiplicity_maps_strip(g in 0..GROUPS.len(), seed: u64, f1 in 1usize..4, f2 in 1usize..4) {
        let (ctx, models) = setup(g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = rng.gen_range(0..models.len());
        let model = &models[i];
        let n = model.dim;
        let src = tensor_identity(model, f1);
        let dst = tensor_identity(model, f2);
        let basis = intertwiners(&src, &dst, &ctx.group);
        prop_assert_eq!(basis.len(), f1 * f2);
        let mut phi = Mat::zeros(ctx.field, n * f2, n * f1);
        for t in &basis {
            phi.add_scaled(rng.gen_range(0..ctx.field.p()), t);
        }
        let s = strip_multiplicity_map(&phi, n).unwrap();
        prop_assert_eq!(phi.rank(), n * s.rank());
        prop_assert_eq!(phi.rank() == n * f1, s.rank() == f1);
    }
}
