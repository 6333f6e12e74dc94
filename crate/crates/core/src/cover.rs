//! Polynomial functions on a faithful linear representation, studied degree
//! by degree as a representation of the group.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::arith::{limit_at_one, series_prefix, Mat, Poly, PolyMat, RatFunc, Scalar};
use crate::character::{lift_multiplicity, restrict_invariant_dim, tensor_multiplicities, GroupContext, TensorMultiplicities};
use crate::error::{Error, Result};
use crate::group::{all_subgroups, Subgroup};
use crate::monomial::{multiply, MonomialTower};
use crate::rep::{irreducible_models, isotypic_projector, MatrixRep};
use crate::report::VerificationOutcome;

/// Largest degree used on each side of the product checks.
pub const PRODUCT_DEGREE_CAP: usize = 6;

/// A validated faithful action on `n` coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearCoverAction {
    pub n: usize,
    pub gen_matrices: Vec<Mat>,
    pub faithful: bool,
    #[serde(skip)]
    pub rep: MatrixRep,
}

pub fn validate_action(ctx: &GroupContext, n: usize, gen_matrices: &[Mat]) -> Result<LinearCoverAction> {
    if n == 0 {
        return Err(Error::DimensionMismatch("an action needs at least one coordinate".into()));
    }
    let rep = MatrixRep::from_generators(&ctx.group, ctx.field, n, gen_matrices)?;
    if let Some(&g) = rep.kernel().iter().find(|&&g| g != 0) {
        return Err(Error::NotFaithful { element: g });
    }
    Ok(LinearCoverAction { n, gen_matrices: gen_matrices.to_vec(), faithful: true, rep })
}

/// Generator matrices of a named action: `perm` (or `perm<N>` with `N` the
/// permutation degree), `faithful` (first faithful irreducible) or
/// `reflection` (first faithful irreducible of degree 2).
pub fn builtin_action(ctx: &GroupContext, name: &str) -> Result<Vec<Mat>> {
    let gens = ctx.group.generator_indices();
    if let Some(rest) = name.strip_prefix("perm") {
        if !rest.is_empty() && rest.parse::<usize>().ok() != Some(ctx.group.degree()) {
            return Err(Error::UnknownBuiltin(format!("{name} for a group on {} points", ctx.group.degree())));
        }
        let perm = ctx.permutation_rep();
        return Ok(gens.iter().map(|&g| perm.matrices[g].clone()).collect());
    }
    let wanted = match name {
        "faithful" => None,
        "reflection" => Some(2),
        _ => return Err(Error::UnknownBuiltin(name.to_string())),
    };
    let models = irreducible_models(ctx)?;
    let model = models
        .iter()
        .find(|m| m.is_faithful() && wanted.is_none_or(|d| m.dim == d))
        .ok_or_else(|| Error::UnknownBuiltin(format!("{name} action for {}", ctx.group.name())))?;
    Ok(gens.iter().map(|&g| model.matrices[g].clone()).collect())
}

/// Homogeneous polynomials of degree `d`, with `(g·f)(x) = f(ρ(g)⁻¹x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedPiece {
    pub d: usize,
    pub monomials: Vec<Vec<u32>>,
    #[serde(skip)]
    pub action: MatrixRep,
}

/// Pieces of degree `0..=max_degree`.
pub fn degree_pieces(action: &LinearCoverAction, ctx: &GroupContext, max_degree: usize) -> Vec<GradedPiece> {
    let tower = MonomialTower::new(action.n, max_degree);
    let per_element: Vec<Vec<Mat>> = (0..ctx.order())
        .into_par_iter()
        .map(|g| tower.substitution_powers(&action.rep.matrices[ctx.group.inv(g)].transpose()))
        .collect();
    (0..=max_degree)
        .map(|d| GradedPiece {
            d,
            monomials: tower.basis(d).exponents().to_vec(),
            action: MatrixRep {
                modulus: ctx.field,
                dim: tower.basis(d).len(),
                matrices: per_element.iter().map(|v| v[d].clone()).collect(),
            },
        })
        .collect()
}

pub fn degree_piece(action: &LinearCoverAction, ctx: &GroupContext, d: usize) -> GradedPiece {
    degree_pieces(action, ctx, d).pop().expect("degree d present")
}

/// Which character values weight the determinant terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// `(1/|G|) Σ χ_i(g⁻¹) / det(1 − tρ(g)⁻¹)`
    InverseCharacter,
    /// `(1/|G|) Σ χ_i(g) / det(1 − tρ(g)⁻¹)`
    DirectCharacter,
}

/// `det(1 − tρ(g)⁻¹)` at each class representative.
fn class_determinants(action: &LinearCoverAction, ctx: &GroupContext) -> Vec<Poly> {
    let f = ctx.field;
    ctx.classes
        .reps
        .iter()
        .map(|&g| {
            let m = &action.rep.matrices[ctx.group.inv(g)];
            PolyMat::from_fn(f, action.n, action.n, |r, c| {
                let delta = u64::from(r == c);
                Poly::new(f, vec![delta, f.neg(m[(r, c)])])
            })
            .det()
        })
        .collect()
}

fn molien_sum(ctx: &GroupContext, dets: &[Poly], i: usize, orientation: Orientation) -> RatFunc {
    let f = ctx.field;
    let order_inv = f.inv(f.reduce(ctx.order() as u64));
    let chi = ctx.chi(i);
    let mut sum = RatFunc::zero(f);
    for (c, det) in dets.iter().enumerate() {
        let value = match orientation {
            Orientation::InverseCharacter => chi.values[ctx.classes.inverse_class[c]],
            Orientation::DirectCharacter => chi.values[c],
        };
        let weight = f.mul(order_inv, f.mul(f.reduce(ctx.classes.sizes[c] as u64), value));
        sum = sum.add(&RatFunc::new(Poly::constant(f, weight), det.clone()));
    }
    sum
}

/// Degree-by-degree data: pieces, isotypic projectors and exact multiplicities.
#[derive(Clone, Debug)]
pub struct GradedData {
    pub pieces: Vec<GradedPiece>,
    /// `projectors[d][i]`
    pub projectors: Vec<Vec<Mat>>,
    /// `multiplicities[d][i] = rank(P_i on B_d) / n_i`
    pub multiplicities: Vec<Vec<u64>>,
}

impl GradedData {
    pub fn new(action: &LinearCoverAction, ctx: &GroupContext, max_degree: usize) -> Result<Self> {
        let pieces = degree_pieces(action, ctx, max_degree);
        let per_degree: Vec<Result<(Vec<Mat>, Vec<u64>)>> = pieces
            .par_iter()
            .map(|piece| {
                let mut projectors = Vec::with_capacity(ctx.irrep_count());
                let mut mults = Vec::with_capacity(ctx.irrep_count());
                for i in 0..ctx.irrep_count() {
                    let p = isotypic_projector(&piece.action, i, ctx);
                    let rank = p.rank() as u64;
                    if !rank.is_multiple_of(ctx.degree(i)) {
                        return Err(Error::InconsistentMultiplicity {
                            index: i,
                            detail: format!("degree {} projector rank {rank}", piece.d),
                        });
                    }
                    mults.push(rank / ctx.degree(i));
                    projectors.push(p);
                }
                Ok((projectors, mults))
            })
            .collect();
        let mut projectors = Vec::with_capacity(pieces.len());
        let mut multiplicities = Vec::with_capacity(pieces.len());
        for r in per_degree {
            let (p, m) = r?;
            projectors.push(p);
            multiplicities.push(m);
        }
        Ok(GradedData { pieces, projectors, multiplicities })
    }

    pub fn max_degree(&self) -> usize {
        self.pieces.len() - 1
    }
}

/// The per-irreducible multiplicity series, with the orientation that
/// reproduces the projector multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MolienData {
    pub orientation: Orientation,
    pub series: Vec<RatFunc>,
}

/// Tries both orientations against `data`; residues are compared since the
/// series lives over F_p.
pub fn molien_data(action: &LinearCoverAction, ctx: &GroupContext, data: &GradedData) -> Result<MolienData> {
    let dets = class_determinants(action, ctx);
    let bound = data.max_degree();
    let mut first_bad = None;
    for orientation in [Orientation::InverseCharacter, Orientation::DirectCharacter] {
        let series: Vec<RatFunc> = (0..ctx.irrep_count()).map(|i| molien_sum(ctx, &dets, i, orientation)).collect();
        let mut agrees = true;
        for (i, s) in series.iter().enumerate() {
            let coeffs = series_prefix(s, bound)?;
            if let Some(d) = (0..=bound).find(|&d| coeffs[d] != ctx.field.reduce(data.multiplicities[d][i])) {
                first_bad.get_or_insert((i, d));
                agrees = false;
                break;
            }
        }
        if agrees {
            return Ok(MolienData { orientation, series });
        }
    }
    let (index, degree) = first_bad.expect("a mismatch was recorded");
    Err(Error::OrientationMismatch { index, degree })
}

/// `M_i` for one irreducible, cross-checked against projectors up to `bound`.
pub fn molien_multiplicity_series(
    action: &LinearCoverAction,
    i: usize,
    ctx: &GroupContext,
    bound: usize,
) -> Result<RatFunc> {
    let data = GradedData::new(action, ctx, bound)?;
    Ok(molien_data(action, ctx, &data)?.series.swap_remove(i))
}

/// `lim_{t→1} M_i(t) / M_0(t)`, each side after clearing `(1 − t)^n`.
pub fn generic_multiplicity(molien: &MolienData, i: usize, n: usize, ctx: &GroupContext) -> Result<u64> {
    let f = ctx.field;
    let num = limit_at_one(&molien.series[i], n)?;
    let den = limit_at_one(&molien.series[ctx.table.trivial_index()], n)?;
    if den == 0 {
        return Err(Error::ResidualPole { cleared: n });
    }
    lift_multiplicity(f.div(num, den), ctx.order() as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantsRow {
    pub d: usize,
    pub fixed_dim: u64,
    pub predicted: u64,
    pub pass: bool,
}

/// For each degree, `dim (B_d)^H` from the averaging projector against
/// `Σ_i m_{i,d} dim V_i^H`. The series coefficients are also required to
/// agree with the prediction mod p.
pub fn invariants_series_check(
    data: &GradedData,
    molien: &MolienData,
    h: &Subgroup,
    ctx: &GroupContext,
) -> Result<Vec<InvariantsRow>> {
    let f = ctx.field;
    let weights = (0..ctx.irrep_count())
        .map(|i| restrict_invariant_dim(ctx.chi(i), h, &ctx.classes, f))
        .collect::<Result<Vec<u64>>>()?;
    let bound = data.max_degree();
    let prefixes = molien.series.iter().map(|s| series_prefix(s, bound)).collect::<Result<Vec<_>>>()?;
    let w = f.inv(f.reduce(h.order() as u64));
    data.pieces
        .par_iter()
        .map(|piece| {
            let mut avg = Mat::zeros(f, piece.action.dim, piece.action.dim);
            for &g in &h.element_indices {
                avg.add_scaled(w, &piece.action.matrices[g]);
            }
            let fixed_dim = avg.rank() as u64;
            let predicted: u64 = weights.iter().zip(&data.multiplicities[piece.d]).map(|(a, m)| a * m).sum();
            let from_series = weights
                .iter()
                .zip(&prefixes)
                .fold(0, |acc, (&a, pre)| f.add(acc, f.mul(f.reduce(a), pre[piece.d])));
            let pass = fixed_dim == predicted && f.reduce(predicted) == from_series;
            Ok(InvariantsRow { d: piece.d, fixed_dim, predicted, pass })
        })
        .collect()
}

/// Span of `(e_i B_a)(e_j B_b)` inside `B_{a+b}` and its isotypic pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductCheck {
    pub i: usize,
    pub j: usize,
    pub a: usize,
    pub b: usize,
    pub span_dim: usize,
    /// Multiplicity of each irreducible in the span.
    pub pattern: Vec<u64>,
    pub pass: bool,
}

pub fn product_structure_check(
    data: &GradedData,
    tensor: &TensorMultiplicities,
    i: usize,
    j: usize,
    a: usize,
    b: usize,
    ctx: &GroupContext,
) -> ProductCheck {
    let tower = MonomialTower::new(data.pieces[0].monomials[0].len(), a + b);
    product_check_with(data, tensor, &tower, i, j, a, b, ctx)
}

#[allow(clippy::too_many_arguments)]
fn product_check_with(
    data: &GradedData,
    tensor: &TensorMultiplicities,
    tower: &MonomialTower,
    i: usize,
    j: usize,
    a: usize,
    b: usize,
    ctx: &GroupContext,
) -> ProductCheck {
    let f = ctx.field;
    let left = data.projectors[a][i].column_basis().columns();
    let right = data.projectors[b][j].column_basis().columns();
    let table = tower.product_table(a, b);
    let target = tower.basis(a + b).len();
    let products: Vec<Vec<Scalar>> = left
        .iter()
        .flat_map(|u| right.iter().map(|v| multiply(f, &table, target, u, v)))
        .collect();
    let span = Mat::from_columns(f, target, &products).column_basis();
    let mut pass = true;
    let pattern = (0..ctx.irrep_count())
        .map(|l| {
            let projected = data.projectors[a + b][l].mul(&span);
            if tensor.get(i, j, l) == 0 && !projected.is_zero() {
                pass = false;
            }
            projected.rank() as u64 / ctx.degree(l)
        })
        .collect();
    ProductCheck { i, j, a, b, span_dim: span.cols(), pattern, pass }
}

/// All irreducible pairs at degrees `a, b ≤ cap`.
pub fn product_checks(data: &GradedData, tensor: &TensorMultiplicities, cap: usize, ctx: &GroupContext) -> Vec<ProductCheck> {
    let n = data.pieces[0].monomials[0].len();
    let cap = cap.min(data.max_degree() / 2);
    let tower = MonomialTower::new(n, 2 * cap);
    let r = ctx.irrep_count();
    let jobs: Vec<(usize, usize, usize, usize)> = (0..=cap)
        .flat_map(|a| (0..=cap).flat_map(move |b| (0..r).flat_map(move |i| (0..r).map(move |j| (i, j, a, b)))))
        .collect();
    jobs.par_iter()
        .map(|&(i, j, a, b)| product_check_with(data, tensor, &tower, i, j, a, b, ctx))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupInvariants {
    pub subgroup: Vec<usize>,
    pub rows: Vec<InvariantsRow>,
}

/// Everything computed about one cover.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoverReport {
    pub group: String,
    pub order: usize,
    pub modulus: u64,
    pub variables: usize,
    pub action: Vec<Mat>,
    pub max_degree: usize,
    pub degrees: Vec<u64>,
    pub orientation: Orientation,
    pub molien: Vec<RatFunc>,
    pub generic_multiplicities: Vec<u64>,
    /// `multiplicities[d][i]`
    pub multiplicities: Vec<Vec<u64>>,
    pub invariant_dims: Vec<u64>,
    pub invariants: Vec<SubgroupInvariants>,
    pub products: Vec<ProductCheck>,
    pub checks: Vec<VerificationOutcome>,
}

impl CoverReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn pushforward_report(action: &LinearCoverAction, ctx: &GroupContext, max_degree: usize) -> Result<CoverReport> {
    let data = GradedData::new(action, ctx, max_degree)?;
    let molien = molien_data(action, ctx, &data)?;
    let r = ctx.irrep_count();
    let generic = (0..r)
        .map(|i| generic_multiplicity(&molien, i, action.n, ctx))
        .collect::<Result<Vec<u64>>>()?;
    let tensor = tensor_multiplicities(ctx)?;
    let invariants = all_subgroups(&ctx.group)
        .iter()
        .map(|h| {
            Ok(SubgroupInvariants { subgroup: h.element_indices.clone(), rows: invariants_series_check(&data, &molien, h, ctx)? })
        })
        .collect::<Result<Vec<_>>>()?;
    let products = product_checks(&data, &tensor, PRODUCT_DEGREE_CAP, ctx);

    let mut checks = Vec::new();
    let dims_ok = data.pieces.iter().all(|p| {
        let total: u64 = (0..r).map(|i| data.multiplicities[p.d][i] * ctx.degree(i)).sum();
        total == p.action.dim as u64
    });
    checks.push(VerificationOutcome::new("cover.degree_dims", "B_d = ⊕ V_i^{m_i,d}", dims_ok, || {
        json!({ "multiplicities": data.multiplicities })
    }));
    let b0 = (0..r).all(|i| data.multiplicities[0][i] == u64::from(i == ctx.table.trivial_index()));
    checks.push(VerificationOutcome::new("cover.b0_trivial", "B_0 is trivial", b0, || {
        json!({ "degree_0": data.multiplicities[0] })
    }));
    let mut molien_bad = Vec::new();
    for (i, s) in molien.series.iter().enumerate() {
        let coeffs = series_prefix(s, max_degree)?;
        for (d, &c) in coeffs.iter().enumerate() {
            if c != ctx.field.reduce(data.multiplicities[d][i]) {
                molien_bad.push(json!({ "irrep": i, "degree": d, "series": c, "projector": data.multiplicities[d][i] }));
            }
        }
    }
    checks.push(VerificationOutcome::new(
        "cover.molien_projector",
        "series coefficients = projector multiplicities (mod p)",
        molien_bad.is_empty(),
        || json!(molien_bad),
    ));
    let degrees = ctx.table.degrees.clone();
    let generic_ok = generic == degrees;
    checks.push(VerificationOutcome::new("cover.generic_rank", "rank E_V = dim V", generic_ok, || {
        json!({ "generic": generic, "degrees": degrees })
    }));
    let bad_inv: Vec<_> = invariants
        .iter()
        .flat_map(|s| s.rows.iter().filter(|r| !r.pass).map(move |r| json!({ "subgroup": s.subgroup, "row": r })))
        .collect();
    checks.push(VerificationOutcome::new(
        "cover.invariants",
        "dim (B_d)^H = Σ m_i,d dim V_i^H",
        bad_inv.is_empty(),
        || json!(bad_inv),
    ));
    let bad_prod: Vec<&ProductCheck> = products.iter().filter(|p| !p.pass).collect();
    checks.push(VerificationOutcome::new(
        "cover.products",
        "(e_i B)(e_j B) ⊆ ⊕_{V_l ⊂ V_i⊗V_j} e_l B",
        bad_prod.is_empty(),
        || json!(bad_prod),
    ));

    Ok(CoverReport {
        group: ctx.group.name().to_string(),
        order: ctx.order(),
        modulus: ctx.field.p(),
        variables: action.n,
        action: action.gen_matrices.clone(),
        max_degree,
        degrees: ctx.table.degrees.clone(),
        orientation: molien.orientation,
        molien: molien.series.clone(),
        generic_multiplicities: generic,
        invariant_dims: data.multiplicities.iter().map(|m| m[ctx.table.trivial_index()]).collect(),
        multiplicities: data.multiplicities,
        invariants,
        products,
        checks,
    })
}
