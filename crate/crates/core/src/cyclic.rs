//! Univariate cyclic covers `x ↦ y = xⁿ` with the generator acting by `x ↦ ζx`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::arith::{choose_prime, Mat, Poly, PolyMat, PrimeModulus, Scalar};
use crate::character::{restrict_invariant_dim, GroupContext};
use crate::error::{Error, Result};
use crate::group::{builtin, subgroup_closure};
use crate::report::VerificationOutcome;

pub const NORMAL_BASIS_ATTEMPTS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Downstairs ring `F_p[y]`; ramified over `y = 0`.
    Polynomial,
    /// Downstairs ring `F_p[y, 1/y]`; unramified.
    Laurent,
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "polynomial" => Ok(Variant::Polynomial),
            "laurent" => Ok(Variant::Laurent),
            _ => Err(Error::Parse(format!("unknown variant {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CyclicCoverModel {
    pub n: usize,
    pub modulus: PrimeModulus,
    pub zeta: Scalar,
    pub variant: Variant,
    pub ctx: GroupContext,
}

impl CyclicCoverModel {
    /// Index of `g^k` in the group's element order.
    pub fn power(&self, k: usize) -> usize {
        match self.ctx.group.generator_indices().first() {
            Some(&g) => self.ctx.group.pow(g, k % self.n),
            None => 0,
        }
    }

    /// `ζ^e` for a possibly negative exponent.
    fn zeta_pow(&self, e: i64) -> Scalar {
        self.modulus.pow(self.zeta, e.rem_euclid(self.n as i64) as u64)
    }
}

pub fn build_cyclic(n: usize, variant: Variant) -> Result<CyclicCoverModel> {
    if n == 0 {
        return Err(Error::Parse("cover degree must be at least 1".into()));
    }
    let group = builtin(&format!("C{n}"))?;
    let modulus = choose_prime(&group);
    let zeta = modulus.root_of_unity(n as u64);
    let ctx = GroupContext::with_prime(group, modulus.p())?;
    Ok(CyclicCoverModel { n, modulus, zeta, variant, ctx })
}

/// The summand `A·x^power`, on which the generator acts by `weight = ζ^power`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PushforwardComponent {
    pub power: usize,
    pub weight: Scalar,
    pub irrep: usize,
    pub rank: usize,
}

/// Matches each `A·x^j` with the linear character taking the generator to `ζ^j`,
/// then checks every monomial of degree `≤ 4n` lies in exactly one summand
/// with the right weight.
pub fn decompose_pushforward(model: &CyclicCoverModel) -> Result<Vec<PushforwardComponent>> {
    let ctx = &model.ctx;
    let g = model.power(1);
    let mut comps = Vec::with_capacity(model.n);
    for j in 0..model.n {
        let weight = model.zeta_pow(j as i64);
        let irrep = (0..ctx.irrep_count())
            .find(|&k| ctx.degree(k) == 1 && ctx.at(ctx.chi(k), g) == weight)
            .ok_or_else(|| Error::Model(format!("no linear character with value {weight}")))?;
        comps.push(PushforwardComponent { power: j, weight, irrep, rank: 1 });
    }
    let mut seen: Vec<usize> = comps.iter().map(|c| c.irrep).collect();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != model.n {
        return Err(Error::Model("two summands share a character".into()));
    }
    for m in 0..=4 * model.n {
        let weight = model.modulus.pow(model.zeta, m as u64);
        let owners: Vec<&PushforwardComponent> = comps.iter().filter(|c| c.power == m % model.n).collect();
        if owners.len() != 1 || owners[0].weight != weight {
            return Err(Error::Model(format!("x^{m} is not in a unique summand of weight {weight}")));
        }
    }
    Ok(comps)
}

/// Powers `j` with `A·x^j` fixed by `H = ⟨g^m⟩`, checked against the
/// description `j ≡ 0 mod n/m` and against `Σ_k dim V_k^H`.
pub fn intermediate_fixed_ring(model: &CyclicCoverModel, m: usize) -> Result<Vec<usize>> {
    if m == 0 || !model.n.is_multiple_of(m) {
        return Err(Error::Parse(format!("{m} does not divide {}", model.n)));
    }
    let comps = decompose_pushforward(model)?;
    let fixed: Vec<usize> = comps
        .iter()
        .filter(|c| model.modulus.pow(c.weight, m as u64) == 1)
        .map(|c| c.power)
        .collect();
    let step = model.n / m;
    let expected: Vec<usize> = (0..model.n).step_by(step).collect();
    let h = subgroup_closure(&model.ctx.group, &[model.power(m)]);
    let mut by_characters = 0;
    for c in &comps {
        by_characters += restrict_invariant_dim(model.ctx.chi(c.irrep), &h, &model.ctx.classes, model.modulus)?;
    }
    if fixed != expected || by_characters != fixed.len() as u64 {
        return Err(Error::DimensionMismatch(format!(
            "fixed summands {fixed:?}, expected {expected:?}, characters give {by_characters}"
        )));
    }
    Ok(fixed)
}

/// Source column of `x^i ⊗ x^j`.
pub fn source_index(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

/// Target row of the `x^l` coordinate in the `g^k` summand.
pub fn target_index(n: usize, k: usize, l: usize) -> usize {
    k * n + l
}

/// `φ(m ⊗ b) = (m · g⁻¹b)_g` on `x^i ⊗ x^j`: the `g^k` summand receives
/// `ζ^{−kj} x^{i+j}`, and `x^{i+j} = y·x^{i+j−n}` once `i + j ≥ n`.
pub fn phi_matrix(model: &CyclicCoverModel) -> PolyMat {
    let n = model.n;
    let f = model.modulus;
    let mut m = PolyMat::zeros(f, n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let wrap = usize::from(i + j >= n);
            for k in 0..n {
                let c = model.zeta_pow(-((k * j) as i64));
                m[(target_index(n, k, (i + j) % n), source_index(n, i, j))] = Poly::monomial(f, c, wrap);
            }
        }
    }
    m
}

pub fn phi_det(model: &CyclicCoverModel) -> Poly {
    phi_matrix(model).det()
}

/// Multiplication by `x` on `B = ⊕ A·x^l`.
fn times_x(f: PrimeModulus, n: usize) -> PolyMat {
    PolyMat::from_fn(f, n, n, |r, c| {
        if (c + 1) % n == r {
            Poly::monomial(f, 1, usize::from(c + 1 == n))
        } else {
            Poly::zero(f)
        }
    })
}

fn poly_identity(f: PrimeModulus, n: usize) -> PolyMat {
    PolyMat::from_fn(f, n, n, |r, c| if r == c { Poly::one(f) } else { Poly::zero(f) })
}

fn poly_kron(a: &PolyMat, b: &PolyMat) -> PolyMat {
    PolyMat::from_fn(a.field(), a.rows() * b.rows(), a.cols() * b.cols(), |r, c| {
        &a[(r / b.rows(), c / b.cols())] * &b[(r % b.rows(), c % b.cols())]
    })
}

/// Equivariance of `φ`: for every `h = g^s`, translating the target summands
/// (`g^k ↦ g^{k+s}`) after `φ` equals `φ` after `m ⊗ a ↦ m ⊗ h(a)`; and `φ`
/// is linear for `B` acting on the left factor and diagonally on the target.
pub fn phi_equivariance(model: &CyclicCoverModel) -> bool {
    let n = model.n;
    let f = model.modulus;
    let phi = phi_matrix(model);
    let translations_ok = (0..n).all(|s| {
        let target = PolyMat::from_fn(f, n * n, n * n, |r, c| {
            let (k, l) = (c / n, c % n);
            if r == target_index(n, (k + s) % n, l) {
                Poly::one(f)
            } else {
                Poly::zero(f)
            }
        });
        let source = PolyMat::from_fn(f, n * n, n * n, |r, c| {
            if r == c {
                Poly::constant(f, model.zeta_pow((s * (c % n)) as i64))
            } else {
                Poly::zero(f)
            }
        });
        target.mul(&phi) == phi.mul(&source)
    });
    let x = times_x(f, n);
    let id = poly_identity(f, n);
    let left = poly_kron(&x, &id);
    let diagonal = poly_kron(&id, &x);
    translations_ok && phi.mul(&left) == diagonal.mul(&phi)
}

/// Element `Σ c_j x^j` of `B` whose translates form a basis over `Frac(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalBasisWitness {
    pub element: Vec<Scalar>,
    /// Candidates tried, including the successful one.
    pub attempts: usize,
    /// `columns k = g^k · element` in the basis `x^j`.
    pub translates: Mat,
    pub determinant: Scalar,
}

pub fn translate_matrix(model: &CyclicCoverModel, element: &[Scalar]) -> Mat {
    let f = model.modulus;
    Mat::from_fn(f, model.n, model.n, |j, k| f.mul(element[j], model.zeta_pow((k * j) as i64)))
}

/// Tries `1 + x`, then `1 + x + … + x^{n−1}`, then seeded random elements.
pub fn normal_basis_element(model: &CyclicCoverModel, seed: u64) -> Result<NormalBasisWitness> {
    let n = model.n;
    let mut fixed: Vec<Vec<Scalar>> = Vec::new();
    if n >= 2 {
        let mut v = vec![0; n];
        v[0] = 1;
        v[1] = 1;
        fixed.push(v);
    }
    fixed.push(vec![1 % model.modulus.p(); n]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = model.modulus.p();
    let mut candidates = fixed.into_iter().chain(std::iter::repeat_with(move || (0..n).map(|_| rng.gen_range(0..p)).collect()));
    for attempt in 1..=NORMAL_BASIS_ATTEMPTS {
        let element = candidates.next().expect("endless candidates");
        let translates = translate_matrix(model, &element);
        let determinant = translates.det();
        if determinant != 0 {
            return Ok(NormalBasisWitness { element, attempts: attempt, translates, determinant });
        }
    }
    Err(Error::SearchExhausted { tried: NORMAL_BASIS_ATTEMPTS })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CyclicReport {
    pub n: usize,
    pub modulus: u64,
    pub zeta: Scalar,
    pub variant: Variant,
    pub components: Vec<PushforwardComponent>,
    /// `(m, powers fixed by ⟨g^m⟩)` for each divisor `m` of `n`.
    pub fixed_rings: Vec<(usize, Vec<usize>)>,
    pub phi: PolyMat,
    pub det: Poly,
    pub det_y_power: Option<usize>,
    pub elementary_divisors: Vec<Poly>,
    pub normal_basis: NormalBasisWitness,
    pub limitations: Vec<String>,
    pub checks: Vec<VerificationOutcome>,
}

impl CyclicReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// `Some(k)` when `p = c·y^k` with `c ≠ 0`.
pub fn monomial_power(p: &Poly) -> Option<usize> {
    if p.is_monomial() {
        p.degree()
    } else {
        None
    }
}

pub fn cyclic_report(model: &CyclicCoverModel, seed: u64) -> Result<CyclicReport> {
    let n = model.n;
    let f = model.modulus;
    let mut checks = Vec::new();

    let zeta_ok = f.pow(model.zeta, n as u64) == 1 && (1..n).all(|m| f.pow(model.zeta, m as u64) != 1);
    checks.push(VerificationOutcome::new("cyclic.zeta", "ζ has order n", zeta_ok, || json!({ "zeta": model.zeta })));

    let components = decompose_pushforward(model)?;
    checks.push(VerificationOutcome::new(
        "cyclic.components",
        "B = ⊕ A·x^j, rank E_χ = 1 = dim χ",
        components.iter().all(|c| c.rank as u64 == model.ctx.degree(c.irrep)),
        || json!(components),
    ));

    let divisors: Vec<usize> = (1..=n).filter(|m| n.is_multiple_of(*m)).collect();
    let fixed_rings = divisors
        .iter()
        .map(|&m| Ok((m, intermediate_fixed_ring(model, m)?)))
        .collect::<Result<Vec<_>>>()?;

    let phi = phi_matrix(model);
    let det = phi.det();
    let det_y_power = monomial_power(&det);
    let det_ok = match (model.variant, det_y_power) {
        (_, None) => false,
        (Variant::Polynomial, Some(k)) => (n >= 2) == (k >= 1),
        (Variant::Laurent, Some(_)) => true,
    };
    let anchor = match model.variant {
        Variant::Polynomial => "det φ = unit·y^k, k ≥ 1 exactly when ramified",
        Variant::Laurent => "φ is an isomorphism when unramified",
    };
    checks.push(VerificationOutcome::new("cyclic.phi_det", anchor, det_ok, || json!({ "det": det })));

    let elementary_divisors = phi.elementary_divisors();
    let support_ok = elementary_divisors.iter().all(|d| monomial_power(d).is_some() && d.leading() == 1);
    checks.push(VerificationOutcome::new(
        "cyclic.cokernel_support",
        "coker φ is supported over y = 0",
        support_ok,
        || json!({ "elementary_divisors": elementary_divisors }),
    ));

    checks.push(VerificationOutcome::new(
        "cyclic.equivariance",
        "φ commutes with both group actions and the B-module structure",
        phi_equivariance(model),
        || json!({ "n": n }),
    ));

    let normal_basis = normal_basis_element(model, seed)?;
    checks.push(VerificationOutcome::new(
        "cyclic.normal_basis",
        "translates of one element form a basis",
        normal_basis.determinant != 0,
        || json!(normal_basis),
    ));

    Ok(CyclicReport {
        n,
        modulus: f.p(),
        zeta: model.zeta,
        variant: model.variant,
        components,
        fixed_rings,
        phi,
        det,
        det_y_power,
        elementary_divisors,
        normal_basis,
        limitations: vec!["only cyclic groups are modeled; non-cyclic unramified covers are not covered".into()],
        checks,
    })
}
