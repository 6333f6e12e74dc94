//! Irreducible characters over F_p, central idempotents, and the character
//! level functors (dual, tensor, symmetric and exterior powers, restriction).

use serde::Serialize;

use crate::arith::{choose_prime, Mat, PrimeModulus, Scalar};
use crate::error::{Error, Result};
use crate::group::{power_class_map, ConjugacyClasses, Group, Permutation, Subgroup};

/// A class function, one value per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ClassFunction {
    pub values: Vec<Scalar>,
}

impl ClassFunction {
    pub fn new(values: Vec<Scalar>) -> Self {
        ClassFunction { values }
    }

    pub fn constant(classes: usize, c: Scalar) -> Self {
        ClassFunction { values: vec![c; classes] }
    }

    /// Value at the identity class.
    pub fn degree(&self) -> Scalar {
        self.values[0]
    }

    pub fn add(&self, other: &ClassFunction, field: PrimeModulus) -> ClassFunction {
        ClassFunction::new(self.values.iter().zip(&other.values).map(|(&a, &b)| field.add(a, b)).collect())
    }

    pub fn scale(&self, c: Scalar, field: PrimeModulus) -> ClassFunction {
        ClassFunction::new(self.values.iter().map(|&a| field.mul(a, c)).collect())
    }
}

/// The regular character: `|G|` at the identity, zero elsewhere.
pub fn regular_character(group: &Group, classes: &ConjugacyClasses, field: PrimeModulus) -> ClassFunction {
    let mut v = vec![0; classes.count()];
    v[0] = field.reduce(group.order() as u64);
    ClassFunction::new(v)
}

/// Irreducible characters of a group over a splitting prime field.
///
/// Row 0 is the trivial character; the remaining rows are sorted by degree,
/// then lexicographically by their values in `[0, p)`.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterTable {
    pub modulus: PrimeModulus,
    pub class_sizes: Vec<usize>,
    pub class_reps: Vec<Permutation>,
    pub degrees: Vec<u64>,
    #[serde(rename = "values")]
    pub irreps: Vec<ClassFunction>,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.irreps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreps.is_empty()
    }

    pub fn trivial_index(&self) -> usize {
        0
    }

    pub fn irrep(&self, i: usize) -> &ClassFunction {
        &self.irreps[i]
    }
}

/// Everything the representation-level code needs about a group: the group,
/// its classes, a splitting prime and the character table over it.
#[derive(Clone, Debug)]
pub struct GroupContext {
    pub group: Group,
    pub classes: ConjugacyClasses,
    pub field: PrimeModulus,
    pub table: CharacterTable,
}

impl GroupContext {
    /// Uses the smallest admissible prime.
    pub fn new(group: Group) -> Result<Self> {
        let field = choose_prime(&group);
        Self::with_modulus(group, field)
    }

    /// Validates an explicit prime for the group first.
    pub fn with_prime(group: Group, p: u64) -> Result<Self> {
        let field = PrimeModulus::for_group(p, &group)?;
        Self::with_modulus(group, field)
    }

    fn with_modulus(group: Group, field: PrimeModulus) -> Result<Self> {
        let classes = ConjugacyClasses::new(&group);
        let table = character_table(&group, &classes, field)?;
        Ok(GroupContext { group, classes, field, table })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn irrep_count(&self) -> usize {
        self.table.len()
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.table.degrees[i]
    }

    pub fn chi(&self, i: usize) -> &ClassFunction {
        &self.table.irreps[i]
    }

    /// Value of a class function at an element.
    pub fn at(&self, f: &ClassFunction, g: usize) -> Scalar {
        f.values[self.classes.class_of[g]]
    }

    pub fn inner_mult(&self, w: &ClassFunction, v: &ClassFunction) -> Scalar {
        inner_mult(w, v, &self.group, &self.classes, self.field)
    }

    /// `⟨w, v⟩` lifted to an integer no larger than `bound`.
    pub fn multiplicity(&self, w: &ClassFunction, v: &ClassFunction, bound: u64) -> Result<u64> {
        lift_multiplicity(self.inner_mult(w, v), bound)
    }

    pub fn trivial(&self) -> ClassFunction {
        ClassFunction::constant(self.classes.count(), 1 % self.field.p())
    }

    pub fn regular(&self) -> ClassFunction {
        regular_character(&self.group, &self.classes, self.field)
    }
}

/// Class-sum structure constants: `C_i C_j = Σ_k a[i][j][k] C_k`.
pub fn structure_constants(group: &Group, classes: &ConjugacyClasses) -> Vec<Vec<Vec<u64>>> {
    let r = classes.count();
    let members: Vec<Vec<usize>> = (0..r).map(|c| classes.members(c)).collect();
    let mut a = vec![vec![vec![0u64; r]; r]; r];
    for i in 0..r {
        for j in 0..r {
            for &x in &members[i] {
                for &y in &members[j] {
                    let z = group.mul(x, y);
                    let k = classes.class_of[z];
                    if z == classes.reps[k] {
                        a[i][j][k] += 1;
                    }
                }
            }
        }
    }
    a
}

/// Splits the class-function space into common eigenvectors of the class-sum
/// matrices, then rescales each eigenvector into an irreducible character.
pub fn character_table(
    group: &Group,
    classes: &ConjugacyClasses,
    field: PrimeModulus,
) -> Result<CharacterTable> {
    let r = classes.count();
    let a = structure_constants(group, classes);
    let mut spaces = vec![Mat::identity(field, r)];
    for i in 0..r {
        if spaces.iter().all(|s| s.cols() == 1) {
            break;
        }
        // (A_i)_{j,k} = a[i][j][k]; central characters are right eigenvectors
        let ai = Mat::from_fn(field, r, r, |j, k| a[i][j][k]);
        let mut next = Vec::with_capacity(r);
        for basis in spaces {
            if basis.cols() == 1 {
                next.push(basis);
                continue;
            }
            let image = ai.mul(&basis);
            let mut found = 0;
            for lambda in 0..field.p() {
                let shifted = image.sub(&basis.scale(lambda));
                let kernel = shifted.nullspace();
                if kernel.is_empty() {
                    continue;
                }
                found += kernel.len();
                let k = Mat::from_columns(field, basis.cols(), &kernel);
                next.push(basis.mul(&k));
                if found == basis.cols() {
                    break;
                }
            }
            if found != basis.cols() {
                return Err(Error::SplitFailure { dim: basis.cols() });
            }
        }
        spaces = next;
    }
    if let Some(s) = spaces.iter().find(|s| s.cols() > 1) {
        return Err(Error::SplitFailure { dim: s.cols() });
    }

    let order = group.order() as u64;
    let mut rows: Vec<(u64, ClassFunction)> = Vec::with_capacity(r);
    for s in &spaces {
        let w0 = s[(0, 0)];
        if w0 == 0 {
            return Err(Error::SplitFailure { dim: 1 });
        }
        let w: Vec<Scalar> = (0..r).map(|c| field.div(s[(c, 0)], w0)).collect();
        // χ(1)² · Σ_c ω_c ω_{c̄} / |c| = |G|
        let norm = (0..r).fold(0, |acc, c| {
            let term = field.div(field.mul(w[c], w[classes.inverse_class[c]]), classes.sizes[c] as u64);
            field.add(acc, term)
        });
        if norm == 0 {
            return Err(Error::SplitFailure { dim: 1 });
        }
        let target = field.div(field.reduce(order), norm);
        let degree = (1..=order)
            .take_while(|d| d * d <= order)
            .find(|&d| field.reduce(d * d) == target)
            .ok_or(Error::SplitFailure { dim: 1 })?;
        let values = (0..r)
            .map(|c| field.div(field.mul(w[c], degree), classes.sizes[c] as u64))
            .collect();
        rows.push((degree, ClassFunction::new(values)));
    }
    let one = 1 % field.p();
    rows.sort_by(|(da, a), (db, b)| {
        let ta = a.values.iter().all(|&v| v == one);
        let tb = b.values.iter().all(|&v| v == one);
        tb.cmp(&ta).then(da.cmp(db)).then_with(|| a.cmp(b))
    });
    Ok(CharacterTable {
        modulus: field,
        class_sizes: classes.sizes.clone(),
        class_reps: classes.reps.iter().map(|&g| group.element(g).clone()).collect(),
        degrees: rows.iter().map(|(d, _)| *d).collect(),
        irreps: rows.into_iter().map(|(_, c)| c).collect(),
    })
}

/// `(1/|G|) Σ_c |c| W(c) V(c⁻¹)`
pub fn inner_mult(
    w: &ClassFunction,
    v: &ClassFunction,
    group: &Group,
    classes: &ConjugacyClasses,
    field: PrimeModulus,
) -> Scalar {
    let sum = (0..classes.count()).fold(0, |acc, c| {
        let term = field.mul(
            field.reduce(classes.sizes[c] as u64),
            field.mul(w.values[c], v.values[classes.inverse_class[c]]),
        );
        field.add(acc, term)
    });
    field.div(sum, field.reduce(group.order() as u64))
}

/// Interprets a residue as a multiplicity, rejecting values above `bound`.
pub fn lift_multiplicity(value: Scalar, bound: u64) -> Result<u64> {
    if value > bound {
        Err(Error::NotAMultiplicity { value, bound })
    } else {
        Ok(value)
    }
}

pub fn char_dual(v: &ClassFunction, classes: &ConjugacyClasses) -> ClassFunction {
    ClassFunction::new(classes.inverse_class.iter().map(|&c| v.values[c]).collect())
}

pub fn char_tensor(v: &ClassFunction, w: &ClassFunction, field: PrimeModulus) -> ClassFunction {
    ClassFunction::new(v.values.iter().zip(&w.values).map(|(&a, &b)| field.mul(a, b)).collect())
}

fn check_power(k: usize, field: PrimeModulus) -> Result<()> {
    if k >= 2 && field.p() == 2 {
        return Err(Error::EvenCharacteristicHazard { k });
    }
    if k as u64 >= field.p() {
        return Err(Error::PowerExceedsCharacteristic { k, p: field.p() });
    }
    Ok(())
}

/// Newton recursion `k·e_k = Σ_{m=1}^{k} sign(m) · ψ_m · e_{k−m}` where
/// `ψ_m(g) = χ(g^m)`; `alternating` selects the exterior (signed) version.
fn newton_powers(
    v: &ClassFunction,
    k: usize,
    alternating: bool,
    group: &Group,
    classes: &ConjugacyClasses,
    field: PrimeModulus,
) -> Result<ClassFunction> {
    check_power(k, field)?;
    let r = classes.count();
    let psi: Vec<Vec<Scalar>> = (0..=k)
        .map(|m| power_class_map(group, classes, m).iter().map(|&c| v.values[c]).collect())
        .collect();
    let mut e: Vec<Vec<Scalar>> = vec![vec![1 % field.p(); r]];
    for j in 1..=k {
        let inv_j = field.inv(j as u64);
        let row = (0..r)
            .map(|c| {
                let mut acc = 0;
                for m in 1..=j {
                    let term = field.mul(psi[m][c], e[j - m][c]);
                    acc = if alternating && m % 2 == 0 { field.sub(acc, term) } else { field.add(acc, term) };
                }
                field.mul(acc, inv_j)
            })
            .collect();
        e.push(row);
    }
    Ok(ClassFunction::new(e.pop().expect("nonempty")))
}

pub fn char_sym_power(
    v: &ClassFunction,
    k: usize,
    group: &Group,
    classes: &ConjugacyClasses,
    field: PrimeModulus,
) -> Result<ClassFunction> {
    newton_powers(v, k, false, group, classes, field)
}

pub fn char_ext_power(
    v: &ClassFunction,
    k: usize,
    group: &Group,
    classes: &ConjugacyClasses,
    field: PrimeModulus,
) -> Result<ClassFunction> {
    newton_powers(v, k, true, group, classes, field)
}

/// `dim V^H = (1/|H|) Σ_{h∈H} χ_V(h)`, lifted to an integer.
pub fn restrict_invariant_dim(
    v: &ClassFunction,
    h: &Subgroup,
    classes: &ConjugacyClasses,
    field: PrimeModulus,
) -> Result<u64> {
    let sum = h
        .element_indices
        .iter()
        .fold(0, |acc, &g| field.add(acc, v.values[classes.class_of[g]]));
    let value = field.div(sum, field.reduce(h.order() as u64));
    lift_multiplicity(value, v.degree())
}

/// Element of the group algebra F_p[G], one coefficient per element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct GroupAlgebraElement {
    pub coeffs: Vec<Scalar>,
}

impl GroupAlgebraElement {
    pub fn zero(order: usize) -> Self {
        GroupAlgebraElement { coeffs: vec![0; order] }
    }

    pub fn basis(order: usize, g: usize, field: PrimeModulus) -> Self {
        let mut e = Self::zero(order);
        e.coeffs[g] = 1 % field.p();
        e
    }

    pub fn one(order: usize, field: PrimeModulus) -> Self {
        Self::basis(order, 0, field)
    }

    /// Convolution product `Σ_{g,h} a_g b_h (gh)`.
    pub fn convolve(&self, other: &Self, group: &Group, field: PrimeModulus) -> Self {
        let mut out = Self::zero(group.order());
        for (g, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (h, &b) in other.coeffs.iter().enumerate() {
                let gh = group.mul(g, h);
                out.coeffs[gh] = field.add(out.coeffs[gh], field.mul(a, b));
            }
        }
        out
    }

    pub fn add(&self, other: &Self, field: PrimeModulus) -> Self {
        GroupAlgebraElement {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| field.add(a, b)).collect(),
        }
    }
}

/// `e_i = (n_i/|G|) Σ_g χ_i(g⁻¹) g`
pub fn central_idempotents(
    table: &CharacterTable,
    group: &Group,
    classes: &ConjugacyClasses,
) -> Vec<GroupAlgebraElement> {
    let field = table.modulus;
    let order = field.reduce(group.order() as u64);
    table
        .irreps
        .iter()
        .zip(&table.degrees)
        .map(|(chi, &d)| {
            let scale = field.div(field.reduce(d), order);
            GroupAlgebraElement {
                coeffs: (0..group.order())
                    .map(|g| field.mul(scale, chi.values[classes.class_of[group.inv(g)]]))
                    .collect(),
            }
        })
        .collect()
}

/// First element `g` (in element order) on which irrep `i` is not scalar,
/// i.e. whose restriction to `⟨g⟩` has at least two distinct constituents.
pub fn splitting_element(ctx: &GroupContext, i: usize) -> Result<usize> {
    let degree = ctx.degree(i);
    let chi = ctx.chi(i);
    if degree < 2 {
        return Err(Error::NoSplittingElement { index: i, degree });
    }
    for g in 0..ctx.order() {
        if restricted_constituents(ctx, chi, g).iter().filter(|&&m| m != 0).count() >= 2 {
            return Ok(g);
        }
    }
    Err(Error::NoSplittingElement { index: i, degree })
}

/// Multiplicities of the linear characters `ψ_k(g^j) = ω^{jk}` of `⟨g⟩` in
/// the restriction of `chi`, where `ω` is the canonical root of unity of
/// order `|g|`.
pub fn restricted_constituents(ctx: &GroupContext, chi: &ClassFunction, g: usize) -> Vec<Scalar> {
    let field = ctx.field;
    let m = ctx.group.element_order(g);
    let omega = field.root_of_unity(m as u64);
    let values: Vec<Scalar> = (0..m).map(|j| ctx.at(chi, ctx.group.pow(g, j))).collect();
    let inv_m = field.inv(field.reduce(m as u64));
    (0..m)
        .map(|k| {
            let sum = (0..m).fold(0, |acc, j| {
                let w = field.pow(omega, ((m - (j * k) % m) % m) as u64);
                field.add(acc, field.mul(values[j], w))
            });
            field.mul(sum, inv_m)
        })
        .collect()
}

/// `n[i][j][l] = ⟨V_i ⊗ V_j, V_l⟩`
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct TensorMultiplicities {
    pub n: Vec<Vec<Vec<u64>>>,
}

impl TensorMultiplicities {
    pub fn get(&self, i: usize, j: usize, l: usize) -> u64 {
        self.n[i][j][l]
    }
}

/// Also checks `⟨V_j^∨ ⊗ V_l, V_i⟩ = n[i][j][l]` for every triple.
pub fn tensor_multiplicities(ctx: &GroupContext) -> Result<TensorMultiplicities> {
    let r = ctx.irrep_count();
    let mut n = vec![vec![vec![0u64; r]; r]; r];
    for i in 0..r {
        for j in 0..r {
            let prod = char_tensor(ctx.chi(i), ctx.chi(j), ctx.field);
            let bound = ctx.degree(i) * ctx.degree(j);
            for l in 0..r {
                let m = ctx.multiplicity(&prod, ctx.chi(l), bound)?;
                let other = char_tensor(&char_dual(ctx.chi(j), &ctx.classes), ctx.chi(l), ctx.field);
                let check = ctx.inner_mult(&other, ctx.chi(i));
                if check != m {
                    return Err(Error::InconsistentMultiplicity {
                        index: l,
                        detail: format!("<V{j}* V{l}, V{i}> = {check} but <V{i} V{j}, V{l}> = {m}"),
                    });
                }
                n[i][j][l] = m;
            }
        }
    }
    Ok(TensorMultiplicities { n })
}

/// Exact orthogonality of rows: `⟨χ_i, χ_j⟩ = δ_ij`.
pub fn rows_orthonormal(ctx: &GroupContext) -> bool {
    let r = ctx.irrep_count();
    (0..r).all(|i| (0..r).all(|j| ctx.inner_mult(ctx.chi(i), ctx.chi(j)) == u64::from(i == j)))
}

/// Exact column orthogonality: `Σ_i χ_i(c) χ_i(c'⁻¹) = δ_{cc'} |G|/|c|`.
pub fn columns_orthogonal(ctx: &GroupContext) -> bool {
    let f = ctx.field;
    let cl = &ctx.classes;
    let r = cl.count();
    (0..r).all(|c| {
        (0..r).all(|c2| {
            let sum = ctx.table.irreps.iter().fold(0, |acc, chi| {
                f.add(acc, f.mul(chi.values[c], chi.values[cl.inverse_class[c2]]))
            });
            let expected = if c == c2 { f.reduce((ctx.order() / cl.sizes[c]) as u64) } else { 0 };
            sum == expected
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin, subgroup_closure};

    fn ctx(name: &str) -> GroupContext {
        GroupContext::new(builtin(name).unwrap()).unwrap()
    }

    /// S3 classes in class-index order are (id, transposition, 3-cycle).
    fn s3() -> GroupContext {
        let c = ctx("S3");
        assert_eq!(c.classes.sizes, vec![1, 3, 2]);
        c
    }

    #[test]
    fn structure_constants_s3() {
        let c = s3();
        let a = structure_constants(&c.group, &c.classes);
        assert_eq!(a[1][1], vec![3, 0, 3]);
        for j in 0..3 {
            for k in 0..3 {
                assert_eq!(a[0][j][k], u64::from(j == k));
            }
        }
    }

    #[test]
    fn structure_constants_c4() {
        let c = ctx("C4");
        let a = structure_constants(&c.group, &c.classes);
        let g = c.classes.class_of[c.group.generator_indices()[0]];
        let g2 = c.classes.class_of[c.group.pow(c.group.generator_indices()[0], 2)];
        for k in 0..4 {
            assert_eq!(a[g][g][k], u64::from(k == g2));
        }
    }

    #[test]
    fn small_tables() {
        let c2 = GroupContext::with_prime(builtin("C2").unwrap(), 3).unwrap();
        assert_eq!(c2.table.irreps, vec![ClassFunction::new(vec![1, 1]), ClassFunction::new(vec![1, 2])]);
        let c1 = ctx("C1");
        assert_eq!(c1.table.irreps, vec![ClassFunction::new(vec![1])]);
        let s = s3();
        assert_eq!(s.field.p(), 7);
        assert_eq!(s.table.degrees, vec![1, 1, 2]);
        assert_eq!(s.table.irreps[2].values, vec![2, 0, 6]);
        assert_eq!(s.table.irreps[1].values, vec![1, 6, 1]);
    }

    #[test]
    fn degrees_of_test_groups() {
        for (name, degrees) in [
            ("C6", vec![1; 6]),
            ("D4", vec![1, 1, 1, 1, 2]),
            ("Q8", vec![1, 1, 1, 1, 2]),
            ("A4", vec![1, 1, 1, 3]),
            ("S4", vec![1, 1, 2, 3, 3]),
        ] {
            let c = ctx(name);
            assert_eq!(c.table.degrees, degrees, "{name}");
            assert!(rows_orthonormal(&c) && columns_orthogonal(&c), "{name}");
        }
    }

    #[test]
    fn regular_character_decomposes_by_degree() {
        let c = s3();
        for i in 0..3 {
            assert_eq!(c.inner_mult(&c.regular(), c.chi(i)), c.degree(i));
            assert_eq!(c.inner_mult(c.chi(i), c.chi(i)), 1);
        }
        let perm = ClassFunction::new(vec![3, 1, 0]);
        assert_eq!(c.inner_mult(&perm, &c.trivial()), 1);
    }

    #[test]
    fn idempotents_small() {
        let c2 = GroupContext::with_prime(builtin("C2").unwrap(), 3).unwrap();
        let e = central_idempotents(&c2.table, &c2.group, &c2.classes);
        assert_eq!(e[0].coeffs, vec![2, 2]);
        let c1 = ctx("C1");
        assert_eq!(central_idempotents(&c1.table, &c1.group, &c1.classes)[0].coeffs, vec![1]);
        let s = s3();
        let e = central_idempotents(&s.table, &s.group, &s.classes);
        assert_eq!(e[0].coeffs, vec![6; 6]);
        assert_eq!(e[0].convolve(&e[0], &s.group, s.field), e[0]);
    }

    #[test]
    fn exterior_square_of_permutation_character() {
        let c = s3();
        let perm = ClassFunction::new(vec![3, 1, 0]);
        let ext = char_ext_power(&perm, 2, &c.group, &c.classes, c.field).unwrap();
        assert_eq!(ext.values, vec![3, 6, 0]);
        let mults: Vec<u64> = (0..3).map(|i| c.inner_mult(&ext, c.chi(i))).collect();
        assert_eq!(mults, vec![0, 1, 1]);
        let s0 = char_sym_power(&perm, 0, &c.group, &c.classes, c.field).unwrap();
        assert_eq!(s0, c.trivial());
        assert_eq!(char_dual(c.chi(2), &c.classes), *c.chi(2));
    }

    #[test]
    fn symmetric_square_closed_form() {
        let c = ctx("D4");
        let f = c.field;
        let sq = power_class_map(&c.group, &c.classes, 2);
        for chi in &c.table.irreps {
            let s2 = char_sym_power(chi, 2, &c.group, &c.classes, f).unwrap();
            let l2 = char_ext_power(chi, 2, &c.group, &c.classes, f).unwrap();
            for cl in 0..c.classes.count() {
                let a = f.mul(chi.values[cl], chi.values[cl]);
                let b = chi.values[sq[cl]];
                assert_eq!(s2.values[cl], f.div(f.add(a, b), 2));
                assert_eq!(l2.values[cl], f.div(f.sub(a, b), 2));
            }
        }
    }

    #[test]
    fn power_hazard_in_characteristic_two() {
        let c1 = ctx("C1");
        let err = char_sym_power(c1.chi(0), 2, &c1.group, &c1.classes, c1.field).unwrap_err();
        assert_eq!(err, Error::EvenCharacteristicHazard { k: 2 });
    }

    #[test]
    fn invariant_dimensions() {
        let c = s3();
        let a3 = subgroup_closure(&c.group, &[c.group.generator_indices()[1]]);
        assert_eq!(restrict_invariant_dim(c.chi(2), &a3, &c.classes, c.field).unwrap(), 0);
        assert_eq!(restrict_invariant_dim(c.chi(1), &a3, &c.classes, c.field).unwrap(), 1);
        assert_eq!(restrict_invariant_dim(c.chi(2), &Subgroup::trivial(), &c.classes, c.field).unwrap(), 2);
    }

    #[test]
    fn splitting_elements() {
        let c = s3();
        let g = splitting_element(&c, 2).unwrap();
        assert_eq!(c.group.element_order(g), 2);
        let mults = restricted_constituents(&c, c.chi(2), g);
        assert_eq!(mults, vec![1, 1]);
        for name in ["Q8", "D4"] {
            let c = ctx(name);
            let g = splitting_element(&c, 4).unwrap();
            assert_eq!(c.group.element_order(g), 4, "{name}");
        }
        assert!(matches!(splitting_element(&c, 0), Err(Error::NoSplittingElement { .. })));
    }

    #[test]
    fn tensor_table_s3() {
        let c = s3();
        let n = tensor_multiplicities(&c).unwrap();
        assert_eq!(n.n[2][2], vec![1, 1, 1]);
        assert_eq!(n.n[1][1], vec![1, 0, 0]);
        for j in 0..3 {
            for l in 0..3 {
                assert_eq!(n.get(0, j, l), u64::from(j == l));
            }
        }
    }

    #[test]
    fn copies_tensor_dual_contain_trivial_s_times() {
        for name in ["S3", "Q8", "A4"] {
            let c = ctx(name);
            for i in 0..c.irrep_count() {
                let dual = char_dual(c.chi(i), &c.classes);
                for s in 1..=4u64 {
                    let copies = c.chi(i).scale(s, c.field);
                    let w = char_tensor(&copies, &dual, c.field);
                    assert_eq!(c.inner_mult(&w, &c.trivial()), s);
                }
            }
        }
    }
}
