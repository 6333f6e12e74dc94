//! Finite permutation groups with explicit multiplication tables.
//!
//! Elements are numbered in breadth-first discovery order starting from the
//! identity at index 0, applying generators in input order. Everything
//! downstream (idempotent coefficient vectors, report layouts) relies on
//! this numbering.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 5000;

/// A bijection of `{0, …, degree − 1}`. Composition is right-to-left:
/// `a.compose(b)` maps `x` to `a(b(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(Error::InvalidPermutation { images });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree).collect() }
    }

    /// Product of the given cycles on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            let distinct: BTreeSet<_> = cycle.iter().collect();
            if distinct.len() != cycle.len() || cycle.iter().any(|&x| x >= degree) {
                return Err(Error::Parse(format!("bad cycle {cycle:?}")));
            }
            // cycles compose right-to-left, like the permutations themselves
            let c = Permutation::cycle_images(degree, cycle);
            images = c.iter().map(|&x| images[x]).collect();
        }
        Permutation::new(images)
    }

    fn cycle_images(degree: usize, cycle: &[usize]) -> Vec<usize> {
        let mut images: Vec<usize> = (0..degree).collect();
        for (k, &x) in cycle.iter().enumerate() {
            images[x] = cycle[(k + 1) % cycle.len()];
        }
        images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

/// Cycle notation; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Parses one permutation in cycle notation, e.g. `(0 1)(2 3)` or `()`.
/// Points may be separated by spaces or commas.
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::Parse(format!("expected '(' in {text:?}")));
        };
        let Some(end) = body.find(')') else {
            return Err(Error::Parse(format!("unclosed cycle in {text:?}")));
        };
        let points = body[..end]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|e| Error::Parse(format!("{s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if points.len() > 1 {
            cycles.push(points);
        }
        rest = body[end + 1..].trim_start();
    }
    Ok(cycles)
}

/// Parses a generator file: one permutation per line in cycle notation.
/// Blank lines and `#` comments are ignored; the degree is one more than
/// the largest point mentioned.
pub fn parse_generators(text: &str) -> Result<Vec<Permutation>> {
    let lines: Vec<Vec<Vec<usize>>> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(parse_cycles)
        .collect::<Result<_>>()?;
    let degree = lines.iter().flatten().flatten().max().map_or(1, |&m| m + 1);
    lines.iter().map(|c| Permutation::from_cycles(degree, c)).collect()
}

/// Parses a multiplication table (row `a`, column `b` holds `a·b`, labels
/// `0..n`) and returns the left-regular permutations `x ↦ a·x`, one per row.
/// Checks that the table is a Latin square with identity and is associative.
pub fn parse_multiplication_table(text: &str) -> Result<Vec<Permutation>> {
    let rows: Vec<Vec<usize>> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad table entry {t:?}"))))
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<_>>()?;
    let n = rows.len();
    if n == 0 {
        return Err(Error::Parse("empty multiplication table".into()));
    }
    if let Some(k) = rows.iter().position(|r| r.len() != n) {
        return Err(Error::Parse(format!("table row {k} does not have {n} entries")));
    }
    let perms = rows.iter().map(|r| Permutation::new(r.clone())).collect::<Result<Vec<_>>>()?;
    let e = (0..n)
        .find(|&a| rows[a].iter().enumerate().all(|(x, &y)| x == y))
        .ok_or_else(|| Error::Parse("table has no identity row".into()))?;
    for b in 0..n {
        let column: BTreeSet<usize> = (0..n).map(|a| rows[a][b]).collect();
        if column.len() != n || rows[b][e] != b {
            return Err(Error::Parse(format!("table column {b} is not a permutation fixed by the identity")));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if rows[rows[a][b]][c] != rows[a][rows[b][c]] {
                    return Err(Error::Parse(format!("table is not associative at ({a}, {b}, {c})")));
                }
            }
        }
    }
    Ok(perms)
}

/// A finite group given by permutation generators, with its full Cayley table.
#[derive(Clone, Debug)]
pub struct Group {
    name: String,
    degree: usize,
    elements: Vec<Permutation>,
    mult: Vec<usize>,
    inv: Vec<usize>,
    generators: Vec<Permutation>,
    generator_indices: Vec<usize>,
    /// For each non-identity element, the element it was discovered from and
    /// the generator position applied: `elements[i] = gen ∘ elements[parent]`.
    parent: Vec<Option<(usize, usize)>>,
}

/// Closure of the generators under composition, breadth-first from the identity.
pub fn build_group(generators: &[Permutation], cap: usize) -> Result<Group> {
    let degree = generators.first().map_or(1, Permutation::degree);
    build_group_on(degree, generators, cap)
}

/// As [`build_group`], with the degree given explicitly (needed when there are
/// no generators).
pub fn build_group_on(degree: usize, generators: &[Permutation], cap: usize) -> Result<Group> {
    assert!(cap >= 1, "cap must be positive");
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
    }
    let mut elements = vec![Permutation::identity(degree)];
    let mut parent = vec![None];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(cur) = queue.pop_front() {
        for (k, g) in generators.iter().enumerate() {
            let next = g.compose(&elements[cur]);
            if index.contains_key(&next) {
                continue;
            }
            if elements.len() == cap {
                return Err(Error::ClosureExceedsCap { cap });
            }
            index.insert(next.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(next);
            parent.push(Some((cur, k)));
        }
    }
    let n = elements.len();
    let mut mult = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            mult[i * n + j] = index[&elements[i].compose(&elements[j])];
        }
    }
    let inv = elements.iter().map(|e| index[&e.inverse()]).collect();
    let generator_indices = generators.iter().map(|g| index[g]).collect();
    Ok(Group {
        name: "custom".into(),
        degree,
        elements,
        mult,
        inv,
        generators: generators.to_vec(),
        generator_indices,
        parent,
    })
}

impl Group {
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Number of points the permutations act on.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order() + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `h g h⁻¹`
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).map(|g| self.element_order(g)).fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Generator positions spelling the breadth-first word of `g`, in the
    /// order they are applied: `g = gens[w[last]] ∘ … ∘ gens[w[0]]`.
    pub fn word(&self, g: usize) -> Vec<usize> {
        let mut w = Vec::new();
        let mut cur = g;
        while let Some((par, k)) = self.parent[cur] {
            w.push(k);
            cur = par;
        }
        w.reverse();
        w
    }

    /// Breadth-first predecessor and generator position of each element.
    pub fn parent(&self, g: usize) -> Option<(usize, usize)> {
        self.parent[g]
    }

    pub fn check_associative_on(&self, a: usize, b: usize, c: usize) -> bool {
        self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Named groups: `S<n>`, `C<n>`, `D<n>` (order 2n, n ≥ 3), `Q8`, `A4`.
pub fn builtin(name: &str) -> Result<Group> {
    let bad = || Error::UnknownBuiltin(name.to_string());
    let gens = match name {
        "Q8" => quaternion_generators(),
        "A4" => vec![
            Permutation::from_cycles(4, &[vec![0, 1, 2]])?,
            Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]])?,
        ],
        _ => {
            let (kind, n) = name.split_at(1);
            let n: usize = n.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            let rotation = Permutation::new((0..n).map(|i| (i + 1) % n).collect())?;
            match kind {
                "C" if n == 1 => vec![],
                "C" => vec![rotation],
                "S" if n == 1 => vec![],
                "S" if n == 2 => vec![rotation],
                "S" => vec![Permutation::from_cycles(n, &[vec![0, 1]])?, rotation],
                "D" if n >= 3 => {
                    let reflection = Permutation::new((0..n).map(|i| (n - i) % n).collect())?;
                    vec![rotation, reflection]
                }
                _ => return Err(bad()),
            }
        }
    };
    let degree = gens.first().map_or(1, Permutation::degree);
    Ok(build_group_on(degree, &gens, DEFAULT_CAP)?.with_name(name))
}

/// Left-regular action of the quaternion group on its eight elements,
/// generated by left multiplication with `i` and `j`.
fn quaternion_generators() -> Vec<Permutation> {
    // element 2u + s stands for (−1)^s · unit[u], units 1, i, j, k
    fn unit_mul(a: usize, b: usize) -> (usize, usize) {
        // (sign, unit) of unit[a] · unit[b]
        const TABLE: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        TABLE[a][b]
    }
    let left = |x: usize| -> Permutation {
        let (ux, sx) = (x / 2, x % 2);
        let images = (0..8)
            .map(|y| {
                let (uy, sy) = (y / 2, y % 2);
                let (s, u) = unit_mul(ux, uy);
                2 * u + (s + sx + sy) % 2
            })
            .collect();
        Permutation::new(images).expect("quaternion left multiplication is a bijection")
    };
    vec![left(2), left(4)]
}

/// Partition of a group into conjugacy classes.
///
/// Classes are numbered by their least element index, so the identity class
/// is 0 and each representative is the least index in its class.
#[derive(Clone, Debug, Serialize)]
pub struct ConjugacyClasses {
    pub class_of: Vec<usize>,
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub inverse_class: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn new(group: &Group) -> Self {
        let n = group.order();
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            let mut size = 0;
            for h in 0..n {
                let x = group.conjugate(g, h);
                if class_of[x] == usize::MAX {
                    class_of[x] = c;
                    size += 1;
                }
            }
            reps.push(g);
            sizes.push(size);
        }
        let inverse_class = reps.iter().map(|&r| class_of[group.inv(r)]).collect();
        ConjugacyClasses { class_of, reps, sizes, inverse_class }
    }

    pub fn count(&self) -> usize {
        self.reps.len()
    }

    /// Element indices belonging to class `c`, ascending.
    pub fn members(&self, c: usize) -> Vec<usize> {
        (0..self.class_of.len()).filter(|&g| self.class_of[g] == c).collect()
    }
}

pub fn conjugacy_classes(group: &Group) -> ConjugacyClasses {
    ConjugacyClasses::new(group)
}

/// Class of `g^k` for each class of `g`.
pub fn power_class_map(group: &Group, classes: &ConjugacyClasses, k: usize) -> Vec<usize> {
    classes.reps.iter().map(|&r| classes.class_of[group.pow(r, k)]).collect()
}

/// A subgroup as a sorted list of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subgroup {
    pub element_indices: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.element_indices.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.element_indices.binary_search(&g).is_ok()
    }

    pub fn trivial() -> Self {
        Subgroup { element_indices: vec![0] }
    }

    pub fn whole(group: &Group) -> Self {
        Subgroup { element_indices: (0..group.order()).collect() }
    }

    /// Closure under the table, identity membership and Lagrange.
    pub fn is_valid_in(&self, group: &Group) -> bool {
        self.contains(0)
            && group.order().is_multiple_of(self.order())
            && self.element_indices.iter().all(|&a| {
                self.contains(group.inv(a))
                    && self.element_indices.iter().all(|&b| self.contains(group.mul(a, b)))
            })
    }
}

/// Smallest subgroup containing `gens`.
pub fn subgroup_closure(group: &Group, gens: &[usize]) -> Subgroup {
    let mut members = BTreeSet::from([0usize]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = group.mul(g, x);
            if members.insert(y) {
                queue.push_back(y);
            }
        }
    }
    Subgroup { element_indices: members.into_iter().collect() }
}

/// Every subgroup, sorted by order and then by element list.
pub fn all_subgroups(group: &Group) -> Vec<Subgroup> {
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    let mut frontier: Vec<Subgroup> = vec![Subgroup::trivial()];
    found.insert(Subgroup::trivial());
    while let Some(h) = frontier.pop() {
        for g in 0..group.order() {
            if h.contains(g) {
                continue;
            }
            let mut gens = h.element_indices.clone();
            gens.push(g);
            let k = subgroup_closure(group, &gens);
            if found.insert(k.clone()) {
                frontier.push(k);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
    out
}

/// Distinct cyclic subgroups, sorted like [`all_subgroups`].
pub fn cyclic_subgroups(group: &Group) -> Vec<Subgroup> {
    let set: BTreeSet<Subgroup> = (0..group.order()).map(|g| subgroup_closure(group, &[g])).collect();
    let mut out: Vec<Subgroup> = set.into_iter().collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cyc(degree: usize, text: &str) -> Permutation {
        Permutation::from_cycles(degree, &parse_cycles(text).unwrap()).unwrap()
    }

    #[test]
    fn multiplication_tables() {
        let klein = "0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n";
        let g = build_group(&parse_multiplication_table(klein).unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(ConjugacyClasses::new(&g).reps.len(), 4);
        assert!((0..4).all(|x| g.element_order(x) <= 2));
        // A Latin square with identity that is not associative (order 5 loop).
        let loop5 = "0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
        assert!(matches!(parse_multiplication_table(loop5), Err(Error::Parse(_))));
        assert!(parse_multiplication_table("0 1\n0 1\n").is_err());
    }

    /// All permutations of `n` points, by recursive insertion.
    fn all_perms(n: usize) -> BTreeSet<Permutation> {
        fn go(prefix: &mut Vec<usize>, n: usize, out: &mut BTreeSet<Permutation>) {
            if prefix.len() == n {
                out.insert(Permutation::new(prefix.clone()).unwrap());
                return;
            }
            for x in 0..n {
                if !prefix.contains(&x) {
                    prefix.push(x);
                    go(prefix, n, out);
                    prefix.pop();
                }
            }
        }
        let mut out = BTreeSet::new();
        go(&mut Vec::new(), n, &mut out);
        out
    }

    #[test]
    fn s3_from_cycles_is_all_of_sym3() {
        let g = build_group(&[cyc(3, "(0 1)"), cyc(3, "(0 1 2)")], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 6);
        let elems: BTreeSet<Permutation> = g.elements().iter().cloned().collect();
        assert_eq!(elems, all_perms(3));
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn trivial_and_dihedral() {
        let c1 = build_group_on(1, &[], DEFAULT_CAP).unwrap();
        assert_eq!(c1.order(), 1);
        let d4 = build_group(&[cyc(4, "(0 1 2 3)"), cyc(4, "(0 2)")], DEFAULT_CAP).unwrap();
        assert_eq!(d4.order(), 8);
        let distinct: BTreeSet<_> = d4.elements().iter().collect();
        assert_eq!(distinct.len(), 8);
        // every element preserves the 4-cycle's adjacency
        for e in d4.elements() {
            for x in 0..4 {
                let (a, b) = (e.apply(x), e.apply((x + 1) % 4));
                assert!((a + 1) % 4 == b || (b + 1) % 4 == a);
            }
        }
    }

    #[test]
    fn breadth_first_order_is_pinned() {
        let g = builtin("S3").unwrap();
        // identity, (0 1), (0 1 2), then products discovered from (0 1)
        assert_eq!(g.element(1), &cyc(3, "(0 1)"));
        assert_eq!(g.element(2), &cyc(3, "(0 1 2)"));
        assert_eq!(g.generator_indices(), &[1, 2]);
        for i in 0..g.order() {
            let w = g.word(i);
            let rebuilt = w.iter().fold(Permutation::identity(3), |acc, &k| g.generators()[k].compose(&acc));
            assert_eq!(&rebuilt, g.element(i));
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(Permutation::new(vec![0, 0, 1]), Err(Error::InvalidPermutation { .. })));
        let r = build_group(&[cyc(5, "(0 1)"), cyc(5, "(0 1 2 3 4)")], 50);
        assert_eq!(r.unwrap_err(), Error::ClosureExceedsCap { cap: 50 });
        assert!(builtin("X3").is_err());
        assert!(builtin("D2").is_err());
    }

    #[test]
    fn class_sizes() {
        let s3 = builtin("S3").unwrap();
        let cl = conjugacy_classes(&s3);
        let mut sizes = cl.sizes.clone();
        assert_eq!(cl.sizes[0], 1);
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(conjugacy_classes(&builtin("C1").unwrap()).sizes, vec![1]);
        let q8 = conjugacy_classes(&builtin("Q8").unwrap());
        let mut sizes = q8.sizes.clone();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn class_sizes_match_orbit_enumeration() {
        for name in ["S3", "D4", "Q8", "A4", "C6", "S4", "D5"] {
            let g = builtin(name).unwrap();
            let cl = conjugacy_classes(&g);
            for (c, &r) in cl.reps.iter().enumerate() {
                let orbit: BTreeSet<usize> = (0..g.order()).map(|h| g.conjugate(r, h)).collect();
                assert_eq!(orbit.len(), cl.sizes[c]);
                assert_eq!(*orbit.iter().next().unwrap(), r, "rep is the least index");
            }
        }
    }

    #[test]
    fn exponents() {
        assert_eq!(builtin("S3").unwrap().exponent(), 6);
        assert_eq!(builtin("C1").unwrap().exponent(), 1);
        assert_eq!(builtin("Q8").unwrap().exponent(), 4);
        assert_eq!(builtin("A4").unwrap().exponent(), 6);
        assert_eq!(builtin("D4").unwrap().exponent(), 4);
    }

    #[test]
    fn closures() {
        let s3 = builtin("S3").unwrap();
        let three_cycle = s3.generator_indices()[1];
        assert_eq!(subgroup_closure(&s3, &[three_cycle]).order(), 3);
        assert_eq!(subgroup_closure(&s3, &[]), Subgroup::trivial());
        let d4 = builtin("D4").unwrap();
        assert_eq!(subgroup_closure(&d4, d4.generator_indices()).order(), 8);
    }

    #[test]
    fn subgroup_counts() {
        // classical counts: S3 has 6 subgroups, D4 has 10, Q8 has 6, A4 has 10
        for (name, count) in [("S3", 6), ("D4", 10), ("Q8", 6), ("A4", 10), ("C6", 4), ("C1", 1)] {
            let g = builtin(name).unwrap();
            let subs = all_subgroups(&g);
            assert_eq!(subs.len(), count, "{name}");
            assert!(subs.iter().all(|h| h.is_valid_in(&g)));
        }
    }

    #[test]
    fn power_maps() {
        let s3 = builtin("S3").unwrap();
        let cl = conjugacy_classes(&s3);
        let sq = power_class_map(&s3, &cl, 2);
        let transp = cl.class_of[1];
        let three = cl.class_of[2];
        assert_eq!(sq[transp], 0);
        assert_eq!(sq[three], three);
        assert_eq!(power_class_map(&s3, &cl, 1), (0..cl.count()).collect::<Vec<_>>());
        let c4 = builtin("C4").unwrap();
        let cl4 = conjugacy_classes(&c4);
        let gen = c4.generator_indices()[0];
        let m = power_class_map(&c4, &cl4, 2);
        let square = cl4.class_of[c4.mul(gen, gen)];
        assert_eq!(m[cl4.class_of[gen]], square);
        assert_eq!(c4.element_order(cl4.reps[square]), 2);
    }

    #[test]
    fn table_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for name in ["S3", "D4", "Q8", "A4", "C6", "S4", "S5"] {
            let g = builtin(name).unwrap();
            let n = g.order();
            if n <= 64 {
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            assert!(g.check_associative_on(a, b, c));
                        }
                    }
                }
            } else {
                for _ in 0..10_000 {
                    let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                    assert!(g.check_associative_on(a, b, c));
                }
            }
            let cl = conjugacy_classes(&g);
            for a in 0..n {
                assert_eq!(g.mul(a, g.inv(a)), 0);
                for h in 0..n {
                    assert_eq!(cl.class_of[g.conjugate(a, h)], cl.class_of[a]);
                }
            }
            assert_eq!(cl.sizes.iter().sum::<usize>(), n);
            assert!(cl.sizes.iter().all(|s| n.is_multiple_of(*s)));
            assert_eq!(n % g.exponent(), 0);
            for c in 0..cl.count() {
                assert_eq!(cl.inverse_class[cl.inverse_class[c]], c);
            }
        }
    }

    #[test]
    fn parse_generator_file() {
        let gens = parse_generators("# S4\n(0 1)\n(0,1,2,3)\n\n").unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0].degree(), 4);
        assert_eq!(build_group(&gens, DEFAULT_CAP).unwrap().order(), 24);
        assert_eq!(cyc(4, "(0 1)(2 3)").to_string(), "(0 1)(2 3)");
        assert!(parse_cycles("(0 1").is_err());
        assert!(parse_cycles("0 1)").is_err());
    }

    #[test]
    fn builtin_orders() {
        for (name, order) in [("S1", 1), ("S2", 2), ("S4", 24), ("C5", 5), ("D3", 6), ("D6", 12), ("Q8", 8), ("A4", 12)] {
            assert_eq!(builtin(name).unwrap().order(), order, "{name}");
        }
        let q8 = builtin("Q8").unwrap();
        // a unique element of order two
        assert_eq!((0..8).filter(|&g| q8.element_order(g) == 2).count(), 1);
        assert!(!q8.is_abelian());
    }
}
