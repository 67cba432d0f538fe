//! Second cohomology of a finite group with coefficients in Z/m under the
//! trivial action.
//!
//! A cocycle is stored additively as a full table `t(x, y)` of values in Z/m
//! satisfying the normalization `t(1, g) = t(g, 1) = 0` and the identity
//! `t(x, y) + t(xy, z) = t(y, z) + t(x, yz)`.  Multiplicative coefficients in
//! a field are recovered by reading a value `v` as the root of unity
//! `zeta_m^v`.  Coboundaries are `db(x, y) = b(x) + b(y) - b(xy)` for a
//! normalized function `b` on the group.
//!
//! The module computes H^2(G, Z/m) by linear algebra over Z/p^e
//! ([`h2_bruteforce`]), splits off the part of the Schur multiplier fixed by
//! a coprime action ([`coprime_split_multiplier`]), and maintains per-group
//! descriptions of the multiplier together with named generator cocycles
//! ([`multiplier_desc`]).

mod dsl;
mod h2;
mod registry;
mod split;

pub use dsl::{parse_relations, CoeffToken, RelationKind, TwistRelation, TwistSpec};
pub use h2::{h2_bruteforce, multiplier_bruteforce, SchurMultiplier, H2_BRUTE_CAP};
pub use registry::{
    multiplier_desc, parse_twist_spec, resolve_twist, twist_to_cocycle, AbGen, ClassSpec, HomDesc,
    HomGen, MultiplierDesc, HOM_ENUM_CAP,
};
pub use split::{coprime_split_multiplier, SplitMultiplier};

use crate::group::{CentralExtension, FiniteGroup, GroupHom};
use crate::zmod::{prime_power_factor, LinSolver, PrimePower};
use crate::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;

/// A normalized 2-cocycle (or bare 2-cochain before [`Cocycle::validate`])
/// on a group of order `n` with values in Z/`modulus`.
#[derive(Clone, PartialEq, Eq)]
pub struct Cocycle {
    n: usize,
    modulus: u32,
    table: Vec<u32>,
}

impl Cocycle {
    pub fn zero(n: usize, modulus: u32) -> Self {
        assert!(modulus >= 1);
        Cocycle { n, modulus, table: vec![0; n * n] }
    }

    pub fn from_table(n: usize, modulus: u32, table: Vec<u32>) -> Self {
        assert_eq!(table.len(), n * n);
        assert!(table.iter().all(|&v| v < modulus));
        Cocycle { n, modulus, table }
    }

    pub fn group_order(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.table[x * self.n + y]
    }

    pub fn set(&mut self, x: usize, y: usize, v: u32) {
        assert!(v < self.modulus);
        self.table[x * self.n + y] = v;
    }

    /// Check normalization and the cocycle identity against the full
    /// multiplication table.  Exhaustive over all triples.
    pub fn validate(&self, g: &FiniteGroup) -> Result<()> {
        let n = self.n;
        if g.order() != n {
            return Err(Error::Cocycle(format!(
                "cocycle is on {} elements but the group has {}",
                n,
                g.order()
            )));
        }
        let m = self.modulus;
        for x in 0..n {
            if self.get(0, x) != 0 || self.get(x, 0) != 0 {
                return Err(Error::Cocycle(format!("not normalized at element {x}")));
            }
        }
        for x in 1..n {
            for y in 1..n {
                let xy = g.mul(x, y);
                let a = self.get(x, y);
                for z in 1..n {
                    let yz = g.mul(y, z);
                    let lhs = a + self.get(xy, z);
                    let rhs = self.get(y, z) + self.get(x, yz);
                    if lhs % m != rhs % m {
                        return Err(Error::Cocycle(format!(
                            "cocycle identity fails at ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Cocycle) -> Cocycle {
        assert_eq!(self.n, other.n);
        assert_eq!(self.modulus, other.modulus);
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(&a, &b)| (a + b) % self.modulus)
            .collect();
        Cocycle { n: self.n, modulus: self.modulus, table }
    }

    pub fn neg(&self) -> Cocycle {
        let m = self.modulus;
        let table = self.table.iter().map(|&a| (m - a) % m).collect();
        Cocycle { n: self.n, modulus: m, table }
    }

    /// The k-th power of the class (k may be negative).
    pub fn scale(&self, k: i64) -> Cocycle {
        let m = self.modulus as i64;
        let k = k.rem_euclid(m) as u64;
        let table = self
            .table
            .iter()
            .map(|&a| ((a as u64 * k) % self.modulus as u64) as u32)
            .collect();
        Cocycle { n: self.n, modulus: self.modulus, table }
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|&v| v == 0)
    }

    /// Reinterpret the values in Z/new_m via the embedding that sends
    /// 1 mod m to new_m/m mod new_m (so multiplicative readings agree).
    pub fn lift_modulus(&self, new_m: u32) -> Cocycle {
        assert!(new_m % self.modulus == 0, "lift requires old modulus | new modulus");
        let f = new_m / self.modulus;
        let table = self.table.iter().map(|&a| a * f).collect();
        Cocycle { n: self.n, modulus: new_m, table }
    }

    /// Shrink the coefficient group to the subgroup actually generated by the
    /// values: returns the same cocycle over Z/d where d = m / gcd(values, m),
    /// together with d.  Multiplicative readings agree.
    pub fn value_reduced(&self) -> (Cocycle, u32) {
        let m = self.modulus;
        let mut g = m;
        for &v in &self.table {
            g = gcd_u32(g, v);
            if g == 1 {
                break;
            }
        }
        let d = m / g;
        let table = self.table.iter().map(|&v| v / g).collect();
        (Cocycle { n: self.n, modulus: d.max(1), table }, d.max(1))
    }

    /// Pull back along a surjection `pi: G -> Q` (the cocycle lives on Q).
    pub fn inflate(&self, pi: &GroupHom) -> Cocycle {
        let n = pi.domain_order();
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            let px = pi.apply(x);
            for y in 0..n {
                table.push(self.get(px, pi.apply(y)));
            }
        }
        Cocycle { n, modulus: self.modulus, table }
    }

    /// Restrict to a subgroup given by its element list (must be closed).
    pub fn restrict(&self, elems: &[usize]) -> Cocycle {
        let k = elems.len();
        let mut table = Vec::with_capacity(k * k);
        for &x in elems {
            for &y in elems {
                table.push(self.get(x, y));
            }
        }
        Cocycle { n: k, modulus: self.modulus, table }
    }

    /// Transport along a relabeling `map` of the underlying group
    /// (an isomorphism old -> new): result(map(x), map(y)) = self(x, y).
    pub fn relabel(&self, map: &[u32]) -> Cocycle {
        assert_eq!(map.len(), self.n);
        let n = self.n;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[map[x] as usize * n + map[y] as usize] = self.get(x, y);
            }
        }
        Cocycle { n, modulus: self.modulus, table }
    }

    /// The commutation invariant at a commuting pair: the exponent k with
    /// u_x u_y = zeta^k u_y u_x in the twisted algebra.  Unchanged by
    /// coboundaries, so well-defined on classes.
    pub fn pairing(&self, g: &FiniteGroup, x: usize, y: usize) -> u32 {
        assert_eq!(g.mul(x, y), g.mul(y, x), "pairing needs a commuting pair");
        (self.get(x, y) + self.modulus - self.get(y, x)) % self.modulus
    }

    /// The coboundary of a normalized 1-cochain `b` (b[0] must be 0).
    pub fn coboundary(g: &FiniteGroup, modulus: u32, b: &[u32]) -> Cocycle {
        let n = g.order();
        assert_eq!(b.len(), n);
        assert_eq!(b[0], 0);
        let m = modulus as u64;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let v = (b[x] as u64 + b[y] as u64 + m - b[g.mul(x, y)] as u64) % m;
                table.push(v as u32);
            }
        }
        Cocycle { n, modulus, table }
    }
}

impl std::fmt::Debug for Cocycle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cocycle(n={}, mod {};", self.n, self.modulus)?;
        let nz = self.table.iter().filter(|&&v| v != 0).count();
        write!(f, " {nz} nonzero entries)")
    }
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

/// Decides membership in the coboundary subgroup B^2(G, Z/m) by expressing a
/// candidate 1-cochain through a fixed generating set and solving the small
/// resulting linear system exactly.
///
/// Building the tester walks the group once; each query costs O(n^2) table
/// scans plus a linear solve in at most (number of generators) unknowns.
pub struct CoboundaryTester<'g> {
    g: &'g FiniteGroup,
    modulus: u32,
    gens: Vec<usize>,
    /// For x != 1: (prev, i) with x = prev * gens[i], discovered by BFS.
    parent: Vec<Option<(usize, usize)>>,
    bfs_order: Vec<usize>,
}

impl<'g> CoboundaryTester<'g> {
    pub fn new(g: &'g FiniteGroup, modulus: u32) -> Self {
        let n = g.order();
        let mut gens: Vec<usize> = Vec::new();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut bfs_order = vec![0usize];
        loop {
            // Extend the reachable set with the current generators.
            let mut head = 0;
            while head < bfs_order.len() {
                let x = bfs_order[head];
                head += 1;
                for (i, &s) in gens.iter().enumerate() {
                    let y = g.mul(x, s);
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = Some((x, i));
                        bfs_order.push(y);
                    }
                }
            }
            if bfs_order.len() == n {
                break;
            }
            let next = (0..n).find(|&x| !seen[x]).unwrap();
            gens.push(next);
            // The next pass restarts the sweep over the known frontier:
            // cheap, and keeps parent entries pointing at earlier elements.
        }
        CoboundaryTester { g, modulus, gens, parent, bfs_order }
    }

    pub fn generator_count(&self) -> usize {
        self.gens.len()
    }

    /// If `t = db` for some normalized 1-cochain `b`, return `b`.
    pub fn solve(&self, t: &Cocycle) -> Option<Vec<u32>> {
        let n = self.g.order();
        assert_eq!(t.group_order(), n);
        assert_eq!(t.modulus(), self.modulus);
        let m = self.modulus as u64;
        let k = self.gens.len();
        // b(x) = const[x] + sum_i coef[x][i] * u_i where u_i = b(gens[i]).
        // From t(p, s) = b(p) + b(s) - b(ps):  b(ps) = b(p) + b(s) - t(p, s).
        let mut cst = vec![0u64; n];
        let mut coef = vec![vec![0u64; k]; n];
        for idx in 0..k {
            // A generator is discovered as 1 * gens[idx]; its expression is
            // just u_idx.
            coef[self.gens[idx]][idx] = 1;
        }
        for &x in &self.bfs_order {
            if let Some((p, i)) = self.parent[x] {
                let s = self.gens[i];
                if x == s {
                    continue;
                }
                cst[x] = (cst[p] + cst[s] + m - t.get(p, s) as u64 % m) % m;
                for j in 0..k {
                    coef[x][j] = (coef[p][j] + coef[s][j]) % m;
                }
            }
        }
        // Constraints from every pair: coef[x] + coef[y] - coef[xy] applied
        // to u must equal t(x,y) - cst[x] - cst[y] + cst[xy]  (mod m).
        let total = n * n;
        let mut cols: Vec<Vec<u32>> = vec![Vec::with_capacity(total); k];
        let mut target: Vec<u32> = Vec::with_capacity(total);
        for x in 0..n {
            for y in 0..n {
                let xy = self.g.mul(x, y);
                for (j, col) in cols.iter_mut().enumerate() {
                    col.push(((coef[x][j] + coef[y][j] + (m - coef[xy][j])) % m) as u32);
                }
                let rhs = (t.get(x, y) as u64 + 2 * m - cst[x] - cst[y] + cst[xy]) % m;
                target.push(rhs as u32);
            }
        }
        // Solve per prime power and combine.
        let mut u = vec![0u64; k];
        for (p, e) in prime_power_factor(self.modulus as u64) {
            let pe = p.pow(e);
            let pp = PrimePower::new(p, e);
            let red = |v: &Vec<u32>| -> Vec<u32> { v.iter().map(|&x| (x as u64 % pe) as u32).collect() };
            let cols_p: Vec<Vec<u32>> = cols.iter().map(red).collect();
            let target_p = red(&target);
            let sol = LinSolver::new(pp, total, &cols_p).solve(&target_p)?;
            // CRT: u_j = sol_j mod p^e, keep current value mod (m / p^e).
            let rest = m / pe;
            for j in 0..k {
                u[j] = crt_pair(u[j] % rest, rest, sol[j] as u64, pe);
            }
        }
        let mut b = vec![0u32; n];
        for x in 0..n {
            let mut v = cst[x];
            for j in 0..k {
                v = (v + coef[x][j] * u[j]) % m;
            }
            b[x] = v as u32;
        }
        // Exactness check; cheap relative to the solve.
        for x in 0..n {
            for y in 0..n {
                let lhs = (b[x] as u64 + b[y] as u64 + m - b[self.g.mul(x, y)] as u64) % m;
                if lhs != t.get(x, y) as u64 % m {
                    return None;
                }
            }
        }
        Some(b)
    }

    pub fn is_coboundary(&self, t: &Cocycle) -> bool {
        self.solve(t).is_some()
    }

    /// Order of the class [t] in H^2: the least d | m with d*t a coboundary.
    pub fn class_order(&self, t: &Cocycle) -> u32 {
        let m = self.modulus;
        let mut divs: Vec<u32> = (1..=m).filter(|d| m % d == 0).collect();
        divs.sort_unstable();
        for d in divs {
            if self.is_coboundary(&t.scale(d as i64)) {
                return d;
            }
        }
        unreachable!("m * t is the zero cochain")
    }

    /// Are [s] and [t] the same cohomology class?
    pub fn same_class(&self, s: &Cocycle, t: &Cocycle) -> bool {
        self.is_coboundary(&s.add(&t.neg()))
    }
}

fn crt_pair(a: u64, m: u64, b: u64, n: u64) -> u64 {
    // Unique x mod m*n with x = a mod m, x = b mod n; gcd(m, n) = 1.
    if m == 1 {
        return b % n;
    }
    let (_, inv, _) = crate::zmod::ext_gcd(n as i128, m as i128);
    let inv = inv.rem_euclid(m as i128) as u64;
    let k = ((a + m - b % m) % m * inv) % m;
    b + n * k
}

/// Expresses cocycle classes in coordinates over a fixed generator list,
/// modulo coboundaries: solves `target = sum_i x_i * gen_i + db` exactly.
///
/// Construction echelonizes once per prime power of the modulus; queries are
/// back-substitutions.
pub struct ClassCoords {
    modulus: u32,
    k: usize,
    solvers: Vec<(u64, LinSolver)>,
}

impl ClassCoords {
    pub fn new(g: &FiniteGroup, modulus: u32, gens: &[Cocycle]) -> Self {
        let n = g.order();
        let total = n * n;
        let k = gens.len();
        let mut cols: Vec<Vec<u32>> = Vec::with_capacity(k + n - 1);
        for t in gens {
            assert_eq!(t.modulus, modulus);
            assert_eq!(t.n, n);
            cols.push(t.table.clone());
        }
        for x in 1..n {
            let mut b = vec![0u32; n];
            b[x] = 1;
            cols.push(Cocycle::coboundary(g, modulus, &b).table);
        }
        let mut solvers = Vec::new();
        for (p, e) in prime_power_factor(modulus as u64) {
            let pe = p.pow(e);
            let pp = PrimePower::new(p, e);
            let cols_p: Vec<Vec<u32>> = cols
                .iter()
                .map(|v| v.iter().map(|&x| (x as u64 % pe) as u32).collect())
                .collect();
            solvers.push((pe, LinSolver::new(pp, total, &cols_p)));
        }
        ClassCoords { modulus, k, solvers }
    }

    /// Coordinates of [t] over the generators, or None if out of their span.
    pub fn coords(&self, t: &Cocycle) -> Option<Vec<u64>> {
        assert_eq!(t.modulus, self.modulus);
        let m = self.modulus as u64;
        let mut out = vec![0u64; self.k];
        for (pe, solver) in &self.solvers {
            let target: Vec<u32> = t.table.iter().map(|&x| (x as u64 % pe) as u32).collect();
            let sol = solver.solve(&target)?;
            let rest = m / pe;
            for j in 0..self.k {
                out[j] = crt_pair(out[j] % rest, rest, sol[j] as u64 % pe, *pe);
            }
        }
        Some(out)
    }
}

/// The defect cocycle of the canonical section of a central extension:
/// sigma(x) sigma(y) = z^(t(x,y)) sigma(xy) where z is the central generator.
/// For extensions built by [`crate::group::central_extension`] this recovers
/// the input cocycle.  Composing with a character chi of the kernel is a
/// [`Cocycle::scale`] by the exponent of chi.
pub fn section_defect(ext: &CentralExtension) -> Cocycle {
    let total = &ext.total;
    let n = ext.section.len();
    let m = ext.modulus as u32;
    let mut dlog: BTreeMap<usize, u32> = BTreeMap::new();
    let mut z = 0usize; // identity
    for j in 0..m {
        dlog.insert(z, j);
        z = total.mul(z, ext.kernel_gen);
    }
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let sx = ext.section[x] as usize;
        for y in 0..n {
            let sy = ext.section[y] as usize;
            let prod = total.mul(sx, sy);
            let sxy = ext.section[ext.proj[prod] as usize] as usize;
            let defect = total.mul(prod, total.inv(sxy));
            let j = *dlog
                .get(&defect)
                .expect("section defect lands in the central kernel");
            table.push(j);
        }
    }
    Cocycle { n, modulus: m, table }
}

/// Presentation of H^2(G, Z/m) by invariant factors with explicit generator
/// cocycles, plus the canonical splitting data.
#[derive(Serialize)]
pub struct CohomologyDesc {
    pub group_label: String,
    pub group_order: usize,
    pub modulus: u32,
    /// Invariant factors in ascending divisibility order; empty when trivial.
    pub invariants: Vec<u64>,
    /// The invariant factors of Ext(G/G', Z/m) (the symmetric subgroup),
    /// for reference alongside `invariants`.
    pub ext_shape: Vec<u64>,
    #[serde(skip)]
    pub generators: Vec<Cocycle>,
}

impl CohomologyDesc {
    /// Combine cohomology coordinates into a cocycle.
    pub fn combine(&self, coords: &[i64]) -> Cocycle {
        assert_eq!(coords.len(), self.generators.len());
        let mut acc = Cocycle::zero(self.group_order, self.modulus);
        for (c, gen) in coords.iter().zip(&self.generators) {
            acc = acc.add(&gen.scale(*c));
        }
        acc
    }

    pub fn order(&self) -> u64 {
        self.invariants.iter().product()
    }
}

/// Carry cocycles: the images of the standard generators of
/// Ext(G/G', Z/m) inside H^2(G, Z/m), via an abelian basis of G/G'.
///
/// For a basis element of order d the cocycle is the plain carry function
/// (x, y) -> floor((x_i + y_i)/d) mod m; its class has order gcd(d, m).
/// Multiplicatively this is the obstruction to taking an m-th root of the
/// dual character inside the roots of unity, so these classes are exactly
/// the ones that die in H^2(G, C*).
pub fn ext_generator_cocycles(g: &FiniteGroup, modulus: u32) -> Result<(Vec<u64>, Vec<Cocycle>)> {
    let derived = g.derived_subgroup();
    let (q, pi) = crate::group::quotient("ab", g, &derived)?;
    let basis = q.abelian_basis()?;
    let m = modulus as u64;
    let mut shape = Vec::new();
    let mut gens = Vec::new();
    let n = g.order();
    for (i, &d) in basis.orders.iter().enumerate() {
        let e = num_integer::gcd(d, m);
        if e == 1 {
            continue;
        }
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            let xi = basis.coords[pi.apply(x)][i];
            for y in 0..n {
                let yi = basis.coords[pi.apply(y)][i];
                let carry = ((xi as u64 + yi as u64) / d) as u32;
                table.push(carry % modulus);
            }
        }
        shape.push(e);
        gens.push(Cocycle { n, modulus, table });
    }
    Ok((shape, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{catalog_build, central_extension, cyclic, quotient};

    fn sample_cocycle_c4_mod4() -> (FiniteGroup, Cocycle) {
        // Carry cocycle on C4 with values in Z/4: order-4 class.
        let g = cyclic(4);
        let mut t = Cocycle::zero(4, 4);
        for x in 0..4usize {
            for y in 0..4usize {
                t.set(x, y, if x + y >= 4 { 1 } else { 0 });
            }
        }
        (g, t)
    }

    #[test]
    fn carry_cocycle_is_valid_and_has_full_order() {
        let (g, t) = sample_cocycle_c4_mod4();
        t.validate(&g).unwrap();
        let tester = CoboundaryTester::new(&g, 4);
        assert_eq!(tester.generator_count(), 1);
        assert!(!tester.is_coboundary(&t));
        assert_eq!(tester.class_order(&t), 4);
    }

    #[test]
    fn coboundaries_are_recognized_with_witness() {
        let g = catalog_build("Heis", &[3]).unwrap();
        let n = g.order();
        // A pseudo-random normalized 1-cochain.
        let b: Vec<u32> = (0..n).map(|i| if i == 0 { 0 } else { (7 * i as u32 + 2) % 6 }).collect();
        let t = Cocycle::coboundary(&g, 6, &b);
        t.validate(&g).unwrap();
        let tester = CoboundaryTester::new(&g, 6);
        let found = tester.solve(&t).expect("coboundary recognized");
        let again = Cocycle::coboundary(&g, 6, &found);
        assert_eq!(again, t);
        assert_eq!(tester.class_order(&t), 1);
    }

    #[test]
    fn section_defect_roundtrips_through_central_extension() {
        let (g, t) = sample_cocycle_c4_mod4();
        let ext = central_extension(&g, &t).unwrap();
        assert_eq!(ext.total.order(), 16);
        let back = section_defect(&ext);
        assert_eq!(back, t);
        // The total group of the carry extension over C4 is C16.
        assert_eq!(ext.total.exponent(), 16);
        // Quotient by the central kernel recovers the base.
        let kernel = ext.kernel_elems();
        let (q, _) = quotient("Q", &ext.total, &kernel).unwrap();
        assert!(crate::group::find_isomorphism(&q, &g).unwrap().is_some());
    }

    #[test]
    fn inflation_and_value_reduction() {
        let g = cyclic(6);
        let (q, pi) = quotient("Q", &g, &g.closure(&[g.pow(1, 2)])).unwrap();
        assert_eq!(q.order(), 2);
        // The carry cocycle on C2 mod 4 takes values {0, 2}.
        let mut t = Cocycle::zero(2, 4);
        t.set(1, 1, 2);
        t.validate(&q).unwrap();
        let lifted = t.inflate(&pi);
        lifted.validate(&g).unwrap();
        assert_eq!(lifted.get(1, 1), 2);
        let (reduced, d) = lifted.value_reduced();
        assert_eq!(d, 2);
        assert_eq!(reduced.modulus(), 2);
        reduced.validate(&g).unwrap();
    }

    #[test]
    fn ext_cocycles_have_expected_orders() {
        // C6: Ext(C6, Z/4) = Z/2; the carry generator has class order 2.
        let g = cyclic(6);
        let (shape, gens) = ext_generator_cocycles(&g, 4).unwrap();
        assert_eq!(shape, vec![2]);
        assert_eq!(gens.len(), 1);
        gens[0].validate(&g).unwrap();
        let tester = CoboundaryTester::new(&g, 4);
        assert_eq!(tester.class_order(&gens[0]), 2);

        // Heisenberg: G/G' = C3 x C3, Ext(., Z/3) = (Z/3)^2.
        let h = catalog_build("Heis", &[3]).unwrap();
        let (shape, gens) = ext_generator_cocycles(&h, 3).unwrap();
        assert_eq!(shape, vec![3, 3]);
        let tester = CoboundaryTester::new(&h, 3);
        for c in &gens {
            c.validate(&h).unwrap();
            assert_eq!(tester.class_order(c), 3);
        }
    }

    #[test]
    fn scale_and_lift_interact_correctly() {
        let (g, t) = sample_cocycle_c4_mod4();
        let lifted = t.lift_modulus(8);
        lifted.validate(&g).unwrap();
        assert_eq!(lifted.get(3, 1), 2);
        let sq = t.scale(2);
        assert_eq!(sq.get(3, 1), 2);
        assert_eq!(t.scale(-1), t.neg());
        assert!(t.scale(4).is_zero());
        let (red, d) = sq.value_reduced();
        assert_eq!(d, 2);
        assert_eq!(red.modulus(), 2);
        red.validate(&g).unwrap();
    }
}
