//! Finite groups as explicit multiplication tables.
//!
//! Elements are `usize` indices into an `n x n` table; index 0 is always the
//! identity.  Conventions used throughout the crate:
//!
//! * conjugation is a right action, `x^y = y^-1 x y`;
//! * commutators are `[x, y] = x^-1 y^-1 x y`, so `x^y = x [x, y]`.
//!
//! Tables up to order 64 are checked for associativity exhaustively at
//! construction; larger tables (which this crate only ever produces from
//! verified building blocks) get a seeded random sample.

mod build;
mod catalog;
mod iso;

pub use build::{
    action_from_presentation, central_extension, cyclic, direct_product, extension_from_parts,
    hom_from_generators, quotient, semidirect, CentralExtension,
};
pub use catalog::{catalog_build, catalog_entries, CatalogEntry};
pub(crate) use catalog::named_cyclic;
pub use iso::find_isomorphism;

use crate::error::{Error, Result};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use serde::Serialize;

pub const GROUP_ORDER_CAP: usize = 2000;

#[derive(Clone)]
pub struct FiniteGroup {
    label: String,
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    named: Vec<(String, usize)>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.label, self.n)
    }
}

impl FiniteGroup {
    /// Build from a raw row-major table, validating the group axioms.
    pub fn from_table(
        label: impl Into<String>,
        n: usize,
        mul: Vec<u32>,
        named: Vec<(String, usize)>,
    ) -> Result<Self> {
        let label = label.into();
        if n == 0 || mul.len() != n * n {
            return Err(Error::Group(format!(
                "{label}: table size {} does not match order {n}",
                mul.len()
            )));
        }
        if n > GROUP_ORDER_CAP {
            return Err(Error::CapExceeded(format!(
                "{label}: order {n} exceeds the table cap {GROUP_ORDER_CAP}"
            )));
        }
        for x in &mul {
            if *x as usize >= n {
                return Err(Error::Group(format!("{label}: table entry out of range")));
            }
        }
        // Identity at index 0.
        for a in 0..n {
            if mul[a] as usize != a || mul[a * n] as usize != a {
                return Err(Error::Group(format!("{label}: index 0 is not an identity")));
            }
        }
        // Each row and column is a permutation, and inverses exist.
        let mut inv = vec![u32::MAX; n];
        for a in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for b in 0..n {
                let r = mul[a * n + b] as usize;
                let c = mul[b * n + a] as usize;
                if seen_row[r] || seen_col[c] {
                    return Err(Error::Group(format!("{label}: row/column {a} not a permutation")));
                }
                seen_row[r] = true;
                seen_col[c] = true;
                if r == 0 && mul[b * n + a] == 0 {
                    inv[a] = b as u32;
                }
            }
            if inv[a] == u32::MAX {
                return Err(Error::Group(format!("{label}: element {a} has no inverse")));
            }
        }
        // Associativity.
        let assoc = |a: usize, b: usize, c: usize| {
            let ab = mul[a * n + b] as usize;
            let bc = mul[b * n + c] as usize;
            mul[ab * n + c] == mul[a * n + bc]
        };
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(Error::Group(format!(
                                "{label}: associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x7467_7269);
            for _ in 0..200_000 {
                let (a, b, c) = (
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                );
                if !assoc(a, b, c) {
                    return Err(Error::Group(format!(
                        "{label}: associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
        for (name, idx) in &named {
            if *idx >= n {
                return Err(Error::Group(format!("{label}: named element {name} out of range")));
            }
        }
        let mut g = FiniteGroup {
            label,
            n,
            mul,
            inv,
            orders: Vec::new(),
            named,
        };
        g.orders = (0..n).map(|a| g.compute_order(a)).collect();
        Ok(g)
    }

    fn compute_order(&self, a: usize) -> u32 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul[x * self.n + a] as usize;
            k += 1;
        }
        k
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn id(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a] as u64
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let o = self.orders[a] as i64;
        let mut k = k.rem_euclid(o) as u64;
        let mut base = a;
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `x^y = y^-1 x y`.
    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(y), x), y)
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    pub fn comm(&self, x: usize, y: usize) -> usize {
        self.mul(self.inv(self.mul(y, x)), self.mul(x, y))
    }

    pub fn named_elements(&self) -> &[(String, usize)] {
        &self.named
    }

    pub fn named_element(&self, name: &str) -> Option<usize> {
        self.named
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, i)| *i)
    }

    pub fn set_named(&mut self, named: Vec<(String, usize)>) {
        self.named = named;
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |acc, &o| acc.lcm(&(o as u64)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&z| (0..self.n).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Sorted element list of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.n];
        in_set[0] = true;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                for y in [self.mul(x, g), self.mul(x, self.inv(g))] {
                    if !in_set[y] {
                        in_set[y] = true;
                        queue.push(y);
                    }
                }
            }
        }
        let mut out: Vec<usize> = (0..self.n).filter(|&x| in_set[x]).collect();
        out.sort_unstable();
        out
    }

    pub fn derived_subgroup(&self) -> Vec<usize> {
        let mut comms: Vec<usize> = Vec::new();
        let mut seen = vec![false; self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                let c = self.comm(x, y);
                if !seen[c] {
                    seen[c] = true;
                    comms.push(c);
                }
            }
        }
        self.closure(&comms)
    }

    /// Conjugacy classes, each sorted ascending, ordered by smallest member
    /// (so the identity class comes first).
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.n];
        let mut classes = Vec::new();
        for x in 0..self.n {
            if assigned[x] {
                continue;
            }
            let mut class = Vec::new();
            let mut stack = vec![x];
            assigned[x] = true;
            while let Some(y) = stack.pop() {
                class.push(y);
                for g in 0..self.n {
                    let c = self.conj(y, g);
                    if !assigned[c] {
                        assigned[c] = true;
                        stack.push(c);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes.sort_by_key(|c| c[0]);
        classes
    }

    /// Map from element to the index of its conjugacy class in
    /// [`FiniteGroup::conjugacy_classes`] order.
    pub fn class_index_map(&self, classes: &[Vec<usize>]) -> Vec<usize> {
        let mut map = vec![0usize; self.n];
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                map[x] = i;
            }
        }
        map
    }

    pub fn is_normal(&self, elems: &[usize]) -> bool {
        let in_set: std::collections::HashSet<usize> = elems.iter().cloned().collect();
        elems
            .iter()
            .all(|&x| (0..self.n).all(|g| in_set.contains(&self.conj(x, g))))
    }

    /// Invariant factors (ascending divisibility chain) of an abelian group.
    pub fn abelian_invariants(&self) -> Result<Vec<u64>> {
        Ok(self.abelian_basis()?.orders)
    }

    /// A basis realizing the invariant-factor decomposition of an abelian
    /// group, with coordinates for every element.
    pub fn abelian_basis(&self) -> Result<AbelianBasis> {
        if !self.is_abelian() {
            return Err(Error::Invalid(format!("{} is not abelian", self.label)));
        }
        let mut basis: Vec<usize> = Vec::new();
        let mut orders: Vec<u64> = Vec::new();
        let mut sub = vec![false; self.n];
        sub[0] = true;
        let mut sub_elems = vec![0usize];
        while sub_elems.len() < self.n {
            // Order of g modulo the current subgroup.
            let order_mod = |g: usize| -> u64 {
                let mut x = g;
                let mut k = 1u64;
                while !sub[x] {
                    x = self.mul(x, g);
                    k += 1;
                }
                k
            };
            let mut best_k = 0u64;
            let mut best: Option<usize> = None;
            for g in 0..self.n {
                if sub[g] {
                    continue;
                }
                let k = order_mod(g);
                let exact = self.element_order(g) == k;
                let cur_exact = best.map(|b| self.element_order(b) == best_k).unwrap_or(false);
                if k > best_k || (k == best_k && exact && !cur_exact) {
                    best_k = k;
                    best = Some(g);
                }
            }
            let mut g = best.expect("proper subgroup has a complement element");
            if self.element_order(g) != best_k {
                // Adjust by a subgroup element to make the global order match
                // the order modulo the subgroup; one exists because the
                // subgroup built this way is pure.
                let mut found = false;
                for &h in &sub_elems {
                    let cand = self.mul(g, h);
                    if order_mod(cand) == best_k && self.element_order(cand) == best_k {
                        g = cand;
                        found = true;
                        break;
                    }
                }
                if !found {
                    return Err(Error::Invalid(format!(
                        "{}: no pure representative found (internal)",
                        self.label
                    )));
                }
            }
            basis.push(g);
            orders.push(best_k);
            // Extend the subgroup.
            let mut new_elems = Vec::new();
            for &h in &sub_elems {
                let mut x = h;
                loop {
                    if !sub[x] {
                        sub[x] = true;
                        new_elems.push(x);
                    }
                    x = self.mul(x, g);
                    if x == h {
                        break;
                    }
                }
            }
            sub_elems.extend(new_elems);
        }
        // Verify directness by building the coordinate map.
        let mut coords = vec![None; self.n];
        let total: u64 = orders.iter().product();
        if total != self.n as u64 {
            return Err(Error::Invalid(format!(
                "{}: basis orders do not multiply to the group order",
                self.label
            )));
        }
        let k = basis.len();
        let mut tuple = vec![0u64; k];
        loop {
            let mut x = 0usize;
            for (i, &t) in tuple.iter().enumerate() {
                x = self.mul(x, self.pow(basis[i], t as i64));
            }
            if coords[x].is_some() {
                return Err(Error::Invalid(format!(
                    "{}: basis is not direct (internal)",
                    self.label
                )));
            }
            coords[x] = Some(tuple.iter().map(|&t| t as u32).collect());
            // Increment.
            let mut i = 0;
            loop {
                if i == k {
                    break;
                }
                tuple[i] += 1;
                if tuple[i] < orders[i] {
                    break;
                }
                tuple[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }
        let coords: Vec<Vec<u32>> = coords.into_iter().map(|c| c.unwrap()).collect();
        // Ascending divisibility chain.
        let mut idx: Vec<usize> = (0..k).collect();
        idx.sort_by_key(|&i| orders[i]);
        let basis = idx.iter().map(|&i| basis[i]).collect();
        let sorted_orders: Vec<u64> = idx.iter().map(|&i| orders[i]).collect();
        let coords = coords
            .into_iter()
            .map(|c| idx.iter().map(|&i| c[i]).collect())
            .collect();
        for w in sorted_orders.windows(2) {
            if w[1] % w[0] != 0 {
                return Err(Error::Invalid(format!(
                    "{}: invariant chain broken (internal)",
                    self.label
                )));
            }
        }
        Ok(AbelianBasis {
            elems: basis,
            orders: sorted_orders,
            coords,
        })
    }

    /// Extract `elems` (a subgroup, sorted) as a standalone group.  Returns
    /// the group and the map from new indices to old ones.
    pub fn subgroup(&self, label: impl Into<String>, elems: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let mut elems = elems.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if elems.first() != Some(&0) {
            return Err(Error::Group("subgroup must contain the identity".into()));
        }
        let mut old_to_new = vec![usize::MAX; self.n];
        for (i, &e) in elems.iter().enumerate() {
            old_to_new[e] = i;
        }
        let k = elems.len();
        let mut mul = vec![0u32; k * k];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                let p = self.mul(a, b);
                let np = old_to_new[p];
                if np == usize::MAX {
                    return Err(Error::Group("element set is not closed".into()));
                }
                mul[i * k + j] = np as u32;
            }
        }
        let named = self
            .named
            .iter()
            .filter(|(_, idx)| old_to_new[*idx] != usize::MAX)
            .map(|(n, idx)| (n.clone(), old_to_new[*idx]))
            .collect();
        let g = FiniteGroup::from_table(label, k, mul, named)?;
        Ok((g, elems))
    }

    /// JSON-friendly description.
    pub fn describe(&self) -> GroupDescription {
        GroupDescription {
            label: self.label.clone(),
            order: self.n,
            exponent: self.exponent(),
            abelian: self.is_abelian(),
            center_order: self.center().len(),
            derived_order: self.derived_subgroup().len(),
            class_count: self.conjugacy_classes().len(),
            named: self
                .named
                .iter()
                .map(|(n, i)| (n.clone(), *i))
                .collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct AbelianBasis {
    pub elems: Vec<usize>,
    pub orders: Vec<u64>,
    /// `coords[x][i]`: exponent of `elems[i]` when `x` is written in the
    /// basis.
    pub coords: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupDescription {
    pub label: String,
    pub order: usize,
    pub exponent: u64,
    pub abelian: bool,
    pub center_order: usize,
    pub derived_order: usize,
    pub class_count: usize,
    pub named: Vec<(String, usize)>,
}

/// A verified homomorphism between table groups.
#[derive(Debug, Clone)]
pub struct GroupHom {
    pub map: Vec<u32>,
}

impl GroupHom {
    pub fn new(src: &FiniteGroup, dst: &FiniteGroup, map: Vec<u32>) -> Result<Self> {
        if map.len() != src.order() {
            return Err(Error::Group("homomorphism map has wrong length".into()));
        }
        for &x in &map {
            if x as usize >= dst.order() {
                return Err(Error::Group("homomorphism image out of range".into()));
            }
        }
        if map[0] != 0 {
            return Err(Error::Group("homomorphism does not fix the identity".into()));
        }
        for a in 0..src.order() {
            for b in 0..src.order() {
                if map[src.mul(a, b)] as usize != dst.mul(map[a] as usize, map[b] as usize) {
                    return Err(Error::Group(format!(
                        "not a homomorphism at ({a},{b})"
                    )));
                }
            }
        }
        Ok(GroupHom { map })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn domain_order(&self) -> usize {
        self.map.len()
    }
}
