//! Linear algebra over the rings `Z/p^e` together with a small integer
//! Smith normal form.
//!
//! Everything that looks like "solve a linear system of cocycle conditions"
//! elsewhere in the crate bottoms out here.  The workhorse is an incremental
//! row echelon form with the Howell property: for every column `c`, the rows
//! whose pivot lies at or after `c` span every row-space element that is zero
//! before `c`.  Over `Z/p^e` the Howell property is what makes membership
//! tests and kernel extraction exact; a plain echelon form is not enough
//! because a multiple of a row can have a later leading column than the row
//! itself.

/// The ring `Z/p^e` with `m = p^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePower {
    pub p: u64,
    pub e: u32,
    pub m: u64,
}

impl PrimePower {
    pub fn new(p: u64, e: u32) -> Self {
        let m = p.pow(e);
        PrimePower { p, e, m }
    }

    /// p-adic valuation of `x` capped at `e` (val of 0 is `e`).
    pub fn val(&self, x: u64) -> u32 {
        if x % self.m == 0 {
            return self.e;
        }
        let mut x = x % self.m;
        let mut v = 0;
        while x % self.p == 0 {
            x /= self.p;
            v += 1;
        }
        v
    }

    /// Multiplicative inverse of a unit mod `m`.
    pub fn inv_unit(&self, x: u64) -> u64 {
        debug_assert!(x % self.p != 0);
        mod_inverse(x % self.m, self.m).expect("unit has an inverse")
    }
}

pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (g, x, _) = ext_gcd(a as i128, m as i128);
    if g != 1 {
        return None;
    }
    let m = m as i128;
    Some(((x % m + m) % m) as u64)
}

pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

pub fn prime_power_factor(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Row echelon form over `Z/p^e` with the Howell property, built
/// incrementally.  Rows are kept sorted by pivot column; every pivot entry is
/// a power of `p`; annihilator multiples of non-unit pivot rows are folded in
/// so that membership tests by reduction are exact once [`Howell::finalize`]
/// has run.
#[derive(Debug, Clone)]
pub struct Howell {
    pub pp: PrimePower,
    pub width: usize,
    /// Sorted by pivot column, each row normalized to a `p`-power lead.
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
    finalized: bool,
}

impl Howell {
    pub fn new(pp: PrimePower, width: usize) -> Self {
        assert!(pp.m <= u32::MAX as u64);
        Howell {
            pp,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
            finalized: false,
        }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// log_p of the row-space cardinality.
    pub fn size_log(&self) -> u32 {
        self.rows
            .iter()
            .zip(&self.pivots)
            .map(|(r, &c)| self.pp.e - self.pp.val(r[c] as u64))
            .sum()
    }

    fn first_nonzero(row: &[u32], from: usize) -> Option<usize> {
        row[from..].iter().position(|&x| x != 0).map(|i| i + from)
    }

    /// Index in `self.rows` of the row with pivot column `c`, if any, else
    /// the insertion point.
    fn pivot_slot(&self, c: usize) -> std::result::Result<usize, usize> {
        self.pivots.binary_search(&c)
    }

    /// Insert one row, maintaining the echelon structure.  Returns `true` if
    /// the row was (reduced to) zero, i.e. already in the span.
    pub fn insert(&mut self, row: Vec<u32>) -> bool {
        debug_assert_eq!(row.len(), self.width);
        let m = self.pp.m;
        let mut pending = vec![row];
        let mut absorbed = true;
        while let Some(mut row) = pending.pop() {
            let mut c = match Self::first_nonzero(&row, 0) {
                None => continue,
                Some(c) => c,
            };
            loop {
                match self.pivot_slot(c) {
                    Ok(slot) => {
                        let v_new = self.pp.val(row[c] as u64);
                        let pv = self.pp.val(self.rows[slot][c] as u64);
                        if v_new < pv {
                            // The incoming row has a better pivot: swap it in
                            // and keep reducing the displaced row.
                            self.normalize(&mut row, c);
                            let old = std::mem::replace(&mut self.rows[slot], row.clone());
                            absorbed = false;
                            self.queue_annihilator(&row, c, &mut pending);
                            row = old;
                        }
                        // Clear column c of `row` using the pivot row.
                        let pv = self.pp.val(self.rows[slot][c] as u64);
                        let t = (row[c] as u64 / self.pp.p.pow(pv)) % m;
                        let (head, tail) = self.rows.split_at(slot);
                        let _ = head;
                        let pivot_row = &tail[0];
                        for k in c..self.width {
                            let sub = (t * pivot_row[k] as u64) % m;
                            row[k] = ((row[k] as u64 + m - sub) % m) as u32;
                        }
                        debug_assert_eq!(row[c], 0);
                        match Self::first_nonzero(&row, c + 1) {
                            None => break,
                            Some(nc) => c = nc,
                        }
                    }
                    Err(slot) => {
                        self.normalize(&mut row, c);
                        self.rows.insert(slot, row.clone());
                        self.pivots.insert(slot, c);
                        absorbed = false;
                        self.queue_annihilator(&row, c, &mut pending);
                        break;
                    }
                }
            }
        }
        if !absorbed {
            self.finalized = false;
        }
        absorbed
    }

    /// Scale so the pivot entry is exactly `p^val`.
    fn normalize(&self, row: &mut [u32], c: usize) {
        let m = self.pp.m;
        let v = self.pp.val(row[c] as u64);
        let unit = row[c] as u64 / self.pp.p.pow(v);
        let ui = self.pp.inv_unit(unit);
        for x in row[c..].iter_mut() {
            *x = ((*x as u64 * ui) % m) as u32;
        }
        debug_assert_eq!(row[c] as u64, self.pp.p.pow(v));
    }

    fn queue_annihilator(&self, row: &[u32], c: usize, pending: &mut Vec<Vec<u32>>) {
        let v = self.pp.val(row[c] as u64);
        if v > 0 {
            let m = self.pp.m;
            let t = self.pp.p.pow(self.pp.e - v);
            let ann: Vec<u32> = row.iter().map(|&x| ((x as u64 * t) % m) as u32).collect();
            pending.push(ann);
        }
    }

    /// Re-insert annihilator multiples until nothing changes.  Establishes
    /// the Howell property for the current row set.
    pub fn finalize(&mut self) {
        if self.finalized {
            return;
        }
        loop {
            let before: Vec<(usize, Vec<u32>)> = self
                .pivots
                .iter()
                .cloned()
                .zip(self.rows.iter().cloned())
                .collect();
            for (c, row) in &before {
                let v = self.pp.val(row[*c] as u64);
                if v > 0 {
                    let m = self.pp.m;
                    let t = self.pp.p.pow(self.pp.e - v);
                    let ann: Vec<u32> =
                        row.iter().map(|&x| ((x as u64 * t) % m) as u32).collect();
                    self.insert(ann);
                }
            }
            let after: Vec<(usize, Vec<u32>)> = self
                .pivots
                .iter()
                .cloned()
                .zip(self.rows.iter().cloned())
                .collect();
            if before == after {
                break;
            }
        }
        self.finalized = true;
    }

    /// Reduce `row` in place against the echelon; afterwards `row` is zero
    /// iff it lies in the row space (requires [`Howell::finalize`] first for
    /// an exact answer).
    pub fn reduce(&self, row: &mut [u32]) {
        let m = self.pp.m;
        let mut c = match Self::first_nonzero(row, 0) {
            None => return,
            Some(c) => c,
        };
        loop {
            if let Ok(slot) = self.pivot_slot(c) {
                let pv = self.pp.val(self.rows[slot][c] as u64);
                let v = self.pp.val(row[c] as u64);
                if v >= pv {
                    let t = (row[c] as u64 / self.pp.p.pow(pv)) % m;
                    let pivot_row = &self.rows[slot];
                    for k in c..self.width {
                        let sub = (t * pivot_row[k] as u64) % m;
                        row[k] = ((row[k] as u64 + m - sub) % m) as u32;
                    }
                }
            }
            match Self::first_nonzero(row, c + 1) {
                None => return,
                Some(nc) => c = nc,
            }
        }
    }

    pub fn contains(&self, row: &[u32]) -> bool {
        debug_assert!(self.finalized, "call finalize() before membership tests");
        let mut r = row.to_vec();
        self.reduce(&mut r);
        r.iter().all(|&x| x == 0)
    }
}

/// Generators of `{ x : R x = 0 }` where the rows of `eq` are the linear
/// forms `R`.  Exact over `Z/p^e`.
pub fn kernel_of_equations(eq: &Howell) -> Vec<Vec<u32>> {
    let k = eq.rank();
    let n = eq.width;
    let mut aug = Howell::new(eq.pp, k + n);
    for i in 0..n {
        let mut row = vec![0u32; k + n];
        for (r, er) in eq.rows().iter().enumerate() {
            row[r] = er[i];
        }
        row[k + i] = 1;
        aug.insert(row);
    }
    aug.finalize();
    let mut out = Vec::new();
    for (slot, &c) in aug.pivots.iter().enumerate() {
        if c >= k {
            out.push(aug.rows[slot][k..].to_vec());
        }
    }
    out
}

/// Solver for `sum_i x_i g_i = target` over `Z/p^e`, where the `g_i` are
/// fixed generator vectors.  Built once, queried many times.
#[derive(Debug, Clone)]
pub struct LinSolver {
    pp: PrimePower,
    width: usize,
    ngens: usize,
    /// Echelon rows over width `width + ngens`: generator vectors with an
    /// identity augmentation recording how each echelon row was formed.
    ech: Howell,
}

impl LinSolver {
    pub fn new(pp: PrimePower, width: usize, gens: &[Vec<u32>]) -> Self {
        let ngens = gens.len();
        let mut ech = Howell::new(pp, width + ngens);
        for (i, g) in gens.iter().enumerate() {
            debug_assert_eq!(g.len(), width);
            let mut row = vec![0u32; width + ngens];
            row[..width].copy_from_slice(g);
            row[width + i] = 1;
            ech.insert(row);
        }
        ech.finalize();
        LinSolver {
            pp,
            width,
            ngens,
            ech,
        }
    }

    /// Coefficients expressing `target` in the generators, if it lies in
    /// their span.
    pub fn solve(&self, target: &[u32]) -> Option<Vec<u32>> {
        debug_assert_eq!(target.len(), self.width);
        let m = self.pp.m;
        let mut row = vec![0u32; self.width + self.ngens];
        row[..self.width].copy_from_slice(target);
        // Reduce only while the leading column is in the main part; the
        // augmentation then holds minus the used combination.
        let mut c = 0;
        loop {
            match Howell::first_nonzero(&row, c) {
                None => break,
                Some(nc) if nc >= self.width => break,
                Some(nc) => c = nc,
            }
            match self.ech.pivot_slot(c) {
                Ok(slot) => {
                    let pr = &self.ech.rows[slot];
                    let pv = self.pp.val(pr[c] as u64);
                    let v = self.pp.val(row[c] as u64);
                    if v < pv {
                        return None;
                    }
                    let t = (row[c] as u64 / self.pp.p.pow(pv)) % m;
                    for k in c..row.len() {
                        let sub = (t * pr[k] as u64) % m;
                        row[k] = ((row[k] as u64 + m - sub) % m) as u32;
                    }
                }
                Err(_) => return None,
            }
        }
        if row[..self.width].iter().any(|&x| x != 0) {
            return None;
        }
        // target - sum t_r row_r = 0 on the main part, and the augmentation
        // part of the accumulator is -sum t_r aug_r, i.e. minus the wanted
        // coefficient vector pushed through each row's own formation.
        let coeffs: Vec<u32> = row[self.width..]
            .iter()
            .map(|&x| ((m - x as u64) % m) as u32)
            .collect();
        Some(coeffs)
    }
}

/// Diagonalize a relation matrix over `Z/p^e` by invertible row and column
/// operations, tracking the inverse of the row transform.  Rows index
/// generators and columns index relations; after the reduction the diagonal
/// entry of row `t` is exactly `p^{c_t}` with `c_0 <= c_1 <= ...` (rows
/// beyond the rank count as `p^e = 0`).  `uinv[i][j]` is the coefficient of
/// old generator `i` in new generator `j`, mod `p^e`.
///
/// Over a local ring an entry of minimal valuation divides every other
/// entry, so a single clearing pass per pivot suffices and all arithmetic
/// stays below `p^e` — unlike an integer Smith normal form, whose
/// coefficients can explode on matrices this crate produces.
fn local_diagonalize(pp: PrimePower, mut mat: Vec<Vec<u64>>) -> (Vec<u32>, Vec<Vec<u64>>) {
    let m = pp.m;
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut uinv: Vec<Vec<u64>> = (0..rows)
        .map(|i| (0..rows).map(|j| u64::from(i == j)).collect())
        .collect();
    let mulm = |a: u64, b: u64| (a as u128 * b as u128 % m as u128) as u64;

    for t in 0..rows.min(cols) {
        // Minimal-valuation pivot in the remaining block.
        let mut best: Option<(usize, usize, u32)> = None;
        for i in t..rows {
            for j in t..cols {
                if mat[i][j] % m != 0 {
                    let v = pp.val(mat[i][j]);
                    if best.map_or(true, |(_, _, bv)| v < bv) {
                        best = Some((i, j, v));
                    }
                }
            }
        }
        let Some((pi, pj, v)) = best else { break };
        mat.swap(t, pi);
        for r in uinv.iter_mut() {
            r.swap(t, pi);
        }
        for r in mat.iter_mut() {
            r.swap(t, pj);
        }
        // Normalize the pivot to exactly p^v: row_t *= unit^{-1}, which is
        // col_t *= unit on the inverse transform.
        let unit = mat[t][t] / pp.p.pow(v);
        let unit_inv = pp.inv_unit(unit);
        for c in t..cols {
            mat[t][c] = mulm(mat[t][c], unit_inv);
        }
        for r in uinv.iter_mut() {
            r[t] = mulm(r[t], unit);
        }
        // Every entry has valuation >= v, so one subtraction of an exact
        // multiple of the pivot row/column clears it.
        for i in t + 1..rows {
            if mat[i][t] != 0 {
                let q = mat[i][t] / pp.p.pow(v);
                for c in t..cols {
                    let sub = mulm(q, mat[t][c]);
                    mat[i][c] = (mat[i][c] + m - sub) % m;
                }
                // row_i -= q * row_t  =>  col_t += q * col_i  on uinv.
                for r in uinv.iter_mut() {
                    let add = mulm(q, r[i]);
                    r[t] = (r[t] + add) % m;
                }
            }
        }
        for j in t + 1..cols {
            if mat[t][j] != 0 {
                let q = mat[t][j] / pp.p.pow(v);
                for row in mat.iter_mut() {
                    let sub = mulm(q, row[t]);
                    row[j] = (row[j] + m - sub) % m;
                }
            }
        }
        debug_assert_eq!(mat[t][t], pp.p.pow(v) % m);
    }

    let cvals = (0..rows)
        .map(|j| if j < cols { pp.val(mat[j][j]) } else { pp.e })
        .collect();
    (cvals, uinv)
}

/// Invariant factors (each dividing the next) of a product of two abelian
/// groups given by their invariant-factor lists.
pub fn product_invariant_factors(a: &[u64], b: &[u64]) -> Vec<u64> {
    use std::collections::BTreeMap;
    let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &d in a.iter().chain(b) {
        for (p, e) in prime_power_factor(d) {
            primary.entry(p).or_default().push(e);
        }
    }
    let mut len = 0;
    for v in primary.values_mut() {
        v.sort_unstable_by(|x, y| y.cmp(x));
        len = len.max(v.len());
    }
    let mut out = vec![1u64; len];
    for (p, es) in primary {
        for (i, e) in es.into_iter().enumerate() {
            out[i] *= p.pow(e);
        }
    }
    out.retain(|&d| d > 1);
    out.reverse();
    out
}

/// Invariant factors (ascending divisibility chain) plus generator
/// combinations for `(Z^k / span(relations)) tensor Z/exponent`.  When the
/// quotient itself has exponent dividing `exponent` — as it does whenever
/// `exponent * e_i` lies in the relation span for every `i` — this is the
/// full quotient.  Each relation is a length-`k` vector.
///
/// Works one prime of `exponent` at a time over `Z/p^e` and merges the
/// primary parts, pairing largest factors with largest; the returned
/// combination vectors are only meaningful modulo `exponent`.
pub fn quotient_invariants(
    k: usize,
    relations: &[Vec<i128>],
    exponent: u64,
) -> (Vec<u64>, Vec<Vec<i128>>) {
    if k == 0 || exponent <= 1 {
        return (Vec::new(), Vec::new());
    }
    // Per prime: descending list of (order, generator combo mod p^e).
    let mut primary: Vec<(PrimePower, Vec<(u64, Vec<u64>)>)> = Vec::new();
    for (p, e) in prime_power_factor(exponent) {
        let pp = PrimePower::new(p, e);
        let cols = relations.len();
        let mut mat = vec![vec![0u64; cols]; k];
        for (c, rel) in relations.iter().enumerate() {
            debug_assert_eq!(rel.len(), k);
            for r in 0..k {
                mat[r][c] = rel[r].rem_euclid(pp.m as i128) as u64;
            }
        }
        let (cvals, uinv) = local_diagonalize(pp, mat);
        let mut factors: Vec<(u64, Vec<u64>)> = (0..k)
            .filter(|&j| cvals[j] > 0)
            .map(|j| (pp.p.pow(cvals[j]), (0..k).map(|i| uinv[i][j]).collect()))
            .collect();
        factors.sort_by(|a, b| b.0.cmp(&a.0));
        if !factors.is_empty() {
            primary.push((pp, factors));
        }
    }
    let len = primary.iter().map(|(_, f)| f.len()).max().unwrap_or(0);
    let mut invs = Vec::new();
    let mut gens = Vec::new();
    for idx in 0..len {
        let mut d = 1u64;
        let mut combo = vec![(0u64, 1u64); k]; // (residue, modulus) per coordinate
        for (pp, factors) in &primary {
            let part = factors.get(idx);
            if let Some((order, _)) = part {
                d *= order;
            }
            for (i, slot) in combo.iter_mut().enumerate() {
                let target = part.map(|(_, g)| g[i] % pp.m).unwrap_or(0);
                *slot = crt_pair(*slot, (target, pp.m));
            }
        }
        invs.push(d);
        gens.push(combo.into_iter().map(|(v, _)| v as i128).collect());
    }
    invs.reverse();
    gens.reverse();
    (invs, gens)
}

/// Combine congruences with coprime moduli: the unique residue class mod
/// `m1 * m2` reducing to each input.
fn crt_pair((a, m1): (u64, u64), (b, m2): (u64, u64)) -> (u64, u64) {
    let m1_inv = mod_inverse(m1 % m2, m2).expect("moduli are coprime");
    let t = (b as u128 + (m2 - a % m2) as u128) % m2 as u128 * m1_inv as u128 % m2 as u128;
    (a + (t as u64) * m1, m1 * m2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_span(pp: PrimePower, gens: &[Vec<u32>]) -> std::collections::HashSet<Vec<u32>> {
        let m = pp.m;
        let width = gens[0].len();
        let mut span = std::collections::HashSet::new();
        span.insert(vec![0u32; width]);
        loop {
            let mut added = false;
            let snapshot: Vec<Vec<u32>> = span.iter().cloned().collect();
            for s in snapshot {
                for g in gens {
                    let t: Vec<u32> = s
                        .iter()
                        .zip(g)
                        .map(|(&a, &b)| ((a as u64 + b as u64) % m) as u32)
                        .collect();
                    if span.insert(t) {
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        span
    }

    fn seeded_rows(seed: u64, count: usize, width: usize, m: u64) -> Vec<Vec<u32>> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| (0..width).map(|_| rng.random_range(0..m) as u32).collect())
            .collect()
    }

    #[test]
    fn howell_membership_matches_enumeration() {
        for (p, e) in [(2u64, 2u32), (2, 3), (3, 2), (5, 1)] {
            let pp = PrimePower::new(p, e);
            for seed in 0..6 {
                let gens = seeded_rows(seed, 3, 4, pp.m);
                let span = brute_span(pp, &gens);
                let mut h = Howell::new(pp, 4);
                for g in &gens {
                    h.insert(g.clone());
                }
                h.finalize();
                // Every span element reduces to zero; count must match.
                for s in &span {
                    assert!(h.contains(s), "p^e={}^{} seed={} missing {:?}", p, e, seed, s);
                }
                let log = h.size_log();
                assert_eq!(
                    (pp.p as usize).pow(log),
                    span.len(),
                    "size mismatch p={} e={} seed={}",
                    p,
                    e,
                    seed
                );
                // Random non-members are rejected.
                let probes = seeded_rows(seed + 100, 20, 4, pp.m);
                for probe in probes {
                    assert_eq!(h.contains(&probe), span.contains(&probe));
                }
            }
        }
    }

    #[test]
    fn kernel_matches_enumeration() {
        for (p, e) in [(2u64, 2u32), (3, 1), (2, 3)] {
            let pp = PrimePower::new(p, e);
            for seed in 0..5 {
                let eqs = seeded_rows(seed * 7 + 1, 3, 4, pp.m);
                let mut h = Howell::new(pp, 4);
                for r in &eqs {
                    h.insert(r.clone());
                }
                h.finalize();
                let kern = kernel_of_equations(&h);
                // Brute force the solution set.
                let m = pp.m;
                let mut solutions = std::collections::HashSet::new();
                let total = m.pow(4);
                for code in 0..total {
                    let mut x = Vec::with_capacity(4);
                    let mut c = code;
                    for _ in 0..4 {
                        x.push((c % m) as u32);
                        c /= m;
                    }
                    let ok = eqs.iter().all(|r| {
                        r.iter()
                            .zip(&x)
                            .map(|(&a, &b)| (a as u64 * b as u64) % m)
                            .sum::<u64>()
                            % m
                            == 0
                    });
                    if ok {
                        solutions.insert(x);
                    }
                }
                // Every kernel generator solves the system, and the span of
                // the generators is the full solution set.
                for g in &kern {
                    assert!(solutions.contains(g));
                }
                let spanned = if kern.is_empty() {
                    let mut s = std::collections::HashSet::new();
                    s.insert(vec![0u32; 4]);
                    s
                } else {
                    brute_span(pp, &kern)
                };
                assert_eq!(spanned, solutions, "p={} e={} seed={}", p, e, seed);
            }
        }
    }

    #[test]
    fn solver_roundtrip() {
        let pp = PrimePower::new(2, 3);
        for seed in 0..6 {
            let gens = seeded_rows(seed + 31, 3, 5, pp.m);
            let solver = LinSolver::new(pp, 5, &gens);
            let combos = seeded_rows(seed + 77, 10, 3, pp.m);
            for combo in combos {
                let mut target = vec![0u32; 5];
                for (c, g) in combo.iter().zip(&gens) {
                    for (t, &x) in target.iter_mut().zip(g) {
                        *t = ((*t as u64 + *c as u64 * x as u64) % pp.m) as u32;
                    }
                }
                let sol = solver.solve(&target).expect("in span");
                let mut check = vec![0u32; 5];
                for (c, g) in sol.iter().zip(&gens) {
                    for (t, &x) in check.iter_mut().zip(g) {
                        *t = ((*t as u64 + *c as u64 * x as u64) % pp.m) as u32;
                    }
                }
                assert_eq!(check, target);
            }
        }
    }

    #[test]
    fn quotient_invariants_small_examples() {
        // Z^2 / <(2,0),(0,6)>.
        let (invs, _) = quotient_invariants(2, &[vec![2, 0], vec![0, 6]], 6);
        assert_eq!(invs, vec![2, 6]);
        // Z^2 / <(2,6),(4,8)>: determinant -8, invariants (2, 4).
        let (invs, _) = quotient_invariants(2, &[vec![2, 6], vec![4, 8]], 8);
        assert_eq!(invs, vec![2, 4]);
        // Divisibility chain across primes.
        let (invs, _) = quotient_invariants(2, &[vec![6, 0], vec![0, 4]], 12);
        assert_eq!(invs, vec![2, 12]);
        // A stated exponent beyond the true one changes nothing.
        let (invs, _) = quotient_invariants(2, &[vec![6, 0], vec![0, 4]], 24);
        assert_eq!(invs, vec![2, 12]);
    }

    #[test]
    fn quotient_invariants_track_generators() {
        // Z^2 / <(2,0),(0,3)> = Z/2 x Z/3 = Z/6 as an invariant factor.
        let (invs, gens) = quotient_invariants(2, &[vec![2, 0], vec![0, 3]], 6);
        assert_eq!(invs, vec![6]);
        assert_eq!(gens.len(), 1);
        // The generator (a, b) must have order 6: a odd and b not divisible
        // by 3 mod the relations.
        let g = &gens[0];
        assert!(g[0] % 2 != 0);
        assert!(g[1] % 3 != 0);
        // Negative relation entries are reduced, not truncated.
        let (invs, _) = quotient_invariants(2, &[vec![-2, 0], vec![0, -3]], 6);
        assert_eq!(invs, vec![6]);
    }

    #[test]
    fn product_invariants_merge() {
        assert_eq!(product_invariant_factors(&[2], &[4]), vec![2, 4]);
        assert_eq!(product_invariant_factors(&[2], &[3]), vec![6]);
        assert_eq!(
            product_invariant_factors(&[2, 4], &[3]),
            vec![2, 12]
        );
        assert_eq!(product_invariant_factors(&[], &[5]), vec![5]);
    }

    #[test]
    fn quotient_invariants_tensor_semantics() {
        // Z^2 / <(2,0)> is infinite; tensoring with Z/2 truncates the free
        // part to Z/2, which is the documented contract.
        let (invs, _) = quotient_invariants(2, &[vec![2, 0]], 2);
        assert_eq!(invs, vec![2, 2]);
    }
}
