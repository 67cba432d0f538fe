//! Exact complex character tables via modular arithmetic.
//!
//! The table is computed over a prime field F_l with l = 1 mod exp(G) and
//! l^2 > 4|G|: the class-algebra structure matrices are simultaneously
//! diagonalized over F_l, degrees are recovered from the orthogonality
//! relation (the true degree is the unique square root below sqrt|G|), and
//! exact cyclotomic values are rebuilt from eigenvalue multiplicities, which
//! are bounded by the degree and therefore lift uniquely from F_l.

use crate::cyclo::{ZetaInt, ZetaRing};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Largest group the character engine accepts.
pub const CHAR_TABLE_CAP: usize = 1200;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Smallest prime `l = 1 mod exponent` with `l > 2 sqrt(order)`.
pub fn dixon_prime(order: u64, exponent: u64) -> u64 {
    let mut l = exponent + 1;
    loop {
        if l * l > 4 * order && is_prime(l) {
            return l;
        }
        l += exponent;
    }
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, l: u64) -> u64 {
    base %= l;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % l;
        }
        base = base * base % l;
        exp >>= 1;
    }
    acc
}

fn inv_mod(x: u64, l: u64) -> u64 {
    pow_mod(x, l - 2, l)
}

fn smallest_primitive_root(l: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = l - 1;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            factors.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..l)
        .find(|&w| factors.iter().all(|&q| pow_mod(w, (l - 1) / q, l) != 1))
        .expect("prime field has a primitive root")
}

/// Conjugacy class bookkeeping shared by every character computation.
pub(crate) struct ClassData {
    pub classes: Vec<Vec<usize>>,
    pub reps: Vec<usize>,
    pub sizes: Vec<u64>,
    pub class_of: Vec<usize>,
    pub inv_class: Vec<usize>,
}

pub(crate) fn class_data(g: &FiniteGroup) -> ClassData {
    let classes = g.conjugacy_classes();
    let mut class_of = vec![0usize; g.order()];
    for (i, c) in classes.iter().enumerate() {
        for &x in c {
            class_of[x] = i;
        }
    }
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let sizes: Vec<u64> = classes.iter().map(|c| c.len() as u64).collect();
    let inv_class: Vec<usize> = reps.iter().map(|&r| class_of[g.inv(r)]).collect();
    ClassData { classes, reps, sizes, class_of, inv_class }
}

/// Character data over the Dixon prime: enough for degree multisets and
/// central characters without lifting to exact cyclotomics.
pub(crate) struct ModCharacters {
    pub l: u64,
    pub w: u64,
    pub degrees: Vec<u64>,
    /// values[r][k] = chi_r(class k) mod l.
    pub values: Vec<Vec<u64>>,
}

/// Characteristic polynomial of a square matrix mod l (ascending
/// coefficients, monic): Hessenberg reduction followed by the standard
/// leading-minor recurrence.
fn charpoly_mod(mut a: Vec<Vec<u64>>, l: u64) -> Vec<u64> {
    let s = a.len();
    // Similarity reduction to upper Hessenberg form.
    for j in 0..s.saturating_sub(2) {
        let Some(r) = (j + 1..s).find(|&r| a[r][j] != 0) else {
            continue;
        };
        if r != j + 1 {
            a.swap(r, j + 1);
            for row in a.iter_mut() {
                row.swap(r, j + 1);
            }
        }
        let pinv = inv_mod(a[j + 1][j], l);
        for i in j + 2..s {
            let f = a[i][j] * pinv % l;
            if f == 0 {
                continue;
            }
            for k in 0..s {
                let sub = f * a[j + 1][k] % l;
                a[i][k] = (a[i][k] + l - sub) % l;
            }
            for row in a.iter_mut() {
                row[j + 1] = (row[j + 1] + f * row[i]) % l;
            }
        }
    }
    // p_k = (x - a[k-1][k-1]) p_{k-1}
    //       - sum_i a[k-1-i][k-1] (prod subdiagonal) p_{k-1-i}.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=s {
        let prev = &polys[k - 1];
        let mut next = vec![0u64; k + 1];
        let diag = a[k - 1][k - 1] % l;
        for (e, &c) in prev.iter().enumerate() {
            next[e + 1] = (next[e + 1] + c) % l;
            next[e] = (next[e] + (l - diag) * c) % l;
        }
        let mut prod = 1u64;
        for i in 1..k {
            prod = prod * a[k - i][k - i - 1] % l;
            if prod == 0 {
                break;
            }
            let coef = a[k - 1 - i][k - 1] * prod % l;
            if coef == 0 {
                continue;
            }
            for (e, &c) in polys[k - 1 - i].iter().enumerate() {
                next[e] = (next[e] + (l - coef % l) * c) % l;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// Reduced row echelon form in place; returns pivot columns.  Zero rows are
/// dropped.
fn rref(rows: &mut Vec<Vec<u64>>, l: u64) -> Vec<usize> {
    let width = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..width {
        let Some(pr) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let pinv = inv_mod(rows[rank][col], l);
        for x in rows[rank].iter_mut() {
            *x = *x * pinv % l;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                for c in 0..width {
                    let sub = f * rows[rank][c] % l;
                    rows[r][c] = (rows[r][c] + l - sub) % l;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

/// Kernel basis of a square matrix mod l (rows of the result).
fn kernel_mod(mat: &[Vec<u64>], l: u64) -> Vec<Vec<u64>> {
    let s = mat.len();
    let mut rows: Vec<Vec<u64>> = mat.to_vec();
    let pivots = rref(&mut rows, l);
    let mut kernel = Vec::new();
    for c in 0..s {
        if pivots.contains(&c) {
            continue;
        }
        let mut v = vec![0u64; s];
        v[c] = 1;
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = (l - rows[r][c]) % l;
        }
        kernel.push(v);
    }
    kernel
}

/// One subspace of the splitting, kept in reduced row echelon form so that
/// coordinates of vectors in the span can be read off the pivot columns.
struct Subspace {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

fn refine(sub: &Subspace, op: &[Vec<u64>], l: u64) -> Result<Vec<Subspace>> {
    let s = sub.basis.len();
    let d = op.len();
    // Images of the basis under the operator, and their coordinates.
    let mut small = vec![vec![0u64; s]; s];
    for (t, b) in sub.basis.iter().enumerate() {
        let mut img = vec![0u64; d];
        for (k, row) in op.iter().enumerate() {
            let mut acc = 0u64;
            for (m, &x) in b.iter().enumerate() {
                acc = (acc + row[m] % l * x) % l;
            }
            img[k] = acc;
        }
        for (j, &p) in sub.pivots.iter().enumerate() {
            small[j][t] = img[p];
        }
        // The subspace must be invariant (all class operators commute).
        for (k, val) in img.iter().enumerate() {
            let mut acc = 0u64;
            for (j, b2) in sub.basis.iter().enumerate() {
                acc = (acc + small[j][t] * b2[k]) % l;
            }
            if acc != *val {
                return Err(Error::Invalid(
                    "internal: class operator does not preserve the eigenspace".into(),
                ));
            }
        }
    }
    let poly = charpoly_mod(small.clone(), l);
    let mut spaces = Vec::new();
    let mut total = 0usize;
    for lam in 0..l {
        // Horner evaluation of the characteristic polynomial.
        let mut val = 0u64;
        for &c in poly.iter().rev() {
            val = (val * lam + c) % l;
        }
        if val != 0 {
            continue;
        }
        let mut shifted = small.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = (row[i] + l - lam) % l;
        }
        let mut block = Vec::new();
        for kv in kernel_mod(&shifted, l) {
            let mut vec = vec![0u64; d];
            for (t, &c) in kv.iter().enumerate() {
                if c != 0 {
                    for (k, &x) in sub.basis[t].iter().enumerate() {
                        vec[k] = (vec[k] + c * x) % l;
                    }
                }
            }
            block.push(vec);
        }
        if block.is_empty() {
            continue;
        }
        total += block.len();
        let pivots = rref(&mut block, l);
        spaces.push(Subspace { pivots, basis: block });
    }
    if total != s {
        return Err(Error::Invalid(
            "internal: eigenspace dimensions do not add up".into(),
        ));
    }
    Ok(spaces)
}

/// Class-multiplication operator for class `i`: entry [k][m] counts pairs
/// (x, y) in C_i x C_k with x y = rep(m).
fn class_operator(g: &FiniteGroup, cd: &ClassData, i: usize, l: u64) -> Vec<Vec<u64>> {
    let d = cd.classes.len();
    let mut op = vec![vec![0u64; d]; d];
    for (m, &z) in cd.reps.iter().enumerate() {
        for &x in &cd.classes[i] {
            let y = g.mul(g.inv(x), z);
            op[cd.class_of[y]][m] += 1;
        }
    }
    for row in op.iter_mut() {
        for x in row.iter_mut() {
            *x %= l;
        }
    }
    op
}

pub(crate) fn mod_characters(g: &FiniteGroup, cd: &ClassData) -> Result<ModCharacters> {
    let n = g.order();
    if n > CHAR_TABLE_CAP {
        return Err(Error::CapExceeded(format!(
            "character table engine capped at order {CHAR_TABLE_CAP}, got {n}"
        )));
    }
    let d = cd.classes.len();
    let l = dixon_prime(n as u64, g.exponent());
    let w = smallest_primitive_root(l);

    // Simultaneous diagonalization of the class operators, in index order.
    let mut spaces = vec![Subspace {
        basis: (0..d)
            .map(|i| {
                let mut v = vec![0u64; d];
                v[i] = 1;
                v
            })
            .collect(),
        pivots: (0..d).collect(),
    }];
    for i in 1..d {
        if spaces.iter().all(|s| s.basis.len() == 1) {
            break;
        }
        let op = class_operator(g, cd, i, l);
        let mut next = Vec::with_capacity(spaces.len());
        for sub in &spaces {
            if sub.basis.len() == 1 {
                next.push(Subspace { basis: sub.basis.clone(), pivots: sub.pivots.clone() });
            } else {
                next.extend(refine(sub, &op, l)?);
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.basis.len() != 1) {
        return Err(Error::Invalid(
            "internal: class algebra did not split into one-dimensional pieces".into(),
        ));
    }

    // Normalize eigenvectors to omega vectors (identity-class entry 1), then
    // recover degrees and values.
    let mut degrees = Vec::with_capacity(d);
    let mut values = Vec::with_capacity(d);
    let nm = n as u64 % l;
    for sub in &spaces {
        let v = &sub.basis[0];
        if v[0] == 0 {
            return Err(Error::Invalid(
                "internal: omega vector vanishes on the identity class".into(),
            ));
        }
        let scale = inv_mod(v[0], l);
        let omega: Vec<u64> = v.iter().map(|&x| x * scale % l).collect();
        let mut t = 0u64;
        for k in 0..d {
            t = (t + omega[k] * omega[cd.inv_class[k]] % l * inv_mod(cd.sizes[k] % l, l)) % l;
        }
        let deg_sq = nm * inv_mod(t, l) % l;
        let mut deg = 0u64;
        let mut e = 1u64;
        while e * e <= n as u64 {
            if e * e % l == deg_sq {
                deg = e;
                break;
            }
            e += 1;
        }
        if deg == 0 {
            return Err(Error::Invalid(
                "internal: character degree is not a small square root".into(),
            ));
        }
        degrees.push(deg);
        let row: Vec<u64> = (0..d)
            .map(|k| omega[k] * deg % l * inv_mod(cd.sizes[k] % l, l) % l)
            .collect();
        values.push(row);
    }
    let total: u64 = degrees.iter().map(|&x| x * x).sum();
    if total != n as u64 {
        return Err(Error::Invalid(format!(
            "internal: degree squares sum to {total}, group order is {n}"
        )));
    }
    Ok(ModCharacters { l, w, degrees, values })
}

/// An exact complex character table.
pub struct CharacterTable {
    pub classes: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
    pub class_sizes: Vec<u64>,
    /// Row degrees; the first row is the trivial character and degrees are
    /// ascending.
    pub degrees: Vec<u64>,
    /// values[row][class], exact in Z[zeta_exponent].
    pub values: Vec<Vec<ZetaInt>>,
    pub exponent: u64,
    pub dixon_prime: u64,
}

pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    let cd = class_data(g);
    let mc = mod_characters(g, &cd)?;
    let exponent = g.exponent();
    let ring = ZetaRing::new(exponent as u32);
    let d = cd.classes.len();
    let (l, w) = (mc.l, mc.w);

    // Power maps per class, reused across rows.
    let mut rows: Vec<(u64, Vec<ZetaInt>)> = Vec::with_capacity(d);
    let mut power_class: Vec<Vec<usize>> = Vec::with_capacity(d);
    let mut orders: Vec<u64> = Vec::with_capacity(d);
    for &r in &cd.reps {
        let o = g.element_order(r);
        orders.push(o);
        power_class.push((0..o).map(|t| cd.class_of[g.pow(r, t as i64)]).collect());
    }
    for (r, deg) in mc.degrees.iter().enumerate() {
        let mut row = Vec::with_capacity(d);
        for k in 0..d {
            let o = orders[k];
            let zo = pow_mod(w, (l - 1) / o, l);
            let zo_pows: Vec<u64> = {
                let mut v = Vec::with_capacity(o as usize);
                let mut acc = 1u64;
                for _ in 0..o {
                    v.push(acc);
                    acc = acc * zo % l;
                }
                v
            };
            let oinv = inv_mod(o % l, l);
            let mut mults = Vec::with_capacity(o as usize);
            let mut total = 0u64;
            for j in 0..o {
                let mut acc = 0u64;
                for (t, &pk) in power_class[k].iter().enumerate() {
                    let e = (j * t as u64) % o;
                    acc = (acc + mc.values[r][pk] * zo_pows[((o - e) % o) as usize]) % l;
                }
                let m = acc * oinv % l;
                total += m;
                mults.push(m as i64);
            }
            // Multiplicities are bounded by the degree, so the residues are
            // the true integers; their sum must be the degree.
            if total != *deg {
                return Err(Error::Invalid(
                    "internal: eigenvalue multiplicities do not sum to the degree".into(),
                ));
            }
            row.push(ring.from_root_multiplicities(o as u32, &mults));
        }
        rows.push((*deg, row));
    }

    // Deterministic row order: trivial character first, the rest by degree
    // then by value coefficients.
    let one = ring.integer(1);
    rows.sort_by(|a, b| {
        let at = a.0 == 1 && a.1.iter().all(|v| *v == one);
        let bt = b.0 == 1 && b.1.iter().all(|v| *v == one);
        bt.cmp(&at).then(a.0.cmp(&b.0)).then_with(|| a.1.cmp(&b.1))
    });
    let degrees: Vec<u64> = rows.iter().map(|r| r.0).collect();
    let values: Vec<Vec<ZetaInt>> = rows.into_iter().map(|r| r.1).collect();
    Ok(CharacterTable {
        classes: cd.classes,
        representatives: cd.reps,
        class_sizes: cd.sizes,
        degrees,
        values,
        exponent,
        dixon_prime: l,
    })
}

impl CharacterTable {
    pub fn irreducible_count(&self) -> usize {
        self.degrees.len()
    }

    /// Check the defining invariants: degree squares sum to |G|, the first
    /// row is trivial, and the rows are orthonormal for the class pairing.
    pub fn validate(&self, g: &FiniteGroup) -> Result<()> {
        let n = g.order() as u64;
        let total: u64 = self.degrees.iter().map(|&x| x * x).sum();
        if total != n {
            return Err(Error::Invalid("degree squares do not sum to |G|".into()));
        }
        let ring = ZetaRing::new(self.exponent as u32);
        let one = ring.integer(1);
        if self.degrees[0] != 1 || self.values[0].iter().any(|v| *v != one) {
            return Err(Error::Invalid("first row is not the trivial character".into()));
        }
        for r in 0..self.values.len() {
            for s in r..self.values.len() {
                let mut acc = ring.zero();
                for k in 0..self.class_sizes.len() {
                    let prod = ring.mul(&self.values[r][k], &ring.conj(&self.values[s][k]));
                    let scaled = ring.mul(&prod, &ring.integer(self.class_sizes[k] as i64));
                    acc = ring.add(&acc, &scaled);
                }
                let expect = if r == s { n as i64 } else { 0 };
                if acc != ring.integer(expect) {
                    return Err(Error::Invalid(format!(
                        "rows {r} and {s} are not orthogonal"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Just the irreducible degrees, ascending; skips the exact value lift.
pub fn character_degrees(g: &FiniteGroup) -> Result<Vec<u64>> {
    let cd = class_data(g);
    let mc = mod_characters(g, &cd)?;
    let mut degrees = mc.degrees;
    degrees.sort_unstable();
    Ok(degrees)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{
        action_from_presentation, catalog_build, direct_product, named_cyclic, semidirect,
    };

    #[test]
    fn cyclic_group_table_is_root_powers() {
        let g = named_cyclic(3, "g");
        let t = character_table(&g).unwrap();
        assert_eq!(t.degrees, [1, 1, 1]);
        t.validate(&g).unwrap();
        let ring = ZetaRing::new(3);
        for row in &t.values {
            for v in row {
                assert!((0..3).any(|j| *v == ring.root(j)));
            }
        }
        // Some row contains a primitive root.
        assert!(t.values.iter().flatten().any(|v| *v == ring.root(1)));
    }

    fn s3() -> crate::group::FiniteGroup {
        let c3 = named_cyclic(3, "r");
        let c2 = named_cyclic(2, "s");
        let inv_map: Vec<u32> = (0..3u32).map(|i| (3 - i) % 3).collect();
        let action = action_from_presentation(&c2, &c3, &[(1, inv_map)]).unwrap();
        semidirect("S3", &c3, &c2, &action).unwrap()
    }

    #[test]
    fn symmetric_group_degrees() {
        // Three classes and degree squares summing to 6 force {1, 1, 2}.
        let g = s3();
        let t = character_table(&g).unwrap();
        assert_eq!(t.degrees, [1, 1, 2]);
        t.validate(&g).unwrap();
    }

    #[test]
    fn heisenberg_degrees() {
        // Eleven classes, nine of them linear from the abelianization of
        // order nine; the remaining two squares sum to 18.
        let g = catalog_build("Heis", &[3]).unwrap();
        let degs = character_degrees(&g).unwrap();
        assert_eq!(degs, [1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3]);
        let t = character_table(&g).unwrap();
        t.validate(&g).unwrap();
        assert_eq!(t.degrees[..9], [1; 9]);
    }

    #[test]
    fn extraspecial_exponent_nine_degrees() {
        let g = catalog_build("ExtraSpecialExpP2", &[3]).unwrap();
        assert_eq!(character_degrees(&g).unwrap(), [1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3]);
    }

    #[test]
    fn tables_validate_across_small_groups() {
        let d4 = {
            let c4 = named_cyclic(4, "r");
            let c2 = named_cyclic(2, "s");
            let inv_map: Vec<u32> = (0..4u32).map(|i| (4 - i) % 4).collect();
            let action = action_from_presentation(&c2, &c4, &[(1, inv_map)]).unwrap();
            semidirect("D4", &c4, &c2, &action).unwrap()
        };
        let c2c4 = direct_product(&named_cyclic(2, "x"), &named_cyclic(4, "y")).unwrap();
        let groups = vec![
            named_cyclic(12, "g"),
            s3(),
            d4,
            c2c4,
            catalog_build("ElemAb2", &[5]).unwrap(),
        ];
        for g in &groups {
            let t = character_table(g).unwrap();
            t.validate(g).unwrap();
            assert_eq!(t.irreducible_count(), g.conjugacy_classes().len());
        }
    }

    #[test]
    fn degrees_divide_index_of_normal_abelian_subgroups() {
        // With a normal abelian subgroup A, every irreducible degree divides
        // [G : A]; the center always qualifies, and for the split catalog
        // groups so does the normal factor.
        for (name, params) in [
            ("Heis", vec![3u64]),
            ("ExtraSpecialExpP2", vec![3]),
            ("D288_484", vec![]),
            ("D288_603", vec![]),
        ] {
            let g = catalog_build(name, &params).unwrap();
            let degs = character_degrees(&g).unwrap();
            let z = g.center();
            let index_z = (g.order() / z.len()) as u64;
            for &d in &degs {
                assert_eq!(index_z % d, 0, "{name}: degree {d} vs center index {index_z}");
            }
        }
        // The order-288 groups contain their normal 3x3 factor with index 32.
        let g = catalog_build("D288_484", &[]).unwrap();
        for &d in &character_degrees(&g).unwrap() {
            assert_eq!(32 % d, 0);
        }
    }

    #[test]
    fn dixon_prime_selection() {
        assert_eq!(dixon_prime(6, 6), 7);
        assert_eq!(dixon_prime(27, 3), 13);
        // Needs l > 2 sqrt(1152) = 67.9 and l = 1 mod exponent.
        assert_eq!(dixon_prime(1152, 24), 73);
        assert_eq!(dixon_prime(1152, 48), 97);
    }
}
