//! H^2(G, Z/m) by direct linear algebra on the cocycle identity.
//!
//! Variables are the table entries t(x, y) for x, y != 1 (normalization fixes
//! the rest).  The cocycle identity gives one linear equation per triple of
//! non-identity elements; coboundaries span a known submodule of the solution
//! space; the quotient is read off a Smith normal form.  Work happens per
//! prime power of the modulus and the primary parts are merged at the end.
//!
//! The equation system has (n-1)^3 rows of which at most (n-1)^2 are
//! independent, so rather than eliminating every row the solver inserts a
//! deterministic pseudo-random sample, computes the kernel, and re-checks
//! every kernel generator against the full equation list, inserting violated
//! equations and repeating until the kernel is exact.

use super::{ext_generator_cocycles, ClassCoords, CoboundaryTester, Cocycle, CohomologyDesc};
use crate::group::FiniteGroup;
use crate::zmod::{kernel_of_equations, prime_power_factor, Howell, LinSolver, PrimePower};
use crate::{Error, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Largest group order accepted by [`h2_bruteforce`].
pub const H2_BRUTE_CAP: usize = 64;

/// Compute H^2(G, Z/m) with trivial action: invariant factors in ascending
/// divisibility order together with generator cocycles realizing them.
pub fn h2_bruteforce(g: &FiniteGroup, modulus: u32) -> Result<CohomologyDesc> {
    let n = g.order();
    if n > H2_BRUTE_CAP {
        return Err(Error::CapExceeded(format!(
            "h2 brute force handles order <= {H2_BRUTE_CAP}, got {n}"
        )));
    }
    if modulus == 0 {
        return Err(Error::Invalid("modulus must be positive".into()));
    }
    // order p^k -> generator, grouped per prime, largest first.
    let mut primary: Vec<Vec<(u64, Cocycle)>> = Vec::new();
    for (p, e) in prime_power_factor(modulus as u64) {
        let part = h2_prime_power(g, PrimePower::new(p, e))?;
        if !part.is_empty() {
            primary.push(
                part.into_iter()
                    .map(|(d, c)| (d, c.lift_modulus(modulus)))
                    .collect(),
            );
        }
    }
    let len = primary.iter().map(|v| v.len()).max().unwrap_or(0);
    let mut merged: Vec<(u64, Cocycle)> = Vec::new();
    for j in 0..len {
        let mut d = 1u64;
        let mut gen = Cocycle::zero(n, modulus);
        for part in &primary {
            if let Some((pd, pc)) = part.get(j) {
                d *= pd;
                gen = gen.add(pc);
            }
        }
        merged.push((d, gen));
    }
    merged.reverse(); // ascending divisibility
    let (ext_shape, _) = ext_generator_cocycles(g, modulus)?;
    Ok(CohomologyDesc {
        group_label: g.label().to_string(),
        group_order: n,
        modulus,
        invariants: merged.iter().map(|&(d, _)| d).collect(),
        ext_shape,
        generators: merged.into_iter().map(|(_, c)| c).collect(),
    })
}

/// The multiplier H^2(G, C*) of a small group: invariant factors together
/// with generator cocycles valued in the roots of unity of order `modulus`
/// (the exponent of the multiplier; 1 when trivial).
pub struct SchurMultiplier {
    pub invariants: Vec<u64>,
    pub modulus: u32,
    pub generators: Vec<Cocycle>,
}

impl SchurMultiplier {
    pub fn trivial() -> Self {
        SchurMultiplier { invariants: Vec::new(), modulus: 1, generators: Vec::new() }
    }

    pub fn order(&self) -> u64 {
        self.invariants.iter().product()
    }
}

/// Compute the multiplier by brute force: H^2(G, Z/m) for m = |G| (every
/// class of H^2(G, C*) has a representative there), modulo the classes that
/// split off the abelianization and die over C*.
///
/// Runs the linear algebra twice: once at m = |G| for the abstract shape,
/// then again at the multiplier exponent so the generator tables carry the
/// smallest usable root of unity.
pub fn multiplier_bruteforce(g: &FiniteGroup) -> Result<SchurMultiplier> {
    let n = g.order();
    if n > H2_BRUTE_CAP {
        return Err(Error::CapExceeded(format!(
            "multiplier brute force handles order <= {H2_BRUTE_CAP}, got {n}"
        )));
    }
    if n == 1 {
        return Ok(SchurMultiplier::trivial());
    }
    let (invariants, _) = multiplier_at_modulus(g, n as u32)?;
    let Some(&exp) = invariants.last() else {
        return Ok(SchurMultiplier::trivial());
    };
    let modulus = exp as u32;
    let (again, generators) = multiplier_at_modulus(g, modulus)?;
    if again != invariants {
        return Err(Error::Cocycle(format!(
            "multiplier of {} disagrees between moduli: {invariants:?} vs {again:?}",
            g.label()
        )));
    }
    Ok(SchurMultiplier { invariants, modulus, generators })
}

/// H^2(G, Z/m) modulo the carry classes; valid as the m-torsion of the
/// multiplier.  Returns invariant factors and generator cocycles adjusted,
/// when cheaply possible, to have matching class order in H^2(G, Z/m).
fn multiplier_at_modulus(g: &FiniteGroup, m: u32) -> Result<(Vec<u64>, Vec<Cocycle>)> {
    let desc = h2_bruteforce(g, m)?;
    let k = desc.generators.len();
    if k == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let (_, carries) = ext_generator_cocycles(g, m)?;
    let coords = ClassCoords::new(g, m, &desc.generators);
    let mut relations: Vec<Vec<i128>> = Vec::new();
    for c in &carries {
        let co = coords
            .coords(c)
            .ok_or_else(|| Error::Cocycle("carry class escaped the h2 generators".into()))?;
        relations.push(co.iter().map(|&v| v as i128).collect());
    }
    for (i, &d) in desc.invariants.iter().enumerate() {
        let mut rel = vec![0i128; k];
        rel[i] = d as i128;
        relations.push(rel);
    }
    let (invs, combos) = crate::zmod::quotient_invariants(k, &relations, m as u64);
    let mut gens: Vec<Cocycle> = combos
        .iter()
        .map(|combo| {
            let mut acc = Cocycle::zero(g.order(), m);
            for (i, &c) in combo.iter().enumerate() {
                acc = acc.add(&desc.generators[i].scale(c.rem_euclid(m as i128) as i64));
            }
            acc
        })
        .collect();
    // Prefer lifts whose order in H^2(G, Z/m) equals their multiplier order:
    // adjust by carry classes when the search space is small.
    let space: u64 = desc.ext_shape.iter().product();
    if space > 1 && space <= 256 {
        let tester = CoboundaryTester::new(g, m);
        for (gen, &d) in gens.iter_mut().zip(&invs) {
            if tester.class_order(gen) as u64 == d {
                continue;
            }
            let mut idx = vec![0u64; carries.len()];
            'search: loop {
                // Advance the mixed-radix counter over carry multiples.
                for (i, v) in idx.iter_mut().enumerate() {
                    *v += 1;
                    if *v < desc.ext_shape[i] {
                        break;
                    }
                    *v = 0;
                    if i + 1 == desc.ext_shape.len() {
                        break 'search;
                    }
                }
                let mut cand = gen.clone();
                for (i, &v) in idx.iter().enumerate() {
                    cand = cand.add(&carries[i].scale(v as i64));
                }
                if tester.class_order(&cand) as u64 == d {
                    *gen = cand;
                    break;
                }
            }
        }
    }
    Ok((invs, gens))
}

/// Index of the table variable for the pair (x, y), both non-identity.
#[inline]
fn var(n: usize, x: usize, y: usize) -> usize {
    (x - 1) * (n - 1) + (y - 1)
}

/// Equation row for the triple (x, y, z): the linear form whose vanishing is
/// t(x,y) + t(xy,z) - t(y,z) - t(x,yz) = 0, with identity-argument terms
/// dropped.
fn equation_row(g: &FiniteGroup, m: u64, x: usize, y: usize, z: usize) -> Vec<u32> {
    let n = g.order();
    let mut row = vec![0u32; (n - 1) * (n - 1)];
    let mut bump = |a: usize, b: usize, s: u64| {
        if a != 0 && b != 0 {
            let v = &mut row[var(n, a, b)];
            *v = ((*v as u64 + s) % m) as u32;
        }
    };
    bump(x, y, 1);
    bump(g.mul(x, y), z, 1);
    bump(y, z, m - 1);
    bump(x, g.mul(y, z), m - 1);
    row
}

/// Residual of the triple's equation on a concrete assignment vector.
#[inline]
fn residual(g: &FiniteGroup, m: u64, v: &[u32], x: usize, y: usize, z: usize) -> u64 {
    let n = g.order();
    let look = |a: usize, b: usize| -> u64 {
        if a == 0 || b == 0 {
            0
        } else {
            v[var(n, a, b)] as u64
        }
    };
    (look(x, y) + look(g.mul(x, y), z) + 2 * m - look(y, z) - look(x, g.mul(y, z))) % m
}

fn h2_prime_power(g: &FiniteGroup, pp: PrimePower) -> Result<Vec<(u64, Cocycle)>> {
    let n = g.order();
    let m = pp.m;
    let width = (n - 1) * (n - 1);
    let t_count = (n - 1) * (n - 1) * (n - 1);

    let mut triples: Vec<u32> = (0..t_count as u32).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6832_5f70 ^ (n as u64) << 8 ^ m);
    triples.shuffle(&mut rng);
    let decode = |t: u32| -> (usize, usize, usize) {
        let t = t as usize;
        let z = t % (n - 1) + 1;
        let y = (t / (n - 1)) % (n - 1) + 1;
        let x = t / ((n - 1) * (n - 1)) + 1;
        (x, y, z)
    };

    let mut eqs = Howell::new(pp, width);
    for &t in triples.iter().take((4 * width).min(t_count)) {
        let (x, y, z) = decode(t);
        eqs.insert(equation_row(g, m, x, y, z));
    }
    let kernel = loop {
        let kernel = kernel_of_equations(&eqs);
        let mut bad: Vec<(usize, usize, usize)> = Vec::new();
        'scan: for t in 0..t_count as u32 {
            let (x, y, z) = decode(t);
            for v in &kernel {
                if residual(g, m, v, x, y, z) != 0 {
                    bad.push((x, y, z));
                    if bad.len() >= 256 {
                        break 'scan;
                    }
                    break;
                }
            }
        }
        if bad.is_empty() {
            break kernel;
        }
        for (x, y, z) in bad {
            eqs.insert(equation_row(g, m, x, y, z));
        }
    };

    // Present Z^2 by the kernel generators; relations are the coboundaries
    // (expressed in those generators) and m times each generator.
    let r = kernel.len();
    let solver = LinSolver::new(pp, width, &kernel);
    let mut relations: Vec<Vec<i128>> = Vec::new();
    for b in 1..n {
        let mut delta = vec![0u32; width];
        // db(x, y) = [x = b] + [y = b] - [xy = b] over non-identity pairs.
        for x in 1..n {
            for y in 1..n {
                let mut v = 0u64;
                if x == b {
                    v += 1;
                }
                if y == b {
                    v += 1;
                }
                if g.mul(x, y) == b {
                    v += m - 1;
                }
                delta[var(n, x, y)] = (v % m) as u32;
            }
        }
        let coords = solver
            .solve(&delta)
            .ok_or_else(|| Error::Cocycle("coboundary escaped the cocycle kernel".into()))?;
        relations.push(coords.iter().map(|&c| c as i128).collect());
    }
    for i in 0..r {
        let mut rel = vec![0i128; r];
        rel[i] = m as i128;
        relations.push(rel);
    }
    // The kernel generators need not be free over Z/p^e (a Howell basis can
    // carry leading coefficients divisible by p), so their syzygies are
    // relations of the presentation too.
    let mut syzygy_eqs = Howell::new(pp, r);
    for w in 0..width {
        syzygy_eqs.insert((0..r).map(|i| kernel[i][w]).collect());
    }
    for s in kernel_of_equations(&syzygy_eqs) {
        relations.push(s.iter().map(|&c| c as i128).collect());
    }
    let (invs, gen_combos) = crate::zmod::quotient_invariants(r, &relations, m);

    let mut out = Vec::new();
    for (d, combo) in invs.iter().zip(&gen_combos) {
        let mut vecsum = vec![0u64; width];
        for (i, &c) in combo.iter().enumerate() {
            let c = c.rem_euclid(m as i128) as u64;
            for (slot, &kv) in vecsum.iter_mut().zip(&kernel[i]) {
                *slot = (*slot + c * kv as u64) % m;
            }
        }
        let mut table = vec![0u32; n * n];
        for x in 1..n {
            for y in 1..n {
                table[x * n + y] = vecsum[var(n, x, y)] as u32;
            }
        }
        let cocycle = Cocycle::from_table(n, m as u32, table);
        debug_assert!(cocycle.validate(g).is_ok());
        out.push((*d, cocycle));
    }
    out.reverse(); // largest order first, for primary-part merging
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::CoboundaryTester;
    use crate::group::{catalog_build, cyclic, direct_product};

    #[test]
    fn cyclic_groups_match_gcd_rule() {
        for n in 1..=12usize {
            let g = cyclic(n);
            for m in 1..=12u32 {
                let desc = h2_bruteforce(&g, m).unwrap();
                let d = num_integer::gcd(n as u64, m as u64);
                let expect: Vec<u64> = if d == 1 { vec![] } else { vec![d] };
                assert_eq!(desc.invariants, expect, "C{n} mod {m}");
            }
        }
    }

    #[test]
    fn c6_mod_4_and_klein_mod_2() {
        let desc = h2_bruteforce(&cyclic(6), 4).unwrap();
        assert_eq!(desc.invariants, vec![2]);
        let v4 = catalog_build("ElemAb2", &[2]).unwrap();
        let desc = h2_bruteforce(&v4, 2).unwrap();
        assert_eq!(desc.invariants, vec![2, 2, 2]);
    }

    #[test]
    fn elementary_abelian_p3_has_full_rank_part() {
        let g = catalog_build("ElemAb2", &[3]).unwrap();
        let desc = h2_bruteforce(&g, 3).unwrap();
        assert_eq!(desc.invariants, vec![3, 3, 3]);
        assert_eq!(desc.ext_shape, vec![3, 3]);
        // At least one generator must be non-symmetric: the multiplier part
        // of C3 x C3 is detected by asymmetry of the cocycle table.
        let asym = desc
            .generators
            .iter()
            .filter(|c| {
                (0..9usize).any(|x| (0..9usize).any(|y| c.get(x, y) != c.get(y, x)))
            })
            .count();
        assert!(asym >= 1, "expected a non-symmetric generator");
    }

    #[test]
    fn generators_realize_their_invariant_orders() {
        let g = direct_product(
            &crate::group::named_cyclic(2, "x"),
            &crate::group::named_cyclic(4, "y"),
        )
        .unwrap();
        let desc = h2_bruteforce(&g, 4).unwrap();
        assert_eq!(desc.invariants, vec![2, 2, 4]);
        let tester = CoboundaryTester::new(&g, 4);
        for (d, c) in desc.invariants.iter().zip(&desc.generators) {
            c.validate(&g).unwrap();
            assert_eq!(tester.class_order(c) as u64, *d);
        }
        // Independence: coordinates (1,1,1) and (0,1,2) give distinct classes.
        let a = desc.combine(&[1, 1, 1]);
        let b = desc.combine(&[0, 1, 2]);
        assert!(!tester.same_class(&a, &b));
        assert!(tester.same_class(&a.add(&b.neg()), &desc.combine(&[1, 0, 3])));
    }

    #[test]
    fn composite_modulus_merges_primary_parts() {
        let g = cyclic(6);
        let desc = h2_bruteforce(&g, 6).unwrap();
        assert_eq!(desc.invariants, vec![6]);
        let tester = CoboundaryTester::new(&g, 6);
        assert_eq!(tester.class_order(&desc.generators[0]), 6);
        assert_eq!(tester.class_order(&desc.generators[0].scale(2)), 3);
        assert_eq!(tester.class_order(&desc.generators[0].scale(3)), 2);
    }

    #[test]
    fn nonabelian_small_groups() {
        // S3 as C3 x| C2 with inversion.
        let c3 = crate::group::named_cyclic(3, "r");
        let c2 = crate::group::named_cyclic(2, "s");
        let inv_map: Vec<u32> = (0..3u32).map(|i| (3 - i) % 3).collect();
        let action =
            crate::group::action_from_presentation(&c2, &c3, &[(1, inv_map)]).unwrap();
        let s3 = crate::group::semidirect("S3", &c3, &c2, &action).unwrap();
        for (m, expect) in [(2u32, vec![2u64]), (3, vec![]), (4, vec![2]), (6, vec![2])] {
            let desc = h2_bruteforce(&s3, m).unwrap();
            assert_eq!(desc.invariants, expect, "S3 mod {m}");
        }
        // Heisenberg group mod p: Ext part (Z/3)^2 times multiplier part (Z/3)^2.
        let h = catalog_build("Heis", &[3]).unwrap();
        let desc = h2_bruteforce(&h, 3).unwrap();
        assert_eq!(desc.invariants, vec![3, 3, 3, 3]);
        assert_eq!(desc.ext_shape, vec![3, 3]);
    }

    #[test]
    fn multipliers_of_small_groups() {
        let m = multiplier_bruteforce(&cyclic(6)).unwrap();
        assert!(m.invariants.is_empty());
        assert_eq!(m.modulus, 1);

        let v4 = catalog_build("ElemAb2", &[2]).unwrap();
        let m = multiplier_bruteforce(&v4).unwrap();
        assert_eq!(m.invariants, vec![2]);
        assert_eq!(m.modulus, 2);

        let e9 = catalog_build("ElemAb2", &[3]).unwrap();
        let m = multiplier_bruteforce(&e9).unwrap();
        assert_eq!(m.invariants, vec![3]);
        // The generator must pair the two factors nontrivially: it is the
        // class with u_x u_y != u_y u_x for independent x, y.
        assert_ne!(m.generators[0].pairing(&e9, 3, 1), 0);

        let heis = catalog_build("Heis", &[3]).unwrap();
        let m = multiplier_bruteforce(&heis).unwrap();
        assert_eq!(m.invariants, vec![3, 3]);
        assert_eq!(m.modulus, 3);

        let es = catalog_build("ExtraSpecialExpP2", &[3]).unwrap();
        let m = multiplier_bruteforce(&es).unwrap();
        assert!(m.invariants.is_empty());

        let c2c4 = direct_product(
            &crate::group::named_cyclic(2, "x"),
            &crate::group::named_cyclic(4, "y"),
        )
        .unwrap();
        let m = multiplier_bruteforce(&c2c4).unwrap();
        assert_eq!(m.invariants, vec![2]);

        // Dihedral of order 8: multiplier of order 2 even though H^2 with
        // small coefficients is bigger.
        let c4 = crate::group::named_cyclic(4, "r");
        let c2 = crate::group::named_cyclic(2, "s");
        let inv_map: Vec<u32> = (0..4u32).map(|i| (4 - i) % 4).collect();
        let action =
            crate::group::action_from_presentation(&c2, &c4, &[(1, inv_map)]).unwrap();
        let d4 = crate::group::semidirect("D4", &c4, &c2, &action).unwrap();
        let m = multiplier_bruteforce(&d4).unwrap();
        assert_eq!(m.invariants, vec![2]);
    }

    #[test]
    fn multiplier_generators_have_the_right_class_orders() {
        // For these groups the refinement finds lifts whose order in
        // H^2(G, Z/m) matches the multiplier order exactly.
        for (name, p, expect) in [("ElemAb2", 3u64, vec![3u64]), ("Heis", 3, vec![3, 3])] {
            let g = catalog_build(name, &[p]).unwrap();
            let m = multiplier_bruteforce(&g).unwrap();
            assert_eq!(m.invariants, expect);
            let tester = CoboundaryTester::new(&g, m.modulus);
            for (d, c) in m.invariants.iter().zip(&m.generators) {
                c.validate(&g).unwrap();
                assert_eq!(tester.class_order(c) as u64, *d);
            }
        }
    }
}
