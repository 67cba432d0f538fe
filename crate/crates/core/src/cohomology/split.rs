//! Schur multipliers of coprime split extensions.
//!
//! For G = N x| T with gcd(|N|, |T|) = 1 the multiplier splits as
//! M(G) = M(T) x M(N)^T.  The T-part is computed on the complement and
//! pulled back along the projection; the N-part is the subgroup of classes
//! of M(N) fixed by conjugation, found by transporting generator cocycles
//! through the action and solving for their coordinates.

use super::h2::multiplier_bruteforce;
use super::{ClassCoords, Cocycle};
use crate::group::{FiniteGroup, GroupHom};
use crate::zmod::{prime_power_factor, product_invariant_factors};
use crate::{Error, Result};

/// Cap on the size of M(N) for the fixed-part enumeration.
const FIXED_PART_CAP: u64 = 4096;

#[derive(Debug)]
pub struct SplitMultiplier {
    /// Invariant factors of the whole multiplier (ascending divisibility).
    pub invariants: Vec<u64>,
    /// Invariants of the part pulled back from the complement.
    pub t_part: Vec<u64>,
    /// Invariants of the T-fixed part of the normal factor's multiplier.
    pub n_fixed_part: Vec<u64>,
    /// Generators of the complement part inflated to the product group;
    /// class orders follow `t_part`, values mod `t_modulus`.
    pub t_generators: Vec<Cocycle>,
    pub t_modulus: u32,
}

/// Multiplier of a group assembled as `N x| T` with coprime factor orders,
/// using this crate's semidirect index convention: element (n, t) sits at
/// index n * |T| + t, so T is the first |T| indices and N is the indices
/// divisible by |T|.
pub fn coprime_split_multiplier(g: &FiniteGroup, t_order: usize) -> Result<SplitMultiplier> {
    let order = g.order();
    if t_order == 0 || order % t_order != 0 {
        return Err(Error::Invalid(format!(
            "complement order {t_order} does not divide the group order {order}"
        )));
    }
    let n_order = order / t_order;
    if num_integer::gcd(n_order as u64, t_order as u64) != 1 {
        return Err(Error::Invalid(format!(
            "factor orders {n_order} and {t_order} are not coprime"
        )));
    }
    let t_elems: Vec<usize> = (0..t_order).collect();
    let n_elems: Vec<usize> = (0..n_order).map(|i| i * t_order).collect();
    let (t_sub, _) = g.subgroup(format!("{}|T", g.label()), &t_elems)?;
    let (n_sub, _) = g.subgroup(format!("{}|N", g.label()), &n_elems)?;
    if !g.is_normal(&n_elems) {
        return Err(Error::Group("normal factor is not normal".into()));
    }

    let mt = multiplier_bruteforce(&t_sub)?;
    // Projection (n, t) -> t is a homomorphism onto the complement.
    let pi = GroupHom::new(g, &t_sub, (0..order).map(|x| (x % t_order) as u32).collect())?;
    let t_generators: Vec<Cocycle> = mt.generators.iter().map(|c| c.inflate(&pi)).collect();

    let mn = multiplier_bruteforce(&n_sub)?;
    let n_fixed_part = if mn.invariants.is_empty() {
        Vec::new()
    } else {
        fixed_classes(g, &n_sub, t_order, &mn.invariants, mn.modulus, &mn.generators)?
    };

    let invariants = product_invariant_factors(&mt.invariants, &n_fixed_part);
    Ok(SplitMultiplier {
        invariants,
        t_part: mt.invariants,
        n_fixed_part,
        t_generators,
        t_modulus: mt.modulus,
    })
}

/// Invariants of the subgroup of classes of M(N) fixed by conjugation by
/// every element of the complement.
fn fixed_classes(
    g: &FiniteGroup,
    n_sub: &FiniteGroup,
    t_order: usize,
    orders: &[u64],
    modulus: u32,
    gens: &[Cocycle],
) -> Result<Vec<u64>> {
    let k = orders.len();
    let nn = n_sub.order();
    // Transported classes are read in the quotient of H^2(N, Z/m) by the
    // symmetric (carry) span: conjugation preserves that span but not the
    // particular complement the generators were drawn from, so the solve
    // happens over generators plus carries and keeps only the generator
    // coordinates, which are well-defined mod orders[j] in the quotient.
    let (_, carries) = super::ext_generator_cocycles(n_sub, modulus)?;
    let mut span = gens.to_vec();
    span.extend(carries.iter().cloned());
    let coords = ClassCoords::new(n_sub, modulus, &span);
    let mut mats: Vec<Vec<Vec<u64>>> = Vec::new();
    for t in 1..t_order {
        let ti = g.inv(t);
        let mut perm = Vec::with_capacity(nn);
        for i in 0..nn {
            let moved = g.mul(g.mul(t, i * t_order), ti);
            if moved % t_order != 0 {
                return Err(Error::Group("conjugation leaves the normal factor".into()));
            }
            perm.push((moved / t_order) as u32);
        }
        let mut mat = Vec::with_capacity(k);
        for gen in gens {
            let co = coords.coords(&gen.relabel(&perm)).ok_or_else(|| {
                Error::Cocycle("transported class escaped the generator span".into())
            })?;
            mat.push(co[..k].to_vec());
        }
        mats.push(mat);
    }

    let size: u64 = orders.iter().product();
    if size > FIXED_PART_CAP {
        return Err(Error::CapExceeded(format!(
            "fixed-part enumeration over {size} classes (cap {FIXED_PART_CAP})"
        )));
    }
    let mut fixed: Vec<Vec<u64>> = Vec::new();
    let mut x = vec![0u64; k];
    loop {
        let ok = mats.iter().all(|mat| {
            (0..k).all(|j| {
                let mut s = 0u128;
                for i in 0..k {
                    s += x[i] as u128 * mat[i][j] as u128;
                }
                s % orders[j] as u128 == (x[j] % orders[j]) as u128
            })
        });
        if ok {
            fixed.push(x.clone());
        }
        let mut done = true;
        for (xi, &d) in x.iter_mut().zip(orders) {
            *xi += 1;
            if *xi < d {
                done = false;
                break;
            }
            *xi = 0;
        }
        if done {
            break;
        }
    }
    invariants_from_elements(orders, &fixed)
}

/// Invariant factors of a subgroup of a product of cyclic groups, recovered
/// from the element list by counting solutions of p^j x = 0 per prime.
fn invariants_from_elements(orders: &[u64], elems: &[Vec<u64>]) -> Result<Vec<u64>> {
    let lcm = orders.iter().fold(1u64, |acc, &d| num_integer::lcm(acc, d));
    let mut out: Vec<u64> = Vec::new();
    for (p, emax) in prime_power_factor(lcm) {
        let mut counts = vec![1u64];
        for j in 1..=emax {
            let pj = p.pow(j);
            let cnt = elems
                .iter()
                .filter(|x| {
                    x.iter()
                        .zip(orders)
                        .all(|(&xi, &d)| (xi as u128 * pj as u128) % d as u128 == 0)
                })
                .count() as u64;
            counts.push(cnt);
        }
        // r[j] = number of cyclic factors of order >= p^j.
        let mut rs = Vec::with_capacity(emax as usize + 1);
        for j in 1..=emax as usize {
            if counts[j] % counts[j - 1] != 0 {
                return Err(Error::Invalid("fixed set is not a subgroup".into()));
            }
            let mut ratio = counts[j] / counts[j - 1];
            let mut r = 0u32;
            while ratio > 1 {
                if ratio % p != 0 {
                    return Err(Error::Invalid("fixed set is not a subgroup".into()));
                }
                ratio /= p;
                r += 1;
            }
            rs.push(r);
        }
        rs.push(0);
        let mut part: Vec<u64> = Vec::new();
        for j in (1..=emax as usize).rev() {
            for _ in 0..rs[j - 1].saturating_sub(rs[j]) {
                part.push(p.pow(j as u32));
            }
        }
        out = product_invariant_factors(&out, &part);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::CoboundaryTester;
    use crate::group::{
        action_from_presentation, catalog_build, cyclic, direct_product, named_cyclic, semidirect,
    };

    fn c3c3() -> crate::group::FiniteGroup {
        direct_product(&named_cyclic(3, "x"), &named_cyclic(3, "y")).unwrap()
    }

    #[test]
    fn trivial_complement_returns_the_normal_multiplier() {
        let n = c3c3();
        let g = semidirect("G", &n, &cyclic(1), &[(0..9u32).collect()]).unwrap();
        let s = coprime_split_multiplier(&g, 1).unwrap();
        assert_eq!(s.invariants, vec![3]);
        assert!(s.t_part.is_empty());
        assert_eq!(s.n_fixed_part, vec![3]);
    }

    #[test]
    fn inversion_on_both_factors_fixes_the_pairing_class() {
        // C2 inverting both C3 factors multiplies the pairing class by
        // (-1)(-1) = 1, so the whole multiplier of N survives.
        let n = c3c3();
        let c2 = cyclic(2);
        let invmap: Vec<u32> = (0..9u32)
            .map(|idx| {
                let (i, j) = (idx / 3, idx % 3);
                ((3 - i) % 3) * 3 + (3 - j) % 3
            })
            .collect();
        let action = action_from_presentation(&c2, &n, &[(1, invmap)]).unwrap();
        let g = semidirect("G", &n, &c2, &action).unwrap();
        let s = coprime_split_multiplier(&g, 2).unwrap();
        assert_eq!(s.n_fixed_part, vec![3]);
        assert!(s.t_part.is_empty());
        assert_eq!(s.invariants, vec![3]);
    }

    #[test]
    fn inversion_on_one_factor_kills_the_pairing_class() {
        let n = c3c3();
        let c2 = cyclic(2);
        let invmap: Vec<u32> = (0..9u32)
            .map(|idx| {
                let (i, j) = (idx / 3, idx % 3);
                ((3 - i) % 3) * 3 + j
            })
            .collect();
        let action = action_from_presentation(&c2, &n, &[(1, invmap)]).unwrap();
        let g = semidirect("G", &n, &c2, &action).unwrap();
        let s = coprime_split_multiplier(&g, 2).unwrap();
        assert!(s.n_fixed_part.is_empty());
        assert!(s.invariants.is_empty());
    }

    #[test]
    fn coprime_factors_with_multipliers_on_both_sides() {
        // (C3 x C3) x (C2 x C2) as a trivial-action semidirect product:
        // multiplier C3 x C2 = C6.
        let n = c3c3();
        let t = direct_product(&named_cyclic(2, "u"), &named_cyclic(2, "v")).unwrap();
        let action: Vec<Vec<u32>> = (0..4).map(|_| (0..9u32).collect()).collect();
        let g = semidirect("G", &n, &t, &action).unwrap();
        let s = coprime_split_multiplier(&g, 4).unwrap();
        assert_eq!(s.t_part, vec![2]);
        assert_eq!(s.n_fixed_part, vec![3]);
        assert_eq!(s.invariants, vec![6]);
        // The inflated complement generator is a valid cocycle on G with the
        // right class order.
        assert_eq!(s.t_generators.len(), 1);
        s.t_generators[0].validate(&g).unwrap();
        let tester = CoboundaryTester::new(&g, s.t_modulus);
        assert_eq!(tester.class_order(&s.t_generators[0]), 2);
    }

    #[test]
    fn rejects_non_coprime_factors() {
        let n = named_cyclic(2, "x");
        let g = semidirect("G", &n, &cyclic(2), &[(0..2u32).collect(), (0..2u32).collect()])
            .unwrap();
        assert!(coprime_split_multiplier(&g, 2).is_err());
    }

    #[test]
    fn heisenberg_as_normal_factor_with_coprime_scaling() {
        // C13 acts trivially on Heis(3) in a direct product: everything fixed.
        let h = catalog_build("Heis", &[3]).unwrap();
        let c13 = cyclic(13);
        let action: Vec<Vec<u32>> = (0..13).map(|_| (0..27u32).collect()).collect();
        let g = semidirect("G", &h, &c13, &action).unwrap();
        let s = coprime_split_multiplier(&g, 13).unwrap();
        assert_eq!(s.n_fixed_part, vec![3, 3]);
        assert_eq!(s.invariants, vec![3, 3]);
    }
}
