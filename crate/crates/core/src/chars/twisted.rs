//! Wedderburn degree multisets of the complex group algebra and its twisted
//! forms.
//!
//! A twisted algebra for a class alpha of finite order is read off a central
//! extension: extending G by Z/m along a representing cocycle produces a
//! group whose algebra splits into m blocks graded by the central character
//! of the kernel generator, and block j is the twisted algebra of alpha^j.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::cohomology::{twist_to_cocycle, ClassSpec, Cocycle, MultiplierDesc};
use crate::error::{Error, Result};
use crate::group::{central_extension, FiniteGroup};

use super::table::{character_degrees, class_data, mod_characters, pow_mod};

/// A multiset of matrix-block degrees; the complex Wedderburn shape of a
/// twisted or untwisted group algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedderburnC {
    degrees: Vec<u64>,
}

impl WedderburnC {
    pub fn from_degrees(mut degrees: Vec<u64>) -> WedderburnC {
        degrees.sort_unstable();
        WedderburnC { degrees }
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Total dimension, i.e. the sum of squared degrees.
    pub fn dimension(&self) -> u64 {
        self.degrees.iter().map(|&d| d * d).sum()
    }

    pub fn degree_gcd(&self) -> u64 {
        self.degrees.iter().fold(0u64, |a, &d| num_integer::gcd(a, d))
    }

    /// (degree, multiplicity) pairs, degrees ascending.
    pub fn counts(&self) -> Vec<(u64, usize)> {
        let mut map: BTreeMap<u64, usize> = BTreeMap::new();
        for &d in &self.degrees {
            *map.entry(d).or_insert(0) += 1;
        }
        map.into_iter().collect()
    }

    pub fn contains_degree(&self, d: u64) -> bool {
        self.degrees.binary_search(&d).is_ok()
    }
}

// The display form writes each degree with its multiplicity, e.g.
// "{1^16, 2^28, 4^10}".
impl fmt::Display for WedderburnC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, m)) in self.counts().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if m == 1 {
                write!(f, "{d}")?;
            } else {
                write!(f, "{d}^{m}")?;
            }
        }
        write!(f, "}}")
    }
}

impl Serialize for WedderburnC {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let counts = self.counts();
        let mut seq = s.serialize_seq(Some(counts.len()))?;
        for (d, m) in counts {
            seq.serialize_element(&[d, m as u64])?;
        }
        seq.end()
    }
}

/// Degrees of the complex group algebra of G.
pub fn wedderburn_c(g: &FiniteGroup) -> Result<WedderburnC> {
    Ok(WedderburnC::from_degrees(character_degrees(g)?))
}

/// Split the extension of G along `alpha` into the m twisted-block degree
/// multisets: entry j is the Wedderburn shape of the alpha^j twist.
pub fn complex_block_sizes(g: &FiniteGroup, alpha: &Cocycle) -> Result<Vec<WedderburnC>> {
    let ext = central_extension(g, alpha)?;
    let m = ext.modulus;
    let total = &ext.total;
    if total.element_order(ext.kernel_gen) != m {
        return Err(Error::Invalid(
            "internal: extension kernel generator has the wrong order".into(),
        ));
    }
    let cd = class_data(total);
    let mc = mod_characters(total, &cd)?;
    let (l, w) = (mc.l, mc.w);
    let zc = cd.class_of[ext.kernel_gen];
    let zeta = pow_mod(w, (l - 1) / m, l);
    let mut blocks: Vec<Vec<u64>> = vec![Vec::new(); m as usize];
    for (r, &deg) in mc.degrees.iter().enumerate() {
        let val = mc.values[r][zc];
        let mut root = deg % l;
        let mut found = None;
        for j in 0..m {
            if root == val {
                found = Some(j as usize);
                break;
            }
            root = root * zeta % l;
        }
        let Some(j) = found else {
            return Err(Error::Invalid(
                "internal: central character is not a kernel root of unity".into(),
            ));
        };
        blocks[j].push(deg);
    }
    let dim = g.order() as u64;
    for (j, b) in blocks.iter().enumerate() {
        let got: u64 = b.iter().map(|&d| d * d).sum();
        if got != dim {
            return Err(Error::Invalid(format!(
                "internal: block {j} has dimension {got}, expected {dim}"
            )));
        }
    }
    Ok(blocks.into_iter().map(WedderburnC::from_degrees).collect())
}

/// Order of the class in the multiplier (the ext part does not contribute
/// over C, where the coefficient group is divisible).
pub fn complex_class_order(desc: &MultiplierDesc, class: &ClassSpec) -> u64 {
    desc.hom_invariants()
        .iter()
        .zip(&class.hom_part)
        .fold(1u64, |acc, (&d, &c)| num_integer::lcm(acc, d / num_integer::gcd(d, c % d)))
}

fn require_trivial_ext(class: &ClassSpec) -> Result<()> {
    for (name, tok) in &class.ext_part {
        if !tok.is_one() {
            return Err(Error::Unsupported(format!(
                "power twist on u({name}) has no effect over the complex numbers \
                 (the coefficient group is divisible); restate the class with \
                 bracket relations only"
            )));
        }
    }
    Ok(())
}

fn materialize(g: &FiniteGroup, desc: &MultiplierDesc, class: &ClassSpec) -> Result<Cocycle> {
    twist_to_cocycle(g, desc, class)?.ok_or_else(|| {
        Error::Unsupported(format!(
            "no materialized multiplier generators are on record for {}",
            desc.group_label
        ))
    })
}

/// Degree multiset of the twisted complex group algebra for `class`.
pub fn twisted_wedderburn_c(
    g: &FiniteGroup,
    desc: &MultiplierDesc,
    class: &ClassSpec,
) -> Result<WedderburnC> {
    require_trivial_ext(class)?;
    if complex_class_order(desc, class) == 1 {
        return wedderburn_c(g);
    }
    let alpha = materialize(g, desc, class)?;
    let (reduced, _) = alpha.value_reduced();
    let blocks = complex_block_sizes(g, &reduced)?;
    Ok(blocks.into_iter().nth(1).unwrap())
}

/// gcd of the twisted block degrees.
pub fn c_gcd(g: &FiniteGroup, desc: &MultiplierDesc, class: &ClassSpec) -> Result<u64> {
    Ok(twisted_wedderburn_c(g, desc, class)?.degree_gcd())
}

#[derive(Debug, Clone, Serialize)]
pub struct PowerCheckEntry {
    pub r: u64,
    pub coprime: bool,
    pub multiset_equal: bool,
    pub c_base: u64,
    pub c_power: u64,
    pub ok: bool,
}

/// Outcome of checking, for every power r of a class of order n, that the
/// twisted algebra is isomorphic to the base twist exactly when gcd(r, n) = 1,
/// and that the degree gcd strictly drops otherwise.
#[derive(Debug, Clone, Serialize)]
pub struct PowerTheoremReport {
    pub class: String,
    pub order: u64,
    pub base: WedderburnC,
    pub entries: Vec<PowerCheckEntry>,
    pub pass: bool,
}

pub fn power_theorem_check(
    g: &FiniteGroup,
    desc: &MultiplierDesc,
    class: &ClassSpec,
) -> Result<PowerTheoremReport> {
    require_trivial_ext(class)?;
    let n = complex_class_order(desc, class);
    if n == 1 {
        return Ok(PowerTheoremReport {
            class: class.to_string(),
            order: 1,
            base: wedderburn_c(g)?,
            entries: Vec::new(),
            pass: true,
        });
    }
    let alpha = materialize(g, desc, class)?;
    let (reduced, d) = alpha.value_reduced();
    let blocks = complex_block_sizes(g, &reduced)?;
    let base = blocks[1 % d as usize].clone();
    let c_base = base.degree_gcd();
    let mut entries = Vec::new();
    let mut pass = true;
    for r in 1..n {
        let b = &blocks[(r % d as u64) as usize];
        let coprime = num_integer::gcd(r, n) == 1;
        let multiset_equal = *b == base;
        let c_power = b.degree_gcd();
        let ok = multiset_equal == coprime && (coprime || c_base > c_power);
        pass &= ok;
        entries.push(PowerCheckEntry { r, coprime, multiset_equal, c_base, c_power, ok });
    }
    Ok(PowerTheoremReport { class: class.to_string(), order: n, base, entries, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{multiplier_desc, parse_twist_spec};
    use crate::group::catalog_build;

    fn class_of(g: &FiniteGroup, text: &str) -> (MultiplierDesc, ClassSpec) {
        let desc = multiplier_desc(g).unwrap();
        let class = parse_twist_spec(text, g).unwrap();
        (desc, class)
    }

    #[test]
    fn commutator_twist_of_the_rank_two_group() {
        // The twisted algebra of the nondegenerate pairing class on C3 x C3
        // is a full 3x3 matrix ring.
        let g = catalog_build("ElemAb2", &[3]).unwrap();
        let (desc, class) = class_of(&g, "[u(a),u(b)] = zeta");
        let w = twisted_wedderburn_c(&g, &desc, &class).unwrap();
        assert_eq!(w.degrees(), [3]);
        assert_eq!(w.to_string(), "{3}");
        assert_eq!(c_gcd(&g, &desc, &class).unwrap(), 3);
    }

    #[test]
    fn trivial_class_is_the_plain_group_algebra() {
        let g = catalog_build("Heis", &[3]).unwrap();
        let desc = multiplier_desc(&g).unwrap();
        let trivial = ClassSpec::trivial(&desc);
        let a = twisted_wedderburn_c(&g, &desc, &trivial).unwrap();
        let b = wedderburn_c(&g).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.degree_gcd(), 1);
        assert_eq!(b.dimension(), 27);
    }

    #[test]
    fn blocks_partition_the_cover_algebra() {
        let g = catalog_build("ElemAb2", &[3]).unwrap();
        let (desc, class) = class_of(&g, "[u(a),u(b)] = zeta");
        let alpha = twist_to_cocycle(&g, &desc, &class).unwrap().unwrap();
        let blocks = complex_block_sizes(&g, &alpha).unwrap();
        assert_eq!(blocks.len(), 3);
        // Block zero is the untwisted algebra; all blocks have dimension 9.
        assert_eq!(blocks[0], wedderburn_c(&g).unwrap());
        for b in &blocks {
            assert_eq!(b.dimension(), 9);
        }
        // The union of the blocks is the cover's multiset.
        let ext = crate::group::central_extension(&g, &alpha).unwrap();
        let mut all: Vec<u64> = blocks.iter().flat_map(|b| b.degrees().to_vec()).collect();
        all.sort_unstable();
        assert_eq!(WedderburnC::from_degrees(all), wedderburn_c(&ext.total).unwrap());
    }

    #[test]
    fn commutative_component_only_for_the_trivial_class() {
        // Over C, a degree-1 block appears exactly for the trivial class.
        for (name, params) in [("ElemAb2", vec![3u64]), ("Heis", vec![3])] {
            let g = catalog_build(name, &params).unwrap();
            let desc = multiplier_desc(&g).unwrap();
            let invs = desc.hom_invariants().to_vec();
            let mut tuple = vec![0u64; invs.len()];
            loop {
                let class = ClassSpec { hom_part: tuple.clone(), ..ClassSpec::trivial(&desc) };
                let w = twisted_wedderburn_c(&g, &desc, &class).unwrap();
                let trivial = tuple.iter().all(|&c| c == 0);
                assert_eq!(
                    w.contains_degree(1),
                    trivial,
                    "{name}: class {tuple:?} linear-block mismatch"
                );
                // Advance the tuple or stop.
                let mut k = 0;
                loop {
                    if k == tuple.len() {
                        break;
                    }
                    tuple[k] += 1;
                    if tuple[k] < invs[k] {
                        break;
                    }
                    tuple[k] = 0;
                    k += 1;
                }
                if k == tuple.len() {
                    break;
                }
            }
        }
    }

    #[test]
    fn higgs_gcd_facts_on_small_catalog_classes() {
        // The class order divides the degree gcd, and every prime of the gcd
        // divides the class order.
        for (name, params, text) in [
            ("ElemAb2", vec![3u64], "[u(a),u(b)] = zeta"),
            ("ElemAb2", vec![5], "[u(a),u(b)] = zeta"),
            ("Heis", vec![3], "[u(c),u(a)] = zeta"),
        ] {
            let g = catalog_build(name, &params).unwrap();
            let (desc, class) = class_of(&g, text);
            let n = complex_class_order(&desc, &class);
            let c = c_gcd(&g, &desc, &class).unwrap();
            assert_eq!(c % n, 0, "{name}: order {n} does not divide c = {c}");
            let mut rest = c;
            for p in 2..=c {
                if p * p > c && rest > 1 {
                    break;
                }
                while rest % p == 0 {
                    assert_eq!(n % p, 0, "{name}: prime {p} of c does not divide {n}");
                    rest /= p;
                }
            }
        }
    }

    #[test]
    fn power_check_passes_on_rank_two_groups() {
        let g3 = catalog_build("ElemAb2", &[3]).unwrap();
        let (desc3, class3) = class_of(&g3, "[u(a),u(b)] = zeta");
        let rep = power_theorem_check(&g3, &desc3, &class3).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.order, 3);
        assert_eq!(rep.entries.len(), 2);
        assert!(rep.entries.iter().all(|e| e.coprime && e.multiset_equal));

        // All nontrivial powers coprime for order 5 as well.
        let g5 = catalog_build("ElemAb2", &[5]).unwrap();
        let (desc5, class5) = class_of(&g5, "[u(a),u(b)] = zeta");
        let rep = power_theorem_check(&g5, &desc5, &class5).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.order, 5);
        assert!(rep.entries.iter().all(|e| e.coprime));
    }

    #[test]
    fn ext_twists_are_rejected_over_c() {
        let g = catalog_build("DadeH1", &[2, 5, 24]).unwrap();
        let desc = multiplier_desc(&g).unwrap();
        let class = parse_twist_spec("u(a)^5 = L", &g).unwrap();
        let err = twisted_wedderburn_c(&g, &desc, &class).unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)));
    }

    #[test]
    fn wedderburn_serialization_shape() {
        let g = catalog_build("Heis", &[3]).unwrap();
        let w = wedderburn_c(&g).unwrap();
        assert_eq!(w.to_string(), "{1^9, 3^2}");
        assert_eq!(serde_json::to_string(&w).unwrap(), "[[1,9],[3,2]]");
    }
}
