//! Constructors: cyclic groups, products, semidirect products, quotients,
//! and central extensions by a cyclic group.

use super::{FiniteGroup, GroupHom};
use crate::cohomology::Cocycle;
use crate::error::{Error, Result};

pub fn cyclic(n: usize) -> FiniteGroup {
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = ((a + b) % n) as u32;
        }
    }
    let named = if n > 1 { vec![("g".to_string(), 1)] } else { Vec::new() };
    FiniteGroup::from_table(format!("C{n}"), n, mul, named).expect("cyclic table is a group")
}

/// Direct product; element `(a, b)` gets index `a * |B| + b`.  Named
/// elements are inherited from both factors and must not collide.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut mul = vec![0u32; n * n];
    for x0 in 0..na {
        for x1 in 0..nb {
            let x = x0 * nb + x1;
            for y0 in 0..na {
                for y1 in 0..nb {
                    let y = y0 * nb + y1;
                    mul[x * n + y] = (a.mul(x0, y0) * nb + b.mul(x1, y1)) as u32;
                }
            }
        }
    }
    let mut named: Vec<(String, usize)> = a
        .named_elements()
        .iter()
        .map(|(s, i)| (s.clone(), i * nb))
        .collect();
    for (s, i) in b.named_elements() {
        if named.iter().any(|(t, _)| t == s) {
            return Err(Error::Group(format!(
                "named element {s} exists in both factors"
            )));
        }
        named.push((s.clone(), *i));
    }
    FiniteGroup::from_table(format!("{} x {}", a.label(), b.label()), n, mul, named)
}

/// Build the full action table of `T` on `N` from images of the presentation
/// form `x^t` (that is, `t^-1 x t`) for a generating set of `T`.
///
/// The returned table maps `t` to the automorphism `n -> t n t^-1`, which is
/// what [`semidirect`] consumes.  Each supplied map is inverted (as a
/// permutation) because `t n t^-1 = n^(t^-1)`.
pub fn action_from_presentation(
    t_group: &FiniteGroup,
    n_group: &FiniteGroup,
    gen_maps: &[(usize, Vec<u32>)],
) -> Result<Vec<Vec<u32>>> {
    let nt = t_group.order();
    let nn = n_group.order();
    for (_, m) in gen_maps {
        if m.len() != nn {
            return Err(Error::Group("action map has wrong length".into()));
        }
    }
    // conj[t] for generators: the inverse permutation of the x^t map.
    let mut conj: Vec<Option<Vec<u32>>> = vec![None; nt];
    conj[0] = Some((0..nn as u32).collect());
    let mut frontier = vec![0usize];
    let invert = |m: &[u32]| -> Result<Vec<u32>> {
        let mut inv = vec![u32::MAX; nn];
        for (x, &y) in m.iter().enumerate() {
            if inv[y as usize] != u32::MAX {
                return Err(Error::Group("action map is not a bijection".into()));
            }
            inv[y as usize] = x as u32;
        }
        Ok(inv)
    };
    let gen_conj: Vec<(usize, Vec<u32>)> = gen_maps
        .iter()
        .map(|(t, m)| Ok((*t, invert(m)?)))
        .collect::<Result<_>>()?;
    while let Some(u) = frontier.pop() {
        let act_u = conj[u].clone().unwrap();
        for (t, act_t) in &gen_conj {
            let ut = t_group.mul(u, *t);
            if conj[ut].is_none() {
                // act[u t] = act[u] o act[t].
                let composed: Vec<u32> = (0..nn).map(|x| act_u[act_t[x] as usize]).collect();
                conj[ut] = Some(composed);
                frontier.push(ut);
            }
        }
    }
    let action: Vec<Vec<u32>> = conj
        .into_iter()
        .enumerate()
        .map(|(t, c)| c.ok_or(Error::Group(format!("generators do not reach element {t} of the acting group"))))
        .collect::<Result<_>>()?;
    // Verify: each act[t] is an automorphism and t -> act[t] a homomorphism.
    for (t, a) in action.iter().enumerate() {
        if a[0] != 0 {
            return Err(Error::Group(format!("action of {t} moves the identity")));
        }
        for x in 0..nn {
            for y in 0..nn {
                if a[n_group.mul(x, y)] as usize != n_group.mul(a[x] as usize, a[y] as usize) {
                    return Err(Error::Group(format!(
                        "action of {t} is not an automorphism"
                    )));
                }
            }
        }
    }
    for t1 in 0..nt {
        for t2 in 0..nt {
            let t12 = t_group.mul(t1, t2);
            for x in (0..nn).step_by(1.max(nn / 16)) {
                if action[t12][x] != action[t1][action[t2][x] as usize] {
                    return Err(Error::Group("action is not a homomorphism".into()));
                }
            }
        }
    }
    Ok(action)
}

/// Semidirect product `N x| T` for a verified action table (`action[t]` is
/// the automorphism `n -> t n t^-1`).  Element `(n, t)` has index
/// `n * |T| + t`; multiplication is `(n1, t1)(n2, t2) =
/// (n1 * act[t1](n2), t1 t2)`.
pub fn semidirect(
    label: impl Into<String>,
    n_group: &FiniteGroup,
    t_group: &FiniteGroup,
    action: &[Vec<u32>],
) -> Result<FiniteGroup> {
    let nn = n_group.order();
    let nt = t_group.order();
    if action.len() != nt {
        return Err(Error::Group("action table has wrong length".into()));
    }
    let n = nn * nt;
    let mut mul = vec![0u32; n * n];
    for n1 in 0..nn {
        for t1 in 0..nt {
            let x = n1 * nt + t1;
            let act = &action[t1];
            for n2 in 0..nn {
                let moved = act[n2] as usize;
                let left = n_group.mul(n1, moved);
                for t2 in 0..nt {
                    let y = n2 * nt + t2;
                    mul[x * n + y] = (left * nt + t_group.mul(t1, t2)) as u32;
                }
            }
        }
    }
    let mut named: Vec<(String, usize)> = n_group
        .named_elements()
        .iter()
        .map(|(s, i)| (s.clone(), i * nt))
        .collect();
    for (s, i) in t_group.named_elements() {
        if named.iter().any(|(t, _)| t == s) {
            return Err(Error::Group(format!(
                "named element {s} exists in both factors"
            )));
        }
        named.push((s.clone(), *i));
    }
    FiniteGroup::from_table(label, n, mul, named)
}

/// Quotient by a normal subgroup.  Returns the quotient (cosets indexed by
/// smallest member, identity coset first) and the projection map.
pub fn quotient(
    label: impl Into<String>,
    g: &FiniteGroup,
    normal: &[usize],
) -> Result<(FiniteGroup, GroupHom)> {
    let mut normal = normal.to_vec();
    normal.sort_unstable();
    normal.dedup();
    if normal.first() != Some(&0) {
        return Err(Error::Group("normal subgroup must contain the identity".into()));
    }
    if !g.is_normal(&normal) {
        return Err(Error::Group("subgroup is not normal".into()));
    }
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut cosets: Vec<usize> = Vec::new(); // representative = smallest member
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let idx = cosets.len();
        cosets.push(x);
        for &h in &normal {
            coset_of[g.mul(x, h)] = idx;
        }
    }
    let k = cosets.len();
    let mut mul = vec![0u32; k * k];
    for (i, &a) in cosets.iter().enumerate() {
        for (j, &b) in cosets.iter().enumerate() {
            mul[i * k + j] = coset_of[g.mul(a, b)] as u32;
        }
    }
    let named = g
        .named_elements()
        .iter()
        .map(|(s, i)| (s.clone(), coset_of[*i]))
        .collect();
    let q = FiniteGroup::from_table(label, k, mul, named)?;
    let proj = GroupHom::new(g, &q, coset_of.iter().map(|&c| c as u32).collect())?;
    Ok((q, proj))
}

/// A central extension `1 -> Z/m -> E -> G -> 1` built from a normalized
/// 2-cocycle, together with the canonical section `g -> (0, g)`.
#[derive(Debug, Clone)]
pub struct CentralExtension {
    pub total: FiniteGroup,
    /// Projection `E -> G` (as raw index map; `E` elements are `(a, g)` with
    /// index `a * |G| + g`).
    pub proj: Vec<u32>,
    /// Section `G -> E`, `g -> (0, g)`; satisfies `section[0] = 0`.
    pub section: Vec<u32>,
    /// Index of the kernel generator `(1, 0)`.
    pub kernel_gen: usize,
    pub modulus: u64,
}

impl CentralExtension {
    pub fn kernel_elems(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.modulus as usize);
        let mut z = 0usize;
        for _ in 0..self.modulus {
            out.push(z);
            z = self.total.mul(z, self.kernel_gen);
        }
        out
    }
}

/// Build a homomorphism from images of a generating set: `pairs` lists
/// `(x, image of x)`.  Fails if the given elements do not generate `src`,
/// if the images are inconsistent, or if the extension of the assignment is
/// not a homomorphism.
pub fn hom_from_generators(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    pairs: &[(usize, usize)],
) -> Result<GroupHom> {
    let n = src.order();
    let mut map = vec![u32::MAX; n];
    map[0] = 0;
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for &(g, img) in pairs {
            let xg = src.mul(x, g);
            let y = dst.mul(map[x] as usize, img) as u32;
            if map[xg] == u32::MAX {
                map[xg] = y;
                frontier.push(xg);
            } else if map[xg] != y {
                return Err(Error::Group(
                    "generator images are inconsistent".into(),
                ));
            }
        }
    }
    if map.contains(&u32::MAX) {
        return Err(Error::Group(
            "supplied elements do not generate the source group".into(),
        ));
    }
    GroupHom::new(src, dst, map)
}

/// Package a hand-built central extension `1 -> <kernel_gen> -> total -> g -> 1`
/// after verifying everything: `proj` must be a surjective homomorphism onto
/// `g` whose kernel is exactly the (central) cyclic group generated by
/// `kernel_gen`, of order `modulus`.  The section picks the smallest preimage
/// of each element.
pub fn extension_from_parts(
    total: FiniteGroup,
    g: &FiniteGroup,
    proj: &GroupHom,
    kernel_gen: usize,
    modulus: u64,
) -> Result<CentralExtension> {
    if proj.domain_order() != total.order()
        || total.order() != g.order() * modulus as usize
    {
        return Err(Error::Group("extension size mismatch".into()));
    }
    if total.element_order(kernel_gen) != modulus {
        return Err(Error::Group("kernel generator has the wrong order".into()));
    }
    let kernel: Vec<usize> = (0..total.order())
        .filter(|&e| proj.apply(e) == 0)
        .collect();
    if kernel.len() != modulus as usize {
        return Err(Error::Group("projection kernel has the wrong size".into()));
    }
    let powers = total.closure(&[kernel_gen]);
    if kernel.iter().any(|e| !powers.contains(e)) {
        return Err(Error::Group(
            "projection kernel is not generated by the kernel generator".into(),
        ));
    }
    if !total.center().contains(&kernel_gen) {
        return Err(Error::Group("extension kernel is not central".into()));
    }
    let mut section = vec![u32::MAX; g.order()];
    for e in 0..total.order() {
        let x = proj.apply(e);
        if section[x] == u32::MAX {
            section[x] = e as u32;
        }
    }
    if section.contains(&u32::MAX) {
        return Err(Error::Group("projection is not surjective".into()));
    }
    debug_assert_eq!(section[0], 0);
    Ok(CentralExtension {
        total,
        proj: proj.map.clone(),
        section,
        kernel_gen,
        modulus,
    })
}

/// Build the central extension of `G` determined by a cocycle with values in
/// `Z/m`: `(a, g)(b, h) = (a + b + alpha(g, h), gh)`.
pub fn central_extension(g: &FiniteGroup, alpha: &Cocycle) -> Result<CentralExtension> {
    alpha.validate(g)?;
    let n = g.order();
    let m = alpha.modulus() as usize;
    let total_n = n * m;
    if total_n > super::GROUP_ORDER_CAP {
        return Err(Error::CapExceeded(format!(
            "central extension would have order {total_n}"
        )));
    }
    let mut mul = vec![0u32; total_n * total_n];
    for a in 0..m {
        for x in 0..n {
            let e1 = a * n + x;
            for b in 0..m {
                for y in 0..n {
                    let e2 = b * n + y;
                    let c = (a + b + alpha.get(x, y) as usize) % m;
                    mul[e1 * total_n + e2] = (c * n + g.mul(x, y)) as u32;
                }
            }
        }
    }
    let named = g
        .named_elements()
        .iter()
        .map(|(s, i)| (s.clone(), *i))
        .collect();
    let total = FiniteGroup::from_table(
        format!("ext({}, Z/{})", g.label(), m),
        total_n,
        mul,
        named,
    )?;
    let proj = (0..total_n).map(|e| (e % n) as u32).collect();
    let section = (0..n as u32).collect();
    Ok(CentralExtension {
        total,
        proj,
        section,
        kernel_gen: n,
        modulus: alpha.modulus() as u64,
    })
}
