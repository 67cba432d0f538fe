//! Isomorphism search for small table groups by generator-image
//! backtracking.

use super::FiniteGroup;
use crate::error::{Error, Result};

const ISO_CAP: usize = 64;

/// Find an isomorphism `a -> b` as an index map, or `None` if the groups are
/// not isomorphic.  Capped at order 64; this is an oracle utility, not a
/// general-purpose tool.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Result<Option<Vec<u32>>> {
    if a.order() > ISO_CAP || b.order() > ISO_CAP {
        return Err(Error::CapExceeded(format!(
            "isomorphism search capped at order {ISO_CAP}"
        )));
    }
    if a.order() != b.order() {
        return Ok(None);
    }
    let n = a.order();
    // Cheap invariants first.
    let profile = |g: &FiniteGroup| {
        let mut orders: Vec<u64> = (0..g.order()).map(|x| g.element_order(x)).collect();
        orders.sort_unstable();
        let mut class_sizes: Vec<usize> =
            g.conjugacy_classes().iter().map(|c| c.len()).collect();
        class_sizes.sort_unstable();
        (orders, class_sizes, g.center().len(), g.derived_subgroup().len())
    };
    if profile(a) != profile(b) {
        return Ok(None);
    }

    // Greedy generating sequence for `a`: smallest element outside the
    // closure so far.
    let mut gens: Vec<usize> = Vec::new();
    let mut closed = a.closure(&[]);
    while closed.len() < n {
        let g = (0..n).find(|x| !closed.contains(x)).unwrap();
        gens.push(g);
        closed = a.closure(&gens);
    }

    // Word table: express every element of `a` by BFS over the generators.
    // parent[x] = (y, i) with x = y * gens[i].
    let mut parent = vec![None; n];
    let mut order_bfs = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut head = 0;
    while head < order_bfs.len() {
        let x = order_bfs[head];
        head += 1;
        for (i, &g) in gens.iter().enumerate() {
            let y = a.mul(x, g);
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some((x, i));
                order_bfs.push(y);
            }
        }
    }

    // Candidates for each generator image, filtered by order and class size.
    let a_classes = a.conjugacy_classes();
    let a_class_map = a.class_index_map(&a_classes);
    let b_classes = b.conjugacy_classes();
    let b_class_map = b.class_index_map(&b_classes);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            (0..n)
                .filter(|&h| {
                    b.element_order(h) == a.element_order(g)
                        && b_classes[b_class_map[h]].len() == a_classes[a_class_map[g]].len()
                })
                .collect()
        })
        .collect();

    fn try_images(
        a: &FiniteGroup,
        b: &FiniteGroup,
        gens: &[usize],
        candidates: &[Vec<usize>],
        order_bfs: &[usize],
        parent: &[Option<(usize, usize)>],
        chosen: &mut Vec<usize>,
    ) -> Option<Vec<u32>> {
        if chosen.len() < gens.len() {
            let i = chosen.len();
            for &h in &candidates[i] {
                chosen.push(h);
                if let Some(map) = try_images(a, b, gens, candidates, order_bfs, parent, chosen) {
                    return Some(map);
                }
                chosen.pop();
            }
            return None;
        }
        // Replay the BFS words to build the map, then verify.
        let n = a.order();
        let mut map = vec![u32::MAX; n];
        map[0] = 0;
        for &x in order_bfs.iter().skip(1) {
            let (y, i) = parent[x].unwrap();
            map[x] = b.mul(map[y] as usize, chosen[i]) as u32;
        }
        let mut hit = vec![false; n];
        for &m in &map {
            if m == u32::MAX || hit[m as usize] {
                return None;
            }
            hit[m as usize] = true;
        }
        for x in 0..n {
            for y in 0..n {
                if map[a.mul(x, y)] as usize != b.mul(map[x] as usize, map[y] as usize) {
                    return None;
                }
            }
        }
        Some(map)
    }

    Ok(try_images(
        a,
        b,
        &gens,
        &candidates,
        &order_bfs,
        &parent,
        &mut Vec::new(),
    ))
}
