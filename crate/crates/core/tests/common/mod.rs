//! Independent brute-force oracles shared by the integration tests. Nothing here
//! reuses the library's own composition or enumeration code.

#![allow(dead_code)]

use gelfand_core::diagrams::{parse, Diagram, Family, FamilyTag, Node};

/// Node `i` (1-based) of the unprimed row is point `i - 1`; `i'` is `n + i - 1`.
fn point(v: Node, n: usize) -> usize {
    if v.primed {
        n + v.index - 1
    } else {
        v.index - 1
    }
}

/// Block id of every point `0..2n`.
pub fn blocks_of(d: &Diagram) -> Vec<usize> {
    let n = d.n();
    let mut out = vec![usize::MAX; 2 * n];
    for (b, part) in d.parts().iter().enumerate() {
        for &v in part {
            out[point(v, n)] = b;
        }
    }
    out
}

/// Builds a diagram from block ids through the text grammar.
pub fn from_blocks(n: usize, ids: &[usize]) -> Diagram {
    let mut groups: Vec<(usize, Vec<String>)> = Vec::new();
    for (p, &b) in ids.iter().enumerate() {
        let name = if p < n { format!("{}", p + 1) } else { format!("{}'", p - n + 1) };
        match groups.iter_mut().find(|g| g.0 == b) {
            Some(g) => g.1.push(name),
            None => groups.push((b, vec![name])),
        }
    }
    let text: Vec<String> = groups.into_iter().map(|g| g.1.join(" ")).collect();
    parse(&text.join(" | "), n).expect("oracle builds valid diagrams")
}

/// Stacks `rho` under `tau` by closing the "same block" relation on `3n` points
/// until nothing changes. Bottom row `0..n` is `rho`'s unprimed row, the middle
/// row `n..2n` is `rho`'s primed row glued to `tau`'s unprimed row, and the top
/// row `2n..3n` is `tau`'s primed row.
pub fn compose_oracle(tau: &Diagram, rho: &Diagram) -> (Diagram, usize) {
    let n = tau.n();
    let m = 3 * n;
    let mut rel = vec![vec![false; m]; m];
    let (bt, br) = (blocks_of(tau), blocks_of(rho));
    for x in 0..2 * n {
        for y in 0..2 * n {
            if br[x] == br[y] {
                rel[x][y] = true;
            }
            if bt[x] == bt[y] {
                rel[x + n][y + n] = true;
            }
        }
    }
    loop {
        let mut changed = false;
        for x in 0..m {
            for y in 0..m {
                if !rel[x][y] {
                    continue;
                }
                for z in 0..m {
                    if rel[y][z] && !rel[x][z] {
                        rel[x][z] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let class = |x: usize| (0..m).find(|&y| rel[x][y]).unwrap();
    let mut ids = Vec::with_capacity(2 * n);
    for p in 0..n {
        ids.push(class(p));
    }
    for p in 2 * n..3 * n {
        ids.push(class(p));
    }
    let mut middle_only: Vec<usize> = (n..2 * n)
        .map(class)
        .filter(|&c| (0..n).chain(2 * n..3 * n).all(|q| !rel[c][q]))
        .collect();
    middle_only.sort();
    middle_only.dedup();
    (from_blocks(n, &ids), middle_only.len())
}

/// All set partitions of `0..m` by inserting each point into an earlier block or a new one.
pub fn all_set_partitions(m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        let mut next = Vec::new();
        for p in &out {
            let blocks = p.iter().copied().max().map_or(0, |b| b + 1);
            for b in 0..=blocks {
                let mut q = p.clone();
                q.push(b);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Position of a point in the cyclic order `1, …, n, n', …, 1'`.
fn boundary(p: usize, n: usize) -> usize {
    if p < n {
        p
    } else {
        2 * n - 1 - (p - n)
    }
}

pub fn planar_oracle(ids: &[usize], n: usize) -> bool {
    let pos: Vec<usize> = (0..2 * n).map(|p| boundary(p, n)).collect();
    for a in 0..2 * n {
        for b in 0..2 * n {
            for c in 0..2 * n {
                for d in 0..2 * n {
                    let (pa, pb, pc, pd) = (pos[a], pos[b], pos[c], pos[d]);
                    if pa < pb && pb < pc && pc < pd && ids[a] == ids[c] && ids[b] == ids[d] && ids[a] != ids[b] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The defining predicates of a family, evaluated on block ids.
pub fn member_oracle(fam: &Family, n: usize, ids: &[usize]) -> bool {
    let blocks = ids.iter().copied().max().map_or(0, |b| b + 1);
    let members = |b: usize| (0..2 * n).filter(move |&p| ids[p] == b);
    let sizes: Vec<usize> = (0..blocks).map(|b| members(b).count()).collect();
    let tag = fam.tag();
    let perfect = matches!(tag, FamilyTag::B | FamilyTag::TL | FamilyTag::WB | FamilyTag::WTL);
    let partial = matches!(tag, FamilyTag::PB | FamilyTag::Motzkin | FamilyTag::WPB | FamilyTag::WPTL);
    let planar = matches!(tag, FamilyTag::TL | FamilyTag::Motzkin | FamilyTag::PTL | FamilyTag::WTL | FamilyTag::WPTL);
    if perfect && sizes.iter().any(|&s| s != 2) {
        return false;
    }
    if partial && sizes.iter().any(|&s| s > 2) {
        return false;
    }
    if planar && !planar_oracle(ids, n) {
        return false;
    }
    if let Some((a, _)) = fam.wall() {
        let col = |p: usize| if p < n { p + 1 } else { p - n + 1 };
        for b in 0..blocks {
            let pts: Vec<usize> = members(b).collect();
            let top = pts.iter().any(|&p| p < n);
            let bottom = pts.iter().any(|&p| p >= n);
            let left = pts.iter().any(|&p| col(p) <= a);
            let right = pts.iter().any(|&p| col(p) > a);
            if top && bottom {
                if left && right {
                    return false;
                }
            } else if pts.len() > 1 && !(left && right) {
                return false;
            }
        }
    }
    true
}

/// Every member of the family on `n` points, sorted, via the filter oracle.
pub fn enumerate_oracle(fam: &Family, n: usize) -> Vec<Diagram> {
    let mut out: Vec<Diagram> = all_set_partitions(2 * n)
        .into_iter()
        .filter(|ids| member_oracle(fam, n, ids))
        .map(|ids| from_blocks(n, &ids))
        .collect();
    out.sort();
    out
}

/// The families used by the sweeps, with the walls of the given size.
pub fn families_for(n: usize) -> Vec<Family> {
    let mut out = Vec::new();
    for tag in FamilyTag::ALL {
        if tag.is_walled() {
            for a in 1..n {
                out.push(Family::walled(tag, a, n - a));
            }
        } else {
            out.push(Family::plain(tag));
        }
    }
    out
}

pub fn d(text: &str, n: usize) -> Diagram {
    parse(text, n).unwrap()
}
