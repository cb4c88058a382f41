//! Default generating sets for the model tables.

use std::collections::BTreeSet;

use gelfand_core::diagrams::{compose, enumerate, Diagram, Family, FamilyTag, Node};

fn build(n: usize, parts: Vec<Vec<Node>>) -> Diagram {
    Diagram::from_parts(n, &parts).expect("generator shapes are partitions")
}

/// Lines `{j, j'}` for every `j` outside `skip`.
fn lines_except(n: usize, skip: &[usize]) -> Vec<Vec<Node>> {
    (1..=n)
        .filter(|j| !skip.contains(j))
        .map(|j| vec![Node::top(j), Node::bottom(j)])
        .collect()
}

/// Swaps `i` and `i+1`.
fn transposition(n: usize, i: usize) -> Diagram {
    let mut parts = lines_except(n, &[i, i + 1]);
    parts.push(vec![Node::top(i), Node::bottom(i + 1)]);
    parts.push(vec![Node::top(i + 1), Node::bottom(i)]);
    build(n, parts)
}

/// Cuts the line through `i` into two singletons.
fn singleton(n: usize, i: usize) -> Diagram {
    let mut parts = lines_except(n, &[i]);
    parts.push(vec![Node::top(i)]);
    parts.push(vec![Node::bottom(i)]);
    build(n, parts)
}

/// Arcs `{i, i+1}` on both rows.
fn arc(n: usize, i: usize) -> Diagram {
    let mut parts = lines_except(n, &[i, i + 1]);
    parts.push(vec![Node::top(i), Node::top(i + 1)]);
    parts.push(vec![Node::bottom(i), Node::bottom(i + 1)]);
    build(n, parts)
}

/// Merges the lines through `i` and `i+1` into one part.
fn merge(n: usize, i: usize) -> Diagram {
    let mut parts = lines_except(n, &[i, i + 1]);
    parts.push(vec![Node::top(i), Node::top(i + 1), Node::bottom(i), Node::bottom(i + 1)]);
    build(n, parts)
}

/// The line `{i, (i+1)'}` with singletons `{i+1}` and `{i'}`, and its mirror.
fn shifts(n: usize, i: usize) -> [Diagram; 2] {
    let mut l = lines_except(n, &[i, i + 1]);
    l.push(vec![Node::top(i), Node::bottom(i + 1)]);
    l.push(vec![Node::top(i + 1)]);
    l.push(vec![Node::bottom(i)]);
    let l = build(n, l);
    let r = l.star();
    [l, r]
}

/// Hand-picked generators: transpositions, then singleton cuts, arcs, merges and shifts
/// as the family allows. Anything outside the family is dropped.
fn curated(fam: &Family, n: usize) -> Vec<Diagram> {
    let tag = fam.tag();
    let adjacent = 1..n;
    let mut out: Vec<Diagram> = adjacent.clone().map(|i| transposition(n, i)).collect();
    match tag {
        FamilyTag::P | FamilyTag::PB => out.push(singleton(n, 1)),
        FamilyTag::WPB | FamilyTag::WPTL => {
            out.push(singleton(n, 1));
            out.extend(fam.split().filter(|&a| a < n).map(|a| singleton(n, a + 1)));
        }
        FamilyTag::PTL | FamilyTag::Motzkin => out.extend((1..=n).map(|i| singleton(n, i))),
        _ => {}
    }
    match tag {
        FamilyTag::B | FamilyTag::PB if n >= 2 => out.push(arc(n, 1)),
        FamilyTag::P | FamilyTag::PTL => {}
        _ => out.extend(adjacent.clone().map(|i| arc(n, i))),
    }
    match tag {
        FamilyTag::P if n >= 2 => out.push(merge(n, 1)),
        FamilyTag::PTL => out.extend(adjacent.clone().map(|i| merge(n, i))),
        _ => {}
    }
    if matches!(tag, FamilyTag::Motzkin | FamilyTag::WPTL) {
        out.extend(adjacent.flat_map(|i| shifts(n, i)));
    }
    let identity = Diagram::identity(n);
    let mut seen = BTreeSet::new();
    out.retain(|d| fam.contains(d) && *d != identity && seen.insert(d.clone()));
    out
}

/// Every diagram reachable from the identity by composing with `gens`.
fn closure(gens: &[Diagram], n: usize) -> BTreeSet<Diagram> {
    let mut seen: BTreeSet<Diagram> = BTreeSet::new();
    let mut frontier = vec![Diagram::identity(n)];
    seen.insert(Diagram::identity(n));
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = compose(g, &x).expect("same size").product;
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

/// The curated generators, completed greedily by the highest-rank diagrams not yet
/// generated until the whole basis is reached.
pub fn default_generators(fam: &Family, n: usize) -> Vec<Diagram> {
    let mut gens = curated(fam, n);
    let mut basis = enumerate(fam, n, None);
    basis.sort_by_key(|d| std::cmp::Reverse(d.rank()));
    loop {
        let reached = closure(&gens, n);
        match basis.iter().find(|d| !reached.contains(*d)) {
            None => break,
            Some(d) => gens.push(d.clone()),
        }
    }
    if gens.is_empty() {
        gens.push(Diagram::identity(n));
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use gelfand_core::diagrams::parse;

    #[test]
    fn pb2_generators_are_alpha_beta_gamma() {
        let gens = default_generators(&Family::plain(FamilyTag::PB), 2);
        let expected: Vec<Diagram> = ["1 2' | 2 1'", "2 2' | 1 | 1'", "1 2 | 1' 2'"]
            .iter()
            .map(|t| parse(t, 2).unwrap())
            .collect();
        assert_eq!(gens, expected);
    }

    #[test]
    fn generators_generate() {
        for tag in FamilyTag::ALL {
            let fam = if tag.is_walled() { Family::walled(tag, 2, 1) } else { Family::plain(tag) };
            let gens = default_generators(&fam, 3);
            assert!(gens.iter().all(|g| fam.contains(g)));
            assert_eq!(closure(&gens, 3).len(), enumerate(&fam, 3, None).len(), "{fam}");
        }
    }
}
