//! Partition diagrams on two rows of `n` points.
//!
//! Points are `1..n` (unprimed) and `1'..n'` (primed), totally ordered as
//! `1 < 2 < ... < n < 1' < ... < n'`. A [`Diagram`] stores one block label per
//! point in that order, as a restricted growth string, so its parts come out
//! sorted by minimal node and two diagrams are equal exactly when they have the
//! same parts.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::symgroup::Permutation;

/// Largest supported `n`; labels are stored as bytes.
pub const MAX_N: usize = 120;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("node {0} appears more than once")]
    DuplicateNode(Node),
    #[error("node {0} is missing")]
    MissingNode(Node),
    #[error("node index {index} is out of range for n = {n}")]
    OutOfRange { index: usize, n: usize },
    #[error("diagram sizes differ: {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("n must be between 1 and {MAX_N}, got {0}")]
    InvalidSize(usize),
    #[error("invalid wall ({a}, {b}) for family {tag}")]
    InvalidWall { tag: FamilyTag, a: usize, b: usize },
    #[error("family {0} needs a wall")]
    MissingWall(FamilyTag),
    #[error("a must satisfy 1 <= a < n, got a = {a}, n = {n}")]
    InvalidSplit { a: usize, n: usize },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Node {
    pub index: usize,
    pub primed: bool,
}

impl Node {
    pub fn top(index: usize) -> Self {
        Self { index, primed: false }
    }

    pub fn bottom(index: usize) -> Self {
        Self { index, primed: true }
    }

    /// Slot of this node in the label vector of a diagram of size `n`.
    pub fn position(self, n: usize) -> usize {
        if self.primed {
            n + self.index - 1
        } else {
            self.index - 1
        }
    }

    pub fn from_position(pos: usize, n: usize) -> Self {
        if pos < n {
            Self::top(pos + 1)
        } else {
            Self::bottom(pos - n + 1)
        }
    }
}

impl Ord for Node {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.primed, self.index).cmp(&(other.primed, other.index))
    }
}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primed {
            write!(f, "{}'", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

/// A set partition of `{1..n} ∪ {1'..n'}` in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    labels: Vec<u8>,
}

/// Relabels so that blocks are numbered by first appearance.
fn canonical_labels(raw: &[usize]) -> Vec<u8> {
    let mut map: Vec<Option<u8>> = vec![None; raw.iter().copied().max().map_or(0, |m| m + 1)];
    let mut next = 0u8;
    raw.iter()
        .map(|&r| {
            *map[r].get_or_insert_with(|| {
                let l = next;
                next += 1;
                l
            })
        })
        .collect()
}

/// Summary of one block of a diagram.
#[derive(Debug, Clone, Copy, Default)]
struct BlockInfo {
    top: usize,
    bottom: usize,
    min_top: Option<usize>,
    min_bottom: Option<usize>,
}

impl Diagram {
    /// Builds a diagram from arbitrary block identifiers, one per position.
    pub fn from_raw_labels(n: usize, raw: &[usize]) -> Result<Self, DiagramError> {
        if n == 0 || n > MAX_N {
            return Err(DiagramError::InvalidSize(n));
        }
        if raw.len() != 2 * n {
            return Err(DiagramError::SizeMismatch(raw.len(), 2 * n));
        }
        Ok(Self {
            n,
            labels: canonical_labels(raw),
        })
    }

    pub(crate) fn from_raw_unchecked(n: usize, raw: &[usize]) -> Self {
        Self {
            n,
            labels: canonical_labels(raw),
        }
    }

    pub fn from_parts(n: usize, parts: &[Vec<Node>]) -> Result<Self, DiagramError> {
        if n == 0 || n > MAX_N {
            return Err(DiagramError::InvalidSize(n));
        }
        let mut raw: Vec<Option<usize>> = vec![None; 2 * n];
        for (b, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(DiagramError::Syntax("empty part".into()));
            }
            for &node in part {
                if node.index == 0 || node.index > n {
                    return Err(DiagramError::OutOfRange { index: node.index, n });
                }
                let slot = &mut raw[node.position(n)];
                if slot.is_some() {
                    return Err(DiagramError::DuplicateNode(node));
                }
                *slot = Some(b);
            }
        }
        let raw: Vec<usize> = raw
            .iter()
            .enumerate()
            .map(|(pos, r)| r.ok_or(DiagramError::MissingNode(Node::from_position(pos, n))))
            .collect::<Result<_, _>>()?;
        Ok(Self::from_raw_unchecked(n, &raw))
    }

    /// `{1,1'} ∪ ... ∪ {n,n'}`.
    pub fn identity(n: usize) -> Self {
        let raw: Vec<usize> = (0..n).chain(0..n).collect();
        Self::from_raw_unchecked(n, &raw)
    }

    /// The diagram of a permutation: line `i` joins `i` to `g(i)'`.
    pub fn from_permutation(g: &Permutation) -> Self {
        let n = g.len();
        let mut raw = vec![0; 2 * n];
        for i in 0..n {
            raw[i] = i;
            raw[n + g.apply(i)] = i;
        }
        Self::from_raw_unchecked(n, &raw)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn num_parts(&self) -> usize {
        self.labels.iter().copied().max().map_or(0, |m| m as usize + 1)
    }

    /// Parts as node lists, each sorted, in order of their minimal node.
    pub fn parts(&self) -> Vec<Vec<Node>> {
        let mut parts = vec![Vec::new(); self.num_parts()];
        for (pos, &l) in self.labels.iter().enumerate() {
            parts[l as usize].push(Node::from_position(pos, self.n));
        }
        parts
    }

    pub fn same_part(&self, x: Node, y: Node) -> bool {
        self.labels[x.position(self.n)] == self.labels[y.position(self.n)]
    }

    fn block_info(&self) -> Vec<BlockInfo> {
        let mut info = vec![BlockInfo::default(); self.num_parts()];
        for (pos, &l) in self.labels.iter().enumerate() {
            let b = &mut info[l as usize];
            if pos < self.n {
                b.top += 1;
                b.min_top.get_or_insert(pos);
            } else {
                b.bottom += 1;
                b.min_bottom.get_or_insert(pos - self.n);
            }
        }
        info
    }

    /// Number of propagating lines.
    pub fn rank(&self) -> usize {
        self.block_info().iter().filter(|b| b.top > 0 && b.bottom > 0).count()
    }

    /// Number of propagating lines whose nodes all have index at most `a`.
    pub fn a_rank(&self, a: usize) -> Result<usize, DiagramError> {
        if a == 0 || a >= self.n {
            return Err(DiagramError::InvalidSplit { a, n: self.n });
        }
        Ok(self.a_rank_unchecked(a))
    }

    pub(crate) fn a_rank_unchecked(&self, a: usize) -> usize {
        let n = self.n;
        let mut inside = vec![true; self.num_parts()];
        for (pos, &l) in self.labels.iter().enumerate() {
            let index = if pos < n { pos + 1 } else { pos - n + 1 };
            if index > a {
                inside[l as usize] = false;
            }
        }
        self.block_info()
            .iter()
            .zip(&inside)
            .filter(|(b, &ins)| b.top > 0 && b.bottom > 0 && ins)
            .count()
    }

    /// Swaps the two rows.
    pub fn star(&self) -> Self {
        let n = self.n;
        let raw: Vec<usize> = (0..2 * n).map(|p| self.labels[(p + n) % (2 * n)] as usize).collect();
        Self::from_raw_unchecked(n, &raw)
    }

    pub fn is_self_dual(&self) -> bool {
        self.star() == *self
    }

    pub fn max_part_size(&self) -> usize {
        let mut sizes = vec![0usize; self.num_parts()];
        for &l in &self.labels {
            sizes[l as usize] += 1;
        }
        sizes.into_iter().max().unwrap_or(0)
    }

    pub fn all_parts_size(&self, size: usize) -> bool {
        let mut sizes = vec![0usize; self.num_parts()];
        for &l in &self.labels {
            sizes[l as usize] += 1;
        }
        sizes.into_iter().all(|s| s == size)
    }

    /// Non-crossing test in the boundary order `1, ..., n, n', ..., 1'`.
    pub fn is_planar(&self) -> bool {
        let n = self.n;
        let boundary: Vec<u8> = (0..n)
            .map(|i| self.labels[i])
            .chain((0..n).rev().map(|i| self.labels[n + i]))
            .collect();
        let parts = self.num_parts();
        for x in 0..parts as u8 {
            for y in (x + 1)..parts as u8 {
                // Collapse the boundary word restricted to {x, y}; crossing iff it alternates
                // x..y..x..y, i.e. more than two runs remain once the cyclic seam is joined.
                let mut runs: Vec<u8> = Vec::new();
                for &l in boundary.iter().filter(|&&l| l == x || l == y) {
                    if runs.last() != Some(&l) {
                        runs.push(l);
                    }
                }
                if runs.len() > 1 && runs.first() == runs.last() {
                    runs.pop();
                }
                if runs.len() > 2 {
                    return false;
                }
            }
        }
        true
    }

    /// The propagating-line permutation of this diagram.
    ///
    /// Lines are numbered `0..k` by their minimal unprimed node; `pi.apply(i)` is
    /// the position of line `i` when the lines are instead ordered by their
    /// minimal primed node.
    pub fn line_permutation(&self) -> Permutation {
        let info = self.block_info();
        let lines: Vec<&BlockInfo> = info.iter().filter(|b| b.top > 0 && b.bottom > 0).collect();
        let mut by_bottom: Vec<usize> = (0..lines.len()).collect();
        by_bottom.sort_by_key(|&i| lines[i].min_bottom);
        let mut images = vec![0; lines.len()];
        for (pos, &line) in by_bottom.iter().enumerate() {
            images[line] = pos;
        }
        Permutation::from_images(images).expect("line positions form a bijection")
    }

    /// Restriction of the diagram to the unprimed row together with the set of
    /// blocks that are entirely unprimed. Two diagrams share this key exactly when
    /// they are left equivalent.
    pub fn top_key(&self) -> RowKey {
        let n = self.n;
        let info = self.block_info();
        let raw: Vec<usize> = self.labels[..n].iter().map(|&l| l as usize).collect();
        let restriction = canonical_labels(&raw);
        let mut closed = Vec::new();
        let mut seen = BTreeSet::new();
        for &l in &self.labels[..n] {
            if seen.insert(l) {
                closed.push(info[l as usize].bottom == 0);
            }
        }
        RowKey { restriction, closed }
    }

    /// The mirror of [`Diagram::top_key`] for the primed row.
    pub fn bottom_key(&self) -> RowKey {
        self.star().top_key()
    }
}

/// One row of a diagram: the induced partition of the row and which of its
/// blocks are not propagating.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowKey {
    pub restriction: Vec<u8>,
    pub closed: Vec<bool>,
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts().iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            for (j, node) in part.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{node}")?;
            }
        }
        Ok(())
    }
}

/// Parses `part ("|" part)*` where a part is whitespace-separated `INT` or `INT'` tokens.
pub fn parse(text: &str, n: usize) -> Result<Diagram, DiagramError> {
    let mut parts = Vec::new();
    for chunk in text.split('|') {
        let mut part = Vec::new();
        let chunk = chunk.replace('\'', "' ");
        for token in chunk.split_whitespace() {
            let (digits, primed) = match token.strip_suffix('\'') {
                Some(d) => (d, true),
                None => (token, false),
            };
            if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
                return Err(DiagramError::Syntax(format!("bad token `{token}`")));
            }
            let index: usize = digits
                .parse()
                .map_err(|_| DiagramError::Syntax(format!("bad token `{token}`")))?;
            if index == 0 || index > n {
                return Err(DiagramError::OutOfRange { index, n });
            }
            part.push(Node { index, primed });
        }
        if part.is_empty() {
            return Err(DiagramError::Syntax("empty part".into()));
        }
        parts.push(part);
    }
    Diagram::from_parts(n, &parts)
}

/// Result of stacking two diagrams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComposeResult {
    pub product: Diagram,
    /// Components that live entirely in the identified middle row.
    pub closed: usize,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.parent[rx] = ry;
        }
    }
}

/// `tau ∘ rho`: the primed row of `rho` is glued to the unprimed row of `tau`;
/// the result keeps the unprimed row of `rho` and the primed row of `tau`.
pub fn compose(tau: &Diagram, rho: &Diagram) -> Result<ComposeResult, DiagramError> {
    if tau.n != rho.n {
        return Err(DiagramError::SizeMismatch(tau.n, rho.n));
    }
    Ok(compose_unchecked(tau, rho))
}

pub(crate) fn compose_unchecked(tau: &Diagram, rho: &Diagram) -> ComposeResult {
    let n = tau.n;
    // Slots: 0..n bottom row (unprimed of rho), n..2n middle, 2n..3n top (primed of tau).
    let mut uf = UnionFind::new(3 * n);
    let mut first = [usize::MAX; 2 * MAX_N];
    for (pos, &l) in rho.labels.iter().enumerate() {
        let slot = pos; // unprimed -> 0..n, primed -> n..2n
        let l = l as usize;
        if first[l] == usize::MAX {
            first[l] = slot;
        } else {
            uf.union(first[l], slot);
        }
    }
    first[..2 * n].fill(usize::MAX);
    for (pos, &l) in tau.labels.iter().enumerate() {
        let slot = n + pos; // unprimed -> n..2n, primed -> 2n..3n
        let l = l as usize;
        if first[l] == usize::MAX {
            first[l] = slot;
        } else {
            uf.union(first[l], slot);
        }
    }
    let mut touches_outer = vec![false; 3 * n];
    let mut raw = Vec::with_capacity(2 * n);
    for slot in (0..n).chain(2 * n..3 * n) {
        let r = uf.find(slot);
        touches_outer[r] = true;
        raw.push(r);
    }
    let mut middle_roots: Vec<usize> = (n..2 * n)
        .map(|s| uf.find(s))
        .filter(|&r| !touches_outer[r])
        .collect();
    middle_roots.sort_unstable();
    middle_roots.dedup();
    ComposeResult {
        product: Diagram::from_raw_unchecked(n, &raw),
        closed: middle_roots.len(),
    }
}

/// The ten diagram families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    /// All set partitions.
    P,
    /// Perfect matchings.
    B,
    /// Partial matchings.
    PB,
    /// Planar perfect matchings.
    TL,
    /// Planar partial matchings.
    Motzkin,
    /// Planar set partitions.
    PTL,
    WB,
    WPB,
    WTL,
    WPTL,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 10] = [
        FamilyTag::P,
        FamilyTag::B,
        FamilyTag::PB,
        FamilyTag::TL,
        FamilyTag::Motzkin,
        FamilyTag::PTL,
        FamilyTag::WB,
        FamilyTag::WPB,
        FamilyTag::WTL,
        FamilyTag::WPTL,
    ];

    pub fn is_walled(self) -> bool {
        matches!(self, FamilyTag::WB | FamilyTag::WPB | FamilyTag::WTL | FamilyTag::WPTL)
    }

    /// Walled families whose two-sided classes also depend on the a-rank.
    pub fn is_partial_walled(self) -> bool {
        matches!(self, FamilyTag::WPB | FamilyTag::WPTL)
    }

    pub fn is_planar(self) -> bool {
        matches!(
            self,
            FamilyTag::TL | FamilyTag::Motzkin | FamilyTag::PTL | FamilyTag::WTL | FamilyTag::WPTL
        )
    }

    /// Every part has exactly two nodes.
    pub fn is_matching(self) -> bool {
        matches!(self, FamilyTag::B | FamilyTag::TL | FamilyTag::WB | FamilyTag::WTL)
    }

    /// Every part has at most two nodes.
    pub fn is_partial_matching(self) -> bool {
        matches!(
            self,
            FamilyTag::PB | FamilyTag::Motzkin | FamilyTag::WPB | FamilyTag::WPTL
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::P => "p",
            FamilyTag::B => "b",
            FamilyTag::PB => "pb",
            FamilyTag::TL => "tl",
            FamilyTag::Motzkin => "motzkin",
            FamilyTag::PTL => "ptl",
            FamilyTag::WB => "wb",
            FamilyTag::WPB => "wpb",
            FamilyTag::WTL => "wtl",
            FamilyTag::WPTL => "wptl",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for FamilyTag {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| DiagramError::UnknownFamily(s.to_string()))
    }
}

/// A diagram family, with its wall `(a, b)` for the walled tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family {
    tag: FamilyTag,
    wall: Option<(usize, usize)>,
}

impl Family {
    pub fn new(tag: FamilyTag, wall: Option<(usize, usize)>) -> Result<Self, DiagramError> {
        match (tag.is_walled(), wall) {
            (true, None) => Err(DiagramError::MissingWall(tag)),
            (true, Some((a, b))) if a == 0 || b == 0 || a + b > MAX_N => {
                Err(DiagramError::InvalidWall { tag, a, b })
            }
            (false, Some((a, b))) => Err(DiagramError::InvalidWall { tag, a, b }),
            _ => Ok(Self { tag, wall }),
        }
    }

    /// An unwalled family; panics on a walled tag.
    pub fn plain(tag: FamilyTag) -> Self {
        Self::new(tag, None).expect("walled family needs a wall")
    }

    /// A walled family; panics on an unwalled tag or an empty side.
    pub fn walled(tag: FamilyTag, a: usize, b: usize) -> Self {
        Self::new(tag, Some((a, b))).expect("invalid walled family")
    }

    pub fn tag(&self) -> FamilyTag {
        self.tag
    }

    pub fn wall(&self) -> Option<(usize, usize)> {
        self.wall
    }

    /// Left width `a` of the wall, if any.
    pub fn split(&self) -> Option<usize> {
        self.wall.map(|(a, _)| a)
    }

    /// Whether the family can live on `n` points.
    pub fn accepts_size(&self, n: usize) -> bool {
        n >= 1 && n <= MAX_N && self.wall.is_none_or(|(a, b)| a + b == n)
    }

    /// Checks family membership.
    pub fn contains(&self, rho: &Diagram) -> bool {
        is_member(self, rho)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.wall {
            Some((a, b)) => write!(f, "{}[{a},{b}]", self.tag),
            None => write!(f, "{}", self.tag),
        }
    }
}

pub fn rank(rho: &Diagram) -> usize {
    rho.rank()
}

pub fn a_rank(rho: &Diagram, a: usize) -> Result<usize, DiagramError> {
    rho.a_rank(a)
}

pub fn star(rho: &Diagram) -> Diagram {
    rho.star()
}

pub fn is_planar(rho: &Diagram) -> bool {
    rho.is_planar()
}

pub fn is_self_dual(rho: &Diagram) -> bool {
    rho.is_self_dual()
}

pub fn pi_of(tau: &Diagram) -> Permutation {
    tau.line_permutation()
}

/// The three wall conditions with `a` columns on the left.
fn satisfies_wall(rho: &Diagram, a: usize) -> bool {
    for part in rho.parts() {
        let left = part.iter().filter(|v| v.index <= a).count();
        let right = part.len() - left;
        let has_top = part.iter().any(|v| !v.primed);
        let has_bottom = part.iter().any(|v| v.primed);
        if has_top && has_bottom {
            if left > 0 && right > 0 {
                return false;
            }
        } else if part.len() > 1 && (left == 0 || right == 0) {
            return false;
        }
    }
    true
}

pub fn is_member(fam: &Family, rho: &Diagram) -> bool {
    let tag = fam.tag;
    if !fam.accepts_size(rho.n) {
        return false;
    }
    if tag.is_matching() && !rho.all_parts_size(2) {
        return false;
    }
    if tag.is_partial_matching() && rho.max_part_size() > 2 {
        return false;
    }
    if tag.is_planar() && !rho.is_planar() {
        return false;
    }
    match fam.wall {
        Some((a, _)) => satisfies_wall(rho, a),
        None => true,
    }
}

/// All set partitions of `0..m` as restricted growth strings, lexicographically.
pub(crate) fn set_partitions(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut word = vec![0usize; m];
    let mut max_prefix = vec![0usize; m];
    loop {
        out.push(word.clone());
        // Find the rightmost position that can still be incremented.
        let mut i = m - 1;
        loop {
            if i == 0 {
                return out;
            }
            if word[i] <= max_prefix[i - 1] {
                break;
            }
            i -= 1;
        }
        word[i] += 1;
        max_prefix[i] = max_prefix[i - 1].max(word[i]);
        for j in i + 1..m {
            word[j] = 0;
            max_prefix[j] = max_prefix[i];
        }
    }
}

/// Perfect matchings of the given positions, as lists of pairs.
fn perfect_matchings(points: &[usize], planar: bool) -> Vec<Vec<(usize, usize)>> {
    if points.is_empty() {
        return vec![Vec::new()];
    }
    let first = points[0];
    let mut out = Vec::new();
    for j in 1..points.len() {
        // In a non-crossing matching the inside of every arc is matched among itself.
        if planar && (j - 1) % 2 == 1 {
            continue;
        }
        let mut rest_inner: Vec<usize> = Vec::new();
        let mut rest_outer: Vec<usize> = Vec::new();
        for (k, &p) in points.iter().enumerate().skip(1) {
            if k == j {
                continue;
            }
            if planar && k < j {
                rest_inner.push(p);
            } else {
                rest_outer.push(p);
            }
        }
        if planar {
            for inner in perfect_matchings(&rest_inner, true) {
                for outer in perfect_matchings(&rest_outer, true) {
                    let mut m = vec![(first, points[j])];
                    m.extend(inner.iter().copied());
                    m.extend(outer.iter().copied());
                    out.push(m);
                }
            }
        } else {
            for rest in perfect_matchings(&rest_outer, false) {
                let mut m = vec![(first, points[j])];
                m.extend(rest);
                out.push(m);
            }
        }
    }
    out
}

fn matching_diagrams(n: usize, planar: bool) -> Vec<Diagram> {
    // Work in boundary order so that planarity is the usual non-crossing condition.
    let boundary_to_pos = |b: usize| if b < n { b } else { n + (2 * n - 1 - b) };
    let points: Vec<usize> = (0..2 * n).collect();
    perfect_matchings(&points, planar)
        .into_iter()
        .map(|m| {
            let mut raw = vec![0; 2 * n];
            for (k, (x, y)) in m.into_iter().enumerate() {
                raw[boundary_to_pos(x)] = k;
                raw[boundary_to_pos(y)] = k;
            }
            Diagram::from_raw_unchecked(n, &raw)
        })
        .collect()
}

/// All diagrams of the family on `n` points, in canonical order, optionally of one rank.
pub fn enumerate(fam: &Family, n: usize, rank_filter: Option<usize>) -> Vec<Diagram> {
    enumerate_filtered(fam, n, rank_filter, None)
}

/// Like [`enumerate`], with an extra a-rank filter for walled families.
pub fn enumerate_filtered(
    fam: &Family,
    n: usize,
    rank_filter: Option<usize>,
    a_rank_filter: Option<usize>,
) -> Vec<Diagram> {
    if !fam.accepts_size(n) {
        return Vec::new();
    }
    let candidates: Vec<Diagram> = if fam.tag.is_matching() {
        matching_diagrams(n, fam.tag.is_planar())
    } else {
        set_partitions(2 * n)
            .into_iter()
            .map(|w| Diagram::from_raw_unchecked(n, &w))
            .collect()
    };
    let mut out: Vec<Diagram> = candidates
        .into_iter()
        .filter(|d| is_member(fam, d))
        .filter(|d| rank_filter.is_none_or(|r| d.rank() == r))
        .filter(|d| match (a_rank_filter, fam.split()) {
            (Some(r), Some(a)) => d.a_rank_unchecked(a) == r,
            (Some(_), None) => false,
            (None, _) => true,
        })
        .collect();
    out.sort();
    out
}
