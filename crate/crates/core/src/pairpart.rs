//! Pair partitions of a two-row vertex set.
//!
//! A [`PairPartition`] in `J(n,m)` is a perfect matching of the `n` top
//! vertices `1..n` and the `m` bottom vertices `1'..m'`. Vertices are
//! ordered by the *disk order*: top vertices left to right, then bottom
//! vertices right to left. Internally every diagram is stored as a partner
//! table indexed by 0-based disk position, which is also its canonical form.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of points in exhaustive enumerations.
pub const DEFAULT_MAX_POINTS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Row {
    Top,
    Bottom,
}

/// A boundary vertex. `index` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub row: Row,
    pub index: usize,
}

impl Vertex {
    pub const fn top(index: usize) -> Self {
        Vertex {
            row: Row::Top,
            index,
        }
    }

    pub const fn bottom(index: usize) -> Self {
        Vertex {
            row: Row::Bottom,
            index,
        }
    }

    pub fn is_valid(&self, n_top: usize, n_bottom: usize) -> bool {
        self.index >= 1
            && match self.row {
                Row::Top => self.index <= n_top,
                Row::Bottom => self.index <= n_bottom,
            }
    }

    fn check(&self, n_top: usize, n_bottom: usize) -> Result<()> {
        if self.is_valid(n_top, n_bottom) {
            Ok(())
        } else {
            Err(Error::InvalidVertex(format!(
                "{self} in J({n_top},{n_bottom})"
            )))
        }
    }

    /// 1-based position in the disk order: `i` for top `i`,
    /// `n_top + n_bottom + 1 - i` for bottom `i`.
    pub fn disk_position(&self, n_top: usize, n_bottom: usize) -> Result<usize> {
        self.check(n_top, n_bottom)?;
        Ok(self.pos(n_top, n_bottom) + 1)
    }

    /// 0-based disk position, unchecked.
    pub(crate) fn pos(&self, n_top: usize, n_bottom: usize) -> usize {
        match self.row {
            Row::Top => self.index - 1,
            Row::Bottom => n_top + n_bottom - self.index,
        }
    }

    pub(crate) fn at(pos: usize, n_top: usize, n_bottom: usize) -> Self {
        if pos < n_top {
            Vertex::top(pos + 1)
        } else {
            Vertex::bottom(n_top + n_bottom - pos)
        }
    }

    /// Relabel by `delta` within the same row.
    pub fn shifted(&self, delta: isize) -> Option<Self> {
        let index = self.index as isize + delta;
        (index >= 1).then_some(Vertex {
            row: self.row,
            index: index as usize,
        })
    }

    pub fn flipped(&self) -> Self {
        match self.row {
            Row::Top => Vertex::bottom(self.index),
            Row::Bottom => Vertex::top(self.index),
        }
    }
}

/// Disk order. It does not depend on the ambient sizes.
impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.row, other.row) {
            (Row::Top, Row::Top) => self.index.cmp(&other.index),
            (Row::Bottom, Row::Bottom) => other.index.cmp(&self.index),
            (Row::Top, Row::Bottom) => Ordering::Less,
            (Row::Bottom, Row::Top) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.row {
            Row::Top => write!(f, "{}", self.index),
            Row::Bottom => write!(f, "{}'", self.index),
        }
    }
}

/// An unordered pair of vertices, stored with the disk-smaller end first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexPair(pub Vertex, pub Vertex);

impl VertexPair {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            VertexPair(a, b)
        } else {
            VertexPair(b, a)
        }
    }

    pub fn left(&self) -> Vertex {
        self.0
    }

    pub fn right(&self) -> Vertex {
        self.1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }

    /// True if `v` lies strictly inside the disk interval of the pair.
    pub fn encloses(&self, v: Vertex) -> bool {
        self.0 < v && v < self.1
    }

    pub fn is_propagating(&self) -> bool {
        self.0.row != self.1.row
    }

    pub fn shifted(&self, delta: isize) -> Option<Self> {
        Some(VertexPair::new(
            self.0.shifted(delta)?,
            self.1.shifted(delta)?,
        ))
    }
}

impl fmt::Display for VertexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// Crossing test for two disjoint pairs: exactly one end of `b` lies
/// strictly inside the disk interval of `a`.
pub fn pairs_cross(a: VertexPair, b: VertexPair, n_top: usize, n_bottom: usize) -> Result<bool> {
    for v in [a.0, a.1, b.0, b.1] {
        v.check(n_top, n_bottom)?;
    }
    if a.0 == a.1 || b.0 == b.1 {
        return Err(Error::InvalidInput(format!("degenerate pair in {a}, {b}")));
    }
    if a.contains(b.0) || a.contains(b.1) {
        return Err(Error::InvalidInput(format!("pairs {a} and {b} overlap")));
    }
    Ok(cross_unchecked(a, b))
}

pub(crate) fn cross_unchecked(a: VertexPair, b: VertexPair) -> bool {
    a.encloses(b.0) != a.encloses(b.1)
}

/// A set of disjoint vertex pairs in an ambient `J(n_top, n_bottom)`
/// context, not necessarily covering every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairSet {
    pub n_top: usize,
    pub n_bottom: usize,
    pairs: Vec<VertexPair>,
}

impl PairSet {
    pub fn new(
        n_top: usize,
        n_bottom: usize,
        pairs: impl IntoIterator<Item = VertexPair>,
    ) -> Result<Self> {
        let mut pairs: Vec<VertexPair> = pairs.into_iter().collect();
        let mut seen = vec![false; n_top + n_bottom];
        for p in &pairs {
            for v in [p.0, p.1] {
                v.check(n_top, n_bottom)?;
                let k = v.pos(n_top, n_bottom);
                if seen[k] {
                    return Err(Error::NotMatching(format!("vertex {v} used twice")));
                }
                seen[k] = true;
            }
        }
        pairs.sort();
        Ok(PairSet {
            n_top,
            n_bottom,
            pairs,
        })
    }

    pub fn pairs(&self) -> &[VertexPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Relabel every index by `delta`; the ambient sizes change by `delta`.
    pub fn shift(&self, delta: isize) -> Result<Self> {
        if delta < 0 && (self.n_top as isize + delta < 0 || self.n_bottom as isize + delta < 0) {
            return Err(Error::InvalidShift(format!(
                "ambient J({},{})",
                self.n_top, self.n_bottom
            )));
        }
        let mut out = Vec::with_capacity(self.pairs.len());
        for p in &self.pairs {
            let q = p.shifted(delta).ok_or_else(|| {
                let v = if p.0.index as isize + delta < 1 {
                    p.0
                } else {
                    p.1
                };
                Error::InvalidShift(v.to_string())
            })?;
            out.push(q);
        }
        PairSet::new(
            (self.n_top as isize + delta) as usize,
            (self.n_bottom as isize + delta) as usize,
            out,
        )
    }

    /// Disjoint union inside the same ambient context.
    pub fn union(&self, other: &PairSet) -> Result<PairSet> {
        if (self.n_top, self.n_bottom) != (other.n_top, other.n_bottom) {
            return Err(Error::ContextMismatch(format!(
                "J({},{}) vs J({},{})",
                self.n_top, self.n_bottom, other.n_top, other.n_bottom
            )));
        }
        PairSet::new(
            self.n_top,
            self.n_bottom,
            self.pairs.iter().chain(&other.pairs).copied(),
        )
    }

    pub fn into_partition(self) -> Result<PairPartition> {
        PairPartition::new(self.n_top, self.n_bottom, self.pairs)
    }
}

/// A perfect matching on `n_top` top and `n_bottom` bottom vertices.
///
/// Equality, hashing and ordering use the partner table, so two diagrams
/// compare equal exactly when they have the same pairs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairPartition {
    n_top: usize,
    n_bottom: usize,
    partner: Vec<u16>,
}

impl PairPartition {
    pub fn new(
        n_top: usize,
        n_bottom: usize,
        pairs: impl IntoIterator<Item = VertexPair>,
    ) -> Result<Self> {
        let n = n_top + n_bottom;
        let mut partner = vec![u16::MAX; n];
        for p in pairs {
            if p.0 == p.1 {
                return Err(Error::NotMatching(format!("pair {p} repeats a vertex")));
            }
            p.0.check(n_top, n_bottom)?;
            p.1.check(n_top, n_bottom)?;
            let (a, b) = (p.0.pos(n_top, n_bottom), p.1.pos(n_top, n_bottom));
            if partner[a] != u16::MAX || partner[b] != u16::MAX {
                return Err(Error::NotMatching(format!("pair {p} reuses a vertex")));
            }
            partner[a] = b as u16;
            partner[b] = a as u16;
        }
        if let Some(k) = partner.iter().position(|&x| x == u16::MAX) {
            return Err(Error::NotMatching(format!(
                "vertex {} is unmatched",
                Vertex::at(k, n_top, n_bottom)
            )));
        }
        Ok(PairPartition {
            n_top,
            n_bottom,
            partner,
        })
    }

    /// Build from a 0-based disk-position partner table. The table must be
    /// an involution without fixed points.
    pub(crate) fn from_partner(n_top: usize, n_bottom: usize, partner: Vec<u16>) -> Self {
        debug_assert_eq!(partner.len(), n_top + n_bottom);
        debug_assert!(partner
            .iter()
            .enumerate()
            .all(|(i, &j)| j as usize != i && partner[j as usize] as usize == i));
        PairPartition {
            n_top,
            n_bottom,
            partner,
        }
    }

    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|k| (2 * n - 1 - k) as u16).collect();
        Self::from_partner(n, n, partner)
    }

    /// The empty diagram in `J(0,0)`.
    pub fn empty() -> Self {
        Self::from_partner(0, 0, Vec::new())
    }

    /// The cup `{{1',2'}}` in `J(0,2)`.
    pub fn cup() -> Self {
        Self::from_partner(0, 2, vec![1, 0])
    }

    /// The cap `{{1,2}}` in `J(2,0)`.
    pub fn cap() -> Self {
        Self::from_partner(2, 0, vec![1, 0])
    }

    pub fn n_top(&self) -> usize {
        self.n_top
    }

    pub fn n_bottom(&self) -> usize {
        self.n_bottom
    }

    pub fn n_points(&self) -> usize {
        self.partner.len()
    }

    pub(crate) fn partner_pos(&self, pos: usize) -> usize {
        self.partner[pos] as usize
    }

    pub(crate) fn vertex_at(&self, pos: usize) -> Vertex {
        Vertex::at(pos, self.n_top, self.n_bottom)
    }

    pub(crate) fn pos_of(&self, v: Vertex) -> usize {
        v.pos(self.n_top, self.n_bottom)
    }

    pub fn partner_of(&self, v: Vertex) -> Result<Vertex> {
        v.check(self.n_top, self.n_bottom)?;
        Ok(self.vertex_at(self.partner_pos(self.pos_of(v))))
    }

    pub fn contains_pair(&self, pair: VertexPair) -> bool {
        pair.0.is_valid(self.n_top, self.n_bottom)
            && pair.1.is_valid(self.n_top, self.n_bottom)
            && self.partner_pos(self.pos_of(pair.0)) == self.pos_of(pair.1)
    }

    /// Pairs as `(smaller, larger)` 0-based disk positions, sorted.
    pub(crate) fn position_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.partner
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i < j as usize)
            .map(|(i, &j)| (i, j as usize))
    }

    /// Pairs in canonical order (by smaller disk position).
    pub fn pairs(&self) -> Vec<VertexPair> {
        self.position_pairs()
            .map(|(a, b)| VertexPair(self.vertex_at(a), self.vertex_at(b)))
            .collect()
    }

    pub fn to_pair_set(&self) -> PairSet {
        PairSet {
            n_top: self.n_top,
            n_bottom: self.n_bottom,
            pairs: self.pairs(),
        }
    }

    pub fn propagating_count(&self) -> usize {
        (0..self.n_top)
            .filter(|&i| self.partner_pos(i) >= self.n_top)
            .count()
    }

    /// Number of crossing pairs-of-pairs.
    pub fn chi(&self) -> usize {
        let pairs: Vec<_> = self.position_pairs().collect();
        let mut count = 0;
        for (k, &(_, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[k + 1..] {
                // c exceeds the left end by the sort order
                if c < b && b < d {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_noncrossing(&self) -> bool {
        // stack check: scanning positions, every closing end must match the
        // most recent open pair
        let mut stack = Vec::new();
        for (i, &j) in self.partner.iter().enumerate() {
            let j = j as usize;
            if j > i {
                stack.push(i);
            } else if stack.pop() != Some(j) {
                return false;
            }
        }
        true
    }

    /// Side-by-side concatenation: `other` is placed to the right.
    pub fn tensor(&self, other: &PairPartition) -> PairPartition {
        let (n, m) = (self.n_top, self.n_bottom);
        let (n2, m2) = (other.n_top, other.n_bottom);
        let pairs = self
            .pairs()
            .into_iter()
            .chain(other.pairs().into_iter().map(|p| {
                let lift = |v: Vertex| match v.row {
                    Row::Top => Vertex::top(v.index + n),
                    Row::Bottom => Vertex::bottom(v.index + m),
                };
                VertexPair::new(lift(p.0), lift(p.1))
            }));
        PairPartition::new(n + n2, m + m2, pairs).expect("tensor of valid diagrams is valid")
    }

    /// Upside-down reflection, `J(n,m) -> J(m,n)`.
    pub fn flip(&self) -> PairPartition {
        let pairs = self
            .pairs()
            .into_iter()
            .map(|p| VertexPair::new(p.0.flipped(), p.1.flipped()));
        PairPartition::new(self.n_bottom, self.n_top, pairs)
            .expect("flip of a valid diagram is valid")
    }

    /// Relabel all indices by `delta` (`+1` or `-1`). The result lives in
    /// the context grown or shrunk by one in each row and, for `+1`, leaves
    /// `1` and `1'` unmatched.
    pub fn shift(&self, delta: isize) -> Result<PairSet> {
        if delta != 1 && delta != -1 {
            return Err(Error::InvalidInput(format!(
                "shift by {delta}, expected +1 or -1"
            )));
        }
        self.to_pair_set().shift(delta)
    }

    pub fn to_literal(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for PairPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "J({},{}):", self.n_top, self.n_bottom)?;
        for p in self.pairs() {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PairPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PairPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lit = parse_literal(s)?;
        if lit.head != "J" {
            return Err(Error::Parse(format!(
                "expected 'J(..)' header, found '{}'",
                lit.head
            )));
        }
        if lit.pairs.iter().any(|(_, marked)| *marked) {
            return Err(Error::Parse(
                "blob marks are not allowed in a J literal".into(),
            ));
        }
        PairPartition::new(
            lit.n_top,
            lit.n_bottom,
            lit.pairs.into_iter().map(|(p, _)| p),
        )
    }
}

/// A parsed diagram literal `head(n,m): (a,b)(c,d)*...`.
pub(crate) struct Literal {
    pub head: String,
    pub n_top: usize,
    pub n_bottom: usize,
    pub pairs: Vec<(VertexPair, bool)>,
}

pub(crate) fn parse_literal(s: &str) -> Result<Literal> {
    let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let open = text
        .find('(')
        .ok_or_else(|| Error::Parse(format!("missing '(' in {s:?}")))?;
    let head = text[..open].to_string();
    let close = text[open..]
        .find(')')
        .map(|k| k + open)
        .ok_or_else(|| Error::Parse(format!("missing ')' in {s:?}")))?;
    let dims: Vec<&str> = text[open + 1..close].split(',').collect();
    if dims.len() != 2 {
        return Err(Error::Parse(format!("expected two sizes in {s:?}")));
    }
    let parse_usize = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
    };
    let (n_top, n_bottom) = (parse_usize(dims[0])?, parse_usize(dims[1])?);
    let rest = text[close + 1..]
        .strip_prefix(':')
        .ok_or_else(|| Error::Parse(format!("missing ':' after header in {s:?}")))?;

    let parse_vertex = |t: &str| -> Result<Vertex> {
        match t.strip_suffix('\'') {
            Some(num) => Ok(Vertex::bottom(parse_usize(num)?)),
            None => Ok(Vertex::top(parse_usize(t)?)),
        }
    };

    let mut pairs = Vec::new();
    let mut rest = rest;
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' at {rest:?}")))?;
        let end = body
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed pair at {rest:?}")))?;
        let ends: Vec<&str> = body[..end].split(',').collect();
        if ends.len() != 2 {
            return Err(Error::Parse(format!(
                "a pair needs two vertices: {:?}",
                &body[..end]
            )));
        }
        let pair = VertexPair::new(parse_vertex(ends[0])?, parse_vertex(ends[1])?);
        rest = &body[end + 1..];
        let marked = if let Some(r) = rest.strip_prefix('*') {
            rest = r;
            true
        } else {
            false
        };
        pairs.push((pair, marked));
    }
    Ok(Literal {
        head,
        n_top,
        n_bottom,
        pairs,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Filter {
    All,
    NonCrossing,
}

/// Resource caps for exhaustive enumerations and closures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_points: usize,
    pub max_diagrams: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_points: DEFAULT_MAX_POINTS,
            max_diagrams: 2_500_000,
        }
    }
}

impl Limits {
    /// Defaults, with `SBL_MAX_POINTS` overriding the point cap.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(n) = std::env::var("SBL_MAX_POINTS")
            .ok()
            .and_then(|v| v.parse().ok())
        {
            limits.max_points = n;
        }
        limits
    }
}

/// All pair partitions of `J(n_top, n_bottom)` (or only the non-crossing
/// ones), in lexicographic order of their canonical pair lists.
pub fn enumerate(
    n_top: usize,
    n_bottom: usize,
    filter: Filter,
    limits: &Limits,
) -> Result<Vec<PairPartition>> {
    let n = n_top + n_bottom;
    if n % 2 == 1 {
        return Err(Error::EmptySet(n));
    }
    if n > limits.max_points {
        return Err(Error::ResourceLimit(format!(
            "J({n_top},{n_bottom}) has {n} points, cap is {}",
            limits.max_points
        )));
    }
    let mut out = Vec::new();
    let mut partner = vec![u16::MAX; n];
    fill(&mut partner, 0, filter, &mut |p| {
        out.push(PairPartition::from_partner(n_top, n_bottom, p.to_vec()));
    });
    Ok(out)
}

fn fill(partner: &mut [u16], from: usize, filter: Filter, emit: &mut dyn FnMut(&[u16])) {
    let n = partner.len();
    let Some(a) = (from..n).find(|&k| partner[k] == u16::MAX) else {
        emit(partner);
        return;
    };
    for b in a + 1..n {
        if partner[b] != u16::MAX {
            continue;
        }
        if filter == Filter::NonCrossing {
            // every free vertex strictly between a and b must pair inside,
            // and no earlier pair may end strictly between a and b
            let inside_free = (a + 1..b).filter(|&k| partner[k] == u16::MAX).count();
            if inside_free % 2 == 1 || (a + 1..b).any(|k| partner[k] != u16::MAX) {
                continue;
            }
        }
        partner[a] = b as u16;
        partner[b] = a as u16;
        fill(partner, a + 1, filter, emit);
        partner[a] = u16::MAX;
        partner[b] = u16::MAX;
    }
}

/// `(2k-1)!!`, the number of perfect matchings on `2k` points.
pub fn double_factorial_count(points: usize) -> u128 {
    (1..points).step_by(2).map(|k| k as u128).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(s: &str) -> PairPartition {
        s.parse().unwrap()
    }

    #[test]
    fn disk_positions() {
        assert_eq!(Vertex::top(3).disk_position(5, 3).unwrap(), 3);
        assert_eq!(Vertex::bottom(1).disk_position(5, 3).unwrap(), 8);
        assert_eq!(Vertex::bottom(3).disk_position(5, 3).unwrap(), 6);
        assert!(matches!(
            Vertex::bottom(4).disk_position(5, 3),
            Err(Error::InvalidVertex(_))
        ));
        assert!(matches!(
            Vertex::top(0).disk_position(5, 3),
            Err(Error::InvalidVertex(_))
        ));
    }

    #[test]
    fn disk_position_is_a_bijection() {
        for (n, m) in [(0, 2), (3, 5), (4, 4), (7, 1)] {
            let mut seen: Vec<usize> = (1..=n)
                .map(Vertex::top)
                .chain((1..=m).map(Vertex::bottom))
                .map(|v| v.disk_position(n, m).unwrap())
                .collect();
            seen.sort();
            assert_eq!(seen, (1..=n + m).collect::<Vec<_>>());
        }
    }

    #[test]
    fn crossing_predicate() {
        let p = |a, b| VertexPair::new(a, b);
        let (t, b) = (Vertex::top, Vertex::bottom);
        assert!(pairs_cross(p(t(1), t(3)), p(t(2), t(4)), 4, 0).unwrap());
        assert!(!pairs_cross(p(t(1), t(2)), p(t(3), t(4)), 4, 0).unwrap());
        assert!(!pairs_cross(p(t(1), t(4)), p(t(2), t(3)), 4, 0).unwrap());
        assert!(pairs_cross(p(t(2), t(7)), p(t(3), b(3)), 7, 3).unwrap());
        assert!(matches!(
            pairs_cross(p(t(1), t(2)), p(t(2), t(3)), 4, 0),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn crossing_matches_position_oracle() {
        // brute force over all 4-subsets of disk positions: the induced
        // pattern is interleaved iff the sorted positions alternate owners
        let (n, m) = (4, 4);
        let verts: Vec<Vertex> = (1..=n)
            .map(Vertex::top)
            .chain((1..=m).map(Vertex::bottom))
            .collect();
        for &a in &verts {
            for &b in &verts {
                for &c in &verts {
                    for &d in &verts {
                        let mut all = [a, b, c, d];
                        all.sort();
                        if all.windows(2).any(|w| w[0] == w[1]) || a >= b || c >= d || a > c {
                            continue;
                        }
                        let pos = |v: Vertex| v.disk_position(n, m).unwrap();
                        let mut tagged = [(pos(a), 0), (pos(b), 0), (pos(c), 1), (pos(d), 1)];
                        tagged.sort();
                        let interleaved = tagged[0].1 == tagged[2].1;
                        let got = pairs_cross(VertexPair::new(a, b), VertexPair::new(c, d), n, m)
                            .unwrap();
                        assert_eq!(got, interleaved, "{a} {b} {c} {d}");
                    }
                }
            }
        }
    }

    #[test]
    fn chi_examples() {
        assert_eq!(PairPartition::identity(5).chi(), 0);
        assert_eq!(lit("J(2,2): (1,2')(2,1')").chi(), 1);
        let p = lit("J(7,3): (1,2')(2,7)(3,3')(4,1')(5,6)");
        assert_eq!(p.chi(), 4);
        // oracle: count interleaved pairs-of-pairs with the public predicate
        let pairs = p.pairs();
        let mut brute = 0;
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                brute += pairs_cross(pairs[i], pairs[j], 7, 3).unwrap() as usize;
            }
        }
        assert_eq!(brute, 4);
    }

    #[test]
    fn tensor_examples() {
        let id1 = PairPartition::identity(1);
        assert_eq!(id1.tensor(&id1), PairPartition::identity(2));
        assert_eq!(
            PairPartition::cup().tensor(&PairPartition::cap()),
            lit("J(2,2): (1',2')(1,2)")
        );
        let sigma = lit("J(2,2): (1,2')(2,1')");
        assert_eq!(sigma.tensor(&id1), lit("J(3,3): (1,2')(2,1')(3,3')"));
        assert_eq!(PairPartition::empty().tensor(&sigma), sigma);
        assert_eq!(sigma.tensor(&PairPartition::empty()), sigma);
    }

    #[test]
    fn flip_examples() {
        assert_eq!(PairPartition::cup().flip(), PairPartition::cap());
        assert_eq!(
            PairPartition::identity(4).flip(),
            PairPartition::identity(4)
        );
        let sigma = lit("J(2,2): (1,2')(2,1')");
        assert_eq!(sigma.flip(), sigma);
        let p = lit("J(3,1): (1,1')(2,3)");
        assert_eq!(p.flip(), lit("J(1,3): (1',1)(2',3')"));
    }

    #[test]
    fn shift_examples() {
        let p = PairPartition::identity(1);
        let up = p.shift(1).unwrap();
        assert_eq!((up.n_top, up.n_bottom), (2, 2));
        assert_eq!(
            up.pairs(),
            &[VertexPair::new(Vertex::top(2), Vertex::bottom(2))]
        );
        assert_eq!(up.shift(-1).unwrap().into_partition().unwrap(), p);
        assert!(matches!(p.shift(-1), Err(Error::InvalidShift(_))));
        assert!(p.shift(2).is_err());
    }

    #[test]
    fn noncrossing_examples() {
        assert!(PairPartition::identity(3).is_noncrossing());
        assert!(!lit("J(2,2): (1,2')(2,1')").is_noncrossing());
        assert!(lit("J(2,2): (1,2)(1',2')").is_noncrossing());
    }

    #[test]
    fn enumeration_counts() {
        let lim = Limits::default();
        let j22 = enumerate(2, 2, Filter::All, &lim).unwrap();
        assert_eq!(j22.len(), 3);
        assert!(j22.contains(&PairPartition::identity(2)));
        assert!(j22.contains(&lit("J(2,2): (1,2')(2,1')")));
        assert!(j22.contains(&lit("J(2,2): (1,2)(1',2')")));
        assert_eq!(enumerate(3, 3, Filter::All, &lim).unwrap().len(), 15);
        let nc = enumerate(4, 4, Filter::NonCrossing, &lim).unwrap();
        assert_eq!(nc.len(), 14);
        let brute = enumerate(4, 4, Filter::All, &lim)
            .unwrap()
            .into_iter()
            .filter(|p| p.is_noncrossing())
            .count();
        assert_eq!(brute, 14);
        assert_eq!(enumerate(3, 2, Filter::All, &lim), Err(Error::EmptySet(5)));
        assert!(matches!(
            enumerate(9, 9, Filter::All, &lim),
            Err(Error::ResourceLimit(_))
        ));
        assert_eq!(
            enumerate(0, 0, Filter::All, &lim).unwrap(),
            vec![PairPartition::empty()]
        );
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        let lim = Limits::default();
        for (n, m) in [(2, 4), (3, 3), (6, 0), (4, 4)] {
            let all = enumerate(n, m, Filter::All, &lim).unwrap();
            assert_eq!(all.len() as u128, double_factorial_count(n + m));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            let nc = enumerate(n, m, Filter::NonCrossing, &lim).unwrap();
            let filtered: Vec<_> = all.into_iter().filter(|p| p.is_noncrossing()).collect();
            assert_eq!(nc, filtered);
        }
    }

    #[test]
    fn literal_roundtrip_and_errors() {
        let s = lit("J(2,2): (1,2')(2,1')");
        assert_eq!(lit(&s.to_string()), s);
        assert_eq!(lit("J(0,0):"), PairPartition::empty());
        assert_eq!(lit(" J ( 2 , 2 ) : ( 2 , 1' ) ( 1 , 2' ) "), s);
        assert!("J(2,2): (1,2')".parse::<PairPartition>().is_err());
        assert!("J(2,2): (1,2')(1,1')".parse::<PairPartition>().is_err());
        assert!("J(2,2): (1,1)(2',1')".parse::<PairPartition>().is_err());
        assert!("J(2,2): (1,3')(2,1')".parse::<PairPartition>().is_err());
        assert!("K(2,2): (1,2')(2,1')".parse::<PairPartition>().is_err());
    }
}
