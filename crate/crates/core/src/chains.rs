//! Chains of pairs and the Li-chain subsets `J^i_{≤i-1}(m,n)`.
//!
//! A chain is a sequence of pairs `{l_1,r_1}, .., {l_j,r_j}` whose
//! endpoints appear around the disk in the order
//! `l_1 < l_2 < r_1 < l_3 < r_2 < .. < l_j < r_{j-1} < r_j`, so consecutive
//! links cross and the boundary heights read `0,1,(2,1)^{j-1},0`.
//! A diagram is Li-chain when it splits into `i` chains running from
//! top vertex `k` to some bottom vertex in `1'..i'` with pairwise disjoint
//! link regions, plus a remainder crossing nothing.

use std::collections::BTreeSet;
use std::fmt;

use crate::brauer::{compose, generator, monoid_closure, Generator, GeneratorSet};
use crate::error::{Error, Result};
use crate::pairpart::{enumerate, Filter, Limits, PairPartition, Vertex, VertexPair};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chain {
    links: Vec<VertexPair>,
}

impl Chain {
    pub fn new(links: Vec<VertexPair>) -> Result<Chain> {
        if !is_chain(&links) {
            let shown: Vec<String> = links.iter().map(|l| l.to_string()).collect();
            return Err(Error::InvalidInput(format!(
                "not a chain: [{}]",
                shown.join(" ")
            )));
        }
        Ok(Chain { links })
    }

    pub fn links(&self) -> &[VertexPair] {
        &self.links
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    pub fn start(&self) -> Vertex {
        self.links[0].left()
    }

    pub fn end(&self) -> Vertex {
        self.links[self.links.len() - 1].right()
    }

    /// Open disk intervals `(l_{k+1}, r_k)` where consecutive links overlap.
    pub fn link_regions(&self) -> Vec<(Vertex, Vertex)> {
        self.links
            .windows(2)
            .map(|w| (w[1].left(), w[0].right()))
            .collect()
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for l in &self.links {
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

/// Whether `links` (in order) form a chain. A single pair always does.
pub fn is_chain(links: &[VertexPair]) -> bool {
    if links.is_empty() {
        return false;
    }
    let mut seen = BTreeSet::new();
    if !links.iter().all(|l| seen.insert(l.0) && seen.insert(l.1)) {
        return false;
    }
    let interleaved = links.windows(2).all(|w| {
        w[0].left() < w[1].left() && w[1].left() < w[0].right() && w[0].right() < w[1].right()
    });
    let separated = links.windows(3).all(|w| w[0].right() < w[2].left());
    interleaved && separated
}

/// Heights of the boundary intervals cut out by the chain endpoints, read
/// from the first interval in disk order. Each height counts the links
/// whose span covers the interval.
pub fn boundary_height_seq(links: &[VertexPair]) -> Result<Vec<usize>> {
    if !is_chain(links) {
        return Err(Error::InvalidInput(
            "boundary heights need a valid chain".into(),
        ));
    }
    let mut ends: Vec<Vertex> = links.iter().flat_map(|l| [l.0, l.1]).collect();
    ends.sort();
    let mut seq = vec![0];
    for v in &ends {
        // the interval just after v
        let h = links
            .iter()
            .filter(|l| l.left() <= *v && *v < l.right())
            .count();
        seq.push(h);
    }
    Ok(seq)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub i: usize,
    pub chains: Vec<Chain>,
    pub remainder: Vec<VertexPair>,
}

impl fmt::Display for ChainDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.chains.iter().enumerate() {
            writeln!(f, "c{} = {c}", k + 1)?;
        }
        write!(f, "rest =")?;
        for r in &self.remainder {
            write!(f, " {r}")?;
        }
        Ok(())
    }
}

type PosPair = (usize, usize);

struct Search<'a> {
    p: &'a PairPartition,
    i: usize,
    used: Vec<bool>,
    chains: Vec<Vec<PosPair>>,
    found: Vec<Vec<Vec<PosPair>>>,
}

impl Search<'_> {
    fn root(&mut self, j: usize) {
        if j == self.i {
            if self.accept() {
                self.found.push(self.chains.clone());
            }
            return;
        }
        let b = self.p.partner_pos(j);
        if b < j || self.used[j] {
            return;
        }
        self.mark((j, b), true);
        self.chains.push(vec![(j, b)]);
        self.extend(j);
        self.chains.pop();
        self.mark((j, b), false);
    }

    fn mark(&mut self, (a, b): PosPair, on: bool) {
        self.used[a] = on;
        self.used[b] = on;
    }

    fn extend(&mut self, j: usize) {
        let n = self.p.n_points();
        let chain = self.chains.last().expect("open chain");
        let &(l, r) = chain.last().expect("non-empty chain");
        let floor = if chain.len() >= 2 {
            chain[chain.len() - 2].1 + 1
        } else {
            l + 1
        };
        if r >= n - self.i {
            self.root(j + 1);
        }
        for x in floor.max(l + 1)..r {
            let y = self.p.partner_pos(x);
            if y > r && !self.used[x] {
                self.mark((x, y), true);
                self.chains.last_mut().expect("open chain").push((x, y));
                self.extend(j);
                self.chains.last_mut().expect("open chain").pop();
                self.mark((x, y), false);
            }
        }
    }

    fn accept(&self) -> bool {
        let regions: Vec<Vec<PosPair>> = self
            .chains
            .iter()
            .map(|c| c.windows(2).map(|w| (w[1].0, w[0].1)).collect())
            .collect();
        for a in 0..regions.len() {
            for b in a + 1..regions.len() {
                for x in &regions[a] {
                    for y in &regions[b] {
                        if x.0.max(y.0) < x.1.min(y.1) {
                            return false;
                        }
                    }
                }
            }
        }
        let cross = |(a, b): PosPair, (c, d): PosPair| {
            (a < c && c < b && b < d) || (c < a && a < d && d < b)
        };
        let rest: Vec<PosPair> = self
            .p
            .position_pairs()
            .filter(|&(a, _)| !self.used[a])
            .collect();
        let links: Vec<PosPair> = self.chains.iter().flatten().copied().collect();
        rest.iter().enumerate().all(|(k, &x)| {
            rest[k + 1..].iter().all(|&y| !cross(x, y)) && links.iter().all(|&y| !cross(x, y))
        })
    }
}

/// Every decomposition of `p` into `i` Li-chains and a remainder.
pub fn li_chain_decompositions(p: &PairPartition, i: usize) -> Result<Vec<ChainDecomposition>> {
    if i == 0 || p.n_top() < i || p.n_bottom() < i {
        return Err(Error::Domain(format!(
            "L{i}-chain test needs 1 <= i <= min(m,n) in J({},{})",
            p.n_top(),
            p.n_bottom()
        )));
    }
    let mut s = Search {
        p,
        i,
        used: vec![false; p.n_points()],
        chains: Vec::new(),
        found: Vec::new(),
    };
    s.root(0);
    let to_pair = |(a, b): PosPair| VertexPair(p.vertex_at(a), p.vertex_at(b));
    Ok(s.found
        .into_iter()
        .map(|chains| {
            let mut used = vec![false; p.n_points()];
            for &(a, b) in chains.iter().flatten() {
                used[a] = true;
                used[b] = true;
            }
            ChainDecomposition {
                i,
                chains: chains
                    .into_iter()
                    .map(|c| Chain {
                        links: c.into_iter().map(to_pair).collect(),
                    })
                    .collect(),
                remainder: p
                    .position_pairs()
                    .filter(|&(a, _)| !used[a])
                    .map(to_pair)
                    .collect(),
            }
        })
        .collect())
}

/// The decomposition witnessing `p ∈ J^i_{≤i-1}`, if any. A second
/// decomposition would be an internal inconsistency and is reported as such.
pub fn li_chain_decompose(p: &PairPartition, i: usize) -> Result<Option<ChainDecomposition>> {
    let mut all = li_chain_decompositions(p, i)?;
    match all.len() {
        0 => Ok(None),
        1 => Ok(all.pop()),
        k => Err(Error::Internal(format!(
            "{p} has {k} L{i}-chain decompositions"
        ))),
    }
}

pub fn is_li_chain(p: &PairPartition, i: usize) -> Result<bool> {
    Ok(li_chain_decompose(p, i)?.is_some())
}

/// `J^i_{≤i-1}(m,n)` in enumeration order.
pub fn enumerate_li_chain(
    m: usize,
    n: usize,
    i: usize,
    limits: &Limits,
) -> Result<Vec<PairPartition>> {
    let mut out = Vec::new();
    for p in enumerate(m, n, Filter::All, limits)? {
        if is_li_chain(&p, i)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// Generators `σ_1..σ_i, U_{i+1}..U_{m-1}` of `B_{i+1,i+1,m}`.
pub fn chain_algebra_generators(i: usize, m: usize) -> GeneratorSet {
    GeneratorSet::coxeter(i + 1, i + 1, m)
}

/// Left action of the generators of `B_{i+1,i+1,m}` preserves
/// `J^i_{≤i-1}(m,n)`.
pub fn verify_module_closure(i: usize, m: usize, n: usize, limits: &Limits) -> Result<Report> {
    let set = enumerate_li_chain(m, n, i, limits)?;
    let gens = chain_algebra_generators(i, m);
    let diagrams: Vec<(Generator, PairPartition)> = gens
        .names()
        .into_iter()
        .map(|g| generator(g, m).map(|d| (g, d)))
        .collect::<Result<_>>()?;
    let members: BTreeSet<&PairPartition> = set.iter().collect();
    let mut report = Report::new(format!("module closure L{i} J({m},{n})"));
    report.size("diagrams", set.len());
    report.size("generators", diagrams.len());
    for p in &set {
        for (g, d) in &diagrams {
            let (r, _) = compose(d, p)?;
            report.tally(members.contains(&r), || format!("{g} * {p} = {r}"));
        }
    }
    Ok(report)
}

/// Compare the monoid closure of `B_{i+1,i+1,m}` with `J^i_{≤i-1}(m,m)`.
pub fn verify_chain_basis_theorem(i: usize, m: usize, limits: &Limits) -> Result<Report> {
    let gens = chain_algebra_generators(i, m);
    let closure = monoid_closure(&gens.diagrams(), m, limits.max_diagrams)?;
    let chains = enumerate_li_chain(m, m, i, limits)?;
    let mut report = Report::new(format!("chain basis L{i} m={m}"));
    report.size("closure", closure.len());
    report.size("li_chain", chains.len());
    let names: Vec<String> = gens.names().iter().map(|g| g.to_string()).collect();
    report.check(
        format!("closure of <{}> equals the L{i}-chain set", names.join(",")),
        closure == chains,
    );
    Ok(report)
}
