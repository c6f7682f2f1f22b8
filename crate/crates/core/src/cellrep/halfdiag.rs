use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::brauer::{compose, monoid_closure, GeneratorSet};
use crate::error::{Error, Result};
use crate::pairpart::{Limits, PairPartition, Row, Vertex, VertexPair};

/// Symmetric or antisymmetric label on the first two propagating lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
    None,
}

/// A cell label `(m, sign)`, written `4+`, `2-` or `1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Lambda {
    pub m: usize,
    pub sign: Sign,
}

impl Lambda {
    pub fn new(m: usize, sign: Sign) -> Result<Self> {
        match (m >= 2, sign) {
            (true, Sign::None) => Err(Error::InvalidInput(format!("label {m} needs a sign"))),
            (false, Sign::Plus | Sign::Minus) => {
                Err(Error::InvalidInput(format!("label {m} takes no sign")))
            }
            _ => Ok(Lambda { m, sign }),
        }
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign {
            Sign::Plus => "+",
            Sign::Minus => "-",
            Sign::None => "",
        };
        write!(f, "{}{s}", self.m)
    }
}

impl FromStr for Lambda {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (digits, sign) = match s.strip_suffix('+') {
            Some(d) => (d, Sign::Plus),
            None => match s.strip_suffix('-') {
                Some(d) => (d, Sign::Minus),
                None => (s, Sign::None),
            },
        };
        let m = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad cell label {s:?}")))?;
        Lambda::new(m, sign)
    }
}

/// A diagram in `J(n,m)` whose bottom vertices all lie on propagating
/// lines, taken up to the swap of `1'` and `2'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfDiagram {
    diagram: PairPartition,
}

impl HalfDiagram {
    pub fn diagram(&self) -> &PairPartition {
        &self.diagram
    }

    pub fn n(&self) -> usize {
        self.diagram.n_top()
    }

    pub fn m(&self) -> usize {
        self.diagram.n_bottom()
    }

    /// Keep the top arcs and the `m` propagating lines of `d`, reattach
    /// the lines to `1'..m'` preserving the order of their bottom ends,
    /// then normalise. `None` if `d` has a different number of lines.
    pub fn strip(d: &PairPartition, m: usize) -> Option<HalfDiagram> {
        let mut arcs = Vec::new();
        let mut lines = Vec::new();
        for pair in d.pairs() {
            match (pair.0.row, pair.1.row) {
                (Row::Top, Row::Top) => arcs.push(pair),
                (Row::Top, Row::Bottom) => lines.push((pair.1.index, pair.0)),
                _ => {}
            }
        }
        if lines.len() != m {
            return None;
        }
        lines.sort();
        let pairs = arcs.into_iter().chain(
            lines
                .into_iter()
                .enumerate()
                .map(|(k, (_, top))| VertexPair::new(top, Vertex::bottom(k + 1))),
        );
        let p = PairPartition::new(d.n_top(), m, pairs).expect("stripped diagram is a matching");
        Some(HalfDiagram::normalized(p))
    }

    fn normalized(p: PairPartition) -> HalfDiagram {
        if p.n_bottom() < 2 {
            return HalfDiagram { diagram: p };
        }
        let swap = |v: Vertex| match (v.row, v.index) {
            (Row::Bottom, 1) => Vertex::bottom(2),
            (Row::Bottom, 2) => Vertex::bottom(1),
            _ => v,
        };
        let q = PairPartition::new(
            p.n_top(),
            p.n_bottom(),
            p.pairs()
                .into_iter()
                .map(|v| VertexPair::new(swap(v.0), swap(v.1))),
        )
        .expect("relabelled matching");
        HalfDiagram { diagram: p.min(q) }
    }

    /// Lines `1..m` to `1'..m'` followed by arcs `{m+1,m+2}, ..`.
    pub fn seed(n: usize, m: usize) -> Result<HalfDiagram> {
        if m > n || !(n - m).is_multiple_of(2) {
            return Err(Error::Domain(format!("no half diagrams for n={n}, m={m}")));
        }
        let lines = (1..=m).map(|k| VertexPair::new(Vertex::top(k), Vertex::bottom(k)));
        let arcs = (m + 1..n)
            .step_by(2)
            .map(|k| VertexPair::new(Vertex::top(k), Vertex::top(k + 1)));
        Ok(HalfDiagram::normalized(PairPartition::new(
            n,
            m,
            lines.chain(arcs),
        )?))
    }
}

impl fmt::Display for HalfDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.diagram, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasisMethod {
    /// Strip every diagram of the monoid generated by `σ_1, U_1..U_{n-1}`.
    Closure,
    /// Orbit of [`HalfDiagram::seed`] under left multiplication by the same
    /// generators, dropping products that lose a line.
    Orbit,
}

/// Basis of the cell module with `m` lines at rank `n`, sorted.
pub fn half_diagram_basis(
    n: usize,
    m: usize,
    method: BasisMethod,
    limits: &Limits,
) -> Result<Vec<HalfDiagram>> {
    let seed = HalfDiagram::seed(n, m)?;
    let gens = GeneratorSet::coxeter(2, 1, n).diagrams();
    let mut out: BTreeSet<HalfDiagram> = BTreeSet::new();
    match method {
        BasisMethod::Closure => {
            for d in monoid_closure(&gens, n, limits.max_diagrams)? {
                if let Some(h) = HalfDiagram::strip(&d, m) {
                    out.insert(h);
                }
            }
        }
        BasisMethod::Orbit => {
            out.insert(seed.clone());
            let mut frontier = vec![seed];
            while let Some(h) = frontier.pop() {
                for g in &gens {
                    let (r, _) = compose(g, h.diagram())?;
                    if let Some(next) = HalfDiagram::strip(&r, m) {
                        if !out.contains(&next) {
                            if out.len() >= limits.max_diagrams {
                                return Err(Error::ResourceLimit(format!(
                                    "cell basis exceeds {}",
                                    limits.max_diagrams
                                )));
                            }
                            out.insert(next.clone());
                            frontier.push(next);
                        }
                    }
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(
            "4+".parse::<Lambda>().unwrap(),
            Lambda {
                m: 4,
                sign: Sign::Plus
            }
        );
        assert_eq!("2-".parse::<Lambda>().unwrap().to_string(), "2-");
        assert_eq!(
            "1".parse::<Lambda>().unwrap(),
            Lambda {
                m: 1,
                sign: Sign::None
            }
        );
        assert!("2".parse::<Lambda>().is_err());
        assert!("0+".parse::<Lambda>().is_err());
        assert!("x".parse::<Lambda>().is_err());
    }

    #[test]
    fn sizes() {
        let l = Limits::default();
        for (n, m, size) in [
            (3, 1, 3),
            (4, 2, 4),
            (5, 1, 11),
            (6, 0, 11),
            (6, 4, 6),
            (6, 2, 16),
            (4, 0, 3),
        ] {
            let b = half_diagram_basis(n, m, BasisMethod::Orbit, &l).unwrap();
            assert_eq!(b.len(), size, "({n},{m})");
        }
        let b = half_diagram_basis(3, 1, BasisMethod::Orbit, &l).unwrap();
        let arcs: Vec<String> = b.iter().map(|h| h.to_string()).collect();
        assert_eq!(
            arcs,
            [
                "J(3,1): (1,2) (3,1')",
                "J(3,1): (1,3) (2,1')",
                "J(3,1): (1,1') (2,3)"
            ]
        );
    }

    #[test]
    fn methods_agree() {
        let l = Limits::default();
        for n in 1..=6 {
            for m in (n % 2..=n).step_by(2) {
                let a = half_diagram_basis(n, m, BasisMethod::Closure, &l).unwrap();
                let b = half_diagram_basis(n, m, BasisMethod::Orbit, &l).unwrap();
                assert_eq!(a, b, "({n},{m})");
            }
        }
        assert!(half_diagram_basis(4, 1, BasisMethod::Orbit, &l).is_err());
    }
}
