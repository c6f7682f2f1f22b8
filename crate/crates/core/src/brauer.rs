//! Composition in the Brauer category, formal linear combinations of
//! diagrams, the standard generators and generated submonoids.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pairpart::{PairPartition, Vertex, VertexPair};
use crate::report::Report;
use crate::scalars::{Poly, PolyTerm};

/// Result of stacking two diagrams: the composite partner table plus the
/// closed loops, split by whether a loop touched a marked pair.
pub(crate) struct Traced {
    pub partner: Vec<u16>,
    /// For each result position, whether its chain met a marked pair.
    pub marked: Vec<bool>,
    pub loops: usize,
    pub marked_loops: usize,
}

/// Stack `top` (in `J(m,n)`) over `bottom` (in `J(n,q)`) and follow chains
/// through the shared middle row. `marks_*` flag, per disk position, the
/// ends of marked pairs; pass empty slices for unmarked diagrams.
pub(crate) fn trace(
    top: &PairPartition,
    bottom: &PairPartition,
    marks_top: &[bool],
    marks_bottom: &[bool],
) -> Result<Traced> {
    let (m, n) = (top.n_top(), top.n_bottom());
    if bottom.n_top() != n {
        return Err(Error::ContextMismatch(format!(
            "cannot compose J({m},{n}) with J({},{})",
            bottom.n_top(),
            bottom.n_bottom()
        )));
    }
    let q = bottom.n_bottom();
    let mark_top = |k: usize| marks_top.get(k).copied().unwrap_or(false);
    let mark_bottom = |k: usize| marks_bottom.get(k).copied().unwrap_or(false);

    let mut mid_seen = vec![false; n];
    let mut partner = vec![u16::MAX; m + q];
    let mut marked = vec![false; m + q];

    // follow from an outer vertex; `in_top` says which diagram's pair is
    // next, `pos` is the position inside that diagram
    let follow = |mut in_top: bool, mut pos: usize, mid_seen: &mut [bool]| -> (usize, bool) {
        let mut mark = false;
        loop {
            if in_top {
                mark |= mark_top(pos);
                let b = top.partner_pos(pos);
                if b < m {
                    return (b, mark);
                }
                let j = m + n - 1 - b;
                mid_seen[j] = true;
                in_top = false;
                pos = j;
            } else {
                mark |= mark_bottom(pos);
                let c = bottom.partner_pos(pos);
                if c >= n {
                    let k = n + q - 1 - c;
                    return (m + q - 1 - k, mark);
                }
                mid_seen[c] = true;
                in_top = true;
                pos = m + n - 1 - c;
            }
        }
    };

    for start in 0..m + q {
        if partner[start] != u16::MAX {
            continue;
        }
        let (end, mark) = if start < m {
            follow(true, start, &mut mid_seen)
        } else {
            let k = m + q - 1 - start;
            follow(false, n + q - 1 - k, &mut mid_seen)
        };
        partner[start] = end as u16;
        partner[end] = start as u16;
        marked[start] = mark;
        marked[end] = mark;
    }

    let (mut loops, mut marked_loops) = (0, 0);
    for j0 in 0..n {
        if mid_seen[j0] {
            continue;
        }
        let mut mark = false;
        let mut j = j0;
        loop {
            mid_seen[j] = true;
            mark |= mark_bottom(j);
            let c = bottom.partner_pos(j);
            debug_assert!(c < n);
            mid_seen[c] = true;
            let a = m + n - 1 - c;
            mark |= mark_top(a);
            let b = top.partner_pos(a);
            debug_assert!(b >= m);
            j = m + n - 1 - b;
            if j == j0 {
                break;
            }
        }
        if mark {
            marked_loops += 1;
        } else {
            loops += 1;
        }
    }
    Ok(Traced {
        partner,
        marked,
        loops,
        marked_loops,
    })
}

/// `p1 * p2 = δ^loops · (p1 . p2)`, with `p1` drawn above `p2`.
pub fn compose(p1: &PairPartition, p2: &PairPartition) -> Result<(PairPartition, usize)> {
    let t = trace(p1, p2, &[], &[])?;
    Ok((
        PairPartition::from_partner(p1.n_top(), p2.n_bottom(), t.partner),
        t.loops,
    ))
}

/// A finite formal combination of diagrams of one shape with polynomial
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct DiagramSum {
    n_top: usize,
    n_bottom: usize,
    terms: BTreeMap<PairPartition, Poly>,
}

impl DiagramSum {
    pub fn zero(n_top: usize, n_bottom: usize) -> Self {
        DiagramSum {
            n_top,
            n_bottom,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(p: PairPartition) -> Self {
        Self::term(p, Poly::one())
    }

    pub fn term(p: PairPartition, coeff: Poly) -> Self {
        let mut s = DiagramSum::zero(p.n_top(), p.n_bottom());
        s.add_term(p, coeff).expect("shape matches");
        s
    }

    pub fn context(&self) -> (usize, usize) {
        (self.n_top, self.n_bottom)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &PairPartition) -> Poly {
        self.terms.get(p).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PairPartition, &Poly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, p: PairPartition, coeff: Poly) -> Result<()> {
        if (p.n_top(), p.n_bottom()) != (self.n_top, self.n_bottom) {
            return Err(Error::ContextMismatch(format!(
                "diagram {p} added to a sum over J({},{})",
                self.n_top, self.n_bottom
            )));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(p).or_insert_with(Poly::zero);
        *entry += &coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }

    pub fn add(&self, other: &DiagramSum) -> Result<DiagramSum> {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &DiagramSum) -> Result<DiagramSum> {
        self.add(&other.scale(&Poly::int(-1)))
    }

    pub fn scale(&self, c: &Poly) -> DiagramSum {
        let mut out = DiagramSum::zero(self.n_top, self.n_bottom);
        for (p, v) in &self.terms {
            out.add_term(p.clone(), v * c).expect("same shape");
        }
        out
    }

    /// Apply `f` to every coefficient, e.g. a parameter specialisation.
    pub fn map_coeffs(&self, f: impl Fn(&Poly) -> Poly) -> DiagramSum {
        let mut out = DiagramSum::zero(self.n_top, self.n_bottom);
        for (p, v) in &self.terms {
            out.add_term(p.clone(), f(v)).expect("same shape");
        }
        out
    }

    /// Right tensor with a single diagram.
    pub fn tensor_diagram(&self, d: &PairPartition) -> DiagramSum {
        let mut out = DiagramSum::zero(self.n_top + d.n_top(), self.n_bottom + d.n_bottom());
        for (p, v) in &self.terms {
            out.add_term(p.tensor(d), v.clone()).expect("shape");
        }
        out
    }

    pub fn to_json(&self) -> DiagramSumJson {
        DiagramSumJson {
            context: [self.n_top, self.n_bottom],
            terms: self
                .terms
                .iter()
                .map(|(p, c)| TermJson {
                    diagram: p.to_string(),
                    coeff: c.to_json_terms(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &DiagramSumJson) -> Result<DiagramSum> {
        let mut out = DiagramSum::zero(json.context[0], json.context[1]);
        for t in &json.terms {
            out.add_term(t.diagram.parse()?, Poly::from_json_terms(&t.coeff)?)?;
        }
        Ok(out)
    }
}

impl fmt::Display for DiagramSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 in kJ({},{})", self.n_top, self.n_bottom);
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·[{p}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DiagramSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub diagram: String,
    pub coeff: Vec<PolyTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramSumJson {
    pub context: [usize; 2],
    pub terms: Vec<TermJson>,
}

/// Bilinear extension of [`compose`].
pub fn compose_sum(a: &DiagramSum, b: &DiagramSum) -> Result<DiagramSum> {
    if a.n_bottom != b.n_top {
        return Err(Error::ContextMismatch(format!(
            "kJ({},{}) * kJ({},{})",
            a.n_top, a.n_bottom, b.n_top, b.n_bottom
        )));
    }
    let mut out = DiagramSum::zero(a.n_top, b.n_bottom);
    for (p, c) in &a.terms {
        for (q, d) in &b.terms {
            let (r, loops) = compose(p, q)?;
            out.add_term(r, &(c * d) * &Poly::delta_pow(loops as u32))?;
        }
    }
    Ok(out)
}

/// Product of a word of diagrams, left to right.
pub fn compose_word(rank: usize, word: &[PairPartition]) -> Result<DiagramSum> {
    let mut acc = DiagramSum::from_diagram(PairPartition::identity(rank));
    for g in word {
        acc = compose_sum(&acc, &DiagramSum::from_diagram(g.clone()))?;
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    Sigma(usize),
    U(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Sigma(i) => write!(f, "s{i}"),
            Generator::U(i) => write!(f, "U{i}"),
        }
    }
}

/// The diagram of a generator at rank `n`: `σ_i` swaps strands `i, i+1`;
/// `U_i` joins `i, i+1` on top and `i', i+1'` below.
pub fn generator(g: Generator, n: usize) -> Result<PairPartition> {
    let i = match g {
        Generator::Sigma(i) | Generator::U(i) => i,
    };
    if i == 0 || i + 1 > n {
        return Err(Error::InvalidInput(format!(
            "{g} needs 1 <= i <= n-1 at rank {n}"
        )));
    }
    let (t, b) = (Vertex::top, Vertex::bottom);
    let mut pairs: Vec<VertexPair> = (1..=n)
        .filter(|&k| k != i && k != i + 1)
        .map(|k| VertexPair::new(t(k), b(k)))
        .collect();
    match g {
        Generator::Sigma(_) => {
            pairs.push(VertexPair::new(t(i), b(i + 1)));
            pairs.push(VertexPair::new(t(i + 1), b(i)));
        }
        Generator::U(_) => {
            pairs.push(VertexPair::new(t(i), t(i + 1)));
            pairs.push(VertexPair::new(b(i), b(i + 1)));
        }
    }
    PairPartition::new(n, n, pairs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GeneratorKind {
    /// All `σ_i` and `U_i`.
    Brauer,
    /// The `U_i` only.
    TemperleyLieb,
    /// `B_{l,m,n}`: `σ_1..σ_{l-1}` and `U_m..U_{n-1}`.
    Coxeter { l: usize, m: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    pub kind: GeneratorKind,
    pub rank: usize,
}

impl GeneratorSet {
    pub fn new(kind: GeneratorKind, rank: usize) -> Self {
        GeneratorSet { kind, rank }
    }

    pub fn coxeter(l: usize, m: usize, rank: usize) -> Self {
        GeneratorSet {
            kind: GeneratorKind::Coxeter { l, m },
            rank,
        }
    }

    pub fn names(&self) -> Vec<Generator> {
        let n = self.rank;
        let (sigma_max, u_min) = match self.kind {
            GeneratorKind::Brauer => (n.saturating_sub(1), 1),
            GeneratorKind::TemperleyLieb => (0, 1),
            GeneratorKind::Coxeter { l, m } => {
                (l.saturating_sub(1).min(n.saturating_sub(1)), m.max(1))
            }
        };
        (1..=sigma_max)
            .map(Generator::Sigma)
            .chain((u_min..n).map(Generator::U))
            .collect()
    }

    pub fn diagrams(&self) -> Vec<PairPartition> {
        self.names()
            .into_iter()
            .map(|g| generator(g, self.rank).expect("index in range"))
            .collect()
    }
}

struct Relation {
    label: String,
    lhs: Vec<Generator>,
    coeff: Poly,
    rhs: Vec<Generator>,
}

fn relations_for(gens: &[Generator]) -> Vec<Relation> {
    use Generator::{Sigma as S, U};
    let has = |g: &Generator| gens.contains(g);
    let mut rels = Vec::new();
    let mut rel = |lhs: Vec<Generator>, coeff: Poly, rhs: Vec<Generator>| {
        if lhs.iter().chain(&rhs).all(has) {
            let show = |w: &[Generator]| {
                if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter()
                        .map(|g| g.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                }
            };
            let c = if coeff.is_one() {
                String::new()
            } else {
                format!("({coeff}) ")
            };
            rels.push(Relation {
                label: format!("{} = {c}{}", show(&lhs), show(&rhs)),
                lhs,
                coeff,
                rhs,
            });
        }
    };
    let idx: Vec<usize> = gens
        .iter()
        .map(|g| match g {
            S(i) | U(i) => *i,
        })
        .collect();
    let top = idx.iter().copied().max().unwrap_or(0);
    for i in 1..=top {
        rel(vec![U(i), U(i)], Poly::delta(), vec![U(i)]);
        rel(vec![S(i), S(i)], Poly::one(), vec![]);
        rel(vec![S(i), U(i)], Poly::one(), vec![U(i)]);
        rel(vec![U(i), S(i)], Poly::one(), vec![U(i)]);
        rel(vec![U(i), U(i + 1), U(i)], Poly::one(), vec![U(i)]);
        rel(vec![U(i + 1), U(i), U(i + 1)], Poly::one(), vec![U(i + 1)]);
        rel(
            vec![S(i), S(i + 1), S(i)],
            Poly::one(),
            vec![S(i + 1), S(i), S(i + 1)],
        );
        rel(
            vec![S(i), U(i + 1), U(i)],
            Poly::one(),
            vec![S(i + 1), U(i)],
        );
        rel(
            vec![U(i + 1), U(i), S(i + 1)],
            Poly::one(),
            vec![U(i + 1), S(i)],
        );
        for j in i + 2..=top {
            rel(vec![U(i), U(j)], Poly::one(), vec![U(j), U(i)]);
            rel(vec![S(i), S(j)], Poly::one(), vec![S(j), S(i)]);
            rel(vec![S(i), U(j)], Poly::one(), vec![U(j), S(i)]);
            rel(vec![U(i), S(j)], Poly::one(), vec![S(j), U(i)]);
        }
    }
    rels
}

/// Check the defining relations among the generators of `gens` as
/// identities in `kJ(n,n)` over `Z[δ]`.
pub fn check_relations(gens: &GeneratorSet) -> Result<Report> {
    let n = gens.rank;
    let names = gens.names();
    let mut report = Report::new(format!("relations {:?} rank {n}", gens.kind));
    for r in relations_for(&names) {
        let word = |w: &[Generator]| -> Result<DiagramSum> {
            let diagrams: Vec<PairPartition> =
                w.iter().map(|g| generator(*g, n)).collect::<Result<_>>()?;
            compose_word(n, &diagrams)
        };
        let lhs = word(&r.lhs)?;
        let rhs = word(&r.rhs)?.scale(&r.coeff);
        report.check(r.label, lhs == rhs);
    }
    Ok(report)
}

/// The set of all products of `gens` (including the empty product `1_n`),
/// sorted. Because every product of diagrams is a power of `δ` times a
/// diagram, this set spans the generated subalgebra at generic `δ`.
pub fn monoid_closure(gens: &[PairPartition], n: usize, cap: usize) -> Result<Vec<PairPartition>> {
    if let Some(g) = gens.iter().find(|g| (g.n_top(), g.n_bottom()) != (n, n)) {
        return Err(Error::ContextMismatch(format!(
            "generator {g} is not in J({n},{n})"
        )));
    }
    let one = PairPartition::identity(n);
    let mut seen: HashSet<PairPartition> = HashSet::new();
    seen.insert(one.clone());
    let mut frontier = vec![one];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let (r, _) = compose(&p, g)?;
            if !seen.contains(&r) {
                if seen.len() >= cap {
                    return Err(Error::ResourceLimit(format!(
                        "monoid closure exceeds {cap} diagrams"
                    )));
                }
                seen.insert(r.clone());
                frontier.push(r);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn lit(s: &str) -> PairPartition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_composition() {
        // {{4',2},{3,5'},{1,3'},{1',2'}} * {{2,1},{4,5},{1',3}} = δ {{3,2},{1,1'}}
        let p1 = lit("J(3,5): (4',2)(3,5')(1,3')(1',2')");
        let p2 = lit("J(5,1): (2,1)(4,5)(1',3)");
        let (r, loops) = compose(&p1, &p2).unwrap();
        assert_eq!(r, lit("J(3,1): (3,2)(1,1')"));
        assert_eq!(loops, 1);
    }

    #[test]
    fn identity_and_loop() {
        let p = lit("J(3,1): (3,2)(1,1')");
        assert_eq!(
            compose(&PairPartition::identity(3), &p).unwrap(),
            (p.clone(), 0)
        );
        assert_eq!(compose(&p, &PairPartition::identity(1)).unwrap(), (p, 0));
        let (r, loops) = compose(&PairPartition::cup(), &PairPartition::cap()).unwrap();
        assert_eq!((r, loops), (PairPartition::empty(), 1));
        let (r, loops) = compose(&PairPartition::cap(), &PairPartition::cup()).unwrap();
        assert_eq!((r, loops), (lit("J(2,2): (1,2)(1',2')"), 0));
        assert!(matches!(
            compose(&PairPartition::cap(), &PairPartition::cap()),
            Err(Error::ContextMismatch(_))
        ));
    }

    #[test]
    fn generator_diagrams() {
        assert_eq!(
            generator(Generator::U(1), 2).unwrap(),
            lit("J(2,2): (1,2)(1',2')")
        );
        assert_eq!(
            generator(Generator::Sigma(1), 2).unwrap(),
            lit("J(2,2): (1,2')(2,1')")
        );
        assert_eq!(
            generator(Generator::U(2), 3).unwrap(),
            lit("J(3,3): (1,1')(2,3)(2',3')")
        );
        assert!(generator(Generator::U(3), 3).is_err());
        assert!(generator(Generator::Sigma(0), 3).is_err());
    }

    #[test]
    fn sums() {
        let half = Poly::constant(rat(1, 2));
        let sigma = generator(Generator::Sigma(1), 2).unwrap();
        let sym = DiagramSum::from_diagram(PairPartition::identity(2))
            .add(&DiagramSum::from_diagram(sigma.clone()))
            .unwrap()
            .scale(&half);
        assert_eq!(compose_sum(&sym, &sym).unwrap(), sym);

        let u2 = DiagramSum::from_diagram(generator(Generator::U(2), 3).unwrap());
        let sym3 = sym.tensor_diagram(&PairPartition::identity(1));
        let lhs = compose_sum(&compose_sum(&u2, &sym3).unwrap(), &u2).unwrap();
        let expected = u2.scale(&"1/2*x + 1/2".parse().unwrap());
        assert_eq!(lhs, expected);

        let d1 = DiagramSum::term(PairPartition::identity(2), Poly::delta());
        let s = DiagramSum::from_diagram(sigma.clone());
        assert_eq!(
            compose_sum(&d1, &s).unwrap(),
            DiagramSum::term(sigma, Poly::delta())
        );
    }

    #[test]
    fn relations_pass() {
        for n in 2..=5 {
            for kind in [GeneratorKind::TemperleyLieb, GeneratorKind::Brauer] {
                let r = check_relations(&GeneratorSet::new(kind, n)).unwrap();
                assert!(r.passed(), "{r}");
                assert!(r.checked > 0);
            }
        }
        let r = check_relations(&GeneratorSet::new(GeneratorKind::TemperleyLieb, 3)).unwrap();
        assert!(r
            .checks
            .iter()
            .any(|c| c.label == "U1 U2 U1 = U1" && c.pass));
        let r = check_relations(&GeneratorSet::new(GeneratorKind::Brauer, 2)).unwrap();
        assert!(r.checks.iter().any(|c| c.label == "s1 s1 = 1" && c.pass));
    }

    #[test]
    fn closures() {
        let u1 = generator(Generator::U(1), 2).unwrap();
        let s1 = generator(Generator::Sigma(1), 2).unwrap();
        assert_eq!(
            monoid_closure(std::slice::from_ref(&u1), 2, 100).unwrap(),
            {
                let mut v = vec![PairPartition::identity(2), u1.clone()];
                v.sort();
                v
            }
        );
        assert_eq!(monoid_closure(&[s1, u1], 2, 100).unwrap().len(), 3);
        let b3 = GeneratorSet::coxeter(2, 1, 3).diagrams();
        assert_eq!(monoid_closure(&b3, 3, 100).unwrap().len(), 11);
        assert!(matches!(
            monoid_closure(&b3, 3, 5),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn json_roundtrip() {
        let s = DiagramSum::term(lit("J(2,2): (1,2')(2,1')"), "x - 1/2".parse().unwrap());
        let json = serde_json::to_string(&s.to_json()).unwrap();
        let back: DiagramSumJson = serde_json::from_str(&json).unwrap();
        assert_eq!(DiagramSum::from_json(&back).unwrap(), s);
    }
}
