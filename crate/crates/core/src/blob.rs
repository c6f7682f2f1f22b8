//! The blob category: non-crossing diagrams with some left-exposed pairs
//! marked by a blob, composed with loop weights `δ` (plain) and `δ′`
//! (blobbed).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::brauer::{generator, trace, Generator};
use crate::error::{Error, Result};
use crate::pairpart::{
    enumerate, parse_literal, Filter, Limits, PairPartition, Vertex, VertexPair,
};
use crate::report::Report;
use crate::scalars::Poly;

/// An element `(p, s)` of `bB(m,n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlobDiagram {
    p: PairPartition,
    s: Vec<VertexPair>,
}

impl BlobDiagram {
    pub fn new(p: PairPartition, blobs: impl IntoIterator<Item = VertexPair>) -> Result<Self> {
        let exposed = left_exposed_pairs(&p)?;
        let mut s: Vec<VertexPair> = blobs.into_iter().collect();
        s.sort();
        s.dedup();
        if let Some(bad) = s.iter().find(|v| !exposed.contains(v)) {
            return Err(Error::InvalidInput(format!(
                "{bad} is not a left-exposed pair of {p}"
            )));
        }
        Ok(BlobDiagram { p, s })
    }

    /// `p` with no blobs.
    pub fn plain(p: PairPartition) -> Result<Self> {
        Self::new(p, [])
    }

    pub fn diagram(&self) -> &PairPartition {
        &self.p
    }

    pub fn blobs(&self) -> &[VertexPair] {
        &self.s
    }

    pub fn n_top(&self) -> usize {
        self.p.n_top()
    }

    pub fn n_bottom(&self) -> usize {
        self.p.n_bottom()
    }

    pub fn is_blobbed(&self, pair: &VertexPair) -> bool {
        self.s.binary_search(pair).is_ok()
    }

    pub fn identity(n: usize) -> Self {
        BlobDiagram {
            p: PairPartition::identity(n),
            s: Vec::new(),
        }
    }

    fn marks(&self) -> Vec<bool> {
        let mut m = vec![false; self.p.n_points()];
        for v in &self.s {
            m[self.p.pos_of(v.0)] = true;
            m[self.p.pos_of(v.1)] = true;
        }
        m
    }
}

impl fmt::Display for BlobDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bB({},{}):", self.p.n_top(), self.p.n_bottom())?;
        for v in self.p.pairs() {
            write!(f, " {v}{}", if self.is_blobbed(&v) { "*" } else { "" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BlobDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BlobDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lit = parse_literal(s)?;
        if lit.head != "bB" {
            return Err(Error::Parse(format!(
                "expected 'bB(..)' header, found '{}'",
                lit.head
            )));
        }
        let blobs: Vec<VertexPair> = lit
            .pairs
            .iter()
            .filter(|(_, m)| *m)
            .map(|(p, _)| *p)
            .collect();
        let p = PairPartition::new(
            lit.n_top,
            lit.n_bottom,
            lit.pairs.into_iter().map(|(p, _)| p),
        )?;
        BlobDiagram::new(p, blobs)
    }
}

/// Pairs of a non-crossing `p` not nested under any other pair, i.e.
/// visible from the left edge.
pub fn left_exposed_pairs(p: &PairPartition) -> Result<Vec<VertexPair>> {
    if !p.is_noncrossing() {
        return Err(Error::Domain(format!("{p} is crossing")));
    }
    let mut depth = 0usize;
    let mut out = Vec::new();
    for pos in 0..p.n_points() {
        let q = p.partner_pos(pos);
        if q > pos {
            if depth == 0 {
                out.push(VertexPair(p.vertex_at(pos), p.vertex_at(q)));
            }
            depth += 1;
        } else {
            depth -= 1;
        }
    }
    Ok(out)
}

/// `(p_1,s_1) ∘ (p_2,s_2)`: the composite diagram with inherited blobs,
/// plus the numbers of plain and blobbed closed loops.
pub fn compose_blob(a: &BlobDiagram, b: &BlobDiagram) -> Result<(BlobDiagram, usize, usize)> {
    let t = trace(&a.p, &b.p, &a.marks(), &b.marks())?;
    let p = PairPartition::from_partner(a.n_top(), b.n_bottom(), t.partner);
    let s: Vec<VertexPair> = p
        .position_pairs()
        .filter(|&(x, _)| t.marked[x])
        .map(|(x, y)| VertexPair(p.vertex_at(x), p.vertex_at(y)))
        .collect();
    let exposed = left_exposed_pairs(&p)?;
    if let Some(bad) = s.iter().find(|v| !exposed.contains(v)) {
        return Err(Error::Internal(format!(
            "blob on non-exposed pair {bad} of {p}"
        )));
    }
    Ok((BlobDiagram { p, s }, t.loops, t.marked_loops))
}

/// Loop weight `δ^plain δ′^blobbed`.
pub fn loop_weight(plain: usize, blobbed: usize) -> Poly {
    &Poly::delta_pow(plain as u32) * &Poly::deltap().pow(blobbed as u32)
}

/// A formal combination of blob diagrams of one shape.
#[derive(Clone, PartialEq, Eq)]
pub struct BlobSum {
    n_top: usize,
    n_bottom: usize,
    terms: BTreeMap<BlobDiagram, Poly>,
}

impl BlobSum {
    pub fn zero(n_top: usize, n_bottom: usize) -> Self {
        BlobSum {
            n_top,
            n_bottom,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(d: BlobDiagram) -> Self {
        Self::term(d, Poly::one())
    }

    pub fn term(d: BlobDiagram, c: Poly) -> Self {
        let mut s = BlobSum::zero(d.n_top(), d.n_bottom());
        s.add_term(d, c).expect("shape matches");
        s
    }

    pub fn context(&self) -> (usize, usize) {
        (self.n_top, self.n_bottom)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BlobDiagram, &Poly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, d: BlobDiagram, c: Poly) -> Result<()> {
        if (d.n_top(), d.n_bottom()) != (self.n_top, self.n_bottom) {
            return Err(Error::ContextMismatch(format!(
                "{d} added to a sum over bB({},{})",
                self.n_top, self.n_bottom
            )));
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(d.clone()).or_insert_with(Poly::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&d);
        }
        Ok(())
    }

    pub fn add(&self, other: &BlobSum) -> Result<BlobSum> {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Poly) -> BlobSum {
        let mut out = BlobSum::zero(self.n_top, self.n_bottom);
        for (d, v) in &self.terms {
            out.add_term(d.clone(), v * c).expect("same shape");
        }
        out
    }
}

impl fmt::Display for BlobSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 in kbB({},{})", self.n_top, self.n_bottom);
        }
        for (k, (d, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·[{d}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BlobSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn compose_blob_sum(a: &BlobSum, b: &BlobSum) -> Result<BlobSum> {
    if a.n_bottom != b.n_top {
        return Err(Error::ContextMismatch(format!(
            "kbB({},{}) * kbB({},{})",
            a.n_top, a.n_bottom, b.n_top, b.n_bottom
        )));
    }
    let mut out = BlobSum::zero(a.n_top, b.n_bottom);
    for (p, c) in &a.terms {
        for (q, d) in &b.terms {
            let (r, plain, blobbed) = compose_blob(p, q)?;
            out.add_term(r, &(c * d) * &loop_weight(plain, blobbed))?;
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlobGenerator {
    E,
    U(usize),
}

impl fmt::Display for BlobGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlobGenerator::E => write!(f, "e"),
            BlobGenerator::U(i) => write!(f, "U{i}"),
        }
    }
}

/// `e` (identity with a blob on `{1,1'}`) or the plain `U_i` at rank `n`.
pub fn blob_generator(g: BlobGenerator, n: usize) -> Result<BlobDiagram> {
    match g {
        BlobGenerator::E => {
            if n == 0 {
                return Err(Error::InvalidInput("e needs rank >= 1".into()));
            }
            Ok(BlobDiagram {
                p: PairPartition::identity(n),
                s: vec![VertexPair(Vertex::top(1), Vertex::bottom(1))],
            })
        }
        BlobGenerator::U(i) => BlobDiagram::plain(generator(Generator::U(i), n)?),
    }
}

/// `e, U_1, .., U_{n-1}` at rank `n`.
pub fn blob_generators(n: usize) -> Result<Vec<(BlobGenerator, BlobDiagram)>> {
    std::iter::once(BlobGenerator::E)
        .chain((1..n).map(BlobGenerator::U))
        .map(|g| blob_generator(g, n).map(|d| (g, d)))
        .collect()
}

/// Verify the defining relations of the blob algebra at rank `n` over
/// `Z[δ, δ′]`.
pub fn check_blob_relations(n: usize) -> Result<Report> {
    use BlobGenerator::{E, U};
    let mut report = Report::new(format!("blob relations rank {n}"));
    let word = |w: &[BlobGenerator]| -> Result<BlobSum> {
        let mut acc = BlobSum::from_diagram(BlobDiagram::identity(n));
        for g in w {
            acc = compose_blob_sum(&acc, &BlobSum::from_diagram(blob_generator(*g, n)?))?;
        }
        Ok(acc)
    };
    let show = |w: &[BlobGenerator]| {
        w.iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut rel = |lhs: &[BlobGenerator], c: Poly, rhs: &[BlobGenerator]| -> Result<()> {
        let coeff = if c.is_one() {
            String::new()
        } else {
            format!("({c}) ")
        };
        let label = format!("{} = {coeff}{}", show(lhs), show(rhs));
        report.check(label, word(lhs)? == word(rhs)?.scale(&c));
        Ok(())
    };
    rel(&[E, E], Poly::one(), &[E])?;
    for i in 1..n {
        rel(&[U(i), U(i)], Poly::delta(), &[U(i)])?;
        if i + 1 < n {
            rel(&[U(i), U(i + 1), U(i)], Poly::one(), &[U(i)])?;
            rel(&[U(i + 1), U(i), U(i + 1)], Poly::one(), &[U(i + 1)])?;
        }
        for j in i + 2..n {
            rel(&[U(i), U(j)], Poly::one(), &[U(j), U(i)])?;
        }
        if i == 1 {
            rel(&[U(1), E, U(1)], Poly::deltap(), &[U(1)])?;
        } else {
            rel(&[U(i), E], Poly::one(), &[E, U(i)])?;
        }
    }
    Ok(report)
}

/// All of `bB(m,n)`: each non-crossing diagram with each subset of its
/// left-exposed pairs, blob subsets in binary counting order.
pub fn enumerate_blob(m: usize, n: usize, limits: &Limits) -> Result<Vec<BlobDiagram>> {
    let mut out = Vec::new();
    for p in enumerate(m, n, Filter::NonCrossing, limits)? {
        let exposed = left_exposed_pairs(&p)?;
        for mask in 0u64..1 << exposed.len() {
            if out.len() >= limits.max_diagrams {
                return Err(Error::ResourceLimit(format!(
                    "bB({m},{n}) exceeds {} elements",
                    limits.max_diagrams
                )));
            }
            let s: Vec<VertexPair> = exposed
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, v)| *v)
                .collect();
            out.push(BlobDiagram { p: p.clone(), s });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(k: usize) -> Vertex {
        Vertex::top(k)
    }

    fn blit(s: &str) -> BlobDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn exposure() {
        let id1 = PairPartition::identity(1);
        assert_eq!(left_exposed_pairs(&id1).unwrap(), id1.pairs());
        let nested: PairPartition = "J(4,0): (1,4)(2,3)".parse().unwrap();
        assert_eq!(
            left_exposed_pairs(&nested).unwrap(),
            vec![VertexPair(t(1), t(4))]
        );
        let side: PairPartition = "J(4,0): (1,2)(3,4)".parse().unwrap();
        assert_eq!(left_exposed_pairs(&side).unwrap().len(), 2);
        let crossing: PairPartition = "J(2,2): (1,2')(2,1')".parse().unwrap();
        assert!(matches!(
            left_exposed_pairs(&crossing),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn literals() {
        let e = blit("bB(1,1): (1,1')*");
        assert_eq!(e, blob_generator(BlobGenerator::E, 1).unwrap());
        assert_eq!(e.to_string(), "bB(1,1): (1,1')*");
        assert!("bB(4,0): (1,4)(2,3)*".parse::<BlobDiagram>().is_err());
        assert!("J(1,1): (1,1')".parse::<BlobDiagram>().is_err());
    }

    #[test]
    fn compositions() {
        let e = blob_generator(BlobGenerator::E, 1).unwrap();
        assert_eq!(compose_blob(&e, &e).unwrap(), (e.clone(), 0, 0));
        let cup = blit("bB(0,2): (1',2')*");
        let cap = blit("bB(2,0): (1,2)*");
        let (r, plain, blobbed) = compose_blob(&cup, &cap).unwrap();
        assert_eq!(
            (r.diagram().clone(), plain, blobbed),
            (PairPartition::empty(), 0, 1)
        );
        let f1 = blit("bB(2,2): (1,2)(1',2')");
        assert_eq!(compose_blob(&f1, &f1).unwrap(), (f1.clone(), 1, 0));
        let (r, _, _) = compose_blob(&f1, &blit("bB(2,2): (1,1')*(2,2')")).unwrap();
        assert_eq!(r, blit("bB(2,2): (1,2)(1',2')*"));
    }

    #[test]
    fn relations() {
        for n in 1..=5 {
            let r = check_blob_relations(n).unwrap();
            assert!(r.passed(), "{r}");
        }
        let r = check_blob_relations(2).unwrap();
        for label in ["U1 e U1 = (y) U1", "e e = e", "U1 U1 = (x) U1"] {
            assert!(
                r.checks.iter().any(|c| c.label == label && c.pass),
                "{label}\n{r}"
            );
        }
    }

    #[test]
    fn counts() {
        let l = Limits::default();
        assert_eq!(enumerate_blob(1, 1, &l).unwrap().len(), 2);
        assert_eq!(enumerate_blob(2, 2, &l).unwrap().len(), 6);
        assert_eq!(enumerate_blob(3, 3, &l).unwrap().len(), 20);
        assert_eq!(enumerate_blob(0, 0, &l).unwrap().len(), 1);
        assert!(matches!(enumerate_blob(1, 2, &l), Err(Error::EmptySet(3))));
    }
}
