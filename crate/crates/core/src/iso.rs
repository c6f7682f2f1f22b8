//! The passage from the blob category to the L1-chain part of the Brauer
//! category: the set bijection `Ψ`, the linear map `Φ`, the algebra map
//! `Θ` and their verification harnesses.
//!
//! All identities here hold after specialising `δ′ = (1 + δ)/2`.

use std::collections::BTreeSet;

use crate::blob::{
    blob_generator, compose_blob, enumerate_blob, loop_weight, BlobDiagram, BlobGenerator, BlobSum,
};
use crate::brauer::{compose_sum, generator, monoid_closure, DiagramSum, Generator};
use crate::chains::{enumerate_li_chain, li_chain_decompose, Chain};
use crate::error::{Error, Result};
use crate::pairpart::{Limits, PairPartition, PairSet, Vertex, VertexPair};
use crate::report::Report;
use crate::scalars::{deltap_specialization, rat, Poly};

/// `x(s)` in the context enlarged by one in each row. `s` must be a list
/// of pairs of `J(m,n)` whose endpoints run `l_1 < r_1 < l_2 < r_2 < ..`.
pub fn chain_x(s: &[VertexPair], m: usize, n: usize) -> Result<Chain> {
    let mut sorted = s.to_vec();
    sorted.sort();
    for v in &sorted {
        if !v.0.is_valid(m, n) || !v.1.is_valid(m, n) {
            return Err(Error::Domain(format!("{v} is not a pair of J({m},{n})")));
        }
    }
    if sorted.windows(2).any(|w| w[0].right() >= w[1].left()) {
        return Err(Error::Domain(
            "pairs of s must be disjoint and unnested".into(),
        ));
    }
    let up = |v: Vertex| v.shifted(1).expect("shift up");
    let mut left = Vertex::top(1);
    let mut links = Vec::with_capacity(sorted.len() + 1);
    for v in &sorted {
        links.push(VertexPair::new(left, up(v.right())));
        left = up(v.left());
    }
    links.push(VertexPair::new(left, Vertex::bottom(1)));
    Chain::new(links)
}

/// Inverse of [`chain_x`]: the pairs `{l_k, r_k}` read off a chain from
/// `1` to `1'`, relabelled back down.
pub fn chain_xbar(x: &Chain) -> Result<Vec<VertexPair>> {
    if x.start() != Vertex::top(1) || x.end() != Vertex::bottom(1) {
        return Err(Error::Domain(format!(
            "chain {x} does not run from 1 to 1'"
        )));
    }
    let down = |v: Vertex| {
        v.shifted(-1)
            .ok_or_else(|| Error::InvalidShift(v.to_string()))
    };
    x.links()
        .windows(2)
        .map(|w| Ok(VertexPair::new(down(w[1].left())?, down(w[0].right())?)))
        .collect()
}

/// `Ψ(p,s) = x(s) ∪ (p ∖ s)^+`.
pub fn psi(b: &BlobDiagram) -> Result<PairPartition> {
    let p = b.diagram();
    let (m, n) = (p.n_top(), p.n_bottom());
    let x = chain_x(b.blobs(), m, n)?;
    let rest = PairSet::new(m, n, p.pairs().into_iter().filter(|v| !b.is_blobbed(v)))?.shift(1)?;
    PairPartition::new(
        m + 1,
        n + 1,
        x.links()
            .iter()
            .copied()
            .chain(rest.pairs().iter().copied()),
    )
}

pub fn psi_inv(p: &PairPartition) -> Result<BlobDiagram> {
    let d =
        li_chain_decompose(p, 1)?.ok_or_else(|| Error::Domain(format!("{p} is not L1-chain")))?;
    let s = chain_xbar(&d.chains[0])?;
    let (m, n) = (p.n_top() - 1, p.n_bottom() - 1);
    let rest = PairSet::new(p.n_top(), p.n_bottom(), d.remainder)?.shift(-1)?;
    let q = PairPartition::new(m, n, s.iter().copied().chain(rest.pairs().iter().copied()))?;
    BlobDiagram::new(q, s)
}

/// `Φ(p,s) = 2^{-|s|} Σ_{z ⊆ s} Ψ(p,z)`.
pub fn phi(b: &BlobDiagram) -> Result<DiagramSum> {
    let p = b.diagram();
    let s = b.blobs();
    if s.len() > 24 {
        return Err(Error::ResourceLimit(format!("{} blobs", s.len())));
    }
    let weight = Poly::constant(rat(1, 1 << s.len()));
    let mut out = DiagramSum::zero(p.n_top() + 1, p.n_bottom() + 1);
    for mask in 0u32..1 << s.len() {
        let z = s
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, v)| *v);
        out.add_term(psi(&BlobDiagram::new(p.clone(), z)?)?, weight.clone())?;
    }
    Ok(out)
}

/// Linear extension of [`phi`], with `δ′ ↦ (1+δ)/2` on the coefficients.
pub fn phi_sum(x: &BlobSum) -> Result<DiagramSum> {
    let (m, n) = x.context();
    let deltap_value = deltap_specialization();
    let mut out = DiagramSum::zero(m + 1, n + 1);
    for (b, c) in x.terms() {
        out = out.add(&phi(b)?.scale(&c.substitute_deltap(&deltap_value)))?;
    }
    Ok(out)
}

/// `Θ(U_i) = U_{i+1}`, `Θ(e) = ½(1 + σ_1)` in `kJ(n+1, n+1)`.
pub fn theta_image(g: BlobGenerator, n: usize) -> Result<DiagramSum> {
    let half = Poly::constant(rat(1, 2));
    match g {
        BlobGenerator::U(i) => {
            if i == 0 || i >= n {
                return Err(Error::InvalidInput(format!("U{i} at rank {n}")));
            }
            Ok(DiagramSum::from_diagram(generator(
                Generator::U(i + 1),
                n + 1,
            )?))
        }
        BlobGenerator::E => {
            if n == 0 {
                return Err(Error::InvalidInput("e needs rank >= 1".into()));
            }
            let one = DiagramSum::from_diagram(PairPartition::identity(n + 1));
            let sigma = DiagramSum::from_diagram(generator(Generator::Sigma(1), n + 1)?);
            Ok(one.add(&sigma)?.scale(&half))
        }
    }
}

/// Image of a generator word under `Θ`.
pub fn theta_word(word: &[BlobGenerator], n: usize) -> Result<DiagramSum> {
    let mut acc = DiagramSum::from_diagram(PairPartition::identity(n + 1));
    for g in word {
        acc = compose_sum(&acc, &theta_image(*g, n)?)?;
    }
    Ok(acc)
}

/// The blob-algebra product of a generator word.
pub fn blob_word(word: &[BlobGenerator], n: usize) -> Result<BlobSum> {
    let mut acc = BlobSum::from_diagram(BlobDiagram::identity(n));
    for g in word {
        acc = crate::blob::compose_blob_sum(&acc, &BlobSum::from_diagram(blob_generator(*g, n)?))?;
    }
    Ok(acc)
}

/// `p ⊗ cap^{(r-s)/2} ⊗ cup^{(r-t)/2}` for `p ∈ J(s,t)`, landing in `J(r,r)`.
pub fn overline_embed(p: &PairPartition, r: usize) -> Result<PairPartition> {
    let (s, t) = (p.n_top(), p.n_bottom());
    if r < s || r < t || !(r - s).is_multiple_of(2) || !(r - t).is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "cannot embed J({s},{t}) in J({r},{r})"
        )));
    }
    let mut out = p.clone();
    for _ in 0..(r - s) / 2 {
        out = out.tensor(&PairPartition::cap());
    }
    for _ in 0..(r - t) / 2 {
        out = out.tensor(&PairPartition::cup());
    }
    Ok(out)
}

/// Relations among the `Θ` images, surjectivity onto the L1 span and the
/// dimension match that gives injectivity.
pub fn verify_theta(n: usize, limits: &Limits) -> Result<Report> {
    use BlobGenerator::{E, U};
    if n < 1 {
        return Err(Error::Domain("verify_theta needs n >= 1".into()));
    }
    let mut report = Report::new(format!("theta rank {n}"));
    let deltap_value = deltap_specialization();
    let show = |w: &[BlobGenerator]| {
        w.iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut rel = |lhs: &[BlobGenerator], c: Poly, rhs: &[BlobGenerator]| -> Result<()> {
        let label = format!("T({}) = ({c}) T({})", show(lhs), show(rhs));
        report.check(label, theta_word(lhs, n)? == theta_word(rhs, n)?.scale(&c));
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
            rel(&[U(1), E, U(1)], deltap_value.clone(), &[U(1)])?;
        } else {
            rel(&[U(i), E], Poly::one(), &[E, U(i)])?;
        }
    }

    // σ_1 = 2Θ(e) - 1 lies in the image, so the image contains the
    // algebra generated by σ_1, U_2..U_n
    let sigma = DiagramSum::from_diagram(generator(Generator::Sigma(1), n + 1)?);
    let recovered = theta_image(E, n)?
        .scale(&Poly::int(2))
        .sub(&DiagramSum::from_diagram(PairPartition::identity(n + 1)))?;
    report.check("s1 = 2 T(e) - 1", recovered == sigma);
    let mut gens = vec![generator(Generator::Sigma(1), n + 1)?];
    for i in 2..=n {
        gens.push(generator(Generator::U(i), n + 1)?);
    }
    let closure = monoid_closure(&gens, n + 1, limits.max_diagrams)?;
    let l1 = enumerate_li_chain(n + 1, n + 1, 1, limits)?;
    let blobs = enumerate_blob(n, n, limits)?;
    report.size("closure", closure.len());
    report.size("li_chain", l1.len());
    report.size("blob_basis", blobs.len());
    report.check(
        "closure of <s1,U2..Un> equals the L1-chain set",
        closure == l1,
    );
    report.check("dim bB(n,n) = dim J1(n+1,n+1)", blobs.len() == l1.len());
    Ok(report)
}

/// `Φ(a) * Φ(b) = Φ(a ∘ b)` for all `a ∈ bB(m,n)`, `b ∈ bB(n,q)`, and
/// `Φ(p ⊗ p_0, s) = Φ(p,s) ⊗ p_0` for a few plain `p_0`.
pub fn verify_phi_functor(m: usize, n: usize, q: usize, limits: &Limits) -> Result<Report> {
    let left = enumerate_blob(m, n, limits)?;
    let right = enumerate_blob(n, q, limits)?;
    let deltap_value = deltap_specialization();
    let phis_right: Vec<DiagramSum> = right.iter().map(phi).collect::<Result<_>>()?;
    let mut report = Report::new(format!("phi functor ({m},{n},{q})"));
    report.size("left", left.len());
    report.size("right", right.len());
    let mut products = 0;
    for a in &left {
        let pa = phi(a)?;
        for (b, pb) in right.iter().zip(&phis_right) {
            let (c, plain, blobbed) = compose_blob(a, b)?;
            let expected =
                phi(&c)?.scale(&loop_weight(plain, blobbed).substitute_deltap(&deltap_value));
            let got = compose_sum(&pa, pb)?;
            products += 1;
            report.tally(got == expected, || format!("phi({a}) * phi({b})"));
        }
    }
    report.size("products", products);

    let pads = [
        PairPartition::identity(1),
        PairPartition::cup(),
        PairPartition::cap(),
        generator(Generator::U(1), 2)?,
    ];
    let mut tensors = 0;
    for a in &left {
        for pad in &pads {
            let lifted = BlobDiagram::new(a.diagram().tensor(pad), a.blobs().iter().copied())?;
            tensors += 1;
            report.tally(phi(&lifted)? == phi(a)?.tensor_diagram(pad), || {
                format!("phi({a} ⊗ {pad})")
            });
        }
    }
    report.size("tensor_checks", tensors);
    Ok(report)
}

/// Exhaustive round trips of `Ψ` between `bB(m,n)` and `J^1_{≤0}(m+1,n+1)`.
pub fn verify_psi_bijection(m: usize, n: usize, limits: &Limits) -> Result<Report> {
    let blobs = enumerate_blob(m, n, limits)?;
    let chains = enumerate_li_chain(m + 1, n + 1, 1, limits)?;
    let mut report = Report::new(format!("psi bijection bB({m},{n})"));
    report.size("blob", blobs.len());
    report.size("li_chain", chains.len());
    let mut images = BTreeSet::new();
    for b in &blobs {
        let p = psi(b)?;
        let back = psi_inv(&p)?;
        report.tally(&back == b, || format!("psi_inv(psi({b})) = {back}"));
        images.insert(p);
    }
    for p in &chains {
        let ok = psi_inv(p)
            .and_then(|b| psi(&b))
            .map(|r| &r == p)
            .unwrap_or(false);
        report.tally(ok, || format!("psi(psi_inv({p}))"));
    }
    let target: BTreeSet<PairPartition> = chains.into_iter().collect();
    report.check(
        "psi is onto the L1-chain set and injective",
        images == target && target.len() == blobs.len(),
    );
    Ok(report)
}
