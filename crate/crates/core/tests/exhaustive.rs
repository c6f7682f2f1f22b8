//! Exhaustive checks over every diagram of small size.

use sbl::blob::{enumerate_blob, BlobDiagram};
use sbl::brauer::compose;
use sbl::chains::{
    enumerate_li_chain, is_li_chain, li_chain_decompositions, verify_module_closure,
};
use sbl::iso::{overline_embed, psi, verify_psi_bijection};
use sbl::pairpart::{enumerate, pairs_cross, Filter, Limits};
use sbl::{PairPartition, Vertex, VertexPair};

fn all(n_top: usize, n_bottom: usize) -> Vec<PairPartition> {
    if (n_top + n_bottom) % 2 == 1 {
        return Vec::new();
    }
    enumerate(n_top, n_bottom, Filter::All, &Limits::default()).unwrap()
}

fn sizes(max: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=max)
        .flat_map(move |a| (0..=max).map(move |b| (a, b)))
        .filter(|(a, b)| (a + b) % 2 == 0)
}

#[test]
fn associativity_up_to_three() {
    let mut count = 0;
    for (a, b) in sizes(3) {
        for c in (0..=3).filter(|c| (b + c) % 2 == 0) {
            for d in (0..=3).filter(|d| (c + d) % 2 == 0) {
                for x in all(a, b) {
                    for y in all(b, c) {
                        let (xy, l1) = compose(&x, &y).unwrap();
                        let ys: Vec<_> = all(c, d);
                        for z in &ys {
                            let (left, l2) = compose(&xy, z).unwrap();
                            let (yz, r1) = compose(&y, z).unwrap();
                            let (right, r2) = compose(&x, &yz).unwrap();
                            assert_eq!((left, l1 + l2), (right, r1 + r2));
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(count > 1_000, "{count}");
}

#[test]
fn tensor_compatibility_small() {
    for (a, b) in sizes(2) {
        for c in (0..=2).filter(|c| (b + c) % 2 == 0) {
            for (a0, b0) in sizes(2) {
                for c0 in (0..=2).filter(|c| (b0 + c) % 2 == 0) {
                    for p in all(a, b) {
                        for q in all(b, c) {
                            for p0 in all(a0, b0) {
                                for q0 in all(b0, c0) {
                                    let (pq, l) = compose(&p, &q).unwrap();
                                    let (pq0, l0) = compose(&p0, &q0).unwrap();
                                    let (lhs, loops) =
                                        compose(&p.tensor(&p0), &q.tensor(&q0)).unwrap();
                                    assert_eq!(lhs, pq.tensor(&pq0));
                                    assert_eq!(loops, l + l0);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn tensor_unit_associativity_and_flip() {
    let unit = PairPartition::empty();
    for (a, b) in sizes(3) {
        for p in all(a, b) {
            assert_eq!(p.tensor(&unit), p);
            assert_eq!(unit.tensor(&p), p);
            for q in all(1, 1).into_iter().chain(all(0, 2)) {
                assert_eq!(p.tensor(&q).flip(), p.flip().tensor(&q.flip()));
                for r in all(2, 0) {
                    assert_eq!(p.tensor(&q).tensor(&r), p.tensor(&q.tensor(&r)));
                }
            }
        }
    }
}

#[test]
fn chi_vanishes_exactly_on_noncrossing() {
    for (a, b) in sizes(5).filter(|(a, b)| a + b <= 8) {
        for p in all(a, b) {
            assert_eq!(p.chi() == 0, p.is_noncrossing(), "{p}");
        }
    }
}

#[test]
fn chain_decompositions_unique() {
    for (m, n) in sizes(5) {
        for p in all(m, n) {
            for i in 1..=m.min(n).min(3) {
                let found = li_chain_decompositions(&p, i).unwrap();
                assert!(
                    found.len() <= 1,
                    "{p} has {} L{i} decompositions",
                    found.len()
                );
            }
        }
    }
}

#[test]
fn l1_remainder_is_noncrossing_and_clear_of_chain() {
    for (m, n) in sizes(5).filter(|(m, n)| *m >= 1 && *n >= 1) {
        for p in all(m, n) {
            for d in li_chain_decompositions(&p, 1).unwrap() {
                let links = d.chains[0].links();
                for (k, r) in d.remainder.iter().enumerate() {
                    for s in &d.remainder[k + 1..] {
                        assert!(!pairs_cross(*r, *s, m, n).unwrap(), "{p}");
                    }
                    for l in links {
                        assert!(!pairs_cross(*r, *l, m, n).unwrap(), "{p}");
                    }
                }
            }
        }
    }
}

#[test]
fn padding_preserves_chain_membership() {
    let pads = [
        PairPartition::cup(),
        PairPartition::cap(),
        PairPartition::identity(1),
    ];
    for (m, n) in sizes(4).filter(|(m, n)| m + n <= 6) {
        for p in all(m, n) {
            for i in (1..=2).filter(|i| m.min(n) >= *i) {
                let before = is_li_chain(&p, i).unwrap();
                for pad in &pads {
                    assert_eq!(
                        is_li_chain(&p.tensor(pad), i).unwrap(),
                        before,
                        "{p} with {pad}, i={i}"
                    );
                }
            }
        }
    }
}

#[test]
fn chain_diagrams_form_a_category() {
    let l = Limits::default();
    for i in 1..=2 {
        for m in i..=4 {
            for n in (i..=4).filter(|n| (m + n) % 2 == 0) {
                for o in (i..=4).filter(|o| (n + o) % 2 == 0) {
                    let left = enumerate_li_chain(m, n, i, &l).unwrap();
                    let right = enumerate_li_chain(n, o, i, &l).unwrap();
                    for p in &left {
                        for q in &right {
                            let (pq, _) = compose(p, q).unwrap();
                            assert!(is_li_chain(&pq, i).unwrap(), "{p} * {q}, i={i}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn embedding_commutes_with_composition() {
    let l = Limits::default();
    for (s, t) in sizes(3).filter(|(s, t)| *s >= 1 && *t >= 1) {
        for o in (1..=3).filter(|o| (t + o) % 2 == 0) {
            let r = 4 + (s % 2);
            for p in enumerate_li_chain(s, t, 1, &l).unwrap() {
                for q in enumerate_li_chain(t, o, 1, &l).unwrap() {
                    let (pq, loops) = compose(&p, &q).unwrap();
                    let (embedded, eloops) = compose(
                        &overline_embed(&p, r).unwrap(),
                        &overline_embed(&q, r).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(embedded, overline_embed(&pq, r).unwrap());
                    assert_eq!(eloops, loops + (r - t) / 2);
                    assert!(is_li_chain(&embedded, 1).unwrap());
                }
            }
        }
    }
}

#[test]
fn chain_modules_closed_under_symmetric_action() {
    let l = Limits::default();
    for (i, m, n) in [
        (1, 2, 2),
        (1, 3, 3),
        (1, 4, 2),
        (1, 4, 4),
        (2, 3, 3),
        (2, 4, 2),
        (2, 4, 4),
        (3, 4, 4),
    ] {
        let r = verify_module_closure(i, m, n, &l).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn psi_round_trips() {
    let l = Limits::default();
    for m in 0..=4 {
        for n in (m % 2..=4).step_by(2) {
            let r = verify_psi_bijection(m, n, &l).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}

#[test]
fn psi_factors_through_trailing_cup() {
    let l = Limits::default();
    for m in 0..=4 {
        for n in (2..=4).filter(|n| (m + n) % 2 == 0) {
            let last = VertexPair::new(Vertex::bottom(n), Vertex::bottom(n + 1));
            for x in enumerate_blob(m, n, &l).unwrap() {
                if psi(&x).unwrap().contains_pair(last) {
                    let cup = VertexPair::new(Vertex::bottom(n - 1), Vertex::bottom(n));
                    assert!(x.diagram().contains_pair(cup) && !x.is_blobbed(&cup), "{x}");
                    let inner: Vec<_> = x
                        .diagram()
                        .pairs()
                        .into_iter()
                        .filter(|p| *p != cup)
                        .collect();
                    let core = PairPartition::new(m, n - 2, inner).unwrap();
                    let rebuilt =
                        BlobDiagram::new(core.tensor(&PairPartition::cup()), x.blobs().to_vec())
                            .unwrap();
                    assert_eq!(rebuilt, x);
                }
            }
        }
    }
}
