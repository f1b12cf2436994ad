//! The pair model of group completion, and its comparison functor from the
//! graded colimit.
//!
//! Objects are pairs (a, b) of objects of a permutative groupoid 𝓜, read as
//! formal differences a − b. A morphism (a,b) → (c,d) is an equivalence
//! class of triples (x, f: x⊕a → c, g: x⊕b → d), two triples identified
//! when an isomorphism of the x-coordinates intertwines them; classes are
//! normalized by a canonical representative so equality is syntactic. The
//! comparison functor reads each colimit summand off as a pair — entries at
//! even corners minus entries at odd corners for fully graded summands,
//! zero for summands that a free direction connects to a zero fiber.

use crate::biperm::BipermCat;
use crate::cube::{build_gr, cube_mor_entries, CubeObj};
use crate::effcat::{Bound, Cat, CatError, Functor};
use crate::indexing::{JObj, Perm};
use crate::permcat::PermCat;
use crate::term::{Mor, Term};
use crate::thomason::{h_parts, h_seq, Hocolim};
use std::collections::BTreeSet;
use std::rc::Rc;

pub fn gq_obj(pos: &Term, neg: &Term) -> Term {
    Term::tag("gq", vec![pos.clone(), neg.clone()])
}

pub fn gq_parts(t: &Term) -> (Term, Term) {
    let a = t.args("gq");
    (a[0].clone(), a[1].clone())
}

fn triple_parts(pay: &Term) -> (Term, Mor, Mor) {
    let a = pay.args("gqm");
    (a[0].clone(), Mor::from_term(&a[1]), Mor::from_term(&a[2]))
}

fn find_inverse(m: &PermCat, f: &Mor, b: &Bound) -> Option<Mor> {
    m.base
        .enum_homs(&f.cod, &f.dom, b)
        .into_iter()
        .find(|g| {
            m.base.try_comp(g, f).ok().as_ref() == Some(&m.id(&f.dom))
                && m.base.try_comp(f, g).ok().as_ref() == Some(&m.id(&f.cod))
        })
}

/// The canonical representative of the class of (x, f, g): sweep every
/// isomorphism α: x → x′ (each transports to (x′, f∘(α⁻¹⊕id), g∘(α⁻¹⊕id)))
/// and keep the least by (position of x′ in the enumeration, f, g).
fn canonical_triple(m: &PermCat, b: &Bound, dom: &Term, x: &Term, f: &Mor, g: &Mor) -> Term {
    let (a, bb) = gq_parts(dom);
    let mut best: Option<(usize, Term, Term, Term)> = None;
    let sweep = |oi: usize, xp: &Term, best: &mut Option<(usize, Term, Term, Term)>| {
        for alpha in m.base.enum_homs(x, xp, b) {
            let Some(inv) = find_inverse(m, &alpha, b) else { continue };
            let fp = m.base.comp(f, &m.add_mor(&inv, &m.id(&a)));
            let gp = m.base.comp(g, &m.add_mor(&inv, &m.id(&bb)));
            let cand = (oi, xp.clone(), fp.to_term(), gp.to_term());
            if best.as_ref().is_none_or(|cur| cand < *cur) {
                *best = Some(cand);
            }
        }
    };
    for (oi, xp) in m.base.enum_objects(b).iter().enumerate() {
        sweep(oi, xp, &mut best);
    }
    // When x has outgrown the enumeration window, its own automorphisms
    // still normalize the class (ranked after every enumerated target).
    sweep(usize::MAX, x, &mut best);
    let (_, xp, ft, gt) = best.expect("the identity isomorphism always applies");
    Term::tag("gqm", vec![xp, ft, gt])
}

/// The pair model on a permutative groupoid: precondition checks (every
/// enumerated morphism invertible; translation faithfulness spot-checked),
/// then the category of pairs with componentwise ⊕.
pub fn gq_build(m: &PermCat, b: &Bound) -> Result<PermCat, CatError> {
    let zero = m
        .zero
        .clone()
        .ok_or_else(|| CatError::Structural("the pair model needs an additive unit".into()))?;
    let objs = m.base.enum_objects(b);
    for x in &objs {
        for y in &objs {
            for f in m.base.enum_homs(x, y, b) {
                if find_inverse(m, &f, b).is_none() {
                    return Err(CatError::Structural(format!(
                        "not a groupoid: {f:?} has no enumerated inverse"
                    )));
                }
            }
        }
    }
    // Faithfulness of every translation x ⊕ (−) on the enumerated homs.
    for x in &objs {
        for a in &objs {
            for c in &objs {
                let homs = m.base.enum_homs(a, c, b);
                let translated: BTreeSet<Term> = homs
                    .iter()
                    .map(|f| m.add_mor(&m.id(x), f).to_term())
                    .collect();
                if translated.len() != homs.len() {
                    return Err(CatError::Structural(format!(
                        "translation by {x:?} is not faithful on homs {a:?} → {c:?}"
                    )));
                }
            }
        }
    }

    let name = format!("pairs({})", m.base.name);
    let mb = m.clone();
    let bb = b.clone();
    let identity = {
        let (m, b, zero) = (mb.clone(), bb.clone(), zero.clone());
        Rc::new(move |p: &Term| {
            let (a, c) = gq_parts(p);
            let pay = canonical_triple(&m, &b, p, &zero, &m.id(&a), &m.id(&c));
            Mor::new(p.clone(), p.clone(), pay)
        })
    };
    let compose = {
        let (m, b) = (mb.clone(), bb.clone());
        Rc::new(move |g: &Mor, f: &Mor| -> Result<Mor, CatError> {
            if f.cod != g.dom {
                return Err(CatError::Mismatch { f: Box::new(f.clone()), g: Box::new(g.clone()) });
            }
            let (x, ff, fg) = triple_parts(&f.pay);
            let (y, gf, gg) = triple_parts(&g.pay);
            let x2 = m.add(&y, &x);
            let f2 = m.base.comp(&gf, &m.add_mor(&m.id(&y), &ff));
            let g2 = m.base.comp(&gg, &m.add_mor(&m.id(&y), &fg));
            let pay = canonical_triple(&m, &b, &f.dom, &x2, &f2, &g2);
            Ok(Mor::new(f.dom.clone(), g.cod.clone(), pay))
        })
    };
    let objects = {
        let m = mb.clone();
        Rc::new(move |bd: &Bound| -> Vec<Term> {
            let os = m.base.enum_objects(bd);
            let mut out = Vec::new();
            for a in &os {
                for c in &os {
                    out.push(gq_obj(a, c));
                    if out.len() >= bd.count {
                        return out;
                    }
                }
            }
            out
        })
    };
    let homs = {
        let m = mb.clone();
        Rc::new(move |p: &Term, q: &Term, bd: &Bound| -> Vec<Mor> {
            let (a, bneg) = gq_parts(p);
            let (c, d) = gq_parts(q);
            let mut seen = BTreeSet::new();
            let mut out = Vec::new();
            for x in m.base.enum_objects(bd) {
                for f in m.base.enum_homs(&m.add(&x, &a), &c, bd) {
                    for g in m.base.enum_homs(&m.add(&x, &bneg), &d, bd) {
                        let pay = canonical_triple(&m, bd, p, &x, &f, &g);
                        if seen.insert(pay.clone()) {
                            out.push(Mor::new(p.clone(), q.clone(), pay));
                            if out.len() >= bd.count {
                                return out;
                            }
                        }
                    }
                }
            }
            out
        })
    };
    let oplus = {
        let m = mb.clone();
        Rc::new(move |p: &Term, q: &Term| {
            let (a, bneg) = gq_parts(p);
            let (c, d) = gq_parts(q);
            gq_obj(&m.add(&a, &c), &m.add(&bneg, &d))
        })
    };
    let oplus_mor = {
        let (m, b) = (mb.clone(), bb.clone());
        let oplus = oplus.clone();
        Rc::new(move |f: &Mor, g: &Mor| {
            let (fa, fb) = gq_parts(&f.dom);
            let (ga, gb) = gq_parts(&g.dom);
            let (x, f1, f2) = triple_parts(&f.pay);
            let (y, g1, g2) = triple_parts(&g.pay);
            let x2 = m.add(&x, &y);
            // (x⊕y)⊕(a⊕a′) → (x⊕a)⊕(y⊕a′) by the middle twist, then f1⊕g1.
            let shuffle = |u: &Term, v: &Term| {
                m.add_mor(&m.id(&x), &m.add_mor(&m.gamma(&y, u), &m.id(v)))
            };
            let h1 = m.base.comp(&m.add_mor(&f1, &g1), &shuffle(&fa, &ga));
            let h2 = m.base.comp(&m.add_mor(&f2, &g2), &shuffle(&fb, &gb));
            let dom = (oplus)(&f.dom, &g.dom);
            let cod = (oplus)(&f.cod, &g.cod);
            let pay = canonical_triple(&m, &b, &dom, &x2, &h1, &h2);
            Mor::new(dom, cod, pay)
        })
    };
    let twist = {
        let (m, b, zero) = (mb.clone(), bb.clone(), zero.clone());
        let oplus = oplus.clone();
        Rc::new(move |p: &Term, q: &Term| {
            let (a, bneg) = gq_parts(p);
            let (c, d) = gq_parts(q);
            let dom = (oplus)(p, q);
            let cod = (oplus)(q, p);
            let pay =
                canonical_triple(&m, &b, &dom, &zero, &m.gamma(&a, &c), &m.gamma(&bneg, &d));
            Mor::new(dom, cod, pay)
        })
    };

    Ok(PermCat {
        base: Cat { name, identity, compose, objects, homs },
        zero: Some(gq_obj(&zero, &zero)),
        oplus,
        oplus_mor,
        twist,
    })
}

/// The comparison package: the graded colimit of the input, the pair model
/// on its additive part, and the functor between them.
pub struct GqComparison {
    pub colimit: Hocolim,
    pub pairs: PermCat,
    pub functor: Functor,
}

/// The image of one colimit summand as a pair: for a summand whose grade
/// uses every ambient direction positively, ⊕ of the even-corner entries
/// against ⊕ of the odd-corner entries; every other summand is connected to
/// a zero fiber by its free direction and reads as (0, 0).
fn summand_pair(m: &PermCat, grade: &JObj, o: &Term) -> (Term, Term) {
    let zero = m.zero.clone().expect("pair model needs a unit");
    if !grade.t.is_all_positive() || grade.t.elems().len() < grade.n {
        return (zero.clone(), zero);
    }
    let c = CubeObj::from_term(o);
    let (mut even, mut odd) = (Vec::new(), Vec::new());
    for mask in 0..(1usize << c.dim()) {
        if mask.count_ones() % 2 == 0 {
            even.push(c.entry(mask).clone());
        } else {
            odd.push(c.entry(mask).clone());
        }
    }
    (m.add_n(&even), m.add_n(&odd))
}

fn object_pair(m: &PermCat, t: &Term) -> Term {
    let zero = m.zero.clone().expect("pair model needs a unit");
    let (mut pos, mut neg) = (zero.clone(), zero);
    for (x, o) in h_seq(t) {
        let (p, n) = summand_pair(m, &JObj::from_term(&x), &o);
        pos = m.add(&pos, &p);
        neg = m.add(&neg, &n);
    }
    gq_obj(&pos, &neg)
}

/// The same diagram with the index enumeration cut at ambient size `n_max`.
/// The entry budget (how large fiber objects get) and the grading window
/// (how many cube directions are in play) are independent scales; the
/// component comparison needs a full entry budget over a small grading
/// window to stay inside the union-find ceilings.
pub fn truncate_grades(d: &crate::biperm::GradedCat, n_max: usize) -> crate::biperm::GradedCat {
    let mut out = d.clone();
    let inner = d.j.base.objects.clone();
    out.j.base.objects = Rc::new(move |b: &Bound| {
        inner(b)
            .into_iter()
            .filter(|t| JObj::from_term(t).n <= n_max)
            .collect()
    });
    out
}

pub fn gq_compare(r: &BipermCat, b: &Bound) -> Result<GqComparison, CatError> {
    gq_compare_on(r, Hocolim::new(build_gr(r)), b)
}

/// The comparison over a grade-truncated colimit: entries range over the
/// full budget in `b` while the grading stays at ambient size ≤ `grade_max`.
pub fn gq_compare_truncated(
    r: &BipermCat,
    grade_max: usize,
    b: &Bound,
) -> Result<GqComparison, CatError> {
    gq_compare_on(r, Hocolim::new(truncate_grades(&build_gr(r), grade_max)), b)
}

fn gq_compare_on(r: &BipermCat, colimit: Hocolim, b: &Bound) -> Result<GqComparison, CatError> {
    let m = r.add.clone();
    let pairs = gq_build(&m, b)?;

    let on_obj = {
        let m = m.clone();
        Rc::new(move |t: &Term| object_pair(&m, t))
    };
    let on_mor = {
        let m = m.clone();
        let h = colimit.clone();
        let pairs = pairs.clone();
        let bd = b.clone();
        Rc::new(move |hm: &Mor| -> Mor {
            let (psi, ell, rho) = h_parts(hm);
            let ds = h_seq(&hm.dom);
            let cs = h_seq(&hm.cod);
            let k = ds.len();
            let dom_pairs: Vec<Term> = ds
                .iter()
                .map(|(x, o)| {
                    let (p, n) = summand_pair(&m, &JObj::from_term(x), o);
                    gq_obj(&p, &n)
                })
                .collect();
            // Regroup the summands fiber by fiber.
            let mut order: Vec<usize> = (0..k).collect();
            order.sort_by_key(|&i| (psi.apply(i + 1), i));
            let mut images = vec![0usize; k];
            for (pos, &i) in order.iter().enumerate() {
                images[i] = pos + 1;
            }
            let regroup = if k == 0 {
                pairs.id(&pairs.zero.clone().expect("pairs have a unit"))
            } else {
                pairs.block_perm(&dom_pairs, &Perm::new(images))
            };
            // Per summand: the image of its index leg.
            let leg_imgs: Vec<Mor> = (0..k)
                .map(|i| {
                    let (xt, o) = &ds[i];
                    let grade = JObj::from_term(xt);
                    let tgt = JObj::from_term(&ell[i].cod);
                    let moved = h.diagram.trans(&ell[i]).obj(o);
                    let (dp, dn) = summand_pair(&m, &grade, o);
                    let (cp, cn) = summand_pair(&m, &tgt, &moved);
                    let dom = gq_obj(&dp, &dn);
                    let cod = gq_obj(&cp, &cn);
                    if dom == cod {
                        return pairs.id(&dom);
                    }
                    let zero = m.zero.clone().expect("pair model needs a unit");
                    assert_eq!(
                        (dp, dn),
                        (zero.clone(), zero),
                        "a fully graded summand can only be relabelled or extended by zero"
                    );
                    assert_eq!(cp, cn, "a newly diagonal summand must balance");
                    // (0,0) → (s,s): translate by s itself.
                    let pay = canonical_triple(&m, &bd, &dom, &cp, &m.id(&cp), &m.id(&cn));
                    Mor::new(dom, cod, pay)
                })
                .collect();
            // Per target summand: ⊕ of its fiber's legs, then the image of ϱ.
            let blocks: Vec<Mor> = (0..cs.len())
                .map(|j| {
                    let fiber = psi.fiber(j + 1);
                    let legs: Vec<Mor> =
                        fiber.iter().map(|&i| leg_imgs[i - 1].clone()).collect();
                    let folded = pairs.add_mor_n(&legs);
                    let grade = JObj::from_term(&cs[j].0);
                    let rimg = if !grade.t.is_all_positive()
                        || grade.t.elems().len() < grade.n
                    {
                        pairs.id(&folded.cod)
                    } else {
                        let (dc, cc, entries) = cube_mor_entries(&rho[j]);
                        let (mut even, mut odd) = (Vec::new(), Vec::new());
                        for (mask, e) in entries.iter().enumerate() {
                            if mask.count_ones() % 2 == 0 {
                                even.push(e.clone());
                            } else {
                                odd.push(e.clone());
                            }
                        }
                        let f = m.add_mor_n(&even);
                        let g = m.add_mor_n(&odd);
                        let (dp, dn) = summand_pair(&m, &dc.owner, &dc.to_term());
                        let (cp, cn) = summand_pair(&m, &cc.owner, &cc.to_term());
                        let dom = gq_obj(&dp, &dn);
                        let cod = gq_obj(&cp, &cn);
                        let zero = m.zero.clone().expect("pair model needs a unit");
                        let pay = canonical_triple(&m, &bd, &dom, &zero, &f, &g);
                        Mor::new(dom, cod, pay)
                    };
                    pairs.comp(&rimg, &folded)
                })
                .collect();
            let total = if cs.is_empty() {
                pairs.id(&pairs.zero.clone().expect("pairs have a unit"))
            } else {
                pairs.add_mor_n(&blocks)
            };
            pairs.comp(&total, &regroup)
        })
    };

    let functor = Functor {
        name: "pair-comparison".into(),
        on_obj,
        on_mor,
    };
    Ok(GqComparison { colimit, pairs, functor })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::finite_sets_e;
    use crate::indexing::SignedSubset;
    use crate::permcat::check_permutative;
    use crate::pi0::pi0;
    use crate::thomason::{h_obj, Surj};
    use std::collections::BTreeMap;

    fn sigma() -> PermCat {
        finite_sets_e().add
    }

    fn grade(n: usize, elems: &[i64]) -> JObj {
        JObj::new(n, SignedSubset::new(n, elems.to_vec()))
    }

    fn cube(n: usize, elems: &[i64], entries: &[i64]) -> Term {
        CubeObj::new(grade(n, elems), entries.iter().map(|&e| Term::int(e)).collect())
            .to_term()
    }

    fn summand(n: usize, elems: &[i64], c: Term) -> Term {
        h_obj(&[(grade(n, elems).to_term(), c)])
    }

    #[test]
    fn pair_model_of_the_symmetric_groupoid_is_permutative() {
        let m = sigma();
        let b = Bound::default().with_size(2).with_count(24);
        let gq = gq_build(&m, &b).unwrap();
        let rep = check_permutative(&gq, &b);
        assert!(rep.ok(), "{}", rep.summary());
    }

    #[test]
    fn zero_pair_maps_to_the_diagonal_by_translation() {
        let m = sigma();
        let b = Bound::default().with_size(3).with_count(64);
        let gq = gq_build(&m, &b).unwrap();
        let zero = gq_obj(&Term::int(0), &Term::int(0));
        let diag = gq_obj(&Term::int(2), &Term::int(2));
        let homs = gq.base.enum_homs(&zero, &diag, &b);
        let two = Term::int(2);
        let expected =
            canonical_triple(&m, &b, &zero, &two, &m.id(&two), &m.id(&two));
        assert!(
            homs.iter().any(|h| h.pay == expected),
            "translation class missing among {} homs",
            homs.len()
        );
        assert_eq!((gq.oplus)(&zero, &diag), diag);
    }

    #[test]
    fn non_groupoid_input_is_rejected() {
        use crate::effcat::Cat;
        let base = Cat {
            name: "one-way".into(),
            identity: Rc::new(|a| Mor::new(a.clone(), a.clone(), Term::s("id"))),
            compose: Rc::new(|g, f| {
                if f.cod != g.dom {
                    return Err(CatError::Mismatch {
                        f: Box::new(f.clone()),
                        g: Box::new(g.clone()),
                    });
                }
                if f.pay == Term::s("id") {
                    return Ok(g.clone());
                }
                if g.pay == Term::s("id") {
                    return Ok(f.clone());
                }
                Err(CatError::Structural("no composites".into()))
            }),
            objects: Rc::new(|_| vec![Term::int(0), Term::int(1)]),
            homs: Rc::new(|a, c, _| {
                let mut out = Vec::new();
                if a == c {
                    out.push(Mor::new(a.clone(), c.clone(), Term::s("id")));
                }
                if *a == Term::int(0) && *c == Term::int(1) {
                    out.push(Mor::new(a.clone(), c.clone(), Term::s("shift")));
                }
                out
            }),
        };
        let m = PermCat {
            base,
            zero: Some(Term::int(0)),
            oplus: Rc::new(|a, b| Term::int(a.as_int() + b.as_int())),
            oplus_mor: Rc::new(|f, g| {
                Mor::new(
                    Term::int(f.dom.as_int() + g.dom.as_int()),
                    Term::int(f.cod.as_int() + g.cod.as_int()),
                    Term::s("sum"),
                )
            }),
            twist: Rc::new(|a, b| {
                let s = Term::int(a.as_int() + b.as_int());
                Mor::new(s.clone(), s, Term::s("id"))
            }),
        };
        let err = match gq_build(&m, &Bound::default()) {
            Err(e) => e,
            Ok(_) => panic!("one-way morphism was accepted"),
        };
        assert!(format!("{err}").contains("not a groupoid"), "{err}");
    }

    #[test]
    fn comparison_reads_summands_as_differences() {
        let b = Bound::default().with_size(1).with_count(100).with_depth(2);
        let comp = gq_compare(&finite_sets_e(), &b).unwrap();
        let f = &comp.functor;
        assert_eq!(
            f.obj(&summand(1, &[1], cube(1, &[1], &[1, 0]))),
            gq_obj(&Term::int(1), &Term::int(0))
        );
        assert_eq!(
            f.obj(&summand(1, &[-1], CubeObj::zero_term())),
            gq_obj(&Term::int(0), &Term::int(0))
        );
        assert_eq!(
            f.obj(&summand(1, &[], cube(1, &[], &[1]))),
            gq_obj(&Term::int(0), &Term::int(0))
        );
        assert_eq!(
            f.obj(&summand(0, &[], cube(0, &[], &[1]))),
            gq_obj(&Term::int(1), &Term::int(0))
        );
    }

    #[test]
    fn comparison_sends_the_diagonal_to_the_translation_class() {
        let b = Bound::default().with_size(1).with_count(100).with_depth(2);
        let comp = gq_compare(&finite_sets_e(), &b).unwrap();
        let h = &comp.colimit;
        let m = sigma();
        let dom = summand(1, &[], cube(1, &[], &[1]));
        let cod = summand(1, &[1], cube(1, &[1], &[1, 1]));
        let leg = crate::indexing::JMor::new(
            crate::indexing::FinInj::identity(1),
            grade(1, &[]),
            grade(1, &[1]),
        )
        .unwrap();
        let target = CubeObj::from_term(&cube(1, &[1], &[1, 1]));
        let rho = h.diagram.fiber_at(&grade(1, &[1]).to_term()).id(&target.to_term());
        let hm = h.mor(&dom, &cod, &Surj::identity(1), &[leg.to_mor()], &[rho]);
        let img = comp.functor.mor(&hm);
        let zero_pair = gq_obj(&Term::int(0), &Term::int(0));
        let one = Term::int(1);
        let expected =
            canonical_triple(&m, &b, &zero_pair, &one, &m.id(&one), &m.id(&one));
        assert_eq!(img.pay, expected);
        assert_eq!(img.dom, zero_pair);
        assert_eq!(img.cod, gq_obj(&one, &one));
    }

    #[test]
    fn comparison_is_functorial_on_enumerated_composites() {
        let b = Bound::default().with_size(1).with_count(40).with_depth(2);
        let comp = gq_compare(&finite_sets_e(), &b).unwrap();
        let h = &comp.colimit;
        let objs = h.enum_objects(&b);
        let mut checked = 0u64;
        for a in &objs {
            for mid in &objs {
                for f in h.enum_homs(a, mid, &b) {
                    for c in &objs {
                        for g in h.enum_homs(mid, c, &b) {
                            let gf = h.compose(&g, &f).unwrap();
                            let lhs = comp.functor.mor(&gf);
                            let rhs =
                                comp.pairs.comp(&comp.functor.mor(&g), &comp.functor.mor(&f));
                            assert_eq!(lhs, rhs, "functoriality fails on {f:?} ; {g:?}");
                            checked += 1;
                        }
                    }
                }
            }
        }
        assert!(checked > 200, "only {checked} composites enumerated");
        // Identities are preserved as well.
        for a in objs.iter().take(8) {
            assert_eq!(comp.functor.mor(&h.id(a)), comp.pairs.id(&comp.functor.obj(a)));
        }
    }

    #[test]
    fn comparison_induces_a_component_bijection() {
        let b = Bound::default().with_size(1).with_count(200).with_depth(2);
        let comp = gq_compare(&finite_sets_e(), &b).unwrap();
        let ph = pi0(&comp.colimit.as_permcat().base, &b).unwrap();
        let pg = pi0(&comp.pairs.base, &b).unwrap();
        let mut map: BTreeMap<usize, usize> = BTreeMap::new();
        for obj in &ph.objects {
            let img = comp.functor.obj(obj);
            if let Some(gc) = pg.class_of(&img) {
                let hc = ph.class_of(obj).unwrap();
                if let Some(&prev) = map.get(&hc) {
                    assert_eq!(prev, gc, "image class is not well-defined on {obj:?}");
                } else {
                    map.insert(hc, gc);
                }
            }
        }
        let images: Vec<usize> = map.values().copied().collect();
        let distinct: std::collections::BTreeSet<usize> = images.iter().copied().collect();
        assert_eq!(distinct.len(), images.len(), "component map not injective");
        assert_eq!(distinct.len(), pg.num_classes(), "component map not surjective");
    }
}
