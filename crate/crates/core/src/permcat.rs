//! Permutative categories (strictly associative and unital ⊕ with a twist),
//! symmetric monoidal functors between them, and their law checkers.

use crate::effcat::{cap, check_category, check_functor, Bound, Cat, Functor, Report};
use crate::indexing::Perm;
use crate::term::{Mor, Term};
use std::rc::Rc;

/// A permutative category over an effective base. `zero: None` selects
/// zeroless mode: every zero-related law is skipped and `oplus_n` of an empty
/// list is undefined.
#[derive(Clone)]
pub struct PermCat {
    pub base: Cat,
    pub zero: Option<Term>,
    pub oplus: Rc<dyn Fn(&Term, &Term) -> Term>,
    pub oplus_mor: Rc<dyn Fn(&Mor, &Mor) -> Mor>,
    /// γ⊕(a, b): a⊕b → b⊕a.
    pub twist: Rc<dyn Fn(&Term, &Term) -> Mor>,
}

impl PermCat {
    pub fn add(&self, a: &Term, b: &Term) -> Term {
        (self.oplus)(a, b)
    }

    pub fn add_mor(&self, f: &Mor, g: &Mor) -> Mor {
        (self.oplus_mor)(f, g)
    }

    pub fn gamma(&self, a: &Term, b: &Term) -> Mor {
        (self.twist)(a, b)
    }

    pub fn id(&self, a: &Term) -> Mor {
        self.base.id(a)
    }

    pub fn comp(&self, g: &Mor, f: &Mor) -> Mor {
        self.base.comp(g, f)
    }

    /// Fold ⊕ over a nonempty list (or any list, in zero mode).
    pub fn add_n(&self, items: &[Term]) -> Term {
        match items.split_first() {
            None => self.zero.clone().expect("empty ⊕ needs a zero"),
            Some((h, t)) => t.iter().fold(h.clone(), |acc, x| self.add(&acc, x)),
        }
    }

    pub fn add_mor_n(&self, items: &[Mor]) -> Mor {
        match items.split_first() {
            None => {
                let z = self.zero.clone().expect("empty ⊕ needs a zero");
                self.id(&z)
            }
            Some((h, t)) => t.iter().fold(h.clone(), |acc, x| self.add_mor(&acc, x)),
        }
    }

    /// The canonical symmetry ⊕ᵢ Aᵢ → ⊕ᵢ A_{σ⁻¹(i)} for an arbitrary
    /// permutation σ of the summands, built from adjacent twists. By
    /// coherence the result is independent of the chosen decomposition.
    pub fn block_perm(&self, objs: &[Term], sigma: &Perm) -> Mor {
        assert_eq!(objs.len(), sigma.arity());
        let mut current: Vec<Term> = objs.to_vec();
        // positions[p] = original index of the summand now at position p (0-based)
        let mut positions: Vec<usize> = (0..objs.len()).collect();
        let mut acc = self.id(&self.add_n(objs));
        // Selection sort by target position: bring the summand destined for
        // slot p to slot p using adjacent transpositions.
        for p in 0..objs.len() {
            // We need at slot p the original summand i with sigma(i+1) = p+1.
            let want = (0..objs.len())
                .find(|i| sigma.apply(i + 1) == p + 1)
                .expect("sigma is a bijection");
            let mut at = positions.iter().position(|&i| i == want).unwrap();
            while at > p {
                // swap slots at-1 and at
                let step = self.adjacent_swap(&current, at - 1);
                acc = self.comp(&step, &acc);
                current.swap(at - 1, at);
                positions.swap(at - 1, at);
                at -= 1;
            }
        }
        acc
    }

    /// id ⊕ … ⊕ γ⊕(A_k, A_{k+1}) ⊕ … ⊕ id (0-based k).
    fn adjacent_swap(&self, objs: &[Term], k: usize) -> Mor {
        let mut parts: Vec<Mor> = Vec::new();
        let mut i = 0;
        while i < objs.len() {
            if i == k {
                parts.push(self.gamma(&objs[k], &objs[k + 1]));
                i += 2;
            } else {
                parts.push(self.id(&objs[i]));
                i += 1;
            }
        }
        self.add_mor_n(&parts)
    }
}

/// Checks strict associativity/unitality of ⊕, bifunctoriality, symmetry,
/// naturality of the twist, and the twist/⊕ compatibility, over enumerated
/// samples. Zero laws are skipped in zeroless mode.
pub fn check_permutative(p: &PermCat, bound: &Bound) -> Report {
    let mut rep = check_category(&p.base, bound);
    let objs = cap(&p.base.enum_objects(bound), bound.count);
    let mors = cap(&p.base.enum_morphisms(bound), bound.count);

    // Strict associativity and (in zero mode) unitality on objects.
    let mut done = 0usize;
    'obj3: for a in &objs {
        for b in &objs {
            for c in &objs {
                let l = p.add(&p.add(a, b), c);
                let r = p.add(a, &p.add(b, c));
                rep.check("oplus-assoc-obj", l == r, || format!("({a:?}⊕{b:?})⊕{c:?}: {l:?} != {r:?}"));
                done += 1;
                if done >= bound.tuples {
                    break 'obj3;
                }
            }
        }
    }
    if let Some(z) = &p.zero {
        for a in &objs {
            rep.check("oplus-left-unit", p.add(z, a) == *a, || format!("0⊕{a:?}"));
            rep.check("oplus-right-unit", p.add(a, z) == *a, || format!("{a:?}⊕0"));
            let g = p.gamma(a, z);
            rep.check("twist-zero", g == p.id(a), || format!("γ⊕({a:?},0) = {g:?}"));
        }
        let idz = p.id(z);
        for f in &mors {
            let l = p.add_mor(&idz, f);
            rep.check("oplus-left-unit-mor", l == *f, || format!("id_0⊕{f:?} = {l:?}"));
            let r = p.add_mor(f, &idz);
            rep.check("oplus-right-unit-mor", r == *f, || format!("{f:?}⊕id_0 = {r:?}"));
        }
    }

    // Strict associativity on morphisms.
    done = 0;
    'mor3: for f in &mors {
        for g in &mors {
            for h in &mors {
                let l = p.add_mor(&p.add_mor(f, g), h);
                let r = p.add_mor(f, &p.add_mor(g, h));
                rep.check("oplus-assoc-mor", l == r, || format!("(f⊕g)⊕h != f⊕(g⊕h) for {f:?},{g:?},{h:?}"));
                done += 1;
                if done >= bound.tuples {
                    break 'mor3;
                }
            }
        }
    }

    // Bifunctoriality: identities and composites.
    for a in &objs {
        for b in &objs {
            let l = p.add_mor(&p.id(a), &p.id(b));
            let r = p.id(&p.add(a, b));
            rep.check("oplus-id-mor", l == r, || format!("id⊕id != id at ({a:?},{b:?})"));
        }
    }
    done = 0;
    'bif: for f in &mors {
        for f2 in &mors {
            for g in &mors {
                if g.dom != f.cod {
                    continue;
                }
                for g2 in &mors {
                    if g2.dom != f2.cod {
                        continue;
                    }
                    let l = p.comp(&p.add_mor(g, g2), &p.add_mor(f, f2));
                    let r = p.add_mor(&p.comp(g, f), &p.comp(g2, f2));
                    rep.check("oplus-interchange", l == r, || {
                        format!("(g⊕g')∘(f⊕f') != (g∘f)⊕(g'∘f') for {f:?},{f2:?},{g:?},{g2:?}")
                    });
                    done += 1;
                    if done >= bound.tuples {
                        break 'bif;
                    }
                }
            }
        }
    }

    // Symmetry and naturality of the twist.
    for a in &objs {
        for b in &objs {
            let g1 = p.gamma(a, b);
            rep.check(
                "twist-endpoints",
                g1.dom == p.add(a, b) && g1.cod == p.add(b, a),
                || format!("γ⊕({a:?},{b:?}) = {g1:?}"),
            );
            let g2 = p.gamma(b, a);
            let round = p.comp(&g2, &g1);
            rep.check("twist-involution", round == p.id(&p.add(a, b)), || {
                format!("γ⊕({b:?},{a:?})∘γ⊕({a:?},{b:?}) = {round:?}")
            });
        }
    }
    done = 0;
    'nat: for f in &mors {
        for f2 in &mors {
            let l = p.comp(&p.gamma(&f.cod, &f2.cod), &p.add_mor(f, f2));
            let r = p.comp(&p.add_mor(f2, f), &p.gamma(&f.dom, &f2.dom));
            rep.check("twist-naturality", l == r, || {
                format!("γ⊕∘(f⊕f') != (f'⊕f)∘γ⊕ for {f:?},{f2:?}")
            });
            done += 1;
            if done >= bound.tuples {
                break 'nat;
            }
        }
    }

    // Compatibility of the twist with ⊕ on either side.
    done = 0;
    'hex: for a in &objs {
        for b in &objs {
            for c in &objs {
                let lhs = p.gamma(&p.add(a, b), c);
                let rhs = p.comp(
                    &p.add_mor(&p.gamma(a, c), &p.id(b)),
                    &p.add_mor(&p.id(a), &p.gamma(b, c)),
                );
                rep.check("twist-oplus-compat", lhs == rhs, || {
                    format!("γ⊕({a:?}⊕{b:?},{c:?}) != (γ⊕⊕id)∘(id⊕γ⊕)")
                });
                let lhs2 = p.gamma(a, &p.add(b, c));
                let rhs2 = p.comp(
                    &p.add_mor(&p.id(b), &p.gamma(a, c)),
                    &p.add_mor(&p.gamma(a, b), &p.id(c)),
                );
                rep.check("twist-oplus-compat-r", lhs2 == rhs2, || {
                    format!("γ⊕({a:?},{b:?}⊕{c:?}) != (id⊕γ⊕)∘(γ⊕⊕id)")
                });
                done += 1;
                if done >= bound.tuples {
                    break 'hex;
                }
            }
        }
    }
    rep
}

/// A (possibly lax) symmetric monoidal functor between permutative
/// categories.
#[derive(Clone)]
pub struct SymMonFunctor {
    pub source: PermCat,
    pub target: PermCat,
    pub f: Functor,
    /// η⊕(a,b): F(a)⊕F(b) → F(a⊕b).
    pub eta: Rc<dyn Fn(&Term, &Term) -> Mor>,
    /// 0_target → F(0_source), absent in zeroless mode.
    pub unit_mor: Option<Mor>,
    pub strict: bool,
}

impl SymMonFunctor {
    pub fn strict_from(f: Functor, source: PermCat, target: PermCat) -> SymMonFunctor {
        let t = target.clone();
        let f2 = f.clone();
        let unit_mor = source
            .zero
            .as_ref()
            .map(|z| target.id(&f.obj(z)));
        SymMonFunctor {
            source,
            target: target.clone(),
            f,
            eta: Rc::new(move |a, b| t.id(&t.add(&f2.obj(a), &f2.obj(b)))),
            unit_mor,
            strict: true,
        }
    }
}

/// Checks binaturality of η⊕, the twist-compatibility square, unit coherence,
/// and (if flagged) strictness.
pub fn check_symmon_functor(sf: &SymMonFunctor, bound: &Bound) -> Report {
    let mut rep = check_functor(&sf.f, &sf.source.base, &sf.target.base, bound);
    let objs = cap(&sf.source.base.enum_objects(bound), bound.count);
    let mors = cap(&sf.source.base.enum_morphisms(bound), bound.count);
    let t = &sf.target;

    for a in &objs {
        for b in &objs {
            let e = (sf.eta)(a, b);
            rep.check(
                "eta-endpoints",
                e.dom == t.add(&sf.f.obj(a), &sf.f.obj(b)) && e.cod == sf.f.obj(&sf.source.add(a, b)),
                || format!("η⊕({a:?},{b:?}) = {e:?}"),
            );
            if sf.strict {
                rep.check(
                    "strictness-obj",
                    sf.f.obj(&sf.source.add(a, b)) == t.add(&sf.f.obj(a), &sf.f.obj(b)),
                    || format!("F({a:?}⊕{b:?}) != F{a:?}⊕F{b:?}"),
                );
                rep.check("strictness-eta", e == t.id(&e.dom), || format!("η⊕ = {e:?} not id"));
            }
            // Twist square: F(γ⊕(a,b)) ∘ η⊕(a,b) = η⊕(b,a) ∘ γ⊕(Fa,Fb).
            let lhs = t.comp(&sf.f.mor(&sf.source.gamma(a, b)), &e);
            let rhs = t.comp(&(sf.eta)(b, a), &t.gamma(&sf.f.obj(a), &sf.f.obj(b)));
            rep.check("eta-twist-square", lhs == rhs, || {
                format!("twist square fails at ({a:?},{b:?}): {lhs:?} != {rhs:?}")
            });
        }
    }

    // Binaturality of η⊕.
    let mut done = 0usize;
    'nat: for m in &mors {
        for m2 in &mors {
            let lhs = t.comp(
                &(sf.eta)(&m.cod, &m2.cod),
                &t.add_mor(&sf.f.mor(m), &sf.f.mor(m2)),
            );
            let rhs = t.comp(&sf.f.mor(&sf.source.add_mor(m, m2)), &(sf.eta)(&m.dom, &m2.dom));
            rep.check("eta-binatural", lhs == rhs, || {
                format!("η⊕ not natural at ({m:?},{m2:?})")
            });
            done += 1;
            if done >= bound.tuples {
                break 'nat;
            }
        }
    }

    // Unit coherence (only meaningful with zeros on both sides).
    if let (Some(zs), Some(zt), Some(u)) = (&sf.source.zero, &t.zero, &sf.unit_mor) {
        rep.check(
            "unit-endpoints",
            u.dom == *zt && u.cod == sf.f.obj(zs),
            || format!("unit morphism {u:?}"),
        );
        if sf.strict {
            rep.check("strictness-zero", sf.f.obj(zs) == *zt, || {
                format!("F(0) = {:?} != 0", sf.f.obj(zs))
            });
        }
        for a in &objs {
            // η⊕(0,a) ∘ (unit ⊕ id_Fa) = id_{F(a)} since 0⊕a = a strictly.
            let lhs = t.comp(&(sf.eta)(zs, a), &t.add_mor(u, &t.id(&sf.f.obj(a))));
            rep.check("unit-coherence", lhs == t.id(&sf.f.obj(a)), || {
                format!("unit coherence fails at {a:?}: {lhs:?}")
            });
        }
    }
    rep
}

/// The terminal permutative category: one object, one morphism.
pub fn zero_cat() -> PermCat {
    let star = Term::s("*");
    let s2 = star.clone();
    let s3 = star.clone();
    let s4 = star.clone();
    let s5 = star.clone();
    let base = Cat {
        name: "terminal".into(),
        identity: Rc::new(move |a| Mor::new(a.clone(), a.clone(), Term::s("id"))),
        compose: Rc::new(|g, f| Ok(Mor::new(f.dom.clone(), g.cod.clone(), Term::s("id")))),
        objects: Rc::new(move |_| vec![s2.clone()]),
        homs: Rc::new(move |a, b, _| {
            if *a == s3 && *b == s3 {
                vec![Mor::new(a.clone(), b.clone(), Term::s("id"))]
            } else {
                vec![]
            }
        }),
    };
    PermCat {
        base,
        zero: Some(star),
        oplus: Rc::new(move |_, _| s4.clone()),
        oplus_mor: Rc::new(move |_, _| Mor::new(s5.clone(), s5.clone(), Term::s("id"))),
        twist: {
            let s6 = Term::s("*");
            Rc::new(move |_, _| Mor::new(s6.clone(), s6.clone(), Term::s("id")))
        },
    }
}

/// Componentwise product of two permutative categories. Objects and morphism
/// payloads are tagged pairs.
pub fn product_cat(p1: &PermCat, p2: &PermCat) -> PermCat {
    let pair = |a: &Term, b: &Term| Term::tag("pair", vec![a.clone(), b.clone()]);
    let unpair = |t: &Term| -> (Term, Term) {
        let a = t.args("pair");
        (a[0].clone(), a[1].clone())
    };
    let pair_mor = move |f: &Mor, g: &Mor| -> Mor {
        Mor::new(
            pair(&f.dom, &g.dom),
            pair(&f.cod, &g.cod),
            Term::tag("pair", vec![f.pay.clone(), g.pay.clone()]),
        )
    };
    let unpair_mor = move |m: &Mor| -> (Mor, Mor) {
        let (d1, d2) = unpair(&m.dom);
        let (c1, c2) = unpair(&m.cod);
        let p = m.pay.args("pair");
        (
            Mor::new(d1, c1, p[0].clone()),
            Mor::new(d2, c2, p[1].clone()),
        )
    };

    let (q1, q2) = (p1.clone(), p2.clone());
    let (r1, r2) = (p1.clone(), p2.clone());
    let (s1, s2) = (p1.clone(), p2.clone());
    let (t1, t2) = (p1.clone(), p2.clone());
    let (u1, u2) = (p1.clone(), p2.clone());
    let (v1, v2) = (p1.clone(), p2.clone());
    let (w1, w2) = (p1.clone(), p2.clone());

    let base = Cat {
        name: format!("{}×{}", p1.base.name, p2.base.name),
        identity: Rc::new(move |a| {
            let (x, y) = unpair(a);
            pair_mor(&q1.id(&x), &q2.id(&y))
        }),
        compose: Rc::new(move |g, f| {
            let (g1, g2) = unpair_mor(g);
            let (f1, f2) = unpair_mor(f);
            Ok(pair_mor(&r1.base.try_comp(&g1, &f1)?, &r2.base.try_comp(&g2, &f2)?))
        }),
        objects: Rc::new(move |b| {
            let mut out = Vec::new();
            for x in s1.base.enum_objects(b) {
                for y in s2.base.enum_objects(b) {
                    out.push(pair(&x, &y));
                    if out.len() >= b.count {
                        return out;
                    }
                }
            }
            out
        }),
        homs: Rc::new(move |a, b, bd| {
            let (a1, a2) = unpair(a);
            let (b1, b2) = unpair(b);
            let mut out = Vec::new();
            for f in t1.base.enum_homs(&a1, &b1, bd) {
                for g in t2.base.enum_homs(&a2, &b2, bd) {
                    out.push(pair_mor(&f, &g));
                }
            }
            out
        }),
    };
    PermCat {
        base,
        zero: match (&p1.zero, &p2.zero) {
            (Some(z1), Some(z2)) => Some(pair(z1, z2)),
            _ => None,
        },
        oplus: Rc::new(move |a, b| {
            let (a1, a2) = unpair(a);
            let (b1, b2) = unpair(b);
            pair(&u1.add(&a1, &b1), &u2.add(&a2, &b2))
        }),
        oplus_mor: Rc::new(move |f, g| {
            let (f1, f2) = unpair_mor(f);
            let (g1, g2) = unpair_mor(g);
            pair_mor(&v1.add_mor(&f1, &g1), &v2.add_mor(&f2, &g2))
        }),
        twist: Rc::new(move |a, b| {
            let (a1, a2) = unpair(a);
            let (b1, b2) = unpair(b);
            pair_mor(&w1.gamma(&a1, &b1), &w2.gamma(&a2, &b2))
        }),
    }
}
