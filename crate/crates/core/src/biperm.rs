//! Bipermutative and strictly bimonoidal categories, their graded variants
//! (a functor from a permutative index category to permutative categories
//! with a graded tensor), and the per-condition law checkers, plus lax
//! morphisms of such structures.

use crate::effcat::{cap, Bound, Functor, Report};
use crate::permcat::{check_permutative, check_symmon_functor, zero_cat, PermCat, SymMonFunctor};
use crate::term::{Mor, Term};
use std::rc::Rc;

type Tensor = Rc<dyn Fn(&Term, &Term, &Term, &Term) -> Term>;
type TensorMor = Rc<dyn Fn(&Term, &Mor, &Term, &Mor) -> Mor>;
type Gamma = Rc<dyn Fn(&Term, &Term, &Term, &Term) -> Mor>;
type Dl = Rc<dyn Fn(&Term, &Term, &Term, &Term, &Term) -> Mor>;

/// A graded bipermutative (or, without `gamma`, graded strictly bimonoidal)
/// category: a family of permutative fibers over a permutative index
/// category, with strict transition functors and a graded tensor.
///
/// All graded operations take the grades explicitly: `tensor(x, a, y, b)` is
/// a⊗b in the fiber over x+y, `gamma(x, a, y, b)` is the multiplicative twist
/// a⊗b → C(χ)(b⊗a), and `dl(x, a, y, b, b')` is the left distributivity
/// (a⊗b)⊕(a⊗b') → a⊗(b⊕b').
#[derive(Clone)]
pub struct GradedCat {
    pub j: PermCat,
    pub fiber: Rc<dyn Fn(&Term) -> PermCat>,
    pub transition: Rc<dyn Fn(&Mor) -> Functor>,
    /// The multiplicative unit, an object of the fiber over the index zero.
    pub one: Term,
    pub tensor: Tensor,
    pub tensor_mor: TensorMor,
    pub gamma: Option<Gamma>,
    pub dl: Dl,
}

impl GradedCat {
    pub fn fiber_at(&self, x: &Term) -> PermCat {
        (self.fiber)(x)
    }

    pub fn trans(&self, k: &Mor) -> Functor {
        (self.transition)(k)
    }

    pub fn tens(&self, x: &Term, a: &Term, y: &Term, b: &Term) -> Term {
        (self.tensor)(x, a, y, b)
    }

    pub fn tens_mor(&self, x: &Term, f: &Mor, y: &Term, g: &Mor) -> Mor {
        (self.tensor_mor)(x, f, y, g)
    }

    pub fn gamma_t(&self, x: &Term, a: &Term, y: &Term, b: &Term) -> Mor {
        (self.gamma.as_ref().expect("no multiplicative twist"))(x, a, y, b)
    }

    pub fn dl_at(&self, x: &Term, a: &Term, y: &Term, b: &Term, bp: &Term) -> Mor {
        (self.dl)(x, a, y, b, bp)
    }

    /// The index twist χ as a morphism x+y → y+x of the index category.
    pub fn chi(&self, x: &Term, y: &Term) -> Mor {
        self.j.gamma(x, y)
    }

    pub fn j_add(&self, x: &Term, y: &Term) -> Term {
        self.j.add(x, y)
    }

    pub fn index_zero(&self) -> Term {
        self.j.zero.clone().expect("index category must have a zero")
    }
}

/// The left distributivity composite built from the multiplicative twist and
/// the strict right distributivity: the twist on each summand, the identity
/// regrouping, and the transported twist back.
pub fn derive_left_dist(
    c: &GradedCat,
    x: &Term,
    a: &Term,
    y: &Term,
    b: &Term,
    bp: &Term,
) -> Mor {
    let fxy = c.fiber_at(&c.j_add(x, y));
    let leg1 = fxy.add_mor(&c.gamma_t(x, a, y, b), &c.gamma_t(x, a, y, bp));
    let fy = c.fiber_at(y);
    let back = c
        .trans(&c.chi(y, x))
        .mor(&c.gamma_t(y, &fy.add(b, bp), x, a));
    fxy.comp(&back, &leg1)
}

/// Builds a graded view of an ungraded bipermutative or strictly bimonoidal
/// category, over the one-morphism index category.
#[derive(Clone)]
pub struct BipermCat {
    pub add: PermCat,
    pub one: Term,
    pub tensor: Rc<dyn Fn(&Term, &Term) -> Term>,
    pub tensor_mor: Rc<dyn Fn(&Mor, &Mor) -> Mor>,
    /// γ⊗(a,b): a⊗b → b⊗a. Absent for strictly bimonoidal categories.
    pub gamma_tensor: Option<Rc<dyn Fn(&Term, &Term) -> Mor>>,
    /// Explicit left distributivity; required when `gamma_tensor` is absent,
    /// derived otherwise.
    pub dl: Option<Rc<dyn Fn(&Term, &Term, &Term) -> Mor>>,
}

impl BipermCat {
    pub fn to_graded(&self) -> GradedCat {
        let j = zero_cat();
        let f = self.add.clone();
        let this = self.clone();
        let tensor: Tensor = {
            let t = self.tensor.clone();
            Rc::new(move |_, a, _, b| t(a, b))
        };
        let tensor_mor: TensorMor = {
            let t = self.tensor_mor.clone();
            Rc::new(move |_, f, _, g| t(f, g))
        };
        let gamma: Option<Gamma> = self.gamma_tensor.clone().map(|g| {
            let g2: Gamma = Rc::new(move |_: &Term, a: &Term, _: &Term, b: &Term| g(a, b));
            g2
        });
        let dl: Dl = Rc::new(move |_, a, _, b, bp| this.left_dist(a, b, bp));
        GradedCat {
            j,
            fiber: Rc::new(move |_| f.clone()),
            transition: Rc::new(|_| Functor::identity()),
            one: self.one.clone(),
            tensor,
            tensor_mor,
            gamma,
            dl,
        }
    }

    /// d_ℓ(a; b, b'): (a⊗b)⊕(a⊗b') → a⊗(b⊕b').
    pub fn left_dist(&self, a: &Term, b: &Term, bp: &Term) -> Mor {
        if let Some(dl) = &self.dl {
            return dl(a, b, bp);
        }
        let g = self.gamma_tensor.as_ref().expect("need a twist or explicit d_ℓ");
        let leg1 = self.add.add_mor(&g(a, b), &g(a, bp));
        let back = g(&self.add.add(b, bp), a);
        self.add.comp(&back, &leg1)
    }
}

fn sample_objs(fib: &PermCat, bound: &Bound, n: usize) -> Vec<Term> {
    let mut v = cap(&fib.base.enum_objects(bound), n);
    if let Some(z) = &fib.zero {
        if !v.contains(z) {
            v.push(z.clone());
        }
    }
    v
}

fn sample_mors(fib: &PermCat, bound: &Bound, n: usize) -> Vec<Mor> {
    cap(&fib.base.enum_morphisms(bound), n)
}

/// Per-fiber sample size: shares the object budget over the enumerated index
/// objects, so the ungraded (one-fiber) case gets the whole budget.
fn fiber_cap(bound: &Bound, jn: usize) -> usize {
    (bound.count / jn.max(1)).max(2)
}

/// Verifies the ten graded-bipermutative conditions; each violation is
/// labelled `cond1`..`cond10` plus a sub-law name.
pub fn check_graded_bipermutative(c: &GradedCat, bound: &Bound) -> Report {
    let mut rep = check_graded_common(c, bound, true);
    rep.absorb(check_gamma_conditions(c, bound));
    rep
}

/// Verifies the strictly bimonoidal conditions: everything except the
/// multiplicative-twist clauses, with the d_r/d_ℓ interchange square instead.
pub fn check_graded_strictly_bimonoidal(c: &GradedCat, bound: &Bound) -> Report {
    check_graded_common(c, bound, false)
}

fn check_graded_common(c: &GradedCat, bound: &Bound, biperm: bool) -> Report {
    let mut rep = Report::default();
    let jobjs = cap(&c.j.base.enum_objects(bound), bound.count);
    let jmors = cap(&c.j.base.enum_morphisms(bound), bound.count);
    let fcap = fiber_cap(bound, jobjs.len());
    let zero_j = c.index_zero();

    // Every fiber is permutative; transitions are strict symmetric monoidal.
    for x in &jobjs {
        let fib = c.fiber_at(x);
        let mut r = check_permutative(&fib, bound);
        r.violations.iter_mut().for_each(|v| v.law = format!("fiber/{}", v.law));
        rep.absorb(r);
    }
    for k in cap(&jmors, bound.tuples / 8 + 1) {
        let sf = SymMonFunctor::strict_from(c.trans(&k), c.fiber_at(&k.dom), c.fiber_at(&k.cod));
        let mut r = check_symmon_functor(&sf, &bound.with_count(fcap));
        r.violations
            .iter_mut()
            .for_each(|v| v.law = format!("transition/{}", v.law));
        rep.absorb(r);
    }

    // Condition 1: ⊗ is a bifunctor and commutes with transitions.
    let mut done = 0usize;
    'c1: for x in &jobjs {
        let fx = c.fiber_at(x);
        let xobjs = sample_objs(&fx, bound, fcap);
        let xmors = sample_mors(&fx, bound, fcap);
        for y in &jobjs {
            let fy = c.fiber_at(y);
            let yobjs = sample_objs(&fy, bound, fcap);
            let ymors = sample_mors(&fy, bound, fcap);
            let fxy = c.fiber_at(&c.j_add(x, y));
            for a in &xobjs {
                for b in &yobjs {
                    let l = c.tens_mor(x, &fx.id(a), y, &fy.id(b));
                    let r = fxy.id(&c.tens(x, a, y, b));
                    rep.check("cond1/tensor-id", l == r, || {
                        format!("id⊗id != id at ({a:?},{b:?}) over ({x:?},{y:?})")
                    });
                }
            }
            for f in &xmors {
                for g in &ymors {
                    let fg = c.tens_mor(x, f, y, g);
                    rep.check(
                        "cond1/tensor-endpoints",
                        fg.dom == c.tens(x, &f.dom, y, &g.dom)
                            && fg.cod == c.tens(x, &f.cod, y, &g.cod),
                        || format!("f⊗g endpoints wrong: {fg:?}"),
                    );
                    for f2 in &xmors {
                        if f2.dom != f.cod {
                            continue;
                        }
                        for g2 in &ymors {
                            if g2.dom != g.cod {
                                continue;
                            }
                            let lhs = c.tens_mor(x, &fx.comp(f2, f), y, &fy.comp(g2, g));
                            let rhs = fxy.comp(&c.tens_mor(x, f2, y, g2), &fg);
                            rep.check("cond1/tensor-composition", lhs == rhs, || {
                                format!("(f'∘f)⊗(g'∘g) != (f'⊗g')∘(f⊗g)")
                            });
                            done += 1;
                            if done >= bound.tuples {
                                break 'c1;
                            }
                        }
                    }
                }
            }
        }
    }

    // Condition 1, transition square: C(k+ℓ)(a⊗b) = C(k)a ⊗ C(ℓ)b.
    done = 0;
    'c1t: for k in &jmors {
        let fk = c.trans(k);
        let fx = c.fiber_at(&k.dom);
        let xobjs = sample_objs(&fx, bound, fcap);
        let xmors = sample_mors(&fx, bound, 2);
        for l in &jmors {
            let fl = c.trans(l);
            let fy = c.fiber_at(&l.dom);
            let yobjs = sample_objs(&fy, bound, fcap);
            let ymors = sample_mors(&fy, bound, 2);
            let kl = c.j.add_mor(k, l);
            let fkl = c.trans(&kl);
            for a in &xobjs {
                for b in &yobjs {
                    let lhs = fkl.obj(&c.tens(&k.dom, a, &l.dom, b));
                    let rhs = c.tens(&k.cod, &fk.obj(a), &l.cod, &fl.obj(b));
                    rep.check("cond1/transition-square-obj", lhs == rhs, || {
                        format!("C(k+ℓ)({a:?}⊗{b:?}) = {lhs:?} != {rhs:?}")
                    });
                    done += 1;
                    if done >= bound.tuples {
                        break 'c1t;
                    }
                }
            }
            for f in &xmors {
                for g in &ymors {
                    let lhs = fkl.mor(&c.tens_mor(&k.dom, f, &l.dom, g));
                    let rhs = c.tens_mor(&k.cod, &fk.mor(f), &l.cod, &fl.mor(g));
                    rep.check("cond1/transition-square-mor", lhs == rhs, || {
                        format!("C(k+ℓ)(f⊗g) != C(k)f⊗C(ℓ)g")
                    });
                }
            }
        }
    }

    // Condition 2: the unit is strict on both sides.
    for x in &jobjs {
        let fx = c.fiber_at(x);
        for a in sample_objs(&fx, bound, fcap) {
            rep.check("cond2/left-unit", c.tens(&zero_j, &c.one, x, &a) == a, || {
                format!("1⊗{a:?} != {a:?}")
            });
            rep.check("cond2/right-unit", c.tens(x, &a, &zero_j, &c.one) == a, || {
                format!("{a:?}⊗1 != {a:?}")
            });
        }
        let f0 = c.fiber_at(&zero_j);
        let one_id = f0.id(&c.one);
        for f in sample_mors(&fx, bound, fcap) {
            rep.check("cond2/left-unit-mor", c.tens_mor(&zero_j, &one_id, x, &f) == f, || {
                format!("id_1⊗{f:?}")
            });
            rep.check("cond2/right-unit-mor", c.tens_mor(x, &f, &zero_j, &one_id) == f, || {
                format!("{f:?}⊗id_1")
            });
        }
    }

    // Condition 4 (strict associativity of ⊗, objects and morphisms).
    done = 0;
    'c4: for x in &jobjs {
        let fx = c.fiber_at(x);
        let xo = sample_objs(&fx, bound, fcap);
        for y in &jobjs {
            let fy = c.fiber_at(y);
            let yo = sample_objs(&fy, bound, fcap);
            let xy = c.j_add(x, y);
            for z in &jobjs {
                let fz = c.fiber_at(z);
                let zo = sample_objs(&fz, bound, fcap);
                let yz = c.j_add(y, z);
                for a in &xo {
                    for b in &yo {
                        for e in &zo {
                            let l = c.tens(&xy, &c.tens(x, a, y, b), z, e);
                            let r = c.tens(x, a, &yz, &c.tens(y, b, z, e));
                            rep.check("cond4/tensor-assoc", l == r, || {
                                format!("({a:?}⊗{b:?})⊗{e:?} != assoc")
                            });
                            done += 1;
                            if done >= bound.tuples {
                                break 'c4;
                            }
                        }
                    }
                }
            }
        }
    }

    // Condition 5: zero annihilates.
    for x in &jobjs {
        let fx = c.fiber_at(x);
        let zx = fx.zero.clone();
        for y in &jobjs {
            let fy = c.fiber_at(y);
            let zy = fy.zero.clone();
            let fxy = c.fiber_at(&c.j_add(x, y));
            let zxy = fxy.zero.clone();
            if let (Some(zx), Some(zy), Some(zxy)) = (&zx, &zy, &zxy) {
                for b in sample_objs(&fy, bound, fcap) {
                    rep.check("cond5/left-zero", c.tens(x, zx, y, &b) == *zxy, || {
                        format!("0⊗{b:?} != 0")
                    });
                }
                for a in sample_objs(&fx, bound, fcap) {
                    rep.check("cond5/right-zero", c.tens(x, &a, y, zy) == *zxy, || {
                        format!("{a:?}⊗0 != 0")
                    });
                }
                for g in sample_mors(&fy, bound, fcap) {
                    let l = c.tens_mor(x, &fx.id(zx), y, &g);
                    rep.check("cond5/left-zero-mor", l == fxy.id(zxy), || {
                        format!("id_0⊗{g:?} != id_0")
                    });
                }
            }
        }
    }

    // Condition 6: right distributivity is the identity.
    done = 0;
    'c6: for x in &jobjs {
        let fx = c.fiber_at(x);
        let xo = sample_objs(&fx, bound, fcap);
        let xm = sample_mors(&fx, bound, fcap);
        for y in &jobjs {
            let fy = c.fiber_at(y);
            let yo = sample_objs(&fy, bound, fcap);
            let ym = sample_mors(&fy, bound, fcap);
            let fxy = c.fiber_at(&c.j_add(x, y));
            for a in &xo {
                for ap in &xo {
                    for b in &yo {
                        let l = fxy.add(&c.tens(x, a, y, b), &c.tens(x, ap, y, b));
                        let r = c.tens(x, &fx.add(a, ap), y, b);
                        rep.check("cond6/dr-obj", l == r, || {
                            format!("(a⊗b)⊕(a'⊗b) != (a⊕a')⊗b at {a:?},{ap:?},{b:?}")
                        });
                        done += 1;
                        if done >= bound.tuples {
                            break 'c6;
                        }
                    }
                }
            }
            for f in &xm {
                for fp in &xm {
                    for g in &ym {
                        let l = fxy.add_mor(&c.tens_mor(x, f, y, g), &c.tens_mor(x, fp, y, g));
                        let r = c.tens_mor(x, &fx.add_mor(f, fp), y, g);
                        rep.check("cond6/dr-mor", l == r, || {
                            format!("(f⊗g)⊕(f'⊗g) != (f⊕f')⊗g")
                        });
                    }
                }
            }
        }
    }

    // Condition 7 endpoints (7 itself is about γ⊗, checked separately) and
    // degenerate values shared by both flavors.
    done = 0;
    'c7: for x in &jobjs {
        let fx = c.fiber_at(x);
        let xo = sample_objs(&fx, bound, fcap);
        for y in &jobjs {
            let fy = c.fiber_at(y);
            let yo = sample_objs(&fy, bound, fcap);
            let fxy = c.fiber_at(&c.j_add(x, y));
            for a in &xo {
                for b in &yo {
                    for bp in &yo {
                        let d = c.dl_at(x, a, y, b, bp);
                        let want_dom = fxy.add(&c.tens(x, a, y, b), &c.tens(x, a, y, bp));
                        let want_cod = c.tens(x, a, y, &fy.add(b, bp));
                        rep.check(
                            "cond7/dl-endpoints",
                            d.dom == want_dom && d.cod == want_cod,
                            || format!("d_ℓ endpoints at {a:?};{b:?},{bp:?}: {d:?}"),
                        );
                        if let Some(zy) = &fy.zero {
                            if bp == zy {
                                rep.check("cond7/dl-zero", d == fxy.id(&want_dom), || {
                                    format!("d_ℓ with b'=0 not id: {d:?}")
                                });
                            }
                        }
                        done += 1;
                        if done >= bound.tuples {
                            break 'c7;
                        }
                    }
                }
            }
        }
    }

    // Condition 9: associativity of distributivity.
    done = 0;
    'c9: for x in &jobjs {
        let fx = c.fiber_at(x);
        let xo = sample_objs(&fx, bound, 2);
        for y in &jobjs {
            let fy = c.fiber_at(y);
            let yo = sample_objs(&fy, bound, 2);
            let xy = c.j_add(x, y);
            for z in &jobjs {
                let fz = c.fiber_at(z);
                let zo = sample_objs(&fz, bound, 2);
                let yz = c.j_add(y, z);
                let fxyz = c.fiber_at(&c.j_add(&xy, z));
                for a in &xo {
                    for b in &yo {
                        for e in &zo {
                            for ep in &zo {
                                let bc = c.tens(y, b, z, e);
                                let bcp = c.tens(y, b, z, ep);
                                let lhs = c.dl_at(&xy, &c.tens(x, a, y, b), z, e, ep);
                                let step1 = c.dl_at(x, a, &yz, &bc, &bcp);
                                let step2 = c.tens_mor(
                                    x,
                                    &fx.id(a),
                                    &yz,
                                    &c.dl_at(y, b, z, e, ep),
                                );
                                let rhs = fxyz.comp(&step2, &step1);
                                rep.check("cond9/dl-assoc", lhs == rhs, || {
                                    format!("d_ℓ assoc fails at {a:?},{b:?},{e:?},{ep:?}")
                                });
                                done += 1;
                                if done >= bound.tuples {
                                    break 'c9;
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // Condition 10: the pentagon.
    done = 0;
    'c10: for x in &jobjs {
        let fx = c.fiber_at(x);
        let xo = sample_objs(&fx, bound, 2);
        for y in &jobjs {
            let fy = c.fiber_at(y);
            let yo = sample_objs(&fy, bound, 2);
            let fxy = c.fiber_at(&c.j_add(x, y));
            for a in &xo {
                for ap in &xo {
                    for b in &yo {
                        for bp in &yo {
                            // Upper route: d_ℓ ⊕ d_ℓ, then d_r = id.
                            let upper =
                                fxy.add_mor(&c.dl_at(x, a, y, b, bp), &c.dl_at(x, ap, y, b, bp));
                            // Lower route: middle swap, d_r ⊕ d_r = id, then d_ℓ.
                            let swap = fxy.add_mor(
                                &fxy.add_mor(
                                    &fxy.id(&c.tens(x, a, y, b)),
                                    &fxy.gamma(&c.tens(x, a, y, bp), &c.tens(x, ap, y, b)),
                                ),
                                &fxy.id(&c.tens(x, ap, y, bp)),
                            );
                            let dl_last = c.dl_at(x, &fx.add(a, ap), y, b, bp);
                            let lower = fxy.comp(&dl_last, &swap);
                            rep.check("cond10/pentagon", upper == lower, || {
                                format!("pentagon fails at {a:?},{ap:?};{b:?},{bp:?}")
                            });
                            done += 1;
                            if done >= bound.tuples {
                                break 'c10;
                            }
                        }
                    }
                }
            }
        }
    }

    if !biperm {
        // Condition 7': the d_r/d_ℓ interchange square.
        done = 0;
        'c7p: for x in &jobjs {
            let fx = c.fiber_at(x);
            let xo = sample_objs(&fx, bound, 2);
            for y in &jobjs {
                let fy = c.fiber_at(y);
                let yo = sample_objs(&fy, bound, 2);
                for z in &jobjs {
                    let fz = c.fiber_at(z);
                    let zo = sample_objs(&fz, bound, 2);
                    let yz = c.j_add(y, z);
                    for a in &xo {
                        for b in &yo {
                            for bp in &yo {
                                for e in &zo {
                                    let lhs = c.dl_at(
                                        x,
                                        a,
                                        &yz,
                                        &c.tens(y, b, z, e),
                                        &c.tens(y, bp, z, e),
                                    );
                                    let rhs = c.tens_mor(
                                        &c.j_add(x, y),
                                        &c.dl_at(x, a, y, b, bp),
                                        z,
                                        &fz.id(e),
                                    );
                                    rep.check("cond7p/dr-dl-square", lhs == rhs, || {
                                        format!("d_ℓ/d_r square fails at {a:?};{b:?},{bp:?};{e:?}")
                                    });
                                    done += 1;
                                    if done >= bound.tuples {
                                        break 'c7p;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    rep
}

/// The multiplicative-twist clauses: condition 3 in full, the condition 4
/// hexagon, condition 7 (d_ℓ is the derived composite), and the condition 8
/// interchange identities.
fn check_gamma_conditions(c: &GradedCat, bound: &Bound) -> Report {
    let mut rep = Report::default();
    if c.gamma.is_none() {
        rep.push("cond3/missing", "no multiplicative twist supplied".into());
        return rep;
    }
    let jobjs = cap(&c.j.base.enum_objects(bound), bound.count);
    let jmors = cap(&c.j.base.enum_morphisms(bound), bound.count);
    let fcap = fiber_cap(bound, jobjs.len());
    let zero_j = c.index_zero();

    // Condition 3.
    let mut done = 0usize;
    'c3: for x in &jobjs {
        let fx = c.fiber_at(x);
        let xo = sample_objs(&fx, bound, fcap);
        let xm = sample_mors(&fx, bound, fcap);
        for y in &jobjs {
            let fy = c.fiber_at(y);
            let yo = sample_objs(&fy, bound, fcap);
            let ym = sample_mors(&fy, bound, fcap);
            let fxy = c.fiber_at(&c.j_add(x, y));
            let chi_yx = c.chi(y, x);
            let t_chi = c.trans(&chi_yx);
            for a in &xo {
                for b in &yo {
                    let g = c.gamma_t(x, a, y, b);
                    rep.check(
                        "cond3/gamma-endpoints",
                        g.dom == c.tens(x, a, y, b) && g.cod == t_chi.obj(&c.tens(y, b, x, a)),
                        || format!("γ⊗({a:?},{b:?}) = {g:?}"),
                    );
                    // Involution: C(χ)(γ⊗^{b,a}) ∘ γ⊗^{a,b} = id.
                    let back = t_chi.mor(&c.gamma_t(y, b, x, a));
                    let round = fxy.comp(&back, &g);
                    rep.check("cond3/gamma-involution", round == fxy.id(&g.dom), || {
                        format!("twist involution fails at ({a:?},{b:?}): {round:?}")
                    });
                }
            }
            // Naturality in the fiber variables.
            for f in &xm {
                for g in &ym {
                    let lhs = fxy.comp(
                        &t_chi.mor(&c.tens_mor(y, g, x, f)),
                        &c.gamma_t(x, &f.dom, y, &g.dom),
                    );
                    let rhs = fxy.comp(&c.gamma_t(x, &f.cod, y, &g.cod), &c.tens_mor(x, f, y, g));
                    rep.check("cond3/gamma-natural", lhs == rhs, || {
                        format!("γ⊗ not natural at ({f:?},{g:?})")
                    });
                    done += 1;
                    if done >= bound.tuples {
                        break 'c3;
                    }
                }
            }
        }
    }

    // Condition 3, transition compatibility: C(k+ℓ)(γ⊗^{a,b}) = γ⊗^{C(k)a,C(ℓ)b}.
    done = 0;
    'c3t: for k in &jmors {
        let fk = c.trans(k);
        let xo = sample_objs(&c.fiber_at(&k.dom), bound, fcap);
        for l in &jmors {
            let fl = c.trans(l);
            let yo = sample_objs(&c.fiber_at(&l.dom), bound, fcap);
            let kl = c.j.add_mor(k, l);
            let fkl = c.trans(&kl);
            for a in &xo {
                for b in &yo {
                    let lhs = fkl.mor(&c.gamma_t(&k.dom, a, &l.dom, b));
                    let rhs = c.gamma_t(&k.cod, &fk.obj(a), &l.cod, &fl.obj(b));
                    rep.check("cond3/gamma-transition", lhs == rhs, || {
                        format!("C(k+ℓ)(γ⊗) != γ⊗ transported at ({a:?},{b:?})")
                    });
                    done += 1;
                    if done >= bound.tuples {
                        break 'c3t;
                    }
                }
            }
        }
    }

    // Condition 3, units: γ⊗ with 1 on either side is the identity.
    for x in &jobjs {
        let fx = c.fiber_at(x);
        for a in sample_objs(&fx, bound, fcap) {
            let g1 = c.gamma_t(x, &a, &zero_j, &c.one);
            rep.check("cond3/gamma-unit-right", g1 == fx.id(&a), || {
                format!("γ⊗({a:?},1) = {g1:?}")
            });
            let g2 = c.gamma_t(&zero_j, &c.one, x, &a);
            rep.check("cond3/gamma-unit-left", g2 == fx.id(&a), || {
                format!("γ⊗(1,{a:?}) = {g2:?}")
            });
        }
    }

    // Condition 4 hexagon with the index twist.
    let mut done4 = 0usize;
    'hex: for x in &jobjs {
        let xo = sample_objs(&c.fiber_at(x), bound, 2);
        for y in &jobjs {
            let yo = sample_objs(&c.fiber_at(y), bound, 2);
            let xy = c.j_add(x, y);
            for z in &jobjs {
                let zo = sample_objs(&c.fiber_at(z), bound, 2);
                let fxyz = c.fiber_at(&c.j_add(&xy, z));
                for a in &xo {
                    for b in &yo {
                        for e in &zo {
                            let ab = c.tens(x, a, y, b);
                            // Right route: γ⊗^{a⊗b,c}, then C(χ^{z,x+y})(γ⊗^{c,a}⊗id_b).
                            let leg1 = c.gamma_t(&xy, &ab, z, e);
                            let t_out = c.trans(&c.chi(z, &xy));
                            let ca = c.tens_mor(
                                &c.j_add(z, x),
                                &c.gamma_t(z, e, x, a),
                                y,
                                &c.fiber_at(y).id(b),
                            );
                            let rhs = fxyz.comp(&t_out.mor(&ca), &leg1);
                            // Left route: id_a ⊗ γ⊗^{b,c}.
                            let lhs = c.tens_mor(
                                x,
                                &c.fiber_at(x).id(a),
                                &c.j_add(y, z),
                                &c.gamma_t(y, b, z, e),
                            );
                            rep.check("cond4/hexagon", lhs == rhs, || {
                                format!("hexagon fails at {a:?},{b:?},{e:?}")
                            });
                            done4 += 1;
                            if done4 >= bound.tuples {
                                break 'hex;
                            }
                        }
                    }
                }
            }
        }
    }

    // Condition 7: d_ℓ is exactly the derived composite.
    done = 0;
    'c7: for x in &jobjs {
        let xo = sample_objs(&c.fiber_at(x), bound, fcap);
        for y in &jobjs {
            let yo = sample_objs(&c.fiber_at(y), bound, fcap);
            for a in &xo {
                for b in &yo {
                    for bp in &yo {
                        let stored = c.dl_at(x, a, y, b, bp);
                        let derived = derive_left_dist(c, x, a, y, b, bp);
                        rep.check("cond7/dl-derived", stored == derived, || {
                            format!("d_ℓ differs from derived composite at {a:?};{b:?},{bp:?}")
                        });
                        done += 1;
                        if done >= bound.tuples {
                            break 'c7;
                        }
                    }
                }
            }
        }
    }

    // Condition 8: the two interchange identities.
    done = 0;
    'c8: for x in &jobjs {
        let fx = c.fiber_at(x);
        let xo = sample_objs(&fx, bound, fcap);
        for y in &jobjs {
            let fy = c.fiber_at(y);
            let yo = sample_objs(&fy, bound, fcap);
            let fxy = c.fiber_at(&c.j_add(x, y));
            let t_chi = c.trans(&c.chi(y, x));
            for a in &xo {
                for b in &yo {
                    for bp in &yo {
                        // γ⊕ ∘ (γ⊗⊕γ⊗) = (γ⊗⊕γ⊗) ∘ γ⊕.
                        let gg = fxy.add_mor(&c.gamma_t(x, a, y, b), &c.gamma_t(x, a, y, bp));
                        let lhs = fxy.comp(
                            &t_chi.mor(&c.fiber_at(&c.j_add(y, x)).gamma(
                                &c.tens(y, b, x, a),
                                &c.tens(y, bp, x, a),
                            )),
                            &gg,
                        );
                        let gg2 = fxy.add_mor(&c.gamma_t(x, a, y, bp), &c.gamma_t(x, a, y, b));
                        let rhs = fxy.comp(
                            &gg2,
                            &fxy.gamma(&c.tens(x, a, y, b), &c.tens(x, a, y, bp)),
                        );
                        rep.check("cond8/oplus-otimes-interchange", lhs == rhs, || {
                            format!("γ⊕/γ⊗ interchange fails at {a:?};{b:?},{bp:?}")
                        });
                        // (γ⊕⊗id) ∘ γ⊗ = γ⊗ ∘ (id⊗γ⊕).
                        let bbp = fy.add(b, bp);
                        let lhs2 = fxy.comp(
                            &t_chi.mor(&c.tens_mor(y, &fy.gamma(b, bp), x, &fx.id(a))),
                            &c.gamma_t(x, a, y, &bbp),
                        );
                        let rhs2 = fxy.comp(
                            &c.gamma_t(x, a, y, &fy.add(bp, b)),
                            &c.tens_mor(x, &fx.id(a), y, &fy.gamma(b, bp)),
                        );
                        rep.check("cond8/twist-tensor-interchange", lhs2 == rhs2, || {
                            format!("(γ⊕⊗id)∘γ⊗ != γ⊗∘(id⊗γ⊕) at {a:?};{b:?},{bp:?}")
                        });
                        done += 1;
                        if done >= bound.tuples {
                            break 'c8;
                        }
                    }
                }
            }
        }
    }
    rep
}

/// Convenience: the full ungraded bipermutative law suite.
pub fn check_bipermutative(r: &BipermCat, bound: &Bound) -> Report {
    check_graded_bipermutative(&r.to_graded(), bound)
}

/// Convenience: the ungraded strictly bimonoidal law suite.
pub fn check_strictly_bimonoidal(r: &BipermCat, bound: &Bound) -> Report {
    check_graded_strictly_bimonoidal(&r.to_graded(), bound)
}

type EtaOplus = Rc<dyn Fn(&Term, &Term, &Term) -> Mor>;
type EtaTensor = Rc<dyn Fn(&Term, &Term, &Term, &Term) -> Mor>;

/// A lax morphism of graded bipermutative (or strictly bimonoidal)
/// categories over a shared index category.
#[derive(Clone)]
pub struct LaxRig {
    pub source: GradedCat,
    pub target: GradedCat,
    /// `F_x`: fiber of the source at x → fiber of the target at x.
    pub component: Rc<dyn Fn(&Term) -> Functor>,
    /// η⊕ at grade x: F(a)⊕F(b) → F(a⊕b).
    pub eta_oplus: EtaOplus,
    /// η⊗ at grades (x,y): F(a)⊗F(b) → F(a⊗b).
    pub eta_tensor: EtaTensor,
    /// Per-grade 0 → F(0); absent for zeroless fibers.
    pub unit_zero: Option<Rc<dyn Fn(&Term) -> Mor>>,
    /// 1 → F(1) in the fiber over the index zero.
    pub unit_one: Mor,
}

impl LaxRig {
    pub fn identity(c: &GradedCat) -> LaxRig {
        let c1 = c.clone();
        let c2 = c.clone();
        let c3 = c.clone();
        let has_zero = c.fiber_at(&c.index_zero()).zero.is_some();
        LaxRig {
            source: c.clone(),
            target: c.clone(),
            component: Rc::new(|_| Functor::identity()),
            eta_oplus: Rc::new(move |x, a, b| {
                let f = c1.fiber_at(x);
                f.id(&f.add(a, b))
            }),
            eta_tensor: Rc::new(move |x, a, y, b| {
                let f = c2.fiber_at(&c2.j_add(x, y));
                f.id(&c2.tens(x, a, y, b))
            }),
            unit_zero: if has_zero {
                let c4 = c.clone();
                Some(Rc::new(move |x| {
                    let f = c4.fiber_at(x);
                    f.id(f.zero.as_ref().unwrap())
                }))
            } else {
                None
            },
            unit_one: c3.fiber_at(&c3.index_zero()).id(&c3.one),
        }
    }
}

/// Verifies the lax-morphism laws: per-grade symmetric monoidality of
/// (F, η⊕), naturality in the index, binaturality and twist compatibility of
/// η⊗, and the two distributivity-compatibility equations.
pub fn check_lax_rig_morphism(m: &LaxRig, bound: &Bound) -> Report {
    let mut rep = Report::default();
    let jobjs = cap(&m.source.j.base.enum_objects(bound), bound.count);
    let jmors = cap(&m.source.j.base.enum_morphisms(bound), bound.count);
    let fcap = fiber_cap(bound, jobjs.len());

    // Additive layer: each component with η⊕ is a symmetric monoidal functor.
    for x in &jobjs {
        let fx = (m.component)(x);
        let e = m.eta_oplus.clone();
        let x2 = x.clone();
        let sf = SymMonFunctor {
            source: m.source.fiber_at(x),
            target: m.target.fiber_at(x),
            f: fx,
            eta: Rc::new(move |a, b| e(&x2, a, b)),
            unit_mor: m.unit_zero.as_ref().map(|u| u(x)),
            strict: false,
        };
        let mut r = check_symmon_functor(&sf, &bound.with_count(fcap));
        r.violations.iter_mut().for_each(|v| v.law = format!("additive/{}", v.law));
        rep.absorb(r);
    }

    // Naturality with respect to the index: F and η⊕ commute with
    // transitions.
    let mut done = 0usize;
    'natx: for k in &jmors {
        let fx = (m.component)(&k.dom);
        let fy = (m.component)(&k.cod);
        let sk = m.source.trans(k);
        let tk = m.target.trans(k);
        let src = m.source.fiber_at(&k.dom);
        for a in sample_objs(&src, bound, fcap) {
            rep.check(
                "index-natural-obj",
                fy.obj(&sk.obj(&a)) == tk.obj(&fx.obj(&a)),
                || format!("F(C(k){a:?}) != D(k)F({a:?})"),
            );
            for b in sample_objs(&src, bound, 2) {
                let lhs = tk.mor(&(m.eta_oplus)(&k.dom, &a, &b));
                let rhs = (m.eta_oplus)(&k.cod, &sk.obj(&a), &sk.obj(&b));
                rep.check("index-natural-eta-oplus", lhs == rhs, || {
                    format!("D(k)η⊕ != η⊕ transported at ({a:?},{b:?})")
                });
                done += 1;
                if done >= bound.tuples {
                    break 'natx;
                }
            }
        }
        for f in sample_mors(&src, bound, 3) {
            rep.check(
                "index-natural-mor",
                fy.mor(&sk.mor(&f)) == tk.mor(&fx.mor(&f)),
                || format!("F(C(k)f) != D(k)F(f) at {f:?}"),
            );
        }
    }

    // Multiplicative layer: η⊗ endpoints, binaturality, twist square.
    done = 0;
    'mult: for x in &jobjs {
        let fx = (m.component)(x);
        let sfx = m.source.fiber_at(x);
        let xo = sample_objs(&sfx, bound, fcap);
        let xm = sample_mors(&sfx, bound, 3);
        for y in &jobjs {
            let fy = (m.component)(y);
            let sfy = m.source.fiber_at(y);
            let yo = sample_objs(&sfy, bound, fcap);
            let ym = sample_mors(&sfy, bound, 3);
            let xy = m.source.j_add(x, y);
            let fxy = (m.component)(&xy);
            let tgt = m.target.fiber_at(&xy);
            for a in &xo {
                for b in &yo {
                    let e = (m.eta_tensor)(x, a, y, b);
                    rep.check(
                        "eta-tensor-endpoints",
                        e.dom == m.target.tens(x, &fx.obj(a), y, &fy.obj(b))
                            && e.cod == fxy.obj(&m.source.tens(x, a, y, b)),
                        || format!("η⊗ endpoints at ({a:?},{b:?}): {e:?}"),
                    );
                    if let (Some(_), Some(_)) = (&m.source.gamma, &m.target.gamma) {
                        let lhs = tgt.comp(&fxy.mor(&m.source.gamma_t(x, a, y, b)), &e);
                        let t_chi = m.target.trans(&m.target.chi(y, x));
                        let rhs = tgt.comp(
                            &t_chi.mor(&(m.eta_tensor)(y, b, x, a)),
                            &m.target.gamma_t(x, &fx.obj(a), y, &fy.obj(b)),
                        );
                        rep.check("eta-tensor-twist", lhs == rhs, || {
                            format!("η⊗/γ⊗ square fails at ({a:?},{b:?})")
                        });
                    }
                }
            }
            for f in &xm {
                for g in &ym {
                    let lhs = tgt.comp(
                        &(m.eta_tensor)(x, &f.cod, y, &g.cod),
                        &m.target.tens_mor(x, &fx.mor(f), y, &fy.mor(g)),
                    );
                    let rhs = tgt.comp(
                        &fxy.mor(&m.source.tens_mor(x, f, y, g)),
                        &(m.eta_tensor)(x, &f.dom, y, &g.dom),
                    );
                    rep.check("eta-tensor-binatural", lhs == rhs, || {
                        format!("η⊗ not binatural at ({f:?},{g:?})")
                    });
                    done += 1;
                    if done >= bound.tuples {
                        break 'mult;
                    }
                }
            }
        }
    }

    // Distributivity compatibility.
    done = 0;
    'dist: for x in &jobjs {
        let fx = (m.component)(x);
        let sfx = m.source.fiber_at(x);
        let xo = sample_objs(&sfx, bound, fcap);
        for y in &jobjs {
            let fy = (m.component)(y);
            let sfy = m.source.fiber_at(y);
            let yo = sample_objs(&sfy, bound, fcap);
            let xy = m.source.j_add(x, y);
            let tgt = m.target.fiber_at(&xy);
            for a in &xo {
                for ap in &xo {
                    for b in &yo {
                        // η⊕ ∘ (η⊗ ⊕ η⊗) = η⊗ ∘ (η⊕ ⊗ id).
                        let lhs = tgt.comp(
                            &(m.eta_oplus)(
                                &xy,
                                &m.source.tens(x, a, y, b),
                                &m.source.tens(x, ap, y, b),
                            ),
                            &tgt.add_mor(&(m.eta_tensor)(x, a, y, b), &(m.eta_tensor)(x, ap, y, b)),
                        );
                        let rhs = tgt.comp(
                            &(m.eta_tensor)(x, &sfx.add(a, ap), y, b),
                            &m.target.tens_mor(
                                x,
                                &(m.eta_oplus)(x, a, ap),
                                y,
                                &m.target.fiber_at(y).id(&fy.obj(b)),
                            ),
                        );
                        rep.check("dist-dr-compat", lhs == rhs, || {
                            format!("η⊕∘(η⊗⊕η⊗) != η⊗∘(η⊕⊗id) at {a:?},{ap:?};{b:?}")
                        });
                        done += 1;
                        if done >= bound.tuples {
                            break 'dist;
                        }
                    }
                }
            }
            // d_ℓ compatibility: F(d_ℓ)∘η⊕∘(η⊗⊕η⊗) = η⊗∘(id⊗η⊕)∘d_ℓ.
            let fxy = (m.component)(&xy);
            for a in &xo {
                for b in &yo {
                    for bp in &yo {
                        let lhs = tgt.comp(
                            &fxy.mor(&m.source.dl_at(x, a, y, b, bp)),
                            &tgt.comp(
                                &(m.eta_oplus)(
                                    &xy,
                                    &m.source.tens(x, a, y, b),
                                    &m.source.tens(x, a, y, bp),
                                ),
                                &tgt.add_mor(
                                    &(m.eta_tensor)(x, a, y, b),
                                    &(m.eta_tensor)(x, a, y, bp),
                                ),
                            ),
                        );
                        let rhs = tgt.comp(
                            &(m.eta_tensor)(x, a, y, &sfy.add(b, bp)),
                            &tgt.comp(
                                &m.target.tens_mor(
                                    x,
                                    &m.target.fiber_at(x).id(&fx.obj(a)),
                                    y,
                                    &(m.eta_oplus)(y, b, bp),
                                ),
                                &m.target.dl_at(x, &fx.obj(a), y, &fy.obj(b), &fy.obj(bp)),
                            ),
                        );
                        rep.check("dist-dl-compat", lhs == rhs, || {
                            format!("d_ℓ compatibility fails at {a:?};{b:?},{bp:?}")
                        });
                    }
                }
            }
        }
    }

    // Units.
    let one_src = m.source.one.clone();
    let zero_j = m.source.index_zero();
    let f0 = (m.component)(&zero_j);
    let t0 = m.target.fiber_at(&zero_j);
    rep.check(
        "unit-one-endpoints",
        m.unit_one.dom == m.target.one && m.unit_one.cod == f0.obj(&one_src),
        || format!("1-unit morphism {:?}", m.unit_one),
    );
    let _ = t0;
    rep
}
