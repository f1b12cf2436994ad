//! The isolated-zero layer: freely adjoining a disjoint zero object to a
//! zeroless permutative category, the truncated simplicial resolution built
//! by iterating that adjunction, its augmentation back to the original
//! category, and the zero-inclusive homotopy colimit together with the
//! derived (level-wise resolved) homotopy colimit of a graded diagram.
//!
//! Adjoined zeros at different iteration depths are distinguishable object
//! terms, so the face and degeneracy maps are well-defined functions of
//! terms: the face at position i collapses one adjoined zero onto the
//! next-inner one (or onto the original zero), the degeneracy inserts one.

use crate::biperm::{BipermCat, GradedCat, LaxRig};
use crate::effcat::{Bound, Cat, CatError, Functor};
use crate::permcat::{PermCat, SymMonFunctor};
use crate::term::{Mor, Term};
use crate::thomason::{h_obj, h_parts, h_seq, Hocolim, Surj};
use std::rc::Rc;

/// The adjoined zero object at iteration depth `d`.
pub fn adjoined_zero(depth: usize) -> Term {
    Term::tag("zz", vec![Term::int(depth as i64)])
}

pub fn is_adjoined_zero(t: &Term) -> bool {
    t.is_tag("zz")
}

fn zero_depth(t: &Term) -> usize {
    t.args("zz")[0].as_int() as usize
}

/// Forgets the zero designation without changing objects or structure.
pub fn strip_zero(c: &PermCat) -> PermCat {
    let mut out = c.clone();
    out.zero = None;
    out
}

/// Deletes the designated zero object from the enumerators, yielding the
/// full subcategory on the remaining objects (zeroless).
pub fn remove_zero(c: &PermCat) -> PermCat {
    let z = c.zero.clone().expect("remove_zero needs a designated zero");
    let objs = c.base.objects.clone();
    let homs = c.base.homs.clone();
    let (z1, z2) = (z.clone(), z.clone());
    let mut base = c.base.clone();
    base.objects = Rc::new(move |b: &Bound| {
        (objs)(b).into_iter().filter(|o| *o != z1).collect()
    });
    base.homs = Rc::new(move |a: &Term, b: &Term, bd: &Bound| {
        if *a == z2 || *b == z2 {
            Vec::new()
        } else {
            (homs)(a, b, bd)
        }
    });
    PermCat {
        base,
        zero: None,
        oplus: c.oplus.clone(),
        oplus_mor: c.oplus_mor.clone(),
        twist: c.twist.clone(),
    }
}

/// Freely adjoins the given fresh object as a disjoint, strictly unital
/// zero: it carries only its identity morphism, is a strict unit for ⊕, and
/// its twist with anything is an identity.
fn adjoin_zero(c: &PermCat, z: Term) -> PermCat {
    let (z1, z2, z3, z4, z5, z6, z7) = (
        z.clone(),
        z.clone(),
        z.clone(),
        z.clone(),
        z.clone(),
        z.clone(),
        z.clone(),
    );
    let inner = c.clone();
    let (c1, c2, c3, c4, c5) = (
        c.base.clone(),
        c.base.clone(),
        c.base.clone(),
        c.oplus.clone(),
        c.oplus_mor.clone(),
    );
    let twist = c.twist.clone();
    let base = Cat {
        name: format!("{}+0", c.base.name),
        identity: Rc::new(move |a| {
            if *a == z1 {
                Mor::new(z1.clone(), z1.clone(), Term::s("id"))
            } else {
                (c1.identity)(a)
            }
        }),
        compose: Rc::new(move |g, f| {
            if f.dom == z2 {
                if g.dom != z2 {
                    return Err(CatError::Mismatch {
                        f: Box::new(f.clone()),
                        g: Box::new(g.clone()),
                    });
                }
                Ok(g.clone())
            } else if g.cod == z2 {
                Ok(f.clone())
            } else {
                (c2.compose)(g, f)
            }
        }),
        objects: Rc::new(move |b: &Bound| {
            let mut v = (c3.objects)(b);
            v.push(z3.clone());
            v
        }),
        homs: {
            let h = c.base.homs.clone();
            Rc::new(move |a: &Term, b: &Term, bd: &Bound| {
                if *a == z4 && *b == z4 {
                    vec![Mor::new(z4.clone(), z4.clone(), Term::s("id"))]
                } else if *a == z4 || *b == z4 {
                    Vec::new()
                } else {
                    (h)(a, b, bd)
                }
            })
        },
    };
    PermCat {
        base,
        zero: Some(z),
        oplus: Rc::new(move |a, b| {
            if *a == z5 {
                b.clone()
            } else if *b == z5 {
                a.clone()
            } else {
                (c4)(a, b)
            }
        }),
        oplus_mor: Rc::new(move |f, g| {
            if f.dom == z6 {
                g.clone()
            } else if g.dom == z6 {
                f.clone()
            } else {
                (c5)(f, g)
            }
        }),
        twist: Rc::new(move |a, b| {
            if *a == z7 {
                inner_or_zero_id(&inner, &z7, b)
            } else if *b == z7 {
                inner_or_zero_id(&inner, &z7, a)
            } else {
                (twist)(a, b)
            }
        }),
    }
}

fn inner_or_zero_id(inner: &PermCat, z: &Term, other: &Term) -> Mor {
    if other == z {
        Mor::new(z.clone(), z.clone(), Term::s("id"))
    } else {
        inner.id(other)
    }
}

/// Adjoins a disjoint zero object to a zeroless permutative category.
pub fn add_isolated_zero(c: &PermCat) -> PermCat {
    assert!(c.zero.is_none(), "input already has a designated zero");
    adjoin_zero(c, adjoined_zero(0))
}

/// One level of the truncated simplicial resolution: the zero-adjunction
/// comonad applied q+1 times, so the category gains q+1 distinguishable
/// adjoined zeros with the outermost one designated.
pub struct ZLevel {
    pub q: usize,
    pub cat: PermCat,
}

pub fn z_level(m: &PermCat, q: usize) -> ZLevel {
    assert!(m.zero.is_some(), "resolution needs a category with zero");
    let mut cur = m.clone();
    for j in 0..=q {
        cur = adjoin_zero(&strip_zero(&cur), adjoined_zero(j));
    }
    ZLevel { q, cat: cur }
}

/// Where face i at level q sends the adjoined zero of depth j: either
/// another adjoined zero or (`None`) the original category's zero.
fn face_tag(q: usize, i: usize, j: usize) -> Option<usize> {
    let k = q - i;
    if j < k {
        Some(j)
    } else if j == k {
        if k == 0 { None } else { Some(k - 1) }
    } else {
        Some(j - 1)
    }
}

fn degeneracy_tag(q: usize, i: usize, j: usize) -> usize {
    let k = q - i;
    if j < k { j } else { j + 1 }
}

/// The i-th face functor between resolution levels q and q−1: the counit of
/// the adjunction applied at layer q−i, collapsing one adjoined zero.
pub fn face(m: &PermCat, q: usize, i: usize) -> Functor {
    assert!(q >= 1 && i <= q, "face index out of range");
    let mz = m.zero.clone().expect("resolution needs a zero");
    let m2 = m.clone();
    let obj = {
        let mz = mz.clone();
        Rc::new(move |a: &Term| {
            if is_adjoined_zero(a) {
                match face_tag(q, i, zero_depth(a)) {
                    Some(t) => adjoined_zero(t),
                    None => mz.clone(),
                }
            } else {
                a.clone()
            }
        })
    };
    let obj2 = obj.clone();
    Functor {
        name: format!("d{i}"),
        on_obj: obj,
        on_mor: Rc::new(move |f: &Mor| {
            if is_adjoined_zero(&f.dom) {
                let o = (obj2)(&f.dom);
                if is_adjoined_zero(&o) {
                    Mor::new(o.clone(), o.clone(), Term::s("id"))
                } else {
                    m2.id(&o)
                }
            } else {
                f.clone()
            }
        }),
    }
}

/// The i-th degeneracy functor between resolution levels q and q+1: the
/// comultiplication applied at layer q−i, inserting one adjoined zero.
pub fn degeneracy(_m: &PermCat, q: usize, i: usize) -> Functor {
    assert!(i <= q, "degeneracy index out of range");
    let obj = Rc::new(move |a: &Term| {
        if is_adjoined_zero(a) {
            adjoined_zero(degeneracy_tag(q, i, zero_depth(a)))
        } else {
            a.clone()
        }
    });
    let obj2 = obj.clone();
    Functor {
        name: format!("s{i}"),
        on_obj: obj,
        on_mor: Rc::new(move |f: &Mor| {
            if is_adjoined_zero(&f.dom) {
                let o = (obj2)(&f.dom);
                Mor::new(o.clone(), o.clone(), Term::s("id"))
            } else {
                f.clone()
            }
        }),
    }
}

fn augmentation_functor(m: &PermCat) -> Functor {
    let mz = m.zero.clone().expect("augmentation needs a zero");
    let m2 = m.clone();
    let mz2 = mz.clone();
    Functor {
        name: "aug".into(),
        on_obj: Rc::new(move |a| {
            if is_adjoined_zero(a) { mz.clone() } else { a.clone() }
        }),
        on_mor: Rc::new(move |f| {
            if is_adjoined_zero(&f.dom) { m2.id(&mz2) } else { f.clone() }
        }),
    }
}

/// The augmentation of the resolution: identity on original objects, every
/// adjoined zero to the designated zero. Strict symmetric monoidal.
pub fn augmentation(m: &PermCat, q: usize) -> SymMonFunctor {
    SymMonFunctor::strict_from(augmentation_functor(m), z_level(m, q).cat, m.clone())
}

/// The section of the augmentation induced by the adjunction unit: the
/// inclusion of the original category into any resolution level.
pub fn augmentation_section(_m: &PermCat, _q: usize) -> Functor {
    let mut f = Functor::identity();
    f.name = "sec".into();
    f
}

// ---------------------------------------------------------------------------
// Graded diagrams whose fibers carry adjoined zeros.
// ---------------------------------------------------------------------------

/// Applies a fiber transformation that adjoins depth-tagged zeros, and
/// extends the transitions, tensor, twist, and distributivity so that the
/// adjoined zeros are absorbing for ⊗ (deeper tag wins) and inert otherwise.
fn extend_graded(d: &GradedCat, fmap: Rc<dyn Fn(&PermCat) -> PermCat>) -> GradedCat {
    let fiber = {
        let f = d.fiber.clone();
        Rc::new(move |x: &Term| (fmap)(&(f)(x)))
    };
    let transition = {
        let t = d.transition.clone();
        Rc::new(move |k: &Mor| {
            let inner = (t)(k);
            let inner2 = inner.clone();
            Functor {
                name: inner.name.clone(),
                on_obj: Rc::new(move |a| {
                    if is_adjoined_zero(a) { a.clone() } else { inner.obj(a) }
                }),
                on_mor: Rc::new(move |f| {
                    if is_adjoined_zero(&f.dom) { f.clone() } else { inner2.mor(f) }
                }),
            }
        })
    };
    let tensor = {
        let t = d.tensor.clone();
        Rc::new(move |x: &Term, a: &Term, y: &Term, b: &Term| {
            match (is_adjoined_zero(a), is_adjoined_zero(b)) {
                (true, true) => adjoined_zero(zero_depth(a).max(zero_depth(b))),
                (true, false) => a.clone(),
                (false, true) => b.clone(),
                (false, false) => (t)(x, a, y, b),
            }
        })
    };
    let tensor_mor = {
        let tm = d.tensor_mor.clone();
        let tn = tensor.clone();
        Rc::new(move |x: &Term, f: &Mor, y: &Term, g: &Mor| {
            if is_adjoined_zero(&f.dom) || is_adjoined_zero(&g.dom) {
                let o = (tn)(x, &f.dom, y, &g.dom);
                Mor::new(o.clone(), o.clone(), Term::s("id"))
            } else {
                (tm)(x, f, y, g)
            }
        })
    };
    let gamma = d.gamma.clone().map(|g| {
        let tn = tensor.clone();
        let out: Rc<dyn Fn(&Term, &Term, &Term, &Term) -> Mor> =
            Rc::new(move |x: &Term, a: &Term, y: &Term, b: &Term| {
                if is_adjoined_zero(a) || is_adjoined_zero(b) {
                    let o = (tn)(x, a, y, b);
                    Mor::new(o.clone(), o.clone(), Term::s("id"))
                } else {
                    (g)(x, a, y, b)
                }
            });
        out
    });
    let dl = {
        let inner = d.dl.clone();
        let tn = tensor.clone();
        let fb = fiber.clone();
        let j = d.j.clone();
        Rc::new(move |x: &Term, a: &Term, y: &Term, b: &Term, bp: &Term| {
            if is_adjoined_zero(a) || is_adjoined_zero(b) || is_adjoined_zero(bp) {
                let fxy = (fb)(&j.add(x, y));
                let dom = fxy.add(&(tn)(x, a, y, b), &(tn)(x, a, y, bp));
                fxy.id(&dom)
            } else {
                (inner)(x, a, y, b, bp)
            }
        })
    };
    GradedCat {
        j: d.j.clone(),
        fiber,
        transition,
        one: d.one.clone(),
        tensor,
        tensor_mor,
        gamma,
        dl,
    }
}

/// Forgets every fiber's zero designation.
pub fn strip_graded(d: &GradedCat) -> GradedCat {
    let mut out = d.clone();
    let f = d.fiber.clone();
    out.fiber = Rc::new(move |x: &Term| strip_zero(&(f)(x)));
    out
}

/// Adjoins a disjoint zero to every (zeroless) fiber.
pub fn plus_graded(d: &GradedCat) -> GradedCat {
    extend_graded(d, Rc::new(|f: &PermCat| add_isolated_zero(f)))
}

/// Applies the level-q resolution to every (zeroed) fiber.
pub fn z_graded(d: &GradedCat, q: usize) -> GradedCat {
    extend_graded(d, Rc::new(move |f: &PermCat| z_level(f, q).cat))
}

fn remove_graded(d: &GradedCat) -> GradedCat {
    let mut out = d.clone();
    let f = d.fiber.clone();
    out.fiber = Rc::new(move |x: &Term| remove_zero(&(f)(x)));
    out
}

/// The zero-inclusive homotopy colimit of a diagram of categories with
/// disjoint zeros: the zeroless colimit over the nonzero fiber objects, with
/// one global zero adjoined. Formal sums therefore never contain a
/// designated fiber zero, and the construction satisfies, on the nose,
///   hocolim_iz(fiberwise plus of C) = plus of (hocolim of C)
/// for every zeroless-fibered diagram C.
pub struct IzHocolim {
    pub h: Hocolim,
    pub cat: PermCat,
    pub zero: Term,
}

pub fn hocolim_iz(d: &GradedCat) -> IzHocolim {
    let h = Hocolim::new(remove_graded(d));
    let cat = add_isolated_zero(&h.as_permcat());
    let zero = cat.zero.clone().unwrap();
    IzHocolim { h, cat, zero }
}

/// Transports a fiber-level simplicial map to the zero-inclusive colimits:
/// every formal-sum entry is mapped by its grade's fiber functor; entries
/// flagged by `dropped` vanish from the sum (they map to the target's
/// designated fiber zero, a strict ⊕-unit), and a fully vanished sum lands
/// on the global zero.
fn induced_iz_functor(
    _src: &IzHocolim,
    tgt: &IzHocolim,
    fibmap: Rc<dyn Fn(&Term) -> Functor>,
    dropped: Rc<dyn Fn(&Term, &Term) -> bool>,
    name: &str,
) -> Functor {
    let z = tgt.zero.clone();
    let obj = {
        let (fm, dr, z) = (fibmap.clone(), dropped.clone(), z.clone());
        Rc::new(move |a: &Term| {
            if !a.is_tag("h") {
                return z.clone();
            }
            let mut kept = Vec::new();
            for (x, o) in h_seq(a) {
                let m = (fm)(&x).obj(&o);
                if !(dr)(&x, &m) {
                    kept.push((x, m));
                }
            }
            if kept.is_empty() { z.clone() } else { h_obj(&kept) }
        })
    };
    let obj2 = obj.clone();
    let tgt_h = tgt.h.clone();
    Functor {
        name: name.to_string(),
        on_obj: obj,
        on_mor: Rc::new(move |f: &Mor| {
            if !f.dom.is_tag("h") {
                return Mor::new(z.clone(), z.clone(), Term::s("id"));
            }
            let (psi, ell, rho) = h_parts(f);
            let ds = h_seq(&f.dom);
            let cs = h_seq(&f.cod);
            let keep = |seq: &[(Term, Term)]| -> Vec<usize> {
                seq.iter()
                    .enumerate()
                    .filter(|(_, (x, o))| !(dropped)(x, &(fibmap)(x).obj(o)))
                    .map(|(i, _)| i + 1)
                    .collect()
            };
            let dom_keep = keep(&ds);
            let cod_keep = keep(&cs);
            if cod_keep.is_empty() {
                debug_assert!(dom_keep.is_empty(), "kept summand mapping into a vanished block");
                return Mor::new(z.clone(), z.clone(), Term::s("id"));
            }
            let new_dom = (obj2)(&f.dom);
            let new_cod = (obj2)(&f.cod);
            let rank = |v: &[usize], i: usize| v.iter().position(|&k| k == i).unwrap() + 1;
            let images: Vec<usize> =
                dom_keep.iter().map(|&i| rank(&cod_keep, psi.apply(i))).collect();
            let new_psi = Surj::new(cod_keep.len(), images);
            let new_ell: Vec<Mor> = dom_keep.iter().map(|&i| ell[i - 1].clone()).collect();
            let new_rho: Vec<Mor> = cod_keep
                .iter()
                .map(|&r| (fibmap)(&cs[r - 1].0).mor(&rho[r - 1]))
                .collect();
            tgt_h.mor(&new_dom, &new_cod, &new_psi, &new_ell, &new_rho)
        }),
    }
}

/// The derived homotopy colimit of a graded diagram: level q is the
/// zero-inclusive colimit of the level-q fiberwise resolution, a simplicial
/// object truncated at `q_max`.
pub struct DerivedHocolim {
    pub q_max: usize,
    pub diagram: GradedCat,
    pub levels: Vec<IzHocolim>,
    pub augmented: IzHocolim,
}

pub fn dhocolim(d: &GradedCat, q_max: usize) -> DerivedHocolim {
    let levels = (0..=q_max).map(|q| hocolim_iz(&z_graded(d, q))).collect();
    DerivedHocolim {
        q_max,
        diagram: d.clone(),
        levels,
        augmented: hocolim_iz(d),
    }
}

impl DerivedHocolim {
    pub fn level_cat(&self, q: usize) -> PermCat {
        self.levels[q].cat.clone()
    }

    /// The i-th face between colimit levels q and q−1.
    pub fn face(&self, q: usize, i: usize) -> Functor {
        assert!(q >= 1 && q <= self.q_max && i <= q);
        let fib = self.diagram.fiber.clone();
        let fibmap: Rc<dyn Fn(&Term) -> Functor> =
            Rc::new(move |x: &Term| face(&(fib)(x), q, i));
        let marker = adjoined_zero(q - 1);
        let dropped: Rc<dyn Fn(&Term, &Term) -> bool> =
            Rc::new(move |_x: &Term, t: &Term| *t == marker);
        induced_iz_functor(
            &self.levels[q],
            &self.levels[q - 1],
            fibmap,
            dropped,
            &format!("d{i}"),
        )
    }

    /// The i-th degeneracy between colimit levels q and q+1.
    pub fn degeneracy(&self, q: usize, i: usize) -> Functor {
        assert!(q + 1 <= self.q_max && i <= q);
        let fib = self.diagram.fiber.clone();
        let fibmap: Rc<dyn Fn(&Term) -> Functor> =
            Rc::new(move |x: &Term| degeneracy(&(fib)(x), q, i));
        induced_iz_functor(
            &self.levels[q],
            &self.levels[q + 1],
            fibmap,
            Rc::new(|_, _| false),
            &format!("s{i}"),
        )
    }

    /// The augmentation from level q to the zero-inclusive colimit of the
    /// original diagram: adjoined zeros become designated fiber zeros, which
    /// vanish from the formal sums.
    pub fn epsilon(&self, q: usize) -> Functor {
        let fib = self.diagram.fiber.clone();
        let fib2 = self.diagram.fiber.clone();
        let fibmap: Rc<dyn Fn(&Term) -> Functor> =
            Rc::new(move |x: &Term| augmentation_functor(&(fib)(x)));
        let dropped: Rc<dyn Fn(&Term, &Term) -> bool> = Rc::new(move |x: &Term, t: &Term| {
            Some(t) == (fib2)(x).zero.as_ref()
        });
        induced_iz_functor(&self.levels[q], &self.augmented, fibmap, dropped, "aug")
    }

    /// Level q as a bipermutative category with its global zero: the
    /// colimit's multiplicative structure extended by zero annihilation.
    pub fn level_biperm(&self, q: usize) -> BipermCat {
        let inner = self.levels[q].h.as_bipermcat();
        let add = self.level_cat(q);
        let z = self.levels[q].zero.clone();
        let (z1, z2, z3, z4) = (z.clone(), z.clone(), z.clone(), z.clone());
        let tensor: Rc<dyn Fn(&Term, &Term) -> Term> = {
            let t = inner.tensor.clone();
            Rc::new(move |a, b| {
                if *a == z1 || *b == z1 { z1.clone() } else { (t)(a, b) }
            })
        };
        let tensor_mor = {
            let tm = inner.tensor_mor.clone();
            Rc::new(move |f: &Mor, g: &Mor| {
                if f.dom == z2 || g.dom == z2 {
                    Mor::new(z2.clone(), z2.clone(), Term::s("id"))
                } else {
                    (tm)(f, g)
                }
            })
        };
        let gamma_tensor = inner.gamma_tensor.clone().map(|g| {
            let out: Rc<dyn Fn(&Term, &Term) -> Mor> = Rc::new(move |a: &Term, b: &Term| {
                if *a == z3 || *b == z3 {
                    Mor::new(z3.clone(), z3.clone(), Term::s("id"))
                } else {
                    (g)(a, b)
                }
            });
            out
        });
        let dl = inner.dl.clone().map(|d| {
            let add2 = add.clone();
            let tn = tensor.clone();
            let out: Rc<dyn Fn(&Term, &Term, &Term) -> Mor> =
                Rc::new(move |a: &Term, b: &Term, bp: &Term| {
                    if *a == z4 || *b == z4 || *bp == z4 {
                        let dom = add2.add(&(tn)(a, b), &(tn)(a, bp));
                        add2.id(&dom)
                    } else {
                        (d)(a, b, bp)
                    }
                });
            out
        });
        BipermCat {
            add,
            one: inner.one.clone(),
            tensor,
            tensor_mor,
            gamma_tensor,
            dl,
        }
    }

    /// Packages a level-to-level functor as a (strict) lax morphism of the
    /// level bipermutative structures, for the rig-morphism checker.
    pub fn structure_lax(&self, f: &Functor, src_q: usize, tgt_q: usize) -> LaxRig {
        let source = self.level_biperm(src_q).to_graded();
        let target = self.level_biperm(tgt_q).to_graded();
        let f2 = f.clone();
        let (t1, t2, t3, t4) = (
            target.clone(),
            target.clone(),
            target.clone(),
            target.clone(),
        );
        let (g1, g2) = (f.clone(), f.clone());
        let unit_one = {
            let fz = target.index_zero();
            let fib = target.fiber_at(&fz);
            fib.id(&f.obj(&source.one))
        };
        LaxRig {
            source,
            target,
            component: Rc::new(move |_| f2.clone()),
            eta_oplus: Rc::new(move |x, a, b| {
                let fib = t1.fiber_at(x);
                fib.id(&fib.add(&g1.obj(a), &g1.obj(b)))
            }),
            eta_tensor: Rc::new(move |x, a, y, b| {
                let fib = t2.fiber_at(&t3.j_add(x, y));
                fib.id(&t4.tens(x, &g2.obj(a), y, &g2.obj(b)))
            }),
            unit_zero: Some({
                let t = self.level_biperm(tgt_q);
                let z = t.add.zero.clone().unwrap();
                let idz = t.add.id(&z);
                Rc::new(move |_| idz.clone())
            }),
            unit_one,
        }
    }

    /// The inclusion of the resolved fiber over the index zero into level q:
    /// nonzero objects as singleton sums, the designated zero to the global
    /// zero. One leg of the zigzag connecting the input to its completion.
    pub fn corner_embedding(&self, q: usize) -> Functor {
        let x0 = self.diagram.index_zero();
        let fz = z_level(&self.diagram.fiber_at(&x0), q).cat;
        let desig = fz.zero.clone().unwrap();
        let z = self.levels[q].zero.clone();
        let h = self.levels[q].h.clone();
        let x1 = x0.clone();
        let (d2, z2, h2, x2) = (desig.clone(), z.clone(), h.clone(), x0.clone());
        Functor {
            name: "corner".into(),
            on_obj: Rc::new(move |a| {
                if *a == desig {
                    z.clone()
                } else {
                    h_obj(&[(x1.clone(), a.clone())])
                }
            }),
            on_mor: Rc::new(move |f| {
                if f.dom == d2 {
                    Mor::new(z2.clone(), z2.clone(), Term::s("id"))
                } else {
                    let dom = h_obj(&[(x2.clone(), f.dom.clone())]);
                    let cod = h_obj(&[(x2.clone(), f.cod.clone())]);
                    h.mor(
                        &dom,
                        &cod,
                        &Surj::identity(1),
                        &[h2.diagram.j.id(&x2)],
                        std::slice::from_ref(f),
                    )
                }
            }),
        }
    }

    /// The other leg of the zigzag: the augmentation of the fiber over the
    /// index zero, back to the original fiber.
    pub fn corner_augmentation(&self, q: usize) -> SymMonFunctor {
        augmentation(&self.diagram.fiber_at(&self.diagram.index_zero()), q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biperm::check_bipermutative;
    use crate::cube::build_gr;
    use crate::examples::{discrete_rig, finite_sets_e, FiniteRigTable};
    use crate::permcat::{check_permutative, check_symmon_functor, zero_cat};

    fn small() -> Bound {
        Bound::default().with_size(2).with_count(24).with_tuples(400)
    }

    #[test]
    fn adjoining_a_zero_gives_a_permutative_category_with_strict_zero() {
        let m = finite_sets_e().add;
        let stripped = strip_zero(&m);
        let plus = add_isolated_zero(&stripped);
        let b = small();
        assert_eq!(
            plus.base.enum_objects(&b).len(),
            stripped.base.enum_objects(&b).len() + 1
        );
        let rep = check_permutative(&plus, &b);
        assert!(rep.ok(), "{}", rep.summary());
    }

    #[test]
    fn level_zero_of_the_terminal_category_has_two_objects() {
        let z = z_level(&zero_cat(), 0);
        assert_eq!(z.cat.base.enum_objects(&Bound::default()).len(), 2);
    }

    #[test]
    fn resolution_satisfies_the_simplicial_identities() {
        let m = discrete_rig(&FiniteRigTable::z2()).add;
        let b = Bound::default();
        for q in 0..=2usize {
            let objs = z_level(&m, q).cat.base.enum_objects(&b);
            // Faces after degeneracies.
            for i in 0..=q {
                let s = degeneracy(&m, q, i);
                let d_same = face(&m, q + 1, i);
                let d_next = face(&m, q + 1, i + 1);
                for a in &objs {
                    assert_eq!(d_same.obj(&s.obj(a)), *a);
                    assert_eq!(d_next.obj(&s.obj(a)), *a);
                }
            }
            // Commuting faces out of level q (needs q >= 2 for composites).
            if q >= 2 {
                for i in 0..q {
                    for j in (i + 1)..=q {
                        let lhs = face(&m, q - 1, i).then_after(&face(&m, q, j));
                        let rhs = face(&m, q - 1, j - 1).then_after(&face(&m, q, i));
                        for a in &objs {
                            assert_eq!(lhs.obj(a), rhs.obj(a), "d{i} d{j} at q={q} on {a:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn augmentation_is_strict_and_coequalizes_the_two_faces() {
        let m = finite_sets_e().add;
        let b = small();
        let eps = augmentation(&m, 0);
        let rep = check_symmon_functor(&eps, &b);
        assert!(rep.ok(), "{}", rep.summary());
        for a in &m.base.enum_objects(&b) {
            assert_eq!(eps.f.obj(a), *a);
            let sec = augmentation_section(&m, 0);
            assert_eq!(eps.f.obj(&sec.obj(a)), *a);
        }
        let eps1 = augmentation(&m, 1);
        let eps0 = augmentation(&m, 0);
        for a in &z_level(&m, 1).cat.base.enum_objects(&b) {
            assert_eq!(
                eps0.f.obj(&face(&m, 1, 0).obj(a)),
                eps1.f.obj(a)
            );
            assert_eq!(
                eps0.f.obj(&face(&m, 1, 1).obj(a)),
                eps1.f.obj(a)
            );
        }
    }

    #[test]
    fn zero_inclusive_colimit_commutes_with_adjoining_fiber_zeros() {
        let d = build_gr(&discrete_rig(&FiniteRigTable::z2()));
        let c = strip_graded(&d);
        let lhs = hocolim_iz(&plus_graded(&c)).cat;
        let rhs = add_isolated_zero(&Hocolim::new(c.clone()).as_permcat());
        let b = Bound::default().with_size(1).with_count(20).with_depth(2);
        assert_eq!(lhs.base.enum_objects(&b), rhs.base.enum_objects(&b));
        let lm = lhs.base.enum_morphisms(&b);
        let rm = rhs.base.enum_morphisms(&b);
        assert!(!lm.is_empty());
        assert_eq!(lm, rm);
    }

    #[test]
    fn derived_level_zero_is_bipermutative_with_zero() {
        let dh = dhocolim(&build_gr(&discrete_rig(&FiniteRigTable::z2())), 0);
        let b = Bound::default().with_size(1).with_count(14).with_depth(2).with_tuples(250);
        let rep = check_bipermutative(&dh.level_biperm(0), &b);
        assert!(rep.ok(), "{}", rep.summary());
    }

    #[test]
    fn derived_levels_satisfy_the_simplicial_identities() {
        let dh = dhocolim(&build_gr(&discrete_rig(&FiniteRigTable::z2())), 2);
        let b = Bound::default().with_size(1).with_count(10).with_depth(2);
        let l0 = dh.level_cat(0).base.enum_objects(&b);
        let l2 = dh.level_cat(2).base.enum_objects(&b);
        for i in 0..=0usize {
            let s = dh.degeneracy(0, i);
            for a in &l0 {
                assert_eq!(dh.face(1, i).obj(&s.obj(a)), *a);
                assert_eq!(dh.face(1, i + 1).obj(&s.obj(a)), *a);
            }
        }
        for i in 0..2usize {
            for j in (i + 1)..=2usize {
                let lhs = dh.face(1, i).then_after(&dh.face(2, j));
                let rhs = dh.face(1, j - 1).then_after(&dh.face(2, i));
                for a in &l2 {
                    assert_eq!(lhs.obj(a), rhs.obj(a), "d{i} d{j} on {a:?}");
                }
            }
        }
    }

    #[test]
    fn derived_face_and_augmentation_act_on_morphisms() {
        let dh = dhocolim(&build_gr(&discrete_rig(&FiniteRigTable::z2())), 1);
        let b = Bound::default().with_size(1).with_count(10).with_depth(2);
        let d0 = dh.face(1, 0);
        let eps = dh.epsilon(0);
        let l1 = dh.level_cat(1);
        let mors = l1.base.enum_morphisms(&b);
        assert!(!mors.is_empty());
        for f in mors.iter().take(40) {
            let g = d0.mor(f);
            assert_eq!(g.dom, d0.obj(&f.dom));
            assert_eq!(g.cod, d0.obj(&f.cod));
            // Functoriality on identities.
            let idm = l1.id(&f.dom);
            assert_eq!(d0.mor(&idm), dh.level_cat(0).id(&d0.obj(&f.dom)));
        }
        for a in dh.level_cat(0).base.enum_objects(&b).iter().take(20) {
            let e = eps.obj(a);
            assert!(e.is_tag("h") || e == dh.augmented.zero);
        }
    }

    #[test]
    fn corner_functors_exist_and_compose_sensibly() {
        let dh = dhocolim(&build_gr(&discrete_rig(&FiniteRigTable::z2())), 0);
        let emb = dh.corner_embedding(0);
        let aug = dh.corner_augmentation(0);
        let fz = z_level(&dh.diagram.fiber_at(&dh.diagram.index_zero()), 0).cat;
        let b = Bound::default().with_size(1);
        for a in &fz.base.enum_objects(&b) {
            let img = emb.obj(a);
            assert!(img.is_tag("h") || img == dh.levels[0].zero);
            let back = aug.f.obj(a);
            assert!(!is_adjoined_zero(&back));
        }
    }
}
