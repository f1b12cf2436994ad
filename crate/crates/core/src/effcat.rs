//! Effectively enumerable categories: decidable equality, total symbolic
//! composition, and bounded deterministic enumerators, plus the generic law
//! checkers used by everything downstream.

use crate::term::{Mor, Term};
use std::rc::Rc;
use thiserror::Error;

/// A single structured budget threaded through every enumerator and checker.
///
/// Interpretation is per category, but uniformly:
/// * `size`  — maximum "size" of an object (set cardinality, index arity,
///   matrix rank, sequence length, ...);
/// * `count` — maximum number of items an enumerator returns;
/// * `depth` — nested budget (cube entry size, hom search depth);
/// * `tuples` — maximum number of argument tuples a checker instantiates per
///   law (drawn deterministically from the front of the product order).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bound {
    pub size: usize,
    pub count: usize,
    pub depth: usize,
    pub tuples: usize,
}

impl Default for Bound {
    fn default() -> Self {
        Bound { size: 3, count: 64, depth: 3, tuples: 4000 }
    }
}

impl Bound {
    pub fn with_size(self, size: usize) -> Self {
        Bound { size, ..self }
    }
    pub fn with_count(self, count: usize) -> Self {
        Bound { count, ..self }
    }
    pub fn with_depth(self, depth: usize) -> Self {
        Bound { depth, ..self }
    }
    pub fn with_tuples(self, tuples: usize) -> Self {
        Bound { tuples, ..self }
    }
}

#[derive(Debug, Error)]
pub enum CatError {
    #[error("composition domain mismatch: cod {f:?} != dom {g:?}")]
    Mismatch { f: Box<Mor>, g: Box<Mor> },
    #[error("resource budget exhausted: {0}")]
    Resource(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
}

/// One law violation found by a checker.
#[derive(Clone, Debug)]
pub struct Violation {
    pub law: String,
    pub detail: String,
}

/// Checker output: empty means every instantiated law held.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub violations: Vec<Violation>,
    /// Number of law instances actually checked.
    pub checked: u64,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, law: &str, detail: String) {
        // Cap retained violations so corrupted inputs don't flood memory;
        // the count of *checked* instances is still exact.
        if self.violations.len() < 200 {
            self.violations.push(Violation { law: law.to_string(), detail });
        }
    }

    pub fn tick(&mut self) {
        self.checked += 1;
    }

    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        for v in other.violations {
            self.push(&v.law, v.detail);
        }
    }

    pub fn check(&mut self, law: &str, holds: bool, detail: impl FnOnce() -> String) {
        self.tick();
        if !holds {
            self.push(law, detail());
        }
    }

    pub fn summary(&self) -> String {
        if self.ok() {
            format!("ok ({} law instances)", self.checked)
        } else {
            let mut s = format!(
                "{} violation(s) over {} law instances:\n",
                self.violations.len(),
                self.checked
            );
            for v in self.violations.iter().take(10) {
                s.push_str(&format!("  [{}] {}\n", v.law, v.detail));
            }
            s
        }
    }
}

type ObjFn = Rc<dyn Fn(&Bound) -> Vec<Term>>;
type HomFn = Rc<dyn Fn(&Term, &Term, &Bound) -> Vec<Mor>>;

/// An effectively enumerable category. Equality of objects and morphisms is
/// syntactic on their normal-form terms; `compose` is total on composable
/// pairs and errors otherwise.
#[derive(Clone)]
pub struct Cat {
    pub name: String,
    pub identity: Rc<dyn Fn(&Term) -> Mor>,
    pub compose: Rc<dyn Fn(&Mor, &Mor) -> Result<Mor, CatError>>,
    pub objects: ObjFn,
    pub homs: HomFn,
}

impl Cat {
    pub fn id(&self, a: &Term) -> Mor {
        (self.identity)(a)
    }

    /// `g` after `f`.
    pub fn comp(&self, g: &Mor, f: &Mor) -> Mor {
        match (self.compose)(g, f) {
            Ok(m) => m,
            Err(e) => panic!("compose in {}: {e}", self.name),
        }
    }

    pub fn try_comp(&self, g: &Mor, f: &Mor) -> Result<Mor, CatError> {
        (self.compose)(g, f)
    }

    pub fn enum_objects(&self, bound: &Bound) -> Vec<Term> {
        (self.objects)(bound)
    }

    pub fn enum_homs(&self, a: &Term, b: &Term, bound: &Bound) -> Vec<Mor> {
        (self.homs)(a, b, bound)
    }

    /// All morphisms between enumerated objects, in deterministic order.
    pub fn enum_morphisms(&self, bound: &Bound) -> Vec<Mor> {
        let objs = self.enum_objects(bound);
        let mut out = Vec::new();
        for a in &objs {
            for b in &objs {
                out.extend(self.enum_homs(a, b, bound));
                if out.len() > bound.count * 64 {
                    return out;
                }
            }
        }
        out
    }
}

/// A functor presented by its object and morphism actions.
#[derive(Clone)]
pub struct Functor {
    pub name: String,
    pub on_obj: Rc<dyn Fn(&Term) -> Term>,
    pub on_mor: Rc<dyn Fn(&Mor) -> Mor>,
}

impl Functor {
    pub fn identity() -> Functor {
        Functor {
            name: "id".into(),
            on_obj: Rc::new(|a| a.clone()),
            on_mor: Rc::new(|f| f.clone()),
        }
    }

    pub fn obj(&self, a: &Term) -> Term {
        (self.on_obj)(a)
    }

    pub fn mor(&self, f: &Mor) -> Mor {
        (self.on_mor)(f)
    }

    /// `self` after `other`.
    pub fn then_after(&self, other: &Functor) -> Functor {
        let f = self.clone();
        let g = other.clone();
        let (f2, g2) = (f.clone(), g.clone());
        Functor {
            name: format!("{}∘{}", f.name, g.name),
            on_obj: Rc::new(move |a| f.obj(&g.obj(a))),
            on_mor: Rc::new(move |m| f2.mor(&g2.mor(m))),
        }
    }
}

/// A diagram of categories indexed by `j`: fibers and strict transition
/// functors.
#[derive(Clone)]
pub struct Diagram {
    pub j: Cat,
    pub fiber: Rc<dyn Fn(&Term) -> Cat>,
    pub transition: Rc<dyn Fn(&Mor) -> Functor>,
}

/// A left lax transformation between two diagrams over the same index
/// category: per-object functor components and per-morphism naturality cells.
#[derive(Clone)]
pub struct LeftLax {
    pub source: Diagram,
    pub target: Diagram,
    /// `F_x`: source fiber at x → target fiber at x.
    pub component: Rc<dyn Fn(&Term) -> Functor>,
    /// `ν^k` at a source-fiber object X: a morphism
    /// target(k)(F_x(X)) → F_y(source(k)(X)) for k: x → y.
    pub nu: Rc<dyn Fn(&Mor, &Term) -> Mor>,
}

/// Deterministically truncate a list of samples.
pub fn cap<T: Clone>(items: &[T], n: usize) -> Vec<T> {
    items.iter().take(n).cloned().collect()
}

/// Verifies identity and associativity laws over everything enumerable within
/// the bound.
pub fn check_category(c: &Cat, bound: &Bound) -> Report {
    let mut rep = Report::default();
    let objs = c.enum_objects(bound);
    let mors = c.enum_morphisms(bound);

    for a in &objs {
        let ia = c.id(a);
        rep.check("identity-endpoints", ia.dom == *a && ia.cod == *a, || {
            format!("id({a:?}) = {ia:?}")
        });
    }

    for f in &mors {
        let l = c.comp(&c.id(&f.cod), f);
        rep.check("left-identity", l == *f, || format!("id∘{f:?} = {l:?}"));
        let r = c.comp(f, &c.id(&f.dom));
        rep.check("right-identity", r == *f, || format!("{f:?}∘id = {r:?}"));
    }

    // Composable pairs: endpoint consistency.
    let mut pairs = Vec::new();
    for f in &mors {
        for g in &mors {
            if g.dom == f.cod {
                let gf = c.comp(g, f);
                rep.check(
                    "composite-endpoints",
                    gf.dom == f.dom && gf.cod == g.cod,
                    || format!("{g:?}∘{f:?} = {gf:?}"),
                );
                pairs.push((f.clone(), g.clone(), gf));
                if pairs.len() >= bound.tuples {
                    break;
                }
            }
        }
        if pairs.len() >= bound.tuples {
            break;
        }
    }

    // Associativity over composable triples.
    let mut triples = 0usize;
    'outer: for (f, g, gf) in &pairs {
        for h in &mors {
            if h.dom == g.cod {
                let hg = c.comp(h, g);
                let left = c.comp(h, gf);
                let right = c.comp(&hg, f);
                rep.check("associativity", left == right, || {
                    format!("h∘(g∘f) = {left:?} but (h∘g)∘f = {right:?} for f={f:?} g={g:?} h={h:?}")
                });
                triples += 1;
                if triples >= bound.tuples {
                    break 'outer;
                }
            }
        }
    }
    rep
}

/// Verifies that `f` preserves endpoints, identities, and composition on
/// enumerated samples of `source`.
pub fn check_functor(f: &Functor, source: &Cat, target: &Cat, bound: &Bound) -> Report {
    let mut rep = Report::default();
    let objs = source.enum_objects(bound);
    let mors = source.enum_morphisms(bound);

    for a in &objs {
        let fid = f.mor(&source.id(a));
        let idf = target.id(&f.obj(a));
        rep.check("functor-identity", fid == idf, || {
            format!("{}(id_{a:?}) = {fid:?} != {idf:?}", f.name)
        });
    }
    for m in &mors {
        let fm = f.mor(m);
        rep.check(
            "functor-endpoints",
            fm.dom == f.obj(&m.dom) && fm.cod == f.obj(&m.cod),
            || format!("{}({m:?}) = {fm:?}", f.name),
        );
    }
    let mut done = 0usize;
    'outer: for x in &mors {
        for g in &mors {
            if g.dom == x.cod {
                let lhs = f.mor(&source.comp(g, x));
                let rhs = target.comp(&f.mor(g), &f.mor(x));
                rep.check("functor-composition", lhs == rhs, || {
                    format!("{}(g∘f) = {lhs:?} != {rhs:?}", f.name)
                });
                done += 1;
                if done >= bound.tuples {
                    break 'outer;
                }
            }
        }
    }
    rep
}

/// Verifies the left lax transformation laws: each component is a functor,
/// `ν^id = id`, and the cocycle condition on composable index morphisms.
pub fn check_left_lax(t: &LeftLax, bound: &Bound) -> Report {
    let mut rep = Report::default();
    let jobjs = t.source.j.enum_objects(bound);
    let jmors = t.source.j.enum_morphisms(bound);

    for x in &jobjs {
        let fx = (t.component)(x);
        let src = (t.source.fiber)(x);
        let tgt = (t.target.fiber)(x);
        rep.absorb(check_functor(&fx, &src, &tgt, bound));

        // ν at the identity must be the identity.
        let idx = t.source.j.id(x);
        for a in cap(&src.enum_objects(bound), bound.count) {
            let nu = (t.nu)(&idx, &a);
            let expect = tgt.id(&fx.obj(&a));
            rep.check("nu-identity", nu == expect, || {
                format!("ν^id at {a:?} = {nu:?} != {expect:?}")
            });
        }
    }

    // Cocycle: ν^{ℓk}_X = F's naturality composite for k: x→y, ℓ: y→z.
    let mut done = 0usize;
    'outer: for k in &jmors {
        for l in &jmors {
            if l.dom != k.cod {
                continue;
            }
            let lk = t.source.j.comp(l, k);
            let src_x = (t.source.fiber)(&k.dom);
            let tgt_z = (t.target.fiber)(&l.cod);
            let sk = t.transition_source(k);
            let dl = t.transition_target(l);
            for a in cap(&src_x.enum_objects(bound), bound.depth.max(2)) {
                let lhs = (t.nu)(&lk, &a);
                let nu_k = (t.nu)(k, &a);
                let nu_l = (t.nu)(l, &sk.obj(&a));
                let rhs = tgt_z.comp(&nu_l, &dl.mor(&nu_k));
                rep.check("nu-cocycle", lhs == rhs, || {
                    format!("ν^(ℓ∘k) at {a:?}: {lhs:?} != {rhs:?}")
                });
                done += 1;
                if done >= bound.tuples {
                    break 'outer;
                }
            }
        }
    }
    rep
}

impl LeftLax {
    fn transition_source(&self, k: &Mor) -> Functor {
        (self.source.transition)(k)
    }
    fn transition_target(&self, k: &Mor) -> Functor {
        (self.target.transition)(k)
    }
}
