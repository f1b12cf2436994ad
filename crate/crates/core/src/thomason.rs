//! The homotopy colimit of a graded diagram of permutative categories as a
//! zeroless permutative category, together with the multiplicative structure
//! induced by a graded tensor: objects are nonempty formal sums of
//! grade-labelled fiber objects, morphisms are triples (ψ, ℓ, ϱ) of a
//! surjection, index-category morphisms, and fiber comparison morphisms.

use crate::biperm::{BipermCat, GradedCat, LaxRig};
use crate::effcat::{cap, Bound, Cat, CatError, Functor, Report};
use crate::indexing::{shuffle_chi, transpose_perm, xi_perm, Perm};
use crate::permcat::{PermCat, SymMonFunctor};
use crate::term::{Mor, Term};
use std::rc::Rc;

/// A surjection {1..n} ↠ {1..m}, stored as its image sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Surj {
    images: Vec<usize>,
    target: usize,
}

impl Surj {
    pub fn new(target: usize, images: Vec<usize>) -> Surj {
        let mut hit = vec![false; target + 1];
        for &v in &images {
            assert!(v >= 1 && v <= target, "image {v} outside 1..{target}");
            hit[v] = true;
        }
        assert!(hit.iter().skip(1).all(|&h| h), "not surjective: {images:?} onto {target}");
        Surj { images, target }
    }

    pub fn identity(n: usize) -> Surj {
        Surj { images: (1..=n).collect(), target: n }
    }

    pub fn from_perm(p: &Perm) -> Surj {
        Surj { images: p.images().to_vec(), target: p.arity() }
    }

    pub fn source(&self) -> usize {
        self.images.len()
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.target == self.images.len() && self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// self ∘ other.
    pub fn compose(&self, other: &Surj) -> Surj {
        assert_eq!(other.target, self.source());
        Surj {
            images: other.images.iter().map(|&i| self.images[i - 1]).collect(),
            target: self.target,
        }
    }

    pub fn block_sum(&self, other: &Surj) -> Surj {
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&v| v + self.target));
        Surj { images, target: self.target + other.target }
    }

    /// Ascending preimages of j.
    pub fn fiber(&self, j: usize) -> Vec<usize> {
        (1..=self.source()).filter(|&i| self.apply(i) == j).collect()
    }

    pub fn to_term(&self) -> Term {
        let mut args = vec![Term::int(self.target as i64)];
        args.extend(self.images.iter().map(|&v| Term::int(v as i64)));
        Term::tag("surj", args)
    }

    pub fn from_term(t: &Term) -> Surj {
        let a = t.args("surj");
        Surj::new(
            a[0].as_int() as usize,
            a[1..].iter().map(|v| v.as_int() as usize).collect(),
        )
    }

    /// All surjections {1..n} ↠ {1..m}.
    pub fn all(n: usize, m: usize) -> Vec<Surj> {
        fn rec(n: usize, m: usize, pre: &mut Vec<usize>, out: &mut Vec<Surj>) {
            if pre.len() == n {
                let mut hit = vec![false; m + 1];
                for &v in pre.iter() {
                    hit[v] = true;
                }
                if hit.iter().skip(1).all(|&h| h) {
                    out.push(Surj { images: pre.clone(), target: m });
                }
                return;
            }
            for v in 1..=m {
                pre.push(v);
                rec(n, m, pre, out);
                pre.pop();
            }
        }
        if m > n {
            return Vec::new();
        }
        let mut out = Vec::new();
        rec(n, m, &mut Vec::new(), &mut out);
        out
    }
}

/// Builds a formal-sum object from grade/object pairs.
pub fn h_obj(seq: &[(Term, Term)]) -> Term {
    assert!(!seq.is_empty(), "formal sums are nonempty");
    Term::tag(
        "h",
        seq.iter()
            .map(|(x, a)| Term::tag("p", vec![x.clone(), a.clone()]))
            .collect(),
    )
}

pub fn h_seq(t: &Term) -> Vec<(Term, Term)> {
    t.args("h")
        .iter()
        .map(|p| {
            let a = p.args("p");
            (a[0].clone(), a[1].clone())
        })
        .collect()
}

fn h_pay(psi: &Surj, ell: &[Mor], rho: &[Mor]) -> Term {
    Term::tag(
        "hmor",
        vec![
            psi.to_term(),
            Term::List(ell.iter().map(|m| m.to_term()).collect()),
            Term::List(rho.iter().map(|m| m.to_term()).collect()),
        ],
    )
}

/// Splits a morphism of the colimit into its (ψ, ℓ, ϱ) coordinates.
pub fn h_parts(m: &Mor) -> (Surj, Vec<Mor>, Vec<Mor>) {
    let a = m.pay.args("hmor");
    (
        Surj::from_term(&a[0]),
        a[1].as_list().iter().map(Mor::from_term).collect(),
        a[2].as_list().iter().map(Mor::from_term).collect(),
    )
}

/// The homotopy colimit of a graded diagram, with its zeroless permutative
/// and (given a graded tensor) bipermutative structure.
#[derive(Clone)]
pub struct Hocolim {
    pub diagram: GradedCat,
}

impl Hocolim {
    pub fn new(diagram: GradedCat) -> Hocolim {
        Hocolim { diagram }
    }

    /// ⊕ over an ascending preimage: the canonical source of a comparison
    /// morphism ϱ_j, formed from the transported summands.
    fn rho_source(&self, seq: &[(Term, Term)], ell: &[Mor], fiber: &[usize]) -> (Term, Term) {
        let grade = ell[fiber[0] - 1].cod.clone();
        let f = self.diagram.fiber_at(&grade);
        let parts: Vec<Term> = fiber
            .iter()
            .map(|&i| self.diagram.trans(&ell[i - 1]).obj(&seq[i - 1].1))
            .collect();
        (grade, f.add_n(&parts))
    }

    /// Builds and validates a morphism from its three coordinates.
    pub fn mor(&self, dom: &Term, cod: &Term, psi: &Surj, ell: &[Mor], rho: &[Mor]) -> Mor {
        let ds = h_seq(dom);
        let cs = h_seq(cod);
        assert_eq!(psi.source(), ds.len());
        assert_eq!(psi.target(), cs.len());
        assert_eq!(ell.len(), ds.len());
        assert_eq!(rho.len(), cs.len());
        for (i, l) in ell.iter().enumerate() {
            assert_eq!(l.dom, ds[i].0, "index morphism {i} leaves the wrong grade");
            assert_eq!(
                l.cod,
                cs[psi.apply(i + 1) - 1].0,
                "index morphism {i} lands in the wrong grade"
            );
        }
        for (j, r) in rho.iter().enumerate() {
            let (_, src) = self.rho_source(&ds, ell, &psi.fiber(j + 1));
            assert_eq!(r.dom, src, "comparison morphism {j} has the wrong source");
            assert_eq!(r.cod, cs[j].1, "comparison morphism {j} has the wrong target");
        }
        Mor::new(dom.clone(), cod.clone(), h_pay(psi, ell, rho))
    }

    pub fn id(&self, a: &Term) -> Mor {
        let seq = h_seq(a);
        let n = seq.len();
        let ell: Vec<Mor> = seq.iter().map(|(x, _)| self.diagram.j.id(x)).collect();
        let rho: Vec<Mor> = seq
            .iter()
            .map(|(x, o)| self.diagram.fiber_at(x).id(o))
            .collect();
        self.mor(a, a, &Surj::identity(n), &ell, &rho)
    }

    /// Composition: the surjections and index morphisms compose
    /// coordinatewise; each comparison morphism is the outer ϱ' after the
    /// transported inner ones, after the block permutation regrouping the
    /// composite fiber into inner-then-outer order.
    pub fn compose(&self, g: &Mor, f: &Mor) -> Result<Mor, CatError> {
        if f.cod != g.dom {
            return Err(CatError::Mismatch { f: Box::new(f.clone()), g: Box::new(g.clone()) });
        }
        let (psi, ell, rho) = h_parts(f);
        let (psi2, ell2, rho2) = h_parts(g);
        let dseq = h_seq(&f.dom);
        let comp_psi = psi2.compose(&psi);
        let comp_ell: Vec<Mor> = (1..=psi.source())
            .map(|i| self.diagram.j.comp(&ell2[psi.apply(i) - 1], &ell[i - 1]))
            .collect();
        let mut comp_rho = Vec::with_capacity(psi2.target());
        for r in 1..=psi2.target() {
            let big = comp_psi.fiber(r);
            let (grade, _) = self.rho_source(&dseq, &comp_ell, &big);
            let fib = self.diagram.fiber_at(&grade);
            // Sort the composite fiber by (outer index, inner index); the
            // block permutation carries ascending-i order to that order.
            let mut sorted: Vec<usize> = big.clone();
            sorted.sort_by_key(|&i| (psi.apply(i), i));
            let sigma = Perm::new(
                big.iter()
                    .map(|&i| sorted.iter().position(|&k| k == i).unwrap() + 1)
                    .collect(),
            );
            let objs: Vec<Term> = big
                .iter()
                .map(|&i| self.diagram.trans(&comp_ell[i - 1]).obj(&dseq[i - 1].1))
                .collect();
            let perm_mor = fib.block_perm(&objs, &sigma);
            let inner: Vec<Mor> = psi2
                .fiber(r)
                .iter()
                .map(|&k| self.diagram.trans(&ell2[k - 1]).mor(&rho[k - 1]))
                .collect();
            let inner_sum = fib.add_mor_n(&inner);
            comp_rho.push(fib.comp(&rho2[r - 1], &fib.comp(&inner_sum, &perm_mor)));
        }
        Ok(self.mor(&f.dom, &g.cod, &comp_psi, &comp_ell, &comp_rho))
    }

    pub fn oplus(&self, a: &Term, b: &Term) -> Term {
        let mut seq = h_seq(a);
        seq.extend(h_seq(b));
        h_obj(&seq)
    }

    pub fn oplus_mor(&self, f: &Mor, g: &Mor) -> Mor {
        let (pf, ef, rf) = h_parts(f);
        let (pg, eg, rg) = h_parts(g);
        let mut ell = ef;
        ell.extend(eg);
        let mut rho = rf;
        rho.extend(rg);
        self.mor(
            &self.oplus(&f.dom, &g.dom),
            &self.oplus(&f.cod, &g.cod),
            &pf.block_sum(&pg),
            &ell,
            &rho,
        )
    }

    /// A pure reindexing morphism (σ, id, id); the target places the i-th
    /// summand at position σ(i).
    pub fn perm_mor(&self, a: &Term, sigma: &Perm) -> Mor {
        let seq = h_seq(a);
        assert_eq!(sigma.arity(), seq.len());
        let mut cod = vec![None; seq.len()];
        for (i, pair) in seq.iter().enumerate() {
            cod[sigma.apply(i + 1) - 1] = Some(pair.clone());
        }
        let cseq: Vec<(Term, Term)> = cod.into_iter().map(Option::unwrap).collect();
        let ell: Vec<Mor> = seq.iter().map(|(x, _)| self.diagram.j.id(x)).collect();
        let rho: Vec<Mor> = cseq
            .iter()
            .map(|(x, o)| self.diagram.fiber_at(x).id(o))
            .collect();
        self.mor(a, &h_obj(&cseq), &Surj::from_perm(sigma), &ell, &rho)
    }

    /// The additive twist (χ(n,m), id, id).
    pub fn twist_oplus(&self, a: &Term, b: &Term) -> Mor {
        let (n, m) = (h_seq(a).len(), h_seq(b).len());
        self.perm_mor(&self.oplus(a, b), &shuffle_chi(n, m))
    }

    /// Elementwise product in lexicographic (i, j) order.
    pub fn tensor(&self, a: &Term, b: &Term) -> Term {
        let sa = h_seq(a);
        let sb = h_seq(b);
        let mut seq = Vec::with_capacity(sa.len() * sb.len());
        for (x, oa) in &sa {
            for (y, ob) in &sb {
                seq.push((self.diagram.j_add(x, y), self.diagram.tens(x, oa, y, ob)));
            }
        }
        h_obj(&seq)
    }

    /// f ⊗ id_b: the right distributivity of the colimit is the identity, so
    /// each comparison morphism is simply ϱ_j ⊗ id.
    pub fn tensor_mor_right(&self, f: &Mor, b: &Term) -> Mor {
        let (psi, ell, rho) = h_parts(f);
        let dseq = h_seq(&f.dom);
        let sb = h_seq(b);
        let m = sb.len();
        let mut images = Vec::with_capacity(psi.source() * m);
        for i in 1..=psi.source() {
            for j in 1..=m {
                images.push((psi.apply(i) - 1) * m + j);
            }
        }
        let psi_t = Surj::new(psi.target() * m, images);
        let mut ell_t = Vec::with_capacity(dseq.len() * m);
        let mut rho_t = Vec::with_capacity(psi.target() * m);
        for l in &ell {
            for (y, _) in &sb {
                ell_t.push(self.diagram.j.add_mor(l, &self.diagram.j.id(y)));
            }
        }
        let cseq = h_seq(&f.cod);
        for (jp, (yc, _)) in cseq.iter().enumerate() {
            let _ = yc;
            for (y, ob) in &sb {
                let idb = self.diagram.fiber_at(y).id(ob);
                rho_t.push(self.diagram.tens_mor(&cseq[jp].0, &rho[jp], y, &idb));
            }
        }
        self.mor(
            &self.tensor(&f.dom, b),
            &self.tensor(&f.cod, b),
            &psi_t,
            &ell_t,
            &rho_t,
        )
    }

    /// Multi-summand left distributivity in a fiber: folds the binary one.
    fn dl_fold(&self, x: &Term, a: &Term, y: &Term, parts: &[Term]) -> Mor {
        let fxy = self.diagram.fiber_at(&self.diagram.j_add(x, y));
        let fy = self.diagram.fiber_at(y);
        let mut acc = fxy.id(&self.diagram.tens(x, a, y, &parts[0]));
        let mut sum = parts[0].clone();
        for p in &parts[1..] {
            let step = self.diagram.dl_at(x, a, y, &sum, p);
            let idp = fxy.id(&self.diagram.tens(x, a, y, p));
            acc = fxy.comp(&step, &fxy.add_mor(&acc, &idp));
            sum = fy.add(&sum, p);
        }
        acc
    }

    /// id_a ⊗ g: comparison morphisms are (id ⊗ π) after the folded left
    /// distributivity.
    pub fn tensor_mor_left(&self, a: &Term, g: &Mor) -> Mor {
        let (phi, kap, pi) = h_parts(g);
        let sa = h_seq(a);
        let dseq = h_seq(&g.dom);
        let cseq = h_seq(&g.cod);
        let mp = phi.target();
        let mut images = Vec::with_capacity(sa.len() * phi.source());
        for i in 1..=sa.len() {
            for j in 1..=phi.source() {
                images.push((i - 1) * mp + phi.apply(j));
            }
        }
        let psi_t = Surj::new(sa.len() * mp, images);
        let mut ell_t = Vec::with_capacity(sa.len() * dseq.len());
        for (x, _) in &sa {
            for k in &kap {
                ell_t.push(self.diagram.j.add_mor(&self.diagram.j.id(x), k));
            }
        }
        let mut rho_t = Vec::with_capacity(sa.len() * mp);
        for (x, oa) in &sa {
            for (jp, (y, _)) in cseq.iter().enumerate() {
                let parts: Vec<Term> = phi
                    .fiber(jp + 1)
                    .iter()
                    .map(|&j| self.diagram.trans(&kap[j - 1]).obj(&dseq[j - 1].1))
                    .collect();
                let fold = self.dl_fold(x, oa, y, &parts);
                let idx = self.diagram.fiber_at(x).id(oa);
                let after = self.diagram.tens_mor(x, &idx, y, &pi[jp]);
                let fxy = self.diagram.fiber_at(&self.diagram.j_add(x, y));
                rho_t.push(fxy.comp(&after, &fold));
            }
        }
        self.mor(
            &self.tensor(a, &g.dom),
            &self.tensor(a, &g.cod),
            &psi_t,
            &ell_t,
            &rho_t,
        )
    }

    /// f ⊗ g, defined as (f ⊗ id) ∘ (id ⊗ g); the other bracketing is a
    /// tested identity, not a definition.
    pub fn tensor_mor(&self, f: &Mor, g: &Mor) -> Mor {
        let first = self.tensor_mor_left(&f.dom, g);
        let second = self.tensor_mor_right(f, &g.cod);
        self.compose(&second, &first).expect("tensor factors compose")
    }

    /// The multiplicative twist: transported fiber twists followed by the
    /// transposition reindexing.
    pub fn tau_tensor(&self, a: &Term, b: &Term) -> Result<Mor, CatError> {
        if self.diagram.gamma.is_none() {
            return Err(CatError::Unsupported(
                "multiplicative twist needs a twist on the diagram".into(),
            ));
        }
        let sa = h_seq(a);
        let sb = h_seq(b);
        let (n, m) = (sa.len(), sb.len());
        let ab = self.tensor(a, b);
        // First factor: identity shape, χ on grades, transported γ⊗ in the
        // fibers.
        let mut ell = Vec::with_capacity(n * m);
        let mut rho = Vec::with_capacity(n * m);
        let mut mid = Vec::with_capacity(n * m);
        for (x, oa) in &sa {
            for (y, ob) in &sb {
                let chi = self.diagram.chi(x, y);
                ell.push(chi.clone());
                let g = self.diagram.gamma_t(x, oa, y, ob);
                let moved = self.diagram.trans(&chi).mor(&g);
                mid.push((self.diagram.j_add(y, x), moved.cod.clone()));
                rho.push(moved);
            }
        }
        let mid_obj = h_obj(&mid);
        let first = self.mor(&ab, &mid_obj, &Surj::identity(n * m), &ell, &rho);
        let second = self.perm_mor(&mid_obj, &transpose_perm(n, m));
        let out = self.compose(&second, &first)?;
        debug_assert_eq!(out.cod, self.tensor(b, a));
        Ok(out)
    }

    /// Left distributivity (ξ, id, id): a pure reindexing by the finite-sets
    /// distributivity permutation.
    pub fn dl(&self, a: &Term, b: &Term, bp: &Term) -> Mor {
        let (n, m, mp) = (h_seq(a).len(), h_seq(b).len(), h_seq(bp).len());
        let dom = self.oplus(&self.tensor(a, b), &self.tensor(a, bp));
        let out = self.perm_mor(&dom, &xi_perm(n, m, mp));
        debug_assert_eq!(out.cod, self.tensor(a, &self.oplus(b, bp)));
        out
    }

    /// The multiplicative unit 1[(0, 1)].
    pub fn unit(&self) -> Term {
        h_obj(&[(self.diagram.index_zero(), self.diagram.one.clone())])
    }

    /// The canonical embedding of the zero-graded fiber, X ↦ 1[(0, X)]:
    /// strict for ⊗, lax for ⊕ with η⊕ = (𝟐↠𝟏, id, id).
    pub fn unit_embed(&self, hocolim_cat: &PermCat) -> SymMonFunctor {
        let z = self.diagram.index_zero();
        let h1 = self.clone();
        let z1 = z.clone();
        let z2 = z.clone();
        let f = Functor {
            name: "unit-embed".into(),
            on_obj: Rc::new(move |a| h_obj(&[(z1.clone(), a.clone())])),
            on_mor: {
                let h = self.clone();
                let z = z.clone();
                Rc::new(move |m| {
                    let dom = h_obj(&[(z.clone(), m.dom.clone())]);
                    let cod = h_obj(&[(z.clone(), m.cod.clone())]);
                    h.mor(&dom, &cod, &Surj::identity(1), &[h.diagram.j.id(&z)], &[m.clone()])
                })
            },
        };
        SymMonFunctor {
            source: self.diagram.fiber_at(&z),
            target: hocolim_cat.clone(),
            f,
            eta: Rc::new(move |a, b| {
                let f0 = h1.diagram.fiber_at(&z2);
                let dom = h_obj(&[(z2.clone(), a.clone()), (z2.clone(), b.clone())]);
                let cod = h_obj(&[(z2.clone(), f0.add(a, b))]);
                h1.mor(
                    &dom,
                    &cod,
                    &Surj::new(1, vec![1, 1]),
                    &[h1.diagram.j.id(&z2), h1.diagram.j.id(&z2)],
                    &[f0.id(&f0.add(a, b))],
                )
            }),
            unit_mor: None,
            strict: false,
        }
    }

    /// The colimit as a zeroless permutative category with bounded
    /// enumerators.
    pub fn as_permcat(&self) -> PermCat {
        let (h1, h2, h3, h4, h5, h6, h7) = (
            self.clone(),
            self.clone(),
            self.clone(),
            self.clone(),
            self.clone(),
            self.clone(),
            self.clone(),
        );
        let base = Cat {
            name: "hocolim".into(),
            identity: Rc::new(move |a| h1.id(a)),
            compose: Rc::new(move |g, f| h2.compose(g, f)),
            objects: Rc::new(move |b| h3.enum_objects(b)),
            homs: Rc::new(move |a, c, b| h4.enum_homs(a, c, b)),
        };
        PermCat {
            base,
            zero: None,
            oplus: Rc::new(move |a, b| h5.oplus(a, b)),
            oplus_mor: Rc::new(move |f, g| h6.oplus_mor(f, g)),
            twist: Rc::new(move |a, b| h7.twist_oplus(a, b)),
        }
    }

    /// The colimit as a zeroless bipermutative (or strictly bimonoidal)
    /// category.
    pub fn as_bipermcat(&self) -> BipermCat {
        let (h1, h2, h4) = (self.clone(), self.clone(), self.clone());
        let gamma = self.diagram.gamma.as_ref().map(|_| {
            let h3 = self.clone();
            let g: Rc<dyn Fn(&Term, &Term) -> Mor> =
                Rc::new(move |a, b| h3.tau_tensor(a, b).expect("twist available"));
            g
        });
        BipermCat {
            add: self.as_permcat(),
            one: self.unit(),
            tensor: Rc::new(move |a, b| h1.tensor(a, b)),
            tensor_mor: Rc::new(move |f, g| h2.tensor_mor(f, g)),
            gamma_tensor: gamma,
            dl: Some(Rc::new(move |a, b, bp| h4.dl(a, b, bp))),
        }
    }

    /// The (grade, object) alphabet used by the object enumerator: every
    /// enumerated grade with a capped selection of fiber objects.
    fn alphabet(&self, b: &Bound) -> Vec<(Term, Term)> {
        let jobjs = cap(&self.diagram.j.base.enum_objects(b), b.count);
        let per = (b.count / jobjs.len().max(1)).max(2);
        let mut out = Vec::new();
        for x in jobjs {
            let f = self.diagram.fiber_at(&x);
            for o in cap(&f.base.enum_objects(b), per) {
                out.push((x.clone(), o));
            }
        }
        out
    }

    pub fn enum_objects(&self, b: &Bound) -> Vec<Term> {
        let alpha = self.alphabet(b);
        let mut out = Vec::new();
        let mut layer: Vec<Vec<(Term, Term)>> = vec![vec![]];
        for _ in 1..=b.depth.max(1) {
            let mut next = Vec::new();
            for seq in &layer {
                for pair in &alpha {
                    let mut s = seq.clone();
                    s.push(pair.clone());
                    out.push(h_obj(&s));
                    if out.len() >= b.count {
                        return out;
                    }
                    next.push(s);
                }
            }
            layer = next;
        }
        out
    }

    pub fn enum_homs(&self, a: &Term, c: &Term, b: &Bound) -> Vec<Mor> {
        let ds = h_seq(a);
        let cs = h_seq(c);
        let mut out = Vec::new();
        for psi in Surj::all(ds.len(), cs.len()) {
            // Index-morphism choices per position.
            let ell_opts: Vec<Vec<Mor>> = (0..ds.len())
                .map(|i| {
                    self.diagram
                        .j
                        .base
                        .enum_homs(&ds[i].0, &cs[psi.apply(i + 1) - 1].0, b)
                })
                .collect();
            if ell_opts.iter().any(|v| v.is_empty()) {
                continue;
            }
            let mut idx = vec![0usize; ds.len()];
            'ell: loop {
                let ell: Vec<Mor> = idx.iter().enumerate().map(|(i, &k)| ell_opts[i][k].clone()).collect();
                let rho_opts: Vec<Vec<Mor>> = (0..cs.len())
                    .map(|j| {
                        let (_, src) = self.rho_source(&ds, &ell, &psi.fiber(j + 1));
                        let grade = &cs[j].0;
                        self.diagram.fiber_at(grade).base.enum_homs(&src, &cs[j].1, b)
                    })
                    .collect();
                if rho_opts.iter().all(|v| !v.is_empty()) {
                    let mut ridx = vec![0usize; cs.len()];
                    loop {
                        let rho: Vec<Mor> =
                            ridx.iter().enumerate().map(|(j, &k)| rho_opts[j][k].clone()).collect();
                        out.push(self.mor(a, c, &psi, &ell, &rho));
                        if out.len() >= b.count {
                            return out;
                        }
                        let mut k = cs.len();
                        loop {
                            if k == 0 {
                                break;
                            }
                            k -= 1;
                            ridx[k] += 1;
                            if ridx[k] < rho_opts[k].len() {
                                break;
                            }
                            ridx[k] = 0;
                            if k == 0 {
                                break;
                            }
                        }
                        if ridx.iter().all(|&v| v == 0) {
                            break;
                        }
                    }
                }
                let mut k = ds.len();
                loop {
                    if k == 0 {
                        break 'ell;
                    }
                    k -= 1;
                    idx[k] += 1;
                    if idx[k] < ell_opts[k].len() {
                        break;
                    }
                    idx[k] = 0;
                    if k == 0 {
                        break 'ell;
                    }
                }
                if idx.iter().all(|&v| v == 0) {
                    break;
                }
            }
        }
        out
    }
}

/// The morphism of colimits induced by a lax morphism of diagrams: entrywise
/// on objects; on morphisms the comparison morphisms become F(ϱ) after the
/// folded η⊕. The result is strict symmetric monoidal for ⊕.
pub fn induced_morphism(f: &LaxRig) -> LaxRig {
    let hs = Hocolim::new(f.source.clone());
    let ht = Hocolim::new(f.target.clone());
    let fcl = f.clone();
    let hs1 = hs.clone();
    let ht1 = ht.clone();
    let on_obj = Rc::new(move |a: &Term| {
        let seq: Vec<(Term, Term)> = h_seq(a)
            .iter()
            .map(|(x, o)| (x.clone(), (fcl.component)(x).obj(o)))
            .collect();
        h_obj(&seq)
    });
    let fc2 = f.clone();
    let oo = on_obj.clone();
    let ht2 = ht.clone();
    let on_mor = Rc::new(move |m: &Mor| {
        let (psi, ell, rho) = h_parts(m);
        let dseq = h_seq(&m.dom);
        let mut rho_f = Vec::with_capacity(rho.len());
        for (j, r) in rho.iter().enumerate() {
            let grade = &h_seq(&m.cod)[j].0;
            let tgt = fc2.target.fiber_at(grade);
            let fx = (fc2.component)(grade);
            // Fold η⊕ over the transported summands of the source of ϱ_j.
            let fiber = psi.fiber(j + 1);
            let parts: Vec<Term> = fiber
                .iter()
                .map(|&i| fc2.source.trans(&ell[i - 1]).obj(&dseq[i - 1].1))
                .collect();
            let mut acc = tgt.id(&fx.obj(&parts[0]));
            let src_f = fc2.source.fiber_at(grade);
            let mut sum = parts[0].clone();
            for p in &parts[1..] {
                let step = (fc2.eta_oplus)(grade, &sum, p);
                acc = tgt.comp(&step, &tgt.add_mor(&acc, &tgt.id(&fx.obj(p))));
                sum = src_f.add(&sum, p);
            }
            rho_f.push(tgt.comp(&fx.mor(r), &acc));
        }
        let dom = oo(&m.dom);
        let cod = oo(&m.cod);
        ht2.mor(&dom, &cod, &psi, &ell, &rho_f)
    });
    let component = Functor { name: "induced".into(), on_obj, on_mor };

    let hs_b = hs1.as_bipermcat().to_graded();
    let ht_b = ht1.as_bipermcat().to_graded();
    let ht3 = ht.clone();
    let comp2 = component.clone();
    let eta_oplus = Rc::new(move |_: &Term, a: &Term, b: &Term| {
        ht3.id(&ht3.oplus(&comp2.obj(a), &comp2.obj(b)))
    });
    let fc3 = f.clone();
    let ht4 = ht.clone();
    let hs2 = hs.clone();
    let eta_tensor = Rc::new(move |_: &Term, a: &Term, _: &Term, b: &Term| {
        // (id, id, η⊗): entrywise multiplicative comparison.
        let sa = h_seq(a);
        let sb = h_seq(b);
        let mut ell = Vec::new();
        let mut rho = Vec::new();
        let mut dom_seq = Vec::new();
        let mut cod_seq = Vec::new();
        for (x, oa) in &sa {
            for (y, ob) in &sb {
                let xy = fc3.source.j_add(x, y);
                ell.push(fc3.source.j.id(&xy));
                let e = (fc3.eta_tensor)(x, oa, y, ob);
                dom_seq.push((xy.clone(), e.dom.clone()));
                cod_seq.push((xy.clone(), e.cod.clone()));
                rho.push(e);
            }
        }
        let _ = &hs2;
        ht4.mor(
            &h_obj(&dom_seq),
            &h_obj(&cod_seq),
            &Surj::identity(sa.len() * sb.len()),
            &ell,
            &rho,
        )
    });
    let z = f.source.index_zero();
    let unit_one = {
        let dom = ht.unit();
        let cod = h_obj(&[(z.clone(), f.unit_one.cod.clone())]);
        ht.mor(
            &dom,
            &cod,
            &Surj::identity(1),
            &[f.target.j.id(&z)],
            &[f.unit_one.clone()],
        )
    };
    LaxRig {
        source: hs_b,
        target: ht_b,
        component: Rc::new(move |_| component.clone()),
        eta_oplus,
        eta_tensor,
        unit_zero: None,
        unit_one,
    }
}

/// Seeded random generation of colimit objects and morphisms, used by the
/// large randomized law suites. All draws are deterministic in the seed.
pub struct Sampler {
    pub h: Hocolim,
    rng: rand_chacha::ChaCha8Rng,
    bound: Bound,
    alphabet: Vec<(Term, Term)>,
    /// Per grade: outgoing index morphisms grouped by target grade.
    out_by_cod: std::collections::BTreeMap<Term, std::collections::BTreeMap<Term, Vec<Mor>>>,
}

impl Sampler {
    pub fn new(h: Hocolim, seed: u64, bound: Bound) -> Sampler {
        use rand::SeedableRng;
        let alphabet = h.alphabet(&bound);
        let jobjs = cap(&h.diagram.j.base.enum_objects(&bound), bound.count);
        let mut out_by_cod = std::collections::BTreeMap::new();
        for x in &jobjs {
            let mut per: std::collections::BTreeMap<Term, Vec<Mor>> = Default::default();
            for y in &jobjs {
                let hom = h.diagram.j.base.enum_homs(x, y, &bound);
                if !hom.is_empty() {
                    per.insert(y.clone(), hom);
                }
            }
            out_by_cod.insert(x.clone(), per);
        }
        Sampler {
            h,
            rng: rand_chacha::ChaCha8Rng::seed_from_u64(seed),
            bound,
            alphabet,
            out_by_cod,
        }
    }

    fn below(&mut self, n: usize) -> usize {
        use rand::Rng;
        self.rng.gen_range(0..n)
    }

    pub fn obj(&mut self) -> Term {
        let len = 1 + self.below(self.bound.depth.max(1));
        let seq: Vec<(Term, Term)> = (0..len)
            .map(|_| {
                let k = self.below(self.alphabet.len());
                self.alphabet[k].clone()
            })
            .collect();
        h_obj(&seq)
    }

    /// A random morphism out of `a`: first an index morphism per summand,
    /// then a surjection merging only summands whose chosen target grades
    /// agree, then a random fiber comparison morphism per merged block.
    pub fn mor_from(&mut self, a: &Term) -> Mor {
        let seq = h_seq(a);
        let n = seq.len();
        let mut ell = Vec::with_capacity(n);
        let mut images = vec![0usize; n];
        // Block j ↦ target grade of its members, in order of creation.
        let mut block_grade: Vec<Term> = Vec::new();
        for (i, (x, _)) in seq.iter().enumerate() {
            let outs = self.out_by_cod[x].clone();
            let keys: Vec<&Term> = outs.keys().collect();
            let y = keys[self.below(keys.len())].clone();
            let opts = &outs[&y];
            ell.push(opts[self.below(opts.len())].clone());
            let mergeable: Vec<usize> = (0..block_grade.len())
                .filter(|&j| block_grade[j] == y)
                .collect();
            let pick = self.below(mergeable.len() + 1);
            if pick == mergeable.len() {
                block_grade.push(y);
                images[i] = block_grade.len();
            } else {
                images[i] = mergeable[pick] + 1;
            }
        }
        let m = block_grade.len();
        let psi = Surj::new(m, images);
        let mut cod_seq = Vec::with_capacity(m);
        let mut rho = Vec::with_capacity(m);
        for j in 1..=m {
            let fiber = psi.fiber(j);
            let (grade, src) = self.h.rho_source(&seq, &ell, &fiber);
            let fib = self.h.diagram.fiber_at(&grade);
            // Candidate targets: the source itself plus a few enumerated
            // fiber objects; fall back to the identity when no hom exists.
            let mut cands = vec![src.clone()];
            let objs = fib.base.enum_objects(&self.bound);
            for _ in 0..3 {
                if !objs.is_empty() {
                    cands.push(objs[self.below(objs.len())].clone());
                }
            }
            let pick = cands[self.below(cands.len())].clone();
            let homs = fib.base.enum_homs(&src, &pick, &self.bound);
            let r = if homs.is_empty() {
                fib.id(&src)
            } else {
                homs[self.below(homs.len())].clone()
            };
            cod_seq.push((grade, r.cod.clone()));
            rho.push(r);
        }
        self.h.mor(a, &h_obj(&cod_seq), &psi, &ell, &rho)
    }

    pub fn mor(&mut self) -> Mor {
        let a = self.obj();
        self.mor_from(&a)
    }

    pub fn composable_pair(&mut self) -> (Mor, Mor) {
        let f = self.mor();
        let g = self.mor_from(&f.cod);
        (f, g)
    }

    pub fn composable_triple(&mut self) -> (Mor, Mor, Mor) {
        let (f, g) = self.composable_pair();
        let h = self.mor_from(&g.cod);
        (f, g, h)
    }
}

/// Seeded randomized law suite for the colimit's bipermutative structure.
/// Each named law draws from its own deterministic stream (derived from
/// `seed`) and checks `samples` instances: composition associativity, ⊗
/// bifunctoriality with the interchange square, naturality and involutivity
/// of the multiplicative twist, strictness of right distributivity on
/// morphisms, the twist route for left distributivity, the distributivity
/// pentagon, both twist interchange identities, and associativity of left
/// distributivity.
pub fn check_hocolim_laws(h: &Hocolim, seed: u64, samples: usize, bound: &Bound) -> Report {
    let mut rep = Report::default();
    let comp = |rep: &mut Report, law: &str, g: &Mor, f: &Mor| -> Option<Mor> {
        match h.compose(g, f) {
            Ok(m) => Some(m),
            Err(e) => {
                rep.check(law, false, || format!("composite undefined: {e}"));
                None
            }
        }
    };
    let tau = |rep: &mut Report, law: &str, a: &Term, b: &Term| -> Option<Mor> {
        match h.tau_tensor(a, b) {
            Ok(m) => Some(m),
            Err(e) => {
                rep.check(law, false, || format!("twist undefined: {e}"));
                None
            }
        }
    };
    let stream = |k: u64| Sampler::new(h.clone(), seed.wrapping_mul(1_000_003).wrapping_add(k), *bound);

    let mut s = stream(1);
    for _ in 0..samples {
        let law = "composition-associativity";
        let (f, g, k) = s.composable_triple();
        let (Some(gf), Some(kg)) = (comp(&mut rep, law, &g, &f), comp(&mut rep, law, &k, &g))
        else {
            continue;
        };
        let (Some(lhs), Some(rhs)) = (comp(&mut rep, law, &k, &gf), comp(&mut rep, law, &kg, &f))
        else {
            continue;
        };
        rep.check(law, lhs == rhs, || format!("(k∘g)∘f != k∘(g∘f) on {f:?}; {g:?}; {k:?}"));
    }

    let mut s = stream(2);
    for _ in 0..samples {
        let law = "tensor-interchange";
        let f = s.mor();
        let g = s.mor();
        let via_dom = comp(
            &mut rep,
            law,
            &h.tensor_mor_right(&f, &g.cod),
            &h.tensor_mor_left(&f.dom, &g),
        );
        let via_cod = comp(
            &mut rep,
            law,
            &h.tensor_mor_left(&f.cod, &g),
            &h.tensor_mor_right(&f, &g.dom),
        );
        let (Some(lhs), Some(rhs)) = (via_dom, via_cod) else { continue };
        let both = h.tensor_mor(&f, &g);
        rep.check(law, lhs == rhs && lhs == both, || {
            format!("(f⊗id)∘(id⊗g), (id⊗g)∘(f⊗id), f⊗g disagree on {f:?}; {g:?}")
        });
    }

    let mut s = stream(3);
    for _ in 0..samples {
        let law = "tau-naturality";
        let f = s.mor();
        let g = s.mor();
        let (Some(t_dom), Some(t_cod)) = (
            tau(&mut rep, law, &f.dom, &g.dom),
            tau(&mut rep, law, &f.cod, &g.cod),
        ) else {
            continue;
        };
        let (Some(lhs), Some(rhs)) = (
            comp(&mut rep, law, &t_cod, &h.tensor_mor(&f, &g)),
            comp(&mut rep, law, &h.tensor_mor(&g, &f), &t_dom),
        ) else {
            continue;
        };
        rep.check(law, lhs == rhs, || format!("τ⊗ not natural on {f:?}; {g:?}"));
    }

    let mut s = stream(4);
    for _ in 0..samples {
        let law = "tau-involution";
        let a = s.obj();
        let b = s.obj();
        let (Some(t1), Some(t2)) =
            (tau(&mut rep, law, &a, &b), tau(&mut rep, law, &b, &a))
        else {
            continue;
        };
        let Some(round) = comp(&mut rep, law, &t2, &t1) else { continue };
        rep.check(law, round == h.id(&h.tensor(&a, &b)), || {
            format!("τ⊗² != id on {a:?}; {b:?}")
        });
    }

    let mut s = stream(5);
    for _ in 0..samples {
        let law = "dr-identity";
        let f = s.mor();
        let g = s.mor();
        let k = s.mor();
        let lhs = h.tensor_mor(&h.oplus_mor(&f, &g), &k);
        let rhs = h.oplus_mor(&h.tensor_mor(&f, &k), &h.tensor_mor(&g, &k));
        rep.check(law, lhs == rhs, || {
            format!("(f⊕g)⊗k != (f⊗k)⊕(g⊗k) on {f:?}; {g:?}; {k:?}")
        });
    }

    let mut s = stream(6);
    for _ in 0..samples {
        let law = "dl-twist-route";
        let a = s.obj();
        let b = s.obj();
        let bp = s.obj();
        let (Some(t1), Some(t2), Some(t3)) = (
            tau(&mut rep, law, &a, &b),
            tau(&mut rep, law, &a, &bp),
            tau(&mut rep, law, &h.oplus(&b, &bp), &a),
        ) else {
            continue;
        };
        let Some(derived) = comp(&mut rep, law, &t3, &h.oplus_mor(&t1, &t2)) else { continue };
        rep.check(law, h.dl(&a, &b, &bp) == derived, || {
            format!("d_ℓ != τ⊗∘(τ⊗⊕τ⊗) on {a:?}; {b:?}; {bp:?}")
        });
    }

    let mut s = stream(7);
    for _ in 0..samples {
        let law = "pentagon";
        let a = s.obj();
        let ap = s.obj();
        let b = s.obj();
        let bp = s.obj();
        let upper = h.oplus_mor(&h.dl(&a, &b, &bp), &h.dl(&ap, &b, &bp));
        let swap = h.oplus_mor(
            &h.oplus_mor(
                &h.id(&h.tensor(&a, &b)),
                &h.twist_oplus(&h.tensor(&a, &bp), &h.tensor(&ap, &b)),
            ),
            &h.id(&h.tensor(&ap, &bp)),
        );
        let Some(lower) = comp(&mut rep, law, &h.dl(&h.oplus(&a, &ap), &b, &bp), &swap) else {
            continue;
        };
        rep.check(law, upper == lower, || {
            format!("pentagon fails on {a:?}, {ap:?}; {b:?}, {bp:?}")
        });
    }

    let mut s = stream(8);
    for _ in 0..samples {
        let law = "oplus-otimes-interchange";
        let a = s.obj();
        let b = s.obj();
        let bp = s.obj();
        let (Some(tb), Some(tbp)) =
            (tau(&mut rep, law, &a, &b), tau(&mut rep, law, &a, &bp))
        else {
            continue;
        };
        let lhs = comp(
            &mut rep,
            law,
            &h.twist_oplus(&h.tensor(&b, &a), &h.tensor(&bp, &a)),
            &h.oplus_mor(&tb, &tbp),
        );
        let rhs = comp(
            &mut rep,
            law,
            &h.oplus_mor(&tbp, &tb),
            &h.twist_oplus(&h.tensor(&a, &b), &h.tensor(&a, &bp)),
        );
        let (Some(lhs), Some(rhs)) = (lhs, rhs) else { continue };
        rep.check(law, lhs == rhs, || {
            format!("γ⊕∘(τ⊗⊕τ⊗) != (τ⊗⊕τ⊗)∘γ⊕ on {a:?}; {b:?}, {bp:?}")
        });
    }

    let mut s = stream(9);
    for _ in 0..samples {
        let law = "twist-tensor-interchange";
        let a = s.obj();
        let b = s.obj();
        let bp = s.obj();
        let (Some(t_sum), Some(t_swapped)) = (
            tau(&mut rep, law, &a, &h.oplus(&b, &bp)),
            tau(&mut rep, law, &a, &h.oplus(&bp, &b)),
        ) else {
            continue;
        };
        let lhs = comp(
            &mut rep,
            law,
            &h.tensor_mor(&h.twist_oplus(&b, &bp), &h.id(&a)),
            &t_sum,
        );
        let rhs = comp(
            &mut rep,
            law,
            &t_swapped,
            &h.tensor_mor_left(&a, &h.twist_oplus(&b, &bp)),
        );
        let (Some(lhs), Some(rhs)) = (lhs, rhs) else { continue };
        rep.check(law, lhs == rhs, || {
            format!("(γ⊕⊗id)∘τ⊗ != τ⊗∘(id⊗γ⊕) on {a:?}; {b:?}, {bp:?}")
        });
    }

    let mut s = stream(10);
    for _ in 0..samples {
        let law = "dl-associativity";
        let a = s.obj();
        let b = s.obj();
        let e = s.obj();
        let ep = s.obj();
        let lhs = h.dl(&h.tensor(&a, &b), &e, &ep);
        let rhs = comp(
            &mut rep,
            law,
            &h.tensor_mor_left(&a, &h.dl(&b, &e, &ep)),
            &h.dl(&a, &h.tensor(&b, &e), &h.tensor(&b, &ep)),
        );
        let Some(rhs) = rhs else { continue };
        rep.check(law, lhs == rhs, || {
            format!("d_ℓ not associative on {a:?}; {b:?}; {e:?}, {ep:?}")
        });
    }

    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::{build_gr, CubeObj};
    use crate::effcat::Bound;
    use crate::examples::{discrete_rig, finite_sets_e, FiniteRigTable};
    use crate::indexing::JObj;
    use crate::permcat::check_permutative;

    fn he() -> Hocolim {
        Hocolim::new(build_gr(&finite_sets_e()))
    }

    fn g0_cube(n: i64) -> Term {
        CubeObj::new(JObj::zero(), vec![Term::int(n)]).to_term()
    }

    fn g0() -> Term {
        JObj::zero().to_term()
    }

    #[test]
    fn oplus_is_concatenation_and_twist_is_involutive() {
        let h = he();
        let a = h_obj(&[(g0(), g0_cube(1))]);
        let b = h_obj(&[(g0(), g0_cube(2))]);
        let s = h.oplus(&a, &b);
        assert_eq!(h_seq(&s).len(), 2);
        let t = h.twist_oplus(&a, &b);
        let t2 = h.twist_oplus(&b, &a);
        assert_eq!(h.compose(&t2, &t).unwrap(), h.id(&s));
    }

    #[test]
    fn identities_are_neutral_for_composition() {
        let h = he();
        let b = Bound::default().with_size(1).with_count(16).with_depth(2);
        let mors = h.as_permcat().base.enum_morphisms(&b);
        assert!(mors.len() > 5);
        for f in &mors {
            assert_eq!(h.compose(&h.id(&f.cod), f).unwrap(), *f);
            assert_eq!(h.compose(f, &h.id(&f.dom)).unwrap(), *f);
        }
    }

    #[test]
    fn composition_inserts_the_regrouping_twist() {
        let h = he();
        let c2 = g0_cube(2);
        let c3 = g0_cube(3);
        let a = h_obj(&[(g0(), c2.clone()), (g0(), c3.clone())]);
        // Swap the two summands, then fold them into one.
        let f = h.perm_mor(&a, &Perm::new(vec![2, 1]));
        let fib = h.diagram.fiber_at(&g0());
        let folded = fib.add(&c3, &c2);
        let cod = h_obj(&[(g0(), folded.clone())]);
        let g = h.mor(
            &f.cod,
            &cod,
            &Surj::new(1, vec![1, 1]),
            &[h.diagram.j.id(&g0()), h.diagram.j.id(&g0())],
            &[fib.id(&folded)],
        );
        let comp = h.compose(&g, &f).unwrap();
        let (_, _, rho) = h_parts(&comp);
        // The composite regroups (c2, c3) into (c3, c2): its single
        // comparison morphism is the additive twist of the fiber.
        assert_eq!(rho[0], fib.gamma(&c2, &c3));
    }

    #[test]
    fn tensor_of_singletons_is_the_entrywise_product() {
        let h = he();
        let a = h_obj(&[(g0(), g0_cube(2))]);
        let b = h_obj(&[(g0(), g0_cube(3))]);
        let t = h.tensor(&a, &b);
        let seq = h_seq(&t);
        assert_eq!(seq.len(), 1);
        assert_eq!(seq[0].1, g0_cube(6));
    }

    #[test]
    fn unit_is_strict_and_tau_with_unit_is_identity() {
        let h = he();
        let a = h_obj(&[(g0(), g0_cube(2)), (g0(), g0_cube(1))]);
        assert_eq!(h.tensor(&h.unit(), &a), a);
        assert_eq!(h.tensor(&a, &h.unit()), a);
        let tau = h.tau_tensor(&h.unit(), &a).unwrap();
        assert_eq!(tau, h.id(&a));
        // f ⊗ id_unit = f on sampled morphisms.
        let b = Bound::default().with_size(1).with_count(10).with_depth(2);
        for f in h.as_permcat().base.enum_morphisms(&b).iter().take(8) {
            assert_eq!(h.tensor_mor(f, &h.id(&h.unit())), *f);
        }
    }

    #[test]
    fn right_distributivity_is_the_identity() {
        let h = he();
        let a = h_obj(&[(g0(), g0_cube(1)), (g0(), g0_cube(2))]);
        let ap = h_obj(&[(g0(), g0_cube(3))]);
        let b = h_obj(&[(g0(), g0_cube(2))]);
        assert_eq!(
            h.tensor(&h.oplus(&a, &ap), &b),
            h.oplus(&h.tensor(&a, &b), &h.tensor(&ap, &b))
        );
        assert!(xi_perm(1, 1, 1).is_identity());
    }

    #[test]
    fn left_distributivity_matches_the_twist_route() {
        let h = he();
        let a = h_obj(&[(g0(), g0_cube(2))]);
        let b = h_obj(&[(g0(), g0_cube(1)), (g0(), g0_cube(2))]);
        let bp = h_obj(&[(g0(), g0_cube(3))]);
        let d = h.dl(&a, &b, &bp);
        let t1 = h.tau_tensor(&a, &b).unwrap();
        let t2 = h.tau_tensor(&a, &bp).unwrap();
        let t3 = h.tau_tensor(&h.oplus(&b, &bp), &a).unwrap();
        let derived = h.compose(&t3, &h.oplus_mor(&t1, &t2)).unwrap();
        assert_eq!(d, derived);
    }

    #[test]
    fn unit_embedding_is_multiplicatively_strict() {
        let h = he();
        let p = h.as_permcat();
        let g = h.unit_embed(&p);
        let one = h.diagram.one.clone();
        assert_eq!(g.f.obj(&one), h.unit());
        let f0 = h.diagram.fiber_at(&g0());
        let (x, y) = (g0_cube(2), g0_cube(3));
        let xy = h.diagram.tens(&g0(), &x, &g0(), &y);
        assert_eq!(g.f.obj(&xy), h.tensor(&g.f.obj(&x), &g.f.obj(&y)));
        // η⊕ has a non-injective first coordinate, so it cannot be invertible.
        let e = (g.eta)(&x, &y);
        let (psi, _, _) = h_parts(&e);
        assert_eq!(psi.source(), 2);
        assert_eq!(psi.target(), 1);
        let _ = f0;
    }

    #[test]
    fn zeroless_permutative_suite_passes() {
        let h = Hocolim::new(build_gr(&discrete_rig(&FiniteRigTable::z2())));
        let b = Bound::default().with_size(1).with_count(20).with_depth(2).with_tuples(300);
        let rep = check_permutative(&h.as_permcat(), &b);
        assert!(rep.ok(), "{}", rep.summary());
    }

    #[test]
    fn seeded_law_suite_is_clean_and_deterministic() {
        let h = he();
        let b = Bound::default().with_size(1).with_count(16).with_depth(2);
        let rep = check_hocolim_laws(&h, 11, 20, &b);
        assert!(rep.ok(), "{}", rep.summary());
        assert_eq!(rep.checked, 200);
        let again = check_hocolim_laws(&h, 11, 20, &b);
        assert_eq!(again.checked, rep.checked);
        assert!(again.ok());
    }

    #[test]
    fn sampler_draws_valid_composable_morphisms() {
        let h = he();
        let b = Bound::default().with_size(1).with_count(16).with_depth(2);
        let mut s = Sampler::new(h.clone(), 7, b);
        for _ in 0..40 {
            let (f, g, k) = s.composable_triple();
            let left = h.compose(&k, &h.compose(&g, &f).unwrap()).unwrap();
            let right = h.compose(&h.compose(&k, &g).unwrap(), &f).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn induced_identity_preserves_composition() {
        let h = Hocolim::new(build_gr(&discrete_rig(&FiniteRigTable::z2())));
        let ind = induced_morphism(&LaxRig::identity(&h.diagram));
        let comp = (ind.component)(&Term::s("*"));
        let b = Bound::default().with_size(1).with_count(12).with_depth(2);
        let mors = h.as_permcat().base.enum_morphisms(&b);
        for f in &mors {
            assert_eq!(comp.obj(&f.dom), f.dom);
            assert_eq!(comp.mor(f), *f);
        }
        let mut s = Sampler::new(h.clone(), 3, b);
        for _ in 0..20 {
            let (f, g) = s.composable_pair();
            let lhs = comp.mor(&h.compose(&g, &f).unwrap());
            let rhs = h.compose(&comp.mor(&g), &comp.mor(&f)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
