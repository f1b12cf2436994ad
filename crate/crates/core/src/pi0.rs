//! Connected components at a bound, and the class-level ring structure.
//!
//! Four layers: a union-find partition of a category's enumerated objects by
//! zigzags of enumerated morphisms; an independent Grothendieck-ring oracle
//! computed by brute-force congruence closure over bounded formal
//! differences; the alternating-sum invariant sending a colimit object to
//! that ring; and executable additive-inverse witnesses — for each component
//! a partner object together with a machine-checked zigzag from the sum down
//! to a manifestly zero object.

use crate::cube::CubeObj;
use crate::effcat::{Bound, Cat, CatError, Report};
use crate::examples::RigPresentation;
use crate::indexing::{FinInj, JMor, JObj, Perm, SignedSubset};
use crate::term::{Mor, Term};
use crate::thomason::{h_obj, h_parts, h_seq, Hocolim, Surj};
use crate::zeros::{is_adjoined_zero, DerivedHocolim};
use std::collections::{BTreeMap, BTreeSet};

/// Hard ceiling on enumerated objects per partition, independent of the
/// caller's bound: the edge pass is quadratic in this number.
const MAX_OBJECTS: usize = 6000;

// ---------------------------------------------------------------------------
// Union-find partitions
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Default)]
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn push(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Accumulates objects and undirected morphism edges before freezing the
/// partition. Objects may be inserted lazily by `edge`.
#[derive(Clone, Debug, Default)]
pub struct Pi0Builder {
    objects: Vec<Term>,
    index: BTreeMap<Term, usize>,
    uf: UnionFind,
}

impl Pi0Builder {
    pub fn new() -> Pi0Builder {
        Pi0Builder::default()
    }

    pub fn insert(&mut self, t: &Term) -> usize {
        if let Some(&i) = self.index.get(t) {
            return i;
        }
        let i = self.uf.push();
        self.objects.push(t.clone());
        self.index.insert(t.clone(), i);
        i
    }

    /// Records that `a` and `b` are connected (by a morphism in either
    /// direction).
    pub fn edge(&mut self, a: &Term, b: &Term) {
        let (i, j) = (self.insert(a), self.insert(b));
        self.uf.union(i, j);
    }

    pub fn finish(mut self, bound: &Bound) -> Pi0Partition {
        let n = self.objects.len();
        let mut class_ids = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut root_class: BTreeMap<usize, usize> = BTreeMap::new();
        for i in 0..n {
            let r = self.uf.find(i);
            let c = *root_class.entry(r).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            class_ids[i] = c;
            classes[c].push(i);
        }
        Pi0Partition {
            objects: self.objects,
            index: self.index,
            class_ids,
            classes,
            bound: bound.clone(),
        }
    }
}

/// A frozen partition of enumerated objects into connected components.
#[derive(Clone, Debug)]
pub struct Pi0Partition {
    pub objects: Vec<Term>,
    index: BTreeMap<Term, usize>,
    class_ids: Vec<usize>,
    /// Object indices per class, in insertion order.
    pub classes: Vec<Vec<usize>>,
    /// The bound the enumeration ran at.
    pub bound: Bound,
}

impl Pi0Partition {
    pub fn class_of(&self, t: &Term) -> Option<usize> {
        self.index.get(t).map(|&i| self.class_ids[i])
    }

    /// True when both objects were enumerated and fell in the same class.
    pub fn same(&self, a: &Term, b: &Term) -> bool {
        match (self.class_of(a), self.class_of(b)) {
            (Some(x), Some(y)) => x == y,
            _ => false,
        }
    }

    /// The least-complex object of a class: fewest colimit summands first
    /// (non-sequence objects, like an isolated zero, count as zero), ties
    /// broken by term order.
    pub fn representative(&self, class: usize) -> &Term {
        self.classes[class]
            .iter()
            .map(|&i| &self.objects[i])
            .min_by_key(|t| (object_weight(t), (*t).clone()))
            .expect("classes are nonempty")
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }
}

fn object_weight(t: &Term) -> usize {
    if t.is_tag("h") {
        h_seq(t).len()
    } else {
        0
    }
}

/// Connected components of the enumerated objects of `c` under zigzags of
/// enumerated morphisms, at the given bound. Deterministic for a fixed bound.
pub fn pi0(c: &Cat, b: &Bound) -> Result<Pi0Partition, CatError> {
    let objs = c.enum_objects(b);
    if objs.len() > MAX_OBJECTS {
        return Err(CatError::Resource(format!(
            "{} objects exceed the component-search ceiling {MAX_OBJECTS}",
            objs.len()
        )));
    }
    let mut bld = Pi0Builder::new();
    for o in &objs {
        bld.insert(o);
    }
    for a in &objs {
        for z in &objs {
            for m in c.enum_homs(a, z, b) {
                bld.edge(&m.dom, &m.cod);
            }
        }
    }
    Ok(bld.finish(b))
}

/// True when the partitions at the two bounds agree on every object
/// enumerated at the first (smaller) bound. Raising a bound can only merge
/// classes, so agreement here is the stabilization criterion.
pub fn pi0_stable(c: &Cat, small: &Bound, large: &Bound) -> Result<bool, CatError> {
    let p1 = pi0(c, small)?;
    let p2 = pi0(c, large)?;
    for (i, a) in p1.objects.iter().enumerate() {
        if p2.class_of(a).is_none() {
            return Ok(false);
        }
        for b in p1.objects.iter().skip(i + 1) {
            if p1.same(a, b) != p2.same(a, b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// The Grothendieck-ring oracle
// ---------------------------------------------------------------------------

/// A formal difference of generator multisets in canonical form: the
/// minimal pair of its congruence class, with no generator on both sides.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct K0Elem {
    pub pos: Vec<i64>,
    pub neg: Vec<i64>,
}

impl K0Elem {
    pub fn is_zero(&self) -> bool {
        self.pos.iter().all(|&v| v == 0) && self.neg.iter().all(|&v| v == 0)
    }
}

/// The Grothendieck ring of a presented commutative monoid, computed by
/// exhaustive congruence closure over all formal differences whose
/// multiplicities stay inside a window. Built once; all arithmetic reduces
/// into the precomputed table.
pub struct GrothendieckRing {
    gens: usize,
    window: i64,
    relations: Vec<(Vec<i64>, Vec<i64>)>,
    mul_table: Vec<Vec<Vec<i64>>>,
    vindex: BTreeMap<Vec<i64>, usize>,
    pair_rep: Vec<K0Elem>,
}

/// Ceiling on (difference pairs)², the cost of the closure's edge pass.
const MAX_PAIRS: usize = 4_000_000;

pub fn grothendieck_oracle(p: &RigPresentation, window: i64) -> Result<GrothendieckRing, CatError> {
    let gens = p.gens.len();
    assert!(window >= 1, "window must admit single generators");
    let mut vcount: usize = 1;
    for _ in 0..gens {
        vcount = vcount
            .checked_mul((window + 1) as usize)
            .ok_or_else(|| CatError::Resource("difference window overflows".into()))?;
    }
    if vcount * vcount > MAX_PAIRS {
        return Err(CatError::Resource(format!(
            "{vcount}² bounded differences exceed the closure ceiling"
        )));
    }

    // All multiplicity vectors inside the window, in lexicographic order.
    let mut vecs: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..gens {
        vecs = vecs
            .into_iter()
            .flat_map(|v| {
                (0..=window).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    let vindex: BTreeMap<Vec<i64>, usize> =
        vecs.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();

    let in_window = |v: &[i64]| v.iter().all(|&x| 0 <= x && x <= window);
    let shift = |v: &[i64], g: usize| {
        let mut w = v.to_vec();
        w[g] += 1;
        w
    };
    let rewrite = |v: &[i64], from: &[i64], to: &[i64]| -> Option<Vec<i64>> {
        if v.iter().zip(from).any(|(&x, &f)| x < f) {
            return None;
        }
        let w: Vec<i64> = v.iter().zip(from).zip(to).map(|((&x, &f), &t)| x - f + t).collect();
        in_window(&w).then_some(w)
    };

    let mut uf = UnionFind::default();
    for _ in 0..vcount * vcount {
        uf.push();
    }
    let pid = |i: usize, j: usize| i * vcount + j;
    for (i, a) in vecs.iter().enumerate() {
        for (j, b) in vecs.iter().enumerate() {
            // Cancellation: adding the same generator to both sides.
            for g in 0..gens {
                let (sa, sb) = (shift(a, g), shift(b, g));
                if in_window(&sa) && in_window(&sb) {
                    uf.union(pid(i, j), pid(vindex[&sa], vindex[&sb]));
                }
            }
            // Monoid relations applied on either side.
            for (l, r) in &p.relations {
                if let Some(a2) = rewrite(a, l, r) {
                    uf.union(pid(i, j), pid(vindex[&a2], j));
                }
                if let Some(b2) = rewrite(b, l, r) {
                    uf.union(pid(i, j), pid(i, vindex[&b2]));
                }
            }
        }
    }

    // Canonical representative per class: least total size, then term order.
    let mut best: BTreeMap<usize, K0Elem> = BTreeMap::new();
    for (i, a) in vecs.iter().enumerate() {
        for (j, b) in vecs.iter().enumerate() {
            let root = uf.find(pid(i, j));
            let cand = K0Elem { pos: a.clone(), neg: b.clone() };
            let key = |e: &K0Elem| {
                (e.pos.iter().sum::<i64>() + e.neg.iter().sum::<i64>(), e.clone())
            };
            match best.get(&root) {
                Some(cur) if key(cur) <= key(&cand) => {}
                _ => {
                    best.insert(root, cand);
                }
            }
        }
    }
    let mut pair_rep = Vec::with_capacity(vcount * vcount);
    for i in 0..vcount {
        for j in 0..vcount {
            pair_rep.push(best[&uf.find(pid(i, j))].clone());
        }
    }

    Ok(GrothendieckRing {
        gens,
        window,
        relations: p.relations.clone(),
        mul_table: p.mul.clone(),
        vindex,
        pair_rep,
    })
}

impl GrothendieckRing {
    fn in_window(&self, v: &[i64]) -> bool {
        v.iter().all(|&x| 0 <= x && x <= self.window)
    }

    /// Canonicalizes an arbitrary formal difference: cancel the common part,
    /// then shrink with size-decreasing relation rewrites until both sides
    /// fit in the window, then look up the closure's representative.
    pub fn class(&self, pos: &[i64], neg: &[i64]) -> Result<K0Elem, CatError> {
        assert_eq!(pos.len(), self.gens);
        assert_eq!(neg.len(), self.gens);
        let mut p = pos.to_vec();
        let mut n = neg.to_vec();
        for g in 0..self.gens {
            let m = p[g].min(n[g]);
            p[g] -= m;
            n[g] -= m;
        }
        while !(self.in_window(&p) && self.in_window(&n)) {
            let mut progressed = false;
            for (l, r) in &self.relations {
                for (from, to) in [(l, r), (r, l)] {
                    if to.iter().sum::<i64>() >= from.iter().sum::<i64>() {
                        continue;
                    }
                    for side in [&mut p, &mut n] {
                        if side.iter().zip(from.iter()).all(|(&x, &f)| x >= f) {
                            for ((x, &f), &t) in side.iter_mut().zip(from).zip(to) {
                                *x = *x - f + t;
                            }
                            progressed = true;
                            break;
                        }
                    }
                    if progressed {
                        break;
                    }
                }
                if progressed {
                    break;
                }
            }
            if !progressed {
                return Err(CatError::Resource(format!(
                    "difference {p:?} − {n:?} does not reduce into window {}",
                    self.window
                )));
            }
        }
        let i = self.vindex[&p];
        let j = self.vindex[&n];
        Ok(self.pair_rep[i * self.vindex.len() + j].clone())
    }

    pub fn zero(&self) -> K0Elem {
        K0Elem { pos: vec![0; self.gens], neg: vec![0; self.gens] }
    }

    pub fn add(&self, x: &K0Elem, y: &K0Elem) -> Result<K0Elem, CatError> {
        let pos: Vec<i64> = x.pos.iter().zip(&y.pos).map(|(a, b)| a + b).collect();
        let neg: Vec<i64> = x.neg.iter().zip(&y.neg).map(|(a, b)| a + b).collect();
        self.class(&pos, &neg)
    }

    pub fn neg(&self, x: &K0Elem) -> Result<K0Elem, CatError> {
        self.class(&x.neg, &x.pos)
    }

    fn vec_mul(&self, u: &[i64], v: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.gens];
        for (i, &a) in u.iter().enumerate() {
            for (j, &b) in v.iter().enumerate() {
                for (o, &m) in out.iter_mut().zip(&self.mul_table[i][j]) {
                    *o += a * b * m;
                }
            }
        }
        out
    }

    pub fn mul(&self, x: &K0Elem, y: &K0Elem) -> Result<K0Elem, CatError> {
        let pp = self.vec_mul(&x.pos, &y.pos);
        let nn = self.vec_mul(&x.neg, &y.neg);
        let pn = self.vec_mul(&x.pos, &y.neg);
        let np = self.vec_mul(&x.neg, &y.pos);
        let pos: Vec<i64> = pp.iter().zip(&nn).map(|(a, b)| a + b).collect();
        let neg: Vec<i64> = pn.iter().zip(&np).map(|(a, b)| a + b).collect();
        self.class(&pos, &neg)
    }

    /// All distinct classes whose canonical form fits within `span`.
    pub fn elements(&self, span: i64) -> Vec<K0Elem> {
        let span = span.min(self.window);
        let mut out: BTreeSet<K0Elem> = BTreeSet::new();
        for (v, &i) in &self.vindex {
            if !v.iter().all(|&x| x <= span) {
                continue;
            }
            for (w, &j) in &self.vindex {
                if !w.iter().all(|&x| x <= span) {
                    continue;
                }
                out.insert(self.pair_rep[i * self.vindex.len() + j].clone());
            }
        }
        out.into_iter().collect()
    }
}

// ---------------------------------------------------------------------------
// The alternating-sum invariant
// ---------------------------------------------------------------------------

/// Σᵢ Σ_{U⊆Tᵢ} (−1)^{|U|}·[entry(i,U)] in the oracle ring: each colimit
/// summand contributes its cube entries with sign the parity of the corner.
/// Zero cubes and adjoined zeros contribute nothing, and neither does any
/// summand whose grade leaves an ambient direction unused: such a summand
/// admits a morphism into a zero fiber (send the free direction negative),
/// so it lies in the zero component and only full grades can carry a value.
pub fn alt_sum(
    t: &Term,
    p: &RigPresentation,
    gr: &GrothendieckRing,
) -> Result<K0Elem, CatError> {
    let g = p.gens.len();
    let mut pos = vec![0i64; g];
    let mut neg = vec![0i64; g];
    if t.is_tag("h") {
        for (_, o) in h_seq(t) {
            if CubeObj::is_zero_term(&o) || is_adjoined_zero(&o) {
                continue;
            }
            if !o.is_tag("cube") {
                return Err(CatError::Unsupported(format!(
                    "summand {o:?} is not a cube, a zero cube, or an adjoined zero"
                )));
            }
            let c = CubeObj::from_term(&o);
            if c.owner.t.elems().len() < c.owner.n {
                continue;
            }
            for mask in 0..(1usize << c.dim()) {
                let v = (p.class_of)(c.entry(mask));
                let acc = if mask.count_ones() % 2 == 0 { &mut pos } else { &mut neg };
                for (a, b) in acc.iter_mut().zip(v) {
                    *a += b;
                }
            }
        }
    } else if !is_adjoined_zero(t) {
        return Err(CatError::Unsupported(format!(
            "object {t:?} is neither a colimit sequence nor an adjoined zero"
        )));
    }
    gr.class(&pos, &neg)
}

// ---------------------------------------------------------------------------
// Additive-inverse witnesses
// ---------------------------------------------------------------------------

/// One summand's marching orders: where it is transported, what it becomes
/// there, what partner cancels it, and along which top direction the
/// cancelling diagonal descends (`None` for summands already in a zero
/// fiber).
struct EntryPlan {
    leg: JMor,
    star: JObj,
    a_star: Term,
    partner: Term,
    top: Option<i64>,
}

fn flip_top(c: &CubeObj) -> CubeObj {
    let k = c.dim();
    assert!(k >= 1, "flip needs at least one direction");
    let top = 1usize << (k - 1);
    let entries: Vec<Term> =
        (0..(1usize << k)).map(|m| c.entry(m ^ top).clone()).collect();
    CubeObj::new(c.owner.clone(), entries)
}

fn is_flip_symmetric(c: &CubeObj) -> bool {
    let top = 1usize << (c.dim() - 1);
    (0..(1usize << c.dim())).all(|m| c.entry(m) == c.entry(m ^ top))
}

fn plan_entry(h: &Hocolim, x: &JObj, o: &Term) -> Result<EntryPlan, CatError> {
    if !x.t.is_all_positive() {
        // Already in a zero fiber: cancel against the zero object in place.
        if !CubeObj::is_zero_term(o) {
            return Err(CatError::Structural(format!(
                "fiber over {x:?} holds only the zero object, found {o:?}"
            )));
        }
        return Ok(EntryPlan {
            leg: JMor::identity(x),
            star: x.clone(),
            a_star: o.clone(),
            partner: o.clone(),
            top: None,
        });
    }
    if x.t.elems().is_empty() {
        // No direction to flip along: first extend by zero into a fresh one.
        let n1 = x.n + 1;
        let phi = FinInj::new(n1, (1..=x.n).collect());
        let star = JObj::new(n1, SignedSubset::new(n1, vec![n1 as i64]));
        let leg = JMor::new(phi, x.clone(), star.clone())?;
        let a_star = h.diagram.trans(&leg.to_mor()).obj(o);
        let partner = flip_top(&CubeObj::from_term(&a_star)).to_term();
        return Ok(EntryPlan { leg, star, a_star, partner, top: Some(n1 as i64) });
    }
    let d = *x.t.elems().last().expect("nonempty subset");
    let partner = flip_top(&CubeObj::from_term(o)).to_term();
    Ok(EntryPlan {
        leg: JMor::identity(x),
        star: x.clone(),
        a_star: o.clone(),
        partner,
        top: Some(d),
    })
}

/// An additive-inverse certificate: the partner object and a zigzag of
/// colimit morphisms connecting `object ⊕ partner` to a manifestly zero
/// object. `false` direction flags mark stages pointing backwards.
#[derive(Clone, Debug)]
pub struct InverseWitness {
    pub object: Term,
    pub partner: Term,
    pub zigzag: Vec<(bool, Mor)>,
}

/// Builds the witness for a colimit object: flip each cube summand along its
/// top direction (extending by zero first when there is none), add it to the
/// original, descend the flip-symmetric sum along the diagonal, and step
/// into the neighboring zero fiber.
pub fn inverse_witness(h: &Hocolim, obj: &Term) -> Result<InverseWitness, CatError> {
    if !obj.is_tag("h") {
        return Err(CatError::Unsupported(format!(
            "witnesses are built for colimit sequences, got {obj:?}"
        )));
    }
    let seq = h_seq(obj);
    let k = seq.len();
    let plans: Vec<EntryPlan> = seq
        .iter()
        .map(|(xt, o)| plan_entry(h, &JObj::from_term(xt), o))
        .collect::<Result<_, _>>()?;
    let partner_seq: Vec<(Term, Term)> =
        plans.iter().map(|p| (p.star.to_term(), p.partner.clone())).collect();
    let partner = h_obj(&partner_seq);

    // Stage 1: transport every original summand to its flip-ready grade.
    let s0 = h.oplus(obj, &partner);
    let mut s1_seq: Vec<(Term, Term)> =
        plans.iter().map(|p| (p.star.to_term(), p.a_star.clone())).collect();
    s1_seq.extend(partner_seq.iter().cloned());
    let s1 = h_obj(&s1_seq);
    let mut ell1: Vec<Mor> = plans.iter().map(|p| p.leg.to_mor()).collect();
    ell1.extend(plans.iter().map(|p| h.diagram.j.id(&p.star.to_term())));
    let rho1: Vec<Mor> =
        s1_seq.iter().map(|(x, o)| h.diagram.fiber_at(x).id(o)).collect();
    let f1 = h.mor(&s0, &s1, &Surj::identity(2 * k), &ell1, &rho1);

    // Stage 2: interleave each summand with its partner.
    let mut images: Vec<usize> = (1..=k).map(|i| 2 * i - 1).collect();
    images.extend((1..=k).map(|i| 2 * i));
    let f2 = h.perm_mor(&s1, &Perm::new(images));
    let s2 = f2.cod.clone();

    // Stage 3: add each adjacent pair inside its fiber.
    let sums: Vec<Term> = plans
        .iter()
        .map(|p| h.diagram.fiber_at(&p.star.to_term()).add(&p.a_star, &p.partner))
        .collect();
    for (p, c) in plans.iter().zip(&sums) {
        if p.top.is_some() && !is_flip_symmetric(&CubeObj::from_term(c)) {
            return Err(CatError::Unsupported(format!(
                "sum {c:?} is not symmetric under the top flip; diagonal descent unavailable"
            )));
        }
    }
    let s3_seq: Vec<(Term, Term)> = plans
        .iter()
        .zip(&sums)
        .map(|(p, c)| (p.star.to_term(), c.clone()))
        .collect();
    let s3 = h_obj(&s3_seq);
    let psi3 = Surj::new(k, (1..=k).flat_map(|j| [j, j]).collect());
    let ell3: Vec<Mor> =
        h_seq(&s2).iter().map(|(x, _)| h.diagram.j.id(x)).collect();
    let rho3: Vec<Mor> =
        s3_seq.iter().map(|(x, o)| h.diagram.fiber_at(x).id(o)).collect();
    let f3 = h.mor(&s2, &s3, &psi3, &ell3, &rho3);

    // Stage 4 (backward): each symmetric sum is the diagonal image of its
    // lower half, one grade down along the top direction.
    let mut s4_seq: Vec<(Term, Term)> = Vec::with_capacity(k);
    let mut diag_legs: Vec<JMor> = Vec::with_capacity(k);
    let mut drops: Vec<JObj> = Vec::with_capacity(k);
    for (p, c) in plans.iter().zip(&sums) {
        match p.top {
            None => {
                s4_seq.push((p.star.to_term(), c.clone()));
                diag_legs.push(JMor::identity(&p.star));
                drops.push(p.star.clone());
            }
            Some(d) => {
                let cc = CubeObj::from_term(c);
                let rest: Vec<i64> =
                    p.star.t.elems().iter().copied().filter(|&e| e != d).collect();
                let y = JObj::new(p.star.n, SignedSubset::new(p.star.n, rest.clone()));
                let half: Vec<Term> = (0..(1usize << (cc.dim() - 1)))
                    .map(|m| cc.entry(m).clone())
                    .collect();
                let low = CubeObj::new(y.clone(), half).to_term();
                let leg = JMor::new(FinInj::identity(p.star.n), y.clone(), p.star.clone())?;
                let transported = h.diagram.trans(&leg.to_mor()).obj(&low);
                if transported != *c {
                    return Err(CatError::Structural(format!(
                        "diagonal of {low:?} is {transported:?}, expected {c:?}"
                    )));
                }
                s4_seq.push((y.to_term(), low));
                diag_legs.push(leg);
                let mut neg = rest;
                neg.push(-d);
                drops.push(JObj::new(p.star.n, SignedSubset::new(p.star.n, neg)));
            }
        }
    }
    let s4 = h_obj(&s4_seq);
    let ell4: Vec<Mor> = diag_legs.iter().map(JMor::to_mor).collect();
    let rho4: Vec<Mor> =
        s3_seq.iter().map(|(x, o)| h.diagram.fiber_at(x).id(o)).collect();
    let f4 = h.mor(&s4, &s3, &Surj::identity(k), &ell4, &rho4);

    // Stage 5: include the lower half into the adjacent zero fiber.
    let s5_seq: Vec<(Term, Term)> =
        drops.iter().map(|z| (z.to_term(), CubeObj::zero_term())).collect();
    let s5 = h_obj(&s5_seq);
    let mut ell5: Vec<Mor> = Vec::with_capacity(k);
    for ((y_t, _), z) in s4_seq.iter().zip(&drops) {
        let y = JObj::from_term(y_t);
        ell5.push(JMor::new(FinInj::identity(y.n), y, z.clone())?.to_mor());
    }
    let rho5: Vec<Mor> =
        s5_seq.iter().map(|(x, o)| h.diagram.fiber_at(x).id(o)).collect();
    let f5 = h.mor(&s4, &s5, &Surj::identity(k), &ell5, &rho5);

    Ok(InverseWitness {
        object: obj.clone(),
        partner,
        zigzag: vec![(true, f1), (true, f2), (true, f3), (false, f4), (true, f5)],
    })
}

/// Re-validates every stage of a witness against the colimit's morphism
/// rules, checks the stages chain up from `object ⊕ partner`, and checks the
/// far end is manifestly zero (every summand a zero cube).
pub fn verify_zigzag(h: &Hocolim, w: &InverseWitness) -> Result<(), CatError> {
    let mut cur = h.oplus(&w.object, &w.partner);
    for (fwd, m) in &w.zigzag {
        let (psi, ell, rho) = h_parts(m);
        let rebuilt = h.mor(&m.dom, &m.cod, &psi, &ell, &rho);
        if rebuilt != *m {
            return Err(CatError::Structural("zigzag stage fails revalidation".into()));
        }
        let (from, to) = if *fwd { (&m.dom, &m.cod) } else { (&m.cod, &m.dom) };
        if *from != cur {
            return Err(CatError::Structural(format!(
                "zigzag breaks: stage starts at {from:?}, chain is at {cur:?}"
            )));
        }
        cur = to.clone();
    }
    for (x, o) in h_seq(&cur) {
        if !CubeObj::is_zero_term(&o) {
            return Err(CatError::Structural(format!(
                "endpoint summand {o:?} over {x:?} is not the zero cube"
            )));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// The component ring of a derived colimit
// ---------------------------------------------------------------------------

/// π0 of the bottom of a simplicial resolution, as a ring: the level-0
/// partition coequalized along the two faces out of level 1, with ⊕/⊗
/// induced on class representatives, ring axioms checked on the table, and
/// an inverse witness per class.
pub struct Pi0Ring {
    pub partition: Pi0Partition,
    pub reps: Vec<Term>,
    /// `add[i][j]`: class of repᵢ ⊕ repⱼ, `None` if the sum left the
    /// enumerated range.
    pub add: Vec<Vec<Option<usize>>>,
    pub mul: Vec<Vec<Option<usize>>>,
    pub zero: usize,
    pub one: usize,
    /// Per class: a verified witness, `None` where construction or
    /// verification failed within bound.
    pub witnesses: Vec<Option<InverseWitness>>,
    pub report: Report,
    /// Set when any table entry or witness is missing: raise the bound.
    pub incomplete: bool,
}

pub fn pi0_ring(dh: &DerivedHocolim, b: &Bound) -> Result<Pi0Ring, CatError> {
    if dh.q_max < 1 {
        return Err(CatError::Structural(
            "the component ring needs at least one resolution level above the bottom".into(),
        ));
    }
    let level0 = &dh.levels[0];
    let objs0 = level0.cat.base.enum_objects(b);
    if objs0.len() > MAX_OBJECTS {
        return Err(CatError::Resource(format!(
            "{} bottom-level objects exceed the component-search ceiling",
            objs0.len()
        )));
    }
    let mut bld = Pi0Builder::new();
    for o in &objs0 {
        bld.insert(o);
    }
    for a in &objs0 {
        for z in &objs0 {
            for m in level0.cat.base.enum_homs(a, z, b) {
                bld.edge(&m.dom, &m.cod);
            }
        }
    }
    // Coequalize the two faces out of level 1: objects of the next level are
    // exactly the elementary identifications the resolution imposes.
    let c1 = dh.level_cat(1);
    let d0 = dh.face(1, 0);
    let d1 = dh.face(1, 1);
    for w in c1.base.enum_objects(b) {
        bld.edge(&d0.obj(&w), &d1.obj(&w));
    }
    let partition = bld.finish(b);

    let n = partition.num_classes();
    let reps: Vec<Term> =
        (0..n).map(|c| partition.representative(c).clone()).collect();
    let zero = partition
        .class_of(&level0.zero)
        .ok_or_else(|| CatError::Structural("the adjoined zero was not enumerated".into()))?;
    let one = partition
        .class_of(&level0.h.unit())
        .ok_or_else(|| CatError::Structural("the unit object was not enumerated".into()))?;

    let bp = dh.level_biperm(0);
    let mut incomplete = false;
    let mut table = |op: &dyn Fn(&Term, &Term) -> Term| -> Vec<Vec<Option<usize>>> {
        let mut t = vec![vec![None; n]; n];
        for i in 0..n {
            for j in 0..n {
                t[i][j] = partition.class_of(&op(&reps[i], &reps[j]));
                if t[i][j].is_none() {
                    incomplete = true;
                }
            }
        }
        t
    };
    let add = table(&|a, b2| level0.cat.add(a, b2));
    let mul = table(&|a, b2| (bp.tensor)(a, b2));

    let mut report = Report::default();
    let defined = |t: &[Vec<Option<usize>>], i: usize, j: usize| t[i][j];
    for i in 0..n {
        for j in 0..n {
            if let (Some(x), Some(y)) = (defined(&add, i, j), defined(&add, j, i)) {
                report.check("add-commutative", x == y, || format!("classes {i},{j}"));
            }
            if let (Some(x), Some(y)) = (defined(&mul, i, j), defined(&mul, j, i)) {
                report.check("mul-commutative", x == y, || format!("classes {i},{j}"));
            }
            for k in 0..n {
                if let (Some(x), Some(y)) = (
                    defined(&add, i, j).and_then(|s| defined(&add, s, k)),
                    defined(&add, j, k).and_then(|s| defined(&add, i, s)),
                ) {
                    report.check("add-associative", x == y, || format!("classes {i},{j},{k}"));
                }
                if let (Some(x), Some(y)) = (
                    defined(&mul, i, j).and_then(|s| defined(&mul, s, k)),
                    defined(&mul, j, k).and_then(|s| defined(&mul, i, s)),
                ) {
                    report.check("mul-associative", x == y, || format!("classes {i},{j},{k}"));
                }
                if let (Some(x), Some(y)) = (
                    defined(&add, j, k).and_then(|s| defined(&mul, i, s)),
                    defined(&mul, i, j)
                        .and_then(|u| defined(&mul, i, k).and_then(|v| defined(&add, u, v))),
                ) {
                    report.check("distributive", x == y, || format!("classes {i},{j},{k}"));
                }
            }
        }
        if let Some(x) = defined(&add, zero, i) {
            report.check("add-unit", x == i, || format!("class {i}"));
        }
        if let Some(x) = defined(&mul, one, i) {
            report.check("mul-unit", x == i, || format!("class {i}"));
        }
        if let Some(x) = defined(&mul, zero, i) {
            report.check("zero-annihilates", x == zero, || format!("class {i}"));
        }
        report.check(
            "add-inverse-in-table",
            (0..n).any(|j| defined(&add, i, j) == Some(zero)),
            || format!("class {i}"),
        );
    }

    let mut witnesses: Vec<Option<InverseWitness>> = Vec::with_capacity(n);
    for (c, rep) in reps.iter().enumerate() {
        // A class led by the adjoined zero itself is witnessed on any of its
        // colimit sequences instead (one whose summands are all zero cubes
        // exists there and verifies trivially).
        let target = if rep.is_tag("h") {
            Some(rep.clone())
        } else {
            partition.classes[c]
                .iter()
                .map(|&i| &partition.objects[i])
                .find(|t| t.is_tag("h"))
                .cloned()
        };
        let w = target
            .ok_or_else(|| {
                CatError::Structural("no colimit sequence in the class".into())
            })
            .and_then(|t| inverse_witness(&level0.h, &t))
            .and_then(|w| verify_zigzag(&level0.h, &w).map(|()| w));
        match w {
            Ok(w) => witnesses.push(Some(w)),
            Err(_) => {
                witnesses.push(None);
                incomplete = true;
            }
        }
    }

    Ok(Pi0Ring {
        partition,
        reps,
        add,
        mul,
        zero,
        one,
        witnesses,
        report,
        incomplete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::build_gr;
    use crate::examples::{discrete_rig, finite_sets_e, FiniteRigTable};
    use crate::zeros::dhocolim;

    fn bound(size: usize, count: usize, depth: usize) -> Bound {
        Bound::default().with_size(size).with_count(count).with_depth(depth)
    }

    fn grade(n: usize, elems: &[i64]) -> JObj {
        JObj::new(n, SignedSubset::new(n, elems.to_vec()))
    }

    fn cube(n: usize, elems: &[i64], entries: &[&str]) -> Term {
        CubeObj::new(grade(n, elems), entries.iter().map(|e| Term::s(e)).collect())
            .to_term()
    }

    fn summand(n: usize, elems: &[i64], c: Term) -> Term {
        h_obj(&[(grade(n, elems).to_term(), c)])
    }

    fn z2_colimit() -> Hocolim {
        Hocolim::new(build_gr(&discrete_rig(&FiniteRigTable::z2())))
    }

    #[test]
    fn components_of_a_discrete_category_are_singletons() {
        let c = discrete_rig(&FiniteRigTable::z2()).add.base;
        let p = pi0(&c, &Bound::default()).unwrap();
        assert_eq!(p.objects.len(), 2);
        assert_eq!(p.num_classes(), 2);
    }

    #[test]
    fn components_of_the_symmetric_groupoid_count_cardinalities() {
        let c = finite_sets_e().add.base;
        let p = pi0(&c, &Bound::default().with_size(3)).unwrap();
        assert_eq!(p.num_classes(), 4);
        for n in 0..=3i64 {
            assert!(p.class_of(&Term::int(n)).is_some());
        }
        assert!(!p.same(&Term::int(1), &Term::int(2)));
        assert!(pi0_stable(&c, &Bound::default().with_size(3), &Bound::default().with_size(3).with_count(128)).unwrap());
    }

    #[test]
    fn extension_by_zero_meets_the_zero_fiber_class() {
        let h = z2_colimit();
        let p = pi0(&h.as_permcat().base, &bound(1, 200, 2)).unwrap();
        let a = summand(1, &[], cube(1, &[], &["1"]));
        let z = summand(1, &[-1], CubeObj::zero_term());
        assert!(p.same(&a, &z));
        // The unit summand carries a nonzero class of its own.
        let one = summand(0, &[], cube(0, &[], &["1"]));
        assert!(!p.same(&one, &z));
    }

    #[test]
    fn oracle_recovers_integer_differences() {
        let gr = grothendieck_oracle(&RigPresentation::naturals(), 6).unwrap();
        assert_eq!(gr.elements(2).len(), 5);
        let a = gr.class(&[3], &[1]).unwrap();
        let b = gr.class(&[2], &[0]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, K0Elem { pos: vec![2], neg: vec![0] });
        assert_eq!(gr.neg(&a).unwrap(), K0Elem { pos: vec![0], neg: vec![2] });
        assert_eq!(gr.add(&a, &gr.neg(&a).unwrap()).unwrap(), gr.zero());
        let m = gr.mul(&gr.class(&[2], &[0]).unwrap(), &gr.class(&[0], &[3]).unwrap()).unwrap();
        assert_eq!(m, K0Elem { pos: vec![0], neg: vec![6] });
    }

    #[test]
    fn oracle_on_the_cyclic_rig_is_itself() {
        let p = RigPresentation::of_table(&FiniteRigTable::z2());
        let gr = grothendieck_oracle(&p, 4).unwrap();
        assert_eq!(gr.elements(1).len(), 2);
        // The single generator is 2-torsion, hence its own negative.
        assert_eq!(gr.class(&[1], &[0]).unwrap(), gr.class(&[0], &[1]).unwrap());
        assert_eq!(gr.class(&[5], &[0]).unwrap(), gr.class(&[1], &[0]).unwrap());
        assert!(!gr.class(&[1], &[0]).unwrap().is_zero());
    }

    #[test]
    fn oracle_on_the_idempotent_rig_collapses() {
        let p = RigPresentation::of_table(&FiniteRigTable::boolean());
        let gr = grothendieck_oracle(&p, 4).unwrap();
        assert_eq!(gr.elements(1).len(), 1);
        assert!(gr.class(&[1], &[0]).unwrap().is_zero());
    }

    #[test]
    fn alternating_sum_reads_a_pair_cube_as_a_difference() {
        let pres = RigPresentation::of_table(&FiniteRigTable::z2());
        let gr = grothendieck_oracle(&pres, 4).unwrap();
        let pair = summand(1, &[1], cube(1, &[1], &["1", "0"]));
        assert_eq!(
            alt_sum(&pair, &pres, &gr).unwrap(),
            gr.class(&[1], &[0]).unwrap()
        );
        let diagonal = summand(1, &[1], cube(1, &[1], &["1", "1"]));
        assert!(alt_sum(&diagonal, &pres, &gr).unwrap().is_zero());
        let z = summand(1, &[-1], CubeObj::zero_term());
        assert!(alt_sum(&z, &pres, &gr).unwrap().is_zero());
    }

    #[test]
    fn alternating_sum_is_invariant_under_enumerated_colimit_morphisms() {
        let h = z2_colimit();
        let pres = RigPresentation::of_table(&FiniteRigTable::z2());
        let gr = grothendieck_oracle(&pres, 8).unwrap();
        let b = bound(1, 45, 2);
        let objs = h.enum_objects(&b);
        let mut checked = 0u64;
        for a in &objs {
            for c in &objs {
                for m in h.enum_homs(a, c, &b) {
                    assert_eq!(
                        alt_sum(&m.dom, &pres, &gr).unwrap(),
                        alt_sum(&m.cod, &pres, &gr).unwrap(),
                        "morphism {m:?} moved the class"
                    );
                    checked += 1;
                }
            }
        }
        assert!(checked > 100, "only {checked} morphisms enumerated");
    }

    #[test]
    fn inverse_witness_swaps_the_cube_factors() {
        let h = z2_colimit();
        let obj = summand(1, &[1], cube(1, &[1], &["1", "0"]));
        let w = inverse_witness(&h, &obj).unwrap();
        assert_eq!(w.partner, summand(1, &[1], cube(1, &[1], &["0", "1"])));
        verify_zigzag(&h, &w).unwrap();
    }

    #[test]
    fn inverse_witness_covers_plain_zero_and_empty_grades() {
        let h = z2_colimit();
        let obj = h_obj(&[
            (grade(1, &[]).to_term(), cube(1, &[], &["1"])),
            (grade(1, &[-1]).to_term(), CubeObj::zero_term()),
            (grade(0, &[]).to_term(), cube(0, &[], &["1"])),
        ]);
        let w = inverse_witness(&h, &obj).unwrap();
        verify_zigzag(&h, &w).unwrap();
        // A summand with no flip direction is first extended by zero.
        let first = h_seq(&w.partner).remove(0);
        assert_eq!(first.0, grade(2, &[2]).to_term());
    }

    #[test]
    fn component_ring_of_the_cyclic_rig_has_two_classes() {
        let dh = dhocolim(&build_gr(&discrete_rig(&FiniteRigTable::z2())), 1);
        let r = pi0_ring(&dh, &bound(1, 200, 2)).unwrap();
        assert_eq!(r.reps.len(), 2);
        assert_ne!(r.zero, r.one);
        assert_eq!(r.add[r.one][r.one], Some(r.zero));
        assert_eq!(r.mul[r.one][r.one], Some(r.one));
        assert!(r.report.ok(), "{}", r.report.summary());
        assert!(!r.incomplete);
        assert!(r.witnesses.iter().all(Option::is_some));
    }

    #[test]
    fn component_ring_of_the_idempotent_rig_is_trivial() {
        let dh = dhocolim(&build_gr(&discrete_rig(&FiniteRigTable::boolean())), 1);
        let r = pi0_ring(&dh, &bound(1, 220, 2)).unwrap();
        assert_eq!(r.reps.len(), 1);
        assert_eq!(r.zero, r.one);
        assert!(r.report.ok(), "{}", r.report.summary());
    }
}
