//! Cube-shaped diagrams over the indexing category: a base category 𝓜 is
//! sent to the fiber 𝓜^{P T} of subset-indexed tuples when the signed subset
//! T is all-positive, and to the zero category otherwise. Transitions combine
//! extension by zero along an injection with a diagonal along a subset
//! inclusion, and a bipermutative base induces a graded bipermutative
//! structure on the whole diagram.

use crate::biperm::{derive_left_dist, BipermCat, GradedCat};
use crate::effcat::{CatError, Cat, Functor};
use crate::indexing::{j_category, j_twist, q_apply, FinInj, JMor, JObj, SignedSubset};
use crate::permcat::PermCat;
use crate::term::{Mor, Term};
use serde_json::json;
use std::rc::Rc;

/// A subset-indexed tuple of base objects over an all-positive owner, or the
/// canonical zero marker (`entries: None`) over an owner with negatives.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubeObj {
    pub owner: JObj,
    pub entries: Option<Vec<Term>>,
}

impl CubeObj {
    pub fn new(owner: JObj, entries: Vec<Term>) -> CubeObj {
        assert!(owner.t.is_all_positive(), "tuple cubes need all-positive owners");
        assert_eq!(entries.len(), 1 << owner.t.elems().len());
        CubeObj { owner, entries: Some(entries) }
    }

    pub fn zero_marker(owner: JObj) -> CubeObj {
        assert!(!owner.t.is_all_positive());
        CubeObj { owner, entries: None }
    }

    /// The single object of every zero fiber.
    pub fn zero_term() -> Term {
        Term::s("zerocube")
    }

    pub fn is_zero_term(t: &Term) -> bool {
        *t == CubeObj::zero_term()
    }

    /// Entry at the bitmask over the ascending positives of the owner.
    pub fn entry(&self, mask: usize) -> &Term {
        &self.entries.as_ref().expect("zero cube has no entries")[mask]
    }

    pub fn dim(&self) -> usize {
        self.owner.t.elems().len()
    }

    pub fn to_term(&self) -> Term {
        match &self.entries {
            None => CubeObj::zero_term(),
            Some(es) => Term::tag("cube", vec![self.owner.to_term(), Term::List(es.clone())]),
        }
    }

    pub fn from_term(t: &Term) -> CubeObj {
        let a = t.args("cube");
        let owner = JObj::from_term(&a[0]);
        CubeObj::new(owner, a[1].as_list().to_vec())
    }

    pub fn to_json(&self) -> serde_json::Value {
        match &self.entries {
            None => json!({ "zero": true }),
            Some(es) => {
                let pos = self.owner.t.positives();
                let mut entries = serde_json::Map::new();
                for (mask, e) in es.iter().enumerate() {
                    let subset: Vec<String> = pos
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, v)| v.to_string())
                        .collect();
                    let key = format!("[{}]", subset.join(","));
                    entries.insert(key, serde_json::to_value(e).unwrap());
                }
                json!({ "j": self.owner.to_json(), "entries": entries })
            }
        }
    }
}

/// The unique morphism of a zero fiber (also its identity).
pub fn zero_cube_mor() -> Mor {
    Mor::new(CubeObj::zero_term(), CubeObj::zero_term(), Term::s("0"))
}

/// Assembles an entrywise morphism between cubes sharing an owner. Entry
/// endpoints are checked against the two cubes.
pub fn cube_mor(dom: &CubeObj, cod: &CubeObj, entries: &[Mor]) -> Mor {
    assert_eq!(dom.owner, cod.owner, "cube morphisms live in one fiber");
    let n = 1 << dom.dim();
    assert_eq!(entries.len(), n);
    for (mask, e) in entries.iter().enumerate() {
        assert_eq!(&e.dom, dom.entry(mask), "entry domain mismatch at {mask}");
        assert_eq!(&e.cod, cod.entry(mask), "entry codomain mismatch at {mask}");
    }
    Mor::new(
        dom.to_term(),
        cod.to_term(),
        Term::tag("cubemor", entries.iter().map(|e| e.pay.clone()).collect()),
    )
}

/// Splits an entrywise cube morphism back into per-entry base morphisms.
pub fn cube_mor_entries(m: &Mor) -> (CubeObj, CubeObj, Vec<Mor>) {
    let dom = CubeObj::from_term(&m.dom);
    let cod = CubeObj::from_term(&m.cod);
    let pays = m.pay.args("cubemor");
    let entries = pays
        .iter()
        .enumerate()
        .map(|(i, p)| Mor::new(dom.entry(i).clone(), cod.entry(i).clone(), p.clone()))
        .collect();
    (dom, cod, entries)
}

/// For each mask over the positives of `t`, the mask of its intersection
/// with `s` (requires s ⊆ t, both all-positive).
fn diagonal_masks(s: &SignedSubset, t: &SignedSubset) -> Vec<usize> {
    let ps = s.positives();
    let pt = t.positives();
    assert!(ps.iter().all(|v| pt.contains(v)), "diagonal needs s ⊆ t");
    (0..1usize << pt.len())
        .map(|w| {
            let mut v = 0usize;
            for (i, e) in pt.iter().enumerate() {
                if w >> i & 1 == 1 {
                    if let Some(k) = ps.iter().position(|x| x == e) {
                        v |= 1 << k;
                    }
                }
            }
            v
        })
        .collect()
}

/// Repeats entries along the inclusion s ⊆ t: the entry at V is the source
/// entry at V ∩ s.
pub fn cube_diagonal(t: &SignedSubset, a: &CubeObj) -> CubeObj {
    let map = diagonal_masks(&a.owner.t, t);
    CubeObj::new(
        JObj::new(a.owner.n, t.clone()),
        map.iter().map(|&v| a.entry(v).clone()).collect(),
    )
}

pub fn cube_diagonal_mor(t: &SignedSubset, f: &Mor) -> Mor {
    let (dom, cod, es) = cube_mor_entries(f);
    let map = diagonal_masks(&dom.owner.t, t);
    let entries: Vec<Mor> = map.iter().map(|&v| es[v].clone()).collect();
    cube_mor(&cube_diagonal(t, &dom), &cube_diagonal(t, &cod), &entries)
}

/// For each mask over the positives of the pushed-forward subset, the source
/// mask it restricts from, or `None` where the entry is extended by zero
/// (masks meeting the cokernel of φ).
fn extension_masks(phi: &FinInj, s: &SignedSubset) -> (SignedSubset, Vec<Option<usize>>) {
    assert!(s.is_all_positive());
    let target = q_apply(phi, s);
    let ps = s.positives();
    let image: Vec<usize> = ps.iter().map(|&v| phi.apply(v)).collect();
    let pt = target.positives();
    let map = (0..1usize << pt.len())
        .map(|w| {
            let mut v = 0usize;
            for (i, e) in pt.iter().enumerate() {
                if w >> i & 1 == 1 {
                    match image.iter().position(|x| x == e) {
                        Some(k) => v |= 1 << k,
                        None => return None,
                    }
                }
            }
            Some(v)
        })
        .collect();
    (target, map)
}

/// Pushes a cube forward along an injection, inserting the base zero at every
/// subset that meets the cokernel.
pub fn cube_extend_zero(r: &BipermCat, phi: &FinInj, a: &CubeObj) -> CubeObj {
    let (target, map) = extension_masks(phi, &a.owner.t);
    let z = r.add.zero.clone().expect("base category needs a zero");
    CubeObj::new(
        JObj::new(phi.target(), target),
        map.iter()
            .map(|v| match v {
                Some(k) => a.entry(*k).clone(),
                None => z.clone(),
            })
            .collect(),
    )
}

pub fn cube_extend_zero_mor(r: &BipermCat, phi: &FinInj, f: &Mor) -> Mor {
    let (dom, cod, es) = cube_mor_entries(f);
    let (_, map) = extension_masks(phi, &dom.owner.t);
    let idz = r.add.id(r.add.zero.as_ref().expect("base category needs a zero"));
    let entries: Vec<Mor> = map
        .iter()
        .map(|v| match v {
            Some(k) => es[*k].clone(),
            None => idz.clone(),
        })
        .collect();
    cube_mor(
        &cube_extend_zero(r, phi, &dom),
        &cube_extend_zero(r, phi, &cod),
        &entries,
    )
}

/// The transition functor of the diagram at an indexing morphism: extension
/// by zero along the injection followed by the diagonal along the subset
/// inclusion; constant at the zero object when the target has negatives.
pub fn g_apply(r: &BipermCat, m: &JMor) -> Functor {
    let m1 = m.clone();
    let m2 = m.clone();
    let r1 = r.clone();
    let r2 = r.clone();
    let target_zero = !m.to.t.is_all_positive();
    Functor {
        name: "transition".into(),
        on_obj: Rc::new(move |a| {
            if target_zero {
                return CubeObj::zero_term();
            }
            // Source fiber zero implies target zero has negatives too (the
            // pushforward of a negative subset stays negative), so here the
            // input is always a tuple cube.
            let cube = CubeObj::from_term(a);
            let pushed = cube_extend_zero(&r1, &m1.phi, &cube);
            cube_diagonal(&m1.to.t, &pushed).to_term()
        }),
        on_mor: Rc::new(move |f| {
            if target_zero {
                return zero_cube_mor();
            }
            let pushed = cube_extend_zero_mor(&r2, &m2.phi, f);
            cube_diagonal_mor(&m2.to.t, &pushed)
        }),
    }
}

/// The fiber category over one indexing object: entrywise structure of the
/// base for all-positive owners, the terminal zero category otherwise.
pub fn cube_fiber(r: &BipermCat, x: &JObj) -> PermCat {
    if !x.t.is_all_positive() {
        let base = Cat {
            name: "zero-fiber".into(),
            identity: Rc::new(|_| zero_cube_mor()),
            compose: Rc::new(|_, _| Ok(zero_cube_mor())),
            objects: Rc::new(|_| vec![CubeObj::zero_term()]),
            homs: Rc::new(|a, b, _| {
                if CubeObj::is_zero_term(a) && CubeObj::is_zero_term(b) {
                    vec![zero_cube_mor()]
                } else {
                    vec![]
                }
            }),
        };
        return PermCat {
            base,
            zero: Some(CubeObj::zero_term()),
            oplus: Rc::new(|_, _| CubeObj::zero_term()),
            oplus_mor: Rc::new(|_, _| zero_cube_mor()),
            twist: Rc::new(|_, _| zero_cube_mor()),
        };
    }

    let dim = x.t.elems().len();
    let cells = 1usize << dim;
    let (r1, r2, r3, r4, r5, r6) = (
        r.clone(),
        r.clone(),
        r.clone(),
        r.clone(),
        r.clone(),
        r.clone(),
    );
    let (x1, x2) = (x.clone(), x.clone());
    let base = Cat {
        name: format!("cube-fiber-{dim}"),
        identity: Rc::new(move |a| {
            let c = CubeObj::from_term(a);
            let es: Vec<Mor> = c.entries.as_ref().unwrap().iter().map(|e| r1.add.id(e)).collect();
            cube_mor(&c, &c, &es)
        }),
        compose: Rc::new(move |g, f| {
            if f.cod != g.dom {
                return Err(CatError::Mismatch { f: Box::new(f.clone()), g: Box::new(g.clone()) });
            }
            let (fd, _, fe) = cube_mor_entries(f);
            let (_, gc, ge) = cube_mor_entries(g);
            let mut es = Vec::with_capacity(fe.len());
            for (a, b) in ge.iter().zip(fe.iter()) {
                es.push(r2.add.base.try_comp(a, b)?);
            }
            Ok(cube_mor(&fd, &gc, &es))
        }),
        objects: Rc::new(move |b| {
            let rbound = b.with_size(b.depth);
            let base_objs = r3.add.base.enum_objects(&rbound);
            if base_objs.is_empty() {
                return vec![];
            }
            // Mixed-radix enumeration, last entry fastest, capped at count.
            let mut out = Vec::new();
            let mut idx = vec![0usize; cells];
            loop {
                out.push(
                    CubeObj::new(
                        x1.clone(),
                        idx.iter().map(|&i| base_objs[i].clone()).collect(),
                    )
                    .to_term(),
                );
                if out.len() >= b.count {
                    return out;
                }
                let mut k = cells;
                loop {
                    if k == 0 {
                        return out;
                    }
                    k -= 1;
                    idx[k] += 1;
                    if idx[k] < base_objs.len() {
                        break;
                    }
                    idx[k] = 0;
                }
            }
        }),
        homs: Rc::new(move |a, b, bd| {
            let (ca, cb) = (CubeObj::from_term(a), CubeObj::from_term(b));
            let rbound = bd.with_size(bd.depth);
            let per_entry: Vec<Vec<Mor>> = (0..cells)
                .map(|i| r4.add.base.enum_homs(ca.entry(i), cb.entry(i), &rbound))
                .collect();
            if per_entry.iter().any(|v| v.is_empty()) {
                return vec![];
            }
            let mut out = Vec::new();
            let mut idx = vec![0usize; cells];
            loop {
                let es: Vec<Mor> = idx.iter().enumerate().map(|(i, &k)| per_entry[i][k].clone()).collect();
                out.push(cube_mor(&ca, &cb, &es));
                if out.len() >= bd.count {
                    return out;
                }
                let mut k = cells;
                loop {
                    if k == 0 {
                        return out;
                    }
                    k -= 1;
                    idx[k] += 1;
                    if idx[k] < per_entry[k].len() {
                        break;
                    }
                    idx[k] = 0;
                }
            }
        }),
    };
    let zc = CubeObj::new(
        x.clone(),
        vec![r.add.zero.clone().expect("base category needs a zero"); cells],
    );
    PermCat {
        base,
        zero: Some(zc.to_term()),
        oplus: Rc::new(move |a, b| {
            let (ca, cb) = (CubeObj::from_term(a), CubeObj::from_term(b));
            CubeObj::new(
                ca.owner.clone(),
                (0..cells).map(|i| r5.add.add(ca.entry(i), cb.entry(i))).collect(),
            )
            .to_term()
        }),
        oplus_mor: {
            let r = r.clone();
            Rc::new(move |f, g| {
                let (fd, fc, fe) = cube_mor_entries(f);
                let (gd, gc, ge) = cube_mor_entries(g);
                let es: Vec<Mor> =
                    fe.iter().zip(ge.iter()).map(|(p, q)| r.add.add_mor(p, q)).collect();
                let dom = CubeObj::new(
                    fd.owner.clone(),
                    (0..cells).map(|i| r.add.add(fd.entry(i), gd.entry(i))).collect(),
                );
                let cod = CubeObj::new(
                    fc.owner.clone(),
                    (0..cells).map(|i| r.add.add(fc.entry(i), gc.entry(i))).collect(),
                );
                cube_mor(&dom, &cod, &es)
            })
        },
        twist: Rc::new(move |a, b| {
            let (ca, cb) = (CubeObj::from_term(a), CubeObj::from_term(b));
            let es: Vec<Mor> =
                (0..cells).map(|i| r6.add.gamma(ca.entry(i), cb.entry(i))).collect();
            let dom = CubeObj::new(
                x2.clone(),
                (0..cells).map(|i| r6.add.add(ca.entry(i), cb.entry(i))).collect(),
            );
            let cod = CubeObj::new(
                x2.clone(),
                (0..cells).map(|i| r6.add.add(cb.entry(i), ca.entry(i))).collect(),
            );
            cube_mor(&dom, &cod, &es)
        }),
    }
}

/// (a⊗b) over the summed owner: the entry at V+U is a_V ⊗ b_U.
pub fn cube_tensor(r: &BipermCat, a: &CubeObj, b: &CubeObj) -> CubeObj {
    let owner = JObj::new(
        a.owner.n + b.owner.n,
        shift_union(&a.owner.t, &b.owner.t, a.owner.n),
    );
    let (pa, pb) = (a.dim(), b.dim());
    let mut entries = Vec::with_capacity(1 << (pa + pb));
    for iu in 0..1usize << pb {
        for iv in 0..1usize << pa {
            entries.push((r.tensor)(a.entry(iv), b.entry(iu)));
        }
    }
    CubeObj::new(owner, entries)
}

/// T + S: the second subset shifted past the first ambient.
fn shift_union(t: &SignedSubset, s: &SignedSubset, n: usize) -> SignedSubset {
    let mut elems: Vec<i64> = t.elems().to_vec();
    elems.extend(s.elems().iter().map(|&e| {
        if e > 0 {
            e + n as i64
        } else {
            e - n as i64
        }
    }));
    SignedSubset::new(n + s.ambient(), elems)
}

pub fn cube_tensor_mor(r: &BipermCat, f: &Mor, g: &Mor) -> Mor {
    let (fd, fc, fe) = cube_mor_entries(f);
    let (gd, gc, ge) = cube_mor_entries(g);
    let (pa, pb) = (fd.dim(), gd.dim());
    let mut es = Vec::with_capacity(1 << (pa + pb));
    for gu in ge.iter().take(1 << pb) {
        for fv in fe.iter().take(1 << pa) {
            es.push((r.tensor_mor)(fv, gu));
        }
    }
    cube_mor(&cube_tensor(r, &fd, &gd), &cube_tensor(r, &fc, &gc), &es)
}

/// The multiplicative twist a⊗b → (transition along χ)(b⊗a), assembled from
/// the entrywise twists of the base.
pub fn cube_gamma_tensor(r: &BipermCat, a: &CubeObj, b: &CubeObj) -> Mor {
    let g = r.gamma_tensor.as_ref().expect("base category has no multiplicative twist");
    let dom = cube_tensor(r, a, b);
    let chi = j_twist(&b.owner, &a.owner);
    let cod_term = g_apply(r, &chi).obj(&cube_tensor(r, b, a).to_term());
    let cod = CubeObj::from_term(&cod_term);
    let (pa, pb) = (a.dim(), b.dim());
    let mut es = Vec::with_capacity(1 << (pa + pb));
    for iu in 0..1usize << pb {
        for iv in 0..1usize << pa {
            es.push(g(a.entry(iv), b.entry(iu)));
        }
    }
    cube_mor(&dom, &cod, &es)
}

/// Entrywise left distributivity for bases carrying an explicit one.
pub fn cube_left_dist(r: &BipermCat, a: &CubeObj, b: &CubeObj, bp: &CubeObj) -> Mor {
    assert_eq!(b.owner, bp.owner);
    let (pa, pb) = (a.dim(), b.dim());
    let ab = cube_tensor(r, a, b);
    let abp = cube_tensor(r, a, bp);
    let dom = CubeObj::new(
        ab.owner.clone(),
        (0..1usize << (pa + pb))
            .map(|i| r.add.add(ab.entry(i), abp.entry(i)))
            .collect(),
    );
    let bsum = CubeObj::new(
        b.owner.clone(),
        (0..1usize << pb).map(|i| r.add.add(b.entry(i), bp.entry(i))).collect(),
    );
    let cod = cube_tensor(r, a, &bsum);
    let mut es = Vec::with_capacity(1 << (pa + pb));
    for iu in 0..1usize << pb {
        for iv in 0..1usize << pa {
            es.push(r.left_dist(a.entry(iv), b.entry(iu), bp.entry(iu)));
        }
    }
    cube_mor(&dom, &cod, &es)
}

/// The full graded structure of the diagram of a bipermutative (or strictly
/// bimonoidal) base: fibers, transitions, graded tensor, twist, and left
/// distributivity.
pub fn build_gr(r: &BipermCat) -> GradedCat {
    let (r1, r2, r3, r4, r5) = (r.clone(), r.clone(), r.clone(), r.clone(), r.clone());
    let tensor = Rc::new(move |x: &Term, a: &Term, y: &Term, b: &Term| {
        if CubeObj::is_zero_term(a) || CubeObj::is_zero_term(b) {
            let _ = (x, y);
            return CubeObj::zero_term();
        }
        cube_tensor(&r2, &CubeObj::from_term(a), &CubeObj::from_term(b)).to_term()
    });
    let tensor_mor = Rc::new(move |_: &Term, f: &Mor, _: &Term, g: &Mor| {
        if CubeObj::is_zero_term(&f.dom) || CubeObj::is_zero_term(&g.dom) {
            return zero_cube_mor();
        }
        cube_tensor_mor(&r3, f, g)
    });
    let gamma = r.gamma_tensor.as_ref().map(|_| {
        let r = r4.clone();
        let g: Rc<dyn Fn(&Term, &Term, &Term, &Term) -> Mor> =
            Rc::new(move |_: &Term, a: &Term, _: &Term, b: &Term| {
                if CubeObj::is_zero_term(a) || CubeObj::is_zero_term(b) {
                    return zero_cube_mor();
                }
                cube_gamma_tensor(&r, &CubeObj::from_term(a), &CubeObj::from_term(b))
            });
        g
    });
    let mut gc = GradedCat {
        j: j_category(),
        fiber: Rc::new(move |x| cube_fiber(&r1, &JObj::from_term(x))),
        transition: {
            let r = r.clone();
            Rc::new(move |k| g_apply(&r, &JMor::from_mor(k)))
        },
        one: CubeObj::new(JObj::zero(), vec![r.one.clone()]).to_term(),
        tensor,
        tensor_mor,
        gamma,
        dl: Rc::new(|_, _, _, _, _| unreachable!("distributivity installed below")),
    };
    if gc.gamma.is_some() {
        let base = gc.clone();
        gc.dl = Rc::new(move |x, a, y, b, bp| derive_left_dist(&base, x, a, y, b, bp));
    } else {
        gc.dl = Rc::new(move |_, a, _, b, bp| {
            if CubeObj::is_zero_term(a) || CubeObj::is_zero_term(b) {
                return zero_cube_mor();
            }
            cube_left_dist(
                &r5,
                &CubeObj::from_term(a),
                &CubeObj::from_term(b),
                &CubeObj::from_term(bp),
            )
        });
    }
    gc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biperm::check_graded_bipermutative;
    use crate::effcat::Bound;
    use crate::examples::{discrete_rig, FiniteRigTable};
    use crate::indexing::enumerate_j_objects;

    fn z2() -> BipermCat {
        discrete_rig(&FiniteRigTable::z2())
    }

    fn sub(n: usize, elems: &[i64]) -> SignedSubset {
        SignedSubset::new(n, elems.to_vec())
    }

    #[test]
    fn diagonal_duplicates_entries() {
        let a = CubeObj::new(JObj::new(1, sub(1, &[])), vec![Term::s("1")]);
        let d = cube_diagonal(&sub(1, &[1]), &a);
        assert_eq!(d.entries.as_ref().unwrap(), &vec![Term::s("1"), Term::s("1")]);

        let a = CubeObj::new(JObj::new(2, sub(2, &[1])), vec![Term::s("0"), Term::s("1")]);
        let d = cube_diagonal(&sub(2, &[1, 2]), &a);
        // Masks over [1,2]: ∅, {1}, {2}, {1,2} restrict to ∅, {1}, ∅, {1}.
        assert_eq!(
            d.entries.as_ref().unwrap(),
            &vec![Term::s("0"), Term::s("1"), Term::s("0"), Term::s("1")]
        );
    }

    #[test]
    fn extension_by_zero_displayed_values() {
        let r = z2();
        // φ: 1→2 with φ(1)=2, source subset ∅: the target subset is the
        // cokernel {1} and the new factor is zero.
        let phi = FinInj::new(2, vec![2]);
        let a = CubeObj::new(JObj::new(1, sub(1, &[])), vec![Term::s("1")]);
        let e = cube_extend_zero(&r, &phi, &a);
        assert_eq!(e.owner.t, sub(2, &[1]));
        assert_eq!(e.entries.as_ref().unwrap(), &vec![Term::s("1"), Term::s("0")]);

        // Same φ with source subset {1}: entries survive at ∅ and {2},
        // zeros appear at {1} and {1,2}.
        let a = CubeObj::new(JObj::new(1, sub(1, &[1])), vec![Term::s("1"), Term::s("1")]);
        let e = cube_extend_zero(&r, &phi, &a);
        assert_eq!(e.owner.t, sub(2, &[1, 2]));
        assert_eq!(
            e.entries.as_ref().unwrap(),
            &vec![Term::s("1"), Term::s("0"), Term::s("1"), Term::s("0")]
        );
    }

    #[test]
    fn transitions_compose() {
        let r = z2();
        let b = Bound::default().with_size(2).with_count(40);
        let j = j_category();
        let jobjs = enumerate_j_objects(&b);
        let mors = j.base.enum_morphisms(&b);
        let mut pairs = 0;
        for f in &mors {
            for g in &mors {
                if g.dom != f.cod {
                    continue;
                }
                let gf = j.base.try_comp(g, f).unwrap();
                let t_gf = g_apply(&r, &JMor::from_mor(&gf));
                let t_g = g_apply(&r, &JMor::from_mor(g));
                let t_f = g_apply(&r, &JMor::from_mor(f));
                let dom_owner = JObj::from_term(&f.dom);
                let fiber = cube_fiber(&r, &dom_owner);
                for a in fiber.base.enum_objects(&b.with_count(6)) {
                    assert_eq!(t_gf.obj(&a), t_g.obj(&t_f.obj(&a)));
                }
                for m in fiber.base.enum_morphisms(&b.with_count(6)) {
                    assert_eq!(t_gf.mor(&m), t_g.mor(&t_f.mor(&m)));
                }
                pairs += 1;
            }
        }
        assert!(pairs > 50, "expected many composable pairs, saw {pairs}");
        let _ = jobjs;
    }

    #[test]
    fn tensor_of_one_cubes_is_a_square() {
        let r = z2();
        let (zero, one) = (Term::s("0"), Term::s("1"));
        let a = CubeObj::new(JObj::new(1, sub(1, &[1])), vec![one.clone(), zero.clone()]);
        let c = CubeObj::new(JObj::new(1, sub(1, &[1])), vec![one.clone(), one.clone()]);
        let t = cube_tensor(&r, &a, &c);
        assert_eq!(t.owner, JObj::new(2, sub(2, &[1, 2])));
        // Entry at V+U is a_V·c_U: masks (V,U) in order (∅,∅),({1},∅),(∅,{1}),({1},{1}).
        assert_eq!(
            t.entries.as_ref().unwrap(),
            &vec![one.clone(), zero.clone(), one, zero]
        );
    }

    #[test]
    fn unit_cube_is_strict() {
        let r = z2();
        let a = CubeObj::new(JObj::new(2, sub(2, &[1, 2])), vec![Term::s("1"); 4]);
        let unit = CubeObj::new(JObj::zero(), vec![r.one.clone()]);
        assert_eq!(cube_tensor(&r, &a, &unit), a);
        assert_eq!(cube_tensor(&r, &unit, &a), a);
    }

    #[test]
    fn graded_checker_clean_on_z2_at_small_bound() {
        let gc = build_gr(&z2());
        let b = Bound::default().with_size(1).with_count(24).with_tuples(400);
        let rep = check_graded_bipermutative(&gc, &b);
        assert!(rep.ok(), "{}", rep.summary());
    }
}
