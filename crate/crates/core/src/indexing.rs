//! Finite permutations and injections, signed subsets, and the indexing
//! category J built from injections acting on signed subsets, together with
//! its permutative (addition + twist) structure.

use crate::effcat::{Bound, Cat, CatError};
use crate::permcat::PermCat;
use crate::term::{Mor, Term};
use serde_json::json;
use std::rc::Rc;

/// A permutation of {1..n}, stored by images: `images[i-1] = σ(i)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Perm {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            assert!(v >= 1 && v <= n && !seen[v], "not a permutation: {images:?}");
            seen[v] = true;
        }
        Perm { images }
    }

    pub fn identity(n: usize) -> Perm {
        Perm { images: (1..=n).collect() }
    }

    pub fn arity(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// self ∘ other (apply `other` first).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.arity(), other.arity());
        Perm { images: (1..=self.arity()).map(|i| self.apply(other.apply(i))).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.arity()];
        for i in 1..=self.arity() {
            inv[self.apply(i) - 1] = i;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Block sum: acts as `self` on the first block, `other` shifted on the
    /// second.
    pub fn block_sum(&self, other: &Perm) -> Perm {
        let n = self.arity();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&v| v + n));
        Perm { images }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn to_term(&self) -> Term {
        Term::tag(
            "perm",
            self.images.iter().map(|&i| Term::int(i as i64)).collect(),
        )
    }

    pub fn from_term(t: &Term) -> Perm {
        Perm::new(t.args("perm").iter().map(|x| x.as_int() as usize).collect())
    }

    /// All permutations of {1..n} in lexicographic order of image sequences.
    pub fn all(n: usize) -> Vec<Perm> {
        fn rec(n: usize, prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
            if prefix.len() == n {
                out.push(Perm { images: prefix.clone() });
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    prefix.push(v);
                    rec(n, prefix, used, out);
                    prefix.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
        out
    }
}

/// The shuffle permutation of {1..n+m}: i ↦ m+i for i ≤ n, i ↦ i−n for i > n.
pub fn shuffle_chi(n: usize, m: usize) -> Perm {
    Perm {
        images: (1..=n + m).map(|i| if i <= n { m + i } else { i - n }).collect(),
    }
}

/// Matrix-transposition permutation of {1..nm}: with the lexicographic pairing
/// (i,j) ↔ (i−1)m+j of an n×m grid, sends (i,j) to the position of (j,i) in
/// the m×n grid.
pub fn transpose_perm(n: usize, m: usize) -> Perm {
    let mut images = vec![0; n * m];
    for i in 1..=n {
        for j in 1..=m {
            images[(i - 1) * m + j - 1] = (j - 1) * n + i;
        }
    }
    Perm { images }
}

/// The left-distributivity permutation ξ of {1..n(m+m′)}: reshuffles the
/// concatenation of the n×m grid and the n×m′ grid into the n×(m+m′) grid.
/// Computed directly; `tests` cross-check it against the composite of two
/// transpositions around the strict right distributivity.
pub fn xi_perm(n: usize, m: usize, mp: usize) -> Perm {
    let mut images = vec![0; n * (m + mp)];
    for i in 1..=n {
        for j in 1..=m {
            images[(i - 1) * m + j - 1] = (i - 1) * (m + mp) + j;
        }
        for j in 1..=mp {
            images[n * m + (i - 1) * mp + j - 1] = (i - 1) * (m + mp) + m + j;
        }
    }
    Perm { images }
}

/// An injective function {1..m} → {1..n}.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FinInj {
    m: usize,
    n: usize,
    images: Vec<usize>,
}

impl FinInj {
    pub fn new(n: usize, images: Vec<usize>) -> FinInj {
        let m = images.len();
        assert!(m <= n, "injection needs m ≤ n");
        let mut seen = vec![false; n + 1];
        for &v in &images {
            assert!(v >= 1 && v <= n && !seen[v], "not injective into 1..{n}: {images:?}");
            seen[v] = true;
        }
        FinInj { m, n, images }
    }

    pub fn identity(n: usize) -> FinInj {
        FinInj { m: n, n, images: (1..=n).collect() }
    }

    pub fn from_perm(p: &Perm) -> FinInj {
        FinInj { m: p.arity(), n: p.arity(), images: p.images().to_vec() }
    }

    pub fn source(&self) -> usize {
        self.m
    }

    pub fn target(&self) -> usize {
        self.n
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// self ∘ other.
    pub fn compose(&self, other: &FinInj) -> FinInj {
        assert_eq!(other.n, self.m);
        FinInj {
            m: other.m,
            n: self.n,
            images: other.images.iter().map(|&i| self.images[i - 1]).collect(),
        }
    }

    /// Block injection {1..m+m′} → {1..n+n′}.
    pub fn block_sum(&self, other: &FinInj) -> FinInj {
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&v| v + self.n));
        FinInj { m: self.m + other.m, n: self.n + other.n, images }
    }

    /// Complement of the image inside {1..n}, ascending.
    pub fn cokernel(&self) -> Vec<usize> {
        let mut hit = vec![false; self.n + 1];
        for &v in &self.images {
            hit[v] = true;
        }
        (1..=self.n).filter(|&v| !hit[v]).collect()
    }

    /// All injections {1..m} → {1..n} in lexicographic order.
    pub fn all(m: usize, n: usize) -> Vec<FinInj> {
        fn rec(m: usize, n: usize, pre: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<FinInj>) {
            if pre.len() == m {
                out.push(FinInj { m, n, images: pre.clone() });
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    pre.push(v);
                    rec(m, n, pre, used, out);
                    pre.pop();
                    used[v] = false;
                }
            }
        }
        if m > n {
            return Vec::new();
        }
        let mut out = Vec::new();
        rec(m, n, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
        out
    }
}

/// A subset of {±1, …, ±n} on which the absolute value is injective, in
/// canonical form: elements sorted by absolute value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SignedSubset {
    n: usize,
    elems: Vec<i64>,
}

impl SignedSubset {
    pub fn new(n: usize, mut elems: Vec<i64>) -> SignedSubset {
        elems.sort_by_key(|e| e.unsigned_abs());
        let mut last = 0u64;
        for &e in &elems {
            let a = e.unsigned_abs();
            assert!(e != 0 && a as usize <= n, "element {e} out of ±1..±{n}");
            assert!(a != last, "absolute values must be distinct: {elems:?}");
            last = a;
        }
        SignedSubset { n, elems }
    }

    pub fn empty(n: usize) -> SignedSubset {
        SignedSubset { n, elems: vec![] }
    }

    /// The full positive subset {1..n}.
    pub fn full(n: usize) -> SignedSubset {
        SignedSubset { n, elems: (1..=n as i64).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn elems(&self) -> &[i64] {
        &self.elems
    }

    pub fn is_all_positive(&self) -> bool {
        self.elems.iter().all(|&e| e > 0)
    }

    /// Positive elements, ascending.
    pub fn positives(&self) -> Vec<usize> {
        self.elems.iter().filter(|&&e| e > 0).map(|&e| e as usize).collect()
    }

    pub fn contains(&self, e: i64) -> bool {
        self.elems.contains(&e)
    }

    pub fn is_subset_of(&self, other: &SignedSubset) -> bool {
        self.n == other.n && self.elems.iter().all(|e| other.elems.contains(e))
    }

    /// All 3^n signed subsets of ambient n (each index absent, +, or −),
    /// in deterministic order.
    pub fn all(n: usize) -> Vec<SignedSubset> {
        let mut out = vec![SignedSubset::empty(n)];
        for i in 1..=n as i64 {
            let mut next = Vec::with_capacity(out.len() * 3);
            for s in &out {
                next.push(s.clone());
                for sign in [1i64, -1] {
                    let mut e = s.elems.clone();
                    e.push(sign * i);
                    next.push(SignedSubset::new(n, e));
                }
            }
            out = next;
        }
        out
    }
}

/// Applies an injection φ: {1..m} → {1..n} to a signed subset of ambient m:
/// φ extended oddly on S, union the positive complement of φ's image.
pub fn q_apply(phi: &FinInj, s: &SignedSubset) -> SignedSubset {
    assert_eq!(phi.source(), s.ambient(), "ambient mismatch");
    let mut elems: Vec<i64> = s
        .elems()
        .iter()
        .map(|&e| {
            let v = phi.apply(e.unsigned_abs() as usize) as i64;
            if e > 0 { v } else { -v }
        })
        .collect();
    elems.extend(phi.cokernel().into_iter().map(|v| v as i64));
    SignedSubset::new(phi.target(), elems)
}

/// An object of the indexing category: an ambient size with a signed subset.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct JObj {
    pub n: usize,
    pub t: SignedSubset,
}

impl JObj {
    pub fn new(n: usize, t: SignedSubset) -> JObj {
        assert_eq!(t.ambient(), n);
        JObj { n, t }
    }

    pub fn zero() -> JObj {
        JObj { n: 0, t: SignedSubset::empty(0) }
    }

    pub fn to_term(&self) -> Term {
        Term::tag(
            "j",
            vec![
                Term::int(self.n as i64),
                Term::List(self.t.elems().iter().map(|&e| Term::int(e)).collect()),
            ],
        )
    }

    pub fn from_term(t: &Term) -> JObj {
        let a = t.args("j");
        let n = a[0].as_int() as usize;
        let elems = a[1].as_list().iter().map(|e| e.as_int()).collect();
        JObj::new(n, SignedSubset::new(n, elems))
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "n": self.n, "T": self.t.elems() })
    }
}

/// A morphism of the indexing category: an injection whose subset image lands
/// inside the target subset. The inclusion witness is recomputed from φ and
/// the endpoints rather than stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct JMor {
    pub phi: FinInj,
    pub from: JObj,
    pub to: JObj,
}

impl JMor {
    pub fn new(phi: FinInj, from: JObj, to: JObj) -> Result<JMor, CatError> {
        if phi.source() != from.n || phi.target() != to.n {
            return Err(CatError::Structural(format!(
                "injection {}→{} does not match endpoints {}→{}",
                phi.source(),
                phi.target(),
                from.n,
                to.n
            )));
        }
        if !q_apply(&phi, &from.t).is_subset_of(&to.t) {
            return Err(CatError::Structural(format!(
                "image of {:?} under {:?} is not contained in {:?}",
                from.t,
                phi,
                to.t
            )));
        }
        Ok(JMor { phi, from, to })
    }

    pub fn identity(x: &JObj) -> JMor {
        JMor { phi: FinInj::identity(x.n), from: x.clone(), to: x.clone() }
    }

    pub fn to_mor(&self) -> Mor {
        Mor::new(
            self.from.to_term(),
            self.to.to_term(),
            Term::tag(
                "jmor",
                self.phi.images().iter().map(|&v| Term::int(v as i64)).collect(),
            ),
        )
    }

    pub fn from_mor(m: &Mor) -> JMor {
        let from = JObj::from_term(&m.dom);
        let to = JObj::from_term(&m.cod);
        let images = m.pay.args("jmor").iter().map(|t| t.as_int() as usize).collect();
        JMor::new(FinInj::new(to.n, images), from, to).expect("corrupted morphism term")
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "phi": self.phi.images(), "from": self.from.to_json(), "to": self.to.to_json() })
    }
}

/// Composition in the indexing category; the inclusion witness of the
/// composite is revalidated.
pub fn j_compose(g: &JMor, f: &JMor) -> Result<JMor, CatError> {
    if f.to != g.from {
        return Err(CatError::Structural(format!(
            "endpoints do not match: {:?} then {:?}",
            f, g
        )));
    }
    JMor::new(g.phi.compose(&f.phi), f.from.clone(), g.to.clone())
}

/// Addition of index objects: ambients add, subsets embed disjointly (second
/// block shifted oddly by n).
pub fn j_add(x: &JObj, y: &JObj) -> JObj {
    let n = x.n;
    let mut elems: Vec<i64> = x.t.elems().to_vec();
    elems.extend(y.t.elems().iter().map(|&e| if e > 0 { e + n as i64 } else { e - n as i64 }));
    JObj::new(n + y.n, SignedSubset::new(n + y.n, elems))
}

pub fn j_add_mor(f: &JMor, g: &JMor) -> JMor {
    JMor::new(
        f.phi.block_sum(&g.phi),
        j_add(&f.from, &g.from),
        j_add(&f.to, &g.to),
    )
    .expect("block sum of valid index morphisms is valid")
}

/// The twist of index addition: the shuffle permutation with identity
/// inclusion witness.
pub fn j_twist(x: &JObj, y: &JObj) -> JMor {
    JMor::new(
        FinInj::from_perm(&shuffle_chi(x.n, y.n)),
        j_add(x, y),
        j_add(y, x),
    )
    .expect("shuffle twist is a valid index morphism")
}

/// All index objects with ambient ≤ bound.size, then capped at bound.count.
pub fn enumerate_j_objects(bound: &Bound) -> Vec<JObj> {
    let mut out = Vec::new();
    for n in 0..=bound.size {
        for t in SignedSubset::all(n) {
            out.push(JObj::new(n, t));
            if out.len() >= bound.count {
                return out;
            }
        }
    }
    out
}

/// All index morphisms x → y.
pub fn enumerate_j_homs(x: &JObj, y: &JObj) -> Vec<JMor> {
    FinInj::all(x.n, y.n)
        .into_iter()
        .filter_map(|phi| JMor::new(phi, x.clone(), y.clone()).ok())
        .collect()
}

/// The indexing category as a permutative category over symbolic terms.
pub fn j_category() -> PermCat {
    let base = Cat {
        name: "index".into(),
        identity: Rc::new(|a| JMor::identity(&JObj::from_term(a)).to_mor()),
        compose: Rc::new(|g, f| {
            Ok(j_compose(&JMor::from_mor(g), &JMor::from_mor(f))?.to_mor())
        }),
        objects: Rc::new(|b| enumerate_j_objects(b).iter().map(|x| x.to_term()).collect()),
        homs: Rc::new(|a, b, _| {
            enumerate_j_homs(&JObj::from_term(a), &JObj::from_term(b))
                .iter()
                .map(|m| m.to_mor())
                .collect()
        }),
    };
    PermCat {
        base,
        zero: Some(JObj::zero().to_term()),
        oplus: Rc::new(|a, b| j_add(&JObj::from_term(a), &JObj::from_term(b)).to_term()),
        oplus_mor: Rc::new(|f, g| j_add_mor(&JMor::from_mor(f), &JMor::from_mor(g)).to_mor()),
        twist: Rc::new(|a, b| j_twist(&JObj::from_term(a), &JObj::from_term(b)).to_mor()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shuffle_small_values() {
        assert_eq!(shuffle_chi(2, 1).images(), &[2, 3, 1]);
        assert!(shuffle_chi(0, 4).is_identity());
        assert!(shuffle_chi(4, 0).is_identity());
    }

    #[test]
    fn shuffle_involution() {
        for n in 0..=5 {
            for m in 0..=5 {
                assert!(shuffle_chi(m, n).compose(&shuffle_chi(n, m)).is_identity());
            }
        }
    }

    #[test]
    fn xi_matches_twist_route() {
        // Independent oracle: ξ must equal the composite of the product twist
        // on each block, the identity regrouping, and the product twist back.
        for n in 1..=3 {
            for m in 1..=3 {
                for mp in 1..=3 {
                    let lhs = xi_perm(n, m, mp);
                    let back = transpose_perm(m + mp, n);
                    let swap_blocks = transpose_perm(n, m).block_sum(&transpose_perm(n, mp));
                    assert_eq!(lhs, back.compose(&swap_blocks), "n={n} m={m} m'={mp}");
                }
            }
        }
    }

    #[test]
    fn xi_degenerate_unit() {
        assert!(xi_perm(1, 1, 1).is_identity());
    }

    #[test]
    fn transpose_perm_is_involutive_across_shapes() {
        for n in 1..=4 {
            for m in 1..=4 {
                assert!(transpose_perm(m, n).compose(&transpose_perm(n, m)).is_identity());
            }
        }
    }

    #[test]
    fn q_apply_displayed_values() {
        let phi = FinInj::new(2, vec![2]); // 1 ↦ 2
        let s_neg = SignedSubset::new(1, vec![-1]);
        assert_eq!(q_apply(&phi, &s_neg).elems(), &[1, -2]);
        let s_empty = SignedSubset::empty(1);
        assert_eq!(q_apply(&phi, &s_empty).elems(), &[1]);
        let s_pos = SignedSubset::new(1, vec![1]);
        assert_eq!(q_apply(&phi, &s_pos).elems(), &[1, 2]);
    }

    #[test]
    fn q_apply_identity_and_functorial() {
        for n in 0..=3 {
            for s in SignedSubset::all(n) {
                assert_eq!(q_apply(&FinInj::identity(n), &s), s);
            }
        }
        for psi in FinInj::all(1, 2) {
            for phi in FinInj::all(2, 3) {
                for s in SignedSubset::all(1) {
                    assert_eq!(
                        q_apply(&phi.compose(&psi), &s),
                        q_apply(&phi, &q_apply(&psi, &s))
                    );
                }
            }
        }
    }

    #[test]
    fn q_apply_monotone() {
        for phi in FinInj::all(2, 3) {
            let sets = SignedSubset::all(2);
            for s in &sets {
                for t in &sets {
                    if s.is_subset_of(t) {
                        assert!(q_apply(&phi, s).is_subset_of(&q_apply(&phi, t)));
                    }
                }
            }
        }
    }

    #[test]
    fn subset_counts_are_powers_of_three() {
        for n in 0..=4 {
            assert_eq!(SignedSubset::all(n).len(), 3usize.pow(n as u32));
        }
    }

    #[test]
    fn addition_displayed_value() {
        let x = JObj::new(3, SignedSubset::new(3, vec![-1, 2]));
        let y = JObj::new(2, SignedSubset::new(2, vec![1, -2]));
        let sum = j_add(&x, &y);
        assert_eq!(sum.n, 5);
        assert_eq!(sum.t.elems(), &[-1, 2, 4, -5]);
    }

    #[test]
    fn addition_unit() {
        let x = JObj::new(3, SignedSubset::new(3, vec![-1, 2]));
        assert_eq!(j_add(&x, &JObj::zero()), x);
        assert_eq!(j_add(&JObj::zero(), &x), x);
    }

    #[test]
    fn twist_is_a_valid_morphism_and_involutive() {
        let objs = enumerate_j_objects(&Bound::default().with_size(2).with_count(1000));
        for x in &objs {
            for y in &objs {
                let t = j_twist(x, y);
                let back = j_twist(y, x);
                let round = j_compose(&back, &t).unwrap();
                assert_eq!(round, JMor::identity(&j_add(x, y)));
            }
        }
    }

    #[test]
    fn json_shapes() {
        let x = JObj::new(3, SignedSubset::new(3, vec![-1, 2]));
        assert_eq!(x.to_json(), json!({"n": 3, "T": [-1, 2]}));
        let phi = FinInj::new(2, vec![2]);
        let m = JMor::new(phi, JObj::new(1, SignedSubset::empty(1)), JObj::new(2, SignedSubset::new(2, vec![1]))).unwrap();
        assert_eq!(m.to_json()["phi"], json!([2]));
    }
}
