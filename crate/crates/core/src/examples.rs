//! Concrete bipermutative categories used throughout the test suites: finite
//! discrete rigs given by tables, finite sets with bijections, and finitely
//! generated free modules over 𝔽₂, together with a named registry the CLI
//! dispatches on.

use crate::biperm::BipermCat;
use crate::effcat::{Bound, Cat, CatError};
use crate::indexing::{shuffle_chi, transpose_perm, Perm};
use crate::permcat::PermCat;
use crate::term::{Mor, Term};
use std::rc::Rc;

/// A finite rig presented by operation tables over indices `0..carrier.len()`.
#[derive(Clone, Debug)]
pub struct FiniteRigTable {
    pub carrier: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

impl FiniteRigTable {
    /// Builds the table and verifies the commutative-rig axioms exhaustively:
    /// both operations are associative, commutative and unital, zero
    /// annihilates, and multiplication distributes over addition.
    pub fn new(
        carrier: &[&str],
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<FiniteRigTable, CatError> {
        let n = carrier.len();
        let shape_ok = add.len() == n
            && mul.len() == n
            && add.iter().chain(mul.iter()).all(|r| r.len() == n && r.iter().all(|&v| v < n));
        if !shape_ok || zero >= n || one >= n {
            return Err(CatError::Structural("malformed rig tables".into()));
        }
        let fail = |msg: &str| Err(CatError::Structural(msg.into()));
        for a in 0..n {
            if add[zero][a] != a || add[a][zero] != a {
                return fail("additive unit fails");
            }
            if mul[one][a] != a || mul[a][one] != a {
                return fail("multiplicative unit fails");
            }
            if mul[zero][a] != zero || mul[a][zero] != zero {
                return fail("zero does not annihilate");
            }
            for b in 0..n {
                if add[a][b] != add[b][a] {
                    return fail("addition not commutative");
                }
                if mul[a][b] != mul[b][a] {
                    return fail("multiplication not commutative");
                }
                for c in 0..n {
                    if add[add[a][b]][c] != add[a][add[b][c]] {
                        return fail("addition not associative");
                    }
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return fail("multiplication not associative");
                    }
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] {
                        return fail("multiplication does not distribute");
                    }
                }
            }
        }
        Ok(FiniteRigTable {
            carrier: carrier.iter().map(|s| s.to_string()).collect(),
            add,
            mul,
            zero,
            one,
        })
    }

    pub fn boolean() -> FiniteRigTable {
        FiniteRigTable::new(
            &["0", "1"],
            vec![vec![0, 1], vec![1, 1]],
            vec![vec![0, 0], vec![0, 1]],
            0,
            1,
        )
        .unwrap()
    }

    pub fn z2() -> FiniteRigTable {
        FiniteRigTable::new(
            &["0", "1"],
            vec![vec![0, 1], vec![1, 0]],
            vec![vec![0, 0], vec![0, 1]],
            0,
            1,
        )
        .unwrap()
    }

    fn index_of(&self, t: &Term) -> usize {
        match t {
            Term::Str(s) => self.carrier.iter().position(|c| c == s).expect("unknown element"),
            _ => panic!("discrete rig objects are names, got {t:?}"),
        }
    }

    fn elem(&self, i: usize) -> Term {
        Term::s(&self.carrier[i])
    }
}

/// The discrete category on the elements of a finite commutative rig: only
/// identity morphisms, operations from the tables, all twists identities.
pub fn discrete_rig(r: &FiniteRigTable) -> BipermCat {
    let id_of = |a: &Term| Mor::new(a.clone(), a.clone(), Term::s("id"));
    let r1 = r.clone();
    let r2 = r.clone();
    let r3 = r.clone();
    let base = Cat {
        name: "discrete-rig".into(),
        identity: Rc::new(id_of),
        compose: Rc::new(move |g, f| {
            if f.cod != g.dom {
                return Err(CatError::Mismatch { f: Box::new(f.clone()), g: Box::new(g.clone()) });
            }
            Ok(Mor::new(f.dom.clone(), g.cod.clone(), Term::s("id")))
        }),
        objects: Rc::new(move |_| (0..r1.carrier.len()).map(|i| r1.elem(i)).collect()),
        homs: Rc::new(move |a, b, _| if a == b { vec![id_of(a)] } else { vec![] }),
    };
    let add_obj = move |a: &Term, b: &Term| r2.elem(r2.add[r2.index_of(a)][r2.index_of(b)]);
    let add2 = add_obj.clone();
    let mul_obj = move |a: &Term, b: &Term| r3.elem(r3.mul[r3.index_of(a)][r3.index_of(b)]);
    let mul2 = mul_obj.clone();
    BipermCat {
        add: PermCat {
            base,
            zero: Some(r.elem(r.zero)),
            oplus: Rc::new(add_obj.clone()),
            oplus_mor: Rc::new(move |f, g| {
                let o = add2(&f.dom, &g.dom);
                Mor::new(o.clone(), o, Term::s("id"))
            }),
            twist: Rc::new(move |a, b| {
                let o = add_obj(a, b);
                Mor::new(o.clone(), o, Term::s("id"))
            }),
        },
        one: r.elem(r.one),
        tensor: Rc::new(mul_obj.clone()),
        tensor_mor: Rc::new(move |f, g| {
            let o = mul2(&f.dom, &g.dom);
            Mor::new(o.clone(), o, Term::s("id"))
        }),
        gamma_tensor: Some(Rc::new(move |a, b| {
            let o = mul_obj(a, b);
            Mor::new(o.clone(), o, Term::s("id"))
        })),
        dl: None,
    }
}

fn obj_n(t: &Term) -> usize {
    t.as_int() as usize
}

fn perm_mor(n: usize, m: usize, p: &Perm) -> Mor {
    Mor::new(Term::int(n as i64), Term::int(m as i64), p.to_term())
}

/// Finite sets and bijections: objects are cardinalities, morphisms are
/// permutations, ⊕ is disjoint union with the shuffle twist, ⊗ is the
/// product under the encoding (i,j) ↦ (i−1)m+j with the transposition twist.
pub fn finite_sets_e() -> BipermCat {
    let base = Cat {
        name: "finite-sets".into(),
        identity: Rc::new(|a| perm_mor(obj_n(a), obj_n(a), &Perm::identity(obj_n(a)))),
        compose: Rc::new(|g, f| {
            if f.cod != g.dom {
                return Err(CatError::Mismatch { f: Box::new(f.clone()), g: Box::new(g.clone()) });
            }
            let p = Perm::from_term(&g.pay).compose(&Perm::from_term(&f.pay));
            Ok(perm_mor(obj_n(&f.dom), obj_n(&g.cod), &p))
        }),
        objects: Rc::new(|b| (0..=b.size).map(|n| Term::int(n as i64)).collect()),
        homs: Rc::new(|a, b, _| {
            let (n, m) = (obj_n(a), obj_n(b));
            if n != m || n > 6 {
                return vec![];
            }
            Perm::all(n).iter().map(|p| perm_mor(n, m, p)).collect()
        }),
    };
    let tensor_obj = |a: &Term, b: &Term| Term::int((obj_n(a) * obj_n(b)) as i64);
    BipermCat {
        add: PermCat {
            base,
            zero: Some(Term::int(0)),
            oplus: Rc::new(|a, b| Term::int((obj_n(a) + obj_n(b)) as i64)),
            oplus_mor: Rc::new(|f, g| {
                let p = Perm::from_term(&f.pay).block_sum(&Perm::from_term(&g.pay));
                perm_mor(obj_n(&f.dom) + obj_n(&g.dom), obj_n(&f.cod) + obj_n(&g.cod), &p)
            }),
            twist: Rc::new(|a, b| {
                let (n, m) = (obj_n(a), obj_n(b));
                perm_mor(n + m, m + n, &shuffle_chi(n, m))
            }),
        },
        one: Term::int(1),
        tensor: Rc::new(tensor_obj),
        tensor_mor: Rc::new(|f, g| {
            let (n, m) = (obj_n(&f.dom), obj_n(&g.dom));
            let sig = Perm::from_term(&f.pay);
            let tau = Perm::from_term(&g.pay);
            // (i−1)m+j ↦ (σ(i)−1)m+τ(j)
            let mut images = vec![0usize; n * m];
            for i in 1..=n {
                for j in 1..=m {
                    images[(i - 1) * m + j - 1] = (sig.apply(i) - 1) * m + tau.apply(j);
                }
            }
            perm_mor(n * m, n * m, &Perm::new(images))
        }),
        gamma_tensor: Some(Rc::new(|a, b| {
            let (n, m) = (obj_n(a), obj_n(b));
            perm_mor(n * m, m * n, &transpose_perm(n, m))
        })),
        dl: None,
    }
}

type Mat = Vec<Vec<u8>>;

fn mat_to_term(rows: usize, cols: usize, m: &Mat) -> Term {
    let _ = (rows, cols);
    Term::tag(
        "mat",
        m.iter()
            .map(|r| Term::List(r.iter().map(|&v| Term::int(v as i64)).collect()))
            .collect(),
    )
}

fn mat_from_term(t: &Term) -> Mat {
    t.args("mat")
        .iter()
        .map(|r| r.as_list().iter().map(|v| v.as_int() as u8).collect())
        .collect()
}

fn mat_identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| u8::from(i == j)).collect()).collect()
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|t| a[i][t] & b[t][j]).fold(0, |x, y| x ^ y))
                .collect()
        })
        .collect()
}

fn mat_block(a: &Mat, b: &Mat) -> Mat {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![0u8; n + m]; n + m];
    for i in 0..n {
        out[i][..n].copy_from_slice(&a[i]);
    }
    for i in 0..m {
        out[n + i][n..].copy_from_slice(&b[i]);
    }
    out
}

/// Kronecker product with lexicographic index convention: row (i−1)m+j of
/// A⊗B corresponds to the pair (i, j).
fn mat_kron(a: &Mat, b: &Mat) -> Mat {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![0u8; n * m]; n * m];
    for i in 0..n {
        for k in 0..n {
            for j in 0..m {
                for l in 0..m {
                    out[i * m + j][k * m + l] = a[i][k] & b[j][l];
                }
            }
        }
    }
    out
}

/// The matrix sending e_i to e_{π(i)}.
fn mat_from_perm(p: &Perm) -> Mat {
    let n = p.arity();
    let mut out = vec![vec![0u8; n]; n];
    for i in 1..=n {
        out[p.apply(i) - 1][i - 1] = 1;
    }
    out
}

fn mat_invertible(m: &Mat) -> bool {
    let n = m.len();
    let mut a = m.clone();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r][col] == 1) else {
            return false;
        };
        a.swap(col, piv);
        for r in 0..n {
            if r != col && a[r][col] == 1 {
                let src = a[col].clone();
                for (x, s) in a[r].iter_mut().zip(src.iter()) {
                    *x ^= s;
                }
            }
        }
    }
    true
}

fn all_invertible(n: usize) -> Vec<Mat> {
    assert!(n <= 3, "general-linear enumeration kept at rank ≤ 3");
    let cells = n * n;
    let mut out = Vec::new();
    for bits in 0..(1u32 << cells) {
        let m: Mat = (0..n)
            .map(|i| (0..n).map(|j| ((bits >> (i * n + j)) & 1) as u8).collect())
            .collect();
        if mat_invertible(&m) {
            out.push(m);
        }
    }
    out
}

fn mat_mor(n: usize, m: usize, a: &Mat) -> Mor {
    Mor::new(Term::int(n as i64), Term::int(m as i64), mat_to_term(n, m, a))
}

/// Free 𝔽₂-modules and isomorphisms: objects are ranks, morphisms invertible
/// matrices, ⊕ block sum, ⊗ Kronecker product; twists are the permutation
/// matrices of the shuffle and the transposition.
pub fn free_modules_f2() -> BipermCat {
    let base = Cat {
        name: "f2-free-modules".into(),
        identity: Rc::new(|a| mat_mor(obj_n(a), obj_n(a), &mat_identity(obj_n(a)))),
        compose: Rc::new(|g, f| {
            if f.cod != g.dom {
                return Err(CatError::Mismatch { f: Box::new(f.clone()), g: Box::new(g.clone()) });
            }
            let m = mat_mul(&mat_from_term(&g.pay), &mat_from_term(&f.pay));
            Ok(mat_mor(obj_n(&f.dom), obj_n(&g.cod), &m))
        }),
        objects: Rc::new(|b| (0..=b.size.min(3)).map(|n| Term::int(n as i64)).collect()),
        homs: Rc::new(|a, b, _| {
            let (n, m) = (obj_n(a), obj_n(b));
            if n != m || n > 3 {
                return vec![];
            }
            all_invertible(n).iter().map(|x| mat_mor(n, m, x)).collect()
        }),
    };
    BipermCat {
        add: PermCat {
            base,
            zero: Some(Term::int(0)),
            oplus: Rc::new(|a, b| Term::int((obj_n(a) + obj_n(b)) as i64)),
            oplus_mor: Rc::new(|f, g| {
                let m = mat_block(&mat_from_term(&f.pay), &mat_from_term(&g.pay));
                mat_mor(obj_n(&f.dom) + obj_n(&g.dom), obj_n(&f.cod) + obj_n(&g.cod), &m)
            }),
            twist: Rc::new(|a, b| {
                let (n, m) = (obj_n(a), obj_n(b));
                mat_mor(n + m, m + n, &mat_from_perm(&shuffle_chi(n, m)))
            }),
        },
        one: Term::int(1),
        tensor: Rc::new(|a, b| Term::int((obj_n(a) * obj_n(b)) as i64)),
        tensor_mor: Rc::new(|f, g| {
            let m = mat_kron(&mat_from_term(&f.pay), &mat_from_term(&g.pay));
            mat_mor(obj_n(&f.dom) * obj_n(&g.dom), obj_n(&f.cod) * obj_n(&g.cod), &m)
        }),
        gamma_tensor: Some(Rc::new(|a, b| {
            let (n, m) = (obj_n(a), obj_n(b));
            mat_mor(n * m, m * n, &mat_from_perm(&transpose_perm(n, m)))
        })),
        dl: None,
    }
}

/// A deliberately broken variant of the finite-sets category (identity
/// additive twist): construction succeeds but the permutative checker must
/// report twist violations. Used as a negative control.
pub fn corrupted_fixture() -> BipermCat {
    let mut c = finite_sets_e();
    c.add.twist = Rc::new(|a, b| {
        let k = obj_n(a) + obj_n(b);
        perm_mor(k, k, &Perm::identity(k))
    });
    c
}

/// An additive presentation of the expected component rig of an example:
/// named generators, additive relations between multiplicity vectors, a
/// multiplication table on generators, and a classifier sending an object of
/// the category to its multiplicity vector.
#[derive(Clone)]
pub struct RigPresentation {
    pub gens: Vec<String>,
    /// Each relation asserts lhs = rhs as formal sums of generators.
    pub relations: Vec<(Vec<i64>, Vec<i64>)>,
    /// mul[i][j] = the product g_i·g_j as a formal sum of generators.
    pub mul: Vec<Vec<Vec<i64>>>,
    pub class_of: Rc<dyn Fn(&Term) -> Vec<i64>>,
}

impl RigPresentation {
    /// ℕ: one generator, no relations, idempotent generator product; objects
    /// are classified by their integer size.
    pub fn naturals() -> RigPresentation {
        RigPresentation {
            gens: vec!["u".into()],
            relations: vec![],
            mul: vec![vec![vec![1]]],
            class_of: Rc::new(|t| vec![t.as_int()]),
        }
    }

    /// The components of a discrete finite rig: one generator per nonzero
    /// element, with all additions recorded as relations.
    pub fn of_table(r: &FiniteRigTable) -> RigPresentation {
        let nonzero: Vec<usize> = (0..r.carrier.len()).filter(|&i| i != r.zero).collect();
        let vec_of = |i: usize| -> Vec<i64> {
            nonzero.iter().map(|&g| i64::from(g == i)).collect()
        };
        let mut relations = Vec::new();
        for &a in &nonzero {
            for &b in &nonzero {
                let mut lhs = vec_of(a);
                for (l, x) in lhs.iter_mut().zip(vec_of(b)) {
                    *l += x;
                }
                relations.push((lhs, vec_of(r.add[a][b])));
            }
        }
        let mul = nonzero
            .iter()
            .map(|&a| nonzero.iter().map(|&b| vec_of(r.mul[a][b])).collect())
            .collect();
        let r2 = r.clone();
        RigPresentation {
            gens: nonzero.iter().map(|&i| r.carrier[i].clone()).collect(),
            relations,
            mul,
            class_of: Rc::new(move |t| {
                let i = r2.index_of(t);
                nonzero.iter().map(|&g| i64::from(g == i)).collect()
            }),
        }
    }
}

/// A registered example: the category, whether every morphism is invertible,
/// the default bound its checkers run at, and its expected component rig.
#[derive(Clone)]
pub struct Example {
    pub name: &'static str,
    pub cat: BipermCat,
    pub groupoid: bool,
    pub default_bound: Bound,
    pub pi0: RigPresentation,
}

/// All named examples the CLI can address.
pub fn registry() -> Vec<Example> {
    let b = Bound::default();
    vec![
        Example {
            name: "bool-rig",
            cat: discrete_rig(&FiniteRigTable::boolean()),
            groupoid: true,
            default_bound: b,
            pi0: RigPresentation::of_table(&FiniteRigTable::boolean()),
        },
        Example {
            name: "z2",
            cat: discrete_rig(&FiniteRigTable::z2()),
            groupoid: true,
            default_bound: b,
            pi0: RigPresentation::of_table(&FiniteRigTable::z2()),
        },
        Example {
            name: "finsets",
            cat: finite_sets_e(),
            groupoid: true,
            default_bound: b.with_size(4),
            pi0: RigPresentation::naturals(),
        },
        Example {
            name: "f2mod",
            cat: free_modules_f2(),
            groupoid: true,
            default_bound: b.with_size(2),
            pi0: RigPresentation::naturals(),
        },
        Example {
            name: "corrupted-fixture",
            cat: corrupted_fixture(),
            groupoid: true,
            default_bound: b.with_size(3),
            pi0: RigPresentation::naturals(),
        },
    ]
}

pub fn example(name: &str) -> Option<Example> {
    registry().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biperm::check_bipermutative;

    #[test]
    fn rig_tables_validate() {
        assert!(FiniteRigTable::new(
            &["0", "1"],
            vec![vec![0, 1], vec![1, 1]],
            // 1·(1+1) = 1 but 1·1 + 1·1 = 1+1 = 1 holds; break associativity
            // of addition instead via a bad unit row.
            vec![vec![0, 1], vec![0, 1]],
            0,
            1,
        )
        .is_err());
        // Non-distributive control: x+x = 0, x·x = x over {0,1} with a
        // broken distribution through a twisted add table.
        assert!(FiniteRigTable::new(
            &["0", "1", "2"],
            vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
            vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]],
            0,
            1,
        )
        .is_err());
        assert!(FiniteRigTable::boolean().carrier.len() == 2);
        assert!(FiniteRigTable::z2().carrier.len() == 2);
    }

    #[test]
    fn gl2_f2_has_six_elements() {
        assert_eq!(all_invertible(2).len(), 6);
        assert_eq!(all_invertible(1).len(), 1);
        assert_eq!(all_invertible(0).len(), 1);
    }

    #[test]
    fn finite_sets_product_twist_values() {
        let e = finite_sets_e();
        // Additive twist 𝟐⊕𝟏 → 𝟏⊕𝟐 is the shuffle [2,3,1].
        let t = e.add.gamma(&Term::int(2), &Term::int(1));
        assert_eq!(Perm::from_term(&t.pay).images(), &[2, 3, 1]);
        // Multiplicative twist on 𝟐⊗𝟑 sends (i,j) to (j,i).
        let g = (e.gamma_tensor.as_ref().unwrap())(&Term::int(2), &Term::int(3));
        let p = Perm::from_term(&g.pay);
        // (1,2) is element 2 of 𝟐⊗𝟑 and must land on (2,1), element 3 of 𝟑⊗𝟐.
        assert_eq!(p.apply(2), 3);
        assert_eq!(p.arity(), 6);
    }

    #[test]
    fn discrete_rigs_pass_checker() {
        let b = Bound::default();
        assert!(check_bipermutative(&discrete_rig(&FiniteRigTable::boolean()), &b).ok());
        assert!(check_bipermutative(&discrete_rig(&FiniteRigTable::z2()), &b).ok());
    }

    #[test]
    fn corrupted_fixture_fails_checker() {
        let rep = check_bipermutative(&corrupted_fixture(), &Bound::default().with_size(2));
        assert!(!rep.ok());
    }
}
