//! Symbolic terms: the universal value type carried by objects and morphisms.
//!
//! Every category in this crate stores its objects and morphism payloads as
//! `Term`s in a per-category normal form, so equality is always plain
//! syntactic equality. Nested constructions (tuples of objects, sequences of
//! pairs, tagged markers) all reuse the same representation.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Term {
    Int(i64),
    Str(String),
    List(Vec<Term>),
}

impl Term {
    pub fn s(s: &str) -> Term {
        Term::Str(s.to_string())
    }

    pub fn int(i: i64) -> Term {
        Term::Int(i)
    }

    /// Tagged node: a list whose head is a string tag.
    pub fn tag(name: &str, args: Vec<Term>) -> Term {
        let mut v = Vec::with_capacity(args.len() + 1);
        v.push(Term::s(name));
        v.extend(args);
        Term::List(v)
    }

    pub fn is_tag(&self, name: &str) -> bool {
        matches!(self, Term::List(v) if v.first() == Some(&Term::Str(name.to_string())))
    }

    /// Arguments of a tagged node; panics if the term is not tagged `name`.
    pub fn args(&self, name: &str) -> &[Term] {
        match self {
            Term::List(v) if v.first().map(|h| h == &Term::Str(name.to_string())) == Some(true) => {
                &v[1..]
            }
            _ => panic!("expected tag {name:?}, got {self:?}"),
        }
    }

    pub fn as_int(&self) -> i64 {
        match self {
            Term::Int(i) => *i,
            _ => panic!("expected int, got {self:?}"),
        }
    }

    pub fn as_list(&self) -> &[Term] {
        match self {
            Term::List(v) => v,
            _ => panic!("expected list, got {self:?}"),
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Int(i) => write!(f, "{i}"),
            Term::Str(s) => write!(f, "{s}"),
            Term::List(v) => {
                write!(f, "(")?;
                for (i, t) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{t:?}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A morphism term: endpoints plus a category-specific payload, all symbolic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Mor {
    pub dom: Term,
    pub cod: Term,
    pub pay: Term,
}

impl Mor {
    pub fn new(dom: Term, cod: Term, pay: Term) -> Mor {
        Mor { dom, cod, pay }
    }

    pub fn to_term(&self) -> Term {
        Term::tag("mor", vec![self.dom.clone(), self.cod.clone(), self.pay.clone()])
    }

    pub fn from_term(t: &Term) -> Mor {
        let a = t.args("mor");
        Mor::new(a[0].clone(), a[1].clone(), a[2].clone())
    }
}

impl fmt::Debug for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?} => {:?} : {:?}]", self.dom, self.cod, self.pay)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tagged_roundtrip() {
        let t = Term::tag("pair", vec![Term::int(1), Term::s("x")]);
        assert!(t.is_tag("pair"));
        assert_eq!(t.args("pair"), &[Term::int(1), Term::s("x")]);
        assert!(!t.is_tag("other"));
    }

    #[test]
    fn ordering_is_total() {
        let mut v = vec![Term::s("b"), Term::int(3), Term::List(vec![]), Term::int(1)];
        v.sort();
        assert_eq!(
            v,
            vec![Term::int(1), Term::int(3), Term::s("b"), Term::List(vec![])]
        );
    }
}
