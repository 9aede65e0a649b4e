//! Enveloping-algebra expressions and their evaluation.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

use crate::algebra::{AlgebraModel, Gen};
use crate::error::{Error, Result};
use crate::linalg::{nilpotent_series, Scalar, SeriesKind, SparseMat};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Node {
    Gen(Gen),
    Const(Scalar),
    Sum(Vec<UExpr>),
    /// Ordered product.
    Prod(Vec<UExpr>),
    Exp(UExpr),
    /// `ln(1 + x)`.
    Log1p(UExpr),
    /// `(1 + x)^r`.
    Pow1p(UExpr, BigRational),
}

/// Shared, immutable expression DAG over the generators of `U(so(M))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UExpr(Arc<Node>);

impl UExpr {
    pub fn node(&self) -> &Node {
        &self.0
    }

    pub fn gen(g: Gen) -> Self {
        UExpr(Arc::new(Node::Gen(g)))
    }

    pub fn constant(c: Scalar) -> Self {
        UExpr(Arc::new(Node::Const(c)))
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn zero() -> Self {
        Self::constant(Scalar::zero())
    }

    pub fn sum(items: Vec<UExpr>) -> Self {
        UExpr(Arc::new(Node::Sum(items)))
    }

    pub fn prod(items: Vec<UExpr>) -> Self {
        UExpr(Arc::new(Node::Prod(items)))
    }

    pub fn exp(x: UExpr) -> Self {
        UExpr(Arc::new(Node::Exp(x)))
    }

    pub fn log1p(x: UExpr) -> Self {
        UExpr(Arc::new(Node::Log1p(x)))
    }

    pub fn pow1p(x: UExpr, r: BigRational) -> Self {
        UExpr(Arc::new(Node::Pow1p(x, r)))
    }

    /// `c · self`.
    pub fn scale(&self, c: Scalar) -> Self {
        if c.is_one() {
            return self.clone();
        }
        Self::prod(vec![Self::constant(c), self.clone()])
    }

    pub fn neg(&self) -> Self {
        self.scale(-Scalar::one())
    }

    pub fn add(&self, other: &UExpr) -> Self {
        Self::sum(vec![self.clone(), other.clone()])
    }

    pub fn sub(&self, other: &UExpr) -> Self {
        Self::sum(vec![self.clone(), other.neg()])
    }

    pub fn mul(&self, other: &UExpr) -> Self {
        Self::prod(vec![self.clone(), other.clone()])
    }

    /// Counit: generators map to 0. Series nodes require a vanishing
    /// argument counit.
    pub fn counit(&self) -> Result<Scalar> {
        Ok(match self.node() {
            Node::Gen(_) => Scalar::zero(),
            Node::Const(c) => c.clone(),
            Node::Sum(xs) => {
                let mut acc = Scalar::zero();
                for x in xs {
                    acc += &x.counit()?;
                }
                acc
            }
            Node::Prod(xs) => {
                let mut acc = Scalar::one();
                for x in xs {
                    acc = acc * x.counit()?;
                }
                acc
            }
            Node::Exp(x) | Node::Log1p(x) | Node::Pow1p(x, _) => {
                let e = x.counit()?;
                if !e.is_zero() {
                    return Err(Error::NonRationalCounit(self.to_string()));
                }
                match self.node() {
                    Node::Log1p(_) => Scalar::zero(),
                    _ => Scalar::one(),
                }
            }
        })
    }

    /// The element as a linear combination of generators, if it is one.
    pub fn as_lie_element(&self) -> Option<Vec<(Gen, Scalar)>> {
        let mut acc: Vec<(Gen, Scalar)> = Vec::new();
        self.collect_linear(&Scalar::one(), &mut acc)?;
        let mut merged: std::collections::BTreeMap<Gen, Scalar> = std::collections::BTreeMap::new();
        for (g, c) in acc {
            let e = merged.entry(g).or_insert_with(Scalar::zero);
            *e += &c;
        }
        Some(merged.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    fn collect_linear(&self, scale: &Scalar, acc: &mut Vec<(Gen, Scalar)>) -> Option<()> {
        match self.node() {
            Node::Gen(g) => {
                acc.push((*g, scale.clone()));
                Some(())
            }
            Node::Sum(xs) => xs.iter().try_for_each(|x| x.collect_linear(scale, acc)),
            Node::Prod(xs) => {
                let mut c = scale.clone();
                let mut lin = None;
                for x in xs {
                    match x.node() {
                        Node::Const(k) => c = c * k,
                        _ if lin.is_none() => lin = Some(x),
                        _ => return None,
                    }
                }
                match lin {
                    Some(x) => x.collect_linear(&c, acc),
                    None if c.is_zero() => Some(()),
                    None => None,
                }
            }
            Node::Const(c) if c.is_zero() => Some(()),
            _ => None,
        }
    }

    /// Maximal linear sub-expressions (Lie algebra elements) occurring in
    /// the expression.
    pub fn lie_leaves(&self, out: &mut Vec<Vec<(Gen, Scalar)>>) {
        if let Some(l) = self.as_lie_element() {
            if !l.is_empty() {
                out.push(l);
            }
            return;
        }
        match self.node() {
            Node::Gen(_) | Node::Const(_) => {}
            Node::Sum(xs) | Node::Prod(xs) => xs.iter().for_each(|x| x.lie_leaves(out)),
            Node::Exp(x) | Node::Log1p(x) | Node::Pow1p(x, _) => x.lie_leaves(out),
        }
    }
}

pub fn counit_eval(x: &UExpr) -> Result<Scalar> {
    x.counit()
}

impl fmt::Debug for UExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for UExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, xs: &[UExpr], sep: &str| -> fmt::Result {
            write!(f, "(")?;
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    write!(f, "{sep}")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")
        };
        match self.node() {
            Node::Gen(g) => write!(f, "{g}"),
            Node::Const(c) => write!(f, "{c}"),
            Node::Sum(xs) => join(f, xs, " + "),
            Node::Prod(xs) => join(f, xs, "*"),
            Node::Exp(x) => write!(f, "exp({x})"),
            Node::Log1p(x) => write!(f, "log1p({x})"),
            Node::Pow1p(x, r) => write!(f, "(1 + {x})^({r})"),
        }
    }
}

/// Algebra homomorphism applied to one tensor leg.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hom {
    /// Defining representation ρ, dimension `M`.
    Rep,
    /// `(ρ⊗ρ)∘Δ` with primitive generators, dimension `M²`.
    Coproduct,
}

/// Memoizing evaluator for one (model, homomorphism) pair.
pub struct Evaluator<'a> {
    model: &'a AlgebraModel,
    hom: Hom,
    cache: HashMap<*const Node, (UExpr, SparseMat)>,
}

impl<'a> Evaluator<'a> {
    pub fn new(model: &'a AlgebraModel, hom: Hom) -> Self {
        Evaluator { model, hom, cache: HashMap::new() }
    }

    pub fn dim(&self) -> usize {
        match self.hom {
            Hom::Rep => self.model.dim(),
            Hom::Coproduct => self.model.dim() * self.model.dim(),
        }
    }

    fn gen_image(&self, g: &Gen) -> Result<SparseMat> {
        let m = self.model.matrix(g)?;
        Ok(match self.hom {
            Hom::Rep => m.clone(),
            Hom::Coproduct => {
                let id = SparseMat::identity(self.model.dim());
                m.kron(&id).add(&id.kron(m))?
            }
        })
    }

    pub fn eval(&mut self, x: &UExpr) -> Result<SparseMat> {
        let key = Arc::as_ptr(&x.0);
        if let Some((_, v)) = self.cache.get(&key) {
            return Ok(v.clone());
        }
        let d = self.dim();
        let id = || SparseMat::identity(d);
        let value = match x.node() {
            Node::Gen(g) => self.gen_image(g)?,
            Node::Const(c) => SparseMat::diagonal(d, c),
            Node::Sum(xs) => {
                let mut acc = SparseMat::zeros(d, d);
                for t in xs {
                    acc = acc.add(&self.eval(t)?)?;
                }
                acc
            }
            Node::Prod(xs) => {
                let mut acc: Option<SparseMat> = None;
                let mut scalar = Scalar::one();
                for t in xs {
                    if let Node::Const(c) = t.node() {
                        scalar = scalar * c;
                        continue;
                    }
                    let v = self.eval(t)?;
                    acc = Some(match acc {
                        None => v,
                        Some(a) => a.mul(&v)?,
                    });
                }
                acc.unwrap_or_else(id).scale(&scalar)
            }
            Node::Exp(t) => {
                let v = self.eval(t)?;
                nilpotent_series(&v, &SeriesKind::Exp)?
            }
            Node::Log1p(t) => {
                let v = self.eval(t)?;
                nilpotent_series(&v, &SeriesKind::Log1p)?
            }
            Node::Pow1p(t, r) => {
                let v = self.eval(t)?;
                nilpotent_series(&v, &SeriesKind::Pow1p(r.clone()))?
            }
        };
        self.cache.insert(key, (x.clone(), value.clone()));
        Ok(value)
    }
}

pub fn eval_in_rep(x: &UExpr, model: &AlgebraModel) -> Result<SparseMat> {
    Evaluator::new(model, Hom::Rep).eval(x)
}

pub fn coproduct_eval(x: &UExpr, model: &AlgebraModel) -> Result<SparseMat> {
    Evaluator::new(model, Hom::Coproduct).eval(x)
}
