//! Finite commutative unital quantales.
//!
//! On a finite carrier every element is compact, so coherence is automatic
//! and arbitrary joins reduce to finite ones. A [`Quantale`] is validated
//! once at construction; the m-prime spectrum, the maximal elements, the
//! radical table and the Boolean center are computed eagerly and cached.

mod interval;
mod iso;
mod morphism;
mod product;

use std::fmt;

use thiserror::Error;

use crate::lattice::{FiniteLattice, FinitePoset, LatticeError};

pub use interval::{interval_quantale, IntervalQuantale};
pub use iso::find_isomorphism;
pub use morphism::QuantaleMorphism;
pub use product::{decompose_by_elements, product, Decomposition, ProductQuantale};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuantaleError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("multiplication table is not {0} × {0}")]
    ShapeMismatch(usize),
    #[error("multiplication table entry {0} is out of range")]
    EntryOutOfRange(usize),
    #[error("not unital: {x} · 1 ≠ {x}")]
    NotUnital { x: String },
    #[error("not commutative: {x} · {y} ≠ {y} · {x}")]
    NotCommutative { x: String, y: String },
    #[error("not associative: ({x} · {y}) · {z} ≠ {x} · ({y} · {z})")]
    NotAssociative { x: String, y: String, z: String },
    #[error("not distributive: {x} · ⋁{ys:?} ≠ ⋁ of the products")]
    NotDistributive { x: String, ys: Vec<String> },
    #[error("not a quantale morphism: {0}")]
    NotAMorphism(String),
    #[error("morphism does not preserve the unit")]
    NotUnitalMorphism,
    #[error("the product of an empty family is not supported")]
    EmptyProduct,
    #[error("decomposition precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("the one-point quantale has no maximal elements")]
    TrivialQuantale,
}

/// The axiom a multiplication table can violate, in the order the validator
/// checks them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Unit,
    Commutativity,
    Associativity,
    Distributivity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Unit => "unit",
            Axiom::Commutativity => "commutativity",
            Axiom::Associativity => "associativity",
            Axiom::Distributivity => "distributivity",
        })
    }
}

impl QuantaleError {
    /// The violated axiom, for table validation failures.
    pub fn axiom(&self) -> Option<Axiom> {
        match self {
            QuantaleError::NotUnital { .. } => Some(Axiom::Unit),
            QuantaleError::NotCommutative { .. } => Some(Axiom::Commutativity),
            QuantaleError::NotAssociative { .. } => Some(Axiom::Associativity),
            QuantaleError::NotDistributive { .. } => Some(Axiom::Distributivity),
            _ => None,
        }
    }

    /// Witness labels attached to an axiom violation.
    pub fn witness(&self) -> Vec<String> {
        match self {
            QuantaleError::NotUnital { x } => vec![x.clone()],
            QuantaleError::NotCommutative { x, y } => vec![x.clone(), y.clone()],
            QuantaleError::NotAssociative { x, y, z } => vec![x.clone(), y.clone(), z.clone()],
            QuantaleError::NotDistributive { x, ys } => std::iter::once(x.clone()).chain(ys.iter().cloned()).collect(),
            _ => Vec::new(),
        }
    }
}

/// A finite commutative quantale whose unit is the top element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quantale {
    lattice: FiniteLattice,
    mul: Vec<usize>,
    spec: Vec<usize>,
    maxima: Vec<usize>,
    radical: Vec<usize>,
    center: Vec<usize>,
}

impl Quantale {
    /// Validates `mul` against the lattice. Axioms are checked in the order
    /// unit, commutativity, associativity, distributivity (the empty join
    /// `x·0 = 0` first, then binary joins); the first violation is returned.
    pub fn new(lattice: FiniteLattice, mul: Vec<Vec<usize>>) -> Result<Self, QuantaleError> {
        let n = lattice.len();
        if mul.len() != n || mul.iter().any(|row| row.len() != n) {
            return Err(QuantaleError::ShapeMismatch(n));
        }
        let mul: Vec<usize> = mul.into_iter().flatten().collect();
        if let Some(&bad) = mul.iter().find(|&&v| v >= n) {
            return Err(QuantaleError::EntryOutOfRange(bad));
        }
        validate_table(&lattice, &mul)?;
        Ok(Self::assemble(lattice, mul))
    }

    /// The frame on `lattice`: multiplication is the meet.
    pub fn frame(lattice: FiniteLattice) -> Result<Self, QuantaleError> {
        let table = lattice
            .elements()
            .map(|a| lattice.elements().map(|b| lattice.meet(a, b)).collect())
            .collect();
        Self::new(lattice, table)
    }

    fn assemble(lattice: FiniteLattice, mul: Vec<usize>) -> Self {
        let mut q = Quantale {
            lattice,
            mul,
            spec: Vec::new(),
            maxima: Vec::new(),
            radical: Vec::new(),
            center: Vec::new(),
        };
        q.spec = q.compute_m_primes();
        q.maxima = q.lattice.coatoms();
        q.radical = q
            .elements()
            .map(|a| q.lattice.meet_all(q.spec.iter().copied().filter(|&p| q.leq(a, p))))
            .collect();
        q.center = q
            .elements()
            .filter(|&e| {
                q.elements()
                    .any(|f| q.join(e, f) == q.top() && q.mul(e, f) == q.bottom())
            })
            .collect();
        q
    }

    fn compute_m_primes(&self) -> Vec<usize> {
        self.elements()
            .filter(|&p| {
                p != self.top()
                    && self.elements().all(|a| {
                        self.elements()
                            .all(|b| !self.leq(self.mul(a, b), p) || self.leq(a, p) || self.leq(b, p))
                    })
            })
            .collect()
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn poset(&self) -> &FinitePoset {
        self.lattice.poset()
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    /// A one-point carrier, where `0 = 1`.
    pub fn is_trivial(&self) -> bool {
        self.len() == 1
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        self.lattice.elements()
    }

    pub fn label(&self, a: usize) -> &str {
        self.lattice.label(a)
    }

    pub fn labels(&self) -> &[String] {
        self.lattice.labels()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.lattice.index_of(label)
    }

    /// Index of `label`; panics if absent. Intended for fixtures and tests.
    pub fn el(&self, label: &str) -> usize {
        self.index_of(label)
            .unwrap_or_else(|| panic!("no element labelled `{label}`"))
    }

    pub fn render_set(&self, xs: &[usize]) -> String {
        crate::lattice::render_set(self.labels(), xs)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.lattice.leq(a, b)
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.lattice.join(a, b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.lattice.meet(a, b)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b]
    }

    pub fn bottom(&self) -> usize {
        self.lattice.bottom()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        self.lattice.join_all(xs)
    }

    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        self.lattice.meet_all(xs)
    }

    /// The multiplication table as rows.
    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.len()).map(<[usize]>::to_vec).collect()
    }

    /// Whether the multiplication coincides with the meet.
    pub fn is_frame(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.meet(a, b)))
    }

    /// `aⁿ` for `n ≥ 1`.
    pub fn power(&self, a: usize, n: usize) -> usize {
        assert!(n >= 1, "powers start at 1");
        (1..n).fold(a, |acc, _| self.mul(acc, a))
    }

    /// The descending chain `a ≥ a² ≥ …` up to its first repeated value.
    /// On an `N`-element carrier it has at most `N` entries.
    pub fn powers(&self, a: usize) -> Vec<usize> {
        let mut out = vec![a];
        loop {
            let next = self.mul(*out.last().unwrap(), a);
            if out.contains(&next) {
                return out;
            }
            out.push(next);
        }
    }

    /// The value at which the powers of `a` stabilize; `aⁿ ≤ b` for some
    /// `n ≥ 1` iff `stable_power(a) ≤ b`.
    pub fn stable_power(&self, a: usize) -> usize {
        *self.powers(a).last().unwrap()
    }

    /// `a → b = ⋁{x | a·x ≤ b}`.
    pub fn residuum(&self, a: usize, b: usize) -> usize {
        self.join_all(self.elements().filter(|&x| self.leq(self.mul(a, x), b)))
    }

    /// `a⊥ = a → 0`.
    pub fn negation(&self, a: usize) -> usize {
        self.residuum(a, self.bottom())
    }

    /// m-prime elements: `p < 1` with `a·b ≤ p ⟹ a ≤ p or b ≤ p`.
    pub fn m_primes(&self) -> &[usize] {
        &self.spec
    }

    /// Maximal elements of `A ∖ {1}`.
    pub fn maximals(&self) -> &[usize] {
        &self.maxima
    }

    /// `ρ(a)`: the meet of the m-primes above `a` (the empty meet is `1`).
    pub fn radical(&self, a: usize) -> usize {
        self.radical[a]
    }

    /// `ρ(a)` computed independently as `⋁{c | cᵏ ≤ a for some k ≥ 1}`.
    pub fn radical_by_powers(&self, a: usize) -> usize {
        self.join_all(self.elements().filter(|&c| self.leq(self.stable_power(c), a)))
    }

    pub fn is_radical(&self, a: usize) -> bool {
        self.radical(a) == a
    }

    /// Radical elements, in carrier order.
    pub fn radical_elements(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.is_radical(a)).collect()
    }

    /// Complemented elements: `e` with `e∨f = 1`, `e·f = 0` for some `f`.
    pub fn boolean_center(&self) -> &[usize] {
        &self.center
    }

    pub fn is_complemented(&self, a: usize) -> bool {
        self.center.binary_search(&a).is_ok()
    }

    /// Centre membership by the negation test `a ∨ a⊥ = 1`.
    pub fn boolean_center_by_negation(&self) -> Vec<usize> {
        self.elements()
            .filter(|&a| self.join(a, self.negation(a)) == self.top())
            .collect()
    }

    /// `r(A) = ⋀ Max(A)`.
    pub fn jacobson_radical(&self) -> Result<usize, QuantaleError> {
        if self.is_trivial() {
            return Err(QuantaleError::TrivialQuantale);
        }
        Ok(self.meet_all(self.maxima.iter().copied()))
    }

    /// `R(A)`: the radical elements with `a ∨̇ b = ρ(a∨b)`.
    pub fn radical_frame(&self) -> RadicalFrame {
        RadicalFrame::new(self)
    }
}

fn validate_table(l: &FiniteLattice, mul: &[usize]) -> Result<(), QuantaleError> {
    let n = l.len();
    let m = |a: usize, b: usize| mul[a * n + b];
    let name = |a: usize| l.label(a).to_string();
    let top = l.top();
    let bottom = l.bottom();
    for x in l.elements() {
        if m(x, top) != x {
            return Err(QuantaleError::NotUnital { x: name(x) });
        }
    }
    for x in l.elements() {
        for y in x + 1..n {
            if m(x, y) != m(y, x) {
                return Err(QuantaleError::NotCommutative { x: name(x), y: name(y) });
            }
        }
    }
    for x in l.elements() {
        for y in l.elements() {
            for z in l.elements() {
                if m(m(x, y), z) != m(x, m(y, z)) {
                    return Err(QuantaleError::NotAssociative {
                        x: name(x),
                        y: name(y),
                        z: name(z),
                    });
                }
            }
        }
    }
    for x in l.elements() {
        if m(x, bottom) != bottom {
            return Err(QuantaleError::NotDistributive {
                x: name(x),
                ys: Vec::new(),
            });
        }
    }
    for x in l.elements() {
        for y in l.elements() {
            for z in y + 1..n {
                if m(x, l.join(y, z)) != l.join(m(x, y), m(x, z)) {
                    return Err(QuantaleError::NotDistributive {
                        x: name(x),
                        ys: vec![name(y), name(z)],
                    });
                }
            }
        }
    }
    Ok(())
}

/// The frame `R(A)` of radical elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalFrame {
    /// Parent indices of the radical elements, ascending.
    members: Vec<usize>,
    /// `a ∨̇ b = ρ(a∨b)`, over member indices.
    join_dot: Vec<usize>,
    /// The frame as a quantale with `· = ∧`, labelled like the parent.
    quantale: Quantale,
}

impl RadicalFrame {
    fn new(q: &Quantale) -> Self {
        let members = q.radical_elements();
        let k = members.len();
        let local = |x: usize| members.binary_search(&x).expect("radical element");
        let mut join_dot = vec![0; k * k];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                join_dot[i * k + j] = local(q.radical(q.join(a, b)));
            }
        }
        let labels = members.iter().map(|&a| q.label(a).to_string()).collect();
        let mut pairs = Vec::new();
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                if q.leq(a, b) {
                    pairs.push((i, j));
                }
            }
        }
        let lattice = FinitePoset::from_relation(labels, &pairs)
            .and_then(FiniteLattice::from_poset)
            .expect("radical elements form a complete lattice");
        let quantale = Quantale::frame(lattice).expect("R(A) satisfies the frame law");
        RadicalFrame {
            members,
            join_dot,
            quantale,
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Parent index of frame element `i`.
    pub fn to_parent(&self, i: usize) -> usize {
        self.members[i]
    }

    /// Frame index of the parent element `a`, if radical.
    pub fn from_parent(&self, a: usize) -> Option<usize> {
        self.members.binary_search(&a).ok()
    }

    pub fn join_dot(&self, i: usize, j: usize) -> usize {
        self.join_dot[i * self.len() + j]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.quantale.meet(i, j)
    }

    pub fn bottom(&self) -> usize {
        self.quantale.bottom()
    }

    pub fn top(&self) -> usize {
        self.quantale.top()
    }

    /// `R(A)` as a quantale with multiplication `∧`.
    pub fn as_quantale(&self) -> &Quantale {
        &self.quantale
    }

    /// Whether `∨̇` agrees with the least upper bounds of the subposet.
    pub fn join_dot_is_lub(&self) -> bool {
        (0..self.len()).all(|i| (0..self.len()).all(|j| self.join_dot(i, j) == self.quantale.join(i, j)))
    }

    /// Every element is a `∨̇`-join of complemented elements.
    pub fn is_zero_dimensional(&self) -> bool {
        let q = &self.quantale;
        q.elements().all(|a| {
            let below: Vec<usize> = q.boolean_center().iter().copied().filter(|&e| q.leq(e, a)).collect();
            q.join_all(below) == a
        })
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::lattice::build_lattice;

    pub fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    pub fn chain_frame(n: usize) -> Quantale {
        let labels: Vec<String> = match n {
            3 => vec!["0".into(), "m".into(), "1".into()],
            _ => (0..n).map(|i| i.to_string()).collect(),
        };
        let pairs: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Quantale::frame(FiniteLattice::from_poset(FinitePoset::from_relation(labels, &pairs).unwrap()).unwrap())
            .unwrap()
    }

    pub fn b4() -> Quantale {
        Quantale::frame(
            build_lattice(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]).unwrap(),
        )
        .unwrap()
    }

    pub fn w5() -> Quantale {
        Quantale::frame(
            build_lattice(
                &["{}", "{z}", "{z,x}", "{z,y}", "{z,x,y}"],
                &[
                    ("{}", "{z}"),
                    ("{z}", "{z,x}"),
                    ("{z}", "{z,y}"),
                    ("{z,x}", "{z,x,y}"),
                    ("{z,y}", "{z,x,y}"),
                ],
            )
            .unwrap(),
        )
        .unwrap()
    }

    /// Ideals of `Z_n` indexed by the divisors of `n`: `d` stands for `dZ_n`.
    pub fn divisors(n: usize) -> Quantale {
        let ds: Vec<usize> = (1..=n).filter(|&d| n.is_multiple_of(d)).collect();
        let labels: Vec<String> = ds.iter().map(|d| d.to_string()).collect();
        let leq: Vec<Vec<bool>> = ds.iter().map(|&a| ds.iter().map(|&b| a % b == 0).collect()).collect();
        let lattice = FiniteLattice::from_poset(FinitePoset::new(labels, leq).unwrap()).unwrap();
        let pos = |v: usize| ds.iter().position(|&d| d == v).unwrap();
        let mul = ds
            .iter()
            .map(|&a| ds.iter().map(|&b| pos(gcd(a * b, n))).collect())
            .collect();
        Quantale::new(lattice, mul).unwrap()
    }
}
