use super::{Quantale, QuantaleMorphism};
use crate::lattice::{FiniteLattice, FinitePoset};

/// The interval `[a) = {x | a ≤ x}` with multiplication `x ·ₐ y = x·y ∨ a`.
#[derive(Debug, Clone)]
pub struct IntervalQuantale<'a> {
    pub parent: &'a Quantale,
    pub anchor: usize,
    /// Parent indices of the interval, ascending.
    members: Vec<usize>,
    pub quantale: Quantale,
}

/// Builds `[a)` as a quantale in its own right, labelled like the parent.
pub fn interval_quantale(q: &Quantale, a: usize) -> IntervalQuantale<'_> {
    let members: Vec<usize> = q.elements().filter(|&x| q.leq(a, x)).collect();
    let local = |x: usize| members.binary_search(&x).expect("closed under the interval operations");
    let labels = members.iter().map(|&x| q.label(x).to_string()).collect();
    let mut pairs = Vec::new();
    for (i, &x) in members.iter().enumerate() {
        for (j, &y) in members.iter().enumerate() {
            if q.leq(x, y) {
                pairs.push((i, j));
            }
        }
    }
    let lattice = FinitePoset::from_relation(labels, &pairs)
        .and_then(FiniteLattice::from_poset)
        .expect("an up-set of a lattice is a lattice");
    let mul = members
        .iter()
        .map(|&x| members.iter().map(|&y| local(q.join(q.mul(x, y), a))).collect())
        .collect();
    let quantale = Quantale::new(lattice, mul).expect("[a) is a quantale under ·ₐ");
    IntervalQuantale {
        parent: q,
        anchor: a,
        members,
        quantale,
    }
}

impl<'a> IntervalQuantale<'a> {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn to_parent(&self, i: usize) -> usize {
        self.members[i]
    }

    pub fn from_parent(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    /// `uₐ : A → [a)`, `x ↦ x∨a`.
    pub fn projection(&self) -> QuantaleMorphism<'_> {
        let map = self
            .parent
            .elements()
            .map(|x| self.from_parent(self.parent.join(x, self.anchor)).unwrap())
            .collect();
        QuantaleMorphism::new(self.parent, &self.quantale, map).expect("uₐ is a quantale morphism")
    }

    /// Complemented elements of `[a)`, as parent indices.
    pub fn boolean_center_in_parent(&self) -> Vec<usize> {
        self.quantale
            .boolean_center()
            .iter()
            .map(|&i| self.members[i])
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn interval_at_bottom_is_the_whole_quantale() {
        let d = divisors(12);
        let iv = interval_quantale(&d, d.bottom());
        assert_eq!(iv.len(), d.len());
        assert_eq!(iv.quantale.mul_table(), d.mul_table());
        let u = iv.projection();
        assert!(u.is_isomorphism());
    }

    #[test]
    fn d12_intervals() {
        let d = divisors(12);
        let at3 = interval_quantale(&d, d.el("3"));
        assert_eq!(at3.len(), 2);
        let at4 = interval_quantale(&d, d.el("4"));
        assert_eq!(at4.len(), 3);
        assert!(at4.quantale.lattice().is_chain());
        // 2 ·₄ 2 = 4 ∨ 4 = 4, the bottom of [4)
        let two = at4.from_parent(d.el("2")).unwrap();
        assert_eq!(at4.quantale.mul(two, two), at4.quantale.bottom());
        for x in at4.quantale.elements() {
            assert_eq!(
                at4.quantale.radical(x),
                at4.from_parent(d.radical(at4.to_parent(x))).unwrap()
            );
        }
    }

    #[test]
    fn w5_interval_above_z_is_boolean() {
        let w = w5();
        let iv = interval_quantale(&w, w.el("{z}"));
        assert_eq!(iv.len(), 4);
        assert_eq!(iv.quantale.boolean_center().len(), 4);
        let u = iv.projection();
        assert!(u.is_unital());
        assert!(u.is_surjective());
        assert_eq!(u.kernel(), w.el("{z}"));
    }
}
