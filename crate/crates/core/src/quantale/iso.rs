use super::Quantale;

/// Searches for an isomorphism `a → b` (order- and multiplication-preserving
/// bijection). Returns the map on success.
pub fn find_isomorphism(a: &Quantale, b: &Quantale) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let sig_a: Vec<Signature> = a.elements().map(|x| Signature::of(a, x)).collect();
    let sig_b: Vec<Signature> = b.elements().map(|x| Signature::of(b, x)).collect();
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    let mut search = Search {
        a,
        b,
        sig_a,
        sig_b,
        forward: vec![None; a.len()],
        used: vec![false; b.len()],
    };
    if search.extend(0) {
        Some(search.forward.into_iter().map(Option::unwrap).collect())
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Signature {
    below: usize,
    above: usize,
    annihilated_by: usize,
    idempotent: bool,
}

impl Signature {
    fn of(q: &Quantale, x: usize) -> Self {
        Signature {
            below: q.elements().filter(|&y| q.leq(y, x)).count(),
            above: q.elements().filter(|&y| q.leq(x, y)).count(),
            annihilated_by: q.elements().filter(|&y| q.mul(x, y) == q.bottom()).count(),
            idempotent: q.mul(x, x) == x,
        }
    }
}

struct Search<'q> {
    a: &'q Quantale,
    b: &'q Quantale,
    sig_a: Vec<Signature>,
    sig_b: Vec<Signature>,
    forward: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, x: usize) -> bool {
        if x == self.a.len() {
            return true;
        }
        for y in self.b.elements() {
            if self.used[y] || self.sig_a[x] != self.sig_b[y] {
                continue;
            }
            self.forward[x] = Some(y);
            self.used[y] = true;
            if self.consistent(x) && self.extend(x + 1) {
                return true;
            }
            self.forward[x] = None;
            self.used[y] = false;
        }
        false
    }

    /// Checks every constraint that involves `x` and already-assigned
    /// elements.
    fn consistent(&self, x: usize) -> bool {
        let (a, b) = (self.a, self.b);
        let fx = self.forward[x].unwrap();
        for z in 0..=x {
            let fz = self.forward[z].unwrap();
            if a.leq(x, z) != b.leq(fx, fz) || a.leq(z, x) != b.leq(fz, fx) {
                return false;
            }
        }
        for s in 0..=x {
            for t in 0..=x {
                if s != x && t != x && a.mul(s, t) != x {
                    continue;
                }
                if let Some(fst) = self.forward[a.mul(s, t)] {
                    if fst != b.mul(self.forward[s].unwrap(), self.forward[t].unwrap()) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{decompose_by_elements, product};
    use super::*;

    #[test]
    fn d12_is_isomorphic_to_the_product_of_its_intervals() {
        let d = divisors(12);
        let dec = decompose_by_elements(&d, &[d.el("3"), d.el("4")]).unwrap();
        let f = find_isomorphism(&d, &dec.product.quantale).unwrap();
        assert_eq!(f.len(), 6);
    }

    #[test]
    fn frames_and_nilpotent_chains_differ() {
        let c3 = chain_frame(3);
        let z4 = divisors(4);
        assert!(find_isomorphism(&c3, &z4).is_none());
        assert!(find_isomorphism(&c3, &c3).is_some());
    }

    #[test]
    fn product_order_does_not_matter() {
        let c3 = chain_frame(3);
        let z4 = divisors(4);
        let p = product(&[c3.clone(), z4.clone()]).unwrap();
        let q = product(&[z4, c3]).unwrap();
        assert!(find_isomorphism(&p.quantale, &q.quantale).is_some());
    }
}
