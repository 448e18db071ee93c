use super::{interval_quantale, IntervalQuantale, Quantale, QuantaleError};

/// A map between quantales preserving finite joins (hence `0`) and `·`.
///
/// On finite carriers preservation of arbitrary joins reduces to binary
/// joins plus the empty join.
#[derive(Debug, Clone)]
pub struct QuantaleMorphism<'a> {
    pub source: &'a Quantale,
    pub target: &'a Quantale,
    map: Vec<usize>,
}

impl<'a> QuantaleMorphism<'a> {
    pub fn new(source: &'a Quantale, target: &'a Quantale, map: Vec<usize>) -> Result<Self, QuantaleError> {
        if map.len() != source.len() {
            return Err(QuantaleError::NotAMorphism(
                "map length differs from source size".into(),
            ));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.len()) {
            return Err(QuantaleError::EntryOutOfRange(bad));
        }
        let f = |x: usize| map[x];
        if f(source.bottom()) != target.bottom() {
            return Err(QuantaleError::NotAMorphism("0 is not preserved".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if f(source.join(a, b)) != target.join(f(a), f(b)) {
                    return Err(QuantaleError::NotAMorphism(format!(
                        "{} ∨ {} is not preserved",
                        source.label(a),
                        source.label(b)
                    )));
                }
                if f(source.mul(a, b)) != target.mul(f(a), f(b)) {
                    return Err(QuantaleError::NotAMorphism(format!(
                        "{} · {} is not preserved",
                        source.label(a),
                        source.label(b)
                    )));
                }
            }
        }
        Ok(QuantaleMorphism { source, target, map })
    }

    /// As [`QuantaleMorphism::new`], additionally requiring `u(1) = 1`.
    pub fn new_unital(source: &'a Quantale, target: &'a Quantale, map: Vec<usize>) -> Result<Self, QuantaleError> {
        let u = Self::new(source, target, map)?;
        if !u.is_unital() {
            return Err(QuantaleError::NotUnitalMorphism);
        }
        Ok(u)
    }

    /// The identity on `q`.
    pub fn identity(q: &'a Quantale) -> Self {
        QuantaleMorphism {
            source: q,
            target: q,
            map: q.elements().collect(),
        }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_unital(&self) -> bool {
        self.map[self.source.top()] == self.target.top()
    }

    /// `Ker(u) = ⋁{a | u(a) = 0}`.
    pub fn kernel(&self) -> usize {
        let zero = self.target.bottom();
        self.source
            .join_all(self.source.elements().filter(|&a| self.map[a] == zero))
    }

    /// Injectivity decided directly on the map.
    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    /// Injectivity decided by the kernel criterion `Ker(u) = 0`; agrees with
    /// [`Self::is_injective`] on unital morphisms.
    pub fn kernel_is_trivial(&self) -> bool {
        self.kernel() == self.source.bottom()
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.len()];
        for &y in &self.map {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// `B(u)` as `(e, u(e))` pairs. Fails if a complemented element lands
    /// outside the target center.
    pub fn boolean_restriction(&self) -> Result<Vec<(usize, usize)>, QuantaleError> {
        self.source
            .boolean_center()
            .iter()
            .map(|&e| {
                let img = self.map[e];
                if self.target.is_complemented(img) {
                    Ok((e, img))
                } else {
                    Err(QuantaleError::NotAMorphism(format!(
                        "complemented {} maps to uncomplemented {}",
                        self.source.label(e),
                        self.target.label(img)
                    )))
                }
            })
            .collect()
    }

    /// Whether `B(u)` reaches every complemented element of the target.
    pub fn boolean_restriction_is_surjective(&self) -> bool {
        let images: Vec<usize> = self.source.boolean_center().iter().map(|&e| self.map[e]).collect();
        self.target.boolean_center().iter().all(|f| images.contains(f))
    }

    /// `[Ker(u))` together with the restriction of `u` to it, given over the
    /// interval's own indices.
    pub fn restrict_to_kernel_interval(&self) -> (IntervalQuantale<'a>, Vec<usize>) {
        let iv = interval_quantale(self.source, self.kernel());
        let map = iv.members().iter().map(|&x| self.map[x]).collect();
        (iv, map)
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn identity_has_trivial_kernel() {
        let d = divisors(12);
        let id = QuantaleMorphism::identity(&d);
        assert_eq!(id.kernel(), d.bottom());
        assert!(id.is_injective());
        assert!(id.kernel_is_trivial());
    }

    #[test]
    fn interval_projection_kernel_is_the_anchor() {
        let d = divisors(12);
        for a in d.elements() {
            let iv = interval_quantale(&d, a);
            let u = iv.projection();
            assert_eq!(u.kernel(), a);
            assert_eq!(u.is_injective(), a == d.bottom());
            assert_eq!(u.is_injective(), u.kernel_is_trivial());
            assert!(u.boolean_restriction().is_ok());
        }
    }

    #[test]
    fn rejects_maps_that_break_structure() {
        let c3 = chain_frame(3);
        let constant_top = vec![c3.top(); 3];
        assert!(QuantaleMorphism::new(&c3, &c3, constant_top).is_err());
        let collapse = vec![c3.el("0"), c3.el("0"), c3.el("1")];
        let u = QuantaleMorphism::new_unital(&c3, &c3, collapse).unwrap();
        assert_eq!(u.kernel(), c3.el("m"));
        let zero = vec![c3.el("0"); 3];
        assert_eq!(
            QuantaleMorphism::new_unital(&c3, &c3, zero).unwrap_err(),
            QuantaleError::NotUnitalMorphism
        );
    }

    #[test]
    fn surjection_restricted_to_kernel_interval_is_bijective() {
        let d = divisors(12);
        let iv = interval_quantale(&d, d.el("4"));
        let u = iv.projection();
        let (kiv, map) = u.restrict_to_kernel_interval();
        let r = QuantaleMorphism::new(&kiv.quantale, &iv.quantale, map).unwrap();
        assert!(r.is_isomorphism());
    }
}
