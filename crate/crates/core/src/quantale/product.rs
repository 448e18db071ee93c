use super::{interval_quantale, IntervalQuantale, Quantale, QuantaleError, QuantaleMorphism};
use crate::lattice::{FiniteLattice, FinitePoset};

/// A finite product with componentwise operations. Carrier tuples are
/// enumerated lexicographically, first factor slowest.
#[derive(Debug, Clone)]
pub struct ProductQuantale {
    pub factors: Vec<Quantale>,
    pub quantale: Quantale,
    tuples: Vec<Vec<usize>>,
}

pub fn product(factors: &[Quantale]) -> Result<ProductQuantale, QuantaleError> {
    if factors.is_empty() {
        return Err(QuantaleError::EmptyProduct);
    }
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    for f in factors {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                f.elements().map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    let labels = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t.iter().zip(factors).map(|(&x, f)| f.label(x)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let leq = tuples
        .iter()
        .map(|s| {
            tuples
                .iter()
                .map(|t| s.iter().zip(t).zip(factors).all(|((&a, &b), f)| f.leq(a, b)))
                .collect()
        })
        .collect();
    let lattice = FiniteLattice::from_poset(FinitePoset::new(labels, leq)?)?;
    let mul = tuples
        .iter()
        .map(|s| {
            tuples
                .iter()
                .map(|t| {
                    let prod: Vec<usize> = s.iter().zip(t).zip(factors).map(|((&a, &b), f)| f.mul(a, b)).collect();
                    tuple_index(factors, &prod)
                })
                .collect()
        })
        .collect();
    Ok(ProductQuantale {
        factors: factors.to_vec(),
        quantale: Quantale::new(lattice, mul)?,
        tuples,
    })
}

fn tuple_index(factors: &[Quantale], t: &[usize]) -> usize {
    t.iter().zip(factors).fold(0, |acc, (&x, f)| acc * f.len() + x)
}

impl ProductQuantale {
    pub fn tuple(&self, i: usize) -> &[usize] {
        &self.tuples[i]
    }

    pub fn index_of_tuple(&self, t: &[usize]) -> usize {
        tuple_index(&self.factors, t)
    }

    /// The projection `πᵢ` onto factor `i`.
    pub fn projection(&self, i: usize) -> QuantaleMorphism<'_> {
        let map = self.tuples.iter().map(|t| t[i]).collect();
        QuantaleMorphism::new(&self.quantale, &self.factors[i], map).expect("projections are morphisms")
    }

    /// `eᵢ = (1, …, 1, 0, 1, …, 1)` with the bottom in slot `i`.
    pub fn canonical_idempotent(&self, i: usize) -> usize {
        let t: Vec<usize> = self
            .factors
            .iter()
            .enumerate()
            .map(|(j, f)| if j == i { f.bottom() } else { f.top() })
            .collect();
        self.index_of_tuple(&t)
    }
}

/// The isomorphism `[a) → ∏ [aᵢ)`, `x ↦ (x∨a₁, …, x∨aₙ)` with `a = ⋀ aᵢ`.
#[derive(Debug, Clone)]
pub struct Decomposition<'a> {
    pub parts: Vec<usize>,
    pub interval: IntervalQuantale<'a>,
    pub factors: Vec<IntervalQuantale<'a>>,
    pub product: ProductQuantale,
    map: Vec<usize>,
}

impl<'a> Decomposition<'a> {
    pub fn anchor(&self) -> usize {
        self.interval.anchor
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn morphism(&self) -> QuantaleMorphism<'_> {
        QuantaleMorphism::new(&self.interval.quantale, &self.product.quantale, self.map.clone())
            .expect("verified at construction")
    }
}

/// Requires `aᵢ ∨ aⱼ = 1` for `i ≠ j`; the resulting map is verified to be a
/// bijective unital morphism.
pub fn decompose_by_elements<'a>(q: &'a Quantale, parts: &[usize]) -> Result<Decomposition<'a>, QuantaleError> {
    if parts.is_empty() {
        return Err(QuantaleError::PreconditionFailed("no elements given".into()));
    }
    for (i, &a) in parts.iter().enumerate() {
        for (j, &b) in parts.iter().enumerate().skip(i + 1) {
            if q.join(a, b) != q.top() {
                return Err(QuantaleError::PreconditionFailed(format!(
                    "elements {i} ({}) and {j} ({}) do not join to 1",
                    q.label(a),
                    q.label(b)
                )));
            }
        }
    }
    let anchor = q.meet_all(parts.iter().copied());
    let interval = interval_quantale(q, anchor);
    let factors: Vec<IntervalQuantale<'a>> = parts.iter().map(|&a| interval_quantale(q, a)).collect();
    let factor_quantales: Vec<Quantale> = factors.iter().map(|f| f.quantale.clone()).collect();
    let product = product(&factor_quantales)?;
    let map: Vec<usize> = interval
        .members()
        .iter()
        .map(|&x| {
            let t: Vec<usize> = parts
                .iter()
                .zip(&factors)
                .map(|(&a, f)| f.from_parent(q.join(x, a)).unwrap())
                .collect();
            product.index_of_tuple(&t)
        })
        .collect();
    let u = QuantaleMorphism::new_unital(&interval.quantale, &product.quantale, map.clone())?;
    if !u.is_isomorphism() {
        return Err(QuantaleError::NotAMorphism("decomposition map is not bijective".into()));
    }
    Ok(Decomposition {
        parts: parts.to_vec(),
        interval,
        factors,
        product,
        map,
    })
}
