//! Decision procedures for the lifting property, normality, B-normality,
//! hyperarchimedeanity, semiprimeness, property (*), locality, and the
//! decomposition of a semilocal quantale into local factors.
//!
//! On the one-point quantale every check returns [`Verdict::Trivial`]:
//! there `0 = 1`, `Max` is empty and `r(A)` is undefined.

use serde::Serialize;
use thiserror::Error;

use crate::lattice::render_set;
use crate::quantale::{decompose_by_elements, find_isomorphism, interval_quantale, product, Quantale, QuantaleError};
use crate::reticulation::{reticulate, ReticulationError};
use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropertyError {
    #[error(transparent)]
    Quantale(#[from] QuantaleError),
    #[error(transparent)]
    Reticulation(#[from] ReticulationError),
    /// A decomposition produced by the construction failed verification.
    #[error("decomposition check failed: {0}")]
    Decomposition(String),
}

/// Complemented elements of `[a)` that are not `x∨a` for a complemented `x`,
/// as parent indices.
pub fn unliftable_elements(q: &Quantale, a: usize) -> Vec<usize> {
    let iv = interval_quantale(q, a);
    let lifted: Vec<usize> = q.boolean_center().iter().map(|&e| q.join(e, a)).collect();
    iv.boolean_center_in_parent()
        .into_iter()
        .filter(|x| !lifted.contains(x))
        .collect()
}

/// `a` has LP when `B(uₐ): B(A) → B([a))` is onto; the witness is the first
/// unliftable complemented element of `[a)`.
pub fn element_has_lp(q: &Quantale, a: usize) -> Verdict<usize> {
    if q.is_trivial() {
        return Verdict::Trivial;
    }
    Verdict::from_witness(unliftable_elements(q, a).first().copied())
}

/// Failure of LP: an anchor and an unliftable element above it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LpWitness {
    pub anchor: usize,
    pub element: usize,
}

pub fn has_lp(q: &Quantale) -> Verdict<LpWitness> {
    if q.is_trivial() {
        return Verdict::Trivial;
    }
    Verdict::from_witness(q.elements().find_map(|anchor| {
        unliftable_elements(q, anchor)
            .first()
            .map(|&element| LpWitness { anchor, element })
    }))
}

/// First cover `a∨b = 1` admitting no `e, f ∈ pool` with `a∨e = b∨f = 1`
/// and `e·f = 0`.
fn separation_witness(q: &Quantale, pool: &[usize]) -> Option<(usize, usize)> {
    let top = q.top();
    for a in q.elements() {
        for b in q.elements() {
            if q.join(a, b) != top {
                continue;
            }
            let separated = pool.iter().any(|&e| {
                q.join(a, e) == top && pool.iter().any(|&f| q.join(b, f) == top && q.mul(e, f) == q.bottom())
            });
            if !separated {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn is_normal(q: &Quantale) -> Verdict<(usize, usize)> {
    if q.is_trivial() {
        return Verdict::Trivial;
    }
    let all: Vec<usize> = q.elements().collect();
    Verdict::from_witness(separation_witness(q, &all))
}

pub fn is_b_normal(q: &Quantale) -> Verdict<(usize, usize)> {
    if q.is_trivial() {
        return Verdict::Trivial;
    }
    Verdict::from_witness(separation_witness(q, q.boolean_center()))
}

/// Normality with the second separator fixed to `e⊥`, the largest `f` with
/// `e·f = 0`. Agrees with [`is_normal`]; used as a cross-check.
pub fn is_normal_by_annihilators(q: &Quantale) -> Verdict<(usize, usize)> {
    annihilator_check(q, &q.elements().collect::<Vec<_>>())
}

/// B-normality via `f = e⊥` for complemented `e`.
pub fn is_b_normal_by_annihilators(q: &Quantale) -> Verdict<(usize, usize)> {
    annihilator_check(q, q.boolean_center())
}

fn annihilator_check(q: &Quantale, pool: &[usize]) -> Verdict<(usize, usize)> {
    if q.is_trivial() {
        return Verdict::Trivial;
    }
    let top = q.top();
    Verdict::from_witness(q.elements().find_map(|a| {
        q.elements().find_map(|b| {
            let covered = q.join(a, b) == top;
            let ok = pool
                .iter()
                .any(|&e| q.join(a, e) == top && q.join(b, q.negation(e)) == top);
            (covered && !ok).then_some((a, b))
        })
    }))
}

/// Every element has some power in `B(A)`; the witness has none.
pub fn is_hyperarchimedean(q: &Quantale) -> Verdict<usize> {
    if q.is_trivial() {
        return Verdict::Trivial;
    }
    Verdict::from_witness(
        q.elements()
            .find(|&c| !q.powers(c).iter().any(|&p| q.is_complemented(p))),
    )
}

/// `ρ(0) = 0`; the witness is `ρ(0)`.
pub fn is_semiprime(q: &Quantale) -> Verdict<usize> {
    if q.is_trivial() {
        return Verdict::Trivial;
    }
    let r0 = q.radical(q.bottom());
    if r0 == q.bottom() {
        Verdict::Holds
    } else {
        Verdict::Fails(r0)
    }
}

/// Every `a` is `c∨e` with `c ≤ r(A)` and `e ∈ B(A)`; the witness is the
/// first `a` with no such decomposition.
pub fn has_property_star(q: &Quantale) -> Verdict<usize> {
    let Ok(r) = q.jacobson_radical() else {
        return Verdict::Trivial;
    };
    let below: Vec<usize> = q.elements().filter(|&c| q.leq(c, r)).collect();
    Verdict::from_witness(q.elements().find(|&a| {
        !below
            .iter()
            .any(|&c| q.boolean_center().iter().any(|&e| q.join(c, e) == a))
    }))
}

/// `|Max(A)| = 1`; the witness is `|Max(A)|`.
pub fn is_local(q: &Quantale) -> Verdict<usize> {
    if q.is_trivial() {
        return Verdict::Trivial;
    }
    match q.maximals().len() {
        1 => Verdict::Holds,
        n => Verdict::Fails(n),
    }
}

/// Finite carriers are always semilocal; returns `|Max(A)|` alongside.
pub fn is_semilocal(q: &Quantale) -> (Verdict<()>, usize) {
    if q.is_trivial() {
        return (Verdict::Trivial, 0);
    }
    (Verdict::Holds, q.maximals().len())
}

/// A verified splitting `A ≅ ∏ [eᵢ)` into local factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalDecomposition {
    /// The complemented elements `eᵢ`, sorted by carrier index.
    pub idempotents: Vec<usize>,
    /// The factors `[eᵢ)`, in the same order.
    pub factors: Vec<Quantale>,
}

/// Result of running the decomposition recipe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionOutcome {
    Decomposed(LocalDecomposition),
    /// `r(A)` lacks LP: `element` is complemented in `[r(A))` and unliftable.
    RadicalLacksLp {
        radical: usize,
        element: usize,
    },
}

/// Splits a semilocal quantale into local factors following the standard
/// recipe: `[r(A)) ≅ ∏ [mᵢ)` over the maximal elements (index order), take
/// the canonical complemented `fᵢ` of `[r(A))`, and lift each to the first
/// `eᵢ ∈ B(A)` with `eᵢ ∨ r(A) = fᵢ`. The result is verified.
pub fn local_decomposition(q: &Quantale) -> Result<DecompositionOutcome, PropertyError> {
    let r = q.jacobson_radical()?;
    let maxima = q.maximals().to_vec();
    let iv = interval_quantale(q, r);
    let local_maxima: Vec<usize> = maxima
        .iter()
        .map(|&m| iv.from_parent(m).expect("maxima lie above r(A)"))
        .collect();
    let dec = decompose_by_elements(&iv.quantale, &local_maxima)?;
    let mut lifts = Vec::with_capacity(maxima.len());
    for i in 0..maxima.len() {
        let target = dec.product.canonical_idempotent(i);
        let local = dec
            .map()
            .iter()
            .position(|&t| t == target)
            .expect("the decomposition is bijective");
        let f = iv.to_parent(dec.interval.to_parent(local));
        match q.boolean_center().iter().copied().find(|&e| q.join(e, r) == f) {
            Some(e) => lifts.push(e),
            None => return Ok(DecompositionOutcome::RadicalLacksLp { radical: r, element: f }),
        }
    }
    lifts.sort_unstable();
    verify_local_idempotents(q, &lifts)?;
    let factors = lifts.iter().map(|&e| interval_quantale(q, e).quantale).collect();
    Ok(DecompositionOutcome::Decomposed(LocalDecomposition {
        idempotents: lifts,
        factors,
    }))
}

fn verify_local_idempotents(q: &Quantale, es: &[usize]) -> Result<(), PropertyError> {
    let fail = |msg: String| Err(PropertyError::Decomposition(msg));
    if let Some(&e) = es.iter().find(|&&e| !q.is_complemented(e)) {
        return fail(format!("{} is not complemented", q.label(e)));
    }
    if q.meet_all(es.iter().copied()) != q.bottom() {
        return fail("the idempotents do not meet to 0".into());
    }
    let dec = decompose_by_elements(q, es)?;
    if let Some(f) = dec.factors.iter().find(|f| f.quantale.maximals().len() != 1) {
        return fail(format!("[{}) is not local", q.label(f.anchor)));
    }
    Ok(())
}

/// Whether some `e₁, …, eₙ ∈ B(A)` with `⋀eᵢ = 0` and `eᵢ∨eⱼ = 1` have
/// every `[eᵢ)` local, decided by exhaustive search over subsets of `B(A)`.
/// Returns the first such family found.
pub fn search_local_idempotents(q: &Quantale) -> Verdict<()> {
    if q.is_trivial() {
        return Verdict::Trivial;
    }
    let center: Vec<usize> = q.boolean_center().iter().copied().filter(|&e| e != q.top()).collect();
    let local: Vec<bool> = center
        .iter()
        .map(|&e| interval_quantale(q, e).quantale.maximals().len() == 1)
        .collect();
    for mask in 1u64..(1u64 << center.len()) {
        let chosen: Vec<usize> = (0..center.len()).filter(|&i| mask >> i & 1 == 1).collect();
        if !chosen.iter().all(|&i| local[i]) {
            continue;
        }
        let es: Vec<usize> = chosen.iter().map(|&i| center[i]).collect();
        let comaximal = es
            .iter()
            .enumerate()
            .all(|(i, &a)| es[i + 1..].iter().all(|&b| q.join(a, b) == q.top()));
        if comaximal && q.meet_all(es.iter().copied()) == q.bottom() {
            return Verdict::Holds;
        }
    }
    Verdict::Fails(())
}

/// Whether `A` is isomorphic to a finite product of local quantales,
/// decided by recursive binary splitting `A ≅ [e) × [e⊥)` over
/// complemented `e`, each split confirmed by an explicit isomorphism search.
pub fn is_product_of_locals(q: &Quantale) -> Verdict<()> {
    if q.is_trivial() {
        return Verdict::Trivial;
    }
    if splits_into_locals(q) {
        Verdict::Holds
    } else {
        Verdict::Fails(())
    }
}

fn splits_into_locals(q: &Quantale) -> bool {
    if q.maximals().len() == 1 {
        return true;
    }
    q.boolean_center()
        .iter()
        .copied()
        .filter(|&e| e != q.bottom() && e != q.top())
        .any(|e| {
            let left = interval_quantale(q, e).quantale;
            let right = interval_quantale(q, q.negation(e)).quantale;
            let Ok(p) = product(&[left.clone(), right.clone()]) else {
                return false;
            };
            find_isomorphism(q, &p.quantale).is_some() && splits_into_locals(&left) && splits_into_locals(&right)
        })
}

/// A named verdict with its rendered witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyVerdict {
    pub property: &'static str,
    /// `None` on the one-point quantale.
    pub holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl PropertyVerdict {
    fn new<W>(property: &'static str, v: &Verdict<W>, render: impl FnOnce(&W) -> String) -> Self {
        PropertyVerdict {
            property,
            holds: v.as_bool(),
            witness: v.witness().map(render),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionFactor {
    pub idempotent: String,
    pub elements: Vec<String>,
    pub maximal: Vec<String>,
}

/// Everything `analyze` reports about one quantale, with labels in place
/// of indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub size: usize,
    pub elements: Vec<String>,
    pub frame: bool,
    pub spec: Vec<String>,
    pub max: Vec<String>,
    /// `(a, ρ(a))` for every element.
    pub radical: Vec<(String, String)>,
    pub radical_frame: Vec<String>,
    pub boolean_center: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jacobson_radical: Option<String>,
    /// The classes of `L(A)`.
    pub reticulation: Vec<Vec<String>>,
    pub verdicts: Vec<PropertyVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Vec<DecompositionFactor>>,
    /// Why the decomposition recipe stopped, when it did.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition_failure: Option<String>,
}

impl PropertyReport {
    pub fn verdict(&self, property: &str) -> Option<&PropertyVerdict> {
        self.verdicts.iter().find(|v| v.property == property)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

pub fn analyze(q: &Quantale) -> Result<PropertyReport, PropertyError> {
    let name = |a: usize| q.label(a).to_string();
    let names = |xs: &[usize]| xs.iter().map(|&a| name(a)).collect::<Vec<_>>();
    let pair = |&(a, b): &(usize, usize)| format!("({}, {})", q.label(a), q.label(b));
    let ret = reticulate(q)?;
    let (semilocal, max_count) = is_semilocal(q);
    let lp = has_lp(q);
    let verdicts = vec![
        PropertyVerdict::new("lp", &lp, |w| {
            format!("anchor {}: {} does not lift", q.label(w.anchor), q.label(w.element))
        }),
        PropertyVerdict::new("normal", &is_normal(q), pair),
        PropertyVerdict::new("b-normal", &is_b_normal(q), pair),
        PropertyVerdict::new("hyperarchimedean", &is_hyperarchimedean(q), |&c| {
            format!("no power of {} is complemented", q.label(c))
        }),
        PropertyVerdict::new("semiprime", &is_semiprime(q), |&r| format!("ρ(0) = {}", q.label(r))),
        PropertyVerdict::new("property-star", &has_property_star(q), |&a| {
            format!("{} is not c∨e with c ≤ r(A), e complemented", q.label(a))
        }),
        PropertyVerdict::new("local", &is_local(q), |&n| format!("|Max| = {n}")),
        PropertyVerdict {
            property: "semilocal",
            holds: semilocal.as_bool(),
            witness: (!q.is_trivial()).then(|| format!("|Max| = {max_count}")),
        },
    ];
    let (decomposition, decomposition_failure) = if q.is_trivial() {
        (None, None)
    } else {
        match local_decomposition(q)? {
            DecompositionOutcome::Decomposed(d) => (
                Some(
                    d.idempotents
                        .iter()
                        .zip(&d.factors)
                        .map(|(&e, f)| DecompositionFactor {
                            idempotent: name(e),
                            elements: f.labels().to_vec(),
                            maximal: f.maximals().iter().map(|&m| f.label(m).to_string()).collect(),
                        })
                        .collect(),
                ),
                None,
            ),
            DecompositionOutcome::RadicalLacksLp { radical, element } => (
                None,
                Some(format!(
                    "r(A) = {} lacks LP: {} is complemented in [{}) but does not lift",
                    q.label(radical),
                    q.label(element),
                    q.label(radical)
                )),
            ),
        }
    };
    Ok(PropertyReport {
        size: q.len(),
        elements: q.labels().to_vec(),
        frame: q.is_frame(),
        spec: names(q.m_primes()),
        max: names(q.maximals()),
        radical: q.elements().map(|a| (name(a), name(q.radical(a)))).collect(),
        radical_frame: names(&q.radical_elements()),
        boolean_center: names(q.boolean_center()),
        jacobson_radical: q.jacobson_radical().ok().map(name),
        reticulation: ret.classes().iter().map(|c| names(c)).collect(),
        verdicts,
        decomposition,
        decomposition_failure,
    })
}

/// Renders a set of elements as `{a,b}`.
pub fn render_elements(q: &Quantale, xs: &[usize]) -> String {
    render_set(q.labels(), xs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantale::fixtures::*;

    #[test]
    fn d12_verdicts() {
        let d = divisors(12);
        assert!(has_lp(&d).holds());
        assert!(is_b_normal(&d).holds());
        assert!(is_normal(&d).holds());
        assert!(is_hyperarchimedean(&d).holds());
        assert_eq!(is_semiprime(&d), Verdict::Fails(d.el("6")));
        assert_eq!(is_local(&d), Verdict::Fails(2));
        assert!(has_property_star(&d).holds());
    }

    #[test]
    fn w5_verdicts() {
        let w = w5();
        let z = w.el("{z}");
        assert!(element_has_lp(&w, z).fails());
        assert_eq!(has_lp(&w).witness().unwrap().anchor, z);
        assert_eq!(is_normal(&w), Verdict::Fails((w.el("{z,x}"), w.el("{z,y}"))));
        assert!(is_b_normal(&w).fails());
        assert_eq!(has_property_star(&w), Verdict::Fails(w.el("{z,x}")));
        match local_decomposition(&w).unwrap() {
            DecompositionOutcome::RadicalLacksLp { radical, element } => {
                assert_eq!(radical, z);
                assert!(unliftable_elements(&w, z).contains(&element));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn c3_verdicts() {
        let c = chain_frame(3);
        assert!(is_local(&c).holds());
        assert!(has_lp(&c).holds());
        assert_eq!(is_hyperarchimedean(&c), Verdict::Fails(c.el("m")));
        assert!(is_semiprime(&c).holds());
    }

    #[test]
    fn maximal_elements_have_lp() {
        for q in [divisors(12), w5(), b4(), chain_frame(3)] {
            for &m in q.m_primes() {
                assert!(element_has_lp(&q, m).holds());
            }
        }
    }

    #[test]
    fn d12_decomposes_into_three_and_four() {
        let d = divisors(12);
        let DecompositionOutcome::Decomposed(dec) = local_decomposition(&d).unwrap() else {
            panic!("D12 has LP");
        };
        assert_eq!(dec.idempotents, vec![d.el("3"), d.el("4")]);
        let sizes: Vec<usize> = dec.factors.iter().map(Quantale::len).collect();
        assert_eq!(sizes, vec![2, 3]);
    }

    #[test]
    fn c3_is_its_own_factor() {
        let c = chain_frame(3);
        let DecompositionOutcome::Decomposed(dec) = local_decomposition(&c).unwrap() else {
            panic!("local");
        };
        assert_eq!(dec.idempotents, vec![c.bottom()]);
    }

    #[test]
    fn trivial_quantale_is_trivial_everywhere() {
        let q = chain_frame(1);
        assert!(has_lp(&q).is_trivial());
        assert!(has_property_star(&q).is_trivial());
        assert!(is_local(&q).is_trivial());
        assert!(matches!(
            local_decomposition(&q),
            Err(PropertyError::Quantale(QuantaleError::TrivialQuantale))
        ));
    }

    #[test]
    fn annihilator_forms_agree() {
        for q in [divisors(12), w5(), b4(), chain_frame(3), divisors(36)] {
            assert_eq!(is_normal(&q).holds(), is_normal_by_annihilators(&q).holds());
            assert_eq!(is_b_normal(&q).holds(), is_b_normal_by_annihilators(&q).holds());
        }
    }

    #[test]
    fn structure_theorem_conditions_on_fixtures() {
        for q in [divisors(12), w5(), b4(), chain_frame(3), divisors(30)] {
            let lp = has_lp(&q).holds();
            assert_eq!(search_local_idempotents(&q).holds(), lp);
            assert_eq!(is_product_of_locals(&q).holds(), lp);
        }
    }

    #[test]
    fn analyze_d12() {
        let d = divisors(12);
        let rep = analyze(&d).unwrap();
        assert_eq!(rep.spec, vec!["2", "3"]);
        assert_eq!(rep.boolean_center, vec!["1", "3", "4", "12"]);
        assert_eq!(rep.verdict("lp").unwrap().holds, Some(true));
        assert_eq!(rep.decomposition.as_ref().unwrap().len(), 2);
    }
}
