//! The executable checks. Each evaluates one statement on one corpus member
//! and either passes, is refuted with a rendered counterexample, or does not
//! apply (one-point carriers, missing hypotheses).

use crate::lattice::{
    all_ideals, has_id_blp, is_id_local, lattice_boolean_center, lattice_is_b_normal, lattice_is_normal, prime_ideals,
    quotient_by_ideal, DistLattice, LatticeIdeal,
};
use crate::properties::{
    element_has_lp, has_lp, has_property_star, is_b_normal, is_b_normal_by_annihilators, is_hyperarchimedean, is_local,
    is_normal, is_normal_by_annihilators, is_product_of_locals, is_semilocal, is_semiprime, local_decomposition,
    search_local_idempotents, unliftable_elements, DecompositionOutcome,
};
use crate::quantale::{
    decompose_by_elements, find_isomorphism, interval_quantale, product, Quantale, QuantaleMorphism,
};
use crate::reticulation::{
    interval_reticulation_iso, lift_morphism, reticulate, reticulation_axiom_failure, Reticulation,
};

use super::corpus::CorpusMember;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckError {
    Refuted(String),
    NotApplicable(String),
}

pub type Outcome = Result<(), CheckError>;

/// One statement of the catalogue.
#[derive(Clone, Copy)]
pub struct Theorem {
    pub id: &'static str,
    pub statement: &'static str,
    /// Statements the corpus is known to refute; their refutations are
    /// reported but do not count as unexpected.
    pub known_refutable: bool,
    pub check: fn(&CorpusMember) -> Outcome,
}

impl std::fmt::Debug for Theorem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Theorem").field("id", &self.id).finish()
    }
}

macro_rules! theorem {
    ($id:literal, $statement:literal, $check:path) => {
        Theorem {
            id: $id,
            statement: $statement,
            known_refutable: false,
            check: $check,
        }
    };
    ($id:literal, $statement:literal, $check:path, known_refutable) => {
        Theorem {
            id: $id,
            statement: $statement,
            known_refutable: true,
            check: $check,
        }
    };
}

pub const CATALOG: &[Theorem] = &[
    // Distributive lattices: L(A), R(A) and the carrier when distributive.
    theorem!(
        "id-local-criterion",
        "a nontrivial lattice is Id-local iff a∨b = 1 implies a = 1 or b = 1",
        id_local_criterion
    ),
    theorem!(
        "quotient-boolean-morphism",
        "every quotient projection restricts to a Boolean morphism",
        quotient_boolean_morphism
    ),
    theorem!(
        "quotient-extremes",
        "L/{0} ≅ L and L/L is the one-point lattice",
        quotient_extremes
    ),
    theorem!(
        "lattice-b-normal-implies-normal",
        "a B-normal lattice is normal",
        lattice_b_normal_implies_normal
    ),
    theorem!(
        "lattice-id-blp-iff-b-normal",
        "a lattice has Id-BLP iff it is B-normal",
        lattice_id_blp_iff_b_normal
    ),
    // Quantale structure.
    theorem!("residuation-adjunction", "a ≤ b→c iff a·b ≤ c", residuation_adjunction),
    theorem!(
        "comaximal-laws",
        "consequences of a∨b = 1 for products, meets and powers",
        comaximal_laws
    ),
    theorem!(
        "m-primes-are-maximal",
        "every m-prime element is maximal",
        m_primes_are_maximal,
        known_refutable
    ),
    theorem!(
        "maximals-are-m-prime",
        "every maximal element is m-prime and every a < 1 lies below one",
        maximals_are_m_prime
    ),
    theorem!(
        "radical-laws",
        "ρ is extensive, idempotent, multiplicative and detects covers",
        radical_laws
    ),
    theorem!(
        "radical-oracles-agree",
        "the meet of m-primes above a equals the join of c with a power below a",
        radical_oracles_agree
    ),
    theorem!(
        "radical-frame-structure",
        "R(A) is the ρ-image with join ρ(a∨b) and is a frame",
        radical_frame_structure
    ),
    theorem!(
        "radical-frame-shares-spectra",
        "Max(R(A)) = Max(A) and Spec(R(A)) = Spec(A)",
        radical_frame_shares_spectra
    ),
    theorem!(
        "boolean-center-laws",
        "complemented e satisfy e∧a = e·a, e→a = e⊥∨a and distributivity",
        boolean_center_laws
    ),
    theorem!(
        "unital-morphisms-preserve-complements",
        "unital morphisms map complemented elements to complemented elements",
        unital_morphisms_preserve_complements
    ),
    theorem!(
        "interval-radical-commutes",
        "ρ of [a) at x∨a equals ρ(ρ(a)∨ρ(x))",
        interval_radical_commutes
    ),
    theorem!(
        "kernel-detects-injectivity",
        "a unital morphism is injective iff its kernel is 0",
        kernel_detects_injectivity
    ),
    theorem!(
        "surjection-restricts-to-isomorphism",
        "a surjection restricted to [Ker(u)) is an isomorphism",
        surjection_restricts_to_isomorphism
    ),
    // Reticulation.
    theorem!(
        "reticulation-axioms",
        "λ is onto and satisfies the three reticulation axioms",
        reticulation_axioms
    ),
    theorem!(
        "reticulation-consequences",
        "λ is monotone, preserves joins, reflects 1, kills exactly nilpotents, ignores powers",
        reticulation_consequences
    ),
    theorem!(
        "reticulation-unicity",
        "any two reticulations are isomorphic over A",
        reticulation_unicity
    ),
    theorem!(
        "star-maps-round-trip",
        "(I_*)* = I and a ≤ (a*)_* = ρ(a), with equality exactly on radicals",
        star_maps_round_trip
    ),
    theorem!(
        "star-adjunction-on-radicals",
        "I_* ≤ a iff I ⊆ a* for radical a",
        star_adjunction_on_radicals
    ),
    theorem!(
        "star-adjunction-on-carrier",
        "I_* ≤ a iff I ⊆ a* for every a",
        star_adjunction_on_carrier,
        known_refutable
    ),
    theorem!(
        "spectrum-transport",
        "p* is a prime ideal with (p*)_* = p, and P_* is m-prime",
        spectrum_transport
    ),
    theorem!(
        "spectrum-homeomorphism",
        "u and v are inverse bijections Spec(A) ≅ Spec_Id(L(A)) matching closed sets",
        spectrum_homeomorphism
    ),
    theorem!(
        "radical-frame-duality",
        "Φ and Ψ are inverse frame isomorphisms R(A) ≅ Id(L(A))",
        radical_frame_duality
    ),
    theorem!(
        "reticulation-matches-radical-frame",
        "μ: L(A) → R(A) is a lattice isomorphism with μ∘λ = ρ",
        reticulation_matches_radical_frame
    ),
    theorem!(
        "boolean-triangle",
        "B(λ), B(ρ), B(μ) are Boolean isomorphisms with B(ρ) = B(μ)∘B(λ)",
        boolean_triangle
    ),
    theorem!(
        "reticulation-functor",
        "L(uₐ) is a lattice morphism and L([a)) ≅ L(A)/a*",
        reticulation_functor
    ),
    // The lifting property and its relatives.
    theorem!(
        "lp-bnormal-equivalence",
        "LP(A), LP(R(A)), Id-BLP(L(A)) and B-normality of A, R(A), L(A) agree",
        lp_bnormal_equivalence
    ),
    theorem!(
        "normality-by-annihilators",
        "normality and B-normality agree with their annihilator forms",
        normality_by_annihilators
    ),
    theorem!(
        "b-normal-implies-normal",
        "a B-normal quantale is normal",
        b_normal_implies_normal
    ),
    theorem!(
        "hyperarchimedean-characterization",
        "hyperarchimedean iff L(A) Boolean iff Max(A) = Spec(A)",
        hyperarchimedean_characterization
    ),
    theorem!(
        "zero-dimensional-radical-frame",
        "a semiprime quantale is hyperarchimedean iff R(A) is zero-dimensional",
        zero_dimensional_radical_frame
    ),
    theorem!(
        "m-primes-have-lp",
        "m-primes and anchors with two-element [a)-centers have LP",
        m_primes_have_lp
    ),
    theorem!(
        "sufficient-conditions-for-lp",
        "local, chain-reticulation and hyperarchimedean quantales have LP",
        sufficient_conditions_for_lp
    ),
    theorem!(
        "locality-transfers",
        "A local iff R(A) local iff L(A) Id-local",
        locality_transfers
    ),
    theorem!(
        "lp-passes-to-intervals",
        "LP of A gives LP of every [a) and of every surjective image",
        lp_passes_to_intervals
    ),
    theorem!(
        "normal-implies-radical-lp",
        "in a normal quantale r(A) has LP",
        normal_implies_radical_lp
    ),
    theorem!(
        "jacobson-radical-is-small",
        "a∨r(A) = 1 implies a = 1",
        jacobson_radical_is_small
    ),
    theorem!(
        "property-star-implies-lp",
        "property (*) implies LP",
        property_star_implies_lp
    ),
    theorem!(
        "property-star-transfers",
        "property (*) passes to R(A) and to every [a)",
        property_star_transfers
    ),
    theorem!(
        "complemented-below-radical-is-zero",
        "a complemented e ≤ r(A) is 0",
        complemented_below_radical_is_zero
    ),
    theorem!(
        "comaximal-splitting",
        "[a∧b) ≅ [a)×[b) for a∨b = 1, and [r(A)) ≅ ∏[mᵢ)",
        comaximal_splitting
    ),
    theorem!(
        "product-spectrum",
        "Max and r of a product are computed factorwise",
        product_spectrum
    ),
    theorem!(
        "idempotent-factorization",
        "A ≅ ∏Aᵢ iff complemented eᵢ with ⋀eᵢ = 0, eᵢ∨eⱼ = 1 and [eᵢ) ≅ Aᵢ",
        idempotent_factorization
    ),
    theorem!(
        "product-transfer",
        "a product has LP, resp. (*), iff every factor does",
        product_transfer
    ),
    theorem!(
        "semilocal-lp-criteria",
        "on semilocal quantales (*) iff LP iff r(A) has LP",
        semilocal_lp_criteria
    ),
    theorem!(
        "local-product-decomposition",
        "five characterizations of finite products of local quantales agree",
        local_product_decomposition
    ),
    theorem!(
        "decomposition-recipe",
        "the decomposition recipe yields verified local factors or an unliftable witness",
        decomposition_recipe
    ),
];

/// Looks up a theorem by id.
pub fn theorem(id: &str) -> Option<&'static Theorem> {
    CATALOG.iter().find(|t| t.id == id)
}

fn refuted(msg: impl Into<String>) -> Outcome {
    Err(CheckError::Refuted(msg.into()))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        refuted(msg())
    }
}

fn nontrivial(m: &CorpusMember) -> Result<&Quantale, CheckError> {
    if m.quantale.is_trivial() {
        Err(CheckError::NotApplicable("one-point carrier".into()))
    } else {
        Ok(&m.quantale)
    }
}

fn reticulation(q: &Quantale) -> Result<Reticulation<'_>, CheckError> {
    reticulate(q).map_err(|e| CheckError::Refuted(format!("reticulation construction failed: {e}")))
}

fn pair(q: &Quantale, a: usize, b: usize) -> String {
    format!("({}, {})", q.label(a), q.label(b))
}

fn triple(q: &Quantale, a: usize, b: usize, c: usize) -> String {
    format!("({}, {}, {})", q.label(a), q.label(b), q.label(c))
}

// ----- distributive lattices -------------------------------------------

fn member_lattices(q: &Quantale) -> Result<Vec<(&'static str, DistLattice)>, CheckError> {
    let r = reticulation(q)?;
    let mut out = vec![("L(A)", r.lattice().clone()), ("R(A)", r.radical_lattice())];
    if let Ok(carrier) = DistLattice::new(q.lattice().clone()) {
        out.push(("A", carrier));
    }
    Ok(out)
}

fn id_local_criterion(m: &CorpusMember) -> Outcome {
    for (name, l) in member_lattices(&m.quantale)? {
        if l.len() < 2 {
            continue;
        }
        let top = l.top();
        let criterion = l
            .elements()
            .all(|a| l.elements().all(|b| l.join(a, b) != top || a == top || b == top));
        ensure(is_id_local(&l) == criterion, || {
            format!("{name}: Id-local = {}, cover criterion = {criterion}", is_id_local(&l))
        })?;
    }
    Ok(())
}

fn quotient_boolean_morphism(m: &CorpusMember) -> Outcome {
    for (name, l) in member_lattices(&m.quantale)? {
        for ideal in all_ideals(&l) {
            let quotient = quotient_by_ideal(&l, &ideal).map_err(|e| CheckError::Refuted(format!("{name}: {e}")))?;
            if let Err(e) = quotient.projection().boolean_restriction() {
                return refuted(format!("{name}/{}: {e}", ideal.render(&l)));
            }
        }
    }
    Ok(())
}

fn quotient_extremes(m: &CorpusMember) -> Outcome {
    for (name, l) in member_lattices(&m.quantale)? {
        let zero = LatticeIdeal::principal(&l, l.bottom());
        let q0 = quotient_by_ideal(&l, &zero).map_err(|e| CheckError::Refuted(format!("{name}: {e}")))?;
        ensure(q0.projection().is_isomorphism(), || {
            format!("{name}/{{0}} is not isomorphic to {name}")
        })?;
        let all = LatticeIdeal::principal(&l, l.top());
        let q1 = quotient_by_ideal(&l, &all).map_err(|e| CheckError::Refuted(format!("{name}: {e}")))?;
        ensure(q1.lattice.len() == 1, || {
            format!("{name}/{name} has {} elements", q1.lattice.len())
        })?;
    }
    Ok(())
}

fn lattice_b_normal_implies_normal(m: &CorpusMember) -> Outcome {
    for (name, l) in member_lattices(&m.quantale)? {
        let b = lattice_is_b_normal(&l);
        let n = lattice_is_normal(&l);
        ensure(!b.holds() || n.holds(), || {
            format!("{name} is B-normal but not normal: {:?}", n.witness())
        })?;
    }
    Ok(())
}

fn lattice_id_blp_iff_b_normal(m: &CorpusMember) -> Outcome {
    for (name, l) in member_lattices(&m.quantale)? {
        let blp = has_id_blp(&l).as_bool();
        let bn = lattice_is_b_normal(&l).as_bool();
        ensure(blp == bn, || format!("{name}: Id-BLP = {blp:?}, B-normal = {bn:?}"))?;
    }
    Ok(())
}

// ----- quantale structure ----------------------------------------------

fn residuation_adjunction(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    for b in q.elements() {
        for c in q.elements() {
            let r = q.residuum(b, c);
            for a in q.elements() {
                ensure(q.leq(a, r) == q.leq(q.mul(a, b), c), || {
                    format!("at {}", triple(q, a, b, c))
                })?;
            }
        }
    }
    Ok(())
}

fn comaximal_laws(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    let top = q.top();
    for a in q.elements() {
        for b in q.elements().filter(|&b| q.join(a, b) == top) {
            let at = || pair(q, a, b);
            ensure(q.mul(a, b) == q.meet(a, b), || format!("a·b ≠ a∧b at {}", at()))?;
            for n in 1..=q.len() {
                ensure(q.join(q.power(a, n), q.power(b, n)) == top, || {
                    format!("aⁿ∨bⁿ ≠ 1 at {}, n = {n}", at())
                })?;
            }
            for c in q.elements() {
                if q.join(a, c) == top {
                    ensure(q.join(a, q.mul(b, c)) == top && q.join(a, q.meet(b, c)) == top, || {
                        format!("a∨(b·c) ≠ 1 at {}", triple(q, a, b, c))
                    })?;
                }
                if q.leq(a, c) {
                    ensure(q.join(a, q.mul(b, c)) == c, || {
                        format!("a∨(b·c) ≠ c at {}", triple(q, a, b, c))
                    })?;
                }
            }
        }
    }
    Ok(())
}

/// `p < 1` with `a·b ≤ p ⟹ a ≤ p or b ≤ p`, decided from the table alone.
fn brute_m_primes(q: &Quantale) -> Vec<usize> {
    q.elements()
        .filter(|&p| p != q.top())
        .filter(|&p| {
            q.elements().all(|a| {
                q.elements()
                    .all(|b| !q.leq(q.mul(a, b), p) || q.leq(a, p) || q.leq(b, p))
            })
        })
        .collect()
}

fn m_primes_are_maximal(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    match q.m_primes().iter().find(|p| !q.maximals().contains(p)) {
        Some(&p) => refuted(format!(
            "{} is m-prime but not maximal (Spec = {}, Max = {})",
            q.label(p),
            q.render_set(q.m_primes()),
            q.render_set(q.maximals())
        )),
        None => Ok(()),
    }
}

fn maximals_are_m_prime(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    let coatoms = q.lattice().coatoms();
    ensure(q.maximals() == coatoms.as_slice(), || {
        "Max differs from the coatoms".into()
    })?;
    for &mx in q.maximals() {
        ensure(q.m_primes().contains(&mx), || {
            format!("maximal {} is not m-prime", q.label(mx))
        })?;
    }
    for a in q.elements().filter(|&a| a != q.top()) {
        ensure(q.maximals().iter().any(|&mx| q.leq(a, mx)), || {
            format!("{} lies below no maximal element", q.label(a))
        })?;
    }
    Ok(())
}

fn radical_laws(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    let rho = |a| q.radical(a);
    let top = q.top();
    for a in q.elements() {
        let at = |law: &str| format!("{law} at {}", q.label(a));
        ensure(q.leq(a, rho(a)), || at("a ≤ ρ(a)"))?;
        ensure(rho(rho(a)) == rho(a), || at("ρ(ρ(a)) = ρ(a)"))?;
        ensure((rho(a) == top) == (a == top), || at("ρ(a) = 1 iff a = 1"))?;
        for n in 1..=q.len() {
            ensure(rho(q.power(a, n)) == rho(a), || at(&format!("ρ(a^{n}) = ρ(a)")))?;
        }
        for b in q.elements() {
            let at = |law: &str| format!("{law} at {}", pair(q, a, b));
            let meet = q.meet(rho(a), rho(b));
            ensure(rho(q.meet(a, b)) == meet && rho(q.mul(a, b)) == meet, || {
                at("ρ(a∧b) = ρ(a·b) = ρ(a)∧ρ(b)")
            })?;
            ensure(rho(q.join(a, b)) == rho(q.join(rho(a), rho(b))), || {
                at("ρ(a∨b) = ρ(ρ(a)∨ρ(b))")
            })?;
            ensure((q.join(rho(a), rho(b)) == top) == (q.join(a, b) == top), || {
                at("ρ(a)∨ρ(b) = 1 iff a∨b = 1")
            })?;
        }
    }
    Ok(())
}

fn radical_oracles_agree(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    let primes = brute_m_primes(q);
    ensure(primes == q.m_primes(), || {
        format!(
            "Spec by brute force {} ≠ {}",
            q.render_set(&primes),
            q.render_set(q.m_primes())
        )
    })?;
    for a in q.elements() {
        let by_spec = q.meet_all(primes.iter().copied().filter(|&p| q.leq(a, p)));
        let by_powers = q.join_all(q.elements().filter(|&c| {
            let mut x = c;
            (0..q.len()).any(|_| {
                let below = q.leq(x, a);
                x = q.mul(x, c);
                below
            })
        }));
        ensure(by_spec == by_powers, || {
            format!(
                "at {}: meet over Spec {} ≠ power join {}",
                q.label(a),
                q.label(by_spec),
                q.label(by_powers)
            )
        })?;
        ensure(q.radical(a) == by_spec && q.radical_by_powers(a) == by_powers, || {
            format!("library radical disagrees with the oracles at {}", q.label(a))
        })?;
    }
    Ok(())
}

fn radical_frame_structure(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    let r = q.radical_frame();
    let mut image: Vec<usize> = q.elements().map(|a| q.radical(a)).collect();
    image.sort_unstable();
    image.dedup();
    ensure(r.members() == image.as_slice(), || {
        "R(A) differs from the ρ-image".into()
    })?;
    ensure(r.as_quantale().lattice().is_distributive().holds(), || {
        "R(A) is not distributive".into()
    })?;
    ensure(r.join_dot_is_lub(), || "ρ(a∨b) is not the join in R(A)".into())?;
    ensure(r.to_parent(r.bottom()) == q.radical(q.bottom()), || {
        "R(A) bottom is not ρ(0)".into()
    })?;
    for i in 0..r.len() {
        for j in 0..r.len() {
            let (a, b) = (r.to_parent(i), r.to_parent(j));
            ensure(r.to_parent(r.join_dot(i, j)) == q.radical(q.join(a, b)), || {
                format!("join at {}", pair(q, a, b))
            })?;
            ensure(r.to_parent(r.meet(i, j)) == q.meet(a, b), || {
                format!("meet at {}", pair(q, a, b))
            })?;
        }
    }
    Ok(())
}

fn radical_frame_shares_spectra(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    let r = q.radical_frame();
    let rq = r.as_quantale();
    let lift = |xs: &[usize]| xs.iter().map(|&i| r.to_parent(i)).collect::<Vec<_>>();
    ensure(lift(rq.maximals()) == q.maximals(), || {
        format!("Max(R(A)) = {} ≠ Max(A)", q.render_set(&lift(rq.maximals())))
    })?;
    ensure(lift(rq.m_primes()) == q.m_primes(), || {
        format!("Spec(R(A)) = {} ≠ Spec(A)", q.render_set(&lift(rq.m_primes())))
    })
}

fn boolean_center_laws(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    ensure(q.boolean_center() == q.boolean_center_by_negation().as_slice(), || {
        "B(A) differs from {a | a∨a⊥ = 1}".into()
    })?;
    for &e in q.boolean_center() {
        let ne = q.negation(e);
        for a in q.elements() {
            ensure(q.meet(e, a) == q.mul(e, a), || {
                format!("e∧a ≠ e·a at {}", pair(q, e, a))
            })?;
            ensure(q.residuum(e, a) == q.join(ne, a), || {
                format!("e→a ≠ e⊥∨a at {}", pair(q, e, a))
            })?;
            for b in q.elements() {
                ensure(q.join(q.meet(a, b), e) == q.meet(q.join(a, e), q.join(b, e)), || {
                    format!("(a∧b)∨e ≠ (a∨e)∧(b∨e) at {}", triple(q, a, b, e))
                })?;
            }
        }
    }
    for a in q.elements() {
        for b in q.elements() {
            if q.join(a, b) == q.top() && q.mul(a, b) == q.bottom() {
                ensure(q.is_complemented(a) && q.is_complemented(b), || {
                    format!("a∨b = 1, a·b = 0 but not complemented at {}", pair(q, a, b))
                })?;
            }
        }
    }
    Ok(())
}

/// Every interval projection `uₐ` and, for products, the factor projections.
fn with_corpus_morphisms(m: &CorpusMember, mut f: impl FnMut(&str, &QuantaleMorphism<'_>) -> Outcome) -> Outcome {
    let q = &m.quantale;
    for a in q.elements() {
        let iv = interval_quantale(q, a);
        f(&format!("u_{}", q.label(a)), &iv.projection())?;
    }
    if !m.factors.is_empty() {
        let p = product(&m.factors).map_err(|e| CheckError::Refuted(e.to_string()))?;
        for i in 0..m.factors.len() {
            f(&format!("π_{i}"), &p.projection(i))?;
        }
    }
    Ok(())
}

fn unital_morphisms_preserve_complements(m: &CorpusMember) -> Outcome {
    with_corpus_morphisms(m, |name, u| {
        ensure(u.is_unital(), || format!("{name} is not unital"))?;
        u.boolean_restriction()
            .map(|_| ())
            .map_err(|e| CheckError::Refuted(format!("{name}: {e}")))
    })
}

fn interval_radical_commutes(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    for a in q.elements() {
        let iv = interval_quantale(q, a);
        for x in q.elements() {
            let local = iv.from_parent(q.join(x, a)).expect("x∨a ≥ a");
            let lhs = iv.to_parent(iv.quantale.radical(local));
            let rhs = q.radical(q.join(q.radical(a), q.radical(x)));
            ensure(lhs == rhs, || {
                format!("ρₐ(x∨a) = {} ≠ {} at {}", q.label(lhs), q.label(rhs), pair(q, a, x))
            })?;
            if q.leq(a, x) {
                ensure(lhs == q.radical(x), || {
                    format!("ρ of [a) differs from ρ at {}", pair(q, a, x))
                })?;
            }
        }
    }
    Ok(())
}

fn kernel_detects_injectivity(m: &CorpusMember) -> Outcome {
    with_corpus_morphisms(m, |name, u| {
        let src = u.source;
        let kernel = src.join_all(src.elements().filter(|&x| u.apply(x) == u.target.bottom()));
        ensure(u.kernel() == kernel, || format!("{name}: kernel is not ⋁ u⁻¹(0)"))?;
        let injective = src
            .elements()
            .all(|x| src.elements().all(|y| x == y || u.apply(x) != u.apply(y)));
        ensure(injective == (kernel == src.bottom()), || {
            format!("{name}: injective = {injective}, Ker = {}", src.label(kernel))
        })
    })
}

fn surjection_restricts_to_isomorphism(m: &CorpusMember) -> Outcome {
    with_corpus_morphisms(m, |name, u| {
        if !u.is_surjective() {
            return Ok(());
        }
        let (iv, map) = u.restrict_to_kernel_interval();
        let restricted = QuantaleMorphism::new(&iv.quantale, u.target, map)
            .map_err(|e| CheckError::Refuted(format!("{name}: restriction is not a morphism: {e}")))?;
        ensure(restricted.is_isomorphism(), || {
            format!("{name}: [Ker) → target is not bijective")
        })
    })
}

// ----- reticulation ----------------------------------------------------

fn reticulation_axioms(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    let r = reticulation(q)?;
    match reticulation_axiom_failure(q, r.lattice(), r.lambda_map()) {
        Some((law, witness)) => refuted(format!("{law} fails at {witness:?}")),
        None => Ok(()),
    }
}

fn reticulation_consequences(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    let r = reticulation(q)?;
    let l = r.lattice();
    let lam = |a| r.lambda(a);
    for a in q.elements() {
        ensure((lam(a) == l.top()) == (a == q.top()), || {
            format!("λ(a) = 1 iff a = 1 fails at {}", q.label(a))
        })?;
        let nilpotent = (1..=q.len()).any(|k| q.power(a, k) == q.bottom());
        ensure((lam(a) == l.bottom()) == nilpotent, || {
            format!("λ(a) = 0 iff a nilpotent fails at {}", q.label(a))
        })?;
        for n in 1..=q.len() {
            ensure(lam(q.power(a, n)) == lam(a), || {
                format!("λ(a^{n}) ≠ λ(a) at {}", q.label(a))
            })?;
        }
        for b in q.elements() {
            if q.leq(a, b) {
                ensure(l.leq(lam(a), lam(b)), || format!("λ not monotone at {}", pair(q, a, b)))?;
            }
            ensure(lam(q.join(a, b)) == l.join(lam(a), lam(b)), || {
                format!("λ(a∨b) ≠ λa∨λb at {}", pair(q, a, b))
            })?;
        }
    }
    Ok(())
}

fn reticulation_unicity(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    let r = reticulation(q)?;
    let n = r.len();
    let rotation: Vec<usize> = (0..n).map(|k| (k + 1) % n).collect();
    let (relabeled, lambda2) = r
        .relabeled_candidate(&rotation)
        .map_err(|e| CheckError::Refuted(e.to_string()))?;
    let (radical, lambda3) = r.radical_candidate();
    for (name, cand, lam) in [("relabelled copy", &relabeled, &lambda2), ("R(A)", &radical, &lambda3)] {
        let f = r
            .check_unicity(cand, lam)
            .map_err(|e| CheckError::Refuted(format!("{name}: {e}")))?;
        let mut sorted = f.clone();
        sorted.sort_unstable();
        ensure(sorted == (0..n).collect::<Vec<_>>(), || {
            format!("{name}: f is not a bijection")
        })?;
        for a in q.elements() {
            ensure(f[r.lambda(a)] == lam[a], || {
                format!("{name}: f∘λ ≠ λ' at {}", q.label(a))
            })?;
        }
    }
    Ok(())
}

fn star_maps_round_trip(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    let r = reticulation(q)?;
    let l = r.lattice();
    let fail = |e: crate::reticulation::ReticulationError| CheckError::Refuted(e.to_string());
    for ideal in all_ideals(l) {
        let back = r.star(r.unstar(&ideal).map_err(fail)?).map_err(fail)?;
        ensure(back == ideal, || format!("(I_*)* ≠ I at {}", ideal.render(l)))?;
    }
    for a in q.elements() {
        let back = r.unstar(&r.star(a).map_err(fail)?).map_err(fail)?;
        ensure(q.leq(a, back), || format!("a ≰ (a*)_* at {}", q.label(a)))?;
        ensure(back == q.radical(a), || format!("(a*)_* ≠ ρ(a) at {}", q.label(a)))?;
        ensure((back == a) == q.is_radical(a), || {
            format!("equality off the radicals at {}", q.label(a))
        })?;
    }
    Ok(())
}

fn star_adjunction_on_radicals(m: &CorpusMember) -> Outcome {
    let r = reticulation(&m.quantale)?;
    r.verify_star_maps().map_err(|e| CheckError::Refuted(e.to_string()))
}

fn star_adjunction_on_carrier(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    let r = reticulation(q)?;
    match r.carrier_adjunction_failure() {
        Some((ideal, a)) => {
            let s = r.unstar(&ideal).expect("ideal of L(A)");
            refuted(format!(
                "I = {}, a = {}: I ⊆ a* but I_* = {} ≰ a",
                ideal.render(r.lattice()),
                q.label(a),
                q.label(s)
            ))
        }
        None => Ok(()),
    }
}

fn spectrum_transport(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    let r = reticulation(q)?;
    let l = r.lattice();
    let primes = prime_ideals(l);
    for &p in q.m_primes() {
        let star = r.star(p).map_err(|e| CheckError::Refuted(e.to_string()))?;
        ensure(primes.contains(&star), || {
            format!("{}* is not a prime ideal", q.label(p))
        })?;
        ensure(r.unstar(&star).ok() == Some(p), || {
            format!("({}*)_* ≠ {}", q.label(p), q.label(p))
        })?;
    }
    for ideal in &primes {
        let s = r.unstar(ideal).map_err(|e| CheckError::Refuted(e.to_string()))?;
        ensure(q.m_primes().contains(&s), || {
            format!("{}_* = {} is not m-prime", ideal.render(l), q.label(s))
        })?;
    }
    Ok(())
}

fn spectrum_homeomorphism(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    let r = reticulation(q)?;
    let s = r
        .spectrum_homeomorphism()
        .map_err(|e| CheckError::Refuted(e.to_string()))?;
    for (i, &k) in s.forward.iter().enumerate() {
        ensure(s.backward[k] == i, || "v∘u ≠ id".into())?;
    }
    ensure(s.forward.len() == s.backward.len(), || {
        "Spec(A) and Spec_Id(L(A)) differ in size".into()
    })?;
    for a in q.elements() {
        let star = r.star(a).map_err(|e| CheckError::Refuted(e.to_string()))?;
        for (i, &p) in s.spec.iter().enumerate() {
            let in_v = q.leq(a, p);
            let in_vid = star.is_subset(&s.primes[s.forward[i]]);
            ensure(in_v == in_vid, || {
                format!("u(V({})) ≠ V_Id({}*) at {}", q.label(a), q.label(a), q.label(p))
            })?;
        }
    }
    Ok(())
}

fn radical_frame_duality(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    let r = reticulation(q)?;
    let iso = r.frame_iso().map_err(|e| CheckError::Refuted(e.to_string()))?;
    let frame = q.radical_frame();
    ensure(
        iso.phi.len() == frame.len() && iso.psi.len() == iso.ideals.len(),
        || "size mismatch".into(),
    )?;
    for (i, &k) in iso.phi.iter().enumerate() {
        ensure(iso.psi[k] == i, || "Ψ∘Φ ≠ id".into())?;
        let a = frame.to_parent(i);
        let star = r.star(a).map_err(|e| CheckError::Refuted(e.to_string()))?;
        ensure(iso.ideals[k] == star, || format!("Φ({}) ≠ {}*", q.label(a), q.label(a)))?;
    }
    for i in 0..frame.len() {
        for j in 0..frame.len() {
            let (a, b) = (iso.ideals[iso.phi[i]].clone(), iso.ideals[iso.phi[j]].clone());
            let meet = iso.ideals[iso.phi[frame.meet(i, j)]].clone();
            let both: Vec<usize> = a.members().iter().copied().filter(|x| b.contains(*x)).collect();
            ensure(meet.members() == both.as_slice(), || "Φ does not preserve meets".into())?;
            let join = &iso.ideals[iso.phi[frame.join_dot(i, j)]];
            ensure(a.is_subset(join) && b.is_subset(join), || {
                "Φ(a ∨̇ b) does not contain Φa, Φb".into()
            })?;
        }
    }
    Ok(())
}

fn reticulation_matches_radical_frame(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    let r = reticulation(q)?;
    let mu = r.mu().map_err(|e| CheckError::Refuted(e.to_string()))?;
    let frame = q.radical_frame();
    for a in q.elements() {
        ensure(frame.to_parent(mu[r.lambda(a)]) == q.radical(a), || {
            format!("μ∘λ ≠ ρ at {}", q.label(a))
        })?;
    }
    Ok(())
}

fn boolean_triangle(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    let r = reticulation(q)?;
    let t = r.boolean_isos().map_err(|e| CheckError::Refuted(e.to_string()))?;
    let l_center = lattice_boolean_center(r.lattice());
    let frame = q.radical_frame();
    let r_center = frame.as_quantale().boolean_center().to_vec();
    ensure(
        t.b_lambda.len() == q.boolean_center().len() && l_center.len() == q.boolean_center().len(),
        || format!("|B(A)| = {}, |B(L(A))| = {}", q.boolean_center().len(), l_center.len()),
    )?;
    ensure(r_center.len() == q.boolean_center().len(), || {
        format!("|B(R(A))| = {}", r_center.len())
    })?;
    for &(e, k) in &t.b_lambda {
        let via = t.b_mu.iter().find(|&&(c, _)| c == k).map(|&(_, x)| x);
        let direct = t.b_rho.iter().find(|&&(x, _)| x == e).map(|&(_, y)| y);
        ensure(via.is_some() && via == direct, || {
            format!("B(ρ) ≠ B(μ)∘B(λ) at {}", q.label(e))
        })?;
    }
    Ok(())
}

fn reticulation_functor(m: &CorpusMember) -> Outcome {
    let q = &m.quantale;
    let ra = reticulation(q)?;
    for a in q.elements() {
        let iv = interval_quantale(q, a);
        let ri = reticulation(&iv.quantale)?;
        lift_morphism(&iv.projection(), &ra, &ri)
            .map_err(|e| CheckError::Refuted(format!("L(u_{}): {e}", q.label(a))))?;
        interval_reticulation_iso(q, a).map_err(|e| CheckError::Refuted(format!("L([{})): {e}", q.label(a))))?;
    }
    Ok(())
}

// ----- lifting property and relatives ----------------------------------

fn lp_bnormal_equivalence(m: &CorpusMember) -> Outcome {
    let q = nontrivial(m)?;
    let r = reticulation(q)?;
    let frame = q.radical_frame();
    let rq = frame.as_quantale();
    let verdicts = [
        ("LP(A)", has_lp(q).as_bool()),
        ("LP(R(A))", has_lp(rq).as_bool()),
        ("Id-BLP(L(A))", has_id_blp(r.lattice()).as_bool()),
        ("B-normal(A)", is_b_normal(q).as_bool()),
        ("B-normal(R(A))", is_b_normal(rq).as_bool()),
        ("B-normal(L(A))", lattice_is_b_normal(r.lattice()).as_bool()),
    ];
    ensure(verdicts.iter().all(|(_, v)| *v == verdicts[0].1), || {
        let parts: Vec<String> = verdicts
            .iter()
            .map(|(n, v)| format!("{n} = {}", render_bool(*v)))
            .collect();
        parts.join(", ")
    })
}

fn render_bool(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "trivial",
    }
}

fn normality_by_annihilators(m: &CorpusMember) -> Outcome {
    let q = nontrivial(m)?;
    ensure(is_normal(q).as_bool() == is_normal_by_annihilators(q).as_bool(), || {
        "normal forms disagree".into()
    })?;
    ensure(
        is_b_normal(q).as_bool() == is_b_normal_by_annihilators(q).as_bool(),
        || "B-normal forms disagree".into(),
    )
}

fn b_normal_implies_normal(m: &CorpusMember) -> Outcome {
    let q = nontrivial(m)?;
    ensure(!is_b_normal(q).holds() || is_normal(q).holds(), || {
        format!(
            "B-normal but not normal at {:?}",
            is_normal(q).witness().map(|&(a, b)| pair(q, a, b))
        )
    })
}

fn hyperarchimedean_characterization(m: &CorpusMember) -> Outcome {
    let q = nontrivial(m)?;
    let r = reticulation(q)?;
    let hyper = is_hyperarchimedean(q).holds();
    let boolean = lattice_boolean_center(r.lattice()).len() == r.len();
    let max_is_spec = q.maximals() == q.m_primes();
    ensure(hyper == boolean && boolean == max_is_spec, || {
        format!("hyperarchimedean = {hyper}, L(A) Boolean = {boolean}, Max = Spec = {max_is_spec}")
    })
}

fn zero_dimensional_radical_frame(m: &CorpusMember) -> Outcome {
    let q = nontrivial(m)?;
    if !is_semiprime(q).holds() {
        return Err(CheckError::NotApplicable(format!(
            "not semiprime: ρ(0) = {}",
            q.label(q.radical(q.bottom()))
        )));
    }
    let hyper = is_hyperarchimedean(q).holds();
    let zero_dim = q.radical_frame().is_zero_dimensional();
    ensure(hyper == zero_dim, || {
        format!("hyperarchimedean = {hyper}, R(A) zero-dimensional = {zero_dim}")
    })
}

fn m_primes_have_lp(m: &CorpusMember) -> Outcome {
    let q = nontrivial(m)?;
    for &p in q.m_primes() {
        ensure(element_has_lp(q, p).holds(), || {
            format!("m-prime {} lacks LP", q.label(p))
        })?;
    }
    for a in q.elements() {
        if interval_quantale(q, a).quantale.boolean_center().len() == 2 {
            ensure(element_has_lp(q, a).holds(), || {
                format!("{} has a two-element center but lacks LP", q.label(a))
            })?;
        }
    }
    Ok(())
}

fn sufficient_conditions_for_lp(m: &CorpusMember) -> Outcome {
    let q = nontrivial(m)?;
    let r = reticulation(q)?;
    let lp = has_lp(q).holds();
    ensure(lp || !is_local(q).holds(), || "local without LP".into())?;
    ensure(lp || !r.lattice().is_chain(), || {
        "L(A) is a chain but A lacks LP".into()
    })?;
    ensure(lp || !is_hyperarchimedean(q).holds(), || {
        "hyperarchimedean without LP".into()
    })
}

fn locality_transfers(m: &CorpusMember) -> Outcome {
    let q = nontrivial(m)?;
    let r = reticulation(q)?;
    let a = is_local(q).holds();
    let rq = is_local(q.radical_frame().as_quantale()).holds();
    let l = is_id_local(r.lattice());
    ensure(a == rq && rq == l, || {
        format!("A local = {a}, R(A) local = {rq}, L(A) Id-local = {l}")
    })
}

fn lp_passes_to_intervals(m: &CorpusMember) -> Outcome {
    let q = nontrivial(m)?;
    if !has_lp(q).holds() {
        return Ok(());
    }
    for a in q.elements().filter(|&a| a != q.top()) {
        let iv = interval_quantale(q, a);
        ensure(has_lp(&iv.quantale).holds(), || format!("[{}) lacks LP", q.label(a)))?;
    }
    if !m.factors.is_empty() {
        for (i, f) in m.factors.iter().enumerate() {
            ensure(f.is_trivial() || has_lp(f).holds(), || format!("factor {i} lacks LP"))?;
        }
    }
    Ok(())
}

fn normal_implies_radical_lp(m: &CorpusMember) -> Outcome {
    let q = nontrivial(m)?;
    if !is_normal(q).holds() {
        return Ok(());
    }
    let r = q.jacobson_radical().expect("nontrivial");
    ensure(element_has_lp(q, r).holds(), || {
        format!(
            "normal, but r(A) = {} lacks LP: {} does not lift",
            q.label(r),
            q.render_set(&unliftable_elements(q, r))
        )
    })
}

fn jacobson_radical_is_small(m: &CorpusMember) -> Outcome {
    let q = nontrivial(m)?;
    let r = q.jacobson_radical().expect("nontrivial");
    for a in q.elements() {
        ensure(q.join(a, r) != q.top() || a == q.top(), || {
            format!("{}∨r(A) = 1", q.label(a))
        })?;
    }
    Ok(())
}

fn property_star_implies_lp(m: &CorpusMember) -> Outcome {
    let q = nontrivial(m)?;
    ensure(!has_property_star(q).holds() || has_lp(q).holds(), || {
        "(*) holds but LP fails".into()
    })
}

fn property_star_transfers(m: &CorpusMember) -> Outcome {
    let q = nontrivial(m)?;
    if !has_property_star(q).holds() {
        return Ok(());
    }
    let frame = q.radical_frame();
    let rq = frame.as_quantale();
    ensure(rq.is_trivial() || has_property_star(rq).holds(), || {
        "R(A) lacks (*)".into()
    })?;
    for a in q.elements().filter(|&a| a != q.top()) {
        let iv = interval_quantale(q, a);
        ensure(has_property_star(&iv.quantale).holds(), || {
            format!("[{}) lacks (*)", q.label(a))
        })?;
    }
    Ok(())
}

fn complemented_below_radical_is_zero(m: &CorpusMember) -> Outcome {
    let q = nontrivial(m)?;
    let r = q.jacobson_radical().expect("nontrivial");
    for &e in q.boolean_center() {
        ensure(!q.leq(e, r) || e == q.bottom(), || {
            format!("complemented {} ≤ r(A)", q.label(e))
        })?;
    }
    Ok(())
}

fn comaximal_splitting(m: &CorpusMember) -> Outcome {
    let q = nontrivial(m)?;
    for a in q.elements() {
        for b in q.elements().filter(|&b| b >= a && q.join(a, b) == q.top()) {
            decompose_by_elements(q, &[a, b]).map_err(|e| CheckError::Refuted(format!("at {}: {e}", pair(q, a, b))))?;
        }
    }
    decompose_by_elements(q, q.maximals())
        .map(|_| ())
        .map_err(|e| CheckError::Refuted(format!("[r(A)) ≇ ∏[mᵢ): {e}")))
}

/// Factor lists presenting the member as a product: the recorded factors,
/// and `[e), [e⊥)` for every complemented `0 < e < 1`.
fn factorizations(m: &CorpusMember) -> Vec<(String, Vec<Quantale>)> {
    let q = &m.quantale;
    let mut out = Vec::new();
    if !m.factors.is_empty() {
        out.push(("recorded factors".to_string(), m.factors.clone()));
    }
    for &e in q.boolean_center() {
        let ne = q.negation(e);
        if e == q.bottom() || e == q.top() || ne < e {
            continue;
        }
        out.push((
            format!("[{}) × [{})", q.label(e), q.label(ne)),
            vec![interval_quantale(q, e).quantale, interval_quantale(q, ne).quantale],
        ));
    }
    out
}

fn product_spectrum(m: &CorpusMember) -> Outcome {
    nontrivial(m)?;
    for (name, factors) in factorizations(m) {
        let p = product(&factors).map_err(|e| CheckError::Refuted(e.to_string()))?;
        let pq = &p.quantale;
        let expected: Vec<usize> = pq
            .elements()
            .filter(|&x| {
                let t = p.tuple(x);
                let below: Vec<usize> = (0..factors.len()).filter(|&i| t[i] != factors[i].top()).collect();
                below.len() == 1 && factors[below[0]].maximals().contains(&t[below[0]])
            })
            .collect();
        ensure(pq.maximals() == expected.as_slice(), || {
            format!("{name}: Max is not factorwise")
        })?;
        let total: usize = factors.iter().map(|f| f.maximals().len()).sum();
        ensure(pq.maximals().len() == total, || {
            format!("{name}: |Max| = {} ≠ {total}", pq.maximals().len())
        })?;
        let r = pq.jacobson_radical().map_err(|e| CheckError::Refuted(e.to_string()))?;
        let expected: Vec<usize> = factors
            .iter()
            .map(|f| f.jacobson_radical().expect("nontrivial factor"))
            .collect();
        ensure(p.tuple(r) == expected.as_slice(), || {
            format!("{name}: r(A) is not factorwise")
        })?;
    }
    Ok(())
}

fn idempotent_factorization(m: &CorpusMember) -> Outcome {
    nontrivial(m)?;
    for (name, factors) in factorizations(m) {
        let p = product(&factors).map_err(|e| CheckError::Refuted(e.to_string()))?;
        let pq = &p.quantale;
        ensure(find_isomorphism(pq, &m.quantale).is_some(), || {
            format!("{name}: the product is not isomorphic to A")
        })?;
        let es: Vec<usize> = (0..factors.len()).map(|i| p.canonical_idempotent(i)).collect();
        for (i, &e) in es.iter().enumerate() {
            ensure(pq.is_complemented(e), || format!("{name}: e{i} is not complemented"))?;
            ensure(p.projection(i).kernel() == e, || format!("{name}: Ker(π{i}) ≠ e{i}"))?;
            ensure(
                find_isomorphism(&interval_quantale(pq, e).quantale, &factors[i]).is_some(),
                || format!("{name}: [e{i}) ≇ factor {i}"),
            )?;
            for &f in &es[i + 1..] {
                ensure(pq.join(e, f) == pq.top(), || {
                    format!("{name}: idempotents are not comaximal")
                })?;
            }
        }
        ensure(pq.meet_all(es.iter().copied()) == pq.bottom(), || {
            format!("{name}: ⋀eᵢ ≠ 0")
        })?;
        decompose_by_elements(pq, &es).map_err(|e| CheckError::Refuted(format!("{name}: {e}")))?;
    }
    Ok(())
}

fn product_transfer(m: &CorpusMember) -> Outcome {
    nontrivial(m)?;
    let cases = factorizations(m);
    if cases.is_empty() {
        return Err(CheckError::NotApplicable("no product presentation".into()));
    }
    for (name, factors) in cases {
        let p = product(&factors).map_err(|e| CheckError::Refuted(e.to_string()))?;
        let lp = has_lp(&p.quantale).holds();
        let lp_factors = factors.iter().all(|f| has_lp(f).holds());
        ensure(lp == lp_factors, || {
            format!("{name}: LP of product = {lp}, of all factors = {lp_factors}")
        })?;
        let star = has_property_star(&p.quantale).holds();
        let star_factors = factors.iter().all(|f| has_property_star(f).holds());
        ensure(star == star_factors, || {
            format!("{name}: (*) of product = {star}, of all factors = {star_factors}")
        })?;
    }
    Ok(())
}

fn semilocal_lp_criteria(m: &CorpusMember) -> Outcome {
    let q = nontrivial(m)?;
    if !is_semilocal(q).0.holds() {
        return Err(CheckError::NotApplicable("not semilocal".into()));
    }
    let star = has_property_star(q).holds();
    let lp = has_lp(q).holds();
    let radical_lp = element_has_lp(q, q.jacobson_radical().expect("nontrivial")).holds();
    ensure(star == lp && lp == radical_lp, || {
        format!("(*) = {star}, LP = {lp}, r(A) has LP = {radical_lp}")
    })
}

fn local_product_decomposition(m: &CorpusMember) -> Outcome {
    let q = nontrivial(m)?;
    let semilocal = is_semilocal(q).0.holds();
    let conditions = [
        semilocal && has_property_star(q).holds(),
        semilocal && has_lp(q).holds(),
        semilocal && element_has_lp(q, q.jacobson_radical().expect("nontrivial")).holds(),
        search_local_idempotents(q).holds(),
        is_product_of_locals(q).holds(),
    ];
    ensure(conditions.iter().all(|&c| c == conditions[0]), || {
        format!("conditions (1)–(5) = {conditions:?}")
    })
}

fn decomposition_recipe(m: &CorpusMember) -> Outcome {
    let q = nontrivial(m)?;
    let outcome = local_decomposition(q).map_err(|e| CheckError::Refuted(e.to_string()))?;
    let lp = has_lp(q).holds();
    match outcome {
        DecompositionOutcome::Decomposed(d) => {
            ensure(lp, || "decomposed although A lacks LP".into())?;
            let es = &d.idempotents;
            ensure(es.iter().all(|&e| q.is_complemented(e)), || {
                "an idempotent is not complemented".into()
            })?;
            ensure(q.meet_all(es.iter().copied()) == q.bottom(), || "⋀eᵢ ≠ 0".into())?;
            for (i, &e) in es.iter().enumerate() {
                for &f in &es[i + 1..] {
                    ensure(q.join(e, f) == q.top(), || format!("{}∨{} ≠ 1", q.label(e), q.label(f)))?;
                }
            }
            ensure(d.factors.iter().all(|f| f.maximals().len() == 1), || {
                "a factor is not local".into()
            })?;
            ensure(d.factors.len() == q.maximals().len(), || {
                format!("{} factors for |Max| = {}", d.factors.len(), q.maximals().len())
            })?;
            let p = product(&d.factors).map_err(|e| CheckError::Refuted(e.to_string()))?;
            ensure(find_isomorphism(q, &p.quantale).is_some(), || "A ≇ ∏[eᵢ)".into())
        }
        DecompositionOutcome::RadicalLacksLp { radical, element } => {
            ensure(!lp, || "recipe failed although A has LP".into())?;
            ensure(radical == q.jacobson_radical().expect("nontrivial"), || {
                "witness radical is not r(A)".into()
            })?;
            ensure(unliftable_elements(q, radical).contains(&element), || {
                format!("{} is not an unliftable element of [r(A))", q.label(element))
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suite::corpus::Corpus;

    #[test]
    fn ids_are_unique_and_kebab_case() {
        let mut ids: Vec<&str> = CATALOG.iter().map(|t| t.id).collect();
        assert!(ids
            .iter()
            .all(|id| id.chars().all(|c| c.is_ascii_lowercase() || c == '-')));
        let n = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn known_refutations_on_fixtures() {
        let c = Corpus::fixtures();
        let c3 = c.get("C3").unwrap();
        assert!(matches!(m_primes_are_maximal(c3), Err(CheckError::Refuted(_))));
        let d12 = c.get("D12").unwrap();
        assert!(matches!(star_adjunction_on_carrier(d12), Err(CheckError::Refuted(_))));
        assert_eq!(m_primes_are_maximal(d12), Ok(()));
    }

    #[test]
    fn w5_six_way_agrees_on_false() {
        let c = Corpus::fixtures();
        let w5 = c.get("W5").unwrap();
        assert_eq!(lp_bnormal_equivalence(w5), Ok(()));
        assert!(!has_lp(&w5.quantale).holds());
    }

    #[test]
    fn one_point_is_not_applicable_for_radical_items() {
        let c = Corpus::fixtures();
        let q1 = c.get("Q1").unwrap();
        for check in [lp_bnormal_equivalence, jacobson_radical_is_small, decomposition_recipe] {
            assert!(matches!(check(q1), Err(CheckError::NotApplicable(_))));
        }
    }
}
