//! The reticulation `L(A)` of a finite quantale.
//!
//! `L(A)` is the carrier modulo `c ≡ d ⟺ ρ(c) = ρ(d)`, with `ĉ ∨ d̂ = (c∨d)^`
//! and `ĉ ∧ d̂ = (c·d)^`. Each class is represented by its least-index
//! member; every class-level operation is recomputed through all members so
//! that representative independence is checked rather than assumed.

use std::fmt;

use thiserror::Error;

use crate::lattice::{
    all_ideals, class_label, lattice_boolean_center, maximal_ideals, partition, prime_ideals, quotient_by_ideal,
    DistLattice, FiniteLattice, FinitePoset, LatticeError, LatticeIdeal, LatticeMorphism,
};
use crate::quantale::{interval_quantale, Quantale, QuantaleMorphism, RadicalFrame};

/// The defining axioms of a reticulation and their standard consequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReticulationLaw {
    Surjective,
    /// `λ(a∨b) ≤ λ(a)∨λ(b)`
    JoinBound,
    /// `λ(a·b) = λ(a)∧λ(b)`
    MeetIsProduct,
    /// `λ(a) ≤ λ(b) ⟺ aⁿ ≤ b` for some `n ≥ 1`
    PowerOrder,
    Monotone,
    JoinPreserved,
    /// `λ(a) = 1 ⟺ a = 1`
    TopReflected,
    BottomPreserved,
    /// `λ(a) = 0 ⟺ aᵏ = 0` for some `k`
    NilpotentIsBottom,
    /// `λ(aⁿ) = λ(a)`
    PowerInvariant,
}

impl fmt::Display for ReticulationLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReticulationLaw::Surjective => "surjectivity",
            ReticulationLaw::JoinBound => "join bound",
            ReticulationLaw::MeetIsProduct => "meet is product",
            ReticulationLaw::PowerOrder => "power order",
            ReticulationLaw::Monotone => "monotonicity",
            ReticulationLaw::JoinPreserved => "join preservation",
            ReticulationLaw::TopReflected => "top reflection",
            ReticulationLaw::BottomPreserved => "bottom preservation",
            ReticulationLaw::NilpotentIsBottom => "nilpotents to bottom",
            ReticulationLaw::PowerInvariant => "power invariance",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReticulationError {
    /// The constructed `L(A)` violates a law; indicates a bug.
    #[error("reticulation law `{law}` violated at {witness:?}")]
    AxiomViolation { law: ReticulationLaw, witness: Vec<String> },
    #[error("candidate is not a reticulation: `{law}` fails at {witness:?}")]
    NotAReticulation { law: ReticulationLaw, witness: Vec<String> },
    #[error("not an ideal of the reticulation: {0}")]
    NotAnIdeal(String),
    #[error("morphism is not unital")]
    NotUnital,
    /// A verified construction (star maps, spectra, μ, …) did not check out.
    #[error("{check} fails at {witness:?}")]
    CheckFailed { check: &'static str, witness: Vec<String> },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

fn failed(check: &'static str, witness: Vec<String>) -> ReticulationError {
    ReticulationError::CheckFailed { check, witness }
}

/// Checks axioms (i)–(iii) and surjectivity of `λ: A → L`.
pub fn reticulation_axiom_failure(
    q: &Quantale,
    l: &FiniteLattice,
    lambda: &[usize],
) -> Option<(ReticulationLaw, Vec<String>)> {
    let name = |a: usize| q.label(a).to_string();
    let mut hit = vec![false; l.len()];
    for a in q.elements() {
        hit[lambda[a]] = true;
    }
    if let Some(k) = hit.iter().position(|h| !h) {
        return Some((ReticulationLaw::Surjective, vec![l.label(k).to_string()]));
    }
    for a in q.elements() {
        for b in q.elements() {
            let (la, lb) = (lambda[a], lambda[b]);
            if !l.leq(lambda[q.join(a, b)], l.join(la, lb)) {
                return Some((ReticulationLaw::JoinBound, vec![name(a), name(b)]));
            }
            if lambda[q.mul(a, b)] != l.meet(la, lb) {
                return Some((ReticulationLaw::MeetIsProduct, vec![name(a), name(b)]));
            }
            if l.leq(la, lb) != q.leq(q.stable_power(a), b) {
                return Some((ReticulationLaw::PowerOrder, vec![name(a), name(b)]));
            }
        }
    }
    None
}

/// Checks the consequences of the axioms.
fn consequence_failure(q: &Quantale, l: &FiniteLattice, lambda: &[usize]) -> Option<(ReticulationLaw, Vec<String>)> {
    let name = |a: usize| q.label(a).to_string();
    if lambda[q.bottom()] != l.bottom() {
        return Some((ReticulationLaw::BottomPreserved, vec![name(q.bottom())]));
    }
    for a in q.elements() {
        if (lambda[a] == l.top()) != (a == q.top()) {
            return Some((ReticulationLaw::TopReflected, vec![name(a)]));
        }
        if (lambda[a] == l.bottom()) != (q.stable_power(a) == q.bottom()) {
            return Some((ReticulationLaw::NilpotentIsBottom, vec![name(a)]));
        }
        for n in 1..=q.len() {
            if lambda[q.power(a, n)] != lambda[a] {
                return Some((ReticulationLaw::PowerInvariant, vec![name(a), n.to_string()]));
            }
        }
        for b in q.elements() {
            if q.leq(a, b) && !l.leq(lambda[a], lambda[b]) {
                return Some((ReticulationLaw::Monotone, vec![name(a), name(b)]));
            }
            if lambda[q.join(a, b)] != l.join(lambda[a], lambda[b]) {
                return Some((ReticulationLaw::JoinPreserved, vec![name(a), name(b)]));
            }
        }
    }
    None
}

/// `(L(A), λ)` together with the radical frame it is dual to.
#[derive(Debug, Clone)]
pub struct Reticulation<'a> {
    pub source: &'a Quantale,
    classes: Vec<Vec<usize>>,
    lambda: Vec<usize>,
    lattice: DistLattice,
    radical: RadicalFrame,
}

/// Builds `L(A)` and verifies every reticulation law before returning.
pub fn reticulate(q: &Quantale) -> Result<Reticulation<'_>, ReticulationError> {
    let (classes, lambda) = partition(q.len(), |c, d| q.radical(c) == q.radical(d));
    let labels: Vec<String> = classes.iter().map(|c| class_label(q.labels(), c)).collect();
    let mut pairs = Vec::new();
    for (i, ci) in classes.iter().enumerate() {
        for (j, cj) in classes.iter().enumerate() {
            if q.leq(q.radical(ci[0]), q.radical(cj[0])) {
                pairs.push((i, j));
            }
        }
    }
    let lattice = FiniteLattice::from_poset(FinitePoset::from_relation(labels, &pairs)?)?;
    let violation = |law, a: usize, b: usize| ReticulationError::AxiomViolation {
        law,
        witness: vec![q.label(a).to_string(), q.label(b).to_string()],
    };
    for a in q.elements() {
        for b in q.elements() {
            if lattice.join(lambda[a], lambda[b]) != lambda[q.join(a, b)] {
                return Err(violation(ReticulationLaw::JoinPreserved, a, b));
            }
            if lattice.meet(lambda[a], lambda[b]) != lambda[q.mul(a, b)] {
                return Err(violation(ReticulationLaw::MeetIsProduct, a, b));
            }
        }
    }
    if let Some((law, witness)) =
        reticulation_axiom_failure(q, &lattice, &lambda).or_else(|| consequence_failure(q, &lattice, &lambda))
    {
        return Err(ReticulationError::AxiomViolation { law, witness });
    }
    let lattice = DistLattice::new(lattice)?;
    Ok(Reticulation {
        source: q,
        classes,
        lambda,
        lattice,
        radical: q.radical_frame(),
    })
}

impl<'a> Reticulation<'a> {
    pub fn lattice(&self) -> &DistLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `λ(a)`, as a class index.
    pub fn lambda(&self, a: usize) -> usize {
        self.lambda[a]
    }

    pub fn lambda_map(&self) -> &[usize] {
        &self.lambda
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, k: usize) -> &[usize] {
        &self.classes[k]
    }

    /// The least-index member of class `k`.
    pub fn representative(&self, k: usize) -> usize {
        self.classes[k][0]
    }

    pub fn radical_frame(&self) -> &RadicalFrame {
        &self.radical
    }

    /// The radical frame as a distributive lattice.
    pub fn radical_lattice(&self) -> DistLattice {
        DistLattice::new(self.radical.as_quantale().lattice().clone()).expect("frames are distributive")
    }

    /// Verifies that `(candidate, lambda2)` is a reticulation of the same
    /// quantale and returns the isomorphism `f` with `f∘λ = λ₂`, indexed by
    /// class.
    pub fn check_unicity(&self, candidate: &DistLattice, lambda2: &[usize]) -> Result<Vec<usize>, ReticulationError> {
        let q = self.source;
        if lambda2.len() != q.len() || lambda2.iter().any(|&x| x >= candidate.len()) {
            return Err(ReticulationError::NotAReticulation {
                law: ReticulationLaw::Surjective,
                witness: vec!["map has the wrong shape".into()],
            });
        }
        if let Some((law, witness)) = reticulation_axiom_failure(q, candidate, lambda2) {
            return Err(ReticulationError::NotAReticulation { law, witness });
        }
        let f: Vec<usize> = (0..self.len()).map(|k| lambda2[self.representative(k)]).collect();
        for a in q.elements() {
            if f[self.lambda[a]] != lambda2[a] {
                return Err(failed("f∘λ = λ₂ (well-definedness)", vec![q.label(a).to_string()]));
            }
        }
        let morphism = LatticeMorphism::new(&self.lattice, candidate, f.clone())?;
        if !morphism.is_isomorphism() {
            return Err(failed("unicity map is bijective", vec![]));
        }
        Ok(f)
    }

    /// A copy of `L(A)` whose classes are permuted by `perm` (class `k`
    /// becomes `perm[k]`) and relabelled `ℓ0, ℓ1, …`, with the matching `λ`.
    pub fn relabeled_candidate(&self, perm: &[usize]) -> Result<(DistLattice, Vec<usize>), ReticulationError> {
        let n = self.len();
        let mut inverse = vec![usize::MAX; n];
        for (k, &p) in perm.iter().enumerate() {
            if p >= n || inverse[p] != usize::MAX {
                return Err(failed("relabelling is a permutation", vec![format!("{perm:?}")]));
            }
            inverse[p] = k;
        }
        if perm.len() != n {
            return Err(failed("relabelling is a permutation", vec![format!("{perm:?}")]));
        }
        let labels = (0..n).map(|i| format!("ℓ{i}")).collect();
        let leq = (0..n)
            .map(|i| (0..n).map(|j| self.lattice.leq(inverse[i], inverse[j])).collect())
            .collect();
        let lattice = DistLattice::new(FiniteLattice::from_poset(FinitePoset::new(labels, leq)?)?)?;
        let lambda = self.lambda.iter().map(|&k| perm[k]).collect();
        Ok((lattice, lambda))
    }

    /// `R(A)` with `λ₂ = ρ`, which satisfies the axioms on finite carriers.
    pub fn radical_candidate(&self) -> (DistLattice, Vec<usize>) {
        let q = self.source;
        let lambda = q
            .elements()
            .map(|a| self.radical.from_parent(q.radical(a)).expect("ρ lands in R(A)"))
            .collect();
        (self.radical_lattice(), lambda)
    }

    /// `a* = {λ(c) | c ≤ a}`.
    pub fn star(&self, a: usize) -> Result<LatticeIdeal, ReticulationError> {
        let q = self.source;
        let members = q.elements().filter(|&c| q.leq(c, a)).map(|c| self.lambda[c]);
        LatticeIdeal::from_members(&self.lattice, members).map_err(|e| ReticulationError::NotAnIdeal(e.to_string()))
    }

    /// `I_* = ⋁{c | λ(c) ∈ I}`; `ideal` is revalidated against `L(A)`.
    pub fn unstar(&self, ideal: &LatticeIdeal) -> Result<usize, ReticulationError> {
        let ideal = LatticeIdeal::from_members(&self.lattice, ideal.members().iter().copied())
            .map_err(|e| ReticulationError::NotAnIdeal(e.to_string()))?;
        let q = self.source;
        Ok(q.join_all(q.elements().filter(|&c| ideal.contains(self.lambda[c]))))
    }

    /// Checks the laws relating `()*` and `()_*`: monotonicity,
    /// `(I_*)* = I`, `a ≤ (a*)_* = ρ(a)`, `a* = ρ(a)*`, `ρ(I_*) = I_*` and
    /// the adjunction `I_* ≤ a ⟺ I ⊆ a*` for radical `a`.
    pub fn verify_star_maps(&self) -> Result<(), ReticulationError> {
        let q = self.source;
        let ideals = all_ideals(&self.lattice);
        let stars: Vec<LatticeIdeal> = q.elements().map(|a| self.star(a)).collect::<Result<_, _>>()?;
        let unstars: Vec<usize> = ideals.iter().map(|i| self.unstar(i)).collect::<Result<_, _>>()?;
        let l = self.lattice.lattice();
        for a in q.elements() {
            let back = self.unstar(&stars[a])?;
            if !q.leq(a, back) || back != q.radical(a) {
                return Err(failed("(a*)_* = ρ(a) ≥ a", vec![q.label(a).to_string()]));
            }
            if stars[a] != stars[q.radical(a)] {
                return Err(failed("a* = ρ(a)*", vec![q.label(a).to_string()]));
            }
            for b in q.elements() {
                if q.leq(a, b) && !stars[a].is_subset(&stars[b]) {
                    return Err(failed("()* is monotone", vec![q.label(a).into(), q.label(b).into()]));
                }
            }
        }
        for (i, ideal) in ideals.iter().enumerate() {
            let s = unstars[i];
            if stars[s] != *ideal {
                return Err(failed("(I_*)* = I", vec![ideal.render(l)]));
            }
            if !q.is_radical(s) {
                return Err(failed("I_* is radical", vec![ideal.render(l)]));
            }
            for (j, other) in ideals.iter().enumerate() {
                if ideal.is_subset(other) && !q.leq(s, unstars[j]) {
                    return Err(failed("()_* is monotone", vec![ideal.render(l), other.render(l)]));
                }
            }
            for a in q.elements().filter(|&a| q.is_radical(a)) {
                if q.leq(s, a) != ideal.is_subset(&stars[a]) {
                    return Err(failed("I_* ≤ a ⟺ I ⊆ a*", vec![ideal.render(l), q.label(a).into()]));
                }
            }
        }
        Ok(())
    }

    /// The adjunction `I_* ≤ a ⟺ I ⊆ a*` quantified over the whole carrier
    /// rather than over radical elements. `I ⊆ a*` only gives `I_* ≤ ρ(a)`,
    /// so this fails whenever some `a` is not radical; returns the first
    /// `(ideal, a)` where it does.
    pub fn carrier_adjunction_failure(&self) -> Option<(LatticeIdeal, usize)> {
        let q = self.source;
        for ideal in all_ideals(&self.lattice) {
            let s = self.unstar(&ideal).expect("ideals of L(A)");
            for a in q.elements() {
                let star = self.star(a).expect("a* is an ideal");
                if q.leq(s, a) != ideal.is_subset(&star) {
                    return Some((ideal, a));
                }
            }
        }
        None
    }

    /// `Φ: R(A) → Id(L(A))`, `a ↦ a*`, and its inverse `Ψ: I ↦ I_*`,
    /// verified to be mutually inverse frame isomorphisms.
    pub fn frame_iso(&self) -> Result<FrameIso, ReticulationError> {
        let q = self.source;
        let r = &self.radical;
        let l = self.lattice.lattice();
        let ideals = all_ideals(&self.lattice);
        let index_of = |ideal: &LatticeIdeal| ideals.iter().position(|i| i == ideal);
        let mut phi = Vec::with_capacity(r.len());
        for i in 0..r.len() {
            let star = self.star(r.to_parent(i))?;
            let k = index_of(&star).ok_or_else(|| failed("Φ lands in Id(L(A))", vec![star.render(l)]))?;
            phi.push(k);
        }
        let mut psi = Vec::with_capacity(ideals.len());
        for ideal in &ideals {
            let s = self.unstar(ideal)?;
            let k = r
                .from_parent(s)
                .ok_or_else(|| failed("Ψ lands in R(A)", vec![ideal.render(l)]))?;
            psi.push(k);
        }
        for (i, &k) in phi.iter().enumerate() {
            if psi[k] != i {
                return Err(failed("Ψ∘Φ = id", vec![q.label(r.to_parent(i)).into()]));
            }
        }
        for (k, &i) in psi.iter().enumerate() {
            if phi[i] != k {
                return Err(failed("Φ∘Ψ = id", vec![ideals[k].render(l)]));
            }
        }
        let rq = r.as_quantale();
        for i in 0..r.len() {
            for j in 0..r.len() {
                let (ii, ij) = (&ideals[phi[i]], &ideals[phi[j]]);
                if rq.leq(i, j) != ii.is_subset(ij) {
                    return Err(failed(
                        "Φ is an order isomorphism",
                        vec![rq.label(i).into(), rq.label(j).into()],
                    ));
                }
                let meet: Vec<usize> = ii.members().iter().copied().filter(|&x| ij.contains(x)).collect();
                if ideals[phi[r.meet(i, j)]].members() != meet.as_slice() {
                    return Err(failed(
                        "Φ preserves meets",
                        vec![rq.label(i).into(), rq.label(j).into()],
                    ));
                }
                let join = l.join(ii.generator(l), ij.generator(l));
                if ideals[phi[r.join_dot(i, j)]].generator(l) != join {
                    return Err(failed(
                        "Φ preserves joins",
                        vec![rq.label(i).into(), rq.label(j).into()],
                    ));
                }
            }
        }
        Ok(FrameIso { ideals, phi, psi })
    }

    /// `u: Spec(A) → Spec_Id(L(A))`, `p ↦ p*`, with inverse `v: P ↦ P_*`;
    /// checks the closed-set correspondence `u(V(a)) = V_Id(a*)` and that
    /// `u` restricts to a bijection `Max(A) → Max_Id(L(A))`.
    pub fn spectrum_homeomorphism(&self) -> Result<SpectrumMap, ReticulationError> {
        let q = self.source;
        let l = self.lattice.lattice();
        let primes = prime_ideals(&self.lattice);
        let mut forward = Vec::new();
        for &p in q.m_primes() {
            let star = self.star(p)?;
            let k = primes
                .iter()
                .position(|i| *i == star)
                .ok_or_else(|| failed("p* is a prime ideal", vec![q.label(p).into()]))?;
            if self.unstar(&star)? != p {
                return Err(failed("(p*)_* = p", vec![q.label(p).into()]));
            }
            forward.push(k);
        }
        let mut backward = Vec::new();
        for ideal in &primes {
            let s = self.unstar(ideal)?;
            let k = q
                .m_primes()
                .iter()
                .position(|&p| p == s)
                .ok_or_else(|| failed("P_* is m-prime", vec![ideal.render(l)]))?;
            backward.push(k);
        }
        if forward.len() != primes.len()
            || forward.iter().enumerate().any(|(i, &k)| backward[k] != i)
            || backward.iter().enumerate().any(|(k, &i)| forward[i] != k)
        {
            return Err(failed("u and v are inverse", vec![]));
        }
        for a in q.elements() {
            let star = self.star(a)?;
            let mut image: Vec<usize> = q
                .m_primes()
                .iter()
                .enumerate()
                .filter(|(_, &p)| q.leq(a, p))
                .map(|(i, _)| forward[i])
                .collect();
            image.sort_unstable();
            let closed: Vec<usize> = (0..primes.len()).filter(|&k| star.is_subset(&primes[k])).collect();
            if image != closed {
                return Err(failed("u(V(a)) = V_Id(a*)", vec![q.label(a).into()]));
            }
        }
        let maxima = maximal_ideals(&self.lattice);
        let mut max_images: Vec<LatticeIdeal> = q.maximals().iter().map(|&m| self.star(m)).collect::<Result<_, _>>()?;
        max_images.sort();
        let mut expected = maxima.clone();
        expected.sort();
        if max_images != expected {
            return Err(failed("u restricts to Max(A) ≅ Max_Id(L(A))", vec![]));
        }
        Ok(SpectrumMap {
            spec: q.m_primes().to_vec(),
            primes,
            forward,
            backward,
        })
    }

    /// `μ: L(A) → R(A)`, `λ(c) ↦ ρ(c)`, as frame indices; verified to be a
    /// bijective bounded-lattice morphism with `μ∘λ = ρ`. Surjectivity is a
    /// finite-carrier strengthening.
    pub fn mu(&self) -> Result<Vec<usize>, ReticulationError> {
        let q = self.source;
        let r = &self.radical;
        let map: Vec<usize> = (0..self.len())
            .map(|k| r.from_parent(q.radical(self.representative(k))).expect("ρ is radical"))
            .collect();
        for a in q.elements() {
            if r.to_parent(map[self.lambda[a]]) != q.radical(a) {
                return Err(failed("μ∘λ = ρ", vec![q.label(a).into()]));
            }
        }
        let target = self.radical_lattice();
        let m = LatticeMorphism::new(&self.lattice, &target, map.clone())?;
        if !m.is_injective() {
            return Err(failed("μ is injective", vec![]));
        }
        if !m.is_surjective() {
            return Err(failed("μ is surjective on finite carriers", vec![]));
        }
        Ok(map)
    }

    /// `B(λ)`, `B(ρ)` and `B(μ)`, each verified to be a bijective Boolean
    /// morphism, together with `B(ρ) = B(μ)∘B(λ)`.
    pub fn boolean_isos(&self) -> Result<BooleanTriangle, ReticulationError> {
        let q = self.source;
        let r = &self.radical;
        let rq = r.as_quantale();
        let l = self.lattice.lattice();
        let mu = self.mu()?;
        let center = q.boolean_center().to_vec();
        let l_center = lattice_boolean_center(l);
        let r_center = rq.boolean_center().to_vec();
        let b_lambda: Vec<(usize, usize)> = center.iter().map(|&e| (e, self.lambda[e])).collect();
        let b_rho: Vec<(usize, usize)> = center
            .iter()
            .map(|&e| (e, r.from_parent(q.radical(e)).expect("ρ is radical")))
            .collect();
        let b_mu: Vec<(usize, usize)> = l_center.iter().map(|&k| (k, mu[k])).collect();
        check_boolean_bijection(
            "B(λ)",
            &b_lambda,
            &l_center,
            |a, b| q.join(a, b),
            |a, b| q.meet(a, b),
            |x, y| (l.join(x, y), l.meet(x, y)),
        )?;
        check_boolean_bijection(
            "B(ρ)",
            &b_rho,
            &r_center,
            |a, b| q.join(a, b),
            |a, b| q.meet(a, b),
            |x, y| (r.join_dot(x, y), r.meet(x, y)),
        )?;
        check_boolean_bijection(
            "B(μ)",
            &b_mu,
            &r_center,
            |a, b| l.join(a, b),
            |a, b| l.meet(a, b),
            |x, y| (r.join_dot(x, y), r.meet(x, y)),
        )?;
        for &(e, k) in &b_lambda {
            let via_mu = b_mu.iter().find(|&&(c, _)| c == k).map(|&(_, m)| m);
            let direct = b_rho.iter().find(|&&(x, _)| x == e).map(|&(_, m)| m);
            if via_mu != direct {
                return Err(failed("B(ρ) = B(μ)∘B(λ)", vec![q.label(e).into()]));
            }
        }
        Ok(BooleanTriangle { b_lambda, b_rho, b_mu })
    }
}

/// `pairs` is a bijection onto `target` preserving the binary operations.
fn check_boolean_bijection(
    name: &'static str,
    pairs: &[(usize, usize)],
    target: &[usize],
    join: impl Fn(usize, usize) -> usize,
    meet: impl Fn(usize, usize) -> usize,
    target_ops: impl Fn(usize, usize) -> (usize, usize),
) -> Result<(), ReticulationError> {
    let mut images: Vec<usize> = pairs.iter().map(|&(_, y)| y).collect();
    images.sort_unstable();
    if images != target {
        return Err(failed(name, vec!["not a bijection onto the target center".into()]));
    }
    let image_of = |x: usize| pairs.iter().find(|&&(s, _)| s == x).map(|&(_, y)| y);
    for &(a, fa) in pairs {
        for &(b, fb) in pairs {
            let (j, m) = target_ops(fa, fb);
            if image_of(join(a, b)) != Some(j) || image_of(meet(a, b)) != Some(m) {
                return Err(failed(name, vec![format!("operations on ({a}, {b}) not preserved")]));
            }
        }
    }
    Ok(())
}

/// The isomorphism `R(A) ≅ Id(L(A))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameIso {
    /// `Id(L(A))` in generator order.
    pub ideals: Vec<LatticeIdeal>,
    /// Radical-frame index to ideal index.
    pub phi: Vec<usize>,
    /// Ideal index to radical-frame index.
    pub psi: Vec<usize>,
}

/// The homeomorphism `Spec(A) ≅ Spec_Id(L(A))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumMap {
    pub spec: Vec<usize>,
    pub primes: Vec<LatticeIdeal>,
    /// `forward[i]` indexes `primes` for `spec[i]`.
    pub forward: Vec<usize>,
    /// `backward[k]` indexes `spec` for `primes[k]`.
    pub backward: Vec<usize>,
}

/// The three Boolean isomorphisms, as `(source, image)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanTriangle {
    /// `B(A) → B(L(A))`
    pub b_lambda: Vec<(usize, usize)>,
    /// `B(A) → B(R(A))`, frame indices on the right.
    pub b_rho: Vec<(usize, usize)>,
    /// `B(L(A)) → B(R(A))`
    pub b_mu: Vec<(usize, usize)>,
}

/// `L(u): L(A) → L(B)`, `λ_A(c) ↦ λ_B(u(c))`, verified to be well defined,
/// a bounded-lattice morphism and to make the square commute.
pub fn lift_morphism(
    u: &QuantaleMorphism<'_>,
    ra: &Reticulation<'_>,
    rb: &Reticulation<'_>,
) -> Result<Vec<usize>, ReticulationError> {
    if !u.is_unital() {
        return Err(ReticulationError::NotUnital);
    }
    let (a, b) = (u.source, u.target);
    if ra.source != a || rb.source != b {
        return Err(failed("reticulations match the morphism's ends", vec![]));
    }
    for c in a.elements() {
        for d in a.elements() {
            if a.radical(c) == a.radical(d) && b.radical(u.apply(c)) != b.radical(u.apply(d)) {
                return Err(failed(
                    "ρ_B(u(c)) = ρ_B(u(d))",
                    vec![a.label(c).into(), a.label(d).into()],
                ));
            }
        }
    }
    let map: Vec<usize> = (0..ra.len())
        .map(|k| rb.lambda(u.apply(ra.representative(k))))
        .collect();
    for c in a.elements() {
        if map[ra.lambda(c)] != rb.lambda(u.apply(c)) {
            return Err(failed("λ_B∘u = L(u)∘λ_A", vec![a.label(c).into()]));
        }
    }
    LatticeMorphism::new(ra.lattice(), rb.lattice(), map.clone())?;
    Ok(map)
}

/// `L([a)) ≅ L(A)/a*`.
#[derive(Debug, Clone)]
pub struct IntervalReticulationIso {
    pub anchor: usize,
    /// `a*`, which equals `Ker(L(uₐ))`.
    pub kernel: LatticeIdeal,
    pub quotient: DistLattice,
    pub interval_lattice: DistLattice,
    /// Quotient class to `L([a))` class.
    pub map: Vec<usize>,
}

pub fn interval_reticulation_iso(q: &Quantale, a: usize) -> Result<IntervalReticulationIso, ReticulationError> {
    let ra = reticulate(q)?;
    let iv = interval_quantale(q, a);
    let ri = reticulate(&iv.quantale)?;
    let ua = iv.projection();
    let lu = lift_morphism(&ua, &ra, &ri)?;
    let kernel_members: Vec<usize> = (0..ra.len()).filter(|&k| lu[k] == ri.lattice().bottom()).collect();
    let kernel = ra.star(a)?;
    if kernel.members() != kernel_members.as_slice() {
        return Err(failed("Ker(L(uₐ)) = a*", vec![q.label(a).into()]));
    }
    let quotient = quotient_by_ideal(ra.lattice(), &kernel)?;
    let n = quotient.lattice.len();
    let mut map = vec![usize::MAX; n];
    for (k, &image) in lu.iter().enumerate() {
        let class = quotient.class_of(k);
        if map[class] == usize::MAX {
            map[class] = image;
        } else if map[class] != image {
            return Err(failed(
                "L(A)/a* → L([a)) is well defined",
                vec![ra.lattice().label(k).into()],
            ));
        }
    }
    let iso = LatticeMorphism::new(&quotient.lattice, ri.lattice(), map.clone())?;
    if !iso.is_isomorphism() {
        return Err(failed("L(A)/a* ≅ L([a))", vec![q.label(a).into()]));
    }
    Ok(IntervalReticulationIso {
        anchor: a,
        kernel,
        quotient: quotient.lattice.clone(),
        interval_lattice: ri.lattice().clone(),
        map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantale::fixtures::*;
    use crate::quantale::product;

    #[test]
    fn d12_reticulation_is_boolean_square() {
        let d = divisors(12);
        let r = reticulate(&d).unwrap();
        assert_eq!(r.len(), 4);
        let sets: Vec<Vec<&str>> = r
            .classes()
            .iter()
            .map(|c| c.iter().map(|&x| d.label(x)).collect())
            .collect();
        assert!(sets.contains(&vec!["2", "4"]));
        assert!(sets.contains(&vec!["6", "12"]));
        assert!(sets.contains(&vec!["1"]));
        assert!(sets.contains(&vec!["3"]));
        assert_eq!(lattice_boolean_center(r.lattice()).len(), 4);
    }

    #[test]
    fn frame_reticulation_is_the_frame() {
        let c3 = chain_frame(3);
        let r = reticulate(&c3).unwrap();
        assert_eq!(r.len(), 3);
        assert!(r.lattice().is_chain());
        assert!(r.classes().iter().all(|c| c.len() == 1));
    }

    #[test]
    fn one_point_reticulation() {
        let q = chain_frame(1);
        let r = reticulate(&q).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r.frame_iso().is_ok());
        assert!(r.spectrum_homeomorphism().unwrap().spec.is_empty());
        assert_eq!(r.boolean_isos().unwrap().b_lambda.len(), 1);
    }

    #[test]
    fn star_examples() {
        let d = divisors(12);
        let r = reticulate(&d).unwrap();
        assert_eq!(r.star(d.bottom()).unwrap().members(), &[r.lambda(d.bottom())]);
        assert_eq!(r.star(d.el("6")).unwrap().len(), 1);
        let two = r.star(d.el("2")).unwrap();
        assert_eq!(r.unstar(&two).unwrap(), d.el("2"));
        r.verify_star_maps().unwrap();
    }

    #[test]
    fn carrier_adjunction_breaks_at_a_non_radical_element() {
        let d = divisors(12);
        let r = reticulate(&d).unwrap();
        let (ideal, a) = r.carrier_adjunction_failure().unwrap();
        assert!(!d.is_radical(a));
        assert!(ideal.is_subset(&r.star(a).unwrap()));
        assert!(!d.leq(r.unstar(&ideal).unwrap(), a));
        assert!(reticulate(&chain_frame(3))
            .unwrap()
            .carrier_adjunction_failure()
            .is_none());
    }

    #[test]
    fn unstar_rejects_non_ideals() {
        let d = divisors(12);
        let r = reticulate(&d).unwrap();
        let top_only = LatticeIdeal::principal(r.lattice(), r.lattice().top());
        assert_eq!(r.unstar(&top_only).unwrap(), d.top());
    }

    #[test]
    fn unicity_against_relabelling_and_radical_frame() {
        let d = divisors(12);
        let r = reticulate(&d).unwrap();
        let id = r.check_unicity(r.lattice(), r.lambda_map()).unwrap();
        assert_eq!(id, vec![0, 1, 2, 3]);
        let (l2, lam2) = r.relabeled_candidate(&[3, 2, 1, 0]).unwrap();
        let f = r.check_unicity(&l2, &lam2).unwrap();
        assert_eq!(f, vec![3, 2, 1, 0]);
        let (l3, lam3) = r.radical_candidate();
        assert!(r.check_unicity(&l3, &lam3).is_ok());
    }

    #[test]
    fn unicity_rejects_a_non_reticulation() {
        let d = divisors(12);
        let r = reticulate(&d).unwrap();
        // λ₂ = identity onto the 6-element divisor order is not a reticulation
        let l = DistLattice::new(d.lattice().clone()).unwrap();
        let lam: Vec<usize> = d.elements().collect();
        assert!(matches!(
            r.check_unicity(&l, &lam),
            Err(ReticulationError::NotAReticulation { .. })
        ));
    }

    #[test]
    fn dualities_on_fixtures() {
        for q in [divisors(12), chain_frame(3), b4(), w5(), divisors(8)] {
            let r = reticulate(&q).unwrap();
            let fi = r.frame_iso().unwrap();
            assert_eq!(fi.phi.len(), q.radical_frame().len());
            let sm = r.spectrum_homeomorphism().unwrap();
            assert_eq!(sm.spec.len(), sm.primes.len());
            r.mu().unwrap();
            r.boolean_isos().unwrap();
        }
    }

    #[test]
    fn mu_on_d12() {
        let d = divisors(12);
        let r = reticulate(&d).unwrap();
        let mu = r.mu().unwrap();
        let rf = r.radical_frame();
        assert_eq!(rf.to_parent(mu[r.lambda(d.el("4"))]), d.el("2"));
        assert_eq!(rf.to_parent(mu[r.lambda(d.el("12"))]), d.el("6"));
    }

    #[test]
    fn lifting_interval_projection() {
        let d = divisors(12);
        let ra = reticulate(&d).unwrap();
        let iv = interval_quantale(&d, d.el("3"));
        let ri = reticulate(&iv.quantale).unwrap();
        let lu = lift_morphism(&iv.projection(), &ra, &ri).unwrap();
        assert_eq!(ri.len(), 2);
        assert!(lu.contains(&0) && lu.contains(&1));
        let id = QuantaleMorphism::identity(&d);
        assert_eq!(lift_morphism(&id, &ra, &ra).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn lifting_product_projection() {
        let c2 = chain_frame(2);
        let p = product(&[c2.clone(), c2]).unwrap();
        let rp = reticulate(&p.quantale).unwrap();
        let pi = p.projection(0);
        let rf = reticulate(&p.factors[0]).unwrap();
        let lu = lift_morphism(&pi, &rp, &rf).unwrap();
        assert_eq!(lu.len(), 4);
    }

    #[test]
    fn interval_reticulations() {
        let d = divisors(12);
        let iso = interval_reticulation_iso(&d, d.el("4")).unwrap();
        assert_eq!(iso.interval_lattice.len(), 2);
        let at0 = interval_reticulation_iso(&d, d.bottom()).unwrap();
        assert_eq!(at0.quotient.len(), 4);
        let w = w5();
        let iso = interval_reticulation_iso(&w, w.el("{z}")).unwrap();
        assert_eq!(iso.interval_lattice.len(), 4);
    }

    #[test]
    fn boolean_triangle_sizes() {
        let d = divisors(12);
        let t = reticulate(&d).unwrap().boolean_isos().unwrap();
        assert_eq!(t.b_lambda.len(), 4);
        let c3 = chain_frame(3);
        let t = reticulate(&c3).unwrap().boolean_isos().unwrap();
        assert_eq!(t.b_mu.len(), 2);
    }
}
