//! Finite posets, bounded (distributive) lattices, their ideals, quotients
//! and Boolean centers.
//!
//! Elements are addressed by index into the carrier; labels are opaque and
//! only used for reporting.

use std::fmt;
use std::ops::Deref;

use thiserror::Error;

use crate::verdict::Verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PosetLaw {
    Reflexivity,
    Antisymmetry,
    Transitivity,
}

impl fmt::Display for PosetLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PosetLaw::Reflexivity => "reflexivity",
            PosetLaw::Antisymmetry => "antisymmetry",
            PosetLaw::Transitivity => "transitivity",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Join,
    Meet,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bound::Join => "least upper bound",
            Bound::Meet => "greatest lower bound",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("the carrier is empty")]
    EmptyCarrier,
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("order matrix is not square over {0} elements")]
    ShapeMismatch(usize),
    #[error("element index {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("not a partial order: {law} fails at {witness:?}")]
    NotAPoset { law: PosetLaw, witness: Vec<String> },
    #[error("not a lattice: `{x}` and `{y}` have no {bound}")]
    NotALattice { x: String, y: String, bound: Bound },
    #[error("not distributive: {x} ∧ ({y} ∨ {z}) ≠ ({x} ∧ {y}) ∨ ({x} ∧ {z})")]
    NotDistributive { x: String, y: String, z: String },
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("not a lattice morphism: {0}")]
    NotAMorphism(String),
}

/// A finite partial order stored as a dense `n × n` boolean matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    leq: Vec<bool>,
}

impl FinitePoset {
    /// Takes the order matrix literally: `leq[a][b]` means `a ≤ b`.
    pub fn new(labels: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self, LatticeError> {
        let n = labels.len();
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(LatticeError::ShapeMismatch(n));
        }
        let poset = FinitePoset {
            labels,
            leq: leq.into_iter().flatten().collect(),
        };
        poset.validate()?;
        Ok(poset)
    }

    /// Builds the reflexive-transitive closure of `pairs` and checks that it
    /// is antisymmetric.
    pub fn from_relation(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self, LatticeError> {
        let n = labels.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(LatticeError::IndexOutOfRange(a.max(b)));
            }
            leq[a * n + b] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        let poset = FinitePoset { labels, leq };
        poset.validate()?;
        Ok(poset)
    }

    fn validate(&self) -> Result<(), LatticeError> {
        let n = self.len();
        for (i, l) in self.labels.iter().enumerate() {
            if self.labels[..i].contains(l) {
                return Err(LatticeError::DuplicateLabel(l.clone()));
            }
        }
        let fail = |law, w: &[usize]| LatticeError::NotAPoset {
            law,
            witness: w.iter().map(|&i| self.labels[i].clone()).collect(),
        };
        for a in 0..n {
            if !self.leq(a, a) {
                return Err(fail(PosetLaw::Reflexivity, &[a, a]));
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if self.leq(a, b) && self.leq(b, a) {
                    return Err(fail(PosetLaw::Antisymmetry, &[a, b]));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !self.leq(a, b) {
                    continue;
                }
                for c in 0..n {
                    if self.leq(b, c) && !self.leq(a, c) {
                        return Err(fail(PosetLaw::Transitivity, &[a, b, c]));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// A finite bounded lattice with precomputed join and meet tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinitePoset,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

/// Builds a lattice from labels and `(below, above)` pairs given by label.
/// The reflexive-transitive closure of the pairs is used as the order.
pub fn build_lattice<S: AsRef<str>>(labels: &[S], pairs: &[(&str, &str)]) -> Result<FiniteLattice, LatticeError> {
    let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
    let find = |l: &str| {
        labels
            .iter()
            .position(|x| x == l)
            .ok_or_else(|| LatticeError::UnknownLabel(l.to_string()))
    };
    let idx = pairs
        .iter()
        .map(|&(a, b)| Ok((find(a)?, find(b)?)))
        .collect::<Result<Vec<_>, LatticeError>>()?;
    FiniteLattice::from_poset(FinitePoset::from_relation(labels, &idx)?)
}

impl FiniteLattice {
    pub fn from_poset(poset: FinitePoset) -> Result<Self, LatticeError> {
        let n = poset.len();
        if n == 0 {
            return Err(LatticeError::EmptyCarrier);
        }
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let j = Self::extremal_bound(&poset, a, b, Bound::Join)?;
                let m = Self::extremal_bound(&poset, a, b, Bound::Meet)?;
                join[a * n + b] = j;
                join[b * n + a] = j;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
            }
        }
        let bottom = (0..n).fold(0, |acc, x| meet[acc * n + x]);
        let top = (0..n).fold(0, |acc, x| join[acc * n + x]);
        Ok(FiniteLattice {
            poset,
            join,
            meet,
            bottom,
            top,
        })
    }

    fn extremal_bound(poset: &FinitePoset, a: usize, b: usize, kind: Bound) -> Result<usize, LatticeError> {
        let n = poset.len();
        type Test<'a> = Box<dyn Fn(usize) -> bool + 'a>;
        type Order<'a> = Box<dyn Fn(usize, usize) -> bool + 'a>;
        let (is_bound, better): (Test<'_>, Order<'_>) = match kind {
            Bound::Join => (
                Box::new(|x| poset.leq(a, x) && poset.leq(b, x)),
                Box::new(|x, y| poset.leq(x, y)),
            ),
            Bound::Meet => (
                Box::new(|x| poset.leq(x, a) && poset.leq(x, b)),
                Box::new(|x, y| poset.leq(y, x)),
            ),
        };
        let bounds: Vec<usize> = (0..n).filter(|&x| is_bound(x)).collect();
        bounds
            .iter()
            .copied()
            .find(|&x| bounds.iter().all(|&y| better(x, y)))
            .ok_or_else(|| LatticeError::NotALattice {
                x: poset.label(a).to_string(),
                y: poset.label(b).to_string(),
                bound: kind,
            })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn label(&self, a: usize) -> &str {
        self.poset.label(a)
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.poset.index_of(label)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Join of a finite family; the empty join is the bottom.
    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of a finite family; the empty meet is the top.
    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn is_chain(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    /// Returns a failing triple `(x, y, z)` when `x∧(y∨z) ≠ (x∧y)∨(x∧z)`.
    pub fn distributivity_witness(&self) -> Option<[usize; 3]> {
        for x in self.elements() {
            for y in self.elements() {
                for z in self.elements() {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z)) {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> Verdict<[usize; 3]> {
        Verdict::from_witness(self.distributivity_witness())
    }

    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        self.poset.covers()
    }

    pub fn up_set(&self, a: usize) -> Vec<usize> {
        self.elements().filter(|&x| self.leq(a, x)).collect()
    }

    pub fn down_set(&self, a: usize) -> Vec<usize> {
        self.elements().filter(|&x| self.leq(x, a)).collect()
    }

    /// Maximal elements of the carrier minus the top.
    pub fn coatoms(&self) -> Vec<usize> {
        let top = self.top;
        self.elements()
            .filter(|&m| m != top && self.elements().all(|x| x == top || !self.poset.lt(m, x)))
            .collect()
    }
}

/// A bounded lattice that has been checked to be distributive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistLattice(FiniteLattice);

impl DistLattice {
    pub fn new(lattice: FiniteLattice) -> Result<Self, LatticeError> {
        match lattice.distributivity_witness() {
            None => Ok(DistLattice(lattice)),
            Some([x, y, z]) => Err(LatticeError::NotDistributive {
                x: lattice.label(x).to_string(),
                y: lattice.label(y).to_string(),
                z: lattice.label(z).to_string(),
            }),
        }
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.0
    }

    pub fn into_inner(self) -> FiniteLattice {
        self.0
    }
}

impl Deref for DistLattice {
    type Target = FiniteLattice;

    fn deref(&self) -> &FiniteLattice {
        &self.0
    }
}

/// A lattice ideal, stored as its sorted member indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeIdeal {
    members: Vec<usize>,
}

impl LatticeIdeal {
    /// Validates that `members` is a nonempty down-set closed under joins.
    pub fn from_members(l: &FiniteLattice, members: impl IntoIterator<Item = usize>) -> Result<Self, LatticeError> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&x| x >= l.len()) {
            return Err(LatticeError::IndexOutOfRange(bad));
        }
        let ideal = LatticeIdeal { members };
        if !ideal.contains(l.bottom()) {
            return Err(LatticeError::NotAnIdeal("does not contain the bottom".into()));
        }
        for &a in &ideal.members {
            for x in l.elements() {
                if l.leq(x, a) && !ideal.contains(x) {
                    return Err(LatticeError::NotAnIdeal(format!(
                        "not downward closed: {} ≤ {}",
                        l.label(x),
                        l.label(a)
                    )));
                }
            }
            for &b in &ideal.members {
                if !ideal.contains(l.join(a, b)) {
                    return Err(LatticeError::NotAnIdeal(format!(
                        "not closed under join: {} ∨ {}",
                        l.label(a),
                        l.label(b)
                    )));
                }
            }
        }
        Ok(ideal)
    }

    /// The principal ideal `↓a`.
    pub fn principal(l: &FiniteLattice, a: usize) -> Self {
        LatticeIdeal { members: l.down_set(a) }
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

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn is_subset(&self, other: &LatticeIdeal) -> bool {
        self.members.iter().all(|&a| other.contains(a))
    }

    /// Largest member; finite ideals are principal.
    pub fn generator(&self, l: &FiniteLattice) -> usize {
        l.join_all(self.members.iter().copied())
    }

    pub fn is_proper(&self, l: &FiniteLattice) -> bool {
        !self.contains(l.top())
    }

    pub fn render(&self, l: &FiniteLattice) -> String {
        render_set(l.labels(), &self.members)
    }
}

pub(crate) fn render_set(labels: &[String], members: &[usize]) -> String {
    let inner: Vec<&str> = members.iter().map(|&i| labels[i].as_str()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Label for a congruence class: the member label for singletons, the
/// member set otherwise.
pub(crate) fn class_label(labels: &[String], members: &[usize]) -> String {
    match members {
        [single] => labels[*single].clone(),
        _ => render_set(labels, members),
    }
}

/// Every ideal of `l`, ordered by generator index.
pub fn all_ideals(l: &DistLattice) -> Vec<LatticeIdeal> {
    l.elements().map(|a| LatticeIdeal::principal(l, a)).collect()
}

/// Proper ideals `P` with `x∧y ∈ P ⟹ x ∈ P or y ∈ P`.
pub fn prime_ideals(l: &DistLattice) -> Vec<LatticeIdeal> {
    all_ideals(l)
        .into_iter()
        .filter(|p| {
            p.is_proper(l)
                && l.elements().all(|x| {
                    l.elements()
                        .all(|y| !p.contains(l.meet(x, y)) || p.contains(x) || p.contains(y))
                })
        })
        .collect()
}

/// Maximal proper ideals.
pub fn maximal_ideals(l: &DistLattice) -> Vec<LatticeIdeal> {
    let proper: Vec<LatticeIdeal> = all_ideals(l).into_iter().filter(|i| i.is_proper(l)).collect();
    proper
        .iter()
        .filter(|i| !proper.iter().any(|j| j != *i && i.is_subset(j)))
        .cloned()
        .collect()
}

/// `L` is Id-local when it has exactly one maximal ideal.
pub fn is_id_local(l: &DistLattice) -> bool {
    maximal_ideals(l).len() == 1
}

/// A structure-preserving map between two distributive lattices.
#[derive(Debug, Clone)]
pub struct LatticeMorphism<'a> {
    pub source: &'a DistLattice,
    pub target: &'a DistLattice,
    map: Vec<usize>,
}

impl<'a> LatticeMorphism<'a> {
    /// Checks preservation of `∨`, `∧`, `0` and `1`.
    pub fn new(source: &'a DistLattice, target: &'a DistLattice, map: Vec<usize>) -> Result<Self, LatticeError> {
        if map.len() != source.len() {
            return Err(LatticeError::NotAMorphism("map length differs from source size".into()));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.len()) {
            return Err(LatticeError::IndexOutOfRange(bad));
        }
        let f = |x: usize| map[x];
        if f(source.bottom()) != target.bottom() {
            return Err(LatticeError::NotAMorphism("bottom not preserved".into()));
        }
        if f(source.top()) != target.top() {
            return Err(LatticeError::NotAMorphism("top not preserved".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if f(source.join(a, b)) != target.join(f(a), f(b)) {
                    return Err(LatticeError::NotAMorphism(format!(
                        "join of {} and {} not preserved",
                        source.label(a),
                        source.label(b)
                    )));
                }
                if f(source.meet(a, b)) != target.meet(f(a), f(b)) {
                    return Err(LatticeError::NotAMorphism(format!(
                        "meet of {} and {} not preserved",
                        source.label(a),
                        source.label(b)
                    )));
                }
            }
        }
        Ok(LatticeMorphism { source, target, map })
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
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

    /// Elements sent to the bottom.
    pub fn kernel(&self) -> Vec<usize> {
        self.source
            .elements()
            .filter(|&a| self.map[a] == self.target.bottom())
            .collect()
    }

    /// The restriction `B(f)` to Boolean centers, as `(x, f(x))` pairs.
    /// Fails if some complemented element maps outside the target center.
    pub fn boolean_restriction(&self) -> Result<Vec<(usize, usize)>, LatticeError> {
        let target_center = lattice_boolean_center(self.target);
        lattice_boolean_center(self.source)
            .into_iter()
            .map(|e| {
                let img = self.map[e];
                if target_center.contains(&img) {
                    Ok((e, img))
                } else {
                    Err(LatticeError::NotAMorphism(format!(
                        "complemented {} maps to uncomplemented {}",
                        self.source.label(e),
                        self.target.label(img)
                    )))
                }
            })
            .collect()
    }
}

/// `L/I` together with the canonical surjection `p_I`.
#[derive(Debug, Clone)]
pub struct Quotient<'a> {
    pub source: &'a DistLattice,
    pub ideal: LatticeIdeal,
    pub lattice: DistLattice,
    /// `map[x]` is the class of `x`.
    map: Vec<usize>,
}

impl<'a> Quotient<'a> {
    pub fn projection(&self) -> LatticeMorphism<'_> {
        LatticeMorphism {
            source: self.source,
            target: &self.lattice,
            map: self.map.clone(),
        }
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.map[x]
    }
}

/// Quotient by the congruence `a ≡ b ⟺ a∨e = b∨e` for some `e ∈ I`.
pub fn quotient_by_ideal<'a>(l: &'a DistLattice, ideal: &LatticeIdeal) -> Result<Quotient<'a>, LatticeError> {
    let ideal = LatticeIdeal::from_members(l, ideal.members().iter().copied())?;
    let congruent = |a: usize, b: usize| ideal.members().iter().any(|&e| l.join(a, e) == l.join(b, e));
    let (classes, map) = partition(l.len(), congruent);
    let labels: Vec<String> = classes.iter().map(|c| class_label(l.labels(), c)).collect();
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let mut pairs = Vec::new();
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            if map[l.join(a, b)] == j {
                pairs.push((i, j));
            }
        }
    }
    let lattice = FiniteLattice::from_poset(FinitePoset::from_relation(labels, &pairs)?)?;
    for a in l.elements() {
        for b in l.elements() {
            if lattice.join(map[a], map[b]) != map[l.join(a, b)] || lattice.meet(map[a], map[b]) != map[l.meet(a, b)] {
                return Err(LatticeError::NotAMorphism(format!(
                    "congruence not compatible at ({}, {})",
                    l.label(a),
                    l.label(b)
                )));
            }
        }
    }
    let lattice = DistLattice::new(lattice)?;
    Ok(Quotient {
        source: l,
        ideal,
        lattice,
        map,
    })
}

/// Partitions `0..n` by an equivalence relation. Classes are ordered by
/// their minimum member, which is also the first entry of each class.
pub(crate) fn partition(n: usize, equiv: impl Fn(usize, usize) -> bool) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut map = vec![0; n];
    for (x, slot) in map.iter_mut().enumerate() {
        match classes.iter().position(|c| equiv(c[0], x)) {
            Some(k) => {
                classes[k].push(x);
                *slot = k;
            }
            None => {
                *slot = classes.len();
                classes.push(vec![x]);
            }
        }
    }
    (classes, map)
}

/// Complements of `x`, i.e. `y` with `x∨y = 1` and `x∧y = 0`.
pub fn lattice_complements(l: &FiniteLattice, x: usize) -> Vec<usize> {
    l.elements()
        .filter(|&y| l.join(x, y) == l.top() && l.meet(x, y) == l.bottom())
        .collect()
}

/// The complemented elements `B(L)`.
pub fn lattice_boolean_center(l: &FiniteLattice) -> Vec<usize> {
    l.elements()
        .filter(|&x| !lattice_complements(l, x).is_empty())
        .collect()
}

/// The failure of Id-BLP: an ideal and a complemented class of the quotient
/// that is not the image of a complemented element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdBlpWitness {
    pub ideal: LatticeIdeal,
    /// A representative in `L` of the unliftable class.
    pub element: usize,
}

/// Whether `B(p_I)` is surjective for every ideal `I`.
pub fn has_id_blp(l: &DistLattice) -> Verdict<IdBlpWitness> {
    for ideal in all_ideals(l) {
        let q = quotient_by_ideal(l, &ideal).expect("principal ideals are ideals");
        let lifted: Vec<usize> = lattice_boolean_center(l).into_iter().map(|e| q.class_of(e)).collect();
        if let Some(class) = lattice_boolean_center(&q.lattice)
            .into_iter()
            .find(|c| !lifted.contains(c))
        {
            let element = l.elements().find(|&x| q.class_of(x) == class).expect("p_I is onto");
            return Verdict::Fails(IdBlpWitness { ideal, element });
        }
    }
    Verdict::Holds
}

/// Covers `a∨b = 1` that admit no separating pair drawn from `pool`.
fn separation_witness(l: &FiniteLattice, pool: &[usize]) -> Option<(usize, usize)> {
    let top = l.top();
    for a in l.elements() {
        for b in l.elements() {
            if l.join(a, b) != top {
                continue;
            }
            let separated = pool.iter().any(|&c| {
                l.join(a, c) == top && pool.iter().any(|&d| l.join(b, d) == top && l.meet(c, d) == l.bottom())
            });
            if !separated {
                return Some((a, b));
            }
        }
    }
    None
}

/// Every cover `a∨b = 1` has `c, d` with `a∨c = b∨d = 1` and `c∧d = 0`.
pub fn lattice_is_normal(l: &DistLattice) -> Verdict<(usize, usize)> {
    let all: Vec<usize> = l.elements().collect();
    Verdict::from_witness(separation_witness(l, &all))
}

/// As [`lattice_is_normal`] with the separators drawn from `B(L)`.
pub fn lattice_is_b_normal(l: &DistLattice) -> Verdict<(usize, usize)> {
    Verdict::from_witness(separation_witness(l, &lattice_boolean_center(l)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> DistLattice {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let pairs: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        DistLattice::new(FiniteLattice::from_poset(FinitePoset::from_relation(labels, &pairs).unwrap()).unwrap())
            .unwrap()
    }

    fn b4() -> DistLattice {
        DistLattice::new(
            build_lattice(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]).unwrap(),
        )
        .unwrap()
    }

    fn w5() -> DistLattice {
        let l = build_lattice(
            &["{}", "{z}", "{z,x}", "{z,y}", "{z,x,y}"],
            &[
                ("{}", "{z}"),
                ("{z}", "{z,x}"),
                ("{z}", "{z,y}"),
                ("{z,x}", "{z,x,y}"),
                ("{z,y}", "{z,x,y}"),
            ],
        )
        .unwrap();
        DistLattice::new(l).unwrap()
    }

    fn m3() -> FiniteLattice {
        build_lattice(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        )
        .unwrap()
    }

    fn members(l: &FiniteLattice, labels: &[&str]) -> Vec<usize> {
        let mut v: Vec<usize> = labels.iter().map(|s| l.index_of(s).unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn one_point_lattice_has_bottom_equal_top() {
        let l = build_lattice(&["*"], &[]).unwrap();
        assert_eq!(l.bottom(), l.top());
    }

    #[test]
    fn b4_tables_are_least_and_greatest_bounds() {
        let l = b4();
        let (a, b) = (l.index_of("a").unwrap(), l.index_of("b").unwrap());
        assert_eq!(l.label(l.join(a, b)), "1");
        assert_eq!(l.label(l.meet(a, b)), "0");
        assert_eq!(l.label(l.bottom()), "0");
        assert_eq!(l.label(l.top()), "1");
    }

    #[test]
    fn rejects_cycles_and_missing_bounds() {
        let err = build_lattice(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(
            err,
            LatticeError::NotAPoset {
                law: PosetLaw::Antisymmetry,
                ..
            }
        ));
        // two incomparable points: no least upper bound
        let err = build_lattice(&["a", "b"], &[]).unwrap_err();
        assert!(matches!(err, LatticeError::NotALattice { .. }));
        let err = build_lattice(&["a", "a"], &[]).unwrap_err();
        assert_eq!(err, LatticeError::DuplicateLabel("a".into()));
    }

    #[test]
    fn literal_matrix_checks_every_poset_law() {
        let labels = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        let not_reflexive = vec![
            vec![false, true, true],
            vec![false, true, true],
            vec![false, false, true],
        ];
        let err = FinitePoset::new(labels.clone(), not_reflexive).unwrap_err();
        assert!(matches!(
            err,
            LatticeError::NotAPoset {
                law: PosetLaw::Reflexivity,
                ..
            }
        ));
        let not_transitive = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        let err = FinitePoset::new(labels, not_transitive).unwrap_err();
        assert_eq!(
            err,
            LatticeError::NotAPoset {
                law: PosetLaw::Transitivity,
                witness: vec!["a".into(), "b".into(), "c".into()]
            }
        );
    }

    #[test]
    fn distributivity_decisions() {
        assert!(b4().is_distributive().holds());
        assert!(chain(5).is_distributive().holds());
        let m3 = m3();
        let [x, y, z] = *m3.is_distributive().witness().unwrap();
        assert_ne!(m3.meet(x, m3.join(y, z)), m3.join(m3.meet(x, y), m3.meet(x, z)));
        assert!(DistLattice::new(m3).is_err());
    }

    #[test]
    fn ideals_of_small_lattices() {
        let c2 = chain(2);
        assert_eq!(all_ideals(&c2).len(), 2);
        let c3 = chain(3);
        let ideals: Vec<Vec<usize>> = all_ideals(&c3).iter().map(|i| i.members().to_vec()).collect();
        assert_eq!(ideals, vec![vec![0], vec![0, 1], vec![0, 1, 2]]);
        let b = b4();
        let ideals: Vec<Vec<usize>> = all_ideals(&b).iter().map(|i| i.members().to_vec()).collect();
        assert_eq!(ideals.len(), 4);
        assert!(!ideals.contains(&members(&b, &["0", "a", "b"])));
        assert!(LatticeIdeal::from_members(&b, members(&b, &["0", "a", "b"])).is_err());
    }

    #[test]
    fn prime_and_maximal_ideals() {
        let c2 = chain(2);
        let primes = prime_ideals(&c2);
        assert_eq!(primes.len(), 1);
        assert_eq!(primes[0].members(), &[0]);
        let b = b4();
        let primes: Vec<Vec<usize>> = prime_ideals(&b).iter().map(|p| p.members().to_vec()).collect();
        assert_eq!(primes, vec![members(&b, &["0", "a"]), members(&b, &["0", "b"])]);
        let c3 = chain(3);
        let primes: Vec<Vec<usize>> = prime_ideals(&c3).iter().map(|p| p.members().to_vec()).collect();
        assert_eq!(primes, vec![vec![0], vec![0, 1]]);
        assert_eq!(maximal_ideals(&c3).len(), 1);
        assert!(is_id_local(&c3));
        assert!(!is_id_local(&b));
    }

    #[test]
    fn quotients() {
        let b = b4();
        let trivial = quotient_by_ideal(&b, &LatticeIdeal::principal(&b, b.bottom())).unwrap();
        assert_eq!(trivial.lattice.len(), 4);
        assert!(trivial.projection().is_isomorphism());

        let a = b.index_of("a").unwrap();
        let q = quotient_by_ideal(&b, &LatticeIdeal::principal(&b, a)).unwrap();
        assert_eq!(q.lattice.len(), 2);
        assert!(q.lattice.is_chain());
        assert_eq!(q.class_of(a), q.lattice.bottom());
        assert_eq!(q.class_of(b.index_of("b").unwrap()), q.lattice.top());

        let whole = quotient_by_ideal(&b, &LatticeIdeal::principal(&b, b.top())).unwrap();
        assert_eq!(whole.lattice.len(), 1);

        let bogus = LatticeIdeal { members: vec![a] };
        assert!(matches!(
            quotient_by_ideal(&b, &bogus),
            Err(LatticeError::NotAnIdeal(_))
        ));
    }

    #[test]
    fn boolean_centers() {
        assert_eq!(lattice_boolean_center(&b4()).len(), 4);
        assert_eq!(lattice_boolean_center(&chain(3)), vec![0, 2]);
        assert_eq!(lattice_boolean_center(&chain(1)), vec![0]);
    }

    #[test]
    fn id_blp_decisions() {
        assert!(has_id_blp(&chain(4)).holds());
        assert!(has_id_blp(&b4()).holds());
        let w = w5();
        let witness = has_id_blp(&w).witness().cloned().unwrap();
        assert_eq!(witness.ideal.members(), &members(&w, &["{}", "{z}"])[..]);
        assert_eq!(w.label(witness.element), "{z,x}");
    }

    #[test]
    fn normality_decisions() {
        let b = b4();
        assert!(lattice_is_normal(&b).holds());
        assert!(lattice_is_b_normal(&b).holds());
        let w = w5();
        let (a, bb) = *lattice_is_normal(&w).witness().unwrap();
        assert_eq!((w.label(a), w.label(bb)), ("{z,x}", "{z,y}"));
        assert!(lattice_is_b_normal(&w).fails());
        assert!(lattice_is_normal(&chain(4)).holds());
        assert!(lattice_is_b_normal(&chain(4)).holds());
    }
}
