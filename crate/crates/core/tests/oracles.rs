//! Library results against independent brute-force oracles, and the frozen
//! values those oracles produced.

mod common;

use common::{first_violation, full_corpus, witness_violates, Raw};
use quantale::io::generate;
use quantale::lattice::all_ideals;
use quantale::quantale::find_isomorphism;
use quantale::reticulation::reticulate;
use quantale::suite::enumerate::lattices_of_size;
use quantale::suite::{enumerate_quantales, Corpus};
use quantale::{DistLattice, FiniteLattice, Quantale};

fn rejects_like_the_oracle(q: &Quantale, raw: &Raw, table: Vec<Vec<usize>>) -> &'static str {
    let expected = first_violation(raw).expect("the mutation breaks an axiom");
    let err = Quantale::new(q.lattice().clone(), table).expect_err("the mutation is rejected");
    assert_eq!(err.axiom().map(|a| a.to_string()).as_deref(), Some(expected), "{err}");
    let witness: Vec<usize> = err.witness().iter().map(|l| q.index_of(l).unwrap()).collect();
    assert!(witness_violates(raw, expected, &witness), "{err}");
    expected
}

#[test]
fn every_single_entry_mutation_of_d12_is_rejected_with_a_valid_witness() {
    let q = generate("zn:12").unwrap();
    let base = Raw::of(&q);
    let mut seen = std::collections::BTreeMap::new();
    for x in q.elements() {
        for y in q.elements() {
            for v in q.elements().filter(|&v| v != q.mul(x, y)) {
                let mut table = q.mul_table();
                table[x][y] = v;
                let mut raw = base.clone();
                raw.mul[x][y] = v;
                *seen.entry(rejects_like_the_oracle(&q, &raw, table)).or_insert(0) += 1;
            }
        }
    }
    assert_eq!(seen.values().sum::<usize>(), 6 * 6 * 5);
    // A lone changed entry always breaks an earlier axiom first.
    assert!(!seen.contains_key("distributivity"));
}

#[test]
fn symmetric_mutations_reach_distributivity() {
    let q = generate("zn:12").unwrap();
    let base = Raw::of(&q);
    let mut distributive = 0;
    for x in q.elements() {
        for y in x..q.len() {
            for v in q.elements().filter(|&v| v != q.mul(x, y)) {
                let mut table = q.mul_table();
                table[x][y] = v;
                table[y][x] = v;
                let mut raw = base.clone();
                raw.mul[x][y] = v;
                raw.mul[y][x] = v;
                if first_violation(&raw).is_none() {
                    assert!(Quantale::new(q.lattice().clone(), table).is_ok());
                    continue;
                }
                if rejects_like_the_oracle(&q, &raw, table) == "distributivity" {
                    distributive += 1;
                }
            }
        }
    }
    assert!(distributive > 0);
}

#[test]
fn enumeration_matches_the_frozen_counts() {
    let all = enumerate_quantales(5).unwrap();
    let counts: Vec<usize> = (1..=5)
        .map(|n| all.iter().filter(|e| e.quantale.len() == n).count())
        .collect();
    assert_eq!(counts, [1, 1, 2, 7, 26]);
    let lattices: Vec<usize> = (1..=5).map(|n| lattices_of_size(n).len()).collect();
    assert_eq!(lattices, [1, 1, 1, 2, 5]);
}

fn same_lattice(a: &FiniteLattice, b: &FiniteLattice) -> bool {
    let fa = Quantale::frame(a.clone());
    let fb = Quantale::frame(b.clone());
    match (fa, fb) {
        (Ok(x), Ok(y)) => find_isomorphism(&x, &y).is_some(),
        _ => false,
    }
}

#[test]
fn quantales_per_lattice_match_the_frozen_counts() {
    let all = enumerate_quantales(5).unwrap();
    let per = |l: &FiniteLattice| all.iter().filter(|e| same_lattice(e.quantale.lattice(), l)).count();
    for n in 4..=5 {
        let mut chain = Vec::new();
        let mut others = Vec::new();
        let mut non_distributive = 0;
        for l in lattices_of_size(n) {
            if l.distributivity_witness().is_some() {
                non_distributive += 1;
                assert!(Quantale::frame(l.clone()).is_err());
                continue;
            }
            if l.is_chain() {
                chain.push(per(&l));
            } else {
                others.push(per(&l));
            }
        }
        others.sort_unstable();
        match n {
            4 => {
                assert_eq!(chain, [6]);
                assert_eq!(others, [1]);
                assert_eq!(non_distributive, 0);
            }
            _ => {
                assert_eq!(chain, [22]);
                assert_eq!(others, [1, 3]);
                assert_eq!(non_distributive, 2);
            }
        }
    }
}

#[test]
fn the_three_chain_carries_the_meet_and_a_nilpotent_table() {
    let threes: Vec<Quantale> = enumerate_quantales(3)
        .unwrap()
        .into_iter()
        .map(|e| e.quantale)
        .filter(|q| q.len() == 3)
        .collect();
    assert_eq!(threes.len(), 2);
    let middle = |q: &Quantale| q.mul(1, 1);
    let mut values: Vec<usize> = threes.iter().map(middle).collect();
    values.sort_unstable();
    assert_eq!(values, [0, 1]);
}

#[test]
fn enumerated_quantales_are_valid_and_pairwise_non_isomorphic() {
    let all = enumerate_quantales(5).unwrap();
    for e in &all {
        assert!(first_violation(&Raw::of(&e.quantale)).is_none(), "{}", e.name);
    }
    for (i, a) in all.iter().enumerate() {
        for b in &all[i + 1..] {
            assert!(
                find_isomorphism(&a.quantale, &b.quantale).is_none(),
                "{} ≅ {}",
                a.name,
                b.name
            );
        }
    }
}

#[test]
fn every_distributive_lattice_frame_is_enumerated() {
    let all = enumerate_quantales(5).unwrap();
    for n in 1..=5 {
        for l in lattices_of_size(n) {
            if let Ok(f) = Quantale::frame(l) {
                assert!(all.iter().any(|e| find_isomorphism(&e.quantale, &f).is_some()));
            }
        }
    }
}

#[test]
fn spectra_centers_and_radicals_match_brute_force() {
    for m in &full_corpus(5).members {
        let q = &m.quantale;
        let raw = Raw::of(q);
        assert_eq!(q.m_primes(), raw.m_primes().as_slice(), "{}", m.name);
        assert_eq!(q.maximals(), raw.maximals().as_slice(), "{}", m.name);
        assert_eq!(q.boolean_center(), raw.center().as_slice(), "{}", m.name);
        assert_eq!(q.radical_elements(), raw.radicals(), "{}", m.name);
    }
}

#[test]
fn lattice_ideals_match_brute_force() {
    for m in &full_corpus(4).members {
        let r = reticulate(&m.quantale).unwrap();
        let brute = Raw::frame_of(r.lattice().lattice()).ideals();
        let mut library: Vec<Vec<usize>> = all_ideals(r.lattice()).iter().map(|i| i.members().to_vec()).collect();
        library.sort();
        let mut brute = brute;
        brute.sort();
        assert_eq!(library, brute, "{}", m.name);
    }
    for l in lattices_of_size(5) {
        if let Ok(d) = DistLattice::new(l) {
            assert_eq!(all_ideals(&d).len(), Raw::frame_of(d.lattice()).ideals().len());
        }
    }
}

#[test]
fn the_zero_of_the_three_chain_is_m_prime_but_not_maximal() {
    let c3 = Corpus::fixtures().get("C3").unwrap().quantale.clone();
    let raw = Raw::of(&c3);
    assert!(raw.m_primes().contains(&raw.bottom()));
    assert!(!raw.maximals().contains(&raw.bottom()));
    let refuted = full_corpus(5)
        .members
        .iter()
        .filter(|m| {
            let r = Raw::of(&m.quantale);
            r.m_primes().iter().any(|p| !r.maximals().contains(p))
        })
        .count();
    assert_eq!(refuted, 28);
}

/// `I ⊆ a*` but `I_* ≰ a`, found by brute force over ideals of the
/// ρ-class lattice; returns `(I_* , a)` pairs.
fn carrier_adjunction_failures(q: &Quantale) -> Vec<(usize, usize)> {
    let raw = Raw::of(q);
    let (l, class) = raw.reticulation();
    let star = |a: usize| -> Vec<usize> { q.elements().filter(|&c| raw.leq[c][a]).map(|c| class[c]).collect() };
    let mut out = Vec::new();
    for ideal in l.ideals() {
        let lower = raw.lub_all(q.elements().filter(|&c| ideal.contains(&class[c])));
        for a in q.elements() {
            let inside = ideal.iter().all(|k| star(a).contains(k));
            if inside && !raw.leq[lower][a] {
                out.push((lower, a));
            }
        }
    }
    out
}

#[test]
fn the_carrier_star_adjunction_fails_on_d12_and_only_off_the_radicals() {
    let d12 = generate("zn:12").unwrap();
    let failures = carrier_adjunction_failures(&d12);
    assert!(failures.contains(&(d12.el("2"), d12.el("4"))));
    assert!(failures.iter().all(|&(_, a)| d12.radical(a) != a));
    let refuted = full_corpus(5)
        .members
        .iter()
        .filter(|m| !carrier_adjunction_failures(&m.quantale).is_empty())
        .count();
    assert_eq!(refuted, 34);
}
