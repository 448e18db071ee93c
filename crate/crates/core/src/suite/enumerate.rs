//! Exhaustive enumeration of small quantales up to isomorphism.
//!
//! Lattices are generated on naturally labelled carriers (index order
//! extends the lattice order, `0` is the bottom and `n-1` the top), then
//! every symmetric table with `x·y ≤ x∧y` on the non-extremal elements is
//! tried; `x·1 = x` and `x·0 = 0` are forced. Survivors of the validator are
//! deduplicated by a canonical form: the lexicographically least
//! `(order matrix, table)` over all permutations of the non-extremal
//! elements.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::lattice::{FiniteLattice, FinitePoset};
use crate::quantale::Quantale;

/// Largest carrier enumerated unless the caller raises the bound.
pub const DEFAULT_BOUND: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("max size {requested} exceeds the configured bound {bound}")]
    BoundExceeded { requested: usize, bound: usize },
}

/// An enumerated quantale with a stable name `E<size>.<k>`.
#[derive(Debug, Clone)]
pub struct Enumerated {
    pub name: String,
    pub quantale: Quantale,
}

/// Every quantale on at most `max_size` elements, up to isomorphism,
/// ordered by size and then by canonical form.
pub fn enumerate_quantales(max_size: usize) -> Result<Vec<Enumerated>, EnumerationError> {
    enumerate_quantales_bounded(max_size, DEFAULT_BOUND)
}

pub fn enumerate_quantales_bounded(max_size: usize, bound: usize) -> Result<Vec<Enumerated>, EnumerationError> {
    if max_size > bound {
        return Err(EnumerationError::BoundExceeded {
            requested: max_size,
            bound,
        });
    }
    let mut out = Vec::new();
    for n in 1..=max_size {
        for (k, q) in quantales_of_size(n).into_iter().enumerate() {
            out.push(Enumerated {
                name: format!("E{n}.{}", k + 1),
                quantale: q,
            });
        }
    }
    Ok(out)
}

/// Lattices on `n` elements up to isomorphism, as order matrices in
/// canonical form.
pub fn lattices_of_size(n: usize) -> Vec<FiniteLattice> {
    let mut seen = BTreeMap::new();
    for leq in natural_orders(n) {
        let Ok(lattice) = FinitePoset::new(labels(n), leq.clone()).and_then(FiniteLattice::from_poset) else {
            continue;
        };
        let (key, perm) = canonical(n, |p| order_key(&leq, p));
        seen.entry(key).or_insert_with(|| permuted_lattice(&lattice, &perm));
    }
    seen.into_values().collect()
}

fn quantales_of_size(n: usize) -> Vec<Quantale> {
    let mut seen: BTreeMap<(Vec<bool>, Vec<usize>), Quantale> = BTreeMap::new();
    for lattice in lattices_of_size(n) {
        let leq: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| lattice.leq(a, b)).collect()).collect();
        for table in candidate_tables(&lattice) {
            let Ok(q) = Quantale::new(lattice.clone(), table.clone()) else {
                continue;
            };
            let (key, perm) = canonical(n, |p| (order_key(&leq, p), table_key(&table, p)));
            seen.entry(key).or_insert_with(|| permuted_quantale(&q, &perm));
        }
    }
    seen.into_values().collect()
}

fn labels(n: usize) -> Vec<String> {
    match n {
        1 => vec!["0".into()],
        _ => std::iter::once("0".to_string())
            .chain((1..n - 1).map(|i| char::from(b'a' + (i - 1) as u8).to_string()))
            .chain(std::iter::once("1".to_string()))
            .collect(),
    }
}

/// Reflexive, transitive relations with `0` least, `n-1` greatest and
/// `i ≤ j ⟹ i ≤ j` as integers.
fn natural_orders(n: usize) -> Vec<Vec<Vec<bool>>> {
    if n == 1 {
        return vec![vec![vec![true]]];
    }
    let pairs: Vec<(usize, usize)> = (1..n - 1).flat_map(|i| (i + 1..n - 1).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
            row[n - 1] = true;
        }
        leq[0].fill(true);
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                leq[i][j] = true;
            }
        }
        let transitive = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(leq[a][b] && leq[b][c]) || leq[a][c])));
        if transitive {
            out.push(leq);
        }
    }
    out
}

/// All symmetric tables with unit `1`, absorbing `0`, and `x·y ≤ x∧y`.
fn candidate_tables(l: &FiniteLattice) -> Vec<Vec<Vec<usize>>> {
    let n = l.len();
    let mut base = vec![vec![0; n]; n];
    for (x, row) in base.iter_mut().enumerate() {
        row[n - 1] = x;
    }
    base[n - 1] = (0..n).collect();
    let cells: Vec<(usize, usize)> = (1..n.saturating_sub(1))
        .flat_map(|x| (x..n - 1).map(move |y| (x, y)))
        .collect();
    let choices: Vec<Vec<usize>> = cells
        .iter()
        .map(|&(x, y)| l.elements().filter(|&v| l.leq(v, l.meet(x, y))).collect())
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; cells.len()];
    loop {
        let mut table = base.clone();
        for (c, &(x, y)) in cells.iter().enumerate() {
            table[x][y] = choices[c][pick[c]];
            table[y][x] = choices[c][pick[c]];
        }
        out.push(table);
        let mut c = 0;
        loop {
            if c == cells.len() {
                return out;
            }
            pick[c] += 1;
            if pick[c] < choices[c].len() {
                break;
            }
            pick[c] = 0;
            c += 1;
        }
    }
}

/// The least key over all permutations fixing `0` and `n-1`, with the
/// permutation attaining it (`perm[new] = old`).
fn canonical<K: Ord>(n: usize, key: impl Fn(&[usize]) -> K) -> (K, Vec<usize>) {
    let middle: Vec<usize> = (1..n.saturating_sub(1)).collect();
    let mut best: Option<(K, Vec<usize>)> = None;
    for inner in permutations(&middle) {
        let perm: Vec<usize> = if n == 1 {
            vec![0]
        } else {
            std::iter::once(0).chain(inner).chain(std::iter::once(n - 1)).collect()
        };
        let k = key(&perm);
        if best.as_ref().is_none_or(|(b, _)| k < *b) {
            best = Some((k, perm));
        }
    }
    best.expect("at least the identity")
}

fn permutations(xs: &[usize]) -> Vec<Vec<usize>> {
    if xs.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (new, &old) in perm.iter().enumerate() {
        inv[old] = new;
    }
    inv
}

fn order_key(leq: &[Vec<bool>], perm: &[usize]) -> Vec<bool> {
    let n = perm.len();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| leq[perm[i]][perm[j]]))
        .collect()
}

fn table_key(table: &[Vec<usize>], perm: &[usize]) -> Vec<usize> {
    let inv = inverse(perm);
    let n = perm.len();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| inv[table[perm[i]][perm[j]]])
        .collect()
}

fn permuted_lattice(l: &FiniteLattice, perm: &[usize]) -> FiniteLattice {
    let n = l.len();
    let leq = (0..n)
        .map(|i| (0..n).map(|j| l.leq(perm[i], perm[j])).collect())
        .collect();
    FinitePoset::new(labels(n), leq)
        .and_then(FiniteLattice::from_poset)
        .expect("a relabelled lattice is a lattice")
}

fn permuted_quantale(q: &Quantale, perm: &[usize]) -> Quantale {
    let inv = inverse(perm);
    let n = q.len();
    let lattice = permuted_lattice(q.lattice(), perm);
    let mul = (0..n)
        .map(|i| (0..n).map(|j| inv[q.mul(perm[i], perm[j])]).collect())
        .collect();
    Quantale::new(lattice, mul).expect("a relabelled quantale is a quantale")
}
