//! Brute-force oracles shared by the integration tests.
//!
//! Everything here reads only the raw order matrix and multiplication table
//! of a structure and recomputes joins, meets, spectra, radicals, centers,
//! ideals and the lifting/normality properties straight from their
//! definitions, without calling into the library's own algorithms.

#![allow(dead_code)]

use quantale::suite::{Corpus, CorpusMember};
use quantale::{FiniteLattice, Quantale};

/// A finite ordered structure with a binary multiplication.
#[derive(Debug, Clone)]
pub struct Raw {
    pub n: usize,
    pub leq: Vec<Vec<bool>>,
    pub mul: Vec<Vec<usize>>,
}

impl Raw {
    pub fn of(q: &Quantale) -> Raw {
        let n = q.len();
        Raw {
            n,
            leq: (0..n).map(|a| (0..n).map(|b| q.leq(a, b)).collect()).collect(),
            mul: (0..n).map(|a| (0..n).map(|b| q.mul(a, b)).collect()).collect(),
        }
    }

    /// The lattice read as a frame: multiplication is the meet.
    pub fn frame_of(l: &FiniteLattice) -> Raw {
        let n = l.len();
        Raw::frame_of_order((0..n).map(|a| (0..n).map(|b| l.leq(a, b)).collect()).collect())
    }

    pub fn frame_of_order(leq: Vec<Vec<bool>>) -> Raw {
        let n = leq.len();
        let mut r = Raw {
            n,
            leq,
            mul: vec![vec![0; n]; n],
        };
        for a in 0..n {
            for b in 0..n {
                r.mul[a][b] = r.glb(a, b);
            }
        }
        r
    }

    /// The substructure on `keep` (parent indices) with multiplication `mul`
    /// expressed in parent indices.
    pub fn restrict(&self, keep: &[usize], mul: impl Fn(usize, usize) -> usize) -> Raw {
        let pos = |x: usize| {
            keep.iter()
                .position(|&k| k == x)
                .expect("closed under the multiplication")
        };
        Raw {
            n: keep.len(),
            leq: keep
                .iter()
                .map(|&a| keep.iter().map(|&b| self.leq[a][b]).collect())
                .collect(),
            mul: keep
                .iter()
                .map(|&a| keep.iter().map(|&b| pos(mul(a, b))).collect())
                .collect(),
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn top(&self) -> usize {
        self.elements()
            .find(|&t| self.elements().all(|x| self.leq[x][t]))
            .expect("a top element")
    }

    pub fn bottom(&self) -> usize {
        self.elements()
            .find(|&b| self.elements().all(|x| self.leq[b][x]))
            .expect("a bottom element")
    }

    pub fn lub(&self, a: usize, b: usize) -> usize {
        let ups: Vec<usize> = self.elements().filter(|&u| self.leq[a][u] && self.leq[b][u]).collect();
        *ups.iter()
            .find(|&&u| ups.iter().all(|&v| self.leq[u][v]))
            .expect("joins exist")
    }

    pub fn glb(&self, a: usize, b: usize) -> usize {
        let downs: Vec<usize> = self.elements().filter(|&d| self.leq[d][a] && self.leq[d][b]).collect();
        *downs
            .iter()
            .find(|&&d| downs.iter().all(|&v| self.leq[v][d]))
            .expect("meets exist")
    }

    pub fn lub_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom(), |acc, x| self.lub(acc, x))
    }

    pub fn glb_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top(), |acc, x| self.glb(acc, x))
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        (1..k).fold(a, |acc, _| self.mul[acc][a])
    }

    pub fn m_primes(&self) -> Vec<usize> {
        let top = self.top();
        self.elements()
            .filter(|&p| {
                p != top
                    && self.elements().all(|a| {
                        self.elements()
                            .all(|b| !self.leq[self.mul[a][b]][p] || self.leq[a][p] || self.leq[b][p])
                    })
            })
            .collect()
    }

    /// Elements `m < 1` with nothing strictly between `m` and `1`.
    pub fn maximals(&self) -> Vec<usize> {
        let top = self.top();
        self.elements()
            .filter(|&m| m != top && self.elements().all(|x| x == m || x == top || !self.leq[m][x]))
            .collect()
    }

    pub fn jacobson(&self) -> usize {
        self.glb_all(self.maximals())
    }

    pub fn radical_by_primes(&self, a: usize) -> usize {
        self.glb_all(self.m_primes().into_iter().filter(|&p| self.leq[a][p]))
    }

    /// Join of every `c` some power of which lies below `a`.
    pub fn radical_by_powers(&self, a: usize) -> usize {
        self.lub_all(
            self.elements()
                .filter(|&c| (1..=self.n + 1).any(|k| self.leq[self.power(c, k)][a])),
        )
    }

    pub fn radicals(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.radical_by_primes(a) == a).collect()
    }

    pub fn complemented(&self, e: usize) -> bool {
        let (top, bottom) = (self.top(), self.bottom());
        self.elements()
            .any(|f| self.lub(e, f) == top && self.mul[e][f] == bottom)
    }

    pub fn center(&self) -> Vec<usize> {
        self.elements().filter(|&e| self.complemented(e)).collect()
    }

    /// Complemented elements of `[a)` under `x ·ₐ y = x·y ∨ a`.
    pub fn interval_center(&self, a: usize) -> Vec<usize> {
        let top = self.top();
        let above: Vec<usize> = self.elements().filter(|&x| self.leq[a][x]).collect();
        above
            .iter()
            .copied()
            .filter(|&x| {
                above
                    .iter()
                    .any(|&y| self.lub(x, y) == top && self.lub(self.mul[x][y], a) == a)
            })
            .collect()
    }

    /// `[a)` as a structure in its own right.
    pub fn interval(&self, a: usize) -> Raw {
        let above: Vec<usize> = self.elements().filter(|&x| self.leq[a][x]).collect();
        self.restrict(&above, |x, y| self.lub(self.mul[x][y], a))
    }

    pub fn lp_at(&self, a: usize) -> bool {
        let center = self.center();
        self.interval_center(a)
            .into_iter()
            .all(|x| center.iter().any(|&e| self.lub(e, a) == x))
    }

    pub fn has_lp(&self) -> bool {
        self.elements().all(|a| self.lp_at(a))
    }

    fn separated_by(&self, pool: &[usize]) -> bool {
        let (top, bottom) = (self.top(), self.bottom());
        self.elements().all(|a| {
            self.elements().all(|b| {
                self.lub(a, b) != top
                    || pool.iter().any(|&e| {
                        self.lub(a, e) == top && pool.iter().any(|&f| self.lub(b, f) == top && self.mul[e][f] == bottom)
                    })
            })
        })
    }

    pub fn normal(&self) -> bool {
        self.separated_by(&self.elements().collect::<Vec<_>>())
    }

    pub fn b_normal(&self) -> bool {
        self.separated_by(&self.center())
    }

    pub fn hyperarchimedean(&self) -> bool {
        self.elements()
            .all(|c| (1..=self.n + 1).any(|k| self.complemented(self.power(c, k))))
    }

    pub fn property_star(&self) -> bool {
        let r = self.jacobson();
        let center = self.center();
        self.elements().all(|a| {
            self.elements()
                .filter(|&c| self.leq[c][r])
                .any(|c| center.iter().any(|&e| self.lub(c, e) == a))
        })
    }

    /// Every element is a join of complemented elements below it.
    pub fn zero_dimensional(&self) -> bool {
        let center = self.center();
        self.elements()
            .all(|a| self.lub_all(center.iter().copied().filter(|&e| self.leq[e][a])) == a)
    }

    /// Nonempty subsets closed downwards and under binary joins.
    pub fn ideals(&self) -> Vec<Vec<usize>> {
        assert!(self.n <= 20, "ideal enumeration is exponential");
        let mut out = Vec::new();
        for mask in 1u32..(1u32 << self.n) {
            let has = |x: usize| mask >> x & 1 == 1;
            let set: Vec<usize> = self.elements().filter(|&x| has(x)).collect();
            let down = set.iter().all(|&x| self.elements().all(|y| !self.leq[y][x] || has(y)));
            let joins = set.iter().all(|&x| set.iter().all(|&y| has(self.lub(x, y))));
            if down && joins {
                out.push(set);
            }
        }
        out
    }

    pub fn prime_ideals(&self) -> Vec<Vec<usize>> {
        let top = self.top();
        self.ideals()
            .into_iter()
            .filter(|i| {
                !i.contains(&top)
                    && self.elements().all(|a| {
                        self.elements()
                            .all(|b| !i.contains(&self.glb(a, b)) || i.contains(&a) || i.contains(&b))
                    })
            })
            .collect()
    }

    /// Lattice Id-BLP: for every ideal `↓x`, each complemented element of
    /// `L/↓x ≅ [x)` is `e∨x` for a complemented `e` of `L` (read as a frame).
    pub fn lattice_id_blp(&self) -> bool {
        self.has_lp()
    }

    /// The radical elements as a frame, ordered as in the carrier.
    pub fn radical_frame(&self) -> Raw {
        let keep = self.radicals();
        let order: Vec<Vec<bool>> = keep
            .iter()
            .map(|&a| keep.iter().map(|&b| self.leq[a][b]).collect())
            .collect();
        Raw::frame_of_order(order)
    }

    /// Classes of `a ≡ b ⟺ ρ(a) = ρ(b)`, ordered by `ρ`, as a frame.
    pub fn reticulation(&self) -> (Raw, Vec<usize>) {
        let radicals = self.radicals();
        let class: Vec<usize> = self
            .elements()
            .map(|a| radicals.iter().position(|&r| r == self.radical_by_primes(a)).unwrap())
            .collect();
        (self.radical_frame(), class)
    }
}

/// Checks the quantale axioms on a raw table in the order unit,
/// commutativity, associativity, distributivity; returns the first failing
/// one.
pub fn first_violation(r: &Raw) -> Option<&'static str> {
    let (top, bottom) = (r.top(), r.bottom());
    let m = &r.mul;
    let e = r.elements();
    if e.clone().any(|x| m[x][top] != x) {
        return Some("unit");
    }
    if e.clone().any(|x| e.clone().any(|y| m[x][y] != m[y][x])) {
        return Some("commutativity");
    }
    if e.clone()
        .any(|x| e.clone().any(|y| e.clone().any(|z| m[m[x][y]][z] != m[x][m[y][z]])))
    {
        return Some("associativity");
    }
    let bad_zero = e.clone().any(|x| m[x][bottom] != bottom);
    let bad_join = e.clone().any(|x| {
        e.clone()
            .any(|y| e.clone().any(|z| m[x][r.lub(y, z)] != r.lub(m[x][y], m[x][z])))
    });
    if bad_zero || bad_join {
        return Some("distributivity");
    }
    None
}

/// Whether `witness` (indices) exhibits a failure of `axiom` on `r`, in the
/// shapes the validator reports: `[x]`, `[x, y]`, `[x, y, z]`, `[x]` for the
/// empty join and `[x, y, z]` for `x·(y∨z)`.
pub fn witness_violates(r: &Raw, axiom: &str, witness: &[usize]) -> bool {
    let m = &r.mul;
    match (axiom, witness) {
        ("unit", &[x]) => m[x][r.top()] != x,
        ("commutativity", &[x, y]) => m[x][y] != m[y][x],
        ("associativity", &[x, y, z]) => m[m[x][y]][z] != m[x][m[y][z]],
        ("distributivity", &[x]) => m[x][r.bottom()] != r.bottom(),
        ("distributivity", &[x, y, z]) => m[x][r.lub(y, z)] != r.lub(m[x][y], m[x][z]),
        _ => false,
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The divisors of `n` with `d ≤ e ⟺ e | d` and `d·e = gcd(de, n)`, built
/// independently of the generators.
pub fn divisor_table(n: usize) -> (Vec<usize>, Raw) {
    let ds: Vec<usize> = (1..=n).filter(|&d| n.is_multiple_of(d)).collect();
    let pos = |v: usize| ds.iter().position(|&d| d == v).unwrap();
    let raw = Raw {
        n: ds.len(),
        leq: ds
            .iter()
            .map(|&a| ds.iter().map(|&b| a.is_multiple_of(b)).collect())
            .collect(),
        mul: ds
            .iter()
            .map(|&a| ds.iter().map(|&b| pos(gcd(a * b, n))).collect())
            .collect(),
    };
    (ds, raw)
}

/// Fixtures followed by every enumerated quantale up to `max` elements.
pub fn full_corpus(max: usize) -> Corpus {
    let mut c = Corpus::fixtures();
    c.extend(Corpus::enumerated(max).expect("within the enumeration bound"));
    c
}

/// Binary products of small enumerated quantales, with recorded factors.
pub fn product_corpus(max_factor: usize, max_product: usize) -> Corpus {
    let small: Vec<_> = quantale::suite::enumerate_quantales(max_factor)
        .unwrap()
        .into_iter()
        .filter(|e| e.quantale.len() >= 2)
        .collect();
    let mut members = Vec::new();
    for (i, a) in small.iter().enumerate() {
        for b in &small[i..] {
            if a.quantale.len() * b.quantale.len() > max_product {
                continue;
            }
            let factors = vec![a.quantale.clone(), b.quantale.clone()];
            let p = quantale::quantale::product(&factors).expect("nonempty family");
            let mut m = CorpusMember::new(format!("{}x{}", a.name, b.name), "product", p.quantale);
            m.factors = factors;
            members.push(m);
        }
    }
    Corpus { members }
}
