//! Named constructions.
//!
//! - `zn:n` — ideals of ℤₙ as divisors of `n`, `d₁ ≤ d₂ ⟺ d₂ | d₁`,
//!   `d₁·d₂ = gcd(d₁d₂, n)`.
//! - `chain:k[,frame]` — the `k`-chain with `· = ∧`.
//! - `boolean:k` — the Boolean algebra on `k` atoms.
//! - `downsets:z<x,z<y` — down-sets of a finite poset, ordered by inclusion.
//! - `product:g1;g2;…` — componentwise product.

use super::IoError;
use crate::lattice::{FiniteLattice, FinitePoset};
use crate::quantale::{product, Quantale};

/// Expands a generator string into a validated quantale.
pub fn generate(spec: &str) -> Result<Quantale, IoError> {
    let spec = spec.trim();
    let (kind, arg) = spec
        .split_once(':')
        .ok_or_else(|| IoError::UnknownGenerator(spec.to_string()))?;
    match kind {
        "zn" => divisors(parse_count(kind, arg)?),
        "chain" => {
            let (k, flavour) = arg.split_once(',').unwrap_or((arg, "frame"));
            if flavour.trim() != "frame" {
                return Err(invalid(kind, format!("unknown chain flavour `{flavour}`")));
            }
            chain(parse_count(kind, k)?)
        }
        "boolean" => boolean(parse_count(kind, arg)?),
        "downsets" => downsets(arg),
        "product" => {
            let factors = arg.split(';').map(generate).collect::<Result<Vec<_>, _>>()?;
            product(&factors)
                .map(|p| p.quantale)
                .map_err(|e| invalid(kind, e.to_string()))
        }
        _ => Err(IoError::UnknownGenerator(spec.to_string())),
    }
}

fn invalid(generator: &str, message: impl Into<String>) -> IoError {
    IoError::InvalidParameter {
        generator: generator.to_string(),
        message: message.into(),
    }
}

fn parse_count(generator: &str, arg: &str) -> Result<usize, IoError> {
    match arg.trim().parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(invalid(generator, format!("expected a positive integer, got `{arg}`"))),
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn divisors(n: usize) -> Result<Quantale, IoError> {
    if n > 10_000 {
        return Err(invalid("zn", "n is too large"));
    }
    let ds: Vec<usize> = (1..=n).filter(|&d| n.is_multiple_of(d)).collect();
    let labels = ds.iter().map(usize::to_string).collect();
    let leq = ds.iter().map(|&a| ds.iter().map(|&b| a % b == 0).collect()).collect();
    let idx = |d: usize| ds.binary_search(&d).expect("gcd with n divides n");
    let mul = ds
        .iter()
        .map(|&a| ds.iter().map(|&b| idx(gcd(a * b, n))).collect())
        .collect();
    build(labels, leq, Some(mul))
}

fn chain(k: usize) -> Result<Quantale, IoError> {
    let labels = match k {
        1 => vec!["0".to_string()],
        2 => vec!["0".into(), "1".into()],
        3 => vec!["0".into(), "m".into(), "1".into()],
        _ => std::iter::once("0".to_string())
            .chain((1..k - 1).map(|i| format!("m{i}")))
            .chain(std::iter::once("1".to_string()))
            .collect(),
    };
    let leq = (0..k).map(|i| (0..k).map(|j| i <= j).collect()).collect();
    build(labels, leq, None)
}

fn boolean(k: usize) -> Result<Quantale, IoError> {
    if k > 6 {
        return Err(invalid("boolean", "at most 6 atoms"));
    }
    let full = (1usize << k) - 1;
    let mut sets: Vec<usize> = (0..=full).collect();
    sets.sort_by_key(|&s| (s.count_ones(), (0..k).map(|i| s >> i & 1 == 0).collect::<Vec<_>>()));
    let labels = sets
        .iter()
        .map(|&s| match s {
            0 => "0".to_string(),
            s if s == full => "1".to_string(),
            s => (0..k)
                .filter(|i| s >> i & 1 == 1)
                .map(|i| char::from(b'a' + i as u8))
                .collect(),
        })
        .collect();
    let leq = sets
        .iter()
        .map(|&a| sets.iter().map(|&b| a & b == a).collect())
        .collect();
    build(labels, leq, None)
}

/// `z<x,z<y`: points in order of first appearance; a bare name adds an
/// isolated point.
fn downsets(arg: &str) -> Result<Quantale, IoError> {
    let mut points: Vec<String> = Vec::new();
    let mut below: Vec<(usize, usize)> = Vec::new();
    let intern = |p: &str, points: &mut Vec<String>| -> Result<usize, IoError> {
        let p = p.trim();
        if p.is_empty() || !p.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(invalid("downsets", format!("bad point name `{p}`")));
        }
        Ok(match points.iter().position(|q| q == p) {
            Some(i) => i,
            None => {
                points.push(p.to_string());
                points.len() - 1
            }
        })
    };
    for item in arg.split(',').filter(|s| !s.trim().is_empty()) {
        let chainlinks: Vec<&str> = item.split('<').collect();
        let ids = chainlinks
            .iter()
            .map(|p| intern(p, &mut points))
            .collect::<Result<Vec<_>, _>>()?;
        below.extend(ids.windows(2).map(|w| (w[0], w[1])));
    }
    let n = points.len();
    if n == 0 || n > 12 {
        return Err(invalid("downsets", "expected between 1 and 12 points"));
    }
    let order = FinitePoset::from_relation(points.clone(), &below).map_err(|e| invalid("downsets", e.to_string()))?;
    let mut sets: Vec<Vec<usize>> = (0..1usize << n)
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|s| s.iter().all(|&x| (0..n).all(|y| !order.leq(y, x) || s.contains(&y))))
        .collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let labels = sets
        .iter()
        .map(|s| {
            let names: Vec<&str> = s.iter().map(|&i| points[i].as_str()).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    let leq = sets
        .iter()
        .map(|a| sets.iter().map(|b| a.iter().all(|x| b.contains(x))).collect())
        .collect();
    build(labels, leq, None)
}

/// A frame when `mul` is `None`.
fn build(labels: Vec<String>, leq: Vec<Vec<bool>>, mul: Option<Vec<Vec<usize>>>) -> Result<Quantale, IoError> {
    let lattice = FinitePoset::new(labels, leq)
        .and_then(FiniteLattice::from_poset)
        .map_err(|e| invalid("generator", e.to_string()))?;
    match mul {
        Some(m) => Quantale::new(lattice, m),
        None => Quantale::frame(lattice),
    }
    .map_err(|e| invalid("generator", e.to_string()))
}
