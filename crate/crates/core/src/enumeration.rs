//! Exhaustive generation of small posets and of their antitone involutions.
//!
//! Posets are grown one element at a time, the new element placed above a
//! down-closed subset of the previous ones, which yields every naturally
//! labelled poset exactly once. The canonical form of a poset is the least
//! bit encoding of its order over all linear extensions; every naturally
//! labelled copy of an isomorphism class has the same set of encodings, so
//! equal codes mean isomorphic posets.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::order::Poset;

pub const DEFAULT_BOUND: usize = 6;
pub const MAX_BOUND: usize = 7;

/// Downsets as bitmasks, `down[x]` containing `x`; naturally labelled.
type Rows = Vec<u8>;

fn natural_posets(n: usize) -> Vec<Rows> {
    let mut layer: Vec<Rows> = vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for rows in &layer {
            for below in 0u16..(1 << k) {
                let below = below as u8;
                let closed = (0..k).all(|x| below & (1 << x) == 0 || rows[x] & !below == 0);
                if closed {
                    let mut grown = rows.clone();
                    grown.push(below | (1 << k));
                    next.push(grown);
                }
            }
        }
        layer = next;
    }
    layer
}

fn linear_extensions(rows: &Rows, mut visit: impl FnMut(&[usize])) {
    fn go(rows: &Rows, placed: u8, seq: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        let n = rows.len();
        if seq.len() == n {
            visit(seq);
            return;
        }
        for x in 0..n {
            let bit = 1u8 << x;
            if placed & bit == 0 && rows[x] & !bit & !placed == 0 {
                seq.push(x);
                go(rows, placed | bit, seq, visit);
                seq.pop();
            }
        }
    }
    go(rows, 0, &mut Vec::with_capacity(rows.len()), &mut visit);
}

/// Bit `i < j` pairs in order `(0,1), (0,2), (1,2), (0,3), ...`, earliest most significant.
fn encode(rows: &Rows, seq: &[usize]) -> u32 {
    let mut code = 0u32;
    for j in 1..seq.len() {
        for &lower in &seq[..j] {
            code = (code << 1) | u32::from(rows[seq[j]] & (1 << lower) != 0);
        }
    }
    code
}

fn canonical_code(rows: &Rows) -> u32 {
    let mut best = u32::MAX;
    linear_extensions(rows, |seq| best = best.min(encode(rows, seq)));
    best
}

fn decode(n: usize, code: u32) -> Rows {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut rows: Rows = (0..n).map(|x| 1u8 << x).collect();
    let mut bit = pairs;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if code & (1 << bit) != 0 {
                rows[j] |= 1 << i;
            }
        }
    }
    rows
}

fn to_poset(rows: &Rows) -> Poset {
    Poset::with_index_labels(rows.len(), |x, y| rows[y] & (1 << x) != 0)
        .expect("generated rows are partial orders")
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    let max = bound.min(MAX_BOUND);
    if n > max {
        return Err(Error::BoundExceeded { n, max });
    }
    Ok(())
}

/// Canonical codes of the isomorphism classes on `n` elements, ascending.
fn canonical_codes(n: usize) -> BTreeSet<u32> {
    natural_posets(n).iter().map(canonical_code).collect()
}

/// Every poset on `n` elements, named `0..n`, up to the default bound.
pub fn enumerate_posets(n: usize, up_to_iso: bool) -> Result<Vec<Poset>> {
    enumerate_posets_bounded(n, up_to_iso, DEFAULT_BOUND)
}

/// As [`enumerate_posets`] with an explicit bound, itself capped at [`MAX_BOUND`].
///
/// With `up_to_iso` the result has one canonical representative per
/// isomorphism class, in ascending code order; otherwise every labelled
/// poset, grouped by class in the same order.
pub fn enumerate_posets_bounded(n: usize, up_to_iso: bool, bound: usize) -> Result<Vec<Poset>> {
    check_bound(n, bound)?;
    let codes = canonical_codes(n);
    if up_to_iso {
        return Ok(codes.iter().map(|&c| to_poset(&decode(n, c))).collect());
    }
    let mut out = Vec::new();
    for &c in &codes {
        let rows = decode(n, c);
        let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
        for perm in permutations(n) {
            // element x of the representative becomes perm[x]
            let mut relabelled = vec![0u8; n];
            for x in 0..n {
                let mut down = 0u8;
                for y in 0..n {
                    if rows[x] & (1 << y) != 0 {
                        down |= 1 << perm[y];
                    }
                }
                relabelled[perm[x]] = down;
            }
            seen.insert(relabelled);
        }
        out.extend(seen.iter().map(|rows| {
            Poset::with_index_labels(n, |x, y| rows[y] & (1 << x) != 0).expect("relabelled order")
        }));
    }
    Ok(out)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            acc.push(x);
            go(rest, acc, out);
            acc.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// Every antitone involution of `p`, in lexicographic order of the map.
pub fn enumerate_involutions(p: &Poset) -> Vec<Vec<usize>> {
    fn go(p: &Poset, inv: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        let Some(x) = inv.iter().position(Option::is_none) else {
            out.push(inv.iter().map(|m| m.expect("assigned")).collect());
            return;
        };
        for y in x..p.size() {
            if inv[y].is_some() {
                continue;
            }
            inv[x] = Some(y);
            inv[y] = Some(x);
            let antitone = [x, y].iter().all(|&u| {
                let pu = inv[u].expect("just assigned");
                (0..p.size()).all(|v| match inv[v] {
                    Some(pv) => (!p.leq(u, v) || p.leq(pv, pu)) && (!p.leq(v, u) || p.leq(pu, pv)),
                    None => true,
                })
            });
            if antitone {
                go(p, inv, out);
            }
            inv[x] = None;
            inv[y] = None;
        }
    }
    let mut out = Vec::new();
    go(p, &mut vec![None; p.size()], &mut out);
    out
}

/// Every map `P → P` that is its own inverse, antitone or not.
pub fn enumerate_involutive_maps(n: usize) -> Vec<Vec<usize>> {
    fn go(inv: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        let Some(x) = inv.iter().position(Option::is_none) else {
            out.push(inv.iter().map(|m| m.expect("assigned")).collect());
            return;
        };
        for y in x..inv.len() {
            if inv[y].is_none() {
                inv[x] = Some(y);
                inv[y] = Some(x);
                go(inv, out);
                inv[x] = None;
                inv[y] = None;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![None; n], &mut out);
    out
}

/// Every map `{0..n} → {0..n}`, lexicographically.
pub fn enumerate_unary_maps(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.checked_pow(n as u32).unwrap_or(0);
    (0..total).map(move |mut k| {
        let mut map = vec![0; n];
        for slot in map.iter_mut().rev() {
            *slot = k % n;
            k /= n;
        }
        map
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=6)
            .map(|n| enumerate_posets(n, true).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 1, 2, 5, 16, 63, 318]);
    }

    #[test]
    fn labelled_counts() {
        let counts: Vec<usize> = (0..=4)
            .map(|n| enumerate_posets(n, false).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 1, 3, 19, 219]);
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(
            enumerate_posets(7, true).unwrap_err(),
            Error::BoundExceeded { n: 7, max: 6 }
        );
        assert_eq!(
            enumerate_posets_bounded(8, true, 10).unwrap_err(),
            Error::BoundExceeded { n: 8, max: 7 }
        );
    }

    #[test]
    fn canonical_roundtrip() {
        for rows in natural_posets(4) {
            let code = canonical_code(&rows);
            assert_eq!(canonical_code(&decode(4, code)), code);
        }
    }

    #[test]
    fn involution_counts() {
        assert_eq!(enumerate_involutions(&Poset::chain(2)), vec![vec![1, 0]]);
        assert_eq!(
            enumerate_involutions(&Poset::antichain(2)),
            vec![vec![0, 1], vec![1, 0]]
        );
        assert_eq!(enumerate_involutions(&Poset::chain(3)), vec![vec![2, 1, 0]]);
        assert_eq!(enumerate_involutive_maps(3).len(), 4);
        assert_eq!(enumerate_unary_maps(3).count(), 27);
    }
}
