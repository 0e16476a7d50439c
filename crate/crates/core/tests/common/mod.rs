//! Naive reference implementations for two-factor products, written
//! against plain bitmasks with point `(i, j)` at bit `i * n2 + j`.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub fn mo_family(n: usize) -> Vec<u32> {
    let mut f = vec![0, (1u32 << n) - 1];
    f.extend((0..n).map(|i| 1u32 << i));
    f.sort_unstable();
    f.dedup();
    f
}

pub fn powerset_family(n: usize) -> Vec<u32> {
    (0..1u32 << n).collect()
}

pub fn bit(i: usize, j: usize, n2: usize) -> u32 {
    1 << (i * n2 + j)
}

fn cylinder_union(a: u32, n1: usize, b: u32, n2: usize) -> u32 {
    let mut s = 0;
    for i in 0..n1 {
        for j in 0..n2 {
            if a >> i & 1 == 1 || b >> j & 1 == 1 {
                s |= bit(i, j, n2);
            }
        }
    }
    s
}

/// Pairwise intersections until nothing new appears.
pub fn intersection_closure(seed: impl IntoIterator<Item = u32>, full: u32) -> BTreeSet<u32> {
    let mut fam: BTreeSet<u32> = seed.into_iter().collect();
    fam.insert(full);
    loop {
        let v: Vec<u32> = fam.iter().copied().collect();
        let before = fam.len();
        for &a in &v {
            for &b in &v {
                fam.insert(a & b);
            }
        }
        if fam.len() == before {
            return fam;
        }
    }
}

pub fn box_family(f1: &[u32], n1: usize, f2: &[u32], n2: usize) -> BTreeSet<u32> {
    let full = (1u32 << (n1 * n2)) - 1;
    let mut seed = Vec::new();
    for &a in f1 {
        for &b in f2 {
            seed.push(cylinder_union(a, n1, b, n2));
        }
    }
    seed.extend((0..n1 * n2).map(|p| 1u32 << p));
    intersection_closure(seed, full)
}

pub fn row(r: u32, i: usize, n2: usize) -> u32 {
    (0..n2)
        .filter(|&j| r & bit(i, j, n2) != 0)
        .fold(0, |s, j| s | 1 << j)
}

pub fn col(r: u32, j: usize, n1: usize, n2: usize) -> u32 {
    (0..n1)
        .filter(|&i| r & bit(i, j, n2) != 0)
        .fold(0, |s, i| s | 1 << i)
}

pub fn sections_closed(r: u32, f1: &[u32], n1: usize, f2: &[u32], n2: usize) -> bool {
    (0..n1).all(|i| f2.contains(&row(r, i, n2))) && (0..n2).all(|j| f1.contains(&col(r, j, n1, n2)))
}

pub fn fraser_family(f1: &[u32], n1: usize, f2: &[u32], n2: usize) -> BTreeSet<u32> {
    (0..1u32 << (n1 * n2))
        .filter(|&r| sections_closed(r, f1, n1, f2, n2))
        .collect()
}

/// Three points with pairwise distinct rows and columns.
pub fn xi_triples(n1: usize, n2: usize) -> Vec<u32> {
    let pts: Vec<(usize, usize)> = (0..n1).flat_map(|i| (0..n2).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for a in 0..pts.len() {
        for b in a + 1..pts.len() {
            for c in b + 1..pts.len() {
                let t = [pts[a], pts[b], pts[c]];
                let distinct =
                    (0..3).all(|x| (x + 1..3).all(|y| t[x].0 != t[y].0 && t[x].1 != t[y].1));
                if distinct {
                    out.push(t.iter().fold(0, |s, &(i, j)| s | bit(i, j, n2)));
                }
            }
        }
    }
    out
}

pub fn circle_family(n1: usize, n2: usize) -> BTreeSet<u32> {
    let mut f = box_family(&mo_family(n1), n1, &mo_family(n2), n2);
    f.extend(xi_triples(n1, n2));
    f
}

fn smallest_above(family: &BTreeSet<u32>, s: u32) -> u32 {
    *family
        .iter()
        .filter(|&&c| c & s == s)
        .min_by_key(|c| c.count_ones())
        .expect("the universe is closed")
}

/// First `(atom, element)` in (atom, mask) order violating covering.
pub fn first_covering_failure(family: &BTreeSet<u32>, n: usize) -> Option<(usize, u32)> {
    for p in 0..n {
        for &a in family {
            if a >> p & 1 == 1 {
                continue;
            }
            let j = smallest_above(family, a | 1 << p);
            let between = family
                .iter()
                .any(|&c| c != a && c != j && c & a == a && c & j == c);
            if between {
                return Some((p, a));
            }
        }
    }
    None
}

pub fn coatoms(family: &BTreeSet<u32>, full: u32) -> BTreeSet<u32> {
    family
        .iter()
        .copied()
        .filter(|&c| c != full && !family.iter().any(|&d| d != full && d != c && d & c == c))
        .collect()
}

pub fn mask(labels: &[(usize, usize)], n2: usize) -> u32 {
    labels.iter().fold(0, |s, &(i, j)| s | bit(i, j, n2))
}
