//! Oracles shared by the integration tests and the acceptance harness. None
//! of them call into the code they check.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use eqbir::exact_algebra::{IntMatrix, SmithForm};
use eqbir::fixed_locus::{
    build_example, Configuration, CurveComponent, ExampleFamily, LineAction, NormalWeights,
    P3Z2Variant, P3Z3Variant, PointComponent, SurfaceComponent, TAG_PLANE, TAG_RULED,
};

pub fn to_big(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// Fraction-free Gaussian elimination.
pub fn det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Invariant factors as quotients of successive gcds of k×k minors.
pub fn invariant_factors_by_minors(a: &[Vec<BigInt>], cols: usize) -> Vec<BigInt> {
    let rows = a.len();
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for r in subsets(rows, k) {
            for c in subsets(cols, k) {
                let minor: Vec<Vec<BigInt>> = r
                    .iter()
                    .map(|&i| c.iter().map(|&j| a[i][j].clone()).collect())
                    .collect();
                g = g.gcd(&det(minor));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Checks `u*a*v == s`, unimodularity, the divisibility chain and the
/// invariant factors against the minors.
pub fn check_smith(a: &IntMatrix, sf: &SmithForm) -> Result<(), String> {
    let (ai, ui, si, vi) = (to_big(a), to_big(&sf.u), to_big(&sf.s), to_big(&sf.v));
    if matmul(&matmul(&ui, &ai), &vi) != si {
        return Err("u*a*v != s".into());
    }
    if !det(ui).abs().is_one() || !det(vi).abs().is_one() {
        return Err("transform not unimodular".into());
    }
    for (i, row) in si.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j && !x.is_zero() {
                return Err(format!("off-diagonal entry at ({i},{j})"));
            }
        }
    }
    let diag: Vec<BigInt> = (0..a.rows().min(a.cols()))
        .map(|i| si[i][i].clone())
        .collect();
    if diag.iter().any(Signed::is_negative) {
        return Err("negative diagonal entry".into());
    }
    for w in diag.windows(2) {
        let ok = if w[0].is_zero() {
            w[1].is_zero()
        } else {
            (&w[1] % &w[0]).is_zero()
        };
        if !ok {
            return Err(format!("divisibility fails: {} then {}", w[0], w[1]));
        }
    }
    let nonzero: Vec<BigInt> = diag.into_iter().filter(|d| !d.is_zero()).collect();
    let expected = invariant_factors_by_minors(&ai, a.cols());
    if nonzero != expected {
        return Err(format!("factors {nonzero:?}, minors give {expected:?}"));
    }
    Ok(())
}

pub fn matrix(rows: &[Vec<i64>], cols: usize) -> IntMatrix {
    IntMatrix::from_rows(cols, rows).unwrap()
}

pub fn big(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().unwrap()).collect()
}

/// Lexicographically smallest nonnegative solution with the given minima,
/// by plain enumeration up to `bound` per coordinate.
pub fn brute_feasible(
    target: &[i64],
    basis: &[Vec<i64>],
    lower: &[u64],
    bound: u64,
) -> Option<Vec<u64>> {
    let n = basis.len();
    let mut x: Vec<u64> = lower.to_vec();
    loop {
        let hit = (0..target.len()).all(|j| {
            let s: i64 = (0..n).map(|i| x[i] as i64 * basis[i][j]).sum();
            s == target[j]
        });
        if hit {
            return Some(x);
        }
        // odometer, last coordinate fastest
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if x[i] < bound {
                x[i] += 1;
                break;
            }
            x[i] = lower[i];
        }
    }
}

pub fn totient(m: i64) -> usize {
    (1..=m)
        .filter(|&a| gcd(i128::from(a), i128::from(m)) == 1)
        .count()
}

/// The blowup relation for one block of a cyclic symbol, written out from
/// its definition: returns the terms on the right-hand side.
pub fn blowup_relation_terms(m: i64, values: &[i64], block: &[usize]) -> Vec<Vec<i64>> {
    let mut terms = Vec::new();
    for (pos, &i) in block.iter().enumerate() {
        let ai = values[i].rem_euclid(m);
        if block[..pos].iter().any(|&j| values[j].rem_euclid(m) == ai) {
            continue;
        }
        let mut t = values.to_vec();
        for &j in block {
            if j != i {
                t[j] = (values[j] - ai).rem_euclid(m);
            }
        }
        t[i] = ai;
        for x in &mut t {
            *x = x.rem_euclid(m);
        }
        t.sort();
        terms.push(t);
    }
    terms
}

/// Parses "Z^r ⊕ (Z/a)^k ⊕ Z/b" into a rank and a torsion multiset.
pub fn parse_structure(s: &str) -> (usize, BTreeMap<i64, usize>) {
    let mut rank = 0;
    let mut torsion = BTreeMap::new();
    if s.trim() == "0" {
        return (0, torsion);
    }
    for part in s.split('⊕').map(str::trim) {
        if part == "Z" {
            rank += 1;
        } else if let Some(r) = part.strip_prefix("Z^") {
            rank += r.parse::<usize>().unwrap();
        } else if let Some(rest) = part.strip_prefix("(Z/") {
            let (m, k) = rest.split_once(")^").unwrap();
            *torsion.entry(m.parse().unwrap()).or_insert(0) += k.parse::<usize>().unwrap();
        } else if let Some(m) = part.strip_prefix("Z/") {
            *torsion.entry(m.parse().unwrap()).or_insert(0) += 1;
        } else {
            panic!("unparsable structure part `{part}`");
        }
    }
    (rank, torsion)
}

/// Rank of an integer matrix over `F_q`.
pub fn rank_mod(rows: &[Vec<i64>], cols: usize, q: i64) -> usize {
    let mut a: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(q)).collect())
        .collect();
    let inv = |x: i64| {
        // Fermat; q is prime
        let (mut base, mut e, mut acc) = (x as i128, q as i128 - 2, 1i128);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % q as i128;
            }
            base = base * base % q as i128;
            e >>= 1;
        }
        acc as i64
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let f = inv(a[rank][c]);
        for x in &mut a[rank] {
            *x = (*x as i128 * f as i128 % q as i128) as i64;
        }
        let pivot = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let k = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x - k * y).rem_euclid(q);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Generators and relation rows of `B_n(Z/m)`, enumerated from the
/// definition.
pub fn cyclic_symbol_module(m: i64, n: usize) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let mut gens = Vec::new();
    let mut cur = Vec::new();
    fn walk(m: i64, n: usize, start: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            let g = cur
                .iter()
                .fold(i128::from(m), |g, &x| gcd(g, i128::from(x)));
            if g == 1 {
                out.push(cur.clone());
            }
            return;
        }
        for x in start..m {
            cur.push(x);
            walk(m, n, x, cur, out);
            cur.pop();
        }
    }
    walk(m, n, 0, &mut cur, &mut gens);
    let index: BTreeMap<Vec<i64>, usize> = gens
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, g)| (g, i))
        .collect();
    let mut rows = Vec::new();
    for g in &gens {
        for k in 2..=n {
            for block in subsets(n, k) {
                let mut row = vec![0i64; gens.len()];
                row[index[g]] -= 1;
                for t in blowup_relation_terms(m, g, &block) {
                    row[index[&t]] += 1;
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    (gens, rows)
}

/// `dim_{F_l}` of the quotient, which is the free rank plus the number of
/// invariant factors divisible by `l`.
pub fn quotient_dim_mod(gens: usize, rows: &[Vec<i64>], l: i64) -> usize {
    gens - rank_mod(rows, gens, l)
}

/// Seed configurations from which every blowup rule is reachable in at most
/// two steps, for p = 2, 3, 5.
pub fn case_seeds() -> Vec<Configuration> {
    let mut out: Vec<Configuration> = [
        ExampleFamily::P2LinearZ2,
        ExampleFamily::TrigonalThreefold { k: 2 },
        ExampleFamily::P3LinearZ2(P3Z2Variant::PointPlane),
        ExampleFamily::P3LinearZ2(P3Z2Variant::TwoLines),
        ExampleFamily::P3LinearZ3(P3Z3Variant::PointPlane),
        ExampleFamily::P3LinearZ3(P3Z3Variant::TwoLines),
        ExampleFamily::P3LinearZ3(P3Z3Variant::LineTwoPoints),
        ExampleFamily::SurfaceTimesLine {
            genus: 2,
            p: 3,
            line_action: LineAction::Trivial,
            self_intersection: 1,
        },
        ExampleFamily::SurfaceTimesLine {
            genus: 2,
            p: 5,
            line_action: LineAction::Nontrivial,
            self_intersection: 0,
        },
    ]
    .iter()
    .map(|f| build_example(f).unwrap())
    .collect();

    let mut surface = Configuration::empty(3, 2);
    surface.points.push(PointComponent::new(vec![1, 1]));
    surface.points.push(PointComponent::new(vec![1, 2]));
    surface
        .curves
        .push(CurveComponent::new(1, NormalWeights::Single(2), 0));
    out.push(surface);

    let mut five = Configuration::empty(5, 3);
    for w in [[1, 2, 3], [1, 1, 2], [2, 2, 2]] {
        five.points.push(PointComponent::new(w.to_vec()));
    }
    five.curves
        .push(CurveComponent::new(0, NormalWeights::Pair(1, 3), -2));
    five.curves
        .push(CurveComponent::new(1, NormalWeights::Pair(4, 4), 0));
    five.surfaces
        .push(SurfaceComponent::new(2, 0, -3, TAG_PLANE));
    out.push(five);

    let mut ruled = Configuration::empty(2, 3);
    ruled
        .surfaces
        .push(SurfaceComponent::new(1, 1, 0, TAG_RULED));
    ruled
        .curves
        .push(CurveComponent::new(2, NormalWeights::Pair(1, 1), 2));
    out.push(ruled);
    out
}

/// Lexicographically smallest solution for every reachable target with all
/// components at most `cap`, by one pass over the coordinate box.
pub fn lex_min_solutions(
    basis: &[Vec<i64>],
    lower: &[u64],
    cap: i64,
) -> BTreeMap<Vec<i64>, Vec<u64>> {
    let n = basis.len();
    let dim = basis[0].len();
    let bound = cap as u64;
    let mut out = BTreeMap::new();
    let mut x: Vec<u64> = lower.to_vec();
    if lower.iter().any(|&l| l > bound) {
        return out;
    }
    loop {
        let t: Vec<i64> = (0..dim)
            .map(|j| (0..n).map(|i| x[i] as i64 * basis[i][j]).sum())
            .collect();
        if t.iter().all(|&v| v <= cap) {
            out.entry(t).or_insert_with(|| x.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if x[i] < bound {
                x[i] += 1;
                break;
            }
            x[i] = lower[i];
        }
    }
}
