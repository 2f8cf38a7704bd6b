//! Small named groups used by the bundled examples and the randomized suites.

use super::{Elem, FiniteGroup, GroupRef};

fn build(names: Vec<String>, identity: Elem, f: impl Fn(Elem, Elem) -> Elem) -> GroupRef {
    FiniteGroup::from_fn(names, identity, f).expect("catalog tables are groups")
}

/// `Z_n`, elements named `0..n`, written additively.
pub fn cyclic(n: usize) -> GroupRef {
    assert!(n > 0);
    build((0..n).map(|i| i.to_string()).collect(), 0, |a, b| {
        (a + b) % n
    })
}

/// The dihedral group of order `2n`; element `k + n·e` is `r^k s^e`.
pub fn dihedral(n: usize) -> GroupRef {
    assert!(n > 0);
    let name = |k: usize, e: usize| {
        let r = match k {
            0 => String::new(),
            1 => "r".to_string(),
            _ => format!("r{k}"),
        };
        match (r.is_empty(), e) {
            (true, 0) => "1".to_string(),
            (_, 0) => r,
            (_, _) => format!("{r}s"),
        }
    };
    let names = (0..2 * n).map(|i| name(i % n, i / n)).collect();
    build(names, 0, |a, b| {
        let (ka, ea) = (a % n, a / n);
        let (kb, eb) = (b % n, b / n);
        let k = (if ea == 0 { ka + kb } else { ka + n - kb }) % n;
        k + n * ((ea + eb) % 2)
    })
}

/// The quaternion group `{±1, ±i, ±j, ±k}`.
pub fn quaternion() -> GroupRef {
    // element 2u + s is (-1)^s times unit u ∈ {1, i, j, k}
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    build(names, 0, |a, b| {
        let (u, v) = (a / 2, b / 2);
        let (w, s) = UNIT[u][v];
        2 * w + (s + a % 2 + b % 2) % 2
    })
}

pub fn direct_product(g: &GroupRef, h: &GroupRef) -> GroupRef {
    let m = h.order();
    let names = g
        .elements()
        .flat_map(|a| h.elements().map(move |b| (a, b)))
        .map(|(a, b)| format!("({},{})", g.name(a), h.name(b)))
        .collect();
    build(names, g.identity() * m + h.identity(), |x, y| {
        g.mul(x / m, y / m) * m + h.mul(x % m, y % m)
    })
}

pub fn klein_four() -> GroupRef {
    let z2 = cyclic(2);
    direct_product(&z2, &z2)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        out.push(perm.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    out
}

fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        let body: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        "1".to_string()
    } else {
        out
    }
}

fn permutation_group(perms: Vec<Vec<usize>>) -> GroupRef {
    let names = perms.iter().map(|p| cycle_name(p)).collect();
    let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    let table: Vec<Vec<Elem>> = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| {
                    // (ab)(x) = a(b(x))
                    let c: Vec<usize> = b.iter().map(|&x| a[x]).collect();
                    index(&c)
                })
                .collect()
        })
        .collect();
    build(names, 0, |a, b| table[a][b])
}

fn is_even(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// `S_n` on `{0, …, n-1}`, composition right-to-left, cycle-notation names.
pub fn symmetric(n: usize) -> GroupRef {
    permutation_group(permutations(n))
}

pub fn alternating(n: usize) -> GroupRef {
    permutation_group(permutations(n).into_iter().filter(|p| is_even(p)).collect())
}

const NAMES: &[&str] = &[
    "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z12", "Z16", "V4", "Z2xZ4",
    "Z2^3", "S3", "D4", "Q8", "D5", "D6", "A4", "D8", "Z2xD4", "Z2xQ8", "Z4xZ4", "Z2^4", "Z3xS3",
    "S4",
];

pub fn catalog_names() -> &'static [&'static str] {
    NAMES
}

/// Looks up a catalog group by name (`Z4`, `D4`, `Q8`, `S3`, `Z2xZ4`, …).
pub fn catalog(name: &str) -> Option<GroupRef> {
    if let Some(n) = name.strip_prefix('Z').and_then(|s| s.parse::<usize>().ok()) {
        return (n > 0).then(|| cyclic(n));
    }
    if let Some(n) = name.strip_prefix('D').and_then(|s| s.parse::<usize>().ok()) {
        return (n > 0).then(|| dihedral(n));
    }
    if let Some(n) = name.strip_prefix('S').and_then(|s| s.parse::<usize>().ok()) {
        return (1..=5).contains(&n).then(|| symmetric(n));
    }
    if let Some(n) = name.strip_prefix('A').and_then(|s| s.parse::<usize>().ok()) {
        return (1..=5).contains(&n).then(|| alternating(n));
    }
    let z2 = || cyclic(2);
    Some(match name {
        "V4" | "Z2xZ2" | "Z2^2" => klein_four(),
        "Q8" => quaternion(),
        "Z2xZ4" => direct_product(&z2(), &cyclic(4)),
        "Z2^3" => direct_product(&klein_four(), &z2()),
        "Z2^4" => direct_product(&klein_four(), &klein_four()),
        "Z2xD4" => direct_product(&z2(), &dihedral(4)),
        "Z2xQ8" => direct_product(&z2(), &quaternion()),
        "Z4xZ4" => direct_product(&cyclic(4), &cyclic(4)),
        "Z3xS3" => direct_product(&cyclic(3), &symmetric(3)),
        "Z2xS3" => direct_product(&z2(), &symmetric(3)),
        "Z2xZ6" => direct_product(&z2(), &cyclic(6)),
        _ => return None,
    })
}
