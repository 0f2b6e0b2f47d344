//! Stirling numbers of both kinds and the geometric polynomials
//! `w_n(x) = Σ_k S(n,k) k! x^k`.
//!
//! Triangles are filled by their recurrences and memoized row by row. The
//! free functions [`stirling2`] and [`stirling1_unsigned`] share a
//! process-wide cache behind a lock; build a [`Triangle`] directly when a
//! single owner is enough.

use std::sync::{OnceLock, RwLock};

use num_traits::Zero;

use crate::numerics::{factorial, Integer, Rational};
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    /// `{n,k}`: partitions of an n-set into k blocks.
    Stirling2,
    /// `[n,k]`: permutations of n elements with k cycles.
    Stirling1Unsigned,
}

impl TriangleKind {
    /// Multiplier on the `(n-1, k)` term of the row recurrence.
    fn weight(self, n: usize, k: usize) -> u64 {
        match self {
            TriangleKind::Stirling2 => k as u64,
            TriangleKind::Stirling1Unsigned => (n - 1) as u64,
        }
    }
}

/// Ragged table; row `n` holds entries `k = 0..=n`.
#[derive(Clone, Debug)]
pub struct Triangle {
    kind: TriangleKind,
    rows: Vec<Vec<Integer>>,
}

impl Triangle {
    pub fn new(kind: TriangleKind) -> Self {
        Triangle {
            kind,
            rows: vec![vec![Integer::from(1)]],
        }
    }

    pub fn with_rows(kind: TriangleKind, nmax: usize) -> Self {
        let mut t = Triangle::new(kind);
        t.extend_to(nmax);
        t
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    /// Index of the last computed row.
    pub fn nmax(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn extend_to(&mut self, nmax: usize) {
        while self.rows.len() <= nmax {
            let n = self.rows.len();
            let prev = &self.rows[n - 1];
            let row: Vec<Integer> = (0..=n)
                .map(|k| {
                    let diag = if k > 0 { prev[k - 1].clone() } else { Integer::zero() };
                    let across = prev.get(k).map_or_else(Integer::zero, |x| {
                        x * self.kind.weight(n, k)
                    });
                    diag + across
                })
                .collect();
            self.rows.push(row);
        }
    }

    /// Entry `(n, k)`, zero when `k > n`. Panics if row `n` is not computed.
    pub fn get(&self, n: usize, k: usize) -> Integer {
        self.rows[n].get(k).cloned().unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> &[Integer] {
        &self.rows[n]
    }

    /// `(n, k, value)` for every stored entry, row-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Integer)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().enumerate().map(move |(k, v)| (n, k, v)))
    }
}

fn cache(kind: TriangleKind) -> &'static RwLock<Triangle> {
    static S2: OnceLock<RwLock<Triangle>> = OnceLock::new();
    static S1: OnceLock<RwLock<Triangle>> = OnceLock::new();
    let cell = match kind {
        TriangleKind::Stirling2 => &S2,
        TriangleKind::Stirling1Unsigned => &S1,
    };
    cell.get_or_init(|| RwLock::new(Triangle::new(kind)))
}

fn cached(kind: TriangleKind, n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let lock = cache(kind);
    {
        let tri = lock.read().expect("triangle cache poisoned");
        if tri.nmax() >= n {
            return tri.get(n, k);
        }
    }
    let mut tri = lock.write().expect("triangle cache poisoned");
    tri.extend_to(n);
    tri.get(n, k)
}

/// Stirling number of the second kind `{n,k}`.
pub fn stirling2(n: usize, k: usize) -> Integer {
    cached(TriangleKind::Stirling2, n, k)
}

/// Unsigned Stirling number of the first kind `[n,k]`. The signed value is
/// `(-1)^(n-k) [n,k]`; callers apply whatever sign their formula needs.
pub fn stirling1_unsigned(n: usize, k: usize) -> Integer {
    cached(TriangleKind::Stirling1Unsigned, n, k)
}

/// Geometric polynomial `w_n(x) = Σ_{k=0..n} {n,k} k! x^k`.
pub fn geometric_poly(n: usize) -> Polynomial {
    Polynomial::new(
        (0..=n)
            .map(|k| Rational::from(stirling2(n, k) * factorial(k as u64)))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn int(n: i64) -> Integer {
        Integer::from(n)
    }

    /// Counts set partitions of {0..n} into exactly k blocks via restricted
    /// growth strings.
    fn partitions_brute(n: usize, k: usize) -> u64 {
        fn go(i: usize, n: usize, k: usize, blocks: usize) -> u64 {
            if i == n {
                return u64::from(blocks == k);
            }
            (0..=blocks.min(k.saturating_sub(1)))
                .map(|b| go(i + 1, n, k, blocks.max(b + 1)))
                .sum()
        }
        if n == 0 {
            return u64::from(k == 0);
        }
        go(0, n, k, 0)
    }

    fn cycles(perm: &[usize]) -> usize {
        let mut seen = vec![false; perm.len()];
        let mut count = 0;
        for s in 0..perm.len() {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        count
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Bell numbers from the Aitken/Bell triangle.
    fn bell_triangle(nmax: usize) -> Vec<Integer> {
        let mut bells = vec![int(1)];
        let mut row = vec![int(1)];
        for _ in 0..nmax {
            let mut next = vec![row.last().unwrap().clone()];
            for x in &row {
                let v = next.last().unwrap() + x;
                next.push(v);
            }
            bells.push(next[0].clone());
            row = next;
        }
        bells
    }

    #[test]
    fn stirling2_examples() {
        assert_eq!(stirling2(0, 0), int(1));
        for n in 0..15 {
            assert_eq!(stirling2(n, n), int(1));
        }
        assert_eq!(stirling2(4, 2), int(7));
        assert_eq!(stirling2(3, 5), int(0));
        for n in 0..9 {
            for k in 0..=n {
                assert_eq!(stirling2(n, k), int(partitions_brute(n, k) as i64), "({n},{k})");
            }
        }
    }

    #[test]
    fn stirling1_examples() {
        assert_eq!(stirling1_unsigned(0, 0), int(1));
        assert_eq!(stirling1_unsigned(1, 1), int(1));
        assert_eq!(stirling1_unsigned(3, 1), int(2));
        assert_eq!(stirling1_unsigned(4, 2), int(11));
        for n in 0..7 {
            let perms = permutations(n);
            for k in 0..=n {
                let count = perms.iter().filter(|p| cycles(p) == k).count();
                assert_eq!(stirling1_unsigned(n, k), int(count as i64), "[{n},{k}]");
            }
        }
    }

    #[test]
    fn row_identities() {
        let bells = bell_triangle(30);
        for (n, bell) in bells.iter().enumerate().take(31) {
            let s2: Integer = (0..=n).map(|k| stirling2(n, k)).sum();
            assert_eq!(&s2, bell, "Bell {n}");
            let s1: Integer = (0..=n).map(|k| stirling1_unsigned(n, k)).sum();
            assert_eq!(s1, factorial(n as u64));
        }
    }

    #[test]
    fn triangle_invariants() {
        for kind in [TriangleKind::Stirling2, TriangleKind::Stirling1Unsigned] {
            let t = Triangle::with_rows(kind, 25);
            assert_eq!(t.row(0), &[Integer::one()]);
            assert!(t.entries().all(|(_, _, v)| *v >= Integer::zero()));
            for n in 1..=25 {
                for k in 1..=n {
                    let w = match kind {
                        TriangleKind::Stirling2 => k,
                        TriangleKind::Stirling1Unsigned => n - 1,
                    };
                    assert_eq!(t.get(n, k), t.get(n - 1, k - 1) + t.get(n - 1, k) * w as u64);
                }
            }
        }
    }

    #[test]
    fn geometric_polys() {
        assert_eq!(geometric_poly(0), Polynomial::from_ints(&[1]));
        assert_eq!(geometric_poly(2), Polynomial::from_ints(&[0, 1, 2]));
        assert_eq!(geometric_poly(3), Polynomial::from_ints(&[0, 1, 6, 6]));
    }

    #[test]
    fn concurrent_access_is_consistent() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || stirling2(40 + i, 7)))
            .collect();
        let got: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        let t = Triangle::with_rows(TriangleKind::Stirling2, 48);
        for (i, v) in got.into_iter().enumerate() {
            assert_eq!(v, t.get(40 + i, 7));
        }
    }
}
