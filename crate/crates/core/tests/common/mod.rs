//! Shared test utilities: a deterministic PRNG and the independent oracles
//! the implementation is checked against.

#![allow(dead_code)]

/// SplitMix64: tiny deterministic generator, identical on every platform.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (bound > 0).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Uniform in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Fraction-free Bareiss determinant of a k x k integer minor. Entries stay
/// small here (|entry| <= 9, k <= 6), i128 never overflows.
fn det_bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Determinantal-divisor oracle for the Smith normal form: the k-th
/// invariant factor is gcd(k x k minors) / gcd((k-1) x (k-1) minors).
/// Entirely independent of the row/column-reduction implementation.
pub fn snf_diagonal_by_minors(rows: &[Vec<i64>]) -> Vec<i128> {
    let r = rows.len();
    let c = rows.first().map_or(0, |row| row.len());
    let bound = r.min(c);
    let mut divisors = vec![1i128]; // d_0 = 1
    for k in 1..=bound {
        let mut g = 0i128;
        for ri in combinations(r, k) {
            for ci in combinations(c, k) {
                let minor: Vec<Vec<i128>> = ri
                    .iter()
                    .map(|&i| ci.iter().map(|&j| rows[i][j] as i128).collect())
                    .collect();
                g = gcd_i128(g, det_bareiss(minor));
                // gcd 1 cannot shrink further, but keep scanning cheaply
            }
        }
        if g == 0 {
            break;
        }
        divisors.push(g);
    }
    (1..divisors.len())
        .map(|k| divisors[k] / divisors[k - 1])
        .collect()
}

/// Monomial-count oracle for the level-one cusp form dimension: count the
/// normal-form basis monomials g4^a g6^b D^c of total weight k with c >= 1,
/// where g4, g6 are the weight-4 and weight-6 Eisenstein generators, D the
/// weight-12 discriminant form, and b <= 1 because the square of g6 reduces
/// against g4^3 and D.
pub fn level1_cusp_dim_by_monomials(k: i64) -> u64 {
    if k < 0 {
        return 0;
    }
    let mut count = 0u64;
    for b in 0..=1i64 {
        let mut c = 1;
        while 12 * c + 6 * b <= k {
            let rest = k - 12 * c - 6 * b;
            if rest % 4 == 0 {
                count += 1;
            }
            c += 1;
        }
    }
    count
}
