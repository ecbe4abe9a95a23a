//! Representatives of `P ∩ Γ₀(N) \ Γ₀(N)` for `SL₂`.

/// An integral matrix `[[a, b], [c, d]]` of determinant one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CosetRep {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl CosetRep {
    pub fn matrix(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    /// `max(|c|, |d|)`.
    pub fn height(&self) -> u64 {
        self.c.unsigned_abs().max(self.d.unsigned_abs())
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `x` with `x·d ≡ 1 (mod c)` and `0 ≤ x < c`, for `c > 0`, `gcd(c, d) = 1`.
fn inverse_mod(d: i64, c: i64) -> i64 {
    let (mut r0, mut r1) = (d.rem_euclid(c), c);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    s0.rem_euclid(c)
}

/// Completion of a coprime bottom row `(c, d)`: the `a` of least absolute
/// value with `ad ≡ 1 (mod c)`, the smaller one on a tie.
pub fn complete(c: i64, d: i64) -> Option<CosetRep> {
    if gcd(c, d) != 1 {
        return None;
    }
    if c == 0 {
        return Some(CosetRep { a: d, b: 0, c, d });
    }
    let m = c.abs();
    let x = inverse_mod(d, m);
    let cands = [x - m, x];
    let a = *cands.iter().min_by_key(|a| (a.abs(), **a)).unwrap();
    // a d − b c = 1
    let b = (a * d - 1) / c;
    Some(CosetRep { a, b, c, d })
}

/// One representative per coset with `max(|c|, |d|) ≤ bound`: coprime rows
/// with `N | c`, normalized to `c > 0` or `(c, d) = (0, 1)`, in increasing
/// `(c, d)` order.
pub fn siegel_cosets_deg1(level: u64, bound: u64) -> Vec<CosetRep> {
    let n = level.max(1) as i64;
    let b = bound as i64;
    let mut out = Vec::new();
    if b < 1 {
        return out;
    }
    out.push(CosetRep { a: 1, b: 0, c: 0, d: 1 });
    let mut c = n;
    while c <= b {
        for d in -b..=b {
            if let Some(rep) = complete(c, d) {
                out.push(rep);
            }
        }
        c += n;
    }
    out
}
