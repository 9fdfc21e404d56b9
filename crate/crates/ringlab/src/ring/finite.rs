//! Exact arithmetic for finite rings under the canonical index encoding.
//!
//! Every finite ring is backed by one of four engines: integers mod n,
//! `F_p[x]` modulo a monic polynomial (indices are little-endian base-p
//! values of the coefficient vector), mixed-radix products (first factor
//! most significant), and coset quotients (minimal-index representatives
//! re-indexed in ascending order). Small rings additionally cache full
//! operation tables.

use std::sync::Arc;

/// Rings up to this size cache full add/mul tables.
const TABLE_MAX: u64 = 512;

pub(crate) enum FiniteOps {
    QuotientInt {
        n: u64,
    },
    PolyQuotient {
        p: u64,
        modulus: Vec<u64>,
        deg: usize,
    },
    Product {
        factors: Vec<Arc<FiniteCore>>,
    },
    Coset {
        base: Arc<FiniteCore>,
        /// Minimal-index representative of each coset, ascending.
        reps: Vec<u64>,
        /// Maps a base index to the index of its coset.
        coset_of: Vec<u32>,
    },
}

pub(crate) struct FiniteCore {
    pub size: u64,
    pub ops: FiniteOps,
    add_t: Option<Vec<u32>>,
    mul_t: Option<Vec<u32>>,
    neg_t: Vec<u32>,
    inverses: std::sync::OnceLock<Vec<u64>>,
}

impl FiniteCore {
    pub fn new(ops: FiniteOps, size: u64) -> Arc<FiniteCore> {
        let mut core = FiniteCore {
            size,
            ops,
            add_t: None,
            mul_t: None,
            neg_t: Vec::new(),
            inverses: std::sync::OnceLock::new(),
        };
        core.neg_t = (0..size).map(|a| core.raw_neg(a) as u32).collect();
        if size <= TABLE_MAX {
            let n = size as usize;
            let mut add = vec![0u32; n * n];
            let mut mul = vec![0u32; n * n];
            for a in 0..size {
                for b in 0..size {
                    add[(a * size + b) as usize] = core.raw_add(a, b) as u32;
                    mul[(a * size + b) as usize] = core.raw_mul(a, b) as u32;
                }
            }
            core.add_t = Some(add);
            core.mul_t = Some(mul);
        }
        Arc::new(core)
    }

    pub fn is_zero_ring(&self) -> bool {
        self.size == 1
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        match &self.add_t {
            Some(t) => t[(a * self.size + b) as usize] as u64,
            None => self.raw_add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match &self.mul_t {
            Some(t) => t[(a * self.size + b) as usize] as u64,
            None => self.raw_mul(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        self.neg_t[a as usize] as u64
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn one(&self) -> u64 {
        match &self.ops {
            FiniteOps::QuotientInt { n } => 1 % n,
            FiniteOps::PolyQuotient { .. } => {
                if self.size == 1 {
                    0
                } else {
                    1
                }
            }
            FiniteOps::Product { factors } => {
                let ones: Vec<u64> = factors.iter().map(|f| f.one()).collect();
                encode_mixed_radix(factors, &ones)
            }
            FiniteOps::Coset { base, coset_of, .. } => coset_of[base.one() as usize] as u64,
        }
    }

    /// `a` is nilpotent iff `a^(2^k) = 0` once `2^k >= |A|`.
    pub fn is_nilpotent(&self, a: u64) -> bool {
        let mut b = a;
        let mut exp = 1u64;
        loop {
            if b == 0 {
                return true;
            }
            if exp >= self.size {
                return false;
            }
            b = self.mul(b, b);
            exp = exp.saturating_mul(2);
        }
    }

    /// Minimal `k >= 1` with `a^k = 0`, if `a` is nilpotent.
    pub fn nilpotency_index(&self, a: u64) -> Option<u64> {
        if !self.is_nilpotent(a) {
            return None;
        }
        let mut b = self.one();
        for k in 1..=self.size {
            b = self.mul(b, a);
            if b == 0 {
                return Some(k);
            }
        }
        None
    }

    pub fn is_unit(&self, a: u64) -> Option<u64> {
        let inverses = self.inverses.get_or_init(|| {
            let one = self.one();
            let mut table = vec![u64::MAX; self.size as usize];
            for x in 0..self.size {
                for y in 0..self.size {
                    if self.mul(x, y) == one {
                        table[x as usize] = y;
                        break;
                    }
                }
            }
            table
        });
        match inverses[a as usize] {
            u64::MAX => None,
            inv => Some(inv),
        }
    }

    pub fn idempotents(&self) -> Vec<u64> {
        (0..self.size).filter(|&a| self.mul(a, a) == a).collect()
    }

    fn raw_add(&self, a: u64, b: u64) -> u64 {
        match &self.ops {
            FiniteOps::QuotientInt { n } => (a + b) % n,
            FiniteOps::PolyQuotient { p, deg, .. } => {
                let mut out = 0u64;
                let mut scale = 1u64;
                let (mut x, mut y) = (a, b);
                for _ in 0..*deg {
                    let c = (x % p + y % p) % p;
                    out += c * scale;
                    scale *= p;
                    x /= p;
                    y /= p;
                }
                out
            }
            FiniteOps::Product { factors } => {
                let xs = decode_mixed_radix(factors, a);
                let ys = decode_mixed_radix(factors, b);
                let zs: Vec<u64> = factors
                    .iter()
                    .zip(xs.iter().zip(ys.iter()))
                    .map(|(f, (x, y))| f.add(*x, *y))
                    .collect();
                encode_mixed_radix(factors, &zs)
            }
            FiniteOps::Coset {
                base,
                reps,
                coset_of,
            } => coset_of[base.add(reps[a as usize], reps[b as usize]) as usize] as u64,
        }
    }

    fn raw_mul(&self, a: u64, b: u64) -> u64 {
        match &self.ops {
            FiniteOps::QuotientInt { n } => (a * b) % n,
            FiniteOps::PolyQuotient { p, modulus, deg } => {
                let xs = digits(a, *p, *deg);
                let ys = digits(b, *p, *deg);
                let mut prod = vec![0u64; 2 * deg - 1];
                for (i, x) in xs.iter().enumerate() {
                    if *x == 0 {
                        continue;
                    }
                    for (j, y) in ys.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // reduce modulo the monic modulus
                for i in (*deg..prod.len()).rev() {
                    let c = prod[i];
                    if c == 0 {
                        continue;
                    }
                    prod[i] = 0;
                    for (k, m) in modulus.iter().enumerate().take(*deg) {
                        let idx = i - deg + k;
                        prod[idx] = (prod[idx] + c * (p - m % p)) % p;
                    }
                }
                undigits(&prod[..*deg], *p)
            }
            FiniteOps::Product { factors } => {
                let xs = decode_mixed_radix(factors, a);
                let ys = decode_mixed_radix(factors, b);
                let zs: Vec<u64> = factors
                    .iter()
                    .zip(xs.iter().zip(ys.iter()))
                    .map(|(f, (x, y))| f.mul(*x, *y))
                    .collect();
                encode_mixed_radix(factors, &zs)
            }
            FiniteOps::Coset {
                base,
                reps,
                coset_of,
            } => coset_of[base.mul(reps[a as usize], reps[b as usize]) as usize] as u64,
        }
    }

    fn raw_neg(&self, a: u64) -> u64 {
        match &self.ops {
            FiniteOps::QuotientInt { n } => (n - a) % n,
            FiniteOps::PolyQuotient { p, deg, .. } => {
                let xs = digits(a, *p, *deg);
                let neg: Vec<u64> = xs.iter().map(|c| (p - c) % p).collect();
                undigits(&neg, *p)
            }
            FiniteOps::Product { factors } => {
                let xs = decode_mixed_radix(factors, a);
                let zs: Vec<u64> = factors
                    .iter()
                    .zip(xs.iter())
                    .map(|(f, x)| f.neg(*x))
                    .collect();
                encode_mixed_radix(factors, &zs)
            }
            FiniteOps::Coset {
                base,
                reps,
                coset_of,
            } => coset_of[base.neg(reps[a as usize]) as usize] as u64,
        }
    }
}

pub(crate) fn digits(mut v: u64, p: u64, deg: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(deg);
    for _ in 0..deg {
        out.push(v % p);
        v /= p;
    }
    out
}

pub(crate) fn undigits(coeffs: &[u64], p: u64) -> u64 {
    let mut out = 0u64;
    for c in coeffs.iter().rev() {
        out = out * p + c;
    }
    out
}

/// First factor most significant.
pub(crate) fn decode_mixed_radix(factors: &[Arc<FiniteCore>], mut idx: u64) -> Vec<u64> {
    let mut out = vec![0u64; factors.len()];
    for (i, f) in factors.iter().enumerate().rev() {
        out[i] = idx % f.size;
        idx /= f.size;
    }
    out
}

pub(crate) fn encode_mixed_radix(factors: &[Arc<FiniteCore>], parts: &[u64]) -> u64 {
    let mut idx = 0u64;
    for (f, part) in factors.iter().zip(parts.iter()) {
        idx = idx * f.size + part;
    }
    idx
}

/// Smallest subset of base indices containing `gens`, closed under addition
/// and multiplication by every ring element. This is the element set of the
/// generated ideal.
pub(crate) fn ideal_closure(base: &FiniteCore, gens: &[u64]) -> Vec<u64> {
    if let [g] = gens {
        // the multiples of a single generator already form an ideal
        let mut out: Vec<u64> = (0..base.size).map(|a| base.mul(a, *g)).collect();
        out.sort_unstable();
        out.dedup();
        return out;
    }
    let n = base.size as usize;
    let mut member = vec![false; n];
    member[0] = true;
    let mut queue: Vec<u64> = vec![0];
    for &g in gens {
        if !member[g as usize] {
            member[g as usize] = true;
            queue.push(g);
        }
    }
    while let Some(x) = queue.pop() {
        // multiples a*x
        for a in 0..base.size {
            let y = base.mul(a, x);
            if !member[y as usize] {
                member[y as usize] = true;
                queue.push(y);
            }
        }
        // sums with existing members
        for y in 0..base.size {
            if member[y as usize] {
                let z = base.add(x, y);
                if !member[z as usize] {
                    member[z as usize] = true;
                    queue.push(z);
                }
            }
        }
    }
    (0..base.size).filter(|&i| member[i as usize]).collect()
}

/// Builds the coset quotient of `base` by the ideal with element set `ideal`.
pub(crate) fn coset_quotient(base: Arc<FiniteCore>, ideal: &[u64]) -> (Arc<FiniteCore>, Vec<u64>) {
    let n = base.size as usize;
    let mut coset_of = vec![u32::MAX; n];
    let mut reps = Vec::new();
    for x in 0..base.size {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for &i in ideal {
            let y = base.add(x, i);
            coset_of[y as usize] = id;
        }
        coset_of[x as usize] = id;
    }
    let size = reps.len() as u64;
    let fwd: Vec<u64> = coset_of.iter().map(|&c| c as u64).collect();
    let core = FiniteCore::new(
        FiniteOps::Coset {
            base,
            reps,
            coset_of,
        },
        size,
    );
    (core, fwd)
}
