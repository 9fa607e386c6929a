//! Incrementally reduced linear systems over GF(2).

#[derive(Debug, Clone)]
pub(crate) struct Gf2System {
    words: usize,
    /// Fully reduced rows: no row has another row's pivot set.
    rows: Vec<Row>,
}

#[derive(Debug, Clone)]
struct Row {
    bits: Vec<u64>,
    rhs: bool,
    pivot: usize,
}

fn has(v: &[u64], i: usize) -> bool {
    v[i / 64] >> (i % 64) & 1 == 1
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

impl Gf2System {
    pub fn new(vars: usize) -> Gf2System {
        Gf2System { words: vars.div_ceil(64).max(1), rows: Vec::new() }
    }

    pub fn vector(&self, ones: &[usize]) -> Vec<u64> {
        let mut v = vec![0u64; self.words];
        for &i in ones {
            v[i / 64] ^= 1 << (i % 64);
        }
        v
    }

    fn reduce(&self, v: &mut [u64], rhs: &mut bool) {
        for r in &self.rows {
            if has(v, r.pivot) {
                xor_into(v, &r.bits);
                *rhs ^= r.rhs;
            }
        }
    }

    /// Adds `v . x = rhs`. Returns false if it contradicts the system.
    pub fn add(&mut self, mut v: Vec<u64>, mut rhs: bool) -> bool {
        self.reduce(&mut v, &mut rhs);
        let Some(w) = v.iter().position(|&x| x != 0) else {
            return !rhs;
        };
        let pivot = w * 64 + v[w].trailing_zeros() as usize;
        for r in &mut self.rows {
            if has(&r.bits, pivot) {
                xor_into(&mut r.bits, &v);
                r.rhs ^= rhs;
            }
        }
        self.rows.push(Row { bits: v, rhs, pivot });
        true
    }

    /// The value of `v . x` if every solution agrees on it.
    pub fn determined(&self, v: &[u64]) -> Option<bool> {
        let mut v = v.to_vec();
        let mut rhs = false;
        self.reduce(&mut v, &mut rhs);
        v.iter().all(|&x| x == 0).then_some(rhs)
    }

    /// Every solution over `vars` variables, as bit vectors, in the order of
    /// the free-variable assignment counter. `keep` filters solutions.
    pub fn solutions(&self, vars: usize, mut keep: impl FnMut(&[u64]) -> bool) -> Vec<Vec<u64>> {
        let mut is_pivot = vec![false; vars];
        for r in &self.rows {
            is_pivot[r.pivot] = true;
        }
        let free: Vec<usize> = (0..vars).filter(|&i| !is_pivot[i]).collect();
        assert!(free.len() < 40, "too many free variables to enumerate ({})", free.len());
        let mut out = Vec::new();
        for mask in 0u64..1 << free.len() {
            let mut x = vec![0u64; self.words];
            for (j, &f) in free.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    x[f / 64] |= 1 << (f % 64);
                }
            }
            for r in &self.rows {
                let dot = r.bits.iter().zip(&x).fold(0u32, |acc, (a, b)| acc + (a & b).count_ones()) & 1 == 1;
                // x has the pivot clear here, so dot covers the free part only.
                if dot != r.rhs {
                    x[r.pivot / 64] |= 1 << (r.pivot % 64);
                }
            }
            if keep(&x) {
                out.push(x);
            }
        }
        out
    }
}
