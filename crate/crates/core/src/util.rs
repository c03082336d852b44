/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Combinations {
    Combinations {
        n,
        current: if k <= n { Some((0..k).collect()) } else { None },
    }
}

pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let k = cur.len();
        let mut next = cur.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                return Some(cur);
            }
        }
        Some(cur)
    }
}

/// All vectors `a` with `0 <= a[i] < bounds[i]`, last coordinate fastest.
pub fn cartesian(bounds: &[crate::zlin::Int]) -> Vec<Vec<crate::zlin::Int>> {
    use num_traits::{One, Zero};
    let mut out = vec![Vec::new()];
    for b in bounds {
        let mut next = Vec::new();
        for prefix in &out {
            let mut v = crate::zlin::Int::zero();
            while &v < b {
                let mut p: Vec<crate::zlin::Int> = prefix.clone();
                p.push(v.clone());
                next.push(p);
                v += crate::zlin::Int::one();
            }
        }
        out = next;
    }
    out
}
