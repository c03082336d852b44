use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Int, IntMatrix, Rat};

/// Some rational solution of `m x = b` (free variables set to zero), or
/// `None` if the system is inconsistent.
pub fn solve_rational(m: &IntMatrix, b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = m.rows();
    let cols = m.cols();
    assert_eq!(b.len(), rows);
    let mut a: Vec<Vec<Rat>> = (0..rows)
        .map(|i| {
            let mut r: Vec<Rat> = m.row(i).into_iter().map(Rat::from_integer).collect();
            r.push(b[i].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..=cols {
                let v = &f * &a[r][j];
                a[i][j] -= v;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if a[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = a[i][cols].clone();
    }
    Some(x)
}

/// Scales a rational vector to the primitive integer vector on the same ray.
/// Returns `None` for the zero vector.
pub fn clear_denominators(v: &[Rat]) -> Option<Vec<Int>> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let lcm = v.iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    super::primitive(&ints).ok()
}

pub fn rat_to_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().ok()?;
            let d: Int = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => s.parse::<Int>().ok().map(Rat::from_integer),
    }
}

/// `floor(x)` for a rational.
pub fn rat_floor(x: &Rat) -> Int {
    let (q, r) = x.numer().div_rem(x.denom());
    if r.is_negative() {
        q - 1
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(Int::from(n), Int::from(d))
    }

    #[test]
    fn solves_and_detects_inconsistency() {
        let m = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(solve_rational(&m, &[r(1, 1), r(1, 1)]), Some(vec![r(1, 2), r(1, 3)]));
        let m = IntMatrix::from_i64(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve_rational(&m, &[r(1, 1), r(3, 1)]), None);
        assert!(solve_rational(&m, &[r(1, 1), r(2, 1)]).is_some());
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rat_to_string(&r(-3, 6)), "-1/2");
        assert_eq!(rat_to_string(&r(4, 2)), "2");
        assert_eq!(parse_rat("-1/2"), Some(r(-1, 2)));
        assert_eq!(parse_rat("7"), Some(r(7, 1)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(rat_floor(&r(-1, 2)), Int::from(-1));
        assert_eq!(rat_floor(&r(5, 2)), Int::from(2));
    }

    #[test]
    fn denominators() {
        assert_eq!(
            clear_denominators(&[r(1, 2), r(1, 3)]),
            Some(vec![Int::from(3), Int::from(2)])
        );
        assert_eq!(clear_denominators(&[r(0, 1)]), None);
    }
}
