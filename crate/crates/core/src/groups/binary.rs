//! Linear substitutions of `(Y, Z)` carrying one split binary form to a
//! multiple of another, found through their roots on the projective line.

use std::collections::BTreeSet;

use crate::field::PrimeField;

/// Coefficients `c_k` of `Y^(n-k) Z^k`, `k = 0..=n`.
pub type BinaryForm = Vec<u64>;

/// A 2x2 matrix acting on `(Y, Z)` column vectors.
pub type Mobius = [[u64; 2]; 2];

fn eval(f: PrimeField, form: &BinaryForm, y: u64, z: u64) -> u64 {
    let n = form.len() as u64 - 1;
    form.iter().enumerate().fold(0, |acc, (k, &c)| {
        let k = k as u64;
        f.add(acc, f.mul(c, f.mul(f.pow(y, n - k), f.pow(z, k))))
    })
}

fn normalize(f: PrimeField, (y, z): (u64, u64)) -> (u64, u64) {
    if z != 0 {
        (f.mul(y, f.inv(z)), 1)
    } else {
        (1, 0)
    }
}

/// Rational roots on the projective line, or `None` unless the form has `n`
/// distinct ones.
fn roots(f: PrimeField, form: &BinaryForm) -> Option<Vec<(u64, u64)>> {
    let n = form.len() - 1;
    let mut out = Vec::new();
    if form[0] == 0 {
        out.push((1, 0));
    }
    out.extend((0..f.p()).filter(|&t| eval(f, form, t, 1) == 0).map(|t| (t, 1)));
    (out.len() == n).then_some(out)
}

fn apply(f: PrimeField, a: &Mobius, (y, z): (u64, u64)) -> (u64, u64) {
    (
        f.add(f.mul(a[0][0], y), f.mul(a[0][1], z)),
        f.add(f.mul(a[1][0], y), f.mul(a[1][1], z)),
    )
}

fn mat_mul(f: PrimeField, a: &Mobius, b: &Mobius) -> Mobius {
    let mut out = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = f.add(f.mul(a[i][0], b[0][j]), f.mul(a[i][1], b[1][j]));
        }
    }
    out
}

/// The matrix sending `(1:0), (0:1), (1:1)` to three distinct points.
fn frame(f: PrimeField, p1: (u64, u64), p2: (u64, u64), p3: (u64, u64)) -> Option<Mobius> {
    let det = f.sub(f.mul(p1.0, p2.1), f.mul(p2.0, p1.1));
    if det == 0 {
        return None;
    }
    let di = f.inv(det);
    let s = f.mul(f.sub(f.mul(p3.0, p2.1), f.mul(p2.0, p3.1)), di);
    let t = f.mul(f.sub(f.mul(p1.0, p3.1), f.mul(p3.0, p1.1)), di);
    if s == 0 || t == 0 {
        return None;
    }
    Some([[f.mul(s, p1.0), f.mul(t, p2.0)], [f.mul(s, p1.1), f.mul(t, p2.1)]])
}

fn adjugate(f: PrimeField, a: &Mobius) -> Mobius {
    [[a[1][1], f.neg(a[0][1])], [f.neg(a[1][0]), a[0][0]]]
}

/// Every `A` (up to scalars) with `dst(A v) = c src(v)`, together with `c`.
/// Both forms must have the same degree `n >= 3` and split into `n` distinct
/// rational roots; otherwise the result is empty.
pub fn mobius_maps(f: PrimeField, src: &BinaryForm, dst: &BinaryForm) -> Vec<(Mobius, u64)> {
    if src.len() != dst.len() || src.len() < 4 {
        return Vec::new();
    }
    let (Some(rs), Some(rd)) = (roots(f, src), roots(f, dst)) else {
        return Vec::new();
    };
    let targets: BTreeSet<(u64, u64)> = rd.iter().copied().collect();
    let from = adjugate(f, &frame(f, rs[0], rs[1], rs[2]).expect("distinct roots"));
    let probe = (0..f.p())
        .map(|t| (t, 1))
        .find(|&(y, z)| eval(f, src, y, z) != 0)
        .expect("a nonzero form has a non-root");
    let mut out = Vec::new();
    for &a in &rd {
        for &b in &rd {
            for &c in &rd {
                if a == b || b == c || a == c {
                    continue;
                }
                let Some(to) = frame(f, a, b, c) else { continue };
                let m = mat_mul(f, &to, &from);
                if rs.iter().all(|&r| targets.contains(&normalize(f, apply(f, &m, r)))) {
                    let (y, z) = apply(f, &m, probe);
                    let scale = f.mul(eval(f, dst, y, z), f.inv(eval(f, src, probe.0, probe.1)));
                    out.push((m, scale));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedral_roots_give_24_maps() {
        // Y Z (Y^4 + Z^4) over F_73
        let f = PrimeField::new(73).unwrap();
        let b: BinaryForm = vec![0, 1, 0, 0, 0, 1, 0];
        let maps = mobius_maps(f, &b, &b);
        assert_eq!(maps.len(), 24);
        for (m, c) in maps {
            for (y, z) in [(2, 5), (7, 1), (0, 3)] {
                let (u, v) = apply(f, &m, (y, z));
                assert_eq!(eval(f, &b, u, v), f.mul(c, eval(f, &b, y, z)));
            }
        }
    }

    #[test]
    fn unsplit_forms_give_nothing() {
        // Y^4 + Z^4 has no rational roots over F_13
        let f = PrimeField::new(13).unwrap();
        let b: BinaryForm = vec![1, 0, 0, 0, 1];
        assert!(mobius_maps(f, &b, &b).is_empty());
    }
}
