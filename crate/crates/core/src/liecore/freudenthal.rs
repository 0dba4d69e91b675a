//! Exact weight multiplicities via the Freudenthal recursion, plus the Weyl
//! dimension formula.  Everything is computed in doubled coordinates with
//! integer arithmetic only.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::weight::{dominant, RootFamily, Weight};

/// Positive roots in doubled coordinates.
fn positive_roots(family: RootFamily, rank: usize) -> Vec<Vec<i64>> {
    let mut roots = Vec::new();
    let mut root = |entries: &[(usize, i64)]| {
        let mut v = vec![0i64; rank];
        for &(i, x) in entries {
            v[i] = x;
        }
        roots.push(v);
    };
    for i in 0..rank {
        for j in i + 1..rank {
            root(&[(i, 2), (j, -2)]);
            if family != RootFamily::A {
                root(&[(i, 2), (j, 2)]);
            }
        }
        match family {
            RootFamily::B => root(&[(i, 2)]),
            RootFamily::C => root(&[(i, 4)]),
            _ => {}
        }
    }
    roots
}

/// Half-sum of the positive roots, doubled.
fn rho(family: RootFamily, rank: usize) -> Vec<i64> {
    let mut r = vec![0i64; rank];
    for alpha in positive_roots(family, rank) {
        for (a, b) in r.iter_mut().zip(alpha) {
            *a += b / 2;
        }
    }
    r
}

fn ip(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn add_scaled(a: &[i64], b: &[i64], k: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + k * y).collect()
}

/// Whether `mu − nu` is a nonnegative integer combination of simple roots
/// (both weights doubled, `nu` arbitrary but compared through its own
/// coordinates; callers pass dominant representatives).
fn below(family: RootFamily, mu: &[i64], nu: &[i64]) -> bool {
    let n = mu.len();
    let delta: Vec<i64> = mu.iter().zip(nu).map(|(a, b)| a - b).collect();
    let mut prefix = Vec::with_capacity(n);
    let mut s = 0i64;
    for &d in &delta {
        s += d;
        prefix.push(s);
    }
    match family {
        RootFamily::A => {
            prefix[..n - 1].iter().all(|&p| p >= 0 && p % 2 == 0) && prefix[n - 1] == 0
        }
        RootFamily::B => prefix.iter().all(|&p| p >= 0 && p % 2 == 0),
        RootFamily::C => {
            prefix[..n - 1].iter().all(|&p| p >= 0 && p % 2 == 0)
                && prefix[n - 1] >= 0
                && prefix[n - 1] % 4 == 0
        }
        RootFamily::D => {
            if n == 1 {
                return delta[0] == 0;
            }
            let head_ok = prefix[..n - 2].iter().all(|&p| p >= 0 && p % 2 == 0);
            let plus = prefix[n - 2] + delta[n - 1];
            let minus = prefix[n - 2] - delta[n - 1];
            head_ok && plus >= 0 && plus % 4 == 0 && minus >= 0 && minus % 4 == 0
        }
    }
}

type MemoKey = (RootFamily, Vec<i64>, Vec<i64>);

fn memo() -> &'static Mutex<HashMap<MemoKey, u64>> {
    static MEMO: OnceLock<Mutex<HashMap<MemoKey, u64>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn mult_rec(
    family: RootFamily,
    mu: &[i64],
    nu: &[i64],
    roots: &[Vec<i64>],
    rho_v: &[i64],
) -> u64 {
    if nu == mu {
        return 1;
    }
    if !below(family, mu, nu) {
        return 0;
    }
    let key = (family, mu.to_vec(), nu.to_vec());
    if let Some(&m) = memo().lock().unwrap().get(&key) {
        return m;
    }
    let mu_rho = add_scaled(mu, rho_v, 1);
    let nu_rho = add_scaled(nu, rho_v, 1);
    let denom = ip(&mu_rho, &mu_rho) - ip(&nu_rho, &nu_rho);
    assert!(denom > 0, "Freudenthal denominator must be positive below mu");
    let mut total: i64 = 0;
    for alpha in roots {
        let mut k = 1i64;
        loop {
            let shifted = add_scaled(nu, alpha, k);
            let dom = dominant(family, &Weight::from_doubled(shifted.clone()));
            if !below(family, mu, dom.doubled()) {
                break;
            }
            let m = mult_rec(family, mu, dom.doubled(), roots, rho_v);
            total += m as i64 * ip(&shifted, alpha);
            k += 1;
        }
    }
    assert!(2 * total % denom == 0, "Freudenthal division must be exact");
    let m = (2 * total / denom) as u64;
    memo().lock().unwrap().insert(key, m);
    m
}

/// Multiplicity of the `lam` weight space in the irreducible highest-weight
/// module V_mu (weights in standard coordinates; `lam` is canonicalized to
/// its dominant representative first).
pub fn weight_multiplicity(family: RootFamily, mu: &Weight, lam: &Weight) -> u64 {
    assert_eq!(mu.rank(), lam.rank(), "rank mismatch");
    let rank = mu.rank();
    let mu_dom = dominant(family, mu);
    assert_eq!(&mu_dom, mu, "highest weight must be dominant");
    let lam_dom = dominant(family, lam);
    let roots = positive_roots(family, rank);
    let rho_v = rho(family, rank);
    mult_rec(family, mu.doubled(), lam_dom.doubled(), &roots, &rho_v)
}

/// Dimension of V_mu by the Weyl dimension formula.
pub fn irrep_dimension(family: RootFamily, mu: &Weight) -> u64 {
    let rank = mu.rank();
    let rho_v = rho(family, rank);
    let mu_rho = add_scaled(mu.doubled(), &rho_v, 1);
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for alpha in positive_roots(family, rank) {
        num *= ip(&mu_rho, &alpha) as i128;
        den *= ip(&rho_v, &alpha) as i128;
        let g = gcd(num.abs(), den.abs());
        num /= g;
        den /= g;
    }
    assert_eq!(den.abs(), 1, "Weyl dimension must be integral");
    (num / den) as u64
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}
