//! Brute-force oracles for tests. Everything here is independent of the
//! production reduction code: plain `i64` column operations and breadth-first
//! enumeration, nothing shared with `snf`.

use std::collections::{HashSet, VecDeque};

/// Triangular basis of the lattice spanned by `gens` in `Z^dim`, by naive
/// integer column elimination. Returns `(pivot_row, column)` pairs with
/// strictly increasing pivot rows and positive pivots.
pub(crate) fn triangular_basis(dim: usize, gens: &[Vec<i64>]) -> Vec<(usize, Vec<i64>)> {
    let mut cols: Vec<Vec<i64>> = gens.iter().filter(|c| c.iter().any(|&v| v != 0)).cloned().collect();
    for c in &cols {
        assert_eq!(c.len(), dim);
    }
    let mut basis = Vec::new();
    for row in 0..dim {
        loop {
            let mut live: Vec<usize> =
                (0..cols.len()).filter(|&j| cols[j][row] != 0).collect();
            if live.is_empty() {
                break;
            }
            if live.len() == 1 {
                let mut piv = cols.remove(live[0]);
                if piv[row] < 0 {
                    for v in piv.iter_mut() {
                        *v = -*v;
                    }
                }
                basis.push((row, piv));
                break;
            }
            // Euclid on the two columns with the smallest entries at `row`.
            live.sort_by_key(|&j| cols[j][row].unsigned_abs());
            let (a, b) = (live[0], live[1]);
            let q = cols[b][row].div_euclid(cols[a][row]);
            for i in 0..dim {
                cols[b][i] -= q * cols[a][i];
            }
        }
    }
    basis
}

/// Reduce `v` to its canonical representative modulo the lattice.
fn reduce_mod(basis: &[(usize, Vec<i64>)], v: &mut [i64]) {
    for (row, col) in basis {
        let q = v[*row].div_euclid(col[*row]);
        if q != 0 {
            for i in *row..v.len() {
                v[i] -= q * col[i];
            }
        }
    }
}

/// Enumerate `Z^dim / <gens>` by breadth-first search over generator steps.
/// Returns the sorted multiset of element orders, or `None` if infinite.
pub(crate) fn enumerate_quotient(dim: usize, gens: &[Vec<i64>]) -> Option<Vec<u64>> {
    let basis = triangular_basis(dim, gens);
    if basis.len() < dim {
        return None; // a free direction survives
    }
    let zero = vec![0i64; dim];
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(zero.clone());
    queue.push_back(zero.clone());
    while let Some(v) = queue.pop_front() {
        for i in 0..dim {
            let mut w = v.clone();
            w[i] += 1;
            reduce_mod(&basis, &mut w);
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }

    let mut orders: Vec<u64> = seen
        .iter()
        .map(|e| {
            let mut acc = zero.clone();
            let mut n = 0u64;
            loop {
                for i in 0..dim {
                    acc[i] += e[i];
                }
                reduce_mod(&basis, &mut acc);
                n += 1;
                if acc == zero {
                    return n;
                }
            }
        })
        .collect();
    orders.sort();
    Some(orders)
}

/// Sorted element-order multiset of `Z/t1 (+) ... (+) Z/tk`.
pub(crate) fn order_multiset(torsion: &[i64]) -> Vec<u64> {
    let mut tuples = vec![vec![]];
    for &t in torsion {
        let mut next = Vec::new();
        for tup in &tuples {
            for v in 0..t {
                let mut w: Vec<i64> = tup.clone();
                w.push(v);
                next.push(w);
            }
        }
        tuples = next;
    }
    let mut orders: Vec<u64> = tuples
        .iter()
        .map(|tup| {
            tup.iter()
                .zip(torsion)
                .map(|(&c, &t)| (t / gcd(t, c)) as u64)
                .fold(1u64, lcm)
        })
        .collect();
    orders.sort();
    orders
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a as i64, b as i64) as u64 * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_of_diag_2_3() {
        let orders = enumerate_quotient(2, &[vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(orders, order_multiset(&[6])); // Z/2 x Z/3 = Z/6
    }

    #[test]
    fn infinite_quotient_detected() {
        assert!(enumerate_quotient(2, &[vec![2, 0]]).is_none());
    }
}
