//! Independent membership test in the truncated ring
//! `Z[X_1, X_2, X_3] / (2X_1, 4X_2, 8X_3)`, degree ≤ 2, by integer lattice
//! reduction. Used only to validate the coefficient rule of the parent module.

use num_bigint::BigInt;

use super::{Monomial, QPolyNF};

const VARS: u32 = 3;

/// Monomials of degree ≤ 2 in `X_1..X_3`, in a fixed order.
pub fn truncated_monomials() -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for i in 1..=VARS {
        out.push(vec![(i, 1)]);
    }
    for i in 1..=VARS {
        for j in i..=VARS {
            out.push(if i == j { vec![(i, 2)] } else { vec![(i, 1), (j, 1)] });
        }
    }
    out
}

fn times_var(m: &Monomial, v: u32) -> Monomial {
    let mut out = m.clone();
    match out.iter_mut().find(|(i, _)| *i == v) {
        Some(entry) => entry.1 += 1,
        None => {
            out.push((v, 1));
            out.sort_unstable();
        }
    }
    out
}

/// A sublattice of `Z^k` in row echelon form.
#[derive(Debug, Clone)]
pub struct Lattice {
    /// (pivot column, row) with strictly increasing pivots and positive pivot entries.
    rows: Vec<(usize, Vec<i128>)>,
}

impl Lattice {
    pub fn from_generators(dim: usize, gens: Vec<Vec<i128>>) -> Self {
        let mut pending: Vec<Vec<i128>> = gens.into_iter().filter(|g| g.iter().any(|&x| x != 0)).collect();
        let mut rows = Vec::new();
        for col in 0..dim {
            loop {
                let mut active: Vec<usize> = (0..pending.len()).filter(|&r| pending[r][col] != 0).collect();
                if active.len() <= 1 {
                    break;
                }
                active.sort_by_key(|&r| pending[r][col].abs());
                let p = active[0];
                let piv = pending[p].clone();
                for &r in &active[1..] {
                    let q = pending[r][col] / piv[col];
                    for (x, y) in pending[r].iter_mut().zip(&piv) {
                        *x -= q * y;
                    }
                }
            }
            if let Some(r) = pending.iter().position(|g| g[col] != 0) {
                let mut row = pending.swap_remove(r);
                if row[col] < 0 {
                    row.iter_mut().for_each(|x| *x = -*x);
                }
                rows.push((col, row));
            }
            pending.retain(|g| g.iter().any(|&x| x != 0));
        }
        Self { rows }
    }

    pub fn contains(&self, v: &[i128]) -> bool {
        let mut v = v.to_vec();
        for (col, row) in &self.rows {
            if v[*col] % row[*col] != 0 {
                return false;
            }
            let q = v[*col] / row[*col];
            for (x, y) in v.iter_mut().zip(row) {
                *x -= q * y;
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// Every basis row has a single nonzero entry.
    pub fn is_diagonal(&self) -> bool {
        self.rows.iter().all(|(_, row)| row.iter().filter(|&&x| x != 0).count() == 1)
    }
}

/// The degree ≤ 2 part of `Q + 2^m A` (or of `Q` alone when `m` is `None`).
pub fn truncated_lattice(m: Option<u32>) -> Lattice {
    let monos = truncated_monomials();
    let index = |mono: &Monomial| monos.iter().position(|x| x == mono);
    let mut gens = Vec::new();
    for v in 1..=VARS {
        for base in monos.iter().filter(|b| b.iter().map(|&(_, e)| e).sum::<u32>() <= 1) {
            let mut g = vec![0i128; monos.len()];
            g[index(&times_var(base, v)).expect("degree <= 2")] = 1 << v;
            gens.push(g);
        }
    }
    if let Some(m) = m {
        for k in 0..monos.len() {
            let mut g = vec![0i128; monos.len()];
            g[k] = 1 << m;
            gens.push(g);
        }
    }
    Lattice::from_generators(monos.len(), gens)
}

#[derive(Debug, Clone, Default)]
pub struct GateReport {
    pub checked: u64,
    pub disagreements: Vec<String>,
    /// Whether every oracle lattice split along monomials.
    pub diagonal: bool,
}

/// Compares the coefficient rule (zero after normalizing, and membership in
/// `2^m R` for `m ≤ 3`) against the lattice oracle.
///
/// When the oracle lattices are diagonal, membership of a polynomial is
/// membership of each of its terms, and the rule reduces each term on its
/// own, so checking every single term with `|c| ≤ coeff_bound` covers every
/// polynomial with those coefficients. `samples` (dense coefficient vectors
/// in [`truncated_monomials`] order) cross-check that reduction directly.
pub fn gate(coeff_bound: i64, samples: &[Vec<i64>]) -> GateReport {
    let monos = truncated_monomials();
    let lattices: Vec<(Option<u32>, Lattice)> =
        [None, Some(0), Some(1), Some(2), Some(3)].into_iter().map(|m| (m, truncated_lattice(m))).collect();
    let mut report = GateReport { diagonal: lattices.iter().all(|(_, l)| l.is_diagonal()), ..Default::default() };
    let mut compare = |coeffs: &[i64]| {
        let raw = monos.iter().zip(coeffs).filter(|(_, &c)| c != 0).map(|(m, &c)| (m.clone(), BigInt::from(c)));
        let f = QPolyNF::from_terms(raw, VARS).expect("indices within bound");
        let v: Vec<i128> = coeffs.iter().map(|&c| c as i128).collect();
        for (m, lattice) in &lattices {
            let rule = match m {
                None => f.is_zero(),
                Some(m) => f.member_pow2_principal(*m).expect("m within bound"),
            };
            report.checked += 1;
            if rule != lattice.contains(&v) {
                report.disagreements.push(format!("{coeffs:?} m = {m:?}: rule says {rule}"));
            }
        }
    };
    for k in 0..monos.len() {
        for c in -coeff_bound..=coeff_bound {
            let mut coeffs = vec![0; monos.len()];
            coeffs[k] = c;
            compare(&coeffs);
        }
    }
    for s in samples {
        compare(s);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_basics() {
        let l = Lattice::from_generators(2, vec![vec![4, 6], vec![6, 9]]);
        assert!(l.contains(&[2, 3]));
        assert!(!l.contains(&[1, 0]));
        assert!(l.contains(&[0, 0]));
    }

    #[test]
    fn generators_lie_in_q() {
        let l = truncated_lattice(None);
        let monos = truncated_monomials();
        // 2*X1*X2 = (2X1)*X2 is in Q; X1 alone is not
        let mut v = vec![0i128; monos.len()];
        v[monos.iter().position(|m| m == &vec![(1, 1), (2, 1)]).unwrap()] = 2;
        assert!(l.contains(&v));
        let mut w = vec![0i128; monos.len()];
        w[1] = 1;
        assert!(!l.contains(&w));
    }

    #[test]
    fn gate_small() {
        let dense = vec![vec![3, 2, 4, 8, 6, 4, 2, 16, 8, 8], vec![0, 2, 4, 8, 2, 4, 2, 4, 8, 8]];
        let r = gate(8, &dense);
        assert!(r.diagonal);
        assert!(r.disagreements.is_empty(), "{:?}", r.disagreements);
        assert_eq!(r.checked, 5 * (10 * 17 + 2));
    }
}
