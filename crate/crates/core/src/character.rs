//! Characters of a finite abelian group.
//!
//! For `G = Z_{m_1} × … × Z_{m_r}` the character labelled by `a` is
//! `χ_a(b) = ∏_j exp(2πi·a_j b_j / m_j)`. The labelling `a ↦ χ_a` is a bijection
//! onto the character group; it depends on the chosen presentation of `G`.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::arith::gcd;
use crate::cyclotomic::{CyclotomicTable, IntPolynomial};
use crate::group::{Element, Group};
use crate::Result;

/// The character `χ_a` together with its order `L` and the cyclotomic
/// polynomial `Φ_L` used for exact zero tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    group: Group,
    label: usize,
    order: u64,
    /// `χ_a(b) = ω_L^{Σ_j multipliers[j]·b_j}`.
    multipliers: Vec<u64>,
    min_poly: IntPolynomial,
}

impl Character {
    pub fn new(group: &Group, label: &Element) -> Result<Self> {
        let index = group.index_of(label)?;
        let mut table = CyclotomicTable::new();
        Self::with_table(group, index, &mut table)
    }

    fn with_table(group: &Group, label: usize, table: &mut CyclotomicTable) -> Result<Self> {
        let coords = group.element_at(label)?.0;
        let order = group.order_of_coords(&coords);
        // a_j/m_j = (a_j/g_j)/o_j with o_j = m_j/g_j dividing L
        let multipliers = coords
            .iter()
            .zip(group.factors())
            .map(|(&a, &m)| {
                if a == 0 {
                    return 0;
                }
                let g = gcd(a, m);
                let o = m / g;
                ((a / g) % o) * (order / o) % order
            })
            .collect();
        let min_poly = table.ensure(order)?.clone();
        Ok(Character {
            group: group.clone(),
            label,
            order,
            multipliers,
            min_poly,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    /// The element `a` labelling `χ_a`.
    pub fn label(&self) -> Element {
        self.group.element_at(self.label).expect("valid label")
    }

    pub fn label_index(&self) -> usize {
        self.label
    }

    /// Order `L` of the character; its values are `L`-th roots of unity.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_principal(&self) -> bool {
        self.order == 1
    }

    /// `Φ_L`.
    pub fn min_poly(&self) -> &IntPolynomial {
        &self.min_poly
    }

    /// The exponent `e` with `χ(b) = ω_L^e`, for `b` given by index.
    pub fn exponent_at(&self, b: usize) -> u64 {
        let mut rest = b as u64;
        let mut e = 0u64;
        for (&m, &c) in self.group.factors().iter().zip(&self.multipliers).rev() {
            let digit = rest % m;
            rest /= m;
            e = (e + c * digit) % self.order;
        }
        e
    }

    /// Numeric `χ(b)`.
    pub fn value_at(&self, b: usize) -> Complex64 {
        let theta = 2.0 * core::f64::consts::PI * self.exponent_at(b) as f64 / self.order as f64;
        Complex64::new(libm::cos(theta), libm::sin(theta))
    }
}

/// All `v` characters of `group`, in label index order (principal first).
pub fn all_characters(group: &Group) -> Result<Vec<Character>> {
    let mut table = CyclotomicTable::for_divisors_of(group.exponent())?;
    (0..group.size())
        .map(|a| Character::with_table(group, a, &mut table))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgElem;
    use crate::cyclotomic::{char_value_approx, exponent_profile, is_zero_sum};
    use alloc::vec;
    use proptest::prelude::*;

    const TOL: f64 = crate::FLOAT_TOLERANCE;

    fn groups_up_to_16() -> Vec<Group> {
        [
            &[2][..],
            &[3],
            &[4],
            &[2, 2],
            &[5],
            &[6],
            &[7],
            &[8],
            &[2, 4],
            &[2, 2, 2],
            &[9],
            &[3, 3],
            &[10],
            &[11],
            &[12],
            &[2, 6],
            &[13],
            &[14],
            &[15],
            &[16],
            &[4, 4],
            &[2, 8],
            &[2, 2, 4],
            &[2, 2, 2, 2],
        ]
        .iter()
        .map(|f| Group::new(f).unwrap())
        .collect()
    }

    #[test]
    fn character_orders() {
        let orders = |f: &[u64]| -> Vec<u64> {
            all_characters(&Group::new(f).unwrap())
                .unwrap()
                .iter()
                .map(|c| c.order())
                .collect()
        };
        assert_eq!(orders(&[5]), vec![1, 5, 5, 5, 5]);
        assert_eq!(orders(&[2, 2]), vec![1, 2, 2, 2]);
        for g in groups_up_to_16() {
            let chars = all_characters(&g).unwrap();
            assert_eq!(chars.len(), g.size());
            assert_eq!(chars.iter().filter(|c| c.is_principal()).count(), 1);
            assert!(chars[0].is_principal());
        }
    }

    #[test]
    fn characters_are_homomorphisms_with_symmetric_labels() {
        for g in groups_up_to_16() {
            let chars = all_characters(&g).unwrap();
            for chi in &chars {
                for a in 0..g.size() {
                    for b in 0..g.size() {
                        let lhs = chi.value_at(g.add_index(a, b));
                        assert!((lhs - chi.value_at(a) * chi.value_at(b)).norm() < TOL);
                    }
                    // χ_a(g) = χ_g(a)
                    let swapped = chars[a].value_at(chi.label_index());
                    assert!((swapped - chi.value_at(a)).norm() < TOL);
                }
            }
        }
    }

    #[test]
    fn orthogonality() {
        for g in groups_up_to_16() {
            let chars = all_characters(&g).unwrap();
            let v = g.size() as f64;
            for chi in &chars {
                for psi in &chars {
                    let s: Complex64 = (0..g.size())
                        .map(|b| chi.value_at(b).conj() * psi.value_at(b))
                        .sum();
                    let expected = if chi == psi { v } else { 0.0 };
                    assert!((s - Complex64::new(expected, 0.0)).norm() < 1e-8);
                    // exact route: conj(χ)·ψ is the character labelled by ψ − χ
                    let diff = &chars[g.sub_index(psi.label_index(), chi.label_index())];
                    let all =
                        AlgElem::from_indices(&g, &(0..g.size()).collect::<Vec<_>>()).unwrap();
                    assert_eq!(is_zero_sum(diff, &all).unwrap(), chi != psi);
                }
            }
        }
    }

    #[test]
    fn parseval_example() {
        let z4 = Group::cyclic(4).unwrap();
        let s = AlgElem::from_indices(&z4, &[0, 1]).unwrap();
        let norms: Vec<f64> = all_characters(&z4)
            .unwrap()
            .iter()
            .map(|c| char_value_approx(c, &s).unwrap().norm_sqr())
            .collect();
        for (n, e) in norms.iter().zip([4.0, 2.0, 0.0, 2.0]) {
            assert!((n - e).abs() < TOL);
        }
    }

    fn group_and_two_elems() -> impl Strategy<Value = (Group, Vec<i64>, Vec<i64>)> {
        prop::sample::select(groups_up_to_16()).prop_flat_map(|g| {
            let n = g.size();
            (
                Just(g),
                prop::collection::vec(-2i64..=2, n),
                prop::collection::vec(-2i64..=2, n),
            )
        })
    }

    proptest! {
        #[test]
        fn convolution_theorem_and_conjugation((g, a, b) in group_and_two_elems()) {
            let a = AlgElem::from_coeffs(&g, a).unwrap();
            let b = AlgElem::from_coeffs(&g, b).unwrap();
            let ab = a.convolve(&b).unwrap();
            for chi in all_characters(&g).unwrap() {
                let va = char_value_approx(&chi, &a).unwrap();
                let vb = char_value_approx(&chi, &b).unwrap();
                prop_assert!((char_value_approx(&chi, &ab).unwrap() - va * vb).norm() < TOL);
                prop_assert!((char_value_approx(&chi, &a.invert_support()).unwrap() - va.conj()).norm() < TOL);
                // the same identity on exponent profiles is exact
                let pa = exponent_profile(&chi, &a).unwrap();
                let pb = exponent_profile(&chi, &b).unwrap();
                let prod = pa.product(&pb).unwrap();
                let direct = exponent_profile(&chi, &ab).unwrap();
                let diff: Vec<i64> = prod.counts().iter().zip(direct.counts()).map(|(x, y)| x - y).collect();
                let diff = crate::cyclotomic::ExponentProfile::new(chi.order(), diff).unwrap();
                prop_assert!(diff.is_zero_by_division(chi.min_poly()).unwrap());
            }
        }

        #[test]
        fn parseval((g, a, _b) in group_and_two_elems()) {
            let s: Vec<usize> = a.iter().enumerate().filter(|(_, &c)| c > 0).map(|(i, _)| i).collect();
            let ind = AlgElem::from_indices(&g, &s).unwrap();
            let total: f64 = all_characters(&g).unwrap().iter().map(|c| char_value_approx(c, &ind).unwrap().norm_sqr()).sum();
            prop_assert!((total - (g.size() * s.len()) as f64).abs() < 1e-8);
        }
    }
}
