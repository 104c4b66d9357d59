use joq::sequences::{j3_val, k_val, m_val, x_val};
use joq::unrestricted::{
    basis, binet_qk, norm_closed, norm_direct, offset_grid, qk, qm, qm_binet, qm_linear, NormVariant,
    OffsetTriple,
};
use joq::{pow2, Rational};
use proptest::prelude::*;

fn int(v: i64) -> Rational {
    Rational::from(v)
}

fn triple() -> impl Strategy<Value = OffsetTriple> {
    (-6i64..=6, -6i64..=6, -6i64..=6).prop_map(|(a, b, c)| OffsetTriple::new(a, b, c))
}

#[test]
fn grid_has_canonical_triples_and_stays_in_range() {
    let grid = offset_grid(7);
    assert_eq!(grid.len(), 63);
    assert_eq!(&grid[..3], &[OffsetTriple::new(1, 2, 3), OffsetTriple::new(0, 0, 0), OffsetTriple::new(1, 0, -1)]);
    assert!(grid.iter().all(|t| [t.a, t.b, t.c].iter().all(|v| (-2..=3).contains(v))));
}

#[test]
fn qm_forms_agree_on_grid() {
    for t in offset_grid(7) {
        for n in -6..=12 {
            let direct = qm(n, &t);
            assert_eq!(qm_binet(n, &t).unwrap(), direct);
            assert_eq!(qm_linear(n, &t), direct);
            assert_eq!(qk(n, &t) - direct, joq::unrestricted::theta(&t).scale(&pow2(n)));
        }
    }
}

#[test]
fn basis_conjugates() {
    for t in offset_grid(7) {
        let b = basis(&t);
        assert_eq!(b.phi1.conjugate_scalars(), b.phi2);
    }
}

proptest! {
    #[test]
    fn k_splits_into_power_and_period(n in -40i64..80) {
        prop_assert_eq!(k_val(n), pow2(n) + m_val(n));
        prop_assert_eq!(m_val(n + 3), m_val(n));
        prop_assert_eq!(x_val(n + 3), x_val(n));
        let v = [2, -3, 1][n.rem_euclid(3) as usize];
        prop_assert_eq!(int(7) * j3_val(n), pow2(n + 1) - int(v));
    }

    #[test]
    fn binet_matches_direct(t in triple(), n in -15i64..25) {
        prop_assert_eq!(binet_qk(n, &t).unwrap(), qk(n, &t));
    }

    #[test]
    fn norm_variants(t in triple(), n in -12i64..20) {
        let direct = norm_direct(n, &t);
        prop_assert_eq!(&direct, &qk(n, &t).sum_of_squares());
        prop_assert_eq!(&norm_closed(n, &t, NormVariant::Corrected), &direct);
        let gap = norm_closed(n, &t, NormVariant::Stated) - &direct;
        prop_assert_eq!(gap, -(pow2(n + 1) * m_val(n - 1)));
    }

    #[test]
    fn recurrences_hold_off_grid(t in triple(), n in -15i64..25) {
        let step = qk(n + 2, &t) + qk(n + 1, &t) + qk(n, &t).scale(&int(2));
        prop_assert_eq!(qk(n + 3, &t), step);
    }
}
