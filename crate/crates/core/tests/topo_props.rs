use detsing::topo::{chi_bouquet, chi_cw, chi_smoothing, le_greuel_check, BouquetDescriptor, LeGreuel, MilnorData};
use proptest::prelude::*;

/// Every multiset of at most six sphere dimensions in 1..=4.
fn all_bouquets() -> Vec<BouquetDescriptor> {
    let mut out = vec![BouquetDescriptor::default()];
    let mut frontier = vec![vec![]];
    for _ in 0..6 {
        let mut next = Vec::new();
        for dims in &frontier {
            let last = dims.last().copied().unwrap_or(1);
            for k in last..=4u32 {
                let mut d = dims.clone();
                d.push(k);
                out.push(BouquetDescriptor::new(d.clone()));
                next.push(d);
            }
        }
        frontier = next;
    }
    out
}

#[test]
fn bouquet_matches_cw_model_exhaustively() {
    let all = all_bouquets();
    // C(4 + 6, 6) multisets of size <= 6 over four dimensions
    assert_eq!(all.len(), 210);
    for b in &all {
        assert_eq!(chi_bouquet(b), chi_cw(&b.cw_model()), "{:?}", b);
    }
}

#[test]
fn smoothing_matches_bouquet() {
    for mu in 0..=20usize {
        let surface = BouquetDescriptor::spheres(2, mu);
        assert_eq!(chi_smoothing(&MilnorData::codim2(2, mu as u64)).unwrap(), chi_bouquet(&surface));
        let mut dims = vec![2];
        dims.extend(std::iter::repeat(3).take(mu));
        let threefold = BouquetDescriptor::new(dims);
        assert_eq!(chi_smoothing(&MilnorData::codim2(3, mu as u64)).unwrap(), chi_bouquet(&threefold));
    }
}

fn holding() -> impl Strategy<Value = MilnorData> {
    (2usize..=3, 0u64..50, 0u64..50).prop_map(|(d, mu, slice)| {
        let b2 = if d == 3 { 1 } else { 0 };
        MilnorData::codim2(d, mu).with_polar(mu + slice + b2, slice)
    })
}

proptest! {
    #[test]
    fn perturbing_polar_multiplicity_breaks_the_identity(m in holding(), delta in 1u64..5) {
        prop_assert_eq!(le_greuel_check(&m), LeGreuel::Holds);
        let bumped = MilnorData { m_d: m.m_d.map(|x| x + delta), ..m.clone() };
        let expected_rhs = m.m_d.unwrap() as i64;
        prop_assert_eq!(le_greuel_check(&bumped), LeGreuel::Violated { lhs: expected_rhs + delta as i64, rhs: expected_rhs });
    }
}
