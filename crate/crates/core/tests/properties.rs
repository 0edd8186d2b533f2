use std::sync::OnceLock;

use proptest::prelude::*;
use tmn::analysis::Analysis;
use tmn::group::ingest_cayley;
use tmn::obstruction::{is_tmn, verify_certificate, SearchBudget, Status};

const SPECS: [&str; 8] = ["S:3", "D:8", "Q:8", "D:12", "A:4", "D:16", "Q:16", "S:4"];

fn analyses() -> &'static Vec<Analysis> {
    static CELL: OnceLock<Vec<Analysis>> = OnceLock::new();
    CELL.get_or_init(|| {
        SPECS
            .iter()
            .map(|s| Analysis::from_spec(s).unwrap())
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn obstructions_shrink(gi in 0..SPECS.len(), m in 2usize..8, n in 1usize..6) {
        let a = &analyses()[gi];
        let d = is_tmn(a, m, n, &SearchBudget::default()).unwrap();
        prop_assert_ne!(d.status, Status::Unknown);
        if let Some(cert) = d.certificate {
            prop_assert!(m * n <= a.noncentral());
            if m > 2 {
                prop_assert!(verify_certificate(a.group(), &cert.drop_part(0), m - 1, n).is_ok());
            }
            if n > 1 {
                prop_assert!(verify_certificate(a.group(), &cert.shrink_parts(), m, n - 1).is_ok());
            }
        } else {
            // T(m,n) passes upward in both parameters.
            let up_m = is_tmn(a, m + 1, n, &SearchBudget::default()).unwrap();
            let up_n = is_tmn(a, m, n + 1, &SearchBudget::default()).unwrap();
            prop_assert_eq!(up_m.status, Status::IsTmn);
            prop_assert_eq!(up_n.status, Status::IsTmn);
        }
    }

    #[test]
    fn cayley_round_trip(gi in 0..SPECS.len()) {
        let g = analyses()[gi].group();
        let back = ingest_cayley(&g.to_cayley()).unwrap();
        prop_assert_eq!(back.order(), g.order());
        for x in g.elements() {
            for y in g.elements() {
                prop_assert_eq!(back.mul(x, y), g.mul(x, y));
            }
        }
    }

    #[test]
    fn singletons_match_clique_number(gi in 0..SPECS.len(), m in 2usize..14) {
        let a = &analyses()[gi];
        let d = is_tmn(a, m, 1, &SearchBudget::default()).unwrap();
        prop_assert_eq!(d.status == Status::IsTmn, a.w() < m);
    }
}
