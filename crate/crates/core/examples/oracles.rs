// The two independent oracles: element-level brute force and capacity packing.

use tmn::analysis::Analysis;
use tmn::obstruction::{brute_force_is_tmn, is_tmn, packing_oracle, SearchBudget};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let budget = SearchBudget::default();

    let d8 = Analysis::from_spec("D:8")?;
    for (m, n) in [(2, 2), (2, 3), (3, 2), (4, 1)] {
        let fast = is_tmn(&d8, m, n, &budget)?.status;
        let slow = brute_force_is_tmn(d8.group(), m, n)?.status;
        assert_eq!(fast, slow);
        println!("D8 T({m},{n}): {fast}");
    }

    // A5's twin partition is complete multipartite, so packing decides it too.
    let a5 = Analysis::from_spec("A:5")?;
    let caps = a5.twins().capacities();
    for (m, n) in [(9, 5), (9, 6), (8, 7), (8, 8)] {
        let p = packing_oracle(&caps, m, n);
        let d = is_tmn(&a5, m, n, &budget)?;
        assert_eq!(d.holds(), Some(!p.feasible));
        println!(
            "A5 T({m},{n}): {} (packing feasible: {})",
            d.status, p.feasible
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
