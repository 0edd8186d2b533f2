// The spectrum N(m): G is T(m,n) exactly when n > N(m).

use tmn::analysis::Analysis;
use tmn::obstruction::{spectrum, tmn_from_spectrum, SearchBudget};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let a = Analysis::from_spec("S:4")?;
    let rows = spectrum(&a, None, &SearchBudget::default())?;
    println!("S4, w = {}", a.w());
    for r in &rows {
        println!(
            "  N({:>2}) = {}{}",
            r.m,
            r.n_max,
            if r.exact { "" } else { " (bound)" }
        );
    }
    assert_eq!(tmn_from_spectrum(&rows, 6, 3), Some(true));
    assert_eq!(tmn_from_spectrum(&rows, 6, 2), Some(false));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
