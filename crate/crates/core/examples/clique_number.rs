// Clique number of the non-commuting graph, with a witness set.

use tmn::analysis::Analysis;
use tmn::clique::commuting_pair;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for spec in ["S:3", "D:8", "Q:8", "S:4", "A:5", "A:5*C:2"] {
        let a = Analysis::from_spec(spec)?;
        let c = a.clique();
        assert!(c.exhausted);
        assert!(commuting_pair(a.group(), &c.witness).is_none());
        println!("w({spec}) = {}", c.w);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
