// Twin classes of the non-commuting graph and the complete multipartite test.

use tmn::analysis::Analysis;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for spec in ["S:3", "D:12", "A:5", "S:4"] {
        let a = Analysis::from_spec(spec)?;
        let tp = a.twins();
        println!(
            "{spec}: {} noncentral elements, {} edges, {} twin classes, complete multipartite {}",
            a.noncentral(),
            a.graph().edge_count(),
            tp.len(),
            tp.complete_multipartite()
        );
    }

    let a = Analysis::from_spec("D:8")?;
    let g = a.group();
    for class in a.twins().classes() {
        let members: Vec<&str> = class.members.iter().map(|&x| g.label(x)).collect();
        println!("  D8 class {{{}}}", members.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
