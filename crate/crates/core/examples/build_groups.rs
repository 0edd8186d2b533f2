// Building groups from spec strings and from generators.

use tmn::group::{build_group, ingest_permutations, GroupSpec};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for expr in ["C:6", "D:8", "Q:8", "S:3", "A:4", "S:3*C:2"] {
        let g = build_group(&GroupSpec::parse(expr)?)?;
        println!(
            "{expr:<8} order {:>3}  abelian {}",
            g.order(),
            g.is_abelian()
        );
    }

    // S3 again, this time closed up from two permutations.
    let g = ingest_permutations("degree 3\n2 1 3\n2 3 1\n")?;
    assert_eq!(g.order(), 6);
    let labels: Vec<&str> = g.elements().map(|x| g.label(x)).collect();
    println!("<(1,2),(1,2,3)> = {{{}}}", labels.join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
