// Center, centralizers, derived series and Sylow counts.

use tmn::group::{build_group, GroupSpec};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let d8 = build_group(&GroupSpec::parse("D:8")?)?;
    let z: Vec<&str> = d8.center().iter().map(|x| d8.label(x)).collect();
    println!("Z(D8) = {{{}}}", z.join(", "));
    for x in d8.elements() {
        let c = d8.centralizer(x)?;
        println!("  |C({})| = {}", d8.label(x), c.len());
    }

    for expr in ["S:4", "A:5", "Q:16"] {
        let g = build_group(&GroupSpec::parse(expr)?)?;
        let series = g.derived_series();
        println!(
            "{expr}: derived series orders {:?}, length {:?}, nilpotent {}",
            series.orders(),
            series.derived_length,
            g.is_nilpotent()
        );
    }

    let a5 = build_group(&GroupSpec::parse("A:5")?)?;
    for p in a5.prime_divisors() {
        let s = a5.sylow_count(p)?;
        println!(
            "A5: {} Sylow {p}-subgroups of order {}, trivial intersection {}",
            s.count, s.subgroup_order, s.trivial_intersection
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
