// Exporting a Cayley table, reading it back, and the ingest error classes.

use tmn::group::{build_group, ingest_cayley, GroupSpec};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let q8 = build_group(&GroupSpec::parse("Q:8")?)?;
    let text = q8.to_cayley();
    let back = ingest_cayley(&text)?;
    assert_eq!(back.order(), 8);
    assert!(q8
        .elements()
        .all(|x| q8.elements().all(|y| q8.mul(x, y) == back.mul(x, y))));
    println!(
        "Q8 round-trips through a {}-line Cayley file",
        text.lines().count()
    );

    let bad = [
        ("parse", "order two\n"),
        ("latin-square", "order 2\n0 1\n1 1\n"),
        (
            "associativity",
            "order 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n",
        ),
    ];
    for (what, text) in bad {
        let e = ingest_cayley(text).unwrap_err();
        println!("{what:<13} -> {e}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
