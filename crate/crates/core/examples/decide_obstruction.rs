// Deciding T(m,n) and checking the obstruction certificate that comes back.

use tmn::analysis::Analysis;
use tmn::obstruction::{is_tmn, verify_certificate, SearchBudget, Status};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let budget = SearchBudget::default();
    let a = Analysis::from_spec("S:3*S:3")?;
    for (m, n) in [(3, 2), (7, 3), (8, 3)] {
        let d = is_tmn(&a, m, n, &budget)?;
        println!("S3xS3 T({m},{n}): {} ({} nodes)", d.status, d.nodes);
        if let Some(cert) = &d.certificate {
            verify_certificate(a.group(), cert, m, n)?;
            for part in cert.labelled(a.group()) {
                let labels: Vec<&str> = part.iter().map(|e| e.label.as_str()).collect();
                println!("    {{{}}}", labels.join(", "));
            }
        }
    }

    // A tiny budget gives up instead of guessing.
    let a5 = Analysis::from_spec("A:5")?;
    let d = is_tmn(&a5, 16, 3, &SearchBudget::with_nodes(1))?;
    assert_ne!(d.status, Status::IsTmn);
    println!("A5 T(16,3) with a 1-node budget: {}", d.status);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
