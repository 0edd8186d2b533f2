// The claims table and general checks over one group of the corpus.

use tmn::obstruction::SearchBudget;
use tmn::theorems::{verify_paper_corpus, CheckStatus};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let report = verify_paper_corpus(&SearchBudget::default(), Some("S:4"), false)?;
    for o in report.all() {
        println!("{:<14} {:<17} {}", o.check_id, o.status, o.details);
    }
    assert_eq!(report.count(CheckStatus::Fail), 0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
