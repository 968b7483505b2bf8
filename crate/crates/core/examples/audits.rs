//! Summation formulas for Betti numbers of lexsegment powers, checked
//! against the set sizes and the oracle.

use edgeideal::audit::{audit_power_betti_corollaries, audit_remark_closed_form};
use edgeideal::Family;

fn main() -> edgeideal::Result<()> {
    for report in [
        audit_remark_closed_form(3, 2)?,
        audit_power_betti_corollaries(&Family::Star { n: 3 }, 2)?,
        audit_power_betti_corollaries(&Family::Star { n: 3 }, 1)?,
    ] {
        println!("{} on {} t={}: {:?}", report.claim, report.instance, report.t, report.verdict);
        for r in &report.rows {
            println!(
                "  i={} formula={} alternate={:?} set-sizes={} oracle={}",
                r.i, r.expected, r.alternate, r.from_set_sizes, r.actual
            );
        }
    }
    Ok(())
}
