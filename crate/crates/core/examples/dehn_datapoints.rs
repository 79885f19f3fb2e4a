// Word lengths for the worst members of a complexity cell.

use ideal_complexity::metabelian::dehn_datapoint;
use ideal_complexity::{EnumerationBudget, Ideal, Ring};

pub fn run_example() -> ideal_complexity::Result<String> {
    let ideal = Ideal::parse(Ring::laurent(1), &["x1 - 1"])?;
    let budget = EnumerationBudget::default();
    let mut out = String::new();
    for n in 1..=3 {
        let p = dehn_datapoint(&ideal, 2, n, &budget)?;
        out += &format!(
            "m=2 n={n}: L={} bound={} witness {}\n",
            p.length, p.bound, p.witness
        );
    }
    Ok(out)
}

fn main() -> ideal_complexity::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
