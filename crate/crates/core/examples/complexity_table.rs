// A small complexity table written as CSV.

use ideal_complexity::{complexity_table, EnumerationBudget, Ideal, Ring};

pub fn run_example() -> ideal_complexity::Result<String> {
    let ideal = Ideal::parse(Ring::polynomial(1), &["x1 - 1"])?;
    let table = complexity_table(&ideal, 3, 3, &EnumerationBudget::default())?;
    table.to_csv()
}

fn main() -> ideal_complexity::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
