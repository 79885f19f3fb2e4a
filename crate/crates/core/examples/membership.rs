// Deciding membership and extracting cofactors over Z.

use ideal_complexity::{Ideal, Poly, Ring};

pub fn run_example() -> ideal_complexity::Result<String> {
    let ring = Ring::polynomial(2);
    let ideal = Ideal::parse(ring, &["2*x1", "x1^2 - x2"])?;
    let mut out = String::new();
    for text in ["6*x1*x2", "x1^3 - x1*x2 + 4*x1", "x1 + 1"] {
        let g = Poly::parse(text, ring)?;
        if ideal.is_member(&g)? {
            let rep = ideal.representation(&g)?;
            let parts: Vec<String> = rep.cofactors.iter().map(|h| format!("({h})")).collect();
            out += &format!("{g} is a member, cofactors {}\n", parts.join(" "));
        } else {
            let nf = ideal.normal_form(&g)?;
            out += &format!("{g} is not a member, remainder {}\n", nf.remainder);
        }
    }
    Ok(out)
}

fn main() -> ideal_complexity::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
