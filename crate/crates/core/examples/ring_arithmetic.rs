// Sparse Laurent arithmetic: parsing, products, norm and degree.

use ideal_complexity::{Poly, Ring};

pub fn run_example() -> ideal_complexity::Result<String> {
    let ring = Ring::laurent(2);
    let f = Poly::parse("x1 - x2^-1", ring)?;
    let g = Poly::parse("x1^-1 + 2*x2", ring)?;
    let prod = &f * &g;
    let mut out = String::new();
    out += &format!("({f}) * ({g}) = {prod}\n");
    out += &format!("norm {} degree {}\n", prod.norm(), prod.degree().or_zero());
    // cancellation keeps the representation sparse
    let back = &prod - &(&f * &g);
    out += &format!("difference with itself: {back}\n");
    Ok(out)
}

fn main() -> ideal_complexity::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
