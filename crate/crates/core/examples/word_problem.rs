// Encoding polynomials as group words and deciding triviality.

use ideal_complexity::metabelian::Ordering;
use ideal_complexity::{collect, is_trivial, word_from_poly, GroupWord, Ideal, Poly, Ring};

pub fn run_example() -> ideal_complexity::Result<String> {
    let ring = Ring::laurent(2);
    let ideal = Ideal::parse(ring, &["x1 - x2", "3"])?;
    let mut out = String::new();
    for text in ["x1 - x2", "x1^2 - 2*x2^-1", "3*x1*x2"] {
        let g = Poly::parse(text, ring)?;
        let w = word_from_poly(&g, Ordering::Greedy);
        out += &format!(
            "{g}: {w} (length {}) trivial {}\n",
            w.len(),
            is_trivial(&w, &ideal)?
        );
    }
    let w = GroupWord::parse("x1 a X2 A x2 a X1", 2)?;
    let c = collect(&w);
    out += &format!("{w} collects to f = {}, q = {:?}\n", c.f, c.q.entries());
    Ok(out)
}

fn main() -> ideal_complexity::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
