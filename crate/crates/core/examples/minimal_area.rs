// Exact area search with a checked certificate.

use ideal_complexity::area::verify_certificate;
use ideal_complexity::{area_exact, Ideal, Poly, Pruning, Ring, SearchConfig};

pub fn run_example() -> ideal_complexity::Result<String> {
    let ring = Ring::laurent(1);
    let ideal = Ideal::parse(ring, &["x1 - 1"])?;
    let g = Poly::parse("x1^4 - 1", ring)?;
    let cfg = SearchConfig {
        pruning: Pruning::Connectivity,
        ..SearchConfig::with_max_area(12)
    };
    let cert = area_exact(&g, &ideal, &cfg)?;
    let check = verify_certificate(&cert, &ideal);
    let mut out = format!("area {}\n{}", cert.area(), cert.to_text());
    out += &format!(
        "valid {} cofactor degree {} within {}\n",
        check.valid,
        check.max_cofactor_degree.or_zero(),
        check.degree_limit
    );
    Ok(out)
}

fn main() -> ideal_complexity::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
