// Moving a certificate between two generating sets of the same ideal.

use ideal_complexity::area::{conversion_constant, convert_representation, verify_certificate};
use ideal_complexity::{area_exact, Ideal, Poly, Ring, SearchConfig};

pub fn run_example() -> ideal_complexity::Result<String> {
    let ring = Ring::polynomial(1);
    let small = Ideal::parse(ring, &["2", "x1"])?;
    let large = Ideal::parse(ring, &["2", "x1", "x1 + 2"])?;
    let (one, zero) = (Poly::one(ring), Poly::zero(ring));
    // rows express the generators of `small` through those of `large`
    let matrix = vec![
        vec![one.clone(), zero.clone(), zero.clone()],
        vec![zero, one.clone(), Poly::zero(ring)],
    ];
    let g = Poly::parse("4 + 3*x1", ring)?;
    let cert = area_exact(&g, &small, &SearchConfig::default())?;
    let moved = convert_representation(&cert, &small, &large, &matrix)?;
    let direct = area_exact(&g, &large, &SearchConfig::default())?;
    Ok(format!(
        "area over small {}, converted {} (valid {}), direct over large {}, constant {}\n",
        cert.area(),
        moved.area(),
        verify_certificate(&moved, &large).valid,
        direct.area(),
        conversion_constant(&matrix)
    ))
}

fn main() -> ideal_complexity::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
