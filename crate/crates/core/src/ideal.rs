//! Ideals with a fixed generating set, membership and representations.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, GroebnerOptions, MonomialOrder, NormalFormResult};
use crate::poly::{Exponent, Mode, Poly, Ring};

/// An ideal of `Z[x]` or `Z[x^±]` together with an ordered generating set
/// `F = (f_1, …, f_s)`.
///
/// The Gröbner basis is computed on first use (default options) and cached.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Poly>,
    basis: OnceLock<Result<GroebnerBasis>>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal")
            .field("ring", &self.ring)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.generators == other.generators
    }
}

impl Eq for Ideal {}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// Cofactors `h_i` with `g = Σ h_i f_i`, and the area upper bound `Σ |h_i|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub cofactors: Vec<Poly>,
    pub area_bound: BigUint,
}

impl Ideal {
    pub fn new(ring: Ring, generators: Vec<Poly>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Invalid(
                "an ideal needs at least one generator".into(),
            ));
        }
        for g in &generators {
            ring.check_same(&g.ring())?;
            if g.is_zero() {
                return Err(Error::ZeroInput);
            }
        }
        Ok(Ideal {
            ring,
            generators,
            basis: OnceLock::new(),
        })
    }

    /// Parses each generator with the polynomial grammar.
    pub fn parse(ring: Ring, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| Poly::parse(s, ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    /// Number of generators `s`.
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// `D = max_i deg f_i`.
    pub fn max_degree(&self) -> u64 {
        self.generators
            .iter()
            .map(|g| g.degree().or_zero())
            .max()
            .unwrap_or(0)
    }

    /// The constant `5D` bounding cofactor degrees of minimal representations.
    pub fn degree_constant(&self) -> u64 {
        5 * self.max_degree()
    }

    /// Polynomials the Gröbner engine starts from: the (lifted) generators,
    /// followed in Laurent mode by `x_i·y_i − 1` for each variable.
    pub fn engine_sources(&self) -> Vec<Poly> {
        let mut out: Vec<Poly> = self
            .generators
            .iter()
            .map(Poly::lift_to_polynomial)
            .collect();
        if self.ring.mode == Mode::Laurent {
            let k = self.ring.nvars;
            let lifted = self.ring.lifted();
            for i in 0..k {
                let mut e = vec![0; 2 * k];
                e[i] = 1;
                e[k + i] = 1;
                out.push(
                    Poly::from_terms(lifted, [(1, Exponent::new(e)), (-1, Exponent::zero(2 * k))])
                        .expect("nonnegative exponents"),
                );
            }
        }
        out
    }

    /// Computes a Gröbner basis with explicit options (not cached).
    pub fn groebner_with(&self, opts: &GroebnerOptions) -> Result<GroebnerBasis> {
        let order = opts
            .order
            .clone()
            .unwrap_or_else(|| MonomialOrder::grevlex(self.ring.lifted().nvars));
        if order.nvars() != self.ring.lifted().nvars {
            return Err(Error::ModeMismatch(format!(
                "monomial order has {} variables, engine ring has {}",
                order.nvars(),
                self.ring.lifted().nvars
            )));
        }
        GroebnerBasis::compute(self.engine_sources(), order, opts)
    }

    /// The cached default Gröbner basis.
    pub fn groebner(&self) -> Result<&GroebnerBasis> {
        self.basis
            .get_or_init(|| self.groebner_with(&GroebnerOptions::default()))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn lift_checked(&self, g: &Poly) -> Result<Poly> {
        self.ring.check_same(&g.ring())?;
        Ok(g.lift_to_polynomial())
    }

    /// Normal form of the lifted element modulo the cached basis.
    pub fn normal_form(&self, g: &Poly) -> Result<NormalFormResult> {
        let lifted = self.lift_checked(g)?;
        self.groebner()?.normal_form(&lifted)
    }

    pub fn is_member(&self, g: &Poly) -> Result<bool> {
        let lifted = self.lift_checked(g)?;
        self.groebner()?.reduces_to_zero(&lifted)
    }

    /// Solves the representation problem for `g` using the cached basis.
    pub fn representation(&self, g: &Poly) -> Result<Representation> {
        representation_from_cofactors(g, self, self.groebner()?)
    }
}

/// Expresses `g` over the original generators by composing division
/// cofactors with the basis provenance. In Laurent mode `y_i` is mapped back
/// to `x_i^{-1}`, which sends the relations `x_i·y_i − 1` to zero.
pub fn representation_from_cofactors(
    g: &Poly,
    ideal: &Ideal,
    basis: &GroebnerBasis,
) -> Result<Representation> {
    let lifted = ideal.lift_checked(g)?;
    if basis.sources().len() != ideal.engine_sources().len() {
        return Err(Error::ModeMismatch(
            "basis was not built from this ideal".into(),
        ));
    }
    let src = basis.source_cofactors(&lifted)?.ok_or(Error::NotMember)?;
    let s = ideal.len();
    let cofactors: Vec<Poly> = match ideal.ring.mode {
        Mode::Polynomial => src.into_iter().take(s).collect(),
        Mode::Laurent => src
            .iter()
            .take(s)
            .map(|h| h.unlift(ideal.ring))
            .collect::<Result<_>>()?,
    };
    let mut check = Poly::zero(ideal.ring);
    for (h, f) in cofactors.iter().zip(&ideal.generators) {
        check += &(h * f);
    }
    if &check != g {
        return Err(Error::Invalid(
            "representation does not reproduce the element".into(),
        ));
    }
    let area_bound = cofactors.iter().map(Poly::norm).sum();
    Ok(Representation {
        cofactors,
        area_bound,
    })
}
