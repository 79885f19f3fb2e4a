//! Exact computation over finitely generated ideals of Z[x] and Z[x^±]:
//! membership through strong Gröbner bases, minimal area certificates,
//! the complexity function C(m, n), and the word problem in the
//! metabelian group Z^k ⋉ Z[x^±] / I.

pub mod area;
pub mod cli;
pub mod complexity;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod io;
pub mod metabelian;
pub mod parse;
pub mod poly;

pub use area::{area_exact, AreaCertificate, CertEntry, Pruning, SearchConfig, Sign};
pub use complexity::{complexity_table, complexity_value, ComplexityTable, EnumerationBudget};
pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, GroebnerOptions, MonomialOrder, NormalFormResult, OrderKind};
pub use ideal::{Ideal, Representation};
pub use metabelian::{collect, is_trivial, word_from_poly, CollectedForm, GroupWord};
pub use poly::{Degree, Exponent, Mode, Poly, Ring};
