//! Exact computations with planar diagram algebras over table algebras,
//! tabular bases with trace, and generalized Temperley-Lieb algebras.

pub mod acceptance;
pub mod coeff;
pub mod coxeter;
pub mod diagram;
pub mod embed;
pub mod error;
pub mod hecke;
pub mod planar;
pub mod table_algebra;
pub mod tabular;
pub mod tl;
pub mod verlinde;

pub use coeff::{Degree, LaurentInt, QSqrt2};
pub use diagram::{HalfDiagram, LabeledDiagram, PlanarMatching};
pub use error::{Error, Result};
pub use planar::{PlanarContext, PlanarElement};
pub use table_algebra::{TAElement, TaCheckReport, TableAlgebra};
pub use tabular::{AxiomsReport, TabularDatum};
pub use verlinde::VerlindeAlgebra;
