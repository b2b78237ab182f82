pub mod alg;
pub mod coalg;
pub mod cofree;
pub mod comodprod;
pub mod error;
pub mod extlab;
pub mod field;
pub mod grouphopf;
pub mod linalg;
pub mod recseq;
pub mod spin;

pub use coalg::{Coalgebra, FinAlgebra, Violation};
pub use error::{Error, Result};
pub use field::{Elem, Embedding, Field, FieldDescriptor};
pub use linalg::{Echelon, Matrix, Subspace};
