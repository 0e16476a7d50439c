//! Weak tensor products on `Σ_1 × … × Σ_k`: the box and Fraser products,
//! the circle product of two MO lattices, β-joins, the axioms P1 to P4,
//! the `#` map, and coatom and automorphism structure.

mod axioms;
mod build;
mod coatoms;
mod factorization;
mod join;
mod sharp;
mod universe;

pub use axioms::{check_p1_p2_p3, check_p4, induced_automorphism, AxiomViolation, P4Violation};
pub use build::{
    box_product, build_product, circle_product, fraser_members, fraser_product, is_fraser_closed,
    mo_circle, mo_size, next_closure, ProductKind,
};
pub use coatoms::{coatom_structure, CoatomDecomposition, HalfCross};
pub use factorization::{check_factorization, Factorization, NonProduct};
pub use join::{beta_join, beta_sequence, box_join, fraser_join, in_xi};
pub use sharp::{sharp, sharp_map, SharpMap};
pub use universe::ProductUniverse;
