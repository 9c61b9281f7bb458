//! Gröbner bases and the ideal operations built on them.

mod buchberger;
mod ideal;
mod ops;

pub use buchberger::{buchberger, set_spair_limit, spair_limit, GroebnerBasis};
pub use ideal::{set_cache_audit, IdealHandle};
pub use ops::{
    colon_by_last_variable, colon_by_linear_form, colon_by_named_last_variable, colon_by_variable,
    colon_general, colon_ideal, degree_one_part, eliminate, has_linear_quotients, ideal_equal,
    initial_ideal, intersect, is_linearly_generated_mod, is_quadratic_gb, kernel_of_monomial_map,
    nonlinear_generator_degree, normal_form, variable_colon_formula,
};
