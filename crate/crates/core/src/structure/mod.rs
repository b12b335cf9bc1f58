//! Structural series, Sylow theory, normal subgroups and recognition of the
//! simple groups whose elements all have prime-power order.

mod normal;
mod recognition;
mod series;
mod sylow;

pub use normal::{
    is_simple, is_simple_with, minimal_normal_subgroups, normal_subgroups, normal_subgroups_capped, socle,
    DEFAULT_CLASS_CAP,
};
pub use recognition::{identify_simple_eppo, is_quasisimple, SimpleEppoId, SZ32_ORDER};
pub use series::{
    derived_series, fitting_height, gamma_infinity, is_nilpotent, is_perfect, is_soluble,
    lower_central_series, soluble_radical, upper_fitting_series, SeriesChain, SeriesKind,
};
pub use sylow::{
    fitting_subgroup, frattini_of_p_group, is_extraspecial, p_core, p_prime_part_of_nilpotent,
    sylow_subgroup,
};
