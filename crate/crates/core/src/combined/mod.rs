//! Direct constructions for catenation combined with star and with
//! reversal, and the closed-form bounds on their sizes.

mod bounds;
mod cat_rev;
mod cat_star;

pub use bounds::{
    catenation_bound, composed_bound_cat_rev, composed_bound_cat_star, tight_bound_cat_rev,
    tight_bound_cat_star, upper_bound_cat_rev, upper_bound_cat_star, BoundCase, BoundQuery,
    StarCase,
};
pub use cat_rev::{cat_rev_construction, cat_rev_direct, CatRevConstruction, CatRevState};
pub use cat_star::{
    cat_star, cat_star_construction, cat_star_direct, CatStarConstruction, CatStarRoute,
    CatStarState,
};
