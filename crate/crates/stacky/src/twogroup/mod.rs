//! Crossed modules, strict 2-groups, second cohomology and the butterfly
//! classification of maps from a finite group into a 2-group.

pub mod butterfly;
pub mod cohomology;
pub mod crossed;

pub use butterfly::{
    butterflies_isomorphic, butterfly_isomorphism, butterfly_module, butterfly_validate, conjugate_class,
    hom_classes_split, is_fixed, pi2_module, torsor_act, Butterfly, ButterflyFailure, SplitClass, Torsor,
};
pub use cohomology::{coboundary, extension, h2, h2_with, is_cocycle, Cocycle, Extension, GammaModule, H2};
pub use crossed::{
    from_2group, roundtrip_check, semidirect_along, to_2group, CrossedModule, CrossedModuleData, HomotopyGroups,
    SemidirectAlong, StrictTwoGroup,
};
