//! Bit-packed linear algebra over GF(2).

mod bitvec;
mod enumerate;
mod matrix;

pub use bitvec::BitVector;
pub use enumerate::{
    low_weight_dual_words, low_weight_dual_words_with, min_distance, support_search_size,
    DualEnumLimits, DualStrategy, DEFAULT_MIN_DISTANCE_CAP,
};
pub use matrix::BitMatrix;
