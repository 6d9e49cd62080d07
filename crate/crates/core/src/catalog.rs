//! Named small structures that the counting results are stated against.
//!
//! Element labels `1, 2, 3` of the classical order-three list become indices
//! `0, 1, 2`; element `1` is the identity in every table.

use alloc::vec::Vec;

use crate::bimodule::Bimodule;
use crate::monoid::Monoid;

/// The four products `2·2, 3·3, 2·3, 3·2` of `C1..C7`, in the original 1-based labels.
pub const ORDER_THREE_PRODUCTS: [[usize; 4]; 7] = [
    [1, 3, 3, 3],
    [2, 2, 2, 2],
    [2, 3, 2, 3],
    [2, 3, 3, 2],
    [2, 2, 3, 3],
    [2, 3, 2, 2],
    [3, 2, 1, 1],
];

/// `C_i` for `i` in `1..=7`.
pub fn order_three(i: usize) -> Monoid {
    assert!((1..=7).contains(&i), "order-three monoids are numbered 1..=7");
    let [aa, bb, ab, ba] = ORDER_THREE_PRODUCTS[i - 1].map(|v| v - 1);
    Monoid::from_rows(&[[0, 1, 2], [1, aa, ab], [2, ba, bb]], 0).expect("catalog table is a monoid")
}

pub fn order_three_all() -> Vec<Monoid> {
    (1..=7).map(order_three).collect()
}

/// `Z_3` acting on three points by the cyclic shift on both sides.
pub fn z3_shift_bimodule() -> Bimodule {
    let z3 = Monoid::cyclic(3);
    let shift = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];
    Bimodule::from_parts(z3.clone(), z3, 3, &shift, &shift).expect("shift tables are well formed")
}

/// `Z_3` acting by the shift on the left and through the inversion
/// automorphism on the right: `y·a = y - a`.
pub fn z3_involution_bimodule() -> Bimodule {
    let z3 = Monoid::cyclic(3);
    let shift = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];
    let twisted = [[0, 2, 1], [1, 0, 2], [2, 1, 0]];
    Bimodule::from_parts(z3.clone(), z3, 3, &shift, &twisted).expect("twisted tables are well formed")
}
