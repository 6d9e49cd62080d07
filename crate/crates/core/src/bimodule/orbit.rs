use alloc::vec::Vec;

use super::{sorted_set, Bimodule};
use crate::grouplike::detect_grouplike;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Orbits of the maximal group of one acting monoid on the carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub side: Side,
    /// Group elements of the acting monoid, ascending.
    pub group: Vec<usize>,
    /// `G·x` (or `x·G`) for every carrier element `x`, ascending.
    pub orbit_of: Vec<Vec<usize>>,
    /// The distinct orbits, sorted.
    pub orbits: Vec<Vec<usize>>,
    /// `g ↦ g·x` is injective for every `x`.
    pub free: bool,
    /// Common orbit size, when all orbits have the same size.
    pub uniform_size: Option<usize>,
}

fn orbit(b: &Bimodule, side: Side, group: &[usize], x: usize) -> Vec<usize> {
    sorted_set(group.iter().map(|&g| match side {
        Side::Left => b.act_left(g, x),
        Side::Right => b.act_right(x, g),
    }))
}

/// `None` when the monoid acting on `side` is not grouplike.
pub fn group_orbit(b: &Bimodule, side: Side) -> Option<OrbitReport> {
    let m = match side {
        Side::Left => b.left(),
        Side::Right => b.right(),
    };
    let group = detect_grouplike(m)?.group().to_vec();
    let orbit_of: Vec<Vec<usize>> = (0..b.carrier()).map(|x| orbit(b, side, &group, x)).collect();
    let free = orbit_of.iter().all(|o| o.len() == group.len());
    let mut orbits = orbit_of.clone();
    orbits.sort();
    orbits.dedup();
    let uniform_size = match orbits.split_first() {
        Some((first, rest)) if rest.iter().all(|o| o.len() == first.len()) => Some(first.len()),
        _ => None,
    };
    Some(OrbitReport { side, group, orbit_of, orbits, free, uniform_size })
}

/// Every carrier element has `G·x = x·H = {0, …, |G|-1}` with both actions
/// free. `left_group` and `right_group` are the group parts of `A` and `B`.
pub fn orbit_condition_holds(b: &Bimodule, left_group: &[usize], right_group: &[usize]) -> bool {
    let g = left_group.len();
    if right_group.len() != g {
        return false;
    }
    let pinned: Vec<usize> = (0..g).collect();
    (0..b.carrier()).all(|x| orbit(b, Side::Left, left_group, x) == pinned && orbit(b, Side::Right, right_group, x) == pinned)
}
