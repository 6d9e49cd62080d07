use alloc::vec::Vec;

use super::EngineError;
use crate::bimodule::{compatible_pairs, Bimodule, UnigenError};
use crate::category::{compute_imax, validate_category, TwoObjectCategory};
use crate::grouplike::detect_grouplike;
use crate::monoid::Monoid;

/// Input to [`construct`]: a bimodule pair, the target `i_max` and the
/// generators `x_i ∈ L_i`, `y_i ∈ R_i` that become mutually inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub l: Bimodule,
    pub r: Bimodule,
    pub i: usize,
    pub x: usize,
    pub y: usize,
}

impl ConstructionSpec {
    pub fn a(&self) -> &Monoid {
        self.l.left()
    }

    pub fn b(&self) -> &Monoid {
        self.l.right()
    }
}

/// Every spec the pair `(L, R)` admits. Levels where the pair is not strongly
/// unigen contribute nothing. At level 0 the generator `x_0` is fixed to the
/// smallest one and `y_0` ranges over its compatible partners.
pub fn construction_specs(l: &Bimodule, r: &Bimodule) -> Result<Vec<ConstructionSpec>, EngineError> {
    let sa = detect_grouplike(l.left()).ok_or(EngineError::NotGrouplike)?;
    let sb = detect_grouplike(l.right()).ok_or(EngineError::NotGrouplike)?;
    let mut specs = Vec::new();
    for i in 0..=sa.k().min(sb.k()) {
        let pairs = match compatible_pairs(l, r, i) {
            Ok(p) => p,
            Err(UnigenError::Fails { .. }) => continue,
            Err(UnigenError::Mismatch) => return Err(EngineError::InvalidInput("R is not opposite to L")),
            Err(e) => return Err(EngineError::Unigen(e)),
        };
        let Some(x0) = pairs.iter().map(|(cx, _)| cx.generator).min() else {
            continue;
        };
        for (cx, cy) in pairs.iter().filter(|(cx, _)| cx.generator == x0) {
            specs.push(ConstructionSpec { l: l.clone(), r: r.clone(), i, x: cx.generator, y: cy.generator });
        }
    }
    Ok(specs)
}

/// Builds the unique category described by `spec`: on the core `L_i × R_i` the
/// composites are read off the generators, and everything else factors as
/// `x'·y' = (e_i·x')·(y'·e_i)`, `y'·x' = (f_i·y')·(x'·f_i)`.
pub fn construct(spec: &ConstructionSpec) -> Result<TwoObjectCategory, EngineError> {
    let (l, r, i) = (&spec.l, &spec.r, spec.i);
    let sa = detect_grouplike(l.left()).ok_or(EngineError::NotGrouplike)?;
    let sb = detect_grouplike(l.right()).ok_or(EngineError::NotGrouplike)?;
    let pairs = compatible_pairs(l, r, i).map_err(EngineError::Unigen)?;
    if !pairs.iter().any(|(cx, cy)| cx.generator == spec.x && cy.generator == spec.y) {
        return Err(EngineError::SpecViolation("generators do not induce mutually inverse isomorphisms"));
    }
    let (a, b) = (l.left(), l.right());
    let (ei, fi) = (sa.idempotent(i), sb.idempotent(i));
    let (ai, bi) = (sa.stage(i), sb.stage(i));
    let (x, y) = (spec.x, spec.y);
    let (nl, nr) = (l.carrier(), r.carrier());

    // Coordinates: u ∈ L_i is g·x (g ∈ A_i) and x·h (h ∈ B_i); likewise for R_i.
    let solve = |stage: &[usize], f: &dyn Fn(usize) -> usize, target: usize| {
        stage.iter().copied().find(|&s| f(s) == target).expect("unigen bijection")
    };
    let left_of_l: Vec<usize> = (0..nl).map(|u| solve(&ai, &|g| l.act_left(g, x), l.act_left(ei, u))).collect();
    let right_of_l: Vec<usize> = (0..nl).map(|u| solve(&bi, &|h| l.act_right(x, h), l.act_right(u, fi))).collect();
    let left_of_r: Vec<usize> = (0..nr).map(|v| solve(&bi, &|h| r.act_left(h, y), r.act_left(fi, v))).collect();
    let right_of_r: Vec<usize> = (0..nr).map(|v| solve(&ai, &|g| r.act_right(y, g), r.act_right(v, ei))).collect();

    let comp_lr: Vec<usize> = left_of_l.iter().flat_map(|&g| right_of_r.iter().map(move |&h| a.mul(g, h))).collect();
    let comp_rl: Vec<usize> = left_of_r.iter().flat_map(|&g| right_of_l.iter().map(move |&h| b.mul(g, h))).collect();
    let c = TwoObjectCategory::from_flat(l.clone(), r.clone(), comp_lr, comp_rl);
    validate_category(&c).map_err(EngineError::Category)?;
    if compute_imax(&c).map_err(EngineError::Category)?.i_max != i {
        return Err(EngineError::SpecViolation("constructed category has the wrong i_max"));
    }
    Ok(c)
}

/// All categories the construction path yields for `(L, R)`, grouped by spec.
pub fn construct_all(l: &Bimodule, r: &Bimodule) -> Result<Vec<(usize, TwoObjectCategory)>, EngineError> {
    construction_specs(l, r)?.iter().map(|s| construct(s).map(|c| (s.i, c))).collect()
}
