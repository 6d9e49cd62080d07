use alloc::vec::Vec;

use crate::canon::Permutations;
use crate::category::TwoObjectCategory;

/// Canonical key of a category under relabelling every hom-set while keeping
/// both objects in place: automorphisms on `A` and `B`, arbitrary
/// permutations on `L` and `R`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CategoryKey(Vec<usize>);

/// Key tables for fixed relabellings `alpha` (A), `beta` (B), `sigma` (L), `tau` (R).
fn relabeled_key(c: &TwoObjectCategory, alpha: &[usize], beta: &[usize], sigma: &[usize], tau: &[usize]) -> Vec<usize> {
    let (l, r) = (c.l(), c.r());
    let (na, nb, nl, nr) = (alpha.len(), beta.len(), sigma.len(), tau.len());
    let mut la = alloc::vec![0; na * nl];
    let mut lb = alloc::vec![0; nl * nb];
    let mut rb = alloc::vec![0; nb * nr];
    let mut ra = alloc::vec![0; nr * na];
    let mut lr = alloc::vec![0; nl * nr];
    let mut rl = alloc::vec![0; nr * nl];
    for x in 0..nl {
        for a in 0..na {
            la[alpha[a] * nl + sigma[x]] = sigma[l.act_left(a, x)];
        }
        for b in 0..nb {
            lb[sigma[x] * nb + beta[b]] = sigma[l.act_right(x, b)];
        }
        for y in 0..nr {
            lr[sigma[x] * nr + tau[y]] = alpha[c.lr(x, y)];
            rl[tau[y] * nl + sigma[x]] = beta[c.rl(y, x)];
        }
    }
    for y in 0..nr {
        for b in 0..nb {
            rb[beta[b] * nr + tau[y]] = tau[r.act_left(b, y)];
        }
        for a in 0..na {
            ra[tau[y] * na + alpha[a]] = tau[r.act_right(y, a)];
        }
    }
    [la, lb, rb, ra, lr, rl].concat()
}

pub fn category_key(c: &TwoObjectCategory) -> CategoryKey {
    let aut_a = c.a().automorphisms();
    let aut_b = c.b().automorphisms();
    let perms_r: Vec<Vec<usize>> = Permutations::new(c.r().carrier()).collect();
    let mut best: Option<Vec<usize>> = None;
    for alpha in &aut_a {
        for beta in &aut_b {
            for sigma in Permutations::new(c.l().carrier()) {
                for tau in &perms_r {
                    let k = relabeled_key(c, alpha, beta, &sigma, tau);
                    if best.as_ref().map_or(true, |b| k < *b) {
                        best = Some(k);
                    }
                }
            }
        }
    }
    CategoryKey(best.unwrap_or_default())
}
