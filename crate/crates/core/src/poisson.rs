//! The canonical Poisson algebra on x^a_i, p^a_i. Spectator variables z, λ, µ are central.

use crate::poly::{MultiPoly, Var};
use crate::ring::Ring;

pub type PoissonElement = MultiPoly;

/// `{f, g} = Σ (∂f/∂p)(∂g/∂x) − (∂f/∂x)(∂g/∂p)`, so that `{p, x} = 1`.
pub fn poisson_bracket(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let mut pairs: Vec<(u8, u8)> = Vec::new();
    for v in f.variables().into_iter().chain(g.variables()) {
        if let Var::X(a, i) | Var::P(a, i) = v {
            pairs.push((a, i));
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    let mut out = MultiPoly::zero();
    for (a, i) in pairs {
        let (x, p) = (Var::X(a, i), Var::P(a, i));
        out.add_assign(&f.derivative(p).mul(&g.derivative(x)));
        out.add_assign(&f.derivative(x).mul(&g.derivative(p)).neg());
    }
    out
}
