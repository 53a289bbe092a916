//! The gauge group of a 1-cocycle and its action on connections.

use crate::cochains::{Cochain1, Context};
use crate::error::{Error, Result};
use crate::groups::Elem;

/// A self-morphism `f` of a cocycle `z`: `f_{∂₀b} z(b) = z(b) f_{∂₁b}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaugeTransformation {
    pub f: Vec<Elem>,
}

impl GaugeTransformation {
    pub fn is_constant(&self) -> bool {
        self.f.windows(2).all(|w| w[0] == w[1])
    }
}

impl Context {
    pub fn is_gauge_transformation(&self, f: &[Elem], z: &Cochain1) -> bool {
        f.len() == self.poset().len() && self.is_morphism(f, z, z)
    }

    /// All gauge transformations of `z`, by propagating each base value along
    /// the spanning tree.
    pub fn gauge_group(&self, z: &Cochain1) -> Result<Vec<GaugeTransformation>> {
        if !self.is_cocycle1(z) {
            return Err(Error::PreconditionViolated("input is not a 1-cocycle".into()));
        }
        let mut out: Vec<GaugeTransformation> =
            self.all_morphisms(z, z)?.into_iter().map(|f| GaugeTransformation { f }).collect();
        out.sort();
        Ok(out)
    }

    /// Gauge transformations found by scanning every map `Σ₀ -> G`.
    pub fn gauge_group_raw(&self, z: &Cochain1, limit: u64) -> Result<Vec<GaugeTransformation>> {
        let n = self.poset().len();
        let order = self.group().order() as u64;
        let total = order
            .checked_pow(n as u32)
            .filter(|&t| t <= limit)
            .ok_or_else(|| Error::SearchLimitExceeded(format!("{order}^{n} maps exceed the limit {limit}")))?;
        let mut out = Vec::new();
        for mut k in 0..total {
            let mut f = vec![Elem::E; n];
            for slot in f.iter_mut().rev() {
                *slot = Elem::from_index((k % order) as usize);
                k /= order;
            }
            if self.is_gauge_transformation(&f, z) {
                out.push(GaugeTransformation { f });
            }
        }
        out.sort();
        Ok(out)
    }

    /// Pointwise product.
    pub fn gauge_compose(&self, a: &GaugeTransformation, b: &GaugeTransformation) -> GaugeTransformation {
        let g = self.group();
        GaugeTransformation { f: a.f.iter().zip(&b.f).map(|(&x, &y)| g.mul(x, y)).collect() }
    }

    pub fn gauge_inverse(&self, a: &GaugeTransformation) -> GaugeTransformation {
        GaugeTransformation { f: a.f.iter().map(|&x| self.group().inv(x)).collect() }
    }

    /// `α_g(u)(b) = g_{∂₀b} u(b) g_{∂₁b}⁻¹` for `u` inducing `z` and
    /// `g ∈ G(z)`.
    pub fn gauge_act(&self, t: &GaugeTransformation, u: &Cochain1, z: &Cochain1) -> Result<Cochain1> {
        if !self.is_cocycle1(z) || !self.is_gauge_transformation(&t.f, z) {
            return Err(Error::PreconditionViolated("not a gauge transformation of the cocycle".into()));
        }
        if self.induced_cocycle(u)? != *z {
            return Err(Error::WrongCocycle);
        }
        let inverse: Vec<Elem> = t.f.iter().map(|&x| self.group().inv(x)).collect();
        Ok(self.transport(u, &inverse))
    }
}
