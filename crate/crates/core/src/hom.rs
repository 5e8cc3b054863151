use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement};
use crate::subgroup::Subgroup;

/// Homomorphism given by the images of the source's reference generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupHom {
    source: AbelianGroup,
    target: AbelianGroup,
    images: Vec<GroupElement>,
}

impl GroupHom {
    /// Checks shapes and well-definedness (`d_i * images[i] = 0`).
    pub fn new(source: AbelianGroup, target: AbelianGroup, images: Vec<GroupElement>) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(Error::InvalidArgument(format!(
                "{} images given for {} generators",
                images.len(),
                source.rank()
            )));
        }
        for (img, &d) in images.iter().zip(source.generator_orders()) {
            target.check(img)?;
            if !target.scalar_mul_unchecked(d as i128, img).is_zero() {
                return Err(Error::NotAutomorphism(format!(
                    "image {img} of a generator of order {d} does not have order dividing {d}"
                )));
            }
        }
        Ok(Self { source, target, images })
    }

    pub fn identity(g: &AbelianGroup) -> Self {
        let images = (0..g.rank()).map(|i| g.basis_element(i)).collect();
        Self { source: g.clone(), target: g.clone(), images }
    }

    pub fn source(&self) -> &AbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &AbelianGroup {
        &self.target
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    pub fn apply(&self, g: &GroupElement) -> Result<GroupElement> {
        self.source.check(g)?;
        Ok(self.apply_unchecked(g))
    }

    pub(crate) fn apply_unchecked(&self, g: &GroupElement) -> GroupElement {
        let d = self.target.generator_orders();
        let mut acc = vec![0u128; d.len()];
        for (&c, img) in g.coords().iter().zip(&self.images) {
            if c == 0 {
                continue;
            }
            for ((slot, &x), &dj) in acc.iter_mut().zip(img.coords()).zip(d) {
                *slot = (*slot + c as u128 % dj as u128 * x as u128) % dj as u128;
            }
        }
        GroupElement(acc.into_iter().map(|x| x as u64).collect())
    }

    /// `self` after `first`: x -> self(first(x)).
    pub fn compose(&self, first: &GroupHom) -> Result<GroupHom> {
        if first.target != self.source {
            return Err(Error::AmbientMismatch { expected: self.source.to_string() });
        }
        let images = first.images.iter().map(|x| self.apply_unchecked(x)).collect();
        Ok(GroupHom { source: first.source.clone(), target: self.target.clone(), images })
    }

    pub fn image_of(&self, s: &Subgroup) -> Result<Subgroup> {
        if s.ambient() != &self.source {
            return Err(Error::AmbientMismatch { expected: self.source.to_string() });
        }
        let gens: Vec<_> = s.basis().iter().map(|b| self.apply_unchecked(b)).collect();
        Subgroup::from_generators(&self.target, &gens)
    }

    /// Bijective endomorphism: the image generates the whole group.
    pub fn is_automorphism(&self) -> bool {
        self.source == self.target && self.image_of(&Subgroup::whole(&self.source)).is_ok_and(|s| s.is_whole())
    }

    pub fn validate_automorphism(&self) -> Result<()> {
        if self.source != self.target {
            return Err(Error::NotAutomorphism("source and target differ".into()));
        }
        if !self.is_automorphism() {
            return Err(Error::NotAutomorphism("map is not surjective".into()));
        }
        Ok(())
    }

    /// Inverse of an automorphism (by solving for preimages of the basis).
    pub fn inverse(&self) -> Result<GroupHom> {
        self.validate_automorphism()?;
        let g = &self.source;
        let images = (0..g.rank())
            .map(|i| {
                let coeffs = crate::subgroup::express(g, &self.images, &g.basis_element(i))
                    .ok_or_else(|| Error::InternalInvariant("automorphism not surjective".into()))?;
                g.element_from_ints(&coeffs.iter().map(|&c| c as i128).collect::<Vec<_>>())
            })
            .collect::<Result<Vec<_>>>()?;
        GroupHom::new(g.clone(), g.clone(), images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn well_definedness() {
        let g = AbelianGroup::parse("C4xC2").unwrap();
        // e1 (order 4) -> (1,0) fine; e2 (order 2) -> (1,0) has order 4: rejected
        let bad = GroupHom::new(g.clone(), g.clone(), vec![g.element(&[1, 0]).unwrap(), g.element(&[1, 0]).unwrap()]);
        assert!(bad.is_err());
        let ok = GroupHom::new(g.clone(), g.clone(), vec![g.element(&[1, 1]).unwrap(), g.element(&[2, 1]).unwrap()]).unwrap();
        assert!(ok.is_automorphism());
        let inv = ok.inverse().unwrap();
        assert_eq!(inv.compose(&ok).unwrap(), GroupHom::identity(&g));
        assert_eq!(ok.compose(&inv).unwrap(), GroupHom::identity(&g));
    }

    #[test]
    fn non_surjective_is_not_automorphism() {
        let g = AbelianGroup::parse("C9xC3").unwrap();
        let f = GroupHom::new(g.clone(), g.clone(), vec![g.element(&[3, 0]).unwrap(), g.element(&[0, 1]).unwrap()]).unwrap();
        assert!(!f.is_automorphism());
        assert!(f.validate_automorphism().is_err());
    }

    #[test]
    fn category_laws() {
        let g = AbelianGroup::parse("C8xC2").unwrap();
        let f = GroupHom::new(g.clone(), g.clone(), vec![g.element(&[3, 1]).unwrap(), g.element(&[4, 1]).unwrap()]).unwrap();
        let h = GroupHom::new(g.clone(), g.clone(), vec![g.element(&[5, 0]).unwrap(), g.element(&[0, 1]).unwrap()]).unwrap();
        let id = GroupHom::identity(&g);
        assert_eq!(f.compose(&id).unwrap(), f);
        assert_eq!(id.compose(&f).unwrap(), f);
        let lhs = f.compose(&h).unwrap().compose(&f).unwrap();
        let rhs = f.compose(&h.compose(&f).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        for x in g.elements() {
            assert_eq!(f.compose(&h).unwrap().apply(&x).unwrap(), f.apply(&h.apply(&x).unwrap()).unwrap());
        }
    }
}
