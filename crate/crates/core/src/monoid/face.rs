use num_traits::Zero;

use super::{Elem, FsMonoid};
use crate::error::Result;
use crate::zlin::{dot, Int};

/// Face of a monoid, given by the generators it contains.
///
/// `functionals` are the facet functionals of the owner's cone that vanish
/// on the face; the face is the set of elements on which all of them
/// vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    owner: FsMonoid,
    selector: Vec<usize>,
    functionals: Vec<Vec<Int>>,
}

impl Face {
    /// The face cut out by the facet functionals in `functionals`.
    pub(crate) fn cut_out(owner: &FsMonoid, functionals: Vec<Vec<Int>>) -> Face {
        let selector = owner
            .gens()
            .iter()
            .enumerate()
            .filter(|(_, g)| functionals.iter().all(|f| dot(f, &g.free).is_zero()))
            .map(|(i, _)| i)
            .collect();
        Face {
            owner: owner.clone(),
            selector,
            functionals,
        }
    }

    pub fn owner(&self) -> &FsMonoid {
        &self.owner
    }

    pub fn selector(&self) -> &[usize] {
        &self.selector
    }

    pub fn functionals(&self) -> &[Vec<Int>] {
        &self.functionals
    }

    pub fn gens(&self) -> Vec<Elem> {
        self.selector.iter().map(|&i| self.owner.gens()[i].clone()).collect()
    }

    pub fn is_proper(&self) -> bool {
        self.selector.len() < self.owner.gens().len()
    }

    /// The face as a monoid in the owner's ambient group.
    pub fn monoid(&self) -> FsMonoid {
        let m = FsMonoid::new(self.owner.ambient().clone(), self.gens()).expect("same ambient");
        if self.owner.0.saturated.get() == Some(&true) {
            let _ = m.0.saturated.set(true);
        }
        m
    }

    /// Membership: an element of the owner lies in the face iff every
    /// supporting functional vanishes on it.
    pub fn contains(&self, x: &Elem) -> Result<bool> {
        Ok(self.owner.contains(x)? && self.functionals.iter().all(|f| dot(f, &x.free).is_zero()))
    }
}

/// Ideal of a monoid, generated by finitely many elements.
#[derive(Clone, Debug)]
pub struct MonoidIdeal {
    owner: FsMonoid,
    gens: Vec<Elem>,
}

impl MonoidIdeal {
    pub fn new(owner: &FsMonoid, gens: Vec<Elem>) -> Result<MonoidIdeal> {
        for g in &gens {
            if !owner.contains(g)? {
                return Err(crate::Error::NotMember);
            }
        }
        Ok(MonoidIdeal {
            owner: owner.clone(),
            gens,
        })
    }

    /// `P^+`, the complement of the units.
    pub fn maximal(owner: &FsMonoid) -> MonoidIdeal {
        let gens = owner
            .gens()
            .iter()
            .zip(owner.unit_flags())
            .filter(|(_, u)| !**u)
            .map(|(g, _)| g.clone())
            .collect();
        MonoidIdeal {
            owner: owner.clone(),
            gens,
        }
    }

    pub fn owner(&self) -> &FsMonoid {
        &self.owner
    }

    pub fn gens(&self) -> &[Elem] {
        &self.gens
    }

    pub fn contains(&self, x: &Elem) -> Result<bool> {
        let amb = self.owner.ambient();
        for g in &self.gens {
            if self.owner.contains(&amb.sub(x, g))? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
