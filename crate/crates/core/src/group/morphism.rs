use super::Group;

/// A map between two groups given by the image of every domain element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    images: Vec<u32>,
    codomain_order: usize,
}

impl Morphism {
    pub fn new(images: Vec<u32>, codomain_order: usize) -> Morphism {
        Morphism { images, codomain_order }
    }

    pub fn image(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn domain_order(&self) -> usize {
        self.images.len()
    }

    pub fn codomain_order(&self) -> usize {
        self.codomain_order
    }

    /// Checks `f(xy) = f(x)f(y)` for every pair of domain elements.
    pub fn is_homomorphism(&self, domain: &Group, codomain: &Group) -> bool {
        if domain.order() != self.images.len() || codomain.order() != self.codomain_order {
            return false;
        }
        let n = domain.order() as u32;
        (0..n).all(|x| (0..n).all(|y| self.image(domain.mul(x, y)) == codomain.mul(self.image(x), self.image(y))))
    }

    pub fn is_bijective(&self) -> bool {
        if self.images.len() != self.codomain_order {
            return false;
        }
        let mut seen = vec![false; self.codomain_order];
        self.images.iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true))
    }
}
