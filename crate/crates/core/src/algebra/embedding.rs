//! Explicit embeddings between binary fields.

use super::bitlin::BitLinearMap;
use super::gf2m::{BinaryField, Fe};
use super::poly::Poly;
use crate::error::{Error, Result};

/// A ring homomorphism GF(2^s) -> GF(2^t) determined by the image of the
/// source generator.
#[derive(Clone, Debug)]
pub struct FieldEmbedding {
    source: BinaryField,
    target: BinaryField,
    image: Fe,
    /// Images of x^i, i < source degree.
    basis_images: Vec<u64>,
    inverse: BitLinearMap,
}

impl PartialEq for FieldEmbedding {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.image == other.image
    }
}
impl Eq for FieldEmbedding {}

impl FieldEmbedding {
    /// The embedding sending the source generator to the smallest root of
    /// the source modulus in the target.
    pub fn new(source: BinaryField, target: BinaryField) -> Result<Self> {
        if target.degree() % source.degree() != 0 {
            return Err(Error::NotSubfield {
                source_degree: source.degree(),
                target_degree: target.degree(),
            });
        }
        if source == target {
            return Ok(Self::identity(source));
        }
        let m = source.modulus();
        let modulus = Poly::new(
            target,
            (0..=source.degree()).map(|i| target.element((m >> i) & 1)).collect(),
        );
        let root = *modulus.roots().first().expect("irreducible polynomial splits in an extension of divisible degree");
        Ok(Self::with_image(source, target, root))
    }

    pub fn identity(field: BinaryField) -> Self {
        Self::with_image(field, field, field.generator())
    }

    fn with_image(source: BinaryField, target: BinaryField, image: Fe) -> Self {
        let mut basis_images = Vec::with_capacity(source.degree() as usize);
        let mut pw = target.one();
        for _ in 0..source.degree() {
            basis_images.push(pw.bits());
            pw = pw * image;
        }
        let cols: Vec<u128> = basis_images.iter().map(|&b| b as u128).collect();
        FieldEmbedding { source, target, image, basis_images, inverse: BitLinearMap::new(&cols) }
    }

    pub fn source(&self) -> BinaryField {
        self.source
    }

    pub fn target(&self) -> BinaryField {
        self.target
    }

    pub fn generator_image(&self) -> Fe {
        self.image
    }

    pub fn map(&self, a: Fe) -> Fe {
        assert_eq!(a.field(), self.source, "element not in the embedding source");
        let mut acc = 0u64;
        let mut bits = a.bits();
        let mut i = 0;
        while bits != 0 {
            if bits & 1 == 1 {
                acc ^= self.basis_images[i];
            }
            bits >>= 1;
            i += 1;
        }
        self.target.element(acc)
    }

    pub fn map_poly(&self, p: &Poly<Fe>) -> Poly<Fe> {
        p.map_coeffs(self.target, |c| self.map(*c))
    }

    /// The source element mapping to `b`, if `b` lies in the image.
    pub fn preimage(&self, b: Fe) -> Result<Fe> {
        if b.field() != self.target {
            return Err(Error::FieldMismatch(b.field().degree(), self.target.degree()));
        }
        self.inverse
            .solve_min(b.bits() as u128)
            .map(|x| self.source.element(x as u64))
            .ok_or(Error::NotInImage)
    }

    pub fn preimage_poly(&self, p: &Poly<Fe>) -> Result<Poly<Fe>> {
        let coeffs = p.coeffs().iter().map(|c| self.preimage(*c)).collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(self.source, coeffs))
    }

    /// `outer ∘ self`.
    pub fn then(&self, outer: &FieldEmbedding) -> Result<FieldEmbedding> {
        if self.target != outer.source {
            return Err(Error::FieldMismatch(self.target.degree(), outer.source.degree()));
        }
        Ok(Self::with_image(self.source, outer.target, outer.map(self.image)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(d: u32) -> BinaryField {
        BinaryField::default_for(d).unwrap()
    }

    fn assert_homomorphism(e: &FieldEmbedding) {
        let s = e.source();
        assert_eq!(e.map(s.one()), e.target().one());
        for a in s.elements() {
            for b in s.elements() {
                assert_eq!(e.map(a + b), e.map(a) + e.map(b));
                assert_eq!(e.map(a * b), e.map(a) * e.map(b));
            }
            assert_eq!(e.preimage(e.map(a)).unwrap(), a);
        }
    }

    #[test]
    fn gf2_into_gf4_is_inclusion() {
        let e = FieldEmbedding::new(gf(1), gf(2)).unwrap();
        assert_eq!(e.map(gf(1).one()), gf(2).one());
        assert_eq!(e.map(gf(1).zero()), gf(2).zero());
    }

    #[test]
    fn gf4_into_gf16_picks_smallest_root() {
        let (f4, f16) = (gf(2), gf(4));
        let e = FieldEmbedding::new(f4, f16).unwrap();
        let roots: Vec<Fe> = f16.elements().filter(|&r| r * r + r + f16.one() == f16.zero()).collect();
        assert_eq!(roots.len(), 2);
        assert_eq!(e.generator_image(), roots[0]);
        assert_homomorphism(&e);
    }

    #[test]
    fn identity_embedding() {
        let e = FieldEmbedding::new(gf(2), gf(2)).unwrap();
        for a in gf(2).elements() {
            assert_eq!(e.map(a), a);
        }
    }

    #[test]
    fn homomorphisms_up_to_degree_8() {
        for (s, t) in [(1, 8), (2, 8), (4, 8), (2, 6), (3, 6)] {
            assert_homomorphism(&FieldEmbedding::new(gf(s), gf(t)).unwrap());
        }
    }

    #[test]
    fn non_dividing_degrees_rejected() {
        assert!(FieldEmbedding::new(gf(2), gf(3)).is_err());
    }

    #[test]
    fn composition_is_consistent() {
        let a = FieldEmbedding::new(gf(2), gf(4)).unwrap();
        let b = FieldEmbedding::new(gf(4), gf(8)).unwrap();
        let c = a.then(&b).unwrap();
        for x in gf(2).elements() {
            assert_eq!(c.map(x), b.map(a.map(x)));
        }
        assert!(matches!(c.preimage(gf(8).generator()), Err(Error::NotInImage)));
    }
}
