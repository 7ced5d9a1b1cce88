//! Artin–Schreier equations x^q + x = d over binary fields.
//!
//! For q = 2^e with e | [F : GF(2)], the map x -> x^q + x is GF(q)-linear
//! with kernel GF(q); it is solved as a GF(2)-linear system on coordinates.

use super::bitlin::BitLinearMap;
use super::embedding::FieldEmbedding;
use super::gf2m::{BinaryField, Fe};
use crate::error::{Error, Result};

/// Precomputed solver for x^(2^e) + x = d over a fixed field.
#[derive(Clone, Debug)]
pub struct ArtinSchreier {
    field: BinaryField,
    q_log: u32,
    map: BitLinearMap,
}

impl ArtinSchreier {
    pub fn new(field: BinaryField, q_log: u32) -> Result<Self> {
        if q_log == 0 || field.degree() % q_log != 0 {
            return Err(Error::NotSubfield { source_degree: q_log, target_degree: field.degree() });
        }
        let cols: Vec<u128> = (0..field.degree())
            .map(|i| {
                let b = field.element(1 << i);
                (b.frobenius_pow(q_log) + b).bits() as u128
            })
            .collect();
        Ok(ArtinSchreier { field, q_log, map: BitLinearMap::new(&cols) })
    }

    pub fn field(&self) -> BinaryField {
        self.field
    }

    pub fn q_log(&self) -> u32 {
        self.q_log
    }

    /// The smallest root in this field, if any. All roots are root + GF(q).
    pub fn solve(&self, d: Fe) -> Option<Fe> {
        assert_eq!(d.field(), self.field);
        self.map.solve_min(d.bits() as u128).map(|x| self.field.element(x as u64))
    }
}

/// Result of [`artin_schreier_solve`].
#[derive(Clone, Debug)]
pub struct AsRoot {
    pub root: Fe,
    /// 1 if the root lies in the input field, 2 if in its quadratic extension.
    pub multiplier: u32,
    /// Embedding of the input field into the field holding `root`.
    pub embedding: FieldEmbedding,
}

/// Solves x^q + x = d with q = 2^q_log, in the field of `d` or else in its
/// quadratic extension (default modulus).
pub fn artin_schreier_solve(d: Fe, q_log: u32) -> Result<AsRoot> {
    let field = d.field();
    let solver = ArtinSchreier::new(field, q_log)?;
    if let Some(root) = solver.solve(d) {
        return Ok(AsRoot { root, multiplier: 1, embedding: FieldEmbedding::identity(field) });
    }
    let ext = BinaryField::default_for(2 * field.degree())?;
    let emb = FieldEmbedding::new(field, ext)?;
    let root = ArtinSchreier::new(ext, q_log)?
        .solve(emb.map(d))
        .expect("x^q + x = d is solvable in the quadratic extension");
    Ok(AsRoot { root, multiplier: 2, embedding: emb })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(d: u32) -> BinaryField {
        BinaryField::default_for(d).unwrap()
    }

    #[test]
    fn zero_rhs_gives_zero_root() {
        let r = artin_schreier_solve(gf(4).zero(), 1).unwrap();
        assert_eq!(r.multiplier, 1);
        assert!(r.root.is_zero());
    }

    #[test]
    fn gf2_rhs_one_needs_gf4() {
        let r = artin_schreier_solve(gf(1).one(), 1).unwrap();
        assert_eq!(r.multiplier, 2);
        assert_eq!(r.root.field().degree(), 2);
        // exhaustive: the roots of x^2 + x + 1 in GF(4)
        let brute: Vec<Fe> = gf(2).elements().filter(|&x| x * x + x == gf(2).one()).collect();
        assert_eq!(r.root, brute[0]);
    }

    #[test]
    fn gf4_generator_has_nonzero_trace() {
        let w = gf(2).generator();
        assert!(!w.trace_to(1).is_zero());
        let r = artin_schreier_solve(w, 1).unwrap();
        assert_eq!(r.multiplier, 2);
        let f16 = gf(4);
        let target = r.embedding.map(w);
        let brute: Vec<Fe> = f16.elements().filter(|&x| x * x + x == target).collect();
        assert_eq!(brute.len(), 2);
        assert_eq!(r.root, brute[0]);
    }

    #[test]
    fn rejects_non_dividing_q() {
        assert!(artin_schreier_solve(gf(3).one(), 2).is_err());
    }

    #[test]
    fn solution_sets_exhaustive_gf16_gf64() {
        for (d, e) in [(4u32, 1u32), (4, 2), (4, 4), (6, 2), (6, 3)] {
            let f = gf(d);
            let solver = ArtinSchreier::new(f, e).unwrap();
            for target in f.elements() {
                let brute: Vec<Fe> = f.elements().filter(|&x| x.frobenius_pow(e) + x == target).collect();
                assert_eq!(solver.solve(target), brute.first().copied());
                assert_eq!(brute.is_empty(), !target.trace_to(e).is_zero());
                if !brute.is_empty() {
                    assert_eq!(brute.len() as u64, 1 << e);
                }
            }
        }
    }
}
