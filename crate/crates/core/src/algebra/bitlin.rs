//! Linear algebra over GF(2) on bit-vectors of at most 128 bits.
//!
//! Used for maps that are GF(2)-linear but not linear over the field they
//! act on (x -> x^q + x, coordinate maps of embeddings).

/// A GF(2)-linear map given by the images of the unit vectors.
#[derive(Clone, Debug)]
pub struct BitLinearMap {
    /// `(image, combination)` with distinct leading bits of `image`.
    echelon: Vec<(u128, u128)>,
    /// Kernel basis in reduced echelon form (distinct leading bits, each
    /// leading bit cleared from every other vector).
    kernel: Vec<u128>,
}

fn lead(v: u128) -> u32 {
    127 - v.leading_zeros()
}

impl BitLinearMap {
    pub fn new(columns: &[u128]) -> Self {
        assert!(columns.len() <= 128);
        let mut echelon: Vec<(u128, u128)> = Vec::new();
        let mut kernel = Vec::new();
        for (j, &col) in columns.iter().enumerate() {
            let mut img = col;
            let mut combo = 1u128 << j;
            for &(e_img, e_combo) in &echelon {
                if img >> lead(e_img) & 1 == 1 {
                    img ^= e_img;
                    combo ^= e_combo;
                }
            }
            if img == 0 {
                kernel.push(combo);
            } else {
                echelon.push((img, combo));
                echelon.sort_by_key(|&(img, _)| std::cmp::Reverse(lead(img)));
            }
        }
        BitLinearMap { echelon, kernel: reduce_basis(kernel) }
    }

    pub fn rank(&self) -> usize {
        self.echelon.len()
    }

    pub fn kernel(&self) -> &[u128] {
        &self.kernel
    }

    /// The smallest x (as an integer) with map(x) = target, if any.
    pub fn solve_min(&self, target: u128) -> Option<u128> {
        let mut rest = target;
        let mut x = 0u128;
        for &(img, combo) in &self.echelon {
            if rest >> lead(img) & 1 == 1 {
                rest ^= img;
                x ^= combo;
            }
        }
        if rest != 0 {
            return None;
        }
        Some(min_in_coset(x, &self.kernel))
    }
}

/// Gauss-Jordan reduction of a set of vectors to a reduced echelon basis,
/// sorted by leading bit descending.
pub fn reduce_basis(vectors: Vec<u128>) -> Vec<u128> {
    let mut basis: Vec<u128> = Vec::new();
    for v in vectors {
        let mut v = v;
        for &b in &basis {
            if v >> lead(b) & 1 == 1 {
                v ^= b;
            }
        }
        if v == 0 {
            continue;
        }
        let lv = lead(v);
        for b in basis.iter_mut() {
            if *b >> lv & 1 == 1 {
                *b ^= v;
            }
        }
        basis.push(v);
        basis.sort_by_key(|&b| std::cmp::Reverse(lead(b)));
    }
    basis
}

/// Minimum of the coset x + span(basis) for a reduced echelon basis.
pub fn min_in_coset(mut x: u128, reduced_basis: &[u128]) -> u128 {
    for &b in reduced_basis {
        if x >> lead(b) & 1 == 1 {
            x ^= b;
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_and_kernel_brute_force() {
        // map on 5 bits into 4 bits
        let cols = [0b1010u128, 0b0110, 0b1100, 0b0001, 0b0111];
        let m = BitLinearMap::new(&cols);
        let apply = |x: u128| (0..5).filter(|j| x >> j & 1 == 1).fold(0u128, |acc, j| acc ^ cols[j]);
        assert_eq!(m.rank() + m.kernel().len(), 5);
        for &k in m.kernel() {
            assert_eq!(apply(k), 0);
        }
        for t in 0..16u128 {
            let brute = (0..32u128).filter(|&x| apply(x) == t).min();
            assert_eq!(m.solve_min(t), brute, "target {t}");
        }
    }
}
