//! Split semisimple decomposition: primitive central idempotents, block
//! degrees, irreducible characters and the permutation induced by an
//! antiautomorphism.

use num::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Element, StructureAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{crt_idempotents, Polynomial, RootField};
use crate::scalar::{isqrt_exact, Scalar};

/// Default seed of the randomized splitting-element search.
pub const DEFAULT_SEED: u64 = 0x484f5046; // "HOPF"

/// The decomposition A = (+)_i M_{n_i}(k).
#[derive(Clone, Debug)]
pub struct BlockDecomposition<T: Scalar> {
    pub idempotents: Vec<Element<T>>,
    pub degrees: Vec<usize>,
    /// d x dim matrix of character values chi_i(b_j)
    pub characters: Matrix<T>,
    pub d: usize,
}

impl<T: Scalar> BlockDecomposition<T> {
    pub fn character_of(&self, i: usize, x: &Element<T>) -> T {
        let mut s = T::zero();
        for (j, c) in x.coeffs.iter().enumerate() {
            if !c.is_zero() {
                s = s + self.characters[(i, j)].clone() * c.clone();
            }
        }
        s
    }
}

/// The permutation i -> i* induced by an involutive antiautomorphism on the
/// primitive central idempotents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPermutation {
    pub perm: Vec<usize>,
}

impl DualPermutation {
    pub fn is_involution(&self) -> bool {
        (0..self.perm.len()).all(|i| self.perm[self.perm[i]] == i)
    }
}

/// Minimal polynomial of z acting on the unital subalgebra with identity
/// `unit` (powers z^0 := unit, z, z^2, ... until linear dependence).
fn min_poly_rel<T: Scalar>(
    alg: &StructureAlgebra<T>,
    z: &Element<T>,
    unit: &Element<T>,
) -> Polynomial<T> {
    let mut powers: Vec<Element<T>> = vec![unit.clone()];
    loop {
        let next = alg.multiply(powers.last().unwrap(), z).expect("dims");
        let m = Matrix::from_fn(alg.dim, powers.len(), |i, j| powers[j].coeffs[i].clone());
        if let Some(sol) = m.solve(&next.coeffs) {
            let mut coeffs: Vec<T> = sol.into_iter().map(|c| -c).collect();
            coeffs.push(T::one());
            return Polynomial::new(coeffs);
        }
        powers.push(next);
    }
}

/// Deterministic basis of the span of a list of vectors (nonzero rows of the
/// row echelon form).
fn span_basis<T: Scalar>(vectors: &[Element<T>]) -> Vec<Element<T>> {
    if vectors.is_empty() {
        return vec![];
    }
    let rows: Vec<Vec<T>> = vectors.iter().map(|v| v.coeffs.clone()).collect();
    let (r, pivots) = Matrix::from_rows(rows).rref();
    (0..pivots.len())
        .map(|i| Element {
            coeffs: r.row(i).to_vec(),
        })
        .collect()
}

/// Splitting-element candidates: natural generators first (images of the
/// ambient basis — their minimal polynomials tend to be structured), then
/// seeded random small-integer combinations of the span basis with widening
/// coefficient range.
struct CandidateStream<'a, T: Scalar> {
    natural: &'a [Element<T>],
    span: &'a [Element<T>],
    next_natural: usize,
    rng: ChaCha8Rng,
    attempts: usize,
    max_attempts: usize,
}

impl<'a, T: Scalar> CandidateStream<'a, T> {
    fn new(natural: &'a [Element<T>], span: &'a [Element<T>], seed: u64) -> Self {
        CandidateStream {
            natural,
            span,
            next_natural: 0,
            rng: ChaCha8Rng::seed_from_u64(seed),
            attempts: 0,
            max_attempts: 64 + 16 * span.len(),
        }
    }
}

impl<T: Scalar> Iterator for CandidateStream<'_, T> {
    type Item = Element<T>;
    fn next(&mut self) -> Option<Element<T>> {
        if self.next_natural < self.natural.len() {
            let e = self.natural[self.next_natural].clone();
            self.next_natural += 1;
            return Some(e);
        }
        if self.attempts >= self.max_attempts || self.span.is_empty() {
            return None;
        }
        self.attempts += 1;
        let range = 2 + (self.attempts / 8) as i64;
        let dim = self.span[0].dim();
        let mut v = Element::zero(dim);
        for b in self.span {
            let c = self.rng.gen_range(-range..=range);
            if c != 0 {
                v = v.add(&b.scale(&T::from_int(c)));
            }
        }
        Some(v)
    }
}

/// Split the idempotent `e` into orthogonal idempotents summing to e, using
/// the CRT projectors of a splitting element's minimal polynomial. When
/// `central` is set the candidates live in the center, where a definitively
/// non-split minimal polynomial certifies a genuine field extension and
/// aborts; off-center (block certification) a non-split candidate is merely
/// uninformative and the search continues. Returns None when no candidate
/// splits.
fn split_once<T: RootField>(
    alg: &StructureAlgebra<T>,
    e: &Element<T>,
    natural: &[Element<T>],
    span: &[Element<T>],
    central: bool,
    seed: u64,
) -> Result<Option<Vec<Element<T>>>> {
    let mut inconclusive: Option<Error> = None;
    for z in CandidateStream::new(natural, span, seed) {
        let p = min_poly_rel(alg, &z, e);
        if p.degree() < 2 {
            continue;
        }
        let roots = match T::split_into_linear_factors(&p) {
            Ok(r) => r,
            Err(err @ Error::NonSplitOverField { definitive, .. }) => {
                if central && definitive {
                    return Err(err);
                }
                inconclusive = Some(err);
                continue;
            }
            Err(other) => return Err(other),
        };
        if roots.len() < 2 {
            continue;
        }
        let projectors = crt_idempotents(&roots);
        let mut parts = Vec::with_capacity(projectors.len());
        for proj in &projectors {
            // evaluate proj at z, with e as the constant term
            let mut acc = Element::zero(alg.dim);
            for c in proj.coeffs.iter().rev() {
                acc = alg.multiply(&acc, &z)?;
                acc = acc.add(&e.scale(c));
            }
            debug_assert_eq!(alg.multiply(&acc, &acc)?, acc, "projector not idempotent");
            parts.push(acc);
        }
        let total = parts
            .iter()
            .fold(Element::zero(alg.dim), |a, b| a.add(b));
        debug_assert_eq!(&total, e);
        return Ok(Some(parts));
    }
    match inconclusive {
        Some(err) => Err(err),
        None => Ok(None),
    }
}

/// Complete orthogonal set of primitive central idempotents (deterministic
/// order), or NotSemisimple / NonSplitOverField.
pub fn primitive_central_idempotents<T: RootField>(
    alg: &StructureAlgebra<T>,
    seed: u64,
) -> Result<Vec<Element<T>>> {
    // characteristic-0 semisimplicity criterion
    if alg.regular_trace_form().gram.inverse().is_err() {
        return Err(Error::NotSemisimple);
    }
    let center = alg.center_basis();
    let mut finished: Vec<Element<T>> = Vec::new();
    let mut worklist = vec![alg.unit_element()];
    while let Some(e) = worklist.pop() {
        // Ze = span{z_i e}
        let ze: Vec<Element<T>> = center
            .iter()
            .map(|z| alg.multiply(z, &e).expect("dims"))
            .collect();
        let ze_basis = span_basis(&ze);
        if ze_basis.len() <= 1 {
            finished.push(e);
            continue;
        }
        match split_once(alg, &e, &ze, &ze_basis, true, seed)? {
            Some(parts) => worklist.extend(parts),
            None => {
                return Err(Error::NonSplitOverField {
                    poly: format!(
                        "no splitting central element found for a component of dimension {}",
                        ze_basis.len()
                    ),
                    definitive: false,
                })
            }
        }
    }
    // deterministic order before character-based reordering downstream
    finished.sort_by_key(|e| e.coeffs.iter().map(Scalar::order_key).collect::<Vec<_>>());
    Ok(finished)
}

/// Certify that the block A e (a simple algebra with 1-dimensional center)
/// is split, by recursively counting primitive orthogonal idempotents: the
/// count equals n exactly when the block is M_n(k).
fn count_primitive_idempotents<T: RootField>(
    alg: &StructureAlgebra<T>,
    e: &Element<T>,
    generators: &[Element<T>],
    span: &[Element<T>],
    seed: u64,
) -> Result<usize> {
    if span.len() <= 1 {
        return Ok(1);
    }
    let parts = match split_once(alg, e, generators, span, false, seed) {
        Ok(Some(parts)) => parts,
        // an inconclusive root search inside a corner means we cannot
        // certify the split; report as non-split
        Ok(None) | Err(Error::NonSplitOverField { .. }) => return Ok(1),
        Err(other) => return Err(other),
    };
    let mut count = 0;
    for f in &parts {
        // corner f (Ae) f
        let corner: Vec<Element<T>> = generators
            .iter()
            .map(|b| {
                let fb = alg.multiply(f, b).expect("dims");
                alg.multiply(&fb, f).expect("dims")
            })
            .collect();
        let corner_basis = span_basis(&corner);
        count += count_primitive_idempotents(alg, f, &corner, &corner_basis, seed)?;
    }
    Ok(count)
}

/// Degrees and characters for a complete set of primitive central
/// idempotents; blocks are sorted by (degree, character row).
pub fn characters_and_degrees<T: RootField>(
    alg: &StructureAlgebra<T>,
    idempotents: &[Element<T>],
    seed: u64,
) -> Result<BlockDecomposition<T>> {
    let n = alg.dim;
    struct Block<T: Scalar> {
        e: Element<T>,
        degree: usize,
        chi: Vec<T>,
    }
    let mut blocks: Vec<Block<T>> = Vec::with_capacity(idempotents.len());
    for (bi, e) in idempotents.iter().enumerate() {
        let re = alg.right_regular_matrix(e);
        // dim(Ae) = Tr(R_e) since R_e is the projection onto Ae
        let dim_t = re.trace();
        let dim = dim_t
            .as_rational()
            .filter(|r| r.denom().is_one() && !num::Signed::is_negative(r.numer()))
            .and_then(|r| {
                use num::ToPrimitive;
                r.numer().to_usize()
            })
            .ok_or(Error::NonSquareBlock { block: bi, dim: 0 })?;
        let degree = isqrt_exact(dim).ok_or(Error::NonSquareBlock { block: bi, dim })?;
        // certify the block is a full matrix ring over the working field
        let ae: Vec<Element<T>> = (0..n)
            .map(|j| alg.multiply(&Element::basis(n, j), e).expect("dims"))
            .collect();
        let ae_basis = span_basis(&ae);
        debug_assert_eq!(ae_basis.len(), dim);
        let count = count_primitive_idempotents(alg, e, &ae, &ae_basis, seed)?;
        if count != degree {
            return Err(Error::NonSplitOverField {
                poly: format!(
                    "block of dimension {dim} admits only {count} orthogonal idempotents, \
                     expected {degree}"
                ),
                definitive: false,
            });
        }
        // chi(b_j) = Tr(L_{b_j} R_e) / degree
        let deg_inv = T::one() / T::from_int(degree as i64);
        let chi: Vec<T> = (0..n)
            .map(|j| {
                let l = alg.left_regular_matrix(&Element::basis(n, j));
                l.matmul(&re).trace() * deg_inv.clone()
            })
            .collect();
        blocks.push(Block {
            e: e.clone(),
            degree,
            chi,
        });
    }
    // sort by degree, then by character row in descending scalar order
    blocks.sort_by(|a, b| {
        a.degree.cmp(&b.degree).then_with(|| {
            let ka: Vec<_> = a.chi.iter().map(Scalar::order_key).collect();
            let kb: Vec<_> = b.chi.iter().map(Scalar::order_key).collect();
            kb.cmp(&ka)
        })
    });
    let d = blocks.len();
    let total: usize = blocks.iter().map(|b| b.degree * b.degree).sum();
    if total != n {
        return Err(Error::NonSquareBlock { block: d, dim: total });
    }
    let characters = Matrix::from_fn(d, n, |i, j| blocks[i].chi[j].clone());
    Ok(BlockDecomposition {
        idempotents: blocks.iter().map(|b| b.e.clone()).collect(),
        degrees: blocks.iter().map(|b| b.degree).collect(),
        characters,
        d,
    })
}

/// Convenience: idempotents + characters in one call.
pub fn decompose<T: RootField>(
    alg: &StructureAlgebra<T>,
    seed: u64,
) -> Result<BlockDecomposition<T>> {
    let idem = primitive_central_idempotents(alg, seed)?;
    characters_and_degrees(alg, &idem, seed)
}

/// Verify that `s` is an involutive antiautomorphism of the algebra.
pub fn check_involution<T: Scalar>(alg: &StructureAlgebra<T>, s: &Matrix<T>) -> Result<()> {
    let n = alg.dim;
    let unit = alg.unit_element();
    let s_of = |x: &Element<T>| Element {
        coeffs: s.mul_vec(&x.coeffs),
    };
    if s_of(&unit) != unit {
        return Err(Error::NotAntiautomorphism(0, 0));
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = s_of(&alg.basis_product(i, j));
            let rhs = alg.multiply(
                &s_of(&Element::basis(n, j)),
                &s_of(&Element::basis(n, i)),
            )?;
            if lhs != rhs {
                return Err(Error::NotAntiautomorphism(i, j));
            }
        }
    }
    let s2 = s.matmul(s);
    if !s2.is_identity() {
        let bad = (0..n)
            .find(|&i| {
                (0..n).any(|j| s2[(j, i)] != if i == j { T::one() } else { T::zero() })
            })
            .unwrap_or(0);
        return Err(Error::NotInvolution(bad));
    }
    Ok(())
}

/// perm(i) = j where S(e_i) = e_j; cross-checked at character level:
/// chi_{perm(i)} = chi_i o S.
pub fn antiauto_block_permutation<T: Scalar>(
    alg: &StructureAlgebra<T>,
    s: &Matrix<T>,
    decomp: &BlockDecomposition<T>,
) -> Result<DualPermutation> {
    check_involution(alg, s)?;
    let mut perm = Vec::with_capacity(decomp.d);
    for (i, e) in decomp.idempotents.iter().enumerate() {
        let se = Element {
            coeffs: s.mul_vec(&e.coeffs),
        };
        let j = decomp
            .idempotents
            .iter()
            .position(|f| *f == se)
            .ok_or(Error::IdempotentNotMapped(i))?;
        // chi_j(b_k) = chi_i(S(b_k)) for all k
        for k in 0..alg.dim {
            let sb = Element {
                coeffs: s.col(k),
            };
            if decomp.characters[(j, k)] != decomp.character_of(i, &sb) {
                return Err(Error::IdempotentNotMapped(i));
            }
        }
        perm.push(j);
    }
    Ok(DualPermutation { perm })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        dual_numbers, group_algebra, groups, matrix_units, preset, sweedler4,
        transpose_involution, Preset,
    };
    use crate::scalar::{GaussianRational, Rational};

    #[test]
    fn c2_idempotents_over_q() {
        let h = group_algebra::<Rational>(&groups::cyclic(2)).unwrap();
        let idem = primitive_central_idempotents(&h.algebra, DEFAULT_SEED).unwrap();
        assert_eq!(idem.len(), 2);
        let half = <Rational as Scalar>::from_ratio(1, 2);
        let plus = Element {
            coeffs: vec![half.clone(), half.clone()],
        };
        let minus = Element {
            coeffs: vec![half.clone(), -half],
        };
        assert!(idem.contains(&plus) && idem.contains(&minus));
    }

    #[test]
    fn s3_decomposition() {
        let h = group_algebra::<Rational>(&groups::s3()).unwrap();
        let d = decompose(&h.algebra, DEFAULT_SEED).unwrap();
        assert_eq!(d.degrees, vec![1, 1, 2]);
        // trivial character first, chi_2 on a transposition (index 3) is 0
        assert_eq!(d.characters[(0, 3)], <Rational as Scalar>::from_int(1));
        assert_eq!(d.characters[(1, 3)], <Rational as Scalar>::from_int(-1));
        assert_eq!(d.characters[(2, 3)], <Rational as Scalar>::from_int(0));
        // orthogonality and completeness
        let mut total = Element::zero(6);
        for (i, e) in d.idempotents.iter().enumerate() {
            total = total.add(e);
            for (j, f) in d.idempotents.iter().enumerate() {
                let prod = h.algebra.multiply(e, f).unwrap();
                if i == j {
                    assert_eq!(prod, *e);
                } else {
                    assert!(prod.is_zero());
                }
            }
        }
        assert_eq!(total, h.algebra.unit_element());
    }

    #[test]
    fn c4_character_table_over_qi() {
        let h = group_algebra::<GaussianRational>(&groups::cyclic(4)).unwrap();
        let d = decompose(&h.algebra, DEFAULT_SEED).unwrap();
        assert_eq!(d.degrees, vec![1, 1, 1, 1]);
        // i-power ordering: chi_j(g) = i^j
        let i = GaussianRational::i();
        let mut pw = GaussianRational::one();
        for row in 0..4 {
            assert_eq!(d.characters[(row, 1)], pw);
            pw = pw * i.clone();
        }
    }

    #[test]
    fn q8_blocks_over_qi_and_nonsplit_over_q() {
        let h = group_algebra::<GaussianRational>(&groups::q8()).unwrap();
        let d = decompose(&h.algebra, DEFAULT_SEED).unwrap();
        assert_eq!(d.degrees, vec![1, 1, 1, 1, 2]);

        let hq = group_algebra::<Rational>(&groups::q8()).unwrap();
        match decompose(&hq.algebra, DEFAULT_SEED) {
            Err(Error::NonSplitOverField { .. }) => {}
            other => panic!("expected NonSplitOverField for Q8 over Q, got {other:?}"),
        }
    }

    #[test]
    fn c3_non_split_over_qi() {
        let h = group_algebra::<GaussianRational>(&groups::cyclic(3)).unwrap();
        match decompose(&h.algebra, DEFAULT_SEED) {
            Err(Error::NonSplitOverField { definitive, .. }) => assert!(definitive),
            other => panic!("expected NonSplitOverField, got {other:?}"),
        }
    }

    #[test]
    fn kac16_blocks() {
        let h = preset::<GaussianRational>(Preset::Kac16).unwrap();
        let idem = primitive_central_idempotents(&h.algebra, DEFAULT_SEED).unwrap();
        assert_eq!(idem.len(), 10);
        let d = characters_and_degrees(&h.algebra, &idem, DEFAULT_SEED).unwrap();
        assert_eq!(d.degrees, vec![1, 1, 1, 1, 1, 1, 1, 1, 2, 2]);
        // center has 10 basis elements
        assert_eq!(h.algebra.center_basis().len(), 10);
    }

    #[test]
    fn matrix_algebra_single_block() {
        let m2 = matrix_units::<Rational>(2);
        let d = decompose(&m2, DEFAULT_SEED).unwrap();
        assert_eq!(d.degrees, vec![2]);
        let s = transpose_involution::<Rational>(2);
        let perm = antiauto_block_permutation(&m2, &s, &d).unwrap();
        assert_eq!(perm.perm, vec![0]);
    }

    #[test]
    fn group_antipode_permutation() {
        // S3: all characters real, so the permutation is the identity
        let h = group_algebra::<Rational>(&groups::s3()).unwrap();
        let d = decompose(&h.algebra, DEFAULT_SEED).unwrap();
        let perm = antiauto_block_permutation(&h.algebra, &h.antipode, &d).unwrap();
        assert_eq!(perm.perm, vec![0, 1, 2]);

        // C4: swaps the i-valued and (-i)-valued characters
        let h = group_algebra::<GaussianRational>(&groups::cyclic(4)).unwrap();
        let d = decompose(&h.algebra, DEFAULT_SEED).unwrap();
        let perm = antiauto_block_permutation(&h.algebra, &h.antipode, &d).unwrap();
        assert_eq!(perm.perm, vec![0, 3, 2, 1]);
        assert!(perm.is_involution());
    }

    #[test]
    fn non_semisimple_detection() {
        for alg in [dual_numbers::<Rational>(), sweedler4::<Rational>()] {
            match primitive_central_idempotents(&alg, DEFAULT_SEED) {
                Err(Error::NotSemisimple) => {}
                other => panic!("expected NotSemisimple, got {other:?}"),
            }
        }
    }

    #[test]
    fn character_linear_independence_and_lambda_consistency() {
        let h = group_algebra::<Rational>(&groups::d4()).unwrap();
        let d = decompose(&h.algebra, DEFAULT_SEED).unwrap();
        assert_eq!(d.characters.rank(), d.d);
        // sum n_i chi_i(b_j) = Tr(L_{b_j})
        for j in 0..h.algebra.dim {
            let mut s = <Rational as Scalar>::from_int(0);
            for i in 0..d.d {
                s = s + <Rational as Scalar>::from_int(d.degrees[i] as i64)
                    * d.characters[(i, j)].clone();
            }
            assert_eq!(
                s,
                h.algebra.regular_trace(&Element::basis(h.algebra.dim, j))
            );
        }
    }
}
