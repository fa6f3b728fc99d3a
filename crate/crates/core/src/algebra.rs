//! Structure-constant associative algebras: multiplication, the regular
//! representation, center, trace forms, dual bases, Casimir elements and
//! minimal polynomials.


use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// An element of a structure algebra, as a coefficient vector over its basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element<T: Scalar> {
    pub coeffs: Vec<T>,
}

impl<T: Scalar> Element<T> {
    pub fn zero(dim: usize) -> Self {
        Element {
            coeffs: vec![T::zero(); dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Element::zero(dim);
        e.coeffs[i] = T::one();
        e
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        Element {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Element {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Element {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }
}

/// Sparse multiplication tensor entry list: `mult[i][j]` lists the terms of
/// the product of basis elements i and j as `(k, coefficient)` pairs,
/// sorted by k.
pub type MultTensor<T> = Vec<Vec<Vec<(usize, T)>>>;

/// A finite-dimensional associative algebra given by structure constants.
#[derive(Clone, Debug)]
pub struct StructureAlgebra<T: Scalar> {
    pub dim: usize,
    pub basis_labels: Vec<String>,
    pub mult: MultTensor<T>,
    pub unit: Vec<T>,
}

/// Outcome of the associativity / unit axiom check.
#[derive(Clone, Debug)]
pub struct AlgebraReport {
    /// first basis triple (i, j, k) violating associativity, if any
    pub associativity_failure: Option<(usize, usize, usize)>,
    /// first basis index where the unit fails to act as identity, if any
    pub unit_failure: Option<usize>,
}

impl AlgebraReport {
    pub fn pass(&self) -> bool {
        self.associativity_failure.is_none() && self.unit_failure.is_none()
    }
}

impl<T: Scalar> StructureAlgebra<T> {
    pub fn new(basis_labels: Vec<String>, mult: MultTensor<T>, unit: Vec<T>) -> Self {
        let dim = basis_labels.len();
        assert_eq!(mult.len(), dim);
        assert_eq!(unit.len(), dim);
        StructureAlgebra {
            dim,
            basis_labels,
            mult,
            unit,
        }
    }

    pub fn unit_element(&self) -> Element<T> {
        Element {
            coeffs: self.unit.clone(),
        }
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Element<T> {
        let mut out: Element<T> = Element::zero(self.dim);
        for (k, c) in &self.mult[i][j] {
            out.coeffs[*k] = out.coeffs[*k].clone() + c.clone();
        }
        out
    }

    pub fn multiply(&self, x: &Element<T>, y: &Element<T>) -> Result<Element<T>> {
        if x.dim() != self.dim || y.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.dim().max(y.dim()),
            });
        }
        let mut out: Element<T> = Element::zero(self.dim);
        for (i, xi) in x.coeffs.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coeffs.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let f = xi.clone() * yj.clone();
                for (k, c) in &self.mult[i][j] {
                    out.coeffs[*k] = out.coeffs[*k].clone() + f.clone() * c.clone();
                }
            }
        }
        Ok(out)
    }

    /// Check associativity on all basis triples and the unit axioms.
    pub fn verify(&self) -> AlgebraReport {
        let mut report = AlgebraReport {
            associativity_failure: None,
            unit_failure: None,
        };
        let one = self.unit_element();
        for i in 0..self.dim {
            let b = Element::basis(self.dim, i);
            let left = self.multiply(&one, &b).unwrap();
            let right = self.multiply(&b, &one).unwrap();
            if left != b || right != b {
                report.unit_failure = Some(i);
                break;
            }
        }
        'outer: for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product(i, j);
                for k in 0..self.dim {
                    let bk = Element::basis(self.dim, k);
                    let lhs = self.multiply(&ij, &bk).unwrap();
                    let jk = self.basis_product(j, k);
                    let bi = Element::basis(self.dim, i);
                    let rhs = self.multiply(&bi, &jk).unwrap();
                    if lhs != rhs {
                        report.associativity_failure = Some((i, j, k));
                        break 'outer;
                    }
                }
            }
        }
        report
    }

    /// Matrix of left multiplication by x; column j is x * b_j.
    pub fn left_regular_matrix(&self, x: &Element<T>) -> Matrix<T> {
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.multiply(x, &Element::basis(self.dim, j)).unwrap();
            for i in 0..self.dim {
                m[(i, j)] = col.coeffs[i].clone();
            }
        }
        m
    }

    /// Matrix of right multiplication by x; column j is b_j * x.
    pub fn right_regular_matrix(&self, x: &Element<T>) -> Matrix<T> {
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.multiply(&Element::basis(self.dim, j), x).unwrap();
            for i in 0..self.dim {
                m[(i, j)] = col.coeffs[i].clone();
            }
        }
        m
    }

    /// lambda(x) = Tr(L_x), the regular character as a linear functional.
    pub fn regular_trace(&self, x: &Element<T>) -> T {
        self.left_regular_matrix(x).trace()
    }

    /// Exact basis of the center {z : z b = b z for all basis b}.
    pub fn center_basis(&self) -> Vec<Element<T>> {
        let mut rows = Vec::with_capacity(self.dim * self.dim);
        for k in 0..self.dim {
            let bk = Element::basis(self.dim, k);
            let l = self.left_regular_matrix(&bk);
            let r = self.right_regular_matrix(&bk);
            let diff = l.sub(&r);
            for i in 0..self.dim {
                rows.push(diff.row(i).to_vec());
            }
        }
        Matrix::from_rows(rows)
            .nullspace()
            .into_iter()
            .map(|coeffs| Element { coeffs })
            .collect()
    }

    /// Gram matrix of the regular trace form <a|b> = Tr(L_{ab}).
    pub fn regular_trace_form(&self) -> BilinearForm<T> {
        let mut traces = Vec::with_capacity(self.dim);
        for k in 0..self.dim {
            traces.push(self.regular_trace(&Element::basis(self.dim, k)));
        }
        let gram = Matrix::from_fn(self.dim, self.dim, |i, j| {
            let mut s = T::zero();
            for (k, c) in &self.mult[i][j] {
                s = s + c.clone() * traces[*k].clone();
            }
            s
        });
        BilinearForm { gram }
    }

    /// Monic least-degree polynomial p with p(x) = 0 in the algebra.
    pub fn minimal_polynomial(&self, x: &Element<T>) -> Polynomial<T> {
        let mut powers: Vec<Element<T>> = vec![self.unit_element()];
        loop {
            let next = self
                .multiply(powers.last().unwrap(), x)
                .expect("dimension checked");
            // try to express `next` in the span of earlier powers
            let m = Matrix::from_fn(self.dim, powers.len(), |i, j| powers[j].coeffs[i].clone());
            if let Some(sol) = m.solve(&next.coeffs) {
                let mut coeffs: Vec<T> = sol.into_iter().map(|c| -c).collect();
                coeffs.push(T::one());
                return Polynomial::new(coeffs);
            }
            powers.push(next);
        }
    }

    /// Evaluate a polynomial at an algebra element.
    pub fn eval_poly(&self, p: &Polynomial<T>, x: &Element<T>) -> Element<T> {
        let mut acc = Element::zero(self.dim);
        for c in p.coeffs.iter().rev() {
            acc = self.multiply(&acc, x).unwrap();
            acc = acc.add(&self.unit_element().scale(c));
        }
        acc
    }

    /// Product in the tensor-square algebra A (x) A; vectors are dense of
    /// length dim^2, index p*dim + q.
    pub fn tensor_square_mul(&self, x: &[T], y: &[T]) -> Vec<T> {
        let n = self.dim;
        let mut out = vec![T::zero(); n * n];
        for p in 0..n {
            for q in 0..n {
                let xc = &x[p * n + q];
                if xc.is_zero() {
                    continue;
                }
                for r in 0..n {
                    for s in 0..n {
                        let yc = &y[r * n + s];
                        if yc.is_zero() {
                            continue;
                        }
                        let f = xc.clone() * yc.clone();
                        for (k1, c1) in &self.mult[p][r] {
                            for (k2, c2) in &self.mult[q][s] {
                                let idx = k1 * n + k2;
                                out[idx] = out[idx].clone() + f.clone() * c1.clone() * c2.clone();
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// The restriction of the algebra to a multiplicatively closed subspace,
    /// with `unit` acting as its identity. Returns the subalgebra together
    /// with the coordinate matrix (columns are the subspace basis vectors).
    pub fn subalgebra(
        &self,
        basis: &[Element<T>],
        unit: &Element<T>,
    ) -> Result<(StructureAlgebra<T>, Matrix<T>)> {
        let d = basis.len();
        let coords = Matrix::from_fn(self.dim, d, |i, j| basis[j].coeffs[i].clone());
        let express = |v: &Element<T>| -> Result<Vec<T>> {
            coords
                .solve(&v.coeffs)
                .ok_or_else(|| Error::Input("subspace is not multiplicatively closed".into()))
        };
        let mut mult: MultTensor<T> = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let prod = self.multiply(&basis[i], &basis[j])?;
                let c = express(&prod)?;
                mult[i][j] = c
                    .into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect();
            }
        }
        let unit_coords = express(unit)?;
        let labels = (0..d).map(|k| format!("s{k}")).collect();
        Ok((StructureAlgebra::new(labels, mult, unit_coords), coords))
    }
}

/// A bilinear form on the algebra, as a Gram matrix over the basis.
#[derive(Clone, Debug)]
pub struct BilinearForm<T: Scalar> {
    pub gram: Matrix<T>,
}

impl<T: Scalar> BilinearForm<T> {
    pub fn apply(&self, x: &Element<T>, y: &Element<T>) -> T {
        let gy = self.gram.mul_vec(&y.coeffs);
        let mut s = T::zero();
        for (xi, gyi) in x.coeffs.iter().zip(gy) {
            s = s + xi.clone() * gyi;
        }
        s
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    pub fn scale(&self, c: &T) -> Self {
        BilinearForm {
            gram: self.gram.scale(c),
        }
    }

    /// Check <ab|c> = <a|bc> on all basis triples.
    pub fn check_associative(&self, alg: &StructureAlgebra<T>) -> Result<()> {
        for i in 0..alg.dim {
            for j in 0..alg.dim {
                let ij = alg.basis_product(i, j);
                for k in 0..alg.dim {
                    let jk = alg.basis_product(j, k);
                    let lhs = self.apply(&ij, &Element::basis(alg.dim, k));
                    let rhs = self.apply(&Element::basis(alg.dim, i), &jk);
                    if lhs != rhs {
                        return Err(Error::NotAssociativeForm(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A pair of bases with <a_r | b_j> = delta_rj for a fixed form.
#[derive(Clone, Debug)]
pub struct DualBasisPair<T: Scalar> {
    pub a_basis: Vec<Element<T>>,
    pub b_basis: Vec<Element<T>>,
}

/// Dual basis pair with the standard basis on the left: b_j is column j of
/// the inverse Gram matrix.
pub fn dual_basis<T: Scalar>(form: &BilinearForm<T>) -> Result<DualBasisPair<T>> {
    let n = form.gram.rows;
    dual_basis_for(form, &(0..n).map(|i| Element::basis(n, i)).collect::<Vec<_>>())
}

/// Dual basis pair for an arbitrary invertible left basis.
pub fn dual_basis_for<T: Scalar>(
    form: &BilinearForm<T>,
    a_basis: &[Element<T>],
) -> Result<DualBasisPair<T>> {
    let n = form.gram.rows;
    assert_eq!(a_basis.len(), n);
    // M[r][k] = <a_r | e_k>; then the b-basis columns are M^{-1}
    let m = Matrix::from_fn(n, n, |r, k| {
        form.apply(&a_basis[r], &Element::basis(n, k))
    });
    let b = m.inverse().map_err(|_| Error::DegenerateForm)?;
    let b_basis = (0..n)
        .map(|j| Element { coeffs: b.col(j) })
        .collect();
    Ok(DualBasisPair {
        a_basis: a_basis.to_vec(),
        b_basis,
    })
}

/// Casimir element sum_r a_r (x) b_r as a dim^2 coefficient vector
/// (row-major: index i*dim + j).
pub fn casimir_element<T: Scalar>(pair: &DualBasisPair<T>) -> Vec<T> {
    let n = pair.a_basis.first().map_or(0, Element::dim);
    let mut out = vec![T::zero(); n * n];
    for (a, b) in pair.a_basis.iter().zip(&pair.b_basis) {
        for (i, ai) in a.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                out[i * n + j] = out[i * n + j].clone() + ai.clone() * bj.clone();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{group_algebra, groups};
    use crate::scalar::Rational;

    fn s3() -> StructureAlgebra<Rational> {
        group_algebra::<Rational>(&groups::s3()).unwrap().algebra
    }

    #[test]
    fn unit_and_group_multiplication() {
        let a = s3();
        let report = a.verify();
        assert!(report.pass());
        // unit * x = x for an arbitrary element
        let x = Element {
            coeffs: (0..6).map(|k| <Rational as Scalar>::from_int(k as i64 - 2)).collect(),
        };
        assert_eq!(a.multiply(&a.unit_element(), &x).unwrap(), x);
    }

    #[test]
    fn perturbed_algebra_fails_associativity() {
        let mut a = s3();
        // perturb one structure constant by +1
        let (k, c) = a.mult[1][2][0].clone();
        a.mult[1][2][0] = (k, c + <Rational as Scalar>::from_int(1));
        let report = a.verify();
        assert!(report.associativity_failure.is_some() || report.unit_failure.is_some());
    }

    #[test]
    fn c4_generator_is_permutation_matrix() {
        let a = group_algebra::<Rational>(&groups::cyclic(4)).unwrap().algebra;
        let g = Element::basis(4, 1);
        let l = a.left_regular_matrix(&g);
        // 4-cycle permutation matrix: l[(i+1) mod 4][i] = 1
        for j in 0..4 {
            for i in 0..4 {
                let expect = if i == (j + 1) % 4 { 1 } else { 0 };
                assert_eq!(l[(i, j)], <Rational as Scalar>::from_int(expect));
            }
        }
        assert!(a
            .left_regular_matrix(&a.unit_element())
            .is_identity());
    }

    #[test]
    fn trace_of_group_sum_is_group_order() {
        let a = s3();
        let sum = Element {
            coeffs: vec![<Rational as Scalar>::from_int(1); 6],
        };
        assert_eq!(a.regular_trace(&sum), <Rational as Scalar>::from_int(6));
    }

    #[test]
    fn center_of_s3_is_class_sums() {
        let a = s3();
        let z = a.center_basis();
        assert_eq!(z.len(), 3);
        for zi in &z {
            for k in 0..6 {
                let bk = Element::basis(6, k);
                assert_eq!(
                    a.multiply(zi, &bk).unwrap(),
                    a.multiply(&bk, zi).unwrap()
                );
            }
        }
    }

    #[test]
    fn minimal_polynomial_of_unit_and_idempotent() {
        let a = group_algebra::<Rational>(&groups::cyclic(2)).unwrap().algebra;
        let one = a.unit_element();
        let p = a.minimal_polynomial(&one);
        // x - 1
        assert_eq!(p.coeffs, vec![<Rational as Scalar>::from_int(-1), Scalar::from_int(1)]);
        // e = (1 + g)/2 is idempotent but not 0 or 1: min poly x^2 - x
        let half = <Rational as Scalar>::from_ratio(1, 2);
        let e = Element {
            coeffs: vec![half.clone(), half],
        };
        let p = a.minimal_polynomial(&e);
        assert_eq!(
            p.coeffs,
            vec![
                <Rational as Scalar>::from_int(0),
                Scalar::from_int(-1),
                Scalar::from_int(1)
            ]
        );
    }

    #[test]
    fn dual_basis_reproduction_identity() {
        let a = s3();
        let form = a.regular_trace_form();
        assert!(form.is_symmetric());
        form.check_associative(&a).unwrap();
        let pair = dual_basis(&form).unwrap();
        for c in 0..a.dim {
            let ce = Element::basis(a.dim, c);
            // c = sum_j <a_j|c> b_j and c = sum_j <c|b_j> a_j
            let mut rec1 = Element::zero(a.dim);
            let mut rec2 = Element::zero(a.dim);
            for (aj, bj) in pair.a_basis.iter().zip(&pair.b_basis) {
                rec1 = rec1.add(&bj.scale(&form.apply(aj, &ce)));
                rec2 = rec2.add(&aj.scale(&form.apply(&ce, bj)));
            }
            assert_eq!(rec1, ce);
            assert_eq!(rec2, ce);
        }
    }

    #[test]
    fn casimir_invariance_and_scaling() {
        let a = s3();
        let form = a.regular_trace_form();
        let pair1 = dual_basis(&form).unwrap();
        // change-of-basis pair: a'_r mixed by an invertible matrix
        let mut alt = Vec::new();
        for r in 0..a.dim {
            let mut v = Element::basis(a.dim, r);
            if r + 1 < a.dim {
                v = v.add(&Element::basis(a.dim, r + 1).scale(&Scalar::from_int(3)));
            }
            alt.push(v);
        }
        let pair2 = dual_basis_for(&form, &alt).unwrap();
        assert_eq!(casimir_element(&pair1), casimir_element(&pair2));

        // scaling the form by 2 scales the Casimir element by 1/2
        let scaled = form.scale(&Scalar::from_int(2));
        let pair3 = dual_basis(&scaled).unwrap();
        let half = <Rational as Scalar>::from_ratio(1, 2);
        let expect: Vec<Rational> = casimir_element(&pair1)
            .into_iter()
            .map(|c| c * half.clone())
            .collect();
        assert_eq!(casimir_element(&pair3), expect);
    }
}
