//! Coalgebra / bialgebra / antipode layer: axiom verification, integrals,
//! the regular character, generalized Sweedler powers and the integral
//! dual-bases identity.


use crate::algebra::{BilinearForm, Element, StructureAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Sparse comultiplication tensor: `comult[i]` lists `(j, k, c)` with
/// Delta(b_i) = sum c * b_j (x) b_k.
pub type ComultTensor<T> = Vec<Vec<(usize, usize, T)>>;

/// A finite-dimensional Hopf algebra presented by structure constants.
#[derive(Clone, Debug)]
pub struct HopfData<T: Scalar> {
    pub algebra: StructureAlgebra<T>,
    pub comult: ComultTensor<T>,
    pub counit: Vec<T>,
    pub antipode: Matrix<T>,
}

/// Two-sided integral with counit normalization epsilon(Lambda) = 1.
#[derive(Clone, Debug)]
pub struct Integral<T: Scalar> {
    pub lambda_h: Element<T>,
}

/// The functional lambda(b_i) = Tr(L_{b_i}).
#[derive(Clone, Debug)]
pub struct RegularCharacter<T: Scalar> {
    pub lambda_star: Vec<T>,
}

/// One named axiom check with an optional first-counterexample description.
#[derive(Clone, Debug)]
pub struct CheckItem {
    pub name: &'static str,
    pub failure: Option<String>,
}

impl CheckItem {
    pub fn ok(name: &'static str) -> Self {
        CheckItem {
            name,
            failure: None,
        }
    }
    pub fn fail(name: &'static str, why: String) -> Self {
        CheckItem {
            name,
            failure: Some(why),
        }
    }
    pub fn pass(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct HopfReport {
    pub items: Vec<CheckItem>,
}

impl HopfReport {
    pub fn pass(&self) -> bool {
        self.items.iter().all(CheckItem::pass)
    }
}

impl<T: Scalar> HopfData<T> {
    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    /// Dense tensor-square vector of Delta(x), index p*dim + q.
    pub fn comult_element(&self, x: &Element<T>) -> Vec<T> {
        let n = self.dim();
        let mut out = vec![T::zero(); n * n];
        for (i, xi) in x.coeffs.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                out[j * n + k] = out[j * n + k].clone() + xi.clone() * c.clone();
            }
        }
        out
    }

    pub fn counit_of(&self, x: &Element<T>) -> T {
        let mut s = T::zero();
        for (xi, e) in x.coeffs.iter().zip(&self.counit) {
            s = s + xi.clone() * e.clone();
        }
        s
    }

    /// S applied to an element, via the antipode matrix.
    pub fn antipode_of(&self, x: &Element<T>) -> Element<T> {
        Element {
            coeffs: self.antipode.mul_vec(&x.coeffs),
        }
    }

    fn antipode_of_basis(&self, i: usize) -> Element<T> {
        Element {
            coeffs: self.antipode.col(i),
        }
    }

    /// Product in the tensor-square algebra H (x) H.
    fn tensor_square_mul(&self, x: &[T], y: &[T]) -> Vec<T> {
        self.algebra.tensor_square_mul(x, y)
    }

    /// Full axiom suite. Failures are report content, not errors.
    pub fn verify(&self) -> HopfReport {
        let n = self.dim();
        let mut items = Vec::new();

        let alg_report = self.algebra.verify();
        items.push(if alg_report.pass() {
            CheckItem::ok("algebra axioms")
        } else {
            CheckItem::fail("algebra axioms", format!("{alg_report:?}"))
        });

        // coassociativity: (Delta (x) id)Delta = (id (x) Delta)Delta on basis
        let mut coassoc = CheckItem::ok("coassociativity");
        'co: for i in 0..n {
            for (j, k, c) in &self.comult[i] {
                let _ = (j, k, c);
            }
            let mut left = vec![T::zero(); n * n * n];
            let mut right = vec![T::zero(); n * n * n];
            for (j, k, c) in &self.comult[i] {
                for (p, q, c2) in &self.comult[*j] {
                    left[(p * n + q) * n + k] =
                        left[(p * n + q) * n + k].clone() + c.clone() * c2.clone();
                }
                for (p, q, c2) in &self.comult[*k] {
                    right[(j * n + p) * n + q] =
                        right[(j * n + p) * n + q].clone() + c.clone() * c2.clone();
                }
            }
            if left != right {
                coassoc = CheckItem::fail(
                    "coassociativity",
                    format!("fails on basis element {}", self.algebra.basis_labels[i]),
                );
                break 'co;
            }
        }
        items.push(coassoc);

        // counit axioms: (eps (x) id)Delta = id = (id (x) eps)Delta
        let mut counit_ok = CheckItem::ok("counit");
        for i in 0..n {
            let mut left: Element<T> = Element::zero(n);
            let mut right: Element<T> = Element::zero(n);
            for (j, k, c) in &self.comult[i] {
                left.coeffs[*k] =
                    left.coeffs[*k].clone() + self.counit[*j].clone() * c.clone();
                right.coeffs[*j] =
                    right.coeffs[*j].clone() + self.counit[*k].clone() * c.clone();
            }
            let b = Element::basis(n, i);
            if left != b || right != b {
                counit_ok = CheckItem::fail(
                    "counit",
                    format!("fails on basis element {}", self.algebra.basis_labels[i]),
                );
                break;
            }
        }
        items.push(counit_ok);

        // Delta is an algebra map
        let mut dmul = CheckItem::ok("comultiplication multiplicative");
        let unit_tensor = self.comult_element(&self.algebra.unit_element());
        let mut expected_unit = vec![T::zero(); n * n];
        for (p, up) in self.algebra.unit.iter().enumerate() {
            for (q, uq) in self.algebra.unit.iter().enumerate() {
                expected_unit[p * n + q] = up.clone() * uq.clone();
            }
        }
        if unit_tensor != expected_unit {
            dmul = CheckItem::fail(
                "comultiplication multiplicative",
                "Delta(1) != 1 (x) 1".into(),
            );
        } else {
            'dm: for i in 0..n {
                let di = self.comult_element(&Element::basis(n, i));
                for j in 0..n {
                    let dj = self.comult_element(&Element::basis(n, j));
                    let prod = self.tensor_square_mul(&di, &dj);
                    let dij = self.comult_element(&self.algebra.basis_product(i, j));
                    if prod != dij {
                        dmul = CheckItem::fail(
                            "comultiplication multiplicative",
                            format!(
                                "fails on pair ({}, {})",
                                self.algebra.basis_labels[i], self.algebra.basis_labels[j]
                            ),
                        );
                        break 'dm;
                    }
                }
            }
        }
        items.push(dmul);

        // eps is an algebra map
        let mut emul = CheckItem::ok("counit multiplicative");
        if !self.counit_of(&self.algebra.unit_element()).is_one() {
            emul = CheckItem::fail("counit multiplicative", "eps(1) != 1".into());
        } else {
            'em: for i in 0..n {
                for j in 0..n {
                    let lhs = self.counit_of(&self.algebra.basis_product(i, j));
                    let rhs = self.counit[i].clone() * self.counit[j].clone();
                    if lhs != rhs {
                        emul = CheckItem::fail(
                            "counit multiplicative",
                            format!(
                                "fails on pair ({}, {})",
                                self.algebra.basis_labels[i], self.algebra.basis_labels[j]
                            ),
                        );
                        break 'em;
                    }
                }
            }
        }
        items.push(emul);

        // antipode axiom: sum S(h1) h2 = eps(h) 1 = sum h1 S(h2)
        let mut anti = CheckItem::ok("antipode axiom");
        for i in 0..n {
            let mut left: Element<T> = Element::zero(n);
            let mut right: Element<T> = Element::zero(n);
            for (j, k, c) in &self.comult[i] {
                let sj = self.antipode_of_basis(*j);
                let bk = Element::basis(n, *k);
                left = left.add(
                    &self
                        .algebra
                        .multiply(&sj, &bk)
                        .expect("dims")
                        .scale(c),
                );
                let bj = Element::basis(n, *j);
                let sk = self.antipode_of_basis(*k);
                right = right.add(
                    &self
                        .algebra
                        .multiply(&bj, &sk)
                        .expect("dims")
                        .scale(c),
                );
            }
            let target = self.algebra.unit_element().scale(&self.counit[i]);
            if left != target || right != target {
                anti = CheckItem::fail(
                    "antipode axiom",
                    format!("fails on basis element {}", self.algebra.basis_labels[i]),
                );
                break;
            }
        }
        items.push(anti);

        // S is an antiautomorphism
        let mut santi = CheckItem::ok("antipode antiautomorphism");
        let unit = self.algebra.unit_element();
        if self.antipode_of(&unit) != unit {
            santi = CheckItem::fail("antipode antiautomorphism", "S(1) != 1".into());
        } else {
            'sa: for i in 0..n {
                let si = self.antipode_of_basis(i);
                for j in 0..n {
                    let sj = self.antipode_of_basis(j);
                    let lhs = self.antipode_of(&self.algebra.basis_product(i, j));
                    let rhs = self.algebra.multiply(&sj, &si).expect("dims");
                    if lhs != rhs {
                        santi = CheckItem::fail(
                            "antipode antiautomorphism",
                            format!(
                                "fails on pair ({}, {})",
                                self.algebra.basis_labels[i], self.algebra.basis_labels[j]
                            ),
                        );
                        break 'sa;
                    }
                }
            }
        }
        items.push(santi);

        // S^2 = id
        let s2 = self.antipode.matmul(&self.antipode);
        items.push(if s2.is_identity() {
            CheckItem::ok("antipode involution (S^2 = id)")
        } else {
            CheckItem::fail(
                "antipode involution (S^2 = id)",
                "S^2 differs from the identity".into(),
            )
        });

        HopfReport { items }
    }

    /// Solve for the two-sided integral with eps(Lambda) = 1.
    pub fn two_sided_integral(&self) -> Result<Integral<T>> {
        let n = self.dim();
        let mut rows = Vec::with_capacity(n * n);
        for h in 0..n {
            let l = self
                .algebra
                .left_regular_matrix(&Element::basis(n, h));
            // (L_h - eps(h) I) x = 0
            for i in 0..n {
                let mut row = l.row(i).to_vec();
                row[i] = row[i].clone() - self.counit[h].clone();
                rows.push(row);
            }
        }
        let ns = Matrix::from_rows(rows).nullspace();
        if ns.len() != 1 {
            return Err(Error::NoIntegral(ns.len()));
        }
        let raw = Element {
            coeffs: ns.into_iter().next().unwrap(),
        };
        let eps = self.counit_of(&raw);
        if eps.is_zero() {
            return Err(Error::NotSemisimpleHopf);
        }
        let lambda = raw.scale(&(T::one() / eps));
        // right-integral (unimodularity) check: Lambda h = eps(h) Lambda
        for h in 0..n {
            let rh = self
                .algebra
                .multiply(&lambda, &Element::basis(n, h))
                .expect("dims");
            if rh != lambda.scale(&self.counit[h]) {
                return Err(Error::NotUnimodular);
            }
        }
        Ok(Integral { lambda_h: lambda })
    }

    /// lambda(b_i) = Tr(L_{b_i}), with normalization checks against the
    /// integral.
    pub fn regular_character(&self, integral: &Integral<T>) -> Result<RegularCharacter<T>> {
        let n = self.dim();
        let lambda_star: Vec<T> = (0..n)
            .map(|i| self.algebra.regular_trace(&Element::basis(n, i)))
            .collect();
        let eval = |x: &Element<T>| -> T {
            let mut s = T::zero();
            for (xi, li) in x.coeffs.iter().zip(&lambda_star) {
                s = s + xi.clone() * li.clone();
            }
            s
        };
        if eval(&self.algebra.unit_element()) != T::from_int(n as i64) {
            return Err(Error::NormalizationFailure);
        }
        if !eval(&integral.lambda_h).is_one() {
            return Err(Error::NormalizationFailure);
        }
        Ok(RegularCharacter { lambda_star })
    }

    /// Generalized power map h^[m]: multiply the m legs of the (m-1)-fold
    /// coproduct. Computed by h^[m] = sum h_1 * (h_2)^[m-1].
    pub fn sweedler_power(&self, h: &Element<T>, m: usize) -> Element<T> {
        assert!(m >= 1);
        let n = self.dim();
        // power_table[i] = (b_i)^[step]
        let mut power_table: Vec<Element<T>> =
            (0..n).map(|i| Element::basis(n, i)).collect();
        for _ in 1..m {
            let mut next = Vec::with_capacity(n);
            for i in 0..n {
                let mut acc = Element::zero(n);
                for (j, k, c) in &self.comult[i] {
                    let bj = Element::basis(n, *j);
                    let term = self
                        .algebra
                        .multiply(&bj, &power_table[*k])
                        .expect("dims");
                    acc = acc.add(&term.scale(c));
                }
                next.push(acc);
            }
            power_table = next;
        }
        let mut out = Element::zero(n);
        for (i, hi) in h.coeffs.iter().enumerate() {
            if !hi.is_zero() {
                out = out.add(&power_table[i].scale(hi));
            }
        }
        out
    }

    /// The lambda-form <a|b> = lambda(ab) as a Gram matrix.
    pub fn lambda_form(&self, lambda: &RegularCharacter<T>) -> BilinearForm<T> {
        let n = self.dim();
        let gram = Matrix::from_fn(n, n, |i, j| {
            let mut s = T::zero();
            for (k, c) in &self.algebra.mult[i][j] {
                s = s + c.clone() * lambda.lambda_star[*k].clone();
            }
            s
        });
        BilinearForm { gram }
    }

    /// Verify that {S(Lambda_1), Lambda_2} is a pair of dual bases for the
    /// lambda-form: for every basis c, sum lambda(S(Lambda_1) c) Lambda_2 = c.
    pub fn integral_dual_bases_identity(
        &self,
        integral: &Integral<T>,
        lambda: &RegularCharacter<T>,
    ) -> HopfReport {
        let n = self.dim();
        let mut items = Vec::new();

        let form = self.lambda_form(lambda);
        items.push(if form.is_symmetric() {
            CheckItem::ok("lambda-form symmetric")
        } else {
            CheckItem::fail("lambda-form symmetric", "gram not symmetric".into())
        });
        items.push(match form.gram.inverse() {
            Ok(_) => CheckItem::ok("lambda-form nondegenerate"),
            Err(_) => {
                CheckItem::fail("lambda-form nondegenerate", "gram not invertible".into())
            }
        });

        let dl = self.comult_element(&integral.lambda_h);
        let eval_lambda = |x: &Element<T>| -> T {
            let mut s = T::zero();
            for (xi, li) in x.coeffs.iter().zip(&lambda.lambda_star) {
                s = s + xi.clone() * li.clone();
            }
            s
        };
        let mut repro = CheckItem::ok("integral dual-bases reproduction");
        for cidx in 0..n {
            let c = Element::basis(n, cidx);
            let mut acc = Element::zero(n);
            for p in 0..n {
                for q in 0..n {
                    let w = &dl[p * n + q];
                    if w.is_zero() {
                        continue;
                    }
                    let sp = self.antipode_of_basis(p);
                    let spc = self.algebra.multiply(&sp, &c).expect("dims");
                    let coeff = eval_lambda(&spc) * w.clone();
                    acc = acc.add(&Element::basis(n, q).scale(&coeff));
                }
            }
            if acc != c {
                repro = CheckItem::fail(
                    "integral dual-bases reproduction",
                    format!(
                        "fails on basis element {}",
                        self.algebra.basis_labels[cidx]
                    ),
                );
                break;
            }
        }
        items.push(repro);
        HopfReport { items }
    }
}
