//! Indicator theory: nu_m via Sweedler powers of the integral, mu_2 via dual
//! bases of an associative form, the trace-of-antipode identity, self-duality,
//! classification of involutions on matrix algebras, invariant bilinear forms
//! on modules, and the chi^(2) span test.


use crate::algebra::{
    casimir_element, dual_basis, BilinearForm, Element, StructureAlgebra,
};
use crate::constructions::FiniteGroup;
use crate::error::{Error, Result};
use crate::hopf::{CheckItem, HopfData, HopfReport};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::wedderburn::{antiauto_block_permutation, check_involution, BlockDecomposition};

/// One row of the per-character indicator table.
#[derive(Clone, Debug)]
pub struct CharacterRecord<T: Scalar> {
    pub index: usize,
    pub degree: usize,
    pub nu2: T,
    pub self_dual: bool,
    /// (m, nu_m) for each requested m
    pub nu_m: Vec<(usize, T)>,
}

/// Full indicator report: table, Tr S, and named identity verdicts.
#[derive(Clone, Debug)]
pub struct IndicatorReport<T: Scalar> {
    pub records: Vec<CharacterRecord<T>>,
    pub trace_s: T,
    pub identity_checks: Vec<CheckItem>,
}

impl<T: Scalar> IndicatorReport<T> {
    pub fn pass(&self) -> bool {
        self.identity_checks.iter().all(CheckItem::pass)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    Symmetric,
    Skew,
}

/// A nondegenerate bilinear form together with its symmetry type.
#[derive(Clone, Debug)]
pub struct FormClassification<T: Scalar> {
    pub gram: Matrix<T>,
    pub kind: FormKind,
}

/// Result of solving chi^(2) = sum c_i chi_i against the character rows.
#[derive(Clone, Debug)]
pub struct Chi2Decomposition<T: Scalar> {
    pub functional: Vec<T>,
    pub coefficients: Option<Vec<T>>,
    pub integral_flag: bool,
}

impl<T: Scalar> Chi2Decomposition<T> {
    pub fn in_span(&self) -> bool {
        self.coefficients.is_some()
    }
}

/// nu_m(chi_i) = chi_i(Lambda^[m]) for each block.
pub fn nu_m<T: Scalar>(
    h: &HopfData<T>,
    decomp: &BlockDecomposition<T>,
    m: usize,
) -> Result<Vec<T>> {
    let integral = h.two_sided_integral()?;
    let lm = h.sweedler_power(&integral.lambda_h, m);
    Ok((0..decomp.d)
        .map(|i| decomp.character_of(i, &lm))
        .collect())
}

/// mu_2(chi_i) = n_i * chi_i(sum_r S(a_r) b_r) / chi_i(sum_r a_r b_r) for the
/// dual bases of a symmetric associative nondegenerate form.
pub fn mu2_via_form<T: Scalar>(
    alg: &StructureAlgebra<T>,
    s: &Matrix<T>,
    decomp: &BlockDecomposition<T>,
    form: &BilinearForm<T>,
) -> Result<Vec<T>> {
    if !form.is_symmetric() {
        return Err(Error::NotAssociativeForm(0, 0, 0));
    }
    form.check_associative(alg)?;
    check_involution(alg, s)?;
    let pair = dual_basis(form)?;
    // the two Casimir contractions: sum a_r b_r and sum S(a_r) b_r
    let mut plain = Element::zero(alg.dim);
    let mut twisted = Element::zero(alg.dim);
    for (a, b) in pair.a_basis.iter().zip(&pair.b_basis) {
        plain = plain.add(&alg.multiply(a, b)?);
        let sa = Element {
            coeffs: s.mul_vec(&a.coeffs),
        };
        twisted = twisted.add(&alg.multiply(&sa, b)?);
    }
    let mut out = Vec::with_capacity(decomp.d);
    for i in 0..decomp.d {
        let denom = decomp.character_of(i, &plain);
        if denom.is_zero() {
            return Err(Error::ZeroNormalizer(i));
        }
        let num = decomp.character_of(i, &twisted);
        out.push(T::from_int(decomp.degrees[i] as i64) * num / denom);
    }
    Ok(out)
}

/// flag_i = (chi_i composed with S equals chi_i).
pub fn self_duality<T: Scalar>(
    alg: &StructureAlgebra<T>,
    decomp: &BlockDecomposition<T>,
    s: &Matrix<T>,
) -> Result<Vec<bool>> {
    check_involution(alg, s)?;
    let mut flags = Vec::with_capacity(decomp.d);
    for i in 0..decomp.d {
        let ok = (0..alg.dim).all(|j| {
            let sb = Element { coeffs: s.col(j) };
            decomp.character_of(i, &sb) == decomp.characters[(i, j)]
        });
        flags.push(ok);
    }
    Ok(flags)
}

/// Tr S together with the identity Tr S = sum nu2(chi_i) n_i, the vanishing
/// of non-self-dual block pairs, and (for group algebras) Tr S = 1 + t.
pub fn trace_antipode_report<T: Scalar>(
    h: &HopfData<T>,
    decomp: &BlockDecomposition<T>,
    nu2: &[T],
    group: Option<&FiniteGroup>,
) -> (T, HopfReport) {
    let trace_s = h.antipode.trace();
    let mut items = Vec::new();

    let mut rhs = T::zero();
    for (i, v) in nu2.iter().enumerate() {
        rhs = rhs + v.clone() * T::from_int(decomp.degrees[i] as i64);
    }
    items.push(if trace_s == rhs {
        CheckItem::ok("Tr S = sum nu2(chi) chi(1)")
    } else {
        CheckItem::fail(
            "Tr S = sum nu2(chi) chi(1)",
            format!("Tr S = {}, sum = {}", trace_s.render(), rhs.render()),
        )
    });

    match antiauto_block_permutation(&h.algebra, &h.antipode, decomp) {
        Ok(perm) => {
            let mut pair_check = CheckItem::ok("non-self-dual block pairs contribute 0 to Tr S");
            for i in 0..decomp.d {
                let j = perm.perm[i];
                if j <= i {
                    continue;
                }
                // Tr of S restricted to Ae_i + Ae_j, via the projection R_{e_i+e_j}
                let p = h
                    .algebra
                    .right_regular_matrix(&decomp.idempotents[i].add(&decomp.idempotents[j]));
                let restricted = h.antipode.matmul(&p).trace();
                if !restricted.is_zero() || !nu2[i].is_zero() || !nu2[j].is_zero() {
                    pair_check = CheckItem::fail(
                        "non-self-dual block pairs contribute 0 to Tr S",
                        format!("blocks {i}, {j}"),
                    );
                    break;
                }
            }
            items.push(pair_check);
        }
        Err(e) => items.push(CheckItem::fail(
            "non-self-dual block pairs contribute 0 to Tr S",
            e.to_string(),
        )),
    }

    if let Some(g) = group {
        let expected = T::from_int(1 + g.involution_count() as i64);
        items.push(if trace_s == expected {
            CheckItem::ok("Tr S = 1 + #involutions")
        } else {
            CheckItem::fail(
                "Tr S = 1 + #involutions",
                format!(
                    "Tr S = {}, 1 + t = {}",
                    trace_s.render(),
                    expected.render()
                ),
            )
        });
    }
    (trace_s, HopfReport { items })
}

/// Classify an involution on a matrix-unit algebra M_n: solve
/// S(a) J = J a^t for J, read off J^t = +-J, and cross-check Tr S
/// (n for a symmetric form, -n for a skew form).
pub fn albert_classify<T: Scalar>(
    alg: &StructureAlgebra<T>,
    s: &Matrix<T>,
) -> Result<(FormClassification<T>, T)> {
    check_involution(alg, s)?;
    let n2 = alg.dim;
    let n = crate::scalar::isqrt_exact(n2).ok_or(Error::NonSquareBlock { block: 0, dim: n2 })?;
    // basis index l*n + m is the matrix unit e_{lm}
    let as_matrix = |x: &Element<T>| {
        Matrix::from_fn(n, n, |l, m| x.coeffs[l * n + m].clone())
    };
    // unknowns J_{pq}, index p*n + q; for each basis element a = e_{lm}:
    // S(a) J - J e_{ml} = 0, which is n^2 linear equations in J.
    let mut rows = Vec::with_capacity(n2 * n2);
    for l in 0..n {
        for m in 0..n {
            let sa = as_matrix(&Element {
                coeffs: s.col(l * n + m),
            });
            for r in 0..n {
                for c in 0..n {
                    let mut row = vec![T::zero(); n2];
                    // (S(a) J)_{rc} = sum_k S(a)_{rk} J_{kc}
                    for k in 0..n {
                        row[k * n + c] = row[k * n + c].clone() + sa[(r, k)].clone();
                    }
                    // (J e_{ml})_{rc} = J_{rm} [c == l]
                    if c == l {
                        row[r * n + m] = row[r * n + m].clone() - T::one();
                    }
                    rows.push(row);
                }
            }
        }
    }
    let ns = Matrix::from_rows(rows).nullspace();
    if ns.len() != 1 {
        return Err(Error::NoAdjointForm(ns.len()));
    }
    let raw = ns.into_iter().next().unwrap();
    let pivot = raw
        .iter()
        .find(|c| !c.is_zero())
        .cloned()
        .ok_or(Error::NoAdjointForm(0))?;
    let inv = T::one() / pivot;
    let j = Matrix::from_fn(n, n, |p, q| raw[p * n + q].clone() * inv.clone());
    let jt = j.transpose();
    let kind = if jt == j {
        FormKind::Symmetric
    } else if jt == j.scale(&-T::one()) {
        FormKind::Skew
    } else {
        return Err(Error::NoAdjointForm(1));
    };
    j.inverse().map_err(|_| Error::DegenerateForm)?;

    let trace_s = s.trace();
    let expected = match kind {
        FormKind::Symmetric => T::from_int(n as i64),
        FormKind::Skew => T::from_int(-(n as i64)),
    };
    if trace_s != expected {
        return Err(Error::NoAdjointForm(2));
    }
    // Cor 2.5: sum_{l,m} tr(S(e_lm) e_ml) = Tr S
    let mut cor25 = T::zero();
    for l in 0..n {
        for m in 0..n {
            let se = as_matrix(&Element {
                coeffs: s.col(l * n + m),
            });
            // tr(S(e_lm) e_ml): e_ml picks column l of row m... S(e_lm) e_ml
            // has trace equal to S(e_lm)_{lm}... compute directly:
            let mut unit = Matrix::zero(n, n);
            unit[(m, l)] = T::one();
            cor25 = cor25 + se.matmul(&unit).trace();
        }
    }
    if cor25 != trace_s {
        return Err(Error::NoAdjointForm(3));
    }
    Ok((FormClassification { gram: j, kind }, trace_s))
}

/// Solve for an H-invariant bilinear form J on a module given by rep
/// matrices: sum rho(h_1)^t J rho(h_2) = eps(h) J for every basis h.
/// Returns None when only J = 0 solves.
pub fn invariant_form_on_module<T: Scalar>(
    h: &HopfData<T>,
    rep: &[Matrix<T>],
) -> Result<Option<FormClassification<T>>> {
    let n = h.dim();
    if rep.len() != n {
        return Err(Error::NotRepresentation(0, 0));
    }
    let k = rep[0].rows;
    // rho is an algebra map: rho extended linearly respects products and unit
    let rho_of = |x: &Element<T>| {
        let mut m = Matrix::zero(k, k);
        for (i, c) in x.coeffs.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&rep[i].scale(c));
            }
        }
        m
    };
    if !rho_of(&h.algebra.unit_element()).is_identity() {
        return Err(Error::NotRepresentation(0, 0));
    }
    for i in 0..n {
        for j in 0..n {
            if rep[i].matmul(&rep[j]) != rho_of(&h.algebra.basis_product(i, j)) {
                return Err(Error::NotRepresentation(i, j));
            }
        }
    }
    // unknowns J_{pq}, index p*k + q
    let mut rows = Vec::new();
    for i in 0..n {
        // sum_{(p,q,c)} c rho(b_p)^t J rho(b_q) - eps(b_i) J = 0
        for r in 0..k {
            for cc in 0..k {
                let mut row = vec![T::zero(); k * k];
                for (p, q, c) in &h.comult[i] {
                    let rp = &rep[*p];
                    let rq = &rep[*q];
                    // entry (r, cc) of rho(b_p)^t J rho(b_q)
                    //   = sum_{u,v} rho(b_p)_{ur} J_{uv} rho(b_q)_{v cc}
                    for u in 0..k {
                        if rp[(u, r)].is_zero() {
                            continue;
                        }
                        for v in 0..k {
                            row[u * k + v] = row[u * k + v].clone()
                                + c.clone() * rp[(u, r)].clone() * rq[(v, cc)].clone();
                        }
                    }
                }
                row[r * k + cc] = row[r * k + cc].clone() - h.counit[i].clone();
                rows.push(row);
            }
        }
    }
    let ns = Matrix::from_rows(rows).nullspace();
    if ns.is_empty() {
        return Ok(None);
    }
    let raw = &ns[0];
    let pivot = raw.iter().find(|c| !c.is_zero()).cloned().unwrap();
    let inv = T::one() / pivot;
    let j = Matrix::from_fn(k, k, |p, q| raw[p * k + q].clone() * inv.clone());
    let jt = j.transpose();
    let kind = if jt == j {
        FormKind::Symmetric
    } else if jt == j.scale(&-T::one()) {
        FormKind::Skew
    } else {
        return Err(Error::NoAdjointForm(ns.len()));
    };
    j.inverse().map_err(|_| Error::DegenerateForm)?;
    Ok(Some(FormClassification { gram: j, kind }))
}

/// chi^(2) functional f(b_j) = chi_i((b_j)^[2]), solved against the character
/// rows.
pub fn chi2_decompose<T: Scalar>(
    h: &HopfData<T>,
    decomp: &BlockDecomposition<T>,
    i: usize,
) -> Chi2Decomposition<T> {
    let n = h.dim();
    let functional: Vec<T> = (0..n)
        .map(|j| {
            let sq = h.sweedler_power(&Element::basis(n, j), 2);
            decomp.character_of(i, &sq)
        })
        .collect();
    // solve sum_i c_i chi_i(b_j) = f(b_j): columns are character rows
    let m = Matrix::from_fn(n, decomp.d, |j, r| decomp.characters[(r, j)].clone());
    let coefficients = m.solve(&functional);
    let integral_flag = coefficients.as_ref().is_some_and(|cs| {
        cs.iter().all(|c| {
            c.as_rational().map(|r| r.is_integer()).unwrap_or(false)
        })
    });
    Chi2Decomposition {
        functional,
        coefficients,
        integral_flag,
    }
}

/// Assemble the full per-character report for a Hopf algebra.
pub fn indicator_report<T: Scalar>(
    h: &HopfData<T>,
    decomp: &BlockDecomposition<T>,
    extra_m: &[usize],
    group: Option<&FiniteGroup>,
) -> Result<IndicatorReport<T>> {
    let nu2 = nu_m(h, decomp, 2)?;
    let flags = self_duality(&h.algebra, decomp, &h.antipode)?;
    let mut checks = Vec::new();

    let membership_ok = nu2
        .iter()
        .all(|v| v.is_zero() || v.is_one() || (-v.clone()).is_one());
    checks.push(if membership_ok {
        CheckItem::ok("nu2 in {0, 1, -1}")
    } else {
        CheckItem::fail(
            "nu2 in {0, 1, -1}",
            format!(
                "nu2 = ({})",
                nu2.iter()
                    .map(Scalar::render)
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        )
    });
    let duality_ok = nu2
        .iter()
        .zip(&flags)
        .all(|(v, f)| *f == !v.is_zero());
    checks.push(if duality_ok {
        CheckItem::ok("nu2 != 0 iff chi self-dual")
    } else {
        CheckItem::fail("nu2 != 0 iff chi self-dual", "mismatch".into())
    });

    let (trace_s, trace_report) = trace_antipode_report(h, decomp, &nu2, group);
    checks.extend(trace_report.items);

    let mut per_m: Vec<Vec<T>> = Vec::new();
    for &m in extra_m {
        per_m.push(nu_m(h, decomp, m)?);
    }
    let records = (0..decomp.d)
        .map(|i| CharacterRecord {
            index: i,
            degree: decomp.degrees[i],
            nu2: nu2[i].clone(),
            self_dual: flags[i],
            nu_m: extra_m
                .iter()
                .enumerate()
                .map(|(mi, &m)| (m, per_m[mi][i].clone()))
                .collect(),
        })
        .collect();
    Ok(IndicatorReport {
        records,
        trace_s,
        identity_checks: checks,
    })
}

/// Group oracle nu_m(chi) = (1/|G|) sum_g chi(g^m).
pub fn group_nu_m<T: Scalar>(
    g: &FiniteGroup,
    decomp: &BlockDecomposition<T>,
    m: usize,
) -> Vec<T> {
    let inv_order = T::one() / T::from_int(g.order as i64);
    (0..decomp.d)
        .map(|i| {
            let mut s = T::zero();
            for x in 0..g.order {
                s = s + decomp.characters[(i, g.pow(x, m))].clone();
            }
            s * inv_order.clone()
        })
        .collect()
}

/// Indicator-sum identity for group algebras: theta_m(h) = sum_chi nu_m(chi) chi(h)
/// pointwise, with the Hopf nu_m matching the group oracle, and
/// Tr S = 1 + #involutions.
pub fn verify_eq1<T: Scalar>(
    g: &FiniteGroup,
    h: &HopfData<T>,
    decomp: &BlockDecomposition<T>,
    m: usize,
) -> Result<HopfReport> {
    let mut items = Vec::new();
    let hopf_nu = nu_m(h, decomp, m)?;
    let group_nu = group_nu_m(g, decomp, m);
    items.push(if hopf_nu == group_nu {
        CheckItem::ok("Hopf nu_m equals group nu_m")
    } else {
        CheckItem::fail(
            "Hopf nu_m equals group nu_m",
            format!(
                "hopf ({}) vs group ({})",
                hopf_nu.iter().map(Scalar::render).collect::<Vec<_>>().join(", "),
                group_nu.iter().map(Scalar::render).collect::<Vec<_>>().join(", "),
            ),
        )
    });

    let counts = crate::constructions::root_counts(g, m);
    let mut eq1 = CheckItem::ok("theta_m indicator sum pointwise");
    'outer: for x in 0..g.order {
        let mut rhs = T::zero();
        for i in 0..decomp.d {
            rhs = rhs + group_nu[i].clone() * decomp.characters[(i, x)].clone();
        }
        if rhs != T::from_int(counts.counts[x] as i64) {
            eq1 = CheckItem::fail(
                "theta_m indicator sum pointwise",
                format!("fails at {}", g.labels[x]),
            );
            break 'outer;
        }
    }
    items.push(eq1);

    let trace_s = h.antipode.trace();
    let expected = T::from_int(1 + g.involution_count() as i64);
    items.push(if trace_s == expected {
        CheckItem::ok("Tr S = 1 + #involutions")
    } else {
        CheckItem::fail(
            "Tr S = 1 + #involutions",
            format!("Tr S = {}", trace_s.render()),
        )
    });
    Ok(HopfReport { items })
}

/// The Casimir element of a form does not depend on the chosen dual-basis
/// pair.
pub fn casimir_of_form<T: Scalar>(form: &BilinearForm<T>) -> Result<Vec<T>> {
    Ok(casimir_element(&dual_basis(form)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;
    use crate::constructions::{
        congruence_involution, group_algebra, groups, matrix_units, preset, q8_rep,
        s3_standard_rep, transpose_involution, Preset,
    };
    use crate::scalar::{GaussianRational, Rational};
    use crate::wedderburn::{decompose, DEFAULT_SEED};

    fn q(n: i64) -> Rational {
        <Rational as Scalar>::from_int(n)
    }
    fn qi(n: i64) -> GaussianRational {
        <GaussianRational as Scalar>::from_int(n)
    }

    #[test]
    fn s3_indicators() {
        let h = group_algebra::<Rational>(&groups::s3()).unwrap();
        let d = decompose(&h.algebra, DEFAULT_SEED).unwrap();
        assert_eq!(nu_m(&h, &d, 1).unwrap(), vec![q(1), q(0), q(0)]);
        assert_eq!(nu_m(&h, &d, 2).unwrap(), vec![q(1), q(1), q(1)]);
        let g = groups::s3();
        let report = indicator_report(&h, &d, &[1, 2, 3], Some(&g)).unwrap();
        assert!(report.pass(), "{:?}", report.identity_checks);
        assert_eq!(report.trace_s, q(4));
    }

    #[test]
    fn q8_indicators_match_group_oracle() {
        let h = group_algebra::<GaussianRational>(&groups::q8()).unwrap();
        let d = decompose(&h.algebra, DEFAULT_SEED).unwrap();
        let nu2 = nu_m(&h, &d, 2).unwrap();
        assert_eq!(nu2, vec![qi(1), qi(1), qi(1), qi(1), qi(-1)]);
        let g = groups::q8();
        assert_eq!(group_nu_m(&g, &d, 2), nu2);
        let (tr, rep) = trace_antipode_report(&h, &d, &nu2, Some(&g));
        assert_eq!(tr, qi(2));
        assert!(rep.pass(), "{:?}", rep.items);
    }

    #[test]
    fn c4_self_duality() {
        let h = group_algebra::<GaussianRational>(&groups::cyclic(4)).unwrap();
        let d = decompose(&h.algebra, DEFAULT_SEED).unwrap();
        let flags = self_duality(&h.algebra, &d, &h.antipode).unwrap();
        assert_eq!(flags, vec![true, false, true, false]);
        let nu2 = nu_m(&h, &d, 2).unwrap();
        assert_eq!(nu2, vec![qi(1), qi(0), qi(1), qi(0)]);
    }

    #[test]
    fn mu2_equals_nu2_and_is_scale_invariant() {
        let h = group_algebra::<Rational>(&groups::s3()).unwrap();
        let d = decompose(&h.algebra, DEFAULT_SEED).unwrap();
        let nu2 = nu_m(&h, &d, 2).unwrap();
        let trace_form = h.algebra.regular_trace_form();
        let mu = mu2_via_form(&h.algebra, &h.antipode, &d, &trace_form).unwrap();
        assert_eq!(mu, nu2);
        let scaled = trace_form.scale(&q(3));
        assert_eq!(mu2_via_form(&h.algebra, &h.antipode, &d, &scaled).unwrap(), nu2);
        let integral = h.two_sided_integral().unwrap();
        let lambda = h.regular_character(&integral).unwrap();
        let lf = h.lambda_form(&lambda);
        assert_eq!(mu2_via_form(&h.algebra, &h.antipode, &d, &lf).unwrap(), nu2);
    }

    #[test]
    fn albert_fixtures() {
        let m2 = matrix_units::<Rational>(2);
        let (cls, tr) = albert_classify(&m2, &transpose_involution(2)).unwrap();
        assert_eq!(cls.kind, FormKind::Symmetric);
        assert!(cls.gram.is_identity());
        assert_eq!(tr, q(2));

        let g = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(-1), q(0)]]);
        let s = congruence_involution(&g).unwrap();
        let (cls, tr) = albert_classify(&m2, &s).unwrap();
        assert_eq!(cls.kind, FormKind::Skew);
        assert_eq!(tr, q(-2));

        let m3 = matrix_units::<Rational>(3);
        let d = Matrix::from_rows(vec![
            vec![q(1), q(0), q(0)],
            vec![q(0), q(2), q(0)],
            vec![q(0), q(0), q(3)],
        ]);
        let s = congruence_involution(&d).unwrap();
        let (cls, tr) = albert_classify(&m3, &s).unwrap();
        assert_eq!(cls.kind, FormKind::Symmetric);
        assert_eq!(tr, q(3));
    }

    #[test]
    fn invariant_forms_on_rep_fixtures() {
        let h = group_algebra::<Rational>(&groups::s3()).unwrap();
        let rep = s3_standard_rep::<Rational>();
        let cls = invariant_form_on_module(&h, &rep).unwrap().unwrap();
        assert_eq!(cls.kind, FormKind::Symmetric);

        let h = group_algebra::<GaussianRational>(&groups::q8()).unwrap();
        let cls = invariant_form_on_module(&h, &q8_rep()).unwrap().unwrap();
        assert_eq!(cls.kind, FormKind::Skew);

        // trivial 1-dim rep
        let rep: Vec<Matrix<GaussianRational>> = (0..8)
            .map(|_| Matrix::identity(1))
            .collect();
        let cls = invariant_form_on_module(&h, &rep).unwrap().unwrap();
        assert_eq!(cls.kind, FormKind::Symmetric);
    }

    #[test]
    fn chi2_group_in_span() {
        let h = group_algebra::<Rational>(&groups::s3()).unwrap();
        let d = decompose(&h.algebra, DEFAULT_SEED).unwrap();
        for i in 0..d.d {
            let dec = chi2_decompose(&h, &d, i);
            assert!(dec.in_span());
            assert!(dec.integral_flag);
        }
        // trivial character: chi^(2) = trivial character itself
        let dec = chi2_decompose(&h, &d, 0);
        assert_eq!(dec.coefficients.unwrap(), vec![q(1), q(0), q(0)]);
    }

    #[test]
    fn kac16_chi2_virtual_characters() {
        // For both degree-2 characters of the Kac-16 algebra, chi^(2) lies in
        // the span of the one-dimensional characters with integer
        // coefficients.  One of the two decompositions has a negative
        // coefficient (a virtual character that is not a character); the
        // other is a genuine character sum.  Derived by hand from
        // Delta(q) = q p_+ (x) q + q p_- (x) alpha(q), alpha = (a <-> b):
        //   chi(2)_+(q g^j) = chi_rho(q^2)        = -chi_triv + chi_i + chi_j + chi_k
        //   chi(2)_-(q g^j) = chi_rho(q alpha(q)) =  chi_triv + chi_k
        // and cross-checked against an independent modular-arithmetic model.
        let h = preset::<GaussianRational>(Preset::Kac16).unwrap();
        let d = decompose(&h.algebra, DEFAULT_SEED).unwrap();
        let mut deg2_profiles: Vec<Vec<i64>> = Vec::new();
        for i in 0..d.d {
            let dec = chi2_decompose(&h, &d, i);
            assert!(dec.in_span(), "block {i} not in span");
            assert!(dec.integral_flag, "block {i} non-integer coefficients");
            let cs = dec.coefficients.unwrap();
            // chi^(2) always lands in the span of the 1-dim characters here
            for (j, c) in cs.iter().enumerate() {
                if d.degrees[j] == 2 {
                    assert!(c.is_zero(), "block {i}: degree-2 coefficient");
                }
            }
            if d.degrees[i] == 2 {
                let mut profile: Vec<i64> = cs
                    .iter()
                    .map(|c| {
                        let r = c.as_rational().unwrap();
                        assert!(r.is_integer());
                        i64::try_from(r.numer().clone()).unwrap()
                    })
                    .collect();
                profile.sort_unstable();
                deg2_profiles.push(profile);
            }
        }
        deg2_profiles.sort();
        assert_eq!(
            deg2_profiles,
            vec![
                vec![-1, 0, 0, 0, 0, 0, 0, 1, 1, 1],
                vec![0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
            ]
        );
    }

    #[test]
    fn kac16_indicator_report() {
        let h = preset::<GaussianRational>(Preset::Kac16).unwrap();
        let d = decompose(&h.algebra, DEFAULT_SEED).unwrap();
        let report = indicator_report(&h, &d, &[2], None).unwrap();
        assert!(report.pass(), "{:?}", report.identity_checks);
        // regression: recorded after first computation
        let nu2: Vec<GaussianRational> =
            report.records.iter().map(|r| r.nu2.clone()).collect();
        let expected_tr: GaussianRational = nu2
            .iter()
            .zip(&d.degrees)
            .map(|(v, &n)| v.clone() * qi(n as i64))
            .fold(GaussianRational::zero(), |a, b| a + b);
        assert_eq!(report.trace_s, expected_tr);
    }

    #[test]
    fn eq1_group_presets() {
        let g = groups::s3();
        let h = group_algebra::<Rational>(&g).unwrap();
        let d = decompose(&h.algebra, DEFAULT_SEED).unwrap();
        for m in 1..=6 {
            let rep = verify_eq1(&g, &h, &d, m).unwrap();
            assert!(rep.pass(), "m = {m}: {:?}", rep.items);
        }
        let g = groups::cyclic(4);
        let h = group_algebra::<GaussianRational>(&g).unwrap();
        let d = decompose(&h.algebra, DEFAULT_SEED).unwrap();
        let nu2 = group_nu_m(&g, &d, 2);
        assert_eq!(nu2, vec![qi(1), qi(0), qi(1), qi(0)]);
        for m in 1..=6 {
            assert!(verify_eq1(&g, &h, &d, m).unwrap().pass());
        }
    }
}
