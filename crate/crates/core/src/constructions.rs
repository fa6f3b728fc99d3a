//! Input generators and brute-force group oracles: group algebras from
//! multiplication tables, named presets (including the 16-dimensional
//! smash-coproduct fixture), matrix-unit algebras, representation fixtures
//! and the root-count machinery.

use std::str::FromStr;

use num::{One, Zero};

use crate::algebra::{Element, MultTensor, StructureAlgebra};
use crate::error::{Error, Result};
use crate::hopf::{ComultTensor, HopfData};
use crate::linalg::Matrix;
use crate::scalar::{GaussianRational, Scalar};

/// A finite group given by its multiplication table. Index 0 is the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
    pub labels: Vec<String>,
}

impl FiniteGroup {
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        let bad = |msg: String| Error::InvalidGroupTable(msg);
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(bad("table is not square".into()));
        }
        for row in &table {
            for &v in row {
                if v >= n {
                    return Err(bad(format!("index {v} out of range")));
                }
            }
        }
        // identity at index 0
        for j in 0..n {
            if table[0][j] != j || table[j][0] != j {
                return Err(bad("index 0 is not a two-sided identity".into()));
            }
        }
        // Latin square
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                if seen_row[table[i][j]] || seen_col[table[j][i]] {
                    return Err(bad(format!("row or column {i} is not a permutation")));
                }
                seen_row[table[i][j]] = true;
                seen_col[table[j][i]] = true;
            }
        }
        // associativity
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        return Err(bad(format!("associativity fails at ({i}, {j}, {k})")));
                    }
                }
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for i in 0..n {
            match (0..n).find(|&j| table[i][j] == 0 && table[j][i] == 0) {
                Some(j) => inverse[i] = j,
                None => return Err(bad(format!("element {i} has no inverse"))),
            }
        }
        Ok(FiniteGroup {
            order: n,
            table,
            inverse,
            labels,
        })
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn pow(&self, g: usize, m: usize) -> usize {
        let mut acc = 0;
        for _ in 0..m {
            acc = self.mul(acc, g);
        }
        acc
    }

    /// Number of elements of order two.
    pub fn involution_count(&self) -> usize {
        (1..self.order).filter(|&g| self.mul(g, g) == 0).count()
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let n = self.order;
        let m = other.order;
        let idx = |a: usize, b: usize| a + n * b;
        let mut labels = Vec::with_capacity(n * m);
        for b in 0..m {
            for a in 0..n {
                labels.push(match (a, b) {
                    (0, 0) => "e".to_string(),
                    (_, 0) => self.labels[a].clone(),
                    (0, _) => other.labels[b].clone(),
                    _ => format!("{}{}", self.labels[a], other.labels[b]),
                });
            }
        }
        let mut table = vec![vec![0; n * m]; n * m];
        for a1 in 0..n {
            for b1 in 0..m {
                for a2 in 0..n {
                    for b2 in 0..m {
                        table[idx(a1, b1)][idx(a2, b2)] =
                            idx(self.mul(a1, a2), other.mul(b1, b2));
                    }
                }
            }
        }
        FiniteGroup::new(labels, table).expect("direct product of valid groups")
    }
}

/// Counts theta_m(h) = |{g : g^m = h}| for every h.
#[derive(Clone, Debug)]
pub struct RootCountFunction {
    pub m: usize,
    pub counts: Vec<usize>,
}

pub fn root_counts(g: &FiniteGroup, m: usize) -> RootCountFunction {
    assert!(m >= 1);
    let mut counts = vec![0usize; g.order];
    for x in 0..g.order {
        counts[g.pow(x, m)] += 1;
    }
    RootCountFunction { m, counts }
}

pub mod groups {
    use super::*;

    fn power_label(base: &str, i: usize) -> String {
        match i {
            0 => String::new(),
            1 => base.to_string(),
            _ => format!("{base}{i}"),
        }
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        let labels = (0..n)
            .map(|i| {
                if i == 0 {
                    "e".to_string()
                } else {
                    power_label("g", i)
                }
            })
            .collect();
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        FiniteGroup::new(labels, table).expect("cyclic group")
    }

    /// The group <a, b | a^n = e, b^2 = a^t, b a = a^-1 b> on elements
    /// a^i b^j with 0 <= i < n, j in {0, 1}. t = 0 gives dihedral groups,
    /// n = 4 and t = 2 gives the quaternion group.
    fn bicyclic(n: usize, t: usize) -> FiniteGroup {
        let idx = |i: usize, j: usize| i + n * j;
        let mut labels = Vec::with_capacity(2 * n);
        for j in 0..2 {
            for i in 0..n {
                let l = format!("{}{}", power_label("a", i), if j == 1 { "b" } else { "" });
                labels.push(if l.is_empty() { "e".to_string() } else { l });
            }
        }
        let mut table = vec![vec![0; 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..2 {
                for k in 0..n {
                    for l in 0..2 {
                        let (ri, rj) = if j == 0 {
                            ((i + k) % n, l)
                        } else if l == 0 {
                            ((n + i - k % n) % n, 1)
                        } else {
                            ((2 * n + i - k % n + t) % n, 0)
                        };
                        table[idx(i, j)][idx(k, l)] = idx(ri, rj);
                    }
                }
            }
        }
        FiniteGroup::new(labels, table).expect("bicyclic group")
    }

    pub fn s3() -> FiniteGroup {
        bicyclic(3, 0)
    }

    pub fn d4() -> FiniteGroup {
        bicyclic(4, 0)
    }

    pub fn q8() -> FiniteGroup {
        bicyclic(4, 2)
    }

    pub fn q8_times_c2() -> FiniteGroup {
        q8().direct_product(&cyclic(2))
    }
}

/// Group algebra kG with its standard Hopf structure: Delta(g) = g (x) g,
/// eps(g) = 1, S(g) = g^-1.
pub fn group_algebra<T: Scalar>(g: &FiniteGroup) -> Result<HopfData<T>> {
    let n = g.order;
    let mut mult: MultTensor<T> = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            mult[i][j] = vec![(g.mul(i, j), T::one())];
        }
    }
    let mut unit = vec![T::zero(); n];
    unit[0] = T::one();
    let algebra = StructureAlgebra::new(g.labels.clone(), mult, unit);
    let comult: ComultTensor<T> = (0..n).map(|i| vec![(i, i, T::one())]).collect();
    let counit = vec![T::one(); n];
    let mut antipode = Matrix::zero(n, n);
    for i in 0..n {
        antipode[(g.inverse[i], i)] = T::one();
    }
    Ok(HopfData {
        algebra,
        comult,
        counit,
        antipode,
    })
}

/// Named stable CLI presets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    C2,
    C3,
    C4,
    S3,
    D4,
    Q8,
    Kac16,
}

impl Preset {
    pub const ALL: [Preset; 7] = [
        Preset::C2,
        Preset::C3,
        Preset::C4,
        Preset::S3,
        Preset::D4,
        Preset::Q8,
        Preset::Kac16,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Preset::C2 => "c2",
            Preset::C3 => "c3",
            Preset::C4 => "c4",
            Preset::S3 => "s3",
            Preset::D4 => "d4",
            Preset::Q8 => "q8",
            Preset::Kac16 => "kac16",
        }
    }

    /// The underlying group, where the preset is (as an algebra) a group
    /// algebra. This is every preset; kac16 is kG only as an algebra.
    pub fn group(&self) -> FiniteGroup {
        match self {
            Preset::C2 => groups::cyclic(2),
            Preset::C3 => groups::cyclic(3),
            Preset::C4 => groups::cyclic(4),
            Preset::S3 => groups::s3(),
            Preset::D4 => groups::d4(),
            Preset::Q8 => groups::q8(),
            Preset::Kac16 => groups::q8_times_c2(),
        }
    }

    /// True when the Hopf structure is the group-algebra one (so that the
    /// group-side indicator oracles apply).
    pub fn is_group_algebra(&self) -> bool {
        !matches!(self, Preset::Kac16)
    }
}

impl FromStr for Preset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPreset(s.to_string()))
    }
}

pub fn preset<T: Scalar>(p: Preset) -> Result<HopfData<T>> {
    match p {
        Preset::Kac16 => kac16(),
        _ => group_algebra(&p.group()),
    }
}

/// The 16-dimensional smash coproduct kQ8 #^alpha kC2: the group algebra of
/// Q8 x C2 as an algebra, with the twisted coalgebra structure generated by
///
///   Delta(a) = (a(x)a + ag(x)a + a(x)b - ag(x)b)/2
///   Delta(b) = (b(x)b + bg(x)b + b(x)a - bg(x)a)/2
///   Delta(g) = g(x)g
///   S(a) = (a^3 + a^3 g + a^2 b - a^2 b g)/2
///   S(b) = (b^3 + b^3 g + a^3 - a^3 g)/2,  S(g) = g,  eps = 1 on the basis.
///
/// The tensors on all 16 basis elements are expanded here from the generator
/// formulas (Delta multiplicatively, S antimultiplicatively) and certified
/// by the axiom suite in tests.
pub fn kac16<T: Scalar>() -> Result<HopfData<T>> {
    let g16 = groups::q8_times_c2();
    let base: HopfData<T> = group_algebra(&g16)?;
    let alg = base.algebra;
    let n = 16usize;
    let idx = |label: &str| -> usize {
        g16.labels
            .iter()
            .position(|l| l == label)
            .unwrap_or_else(|| panic!("no basis element {label}"))
    };
    let half = T::from_ratio(1, 2);
    let mhalf = T::from_ratio(-1, 2);

    // generator coproducts as dense tensor-square vectors
    let tensor = |terms: &[(&str, &str, T)]| -> Vec<T> {
        let mut v = vec![T::zero(); n * n];
        for (l, r, c) in terms {
            v[idx(l) * n + idx(r)] = c.clone();
        }
        v
    };
    let da = tensor(&[
        ("a", "a", half.clone()),
        ("ag", "a", half.clone()),
        ("a", "b", half.clone()),
        ("ag", "b", mhalf.clone()),
    ]);
    let db = tensor(&[
        ("b", "b", half.clone()),
        ("bg", "b", half.clone()),
        ("b", "a", half.clone()),
        ("bg", "a", mhalf.clone()),
    ]);
    let dg = tensor(&[("g", "g", T::one())]);
    let dunit = tensor(&[("e", "e", T::one())]);

    // generator antipode images as elements of kG
    let elem = |terms: &[(&str, T)]| -> Element<T> {
        let mut v = Element::zero(n);
        for (l, c) in terms {
            v.coeffs[idx(l)] = c.clone();
        }
        v
    };
    // b^3 = b^2 b = a^2 b
    let sa = elem(&[
        ("a3", half.clone()),
        ("a3g", half.clone()),
        ("a2b", half.clone()),
        ("a2bg", mhalf.clone()),
    ]);
    let sb = elem(&[
        ("a2b", half.clone()),
        ("a2bg", half.clone()),
        ("a3", half.clone()),
        ("a3g", mhalf.clone()),
    ]);
    let sg = elem(&[("g", T::one())]);

    // every basis element is a^i b^j g^k in this basis order
    let normal_form = |q: usize| -> (usize, usize, usize) { (q % 8 % 4, q % 8 / 4, q / 8) };

    let mut comult: ComultTensor<T> = Vec::with_capacity(n);
    let mut antipode = Matrix::zero(n, n);
    for q in 0..n {
        let (i, j, k) = normal_form(q);
        // Delta(a^i b^j g^k) = Delta(a)^i Delta(b)^j Delta(g)^k
        let mut d = dunit.clone();
        for _ in 0..i {
            d = alg.tensor_square_mul(&d, &da);
        }
        for _ in 0..j {
            d = alg.tensor_square_mul(&d, &db);
        }
        for _ in 0..k {
            d = alg.tensor_square_mul(&d, &dg);
        }
        let mut entry = Vec::new();
        for p in 0..n {
            for r in 0..n {
                if !d[p * n + r].is_zero() {
                    entry.push((p, r, d[p * n + r].clone()));
                }
            }
        }
        comult.push(entry);
        // S(a^i b^j g^k) = S(g)^k S(b)^j S(a)^i
        let mut s = alg.unit_element();
        for _ in 0..k {
            s = alg.multiply(&s, &sg)?;
        }
        for _ in 0..j {
            s = alg.multiply(&s, &sb)?;
        }
        for _ in 0..i {
            s = alg.multiply(&s, &sa)?;
        }
        for (row, c) in s.coeffs.into_iter().enumerate() {
            antipode[(row, q)] = c;
        }
    }

    Ok(HopfData {
        algebra: alg,
        comult,
        counit: vec![T::one(); n],
        antipode,
    })
}

/// The full matrix algebra M_n as a structure algebra on matrix units;
/// basis index l*n + m is e_{lm}, labelled "e{l}{m}" (1-based).
pub fn matrix_units<T: Scalar>(n: usize) -> StructureAlgebra<T> {
    let dim = n * n;
    let mut labels = Vec::with_capacity(dim);
    for l in 0..n {
        for m in 0..n {
            labels.push(format!("e{}{}", l + 1, m + 1));
        }
    }
    let mut mult: MultTensor<T> = vec![vec![Vec::new(); dim]; dim];
    for l in 0..n {
        for m in 0..n {
            for p in 0..n {
                for q in 0..n {
                    if m == p {
                        mult[l * n + m][p * n + q] = vec![(l * n + q, T::one())];
                    }
                }
            }
        }
    }
    let mut unit = vec![T::zero(); dim];
    for l in 0..n {
        unit[l * n + l] = T::one();
    }
    StructureAlgebra::new(labels, mult, unit)
}

/// The transpose antiautomorphism of M_n on the matrix-unit basis.
pub fn transpose_involution<T: Scalar>(n: usize) -> Matrix<T> {
    let dim = n * n;
    let mut s = Matrix::zero(dim, dim);
    for l in 0..n {
        for m in 0..n {
            s[(m * n + l, l * n + m)] = T::one();
        }
    }
    s
}

/// The involution S(x) = G x^t G^-1 of M_n on the matrix-unit basis.
pub fn congruence_involution<T: Scalar>(g: &Matrix<T>) -> Result<Matrix<T>> {
    let n = g.rows;
    let ginv = g.inverse()?;
    let dim = n * n;
    let mut s = Matrix::zero(dim, dim);
    for l in 0..n {
        for m in 0..n {
            // image of e_{lm}: G e_{ml} G^-1
            let mut unit = Matrix::zero(n, n);
            unit[(m, l)] = T::one();
            let img = g.matmul(&unit).matmul(&ginv);
            for p in 0..n {
                for q in 0..n {
                    s[(p * n + q, l * n + m)] = img[(p, q)].clone();
                }
            }
        }
    }
    Ok(s)
}

/// The standard 2-dimensional representation of S3 (the reflection
/// representation), as matrices over any scalar field, indexed by the s3
/// preset basis order.
pub fn s3_standard_rep<T: Scalar>() -> Vec<Matrix<T>> {
    let g = groups::s3();
    let r = Matrix::from_rows(vec![
        vec![T::zero(), -T::one()],
        vec![T::one(), -T::one()],
    ]);
    let s = Matrix::from_rows(vec![
        vec![T::zero(), T::one()],
        vec![T::one(), T::zero()],
    ]);
    word_rep(&g, &r, &s, 3)
}

/// The 2-dimensional irreducible representation of Q8 over Q(i):
/// a -> diag(i, -i), b -> [[0, 1], [-1, 0]].
pub fn q8_rep() -> Vec<Matrix<GaussianRational>> {
    let g = groups::q8();
    let i = GaussianRational::i();
    let a = Matrix::from_rows(vec![
        vec![i.clone(), GaussianRational::zero()],
        vec![GaussianRational::zero(), -i],
    ]);
    let b = Matrix::from_rows(vec![
        vec![GaussianRational::zero(), GaussianRational::one()],
        vec![-GaussianRational::one(), GaussianRational::zero()],
    ]);
    word_rep(&g, &a, &b, 4)
}

/// Extend generator images rho(a), rho(b) over the a^i b^j basis order used
/// by the bicyclic constructions.
fn word_rep<T: Scalar>(
    g: &FiniteGroup,
    a: &Matrix<T>,
    b: &Matrix<T>,
    n: usize,
) -> Vec<Matrix<T>> {
    let k = a.rows;
    let mut out = Vec::with_capacity(g.order);
    for q in 0..g.order {
        let (i, j) = (q % n, q / n);
        let mut m = Matrix::identity(k);
        for _ in 0..i {
            m = m.matmul(a);
        }
        for _ in 0..j {
            m = m.matmul(b);
        }
        out.push(m);
    }
    out
}

/// A minimal non-semisimple fixture: the dual numbers k[x]/(x^2), whose
/// regular trace form is degenerate.
pub fn dual_numbers<T: Scalar>() -> StructureAlgebra<T> {
    let mult = vec![
        vec![vec![(0, T::one())], vec![(1, T::one())]],
        vec![vec![(1, T::one())], vec![]],
    ];
    StructureAlgebra::new(
        vec!["e".into(), "x".into()],
        mult,
        vec![T::one(), T::zero()],
    )
}

/// The 4-dimensional Sweedler-like non-semisimple algebra
/// k<g, x | g^2 = 1, x^2 = 0, xg = -gx> on the basis {1, g, x, gx}.
pub fn sweedler4<T: Scalar>() -> StructureAlgebra<T> {
    let one = T::one;
    let n = 4;
    // indices: 0 = 1, 1 = g, 2 = x, 3 = gx
    let mut mult: MultTensor<T> = vec![vec![Vec::new(); n]; n];
    let set = |mult: &mut MultTensor<T>, i: usize, j: usize, k: usize, c: T| {
        mult[i][j] = vec![(k, c)];
    };
    for j in 0..n {
        set(&mut mult, 0, j, j, one());
        if j != 0 {
            set(&mut mult, j, 0, j, one());
        }
    }
    set(&mut mult, 1, 1, 0, one()); // g g = 1
    set(&mut mult, 1, 2, 3, one()); // g x = gx
    set(&mut mult, 1, 3, 2, one()); // g gx = x
    set(&mut mult, 2, 1, 3, -one()); // x g = -gx
    mult[2][2] = vec![]; // x x = 0
    set(&mut mult, 2, 3, 0, T::zero());
    mult[2][3] = vec![]; // x gx = -g x x ... = 0
    set(&mut mult, 3, 1, 2, -one()); // gx g = -x
    mult[3][2] = vec![]; // gx x = 0
    mult[3][3] = vec![]; // gx gx = -g x x g = 0
    StructureAlgebra::new(
        vec!["1".into(), "g".into(), "x".into(), "gx".into()],
        mult,
        {
            let mut u = vec![T::zero(); n];
            u[0] = T::one();
            u
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn group_tables_are_valid() {
        for g in [
            groups::cyclic(2),
            groups::cyclic(3),
            groups::cyclic(4),
            groups::s3(),
            groups::d4(),
            groups::q8(),
            groups::q8_times_c2(),
        ] {
            // FiniteGroup::new already validates; double-check inverses
            for i in 0..g.order {
                assert_eq!(g.mul(i, g.inverse[i]), 0);
            }
        }
    }

    #[test]
    fn q8_relations() {
        let g = groups::q8();
        let a = 1;
        let b = 4;
        assert_eq!(g.pow(a, 4), 0);
        assert_eq!(g.mul(b, b), g.pow(a, 2));
        // b a = a^-1 b = a3 b
        assert_eq!(g.mul(b, a), g.mul(g.pow(a, 3), b));
        assert_eq!(g.involution_count(), 1);
    }

    #[test]
    fn involution_counts() {
        assert_eq!(groups::s3().involution_count(), 3);
        assert_eq!(groups::d4().involution_count(), 5);
        assert_eq!(groups::cyclic(4).involution_count(), 1);
    }

    #[test]
    fn root_counts_examples() {
        let s3 = groups::s3();
        let t1 = root_counts(&s3, 1);
        assert!(t1.counts.iter().all(|&c| c == 1));
        let t2 = root_counts(&s3, 2);
        // identity and the three order-2 elements square to e
        assert_eq!(t2.counts[0], 4);
        // the two 3-cycles: each is a square of the other
        assert_eq!(t2.counts[1], 1);
        assert_eq!(t2.counts[2], 1);
        assert_eq!(t2.counts.iter().sum::<usize>(), 6);

        let q8 = groups::q8();
        let t2 = root_counts(&q8, 2);
        assert_eq!(t2.counts[0], 2);
        assert_eq!(t2.counts[2], 6); // a^2 is the square of the six order-4 elements
        assert_eq!(t2.counts.iter().sum::<usize>(), 8);
    }

    #[test]
    fn kac16_passes_axioms_and_matches_group_multiplication() {
        let h = kac16::<Rational>().unwrap();
        assert!(h.verify().pass());
        // the algebra tensor is exactly kG for G = Q8 x C2
        let kg = group_algebra::<Rational>(&groups::q8_times_c2()).unwrap();
        assert_eq!(h.algebra.mult.len(), kg.algebra.mult.len());
        for i in 0..16 {
            for j in 0..16 {
                assert_eq!(h.algebra.mult[i][j], kg.algebra.mult[i][j]);
            }
        }
        // a * b is the basis element labeled ab
        let a = Element::basis(16, 1);
        let b = Element::basis(16, 4);
        let ab = h.algebra.multiply(&a, &b).unwrap();
        assert_eq!(ab, Element::basis(16, 5));
        assert_eq!(h.algebra.basis_labels[5], "ab");
    }

    #[test]
    fn matrix_units_algebra() {
        let m2 = matrix_units::<Rational>(2);
        assert!(m2.verify().pass());
        assert_eq!(m2.center_basis().len(), 1);
        let t = transpose_involution::<Rational>(2);
        assert!(t.matmul(&t).is_identity());
    }

    #[test]
    fn rep_fixtures_are_representations() {
        let rep = s3_standard_rep::<Rational>();
        let g = groups::s3();
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(rep[i].matmul(&rep[j]), rep[g.mul(i, j)]);
            }
        }
        let rep = q8_rep();
        let g = groups::q8();
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(rep[i].matmul(&rep[j]), rep[g.mul(i, j)]);
            }
        }
    }

    #[test]
    fn non_semisimple_fixtures_verify_as_algebras() {
        assert!(dual_numbers::<Rational>().verify().pass());
        assert!(sweedler4::<Rational>().verify().pass());
    }
}
