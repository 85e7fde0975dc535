//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's composition or homotopy code.

#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use gcenter_core::serial::{is_null_homotopic, AMatrix, ChainMap, Complex, SerialAlgebra};
use gcenter_core::stable::{basis_range, stable_compose, syzygy, StableMorphism};
use gcenter_core::{ExactMatrix, FieldTag, Fp, Scalar, Subspace};

// ---------------------------------------------------------------------------
// mod k[x]/(x^n) as matrices over k.

/// Module map `A_l -> A_r`, `1 -> x^{r-s}`, in the monomial bases.
pub fn module_map(field: FieldTag, l: usize, r: usize, s: usize) -> ExactMatrix<Fp> {
    let mut m = ExactMatrix::zeros(field, r, l);
    for i in 0..s.min(l) {
        m.set(r - s + i, i, Fp::one(field));
    }
    m
}

/// All module maps `A_l -> A_r` as matrices, by brute force: every `r x l`
/// matrix over `F_p` commuting with the nilpotent shifts. Used only for
/// tiny sizes to confirm the Hom basis.
pub fn module_maps_by_commutation(field: FieldTag, l: usize, r: usize) -> Subspace<Fp> {
    // M J_l = J_r M as a linear system on the entries of M.
    let shift = |n: usize| {
        let mut j = ExactMatrix::<Fp>::zeros(field, n, n);
        for i in 0..n.saturating_sub(1) {
            j.set(i + 1, i, Fp::one(field));
        }
        j
    };
    let (jl, jr) = (shift(l), shift(r));
    let mut rows = Vec::new();
    for a in 0..r {
        for b in 0..l {
            // (M J_l)_{ab} - (J_r M)_{ab}
            let mut row = vec![Fp::zero(field); r * l];
            for k in 0..l {
                let c = jl.get(k, b);
                if !c.is_zero() {
                    row[a * l + k] = row[a * l + k].add(c);
                }
            }
            for k in 0..r {
                let c = jr.get(a, k);
                if !c.is_zero() {
                    row[k * l + b] = row[k * l + b].sub(c);
                }
            }
            rows.push(row);
        }
    }
    let system = ExactMatrix::from_rows(field, r * l, rows).unwrap();
    Subspace::span(field, r * l, system.kernel_basis())
}

/// Module maps `A_l -> A_r` that factor through the projective `A_n`.
pub fn projective_part(field: FieldTag, n: usize, l: usize, r: usize) -> Subspace<Fp> {
    let mut vectors = Vec::new();
    for s in 1..=l.min(n) {
        for s2 in 1..=n.min(r) {
            let through = module_map(field, n, r, s2).mul(&module_map(field, l, n, s)).unwrap();
            vectors.push(through.entries().to_vec());
        }
    }
    Subspace::span(field, l * r, vectors)
}

pub fn stably_equal(field: FieldTag, n: usize, a: &ExactMatrix<Fp>, b: &ExactMatrix<Fp>) -> bool {
    projective_part(field, n, a.cols(), a.rows()).contains(a.sub(b).unwrap().entries())
}

/// Syzygy of a module map: lift `f` to `A_n -> A_n` (multiplication by a
/// lift of `f(1)`) and restrict to the kernels `x^l A_n ≅ A_{n-l}` and
/// `x^r A_n ≅ A_{n-r}` of the projective covers.
pub fn matrix_syzygy(field: FieldTag, n: usize, f: &ExactMatrix<Fp>) -> ExactMatrix<Fp> {
    let (l, r) = (f.cols(), f.rows());
    let mut out = ExactMatrix::zeros(field, n - r, n - l);
    for i in 0..n - l {
        for k in 0..r {
            let c = f.get(k, 0);
            let deg = l + i + k;
            if deg < n && !c.is_zero() {
                assert!(deg >= r, "the lift leaves the kernel");
                out.set(deg - r, i, *c);
            }
        }
    }
    out
}

pub fn as_matrix(field: FieldTag, f: &StableMorphism<Fp>) -> ExactMatrix<Fp> {
    let mut m = ExactMatrix::zeros(field, f.target, f.source);
    for (s, c) in f.terms() {
        m = m.add(&module_map(field, f.source, f.target, s).scale(c)).unwrap();
    }
    m
}

#[derive(Debug, Default)]
pub struct MatrixOracleReport {
    pub checks: usize,
    pub mismatches: Vec<String>,
}

impl MatrixOracleReport {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.mismatches.push(what());
        }
    }
}

/// Hom dimensions, `stable_compose` on every composable pair of basis
/// morphisms and `syzygy` on every basis morphism, all against the matrix
/// model, for `2 <= n <= max_n`.
pub fn stable_oracle(field: FieldTag, max_n: usize) -> MatrixOracleReport {
    let mut report = MatrixOracleReport::default();
    for n in 2..=max_n {
        for l in 1..n {
            for r in 1..n {
                let all = module_maps_by_commutation(field, l, r).dim();
                let proj = projective_part(field, n, l, r).dim();
                report.record(all == l.min(r) && basis_range(n, l, r).count() == all - proj, || {
                    format!("n={n}: dim Hom(A_{l}, A_{r}) = {all} - {proj}")
                });
                for s in basis_range(n, l, r) {
                    let f = StableMorphism::<Fp>::basis(field, n, l, r, s);
                    let fm = as_matrix(field, &f);
                    let omega = as_matrix(field, &syzygy(field, &f));
                    report.record(stably_equal(field, n, &omega, &matrix_syzygy(field, n, &fm)), || {
                        format!("n={n}: syzygy of f^{{{l},{r}}}_{s}")
                    });
                    for u in 1..n {
                        for s2 in basis_range(n, r, u) {
                            let g = StableMorphism::<Fp>::basis(field, n, r, u, s2);
                            let h = stable_compose(field, &g, &f).unwrap();
                            let product = as_matrix(field, &g).mul(&fm).unwrap();
                            report.record(stably_equal(field, n, &as_matrix(field, &h), &product), || {
                                format!("n={n}: f^{{{r},{u}}}_{s2} after f^{{{l},{r}}}_{s}")
                            });
                        }
                    }
                }
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Complexes over F_2[x]/(x^2) with hand-rolled arithmetic.

/// `a + b x` stored as bits `a | b << 1`.
pub type Dual = u8;

pub fn dmul(p: Dual, q: Dual) -> Dual {
    let (a, b) = (p & 1, p >> 1);
    let (c, d) = (q & 1, q >> 1);
    (a & c) | (((a & d) ^ (b & c)) << 1)
}

#[derive(Clone, Debug)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Dual>,
}

impl Mat {
    fn zeros(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    fn mul(&self, o: &Mat) -> Mat {
        let mut out = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = 0;
                for k in 0..self.cols {
                    acc ^= dmul(self.data[i * self.cols + k], o.data[k * o.cols + j]);
                }
                out.data[i * o.cols + j] = acc;
            }
        }
        out
    }

    fn add(&self, o: &Mat) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a ^ b).collect() }
    }

    fn is_zero(&self) -> bool {
        self.data.iter().all(|&a| a == 0)
    }
}

/// Every matrix of the given shape over `F_2[x]/(x^2)`.
fn all_matrices(rows: usize, cols: usize) -> Vec<Mat> {
    let len = rows * cols;
    (0..1usize << (2 * len))
        .map(|code| Mat { rows, cols, data: (0..len).map(|k| ((code >> (2 * k)) & 3) as Dual).collect() })
        .collect()
}

/// Complex with `X_i` free of rank `ranks[i - lo]`; `diffs[k]` is
/// `d_{lo+k+1} : X_{lo+k+1} -> X_{lo+k}`.
#[derive(Clone, Debug)]
pub struct SmallComplex {
    pub lo: i64,
    pub ranks: Vec<usize>,
    pub diffs: Vec<Mat>,
}

impl SmallComplex {
    pub fn rank(&self, i: i64) -> usize {
        if i < self.lo {
            return 0;
        }
        self.ranks.get((i - self.lo) as usize).copied().unwrap_or(0)
    }

    fn diff(&self, i: i64) -> Mat {
        let k = i - self.lo - 1;
        if k >= 0 && (k as usize) < self.diffs.len() {
            self.diffs[k as usize].clone()
        } else {
            Mat::zeros(self.rank(i - 1), self.rank(i))
        }
    }

    fn hi(&self) -> i64 {
        self.lo + self.ranks.len() as i64 - 1
    }

    pub fn total_dimension(&self) -> usize {
        2 * self.ranks.iter().sum::<usize>()
    }

    fn shifted(&self, lo: i64) -> SmallComplex {
        SmallComplex { lo, ..self.clone() }
    }

    pub fn to_library(&self, alg: SerialAlgebra) -> Complex<Fp> {
        let diffs = self.diffs.iter().map(|m| to_amatrix(alg, m)).collect();
        Complex::new(alg, self.lo, self.ranks.clone(), diffs).expect("d∘d = 0 by construction")
    }
}

fn to_amatrix(alg: SerialAlgebra, m: &Mat) -> AMatrix<Fp> {
    let data = m.data.iter().flat_map(|&a| [Fp::new((a & 1) as i64, 2), Fp::new((a >> 1) as i64, 2)]).collect();
    AMatrix::from_flat(alg, m.rows, m.cols, data)
}

/// Every complex in degrees `0..` of total dimension `<= max_dim` with
/// nonzero end terms.
pub fn small_complexes(max_dim: usize) -> Vec<SmallComplex> {
    let max_rank = max_dim / 2;
    let mut shapes: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<Vec<usize>> = (1..=max_rank).map(|r| vec![r]).collect();
    while let Some(s) = stack.pop() {
        let used: usize = s.iter().sum();
        if *s.last().unwrap() > 0 {
            shapes.push(s.clone());
        }
        for r in 0..=max_rank - used {
            if r == 0 && *s.last().unwrap() == 0 {
                continue;
            }
            let mut t = s.clone();
            t.push(r);
            if t.iter().sum::<usize>() <= max_rank && t.len() <= max_rank + 1 {
                stack.push(t);
            }
        }
    }
    let mut out = Vec::new();
    for ranks in shapes {
        let mut partial: Vec<Vec<Mat>> = vec![Vec::new()];
        for k in 0..ranks.len() - 1 {
            let mut next = Vec::new();
            for p in &partial {
                for d in all_matrices(ranks[k], ranks[k + 1]) {
                    if let Some(prev) = p.last() {
                        if !prev.mul(&d).is_zero() {
                            continue;
                        }
                    }
                    let mut q = p.clone();
                    q.push(d);
                    next.push(q);
                }
            }
            partial = next;
        }
        for diffs in partial {
            out.push(SmallComplex { lo: 0, ranks: ranks.clone(), diffs });
        }
    }
    out
}

type Family = Vec<(i64, Mat)>;

fn family_code(f: &Family) -> Vec<Dual> {
    f.iter().flat_map(|(_, m)| m.data.iter().copied()).collect()
}

/// Every family `(i, X_i -> Y_{i+offset})` over the degrees of `X`.
fn all_families(x: &SmallComplex, y: &SmallComplex, offset: i64) -> Vec<Family> {
    let mut out: Vec<Family> = vec![Vec::new()];
    for i in x.lo..=x.hi() {
        let (r, c) = (y.rank(i + offset), x.rank(i));
        if r == 0 || c == 0 {
            continue;
        }
        let choices = all_matrices(r, c);
        out = out
            .into_iter()
            .flat_map(|f| {
                choices.iter().map(move |m| {
                    let mut g = f.clone();
                    g.push((i, m.clone()));
                    g
                })
            })
            .collect();
    }
    out
}

fn component(f: &Family, i: i64, rows: usize, cols: usize) -> Mat {
    f.iter().find(|(d, _)| *d == i).map(|(_, m)| m.clone()).unwrap_or_else(|| Mat::zeros(rows, cols))
}

fn is_chain_map(x: &SmallComplex, y: &SmallComplex, f: &Family) -> bool {
    (x.lo..=x.hi() + 1).all(|i| {
        let fi = component(f, i, y.rank(i), x.rank(i));
        let fim = component(f, i - 1, y.rank(i - 1), x.rank(i - 1));
        fim.mul(&x.diff(i)).data == y.diff(i).mul(&fi).data
    })
}

/// `d h + h d` laid out like a chain map family.
fn boundary(x: &SmallComplex, y: &SmallComplex, h: &Family) -> Family {
    (x.lo..=x.hi())
        .filter(|&i| y.rank(i) > 0 && x.rank(i) > 0)
        .map(|i| {
            let hi = component(h, i, y.rank(i + 1), x.rank(i));
            let him = component(h, i - 1, y.rank(i), x.rank(i - 1));
            (i, y.diff(i + 1).mul(&hi).add(&him.mul(&x.diff(i))))
        })
        .collect()
}

#[derive(Debug, Default)]
pub struct HomotopyOracleReport {
    pub pairs: usize,
    pub chain_maps: usize,
    pub null_homotopic: usize,
    pub mismatches: Vec<String>,
}

/// Compares `is_null_homotopic` with brute force over all homotopies for
/// every chain map between complexes of total dimension `<= max_dim`
/// (target shifted by -1, 0, 1).
pub fn null_homotopy_oracle(max_dim: usize) -> HomotopyOracleReport {
    let alg = SerialAlgebra::dual_numbers(FieldTag::Prime(2));
    let complexes = small_complexes(max_dim);
    let mut report = HomotopyOracleReport::default();
    for x in &complexes {
        let lx = Arc::new(x.to_library(alg));
        for y0 in &complexes {
            for shift in -1..=1 {
                let y = y0.shifted(shift);
                let ly = Arc::new(y.to_library(alg));
                report.pairs += 1;
                let boundaries: HashSet<Vec<Dual>> =
                    all_families(x, &y, 1).iter().map(|h| family_code(&boundary(x, &y, h))).collect();
                for f in all_families(x, &y, 0) {
                    if !is_chain_map(x, &y, &f) {
                        continue;
                    }
                    report.chain_maps += 1;
                    let brute = boundaries.contains(&family_code(&f));
                    report.null_homotopic += brute as usize;
                    let comps = f.iter().map(|(i, m)| (*i, to_amatrix(alg, m))).collect();
                    let lib = ChainMap::from_components(lx.clone(), ly.clone(), comps).expect("chain map");
                    if is_null_homotopic(&lib).is_some() != brute {
                        report.mismatches.push(format!("{x:?} -> {y:?}: {f:?}"));
                    }
                }
            }
        }
    }
    report
}
