//! Body-level geometry: the reduced transitions `g~`, the matrix `ν''A`, the
//! maps `ψ`, `θ`, `χ` into and out of the big Grassmannian
//! `G_{k+l}(R^{m+n})`, and the embedding `Λ` of `G_k(R^m) x G_l(R^n)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{Rat, RatFunc};
use crate::atlas::{ChartIndex, ChartLabel, GenKind, GrassSpec};
use crate::error::{Error, Result};
use crate::grassmann::Parity;
use crate::linalg::{Field, Mat};
use crate::supermatrix::{Alg, Entry, SMatrix};
use crate::transitions::TransitionMap;

/// `ν''` entrywise: even `a` to its body, odd `a` to the body of `ν(a)`,
/// `1v` to 1.
pub fn nu_double_prime(a: &SMatrix<Entry>, alg: &Alg) -> Result<Mat<RatFunc>> {
    let mut rows = Vec::with_capacity(a.nrows());
    for i in 0..a.nrows() {
        let mut row = Vec::with_capacity(a.ncols());
        for j in 0..a.ncols() {
            row.push(match a.get(i, j) {
                Entry::NuOne => RatFunc::one(alg.alpha),
                Entry::El(x) => match x.parity() {
                    Parity::Even => x.body(),
                    Parity::Odd => alg.nu(x)?.body(),
                    Parity::Mixed => return Err(Error::MixedParityEntry),
                },
            });
        }
        rows.push(row);
    }
    Ok(Mat::from_rows(rows))
}

/// `g~`: the bodies of the even images of a transition.
pub fn reduced_transition(g: &TransitionMap) -> Vec<RatFunc> {
    g.even.iter().map(|v| v.body()).collect()
}

/// The chart change of `G_k(R^m) x G_l(R^n)` between two standard charts,
/// written in the chart coordinates the labels use. Works on the ordinary
/// `k x m` and `l x n` blocks, independently of the super machinery.
pub fn classical_transition(source: &ChartLabel, target: &ChartLabel) -> Result<Vec<RatFunc>> {
    let space = source.space;
    if !source.index.is_standard(&space) || !target.index.is_standard(&space) {
        return Err(Error::BadIndex("classical chart changes exist only between standard charts".into()));
    }
    let (k, l, m, n) = (space.k, space.l, space.m, space.n);
    let alpha = space.alpha();
    let mut p = Mat::from_fn(k, m, |_, _| RatFunc::zero(alpha));
    let mut q = Mat::from_fn(l, n, |_, _| RatFunc::zero(alpha));
    for (t, &c) in source.index.i.iter().enumerate() {
        p.set(t, c - 1, RatFunc::one(alpha));
    }
    for (t, &c) in source.index.r.iter().enumerate() {
        q.set(t, c - 1, RatFunc::one(alpha));
    }
    for slot in source.slots.iter().filter(|s| s.gen.kind == GenKind::X) {
        let v = RatFunc::var(alpha, slot.gen.index);
        if slot.row < k {
            p.set(slot.row, slot.col, v);
        } else {
            q.set(slot.row - k, slot.col - m, v);
        }
    }
    let change = |block: &Mat<RatFunc>, cols: &[usize]| -> Result<Mat<RatFunc>> {
        if block.rows() == 0 {
            return Ok(block.clone());
        }
        let cols: Vec<usize> = cols.iter().map(|c| c - 1).collect();
        let inv = block.select_columns(&cols).inverse().ok_or(Error::SingularMinor)?;
        Ok(inv.mul(block))
    };
    let p2 = change(&p, &target.index.i)?;
    let q2 = change(&q, &target.index.r)?;
    let mut out = vec![RatFunc::zero(alpha); alpha];
    for slot in target.slots.iter().filter(|s| s.gen.kind == GenKind::X) {
        out[slot.gen.index] =
            if slot.row < k { p2.get(slot.row, slot.col).clone() } else { q2.get(slot.row - k, slot.col - m).clone() };
    }
    Ok(out)
}

/// A chart of the big Grassmannian `G_{k+l}(R^{m+n})`: `k+l` ascending
/// 1-based columns out of `m+n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BigChartIndex {
    pub cols: Vec<usize>,
}

impl BigChartIndex {
    pub fn new(space: &GrassSpec, cols: Vec<usize>) -> Result<BigChartIndex> {
        let ok = cols.len() == space.rank()
            && cols.windows(2).all(|w| w[0] < w[1])
            && cols.iter().all(|&c| c >= 1 && c <= space.m + space.n);
        if !ok {
            return Err(Error::BadIndex(format!("{cols:?} is not a big chart index")));
        }
        Ok(BigChartIndex { cols })
    }

    /// The big chart sharing the columns of a chart of the ν-Grassmannian.
    pub fn of_chart(space: &GrassSpec, chart: &ChartIndex) -> BigChartIndex {
        BigChartIndex { cols: chart.columns(space).into_iter().map(|c| c + 1).collect() }
    }

    /// Even part `J` (columns up to `m`) and odd part `S` (shifted by `m`).
    pub fn split(&self, space: &GrassSpec) -> (Vec<usize>, Vec<usize>) {
        let j = self.cols.iter().copied().filter(|&c| c <= space.m).collect();
        let s = self.cols.iter().copied().filter(|&c| c > space.m).map(|c| c - space.m).collect();
        (j, s)
    }

    fn zero_based(&self) -> Vec<usize> {
        self.cols.iter().map(|c| c - 1).collect()
    }

    pub fn all(space: &GrassSpec) -> Vec<BigChartIndex> {
        let total = space.m + space.n;
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn go(start: usize, total: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<BigChartIndex>) {
            if cur.len() == size {
                out.push(BigChartIndex { cols: cur.clone() });
                return;
            }
            for c in start..=total {
                cur.push(c);
                go(c + 1, total, size, cur, out);
                cur.pop();
            }
        }
        go(1, total, space.rank(), &mut cur, &mut out);
        out
    }
}

/// `D((M_cols F)^{-1} F)`: the coordinates of the row space of `F` in the
/// chart given by `cols` (0-based).
pub fn chart_coordinates<T: Field>(full: &Mat<T>, cols: &[usize]) -> Result<Mat<T>> {
    let reduced = if full.rows() == 0 {
        full.clone()
    } else {
        let inv = full.select_columns(cols).inverse().ok_or(Error::SingularMinor)?;
        inv.mul(full)
    };
    Ok(reduced.without_columns(cols))
}

/// `{Y}`: reinserts identity columns at the chart's positions.
pub fn complete<T: Field>(y: &Mat<T>, cols: &[usize], one: &T) -> Mat<T> {
    let total = y.cols() + cols.len();
    let zero = one.zero_like();
    let mut free = 0;
    let mut columns: Vec<Vec<T>> = Vec::with_capacity(total);
    for c in 0..total {
        if let Some(t) = cols.iter().position(|&x| x == c) {
            columns.push((0..y.rows()).map(|i| if i == t { one.clone() } else { zero.clone() }).collect());
        } else {
            columns.push((0..y.rows()).map(|i| y.get(i, free).clone()).collect());
            free += 1;
        }
    }
    Mat::from_fn(y.rows(), total, |i, j| columns[j][i].clone())
}

/// `ψ_{I|R,J~}` at a point: chart coordinates of `ν''A(point)` in the big
/// chart `J~`.
pub fn psi_at(nupp: &Mat<RatFunc>, big: &BigChartIndex, point: &[Rat]) -> Result<Mat<Rat>> {
    let value = nupp.try_map(|f| f.eval_at(point))?;
    chart_coordinates(&value, &big.zero_based())
}

/// `ψ` as a matrix of rational functions.
pub fn psi_symbolic(nupp: &Mat<RatFunc>, big: &BigChartIndex) -> Result<Mat<RatFunc>> {
    chart_coordinates(nupp, &big.zero_based())
}

/// `θ_{big1,big2}`: the classical chart change of the big Grassmannian.
pub fn theta<T: Field>(y: &Mat<T>, big1: &BigChartIndex, big2: &BigChartIndex, one: &T) -> Result<Mat<T>> {
    let full = complete(y, &big1.zero_based(), one);
    chart_coordinates(&full, &big2.zero_based())
}

/// `χ_{J~,I|R}`: reads chart coordinates back from a big-chart matrix.
pub fn chi<T: Field>(y: &Mat<T>, big: &BigChartIndex, label: &ChartLabel, one: &T) -> Result<Vec<T>> {
    let space = label.space;
    let full = complete(y, &big.zero_based(), one);
    let own = label.index.columns(&space);
    let z = chart_coordinates(&full, &own)?;
    let free: Vec<usize> = (0..space.m + space.n).filter(|c| !own.contains(c)).collect();
    let mut out = vec![one.zero_like(); space.alpha()];
    for slot in label.slots.iter().filter(|s| s.gen.kind == GenKind::X) {
        let col = free.iter().position(|&c| c == slot.col).expect("slot outside the minor");
        out[slot.gen.index] = z.get(slot.row, col).clone();
    }
    Ok(out)
}

/// `Λ(P, Q) = π1(P) + π2(Q)`: block-diagonal completion in `R^{m+n}`.
pub fn lambda_embed(p: &Mat<Rat>, q: &Mat<Rat>) -> Mat<Rat> {
    let (k, m) = (p.rows(), p.cols());
    let (l, n) = (q.rows(), q.cols());
    Mat::from_fn(k + l, m + n, |i, j| match (i < k, j < m) {
        (true, true) => p.get(i, j).clone(),
        (false, false) => q.get(i - k, j - m).clone(),
        _ => Rat::zero(),
    })
}

/// True if the row space of `w` splits as a `k`-plane in `R^m` plus an
/// `l`-plane in `R^n`, i.e. lies in the image of `Λ`.
pub fn in_lambda_image(w: &Mat<Rat>, space: &GrassSpec) -> bool {
    let even: Vec<usize> = (0..space.m).collect();
    let odd: Vec<usize> = (space.m..space.m + space.n).collect();
    w.select_columns(&even).rank() == space.k && w.select_columns(&odd).rank() == space.l
}

/// Same row space.
pub fn same_row_space(a: &Mat<Rat>, b: &Mat<Rat>) -> bool {
    let r = a.rank();
    r == b.rank() && a.stack(b).rank() == r
}

/// Seeded rational points: numerators in `-10..=10`, denominators in `1..=7`.
pub fn sample_points(dim: usize, count: usize, seed: u64) -> Vec<Vec<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..dim).map(|_| Rat::new(rng.gen_range(-10..=10), rng.gen_range(1..=7))).collect())
        .collect()
}

/// Outcome of evaluating the Lemma 2.4 square at one point.
pub enum PointOutcome {
    Pass,
    Skip,
    Fail { lhs: Mat<Rat>, rhs: Mat<Rat> },
}

/// `θ_{bigA,bigB}(ψ_A(pt)) = ψ_B(g~(pt))` at one point of chart A.
pub fn diagram_at(
    nupp_a: &Mat<RatFunc>,
    nupp_b: &Mat<RatFunc>,
    big_a: &BigChartIndex,
    big_b: &BigChartIndex,
    g_tilde: &[RatFunc],
    point: &[Rat],
) -> Result<PointOutcome> {
    let skip = |e: &Error| matches!(e, Error::SingularMinor | Error::PoleAtPoint);
    let lhs = match psi_at(nupp_a, big_a, point).and_then(|y| theta(&y, big_a, big_b, &Rat::one())) {
        Ok(v) => v,
        Err(e) if skip(&e) => return Ok(PointOutcome::Skip),
        Err(e) => return Err(e),
    };
    let image: Vec<Rat> = match g_tilde.iter().map(|f| f.eval_at(point)).collect::<Result<_>>() {
        Ok(v) => v,
        Err(e) if skip(&e) => return Ok(PointOutcome::Skip),
        Err(e) => return Err(e),
    };
    let rhs = match psi_at(nupp_b, big_b, &image) {
        Ok(v) => v,
        Err(e) if skip(&e) => return Ok(PointOutcome::Skip),
        Err(e) => return Err(e),
    };
    Ok(if lhs == rhs { PointOutcome::Pass } else { PointOutcome::Fail { lhs, rhs } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::build_label;
    use crate::grassmann::NuStructure;
    use crate::transitions::compute_transition;

    fn small() -> GrassSpec {
        GrassSpec::new(1, 1, 2, 2).unwrap()
    }

    fn idx(s: &str) -> ChartIndex {
        s.parse().unwrap()
    }

    fn q(a: i64, b: i64) -> Rat {
        Rat::new(a, b)
    }

    #[test]
    fn nu_double_prime_of_a_standard_label() {
        let nu = NuStructure::identity(2);
        let alg = Alg::new(2, &nu);
        let a = build_label(&small(), &idx("1|1")).unwrap().concrete(&alg).unwrap();
        let m = nu_double_prime(&a, &alg).unwrap();
        // label [[1, x1 | 0, e2], [0, e1 | 1, x2]]; b(e1) = 1, b(e2) = 0
        let text: Vec<String> = (0..2).flat_map(|i| (0..4).map(move |j| (i, j))).map(|(i, j)| m.get(i, j).to_string()).collect();
        assert_eq!(text, ["1", "x1", "0", "0", "0", "1", "1", "x2"]);
    }

    #[test]
    fn psi_at_a_point() {
        let sp = small();
        let nu = NuStructure::identity(2);
        let alg = Alg::new(2, &nu);
        let a = build_label(&sp, &idx("1|1")).unwrap().concrete(&alg).unwrap();
        let m = nu_double_prime(&a, &alg).unwrap();
        let big = BigChartIndex::new(&sp, vec![2, 4]).unwrap();
        let y = psi_at(&m, &big, &[q(2, 1), q(3, 1)]).unwrap();
        // rows: (1, x1, 0, 0) / (0, 1, 1, x2) at (2, 3), big columns 2 and 4
        assert_eq!(y.get(0, 0), &q(1, 2));
        assert_eq!(y.get(1, 1), &q(1, 3));
        let own = BigChartIndex::of_chart(&sp, &idx("1|1"));
        assert_eq!(psi_at(&m, &own, &[q(2, 1), q(3, 1)]).unwrap(), m.try_map(|f| f.eval_at(&[q(2, 1), q(3, 1)])).unwrap().without_columns(&[0, 2]));
        let singular = psi_at(&m, &big, &[q(0, 1), q(3, 1)]);
        assert!(matches!(singular, Err(Error::SingularMinor)));
    }

    #[test]
    fn theta_cocycle() {
        let sp = small();
        let one = Rat::one();
        let y = Mat::from_rows(vec![vec![q(2, 1), q(1, 3)], vec![q(-1, 2), q(5, 1)]]);
        let b1 = BigChartIndex::new(&sp, vec![1, 3]).unwrap();
        let b2 = BigChartIndex::new(&sp, vec![2, 4]).unwrap();
        let b3 = BigChartIndex::new(&sp, vec![1, 4]).unwrap();
        assert_eq!(theta(&y, &b1, &b1, &one).unwrap(), y);
        let back = theta(&theta(&y, &b1, &b2, &one).unwrap(), &b2, &b1, &one).unwrap();
        assert_eq!(back, y);
        let around = theta(&theta(&theta(&y, &b1, &b2, &one).unwrap(), &b2, &b3, &one).unwrap(), &b3, &b1, &one).unwrap();
        assert_eq!(around, y);
    }

    #[test]
    fn one_dimensional_theta() {
        let sp = GrassSpec::new(1, 0, 2, 1).unwrap();
        let y = Mat::from_rows(vec![vec![q(3, 1), q(0, 1)]]);
        let b1 = BigChartIndex::new(&sp, vec![1]).unwrap();
        let b2 = BigChartIndex::new(&sp, vec![2]).unwrap();
        assert_eq!(theta(&y, &b1, &b2, &Rat::one()).unwrap().get(0, 0), &q(1, 3));
    }

    #[test]
    fn gtilde_matches_classical_on_standard_pairs() {
        let sp = small();
        let nu = NuStructure::identity(2);
        let a = idx("1|1");
        let b = idx("2|2");
        let g = compute_transition(&sp, &a, &b, &nu).unwrap();
        let oracle = classical_transition(&build_label(&sp, &a).unwrap(), &build_label(&sp, &b).unwrap()).unwrap();
        assert_eq!(reduced_transition(&g), oracle);
        assert_eq!(oracle[0].to_string(), "1/x1");
    }

    #[test]
    fn chi_inverts_psi() {
        let sp = small();
        let nu = NuStructure::identity(2);
        let alg = Alg::new(2, &nu);
        let label = build_label(&sp, &idx("1|1")).unwrap();
        let m = nu_double_prime(&label.concrete(&alg).unwrap(), &alg).unwrap();
        let big = BigChartIndex::new(&sp, vec![2, 4]).unwrap();
        let y = psi_symbolic(&m, &big).unwrap();
        let back = chi(&y, &big, &label, &RatFunc::one(2)).unwrap();
        assert_eq!(back, vec![RatFunc::var(2, 0), RatFunc::var(2, 1)]);
        let origin = [Rat::zero(), Rat::zero()];
        let own = BigChartIndex::of_chart(&sp, &label.index);
        assert_eq!(chi(&psi_at(&m, &own, &origin).unwrap(), &own, &label, &Rat::one()).unwrap(), origin.to_vec());
    }

    #[test]
    fn lambda_is_injective_on_examples() {
        let p1 = Mat::from_rows(vec![vec![q(1, 1), q(2, 1)]]);
        let p2 = Mat::from_rows(vec![vec![q(1, 1), q(3, 1)]]);
        let qq = Mat::from_rows(vec![vec![q(0, 1), q(1, 1)]]);
        let w1 = lambda_embed(&p1, &qq);
        let w2 = lambda_embed(&p2, &qq);
        assert!(in_lambda_image(&w1, &small()));
        assert!(!same_row_space(&w1, &w2));
        let scaled = lambda_embed(&Mat::from_rows(vec![vec![q(2, 1), q(4, 1)]]), &qq);
        assert!(same_row_space(&w1, &scaled));
    }

    #[test]
    fn samples_are_reproducible() {
        assert_eq!(sample_points(3, 5, 42), sample_points(3, 5, 42));
        assert_ne!(sample_points(3, 5, 42), sample_points(3, 5, 43));
    }
}
