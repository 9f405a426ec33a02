//! The reduced manifold: bodies, the big-chart coordinates and the
//! embedding into a product of Grassmannians.

use nugrass::linalg::Mat;
use nugrass::reduced::{chi, classical_transition, nu_double_prime, psi_symbolic, reduced_transition, BigChartIndex};
use nugrass::verify::{run_reduced_suite, Atlas, Status};
use nugrass::{build_label, compute_transition, Alg, ChartIndex, GrassSpec, NuStructure, RatFunc};

fn x(i: usize) -> RatFunc {
    RatFunc::var(2, i)
}

fn c(n: i64) -> RatFunc {
    RatFunc::constant(2, nugrass::Rat::from_int(n))
}

#[test]
fn nu_double_prime_depends_on_the_pairing() {
    let space = GrassSpec::new(1, 1, 2, 2).unwrap();
    let idx: ChartIndex = "1|1".parse().unwrap();
    let label = build_label(&space, &idx).unwrap();
    // default pairing: body(v(e1)) = 1, body(v(e2)) = 0
    let nu = NuStructure::identity(2);
    let alg = Alg::new(2, &nu);
    let got = nu_double_prime(&label.concrete(&alg).unwrap(), &alg).unwrap();
    let want = Mat::from_rows(vec![vec![c(1), x(0), c(0), c(0)], vec![c(0), c(1), c(1), x(1)]]);
    assert!(got == want);
    // swapped pairing: body(v(e1)) = 0, body(v(e2)) = 1
    let nu = NuStructure::from_permutation(2, &[1, 0]).unwrap();
    let alg = Alg::new(2, &nu);
    let got = nu_double_prime(&label.concrete(&alg).unwrap(), &alg).unwrap();
    let want = Mat::from_rows(vec![vec![c(1), x(0), c(0), c(1)], vec![c(0), c(0), c(1), x(1)]]);
    assert!(got == want);
}

#[test]
fn reduced_maps_are_classical_on_standard_pairs() {
    let space = GrassSpec::new(1, 2, 3, 3).unwrap();
    let nu = NuStructure::identity(5);
    let (a, b): (ChartIndex, ChartIndex) = ("1|1,2".parse().unwrap(), "3|2,3".parse().unwrap());
    let g = compute_transition(&space, &a, &b, &nu).unwrap();
    let classical =
        classical_transition(&build_label(&space, &a).unwrap(), &build_label(&space, &b).unwrap()).unwrap();
    assert_eq!(reduced_transition(&g), classical);
}

#[test]
fn chi_inverts_psi_on_every_invertible_big_chart() {
    let space = GrassSpec::new(1, 2, 3, 3).unwrap();
    let nu = NuStructure::shift(5).unwrap();
    let alg = Alg::new(space.alpha(), &nu);
    let vars: Vec<RatFunc> = (0..4).map(|i| RatFunc::var(4, i)).collect();
    let idx: ChartIndex = "2|1,3".parse().unwrap();
    let label = build_label(&space, &idx).unwrap();
    let nupp = nu_double_prime(&label.concrete(&alg).unwrap(), &alg).unwrap();
    let mut used = 0;
    for big in BigChartIndex::all(&space) {
        let Ok(y) = psi_symbolic(&nupp, &big) else { continue };
        assert_eq!(chi(&y, &big, &label, &RatFunc::one(4)).unwrap(), vars, "{:?}", big.cols);
        used += 1;
    }
    assert!(used >= 1);
}

#[test]
fn shift_pairing_passes_every_standard_check() {
    let space = GrassSpec::new(1, 2, 3, 3).unwrap();
    let atlas = Atlas::build(&space, &NuStructure::shift(5).unwrap()).unwrap();
    let report = run_reduced_suite(&atlas, 100, 42);
    let std = |s: &String| s.parse::<ChartIndex>().unwrap().is_standard(&space);
    let items: Vec<_> = report.items.iter().filter(|i| i.charts.iter().all(std)).collect();
    assert_eq!(items.len(), 72 + 9 + 72 + 9);
    for item in items {
        assert_eq!(item.status, Status::Pass, "{item:?}");
    }
}
